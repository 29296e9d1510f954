//! Seeded property suites. Each suite is a list of properties; each property
//! runs a fixed number of independently seeded cases and reports pass, skip
//! and fail counts plus the first counterexample as a loadable instance.

mod connective;
mod dm;
mod order;
mod oracle;
mod residuated;
mod synthesis;
mod tense;

use std::fmt::Write;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckReport;
use crate::dsl::{self, Instance};
use crate::error::{Error, Result};
use crate::frame::TimeFrame;
use crate::gen;
use crate::poset::{Poset, DEFAULT_ENUM_CAP};
use crate::tense::{Corrupted, Family, FrameBundle, TenseBundle, TenseOp, DEFAULT_PHI_CAP};

/// Carrier, time and family-size bounds for generated tense cases.
pub const MAX_ELEMENTS: usize = 8;
pub const MAX_TIMES: usize = 4;
pub const MAX_FAMILY: usize = 3;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub enum_cap: usize,
    pub phi_cap: usize,
    /// Replace one operator of every generated bundle by its collapsed version.
    pub corrupt: Option<TenseOp>,
    /// User-supplied cases, run before the generated ones.
    pub inputs: Vec<InputCase>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: 100,
            enum_cap: DEFAULT_ENUM_CAP,
            phi_cap: DEFAULT_PHI_CAP,
            corrupt: None,
            inputs: Vec::new(),
        }
    }
}

/// A poset, a frame and the families declared over them.
#[derive(Debug, Clone)]
pub struct InputCase {
    pub poset: Poset,
    pub frame: TimeFrame,
    pub families: Vec<Family>,
}

impl InputCase {
    /// One case per poset/frame pair that carries props, using its declared
    /// families, or every prop as a singleton family when none are declared.
    /// A file with a single poset and frame and no props gives one case with
    /// no families; the suites then generate them.
    pub fn from_instance(inst: &Instance) -> Vec<InputCase> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for pr in &inst.props {
            let key = (pr.value.poset.clone(), pr.value.frame.clone());
            if !pairs.contains(&key) {
                pairs.push(key);
            }
        }
        if pairs.is_empty() {
            if let (Some(p), Some(f)) = (inst.posets.first(), inst.frames.first()) {
                return vec![InputCase {
                    poset: p.value.clone(),
                    frame: f.value.clone(),
                    families: Vec::new(),
                }];
            }
            return Vec::new();
        }
        let mut out = Vec::new();
        for (pn, fnm) in pairs {
            let (Some(poset), Some(frame)) = (inst.poset(&pn), inst.frame(&fnm)) else {
                continue;
            };
            let owned = |spec: &str| inst.family_owner(spec) == Some((pn.clone(), fnm.clone()));
            let mut families: Vec<Family> = inst
                .all_families()
                .into_iter()
                .filter(|(name, _)| owned(name))
                .map(|(_, b)| b)
                .collect();
            if families.is_empty() {
                families = inst
                    .props
                    .iter()
                    .filter(|pr| pr.value.poset == pn && pr.value.frame == fnm)
                    .map(|pr| Family::singleton(pr.value.values.clone()))
                    .collect();
            }
            out.push(InputCase {
                poset: poset.clone(),
                frame: frame.clone(),
                families,
            });
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseOutcome {
    /// Passed, with the number of law instances evaluated.
    Pass(usize),
    /// Preconditions not met (for example a non-reflexive input frame).
    Skip,
    Fail { detail: String, instance: Option<String> },
}

impl CaseOutcome {
    pub fn fail(detail: impl Into<String>) -> CaseOutcome {
        CaseOutcome::Fail {
            detail: detail.into(),
            instance: None,
        }
    }

    /// Pass with the report's count, or fail with its first violation.
    pub fn from_report(r: &CheckReport, instance: impl FnOnce() -> String) -> CaseOutcome {
        match r.first() {
            None => CaseOutcome::Pass(r.checked),
            Some(v) => CaseOutcome::Fail {
                detail: format!("{}: {}", v.law, v.detail),
                instance: Some(instance()),
            },
        }
    }
}

/// What a property sees for one case.
pub struct Case<'a> {
    pub rng: ChaCha8Rng,
    pub input: Option<&'a InputCase>,
    pub cfg: &'a SuiteConfig,
}

type RunFn = fn(&mut Case) -> Result<CaseOutcome>;

#[derive(Clone, Copy)]
pub(crate) struct Property {
    name: &'static str,
    run: RunFn,
    /// Consumes `--input` cases.
    inputs: bool,
    /// Deterministic; runs exactly once.
    fixed: bool,
}

pub(crate) const fn prop(name: &'static str, run: RunFn) -> Property {
    Property {
        name,
        run,
        inputs: false,
        fixed: false,
    }
}

pub(crate) const fn input_prop(name: &'static str, run: RunFn) -> Property {
    Property {
        name,
        run,
        inputs: true,
        fixed: false,
    }
}

pub(crate) const fn fixed_prop(name: &'static str, run: RunFn) -> Property {
    Property {
        name,
        run,
        inputs: false,
        fixed: true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failed: usize,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub properties: Vec<PropertyResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrupt: Option<String>,
    pub suites: Vec<SuiteResult>,
}

impl SuiteReport {
    pub fn properties(&self) -> impl Iterator<Item = &PropertyResult> {
        self.suites.iter().flat_map(|s| s.properties.iter())
    }

    pub fn passed(&self) -> bool {
        self.properties().all(|p| p.failed == 0)
    }

    pub fn failed_properties(&self) -> usize {
        self.properties().filter(|p| p.failed > 0).count()
    }

    pub fn checks(&self) -> usize {
        self.properties().map(|p| p.checks).sum()
    }

    pub fn property(&self, suite: &str, name: &str) -> Option<&PropertyResult> {
        self.suites
            .iter()
            .filter(|s| s.name == suite)
            .flat_map(|s| s.properties.iter())
            .find(|p| p.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "seed {}, {} cases per property", self.seed, self.cases);
        if let Some(op) = &self.corrupt {
            let _ = write!(out, ", operator {op} corrupted");
        }
        out.push('\n');
        for s in &self.suites {
            let _ = writeln!(out, "[{}]", s.name);
            for p in &s.properties {
                let tag = if p.failed > 0 { "FAIL" } else { "ok  " };
                let _ = write!(
                    out,
                    "  {tag} {}: {} passed, {} skipped",
                    p.name, p.passed, p.skipped
                );
                if p.failed > 0 {
                    let _ = write!(out, ", {} failed", p.failed);
                }
                let _ = writeln!(out, " ({} checks)", p.checks);
                if let Some(f) = &p.first_failure {
                    let _ = writeln!(out, "       case {}: {}", f.case, f.detail);
                    if let Some(inst) = &f.instance {
                        let _ = writeln!(out, "       counterexample:");
                        for line in inst.lines() {
                            let _ = writeln!(out, "         {line}");
                        }
                    }
                }
            }
        }
        let total = self.properties().count();
        let _ = writeln!(
            out,
            "summary: {} properties, {} failed, {} checks",
            total,
            self.failed_properties(),
            self.checks()
        );
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}`; known suites: {list}", list = suite_names().join(", "))]
pub struct UnknownSuite(pub String);

type SuiteDef = (&'static str, fn() -> Vec<Property>);

const SUITES: &[SuiteDef] = &[
    ("usefulprop", order::usefulprop),
    ("minmaxcor", order::minmaxcor),
    ("mlub", order::mlub),
    ("propdual", tense::propdual),
    ("xproptense", tense::xproptense),
    ("prop3", tense::prop3),
    ("prop2", tense::prop2),
    ("ordrs", tense::ordrs),
    ("th1", tense::th1),
    ("th2", tense::th2),
    ("chaga", tense::chaga),
    ("dynamic", tense::dynamic),
    ("connect", dm::connect),
    ("cor_connect", dm::cor_connect),
    ("dm", dm::dm),
    ("th4", synthesis::th4),
    ("th5", synthesis::th5),
    ("othercons", synthesis::othercons),
    ("propim", connective::propim),
    ("propim2", connective::propim2),
    ("pgfh", connective::pgfh),
    ("residuated", residuated::residuated),
    ("adj", residuated::adj),
    ("dr", residuated::dr),
    ("dt", residuated::dt),
    ("oracle", oracle::oracle),
];

/// Every suite name, in the order `all` runs them, followed by `all`.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).chain(["all"]).collect()
}

/// Runs the named suites (`all` expands to every suite) and collects one report.
pub fn run_suites(names: &[&str], cfg: &SuiteConfig) -> std::result::Result<SuiteReport, UnknownSuite> {
    let mut selected: Vec<&SuiteDef> = Vec::new();
    for &n in names {
        if n == "all" {
            selected.extend(SUITES.iter());
            continue;
        }
        let def = SUITES
            .iter()
            .find(|(name, _)| *name == n)
            .ok_or_else(|| UnknownSuite(n.to_string()))?;
        selected.push(def);
    }
    let suites = selected
        .into_iter()
        .map(|(name, props)| SuiteResult {
            name: name.to_string(),
            properties: props().iter().map(|p| run_property(cfg, name, p)).collect(),
        })
        .collect();
    Ok(SuiteReport {
        seed: cfg.seed,
        cases: cfg.cases,
        corrupt: cfg.corrupt.map(|op| op.to_string()),
        suites,
    })
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> std::result::Result<SuiteReport, UnknownSuite> {
    run_suites(&[name], cfg)
}

fn run_property(cfg: &SuiteConfig, suite: &str, prop: &Property) -> PropertyResult {
    let n_inputs = if prop.inputs { cfg.inputs.len() } else { 0 };
    let total = if prop.fixed { 1 } else { n_inputs + cfg.cases };
    let outcomes: Vec<CaseOutcome> = (0..total)
        .into_par_iter()
        .map(|i| {
            let mut case = Case {
                rng: gen::case_rng(cfg.seed, suite, prop.name, i),
                input: (i < n_inputs).then(|| &cfg.inputs[i]),
                cfg,
            };
            match (prop.run)(&mut case) {
                Ok(o) => o,
                Err(Error::Size { .. }) => CaseOutcome::Skip,
                Err(e) => CaseOutcome::fail(format!("error: {e}")),
            }
        })
        .collect();
    let mut r = PropertyResult {
        name: prop.name.to_string(),
        cases: total,
        passed: 0,
        skipped: 0,
        failed: 0,
        checks: 0,
        first_failure: None,
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            CaseOutcome::Pass(n) => {
                r.passed += 1;
                r.checks += n;
            }
            CaseOutcome::Skip => r.skipped += 1,
            CaseOutcome::Fail { detail, instance } => {
                r.failed += 1;
                if r.first_failure.is_none() {
                    r.first_failure = Some(Failure {
                        case: i,
                        detail,
                        instance,
                    });
                }
            }
        }
    }
    r
}

/// A poset, a frame and some families: the common shape of tense cases.
pub(crate) struct Setup {
    pub poset: Poset,
    pub frame: TimeFrame,
    pub families: Vec<Family>,
}

impl Setup {
    /// Takes the input case if there is one, otherwise draws a poset with at
    /// most `max_n` elements, a frame with at most `max_m` points and
    /// `count` families. `None` when a reflexive frame is required and the
    /// input frame is not reflexive.
    pub fn draw(case: &mut Case, max_n: usize, max_m: usize, reflexive: bool, count: usize) -> Option<Setup> {
        if let Some(inp) = case.input {
            if reflexive && !inp.frame.is_reflexive() {
                return None;
            }
            let families = if inp.families.is_empty() {
                gen::families(&mut case.rng, inp.poset.len(), inp.frame.len(), MAX_FAMILY, count)
            } else {
                inp.families.clone()
            };
            return Some(Setup {
                poset: inp.poset.clone(),
                frame: inp.frame.clone(),
                families,
            });
        }
        let poset = gen::poset_up_to(&mut case.rng, max_n);
        let frame = gen::frame_up_to(&mut case.rng, max_m, reflexive);
        let families = gen::families(&mut case.rng, poset.len(), frame.len(), MAX_FAMILY, count);
        Some(Setup { poset, frame, families })
    }

    pub fn instance(&self) -> String {
        instance_text(&self.poset, &self.frame, &self.families)
    }

    pub fn outcome(&self, r: &CheckReport) -> CaseOutcome {
        CaseOutcome::from_report(r, || self.instance())
    }

    /// The frame's bundle, with the configured corruption applied.
    pub fn bundle(&self, cfg: &SuiteConfig) -> Result<Box<dyn TenseBundle>> {
        corrupt(cfg, FrameBundle::new(self.poset.clone(), self.frame.clone())?)
    }
}

pub(crate) fn corrupt<B: TenseBundle + 'static>(cfg: &SuiteConfig, b: B) -> Result<Box<dyn TenseBundle>> {
    Ok(match cfg.corrupt {
        Some(op) => Box::new(Corrupted::collapse(b, op)?),
        None => Box::new(b),
    })
}

pub(crate) fn instance_text(p: &Poset, f: &TimeFrame, families: &[Family]) -> String {
    dsl::serialize(&Instance::from_case(p, f, families))
}

/// Text of an instance holding just a poset.
pub(crate) fn poset_text(p: &Poset) -> String {
    let mut inst = Instance::new();
    inst.add_poset("A", p.clone());
    dsl::serialize(&inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::EXAMPLE_ONE_TEXT;

    #[test]
    fn names_are_unique_and_resolvable() {
        let names = suite_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn every_suite_passes_a_few_cases() {
        let cfg = SuiteConfig {
            seed: 3,
            cases: 4,
            ..SuiteConfig::default()
        };
        let r = run_suite("all", &cfg).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.checks() > 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig {
            seed: 11,
            cases: 6,
            ..SuiteConfig::default()
        };
        let a = run_suites(&["th1", "dynamic", "propim"], &cfg).unwrap();
        let b = run_suites(&["th1", "dynamic", "propim"], &cfg).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn corruption_yields_a_loadable_counterexample() {
        let cfg = SuiteConfig {
            seed: 5,
            cases: 10,
            corrupt: Some(TenseOp::P),
            ..SuiteConfig::default()
        };
        let r = run_suite("dynamic", &cfg).unwrap();
        assert!(!r.passed());
        let f = r.properties().find_map(|p| p.first_failure.clone()).unwrap();
        let inst = dsl::parse(f.instance.as_deref().unwrap()).unwrap();
        assert!(!inst.posets.is_empty());
    }

    #[test]
    fn input_cases_run_first() {
        let inst = dsl::parse(EXAMPLE_ONE_TEXT).unwrap();
        let inputs = InputCase::from_instance(&inst);
        assert_eq!(inputs.len(), 1);
        assert!(!inputs[0].families.is_empty());
        let cfg = SuiteConfig {
            cases: 2,
            inputs,
            ..SuiteConfig::default()
        };
        let r = run_suite("th1", &cfg).unwrap();
        assert!(r.passed());
        assert!(r.properties().all(|p| p.cases == 3));
    }
}
