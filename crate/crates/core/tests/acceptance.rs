//! End-to-end acceptance run: one PASS/FAIL line per criterion, then a single
//! assertion over all of them.

use std::process::Command;
use std::time::{Duration, Instant};

use poset_tense::connectives::{imp, odot};
use poset_tense::display;
use poset_tense::dsl;
use poset_tense::fixtures::{figure_one, EXAMPLE_ONE_TEXT};
use poset_tense::oracle::{self, to_set};
use poset_tense::suites::{run_suites, PropertyResult, SuiteConfig, SuiteReport};
use poset_tense::tense::{apply_tense, compose};
use poset_tense::TenseOp;

const SEED: u64 = 7;

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn run(names: &[&str], cases: usize) -> (SuiteReport, Duration) {
    let cfg = SuiteConfig {
        seed: SEED,
        cases,
        ..SuiteConfig::default()
    };
    let start = Instant::now();
    let report = run_suites(names, &cfg).expect("known suites");
    (report, start.elapsed())
}

fn summary(r: &SuiteReport, took: Duration) -> String {
    let mut s = format!(
        "{} properties, {} failed, {} checks in {:.2}s",
        r.properties().count(),
        r.failed_properties(),
        r.checks(),
        took.as_secs_f64()
    );
    if let Some(p) = r.properties().find(|p| p.failed > 0) {
        let f = p.first_failure.as_ref().expect("failed property keeps its first failure");
        s.push_str(&format!("; first failure in `{}` case {}: {}", p.name, f.case, f.detail));
    }
    s
}

fn suite_outcome(names: &[&str], cases: usize, budget: Duration) -> Outcome {
    let (r, took) = run(names, cases);
    outcome(r.passed() && took < budget, summary(&r, took))
}

fn find<'a>(r: &'a SuiteReport, suite: &str, name: &str) -> &'a PropertyResult {
    r.property(suite, name)
        .unwrap_or_else(|| panic!("property `{name}` in suite `{suite}`"))
}

fn example_table() -> Outcome {
    let start = Instant::now();
    let inst = dsl::parse(EXAMPLE_ONE_TEXT).expect("example file parses");
    let p = inst.poset("A").expect("poset A");
    let f = inst.frame("T").expect("frame T");
    let fam = |name: &str| inst.resolve_family(name).expect("declared prop").1;
    let cells: [(&str, Option<TenseOp>, TenseOp, &str, &str); 10] = [
        ("G(p)", None, TenseOp::G, "p", "[b, b, e]"),
        ("G(q)", None, TenseOp::G, "q", "[{b,c}, {b,c}, g]"),
        ("H(p)", None, TenseOp::H, "p", "[e, b, b]"),
        ("H(q)", None, TenseOp::H, "q", "[f, f, {b,c}]"),
        ("P(p)", None, TenseOp::P, "p", "[e, 1, 1]"),
        ("P(q)", None, TenseOp::P, "q", "[f, f, 1]"),
        ("P(r)", None, TenseOp::P, "r", "[a, {e,f}, {e,f}]"),
        ("(P*P)(r)", Some(TenseOp::P), TenseOp::P, "r", "[a, 1, 1]"),
        ("F(p)", None, TenseOp::F, "p", "[1, 1, e]"),
        ("F(q)", None, TenseOp::F, "q", "[1, 1, g]"),
    ];
    let mut wrong = Vec::new();
    for (cell, outer, op, name, want) in cells {
        let got = match outer {
            None => apply_tense(op, p, f, &fam(name)),
            Some(x) => compose(x, op, p, f, &fam(name)),
        }
        .expect("serial frame");
        let got = display::trajectory(p, &got);
        if got != want {
            wrong.push(format!("{cell} = {got}, expected {want}"));
        }
    }
    let took = start.elapsed();
    let ok = wrong.is_empty() && took < Duration::from_secs(1);
    let detail = if wrong.is_empty() {
        format!("10 cells equal in {:.1}ms", took.as_secs_f64() * 1e3)
    } else {
        wrong.join("; ")
    };
    outcome(ok, detail)
}

fn non_idempotence() -> Outcome {
    let inst = dsl::parse(EXAMPLE_ONE_TEXT).expect("example file parses");
    let p = inst.poset("A").expect("poset A");
    let f = inst.frame("T").expect("frame T");
    let r = inst.resolve_family("r").expect("prop r").1;
    let once = apply_tense(TenseOp::P, p, f, &r).expect("serial").slice(1);
    let twice = compose(TenseOp::P, TenseOp::P, p, f, &r).expect("serial").slice(1);
    outcome(
        once != twice,
        format!(
            "P(r)(2) = {}, (P*P)(r)(2) = {}",
            display::subset(p, once),
            display::subset(p, twice)
        ),
    )
}

fn synthesis() -> Outcome {
    let (r, took) = run(&["th4", "th5"], 200);
    let exact = find(&r, "th5", "exact relation of frame operators matches brute force and recovers them");
    let ok = r.passed() && exact.passed >= 20;
    outcome(ok, format!("{}; {} exact instances", summary(&r, took), exact.passed))
}

fn connectives() -> Outcome {
    let (r, took) = run(&["propim", "propim2", "pgfh"], 500);
    let p = figure_one();
    let at = |l: &str| p.index_of(l).expect("label");
    let spots = [
        ("e.g", odot(&p, at("e"), at("g")), oracle::odot(&p, at("e"), at("g"))),
        ("f.g", odot(&p, at("f"), at("g")), oracle::odot(&p, at("f"), at("g"))),
        ("e->b", imp(&p, at("e"), at("b")), oracle::imp(&p, at("e"), at("b"))),
    ];
    let agree = spots.iter().all(|(_, got, want)| to_set(*got) == *want);
    let spot = find(&r, "propim", "spot values on the nine-element poset");
    let shown: Vec<String> = spots
        .iter()
        .map(|(name, got, _)| format!("{name} = {}", display::set(&p, *got)))
        .collect();
    outcome(
        r.passed() && agree && spot.failed == 0,
        format!("{}; {}", summary(&r, took), shown.join(", ")),
    )
}

fn residuated() -> Outcome {
    let (r, took) = run(&["residuated", "adj", "dr", "dt"], 300);
    let mutation = find(&r, "residuated", "changing one table cell breaks the axioms");
    let ok = r.passed() && mutation.passed == mutation.cases;
    outcome(ok, format!("{}; {} mutations caught", summary(&r, took), mutation.passed))
}

fn oracle_equivalence() -> Outcome {
    let (r, took) = run(&["oracle"], 300);
    outcome(r.passed() && r.checks() >= 2000, summary(&r, took))
}

fn determinism() -> Outcome {
    let verify = || {
        Command::new(env!("CARGO_BIN_EXE_poset-tense"))
            .args(["verify", "--suite", "all", "--seed", "7", "--cases", "200"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (verify(), verify());
    let same = a.stdout == b.stdout;
    let ok = same && a.status.success() && b.status.success();
    outcome(
        ok,
        format!(
            "{} bytes, identical: {same}, exit codes {:?} and {:?}",
            a.stdout.len(),
            a.status.code(),
            b.status.code()
        ),
    )
}

#[test]
fn acceptance() {
    let minute = Duration::from_secs(60);
    let criteria: Vec<Criterion> = vec![
        ("example table reproduced", Box::new(example_table)),
        ("P is not idempotent on the example", Box::new(non_idempotence)),
        (
            "order and operator laws, 500 cases each",
            Box::new(move || {
                suite_outcome(
                    &[
                        "usefulprop", "minmaxcor", "mlub", "propdual", "xproptense", "prop3", "prop2", "ordrs",
                        "th1", "th2", "chaga", "dynamic",
                    ],
                    500,
                    minute,
                )
            }),
        ),
        (
            "completion connections, 200 cases",
            Box::new(move || suite_outcome(&["connect", "cor_connect", "dm"], 200, minute)),
        ),
        ("relation synthesis, 200 cases", Box::new(synthesis)),
        (
            "extended frame restrictions, 200 cases",
            Box::new(move || suite_outcome(&["othercons"], 200, minute)),
        ),
        ("order-derived connectives, 500 cases", Box::new(connectives)),
        ("residuated structures, 300 cases", Box::new(residuated)),
        ("reference implementations agree", Box::new(oracle_equivalence)),
        ("reports are byte-identical across runs", Box::new(determinism)),
    ];
    let mut failed = Vec::new();
    for (i, (title, check)) in criteria.iter().enumerate() {
        let o = check();
        let mark = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark} {title}: {}", i + 1, o.detail);
        if !o.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
