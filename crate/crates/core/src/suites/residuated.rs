//! Residuated posets, the subset connectives on them, and their interaction
//! with the tense operators.

use rand::Rng;

use super::{fixed_prop, poset_text, prop, Case, CaseOutcome, Property, MAX_FAMILY};
use crate::check::CheckReport;
use crate::error::Result;
use crate::gen;
use crate::residuated::{check_adjunction, check_completion, check_dr_laws, check_dt_laws, ResiduatedPoset};
use crate::subset::Subset;

/// Carrier bound for residuated cases.
const MAX_RESIDUATED: usize = 6;

/// Time bound for the operator laws.
const MAX_RESIDUATED_TIMES: usize = 3;

fn done(rp: &ResiduatedPoset, r: CheckReport) -> Result<CaseOutcome> {
    Ok(CaseOutcome::from_report(&r, || poset_text(rp.base())))
}

fn validated(rp: &ResiduatedPoset, r: &mut CheckReport, name: &str) {
    let v = rp.validate();
    r.check(name, v.is_valid(), || {
        v.violation.as_ref().map(|v| rp.describe(v)).unwrap_or_default()
    });
}

fn pool(case: &mut Case, n: usize, k: usize) -> Vec<Subset> {
    (0..k).map(|_| gen::subset(&mut case.rng, n, 3)).collect()
}

pub fn residuated() -> Vec<Property> {
    vec![
        prop("generated structures satisfy the axioms", |case| {
            let rp = gen::residuated(&mut case.rng, MAX_RESIDUATED);
            let mut r = CheckReport::new();
            validated(&rp, &mut r, "axioms");
            done(&rp, r)
        }),
        fixed_prop("three-element chain and Boolean cubes satisfy the axioms", |_| {
            let mut r = CheckReport::new();
            let chain = ResiduatedPoset::godel_chain(3);
            validated(&chain, &mut r, "three-element chain");
            for k in 1..=3 {
                validated(&ResiduatedPoset::boolean_cube(k), &mut r, &format!("cube of dimension {k}"));
            }
            done(&chain, r)
        }),
        prop("changing one table cell breaks the axioms", |case| {
            let rp = gen::residuated(&mut case.rng, MAX_RESIDUATED);
            let n = rp.len();
            let (x, y) = (case.rng.gen_range(0..n), case.rng.gen_range(0..n));
            let shift = case.rng.gen_range(1..n);
            let arrow = case.rng.gen_bool(0.5);
            let bad = if arrow {
                rp.with_arrow(x, y, (rp.arrow(x, y) + shift) % n)
            } else {
                rp.with_times(x, y, (rp.times(x, y) + shift) % n)
            };
            let mut r = CheckReport::new();
            let table = if arrow { "->" } else { "*" };
            r.check("mutation detected", !bad.validate().is_valid(), || {
                let b = rp.base();
                format!("{} {table} {} changed", b.label(x), b.label(y))
            });
            done(&rp, r)
        }),
        prop("bold operations residuate on the completion", |case| {
            let rp = gen::residuated(&mut case.rng, MAX_RESIDUATED);
            let r = check_completion(&rp, case.cfg.enum_cap)?;
            done(&rp, r)
        }),
    ]
}

pub fn adj() -> Vec<Property> {
    vec![
        fixed_prop("(1)-(5) over every subset of the three-element chain", |_| {
            let rp = ResiduatedPoset::godel_chain(3);
            let all: Vec<Subset> = Subset::all_subsets(rp.len()).filter(|s| !s.is_empty()).collect();
            let r = check_adjunction(&rp, &all)?;
            done(&rp, r)
        }),
        prop("(1)-(5) over random subsets", |case| {
            let rp = gen::residuated(&mut case.rng, MAX_RESIDUATED);
            let subsets = pool(case, rp.len(), 5);
            let r = check_adjunction(&rp, &subsets)?;
            done(&rp, r)
        }),
    ]
}

pub fn dr() -> Vec<Property> {
    vec![prop("completion operators against the bold operations", |case| {
        let rp = gen::residuated(&mut case.rng, MAX_RESIDUATED);
        let f = gen::frame_up_to(&mut case.rng, MAX_RESIDUATED_TIMES, false);
        let trajs: Vec<Vec<Subset>> = (0..3)
            .map(|_| gen::closed_trajectory(&mut case.rng, rp.base(), f.len()))
            .collect();
        let r = check_dr_laws(&rp, &f, &trajs)?;
        done(&rp, r)
    })]
}

pub fn dt() -> Vec<Property> {
    vec![prop("tense operators against the subset connectives", |case| {
        let rp = gen::residuated(&mut case.rng, MAX_RESIDUATED);
        let f = gen::frame_up_to(&mut case.rng, MAX_RESIDUATED_TIMES, false);
        let fams = gen::families(&mut case.rng, rp.len(), f.len(), MAX_FAMILY, 3);
        let r = check_dt_laws(&rp, &f, &fams)?;
        done(&rp, r)
    })]
}
