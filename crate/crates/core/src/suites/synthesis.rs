//! Relations recovered from operators, and the extended time set.

use std::collections::BTreeSet;

use rand::Rng;

use super::{corrupt, input_prop, instance_text, prop, Case, CaseOutcome, Property, Setup, MAX_ELEMENTS, MAX_FAMILY, MAX_TIMES};
use crate::check::CheckReport;
use crate::error::Result;
use crate::frame::TimeFrame;
use crate::gen;
use crate::oracle;
use crate::poset::Poset;
use crate::synthesis::{check_extension, compare_induced, induce_relation, induce_relation_exact, ExtendedFrame};
use crate::tense::{all_families, Family, FrameBundle, MixedBundle, TenseBundle};

/// Sizes with at most nine propositions (511 families).
const EXACT: [(usize, usize); 10] = [
    (2, 1),
    (3, 1),
    (4, 1),
    (5, 1),
    (6, 1),
    (7, 1),
    (8, 1),
    (2, 2),
    (3, 2),
    (2, 3),
];

/// Family-count cap for the exhaustive properties.
const EXACT_CAP: usize = 511;

fn random_frames(case: &mut Case, m: usize, reflexive: bool) -> [TimeFrame; 4] {
    std::array::from_fn(|_| gen::frame(&mut case.rng, m, reflexive))
}

fn mixed_case(case: &mut Case, reflexive: bool) -> Result<(Poset, [TimeFrame; 4], Vec<Family>)> {
    let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
    let m = case.rng.gen_range(1..=MAX_TIMES);
    let frames = random_frames(case, m, reflexive);
    let fams = gen::families(&mut case.rng, p.len(), m, MAX_FAMILY, 4);
    Ok((p, frames, fams))
}

fn pairs(f: &TimeFrame) -> BTreeSet<(usize, usize)> {
    f.pairs().into_iter().collect()
}

/// The exact relation of a bundle against the brute-force one.
fn exact_matches_oracle(
    bundle: &dyn TenseBundle,
    frames: &[TimeFrame; 4],
    r: &mut CheckReport,
) -> Result<TimeFrame> {
    let p = bundle.poset();
    let exact = induce_relation_exact(bundle, EXACT_CAP)?;
    let brute = oracle::exact_relation(p, bundle.time_len(), |op, fam| {
        oracle::tense(op, p, &frames[op.index()], fam.props())
    });
    let got = pairs(&exact);
    r.check("exact relation matches brute force", got == brute, || {
        format!("optimized {got:?}, brute force {brute:?}")
    });
    Ok(exact)
}

pub fn th4() -> Vec<Property> {
    vec![
        prop("induced operators are bounded by the given ones", |case| {
            let (p, frames, fams) = mixed_case(case, false)?;
            let b = corrupt(case.cfg, MixedBundle::new(p.clone(), frames.clone())?)?;
            let rel = induce_relation(&*b, &fams)?;
            if !rel.is_serial() {
                return Ok(CaseOutcome::Skip);
            }
            let r = compare_induced(&*b, &rel, &fams, false)?;
            Ok(CaseOutcome::from_report(&r, || instance_text(&p, &frames[0], &fams)))
        }),
        prop("(T3) operators induce a reflexive relation with the same bounds", |case| {
            let (p, frames, fams) = mixed_case(case, true)?;
            let b = corrupt(case.cfg, MixedBundle::new(p.clone(), frames.clone())?)?;
            let rel = induce_relation(&*b, &fams)?;
            let mut r = CheckReport::new();
            r.check("induced relation reflexive", rel.is_reflexive(), || format!("{:?}", rel.pairs()));
            if rel.is_serial() {
                r.merge(compare_induced(&*b, &rel, &fams, false)?);
            }
            Ok(CaseOutcome::from_report(&r, || instance_text(&p, &frames[0], &fams)))
        }),
        prop("exact relation of mixed operators matches brute force", |case| {
            let (n, m) = EXACT[case.rng.gen_range(0..EXACT.len())];
            let p = gen::bounded_poset(&mut case.rng, n);
            let reflexive = case.rng.gen_bool(0.3);
            let frames = random_frames(case, m, reflexive);
            let b = MixedBundle::new(p.clone(), frames.clone())?;
            let mut r = CheckReport::new();
            let exact = exact_matches_oracle(&b, &frames, &mut r)?;
            if exact.is_serial() {
                let all = all_families(n, m, EXACT_CAP)?;
                r.merge(compare_induced(&b, &exact, &all, false)?);
            }
            Ok(CaseOutcome::from_report(&r, || instance_text(&p, &frames[0], &[])))
        }),
    ]
}

pub fn th5() -> Vec<Property> {
    vec![
        input_prop("frame operators: R within R* and the induced operators coincide", |case| {
            let Some(s) = Setup::draw(case, MAX_ELEMENTS, MAX_TIMES, false, 4) else {
                return Ok(CaseOutcome::Skip);
            };
            let b = s.bundle(case.cfg)?;
            let rel = induce_relation(&*b, &s.families)?;
            let mut r = CheckReport::new();
            r.check("R within R*", s.frame.is_subrelation_of(&rel), || {
                format!("R* = {:?}", rel.pairs())
            });
            r.merge(compare_induced(&*b, &rel, &s.families, true)?);
            Ok(s.outcome(&r))
        }),
        prop("exact relation of frame operators matches brute force and recovers them", |case| {
            let (n, m) = EXACT[case.rng.gen_range(0..EXACT.len())];
            let p = gen::bounded_poset(&mut case.rng, n);
            let f = gen::frame(&mut case.rng, m, false);
            let b = FrameBundle::new(p.clone(), f.clone())?;
            let frames = [f.clone(), f.clone(), f.clone(), f.clone()];
            let mut r = CheckReport::new();
            let exact = exact_matches_oracle(&b, &frames, &mut r)?;
            r.check("R within exact R*", f.is_subrelation_of(&exact), || format!("{:?}", exact.pairs()));
            let all = all_families(n, m, EXACT_CAP)?;
            r.merge(compare_induced(&b, &exact, &all, true)?);
            Ok(CaseOutcome::from_report(&r, || instance_text(&p, &f, &[])))
        }),
    ]
}

pub fn othercons() -> Vec<Property> {
    vec![
        input_prop("the extended frame restricts to the given operators", |case| {
            let Some(s) = Setup::draw(case, MAX_ELEMENTS, MAX_TIMES, false, 4) else {
                return Ok(CaseOutcome::Skip);
            };
            let b = s.bundle(case.cfg)?;
            let rel = induce_relation(&*b, &s.families)?;
            let ext = ExtendedFrame::new(&rel)?;
            let r = check_extension(&*b, &ext, &s.families)?;
            Ok(s.outcome(&r))
        }),
        prop("the extended frame of the exact relation, over every family", |case| {
            let (n, m) = EXACT[case.rng.gen_range(0..EXACT.len())];
            let p = gen::bounded_poset(&mut case.rng, n);
            let f = gen::frame(&mut case.rng, m, false);
            let b = corrupt(case.cfg, FrameBundle::new(p.clone(), f.clone())?)?;
            let all = all_families(p.len(), m, EXACT_CAP)?;
            let rel = induce_relation(&*b, &all)?;
            let ext = ExtendedFrame::new(&rel)?;
            let r = check_extension(&*b, &ext, &all)?;
            Ok(CaseOutcome::from_report(&r, || instance_text(&p, &f, &[])))
        }),
    ]
}
