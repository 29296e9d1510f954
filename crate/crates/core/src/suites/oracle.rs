//! Optimized operations against slow reference implementations.

use rand::Rng;

use super::{instance_text, poset_text, prop, CaseOutcome, Property, MAX_FAMILY};
use crate::check::CheckReport;
use crate::connectives::{imp, odot, set_imp, set_odot};
use crate::display;
use crate::dm;
use crate::gen;
use crate::oracle::{self, from_set, to_set, Set};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::{apply_tense, compose, TenseOp, Trajectory};

/// Carrier bound keeping `φ` of the reference compositions small.
const MAX_ORACLE_ELEMENTS: usize = 6;
const MAX_ORACLE_TIMES: usize = 3;

fn sets(s: &[Subset]) -> Vec<Set> {
    s.iter().map(|&x| to_set(x)).collect()
}

fn agree(r: &mut CheckReport, p: &Poset, law: &str, got: Subset, want: &Set) {
    r.check(law, to_set(got) == *want, || {
        format!("optimized {}, reference {}", display::set(p, got), display::set(p, from_set(want)))
    });
}

pub fn oracle() -> Vec<Property> {
    vec![
        prop("tense operators and their compositions", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ORACLE_ELEMENTS);
            let f = gen::frame_up_to(&mut case.rng, MAX_ORACLE_TIMES, false);
            let b = gen::family(&mut case.rng, p.len(), f.len(), MAX_FAMILY);
            let mut r = CheckReport::new();
            for op in TenseOp::ALL {
                let got = apply_tense(op, &p, &f, &b)?;
                let want = oracle::tense(op, &p, &f, b.props());
                r.check(&format!("{op}(B)"), sets(got.slices()) == want, || display::trajectory(&p, &got));
                for inner in TenseOp::ALL {
                    let got = compose(op, inner, &p, &f, &b)?;
                    let want = oracle::compose(op, inner, &p, &f, b.props());
                    r.check(&format!("{op}{inner}(B)"), sets(got.slices()) == want, || {
                        display::trajectory(&p, &got)
                    });
                }
            }
            Ok(CaseOutcome::from_report(&r, || instance_text(&p, &f, std::slice::from_ref(&b))))
        }),
        prop("selector families", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ORACLE_ELEMENTS);
            let m = case.rng.gen_range(1..=MAX_ORACLE_TIMES);
            let t = gen::trajectory(&mut case.rng, p.len(), m, 3);
            let got = t.materialize(case.cfg.phi_cap)?;
            let mut want = oracle::phi(&sets(t.slices()));
            want.sort();
            let mut r = CheckReport::new();
            r.check("phi(B)", got.props() == want.as_slice(), || display::trajectory(&p, &t));
            let back = Trajectory::new(got.slices())?;
            r.check("slices of phi(B) are B", back == t, || display::trajectory(&p, &t));
            Ok(CaseOutcome::from_report(&r, || poset_text(&p)))
        }),
        prop("cones and extremal sets", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ORACLE_ELEMENTS + 2);
            let mut r = CheckReport::new();
            for _ in 0..4 {
                let x = gen::any_subset(&mut case.rng, p.len());
                let xs = to_set(x);
                agree(&mut r, &p, "L(X)", p.lower_cone(x), &oracle::lower(&p, &xs));
                agree(&mut r, &p, "U(X)", p.upper_cone(x), &oracle::upper(&p, &xs));
                agree(&mut r, &p, "Max X", p.maximals(x), &oracle::max(&p, &xs));
                agree(&mut r, &p, "Min X", p.minimals(x), &oracle::min(&p, &xs));
            }
            Ok(CaseOutcome::from_report(&r, || poset_text(&p)))
        }),
        prop("connectives on elements and subsets", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ORACLE_ELEMENTS + 2);
            let n = p.len();
            let mut r = CheckReport::new();
            for _ in 0..3 {
                let (x, y) = (case.rng.gen_range(0..n), case.rng.gen_range(0..n));
                agree(&mut r, &p, "x.y", odot(&p, x, y), &oracle::odot(&p, x, y));
                agree(&mut r, &p, "x->y", imp(&p, x, y), &oracle::imp(&p, x, y));
                let b = gen::subset(&mut case.rng, n, 3);
                let c = gen::subset(&mut case.rng, n, 3);
                let (bs, cs) = (to_set(b), to_set(c));
                agree(&mut r, &p, "B.C", set_odot(&p, b, c)?, &oracle::set_odot(&p, &bs, &cs));
                agree(&mut r, &p, "B->C", set_imp(&p, b, c)?, &oracle::set_imp(&p, &bs, &cs));
            }
            Ok(CaseOutcome::from_report(&r, || poset_text(&p)))
        }),
        prop("residuated subset connectives", |case| {
            let rp = gen::residuated(&mut case.rng, MAX_ORACLE_ELEMENTS + 2);
            let p = rp.base();
            let mut r = CheckReport::new();
            for _ in 0..3 {
                let b = gen::subset(&mut case.rng, p.len(), 3);
                let c = gen::subset(&mut case.rng, p.len(), 3);
                let (bs, cs) = (to_set(b), to_set(c));
                agree(&mut r, p, "B [.] C", rp.boxdot(b, c)?, &oracle::boxdot(&rp, &bs, &cs));
                agree(&mut r, p, "B => C", rp.double_arrow(b, c)?, &oracle::double_arrow(&rp, &bs, &cs));
            }
            Ok(CaseOutcome::from_report(&r, || poset_text(p)))
        }),
        prop("closed sets of the completion", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ORACLE_ELEMENTS + 2);
            let got = dm::closed_sets(&p, case.cfg.enum_cap)?;
            let want: Vec<Subset> = oracle::closed_sets(&p).iter().map(from_set).collect();
            let mut r = CheckReport::new();
            r.check("closed sets", got == want, || format!("{} vs {} sets", got.len(), want.len()));
            Ok(CaseOutcome::from_report(&r, || poset_text(&p)))
        }),
    ]
}
