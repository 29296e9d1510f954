//! Cone, extremal-set and quasi-order laws on single posets.

use rand::Rng;

use super::{fixed_prop, poset_text, prop, Case, CaseOutcome, Property, MAX_ELEMENTS};
use crate::check::CheckReport;
use crate::display;
use crate::error::Result;
use crate::gen;
use crate::order::holds;
use crate::poset::{Poset, ProductPoset};
use crate::subset::Subset;
use crate::OrderKind::{Backward, Eq1, Eq2, Forward};

fn pick(rng: &mut impl Rng, s: Subset) -> usize {
    let v: Vec<usize> = s.iter().collect();
    v[rng.gen_range(0..v.len())]
}

/// `Y` with `X ≤1 Y`: one element above each `x`, plus random extras.
fn raise_set(rng: &mut impl Rng, p: &Poset, x: Subset) -> Subset {
    let mut y: Subset = x.iter().map(|a| pick(rng, p.up_set(a))).collect();
    y |= gen::any_subset(rng, p.len()) & gen::any_subset(rng, p.len());
    y
}

/// `Y` with `X ≤2 Y`: elements above a nonempty selection of `X`.
fn raise_some_set(rng: &mut impl Rng, p: &Poset, x: Subset) -> Subset {
    let mut y = Subset::EMPTY;
    for a in x.iter() {
        if rng.gen_bool(0.6) {
            y.insert(pick(rng, p.up_set(a)));
        }
    }
    if y.is_empty() {
        let a = pick(rng, x);
        y.insert(pick(rng, p.up_set(a)));
    }
    y
}

struct Sets {
    p: Poset,
    x: Subset,
}

fn draw(case: &mut Case) -> Sets {
    let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
    let x = gen::subset(&mut case.rng, p.len(), 4);
    Sets { p, x }
}

fn done(p: &Poset, r: CheckReport) -> Result<CaseOutcome> {
    Ok(CaseOutcome::from_report(&r, || poset_text(p)))
}

fn pair(p: &Poset, x: Subset, y: Subset) -> impl FnOnce() -> String + '_ {
    move || format!("X = {}, Y = {}", display::set(p, x), display::set(p, y))
}

pub fn usefulprop() -> Vec<Property> {
    vec![
        prop("(i) X subset of Y gives X <=1 Y and Y <=2 X", |case| {
            let Sets { p, x } = draw(case);
            let y = x | gen::any_subset(&mut case.rng, p.len());
            let mut r = CheckReport::new();
            r.check("X <=1 Y", holds(&p, Forward, x, y), pair(&p, x, y));
            r.check("Y <=2 X", holds(&p, Backward, y, x), pair(&p, x, y));
            done(&p, r)
        }),
        prop("(ii) X <=1 Y gives U(Y) in U(X) and LU(X) in LU(Y)", |case| {
            let Sets { p, x } = draw(case);
            let candidates = [raise_set(&mut case.rng, &p, x), gen::subset(&mut case.rng, p.len(), 4)];
            let mut r = CheckReport::new();
            for y in candidates {
                if !holds(&p, Forward, x, y) {
                    continue;
                }
                r.check("U(Y) in U(X)", p.upper_cone(y).is_subset(p.upper_cone(x)), pair(&p, x, y));
                r.check("LU(X) in LU(Y)", p.lu(x).is_subset(p.lu(y)), pair(&p, x, y));
            }
            done(&p, r)
        }),
        prop("(iii) X <=2 Y gives L(X) in L(Y) and UL(Y) in UL(X)", |case| {
            let Sets { p, x } = draw(case);
            let candidates = [raise_some_set(&mut case.rng, &p, x), gen::subset(&mut case.rng, p.len(), 4)];
            let mut r = CheckReport::new();
            for y in candidates {
                if !holds(&p, Backward, x, y) {
                    continue;
                }
                r.check("L(X) in L(Y)", p.lower_cone(x).is_subset(p.lower_cone(y)), pair(&p, x, y));
                r.check("UL(Y) in UL(X)", p.ul(y).is_subset(p.ul(x)), pair(&p, x, y));
            }
            done(&p, r)
        }),
        prop("(iv) equivalent antichains are equal", |case| {
            let Sets { p, x } = draw(case);
            let x = p.maximals(x);
            let mut r = CheckReport::new();
            let others = [
                x,
                p.maximals(gen::subset(&mut case.rng, p.len(), 4)),
                p.minimals(gen::subset(&mut case.rng, p.len(), 4)),
            ];
            for y in others {
                if !p.is_antichain(y) {
                    continue;
                }
                for kind in [Eq1, Eq2] {
                    if holds(&p, kind, x, y) {
                        r.check("X = Y", x == y, pair(&p, x, y));
                    }
                }
            }
            done(&p, r)
        }),
        prop("L and U form a Galois connection", |case| {
            let Sets { p, x } = draw(case);
            let y = x | gen::any_subset(&mut case.rng, p.len());
            let mut r = CheckReport::new();
            r.check("L antitone", p.lower_cone(y).is_subset(p.lower_cone(x)), pair(&p, x, y));
            r.check("U antitone", p.upper_cone(y).is_subset(p.upper_cone(x)), pair(&p, x, y));
            r.check("X in LU(X)", x.is_subset(p.lu(x)), pair(&p, x, y));
            r.check("X in UL(X)", x.is_subset(p.ul(x)), pair(&p, x, y));
            r.check("LU monotone", p.lu(x).is_subset(p.lu(y)), pair(&p, x, y));
            r.check("LU idempotent", p.lu(p.lu(x)) == p.lu(x), pair(&p, x, y));
            r.check("UL idempotent", p.ul(p.ul(x)) == p.ul(x), pair(&p, x, y));
            r.check("LUL = L", p.lower_cone(p.ul(x)) == p.lower_cone(x), pair(&p, x, y));
            done(&p, r)
        }),
        prop("extremal subsets are antichains dominating the cone", |case| {
            let Sets { p, x } = draw(case);
            let mut r = CheckReport::new();
            let u = p.upper_cone(x);
            let mu = p.min_upper(x);
            let l = p.lower_cone(x);
            let ml = p.max_lower(x);
            let show = pair(&p, x, mu);
            r.check("Min U(X) antichain", p.is_antichain(mu), show);
            r.check("Max L(X) antichain", p.is_antichain(ml), pair(&p, x, ml));
            r.check("Min U(X) in U(X)", !mu.is_empty() && mu.is_subset(u), pair(&p, x, mu));
            r.check("Max L(X) in L(X)", !ml.is_empty() && ml.is_subset(l), pair(&p, x, ml));
            r.check(
                "U(X) above Min U(X)",
                u.iter().all(|a| p.down_set(a).intersects(mu)),
                pair(&p, x, mu),
            );
            r.check(
                "L(X) below Max L(X)",
                l.iter().all(|a| p.up_set(a).intersects(ml)),
                pair(&p, x, ml),
            );
            done(&p, r)
        }),
    ]
}

pub fn minmaxcor() -> Vec<Property> {
    vec![
        prop("(i) X <=1 Y gives Min U(X) <=2 Min U(Y)", |case| {
            let Sets { p, x } = draw(case);
            let y = raise_set(&mut case.rng, &p, x);
            let mut r = CheckReport::new();
            r.check("precondition X <=1 Y", holds(&p, Forward, x, y), pair(&p, x, y));
            r.check(
                "Min U(X) <=2 Min U(Y)",
                holds(&p, Backward, p.min_upper(x), p.min_upper(y)),
                pair(&p, x, y),
            );
            done(&p, r)
        }),
        prop("(ii) Max LU-fixed X, Y with LU(X) in LU(Y) give X <=1 Y", |case| {
            let Sets { p, x: s } = draw(case);
            let s2 = s | gen::any_subset(&mut case.rng, p.len());
            let x = p.maximals(p.lu(s));
            let y = p.maximals(p.lu(s2));
            let mut r = CheckReport::new();
            r.check("X = Max LU(X)", x == p.maximals(p.lu(x)), pair(&p, x, y));
            r.check("Y = Max LU(Y)", y == p.maximals(p.lu(y)), pair(&p, x, y));
            if p.lu(x).is_subset(p.lu(y)) {
                r.check("X <=1 Y", holds(&p, Forward, x, y), pair(&p, x, y));
            }
            done(&p, r)
        }),
        prop("(iii) X <=2 Y gives Max L(X) <=1 Max L(Y)", |case| {
            let Sets { p, x } = draw(case);
            let y = raise_some_set(&mut case.rng, &p, x);
            let mut r = CheckReport::new();
            r.check("precondition X <=2 Y", holds(&p, Backward, x, y), pair(&p, x, y));
            r.check(
                "Max L(X) <=1 Max L(Y)",
                holds(&p, Forward, p.max_lower(x), p.max_lower(y)),
                pair(&p, x, y),
            );
            done(&p, r)
        }),
        prop("(iv) Min UL-fixed X, Y with UL(Y) in UL(X) give X <=2 Y", |case| {
            let Sets { p, x: s } = draw(case);
            let s2 = s | gen::any_subset(&mut case.rng, p.len());
            let x = p.minimals(p.ul(s2));
            let y = p.minimals(p.ul(s));
            let mut r = CheckReport::new();
            r.check("X = Min UL(X)", x == p.minimals(p.ul(x)), pair(&p, x, y));
            r.check("Y = Min UL(Y)", y == p.minimals(p.ul(y)), pair(&p, x, y));
            if p.ul(y).is_subset(p.ul(x)) {
                r.check("X <=2 Y", holds(&p, Backward, x, y), pair(&p, x, y));
            }
            done(&p, r)
        }),
    ]
}

pub fn mlub() -> Vec<Property> {
    vec![
        prop("U(Max L(M)) = UL(M) and L(Min U(M)) = LU(M)", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
            let mut r = CheckReport::new();
            for _ in 0..4 {
                let m = gen::any_subset(&mut case.rng, p.len());
                let show = || display::set(&p, m);
                r.check("U(Max L(M)) = UL(M)", p.upper_cone(p.max_lower(m)) == p.ul(m), show);
                r.check("L(Min U(M)) = LU(M)", p.lower_cone(p.min_upper(m)) == p.lu(m), show);
            }
            done(&p, r)
        }),
        prop("finite bounded posets are MLUB-complete", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
            let mut r = CheckReport::new();
            r.check("MLUB-complete", p.is_mlub_complete(case.cfg.enum_cap)?, String::new);
            done(&p, r)
        }),
        prop("extremal sets of a product are products", |case| {
            let a = gen::poset_up_to(&mut case.rng, 4);
            let b = gen::poset_up_to(&mut case.rng, 4);
            let prod = ProductPoset::new(&[a.clone(), b.clone()], 16)?;
            let q = &prod.poset;
            let ma = gen::subset(&mut case.rng, a.len(), 2);
            let mb = gen::subset(&mut case.rng, b.len(), 2);
            let m = prod.product_set(&[ma, mb]);
            let mut r = CheckReport::new();
            let show = || format!("M = {}", display::set(q, m));
            r.check(
                "Min U(M) = Min U(M1) x Min U(M2)",
                q.min_upper(m) == prod.product_set(&[a.min_upper(ma), b.min_upper(mb)]),
                show,
            );
            r.check(
                "Max L(M) = Max L(M1) x Max L(M2)",
                q.max_lower(m) == prod.product_set(&[a.max_lower(ma), b.max_lower(mb)]),
                show,
            );
            if q.len() <= case.cfg.enum_cap {
                r.check("product MLUB-complete", q.is_mlub_complete(case.cfg.enum_cap)?, String::new);
            }
            done(q, r)
        }),
        fixed_prop("the nine-element example is MLUB-complete but not a lattice", |_| {
            let p = crate::fixtures::figure_one();
            let mut r = CheckReport::new();
            r.check("MLUB-complete", p.is_mlub_complete(12)?, String::new);
            let a = p.index_of("a").expect("label a");
            let b = p.index_of("b").expect("label b");
            r.check("a and b have no join", p.join(a, b).is_none(), String::new);
            done(&p, r)
        }),
    ]
}
