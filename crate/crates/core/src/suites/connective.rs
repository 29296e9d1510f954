//! Order-derived connectives on elements, subsets and families.

use rand::Rng;

use super::{fixed_prop, input_prop, poset_text, prop, Case, CaseOutcome, Property, Setup, MAX_ELEMENTS};
use crate::check::CheckReport;
use crate::connectives::{elem_set_odot, imp, odot, set_odot};
use crate::display;
use crate::error::Result;
use crate::fixtures::figure_one;
use crate::gen;
use crate::order::holds;
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::{apply_to_slices, TenseOp};
use crate::OrderKind::{All, Forward};

fn elements(case: &mut Case) -> (Poset, [usize; 4]) {
    let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
    let n = p.len();
    let xs = std::array::from_fn(|_| case.rng.gen_range(0..n));
    (p, xs)
}

fn sets(case: &mut Case) -> (Poset, [Subset; 4]) {
    let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
    let n = p.len();
    let xs = std::array::from_fn(|_| gen::subset(&mut case.rng, n, 3));
    (p, xs)
}

fn up(case: &mut Case, p: &Poset, x: usize) -> usize {
    let v: Vec<usize> = p.up_set(x).iter().collect();
    v[case.rng.gen_range(0..v.len())]
}

/// A set `Y` with `X ≤1 Y`.
fn above(case: &mut Case, p: &Poset, x: Subset) -> Subset {
    x.iter().map(|a| up(case, p, a)).collect()
}

fn done(p: &Poset, r: CheckReport) -> Result<CaseOutcome> {
    Ok(CaseOutcome::from_report(&r, || poset_text(p)))
}

fn elems(p: &Poset, xs: &[usize]) -> String {
    let parts: Vec<&str> = xs.iter().map(|&x| p.label(x)).collect();
    parts.join(", ")
}

fn subsets(p: &Poset, xs: &[Subset]) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| display::set(p, x)).collect();
    parts.join(", ")
}

pub fn propim() -> Vec<Property> {
    vec![
        prop("(1) odot is commutative with unit 1", |case| {
            let (p, [x, y, ..]) = elements(case);
            let (_, top) = p.bounds()?;
            let mut r = CheckReport::new();
            let show = || elems(&p, &[x, y]);
            r.check("x.y = y.x", odot(&p, x, y) == odot(&p, y, x), show);
            r.check("1.x = x", odot(&p, top, x) == Subset::singleton(x), show);
            r.check("x.1 = x", odot(&p, x, top) == Subset::singleton(x), show);
            done(&p, r)
        }),
        prop("(2) x.(y.z) = (x.y).z = Max L(x,y,z)", |case| {
            let (p, [x, y, z, _]) = elements(case);
            let mut r = CheckReport::new();
            let show = || elems(&p, &[x, y, z]);
            let left = elem_set_odot(&p, x, odot(&p, y, z))?;
            let right = set_odot(&p, odot(&p, x, y), Subset::singleton(z))?;
            let all: Subset = [x, y, z].into_iter().collect();
            r.check("x.(y.z) = Max L(x,y,z)", left == p.max_lower(all), show);
            r.check("(x.y).z = Max L(x,y,z)", right == p.max_lower(all), show);
            done(&p, r)
        }),
        prop("(3) x <= z and y <= w give x.y <=1 z.w", |case| {
            let (p, [x, y, ..]) = elements(case);
            let z = up(case, &p, x);
            let w = up(case, &p, y);
            let mut r = CheckReport::new();
            r.check("x.y <=1 z.w", holds(&p, Forward, odot(&p, x, y), odot(&p, z, w)), || {
                elems(&p, &[x, y, z, w])
            });
            done(&p, r)
        }),
        prop("(4) x.y <=1 z iff x <=1 y->z", |case| {
            let (p, [x, y, z, _]) = elements(case);
            let mut r = CheckReport::new();
            let left = holds(&p, Forward, odot(&p, x, y), Subset::singleton(z));
            let right = holds(&p, Forward, Subset::singleton(x), imp(&p, y, z));
            r.check("adjointness", left == right, || elems(&p, &[x, y, z]));
            done(&p, r)
        }),
        prop("(5) (x->y).x <= y", |case| {
            let (p, [x, y, ..]) = elements(case);
            let mut r = CheckReport::new();
            let xy = imp(&p, x, y);
            r.check("x->y nonempty", !xy.is_empty(), || elems(&p, &[x, y]));
            if !xy.is_empty() {
                let v = set_odot(&p, xy, Subset::singleton(x))?;
                r.check("(x->y).x <= y", holds(&p, All, v, Subset::singleton(y)), || elems(&p, &[x, y]));
            }
            done(&p, r)
        }),
        fixed_prop("spot values on the nine-element poset", |_| {
            let p = figure_one();
            let at = |l: &str| p.index_of(l).expect("fixture label");
            let set = |ls: &[&str]| ls.iter().map(|l| at(l)).collect::<Subset>();
            let mut r = CheckReport::new();
            let eg = odot(&p, at("e"), at("g"));
            r.check("e.g = {b}", eg == set(&["b"]), || display::set(&p, eg));
            let fg = odot(&p, at("f"), at("g"));
            r.check("f.g = {b,c}", fg == set(&["b", "c"]), || display::set(&p, fg));
            let eb = imp(&p, at("e"), at("b"));
            r.check("e->b = {d,g}", eb == set(&["d", "g"]), || display::set(&p, eb));
            done(&p, r)
        }),
    ]
}

pub fn propim2() -> Vec<Property> {
    vec![
        prop("(1) B.C = C.B and {1}.B = B.{1} = Max LU(B)", |case| {
            let (p, [b, c, ..]) = sets(case);
            let (_, top) = p.bounds()?;
            let one = Subset::singleton(top);
            let mut r = CheckReport::new();
            let show = || subsets(&p, &[b, c]);
            r.check("B.C = C.B", set_odot(&p, b, c)? == set_odot(&p, c, b)?, show);
            let m = p.maximals(p.lu(b));
            r.check("{1}.B = Max LU(B)", set_odot(&p, one, b)? == m, show);
            r.check("B.{1} = Max LU(B)", set_odot(&p, b, one)? == m, show);
            done(&p, r)
        }),
        prop("(2) D <=1 B and D <=1 C give D <=1 B.C", |case| {
            let (p, [d, ..]) = sets(case);
            let b = above(case, &p, d);
            let c = above(case, &p, d);
            let mut r = CheckReport::new();
            let show = || subsets(&p, &[b, c, d]);
            r.check("D <=1 B.C", holds(&p, Forward, d, set_odot(&p, b, c)?), show);
            done(&p, r)
        }),
        prop("(3) B.C <= Min U(B) and B.C <=1 Max LU(B)", |case| {
            let (p, [b, c, ..]) = sets(case);
            let v = set_odot(&p, b, c)?;
            let mut r = CheckReport::new();
            let show = || subsets(&p, &[b, c]);
            r.check("B.C <= Min U(B)", holds(&p, All, v, p.min_upper(b)), show);
            r.check("B.C <=1 Max LU(B)", holds(&p, Forward, v, p.maximals(p.lu(b))), show);
            done(&p, r)
        }),
        prop("(4) B.B = Max LU(B)", |case| {
            let (p, [b, ..]) = sets(case);
            let mut r = CheckReport::new();
            r.check("B.B = Max LU(B)", set_odot(&p, b, b)? == p.maximals(p.lu(b)), || subsets(&p, &[b]));
            done(&p, r)
        }),
        prop("(5) B <=1 D and C <=1 E give B.C <=1 D.E", |case| {
            let (p, [b, c, ..]) = sets(case);
            let d = above(case, &p, b);
            let e = above(case, &p, c);
            let mut r = CheckReport::new();
            let ok = holds(&p, Forward, set_odot(&p, b, c)?, set_odot(&p, d, e)?);
            r.check("B.C <=1 D.E", ok, || subsets(&p, &[b, c, d, e]));
            done(&p, r)
        }),
    ]
}

fn odot_slices(p: &Poset, a: &[Subset], b: &[Subset]) -> Result<Vec<Subset>> {
    a.iter().zip(b).map(|(&x, &y)| set_odot(p, x, y)).collect()
}

pub fn pgfh() -> Vec<Property> {
    vec![
        input_prop("(1) P(B.B) = P(B) and F(B.B) = F(B)", |case| {
            let Some(s) = Setup::draw(case, MAX_ELEMENTS, super::MAX_TIMES, false, 3) else {
                return Ok(CaseOutcome::Skip);
            };
            let (p, f) = (&s.poset, &s.frame);
            let mut r = CheckReport::new();
            for b in &s.families {
                let sl = b.slices();
                let bb = odot_slices(p, &sl, &sl)?;
                for op in [TenseOp::P, TenseOp::F] {
                    let ok = apply_to_slices(op, p, f, &bb)? == apply_to_slices(op, p, f, &sl)?;
                    r.check(&format!("{op}(B.B) = {op}(B)"), ok, || format!("B = {}", display::family(p, b)));
                }
            }
            Ok(s.outcome(&r))
        }),
        input_prop("(2)-(3) Max L(X(B.C)) <=1 Max L(X(B)).Max L(X(C)) for X = P, F", |case| {
            let Some(s) = Setup::draw(case, MAX_ELEMENTS, super::MAX_TIMES, false, 3) else {
                return Ok(CaseOutcome::Skip);
            };
            let (p, f) = (&s.poset, &s.frame);
            let max_l = |v: Vec<Subset>| -> Vec<Subset> { v.into_iter().map(|x| p.max_lower(x)).collect() };
            let mut r = CheckReport::new();
            for b in &s.families {
                for c in &s.families {
                    let bc = odot_slices(p, &b.slices(), &c.slices())?;
                    for op in [TenseOp::P, TenseOp::F] {
                        let lhs = max_l(apply_to_slices(op, p, f, &bc)?);
                        let xb = max_l(apply_to_slices(op, p, f, &b.slices())?);
                        let xc = max_l(apply_to_slices(op, p, f, &c.slices())?);
                        let rhs = odot_slices(p, &xb, &xc)?;
                        let ok = lhs.iter().zip(&rhs).all(|(&x, &y)| holds(p, Forward, x, y));
                        r.check(&format!("Max L({op}(B.C)) <=1 Max L({op}(B)).Max L({op}(C))"), ok, || {
                            format!("B = {}, C = {}", display::family(p, b), display::family(p, c))
                        });
                    }
                }
            }
            Ok(s.outcome(&r))
        }),
    ]
}
