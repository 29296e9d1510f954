//! Completion-level operators against the poset-level ones, and the
//! completion itself.

use super::{input_prop, prop, poset_text, Case, CaseOutcome, Property, Setup};
use crate::check::CheckReport;
use crate::display;
use crate::dm::{self, hat_tense, l_slices, lu_slices, max_slices, min_slices, u_slices, DmLattice};
use crate::error::Result;
use crate::gen;
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::{apply_to_slices, TenseOp};
use crate::Family;

/// Carrier bound for completion cases.
const MAX_DM_ELEMENTS: usize = 7;

fn setup(case: &mut Case) -> Option<Setup> {
    Setup::draw(case, MAX_DM_ELEMENTS, super::MAX_TIMES, false, 3)
}

fn each_family(
    case: &mut Case,
    body: impl Fn(&Setup, &Family, &mut CheckReport) -> Result<()>,
) -> Result<CaseOutcome> {
    let Some(s) = setup(case) else {
        return Ok(CaseOutcome::Skip);
    };
    let mut r = CheckReport::new();
    for b in &s.families {
        body(&s, b, &mut r)?;
    }
    Ok(s.outcome(&r))
}

fn show(p: &Poset, b: &Family) -> impl Fn() -> String {
    let text = display::family(p, b);
    move || format!("B = {text}")
}

/// `Max Ĝ(LU(C)) = G(U(C)) = G(Min U(C))` for a lower operator.
fn lower_connect(s: &Setup, op: TenseOp, c: &Family, r: &mut CheckReport) -> Result<()> {
    let (p, f) = (&s.poset, &s.frame);
    let sl = c.slices();
    let hat = max_slices(p, &hat_tense(op, p, f, &lu_slices(p, &sl))?);
    let u = u_slices(p, &sl);
    let via_u = apply_to_slices(op, p, f, &u)?;
    let via_min = apply_to_slices(op, p, f, &min_slices(p, &u))?;
    r.check(&format!("Max {op}^(LU(C)) = {op}(U(C))"), hat == via_u, show(p, c));
    r.check(&format!("{op}(U(C)) = {op}(Min U(C))"), via_u == via_min, show(p, c));
    Ok(())
}

/// `P̂(L(D)) = L(P(L(D))) = L(P(Max L(D)))` for an upper operator.
fn upper_connect(s: &Setup, op: TenseOp, d: &Family, r: &mut CheckReport) -> Result<()> {
    let (p, f) = (&s.poset, &s.frame);
    let l = l_slices(p, &d.slices());
    let hat = hat_tense(op, p, f, &l)?;
    let via_l = l_slices(p, &apply_to_slices(op, p, f, &l)?);
    let via_max = l_slices(p, &apply_to_slices(op, p, f, &max_slices(p, &l))?);
    r.check(&format!("{op}^(L(D)) = L({op}(L(D)))"), hat == via_l, show(p, d));
    r.check(&format!("L({op}(L(D))) = L({op}(Max L(D)))"), via_l == via_max, show(p, d));
    Ok(())
}

/// `Ĝ(L(C)) = LU(G(UL(C))) = LU(G(C))`.
fn lower_cor(s: &Setup, op: TenseOp, c: &Family, r: &mut CheckReport) -> Result<()> {
    let (p, f) = (&s.poset, &s.frame);
    let sl = c.slices();
    let hat = hat_tense(op, p, f, &l_slices(p, &sl))?;
    let ul: Vec<Subset> = sl.iter().map(|&x| p.ul(x)).collect();
    let via_ul = lu_slices(p, &apply_to_slices(op, p, f, &ul)?);
    let direct = lu_slices(p, &apply_to_slices(op, p, f, &sl)?);
    r.check(&format!("{op}^(L(C)) = LU({op}(UL(C)))"), hat == via_ul, show(p, c));
    r.check(&format!("LU({op}(UL(C))) = LU({op}(C))"), via_ul == direct, show(p, c));
    Ok(())
}

/// `P̂(LU(D)) = L(P(D)) = L(P(LU(D)))`.
fn upper_cor(s: &Setup, op: TenseOp, d: &Family, r: &mut CheckReport) -> Result<()> {
    let (p, f) = (&s.poset, &s.frame);
    let sl = d.slices();
    let lu = lu_slices(p, &sl);
    let hat = hat_tense(op, p, f, &lu)?;
    let direct = l_slices(p, &apply_to_slices(op, p, f, &sl)?);
    let via_lu = l_slices(p, &apply_to_slices(op, p, f, &lu)?);
    r.check(&format!("{op}^(LU(D)) = L({op}(D))"), hat == direct, show(p, d));
    r.check(&format!("L({op}(D)) = L({op}(LU(D)))"), direct == via_lu, show(p, d));
    Ok(())
}

pub fn connect() -> Vec<Property> {
    vec![
        input_prop("(i) Max G^(LU(C)) = G(U(C)) = G(Min U(C))", |case| {
            each_family(case, |s, c, r| lower_connect(s, TenseOp::G, c, r))
        }),
        input_prop("(ii) P^(L(D)) = L(P(L(D))) = L(P(Max L(D)))", |case| {
            each_family(case, |s, d, r| upper_connect(s, TenseOp::P, d, r))
        }),
        input_prop("(iii) Max H^(LU(C)) = H(U(C)) = H(Min U(C))", |case| {
            each_family(case, |s, c, r| lower_connect(s, TenseOp::H, c, r))
        }),
        input_prop("(iv) F^(L(D)) = L(F(L(D))) = L(F(Max L(D)))", |case| {
            each_family(case, |s, d, r| upper_connect(s, TenseOp::F, d, r))
        }),
    ]
}

pub fn cor_connect() -> Vec<Property> {
    vec![
        input_prop("(i) G^(L(C)) = LU(G(UL(C))) = LU(G(C))", |case| {
            each_family(case, |s, c, r| lower_cor(s, TenseOp::G, c, r))
        }),
        input_prop("(ii) P^(LU(D)) = L(P(D)) = L(P(LU(D)))", |case| {
            each_family(case, |s, d, r| upper_cor(s, TenseOp::P, d, r))
        }),
        input_prop("(iii) H^(L(C)) = LU(H(UL(C))) = LU(H(C))", |case| {
            each_family(case, |s, c, r| lower_cor(s, TenseOp::H, c, r))
        }),
        input_prop("(iv) F^(LU(D)) = L(F(D)) = L(F(LU(D)))", |case| {
            each_family(case, |s, d, r| upper_cor(s, TenseOp::F, d, r))
        }),
    ]
}

fn completion(case: &mut Case) -> Result<(Poset, DmLattice)> {
    let p = gen::poset_up_to(&mut case.rng, super::MAX_ELEMENTS);
    let l = DmLattice::new(&p, case.cfg.enum_cap)?;
    Ok((p, l))
}

pub fn dm() -> Vec<Property> {
    vec![
        prop("LU-closed sets are exactly the lower cones", |case| {
            let p = gen::poset_up_to(&mut case.rng, super::MAX_ELEMENTS);
            let mut r = CheckReport::new();
            let a = dm::closed_sets(&p, case.cfg.enum_cap)?;
            let b = dm::lower_cone_sets(&p, case.cfg.enum_cap)?;
            r.check("{LU(B)} = {L(B)}", a == b, || format!("{} vs {} sets", a.len(), b.len()));
            for &s in &a {
                r.check("closed", dm::is_closed(&p, s), || display::set(&p, s));
            }
            Ok(CaseOutcome::from_report(&r, || poset_text(&p)))
        }),
        prop("the completion is a lattice with meet = intersection and join = LU(union)", |case| {
            let (p, l) = completion(case)?;
            let q = l.lattice();
            let mut r = CheckReport::new();
            for (i, &x) in l.closed().iter().enumerate() {
                for (j, &y) in l.closed().iter().enumerate() {
                    let show = || format!("X = {}, Y = {}", display::set(&p, x), display::set(&p, y));
                    let meet = q.meet(i, j).map(|k| l.closed()[k]);
                    let join = q.join(i, j).map(|k| l.closed()[k]);
                    r.check("meet exists and is the intersection", meet == Some(l.meet(x, y)), show);
                    r.check("join exists and is LU of the union", join == Some(l.join(x, y)), show);
                }
            }
            r.check("bounds", l.bottom() == l.closed()[0] && l.top() == p.full(), String::new);
            Ok(CaseOutcome::from_report(&r, || poset_text(&p)))
        }),
        prop("x to L(x) is an order embedding preserving existing joins and meets", |case| {
            let (p, l) = completion(case)?;
            let mut r = CheckReport::new();
            for x in 0..p.len() {
                for y in 0..p.len() {
                    let show = || format!("x = {}, y = {}", p.label(x), p.label(y));
                    let (ex, ey) = (l.embed(x), l.embed(y));
                    r.check("order embedding", p.leq(x, y) == ex.is_subset(ey), show);
                    if let Some(z) = p.join(x, y) {
                        r.check("joins preserved", l.join(ex, ey) == l.embed(z), show);
                    }
                    if let Some(z) = p.meet(x, y) {
                        r.check("meets preserved", l.meet(ex, ey) == l.embed(z), show);
                    }
                }
                r.check("L(x) indexed", l.closed()[l.embed_index(x)] == l.embed(x), String::new);
            }
            Ok(CaseOutcome::from_report(&r, || poset_text(&p)))
        }),
    ]
}
