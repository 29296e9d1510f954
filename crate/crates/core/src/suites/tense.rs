//! Laws of frame-induced tense operators, their compositions, and dynamic pairs.

use rand::Rng;

use super::{corrupt, input_prop, prop, Case, CaseOutcome, Property, Setup, MAX_ELEMENTS, MAX_FAMILY, MAX_TIMES};
use crate::check::CheckReport;
use crate::display;
use crate::error::Result;
use crate::frame::TimeFrame;
use crate::gen;
use crate::order::{self, first_violation};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::{
    all_families, apply_tense, apply_tense_trajectory, apply_to_slices, check_dynamic, check_galois,
    galois_cross_check, Corrupted, Family, FrameBundle, MixedBundle, TenseBundle, TenseOp, Trajectory,
};
use crate::OrderKind::{self, All, Backward, Forward};
use TenseOp::{F, G, H, P};

fn slicewise(p: &Poset, kind: OrderKind, a: &[Subset], b: &[Subset]) -> bool {
    first_violation(p, kind, a, b).is_none()
}

fn map_set(s: Subset, m: &[usize]) -> Subset {
    s.iter().map(|x| m[x]).collect()
}

fn map_family(b: &Family, m: &[usize]) -> Family {
    Family::new(b.props().iter().map(|q| q.iter().map(|&x| m[x]).collect()).collect()).expect("nonempty")
}

fn draw(case: &mut Case, reflexive: bool) -> Option<Setup> {
    Setup::draw(case, MAX_ELEMENTS, MAX_TIMES, reflexive, 3)
}

/// Runs `body` on a drawn setup, skipping when the input does not qualify.
fn with_setup(
    case: &mut Case,
    reflexive: bool,
    body: impl FnOnce(&mut Case, &Setup, &mut CheckReport) -> Result<()>,
) -> Result<CaseOutcome> {
    let Some(s) = draw(case, reflexive) else {
        return Ok(CaseOutcome::Skip);
    };
    let mut r = CheckReport::new();
    body(case, &s, &mut r)?;
    Ok(s.outcome(&r))
}

fn fam(p: &Poset, b: &Family) -> String {
    format!("B = {}", display::family(p, b))
}

pub fn propdual() -> Vec<Property> {
    vec![
        input_prop("each operator is its order dual on the dual poset", |case| {
            with_setup(case, false, |_, s, r| {
                let d = s.poset.dual();
                for b in &s.families {
                    for op in TenseOp::ALL {
                        let x = apply_tense(op, &s.poset, &s.frame, b)?;
                        let y = apply_tense(op.order_dual(), &d, &s.frame, b)?;
                        r.check(&format!("{op} = {} on the dual", op.order_dual()), x == y, || fam(&s.poset, b));
                    }
                }
                Ok(())
            })
        }),
        input_prop("each operator is its time dual on the inverted frame", |case| {
            with_setup(case, false, |_, s, r| {
                let inv = s.frame.invert();
                let d = s.poset.dual();
                for b in &s.families {
                    for op in TenseOp::ALL {
                        let x = apply_tense(op, &s.poset, &s.frame, b)?;
                        let y = apply_tense(op.time_dual(), &s.poset, &inv, b)?;
                        r.check(&format!("{op} = {} on the inverted frame", op.time_dual()), x == y, || {
                            fam(&s.poset, b)
                        });
                        let both = op.order_dual().time_dual();
                        let z = apply_tense(both, &d, &inv, b)?;
                        r.check(&format!("{op} = {both} on both duals"), x == z, || fam(&s.poset, b));
                    }
                }
                Ok(())
            })
        }),
        input_prop("operators commute with poset isomorphisms", |case| {
            with_setup(case, false, |case, s, r| {
                let perm = gen::permutation(&mut case.rng, s.poset.len());
                let q = s.poset.relabel(&perm)?;
                for b in &s.families {
                    let b2 = map_family(b, &perm);
                    for op in TenseOp::ALL {
                        let x = apply_tense(op, &s.poset, &s.frame, b)?;
                        let y = apply_tense(op, &q, &s.frame, &b2)?;
                        let moved: Vec<Subset> = x.slices().iter().map(|&v| map_set(v, &perm)).collect();
                        r.check(&format!("{op} natural"), moved == y.slices(), || {
                            format!("{}, permutation {perm:?}", fam(&s.poset, b))
                        });
                    }
                }
                Ok(())
            })
        }),
        prop("P(B) = H(B')' and F(B) = G(B')' under an antitone involution", |case| {
            let p = gen::involution_poset(&mut case.rng, MAX_ELEMENTS);
            let f = gen::frame_up_to(&mut case.rng, MAX_TIMES, false);
            let fams = gen::families(&mut case.rng, p.len(), f.len(), MAX_FAMILY, 3);
            let inv = p.involution().expect("involution poset").to_vec();
            let mut r = CheckReport::new();
            for b in &fams {
                let primed = map_family(b, &inv);
                for (op, dual) in [(P, H), (F, G), (H, P), (G, F)] {
                    let x = apply_tense(op, &p, &f, b)?;
                    let y = apply_tense(dual, &p, &f, &primed)?;
                    let back: Vec<Subset> = y.slices().iter().map(|&v| map_set(v, &inv)).collect();
                    r.check(&format!("{op}(B) = {dual}(B')'"), x.slices() == back, || fam(&p, b));
                }
            }
            Ok(CaseOutcome::from_report(&r, || super::instance_text(&p, &f, &fams)))
        }),
    ]
}

pub fn xproptense() -> Vec<Property> {
    vec![input_prop("upper operators ignore non-maximal lower bounds", |case| {
        with_setup(case, false, |case, s, r| {
            let p = &s.poset;
            let cap = case.cfg.phi_cap;
            for b in &s.families {
                let slices = b.slices();
                let lower: Vec<Subset> = slices.iter().map(|&x| p.lower_cone(x)).collect();
                let upper: Vec<Subset> = slices.iter().map(|&x| p.upper_cone(x)).collect();
                let cases = [
                    (P, &lower, true),
                    (F, &lower, true),
                    (H, &upper, false),
                    (G, &upper, false),
                ];
                for (op, cone, take_max) in cases {
                    let cone_t = Trajectory::new(cone.clone())?;
                    let ext: Vec<Subset> = cone
                        .iter()
                        .map(|&x| if take_max { p.maximals(x) } else { p.minimals(x) })
                        .collect();
                    let ext_t = Trajectory::new(ext)?;
                    let full = match cone_t.materialize(cap) {
                        Ok(phi) => apply_tense(op, p, &s.frame, &phi)?,
                        Err(_) => apply_tense_trajectory(op, p, &s.frame, &cone_t)?,
                    };
                    let reduced = apply_tense(op, p, &s.frame, &ext_t.materialize(cap)?)?;
                    let law = if take_max {
                        format!("{op}(L(B)) = {op}(Max L(B))")
                    } else {
                        format!("{op}(U(B)) = {op}(Min U(B))")
                    };
                    r.check(&law, full == reduced, || fam(p, b));
                }
            }
            Ok(())
        })
    })]
}

pub fn prop3() -> Vec<Property> {
    vec![input_prop("reflexive frames: q <= phi(P(q)), phi(F(q)) and phi(H(q)), phi(G(q)) <= q", |case| {
        with_setup(case, true, |_, s, r| {
            let p = &s.poset;
            for b in &s.families {
                for q in b.props() {
                    let single = Family::singleton(q.clone());
                    let qs: Vec<Subset> = q.iter().map(|&x| Subset::singleton(x)).collect();
                    for op in TenseOp::ALL {
                        let v = apply_tense(op, p, &s.frame, &single)?;
                        let ok = if op.is_upper() {
                            slicewise(p, All, &qs, v.slices())
                        } else {
                            slicewise(p, All, v.slices(), &qs)
                        };
                        r.check(&format!("T3 for {op} on a proposition"), ok, || {
                            format!("q = {}", display::proposition(p, q))
                        });
                    }
                }
            }
            Ok(())
        })
    })]
}

pub fn prop2() -> Vec<Property> {
    vec![
        input_prop("operators on phi(B) are the closed form on the slices of B", |case| {
            with_setup(case, false, |case, s, r| {
                let p = &s.poset;
                let b = gen::trajectory(&mut case.rng, p.len(), s.frame.len(), 3);
                let phi = b.materialize(case.cfg.phi_cap)?;
                for op in TenseOp::ALL {
                    let direct = apply_tense(op, p, &s.frame, &phi)?;
                    let closed = apply_to_slices(op, p, &s.frame, b.slices())?;
                    let normalized = apply_tense_trajectory(op, p, &s.frame, &b)?;
                    let show = || format!("B = {}", display::trajectory(p, &b));
                    r.check(&format!("{op}(phi(B)) closed form"), direct.slices() == closed, show);
                    r.check(&format!("{op}(phi(B)) after normalizing"), direct == normalized, show);
                }
                Ok(())
            })
        }),
        prop("phi preserves and reflects every order and inclusion", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
            let m = case.rng.gen_range(1..=MAX_TIMES);
            let x = gen::trajectory(&mut case.rng, p.len(), m, 3);
            let y = if case.rng.gen_bool(0.5) {
                gen::trajectory(&mut case.rng, p.len(), m, 3)
            } else {
                let grown: Vec<Subset> = x
                    .slices()
                    .iter()
                    .map(|&s| s | (gen::any_subset(&mut case.rng, p.len()) & gen::any_subset(&mut case.rng, p.len())))
                    .collect();
                Trajectory::new(grown)?
            };
            let cap = case.cfg.phi_cap;
            let (px, py) = (x.materialize(cap)?, y.materialize(cap)?);
            let mut r = CheckReport::new();
            let show = || format!("X = {}, Y = {}", display::trajectory(&p, &x), display::trajectory(&p, &y));
            for kind in OrderKind::ALL_KINDS {
                let slices = order::compare_trajectories(&p, kind, &x, &y)?;
                let fams = order::compare_families(&p, kind, &px, &py)?;
                r.check(&format!("phi respects {kind}"), slices == fams, show);
            }
            let sub = x.slices().iter().zip(y.slices()).all(|(a, b)| a.is_subset(*b));
            let fsub = px.props().iter().all(|q| py.contains(q));
            r.check("phi respects inclusion", sub == fsub, show);
            r.check("phi injective", (x == y) == (px == py), show);
            Ok(CaseOutcome::from_report(&r, || crate::display::trajectory(&p, &x)))
        }),
        prop("cones of phi(B) are products of slice cones", |case| {
            let p = gen::poset_up_to(&mut case.rng, 6);
            let m = case.rng.gen_range(1..=3);
            let b = gen::trajectory(&mut case.rng, p.len(), m, 3);
            let phi = b.materialize(case.cfg.phi_cap)?;
            let all = crate::tense::all_propositions(p.len(), m, case.cfg.phi_cap)?;
            let leq = |a: &[usize], c: &[usize]| a.iter().zip(c).all(|(&x, &y)| p.leq(x, y));
            let upper: Vec<Vec<usize>> = all
                .iter()
                .filter(|u| phi.props().iter().all(|q| leq(q, u)))
                .cloned()
                .collect();
            let lower: Vec<Vec<usize>> = all
                .iter()
                .filter(|l| phi.props().iter().all(|q| leq(l, q)))
                .cloned()
                .collect();
            let up_t = Trajectory::new(b.slices().iter().map(|&s| p.upper_cone(s)).collect())?;
            let lo_t = Trajectory::new(b.slices().iter().map(|&s| p.lower_cone(s)).collect())?;
            let mut r = CheckReport::new();
            let show = || format!("B = {}", display::trajectory(&p, &b));
            r.check("U(phi(B)) = phi(U(B(t)))", upper == up_t.materialize(usize::MAX)?.props(), show);
            r.check("L(phi(B)) = phi(L(B(t)))", lower == lo_t.materialize(usize::MAX)?.props(), show);
            Ok(CaseOutcome::from_report(&r, || super::poset_text(&p)))
        }),
    ]
}

fn subfamily(rng: &mut impl Rng, c: &Family) -> Family {
    let keep: Vec<_> = c.props().iter().filter(|_| rng.gen_bool(0.6)).cloned().collect();
    if keep.is_empty() {
        Family::singleton(c.props()[0].clone())
    } else {
        Family::new(keep).expect("nonempty")
    }
}

pub fn ordrs() -> Vec<Property> {
    vec![
        input_prop("(i) C <=1 D or C in D: upper operators grow in <=2 and L", |case| {
            with_setup(case, false, |case, s, r| {
                let p = &s.poset;
                for c in &s.families {
                    let extra = gen::family(&mut case.rng, p.len(), s.frame.len(), MAX_FAMILY);
                    for d in [gen::raise(&mut case.rng, p, c), c.union(&extra)] {
                        let show = || format!("C = {}, D = {}", display::family(p, c), display::family(p, &d));
                        for op in [P, F] {
                            let x = apply_tense(op, p, &s.frame, c)?;
                            let y = apply_tense(op, p, &s.frame, &d)?;
                            r.check(&format!("{op}(C) <=2 {op}(D)"), slicewise(p, Backward, x.slices(), y.slices()), show);
                            let ok = x
                                .slices()
                                .iter()
                                .zip(y.slices())
                                .all(|(a, b)| p.lower_cone(*a).is_subset(p.lower_cone(*b)));
                            r.check(&format!("L({op}(C)) in L({op}(D))"), ok, show);
                        }
                    }
                }
                Ok(())
            })
        }),
        input_prop("(ii) C <=2 D or D in C: lower operators grow in <=1 and shrink in U", |case| {
            with_setup(case, false, |case, s, r| {
                let p = &s.poset;
                for c in &s.families {
                    for d in [gen::raise_some(&mut case.rng, p, c), subfamily(&mut case.rng, c)] {
                        let show = || format!("C = {}, D = {}", display::family(p, c), display::family(p, &d));
                        for op in [H, G] {
                            let x = apply_tense(op, p, &s.frame, c)?;
                            let y = apply_tense(op, p, &s.frame, &d)?;
                            r.check(&format!("{op}(C) <=1 {op}(D)"), slicewise(p, Forward, x.slices(), y.slices()), show);
                            let ok = x
                                .slices()
                                .iter()
                                .zip(y.slices())
                                .all(|(a, b)| p.upper_cone(*b).is_subset(p.upper_cone(*a)));
                            r.check(&format!("U({op}(D)) in U({op}(C))"), ok, show);
                        }
                    }
                }
                Ok(())
            })
        }),
        input_prop("(iii) H(C) <= P(C) and G(C) <= F(C)", |case| {
            with_setup(case, false, |_, s, r| {
                let p = &s.poset;
                for c in &s.families {
                    for (lo, up) in [(H, P), (G, F)] {
                        let x = apply_tense(lo, p, &s.frame, c)?;
                        let y = apply_tense(up, p, &s.frame, c)?;
                        r.check(&format!("{lo}(C) <= {up}(C)"), slicewise(p, All, x.slices(), y.slices()), || fam(p, c));
                    }
                }
                Ok(())
            })
        }),
        input_prop("(iv) upper operators see LU(C), lower ones UL(C)", |case| {
            with_setup(case, false, |_, s, r| {
                let p = &s.poset;
                for c in &s.families {
                    let sl = c.slices();
                    let lu: Vec<Subset> = sl.iter().map(|&x| p.lu(x)).collect();
                    let ul: Vec<Subset> = sl.iter().map(|&x| p.ul(x)).collect();
                    for op in TenseOp::ALL {
                        let x = apply_tense(op, p, &s.frame, c)?;
                        let (closed, name) = if op.is_upper() { (&lu, "LU") } else { (&ul, "UL") };
                        let y = apply_to_slices(op, p, &s.frame, closed)?;
                        r.check(&format!("{op}(C) = {op}({name}(C))"), x.slices() == y, || fam(p, c));
                    }
                }
                Ok(())
            })
        }),
        input_prop("(v) reflexive frames: H(C) <= C <= P(C) and G(C) <= C <= F(C)", |case| {
            with_setup(case, true, |_, s, r| {
                let p = &s.poset;
                for c in &s.families {
                    let sl = c.slices();
                    for op in TenseOp::ALL {
                        let x = apply_tense(op, p, &s.frame, c)?;
                        let ok = if op.is_upper() {
                            slicewise(p, All, &sl, x.slices())
                        } else {
                            slicewise(p, All, x.slices(), &sl)
                        };
                        r.check(&format!("T3 for {op}"), ok, || fam(p, c));
                    }
                }
                Ok(())
            })
        }),
    ]
}

pub fn th1() -> Vec<Property> {
    vec![
        input_prop("reflexive frames: H*X, G*X <= X <= P*X, F*X for X a tense operator", |case| {
            with_setup(case, true, |_, s, r| {
                let p = &s.poset;
                for b in &s.families {
                    for x in TenseOp::ALL {
                        let xb = apply_tense(x, p, &s.frame, b)?;
                        outer_laws(p, &s.frame, &xb, &format!("X = {x}"), r, || fam(p, b))?;
                    }
                }
                Ok(())
            })
        }),
        input_prop("reflexive frames: H*X, G*X <= X <= P*X, F*X for arbitrary X(B)", |case| {
            with_setup(case, true, |case, s, r| {
                let p = &s.poset;
                for _ in 0..3 {
                    let xb = gen::trajectory(&mut case.rng, p.len(), s.frame.len(), 3);
                    outer_laws(p, &s.frame, &xb, "X arbitrary", r, || {
                        format!("X(B) = {}", display::trajectory(p, &xb))
                    })?;
                }
                Ok(())
            })
        }),
    ]
}

/// `Y ≤ P(φ(Y)), F(φ(Y))` and `H(φ(Y)), G(φ(Y)) ≤ Y` in the ALL order, plus
/// the weaker `≤2` / `≤1` forms.
fn outer_laws(
    p: &Poset,
    f: &TimeFrame,
    y: &Trajectory,
    tag: &str,
    r: &mut CheckReport,
    show: impl Fn() -> String,
) -> Result<()> {
    for outer in TenseOp::ALL {
        let z = apply_tense_trajectory(outer, p, f, y)?;
        let (lhs, rhs, weak) = if outer.is_upper() {
            (y.slices(), z.slices(), Backward)
        } else {
            (z.slices(), y.slices(), Forward)
        };
        let law = if outer.is_upper() {
            format!("X <= {outer}*X")
        } else {
            format!("{outer}*X <= X")
        };
        r.check(&format!("{law} ({tag})"), slicewise(p, All, lhs, rhs), &show);
        r.check(&format!("{law} in {weak} ({tag})"), slicewise(p, weak, lhs, rhs), &show);
    }
    Ok(())
}

/// One side of an inequality: an operator, or a composite `outer * inner`.
#[derive(Clone, Copy)]
enum Side {
    Op(TenseOp),
    Comp(TenseOp, TenseOp),
}

impl Side {
    fn eval(self, p: &Poset, f: &TimeFrame, b: &Family) -> Result<Trajectory> {
        match self {
            Side::Op(x) => apply_tense(x, p, f, b),
            Side::Comp(x, y) => crate::tense::compose(x, y, p, f, b),
        }
    }

    fn name(self) -> String {
        match self {
            Side::Op(x) => x.to_string(),
            Side::Comp(x, y) => format!("{x}*{y}"),
        }
    }
}

const TH2: [(Side, OrderKind, Side); 12] = [
    (Side::Op(P), Backward, Side::Comp(P, F)),
    (Side::Op(F), Backward, Side::Comp(F, P)),
    (Side::Op(H), Forward, Side::Comp(H, P)),
    (Side::Op(G), Forward, Side::Comp(G, P)),
    (Side::Comp(P, H), Backward, Side::Op(P)),
    (Side::Comp(F, H), Backward, Side::Op(F)),
    (Side::Op(H), Forward, Side::Comp(H, F)),
    (Side::Op(G), Forward, Side::Comp(G, F)),
    (Side::Comp(P, G), Backward, Side::Op(P)),
    (Side::Comp(F, G), Backward, Side::Op(F)),
    (Side::Comp(H, G), Forward, Side::Op(H)),
    (Side::Comp(G, H), Forward, Side::Op(G)),
];

pub fn th2() -> Vec<Property> {
    vec![input_prop("reflexive frames: the twelve composite inequalities", |case| {
        with_setup(case, true, |_, s, r| {
            let p = &s.poset;
            for b in &s.families {
                for (lhs, kind, rhs) in TH2 {
                    let x = lhs.eval(p, &s.frame, b)?;
                    let y = rhs.eval(p, &s.frame, b)?;
                    let law = format!("{} {kind} {}", lhs.name(), rhs.name());
                    r.check(&law, slicewise(p, kind, x.slices(), y.slices()), || {
                        format!("{}: {} vs {}", fam(p, b), display::trajectory(p, &x), display::trajectory(p, &y))
                    });
                }
            }
            Ok(())
        })
    })]
}

/// Carrier and time sizes with at most seven propositions, so that every
/// family can be enumerated.
const MICRO: [(usize, usize); 7] = [(2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (2, 2)];

pub fn chaga() -> Vec<Property> {
    vec![prop("Galois condition iff (T1) and (T2), over every family", |case| {
        let (n, m) = MICRO[case.rng.gen_range(0..MICRO.len())];
        let p = gen::bounded_poset(&mut case.rng, n);
        let frames: [TimeFrame; 4] = std::array::from_fn(|_| gen::frame(&mut case.rng, m, false));
        let families = all_families(n, m, 127)?;
        let frame = FrameBundle::new(p.clone(), frames[0].clone())?;
        let mixed = MixedBundle::new(p.clone(), frames.clone())?;
        let op = TenseOp::ALL[case.rng.gen_range(0..4)];
        let time = case.rng.gen_range(0..m);
        let value = gen::subset(&mut case.rng, n, 2);
        let mut bad = Corrupted::new(frame.clone(), op, time, value);
        if case.rng.gen_bool(0.5) {
            bad.only = Some(families[case.rng.gen_range(0..families.len())].clone());
        }
        let bundles: [(&str, &dyn TenseBundle); 3] = [("frame", &frame), ("mixed", &mixed), ("corrupted", &bad)];
        let mut r = CheckReport::new();
        for (name, b) in bundles {
            for (x, y) in [(P, G), (F, H)] {
                let v = galois_cross_check(b, x, y, &families)?;
                r.check(&format!("({x},{y}) on {name} bundle"), v.agrees(), || {
                    format!("Galois {} but (T1) and (T2) {}", v.galois, v.t1_t2)
                });
            }
        }
        Ok(CaseOutcome::from_report(&r, || super::instance_text(&p, &frames[0], &[])))
    })]
}

pub fn dynamic() -> Vec<Property> {
    vec![
        input_prop("frame operators form dynamic pairs (P,G) and (F,H)", |case| {
            with_setup(case, false, |case, s, r| {
                let pool = pool(case, s);
                let b = s.bundle(case.cfg)?;
                r.merge(check_dynamic(&*b, &pool)?);
                Ok(())
            })
        }),
        input_prop("frame operators satisfy the Galois condition", |case| {
            with_setup(case, false, |case, s, r| {
                let pool = pool(case, s);
                let b = s.bundle(case.cfg)?;
                r.merge(check_galois(&*b, P, G, &pool)?);
                r.merge(check_galois(&*b, F, H, &pool)?);
                Ok(())
            })
        }),
        prop("a bundle of four copies of one frame forms dynamic pairs", |case| {
            let p = gen::poset_up_to(&mut case.rng, MAX_ELEMENTS);
            let reflexive = case.rng.gen_bool(0.5);
            let f = gen::frame_up_to(&mut case.rng, MAX_TIMES, reflexive);
            let fams = gen::families(&mut case.rng, p.len(), f.len(), MAX_FAMILY, 3);
            let mixed = MixedBundle::new(p.clone(), [f.clone(), f.clone(), f.clone(), f.clone()])?;
            let b = corrupt(case.cfg, mixed)?;
            let r = check_dynamic(&*b, &fams)?;
            Ok(CaseOutcome::from_report(&r, || super::instance_text(&p, &f, &fams)))
        }),
    ]
}

/// The setup's families together with families above and below them, so
/// that (T1) has comparable pairs to work on.
fn pool(case: &mut Case, s: &Setup) -> Vec<Family> {
    let mut out = s.families.clone();
    for c in &s.families {
        out.push(gen::raise(&mut case.rng, &s.poset, c));
        out.push(gen::raise_some(&mut case.rng, &s.poset, c));
    }
    out
}
