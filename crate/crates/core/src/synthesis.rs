//! Recovering a time-preference relation from four given operators, and the
//! past/future extension of the time set that makes them frame-induced.

use crate::check::CheckReport;
use crate::display;
use crate::error::{Error, Result};
use crate::frame::TimeFrame;
use crate::order::{self, OrderKind};
use crate::subset::Subset;
use crate::tense::{all_families, apply_at, apply_tense, Family, TenseBundle, TenseOp, Trajectory};

/// The four operator outputs for one witness family.
struct Outputs {
    slices: Vec<Subset>,
    ops: [Trajectory; 4],
}

fn outputs<B: TenseBundle + ?Sized>(bundle: &B, b: &Family) -> Result<Outputs> {
    let ops = [
        bundle.apply(TenseOp::P, b)?,
        bundle.apply(TenseOp::F, b)?,
        bundle.apply(TenseOp::H, b)?,
        bundle.apply(TenseOp::G, b)?,
    ];
    Ok(Outputs { slices: b.slices(), ops })
}

/// All `(s, t)` with `H(B)(t) ≤ B(s) ≤ P(B)(t)` and `G(B)(s) ≤ B(t) ≤ F(B)(s)`
/// for every witness `B`, comparing subsets in the ALL order.
///
/// The result is a superset of the relation obtained from all families; the
/// returned frame may fail to be serial.
pub fn induce_relation<B: TenseBundle + ?Sized>(bundle: &B, witnesses: &[Family]) -> Result<TimeFrame> {
    if witnesses.is_empty() {
        return Err(Error::EmptySet("witness list"));
    }
    let p = bundle.poset();
    let m = bundle.time_len();
    let outs = witnesses
        .iter()
        .map(|b| {
            if b.time_len() != m {
                return Err(Error::Mismatch(format!(
                    "witness over {} time points, bundle over {m}",
                    b.time_len()
                )));
            }
            outputs(bundle, b)
        })
        .collect::<Result<Vec<_>>>()?;
    let le = |x: Subset, y: Subset| order::holds(p, OrderKind::All, x, y);
    let mut pairs = Vec::new();
    for s in 0..m {
        for t in 0..m {
            let ok = outs.iter().all(|o| {
                let [pb, fb, hb, gb] = &o.ops;
                let (bs, bt) = (o.slices[s], o.slices[t]);
                le(hb.slice(t), bs) && le(bs, pb.slice(t)) && le(gb.slice(s), bt) && le(bt, fb.slice(s))
            });
            if ok {
                pairs.push((s, t));
            }
        }
    }
    TimeFrame::from_pairs(bundle.time_labels(), &pairs)
}

/// The relation induced over every nonempty family in `A^T`; feasible only
/// when the number of families is at most `cap`.
pub fn induce_relation_exact<B: TenseBundle + ?Sized>(bundle: &B, cap: usize) -> Result<TimeFrame> {
    let families = all_families(bundle.poset().len(), bundle.time_len(), cap)?;
    induce_relation(bundle, &families)
}

/// Compares the operators induced by `relation` with the bundle's own on
/// every family: `P* ≤2 P`, `F* ≤2 F`, `H ≤1 H*`, `G ≤1 G*`, and equality
/// when `expect_equal` is set.
pub fn compare_induced<B: TenseBundle + ?Sized>(
    bundle: &B,
    relation: &TimeFrame,
    families: &[Family],
    expect_equal: bool,
) -> Result<CheckReport> {
    relation.check_serial()?;
    let p = bundle.poset();
    let mut r = CheckReport::new();
    for b in families {
        for op in TenseOp::ALL {
            let given = bundle.apply(op, b)?;
            let induced = apply_tense(op, p, relation, b)?;
            let (kind, lhs, rhs, law) = match op {
                TenseOp::P => (OrderKind::Backward, &induced, &given, "P* <=2 P"),
                TenseOp::F => (OrderKind::Backward, &induced, &given, "F* <=2 F"),
                TenseOp::H => (OrderKind::Forward, &given, &induced, "H <=1 H*"),
                TenseOp::G => (OrderKind::Forward, &given, &induced, "G <=1 G*"),
            };
            let ok = order::first_violation(p, kind, lhs.slices(), rhs.slices()).is_none();
            let detail = || {
                format!(
                    "B = {}: {op}(B) = {}, {op}*(B) = {}",
                    display::family(p, b),
                    display::trajectory(p, &given),
                    display::trajectory(p, &induced)
                )
            };
            r.check(law, ok, detail);
            if expect_equal {
                r.check(&format!("{op}* = {op}"), given == induced, detail);
            }
        }
    }
    Ok(r)
}

/// `T̄ = (T × {1}) ∪ T ∪ (T × {2})` with
/// `R̄ = {((t,1), t)} ∪ R* ∪ {(t, (t,2))}`.
///
/// Point `(t,1)` has index `t`, point `t` index `m + t`, and `(t,2)` index `2m + t`.
#[derive(Debug, Clone)]
pub struct ExtendedFrame {
    frame: TimeFrame,
    base_len: usize,
}

impl ExtendedFrame {
    pub fn new(relation: &TimeFrame) -> Result<ExtendedFrame> {
        let m = relation.len();
        let mut labels = Vec::with_capacity(3 * m);
        labels.extend(relation.labels().iter().map(|l| format!("({l},1)")));
        labels.extend(relation.labels().iter().cloned());
        labels.extend(relation.labels().iter().map(|l| format!("({l},2)")));
        let mut pairs: Vec<(usize, usize)> = (0..m).map(|t| (t, m + t)).collect();
        pairs.extend(relation.pairs().into_iter().map(|(s, t)| (m + s, m + t)));
        pairs.extend((0..m).map(|t| (m + t, 2 * m + t)));
        Ok(ExtendedFrame {
            frame: TimeFrame::from_pairs(labels, &pairs)?,
            base_len: m,
        })
    }

    pub fn frame(&self) -> &TimeFrame {
        &self.frame
    }

    pub fn base_len(&self) -> usize {
        self.base_len
    }

    pub fn len(&self) -> usize {
        self.frame.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frame.is_empty()
    }

    /// The relation restricted to the original points.
    pub fn restriction(&self) -> Vec<(usize, usize)> {
        let m = self.base_len;
        self.frame
            .pairs()
            .into_iter()
            .filter(|&(s, t)| (m..2 * m).contains(&s) && (m..2 * m).contains(&t))
            .map(|(s, t)| (s - m, t - m))
            .collect()
    }

    /// `op` over the extended frame applied to lifted trajectories, restricted to `T`.
    pub fn apply_restricted<B: TenseBundle + ?Sized>(
        &self,
        bundle: &B,
        op: TenseOp,
        lifted: &[Vec<Subset>],
    ) -> Result<Trajectory> {
        let p = bundle.poset();
        let n = self.len();
        let mut union = vec![Subset::EMPTY; n];
        for l in lifted {
            if l.len() != n {
                return Err(Error::Mismatch("lifted trajectory of the wrong length".into()));
            }
            for (u, s) in union.iter_mut().zip(l) {
                *u |= *s;
            }
        }
        let m = self.base_len;
        Trajectory::new((m..2 * m).map(|s| apply_at(op, p, &self.frame, &union, s)).collect())
    }
}

/// `q̄`: past points carry `Max L(P({q})(t))`, future points `Max L(F({q})(t))`.
pub fn lift_bar<B: TenseBundle + ?Sized>(bundle: &B, q: &[usize]) -> Result<Vec<Subset>> {
    lift(bundle, q, TenseOp::P, TenseOp::F)
}

/// `q̂`: past points carry `Min U(H({q})(t))`, future points `Min U(G({q})(t))`.
pub fn lift_hat<B: TenseBundle + ?Sized>(bundle: &B, q: &[usize]) -> Result<Vec<Subset>> {
    lift(bundle, q, TenseOp::H, TenseOp::G)
}

fn lift<B: TenseBundle + ?Sized>(bundle: &B, q: &[usize], past: TenseOp, future: TenseOp) -> Result<Vec<Subset>> {
    let p = bundle.poset();
    let single = Family::singleton(q.to_vec());
    let boundary = |op: TenseOp| -> Result<Vec<Subset>> {
        let out = bundle.apply(op, &single)?;
        Ok(out
            .slices()
            .iter()
            .map(|&s| if op.is_upper() { p.max_lower(s) } else { p.min_upper(s) })
            .collect())
    };
    let mut lifted = boundary(past)?;
    lifted.extend(q.iter().map(|&x| Subset::singleton(x)));
    lifted.extend(boundary(future)?);
    Ok(lifted)
}

/// `B̄ = {q̄ | q ∈ B}`
pub fn lift_family_bar<B: TenseBundle + ?Sized>(bundle: &B, b: &Family) -> Result<Vec<Vec<Subset>>> {
    b.props().iter().map(|q| lift_bar(bundle, q)).collect()
}

/// `B̂ = {q̂ | q ∈ B}`
pub fn lift_family_hat<B: TenseBundle + ?Sized>(bundle: &B, b: &Family) -> Result<Vec<Vec<Subset>>> {
    b.props().iter().map(|q| lift_hat(bundle, q)).collect()
}

/// The four restriction identities `P̄(B̄)|T = P(B)`, `F̄(B̄)|T = F(B)`,
/// `H̄(B̂)|T = H(B)`, `Ḡ(B̂)|T = G(B)` for every family.
pub fn check_extension<B: TenseBundle + ?Sized>(
    bundle: &B,
    ext: &ExtendedFrame,
    families: &[Family],
) -> Result<CheckReport> {
    let p = bundle.poset();
    let mut r = CheckReport::new();
    for b in families {
        let bar = lift_family_bar(bundle, b)?;
        let hat = lift_family_hat(bundle, b)?;
        for op in TenseOp::ALL {
            let lifted = if op.is_upper() { &bar } else { &hat };
            let got = ext.apply_restricted(bundle, op, lifted)?;
            let want = bundle.apply(op, b)?;
            r.check(&format!("extended {op} restricts to {op}"), got == want, || {
                format!(
                    "B = {}: extended gives {}, expected {}",
                    display::family(p, b),
                    display::trajectory(p, &got),
                    display::trajectory(p, &want)
                )
            });
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_one;
    use crate::poset::Poset;
    use crate::tense::{FrameBundle, MixedBundle};

    fn example_bundle() -> (FrameBundle, Vec<Family>) {
        let ex = example_one();
        let fams = vec![
            Family::singleton(ex.p.clone()),
            Family::singleton(ex.q.clone()),
            Family::singleton(ex.r.clone()),
        ];
        (FrameBundle::new(ex.poset, ex.frame).unwrap(), fams)
    }

    #[test]
    fn example_one_relation_contains_frame() {
        let (b, fams) = example_bundle();
        let r = induce_relation(&b, &fams).unwrap();
        assert!(b.frame().is_subrelation_of(&r));
        let cmp = compare_induced(&b, &r, &fams, true).unwrap();
        assert!(cmp.passed(), "{:?}", cmp.violations);
    }

    #[test]
    fn collapsed_operators_admit_everything() {
        let p = Poset::chain(3);
        let f = TimeFrame::chain(2);
        let inner = FrameBundle::new(p.clone(), f).unwrap();
        struct Trivial(FrameBundle);
        impl TenseBundle for Trivial {
            fn poset(&self) -> &Poset {
                self.0.poset()
            }
            fn time_len(&self) -> usize {
                2
            }
            fn apply(&self, op: TenseOp, _: &Family) -> Result<Trajectory> {
                let v = if op.is_upper() { 2 } else { 0 };
                Ok(Trajectory::constant(Subset::singleton(v), 2))
            }
        }
        let fams = all_families(3, 2, 1 << 9).unwrap();
        let r = induce_relation(&Trivial(inner), &fams[..20]).unwrap();
        assert_eq!(r.pairs().len(), 4);
    }

    #[test]
    fn more_witnesses_shrink_relation() {
        let p = Poset::chain(2);
        let frames = [
            TimeFrame::identity(2),
            TimeFrame::chain(2),
            TimeFrame::chain(2).invert(),
            TimeFrame::identity(2),
        ];
        let b = MixedBundle::new(p, frames).unwrap();
        let all = all_families(2, 2, 15).unwrap();
        let few = induce_relation(&b, &all[..3]).unwrap();
        let exact = induce_relation_exact(&b, 15).unwrap();
        assert!(exact.is_subrelation_of(&few));
    }

    #[test]
    fn extension_shape_and_example_row() {
        let (b, _) = example_bundle();
        let ex = example_one();
        let fams = vec![Family::singleton(ex.r.clone())];
        let r = induce_relation(&b, &fams).unwrap();
        let ext = ExtendedFrame::new(&r).unwrap();
        assert_eq!(ext.len(), 9);
        assert_eq!(ext.restriction(), r.pairs());
        let got = ext
            .apply_restricted(&b, TenseOp::P, &lift_family_bar(&b, &fams[0]).unwrap())
            .unwrap();
        assert_eq!(display::trajectory(&ex.poset, &got), "[a, {e,f}, {e,f}]");
        let rep = check_extension(&b, &ext, &fams).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn extension_detects_a_single_corrupted_family() {
        let (inner, fams) = example_bundle();
        let ex = example_one();
        let pq = Family::new(vec![ex.p.clone(), ex.q.clone()]).unwrap();
        let mut b = crate::tense::Corrupted::new(inner, TenseOp::P, 1, Subset::singleton(0));
        b.only = Some(pq.clone());
        let r = induce_relation(&b, &fams).unwrap();
        let ext = ExtendedFrame::new(&r).unwrap();
        let rep = check_extension(&b, &ext, &[pq]).unwrap();
        assert!(rep.fails("extended P restricts to P"));
    }

    #[test]
    fn empty_witnesses_rejected() {
        let (b, _) = example_bundle();
        assert!(induce_relation(&b, &[]).is_err());
    }
}
