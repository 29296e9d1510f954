//! Slow reference implementations over `BTreeSet`s, written straight from the
//! definitions. They read only the order relation `≤` and the frame relation,
//! never the cached cones or the closed forms used elsewhere.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::frame::TimeFrame;
use crate::poset::Poset;
use crate::residuated::ResiduatedPoset;
use crate::subset::Subset;
use crate::tense::{Family, TenseOp};

pub type Set = BTreeSet<usize>;

/// One optimized-versus-oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub operation: String,
    pub instance: String,
    pub optimized: String,
    pub oracle: String,
    pub agree: bool,
}

impl OracleReport {
    pub fn new(operation: &str, instance: String, optimized: String, oracle: String) -> OracleReport {
        let agree = optimized == oracle;
        OracleReport {
            operation: operation.to_string(),
            instance,
            optimized,
            oracle,
            agree,
        }
    }
}

pub fn to_set(s: Subset) -> Set {
    s.iter().collect()
}

pub fn from_set(s: &Set) -> Subset {
    s.iter().copied().collect()
}

fn carrier(p: &Poset) -> impl Iterator<Item = usize> {
    0..p.len()
}

pub fn lower(p: &Poset, x: &Set) -> Set {
    carrier(p).filter(|&a| x.iter().all(|&b| p.leq(a, b))).collect()
}

pub fn upper(p: &Poset, x: &Set) -> Set {
    carrier(p).filter(|&a| x.iter().all(|&b| p.leq(b, a))).collect()
}

pub fn max(p: &Poset, x: &Set) -> Set {
    x.iter()
        .copied()
        .filter(|&a| !x.iter().any(|&b| b != a && p.leq(a, b)))
        .collect()
}

pub fn min(p: &Poset, x: &Set) -> Set {
    x.iter()
        .copied()
        .filter(|&a| !x.iter().any(|&b| b != a && p.leq(b, a)))
        .collect()
}

/// `op(B)(s)` read off the definition: gather `q(t)` for `q ∈ B` and the
/// related `t`, then take `Min U` or `Max L`.
pub fn tense(op: TenseOp, p: &Poset, f: &TimeFrame, b: &[Vec<usize>]) -> Vec<Set> {
    let m = f.len();
    (0..m)
        .map(|s| {
            let mut gathered = Set::new();
            for t in 0..m {
                let related = if op.looks_back() { f.related(t, s) } else { f.related(s, t) };
                if related {
                    gathered.extend(b.iter().map(|q| q[t]));
                }
            }
            if op.is_upper() {
                min(p, &upper(p, &gathered))
            } else {
                max(p, &lower(p, &gathered))
            }
        })
        .collect()
}

/// Every proposition choosing one element per slice.
pub fn phi(slices: &[Set]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for s in slices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                s.iter().map(move |&x| {
                    let mut q = prefix.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// `(x * y)(B)` with `φ` spelled out.
pub fn compose(x: TenseOp, y: TenseOp, p: &Poset, f: &TimeFrame, b: &[Vec<usize>]) -> Vec<Set> {
    tense(x, p, f, &phi(&tense(y, p, f, b)))
}

pub fn odot(p: &Poset, x: usize, y: usize) -> Set {
    max(p, &lower(p, &Set::from([x, y])))
}

/// Scans every `z` for `x ⊙ z ≤ y`.
pub fn imp(p: &Poset, x: usize, y: usize) -> Set {
    let ok: Set = carrier(p)
        .filter(|&z| odot(p, x, z).iter().all(|&w| p.leq(w, y)))
        .collect();
    max(p, &ok)
}

pub fn set_odot(p: &Poset, b: &Set, c: &Set) -> Set {
    let raw: Set = b.iter().flat_map(|&x| c.iter().flat_map(move |&y| odot(p, x, y))).collect();
    max(p, &lower(p, &upper(p, &raw)))
}

pub fn set_imp(p: &Poset, b: &Set, c: &Set) -> Set {
    let target = lower(p, &upper(p, c));
    let ok: Set = carrier(p)
        .filter(|&a| set_odot(p, &Set::from([a]), b).is_subset(&target))
        .collect();
    max(p, &ok)
}

/// `B ⊡ C` on a residuated poset.
pub fn boxdot(rp: &ResiduatedPoset, b: &Set, c: &Set) -> Set {
    let p = rp.base();
    let raw: Set = b.iter().flat_map(|&x| c.iter().map(move |&y| rp.times(x, y))).collect();
    max(p, &lower(p, &upper(p, &raw)))
}

/// `B ⇒ C` on a residuated poset.
pub fn double_arrow(rp: &ResiduatedPoset, b: &Set, c: &Set) -> Set {
    let p = rp.base();
    let mut acc: Set = carrier(p).collect();
    for &x in b {
        for z in upper(p, c) {
            let l = lower(p, &Set::from([rp.arrow(x, z)]));
            acc = acc.intersection(&l).copied().collect();
        }
    }
    min(p, &upper(p, &acc))
}

/// Fixed points of `LU`.
pub fn closed_sets(p: &Poset) -> Vec<Set> {
    let n = p.len();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << n) {
        let s: Set = (0..n).filter(|i| bits >> i & 1 == 1).collect();
        if lower(p, &upper(p, &s)) == s {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| from_set(a).bits().cmp(&from_set(b).bits())));
    out
}

fn all_leq(p: &Poset, x: &Set, y: &Set) -> bool {
    x.iter().all(|&a| y.iter().all(|&b| p.leq(a, b)))
}

/// The induced relation over every nonempty family in `A^T`, using
/// `apply(op, family)` for the operators.
pub fn exact_relation(
    p: &Poset,
    m: usize,
    apply: impl Fn(TenseOp, &Family) -> Vec<Set>,
) -> BTreeSet<(usize, usize)> {
    let all: Vec<Set> = vec![carrier(p).collect(); m];
    let props = phi(&all);
    let mut rel: BTreeSet<(usize, usize)> = (0..m).flat_map(|s| (0..m).map(move |t| (s, t))).collect();
    for bits in 1u64..(1u64 << props.len()) {
        let chosen: Vec<Vec<usize>> = (0..props.len())
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| props[i].clone())
            .collect();
        let fam = Family::new(chosen.clone()).expect("nonempty");
        let slice = |t: usize| -> Set { chosen.iter().map(|q| q[t]).collect() };
        let (pb, fb, hb, gb) = (
            apply(TenseOp::P, &fam),
            apply(TenseOp::F, &fam),
            apply(TenseOp::H, &fam),
            apply(TenseOp::G, &fam),
        );
        rel.retain(|&(s, t)| {
            let (bs, bt) = (slice(s), slice(t));
            all_leq(p, &hb[t], &bs) && all_leq(p, &bs, &pb[t]) && all_leq(p, &gb[s], &bt) && all_leq(p, &bt, &fb[s])
        });
    }
    rel
}
