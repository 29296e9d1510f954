//! Tense operators `P`, `F`, `H`, `G` on proposition families, the selector
//! map `φ`, composition, and the dynamic-pair and Galois checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::check::CheckReport;
use crate::display;
use crate::error::{Error, Result};
use crate::frame::TimeFrame;
use crate::order::{self, OrderKind};
use crate::poset::Poset;
use crate::subset::Subset;

/// Default bound on `|φ(B)|` when a selector family has to be materialized.
pub const DEFAULT_PHI_CAP: usize = 10_000;

/// A time-indexed element: `values[t]` is an element index.
pub type Proposition = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TenseOp {
    /// "It has at some time been the case that"
    P,
    /// "It will at some time be the case that"
    F,
    /// "It has always been the case that"
    H,
    /// "It will always be the case that"
    G,
}

impl TenseOp {
    pub const ALL: [TenseOp; 4] = [TenseOp::P, TenseOp::F, TenseOp::H, TenseOp::G];

    /// `P` and `H` look at points before `s`.
    pub fn looks_back(self) -> bool {
        matches!(self, TenseOp::P | TenseOp::H)
    }

    /// `P` and `F` take minimal upper bounds; `H` and `G` maximal lower bounds.
    pub fn is_upper(self) -> bool {
        matches!(self, TenseOp::P | TenseOp::F)
    }

    /// Same direction in time, opposite side of the order (`P` ↔ `H`, `F` ↔ `G`).
    pub fn order_dual(self) -> TenseOp {
        match self {
            TenseOp::P => TenseOp::H,
            TenseOp::H => TenseOp::P,
            TenseOp::F => TenseOp::G,
            TenseOp::G => TenseOp::F,
        }
    }

    /// Same side of the order, opposite direction in time (`P` ↔ `F`, `H` ↔ `G`).
    pub fn time_dual(self) -> TenseOp {
        match self {
            TenseOp::P => TenseOp::F,
            TenseOp::F => TenseOp::P,
            TenseOp::H => TenseOp::G,
            TenseOp::G => TenseOp::H,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            TenseOp::P => 'P',
            TenseOp::F => 'F',
            TenseOp::H => 'H',
            TenseOp::G => 'G',
        }
    }

    /// Points whose values feed slice `s`.
    pub fn support(self, f: &TimeFrame, s: usize) -> Subset {
        if self.looks_back() {
            f.predecessors(s)
        } else {
            f.successors(s)
        }
    }

    /// `Min U` or `Max L` of `x`, according to the operator.
    pub fn extremal(self, p: &Poset, x: Subset) -> Subset {
        if self.is_upper() {
            p.min_upper(x)
        } else {
            p.max_lower(x)
        }
    }
}

impl fmt::Display for TenseOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for TenseOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(TenseOp::P),
            "F" | "f" => Ok(TenseOp::F),
            "H" | "h" => Ok(TenseOp::H),
            "G" | "g" => Ok(TenseOp::G),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// A nonempty, duplicate-free set of propositions of one length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    props: Vec<Proposition>,
}

impl Family {
    pub fn new(mut props: Vec<Proposition>) -> Result<Family> {
        if props.is_empty() {
            return Err(Error::EmptySet("proposition family"));
        }
        let m = props[0].len();
        if m == 0 {
            return Err(Error::EmptySet("time set"));
        }
        if props.iter().any(|q| q.len() != m) {
            return Err(Error::Mismatch("propositions of different lengths".into()));
        }
        props.sort();
        props.dedup();
        Ok(Family { props })
    }

    pub fn singleton(q: Proposition) -> Family {
        Family::new(vec![q]).expect("a nonempty proposition")
    }

    /// `{x̄}`: the constant proposition at `x`.
    pub fn constant(x: usize, m: usize) -> Family {
        Family::singleton(vec![x; m])
    }

    pub fn props(&self) -> &[Proposition] {
        &self.props
    }

    pub fn len(&self) -> usize {
        self.props.len()
    }

    pub fn is_empty(&self) -> bool {
        self.props.is_empty()
    }

    pub fn time_len(&self) -> usize {
        self.props[0].len()
    }

    /// `B(t) = {q(t) | q ∈ B}`
    pub fn slice(&self, t: usize) -> Subset {
        self.props.iter().map(|q| q[t]).collect()
    }

    pub fn slices(&self) -> Vec<Subset> {
        (0..self.time_len()).map(|t| self.slice(t)).collect()
    }

    pub fn union(&self, other: &Family) -> Family {
        let mut props = self.props.clone();
        props.extend(other.props.iter().cloned());
        Family::new(props).expect("union of nonempty families")
    }

    pub fn contains(&self, q: &[usize]) -> bool {
        self.props.binary_search_by(|r| r.as_slice().cmp(q)).is_ok()
    }
}

/// A map from time points to nonempty subsets of the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trajectory {
    slices: Vec<Subset>,
}

impl Trajectory {
    pub fn new(slices: Vec<Subset>) -> Result<Trajectory> {
        if slices.is_empty() {
            return Err(Error::EmptySet("time set"));
        }
        if slices.iter().any(|s| s.is_empty()) {
            return Err(Error::EmptySet("trajectory slice"));
        }
        Ok(Trajectory { slices })
    }

    /// Singleton slices `(q(t))_t`.
    pub fn from_proposition(q: &[usize]) -> Trajectory {
        Trajectory {
            slices: q.iter().map(|&x| Subset::singleton(x)).collect(),
        }
    }

    pub fn constant(s: Subset, m: usize) -> Trajectory {
        Trajectory::new(vec![s; m]).expect("nonempty constant slice")
    }

    pub fn slices(&self) -> &[Subset] {
        &self.slices
    }

    pub fn into_slices(self) -> Vec<Subset> {
        self.slices
    }

    pub fn slice(&self, t: usize) -> Subset {
        self.slices[t]
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// `|φ(self)|`, saturating.
    pub fn phi_size(&self) -> usize {
        self.slices
            .iter()
            .fold(1usize, |acc, s| acc.saturating_mul(s.len()))
    }

    /// `φ(self)`: every selector `q` with `q(t) ∈ self(t)` for all `t`.
    pub fn materialize(&self, cap: usize) -> Result<Family> {
        let size = self.phi_size();
        if size > cap {
            return Err(Error::Size {
                what: "selector family",
                size,
                cap,
            });
        }
        let choices: Vec<Vec<usize>> = self.slices.iter().map(|s| s.iter().collect()).collect();
        let mut props = Vec::with_capacity(size);
        let mut idx = vec![0usize; choices.len()];
        loop {
            props.push(idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect());
            let mut k = choices.len();
            loop {
                if k == 0 {
                    return Family::new(props);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

/// `φ(B)`; see [`Trajectory::materialize`].
pub fn materialize_phi(b: &Trajectory, cap: usize) -> Result<Family> {
    b.materialize(cap)
}

fn check_instance(p: &Poset, f: &TimeFrame, m: usize) -> Result<()> {
    f.check_serial()?;
    p.bounds()?;
    if m != f.len() {
        return Err(Error::Mismatch(format!(
            "{m} time values for a frame with {} points",
            f.len()
        )));
    }
    Ok(())
}

/// Closed form on raw slices: `op(φ(B))(s) = Min U / Max L of ⋃{B(t) | t related to s}`.
pub fn apply_to_slices(op: TenseOp, p: &Poset, f: &TimeFrame, slices: &[Subset]) -> Result<Vec<Subset>> {
    check_instance(p, f, slices.len())?;
    Ok((0..f.len()).map(|s| apply_at(op, p, f, slices, s)).collect())
}

/// The closed form at one point, without the seriality check. A point with
/// no related points gathers `∅`, so upper operators give `Min U(∅)` and
/// lower ones `Max L(∅)`.
pub fn apply_at(op: TenseOp, p: &Poset, f: &TimeFrame, slices: &[Subset], s: usize) -> Subset {
    let gathered = op
        .support(f, s)
        .iter()
        .fold(Subset::EMPTY, |acc, t| acc | slices[t]);
    op.extremal(p, gathered)
}

/// `op(B)` for a proposition family, evaluated on the frame `f`.
pub fn apply_tense(op: TenseOp, p: &Poset, f: &TimeFrame, b: &Family) -> Result<Trajectory> {
    Trajectory::new(apply_to_slices(op, p, f, &b.slices())?)
}

/// Normalizes slices to antichains: maximals before an upper operator,
/// minimals before a lower one. Cones do not see the difference.
pub fn normalize(op: TenseOp, p: &Poset, b: &Trajectory) -> Trajectory {
    Trajectory {
        slices: b
            .slices()
            .iter()
            .map(|&s| if op.is_upper() { p.maximals(s) } else { p.minimals(s) })
            .collect(),
    }
}

/// `op(φ(B))` without materializing `φ(B)`.
pub fn apply_tense_trajectory(op: TenseOp, p: &Poset, f: &TimeFrame, b: &Trajectory) -> Result<Trajectory> {
    let b = normalize(op, p, b);
    Trajectory::new(apply_to_slices(op, p, f, b.slices())?)
}

/// `op(⋃ φ(B_i))` for several trajectories at once.
pub fn apply_tense_trajectories(
    op: TenseOp,
    p: &Poset,
    f: &TimeFrame,
    bs: &[Trajectory],
) -> Result<Trajectory> {
    let first = bs.first().ok_or(Error::EmptySet("trajectory list"))?;
    let mut union = vec![Subset::EMPTY; first.len()];
    for b in bs {
        if b.len() != union.len() {
            return Err(Error::Mismatch("trajectories of different lengths".into()));
        }
        for (u, s) in union.iter_mut().zip(b.slices()) {
            *u |= *s;
        }
    }
    Trajectory::new(apply_to_slices(op, p, f, &union)?)
}

/// `(x * y)(B) = x(φ(y(B)))`.
pub fn compose(x: TenseOp, y: TenseOp, p: &Poset, f: &TimeFrame, b: &Family) -> Result<Trajectory> {
    apply_tense_trajectory(x, p, f, &apply_tense(y, p, f, b)?)
}

/// Slicewise upper cone of a family: `U(B)` in the product order on `A^T`.
pub fn family_upper_cone(p: &Poset, b: &Family) -> Vec<Subset> {
    b.slices().into_iter().map(|s| p.upper_cone(s)).collect()
}

/// Slicewise lower cone of a family.
pub fn family_lower_cone(p: &Poset, b: &Family) -> Vec<Subset> {
    b.slices().into_iter().map(|s| p.lower_cone(s)).collect()
}

/// A quadruple of maps from families to trajectories over one poset and time set.
pub trait TenseBundle: Sync {
    fn poset(&self) -> &Poset;

    fn time_len(&self) -> usize;

    fn time_labels(&self) -> Vec<String> {
        (1..=self.time_len()).map(|i| i.to_string()).collect()
    }

    fn apply(&self, op: TenseOp, b: &Family) -> Result<Trajectory>;

    fn phi_cap(&self) -> usize {
        DEFAULT_PHI_CAP
    }

    /// `op(φ(B))`; by default `φ(B)` is materialized.
    fn apply_trajectory(&self, op: TenseOp, b: &Trajectory) -> Result<Trajectory> {
        self.apply(op, &b.materialize(self.phi_cap())?)
    }

    fn compose(&self, x: TenseOp, y: TenseOp, b: &Family) -> Result<Trajectory> {
        self.apply_trajectory(x, &self.apply(y, b)?)
    }
}

/// The operators induced by a single frame.
#[derive(Debug, Clone)]
pub struct FrameBundle {
    poset: Poset,
    frame: TimeFrame,
}

impl FrameBundle {
    pub fn new(poset: Poset, frame: TimeFrame) -> Result<FrameBundle> {
        frame.check_serial()?;
        poset.bounds()?;
        Ok(FrameBundle { poset, frame })
    }

    pub fn frame(&self) -> &TimeFrame {
        &self.frame
    }
}

impl TenseBundle for FrameBundle {
    fn poset(&self) -> &Poset {
        &self.poset
    }

    fn time_len(&self) -> usize {
        self.frame.len()
    }

    fn time_labels(&self) -> Vec<String> {
        self.frame.labels().to_vec()
    }

    fn apply(&self, op: TenseOp, b: &Family) -> Result<Trajectory> {
        apply_tense(op, &self.poset, &self.frame, b)
    }

    fn apply_trajectory(&self, op: TenseOp, b: &Trajectory) -> Result<Trajectory> {
        apply_tense_trajectory(op, &self.poset, &self.frame, b)
    }
}

/// Each operator induced by its own frame over a shared time set.
#[derive(Debug, Clone)]
pub struct MixedBundle {
    poset: Poset,
    frames: [TimeFrame; 4],
}

impl MixedBundle {
    /// `frames` in the order `P, F, H, G`.
    pub fn new(poset: Poset, frames: [TimeFrame; 4]) -> Result<MixedBundle> {
        poset.bounds()?;
        for f in &frames {
            f.check_serial()?;
            if f.len() != frames[0].len() {
                return Err(Error::Mismatch("frames over different time sets".into()));
            }
        }
        Ok(MixedBundle { poset, frames })
    }
}

impl TenseBundle for MixedBundle {
    fn poset(&self) -> &Poset {
        &self.poset
    }

    fn time_len(&self) -> usize {
        self.frames[0].len()
    }

    fn apply(&self, op: TenseOp, b: &Family) -> Result<Trajectory> {
        apply_tense(op, &self.poset, &self.frames[op.index()], b)
    }

    fn apply_trajectory(&self, op: TenseOp, b: &Trajectory) -> Result<Trajectory> {
        apply_tense_trajectory(op, &self.poset, &self.frames[op.index()], b)
    }
}

/// Wraps a bundle and overwrites one operator's value at one time point.
#[derive(Debug, Clone)]
pub struct Corrupted<B> {
    pub inner: B,
    pub op: TenseOp,
    pub time: usize,
    pub value: Subset,
    /// Restrict the corruption to one argument.
    pub only: Option<Family>,
}

impl<B: TenseBundle> Corrupted<B> {
    pub fn new(inner: B, op: TenseOp, time: usize, value: Subset) -> Self {
        Corrupted {
            inner,
            op,
            time,
            value,
            only: None,
        }
    }

    /// The default mutation: upper operators collapse to `{0}`, lower ones to `{1}`.
    pub fn collapse(inner: B, op: TenseOp) -> Result<Self> {
        let (bot, top) = inner.poset().bounds()?;
        let value = Subset::singleton(if op.is_upper() { bot } else { top });
        Ok(Corrupted::new(inner, op, 0, value))
    }
}

impl<B: TenseBundle> TenseBundle for Corrupted<B> {
    fn poset(&self) -> &Poset {
        self.inner.poset()
    }

    fn time_len(&self) -> usize {
        self.inner.time_len()
    }

    fn time_labels(&self) -> Vec<String> {
        self.inner.time_labels()
    }

    fn phi_cap(&self) -> usize {
        self.inner.phi_cap()
    }

    fn apply(&self, op: TenseOp, b: &Family) -> Result<Trajectory> {
        let out = self.inner.apply(op, b)?;
        if op != self.op || self.only.as_ref().is_some_and(|f| f != b) {
            return Ok(out);
        }
        let mut slices = out.into_slices();
        slices[self.time] = self.value;
        Trajectory::new(slices)
    }
}

fn label_pair(x: TenseOp, y: TenseOp) -> String {
    format!("({x},{y})")
}

/// Checks (T0), (T1) and (T2) for the pair `(x, y)`, where `x` is an upper
/// operator (`P` or `F`) and `y` the lower operator it pairs with.
pub fn check_dynamic_pair<B: TenseBundle + ?Sized>(
    bundle: &B,
    x: TenseOp,
    y: TenseOp,
    families: &[Family],
) -> Result<CheckReport> {
    let p = bundle.poset();
    let (bot, top) = p.bounds()?;
    let m = bundle.time_len();
    let pair = label_pair(x, y);
    let mut r = CheckReport::new();

    let y_top = bundle.apply(y, &Family::constant(top, m))?;
    r.check(&format!("{pair} T0 {y}(1)=1"), y_top == Trajectory::constant(Subset::singleton(top), m), || {
        format!("{y}(1) = {}", display::trajectory(p, &y_top))
    });
    let x_bot = bundle.apply(x, &Family::constant(bot, m))?;
    r.check(&format!("{pair} T0 {x}(0)=0"), x_bot == Trajectory::constant(Subset::singleton(bot), m), || {
        format!("{x}(0) = {}", display::trajectory(p, &x_bot))
    });

    let xs = families
        .iter()
        .map(|c| bundle.apply(x, c))
        .collect::<Result<Vec<_>>>()?;
    let ys = families
        .iter()
        .map(|c| bundle.apply(y, c))
        .collect::<Result<Vec<_>>>()?;
    let cap = bundle.phi_cap();

    for (i, c) in families.iter().enumerate() {
        for (j, d) in families.iter().enumerate() {
            if order::compare_families(p, OrderKind::Forward, c, d)? {
                let ok = order::compare_trajectories(p, OrderKind::Backward, &xs[i], &xs[j])?;
                r.check(&format!("{pair} T1(i)"), ok, || {
                    format!(
                        "C = {} <=1 D = {} but {x}(C) = {} is not <=2 {x}(D) = {}",
                        display::family(p, c),
                        display::family(p, d),
                        display::trajectory(p, &xs[i]),
                        display::trajectory(p, &xs[j])
                    )
                });
            }
            if order::compare_families(p, OrderKind::Backward, c, d)? {
                let ok = order::compare_trajectories(p, OrderKind::Forward, &ys[i], &ys[j])?;
                r.check(&format!("{pair} T1(ii)"), ok, || {
                    format!(
                        "C = {} <=2 D = {} but {y}(C) = {} is not <=1 {y}(D) = {}",
                        display::family(p, c),
                        display::family(p, d),
                        display::trajectory(p, &ys[i]),
                        display::trajectory(p, &ys[j])
                    )
                });
            }
        }
        let yx = bundle.apply_trajectory(y, &xs[i])?;
        let ok = order::compare_family_trajectory(p, OrderKind::Forward, c, &yx, cap)?;
        r.check(&format!("{pair} T2 C<=1 ({y}*{x})(C)"), ok, || {
            format!(
                "C = {}, ({y}*{x})(C) = {}",
                display::family(p, c),
                display::trajectory(p, &yx)
            )
        });
        let xy = bundle.apply_trajectory(x, &ys[i])?;
        let ok = order::compare_trajectory_family(p, OrderKind::Backward, &xy, c, cap)?;
        r.check(&format!("{pair} T2 ({x}*{y})(C)<=2 C"), ok, || {
            format!(
                "C = {}, ({x}*{y})(C) = {}",
                display::family(p, c),
                display::trajectory(p, &xy)
            )
        });
    }
    Ok(r)
}

/// Both dynamic pairs `(P, G)` and `(F, H)`.
pub fn check_dynamic<B: TenseBundle + ?Sized>(bundle: &B, families: &[Family]) -> Result<CheckReport> {
    let mut r = check_dynamic_pair(bundle, TenseOp::P, TenseOp::G, families)?;
    r.merge(check_dynamic_pair(bundle, TenseOp::F, TenseOp::H, families)?);
    Ok(r)
}

/// Checks `x(C) ≤2 D ⟺ C ≤1 y(D)` over all pairs of supplied families.
pub fn check_galois<B: TenseBundle + ?Sized>(
    bundle: &B,
    x: TenseOp,
    y: TenseOp,
    families: &[Family],
) -> Result<CheckReport> {
    let p = bundle.poset();
    let cap = bundle.phi_cap();
    let pair = label_pair(x, y);
    let xs = families
        .iter()
        .map(|c| bundle.apply(x, c))
        .collect::<Result<Vec<_>>>()?;
    let ys = families
        .iter()
        .map(|c| bundle.apply(y, c))
        .collect::<Result<Vec<_>>>()?;
    let mut r = CheckReport::new();
    for (i, c) in families.iter().enumerate() {
        for (j, d) in families.iter().enumerate() {
            let left = order::compare_trajectory_family(p, OrderKind::Backward, &xs[i], d, cap)?;
            let right = order::compare_family_trajectory(p, OrderKind::Forward, c, &ys[j], cap)?;
            r.check(&format!("{pair} Galois"), left == right, || {
                format!(
                    "C = {}, D = {}: {x}(C) <=2 D is {left}, C <=1 {y}(D) is {right}",
                    display::family(p, c),
                    display::family(p, d)
                )
            });
        }
    }
    Ok(r)
}

/// Galois verdict versus (T1)∧(T2) verdict for the pair `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GaloisCrossCheck {
    pub galois: bool,
    pub t1_t2: bool,
}

impl GaloisCrossCheck {
    pub fn agrees(&self) -> bool {
        self.galois == self.t1_t2
    }
}

pub fn galois_cross_check<B: TenseBundle + ?Sized>(
    bundle: &B,
    x: TenseOp,
    y: TenseOp,
    families: &[Family],
) -> Result<GaloisCrossCheck> {
    let galois = check_galois(bundle, x, y, families)?.passed();
    let dynamic = check_dynamic_pair(bundle, x, y, families)?;
    let t1_t2 = !dynamic
        .violations
        .iter()
        .any(|v| v.law.contains("T1") || v.law.contains("T2"));
    Ok(GaloisCrossCheck { galois, t1_t2 })
}

/// Every nonempty family over `A^T`, if there are at most `cap` of them.
pub fn all_families(n: usize, m: usize, cap: usize) -> Result<Vec<Family>> {
    let props = all_propositions(n, m, 20)?;
    let count = (1usize << props.len()) - 1;
    if count > cap {
        return Err(Error::Size {
            what: "family enumeration",
            size: count,
            cap,
        });
    }
    Ok(Subset::all_subsets(props.len())
        .skip(1)
        .map(|s| Family::new(s.iter().map(|i| props[i].clone()).collect()).unwrap())
        .collect())
}

/// Every proposition in `A^T`, in lexicographic order.
pub fn all_propositions(n: usize, m: usize, cap: usize) -> Result<Vec<Proposition>> {
    let size = (0..m).try_fold(1usize, |acc, _| acc.checked_mul(n)).unwrap_or(usize::MAX);
    if size > cap {
        return Err(Error::Size {
            what: "proposition enumeration",
            size,
            cap,
        });
    }
    let all = Trajectory::new(vec![Subset::full(n); m])?;
    Ok(all.materialize(size)?.props().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_one, figure_one};

    fn traj(p: &Poset, cells: &[&[&str]]) -> Trajectory {
        Trajectory::new(
            cells
                .iter()
                .map(|c| c.iter().map(|l| p.index_of(l).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn example_one_rows() {
        let ex = example_one();
        let (p, f) = (&ex.poset, &ex.frame);
        let fam = |q: &Proposition| Family::singleton(q.clone());
        let g = |op, q| apply_tense(op, p, f, &fam(q)).unwrap();
        assert_eq!(g(TenseOp::G, &ex.p), traj(p, &[&["b"], &["b"], &["e"]]));
        assert_eq!(g(TenseOp::G, &ex.q), traj(p, &[&["b", "c"], &["b", "c"], &["g"]]));
        assert_eq!(g(TenseOp::H, &ex.p), traj(p, &[&["e"], &["b"], &["b"]]));
        assert_eq!(g(TenseOp::H, &ex.q), traj(p, &[&["f"], &["f"], &["b", "c"]]));
        assert_eq!(g(TenseOp::P, &ex.p), traj(p, &[&["e"], &["1"], &["1"]]));
        assert_eq!(g(TenseOp::P, &ex.q), traj(p, &[&["f"], &["f"], &["1"]]));
        assert_eq!(g(TenseOp::P, &ex.r), traj(p, &[&["a"], &["e", "f"], &["e", "f"]]));
        assert_eq!(g(TenseOp::F, &ex.p), traj(p, &[&["1"], &["1"], &["e"]]));
        assert_eq!(g(TenseOp::F, &ex.q), traj(p, &[&["1"], &["1"], &["g"]]));
        let pp = compose(TenseOp::P, TenseOp::P, p, f, &fam(&ex.r)).unwrap();
        assert_eq!(pp, traj(p, &[&["a"], &["1"], &["1"]]));
    }

    #[test]
    fn identity_frame_is_identity_on_singletons() {
        let p = figure_one();
        let f = TimeFrame::identity(3);
        let q = vec![1, 4, 7];
        for op in TenseOp::ALL {
            let out = apply_tense(op, &p, &f, &Family::singleton(q.clone())).unwrap();
            assert_eq!(out, Trajectory::from_proposition(&q));
        }
        let gp = compose(TenseOp::G, TenseOp::P, &p, &f, &Family::singleton(q.clone())).unwrap();
        assert_eq!(gp, Trajectory::from_proposition(&q));
    }

    #[test]
    fn non_serial_and_unbounded_rejected() {
        let p = figure_one();
        let f = TimeFrame::from_pairs(vec!["t".into()], &[]).unwrap();
        let b = Family::singleton(vec![0]);
        assert!(matches!(apply_tense(TenseOp::P, &p, &f, &b), Err(Error::NonSerial(_))));
        let anti = Poset::from_covers(vec!["x".into(), "y".into()], &[]).unwrap();
        let f = TimeFrame::identity(1);
        assert_eq!(apply_tense(TenseOp::P, &anti, &f, &b), Err(Error::NotBounded));
    }

    #[test]
    fn phi_sizes() {
        let p = figure_one();
        let t = traj(&p, &[&["a"], &["e", "f"], &["b", "c"]]);
        let phi = t.materialize(100).unwrap();
        assert_eq!(phi.len(), 4);
        assert!(matches!(t.materialize(3), Err(Error::Size { .. })));
        let single = Trajectory::from_proposition(&[1, 2, 3]);
        assert_eq!(single.materialize(1).unwrap(), Family::singleton(vec![1, 2, 3]));
    }

    #[test]
    fn closed_form_matches_materialized() {
        let ex = example_one();
        let (p, f) = (&ex.poset, &ex.frame);
        let t = traj(p, &[&["a"], &["e", "f"], &["e", "f"]]);
        for op in TenseOp::ALL {
            let closed = apply_tense_trajectory(op, p, f, &t).unwrap();
            let slow = apply_tense(op, p, f, &t.materialize(100).unwrap()).unwrap();
            assert_eq!(closed, slow, "{op}");
        }
        let pt = apply_tense_trajectory(TenseOp::P, p, f, &t).unwrap();
        assert_eq!(pt.slice(2), Subset::singleton(p.index_of("1").unwrap()));
    }

    #[test]
    fn example_one_is_dynamic_and_galois() {
        let ex = example_one();
        let bundle = FrameBundle::new(ex.poset.clone(), ex.frame.clone()).unwrap();
        let fams: Vec<Family> = [&ex.p, &ex.q, &ex.r]
            .iter()
            .map(|q| Family::singleton((*q).clone()))
            .collect();
        let r = check_dynamic(&bundle, &fams).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        for (x, y) in [(TenseOp::P, TenseOp::G), (TenseOp::F, TenseOp::H)] {
            assert!(check_galois(&bundle, x, y, &fams).unwrap().passed());
        }
    }

    #[test]
    fn corruption_is_detected() {
        let ex = example_one();
        let bundle = FrameBundle::new(ex.poset.clone(), ex.frame.clone()).unwrap();
        let bad = Corrupted::collapse(bundle, TenseOp::P).unwrap();
        let fams = vec![Family::singleton(ex.p.clone())];
        let r = check_dynamic(&bad, &fams).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn family_enumeration() {
        assert_eq!(all_families(2, 2, 100).unwrap().len(), 15);
        assert!(all_families(3, 3, 1000).is_err());
        assert_eq!(all_propositions(3, 2, 9).unwrap().len(), 9);
    }
}
