//! Finite posets stored as bit-packed relation matrices.
//!
//! Element indices are dense (`0..n`); labels are only surface syntax. Every
//! query the rest of the crate makes is a cone query, so the order is kept as
//! a full up-set/down-set matrix rather than as covers.

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_CARRIER};

/// Default bound on carrier size for checks that enumerate all subsets.
pub const DEFAULT_ENUM_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationMode {
    /// Pairs are covers (or any generating pairs); the order is their
    /// reflexive-transitive closure.
    Covers,
    /// Pairs are the complete order relation, reflexive pairs included.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `up[x]` = `{y | x <= y}`
    up: Vec<Subset>,
    /// `down[x]` = `{y | y <= x}`
    down: Vec<Subset>,
    bottom: Option<usize>,
    top: Option<usize>,
    involution: Option<Vec<usize>>,
}

/// Builds a poset from labels and label pairs `(x, y)` meaning `x <= y`.
pub fn build_poset<S: AsRef<str>>(
    labels: &[S],
    pairs: &[(S, S)],
    mode: RelationMode,
) -> Result<Poset> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    check_labels(&labels)?;
    let lookup = |s: &str| {
        labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    };
    let idx = pairs
        .iter()
        .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
        .collect::<Result<Vec<_>>>()?;
    match mode {
        RelationMode::Covers => Poset::from_covers(labels, &idx),
        RelationMode::Full => Poset::from_relation(labels, &idx),
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::Relation("a poset needs at least one element".into()));
    }
    if labels.len() > MAX_CARRIER {
        return Err(Error::Size {
            what: "carrier",
            size: labels.len(),
            cap: MAX_CARRIER,
        });
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl Poset {
    /// Reflexive-transitive closure of `covers`; fails on a cycle.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in covers {
            check_index(a, n)?;
            check_index(b, n)?;
            up[a].insert(b);
        }
        // Warshall on rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row |= row_k;
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    let (a, b) = (a.min(b), a.max(b));
                    return Err(Error::Cycle {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
            }
        }
        Ok(Poset::from_up(labels, up))
    }

    /// Takes `pairs` as the whole relation and checks the order axioms.
    pub fn from_relation(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut up = vec![Subset::EMPTY; n];
        for &(a, b) in pairs {
            check_index(a, n)?;
            check_index(b, n)?;
            up[a].insert(b);
        }
        for (x, row) in up.iter().enumerate() {
            if !row.contains(x) {
                return Err(Error::Relation(format!(
                    "not reflexive: {0} <= {0} is missing",
                    labels[x]
                )));
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::Relation(format!(
                        "not antisymmetric: {} and {}",
                        labels[x], labels[y]
                    )));
                }
                if !up[y].is_subset(up[x]) {
                    let z = up[y].difference(up[x]).first().unwrap();
                    return Err(Error::Relation(format!(
                        "not transitive: {} <= {} <= {} but not {} <= {}",
                        labels[x], labels[y], labels[z], labels[x], labels[z]
                    )));
                }
            }
        }
        Ok(Poset::from_up(labels, up))
    }

    /// `up` must already be a valid order.
    fn from_up(labels: Vec<String>, up: Vec<Subset>) -> Poset {
        let n = labels.len();
        let mut down = vec![Subset::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let full = Subset::full(n);
        let bottom = (0..n).find(|&x| up[x] == full);
        let top = (0..n).find(|&x| down[x] == full);
        Poset {
            labels,
            up,
            down,
            bottom,
            top,
            involution: None,
        }
    }

    /// Attaches an antitone involution given as an index map.
    pub fn with_involution(mut self, map: Vec<usize>) -> Result<Poset> {
        let n = self.len();
        if map.len() != n {
            return Err(Error::Involution(format!(
                "map has {} entries for {} elements",
                map.len(),
                n
            )));
        }
        for x in 0..n {
            check_index(map[x], n)?;
            if map[map[x]] != x {
                return Err(Error::Involution(format!(
                    "{}'' is not {}",
                    self.labels[x], self.labels[x]
                )));
            }
        }
        for x in 0..n {
            for y in self.up[x].iter() {
                if !self.leq(map[y], map[x]) {
                    return Err(Error::Involution(format!(
                        "not antitone: {} <= {} but {}' is not below {}'",
                        self.labels[x], self.labels[y], self.labels[y], self.labels[x]
                    )));
                }
            }
        }
        self.involution = Some(map);
        Ok(self)
    }

    /// Attaches an involution from label pairs `x:y`; each pair also sets `y' = x`.
    pub fn with_involution_pairs<S: AsRef<str>>(self, pairs: &[(S, S)]) -> Result<Poset> {
        let n = self.len();
        let mut map: Vec<Option<usize>> = vec![None; n];
        for (a, b) in pairs {
            let a_i = self.index_of(a.as_ref()).ok_or_else(|| Error::UnknownLabel(a.as_ref().into()))?;
            let b_i = self.index_of(b.as_ref()).ok_or_else(|| Error::UnknownLabel(b.as_ref().into()))?;
            for (x, y) in [(a_i, b_i), (b_i, a_i)] {
                match map[x] {
                    Some(prev) if prev != y => {
                        return Err(Error::Involution(format!(
                            "{} is mapped to both {} and {}",
                            self.labels[x], self.labels[prev], self.labels[y]
                        )))
                    }
                    _ => map[x] = Some(y),
                }
            }
        }
        let map = map
            .iter()
            .enumerate()
            .map(|(x, m)| {
                m.ok_or_else(|| Error::Involution(format!("{} has no image", self.labels[x])))
            })
            .collect::<Result<Vec<_>>>()?;
        self.with_involution(map)
    }

    /// The chain `0 < 1 < ... < n-1`, labelled by position.
    pub fn chain(n: usize) -> Poset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(labels, &covers).expect("chains are posets")
    }

    /// The Boolean lattice of subsets of a `k`-set; element `i` is the bitmask `i`.
    pub fn boolean(k: usize) -> Poset {
        let n = 1usize << k;
        let labels = (0..n)
            .map(|i| {
                if k == 0 {
                    "e".to_string()
                } else {
                    format!("b{:0width$b}", i, width = k)
                }
            })
            .collect();
        let pairs: Vec<_> = (0..n)
            .flat_map(|a| (0..n).filter(move |&b| a & b == a).map(move |b| (a, b)))
            .collect();
        let p = Poset::from_relation(labels, &pairs).expect("boolean lattices are posets");
        let complement: Vec<usize> = (0..n).map(|i| !i & (n - 1)).collect();
        p.with_involution(complement).expect("complement is antitone")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    pub fn down_set(&self, x: usize) -> Subset {
        self.down[x]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom.is_some() && self.top.is_some()
    }

    /// `(bottom, top)`, or [`Error::NotBounded`].
    pub fn bounds(&self) -> Result<(usize, usize)> {
        match (self.bottom, self.top) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(Error::NotBounded),
        }
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    /// Pointwise image of a subset under the involution.
    pub fn prime(&self, x: Subset) -> Option<Subset> {
        let map = self.involution.as_ref()?;
        Some(x.iter().map(|i| map[i]).collect())
    }

    /// `L(X)`: elements below every member of `X`. `L(∅)` is the whole carrier.
    pub fn lower_cone(&self, x: Subset) -> Subset {
        x.iter().fold(self.full(), |acc, i| acc & self.down[i])
    }

    /// `U(X)`: elements above every member of `X`. `U(∅)` is the whole carrier.
    pub fn upper_cone(&self, x: Subset) -> Subset {
        x.iter().fold(self.full(), |acc, i| acc & self.up[i])
    }

    pub fn maximals(&self, x: Subset) -> Subset {
        x.iter()
            .filter(|&i| (self.up[i] & x) == Subset::singleton(i))
            .collect()
    }

    pub fn minimals(&self, x: Subset) -> Subset {
        x.iter()
            .filter(|&i| (self.down[i] & x) == Subset::singleton(i))
            .collect()
    }

    /// `Min U(X)`
    pub fn min_upper(&self, x: Subset) -> Subset {
        self.minimals(self.upper_cone(x))
    }

    /// `Max L(X)`
    pub fn max_lower(&self, x: Subset) -> Subset {
        self.maximals(self.lower_cone(x))
    }

    /// `LU(X)`
    pub fn lu(&self, x: Subset) -> Subset {
        self.lower_cone(self.upper_cone(x))
    }

    /// `UL(X)`
    pub fn ul(&self, x: Subset) -> Subset {
        self.upper_cone(self.lower_cone(x))
    }

    pub fn is_antichain(&self, x: Subset) -> bool {
        x.iter().all(|i| (self.up[i] & x) == Subset::singleton(i))
    }

    /// The least upper bound of `{x, y}` if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        single(self.min_upper(Subset::singleton(x) | Subset::singleton(y)))
    }

    /// The greatest lower bound of `{x, y}` if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        single(self.max_lower(Subset::singleton(x) | Subset::singleton(y)))
    }

    /// Hasse diagram edges, recomputed from the relation.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            let above = self.up[x].difference(Subset::singleton(x));
            for y in above.iter() {
                let between = above & self.down[y].difference(Subset::singleton(y));
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// True iff the declared involution is a complementation:
    /// `x ∨ x' = 1` and `x ∧ x' = 0` for every `x`.
    pub fn is_complementation(&self) -> bool {
        let (Some(map), Some(bot), Some(top)) = (&self.involution, self.bottom, self.top) else {
            return false;
        };
        (0..self.len()).all(|x| {
            self.join(x, map[x]) == Some(top) && self.meet(x, map[x]) == Some(bot)
        })
    }

    /// Exhaustive MUB/MLB-completeness check over every nonempty subset.
    pub fn is_mlub_complete(&self, cap: usize) -> Result<bool> {
        if self.len() > cap {
            return Err(Error::Size {
                what: "carrier for subset enumeration",
                size: self.len(),
                cap,
            });
        }
        for m in Subset::all_subsets(self.len()).skip(1) {
            let uppers = self.upper_cone(m);
            let mubs = self.minimals(uppers);
            if uppers.iter().any(|x| !mubs.intersects(self.down[x])) {
                return Ok(false);
            }
            let lowers = self.lower_cone(m);
            let mlbs = self.maximals(lowers);
            if lowers.iter().any(|x| !mlbs.intersects(self.up[x])) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The order-dual poset.
    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
            bottom: self.top,
            top: self.bottom,
            involution: self.involution.clone(),
        }
    }

    /// Isomorphic copy in which old element `x` becomes element `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        let n = self.len();
        let mut seen = Subset::EMPTY;
        for &p in perm {
            check_index(p, n)?;
            seen.insert(p);
        }
        if perm.len() != n || seen.len() != n {
            return Err(Error::Mismatch("relabelling is not a permutation".into()));
        }
        let mut labels = vec![String::new(); n];
        let mut up = vec![Subset::EMPTY; n];
        for x in 0..n {
            labels[perm[x]] = self.labels[x].clone();
            up[perm[x]] = self.up[x].iter().map(|y| perm[y]).collect();
        }
        let mut p = Poset::from_up(labels, up);
        if let Some(map) = &self.involution {
            let mut m = vec![0; n];
            for x in 0..n {
                m[perm[x]] = perm[map[x]];
            }
            p.involution = Some(m);
        }
        Ok(p)
    }
}

fn single(s: Subset) -> Option<usize> {
    if s.len() == 1 {
        s.first()
    } else {
        None
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i < n {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("element index {i} out of range for {n} elements")))
    }
}

/// A finite cartesian product with the componentwise order.
#[derive(Debug, Clone)]
pub struct ProductPoset {
    pub poset: Poset,
    dims: Vec<usize>,
}

impl ProductPoset {
    pub fn new(factors: &[Poset], cap: usize) -> Result<ProductPoset> {
        if factors.is_empty() {
            return Err(Error::EmptySet("product factor list"));
        }
        let cap = cap.min(MAX_CARRIER);
        let dims: Vec<usize> = factors.iter().map(Poset::len).collect();
        let size = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .filter(|&s| s <= cap)
            .ok_or(Error::Size {
                what: "product carrier",
                size: dims.iter().fold(1usize, |a, &d| a.saturating_mul(d)),
                cap,
            })?;
        let coords = |mut i: usize| {
            let mut c = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                c[k] = i % dims[k];
                i /= dims[k];
            }
            c
        };
        let all: Vec<Vec<usize>> = (0..size).map(coords).collect();
        let mut labels: Vec<String> = all
            .iter()
            .map(|c| {
                c.iter()
                    .zip(factors)
                    .map(|(&x, f)| f.label(x))
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        if check_labels(&labels).is_err() {
            labels = (0..size).map(|i| format!("p{i}")).collect();
        }
        let up = all
            .iter()
            .map(|a| {
                (0..size)
                    .filter(|&j| {
                        let b = &all[j];
                        a.iter().zip(b).zip(factors).all(|((&x, &y), f)| f.leq(x, y))
                    })
                    .collect()
            })
            .collect();
        let mut poset = Poset::from_up(labels, up);
        if factors.iter().all(|f| f.involution.is_some()) {
            let map = all
                .iter()
                .map(|c| {
                    let img: Vec<usize> = c
                        .iter()
                        .zip(factors)
                        .map(|(&x, f)| f.involution.as_ref().unwrap()[x])
                        .collect();
                    index_of_coords(&dims, &img)
                })
                .collect();
            poset.involution = Some(map);
        }
        Ok(ProductPoset { poset, dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn coords(&self, mut i: usize) -> Vec<usize> {
        let mut c = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            c[k] = i % self.dims[k];
            i /= self.dims[k];
        }
        c
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        index_of_coords(&self.dims, coords)
    }

    /// `{m(i) | m ∈ M}` for factor `i`.
    pub fn project(&self, m: Subset, factor: usize) -> Subset {
        m.iter().map(|x| self.coords(x)[factor]).collect()
    }

    /// The product set `X_0 × X_1 × ...` of per-factor subsets.
    pub fn product_set(&self, parts: &[Subset]) -> Subset {
        let mut out = Subset::EMPTY;
        for i in 0..self.poset.len() {
            if self.coords(i).iter().zip(parts).all(|(&c, s)| s.contains(c)) {
                out.insert(i);
            }
        }
        out
    }
}

fn index_of_coords(dims: &[usize], coords: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (&c, &d)| acc * d + c)
}

/// Finite cartesian product with the componentwise order.
pub fn product(factors: &[Poset], cap: usize) -> Result<ProductPoset> {
    ProductPoset::new(factors, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::figure_one;

    fn set(p: &Poset, labels: &[&str]) -> Subset {
        labels.iter().map(|l| p.index_of(l).unwrap()).collect()
    }

    #[test]
    fn two_chain_is_bounded() {
        let p = build_poset(&["0", "1"], &[("0", "1")], RelationMode::Covers).unwrap();
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(1));
        assert!(p.lt(0, 1));
    }

    #[test]
    fn cyclic_covers_rejected() {
        let err = build_poset(&["x", "y"], &[("x", "y"), ("y", "x")], RelationMode::Covers)
            .unwrap_err();
        assert!(matches!(err, Error::Cycle { .. }), "{err}");
    }

    #[test]
    fn full_relation_checks_axioms() {
        let labels = ["a", "b", "c"];
        let missing_refl = [("a", "a"), ("b", "b")];
        assert!(matches!(
            build_poset(&labels, &missing_refl, RelationMode::Full),
            Err(Error::Relation(_))
        ));
        let intransitive = [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")];
        let err = build_poset(&labels, &intransitive, RelationMode::Full).unwrap_err();
        assert!(err.to_string().contains("transitive"), "{err}");
        let ok = [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c"), ("a", "c")];
        let p = build_poset(&labels, &ok, RelationMode::Full).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn unknown_and_duplicate_labels() {
        assert!(matches!(
            build_poset(&["a"], &[("a", "z")], RelationMode::Covers),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            build_poset(&["a", "a"], &[], RelationMode::Covers),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn figure_one_cones() {
        let p = figure_one();
        assert_eq!(p.len(), 9);
        assert!(p.is_bounded());
        assert_eq!(p.lower_cone(set(&p, &["e", "g"])), set(&p, &["0", "b"]));
        assert_eq!(p.upper_cone(set(&p, &["a", "b"])), set(&p, &["e", "f", "1"]));
        assert_eq!(p.lower_cone(Subset::EMPTY), p.full());
        assert_eq!(p.upper_cone(Subset::EMPTY), p.full());
    }

    #[test]
    fn figure_one_extremals() {
        let p = figure_one();
        assert_eq!(p.maximals(set(&p, &["0", "b", "c"])), set(&p, &["b", "c"]));
        assert_eq!(p.minimals(set(&p, &["e", "f", "1"])), set(&p, &["e", "f"]));
        let d = p.index_of("d").unwrap();
        assert_eq!(p.maximals(Subset::singleton(d)), Subset::singleton(d));
        assert_eq!(p.maximals(Subset::EMPTY), Subset::EMPTY);
    }

    #[test]
    fn figure_one_is_not_a_lattice() {
        let p = figure_one();
        let (a, b) = (p.index_of("a").unwrap(), p.index_of("b").unwrap());
        assert_eq!(p.join(a, b), None);
        assert_eq!(p.min_upper(set(&p, &["a", "b"])), set(&p, &["e", "f"]));
    }

    #[test]
    fn covers_round_trip() {
        let p = figure_one();
        let q = Poset::from_covers(p.labels().to_vec(), &p.covers()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.covers().len(), 14);
    }

    #[test]
    fn mlub_completeness() {
        assert!(figure_one().is_mlub_complete(DEFAULT_ENUM_CAP).unwrap());
        assert!(Poset::chain(2).is_mlub_complete(DEFAULT_ENUM_CAP).unwrap());
        assert!(matches!(
            Poset::chain(13).is_mlub_complete(DEFAULT_ENUM_CAP),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn dual_swaps_bounds_and_extremals() {
        let c = Poset::chain(2);
        let d = c.dual();
        assert_eq!(d.bottom(), Some(1));
        assert_eq!(d.top(), Some(0));
        assert_eq!(d.dual(), c);

        let p = figure_one();
        let pd = p.dual();
        for x in Subset::all_subsets(p.len()) {
            assert_eq!(pd.minimals(x), p.maximals(x));
            assert_eq!(pd.maximals(x), p.minimals(x));
        }
    }

    #[test]
    fn product_of_two_chains_is_the_square() {
        let sq = product(&[Poset::chain(2), Poset::chain(2)], 64).unwrap();
        let p = &sq.poset;
        assert_eq!(p.len(), 4);
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(3));
        assert!(!p.comparable(1, 2));
        assert_eq!(p.covers().len(), 4);

        let one = product(&[figure_one()], 64).unwrap();
        assert_eq!(one.poset, figure_one());

        assert!(matches!(
            product(&[Poset::chain(9), Poset::chain(9)], 64),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn involutions() {
        let b = Poset::boolean(2);
        assert!(b.is_complementation());
        let p = figure_one()
            .with_involution_pairs(&[("0", "1"), ("a", "g"), ("b", "f"), ("c", "e"), ("d", "d")])
            .unwrap();
        assert!(p.involution().is_some());
        // Figure 1 is not a lattice, so b ∨ b' does not exist.
        assert!(!p.is_complementation());

        let not_antitone = Poset::chain(3).with_involution(vec![0, 1, 2]);
        assert!(matches!(not_antitone, Err(Error::Involution(_))));
        let reversal = Poset::chain(3).with_involution(vec![2, 1, 0]).unwrap();
        assert!(!reversal.is_complementation());
    }

    #[test]
    fn relabel_is_an_isomorphism() {
        let p = figure_one();
        let perm: Vec<usize> = (0..9).map(|i| (i * 4) % 9).collect();
        let q = p.relabel(&perm).unwrap();
        for x in 0..9 {
            for y in 0..9 {
                assert_eq!(p.leq(x, y), q.leq(perm[x], perm[y]));
            }
        }
    }
}
