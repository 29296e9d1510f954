//! Dedekind-MacNeille completion: the lattice of `LU`-closed subsets and the
//! tense operators built from its meets and joins.

use crate::error::{Error, Result};
use crate::frame::TimeFrame;
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::TenseOp;

#[derive(Debug, Clone)]
pub struct DmLattice {
    base: Poset,
    /// Closed sets, sorted by size and then by bits.
    closed: Vec<Subset>,
    lattice: Poset,
    /// `embedding[x]` is the index of `L(x)` in `closed`.
    embedding: Vec<usize>,
}

pub fn is_closed(p: &Poset, s: Subset) -> bool {
    p.lu(s) == s
}

/// `{LU(S) | S ⊆ A}` with duplicates removed.
pub fn closed_sets(p: &Poset, cap: usize) -> Result<Vec<Subset>> {
    enumerate(p, cap, |s| p.lu(s))
}

/// `{L(S) | S ⊆ A}`; equal to [`closed_sets`] as a set.
pub fn lower_cone_sets(p: &Poset, cap: usize) -> Result<Vec<Subset>> {
    enumerate(p, cap, |s| p.lower_cone(s))
}

fn enumerate(p: &Poset, cap: usize, f: impl Fn(Subset) -> Subset) -> Result<Vec<Subset>> {
    if p.len() > cap {
        return Err(Error::Size {
            what: "carrier for completion",
            size: p.len(),
            cap,
        });
    }
    let mut out: Vec<Subset> = Subset::all_subsets(p.len()).map(f).collect();
    out.sort_by_key(|s| (s.len(), s.bits()));
    out.dedup();
    Ok(out)
}

impl DmLattice {
    pub fn new(p: &Poset, cap: usize) -> Result<DmLattice> {
        let closed = closed_sets(p, cap)?;
        let labels = closed
            .iter()
            .map(|s| {
                let names: Vec<&str> = s.iter().map(|i| p.label(i)).collect();
                format!("L{{{}}}", names.join(","))
            })
            .collect();
        let pairs: Vec<(usize, usize)> = (0..closed.len())
            .flat_map(|i| (0..closed.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| closed[i].is_subset(closed[j]))
            .collect();
        let lattice = Poset::from_relation(labels, &pairs)?;
        let embedding = (0..p.len())
            .map(|x| {
                let l = p.down_set(x);
                closed.iter().position(|&c| c == l).expect("principal ideals are closed")
            })
            .collect();
        Ok(DmLattice {
            base: p.clone(),
            closed,
            lattice,
            embedding,
        })
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn closed(&self) -> &[Subset] {
        &self.closed
    }

    /// The completion as a poset whose elements index [`DmLattice::closed`].
    pub fn lattice(&self) -> &Poset {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.closed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed.is_empty()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.closed.iter().position(|&c| c == s)
    }

    /// Lattice index of `L(x)`.
    pub fn embed_index(&self, x: usize) -> usize {
        self.embedding[x]
    }

    /// `L(x)`
    pub fn embed(&self, x: usize) -> Subset {
        self.base.down_set(x)
    }

    pub fn meet(&self, x: Subset, y: Subset) -> Subset {
        dm_meet(x, y)
    }

    pub fn join(&self, x: Subset, y: Subset) -> Subset {
        dm_join(&self.base, x, y)
    }

    pub fn bottom(&self) -> Subset {
        self.base.lu(Subset::EMPTY)
    }

    pub fn top(&self) -> Subset {
        self.base.full()
    }
}

pub fn dm_complete(p: &Poset, cap: usize) -> Result<DmLattice> {
    DmLattice::new(p, cap)
}

pub fn dm_meet(x: Subset, y: Subset) -> Subset {
    x & y
}

pub fn dm_join(p: &Poset, x: Subset, y: Subset) -> Subset {
    p.lu(x | y)
}

/// Meet of an arbitrary collection; the empty meet is the top `A`.
pub fn big_meet(p: &Poset, xs: impl IntoIterator<Item = Subset>) -> Subset {
    xs.into_iter().fold(p.full(), |acc, x| acc & x)
}

/// Join of an arbitrary collection; the empty join is `LU(∅)`.
pub fn big_join(p: &Poset, xs: impl IntoIterator<Item = Subset>) -> Subset {
    p.lu(xs.into_iter().fold(Subset::EMPTY, |acc, x| acc | x))
}

/// `Ĝ, Ĥ` take meets and `P̂, F̂` joins over the related points.
pub fn hat_tense(op: TenseOp, p: &Poset, f: &TimeFrame, traj: &[Subset]) -> Result<Vec<Subset>> {
    f.check_serial()?;
    if traj.len() != f.len() {
        return Err(Error::Mismatch(format!(
            "{} time values for a frame with {} points",
            traj.len(),
            f.len()
        )));
    }
    Ok((0..f.len())
        .map(|s| {
            let vals = op.support(f, s).iter().map(|t| traj[t]);
            if op.is_upper() {
                big_join(p, vals)
            } else {
                big_meet(p, vals)
            }
        })
        .collect())
}

/// Slicewise `LU`.
pub fn lu_slices(p: &Poset, s: &[Subset]) -> Vec<Subset> {
    s.iter().map(|&x| p.lu(x)).collect()
}

/// Slicewise `L`.
pub fn l_slices(p: &Poset, s: &[Subset]) -> Vec<Subset> {
    s.iter().map(|&x| p.lower_cone(x)).collect()
}

/// Slicewise `U`.
pub fn u_slices(p: &Poset, s: &[Subset]) -> Vec<Subset> {
    s.iter().map(|&x| p.upper_cone(x)).collect()
}

/// Slicewise `Max`.
pub fn max_slices(p: &Poset, s: &[Subset]) -> Vec<Subset> {
    s.iter().map(|&x| p.maximals(x)).collect()
}

/// Slicewise `Min`.
pub fn min_slices(p: &Poset, s: &[Subset]) -> Vec<Subset> {
    s.iter().map(|&x| p.minimals(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_one, figure_one};
    use crate::poset::DEFAULT_ENUM_CAP;
    use crate::tense::{apply_tense, Family};

    fn set(p: &Poset, labels: &[&str]) -> Subset {
        labels.iter().map(|l| p.index_of(l).unwrap()).collect()
    }

    fn diamond() -> Poset {
        crate::build_poset(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            crate::RelationMode::Covers,
        )
        .unwrap()
    }

    #[test]
    fn small_completions() {
        let c = Poset::chain(2);
        let d = dm_complete(&c, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(d.closed(), &[Subset::singleton(0), Subset::full(2)]);
        assert_eq!(dm_complete(&diamond(), DEFAULT_ENUM_CAP).unwrap().len(), 4);
    }

    #[test]
    fn both_definitions_agree() {
        for p in [figure_one(), diamond(), Poset::chain(4), Poset::boolean(3)] {
            assert_eq!(
                closed_sets(&p, DEFAULT_ENUM_CAP).unwrap(),
                lower_cone_sets(&p, DEFAULT_ENUM_CAP).unwrap()
            );
        }
    }

    #[test]
    fn figure_one_completion() {
        let p = figure_one();
        let d = dm_complete(&p, DEFAULT_ENUM_CAP).unwrap();
        assert!(d.lattice().is_bounded());
        // Every pair has a join and meet in the completion.
        for x in 0..d.len() {
            for y in 0..d.len() {
                assert!(d.lattice().join(x, y).is_some());
                assert!(d.lattice().meet(x, y).is_some());
            }
        }
        let (e, g) = (p.index_of("e").unwrap(), p.index_of("g").unwrap());
        assert_eq!(d.meet(d.embed(e), d.embed(g)), set(&p, &["0", "b"]));
        assert!(d.closed().iter().all(|&s| d.join(s, d.bottom()) == s));
        // The embedding is an order embedding.
        for x in 0..p.len() {
            for y in 0..p.len() {
                assert_eq!(p.leq(x, y), d.lattice().leq(d.embed_index(x), d.embed_index(y)));
            }
        }
    }

    #[test]
    fn diamond_join() {
        let p = diamond();
        let d = dm_complete(&p, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(d.join(d.embed(1), d.embed(2)), d.embed(3));
    }

    #[test]
    fn hat_operators_on_example_one() {
        let ex = example_one();
        let (p, f) = (&ex.poset, &ex.frame);
        let lp: Vec<Subset> = ex.p.iter().map(|&x| p.down_set(x)).collect();
        let g = hat_tense(TenseOp::G, p, f, &lp).unwrap();
        assert_eq!(g[0], p.down_set(p.index_of("b").unwrap()));
        let lq: Vec<Subset> = ex.q.iter().map(|&x| p.down_set(x)).collect();
        let h = hat_tense(TenseOp::H, p, f, &lq).unwrap();
        assert_eq!(h[2], p.lu(set(p, &["b", "c"])));
        let hq = apply_tense(TenseOp::H, p, f, &Family::singleton(ex.q.clone())).unwrap();
        assert_eq!(p.maximals(h[2]), hq.slice(2));
    }

    #[test]
    fn constant_trajectories_are_fixed() {
        let p = figure_one();
        let f = TimeFrame::chain(3);
        let x = p.down_set(4);
        for op in TenseOp::ALL {
            assert_eq!(hat_tense(op, &p, &f, &[x; 3]).unwrap(), vec![x; 3]);
        }
    }
}
