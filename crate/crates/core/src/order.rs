//! The six subset preorders and their lifts to trajectories and families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::{Family, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// `X ≤ Y`: every `x` is below every `y`.
    All,
    /// `X ≤1 Y`: every `x` is below some `y`.
    Forward,
    /// `X ≤2 Y`: every `y` is above some `x`.
    Backward,
    /// `X ⊑ Y`: some `x` is below some `y`.
    Exists,
    /// `≤1` both ways.
    Eq1,
    /// `≤2` both ways.
    Eq2,
}

impl OrderKind {
    pub const ALL_KINDS: [OrderKind; 6] = [
        OrderKind::All,
        OrderKind::Forward,
        OrderKind::Backward,
        OrderKind::Exists,
        OrderKind::Eq1,
        OrderKind::Eq2,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            OrderKind::All => "<=",
            OrderKind::Forward => "<=1",
            OrderKind::Backward => "<=2",
            OrderKind::Exists => "[=",
            OrderKind::Eq1 => "~1",
            OrderKind::Eq2 => "~2",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "<=" | "all" => OrderKind::All,
            "<=1" | "forward" => OrderKind::Forward,
            "<=2" | "backward" => OrderKind::Backward,
            "[=" | "exists" => OrderKind::Exists,
            "~1" | "eq1" => OrderKind::Eq1,
            "~2" | "eq2" => OrderKind::Eq2,
            other => return Err(Error::UnknownLabel(other.to_string())),
        })
    }
}

/// Compares two nonempty subsets.
pub fn compare(p: &Poset, kind: OrderKind, x: Subset, y: Subset) -> Result<bool> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySet("compared subset"));
    }
    Ok(holds(p, kind, x, y))
}

/// [`compare`] without the emptiness check; the quantifiers are read literally.
pub fn holds(p: &Poset, kind: OrderKind, x: Subset, y: Subset) -> bool {
    match kind {
        OrderKind::All => x.iter().all(|a| y.is_subset(p.up_set(a))),
        OrderKind::Forward => x.iter().all(|a| p.up_set(a).intersects(y)),
        OrderKind::Backward => y.iter().all(|b| p.down_set(b).intersects(x)),
        OrderKind::Exists => x.iter().any(|a| p.up_set(a).intersects(y)),
        OrderKind::Eq1 => {
            holds(p, OrderKind::Forward, x, y) && holds(p, OrderKind::Forward, y, x)
        }
        OrderKind::Eq2 => {
            holds(p, OrderKind::Backward, x, y) && holds(p, OrderKind::Backward, y, x)
        }
    }
}

/// Slicewise comparison of two trajectories over the same time set.
pub fn compare_trajectories(
    p: &Poset,
    kind: OrderKind,
    x: &Trajectory,
    y: &Trajectory,
) -> Result<bool> {
    same_len(x.len(), y.len())?;
    let mut ok = true;
    for (a, b) in x.slices().iter().zip(y.slices()) {
        ok &= compare(p, kind, *a, *b)?;
    }
    Ok(ok)
}

/// First time index where the slicewise comparison fails.
pub fn first_violation(p: &Poset, kind: OrderKind, x: &[Subset], y: &[Subset]) -> Option<usize> {
    x.iter()
        .zip(y)
        .position(|(a, b)| !holds(p, kind, *a, *b))
}

fn prop_leq(p: &Poset, a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| p.leq(x, y))
}

/// Compares two families as subsets of `A^T` under the componentwise order.
pub fn compare_families(p: &Poset, kind: OrderKind, x: &Family, y: &Family) -> Result<bool> {
    same_len(x.time_len(), y.time_len())?;
    let xs = x.props();
    let ys = y.props();
    let below = |a: &Vec<usize>, b: &Vec<usize>| prop_leq(p, a, b);
    let fwd = |xs: &[Vec<usize>], ys: &[Vec<usize>]| xs.iter().all(|a| ys.iter().any(|b| below(a, b)));
    let bwd = |xs: &[Vec<usize>], ys: &[Vec<usize>]| ys.iter().all(|b| xs.iter().any(|a| below(a, b)));
    Ok(match kind {
        OrderKind::All => xs.iter().all(|a| ys.iter().all(|b| below(a, b))),
        OrderKind::Forward => fwd(xs, ys),
        OrderKind::Backward => bwd(xs, ys),
        OrderKind::Exists => xs.iter().any(|a| ys.iter().any(|b| below(a, b))),
        OrderKind::Eq1 => fwd(xs, ys) && fwd(ys, xs),
        OrderKind::Eq2 => bwd(xs, ys) && bwd(ys, xs),
    })
}

/// Compares a family with the family `φ(y)` of selectors of a trajectory.
///
/// `All`, `Forward` and `Exists` reduce exactly to slicewise checks on this
/// side; the remaining kinds materialize `φ(y)` up to `phi_cap`.
pub fn compare_family_trajectory(
    p: &Poset,
    kind: OrderKind,
    x: &Family,
    y: &Trajectory,
    phi_cap: usize,
) -> Result<bool> {
    same_len(x.time_len(), y.len())?;
    match kind {
        OrderKind::All => Ok(slices_hold(p, kind, x, y, false)),
        OrderKind::Forward => Ok(x.props().iter().all(|q| {
            q.iter()
                .zip(y.slices())
                .all(|(&v, s)| p.up_set(v).intersects(*s))
        })),
        OrderKind::Exists => Ok(x.props().iter().any(|q| {
            q.iter()
                .zip(y.slices())
                .all(|(&v, s)| p.up_set(v).intersects(*s))
        })),
        _ => {
            let phi = y.materialize(phi_cap)?;
            compare_families(p, kind, x, &phi)
        }
    }
}

/// Compares `φ(x)` with a family; mirror image of [`compare_family_trajectory`].
pub fn compare_trajectory_family(
    p: &Poset,
    kind: OrderKind,
    x: &Trajectory,
    y: &Family,
    phi_cap: usize,
) -> Result<bool> {
    same_len(x.len(), y.time_len())?;
    match kind {
        OrderKind::All => Ok(slices_hold(p, kind, y, x, true)),
        OrderKind::Backward => Ok(y.props().iter().all(|q| {
            q.iter()
                .zip(x.slices())
                .all(|(&v, s)| p.down_set(v).intersects(*s))
        })),
        OrderKind::Exists => Ok(y.props().iter().any(|q| {
            q.iter()
                .zip(x.slices())
                .all(|(&v, s)| p.down_set(v).intersects(*s))
        })),
        _ => {
            let phi = x.materialize(phi_cap)?;
            compare_families(p, kind, &phi, y)
        }
    }
}

fn slices_hold(p: &Poset, kind: OrderKind, fam: &Family, traj: &Trajectory, traj_first: bool) -> bool {
    (0..traj.len()).all(|t| {
        let f = fam.slice(t);
        let s = traj.slice(t);
        if traj_first {
            holds(p, kind, s, f)
        } else {
            holds(p, kind, f, s)
        }
    })
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Mismatch(format!("time sets of size {a} and {b}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::figure_one;

    fn set(p: &Poset, labels: &[&str]) -> Subset {
        labels.iter().map(|l| p.index_of(l).unwrap()).collect()
    }

    #[test]
    fn figure_one_examples() {
        let p = figure_one();
        assert!(compare(&p, OrderKind::Forward, set(&p, &["b"]), set(&p, &["e", "f"])).unwrap());
        let (x, y) = (set(&p, &["a", "c"]), set(&p, &["e"]));
        assert!(!compare(&p, OrderKind::All, x, y).unwrap());
        assert!(compare(&p, OrderKind::Exists, x, y).unwrap());
    }

    #[test]
    fn reflexive_kinds() {
        let p = figure_one();
        let x = set(&p, &["a", "d", "g"]);
        for kind in [
            OrderKind::Forward,
            OrderKind::Backward,
            OrderKind::Exists,
            OrderKind::Eq1,
            OrderKind::Eq2,
        ] {
            assert!(compare(&p, kind, x, x).unwrap(), "{kind}");
        }
        assert!(!compare(&p, OrderKind::All, x, x).unwrap());
    }

    #[test]
    fn empty_operands_rejected() {
        let p = figure_one();
        assert_eq!(
            compare(&p, OrderKind::All, Subset::EMPTY, p.full()),
            Err(Error::EmptySet("compared subset"))
        );
    }

    #[test]
    fn parse_round_trip() {
        for k in OrderKind::ALL_KINDS {
            assert_eq!(k.symbol().parse::<OrderKind>().unwrap(), k);
        }
    }

    #[test]
    fn mixed_comparisons_match_materialized() {
        let p = figure_one();
        let i = |l: &str| p.index_of(l).unwrap();
        let fam = Family::new(vec![vec![i("a"), i("b")], vec![i("c"), i("0")]]).unwrap();
        let traj = Trajectory::new(vec![set(&p, &["e", "g"]), set(&p, &["d", "c"])]).unwrap();
        let phi = traj.materialize(100).unwrap();
        for kind in OrderKind::ALL_KINDS {
            assert_eq!(
                compare_family_trajectory(&p, kind, &fam, &traj, 100).unwrap(),
                compare_families(&p, kind, &fam, &phi).unwrap(),
                "{kind}"
            );
            assert_eq!(
                compare_trajectory_family(&p, kind, &traj, &fam, 100).unwrap(),
                compare_families(&p, kind, &phi, &fam).unwrap(),
                "{kind}"
            );
        }
    }
}
