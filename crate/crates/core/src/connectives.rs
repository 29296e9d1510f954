//! Set-valued conjunction and implication on a bounded poset, and their
//! extensions to subsets and trajectories.
//!
//! `x ⊙ y = Max L(x, y)` and `x → y = Max {z | x ⊙ z ≤ y}`, where a set is
//! below an element when all of its members are. For subsets,
//! `B ⊙ C = Max LU(⋃ b ⊙ c)` and `B → C = Max {a | {a} ⊙ B ⊆ LU(C)}`.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::Trajectory;

pub fn odot(p: &Poset, x: usize, y: usize) -> Subset {
    p.max_lower(Subset::singleton(x) | Subset::singleton(y))
}

pub fn imp(p: &Poset, x: usize, y: usize) -> Subset {
    let below_y = p.down_set(y);
    let ok: Subset = (0..p.len())
        .filter(|&z| odot(p, x, z).is_subset(below_y))
        .collect();
    p.maximals(ok)
}

/// `¬x = x → 0`
pub fn neg(p: &Poset, x: usize) -> Result<Subset> {
    let (bot, _) = p.bounds()?;
    Ok(imp(p, x, bot))
}

fn nonempty(b: Subset, c: Subset) -> Result<()> {
    if b.is_empty() || c.is_empty() {
        Err(Error::EmptySet("connective operand"))
    } else {
        Ok(())
    }
}

/// `⋃ {b ⊙ c | b ∈ B, c ∈ C}`
fn raw_products(p: &Poset, b: Subset, c: Subset) -> Subset {
    let mut acc = Subset::EMPTY;
    for x in b.iter() {
        for y in c.iter() {
            acc |= odot(p, x, y);
        }
    }
    acc
}

pub fn set_odot(p: &Poset, b: Subset, c: Subset) -> Result<Subset> {
    nonempty(b, c)?;
    Ok(p.maximals(p.lu(raw_products(p, b, c))))
}

/// `x ⊙ B`, the mixed form, through [`set_odot`].
pub fn elem_set_odot(p: &Poset, x: usize, b: Subset) -> Result<Subset> {
    set_odot(p, Subset::singleton(x), b)
}

pub fn set_imp(p: &Poset, b: Subset, c: Subset) -> Result<Subset> {
    nonempty(b, c)?;
    let target = p.lu(c);
    let ok: Subset = (0..p.len())
        .filter(|&a| p.maximals(p.lu(raw_products(p, Subset::singleton(a), b))).is_subset(target))
        .collect();
    Ok(p.maximals(ok))
}

fn slicewise(
    b: &Trajectory,
    c: &Trajectory,
    f: impl Fn(Subset, Subset) -> Result<Subset>,
) -> Result<Trajectory> {
    if b.len() != c.len() {
        return Err(Error::Mismatch(format!(
            "trajectories over {} and {} time points",
            b.len(),
            c.len()
        )));
    }
    let slices = b
        .slices()
        .iter()
        .zip(c.slices())
        .map(|(&x, &y)| f(x, y))
        .collect::<Result<Vec<_>>>()?;
    Trajectory::new(slices)
}

pub fn traj_odot(p: &Poset, b: &Trajectory, c: &Trajectory) -> Result<Trajectory> {
    slicewise(b, c, |x, y| set_odot(p, x, y))
}

pub fn traj_imp(p: &Poset, b: &Trajectory, c: &Trajectory) -> Result<Trajectory> {
    slicewise(b, c, |x, y| set_imp(p, x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::figure_one;

    fn set(p: &Poset, labels: &[&str]) -> Subset {
        labels.iter().map(|l| p.index_of(l).unwrap()).collect()
    }

    fn i(p: &Poset, l: &str) -> usize {
        p.index_of(l).unwrap()
    }

    #[test]
    fn figure_one_values() {
        let p = figure_one();
        assert_eq!(odot(&p, i(&p, "e"), i(&p, "g")), set(&p, &["b"]));
        assert_eq!(odot(&p, i(&p, "f"), i(&p, "g")), set(&p, &["b", "c"]));
        assert_eq!(imp(&p, i(&p, "e"), i(&p, "b")), set(&p, &["d", "g"]));
        assert_eq!(neg(&p, i(&p, "e")).unwrap(), set(&p, &["c"]));
        assert_eq!(
            set_odot(&p, set(&p, &["e"]), set(&p, &["f"])).unwrap(),
            set(&p, &["a", "b"])
        );
        assert_eq!(
            set_odot(&p, set(&p, &["e"]), set(&p, &["g"])).unwrap(),
            set(&p, &["b"])
        );
    }

    #[test]
    fn units() {
        let p = figure_one();
        let one = i(&p, "1");
        for x in 0..p.len() {
            assert_eq!(odot(&p, one, x), Subset::singleton(x));
            assert_eq!(imp(&p, x, one), Subset::singleton(one));
        }
        let b = set(&p, &["a", "b"]);
        let want = p.maximals(p.lu(b));
        assert_eq!(set_odot(&p, Subset::singleton(one), b).unwrap(), want);
        assert_eq!(set_odot(&p, b, b).unwrap(), want);
    }

    #[test]
    fn empty_and_mismatch() {
        let p = figure_one();
        assert!(set_odot(&p, Subset::EMPTY, p.full()).is_err());
        let a = Trajectory::constant(Subset::singleton(0), 2);
        let b = Trajectory::constant(Subset::singleton(0), 3);
        assert!(matches!(traj_odot(&p, &a, &b), Err(Error::Mismatch(_))));
    }
}
