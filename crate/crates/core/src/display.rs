//! Label-based rendering of subsets, trajectories and families.

use crate::poset::Poset;
use crate::subset::Subset;
use crate::tense::{Family, Trajectory};

/// `x` for a singleton, `{x,y}` otherwise.
pub fn subset(p: &Poset, s: Subset) -> String {
    if s.len() == 1 {
        p.label(s.first().unwrap()).to_string()
    } else {
        format!("{{{}}}", labels(p, s).join(","))
    }
}

/// Always braced: `{x}`, `{}`.
pub fn set(p: &Poset, s: Subset) -> String {
    format!("{{{}}}", labels(p, s).join(","))
}

pub fn labels(p: &Poset, s: Subset) -> Vec<String> {
    s.iter().map(|i| p.label(i).to_string()).collect()
}

pub fn slices(p: &Poset, s: &[Subset]) -> String {
    let parts: Vec<String> = s.iter().map(|x| subset(p, *x)).collect();
    format!("[{}]", parts.join(", "))
}

pub fn trajectory(p: &Poset, t: &Trajectory) -> String {
    slices(p, t.slices())
}

pub fn proposition(p: &Poset, q: &[usize]) -> String {
    let parts: Vec<&str> = q.iter().map(|&i| p.label(i)).collect();
    format!("[{}]", parts.join(","))
}

pub fn family(p: &Poset, f: &Family) -> String {
    let parts: Vec<String> = f.props().iter().map(|q| proposition(p, q)).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::figure_one;

    #[test]
    fn renders_singletons_bare() {
        let p = figure_one();
        let e = p.index_of("e").unwrap();
        let f = p.index_of("f").unwrap();
        let t = Trajectory::new(vec![Subset::singleton(e), [e, f].into_iter().collect()]).unwrap();
        assert_eq!(trajectory(&p, &t), "[e, {e,f}]");
        assert_eq!(set(&p, Subset::singleton(e)), "{e}");
    }
}
