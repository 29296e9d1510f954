//! Seeded random instances for the property suites.
//!
//! Every case draws from its own ChaCha stream keyed by
//! `(seed, suite, property, case)`, so results do not depend on the order
//! in which cases run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frame::TimeFrame;
use crate::poset::{Poset, DEFAULT_ENUM_CAP};
use crate::residuated::ResiduatedPoset;
use crate::subset::Subset;
use crate::tense::{Family, Proposition, Trajectory};

fn fnv1a(bytes: &[u8], mut h: u64) -> u64 {
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

pub fn case_rng(seed: u64, suite: &str, property: &str, case: usize) -> ChaCha8Rng {
    let mut h = 0xcbf2_9ce4_8422_2325;
    h = fnv1a(&seed.to_le_bytes(), h);
    h = fnv1a(suite.as_bytes(), h);
    h = fnv1a(&[0xff], h);
    h = fnv1a(property.as_bytes(), h);
    h = fnv1a(&(case as u64).to_le_bytes(), h);
    ChaCha8Rng::seed_from_u64(h)
}

fn inner_label(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < letters.len() {
        (letters[i] as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// A bounded poset on `n` elements (`2 ≤ n`): `0`, a random order on the
/// inner elements `a, b, ...`, and `1`.
pub fn bounded_poset(rng: &mut impl Rng, n: usize) -> Poset {
    assert!(n >= 2);
    let k = n - 2;
    let density: f64 = rng.gen_range(0.15..0.6);
    let mut labels = vec!["0".to_string()];
    labels.extend((0..k).map(inner_label));
    labels.push("1".into());
    let mut pairs = Vec::new();
    for i in 0..k {
        pairs.push((0, i + 1));
        pairs.push((i + 1, k + 1));
        for j in i + 1..k {
            if rng.gen_bool(density) {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    if k == 0 {
        pairs.push((0, 1));
    }
    Poset::from_covers(labels, &pairs).expect("acyclic by construction")
}

/// A bounded poset with `2 ≤ |A| ≤ max_n`.
pub fn poset_up_to(rng: &mut impl Rng, max_n: usize) -> Poset {
    let n = rng.gen_range(2..=max_n.max(2));
    bounded_poset(rng, n)
}

/// A bounded poset with an antitone involution, `|A| ≤ max_n`: chains,
/// Boolean cubes, and `{0} ∪ Q ∪ Q' ∪ {1}` with `Q'` a reversed copy of `Q`
/// lying above it.
pub fn involution_poset(rng: &mut impl Rng, max_n: usize) -> Poset {
    let max_n = max_n.max(2);
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(2..=max_n);
            let p = Poset::chain(n);
            p.with_involution((0..n).rev().collect()).expect("chain reversal")
        }
        1 if max_n >= 4 => {
            let k = if max_n >= 8 { rng.gen_range(1..=3) } else { rng.gen_range(1..=2) };
            Poset::boolean(k)
        }
        _ => {
            let q = rng.gen_range(0..=(max_n - 2) / 2);
            let density: f64 = rng.gen_range(0.1..0.6);
            let mut labels = vec!["0".to_string()];
            labels.extend((0..q).map(inner_label));
            labels.extend((0..q).map(|i| format!("{}'", inner_label(i))));
            labels.push("1".into());
            let top = 2 * q + 1;
            let mut pairs = vec![(0, top)];
            for i in 1..=q {
                pairs.push((0, i));
                pairs.push((q + i, top));
                for j in 1..=q {
                    pairs.push((i, q + j));
                }
                for j in i + 1..=q {
                    if rng.gen_bool(density) {
                        pairs.push((i, j));
                        pairs.push((q + j, q + i));
                    }
                }
            }
            let mut map = vec![0; top + 1];
            map[0] = top;
            map[top] = 0;
            for i in 1..=q {
                map[i] = q + i;
                map[q + i] = i;
            }
            Poset::from_covers(labels, &pairs)
                .and_then(|p| p.with_involution(map))
                .expect("involution by construction")
        }
    }
}

/// A random relation on `m` points, patched to be serial, and reflexive when asked.
pub fn frame(rng: &mut impl Rng, m: usize, reflexive: bool) -> TimeFrame {
    let density: f64 = rng.gen_range(0.2..0.7);
    let mut succ = vec![Subset::EMPTY; m];
    for (s, row) in succ.iter_mut().enumerate() {
        for t in 0..m {
            if rng.gen_bool(density) || (reflexive && s == t) {
                row.insert(t);
            }
        }
        if row.is_empty() {
            row.insert(rng.gen_range(0..m));
        }
    }
    // Every point also needs a predecessor.
    for t in 0..m {
        if !succ.iter().any(|r| r.contains(t)) {
            let s = rng.gen_range(0..m);
            succ[s].insert(t);
        }
    }
    let pairs: Vec<(usize, usize)> = succ
        .iter()
        .enumerate()
        .flat_map(|(s, r)| r.iter().map(move |t| (s, t)))
        .collect();
    let labels = (1..=m).map(|i| i.to_string()).collect();
    TimeFrame::from_pairs(labels, &pairs).expect("valid frame")
}

pub fn frame_up_to(rng: &mut impl Rng, max_m: usize, reflexive: bool) -> TimeFrame {
    let m = rng.gen_range(1..=max_m.max(1));
    frame(rng, m, reflexive)
}

pub fn proposition(rng: &mut impl Rng, n: usize, m: usize) -> Proposition {
    (0..m).map(|_| rng.gen_range(0..n)).collect()
}

/// A family of `1..=max_b` propositions.
pub fn family(rng: &mut impl Rng, n: usize, m: usize, max_b: usize) -> Family {
    let k = rng.gen_range(1..=max_b.max(1));
    Family::new((0..k).map(|_| proposition(rng, n, m)).collect()).expect("nonempty")
}

pub fn families(rng: &mut impl Rng, n: usize, m: usize, max_b: usize, count: usize) -> Vec<Family> {
    (0..count).map(|_| family(rng, n, m, max_b)).collect()
}

/// A nonempty subset with at most `max_len` elements.
pub fn subset(rng: &mut impl Rng, n: usize, max_len: usize) -> Subset {
    let k = rng.gen_range(1..=max_len.clamp(1, n));
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx[..k].iter().copied().collect()
}

/// A possibly empty subset, each element kept with probability one half.
pub fn any_subset(rng: &mut impl Rng, n: usize) -> Subset {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn trajectory(rng: &mut impl Rng, n: usize, m: usize, max_slice: usize) -> Trajectory {
    Trajectory::new((0..m).map(|_| subset(rng, n, max_slice)).collect()).expect("nonempty slices")
}

/// `LU`-closed sets, one per time point.
pub fn closed_trajectory(rng: &mut impl Rng, p: &Poset, m: usize) -> Vec<Subset> {
    (0..m).map(|_| p.lu(any_subset(rng, p.len()))).collect()
}

/// A random permutation of `0..n`.
pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

/// A family `D` with `C ≤1 D`: every member of `C` raised pointwise, plus
/// possibly one extra proposition.
pub fn raise(rng: &mut impl Rng, p: &Poset, c: &Family) -> Family {
    let mut props: Vec<Proposition> = c
        .props()
        .iter()
        .map(|q| q.iter().map(|&x| pick(rng, p.up_set(x))).collect())
        .collect();
    if rng.gen_bool(0.5) {
        props.push(proposition(rng, p.len(), c.time_len()));
    }
    Family::new(props).expect("nonempty")
}

/// A family `D` with `C ≤2 D`: a nonempty selection of members of `C`, each
/// raised pointwise.
pub fn raise_some(rng: &mut impl Rng, p: &Poset, c: &Family) -> Family {
    let mut props: Vec<Proposition> = Vec::new();
    for q in c.props() {
        if rng.gen_bool(0.6) {
            props.push(q.iter().map(|&x| pick(rng, p.up_set(x))).collect());
        }
    }
    if props.is_empty() {
        let q = &c.props()[rng.gen_range(0..c.len())];
        props.push(q.iter().map(|&x| pick(rng, p.up_set(x))).collect());
    }
    Family::new(props).expect("nonempty")
}

fn pick(rng: &mut impl Rng, s: Subset) -> usize {
    let v: Vec<usize> = s.iter().collect();
    v[rng.gen_range(0..v.len())]
}

/// Residuated chains, Boolean cubes and their products with at most `max_n`
/// elements.
pub fn residuated(rng: &mut impl Rng, max_n: usize) -> ResiduatedPoset {
    let max_n = max_n.max(2);
    loop {
        let r = match rng.gen_range(0..4) {
            0 => ResiduatedPoset::godel_chain(rng.gen_range(2..=max_n)),
            1 => ResiduatedPoset::lukasiewicz_chain(rng.gen_range(2..=max_n)),
            2 => ResiduatedPoset::boolean_cube(rng.gen_range(1..=2)),
            _ => {
                let a = small_factor(rng);
                let b = small_factor(rng);
                match ResiduatedPoset::product(&[a, b], DEFAULT_ENUM_CAP) {
                    Ok(r) => r,
                    Err(_) => continue,
                }
            }
        };
        if r.len() <= max_n {
            return r;
        }
    }
}

fn small_factor(rng: &mut impl Rng) -> ResiduatedPoset {
    match rng.gen_range(0..3) {
        0 => ResiduatedPoset::godel_chain(rng.gen_range(2..=3)),
        1 => ResiduatedPoset::lukasiewicz_chain(rng.gen_range(2..=3)),
        _ => ResiduatedPoset::boolean_cube(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_keyed() {
        let a: u64 = case_rng(7, "s", "p", 0).gen();
        let b: u64 = case_rng(7, "s", "p", 0).gen();
        let c: u64 = case_rng(7, "s", "p", 1).gen();
        let d: u64 = case_rng(7, "s", "q", 0).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn generated_structures_are_valid() {
        for case in 0..200 {
            let mut rng = case_rng(1, "gen", "valid", case);
            let p = poset_up_to(&mut rng, 8);
            assert!(p.is_bounded() && p.len() <= 8);
            let q = involution_poset(&mut rng, 8);
            assert!(q.is_bounded() && q.involution().is_some() && q.len() <= 8);
            let f = frame_up_to(&mut rng, 4, case % 2 == 0);
            assert!(f.is_serial());
            assert!(case % 2 == 1 || f.is_reflexive());
            let r = residuated(&mut rng, 6);
            assert!(r.validate().is_valid() && r.len() <= 6);
            let c = family(&mut rng, p.len(), f.len(), 3);
            let d = raise(&mut rng, &p, &c);
            assert!(crate::order::compare_families(&p, crate::OrderKind::Forward, &c, &d).unwrap());
            let e = raise_some(&mut rng, &p, &c);
            assert!(crate::order::compare_families(&p, crate::OrderKind::Backward, &c, &e).unwrap());
            for s in closed_trajectory(&mut rng, &p, 3) {
                assert_eq!(p.lu(s), s);
            }
        }
    }
}
