//! Algebraic laws as proptest properties over shrinkable structures.

use proptest::collection::vec;
use proptest::prelude::*;

use poset_tense::connectives::{imp, odot, set_odot};
use poset_tense::dm;
use poset_tense::dsl::{self, Instance};
use poset_tense::oracle::{self, to_set};
use poset_tense::residuated::ResiduatedPoset;
use poset_tense::synthesis::{check_extension, compare_induced, induce_relation, ExtendedFrame};
use poset_tense::tense::{apply_tense, check_dynamic, check_galois, FrameBundle};
use poset_tense::{Family, Poset, Subset, TenseOp, TimeFrame};

/// `0`, `k` inner elements ordered by the upper-triangular bits, and `1`.
fn poset(max_inner: usize) -> impl Strategy<Value = Poset> {
    (0..=max_inner)
        .prop_flat_map(|k| vec(any::<bool>(), k * k.saturating_sub(1) / 2).prop_map(move |bits| (k, bits)))
        .prop_map(|(k, bits)| {
            let mut labels = vec!["0".to_string()];
            labels.extend((0..k).map(|i| format!("x{i}")));
            labels.push("1".into());
            let mut pairs = vec![(0, k + 1)];
            let mut bit = bits.iter();
            for i in 0..k {
                pairs.push((0, i + 1));
                pairs.push((i + 1, k + 1));
                for j in i + 1..k {
                    if *bit.next().unwrap() {
                        pairs.push((i + 1, j + 1));
                    }
                }
            }
            Poset::from_covers(labels, &pairs).unwrap()
        })
}

/// A relation from an `m × m` bit matrix, patched with loops to be serial.
fn frame(max_m: usize) -> impl Strategy<Value = TimeFrame> {
    (1..=max_m)
        .prop_flat_map(|m| vec(any::<bool>(), m * m).prop_map(move |bits| (m, bits)))
        .prop_map(|(m, bits)| {
            let mut pairs: Vec<(usize, usize)> = (0..m * m)
                .filter(|&i| bits[i])
                .map(|i| (i / m, i % m))
                .collect();
            for s in 0..m {
                if !pairs.iter().any(|&(a, _)| a == s) || !pairs.iter().any(|&(_, b)| b == s) {
                    pairs.push((s, s));
                }
            }
            let labels = (1..=m).map(|i| i.to_string()).collect();
            TimeFrame::from_pairs(labels, &pairs).unwrap()
        })
}

fn family(n: usize, m: usize) -> impl Strategy<Value = Family> {
    vec(vec(0..n, m), 1..=3).prop_map(|props| Family::new(props).unwrap())
}

/// A poset, a frame and two families over them.
fn case() -> impl Strategy<Value = (Poset, TimeFrame, Family, Family)> {
    (poset(5), frame(3)).prop_flat_map(|(p, f)| {
        let (n, m) = (p.len(), f.len());
        (Just(p), Just(f), family(n, m), family(n, m))
    })
}

fn subset(n: usize) -> impl Strategy<Value = Subset> {
    vec(0..n, 1..=3).prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn operators_match_the_reference((p, f, b, _) in case()) {
        for op in TenseOp::ALL {
            let got = apply_tense(op, &p, &f, &b).unwrap();
            let want = oracle::tense(op, &p, &f, b.props());
            let got: Vec<_> = got.slices().iter().map(|&s| to_set(s)).collect();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn frame_operators_are_galois_and_dynamic((p, f, c, d) in case()) {
        let bundle = FrameBundle::new(p, f).unwrap();
        let fams = [c, d];
        prop_assert!(check_galois(&bundle, TenseOp::P, TenseOp::G, &fams).unwrap().passed());
        prop_assert!(check_galois(&bundle, TenseOp::F, TenseOp::H, &fams).unwrap().passed());
        prop_assert!(check_dynamic(&bundle, &fams).unwrap().passed());
    }

    #[test]
    fn inverting_the_frame_swaps_past_and_future((p, f, b, _) in case()) {
        let inv = f.invert();
        for op in TenseOp::ALL {
            prop_assert_eq!(
                apply_tense(op, &p, &f, &b).unwrap(),
                apply_tense(op.time_dual(), &p, &inv, &b).unwrap()
            );
        }
    }

    #[test]
    fn induced_relation_recovers_frame_operators((p, f, c, d) in case()) {
        let bundle = FrameBundle::new(p, f.clone()).unwrap();
        let fams = [c, d];
        let rel = induce_relation(&bundle, &fams).unwrap();
        prop_assert!(f.is_subrelation_of(&rel));
        prop_assert!(compare_induced(&bundle, &rel, &fams, true).unwrap().passed());
        let ext = ExtendedFrame::new(&rel).unwrap();
        prop_assert!(check_extension(&bundle, &ext, &fams).unwrap().passed());
    }

    #[test]
    fn connectives_match_the_reference(p in poset(5), x in 0usize..7, y in 0usize..7) {
        let (x, y) = (x % p.len(), y % p.len());
        prop_assert_eq!(to_set(odot(&p, x, y)), oracle::odot(&p, x, y));
        prop_assert_eq!(to_set(imp(&p, x, y)), oracle::imp(&p, x, y));
        prop_assert_eq!(odot(&p, x, y), odot(&p, y, x));
    }

    #[test]
    fn subset_product_is_commutative((p, b, c) in poset(5).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), subset(n), subset(n))
    })) {
        prop_assert_eq!(set_odot(&p, b, c).unwrap(), set_odot(&p, c, b).unwrap());
        prop_assert_eq!(set_odot(&p, b, b).unwrap(), p.maximals(p.lu(b)));
    }

    #[test]
    fn closed_sets_match_the_reference(p in poset(6)) {
        let got = dm::closed_sets(&p, 12).unwrap();
        let want: Vec<Subset> = oracle::closed_sets(&p).iter().map(oracle::from_set).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn lu_is_a_closure(p in poset(6), bits in any::<u8>()) {
        let x: Subset = (0..p.len()).filter(|i| bits >> (i % 8) & 1 == 1).collect();
        prop_assert!(x.is_subset(p.lu(x)));
        prop_assert_eq!(p.lu(p.lu(x)), p.lu(x));
        prop_assert!(dm::is_closed(&p, p.lower_cone(x)));
    }

    #[test]
    fn instances_survive_a_text_round_trip((p, f, c, d) in case()) {
        let inst = Instance::from_case(&p, &f, &[c, d]);
        let text = dsl::serialize(&inst);
        let back = dsl::parse(&text).unwrap();
        prop_assert_eq!(dsl::serialize(&back), text);
        prop_assert_eq!(back.all_families().len(), inst.all_families().len());
    }

    #[test]
    fn chain_products_are_residuated(a in 2usize..4, b in 2usize..4, godel in any::<bool>()) {
        let left = if godel { ResiduatedPoset::godel_chain(a) } else { ResiduatedPoset::lukasiewicz_chain(a) };
        let prod = ResiduatedPoset::product(&[left, ResiduatedPoset::godel_chain(b)], 16).unwrap();
        prop_assert!(prod.validate().is_valid());
    }
}
