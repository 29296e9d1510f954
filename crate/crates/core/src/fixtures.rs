//! Built-in instances: the nine-element poset and the three-point chain example.

use crate::frame::TimeFrame;
use crate::poset::{build_poset, Poset, RelationMode};
use crate::tense::Proposition;

/// DSL text of [`example_one`], shipped with the crate.
pub const EXAMPLE_ONE_TEXT: &str = include_str!("../data/example1.tense");

const LABELS: [&str; 9] = ["0", "a", "b", "c", "d", "e", "f", "g", "1"];

const COVERS: [(&str, &str); 14] = [
    ("0", "a"),
    ("0", "b"),
    ("0", "c"),
    ("a", "e"),
    ("a", "f"),
    ("b", "d"),
    ("b", "e"),
    ("b", "g"),
    ("c", "f"),
    ("c", "g"),
    ("d", "f"),
    ("e", "1"),
    ("f", "1"),
    ("g", "1"),
];

/// The nine-element bounded poset `{0,a,b,c,d,e,f,g,1}`; not a lattice.
pub fn figure_one() -> Poset {
    build_poset(&LABELS, &COVERS, RelationMode::Covers).expect("fixture poset")
}

/// [`figure_one`] with the antitone involution `0↔1, a↔g, b↔f, c↔e, d↔d`.
pub fn figure_one_with_involution() -> Poset {
    figure_one()
        .with_involution_pairs(&[("0", "1"), ("a", "g"), ("b", "f"), ("c", "e"), ("d", "d")])
        .expect("fixture involution")
}

#[derive(Debug, Clone)]
pub struct ExampleOne {
    pub poset: Poset,
    pub frame: TimeFrame,
    pub p: Proposition,
    pub q: Proposition,
    pub r: Proposition,
}

/// [`figure_one`] over the chain `1 ≤ 2 ≤ 3` with `p = (e,g,e)`, `q = (f,f,g)`, `r = (a,b,b)`.
pub fn example_one() -> ExampleOne {
    let poset = figure_one_with_involution();
    let prop = |ls: [&str; 3]| ls.iter().map(|l| poset.index_of(l).unwrap()).collect();
    ExampleOne {
        frame: TimeFrame::chain(3),
        p: prop(["e", "g", "e"]),
        q: prop(["f", "f", "g"]),
        r: prop(["a", "b", "b"]),
        poset,
    }
}
