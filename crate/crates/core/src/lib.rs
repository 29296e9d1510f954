//! Tense operators over finite bounded posets, with brute-force law checking.

pub mod check;
pub mod connectives;
pub mod display;
pub mod dsl;
pub mod dm;
pub mod error;
pub mod fixtures;
pub mod frame;
pub mod gen;
pub mod oracle;
pub mod order;
pub mod poset;
pub mod residuated;
pub mod subset;
pub mod suites;
pub mod synthesis;
pub mod tense;

pub use error::{Error, Result};
pub use frame::{build_frame, TimeFrame};
pub use order::OrderKind;
pub use poset::{build_poset, Poset, RelationMode};
pub use subset::Subset;
pub use tense::{Family, Proposition, TenseBundle, TenseOp, Trajectory};
