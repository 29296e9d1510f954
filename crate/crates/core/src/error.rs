use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cycle error: {a} and {b} lie below each other")]
    Cycle { a: String, b: String },
    #[error("relation error: {0}")]
    Relation(String),
    #[error("involution error: {0}")]
    Involution(String),
    #[error("size error: {what} has size {size}, cap is {cap}")]
    Size {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("empty set error: {0} must be nonempty")]
    EmptySet(&'static str),
    #[error("non-serial error: time point {0} has no predecessor or no successor")]
    NonSerial(String),
    #[error("poset is not bounded")]
    NotBounded,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("shape mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
