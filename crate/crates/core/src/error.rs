use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QError {
    #[error("negative power of q evaluated at q = 0")]
    ZeroBase,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("infinite q-Pochhammer product has no exact Laurent form")]
    InfiniteExact,
    #[error("infinite q-Pochhammer product diverges for |q| = {0} >= 1")]
    Divergent(f64),
    #[error("q must lie in the open interval (0, 1), got {0}")]
    BaseOutOfRange(f64),
    #[error("series does not terminate: upper parameter q^{0} is not q^-n")]
    NonTerminating(i64),
    #[error("denominator Pochhammer vanishes at term {0} before termination")]
    VanishingDenominator(usize),
    #[error("singular evaluation: {0}")]
    Singular(String),
    #[error("marginal mismatch: {0}")]
    MarginalMismatch(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("word must be nonempty and over {{1, 2}}")]
    BadWord,
    #[error("state {state:?} lies outside the safe window [{lo}, {hi}) of the truncation")]
    OutsideWindow { state: Vec<usize>, lo: usize, hi: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type QResult<T> = Result<T, QError>;
