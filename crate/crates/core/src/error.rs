use thiserror::Error;

/// Errors raised by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation window: {0:?}")]
    InvalidPermutation(Vec<u32>),
    #[error("code {0:?} is not a Lehmer code")]
    CodeNotRealizable(Vec<u32>),
    #[error("the identity has no descent")]
    IdentityHasNoDescent,
    #[error("transposition ({alpha},{beta}) is not a Bruhat cover")]
    NotACover { alpha: usize, beta: usize },
    #[error("delta is undefined for this pair of permutations")]
    DeltaUndefined,
    #[error("permutation is not Grassmannian at {0}")]
    NotGrassmannian(usize),
    #[error("tableau is empty")]
    EmptyTableau,
    #[error("not a semistandard tableau")]
    InvalidTableau,
    #[error("dangling strand at row {row}, column {col}")]
    DanglingStrand { row: usize, col: usize },
    #[error("pipes {0} and {1} cross more than once")]
    DoubleCrossing(usize, usize),
    #[error("pipes do not enter at the south edge and exit at the east edge")]
    BoundaryMismatch,
    #[error("tableau shape does not match the permutation")]
    ShapeMismatch,
    #[error("tableau entry exceeds {0}")]
    EntryExceedsK(usize),
    #[error("bottom row is not weakly decreasing")]
    NotPlactic,
    #[error("biletter ({a},{k}) needs 1 <= a <= k")]
    InvalidBiletter { a: usize, k: usize },
    #[error("chain does not end at the permutation of the pipe dream")]
    ChainMismatch,
    #[error("no preimage under reverse insertion")]
    NoPreimage,
    #[error("left insertion with label {k} needs every descent to be at most {k}, found {descent}")]
    LeftInsertionDomain { k: usize, descent: usize },
    #[error("insertion did not reach a terminating crossing")]
    InsertionStuck,
    #[error("Knuth class exceeds {0} elements")]
    ClassOverflow(usize),
    #[error("no Schubert expansion found up to S_{0}")]
    NoExpansion(usize),
    #[error("descent condition d1(pi) >= d2(rho) fails")]
    DescentConditionViolated,
    #[error("no admissible chain")]
    NoAdmissibleChain,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
