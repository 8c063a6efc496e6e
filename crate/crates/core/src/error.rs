use thiserror::Error;

use crate::braid::PermZp;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters p={p}, n={n}: both must be at least 1")]
    InvalidParams { p: usize, n: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("endomorphisms have different parameters")]
    ParamsMismatch,

    #[error("braid word is not pure (image {0})")]
    NotPure(PermZp),

    #[error("cannot forget a strand of a one-strand braid")]
    Underflow,

    #[error("operation needs n >= 2 (got n = 1)")]
    UnsupportedRank,

    #[error("image of x{orbit}.{strand} is not of the form A x A^-1")]
    NotConjugateForm { orbit: usize, strand: usize },

    #[error("generator targets do not form a permutation")]
    NotPermutation,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("greedy reduction stuck at length {length}:\n{endo}")]
    Stuck { length: usize, endo: String },

    #[error("terminal map is a nontrivial generator permutation: {residual}")]
    NotRealizable { residual: String },

    #[error("word does not lie in the kernel of the strand-forgetting projection")]
    NotInKernel,

    #[error("no basis word of length <= {0} matches")]
    SearchBudgetExceeded(usize),

    #[error("invalid render style: {0}")]
    InvalidStyle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
