use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("handle reduction exceeded its budget of {budget} steps")]
    BudgetExceeded { budget: u64 },

    #[error("Artin action image exceeded the cap of {cap} letters")]
    OracleBudgetExceeded { cap: usize },

    #[error("{t} lies outside the domain [0, {end}]")]
    DomainError { t: String, end: String },

    #[error("no rational with denominator <= {strands} lies in [{lo}, {hi}]")]
    Inconsistent {
        strands: usize,
        lo: String,
        hi: String,
    },
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
