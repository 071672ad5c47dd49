//! Independent plane-curve engine used to check the combinatorial
//! discriminant: contacts and intersection multiplicities of explicitly
//! parametrized branches, computed by iterated blow-up.

pub mod blowup;
pub mod branch;
pub mod field;
pub mod literal;
pub mod poly;
pub mod series;
pub mod verify;

use thiserror::Error;

pub use blowup::{
    branch_kind, contact_trace, multiplicity_sequence, oracle_contact, oracle_intersection, smooth_difference_order,
    ContactTrace, TraceStep, MAX_TRUNCATION,
};
pub use branch::ParamBranch;
pub use field::{Cyclotomic, CyclotomicField, Scalar};
pub use literal::parse_binomial_product;
pub use poly::BiPoly;
pub use series::Series;
pub use verify::{oracle_class, verify_class, Discrepancy, OracleClass, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("truncation exhausted: {0}")]
    TruncationExhausted(String),
    #[error("branch {0} does not pass through the origin")]
    NotAtOrigin(String),
    #[error("branch {branch} has multiplicity {multiplicity} at an infinitely near point")]
    UnsupportedMultiplicity { branch: String, multiplicity: usize },
    #[error("intersection of {first} and {second}: Noether sum {noether}, substitution {substitution}")]
    MethodDisagreement {
        first: String,
        second: String,
        noether: u64,
        substitution: u64,
    },
    #[error("contact of {first} and {second}: blow-up gives {blowup}, order of difference gives {difference}")]
    ShortcutDisagreement {
        first: String,
        second: String,
        blowup: u32,
        difference: u32,
    },
    #[error("branches {0} and {1} coincide")]
    CoincidentBranches(String, String),
    #[error("cannot parse curve: {0}")]
    Parse(String),
}

impl OracleError {
    pub fn kind(&self) -> &'static str {
        match self {
            OracleError::TruncationExhausted(_) => "TruncationExhausted",
            OracleError::NotAtOrigin(_) => "NotAtOrigin",
            OracleError::UnsupportedMultiplicity { .. } => "UnsupportedMultiplicity",
            OracleError::MethodDisagreement { .. } => "MethodDisagreement",
            OracleError::ShortcutDisagreement { .. } => "ShortcutDisagreement",
            OracleError::CoincidentBranches(..) => "CoincidentBranches",
            OracleError::Parse(_) => "Parse",
        }
    }
}

/// Default working truncation for branches of depth at most `max_depth`.
///
/// `MINSING_TRUNCATION` overrides it.
pub fn default_truncation(max_depth: u32) -> usize {
    if let Some(t) = std::env::var("MINSING_TRUNCATION")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
    {
        return t.min(MAX_TRUNCATION);
    }
    4 * (1 + max_depth as usize) + 8
}
