//! Localizations of the integers and p-adic numbers as quasi-endomorphisms.
//!
//! `S^-1 Z / Z` is modelled by [`PruferFrac`]; for a single prime this is the
//! Prüfer group `Z[1/p]/Z`, whose quasi-endomorphisms are the p-adic numbers.
//! A p-adic number acts on it by truncated multiplication ([`padic_act`]) and
//! can be read back from any such action ([`padic_extract`]).

mod padic;
mod primes;
mod prufer;

use num_bigint::BigInt;
use thiserror::Error;

pub use padic::{
    padic_act, padic_extract, qend_decompose, rational_action, Action, PadicTrunc, QEndProduct,
};
pub use primes::{saturate, MultSet, PrimeSet};
pub use prufer::{crt_join, crt_split, PruferFrac};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("a multiplicative set needs at least one generator")]
    EmptyMultSet,
    #[error("0 cannot generate a multiplicative set")]
    ZeroGenerator,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("denominator must be positive")]
    NonPositiveDenominator,
    #[error("prime {prime} divides the denominator but is outside the support")]
    SupportViolation { prime: BigInt },
    #[error("supports overlap at prime {prime}")]
    OverlappingSupports { prime: u64 },
    #[error("expected prime {expected}, found {found}")]
    PrimeMismatch { expected: u64, found: u64 },
    #[error("needs {needed} p-adic digits past the valuation, only {available} known")]
    PrecisionExhausted { needed: u64, available: u64 },
    #[error("action is not coherent between levels {level} and {}", level + 1)]
    IncoherentAction { level: u32 },
    #[error("digit {digit} out of range for p = {p}")]
    InvalidDigit { p: u64, digit: u64 },
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("leading unit digit is 0; shift it into the valuation")]
    LeadingZeroDigit,
    #[error("no p-adic digits given")]
    NoDigits,
}
