use alloc::string::String;

use crate::Natural;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(Natural),

    #[error("this formula requires an odd prime, got p = 2")]
    EvenPrime,

    #[error("{what} must be at least 1")]
    ZeroArgument { what: &'static str },

    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("{0} is not odd")]
    NotOdd(Natural),

    #[error("p = {p} divides the scale factor k = {k}")]
    PrimeDividesScale { p: Natural, k: Natural },

    #[error("exponent {0} is too large")]
    ExponentTooLarge(Natural),

    #[error("oracle index {index} exceeds the configured cap {cap}")]
    CapExceeded { index: Natural, cap: u64 },

    /// An exact-division or route-agreement check failed. Reaching this is a
    /// bug in the formula code, never a user error.
    #[error("internal inconsistency in {identity}: {detail}")]
    Inconsistency { identity: &'static str, detail: String },
}

impl Error {
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency { .. })
    }
}
