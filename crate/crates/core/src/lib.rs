//! Valuations and weights over a prime base.
//!
//! `padic-core` computes the p-adic valuation `v_p` of naturals, ratios,
//! factorials, odd factorials, middle binomial coefficients and Catalan
//! numbers without ever materialising the large products involved. Every
//! quantity is reached by at least two routes (a direct floor sum and a
//! digit-sum closed form) and exact-division steps are checked at runtime.
//!
//! The [`oracle`] module is the exception: it builds the products explicitly
//! and trial-divides them, and exists only to provide ground truth.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod digits;
mod error;
pub mod increments;
pub mod odd_factorial;
pub mod oracle;
mod prime;
pub mod special;
mod valuation;
pub mod valuations;

pub use digits::{expand, weight, BaseExpansion};
pub use error::{Error, Result};
pub use prime::Prime;
pub use valuation::{Ratio, Valuation};

/// Arbitrary-precision non-negative integer.
pub type Natural = num_bigint::BigUint;

/// Arbitrary-precision signed integer, used for increments and valuations.
pub type Integer = num_bigint::BigInt;

/// Divides `numerator` by `denominator`, reporting an inconsistency if the
/// division leaves a remainder.
pub(crate) fn exact_div(
    numerator: &Integer,
    denominator: &Integer,
    identity: &'static str,
) -> Result<Integer> {
    use num_integer::Integer as _;
    use num_traits::Zero;

    let (q, r) = numerator.div_rem(denominator);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inconsistency {
            identity,
            detail: alloc::format!("{numerator} is not divisible by {denominator}"),
        })
    }
}

/// Returns an inconsistency error unless `lhs == rhs`.
pub(crate) fn ensure_equal<T>(lhs: &T, rhs: &T, identity: &'static str) -> Result<()>
where
    T: PartialEq + core::fmt::Display,
{
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::Inconsistency {
            identity,
            detail: alloc::format!("routes disagree: {lhs} != {rhs}"),
        })
    }
}
