//! The p-adic valuation of naturals, ratios and factorials.
//!
//! Factorial valuations work on the argument `n` and never build `n!`:
//! Legendre's floor sum, the digit-sum form `(n - s_p(n)) / (p - 1)`, and
//! closed forms for `p^k!`, `(p^k n)!` and a factorial given by its digits.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::digits::{weight, BaseExpansion};
use crate::{ensure_equal, exact_div, Error, Integer, Natural, Prime, Ratio, Result, Valuation};

/// The largest `e` with `p^e | n`; infinite for `n = 0`.
pub fn val(n: &Natural, p: &Prime) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    if p.is_two() {
        return Valuation::from(n.trailing_zeros().unwrap_or(0));
    }
    let mut count = 0u64;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p.value());
        if !r.is_zero() {
            break;
        }
        count += 1;
        rest = q;
    }
    Valuation::from(count)
}

/// `v_p(a/b) = v_p(a) - v_p(b)`.
pub fn val_ratio(r: &Ratio, p: &Prime) -> Valuation {
    match (val(r.numerator(), p), val(r.denominator(), p)) {
        (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
        // the denominator is nonzero, so only the numerator can be infinite
        _ => Valuation::Infinite,
    }
}

/// Legendre's formula, `sum_{k >= 1} floor(n / p^k)`.
///
/// Uses `floor(n / p^k) = floor(floor(n / p^(k-1)) / p)`; the loop stops once
/// the quotient is zero, i.e. once `p^k > n`.
pub fn val_factorial_direct(n: &Natural, p: &Prime) -> Valuation {
    let mut total = Natural::zero();
    let mut quotient = n / p.value();
    while !quotient.is_zero() {
        total += &quotient;
        quotient /= p.value();
    }
    Valuation::from(total)
}

/// `v_p(n!) = (n - s_p(n)) / (p - 1)`.
pub fn val_factorial_alt(n: &Natural, p: &Prime) -> Result<Valuation> {
    let numerator = Integer::from(n.clone()) - Integer::from(weight(n, p));
    exact_div(&numerator, &p.pred_signed(), "eq-1.5").map(Valuation::Finite)
}

/// `v_p(p^k!) = (p^k - 1) / (p - 1)`.
pub fn val_factorial_prime_power(k: u32, p: &Prime) -> Result<Valuation> {
    repunit(k, p).map(Valuation::from)
}

/// `v_p((p^k n)!) = n (p^k - 1) / (p - 1) + v_p(n!)`.
pub fn val_factorial_scaled(n: &Natural, k: u32, p: &Prime) -> Result<Valuation> {
    let scaled = n * repunit(k, p)?;
    let rest = val_factorial_direct(n, p)
        .into_finite()
        .expect("factorial valuations are finite");
    Ok(Valuation::Finite(Integer::from(scaled) + rest))
}

/// `v_p(n!) = sum_{i >= 1} n_i v_p(p^i!)` for `n = sum n_i p^i`.
///
/// The units digit `n_0` contributes nothing since `v_p(p^0!) = 0`.
pub fn val_factorial_from_digits(e: &BaseExpansion) -> Valuation {
    let p = e.base().value();
    let mut repunit = Natural::zero();
    let mut total = Natural::zero();
    for digit in e.digits().iter().skip(1) {
        repunit = repunit * p + 1u32;
        total += digit * &repunit;
    }
    Valuation::from(total)
}

/// Splits `n` as `(p - 1) v_p(n!) + s_p(n)`, returning both parts.
pub fn split(n: &Natural, p: &Prime) -> Result<(Natural, Natural)> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { what: "n" });
    }
    let valuation = val_factorial_alt(n, p)?
        .into_finite()
        .and_then(|v| v.to_biguint())
        .expect("factorial valuations are finite and non-negative");
    let valuation_part = p.pred() * valuation;
    let weight_part = weight(n, p);
    ensure_equal(&(&valuation_part + &weight_part), n, "eq-1.11")?;
    Ok((valuation_part, weight_part))
}

/// `(p^k - 1) / (p - 1) = 1 + p + ... + p^(k-1)`, checked as an exact
/// division.
fn repunit(k: u32, p: &Prime) -> Result<Natural> {
    let numerator = Integer::from(p.value().pow(k)) - Integer::one();
    let quotient = exact_div(&numerator, &p.pred_signed(), "eq-1.2")?;
    Ok(quotient.to_biguint().expect("p^k >= 1"))
}
