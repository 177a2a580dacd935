//! Brute-force ground truth.
//!
//! Builds factorials, odd factorials, middle binomial coefficients and
//! Catalan numbers as exact integers, or sums trial-division valuations of
//! their factors. Nothing here calls into the formula modules; the oracle
//! only reads the value of a [`Prime`].
//!
//! Intentionally naive. Indices are capped by an [`OracleConfig`].

use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::Zero;

use crate::{Error, Natural, Prime, Result, Valuation};

/// Materialising `n!` is only done up to this index.
pub const MATERIALIZE_CAP: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest index for factorial and odd-factorial sums.
    pub factorial_cap: u64,
    /// Largest index for middle binomial and Catalan numbers.
    pub special_cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            factorial_cap: 5000,
            special_cap: 500,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleKind {
    Factorial,
    OddFactorial,
    Mbc,
    Catalan,
}

/// An exactly computed product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleProduct {
    pub kind: OracleKind,
    pub index: Natural,
    pub value: Natural,
}

impl OracleProduct {
    /// `n!`, `(2n-1)!!`, `C(2n, n)` or `Cat(n)` for the given kind.
    pub fn build(kind: OracleKind, n: u64, config: &OracleConfig) -> Result<Self> {
        let cap = match kind {
            OracleKind::Factorial | OracleKind::OddFactorial => config.factorial_cap,
            OracleKind::Mbc | OracleKind::Catalan => config.special_cap,
        };
        check_cap(n, cap)?;
        let value = match kind {
            OracleKind::Factorial => factorial(n),
            OracleKind::OddFactorial => (1..=n).map(|i| Natural::from(2 * i - 1)).product(),
            OracleKind::Mbc => middle_binomial(n)?,
            OracleKind::Catalan => catalan(n)?,
        };
        Ok(OracleProduct {
            kind,
            index: Natural::from(n),
            value,
        })
    }

    pub fn valuation(&self, p: &Prime) -> Valuation {
        trial_division(&self.value, p.value())
    }
}

fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded {
            index: Natural::from(n),
            cap,
        })
    } else {
        Ok(())
    }
}

fn factorial(n: u64) -> Natural {
    (1..=n).map(Natural::from).product()
}

/// `(2n)! / (n!)^2`, exact division checked.
fn middle_binomial(n: u64) -> Result<Natural> {
    let half = factorial(n);
    exact_quotient(&factorial(2 * n), &(&half * &half), "oracle-mbc")
}

/// `C(2n, n) / (n + 1)`, exact division checked.
fn catalan(n: u64) -> Result<Natural> {
    exact_quotient(&middle_binomial(n)?, &Natural::from(n + 1), "oracle-catalan")
}

fn exact_quotient(a: &Natural, b: &Natural, identity: &'static str) -> Result<Natural> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inconsistency {
            identity,
            detail: alloc::format!("{a} is not divisible by {b}"),
        })
    }
}

/// Counts exact divisions of `n` by `p` until a nonzero remainder.
fn trial_division(n: &Natural, p: &Natural) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let mut count = 0u64;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Valuation::from(count);
        }
        count += 1;
        rest = q;
    }
}

fn trial_division_u64(mut n: u64, p: u64) -> u64 {
    let mut count = 0;
    while n % p == 0 {
        n /= p;
        count += 1;
    }
    count
}

/// `v_p(n)` by trial division, for `n >= 1`.
pub fn oracle_val(n: &Natural, p: &Prime) -> Result<Valuation> {
    if n.is_zero() {
        return Err(Error::ZeroArgument { what: "n" });
    }
    Ok(trial_division(n, p.value()))
}

/// `v_p(n!)` as `sum_{i=1..n} v_p(i)`.
pub fn oracle_factorial_val(n: u64, p: &Prime, config: &OracleConfig) -> Result<Valuation> {
    check_cap(n, config.factorial_cap)?;
    Ok(Valuation::from(sum_of_valuations(1..=n, p)))
}

/// `v_p(n!)` by building `n!` and trial-dividing it, for `n <= 200`.
pub fn oracle_factorial_val_materialized(n: u64, p: &Prime) -> Result<Valuation> {
    check_cap(n, MATERIALIZE_CAP)?;
    Ok(trial_division(&factorial(n), p.value()))
}

/// `v_p((2n-1)!!)` as `sum_{i=1..n} v_p(2i - 1)`.
pub fn oracle_oddfact_val(n: u64, p: &Prime, config: &OracleConfig) -> Result<Valuation> {
    if n == 0 {
        return Err(Error::ZeroArgument { what: "n" });
    }
    check_cap(n, config.factorial_cap)?;
    Ok(Valuation::from(sum_of_valuations((1..=n).map(|i| 2 * i - 1), p)))
}

/// Valuation of the exact product of the given kind.
pub fn oracle_special(
    kind: OracleKind,
    n: u64,
    p: &Prime,
    config: &OracleConfig,
) -> Result<Valuation> {
    OracleProduct::build(kind, n, config).map(|product| product.valuation(p))
}

/// Whether the exact Catalan number `Cat(n)` is odd.
pub fn oracle_catalan_is_odd(n: u64, config: &OracleConfig) -> Result<bool> {
    let product = OracleProduct::build(OracleKind::Catalan, n, config)?;
    Ok(product.value.is_odd())
}

/// Checks `C(2n, n) = (n + 1) Cat(n)` on the exact integers.
pub fn oracle_twin_identity(n: u64, config: &OracleConfig) -> Result<bool> {
    let mbc = OracleProduct::build(OracleKind::Mbc, n, config)?;
    let cat = OracleProduct::build(OracleKind::Catalan, n, config)?;
    Ok(mbc.value == cat.value * Natural::from(n + 1))
}

fn sum_of_valuations(factors: impl Iterator<Item = u64>, p: &Prime) -> u64 {
    match p.as_u64() {
        Some(small) => factors.map(|f| trial_division_u64(f, small)).sum(),
        // a prime beyond a word divides no word-sized factor
        None => 0,
    }
}

/// Prefix sums `v_p(i!)` for `i = 0..=n`, one trial division per step.
///
/// Same arithmetic as [`oracle_factorial_val`], shared across a sweep.
pub fn oracle_factorial_table(n: u64, p: &Prime, config: &OracleConfig) -> Result<Vec<u64>> {
    check_cap(n, config.factorial_cap)?;
    let mut table = Vec::with_capacity(n as usize + 1);
    let mut total = 0u64;
    table.push(0);
    for i in 1..=n {
        if let Some(small) = p.as_u64() {
            total += trial_division_u64(i, small);
        }
        table.push(total);
    }
    Ok(table)
}

/// Same as [`oracle_factorial_table`] for `(2i-1)!!`, `i = 0..=n` (entry 0
/// is the empty product).
pub fn oracle_oddfact_table(n: u64, p: &Prime, config: &OracleConfig) -> Result<Vec<u64>> {
    check_cap(n, config.factorial_cap)?;
    let mut table = Vec::with_capacity(n as usize + 1);
    let mut total = 0u64;
    table.push(0);
    for i in 1..=n {
        if let Some(small) = p.as_u64() {
            total += trial_division_u64(2 * i - 1, small);
        }
        table.push(total);
    }
    Ok(table)
}

impl OracleKind {
    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Factorial => "factorial",
            OracleKind::OddFactorial => "odd_factorial",
            OracleKind::Mbc => "mbc",
            OracleKind::Catalan => "catalan",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn prime(p: u64) -> Prime {
        Prime::try_from(p).unwrap()
    }

    fn v(x: i64) -> Valuation {
        Valuation::from(x)
    }

    #[test]
    fn val_examples() {
        assert_eq!(oracle_val(&Natural::from(36u32), &prime(3)), Ok(v(2)));
        assert_eq!(oracle_val(&Natural::one(), &prime(7)), Ok(v(0)));
        assert_eq!(oracle_val(&(Natural::one() << 20u32), &prime(2)), Ok(v(20)));
        assert!(oracle_val(&Natural::zero(), &prime(2)).is_err());
    }

    #[test]
    fn factorial_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(oracle_factorial_val(1003, &prime(5), &cfg), Ok(v(249)));
        assert_eq!(oracle_factorial_val(0, &prime(5), &cfg), Ok(v(0)));
        assert_eq!(oracle_factorial_val(10, &prime(2), &cfg), Ok(v(8)));
        assert_eq!(factorial(10), Natural::from(3_628_800u32));
        assert_eq!(oracle_factorial_val_materialized(10, &prime(2)), Ok(v(8)));
    }

    #[test]
    fn odd_factorial_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(oracle_oddfact_val(15, &prime(3), &cfg), Ok(v(8)));
        assert_eq!(oracle_oddfact_val(1, &prime(3), &cfg), Ok(v(0)));
        assert_eq!(oracle_oddfact_val(5, &prime(3), &cfg), Ok(v(3)));
        let product = OracleProduct::build(OracleKind::OddFactorial, 5, &cfg).unwrap();
        assert_eq!(product.value, Natural::from(945u32));
    }

    #[test]
    fn special_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(oracle_special(OracleKind::Catalan, 4, &prime(2), &cfg), Ok(v(1)));
        assert_eq!(oracle_special(OracleKind::Mbc, 0, &prime(3), &cfg), Ok(v(0)));
        assert_eq!(oracle_special(OracleKind::Mbc, 5, &prime(2), &cfg), Ok(v(2)));
        let cat7 = OracleProduct::build(OracleKind::Catalan, 7, &cfg).unwrap();
        assert_eq!(cat7.value, Natural::from(429u32));
    }

    #[test]
    fn caps_are_enforced() {
        let cfg = OracleConfig {
            factorial_cap: 10,
            special_cap: 3,
        };
        assert!(matches!(
            oracle_factorial_val(11, &prime(2), &cfg),
            Err(Error::CapExceeded { cap: 10, .. })
        ));
        assert!(oracle_special(OracleKind::Mbc, 4, &prime(2), &cfg).is_err());
        assert!(oracle_factorial_val_materialized(201, &prime(2)).is_err());
    }

    #[test]
    fn sum_route_matches_materialized_route() {
        let cfg = OracleConfig::default();
        for p in [2, 3, 5, 7, 11, 13] {
            for n in 0..=MATERIALIZE_CAP {
                assert_eq!(
                    oracle_factorial_val(n, &prime(p), &cfg),
                    oracle_factorial_val_materialized(n, &prime(p))
                );
            }
        }
    }

    #[test]
    fn tables_match_pointwise() {
        let cfg = OracleConfig::default();
        let p = prime(3);
        let fact = oracle_factorial_table(300, &p, &cfg).unwrap();
        let odd = oracle_oddfact_table(300, &p, &cfg).unwrap();
        for n in 1..=300u64 {
            assert_eq!(oracle_factorial_val(n, &p, &cfg), Ok(Valuation::from(fact[n as usize])));
            assert_eq!(oracle_oddfact_val(n, &p, &cfg), Ok(Valuation::from(odd[n as usize])));
        }
    }

    #[test]
    fn twin_identity() {
        let cfg = OracleConfig::default();
        for n in 0..=200 {
            assert_eq!(oracle_twin_identity(n, &cfg), Ok(true));
        }
    }
}
