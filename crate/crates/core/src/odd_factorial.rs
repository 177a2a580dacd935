//! The p-adic valuation of the odd factorial `(2n-1)!! = 1 * 3 * ... * (2n-1)`.
//!
//! Routes: the iterative floor/ceiling sum, two digit-sum closed forms, the
//! `log_p m` form built on floor-to-odd rounding, and closed forms for
//! `(pm)!!` and `p^k!!`. All odd-prime routes reject `p = 2`; use
//! [`val_oddfact_any`] for a total entry point.
//!
//! Functions taking `n` refer to `(2n-1)!!`. Functions taking an
//! [`OddNatural`] `m` refer to `m!!` directly.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::Zero;

use crate::digits::weight;
use crate::{ensure_equal, exact_div, Error, Integer, Natural, Prime, Result, Valuation};

/// An odd natural number `m = 2n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddNatural(Natural);

impl OddNatural {
    pub fn new(value: Natural) -> Result<Self> {
        if value.is_odd() {
            Ok(OddNatural(value))
        } else {
            Err(Error::NotOdd(value))
        }
    }

    /// `2n - 1` for `n >= 1`.
    pub fn from_index(n: &Natural) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroArgument { what: "n" });
        }
        Ok(OddNatural((n << 1u32) - 1u32))
    }

    pub fn value(&self) -> &Natural {
        &self.0
    }

    /// `n` such that this value is `2n - 1`.
    pub fn index(&self) -> Natural {
        (&self.0 + 1u32) >> 1u32
    }
}

impl fmt::Display for OddNatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The greatest odd integer not exceeding `numerator / denominator`.
///
/// Quotients in `[0, 1)` round to `-1`.
pub fn floor_odd(numerator: &Natural, denominator: &Natural) -> Result<Integer> {
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let q = Integer::from(numerator / denominator);
    Ok(if q.is_odd() { q } else { q - 1 })
}

/// `sum_{k >= 1} ceil(floor((2n-1) / p^k) / 2)`.
pub fn val_oddfact_direct(n: &Natural, p: &Prime) -> Result<Valuation> {
    let terms = oddfact_direct_terms(n, p)?;
    Ok(Valuation::from(terms.into_iter().sum::<Natural>()))
}

/// The summands of [`val_oddfact_direct`], one per power `p^k <= 2n - 1`.
///
/// Term `k` counts the odd multiples of `p^k` up to `2n - 1`: of the
/// `floor((2n-1) / p^k)` multiples, every other one is even.
pub fn oddfact_direct_terms(n: &Natural, p: &Prime) -> Result<Vec<Natural>> {
    require_odd_prime(p)?;
    let m = OddNatural::from_index(n)?;
    let mut terms = Vec::new();
    let mut multiples = m.value() / p.value();
    while !multiples.is_zero() {
        terms.push((&multiples + 1u32) >> 1u32);
        multiples /= p.value();
    }
    Ok(terms)
}

/// `(n + s_p(n) - s_p(2n)) / (p - 1)`.
pub fn val_oddfact_alt(n: &Natural, p: &Prime) -> Result<Valuation> {
    require_odd_prime(p)?;
    require_positive(n)?;
    let twice = n << 1u32;
    let numerator = Integer::from(n + weight(n, p)) - Integer::from(weight(&twice, p));
    exact_div(&numerator, &p.pred_signed(), "eq-3.5").map(Valuation::Finite)
}

/// `(n + s_p(n - 1) - s_p(2n - 1)) / (p - 1)`.
pub fn val_oddfact_alt2(n: &Natural, p: &Prime) -> Result<Valuation> {
    require_odd_prime(p)?;
    let m = OddNatural::from_index(n)?;
    let numerator = Integer::from(n + weight(&(n - 1u32), p)) - Integer::from(weight(m.value(), p));
    exact_div(&numerator, &p.pred_signed(), "eq-3.6").map(Valuation::Finite)
}

/// `v_p((pm)!!) = (m + 1) / 2 + v_p(m!!)`.
pub fn val_oddfact_shifted(m: &OddNatural, p: &Prime) -> Result<Valuation> {
    require_odd_prime(p)?;
    let inner = val_oddfact_direct(&m.index(), p)?
        .into_finite()
        .expect("odd factorial valuations are finite");
    Ok(Valuation::Finite(Integer::from(m.index()) + inner))
}

/// `v_p(p^k!!) = (k + (p^k - 1) / (p - 1)) / 2`, for `k >= 1`.
pub fn val_oddfact_prime_power(k: u32, p: &Prime) -> Result<Valuation> {
    require_odd_prime(p)?;
    if k == 0 {
        return Err(Error::ZeroArgument { what: "k" });
    }
    let repunit = exact_div(
        &(Integer::from(p.value().pow(k)) - 1),
        &p.pred_signed(),
        "eq-3.2",
    )?;
    let twice = repunit + k;
    exact_div(&twice, &Integer::from(2), "eq-3.2").map(Valuation::Finite)
}

/// `(floor(log_p m) + sum_{j=1..floor(log_p m)} floor_odd(m / p^j)) / 2`.
///
/// The sum stops at `floor(log_p m)`, so every quotient is at least 1 and
/// the `-1` branch of [`floor_odd`] never contributes.
pub fn val_oddfact_log_form(m: &OddNatural, p: &Prime) -> Result<Valuation> {
    require_odd_prime(p)?;
    let mut log = 0u64;
    let mut sum = Integer::zero();
    let mut power = p.value().clone();
    while &power <= m.value() {
        log += 1;
        sum += floor_odd(m.value(), &power)?;
        power *= p.value();
    }
    let twice = sum + log;
    exact_div(&twice, &Integer::from(2), "eq-3.3").map(Valuation::Finite)
}

/// `v_p((2n-1)!!)` for any prime: zero for `p = 2`, the digit-sum form
/// otherwise.
pub fn val_oddfact_any(n: &Natural, p: &Prime) -> Result<Valuation> {
    require_positive(n)?;
    if p.is_two() {
        Ok(Valuation::zero())
    } else {
        val_oddfact_alt(n, p)
    }
}

/// `floor(log_p m)` by repeated multiplication.
pub fn floor_log(m: &Natural, p: &Prime) -> u64 {
    let mut log = 0;
    let mut power = p.value().clone();
    while &power <= m {
        log += 1;
        power *= p.value();
    }
    log
}

/// Checks `v_p((2n)!) = v_p(n!) + v_p((2n-1)!!)` for odd `p`, using the
/// factorial floor sum and the direct odd-factorial sum.
pub fn check_even_odd_decomposition(n: &Natural, p: &Prime) -> Result<()> {
    use crate::valuations::val_factorial_direct;

    let whole = val_factorial_direct(&(n << 1u32), p);
    let halves = val_factorial_direct(n, p).into_finite().unwrap_or_default()
        + val_oddfact_direct(n, p)?.into_finite().unwrap_or_default();
    ensure_equal(&whole, &Valuation::Finite(halves), "eq-3.5-decomposition")
}

fn require_odd_prime(p: &Prime) -> Result<()> {
    if p.is_two() {
        Err(Error::EvenPrime)
    } else {
        Ok(())
    }
}

fn require_positive(n: &Natural) -> Result<()> {
    if n.is_zero() {
        Err(Error::ZeroArgument { what: "n" })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuations::val;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn prime(p: u64) -> Prime {
        Prime::try_from(p).unwrap()
    }

    fn nat(n: u64) -> Natural {
        Natural::from(n)
    }

    fn odd(m: u64) -> OddNatural {
        OddNatural::new(nat(m)).unwrap()
    }

    fn v(x: i64) -> Valuation {
        Valuation::from(x)
    }

    /// Brute force: trial-divide each odd factor 1, 3, ..., 2n-1.
    fn brute(n: u64, p: u64) -> i64 {
        (1..=n)
            .map(|i| {
                let mut f = 2 * i - 1;
                let mut e = 0;
                while f % p == 0 {
                    f /= p;
                    e += 1;
                }
                e
            })
            .sum()
    }

    const ODD_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

    #[test]
    fn frozen_brute_force_values() {
        assert_eq!(brute(15, 3), 8); // 29!!
        assert_eq!(brute(8, 5), 2); // 15!!
        assert_eq!(brute(5, 3), 3); // 9!! = 945
        assert_eq!(brute(3, 5), 1); // 5!! = 15
        assert_eq!(brute(8, 3), 4); // 15!! = 2027025 = 3^4 * 25025
        assert_eq!(brute(2, 3), 1); // 3!!
        assert_eq!(brute(14, 3), 8); // 27!!
        assert_eq!(brute(13, 5), 4); // 25!!
        assert_eq!(brute(4, 7), 1); // 7!!
        assert_eq!(brute(50, 7), 8);
        assert_eq!(brute(123, 11), 12);
        assert_eq!(brute(61, 11), 7); // 121!!
    }

    #[test]
    fn floor_odd_examples() {
        assert_eq!(floor_odd(&nat(25), &nat(7)), Ok(Integer::from(3)));
        assert_eq!(floor_odd(&nat(34), &nat(7)), Ok(Integer::from(3)));
        assert_eq!(floor_odd(&nat(6), &nat(2)), Ok(Integer::from(3)));
        assert_eq!(floor_odd(&nat(1), &nat(3)), Ok(Integer::from(-1)));
        assert_eq!(floor_odd(&nat(0), &nat(3)), Ok(Integer::from(-1)));
        assert_eq!(floor_odd(&nat(1), &nat(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn example_one() {
        let p = prime(3);
        let terms: Vec<u64> = oddfact_direct_terms(&nat(15), &p)
            .unwrap()
            .iter()
            .map(|t| t.to_u64().unwrap())
            .collect();
        assert_eq!(terms, [5, 2, 1]);
        assert_eq!(val_oddfact_direct(&nat(15), &p), Ok(v(8)));
        assert_eq!(val_oddfact_alt(&nat(15), &p), Ok(v(8)));
        assert_eq!(val_oddfact_alt2(&nat(15), &p), Ok(v(8)));
        assert_eq!(val_oddfact_log_form(&odd(29), &p), Ok(v(8)));
        assert_eq!(val_oddfact_any(&nat(15), &p), Ok(v(8)));
    }

    #[test]
    fn direct_and_alt_examples() {
        assert_eq!(val_oddfact_direct(&nat(8), &prime(5)), Ok(v(2)));
        assert_eq!(val_oddfact_direct(&nat(2), &prime(5)), Ok(v(0)));
        for &p in &ODD_PRIMES {
            assert_eq!(val_oddfact_alt(&nat(1), &prime(p)), Ok(v(0)));
            assert_eq!(val_oddfact_alt2(&nat(1), &prime(p)), Ok(v(0)));
            assert_eq!(val_oddfact_log_form(&odd(1), &prime(p)), Ok(v(0)));
        }
        assert_eq!(val_oddfact_alt(&nat(50), &prime(7)), Ok(v(8)));
        assert_eq!(val_oddfact_alt2(&nat(123), &prime(11)), Ok(v(12)));
        assert_eq!(val_oddfact_log_form(&odd(121), &prime(11)), Ok(v(7)));
    }

    #[test]
    fn shifted_and_prime_power_examples() {
        assert_eq!(val_oddfact_shifted(&odd(3), &prime(3)), Ok(v(3)));
        assert_eq!(val_oddfact_shifted(&odd(1), &prime(5)), Ok(v(1)));
        assert_eq!(val_oddfact_shifted(&odd(5), &prime(3)), Ok(v(4)));
        assert_eq!(val_oddfact_prime_power(1, &prime(3)), Ok(v(1)));
        assert_eq!(val_oddfact_prime_power(3, &prime(3)), Ok(v(8)));
        assert_eq!(val_oddfact_prime_power(2, &prime(5)), Ok(v(4)));
        assert_eq!(
            val_oddfact_prime_power(0, &prime(5)),
            Err(Error::ZeroArgument { what: "k" })
        );
    }

    #[test]
    fn any_dispatches_on_two() {
        for n in 1..100 {
            assert_eq!(val_oddfact_any(&nat(n), &prime(2)), Ok(v(0)));
        }
        assert_eq!(val_oddfact_any(&nat(4), &prime(7)), Ok(v(1)));
        assert_eq!(val_oddfact_any(&nat(15), &prime(3)), Ok(v(8)));
    }

    #[test]
    fn rejects_even_prime_and_zero_index() {
        let two = prime(2);
        assert_eq!(val_oddfact_direct(&nat(3), &two), Err(Error::EvenPrime));
        assert_eq!(val_oddfact_alt(&nat(3), &two), Err(Error::EvenPrime));
        assert_eq!(val_oddfact_alt2(&nat(3), &two), Err(Error::EvenPrime));
        assert_eq!(val_oddfact_log_form(&odd(3), &two), Err(Error::EvenPrime));
        assert_eq!(val_oddfact_shifted(&odd(3), &two), Err(Error::EvenPrime));
        assert_eq!(val_oddfact_prime_power(2, &two), Err(Error::EvenPrime));
        let zero = Err(Error::ZeroArgument { what: "n" });
        assert_eq!(val_oddfact_direct(&nat(0), &prime(3)), zero);
        assert_eq!(val_oddfact_alt(&nat(0), &prime(3)), zero);
        assert_eq!(val_oddfact_alt2(&nat(0), &prime(3)), zero);
        assert_eq!(val_oddfact_any(&nat(0), &prime(2)), zero);
        assert!(matches!(OddNatural::new(nat(4)), Err(Error::NotOdd(_))));
    }

    #[test]
    fn all_routes_agree_with_brute_force() {
        for &p in &ODD_PRIMES {
            let base = prime(p);
            let mut expected = 0i64;
            for n in 1..=3000u64 {
                let f = 2 * n - 1;
                expected += val(&nat(f), &base).to_i64().unwrap();
                let direct = val_oddfact_direct(&nat(n), &base).unwrap();
                assert_eq!(direct, v(expected), "n={n} p={p}");
                assert_eq!(val_oddfact_alt(&nat(n), &base).unwrap(), direct);
                assert_eq!(val_oddfact_alt2(&nat(n), &base).unwrap(), direct);
                assert_eq!(val_oddfact_log_form(&odd(f), &base).unwrap(), direct);
            }
        }
    }

    #[test]
    fn closed_forms_match_direct() {
        for &p in &ODD_PRIMES {
            let base = prime(p);
            for k in 1..=8u32 {
                let index = (nat(p).pow(k) + 1u32) >> 1u32;
                assert_eq!(
                    val_oddfact_prime_power(k, &base).unwrap(),
                    val_oddfact_direct(&index, &base).unwrap()
                );
            }
            for m in (1..=2001u64).step_by(2) {
                let index = nat((p * m).div_ceil(2));
                assert_eq!(
                    val_oddfact_shifted(&odd(m), &base).unwrap(),
                    val_oddfact_direct(&index, &base).unwrap(),
                    "m={m} p={p}"
                );
            }
        }
    }

    #[test]
    fn even_odd_decomposition() {
        for &p in &ODD_PRIMES {
            for n in 1..=2000u64 {
                check_even_odd_decomposition(&nat(n), &prime(p)).unwrap();
            }
        }
    }

    #[test]
    fn floor_log_exact_at_powers() {
        let p = prime(3);
        for k in 0..60u64 {
            let pk = nat(3).pow(k as u32);
            assert_eq!(floor_log(&pk, &p), k);
            if k > 0 {
                assert_eq!(floor_log(&(&pk - 1u32), &p), k - 1);
            }
        }
    }

    proptest! {
        // ceil(a/2) + floor(a/2) = a
        #[test]
        fn ceil_plus_floor_half(a in 0u64..u64::MAX / 2) {
            let a = nat(a);
            let ceil = (&a + 1u32) >> 1u32;
            let floor = &a >> 1u32;
            prop_assert_eq!(ceil + floor, a);
        }

        // floor(floor(x) / b) = floor(x / b) for x = m / p^k
        #[test]
        fn nested_floor(m in 0u64..1_000_000, k in 0u32..6, b in 1u64..1000, pi in 0usize..5) {
            let pk = nat(ODD_PRIMES[pi]).pow(k);
            let inner = nat(m) / &pk;
            prop_assert_eq!(inner / b, nat(m) / (pk * b));
        }

        #[test]
        fn floor_odd_is_greatest_odd_below(num in 0u64..1_000_000, den in 1u64..1000) {
            let q = floor_odd(&nat(num), &nat(den)).unwrap();
            prop_assert!(q.is_odd());
            prop_assert!(&q * Integer::from(den) <= Integer::from(num));
            prop_assert!((&q + 2) * Integer::from(den) > Integer::from(num));
        }
    }
}
