//! The increment operator `Δf(n) = f(n + 1) - f(n)` applied to weights and
//! valuations.
//!
//! Each operation computes the plain difference and the closed form in terms
//! of `v_p`, and fails with [`Error::Inconsistency`] if the two disagree.
//!
//! The group increment `Δ^k f(n) = f(n + k) - f(n)` is a `k`-step telescoped
//! sum, not `k`-fold composition of `Δ`.
//!
//! [`delta_weight`] also accepts `n = 0`: `s_p(0) = 0`, so
//! `Δs_p(0) = 1 = 1 - (p - 1) v_p(1)`.

use num_traits::{One, Zero};

use crate::digits::weight;
use crate::valuations::{val, val_factorial_direct};
use crate::{ensure_equal, exact_div, Error, Integer, Natural, Prime, Result, Valuation};

/// `v_p(n)` for `n >= 1` as an integer.
fn finite_val(n: &Natural, p: &Prime) -> Integer {
    val(n, p).into_finite().expect("valuation of a positive integer")
}

fn signed_weight(n: &Natural, p: &Prime) -> Integer {
    Integer::from(weight(n, p))
}

fn require_positive(n: &Natural, what: &'static str) -> Result<()> {
    if n.is_zero() {
        Err(Error::ZeroArgument { what })
    } else {
        Ok(())
    }
}

/// `Δs_p(n) = s_p(n + 1) - s_p(n) = 1 - (p - 1) v_p(n + 1)`.
pub fn delta_weight(n: &Natural, p: &Prime) -> Result<Integer> {
    let next = n + 1u32;
    let difference = signed_weight(&next, p) - signed_weight(n, p);
    let closed = Integer::one() - p.pred_signed() * finite_val(&next, p);
    ensure_equal(&difference, &closed, "eq-2.2")?;
    Ok(difference)
}

/// `Δv_p(n!) = v_p((n + 1)!) - v_p(n!) = (1 - Δs_p(n)) / (p - 1)`.
pub fn delta_val_factorial(n: &Natural, p: &Prime) -> Result<Integer> {
    require_positive(n, "n")?;
    let after = val_factorial_direct(&(n + 1u32), p).into_finite().unwrap_or_default();
    let before = val_factorial_direct(n, p).into_finite().unwrap_or_default();
    let difference = after - before;
    let closed = exact_div(
        &(Integer::one() - delta_weight(n, p)?),
        &p.pred_signed(),
        "eq-1.12",
    )?;
    ensure_equal(&difference, &closed, "eq-1.12")?;
    Ok(difference)
}

/// `v_p(n) = (1 - Δs_p(n - 1)) / (p - 1)`.
pub fn val_via_delta(n: &Natural, p: &Prime) -> Result<Valuation> {
    require_positive(n, "n")?;
    let step = signed_weight(n, p) - signed_weight(&(n - 1u32), p);
    let v = exact_div(&(Integer::one() - step), &p.pred_signed(), "eq-2.1")?;
    let result = Valuation::Finite(v);
    ensure_equal(&result, &val(n, p), "eq-2.1")?;
    Ok(result)
}

/// `Δv_p(n) = v_p(n + 1) - v_p(n) = (Δs_p(n - 1) - Δs_p(n)) / (p - 1)`.
pub fn delta_val(n: &Natural, p: &Prime) -> Result<Integer> {
    require_positive(n, "n")?;
    let difference = finite_val(&(n + 1u32), p) - finite_val(n, p);
    let before = signed_weight(n, p) - signed_weight(&(n - 1u32), p);
    let after = signed_weight(&(n + 1u32), p) - signed_weight(n, p);
    let closed = exact_div(&(before - after), &p.pred_signed(), "eq-2.3")?;
    ensure_equal(&difference, &closed, "eq-2.3")?;
    Ok(difference)
}

/// `Δs_p(kn - 1)` for `p ∤ k`, which equals `Δs_p(n - 1) = 1 - (p - 1) v_p(n)`.
pub fn delta_weight_scaled(k: &Natural, n: &Natural, p: &Prime) -> Result<Integer> {
    require_positive(k, "k")?;
    require_positive(n, "n")?;
    if p.divides(k) {
        return Err(Error::PrimeDividesScale {
            p: p.value().clone(),
            k: k.clone(),
        });
    }
    let kn = k * n;
    let scaled = signed_weight(&kn, p) - signed_weight(&(&kn - 1u32), p);
    let unscaled = signed_weight(n, p) - signed_weight(&(n - 1u32), p);
    let closed = Integer::one() - p.pred_signed() * finite_val(n, p);
    ensure_equal(&scaled, &unscaled, "thm-4")?;
    ensure_equal(&scaled, &closed, "thm-4")?;
    Ok(scaled)
}

/// `Δ^k s_p(n) = s_p(n + k) - s_p(n)`.
///
/// Checked against the telescoped sum of `k` single increments and against
/// `k - (p - 1) sum_{j=1..k} v_p(n + j)`.
pub fn group_delta_weight(n: &Natural, k: u64, p: &Prime) -> Result<Integer> {
    if k == 0 {
        return Err(Error::ZeroArgument { what: "k" });
    }
    let difference = signed_weight(&(n + k), p) - signed_weight(n, p);

    let mut telescoped = Integer::zero();
    let mut valuations = Integer::zero();
    let mut current = n.clone();
    let mut current_weight = signed_weight(&current, p);
    for _ in 0..k {
        current += 1u32;
        let next_weight = signed_weight(&current, p);
        telescoped += &next_weight - &current_weight;
        valuations += finite_val(&current, p);
        current_weight = next_weight;
    }
    let closed = Integer::from(k) - p.pred_signed() * valuations;

    ensure_equal(&difference, &telescoped, "eq-5.4")?;
    ensure_equal(&difference, &closed, "eq-5.5")?;
    Ok(difference)
}

/// The increments of `s_p`, `v_p(·!)` and `v_p` at a single point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncrementReport {
    pub n: Natural,
    pub p: Prime,
    pub delta_weight: Integer,
    pub delta_val_factorial: Integer,
    pub delta_val: Integer,
}

impl IncrementReport {
    /// Builds the report for `n >= 1`, checking
    /// `Δs_p(n) + (p - 1) v_p(n + 1) = 1`.
    pub fn new(n: &Natural, p: &Prime) -> Result<Self> {
        let report = IncrementReport {
            n: n.clone(),
            p: p.clone(),
            delta_weight: delta_weight(n, p)?,
            delta_val_factorial: delta_val_factorial(n, p)?,
            delta_val: delta_val(n, p)?,
        };
        let lhs = &report.delta_weight + p.pred_signed() * finite_val(&(n + 1u32), p);
        ensure_equal(&lhs, &Integer::one(), "eq-5.1")?;
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::try_from(p).unwrap()
    }

    fn nat(n: u64) -> Natural {
        Natural::from(n)
    }

    fn int(x: i64) -> Integer {
        Integer::from(x)
    }

    const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

    #[test]
    fn delta_weight_examples() {
        let p3 = prime(3);
        assert_eq!(delta_weight(&nat(29), &p3), Ok(int(-1)));
        assert_eq!(delta_weight(&nat(28), &p3), Ok(int(1)));
        assert_eq!(delta_weight(&nat(0), &p3), Ok(int(1)));
        for &p in &PRIMES {
            for n in 0..500u64 {
                if (n + 1) % p != 0 {
                    assert_eq!(delta_weight(&nat(n), &prime(p)), Ok(int(1)));
                }
            }
        }
    }

    #[test]
    fn delta_val_factorial_examples() {
        assert_eq!(delta_val_factorial(&nat(3), &prime(2)), Ok(int(2)));
        assert_eq!(delta_val_factorial(&nat(8), &prime(3)), Ok(int(2)));
        assert_eq!(delta_val_factorial(&nat(4), &prime(3)), Ok(int(0)));
        assert_eq!(
            delta_val_factorial(&nat(0), &prime(3)),
            Err(Error::ZeroArgument { what: "n" })
        );
    }

    #[test]
    fn val_via_delta_examples() {
        assert_eq!(val_via_delta(&nat(1003), &prime(5)), Ok(Valuation::from(0i64)));
        assert_eq!(val_via_delta(&nat(36), &prime(3)), Ok(Valuation::from(2i64)));
        for &p in &PRIMES {
            for k in 0..20u32 {
                let pk = nat(p).pow(k);
                assert_eq!(val_via_delta(&pk, &prime(p)), Ok(Valuation::from(u64::from(k))));
            }
        }
    }

    #[test]
    fn delta_val_examples() {
        let p3 = prime(3);
        assert_eq!(delta_val(&nat(8), &p3), Ok(int(2)));
        assert_eq!(delta_val(&nat(9), &p3), Ok(int(-2)));
        assert_eq!(delta_val(&nat(4), &p3), Ok(int(0)));
    }

    #[test]
    fn scaled_examples() {
        let p3 = prime(3);
        assert_eq!(delta_weight_scaled(&nat(29), &nat(1), &p3), Ok(int(1)));
        assert_eq!(delta_weight_scaled(&nat(10), &nat(3), &p3), Ok(int(-1)));
        for n in 1..300u64 {
            assert_eq!(
                delta_weight_scaled(&nat(1), &nat(n), &p3),
                delta_weight(&nat(n - 1), &p3)
            );
        }
        assert!(matches!(
            delta_weight_scaled(&nat(6), &nat(2), &p3),
            Err(Error::PrimeDividesScale { .. })
        ));
    }

    #[test]
    fn group_examples() {
        for &p in &PRIMES {
            assert_eq!(group_delta_weight(&nat(0), p, &prime(p)), Ok(int(1)));
        }
        // s_3(30) = s_3(1010_3) = 2, s_3(26) = s_3(222_3) = 6
        assert_eq!(group_delta_weight(&nat(26), 4, &prime(3)), Ok(int(-4)));
        for n in 0..200u64 {
            assert_eq!(
                group_delta_weight(&nat(n), 1, &prime(5)),
                delta_weight(&nat(n), &prime(5))
            );
        }
        assert_eq!(
            group_delta_weight(&nat(3), 0, &prime(5)),
            Err(Error::ZeroArgument { what: "k" })
        );
    }

    #[test]
    fn increment_identities_over_grid() {
        for &p in &PRIMES {
            let base = prime(p);
            let pred = int(p as i64 - 1);
            for n in 1..=100_000u64 {
                let here = delta_weight(&nat(n), &base).unwrap();
                let next = delta_weight(&nat(n + 1), &base).unwrap();
                let dv = delta_val(&nat(n + 1), &base).unwrap();
                assert_eq!(here - next - &pred * dv, int(0), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn trailing_top_digits_count_the_valuation() {
        use crate::digits::expand;
        for &p in &PRIMES {
            let base = prime(p);
            let top = nat(p - 1);
            for n in 0..=20_000u64 {
                let e = expand(&nat(n), &base);
                let trailing = e.digits().iter().take_while(|d| **d == top).count();
                assert_eq!(val(&nat(n + 1), &base), Valuation::from(trailing as u64));
                assert_eq!(
                    delta_weight(&nat(n), &base).unwrap(),
                    int(1) - int(p as i64 - 1) * int(trailing as i64)
                );
            }
        }
    }

    #[test]
    fn theorem_four_grid() {
        for &p in &PRIMES {
            let base = prime(p);
            for k in (1..=50u64).filter(|k| k % p != 0) {
                for n in 1..=2000u64 {
                    delta_weight_scaled(&nat(k), &nat(n), &base).unwrap();
                }
            }
        }
    }

    #[test]
    fn report() {
        let r = IncrementReport::new(&nat(8), &prime(3)).unwrap();
        assert_eq!(r.delta_weight, int(-3));
        assert_eq!(r.delta_val_factorial, int(2));
        assert_eq!(r.delta_val, int(2));
    }
}
