//! Valuations of middle binomial coefficients `C(2n, n)` and Catalan numbers
//! `Cat(n) = C(2n, n) / (n + 1)`, from digit sums alone.

use num_traits::{One, Zero};

use crate::digits::weight;
use crate::valuations::val;
use crate::{ensure_equal, exact_div, Error, Integer, Natural, Prime, Result, Valuation};

/// `v_p(C(2n, n)) = (2 s_p(n) - s_p(2n)) / (p - 1)`.
///
/// For `p = 2` this is `s_2(n)`, the number of carries when adding `n + n`.
pub fn val_mbc(n: &Natural, p: &Prime) -> Result<Valuation> {
    let numerator = Integer::from(weight(n, p) << 1u32) - Integer::from(weight(&(n << 1u32), p));
    exact_div(&numerator, &p.pred_signed(), "eq-4.1-mbc").map(Valuation::Finite)
}

/// `v_p(Cat(n)) = (s_p(n) + s_p(n + 1) - s_p(2n) - 1) / (p - 1)`.
pub fn val_catalan(n: &Natural, p: &Prime) -> Result<Valuation> {
    let numerator = Integer::from(weight(n, p) + weight(&(n + 1u32), p))
        - Integer::from(weight(&(n << 1u32), p))
        - 1;
    exact_div(&numerator, &p.pred_signed(), "eq-4.2-catalan").map(Valuation::Finite)
}

/// `Cat(n)` is odd exactly when `n + 1` is a power of two.
pub fn catalan_is_odd(n: &Natural) -> bool {
    let two = Prime::try_from(2).expect("2 is prime");
    weight(&(n + 1u32), &two).is_one()
}

/// The indices where `v_2(C(2n, n))` is smallest and largest among
/// `n <= 2^k`, with their valuations: `(2^k, 1)` and `(2^k - 1, k)`.
///
/// Both claimed values are checked against [`val_mbc`].
pub fn mbc_val2_extremes(k: u32) -> Result<((Natural, Valuation), (Natural, Valuation))> {
    if k == 0 {
        return Err(Error::ZeroArgument { what: "k" });
    }
    let two = Prime::try_from(2).expect("2 is prime");
    let min_index = Natural::one() << k;
    let max_index = &min_index - 1u32;
    let min_val = Valuation::from(1u64);
    let max_val = Valuation::from(u64::from(k));
    ensure_equal(&val_mbc(&min_index, &two)?, &min_val, "eq-4.1-extremes")?;
    ensure_equal(&val_mbc(&max_index, &two)?, &max_val, "eq-4.1-extremes")?;
    Ok(((min_index, min_val), (max_index, max_val)))
}

/// `v_p(C(2n, n)) - v_p(n + 1)`, the second route to [`val_catalan`].
pub fn val_catalan_via_mbc(n: &Natural, p: &Prime) -> Result<Valuation> {
    let mbc = val_mbc(n, p)?.into_finite().unwrap_or_else(Integer::zero);
    let shift = val(&(n + 1u32), p)
        .into_finite()
        .expect("n + 1 is nonzero");
    Ok(Valuation::Finite(mbc - shift))
}
