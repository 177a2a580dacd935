//! Base-p expansion and the p-adic weight `s_p(n)`, the digit sum of `n` in
//! base `p`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};

use crate::{Natural, Prime};

/// Digits of a natural number in a prime base, least-significant first.
///
/// Canonical: no trailing (most-significant) zeros, and zero is the single
/// digit `[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseExpansion {
    base: Prime,
    digits: Vec<Natural>,
}

impl BaseExpansion {
    pub fn base(&self) -> &Prime {
        &self.base
    }

    /// Digits, least-significant first. Index `i` is the coefficient of `p^i`.
    pub fn digits(&self) -> &[Natural] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sum digits[i] * p^i`, by Horner's rule.
    pub fn reconstruct(&self) -> Natural {
        let p = self.base.value();
        self.digits
            .iter()
            .rev()
            .fold(Natural::zero(), |acc, d| acc * p + d)
    }

    pub fn weight(&self) -> Natural {
        self.digits.iter().sum()
    }
}

impl fmt::Display for BaseExpansion {
    /// Most-significant digit first, e.g. `[1, 3, 0, 0, 3]_5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.digits.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            d.fmt(f)?;
        }
        write!(f, "]_{}", self.base)
    }
}

/// The base-`p` expansion of `n`.
pub fn expand(n: &Natural, p: &Prime) -> BaseExpansion {
    let digits = match p.as_u64() {
        Some(small) => word_digits(n, small)
            .into_iter()
            .map(Natural::from)
            .collect(),
        None => big_digits(n, p.value()),
    };
    BaseExpansion {
        base: p.clone(),
        digits,
    }
}

/// The p-adic weight `s_p(n)`.
pub fn weight(n: &Natural, p: &Prime) -> Natural {
    match p.as_u64() {
        Some(small) => {
            let sum: u128 = word_digits(n, small).into_iter().map(u128::from).sum();
            Natural::from(sum)
        }
        None => big_digits(n, p.value()).into_iter().sum(),
    }
}

/// Digits for a word-sized base. Peels off `p^e` at a time, where `p^e` is the
/// largest power that fits a word, so each bigint division is by one limb.
fn word_digits(n: &Natural, p: u64) -> Vec<u64> {
    if n.is_zero() {
        return vec![0];
    }
    let (chunk, per_chunk) = largest_word_power(p);
    let chunk_big = Natural::from(chunk);
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&chunk_big);
        let mut r = r.to_u64().expect("remainder below a word-sized divisor");
        for _ in 0..per_chunk {
            digits.push(r % p);
            r /= p;
        }
        rest = q;
    }
    while digits.len() > 1 && digits.last() == Some(&0) {
        digits.pop();
    }
    digits
}

fn largest_word_power(p: u64) -> (u64, u32) {
    let mut power = p;
    let mut exponent = 1;
    while let Some(next) = power.checked_mul(p) {
        power = next;
        exponent += 1;
    }
    (power, exponent)
}

fn big_digits(n: &Natural, p: &Natural) -> Vec<Natural> {
    if n.is_zero() {
        return vec![Natural::zero()];
    }
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(p);
        digits.push(r);
        rest = q;
    }
    digits
}
