use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Integer, Natural, Result};

/// A validated prime, the base of every valuation and expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Prime {
    value: Natural,
    small: Option<u64>,
}

impl Prime {
    pub fn new(value: Natural) -> Result<Self> {
        if !is_prime(&value) {
            return Err(Error::NotPrime(value));
        }
        let small = value.to_u64();
        Ok(Prime { value, small })
    }

    pub fn value(&self) -> &Natural {
        &self.value
    }

    /// The prime as a machine word, when it fits.
    pub fn as_u64(&self) -> Option<u64> {
        self.small
    }

    pub fn is_two(&self) -> bool {
        self.small == Some(2)
    }

    /// `p - 1`, the denominator of every digit-sum formula.
    pub fn pred(&self) -> Natural {
        &self.value - 1u32
    }

    pub(crate) fn pred_signed(&self) -> Integer {
        Integer::from(self.pred())
    }

    pub fn divides(&self, n: &Natural) -> bool {
        match self.small {
            Some(p) => (n % p).is_zero(),
            None => (n % &self.value).is_zero(),
        }
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Prime::new(Natural::from(value))
    }
}

impl TryFrom<Natural> for Prime {
    type Error = Error;

    fn try_from(value: Natural) -> Result<Self> {
        Prime::new(value)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

const SMALL_PRIMES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Primality test.
///
/// Miller-Rabin with the first 12 prime bases is deterministic below 2^64 and
/// the first 13 below 3.3 * 10^24. Larger candidates are tested against all
/// 20 bases in `SMALL_PRIMES`.
pub(crate) fn is_prime(n: &Natural) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => is_prime_big(n),
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let (d, s) = odd_part_u64(n - 1);
    SMALL_PRIMES[..12]
        .iter()
        .all(|&a| strong_probable_prime_u64(n, d, s, a))
}

fn odd_part_u64(m: u64) -> (u64, u32) {
    let s = m.trailing_zeros();
    (m >> s, s)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, d: u64, s: u32, a: u64) -> bool {
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn is_prime_big(n: &BigUint) -> bool {
    if SMALL_PRIMES.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    SMALL_PRIMES.iter().all(|&a| {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            return true;
        }
        for _ in 1..s {
            x = (&x * &x).mod_floor(n);
            if x == n_minus_one {
                return true;
            }
        }
        false
    })
}
