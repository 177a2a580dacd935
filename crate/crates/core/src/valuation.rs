use core::fmt;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Integer, Natural, Result};

/// A p-adic valuation: a (possibly negative) integer, or infinity for zero.
///
/// Valuations of factorials of very large arguments exceed a machine word,
/// so finite values are arbitrary precision.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(Integer),
    Infinite,
}

impl Valuation {
    pub fn zero() -> Self {
        Valuation::Finite(Integer::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(&self) -> Option<&Integer> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn into_finite(self) -> Option<Integer> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.finite().and_then(ToPrimitive::to_i64)
    }

    pub fn is_negative(&self) -> bool {
        self.finite().is_some_and(Signed::is_negative)
    }
}

impl From<i64> for Valuation {
    fn from(v: i64) -> Self {
        Valuation::Finite(Integer::from(v))
    }
}

impl From<u64> for Valuation {
    fn from(v: u64) -> Self {
        Valuation::Finite(Integer::from(v))
    }
}

impl From<Natural> for Valuation {
    fn from(v: Natural) -> Self {
        Valuation::Finite(Integer::from(v))
    }
}

impl From<Integer> for Valuation {
    fn from(v: Integer) -> Self {
        Valuation::Finite(v)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinite => f.write_str("infinite"),
        }
    }
}

/// A non-negative rational `numerator / denominator`, not necessarily in
/// lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    numerator: Natural,
    denominator: Natural,
}

impl Ratio {
    pub fn new(numerator: Natural, denominator: Natural) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Ratio {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Natural {
        &self.numerator
    }

    pub fn denominator(&self) -> &Natural {
        &self.denominator
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}
