//! Targets and argument parsing shared by `eval` and `table`.

use std::fmt;
use std::str::FromStr;

use padic_core::{Natural, Prime};

use crate::CliError;

/// An operation reachable from `eval` and `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Weight,
    Expand,
    Val,
    ValRatio,
    ValFactorial,
    ValFactorialDirect,
    ValFactorialDigits,
    ValFactorialPrimePower,
    ValFactorialScaled,
    Split,
    FloorOdd,
    ValOddfact,
    ValOddfactAlt,
    ValOddfactAlt2,
    OddfactTerms,
    ValOddfactShifted,
    ValOddfactPrimePower,
    ValOddfactLog,
    ValOddfactAny,
    ValMbc,
    ValCatalan,
    CatalanIsOdd,
    MbcVal2Extremes,
    DeltaWeight,
    DeltaValFactorial,
    ValViaDelta,
    DeltaVal,
    DeltaWeightScaled,
    GroupDeltaWeight,
    Increments,
    OracleVal,
    OracleFactorial,
    OracleOddfact,
    OracleMbc,
    OracleCatalan,
}

/// What a target reads from `--n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Argument {
    /// A natural number `n`.
    Natural,
    /// An odd natural `m`; tables step over odd values only.
    Odd,
    /// A fraction `a/b`; not tabulated.
    Ratio,
    /// `--n` is unused; the target reads `--k` only.
    None,
}

impl Target {
    pub const ALL: &'static [Target] = &[
        Target::Weight,
        Target::Expand,
        Target::Val,
        Target::ValRatio,
        Target::ValFactorial,
        Target::ValFactorialDirect,
        Target::ValFactorialDigits,
        Target::ValFactorialPrimePower,
        Target::ValFactorialScaled,
        Target::Split,
        Target::FloorOdd,
        Target::ValOddfact,
        Target::ValOddfactAlt,
        Target::ValOddfactAlt2,
        Target::OddfactTerms,
        Target::ValOddfactShifted,
        Target::ValOddfactPrimePower,
        Target::ValOddfactLog,
        Target::ValOddfactAny,
        Target::ValMbc,
        Target::ValCatalan,
        Target::CatalanIsOdd,
        Target::MbcVal2Extremes,
        Target::DeltaWeight,
        Target::DeltaValFactorial,
        Target::ValViaDelta,
        Target::DeltaVal,
        Target::DeltaWeightScaled,
        Target::GroupDeltaWeight,
        Target::Increments,
        Target::OracleVal,
        Target::OracleFactorial,
        Target::OracleOddfact,
        Target::OracleMbc,
        Target::OracleCatalan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Weight => "weight",
            Target::Expand => "expand",
            Target::Val => "val",
            Target::ValRatio => "val-ratio",
            Target::ValFactorial => "val-factorial",
            Target::ValFactorialDirect => "val-factorial-direct",
            Target::ValFactorialDigits => "val-factorial-digits",
            Target::ValFactorialPrimePower => "val-factorial-prime-power",
            Target::ValFactorialScaled => "val-factorial-scaled",
            Target::Split => "split",
            Target::FloorOdd => "floor-odd",
            Target::ValOddfact => "val-oddfact",
            Target::ValOddfactAlt => "val-oddfact-alt",
            Target::ValOddfactAlt2 => "val-oddfact-alt2",
            Target::OddfactTerms => "oddfact-terms",
            Target::ValOddfactShifted => "val-oddfact-shifted",
            Target::ValOddfactPrimePower => "val-oddfact-prime-power",
            Target::ValOddfactLog => "val-oddfact-log",
            Target::ValOddfactAny => "val-oddfact-any",
            Target::ValMbc => "val-mbc",
            Target::ValCatalan => "val-catalan",
            Target::CatalanIsOdd => "catalan-is-odd",
            Target::MbcVal2Extremes => "mbc-val2-extremes",
            Target::DeltaWeight => "delta-weight",
            Target::DeltaValFactorial => "delta-val-factorial",
            Target::ValViaDelta => "val-via-delta",
            Target::DeltaVal => "delta-val",
            Target::DeltaWeightScaled => "delta-weight-scaled",
            Target::GroupDeltaWeight => "group-delta-weight",
            Target::Increments => "increments",
            Target::OracleVal => "oracle-val",
            Target::OracleFactorial => "oracle-factorial",
            Target::OracleOddfact => "oracle-oddfact",
            Target::OracleMbc => "oracle-mbc",
            Target::OracleCatalan => "oracle-catalan",
        }
    }

    pub fn argument(self) -> Argument {
        match self {
            Target::ValRatio | Target::FloorOdd => Argument::Ratio,
            Target::ValOddfactShifted | Target::ValOddfactLog => Argument::Odd,
            Target::ValFactorialPrimePower
            | Target::ValOddfactPrimePower
            | Target::MbcVal2Extremes => Argument::None,
            _ => Argument::Natural,
        }
    }

    pub fn needs_prime(self) -> bool {
        !matches!(
            self,
            Target::CatalanIsOdd | Target::MbcVal2Extremes | Target::FloorOdd
        )
    }

    pub fn needs_k(self) -> bool {
        matches!(
            self,
            Target::ValFactorialPrimePower
                | Target::ValFactorialScaled
                | Target::ValOddfactPrimePower
                | Target::MbcVal2Extremes
                | Target::DeltaWeightScaled
                | Target::GroupDeltaWeight
        )
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = match s {
            "val-oddfact-direct" => "val-oddfact",
            "val-factorial-alt" => "val-factorial",
            other => other,
        };
        Target::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Target::ALL.iter().map(|t| t.name()).collect();
                CliError::Usage(format!(
                    "unknown target `{s}`; expected one of: {}",
                    names.join(", ")
                ))
            })
    }
}

pub fn parse_natural(s: &str, what: &str) -> Result<Natural, CliError> {
    let trimmed = s.trim();
    if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::Usage(format!(
            "{what} must be a non-negative decimal integer, got `{s}`"
        )));
    }
    Natural::from_str(trimmed).map_err(|e| CliError::Usage(format!("invalid {what}: {e}")))
}

pub fn parse_prime(s: &str) -> Result<Prime, CliError> {
    let value = parse_natural(s, "p")?;
    Prime::new(value).map_err(|e| CliError::Usage(e.to_string()))
}

/// `a/b` with `b` nonzero.
pub fn parse_fraction(s: &str) -> Result<(Natural, Natural), CliError> {
    let (a, b) = s
        .split_once('/')
        .ok_or_else(|| CliError::Usage(format!("expected a fraction a/b, got `{s}`")))?;
    Ok((parse_natural(a, "numerator")?, parse_natural(b, "denominator")?))
}

/// A closed interval `start..end` of machine-word indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub start: u64,
    pub end: u64,
}

impl Range {
    pub fn new(start: u64, end: u64) -> Result<Self, CliError> {
        if start > end {
            return Err(CliError::Usage(format!(
                "range start {start} exceeds end {end}"
            )));
        }
        Ok(Range { start, end })
    }

    pub fn len(&self) -> u64 {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.start..=self.end
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// The value of `--n`: one number (any size) or a closed range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NSpec {
    Single(String),
    Range(Range),
}

impl NSpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let start = parse_u64(a, "range start")?;
                let end = parse_u64(b, "range end")?;
                Ok(NSpec::Range(Range::new(start, end)?))
            }
            None => Ok(NSpec::Single(s.trim().to_string())),
        }
    }

    /// The range, treating a single number as a one-element range.
    pub fn as_range(&self) -> Result<Range, CliError> {
        match self {
            NSpec::Range(r) => Ok(*r),
            NSpec::Single(s) => {
                let n = parse_u64(s, "n")?;
                Range::new(n, n)
            }
        }
    }
}

pub fn parse_u64(s: &str, what: &str) -> Result<u64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be a machine-word integer, got `{s}`")))
}
