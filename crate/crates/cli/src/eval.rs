use num_traits::ToPrimitive;
use padic_core::increments::{self, IncrementReport};
use padic_core::odd_factorial::{self as odd, OddNatural};
use padic_core::oracle::{self, OracleConfig, OracleKind};
use padic_core::{special, valuations, Integer, Natural, Prime, Ratio, Valuation};

use crate::query::{parse_fraction, parse_natural, Target};
use crate::CliError;

/// The result of evaluating one target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Natural(Natural),
    Integer(Integer),
    Valuation(Valuation),
    Bool(bool),
    Pair(Natural, Natural),
    /// A sequence, e.g. base-p digits least-significant first.
    List(Vec<Natural>),
    Extremes((Natural, Valuation), (Natural, Valuation)),
    Increments(Box<IncrementReport>),
}

impl Value {
    /// The decimal rendering used by every output format.
    pub fn render(&self) -> String {
        match self {
            Value::Natural(n) => n.to_string(),
            Value::Integer(i) => i.to_string(),
            Value::Valuation(v) => v.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Pair(a, b) => format!("{a},{b}"),
            Value::List(items) => items
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
            Value::Extremes((min_n, min_v), (max_n, max_v)) => {
                format!("min={min_n}:{min_v},max={max_n}:{max_v}")
            }
            Value::Increments(r) => format!(
                "delta_weight={},delta_val_factorial={},delta_val={}",
                r.delta_weight, r.delta_val_factorial, r.delta_val
            ),
        }
    }
}

/// Inputs for one evaluation; `n` and `k` are raw decimal strings.
pub struct Inputs<'a> {
    pub p: Option<&'a Prime>,
    pub n: Option<&'a str>,
    pub k: Option<&'a str>,
    pub oracle: OracleConfig,
}

impl Inputs<'_> {
    fn prime(&self) -> Result<&Prime, CliError> {
        self.p
            .ok_or_else(|| CliError::Usage("this target requires --p".into()))
    }

    fn n_str(&self) -> Result<&str, CliError> {
        self.n
            .ok_or_else(|| CliError::Usage("this target requires --n".into()))
    }

    fn n(&self) -> Result<Natural, CliError> {
        parse_natural(self.n_str()?, "n")
    }

    fn n_word(&self) -> Result<u64, CliError> {
        self.n()?
            .to_u64()
            .ok_or_else(|| CliError::Usage("n is too large for an oracle target".into()))
    }

    fn odd(&self) -> Result<OddNatural, CliError> {
        Ok(OddNatural::new(self.n()?)?)
    }

    fn k(&self) -> Result<Natural, CliError> {
        let raw = self
            .k
            .ok_or_else(|| CliError::Usage("this target requires --k".into()))?;
        parse_natural(raw, "k")
    }

    fn k_u32(&self) -> Result<u32, CliError> {
        self.k()?
            .to_u32()
            .ok_or_else(|| CliError::Usage("k is too large for an exponent".into()))
    }

    fn k_u64(&self) -> Result<u64, CliError> {
        self.k()?
            .to_u64()
            .ok_or_else(|| CliError::Usage("k must fit a machine word".into()))
    }
}

pub fn evaluate(target: Target, inputs: &Inputs<'_>) -> Result<Value, CliError> {
    let value = match target {
        Target::Weight => Value::Natural(padic_core::weight(&inputs.n()?, inputs.prime()?)),
        Target::Expand => Value::List(
            padic_core::expand(&inputs.n()?, inputs.prime()?)
                .digits()
                .to_vec(),
        ),
        Target::Val => Value::Valuation(valuations::val(&inputs.n()?, inputs.prime()?)),
        Target::ValRatio => {
            let (a, b) = parse_fraction(inputs.n_str()?)?;
            let ratio = Ratio::new(a, b)?;
            Value::Valuation(valuations::val_ratio(&ratio, inputs.prime()?))
        }
        Target::ValFactorial => {
            Value::Valuation(valuations::val_factorial_alt(&inputs.n()?, inputs.prime()?)?)
        }
        Target::ValFactorialDirect => {
            Value::Valuation(valuations::val_factorial_direct(&inputs.n()?, inputs.prime()?))
        }
        Target::ValFactorialDigits => {
            let expansion = padic_core::expand(&inputs.n()?, inputs.prime()?);
            Value::Valuation(valuations::val_factorial_from_digits(&expansion))
        }
        Target::ValFactorialPrimePower => Value::Valuation(valuations::val_factorial_prime_power(
            inputs.k_u32()?,
            inputs.prime()?,
        )?),
        Target::ValFactorialScaled => Value::Valuation(valuations::val_factorial_scaled(
            &inputs.n()?,
            inputs.k_u32()?,
            inputs.prime()?,
        )?),
        Target::Split => {
            let (a, b) = valuations::split(&inputs.n()?, inputs.prime()?)?;
            Value::Pair(a, b)
        }
        Target::FloorOdd => {
            let (a, b) = parse_fraction(inputs.n_str()?)?;
            Value::Integer(odd::floor_odd(&a, &b)?)
        }
        Target::ValOddfact => {
            Value::Valuation(odd::val_oddfact_direct(&inputs.n()?, inputs.prime()?)?)
        }
        Target::ValOddfactAlt => {
            Value::Valuation(odd::val_oddfact_alt(&inputs.n()?, inputs.prime()?)?)
        }
        Target::ValOddfactAlt2 => {
            Value::Valuation(odd::val_oddfact_alt2(&inputs.n()?, inputs.prime()?)?)
        }
        Target::OddfactTerms => {
            Value::List(odd::oddfact_direct_terms(&inputs.n()?, inputs.prime()?)?)
        }
        Target::ValOddfactShifted => {
            Value::Valuation(odd::val_oddfact_shifted(&inputs.odd()?, inputs.prime()?)?)
        }
        Target::ValOddfactPrimePower => Value::Valuation(odd::val_oddfact_prime_power(
            inputs.k_u32()?,
            inputs.prime()?,
        )?),
        Target::ValOddfactLog => {
            Value::Valuation(odd::val_oddfact_log_form(&inputs.odd()?, inputs.prime()?)?)
        }
        Target::ValOddfactAny => {
            Value::Valuation(odd::val_oddfact_any(&inputs.n()?, inputs.prime()?)?)
        }
        Target::ValMbc => Value::Valuation(special::val_mbc(&inputs.n()?, inputs.prime()?)?),
        Target::ValCatalan => {
            Value::Valuation(special::val_catalan(&inputs.n()?, inputs.prime()?)?)
        }
        Target::CatalanIsOdd => Value::Bool(special::catalan_is_odd(&inputs.n()?)),
        Target::MbcVal2Extremes => {
            let (min, max) = special::mbc_val2_extremes(inputs.k_u32()?)?;
            Value::Extremes(min, max)
        }
        Target::DeltaWeight => {
            Value::Integer(increments::delta_weight(&inputs.n()?, inputs.prime()?)?)
        }
        Target::DeltaValFactorial => {
            Value::Integer(increments::delta_val_factorial(&inputs.n()?, inputs.prime()?)?)
        }
        Target::ValViaDelta => {
            Value::Valuation(increments::val_via_delta(&inputs.n()?, inputs.prime()?)?)
        }
        Target::DeltaVal => Value::Integer(increments::delta_val(&inputs.n()?, inputs.prime()?)?),
        Target::DeltaWeightScaled => Value::Integer(increments::delta_weight_scaled(
            &inputs.k()?,
            &inputs.n()?,
            inputs.prime()?,
        )?),
        Target::GroupDeltaWeight => Value::Integer(increments::group_delta_weight(
            &inputs.n()?,
            inputs.k_u64()?,
            inputs.prime()?,
        )?),
        Target::Increments => Value::Increments(Box::new(IncrementReport::new(
            &inputs.n()?,
            inputs.prime()?,
        )?)),
        Target::OracleVal => Value::Valuation(oracle::oracle_val(&inputs.n()?, inputs.prime()?)?),
        Target::OracleFactorial => Value::Valuation(oracle::oracle_factorial_val(
            inputs.n_word()?,
            inputs.prime()?,
            &inputs.oracle,
        )?),
        Target::OracleOddfact => Value::Valuation(oracle::oracle_oddfact_val(
            inputs.n_word()?,
            inputs.prime()?,
            &inputs.oracle,
        )?),
        Target::OracleMbc => Value::Valuation(oracle::oracle_special(
            OracleKind::Mbc,
            inputs.n_word()?,
            inputs.prime()?,
            &inputs.oracle,
        )?),
        Target::OracleCatalan => Value::Valuation(oracle::oracle_special(
            OracleKind::Catalan,
            inputs.n_word()?,
            inputs.prime()?,
            &inputs.oracle,
        )?),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(target: &str, p: Option<u64>, n: Option<&str>, k: Option<&str>) -> Result<String, CliError> {
        let prime = p.map(|p| Prime::try_from(p).unwrap());
        let inputs = Inputs {
            p: prime.as_ref(),
            n,
            k,
            oracle: OracleConfig::default(),
        };
        evaluate(target.parse()?, &inputs).map(|v| v.render())
    }

    #[test]
    fn renders() {
        assert_eq!(eval("val-factorial", Some(5), Some("1003"), None).unwrap(), "249");
        assert_eq!(eval("val-factorial-direct", Some(5), Some("1003"), None).unwrap(), "249");
        assert_eq!(eval("val-factorial-digits", Some(5), Some("1003"), None).unwrap(), "249");
        assert_eq!(eval("weight", Some(5), Some("0"), None).unwrap(), "0");
        assert_eq!(eval("expand", Some(5), Some("1003"), None).unwrap(), "3,0,0,3,1");
        assert_eq!(eval("val", Some(5), Some("0"), None).unwrap(), "infinite");
        assert_eq!(eval("val-ratio", Some(7), Some("5/14"), None).unwrap(), "-1");
        assert_eq!(eval("split", Some(5), Some("1003"), None).unwrap(), "996,7");
        assert_eq!(eval("floor-odd", None, Some("25/7"), None).unwrap(), "3");
        assert_eq!(eval("oddfact-terms", Some(3), Some("15"), None).unwrap(), "5,2,1");
        assert_eq!(eval("val-oddfact-log", Some(3), Some("29"), None).unwrap(), "8");
        assert_eq!(eval("catalan-is-odd", None, Some("7"), None).unwrap(), "true");
        assert_eq!(eval("mbc-val2-extremes", None, None, Some("3")).unwrap(), "min=8:1,max=7:3");
        assert_eq!(eval("delta-weight-scaled", Some(3), Some("3"), Some("10")).unwrap(), "-1");
        assert_eq!(eval("group-delta-weight", Some(3), Some("26"), Some("4")).unwrap(), "-4");
        assert_eq!(
            eval("increments", Some(3), Some("8"), None).unwrap(),
            "delta_weight=-3,delta_val_factorial=2,delta_val=2"
        );
        assert_eq!(eval("oracle-catalan", Some(2), Some("4"), None).unwrap(), "1");
    }

    #[test]
    fn user_errors() {
        assert!(matches!(eval("val-oddfact", Some(2), Some("3"), None), Err(CliError::Core(_))));
        assert!(matches!(eval("val-factorial", None, Some("3"), None), Err(CliError::Usage(_))));
        assert!(matches!(eval("val-factorial-prime-power", Some(3), None, None), Err(CliError::Usage(_))));
        assert!(matches!(eval("val-oddfact-log", Some(3), Some("4"), None), Err(CliError::Core(_))));
        assert!(matches!(eval("oracle-mbc", Some(3), Some("501"), None), Err(CliError::Core(_))));
    }
}
