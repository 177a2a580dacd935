//! Identity sweeps over `(p, n, k)` grids.
//!
//! Each identity is keyed by a stable name ("eq-1.11", "thm-4", ...) and has
//! a default grid. Cases run on the rayon pool; failures are sorted by input
//! before reporting, so output does not depend on scheduling.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use padic_core::digits::{expand, weight};
use padic_core::increments::{delta_val, delta_val_factorial, delta_weight, delta_weight_scaled, group_delta_weight};
use padic_core::odd_factorial::{
    check_even_odd_decomposition, val_oddfact_alt, val_oddfact_alt2, val_oddfact_direct,
    val_oddfact_log_form, val_oddfact_prime_power, val_oddfact_shifted, OddNatural,
};
use padic_core::oracle::{self, OracleConfig, OracleKind};
use padic_core::special::{catalan_is_odd, val_catalan, val_catalan_via_mbc, val_mbc};
use padic_core::valuations::{
    split, val, val_factorial_alt, val_factorial_direct, val_factorial_from_digits,
    val_factorial_prime_power, val_factorial_scaled,
};
use padic_core::increments::val_via_delta;
use padic_core::{Error as CoreError, Integer, Natural, Prime, Valuation};

use crate::query::Range;
use crate::CliError;

pub const DEFAULT_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

/// Which primes an identity applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Primes {
    Any,
    Odd,
    /// Runs on this subset of the default primes unless `--p` is given.
    Subset(&'static [u64]),
    /// Only `p = 2`.
    Two,
    /// The identity does not involve a prime; runs once.
    Independent,
}

/// Upper limit on `n` imposed by the oracle cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OracleBound {
    None,
    Factorial,
    Special,
}

type Check = fn(&Prime, u64, u64, &OracleConfig) -> Result<Outcome, CoreError>;

/// One verifiable identity and its default grid.
pub struct Identity {
    pub name: &'static str,
    pub summary: &'static str,
    primes: Primes,
    n: Range,
    n_step: u64,
    k: Range,
    bound: OracleBound,
    filter: Option<Filter>,
    check: Check,
}

/// Restricts the grid to cases satisfying a hypothesis. Skipped cases are
/// not counted as checked.
struct Filter {
    note: &'static str,
    keep: fn(&Prime, u64, u64) -> bool,
}

enum Outcome {
    Pass,
    Fail { lhs: String, rhs: String },
}

fn outcome<T: PartialEq + fmt::Display>(lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Outcome::Pass
    } else {
        Outcome::Fail {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Passes when every value equals the last one (the reference).
fn all_agree(values: &[Valuation]) -> Outcome {
    let (reference, routes) = values.split_last().expect("at least one value");
    if routes.iter().all(|v| v == reference) {
        Outcome::Pass
    } else {
        Outcome::Fail {
            lhs: routes
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("/"),
            rhs: reference.to_string(),
        }
    }
}

fn nat(n: u64) -> Natural {
    Natural::from(n)
}

fn finite(v: Valuation) -> Integer {
    v.into_finite().unwrap_or_default()
}

fn signed_weight(n: &Natural, p: &Prime) -> Integer {
    Integer::from(weight(n, p))
}

const fn range(start: u64, end: u64) -> Range {
    Range { start, end }
}

/// Marks an unused `n` or `k` axis.
const NO_AXIS: Range = range(0, 0);

pub static IDENTITIES: &[Identity] = &[
    Identity {
        name: "eq-1.1-vs-1.5-vs-1.4",
        summary: "v_p(n!) by floor sum, digit sum and digits-weighted repunits",
        primes: Primes::Any,
        n: range(0, 5000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let n = nat(n);
            Ok(all_agree(&[
                val_factorial_alt(&n, p)?,
                val_factorial_from_digits(&expand(&n, p)),
                val_factorial_direct(&n, p),
            ]))
        },
    },
    Identity {
        name: "eq-1.1-oracle",
        summary: "v_p(n!) routes against the sum of trial-division valuations",
        primes: Primes::Any,
        n: range(0, 2000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::Factorial,
        filter: None,
        check: |p, n, _, cfg| {
            let expected = oracle::oracle_factorial_val(n, p, cfg)?;
            let n = nat(n);
            Ok(all_agree(&[
                val_factorial_direct(&n, p),
                val_factorial_alt(&n, p)?,
                val_factorial_from_digits(&expand(&n, p)),
                expected,
            ]))
        },
    },
    Identity {
        name: "eq-1.2",
        summary: "v_p(p^k!) = (p^k - 1)/(p - 1)",
        primes: Primes::Any,
        n: NO_AXIS,
        n_step: 1,
        k: range(0, 30),
        bound: OracleBound::None,
        filter: None,
        check: |p, _, k, _| {
            let pk = p.value().pow(k as u32);
            Ok(outcome(
                val_factorial_prime_power(k as u32, p)?,
                val_factorial_direct(&pk, p),
            ))
        },
    },
    Identity {
        name: "eq-1.3",
        summary: "v_p((p^k n)!) = n (p^k - 1)/(p - 1) + v_p(n!)",
        primes: Primes::Any,
        n: range(0, 50),
        n_step: 1,
        k: range(0, 6),
        bound: OracleBound::None,
        filter: None,
        check: |p, n, k, _| {
            let scaled = p.value().pow(k as u32) * n;
            Ok(outcome(
                val_factorial_scaled(&nat(n), k as u32, p)?,
                val_factorial_direct(&scaled, p),
            ))
        },
    },
    Identity {
        name: "eq-1.9",
        summary: "s_p(n p^k) = s_p(n)",
        primes: Primes::Any,
        n: range(0, 10_000),
        n_step: 1,
        k: range(0, 8),
        bound: OracleBound::None,
        filter: None,
        check: |p, n, k, _| {
            let shifted = p.value().pow(k as u32) * n;
            Ok(outcome(weight(&shifted, p), weight(&nat(n), p)))
        },
    },
    Identity {
        name: "eq-1.10",
        summary: "s_p(n p^k + d) = s_p(n) + s_p(d) for d < p^k",
        primes: Primes::Any,
        n: range(0, 1000),
        n_step: 1,
        k: range(0, 5),
        bound: OracleBound::None,
        filter: None,
        check: |p, n, k, _| {
            let pk = p.value().pow(k as u32);
            let base = weight(&nat(n), p);
            let step = (&pk / 16u32).max(Natural::one());
            let mut delta = Natural::default();
            while delta < pk {
                let lhs = weight(&(&pk * n + &delta), p);
                let rhs = &base + weight(&delta, p);
                if lhs != rhs {
                    return Ok(Outcome::Fail {
                        lhs: format!("{lhs} (d={delta})"),
                        rhs: rhs.to_string(),
                    });
                }
                delta += &step;
            }
            Ok(Outcome::Pass)
        },
    },
    Identity {
        name: "eq-1.11",
        summary: "n = (p - 1) v_p(n!) + s_p(n)",
        primes: Primes::Any,
        n: range(1, 100_000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let n = nat(n);
            let (valuation_part, weight_part) = split(&n, p)?;
            let direct = Integer::from(p.pred()) * finite(val_factorial_direct(&n, p));
            if Integer::from(valuation_part.clone()) != direct {
                return Ok(outcome(Integer::from(valuation_part), direct));
            }
            Ok(outcome(valuation_part + weight_part, n))
        },
    },
    Identity {
        name: "eq-1.12",
        summary: "Δv_p(n!) = (1 - Δs_p(n))/(p - 1) = v_p(n + 1)",
        primes: Primes::Any,
        n: range(1, 100_000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let step = delta_val_factorial(&nat(n), p)?;
            Ok(outcome(step, finite(val(&nat(n + 1), p))))
        },
    },
    Identity {
        name: "eq-2.1",
        summary: "v_p(n) = (1 - Δs_p(n - 1))/(p - 1)",
        primes: Primes::Any,
        n: range(1, 100_000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let n = nat(n);
            Ok(outcome(val_via_delta(&n, p)?, oracle::oracle_val(&n, p)?))
        },
    },
    Identity {
        name: "eq-2.2/5.1",
        summary: "Δs_p(n) + (p - 1) v_p(n + 1) = 1",
        primes: Primes::Any,
        n: range(0, 100_000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let n = nat(n);
            let next = &n + 1u32;
            delta_weight(&n, p)?;
            let lhs = signed_weight(&next, p) - signed_weight(&n, p)
                + Integer::from(p.pred()) * finite(val(&next, p));
            Ok(outcome(lhs, Integer::one()))
        },
    },
    Identity {
        name: "eq-2.3/5.2",
        summary: "Δs_p(n) - Δs_p(n + 1) - (p - 1) Δv_p(n + 1) = 0",
        primes: Primes::Any,
        n: range(1, 100_000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let n = nat(n);
            let next = &n + 1u32;
            let lhs = delta_weight(&n, p)? - delta_weight(&next, p)?
                - Integer::from(p.pred()) * delta_val(&next, p)?;
            Ok(outcome(lhs, Integer::default()))
        },
    },
    Identity {
        name: "eq-3.4-vs-3.5-vs-3.6",
        summary: "v_p((2n-1)!!) by floor/ceiling sum and both digit-sum forms",
        primes: Primes::Odd,
        n: range(1, 3000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let n = nat(n);
            Ok(all_agree(&[
                val_oddfact_alt(&n, p)?,
                val_oddfact_alt2(&n, p)?,
                val_oddfact_direct(&n, p)?,
            ]))
        },
    },
    Identity {
        name: "eq-3.3",
        summary: "2 v_p(m!!) = floor(log_p m) + sum floor_odd(m/p^j)",
        primes: Primes::Odd,
        n: range(1, 3000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let m = OddNatural::from_index(&nat(n))?;
            Ok(outcome(val_oddfact_log_form(&m, p)?, val_oddfact_direct(&nat(n), p)?))
        },
    },
    Identity {
        name: "eq-3.4-oracle",
        summary: "all odd-factorial routes against trial division of 1, 3, ..., 2n-1",
        primes: Primes::Odd,
        n: range(1, 1500),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::Factorial,
        filter: None,
        check: |p, n, _, cfg| {
            let expected = oracle::oracle_oddfact_val(n, p, cfg)?;
            let m = OddNatural::from_index(&nat(n))?;
            let n = nat(n);
            Ok(all_agree(&[
                val_oddfact_direct(&n, p)?,
                val_oddfact_alt(&n, p)?,
                val_oddfact_alt2(&n, p)?,
                val_oddfact_log_form(&m, p)?,
                expected,
            ]))
        },
    },
    Identity {
        name: "eq-3.1",
        summary: "v_p((pm)!!) = n + v_p(m!!) for m = 2n - 1",
        primes: Primes::Odd,
        n: range(1, 2000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let m = OddNatural::from_index(&nat(n))?;
            let index = (p.value() * m.value() + 1u32) >> 1u32;
            Ok(outcome(val_oddfact_shifted(&m, p)?, val_oddfact_direct(&index, p)?))
        },
    },
    Identity {
        name: "eq-3.2",
        summary: "2 v_p(p^k!!) = k + (p^k - 1)/(p - 1)",
        primes: Primes::Odd,
        n: NO_AXIS,
        n_step: 1,
        k: range(1, 20),
        bound: OracleBound::None,
        filter: None,
        check: |p, _, k, _| {
            let index = (p.value().pow(k as u32) + 1u32) >> 1u32;
            Ok(outcome(val_oddfact_prime_power(k as u32, p)?, val_oddfact_direct(&index, p)?))
        },
    },
    Identity {
        name: "eq-3.5-decomposition",
        summary: "v_p((2n)!) = v_p(n!) + v_p((2n-1)!!) for odd p",
        primes: Primes::Odd,
        n: range(1, 2000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            check_even_odd_decomposition(&nat(n), p)?;
            Ok(Outcome::Pass)
        },
    },
    Identity {
        name: "eq-3.7",
        summary: "Δs_p(n - 1) = Δs_p(2n - 1) for odd p",
        primes: Primes::Odd,
        n: range(1, 10_000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            Ok(outcome(
                delta_weight(&nat(n - 1), p)?,
                delta_weight(&nat(2 * n - 1), p)?,
            ))
        },
    },
    Identity {
        name: "eq-4.1",
        summary: "C(2n, n) = (n + 1) Cat(n) on exact integers",
        primes: Primes::Independent,
        n: range(0, 200),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::Special,
        filter: None,
        check: |_, n, _, cfg| Ok(outcome(oracle::oracle_twin_identity(n, cfg)?, true)),
    },
    Identity {
        name: "eq-4-oracle",
        summary: "v_p(C(2n, n)) and v_p(Cat(n)) against factored exact integers",
        primes: Primes::Subset(&[2, 3, 5, 7]),
        n: range(0, 200),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::Special,
        filter: None,
        check: |p, n, _, cfg| {
            let mbc = oracle::oracle_special(OracleKind::Mbc, n, p, cfg)?;
            let cat = oracle::oracle_special(OracleKind::Catalan, n, p, cfg)?;
            let n = nat(n);
            if let Outcome::Fail { lhs, rhs } = outcome(val_mbc(&n, p)?, mbc) {
                return Ok(Outcome::Fail { lhs: format!("mbc {lhs}"), rhs });
            }
            Ok(all_agree(&[val_catalan(&n, p)?, val_catalan_via_mbc(&n, p)?, cat]))
        },
    },
    Identity {
        name: "eq-4-base2",
        summary: "v_2(C(2n, n)) = s_2(n) >= 1, v_2(Cat(n)) = s_2(n + 1) - 1, and their increments",
        primes: Primes::Two,
        n: range(0, 10_000),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::None,
        filter: None,
        check: |p, n, _, _| {
            let (here, next) = (nat(n), nat(n + 1));
            let mbc = finite(val_mbc(&here, p)?);
            let cat = finite(val_catalan(&here, p)?);
            let checks = [
                (mbc.clone(), signed_weight(&here, p)),
                (cat.clone(), signed_weight(&next, p) - 1),
                (finite(val_mbc(&next, p)?) - &mbc, delta_weight(&here, p)?),
                (finite(val_catalan(&next, p)?) - &cat, delta_weight(&next, p)?),
            ];
            for (lhs, rhs) in checks {
                if lhs != rhs {
                    return Ok(outcome(lhs, rhs));
                }
            }
            if n >= 1 && mbc < Integer::one() {
                return Ok(Outcome::Fail {
                    lhs: mbc.to_string(),
                    rhs: ">= 1".into(),
                });
            }
            Ok(Outcome::Pass)
        },
    },
    Identity {
        name: "catalan-parity",
        summary: "Cat(n) is odd iff s_2(n + 1) = 1",
        primes: Primes::Independent,
        n: range(0, 200),
        n_step: 1,
        k: NO_AXIS,
        bound: OracleBound::Special,
        filter: None,
        check: |_, n, _, cfg| {
            Ok(outcome(catalan_is_odd(&nat(n)), oracle::oracle_catalan_is_odd(n, cfg)?))
        },
    },
    Identity {
        name: "thm-4",
        summary: "Δs_p(kn - 1) = Δs_p(n - 1) = 1 - (p - 1) v_p(n) for p ∤ k",
        primes: Primes::Any,
        n: range(1, 2000),
        n_step: 1,
        k: range(1, 50),
        bound: OracleBound::None,
        filter: Some(Filter {
            note: "p ∤ k",
            keep: |p, _, k| !p.divides(&nat(k)),
        }),
        check: |p, n, k, _| {
            let scaled = delta_weight_scaled(&nat(k), &nat(n), p)?;
            let unscaled = delta_weight(&nat(n - 1), p)?;
            Ok(outcome(scaled, unscaled))
        },
    },
    Identity {
        name: "eq-5.4/5.5",
        summary: "Δ^k s_p(n) = s_p(n + k) - s_p(n) = k - (p - 1) sum v_p(n + j)",
        primes: Primes::Any,
        n: range(0, 10_000),
        n_step: 37,
        k: range(1, 100),
        bound: OracleBound::None,
        filter: None,
        check: |p, n, k, _| {
            let group = group_delta_weight(&nat(n), k, p)?;
            let valuations: Integer = (1..=k).map(|j| finite(val(&nat(n + j), p))).sum();
            let closed = Integer::from(k) - Integer::from(p.pred()) * valuations;
            Ok(outcome(group, closed))
        },
    },
];

pub fn find(name: &str) -> Result<&'static Identity, CliError> {
    IDENTITIES.iter().find(|i| i.name == name).ok_or_else(|| {
        let names: Vec<_> = IDENTITIES.iter().map(|i| i.name).collect();
        CliError::Usage(format!(
            "unknown identity `{name}`; expected `all` or one of: {}",
            names.join(", ")
        ))
    })
}

/// Overrides taken from the command line.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub primes: Option<Vec<Prime>>,
    pub n: Option<Range>,
    /// Replaces the upper end of the `k` axis.
    pub k_max: Option<u64>,
    pub oracle: OracleConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub p: String,
    pub n: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub grid: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
    /// Exact-division or route-agreement assertions that tripped.
    pub inconsistencies: Vec<Failure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.inconsistencies.is_empty()
    }
}

impl Identity {
    fn primes_for(&self, overrides: &Overrides) -> Result<Vec<Prime>, CliError> {
        let defaults = |list: &[u64]| -> Vec<Prime> {
            list.iter()
                .map(|&p| Prime::try_from(p).expect("default primes are prime"))
                .collect()
        };
        let chosen = match &overrides.primes {
            Some(list) => list.clone(),
            None => match self.primes {
                Primes::Subset(list) => defaults(list),
                Primes::Two => defaults(&[2]),
                _ => defaults(&DEFAULT_PRIMES),
            },
        };
        let filtered: Vec<Prime> = match self.primes {
            Primes::Any | Primes::Subset(_) => chosen,
            Primes::Odd => chosen.into_iter().filter(|p| !p.is_two()).collect(),
            Primes::Two => chosen.into_iter().filter(Prime::is_two).collect(),
            Primes::Independent => chosen.into_iter().take(1).collect(),
        };
        if filtered.is_empty() {
            let needed = match self.primes {
                Primes::Odd => "an odd prime",
                Primes::Two => "p = 2",
                _ => "a prime",
            };
            return Err(CliError::Usage(format!("{} requires {needed}", self.name)));
        }
        Ok(filtered)
    }

    /// The `n` axis after applying `--n` and the oracle cap. Values below the
    /// identity's domain are dropped.
    fn n_range(&self, overrides: &Overrides) -> (Option<Range>, bool) {
        let requested = match overrides.n {
            Some(r) if self.n != NO_AXIS => {
                if r.end < self.n.start {
                    return (None, false);
                }
                Range {
                    start: r.start.max(self.n.start),
                    end: r.end,
                }
            }
            _ => self.n,
        };
        let cap = match self.bound {
            OracleBound::None => return (Some(requested), false),
            OracleBound::Factorial => overrides.oracle.factorial_cap,
            OracleBound::Special => overrides.oracle.special_cap,
        };
        if requested.end <= cap {
            (Some(requested), false)
        } else if requested.start > cap {
            (None, true)
        } else {
            (Some(Range { start: requested.start, end: cap }), true)
        }
    }

    fn k_range(&self, overrides: &Overrides) -> Result<Range, CliError> {
        match overrides.k_max {
            Some(end) if self.k != NO_AXIS => Range::new(self.k.start, end),
            _ => Ok(self.k),
        }
    }

    pub fn run(&self, overrides: &Overrides) -> Result<VerifyReport, CliError> {
        let started = Instant::now();
        let primes = self.primes_for(overrides)?;
        let (n_range, capped) = self.n_range(overrides);
        let k_range = self.k_range(overrides)?;

        let mut cases = Vec::new();
        if let Some(n_range) = n_range {
            for (pi, p) in primes.iter().enumerate() {
                for n in n_range.iter().step_by(self.n_step as usize) {
                    for k in k_range.iter() {
                        if self.filter.as_ref().map_or(true, |f| (f.keep)(p, n, k)) {
                            cases.push((pi, n, k));
                        }
                    }
                }
            }
        }

        let results: Vec<_> = cases
            .par_iter()
            .map(|&(pi, n, k)| ((pi, n, k), (self.check)(&primes[pi], n, k, &overrides.oracle)))
            .collect();

        let has_k = self.k != NO_AXIS;
        let describe = |(pi, n, k): (usize, u64, u64), lhs: String, rhs: String| Failure {
            p: primes[pi].to_string(),
            n: n.to_string(),
            k: has_k.then(|| k.to_string()),
            lhs,
            rhs,
        };

        let mut failures = Vec::new();
        let mut inconsistencies = Vec::new();
        let mut failed_cases = Vec::new();
        let mut broken_cases = Vec::new();
        for (case, result) in results {
            match result {
                Ok(Outcome::Pass) => {}
                Ok(Outcome::Fail { lhs, rhs }) => failed_cases.push((case, lhs, rhs)),
                Err(e) if e.is_inconsistency() => broken_cases.push((case, e.to_string())),
                Err(e) => return Err(CliError::Core(e)),
            }
        }
        failed_cases.sort_by_key(|(case, _, _)| *case);
        broken_cases.sort_by_key(|(case, _)| *case);
        for (case, lhs, rhs) in failed_cases {
            failures.push(describe(case, lhs, rhs));
        }
        for (case, message) in broken_cases {
            inconsistencies.push(describe(case, message, String::new()));
        }

        Ok(VerifyReport {
            identity: self.name.to_string(),
            grid: self.describe_grid(&primes, n_range, capped, k_range),
            checked: cases.len() as u64,
            failures,
            inconsistencies,
            elapsed: started.elapsed(),
        })
    }

    fn describe_grid(&self, primes: &[Prime], n: Option<Range>, capped: bool, k: Range) -> String {
        let mut parts = Vec::new();
        if self.primes == Primes::Independent {
            parts.push("p-independent".to_string());
        } else {
            let list: Vec<_> = primes.iter().map(ToString::to_string).collect();
            parts.push(format!("p in {{{}}}", list.join(",")));
        }
        if self.n != NO_AXIS || n.is_none() {
            let mut text = match n {
                Some(r) => format!("n = {r}"),
                None => "n = (empty)".to_string(),
            };
            if self.n_step > 1 {
                text.push_str(&format!(" step {}", self.n_step));
            }
            if capped {
                text.push_str(" (capped by oracle)");
            }
            parts.push(text);
        }
        if self.k != NO_AXIS {
            parts.push(format!("k = {k}"));
        }
        if let Some(filter) = &self.filter {
            parts.push(filter.note.to_string());
        }
        parts.join(", ")
    }
}

/// Runs one identity by name, or all of them for `"all"`.
///
/// With `"all"`, identities that do not apply to the requested primes are
/// skipped rather than reported as errors.
pub fn run(name: &str, overrides: &Overrides) -> Result<Vec<VerifyReport>, CliError> {
    if name == "all" {
        let mut reports = Vec::new();
        for identity in IDENTITIES {
            match identity.run(overrides) {
                Ok(report) => reports.push(report),
                Err(CliError::Usage(_)) if overrides.primes.is_some() => continue,
                Err(e) => return Err(e),
            }
        }
        Ok(reports)
    } else {
        Ok(vec![find(name)?.run(overrides)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: Range) -> Overrides {
        Overrides {
            n: Some(n),
            ..Overrides::default()
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = IDENTITIES.iter().map(|i| i.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), IDENTITIES.len());
        assert!(find("eq-1.11").is_ok());
        assert!(find("eq-9.9").is_err());
    }

    #[test]
    fn small_sweep_of_everything_passes() {
        let reports = run("all", &small(range(1, 60))).unwrap();
        assert_eq!(reports.len(), IDENTITIES.len());
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.identity, r.failures);
            assert!(r.checked > 0, "{}", r.identity);
        }
    }

    #[test]
    fn eq_1_11_counts() {
        let overrides = Overrides {
            primes: Some(vec![Prime::try_from(3).unwrap()]),
            n: Some(range(1, 1000)),
            ..Overrides::default()
        };
        let report = find("eq-1.11").unwrap().run(&overrides).unwrap();
        assert_eq!(report.checked, 1000);
        assert_eq!(report.grid, "p in {3}, n = 1..1000");
    }

    #[test]
    fn odd_only_rejects_two() {
        let overrides = Overrides {
            primes: Some(vec![Prime::try_from(2).unwrap()]),
            ..Overrides::default()
        };
        assert!(matches!(find("eq-3.7").unwrap().run(&overrides), Err(CliError::Usage(_))));
        let all = run("all", &Overrides { n: Some(range(1, 10)), ..overrides }).unwrap();
        assert!(all.iter().all(|r| !r.identity.starts_with("eq-3")));
    }

    #[test]
    fn theorem_four_skips_multiples() {
        let overrides = Overrides {
            primes: Some(vec![Prime::try_from(5).unwrap()]),
            n: Some(range(1, 10)),
            ..Overrides::default()
        };
        let report = find("thm-4").unwrap().run(&overrides).unwrap();
        assert_eq!(report.checked, 40 * 10);
    }

    #[test]
    fn oracle_cap_clamps_grid() {
        let overrides = Overrides {
            oracle: OracleConfig {
                factorial_cap: 100,
                special_cap: 20,
            },
            ..Overrides::default()
        };
        let report = find("eq-1.1-oracle").unwrap().run(&overrides).unwrap();
        assert_eq!(report.checked, 101 * 6);
        assert!(report.grid.contains("capped"));
        let report = find("catalan-parity").unwrap().run(&overrides).unwrap();
        assert_eq!(report.checked, 21);
    }
}
