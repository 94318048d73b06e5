//! Named groups of checks for `qschur verify`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::criteria::{self, CheckReport, Outcome, Range};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Hecke–Clifford relations and the x_lambda commutation (checks 1, 2).
    Hecke,
    /// Corner test equivalence (check 3).
    Sdp,
    /// Basis integrity, closed formulas, tails and long-element actions (checks 4 to 7).
    Formulas,
    /// Defining relations (check 8).
    Relations,
    /// Monomial triangularity and basis counting (checks 9, 10).
    Triangular,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["hecke", "sdp", "formulas", "relations", "triangular", "all"];
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "hecke" => Suite::Hecke,
            "sdp" => Suite::Sdp,
            "formulas" => Suite::Formulas,
            "relations" => Suite::Relations,
            "triangular" => Suite::Triangular,
            "all" => Suite::All,
            _ => {
                return Err(CliError::Parse(format!(
                    "unknown suite `{s}`; expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("suite serializes");
        write!(f, "{}", s.as_str().expect("suite is a string"))
    }
}

/// Parameters of one `verify` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub suite: Suite,
    pub n: usize,
    pub rmax: i32,
    pub seed: u64,
    /// Random basis-word triples for the associativity check.
    pub triples: usize,
}

impl RunConfig {
    pub fn new(suite: Suite, n: usize, rmax: i32, seed: u64) -> Result<Self, CliError> {
        if n < 2 {
            return Err(CliError::Parse(format!("n must be at least 2, got {n}")));
        }
        crate::check_bounds(n, rmax)?;
        Ok(RunConfig {
            suite,
            n,
            rmax,
            seed,
            triples: 500,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: RunConfig,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn has_errors(&self) -> bool {
        self.checks.iter().any(|c| c.outcome == Outcome::Error)
    }
}

/// Runs the checks of `cfg.suite`. The Hecke-level suites sweep every `n' <= n`; the others
/// sweep exactly `n`.
pub fn run(cfg: &RunConfig) -> VerifyReport {
    let (n, rmax) = (cfg.n, cfg.rmax);
    let exact: Vec<Range> = vec![(n, rmax)];
    let upto: Vec<Range> = (1..=n).map(|k| (k, rmax)).collect();
    let want = |s: Suite| cfg.suite == s || cfg.suite == Suite::All;
    let mut checks = Vec::new();
    if want(Suite::Hecke) {
        checks.push(criteria::hecke_soundness(rmax, cfg.triples, cfg.seed));
        checks.push(criteria::commutation(&upto));
    }
    if want(Suite::Sdp) {
        checks.push(criteria::sdp_equivalence(&upto));
    }
    if want(Suite::Formulas) {
        checks.push(criteria::basis_integrity(&exact));
        checks.push(criteria::formulas_vs_oracle(&exact));
        checks.push(criteria::tail_support(&exact));
        checks.push(criteria::long_calculus(&exact));
    }
    if want(Suite::Relations) {
        checks.push(criteria::relations(&exact));
    }
    if want(Suite::Triangular) {
        checks.push(criteria::triangularity(&exact));
        checks.push(criteria::counting(&exact));
    }
    VerifyReport {
        config: cfg.clone(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn config_bounds() {
        assert!(RunConfig::new(Suite::All, 1, 2, 0).is_err());
        assert!(RunConfig::new(Suite::All, 2, 0, 0).is_err());
        assert!(matches!(
            RunConfig::new(Suite::All, 2, 99, 0),
            Err(CliError::Limit(_))
        ));
    }
}
