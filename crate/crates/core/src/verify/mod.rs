//! Exhaustive verification suites over small hosts, and the sweep comparing
//! `B_k` isomorphism against the conjectured characterization.

mod basic;
mod lower;
mod omega;
mod pairs;
mod upper;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate::graphs_up_to;
use crate::graph::Graph;
use crate::graph6::encode;

pub use basic::{is_line_graph_by_search, line_graph_codes};
pub use lower::{
    check_fat_partition, check_lower_instance, check_lower_invariants, check_split_closure,
    fat_hosts, lower_instances, split_closure_hosts, LowerInstance,
};
pub use omega::check_omega_invariants;
pub use pairs::{conjecture_search, Counterexample, SearchReport};
pub use upper::{check_full_recon, check_upper_auto};

/// The named suites accepted by [`run_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Core,
    Partitions,
    Bell,
    Omega,
    Lineroot,
    FullRecon,
    UpperAuto,
    LowerRecon,
    Classify,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Core,
        Suite::Partitions,
        Suite::Bell,
        Suite::Omega,
        Suite::Lineroot,
        Suite::FullRecon,
        Suite::UpperAuto,
        Suite::LowerRecon,
        Suite::Classify,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Partitions => "partitions",
            Suite::Bell => "bell",
            Suite::Omega => "omega",
            Suite::Lineroot => "lineroot",
            Suite::FullRecon => "full-recon",
            Suite::UpperAuto => "upper-auto",
            Suite::LowerRecon => "lower-recon",
            Suite::Classify => "classify",
        }
    }

    /// Largest host order the suite sweeps.
    pub fn cap(&self) -> usize {
        match self {
            Suite::Core => 8,
            Suite::Partitions | Suite::Bell | Suite::FullRecon | Suite::UpperAuto => 7,
            Suite::Omega | Suite::Lineroot => 6,
            Suite::LowerRecon => 13,
            Suite::Classify => 5,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// A violated check with enough to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    /// Host graph in graph6.
    pub graph6: String,
    pub variant: Option<String>,
    pub seed: Option<u64>,
    pub detail: String,
}

impl Failure {
    pub fn new(check: &str, g: &Graph) -> Self {
        Failure {
            check: check.to_string(),
            graph6: encode(g),
            variant: None,
            seed: None,
            detail: String::new(),
        }
    }

    pub fn variant(mut self, v: impl fmt::Display) -> Self {
        self.variant = Some(v.to_string());
        self
    }

    pub fn seed(mut self, s: u64) -> Self {
        self.seed = Some(s);
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }
}

/// Check counts and failures for one unit of work.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.checks += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    /// Record an error from a fallible step as a failure.
    pub fn require<T>(&mut self, r: Result<T>, failure: impl FnOnce() -> Failure) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.checks += 1;
                let f = failure();
                let detail = if f.detail.is_empty() {
                    e.to_string()
                } else {
                    format!("{}: {e}", f.detail)
                };
                self.failures.push(f.detail(detail));
                None
            }
        }
    }

    pub fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n_max: usize,
    pub seeds: u64,
    /// Units of work: host graphs, or fixed instances.
    pub hosts: usize,
    pub hosts_passed: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_units(suite: Suite, n_max: usize, seeds: u64, units: Vec<Tally>) -> Self {
        let hosts = units.len();
        let hosts_passed = units.iter().filter(|t| t.passed()).count();
        let mut all = Tally::default();
        for t in units {
            all.absorb(t);
        }
        SuiteReport {
            suite,
            n_max,
            seeds,
            hosts,
            hosts_passed,
            checks: all.checks,
            failures: all.failures,
        }
    }
}

/// Run `f` on every host class of order `1..=n_max`, in parallel, keeping
/// host order in the result.
pub(crate) fn per_host(
    n_max: usize,
    f: impl Fn(&Graph) -> Tally + Sync + Send,
) -> Result<Vec<Tally>> {
    let hosts = graphs_up_to(n_max)?;
    Ok(hosts.par_iter().map(f).collect())
}

/// Run the named suite over hosts with at most `n_max` vertices and scramble
/// seeds `0..seeds`.
pub fn run_suite(suite: Suite, n_max: usize, seeds: u64) -> Result<SuiteReport> {
    if n_max > suite.cap() {
        return Err(Error::CapExceeded {
            what: "suite host order",
            cap: suite.cap(),
        });
    }
    let units = match suite {
        Suite::Core => per_host(n_max, |g| basic::check_core(g, seeds))?,
        Suite::Partitions => per_host(n_max, basic::check_partitions)?,
        Suite::Bell => per_host(n_max, |g| basic::check_bell(g, seeds))?,
        Suite::Lineroot => {
            let codes = line_graph_codes(n_max);
            per_host(n_max, |g| basic::check_lineroot(g, &codes))?
        }
        Suite::Omega => per_host(n_max, check_omega_invariants)?,
        Suite::FullRecon => per_host(n_max, |g| check_full_recon(g, seeds))?,
        Suite::UpperAuto => per_host(n_max, |g| check_upper_auto(g, seeds))?,
        Suite::LowerRecon => lower::lower_suite(n_max, seeds)?,
        Suite::Classify => pairs::classify_suite(n_max, seeds)?,
    };
    Ok(SuiteReport::from_units(suite, n_max, seeds, units))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(
            "nope".parse::<Suite>(),
            Err(Error::UnknownSuite("nope".into()))
        );
    }

    #[test]
    fn empty_corpus_is_vacuous() {
        let r = run_suite(Suite::Core, 0, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.hosts, 0);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            run_suite(Suite::Classify, 6, 1),
            Err(Error::CapExceeded { .. })
        ));
    }
}
