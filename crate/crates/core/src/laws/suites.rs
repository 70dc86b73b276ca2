//! Randomized law suites with seeded, order-independent cases.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::generate::{case_rng, random_chain, random_cube, random_mono_span, random_quadruple, Cube};
use super::universal::is_pullback_by_enumeration;
use crate::cospan::{check_interchange, pentagon_holds, triangle_holds};
use crate::graph::check::{is_pullback_square, is_pushout_square};
use crate::graph::{pushout, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    /// Node bound for generated graphs.
    pub max_size: usize,
    /// Generate 2-cells with arbitrary legs; interchange is then expected
    /// to fail on some cases.
    pub allow_nonmonic: bool,
}

impl SuiteConfig {
    pub fn new(seed: u64, cases: usize, max_size: usize) -> Self {
        Self {
            seed,
            cases,
            max_size,
            allow_nonmonic: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub case: u64,
    pub check: String,
    /// The offending instance, in full.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub checks: BTreeMap<String, CheckTally>,
    pub failures: Vec<CaseFailure>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passes(&self, check: &str) -> usize {
        self.checks.get(check).map_or(0, |t| t.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} seed={} cases={}", self.suite, self.seed, self.cases)?;
        for (name, t) in &self.checks {
            writeln!(f, "  {name}: {} passed, {} failed", t.passed, t.failed)?;
        }
        for fail in &self.failures {
            writeln!(f, "  FAIL case {} {}: {}", fail.case, fail.check, fail.detail)?;
        }
        write!(f, "result: {}", if self.all_passed() { "PASS" } else { "FAIL" })
    }
}

/// Outcome of one named check on one case: `Err` carries the instance dump.
type Outcome = (&'static str, Result<(), String>);

fn run(
    suite: &str,
    cfg: &SuiteConfig,
    checks: &[&'static str],
    case: impl Fn(u64) -> Vec<Outcome> + Sync,
) -> SuiteReport {
    let outcomes: Vec<Vec<Outcome>> = (0..cfg.cases as u64).into_par_iter().map(&case).collect();
    let mut tallies: BTreeMap<String, CheckTally> =
        checks.iter().map(|c| (c.to_string(), CheckTally::default())).collect();
    let mut failures = Vec::new();
    for (i, results) in outcomes.into_iter().enumerate() {
        for (name, r) in results {
            let t = tallies.entry(name.to_string()).or_default();
            match r {
                Ok(()) => t.passed += 1,
                Err(detail) => {
                    t.failed += 1;
                    failures.push(CaseFailure {
                        case: i as u64,
                        check: name.to_string(),
                        detail,
                    });
                }
            }
        }
    }
    SuiteReport {
        suite: suite.to_string(),
        seed: cfg.seed,
        cases: cfg.cases,
        checks: tallies,
        failures,
    }
}

fn verdict(ok: Result<bool, impl fmt::Display>, dump: impl FnOnce() -> String) -> Result<(), String> {
    match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err(dump()),
        Err(e) => Err(format!("error: {e}; instance: {}", dump())),
    }
}

/// Interchange on random quadruples of 2-cells whose apexes have at most
/// `max_size` nodes. Besides the iso class, checks that monic inputs give
/// monic composites.
pub fn random_interchange_suite(cfg: &SuiteConfig) -> SuiteReport {
    let monic = !cfg.allow_nonmonic;
    run("interchange", cfg, &["interchange"], |case| {
        let q = random_quadruple(&mut case_rng(cfg.seed, case), cfg.max_size, monic);
        let result = check_interchange(&q.ss, &q.s2, &q.ts, &q.t2).map(|i| {
            let witness_ok = i.witness.as_ref().is_some_and(|w| w.is_iso());
            let monic_ok = !monic || (i.lhs.is_monic() && i.rhs.is_monic());
            i.holds && witness_ok && monic_ok
        });
        vec![("interchange", verdict(result, || format!("{q:?}")))]
    })
}

fn cube_checks(c: &Cube) -> Result<(bool, bool, bool), GraphError> {
    let monos = [
        &c.top_ab, &c.top_ac, &c.top_bd, &c.top_cd, &c.bot_ab, &c.bot_ac, &c.bot_bd, &c.bot_cd,
    ]
    .iter()
    .all(|h| h.is_mono());
    let hypotheses = monos
        && is_pullback_square(&c.top_ab, &c.top_ac, &c.top_bd, &c.top_cd)?
        && is_pushout_square(&c.top_bd, &c.down_b, &c.down_d, &c.bot_bd)?
        && is_pushout_square(&c.top_cd, &c.down_c, &c.down_d, &c.bot_cd)?;
    let bottom_pullback = is_pullback_square(&c.bot_ab, &c.bot_ac, &c.bot_bd, &c.bot_cd)?;
    let back_pushouts = is_pushout_square(&c.top_ab, &c.down_a, &c.down_b, &c.bot_ab)?
        && is_pushout_square(&c.top_ac, &c.down_a, &c.down_c, &c.bot_ac)?;
    Ok((hypotheses, bottom_pullback, back_pushouts))
}

/// Pushouts along monos: the opposite leg is monic, the square is a
/// pullback (checked by mediator enumeration), and on random cubes a
/// pullback bottom face goes with pushout back faces.
pub fn adhesive_suite(cfg: &SuiteConfig) -> SuiteReport {
    let checks = ["mono_stable", "pushout_is_pullback", "vk_cube"];
    run("adhesive", cfg, &checks, |case| {
        let mut rng = case_rng(cfg.seed, case);
        let span = random_mono_span(&mut rng, cfg.max_size);
        let dump = || format!("{span:?}");
        let (stable, square) = match pushout(&span.mono, &span.other) {
            Ok(w) => (
                verdict(Ok::<_, GraphError>(w.leg(1).is_mono()), dump),
                verdict(is_pullback_by_enumeration(&span.mono, &span.other, w.leg(0), w.leg(1)), dump),
            ),
            Err(e) => (Err(e.to_string()), Err(e.to_string())),
        };
        let cube = random_cube(&mut rng, cfg.max_size);
        let vk = verdict(
            cube_checks(&cube).map(|(hyp, bottom, back)| hyp && bottom == back),
            || format!("{cube:?}"),
        );
        vec![("mono_stable", stable), ("pushout_is_pullback", square), ("vk_cube", vk)]
    })
}

/// Pentagon on random chains of four open graphs and triangle on pairs,
/// each apex with at most `max_size` nodes.
pub fn coherence_suite(cfg: &SuiteConfig) -> SuiteReport {
    run("coherence", cfg, &["pentagon", "triangle"], |case| {
        let mut rng = case_rng(cfg.seed, case);
        let four = random_chain(&mut rng, 4, cfg.max_size);
        let two = random_chain(&mut rng, 2, cfg.max_size);
        let pentagon = verdict(pentagon_holds(&four[0], &four[1], &four[2], &four[3]), || {
            format!("{four:?}")
        });
        let triangle = verdict(triangle_holds(&two[0], &two[1]), || format!("{two:?}"));
        vec![("pentagon", pentagon), ("triangle", triangle)]
    })
}
