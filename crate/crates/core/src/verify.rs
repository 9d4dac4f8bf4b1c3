//! One-shot verification driver: runs every suite for a given `n` and
//! collects the results into a deterministic report.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::characters::{verify_characters, verify_units};
use crate::claims::{g_claims, Claim};
use crate::error::Result;
use crate::limits::{Level, Limits};
use crate::perm_core::factorial;
use crate::projectors::{verify_coordinates, verify_projector_relations, IrrepBundle};
use crate::report::CheckReport;
use crate::representations::{
    verify_coordinate_identities, verify_duality, verify_homomorphism, verify_reduced_entries,
};
use crate::tableaux::{dimension, partitions};

/// Sample sizes used at `Level::Sample`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleSizes {
    pub relation_pairs: usize,
    pub coordinates: usize,
    pub homomorphism_pairs: usize,
    pub reduced_perms: usize,
    pub identity_pairs: usize,
}

impl Default for SampleSizes {
    fn default() -> Self {
        SampleSizes {
            relation_pairs: 20,
            coordinates: 2_000,
            homomorphism_pairs: 500,
            reduced_perms: 1_000,
            identity_pairs: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub level: Level,
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<CheckReport>,
    /// Published empirical observations; a claim that does not hold is a
    /// finding and does not affect `passed`.
    pub claims: Vec<Claim>,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        let mut out = format!("verify n={} level={} seed={}\n", self.n, self.level.as_str(), self.seed);
        for s in &self.suites {
            let status = match (&s.skipped, s.passed()) {
                (Some(_), _) => "SKIP",
                (None, true) => "PASS",
                (None, false) => "FAIL",
            };
            out += &format!("  {status} {} ({} checks, {} failures)", s.name, s.checks, s.failure_count);
            if let Some(reason) = &s.skipped {
                out += &format!(": {reason}");
            }
            out.push('\n');
            for f in &s.failures {
                out += &format!("      {f}\n");
            }
        }
        for c in &self.claims {
            let status = if c.holds { "HOLDS" } else { "DOES NOT HOLD" };
            out += &format!("  claim {}: {status} ({})\n", c.name, c.detail);
        }
        out += if self.passed { "result: PASS\n" } else { "result: FAIL\n" };
        out
    }
}

fn dimension_suite(n: usize) -> CheckReport {
    let mut report = CheckReport::new("dimensions");
    let total: BigInt = partitions(n).iter().map(|p| BigInt::from(dimension(p)).pow(2)).sum();
    report.check(total == factorial(n), || format!("sum of squared dimensions is {total}, not {n}!"));
    report
}

fn suite_rng(seed: u64, suite: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ suite.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs all suites. Errors only when `n` exceeds the cost guard for the
/// chosen level; suite failures are recorded in the report.
pub fn run(n: usize, level: Level, seed: u64, limits: &Limits) -> Result<VerifyReport> {
    run_with(n, level, seed, limits, &SampleSizes::default())
}

pub fn run_with(
    n: usize,
    level: Level,
    seed: u64,
    limits: &Limits,
    sizes: &SampleSizes,
) -> Result<VerifyReport> {
    Limits::guard("verify", n, level.brute_force_limit(limits))?;
    let bundles = IrrepBundle::all(n)?;
    let mut suites = vec![dimension_suite(n)];

    suites.push(verify_projector_relations(n, level, sizes.relation_pairs, &mut suite_rng(seed, 1), limits)?);
    suites.push(verify_coordinates(n, level, sizes.coordinates, &mut suite_rng(seed, 2), limits)?);

    let mut hom = CheckReport::new("homomorphism");
    let mut reduced_y = CheckReport::new("reduced_y");
    let mut reduced_x = CheckReport::new("reduced_x");
    let mut identities = CheckReport::new("coordinate_identities");
    for (k, b) in bundles.iter().enumerate() {
        let k = k as u64;
        hom.merge(verify_homomorphism(b, level, sizes.homomorphism_pairs, &mut suite_rng(seed, 100 + k))?);
        let (y, x) = verify_reduced_entries(b, level, sizes.reduced_perms, &mut suite_rng(seed, 200 + k))?;
        reduced_y.merge(y);
        reduced_x.merge(x);
        identities.merge(verify_coordinate_identities(
            b,
            sizes.identity_pairs,
            &mut suite_rng(seed, 300 + k),
            limits,
        )?);
    }
    suites.push(hom);
    suites.push(reduced_y);
    suites.push(identities);

    suites.push(if n <= limits.duality {
        verify_duality(n, limits)?
    } else {
        CheckReport::skipped("duality", format!("n > {}", limits.duality))
    });
    suites.push(if n <= limits.brute_force_full {
        verify_units(n, limits)?
    } else {
        CheckReport::skipped("units", format!("n > {}", limits.brute_force_full))
    });
    suites.push(verify_characters(n, limits)?);

    let mut claims = vec![Claim {
        name: "reduced_representation_matrices".into(),
        statement: "every x' matrix has entries in {-1,0,+1}".into(),
        holds: reduced_x.passed(),
        detail: format!("{} matrices checked, {} outside", reduced_x.checks, reduced_x.failure_count),
    }];
    if n >= 5 {
        claims.extend(g_claims(n)?.into_iter().filter(|c| c.name.starts_with("first_")));
    }

    let passed = suites.iter().all(CheckReport::passed);
    Ok(VerifyReport { n, level, seed, passed, suites, claims })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_and_small() {
        for n in 1..=3 {
            let r = run(n, Level::Full, 7, &Limits::default()).unwrap();
            assert!(r.passed, "{}", r.summary());
            assert!(r.claims.iter().all(|c| c.holds));
        }
    }

    #[test]
    fn guard() {
        assert!(run(6, Level::Full, 0, &Limits::default()).is_err());
    }
}
