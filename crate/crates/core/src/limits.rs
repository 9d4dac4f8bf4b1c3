use crate::error::{Error, Result};

/// Cost guards for computations that grow like n!.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Expansions over the whole group (projectors, units, full rep dumps).
    pub expansion: usize,
    /// Exhaustive brute-force group-algebra suites.
    pub brute_force_full: usize,
    /// Sampled brute-force group-algebra suites.
    pub brute_force_sampled: usize,
    /// Assembly of the n! x n! coordinate matrices.
    pub duality: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            expansion: 7,
            brute_force_full: 5,
            brute_force_sampled: 6,
            duality: 5,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            expansion: usize::MAX,
            brute_force_full: usize::MAX,
            brute_force_sampled: usize::MAX,
            duality: usize::MAX,
        }
    }

    pub(crate) fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
        if n > limit {
            Err(Error::CostGuard { what, n, limit })
        } else {
            Ok(())
        }
    }
}

/// How thoroughly a verification suite covers its index space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Full,
    Sample,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Full => "full",
            Level::Sample => "sample",
        }
    }

    pub(crate) fn brute_force_limit(self, limits: &Limits) -> usize {
        match self {
            Level::Full => limits.brute_force_full,
            Level::Sample => limits.brute_force_sampled,
        }
    }
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(Level::Full),
            "sample" => Ok(Level::Sample),
            _ => Err(format!("unknown level {s:?}, expected full or sample")),
        }
    }
}
