//! Reduced-entry representation matrices.
//!
//! A permutation `b` expands in the renormalized projectors `p'_ij = p_ij / f`
//! with integer coordinates `x'(b)`. They are obtained without inverting the
//! n! x n! coordinate system from
//!
//! ```text
//! x'(b) = g'^{-1} * transpose(y(b^{-1})) * g'^{-1}
//! ```
//!
//! where `y(b)_ij` is the coefficient of `b` in `p_ij`. The coordinates
//! multiply as `x'(a) g' x'(b) = x'(ab)`, so `M(b) = x'(b) g'` is an ordinary
//! matrix representation.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{Level, Limits};
use crate::matrix::{IntMatrix, RatMatrix};
use crate::perm_core::{factorial, Permutation};
use crate::projectors::{coordinate_unchecked, expand_all, IrrepBundle};
use crate::report::CheckReport;
use crate::tableaux::Partition;

/// Coordinates of one permutation in the renormalized projector basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub shape: Partition,
    pub perm: Permutation,
    pub x_reduced: IntMatrix,
}

impl RepMatrix {
    /// The homomorphic matrix `M(b) = x'(b) g'`.
    pub fn conventional(&self, bundle: &IrrepBundle) -> IntMatrix {
        &self.x_reduced * bundle.g_reduced()
    }
}

/// `y(b)_ij`, the coefficient of `b` in `p_ij`.
pub fn y_matrix(bundle: &IrrepBundle, b: &Permutation) -> Result<IntMatrix> {
    check_degree(bundle, b)?;
    let ts = bundle.tableaux();
    Ok(IntMatrix::from_fn(bundle.dim(), bundle.dim(), |i, j| {
        BigInt::from(coordinate_unchecked(&ts[i], &ts[j], b))
    }))
}

pub fn rep_matrix(bundle: &IrrepBundle, b: &Permutation) -> Result<RepMatrix> {
    let y = y_matrix(bundle, &b.inverse())?;
    let ginv = bundle.g_reduced_inverse();
    let x = &(ginv * &y.transpose()) * ginv;
    Ok(RepMatrix {
        shape: bundle.shape().clone(),
        perm: b.clone(),
        x_reduced: x,
    })
}

fn check_degree(bundle: &IrrepBundle, b: &Permutation) -> Result<()> {
    if b.degree() != bundle.degree() {
        return Err(Error::SizeMismatch {
            expected: bundle.degree(),
            found: b.degree(),
        });
    }
    Ok(())
}

/// JSON dump of representation matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RepDoc {
    pub n: usize,
    pub partition: Partition,
    pub g_prime: IntMatrix,
    pub matrices: Vec<RepEntry>,
}

/// `x` holds `x'(b)`; `m` holds `x'(b) g'` when the conventional form was
/// requested instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepEntry {
    pub perm: Permutation,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<IntMatrix>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<IntMatrix>,
}

impl RepDoc {
    pub fn new(bundle: &IrrepBundle, perms: &[Permutation], conventional: bool) -> Result<Self> {
        let matrices = perms
            .par_iter()
            .map(|p| {
                let r = rep_matrix(bundle, p)?;
                Ok(if conventional {
                    RepEntry {
                        perm: p.clone(),
                        x: None,
                        m: Some(r.conventional(bundle)),
                    }
                } else {
                    RepEntry {
                        perm: p.clone(),
                        x: Some(r.x_reduced),
                        m: None,
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepDoc {
            n: bundle.degree(),
            partition: bundle.shape().clone(),
            g_prime: bundle.g_reduced().clone(),
            matrices,
        })
    }
}

fn rep_cache(bundle: &IrrepBundle, perms: impl IntoParallelIterator<Item = Permutation>) -> HashMap<Permutation, IntMatrix> {
    perms
        .into_par_iter()
        .map(|p| {
            let x = rep_matrix(bundle, &p).expect("degree checked").x_reduced;
            (p, x)
        })
        .collect()
}

/// Checks `x'(a) g' x'(b) = x'(ab)` and the dual law
/// `D(a) g'^{-1} D(b) = D(ab)` with `D(b) = g' x'(b) g'`.
///
/// `Level::Full` runs every pair; `Level::Sample` draws `trials` pairs.
pub fn verify_homomorphism<R: Rng>(
    bundle: &IrrepBundle,
    level: Level,
    trials: usize,
    rng: &mut R,
) -> Result<CheckReport> {
    let n = bundle.degree();
    let pairs: Vec<(Permutation, Permutation)> = match level {
        Level::Full => {
            let all = Permutation::all(n);
            all.iter()
                .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        }
        Level::Sample => (0..trials)
            .map(|_| (Permutation::random(n, rng), Permutation::random(n, rng)))
            .collect(),
    };
    let mut needed: Vec<Permutation> = pairs
        .iter()
        .flat_map(|(a, b)| [a.clone(), b.clone(), a.then(b)])
        .collect();
    needed.sort();
    needed.dedup();
    let x = rep_cache(bundle, needed);
    let g = bundle.g_reduced();
    let ginv = bundle.g_reduced_inverse();
    let dual = |p: &Permutation| &(g * &x[p]) * g;

    let results: Vec<(bool, bool)> = pairs
        .par_iter()
        .map(|(a, b)| {
            let ab = a.then(b);
            let hom = &(&x[a] * g) * &x[b] == x[&ab];
            let dual_ok = &(&dual(a) * ginv) * &dual(b) == dual(&ab);
            (hom, dual_ok)
        })
        .collect();

    let mut report = CheckReport::new(format!("homomorphism[{}]", bundle.shape()));
    for ((a, b), (hom, dual_ok)) in pairs.iter().zip(results) {
        report.check(hom, || format!("x'({a}) g' x'({b}) != x'({a}{b})"));
        report.check(dual_ok, || format!("dual law fails for ({a}, {b})"));
    }
    Ok(report)
}

/// Reduced-entry checks for one shape. Returns the report for the `y`
/// coordinates (a theorem) and the one for `x'` (an empirical claim).
pub fn verify_reduced_entries<R: Rng>(
    bundle: &IrrepBundle,
    level: Level,
    samples: usize,
    rng: &mut R,
) -> Result<(CheckReport, CheckReport)> {
    let n = bundle.degree();
    let perms: Vec<Permutation> = match level {
        Level::Full => Permutation::all(n),
        Level::Sample => (0..samples).map(|_| Permutation::random(n, rng)).collect(),
    };
    let results: Vec<(Permutation, bool, bool)> = perms
        .into_par_iter()
        .map(|p| {
            let y_ok = y_matrix(bundle, &p).expect("degree").is_reduced();
            let x_ok = rep_matrix(bundle, &p).expect("degree").x_reduced.is_reduced();
            (p, y_ok, x_ok)
        })
        .collect();
    let mut y_report = CheckReport::new(format!("reduced_y[{}]", bundle.shape()));
    let mut x_report = CheckReport::new(format!("reduced_x[{}]", bundle.shape()));
    for (p, y_ok, x_ok) in results {
        y_report.check(y_ok, || format!("y({p}) has an entry outside {{-1,0,1}}"));
        x_report.check(x_ok, || format!("x'({p}) has an entry outside {{-1,0,1}}"));
    }
    Ok((y_report, x_report))
}

/// Assembles the full coordinate matrices over all shapes and checks that
/// `x = x'/f` and `y` are mutual inverses. For `n <= 4` the inverse of `y`
/// is also computed by exact Gauss-Jordan elimination and compared.
pub fn verify_duality(n: usize, limits: &Limits) -> Result<CheckReport> {
    Limits::guard("coordinate duality suite", n, limits.duality)?;
    let bundles = IrrepBundle::all(n)?;
    let perms = Permutation::all(n);
    let order = perms.len();
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(k, p)| (p, k)).collect();

    // y: rows (lambda, i, j), columns permutations
    // x: rows permutations, columns (lambda, i, j), stored as m * x' so that
    // x * y = n! * identity stays integral
    let mut y = IntMatrix::zeros(order, order);
    let mut x_scaled = IntMatrix::zeros(order, order);
    let mut row = 0;
    for bundle in &bundles {
        let m = bundle.dim();
        let expanded = expand_all(bundle, &Limits::unbounded())?;
        let reps: Vec<IntMatrix> = perms
            .par_iter()
            .map(|p| rep_matrix(bundle, p).expect("degree").x_reduced)
            .collect();
        for i in 0..m {
            for j in 0..m {
                for (s, c) in expanded[i][j].terms() {
                    y.set(row, index[s], c.clone());
                }
                for (a, x) in reps.iter().enumerate() {
                    x_scaled.set(a, row, x.get(i, j) * BigInt::from(m));
                }
                row += 1;
            }
        }
    }
    debug_assert_eq!(row, order);

    let mut report = CheckReport::new("duality");
    let target = IntMatrix::identity(order).scale(&factorial(n));
    report.check(&x_scaled * &y == target, || "x * y != identity".into());
    report.check(&y * &x_scaled == target, || "y * x != identity".into());

    if n <= 4 {
        let oracle = y.to_rational().inverse();
        let x = RatMatrix::from_fn(order, order, |a, col| {
            BigRational::new(x_scaled.get(a, col).clone(), factorial(n))
        });
        report.check(oracle.as_ref() == Some(&x), || "Gauss-Jordan inverse of y differs from x".into());
    }
    Ok(report)
}

/// Coordinate identities for one shape:
/// `y(c b^{-1}) = y(c) (g' x'(b))^T` on `samples` random pairs, and the
/// summed corollary `n! y(e)_ij = m g_ji` both directly and as
/// `sum_b (y(b) (g' x'(b))^T)_ij`.
pub fn verify_coordinate_identities<R: Rng>(
    bundle: &IrrepBundle,
    samples: usize,
    rng: &mut R,
    limits: &Limits,
) -> Result<CheckReport> {
    let n = bundle.degree();
    let mut report = CheckReport::new(format!("coordinate_identities[{}]", bundle.shape()));
    let g = bundle.g_reduced();
    let m = BigInt::from(bundle.dim());
    let nfact = factorial(n);
    let g_full = bundle.g_unnormalized();

    let ye = y_matrix(bundle, &Permutation::identity(n))?;
    for i in 0..bundle.dim() {
        for j in 0..bundle.dim() {
            report.check(&nfact * ye.get(i, j) == &m * g_full.get(j, i), || {
                format!("n! y(e)_{}{} != m g_{}{}", i + 1, j + 1, j + 1, i + 1)
            });
        }
    }

    let pairs: Vec<(Permutation, Permutation)> = (0..samples)
        .map(|_| (Permutation::random(n, rng), Permutation::random(n, rng)))
        .collect();
    let ok: Vec<bool> = pairs
        .par_iter()
        .map(|(b, c)| {
            let lhs = y_matrix(bundle, &c.then(&b.inverse())).expect("degree");
            let xb = rep_matrix(bundle, b).expect("degree").x_reduced;
            let rhs = &y_matrix(bundle, c).expect("degree") * &(g * &xb).transpose();
            lhs == rhs
        })
        .collect();
    for ((b, c), ok) in pairs.iter().zip(ok) {
        report.check(ok, || format!("y(c b^-1) identity fails for b={b}, c={c}"));
    }

    if n <= limits.expansion {
        let total = Permutation::all(n)
            .into_par_iter()
            .map(|b| {
                let xb = rep_matrix(bundle, &b).expect("degree").x_reduced;
                &y_matrix(bundle, &b).expect("degree") * &(g * &xb).transpose()
            })
            .reduce(
                || IntMatrix::zeros(bundle.dim(), bundle.dim()),
                |a, b| {
                    IntMatrix::from_fn(a.rows(), a.cols(), |r, c| a.get(r, c) + b.get(r, c))
                },
            );
        for i in 0..bundle.dim() {
            for j in 0..bundle.dim() {
                report.check(total.get(i, j) == &(&m * g_full.get(j, i)), || {
                    format!("sum over b of identity at ({}, {}) != m g_{}{}", i + 1, j + 1, j + 1, i + 1)
                });
                report.check(total.get(i, j) == &(&nfact * ye.get(i, j)), || {
                    format!("sum over b at ({}, {}) != n! y(e)", i + 1, j + 1)
                });
            }
        }
    }
    Ok(report)
}

/// Convenience: every representation matrix of a shape, in permutation order.
pub fn all_rep_matrices(bundle: &IrrepBundle, limits: &Limits) -> Result<Vec<RepMatrix>> {
    Limits::guard("full group representation dump", bundle.degree(), limits.expansion)?;
    Permutation::all(bundle.degree())
        .par_iter()
        .map(|p| rep_matrix(bundle, p))
        .collect()
}
