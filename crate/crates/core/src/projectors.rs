//! Young-tableau projectors of S_n and their g-matrices.
//!
//! For standard tableaux `T_i`, `T_j` of one shape the projector is
//!
//! ```text
//! p_ij = N_i * sigma_ij * P_j
//! ```
//!
//! with `N_i` the column antisymmetrizer of `T_i`, `P_j` the row symmetrizer
//! of `T_j` and `sigma_ij` the intertwiner, multiplied in the group algebra
//! where the left factor acts first. Written as composition of maps (right
//! factor first) this is the product `P_j o sigma_ij o N_i`. The projectors
//! satisfy
//!
//! ```text
//! p_ij p_kl = f * g'_jk * p_il,      f = n!/m
//! ```
//!
//! where `g'` is unit lower triangular with entries in {-1, 0, +1}. Every
//! coefficient of `p_ij` is -1, 0 or +1 and is computed directly by
//! [`coordinate`] without multiplying anything out.

use num_bigint::BigInt;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{Level, Limits};
use crate::matrix::IntMatrix;
use crate::perm_core::{factorial, AlgebraElement, Permutation};
use crate::report::CheckReport;
use crate::tableaux::{
    column_antisymmetrizer, intertwiner, partitions, row_symmetrizer, standard_tableaux, Partition,
    StandardTableau,
};

/// Everything needed to work with one irreducible representation.
#[derive(Clone, Debug)]
pub struct IrrepBundle {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    sigma: Vec<Vec<Permutation>>,
    g_reduced: IntMatrix,
    g_reduced_inverse: IntMatrix,
    scale: BigInt,
}

impl IrrepBundle {
    pub fn new(shape: &Partition) -> Result<Self> {
        let tableaux = standard_tableaux(shape);
        let m = tableaux.len();
        let sigma = tableaux
            .iter()
            .map(|a| tableaux.iter().map(|b| intertwiner(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let e = Permutation::identity(shape.size());
        // g'_jk is the identity coefficient of p_kj
        let g_reduced = IntMatrix::from_fn(m, m, |j, k| {
            BigInt::from(coordinate_unchecked(&tableaux[k], &tableaux[j], &e))
        });
        let g_reduced_inverse = g_reduced.unit_lower_inverse().map_err(|_| {
            Error::Invariant(format!("g' for shape {shape} is not unit lower triangular"))
        })?;
        let scale = factorial(shape.size()) / m;
        Ok(IrrepBundle {
            shape: shape.clone(),
            tableaux,
            sigma,
            g_reduced,
            g_reduced_inverse,
            scale,
        })
    }

    /// One bundle per partition of `n`, in partition order.
    pub fn all(n: usize) -> Result<Vec<IrrepBundle>> {
        partitions(n).par_iter().map(IrrepBundle::new).collect()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// m, the number of standard tableaux.
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// f = n!/m.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    pub fn sigma(&self, i: usize, j: usize) -> Result<&Permutation> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(&self.sigma[i][j])
    }

    pub fn g_reduced(&self) -> &IntMatrix {
        &self.g_reduced
    }

    pub fn g_reduced_inverse(&self) -> &IntMatrix {
        &self.g_reduced_inverse
    }

    /// The unnormalized g = f g'.
    pub fn g_unnormalized(&self) -> IntMatrix {
        self.g_reduced.scale(&self.scale)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.dim() {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                dim: self.dim(),
            });
        }
        Ok(())
    }
}

/// Coefficient of `s` in `p_ij` (0-based tableau indices).
///
/// Form the filling `T_i s`. For each of its columns, the same symbols must
/// sit in pairwise different rows of `T_j`, otherwise the coefficient is 0.
/// Each column sequence and the same symbols sorted by their row in `T_j`
/// differ by a permutation; a cycle of length `l` contributes `l - 1` to
/// `k`, and the coefficient is `1 - 2 (k mod 2)`.
pub fn coordinate(bundle: &IrrepBundle, i: usize, j: usize, s: &Permutation) -> Result<i32> {
    bundle.check_index(i)?;
    bundle.check_index(j)?;
    if s.degree() != bundle.degree() {
        return Err(Error::SizeMismatch {
            expected: bundle.degree(),
            found: s.degree(),
        });
    }
    Ok(coordinate_unchecked(&bundle.tableaux[i], &bundle.tableaux[j], s))
}

pub(crate) fn coordinate_unchecked(ti: &StandardTableau, tj: &StandardTableau, s: &Permutation) -> i32 {
    let columns = ti.columns();
    let nrows = ti.shape().num_rows();
    // rows occupied in T_j by each column of T_i s
    let mut row_seqs: Vec<Vec<usize>> = Vec::with_capacity(columns.len());
    let mut used = vec![false; nrows];
    for col in &columns {
        used.iter_mut().for_each(|u| *u = false);
        let mut rows = Vec::with_capacity(col.len());
        for &x in col {
            let r = tj.row_of(s.apply(x));
            if used[r] {
                return 0;
            }
            used[r] = true;
            rows.push(r);
        }
        row_seqs.push(rows);
    }
    let mut k = 0usize;
    for rows in &row_seqs {
        // rank of each entry among the column's rows
        let ranks: Vec<usize> = rows
            .iter()
            .map(|r| rows.iter().filter(|&&q| q < *r).count())
            .collect();
        let mut seen = vec![false; ranks.len()];
        for start in 0..ranks.len() {
            let mut len = 0;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = ranks[at];
                len += 1;
            }
            if len > 0 {
                k += len - 1;
            }
        }
    }
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `p_ij` as a sum over all n! permutations of [`coordinate`].
pub fn projector_expand(bundle: &IrrepBundle, i: usize, j: usize, limits: &Limits) -> Result<AlgebraElement> {
    bundle.check_index(i)?;
    bundle.check_index(j)?;
    let n = bundle.degree();
    Limits::guard("projector expansion", n, limits.expansion)?;
    let (ti, tj) = (&bundle.tableaux[i], &bundle.tableaux[j]);
    let terms: Vec<(Permutation, BigInt)> = Permutation::all(n)
        .into_par_iter()
        .filter_map(|s| match coordinate_unchecked(ti, tj, &s) {
            0 => None,
            c => Some((s, BigInt::from(c))),
        })
        .collect();
    AlgebraElement::from_terms(n, terms)
}

/// All projectors of a bundle, `out[i][j] = p_ij`.
pub fn expand_all(bundle: &IrrepBundle, limits: &Limits) -> Result<Vec<Vec<AlgebraElement>>> {
    (0..bundle.dim())
        .map(|i| (0..bundle.dim()).map(|j| projector_expand(bundle, i, j, limits)).collect())
        .collect()
}

/// `p_ij` by multiplying `N_i`, `sigma_ij` and `P_j` in the group algebra.
pub fn brute_force_projector(bundle: &IrrepBundle, i: usize, j: usize) -> Result<AlgebraElement> {
    bundle.check_index(i)?;
    bundle.check_index(j)?;
    let ti = &bundle.tableaux[i];
    let tj = &bundle.tableaux[j];
    column_antisymmetrizer(ti)
        .multiply(&AlgebraElement::from_perm(bundle.sigma[i][j].clone()))?
        .multiply(&row_symmetrizer(tj))
}

/// The reduced g-matrix g' of a bundle.
pub fn g_matrix(bundle: &IrrepBundle) -> &IntMatrix {
    bundle.g_reduced()
}

/// JSON form of g' and its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GMatrixDoc {
    pub n: usize,
    pub partition: Partition,
    pub dim: usize,
    pub scale: String,
    pub g_prime: IntMatrix,
    pub g_prime_inverse: IntMatrix,
}

impl GMatrixDoc {
    pub fn new(bundle: &IrrepBundle) -> Self {
        GMatrixDoc {
            n: bundle.degree(),
            partition: bundle.shape().clone(),
            dim: bundle.dim(),
            scale: bundle.scale().to_string(),
            g_prime: bundle.g_reduced().clone(),
            g_prime_inverse: bundle.g_reduced_inverse().clone(),
        }
    }

    /// Cache file name `g_<n>_<parts-with-dashes>.json`.
    pub fn file_name(n: usize, shape: &Partition) -> String {
        format!("g_{n}_{}.json", shape.dashed())
    }
}

/// Checks `p_{lij} p_{mkl} = delta_{lm} f g'_jk p_{lil}` with expanded
/// projectors. `Level::Full` covers every pair of projectors; `Level::Sample`
/// draws `samples` index pairs for every ordered pair of shapes.
pub fn verify_projector_relations<R: Rng>(
    n: usize,
    level: Level,
    samples: usize,
    rng: &mut R,
    limits: &Limits,
) -> Result<CheckReport> {
    Limits::guard("projector relation suite", n, level.brute_force_limit(limits))?;
    let bundles = IrrepBundle::all(n)?;
    let expanded: Vec<Vec<Vec<AlgebraElement>>> = bundles
        .iter()
        .map(|b| expand_all(b, &Limits::unbounded()))
        .collect::<Result<_>>()?;

    // (lambda, i, j, mu, k, l)
    let mut cases = Vec::new();
    for (a, ba) in bundles.iter().enumerate() {
        for (b, bb) in bundles.iter().enumerate() {
            let (ma, mb) = (ba.dim(), bb.dim());
            match level {
                Level::Full => {
                    for i in 0..ma {
                        for j in 0..ma {
                            for k in 0..mb {
                                for l in 0..mb {
                                    cases.push((a, i, j, b, k, l));
                                }
                            }
                        }
                    }
                }
                Level::Sample => {
                    for _ in 0..samples {
                        cases.push((
                            a,
                            rng.gen_range(0..ma),
                            rng.gen_range(0..ma),
                            b,
                            rng.gen_range(0..mb),
                            rng.gen_range(0..mb),
                        ));
                    }
                }
            }
        }
    }

    let outcomes: Vec<(bool, String)> = cases
        .par_iter()
        .map(|&(a, i, j, b, k, l)| {
            let lhs = expanded[a][i][j]
                .multiply(&expanded[b][k][l])
                .expect("equal degrees");
            let rhs = if a == b {
                let bundle = &bundles[a];
                let c = bundle.g_reduced().get(j, k) * bundle.scale();
                expanded[a][i][l].scale(&c)
            } else {
                AlgebraElement::zero(n)
            };
            let ok = lhs == rhs;
            let detail = if ok {
                String::new()
            } else {
                format!(
                    "p[{}]_{}{} * p[{}]_{}{} != expected",
                    bundles[a].shape(),
                    i + 1,
                    j + 1,
                    bundles[b].shape(),
                    k + 1,
                    l + 1
                )
            };
            (ok, detail)
        })
        .collect();

    let mut report = CheckReport::new("projector_relations");
    for (ok, detail) in outcomes {
        report.check(ok, || detail);
    }
    Ok(report)
}

/// Compares [`coordinate`] with the brute-force product for every shape.
/// `Level::Full` checks every `(i, j, s)`; `Level::Sample` checks `samples`
/// random `(shape, i, j, s)`.
pub fn verify_coordinates<R: Rng>(
    n: usize,
    level: Level,
    samples: usize,
    rng: &mut R,
    limits: &Limits,
) -> Result<CheckReport> {
    Limits::guard("coordinate oracle suite", n, level.brute_force_limit(limits))?;
    let bundles = IrrepBundle::all(n)?;
    let mut report = CheckReport::new("coordinates_vs_brute_force");
    match level {
        Level::Full => {
            let perms = Permutation::all(n);
            for bundle in &bundles {
                let pairs: Vec<(usize, usize)> = (0..bundle.dim())
                    .flat_map(|i| (0..bundle.dim()).map(move |j| (i, j)))
                    .collect();
                let results: Vec<CheckReport> = pairs
                    .par_iter()
                    .map(|&(i, j)| {
                        let mut r = CheckReport::new("");
                        let oracle = brute_force_projector(bundle, i, j).expect("valid indices");
                        for s in &perms {
                            let got = coordinate_unchecked(&bundle.tableaux[i], &bundle.tableaux[j], s);
                            let want = oracle.coefficient(s);
                            r.check(BigInt::from(got) == want, || {
                                format!("shape {} p_{}{} at {s}: {got} vs {want}", bundle.shape(), i + 1, j + 1)
                            });
                        }
                        r
                    })
                    .collect();
                results.into_iter().for_each(|r| report.merge(r));
            }
        }
        Level::Sample => {
            let cases: Vec<(usize, usize, usize, Permutation)> = (0..samples)
                .map(|_| {
                    let b = rng.gen_range(0..bundles.len());
                    let m = bundles[b].dim();
                    (b, rng.gen_range(0..m), rng.gen_range(0..m), Permutation::random(n, rng))
                })
                .collect();
            let mut needed: Vec<(usize, usize, usize)> = cases.iter().map(|c| (c.0, c.1, c.2)).collect();
            needed.sort_unstable();
            needed.dedup();
            let oracles: std::collections::HashMap<(usize, usize, usize), AlgebraElement> = needed
                .par_iter()
                .map(|&(b, i, j)| ((b, i, j), brute_force_projector(&bundles[b], i, j).expect("valid")))
                .collect();
            for (b, i, j, s) in cases {
                let bundle = &bundles[b];
                let got = coordinate_unchecked(&bundle.tableaux[i], &bundle.tableaux[j], &s);
                let want = oracles[&(b, i, j)].coefficient(&s);
                report.check(BigInt::from(got) == want, || {
                    format!("shape {} p_{}{} at {s}: {got} vs {want}", bundle.shape(), i + 1, j + 1)
                });
            }
        }
    }
    Ok(report)
}
