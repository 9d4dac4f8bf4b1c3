//! Central units and integer character tables.
//!
//! For a shape with projectors `p_ij` the element
//!
//! ```text
//! V = sum_ij (g'^{-1})_ij p_ij
//! ```
//!
//! is `f` times the central idempotent of the block, so `V V = f V`, and its
//! coefficient on every permutation of class `rho` is the character value.
//! A Murnaghan-Nakayama implementation that shares no code with the
//! projectors serves as the oracle.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm_core::{factorial, AlgebraElement, CycleType, Permutation};
use crate::projectors::{expand_all, IrrepBundle};
use crate::report::CheckReport;
use crate::representations::rep_matrix;
use crate::tableaux::{dimension, partitions, Partition};

/// `V = sum_ij (g'^{-1})_ij p_ij` with unnormalized projectors.
pub fn scaled_unit(bundle: &IrrepBundle, limits: &Limits) -> Result<AlgebraElement> {
    Limits::guard("scaled unit", bundle.degree(), limits.expansion)?;
    let p = expand_all(bundle, limits)?;
    let ginv = bundle.g_reduced_inverse();
    let mut v = AlgebraElement::zero(bundle.degree());
    for (i, row) in p.iter().enumerate() {
        for (j, pij) in row.iter().enumerate() {
            let c = ginv.get(i, j);
            if !c.is_zero() {
                v = v.add(&pij.scale(c))?;
            }
        }
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassInfo {
    pub cycle_type: CycleType,
    pub size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub partition: Partition,
    pub chi: Vec<i64>,
}

/// Rows follow the partition order of [`partitions`]; columns are classes
/// ordered by cycle type with the identity class first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<ClassInfo>,
    pub rows: Vec<CharacterRow>,
}

impl CharacterTable {
    pub fn value(&self, shape: &Partition, class: &CycleType) -> Option<i64> {
        let r = self.rows.iter().find(|r| &r.partition == shape)?;
        let c = self.classes.iter().position(|c| &c.cycle_type == class)?;
        Some(r.chi[c])
    }

    /// Aligned plain-text rendering.
    pub fn render_text(&self) -> String {
        let mut header = vec![String::new()];
        header.extend(self.classes.iter().map(|c| format!("({})", c.cycle_type)));
        let mut sizes = vec!["size".to_string()];
        sizes.extend(self.classes.iter().map(|c| c.size.to_string()));
        let mut lines = vec![header, sizes];
        for r in &self.rows {
            let mut line = vec![format!("({})", r.partition)];
            line.extend(r.chi.iter().map(|v| v.to_string()));
            lines.push(line);
        }
        let cols = lines[0].len();
        let widths: Vec<usize> = (0..cols)
            .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for l in &lines {
            let cells: Vec<String> = l
                .iter()
                .enumerate()
                .map(|(c, s)| {
                    if c == 0 {
                        format!("{s:<w$}", w = widths[c])
                    } else {
                        format!("{s:>w$}", w = widths[c])
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Invariant(format!("value {v} does not fit in 64 bits")))
}

fn class_infos(n: usize) -> Result<Vec<ClassInfo>> {
    let mut classes: Vec<CycleType> = partitions(n).iter().map(Partition::as_cycle_type).collect();
    classes.sort();
    classes
        .into_iter()
        .map(|ct| {
            let size = ct
                .class_size()
                .to_u64()
                .ok_or_else(|| Error::Invariant("class size overflow".into()))?;
            Ok(ClassInfo { cycle_type: ct, size })
        })
        .collect()
}

/// Character table read off the scaled units.
pub fn character_table(n: usize, limits: &Limits) -> Result<CharacterTable> {
    Limits::guard("character table", n, limits.expansion)?;
    let classes = class_infos(n)?;
    let bundles = IrrepBundle::all(n)?;
    let rows = bundles
        .par_iter()
        .map(|b| {
            let v = scaled_unit(b, limits)?;
            let chi = classes
                .iter()
                .map(|c| to_i64(&v.coefficient(&c.cycle_type.representative())))
                .collect::<Result<Vec<_>>>()?;
            Ok(CharacterRow {
                partition: b.shape().clone(),
                chi,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { n, classes, rows })
}

/// Character table from the Murnaghan-Nakayama rule alone.
pub fn mn_character_table(n: usize) -> Result<CharacterTable> {
    let classes = class_infos(n)?;
    let mut memo = HashMap::new();
    let rows = partitions(n)
        .into_iter()
        .map(|shape| {
            let chi = classes
                .iter()
                .map(|c| to_i64(&mn_memo(&beta_set(shape.parts()), c.cycle_type.lengths(), &mut memo)))
                .collect::<Result<Vec<_>>>()?;
            Ok(CharacterRow { partition: shape, chi })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { n, classes, rows })
}

/// Murnaghan-Nakayama value of the character of `shape` on `class`.
pub fn mn_character(shape: &Partition, class: &CycleType) -> Result<BigInt> {
    if shape.size() != class.degree() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: class.degree(),
        });
    }
    Ok(mn_memo(&beta_set(shape.parts()), class.lengths(), &mut HashMap::new()))
}

/// First-column hook lengths: part `k` (0-based) of `L` parts maps to
/// `part + (L - 1 - k)`. Strictly decreasing.
fn beta_set(parts: &[usize]) -> Vec<usize> {
    let len = parts.len();
    parts.iter().enumerate().map(|(k, &p)| p + (len - 1 - k)).collect()
}

/// Removing a border strip of length `r` moves one bead `b -> b - r` to an
/// empty position; the sign is `(-1)^(beads strictly between)`.
fn mn_memo(beta: &[usize], lengths: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>) -> BigInt {
    let Some((&r, rest)) = lengths.split_first() else {
        return BigInt::one();
    };
    let key = (beta.to_vec(), lengths.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (k, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next: Vec<usize> = beta.to_vec();
        next[k] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sub = mn_memo(&next, rest, memo);
        if between % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Central-unit identities with `e = V / f` checked in integer form:
/// `V p = f p` inside the block and `0` outside, on both sides; `V V = f V`;
/// `V` central; `V_a V_b = 0` for distinct shapes; and
/// `sum_shapes m V = n! * identity`.
pub fn verify_units(n: usize, limits: &Limits) -> Result<CheckReport> {
    Limits::guard("unit suite", n, limits.brute_force_full)?;
    let bundles = IrrepBundle::all(n)?;
    let expanded: Vec<Vec<Vec<AlgebraElement>>> = bundles
        .iter()
        .map(|b| expand_all(b, &Limits::unbounded()))
        .collect::<Result<_>>()?;
    let units: Vec<AlgebraElement> = bundles
        .iter()
        .map(|b| scaled_unit(b, &Limits::unbounded()))
        .collect::<Result<_>>()?;

    let mut report = CheckReport::new("units");
    for (a, ba) in bundles.iter().enumerate() {
        let v = &units[a];
        let f = ba.scale();
        report.check(v.multiply(v)? == v.scale(f), || format!("V[{}]^2 != f V", ba.shape()));
        report.check(v.is_central(), || format!("V[{}] is not central", ba.shape()));
        for (b, bb) in bundles.iter().enumerate() {
            let factor = if a == b { f.clone() } else { BigInt::zero() };
            for (k, row) in expanded[b].iter().enumerate() {
                for (l, p) in row.iter().enumerate() {
                    let want = p.scale(&factor);
                    report.check(v.multiply(p)? == want, || {
                        format!("V[{}] p[{}]_{}{} wrong", ba.shape(), bb.shape(), k + 1, l + 1)
                    });
                    report.check(p.multiply(v)? == want, || {
                        format!("p[{}]_{}{} V[{}] wrong", bb.shape(), k + 1, l + 1, ba.shape())
                    });
                }
            }
            if a != b {
                report.check(v.multiply(&units[b])?.is_zero(), || {
                    format!("V[{}] V[{}] != 0", ba.shape(), bb.shape())
                });
            }
        }
    }
    let mut sum = AlgebraElement::zero(n);
    for (b, v) in bundles.iter().zip(&units) {
        sum = sum.add(&v.scale(&BigInt::from(b.dim())))?;
    }
    report.check(sum == AlgebraElement::identity(n).scale(&factorial(n)), || {
        "sum of idempotents is not the identity".into()
    });
    Ok(report)
}

/// Character-table checks: agreement with the Murnaghan-Nakayama oracle,
/// class constancy of the units, identity column equal to dimensions, row
/// and column orthogonality, and `trace(x'(b) g')` equal to the table entry
/// for every permutation when `n <= limits.brute_force_full`.
pub fn verify_characters(n: usize, limits: &Limits) -> Result<CheckReport> {
    let table = character_table(n, limits)?;
    let oracle = mn_character_table(n)?;
    let mut report = CheckReport::new("characters");
    for (r, o) in table.rows.iter().zip(&oracle.rows) {
        for (c, class) in table.classes.iter().enumerate() {
            report.check(r.chi[c] == o.chi[c], || {
                format!("chi[{}]({}) = {} but MN gives {}", r.partition, class.cycle_type, r.chi[c], o.chi[c])
            });
        }
    }
    report.check(table.rows.len() == oracle.rows.len(), || "row count differs".into());

    let bundles = IrrepBundle::all(n)?;
    // class constancy of every unit
    for b in &bundles {
        let v = scaled_unit(b, limits)?;
        let row = table.rows.iter().find(|r| &r.partition == b.shape()).expect("row");
        for p in Permutation::all(n) {
            let c = table
                .classes
                .iter()
                .position(|c| c.cycle_type == CycleType::of(&p))
                .expect("class");
            report.check(v.coefficient(&p) == BigInt::from(row.chi[c]), || {
                format!("V[{}] coefficient at {p} is not the class value", b.shape())
            });
        }
    }

    let nfact = factorial(n);
    for r in &table.rows {
        report.check(r.chi[0] as usize == dimension(&r.partition), || {
            format!("chi[{}](e) is not the dimension", r.partition)
        });
    }
    for a in &table.rows {
        for b in &table.rows {
            let dot: BigInt = table
                .classes
                .iter()
                .enumerate()
                .map(|(c, cl)| BigInt::from(cl.size) * a.chi[c] * b.chi[c])
                .sum();
            let want = if a.partition == b.partition { nfact.clone() } else { BigInt::zero() };
            report.check(dot == want, || format!("rows {} and {} not orthogonal", a.partition, b.partition));
        }
    }
    for (c1, cl1) in table.classes.iter().enumerate() {
        for (c2, _) in table.classes.iter().enumerate() {
            let dot: i64 = table.rows.iter().map(|r| r.chi[c1] * r.chi[c2]).sum();
            let want = if c1 == c2 { &nfact / cl1.size } else { BigInt::zero() };
            report.check(BigInt::from(dot) == want, || format!("columns {c1} and {c2} not orthogonal"));
        }
    }

    let perms: Vec<Permutation> = if n <= limits.brute_force_full {
        Permutation::all(n)
    } else {
        table.classes.iter().map(|c| c.cycle_type.representative()).collect()
    };
    for b in &bundles {
        let row = table.rows.iter().find(|r| &r.partition == b.shape()).expect("row");
        let traces: Vec<(Permutation, BigInt)> = perms
            .par_iter()
            .map(|p| (p.clone(), rep_matrix(b, p).expect("degree").conventional(b).trace()))
            .collect();
        for (p, t) in traces {
            let ct = CycleType::of(&p);
            let c = table.classes.iter().position(|c| c.cycle_type == ct).expect("class");
            report.check(t == BigInt::from(row.chi[c]), || {
                format!("trace of M[{}]({p}) = {t} but chi = {}", b.shape(), row.chi[c])
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(s: &str) -> IrrepBundle {
        IrrepBundle::new(&s.parse().unwrap()).unwrap()
    }

    fn el(terms: &[(&str, i64)]) -> AlgebraElement {
        AlgebraElement::from_terms(3, terms.iter().map(|(s, c)| (s.parse().unwrap(), BigInt::from(*c)))).unwrap()
    }

    fn ct(s: &str) -> CycleType {
        s.parse().unwrap()
    }

    #[test]
    fn s3_scaled_units() {
        let limits = Limits::default();
        assert_eq!(
            scaled_unit(&bundle("2,1"), &limits).unwrap(),
            el(&[("[123]", 2), ("[312]", -1), ("[231]", -1)])
        );
        let all: Vec<(&str, i64)> = ["[123]", "[132]", "[213]", "[231]", "[312]", "[321]"]
            .into_iter()
            .map(|s| (s, 1))
            .collect();
        assert_eq!(scaled_unit(&bundle("3"), &limits).unwrap(), el(&all));
        assert_eq!(
            scaled_unit(&bundle("1,1,1"), &limits).unwrap(),
            el(&[("[123]", 1), ("[132]", -1), ("[312]", 1), ("[213]", -1), ("[231]", 1), ("[321]", -1)])
        );
    }

    #[test]
    fn s3_table() {
        let t = character_table(3, &Limits::default()).unwrap();
        let chi: Vec<Vec<i64>> = t.rows.iter().map(|r| r.chi.clone()).collect();
        assert_eq!(chi, vec![vec![1, 1, 1], vec![2, 0, -1], vec![1, -1, 1]]);
        let sizes: Vec<u64> = t.classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(t.value(&"2,1".parse().unwrap(), &ct("3")), Some(-1));
    }

    #[test]
    fn mn_values() {
        assert_eq!(mn_character(&"5".parse().unwrap(), &ct("3,2")).unwrap(), BigInt::one());
        assert_eq!(mn_character(&"2,1".parse().unwrap(), &ct("3")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&"3,2".parse().unwrap(), &ct("1,1,1,1,1")).unwrap(), BigInt::from(5));
        assert!(mn_character(&"3,2".parse().unwrap(), &ct("3")).is_err());
    }

    #[test]
    fn mn_identity_column_is_tableau_count() {
        for n in 1..=8 {
            let t = mn_character_table(n).unwrap();
            for r in &t.rows {
                assert_eq!(r.chi[0] as usize, dimension(&r.partition));
            }
        }
    }

    #[test]
    fn tables_agree_up_to_five() {
        for n in 1..=5 {
            assert_eq!(character_table(n, &Limits::default()).unwrap(), mn_character_table(n).unwrap());
        }
    }

    #[test]
    fn units_and_characters_suites() {
        for n in 1..=4 {
            let r = verify_units(n, &Limits::default()).unwrap();
            assert!(r.passed(), "{r:?}");
            let r = verify_characters(n, &Limits::default()).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn text_rendering() {
        let t = character_table(3, &Limits::default()).unwrap();
        let text = t.render_text();
        assert_eq!(
            text,
            "         (1,1,1)  (2,1)  (3)\nsize           1      3    2\n(3)            1      1    1\n(2,1)          2      0   -1\n(1,1,1)        1     -1    1\n"
        );
    }

    #[test]
    fn json_schema() {
        let t = character_table(2, &Limits::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"n":2,"classes":[{"cycleType":"1,1","size":1},{"cycleType":"2","size":1}],"rows":[{"partition":"2","chi":[1,1]},{"partition":"1,1","chi":[1,-1]}]}"#
        );
    }
}
