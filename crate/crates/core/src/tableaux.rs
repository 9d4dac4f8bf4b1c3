//! Partitions, standard Young tableaux in reading-sequence order, the
//! intertwining permutations between tableaux of one shape, and the row and
//! column subgroups with their (anti)symmetrizers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm_core::{AlgebraElement, CycleType, Permutation};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.iter().sum::<usize>() > Permutation::MAX_DEGREE {
            return Err(Error::InvalidPartition(format!("{parts:?} is too large")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let cols = (0..self.parts[0])
            .map(|c| self.parts.iter().take_while(|&&r| r > c).count())
            .collect();
        Partition { parts: cols }
    }

    /// Parts joined with dashes, for file names.
    pub fn dashed(&self) -> String {
        self.to_string().replace(',', "-")
    }

    pub fn as_cycle_type(&self) -> CycleType {
        CycleType::new(self.parts.clone()).expect("partition is a valid cycle type")
    }
}

impl From<&CycleType> for Partition {
    fn from(ct: &CycleType) -> Self {
        Partition {
            parts: ct.lengths().to_vec(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1,...,1)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of standard tableaux of `shape`, by the hook length formula.
pub fn dimension(shape: &Partition) -> usize {
    let conj = shape.conjugate();
    let mut hooks = BigInt::one();
    for (r, &len) in shape.parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = conj.parts[c] - r - 1;
            hooks *= arm + leg + 1;
        }
    }
    let m = crate::perm_core::factorial(shape.size()) / hooks;
    usize::try_from(m).expect("dimension fits in usize")
}

/// Cell positions of every symbol, 0-based `(row, col)`, indexed by 0-based
/// symbol.
fn positions(rows: &[Vec<usize>], n: usize) -> Vec<(usize, usize)> {
    let mut pos = vec![(usize::MAX, usize::MAX); n];
    for (r, row) in rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            pos[x - 1] = (r, c);
        }
    }
    pos
}

fn check_filling(shape: &Partition, rows: &[Vec<usize>]) -> Result<()> {
    let n = shape.size();
    let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
    if lens != shape.parts {
        return Err(Error::InvalidTableau(format!("row lengths {lens:?} do not match {shape}")));
    }
    let mut seen = vec![false; n];
    for &x in rows.iter().flatten() {
        if x == 0 || x > n || seen[x - 1] {
            return Err(Error::InvalidTableau(format!("{rows:?} is not a filling with 1..{n}")));
        }
        seen[x - 1] = true;
    }
    Ok(())
}

fn rows_to_string(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("/")
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split('/')
        .map(|row| {
            row.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidTableau(format!("bad symbol {t:?} in {s:?}")))
                })
                .collect()
        })
        .collect()
}

/// A filling of a Young frame with `1..n`, rows and columns increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        check_filling(&shape, &rows)?;
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        if !rows_ok || !cols_ok {
            return Err(Error::InvalidTableau(format!(
                "{} is not standard",
                rows_to_string(&rows)
            )));
        }
        let pos = positions(&rows, shape.size());
        Ok(StandardTableau { shape, rows, pos })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        columns_of(&self.rows)
    }

    /// Rows read left to right, top to bottom.
    pub fn reading_sequence(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// 0-based row of a 1-based symbol.
    pub fn row_of(&self, symbol: usize) -> usize {
        self.pos[symbol - 1].0
    }

    /// 0-based `(row, col)` of a 1-based symbol.
    pub fn position(&self, symbol: usize) -> (usize, usize) {
        self.pos[symbol - 1]
    }

    /// Right action `T -> T s`: every symbol `x` is replaced by `s(x)`.
    pub fn act(&self, s: &Permutation) -> Result<TableauFilling> {
        if s.degree() != self.shape.size() {
            return Err(Error::SizeMismatch {
                expected: self.shape.size(),
                found: s.degree(),
            });
        }
        Ok(TableauFilling {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| s.apply(x)).collect())
                .collect(),
        })
    }

    pub fn row_subgroup(&self) -> Vec<Permutation> {
        block_subgroup(self.shape.size(), &self.rows)
    }

    pub fn column_subgroup(&self) -> Vec<Permutation> {
        block_subgroup(self.shape.size(), &self.columns())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rows_to_string(&self.rows))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({self})")
    }
}

/// Parses the `"1 2/3"` form.
impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::new(parse_rows(s)?)
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A filling of a Young frame with `1..n` in arbitrary order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TableauFilling {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl TableauFilling {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lens)?;
        check_filling(&shape, &rows)?;
        Ok(TableauFilling { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        columns_of(&self.rows)
    }

    pub fn reading_sequence(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        StandardTableau::new(self.rows.clone()).is_ok()
    }
}

impl fmt::Display for TableauFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rows_to_string(&self.rows))
    }
}

fn columns_of(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..rows[0].len())
        .map(|c| rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
        .collect()
}

/// All permutations that map every block onto itself.
fn block_subgroup(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let arrangements = Permutation::all(block.len());
        let mut next = Vec::with_capacity(group.len() * arrangements.len());
        for g in &group {
            for a in &arrangements {
                let mut image = g.raw().to_vec();
                for (k, &x) in block.iter().enumerate() {
                    image[x - 1] = (block[a.apply0(k)] - 1) as u8;
                }
                next.push(Permutation::from_zero_based_unchecked(image));
            }
        }
        group = next;
    }
    group.sort();
    group
}

/// Standard tableaux of `shape`, ascending by reading sequence compared at
/// the first differing symbol.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn place(
        next: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if next > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                place(next + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut raw = Vec::new();
    let mut rows = vec![Vec::new(); shape.num_rows()];
    place(1, shape.size(), &shape.parts, &mut rows, &mut raw);
    let mut out: Vec<StandardTableau> = raw
        .into_iter()
        .map(|rows| StandardTableau::new(rows).expect("placement yields standard tableaux"))
        .collect();
    out.sort_by_key(StandardTableau::reading_sequence);
    out
}

/// The permutation `sigma` with `T_i s = T_j` under the right action, i.e.
/// `sigma` sends the symbol in each cell of `from` to the symbol in the same
/// cell of `to`.
pub fn intertwiner(from: &StandardTableau, to: &StandardTableau) -> Result<Permutation> {
    if from.shape != to.shape {
        return Err(Error::ShapeMismatch {
            left: from.shape.to_string(),
            right: to.shape.to_string(),
        });
    }
    let n = from.shape.size();
    let mut image = vec![0u8; n];
    for (a, b) in from.reading_sequence().into_iter().zip(to.reading_sequence()) {
        image[a - 1] = (b - 1) as u8;
    }
    Ok(Permutation::from_zero_based_unchecked(image))
}

/// Sum of the row subgroup, every coefficient +1.
pub fn row_symmetrizer(t: &StandardTableau) -> AlgebraElement {
    let n = t.shape.size();
    AlgebraElement::from_terms(n, t.row_subgroup().into_iter().map(|p| (p, BigInt::one())))
        .expect("subgroup elements share the degree")
}

/// Signed sum of the column subgroup.
pub fn column_antisymmetrizer(t: &StandardTableau) -> AlgebraElement {
    let n = t.shape.size();
    AlgebraElement::from_terms(
        n,
        t.column_subgroup().into_iter().map(|p| {
            let sign = BigInt::from(p.parity());
            (p, sign)
        }),
    )
    .expect("subgroup elements share the degree")
}
