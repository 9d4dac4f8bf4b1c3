use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AlgebraElement, Permutation};
use crate::error::{Error, Result};

/// Multiset of cycle lengths of a permutation, sorted descending.
///
/// The derived order compares the length sequences lexicographically, which
/// puts the identity class `(1,1,...,1)` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() || lengths.contains(&0) {
            return Err(Error::InvalidPartition(format!("{lengths:?} is not a cycle type")));
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { lengths })
    }

    pub fn of(p: &Permutation) -> Self {
        let mut lengths: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn degree(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn num_cycles(&self) -> usize {
        self.lengths.len()
    }

    /// Number of permutations with this cycle type: n! / prod(l^{m_l} m_l!).
    pub fn class_size(&self) -> BigInt {
        let mut denom = BigInt::one();
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &l in &self.lengths {
            *mult.entry(l).or_default() += 1;
            denom *= l;
        }
        for (_, m) in mult {
            denom *= factorial(m);
        }
        factorial(self.degree()) / denom
    }

    /// A representative permutation: consecutive symbols form the cycles.
    pub fn representative(&self) -> Permutation {
        let n = self.degree();
        let mut image = vec![0u8; n];
        let mut start = 0;
        for &l in &self.lengths {
            for k in 0..l {
                image[start + k] = (start + (k + 1) % l) as u8;
            }
            start += l;
        }
        Permutation::from_zero_based_unchecked(image)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lengths = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad cycle type {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(lengths)
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycleType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Class sums `C_rho` of S_n, identity class first.
pub fn conjugacy_classes(n: usize) -> Vec<(CycleType, AlgebraElement)> {
    let mut buckets: BTreeMap<CycleType, AlgebraElement> = BTreeMap::new();
    for p in Permutation::all(n) {
        let ct = CycleType::of(&p);
        buckets
            .entry(ct)
            .or_insert_with(|| AlgebraElement::zero(n))
            .add_term(p, BigInt::one());
    }
    buckets.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(CycleType::of(&Permutation::identity(3)).lengths(), &[1, 1, 1]);
        assert_eq!(CycleType::of(&p("[213]")).lengths(), &[2, 1]);
        assert_eq!(CycleType::of(&p("[231]")).lengths(), &[3]);
    }

    #[test]
    fn parity_from_cycle_count() {
        for q in Permutation::all(5) {
            let ct = CycleType::of(&q);
            let expected = if (5 - ct.num_cycles()).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(q.parity(), expected);
        }
    }

    #[test]
    fn s3_classes() {
        let classes = conjugacy_classes(3);
        assert_eq!(classes.len(), 3);
        assert_eq!(classes[0].0.lengths(), &[1, 1, 1]);
        assert_eq!(classes[0].1.len(), 1);
        let transpositions: Vec<Permutation> = classes[1].1.terms().map(|(q, _)| q.clone()).collect();
        assert_eq!(transpositions, vec![p("[132]"), p("[213]"), p("[321]")]);
        assert_eq!(classes[2].1.len(), 2);
    }

    #[test]
    fn trivial_group() {
        let classes = conjugacy_classes(1);
        assert_eq!(classes.len(), 1);
        assert!(classes[0].1.coefficient(&Permutation::identity(1)).is_one());
    }

    #[test]
    fn s5_class_sizes_by_enumeration() {
        let mut sizes: Vec<usize> = conjugacy_classes(5).iter().map(|(_, c)| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 10, 15, 20, 20, 24, 30]);
        for (ct, c) in conjugacy_classes(5) {
            assert_eq!(ct.class_size(), BigInt::from(c.len()));
        }
    }

    #[test]
    fn representative_has_its_type() {
        for lengths in [vec![3, 2], vec![1, 1, 1], vec![4], vec![2, 2, 1]] {
            let ct = CycleType::new(lengths).unwrap();
            assert_eq!(CycleType::of(&ct.representative()), ct);
        }
    }

    #[test]
    fn display_roundtrip() {
        let ct: CycleType = "2,2,1".parse().unwrap();
        assert_eq!(ct.to_string(), "2,2,1");
        assert!("2,0".parse::<CycleType>().is_err());
    }
}
