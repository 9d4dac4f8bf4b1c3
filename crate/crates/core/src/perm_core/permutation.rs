use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1..n}` stored in one-line image notation.
///
/// Position `k` (1-based) holds the image of symbol `k`, so `[2 1 3]` swaps
/// the symbols 1 and 2. Internally symbols are stored 0-based. The derived
/// ordering is lexicographic on the image sequence.
///
/// Products are read left to right: `a.compose(&b)` applies `a` first and
/// then `b`, which is the right action used for tableaux.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub const MAX_DEGREE: usize = u8::MAX as usize;

    pub fn identity(n: usize) -> Self {
        assert!(n <= Self::MAX_DEGREE, "degree {n} too large");
        Permutation {
            image: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > Self::MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x - 1] = true;
            image.push((x - 1) as u8);
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_zero_based_unchecked(image: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = image.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(k, &v)| k == v as usize)
        });
        Permutation { image }
    }

    /// The transposition of two 1-based symbols.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n || a == b {
            return Err(Error::InvalidPermutation(format!(
                "({a} {b}) is not a transposition in S_{n}"
            )));
        }
        let mut p = Self::identity(n);
        p.image.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based symbol `k`, 1-based.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply0(&self, k: usize) -> usize {
        self.image[k] as usize
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.image
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    /// Apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked variant of [`compose`](Self::compose) for equal degrees.
    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            image: self.image.iter().map(|&x| other.image[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u8; self.degree()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v as usize] = k as u8;
        }
        Permutation { image }
    }

    /// Disjoint cycles, each starting at its smallest symbol, 0-based.
    pub(crate) fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.image[k] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// +1 for even, -1 for odd permutations.
    pub fn parity(&self) -> i32 {
        let n = self.degree();
        let cycles = self.cycles().len();
        if (n - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Lists all n! permutations in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation {
                image: current.clone(),
            });
            if !next_lex(&mut current) {
                break;
            }
        }
        out
    }

    /// Draws a uniformly random permutation of degree `n`.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        use rand::seq::SliceRandom;
        let mut image: Vec<u8> = (0..n as u8).collect();
        image.shuffle(rng);
        Permutation { image }
    }
}

fn next_lex(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, &x) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x as usize + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `[2 1 3]`, `2 1 3`, `[213]` or `213`. The compact digit form is
/// only accepted for degree at most 9.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed)
            .trim();
        let images: Vec<usize> = if inner.contains(|c: char| c.is_whitespace() || c == ',') {
            inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad symbol {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            if inner.len() > 9 {
                return Err(Error::InvalidPermutation(format!(
                    "{s:?}: compact form needs degree <= 9; separate symbols with spaces"
                )));
            }
            inner
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad symbol {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        if images.is_empty() {
            return Err(Error::InvalidPermutation(format!("empty permutation {s:?}")));
        }
        Permutation::from_images(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = p("[231]");
        let e = Permutation::identity(3);
        assert_eq!(e.compose(&a).unwrap(), a);
        assert_eq!(a.compose(&e).unwrap(), a);
    }

    #[test]
    fn transposition_is_involution() {
        assert_eq!(p("[213]").compose(&p("[213]")).unwrap(), p("[123]"));
    }

    #[test]
    fn left_factor_acts_first() {
        // [132] then [213]: 1->1->2, 2->3->3, 3->2->1
        assert_eq!(p("[132]").compose(&p("[213]")).unwrap(), p("[231]"));
    }

    #[test]
    fn mismatched_degrees_are_rejected() {
        let err = p("[21]").compose(&p("[123]")).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn inverses() {
        assert_eq!(p("[123]").inverse(), p("[123]"));
        assert_eq!(p("[213]").inverse(), p("[213]"));
        assert_eq!(p("[231]").inverse(), p("[312]"));
        assert!(p("[231]").compose(&p("[312]")).unwrap().is_identity());
    }

    #[test]
    fn parities() {
        assert_eq!(Permutation::identity(4).parity(), 1);
        assert_eq!(Permutation::transposition(4, 1, 3).unwrap().parity(), -1);
        assert_eq!(p("[231]").parity(), 1);
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(p("213"), p("[2 1 3]"));
        assert_eq!(p(" [ 2 1 3 ] "), p("2 1 3"));
        let big: Permutation = "[2 1 3 4 5 6 7 8 9 10]".parse().unwrap();
        assert_eq!(big.degree(), 10);
        assert!("12345678910".parse::<Permutation>().is_err());
        assert!("[113]".parse::<Permutation>().is_err());
        assert!("[]".parse::<Permutation>().is_err());
        assert!("[1 x]".parse::<Permutation>().is_err());
        assert_eq!(p("[2 1 3]").to_string(), "[2 1 3]");
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(1).len(), 1);
    }
}
