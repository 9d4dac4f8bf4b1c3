use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

/// Sparse element of the integer group algebra of S_n.
///
/// Terms are kept sorted by permutation and zero coefficients are never
/// stored, so structural equality is algebraic equality.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl AlgebraElement {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::from_perm(Permutation::identity(degree))
    }

    pub fn from_perm(p: Permutation) -> Self {
        let mut out = Self::zero(p.degree());
        out.terms.insert(p, BigInt::one());
        out
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, BigInt)>,
    {
        let mut out = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of permutations with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &Permutation) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, p: Permutation, c: BigInt) {
        debug_assert_eq!(p.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> AlgebraElement {
        if k.is_zero() {
            return Self::zero(self.degree);
        }
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    /// Convolution product: the coefficient of `s` in `XY` is the sum of
    /// `X[a] * Y[b]` over all factorizations `s = a.compose(b)`.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_degree(other)?;
        let mut acc: HashMap<Permutation, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a.then(b)).or_default() += x * y;
            }
        }
        Ok(AlgebraElement {
            degree: self.degree,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Applies `s -> s^{-1}` termwise (the anti-involution of the algebra).
    pub fn involution(&self) -> AlgebraElement {
        AlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.inverse(), c.clone())).collect(),
        }
    }

    /// True when `self` commutes with every permutation of its degree.
    pub fn is_central(&self) -> bool {
        Permutation::all(self.degree).into_iter().all(|s| {
            let s = AlgebraElement::from_perm(s);
            s.multiply(self).ok() == self.multiply(&s).ok()
        })
    }

    fn check_degree(&self, other: &AlgebraElement) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    perm: Permutation,
    coeff: String,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(p, c)| TermJson {
            perm: p.clone(),
            coeff: c.to_string(),
        }))
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<TermJson>::deserialize(deserializer)?;
        let degree = raw
            .first()
            .map(|t| t.perm.degree())
            .ok_or_else(|| D::Error::custom("cannot infer degree of an empty element"))?;
        let terms = raw
            .into_iter()
            .map(|t| {
                t.coeff
                    .parse::<BigInt>()
                    .map(|c| (t.perm, c))
                    .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        AlgebraElement::from_terms(degree, terms).map_err(D::Error::custom)
    }
}
