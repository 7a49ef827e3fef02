//! The degree lattice `ℕ^k` and its extension by `∞`.
//!
//! Every value carries its rank and every binary operation checks it. The
//! infinite coordinate is a sentinel: extended degrees support comparison and
//! join, never arithmetic.

use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("degree underflow: {subtrahend} is not below {minuend}")]
    Underflow { minuend: Degree, subtrahend: Degree },
}

fn check_rank(left: usize, right: usize) -> Result<(), DegreeError> {
    if left == right {
        Ok(())
    } else {
        Err(DegreeError::RankMismatch { left, right })
    }
}

/// An element of `ℕ^k`.
///
/// The derived `Ord` is lexicographic and only used for deterministic
/// sorting; the lattice order is [`Degree::leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(Vec<u64>);

impl Degree {
    pub fn new(coords: Vec<u64>) -> Self {
        Degree(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Degree(vec![0; rank])
    }

    /// The generator `e_i`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Degree(coords)
    }

    /// `(c, …, c)`.
    pub fn splat(rank: usize, c: u64) -> Self {
        Degree(vec![c; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Sum of coordinates.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn leq(&self, other: &Degree) -> Result<bool, DegreeError> {
        check_rank(self.rank(), other.rank())?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    pub fn join(&self, other: &Degree) -> Result<Degree, DegreeError> {
        check_rank(self.rank(), other.rank())?;
        Ok(Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect()))
    }

    pub fn meet(&self, other: &Degree) -> Result<Degree, DegreeError> {
        check_rank(self.rank(), other.rank())?;
        Ok(Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect()))
    }

    pub fn add(&self, other: &Degree) -> Result<Degree, DegreeError> {
        check_rank(self.rank(), other.rank())?;
        Ok(Degree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// `self − other`, defined only when `other ≤ self`.
    pub fn sub(&self, other: &Degree) -> Result<Degree, DegreeError> {
        if !other.leq(self)? {
            return Err(DegreeError::Underflow {
                minuend: self.clone(),
                subtrahend: other.clone(),
            });
        }
        Ok(Degree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, t: u64) -> Degree {
        Degree(self.0.iter().map(|c| c * t).collect())
    }

    /// Signed difference `self − other` in `ℤ^k`.
    pub fn diff(&self, other: &Degree) -> Result<Vec<i64>, DegreeError> {
        check_rank(self.rank(), other.rank())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| *a as i64 - *b as i64).collect())
    }

    /// All degrees `m ≤ self`, ordered by total degree and then lexicographically.
    pub fn down_set(&self) -> Vec<Degree> {
        let mut out = vec![Vec::with_capacity(self.rank())];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound).map(move |c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        let mut degrees: Vec<Degree> = out.into_iter().map(Degree).collect();
        degrees.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
        degrees
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u64>> for Degree {
    fn from(coords: Vec<u64>) -> Self {
        Degree(coords)
    }
}

/// One coordinate of an extended degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtCoord {
    Fin(u64),
    Inf,
}

impl ExtCoord {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtCoord::Fin(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtCoord::Fin(c) => Some(c),
            ExtCoord::Inf => None,
        }
    }

    fn leq(self, other: ExtCoord) -> bool {
        match (self, other) {
            (_, ExtCoord::Inf) => true,
            (ExtCoord::Inf, ExtCoord::Fin(_)) => false,
            (ExtCoord::Fin(a), ExtCoord::Fin(b)) => a <= b,
        }
    }
}

impl fmt::Display for ExtCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtCoord::Fin(c) => write!(f, "{c}"),
            ExtCoord::Inf => write!(f, "inf"),
        }
    }
}

/// An element of `(ℕ ∪ {∞})^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtDegree(Vec<ExtCoord>);

impl ExtDegree {
    pub fn new(coords: Vec<ExtCoord>) -> Self {
        ExtDegree(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[ExtCoord] {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// The finite degree, when every coordinate is finite.
    pub fn to_finite(&self) -> Option<Degree> {
        self.0.iter().map(|c| c.finite()).collect::<Option<Vec<_>>>().map(Degree)
    }

    pub fn leq(&self, other: &ExtDegree) -> Result<bool, DegreeError> {
        check_rank(self.rank(), other.rank())?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a.leq(*b)))
    }

    pub fn join(&self, other: &ExtDegree) -> Result<ExtDegree, DegreeError> {
        check_rank(self.rank(), other.rank())?;
        Ok(ExtDegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a.leq(*b) { *b } else { *a })
                .collect(),
        ))
    }

    /// `m ≤ self` for a finite `m`.
    pub fn contains(&self, m: &Degree) -> Result<bool, DegreeError> {
        check_rank(m.rank(), self.rank())?;
        Ok(m.0.iter().zip(&self.0).all(|(a, b)| ExtCoord::Fin(*a).leq(*b)))
    }

    /// Coordinatewise minimum with a finite degree; always finite.
    pub fn meet_finite(&self, m: &Degree) -> Result<Degree, DegreeError> {
        check_rank(m.rank(), self.rank())?;
        Ok(Degree(
            m.0.iter()
                .zip(&self.0)
                .map(|(a, b)| match b {
                    ExtCoord::Fin(b) => *a.min(b),
                    ExtCoord::Inf => *a,
                })
                .collect(),
        ))
    }
}

impl From<Degree> for ExtDegree {
    fn from(d: Degree) -> Self {
        ExtDegree(d.0.into_iter().map(ExtCoord::Fin).collect())
    }
}

impl From<&Degree> for ExtDegree {
    fn from(d: &Degree) -> Self {
        ExtDegree(d.0.iter().copied().map(ExtCoord::Fin).collect())
    }
}

impl fmt::Display for ExtDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for ExtDegree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            match c {
                ExtCoord::Fin(v) => seq.serialize_element(v)?,
                ExtCoord::Inf => seq.serialize_element("inf")?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ExtDegree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Fin(u64),
            Word(String),
        }

        struct ExtVisitor;

        impl<'de> Visitor<'de> for ExtVisitor {
            type Value = ExtDegree;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of non-negative integers or \"inf\"")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<ExtDegree, A::Error> {
                let mut coords = Vec::new();
                while let Some(raw) = seq.next_element::<Raw>()? {
                    coords.push(match raw {
                        Raw::Fin(v) => ExtCoord::Fin(v),
                        Raw::Word(w) if w == "inf" => ExtCoord::Inf,
                        Raw::Word(w) => {
                            return Err(de::Error::invalid_value(de::Unexpected::Str(&w), &self))
                        }
                    });
                }
                Ok(ExtDegree(coords))
            }
        }

        deserializer.deserialize_seq(ExtVisitor)
    }
}
