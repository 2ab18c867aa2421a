//! Formal rational linear combinations of same-shape diagrams, with the
//! product extending diagram composition by the `p^k` loop rule.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{compose, enumerate_diagrams, Diagram};
use crate::rational::{self, Rational};

/// The value `p >= 1` substituted for each closed loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopValue(u32);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("loop value must be a positive integer")]
    ZeroLoopValue,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("diagram {diagram} does not have shape {top}>{bottom}")]
    WrongShape {
        diagram: Diagram,
        top: usize,
        bottom: usize,
    },
}

impl LoopValue {
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if p == 0 {
            Err(AlgebraError::ZeroLoopValue)
        } else {
            Ok(LoopValue(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for LoopValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of the hom-space spanned by `top > bottom` diagrams. Zero
/// coefficients are never stored, so the zero element is the empty map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    top: usize,
    bottom: usize,
    terms: BTreeMap<Diagram, Rational>,
}

impl AlgebraElement {
    pub fn zero(top: usize, bottom: usize) -> Self {
        AlgebraElement {
            top,
            bottom,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(diagram: Diagram) -> Self {
        Self::term(rational::int(1), diagram)
    }

    pub fn term(coeff: Rational, diagram: Diagram) -> Self {
        let mut out = Self::zero(diagram.top_count(), diagram.bottom_count());
        if !coeff.is_zero() {
            out.terms.insert(diagram, coeff);
        }
        out
    }

    /// Sums `(coeff, diagram)` pairs; all diagrams must have the given shape.
    pub fn from_terms(
        top: usize,
        bottom: usize,
        terms: impl IntoIterator<Item = (Rational, Diagram)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(top, bottom);
        for (c, d) in terms {
            if d.top_count() != top || d.bottom_count() != bottom {
                return Err(AlgebraError::WrongShape {
                    diagram: d,
                    top,
                    bottom,
                });
            }
            out.accumulate(d, c);
        }
        Ok(out)
    }

    fn accumulate(&mut self, d: Diagram, c: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.top, self.bottom)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &Diagram) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.shape() != other.shape() {
            return Err(AlgebraError::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.accumulate(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.top, self.bottom);
        }
        AlgebraElement {
            top: self.top,
            bottom: self.bottom,
            terms: self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect(),
        }
    }

    /// Product with `self` drawn on top of `other`: for basis diagrams this
    /// is `p^k` times their composite, extended bilinearly.
    pub fn multiply(&self, other: &Self, p: LoopValue) -> Result<Self, AlgebraError> {
        if self.bottom != other.top {
            return Err(AlgebraError::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zero(self.top, other.bottom);
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let w = compose(da, db).expect("shapes checked above");
                let c = ca * cb * rational::power(p.get(), w.loops);
                out.accumulate(w.diagram, c);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*{}", rational::to_text(c), d)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    diagram: Diagram,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    top: usize,
    bottom: usize,
    terms: Vec<TermJson>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            top: self.top,
            bottom: self.bottom,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermJson {
                    coeff: rational::to_text(c),
                    diagram: d.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let json = ElementJson::deserialize(d)?;
        let terms = json
            .terms
            .into_iter()
            .map(|t| {
                Ok((
                    rational::from_text(&t.coeff).map_err(D::Error::custom)?,
                    t.diagram,
                ))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        AlgebraElement::from_terms(json.top, json.bottom, terms).map_err(D::Error::custom)
    }
}

/// `(2n-1)!!`, the number of `n`-diagrams.
pub fn brauer_dimension(n: usize) -> u128 {
    (1..=n as u128).map(|i| 2 * i - 1).product()
}

/// The `n`-th Catalan number `(2n)! / (n! (n+1)!)`.
pub fn tl_dimension(n: usize) -> u128 {
    // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step.
    (0..n as u128).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// All `n`-diagrams as basis elements of `B_n`.
pub fn brauer_basis(n: usize) -> Vec<Diagram> {
    enumerate_diagrams(n, n)
}
