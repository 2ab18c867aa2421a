//! Terms of the free symmetric self-adjunction on one generator.
//!
//! Objects are powers `F^n a`. The generating arrows are `phi_n: n+2 -> n`,
//! `gamma_n: n -> n+2` and `chi_n: n+2 -> n+2`, closed under `F` (which
//! adds one letter on the left) and composition.

mod axioms;
mod parse;
mod random;
mod rewrite;
mod synth;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{compose_weighted, Diagram, Vertex, WeightedDiagram};

pub use axioms::{
    naturality_universe, verify_axioms, verify_axioms_with, AxiomInstance, AxiomReport, Law,
};
pub use parse::{parse, ParseError};
pub use random::random_term;
pub use rewrite::rewrites;
pub use synth::{permutation_term, synthesize};

/// The object `F^power a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Obj(pub usize);

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Id(Obj),
    Phi(Obj),
    Gamma(Obj),
    Chi(Obj),
    FApp(Box<Term>),
    /// `Comp(g, f)` is `g o f`: first `f`, then `g`.
    Comp(Box<Term>, Box<Term>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot compose `{outer}` ({outer_source} -> {outer_target}) after `{inner}` ({inner_source} -> {inner_target})")]
pub struct TypeError {
    pub outer: String,
    pub outer_source: Obj,
    pub outer_target: Obj,
    pub inner: String,
    pub inner_source: Obj,
    pub inner_target: Obj,
}

/// A term whose source and target have been computed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckedTerm {
    term: Term,
    source: Obj,
    target: Obj,
}

impl CheckedTerm {
    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn source(&self) -> Obj {
        self.source
    }

    pub fn target(&self) -> Obj {
        self.target
    }

    pub fn into_term(self) -> Term {
        self.term
    }

    /// The set of links: a diagram from `source` to `target` with its loop
    /// count.
    pub fn links(&self) -> WeightedDiagram {
        links_of(&self.term)
    }
}

impl Term {
    pub fn id(n: usize) -> Self {
        Term::Id(Obj(n))
    }

    pub fn phi(n: usize) -> Self {
        Term::Phi(Obj(n))
    }

    pub fn gamma(n: usize) -> Self {
        Term::Gamma(Obj(n))
    }

    pub fn chi(n: usize) -> Self {
        Term::Chi(Obj(n))
    }

    pub fn f(t: Term) -> Self {
        Term::FApp(Box::new(t))
    }

    /// `F^k t`.
    pub fn f_pow(k: usize, t: Term) -> Self {
        (0..k).fold(t, |t, _| Term::f(t))
    }

    /// `outer o inner`.
    pub fn comp(outer: Term, inner: Term) -> Self {
        Term::Comp(Box::new(outer), Box::new(inner))
    }

    /// Composes a chain given in application order: `chain([f, g, h])` is
    /// `h o g o f`. Returns `None` for an empty chain.
    pub fn chain(factors: impl IntoIterator<Item = Term>) -> Option<Term> {
        factors
            .into_iter()
            .reduce(|inner, outer| Term::comp(outer, inner))
    }

    pub fn typecheck(&self) -> Result<(Obj, Obj), TypeError> {
        match self {
            Term::Id(n) => Ok((*n, *n)),
            Term::Phi(n) => Ok((Obj(n.0 + 2), *n)),
            Term::Gamma(n) => Ok((*n, Obj(n.0 + 2))),
            Term::Chi(n) => Ok((Obj(n.0 + 2), Obj(n.0 + 2))),
            Term::FApp(t) => {
                let (s, t) = t.typecheck()?;
                Ok((Obj(s.0 + 1), Obj(t.0 + 1)))
            }
            Term::Comp(g, f) => {
                let (fs, ft) = f.typecheck()?;
                let (gs, gt) = g.typecheck()?;
                if ft != gs {
                    return Err(TypeError {
                        outer: g.to_string(),
                        outer_source: gs,
                        outer_target: gt,
                        inner: f.to_string(),
                        inner_source: fs,
                        inner_target: ft,
                    });
                }
                Ok((fs, gt))
            }
        }
    }

    pub fn check(self) -> Result<CheckedTerm, TypeError> {
        let (source, target) = self.typecheck()?;
        Ok(CheckedTerm {
            term: self,
            source,
            target,
        })
    }

    pub fn links(&self) -> Result<WeightedDiagram, TypeError> {
        self.typecheck()?;
        Ok(links_of(self))
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self {
            Term::Id(_) | Term::Phi(_) | Term::Gamma(_) | Term::Chi(_) => 1,
            Term::FApp(t) => 1 + t.depth(),
            Term::Comp(g, f) => 1 + g.depth().max(f.depth()),
        }
    }

    /// Splits nested compositions into factors in application order.
    pub fn factors(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        fn walk<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
            match t {
                Term::Comp(g, f) => {
                    walk(f, out);
                    walk(g, out);
                }
                other => out.push(other),
            }
        }
        walk(self, &mut out);
        out
    }
}

/// Structural evaluation of links on a term already known to typecheck.
fn links_of(t: &Term) -> WeightedDiagram {
    match t {
        Term::Id(n) => Diagram::identity(n.0).into(),
        Term::Phi(n) => Diagram::cap().pad_right(n.0).into(),
        Term::Gamma(n) => Diagram::cup().pad_right(n.0).into(),
        Term::Chi(n) => Diagram::new(
            2,
            2,
            [
                (Vertex::Top(1), Vertex::Bottom(2)),
                (Vertex::Top(2), Vertex::Bottom(1)),
            ],
        )
        .expect("transposition")
        .pad_right(n.0)
        .into(),
        Term::FApp(inner) => {
            let w = links_of(inner);
            WeightedDiagram {
                diagram: w.diagram.pad_left(1),
                loops: w.loops,
            }
        }
        Term::Comp(g, f) => compose_weighted(&links_of(f), &links_of(g))
            .expect("typechecked composition has matching shapes"),
    }
}

/// Equality in the free structure: same type and the same links, loop count
/// included.
pub fn terms_equal(a: &Term, b: &Term) -> Result<bool, TypeError> {
    let ta = a.typecheck()?;
    let tb = b.typecheck()?;
    Ok(ta == tb && links_of(a) == links_of(b))
}

impl fmt::Display for Term {
    /// Canonical text: every composition nested inside another node is
    /// parenthesized; only the outermost one is bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &Term, f: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
            match t {
                Term::Id(n) => write!(f, "id_{n}"),
                Term::Phi(n) => write!(f, "phi_{n}"),
                Term::Gamma(n) => write!(f, "gamma_{n}"),
                Term::Chi(n) => write!(f, "chi_{n}"),
                Term::FApp(t) => {
                    f.write_str("F(")?;
                    go(t, f, false)?;
                    f.write_str(")")
                }
                Term::Comp(g, h) => {
                    if nested {
                        f.write_str("(")?;
                    }
                    go(g, f, true)?;
                    f.write_str(" o ")?;
                    go(h, f, true)?;
                    if nested {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, false)
    }
}

/// Tagged JSON form of a term, e.g.
/// `{"kind":"comp","outer":{"kind":"phi","power":1},"inner":{...}}`.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum TermJson {
    Id {
        power: Obj,
    },
    Phi {
        power: Obj,
    },
    Gamma {
        power: Obj,
    },
    Chi {
        power: Obj,
    },
    F {
        arg: Box<TermJson>,
    },
    Comp {
        outer: Box<TermJson>,
        inner: Box<TermJson>,
    },
}

impl From<&Term> for TermJson {
    fn from(t: &Term) -> Self {
        match t {
            Term::Id(power) => TermJson::Id { power: *power },
            Term::Phi(power) => TermJson::Phi { power: *power },
            Term::Gamma(power) => TermJson::Gamma { power: *power },
            Term::Chi(power) => TermJson::Chi { power: *power },
            Term::FApp(t) => TermJson::F {
                arg: Box::new(t.as_ref().into()),
            },
            Term::Comp(g, f) => TermJson::Comp {
                outer: Box::new(g.as_ref().into()),
                inner: Box::new(f.as_ref().into()),
            },
        }
    }
}

impl From<TermJson> for Term {
    fn from(j: TermJson) -> Self {
        match j {
            TermJson::Id { power } => Term::Id(power),
            TermJson::Phi { power } => Term::Phi(power),
            TermJson::Gamma { power } => Term::Gamma(power),
            TermJson::Chi { power } => Term::Chi(power),
            TermJson::F { arg } => Term::f((*arg).into()),
            TermJson::Comp { outer, inner } => Term::comp((*outer).into(), (*inner).into()),
        }
    }
}

impl Serialize for Term {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TermJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        TermJson::deserialize(d).map(Term::from)
    }
}
