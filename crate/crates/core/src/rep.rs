//! The matrix representation of diagrams and terms.
//!
//! A diagram `m > n` becomes a `p^n x p^m` matrix: rows are indexed by label
//! sequences on the bottom row, columns by label sequences on the top row,
//! both ordered lexicographically with `(1, ..., 1)` first. An entry is
//! `p^k` when every thread joins equal labels and zero otherwise.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{AlgebraElement, LoopValue};
use crate::diagram::{
    enumerate_diagrams, enumerate_noncrossing, Diagram, DiagramError, Vertex, WeightedDiagram,
};
use crate::matrix::{kron, orthogonal_check, rank_of_span, ExactMatrix};
use crate::par::Execution;
use crate::rational::{self, ratio, Rational};
use crate::term::{CheckedTerm, Term, TypeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("commutant checks need an n>n diagram, got {0}>{1}")]
    NotSquare(usize, usize),
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("matrix size {size} does not match loop value {p}")]
    SizeMismatch { size: usize, p: u32 },
    #[error("faithfulness experiments are limited to 1 <= n <= 4 and p <= 3 (got n={n}, p={p})")]
    ScaleGuard { n: usize, p: u32 },
    #[error(transparent)]
    Type(#[from] TypeError),
}

/// A label sequence in `{1..base}^len`, identified with its 1-based position
/// in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelIndex {
    base: usize,
    labels: Vec<usize>,
}

impl LabelIndex {
    pub fn new(base: usize, labels: Vec<usize>) -> Option<Self> {
        (base >= 1 && labels.iter().all(|&l| (1..=base).contains(&l)))
            .then_some(LabelIndex { base, labels })
    }

    /// Inverse of [`LabelIndex::position`]; `position` is 1-based.
    pub fn from_position(base: usize, len: usize, position: usize) -> Option<Self> {
        let total = base.checked_pow(len as u32)?;
        if base == 0 || position == 0 || position > total {
            return None;
        }
        let mut rest = position - 1;
        let mut labels = vec![0; len];
        for slot in labels.iter_mut().rev() {
            *slot = rest % base + 1;
            rest /= base;
        }
        Some(LabelIndex { base, labels })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn position(&self) -> usize {
        self.offset() + 1
    }

    fn offset(&self) -> usize {
        self.labels
            .iter()
            .fold(0, |acc, &l| acc * self.base + (l - 1))
    }
}

/// The matrix of a weighted diagram. Only label assignments that are
/// constant on every thread are visited, so the cost is
/// `p^{(m+n)/2}` rather than `p^{m+n}`.
pub fn represent(w: &WeightedDiagram, p: LoopValue) -> ExactMatrix {
    let d = &w.diagram;
    let (m, n) = (d.top_count(), d.bottom_count());
    let base = p.as_usize();
    let value = rational::power(p.get(), w.loops);
    let pairs = d.pairs();
    let mut top = vec![1; m];
    let mut bottom = vec![1; n];
    let mut choice = vec![1; pairs.len()];
    let mut entries = Vec::with_capacity(base.pow(pairs.len() as u32));
    loop {
        for (&(a, b), &l) in pairs.iter().zip(&choice) {
            for v in [a, b] {
                match v {
                    Vertex::Top(i) => top[i - 1] = l,
                    Vertex::Bottom(j) => bottom[j - 1] = l,
                }
            }
        }
        let row = LabelIndex {
            base,
            labels: bottom.clone(),
        }
        .offset();
        let col = LabelIndex {
            base,
            labels: top.clone(),
        }
        .offset();
        entries.push((row, col, value.clone()));
        // odometer over thread labels
        let mut k = choice.len();
        loop {
            if k == 0 {
                return ExactMatrix::from_entries(base.pow(n as u32), base.pow(m as u32), entries)
                    .expect("indices in range");
            }
            k -= 1;
            if choice[k] < base {
                choice[k] += 1;
                break;
            }
            choice[k] = 1;
        }
    }
}

/// Linear extension of [`represent`] to formal combinations.
pub fn represent_element(a: &AlgebraElement, p: LoopValue) -> ExactMatrix {
    let (m, n) = a.shape();
    let base = p.as_usize();
    a.terms().fold(
        ExactMatrix::zero(base.pow(n as u32), base.pow(m as u32)),
        |acc, (d, c)| acc.add(&represent(&WeightedDiagram::from(d.clone()), p).scale(c)),
    )
}

/// The `1 x p^2` matrix of the counit: 1 exactly where both labels agree.
pub fn cap_matrix(p: LoopValue) -> ExactMatrix {
    let b = p.as_usize();
    ExactMatrix::from_entries(1, b * b, (0..b).map(|a| (0, a * b + a, rational::int(1))))
        .expect("in range")
}

/// The `p^2 x p^2` matrix exchanging the two tensor factors.
pub fn swap_matrix(p: LoopValue) -> ExactMatrix {
    let b = p.as_usize();
    let entries =
        (0..b).flat_map(|i1| (0..b).map(move |i2| (i2 * b + i1, i1 * b + i2, rational::int(1))));
    ExactMatrix::from_entries(b * b, b * b, entries).expect("in range")
}

/// The structure-preserving image of a term: `F` acts as `I_p (x) -`, and
/// `phi`, `gamma`, `chi` as the cap, cup and swap on the two leftmost
/// factors.
pub fn rep_term(t: &Term, p: LoopValue) -> Result<ExactMatrix, RepError> {
    t.typecheck()?;
    Ok(rep_checked(t, p))
}

pub fn rep_checked_term(t: &CheckedTerm, p: LoopValue) -> ExactMatrix {
    rep_checked(t.term(), p)
}

fn rep_checked(t: &Term, p: LoopValue) -> ExactMatrix {
    let b = p.as_usize();
    let pad = |n: usize| ExactMatrix::identity(b.pow(n as u32));
    match t {
        Term::Id(n) => pad(n.0),
        Term::Phi(n) => kron(&cap_matrix(p), &pad(n.0)),
        Term::Gamma(n) => kron(&cap_matrix(p).transpose(), &pad(n.0)),
        Term::Chi(n) => kron(&swap_matrix(p), &pad(n.0)),
        Term::FApp(inner) => kron(&ExactMatrix::identity(b), &rep_checked(inner, p)),
        Term::Comp(g, f) => &rep_checked(g, p) * &rep_checked(f, p),
    }
}

/// A vector name in an invariant term: `u^i` for the top row, `v^j` for the
/// bottom row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VectorName {
    U(usize),
    V(usize),
}

impl From<Vertex> for VectorName {
    fn from(v: Vertex) -> Self {
        match v {
            Vertex::Top(i) => VectorName::U(i),
            Vertex::Bottom(j) => VectorName::V(j),
        }
    }
}

impl From<VectorName> for Vertex {
    fn from(v: VectorName) -> Self {
        match v {
            VectorName::U(i) => Vertex::Top(i),
            VectorName::V(j) => Vertex::Bottom(j),
        }
    }
}

impl fmt::Display for VectorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorName::U(i) => write!(f, "u{i}"),
            VectorName::V(j) => write!(f, "v{j}"),
        }
    }
}

/// A product of scalar products of vectors, one factor per thread.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantTerm {
    factors: Vec<(VectorName, VectorName)>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantTermError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

impl InvariantTerm {
    pub fn factors(&self) -> &[(VectorName, VectorName)] {
        &self.factors
    }

    /// The diagram whose threads are the factors. Row sizes are the numbers
    /// of `u` and `v` vectors mentioned.
    pub fn to_diagram(&self) -> Result<Diagram, DiagramError> {
        let names = self.factors.iter().flat_map(|&(a, b)| [a, b]);
        let m = names
            .clone()
            .filter(|v| matches!(v, VectorName::U(_)))
            .count();
        let n = names.filter(|v| matches!(v, VectorName::V(_))).count();
        Diagram::new(
            m,
            n,
            self.factors.iter().map(|&(a, b)| (a.into(), b.into())),
        )
    }
}

pub fn invariant_term(d: &Diagram) -> InvariantTerm {
    InvariantTerm {
        factors: d
            .pairs()
            .iter()
            .map(|&(a, b)| (a.into(), b.into()))
            .collect(),
    }
}

impl fmt::Display for InvariantTerm {
    /// `(u1u3)·(u2v1)·(v2v3)`; the empty product is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (a, b)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "({a}{b})")?;
        }
        Ok(())
    }
}

impl FromStr for InvariantTerm {
    type Err = InvariantTermError;

    /// Accepts factors `(xIyJ)` separated by `·`, `*` or whitespace, where
    /// `x`, `y` are `u` or `v`. A lone `1` is the empty product.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |offset: usize, message: &str| InvariantTermError::Syntax {
            offset,
            message: message.into(),
        };
        if s.trim() == "1" {
            return Ok(InvariantTerm {
                factors: Vec::new(),
            });
        }
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut factors = Vec::new();
        let name = |i: &mut usize| -> Result<VectorName, InvariantTermError> {
            let row = match bytes.get(*i) {
                Some(b'u') => VectorName::U as fn(usize) -> VectorName,
                Some(b'v') => VectorName::V,
                _ => return Err(err(*i, "expected `u` or `v`")),
            };
            *i += 1;
            let start = *i;
            while bytes.get(*i).is_some_and(u8::is_ascii_digit) {
                *i += 1;
            }
            match s[start..*i].parse::<usize>() {
                Ok(k) if k >= 1 => Ok(row(k)),
                _ => Err(err(start, "expected a positive index")),
            }
        };
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b'*') {
                i += 1;
            }
            if s[i..].starts_with('·') {
                i += '·'.len_utf8();
                continue;
            }
            if i == bytes.len() {
                break;
            }
            if bytes[i] != b'(' {
                return Err(err(i, "expected `(`"));
            }
            i += 1;
            let skip = |i: &mut usize| {
                while bytes.get(*i).is_some_and(u8::is_ascii_whitespace) {
                    *i += 1;
                }
            };
            skip(&mut i);
            let a = name(&mut i)?;
            skip(&mut i);
            if bytes.get(i) == Some(&b'.') {
                i += 1;
                skip(&mut i);
            }
            let b = name(&mut i)?;
            skip(&mut i);
            if bytes.get(i) != Some(&b')') {
                return Err(err(i, "expected `)`"));
            }
            i += 1;
            factors.push(if a <= b { (a, b) } else { (b, a) });
        }
        if factors.is_empty() {
            return Err(err(0, "empty term"));
        }
        factors.sort_unstable();
        Ok(InvariantTerm { factors })
    }
}

/// `G^{(x)n}` for a square `g`.
pub fn tensor_power(g: &ExactMatrix, n: usize) -> ExactMatrix {
    (0..n).fold(ExactMatrix::identity(1), |acc, _| kron(&acc, g))
}

/// Whether the matrix of `d` commutes with `g^{(x)n}`.
pub fn commutant_check(d: &Diagram, g: &ExactMatrix, p: LoopValue) -> Result<bool, RepError> {
    if d.top_count() != d.bottom_count() {
        return Err(RepError::NotSquare(d.top_count(), d.bottom_count()));
    }
    if g.rows() != p.as_usize() || g.cols() != p.as_usize() {
        return Err(RepError::SizeMismatch {
            size: g.rows(),
            p: p.get(),
        });
    }
    if !orthogonal_check(g) {
        return Err(RepError::NotOrthogonal);
    }
    let big = tensor_power(g, d.top_count());
    let r = represent(&d.clone().into(), p);
    Ok(&big * &r == &r * &big)
}

/// Fixed exact orthogonal `p x p` matrices: permutations, signed
/// permutations, the rational rotation `[[3/5, -4/5], [4/5, 3/5]]` embedded
/// in coordinate planes, and products of these. The identity is excluded.
pub fn orthogonal_battery(p: LoopValue) -> Vec<ExactMatrix> {
    let b = p.as_usize();
    let perm = |images: &[usize]| {
        ExactMatrix::from_entries(
            b,
            b,
            images
                .iter()
                .enumerate()
                .map(|(j, &i)| (i, j, rational::int(1))),
        )
        .expect("in range")
    };
    let diag = |signs: &[i64]| {
        ExactMatrix::from_entries(
            b,
            b,
            signs
                .iter()
                .enumerate()
                .map(|(i, &s)| (i, i, rational::int(s))),
        )
        .expect("in range")
    };
    let rotation = |first: usize| {
        let mut entries: Vec<(usize, usize, Rational)> = (0..b)
            .filter(|&i| i != first && i != first + 1)
            .map(|i| (i, i, rational::int(1)))
            .collect();
        entries.extend([
            (first, first, ratio(3, 5)),
            (first, first + 1, ratio(-4, 5)),
            (first + 1, first, ratio(4, 5)),
            (first + 1, first + 1, ratio(3, 5)),
        ]);
        ExactMatrix::from_entries(b, b, entries).expect("in range")
    };

    let mut flip = vec![1; b];
    flip[0] = -1;
    let mut out = vec![diag(&flip)];
    if b >= 2 {
        let mut transposition: Vec<usize> = (0..b).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..b).map(|i| (i + 1) % b).collect();
        let mut last_flip = vec![1; b];
        last_flip[b - 1] = -1;
        let swap = perm(&transposition);
        let rot = rotation(0);
        out.push(swap.clone());
        out.push(&swap * &diag(&last_flip));
        out.push(rot.clone());
        out.push(&rot * &rot);
        out.push(&rot * &swap);
        if b >= 3 {
            let cyc = perm(&cycle);
            let rot_last = rotation(b - 2);
            out.push(cyc.clone());
            out.push(rot_last.clone());
            out.push(&rot * &rot_last);
            out.push(&rot * &cyc);
        }
    }
    out.dedup();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaithfulnessReport {
    pub basis_size: usize,
    pub rank: usize,
}

impl FaithfulnessReport {
    pub fn injective(&self) -> bool {
        self.basis_size == self.rank
    }
}

impl fmt::Display for FaithfulnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim={}, rank={}, injective={}",
            self.basis_size,
            self.rank,
            if self.injective() { "yes" } else { "no" }
        )
    }
}

/// Rank of the represented basis of `B_n` (or of `TL_n` when `tl_only`).
pub fn faithfulness_report(
    n: usize,
    p: LoopValue,
    tl_only: bool,
) -> Result<FaithfulnessReport, RepError> {
    faithfulness_report_with(n, p, tl_only, Execution::default())
}

pub fn faithfulness_report_with(
    n: usize,
    p: LoopValue,
    tl_only: bool,
    exec: Execution,
) -> Result<FaithfulnessReport, RepError> {
    if !(1..=4).contains(&n) || p.get() > 3 {
        return Err(RepError::ScaleGuard { n, p: p.get() });
    }
    let basis = if tl_only {
        enumerate_noncrossing(n, n)
    } else {
        enumerate_diagrams(n, n)
    };
    let mats = exec.map(&basis, |d| represent(&d.clone().into(), p));
    let rank = rank_of_span(&mats).expect("represented basis shares one shape");
    Ok(FaithfulnessReport {
        basis_size: basis.len(),
        rank,
    })
}
