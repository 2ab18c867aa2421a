//! Brauer m-n-diagrams: perfect matchings on a top row of `m` vertices and a
//! bottom row of `n` vertices, composed by concatenating threads.
//!
//! Vertices are 1-based. The top row is the domain, the bottom row the
//! codomain, so `compose(d1, d2)` draws `d1` above `d2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par::Execution;

/// A vertex of a diagram. The derived ordering puts every top vertex before
/// every bottom vertex and orders by index within a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl Vertex {
    pub fn index(self) -> usize {
        match self {
            Vertex::Top(i) | Vertex::Bottom(i) => i,
        }
    }

    pub fn is_top(self) -> bool {
        matches!(self, Vertex::Top(_))
    }

    fn flipped(self) -> Vertex {
        match self {
            Vertex::Top(i) => Vertex::Bottom(i),
            Vertex::Bottom(i) => Vertex::Top(i),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Top(i) => write!(f, "T{i}"),
            Vertex::Bottom(i) => write!(f, "B{i}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (row, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let index: usize = rest
            .parse()
            .map_err(|_| format!("bad vertex index in `{s}`"))?;
        if index == 0 {
            return Err(format!("vertex indices are 1-based, got `{s}`"));
        }
        match row {
            "T" | "t" => Ok(Vertex::Top(index)),
            "B" | "b" => Ok(Vertex::Bottom(index)),
            _ => Err(format!("expected `T<i>` or `B<j>`, got `{s}`")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("top and bottom rows have odd total size {top}+{bottom}")]
    OddTotal { top: usize, bottom: usize },
    #[error("vertex {vertex} is out of range for a {top}>{bottom} diagram")]
    OutOfRange {
        vertex: Vertex,
        top: usize,
        bottom: usize,
    },
    #[error("vertex {0} occurs in more than one pair")]
    Repeated(Vertex),
    #[error("vertex {0} is not covered by any pair")]
    Uncovered(Vertex),
    #[error("cannot compose a diagram with bottom row {left} onto one with top row {right}")]
    ShapeMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramParseError {
    #[error("diagram syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    /// Well-formed text describing an impossible diagram.
    #[error(transparent)]
    Invalid(#[from] DiagramError),
}

/// A Brauer `m`-`n`-diagram in canonical form.
///
/// Within a pair the smaller vertex comes first and the pair list is sorted,
/// so structural equality is equality of diagrams.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    top: usize,
    bottom: usize,
    pairs: Vec<(Vertex, Vertex)>,
}

/// A diagram together with the exponent `k` of the scalar `p^k` collected
/// from closed loops.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedDiagram {
    pub diagram: Diagram,
    pub loops: u32,
}

impl Diagram {
    /// Builds a diagram from pairs in any order, validating that they form a
    /// perfect matching of the `top + bottom` vertices.
    pub fn new(
        top: usize,
        bottom: usize,
        pairs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, DiagramError> {
        if !(top + bottom).is_multiple_of(2) {
            return Err(DiagramError::OddTotal { top, bottom });
        }
        let mut seen = vec![false; top + bottom];
        let mut canon = Vec::with_capacity((top + bottom) / 2);
        for (a, b) in pairs {
            for v in [a, b] {
                let slot = flat_index(top, bottom, v).ok_or(DiagramError::OutOfRange {
                    vertex: v,
                    top,
                    bottom,
                })?;
                if seen[slot] {
                    return Err(DiagramError::Repeated(v));
                }
                seen[slot] = true;
            }
            canon.push(if a <= b { (a, b) } else { (b, a) });
        }
        if let Some(slot) = seen.iter().position(|s| !s) {
            return Err(DiagramError::Uncovered(vertex_at(top, slot)));
        }
        canon.sort_unstable();
        Ok(Diagram {
            top,
            bottom,
            pairs: canon,
        })
    }

    /// Builds from a mate table over flat indices (top row first). Callers
    /// guarantee that `mate` is an involution without fixed points.
    fn from_mates(top: usize, bottom: usize, mate: &[usize]) -> Self {
        let mut pairs: Vec<_> = (0..mate.len())
            .filter(|&i| i < mate[i])
            .map(|i| (vertex_at(top, i), vertex_at(top, mate[i])))
            .collect();
        pairs.sort_unstable();
        Diagram { top, bottom, pairs }
    }

    /// The identity `n`-diagram `I_n`.
    pub fn identity(n: usize) -> Self {
        Diagram {
            top: n,
            bottom: n,
            pairs: (1..=n)
                .map(|i| (Vertex::Top(i), Vertex::Bottom(i)))
                .collect(),
        }
    }

    /// `perm` lists the 1-based images: the thread from `T_i` ends at
    /// `B_{perm[i-1]}`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self, DiagramError> {
        let n = perm.len();
        let mut hit = vec![false; n];
        for &j in perm {
            if j == 0 || j > n || std::mem::replace(&mut hit[j - 1], true) {
                return Err(DiagramError::NotPermutation(n));
            }
        }
        Ok(Diagram::from_mates(
            n,
            n,
            &(0..2 * n)
                .map(|v| {
                    if v < n {
                        n + perm[v] - 1
                    } else {
                        perm.iter().position(|&j| j == v - n + 1).unwrap()
                    }
                })
                .collect::<Vec<_>>(),
        ))
    }

    /// The cap `2 > 0` joining the two top vertices.
    pub fn cap() -> Self {
        Diagram {
            top: 2,
            bottom: 0,
            pairs: vec![(Vertex::Top(1), Vertex::Top(2))],
        }
    }

    /// The cup `0 > 2` joining the two bottom vertices.
    pub fn cup() -> Self {
        Diagram {
            top: 0,
            bottom: 2,
            pairs: vec![(Vertex::Bottom(1), Vertex::Bottom(2))],
        }
    }

    pub fn top_count(&self) -> usize {
        self.top
    }

    pub fn bottom_count(&self) -> usize {
        self.bottom
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    /// Partner table over flat indices: top `i` is `i - 1`, bottom `j` is
    /// `top + j - 1`.
    pub fn mates(&self) -> Vec<usize> {
        let mut mate = vec![0; self.top + self.bottom];
        for &(a, b) in &self.pairs {
            let (x, y) = (self.flat(a), self.flat(b));
            mate[x] = y;
            mate[y] = x;
        }
        mate
    }

    fn flat(&self, v: Vertex) -> usize {
        match v {
            Vertex::Top(i) => i - 1,
            Vertex::Bottom(j) => self.top + j - 1,
        }
    }

    /// Partner of a vertex.
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Swaps the rows.
    pub fn transpose(&self) -> Self {
        let pairs = self.pairs.iter().map(|&(a, b)| {
            let (a, b) = (a.flipped(), b.flipped());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        });
        let mut pairs: Vec<_> = pairs.collect();
        pairs.sort_unstable();
        Diagram {
            top: self.bottom,
            bottom: self.top,
            pairs,
        }
    }

    /// Adds `count` straight threads on the left, shifting every existing
    /// vertex right.
    pub fn pad_left(&self, count: usize) -> Self {
        let shift = |v: Vertex| match v {
            Vertex::Top(i) => Vertex::Top(i + count),
            Vertex::Bottom(j) => Vertex::Bottom(j + count),
        };
        let pairs = (1..=count)
            .map(|i| (Vertex::Top(i), Vertex::Bottom(i)))
            .chain(self.pairs.iter().map(|&(a, b)| (shift(a), shift(b))));
        let mut pairs: Vec<_> = pairs.collect();
        pairs.sort_unstable();
        Diagram {
            top: self.top + count,
            bottom: self.bottom + count,
            pairs,
        }
    }

    /// Adds `count` straight threads on the right.
    pub fn pad_right(&self, count: usize) -> Self {
        let pairs = self.pairs.iter().copied().chain(
            (1..=count).map(|i| (Vertex::Top(self.top + i), Vertex::Bottom(self.bottom + i))),
        );
        let mut pairs: Vec<_> = pairs.collect();
        pairs.sort_unstable();
        Diagram {
            top: self.top + count,
            bottom: self.bottom + count,
            pairs,
        }
    }

    /// True iff the diagram can be drawn in the strip without crossings:
    /// with vertices placed around a circle as `T1..Tm, Bn..B1`, no two
    /// pairs interleave.
    pub fn is_noncrossing(&self) -> bool {
        let pos = |v: Vertex| match v {
            Vertex::Top(i) => i - 1,
            Vertex::Bottom(j) => self.top + self.bottom - j,
        };
        let chords: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (pos(a), pos(b));
                (x.min(y), x.max(y))
            })
            .collect();
        chords.iter().enumerate().all(|(i, &(a, b))| {
            chords[i + 1..]
                .iter()
                .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// True iff every thread joins the two rows.
    pub fn is_permutation(&self) -> bool {
        self.top == self.bottom && self.pairs.iter().all(|&(a, b)| a.is_top() != b.is_top())
    }
}

fn flat_index(top: usize, bottom: usize, v: Vertex) -> Option<usize> {
    match v {
        Vertex::Top(i) if (1..=top).contains(&i) => Some(i - 1),
        Vertex::Bottom(j) if (1..=bottom).contains(&j) => Some(top + j - 1),
        _ => None,
    }
}

fn vertex_at(top: usize, slot: usize) -> Vertex {
    if slot < top {
        Vertex::Top(slot + 1)
    } else {
        Vertex::Bottom(slot - top + 1)
    }
}

/// Stacks `upper` (m > n) on `lower` (n > q), identifying the shared row.
///
/// Threads are traced through the middle row. Closed cycles that never
/// reach the outer rows are counted in `loops`.
pub fn compose(upper: &Diagram, lower: &Diagram) -> Result<WeightedDiagram, DiagramError> {
    if upper.bottom != lower.top {
        return Err(DiagramError::ShapeMismatch {
            left: upper.bottom,
            right: lower.top,
        });
    }
    let (m, n, q) = (upper.top, upper.bottom, lower.bottom);
    let up = upper.mates();
    let low = lower.mates();

    // Outer vertices of the result: 0..m are upper's top, m..m+q lower's bottom.
    let mut mate = vec![usize::MAX; m + q];
    let mut middle_seen = vec![false; n];

    for start in 0..m + q {
        if mate[start] != usize::MAX {
            continue;
        }
        // (in_upper, flat index within that diagram)
        let (mut in_upper, mut at) = if start < m {
            (true, start)
        } else {
            (false, n + start - m)
        };
        let end = loop {
            if in_upper {
                let next = up[at];
                if next < m {
                    break next;
                }
                middle_seen[next - m] = true;
                in_upper = false;
                at = next - m;
            } else {
                let next = low[at];
                if next >= n {
                    break m + next - n;
                }
                middle_seen[next] = true;
                in_upper = true;
                at = m + next;
            }
        };
        mate[start] = end;
        mate[end] = start;
    }

    let mut loops = 0;
    for j in 0..n {
        if middle_seen[j] {
            continue;
        }
        loops += 1;
        // Walk the cycle alternating lower and upper threads.
        let mut cur = j;
        loop {
            middle_seen[cur] = true;
            let via_lower = low[cur];
            middle_seen[via_lower] = true;
            let via_upper = up[m + via_lower] - m;
            if via_upper == j {
                break;
            }
            cur = via_upper;
        }
    }

    Ok(WeightedDiagram {
        diagram: Diagram::from_mates(m, q, &mate),
        loops,
    })
}

/// Composition in `Br_p` with symbolic exponents: loop counts add.
pub fn compose_weighted(
    upper: &WeightedDiagram,
    lower: &WeightedDiagram,
) -> Result<WeightedDiagram, DiagramError> {
    let mut out = compose(&upper.diagram, &lower.diagram)?;
    out.loops += upper.loops + lower.loops;
    Ok(out)
}

/// All `m`-`n`-diagrams in lexicographic order of their canonical pair
/// lists. Empty when `m + n` is odd.
pub fn enumerate_diagrams(m: usize, n: usize) -> Vec<Diagram> {
    enumerate_diagrams_with(m, n, Execution::default())
}

pub fn enumerate_diagrams_with(m: usize, n: usize, exec: Execution) -> Vec<Diagram> {
    let total = m + n;
    if !total.is_multiple_of(2) {
        return Vec::new();
    }
    if total == 0 {
        return vec![Diagram::identity(0)];
    }
    // Vertex 0 is always the smallest; its partner choice fixes the first
    // pair, so splitting on it keeps the global order.
    let partners: Vec<usize> = (1..total).collect();
    exec.map(&partners, |&first| {
        let mut mate = vec![usize::MAX; total];
        mate[0] = first;
        mate[first] = 0;
        let mut out = Vec::new();
        extend_matchings(&mut mate, &mut out, m, n);
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

fn extend_matchings(mate: &mut [usize], out: &mut Vec<Diagram>, m: usize, n: usize) {
    let Some(first) = mate.iter().position(|&x| x == usize::MAX) else {
        out.push(Diagram::from_mates(m, n, mate));
        return;
    };
    for other in first + 1..mate.len() {
        if mate[other] != usize::MAX {
            continue;
        }
        mate[first] = other;
        mate[other] = first;
        extend_matchings(mate, out, m, n);
        mate[first] = usize::MAX;
        mate[other] = usize::MAX;
    }
}

/// All non-crossing `m`-`n`-diagrams, in enumeration order.
pub fn enumerate_noncrossing(m: usize, n: usize) -> Vec<Diagram> {
    enumerate_diagrams(m, n)
        .into_iter()
        .filter(Diagram::is_noncrossing)
        .collect()
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}:[", self.top, self.bottom)?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}, {}", self.loops, self.diagram)
    }
}

impl From<Diagram> for WeightedDiagram {
    fn from(diagram: Diagram) -> Self {
        WeightedDiagram { diagram, loops: 0 }
    }
}

impl FromStr for Diagram {
    type Err = DiagramParseError;

    /// Parses `m>n:[T1-T3,T2-B1,B2-B3]`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |offset: usize, message: String| DiagramParseError::Syntax { offset, message };
        // Keep original byte offsets while skipping whitespace.
        let chars: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut pos = 0;
        let end_offset = s.len();
        let offset_at = |pos: usize| chars.get(pos).map_or(end_offset, |&(o, _)| o);

        let number = |pos: &mut usize| -> Result<usize, DiagramParseError> {
            let start = *pos;
            while chars.get(*pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
                *pos += 1;
            }
            if start == *pos {
                return Err(err(offset_at(start), "expected a number".into()));
            }
            let text: String = chars[start..*pos].iter().map(|&(_, c)| c).collect();
            text.parse()
                .map_err(|_| err(offset_at(start), format!("number `{text}` too large")))
        };
        let expect = |pos: &mut usize, want: char| -> Result<(), DiagramParseError> {
            match chars.get(*pos) {
                Some(&(_, c)) if c == want => {
                    *pos += 1;
                    Ok(())
                }
                Some(&(o, c)) => Err(err(o, format!("expected `{want}`, found `{c}`"))),
                None => Err(err(
                    end_offset,
                    format!("expected `{want}`, found end of input"),
                )),
            }
        };
        let vertex = |pos: &mut usize| -> Result<Vertex, DiagramParseError> {
            let start = offset_at(*pos);
            let row = match chars.get(*pos) {
                Some(&(_, 'T' | 't')) => Vertex::Top as fn(usize) -> Vertex,
                Some(&(_, 'B' | 'b')) => Vertex::Bottom,
                Some(&(o, c)) => return Err(err(o, format!("expected `T` or `B`, found `{c}`"))),
                None => return Err(err(end_offset, "expected a vertex".into())),
            };
            *pos += 1;
            let index = number(pos)?;
            if index == 0 {
                return Err(err(start, "vertex indices are 1-based".into()));
            }
            Ok(row(index))
        };

        let top = number(&mut pos)?;
        expect(&mut pos, '>')?;
        let bottom = number(&mut pos)?;
        expect(&mut pos, ':')?;
        expect(&mut pos, '[')?;
        let mut pairs = Vec::new();
        if chars.get(pos).is_some_and(|&(_, c)| c == ']') {
            pos += 1;
        } else {
            loop {
                let a = vertex(&mut pos)?;
                expect(&mut pos, '-')?;
                let b = vertex(&mut pos)?;
                pairs.push((a, b));
                match chars.get(pos) {
                    Some(&(_, ',')) => pos += 1,
                    Some(&(_, ']')) => {
                        pos += 1;
                        break;
                    }
                    Some(&(o, c)) => {
                        return Err(err(o, format!("expected `,` or `]`, found `{c}`")))
                    }
                    None => return Err(err(end_offset, "unterminated pair list".into())),
                }
            }
        }
        if let Some(&(o, c)) = chars.get(pos) {
            return Err(err(o, format!("trailing input starting at `{c}`")));
        }
        Ok(Diagram::new(top, bottom, pairs)?)
    }
}

/// JSON shape: `{"top":m,"bottom":n,"pairs":[["T1","T3"],...],"loops":k}`
/// where `loops` only appears for weighted diagrams.
#[derive(Serialize, Deserialize)]
struct DiagramJson {
    top: usize,
    bottom: usize,
    pairs: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    loops: Option<u32>,
}

impl DiagramJson {
    fn from_diagram(d: &Diagram, loops: Option<u32>) -> Self {
        DiagramJson {
            top: d.top,
            bottom: d.bottom,
            pairs: d
                .pairs
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
            loops,
        }
    }

    fn into_weighted(self) -> Result<WeightedDiagram, String> {
        let pairs = self
            .pairs
            .iter()
            .map(|[a, b]| Ok((a.parse()?, b.parse()?)))
            .collect::<Result<Vec<_>, String>>()?;
        let diagram = Diagram::new(self.top, self.bottom, pairs).map_err(|e| e.to_string())?;
        Ok(WeightedDiagram {
            diagram,
            loops: self.loops.unwrap_or(0),
        })
    }
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson::from_diagram(self, None).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = DiagramJson::deserialize(d)?;
        if json.loops.is_some_and(|k| k != 0) {
            return Err(serde::de::Error::custom(
                "a plain diagram cannot carry loops",
            ));
        }
        json.into_weighted()
            .map(|w| w.diagram)
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for WeightedDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson::from_diagram(&self.diagram, Some(self.loops)).serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        DiagramJson::deserialize(d)?
            .into_weighted()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Vertex::{Bottom as B, Top as T};

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn identity_shapes() {
        assert_eq!(Diagram::identity(3), d("3>3:[T1-B1,T2-B2,T3-B3]"));
        assert_eq!(Diagram::identity(0).pairs(), &[]);
        assert_eq!(Diagram::identity(1), d("1>1:[T1-B1]"));
    }

    #[test]
    fn canonical_storage_ignores_input_order() {
        let a = Diagram::new(3, 3, [(B(3), B(2)), (T(3), T(1)), (B(1), T(2))]).unwrap();
        assert_eq!(a.pairs(), &[(T(1), T(3)), (T(2), B(1)), (B(2), B(3))]);
        assert_eq!(a.to_string(), "3>3:[T1-T3,T2-B1,B2-B3]");
    }

    #[test]
    fn rejects_bad_matchings() {
        assert_eq!(
            Diagram::new(1, 0, []),
            Err(DiagramError::OddTotal { top: 1, bottom: 0 })
        );
        assert_eq!(
            Diagram::new(2, 0, [(T(1), T(1))]),
            Err(DiagramError::Repeated(T(1)))
        );
        assert_eq!(
            Diagram::new(2, 2, [(T(1), B(1))]),
            Err(DiagramError::Uncovered(T(2)))
        );
        assert!(matches!(
            Diagram::new(1, 1, [(T(1), B(2))]),
            Err(DiagramError::OutOfRange { .. })
        ));
    }

    #[test]
    fn worked_example_composes_with_one_loop() {
        let d1 = d("3>3:[T1-T3,T2-B1,B2-B3]");
        let d2 = d("3>3:[T1-B3,T2-T3,B1-B2]");
        let w = compose(&d1, &d2).unwrap();
        assert_eq!(w.loops, 1);
        assert_eq!(w.diagram, d("3>3:[T1-T3,T2-B3,B1-B2]"));
        assert_eq!(w.to_string(), "k=1, 3>3:[T1-T3,T2-B3,B1-B2]");
    }

    #[test]
    fn temperley_lieb_generator_squares_to_a_loop() {
        let e = d("2>2:[T1-T2,B1-B2]");
        let w = compose(&e, &e).unwrap();
        assert_eq!(
            w,
            WeightedDiagram {
                diagram: e.clone(),
                loops: 1
            }
        );
        let we = WeightedDiagram {
            diagram: e.clone(),
            loops: 1,
        };
        assert_eq!(compose_weighted(&we, &we).unwrap().loops, 3);
    }

    #[test]
    fn weighted_exponents_add() {
        let a = WeightedDiagram {
            diagram: Diagram::identity(1),
            loops: 2,
        };
        let b = WeightedDiagram {
            diagram: Diagram::identity(1),
            loops: 3,
        };
        assert_eq!(
            compose_weighted(&a, &b).unwrap(),
            WeightedDiagram {
                diagram: Diagram::identity(1),
                loops: 5
            }
        );
    }

    #[test]
    fn cap_on_cup_is_a_closed_loop() {
        let w = compose(&Diagram::cup(), &Diagram::cap()).unwrap();
        assert_eq!(
            w,
            WeightedDiagram {
                diagram: Diagram::identity(0),
                loops: 1
            }
        );
        let w = compose(&Diagram::cap(), &Diagram::cup()).unwrap();
        assert_eq!(w.loops, 0);
        assert_eq!(w.diagram, d("2>2:[T1-T2,B1-B2]"));
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = d("2>0:[T1-T2]");
        assert_eq!(
            compose(&a, &Diagram::identity(2)),
            Err(DiagramError::ShapeMismatch { left: 0, right: 2 })
        );
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_diagrams(1, 1), vec![Diagram::identity(1)]);
        assert!(enumerate_diagrams(1, 2).is_empty());
        assert_eq!(enumerate_diagrams(0, 0), vec![Diagram::identity(0)]);
        let b2 = enumerate_diagrams(2, 2);
        // Lexicographic: T1-T2 first, then T1-B1, then T1-B2.
        assert_eq!(
            b2,
            vec![
                d("2>2:[T1-T2,B1-B2]"),
                Diagram::identity(2),
                d("2>2:[T1-B2,T2-B1]"),
            ]
        );
        assert_eq!(enumerate_diagrams(3, 3).len(), 15);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for (m, n) in [(2, 2), (3, 3), (1, 5), (4, 2), (0, 6)] {
            let all = enumerate_diagrams(m, n);
            assert!(all.windows(2).all(|w| w[0] < w[1]), "{m}>{n}");
            assert_eq!(all, enumerate_diagrams_with(m, n, Execution::Sequential));
        }
    }

    #[test]
    fn crossing_predicate() {
        assert!(!d("3>3:[T1-T3,T2-B1,B2-B3]").is_noncrossing());
        assert!(!d("2>2:[T1-B2,T2-B1]").is_noncrossing());
        assert!(d("2>2:[T1-T2,B1-B2]").is_noncrossing());
        assert!(!d("4>0:[T1-T3,T2-T4]").is_noncrossing());
        assert_eq!(enumerate_noncrossing(3, 3).len(), 5);
    }

    #[test]
    fn permutations() {
        assert_eq!(
            Diagram::from_permutation(&[1, 2, 3]).unwrap(),
            Diagram::identity(3)
        );
        assert_eq!(
            Diagram::from_permutation(&[2, 1]).unwrap(),
            d("2>2:[T1-B2,T2-B1]")
        );
        assert_eq!(
            Diagram::from_permutation(&[2, 3, 1]).unwrap(),
            d("3>3:[T1-B2,T2-B3,T3-B1]")
        );
        assert_eq!(
            Diagram::from_permutation(&[1, 1]),
            Err(DiagramError::NotPermutation(2))
        );
        assert_eq!(
            Diagram::from_permutation(&[0]),
            Err(DiagramError::NotPermutation(1))
        );
        assert!(Diagram::from_permutation(&[2, 3, 1])
            .unwrap()
            .is_permutation());
    }

    #[test]
    fn transpose_swaps_rows() {
        assert_eq!(Diagram::identity(4).transpose(), Diagram::identity(4));
        assert_eq!(Diagram::cap().transpose(), Diagram::cup());
        for m in 0..=8 {
            for n in (0..=8 - m).filter(|n| (m + n) % 2 == 0) {
                for x in enumerate_diagrams(m, n) {
                    assert_eq!(x.transpose().transpose(), x);
                }
            }
        }
    }

    #[test]
    fn padding() {
        assert_eq!(Diagram::cap().pad_left(1), d("3>1:[T1-B1,T2-T3]"));
        assert_eq!(Diagram::cap().pad_right(1), d("3>1:[T1-T2,T3-B1]"));
    }

    #[test]
    fn text_parse_errors_carry_offsets() {
        let offset = |s: &str| match s.parse::<Diagram>().unwrap_err() {
            DiagramParseError::Syntax { offset, .. } => offset,
            e => panic!("{e}"),
        };
        assert_eq!(offset("3>3:[T1-T3,T2-X1]"), 14);
        assert_eq!(offset("3>3 ["), 4);
        assert_eq!(
            "2>2:[T1-B1]".parse::<Diagram>(),
            Err(DiagramParseError::Invalid(DiagramError::Uncovered(
                Vertex::Top(2)
            )))
        );
        assert!(" 2 > 0 : [ T2 - T1 ] ".parse::<Diagram>().is_ok());
        assert!("0>0:[]".parse::<Diagram>().is_ok());
    }

    #[test]
    fn json_forms() {
        let x = d("3>3:[T1-T3,T2-B1,B2-B3]");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"{"top":3,"bottom":3,"pairs":[["T1","T3"],["T2","B1"],["B2","B3"]]}"#
        );
        let w = WeightedDiagram {
            diagram: x.clone(),
            loops: 2,
        };
        let json = serde_json::to_string(&w).unwrap();
        assert!(json.ends_with(r#""loops":2}"#));
        assert_eq!(serde_json::from_str::<WeightedDiagram>(&json).unwrap(), w);
        assert!(serde_json::from_str::<Diagram>(&json).is_err());
        assert!(
            serde_json::from_str::<Diagram>(r#"{"top":2,"bottom":0,"pairs":[["T1","T1"]]}"#)
                .is_err()
        );
    }
}
