//! Text drawings of diagrams: ASCII art and standalone TikZ.

use std::fmt::Write as _;

use crate::diagram::{Diagram, Vertex};

const SPACING: usize = 4;

fn col(i: usize) -> usize {
    SPACING * (i - 1)
}

type Arcs = Vec<(usize, usize)>;

/// Caps, cups and through threads, by vertex index.
fn split(d: &Diagram) -> (Arcs, Arcs, Arcs) {
    let (mut caps, mut cups, mut through) = (Vec::new(), Vec::new(), Vec::new());
    for &(a, b) in d.pairs() {
        match (a, b) {
            (Vertex::Top(i), Vertex::Top(j)) => caps.push((i, j)),
            (Vertex::Bottom(i), Vertex::Bottom(j)) => cups.push((i, j)),
            (Vertex::Top(i), Vertex::Bottom(j)) => through.push((i, j)),
            _ => unreachable!("pairs are canonical"),
        }
    }
    (caps, cups, through)
}

struct Canvas {
    lines: Vec<String>,
    width: usize,
}

impl Canvas {
    fn row(&mut self, cells: &[(usize, char)]) {
        let mut line = vec![' '; self.width];
        for &(x, c) in cells {
            line[x] = c;
        }
        self.lines
            .push(line.into_iter().collect::<String>().trim_end().to_string());
    }
}

/// Rows of `*` for the vertices; caps drawn as `\___/`, cups as `/---\`,
/// through threads as `|`, `/` and `\` (an `X` marks two threads meeting in
/// one cell).
pub fn render_ascii(d: &Diagram) -> String {
    let (mut caps, mut cups, through) = split(d);
    let width = col(d.top_count().max(d.bottom_count()).max(1)) + 1;
    let mut canvas = Canvas {
        lines: Vec::new(),
        width,
    };
    let dots = |n: usize| (1..=n).map(|i| (col(i), '*')).collect::<Vec<_>>();

    canvas.row(&dots(d.top_count()));

    // Inner caps close first, so they sit closer to the top row.
    caps.sort_by_key(|&(a, b)| (b - a, a));
    let mut open: Vec<usize> = (1..=d.top_count()).map(col).collect();
    for &(a, b) in &caps {
        let (ca, cb) = (col(a), col(b));
        open.retain(|&x| x != ca && x != cb);
        let mut cells: Vec<(usize, char)> = (ca + 1..cb).map(|x| (x, '_')).collect();
        cells.extend([(ca, '\\'), (cb, '/')]);
        cells.extend(open.iter().map(|&x| (x, '|')));
        canvas.row(&cells);
    }

    let mut strands: Vec<(usize, usize)> = through.iter().map(|&(i, j)| (col(i), col(j))).collect();
    let travel = strands
        .iter()
        .map(|&(x, t)| x.abs_diff(t))
        .max()
        .unwrap_or(0);
    if !strands.is_empty() || d.pairs().is_empty() {
        for _ in 0..travel.max(1) {
            let mut cells: Vec<(usize, char)> = Vec::new();
            for (x, t) in strands.iter_mut() {
                let c = match (*x).cmp(t) {
                    std::cmp::Ordering::Less => {
                        *x += 1;
                        '\\'
                    }
                    std::cmp::Ordering::Greater => {
                        *x -= 1;
                        '/'
                    }
                    std::cmp::Ordering::Equal => '|',
                };
                match cells.iter_mut().find(|(y, _)| y == x) {
                    Some(cell) => cell.1 = 'X',
                    None => cells.push((*x, c)),
                }
            }
            canvas.row(&cells);
        }
    }

    // Outer cups open first.
    cups.sort_by_key(|&(a, b)| (std::cmp::Reverse(b - a), a));
    let mut open: Vec<usize> = through.iter().map(|&(_, j)| col(j)).collect();
    for &(a, b) in &cups {
        let (ca, cb) = (col(a), col(b));
        let mut cells: Vec<(usize, char)> = (ca + 1..cb).map(|x| (x, '-')).collect();
        cells.extend([(ca, '/'), (cb, '\\')]);
        cells.extend(open.iter().map(|&x| (x, '|')));
        canvas.row(&cells);
        open.extend([ca, cb]);
    }

    canvas.row(&dots(d.bottom_count()));
    let mut out = canvas.lines.join("\n");
    out.push('\n');
    out
}

/// A standalone TikZ picture: vertex rows at `y = 2` and `y = 0`, caps as
/// arcs hanging below the top row, cups as arcs rising above the bottom row,
/// through threads as straight chords.
pub fn render_tikz(d: &Diagram) -> String {
    let (caps, cups, through) = split(d);
    let x = |i: usize| (i - 1) as f64;
    let depth = |a: usize, b: usize| (0.35 * (b - a) as f64).min(0.9);
    let mut s = String::new();
    s.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
    s.push_str("\\begin{tikzpicture}[dot/.style={circle,fill,inner sep=1.2pt}]\n");
    for i in 1..=d.top_count() {
        let _ = writeln!(s, "  \\node[dot] (T{i}) at ({:.2},2.00) {{}};", x(i));
    }
    for j in 1..=d.bottom_count() {
        let _ = writeln!(s, "  \\node[dot] (B{j}) at ({:.2},0.00) {{}};", x(j));
    }
    for &(a, b) in &caps {
        let y = 2.0 - depth(a, b);
        let _ = writeln!(
            s,
            "  \\draw (T{a}) .. controls ({:.2},{y:.2}) and ({:.2},{y:.2}) .. (T{b});",
            x(a),
            x(b)
        );
    }
    for &(i, j) in &through {
        let _ = writeln!(s, "  \\draw (T{i}) -- (B{j});");
    }
    for &(a, b) in &cups {
        let y = depth(a, b);
        let _ = writeln!(
            s,
            "  \\draw (B{a}) .. controls ({:.2},{y:.2}) and ({:.2},{y:.2}) .. (B{b});",
            x(a),
            x(b)
        );
    }
    s.push_str("\\end{tikzpicture}\n\\end{document}\n");
    s
}
