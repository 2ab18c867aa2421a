//! Diagram-to-term synthesis.
//!
//! A diagram `m > n` with `c` caps, `e` cups and `t` through threads is
//! written as `Q o cups o caps o P`: the permutation `P` brings cap partners
//! next to each other at the left and orders the through threads by their
//! bottom endpoint, `c` copies of `phi` close the caps, `e` copies of
//! `gamma` open the cups, and the permutation `Q` sends every position to
//! its bottom vertex.

use super::Term;
use crate::diagram::{Diagram, Vertex};

/// A term whose links are `Diagram::from_permutation(perm)`, built from
/// adjacent transpositions `F^i(chi_j)` by bubble sort.
pub fn permutation_term(perm: &[usize]) -> Term {
    let k = perm.len();
    let mut order = perm.to_vec();
    let mut swaps = Vec::new();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 0..k.saturating_sub(1) {
            if order[i] > order[i + 1] {
                order.swap(i, i + 1);
                swaps.push(Term::f_pow(i, Term::chi(k - i - 2)));
                sorted = false;
            }
        }
    }
    Term::chain(swaps).unwrap_or(Term::id(k))
}

/// A term whose links are exactly `(d, 0)`.
pub fn synthesize(d: &Diagram) -> Term {
    let m = d.top_count();
    let mut caps = Vec::new();
    let mut cups = Vec::new();
    let mut through = Vec::new();
    for &(a, b) in d.pairs() {
        match (a, b) {
            (Vertex::Top(i), Vertex::Top(j)) => caps.push((i, j)),
            (Vertex::Bottom(i), Vertex::Bottom(j)) => cups.push((i, j)),
            (Vertex::Top(i), Vertex::Bottom(j)) => through.push((i, j)),
            (Vertex::Bottom(_), Vertex::Top(_)) => unreachable!("pairs are canonical"),
        }
    }
    through.sort_by_key(|&(_, j)| j);
    let t = through.len();

    let top_order: Vec<usize> = caps
        .iter()
        .flat_map(|&(i, j)| [i, j])
        .chain(through.iter().map(|&(i, _)| i))
        .collect();
    let mut upper = vec![0; m];
    for (r, &v) in top_order.iter().enumerate() {
        upper[v - 1] = r + 1;
    }

    let bottom_order: Vec<usize> = cups
        .iter()
        .flat_map(|&(i, j)| [i, j])
        .chain(through.iter().map(|&(_, j)| j))
        .collect();

    let mut factors = Vec::new();
    if !is_identity(&upper) {
        factors.push(permutation_term(&upper));
    }
    factors.extend((0..caps.len()).map(|c| Term::phi(m - 2 * (c + 1))));
    factors.extend((0..cups.len()).map(|c| Term::gamma(t + 2 * c)));
    if !is_identity(&bottom_order) {
        factors.push(permutation_term(&bottom_order));
    }
    Term::chain(factors).unwrap_or(Term::id(m))
}

fn is_identity(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(i, &v)| v == i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_diagrams, WeightedDiagram};

    #[test]
    fn transposition_is_chi() {
        assert_eq!(permutation_term(&[2, 1]), Term::chi(0));
        assert_eq!(permutation_term(&[1, 3, 2]), Term::f(Term::chi(0)));
        assert_eq!(permutation_term(&[1, 2]), Term::id(2));
    }

    #[test]
    fn permutation_terms_realize_their_permutation() {
        for perm in [vec![2, 3, 1], vec![3, 2, 1], vec![4, 1, 3, 2], vec![1]] {
            let t = permutation_term(&perm);
            assert_eq!(
                t.links().unwrap(),
                WeightedDiagram::from(Diagram::from_permutation(&perm).unwrap())
            );
        }
    }

    #[test]
    fn synthesis_round_trips_small_diagrams() {
        for m in 0..=4 {
            for n in (0..=4).filter(|n| (m + n) % 2 == 0) {
                for d in enumerate_diagrams(m, n) {
                    let t = synthesize(&d);
                    assert_eq!(
                        t.links().unwrap(),
                        WeightedDiagram::from(d.clone()),
                        "{d} via {t}"
                    );
                }
            }
        }
    }
}
