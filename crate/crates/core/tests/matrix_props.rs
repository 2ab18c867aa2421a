use brauer_core::rational::int;
use brauer_core::verify::axiom_sweep;
use brauer_core::{
    kron, rank_of_span, represent, Diagram, ExactMatrix, Execution, LoopValue, Vertex,
};
use proptest::prelude::*;

fn diagram(m: usize, n: usize) -> impl Strategy<Value = Diagram> {
    let vertices: Vec<Vertex> = (1..=m)
        .map(Vertex::Top)
        .chain((1..=n).map(Vertex::Bottom))
        .collect();
    Just(vertices).prop_shuffle().prop_map(move |v| {
        let pairs: Vec<_> = v.chunks(2).map(|c| (c[0], c[1])).collect();
        Diagram::new(m, n, pairs).unwrap()
    })
}

fn small_int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

fn exact(rows: &[Vec<i64>]) -> ExactMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    let mut entries = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            entries.push((i, j, int(v)));
        }
    }
    ExactMatrix::from_entries(rows.len(), cols, entries).unwrap()
}

/// Fraction-free (Bareiss) elimination over i128.
fn bareiss_rank(mut a: Vec<Vec<i128>>) -> usize {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

fn p(v: u32) -> LoopValue {
    LoopValue::new(v).unwrap()
}

proptest! {
    #[test]
    fn transpose_commutes_with_representation(
        d in (0..=4usize, 0..=4usize).prop_filter("even", |(m, n)| (m + n) % 2 == 0)
            .prop_flat_map(|(m, n)| diagram(m, n)),
        pv in 1..=3u32,
    ) {
        prop_assert_eq!(represent(&d.transpose().into(), p(pv)), represent(&d.into(), p(pv)).transpose());
    }

    #[test]
    fn mixed_product_law(
        (a, b, c, e) in (1..=3usize, 1..=3usize, 1..=3usize).prop_flat_map(|(x, y, z)| (
            small_int_matrix(x, y), small_int_matrix(y, z), small_int_matrix(2, x), small_int_matrix(z, 2),
        ))
    ) {
        // (A (x) C)(B (x) E) = AB (x) CE, with shapes chosen so both sides exist.
        let (a, b, c, e) = (exact(&a), exact(&b), exact(&c).transpose(), exact(&e).transpose());
        let left = kron(&a, &c).mul(&kron(&b, &e)).unwrap();
        let right = kron(&a.mul(&b).unwrap(), &c.mul(&e).unwrap());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rank_matches_integer_elimination(
        mats in (1..=6usize, 1..=3usize, 1..=3usize)
            .prop_flat_map(|(k, r, c)| prop::collection::vec(small_int_matrix(r, c), k))
    ) {
        let flat: Vec<Vec<i128>> =
            mats.iter().map(|m| m.iter().flatten().map(|&v| i128::from(v)).collect()).collect();
        let exacts: Vec<ExactMatrix> = mats.iter().map(|m| exact(m)).collect();
        prop_assert_eq!(rank_of_span(&exacts).unwrap(), bareiss_rank(flat));
    }
}

#[test]
fn laws_hold_as_matrices_up_to_power_three() {
    let report = axiom_sweep(3, &[p(1), p(2), p(3)], Execution::default());
    assert!(report.all_pass(), "{report}");
}

#[test]
fn loop_factor_survives_representation() {
    // phi o gamma is a closed loop, represented by the 1x1 matrix [p].
    let cup_then_cap = brauer_core::compose(&Diagram::cup(), &Diagram::cap()).unwrap();
    assert_eq!(cup_then_cap.loops, 1);
    assert_eq!(represent(&cup_then_cap, p(3)), ExactMatrix::scalar(int(3)));
}
