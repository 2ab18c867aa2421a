use std::hint::black_box;

use brauer_core::diagram::enumerate_diagrams_with;
use brauer_core::rep::faithfulness_report_with;
use brauer_core::term::verify_axioms_with;
use brauer_core::verify::{axiom_sweep, commutant_sweep, functor_sweep, two_path_sweep};
use brauer_core::{Execution, LoopValue};
use criterion::{criterion_group, criterion_main, Criterion};

const STRATEGIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn p(v: u32) -> LoopValue {
    LoopValue::new(v).unwrap()
}

fn compare(c: &mut Criterion, name: &str, run: impl Fn(Execution)) {
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    for (label, exec) in STRATEGIES {
        group.bench_function(label, |b| b.iter(|| run(black_box(exec))));
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    compare(c, "enumerate 5>5", |e| {
        black_box(enumerate_diagrams_with(5, 5, e));
    });
    compare(c, "functor sizes<=3 p=3", |e| {
        black_box(functor_sweep(3, p(3), e));
    });
    compare(c, "commutant n=3 p=3", |e| {
        black_box(commutant_sweep(3, p(3), e));
    });
    compare(c, "axioms links power<=4", |e| {
        black_box(verify_axioms_with(4, e));
    });
    compare(c, "axioms matrices power<=3 p=1,2,3", |e| {
        black_box(axiom_sweep(3, &[p(1), p(2), p(3)], e));
    });
    compare(c, "two-path 200 terms", |e| {
        black_box(two_path_sweep(200, 6, &[p(1), p(2), p(3)], 1, e));
    });
    compare(c, "faithfulness n=4 p=3", |e| {
        black_box(faithfulness_report_with(4, p(3), false, e).unwrap());
    });
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
