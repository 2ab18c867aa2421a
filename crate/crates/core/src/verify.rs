//! Batch law checks: functoriality of the representation, commutation with
//! orthogonal tensor powers, and the self-adjunction equations in matrices.
//!
//! Each sweep builds its list of independent instances up front and maps
//! over it with an [`Execution`] strategy; outcomes keep instance order.

use std::fmt;

use rand::SeedableRng;

use crate::algebra::LoopValue;
use crate::diagram::{compose, enumerate_diagrams, Diagram};
use crate::par::Execution;
use crate::rep::{commutant_check, orthogonal_battery, rep_checked_term, represent};
use crate::term::{random_term, verify_axioms_with, Law};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: String,
    pub outcomes: Vec<Outcome>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failed(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed).count()
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{}  {}", if o.passed { "PASS" } else { "FAIL" }, o.label)?;
        }
        write!(
            f,
            "{}: {} checks, {} failed",
            self.suite,
            self.outcomes.len(),
            self.failed()
        )
    }
}

/// All composable pairs `(d1: m > n, d2: n > q)` with every row size at most
/// `max_size`.
pub fn composable_pairs(max_size: usize) -> Vec<(Diagram, Diagram)> {
    let mut out = Vec::new();
    for m in 0..=max_size {
        for n in 0..=max_size {
            let upper = enumerate_diagrams(m, n);
            if upper.is_empty() {
                continue;
            }
            for q in 0..=max_size {
                let lower = enumerate_diagrams(n, q);
                for d1 in &upper {
                    for d2 in &lower {
                        out.push((d1.clone(), d2.clone()));
                    }
                }
            }
        }
    }
    out
}

/// `R(d2 o d1) = R(d2) R(d1)`, including the `p^k` factor, for every
/// composable pair up to `max_size`.
pub fn functor_sweep(max_size: usize, p: LoopValue, exec: Execution) -> CheckReport {
    let pairs = composable_pairs(max_size);
    let outcomes = exec.map(&pairs, |(d1, d2)| {
        let composite = compose(d1, d2).expect("composable by construction");
        let lhs = represent(&composite, p);
        let rhs = &represent(&d2.clone().into(), p) * &represent(&d1.clone().into(), p);
        Outcome {
            label: format!("p={p} {d1} ; {d2}"),
            passed: lhs == rhs,
        }
    });
    CheckReport {
        suite: format!("functor (sizes <= {max_size}, p={p})"),
        outcomes,
    }
}

/// Every `n`-diagram commutes with `G^{(x)n}` for each matrix of the
/// orthogonal battery.
pub fn commutant_sweep(n: usize, p: LoopValue, exec: Execution) -> CheckReport {
    let battery = orthogonal_battery(p);
    let cases: Vec<(Diagram, usize)> = enumerate_diagrams(n, n)
        .into_iter()
        .flat_map(|d| (0..battery.len()).map(move |g| (d.clone(), g)))
        .collect();
    let outcomes = exec.map(&cases, |(d, g)| Outcome {
        label: format!("p={p} G#{g} {d}"),
        passed: commutant_check(d, &battery[*g], p).unwrap_or(false),
    });
    CheckReport {
        suite: format!("commutant (n={n}, p={p}, {} matrices)", battery.len()),
        outcomes,
    }
}

/// Every law instance up to `max_power` through links, and, for each loop
/// value in `ps`, the same instance as an exact matrix identity.
pub fn axiom_sweep(max_power: usize, ps: &[LoopValue], exec: Execution) -> CheckReport {
    axiom_sweep_filtered(max_power, ps, exec, |_| true)
}

/// As [`axiom_sweep`], restricted to the eight defining equations.
pub fn equation_sweep(max_power: usize, ps: &[LoopValue], exec: Execution) -> CheckReport {
    axiom_sweep_filtered(max_power, ps, exec, |law| Law::EQUATIONS.contains(&law))
}

fn axiom_sweep_filtered(
    max_power: usize,
    ps: &[LoopValue],
    exec: Execution,
    keep: impl Fn(Law) -> bool,
) -> CheckReport {
    let report = verify_axioms_with(max_power, exec);
    let instances: Vec<_> = report
        .instances
        .into_iter()
        .filter(|i| keep(i.law))
        .collect();
    let mut outcomes: Vec<Outcome> = instances
        .iter()
        .map(|i| Outcome {
            label: format!("links {} n={} {} = {}", i.law, i.power, i.lhs, i.rhs),
            passed: i.holds,
        })
        .collect();
    let cases: Vec<(usize, LoopValue)> = ps
        .iter()
        .flat_map(|&p| (0..instances.len()).map(move |i| (i, p)))
        .collect();
    outcomes.extend(exec.map(&cases, |&(idx, p)| {
        let i = &instances[idx];
        let lhs = i.lhs.clone().check().map(|t| rep_checked_term(&t, p));
        let rhs = i.rhs.clone().check().map(|t| rep_checked_term(&t, p));
        Outcome {
            label: format!("matrix p={p} {} n={} {} = {}", i.law, i.power, i.lhs, i.rhs),
            passed: matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b),
        }
    }));
    CheckReport {
        suite: format!("axioms (powers <= {max_power})"),
        outcomes,
    }
}

/// `rep_term(t) = represent(links(t))` on `count` random terms of depth at
/// most `max_depth`, cycling through the loop values in `ps`.
pub fn two_path_sweep(
    count: usize,
    max_depth: usize,
    ps: &[LoopValue],
    seed: u64,
    exec: Execution,
) -> CheckReport {
    use rand::Rng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let cases: Vec<_> = (0..count)
        .map(|k| {
            let source = rng.gen_range(0..=3);
            (
                random_term(&mut rng, max_depth, source, 6),
                ps[k % ps.len()],
            )
        })
        .collect();
    let outcomes = exec.map(&cases, |(t, p)| Outcome {
        label: format!("p={p} {}", t.term()),
        passed: rep_checked_term(t, *p) == represent(&t.links(), *p),
    });
    CheckReport {
        suite: format!("two-path ({count} terms, depth <= {max_depth})"),
        outcomes,
    }
}
