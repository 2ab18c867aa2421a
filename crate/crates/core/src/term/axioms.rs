//! Instances of the defining equations of a symmetric self-adjunction and of
//! the naturality of `phi`, `gamma` and `chi`, checked through links.

use std::fmt;

use super::{terms_equal, CheckedTerm, Term};
use crate::par::Execution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `phi_{FA} o F gamma_A = 1_{FA}`
    TriangularCounit,
    /// `F phi_A o gamma_{FA} = 1_{FA}`
    TriangularUnit,
    /// `chi_A o chi_A = 1_{FFA}`
    Involution,
    /// `chi_{FA} o F chi_A o chi_{FA} = F chi_A o chi_{FA} o F chi_A`
    Braid,
    /// `phi_A o chi_A = phi_A`
    CounitAbsorbs,
    /// `chi_A o gamma_A = gamma_A`
    UnitAbsorbs,
    /// `phi_{FA} o F chi_A = F phi_A o chi_{FA}`
    CounitSlide,
    /// `chi_{FA} o F gamma_A = F chi_A o gamma_{FA}`
    UnitSlide,
    NaturalityPhi,
    NaturalityGamma,
    NaturalityChi,
}

impl Law {
    /// The eight equations of a symmetric self-adjunction, in a fixed order.
    pub const EQUATIONS: [Law; 8] = [
        Law::TriangularCounit,
        Law::TriangularUnit,
        Law::Involution,
        Law::Braid,
        Law::CounitAbsorbs,
        Law::UnitAbsorbs,
        Law::CounitSlide,
        Law::UnitSlide,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::TriangularCounit => "triangular-counit",
            Law::TriangularUnit => "triangular-unit",
            Law::Involution => "involution",
            Law::Braid => "braid",
            Law::CounitAbsorbs => "counit-absorbs",
            Law::UnitAbsorbs => "unit-absorbs",
            Law::CounitSlide => "counit-slide",
            Law::UnitSlide => "unit-slide",
            Law::NaturalityPhi => "natural-phi",
            Law::NaturalityGamma => "natural-gamma",
            Law::NaturalityChi => "natural-chi",
        }
    }

    /// Both sides of one of the eight equations at object `F^n a`.
    /// Returns `None` for the naturality laws, which need an arrow.
    pub fn instance(self, n: usize) -> Option<(Term, Term)> {
        use Term as T;
        let (phi, gamma, chi, f, c) = (T::phi, T::gamma, T::chi, T::f, T::comp);
        Some(match self {
            Law::TriangularCounit => (c(phi(n + 1), f(gamma(n))), T::id(n + 1)),
            Law::TriangularUnit => (c(f(phi(n)), gamma(n + 1)), T::id(n + 1)),
            Law::Involution => (c(chi(n), chi(n)), T::id(n + 2)),
            Law::Braid => (
                c(chi(n + 1), c(f(chi(n)), chi(n + 1))),
                c(f(chi(n)), c(chi(n + 1), f(chi(n)))),
            ),
            Law::CounitAbsorbs => (c(phi(n), chi(n)), phi(n)),
            Law::UnitAbsorbs => (c(chi(n), gamma(n)), gamma(n)),
            Law::CounitSlide => (c(phi(n + 1), f(chi(n))), c(f(phi(n)), chi(n + 1))),
            Law::UnitSlide => (c(chi(n + 1), f(gamma(n))), c(f(chi(n)), gamma(n + 1))),
            Law::NaturalityPhi | Law::NaturalityGamma | Law::NaturalityChi => return None,
        })
    }

    /// The naturality square of a transformation at `arrow: a -> b`.
    pub fn naturality(self, arrow: &CheckedTerm) -> Option<(Term, Term)> {
        let (a, b) = (arrow.source().0, arrow.target().0);
        let f = arrow.term().clone();
        let ff = Term::f_pow(2, f.clone());
        Some(match self {
            Law::NaturalityPhi => (Term::comp(f, Term::phi(a)), Term::comp(Term::phi(b), ff)),
            Law::NaturalityGamma => (
                Term::comp(ff, Term::gamma(a)),
                Term::comp(Term::gamma(b), f),
            ),
            Law::NaturalityChi => (
                Term::comp(ff.clone(), Term::chi(a)),
                Term::comp(Term::chi(b), ff),
            ),
            _ => return None,
        })
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct AxiomInstance {
    pub law: Law,
    /// Object power for the eight equations; source power of the arrow for
    /// naturality squares.
    pub power: usize,
    pub lhs: Term,
    pub rhs: Term,
    pub holds: bool,
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub instances: Vec<AxiomInstance>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.instances.iter().all(|i| i.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomInstance> {
        self.instances.iter().filter(|i| !i.holds)
    }

    pub fn count(&self, law: Law) -> usize {
        self.instances.iter().filter(|i| i.law == law).count()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.instances {
            writeln!(
                f,
                "{:<4} {:<18} n={:<2} {} = {}",
                if i.holds { "PASS" } else { "FAIL" },
                i.law.name(),
                i.power,
                i.lhs,
                i.rhs
            )?;
        }
        let failed = self.failures().count();
        write!(f, "{} instances, {} failed", self.instances.len(), failed)
    }
}

/// Generator arrows `F^k phi_j`, `F^k gamma_j`, `F^k chi_j` and their
/// composites of up to three factors, restricted to objects of power at most
/// `max_power`.
pub fn naturality_universe(max_power: usize) -> Vec<CheckedTerm> {
    let mut generators = Vec::new();
    for k in 0..=max_power {
        for j in 0..=max_power {
            if k + j + 2 > max_power {
                continue;
            }
            for g in [Term::phi(j), Term::gamma(j), Term::chi(j)] {
                generators.push(Term::f_pow(k, g).check().expect("generator typechecks"));
            }
        }
    }
    let mut out: Vec<CheckedTerm> = generators.clone();
    let mut frontier = generators.clone();
    for _ in 1..3 {
        let mut next = Vec::new();
        for inner in &frontier {
            for outer in generators.iter().filter(|g| g.source() == inner.target()) {
                let t = Term::comp(outer.term().clone(), inner.term().clone())
                    .check()
                    .expect("matching interface");
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Checks every law instance up to `max_power`: the eight equations at each
/// power `0..=max_power`, and naturality of the three transformations at
/// every arrow of [`naturality_universe`].
pub fn verify_axioms(max_power: usize) -> AxiomReport {
    verify_axioms_with(max_power, Execution::default())
}

pub fn verify_axioms_with(max_power: usize, exec: Execution) -> AxiomReport {
    let mut cases: Vec<(Law, usize, Term, Term)> = Vec::new();
    for n in 0..=max_power {
        for law in Law::EQUATIONS {
            let (lhs, rhs) = law.instance(n).expect("equation law");
            cases.push((law, n, lhs, rhs));
        }
    }
    for arrow in naturality_universe(max_power) {
        for law in [Law::NaturalityPhi, Law::NaturalityGamma, Law::NaturalityChi] {
            let (lhs, rhs) = law.naturality(&arrow).expect("naturality law");
            cases.push((law, arrow.source().0, lhs, rhs));
        }
    }
    let instances = exec.map(&cases, |(law, power, lhs, rhs)| AxiomInstance {
        law: *law,
        power: *power,
        holds: terms_equal(lhs, rhs).unwrap_or(false),
        lhs: lhs.clone(),
        rhs: rhs.clone(),
    });
    AxiomReport { instances }
}
