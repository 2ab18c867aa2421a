use rand::Rng;

use super::{CheckedTerm, Obj, Term};

/// A random well-typed term with the given source, AST depth at most
/// `max_depth`, and every intermediate object of power at most `max_power`.
pub fn random_term<R: Rng + ?Sized>(
    rng: &mut R,
    max_depth: usize,
    source: usize,
    max_power: usize,
) -> CheckedTerm {
    assert!(max_depth >= 1 && source <= max_power);
    let (t, _) = gen(rng, max_depth, source, max_power);
    t.check().expect("generator only builds well-typed terms")
}

fn gen<R: Rng + ?Sized>(
    rng: &mut R,
    depth: usize,
    source: usize,
    max_power: usize,
) -> (Term, usize) {
    if depth > 1 {
        match rng.gen_range(0..5) {
            0 | 1 => {
                let (inner, mid) = gen(rng, depth - 1, source, max_power);
                let (outer, target) = gen(rng, depth - 1, mid, max_power);
                return (Term::comp(outer, inner), target);
            }
            2 if source >= 1 => {
                let (inner, target) = gen(rng, depth - 1, source - 1, max_power - 1);
                return (Term::f(inner), target + 1);
            }
            _ => {}
        }
    }
    atom(rng, source, max_power)
}

fn atom<R: Rng + ?Sized>(rng: &mut R, source: usize, max_power: usize) -> (Term, usize) {
    let mut choices: Vec<(Term, usize)> = Vec::with_capacity(4);
    if source >= 2 {
        choices.push((Term::Phi(Obj(source - 2)), source - 2));
        choices.push((Term::Chi(Obj(source - 2)), source));
    }
    if source + 2 <= max_power {
        choices.push((Term::Gamma(Obj(source)), source + 2));
    }
    if choices.is_empty() {
        return (Term::Id(Obj(source)), source);
    }
    let i = rng.gen_range(0..choices.len());
    choices.swap_remove(i)
}
