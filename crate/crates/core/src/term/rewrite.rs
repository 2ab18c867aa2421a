//! One-step rewriting modulo associativity of composition.

use super::Term;

/// Every term obtained from `term` by replacing one occurrence of `lhs`
/// with `rhs`. Composition chains are matched as flat factor lists, so a
/// redex may span any contiguous run of factors regardless of how the chain
/// is parenthesized. Rewritten chains are rebuilt right-associated.
pub fn rewrites(term: &Term, lhs: &Term, rhs: &Term) -> Vec<Term> {
    let chain: Vec<Term> = term.factors().into_iter().cloned().collect();
    let pattern: Vec<&Term> = lhs.factors();
    let replacement: Vec<Term> = rhs.factors().into_iter().cloned().collect();
    let mut out = Vec::new();

    if pattern.len() <= chain.len() {
        for start in 0..=chain.len() - pattern.len() {
            let window = &chain[start..start + pattern.len()];
            if window.iter().zip(&pattern).all(|(a, b)| a == *b) {
                let spliced = chain[..start]
                    .iter()
                    .cloned()
                    .chain(replacement.iter().cloned())
                    .chain(chain[start + pattern.len()..].iter().cloned());
                out.push(Term::chain(spliced).expect("non-empty chain"));
            }
        }
    }

    for (i, factor) in chain.iter().enumerate() {
        if let Term::FApp(inner) = factor {
            for r in rewrites(inner, lhs, rhs) {
                let mut next = chain.clone();
                next[i] = Term::f(r);
                out.push(Term::chain(next).expect("non-empty chain"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    fn t(s: &str) -> Term {
        parse(s).unwrap()
    }

    #[test]
    fn matches_across_parenthesization() {
        let lhs = t("chi_0 o chi_0");
        let rhs = t("id_2");
        let out = rewrites(&t("phi_0 o ((chi_0 o chi_0) o gamma_0)"), &lhs, &rhs);
        assert_eq!(out, vec![t("phi_0 o id_2 o gamma_0")]);
        let out = rewrites(&t("(phi_0 o chi_0) o (chi_0 o gamma_0)"), &lhs, &rhs);
        assert_eq!(out, vec![t("phi_0 o id_2 o gamma_0")]);
    }

    #[test]
    fn rewrites_under_f() {
        let out = rewrites(&t("F(phi_0 o chi_0)"), &t("phi_0 o chi_0"), &t("phi_0"));
        assert_eq!(out, vec![t("F(phi_0)")]);
    }

    #[test]
    fn overlapping_redexes_each_produce_a_result() {
        let out = rewrites(&t("chi_0 o chi_0 o chi_0"), &t("chi_0 o chi_0"), &t("id_2"));
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn no_redex_no_result() {
        assert!(rewrites(&t("phi_0"), &t("chi_0 o chi_0"), &t("id_2")).is_empty());
    }
}
