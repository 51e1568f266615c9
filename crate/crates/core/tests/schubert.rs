use std::collections::BTreeMap;

use plactic::schubert::{
    admissible_left_chains, admissible_right_chains, chain_counts, count_chains, expand_schubert_with,
    has_separated_descents, product_of_grassmannian_lines, schubert_bpd, schubert_divdiff, separated_descent_constant,
    separated_descent_constant_with, SchubertCache,
};
use plactic::{Bpd, IntPolynomial, Permutation};

#[test]
fn two_models_agree_on_s5() {
    for p in Permutation::all(5) {
        assert_eq!(schubert_bpd(&p), schubert_divdiff(&p), "{p}");
    }
}

#[test]
fn droop_closure_matches_exhaustive_search() {
    for n in 1..=4 {
        for p in Permutation::all(n) {
            assert_eq!(Bpd::all(&p), Bpd::all_exhaustive(&p), "{p}");
        }
    }
}

#[test]
fn code_monomial_is_lex_smallest() {
    let mut cache = SchubertCache::new();
    for p in Permutation::all(5) {
        let s = cache.get(&p);
        let (m, c) = s.terms().next().unwrap();
        assert_eq!((m.exponents().to_vec(), c), (trimmed(p.code()), 1), "{p}");
    }
}

fn trimmed(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[test]
fn simple_transposition_polynomials() {
    for k in 1..=5 {
        let line: IntPolynomial = (1..=k).map(IntPolynomial::var).sum();
        assert_eq!(schubert_bpd(&Permutation::simple(k)), line);
    }
}

#[test]
fn products_expand_nonnegatively() {
    let mut cache = SchubertCache::new();
    let perms = Permutation::all(4);
    for p in &perms {
        for r in &perms {
            let f = &cache.get(p) * &cache.get(r);
            let expansion = expand_schubert_with(&f, &mut cache).unwrap();
            assert!(expansion.values().all(|&c| c > 0), "{p} * {r}: {expansion:?}");
            let back: IntPolynomial = expansion.iter().map(|(w, &c)| cache.get(w).scale(c)).sum();
            assert_eq!(back, f);
        }
    }
}

#[test]
fn product_of_lines_counts_chains() {
    let mut cache = SchubertCache::new();
    for m in 0..=4u32 {
        for idx in 0..3usize.pow(m) {
            let labels: Vec<usize> = (0..m).map(|t| idx / 3usize.pow(t) % 3 + 1).collect();
            let f = product_of_grassmannian_lines(&labels);
            let expansion = expand_schubert_with(&f, &mut cache).unwrap();
            let counts: BTreeMap<Permutation, i64> =
                chain_counts(&labels).into_iter().map(|(p, c)| (p, c as i64)).collect();
            assert_eq!(expansion, counts, "{labels:?}");
            for (p, c) in &counts {
                assert_eq!(count_chains(p, &labels) as i64, *c);
            }
        }
    }
}

#[test]
fn count_chains_edge_cases() {
    assert_eq!(count_chains(&Permutation::simple(3), &[3]), 1);
    assert_eq!(count_chains(&Permutation::simple(3), &[]), 0);
    assert_eq!(count_chains(&Permutation::identity(), &[]), 1);
}

#[test]
fn separated_descent_rule_on_s4() {
    let mut cache = SchubertCache::new();
    let perms = Permutation::all(4);
    let mut checked = 0;
    for p in &perms {
        for r in perms.iter().filter(|r| has_separated_descents(p, r)) {
            let f = &cache.get(p) * &cache.get(r);
            let expansion = expand_schubert_with(&f, &mut cache).unwrap();
            let left = admissible_left_chains(p);
            let right = admissible_right_chains(r);
            assert!(!left.is_empty() && !right.is_empty());
            let mut targets: Vec<Permutation> = expansion.keys().cloned().collect();
            targets.extend(perms.iter().filter(|s| s.length() == p.length() + r.length()).cloned());
            targets.sort();
            targets.dedup();
            for s in &targets {
                let want = expansion.get(s).copied().unwrap_or(0) as u64;
                assert_eq!(separated_descent_constant(p, r, s).unwrap(), want, "c({p},{r};{s})");
                for d in Bpd::all(s) {
                    for cp in &left {
                        for cr in &right {
                            let got = separated_descent_constant_with(p, r, &d, cp, cr).unwrap();
                            assert_eq!(got, want, "c({p},{r};{s}) with {d:?}, {cp}, {cr}");
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}
