//! Schubert polynomials, the chain-counting product rule, and structure
//! constants for separated descents.

use std::collections::{BTreeMap, HashMap};

use crate::bpd::Bpd;
use crate::error::{Error, Result};
use crate::insertion::{inverse_left, inverse_right, phi, PlacticBiword};
use crate::perm::{DecoratedChain, Permutation};
use crate::poly::{IntPolynomial, Monomial};

/// Sum of the weights of all pipe dreams of `p`.
pub fn schubert_bpd(p: &Permutation) -> IntPolynomial {
    let mut out = IntPolynomial::zero();
    for d in Bpd::all(p) {
        out.add_term(d.weight(), 1);
    }
    out
}

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
fn staircase(n: usize) -> IntPolynomial {
    IntPolynomial::from_monomial(Monomial::new((1..n).rev().collect()))
}

/// A reduced word of `u`, read so that `u = s_{w[0]} s_{w[1]} ...`. Right
/// descents are peeled off one at a time, the first or last available one
/// depending on `last`.
fn reduced_word(u: &Permutation, last: bool) -> Vec<usize> {
    let mut cur = u.clone();
    let mut word = Vec::new();
    loop {
        let des = cur.descents();
        let Some(&i) = (if last { des.last() } else { des.first() }) else { break };
        word.push(i);
        cur = cur.transpose(i, i + 1);
    }
    word.reverse();
    word
}

/// Applies `∂_u` for `u = s_{w[0]} s_{w[1]} ...`: the rightmost operator acts first.
fn apply_word(f: &IntPolynomial, word: &[usize]) -> IntPolynomial {
    word.iter().rev().fold(f.clone(), |g, &i| g.divided_difference(i))
}

/// `∂_{p^{-1} w_0}` applied to the staircase monomial, computed along two
/// different reduced words which must agree.
pub fn schubert_divdiff(p: &Permutation) -> IntPolynomial {
    let n = p.size();
    if n == 0 {
        return IntPolynomial::one();
    }
    let u = p.inverse().compose(&Permutation::longest(n));
    let top = staircase(n);
    let a = apply_word(&top, &reduced_word(&u, false));
    let b = apply_word(&top, &reduced_word(&u, true));
    assert_eq!(a, b, "divided differences depend on the reduced word for {p}");
    a
}

/// Memoized Schubert polynomials: `S_w = ∂_i S_{w s_i}` at the first ascent i.
#[derive(Default)]
pub struct SchubertCache {
    memo: HashMap<Permutation, IntPolynomial>,
}

impl SchubertCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, w: &Permutation) -> IntPolynomial {
        if let Some(f) = self.memo.get(w) {
            return f.clone();
        }
        let n = w.size();
        let f = match (1..n).find(|&i| w.apply(i) < w.apply(i + 1)) {
            None => staircase(n),
            Some(i) => self.get(&w.transpose(i, i + 1)).divided_difference(i),
        };
        self.memo.insert(w.clone(), f.clone());
        f
    }
}

/// Largest window searched by [`expand_schubert`].
pub const EXPANSION_CAP: usize = 12;

/// Coefficients of `f` in the Schubert basis.
///
/// The lexicographically smallest monomial of `S_w` is `x^{code(w)}`, so
/// repeatedly removing the smallest remaining monomial solves the triangular
/// system exactly.
pub fn expand_schubert(f: &IntPolynomial) -> Result<BTreeMap<Permutation, i64>> {
    expand_schubert_with(f, &mut SchubertCache::new())
}

pub fn expand_schubert_with(f: &IntPolynomial, cache: &mut SchubertCache) -> Result<BTreeMap<Permutation, i64>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    loop {
        let Some((m, c)) = rest.terms().next().map(|(m, c)| (m.clone(), c)) else { break };
        let w = Permutation::from_code(m.exponents())?;
        if w.size() > EXPANSION_CAP {
            return Err(Error::NoExpansion(EXPANSION_CAP));
        }
        let s = cache.get(&w);
        if s.terms().next().map(|(lead, _)| lead) != Some(&m) {
            return Err(Error::NoExpansion(w.size()));
        }
        rest = &rest - &s.scale(c);
        out.insert(w, c);
    }
    Ok(out)
}

/// Number of chains `id ⋖_{k_1} π_1 ⋖_{k_2} ... ⋖_{k_m} p`.
pub fn count_chains(p: &Permutation, labels: &[usize]) -> u64 {
    if labels.len() != p.length() {
        return 0;
    }
    let mut layer: HashMap<Permutation, u64> = HashMap::from([(Permutation::identity(), 1)]);
    for &k in labels {
        let mut next: HashMap<Permutation, u64> = HashMap::new();
        for (w, c) in &layer {
            for cov in w.k_bruhat_covers(k) {
                let v = w.transpose(cov.alpha, cov.beta);
                if v.bruhat_le(p) {
                    *next.entry(v).or_default() += c;
                }
            }
        }
        layer = next;
    }
    layer.get(p).copied().unwrap_or(0)
}

/// For every endpoint, the number of chains from the identity with the given
/// labels.
pub fn chain_counts(labels: &[usize]) -> BTreeMap<Permutation, u64> {
    let mut layer: BTreeMap<Permutation, u64> = BTreeMap::from([(Permutation::identity(), 1)]);
    for &k in labels {
        let mut next: BTreeMap<Permutation, u64> = BTreeMap::new();
        for (w, c) in &layer {
            for cov in w.k_bruhat_covers(k) {
                *next.entry(w.transpose(cov.alpha, cov.beta)).or_default() += c;
            }
        }
        layer = next;
    }
    layer
}

/// `S_{k_1} ... S_{k_m}` with `S_k = x_1 + ... + x_k`.
pub fn product_of_grassmannian_lines(labels: &[usize]) -> IntPolynomial {
    labels.iter().fold(IntPolynomial::one(), |acc, &k| {
        let line: IntPolynomial = (1..=k).map(IntPolynomial::var).sum();
        &acc * &line
    })
}

/// Chains from the identity to `p` whose labels are monotone and bounded by
/// `bound`: weakly increasing and at least `bound` if `increasing`, weakly
/// decreasing and at most `bound` otherwise. Sorted by label sequence.
fn monotone_chains(p: &Permutation, bound: usize, increasing: bool) -> Vec<DecoratedChain> {
    let len = p.length();
    let max_k = p.size().saturating_sub(1);
    let mut out = Vec::new();
    let mut stack = vec![DecoratedChain::new(Permutation::identity())];
    while let Some(ch) = stack.pop() {
        if ch.len() == len {
            if ch.end() == *p {
                out.push(ch);
            }
            continue;
        }
        let prev = ch.labels().last().copied();
        let range: Vec<usize> = if increasing {
            (prev.unwrap_or(bound).max(bound)..=max_k).collect()
        } else {
            (1..=prev.unwrap_or(bound).min(bound).min(max_k)).collect()
        };
        let end = ch.end();
        for k in range {
            for cov in end.k_bruhat_covers(k) {
                if end.transpose(cov.alpha, cov.beta).bruhat_le(p) {
                    let mut next = ch.clone();
                    next.steps.push(cov);
                    stack.push(next);
                }
            }
        }
    }
    out.sort_by_key(|c| (c.labels(), c.perms()));
    out
}

/// Chains `id ⋖_{k_1} ... p` with `d_1(p) <= k_1 <= k_2 <= ...`.
pub fn admissible_left_chains(p: &Permutation) -> Vec<DecoratedChain> {
    match p.d1() {
        Ok(d) => monotone_chains(p, d, true),
        Err(_) => vec![DecoratedChain::new(Permutation::identity())],
    }
}

/// Chains `id ⋖_{m_1} ... p` with `d_2(p) >= m_1 >= m_2 >= ...`.
pub fn admissible_right_chains(p: &Permutation) -> Vec<DecoratedChain> {
    match p.d2() {
        Ok(d) => monotone_chains(p, d, false),
        Err(_) => vec![DecoratedChain::new(Permutation::identity())],
    }
}

/// Whether `d_1(p) >= d_2(r)`, reading the first descent of the identity as
/// infinite and the last descent of the identity as zero.
pub fn has_separated_descents(p: &Permutation, r: &Permutation) -> bool {
    match (p.d1(), r.d2()) {
        (Ok(a), Ok(b)) => a >= b,
        _ => true,
    }
}

/// The structure constant `c_{p,r}^s` for `d_1(p) >= d_2(r)`, using the Rothe
/// pipe dream of `s` and the first admissible chains.
pub fn separated_descent_constant(p: &Permutation, r: &Permutation, s: &Permutation) -> Result<u64> {
    if !has_separated_descents(p, r) {
        return Err(Error::DescentConditionViolated);
    }
    if s.length() != p.length() + r.length() {
        return Ok(0);
    }
    let ch_p = admissible_left_chains(p).into_iter().next().ok_or(Error::NoAdmissibleChain)?;
    let ch_r = admissible_right_chains(r).into_iter().next().ok_or(Error::NoAdmissibleChain)?;
    separated_descent_constant_with(p, r, &Bpd::rothe(s), &ch_p, &ch_r)
}

/// Counts pairs `(Q_p, Q_r)` with the given recording chains and
/// `φ(Q_p Q_r) = d`.
pub fn separated_descent_constant_with(
    p: &Permutation,
    r: &Permutation,
    d: &Bpd,
    ch_p: &DecoratedChain,
    ch_r: &DecoratedChain,
) -> Result<u64> {
    if !has_separated_descents(p, r) {
        return Err(Error::DescentConditionViolated);
    }
    if d.perm().length() != p.length() + r.length() {
        return Ok(0);
    }
    let left = words_with_chain(p, |dp| inverse_left(dp, ch_p))?;
    let right = words_with_chain(r, |dr| inverse_right(dr, ch_r))?;
    let mut count = 0;
    for qp in &left {
        for qr in &right {
            if phi(&qp.concat(qr)?) == *d {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Inverts every pipe dream of `p` along a fixed chain. A pipe dream with no
/// preimage along the chain contributes nothing.
fn words_with_chain(p: &Permutation, invert: impl Fn(&Bpd) -> Result<PlacticBiword>) -> Result<Vec<PlacticBiword>> {
    let mut out = Vec::new();
    for dp in Bpd::all(p) {
        match invert(&dp) {
            Ok(q) => out.push(q),
            Err(Error::NoPreimage) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn x(i: usize) -> IntPolynomial {
        IntPolynomial::var(i)
    }

    #[test]
    fn small_schuberts() {
        assert_eq!(schubert_divdiff(&Permutation::identity()), IntPolynomial::one());
        assert_eq!(schubert_divdiff(&perm("321")), &(&x(1) * &x(1)) * &x(2));
        assert_eq!(schubert_divdiff(&perm("213")), x(1));
        assert_eq!(schubert_divdiff(&perm("132")), &x(1) + &x(2));
        assert_eq!(schubert_bpd(&perm("1243")), &(&x(1) + &x(2)) + &x(3));
    }

    #[test]
    fn cache_agrees_with_divdiff() {
        let mut cache = SchubertCache::new();
        for w in Permutation::all(4) {
            assert_eq!(cache.get(&w), schubert_divdiff(&w), "{w}");
        }
    }

    #[test]
    fn expansions() {
        let sq = &x(1) * &x(1);
        assert_eq!(expand_schubert(&sq).unwrap(), BTreeMap::from([(perm("312"), 1)]));
        let f = schubert_divdiff(&perm("1432"));
        assert_eq!(expand_schubert(&f).unwrap(), BTreeMap::from([(perm("1432"), 1)]));
    }

    #[test]
    fn chain_counting() {
        assert_eq!(count_chains(&perm("1243"), &[3]), 1);
        assert_eq!(count_chains(&perm("1243"), &[3, 3]), 0);
        assert_eq!(count_chains(&perm("312"), &[1, 1]), 1);
    }

    #[test]
    fn constant_for_square_of_s1() {
        let s1 = perm("213");
        assert_eq!(separated_descent_constant(&s1, &s1, &perm("312")).unwrap(), 1);
        assert_eq!(separated_descent_constant(&s1, &s1, &perm("321")).unwrap(), 0);
        assert!(matches!(
            separated_descent_constant(&perm("132"), &perm("1243"), &perm("1342")),
            Err(Error::DescentConditionViolated)
        ));
    }
}
