//! Sparse polynomials with integer coefficients in x_1, x_2, ...

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector with trailing zeros removed; entry i is the power of x_{i+1}.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn new(mut exps: Vec<usize>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self(exps)
    }

    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// The variable x_i (1-based).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    /// Exponent of x_i (1-based).
    pub fn exp(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((1..=n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    fn with(&self, i: usize, e: usize) -> Monomial {
        let mut v = self.0.clone();
        if v.len() < i {
            v.resize(i, 0);
        }
        v[i - 1] = e;
        Monomial::new(v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn var(i: usize) -> Self {
        Self::from_monomial(Monomial::var(i))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, 1);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree if every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Largest monomial in lexicographic order (x_1 most significant).
    pub fn leading(&self) -> Option<(&Monomial, i64)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (m, v) in self.terms() {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// The divided difference (f - s_i f) / (x_i - x_{i+1}).
    ///
    /// Computed term by term: for a < b the quotient of x_i^a x_{i+1}^b is
    /// minus the sum of x_i^{a+t} x_{i+1}^{b-1-t} over 0 <= t < b-a, and
    /// symmetrically for a > b. This stays in integer arithmetic.
    pub fn divided_difference(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            let (a, b) = (m.exp(i), m.exp(i + 1));
            if a == b {
                continue;
            }
            let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
            for t in 0..hi - lo {
                // x_i^{hi-1-t} x_{i+1}^{lo+t} when a > b, mirrored otherwise
                let (ei, ej) = if a > b { (hi - 1 - t, lo + t) } else { (lo + t, hi - 1 - t) };
                out.add_term(m.with(i, ei).with(i + 1, ej), sign * c);
            }
        }
        out
    }

    /// Substitutes x_i <-> x_{i+1}.
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            out.add_term(m.with(i, m.exp(i + 1)).with(i + 1, m.exp(i)), c);
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &rhs.scale(-1)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (a, c) in self.terms() {
            for (b, d) in rhs.terms() {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for IntPolynomial {
    /// Terms from the lexicographically largest monomial down, e.g. `x1^2 + 2*x1*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (abs, m.degree()) {
                (1, _) => write!(f, "{m}")?,
                (_, 0) => write!(f, "{abs}")?,
                _ => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> IntPolynomial {
        IntPolynomial::var(i)
    }

    #[test]
    fn arithmetic() {
        let f = &x(1) + &x(2);
        let g = &f * &f;
        assert_eq!(g.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!((&g - &g).is_zero());
        assert_eq!(g.homogeneous_degree(), Some(2));
    }

    #[test]
    fn divided_difference_matches_definition() {
        // (f - s_1 f) = (x1 - x2) * d1 f
        let f = &(&(&x(1) * &x(1)) * &x(2)) + &x(3);
        for i in 1..=3 {
            let d = f.divided_difference(i);
            let lhs = &f - &f.swap_vars(i);
            let rhs = &(&x(i) - &x(i + 1)) * &d;
            assert_eq!(lhs, rhs);
        }
        assert_eq!(f.divided_difference(1), &x(1) * &x(2));
    }
}
