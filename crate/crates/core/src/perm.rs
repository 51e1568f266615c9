//! Permutations of the positive integers with finite support.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of {1, 2, ...} fixing all but finitely many points.
///
/// The window is stored with trailing fixed points removed, so windows that
/// differ only by trailing fixed points compare equal.
#[derive(Clone, Default)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self { window: Vec::new() }
    }

    /// Builds a permutation from its one-line window.
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(window.iter().map(|&v| v as u32).collect()));
            }
            seen[v] = true;
        }
        Ok(Self::from_window_unchecked(window))
    }

    pub(crate) fn from_window_unchecked(mut window: Vec<usize>) -> Self {
        while let Some(&last) = window.last() {
            if last == window.len() {
                window.pop();
            } else {
                break;
            }
        }
        Self { window }
    }

    /// The adjacent transposition swapping k and k+1.
    pub fn simple(k: usize) -> Self {
        assert!(k >= 1);
        let mut w: Vec<usize> = (1..=k + 1).collect();
        w.swap(k - 1, k);
        Self { window: w }
    }

    /// The normalized window.
    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Smallest n such that the permutation lies in S_n (0 for the identity).
    pub fn size(&self) -> usize {
        self.window.len()
    }

    /// The window padded with fixed points to length `n` (at least `size()`).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut w = self.window.clone();
        w.extend(w.len() + 1..=n.max(w.len()));
        w
    }

    /// Value at a 1-based position.
    pub fn apply(&self, i: usize) -> usize {
        if i <= self.window.len() {
            self.window[i - 1]
        } else {
            i
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { window: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.code().iter().sum()
    }

    /// Lehmer code: `code[i-1] = #{j > i : p(j) < p(i)}`, one entry per window position.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count()).collect()
    }

    /// `maxcode[i-1] = #{j < i : p(j) > p(i)}`.
    pub fn maxcode(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len()).map(|i| w[..i].iter().filter(|&&v| v > w[i]).count()).collect()
    }

    /// Inverse of [`Permutation::code`]. The window is enlarged as needed, so
    /// every finite sequence of nonnegative integers is realizable.
    pub fn from_code(code: &[usize]) -> Result<Self> {
        let n = code.iter().enumerate().map(|(i, &c)| i + c + 1).max().unwrap_or(0);
        let mut free: Vec<usize> = (1..=n).collect();
        let mut window = Vec::with_capacity(n);
        for i in 0..n {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= free.len() {
                return Err(Error::CodeNotRealizable(code.iter().map(|&c| c as u32).collect()));
            }
            window.push(free.remove(c));
        }
        Ok(Self::from_window_unchecked(window))
    }

    /// Positions i with p(i) > p(i+1).
    pub fn descents(&self) -> Vec<usize> {
        let w = &self.window;
        (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
    }

    /// First descent.
    pub fn d1(&self) -> Result<usize> {
        self.descents().first().copied().ok_or(Error::IdentityHasNoDescent)
    }

    /// Last descent.
    pub fn d2(&self) -> Result<usize> {
        self.descents().last().copied().ok_or(Error::IdentityHasNoDescent)
    }

    /// Right multiplication by the transposition t_{alpha beta} (swaps positions).
    pub fn transpose(&self, alpha: usize, beta: usize) -> Self {
        let mut w = self.padded(alpha.max(beta));
        w.swap(alpha - 1, beta - 1);
        Self::from_window_unchecked(w)
    }

    /// Checks that `self * t_{alpha beta}` covers `self` in Bruhat order. The
    /// returned label is `alpha`; use [`CoverData::with_label`] to relabel.
    pub fn cover_up(&self, alpha: usize, beta: usize) -> Result<CoverData> {
        if alpha == 0 || alpha >= beta {
            return Err(Error::NotACover { alpha, beta });
        }
        let (pa, pb) = (self.apply(alpha), self.apply(beta));
        if pa > pb || (alpha + 1..beta).any(|i| (pa..pb).contains(&self.apply(i))) {
            return Err(Error::NotACover { alpha, beta });
        }
        let between = |i: &usize| {
            let v = self.apply(*i);
            pa < v && v < pb
        };
        let m_alpha = (beta + 1..=self.size().max(beta)).filter(between).count();
        let m_beta = (1..alpha).filter(between).count();
        Ok(CoverData { alpha, beta, label: alpha, m_alpha, m_beta })
    }

    /// All covers `self ⋖ self t_{ab}` with `a <= k < b`, labeled `k`. The
    /// window is enlarged as far as covers can reach (b <= max(size+1, k+1)).
    pub fn k_bruhat_covers(&self, k: usize) -> Vec<CoverData> {
        let n = (self.size() + 1).max(k + 1);
        let mut out = Vec::new();
        for alpha in 1..=k {
            for beta in k + 1..=n {
                if let Ok(c) = self.cover_up(alpha, beta) {
                    out.push(CoverData { label: k, ..c });
                }
            }
        }
        out
    }

    /// The Grassmannian permutation whose code agrees with this one up to the
    /// first descent and vanishes afterwards.
    pub fn h(&self) -> Result<Self> {
        let d = self.d1()?;
        let code = self.code();
        Self::from_code(&code[..d])
    }

    /// One step of the canonical chain toward `target`: returns the cover
    /// `self ⋖ self t_{αβ}` labeled by α.
    ///
    /// α is the first position where the codes differ, which requires the code
    /// of `self` to vanish after α. β is the smallest position after α with
    /// `self(β) > self(α)`.
    pub fn delta_step(&self, target: &Permutation) -> Result<CoverData> {
        let rc = self.code();
        let tc = target.code();
        let get = |c: &[usize], i: usize| c.get(i).copied().unwrap_or(0);
        let n = rc.len().max(tc.len());
        let alpha = (0..n).find(|&i| get(&rc, i) != get(&tc, i)).ok_or(Error::DeltaUndefined)?;
        if get(&rc, alpha) > get(&tc, alpha) || (alpha + 1..n).any(|i| get(&rc, i) != 0) {
            return Err(Error::DeltaUndefined);
        }
        let alpha = alpha + 1;
        let pa = self.apply(alpha);
        let beta = (alpha + 1..).find(|&b| self.apply(b) > pa).expect("finite support");
        self.cover_up(alpha, beta)
    }

    pub fn delta(&self, target: &Permutation) -> Result<Self> {
        let c = self.delta_step(target)?;
        Ok(self.transpose(c.alpha, c.beta))
    }

    /// Bruhat order, by the rank-matrix criterion.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        let n = self.size().max(other.size());
        let (u, w) = (self.padded(n), other.padded(n));
        for i in 1..=n {
            for j in 1..=n {
                let cu = u[..i].iter().filter(|&&v| v >= j).count();
                let cw = w[..i].iter().filter(|&&v| v >= j).count();
                if cu > cw {
                    return false;
                }
            }
        }
        true
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.size().max(other.size());
        Self::from_window_unchecked((1..=n).map(|i| self.apply(other.apply(i))).collect())
    }

    /// The longest element of S_n.
    pub fn longest(n: usize) -> Self {
        Self::from_window_unchecked((1..=n).rev().collect())
    }

    /// At most one descent.
    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() <= 1
    }

    /// Partition of a permutation whose only descent (if any) is at k.
    pub fn shape_of(&self, k: usize) -> Result<Vec<usize>> {
        let des = self.descents();
        if des.iter().any(|&d| d != k) {
            return Err(Error::NotGrassmannian(k));
        }
        let code = self.code();
        let mut lambda: Vec<usize> = (0..k).rev().map(|i| code.get(i).copied().unwrap_or(0)).collect();
        while lambda.last() == Some(&0) {
            lambda.pop();
        }
        Ok(lambda)
    }

    /// The k-Grassmannian permutation of a partition with at most k parts.
    pub fn grassmannian_from_shape(lambda: &[usize], k: usize) -> Result<Self> {
        if lambda.len() > k || lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotGrassmannian(k));
        }
        let code: Vec<usize> = (0..k).map(|i| lambda.get(k - 1 - i).copied().unwrap_or(0)).collect();
        Self::from_code(&code)
    }

    /// All permutations of S_n in lexicographic order of their windows.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut w: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self::from_window_unchecked(w.clone()));
            // next lexicographic permutation
            let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
                break;
            };
            let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
        }
        out
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.window == other.window
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.window.hash(state)
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.size().max(other.size());
        self.padded(n).cmp(&other.padded(n))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    /// Digit string when every entry is a single digit, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = if self.window.is_empty() { vec![1] } else { self.window.clone() };
        if w.len() <= 9 {
            for v in w {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        let window: Vec<usize> = if s.contains(',') || s.contains(' ') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<_>>()?
        };
        Self::new(window)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Vec::<usize>::deserialize(d)?;
        Self::new(w).map_err(serde::de::Error::custom)
    }
}

/// A Bruhat cover `p ⋖ p t_{αβ}` together with its label k (α ≤ k < β) and the
/// counts governing how code and maxcode change.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverData {
    pub alpha: usize,
    pub beta: usize,
    pub label: usize,
    /// `#{i > β : p(α) < p(i) < p(β)}`
    pub m_alpha: usize,
    /// `#{i < α : p(α) < p(i) < p(β)}`
    pub m_beta: usize,
}

impl CoverData {
    pub fn with_label(self, k: usize) -> Result<Self> {
        if self.alpha <= k && k < self.beta {
            Ok(Self { label: k, ..self })
        } else {
            Err(Error::NotACover { alpha: self.alpha, beta: self.beta })
        }
    }

    /// Predicted (code, maxcode) of the upper permutation, from those of the lower one.
    pub fn predict_codes(&self, code: &[usize], maxcode: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let n = code.len().max(maxcode.len()).max(self.beta);
        let mut c = code.to_vec();
        let mut m = maxcode.to_vec();
        c.resize(n, 0);
        m.resize(n, 0);
        c[self.alpha - 1] += self.m_alpha + 1;
        c[self.beta - 1] -= self.m_alpha;
        m[self.alpha - 1] -= self.m_beta;
        m[self.beta - 1] += self.m_beta + 1;
        (c, m)
    }
}

/// A saturated Bruhat chain whose steps carry mixed k-Bruhat labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedChain {
    pub start: Permutation,
    pub steps: Vec<CoverData>,
}

impl DecoratedChain {
    pub fn new(start: Permutation) -> Self {
        Self { start, steps: Vec::new() }
    }

    /// Appends the cover by t_{αβ} with label k, validating it.
    pub fn push(&mut self, alpha: usize, beta: usize, label: usize) -> Result<()> {
        let c = self.end().cover_up(alpha, beta)?.with_label(label)?;
        self.steps.push(c);
        Ok(())
    }

    /// Builds and validates a chain from (α, β, label) triples.
    pub fn from_steps(start: Permutation, steps: &[(usize, usize, usize)]) -> Result<Self> {
        let mut ch = Self::new(start);
        for &(a, b, k) in steps {
            ch.push(a, b, k)?;
        }
        Ok(ch)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every permutation along the chain, starting with `start`.
    pub fn perms(&self) -> Vec<Permutation> {
        let mut out = vec![self.start.clone()];
        for s in &self.steps {
            let next = out.last().unwrap().transpose(s.alpha, s.beta);
            out.push(next);
        }
        out
    }

    pub fn end(&self) -> Permutation {
        self.perms().pop().unwrap()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.label).collect()
    }
}

impl fmt::Display for DecoratedChain {
    /// `12 <1 21`: each step shows its label.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perms = self.perms();
        let width = perms.iter().map(|p| p.size()).max().unwrap_or(0);
        let show = |p: &Permutation| {
            let w = p.padded(width.max(1));
            if width <= 9 {
                w.iter().map(|v| v.to_string()).collect::<String>()
            } else {
                w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "{}", show(&perms[0]))?;
        for (s, p) in self.steps.iter().zip(&perms[1..]) {
            write!(f, " <{} {}", s.label, show(p))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    alpha: usize,
    beta: usize,
    label: usize,
}

#[derive(Serialize, Deserialize)]
struct ChainJson {
    start: Permutation,
    steps: Vec<StepJson>,
}

impl Serialize for DecoratedChain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChainJson {
            start: self.start.clone(),
            steps: self.steps.iter().map(|c| StepJson { alpha: c.alpha, beta: c.beta, label: c.label }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecoratedChain {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ChainJson::deserialize(d)?;
        let steps: Vec<_> = j.steps.iter().map(|s| (s.alpha, s.beta, s.label)).collect();
        Self::from_steps(j.start, &steps).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn codes_of_running_example() {
        let pi = p("13574862");
        assert_eq!(pi.code(), vec![0, 1, 2, 3, 1, 2, 1, 0]);
        assert_eq!(pi.maxcode(), vec![0, 0, 0, 0, 2, 0, 2, 6]);
        assert_eq!(Permutation::from_code(&pi.code()).unwrap(), pi);
        assert_eq!((pi.d1().unwrap(), pi.d2().unwrap()), (4, 7));
        assert_eq!(pi.h().unwrap(), p("13572468"));
    }

    #[test]
    fn trivial_codes() {
        assert!(Permutation::identity().code().is_empty());
        assert_eq!(p("21").code(), vec![1, 0]);
        assert_eq!(p("21").maxcode(), vec![0, 1]);
        assert_eq!(Permutation::from_code(&[0, 0, 1]).unwrap(), Permutation::simple(3));
        assert_eq!(Permutation::from_code(&[0, 0]).unwrap(), Permutation::identity());
        assert_eq!(p("321").descents(), vec![1, 2]);
        assert_eq!(Permutation::identity().d1(), Err(Error::IdentityHasNoDescent));
    }

    #[test]
    fn trailing_fixed_points_are_ignored() {
        assert_eq!(p("2134"), p("21"));
        assert_eq!(p("123"), Permutation::identity());
        assert_eq!(p("1,3,2,4").to_string(), "132");
        assert_eq!(Permutation::identity().to_string(), "1");
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn covers() {
        let c = p("123").cover_up(1, 2).unwrap();
        assert_eq!((c.m_alpha, c.m_beta), (0, 0));
        assert_eq!(p("123").transpose(1, 2), p("213"));
        assert_eq!(p("13254").transpose(1, 3), p("23154"));
        assert!(p("13254").cover_up(1, 3).is_ok());
        assert!(p("123").cover_up(1, 3).is_err());
        let ks: Vec<_> = Permutation::identity().k_bruhat_covers(1).iter().map(|c| (c.alpha, c.beta)).collect();
        assert_eq!(ks, vec![(1, 2)]);
        let ks: Vec<_> = p("213").k_bruhat_covers(1).iter().map(|c| (c.alpha, c.beta)).collect();
        assert_eq!(ks, vec![(1, 3)]);
    }

    #[test]
    fn grassmannian_shapes() {
        assert_eq!(p("13572468").shape_of(4).unwrap(), vec![3, 2, 1]);
        assert_eq!(Permutation::grassmannian_from_shape(&[3, 2, 1], 4).unwrap(), p("13572468"));
        assert_eq!(Permutation::identity().shape_of(2).unwrap(), Vec::<usize>::new());
        assert_eq!(Permutation::simple(3).shape_of(3).unwrap(), vec![1]);
        assert!(p("321").shape_of(1).is_err());
    }

    #[test]
    fn chain_json_round_trip() {
        let ch = DecoratedChain::from_steps(Permutation::identity(), &[(1, 2, 1), (1, 3, 2)]).unwrap();
        let s = serde_json::to_string(&ch).unwrap();
        assert_eq!(s, r#"{"start":[],"steps":[{"alpha":1,"beta":2,"label":1},{"alpha":1,"beta":3,"label":2}]}"#);
        let back: DecoratedChain = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ch);
        assert_eq!(ch.to_string(), "123 <1 213 <2 312");
    }

    #[test]
    fn all_is_lexicographic() {
        let s3: Vec<String> =
            Permutation::all(3).iter().map(|p| p.padded(3).iter().map(|v| v.to_string()).collect()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
    }
}
