//! Left and right insertion of biletters into bumpless pipe dreams.
//!
//! An insertion of `⟨a/k⟩` starts at an r-elbow in row a (the rightmost one for
//! right insertion, the leftmost for left insertion) and performs a sequence
//! of min-droops. A min-droop of pipe p from its elbow at (i, j) moves the
//! elbow to the nearest corner (x, y) such that (x, j) and (i, y) are tiles
//! carrying nothing but p. Then:
//!
//! * if (x, y) was blank, the insertion continues from an r-elbow in row x
//!   (p's own elbow for right insertion, the first elbow east of y for left
//!   insertion);
//! * otherwise p's new j-elbow meets the r-elbow of a pipe q at (x, y). If the
//!   exit rows of p and q do not straddle k, q droops next from (x, y). If they
//!   straddle k and p, q have not crossed yet, (x, y) becomes a cross and the
//!   insertion ends. If they already cross at X, (x, y) becomes a cross and X
//!   turns into the meeting of two elbows, from which the insertion continues.
//!
//! The result differs from the input permutation by a cover `t_{αβ}` with
//! `α <= k < β`, where α, β are the exit rows of the last two pipes.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bpd::{Bpd, Grid, BUMP, CROSS, SE, SN, WE, WN};
use crate::error::{Error, Result};
use crate::perm::{CoverData, DecoratedChain, Permutation};
use crate::tableau::Ssyt;

/// A pair ⟨a/k⟩ with `1 <= a <= k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biletter {
    pub a: usize,
    pub k: usize,
}

impl Biletter {
    pub fn new(a: usize, k: usize) -> Result<Self> {
        if a == 0 || a > k {
            return Err(Error::InvalidBiletter { a, k });
        }
        Ok(Self { a, k })
    }
}

impl fmt::Display for Biletter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}/{}>", self.a, self.k)
    }
}

/// A word of biletters whose labels weakly decrease from left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlacticBiword {
    letters: Vec<Biletter>,
}

impl PlacticBiword {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(letters: Vec<Biletter>) -> Result<Self> {
        if !Self::is_plactic(&letters) {
            return Err(Error::NotPlactic);
        }
        Ok(Self { letters })
    }

    /// Builds a biword from its top row (letters) and bottom row (labels).
    pub fn from_rows(top: &[usize], bottom: &[usize]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Parse("rows have different lengths".into()));
        }
        let letters = top.iter().zip(bottom).map(|(&a, &k)| Biletter::new(a, k)).collect::<Result<_>>()?;
        Self::new(letters)
    }

    pub fn is_plactic(letters: &[Biletter]) -> bool {
        letters.windows(2).all(|w| w[0].k >= w[1].k)
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Biletter>) -> Self {
        debug_assert!(Self::is_plactic(&letters));
        Self { letters }
    }

    pub fn letters(&self) -> &[Biletter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn top(&self) -> Vec<usize> {
        self.letters.iter().map(|b| b.a).collect()
    }

    pub fn bottom(&self) -> Vec<usize> {
        self.letters.iter().map(|b| b.k).collect()
    }

    /// Concatenation, failing if the result is not plactic.
    pub fn concat(&self, other: &PlacticBiword) -> Result<Self> {
        let mut v = self.letters.clone();
        v.extend_from_slice(&other.letters);
        Self::new(v)
    }

    /// All plactic biwords of the given length with labels at most `max_k`,
    /// in lexicographic order.
    pub fn all(len: usize, max_k: usize) -> Vec<PlacticBiword> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn rec(len: usize, bound: usize, cur: &mut Vec<Biletter>, out: &mut Vec<PlacticBiword>) {
            if cur.len() == len {
                out.push(PlacticBiword { letters: cur.clone() });
                return;
            }
            for k in 1..=bound {
                for a in 1..=k {
                    cur.push(Biletter { a, k });
                    rec(len, k, cur, out);
                    cur.pop();
                }
            }
        }
        rec(len, max_k, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for PlacticBiword {
    /// `top / bottom` with comma-separated rows, e.g. `2,1 / 3,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{} / {}", join(self.top()), join(self.bottom()))
    }
}

#[derive(Serialize, Deserialize)]
struct BiwordJson {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl Serialize for PlacticBiword {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiwordJson { top: self.top(), bottom: self.bottom() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlacticBiword {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = BiwordJson::deserialize(d)?;
        Self::from_rows(&j.top, &j.bottom).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// Result of inserting one biletter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionOutcome {
    pub result: Bpd,
    /// The cover from the old permutation to the new one, labeled by k.
    pub cover: CoverData,
}

const MAX_STEPS: usize = 100_000;

fn clear(g: &mut Grid, i: usize, j: usize, s: u8) -> Option<()> {
    let m = g.at(i, j);
    (m & s != 0).then(|| g.set(i, j, m & !s))
}

fn put(g: &mut Grid, i: usize, j: usize, s: u8) -> Option<()> {
    let m = g.at(i, j);
    (m & s == 0).then(|| g.set(i, j, m | s))
}

fn tiles_ok(g: &Grid) -> bool {
    g.cells.iter().all(|&m| !matches!(m, 5 | 6 | 7 | 9 | 10 | 11 | 13 | 14 | 15))
}

/// Min-droop of the pipe whose r-strand sits at (i, j). Returns the corner and
/// the pipe, or `None` if the move is impossible in this grid.
fn min_droop(g: &mut Grid, i: usize, j: usize, cap: usize) -> Option<(usize, usize, usize)> {
    let mut tr = g.trace().ok()?;
    let p = tr.owner(i, j, SE)?;
    let mut x = i + 1;
    loop {
        if x == g.n {
            if g.n >= cap {
                return None;
            }
            g.enlarge();
            tr = g.trace().ok()?;
        }
        tr.strand_of(g, x, j, p)?;
        if tr.only(g, x, j, p) {
            break;
        }
        x += 1;
    }
    let mut y = j + 1;
    loop {
        if y == g.n {
            if g.n >= cap {
                return None;
            }
            g.enlarge();
            tr = g.trace().ok()?;
        }
        tr.strand_of(g, i, y, p)?;
        if tr.only(g, i, y, p) {
            break;
        }
        y += 1;
    }
    let sx = tr.strand_of(g, x, j, p)?;
    let sy = tr.strand_of(g, i, y, p)?;
    let sx_new = match sx {
        SN => SE,
        WN => WE,
        _ => return None,
    };
    let sy_new = match sy {
        WE => SE,
        WN => SN,
        _ => return None,
    };
    clear(g, i, j, SE)?;
    for r in i + 1..x {
        clear(g, r, j, SN)?;
    }
    for c in j + 1..y {
        clear(g, i, c, WE)?;
    }
    clear(g, x, j, sx)?;
    put(g, x, j, sx_new)?;
    clear(g, i, y, sy)?;
    put(g, i, y, sy_new)?;
    for c in j + 1..y {
        put(g, x, c, WE)?;
    }
    for r in i + 1..x {
        put(g, r, y, SN)?;
    }
    put(g, x, y, WN)?;
    tiles_ok(g).then_some((x, y, p))
}

/// Where the insertion resumes after pipe p drooped into the blank (x, y).
fn resume_after_blank(g: &Grid, x: usize, y: usize, p: usize, side: Side) -> Option<(usize, usize)> {
    match side {
        Side::Right => {
            let tr = g.trace().ok()?;
            (0..g.n).find(|&c| tr.owner(x, c, SE) == Some(p)).map(|c| (x, c))
        }
        Side::Left => (y + 1..g.n).find(|&c| g.at(x, c) & SE != 0).map(|c| (x, c)),
    }
}

fn straddles(rp: usize, rq: usize, k: usize) -> bool {
    // 0-based exit rows; k is 1-based
    rp.min(rq) < k && k <= rp.max(rq)
}

/// Runs the droop sequence from `cur`. Returns the 1-based (α, β).
fn run(g: &mut Grid, mut cur: (usize, usize), k: usize, side: Side, cap: usize) -> Option<(usize, usize)> {
    for _ in 0..MAX_STEPS {
        let (x, y, p) = min_droop(g, cur.0, cur.1, cap)?;
        match g.at(x, y) {
            WN => cur = resume_after_blank(g, x, y, p, side)?,
            BUMP => {
                let tr = g.trace().ok()?;
                let q = tr.owner(x, y, SE)?;
                let (rp, rq) = (tr.exit_row[p], tr.exit_row[q]);
                if !straddles(rp, rq, k) {
                    cur = (x, y);
                    continue;
                }
                let prior = tr.crossings(g, p, q);
                g.set(x, y, CROSS);
                match prior.as_slice() {
                    [] => return Some((rp.min(rq) + 1, rp.max(rq) + 1)),
                    [(a, b)] => {
                        g.set(*a, *b, BUMP);
                        cur = (*a, *b);
                    }
                    _ => return None,
                }
            }
            _ => return None,
        }
    }
    None
}

fn start_column(g: &Grid, row: usize, side: Side) -> Option<usize> {
    let mut elbows = (0..g.n).filter(|&j| g.at(row, j) == SE);
    match side {
        Side::Left => elbows.next(),
        Side::Right => elbows.next_back(),
    }
}

/// Inserts `b` into `d` from the given side.
///
/// Left insertion of a letter with label k is only defined when every descent
/// of `perm(d)` is at most k, which is always the case when building `φ` from
/// right to left.
pub fn try_insert(d: &Bpd, b: Biletter, side: Side) -> Result<InsertionOutcome> {
    if side == Side::Left {
        if let Ok(descent) = d.perm().d2() {
            if descent > b.k {
                return Err(Error::LeftInsertionDomain { k: b.k, descent });
            }
        }
    }
    let mut g = d.grid().clone().enlarged_to(b.k + 1);
    // covers reach at most one row past the window, so the grid never needs more
    let cap = g.n.max(d.perm().size() + 1) + 1;
    let row = b.a - 1;
    let j = start_column(&g, row, side).expect("every row of a pipe dream has an r-elbow");
    let (alpha, beta) = run(&mut g, (row, j), b.k, side, cap).ok_or(Error::InsertionStuck)?;
    let result = Bpd::from_grid(g)?;
    let cover = d.perm().cover_up(alpha, beta)?.with_label(b.k)?;
    debug_assert_eq!(result.perm(), &d.perm().transpose(alpha, beta));
    Ok(InsertionOutcome { result, cover })
}

/// Like [`try_insert`], panicking outside the domain of left insertion.
pub fn insert(d: &Bpd, b: Biletter, side: Side) -> InsertionOutcome {
    try_insert(d, b, side).unwrap_or_else(|e| panic!("inserting {b} into {d:?} from the {side:?}: {e}"))
}

/// `D ← ⟨a/k⟩`.
pub fn right_insert(d: &Bpd, b: Biletter) -> InsertionOutcome {
    insert(d, b, Side::Right)
}

/// `⟨a/k⟩ → D`.
pub fn left_insert(b: Biletter, d: &Bpd) -> InsertionOutcome {
    insert(d, b, Side::Left)
}

/// The pipe dream of a plactic biword, by left insertion from right to left.
pub fn phi(q: &PlacticBiword) -> Bpd {
    phi_left(q).0
}

/// Left insertion from right to left, with its recording chain.
pub fn phi_left(q: &PlacticBiword) -> (Bpd, DecoratedChain) {
    let mut d = Bpd::identity(0);
    let mut ch = DecoratedChain::new(Permutation::identity());
    for &b in q.letters().iter().rev() {
        let out = left_insert(b, &d);
        ch.steps.push(out.cover);
        d = out.result;
    }
    (d, ch)
}

/// Right insertion from left to right, with its recording chain.
pub fn phi_right(q: &PlacticBiword) -> (Bpd, DecoratedChain) {
    let mut d = Bpd::identity(0);
    let mut ch = DecoratedChain::new(Permutation::identity());
    for &b in q.letters() {
        let out = right_insert(&d, b);
        ch.steps.push(out.cover);
        d = out.result;
    }
    (d, ch)
}

pub fn ch_left(q: &PlacticBiword) -> DecoratedChain {
    phi_left(q).1
}

pub fn ch_right(q: &PlacticBiword) -> DecoratedChain {
    phi_right(q).1
}

/// Builds the pipe dream of `q` growing a contiguous factor one letter at a
/// time. `order[0]` inserts the first letter; each later entry extends the
/// factor on that side. The number of `Left` entries after the first fixes
/// which letter comes first.
pub fn phi_in_order(q: &PlacticBiword, order: &[Side]) -> Bpd {
    assert_eq!(order.len(), q.len());
    if q.is_empty() {
        return Bpd::identity(0);
    }
    let letters = q.letters();
    let start = order[1..].iter().filter(|&&s| s == Side::Left).count();
    let mut d = insert(&Bpd::identity(0), letters[start], order[0]).result;
    let (mut lo, mut hi) = (start, start + 1);
    for &side in &order[1..] {
        d = match side {
            Side::Left => {
                lo -= 1;
                left_insert(letters[lo], &d).result
            }
            Side::Right => {
                hi += 1;
                right_insert(&d, letters[hi - 1]).result
            }
        };
    }
    d
}

/// Every insertion order for a word of length `len`.
pub fn all_orders(len: usize) -> Vec<Vec<Side>> {
    (0..1u64 << len)
        .map(|mask| (0..len).map(|t| if mask >> t & 1 == 1 { Side::Left } else { Side::Right }).collect())
        .collect()
}

fn same_grid(a: &Grid, b: &Grid) -> bool {
    let n = a.n.max(b.n);
    a.clone().enlarged_to(n) == b.clone().enlarged_to(n)
}

struct Reverser<'a> {
    target: &'a Bpd,
    cover: CoverData,
    side: Side,
    budget: usize,
}

impl Reverser<'_> {
    /// Pre-states of a min-droop of pipe p that ended with its j-elbow at (x, y).
    fn undroop(&mut self, post: &Grid, x: usize, y: usize, p: usize) -> Vec<(Grid, (usize, usize))> {
        let mut out = Vec::new();
        let Ok(tr) = post.trace() else { return out };
        if tr.strand_of(post, x, y, p) != Some(WN) {
            return out;
        }
        // p reaches (x, y) along row x from its r-strand at (x, j0) ...
        let mut j0 = y;
        loop {
            if j0 == 0 {
                return out;
            }
            j0 -= 1;
            match tr.strand_of(post, x, j0, p) {
                Some(WE) => continue,
                Some(SE) => break,
                _ => return out,
            }
        }
        // ... and leaves it up column y to its r-strand at (i0, y).
        let mut i0 = x;
        loop {
            if i0 == 0 {
                return out;
            }
            i0 -= 1;
            match tr.strand_of(post, i0, y, p) {
                Some(SN) => continue,
                Some(SE) => break,
                _ => return out,
            }
        }
        for i in i0..x {
            for j in j0..y {
                if self.budget == 0 {
                    return out;
                }
                self.budget -= 1;
                let Some(pre) = Self::undroop_at(post, x, y, i, j, i == i0, j == j0) else { continue };
                let mut replay = pre.clone();
                match min_droop(&mut replay, i, j, post.n + 1) {
                    Some((x2, y2, p2)) if (x2, y2, p2) == (x, y, p) && same_grid(&replay, post) => {
                        out.push((pre, (i, j)))
                    }
                    _ => {}
                }
            }
        }
        out
    }

    fn undroop_at(post: &Grid, x: usize, y: usize, i: usize, j: usize, top: bool, left: bool) -> Option<Grid> {
        let mut g = post.clone();
        clear(&mut g, x, y, WN)?;
        for c in j + 1..y {
            clear(&mut g, x, c, WE)?;
        }
        for r in i + 1..x {
            clear(&mut g, r, y, SN)?;
        }
        if left {
            clear(&mut g, x, j, SE)?;
            put(&mut g, x, j, SN)?;
        } else {
            clear(&mut g, x, j, WE)?;
            put(&mut g, x, j, WN)?;
        }
        if top {
            clear(&mut g, i, y, SE)?;
            put(&mut g, i, y, WE)?;
        } else {
            clear(&mut g, i, y, SN)?;
            put(&mut g, i, y, WN)?;
        }
        put(&mut g, i, j, SE)?;
        for r in i + 1..x {
            put(&mut g, r, j, SN)?;
        }
        for c in j + 1..y {
            put(&mut g, i, c, WE)?;
        }
        if !tiles_ok(&g) {
            return None;
        }
        let bumps = g.cells.iter().filter(|&&m| m == BUMP).count();
        if bumps > 1 || (bumps == 1 && g.at(i, j) != BUMP) {
            return None;
        }
        Some(g)
    }

    /// Searches for a start state leading to `g` with the next droop at `cur`.
    fn explore(&mut self, g: &Grid, cur: (usize, usize), depth: usize) -> Option<(Bpd, usize)> {
        if depth == 0 || self.budget == 0 {
            return None;
        }
        let k = self.cover.label;
        let bump = g.cells.iter().position(|&m| m == BUMP).map(|idx| (idx / g.n, idx % g.n));
        match bump {
            None => {
                if cur.0 < k && start_column(g, cur.0, self.side) == Some(cur.1) {
                    if let Some(found) = self.check_start(g, cur.0 + 1) {
                        return Some(found);
                    }
                }
                for (corner, p) in self.blank_corners(g, cur) {
                    for (pre, c) in self.undroop(g, corner.0, corner.1, p) {
                        if let Some(found) = self.explore(&pre, c, depth - 1) {
                            return Some(found);
                        }
                    }
                }
                None
            }
            Some(b) if b == cur => {
                let tr = g.trace().ok()?;
                let p = tr.owner(cur.0, cur.1, WN)?;
                let q = tr.owner(cur.0, cur.1, SE)?;
                if !straddles(tr.exit_row[p], tr.exit_row[q], k) {
                    for (pre, c) in self.undroop(g, cur.0, cur.1, p) {
                        if let Some(found) = self.explore(&pre, c, depth - 1) {
                            return Some(found);
                        }
                    }
                }
                // The bump may have come from a cross when the previous droop
                // met a pipe it had already crossed.
                for idx in 0..g.cells.len() {
                    if g.cells[idx] != CROSS {
                        continue;
                    }
                    let c2 = (idx / g.n, idx % g.n);
                    let mut h = g.clone();
                    h.set(cur.0, cur.1, CROSS);
                    h.set(c2.0, c2.1, BUMP);
                    let Ok(tr) = h.trace() else { continue };
                    let (Some(p), Some(q)) = (tr.owner(c2.0, c2.1, WN), tr.owner(c2.0, c2.1, SE)) else {
                        continue;
                    };
                    if !straddles(tr.exit_row[p], tr.exit_row[q], k) || tr.crossings(&h, p, q) != [cur] {
                        continue;
                    }
                    for (pre, c) in self.undroop(&h, c2.0, c2.1, p) {
                        if let Some(found) = self.explore(&pre, c, depth - 1) {
                            return Some(found);
                        }
                    }
                }
                None
            }
            Some(_) => None,
        }
    }

    /// Corners a droop into a blank could have ended at, given that the
    /// insertion resumed at `cur`.
    fn blank_corners(&self, g: &Grid, cur: (usize, usize)) -> Vec<((usize, usize), usize)> {
        let Ok(tr) = g.trace() else { return Vec::new() };
        let (x, c0) = cur;
        match self.side {
            Side::Right => {
                let Some(p) = tr.owner(x, c0, SE) else { return Vec::new() };
                let mut c = c0 + 1;
                while c < g.n && tr.strand_of(g, x, c, p) == Some(WE) {
                    c += 1;
                }
                if c < g.n && g.at(x, c) == WN && tr.owner(x, c, WN) == Some(p) {
                    vec![((x, c), p)]
                } else {
                    Vec::new()
                }
            }
            Side::Left => {
                let mut out = Vec::new();
                for y in (0..c0).rev() {
                    if g.at(x, y) == WN {
                        out.push(((x, y), tr.owner(x, y, WN).unwrap()));
                    }
                    if g.at(x, y) & SE != 0 {
                        break;
                    }
                }
                out
            }
        }
    }

    fn check_start(&self, g: &Grid, a: usize) -> Option<(Bpd, usize)> {
        let d = Bpd::from_grid(g.clone()).ok()?;
        let b = Biletter::new(a, self.cover.label).ok()?;
        let out = try_insert(&d, b, self.side).ok()?;
        let ok = out.result == *self.target && (out.cover.alpha, out.cover.beta) == (self.cover.alpha, self.cover.beta);
        ok.then(|| (d.trimmed(), a))
    }
}

/// Undoes one insertion: finds `(D, a)` such that inserting `⟨a/k⟩` into D
/// from `side` gives `d` with the given cover (k = `cover.label`).
pub fn reverse_insert(d: &Bpd, cover: &CoverData, side: Side) -> Result<(Bpd, usize)> {
    let k = cover.label;
    if !(cover.alpha <= k && k < cover.beta) {
        return Err(Error::NotACover { alpha: cover.alpha, beta: cover.beta });
    }
    let mut g = d.grid().clone().enlarged_to(k.max(cover.beta) + 1);
    let tr = g.trace()?;
    let pa = tr.exit_row.iter().position(|&r| r == cover.alpha - 1).ok_or(Error::NoPreimage)?;
    let pb = tr.exit_row.iter().position(|&r| r == cover.beta - 1).ok_or(Error::NoPreimage)?;
    let [c] = tr.crossings(&g, pa, pb)[..] else { return Err(Error::NoPreimage) };
    g.set(c.0, c.1, BUMP);
    let tr = g.trace()?;
    let (p, q) = match (tr.owner(c.0, c.1, WN), tr.owner(c.0, c.1, SE)) {
        (Some(p), Some(q)) => (p, q),
        _ => return Err(Error::NoPreimage),
    };
    if !straddles(tr.exit_row[p], tr.exit_row[q], k) || !tr.crossings(&g, p, q).is_empty() {
        return Err(Error::NoPreimage);
    }
    let n = g.n;
    let mut rev = Reverser { target: d, cover: *cover, side, budget: 2_000_000 };
    for (pre, cur) in rev.undroop(&g, c.0, c.1, p) {
        if let Some(found) = rev.explore(&pre, cur, 8 * n * n + 64) {
            return Ok(found);
        }
    }
    Err(Error::NoPreimage)
}

fn check_chain_end(d: &Bpd, ch: &DecoratedChain) -> Result<()> {
    if ch.end() != *d.perm() || !ch.start.is_identity() {
        return Err(Error::ChainMismatch);
    }
    Ok(())
}

/// The plactic biword whose left insertion (right to left) produces `d` with
/// recording chain `ch`.
pub fn inverse_left(d: &Bpd, ch: &DecoratedChain) -> Result<PlacticBiword> {
    check_chain_end(d, ch)?;
    if ch.labels().windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::NotPlactic);
    }
    let mut cur = d.clone();
    let mut letters = Vec::with_capacity(ch.len());
    for step in ch.steps.iter().rev() {
        let (prev, a) = reverse_insert(&cur, step, Side::Left)?;
        letters.push(Biletter { a, k: step.label });
        cur = prev;
    }
    Ok(PlacticBiword::from_vec_unchecked(letters))
}

/// The plactic biword whose right insertion (left to right) produces `d` with
/// recording chain `ch`.
pub fn inverse_right(d: &Bpd, ch: &DecoratedChain) -> Result<PlacticBiword> {
    check_chain_end(d, ch)?;
    if ch.labels().windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotPlactic);
    }
    let mut cur = d.clone();
    let mut letters = Vec::with_capacity(ch.len());
    for step in ch.steps.iter().rev() {
        let (prev, a) = reverse_insert(&cur, step, Side::Right)?;
        letters.push(Biletter { a, k: step.label });
        cur = prev;
    }
    letters.reverse();
    Ok(PlacticBiword::from_vec_unchecked(letters))
}

/// The right recording chain shared by every maxword of `p`.
///
/// Built backwards from `p`: with k the first descent, repeatedly swap
/// position k+1 with the first position α <= k holding a larger value, until
/// no such position is left; then move on to the next first descent.
pub fn maxword_chain(p: &Permutation) -> DecoratedChain {
    let mut cur = p.clone();
    let mut steps = Vec::new();
    while let Ok(k) = cur.d1() {
        loop {
            let v = cur.apply(k + 1);
            let Some(alpha) = (1..=k).find(|&a| cur.apply(a) > v) else { break };
            let lower = cur.transpose(alpha, k + 1);
            steps.push((lower.clone(), alpha, k + 1, k));
            cur = lower;
        }
    }
    steps.reverse();
    let mut ch = DecoratedChain::new(Permutation::identity());
    for (_, alpha, beta, k) in steps {
        ch.push(alpha, beta, k).expect("maxword chain steps are labeled covers");
    }
    ch
}

/// The left recording chain shared by every minword of `p`: iterate δ from
/// the identity, labeling each step by its α.
pub fn minword_chain(p: &Permutation) -> DecoratedChain {
    let mut ch = DecoratedChain::new(Permutation::identity());
    let mut cur = Permutation::identity();
    while cur != *p {
        let c = cur.delta_step(p).expect("delta is defined below the target");
        cur = cur.transpose(c.alpha, c.beta);
        ch.steps.push(c);
    }
    ch
}

/// The unique biword of `d` whose label multiset is given by the maxcode.
pub fn maxword(d: &Bpd) -> PlacticBiword {
    inverse_right(d, &maxword_chain(d.perm())).expect("every pipe dream has a maxword")
}

/// The unique biword of `d` whose label multiset is given by the code.
pub fn minword(d: &Bpd) -> PlacticBiword {
    inverse_left(d, &minword_chain(d.perm())).expect("every pipe dream has a minword")
}

/// The pipe dream `φ(⟨colread(T)/k⟩)` of a tableau with entries at most `k`.
pub fn ssyt_to_bpd(t: &Ssyt, k: usize) -> Result<Bpd> {
    if let Some(&e) = t.rows().iter().flatten().find(|&&e| e > k) {
        return Err(Error::EntryExceedsK(e));
    }
    let letters = t.colread().into_iter().map(|a| Biletter { a, k }).collect();
    Ok(phi(&PlacticBiword::from_vec_unchecked(letters)))
}

/// Inverse of [`ssyt_to_bpd`], found by searching the tableaux of the shape.
pub fn grassmannian_to_ssyt(d: &Bpd, k: usize) -> Result<Ssyt> {
    let shape = d.perm().shape_of(k)?;
    let target = d.trimmed();
    Ssyt::all_of_shape(&shape, k)
        .into_iter()
        .find(|t| ssyt_to_bpd(t, k).map(|b| b == target).unwrap_or(false))
        .ok_or(Error::ShapeMismatch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bpd::Tile;

    fn b(a: usize, k: usize) -> Biletter {
        Biletter::new(a, k).unwrap()
    }

    #[test]
    fn single_biletter() {
        for k in 1..=4 {
            for a in 1..=k {
                let out = right_insert(&Bpd::identity(0), b(a, k));
                let d = &out.result;
                assert_eq!(d.perm(), &Permutation::simple(k));
                assert_eq!(d.tile(a, a), Tile::Blank);
                assert_eq!(d.tile(k + 1, k + 1), Tile::Cross);
                assert_eq!((out.cover.alpha, out.cover.beta, out.cover.label), (k, k + 1, k));
                assert_eq!(left_insert(b(a, k), &Bpd::identity(0)).result, *d);
            }
        }
    }

    #[test]
    fn biword_json() {
        let q = PlacticBiword::from_rows(&[2, 1], &[3, 3]).unwrap();
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"top":[2,1],"bottom":[3,3]}"#);
        assert_eq!(serde_json::from_str::<PlacticBiword>(&s).unwrap(), q);
        assert!(PlacticBiword::from_rows(&[1, 1], &[1, 2]).is_err());
        assert!(Biletter::new(3, 2).is_err());
    }

    #[test]
    fn counts_plactic_words() {
        // labels <= 2: biletters <1/1>,<1/2>,<2/2>
        assert_eq!(PlacticBiword::all(1, 2).len(), 3);
        assert_eq!(PlacticBiword::all(2, 2).len(), 2 * 2 + 2 + 1);
    }
}
