//! Bumpless pipe dreams.
//!
//! Rows and columns are numbered from 1 at the top left. The pipe entering the
//! south edge of column c carries label c, and `perm(D)(i)` is the label of the
//! pipe leaving the east edge of row i.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::Monomial;

// A tile is stored as the set of strands it carries.
pub(crate) const WE: u8 = 1;
pub(crate) const SN: u8 = 2;
pub(crate) const SE: u8 = 4;
pub(crate) const WN: u8 = 8;
pub(crate) const CROSS: u8 = WE | SN;
/// Transient tile used during insertion: an elbow of one pipe meeting an
/// elbow of another.
pub(crate) const BUMP: u8 = SE | WN;
const STRANDS: [u8; 4] = [WE, SN, SE, WN];

fn strand_index(s: u8) -> usize {
    match s {
        WE => 0,
        SN => 1,
        SE => 2,
        WN => 3,
        _ => unreachable!(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Blank,
    Cross,
    /// Joins the south and east edges.
    RElbow,
    /// Joins the west and north edges.
    JElbow,
    Horizontal,
    Vertical,
}

impl Tile {
    pub fn to_char(self) -> char {
        match self {
            Tile::Blank => '.',
            Tile::Cross => '+',
            Tile::RElbow => 'r',
            Tile::JElbow => 'j',
            Tile::Horizontal => '-',
            Tile::Vertical => '|',
        }
    }

    pub fn from_char(c: char) -> Option<Tile> {
        Some(match c {
            '.' => Tile::Blank,
            '+' => Tile::Cross,
            'r' => Tile::RElbow,
            'j' => Tile::JElbow,
            '-' => Tile::Horizontal,
            '|' => Tile::Vertical,
            _ => return None,
        })
    }

    pub(crate) fn mask(self) -> u8 {
        match self {
            Tile::Blank => 0,
            Tile::Cross => CROSS,
            Tile::RElbow => SE,
            Tile::JElbow => WN,
            Tile::Horizontal => WE,
            Tile::Vertical => SN,
        }
    }

    pub(crate) fn from_mask(m: u8) -> Option<Tile> {
        Some(match m {
            0 => Tile::Blank,
            CROSS => Tile::Cross,
            SE => Tile::RElbow,
            WN => Tile::JElbow,
            WE => Tile::Horizontal,
            SN => Tile::Vertical,
            _ => return None,
        })
    }
}

/// Square grid of strand sets; may hold transient tiles during insertion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Grid {
    pub n: usize,
    pub cells: Vec<u8>,
}

/// Which pipe owns each strand of each cell, and where each pipe exits.
pub(crate) struct Trace {
    n: usize,
    owner: Vec<[usize; 4]>,
    /// 0-based exit row of each pipe (indexed by 0-based entry column).
    pub exit_row: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl Trace {
    /// Owner of strand `s` at (i, j), if present.
    pub fn owner(&self, i: usize, j: usize, s: u8) -> Option<usize> {
        let o = self.owner[i * self.n + j][strand_index(s)];
        (o != NONE).then_some(o)
    }

    /// Whether every strand at (i, j) belongs to pipe `p` (and there is one).
    pub fn only(&self, grid: &Grid, i: usize, j: usize, p: usize) -> bool {
        let m = grid.at(i, j);
        m != 0 && STRANDS.iter().all(|&s| m & s == 0 || self.owner(i, j, s) == Some(p))
    }

    /// The strand of pipe `p` at (i, j).
    pub fn strand_of(&self, grid: &Grid, i: usize, j: usize, p: usize) -> Option<u8> {
        let m = grid.at(i, j);
        STRANDS.iter().copied().find(|&s| m & s != 0 && self.owner(i, j, s) == Some(p))
    }

    /// Cross tiles where pipes `p` and `q` meet.
    pub fn crossings(&self, grid: &Grid, p: usize, q: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..grid.n {
            for j in 0..grid.n {
                if grid.at(i, j) == CROSS {
                    let (a, b) = (self.owner(i, j, WE).unwrap(), self.owner(i, j, SN).unwrap());
                    if (a == p && b == q) || (a == q && b == p) {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }
}

impl Grid {
    pub fn new(n: usize) -> Self {
        Self { n, cells: vec![0; n * n] }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u8 {
        self.cells[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, m: u8) {
        self.cells[i * self.n + j] = m;
    }

    /// Appends a column of horizontals and a bottom row of verticals ending in
    /// an elbow: the picture of the next fixed point.
    pub fn enlarge(&mut self) {
        let n = self.n;
        let mut cells = Vec::with_capacity((n + 1) * (n + 1));
        for i in 0..n {
            cells.extend_from_slice(&self.cells[i * n..(i + 1) * n]);
            cells.push(WE);
        }
        cells.extend(std::iter::repeat_n(SN, n));
        cells.push(SE);
        self.n = n + 1;
        self.cells = cells;
    }

    pub fn enlarged_to(mut self, n: usize) -> Self {
        while self.n < n {
            self.enlarge();
        }
        self
    }

    /// Follows every pipe from the south edge, checking that strands match up.
    pub fn trace(&self) -> Result<Trace> {
        let n = self.n;
        let mut owner = vec![[NONE; 4]; n * n];
        let mut exit_row = vec![0; n];
        for c0 in 0..n {
            let (mut r, mut c) = (n - 1, c0);
            let mut from_south = true;
            loop {
                let m = self.at(r, c);
                let s = match (from_south, m & SN != 0, m & SE != 0, m & WE != 0, m & WN != 0) {
                    (true, true, _, _, _) => SN,
                    (true, false, true, _, _) => SE,
                    (false, _, _, true, _) => WE,
                    (false, _, _, false, true) => WN,
                    _ => return Err(Error::DanglingStrand { row: r + 1, col: c + 1 }),
                };
                let slot = &mut owner[r * n + c][strand_index(s)];
                if *slot != NONE {
                    return Err(Error::DanglingStrand { row: r + 1, col: c + 1 });
                }
                *slot = c0;
                if s == SN || s == WN {
                    if r == 0 {
                        return Err(Error::BoundaryMismatch);
                    }
                    r -= 1;
                    from_south = true;
                } else {
                    c += 1;
                    if c == n {
                        exit_row[c0] = r;
                        break;
                    }
                    from_south = false;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let m = self.at(i, j);
                for &s in &STRANDS {
                    if m & s != 0 && owner[i * n + j][strand_index(s)] == NONE {
                        return Err(Error::DanglingStrand { row: i + 1, col: j + 1 });
                    }
                }
            }
        }
        Ok(Trace { n, owner, exit_row })
    }

    /// Size after removing trailing rows/columns that only carry a fixed point.
    fn canonical_size(&self) -> usize {
        let mut m = self.n;
        while m > 0 {
            let last = m - 1;
            let trivial = self.at(last, last) == SE
                && (0..last).all(|j| self.at(last, j) == SN)
                && (0..last).all(|i| self.at(i, last) == WE);
            if !trivial {
                break;
            }
            m -= 1;
        }
        m
    }

    fn shrunk(&self, m: usize) -> Grid {
        let mut g = Grid::new(m);
        for i in 0..m {
            for j in 0..m {
                g.set(i, j, self.at(i, j));
            }
        }
        g
    }
}

/// A reduced bumpless pipe dream.
///
/// Equality and hashing ignore trailing fixed-point rows and columns, so a
/// pipe dream compares equal to its enlargements.
#[derive(Clone)]
pub struct Bpd {
    grid: Grid,
    perm: Permutation,
}

impl Bpd {
    /// Checks strands, boundary and reducedness, returning the permutation.
    pub fn validate(rows: &[Vec<Tile>]) -> Result<Permutation> {
        Ok(Self::from_rows(rows.to_vec())?.perm)
    }

    pub fn from_rows(rows: Vec<Vec<Tile>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("grid is not square".into()));
        }
        let cells = rows.iter().flatten().map(|t| t.mask()).collect();
        Self::from_grid(Grid { n, cells })
    }

    pub(crate) fn from_grid(grid: Grid) -> Result<Self> {
        if let Some(idx) = grid.cells.iter().position(|&m| Tile::from_mask(m).is_none()) {
            return Err(Error::DanglingStrand { row: idx / grid.n.max(1) + 1, col: idx % grid.n.max(1) + 1 });
        }
        let tr = grid.trace()?;
        let mut seen = HashSet::new();
        for i in 0..grid.n {
            for j in 0..grid.n {
                if grid.at(i, j) == CROSS {
                    let (a, b) = (tr.owner(i, j, WE).unwrap(), tr.owner(i, j, SN).unwrap());
                    let key = (a.min(b), a.max(b));
                    if !seen.insert(key) {
                        return Err(Error::DoubleCrossing(key.0 + 1, key.1 + 1));
                    }
                }
            }
        }
        let mut window = vec![0; grid.n];
        for (c, &r) in tr.exit_row.iter().enumerate() {
            window[r] = c + 1;
        }
        Ok(Self { grid, perm: Permutation::from_window_unchecked(window) })
    }

    pub(crate) fn grid(&self) -> &Grid {
        &self.grid
    }

    /// The pipe dream of the identity on an n×n grid.
    pub fn identity(n: usize) -> Self {
        Self::rothe_sized(&Permutation::identity(), n)
    }

    /// The Rothe pipe dream, whose blanks form the Rothe diagram.
    pub fn rothe(p: &Permutation) -> Self {
        Self::rothe_sized(p, p.size())
    }

    /// The Rothe pipe dream on a grid of size `n` (at least the window of `p`).
    pub fn rothe_sized(p: &Permutation, n: usize) -> Self {
        let n = n.max(p.size());
        let w = p.padded(n);
        let inv = p.inverse().padded(n);
        let mut g = Grid::new(n);
        for i in 1..=n {
            for j in 1..=n {
                let (pi, pinv) = (w[i - 1], inv[j - 1]);
                let t = if j == pi {
                    Tile::RElbow
                } else if j < pi && i < pinv {
                    Tile::Blank
                } else if j < pi {
                    Tile::Vertical
                } else if i < pinv {
                    Tile::Horizontal
                } else {
                    Tile::Cross
                };
                g.set(i - 1, j - 1, t.mask());
            }
        }
        Self { grid: g, perm: p.clone() }
    }

    pub fn size(&self) -> usize {
        self.grid.n
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Tile at 1-based (row, column); positions beyond the grid continue the
    /// identity pattern.
    pub fn tile(&self, i: usize, j: usize) -> Tile {
        if i <= self.grid.n && j <= self.grid.n {
            Tile::from_mask(self.grid.at(i - 1, j - 1)).unwrap()
        } else if i == j {
            Tile::RElbow
        } else if i < j {
            Tile::Horizontal
        } else {
            Tile::Vertical
        }
    }

    pub fn rows(&self) -> Vec<Vec<Tile>> {
        (1..=self.size()).map(|i| (1..=self.size()).map(|j| self.tile(i, j)).collect()).collect()
    }

    /// Number of blanks in each row.
    pub fn blank_counts(&self) -> Vec<usize> {
        self.count_per_row(0)
    }

    /// Number of crosses in each row.
    pub fn cross_counts(&self) -> Vec<usize> {
        self.count_per_row(CROSS)
    }

    fn count_per_row(&self, m: u8) -> Vec<usize> {
        let n = self.grid.n;
        (0..n).map(|i| (0..n).filter(|&j| self.grid.at(i, j) == m).count()).collect()
    }

    /// Product of x_i over the blanks in row i.
    pub fn weight(&self) -> Monomial {
        Monomial::new(self.blank_counts())
    }

    /// The same pipe dream padded with fixed points to an n×n grid.
    pub fn padded(&self, n: usize) -> Self {
        Self { grid: self.grid.clone().enlarged_to(n), perm: self.perm.clone() }
    }

    /// The smallest grid holding this pipe dream.
    pub fn trimmed(&self) -> Self {
        let m = self.grid.canonical_size();
        Self { grid: self.grid.shrunk(m), perm: self.perm.clone() }
    }

    /// One character per tile, rows separated by newlines.
    pub fn render(&self) -> String {
        self.rows().iter().map(|r| r.iter().map(|t| t.to_char()).collect::<String>()).collect::<Vec<_>>().join("\n")
    }

    /// Parses the text produced by [`Bpd::render`]. Blank lines and
    /// surrounding whitespace are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<Tile>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .map(|c| Tile::from_char(c).ok_or_else(|| Error::Parse(format!("unknown tile {c:?}"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_rows(rows)
    }

    /// All pipe dreams one droop away.
    ///
    /// A droop takes an r-elbow at (i, j) and a blank at (x, y) southeast of
    /// it such that the rectangle between them holds no other elbow, and
    /// reroutes the pipe along the rectangle's left and bottom sides, leaving
    /// (i, j) blank and (x, y) a j-elbow.
    pub fn droops(&self) -> Vec<Bpd> {
        let g = &self.grid;
        let n = g.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if g.at(i, j) != SE {
                    continue;
                }
                for x in i + 1..n {
                    for y in j + 1..n {
                        if g.at(x, y) != 0 {
                            continue;
                        }
                        let clear =
                            (i..=x).all(|r| (j..=y).all(|c| (r, c) == (i, j) || !matches!(g.at(r, c), SE | WN)));
                        if !clear {
                            continue;
                        }
                        let mut h = g.clone();
                        h.set(i, j, 0);
                        for r in i + 1..x {
                            h.set(r, j, h.at(r, j) & !SN);
                            h.set(r, y, h.at(r, y) | SN);
                        }
                        for c in j + 1..y {
                            h.set(i, c, h.at(i, c) & !WE);
                            h.set(x, c, h.at(x, c) | WE);
                        }
                        h.set(x, j, SE);
                        h.set(i, y, SE);
                        h.set(x, y, WN);
                        if let Ok(d) = Bpd::from_grid(h) {
                            if d.perm == self.perm {
                                out.push(d);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The pipe dreams of `p` on its own window, sorted by rendering.
    ///
    /// Computed as the closure of the Rothe pipe dream under droops.
    pub fn all(p: &Permutation) -> Vec<Bpd> {
        let start = Bpd::rothe(p);
        let mut seen: HashSet<Bpd> = HashSet::new();
        seen.insert(start.clone());
        let mut frontier = vec![start];
        while let Some(d) = frontier.pop() {
            for e in d.droops() {
                if seen.insert(e.clone()) {
                    frontier.push(e);
                }
            }
        }
        let mut out: Vec<Bpd> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// The pipe dreams of `p` found by searching all tilings of the n×n grid.
    /// Slow; kept as an independent check on [`Bpd::all`].
    pub fn all_exhaustive(p: &Permutation) -> Vec<Bpd> {
        let n = p.size();
        let blanks = p.length();
        let mut g = Grid::new(n);
        let mut out = Vec::new();
        exhaustive_fill(0, n, blanks, &mut g, p, &mut out);
        out.sort();
        out
    }

    /// Number of pipe dreams per permutation, useful for diagnostics.
    pub fn count_by_perm(ds: &[Bpd]) -> HashMap<Permutation, usize> {
        let mut m = HashMap::new();
        for d in ds {
            *m.entry(d.perm.clone()).or_insert(0) += 1;
        }
        m
    }

    /// Row indices (1-based) of the blanks, as a sorted multiset.
    pub fn blank_rows(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, c) in self.blank_counts().iter().enumerate() {
            out.extend(std::iter::repeat_n(i + 1, *c));
        }
        out
    }

    fn canonical_cells(&self) -> (usize, impl Iterator<Item = u8> + '_) {
        let m = self.grid.canonical_size();
        (m, (0..m).flat_map(move |i| (0..m).map(move |j| self.grid.at(i, j))))
    }
}

fn exhaustive_fill(idx: usize, n: usize, blanks_left: usize, g: &mut Grid, p: &Permutation, out: &mut Vec<Bpd>) {
    if idx == n * n {
        if blanks_left == 0 {
            if let Ok(d) = Bpd::from_grid(g.clone()) {
                if &d.perm == p {
                    out.push(d);
                }
            }
        }
        return;
    }
    let (i, j) = (idx / n, idx % n);
    let west_out = j > 0 && g.at(i, j - 1) & (WE | SE) != 0;
    let north_in = i > 0 && g.at(i - 1, j) & (SN | SE) != 0;
    for t in [Tile::Blank, Tile::Cross, Tile::RElbow, Tile::JElbow, Tile::Horizontal, Tile::Vertical] {
        let m = t.mask();
        let has_w = m & (WE | WN) != 0;
        let has_n = m & (SN | WN) != 0;
        let has_e = m & (WE | SE) != 0;
        let has_s = m & (SN | SE) != 0;
        if has_w != west_out || has_n != north_in {
            continue;
        }
        if (i == 0 && has_n) || (j == n - 1 && !has_e) || (i == n - 1 && !has_s) {
            continue;
        }
        let is_blank = m == 0;
        if is_blank && blanks_left == 0 {
            continue;
        }
        g.set(i, j, m);
        exhaustive_fill(idx + 1, n, blanks_left - usize::from(is_blank), g, p, out);
    }
    g.set(i, j, 0);
}

impl PartialEq for Bpd {
    fn eq(&self, other: &Self) -> bool {
        let (m, a) = self.canonical_cells();
        let (k, b) = other.canonical_cells();
        m == k && a.eq(b)
    }
}

impl Eq for Bpd {}

impl Hash for Bpd {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let (m, cells) = self.canonical_cells();
        m.hash(state);
        for c in cells {
            c.hash(state);
        }
    }
}

impl Ord for Bpd {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.size().max(other.size());
        self.padded(n).render().cmp(&other.padded(n).render())
    }
}

impl PartialOrd for Bpd {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Bpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bpd({})", self.render().replace('\n', "/"))
    }
}

impl FromStr for Bpd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for Bpd {
    /// A list of row strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<String> = self.render().lines().map(String::from).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Bpd {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<String>::deserialize(d)?;
        Self::parse(&rows.join("\n")).map_err(serde::de::Error::custom)
    }
}

/// Sorted, deduplicated renderings; handy for comparing enumerations.
pub fn renderings(ds: &[Bpd]) -> BTreeSet<String> {
    ds.iter().map(|d| d.trimmed().render()).collect()
}
