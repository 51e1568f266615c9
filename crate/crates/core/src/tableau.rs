//! Semistandard Young tableaux and Schensted insertion.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Conjugate of a partition.
pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (0..width).map(|j| parts.iter().filter(|&&p| p > j).count()).collect()
}

/// A semistandard Young tableau in English notation: rows weakly increase,
/// columns strictly increase.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
}

impl Ssyt {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau);
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() || row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau);
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row lengths.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    fn column(&self, j: usize) -> Vec<usize> {
        self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect()
    }

    /// Schensted row insertion `T ← a`. Returns the new tableau and the
    /// (row, column) of the added cell, both 0-based.
    pub fn row_insert(&self, a: usize) -> (Ssyt, (usize, usize)) {
        let mut rows = self.rows.clone();
        let mut x = a;
        for i in 0..rows.len() {
            match rows[i].iter().position(|&y| y > x) {
                Some(j) => x = std::mem::replace(&mut rows[i][j], x),
                None => {
                    rows[i].push(x);
                    let j = rows[i].len() - 1;
                    return (Ssyt { rows }, (i, j));
                }
            }
        }
        rows.push(vec![x]);
        let i = rows.len() - 1;
        (Ssyt { rows }, (i, 0))
    }

    /// Schensted column insertion `a → T`.
    pub fn column_insert(&self, a: usize) -> (Ssyt, (usize, usize)) {
        let mut rows = self.rows.clone();
        let mut x = a;
        let mut j = 0;
        loop {
            let height = rows.iter().take_while(|r| r.len() > j).count();
            match (0..height).find(|&i| rows[i][j] >= x) {
                Some(i) => {
                    x = std::mem::replace(&mut rows[i][j], x);
                    j += 1;
                }
                None => {
                    if height == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[height].push(x);
                    return (Ssyt { rows }, (height, j));
                }
            }
        }
    }

    /// Column reading word: columns left to right, each read bottom to top.
    pub fn colread(&self) -> Vec<usize> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width).flat_map(|j| self.column(j).into_iter().rev()).collect()
    }

    /// Row reading word: rows bottom to top, each read left to right.
    pub fn rowread(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Removes the corner cell (i, j) by reverse row insertion and returns the
    /// letter that leaves the first row.
    fn reverse_row_insert(&mut self, i: usize) -> usize {
        let mut y = self.rows[i].pop().unwrap();
        for r in (0..i).rev() {
            let row = &mut self.rows[r];
            let j = row.iter().rposition(|&v| v < y).unwrap();
            y = std::mem::replace(&mut row[j], y);
        }
        self.rows.retain(|r| !r.is_empty());
        y
    }

    /// Removes the bottom cell of column j by reverse column insertion and
    /// returns the letter that leaves the first column.
    fn reverse_column_insert(&mut self, j: usize) -> usize {
        let i = self.column(j).len() - 1;
        let mut y = self.rows[i].remove(j);
        for c in (0..j).rev() {
            let col = self.column(c);
            let r = col.iter().rposition(|&v| v <= y).unwrap();
            y = std::mem::replace(&mut self.rows[r][c], y);
        }
        self.rows.retain(|r| !r.is_empty());
        y
    }

    /// Splits off the first column: reverse column insertion, removing the
    /// cells outside the first column column by column (right to left, bottom
    /// to top) and then the first column. Returns `S(a_1)` and `a_c` where
    /// `a_1 a_c` is Knuth equivalent to the reading word and `a_c` has length
    /// equal to the height of the first column.
    pub fn split_first_column(&self) -> Result<(Ssyt, Vec<usize>)> {
        if self.is_empty() {
            return Err(Error::EmptyTableau);
        }
        let shape = self.shape();
        let cols = conjugate(&shape);
        let mut t = self.clone();
        let mut popped = Vec::with_capacity(self.size());
        for j in (0..cols.len()).rev() {
            for _ in 0..cols[j] {
                popped.push(t.reverse_column_insert(j));
            }
        }
        let c1 = cols[0];
        let a_c = popped.split_off(popped.len() - c1);
        Ok((insert_word(&popped), a_c))
    }

    /// Splits off the first row: reverse row insertion, removing the cells
    /// below the first row bottom row first and then the first row. Returns
    /// `a_r` (weakly increasing, length of the first row) and `S(a_1)` with
    /// `a_r a_1` Knuth equivalent to the reading word.
    pub fn split_first_row(&self) -> Result<(Vec<usize>, Ssyt)> {
        if self.is_empty() {
            return Err(Error::EmptyTableau);
        }
        let shape = self.shape();
        let mut t = self.clone();
        let mut popped = Vec::with_capacity(self.size());
        for i in (0..shape.len()).rev() {
            for _ in 0..shape[i] {
                popped.push(t.reverse_row_insert(i));
            }
        }
        popped.reverse();
        let rest = popped.split_off(shape[0]);
        Ok((popped, insert_word(&rest)))
    }

    /// All semistandard tableaux of the given shape with entries at most `max`.
    pub fn all_of_shape(shape: &[usize], max: usize) -> Vec<Ssyt> {
        let cells: Vec<(usize, usize)> =
            shape.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
        let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
        let mut out = Vec::new();
        fn fill(idx: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<usize>>, max: usize, out: &mut Vec<Ssyt>) {
            if idx == cells.len() {
                out.push(Ssyt { rows: rows.clone() });
                return;
            }
            let (i, j) = cells[idx];
            let lo_row = if j > 0 { rows[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
            for v in lo_row.max(lo_col)..=max {
                rows[i][j] = v;
                fill(idx + 1, cells, rows, max, out);
            }
            rows[i][j] = 0;
        }
        fill(0, &cells, &mut rows, max, &mut out);
        out
    }
}

/// `S(w)`: row insert the letters of `w` left to right into the empty tableau.
pub fn insert_word(w: &[usize]) -> Ssyt {
    w.iter().fold(Ssyt::empty(), |t, &a| t.row_insert(a).0)
}

/// Words one elementary Knuth move away: `bac ~ bca` (a < b <= c) and
/// `acb ~ cab` (a <= b < c), on consecutive letters, in both directions.
pub fn classical_knuth_neighbors(w: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for i in 0..w.len().saturating_sub(2) {
        let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
        let mut push = |swap_at: usize| {
            let mut v = w.to_vec();
            v.swap(swap_at, swap_at + 1);
            out.insert(v);
        };
        // bac -> bca
        if y < x && x <= z {
            push(i + 1);
        }
        // bca -> bac
        if z < x && x <= y {
            push(i + 1);
        }
        // acb -> cab
        if x <= z && z < y {
            push(i);
        }
        // cab -> acb
        if y <= z && z < x {
            push(i);
        }
    }
    out
}

impl fmt::Display for Ssyt {
    /// Rows on separate lines with columns aligned.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max_entry().to_string().len();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Ssyt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ssyt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        Self::new(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Ssyt {
        Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_example() {
        let s = insert_word(&[3, 2, 3, 4, 1, 1, 2, 3]);
        assert_eq!(s, t(&[&[1, 1, 2, 3], &[2, 3, 4], &[3]]));
        assert_eq!(s.colread(), vec![3, 2, 1, 3, 1, 4, 2, 3]);
        assert_eq!(insert_word(&s.colread()), s);
        let (c, cell) = s.column_insert(1);
        assert_eq!(cell, (0, 4));
        assert_eq!(c.shape(), vec![5, 3, 1]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(Ssyt::empty().row_insert(5).0, t(&[&[5]]));
        assert_eq!(insert_word(&[3, 2, 1]), t(&[&[1], &[2], &[3]]));
        assert_eq!(t(&[&[1, 2, 2]]).colread(), vec![1, 2, 2]);
        assert_eq!(t(&[&[1], &[2], &[4]]).colread(), vec![4, 2, 1]);
        assert_eq!(conjugate(&[4, 3, 1]), vec![3, 2, 2, 1]);
        assert!(Ssyt::new(vec![vec![1, 2], vec![2]]).is_ok());
        assert!(Ssyt::new(vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn splits_match_worked_examples() {
        let s = t(&[&[1, 1, 2, 3], &[2, 3, 4], &[3]]);
        let (rest, col) = s.split_first_column().unwrap();
        assert_eq!(rest, t(&[&[1, 2, 2], &[3, 3]]));
        assert_eq!(insert_word(&col), t(&[&[1], &[3], &[4]]));
        let (row, rest) = s.split_first_row().unwrap();
        assert_eq!(row, vec![1, 3, 3, 4]);
        assert_eq!(rest, t(&[&[1, 2, 3], &[2]]));
        let one = t(&[&[7]]);
        assert_eq!(one.split_first_column().unwrap(), (Ssyt::empty(), vec![7]));
        assert_eq!(Ssyt::empty().split_first_row(), Err(Error::EmptyTableau));
    }

    #[test]
    fn knuth_neighbors() {
        let n = classical_knuth_neighbors(&[2, 1, 2]);
        assert!(n.contains(&vec![2, 2, 1]));
        assert!(classical_knuth_neighbors(&[1, 2, 3]).is_empty());
    }

    #[test]
    fn counts_tableaux() {
        // Kostka-free check: number of SSYT of shape (2,1) with entries <= 3 is 8.
        assert_eq!(Ssyt::all_of_shape(&[2, 1], 3).len(), 8);
    }
}
