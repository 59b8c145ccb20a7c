//! Partitions, cells, skew shapes, hooks and contents.
//!
//! All coordinates are 1-indexed in matrix convention: `row` grows downward,
//! `col` grows to the right. The inner partition of a skew shape is stored as
//! given and zero-padded on access.

use std::fmt;

use crate::error::{Error, Result};

/// A cell `(row, col)` of a Young diagram, 1-indexed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    /// Content c(i,j) = j - i.
    pub fn content(&self) -> isize {
        self.col as isize - self.row as isize
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Convenience constructor used pervasively in tests.
pub fn cell(row: usize, col: usize) -> Cell {
    Cell::new(row, col)
}

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        let positive = parts.iter().all(|&p| p >= 1);
        if !decreasing || !positive {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may carry trailing zeros.
    pub fn from_padded(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, written `ℓ` in formulas.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells of the Young diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part, 1-indexed; zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Column lengths of the diagram, an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.col <= self.part(c.row)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    /// Hook length h(i,j) = λ_i - i + λ'_j - j + 1.
    pub fn hook(&self, c: Cell) -> Result<usize> {
        if !self.contains_cell(c) {
            return Err(Error::CellOutside(c));
        }
        let conj = self.conjugate();
        Ok(self.part(c.row) + conj.part(c.col) + 1 - c.row - c.col)
    }

    pub fn display(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the comma-separated text form, e.g. `"5,5,3,3,2"`. Empty input
    /// parses to the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<usize>, _> =
            text.split(',').map(|t| t.trim().parse::<usize>()).collect();
        match parts {
            Ok(parts) => Partition::new(parts),
            Err(_) => Err(Error::InvalidPartition(Vec::new())),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// A skew shape λ/μ with μ ⊆ λ. The cell set is \[λ\] ∖ \[μ\].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InnerNotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape λ/∅.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Inner part μ_i, 1-indexed and zero-padded.
    pub fn inner_part(&self, i: usize) -> usize {
        self.inner.part(i)
    }

    /// Size n = |λ| - |μ|.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.inner.part(c.row) < c.col && c.col <= self.outer.part(c.row)
    }

    pub fn is_inner(&self, c: Cell) -> bool {
        self.inner.contains_cell(c)
    }

    /// Cells of \[λ/μ\] in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    /// True iff the cell set is connected under edge adjacency. The empty
    /// shape counts as connected.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return true;
        }
        let in_shape: std::collections::HashSet<Cell> = cells.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![cells[0]];
        seen.insert(cells[0]);
        while let Some(c) = stack.pop() {
            let mut neighbors = vec![
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row, c.col + 1),
            ];
            if c.row > 1 {
                neighbors.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                neighbors.push(Cell::new(c.row, c.col - 1));
            }
            for nb in neighbors {
                if in_shape.contains(&nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// For each content value present in \[λ/μ\], the number of its cells,
    /// ordered by content descending (northeast-most diagonal first).
    pub fn diagonal_lengths(&self) -> Vec<(isize, usize)> {
        let mut counts: std::collections::BTreeMap<isize, usize> = Default::default();
        for c in self.cells() {
            *counts.entry(c.content()).or_insert(0) += 1;
        }
        counts.into_iter().rev().collect()
    }

    /// Rows of the diagonal of the given content inside \[λ/μ\], as an
    /// inclusive `(min_row, max_row)` range. The rows of one diagonal are
    /// always contiguous. Returns `None` if the diagonal is empty.
    pub fn diagonal_rows(&self, content: isize) -> Option<(usize, usize)> {
        let mut min_row = usize::MAX;
        let mut max_row = 0;
        for i in 1..=self.outer.len() {
            let j = i as isize + content;
            if j < 1 {
                continue;
            }
            let j = j as usize;
            if self.inner.part(i) < j && j <= self.outer.part(i) {
                min_row = min_row.min(i);
                max_row = max_row.max(i);
            }
        }
        (max_row > 0).then_some((min_row, max_row))
    }

    /// Drops trailing rows with λ_i = μ_i. Those rows carry no cells and
    /// only pad ℓ(λ); row indices of the remaining cells are unchanged.
    pub fn reduced(&self) -> SkewShape {
        let mut d = self.outer.len();
        while d > 0 && self.outer.part(d) == self.inner.part(d) {
            d -= 1;
        }
        SkewShape {
            outer: Partition::from_padded(self.outer.parts()[..d].to_vec()).unwrap(),
            inner: Partition::from_padded(
                self.inner.parts().iter().take(d).copied().collect(),
            )
            .unwrap(),
        }
    }

    /// `"5,5,3,3,2/2,2"`; a straight shape prints without the slash.
    pub fn display(&self) -> String {
        if self.inner.is_empty() {
            self.outer.display()
        } else {
            format!("{}/{}", self.outer.display(), self.inner.display())
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}
