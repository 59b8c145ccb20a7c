//! Skew tableaux with 0-based entries, the minimum tableau T_0, δ-moves,
//! minimal SSYT (by move closure and by direct characterization), flagged
//! skew tableaux, Okounkov–Olshanski tableaux, a brute-force SYT counting
//! oracle, and bounded enumerations for q-series work.
//!
//! Entries are 0-based throughout: rows weakly increase, columns strictly
//! increase. The minimum tableau fills column j with 0, 1, …, λ'_j − μ'_j − 1
//! from top to bottom.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::shape::{Cell, Partition, SkewShape};
use crate::strips::{lascoux_pragacz, Decomposition};

/// A filling of \[λ/μ\] by nonnegative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SkewTableau {
    shape: SkewShape,
    /// rows[i-1][k] is the entry at (i, μ_i + 1 + k).
    rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    /// Builds a tableau from per-row entry lists (inner cells omitted).
    /// Validates lengths but not semistandardness.
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let len = shape.outer().len();
        if rows.len() != len {
            return Err(Error::ShapeMismatch);
        }
        for i in 1..=len {
            if rows[i - 1].len() != shape.outer().part(i) - shape.inner_part(i) {
                return Err(Error::ShapeMismatch);
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    fn zero(shape: &SkewShape) -> Self {
        let rows = (1..=shape.outer().len())
            .map(|i| vec![0; shape.outer().part(i) - shape.inner_part(i)])
            .collect();
        SkewTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        if !self.shape.contains(c) {
            return None;
        }
        Some(self.rows[c.row - 1][c.col - 1 - self.shape.inner_part(c.row)])
    }

    pub fn set(&mut self, c: Cell, v: u32) {
        assert!(self.shape.contains(c), "cell outside shape");
        self.rows[c.row - 1][c.col - 1 - self.shape.inner_part(c.row)] = v;
    }

    /// Sum of all entries, written |T|.
    pub fn weight(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|&v| v as u64)
            .sum()
    }

    /// Entries in row-major order; the canonical sort key for tableau lists.
    pub fn entry_vec(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn row_entries(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Weak rows, strict columns; comparisons with absent neighbors are
    /// vacuous.
    pub fn is_semistandard(&self) -> bool {
        for c in self.shape.cells() {
            let v = self.get(c).unwrap();
            if let Some(right) = self.get(Cell::new(c.row, c.col + 1)) {
                if right < v {
                    return false;
                }
            }
            if let Some(below) = self.get(Cell::new(c.row + 1, c.col)) {
                if below <= v {
                    return false;
                }
            }
        }
        true
    }
}

/// The minimum tableau T_0: column j holds 0, …, λ'_j − μ'_j − 1 top to
/// bottom; entry (i,j) is i − μ'_j − 1.
pub fn minimum_tableau(shape: &SkewShape) -> SkewTableau {
    let inner_conj = shape.inner().conjugate();
    let mut t = SkewTableau::zero(shape);
    for c in shape.cells() {
        t.set(c, (c.row - inner_conj.part(c.col) - 1) as u32);
    }
    t
}

/// An active column of the δ-move: the pair (strip index k, absolute column
/// j) such that the top cell of θ_k(j) satisfies T(i,j) < ht_{θ_k}(i) and
/// incrementing the whole segment leaves the tableau semistandard.
pub fn active_columns(t: &SkewTableau) -> Vec<(usize, usize)> {
    let decomp = lascoux_pragacz(t.shape());
    active_columns_with(t, &decomp)
}

pub fn active_columns_with(t: &SkewTableau, decomp: &Decomposition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for strip in &decomp.strips {
        for col in strip.columns() {
            let seg = crate::strips::column_segment(strip, col).unwrap();
            let top = seg[0];
            let ht = (top.row - strip.top_row()) as u32;
            if t.get(top).unwrap() >= ht {
                continue;
            }
            let mut bumped = t.clone();
            for c in &seg {
                bumped.set(*c, bumped.get(*c).unwrap() + 1);
            }
            if bumped.is_semistandard() {
                out.push((strip.index, col));
            }
        }
    }
    out
}

/// Applies the δ-move on (strip k, absolute column j): adds one to each
/// entry of the column segment θ_k(j).
pub fn apply_delta(t: &SkewTableau, k: usize, j: usize) -> Result<SkewTableau> {
    let decomp = lascoux_pragacz(t.shape());
    apply_delta_with(t, &decomp, k, j)
}

pub fn apply_delta_with(
    t: &SkewTableau,
    decomp: &Decomposition,
    k: usize,
    j: usize,
) -> Result<SkewTableau> {
    if !active_columns_with(t, decomp).contains(&(k, j)) {
        return Err(Error::InactiveColumn { strip: k, col: j });
    }
    let seg = crate::strips::column_segment(decomp.strip(k)?, j)?;
    let mut out = t.clone();
    for c in seg {
        out.set(c, out.get(c).unwrap() + 1);
    }
    Ok(out)
}

fn require_connected(shape: &SkewShape) -> Result<()> {
    if !shape.is_connected() {
        return Err(Error::UnsupportedShape(
            "strip machinery requires a connected shape",
        ));
    }
    Ok(())
}

/// The δ-closure of T_0, in canonical order (lex on the row-major entry
/// vector). Connected shapes only.
pub fn enumerate_min_via_moves(shape: &SkewShape) -> Result<Vec<SkewTableau>> {
    require_connected(shape)?;
    let decomp = lascoux_pragacz(shape);
    let t0 = minimum_tableau(shape);
    let mut seen: BTreeMap<Vec<u32>, SkewTableau> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(t0.entry_vec(), t0.clone());
    queue.push_back(t0);
    while let Some(t) = queue.pop_front() {
        for (k, j) in active_columns_with(&t, &decomp) {
            let next = apply_delta_with(&t, &decomp, k, j)?;
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(next.entry_vec()) {
                e.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// Per-cell strip data used by the direct characterization.
struct StripContext {
    /// strip index (1-based) of each cell.
    strip_of: HashMap<Cell, usize>,
    /// ht bound: row − top row of the cell's strip.
    height_bound: HashMap<Cell, u32>,
}

fn strip_context(decomp: &Decomposition) -> StripContext {
    let mut strip_of = HashMap::new();
    let mut height_bound = HashMap::new();
    for strip in &decomp.strips {
        for &c in &strip.cells {
            strip_of.insert(c, strip.index);
            height_bound.insert(c, (c.row - strip.top_row()) as u32);
        }
    }
    StripContext {
        strip_of,
        height_bound,
    }
}

/// True iff the tableau is minimal: semistandard, bounded by strip heights,
/// with unit steps inside every strip column segment.
pub fn is_minimal(t: &SkewTableau) -> Result<bool> {
    require_connected(t.shape())?;
    if !t.is_semistandard() {
        return Ok(false);
    }
    let decomp = lascoux_pragacz(t.shape());
    let ctx = strip_context(&decomp);
    for c in t.shape().cells() {
        let v = t.get(c).unwrap();
        if v > ctx.height_bound[&c] {
            return Ok(false);
        }
        let below = Cell::new(c.row + 1, c.col);
        if ctx.strip_of.get(&below) == Some(&ctx.strip_of[&c]) {
            if let Some(w) = t.get(below) {
                if w != v + 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All tableaux satisfying the direct characterization (height bound on
/// every strip cell, unit steps in strip column segments), in canonical
/// order. Connected shapes only.
pub fn enumerate_min_via_characterization(shape: &SkewShape) -> Result<Vec<SkewTableau>> {
    require_connected(shape)?;
    let decomp = lascoux_pragacz(shape);
    let ctx = strip_context(&decomp);
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut t = SkewTableau::zero(shape);
    fill_minimal(&cells, 0, &ctx, &mut t, &mut out);
    Ok(out)
}

fn fill_minimal(
    cells: &[Cell],
    idx: usize,
    ctx: &StripContext,
    t: &mut SkewTableau,
    out: &mut Vec<SkewTableau>,
) {
    if idx == cells.len() {
        out.push(t.clone());
        return;
    }
    let c = cells[idx];
    let mut lo = 0u32;
    if c.col > 1 {
        if let Some(left) = t.get(Cell::new(c.row, c.col - 1)) {
            lo = lo.max(left);
        }
    }
    if c.row > 1 {
        if let Some(above) = t.get(Cell::new(c.row - 1, c.col)) {
            lo = lo.max(above + 1);
        }
    }
    let hi = ctx.height_bound[&c];
    // A cell directly below its same-strip neighbor is forced to a unit step.
    let forced = if c.row > 1 {
        let up = Cell::new(c.row - 1, c.col);
        (ctx.strip_of.get(&up) == Some(&ctx.strip_of[&c]))
            .then(|| t.get(up).map(|v| v + 1))
            .flatten()
    } else {
        None
    };
    match forced {
        Some(v) => {
            if v >= lo && v <= hi {
                t.set(c, v);
                fill_minimal(cells, idx + 1, ctx, t, out);
            }
        }
        None => {
            for v in lo..=hi {
                t.set(c, v);
                fill_minimal(cells, idx + 1, ctx, t, out);
            }
        }
    }
}

/// Flagged skew tableaux: 0-based SSYT of shape λ/μ with entries in row i at
/// most i − 1. Works for any shape.
pub fn enumerate_flagged_skew(shape: &SkewShape) -> Vec<SkewTableau> {
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut t = SkewTableau::zero(shape);
    fill_bounded(&cells, 0, &mut t, &mut out, &|c| (c.row - 1) as u32);
    out
}

/// All 0-based SSYT with every entry at most `max_entry`.
pub fn enumerate_ssyt_max_entry(shape: &SkewShape, max_entry: u32) -> Vec<SkewTableau> {
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut t = SkewTableau::zero(shape);
    fill_bounded(&cells, 0, &mut t, &mut out, &|_| max_entry);
    out
}

fn fill_bounded(
    cells: &[Cell],
    idx: usize,
    t: &mut SkewTableau,
    out: &mut Vec<SkewTableau>,
    bound: &dyn Fn(Cell) -> u32,
) {
    if idx == cells.len() {
        out.push(t.clone());
        return;
    }
    let c = cells[idx];
    let mut lo = 0u32;
    if c.col > 1 {
        if let Some(left) = t.get(Cell::new(c.row, c.col - 1)) {
            lo = lo.max(left);
        }
    }
    if c.row > 1 {
        if let Some(above) = t.get(Cell::new(c.row - 1, c.col)) {
            lo = lo.max(above + 1);
        }
    }
    for v in lo..=bound(c) {
        t.set(c, v);
        fill_bounded(cells, idx + 1, t, out, bound);
    }
}

/// A semistandard filling of \[μ\] with entries in 1..=d.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct MuTableau {
    mu: Partition,
    rows: Vec<Vec<u32>>,
}

impl MuTableau {
    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        if !self.mu.contains_cell(c) {
            return None;
        }
        Some(self.rows[c.row - 1][c.col - 1])
    }

    pub fn row_entries(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry_vec(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Okounkov–Olshanski tableaux of λ/μ: SSYT of shape μ with entries in
/// 1..=ℓ(λ) such that c(u) < λ_{d+1−T(u)} for every cell u of \[μ\].
pub fn enumerate_oot(shape: &SkewShape) -> Vec<MuTableau> {
    let mu = shape.inner().clone();
    let d = shape.outer().len() as u32;
    let cells = mu.cells();
    let mut rows: Vec<Vec<u32>> = mu.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    fill_oot(shape, &cells, 0, d, &mut rows, &mut out);
    out
}

fn fill_oot(
    shape: &SkewShape,
    cells: &[Cell],
    idx: usize,
    d: u32,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<MuTableau>,
) {
    if idx == cells.len() {
        out.push(MuTableau {
            mu: shape.inner().clone(),
            rows: rows.clone(),
        });
        return;
    }
    let c = cells[idx];
    let mut lo = 1u32;
    if c.col > 1 {
        lo = lo.max(rows[c.row - 1][c.col - 2]);
    }
    if c.row > 1 && shape.inner().part(c.row - 1) >= c.col {
        lo = lo.max(rows[c.row - 2][c.col - 1] + 1);
    }
    for v in lo..=d {
        // Admissibility: the OOF factor λ_{d+1-v} - c(u) must stay positive.
        let bound = shape.outer().part((d + 1 - v) as usize) as isize;
        if c.content() < bound {
            rows[c.row - 1][c.col - 1] = v;
            fill_oot(shape, cells, idx + 1, d, rows, out);
        }
    }
    rows[c.row - 1][c.col - 1] = 0;
}

/// Exact number of standard fillings of λ/μ, by memoized recursion over
/// removable outer corners. Works for any shape; the independent oracle for
/// every hook-length formula in this crate.
pub fn count_syt(shape: &SkewShape) -> BigUint {
    let mut memo: HashMap<Vec<usize>, BigUint> = HashMap::new();
    let lambda: Vec<usize> = shape.outer().parts().to_vec();
    let mu: Vec<usize> = (1..=shape.outer().len())
        .map(|i| shape.inner_part(i))
        .collect();
    count_syt_rec(&lambda, &mu, &mut memo)
}

fn count_syt_rec(
    lambda: &[usize],
    mu: &[usize],
    memo: &mut HashMap<Vec<usize>, BigUint>,
) -> BigUint {
    if lambda.iter().zip(mu.iter()).all(|(a, b)| a == b) {
        return BigUint::one();
    }
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..lambda.len() {
        // (i+1, λ_i) is removable when the row still has skew cells and the
        // row below is strictly shorter.
        let removable = lambda[i] > mu[i] && (i + 1 == lambda.len() || lambda[i + 1] < lambda[i]);
        if removable {
            let mut next = lambda.to_vec();
            next[i] -= 1;
            total += count_syt_rec(&next, mu, memo);
        }
    }
    memo.insert(lambda.to_vec(), total.clone());
    total
}

/// All 0-based SSYT of weight at most `max_weight`, in canonical order.
/// Drives the truncated skew Schur series.
pub fn enumerate_bounded_ssyt(shape: &SkewShape, max_weight: u64) -> Vec<SkewTableau> {
    let cells = shape.cells();
    let t0 = minimum_tableau(shape);
    // Exact minimum completion weights: suffix sums of T_0, the entrywise
    // minimal SSYT.
    let mut suffix_min = vec![0u64; cells.len() + 1];
    for i in (0..cells.len()).rev() {
        suffix_min[i] = suffix_min[i + 1] + t0.get(cells[i]).unwrap() as u64;
    }
    let mut out = Vec::new();
    let mut t = SkewTableau::zero(shape);
    fill_weighted(&cells, 0, 0, max_weight, &suffix_min, &mut t, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill_weighted(
    cells: &[Cell],
    idx: usize,
    weight: u64,
    max_weight: u64,
    suffix_min: &[u64],
    t: &mut SkewTableau,
    out: &mut Vec<SkewTableau>,
) {
    if idx == cells.len() {
        out.push(t.clone());
        return;
    }
    let c = cells[idx];
    let mut lo = 0u32;
    if c.col > 1 {
        if let Some(left) = t.get(Cell::new(c.row, c.col - 1)) {
            lo = lo.max(left);
        }
    }
    if c.row > 1 {
        if let Some(above) = t.get(Cell::new(c.row - 1, c.col)) {
            lo = lo.max(above + 1);
        }
    }
    let mut v = lo;
    while weight + v as u64 + suffix_min[idx + 1] <= max_weight {
        t.set(c, v);
        fill_weighted(
            cells,
            idx + 1,
            weight + v as u64,
            max_weight,
            suffix_min,
            t,
            out,
        );
        v += 1;
    }
}
