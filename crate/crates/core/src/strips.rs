//! Border-strip decompositions of a skew shape.
//!
//! Two decompositions of \[λ/μ\] into strips (connected skew shapes with no
//! 2×2 block) are used throughout: the Lascoux–Pragacz decomposition θ, built
//! by repeatedly peeling the outer border strip, and the Kreiman
//! decomposition γ, built by peeling the inner border strip hugging μ.
//!
//! Both are computed here by the equivalent per-diagonal rank rule: inside
//! \[λ/μ\] the cells of one content form a contiguous diagonal run; the cell at
//! distance ε from the outer (resp. inner) end of its run belongs to the θ
//! (resp. γ) peel at distance ε. A peel at a given ε may be disconnected;
//! each connected component becomes its own strip. Strips are indexed by
//! (ε ascending, then northeast-most component first), which pairs θ_i with
//! γ_i: same ε, same content range, same length.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::shape::{Cell, SkewShape};

/// Which decomposition a strip belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StripKind {
    Theta,
    Gamma,
}

/// One border strip, stored as a SW→NE lattice path (north and east steps).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorderStrip {
    pub kind: StripKind,
    /// 1-based index within its decomposition.
    pub index: usize,
    /// Peel distance ε: the per-diagonal rank of every cell of the strip.
    pub epsilon: usize,
    /// Cells in path order: start at the SW end, end at the NE end.
    pub cells: Vec<Cell>,
}

impl BorderStrip {
    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn end(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    /// Row of the topmost cell, written 𝖿(θ_r).
    pub fn top_row(&self) -> usize {
        self.end().row
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Distinct columns covered by the strip, ascending (= path order).
    pub fn columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.cells.iter().map(|c| c.col).collect();
        cols.dedup();
        cols
    }
}

/// The θ_r-height of a row: ht(i) = i - 𝖿(θ_r). Defined for rows at or below
/// the strip's top row.
pub fn theta_height(strip: &BorderStrip, row: usize) -> Result<usize> {
    let top = strip.top_row();
    if row < top {
        return Err(Error::RowAboveStrip { row, top_row: top });
    }
    Ok(row - top)
}

/// The maximal vertical run of a strip in an absolute column, top cell first.
pub fn column_segment(strip: &BorderStrip, col: usize) -> Result<Vec<Cell>> {
    let mut run: Vec<Cell> = strip.cells.iter().copied().filter(|c| c.col == col).collect();
    if run.is_empty() {
        return Err(Error::NoCellInColumn(col));
    }
    run.sort_by_key(|c| c.row);
    Ok(run)
}

/// A full decomposition of \[λ/μ\] into pairwise disjoint border strips.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub shape: SkewShape,
    pub kind: StripKind,
    pub strips: Vec<BorderStrip>,
}

impl Decomposition {
    /// 1-based strip lookup.
    pub fn strip(&self, i: usize) -> Result<&BorderStrip> {
        if i == 0 || i > self.strips.len() {
            return Err(Error::StripIndexOutOfRange(i));
        }
        Ok(&self.strips[i - 1])
    }

    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }

    /// Index (1-based) of the strip containing a cell.
    pub fn strip_of(&self, c: Cell) -> Option<usize> {
        self.strips
            .iter()
            .position(|s| s.contains(c))
            .map(|i| i + 1)
    }
}

/// The Lascoux–Pragacz decomposition (θ_1, …, θ_k): iterated outer border
/// strips. The empty shape yields an empty decomposition.
pub fn lascoux_pragacz(shape: &SkewShape) -> Decomposition {
    decompose(shape, StripKind::Theta)
}

/// The Kreiman decomposition (γ_1, …, γ_k): iterated inner border strips
/// hugging μ. The empty shape yields an empty decomposition.
pub fn kreiman(shape: &SkewShape) -> Decomposition {
    decompose(shape, StripKind::Gamma)
}

fn decompose(shape: &SkewShape, kind: StripKind) -> Decomposition {
    // Group the cells of each peel distance ε.
    let mut peels: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for (content, _) in shape.diagonal_lengths() {
        let (min_row, max_row) = shape.diagonal_rows(content).unwrap();
        for row in min_row..=max_row {
            let eps = match kind {
                StripKind::Theta => max_row - row,
                StripKind::Gamma => row - min_row,
            };
            let col = (row as isize + content) as usize;
            peels.entry(eps).or_default().push(Cell::new(row, col));
        }
    }

    let mut strips = Vec::new();
    for (eps, cells) in peels {
        for comp in components(&cells) {
            strips.push((eps, comp));
        }
    }
    // Strips at the same ε are already emitted northeast-most first by
    // `components`; global order is (ε, NE-first).
    let strips = strips
        .into_iter()
        .enumerate()
        .map(|(idx, (epsilon, cells))| {
            let strip = BorderStrip {
                kind,
                index: idx + 1,
                epsilon,
                cells,
            };
            debug_assert!(is_valid_path(&strip.cells), "strip is not a NE lattice path");
            strip
        })
        .collect();
    Decomposition {
        shape: shape.clone(),
        kind,
        strips,
    }
}

/// Connected components of a cell set under edge adjacency, each sorted into
/// path order (col ascending, row descending), components ordered
/// northeast-most first (by maximal content descending).
fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: std::collections::HashSet<Cell> = cells.iter().copied().collect();
    let mut remaining = set.clone();
    let mut comps: Vec<Vec<Cell>> = Vec::new();
    let mut seeds: Vec<Cell> = cells.to_vec();
    seeds.sort();
    for seed in seeds {
        if !remaining.contains(&seed) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![seed];
        remaining.remove(&seed);
        while let Some(c) = stack.pop() {
            comp.push(c);
            let mut neighbors = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
            if c.row > 1 {
                neighbors.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                neighbors.push(Cell::new(c.row, c.col - 1));
            }
            for nb in neighbors {
                if remaining.remove(&nb) {
                    stack.push(nb);
                }
            }
        }
        comp.sort_by(|a, b| a.col.cmp(&b.col).then(b.row.cmp(&a.row)));
        comps.push(comp);
    }
    comps.sort_by_key(|comp| -comp.iter().map(|c| c.content()).max().unwrap());
    comps
}

fn is_valid_path(cells: &[Cell]) -> bool {
    cells.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        (b.row + 1 == a.row && b.col == a.col) || (b.row == a.row && b.col == a.col + 1)
    })
}

/// Checks the structural lemma tying the two decompositions together: for
/// every i, the starting point of γ_i sits ε_i columns (and rows) southeast
/// of the starting point of θ_i.
pub fn verify_gamma_theta(shape: &SkewShape) -> Result<VerificationReport> {
    if shape.is_empty() || !shape.is_connected() {
        return Err(Error::UnsupportedShape(
            "gamma-theta lemma requires a nonempty connected shape",
        ));
    }
    let mut report = VerificationReport::new("gamma-theta", &shape.display());
    let thetas = lascoux_pragacz(shape);
    let gammas = kreiman(shape);
    if thetas.len() != gammas.len() {
        report.fail(
            "strip-count",
            &format!("{}", thetas.len()),
            &format!("{}", gammas.len()),
        );
        return Ok(report.finish());
    }
    for i in 1..=thetas.len() {
        let theta = thetas.strip(i)?;
        let gamma = gammas.strip(i)?;
        let eps = theta.epsilon;
        report.check(
            &format!("strip {i} epsilon agreement"),
            &eps.to_string(),
            &gamma.epsilon.to_string(),
        );
        report.check(
            &format!("strip {i} start column difference"),
            &eps.to_string(),
            &(gamma.start().col as isize - theta.start().col as isize).to_string(),
        );
        report.check(
            &format!("strip {i} start row difference"),
            &eps.to_string(),
            &(gamma.start().row as isize - theta.start().row as isize).to_string(),
        );
    }
    Ok(report.finish())
}
