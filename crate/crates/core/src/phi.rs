//! The bijection between excited diagrams and minimal skew SSYT.
//!
//! `phi` builds the tableau strip by strip: the j-th column of the deformed
//! Kreiman path γ_i(D) is paired with the j-th column of the Lascoux–Pragacz
//! strip θ_i (both counted from each path's west end). The bottom entry of
//! θ_i's j-th column accumulates the broken-diagonal counts b_j along
//! γ_i(D); the rest of the column is filled upward with consecutive
//! decrements. `phi_inverse` recovers the diagram from the displacement
//! counts α read off T̄ = T − T_0.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::excited::{
    active_cells, beta_move, diagram_with_cells, enumerate_excited, initial_diagram,
    ExcitedDiagram,
};
use crate::report::VerificationReport;
use crate::shape::{Cell, SkewShape};
use crate::strips::{column_segment, lascoux_pragacz};
use crate::tableaux::{
    active_columns_with, apply_delta_with, enumerate_min_via_moves, is_minimal, minimum_tableau,
    SkewTableau,
};

/// Maps an excited diagram to its minimal tableau.
pub fn phi(d: &ExcitedDiagram) -> Result<SkewTableau> {
    let shape = d.shape();
    if !shape.is_connected() {
        return Err(Error::UnsupportedShape("phi requires a connected shape"));
    }
    let thetas = lascoux_pragacz(shape);
    if thetas.len() != d.gamma_count() {
        return Err(Error::Structural("strip/path count mismatch"));
    }
    let mut t = minimum_tableau(shape);
    let mut filled: BTreeSet<Cell> = BTreeSet::new();
    for i in 1..=thetas.len() {
        let theta = thetas.strip(i)?;
        let gamma = d.gamma(i)?;
        let gamma_cols = path_columns(gamma);
        let theta_cols = theta.columns();
        if gamma_cols.len() != theta_cols.len() {
            return Err(Error::Structural("paired paths cover different column counts"));
        }
        for (j, (&gcol, &tcol)) in gamma_cols.iter().zip(theta_cols.iter()).enumerate() {
            let b = gamma
                .iter()
                .filter(|c| c.col == gcol && d.broken().contains(c))
                .count() as u32;
            let seg = column_segment(theta, tcol)?;
            let bottom = *seg.last().unwrap();
            let value = if j == 0 {
                b
            } else {
                let west = Cell::new(bottom.row, bottom.col - 1);
                if !filled.contains(&west) {
                    return Err(Error::Structural("west neighbor of column bottom unfilled"));
                }
                t.get(west).unwrap() + b
            };
            // Fill the segment bottom-up, consecutive entries differing by 1.
            for (k, c) in seg.iter().rev().enumerate() {
                let v = value
                    .checked_sub(k as u32)
                    .ok_or(Error::Structural("column fill went negative"))?;
                t.set(*c, v);
                filled.insert(*c);
            }
        }
    }
    if filled.len() != shape.size() {
        return Err(Error::Structural("phi did not fill every cell"));
    }
    if !t.is_semistandard() {
        return Err(Error::Structural("phi output is not semistandard"));
    }
    debug_assert!(is_minimal(&t).unwrap_or(false), "phi output not minimal");
    Ok(t)
}

/// Distinct columns of a path in path order (ascending).
fn path_columns(path: &[Cell]) -> Vec<usize> {
    let mut cols: Vec<usize> = path.iter().map(|c| c.col).collect();
    cols.dedup();
    cols
}

/// The displacement count α for a μ-cell u = (i,j) of a minimal tableau:
/// the number of strips θ_k whose column-j segment carries T̄ > μ'_j − i.
/// Strips without a cell in column j contribute nothing.
pub fn alpha(t: &SkewTableau, u: Cell) -> Result<usize> {
    if !is_minimal(t)? {
        return Err(Error::NotMinimal);
    }
    if !t.shape().inner().contains_cell(u) {
        return Err(Error::CellOutside(u));
    }
    Ok(alpha_unchecked(t, u))
}

/// As `alpha`, without re-validating minimality. For callers that already
/// hold a tableau from a minimal enumeration.
pub fn alpha_unchecked(t: &SkewTableau, u: Cell) -> usize {
    AlphaContext::new(t.shape()).alpha(t, u)
}

/// Precomputed per-shape data for repeated α evaluations.
pub struct AlphaContext {
    t0: SkewTableau,
    inner_conj: crate::shape::Partition,
    /// Per strip, the top cell of each absolute column's segment.
    column_tops: Vec<std::collections::BTreeMap<usize, Cell>>,
}

impl AlphaContext {
    pub fn new(shape: &SkewShape) -> Self {
        let thetas = lascoux_pragacz(shape);
        let column_tops = thetas
            .strips
            .iter()
            .map(|strip| {
                strip
                    .columns()
                    .into_iter()
                    .map(|col| (col, column_segment(strip, col).unwrap()[0]))
                    .collect()
            })
            .collect();
        AlphaContext {
            t0: minimum_tableau(shape),
            inner_conj: shape.inner().conjugate(),
            column_tops,
        }
    }

    pub fn alpha(&self, t: &SkewTableau, u: Cell) -> usize {
        let threshold = self.inner_conj.part(u.col) as i64 - u.row as i64;
        self.column_tops
            .iter()
            .filter(|tops| {
                tops.get(&u.col).is_some_and(|&c| {
                    let tbar = t.get(c).unwrap() as i64 - self.t0.get(c).unwrap() as i64;
                    tbar > threshold
                })
            })
            .count()
    }
}

/// Inverse of `phi`: displaces every μ-cell diagonally by its α and rebuilds
/// the diagram state.
pub fn phi_inverse(t: &SkewTableau) -> Result<ExcitedDiagram> {
    if !is_minimal(t)? {
        return Err(Error::NotMinimal);
    }
    let shape = t.shape();
    let mut cells = BTreeSet::new();
    for u in shape.inner().cells() {
        let a = alpha_unchecked(t, u);
        cells.insert(Cell::new(u.row + a, u.col + a));
    }
    diagram_with_cells(shape, &cells)
}

/// Checks Φ∘β = δ∘Φ on every (diagram, active cell) pair of the shape. The
/// δ target is (index of the rewritten Kreiman path; origin column of the
/// moved cell).
pub fn verify_commutation(shape: &SkewShape) -> Result<VerificationReport> {
    if !shape.is_connected() {
        return Err(Error::UnsupportedShape(
            "commutation check requires a connected shape",
        ));
    }
    let mut report = VerificationReport::new("commutation", &shape.display());
    let thetas = lascoux_pragacz(shape);
    for d in enumerate_excited(shape) {
        let t = phi(&d)?;
        for u in active_cells(&d) {
            let (moved, path_idx) = beta_move(&d, u)?;
            let lhs = phi(&moved)?;
            let target_col = d.origin(u)?.col;
            let case = format!("D={:?} beta at {u}", d.cell_vec());
            if !active_columns_with(&t, &thetas).contains(&(path_idx, target_col)) {
                report.fail(
                    &case,
                    &format!("delta ({path_idx};{target_col}) active on phi(D)"),
                    "inactive",
                );
                continue;
            }
            let rhs = apply_delta_with(&t, &thetas, path_idx, target_col)?;
            report.check(
                &case,
                &format!("{:?}", lhs.entry_vec()),
                &format!("{:?}", rhs.entry_vec()),
            );
        }
    }
    Ok(report.finish())
}

/// Checks that Φ is a bijection: injective on the excited-diagram closure,
/// with image exactly the δ-closure of T_0.
pub fn verify_bijection(shape: &SkewShape) -> Result<VerificationReport> {
    if !shape.is_connected() {
        return Err(Error::UnsupportedShape(
            "bijection check requires a connected shape",
        ));
    }
    let mut report = VerificationReport::new("bijection", &shape.display());
    let diagrams = enumerate_excited(shape);
    let mut image = BTreeSet::new();
    for d in &diagrams {
        let t = phi(d)?;
        if !image.insert(t.entry_vec()) {
            report.fail(
                &format!("injectivity at D={:?}", d.cell_vec()),
                "new image tableau",
                "duplicate",
            );
        }
        let back = phi_inverse(&t)?;
        report.check(
            &format!("round trip at D={:?}", d.cell_vec()),
            &format!("{:?}", d.cell_vec()),
            &format!("{:?}", back.cell_vec()),
        );
    }
    let closure: BTreeSet<Vec<u32>> = enumerate_min_via_moves(shape)?
        .into_iter()
        .map(|t| t.entry_vec())
        .collect();
    report.check(
        "image equals the delta-closure",
        &format!("{} tableaux", closure.len()),
        &format!(
            "{} tableaux{}",
            image.len(),
            if image == closure { "" } else { " (different set)" }
        ),
    );
    report.check(
        "phi([mu]) = T_0",
        &format!("{:?}", minimum_tableau(shape).entry_vec()),
        &format!("{:?}", phi(&initial_diagram(shape))?.entry_vec()),
    );
    Ok(report.finish())
}
