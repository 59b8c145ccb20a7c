//! Excited diagrams of a skew shape λ/μ.
//!
//! An excited diagram is a |μ|-cell subset of \[λ\] reached from \[μ\] by β-moves
//! (a cell (i,j) jumps to (i+1,j+1) when that 2×2 corner is free). Each
//! diagram carries state that the rest of the crate consumes:
//!
//! * the origin map, sending each cell back to the μ-cell it came from;
//! * the deformed Kreiman paths γ_i(D), updated by ladder moves; their
//!   union is always \[λ\]∖D and their endpoints never move;
//! * the broken diagonals Br(D), seeded on the diagonals of \[λ/μ\] with
//!   contents {μ_i − i : 1 ≤ i ≤ ℓ(λ)−1} and shifted one column west by each
//!   β-move. Equivalently, Br(D) is the set of cells from which some γ_i(D)
//!   takes a north step.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::shape::{Cell, Partition, SkewShape};
use crate::strips::kreiman;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExcitedDiagram {
    shape: SkewShape,
    cells: BTreeSet<Cell>,
    origin: BTreeMap<Cell, Cell>,
    gammas: Vec<Vec<Cell>>,
    broken: BTreeSet<Cell>,
}

impl ExcitedDiagram {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    /// Sorted cell list, the canonical key of the diagram.
    pub fn cell_vec(&self) -> Vec<Cell> {
        self.cells.iter().copied().collect()
    }

    pub fn broken(&self) -> &BTreeSet<Cell> {
        &self.broken
    }

    /// The deformed Kreiman paths γ_i(D), 1-based.
    pub fn gamma(&self, i: usize) -> Result<&[Cell]> {
        self.gammas
            .get(i - 1)
            .map(|g| g.as_slice())
            .ok_or(Error::StripIndexOutOfRange(i))
    }

    pub fn gamma_count(&self) -> usize {
        self.gammas.len()
    }

    /// The μ-cell a diagram cell was excited from.
    pub fn origin(&self, c: Cell) -> Result<Cell> {
        self.origin
            .get(&c)
            .copied()
            .ok_or(Error::CellOutside(c))
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }
}

/// The initial diagram \[μ\] with identity origins, undeformed Kreiman paths
/// and the seed broken diagonals.
pub fn initial_diagram(shape: &SkewShape) -> ExcitedDiagram {
    let mu_cells: BTreeSet<Cell> = shape.inner().cells().into_iter().collect();
    let origin = mu_cells.iter().map(|&c| (c, c)).collect();
    let gammas = kreiman(shape)
        .strips
        .into_iter()
        .map(|s| s.cells)
        .collect();

    let d = shape.outer().len();
    let contents: BTreeSet<isize> = (1..d)
        .map(|i| shape.inner_part(i) as isize - i as isize)
        .collect();
    let broken = shape
        .cells()
        .into_iter()
        .filter(|c| contents.contains(&c.content()))
        .collect();

    let diagram = ExcitedDiagram {
        shape: shape.clone(),
        cells: mu_cells,
        origin,
        gammas,
        broken,
    };
    debug_assert!(diagram.validate().is_ok());
    diagram
}

/// Cells of D whose β-move is available: (i,j) ∈ D with (i+1,j), (i,j+1),
/// (i+1,j+1) all in \[λ\]∖D.
pub fn active_cells(d: &ExcitedDiagram) -> Vec<Cell> {
    let lambda = d.shape().outer();
    d.cells
        .iter()
        .copied()
        .filter(|&c| {
            [
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row, c.col + 1),
                Cell::new(c.row + 1, c.col + 1),
            ]
            .iter()
            .all(|n| lambda.contains_cell(*n) && !d.cells.contains(n))
        })
        .collect()
}

/// Applies the β-move at an active cell. Returns the new diagram and the
/// 1-based index of the Kreiman path rewritten by the ladder move.
pub fn beta_move(d: &ExcitedDiagram, u: Cell) -> Result<(ExcitedDiagram, usize)> {
    if !active_cells(d).contains(&u) {
        return Err(Error::InactiveCell(u));
    }
    let target = Cell::new(u.row + 1, u.col + 1);
    let west = Cell::new(u.row + 1, u.col);
    let north = Cell::new(u.row, u.col + 1);

    let mut cells = d.cells.clone();
    cells.remove(&u);
    cells.insert(target);

    let mut origin = d.origin.clone();
    let o = origin.remove(&u).ok_or(Error::Structural("missing origin"))?;
    origin.insert(target, o);

    // Br(D') = Br(D) ∖ {(i+1,j+1)} ∪ {(i+1,j)}.
    let mut broken = d.broken.clone();
    if !broken.remove(&target) {
        return Err(Error::Structural("target of beta-move is not broken"));
    }
    broken.insert(west);

    // Ladder move: the unique path corner west → target → north becomes
    // west → u → north.
    let mut gammas = d.gammas.clone();
    let mut path_index = None;
    'outer: for (pi, path) in gammas.iter_mut().enumerate() {
        for t in 0..path.len().saturating_sub(2) {
            if path[t] == west && path[t + 1] == target && path[t + 2] == north {
                path[t + 1] = u;
                path_index = Some(pi + 1);
                break 'outer;
            }
        }
    }
    let path_index = path_index.ok_or(Error::Structural("no path corner for ladder move"))?;

    let next = ExcitedDiagram {
        shape: d.shape.clone(),
        cells,
        origin,
        gammas,
        broken,
    };
    debug_assert!(next.validate().is_ok());
    Ok((next, path_index))
}

/// Applies the β-move at an active cell.
pub fn apply_beta(d: &ExcitedDiagram, u: Cell) -> Result<ExcitedDiagram> {
    beta_move(d, u).map(|(next, _)| next)
}

/// Cells from which a reverse β-move is available.
pub fn reverse_active_cells(d: &ExcitedDiagram) -> Vec<Cell> {
    d.cells
        .iter()
        .copied()
        .filter(|&c| {
            c.row > 1
                && c.col > 1
                && !d.cells.contains(&Cell::new(c.row - 1, c.col - 1))
                && !d.cells.contains(&Cell::new(c.row - 1, c.col))
                && !d.cells.contains(&Cell::new(c.row, c.col - 1))
        })
        .collect()
}

/// The full β-closure of \[μ\], deduplicated by cell set, in canonical order
/// (lexicographic on the sorted cell list).
pub fn enumerate_excited(shape: &SkewShape) -> Vec<ExcitedDiagram> {
    let initial = initial_diagram(shape);
    let mut seen: BTreeMap<Vec<Cell>, ExcitedDiagram> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(initial.clone());
    seen.insert(initial.cell_vec(), initial);
    while let Some(d) = queue.pop_front() {
        for u in active_cells(&d) {
            let next = apply_beta(&d, u).expect("active cell");
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(next.cell_vec()) {
                e.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    seen.into_values().collect()
}

/// Rebuilds the diagram with the given support by reverse-replaying β-moves
/// down to \[μ\] and replaying them forward with full state. Fails if the
/// support is not an excited diagram of the shape.
pub fn diagram_with_cells(shape: &SkewShape, target: &BTreeSet<Cell>) -> Result<ExcitedDiagram> {
    if target.len() != shape.inner().size() {
        return Err(Error::Structural("cell count differs from |mu|"));
    }
    let mu_cells: BTreeSet<Cell> = shape.inner().cells().into_iter().collect();
    let mut current = target.clone();
    let mut forward_moves = Vec::new();
    while current != mu_cells {
        let candidates: Vec<Cell> = current
            .iter()
            .copied()
            .filter(|&c| {
                c.row > 1
                    && c.col > 1
                    && !current.contains(&Cell::new(c.row - 1, c.col - 1))
                    && !current.contains(&Cell::new(c.row - 1, c.col))
                    && !current.contains(&Cell::new(c.row, c.col - 1))
            })
            .collect();
        let c = *candidates
            .first()
            .ok_or(Error::Structural("support is not reachable from [mu]"))?;
        current.remove(&c);
        let source = Cell::new(c.row - 1, c.col - 1);
        current.insert(source);
        forward_moves.push(source);
    }
    let mut d = initial_diagram(shape);
    for u in forward_moves.into_iter().rev() {
        d = apply_beta(&d, u)?;
    }
    if d.cells != *target {
        return Err(Error::Structural("replay did not reproduce the support"));
    }
    Ok(d)
}

/// The 0-1 array A_D of shape λ supported on the broken diagonals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExcitedArray {
    pub outer: Partition,
    /// `values[i-1][j-1]` for cell (i,j) of \[λ\].
    pub values: Vec<Vec<u32>>,
}

pub fn excited_array(d: &ExcitedDiagram) -> ExcitedArray {
    let outer = d.shape().outer().clone();
    let mut values: Vec<Vec<u32>> = outer
        .parts()
        .iter()
        .map(|&p| vec![0; p])
        .collect();
    for c in &d.broken {
        values[c.row - 1][c.col - 1] = 1;
    }
    ExcitedArray { outer, values }
}

impl ExcitedDiagram {
    /// Recomputes the carried state from first principles and cross-checks.
    /// Exercised in debug builds after every move.
    pub fn validate(&self) -> Result<()> {
        let lambda = self.shape.outer();
        // Cells inside [λ], exactly |μ| of them, one origin each.
        if self.cells.len() != self.shape.inner().size() {
            return Err(Error::Structural("wrong cell count"));
        }
        for c in &self.cells {
            if !lambda.contains_cell(*c) {
                return Err(Error::Structural("cell outside lambda"));
            }
            let o = self.origin.get(c).ok_or(Error::Structural("origin missing"))?;
            let e = c.row as isize - o.row as isize;
            if e < 0 || c.col as isize - o.col as isize != e {
                return Err(Error::Structural("origin not on the same diagonal"));
            }
        }
        // Paths: disjoint union equals [λ]∖D, endpoints match the undeformed
        // Kreiman strips, and each is a NE lattice path.
        let undeformed = kreiman(&self.shape);
        if undeformed.len() != self.gammas.len() {
            return Err(Error::Structural("path count drifted"));
        }
        let mut union = BTreeSet::new();
        for (i, path) in self.gammas.iter().enumerate() {
            let reference = undeformed.strip(i + 1)?;
            if path.is_empty()
                || path[0] != reference.start()
                || *path.last().unwrap() != reference.end()
            {
                return Err(Error::Structural("path endpoints drifted"));
            }
            let ok_steps = path.windows(2).all(|w| {
                (w[1].row + 1 == w[0].row && w[1].col == w[0].col)
                    || (w[1].row == w[0].row && w[1].col == w[0].col + 1)
            });
            if !ok_steps {
                return Err(Error::Structural("path steps invalid"));
            }
            for c in path {
                if !union.insert(*c) {
                    return Err(Error::Structural("paths intersect"));
                }
            }
        }
        let complement: BTreeSet<Cell> = lambda
            .cells()
            .into_iter()
            .filter(|c| !self.cells.contains(c))
            .collect();
        if union != complement {
            return Err(Error::Structural("path union is not the complement"));
        }
        // Broken diagonals sit exactly on the north-step sources of the paths.
        let mut north_sources = BTreeSet::new();
        for path in &self.gammas {
            for w in path.windows(2) {
                if w[1].row + 1 == w[0].row {
                    north_sources.insert(w[0]);
                }
            }
        }
        if north_sources != self.broken {
            return Err(Error::Structural("broken diagonals drifted"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::cell;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn set(pairs: &[(usize, usize)]) -> BTreeSet<Cell> {
        pairs.iter().map(|&(r, c)| cell(r, c)).collect()
    }

    #[test]
    fn initial_diagram_examples() {
        let d = initial_diagram(&shape(&[2, 2], &[1]));
        assert_eq!(*d.cells(), set(&[(1, 1)]));
        assert_eq!(*d.broken(), set(&[(2, 2)]));

        let d = initial_diagram(&shape(&[5, 5, 3, 3, 2], &[2, 2]));
        assert_eq!(
            *d.broken(),
            set(&[(2, 3), (3, 3), (4, 1), (5, 2), (5, 1)])
        );

        // μ = ∅: broken diagonals carry contents -1, …, 1-ℓ(λ).
        let d = initial_diagram(&shape(&[3, 2], &[]));
        assert!(d.cells().is_empty());
        assert_eq!(*d.broken(), set(&[(2, 1)]));
    }

    #[test]
    fn active_cell_examples() {
        let d = initial_diagram(&shape(&[2, 2], &[1]));
        assert_eq!(active_cells(&d), vec![cell(1, 1)]);
        let d = initial_diagram(&shape(&[2, 1], &[1]));
        assert!(active_cells(&d).is_empty());
        let d = initial_diagram(&shape(&[2, 2], &[2, 2]));
        assert!(active_cells(&d).is_empty());
    }

    #[test]
    fn beta_move_updates_state() {
        let d = initial_diagram(&shape(&[2, 2], &[1]));
        let (moved, path_idx) = beta_move(&d, cell(1, 1)).unwrap();
        assert_eq!(path_idx, 1);
        assert_eq!(*moved.cells(), set(&[(2, 2)]));
        assert_eq!(*moved.broken(), set(&[(2, 1)]));
        assert_eq!(
            moved.gamma(1).unwrap(),
            &[cell(2, 1), cell(1, 1), cell(1, 2)]
        );
        assert_eq!(moved.origin(cell(2, 2)).unwrap(), cell(1, 1));
        // The move is locally reversible.
        assert_eq!(reverse_active_cells(&moved), vec![cell(2, 2)]);
        assert!(beta_move(&d, cell(2, 2)).is_err());
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(enumerate_excited(&shape(&[5, 5, 3, 3, 2], &[2, 2])).len(), 6);
        let two = enumerate_excited(&shape(&[2, 2], &[1]));
        assert_eq!(
            two.iter().map(|d| d.cell_vec()).collect::<Vec<_>>(),
            vec![vec![cell(1, 1)], vec![cell(2, 2)]]
        );
        assert_eq!(enumerate_excited(&shape(&[2, 1], &[1])).len(), 1);
    }

    #[test]
    fn arrays() {
        let s = shape(&[2, 2], &[1]);
        let ds = enumerate_excited(&s);
        assert_eq!(excited_array(&ds[0]).values, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(excited_array(&ds[1]).values, vec![vec![0, 0], vec![1, 0]]);
        let empty = initial_diagram(&shape(&[2, 2], &[2, 2]));
        assert_eq!(
            excited_array(&empty).values,
            vec![vec![0, 0], vec![0, 0]]
        );
    }

    #[test]
    fn rebuild_from_support() {
        let s = shape(&[5, 5, 3, 3, 2], &[2, 2]);
        for d in enumerate_excited(&s) {
            let rebuilt = diagram_with_cells(&s, d.cells()).unwrap();
            assert_eq!(rebuilt, d);
        }
        // A non-diagram support is rejected.
        let bogus = set(&[(1, 1), (5, 1), (1, 2), (2, 2)]);
        assert!(diagram_with_cells(&s, &bogus).is_err());
    }
}
