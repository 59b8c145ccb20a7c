//! Fixed-width ASCII grids for shapes, tableaux, diagrams and arrays.
//! Inner cells print as '.', excited-diagram cells as 'X', broken cells as
//! '*'. Output is stable across runs.

use crate::excited::ExcitedDiagram;
use crate::hillman_grassl::{RppLambda, WeightArray};
use crate::shape::{Cell, SkewShape};
use crate::tableaux::{MuTableau, SkewTableau};

fn grid_to_string(rows: Vec<Vec<String>>) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|s| s.len())
        .max()
        .unwrap_or(0);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|s| format!("{s:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn render_shape(shape: &SkewShape) -> String {
    let rows = (1..=shape.outer().len())
        .map(|i| {
            (1..=shape.outer().part(i))
                .map(|j| {
                    if shape.is_inner(Cell::new(i, j)) {
                        ".".to_string()
                    } else {
                        "#".to_string()
                    }
                })
                .collect()
        })
        .collect();
    grid_to_string(rows)
}

pub fn render_tableau(t: &SkewTableau) -> String {
    let shape = t.shape();
    let rows = (1..=shape.outer().len())
        .map(|i| {
            (1..=shape.outer().part(i))
                .map(|j| match t.get(Cell::new(i, j)) {
                    Some(v) => v.to_string(),
                    None => ".".to_string(),
                })
                .collect()
        })
        .collect();
    grid_to_string(rows)
}

pub fn render_mu_tableau(t: &MuTableau) -> String {
    let rows = t
        .row_entries()
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    grid_to_string(rows)
}

pub fn render_diagram(d: &ExcitedDiagram) -> String {
    let outer = d.shape().outer();
    let rows = (1..=outer.len())
        .map(|i| {
            (1..=outer.part(i))
                .map(|j| {
                    let c = Cell::new(i, j);
                    if d.contains(c) {
                        "X".to_string()
                    } else if d.broken().contains(&c) {
                        "*".to_string()
                    } else {
                        ".".to_string()
                    }
                })
                .collect()
        })
        .collect();
    grid_to_string(rows)
}

/// Renders a broken-diagonal set alone: '*' on the set, '.' elsewhere in \[λ\].
pub fn render_broken(d: &ExcitedDiagram) -> String {
    let outer = d.shape().outer();
    let rows = (1..=outer.len())
        .map(|i| {
            (1..=outer.part(i))
                .map(|j| {
                    if d.broken().contains(&Cell::new(i, j)) {
                        "*".to_string()
                    } else {
                        ".".to_string()
                    }
                })
                .collect()
        })
        .collect();
    grid_to_string(rows)
}

pub fn render_array(a: &WeightArray) -> String {
    grid_to_string(
        a.values()
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
    )
}

pub fn render_rpp(p: &RppLambda) -> String {
    grid_to_string(
        p.values()
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::Partition;
    use crate::tableaux::minimum_tableau;

    #[test]
    fn tableau_rendering() {
        let s = SkewShape::new(
            Partition::new(vec![2, 2]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        )
        .unwrap();
        assert_eq!(render_tableau(&minimum_tableau(&s)), ". 0\n0 1");
        let empty = SkewShape::new(Partition::empty(), Partition::empty()).unwrap();
        assert_eq!(render_tableau(&minimum_tableau(&empty)), "");
    }

    #[test]
    fn diagram_rendering() {
        let s = SkewShape::new(
            Partition::new(vec![2, 2]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        )
        .unwrap();
        let d = crate::excited::initial_diagram(&s);
        assert_eq!(render_diagram(&d), "X .\n. *");
    }
}
