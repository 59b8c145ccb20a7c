//! Wire formats. Every CLI JSON payload round-trips through these structs.
//!
//! Cells serialize as `[row, col]` (1-indexed). Inner partitions serialize
//! without zero padding. Big-integer coefficients serialize as decimal
//! strings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::excited::{diagram_with_cells, ExcitedArray, ExcitedDiagram};
use crate::hillman_grassl::{RppLambda, WeightArray};
use crate::qpoly::QPolynomial;
use crate::shape::{Cell, Partition, SkewShape};
use crate::strips::Decomposition;
use crate::tableaux::SkewTableau;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShapeJson {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
}

impl From<&SkewShape> for ShapeJson {
    fn from(s: &SkewShape) -> Self {
        ShapeJson {
            outer: s.outer().parts().to_vec(),
            inner: s.inner().parts().to_vec(),
        }
    }
}

impl TryFrom<ShapeJson> for SkewShape {
    type Error = Error;
    fn try_from(j: ShapeJson) -> Result<SkewShape> {
        SkewShape::new(Partition::new(j.outer)?, Partition::new(j.inner)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StripJson {
    pub epsilon: usize,
    pub cells: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub kind: String,
    pub strips: Vec<StripJson>,
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        DecompositionJson {
            kind: match d.kind {
                crate::strips::StripKind::Theta => "theta".to_string(),
                crate::strips::StripKind::Gamma => "gamma".to_string(),
            },
            strips: d
                .strips
                .iter()
                .map(|s| StripJson {
                    epsilon: s.epsilon,
                    cells: s.cells.iter().map(|c| [c.row, c.col]).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagramJson {
    pub cells: Vec<[usize; 2]>,
    pub broken: Vec<[usize; 2]>,
}

impl From<&ExcitedDiagram> for DiagramJson {
    fn from(d: &ExcitedDiagram) -> Self {
        DiagramJson {
            cells: d.cells().iter().map(|c| [c.row, c.col]).collect(),
            broken: d.broken().iter().map(|c| [c.row, c.col]).collect(),
        }
    }
}

fn parse_cells(pairs: &[[usize; 2]]) -> Result<std::collections::BTreeSet<Cell>> {
    pairs
        .iter()
        .map(|&[r, c]| {
            if r == 0 || c == 0 {
                Err(Error::InvalidCell)
            } else {
                Ok(Cell::new(r, c))
            }
        })
        .collect()
}

impl DiagramJson {
    /// Rebuilds the full diagram state for the given shape. The serialized
    /// broken set must match the recomputed one.
    pub fn into_diagram(self, shape: &SkewShape) -> Result<ExcitedDiagram> {
        let d = diagram_with_cells(shape, &parse_cells(&self.cells)?)?;
        if parse_cells(&self.broken)? != *d.broken() {
            return Err(Error::Structural("serialized broken set is inconsistent"));
        }
        Ok(d)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrayJson {
    pub outer: Vec<usize>,
    pub values: Vec<Vec<u32>>,
}

impl From<&WeightArray> for ArrayJson {
    fn from(a: &WeightArray) -> Self {
        ArrayJson {
            outer: a.outer().parts().to_vec(),
            values: a.values().to_vec(),
        }
    }
}

impl From<&ExcitedArray> for ArrayJson {
    fn from(a: &ExcitedArray) -> Self {
        ArrayJson {
            outer: a.outer.parts().to_vec(),
            values: a.values.clone(),
        }
    }
}

impl From<&RppLambda> for ArrayJson {
    fn from(p: &RppLambda) -> Self {
        ArrayJson {
            outer: p.outer().parts().to_vec(),
            values: p.values().to_vec(),
        }
    }
}

impl TryFrom<ArrayJson> for WeightArray {
    type Error = Error;
    fn try_from(j: ArrayJson) -> Result<WeightArray> {
        WeightArray::new(Partition::new(j.outer)?, j.values)
    }
}

impl TryFrom<ArrayJson> for RppLambda {
    type Error = Error;
    fn try_from(j: ArrayJson) -> Result<RppLambda> {
        RppLambda::new(Partition::new(j.outer)?, j.values)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableauJson {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    /// Row i padded to λ_i entries, null on the μ_i inner cells.
    pub rows: Vec<Vec<Option<u32>>>,
}

impl From<&SkewTableau> for TableauJson {
    fn from(t: &SkewTableau) -> Self {
        let shape = t.shape();
        let rows = (1..=shape.outer().len())
            .map(|i| {
                (1..=shape.outer().part(i))
                    .map(|j| t.get(Cell::new(i, j)))
                    .collect()
            })
            .collect();
        TableauJson {
            outer: shape.outer().parts().to_vec(),
            inner: shape.inner().parts().to_vec(),
            rows,
        }
    }
}

impl TryFrom<TableauJson> for SkewTableau {
    type Error = Error;
    fn try_from(j: TableauJson) -> Result<SkewTableau> {
        let shape = SkewShape::new(Partition::new(j.outer)?, Partition::new(j.inner)?)?;
        if j.rows.len() != shape.outer().len() {
            return Err(Error::ShapeMismatch);
        }
        let mut rows = Vec::with_capacity(j.rows.len());
        for (i, row) in j.rows.iter().enumerate() {
            let inner = shape.inner_part(i + 1);
            if row.len() != shape.outer().part(i + 1) {
                return Err(Error::ShapeMismatch);
            }
            if row[..inner].iter().any(Option::is_some)
                || row[inner..].iter().any(Option::is_none)
            {
                return Err(Error::ShapeMismatch);
            }
            rows.push(row[inner..].iter().map(|v| v.unwrap()).collect());
        }
        SkewTableau::from_rows(shape, rows)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QPolyJson {
    pub degree: usize,
    pub coeffs: Vec<String>,
}

impl From<&QPolynomial> for QPolyJson {
    fn from(p: &QPolynomial) -> Self {
        QPolyJson {
            degree: p.degree(),
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<QPolyJson> for QPolynomial {
    type Error = Error;
    fn try_from(j: QPolyJson) -> Result<QPolynomial> {
        if j.coeffs.len() != j.degree + 1 {
            return Err(Error::ShapeMismatch);
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.parse().map_err(|_| Error::ShapeMismatch))
            .collect::<Result<Vec<_>>>()?;
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}
