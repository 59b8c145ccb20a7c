//! The Hillman–Grassl correspondence on reverse plane partitions of shape λ,
//! its inverse, the restriction to embedded skew SSYT, and the per-strip
//! additivity checks tying it to the bijection `phi`.
//!
//! Forward pass: repeatedly take the SW-most nonzero cell (minimal column,
//! then maximal row), trace a NE path (north while the north neighbor equals
//! the current value, else east), decrement the path and record one unit at
//! (end row, start column). Each pass removes exactly hook(λ, u) from |π|.
//!
//! Inverse: process units in the reverse of the forward extraction order
//! (column descending, row ascending within a column), each adding 1 along a
//! SW-directed path from the east end of the unit's row (south while the
//! south neighbor equals the current value, else west, never west of the
//! unit's column).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::excited::{enumerate_excited, excited_array, ExcitedArray, ExcitedDiagram};
use crate::phi::{phi, phi_inverse};
use crate::report::VerificationReport;
use crate::shape::{Cell, Partition, SkewShape};
use crate::strips::lascoux_pragacz;
use crate::tableaux::{enumerate_min_via_moves, SkewTableau};

/// A reverse plane partition of shape λ: weakly increasing rows and columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RppLambda {
    outer: Partition,
    values: Vec<Vec<u32>>,
}

/// A nonnegative integer array of shape λ, graded by hook weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightArray {
    outer: Partition,
    values: Vec<Vec<u32>>,
}

impl RppLambda {
    pub fn new(outer: Partition, values: Vec<Vec<u32>>) -> Result<Self> {
        check_filling_shape(&outer, &values)?;
        let rpp = RppLambda { outer, values };
        if !rpp.is_rpp() {
            return Err(Error::NotReversePlanePartition);
        }
        Ok(rpp)
    }

    pub fn zero(outer: Partition) -> Self {
        let values = outer.parts().iter().map(|&p| vec![0; p]).collect();
        RppLambda { outer, values }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn values(&self) -> &[Vec<u32>] {
        &self.values
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.outer
            .contains_cell(c)
            .then(|| self.values[c.row - 1][c.col - 1])
    }

    /// Sum of entries, written |π|.
    pub fn total(&self) -> u64 {
        self.values.iter().flatten().map(|&v| v as u64).sum()
    }

    fn is_rpp(&self) -> bool {
        for c in self.outer.cells() {
            let v = self.get(c).unwrap();
            if let Some(right) = self.get(Cell::new(c.row, c.col + 1)) {
                if right < v {
                    return false;
                }
            }
            if let Some(below) = self.get(Cell::new(c.row + 1, c.col)) {
                if below < v {
                    return false;
                }
            }
        }
        true
    }

    /// Reads the filling back as a skew SSYT of the given shape: zero on
    /// \[μ\], strictly increasing columns on \[λ/μ\].
    pub fn to_skew_tableau(&self, shape: &SkewShape) -> Result<SkewTableau> {
        if shape.outer() != &self.outer {
            return Err(Error::ShapeMismatch);
        }
        for c in shape.inner().cells() {
            if self.get(c) != Some(0) {
                return Err(Error::NotSemistandard);
            }
        }
        let rows = (1..=self.outer.len())
            .map(|i| {
                (shape.inner_part(i) + 1..=self.outer.part(i))
                    .map(|j| self.values[i - 1][j - 1])
                    .collect()
            })
            .collect();
        let t = SkewTableau::from_rows(shape.clone(), rows)?;
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        Ok(t)
    }
}

impl WeightArray {
    pub fn new(outer: Partition, values: Vec<Vec<u32>>) -> Result<Self> {
        check_filling_shape(&outer, &values)?;
        Ok(WeightArray { outer, values })
    }

    pub fn zero(outer: Partition) -> Self {
        let values = outer.parts().iter().map(|&p| vec![0; p]).collect();
        WeightArray { outer, values }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn values(&self) -> &[Vec<u32>] {
        &self.values
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.outer
            .contains_cell(c)
            .then(|| self.values[c.row - 1][c.col - 1])
    }

    pub fn set(&mut self, c: Cell, v: u32) {
        assert!(self.outer.contains_cell(c));
        self.values[c.row - 1][c.col - 1] = v;
    }

    pub fn support(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .into_iter()
            .filter(|&c| self.get(c).unwrap() > 0)
            .collect()
    }

    /// Σ values(u) · hook(λ, u).
    pub fn hook_weight(&self) -> u64 {
        self.outer
            .cells()
            .into_iter()
            .map(|c| self.get(c).unwrap() as u64 * self.outer.hook(c).unwrap() as u64)
            .sum()
    }
}

impl From<ExcitedArray> for WeightArray {
    fn from(a: ExcitedArray) -> Self {
        WeightArray {
            outer: a.outer,
            values: a.values,
        }
    }
}

fn check_filling_shape(outer: &Partition, values: &[Vec<u32>]) -> Result<()> {
    if values.len() != outer.len() {
        return Err(Error::ShapeMismatch);
    }
    for (i, row) in values.iter().enumerate() {
        if row.len() != outer.part(i + 1) {
            return Err(Error::ShapeMismatch);
        }
    }
    Ok(())
}

/// The forward Hillman–Grassl map together with the extraction order of the
/// recorded units.
pub fn hg_forward_trace(p: &RppLambda) -> (WeightArray, Vec<Cell>) {
    let outer = p.outer.clone();
    let conj = outer.conjugate();
    let mut work = p.values.clone();
    let mut array = WeightArray::zero(outer.clone());
    let mut order = Vec::new();
    loop {
        // SW-most nonzero cell: minimal column, then maximal row.
        let mut start = None;
        'cols: for j in 1..=outer.part(1) {
            for i in (1..=conj.part(j)).rev() {
                if work[i - 1][j - 1] > 0 {
                    start = Some(Cell::new(i, j));
                    break 'cols;
                }
            }
        }
        let Some(start) = start else { break };
        // NE path: north on equality with the north neighbor, else east.
        let mut path = vec![start];
        let (mut a, mut b) = (start.row, start.col);
        loop {
            if a > 1 && work[a - 2][b - 1] == work[a - 1][b - 1] {
                a -= 1;
            } else if b < outer.part(a) {
                b += 1;
            } else {
                break;
            }
            path.push(Cell::new(a, b));
        }
        let unit = Cell::new(a, start.col);
        debug_assert_eq!(
            path.len(),
            outer.hook(unit).unwrap(),
            "pass length must be the hook length of the recorded unit"
        );
        for c in &path {
            work[c.row - 1][c.col - 1] -= 1;
        }
        debug_assert!(
            RppLambda::new(outer.clone(), work.clone()).is_ok(),
            "pass must preserve the reverse-plane-partition property"
        );
        array.set(unit, array.get(unit).unwrap() + 1);
        order.push(unit);
    }
    (array, order)
}

/// The forward Hillman–Grassl map: RPPs of shape λ to hook-weighted arrays.
pub fn hg_forward(p: &RppLambda) -> WeightArray {
    hg_forward_trace(p).0
}

/// The inverse Hillman–Grassl map. Every array is in the image.
pub fn hg_inverse(a: &WeightArray) -> RppLambda {
    let outer = a.outer.clone();
    let conj = outer.conjugate();
    let mut work = RppLambda::zero(outer.clone()).values;
    // Reverse of the forward extraction order: column descending, row
    // ascending within a column.
    for j in (1..=outer.part(1)).rev() {
        for i in 1..=conj.part(j) {
            for _ in 0..a.values[i - 1][j - 1] {
                // SW-directed path from the east end of row i, frozen state.
                let mut path = vec![Cell::new(i, outer.part(i))];
                let (mut r, mut c) = (i, outer.part(i));
                loop {
                    if r < conj.part(c) && work[r][c - 1] == work[r - 1][c - 1] {
                        r += 1;
                    } else if c > j {
                        c -= 1;
                    } else {
                        break;
                    }
                    path.push(Cell::new(r, c));
                }
                debug_assert_eq!(path.len(), outer.hook(Cell::new(i, j)).unwrap());
                for cell in &path {
                    work[cell.row - 1][cell.col - 1] += 1;
                }
                debug_assert!(RppLambda::new(outer.clone(), work.clone()).is_ok());
            }
        }
    }
    RppLambda {
        outer,
        values: work,
    }
}

/// Views a skew SSYT as an RPP of shape λ with zeros on \[μ\].
pub fn embed(t: &SkewTableau) -> RppLambda {
    let shape = t.shape();
    let mut rpp = RppLambda::zero(shape.outer().clone());
    for c in shape.cells() {
        rpp.values[c.row - 1][c.col - 1] = t.get(c).unwrap();
    }
    debug_assert!(rpp.is_rpp());
    rpp
}

/// Finds the unique excited diagram D with support(a) ⊆ \[λ\]∖D and a > 0 on
/// Br(D). Fails if none matches (the array is outside the restricted image)
/// or if several match.
pub fn classify_restricted(a: &WeightArray, shape: &SkewShape) -> Result<ExcitedDiagram> {
    if shape.outer() != a.outer() {
        return Err(Error::ShapeMismatch);
    }
    let support: BTreeSet<Cell> = a.support().into_iter().collect();
    let mut matched = None;
    for d in enumerate_excited(shape) {
        let disjoint = d.cells().iter().all(|c| !support.contains(c));
        let positive = d.broken().iter().all(|c| support.contains(c));
        if disjoint && positive {
            if matched.is_some() {
                return Err(Error::AmbiguousClassification);
            }
            matched = Some(d);
        }
    }
    matched.ok_or(Error::RestrictedImageViolation)
}

/// The per-strip restriction T_{θ_i}: an RPP on the partition λ^(i) obtained
/// by peeling θ_1, …, θ_{i−1} from λ, carrying t's entries on θ_i and zeros
/// elsewhere.
pub fn strip_restriction(t: &SkewTableau, i: usize) -> Result<RppLambda> {
    let shape = t.shape();
    let thetas = lascoux_pragacz(shape);
    if i == 0 || i > thetas.len() {
        return Err(Error::StripIndexOutOfRange(i));
    }
    let peeled = peeled_partition(shape, i)?;
    let mut rpp = RppLambda::zero(peeled.clone());
    for &c in &thetas.strip(i)?.cells {
        if !peeled.contains_cell(c) {
            return Err(Error::Structural("strip leaked outside its peeled shape"));
        }
        rpp.values[c.row - 1][c.col - 1] = t.get(c).unwrap();
    }
    if !rpp.is_rpp() {
        return Err(Error::Structural("strip restriction is not an RPP"));
    }
    Ok(rpp)
}

/// λ^(i): the partition left after removing θ_1, …, θ_{i−1} from \[λ\].
fn peeled_partition(shape: &SkewShape, i: usize) -> Result<Partition> {
    let thetas = lascoux_pragacz(shape);
    let mut removed: BTreeSet<Cell> = BTreeSet::new();
    for k in 1..i {
        removed.extend(thetas.strip(k)?.cells.iter().copied());
    }
    let parts: Vec<usize> = (1..=shape.outer().len())
        .map(|row| {
            shape.outer().part(row)
                - removed.iter().filter(|c| c.row == row).count()
        })
        .collect();
    // Removing whole peel components NE-first keeps a partition shape; the
    // constructor re-checks.
    let peeled = Partition::from_padded(parts)
        .map_err(|_| Error::Structural("peeling did not leave a partition"))?;
    for row in 1..=peeled.len() {
        for col in 1..=peeled.part(row) {
            if removed.contains(&Cell::new(row, col)) {
                return Err(Error::Structural("peel removed a non-terminal cell"));
            }
        }
    }
    Ok(peeled)
}

/// Checks that every embedded skew SSYT classifies to a unique excited
/// diagram: exhaustively for entries ≤ 3, plus seeded random tableaux with
/// larger entries.
pub fn verify_restricted(shape: &SkewShape, seed: u64, samples: usize) -> VerificationReport {
    let mut report = VerificationReport::new("restricted-hg", &shape.display());
    let mut run = |t: &SkewTableau| {
        let case = format!("T={:?}", t.entry_vec());
        match classify_restricted(&hg_forward(&embed(t)), shape) {
            Ok(_) => report.check(&case, "unique", "unique"),
            Err(e) => report.fail(&case, "unique", &e.to_string()),
        }
    };
    for t in crate::tableaux::enumerate_ssyt_max_entry(shape, 3) {
        run(&t);
    }
    let mut state = seed | 1;
    let mut next = move |bound: u32| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % (bound as u64 + 1)) as u32
    };
    for _ in 0..samples {
        let mut t = crate::tableaux::minimum_tableau(shape);
        for c in shape.cells() {
            let mut lo = 0;
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
            t.set(c, lo + next(5));
        }
        run(&t);
    }
    report.finish()
}

/// Checks HG⁻¹(A_D) = embed(Φ(D)) for every excited diagram of the shape.
pub fn verify_phi_vs_hg(shape: &SkewShape) -> Result<VerificationReport> {
    if !shape.is_connected() {
        return Err(Error::UnsupportedShape(
            "phi-hg check requires a connected shape",
        ));
    }
    let mut report = VerificationReport::new("phi-hg", &shape.display());
    for d in enumerate_excited(shape) {
        let lhs = hg_inverse(&excited_array(&d).into());
        let rhs = embed(&phi(&d)?);
        report.check(
            &format!("D={:?}", d.cell_vec()),
            &format!("{:?}", rhs.values()),
            &format!("{:?}", lhs.values()),
        );
    }
    Ok(report.finish())
}

/// Checks per-strip additivity: for every minimal tableau T with diagram D,
/// (a) HG of each strip restriction, translated SE by ε_i, is the 0-1 array
/// on Br(D) ∩ γ_i(D); (b) the translated arrays sum to HG(embed(T)).
pub fn verify_additivity(shape: &SkewShape) -> Result<VerificationReport> {
    if !shape.is_connected() {
        return Err(Error::UnsupportedShape(
            "additivity check requires a connected shape",
        ));
    }
    let mut report = VerificationReport::new("additivity", &shape.display());
    let thetas = lascoux_pragacz(shape);
    for t in enumerate_min_via_moves(shape)? {
        let d = phi_inverse(&t)?;
        let case_base = format!("T={:?}", t.entry_vec());
        let mut sum = WeightArray::zero(shape.outer().clone());
        for i in 1..=thetas.len() {
            let eps = thetas.strip(i)?.epsilon;
            let part = hg_forward(&strip_restriction(&t, i)?);
            // Expected: unit exactly on Br(D) ∩ γ_i(D), translated back by ε.
            let expected: BTreeSet<Cell> = d
                .gamma(i)?
                .iter()
                .copied()
                .filter(|c| d.broken().contains(c))
                .collect();
            let translated: BTreeSet<Cell> = part
                .support()
                .into_iter()
                .map(|c| Cell::new(c.row + eps, c.col + eps))
                .collect();
            let zero_one = part.support().iter().all(|&c| part.get(c) == Some(1));
            report.check(
                &format!("{case_base} strip {i} support"),
                &format!("{expected:?}"),
                &format!(
                    "{translated:?}{}",
                    if zero_one { "" } else { " (entries not 0-1)" }
                ),
            );
            for c in part.support() {
                let tc = Cell::new(c.row + eps, c.col + eps);
                sum.set(tc, sum.get(tc).unwrap() + part.get(c).unwrap());
            }
        }
        let whole = hg_forward(&embed(&t));
        report.check(
            &format!("{case_base} aligned sum"),
            &format!("{:?}", whole.values()),
            &format!("{:?}", sum.values()),
        );
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::cell;
    use crate::tableaux::minimum_tableau;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn p22() -> Partition {
        Partition::new(vec![2, 2]).unwrap()
    }

    #[test]
    fn forward_all_ones() {
        let p = RppLambda::new(p22(), vec![vec![1, 1], vec![1, 1]]).unwrap();
        let (a, order) = hg_forward_trace(&p);
        assert_eq!(a.values(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(order, vec![cell(1, 1), cell(2, 2)]);
        assert_eq!(a.hook_weight(), 4);
        assert_eq!(p.total(), 4);
    }

    #[test]
    fn forward_embedded_tableau() {
        // The second minimal tableau of (2,2)/(1) embeds to a single pass of
        // length h(2,1) = 2.
        let p = RppLambda::new(p22(), vec![vec![0, 0], vec![1, 1]]).unwrap();
        let a = hg_forward(&p);
        assert_eq!(a.values(), &[vec![0, 0], vec![1, 0]]);
        let zero = RppLambda::zero(p22());
        assert_eq!(hg_forward(&zero).values(), &[vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn inverse_examples() {
        let mut a = WeightArray::zero(p22());
        a.set(cell(1, 1), 1);
        a.set(cell(2, 2), 1);
        assert_eq!(hg_inverse(&a).values(), &[vec![1, 1], vec![1, 1]]);

        let mut a = WeightArray::zero(p22());
        a.set(cell(2, 1), 1);
        assert_eq!(hg_inverse(&a).values(), &[vec![0, 0], vec![1, 1]]);

        let zero = WeightArray::zero(p22());
        assert_eq!(hg_inverse(&zero), RppLambda::zero(p22()));
    }

    #[test]
    fn embed_examples() {
        let s = shape(&[2, 2], &[1]);
        let t0 = minimum_tableau(&s);
        assert_eq!(embed(&t0).values(), &[vec![0, 0], vec![0, 1]]);
        let straight = shape(&[3, 1], &[]);
        let t = minimum_tableau(&straight);
        assert_eq!(embed(&t).values(), &[vec![0, 0, 0], vec![1]]);
        let big = shape(&[5, 5, 3, 3, 2], &[2, 2]);
        let e = embed(&minimum_tableau(&big));
        for c in big.inner().cells() {
            assert_eq!(e.get(c), Some(0));
        }
    }

    #[test]
    fn classification_examples() {
        let s = shape(&[2, 2], &[1]);
        let ts = enumerate_min_via_moves(&s).unwrap();
        let d0 = classify_restricted(&hg_forward(&embed(&ts[0])), &s).unwrap();
        assert_eq!(d0.cell_vec(), vec![cell(1, 1)]);
        let d1 = classify_restricted(&hg_forward(&embed(&ts[1])), &s).unwrap();
        assert_eq!(d1.cell_vec(), vec![cell(2, 2)]);

        // μ = ∅: every SSYT classifies to the empty diagram.
        let straight = shape(&[2, 1], &[]);
        let t = minimum_tableau(&straight);
        let d = classify_restricted(&hg_forward(&embed(&t)), &straight).unwrap();
        assert!(d.cells().is_empty());
    }

    #[test]
    fn classification_rejects_outside_image() {
        // On (2,2)/(1) the array must be positive on exactly one of the two
        // broken-diagonal patterns; a unit at (1,1) alone tags cell (1,1) of
        // D itself for the first diagram and misses Br for the second.
        let s = shape(&[2, 2], &[1]);
        let mut a = WeightArray::zero(p22());
        a.set(cell(1, 1), 1);
        assert!(matches!(
            classify_restricted(&a, &s),
            Err(Error::RestrictedImageViolation)
        ));
    }

    #[test]
    fn strip_restriction_examples() {
        let s = shape(&[2, 2], &[1]);
        let t = minimum_tableau(&s);
        assert_eq!(strip_restriction(&t, 1).unwrap(), embed(&t));

        let big = shape(&[5, 5, 3, 3, 2], &[2, 2]);
        let t = minimum_tableau(&big);
        let r1 = strip_restriction(&t, 1).unwrap();
        assert_eq!(r1.outer(), big.outer());
        let r3 = strip_restriction(&t, 3).unwrap();
        assert_eq!(r3.outer().parts(), &[2, 2, 2, 1]);
        assert!(strip_restriction(&t, 4).is_err());
    }

    #[test]
    fn phi_vs_hg_examples() {
        for (outer, inner) in [
            (vec![2, 2], vec![1]),
            (vec![5, 5, 3, 3, 2], vec![2, 2]),
            (vec![3, 2], vec![]),
        ] {
            let s = shape(&outer, &inner);
            let r = verify_phi_vs_hg(&s).unwrap();
            assert!(r.passed(), "shape {}: {:?}", s.display(), r.failures);
        }
    }

    #[test]
    fn additivity_examples() {
        for (outer, inner) in [
            (vec![2, 2], vec![1]),
            (vec![5, 5, 3, 3, 2], vec![2, 2]),
            (vec![3, 3], vec![1]),
        ] {
            let s = shape(&outer, &inner);
            let r = verify_additivity(&s).unwrap();
            assert!(r.passed(), "shape {}: {:?}", s.display(), r.failures);
        }
    }

    #[test]
    fn round_trip_small() {
        let p = RppLambda::new(p22(), vec![vec![1, 2], vec![2, 2]]).unwrap();
        let a = hg_forward(&p);
        assert_eq!(hg_inverse(&a), p);
        assert_eq!(a.hook_weight(), p.total());
    }
}
