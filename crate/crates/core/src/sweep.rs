//! Deterministic shape generation for exhaustive sweeps: outer partitions by
//! size then lex, inner sub-partitions by lex.

use crate::shape::{Partition, SkewShape};

/// All partitions of n, lexicographically ascending on the part lists.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    gen_partitions(n, n, &mut parts, &mut out);
    out.sort_by(|a, b| a.parts().cmp(b.parts()));
    out
}

fn gen_partitions(remaining: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(parts.clone()).unwrap());
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        parts.push(p);
        gen_partitions(remaining - p, p, parts, out);
        parts.pop();
    }
}

/// All partitions of sizes 1..=max, by size then lex.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (1..=max).flat_map(partitions_of).collect()
}

/// All μ ⊆ λ (including ∅ and λ itself), lexicographically ascending.
pub fn sub_partitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    gen_subs(outer, 1, usize::MAX, &mut parts, &mut out);
    out.sort_by(|a, b| a.parts().cmp(b.parts()));
    out
}

fn gen_subs(
    outer: &Partition,
    row: usize,
    prev: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition::from_padded(parts.clone()).unwrap());
    if row > outer.len() {
        return;
    }
    for p in 1..=outer.part(row).min(prev) {
        parts.push(p);
        gen_subs(outer, row + 1, p, parts, out);
        parts.pop();
    }
}

/// Every skew shape λ/μ with |λ| ≤ max, in deterministic sweep order.
pub fn skew_shapes_up_to(max: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for outer in partitions_up_to(max) {
        for inner in sub_partitions(&outer) {
            out.push(SkewShape::new(outer.clone(), inner).unwrap());
        }
    }
    out
}

/// The connected shapes of the sweep.
pub fn connected_skew_shapes_up_to(max: usize) -> Vec<SkewShape> {
    skew_shapes_up_to(max)
        .into_iter()
        .filter(SkewShape::is_connected)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // p(1..8) = 1, 2, 3, 5, 7, 11, 15, 22.
        let counts: Vec<usize> = (1..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn sweep_order_is_deterministic() {
        let shapes = skew_shapes_up_to(3);
        let display: Vec<String> = shapes.iter().map(|s| s.display()).collect();
        assert_eq!(
            &display[..6],
            &["1", "1/1", "1,1", "1,1/1", "1,1/1,1", "2"]
        );
        assert_eq!(shapes.len(), {
            // Σ over λ of the number of sub-partitions.
            let mut total = 0;
            for outer in partitions_up_to(3) {
                total += sub_partitions(&outer).len();
            }
            total
        });
    }

    #[test]
    fn sub_partitions_of_22() {
        let outer = Partition::new(vec![2, 2]).unwrap();
        let subs: Vec<Vec<usize>> = sub_partitions(&outer)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            subs,
            vec![
                vec![],
                vec![1],
                vec![1, 1],
                vec![2],
                vec![2, 1],
                vec![2, 2]
            ]
        );
    }
}
