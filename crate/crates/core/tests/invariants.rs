//! Exhaustive structural sweeps over small shapes, plus property tests.
//! These pin the module-level invariants; the theorem-level statements live
//! in the acceptance suite.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use skewhook::excited::{active_cells, apply_beta, enumerate_excited, initial_diagram};
use skewhook::hillman_grassl::{
    classify_restricted, embed, hg_forward, hg_inverse, RppLambda, WeightArray,
};
use skewhook::phi::{phi, phi_inverse};
use skewhook::shape::{Cell, Partition, SkewShape};
use skewhook::strips::{kreiman, lascoux_pragacz, verify_gamma_theta, Decomposition};
use skewhook::sweep::{partitions_up_to, skew_shapes_up_to};
use skewhook::tableaux::{
    count_syt, enumerate_min_via_characterization, enumerate_min_via_moves,
    enumerate_oot, enumerate_ssyt_max_entry, minimum_tableau,
};

fn cell_set(cells: &[Cell]) -> BTreeSet<Cell> {
    cells.iter().copied().collect()
}

#[test]
fn conjugate_is_an_involution_exhaustively() {
    for size in 1..=12 {
        for p in skewhook::sweep::partitions_of(size) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }
}

#[test]
fn hooks_are_positive_and_corners_have_hook_one() {
    for p in partitions_up_to(9) {
        let cells = p.cells();
        assert_eq!(cells.len(), p.size());
        for &c in &cells {
            let h = p.hook(c).unwrap();
            assert!(h >= 1);
            let corner = !p.contains_cell(Cell::new(c.row + 1, c.col))
                && !p.contains_cell(Cell::new(c.row, c.col + 1));
            if corner {
                assert_eq!(h, 1, "outer corner {c} of {p}");
            }
        }
    }
}

#[test]
fn hook_length_formula_integrality() {
    use num_integer::Integer;
    use num_traits::Zero;
    for p in partitions_up_to(10) {
        let n = skewhook::counting::factorial(p.size());
        let h = skewhook::counting::hook_product(&p);
        assert!(n.div_rem(&h).1.is_zero(), "hook product divides n! for {p}");
    }
}

/// Union/disjointness, per-strip pairing, and rank constancy for both
/// decompositions, on every shape with |λ| ≤ 8.
#[test]
fn decompositions_partition_the_shape() {
    for s in skew_shapes_up_to(8) {
        let thetas = lascoux_pragacz(&s);
        let gammas = kreiman(&s);
        check_partition(&s, &thetas);
        check_partition(&s, &gammas);
        assert_eq!(thetas.len(), gammas.len(), "shape {}", s.display());
        for i in 1..=thetas.len() {
            let t = thetas.strip(i).unwrap();
            let g = gammas.strip(i).unwrap();
            assert_eq!(t.len(), g.len(), "strip {i} of {}", s.display());
            assert_eq!(t.epsilon, g.epsilon);
            let tc: BTreeMap<isize, usize> = content_multiset(&t.cells);
            let gc: BTreeMap<isize, usize> = content_multiset(&g.cells);
            assert_eq!(tc, gc, "content multisets of strip {i} of {}", s.display());
        }
    }
}

fn content_multiset(cells: &[Cell]) -> BTreeMap<isize, usize> {
    let mut m = BTreeMap::new();
    for c in cells {
        *m.entry(c.content()).or_insert(0) += 1;
    }
    m
}

fn check_partition(s: &SkewShape, d: &Decomposition) {
    let mut seen = BTreeSet::new();
    for strip in &d.strips {
        // Border strip: no 2×2 block.
        for &c in &strip.cells {
            assert!(
                !(strip.contains(Cell::new(c.row + 1, c.col))
                    && strip.contains(Cell::new(c.row, c.col + 1))
                    && strip.contains(Cell::new(c.row + 1, c.col + 1))),
                "2x2 block in a strip of {}",
                s.display()
            );
            assert!(seen.insert(c), "strips overlap in {}", s.display());
        }
        // Per-diagonal rank equals ε on every cell.
        for &c in &strip.cells {
            let (min_row, max_row) = s.diagonal_rows(c.content()).unwrap();
            let rank = match d.kind {
                skewhook::strips::StripKind::Theta => max_row - c.row,
                skewhook::strips::StripKind::Gamma => c.row - min_row,
            };
            assert_eq!(rank, strip.epsilon, "rank drift in {}", s.display());
        }
    }
    assert_eq!(seen, cell_set(&s.cells()), "union in {}", s.display());
}

#[test]
fn gamma_theta_lemma_full_sweep() {
    // All connected shapes with |λ| ≤ 7.
    for s in skew_shapes_up_to(7) {
        if s.is_empty() || !s.is_connected() {
            continue;
        }
        let r = verify_gamma_theta(&s).unwrap();
        assert!(r.passed(), "shape {}: {:?}", s.display(), r.failures);
    }
}

/// Broken-diagonal bookkeeping along the closure, |λ| ≤ 7.
#[test]
fn broken_diagonals_track_the_paths() {
    for s in skew_shapes_up_to(7) {
        let initial = initial_diagram(&s);
        let baseline = initial.broken().len();
        for d in enumerate_excited(&s) {
            assert_eq!(d.broken().len(), baseline, "|Br| constant on {}", s.display());
            for b in d.broken() {
                assert!(!d.contains(*b), "broken inside D on {}", s.display());
                assert!(s.outer().contains_cell(*b));
            }
            // validate() recomputes paths/broken from first principles.
            d.validate().unwrap_or_else(|e| {
                panic!("state drift on {}: {e}", s.display());
            });
            // A β-move shifts one broken cell one column west, same row.
            for u in active_cells(&d) {
                let next = apply_beta(&d, u).unwrap();
                let lost: Vec<Cell> = d.broken().difference(next.broken()).copied().collect();
                let gained: Vec<Cell> = next.broken().difference(d.broken()).copied().collect();
                assert_eq!(lost.len(), 1);
                assert_eq!(gained.len(), 1);
                assert_eq!(lost[0].row, gained[0].row);
                assert_eq!(lost[0].col, gained[0].col + 1);
            }
        }
    }
}

/// Closure size must not depend on the order moves are discovered in: replay
/// each diagram's support through the reverse/forward path reconstruction.
#[test]
fn closure_is_move_order_independent() {
    for s in skew_shapes_up_to(6) {
        for d in enumerate_excited(&s) {
            let rebuilt =
                skewhook::excited::diagram_with_cells(&s, d.cells()).expect("support reachable");
            assert_eq!(rebuilt, d);
        }
    }
}

/// Minimal-tableau machinery: the two enumerations agree (the direct
/// characterization theorem), |SSYT_min| = |E|, SSYT_min ⊆ SF, T̄ constant on
/// segments, |SF| = |OOT|; connected shapes |λ| ≤ 7.
#[test]
fn minimal_tableaux_invariants() {
    for s in skew_shapes_up_to(7) {
        if !s.is_connected() {
            continue;
        }
        let by_moves = enumerate_min_via_moves(&s).unwrap();
        let by_char = enumerate_min_via_characterization(&s).unwrap();
        assert_eq!(by_moves, by_char, "characterization on {}", s.display());

        let diagrams = enumerate_excited(&s);
        assert_eq!(by_moves.len(), diagrams.len(), "bijection count on {}", s.display());

        let flagged: BTreeSet<Vec<u32>> = skewhook::tableaux::enumerate_flagged_skew(&s)
            .iter()
            .map(|t| t.entry_vec())
            .collect();
        let t0 = minimum_tableau(&s);
        let thetas = lascoux_pragacz(&s);
        for t in &by_moves {
            assert!(
                flagged.contains(&t.entry_vec()),
                "SSYT_min not flagged on {}",
                s.display()
            );
            // T̄ constant and nonnegative on each strip column segment.
            for strip in &thetas.strips {
                for col in strip.columns() {
                    let seg = skewhook::strips::column_segment(strip, col).unwrap();
                    let diffs: BTreeSet<i64> = seg
                        .iter()
                        .map(|&c| t.get(c).unwrap() as i64 - t0.get(c).unwrap() as i64)
                        .collect();
                    assert_eq!(diffs.len(), 1, "T-bar not constant on {}", s.display());
                    assert!(*diffs.first().unwrap() >= 0);
                }
            }
        }
    }
    // |SF| = |OOT| on the same sweep, disconnected shapes included
    // (equinumerosity only).
    for s in skew_shapes_up_to(7) {
        assert_eq!(
            skewhook::tableaux::enumerate_flagged_skew(&s).len(),
            enumerate_oot(&s).len(),
            "SF vs OOT on {}",
            s.display()
        );
    }
}

/// The excited-diagram and Okounkov–Olshanski formulas don't need
/// connectivity; they must match the oracle on the disconnected shapes too.
#[test]
fn formulas_agree_on_disconnected_shapes() {
    use skewhook::counting::{f_nhlf, f_oof};
    let mut seen = 0;
    for s in skew_shapes_up_to(8) {
        if s.is_connected() {
            continue;
        }
        seen += 1;
        let oracle = count_syt(&s);
        assert_eq!(f_nhlf(&s).unwrap(), oracle, "nhlf on {}", s.display());
        assert_eq!(f_oof(&s).unwrap(), oracle, "oof on {}", s.display());
    }
    assert!(seen > 100, "the sweep should hit many disconnected shapes");
}

/// Φ weight law: |Φ(D)| = Σ_{u ∈ Br(D)} h(u); displaced α-cells always land
/// back in the enumerated closure.
#[test]
fn phi_weight_law_and_alpha_membership() {
    for s in skew_shapes_up_to(7) {
        if !s.is_connected() {
            continue;
        }
        let supports: BTreeSet<Vec<Cell>> = enumerate_excited(&s)
            .iter()
            .map(|d| d.cell_vec())
            .collect();
        for d in enumerate_excited(&s) {
            let t = phi(&d).unwrap();
            let hooks: u64 = d
                .broken()
                .iter()
                .map(|&c| s.outer().hook(c).unwrap() as u64)
                .sum();
            assert_eq!(t.weight(), hooks, "weight law on {}", s.display());
            let back = phi_inverse(&t).unwrap();
            assert!(supports.contains(&back.cell_vec()));
        }
    }
}

/// Restricted-image converse: every array positive on Br(D) and supported in
/// [λ]∖D inverts to an embedded skew SSYT of the right shape (entries ≤ 2,
/// |λ| ≤ 6).
#[test]
fn restricted_image_converse() {
    for s in skew_shapes_up_to(6) {
        for d in enumerate_excited(&s) {
            let free: Vec<Cell> = s
                .outer()
                .cells()
                .into_iter()
                .filter(|c| !d.contains(*c) && !d.broken().contains(c))
                .collect();
            let broken: Vec<Cell> = d.broken().iter().copied().collect();
            // Entries 1..=2 on Br(D), 0..=2 on the rest of [λ]∖D.
            let mut stack = vec![WeightArray::zero(s.outer().clone())];
            for &c in &broken {
                let mut next = Vec::new();
                for a in stack {
                    for v in 1..=2u32 {
                        let mut b = a.clone();
                        b.set(c, v);
                        next.push(b);
                    }
                }
                stack = next;
            }
            for &c in &free {
                let mut next = Vec::new();
                for a in stack {
                    for v in 0..=2u32 {
                        let mut b = a.clone();
                        b.set(c, v);
                        next.push(b);
                    }
                }
                stack = next;
            }
            for a in stack {
                let rpp = hg_inverse(&a);
                let t = rpp
                    .to_skew_tableau(&s)
                    .unwrap_or_else(|e| panic!("array on {} not a skew SSYT: {e}", s.display()));
                // And it classifies back to the same diagram.
                let back = classify_restricted(&hg_forward(&embed(&t)), &s).unwrap();
                assert_eq!(back.cells(), d.cells());
            }
        }
    }
}

/// Leading-term law: HG(embed(Φ(D))) = A_D exactly, |λ| ≤ 7.
#[test]
fn hg_of_phi_is_the_excited_array() {
    for s in skew_shapes_up_to(7) {
        if !s.is_connected() {
            continue;
        }
        for d in enumerate_excited(&s) {
            let a = hg_forward(&embed(&phi(&d).unwrap()));
            let expected: WeightArray = skewhook::excited::excited_array(&d).into();
            assert_eq!(a, expected, "shape {}", s.display());
        }
    }
}

/// Every pass of the forward map removes one hook's worth of weight; checked
/// across an exhaustive family.
#[test]
fn hook_weight_conservation_small() {
    let lambda = Partition::new(vec![3, 2]).unwrap();
    for filling in all_rpps(&lambda, 3) {
        let a = hg_forward(&filling);
        assert_eq!(a.hook_weight(), filling.total());
        assert_eq!(hg_inverse(&a), filling);
    }
}

fn all_rpps(outer: &Partition, max_entry: u32) -> Vec<RppLambda> {
    let cells = outer.cells();
    let mut out = Vec::new();
    let mut values: Vec<Vec<u32>> = outer.parts().iter().map(|&p| vec![0; p]).collect();
    fn rec(
        outer: &Partition,
        cells: &[Cell],
        idx: usize,
        max_entry: u32,
        values: &mut Vec<Vec<u32>>,
        out: &mut Vec<RppLambda>,
    ) {
        if idx == cells.len() {
            out.push(RppLambda::new(outer.clone(), values.clone()).unwrap());
            return;
        }
        let c = cells[idx];
        let mut lo = 0;
        if c.col > 1 {
            lo = lo.max(values[c.row - 1][c.col - 2]);
        }
        if c.row > 1 && outer.part(c.row - 1) >= c.col {
            lo = lo.max(values[c.row - 2][c.col - 1]);
        }
        for v in lo..=max_entry {
            values[c.row - 1][c.col - 1] = v;
            rec(outer, cells, idx + 1, max_entry, values, out);
        }
        values[c.row - 1][c.col - 1] = 0;
    }
    rec(outer, &cells, 0, max_entry, &mut values, &mut out);
    out
}

/// SYT oracle cross-checks against straight-shape hook-length values.
#[test]
fn syt_oracle_agrees_with_straight_hook_lengths() {
    for p in partitions_up_to(9) {
        let s = SkewShape::straight(p.clone());
        assert_eq!(
            count_syt(&s),
            skewhook::counting::f_hlf(&p).unwrap(),
            "partition {p}"
        );
    }
}

/// δ-activity: entries in the closure never exceed the strip height bounds;
/// every SSYT with entries ≤ 3 classifies back (forward restricted image).
#[test]
fn forward_restricted_image_small() {
    for s in skew_shapes_up_to(5) {
        for t in enumerate_ssyt_max_entry(&s, 3) {
            let a = hg_forward(&embed(&t));
            classify_restricted(&a, &s).unwrap_or_else(|e| {
                panic!("classification failed on {}: {e}", s.display());
            });
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Conjugation is an involution on random partitions.
    #[test]
    fn prop_conjugate_involution(parts in proptest::collection::vec(1usize..=9, 0..=9)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    /// Hillman–Grassl round-trips and conserves hook weight on random RPPs.
    #[test]
    fn prop_hg_round_trip(
        parts in proptest::collection::vec(1usize..=6, 1..=5),
        seed in any::<u64>(),
    ) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let outer = Partition::new(parts).unwrap();
        let rpp = random_rpp(&outer, seed, 5);
        let a = hg_forward(&rpp);
        prop_assert_eq!(a.hook_weight(), rpp.total());
        prop_assert_eq!(hg_inverse(&a), rpp);
    }

    /// The inverse is total: any array maps to an RPP that maps back.
    #[test]
    fn prop_hg_inverse_total(
        parts in proptest::collection::vec(1usize..=5, 1..=4),
        values in proptest::collection::vec(0u32..=3, 20),
    ) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let outer = Partition::new(parts).unwrap();
        let mut a = WeightArray::zero(outer.clone());
        for (k, c) in outer.cells().into_iter().enumerate() {
            a.set(c, values[k % values.len()]);
        }
        let rpp = hg_inverse(&a);
        prop_assert_eq!(hg_forward(&rpp), a);
    }
}

fn random_rpp(outer: &Partition, seed: u64, max_step: u32) -> RppLambda {
    // Deterministic low-tech generator: accumulate row/column maxima plus a
    // seeded increment.
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % (max_step as u64 + 1)) as u32
    };
    let mut values: Vec<Vec<u32>> = outer.parts().iter().map(|&p| vec![0; p]).collect();
    for c in outer.cells() {
        let mut lo = 0;
        if c.col > 1 {
            lo = lo.max(values[c.row - 1][c.col - 2]);
        }
        if c.row > 1 && outer.part(c.row - 1) >= c.col {
            lo = lo.max(values[c.row - 2][c.col - 1]);
        }
        values[c.row - 1][c.col - 1] = lo + next();
    }
    RppLambda::new(outer.clone(), values).unwrap()
}
