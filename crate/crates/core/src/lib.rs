//! Exact combinatorics of standard and semistandard Young tableaux of skew
//! shape: excited diagrams and their broken diagonals, Lascoux–Pragacz and
//! Kreiman border-strip decompositions, minimal skew SSYT and the bijection
//! between them and excited diagrams, the Hillman–Grassl correspondence with
//! its restriction to skew tableaux, and exact evaluators for the classical
//! hook-length formula, the excited-diagram (Naruse) formula, the
//! Okounkov–Olshanski formula, and the minimal-tableau reformulation,
//! together with their q-analogues as truncated series.
//!
//! Everything is exact: big integers for counts, big rationals for
//! intermediate values, and polynomial truncations that never extend
//! precision silently. All values are immutable after construction and all
//! operations are pure, so concurrent reads are safe.

pub mod counting;
pub mod error;
pub mod excited;
pub mod hillman_grassl;
pub mod json;
pub mod phi;
pub mod qpoly;
pub mod render;
pub mod report;
pub mod shape;
pub mod strips;
pub mod sweep;
pub mod tableaux;

pub use error::{Error, Result};
pub use shape::{Cell, Partition, SkewShape};
