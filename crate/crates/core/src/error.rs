use thiserror::Error;

use crate::ElementId;

/// Why a pair of elements fails to have a join or a meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeFailure {
    /// The common upper bounds have no minimum.
    NoUpperBoundMinimum,
    /// The common lower bounds have no maximum.
    NoLowerBoundMaximum,
}

impl std::fmt::Display for LatticeFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeFailure::NoUpperBoundMinimum => f.write_str("no-upper-bound-minimum"),
            LatticeFailure::NoLowerBoundMaximum => f.write_str("no-lower-bound-maximum"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("element index {index} out of range for {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("edge relation contains a directed cycle")]
    CycleDetected,
    #[error("poset is not bounded")]
    NotBounded,
    #[error("elements {a} and {b} are not comparable")]
    NotComparable { a: ElementId, b: ElementId },
    #[error("construction needs {requested} elements, cap is {cap}")]
    SizeCap { requested: u128, cap: usize },
    #[error("poset is not graded")]
    NotGraded,
    #[error("not a lattice: pair ({a}, {b}) has {reason}")]
    NotALattice {
        a: ElementId,
        b: ElementId,
        reason: LatticeFailure,
    },
    #[error("map is not injective")]
    NotInjective,
    #[error("map is not a bijection")]
    NotBijective,
    #[error("map has length {got}, expected {expected}")]
    MapLength { got: usize, expected: usize },
    #[error("multiplicity must be at least 1")]
    BadMultiplicity,
    #[error("map is not a surjective lattice homomorphism")]
    NotAHomomorphism,
    #[error("cover edge {a} -> {b} has no label")]
    PartialLabeling { a: ElementId, b: ElementId },
    #[error("label on {a} -> {b} must be at least 1 (0 is reserved)")]
    ReservedLabel { a: ElementId, b: ElementId },
    #[error("({a}, {b}) is not a cover edge")]
    NotACover { a: ElementId, b: ElementId },
    #[error("label widths differ")]
    LabelWidth,
    #[error("pairs do not form an antichain")]
    NotAnAntichain,
    #[error("bad tuple: {0}")]
    BadTuple(String),
    #[error("sets do not form a weakly increasing chain")]
    NotAChainOfSets,
    #[error("bottom and top coincide")]
    DegenerateBounds,
    #[error("isomorphism search exceeded the budget of {budget} nodes")]
    Timeout { budget: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
}

pub type Result<T> = std::result::Result<T, PosetError>;
