use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::EdgeKind;
use crate::solver::ChromaticSpectrum;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A target set must contain at least one value.
    EmptySet,
    /// Target set values must be at least 2.
    BelowTwo(i64),
    /// Target set values must be pairwise distinct.
    Duplicate(i64),
    /// An edge refers to a vertex index outside `0..order`.
    VertexOutOfRange { index: usize, order: usize },
    /// An edge lists the same vertex twice.
    RepeatedVertex { kind: EdgeKind, index: usize },
    /// An edge has fewer than two vertices.
    EdgeTooSmall { kind: EdgeKind, len: usize },
    /// Vertex labels disagree with the vertex count or with each other.
    BadLabels,
    /// A coloring does not cover exactly the vertices of the hypergraph.
    DomainMismatch { expected: usize, found: usize },
    /// A raw assignment leaves a vertex uncolored.
    Unassigned(usize),
    /// Coordinate index outside `1..=dimension`.
    CoordinateOutOfRange { index: usize, dimension: usize },
    /// Color class index outside `0..num_colors`.
    ClassOutOfRange { index: usize, num_colors: usize },
    /// The requested construction needs `n1 - 1` in the target set.
    RequiresConsecutiveTop,
    /// A construction produced a count that disagrees with its closed form.
    CountMismatch { what: &'static str, expected: usize, found: usize },
    /// A pattern vertex of a construction does not exist in its vertex set.
    MissingVertex(Vec<u32>),
    /// An edge pattern of a construction names the same vertex twice.
    CollapsedPattern(Vec<Vec<u32>>),
    /// The coloring violates an edge.
    ImproperColoring { kind: EdgeKind, edge: Vec<usize> },
    /// The hypergraph is not a one-realization of the target set.
    NotOneRealization,
    /// Exhaustive hypergraph search is capped at four vertices.
    SearchTooLarge(usize),
    /// Enumeration hit its node budget; `partial` holds the counts found so far.
    BudgetExceeded { limit: u64, partial: ChromaticSpectrum },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySet => write!(f, "target set is empty"),
            Error::BelowTwo(v) => write!(f, "target set value {v} is below 2"),
            Error::Duplicate(v) => write!(f, "target set value {v} is repeated"),
            Error::VertexOutOfRange { index, order } => {
                write!(f, "vertex index {index} out of range for {order} vertices")
            }
            Error::RepeatedVertex { kind, index } => {
                write!(f, "{kind}-edge repeats vertex {index}")
            }
            Error::EdgeTooSmall { kind, len } => {
                write!(f, "{kind}-edge has {len} vertices, need at least 2")
            }
            Error::BadLabels => write!(f, "vertex labels are inconsistent"),
            Error::DomainMismatch { expected, found } => {
                write!(f, "coloring covers {found} vertices, hypergraph has {expected}")
            }
            Error::Unassigned(v) => write!(f, "vertex {v} has no color"),
            Error::CoordinateOutOfRange { index, dimension } => {
                write!(f, "coordinate {index} out of range 1..={dimension}")
            }
            Error::ClassOutOfRange { index, num_colors } => {
                write!(f, "color class {index} out of range for {num_colors} colors")
            }
            Error::RequiresConsecutiveTop => {
                write!(f, "construction requires n1 - 1 to belong to the set")
            }
            Error::CountMismatch { what, expected, found } => {
                write!(f, "{what}: expected {expected}, constructed {found}")
            }
            Error::MissingVertex(v) => write!(f, "pattern vertex {v:?} is not in the vertex set"),
            Error::CollapsedPattern(vs) => write!(f, "edge pattern {vs:?} collapses onto fewer vertices"),
            Error::ImproperColoring { kind, edge } => {
                write!(f, "coloring violates {kind}-edge {edge:?}")
            }
            Error::NotOneRealization => write!(f, "hypergraph is not a one-realization"),
            Error::SearchTooLarge(n) => {
                write!(f, "exhaustive search refused for {n} vertices (maximum 4)")
            }
            Error::BudgetExceeded { limit, .. } => {
                write!(f, "enumeration exceeded its budget of {limit} nodes")
            }
        }
    }
}

impl core::error::Error for Error {}
