//! Partitions, superpartitions, dominance, and strips.

mod partition;
mod strip;
mod superpartition;

pub use partition::{partitions, z_factor, Cell, Partition};
pub use strip::{cell_kinds, classify_oriented, classify_strip, strips, CellKind, LabelRelation, StripClassification, StripKind};
pub use superpartition::{enumerate_superpartitions, Diagram, SuperPartition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuperPartitionError {
    #[error("malformed superpartition: {0}")]
    Malformed(String),
    #[error("fermionic part {0} is repeated")]
    RepeatedFermionicPart(u32),
    #[error("fermionic parts must be strictly decreasing")]
    FermionicNotDecreasing,
    #[error("bosonic parts must be weakly decreasing")]
    BosonicNotDecreasing,
    #[error("Λ^* is not contained in Λ^⊛")]
    NotContained,
    #[error("Λ^⊛/Λ^* must have at most one cell per row and per column")]
    NotRookStrip,
    #[error("cell {0} lies outside the diagram")]
    CellOutside(Cell),
    #[error("cell {0} is a circle of Ω over a square of Λ")]
    CircleOverSquare(Cell),
    #[error("not a strip: {0}")]
    NotAStrip(String),
}
