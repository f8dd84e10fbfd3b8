//! Cubical and simplicial complexes as face posets, their f-, h- and
//! g-vectors, and exact checks of the Dehn–Sommerville relations and lower
//! bound inequalities they satisfy.
//!
//! All arithmetic is on `i128` with overflow checks enabled in every build
//! profile of this workspace.

pub mod classify;
pub mod complex;
pub mod enumerative;
pub mod error;
pub mod generators;
pub mod macaulay;
pub mod report;
pub mod topology;
pub mod verify;

pub use complex::{Complex, CubicalCell, CubicalComplex, Face, SimplicialComplex, VertexId};
pub use enumerative::{
    Cubical, FVector, GVector, HVector, LongCubical, ShortCubical, Simplicial, VectorKind,
};
pub use error::{ComplexError, EnumerativeError, GeneratorError};
pub use generators::{AnyComplex, GeneratedComplex};
pub use macaulay::MacaulayDecomposition;
pub use report::{Record, Relation, Status, VerificationReport, Witness};
pub use topology::{Claim, Topology};
