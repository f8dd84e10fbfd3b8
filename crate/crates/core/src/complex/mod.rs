//! Cubical and simplicial complexes as face posets.
//!
//! Faces are identified by their (sorted) vertex sets. A cubical face also
//! keeps one corner ordering as a witness, which is all that is needed to
//! extract subfaces, walk edges out of a vertex, and pair antipodal corners.

mod cell;
mod cubical;
mod simplicial;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use cell::CubicalCell;
pub use cubical::{CubicalComplex, Face};
pub use simplicial::SimplicialComplex;

use crate::enumerative::{Cubical, Simplicial};
use crate::error::ComplexError;

/// A vertex label. Labels are arbitrary; nothing assumes they are dense.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for VertexId {
    fn from(v: u64) -> Self {
        VertexId(v)
    }
}

/// Behaviour shared by both kinds of complex.
pub trait Complex {
    /// Marker selecting the f-vector convention.
    type Kind;

    fn dim(&self) -> i64;

    /// Face counts per dimension, index 0 being the empty face.
    fn face_counts(&self) -> Vec<usize>;

    fn is_pure(&self) -> bool;

    fn ridge_degrees(&self) -> Result<BTreeMap<Vec<VertexId>, usize>, ComplexError>;
}

impl Complex for CubicalComplex {
    type Kind = Cubical;

    fn dim(&self) -> i64 {
        CubicalComplex::dim(self)
    }

    fn face_counts(&self) -> Vec<usize> {
        CubicalComplex::face_counts(self)
    }

    fn is_pure(&self) -> bool {
        CubicalComplex::is_pure(self)
    }

    fn ridge_degrees(&self) -> Result<BTreeMap<Vec<VertexId>, usize>, ComplexError> {
        CubicalComplex::ridge_degrees(self)
    }
}

impl Complex for SimplicialComplex {
    type Kind = Simplicial;

    fn dim(&self) -> i64 {
        SimplicialComplex::dim(self)
    }

    fn face_counts(&self) -> Vec<usize> {
        SimplicialComplex::face_counts(self)
    }

    fn is_pure(&self) -> bool {
        SimplicialComplex::is_pure(self)
    }

    fn ridge_degrees(&self) -> Result<BTreeMap<Vec<VertexId>, usize>, ComplexError> {
        SimplicialComplex::ridge_degrees(self)
    }
}

/// Subset test on sorted slices.
pub(crate) fn is_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
