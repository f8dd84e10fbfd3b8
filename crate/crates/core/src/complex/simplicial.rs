use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{is_subset, VertexId};
use crate::error::ComplexError;

/// A finite abstract simplicial complex, stored as its full set of faces
/// (sorted vertex lists, including the empty face).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    faces: BTreeSet<Vec<VertexId>>,
    dim: i64,
}

impl SimplicialComplex {
    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self::from_closed_family([Vec::new()])
    }

    /// Downward closure of `facets`.
    pub fn build<I>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Vec<VertexId>>,
    {
        let mut faces = BTreeSet::new();
        let mut any = false;
        for mut facet in facets {
            any = true;
            facet.sort_unstable();
            if let Some(w) = facet.windows(2).find(|w| w[0] == w[1]) {
                return Err(ComplexError::DuplicateVertexInCell {
                    cell: facet.clone(),
                    vertex: w[0],
                });
            }
            if faces.contains(&facet) {
                continue;
            }
            for mask in 0u64..(1u64 << facet.len()) {
                let sub: Vec<VertexId> = facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(sub);
            }
        }
        if !any {
            return Err(ComplexError::EmptyInput);
        }
        Ok(Self::from_closed_family(faces))
    }

    /// Convenience constructor from raw integer labels.
    pub fn from_ids<I, F>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u64>,
    {
        Self::build(
            facets
                .into_iter()
                .map(|f| f.into_iter().map(VertexId).collect()),
        )
    }

    /// Wraps a family that is already closed under taking subsets.
    pub(crate) fn from_closed_family<I>(faces: I) -> Self
    where
        I: IntoIterator<Item = Vec<VertexId>>,
    {
        let mut faces: BTreeSet<Vec<VertexId>> = faces.into_iter().collect();
        faces.insert(Vec::new());
        let dim = faces.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1);
        Self { faces, dim }
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    /// All faces including the empty one, in lexicographic order.
    pub fn faces(&self) -> impl Iterator<Item = &Vec<VertexId>> {
        self.faces.iter()
    }

    pub fn contains(&self, face: &[VertexId]) -> bool {
        let mut key = face.to_vec();
        key.sort_unstable();
        self.faces.contains(&key)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.faces.iter().filter(|f| f.len() == 1).map(|f| f[0])
    }

    /// Number of faces per dimension, starting with the empty face.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim + 2) as usize];
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        counts
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<&Vec<VertexId>> {
        let mut covered: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        for f in &self.faces {
            for i in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(i);
                covered.insert(sub);
            }
        }
        self.faces
            .iter()
            .filter(|f| !covered.contains(*f))
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        self.facets().iter().all(|f| f.len() as i64 - 1 == self.dim)
    }

    /// Ridges of a pure complex with the number of facets containing each.
    pub fn ridge_degrees(&self) -> Result<BTreeMap<Vec<VertexId>, usize>, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut degrees = BTreeMap::new();
        for f in self.facets() {
            for i in 0..f.len() {
                let mut r = f.clone();
                r.remove(i);
                *degrees.entry(r).or_insert(0) += 1;
            }
        }
        Ok(degrees)
    }

    /// Closure of the ridges lying in exactly one facet; `{∅}` when there are none.
    pub fn boundary(&self) -> Result<SimplicialComplex, ComplexError> {
        let free: Vec<Vec<VertexId>> = self
            .ridge_degrees()?
            .into_iter()
            .filter(|&(_, n)| n == 1)
            .map(|(r, _)| r)
            .collect();
        if free.is_empty() {
            Ok(Self::empty())
        } else {
            Self::build(free)
        }
    }

    /// `lk(F) = { G \ F : F ⊆ G }`.
    pub fn link(&self, face: &[VertexId]) -> Result<SimplicialComplex, ComplexError> {
        let mut key = face.to_vec();
        key.sort_unstable();
        if !self.faces.contains(&key) {
            return Err(ComplexError::UnknownFace(key));
        }
        let faces = self.faces.iter().filter(|g| is_subset(&key, g)).map(|g| {
            g.iter()
                .filter(|v| key.binary_search(v).is_err())
                .copied()
                .collect()
        });
        Ok(Self::from_closed_family(faces))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_closure() {
        let s = SimplicialComplex::from_ids([[1, 2, 3]]).unwrap();
        assert_eq!(s.faces().count(), 8);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn two_points() {
        let s = SimplicialComplex::from_ids([[1], [2]]).unwrap();
        assert_eq!(s.face_counts(), vec![1, 2]);
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn octahedron() {
        let facets: Vec<Vec<u64>> = (0..8u64)
            .map(|m| (0..3).map(|i| 2 * i + ((m >> i) & 1)).collect())
            .collect();
        let s = SimplicialComplex::from_ids(facets).unwrap();
        assert_eq!(s.face_counts(), vec![1, 6, 12, 8]);
        assert!(s.ridge_degrees().unwrap().values().all(|&n| n == 2));
        assert_eq!(s.boundary().unwrap(), SimplicialComplex::empty());
    }

    #[test]
    fn errors() {
        assert_eq!(
            SimplicialComplex::build(Vec::<Vec<VertexId>>::new()),
            Err(ComplexError::EmptyInput)
        );
        assert!(SimplicialComplex::from_ids([[1, 1]]).is_err());
    }

    #[test]
    fn links() {
        let s = SimplicialComplex::from_ids([[1, 2, 3], [2, 3, 4]]).unwrap();
        assert_eq!(
            s.link(&[VertexId(2), VertexId(3)]).unwrap().face_counts(),
            vec![1, 2]
        );
        assert_eq!(s.link(&[VertexId(1)]).unwrap().face_counts(), vec![1, 2, 1]);
        assert_eq!(s.boundary().unwrap().face_counts(), vec![1, 4, 4]);
    }
}
