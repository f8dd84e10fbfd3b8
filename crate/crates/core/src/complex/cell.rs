use crate::complex::VertexId;
use crate::error::ComplexError;

/// A combinatorial cube given by its corners.
///
/// Corner `b` is the vertex at cube coordinate `b`: bit `t` of the index is the
/// value of coordinate `t`. A `k`-cell therefore has `2^k` corners, and fixing
/// any subset of coordinates selects a subface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicalCell {
    dim: usize,
    corners: Vec<VertexId>,
}

impl CubicalCell {
    pub fn new(corners: Vec<VertexId>) -> Result<Self, ComplexError> {
        let n = corners.len();
        if n == 0 || !n.is_power_of_two() {
            return Err(ComplexError::CornerCount(n));
        }
        let mut sorted = corners.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertexInCell {
                cell: corners,
                vertex: w[0],
            });
        }
        Ok(Self {
            dim: n.trailing_zeros() as usize,
            corners,
        })
    }

    /// Convenience constructor from raw integer labels.
    pub fn from_ids<I: IntoIterator<Item = u64>>(ids: I) -> Result<Self, ComplexError> {
        Self::new(ids.into_iter().map(VertexId).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn corners(&self) -> &[VertexId] {
        &self.corners
    }

    pub fn corner(&self, index: usize) -> VertexId {
        self.corners[index]
    }

    pub fn corner_index(&self, v: VertexId) -> Option<usize> {
        self.corners.iter().position(|&c| c == v)
    }

    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut vs = self.corners.clone();
        vs.sort_unstable();
        vs
    }

    /// Corner indices of the subface fixing the coordinates in `mask` to the
    /// corresponding bits of `bits`, in the subface's own corner order.
    fn subface_indices(&self, mask: usize, bits: usize) -> impl Iterator<Item = usize> {
        let free = !mask & ((1usize << self.dim) - 1);
        let base = bits & mask;
        (0..1usize << free.count_ones()).map(move |r| {
            // scatter the bits of r onto the free coordinates, in order
            let (mut idx, mut rest, mut pos) = (base, free, 0);
            while rest != 0 {
                idx |= ((r >> pos) & 1) << rest.trailing_zeros();
                rest &= rest - 1;
                pos += 1;
            }
            idx
        })
    }

    /// The subface obtained by fixing the coordinates in `mask` to the
    /// corresponding bits of `bits`. Free coordinates keep their relative order.
    pub fn restrict(&self, mask: usize, bits: usize) -> CubicalCell {
        let corners: Vec<VertexId> = self
            .subface_indices(mask, bits)
            .map(|i| self.corners[i])
            .collect();
        CubicalCell {
            dim: corners.len().trailing_zeros() as usize,
            corners,
        }
    }

    /// Sorted vertex set of `restrict(mask, bits)`, written into `out`.
    pub(crate) fn restricted_vertex_set(&self, mask: usize, bits: usize, out: &mut Vec<VertexId>) {
        out.clear();
        out.extend(self.subface_indices(mask, bits).map(|i| self.corners[i]));
        out.sort_unstable();
    }

    /// `(mask, bits)` pairs naming each of the `3^k` nonempty subfaces once.
    pub(crate) fn subface_keys(&self) -> impl Iterator<Item = (usize, usize)> {
        let full = (1usize << self.dim) - 1;
        (0..=full).flat_map(|mask| {
            // every submask of mask, from mask down to 0
            std::iter::successors(Some(mask), move |&b| (b != 0).then(|| (b - 1) & mask))
                .map(move |bits| (mask, bits))
        })
    }

    /// All `3^k` nonempty subfaces, including the cell itself.
    pub fn subfaces(&self) -> Vec<CubicalCell> {
        self.subface_keys()
            .map(|(mask, bits)| self.restrict(mask, bits))
            .collect()
    }

    /// The `2k` codimension-one subfaces.
    pub fn facets(&self) -> Vec<CubicalCell> {
        (0..self.dim)
            .flat_map(|t| [self.restrict(1 << t, 0), self.restrict(1 << t, 1 << t)])
            .collect()
    }

    /// Edges of the cube as sorted vertex pairs, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut es: Vec<_> = (0..self.corners.len())
            .flat_map(|b| {
                (0..self.dim)
                    .filter(move |t| b & (1 << t) == 0)
                    .map(move |t| {
                        let (u, w) = (self.corners[b], self.corners[b | (1 << t)]);
                        (u.min(w), u.max(w))
                    })
            })
            .collect();
        es.sort_unstable();
        es
    }

    /// Neighbours of corner `v` along each coordinate direction, in coordinate order.
    pub fn neighbours(&self, v: VertexId) -> Option<Vec<VertexId>> {
        let b = self.corner_index(v)?;
        Some((0..self.dim).map(|t| self.corners[b ^ (1 << t)]).collect())
    }

    /// Pairs `(corner b, corner !b)` for every `b` below its complement.
    pub fn antipodal_pairs(&self) -> Result<Vec<(VertexId, VertexId)>, ComplexError> {
        if self.dim == 0 {
            return Err(ComplexError::ZeroDimensionalFace);
        }
        let full = (1usize << self.dim) - 1;
        Ok((0..self.corners.len())
            .filter(|&b| b < (b ^ full))
            .map(|b| (self.corners[b], self.corners[b ^ full]))
            .collect())
    }

    /// Whether `vertices` is exactly the vertex set of some subface.
    pub fn is_subface(&self, vertices: &[VertexId]) -> bool {
        let mut and = usize::MAX;
        let mut or = 0usize;
        for &v in vertices {
            match self.corner_index(v) {
                Some(b) => {
                    and &= b;
                    or |= b;
                }
                None => return false,
            }
        }
        if vertices.is_empty() {
            return true;
        }
        let free = (and ^ or).count_ones();
        vertices.len() == 1usize << free
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> CubicalCell {
        CubicalCell::from_ids([10, 11, 12, 13]).unwrap()
    }

    #[test]
    fn rejects_bad_corner_counts() {
        assert_eq!(
            CubicalCell::from_ids([1, 2, 3]),
            Err(ComplexError::CornerCount(3))
        );
        assert!(matches!(
            CubicalCell::from_ids([1, 2, 1, 4]),
            Err(ComplexError::DuplicateVertexInCell { .. })
        ));
    }

    #[test]
    fn square_edges_follow_bit_order() {
        let e = square().edges();
        let ids: Vec<(u64, u64)> = e.iter().map(|(a, b)| (a.0, b.0)).collect();
        assert_eq!(ids, vec![(10, 11), (10, 12), (11, 13), (12, 13)]);
    }

    #[test]
    fn subface_count_is_three_to_the_k() {
        let cube = CubicalCell::from_ids(0..8).unwrap();
        assert_eq!(cube.subfaces().len(), 27);
        assert_eq!(cube.facets().len(), 6);
    }

    #[test]
    fn antipodes() {
        let pairs = square().antipodal_pairs().unwrap();
        assert_eq!(
            pairs,
            vec![(VertexId(10), VertexId(13)), (VertexId(11), VertexId(12))]
        );
        let cube = CubicalCell::from_ids(0..8).unwrap();
        assert_eq!(cube.antipodal_pairs().unwrap().len(), 4);
        let point = CubicalCell::from_ids([5]).unwrap();
        assert_eq!(
            point.antipodal_pairs(),
            Err(ComplexError::ZeroDimensionalFace)
        );
    }

    #[test]
    fn subface_recognition() {
        let s = square();
        assert!(s.is_subface(&[VertexId(10), VertexId(11)]));
        assert!(!s.is_subface(&[VertexId(10), VertexId(13)]));
        assert!(s.is_subface(&[VertexId(13)]));
    }

    #[test]
    fn restriction_order_does_not_matter() {
        let cube = CubicalCell::from_ids(0..16).unwrap();
        // fix coordinate 1 then 3, versus fixing both at once
        let a = cube.restrict(0b0010, 0b0010).restrict(0b0100, 0);
        let b = cube.restrict(0b1010, 0b0010);
        assert_eq!(a.vertex_set(), b.vertex_set());
    }
}
