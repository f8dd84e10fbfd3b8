use std::collections::BTreeMap;

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};

use crate::complex::{is_subset, CubicalCell, SimplicialComplex, VertexId};
use crate::error::ComplexError;

/// A nonempty face of a cubical complex: its vertex set plus one witness
/// corner ordering used for subface extraction and antipodal pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    vertices: Vec<VertexId>,
    cell: CubicalCell,
}

impl Face {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.cell.dim()
    }

    pub fn witness(&self) -> &CubicalCell {
        &self.cell
    }

    pub fn antipodal_pairs(&self) -> Result<Vec<(VertexId, VertexId)>, ComplexError> {
        self.cell.antipodal_pairs()
    }
}

/// A cubical complex, stored as its face poset keyed by vertex sets.
///
/// The empty face is implicit. Faces are kept sorted by `(dim, vertices)` so
/// every iteration order is deterministic.
#[derive(Debug, Clone)]
pub struct CubicalComplex {
    faces: Vec<Face>,
    index: HashMap<Vec<VertexId>, usize>,
    incidence: BTreeMap<VertexId, Vec<usize>>,
    maximal: Vec<usize>,
    dim: i64,
}

impl PartialEq for CubicalComplex {
    fn eq(&self, other: &Self) -> bool {
        self.faces.len() == other.faces.len()
            && self
                .faces
                .iter()
                .zip(&other.faces)
                .all(|(a, b)| a.vertices == b.vertices && a.dim() == b.dim())
    }
}

impl Eq for CubicalComplex {}

impl CubicalComplex {
    /// The complex `{∅}` of dimension −1.
    pub fn empty() -> Self {
        Self {
            faces: Vec::new(),
            index: HashMap::default(),
            incidence: BTreeMap::new(),
            maximal: Vec::new(),
            dim: -1,
        }
    }

    /// Closes `cells` under subface extraction and validates the cubical
    /// complex axioms.
    ///
    /// Faces are created only as coordinate restrictions of input cells. The
    /// validation then checks that (a) every vertex set has one dimension and one
    /// cube structure, (b) every face contained in a cell's vertex set is a
    /// subface of that cell, and (c) any two cells meet in a face. Together
    /// these give closure under intersection for all pairs of faces.
    pub fn build(cells: Vec<CubicalCell>) -> Result<Self, ComplexError> {
        if cells.is_empty() {
            return Err(ComplexError::EmptyInput);
        }

        let mut found: HashMap<Vec<VertexId>, CubicalCell> = HashMap::default();
        let mut key = Vec::new();
        for cell in &cells {
            for (mask, bits) in cell.subface_keys() {
                cell.restricted_vertex_set(mask, bits, &mut key);
                let Some(prev) = found.get(key.as_slice()) else {
                    found.insert(key.clone(), cell.restrict(mask, bits));
                    continue;
                };
                let sub = cell.restrict(mask, bits);
                if prev.dim() != sub.dim() {
                    return Err(ComplexError::InconsistentSharedFace {
                        face: key,
                        reason: format!("dimension {} vs {}", prev.dim(), sub.dim()),
                    });
                }
                if prev.corners() != sub.corners() && prev.edges() != sub.edges() {
                    return Err(ComplexError::InconsistentSharedFace {
                        face: key,
                        reason: "different edge sets".into(),
                    });
                }
            }
        }

        let mut faces: Vec<Face> = found
            .into_iter()
            .map(|(vertices, cell)| Face { vertices, cell })
            .collect();
        faces.sort_by(|a, b| (a.dim(), &a.vertices).cmp(&(b.dim(), &b.vertices)));

        let complex = Self::from_sorted_faces(faces);
        complex.check_cells(&cells)?;
        Ok(complex)
    }

    fn from_sorted_faces(faces: Vec<Face>) -> Self {
        let index: HashMap<Vec<VertexId>, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertices.clone(), i))
            .collect();
        let mut incidence: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &v in &f.vertices {
                incidence.entry(v).or_default().push(i);
            }
        }
        // maximal: no face one dimension up contains it
        let maximal = (0..faces.len())
            .filter(|&i| {
                let f = &faces[i];
                !incidence[&f.vertices[0]].iter().any(|&j| {
                    faces[j].dim() == f.dim() + 1 && is_subset(&f.vertices, &faces[j].vertices)
                })
            })
            .collect();
        let dim = faces.last().map_or(-1, |f| f.dim() as i64);
        Self {
            faces,
            index,
            incidence,
            maximal,
            dim,
        }
    }

    fn check_cells(&self, cells: &[CubicalCell]) -> Result<(), ComplexError> {
        let mut cells_at: HashMap<VertexId, Vec<usize>> = HashMap::default();
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell.corners() {
                cells_at.entry(v).or_default().push(c);
            }
        }
        let vertex_sets: Vec<Vec<VertexId>> = cells.iter().map(|c| c.vertex_set()).collect();

        // interval below each cell is exactly its cube of subfaces
        for face in &self.faces {
            for &c in &cells_at[&face.vertices[0]] {
                if face.dim() <= cells[c].dim()
                    && is_subset(&face.vertices, &vertex_sets[c])
                    && !cells[c].is_subface(&face.vertices)
                {
                    return Err(ComplexError::InconsistentSharedFace {
                        face: face.vertices.clone(),
                        reason: format!(
                            "lies in cell {:?} but is not one of its subfaces",
                            vertex_sets[c]
                        ),
                    });
                }
            }
        }

        let mut seen: HashSet<(usize, usize)> = HashSet::default();
        for around in cells_at.values() {
            for (i, &a) in around.iter().enumerate() {
                for &b in &around[i + 1..] {
                    let pair = (a.min(b), a.max(b));
                    if a == b || !seen.insert(pair) {
                        continue;
                    }
                    let meet = intersect(&vertex_sets[a], &vertex_sets[b]);
                    if !self.index.contains_key(&meet) {
                        return Err(ComplexError::IntersectionNotAFace {
                            first: vertex_sets[a].clone(),
                            second: vertex_sets[b].clone(),
                            intersection: meet,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    /// All nonempty faces, sorted by dimension then vertex set.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, k: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim() == k)
    }

    /// Inclusion-maximal faces.
    pub fn cells(&self) -> impl Iterator<Item = &Face> {
        self.maximal.iter().map(|&i| &self.faces[i])
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence.keys().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.incidence.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.incidence.contains_key(&v)
    }

    /// Looks up a face by its vertex set (any order).
    pub fn face(&self, vertices: &[VertexId]) -> Option<&Face> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.index.get(&key).map(|&i| &self.faces[i])
    }

    pub fn contains(&self, vertices: &[VertexId]) -> bool {
        vertices.is_empty() || self.face(vertices).is_some()
    }

    /// Faces containing `v`, including `{v}` itself.
    pub fn faces_containing(&self, v: VertexId) -> impl Iterator<Item = &Face> {
        self.incidence
            .get(&v)
            .into_iter()
            .flatten()
            .map(|&i| &self.faces[i])
    }

    /// Faces `G ⊇ F`, including `F`.
    pub fn cofaces<'a>(&'a self, face: &'a Face) -> impl Iterator<Item = &'a Face> + 'a {
        self.faces_containing(face.vertices[0])
            .filter(move |g| g.dim() >= face.dim() && is_subset(&face.vertices, &g.vertices))
    }

    /// `χ̃(lk F)` for every face, in `faces()` order: each face `G` adds
    /// `(−1)^{dim G − dim F − 1}` to every subface `F`.
    pub fn link_eulers(&self) -> Vec<i128> {
        let mut eulers = vec![0i128; self.faces.len()];
        let mut key = Vec::new();
        for g in &self.faces {
            for (mask, bits) in g.cell.subface_keys() {
                g.cell.restricted_vertex_set(mask, bits, &mut key);
                let codim = mask.count_ones();
                eulers[self.index[key.as_slice()]] += if codim % 2 == 1 { 1 } else { -1 };
            }
        }
        eulers
    }

    /// Number of faces per dimension, starting with the empty face.
    pub fn face_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim + 2) as usize];
        counts[0] = 1;
        for f in &self.faces {
            counts[f.dim() + 1] += 1;
        }
        counts
    }

    /// Link of a nonempty face `F` as a simplicial complex.
    ///
    /// With `v` the smallest vertex of `F`, a coface `G ⊇ F` of dimension
    /// `dim F + j` becomes the `(j−1)`-simplex made of the neighbours of `v`
    /// inside `G` that are not in `F`. Each such neighbour names the unique
    /// `(dim F + 1)`-face spanned by `F` and that edge, so link vertices are
    /// labelled by vertices of the complex.
    pub fn link_face(&self, vertices: &[VertexId]) -> Result<SimplicialComplex, ComplexError> {
        let face = self
            .face(vertices)
            .ok_or_else(|| ComplexError::UnknownFace(vertices.to_vec()))?;
        let apex = face.vertices[0];
        let simplices: Vec<Vec<VertexId>> = self
            .cofaces(face)
            .map(|g| {
                let mut s: Vec<VertexId> = g
                    .cell
                    .neighbours(apex)
                    .expect("apex is a corner of every coface")
                    .into_iter()
                    .filter(|w| face.vertices.binary_search(w).is_err())
                    .collect();
                s.sort_unstable();
                debug_assert_eq!(s.len(), g.dim() - face.dim());
                s
            })
            .collect();
        Ok(SimplicialComplex::from_closed_family(simplices))
    }

    /// Link of a vertex: its vertices are the neighbours of `v` (one per edge
    /// through `v`), and each `i`-face through `v` gives an `(i−1)`-simplex.
    pub fn link_of_vertex(&self, v: VertexId) -> Result<SimplicialComplex, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::UnknownVertex(v));
        }
        self.link_face(&[v])
    }

    /// Codimension-one faces of a pure complex with the number of facets
    /// containing each.
    pub fn ridge_degrees(&self) -> Result<BTreeMap<Vec<VertexId>, usize>, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut degrees = BTreeMap::new();
        for cell in self.cells() {
            for ridge in ridges_of_cell(&cell.cell) {
                *degrees.entry(ridge).or_insert(0) += 1;
            }
        }
        Ok(degrees)
    }

    pub fn is_pure(&self) -> bool {
        self.cells().all(|c| c.dim() as i64 == self.dim)
    }

    /// Closure of the ridges lying in exactly one facet. Empty when every
    /// ridge has two or more facets.
    pub fn boundary(&self) -> Result<CubicalComplex, ComplexError> {
        if self.dim < 1 {
            return Err(ComplexError::DimensionTooSmall {
                needed: 1,
                actual: self.dim,
            });
        }
        let degrees = self.ridge_degrees()?;
        let free: Vec<usize> = degrees
            .into_iter()
            .filter(|&(_, n)| n == 1)
            .map(|(r, _)| self.index[&r])
            .collect();
        Ok(self.closure(&free))
    }

    /// Closure of some faces, given by position in `faces()`. A subcomplex
    /// of a valid complex is valid, so nothing is re-checked.
    fn closure(&self, tops: &[usize]) -> CubicalComplex {
        let mut keep = vec![false; self.faces.len()];
        let mut key = Vec::new();
        for &i in tops {
            let cell = &self.faces[i].cell;
            for (mask, bits) in cell.subface_keys() {
                cell.restricted_vertex_set(mask, bits, &mut key);
                keep[self.index[key.as_slice()]] = true;
            }
        }
        let faces = self
            .faces
            .iter()
            .zip(keep)
            .filter(|&(_, k)| k)
            .map(|(f, _)| f.clone())
            .collect();
        Self::from_sorted_faces(faces)
    }

    /// The intersection of all faces containing both `u` and `v`, if any face
    /// contains both.
    pub fn least_upper_bound(
        &self,
        u: VertexId,
        v: VertexId,
    ) -> Result<Option<&Face>, ComplexError> {
        for w in [u, v] {
            if !self.has_vertex(w) {
                return Err(ComplexError::UnknownVertex(w));
            }
        }
        let mut meet: Option<Vec<VertexId>> = None;
        for g in self.faces_containing(u) {
            if g.vertices.binary_search(&v).is_ok() {
                meet = Some(match meet {
                    None => g.vertices.clone(),
                    Some(m) => intersect(&m, &g.vertices),
                });
            }
        }
        Ok(meet.map(|m| {
            self.face(&m)
                .expect("intersections of faces are faces in a validated complex")
        }))
    }
}

/// Codimension-one faces of a cell; for a point this is the empty face.
pub(crate) fn ridges_of_cell(cell: &CubicalCell) -> Vec<Vec<VertexId>> {
    if cell.dim() == 0 {
        return vec![Vec::new()];
    }
    cell.facets().iter().map(CubicalCell::vertex_set).collect()
}

fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    a.iter()
        .filter(|x| b.binary_search(x).is_ok())
        .copied()
        .collect()
}
