//! f-, h- and g-vectors for simplicial and cubical complexes.
//!
//! Every vector carries its convention in its type: a simplicial f-vector
//! cannot be fed to the cubical h transforms and vice versa. All arithmetic
//! is on `i128`, with overflow checks enabled in every build profile.

use std::fmt;
use std::marker::PhantomData;

use crate::complex::{Complex, CubicalComplex, SimplicialComplex, VertexId};
use crate::error::EnumerativeError;
use crate::macaulay::{binomial, pow2, sign};

/// Face vectors and h/g-vectors of simplicial complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplicial {}

/// Face vectors of cubical complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cubical {}

/// Adin's short cubical h-vector, `h_0..h_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShortCubical {}

/// Adin's (long) cubical h-vector, `h_0..h_{d+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LongCubical {}

pub trait VectorKind {
    const NAME: &'static str;
}

impl VectorKind for Simplicial {
    const NAME: &'static str = "simplicial";
}
impl VectorKind for Cubical {
    const NAME: &'static str = "cubical";
}
impl VectorKind for ShortCubical {
    const NAME: &'static str = "short-cubical";
}
impl VectorKind for LongCubical {
    const NAME: &'static str = "long-cubical";
}

/// `(f_{-1}, f_0, …, f_dim)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector<K> {
    dim: i64,
    counts: Vec<i128>,
    _kind: PhantomData<K>,
}

impl<K> FVector<K> {
    /// Builds from counts starting at `f_{-1}`.
    pub fn from_counts(counts: Vec<i128>) -> Self {
        assert!(!counts.is_empty(), "an f-vector includes f_-1");
        Self {
            dim: counts.len() as i64 - 2,
            counts,
            _kind: PhantomData,
        }
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    /// `f_i`, zero outside `-1..=dim`.
    pub fn get(&self, i: i64) -> i128 {
        if i < -1 || i > self.dim {
            0
        } else {
            self.counts[(i + 1) as usize]
        }
    }

    /// Counts starting at `f_{-1}`.
    pub fn counts(&self) -> &[i128] {
        &self.counts
    }

    /// The same counts viewed in a larger ambient dimension (trailing zeros).
    pub fn padded(&self, dim: i64) -> Self {
        assert!(dim >= self.dim, "cannot shrink an f-vector");
        let mut counts = self.counts.clone();
        counts.resize((dim + 2) as usize, 0);
        Self {
            dim,
            counts,
            _kind: PhantomData,
        }
    }

    /// `Σ_{i=-1}^{dim} (-1)^i f_i`.
    pub fn reduced_euler(&self) -> i128 {
        (-1..=self.dim).map(|i| sign(i) * self.get(i)).sum()
    }
}

impl<K: VectorKind> fmt::Display for FVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.counts)
    }
}

/// h-vector entries `h_0, h_1, …` with the complex dimension they refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector<K> {
    dim: i64,
    entries: Vec<i128>,
    _kind: PhantomData<K>,
}

impl<K> HVector<K> {
    pub fn from_entries(dim: i64, entries: Vec<i128>) -> Self {
        Self {
            dim,
            entries,
            _kind: PhantomData,
        }
    }

    /// Dimension of the complex the vector belongs to.
    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn entries(&self) -> &[i128] {
        &self.entries
    }

    /// `h_i`, zero outside the stored range.
    pub fn get(&self, i: i64) -> i128 {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.entries.get(i).copied())
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<K: VectorKind> fmt::Display for HVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

/// Successive differences `g_0 = h_0`, `g_i = h_i − h_{i−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GVector<K> {
    entries: Vec<i128>,
    _kind: PhantomData<K>,
}

impl<K> GVector<K> {
    pub fn entries(&self) -> &[i128] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i128 {
        self.entries.get(i).copied().unwrap_or(0)
    }
}

impl<K: VectorKind> fmt::Display for GVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i128]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

pub fn f_vector<C: Complex>(complex: &C) -> FVector<C::Kind> {
    FVector::from_counts(
        complex
            .face_counts()
            .into_iter()
            .map(|n| n as i128)
            .collect(),
    )
}

pub fn reduced_euler<C: Complex>(complex: &C) -> i128 {
    f_vector(complex).reduced_euler()
}

/// `h_j = Σ_{i=0}^{j} (−1)^{j−i} C(d−i, j−i) f_{i−1}` with `d = dim + 1`.
pub fn h_simplicial(f: &FVector<Simplicial>) -> HVector<Simplicial> {
    let d = f.dim() + 1;
    let entries = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| sign(j - i) * binomial(d - i, j - i) * f.get(i - 1))
                .sum()
        })
        .collect();
    HVector::from_entries(f.dim(), entries)
}

/// Recovers the f-vector by expanding `Σ h_j λ^j (1−λ)^{d−j}`.
pub fn f_from_h_simplicial(h: &HVector<Simplicial>) -> FVector<Simplicial> {
    let d = h.dim() + 1;
    let counts = (0..=d)
        .map(|i| (0..=i).map(|j| binomial(d - j, i - j) * h.get(j)).sum())
        .collect();
    FVector::from_counts(counts)
}

/// `h^sc_j = Σ_{i=0}^{j} 2^i (−1)^{j−i} C(d−i, j−i) f_i`.
pub fn h_short_cubical_from_f(
    f: &FVector<Cubical>,
) -> Result<HVector<ShortCubical>, EnumerativeError> {
    let d = f.dim();
    if d < 0 {
        return Err(EnumerativeError::NegativeDimension(d));
    }
    let entries = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| pow2(i) * sign(j - i) * binomial(d - i, j - i) * f.get(i))
                .sum()
        })
        .collect();
    Ok(HVector::from_entries(d, entries))
}

/// Link of every vertex, in vertex order.
pub fn vertex_links(
    complex: &CubicalComplex,
) -> Result<Vec<(VertexId, SimplicialComplex)>, EnumerativeError> {
    complex
        .vertices()
        .map(|v| Ok((v, complex.link_of_vertex(v)?)))
        .collect()
}

/// `h^sc_j = Σ_v h_j(lk v)`, each link's h-vector taken in dimension `d − 1`.
pub fn h_short_cubical_from_links(
    complex: &CubicalComplex,
) -> Result<HVector<ShortCubical>, EnumerativeError> {
    let d = complex.dim();
    if d < 0 {
        return Err(EnumerativeError::NegativeDimension(d));
    }
    let mut entries = vec![0i128; (d + 1) as usize];
    for (_, link) in vertex_links(complex)? {
        let h = h_simplicial(&f_vector(&link).padded(d - 1));
        for (acc, x) in entries.iter_mut().zip(h.entries()) {
            *acc += x;
        }
    }
    Ok(HVector::from_entries(d, entries))
}

/// `h^(c)_0 = 2^d`, `h^(c)_{i+1} = h^sc_i − h^(c)_i`.
pub fn h_long_cubical(short: &HVector<ShortCubical>) -> HVector<LongCubical> {
    let d = short.dim();
    let mut entries = Vec::with_capacity((d + 2) as usize);
    entries.push(pow2(d));
    for i in 0..=d {
        let next = short.get(i) - entries[i as usize];
        entries.push(next);
    }
    HVector::from_entries(d, entries)
}

/// `g_0..g_m` of an h-vector; entries past the end of `h` read as zero.
pub fn g_vector<K>(h: &HVector<K>, m: usize) -> GVector<K> {
    let entries = (0..=m as i64).map(|i| h.get(i) - h.get(i - 1)).collect();
    GVector {
        entries,
        _kind: PhantomData,
    }
}

/// Short and long cubical h-vectors of a complex in one go.
pub fn cubical_h_vectors(
    complex: &CubicalComplex,
) -> Result<(HVector<ShortCubical>, HVector<LongCubical>), EnumerativeError> {
    let short = h_short_cubical_from_f(&f_vector(complex))?;
    let long = h_long_cubical(&short);
    Ok((short, long))
}
