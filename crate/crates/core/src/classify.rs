//! Combinatorial classification: purity, pseudomanifolds, (semi-)Eulerian.

use crate::complex::{Complex, CubicalComplex, Face};
use crate::enumerative::{f_vector, reduced_euler};
use crate::error::ComplexError;
use crate::macaulay::sign;

/// All maximal faces have the top dimension.
pub fn is_pure<C: Complex>(complex: &C) -> bool {
    complex.is_pure()
}

/// Every ridge lies in exactly two facets.
pub fn is_pseudomanifold<C: Complex>(complex: &C) -> Result<bool, ComplexError> {
    if complex.dim() < 0 {
        return Ok(false);
    }
    Ok(complex.ridge_degrees()?.values().all(|&n| n == 2))
}

/// `χ̃(S^k) = (−1)^k`, including `k = −1`.
pub fn sphere_euler(k: i64) -> i128 {
    sign(k)
}

/// `χ̃(lk F)` summed directly over cofaces: `Σ_{G ⊇ F} (−1)^{dim G − dim F − 1}`.
pub fn link_euler(complex: &CubicalComplex, face: &Face) -> i128 {
    complex
        .cofaces(face)
        .map(|g| sign(g.dim() as i64 - face.dim() as i64 - 1))
        .sum()
}

/// First nonempty face whose link does not have the Euler characteristic of
/// a sphere of dimension `d − dim F − 1`.
pub fn semi_eulerian_witness(complex: &CubicalComplex) -> Result<Option<&Face>, ComplexError> {
    if !complex.is_pure() {
        return Err(ComplexError::NotPure);
    }
    let d = complex.dim();
    for face in complex.faces() {
        let link = complex.link_face(face.vertices())?;
        if reduced_euler(&link) != sphere_euler(d - face.dim() as i64 - 1) {
            return Ok(Some(face));
        }
    }
    Ok(None)
}

pub fn is_semi_eulerian(complex: &CubicalComplex) -> Result<bool, ComplexError> {
    Ok(semi_eulerian_witness(complex)?.is_none())
}

/// Semi-Eulerian with `χ̃(K) = χ̃(S^d)`.
pub fn is_eulerian(complex: &CubicalComplex) -> Result<bool, ComplexError> {
    Ok(is_semi_eulerian(complex)?
        && f_vector(complex).reduced_euler() == sphere_euler(complex.dim()))
}
