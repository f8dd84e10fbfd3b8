//! Mechanical checks of the face-number identities and inequalities.
//!
//! Each verifier returns a [`VerificationReport`]. When the hypotheses of a
//! statement fail on the input the report is `Inapplicable`, never `Fail`:
//! a failed hypothesis is not a counterexample.

mod dehn_sommerville;
mod lower_bound;

pub use dehn_sommerville::{
    verify_adin_ds, verify_babson_billera_chan, verify_eq3, verify_ns_ds, verify_theorem_42,
    with_boundary_sides,
};
pub use lower_bound::{
    verify_corollary_33, verify_corollary_36, verify_lemma_31, verify_lemma_39,
    verify_proposition_311, verify_proposition_38, verify_theorem_310, verify_theorem_32,
    verify_theorem_37,
};

use crate::classify::{is_pseudomanifold, semi_eulerian_witness, sphere_euler};
use crate::complex::{CubicalComplex, VertexId};
use crate::enumerative::{
    cubical_h_vectors, f_vector, h_simplicial, vertex_links, Cubical, FVector, HVector,
    LongCubical, ShortCubical, Simplicial,
};
use crate::report::VerificationReport;
use crate::topology::{Claim, Topology};

/// The enumerative data most checks need.
pub(crate) struct Profile {
    pub d: i64,
    pub f: FVector<Cubical>,
    pub chi: i128,
    pub short: HVector<ShortCubical>,
    pub long: HVector<LongCubical>,
}

impl Profile {
    pub fn of(complex: &CubicalComplex) -> Option<Self> {
        let (short, long) = cubical_h_vectors(complex).ok()?;
        let f = f_vector(complex);
        Some(Self {
            d: complex.dim(),
            chi: f.reduced_euler(),
            f,
            short,
            long,
        })
    }
}

/// A vertex link with its f- and h-vectors taken in dimension `d − 1`.
pub(crate) struct LinkData {
    pub vertex: VertexId,
    pub f: FVector<Simplicial>,
    pub h: HVector<Simplicial>,
}

pub(crate) fn link_data(complex: &CubicalComplex) -> Vec<LinkData> {
    let d = complex.dim();
    vertex_links(complex)
        .expect("vertices of the complex have links")
        .into_iter()
        .map(|(vertex, link)| {
            let f = f_vector(&link).padded(d - 1);
            let h = h_simplicial(&f);
            LinkData { vertex, f, h }
        })
        .collect()
}

/// Pure, semi-Eulerian, with `χ̃(K) = χ̃(S^d)`; each step recorded.
pub(crate) fn require_eulerian(report: &mut VerificationReport, complex: &CubicalComplex) -> bool {
    if !report.require("pure", complex.is_pure()) {
        return false;
    }
    let semi = semi_eulerian_witness(complex).expect("pure").is_none();
    if !report.require("semi-Eulerian", semi) {
        return false;
    }
    let chi = f_vector(complex).reduced_euler();
    report.require(
        "reduced Euler characteristic equals that of S^d",
        chi == sphere_euler(complex.dim()),
    )
}

/// Checks a claimed closed sphere against its computable consequences.
pub(crate) fn require_sphere(
    report: &mut VerificationReport,
    complex: &CubicalComplex,
    claim: &Claim,
) -> bool {
    if !report.require(
        "claimed topology is sphere",
        claim.topology == Topology::Sphere,
    ) {
        return false;
    }
    let pm = complex.is_pure() && is_pseudomanifold(complex).unwrap_or(false);
    if !report.require("pseudomanifold", pm) {
        return false;
    }
    require_eulerian(report, complex)
}

/// Checks a claimed manifold with boundary: ridges in one or two facets,
/// nonempty boundary, and every link Euler characteristic equal to that of
/// a ball (boundary faces) or a sphere (interior faces).
///
/// Returns the boundary and `χ̃(lk F)` for each face in `faces()` order.
pub(crate) fn require_manifold_with_boundary(
    report: &mut VerificationReport,
    complex: &CubicalComplex,
    claim: &Claim,
) -> Option<(CubicalComplex, Vec<i128>)> {
    if !report.require(
        "claimed topology has boundary",
        claim.topology.has_boundary(),
    ) {
        return None;
    }
    let d = complex.dim();
    if !report.require("dimension at least 1", d >= 1) || !report.require("pure", complex.is_pure())
    {
        return None;
    }
    let degrees = complex.ridge_degrees().expect("pure");
    if !report.require(
        "every ridge in one or two facets",
        degrees.values().all(|&n| n == 1 || n == 2),
    ) {
        return None;
    }
    let boundary = complex.boundary().expect("pure of dimension >= 1");
    if !report.require("boundary nonempty", boundary.dim() >= 0) {
        return None;
    }
    let eulers = complex.link_eulers();
    let links_ok = complex.faces().iter().zip(&eulers).all(|(face, &chi)| {
        let expected = if boundary.contains(face.vertices()) {
            0
        } else {
            sphere_euler(d - face.dim() as i64 - 1)
        };
        chi == expected
    });
    if !report.require("links have ball/sphere Euler characteristics", links_ok) {
        return None;
    }
    Some((boundary, eulers))
}
