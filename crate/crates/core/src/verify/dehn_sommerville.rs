use crate::classify::{semi_eulerian_witness, sphere_euler};
use crate::complex::{CubicalComplex, SimplicialComplex};
use crate::enumerative::{
    f_vector, g_vector, h_long_cubical, h_short_cubical_from_f, h_simplicial, Cubical, FVector,
    HVector, LongCubical,
};
use crate::error::EnumerativeError;
use crate::macaulay::{binomial, pow2, sign};
use crate::report::{Relation, VerificationReport, Witness};
use crate::topology::{Claim, Topology};
use crate::verify::{require_manifold_with_boundary, Profile};

/// Cubical Dehn–Sommerville relations for semi-Eulerian complexes:
/// `h^(c)_{d+1−i} − h^(c)_i = (−1)^i (−2)^d (χ̃(K) − χ̃(S^d))` for `0 ≤ i ≤ d+1`,
/// together with the symmetry `h^sc_i = h^sc_{d−i}`.
pub fn verify_adin_ds(complex: &CubicalComplex) -> VerificationReport {
    let mut report = VerificationReport::new(
        "adin-ds",
        "h^c_{d+1-i} - h^c_i = (-1)^i (-2)^d (chi~(K) - chi~(S^d)), 0 <= i <= d+1; h^sc_i = h^sc_{d-i}",
    );
    if !report.require("dimension at least 0", complex.dim() >= 0)
        || !report.require("pure", complex.is_pure())
    {
        return report.finish();
    }
    let witness = semi_eulerian_witness(complex).expect("pure");
    if !report.require("semi-Eulerian", witness.is_none()) {
        let face = witness.expect("witness present");
        report.note(format!(
            "link of {} has the wrong Euler characteristic",
            Witness::Face(face.vertices().to_vec())
        ));
        return report.finish();
    }
    let p = Profile::of(complex).expect("dimension >= 0");
    let d = p.d;
    let excess = p.chi - sphere_euler(d);
    for i in 0..=d + 1 {
        report.record(
            format!("eq1[{i}]"),
            p.long.get(d + 1 - i) - p.long.get(i),
            Relation::Eq,
            sign(i) * sign(d) * pow2(d) * excess,
        );
    }
    for i in 0..=d {
        report.record(
            format!("hsc-sym[{i}]"),
            p.short.get(i),
            Relation::Eq,
            p.short.get(d - i),
        );
    }
    if excess == 0 {
        report.note("Eulerian: right-hand side vanishes at every index");
    }
    report.finish()
}

/// `h^(c)_{i+1} − h^(c)_{i−1} = h^sc_i − h^sc_{i−1}` and the closed form
/// `h^(c)_{i+1} = (−1)^{i+1} h^(c)_0 + Σ_{j≤i} (−1)^{i−j} h^sc_j`, plus the
/// endpoint identities `h^(c)_1 = f_0 − 2^d` and `h^(c)_{d+1} = (−2)^d χ̃(K)`.
pub fn verify_eq3(complex: &CubicalComplex) -> VerificationReport {
    let mut report = VerificationReport::new(
        "eq3",
        "h^c_{i+1} - h^c_{i-1} = h^sc_i - h^sc_{i-1}; closed form of h^c from h^sc",
    );
    let Some(p) = Profile::of(complex) else {
        report.require("dimension at least 0", false);
        return report.finish();
    };
    let d = p.d;
    for i in 1..=d {
        report.record(
            format!("eq3[{i}]"),
            p.long.get(i + 1) - p.long.get(i - 1),
            Relation::Eq,
            p.short.get(i) - p.short.get(i - 1),
        );
    }
    for i in 0..=d {
        let closed =
            sign(i + 1) * pow2(d) + (0..=i).map(|j| sign(i - j) * p.short.get(j)).sum::<i128>();
        report.record(
            format!("closed-form[{i}]"),
            p.long.get(i + 1),
            Relation::Eq,
            closed,
        );
    }
    report.record(
        "h^c_1 = f_0 - 2^d",
        p.long.get(1),
        Relation::Eq,
        p.f.get(0) - pow2(d),
    );
    report.record(
        "h^c_{d+1} = (-2)^d chi~",
        p.long.get(d + 1),
        Relation::Eq,
        sign(d) * pow2(d) * p.chi,
    );
    report.finish()
}

/// Long cubical h-vector of a boundary complex, taken in dimension `d − 1`
/// even when the boundary is `{∅}`.
fn boundary_long_h(boundary: &CubicalComplex, d: i64) -> HVector<LongCubical> {
    let f = f_vector(boundary).padded(d - 1);
    h_long_cubical(&h_short_cubical_from_f(&f).expect("d >= 1"))
}

/// Both sides of `h^(c)_{d+1−j} − h^(c)_j = (−1)^j (−2)^d χ̃(K) − g^(c)_j(∂K)`
/// for `j = 1..=d`, with `∂K` supplied by the caller.
///
/// Passing `CubicalComplex::empty()` for a closed complex treats the boundary
/// as the complex `{∅}` in dimension `d − 1`; the right-hand side then
/// reduces to the closed-complex Dehn–Sommerville relation.
pub fn with_boundary_sides(
    complex: &CubicalComplex,
    boundary: &CubicalComplex,
) -> Result<Vec<(i128, i128)>, EnumerativeError> {
    let d = complex.dim();
    if d < 1 {
        return Err(EnumerativeError::NegativeDimension(d));
    }
    let f = f_vector(complex);
    let long = h_long_cubical(&h_short_cubical_from_f(&f)?);
    let g_bd = g_vector(&boundary_long_h(boundary, d), d as usize);
    let chi = f.reduced_euler();
    Ok((1..=d)
        .map(|j| {
            (
                long.get(d + 1 - j) - long.get(j),
                sign(j) * sign(d) * pow2(d) * chi - g_bd.get(j as usize),
            )
        })
        .collect())
}

/// Coefficients of `Σ_i w_i (2λ)^i (1−λ)^{d−i}` for weights `w_0..w_d`.
fn short_transform(weights: &[i128], d: i64) -> Vec<i128> {
    let f = FVector::<Cubical>::from_counts(
        std::iter::once(1).chain(weights.iter().copied()).collect(),
    );
    h_short_cubical_from_f(&f.padded(d))
        .expect("d >= 0")
        .entries()
        .to_vec()
}

/// Cubical Dehn–Sommerville relations for manifolds with boundary, the
/// interior-face expansion of `h^sc`, and the general link-weighted expansion
/// it specialises.
pub fn verify_theorem_42(complex: &CubicalComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new(
        "thm42",
        "h^c_{d+1-j} - h^c_j = (-1)^j (-2)^d chi~(K) - g^c_j(bd K), 1 <= j <= d",
    );
    let Some((boundary, eulers)) = require_manifold_with_boundary(&mut report, complex, claim)
    else {
        return report.finish();
    };
    let p = Profile::of(complex).expect("d >= 1");
    let d = p.d;
    let sides = with_boundary_sides(complex, &boundary).expect("d >= 1");
    for (j, (lhs, rhs)) in (1..).zip(sides) {
        report.record(format!("thm42[{j}]"), lhs, Relation::Eq, rhs);
    }

    // interior faces F in K - bd K, and link-weighted face sums
    let mut interior = vec![0i128; (d + 1) as usize];
    let mut weighted = vec![0i128; (d + 1) as usize];
    for (face, chi) in complex.faces().iter().zip(eulers) {
        let k = face.dim();
        if !boundary.contains(face.vertices()) {
            interior[k] += 1;
        }
        weighted[k] += sign(d - k as i64 - 1) * chi;
    }
    let interior_h = short_transform(&interior, d);
    let weighted_h = short_transform(&weighted, d);
    let bd_short = h_short_cubical_from_f(&f_vector(&boundary).padded(d - 1)).expect("d >= 1");
    let bd_g = g_vector(&bd_short, d as usize);
    for m in 0..=d {
        let reversed = p.short.get(d - m);
        report.record(
            format!("link-expansion[{m}]"),
            reversed,
            Relation::Eq,
            weighted_h[m as usize],
        );
        report.record(
            format!("interior-expansion[{m}]"),
            reversed,
            Relation::Eq,
            interior_h[m as usize],
        );
        report.record(
            format!("interior-h[{m}]"),
            interior_h[m as usize],
            Relation::Eq,
            p.short.get(m) - bd_g.get(m as usize),
        );
    }
    report.finish()
}

/// The ball case: `h^(c)_{d+1−i} − h^(c)_i = −g^(c)_i(∂K)`.
pub fn verify_babson_billera_chan(complex: &CubicalComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new(
        "ball-ds",
        "h^c_{d+1-i} - h^c_i = -g^c_i(bd K), 1 <= i <= d, for cubical balls",
    );
    if !report.require("claimed topology is ball", claim.topology == Topology::Ball) {
        return report.finish();
    }
    let Some((boundary, _)) = require_manifold_with_boundary(&mut report, complex, claim) else {
        return report.finish();
    };
    let p = Profile::of(complex).expect("d >= 1");
    if !report.require("reduced Euler characteristic is 0", p.chi == 0) {
        return report.finish();
    }
    let d = p.d;
    let g_bd = g_vector(&boundary_long_h(&boundary, d), d as usize);
    for i in 1..=d {
        report.record(
            format!("ball-ds[{i}]"),
            p.long.get(d + 1 - i) - p.long.get(i),
            Relation::Eq,
            -g_bd.get(i as usize),
        );
    }
    report.finish()
}

/// Simplicial Dehn–Sommerville relations for manifolds with boundary:
/// `h_{d−i} − h_i = C(d,i) (−1)^{d−i−1} χ̃(Δ) − g_i(∂Δ)` for `0 ≤ i ≤ d`,
/// `Δ` of dimension `d − 1`.
///
/// A closed input has boundary `{∅}`, whose h-vector in dimension `d − 2` is
/// `h_j = (−1)^j C(d−1, j)`; with that reading the relation coincides with
/// Klee's, which is recorded alongside.
pub fn verify_ns_ds(complex: &SimplicialComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new(
        "ns-ds",
        "h_{d-i} - h_i = C(d,i) (-1)^{d-i-1} chi~ - g_i(bd), 0 <= i <= d",
    );
    if !report.require(
        "claimed topology is a manifold",
        claim.topology.is_manifold(),
    ) || !report.require("dimension at least 0", complex.dim() >= 0)
        || !report.require("pure", complex.is_pure())
    {
        return report.finish();
    }
    let degrees = complex.ridge_degrees().expect("pure");
    if !report.require(
        "every ridge in one or two facets",
        degrees.values().all(|&n| n == 1 || n == 2),
    ) {
        return report.finish();
    }
    let closed = degrees.values().all(|&n| n == 2);
    if !report.require(
        "boundary matches claimed topology",
        closed == claim.topology.is_closed_manifold(),
    ) {
        return report.finish();
    }
    let boundary = complex.boundary().expect("pure");
    let top = complex.dim();
    let links_ok = complex.faces().filter(|f| !f.is_empty()).all(|face| {
        let link = complex.link(face).expect("face of the complex");
        let expected = if boundary.contains(face) {
            0
        } else {
            sphere_euler(top - face.len() as i64)
        };
        f_vector(&link).reduced_euler() == expected
    });
    if !report.require("links have ball/sphere Euler characteristics", links_ok) {
        return report.finish();
    }

    let d = top + 1;
    let f = f_vector(complex);
    let chi = f.reduced_euler();
    let h = h_simplicial(&f);
    let h_bd = h_simplicial(&f_vector(&boundary).padded(d - 2));
    let g_bd = |i: i64| h_bd.get(i) - h_bd.get(i - 1);
    for i in 0..=d {
        report.record(
            format!("ns[{i}]"),
            h.get(d - i) - h.get(i),
            Relation::Eq,
            binomial(d, i) * sign(d - i - 1) * chi - g_bd(i),
        );
    }
    if closed {
        report.note("boundary is empty; read as {∅} in dimension d-2");
        let excess = chi - sphere_euler(d - 1);
        for i in 0..=d {
            report.record(
                format!("klee[{i}]"),
                h.get(d - i) - h.get(i),
                Relation::Eq,
                sign(i) * binomial(d, i) * excess,
            );
        }
    }
    report.finish()
}
