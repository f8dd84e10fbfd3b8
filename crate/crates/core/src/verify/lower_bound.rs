use crate::complex::CubicalComplex;
use crate::macaulay::{binomial, check_g_theorem_conditions, is_m_vector, pow2};
use crate::report::{Relation, VerificationReport, Witness};
use crate::topology::Claim;
use crate::verify::{link_data, require_eulerian, require_sphere, LinkData, Profile};

fn require_pseudomanifold(report: &mut VerificationReport, complex: &CubicalComplex) -> bool {
    if !report.require("dimension at least 2", complex.dim() >= 2)
        || !report.require("pure", complex.is_pure())
    {
        return false;
    }
    let degrees = complex.ridge_degrees().expect("pure");
    report.require(
        "pseudomanifold (every ridge in two facets)",
        degrees.values().all(|&n| n == 2),
    )
}

/// `d = 2k` with `k ≥ 1`; returns `k`.
fn require_even(report: &mut VerificationReport, d: i64) -> Option<i64> {
    (report.require("dimension even and positive", d >= 2 && d % 2 == 0)).then_some(d / 2)
}

/// `g_0..g_m` of a vertex link.
fn link_g(link: &LinkData, m: i64) -> Vec<i128> {
    (0..=m).map(|j| link.h.get(j) - link.h.get(j - 1)).collect()
}

/// Smallest value of `key` over the links, with the vertex attaining it.
fn min_over<F: Fn(&LinkData) -> i128>(links: &[LinkData], key: F) -> Option<(i128, Witness)> {
    links
        .iter()
        .map(|l| (key(l), Witness::Vertex(l.vertex)))
        .min_by_key(|(v, _)| *v)
}

fn max_over<F: Fn(&LinkData) -> i128>(links: &[LinkData], key: F) -> Option<(i128, Witness)> {
    links
        .iter()
        .map(|l| (key(l), Witness::Vertex(l.vertex)))
        .max_by_key(|(v, _)| *v)
}

/// `0 ≤ g_k ≤ … ≤ g_2 ≤ bound` on `(g_0, g_1, …, g_k)`.
fn cascade_holds(g: &[i128], bound: i128) -> bool {
    let k = g.len() - 1;
    if k < 2 {
        return true;
    }
    g[2] <= bound && g[k] >= 0 && (2..k).all(|j| g[j + 1] <= g[j])
}

/// `Σ 2^i f_i ≤ f_0²`, the sharper `Σ_{i≥1} 2^{i−1} f_i ≤ C(f_0, 2)`, and
/// that each `i`-face is the least upper bound of its `2^{i−1}` antipodal
/// vertex pairs.
pub fn verify_lemma_31(complex: &CubicalComplex) -> VerificationReport {
    let mut report = VerificationReport::new(
        "lemma31",
        "sum_i 2^i f_i <= f_0^2; sum_{i>=1} 2^{i-1} f_i <= C(f_0, 2)",
    );
    let Some(p) = (report.require("dimension at least 1", complex.dim() >= 1))
        .then(|| Profile::of(complex))
        .flatten()
    else {
        return report.finish();
    };
    let d = p.d;
    let f0 = p.f.get(0);
    let weighted: i128 = (0..=d).map(|i| pow2(i) * p.f.get(i)).sum();
    report.record("sum 2^i f_i <= f_0^2", weighted, Relation::Le, f0 * f0);
    let pairs: i128 = (1..=d).map(|i| pow2(i - 1) * p.f.get(i)).sum();
    report.record(
        "sum 2^(i-1) f_i <= C(f_0,2)",
        pairs,
        Relation::Le,
        binomial(f0 as i64, 2),
    );

    let mut attained = 0i128;
    let mut first_bad = None;
    for face in complex.faces().iter().filter(|f| f.dim() >= 1) {
        for (u, v) in face.antipodal_pairs().expect("dim >= 1") {
            let lub = complex
                .least_upper_bound(u, v)
                .expect("vertices of the complex");
            if lub.is_some_and(|g| g.vertices() == face.vertices()) {
                attained += 1;
            } else if first_bad.is_none() {
                first_bad = Some(Witness::Face(face.vertices().to_vec()));
            }
        }
    }
    report.record_with(
        "antipodal pairs with lub F",
        attained,
        Relation::Eq,
        pairs,
        first_bad,
    );
    report.finish()
}

/// `f_0 ≥ 2^{d+1}` for pseudomanifolds, with the double counting, the
/// Kruskal–Katona chain and the divisibility step behind it.
pub fn verify_theorem_32(complex: &CubicalComplex) -> VerificationReport {
    let mut report = VerificationReport::new(
        "thm32",
        "f_0 >= 2^(d+1) for cubical pseudomanifolds, d >= 2",
    );
    if !require_pseudomanifold(&mut report, complex) {
        return report.finish();
    }
    let p = Profile::of(complex).expect("d >= 2");
    let d = p.d;
    let f0 = p.f.get(0);
    let links = link_data(complex);

    report.record("f_0 >= 2^(d+1)", f0, Relation::Ge, pow2(d + 1));
    report.record("h^c_1 >= h^c_0", p.long.get(1), Relation::Ge, p.long.get(0));
    for i in 1..=d {
        let incidences: i128 = links.iter().map(|l| l.f.get(i - 1)).sum();
        report.record(
            format!("double-count[{i}]"),
            pow2(i) * p.f.get(i),
            Relation::Eq,
            incidences,
        );
    }

    let weighted: i128 = (0..=d).map(|i| pow2(i) * p.f.get(i)).sum();
    let floor = f0 * (pow2(d + 1) - 1);
    report.record(
        "sum 2^i f_i >= f_0 (2^(d+1)-1)",
        weighted,
        Relation::Ge,
        floor,
    );
    let (fewest, at) = min_over(&links, |l| l.f.get(d - 1)).expect("nonempty complex");
    report.record_with(
        "min facets at a vertex >= d+1",
        fewest,
        Relation::Ge,
        (d + 1) as i128,
        Some(at),
    );
    let all_minimal = links.iter().all(|l| l.f.get(d - 1) == (d + 1) as i128);
    report.record(
        "chain tight <=> every vertex in d+1 facets",
        (weighted == floor) as i128,
        Relation::Eq,
        all_minimal as i128,
    );
    if all_minimal {
        report.record(
            "(d+1) f_0 mod 2^d",
            ((d + 1) as i128 * f0) % pow2(d),
            Relation::Eq,
            0,
        );
    }

    let slack = f0 - pow2(d + 1);
    if slack == 0 {
        report.note("equality: f_0 = 2^(d+1)");
    } else {
        report.note(format!("slack f_0 - 2^(d+1) = {slack}"));
    }
    report.finish()
}

/// `f_i ≥ C(d+1, i) 2^{d+1−i}` and the per-vertex bound
/// `f_{i−1}(lk v) ≥ C(d+1, i)` it is summed from.
pub fn verify_corollary_33(complex: &CubicalComplex) -> VerificationReport {
    let mut report = VerificationReport::new(
        "cor33",
        "f_i >= C(d+1,i) 2^(d+1-i), 0 <= i <= d, for cubical pseudomanifolds",
    );
    if !require_pseudomanifold(&mut report, complex) {
        return report.finish();
    }
    let p = Profile::of(complex).expect("d >= 2");
    let d = p.d;
    let links = link_data(complex);
    let mut tight = true;
    for i in 0..=d {
        let bound = binomial(d + 1, i) * pow2(d + 1 - i);
        tight &= p.f.get(i) == bound;
        report.record(format!("f[{i}]"), p.f.get(i), Relation::Ge, bound);
    }
    for i in 0..=d {
        let (least, at) = min_over(&links, |l| l.f.get(i - 1)).expect("nonempty complex");
        report.record_with(
            format!("min f[{}](lk v)", i - 1),
            least,
            Relation::Ge,
            binomial(d + 1, i),
            Some(at),
        );
    }
    if tight {
        report.note("equality at every index");
    }
    report.finish()
}

/// Even-dimensional Eulerian complexes whose vertex links have
/// `h_1 = … = h_{d−1}` have `h^(c)_1 = … = h^(c)_d`.
pub fn verify_corollary_36(complex: &CubicalComplex) -> VerificationReport {
    let mut report = VerificationReport::new(
        "cor36",
        "links with h_1 = ... = h_(d-1) imply h^c_1 = ... = h^c_d, d even, K Eulerian",
    );
    if !report.require("dimension at least 0", complex.dim() >= 0)
        || !require_eulerian(&mut report, complex)
        || require_even(&mut report, complex.dim()).is_none()
    {
        return report.finish();
    }
    let d = complex.dim();
    let links = link_data(complex);
    let flat = links
        .iter()
        .all(|l| (1..d).all(|j| l.h.get(j) == l.h.get(1)));
    if !report.require("every vertex link has h_1 = ... = h_(d-1)", flat) {
        return report.finish();
    }
    let p = Profile::of(complex).expect("d >= 2");
    for i in 2..d {
        report.record(
            format!("hsc-plateau[{i}]"),
            p.short.get(i),
            Relation::Eq,
            p.short.get(1),
        );
    }
    for i in 2..=d {
        report.record(
            format!("hc-plateau[{i}]"),
            p.long.get(i),
            Relation::Eq,
            p.long.get(1),
        );
    }
    report.finish()
}

/// `g^(c)_2 ≥ 0` for 4-dimensional cubical spheres, via the vertex-link
/// lower bound.
pub fn verify_theorem_37(complex: &CubicalComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new("thm37", "g^c_2 >= 0 for cubical 4-spheres");
    if !report.require("dimension 4", complex.dim() == 4)
        || !require_sphere(&mut report, complex, claim)
    {
        return report.finish();
    }
    let p = Profile::of(complex).expect("d = 4");
    let links = link_data(complex);
    let g2c = p.long.get(2) - p.long.get(1);
    let sc_diff = p.short.get(2) - p.short.get(1);
    let link_sum: i128 = links.iter().map(|l| l.h.get(2) - l.h.get(1)).sum();
    report.record("g^c_2 >= 0", g2c, Relation::Ge, 0);
    report.record("h^c_3 = h^c_2", p.long.get(3), Relation::Eq, p.long.get(2));
    report.record(
        "h^c_2 - h^c_1 = h^sc_2 - h^sc_1",
        g2c,
        Relation::Eq,
        sc_diff,
    );
    report.record(
        "sum_v g_2(lk v) = h^sc_2 - h^sc_1",
        link_sum,
        Relation::Eq,
        sc_diff,
    );
    report.record("sum_v g_2(lk v) >= 0", link_sum, Relation::Ge, 0);
    let (least, at) = min_over(&links, |l| l.h.get(2) - l.h.get(1)).expect("nonempty");
    report.record_with("min g_2(lk v) >= 0", least, Relation::Ge, 0, Some(at));
    report.finish()
}

/// `g^(c)_k ≥ 0` for boundaries of cubical `(2k+1)`-polytopes.
pub fn verify_proposition_38(complex: &CubicalComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new(
        "prop38",
        "g^c_k >= 0 for the boundary of a cubical (2k+1)-polytope",
    );
    if !report.require("claimed polytope boundary", claim.polytopal)
        || !require_sphere(&mut report, complex, claim)
    {
        return report.finish();
    }
    let Some(k) = require_even(&mut report, complex.dim()) else {
        return report.finish();
    };
    let p = Profile::of(complex).expect("d >= 2");
    let links = link_data(complex);
    report.record(
        format!("h^c_{} = h^c_{k}", k + 1),
        p.long.get(k + 1),
        Relation::Eq,
        p.long.get(k),
    );
    report.record(
        format!("h^sc_{k} >= h^sc_{}", k - 1),
        p.short.get(k),
        Relation::Ge,
        p.short.get(k - 1),
    );
    report.record(
        format!("g^c_{k} >= 0"),
        p.long.get(k) - p.long.get(k - 1),
        Relation::Ge,
        0,
    );
    let failing: Vec<&LinkData> = links
        .iter()
        .filter(|l| !check_g_theorem_conditions(&l.h).passed())
        .collect();
    report.record_with(
        "links failing g-theorem conditions",
        failing.len() as i128,
        Relation::Eq,
        0,
        failing.first().map(|l| Witness::Vertex(l.vertex)),
    );
    report.finish()
}

/// `h^(c)_i − h^(c)_{i−1} = Σ_{j=i}^{k} (−1)^{j−i} g^sc_j` for `2k`-spheres.
pub fn verify_lemma_39(complex: &CubicalComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new(
        "lemma39",
        "h^c_i - h^c_(i-1) = sum_(j=i..k) (-1)^(j-i) g^sc_j, 1 <= i <= k, d = 2k",
    );
    if !require_sphere(&mut report, complex, claim) {
        return report.finish();
    }
    let Some(k) = require_even(&mut report, complex.dim()) else {
        return report.finish();
    };
    let p = Profile::of(complex).expect("d >= 2");
    let g_sc = |j: i64| p.short.get(j) - p.short.get(j - 1);
    for i in 1..=k {
        let alternating: i128 = (i..=k)
            .map(|j| if (j - i) % 2 == 0 { g_sc(j) } else { -g_sc(j) })
            .sum();
        report.record(
            format!("lemma39[{i}]"),
            p.long.get(i) - p.long.get(i - 1),
            Relation::Eq,
            alternating,
        );
    }
    report.finish()
}

/// Shared conclusion of the small-link GLBC statements: the monotone chain,
/// its link-sum expansion, and the per-link M-vector and cascade facts.
fn record_glbc(
    report: &mut VerificationReport,
    p: &Profile,
    links: &[LinkData],
    k: i64,
    cascade_bound: i128,
) {
    for i in 1..=k {
        report.record(
            format!("glbc[{i}]"),
            p.long.get(i),
            Relation::Ge,
            p.long.get(i - 1),
        );
    }
    for i in 1..=k {
        let expanded: i128 = links
            .iter()
            .map(|l| {
                let g = link_g(l, k);
                (i..=k)
                    .map(|j| {
                        if (j - i) % 2 == 0 {
                            g[j as usize]
                        } else {
                            -g[j as usize]
                        }
                    })
                    .sum::<i128>()
            })
            .sum();
        report.record(
            format!("link-expansion[{i}]"),
            p.long.get(i) - p.long.get(i - 1),
            Relation::Eq,
            expanded,
        );
    }
    let not_m: Vec<&LinkData> = links
        .iter()
        .filter(|l| !is_m_vector(&link_g(l, k)))
        .collect();
    report.record_with(
        "links whose g-prefix is not an M-vector",
        not_m.len() as i128,
        Relation::Eq,
        0,
        not_m.first().map(|l| Witness::Vertex(l.vertex)),
    );
    let broken: Vec<&LinkData> = links
        .iter()
        .filter(|l| !cascade_holds(&link_g(l, k), cascade_bound))
        .collect();
    report.record_with(
        format!("links breaking 0 <= g_k <= ... <= g_2 <= {cascade_bound}"),
        broken.len() as i128,
        Relation::Eq,
        0,
        broken.first().map(|l| Witness::Vertex(l.vertex)),
    );
}

/// Cubical GLBC `h^(c)_0 ≤ … ≤ h^(c)_k` for `2k`-spheres whose vertex links
/// have `g_2 ≤ 2`.
pub fn verify_theorem_310(complex: &CubicalComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new(
        "thm310",
        "g_2(lk v) <= 2 for all v implies h^c_0 <= h^c_1 <= ... <= h^c_k, d = 2k",
    );
    if !require_sphere(&mut report, complex, claim) {
        return report.finish();
    }
    let Some(k) = require_even(&mut report, complex.dim()) else {
        return report.finish();
    };
    let links = link_data(complex);
    let small = k < 2 || links.iter().all(|l| link_g(l, 2)[2] <= 2);
    if !report.require("every vertex link has g_2 <= 2", small) {
        return report.finish();
    }
    let p = Profile::of(complex).expect("d >= 2");
    record_glbc(&mut report, &p, &links, k, 2);
    if let Some((most, _)) = max_over(&links, |l| link_g(l, k.max(2))[2]) {
        report.note(format!("largest g_2 over vertex links: {most}"));
    }
    if !claim.polytopal {
        report.note(
            "polytopality of the vertex links is not checked; M-vector condition verified directly",
        );
    }
    report.finish()
}

/// Cubical GLBC for `2k`-spheres whose vertex links have `2k+1` or `2k+2`
/// vertices.
pub fn verify_proposition_311(complex: &CubicalComplex, claim: &Claim) -> VerificationReport {
    let mut report = VerificationReport::new(
        "prop311",
        "f_0(lk v) in {2k+1, 2k+2} for all v implies h^c_0 <= ... <= h^c_k, d = 2k",
    );
    if !require_sphere(&mut report, complex, claim) {
        return report.finish();
    }
    let Some(k) = require_even(&mut report, complex.dim()) else {
        return report.finish();
    };
    let links = link_data(complex);
    let few = links
        .iter()
        .all(|l| (2 * k + 1..=2 * k + 2).contains(&(l.f.get(0) as i64)));
    if !report.require("every vertex link has 2k+1 or 2k+2 vertices", few) {
        return report.finish();
    }
    let p = Profile::of(complex).expect("d >= 2");
    let (most, at) = max_over(&links, |l| link_g(l, 1)[1]).expect("nonempty");
    report.record_with("max g_1(lk v) <= 1", most, Relation::Le, 1, Some(at));
    record_glbc(&mut report, &p, &links, k, 1);
    report.finish()
}
