//! Named families of complexes with trusted topology metadata.
//!
//! Grid vertices are labelled by flattening their coordinates
//! lexicographically (first axis most significant), so every generator is
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};

use crate::classify::is_pseudomanifold;
use crate::complex::{Complex, CubicalCell, CubicalComplex, SimplicialComplex, VertexId};
use crate::enumerative::reduced_euler;
use crate::error::GeneratorError;
use crate::topology::{Claim, Topology};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyComplex {
    Cubical(CubicalComplex),
    Simplicial(SimplicialComplex),
}

impl AnyComplex {
    pub fn dim(&self) -> i64 {
        match self {
            AnyComplex::Cubical(k) => k.dim(),
            AnyComplex::Simplicial(s) => s.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AnyComplex::Cubical(_) => "cubical",
            AnyComplex::Simplicial(_) => "simplicial",
        }
    }
}

/// A complex together with what its generator (or input file) asserts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedComplex {
    pub complex: AnyComplex,
    pub claim: Claim,
    /// Family name and parameters, e.g. `pile 2 1`.
    pub provenance: String,
}

impl GeneratedComplex {
    /// Wraps a complex after checking the claim against its cheap consequences.
    pub fn new(
        complex: AnyComplex,
        claim: Claim,
        provenance: impl Into<String>,
    ) -> Result<Self, GeneratorError> {
        let g = Self {
            complex,
            claim,
            provenance: provenance.into(),
        };
        g.check_claim()?;
        Ok(g)
    }

    pub fn topology(&self) -> Topology {
        self.claim.topology
    }

    pub fn as_cubical(&self) -> Option<&CubicalComplex> {
        match &self.complex {
            AnyComplex::Cubical(k) => Some(k),
            AnyComplex::Simplicial(_) => None,
        }
    }

    pub fn as_simplicial(&self) -> Option<&SimplicialComplex> {
        match &self.complex {
            AnyComplex::Simplicial(s) => Some(s),
            AnyComplex::Cubical(_) => None,
        }
    }

    /// Closed tags need a pseudomanifold; bounded tags need free ridges (and
    /// `χ̃ = 0` for a ball).
    pub fn check_claim(&self) -> Result<(), GeneratorError> {
        match &self.complex {
            AnyComplex::Cubical(k) => check_claim(k, self.claim.topology),
            AnyComplex::Simplicial(s) => check_claim(s, self.claim.topology),
        }
    }
}

fn check_claim<C: Complex>(complex: &C, topology: Topology) -> Result<(), GeneratorError> {
    let fail = |reason: &str| {
        Err(GeneratorError::InconsistentTopology {
            tag: topology.to_string(),
            reason: reason.to_owned(),
        })
    };
    if topology == Topology::None {
        return Ok(());
    }
    if complex.dim() < 0 || !complex.is_pure() {
        return fail("a manifold must be a nonempty pure complex");
    }
    if topology.is_closed_manifold() {
        if !is_pseudomanifold(complex)? {
            return fail("some ridge does not lie in exactly two facets");
        }
        if topology == Topology::Sphere
            && reduced_euler(complex) != crate::macaulay::sign(complex.dim())
        {
            return fail("reduced Euler characteristic differs from that of a sphere");
        }
        return Ok(());
    }
    let degrees = complex.ridge_degrees()?;
    if degrees.values().any(|&n| n > 2) {
        return fail("some ridge lies in more than two facets");
    }
    // a point is a 0-ball whose boundary is {∅}
    if complex.dim() >= 1 && !degrees.values().any(|&n| n == 1) {
        return fail("boundary is empty");
    }
    if topology == Topology::Ball && reduced_euler(complex) != 0 {
        return fail("reduced Euler characteristic of a ball must be 0");
    }
    Ok(())
}

fn invalid(msg: impl Into<String>) -> GeneratorError {
    GeneratorError::InvalidParameters(msg.into())
}

fn cubical(
    cells: Vec<CubicalCell>,
    claim: Claim,
    provenance: String,
) -> Result<GeneratedComplex, GeneratorError> {
    let k = CubicalComplex::build(cells)?;
    GeneratedComplex::new(AnyComplex::Cubical(k), claim, provenance)
}

fn simplicial(
    facets: Vec<Vec<u64>>,
    claim: Claim,
    provenance: String,
) -> Result<GeneratedComplex, GeneratorError> {
    let s = SimplicialComplex::from_ids(facets)?;
    GeneratedComplex::new(AnyComplex::Simplicial(s), claim, provenance)
}

fn params(xs: &[usize]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Flattened label of a point on a grid with `sizes[t]` points along axis `t`.
fn grid_id(point: &[usize], sizes: &[usize]) -> u64 {
    point
        .iter()
        .zip(sizes)
        .fold(0u64, |acc, (&x, &n)| acc * n as u64 + x as u64)
}

/// All points of a box `0..sizes[0] × … `, in lexicographic order.
fn grid_points(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// The unit cube with lower corner `base`; coordinates are wrapped modulo
/// `wrap` when given.
fn unit_cube(base: &[usize], sizes: &[usize], wrap: bool) -> Result<CubicalCell, GeneratorError> {
    let n = base.len();
    let corners = (0..1usize << n)
        .map(|b| {
            let p: Vec<usize> = (0..n)
                .map(|t| {
                    let x = base[t] + ((b >> t) & 1);
                    if wrap {
                        x % sizes[t]
                    } else {
                        x
                    }
                })
                .collect();
            VertexId(grid_id(&p, sizes))
        })
        .collect();
    Ok(CubicalCell::new(corners)?)
}

/// The `a_1 × … × a_n` grid of unit `n`-cubes, a cubical `n`-ball.
pub fn pile_of_cubes(sides: &[usize]) -> Result<GeneratedComplex, GeneratorError> {
    if sides.is_empty() || sides.contains(&0) {
        return Err(invalid(
            "pile sides must be a nonempty list of positive integers",
        ));
    }
    let sizes: Vec<usize> = sides.iter().map(|a| a + 1).collect();
    let cells = grid_points(sides)
        .iter()
        .map(|base| unit_cube(base, &sizes, false))
        .collect::<Result<_, _>>()?;
    cubical(
        cells,
        Claim::new(Topology::Ball),
        format!("pile {}", params(sides)),
    )
}

/// Boundary of a pile of cubes, a cubical `(n−1)`-sphere. It is a polytope
/// boundary when the cubes are stacked along at most one axis.
pub fn pile_boundary(sides: &[usize]) -> Result<GeneratedComplex, GeneratorError> {
    if sides.len() < 2 {
        return Err(invalid("a pile boundary needs at least two axes"));
    }
    let pile = pile_of_cubes(sides)?;
    let boundary = pile.as_cubical().expect("cubical").boundary()?;
    let claim = Claim {
        topology: Topology::Sphere,
        polytopal: sides.iter().filter(|&&a| a > 1).count() <= 1,
    };
    GeneratedComplex::new(
        AnyComplex::Cubical(boundary),
        claim,
        format!("pile-boundary {}", params(sides)),
    )
}

/// The solid `n`-cube; `n = 0` is a point.
pub fn solid_cube(n: usize) -> Result<GeneratedComplex, GeneratorError> {
    if n == 0 {
        let point = CubicalCell::from_ids([0])?;
        return cubical(
            vec![point],
            Claim::new(Topology::Ball),
            "solid-cube 0".into(),
        );
    }
    let mut g = pile_of_cubes(&vec![1; n])?;
    g.provenance = format!("solid-cube {n}");
    Ok(g)
}

/// Boundary of the `n`-cube, a cubical `(n−1)`-sphere.
pub fn cube_boundary(n: usize) -> Result<GeneratedComplex, GeneratorError> {
    if n < 1 {
        return Err(invalid("cube boundary needs n >= 1"));
    }
    let cube = solid_cube(n)?;
    let boundary = cube.as_cubical().expect("cubical").boundary()?;
    GeneratedComplex::new(
        AnyComplex::Cubical(boundary),
        Claim::polytope_boundary(),
        format!("cube-boundary {n}"),
    )
}

/// The `n_1 × … × n_d` grid on the `d`-torus. Accepted exactly when the
/// result satisfies the cubical complex axioms.
pub fn cubical_torus(sides: &[usize]) -> Result<GeneratedComplex, GeneratorError> {
    if sides.is_empty() || sides.contains(&0) {
        return Err(invalid(
            "torus sides must be a nonempty list of positive integers",
        ));
    }
    let cells = grid_points(sides)
        .iter()
        .map(|base| unit_cube(base, sides, true))
        .collect::<Result<_, _>>()?;
    let topology = if sides.len() == 1 {
        Topology::Sphere
    } else {
        Topology::Torus
    };
    cubical(
        cells,
        Claim::new(topology),
        format!("torus {}", params(sides)),
    )
}

/// `cells` cubes of dimension `dim` stacked in a row: the ball and its
/// boundary sphere.
pub fn stacked_cubical(
    cells: usize,
    dim: usize,
) -> Result<(GeneratedComplex, GeneratedComplex), GeneratorError> {
    if cells == 0 || dim < 2 {
        return Err(invalid(
            "stacking needs at least one cell of dimension >= 2",
        ));
    }
    let mut sides = vec![1; dim];
    sides[0] = cells;
    let mut ball = pile_of_cubes(&sides)?;
    ball.provenance = format!("stacked-cubical {cells} {dim}");
    let mut sphere = pile_boundary(&sides)?;
    sphere.provenance = format!("stacked-cubical-boundary {cells} {dim}");
    Ok((ball, sphere))
}

/// Cubes of dimension `dim` glued along a tree: cube `i + 1` is attached to
/// the first free facet of cube `parents[i]`, with fresh vertices elsewhere.
/// Returns the ball and its boundary sphere.
pub fn tree_stacked_cubical(
    dim: usize,
    parents: &[usize],
) -> Result<(GeneratedComplex, GeneratedComplex), GeneratorError> {
    if dim < 2 {
        return Err(invalid("stacking needs cells of dimension >= 2"));
    }
    let corners = 1usize << dim;
    let mut cubes: Vec<Vec<u64>> = vec![(0..corners as u64).collect()];
    // facets are numbered 2t + e: coordinate t fixed to e
    let mut used: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    let mut next = corners as u64;
    for (i, &parent) in parents.iter().enumerate() {
        if parent > i {
            return Err(invalid(format!(
                "parent {parent} of cube {} does not exist yet",
                i + 1
            )));
        }
        let facet = (0..2 * dim)
            .find(|f| !used[parent].contains(f))
            .ok_or_else(|| invalid(format!("cube {parent} has no free facet")))?;
        used[parent].insert(facet);
        let (t, e) = (facet / 2, facet % 2);
        // child coordinate t: 1 - e on the shared facet, e away from it
        let mut child = vec![0u64; corners];
        for (b, slot) in child.iter_mut().enumerate() {
            if (b >> t) & 1 == 1 - e {
                *slot = cubes[parent][b ^ (1 << t)];
            } else {
                *slot = next;
                next += 1;
            }
        }
        cubes.push(child);
        used.push(BTreeSet::from([2 * t + (1 - e)]));
    }
    let cells = cubes
        .into_iter()
        .map(CubicalCell::from_ids)
        .collect::<Result<_, _>>()?;
    let tag = format!("{dim} {}", params(parents));
    let ball = cubical(
        cells,
        Claim::new(Topology::Ball),
        format!("tree-stacked-cubical {tag}"),
    )?;
    let boundary = ball.as_cubical().expect("cubical").boundary()?;
    let sphere = GeneratedComplex::new(
        AnyComplex::Cubical(boundary),
        Claim {
            topology: Topology::Sphere,
            polytopal: parents.is_empty(),
        },
        format!("tree-stacked-cubical-boundary {tag}"),
    )?;
    Ok((ball, sphere))
}

/// Topology of a product of two tagged complexes.
fn product_topology(a: &GeneratedComplex, b: &GeneratedComplex) -> Topology {
    use Topology::*;
    let (s, t) = (a.topology(), b.topology());
    if a.complex.dim() == 0 && s == Ball {
        return t;
    }
    if b.complex.dim() == 0 && t == Ball {
        return s;
    }
    match (s, t) {
        (None, _) | (_, None) => None,
        (Ball, Ball) => Ball,
        _ if s.is_closed_manifold() && t.is_closed_manifold() => ClosedManifold,
        _ => ManifoldWithBoundary,
    }
}

/// `K × L`. With `r(v)` the rank of `v` among the vertices of its factor,
/// the pair `(v, w)` gets label `r(v)·|V(L)| + r(w)`, and the product of a
/// `k`-cell with an `l`-cell has corner `b + 2^k b'` at `(c_b, e_{b'})`.
pub fn product(
    a: &GeneratedComplex,
    b: &GeneratedComplex,
) -> Result<GeneratedComplex, GeneratorError> {
    let (Some(k), Some(l)) = (a.as_cubical(), b.as_cubical()) else {
        return Err(invalid("products need two cubical complexes"));
    };
    if k.dim() < 0 || l.dim() < 0 {
        return Err(invalid("product with the empty complex"));
    }
    let rank = |c: &CubicalComplex| -> BTreeMap<VertexId, u64> {
        c.vertices()
            .enumerate()
            .map(|(i, v)| (v, i as u64))
            .collect()
    };
    let (rk, rl) = (rank(k), rank(l));
    let width = rl.len() as u64;
    let mut cells = Vec::new();
    for c in k.cells() {
        for e in l.cells() {
            let corners = e
                .witness()
                .corners()
                .iter()
                .flat_map(|w| c.witness().corners().iter().map(|v| rk[v] * width + rl[w]));
            cells.push(CubicalCell::from_ids(corners)?);
        }
    }
    let claim = Claim::new(product_topology(a, b));
    cubical(
        cells,
        claim,
        format!("product ({}) ({})", a.provenance, b.provenance),
    )
}

/// `K × [0, 1]`: vertex `v` of rank `r` becomes `2r` and `2r + 1`.
pub fn prism(base: &GeneratedComplex) -> Result<GeneratedComplex, GeneratorError> {
    if base.as_cubical().is_none() {
        return Err(invalid("prism needs a cubical complex"));
    }
    let mut g = product(base, &solid_cube(1)?)?;
    g.provenance = format!("prism ({})", base.provenance);
    Ok(g)
}

/// Boundary of a tagged ball or manifold with boundary.
pub fn boundary_of(base: &GeneratedComplex) -> Result<GeneratedComplex, GeneratorError> {
    let k = base
        .as_cubical()
        .ok_or_else(|| invalid("boundary_of needs a cubical complex"))?;
    let topology = match base.topology() {
        Topology::Ball => Topology::Sphere,
        Topology::ManifoldWithBoundary => Topology::ClosedManifold,
        _ => Topology::None,
    };
    GeneratedComplex::new(
        AnyComplex::Cubical(k.boundary()?),
        Claim::new(topology),
        format!("boundary ({})", base.provenance),
    )
}

/// `n` squares around one interior vertex: a cubical 2-ball whose centre
/// has an `n`-gon as its link.
pub fn polygon_fan(n: usize) -> Result<GeneratedComplex, GeneratorError> {
    if n < 3 {
        return Err(invalid("a fan needs at least three squares"));
    }
    // centre 0, spokes 1..=n, rim n+1..=2n
    let n64 = n as u64;
    let cells = (0..n64)
        .map(|i| {
            let spoke = |j: u64| 1 + j % n64;
            CubicalCell::from_ids([0, spoke(i), spoke(i + 1), n64 + 1 + i])
        })
        .collect::<Result<_, _>>()?;
    cubical(cells, Claim::new(Topology::Ball), format!("fan {n}"))
}

/// The full `d`-simplex on vertices `0..=d`.
pub fn simplex(d: usize) -> Result<GeneratedComplex, GeneratorError> {
    simplicial(
        vec![(0..=d as u64).collect()],
        Claim::new(Topology::Ball),
        format!("simplex {d}"),
    )
}

/// Boundary of the `d`-simplex, a `(d−1)`-sphere.
pub fn simplex_boundary(d: usize) -> Result<GeneratedComplex, GeneratorError> {
    if d < 1 {
        return Err(invalid("simplex boundary needs d >= 1"));
    }
    let facets = (0..=d as u64)
        .map(|skip| (0..=d as u64).filter(|&v| v != skip).collect())
        .collect();
    simplicial(
        facets,
        Claim::polytope_boundary(),
        format!("simplex-boundary {d}"),
    )
}

/// Boundary of the `d`-dimensional cross-polytope on vertices `2i`, `2i + 1`.
pub fn cross_polytope_boundary(d: usize) -> Result<GeneratedComplex, GeneratorError> {
    if d < 1 {
        return Err(invalid("cross-polytope boundary needs d >= 1"));
    }
    let facets = (0..1u64 << d)
        .map(|signs| (0..d as u64).map(|i| 2 * i + ((signs >> i) & 1)).collect())
        .collect();
    simplicial(
        facets,
        Claim::polytope_boundary(),
        format!("cross-polytope-boundary {d}"),
    )
}

/// `n` `d`-simplices glued in a row: facet `k` is `{k, …, k+d}`.
pub fn stacked_simplicial_ball(d: usize, n: usize) -> Result<GeneratedComplex, GeneratorError> {
    if n == 0 {
        return Err(invalid("a stacked ball needs at least one simplex"));
    }
    let facets = (0..n as u64)
        .map(|k| (k..=k + d as u64).collect())
        .collect();
    simplicial(
        facets,
        Claim::new(Topology::Ball),
        format!("stacked-ball {d} {n}"),
    )
}

/// `d`-simplices glued along a tree: simplex `i + 1` shares the first free
/// facet of simplex `parents[i]` and adds one new vertex.
pub fn tree_stacked_simplicial_ball(
    d: usize,
    parents: &[usize],
) -> Result<GeneratedComplex, GeneratorError> {
    if d < 1 {
        return Err(invalid("tree stacking needs d >= 1"));
    }
    let mut simplices: Vec<Vec<u64>> = vec![(0..=d as u64).collect()];
    // facet j of a simplex omits its j-th vertex
    let mut used: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for (i, &parent) in parents.iter().enumerate() {
        if parent > i {
            return Err(invalid(format!(
                "parent {parent} of simplex {} does not exist yet",
                i + 1
            )));
        }
        let j = (0..=d)
            .find(|j| !used[parent].contains(j))
            .ok_or_else(|| invalid(format!("simplex {parent} has no free facet")))?;
        used[parent].insert(j);
        let mut child = simplices[parent].clone();
        child.remove(j);
        // fresh apex; labels 0..=d belong to the root
        child.push((d + 1 + i) as u64);
        simplices.push(child);
        used.push(BTreeSet::from([d]));
    }
    simplicial(
        simplices,
        Claim::new(Topology::Ball),
        format!("tree-stacked-ball {d} {}", params(parents)),
    )
}

/// Boundary of the linear stacked `d`-ball with `n` simplices: a stacked
/// `(d−1)`-sphere on `d + n` vertices.
pub fn stacked_sphere(d: usize, n: usize) -> Result<GeneratedComplex, GeneratorError> {
    if d < 1 {
        return Err(invalid("stacked sphere needs d >= 1"));
    }
    let ball = stacked_simplicial_ball(d, n)?;
    let boundary = ball.as_simplicial().expect("simplicial").boundary()?;
    GeneratedComplex::new(
        AnyComplex::Simplicial(boundary),
        Claim::polytope_boundary(),
        format!("stacked-sphere {d} {n}"),
    )
}

/// A fixed list of complexes covering every family in dimensions 0 to 5.
pub fn standard_catalog() -> Vec<GeneratedComplex> {
    let mut out = Vec::new();
    let mut push = |g: Result<GeneratedComplex, GeneratorError>| {
        out.push(g.expect("catalog entries are valid"));
    };
    for n in 1..=6 {
        push(cube_boundary(n));
    }
    for n in 0..=4 {
        push(solid_cube(n));
    }
    for sides in [
        &[2][..],
        &[3],
        &[2, 1],
        &[2, 2],
        &[3, 2],
        &[2, 2, 1],
        &[3, 1, 1],
        &[2, 2, 2],
        &[2, 1, 1, 1],
    ] {
        push(pile_of_cubes(sides));
    }
    for sides in [
        &[2, 1][..],
        &[3, 2],
        &[2, 2, 1],
        &[2, 2, 2],
        &[3, 1, 1, 1],
        &[2, 2, 1, 1],
        &[2, 1, 1, 1, 1],
        &[2, 2, 1, 1, 1],
    ] {
        push(pile_boundary(sides));
    }
    for sides in [&[4, 4][..], &[5, 4], &[3, 3], &[4, 4, 4]] {
        push(cubical_torus(sides));
    }
    for (n, dim) in [(2, 3), (3, 4), (2, 5)] {
        let (ball, sphere) = stacked_cubical(n, dim).expect("valid stacking");
        push(Ok(ball));
        push(Ok(sphere));
    }
    let (ball, sphere) = tree_stacked_cubical(3, &[0, 0, 0, 1]).expect("valid stacking");
    push(Ok(ball));
    push(Ok(sphere));
    let fan = polygon_fan(5).expect("valid fan");
    push(Ok(fan.clone()));
    let pile = pile_of_cubes(&[2, 2, 1]).expect("valid pile");
    let slab = product(&fan, &pile).expect("valid product");
    push(boundary_of(&slab));
    for base in [
        cube_boundary(2),
        solid_cube(2),
        pile_of_cubes(&[2, 1]),
        cubical_torus(&[4, 4]),
    ] {
        push(prism(&base.expect("valid base")));
    }
    out
}

/// Simplicial counterpart of [`standard_catalog`].
pub fn simplicial_catalog() -> Vec<GeneratedComplex> {
    let mut out = Vec::new();
    let mut push = |g: Result<GeneratedComplex, GeneratorError>| {
        out.push(g.expect("catalog entries are valid"));
    };
    for d in 0..=5 {
        push(simplex(d));
    }
    for d in 1..=5 {
        push(simplex_boundary(d));
        push(cross_polytope_boundary(d));
    }
    for (d, n) in [(2, 3), (3, 2), (3, 5), (4, 4)] {
        push(stacked_simplicial_ball(d, n));
        push(stacked_sphere(d, n));
    }
    push(tree_stacked_simplicial_ball(3, &[0, 0, 0, 1, 1]));
    out
}
