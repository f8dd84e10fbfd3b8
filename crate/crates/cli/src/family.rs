//! Generator families by name, as used on the `gen` command line.
//!
//! Most families take a list of integers. `prism` and `boundary` wrap
//! another family (`prism cube-boundary 2`); `product` takes two, split by
//! a lone `x` (`product fan 5 x pile 2 2 1`).

use cubical::generators::*;
use cubical::{GeneratedComplex, GeneratorError};

pub const FAMILIES: &[&str] = &[
    "cube-boundary",
    "solid-cube",
    "pile",
    "pile-boundary",
    "torus",
    "stacked-cubical",
    "stacked-cubical-boundary",
    "tree-stacked-cubical",
    "tree-stacked-cubical-boundary",
    "fan",
    "prism",
    "boundary",
    "product",
    "simplex",
    "simplex-boundary",
    "cross-polytope-boundary",
    "stacked-ball",
    "tree-stacked-ball",
    "stacked-sphere",
];

fn invalid(msg: impl Into<String>) -> GeneratorError {
    GeneratorError::InvalidParameters(msg.into())
}

fn numbers(family: &str, params: &[String]) -> Result<Vec<usize>, GeneratorError> {
    params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| invalid(format!("{family}: {p:?} is not a nonnegative integer")))
        })
        .collect()
}

fn exactly<const N: usize>(family: &str, xs: &[usize]) -> Result<[usize; N], GeneratorError> {
    xs.try_into()
        .map_err(|_| invalid(format!("{family} takes {N} parameter(s), got {}", xs.len())))
}

/// Builds the complex named by `family` with `params`.
pub fn generate(family: &str, params: &[String]) -> Result<GeneratedComplex, GeneratorError> {
    match family {
        "prism" | "boundary" => {
            let (inner, rest) = params
                .split_first()
                .ok_or_else(|| invalid(format!("{family} needs a base family")))?;
            let base = generate(inner, rest)?;
            return if family == "prism" {
                prism(&base)
            } else {
                boundary_of(&base)
            };
        }
        "product" => {
            let cut = params
                .iter()
                .position(|p| p == "x")
                .ok_or_else(|| invalid("product needs two families separated by x"))?;
            let (left, right) = (&params[..cut], &params[cut + 1..]);
            let (Some((a, pa)), Some((b, pb))) = (left.split_first(), right.split_first()) else {
                return Err(invalid("product needs two families separated by x"));
            };
            return product(&generate(a, pa)?, &generate(b, pb)?);
        }
        _ => {}
    }
    let xs = numbers(family, params)?;
    match family {
        "cube-boundary" => cube_boundary(exactly::<1>(family, &xs)?[0]),
        "solid-cube" => solid_cube(exactly::<1>(family, &xs)?[0]),
        "pile" => pile_of_cubes(&xs),
        "pile-boundary" => pile_boundary(&xs),
        "torus" => cubical_torus(&xs),
        "stacked-cubical" | "stacked-cubical-boundary" => {
            let [cells, dim] = exactly::<2>(family, &xs)?;
            let (ball, sphere) = stacked_cubical(cells, dim)?;
            Ok(if family == "stacked-cubical" {
                ball
            } else {
                sphere
            })
        }
        "tree-stacked-cubical" | "tree-stacked-cubical-boundary" => {
            let (dim, parents) = xs
                .split_first()
                .ok_or_else(|| invalid(format!("{family} needs a dimension")))?;
            let (ball, sphere) = tree_stacked_cubical(*dim, parents)?;
            Ok(if family == "tree-stacked-cubical" {
                ball
            } else {
                sphere
            })
        }
        "fan" => polygon_fan(exactly::<1>(family, &xs)?[0]),
        "simplex" => simplex(exactly::<1>(family, &xs)?[0]),
        "simplex-boundary" => simplex_boundary(exactly::<1>(family, &xs)?[0]),
        "cross-polytope-boundary" => cross_polytope_boundary(exactly::<1>(family, &xs)?[0]),
        "stacked-ball" => {
            let [d, n] = exactly::<2>(family, &xs)?;
            stacked_simplicial_ball(d, n)
        }
        "tree-stacked-ball" => {
            let (d, parents) = xs
                .split_first()
                .ok_or_else(|| invalid(format!("{family} needs a dimension")))?;
            tree_stacked_simplicial_ball(*d, parents)
        }
        "stacked-sphere" => {
            let [d, n] = exactly::<2>(family, &xs)?;
            stacked_sphere(d, n)
        }
        other => Err(invalid(format!(
            "unknown family {other:?}; known families: {}",
            FAMILIES.join(", ")
        ))),
    }
}
