use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Trusted topology metadata. Sphere- or ball-ness is never decided from the
/// combinatorics; it is asserted by a generator or by the input file, and
/// verifiers re-check only its cheap consequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Topology {
    Sphere,
    Ball,
    Torus,
    ClosedManifold,
    ManifoldWithBoundary,
    #[default]
    None,
}

impl Topology {
    pub fn is_closed_manifold(self) -> bool {
        matches!(
            self,
            Topology::Sphere | Topology::Torus | Topology::ClosedManifold
        )
    }

    pub fn has_boundary(self) -> bool {
        matches!(self, Topology::Ball | Topology::ManifoldWithBoundary)
    }

    pub fn is_manifold(self) -> bool {
        self.is_closed_manifold() || self.has_boundary()
    }

    /// Topology of the product with a closed interval.
    pub fn times_interval(self) -> Topology {
        match self {
            Topology::Ball => Topology::Ball,
            Topology::None => Topology::None,
            _ => Topology::ManifoldWithBoundary,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Topology::Sphere => "sphere",
            Topology::Ball => "ball",
            Topology::Torus => "torus",
            Topology::ClosedManifold => "closed-manifold",
            Topology::ManifoldWithBoundary => "manifold-with-boundary",
            Topology::None => "none",
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Topology {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "sphere" => Topology::Sphere,
            "ball" => Topology::Ball,
            "torus" => Topology::Torus,
            "closed-manifold" => Topology::ClosedManifold,
            "manifold-with-boundary" => Topology::ManifoldWithBoundary,
            "none" => Topology::None,
            other => return Err(format!("unknown topology tag {other:?}")),
        })
    }
}

/// What the caller asserts about a complex beyond its combinatorics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Claim {
    pub topology: Topology,
    /// The complex is the boundary complex of a polytope.
    #[serde(default)]
    pub polytopal: bool,
}

impl Claim {
    pub fn new(topology: Topology) -> Self {
        Self {
            topology,
            polytopal: false,
        }
    }

    pub fn polytope_boundary() -> Self {
        Self {
            topology: Topology::Sphere,
            polytopal: true,
        }
    }
}
