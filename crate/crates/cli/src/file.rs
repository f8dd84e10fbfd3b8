//! The on-disk complex document: JSON with a version field.
//!
//! Cubical cells are corner arrays in bit order (corner `b` has coordinate
//! `t` equal to bit `t` of `b`), so a cell's cube structure survives a round
//! trip. Simplicial cells are facet vertex lists.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use cubical::{
    AnyComplex, Claim, CubicalCell, CubicalComplex, GeneratedComplex, SimplicialComplex, Topology,
};
use serde::de::{self, DeserializeSeed, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::Deserialize;
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Cubical,
    Simplicial,
}

/// Document contents before the complex is built.
#[derive(Debug)]
struct RawFile {
    kind: Kind,
    dim: i64,
    cells: Vec<Vec<u64>>,
    topology: Topology,
    polytopal: bool,
    provenance: String,
}

/// A corner list whose length is a power of two.
struct Corners(Vec<u64>);

impl<'de> Deserialize<'de> for Corners {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let corners = Vec::<u64>::deserialize(d)?;
        if !corners.len().is_power_of_two() {
            return Err(de::Error::invalid_length(
                corners.len(),
                &"a power-of-two number of corners",
            ));
        }
        Ok(Corners(corners))
    }
}

/// Reads `cells`, checking corner counts on the spot when the kind is
/// already known so the error carries the position of the bad cell.
struct CellsSeed(Option<Kind>);

impl<'de> DeserializeSeed<'de> for CellsSeed {
    type Value = Vec<Vec<u64>>;

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<Self::Value, D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for CellsSeed {
    type Value = Vec<Vec<u64>>;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a list of cells")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let mut cells = Vec::new();
        loop {
            let next = if self.0 == Some(Kind::Cubical) {
                seq.next_element::<Corners>()?.map(|c| c.0)
            } else {
                seq.next_element::<Vec<u64>>()?
            };
            match next {
                Some(cell) => cells.push(cell),
                None => return Ok(cells),
            }
        }
    }
}

const FIELDS: &[&str] = &[
    "format_version",
    "kind",
    "dim",
    "cells",
    "topology",
    "polytopal",
    "provenance",
];

struct FileVisitor;

impl<'de> Visitor<'de> for FileVisitor {
    type Value = RawFile;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a complex document")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<RawFile, A::Error> {
        let mut version: Option<String> = None;
        let mut kind = None;
        let mut dim = None;
        let mut cells = None;
        let mut topology: Option<Option<Topology>> = None;
        let mut polytopal = None;
        let mut provenance: Option<Option<String>> = None;

        fn once<T, E: de::Error>(slot: &mut Option<T>, name: &'static str, v: T) -> Result<(), E> {
            if slot.is_some() {
                return Err(E::duplicate_field(name));
            }
            *slot = Some(v);
            Ok(())
        }

        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "format_version" => {
                    let v: String = map.next_value()?;
                    if v != FORMAT_VERSION {
                        return Err(de::Error::custom(format!(
                            "unsupported format_version {v:?}, expected {FORMAT_VERSION:?}"
                        )));
                    }
                    once(&mut version, "format_version", v)?;
                }
                "kind" => once(&mut kind, "kind", map.next_value()?)?,
                "dim" => once(&mut dim, "dim", map.next_value()?)?,
                "cells" => {
                    let v = map.next_value_seed(CellsSeed(kind))?;
                    once(&mut cells, "cells", v)?;
                }
                "topology" => once(&mut topology, "topology", map.next_value()?)?,
                "polytopal" => once(&mut polytopal, "polytopal", map.next_value()?)?,
                "provenance" => once(&mut provenance, "provenance", map.next_value()?)?,
                other => return Err(de::Error::unknown_field(other, FIELDS)),
            }
        }

        version.ok_or_else(|| de::Error::missing_field("format_version"))?;
        let kind = kind.ok_or_else(|| de::Error::missing_field("kind"))?;
        let cells: Vec<Vec<u64>> = cells.ok_or_else(|| de::Error::missing_field("cells"))?;
        if kind == Kind::Cubical {
            // cells listed before the kind were not checked while reading
            if let Some(i) = cells.iter().position(|c| !c.len().is_power_of_two()) {
                return Err(de::Error::custom(format!(
                    "cell {i} has {} corners, expected a power of two",
                    cells[i].len()
                )));
            }
        }
        Ok(RawFile {
            kind,
            dim: dim.ok_or_else(|| de::Error::missing_field("dim"))?,
            cells,
            topology: topology.flatten().unwrap_or_default(),
            polytopal: polytopal.unwrap_or(false),
            provenance: provenance.flatten().unwrap_or_default(),
        })
    }
}

impl<'de> Deserialize<'de> for RawFile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_map(FileVisitor)
    }
}

/// Parses and validates a document held in memory.
pub fn parse_str(text: &str) -> Result<GeneratedComplex, FileError> {
    let raw: RawFile = serde_json::from_str(text).map_err(|e| FileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let invalid = |e: &dyn fmt::Display| FileError::ValidationFailed(e.to_string());
    let complex = match raw.kind {
        Kind::Cubical => {
            let cells = raw
                .cells
                .into_iter()
                .map(CubicalCell::from_ids)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| invalid(&e))?;
            AnyComplex::Cubical(CubicalComplex::build(cells).map_err(|e| invalid(&e))?)
        }
        Kind::Simplicial => {
            AnyComplex::Simplicial(SimplicialComplex::from_ids(raw.cells).map_err(|e| invalid(&e))?)
        }
    };
    if complex.dim() != raw.dim {
        return Err(FileError::ValidationFailed(format!(
            "document declares dim {} but its cells span dimension {}",
            raw.dim,
            complex.dim()
        )));
    }
    let claim = Claim {
        topology: raw.topology,
        polytopal: raw.polytopal,
    };
    GeneratedComplex::new(complex, claim, raw.provenance).map_err(|e| invalid(&e))
}

pub fn parse(path: &Path) -> Result<GeneratedComplex, FileError> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text)
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Deterministic rendering: fixed key order, one cell per line.
pub fn to_document(g: &GeneratedComplex) -> String {
    let cells: Vec<Vec<u64>> = match &g.complex {
        AnyComplex::Cubical(k) => k
            .cells()
            .map(|c| c.witness().corners().iter().map(|v| v.0).collect())
            .collect(),
        AnyComplex::Simplicial(s) => s
            .facets()
            .into_iter()
            .map(|f| f.iter().map(|v| v.0).collect())
            .collect(),
    };
    let mut out = String::from("{\n");
    let _ = writeln!(
        out,
        "  \"format_version\": {},",
        json_string(FORMAT_VERSION)
    );
    let _ = writeln!(out, "  \"kind\": {},", json_string(g.complex.kind()));
    let _ = writeln!(out, "  \"dim\": {},", g.complex.dim());
    if g.claim.topology != Topology::None {
        let _ = writeln!(
            out,
            "  \"topology\": {},",
            json_string(g.claim.topology.as_str())
        );
    }
    if g.claim.polytopal {
        out.push_str("  \"polytopal\": true,\n");
    }
    if !g.provenance.is_empty() {
        let _ = writeln!(out, "  \"provenance\": {},", json_string(&g.provenance));
    }
    out.push_str("  \"cells\": [");
    for (i, cell) in cells.iter().enumerate() {
        let ids: Vec<String> = cell.iter().map(u64::to_string).collect();
        let sep = if i + 1 < cells.len() { "," } else { "" };
        let _ = write!(out, "\n    [{}]{sep}", ids.join(", "));
    }
    out.push_str("\n  ]\n}\n");
    out
}

pub fn serialize(g: &GeneratedComplex, path: &Path) -> Result<(), FileError> {
    fs::write(path, to_document(g)).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}
