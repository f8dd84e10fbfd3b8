//! `compute` and `verify`: tables and reports rendered as text or JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use cubical::enumerative::{
    cubical_h_vectors, f_vector, g_vector, h_simplicial, reduced_euler, vertex_links,
};
use cubical::verify::*;
use cubical::{AnyComplex, GeneratedComplex, SimplicialComplex, Status, VerificationReport};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Invariant {
    F,
    Euler,
    H,
    G,
    Hsc,
    Hc,
    Gc,
    Links,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    AdinDs,
    Lbt,
    FaceBounds,
    Eq3,
    Glbc,
    Thm42,
    NsDs,
    All,
}

/// One labelled row of a `compute` table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub label: String,
    pub values: Vec<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub invariant: String,
    pub kind: String,
    pub dim: i64,
    pub provenance: String,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn render(&self) -> String {
        let mut out = format!(
            "# {} of {} ({}, dim {})\n",
            self.invariant,
            if self.provenance.is_empty() {
                "input"
            } else {
                &self.provenance
            },
            self.kind,
            self.dim
        );
        let width = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
        for r in &self.rows {
            let vals: Vec<String> = r.values.iter().map(i128::to_string).collect();
            let _ = writeln!(out, "{:<width$}  {}", r.label, vals.join(" "));
        }
        out
    }
}

fn indexed(name: &str, start: i64, xs: &[i128]) -> Vec<Row> {
    xs.iter()
        .zip(start..)
        .map(|(&x, i)| Row {
            label: format!("{name}[{i}]"),
            values: vec![x],
        })
        .collect()
}

fn mismatch(invariant: Invariant, g: &GeneratedComplex) -> CliError {
    let name = invariant.to_possible_value().expect("no skipped variants");
    CliError::KindMismatch(format!(
        "{} is not defined for a {} complex",
        name.get_name(),
        g.complex.kind()
    ))
}

fn simplicial_link_rows(s: &SimplicialComplex) -> Vec<Row> {
    let d = s.dim();
    let mut rows = Vec::new();
    for v in s.vertices() {
        let link = s.link(&[v]).expect("vertex of the complex");
        let f = f_vector(&link).padded(d - 1);
        rows.push(Row {
            label: format!("lk {v} f"),
            values: f.counts().to_vec(),
        });
        rows.push(Row {
            label: format!("lk {v} h"),
            values: h_simplicial(&f).entries().to_vec(),
        });
    }
    rows
}

pub fn compute(invariant: Invariant, g: &GeneratedComplex) -> Result<Table, CliError> {
    let rows = match (&g.complex, invariant) {
        (AnyComplex::Cubical(k), Invariant::F) => indexed("f", -1, f_vector(k).counts()),
        (AnyComplex::Simplicial(s), Invariant::F) => indexed("f", -1, f_vector(s).counts()),
        (c, Invariant::Euler) => {
            let chi = match c {
                AnyComplex::Cubical(k) => reduced_euler(k),
                AnyComplex::Simplicial(s) => reduced_euler(s),
            };
            vec![
                Row {
                    label: "reduced".into(),
                    values: vec![chi],
                },
                Row {
                    label: "unreduced".into(),
                    values: vec![chi + 1],
                },
            ]
        }
        (AnyComplex::Simplicial(s), Invariant::H) => {
            indexed("h", 0, h_simplicial(&f_vector(s)).entries())
        }
        (AnyComplex::Simplicial(s), Invariant::G) => {
            let h = h_simplicial(&f_vector(s));
            indexed("g", 0, g_vector(&h, (h.len() - 1) / 2).entries())
        }
        (AnyComplex::Cubical(k), Invariant::Hsc | Invariant::Hc | Invariant::Gc) => {
            let (short, long) =
                cubical_h_vectors(k).map_err(|e| CliError::Inapplicable(e.to_string()))?;
            match invariant {
                Invariant::Hsc => indexed("hsc", 0, short.entries()),
                Invariant::Hc => indexed("hc", 0, long.entries()),
                _ => indexed("gc", 0, g_vector(&long, (long.len() - 1) / 2).entries()),
            }
        }
        (AnyComplex::Cubical(k), Invariant::Links) => {
            let d = k.dim();
            let links = vertex_links(k).map_err(|e| CliError::Inapplicable(e.to_string()))?;
            links
                .into_iter()
                .flat_map(|(v, link)| {
                    let f = f_vector(&link).padded(d - 1);
                    let h = h_simplicial(&f);
                    [
                        Row {
                            label: format!("lk {v} f"),
                            values: f.counts().to_vec(),
                        },
                        Row {
                            label: format!("lk {v} h"),
                            values: h.entries().to_vec(),
                        },
                    ]
                })
                .collect()
        }
        (AnyComplex::Simplicial(s), Invariant::Links) => simplicial_link_rows(s),
        _ => return Err(mismatch(invariant, g)),
    };
    let name = invariant.to_possible_value().expect("no skipped variants");
    Ok(Table {
        invariant: name.get_name().to_owned(),
        kind: g.complex.kind().to_owned(),
        dim: g.complex.dim(),
        provenance: g.provenance.clone(),
        rows,
    })
}

/// Reports of one suite, in a fixed order.
pub fn verify(suite: Suite, g: &GeneratedComplex) -> Result<Vec<VerificationReport>, CliError> {
    let claim = &g.claim;
    match (&g.complex, suite) {
        (AnyComplex::Cubical(k), _) => Ok(match suite {
            Suite::AdinDs => vec![verify_adin_ds(k)],
            Suite::Lbt => vec![verify_lemma_31(k), verify_theorem_32(k)],
            Suite::FaceBounds => vec![verify_corollary_33(k)],
            Suite::Eq3 => vec![verify_eq3(k), verify_corollary_36(k)],
            Suite::Glbc => vec![
                verify_theorem_37(k, claim),
                verify_proposition_38(k, claim),
                verify_lemma_39(k, claim),
                verify_theorem_310(k, claim),
                verify_proposition_311(k, claim),
            ],
            Suite::Thm42 => vec![
                verify_theorem_42(k, claim),
                verify_babson_billera_chan(k, claim),
            ],
            Suite::All => [
                Suite::AdinDs,
                Suite::Lbt,
                Suite::FaceBounds,
                Suite::Eq3,
                Suite::Glbc,
                Suite::Thm42,
            ]
            .into_iter()
            .flat_map(|s| verify(s, g).expect("cubical suites"))
            .collect(),
            Suite::NsDs => return Err(suite_mismatch(suite, g)),
        }),
        (AnyComplex::Simplicial(s), Suite::NsDs | Suite::All) => Ok(vec![verify_ns_ds(s, claim)]),
        (AnyComplex::Simplicial(_), _) => Err(suite_mismatch(suite, g)),
    }
}

fn suite_mismatch(suite: Suite, g: &GeneratedComplex) -> CliError {
    let name = suite.to_possible_value().expect("no skipped variants");
    CliError::KindMismatch(format!(
        "suite {} does not apply to a {} complex",
        name.get_name(),
        g.complex.kind()
    ))
}

/// 0 when nothing failed and something passed, 1 on any failure,
/// 3 when every report is inapplicable.
pub fn verify_exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if reports.iter().all(|r| r.status == Status::Inapplicable) {
        3
    } else {
        0
    }
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    provenance: &'a str,
    exit_code: i32,
    reports: &'a [VerificationReport],
}

pub fn render_reports(
    g: &GeneratedComplex,
    reports: &[VerificationReport],
    machine: bool,
) -> String {
    let code = verify_exit_code(reports);
    if machine {
        let doc = VerifyDocument {
            provenance: &g.provenance,
            exit_code: code,
            reports,
        };
        return serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n";
    }
    let mut out = String::new();
    for r in reports {
        let _ = write!(out, "{r}");
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "summary: {} pass, {} fail, {} inapplicable",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Inapplicable)
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubical::generators::*;

    fn values(t: &Table) -> Vec<i128> {
        t.rows.iter().flat_map(|r| r.values.clone()).collect()
    }

    #[test]
    fn compute_examples() {
        let c4 = cube_boundary(4).unwrap();
        assert_eq!(values(&compute(Invariant::Hc, &c4).unwrap()), vec![8; 5]);
        let o = cross_polytope_boundary(3).unwrap();
        assert_eq!(
            values(&compute(Invariant::F, &o).unwrap()),
            vec![1, 6, 12, 8]
        );
        assert!(matches!(
            compute(Invariant::Hsc, &o),
            Err(CliError::KindMismatch(_))
        ));
        assert!(matches!(
            compute(Invariant::H, &c4),
            Err(CliError::KindMismatch(_))
        ));
        let t = cubical_torus(&[4, 4]).unwrap();
        assert_eq!(values(&compute(Invariant::Euler, &t).unwrap()), vec![-1, 0]);
        assert_eq!(values(&compute(Invariant::Gc, &t).unwrap()), vec![4, 8]);
    }

    #[test]
    fn link_rows() {
        let c3 = cube_boundary(3).unwrap();
        let t = compute(Invariant::Links, &c3).unwrap();
        assert_eq!(t.rows.len(), 16);
        assert_eq!(t.rows[1].values, vec![1, 1, 1]);
        let o = cross_polytope_boundary(3).unwrap();
        let t = compute(Invariant::Links, &o).unwrap();
        assert_eq!(t.rows[0].values, vec![1, 4, 4]);
    }

    #[test]
    fn exit_codes() {
        let t = cubical_torus(&[4, 4]).unwrap();
        assert_eq!(verify_exit_code(&verify(Suite::AdinDs, &t).unwrap()), 0);
        assert_eq!(verify_exit_code(&verify(Suite::Thm42, &t).unwrap()), 3);
        let c3 = cube_boundary(3).unwrap();
        let reports = verify(Suite::Lbt, &c3).unwrap();
        assert_eq!(verify_exit_code(&reports), 0);
        assert!(reports[1].notes.iter().any(|n| n.contains("equality")));
        assert!(verify(Suite::NsDs, &c3).is_err());
        let s = simplex(3).unwrap();
        assert_eq!(verify(Suite::All, &s).unwrap().len(), 1);
    }
}
