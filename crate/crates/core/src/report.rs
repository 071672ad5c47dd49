//! JSON and table renderings of analyses and discriminants.
//!
//! Every number is written as an exact decimal or fraction string (`"4"`,
//! `"-7/3"`).

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::discriminant::{BranchKind, EmittedBranch, Representative, Support};
use crate::graph::{GraphError, RawGraph, RawVertex};
use crate::{Analysis, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub weight: String,
}

impl GraphJson {
    pub fn from_raw(raw: &RawGraph) -> GraphJson {
        GraphJson {
            vertices: raw
                .vertices
                .iter()
                .map(|v| VertexJson {
                    id: v.id.clone(),
                    weight: v.weight.to_string(),
                })
                .collect(),
            edges: raw.edges.clone(),
        }
    }

    pub fn to_raw(&self) -> Result<RawGraph, GraphError> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                let weight = v
                    .weight
                    .trim()
                    .parse()
                    .map_err(|_| GraphError::MalformedInput(format!("weight {:?} of {}", v.weight, v.id)))?;
                Ok(RawVertex {
                    id: v.id.clone(),
                    weight,
                })
            })
            .collect::<Result<_, GraphError>>()?;
        Ok(RawGraph {
            vertices,
            edges: self.edges.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportJson {
    Vertex(String),
    Arc(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchJson {
    pub id: String,
    pub support: SupportJson,
    pub multiplicity: String,
    pub depth: String,
    pub char_exponents: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub e_delta: String,
    pub n_b: String,
    pub n_bs: String,
    pub e_surface: String,
    pub mu_section: String,
    pub delta: String,
    pub milnor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmittedJson {
    pub id: String,
    pub kind: String,
    pub depth: String,
    /// coefficients of `x^1, x^2, ...`
    pub coefficients: Vec<String>,
    pub beta: Option<String>,
    pub x: String,
    pub y: String,
    pub equation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentativeJson {
    pub truncation: String,
    pub parametrizations: Vec<EmittedJson>,
    pub polynomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantReport {
    pub graph: GraphJson,
    pub branches: Vec<BranchJson>,
    /// `[id, id, contact]`
    pub contacts: Vec<[String; 3]>,
    /// `[id, id, intersection multiplicity]`
    pub intersections: Vec<[String; 3]>,
    pub invariants: InvariantsJson,
    pub representative: Option<RepresentativeJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_number<T: FromStr>(s: &str, what: &str) -> Result<T, ReportError> {
    s.trim()
        .parse()
        .map_err(|_| ReportError::Malformed(format!("{what}: {s:?} is not an exact number")))
}

fn branch_json(analysis: &Analysis, i: usize) -> BranchJson {
    let g = &analysis.graph;
    let b = &analysis.class.branches()[i];
    BranchJson {
        id: b.id.clone(),
        support: match b.support {
            Support::Vertex(u) => SupportJson::Vertex(g.id(u).to_string()),
            Support::Arc(a, c) => SupportJson::Arc(g.id(a).to_string(), g.id(c).to_string()),
        },
        multiplicity: b.multiplicity().to_string(),
        depth: b.depth.to_string(),
        char_exponents: b.char_exponents().iter().map(u32::to_string).collect(),
    }
}

fn emitted_json(b: &EmittedBranch) -> EmittedJson {
    let (x, y) = b.parametrization_text();
    EmittedJson {
        id: b.id.clone(),
        kind: match b.kind {
            BranchKind::Smooth => "smooth".into(),
            BranchKind::Cusp { .. } => "cusp".into(),
        },
        depth: match b.kind {
            BranchKind::Smooth => "0".into(),
            BranchKind::Cusp { depth } => depth.to_string(),
        },
        coefficients: b.coefficients.iter().map(Rational::to_string).collect(),
        beta: b.beta.as_ref().map(Rational::to_string),
        x,
        y,
        equation: b.equation().to_string(),
    }
}

impl RepresentativeJson {
    pub fn new(r: &Representative) -> RepresentativeJson {
        RepresentativeJson {
            truncation: r.truncation.to_string(),
            parametrizations: r.branches.iter().map(emitted_json).collect(),
            polynomial: r.polynomial(),
        }
    }

    /// Rebuild the emitted branches from their coefficients.
    pub fn emitted_branches(&self) -> Result<Vec<EmittedBranch>, ReportError> {
        self.parametrizations
            .iter()
            .map(|p| {
                let kind = match p.kind.as_str() {
                    "smooth" => BranchKind::Smooth,
                    "cusp" => BranchKind::Cusp {
                        depth: parse_number(&p.depth, "cusp depth")?,
                    },
                    other => return Err(ReportError::Malformed(format!("branch kind {other:?}"))),
                };
                let coefficients = p
                    .coefficients
                    .iter()
                    .map(|c| parse_number::<Rational>(c, "coefficient"))
                    .collect::<Result<_, _>>()?;
                let beta = p
                    .beta
                    .as_deref()
                    .map(|b| parse_number::<Rational>(b, "beta"))
                    .transpose()?;
                if matches!(kind, BranchKind::Cusp { .. }) != beta.is_some() {
                    return Err(ReportError::Malformed(format!(
                        "branch {}: beta must accompany cusps",
                        p.id
                    )));
                }
                Ok(EmittedBranch {
                    id: p.id.clone(),
                    kind,
                    coefficients,
                    beta,
                })
            })
            .collect()
    }
}

impl DiscriminantReport {
    pub fn new(analysis: &Analysis, representative: Option<&Representative>) -> DiscriminantReport {
        let class = &analysis.class;
        let ids = class.contacts().ids();
        let triple = |i: usize, j: usize, v: String| [ids[i].clone(), ids[j].clone(), v];
        let inv = class.invariants();
        DiscriminantReport {
            graph: GraphJson::from_raw(&analysis.graph.to_raw()),
            branches: (0..class.branches().len()).map(|i| branch_json(analysis, i)).collect(),
            contacts: class
                .contacts()
                .pairs()
                .map(|(i, j, c)| triple(i, j, c.to_string()))
                .collect(),
            intersections: class
                .contacts()
                .pairs()
                .map(|(i, j, _)| triple(i, j, class.intersections()[i][j].to_string()))
                .collect(),
            invariants: InvariantsJson {
                e_delta: inv.e_delta.to_string(),
                n_b: inv.n_b.to_string(),
                n_bs: inv.n_bs.to_string(),
                e_surface: inv.e_surface.to_string(),
                mu_section: inv.mu_section.to_string(),
                delta: inv.delta.to_string(),
                milnor: inv.milnor.to_string(),
            },
            representative: representative.map(RepresentativeJson::new),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(src: &str) -> Result<DiscriminantReport, ReportError> {
        serde_json::from_str(src).map_err(|e| ReportError::Malformed(e.to_string()))
    }

    /// First field where this report and `other` differ, ignoring the
    /// representative.
    pub fn first_difference(&self, other: &DiscriminantReport) -> Option<String> {
        if self.graph != other.graph {
            return Some("graph".into());
        }
        if self.branches.len() != other.branches.len() {
            return Some(format!(
                "branch count: {} vs {}",
                self.branches.len(),
                other.branches.len()
            ));
        }
        if let Some((a, b)) = self.branches.iter().zip(&other.branches).find(|(a, b)| a != b) {
            return Some(format!("branch {} vs {}", a.id, b.id));
        }
        for (name, mine, theirs) in [
            ("contacts", &self.contacts, &other.contacts),
            ("intersections", &self.intersections, &other.intersections),
        ] {
            if let Some((a, b)) = mine.iter().zip(theirs).find(|(a, b)| a != b) {
                return Some(format!("{name}: {a:?} vs {b:?}"));
            }
            if mine.len() != theirs.len() {
                return Some(format!("{name}: {} vs {} entries", mine.len(), theirs.len()));
            }
        }
        if self.invariants != other.invariants {
            return Some(format!("invariants: {:?} vs {:?}", self.invariants, other.invariants));
        }
        None
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "branches ({})", self.branches.len());
        for b in &self.branches {
            let support = match &b.support {
                SupportJson::Vertex(v) => v.clone(),
                SupportJson::Arc(a, c) => format!("{a}~{c}"),
            };
            let _ = writeln!(
                out,
                "  {:<12} support {:<10} mult {} depth {:<3} exponents ({})",
                b.id,
                support,
                b.multiplicity,
                b.depth,
                b.char_exponents.join(",")
            );
        }
        let _ = writeln!(out, "contacts");
        for [a, b, c] in &self.contacts {
            let _ = writeln!(out, "  {a:<12} {b:<12} {c}");
        }
        let inv = &self.invariants;
        let _ = writeln!(out, "invariants");
        for (k, v) in [
            ("e_delta", &inv.e_delta),
            ("n_b", &inv.n_b),
            ("n_bs", &inv.n_bs),
            ("e_surface", &inv.e_surface),
            ("mu_section", &inv.mu_section),
            ("delta", &inv.delta),
            ("milnor", &inv.milnor),
        ] {
            let _ = writeln!(out, "  {k:<12} {v}");
        }
        if let Some(r) = &self.representative {
            let _ = writeln!(out, "representative");
            for p in &r.parametrizations {
                let _ = writeln!(out, "  {:<12} x = {}, y = {}", p.id, p.x, p.y);
            }
            let _ = writeln!(out, "  {}", r.polynomial);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub id: String,
    pub weight: String,
    pub valence: String,
    pub depth: String,
    pub class: String,
    pub polar_branches: String,
    pub canonical: String,
    pub omega: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub vertices: Vec<VertexReport>,
    pub z_squared: String,
    pub z_dot_canonical: String,
    pub determinant: String,
    pub tyurina_components: Vec<Vec<String>>,
    pub central_vertices: Vec<String>,
    pub central_arcs: Vec<(String, String)>,
}

impl AnalysisReport {
    pub fn new(a: &Analysis) -> AnalysisReport {
        let g = &a.graph;
        let d = &a.depths;
        let ids = |vs: &[usize]| vs.iter().map(|&v| g.id(v).to_string()).collect::<Vec<_>>();
        let pair = |x: &crate::graph::Cycle, y: &crate::graph::Cycle| {
            crate::graph::pair(x, y).expect("cycles on one graph").to_string()
        };
        AnalysisReport {
            vertices: (0..g.len())
                .map(|v| VertexReport {
                    id: g.id(v).to_string(),
                    weight: g.weight(v).to_string(),
                    valence: g.valence(v).to_string(),
                    depth: d.depth(v).to_string(),
                    class: d.class(v).label().to_string(),
                    polar_branches: a.counts.m[v].to_string(),
                    canonical: a.canonical.coefficient(v).to_string(),
                    omega: a.omega().coefficient(v).to_string(),
                })
                .collect(),
            z_squared: pair(&a.fundamental, &a.fundamental),
            z_dot_canonical: pair(&a.fundamental, &a.canonical),
            determinant: a.form.discriminant().to_string(),
            tyurina_components: d.tyurina_components().iter().map(|c| ids(c)).collect(),
            central_vertices: ids(d.central_vertices()),
            central_arcs: d
                .central_arcs()
                .iter()
                .map(|&(x, y)| (g.id(x).to_string(), g.id(y).to_string()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<10} {:>6} {:>7} {:>5} {:<8} {:>3} {:>10} {:>10}",
            "vertex", "weight", "valence", "depth", "class", "m", "Z_K", "Z_Omega"
        );
        for v in &self.vertices {
            let _ = writeln!(
                out,
                "{:<10} {:>6} {:>7} {:>5} {:<8} {:>3} {:>10} {:>10}",
                v.id, v.weight, v.valence, v.depth, v.class, v.polar_branches, v.canonical, v.omega
            );
        }
        let _ = writeln!(
            out,
            "Z^2 = {}, Z.Z_K = {}, det = {}",
            self.z_squared, self.z_dot_canonical, self.determinant
        );
        let comps: Vec<String> = self
            .tyurina_components
            .iter()
            .map(|c| format!("{{{}}}", c.join(",")))
            .collect();
        let _ = writeln!(out, "Tyurina components: {}", comps.join(" "));
        let _ = writeln!(out, "central vertices: {}", self.central_vertices.join(" "));
        let arcs: Vec<String> = self.central_arcs.iter().map(|(a, b)| format!("{a}~{b}")).collect();
        let _ = writeln!(out, "central arcs: {}", arcs.join(" "));
        out
    }
}
