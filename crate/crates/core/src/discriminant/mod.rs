//! The generic discriminant's equisingularity class: its branches, their
//! pairwise contacts, numerical invariants and a plane-curve representative.

mod class;
mod contact;
mod emit;
mod invariants;

use std::fmt;

use thiserror::Error;

use crate::depth::{BranchCounts, DepthError, DepthProfile};
use crate::graph::{GraphError, ResolutionGraph};
use crate::oracle::OracleError;

pub use class::{canonical_form, ClassShape, EquisingularityClass};
pub use contact::{contact, contact_matrix, intersection_multiplicities, ContactMatrix, StageFiltration};
pub use emit::{check_representative, emit_representative, place_branches, EmittedBranch, Representative};
pub use invariants::{invariants, Invariants};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscriminantError {
    #[error("vertex {vertex} carries {count} polar branches but {arcs} central arcs")]
    InconsistentCounts { vertex: String, count: u32, arcs: usize },
    #[error("contacts of {0}, {1}, {2} are not ultrametric")]
    UltrametricViolation(String, String, String),
    #[error("identity {identity} fails: {lhs} != {rhs}")]
    IdentityViolation {
        identity: &'static str,
        lhs: String,
        rhs: String,
    },
    #[error("representative not realized: {0}")]
    EmissionUnrealized(String),
    #[error(transparent)]
    Depth(#[from] DepthError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl DiscriminantError {
    pub fn kind(&self) -> &'static str {
        match self {
            DiscriminantError::InconsistentCounts { .. } => "InconsistentCounts",
            DiscriminantError::UltrametricViolation(..) => "UltrametricViolation",
            DiscriminantError::IdentityViolation { .. } => "IdentityViolation",
            DiscriminantError::EmissionUnrealized(_) => "EmissionUnrealized",
            DiscriminantError::Depth(e) => e.kind(),
            DiscriminantError::Graph(e) => e.kind(),
            DiscriminantError::Oracle(e) => e.kind(),
        }
    }
}

/// Smooth, or a cusp with characteristic exponents `(2, 2s+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchKind {
    Smooth,
    Cusp { depth: u32 },
}

impl BranchKind {
    pub fn multiplicity(self) -> u32 {
        match self {
            BranchKind::Smooth => 1,
            BranchKind::Cusp { .. } => 2,
        }
    }

    pub fn char_exponents(self) -> Vec<u32> {
        match self {
            BranchKind::Smooth => vec![1],
            BranchKind::Cusp { depth } => vec![2, 2 * depth + 1],
        }
    }

    /// Multiplicities at the first `len` infinitely near points.
    pub fn mult_sequence(self, len: usize) -> Vec<u32> {
        let doubles = match self {
            BranchKind::Smooth => 0,
            BranchKind::Cusp { depth } => depth as usize,
        };
        (0..len).map(|k| if k < doubles { 2 } else { 1 }).collect()
    }

    /// δ invariant of the branch.
    pub fn delta(self) -> u32 {
        match self {
            BranchKind::Smooth => 0,
            BranchKind::Cusp { depth } => depth,
        }
    }
}

impl fmt::Display for BranchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchKind::Smooth => write!(f, "smooth"),
            BranchKind::Cusp { depth } => write!(f, "cusp (2,{})", 2 * depth + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Support {
    Vertex(usize),
    /// central arc, endpoints in increasing index order
    Arc(usize, usize),
}

impl Support {
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let (a, b) = match self {
            Support::Vertex(u) => (u, None),
            Support::Arc(a, b) => (a, Some(b)),
        };
        std::iter::once(a).chain(b)
    }

    pub fn describe(self, g: &ResolutionGraph) -> String {
        match self {
            Support::Vertex(u) => g.id(u).to_string(),
            Support::Arc(a, b) => format!("{}~{}", g.id(a), g.id(b)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    /// `u/k` for the `k`-th smooth branch on `L_u`, `a~b` for the cusp on an arc
    pub id: String,
    pub support: Support,
    pub kind: BranchKind,
    /// `s_u`, or the common depth of the arc's endpoints
    pub depth: u32,
}

impl Branch {
    pub fn multiplicity(&self) -> u32 {
        self.kind.multiplicity()
    }

    pub fn char_exponents(&self) -> Vec<u32> {
        self.kind.char_exponents()
    }
}

/// One cusp per central arc, then `m_u - #arcs(u)` smooth branches on each
/// `L_u`.
pub fn enumerate_branches(depths: &DepthProfile, counts: &BranchCounts) -> Result<Vec<Branch>, DiscriminantError> {
    let g = depths.graph();
    let mut out = Vec::new();
    for v in 0..g.len() {
        let arcs = depths.arcs_at(v);
        let count = counts.m[v];
        if (count as usize) < arcs {
            return Err(DiscriminantError::InconsistentCounts {
                vertex: g.id(v).to_string(),
                count,
                arcs,
            });
        }
        for k in 1..=count as usize - arcs {
            out.push(Branch {
                id: format!("{}/{k}", g.id(v)),
                support: Support::Vertex(v),
                kind: BranchKind::Smooth,
                depth: depths.depth(v),
            });
        }
    }
    for &(a, b) in depths.central_arcs() {
        let s = depths.depth(a);
        let support = Support::Arc(a.min(b), a.max(b));
        out.push(Branch {
            id: support.describe(g),
            support,
            kind: BranchKind::Cusp { depth: s },
            depth: s,
        });
    }
    Ok(out)
}
