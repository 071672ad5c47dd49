//! Equisingularity type of the generic discriminant of a minimal surface
//! singularity, computed from its weighted dual resolution graph and checked
//! against an independent plane-curve blow-up engine.
//!
//! ```
//! use minsing::{analyze, graph::{validate_graph, RawGraph}};
//!
//! let raw = RawGraph::parse("a 2\nb 2\nc 2\nedge a b\nedge b c\n").unwrap();
//! let analysis = analyze(&validate_graph(&raw).unwrap()).unwrap();
//! // A3: two smooth branches with contact two
//! assert_eq!(analysis.class.branches().len(), 2);
//! assert_eq!(analysis.class.contacts().get(0, 1), 2);
//! ```

pub mod cli;
pub mod depth;
pub mod discriminant;
pub mod dot;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod report;

use thiserror::Error;

use depth::{branch_counts, depth_map, omega_cycle, BranchCounts, DepthError, DepthProfile};
use discriminant::{
    contact_matrix, enumerate_branches, intersection_multiplicities, invariants, DiscriminantError,
    EquisingularityClass,
};
use families::FamilyError;
use graph::{
    canonical_cycle, fundamental_cycle, intersection_form, Cycle, GraphError, IntersectionForm, ResolutionGraph,
};
use oracle::OracleError;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Depth(#[from] DepthError),
    #[error(transparent)]
    Discriminant(#[from] DiscriminantError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl Error {
    /// Name of the innermost error variant, e.g. `NotMinimalResolution`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Graph(e) => e.kind(),
            Error::Depth(e) => e.kind(),
            Error::Discriminant(e) => e.kind(),
            Error::Oracle(e) => e.kind(),
            Error::Family(e) => e.kind(),
        }
    }
}

/// Everything computed from one graph.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub graph: ResolutionGraph,
    pub form: IntersectionForm,
    pub fundamental: Cycle,
    pub canonical: Cycle,
    pub depths: DepthProfile,
    pub counts: BranchCounts,
    pub class: EquisingularityClass,
}

impl Analysis {
    pub fn omega(&self) -> &Cycle {
        &self.counts.omega
    }
}

pub fn analyze(g: &ResolutionGraph) -> Result<Analysis, Error> {
    let form = intersection_form(g)?;
    let fundamental = fundamental_cycle(g);
    let canonical = canonical_cycle(&form)?;
    let depths = depth_map(g);
    let omega = omega_cycle(&depths, &canonical)?;
    let counts = branch_counts(&depths, &omega)?;
    let branches = enumerate_branches(&depths, &counts)?;
    let contacts = contact_matrix(&branches, &depths)?;
    let intersections = intersection_multiplicities(&branches, &contacts);
    let inv = invariants(&fundamental, &canonical, &omega, &branches, &intersections)?;
    let class = EquisingularityClass::new(branches, contacts, intersections, inv);
    Ok(Analysis {
        graph: g.clone(),
        form,
        fundamental,
        canonical,
        depths,
        counts,
        class,
    })
}
