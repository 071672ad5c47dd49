//! Desingularization depths, Tyurina components, central elements and the
//! per-curve branch counts of the generic polar curve.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::graph::{Cycle, GraphError, ResolutionGraph};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error("negative branch count {count} at vertex {vertex}")]
    NegativeBranchCount { vertex: String, count: Rational },
    #[error("branch count at {vertex} is {from_pair} from Z_Ω but {closed_form} from the neighbour census")]
    CensusMismatch {
        vertex: String,
        from_pair: Rational,
        closed_form: i64,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl DepthError {
    pub fn kind(&self) -> &'static str {
        match self {
            DepthError::NegativeBranchCount { .. } => "NegativeBranchCount",
            DepthError::CensusMismatch { .. } => "CensusMismatch",
            DepthError::Graph(e) => e.kind(),
        }
    }
}

/// Neighbours of a vertex one level down, level, and one level up.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Census {
    pub minus: usize,
    pub zero: usize,
    pub plus: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    NonTyurina,
    Tyurina,
    Central,
}

impl VertexClass {
    pub fn label(self) -> &'static str {
        match self {
            VertexClass::NonTyurina => "NT",
            VertexClass::Tyurina => "Tyurina",
            VertexClass::Central => "central",
        }
    }
}

#[derive(Debug, Clone)]
pub struct DepthProfile {
    graph: ResolutionGraph,
    depth: Vec<u32>,
    census: Vec<Census>,
    non_tyurina: Vec<usize>,
    tyurina_components: Vec<Vec<usize>>,
    component_of: Vec<Option<usize>>,
    central_vertices: Vec<usize>,
    central_arcs: Vec<(usize, usize)>,
}

/// Multi-source BFS from the non-Tyurina vertices.
pub fn depth_map(g: &ResolutionGraph) -> DepthProfile {
    let n = g.len();
    let mut depth = vec![0u32; n];
    let mut queue = VecDeque::new();
    let non_tyurina: Vec<usize> = (0..n).filter(|&v| g.is_non_tyurina(v)).collect();
    for &v in &non_tyurina {
        depth[v] = 1;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if depth[u] == 0 {
                depth[u] = depth[v] + 1;
                queue.push_back(u);
            }
        }
    }
    debug_assert!(depth.iter().all(|&s| s >= 1));

    let census: Vec<Census> = (0..n)
        .map(|v| {
            let mut c = Census::default();
            for &u in g.neighbors(v) {
                match depth[u] as i64 - depth[v] as i64 {
                    -1 => c.minus += 1,
                    0 => c.zero += 1,
                    1 => c.plus += 1,
                    d => unreachable!("depth jumps by {d} along an edge"),
                }
            }
            c
        })
        .collect();

    let mut component_of = vec![None; n];
    let mut tyurina_components = Vec::new();
    for start in 0..n {
        if depth[start] < 2 || component_of[start].is_some() {
            continue;
        }
        let id = tyurina_components.len();
        let mut comp = vec![start];
        component_of[start] = Some(id);
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &u in g.neighbors(v) {
                if depth[u] >= 2 && component_of[u].is_none() {
                    component_of[u] = Some(id);
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        tyurina_components.push(comp);
    }

    let central_vertices = (0..n).filter(|&v| census[v].minus >= 2).collect();
    let central_arcs = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| depth[a] == depth[b])
        .collect();

    DepthProfile {
        graph: g.clone(),
        depth,
        census,
        non_tyurina,
        tyurina_components,
        component_of,
        central_vertices,
        central_arcs,
    }
}

impl DepthProfile {
    pub fn graph(&self) -> &ResolutionGraph {
        &self.graph
    }

    pub fn depth(&self, v: usize) -> u32 {
        self.depth[v]
    }

    pub fn depths(&self) -> &[u32] {
        &self.depth
    }

    pub fn max_depth(&self) -> u32 {
        self.depth.iter().copied().max().unwrap_or(1)
    }

    pub fn census(&self, v: usize) -> Census {
        self.census[v]
    }

    pub fn non_tyurina(&self) -> &[usize] {
        &self.non_tyurina
    }

    pub fn tyurina_components(&self) -> &[Vec<usize>] {
        &self.tyurina_components
    }

    pub fn tyurina_component_of(&self, v: usize) -> Option<usize> {
        self.component_of[v]
    }

    pub fn central_vertices(&self) -> &[usize] {
        &self.central_vertices
    }

    pub fn central_arcs(&self) -> &[(usize, usize)] {
        &self.central_arcs
    }

    pub fn is_central(&self, v: usize) -> bool {
        self.census[v].minus >= 2
    }

    pub fn class(&self, v: usize) -> VertexClass {
        if self.depth[v] == 1 {
            VertexClass::NonTyurina
        } else if self.is_central(v) {
            VertexClass::Central
        } else {
            VertexClass::Tyurina
        }
    }

    pub fn arcs_at(&self, v: usize) -> usize {
        self.central_arcs.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Neighbours of depth 2 (for non-Tyurina vertices: the Tyurina neighbours).
    pub fn tyurina_neighbors(&self, v: usize) -> usize {
        self.graph.neighbors(v).iter().filter(|&&u| self.depth[u] >= 2).count()
    }

    /// `Σ s_x L_x` as a cycle.
    pub fn depth_cycle(&self) -> Cycle {
        let coeffs = self
            .depth
            .iter()
            .map(|&s| Rational::from_integer(BigInt::from(s)))
            .collect();
        Cycle::from_coefficients(&self.graph, coeffs).expect("sized to graph")
    }
}

/// `Z_Ω = Σ s_x L_x - Z_K`.
pub fn omega_cycle(depths: &DepthProfile, canonical: &Cycle) -> Result<Cycle, GraphError> {
    depths.depth_cycle().checked_sub(canonical)
}

#[derive(Debug, Clone)]
pub struct BranchCounts {
    pub m: Vec<u32>,
    pub omega: Cycle,
}

impl BranchCounts {
    pub fn total(&self) -> u64 {
        self.m.iter().map(|&m| m as u64).sum()
    }
}

/// Closed form for `m_x` from the neighbour census.
pub fn census_branch_count(g: &ResolutionGraph, depths: &DepthProfile, v: usize) -> i64 {
    let w = g.weight(v) as i64;
    if depths.depth(v) == 1 {
        2 * w - g.valence(v) as i64 - depths.tyurina_neighbors(v) as i64 - 2
    } else {
        let c = depths.census(v);
        w + c.minus as i64 - c.plus as i64 - 2
    }
}

/// `m_x = -Z_Ω.L_x`, cross-checked against the census closed forms.
pub fn branch_counts(depths: &DepthProfile, omega: &Cycle) -> Result<BranchCounts, DepthError> {
    let g = depths.graph();
    let mut m = Vec::with_capacity(g.len());
    for v in 0..g.len() {
        let count = -omega.dot_curve(v);
        if count.is_negative() || !count.is_integer() {
            return Err(DepthError::NegativeBranchCount {
                vertex: g.id(v).to_string(),
                count,
            });
        }
        let closed = census_branch_count(g, depths, v);
        if count != Rational::from_integer(closed.into()) {
            return Err(DepthError::CensusMismatch {
                vertex: g.id(v).to_string(),
                from_pair: count,
                closed_form: closed,
            });
        }
        m.push(closed as u32);
    }
    Ok(BranchCounts {
        m,
        omega: omega.clone(),
    })
}
