//! Weighted dual resolution graphs and their intersection form.
//!
//! A [`ResolutionGraph`] is a validated weighted tree: one vertex per
//! exceptional curve `L_x` with weight `w(x) = -L_x^2`, one edge per
//! intersection point. Vertices are stored in lexicographic order of their
//! ids and every matrix or vector in the crate uses that order.
//!
//! All arithmetic here is exact. The intersection form of a tree admits an
//! LDLᵀ factorisation without fill-in when vertices are eliminated leaves
//! first, which is what [`IntersectionForm`] does; it doubles as the
//! certificate of negative definiteness.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("degenerate graph: w(x) = valence(x) at every vertex")]
    DegenerateGraph,
    #[error("not a minimal resolution: vertex {vertex} has weight {weight} < 2")]
    NotMinimalResolution { vertex: String, weight: u32 },
    #[error("not minimal: vertex {vertex} has weight {weight} < valence {valence}")]
    NotMinimal {
        vertex: String,
        weight: u32,
        valence: usize,
    },
    #[error("intersection form is not negative definite (pivot {pivot} at vertex {vertex})")]
    DefinitenessFailure { vertex: String, pivot: Rational },
    #[error("singular linear system")]
    SingularSystem,
    #[error("cycles live on different graphs")]
    GraphMismatch,
}

impl GraphError {
    /// Stable name of the failure mode, as printed by the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            GraphError::MalformedInput(_) => "MalformedInput",
            GraphError::NotATree(_) => "NotATree",
            GraphError::DegenerateGraph => "DegenerateGraph",
            GraphError::NotMinimalResolution { .. } => "NotMinimalResolution",
            GraphError::NotMinimal { .. } => "NotMinimal",
            GraphError::DefinitenessFailure { .. } => "DefinitenessFailure",
            GraphError::SingularSystem => "SingularSystem",
            GraphError::GraphMismatch => "GraphMismatch",
        }
    }
}

/// Unvalidated vertex/edge description, as read from JSON or text.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RawGraph {
    pub vertices: Vec<RawVertex>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawVertex {
    pub id: String,
    #[serde(deserialize_with = "weight_from_json")]
    pub weight: i64,
}

fn weight_from_json<'de, D: serde::Deserializer<'de>>(d: D) -> Result<i64, D::Error> {
    // weights may arrive as integers or as exact-number strings
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum W {
        Int(i64),
        Str(String),
    }
    match W::deserialize(d)? {
        W::Int(n) => Ok(n),
        W::Str(s) => s
            .trim()
            .parse()
            .map_err(|_| serde::de::Error::custom(format!("weight {s:?} is not an integer"))),
    }
}

impl RawGraph {
    pub fn from_json(src: &str) -> Result<RawGraph, GraphError> {
        serde_json::from_str(src).map_err(|e| GraphError::MalformedInput(e.to_string()))
    }

    /// Line-oriented format: `id weight` lines, then `edge id1 id2` lines.
    /// Blank lines and `#` comments are ignored.
    pub fn from_text(src: &str) -> Result<RawGraph, GraphError> {
        let mut raw = RawGraph::default();
        for (lineno, line) in src.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || GraphError::MalformedInput(format!("line {}: {line:?}", lineno + 1));
            match fields.as_slice() {
                ["edge", a, b] => raw.edges.push((a.to_string(), b.to_string())),
                [id, w] if *id != "edge" => {
                    let weight = w.parse::<i64>().map_err(|_| bad())?;
                    raw.vertices.push(RawVertex {
                        id: id.to_string(),
                        weight,
                    });
                }
                _ => return Err(bad()),
            }
        }
        Ok(raw)
    }

    /// JSON when the first non-blank character is `{`, text otherwise.
    pub fn parse(src: &str) -> Result<RawGraph, GraphError> {
        if src.trim_start().starts_with('{') {
            RawGraph::from_json(src)
        } else {
            RawGraph::from_text(src)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("raw graph serialises")
    }
}

#[derive(Debug)]
struct GraphData {
    ids: Vec<String>,
    weights: Vec<u32>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// A validated minimal resolution graph. Cheap to clone.
#[derive(Clone)]
pub struct ResolutionGraph(Arc<GraphData>);

impl fmt::Debug for ResolutionGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ResolutionGraph")
            .field("ids", &self.0.ids)
            .field("weights", &self.0.weights)
            .field("edges", &self.0.edges)
            .finish()
    }
}

impl PartialEq for ResolutionGraph {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ids == other.0.ids && self.0.weights == other.0.weights && self.0.edges == other.0.edges)
    }
}

impl Eq for ResolutionGraph {}

impl ResolutionGraph {
    pub fn len(&self) -> usize {
        self.0.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.0.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.0.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.0.ids.binary_search_by(|probe| probe.as_str().cmp(id)).ok()
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.0.weights[v]
    }

    pub fn valence(&self, v: usize) -> usize {
        self.0.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.0.adj[v]
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0.edges
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.0.adj[a].contains(&b)
    }

    /// `Z.L_x = valence(x) - w(x)` for the reduced cycle.
    pub fn excess(&self, v: usize) -> i64 {
        self.valence(v) as i64 - self.weight(v) as i64
    }

    pub fn is_non_tyurina(&self, v: usize) -> bool {
        self.weight(v) as usize > self.valence(v)
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            vertices: (0..self.len())
                .map(|v| RawVertex {
                    id: self.id(v).to_string(),
                    weight: self.weight(v) as i64,
                })
                .collect(),
            edges: self
                .edges()
                .iter()
                .map(|&(a, b)| (self.id(a).to_string(), self.id(b).to_string()))
                .collect(),
        }
    }
}

/// Check the combinatorial characterisation of minimal singularities: a
/// tree with `w(x) >= valence(x)` everywhere, on the minimal resolution.
pub fn validate_graph(raw: &RawGraph) -> Result<ResolutionGraph, GraphError> {
    if raw.vertices.is_empty() {
        return Err(GraphError::MalformedInput("graph has no vertices".into()));
    }
    let mut by_id: BTreeMap<&str, i64> = BTreeMap::new();
    for v in &raw.vertices {
        if v.id.is_empty() || v.id.chars().any(char::is_whitespace) {
            return Err(GraphError::MalformedInput(format!("invalid vertex id {:?}", v.id)));
        }
        if v.weight <= 0 || v.weight > u32::MAX as i64 {
            return Err(GraphError::MalformedInput(format!(
                "vertex {} has weight {}, expected a positive integer",
                v.id, v.weight
            )));
        }
        if by_id.insert(&v.id, v.weight).is_some() {
            return Err(GraphError::MalformedInput(format!("duplicate vertex id {}", v.id)));
        }
    }
    let ids: Vec<String> = by_id.keys().map(|s| s.to_string()).collect();
    let weights: Vec<u32> = by_id.values().map(|&w| w as u32).collect();
    let index = |id: &str| {
        ids.binary_search_by(|p| p.as_str().cmp(id))
            .map_err(|_| GraphError::MalformedInput(format!("edge references unknown vertex {id}")))
    };

    let n = ids.len();
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(raw.edges.len());
    let mut adj = vec![Vec::new(); n];
    for (a, b) in &raw.edges {
        let (i, j) = (index(a)?, index(b)?);
        if i == j {
            return Err(GraphError::MalformedInput(format!("self-loop at {a}")));
        }
        let key = (i.min(j), i.max(j));
        if !seen.insert(key) {
            return Err(GraphError::MalformedInput(format!("repeated edge {a} -- {b}")));
        }
        edges.push(key);
        adj[i].push(j);
        adj[j].push(i);
    }
    edges.sort_unstable();
    for list in &mut adj {
        list.sort_unstable();
    }

    // connected + |E| = |V| - 1
    let mut reached = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    reached[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if !reached[u] {
                reached[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
    }
    if count < n {
        return Err(GraphError::NotATree(format!(
            "disconnected: {} of {n} vertices reachable from {}",
            count, ids[0]
        )));
    }
    if edges.len() != n - 1 {
        return Err(GraphError::NotATree(format!(
            "{} edges on {n} vertices closes a cycle",
            edges.len()
        )));
    }

    if (0..n).all(|v| weights[v] as usize == adj[v].len()) {
        return Err(GraphError::DegenerateGraph);
    }
    for v in 0..n {
        if weights[v] < 2 {
            return Err(GraphError::NotMinimalResolution {
                vertex: ids[v].clone(),
                weight: weights[v],
            });
        }
    }
    for v in 0..n {
        if (weights[v] as usize) < adj[v].len() {
            return Err(GraphError::NotMinimal {
                vertex: ids[v].clone(),
                weight: weights[v],
                valence: adj[v].len(),
            });
        }
    }

    Ok(ResolutionGraph(Arc::new(GraphData {
        ids,
        weights,
        adj,
        edges,
    })))
}

/// A rational cycle `Σ c_x L_x` on a fixed graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Cycle {
    graph: ResolutionGraph,
    coeffs: Vec<Rational>,
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (id, c) in self.iter() {
            m.entry(&id, &c.to_string());
        }
        m.finish()
    }
}

impl Cycle {
    pub fn zero(g: &ResolutionGraph) -> Cycle {
        Cycle {
            graph: g.clone(),
            coeffs: vec![Rational::zero(); g.len()],
        }
    }

    /// The exceptional curve `L_v` as a cycle.
    pub fn basis(g: &ResolutionGraph, v: usize) -> Cycle {
        let mut c = Cycle::zero(g);
        c.coeffs[v] = Rational::one();
        c
    }

    pub fn from_coefficients(g: &ResolutionGraph, coeffs: Vec<Rational>) -> Result<Cycle, GraphError> {
        if coeffs.len() != g.len() {
            return Err(GraphError::GraphMismatch);
        }
        Ok(Cycle {
            graph: g.clone(),
            coeffs,
        })
    }

    pub fn from_integers(g: &ResolutionGraph, coeffs: &[i64]) -> Result<Cycle, GraphError> {
        Cycle::from_coefficients(g, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn graph(&self) -> &ResolutionGraph {
        &self.graph
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, v: usize) -> &Rational {
        &self.coeffs[v]
    }

    pub fn get(&self, id: &str) -> Option<&Rational> {
        self.graph.index_of(id).map(|v| &self.coeffs[v])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.graph.ids().iter().map(String::as_str).zip(self.coeffs.iter())
    }

    pub fn scale(&self, k: &Rational) -> Cycle {
        Cycle {
            graph: self.graph.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    fn zip_with(&self, rhs: &Cycle, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Cycle, GraphError> {
        if self.graph != rhs.graph {
            return Err(GraphError::GraphMismatch);
        }
        Ok(Cycle {
            graph: self.graph.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Cycle) -> Result<Cycle, GraphError> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Cycle) -> Result<Cycle, GraphError> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// `self . L_v`.
    pub fn dot_curve(&self, v: usize) -> Rational {
        let g = &self.graph;
        let mut acc = -(&self.coeffs[v] * BigInt::from(g.weight(v)));
        for &u in g.neighbors(v) {
            acc += &self.coeffs[u];
        }
        acc
    }
}

impl Add<&Cycle> for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        self.checked_add(rhs).expect("cycles on the same graph")
    }
}

impl Sub<&Cycle> for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        self.checked_sub(rhs).expect("cycles on the same graph")
    }
}

impl Neg for &Cycle {
    type Output = Cycle;
    fn neg(self) -> Cycle {
        Cycle {
            graph: self.graph.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Intersection number `c1ᵀ M c2`.
pub fn pair(c1: &Cycle, c2: &Cycle) -> Result<Rational, GraphError> {
    if c1.graph != c2.graph {
        return Err(GraphError::GraphMismatch);
    }
    let g = &c1.graph;
    let mut acc = Rational::zero();
    for v in 0..g.len() {
        if c1.coeffs[v].is_zero() {
            continue;
        }
        acc += &c1.coeffs[v] * c2.dot_curve(v);
    }
    Ok(acc)
}

/// The intersection matrix `M` (diagonal `-w(x)`, `1` on edges) with its
/// leaves-first LDLᵀ factorisation.
#[derive(Debug, Clone)]
pub struct IntersectionForm {
    graph: ResolutionGraph,
    /// elimination order: every vertex precedes its parent
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    /// pivots `d_v`, indexed by vertex
    pivots: Vec<Rational>,
}

pub fn intersection_form(g: &ResolutionGraph) -> Result<IntersectionForm, GraphError> {
    let n = g.len();
    let root = 0;
    let mut parent = vec![None; n];
    let mut bfs = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    visited[root] = true;
    bfs.push(root);
    let mut head = 0;
    while head < bfs.len() {
        let v = bfs[head];
        head += 1;
        for &u in g.neighbors(v) {
            if !visited[u] {
                visited[u] = true;
                parent[u] = Some(v);
                bfs.push(u);
            }
        }
    }
    let order: Vec<usize> = bfs.into_iter().rev().collect();

    let mut pivots = vec![Rational::zero(); n];
    let mut child_sum = vec![Rational::zero(); n];
    for &v in &order {
        let d = Rational::from_integer(-BigInt::from(g.weight(v))) - &child_sum[v];
        if !d.is_negative() {
            return Err(GraphError::DefinitenessFailure {
                vertex: g.id(v).to_string(),
                pivot: d,
            });
        }
        if let Some(p) = parent[v] {
            // M[p][v]^2 / d_v with M[p][v] = 1
            child_sum[p] += d.recip();
        }
        pivots[v] = d;
    }
    Ok(IntersectionForm {
        graph: g.clone(),
        order,
        parent,
        pivots,
    })
}

impl IntersectionForm {
    pub fn graph(&self) -> &ResolutionGraph {
        &self.graph
    }

    pub fn size(&self) -> usize {
        self.graph.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            -(self.graph.weight(i) as i64)
        } else if self.graph.are_adjacent(i, j) {
            1
        } else {
            0
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Pivots in elimination order (leaves first).
    pub fn pivots(&self) -> Vec<&Rational> {
        self.order.iter().map(|&v| &self.pivots[v]).collect()
    }

    pub fn elimination_order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_negative_definite(&self) -> bool {
        self.pivots.iter().all(Signed::is_negative)
    }

    /// Determinant of `-M`, a positive integer.
    pub fn discriminant(&self) -> BigInt {
        let det = self.pivots.iter().fold(Rational::one(), |acc, d| acc * -d);
        debug_assert!(det.is_integer());
        det.to_integer()
    }

    /// Solve `M z = b` exactly along the tree.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>, GraphError> {
        let n = self.size();
        if b.len() != n {
            return Err(GraphError::GraphMismatch);
        }
        if self.pivots.iter().any(Zero::is_zero) {
            return Err(GraphError::SingularSystem);
        }
        let mut y = b.to_vec();
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                let t = &y[v] / &self.pivots[v];
                y[p] -= t;
            }
        }
        let mut z = vec![Rational::zero(); n];
        for &v in self.order.iter().rev() {
            z[v] = match self.parent[v] {
                None => &y[v] / &self.pivots[v],
                Some(p) => (&y[v] - &z[p]) / &self.pivots[v],
            };
        }
        Ok(z)
    }

    /// `M z` for a coefficient vector.
    pub fn apply(&self, z: &[Rational]) -> Vec<Rational> {
        let g = &self.graph;
        (0..g.len())
            .map(|v| {
                let mut acc = -(&z[v] * BigInt::from(g.weight(v)));
                for &u in g.neighbors(v) {
                    acc += &z[u];
                }
                acc
            })
            .collect()
    }
}

/// The reduced cycle `Z = Σ L_x`, fundamental on a minimal graph.
pub fn fundamental_cycle(g: &ResolutionGraph) -> Cycle {
    let z = Cycle::from_coefficients(g, vec![Rational::one(); g.len()]).expect("sized to graph");
    debug_assert!((0..g.len()).all(|v| z.dot_curve(v) == Rational::from_integer(g.excess(v).into())));
    debug_assert!((0..g.len()).all(|v| g.excess(v) <= 0));
    z
}

/// The canonical cycle: `Z_K.L_x = w(x) - 2` for all `x`.
pub fn canonical_cycle(form: &IntersectionForm) -> Result<Cycle, GraphError> {
    let g = form.graph();
    let b: Vec<Rational> = (0..g.len())
        .map(|v| Rational::from_integer(BigInt::from(g.weight(v) as i64 - 2)))
        .collect();
    let z = form.solve(&b)?;
    if form.apply(&z) != b {
        return Err(GraphError::SingularSystem);
    }
    Cycle::from_coefficients(g, z)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn raw(vertices: &[(&str, i64)], edges: &[(&str, &str)]) -> RawGraph {
        RawGraph {
            vertices: vertices
                .iter()
                .map(|&(id, weight)| RawVertex { id: id.into(), weight })
                .collect(),
            edges: edges.iter().map(|&(a, b)| (a.into(), b.into())).collect(),
        }
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn single_vertex_is_a1_cone() {
        let g = validate_graph(&raw(&[("x", 2)], &[])).unwrap();
        assert_eq!(g.len(), 1);
        let form = intersection_form(&g).unwrap();
        assert_eq!(form.to_dense(), vec![vec![-2]]);
    }

    #[test]
    fn rejects_multi_edge_and_cycle() {
        let multi = raw(&[("a", 2), ("b", 2)], &[("a", "b"), ("b", "a")]);
        assert_eq!(validate_graph(&multi).unwrap_err().kind(), "MalformedInput");
        let tri = raw(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!(validate_graph(&tri).unwrap_err().kind(), "NotATree");
        let split = raw(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b")]);
        assert_eq!(validate_graph(&split).unwrap_err().kind(), "NotATree");
    }

    #[test]
    fn failure_modes() {
        let cases = [
            (raw(&[], &[]), "MalformedInput"),
            (raw(&[("a", 0)], &[]), "MalformedInput"),
            (raw(&[("a", 2), ("a", 3)], &[]), "MalformedInput"),
            (raw(&[("a", 2)], &[("a", "a")]), "MalformedInput"),
            (raw(&[("a", 2)], &[("a", "zz")]), "MalformedInput"),
            (raw(&[("a", 1)], &[]), "NotMinimalResolution"),
            (
                raw(&[("a", 1), ("b", 2), ("c", 1)], &[("a", "b"), ("b", "c")]),
                "DegenerateGraph",
            ),
            (
                raw(
                    &[("c", 2), ("l1", 2), ("l2", 2), ("l3", 2)],
                    &[("c", "l1"), ("c", "l2"), ("c", "l3")],
                ),
                "NotMinimal",
            ),
        ];
        for (input, kind) in cases {
            assert_eq!(validate_graph(&input).unwrap_err().kind(), kind, "{input:?}");
        }
    }

    #[test]
    fn text_and_json_agree() {
        let text = "# A2\nb 2\na 2\nedge a b\n";
        let json = r#"{"vertices":[{"id":"a","weight":2},{"id":"b","weight":"2"}],"edges":[["a","b"]]}"#;
        let g1 = validate_graph(&RawGraph::parse(text).unwrap()).unwrap();
        let g2 = validate_graph(&RawGraph::parse(json).unwrap()).unwrap();
        assert_eq!(g1, g2);
        assert!(RawGraph::parse("a two\n").is_err());
        assert!(RawGraph::parse("edge a\n").is_err());
    }

    #[test]
    fn a2_pivots() {
        let g = validate_graph(&raw(&[("a", 2), ("b", 2)], &[("a", "b")])).unwrap();
        let form = intersection_form(&g).unwrap();
        assert_eq!(form.to_dense(), vec![vec![-2, 1], vec![1, -2]]);
        let p: Vec<Rational> = form.pivots().into_iter().cloned().collect();
        assert_eq!(p, vec![r(-2, 1), r(-3, 2)]);
        assert_eq!(form.discriminant(), BigInt::from(3));
    }

    #[test]
    fn canonical_cycle_of_cone() {
        for n in 2..9 {
            let g = validate_graph(&raw(&[("x", n)], &[])).unwrap();
            let zk = canonical_cycle(&intersection_form(&g).unwrap()).unwrap();
            assert_eq!(zk.coefficient(0), &r(-(n - 2), n));
        }
    }

    #[test]
    fn ade_canonical_cycle_vanishes() {
        let g = validate_graph(&raw(
            &[("a", 2), ("b", 2), ("c", 2), ("d", 2)],
            &[("a", "b"), ("b", "c"), ("c", "d")],
        ))
        .unwrap();
        let zk = canonical_cycle(&intersection_form(&g).unwrap()).unwrap();
        assert!(zk.coefficients().iter().all(Zero::is_zero));
    }

    #[test]
    fn a3_fundamental_cycle() {
        let g = validate_graph(&raw(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b"), ("b", "c")])).unwrap();
        let z = fundamental_cycle(&g);
        let dots: Vec<Rational> = (0..3).map(|v| z.dot_curve(v)).collect();
        assert_eq!(dots, vec![r(-1, 1), r(0, 1), r(-1, 1)]);
    }

    #[test]
    fn pair_mismatch_and_zero() {
        let g1 = validate_graph(&raw(&[("a", 2)], &[])).unwrap();
        let g2 = validate_graph(&raw(&[("a", 3)], &[])).unwrap();
        let z = fundamental_cycle(&g1);
        assert_eq!(pair(&Cycle::zero(&g1), &z).unwrap(), Rational::zero());
        assert_eq!(pair(&z, &fundamental_cycle(&g2)), Err(GraphError::GraphMismatch));
    }
}
