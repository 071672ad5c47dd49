//! Pairwise contacts of the discriminant's branches.
//!
//! Stage `k` of the filtration keeps the vertices of depth at least
//! `max(2, k + 1)`. Two supports stay together while they lie in one
//! connected piece of the current stage; the first stage that separates
//! them, plus one, bounds their contact. A smooth branch on `L_u` never has
//! contact above `s_u` with anything, and two cusps of the same depth `s`
//! that are still together at stage `s - 1` share the satellite point after
//! their last double point, so their contact is `s + 2`.

use super::{Branch, BranchKind, DiscriminantError};
use crate::depth::DepthProfile;

#[derive(Debug, Clone)]
pub struct StageFiltration {
    /// `labels[k][v]`: component of `v` in stage `k`, if present
    labels: Vec<Vec<Option<u32>>>,
}

impl StageFiltration {
    pub fn new(depths: &DepthProfile) -> StageFiltration {
        let g = depths.graph();
        let max = depths.max_depth();
        let mut labels = Vec::with_capacity(max as usize + 1);
        for k in 0..=max {
            let floor = (k + 1).max(2);
            let mut label: Vec<Option<u32>> = vec![None; g.len()];
            let mut next = 0;
            for start in 0..g.len() {
                if label[start].is_some() || depths.depth(start) < floor {
                    continue;
                }
                let mut stack = vec![start];
                label[start] = Some(next);
                while let Some(v) = stack.pop() {
                    for &u in g.neighbors(v) {
                        if label[u].is_none() && depths.depth(u) >= floor {
                            label[u] = Some(next);
                            stack.push(u);
                        }
                    }
                }
                next += 1;
            }
            labels.push(label);
        }
        StageFiltration { labels }
    }

    pub fn stages(&self) -> usize {
        self.labels.len()
    }

    /// Whether every vertex lies in one connected piece of stage `k`.
    pub fn together(&self, k: usize, vertices: &[usize]) -> bool {
        let Some(label) = self.labels.get(k) else {
            return false;
        };
        let first = label[vertices[0]];
        first.is_some() && vertices.iter().all(|&v| label[v] == first)
    }

    /// `1 + N`, `N` the first stage at which the vertices come apart.
    pub fn separation(&self, vertices: &[usize]) -> u32 {
        let n = (0..self.labels.len())
            .find(|&k| !self.together(k, vertices))
            .unwrap_or(self.labels.len());
        1 + n as u32
    }
}

pub fn contact(b1: &Branch, b2: &Branch, filtration: &StageFiltration) -> u32 {
    let vertices: Vec<usize> = b1.support.vertices().chain(b2.support.vertices()).collect();
    let together = filtration.separation(&vertices);
    let mut c = together;
    for b in [b1, b2] {
        if b.kind == BranchKind::Smooth {
            c = c.min(b.depth);
        }
    }
    if let (BranchKind::Cusp { depth: s }, BranchKind::Cusp { depth: t }) = (b1.kind, b2.kind) {
        if s == t && together == s + 1 {
            c = s + 2;
        }
    }
    c
}

/// Symmetric contact matrix indexed like the branch list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactMatrix {
    ids: Vec<String>,
    values: Vec<Vec<u32>>,
}

impl ContactMatrix {
    pub fn from_rows(ids: Vec<String>, values: Vec<Vec<u32>>) -> ContactMatrix {
        ContactMatrix { ids, values }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    /// Contact of branches `i != j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.values[i][j]
    }

    pub fn by_id(&self, a: &str, b: &str) -> Option<u32> {
        let i = self.ids.iter().position(|x| x == a)?;
        let j = self.ids.iter().position(|x| x == b)?;
        (i != j).then(|| self.values[i][j])
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.values
    }

    /// `(i, j, contact)` for `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.values[i][j])))
    }

    pub fn max(&self) -> Option<u32> {
        self.pairs().map(|p| p.2).max()
    }

    /// A triple `(i, j, k)` with `c(i,k) < min(c(i,j), c(j,k))`, if any.
    ///
    /// Runs in quadratic time: the contacts are ultrametric exactly when
    /// each one equals the smallest contact along the path joining its
    /// branches in a maximum spanning tree.
    #[allow(clippy::needless_range_loop)]
    pub fn ultrametric_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        if n < 3 {
            return None;
        }
        // Prim's algorithm on the complete graph weighted by contact
        let mut in_tree = vec![false; n];
        let mut best = vec![(0u32, 0usize); n];
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
        in_tree[0] = true;
        for (v, b) in best.iter_mut().enumerate().skip(1) {
            *b = (self.values[0][v], 0);
        }
        for _ in 1..n {
            let v = (0..n)
                .filter(|&v| !in_tree[v])
                .max_by_key(|&v| (best[v].0, std::cmp::Reverse(v)))?;
            let p = best[v].1;
            in_tree[v] = true;
            adjacency[v].push(p);
            adjacency[p].push(v);
            for u in 0..n {
                if !in_tree[u] && self.values[v][u] > best[u].0 {
                    best[u] = (self.values[v][u], v);
                }
            }
        }
        for i in 0..n {
            // path minima and tree parents from i
            let mut low = vec![u32::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut stack = vec![i];
            parent[i] = i;
            while let Some(v) = stack.pop() {
                for &u in &adjacency[v] {
                    if parent[u] == usize::MAX {
                        parent[u] = v;
                        low[u] = low[v].min(self.values[v][u]);
                        stack.push(u);
                    }
                }
            }
            for k in i + 1..n {
                if self.values[i][k] < low[k] {
                    let mut path = vec![k];
                    while *path.last().unwrap() != i {
                        path.push(parent[*path.last().unwrap()]);
                    }
                    path.reverse();
                    let t = (1..path.len()).find(|&t| self.values[i][path[t]] < low[k]).unwrap();
                    return Some((i, path[t - 1], path[t]));
                }
            }
        }
        None
    }
}

pub fn contact_matrix(branches: &[Branch], depths: &DepthProfile) -> Result<ContactMatrix, DiscriminantError> {
    let filtration = StageFiltration::new(depths);
    let n = branches.len();
    let mut values = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = contact(&branches[i], &branches[j], &filtration);
            values[i][j] = c;
            values[j][i] = c;
        }
    }
    let m = ContactMatrix {
        ids: branches.iter().map(|b| b.id.clone()).collect(),
        values,
    };
    if let Some((i, j, k)) = m.ultrametric_violation() {
        return Err(DiscriminantError::UltrametricViolation(
            m.ids[i].clone(),
            m.ids[j].clone(),
            m.ids[k].clone(),
        ));
    }
    Ok(m)
}

/// Noether's formula over the shared infinitely near points.
pub fn intersection_multiplicities(branches: &[Branch], contacts: &ContactMatrix) -> Vec<Vec<u64>> {
    let n = branches.len();
    let mut out = vec![vec![0u64; n]; n];
    for (i, j, c) in contacts.pairs() {
        let a = branches[i].kind.mult_sequence(c as usize);
        let b = branches[j].kind.mult_sequence(c as usize);
        let im: u64 = a.iter().zip(&b).map(|(&x, &y)| (x * y) as u64).sum();
        out[i][j] = im;
        out[j][i] = im;
    }
    out
}
