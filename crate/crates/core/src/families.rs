//! Standard graph families and their closed-form discriminants.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::discriminant::{BranchKind, ClassShape};
use crate::graph::{validate_graph, GraphError, RawGraph, RawVertex, ResolutionGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad family parameters: {0}")]
    BadParameters(String),
    #[error("no closed-form discriminant for {0}")]
    UnsupportedFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl FamilyError {
    pub fn kind(&self) -> &'static str {
        match self {
            FamilyError::BadParameters(_) => "BadParameters",
            FamilyError::UnsupportedFamily(_) => "UnsupportedFamily",
            FamilyError::Graph(e) => e.kind(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// chain of `n` (-2)-curves
    AnChain(u32),
    /// one curve of weight `n`: the cone over the rational normal curve of degree `n`
    ConeRnc(u32),
    /// Hirzebruch–Jung chain of `n/q`
    CyclicQuotient(u32, u32),
    /// arms of (-2)-curves of the given lengths around a centre of weight `max(2, #arms)`
    Star(Vec<u32>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::AnChain(n) => write!(f, "an {n}"),
            FamilySpec::ConeRnc(n) => write!(f, "cone {n}"),
            FamilySpec::CyclicQuotient(n, q) => write!(f, "cyclic {n} {q}"),
            FamilySpec::Star(arms) => {
                let arms: Vec<String> = arms.iter().map(u32::to_string).collect();
                write!(f, "star {}", arms.join(","))
            }
        }
    }
}

/// Hirzebruch–Jung continued fraction `n/q = b_1 - 1/(b_2 - 1/(...))`.
pub fn hj_expand(n: u64, q: u64) -> Result<Vec<u64>, FamilyError> {
    if q == 0 || q >= n || n.gcd(&q) != 1 {
        return Err(FamilyError::BadParameters(format!(
            "need 0 < q < n with gcd(n, q) = 1, got n = {n}, q = {q}"
        )));
    }
    let (mut n, mut q) = (n, q);
    let mut out = Vec::new();
    while q > 0 {
        let b = n.div_ceil(q);
        out.push(b);
        (n, q) = (q, b * q - n);
    }
    Ok(out)
}

/// The weights of the chain, or of the centre followed by the arms.
fn chain_weights(spec: &FamilySpec) -> Result<Vec<u64>, FamilyError> {
    match *spec {
        FamilySpec::AnChain(n) if n >= 1 => Ok(vec![2; n as usize]),
        FamilySpec::ConeRnc(n) if n >= 2 => Ok(vec![n as u64]),
        FamilySpec::CyclicQuotient(n, q) => hj_expand(n as u64, q as u64),
        _ => Err(FamilyError::BadParameters(spec.to_string())),
    }
}

fn padded(prefix: &str, i: usize, count: usize) -> String {
    let width = count.to_string().len();
    format!("{prefix}{i:0width$}")
}

pub fn generate(spec: &FamilySpec) -> Result<ResolutionGraph, FamilyError> {
    validate_graph(&generate_raw(spec)?).map_err(FamilyError::from)
}

pub fn generate_raw(spec: &FamilySpec) -> Result<RawGraph, FamilyError> {
    let mut raw = RawGraph {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    if let FamilySpec::Star(arms) = spec {
        if arms.is_empty() || arms.contains(&0) {
            return Err(FamilyError::BadParameters(spec.to_string()));
        }
        raw.vertices.push(RawVertex {
            id: "c".into(),
            weight: arms.len().max(2) as i64,
        });
        for (a, &len) in arms.iter().enumerate() {
            let arm = padded("a", a + 1, arms.len());
            let mut prev = "c".to_string();
            for j in 1..=len as usize {
                let id = format!("{arm}_{}", padded("", j, len as usize));
                raw.vertices.push(RawVertex {
                    id: id.clone(),
                    weight: 2,
                });
                raw.edges.push((prev, id.clone()));
                prev = id;
            }
        }
        return Ok(raw);
    }
    let weights = chain_weights(spec)?;
    let k = weights.len();
    for (i, &w) in weights.iter().enumerate() {
        let id = padded("v", i + 1, k);
        if i > 0 {
            raw.edges.push((padded("v", i, k), id.clone()));
        }
        raw.vertices.push(RawVertex { id, weight: w as i64 });
    }
    Ok(raw)
}

fn a_class(l: u64) -> Vec<BranchKind> {
    if l.is_multiple_of(2) {
        vec![BranchKind::Cusp { depth: (l / 2) as u32 }]
    } else {
        vec![BranchKind::Smooth; 2]
    }
}

/// Assemble disjoint blocks with contact one across blocks.
fn blocks_to_shape(blocks: Vec<(Vec<BranchKind>, u32)>) -> ClassShape {
    let mut kinds = Vec::new();
    let mut block_of = Vec::new();
    let mut inner = Vec::new();
    for (b, (ks, c)) in blocks.into_iter().enumerate() {
        for k in ks {
            kinds.push(k);
            block_of.push(b);
        }
        inner.push(c);
    }
    let n = kinds.len();
    let contacts = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match () {
                    _ if i == j => 0,
                    _ if block_of[i] == block_of[j] => inner[block_of[i]],
                    _ => 1,
                })
                .collect()
        })
        .collect();
    ClassShape::new(kinds, contacts)
}

/// The discriminant of a chain read off its weights: lines on each
/// non-Tyurina curve, an `A_l` block between consecutive ones.
fn chain_class(weights: &[u64]) -> ClassShape {
    let k = weights.len();
    let mut blocks = Vec::new();
    if k == 1 {
        blocks.push((vec![BranchKind::Smooth; 2 * weights[0] as usize - 2], 1));
        return blocks_to_shape(blocks);
    }
    let valence = |i: usize| if i == 0 || i == k - 1 { 1 } else { 2 };
    let nt: Vec<usize> = (0..k).filter(|&i| weights[i] > valence(i)).collect();
    for &i in &nt {
        let lines = 2 * weights[i] as usize - if valence(i) == 1 { 4 } else { 6 };
        blocks.push((vec![BranchKind::Smooth; lines], 1));
    }
    for pair in nt.windows(2) {
        let l = (pair[1] - pair[0] + 1) as u64;
        blocks.push((a_class(l), l.div_ceil(2) as u32));
    }
    blocks_to_shape(blocks)
}

/// Closed-form class for chains and cones.
pub fn expected_discriminant(spec: &FamilySpec) -> Result<ClassShape, FamilyError> {
    match spec {
        FamilySpec::Star(_) => Err(FamilyError::UnsupportedFamily(spec.to_string())),
        FamilySpec::AnChain(n) if *n >= 1 => Ok(blocks_to_shape(vec![(a_class(*n as u64), u32::div_ceil(*n, 2))])),
        FamilySpec::ConeRnc(n) if *n >= 2 => Ok(blocks_to_shape(vec![(
            vec![BranchKind::Smooth; 2 * *n as usize - 2],
            1,
        )])),
        _ => Ok(chain_class(&chain_weights(spec)?)),
    }
}
