#![allow(dead_code)]

use minsing::graph::{validate_graph, RawGraph, RawVertex, ResolutionGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_0001;
pub const CORPUS_SIZE: usize = 1000;
pub const MAX_VERTICES: usize = 40;

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn sample_graph() -> ResolutionGraph {
    validate_graph(&RawGraph::parse(&fixture("sample.json")).unwrap()).unwrap()
}

/// Random tree on at most `max_vertices` vertices with `w >= max(2, valence)`;
/// most vertices get no excess weight so that Tyurina components are large.
pub fn random_minimal_raw(rng: &mut impl Rng, max_vertices: usize) -> RawGraph {
    let n = rng.gen_range(1..=max_vertices);
    let ids: Vec<String> = (0..n).map(|i| format!("n{i:02}")).collect();
    let mut valence = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for v in 1..n {
        let p = rng.gen_range(0..v);
        valence[v] += 1;
        valence[p] += 1;
        edges.push((ids[p].clone(), ids[v].clone()));
    }
    let vertices = (0..n)
        .map(|v| {
            let excess = match rng.gen_range(0..10) {
                0..=6 => 0,
                7 | 8 => 1,
                _ => 2,
            };
            RawVertex {
                id: ids[v].clone(),
                weight: (valence[v].max(2) + excess) as i64,
            }
        })
        .collect();
    RawGraph { vertices, edges }
}

pub fn random_corpus(seed: u64, count: usize) -> Vec<ResolutionGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| validate_graph(&random_minimal_raw(&mut rng, MAX_VERTICES)).expect("generator yields minimal trees"))
        .collect()
}
