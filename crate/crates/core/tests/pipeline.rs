mod common;

use std::collections::BTreeMap;

use minsing::discriminant::{emit_representative, BranchKind, Support};
use minsing::families::{generate, hj_expand, FamilySpec};
use minsing::graph::{intersection_form, pair, validate_graph, Cycle, RawGraph};
use minsing::oracle::{multiplicity_sequence, oracle_class, oracle_intersection, parse_binomial_product};
use minsing::report::{AnalysisReport, DiscriminantReport};
use minsing::{analyze, Analysis, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn analyze_text(src: &str) -> Analysis {
    analyze(&validate_graph(&RawGraph::parse(src).unwrap()).unwrap()).unwrap()
}

fn by_id<T: Copy>(a: &Analysis, values: impl Fn(usize) -> T) -> BTreeMap<String, T> {
    (0..a.graph.len())
        .map(|v| (a.graph.id(v).to_string(), values(v)))
        .collect()
}

fn named(pairs: &[(&str, u32)]) -> BTreeMap<String, u32> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[test]
fn sample_graph_depths_and_central_elements() {
    let a = analyze(&common::sample_graph()).unwrap();
    let g = &a.graph;
    assert_eq!(
        by_id(&a, |v| a.depths.depth(v)),
        named(&[
            ("x1", 1),
            ("a", 2),
            ("b", 2),
            ("x2", 1),
            ("c", 2),
            ("x3", 1),
            ("d", 3),
            ("e", 2),
            ("x4", 1)
        ])
    );
    let mut components: Vec<Vec<&str>> = a
        .depths
        .tyurina_components()
        .iter()
        .map(|c| {
            let mut ids: Vec<&str> = c.iter().map(|&v| g.id(v)).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    components.sort();
    assert_eq!(components, vec![vec!["a", "b", "d", "e"], vec!["c"]]);
    let mut central: Vec<&str> = a.depths.central_vertices().iter().map(|&v| g.id(v)).collect();
    central.sort_unstable();
    assert_eq!(central, ["c", "d"]);
    let arcs: Vec<(&str, &str)> = a
        .depths
        .central_arcs()
        .iter()
        .map(|&(x, y)| (g.id(x), g.id(y)))
        .collect();
    assert_eq!(arcs, [("a", "b")]);
}

#[test]
fn sample_graph_branch_counts() {
    let a = analyze(&common::sample_graph()).unwrap();
    assert_eq!(
        by_id(&a, |v| a.counts.m[v]),
        named(&[
            ("x1", 4),
            ("a", 1),
            ("b", 1),
            ("x2", 0),
            ("c", 2),
            ("x3", 0),
            ("d", 2),
            ("e", 0),
            ("x4", 0)
        ])
    );
    let x1 = Cycle::basis(&a.graph, a.graph.index_of("x1").unwrap());
    assert_eq!(pair(a.omega(), &x1).unwrap(), q(-4, 1));
}

#[test]
fn sample_graph_pairings() {
    let a = analyze(&common::sample_graph()).unwrap();
    let z = &a.fundamental;
    assert_eq!(pair(z, z).unwrap(), q(-6, 1));
    assert_eq!(pair(z, &a.canonical).unwrap(), q(4, 1));
    assert_eq!(pair(&Cycle::zero(&a.graph), z).unwrap(), q(0, 1));
    let b = Cycle::basis(&a.graph, a.graph.index_of("b").unwrap());
    assert_eq!(pair(&a.canonical, &b).unwrap(), q(1, 1));
    assert_eq!(z.dot_curve(a.graph.index_of("x1").unwrap()), q(-3, 1));
    assert!(a.form.is_negative_definite());
    assert_eq!(a.form.size(), 9);
}

#[test]
fn sample_graph_delta_matches_the_literal_curve() {
    let a = analyze(&common::sample_graph()).unwrap();
    let branches = parse_binomial_product("(x^4+y^4)(x^2+y^6)(x^2+y^5)(y^2+x^4)", 40).unwrap();
    let mut delta = 0u64;
    for b in &branches {
        let seq = multiplicity_sequence(b, 12).unwrap();
        delta += seq.iter().map(|&m| (m * (m - 1) / 2) as u64).sum::<u64>();
    }
    for i in 0..branches.len() {
        for j in i + 1..branches.len() {
            delta += oracle_intersection(&branches[i], &branches[j]).unwrap();
        }
    }
    let inv = a.class.invariants();
    assert_eq!(inv.delta, delta as i64);
    assert_eq!(inv.milnor, 2 * delta as i64 - branches.len() as i64 + 1);
}

#[test]
fn sample_graph_representative_verifies() {
    let a = analyze(&common::sample_graph()).unwrap();
    let rep = emit_representative(&a.class).unwrap();
    assert!(rep.verification.is_match());
    assert_eq!(rep.verification.pairs_checked, 36);
    let literal = parse_binomial_product("(x^4+y^4)(x^2+y^6)(x^2+y^5)(y^2+x^4)", rep.truncation).unwrap();
    assert!(oracle_class(&literal).unwrap().shape().equivalent(&a.class.shape()));
}

#[test]
fn small_graphs() {
    let a1 = analyze_text("v 2\n");
    assert_eq!(a1.class.branches().len(), 2);
    assert_eq!(a1.class.contacts().get(0, 1), 1);

    let a2 = analyze_text("p 2\nq 2\nedge p q\n");
    assert_eq!(a2.depths.depths(), [1, 1]);
    assert_eq!(a2.depths.central_arcs(), [(0, 1)]);
    assert_eq!(a2.class.branches().len(), 1);
    assert_eq!(a2.class.branches()[0].char_exponents(), vec![2, 3]);
    let pivots: Vec<Rational> = a2.form.pivots().into_iter().cloned().collect();
    assert_eq!(pivots, vec![q(-2, 1), q(-3, 2)]);

    let a3 = analyze_text("x1 2\nt 2\nx2 2\nedge x1 t\nedge t x2\n");
    let t = a3.graph.index_of("t").unwrap();
    assert_eq!(a3.depths.depth(t), 2);
    assert!(a3.depths.is_central(t));
    assert!(a3.depths.central_arcs().is_empty());
    assert_eq!(by_id(&a3, |v| a3.counts.m[v]), named(&[("x1", 0), ("t", 2), ("x2", 0)]));
    assert!(a3.canonical.coefficients().iter().all(|c| *c == q(0, 1)));
    for (id, expected) in [("x1", -1), ("t", 0), ("x2", -1)] {
        assert_eq!(a3.fundamental.dot_curve(a3.graph.index_of(id).unwrap()), q(expected, 1));
    }
}

#[test]
fn single_vertex_cycles() {
    for n in 2..12i64 {
        let a = analyze_text(&format!("v {n}\n"));
        assert_eq!(a.form.to_dense(), vec![vec![-n]]);
        assert_eq!(a.canonical.coefficients(), [q(-(n - 2), n)]);
        assert_eq!(a.omega().coefficients(), [q(2 * n - 2, n)]);
        assert_eq!(a.counts.m, vec![2 * n as u32 - 2]);
        let inv = a.class.invariants();
        assert_eq!((inv.e_delta, inv.n_b, inv.n_bs), (2 * n - 2, 2 * n - 2, 0));
    }
}

#[test]
fn validation_failures() {
    let cases = [
        ("a 2\nb 2\nedge a b\nedge a b\n", "MalformedInput"),
        ("a 2\nb 2\nc 2\nedge a b\nedge b c\nedge c a\n", "NotATree"),
        ("a 2\nb 2\n", "NotATree"),
        ("a 1\nb 2\nedge a b\n", "NotMinimalResolution"),
        ("c 2\na 2\nb 2\nd 2\nedge c a\nedge c b\nedge c d\n", "NotMinimal"),
        ("a 0\n", "MalformedInput"),
    ];
    for (src, kind) in cases {
        let err = RawGraph::parse(src).and_then(|raw| validate_graph(&raw)).unwrap_err();
        assert_eq!(err.kind(), kind, "{src}");
    }
}

#[test]
fn family_examples() {
    let weights = |spec: FamilySpec| {
        let g = generate(&spec).unwrap();
        (0..g.len()).map(|v| g.weight(v)).collect::<Vec<_>>()
    };
    assert_eq!(weights(FamilySpec::AnChain(3)), [2, 2, 2]);
    assert_eq!(weights(FamilySpec::ConeRnc(4)), [4]);
    assert_eq!(weights(FamilySpec::CyclicQuotient(7, 3)), [3, 2, 2]);
    assert_eq!(hj_expand(7, 3).unwrap(), [3, 2, 2]);

    let a = analyze(&generate(&FamilySpec::CyclicQuotient(7, 3)).unwrap()).unwrap();
    assert_eq!(a.class.shape().canonical_form(), "1[1,1,2[1,1]]");
    let a = analyze(&generate(&FamilySpec::AnChain(4)).unwrap()).unwrap();
    assert_eq!(a.class.shape().canonical_form(), "(2,5)");
    let a = analyze(&generate(&FamilySpec::ConeRnc(3)).unwrap()).unwrap();
    assert_eq!(a.class.shape().canonical_form(), "1[1,1,1,1]");
}

#[test]
fn a3_representative_is_a_tacnode() {
    let a = analyze(&generate(&FamilySpec::AnChain(3)).unwrap()).unwrap();
    let rep = emit_representative(&a.class).unwrap();
    assert_eq!(rep.branches.len(), 2);
    assert!(rep.branches.iter().all(|b| b.kind == BranchKind::Smooth));
    assert_eq!(rep.oracle.contacts[0][1], 2);
}

#[test]
fn cusps_sit_on_central_arcs() {
    for g in common::random_corpus(7, 60) {
        let a = analyze(&g).unwrap();
        let arcs = a.depths.central_arcs();
        for b in a.class.branches() {
            match b.support {
                Support::Arc(x, y) => {
                    assert!(arcs.contains(&(x, y)));
                    assert_eq!(
                        b.kind,
                        BranchKind::Cusp {
                            depth: a.depths.depth(x)
                        }
                    );
                }
                Support::Vertex(_) => assert_eq!(b.kind, BranchKind::Smooth),
            }
        }
        let cusps = a
            .class
            .branches()
            .iter()
            .filter(|b| b.kind != BranchKind::Smooth)
            .count();
        assert_eq!(cusps, arcs.len());
    }
}

#[test]
#[allow(clippy::needless_range_loop)]
fn intersection_form_matches_weights() {
    let g = common::sample_graph();
    let form = intersection_form(&g).unwrap();
    let dense = form.to_dense();
    for i in 0..g.len() {
        assert_eq!(dense[i][i], -(g.weight(i) as i64));
        for j in 0..g.len() {
            if i != j {
                assert_eq!(dense[i][j], g.are_adjacent(i, j) as i64);
            }
        }
    }
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let a = analyze(&common::sample_graph()).unwrap();
    let rep = emit_representative(&a.class).unwrap();
    let report = DiscriminantReport::new(&a, Some(&rep));
    let json = report.to_json();
    let back = DiscriminantReport::from_json(&json).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.to_json(), json);
    assert_eq!(back.invariants.e_delta, "10");
    assert_eq!(back.invariants.n_b, "9");

    let again = analyze(&common::sample_graph()).unwrap();
    let rep2 = emit_representative(&again.class).unwrap();
    assert_eq!(DiscriminantReport::new(&again, Some(&rep2)).to_json(), json);
    assert_eq!(AnalysisReport::new(&again).to_json(), AnalysisReport::new(&a).to_json());

    let emitted = back.representative.unwrap().emitted_branches().unwrap();
    assert_eq!(emitted, rep.branches);
}

#[test]
fn tampered_report_is_detected() {
    let a = analyze(&common::sample_graph()).unwrap();
    let fresh = DiscriminantReport::new(&a, None);
    let mut tampered = fresh.clone();
    tampered.contacts[0][2] = "5".into();
    assert!(tampered.first_difference(&fresh).is_some());
    assert!(fresh.first_difference(&fresh.clone()).is_none());
}

#[test]
fn cyclic_quotients_up_to_500() {
    use minsing::families::expected_discriminant;
    use num_integer::Integer;
    for n in 2..=500u32 {
        for q in (1..n).filter(|q| q.gcd(&n) == 1) {
            let spec = FamilySpec::CyclicQuotient(n, q);
            let a = analyze(&generate(&spec).unwrap()).unwrap();
            assert!(
                a.class.shape().equivalent(&expected_discriminant(&spec).unwrap()),
                "{n}/{q}"
            );
        }
    }
}
