//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use minsing::depth::census_branch_count;
use minsing::discriminant::{emit_representative, BranchKind, Support};
use minsing::families::{expected_discriminant, generate, FamilySpec};
use minsing::graph::{pair, Cycle};
use minsing::oracle::{oracle_class, parse_binomial_product, smooth_difference_order, verify_class};
use minsing::{analyze, Analysis, Rational};
use num_integer::Integer;

const SAMPLE_PRODUCT: &str = "(x^4+y^4)(x^2+y^6)(x^2+y^5)(y^2+x^4)";

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < budget, || {
        format!("{what} took {elapsed:.3?}, budget {budget:?}")
    })
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn contact_by_id(a: &Analysis, x: &str, y: &str) -> u32 {
    a.class
        .contacts()
        .by_id(x, y)
        .unwrap_or_else(|| panic!("no contact for {x}, {y}"))
}

fn criterion_1() -> Outcome {
    let g = common::sample_graph();
    let start = Instant::now();
    let a = analyze(&g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let branches = a.class.branches();
    ensure(branches.len() == 9, || {
        format!("{} branches, expected 9", branches.len())
    })?;
    let at_vertex = |id: &str| -> Vec<&str> {
        let v = g.index_of(id).unwrap();
        branches
            .iter()
            .filter(|b| b.support == Support::Vertex(v) && b.kind == BranchKind::Smooth)
            .map(|b| b.id.as_str())
            .collect()
    };
    let (x1, d, c) = (at_vertex("x1"), at_vertex("d"), at_vertex("c"));
    ensure(x1.len() == 4 && d.len() == 2 && c.len() == 2, || {
        format!("smooth counts x1 {}, d {}, c {}", x1.len(), d.len(), c.len())
    })?;
    let (ia, ib) = (g.index_of("a").unwrap(), g.index_of("b").unwrap());
    let cusps: Vec<_> = branches.iter().filter(|b| b.kind != BranchKind::Smooth).collect();
    ensure(cusps.len() == 1, || format!("{} singular branches", cusps.len()))?;
    let cusp = cusps[0];
    ensure(
        cusp.support == Support::Arc(ia.min(ib), ia.max(ib)) && cusp.char_exponents() == vec![2, 5],
        || {
            format!(
                "singular branch {} is {:?} with {:?}",
                cusp.id,
                cusp.support,
                cusp.char_exponents()
            )
        },
    )?;

    for (group, expected) in [(&x1, 1), (&d, 3), (&c, 2)] {
        for i in 0..group.len() {
            for j in i + 1..group.len() {
                let got = contact_by_id(&a, group[i], group[j]);
                ensure(got == expected, || {
                    format!("contact({}, {}) = {got}, expected {expected}", group[i], group[j])
                })?;
            }
        }
    }
    for id in &d {
        let got = contact_by_id(&a, &cusp.id, id);
        ensure(got == 3, || format!("contact({}, {id}) = {got}, expected 3", cusp.id))?;
    }
    let same_block = |p: &str, q: &str| {
        let block = |s: &str| -> String {
            if d.contains(&s) || s == cusp.id {
                "d".into()
            } else if c.contains(&s) {
                "c".into()
            } else {
                s.into()
            }
        };
        block(p) == block(q)
    };
    for (i, j, value) in a.class.contacts().pairs() {
        let (p, q) = (branches[i].id.as_str(), branches[j].id.as_str());
        if !same_block(p, q) {
            ensure(value == 1, || format!("cross contact({p}, {q}) = {value}, expected 1"))?;
        }
    }

    let inv = a.class.invariants();
    let got = (inv.e_delta, inv.n_b, inv.n_bs, inv.e_surface, inv.mu_section);
    ensure(got == (10, 9, 1, 6, 5), || {
        format!("(e_delta, n_b, n_bs, e_surface, mu_section) = {got:?}")
    })?;
    within(elapsed, Duration::from_millis(100), "analysis")?;
    Ok(format!("9 branches, invariants match, {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let a = analyze(&common::sample_graph()).map_err(|e| e.to_string())?;
    let rep = emit_representative(&a.class).map_err(|e| e.to_string())?;
    ensure(rep.verification.is_match(), || {
        format!("{:?}", rep.verification.discrepancy)
    })?;
    let literal = parse_binomial_product(SAMPLE_PRODUCT, rep.truncation).map_err(|e| e.to_string())?;
    let theirs = oracle_class(&literal).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let (ours, theirs) = (rep.oracle.shape(), theirs.shape());
    ensure(ours.equivalent(&theirs), || {
        format!(
            "emitted {} but literal {}",
            ours.canonical_form(),
            theirs.canonical_form()
        )
    })?;
    within(elapsed, Duration::from_secs(1), "equivalence check")?;
    Ok(format!("both {} in {elapsed:.2?}", ours.canonical_form()))
}

fn criterion_3() -> Outcome {
    for n in 1..=50u32 {
        let a = analyze(&generate(&FamilySpec::AnChain(n)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let kinds: Vec<BranchKind> = a.class.branches().iter().map(|b| b.kind).collect();
        if n % 2 == 0 {
            ensure(kinds.len() == 1 && kinds[0].char_exponents() == vec![2, n + 1], || {
                format!("A_{n}: {kinds:?}")
            })?;
        } else {
            ensure(kinds == vec![BranchKind::Smooth; 2], || format!("A_{n}: {kinds:?}"))?;
            let c = a.class.contacts().get(0, 1);
            ensure(c == n.div_ceil(2), || format!("A_{n}: contact {c}"))?;
        }
        let e = a.class.invariants().e_delta;
        ensure(e == 2, || format!("A_{n}: e_delta {e}"))?;
    }
    Ok("A_1..A_50".into())
}

fn criterion_4() -> Outcome {
    for n in 2..=50u32 {
        let a = analyze(&generate(&FamilySpec::ConeRnc(n)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let b = a.class.branches();
        ensure(b.len() == 2 * n as usize - 2, || {
            format!("cone {n}: {} branches", b.len())
        })?;
        ensure(b.iter().all(|b| b.kind == BranchKind::Smooth), || {
            format!("cone {n}: singular branch")
        })?;
        ensure(a.class.contacts().pairs().all(|(_, _, c)| c == 1), || {
            format!("cone {n}: contact above 1")
        })?;
    }
    Ok("cones 2..50".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 2..=200u32 {
        for q in (1..n).filter(|q| q.gcd(&n) == 1) {
            let spec = FamilySpec::CyclicQuotient(n, q);
            let g = generate(&spec).map_err(|e| e.to_string())?;
            let a = analyze(&g).map_err(|e| format!("{n}/{q}: {e}"))?;
            let expected = expected_discriminant(&spec).map_err(|e| e.to_string())?;
            let shape = a.class.shape();
            ensure(shape.equivalent(&expected), || {
                format!(
                    "{n}/{q}: got {}, expected {}",
                    shape.canonical_form(),
                    expected.canonical_form()
                )
            })?;
            // lines at each non-Tyurina vertex: 2w - 4 at an end, 2w - 6 inside
            for v in 0..g.len() {
                if !g.is_non_tyurina(v) {
                    continue;
                }
                let lines = a
                    .class
                    .branches()
                    .iter()
                    .filter(|b| b.support == Support::Vertex(v) && b.kind == BranchKind::Smooth)
                    .count() as i64;
                let expected = 2 * (g.weight(v) as i64 - g.valence(v) as i64) - 2;
                ensure(lines == expected, || {
                    format!("{n}/{q}: {} lines at {}, expected {expected}", lines, g.id(v))
                })?;
            }
            // branches on different vertices or arcs meet with contact one
            let b = a.class.branches();
            for (i, j, c) in a.class.contacts().pairs() {
                if b[i].support != b[j].support {
                    ensure(c == 1, || format!("{n}/{q}: contact({}, {}) = {c}", b[i].id, b[j].id))?;
                }
            }
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60), "cyclic sweep")?;
    Ok(format!("{count} pairs (n, q) in {elapsed:.2?}"))
}

fn is_ultrametric(rows: &[Vec<u32>]) -> bool {
    let n = rows.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut t = [rows[i][j], rows[i][k], rows[j][k]];
                t.sort_unstable();
                if t[0] != t[1] {
                    return false;
                }
            }
        }
    }
    true
}

fn check_identities(a: &Analysis) -> Result<(), String> {
    let g = &a.graph;
    let z = Cycle::from_integers(g, &vec![1; g.len()]).map_err(|e| e.to_string())?;
    let zz = pair(&z, &z).map_err(|e| e.to_string())?;
    let zk = pair(&z, &a.canonical).map_err(|e| e.to_string())?;
    let zo = pair(&z, a.omega()).map_err(|e| e.to_string())?;
    let b = a.class.branches();
    let e_delta: i64 = b.iter().map(|b| b.multiplicity() as i64).sum();
    let n_b = b.len() as i64;
    let n_bs = b.iter().filter(|b| b.kind != BranchKind::Smooth).count() as i64;
    let e_surface = -zz;
    let mu_section = int(1) + zk;
    ensure(n_b == e_delta - n_bs, || format!("E2: {n_b} != {e_delta} - {n_bs}"))?;
    ensure(int(n_b) == -zo - int(n_bs), || format!("E3 fails, n_b = {n_b}"))?;
    ensure(int(e_delta) == &mu_section - int(1) + &e_surface, || {
        format!("E4: {e_delta} != {mu_section} - 1 + {e_surface}")
    })?;
    let inv = a.class.invariants();
    ensure(
        (inv.e_delta, inv.n_b, inv.n_bs) == (e_delta, n_b, n_bs)
            && int(inv.e_surface) == e_surface
            && int(inv.mu_section) == mu_section,
        || format!("reported invariants {inv:?} disagree with the branch list"),
    )?;
    // E1: each polar point on L_x is a smooth branch at x or one end of a cusp's arc
    let polar_points: i64 = a.counts.m.iter().map(|&m| m as i64).sum();
    ensure(polar_points == e_delta, || {
        format!("E1: {polar_points} polar points, e_delta {e_delta}")
    })?;

    for v in 0..g.len() {
        let from_pair = -pair(a.omega(), &Cycle::basis(g, v)).map_err(|e| e.to_string())?;
        let closed = census_branch_count(g, &a.depths, v);
        ensure(from_pair == int(closed), || {
            format!("m({}) = {from_pair} by pairing, {closed} by census", g.id(v))
        })?;
        let residual =
            pair(&a.canonical, &Cycle::basis(g, v)).map_err(|e| e.to_string())? - int(g.weight(v) as i64 - 2);
        ensure(residual == int(0), || {
            format!("canonical residual {residual} at {}", g.id(v))
        })?;
    }
    ensure(is_ultrametric(a.class.contacts().rows()), || {
        "contact matrix is not ultrametric".into()
    })
}

fn criterion_6(analyses: &[Analysis], elapsed: Duration) -> Outcome {
    let start = Instant::now();
    for (k, a) in analyses.iter().enumerate() {
        check_identities(a).map_err(|e| format!("tree {k}: {e}"))?;
    }
    let total = elapsed + start.elapsed();
    within(total, Duration::from_secs(30), "identity suite")?;
    Ok(format!("{} trees in {total:.2?}", analyses.len()))
}

fn criterion_7(analyses: &[Analysis]) -> Outcome {
    let mut pairs = 0usize;
    let mut smooth_pairs = 0usize;
    for (k, a) in analyses.iter().enumerate() {
        let rep = emit_representative(&a.class).map_err(|e| format!("tree {k}: {}: {e}", e.kind()))?;
        let again = verify_class(&rep.oracle, &a.class);
        ensure(again.is_match(), || format!("tree {k}: {}", again.discrepancy.unwrap()))?;
        pairs += again.pairs_checked;
        let params = rep.param_branches();
        for i in 0..params.len() {
            for j in i + 1..params.len() {
                if rep.oracle.kinds[i] == BranchKind::Smooth && rep.oracle.kinds[j] == BranchKind::Smooth {
                    let d = smooth_difference_order(&params[i], &params[j]).map_err(|e| e.to_string())?;
                    ensure(d == rep.oracle.contacts[i][j], || {
                        format!(
                            "tree {k}: {} / {}: blow-up {}, difference {d}",
                            params[i].id, params[j].id, rep.oracle.contacts[i][j]
                        )
                    })?;
                    smooth_pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} trees, {pairs} pairs agree, {smooth_pairs} smooth pairs checked",
        analyses.len()
    ))
}

fn report(n: usize, outcome: Result<Outcome, Box<dyn std::any::Any + Send>>) -> bool {
    let outcome = outcome.unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(msg)
    });
    match outcome {
        Ok(detail) => {
            println!("PASS criterion {n}: {detail}");
            true
        }
        Err(why) => {
            println!("FAIL criterion {n}: {why}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= report(1, catch_unwind(criterion_1));
    ok &= report(2, catch_unwind(criterion_2));
    ok &= report(3, catch_unwind(criterion_3));
    ok &= report(4, catch_unwind(criterion_4));
    ok &= report(5, catch_unwind(criterion_5));

    let corpus = common::random_corpus(common::CORPUS_SEED, common::CORPUS_SIZE);
    let start = Instant::now();
    let analyses: Result<Vec<Analysis>, String> = corpus
        .iter()
        .enumerate()
        .map(|(k, g)| analyze(g).map_err(|e| format!("tree {k}: {e}")))
        .collect();
    let elapsed = start.elapsed();
    match analyses {
        Ok(analyses) => {
            ok &= report(6, catch_unwind(AssertUnwindSafe(|| criterion_6(&analyses, elapsed))));
            ok &= report(7, catch_unwind(AssertUnwindSafe(|| criterion_7(&analyses))));
        }
        Err(e) => {
            ok &= report(6, Ok(Err(e.clone())));
            ok &= report(7, Ok(Err(e)));
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
