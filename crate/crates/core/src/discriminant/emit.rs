//! A plane curve in the computed equisingularity class.
//!
//! Branches are placed along the contact tree: at depth `k` of the tree the
//! sub-clusters of a node receive distinct coefficients `1, 2, 3, ...` of
//! `x^k`. A smooth branch is the graph of the resulting polynomial; a cusp of
//! depth `s` follows its polynomial through `x^s` and then adds `β x^{s+1/2}`,
//! with `β` telling apart cusps that share their whole polynomial part.

use super::{BranchKind, DiscriminantError, EquisingularityClass};
use crate::oracle::field::rational;
use crate::oracle::{default_truncation, oracle_class, verify_class, BiPoly, OracleClass, ParamBranch, VerifyReport};
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct EmittedBranch {
    pub id: String,
    pub kind: BranchKind,
    /// `c_1, c_2, ...`: coefficients of `x^1, x^2, ...`
    pub coefficients: Vec<Rational>,
    pub beta: Option<Rational>,
}

impl EmittedBranch {
    fn polynomial_part(&self) -> BiPoly<Rational> {
        let mut p = BiPoly::zero(&rational(0));
        for (k, c) in self.coefficients.iter().enumerate() {
            p.add_term(c.clone(), k as u32 + 1, 0);
        }
        p
    }

    /// `y - P(x)`, or `(y - P(x))^2 - β^2 x^{2s+1}` for a cusp.
    pub fn equation(&self) -> BiPoly<Rational> {
        let linear = BiPoly::monomial(rational(1), 0, 1).minus(&self.polynomial_part());
        match (self.kind, &self.beta) {
            (BranchKind::Cusp { depth }, Some(beta)) => {
                linear.square().minus(&BiPoly::monomial(beta * beta, 2 * depth + 1, 0))
            }
            _ => linear,
        }
    }

    /// Coefficients of `x(t)` and `y(t)`, lowest order first.
    pub fn parametrization(&self) -> (Vec<Rational>, Vec<Rational>) {
        let zero = rational(0);
        match (self.kind, &self.beta) {
            (BranchKind::Cusp { depth }, Some(beta)) => {
                let top = (2 * depth + 1) as usize;
                let mut y = vec![zero.clone(); top.max(2 * self.coefficients.len()) + 1];
                for (k, c) in self.coefficients.iter().enumerate() {
                    y[2 * (k + 1)] = c.clone();
                }
                y[top] = &y[top] + beta;
                (vec![zero.clone(), zero, rational(1)], y)
            }
            _ => {
                let mut y = vec![zero.clone()];
                y.extend(self.coefficients.iter().cloned());
                (vec![zero, rational(1)], y)
            }
        }
    }

    /// `x(t)` and `y(t)` as text.
    pub fn parametrization_text(&self) -> (String, String) {
        let (x, y) = self.parametrization();
        (series_text(&x), series_text(&y))
    }

    pub fn param_branch(&self, truncation: usize) -> ParamBranch<Rational> {
        let (x, y) = self.parametrization();
        ParamBranch::new(self.id.clone(), x, y, Some(self.equation()), truncation)
            .expect("emitted branches pass through the origin")
    }
}

fn series_text(coeffs: &[Rational]) -> String {
    let mut p = BiPoly::zero(&rational(0));
    for (k, c) in coeffs.iter().enumerate() {
        p.add_term(c.clone(), k as u32, 0);
    }
    p.to_string().replace('x', "t")
}

#[derive(Debug, Clone)]
pub struct Representative {
    pub branches: Vec<EmittedBranch>,
    pub truncation: usize,
    /// the oracle's reading of the emitted curve
    pub oracle: OracleClass,
    pub verification: VerifyReport,
}

impl Representative {
    pub fn param_branches(&self) -> Vec<ParamBranch<Rational>> {
        self.branches.iter().map(|b| b.param_branch(self.truncation)).collect()
    }

    /// `(id, x(t), y(t))` as text.
    pub fn parametrizations(&self) -> Vec<(String, String, String)> {
        self.branches
            .iter()
            .map(|b| {
                let (x, y) = b.parametrization_text();
                (b.id.clone(), x, y)
            })
            .collect()
    }

    /// The curve as a product of one factor per branch.
    pub fn polynomial(&self) -> String {
        self.branches.iter().map(|b| format!("({})", b.equation())).collect()
    }
}

struct Placement<'a> {
    class: &'a EquisingularityClass,
    coefficients: Vec<Vec<Rational>>,
    beta: Vec<Option<Rational>>,
}

impl Placement<'_> {
    fn contact(&self, i: usize, j: usize) -> u32 {
        self.class.contacts().get(i, j)
    }

    fn kind(&self, i: usize) -> BranchKind {
        self.class.branches()[i].kind
    }

    fn id(&self, i: usize) -> &str {
        &self.class.branches()[i].id
    }

    /// `group`: branches with pairwise contact at least `level`.
    fn place(&mut self, group: &[usize], level: u32) -> Result<(), String> {
        let mut clusters: Vec<Vec<usize>> = Vec::new();
        for &i in group {
            match clusters.iter_mut().find(|c| self.contact(c[0], i) > level) {
                Some(c) => c.push(i),
                None => clusters.push(vec![i]),
            }
        }
        for (value, cluster) in clusters.iter().enumerate() {
            let at_satellite = cluster
                .iter()
                .any(|&i| matches!(self.kind(i), BranchKind::Cusp { depth } if depth + 1 == level));
            if at_satellite {
                self.place_betas(cluster, level)?;
                continue;
            }
            for &i in cluster {
                self.coefficients[i].push(rational(value as i64 + 1));
            }
            let has_cusp = cluster.iter().any(|&i| self.kind(i) != BranchKind::Smooth);
            if cluster.len() > 1 || has_cusp {
                self.place(cluster, level + 1)?;
            }
        }
        Ok(())
    }

    /// Cusps of depth `level - 1` sharing their polynomial part.
    fn place_betas(&mut self, cluster: &[usize], level: u32) -> Result<(), String> {
        for (r, &i) in cluster.iter().enumerate() {
            if self.kind(i) != (BranchKind::Cusp { depth: level - 1 }) {
                return Err(format!(
                    "{} would pass through the satellite point of a depth {} cusp",
                    self.id(i),
                    level - 1
                ));
            }
            for &j in &cluster[..r] {
                if self.contact(i, j) != level + 1 {
                    return Err(format!(
                        "cusps {} and {} need contact {}, only {} is realizable",
                        self.id(j),
                        self.id(i),
                        self.contact(i, j),
                        level + 1
                    ));
                }
            }
            self.beta[i] = Some(rational(r as i64 + 1));
        }
        Ok(())
    }
}

/// Place the branches without running the oracle.
pub fn place_branches(class: &EquisingularityClass) -> Result<Vec<EmittedBranch>, DiscriminantError> {
    let n = class.branches().len();
    let mut placement = Placement {
        class,
        coefficients: vec![Vec::new(); n],
        beta: vec![None; n],
    };
    let all: Vec<usize> = (0..n).collect();
    if n > 0 {
        placement
            .place(&all, 1)
            .map_err(DiscriminantError::EmissionUnrealized)?;
    }
    Ok(class
        .branches()
        .iter()
        .enumerate()
        .map(|(i, b)| EmittedBranch {
            id: b.id.clone(),
            kind: b.kind,
            coefficients: std::mem::take(&mut placement.coefficients[i]),
            beta: placement.beta[i].take(),
        })
        .collect())
}

/// Build a representative curve and confirm with the blow-up oracle that it
/// has exactly the branch types, contacts and intersection numbers of
/// `class`.
pub fn emit_representative(class: &EquisingularityClass) -> Result<Representative, DiscriminantError> {
    let branches = place_branches(class)?;
    let max_depth = class.branches().iter().map(|b| b.depth).max().unwrap_or(1);
    let representative = check_representative(branches, class, default_truncation(max_depth))?;
    if let Some(d) = &representative.verification.discrepancy {
        return Err(DiscriminantError::EmissionUnrealized(d.to_string()));
    }
    Ok(representative)
}

/// Run the oracle on given branches and compare with `class`; a mismatch is
/// recorded in the verification report, not returned as an error.
pub fn check_representative(
    branches: Vec<EmittedBranch>,
    class: &EquisingularityClass,
    truncation: usize,
) -> Result<Representative, DiscriminantError> {
    let params: Vec<ParamBranch<Rational>> = branches.iter().map(|b| b.param_branch(truncation)).collect();
    let oracle = oracle_class(&params)?;
    let verification = verify_class(&oracle, class);
    Ok(Representative {
        branches,
        truncation,
        oracle,
        verification,
    })
}
