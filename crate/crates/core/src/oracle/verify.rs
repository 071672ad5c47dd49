//! Recompute an equisingularity class from parametrizations and compare it
//! with the combinatorial one.

use std::fmt;

use super::blowup::{branch_kind, contact_trace, intersection_from_trace, smooth_difference_order};
use super::branch::ParamBranch;
use super::field::Scalar;
use super::OracleError;
use crate::discriminant::{BranchKind, ClassShape, EquisingularityClass};

/// Branch types, contacts and intersection multiplicities as seen by the
/// blow-up engine.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleClass {
    pub ids: Vec<String>,
    pub kinds: Vec<BranchKind>,
    /// symmetric, zero on the diagonal
    pub contacts: Vec<Vec<u32>>,
    pub intersections: Vec<Vec<u64>>,
}

impl OracleClass {
    pub fn shape(&self) -> ClassShape {
        ClassShape::new(self.kinds.clone(), self.contacts.clone())
    }
}

/// Run the oracle on every branch and every pair. Smooth pairs are also
/// checked against the order of the difference of their graphs.
pub fn oracle_class<F: Scalar>(branches: &[ParamBranch<F>]) -> Result<OracleClass, OracleError> {
    let n = branches.len();
    let kinds = branches.iter().map(branch_kind).collect::<Result<Vec<_>, _>>()?;
    let mut contacts = vec![vec![0u32; n]; n];
    let mut intersections = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (bi, bj) = (&branches[i], &branches[j]);
            let trace = contact_trace(bi, bj)?;
            let im = intersection_from_trace(bi, bj, &trace)?;
            if kinds[i] == BranchKind::Smooth && kinds[j] == BranchKind::Smooth {
                let difference = smooth_difference_order(bi, bj)?;
                if difference != trace.contact {
                    return Err(OracleError::ShortcutDisagreement {
                        first: bi.id.clone(),
                        second: bj.id.clone(),
                        blowup: trace.contact,
                        difference,
                    });
                }
            }
            contacts[i][j] = trace.contact;
            contacts[j][i] = trace.contact;
            intersections[i][j] = im;
            intersections[j][i] = im;
        }
    }
    Ok(OracleClass {
        ids: branches.iter().map(|b| b.id.clone()).collect(),
        kinds,
        contacts,
        intersections,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Discrepancy {
    BranchCount {
        expected: usize,
        found: usize,
    },
    MissingBranch(String),
    Kind {
        id: String,
        expected: BranchKind,
        found: BranchKind,
    },
    Contact {
        first: String,
        second: String,
        expected: u32,
        found: u32,
    },
    Intersection {
        first: String,
        second: String,
        expected: u64,
        found: u64,
    },
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::BranchCount { expected, found } => {
                write!(f, "expected {expected} branches, found {found}")
            }
            Discrepancy::MissingBranch(id) => write!(f, "branch {id} missing from the model"),
            Discrepancy::Kind { id, expected, found } => {
                write!(f, "branch {id}: expected {expected}, found {found}")
            }
            Discrepancy::Contact {
                first,
                second,
                expected,
                found,
            } => write!(f, "contact({first}, {second}): expected {expected}, found {found}"),
            Discrepancy::Intersection {
                first,
                second,
                expected,
                found,
            } => write!(f, "intersection({first}, {second}): expected {expected}, found {found}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub branches_checked: usize,
    pub pairs_checked: usize,
    pub discrepancy: Option<Discrepancy>,
}

impl VerifyReport {
    pub fn is_match(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Compare branch by branch (matched on id) and pair by pair, stopping at
/// the first discrepancy.
pub fn verify_class(found: &OracleClass, expected: &EquisingularityClass) -> VerifyReport {
    let mut report = VerifyReport {
        branches_checked: 0,
        pairs_checked: 0,
        discrepancy: None,
    };
    let branches = expected.branches();
    if branches.len() != found.ids.len() {
        report.discrepancy = Some(Discrepancy::BranchCount {
            expected: branches.len(),
            found: found.ids.len(),
        });
        return report;
    }
    let mut index = Vec::with_capacity(branches.len());
    for b in branches {
        match found.ids.iter().position(|id| *id == b.id) {
            Some(k) => index.push(k),
            None => {
                report.discrepancy = Some(Discrepancy::MissingBranch(b.id.clone()));
                return report;
            }
        }
    }
    for (b, &k) in branches.iter().zip(&index) {
        if b.kind != found.kinds[k] {
            report.discrepancy = Some(Discrepancy::Kind {
                id: b.id.clone(),
                expected: b.kind,
                found: found.kinds[k],
            });
            return report;
        }
        report.branches_checked += 1;
    }
    for i in 0..branches.len() {
        for j in i + 1..branches.len() {
            let (ki, kj) = (index[i], index[j]);
            let (first, second) = (&branches[i].id, &branches[j].id);
            let c = expected.contacts().get(i, j);
            if c != found.contacts[ki][kj] {
                report.discrepancy = Some(Discrepancy::Contact {
                    first: first.clone(),
                    second: second.clone(),
                    expected: c,
                    found: found.contacts[ki][kj],
                });
                return report;
            }
            let im = expected.intersections()[i][j];
            if im != found.intersections[ki][kj] {
                report.discrepancy = Some(Discrepancy::Intersection {
                    first: first.clone(),
                    second: second.clone(),
                    expected: im,
                    found: found.intersections[ki][kj],
                });
                return report;
            }
            report.pairs_checked += 1;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::rational;
    use crate::oracle::{oracle_contact, oracle_intersection};
    use crate::Rational;

    fn branch(id: &str, x: &[i64], y: &[i64]) -> ParamBranch<Rational> {
        let q = |v: &[i64]| v.iter().map(|&c| rational(c)).collect();
        ParamBranch::new(id, q(x), q(y), None, 24).unwrap()
    }

    #[test]
    fn contacts_from_blow_ups() {
        let a = branch("a", &[0, 1], &[0, 0, 0, 1]);
        let b = branch("b", &[0, 1], &[0, 0, 0, -1]);
        assert_eq!(oracle_contact(&a, &b).unwrap(), 3);
        let cusp = branch("c", &[0, 0, 1], &[0, 0, 0, 0, 0, 1]);
        let smooth = branch("s", &[0, 1], &[0, 0, 0, 1]);
        assert_eq!(oracle_contact(&cusp, &smooth).unwrap(), 3);
        assert_eq!(oracle_contact(&smooth, &cusp).unwrap(), 3);
        let p = branch("p", &[0, 1], &[0, 0, 1]);
        let q = branch("q", &[0, 1], &[0, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(oracle_contact(&p, &q).unwrap(), 7);
        assert_eq!(smooth_difference_order(&p, &q).unwrap(), 7);
    }

    #[test]
    fn cusp_pair_intersection() {
        let a = branch("a", &[0, 0, 1], &[0, 0, 0, 1]);
        let b = branch("b", &[0, 0, 0, 1], &[0, 0, 1]);
        assert_eq!(oracle_intersection(&a, &b).unwrap(), 4);
        let l1 = branch("l1", &[0, 1], &[0, 1]);
        let l2 = branch("l2", &[0, 1], &[0, 2]);
        assert_eq!(oracle_intersection(&l1, &l2).unwrap(), 1);
    }

    #[test]
    fn coincident_branches_are_rejected() {
        let a = branch("a", &[0, 1], &[0, 0, 1]);
        let b = branch("b", &[0, 1], &[0, 0, 1, 0]);
        assert_eq!(oracle_contact(&a, &b).unwrap_err().kind(), "CoincidentBranches");
    }

    #[test]
    fn class_of_a_line_pair() {
        let c = oracle_class(&[branch("a", &[0, 1], &[0, 1]), branch("b", &[0, 1], &[0, -1])]).unwrap();
        assert_eq!(c.contacts[0][1], 1);
        assert_eq!(c.kinds, vec![BranchKind::Smooth; 2]);
    }
}
