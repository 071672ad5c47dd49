use std::fmt::Write as _;

use super::{Branch, BranchKind, ContactMatrix, Invariants};

/// Branch types and pairwise contacts, without names. Two curves are
/// equisingular exactly when their shapes have the same canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassShape {
    pub kinds: Vec<BranchKind>,
    pub contacts: Vec<Vec<u32>>,
}

impl ClassShape {
    pub fn new(kinds: Vec<BranchKind>, contacts: Vec<Vec<u32>>) -> ClassShape {
        ClassShape { kinds, contacts }
    }

    pub fn canonical_form(&self) -> String {
        canonical_form(&self.kinds, &self.contacts)
    }

    pub fn equivalent(&self, other: &ClassShape) -> bool {
        self.kinds.len() == other.kinds.len() && self.canonical_form() == other.canonical_form()
    }
}

fn kind_label(k: BranchKind) -> String {
    match k {
        BranchKind::Smooth => "1".into(),
        BranchKind::Cusp { depth } => format!("(2,{})", 2 * depth + 1),
    }
}

fn canonical(members: &[usize], kinds: &[BranchKind], contacts: &[Vec<u32>]) -> String {
    if let [only] = members {
        return kind_label(kinds[*only]);
    }
    let floor = members
        .iter()
        .flat_map(|&i| members.iter().filter(move |&&j| j != i).map(move |&j| contacts[i][j]))
        .min()
        .unwrap_or(0);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in members {
        match groups.iter_mut().find(|g| contacts[g[0]][i] > floor) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let mut parts: Vec<String> = groups.iter().map(|g| canonical(g, kinds, contacts)).collect();
    parts.sort();
    let mut out = String::new();
    let _ = write!(out, "{floor}[{}]", parts.join(","));
    out
}

/// Nested-bracket normal form of an ultrametric contact tree: at each node
/// the minimal contact, then the sorted forms of the sub-clusters.
pub fn canonical_form(kinds: &[BranchKind], contacts: &[Vec<u32>]) -> String {
    if kinds.is_empty() {
        return "[]".into();
    }
    let all: Vec<usize> = (0..kinds.len()).collect();
    canonical(&all, kinds, contacts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquisingularityClass {
    branches: Vec<Branch>,
    contacts: ContactMatrix,
    intersections: Vec<Vec<u64>>,
    invariants: Invariants,
}

impl EquisingularityClass {
    pub fn new(
        branches: Vec<Branch>,
        contacts: ContactMatrix,
        intersections: Vec<Vec<u64>>,
        invariants: Invariants,
    ) -> EquisingularityClass {
        EquisingularityClass {
            branches,
            contacts,
            intersections,
            invariants,
        }
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn contacts(&self) -> &ContactMatrix {
        &self.contacts
    }

    pub fn intersections(&self) -> &[Vec<u64>] {
        &self.intersections
    }

    pub fn invariants(&self) -> &Invariants {
        &self.invariants
    }

    pub fn shape(&self) -> ClassShape {
        ClassShape::new(
            self.branches.iter().map(|b| b.kind).collect(),
            self.contacts.rows().to_vec(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_ignores_order() {
        let s = BranchKind::Smooth;
        let c = BranchKind::Cusp { depth: 2 };
        let a = ClassShape::new(vec![s, s, c], vec![vec![0, 3, 1], vec![3, 0, 1], vec![1, 1, 0]]);
        let b = ClassShape::new(vec![c, s, s], vec![vec![0, 1, 1], vec![1, 0, 3], vec![1, 3, 0]]);
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(a.canonical_form(), "1[(2,5),3[1,1]]");
        let d = ClassShape::new(vec![s, s, c], vec![vec![0, 2, 1], vec![2, 0, 1], vec![1, 1, 0]]);
        assert!(!a.equivalent(&d));
    }
}
