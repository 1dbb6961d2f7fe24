//! Generalized approximation spaces `(U, R)` and the rough-set operators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_CARRIER};

/// A finite universe with a nonempty binary relation, stored as successor sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GASpace {
    labels: Vec<String>,
    succ: Vec<Subset>,
    pred: Vec<Subset>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelationProperties {
    pub reflexive: bool,
    pub transitive: bool,
    pub preorder: bool,
}

impl GASpace {
    pub fn new(labels: Vec<String>, relation: &[(usize, usize)]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > MAX_CARRIER {
            return Err(Error::SizeCapExceeded {
                what: "universe",
                size: labels.len(),
                cap: MAX_CARRIER,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if relation.is_empty() {
            return Err(Error::EmptyRelation);
        }
        let n = labels.len();
        let mut succ = vec![Subset::EMPTY; n];
        let mut pred = vec![Subset::EMPTY; n];
        for &(x, y) in relation {
            for e in [x, y] {
                if e >= n {
                    return Err(Error::ElementNotInUniverse(e));
                }
            }
            succ[x] = succ[x].with(y);
            pred[y] = pred[y].with(x);
        }
        Ok(GASpace { labels, succ, pred })
    }

    pub fn from_labeled(labels: &[&str], relation: &[(&str, &str)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let pairs = crate::order::resolve_pairs(&labels, relation)?;
        Self::new(labels, &pairs)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves labels to a subset.
    pub fn subset_of(&self, labels: &[&str]) -> Result<Subset> {
        labels
            .iter()
            .map(|l| self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string())))
            .collect()
    }

    pub fn universe(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.succ[x].contains(y)
    }

    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.succ[x].iter().map(move |y| (x, y)))
            .collect()
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::ElementNotInUniverse(x))
        }
    }

    pub(crate) fn check_subset(&self, a: Subset) -> Result<()> {
        match a.difference(self.universe()).first() {
            Some(bad) => Err(Error::ElementNotInUniverse(bad)),
            None => Ok(()),
        }
    }

    /// `R_s(x) = { y | x R y }`.
    pub fn successors(&self, x: usize) -> Result<Subset> {
        self.check_element(x)?;
        Ok(self.succ[x])
    }

    /// `R_p(x) = { y | y R x }`.
    pub fn predecessors(&self, x: usize) -> Result<Subset> {
        self.check_element(x)?;
        Ok(self.pred[x])
    }

    /// `R̄(A) = { x | R_s(x) ∩ A ≠ ∅ }`.
    pub fn upper_approx(&self, a: Subset) -> Result<Subset> {
        self.check_subset(a)?;
        Ok(self.upper(a))
    }

    /// `R̲(A) = { x | R_s(x) ⊆ A }`.
    pub fn lower_approx(&self, a: Subset) -> Result<Subset> {
        self.check_subset(a)?;
        Ok(self.lower(a))
    }

    /// Upper approximation on an already checked subset: the union of
    /// predecessor sets of its members.
    pub(crate) fn upper(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, y| acc.union(self.pred[y]))
    }

    pub(crate) fn lower(&self, a: Subset) -> Subset {
        (0..self.len()).filter(|&x| self.succ[x].is_subset(a)).collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|x| self.succ[x].contains(x))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.len()).all(|x| {
            self.succ[x]
                .iter()
                .all(|y| self.succ[y].is_subset(self.succ[x]))
        })
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn relation_properties(&self) -> RelationProperties {
        let reflexive = self.is_reflexive();
        let transitive = self.is_transitive();
        RelationProperties {
            reflexive,
            transitive,
            preorder: reflexive && transitive,
        }
    }

    pub fn render(&self, s: Subset) -> String {
        s.render(&self.labels)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::GASpace;

    /// `U = {a,b,c}`, `R = {(a,b),(b,c),(a,c),(c,c)}`.
    pub fn abc() -> GASpace {
        GASpace::from_labeled(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "c")],
        )
        .unwrap()
    }
}
