//! Finite posets and the order-theoretic primitives of domain theory.
//!
//! Every finite poset is a dcpo in which each directed subset contains its
//! own supremum. As a consequence `x << y` coincides with `x <= y`, every
//! element is compact, and Scott continuity reduces to monotonicity. The
//! [`Mode::Fast`] paths use those identities; [`Mode::Oracle`] evaluates the
//! definitions literally by enumerating directed subsets. Both are exported
//! and the test suites assert that they agree.
//!
//! Consequently the FS/BF predicates on this crate's structures always hold
//! for some witness. They are witness *checkers*, not discriminators.

pub(crate) mod iso;
mod map;

pub use iso::order_isomorphism;
pub use map::{
    is_approximate_identity, verify_bf_domain_witness, verify_bf_domain_witness_finite_range,
    verify_fs_domain_witness, MonotoneMap,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::config::Mode;
use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_CARRIER};

/// Posets above this size are refused by the directed-subset oracle.
pub const ORACLE_CAP: usize = 20;

/// A finite partial order on elements `0..n`, in input order.
pub struct FinitePoset {
    labels: Vec<String>,
    down: Vec<Subset>,
    up: Vec<Subset>,
    directed: OnceLock<Vec<(Subset, usize)>>,
}

impl Clone for FinitePoset {
    fn clone(&self) -> Self {
        FinitePoset {
            labels: self.labels.clone(),
            down: self.down.clone(),
            up: self.up.clone(),
            directed: OnceLock::new(),
        }
    }
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.down == other.down
    }
}

impl Eq for FinitePoset {}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("elements", &self.labels)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_CARRIER {
        return Err(Error::SizeCapExceeded {
            what: "poset",
            size: labels.len(),
            cap: MAX_CARRIER,
        });
    }
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if seen.insert(l.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl FinitePoset {
    /// Builds a poset from the full order relation. The relation must
    /// already be reflexive, antisymmetric and transitive; malformed input is
    /// rejected, never repaired.
    pub fn new(labels: Vec<String>, leq: &[(usize, usize)]) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut down = vec![Subset::EMPTY; n];
        for &(a, b) in leq {
            if a >= n {
                return Err(Error::ElementNotInPoset(a));
            }
            if b >= n {
                return Err(Error::ElementNotInPoset(b));
            }
            down[b] = down[b].with(a);
        }
        for (x, d) in down.iter().enumerate() {
            if !d.contains(x) {
                return Err(Error::NotAPartialOrder(format!(
                    "not reflexive at `{}`",
                    labels[x]
                )));
            }
        }
        for y in 0..n {
            for x in down[y].iter() {
                if x != y && down[x].contains(y) {
                    return Err(Error::NotAPartialOrder(format!(
                        "not antisymmetric: `{}` and `{}`",
                        labels[x], labels[y]
                    )));
                }
                if !down[x].is_subset(down[y]) {
                    let w = down[x].difference(down[y]).first().unwrap_or(x);
                    return Err(Error::NotAPartialOrder(format!(
                        "not transitive: `{}` <= `{}` <= `{}`",
                        labels[w], labels[x], labels[y]
                    )));
                }
            }
        }
        Ok(Self::from_down_sets(labels, down))
    }

    /// Builds a poset from covering (or any generating) pairs by taking the
    /// reflexive-transitive closure. Fails if the closure is not antisymmetric.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in covers {
            if a >= n {
                return Err(Error::ElementNotInPoset(a));
            }
            if b >= n {
                return Err(Error::ElementNotInPoset(b));
            }
            down[b] = down[b].with(a);
        }
        // Warshall over down-sets.
        for k in 0..n {
            for y in 0..n {
                if down[y].contains(k) {
                    down[y] = down[y].union(down[k]);
                }
            }
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|y| down[y].iter().map(move |x| (x, y)))
            .collect();
        Self::new(labels, &pairs)
    }

    /// Builds a poset from string-labelled pairs of the full order.
    pub fn from_labeled(labels: &[&str], leq: &[(&str, &str)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let pairs = resolve_pairs(&labels, leq)?;
        Self::new(labels, &pairs)
    }

    /// Like [`FinitePoset::from_labeled`] but from generating pairs.
    pub fn from_labeled_covers(labels: &[&str], covers: &[(&str, &str)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let pairs = resolve_pairs(&labels, covers)?;
        Self::from_covers(labels, &pairs)
    }

    /// The chain `0 < 1 < ... < n-1` labelled by its indices.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let down = (0..n).map(|i| Subset::full(i + 1)).collect();
        Self::from_down_sets(labels, down)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let down = (0..n).map(Subset::singleton).collect();
        Self::from_down_sets(labels, down)
    }

    pub(crate) fn from_down_sets(labels: Vec<String>, down: Vec<Subset>) -> Self {
        let n = labels.len();
        let mut up = vec![Subset::EMPTY; n];
        for (y, d) in down.iter().enumerate() {
            for x in d.iter() {
                up[x] = up[x].with(y);
            }
        }
        FinitePoset {
            labels,
            down,
            up,
            directed: OnceLock::new(),
        }
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

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// All elements as a subset.
    pub fn elements(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    /// `↓x`.
    pub fn down_set(&self, x: usize) -> Subset {
        self.down[x]
    }

    /// `↑x`.
    pub fn up_set(&self, x: usize) -> Subset {
        self.up[x]
    }

    /// The full order as `(x, y)` pairs with `x <= y`.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|y| self.down[y].iter().map(move |x| (x, y)))
            .collect()
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.len() {
            let below = self.down[y].without(y);
            for x in below.iter() {
                let between = self.up[x].without(x).intersection(below);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn check_subset(&self, s: Subset) -> Result<()> {
        match s.difference(self.elements()).first() {
            Some(bad) => Err(Error::ElementNotInPoset(bad)),
            None => Ok(()),
        }
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::ElementNotInPoset(x))
        }
    }

    pub fn upper_bounds(&self, s: Subset) -> Subset {
        s.iter()
            .fold(self.elements(), |acc, x| acc.intersection(self.up[x]))
    }

    pub fn lower_bounds(&self, s: Subset) -> Subset {
        s.iter()
            .fold(self.elements(), |acc, x| acc.intersection(self.down[x]))
    }

    /// Least element of a subset of elements, if it has one.
    fn least_of(&self, s: Subset) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.up[x]))
    }

    /// Greatest element of a subset of elements, if it has one.
    pub fn greatest_of(&self, s: Subset) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.down[x]))
    }

    /// Least upper bound of `s`; `None` when it does not exist.
    pub fn supremum(&self, s: Subset) -> Result<Option<usize>> {
        self.check_subset(s)?;
        Ok(self.sup(s))
    }

    pub(crate) fn sup(&self, s: Subset) -> Option<usize> {
        self.least_of(self.upper_bounds(s))
    }

    /// Greatest lower bound of `s`; `None` when it does not exist.
    pub fn infimum(&self, s: Subset) -> Result<Option<usize>> {
        self.check_subset(s)?;
        Ok(self.greatest_of(self.lower_bounds(s)))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least_of(self.elements())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest_of(self.elements())
    }

    /// Nonempty, and every pair has an upper bound inside `s`.
    pub fn is_directed(&self, s: Subset) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self.directed_pairwise(s))
    }

    pub(crate) fn directed_pairwise(&self, s: Subset) -> bool {
        if s.is_empty() {
            return false;
        }
        s.iter().all(|a| {
            s.iter()
                .all(|b| self.up[a].intersection(self.up[b]).intersects(s))
        })
    }

    /// Directedness by the literal definition: nonempty, and every finite
    /// subset (all `2^|s|` of them, the empty one included) has an upper
    /// bound in `s`.
    pub fn is_directed_by_definition(&self, s: Subset) -> Result<bool> {
        self.check_subset(s)?;
        if s.len() > ORACLE_CAP {
            return Err(Error::SizeCapExceeded {
                what: "directed-set oracle",
                size: s.len(),
                cap: ORACLE_CAP,
            });
        }
        if s.is_empty() {
            return Ok(false);
        }
        Ok(s.subsets().all(|a| self.upper_bounds(a).intersects(s)))
    }

    /// Every directed subset together with its supremum (which, on a finite
    /// poset, always exists: it is the greatest member).
    pub fn directed_subsets(&self) -> Result<&[(Subset, usize)]> {
        if self.len() > ORACLE_CAP {
            return Err(Error::SizeCapExceeded {
                what: "directed-set oracle",
                size: self.len(),
                cap: ORACLE_CAP,
            });
        }
        Ok(self.directed.get_or_init(|| {
            self.elements()
                .subsets()
                .filter(|&d| self.directed_pairwise(d))
                .filter_map(|d| self.sup(d).map(|s| (d, s)))
                .collect()
        }))
    }

    /// `x << y`.
    pub fn way_below(&self, x: usize, y: usize, mode: Mode) -> Result<bool> {
        self.check_element(x)?;
        self.check_element(y)?;
        match mode {
            Mode::Fast => Ok(self.leq(x, y)),
            Mode::Oracle => self.way_below_oracle(x, y),
        }
    }

    /// For every directed `D` whose supremum dominates `y`, some `d in D`
    /// lies above `x`.
    fn way_below_oracle(&self, x: usize, y: usize) -> Result<bool> {
        Ok(self
            .directed_subsets()?
            .iter()
            .filter(|&&(_, s)| self.leq(y, s))
            .all(|&(d, _)| d.intersects(self.up[x])))
    }

    /// `⇓x = { y | y << x }`.
    pub fn way_below_set(&self, x: usize, mode: Mode) -> Result<Subset> {
        self.check_element(x)?;
        match mode {
            Mode::Fast => Ok(self.down[x]),
            Mode::Oracle => {
                let mut out = Subset::EMPTY;
                for y in 0..self.len() {
                    if self.way_below_oracle(y, x)? {
                        out = out.with(y);
                    }
                }
                Ok(out)
            }
        }
    }

    /// `K(P) = { x | x << x }`.
    pub fn compacts(&self, mode: Mode) -> Result<Subset> {
        let mut out = Subset::EMPTY;
        for x in 0..self.len() {
            if self.way_below(x, x, mode)? {
                out = out.with(x);
            }
        }
        Ok(out)
    }

    /// Every directed subset has a supremum.
    pub fn is_dcpo(&self) -> Result<bool> {
        if self.len() > ORACLE_CAP {
            return Err(Error::SizeCapExceeded {
                what: "directed-set oracle",
                size: self.len(),
                cap: ORACLE_CAP,
            });
        }
        Ok(self
            .elements()
            .subsets()
            .filter(|&d| self.directed_pairwise(d))
            .all(|d| self.sup(d).is_some()))
    }

    /// dcpo in which every `⇓x` is directed with supremum `x`.
    pub fn is_continuous_domain(&self, mode: Mode) -> Result<bool> {
        if !self.is_dcpo()? {
            return Ok(false);
        }
        for x in 0..self.len() {
            let approx = self.way_below_set(x, mode)?;
            if !self.directed_pairwise(approx) || self.sup(approx) != Some(x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// dcpo in which every `↓x ∩ K(P)` is directed with supremum `x`.
    pub fn is_algebraic_domain(&self, mode: Mode) -> Result<bool> {
        if !self.is_dcpo()? {
            return Ok(false);
        }
        let k = self.compacts(mode)?;
        for x in 0..self.len() {
            let approx = self.down[x].intersection(k);
            if !self.directed_pairwise(approx) || self.sup(approx) != Some(x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Some `y` with `x << y << z`, the first in element order.
    pub fn interpolate(&self, x: usize, z: usize, mode: Mode) -> Result<usize> {
        if !self.way_below(x, z, mode)? {
            return Err(Error::PreconditionViolated(format!(
                "`{}` is not way below `{}`",
                self.labels[x], self.labels[z]
            )));
        }
        for y in 0..self.len() {
            if self.way_below(x, y, mode)? && self.way_below(y, z, mode)? {
                return Ok(y);
            }
        }
        Err(Error::Postcondition("interpolation failed".into()))
    }

    /// Index of the first part that is cofinal in `d` with the same supremum.
    pub fn find_cofinal_part(&self, d: Subset, parts: &[Subset]) -> Result<usize> {
        self.check_subset(d)?;
        let union = parts.iter().fold(Subset::EMPTY, |acc, p| acc.union(*p));
        if union != d {
            return Err(Error::NotACover);
        }
        if !self.directed_pairwise(d) {
            return Err(Error::NotDirected);
        }
        let sup_d = self
            .sup(d)
            .ok_or_else(|| Error::PreconditionViolated("directed set has no supremum".into()))?;
        parts
            .iter()
            .position(|&b| {
                let cofinal = d.iter().all(|x| self.up[x].intersects(b));
                cofinal && self.sup(b) == Some(sup_d)
            })
            .ok_or_else(|| Error::Postcondition("no cofinal part".into()))
    }

    /// The subposet on `s`, keeping element order and labels.
    pub fn restrict(&self, s: Subset) -> (FinitePoset, Vec<usize>) {
        let keep: Vec<usize> = s.iter().collect();
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let down = keep
            .iter()
            .map(|&y| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &x)| self.leq(x, y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        (FinitePoset::from_down_sets(labels, down), keep)
    }

    /// Renders a subset of elements with labels.
    pub fn render(&self, s: Subset) -> String {
        s.render(&self.labels)
    }
}

pub(crate) fn resolve_pairs(labels: &[String], pairs: &[(&str, &str)]) -> Result<Vec<(usize, usize)>> {
    let idx = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::UnknownLabel(l.to_string()))
    };
    pairs
        .iter()
        .map(|&(a, b)| Ok((idx(a)?, idx(b)?)))
        .collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::FinitePoset;

    /// `⊥ < a`, `⊥ < b`.
    pub fn v_poset() -> FinitePoset {
        FinitePoset::from_labeled_covers(&["⊥", "a", "b"], &[("⊥", "a"), ("⊥", "b")]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::v_poset;
    use super::*;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn directedness_examples() {
        let c = FinitePoset::chain(3);
        assert!(c.is_directed(s(&[0, 1])).unwrap());
        let v = v_poset();
        assert!(!v.is_directed(s(&[1, 2])).unwrap());
        assert!(!c.is_directed(Subset::EMPTY).unwrap());
        assert_eq!(c.is_directed(s(&[5])), Err(Error::ElementNotInPoset(5)));
    }

    #[test]
    fn supremum_examples() {
        let c = FinitePoset::chain(3);
        assert_eq!(c.supremum(s(&[0, 2])).unwrap(), Some(2));
        assert_eq!(v_poset().supremum(s(&[1, 2])).unwrap(), None);
        for x in 0..3 {
            assert_eq!(c.supremum(s(&[x])).unwrap(), Some(x));
        }
        assert_eq!(v_poset().infimum(s(&[1, 2])).unwrap(), Some(0));
    }

    #[test]
    fn way_below_examples_both_modes() {
        let c = FinitePoset::chain(3);
        for mode in [Mode::Fast, Mode::Oracle] {
            assert!(c.way_below(0, 2, mode).unwrap());
            assert!(!c.way_below(2, 0, mode).unwrap());
            for x in 0..3 {
                assert!(c.way_below(x, x, mode).unwrap());
            }
        }
    }

    #[test]
    fn compacts_examples() {
        for mode in [Mode::Fast, Mode::Oracle] {
            assert_eq!(FinitePoset::chain(3).compacts(mode).unwrap(), s(&[0, 1, 2]));
            assert_eq!(FinitePoset::chain(1).compacts(mode).unwrap(), s(&[0]));
            assert_eq!(v_poset().compacts(mode).unwrap(), s(&[0, 1, 2]));
        }
    }

    #[test]
    fn domain_checks() {
        for p in [FinitePoset::chain(3), v_poset(), FinitePoset::chain(0)] {
            for mode in [Mode::Fast, Mode::Oracle] {
                assert!(p.is_continuous_domain(mode).unwrap());
                assert!(p.is_algebraic_domain(mode).unwrap());
            }
        }
    }

    #[test]
    fn interpolation_examples() {
        let c3 = FinitePoset::chain(3);
        let y = c3.interpolate(0, 2, Mode::Oracle).unwrap();
        assert!(c3.way_below(0, y, Mode::Oracle).unwrap());
        assert!(c3.way_below(y, 2, Mode::Oracle).unwrap());
        let c2 = FinitePoset::chain(2);
        assert_eq!(c2.interpolate(0, 0, Mode::Fast).unwrap(), 0);
        assert!(matches!(
            c2.interpolate(1, 0, Mode::Fast),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn cofinal_part_examples() {
        let c = FinitePoset::chain(3);
        let d = s(&[0, 1, 2]);
        assert_eq!(c.find_cofinal_part(d, &[s(&[0]), s(&[1, 2])]).unwrap(), 1);
        assert_eq!(c.find_cofinal_part(s(&[1]), &[s(&[1])]).unwrap(), 0);
        assert_eq!(
            c.find_cofinal_part(d, &[s(&[0]), s(&[1])]),
            Err(Error::NotACover)
        );
        let v = v_poset();
        assert_eq!(
            v.find_cofinal_part(s(&[1, 2]), &[s(&[1]), s(&[2])]),
            Err(Error::NotDirected)
        );
    }

    #[test]
    fn malformed_orders_are_rejected() {
        let labels = || vec!["a".to_string(), "b".to_string(), "c".to_string()];
        // missing reflexive pair
        assert!(matches!(
            FinitePoset::new(labels(), &[(0, 0), (1, 1)]),
            Err(Error::NotAPartialOrder(_))
        ));
        // cycle
        assert!(matches!(
            FinitePoset::new(labels(), &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)]),
            Err(Error::NotAPartialOrder(_))
        ));
        // not transitive
        assert!(matches!(
            FinitePoset::new(labels(), &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]),
            Err(Error::NotAPartialOrder(_))
        ));
        // covers helper closes the same input
        let p = FinitePoset::from_covers(labels(), &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p, FinitePoset::chain(3).relabel(labels()));
        assert!(matches!(
            FinitePoset::from_covers(labels(), &[(0, 1), (1, 0)]),
            Err(Error::NotAPartialOrder(_))
        ));
        assert!(matches!(
            FinitePoset::from_labeled(&["a", "a"], &[]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn hasse_diagram_of_v() {
        assert_eq!(v_poset().cover_pairs(), vec![(0, 1), (0, 2)]);
        assert_eq!(FinitePoset::chain(3).cover_pairs(), vec![(0, 1), (1, 2)]);
    }

    impl FinitePoset {
        fn relabel(&self, labels: Vec<String>) -> FinitePoset {
            FinitePoset::from_down_sets(labels, self.down.clone())
        }
    }
}
