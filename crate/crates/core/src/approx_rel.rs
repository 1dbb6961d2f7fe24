//! CF-approximable relations between CF-approximation spaces.
//!
//! A relation is stored extensionally as a dense table indexed by positions
//! in the canonical families `𝓕₁ × 𝓕₂`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::cf_space::{CFSpace, ClosedSetPoset};
use crate::error::{Error, Result};
use crate::order::MonotoneMap;
use crate::subset::Subset;

#[derive(Clone)]
pub struct ApproximableRelation {
    source: Arc<CFSpace>,
    target: Arc<CFSpace>,
    table: Vec<bool>,
    validated: bool,
}

impl PartialEq for ApproximableRelation {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.source == other.source && self.target == other.target
    }
}

impl Eq for ApproximableRelation {}

impl fmt::Debug for ApproximableRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(i, j)| {
                format!(
                    "{}->{}",
                    self.source.render(self.source.family()[i]),
                    self.target.render(self.target.family()[j])
                )
            })
            .collect();
        f.debug_set().entries(pairs).finish()
    }
}

/// The first violated axiom and the family members involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub condition: u8,
    pub witness: Vec<Subset>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// One flag per axiom, in order.
    pub conditions: Vec<bool>,
    pub first_failure: Option<AxiomFailure>,
    pub valid: bool,
}

impl AxiomReport {
    fn from_checks(checks: Vec<Option<Vec<Subset>>>) -> Self {
        let conditions: Vec<bool> = checks.iter().map(Option::is_none).collect();
        let first_failure = checks.into_iter().enumerate().find_map(|(i, c)| {
            c.map(|witness| AxiomFailure {
                condition: i as u8 + 1,
                witness,
            })
        });
        AxiomReport {
            valid: first_failure.is_none(),
            conditions,
            first_failure,
        }
    }
}

/// The four equivalent ways of stating `F Θ G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalentForms {
    pub direct: bool,
    pub via_source: bool,
    pub via_target: bool,
    pub via_both: bool,
}

impl EquivalentForms {
    pub fn agree(&self) -> bool {
        self.direct == self.via_source && self.direct == self.via_target && self.direct == self.via_both
    }
}

impl ApproximableRelation {
    fn empty(source: Arc<CFSpace>, target: Arc<CFSpace>) -> Self {
        let n = source.family().len() * target.family().len();
        ApproximableRelation {
            source,
            target,
            table: vec![false; n],
            validated: false,
        }
    }

    /// From pairs of family members. Not validated.
    pub fn new(source: Arc<CFSpace>, target: Arc<CFSpace>, pairs: &[(Subset, Subset)]) -> Result<Self> {
        let mut rel = Self::empty(source, target);
        for &(f, g) in pairs {
            let i = rel.source.family_index(f).ok_or(Error::NotInFamily)?;
            let j = rel.target.family_index(g).ok_or(Error::NotInFamily)?;
            rel.set(i, j);
        }
        Ok(rel)
    }

    /// From `(i, j)` positions in the canonical families. Not validated.
    pub fn from_indices(source: Arc<CFSpace>, target: Arc<CFSpace>, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Self::empty(source, target);
        for &(i, j) in pairs {
            if i >= rel.source.family().len() || j >= rel.target.family().len() {
                return Err(Error::PairOutOfRange(i, j));
            }
            rel.set(i, j);
        }
        Ok(rel)
    }

    /// From a predicate on family positions. Not validated.
    pub fn from_fn(source: Arc<CFSpace>, target: Arc<CFSpace>, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut rel = Self::empty(source, target);
        let n2 = rel.target.family().len();
        for i in 0..rel.source.family().len() {
            for j in 0..n2 {
                if f(i, j) {
                    rel.set(i, j);
                }
            }
        }
        rel
    }

    fn set(&mut self, i: usize, j: usize) {
        let n2 = self.target.family().len();
        self.table[i * n2 + j] = true;
    }

    /// Runs [`ApproximableRelation::validate_approximable`] and marks the
    /// relation as a morphism. Both spaces must be validated.
    pub fn validated(mut self) -> Result<Self> {
        self.source.require_validated()?;
        self.target.require_validated()?;
        let report = self.validate_approximable();
        if let Some(f) = report.first_failure {
            return Err(Error::NotApproximable(format!(
                "condition ({}) fails at {}",
                f.condition,
                self.render_witness(&f)
            )));
        }
        self.validated = true;
        Ok(self)
    }

    /// Renders a failure of the five-axiom check with each set's own labels.
    pub fn render_witness(&self, f: &AxiomFailure) -> String {
        let on_source = |k: usize| if f.condition == 2 { k < 2 } else { k == 0 };
        let rendered: Vec<String> = f
            .witness
            .iter()
            .enumerate()
            .map(|(k, &s)| {
                if on_source(k) {
                    self.source.render(s)
                } else {
                    self.target.render(s)
                }
            })
            .collect();
        rendered.join(", ")
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub(crate) fn require_validated(&self) -> Result<()> {
        if self.validated {
            Ok(())
        } else {
            Err(Error::RelationNotValidated)
        }
    }

    pub(crate) fn mark_validated(mut self) -> Self {
        self.validated = true;
        self
    }

    pub fn source(&self) -> &Arc<CFSpace> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CFSpace> {
        &self.target
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.table[i * self.target.family().len() + j]
    }

    pub fn contains_sets(&self, f: Subset, g: Subset) -> bool {
        match (self.source.family_index(f), self.target.family_index(g)) {
            (Some(i), Some(j)) => self.contains(i, j),
            _ => false,
        }
    }

    /// Pairs as family positions, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n2 = self.target.family().len();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(k, _)| (k / n2, k % n2))
            .collect()
    }

    /// Pairs as sets.
    pub fn pair_sets(&self) -> Vec<(Subset, Subset)> {
        self.pairs()
            .into_iter()
            .map(|(i, j)| (self.source.family()[i], self.target.family()[j]))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.table.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pair-set inclusion; relations over different spaces are incomparable.
    pub fn is_subrelation_of(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.table.iter().zip(&other.table).all(|(&a, &b)| !a || b)
    }

    /// Checks the five axioms exhaustively and reports the first failure.
    pub fn validate_approximable(&self) -> AxiomReport {
        let f1 = self.source.family();
        let f2 = self.target.family();
        let (n1, n2) = (f1.len(), f2.len());
        let up1 = |i: usize| self.source.upper_of(i);
        let up2 = |j: usize| self.target.upper_of(j);
        let t = |i: usize, j: usize| self.contains(i, j);

        let c1 = (0..n1).find(|&i| !(0..n2).any(|j| t(i, j))).map(|i| vec![f1[i]]);

        let mut c2 = None;
        'c2: for i in 0..n1 {
            for ip in 0..n1 {
                if !f1[i].is_subset(up1(ip)) {
                    continue;
                }
                for j in 0..n2 {
                    if t(i, j) && !t(ip, j) {
                        c2 = Some(vec![f1[i], f1[ip], f2[j]]);
                        break 'c2;
                    }
                }
            }
        }

        let mut c3 = None;
        'c3: for i in 0..n1 {
            for j in 0..n2 {
                if !t(i, j) {
                    continue;
                }
                for jp in 0..n2 {
                    if f2[jp].is_subset(up2(j)) && !t(i, jp) {
                        c3 = Some(vec![f1[i], f2[j], f2[jp]]);
                        break 'c3;
                    }
                }
            }
        }

        let mut c4 = None;
        'c4: for i in 0..n1 {
            for j in 0..n2 {
                if !t(i, j) {
                    continue;
                }
                let ok = (0..n1).any(|ip| {
                    f1[ip].is_subset(up1(i)) && (0..n2).any(|jp| f2[j].is_subset(up2(jp)) && t(ip, jp))
                });
                if !ok {
                    c4 = Some(vec![f1[i], f2[j]]);
                    break 'c4;
                }
            }
        }

        let mut c5 = None;
        'c5: for i in 0..n1 {
            for ja in 0..n2 {
                if !t(i, ja) {
                    continue;
                }
                for jb in ja..n2 {
                    if !t(i, jb) {
                        continue;
                    }
                    let u = f2[ja].union(f2[jb]);
                    if !(0..n2).any(|jc| u.is_subset(up2(jc)) && t(i, jc)) {
                        c5 = Some(vec![f1[i], f2[ja], f2[jb]]);
                        break 'c5;
                    }
                }
            }
        }

        AxiomReport::from_checks(vec![c1, c2, c3, c4, c5])
    }

    /// The three-condition characterization valid between topological spaces.
    pub fn validate_topological_approximable(&self) -> Result<AxiomReport> {
        if !self.source.base().is_preorder() || !self.target.base().is_preorder() {
            return Err(Error::NotTopological);
        }
        let f1 = self.source.family();
        let f2 = self.target.family();
        let (n1, n2) = (f1.len(), f2.len());
        let t = |i: usize, j: usize| self.contains(i, j);

        let c1 = (0..n1).find(|&i| !(0..n2).any(|j| t(i, j))).map(|i| vec![f1[i]]);

        let mut c2 = None;
        'c2: for i in 0..n1 {
            for j in 0..n2 {
                if !t(i, j) {
                    continue;
                }
                for ip in 0..n1 {
                    if !f1[i].is_subset(self.source.upper_of(ip)) {
                        continue;
                    }
                    for jp in 0..n2 {
                        if f2[jp].is_subset(self.target.upper_of(j)) && !t(ip, jp) {
                            c2 = Some(vec![f1[i], f1[ip], f2[j], f2[jp]]);
                            break 'c2;
                        }
                    }
                }
            }
        }

        let mut c3 = None;
        'c3: for i in 0..n1 {
            for ja in 0..n2 {
                for jb in ja..n2 {
                    if !(t(i, ja) && t(i, jb)) {
                        continue;
                    }
                    let u = f2[ja].union(f2[jb]);
                    if !(0..n2).any(|jc| u.is_subset(self.target.upper_of(jc)) && t(i, jc)) {
                        c3 = Some(vec![f1[i], f2[ja], f2[jb]]);
                        break 'c3;
                    }
                }
            }
        }
        Ok(AxiomReport::from_checks(vec![c1, c2, c3]))
    }

    /// `F Θ G` and the three reformulations through `R̄₁(F)` and `R̄₂(G′)`.
    pub fn equivalent_forms(&self, f: Subset, g: Subset) -> Result<EquivalentForms> {
        let i = self.source.family_index(f).ok_or(Error::NotInFamily)?;
        let j = self.target.family_index(g).ok_or(Error::NotInFamily)?;
        let n1 = self.source.family().len();
        let n2 = self.target.family().len();
        let below_f: Vec<usize> = (0..n1)
            .filter(|&ip| self.source.family()[ip].is_subset(self.source.upper_of(i)))
            .collect();
        let above_g: Vec<usize> = (0..n2)
            .filter(|&jp| g.is_subset(self.target.upper_of(jp)))
            .collect();
        Ok(EquivalentForms {
            direct: self.contains(i, j),
            via_source: below_f.iter().any(|&ip| self.contains(ip, j)),
            via_target: above_g.iter().any(|&jp| self.contains(i, jp)),
            via_both: below_f
                .iter()
                .any(|&ip| above_g.iter().any(|&jp| self.contains(ip, jp))),
        })
    }

    /// `{(F, G) | G ⊆ R̄(F)}`.
    pub fn identity_relation(space: &Arc<CFSpace>) -> Result<Self> {
        space.require_validated()?;
        let fam = space.family();
        let rel = Self::from_fn(space.clone(), space.clone(), |i, j| fam[j].is_subset(space.upper_of(i)));
        if !rel.validate_approximable().valid {
            return Err(Error::Postcondition("identity relation is not approximable".into()));
        }
        Ok(rel.mark_validated())
    }

    /// `second ∘ first`. The result of composing two validated relations is
    /// revalidated; a failure there is reported as a bug.
    pub fn compose(second: &Self, first: &Self) -> Result<Self> {
        if first.target != second.source {
            return Err(Error::SpaceMismatch);
        }
        let n2 = first.target.family().len();
        let rel = Self::from_fn(first.source.clone(), second.target.clone(), |i, k| {
            (0..n2).any(|j| first.contains(i, j) && second.contains(j, k))
        });
        if first.validated && second.validated {
            if let Some(f) = rel.validate_approximable().first_failure {
                return Err(Error::Postcondition(format!(
                    "composite violates condition ({})",
                    f.condition
                )));
            }
            return Ok(rel.mark_validated());
        }
        Ok(rel)
    }

    /// `f_Θ(E) = ⋃{R̄(G) | F ⊆ E, F Θ G}` as a map between the given domains.
    pub fn to_map_between(&self, c1: &ClosedSetPoset, c2: &ClosedSetPoset) -> Result<MonotoneMap> {
        self.require_validated()?;
        if **c1.space() != *self.source || **c2.space() != *self.target {
            return Err(Error::SpaceMismatch);
        }
        let f1 = self.source.family();
        let mut graph = Vec::with_capacity(c1.len());
        for &e in c1.sets() {
            let family: Vec<Subset> = self
                .pairs()
                .into_iter()
                .filter(|&(i, _)| f1[i].is_subset(e))
                .map(|(_, j)| self.target.upper_of(j))
                .collect();
            if !crate::cf_space::sets_directed(&family) {
                return Err(Error::Postcondition(format!(
                    "image family of {} is not directed",
                    self.source.render(e)
                )));
            }
            let img = crate::cf_space::union_of(&family);
            let k = c2.index_of(img).ok_or_else(|| {
                Error::Postcondition(format!("f_Θ({}) is not CF-closed", self.source.render(e)))
            })?;
            graph.push(k);
        }
        let map = MonotoneMap::new(c1.poset().clone(), c2.poset().clone(), graph)
            .map_err(|e| Error::Postcondition(format!("f_Θ is not monotone: {e}")))?;
        if !map.is_scott_continuous()? {
            return Err(Error::Postcondition("f_Θ is not Scott continuous".into()));
        }
        Ok(map)
    }

    /// [`ApproximableRelation::to_map_between`] on freshly computed domains.
    pub fn to_map(&self) -> Result<MonotoneMap> {
        self.require_validated()?;
        let c1 = self.source.cf_closed_sets()?;
        let c2 = self.target.cf_closed_sets()?;
        self.to_map_between(&c1, &c2)
    }

    /// `F Θ_f G ⇔ G ⊆ f(R̄₁(F))`.
    pub fn from_map(f: &MonotoneMap, c1: &ClosedSetPoset, c2: &ClosedSetPoset) -> Result<Self> {
        if f.source() != c1.poset() || f.target() != c2.poset() {
            return Err(Error::MapMismatch("map is not between the given domains".into()));
        }
        if !f.is_scott_continuous()? {
            return Err(Error::MapNotContinuous);
        }
        let s1 = c1.space().clone();
        let s2 = c2.space().clone();
        s1.require_validated()?;
        s2.require_validated()?;
        let mut images = Vec::with_capacity(s1.family().len());
        for i in 0..s1.family().len() {
            let idx = c1
                .index_of(s1.upper_of(i))
                .ok_or_else(|| Error::Postcondition("R̄(F) is not CF-closed".into()))?;
            images.push(c2.set(f.apply(idx)));
        }
        let fam2 = s2.family().to_vec();
        let rel = Self::from_fn(s1, s2, |i, j| fam2[j].is_subset(images[i]));
        if let Some(fail) = rel.validate_approximable().first_failure {
            return Err(Error::Postcondition(format!(
                "Θ_f violates condition ({})",
                fail.condition
            )));
        }
        Ok(rel.mark_validated())
    }
}
