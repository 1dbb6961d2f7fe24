//! CF-approximation spaces `(U, R, 𝓕)` and their domains of CF-closed sets.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::config::{Caps, Mode};
use crate::error::{Error, Result};
use crate::ga_space::GASpace;
use crate::order::FinitePoset;
use crate::subset::{canonicalize, Subset};

/// A GA-space with a family of finite subsets. Construction only checks
/// shape; [`CFSpace::validated`] runs the CF condition and sets a flag that
/// downstream constructions require.
#[derive(Clone)]
pub struct CFSpace {
    base: GASpace,
    family: Vec<Subset>,
    uppers: Vec<Subset>,
    validated: bool,
}

impl PartialEq for CFSpace {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.family == other.family
    }
}

impl Eq for CFSpace {}

impl fmt::Debug for CFSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam: Vec<String> = self.family.iter().map(|&s| self.base.render(s)).collect();
        f.debug_struct("CFSpace")
            .field("universe", &self.base.labels())
            .field("relation", &self.base.relation_pairs())
            .field("family", &fam)
            .field("validated", &self.validated)
            .finish()
    }
}

/// Outcome of the CF condition for one member of the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberCheck {
    pub member: Subset,
    /// A `G` with `R̄(F) ⊆ R̄(G)` and `G ⊆ R̄(F)`, which then serves every `K`.
    pub witness: Option<Subset>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CfCounterexample {
    pub member: Subset,
    pub k: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CfReport {
    pub transitive: bool,
    pub members: Vec<MemberCheck>,
    pub counterexample: Option<CfCounterexample>,
    pub valid: bool,
}

impl CFSpace {
    pub fn new(base: GASpace, family: Vec<Subset>) -> Result<Self> {
        if family.is_empty() {
            return Err(Error::EmptyFamilyOfSets);
        }
        for f in &family {
            base.check_subset(*f)?;
        }
        let mut family = family;
        canonicalize(&mut family);
        let uppers = family.iter().map(|&f| base.upper(f)).collect();
        Ok(CFSpace {
            base,
            family,
            uppers,
            validated: false,
        })
    }

    pub fn from_labeled(
        universe: &[&str],
        relation: &[(&str, &str)],
        family: &[&[&str]],
    ) -> Result<Self> {
        let base = GASpace::from_labeled(universe, relation)?;
        let family = family
            .iter()
            .map(|f| base.subset_of(f))
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, family)
    }

    /// Runs [`CFSpace::validate_cf`] and marks the space as admissible.
    pub fn validated(mut self) -> Result<Self> {
        let report = self.validate_cf();
        if !report.valid {
            let why = if !report.transitive {
                "relation is not transitive".to_string()
            } else {
                let c = report.counterexample.expect("invalid report carries a counterexample");
                format!(
                    "K = {} ⊆ R̄({}) has no re-covering member",
                    self.base.render(c.k),
                    self.base.render(c.member)
                )
            };
            return Err(Error::NotCfSpace(why));
        }
        self.validated = true;
        Ok(self)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub(crate) fn require_validated(&self) -> Result<()> {
        if self.validated {
            Ok(())
        } else {
            Err(Error::SpaceNotValidated)
        }
    }

    pub fn base(&self) -> &GASpace {
        &self.base
    }

    /// `𝓕` in canonical order.
    pub fn family(&self) -> &[Subset] {
        &self.family
    }

    pub fn family_index(&self, f: Subset) -> Option<usize> {
        self.family.binary_search_by(|g| g.canonical_cmp(&f)).ok()
    }

    /// `R̄(F_i)` for the `i`-th member of `𝓕`.
    pub fn upper_of(&self, i: usize) -> Subset {
        self.uppers[i]
    }

    pub fn upper(&self, a: Subset) -> Subset {
        self.base.upper(a)
    }

    pub fn render(&self, s: Subset) -> String {
        self.base.render(s)
    }

    /// The CF condition. For each `F` it looks for one `G` handling
    /// `K = R̄(F)`; by monotonicity of `R̄` that `G` handles every smaller
    /// `K`, so the check is decisive. A failure reports that maximal `K`.
    pub fn validate_cf(&self) -> CfReport {
        self.validate_cf_with(Mode::Fast)
    }

    /// [`Mode::Oracle`] quantifies over every `K ⊆ R̄(F)`; [`Mode::Fast`] only
    /// over the maximal one. Both report the first failure with `K`
    /// enumerated from `R̄(F)` downwards.
    pub fn validate_cf_with(&self, mode: Mode) -> CfReport {
        let transitive = self.base.is_transitive();
        let mut members = Vec::with_capacity(self.family.len());
        let mut counterexample = None;
        for (i, &f) in self.family.iter().enumerate() {
            let rf = self.uppers[i];
            let find = |k: Subset| {
                (0..self.family.len())
                    .find(|&j| k.is_subset(self.uppers[j]) && self.family[j].is_subset(rf))
            };
            let witness = find(rf).map(|j| self.family[j]);
            let failing_k = match mode {
                Mode::Fast => witness.is_none().then_some(rf),
                Mode::Oracle => rf.subsets().find(|&k| find(k).is_none()),
            };
            if counterexample.is_none() {
                if let Some(k) = failing_k {
                    counterexample = Some(CfCounterexample { member: f, k });
                }
            }
            members.push(MemberCheck { member: f, witness });
        }
        let valid = transitive && counterexample.is_none();
        CfReport {
            transitive,
            members,
            counterexample,
            valid,
        }
    }

    /// Every `K ⊆ R̄(F)` that has no re-covering member, over all `F`.
    pub fn cf_failures(&self) -> Vec<CfCounterexample> {
        let mut out = Vec::new();
        for (i, &f) in self.family.iter().enumerate() {
            let rf = self.uppers[i];
            for k in rf.subsets() {
                let ok = (0..self.family.len())
                    .any(|j| k.is_subset(self.uppers[j]) && self.family[j].is_subset(rf));
                if !ok {
                    out.push(CfCounterexample { member: f, k });
                }
            }
        }
        out
    }

    /// CF-closedness by definition: every `K ⊆ E` admits `F ∈ 𝓕` with
    /// `K ⊆ R̄(F) ⊆ E` and `F ⊆ E`. Exhaustive over `K`, so `|E|` is capped.
    pub fn is_cf_closed(&self, e: Subset) -> Result<bool> {
        self.base.check_subset(e)?;
        Caps::require("closed-set check", e.len(), crate::order::ORACLE_CAP)?;
        let inside: Vec<Subset> = self.inner_uppers(e).collect();
        Ok(e.subsets().all(|k| inside.iter().any(|&r| k.is_subset(r))))
    }

    /// For each `K ⊆ E` (from `E` downwards) the first member `F` with
    /// `K ⊆ R̄(F) ⊆ E` and `F ⊆ E`.
    pub fn closed_witness_table(&self, e: Subset) -> Result<Vec<(Subset, Option<Subset>)>> {
        self.base.check_subset(e)?;
        Caps::require("closed-set check", e.len(), crate::order::ORACLE_CAP)?;
        Ok(e.subsets()
            .map(|k| {
                let w = (0..self.family.len())
                    .find(|&i| self.inner(i, e) && k.is_subset(self.uppers[i]))
                    .map(|i| self.family[i]);
                (k, w)
            })
            .collect())
    }

    fn inner(&self, i: usize, e: Subset) -> bool {
        self.family[i].is_subset(e) && self.uppers[i].is_subset(e)
    }

    fn inner_uppers(&self, e: Subset) -> impl Iterator<Item = Subset> + '_ {
        (0..self.family.len())
            .filter(move |&i| self.inner(i, e))
            .map(|i| self.uppers[i])
    }

    /// A member `F ⊆ E` with `R̄(F) = E`. On a finite universe such an `F`
    /// exists exactly when `E` is CF-closed (take `K = E`).
    pub fn closed_witness(&self, e: Subset) -> Option<Subset> {
        (0..self.family.len())
            .find(|&i| self.uppers[i] == e && self.family[i].is_subset(e))
            .map(|i| self.family[i])
    }

    /// The four equivalent descriptions of CF-closed sets, each evaluated
    /// independently: the definition; `𝒜 = {R̄(F) | F ⊆ E}` directed with
    /// union `E`; some subfamily with directed images and union `E`; every
    /// `K ⊆ E` below some `R̄(F) ⊆ E`.
    pub fn closed_characterizations(&self, e: Subset, caps: &Caps) -> Result<[bool; 4]> {
        let def = self.is_cf_closed(e)?;

        let a: Vec<Subset> = (0..self.family.len())
            .filter(|&i| self.family[i].is_subset(e))
            .map(|i| self.uppers[i])
            .collect();
        let via_a = sets_directed(&a) && union_of(&a) == e;

        Caps::require("family", self.family.len(), caps.family)?;
        let all = Subset::full(self.family.len());
        let via_some = all.subsets().any(|sel| {
            let imgs: Vec<Subset> = sel.iter().map(|i| self.uppers[i]).collect();
            !imgs.is_empty() && sets_directed(&imgs) && union_of(&imgs) == e
        });

        let via_k = e.subsets().all(|k| {
            self.uppers
                .iter()
                .any(|&r| k.is_subset(r) && r.is_subset(e))
        });
        Ok([def, via_a, via_some, via_k])
    }

    /// The domain `𝔠(U, R, 𝓕)` by the image algorithm: candidates `R̄(F)`.
    pub fn cf_closed_sets(self: &Arc<Self>) -> Result<ClosedSetPoset> {
        self.require_validated()?;
        let mut sets: Vec<Subset> = self
            .uppers
            .iter()
            .copied()
            .filter(|&e| self.closed_witness(e).is_some())
            .collect();
        canonicalize(&mut sets);
        Ok(ClosedSetPoset::new(self.clone(), sets))
    }

    /// `𝔠(U, R, 𝓕)` by scanning all `2^|U|` subsets with [`CFSpace::is_cf_closed`].
    pub fn cf_closed_sets_brute(&self, caps: &Caps) -> Result<Vec<Subset>> {
        self.require_validated()?;
        Caps::require("universe", self.base.len(), caps.universe)?;
        let mut sets = Vec::new();
        for e in self.base.universe().subsets() {
            if self.is_cf_closed(e)? {
                sets.push(e);
            }
        }
        canonicalize(&mut sets);
        Ok(sets)
    }

    /// Whether the relation is a preorder. A preorder with any family
    /// satisfies the CF condition; that is re-checked here.
    pub fn is_topological_cf(&self) -> Result<bool> {
        self.require_validated()?;
        if !self.base.is_preorder() {
            return Ok(false);
        }
        if !self.validate_cf().valid {
            return Err(Error::Postcondition(
                "preorder space failed the CF condition".into(),
            ));
        }
        Ok(true)
    }
}

pub(crate) fn union_of(sets: &[Subset]) -> Subset {
    sets.iter().fold(Subset::EMPTY, |acc, s| acc.union(*s))
}

/// Nonempty and every pair has an upper bound in the list under `⊆`.
pub(crate) fn sets_directed(sets: &[Subset]) -> bool {
    !sets.is_empty()
        && sets.iter().all(|a| {
            sets.iter()
                .all(|b| sets.iter().any(|c| a.union(*b).is_subset(*c)))
        })
}

/// The CF-closed sets of a validated space ordered by inclusion.
#[derive(Clone)]
pub struct ClosedSetPoset {
    space: Arc<CFSpace>,
    sets: Vec<Subset>,
    poset: Arc<FinitePoset>,
}

impl PartialEq for ClosedSetPoset {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.sets == other.sets
    }
}

impl fmt::Debug for ClosedSetPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.sets.iter().map(|&s| self.space.render(s)))
            .finish()
    }
}

impl ClosedSetPoset {
    pub(crate) fn new(space: Arc<CFSpace>, sets: Vec<Subset>) -> Self {
        let labels = sets.iter().map(|&s| space.render(s)).collect();
        let down = sets
            .iter()
            .map(|&b| {
                sets.iter()
                    .enumerate()
                    .filter(|&(_, &a)| a.is_subset(b))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let poset = Arc::new(FinitePoset::from_down_sets(labels, down));
        ClosedSetPoset { space, sets, poset }
    }

    pub fn space(&self) -> &Arc<CFSpace> {
        &self.space
    }

    /// Closed sets in canonical order; element `i` of [`ClosedSetPoset::poset`] is `sets()[i]`.
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> Subset {
        self.sets[i]
    }

    pub fn poset(&self) -> &Arc<FinitePoset> {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_of(&self, e: Subset) -> Option<usize> {
        self.sets.binary_search_by(|s| s.canonical_cmp(&e)).ok()
    }

    pub(crate) fn require_index(&self, e: Subset) -> Result<usize> {
        self.index_of(e).ok_or(Error::NotClosed)
    }

    /// `E1 ≪ E2` via the first `F ∈ 𝓕` with `E1 ⊆ R̄(F)` and `F ⊆ E2`.
    pub fn way_below_closed(&self, e1: Subset, e2: Subset) -> Result<Option<Subset>> {
        self.require_index(e1)?;
        self.require_index(e2)?;
        let sp = &self.space;
        Ok((0..sp.family.len())
            .find(|&i| e1.is_subset(sp.uppers[i]) && sp.family[i].is_subset(e2))
            .map(|i| sp.family[i]))
    }

    /// Index of the least closed set containing every member of `sets`:
    /// directed unions of closed sets stay closed, so for a directed list
    /// this is the index of their union.
    pub fn index_of_union(&self, sets: &[Subset]) -> Option<usize> {
        self.index_of(union_of(sets))
    }

    /// Hasse edges of the inclusion order as `(smaller, larger)` indices.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.poset.cover_pairs()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// `U = {a,b,c}`, `R = {(a,b),(b,c),(a,c),(c,c)}` with the given family.
    pub fn abc_with(family: &[&[&str]]) -> CFSpace {
        CFSpace::from_labeled(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "c")],
            family,
        )
        .unwrap()
    }

    /// The induced space of the chain `0 < 1 < 2`, spelled out by hand.
    pub fn chain3_space() -> CFSpace {
        let nonempty: Vec<&[&str]> = vec![
            &["0"],
            &["1"],
            &["2"],
            &["0", "1"],
            &["0", "2"],
            &["1", "2"],
            &["0", "1", "2"],
        ];
        CFSpace::from_labeled(
            &["0", "1", "2"],
            &[("0", "0"), ("1", "1"), ("2", "2"), ("0", "1"), ("1", "2"), ("0", "2")],
            &nonempty,
        )
        .unwrap()
    }
}
