//! FS, strong FS and topological BF witness data on a CF-approximation space,
//! and the constructions `δ_K`, `Θ_K` built from a TB selector.

use std::sync::Arc;

use serde::Serialize;

use crate::approx_rel::ApproximableRelation;
use crate::cf_space::{CFSpace, ClosedSetPoset};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::order::{is_approximate_identity, MonotoneMap};
use crate::subset::Subset;

/// Relations `{Θ_i}` on one space with a finite separator family `𝓜_i` each.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessFamily {
    space: Arc<CFSpace>,
    relations: Vec<ApproximableRelation>,
    separators: Vec<Vec<Subset>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub fs: bool,
    pub strong_fs: bool,
    pub topological_fs: bool,
}

impl WitnessFamily {
    /// Checks shape only: at least one relation, one separator family per
    /// relation, every relation an endo-relation on `space`, every separator
    /// a member of `𝓕`. Axioms and directedness are left to [`WitnessFamily::classify`].
    pub fn new(
        space: Arc<CFSpace>,
        relations: Vec<ApproximableRelation>,
        separators: Vec<Vec<Subset>>,
    ) -> Result<Self> {
        if relations.is_empty() {
            return Err(Error::WitnessInvalid("no relations".into()));
        }
        if relations.len() != separators.len() {
            return Err(Error::WitnessInvalid(format!(
                "{} relations but {} separator families",
                relations.len(),
                separators.len()
            )));
        }
        for r in &relations {
            if **r.source() != *space || **r.target() != *space {
                return Err(Error::SpaceMismatch);
            }
        }
        for m in separators.iter().flatten() {
            if space.family_index(*m).is_none() {
                return Err(Error::NotInFamily);
            }
        }
        Ok(WitnessFamily {
            space,
            relations,
            separators,
        })
    }

    /// `{Id}` with `𝓜 = 𝓕`.
    pub fn identity(space: &Arc<CFSpace>) -> Result<Self> {
        let id = ApproximableRelation::identity_relation(space)?;
        Self::new(space.clone(), vec![id], vec![space.family().to_vec()])
    }

    pub fn space(&self) -> &Arc<CFSpace> {
        &self.space
    }

    pub fn relations(&self) -> &[ApproximableRelation] {
        &self.relations
    }

    pub fn separators(&self) -> &[Vec<Subset>] {
        &self.separators
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn all_approximable(&self) -> bool {
        self.relations.iter().all(|r| r.validate_approximable().valid)
    }

    /// Every pair of relations has an upper bound in the family.
    pub fn is_directed(&self) -> bool {
        let rs = &self.relations;
        rs.iter().all(|a| {
            rs.iter()
                .all(|b| rs.iter().any(|c| a.is_subrelation_of(c) && b.is_subrelation_of(c)))
        })
    }

    /// `⋃ Θ_i = Id`.
    pub fn check_fs1(&self) -> bool {
        let fam = self.space.family();
        let n = fam.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let id = fam[j].is_subset(self.space.upper_of(i));
                id == self.relations.iter().any(|r| r.contains(i, j))
            })
        })
    }

    /// First `(index, F)` for which no separator works, under FS 2 or FS 2′.
    pub fn fs2_failure(&self, strong: bool) -> Option<(usize, Subset)> {
        let fam = self.space.family();
        for (idx, (rel, seps)) in self.relations.iter().zip(&self.separators).enumerate() {
            for (i, &f) in fam.iter().enumerate() {
                let rf = self.space.upper_of(i);
                let related: Vec<Subset> = (0..fam.len())
                    .filter(|&j| rel.contains(i, j))
                    .map(|j| fam[j])
                    .collect();
                let ok = seps.iter().any(|&m| {
                    let rm = self.space.upper(m);
                    related.iter().all(|&g| {
                        if strong {
                            g.is_subset(rm) && m.is_subset(rf)
                        } else {
                            g.is_subset(rm) && rm.is_subset(rf)
                        }
                    })
                });
                if !ok {
                    return Some((idx, f));
                }
            }
        }
        None
    }

    pub fn check_fs2(&self) -> bool {
        self.fs2_failure(false).is_none()
    }

    pub fn check_fs2_strong(&self) -> bool {
        self.fs2_failure(true).is_none()
    }

    pub fn classify(&self) -> Classification {
        let base = self.all_approximable() && self.is_directed() && self.check_fs1();
        let fs = base && self.check_fs2();
        Classification {
            fs,
            strong_fs: base && self.check_fs2_strong(),
            topological_fs: fs && self.space.base().is_preorder(),
        }
    }

    /// The maps `f_{Θ_i}` on `𝔠(space)` with the separator sets
    /// `{R̄(M) | M ∈ 𝓜_i}` as subsets of the domain.
    pub fn derived_maps(&self, c: &ClosedSetPoset) -> Result<Vec<(MonotoneMap, Subset)>> {
        self.relations
            .iter()
            .zip(&self.separators)
            .map(|(r, seps)| {
                let r = if r.is_validated() { r.clone() } else { r.clone().validated()? };
                let map = r.to_map_between(c, c)?;
                let mut idx = Subset::EMPTY;
                for &m in seps {
                    let k = c
                        .index_of(self.space.upper(m))
                        .ok_or_else(|| Error::Postcondition("R̄(M) is not CF-closed".into()))?;
                    idx = idx.with(k);
                }
                Ok((map, idx))
            })
            .collect()
    }

    /// The derived maps form an approximate identity on `𝔠(space)` and each
    /// is finitely separating with its separator sets.
    pub fn domain_evidence(&self, c: &ClosedSetPoset) -> Result<bool> {
        let derived = self.derived_maps(c)?;
        let maps: Vec<MonotoneMap> = derived.iter().map(|(m, _)| m.clone()).collect();
        Ok(is_approximate_identity(c.poset(), &maps)?
            && derived.iter().all(|(m, sep)| m.separates_with(*sep)))
    }
}

/// `𝒟 = {K ⊆ U | ∃F ∈ 𝓕, F ⊆ K}` in canonical order.
pub fn index_set(space: &CFSpace) -> Vec<Subset> {
    crate::subset::all_subsets_canonical(space.base().len())
        .into_iter()
        .filter(|&k| space.family().iter().any(|f| f.is_subset(k)))
        .collect()
}

/// A deterministic table `K ↦ 𝓜_K` over every `K ⊆ U`.
#[derive(Debug, Clone, PartialEq)]
pub struct TBSelector {
    space: Arc<CFSpace>,
    /// Indexed by the bits of `K`; entries are positions in `𝓕`.
    table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TbFailure {
    pub k: Subset,
    pub condition: u8,
    /// TB 1: the missing member. TB 2: `F` followed by the members of `𝒢`.
    pub detail: Vec<Subset>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TbReport {
    pub checked: usize,
    pub failure: Option<TbFailure>,
    pub valid: bool,
}

fn members_to_indices(space: &CFSpace, ms: &[Subset]) -> Result<Vec<usize>> {
    let mut idx = ms
        .iter()
        .map(|&m| space.family_index(m).ok_or(Error::NotInFamily))
        .collect::<Result<Vec<_>>>()?;
    idx.sort_unstable();
    idx.dedup();
    Ok(idx)
}

impl TBSelector {
    /// Tabulates `f` over every `K ⊆ U`.
    pub fn from_fn(space: Arc<CFSpace>, caps: &Caps, mut f: impl FnMut(Subset) -> Vec<Subset>) -> Result<Self> {
        space.require_validated()?;
        Caps::require("universe", space.base().len(), caps.universe)?;
        let n = space.base().len();
        let mut table = Vec::with_capacity(1 << n);
        for bits in 0..(1u64 << n) {
            table.push(members_to_indices(&space, &f(Subset::from_bits(bits)))?);
        }
        Ok(TBSelector { space, table })
    }

    /// From explicit entries, which must cover every `K ∈ 𝒟`. A `K` outside
    /// `𝒟` that has no entry gets `𝓜_U`: for such `K` TB 1 is vacuous and TB 2
    /// does not mention `K`, so any entry that passes at `U` passes there.
    pub fn from_entries(space: Arc<CFSpace>, caps: &Caps, entries: &[(Subset, Vec<Subset>)]) -> Result<Self> {
        space.require_validated()?;
        Caps::require("universe", space.base().len(), caps.universe)?;
        let n = space.base().len();
        let mut table: Vec<Option<Vec<usize>>> = vec![None; 1 << n];
        for (k, ms) in entries {
            space.base().check_subset(*k)?;
            table[k.bits() as usize] = Some(members_to_indices(&space, ms)?);
        }
        for k in index_set(&space) {
            if table[k.bits() as usize].is_none() {
                return Err(Error::TbViolated(format!(
                    "no entry for K = {}",
                    space.render(k)
                )));
            }
        }
        let whole = table[Subset::full(n).bits() as usize].clone().unwrap_or_default();
        let table = table
            .into_iter()
            .map(|e| e.unwrap_or_else(|| whole.clone()))
            .collect();
        Ok(TBSelector { space, table })
    }

    /// `K ↦ 𝓕` for every `K`.
    pub fn whole_family(space: Arc<CFSpace>, caps: &Caps) -> Result<Self> {
        let fam = space.family().to_vec();
        Self::from_fn(space, caps, |_| fam.clone())
    }

    pub fn space(&self) -> &Arc<CFSpace> {
        &self.space
    }

    /// `𝓜_K` as sets.
    pub fn members(&self, k: Subset) -> Vec<Subset> {
        self.indices(k).iter().map(|&i| self.space.family()[i]).collect()
    }

    fn indices(&self, k: Subset) -> &[usize] {
        &self.table[k.bits() as usize]
    }

    /// Every `(K, 𝓜_K)` with `K ∈ 𝒟`.
    pub fn entries(&self) -> Vec<(Subset, Vec<Subset>)> {
        index_set(&self.space)
            .into_iter()
            .map(|k| (k, self.members(k)))
            .collect()
    }

    /// TB 1 and TB 2 at every `K ⊆ U`, in canonical order of `K`.
    pub fn check_tb(&self) -> Result<TbReport> {
        if !self.space.base().is_preorder() {
            return Err(Error::NotTopological);
        }
        let mut checked = 0;
        for k in crate::subset::all_subsets_canonical(self.space.base().len()) {
            checked += 1;
            if let Some(failure) = tb_local(&self.space, k, self.indices(k)) {
                return Ok(TbReport {
                    checked,
                    failure: Some(failure),
                    valid: false,
                });
            }
        }
        Ok(TbReport {
            checked,
            failure: None,
            valid: true,
        })
    }

    /// TB 2 by enumerating every `𝒢 ⊆ 𝓜_K`; exponential in `|𝓜_K|`.
    pub fn check_tb_literal(&self, caps: &Caps) -> Result<bool> {
        if !self.space.base().is_preorder() {
            return Err(Error::NotTopological);
        }
        let sp = &self.space;
        let fam = sp.family();
        for k in crate::subset::all_subsets_canonical(sp.base().len()) {
            let mk = self.indices(k);
            Caps::require("selector entry", mk.len(), caps.family)?;
            if fam.iter().enumerate().any(|(i, f)| f.is_subset(k) && !mk.contains(&i)) {
                return Ok(false);
            }
            for fi in 0..fam.len() {
                let rf = sp.upper_of(fi);
                for g in Subset::full(mk.len()).subsets() {
                    let union = g.iter().fold(Subset::EMPTY, |acc, t| acc.union(fam[mk[t]]));
                    if !union.is_subset(rf) {
                        continue;
                    }
                    let ok = mk.iter().any(|&m| {
                        let rm = sp.upper_of(m);
                        union.is_subset(rm) && rm.is_subset(rf)
                    });
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    fn require_tb(&self) -> Result<()> {
        let report = self.check_tb()?;
        match report.failure {
            None => Ok(()),
            Some(f) => Err(Error::TbViolated(format!(
                "TB {} fails at K = {}",
                f.condition,
                self.space.render(f.k)
            ))),
        }
    }

    /// `δ_K(E)` with its well-definedness conditions checked: `E` is closed, TB
    /// holds at `K`, and the union has a greatest member.
    pub fn delta_k(&self, k: Subset, e: Subset) -> Result<Subset> {
        if !self.space.base().is_preorder() {
            return Err(Error::NotTopological);
        }
        self.space.base().check_subset(k)?;
        if self.space.closed_witness(e).is_none() {
            return Err(Error::NotClosed);
        }
        if let Some(f) = tb_local(&self.space, k, self.indices(k)) {
            return Err(Error::TbViolated(format!(
                "TB {} fails at K = {}",
                f.condition,
                self.space.render(f.k)
            )));
        }
        let parts: Vec<Subset> = self
            .indices(k)
            .iter()
            .filter(|&&m| self.space.family()[m].is_subset(e))
            .map(|&m| self.space.upper_of(m))
            .collect();
        let (union, _) = self.delta_union(k, e);
        if !parts.contains(&union) {
            return Err(Error::Postcondition("δ_K(E) has no greatest member".into()));
        }
        if self.space.closed_witness(union).is_none() {
            return Err(Error::Postcondition("δ_K(E) is not CF-closed".into()));
        }
        Ok(union)
    }

    /// The raw union `⋃{R̄(M) | M ∈ 𝓜_K, M ⊆ E}` for any `E`, with a flag
    /// set when no `M` qualifies.
    pub fn delta_union(&self, k: Subset, e: Subset) -> (Subset, bool) {
        let mut union = Subset::EMPTY;
        let mut any = false;
        for &m in self.indices(k) {
            if self.space.family()[m].is_subset(e) {
                union = union.union(self.space.upper_of(m));
                any = true;
            }
        }
        (union, !any)
    }

    /// `{δ_K}_{K ∈ 𝒟}` on the given domain of the space, with the
    /// construction's guarantees asserted: each `δ_K` is Scott continuous
    /// with finite range, and the family is an approximate identity.
    pub fn delta_family(&self, c: &ClosedSetPoset) -> Result<Vec<(Subset, MonotoneMap)>> {
        self.require_tb()?;
        if **c.space() != *self.space {
            return Err(Error::SpaceMismatch);
        }
        let mut out = Vec::new();
        for k in index_set(&self.space) {
            let graph = c
                .sets()
                .iter()
                .map(|&e| {
                    let d = self.delta_k(k, e)?;
                    c.index_of(d)
                        .ok_or_else(|| Error::Postcondition("δ_K(E) is not in the domain".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            let map = MonotoneMap::new(c.poset().clone(), c.poset().clone(), graph)
                .map_err(|e| Error::Postcondition(format!("δ_K is not monotone: {e}")))?;
            if !map.is_scott_continuous()? || map.range().len() > self.indices(k).len() {
                return Err(Error::Postcondition("δ_K lacks continuity or finite range".into()));
            }
            out.push((k, map));
        }
        let mut distinct: Vec<MonotoneMap> = Vec::new();
        for (_, m) in &out {
            if !distinct.contains(m) {
                distinct.push(m.clone());
            }
        }
        if !is_approximate_identity(c.poset(), &distinct)? {
            return Err(Error::Postcondition("δ family is not an approximate identity".into()));
        }
        Ok(out)
    }

    /// `{Θ_K}_{K ∈ 𝒟}` with `(F, G) ∈ Θ_K ⇔ ∃M ∈ 𝓜_K, G ⊆ R̄(M) ⊆ R̄(F)`
    /// and separators `𝓜_K`. The result is checked to classify as a
    /// topological FS witness.
    pub fn theta_from_tb(&self) -> Result<WitnessFamily> {
        self.require_tb()?;
        let sp = &self.space;
        let fam = sp.family();
        let mut relations = Vec::new();
        let mut separators = Vec::new();
        for k in index_set(sp) {
            let mk = self.indices(k);
            let rel = ApproximableRelation::from_fn(sp.clone(), sp.clone(), |i, j| {
                mk.iter().any(|&m| {
                    let rm = sp.upper_of(m);
                    fam[j].is_subset(rm) && rm.is_subset(sp.upper_of(i))
                })
            })
            .validated()
            .map_err(|e| Error::Postcondition(format!("Θ_K is not approximable: {e}")))?;
            relations.push(rel);
            separators.push(self.members(k));
        }
        let w = WitnessFamily::new(sp.clone(), relations, separators)?;
        if !w.classify().topological_fs {
            return Err(Error::Postcondition("Θ_K family is not a topological FS witness".into()));
        }
        Ok(w)
    }
}

/// TB 1 and the reduced TB 2 at one `K`. For each `F` the largest admissible
/// `𝒢` is `{M ∈ 𝓜_K | M ⊆ R̄(F)}`; an `M` that works for it works for all
/// smaller `𝒢`, the empty one included.
fn tb_local(space: &CFSpace, k: Subset, mk: &[usize]) -> Option<TbFailure> {
    let fam = space.family();
    if let Some(i) = (0..fam.len()).find(|&i| fam[i].is_subset(k) && !mk.contains(&i)) {
        return Some(TbFailure {
            k,
            condition: 1,
            detail: vec![fam[i]],
        });
    }
    for (fi, &f) in fam.iter().enumerate() {
        let rf = space.upper_of(fi);
        let g: Vec<usize> = mk.iter().copied().filter(|&m| fam[m].is_subset(rf)).collect();
        let union = g.iter().fold(Subset::EMPTY, |acc, &m| acc.union(fam[m]));
        let ok = mk.iter().any(|&m| {
            let rm = space.upper_of(m);
            union.is_subset(rm) && rm.is_subset(rf)
        });
        if !ok {
            let mut detail = vec![f];
            detail.extend(g.iter().map(|&m| fam[m]));
            return Some(TbFailure {
                k,
                condition: 2,
                detail,
            });
        }
    }
    None
}

/// Looks for a selector of the form `K ↦ 𝒫(B) ∩ 𝓕` with `B ⊇ K`, trying `B`
/// by increasing size. `budget` bounds the number of candidate `B` per `K`;
/// `Ok(None)` means no selector was found within it.
pub fn search_tb_selector(space: &Arc<CFSpace>, caps: &Caps, budget: Option<usize>) -> Result<Option<TBSelector>> {
    space.require_validated()?;
    if !space.base().is_preorder() {
        return Err(Error::NotTopological);
    }
    Caps::require("universe", space.base().len(), caps.universe)?;
    let n = space.base().len();
    let fam = space.family();
    let by_size = crate::subset::all_subsets_canonical(n);
    let mut table = Vec::with_capacity(1 << n);
    for bits in 0..(1u64 << n) {
        let k = Subset::from_bits(bits);
        let mut found = None;
        for (tried, &b) in by_size.iter().filter(|b| k.is_subset(**b)).enumerate() {
            if budget.is_some_and(|limit| tried >= limit) {
                break;
            }
            let mk: Vec<usize> = (0..fam.len()).filter(|&i| fam[i].is_subset(b)).collect();
            if tb_local(space, k, &mk).is_none() {
                found = Some(mk);
                break;
            }
        }
        match found {
            Some(mk) => table.push(mk),
            None => return Ok(None),
        }
    }
    Ok(Some(TBSelector {
        space: space.clone(),
        table,
    }))
}
