//! Posets as CF-approximation spaces and back.
//!
//! The induced space of a finite poset `L` has universe `L`, relation `≪`
//! and family the finite subsets with a top element `c_F`. Its domain of
//! CF-closed sets is `{⇓x | x ∈ L}`, isomorphic to `L`. The algebraic
//! variant uses the compact elements `K(L)` with `≤`; on finite posets both
//! coincide.

use std::sync::Arc;

use serde::Serialize;

use crate::approx_rel::ApproximableRelation;
use crate::cf_space::{CFSpace, ClosedSetPoset};
use crate::config::{Caps, Mode};
use crate::error::{Error, Result};
use crate::fs_space::{TBSelector, WitnessFamily};
use crate::ga_space::GASpace;
use crate::order::{verify_bf_domain_witness, verify_fs_domain_witness, FinitePoset, MonotoneMap};
use crate::subset::Subset;

/// An induced space with the bookkeeping back to its poset.
#[derive(Debug, Clone)]
pub struct InducedSpace {
    origin: Arc<FinitePoset>,
    space: Arc<CFSpace>,
    /// `c_F` for each member of the family, as an element of `origin`.
    top_of: Vec<usize>,
    /// Universe position to `origin` element.
    universe_map: Vec<usize>,
}

impl InducedSpace {
    pub fn origin(&self) -> &Arc<FinitePoset> {
        &self.origin
    }

    pub fn space(&self) -> &Arc<CFSpace> {
        &self.space
    }

    /// `c_F` for the `i`-th member of the family.
    pub fn top(&self, i: usize) -> usize {
        self.top_of[i]
    }

    pub fn top_of_set(&self, f: Subset) -> Option<usize> {
        self.space.family_index(f).map(|i| self.top_of[i])
    }

    pub fn universe_map(&self) -> &[usize] {
        &self.universe_map
    }

    /// Universe position of an element of `origin`, if it is in the universe.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.universe_map.iter().position(|&u| u == x)
    }

    /// Universe positions of the elements of `origin` in `s`.
    pub fn positions(&self, s: Subset) -> Subset {
        s.iter().filter_map(|x| self.position(x)).collect()
    }

    /// Origin elements of a set of universe positions.
    pub fn elements(&self, s: Subset) -> Subset {
        s.iter().map(|u| self.universe_map[u]).collect()
    }
}

fn build_induced(origin: &Arc<FinitePoset>, carrier: Subset, rel: impl Fn(usize, usize) -> bool) -> Result<InducedSpace> {
    let universe_map: Vec<usize> = carrier.iter().collect();
    let labels: Vec<String> = universe_map.iter().map(|&x| origin.label(x).to_string()).collect();
    let n = universe_map.len();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if rel(universe_map[a], universe_map[b]) {
                pairs.push((a, b));
            }
        }
    }
    let base = GASpace::new(labels, &pairs)?;
    let mut family = Vec::new();
    for t in 0..n {
        let below: Subset = (0..n)
            .filter(|&u| u != t && origin.leq(universe_map[u], universe_map[t]))
            .collect();
        for s in below.subsets() {
            family.push(s.with(t));
        }
    }
    let space = CFSpace::new(base, family)?
        .validated()
        .map_err(|e| Error::Postcondition(format!("induced space is not CF: {e}")))?;
    let top_of = space
        .family()
        .iter()
        .map(|&f| {
            let elems: Subset = f.iter().map(|u| universe_map[u]).collect();
            origin
                .greatest_of(elems)
                .ok_or_else(|| Error::Postcondition("family member without a top".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InducedSpace {
        origin: origin.clone(),
        space: Arc::new(space),
        top_of,
        universe_map,
    })
}

/// `(L, ≪, 𝓕_L)`.
pub fn induce_cf_from_poset(l: &Arc<FinitePoset>) -> Result<InducedSpace> {
    if l.is_empty() {
        return Err(Error::EmptyPoset);
    }
    build_induced(l, l.elements(), |a, b| l.leq(a, b))
}

/// `(K(L), ≤, 𝓕_{K(L)})`; the result is checked to be topological.
pub fn induce_topcf_from_algebraic(l: &Arc<FinitePoset>) -> Result<InducedSpace> {
    if l.is_empty() {
        return Err(Error::EmptyPoset);
    }
    if !l.is_algebraic_domain(Mode::Fast)? {
        return Err(Error::PreconditionViolated("poset is not algebraic".into()));
    }
    let k = l.compacts(Mode::Fast)?;
    let ind = build_induced(l, k, |a, b| l.leq(a, b))?;
    if !ind.space.is_topological_cf()? {
        return Err(Error::Postcondition("induced space on K(L) is not topological".into()));
    }
    Ok(ind)
}

/// The isomorphism `x ↦ ⇓x` from `L` onto the domain of its induced space.
#[derive(Debug, Clone)]
pub struct ClosedSetIso {
    pub induced: InducedSpace,
    pub closed: ClosedSetPoset,
    /// `map[x]` is the index in `closed` of the image of `x`.
    pub map: Vec<usize>,
}

fn iso_onto_closed(induced: InducedSpace, image: impl Fn(usize) -> Subset) -> Result<ClosedSetIso> {
    let closed = induced.space.cf_closed_sets()?;
    let l = induced.origin.clone();
    let map = (0..l.len())
        .map(|x| {
            let e = induced.positions(image(x));
            closed.index_of(e).ok_or_else(|| {
                Error::IsoCheckFailed(format!("image of `{}` is not CF-closed", l.label(x)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if !crate::order::iso::verify(&l, closed.poset(), &map) {
        return Err(Error::IsoCheckFailed("x ↦ ⇓x is not an order isomorphism".into()));
    }
    Ok(ClosedSetIso { induced, closed, map })
}

/// `L ≅ 𝔠(L, ≪, 𝓕_L)` via `x ↦ ⇓x`.
pub fn closed_sets_iso(l: &Arc<FinitePoset>) -> Result<ClosedSetIso> {
    let induced = induce_cf_from_poset(l)?;
    let l = l.clone();
    iso_onto_closed(induced, |x| l.way_below_set(x, Mode::Fast).unwrap_or_default())
}

/// `L ≅ 𝔠(K(L), ≤, 𝓕_{K(L)})` via `x ↦ ↓x ∩ K(L)`.
pub fn closed_sets_iso_algebraic(l: &Arc<FinitePoset>) -> Result<ClosedSetIso> {
    let induced = induce_topcf_from_algebraic(l)?;
    let k = l.compacts(Mode::Fast)?;
    let l = l.clone();
    iso_onto_closed(induced, |x| l.down_set(x).intersection(k))
}

fn check_map_between(g: &MonotoneMap, s1: &InducedSpace, s2: &InducedSpace) -> Result<()> {
    if g.source() != &s1.origin || g.target() != &s2.origin {
        return Err(Error::MapMismatch("map is not between the origin posets".into()));
    }
    Ok(())
}

/// `Ω_g`: `(F, G) ∈ Ω_g ⇔ c_G ≪ g(c_F)`. The `≤` form is built alongside
/// and required to coincide.
pub fn omega_from_map(g: &MonotoneMap, s1: &InducedSpace, s2: &InducedSpace) -> Result<ApproximableRelation> {
    check_map_between(g, s1, s2)?;
    if !g.is_scott_continuous()? {
        return Err(Error::MapNotContinuous);
    }
    let l2 = &s2.origin;
    let mut way_below_failed = None;
    let rel = ApproximableRelation::from_fn(s1.space.clone(), s2.space.clone(), |i, j| {
        match l2.way_below(s2.top_of[j], g.apply(s1.top_of[i]), Mode::Fast) {
            Ok(b) => b,
            Err(e) => {
                way_below_failed = Some(e);
                false
            }
        }
    });
    if let Some(e) = way_below_failed {
        return Err(e);
    }
    let leq = ApproximableRelation::from_fn(s1.space.clone(), s2.space.clone(), |i, j| {
        l2.leq(s2.top_of[j], g.apply(s1.top_of[i]))
    });
    if rel != leq {
        return Err(Error::Postcondition("≪ and ≤ forms of Ω_g differ".into()));
    }
    rel.validated()
        .map_err(|e| Error::Postcondition(format!("Ω_g is not approximable: {e}")))
}

/// `g_Ω(x) = sup ⋃{R̄(G) | F ⊆ ⇓x, F Ω G}`.
pub fn map_from_omega(omega: &ApproximableRelation, s1: &InducedSpace, s2: &InducedSpace) -> Result<MonotoneMap> {
    omega.require_validated()?;
    if *omega.source() != s1.space || *omega.target() != s2.space {
        return Err(Error::SpaceMismatch);
    }
    let l1 = &s1.origin;
    let l2 = &s2.origin;
    let f1 = s1.space.family();
    let pairs = omega.pairs();
    let mut graph = Vec::with_capacity(l1.len());
    for x in 0..l1.len() {
        let approx = s1.positions(l1.way_below_set(x, Mode::Fast)?);
        let union = pairs
            .iter()
            .filter(|&&(i, _)| f1[i].is_subset(approx))
            .fold(Subset::EMPTY, |acc, &(_, j)| acc.union(s2.space.upper_of(j)));
        let y = l2
            .sup(s2.elements(union))
            .ok_or_else(|| Error::Postcondition(format!("g_Ω(`{}`) has no supremum", l1.label(x))))?;
        graph.push(y);
    }
    let map = MonotoneMap::new(l1.clone(), l2.clone(), graph)
        .map_err(|e| Error::Postcondition(format!("g_Ω is not monotone: {e}")))?;
    if !map.is_scott_continuous()? {
        return Err(Error::Postcondition("g_Ω is not Scott continuous".into()));
    }
    Ok(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessMode {
    /// `c_G ≪ δ_i(c_F)` with separators `{{m} | m ∈ M_i}`.
    Plain,
    /// `c_G ≪ δ_i²(c_F)` with separators `{{δ_i(m)} | m ∈ M_i}`.
    Strong,
    /// `c_G ≤ δ_i(c_F)` over `K(L)` with separators `{{m} | m ∈ Im δ_i}`.
    Bf,
}

/// The singleton approximate identity `{id}`, valid on every finite poset.
pub fn canonical_deltas(l: &Arc<FinitePoset>) -> Vec<MonotoneMap> {
    vec![MonotoneMap::identity(l.clone())]
}

/// All deflationary monotone endo-maps. It contains `id`, which bounds every
/// member, so it is an approximate identity of finitely separating maps.
pub fn deflationary_deltas(l: &Arc<FinitePoset>) -> Vec<MonotoneMap> {
    MonotoneMap::enumerate_deflationary(l)
}

/// The kernel operators among [`deflationary_deltas`].
pub fn kernel_deltas(l: &Arc<FinitePoset>) -> Vec<MonotoneMap> {
    deflationary_deltas(l)
        .into_iter()
        .filter(MonotoneMap::is_kernel_operator)
        .collect()
}

/// Transfers a domain-level witness to an FS witness on the induced space.
/// Plain and strong mode use `(L, ≪, 𝓕_L)`; bf mode uses `(K(L), ≤, 𝓕_{K(L)})`.
pub fn fs_witness_from_domain(
    l: &Arc<FinitePoset>,
    deltas: &[MonotoneMap],
    mode: WitnessMode,
) -> Result<(InducedSpace, WitnessFamily)> {
    let ok = match mode {
        WitnessMode::Plain | WitnessMode::Strong => verify_fs_domain_witness(l, deltas)?,
        WitnessMode::Bf => verify_bf_domain_witness(l, deltas)?,
    };
    if !ok {
        return Err(Error::WitnessInvalid(match mode {
            WitnessMode::Bf => "maps are not an approximate identity of finite-range kernel operators".into(),
            _ => "maps are not an approximate identity of finitely separating maps".into(),
        }));
    }
    let ind = match mode {
        WitnessMode::Bf => induce_topcf_from_algebraic(l)?,
        _ => induce_cf_from_poset(l)?,
    };
    let singleton = |x: usize| -> Result<Subset> {
        ind.position(x)
            .map(Subset::singleton)
            .ok_or_else(|| Error::Postcondition(format!("`{}` is not in the universe", l.label(x))))
    };
    let mut relations = Vec::with_capacity(deltas.len());
    let mut separators = Vec::with_capacity(deltas.len());
    for d in deltas {
        let (rel, seps) = match mode {
            WitnessMode::Plain | WitnessMode::Strong => {
                let m = d
                    .finitely_separating_witness()
                    .ok_or_else(|| Error::Postcondition("δ lost its separating set".into()))?;
                let strong = mode == WitnessMode::Strong;
                let image = |x: usize| if strong { d.apply(d.apply(x)) } else { d.apply(x) };
                let rel = ApproximableRelation::from_fn(ind.space.clone(), ind.space.clone(), |i, j| {
                    l.leq(ind.top_of[j], image(ind.top_of[i]))
                });
                let seps = m
                    .iter()
                    .map(|x| singleton(if strong { d.apply(x) } else { x }))
                    .collect::<Result<Vec<_>>>()?;
                (rel, seps)
            }
            WitnessMode::Bf => {
                let rel = ApproximableRelation::from_fn(ind.space.clone(), ind.space.clone(), |i, j| {
                    l.leq(ind.top_of[j], d.apply(ind.top_of[i]))
                });
                let seps = d.range().iter().map(singleton).collect::<Result<Vec<_>>>()?;
                (rel, seps)
            }
        };
        let rel = rel
            .validated()
            .map_err(|e| Error::Postcondition(format!("Θ_i is not approximable: {e}")))?;
        relations.push(rel);
        let mut seps = seps;
        crate::subset::canonicalize(&mut seps);
        separators.push(seps);
    }
    let w = WitnessFamily::new(ind.space.clone(), relations, separators)?;
    let class = w.classify();
    let holds = match mode {
        WitnessMode::Plain => class.fs,
        WitnessMode::Strong => class.strong_fs,
        WitnessMode::Bf => class.topological_fs,
    };
    if !holds {
        return Err(Error::Postcondition(format!("{mode:?} witness does not classify")));
    }
    Ok((ind, w))
}

/// `𝓜_H = 𝒫(Im δ_j) ∩ 𝓕_{K(L)}` where `j` is the first index with
/// `H ⊆ Im δ_j` (the first index overall for `H = ∅`).
pub fn tb_witness_from_bf(l: &Arc<FinitePoset>, deltas: &[MonotoneMap], caps: &Caps) -> Result<(InducedSpace, TBSelector)> {
    if !verify_bf_domain_witness(l, deltas)? {
        return Err(Error::WitnessInvalid(
            "maps are not an approximate identity of finite-range kernel operators".into(),
        ));
    }
    let ind = induce_topcf_from_algebraic(l)?;
    let images: Vec<Subset> = deltas.iter().map(|d| ind.positions(d.range())).collect();
    let fam = ind.space.family().to_vec();
    let mut missing = false;
    let sel = TBSelector::from_fn(ind.space.clone(), caps, |h| {
        let j = if h.is_empty() {
            Some(0)
        } else {
            images.iter().position(|im| h.is_subset(*im))
        };
        match j {
            Some(j) => fam.iter().copied().filter(|f| f.is_subset(images[j])).collect(),
            None => {
                missing = true;
                Vec::new()
            }
        }
    })?;
    if missing {
        return Err(Error::NoCoveringIndex);
    }
    if !sel.check_tb()?.valid {
        return Err(Error::Postcondition("selector from kernel operators fails TB".into()));
    }
    Ok((ind, sel))
}

/// A space, its domain, the induced space `V` of that domain and the
/// mutually inverse relations between them.
#[derive(Debug, Clone)]
pub struct SelfIso {
    pub closed: ClosedSetPoset,
    pub v: InducedSpace,
    /// `(F, 𝒞) ∈ Υ ⇔ E_𝒞 ≪ R̄(F)`.
    pub upsilon: ApproximableRelation,
    /// `(𝒞, F) ∈ Ω ⇔ F ⊆ E_𝒞`.
    pub omega: ApproximableRelation,
}

/// `(U, R, 𝓕) ≅ (V, Q, 𝓖)` with `V = 𝔠(U, R, 𝓕)`. Fails with
/// [`Error::IsoCheckFailed`] if either composite is not an identity.
pub fn space_self_iso(space: &Arc<CFSpace>) -> Result<SelfIso> {
    space.require_validated()?;
    let closed = space.cf_closed_sets()?;
    let v = induce_cf_from_poset(closed.poset())?;
    let c_poset = closed.poset();
    let e_of = |k: usize| v.top_of[k];
    let n = space.family().len();
    let r_f: Vec<usize> = (0..n)
        .map(|i| {
            closed
                .index_of(space.upper_of(i))
                .ok_or_else(|| Error::Postcondition("R̄(F) is not CF-closed".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let upsilon = ApproximableRelation::from_fn(space.clone(), v.space.clone(), |i, k| {
        c_poset.leq(e_of(k), r_f[i])
    })
    .validated()
    .map_err(|e| Error::Postcondition(format!("Υ is not approximable: {e}")))?;
    let fam = space.family().to_vec();
    let omega = ApproximableRelation::from_fn(v.space.clone(), space.clone(), |k, i| {
        fam[i].is_subset(closed.set(e_of(k)))
    })
    .validated()
    .map_err(|e| Error::Postcondition(format!("Ω is not approximable: {e}")))?;

    let back = ApproximableRelation::compose(&omega, &upsilon)?;
    if back != ApproximableRelation::identity_relation(space)? {
        return Err(Error::IsoCheckFailed("Ω ∘ Υ is not the identity".into()));
    }
    let forth = ApproximableRelation::compose(&upsilon, &omega)?;
    if forth != ApproximableRelation::identity_relation(&v.space)? {
        return Err(Error::IsoCheckFailed("Υ ∘ Ω is not the identity".into()));
    }
    Ok(SelfIso {
        closed,
        v,
        upsilon,
        omega,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf_space::fixtures::abc_with;
    use crate::order::is_approximate_identity;

    fn chain(n: usize) -> Arc<FinitePoset> {
        Arc::new(FinitePoset::chain(n))
    }

    fn v_poset() -> Arc<FinitePoset> {
        Arc::new(FinitePoset::from_labeled_covers(&["⊥", "a", "b"], &[("⊥", "a"), ("⊥", "b")]).unwrap())
    }

    fn names(sp: &CFSpace, sets: &[Subset]) -> Vec<String> {
        sets.iter().map(|&s| sp.render(s)).collect()
    }

    #[test]
    fn induced_space_examples() {
        let ind = induce_cf_from_poset(&chain(3)).unwrap();
        assert_eq!(ind.space().base().relation_pairs().len(), 6);
        assert_eq!(ind.space().family().len(), 7);

        let ind = induce_cf_from_poset(&v_poset()).unwrap();
        assert_eq!(
            names(ind.space(), ind.space().family()),
            vec!["{⊥}", "{a}", "{b}", "{⊥,a}", "{⊥,b}"]
        );

        let one = Arc::new(FinitePoset::from_labeled(&["⋆"], &[("⋆", "⋆")]).unwrap());
        let ind = induce_cf_from_poset(&one).unwrap();
        assert_eq!(names(ind.space(), ind.space().family()), vec!["{⋆}"]);
        assert_eq!(ind.space().base().relation_pairs(), vec![(0, 0)]);

        assert_eq!(
            induce_cf_from_poset(&chain(0)).unwrap_err(),
            Error::EmptyPoset
        );
    }

    #[test]
    fn algebraic_variant_coincides() {
        for l in [chain(3), v_poset(), chain(1)] {
            let a = induce_cf_from_poset(&l).unwrap();
            let b = induce_topcf_from_algebraic(&l).unwrap();
            assert_eq!(a.space(), b.space());
            assert!(b.space().is_topological_cf().unwrap());
        }
    }

    #[test]
    fn closed_set_iso_examples() {
        let iso = closed_sets_iso(&chain(3)).unwrap();
        let got: Vec<String> = iso
            .map
            .iter()
            .map(|&k| iso.induced.space().render(iso.closed.set(k)))
            .collect();
        assert_eq!(got, vec!["{0}", "{0,1}", "{0,1,2}"]);

        let iso = closed_sets_iso(&v_poset()).unwrap();
        let got: Vec<String> = iso
            .map
            .iter()
            .map(|&k| iso.induced.space().render(iso.closed.set(k)))
            .collect();
        assert_eq!(got, vec!["{⊥}", "{⊥,a}", "{⊥,b}"]);
        assert!(closed_sets_iso_algebraic(&v_poset()).is_ok());
    }

    #[test]
    fn omega_examples() {
        let l = chain(2);
        let ind = induce_cf_from_poset(&l).unwrap();
        let sp = ind.space();
        let f = |lab: &[&str]| sp.base().subset_of(lab).unwrap();
        let om = omega_from_map(&MonotoneMap::identity(l.clone()), &ind, &ind).unwrap();
        assert!(om.contains_sets(f(&["1"]), f(&["0"])));
        assert!(!om.contains_sets(f(&["0"]), f(&["1"])));

        let bot = MonotoneMap::constant_bottom(l.clone()).unwrap();
        let ob = omega_from_map(&bot, &ind, &ind).unwrap();
        for i in 0..sp.family().len() {
            for j in 0..sp.family().len() {
                assert_eq!(ob.contains(i, j), ind.top(j) == 0);
            }
        }
        assert!(ob.is_subrelation_of(&om));
        assert_eq!(map_from_omega(&ob, &ind, &ind).unwrap(), bot);
        assert_eq!(map_from_omega(&om, &ind, &ind).unwrap(), MonotoneMap::identity(l));
    }

    #[test]
    fn witness_transfer_examples() {
        let (ind, w) = fs_witness_from_domain(&chain(3), &canonical_deltas(&chain(3)), WitnessMode::Plain).unwrap();
        assert_eq!(w.relations()[0], ApproximableRelation::identity_relation(ind.space()).unwrap());
        assert!(w.check_fs1() && w.check_fs2());

        let l = chain(2);
        let deltas = vec![MonotoneMap::constant_bottom(l.clone()).unwrap(), MonotoneMap::identity(l.clone())];
        let (_, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Plain).unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.is_directed() && w.check_fs1());
        let (ind, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Bf).unwrap();
        assert!(w.classify().fs && ind.space().is_topological_cf().unwrap());
        let (_, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Strong).unwrap();
        assert!(w.classify().strong_fs);

        let only_bot = vec![MonotoneMap::constant_bottom(l.clone()).unwrap()];
        assert!(matches!(
            fs_witness_from_domain(&l, &only_bot, WitnessMode::Plain),
            Err(Error::WitnessInvalid(_))
        ));
    }

    #[test]
    fn tb_transfer_examples() {
        let caps = Caps::default();
        let l = chain(3);
        let (ind, sel) = tb_witness_from_bf(&l, &canonical_deltas(&l), &caps).unwrap();
        for bits in 0..8u64 {
            assert_eq!(sel.members(Subset::from_bits(bits)), ind.space().family());
        }
        let one = chain(1);
        let (_, sel) = tb_witness_from_bf(&one, &canonical_deltas(&one), &caps).unwrap();
        assert_eq!(sel.members(Subset::EMPTY), vec![Subset::singleton(0)]);

        let l = chain(2);
        let deltas = vec![MonotoneMap::constant_bottom(l.clone()).unwrap(), MonotoneMap::identity(l.clone())];
        let (ind, sel) = tb_witness_from_bf(&l, &deltas, &caps).unwrap();
        // H = {1} is only inside the image of id, so M_H is all of 𝓕
        assert_eq!(sel.members(Subset::singleton(1)), ind.space().family());
        assert_eq!(sel.members(Subset::singleton(0)), vec![Subset::singleton(0)]);
    }

    #[test]
    fn deflationary_family_is_an_approximate_identity() {
        let l = v_poset();
        assert!(is_approximate_identity(&l, &deflationary_deltas(&l)).unwrap());
        assert!(verify_bf_domain_witness(&l, &kernel_deltas(&l)).unwrap());
    }

    #[test]
    fn self_iso_examples() {
        let ind = induce_cf_from_poset(&chain(2)).unwrap();
        let iso = space_self_iso(ind.space()).unwrap();
        assert_eq!(iso.closed.len(), 2);

        let one = induce_cf_from_poset(&chain(1)).unwrap();
        let iso = space_self_iso(one.space()).unwrap();
        assert_eq!((iso.upsilon.len(), iso.omega.len()), (1, 1));

        let abc = Arc::new(abc_with(&[&["c"]]).validated().unwrap());
        assert!(WitnessFamily::identity(&abc).unwrap().classify().fs);
        assert!(space_self_iso(&abc).is_ok());
    }
}
