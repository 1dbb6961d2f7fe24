//! The functors `Φ` (posets to spaces) and `Ψ` (spaces to posets), checked
//! on finite objects.
//!
//! Nothing here proves an equivalence of categories. The reports state what
//! was verified on the supplied objects and enumerated hom-sets, and nothing
//! beyond that.

use std::fmt::Debug;
use std::sync::Arc;

use serde::Serialize;

use crate::approx_rel::ApproximableRelation;
use crate::cf_space::{CFSpace, ClosedSetPoset};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::fs_space::{search_tb_selector, WitnessFamily};
use crate::order::{order_isomorphism, FinitePoset, MonotoneMap};
use crate::represent::{
    canonical_deltas, fs_witness_from_domain, induce_cf_from_poset, induce_topcf_from_algebraic, map_from_omega,
    omega_from_map, space_self_iso, tb_witness_from_bf, InducedSpace, WitnessMode,
};
use crate::subset::Subset;

/// Deliberate corruption of a functor, for checking that the checks bite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    #[default]
    None,
    /// `Φ`: drop the last pair of every `Ω_g`. `Ψ`: replace `f_Θ` by the
    /// constant map at `f_Θ(x₀)`.
    Perturb,
    /// Send every morphism to the image of the constant morphism at the
    /// image of the first element, so distinct morphisms collide.
    Collapse,
}

/// Which subcategory the objects are required to lie in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectClass {
    /// FS-domains / FS-approximation spaces.
    #[default]
    Fs,
    /// Strong FS-approximation spaces.
    StrongFs,
    /// Topological FS-approximation spaces / BF-domains.
    TopFs,
    /// Topological spaces with a TB selector.
    TopBf,
}

/// A functor between two concrete finite categories.
pub trait FiniteFunctor {
    type Obj;
    type Mor: Clone + PartialEq + Debug;
    type TObj;
    type TMor: Clone + PartialEq + Debug;
    /// Objects of the target category offered for essential surjectivity.
    type Target;

    fn name(&self) -> &'static str;
    fn member(&self, a: &Self::Obj, caps: &Caps) -> Result<bool>;
    fn object(&self, a: &Self::Obj) -> Result<Self::TObj>;
    fn morphism(&self, m: &Self::Mor, fa: &Self::TObj, fb: &Self::TObj) -> Result<Self::TMor>;
    fn hom(&self, a: &Self::Obj, b: &Self::Obj, caps: &Caps) -> Result<Vec<Self::Mor>>;
    fn target_hom(&self, fa: &Self::TObj, fb: &Self::TObj, caps: &Caps) -> Result<Vec<Self::TMor>>;
    fn id(&self, a: &Self::Obj) -> Result<Self::Mor>;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn target_id(&self, fa: &Self::TObj) -> Result<Self::TMor>;
    fn target_compose(&self, g: &Self::TMor, f: &Self::TMor) -> Result<Self::TMor>;
    /// Candidate preimage of a target morphism, via the round-trip bridge.
    fn preimage(&self, t: &Self::TMor, fa: &Self::TObj, fb: &Self::TObj) -> Result<Self::Mor>;
    /// Whether some object maps to something isomorphic to `t`.
    fn essential_preimage(&self, t: &Self::Target) -> Result<bool>;
}

/// `Φ(L) = (L, ≪, 𝓕_L)`, `Φ(g) = Ω_g`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Phi {
    pub fault: Fault,
    pub class: ObjectClass,
}

/// `Ψ(S) = (𝔠(S), ⊆)`, `Ψ(Θ) = f_Θ`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Psi {
    pub fault: Fault,
    pub class: ObjectClass,
}

pub fn phi_object(l: &Arc<FinitePoset>) -> Result<InducedSpace> {
    induce_cf_from_poset(l)
}

pub fn phi_morphism(g: &MonotoneMap, s1: &InducedSpace, s2: &InducedSpace) -> Result<ApproximableRelation> {
    omega_from_map(g, s1, s2)
}

pub fn psi_object(space: &Arc<CFSpace>) -> Result<ClosedSetPoset> {
    space.cf_closed_sets()
}

pub fn psi_morphism(theta: &ApproximableRelation, c1: &ClosedSetPoset, c2: &ClosedSetPoset) -> Result<MonotoneMap> {
    theta.to_map_between(c1, c2)
}

/// All monotone maps `L1 → L2`.
pub fn hom_monotone(l1: &Arc<FinitePoset>, l2: &Arc<FinitePoset>, caps: &Caps) -> Result<Vec<MonotoneMap>> {
    Caps::require("hom-set source", l1.len(), caps.hom)?;
    Caps::require("hom-set target", l2.len(), caps.hom)?;
    Ok(MonotoneMap::enumerate_all(l1, l2))
}

/// All CF-approximable relations `S1 → S2`, enumerated row by row.
///
/// A row is the set of `G` related to a fixed `F`. Axioms (1), (3) and (5)
/// only involve one row, (2) compares rows, and (4) is checked on complete
/// candidates.
pub fn hom_relations(s1: &Arc<CFSpace>, s2: &Arc<CFSpace>, caps: &Caps) -> Result<Vec<ApproximableRelation>> {
    s1.require_validated()?;
    s2.require_validated()?;
    let (f1, f2) = (s1.family(), s2.family());
    let (n1, n2) = (f1.len(), f2.len());
    Caps::require("source family", n1, caps.family)?;
    Caps::require("target family", n2, caps.family)?;

    let below2: Vec<Subset> = (0..n2)
        .map(|j| (0..n2).filter(|&jp| f2[jp].is_subset(s2.upper_of(j))).collect())
        .collect();
    let row_ok = |row: Subset| {
        row.iter().all(|j| below2[j].is_subset(row))
            && row.iter().all(|ja| {
                row.iter().all(|jb| {
                    let u = f2[ja].union(f2[jb]);
                    row.iter().any(|jc| u.is_subset(s2.upper_of(jc)))
                })
            })
    };
    let rows: Vec<Subset> = Subset::full(n2)
        .subsets()
        .filter(|r| !r.is_empty() && row_ok(*r))
        .collect();
    // le1[i][ip]: F_i ⊆ R̄(F_ip), which forces row(i) ⊆ row(ip)
    let le1: Vec<Vec<bool>> = (0..n1)
        .map(|i| (0..n1).map(|ip| f1[i].is_subset(s1.upper_of(ip))).collect())
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<Subset> = Vec::with_capacity(n1);
    fn search(
        i: usize,
        rows: &[Subset],
        le1: &[Vec<bool>],
        chosen: &mut Vec<Subset>,
        leaf: &mut dyn FnMut(&[Subset]),
    ) {
        if i == le1.len() {
            leaf(chosen);
            return;
        }
        for &r in rows {
            let fits = (0..i).all(|ip| {
                (!le1[i][ip] || r.is_subset(chosen[ip])) && (!le1[ip][i] || chosen[ip].is_subset(r))
            });
            if fits {
                chosen.push(r);
                search(i + 1, rows, le1, chosen, leaf);
                chosen.pop();
            }
        }
    }
    search(0, &rows, &le1, &mut chosen, &mut |assigned| {
        let rel = ApproximableRelation::from_fn(s1.clone(), s2.clone(), |i, j| assigned[i].contains(j));
        if rel.validate_approximable().valid {
            out.push(rel.mark_validated());
        }
    });
    Ok(out)
}

fn drop_last_pair(rel: &ApproximableRelation) -> Result<ApproximableRelation> {
    let mut pairs = rel.pairs();
    pairs.pop();
    ApproximableRelation::from_indices(rel.source().clone(), rel.target().clone(), &pairs)
}

impl FiniteFunctor for Phi {
    type Obj = Arc<FinitePoset>;
    type Mor = MonotoneMap;
    type TObj = InducedSpace;
    type TMor = ApproximableRelation;
    type Target = Arc<CFSpace>;

    fn name(&self) -> &'static str {
        "phi"
    }

    fn member(&self, a: &Self::Obj, caps: &Caps) -> Result<bool> {
        let deltas = canonical_deltas(a);
        let built = match self.class {
            ObjectClass::Fs => fs_witness_from_domain(a, &deltas, WitnessMode::Plain).map(|_| ()),
            ObjectClass::StrongFs => fs_witness_from_domain(a, &deltas, WitnessMode::Strong).map(|_| ()),
            ObjectClass::TopFs => fs_witness_from_domain(a, &deltas, WitnessMode::Bf).map(|_| ()),
            ObjectClass::TopBf => tb_witness_from_bf(a, &deltas, caps).map(|_| ()),
        };
        match built {
            Ok(()) => Ok(true),
            Err(Error::WitnessInvalid(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    fn object(&self, a: &Self::Obj) -> Result<InducedSpace> {
        match self.class {
            ObjectClass::TopFs | ObjectClass::TopBf => induce_topcf_from_algebraic(a),
            _ => phi_object(a),
        }
    }

    fn morphism(&self, m: &MonotoneMap, fa: &InducedSpace, fb: &InducedSpace) -> Result<ApproximableRelation> {
        match self.fault {
            Fault::None => phi_morphism(m, fa, fb),
            Fault::Perturb => drop_last_pair(&phi_morphism(m, fa, fb)?),
            Fault::Collapse => {
                let c = MonotoneMap::constant(m.source().clone(), m.target().clone(), m.apply(0))?;
                phi_morphism(&c, fa, fb)
            }
        }
    }

    fn hom(&self, a: &Self::Obj, b: &Self::Obj, caps: &Caps) -> Result<Vec<MonotoneMap>> {
        hom_monotone(a, b, caps)
    }

    fn target_hom(&self, fa: &InducedSpace, fb: &InducedSpace, caps: &Caps) -> Result<Vec<ApproximableRelation>> {
        hom_relations(fa.space(), fb.space(), caps)
    }

    fn id(&self, a: &Self::Obj) -> Result<MonotoneMap> {
        Ok(MonotoneMap::identity(a.clone()))
    }

    fn compose(&self, g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
        g.compose(f)
    }

    fn target_id(&self, fa: &InducedSpace) -> Result<ApproximableRelation> {
        ApproximableRelation::identity_relation(fa.space())
    }

    fn target_compose(&self, g: &ApproximableRelation, f: &ApproximableRelation) -> Result<ApproximableRelation> {
        ApproximableRelation::compose(g, f)
    }

    fn preimage(&self, t: &ApproximableRelation, fa: &InducedSpace, fb: &InducedSpace) -> Result<MonotoneMap> {
        map_from_omega(t, fa, fb)
    }

    fn essential_preimage(&self, t: &Arc<CFSpace>) -> Result<bool> {
        match space_self_iso(t) {
            Ok(_) => Ok(true),
            Err(Error::IsoCheckFailed(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

impl FiniteFunctor for Psi {
    type Obj = Arc<CFSpace>;
    type Mor = ApproximableRelation;
    type TObj = ClosedSetPoset;
    type TMor = MonotoneMap;
    type Target = Arc<FinitePoset>;

    fn name(&self) -> &'static str {
        "psi"
    }

    fn member(&self, a: &Self::Obj, caps: &Caps) -> Result<bool> {
        let class = WitnessFamily::identity(a)?.classify();
        Ok(match self.class {
            ObjectClass::Fs => class.fs,
            ObjectClass::StrongFs => class.strong_fs,
            ObjectClass::TopFs => class.topological_fs,
            ObjectClass::TopBf => {
                a.is_topological_cf()? && search_tb_selector(a, caps, None)?.is_some()
            }
        })
    }

    fn object(&self, a: &Self::Obj) -> Result<ClosedSetPoset> {
        psi_object(a)
    }

    fn morphism(&self, m: &ApproximableRelation, fa: &ClosedSetPoset, fb: &ClosedSetPoset) -> Result<MonotoneMap> {
        let f = psi_morphism(m, fa, fb)?;
        match self.fault {
            Fault::None => Ok(f),
            Fault::Perturb | Fault::Collapse => {
                MonotoneMap::constant(f.source().clone(), f.target().clone(), f.apply(0))
            }
        }
    }

    fn hom(&self, a: &Self::Obj, b: &Self::Obj, caps: &Caps) -> Result<Vec<ApproximableRelation>> {
        hom_relations(a, b, caps)
    }

    fn target_hom(&self, fa: &ClosedSetPoset, fb: &ClosedSetPoset, caps: &Caps) -> Result<Vec<MonotoneMap>> {
        hom_monotone(fa.poset(), fb.poset(), caps)
    }

    fn id(&self, a: &Self::Obj) -> Result<ApproximableRelation> {
        ApproximableRelation::identity_relation(a)
    }

    fn compose(&self, g: &ApproximableRelation, f: &ApproximableRelation) -> Result<ApproximableRelation> {
        ApproximableRelation::compose(g, f)
    }

    fn target_id(&self, fa: &ClosedSetPoset) -> Result<MonotoneMap> {
        Ok(MonotoneMap::identity(fa.poset().clone()))
    }

    fn target_compose(&self, g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
        g.compose(f)
    }

    fn preimage(&self, t: &MonotoneMap, fa: &ClosedSetPoset, fb: &ClosedSetPoset) -> Result<ApproximableRelation> {
        ApproximableRelation::from_map(t, fa, fb)
    }

    fn essential_preimage(&self, t: &Arc<FinitePoset>) -> Result<bool> {
        let a = induce_topcf_from_algebraic(t)?;
        let c = psi_object(a.space())?;
        Ok(order_isomorphism(c.poset(), t).is_some())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FunctorLawReport {
    pub functor: &'static str,
    pub objects: usize,
    pub identity_checks: usize,
    pub composition_checks: usize,
    pub failures: Vec<LawFailure>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomCount {
    pub source: usize,
    pub target: usize,
    pub hom: usize,
    pub image_hom: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub functor: &'static str,
    pub full: bool,
    pub faithful: bool,
    pub essentially_surjective: bool,
    pub hom_counts: Vec<HomCount>,
    pub counterexamples: Vec<String>,
    pub scope: &'static str,
}

const MAX_REPORTED: usize = 10;

fn record(failures: &mut Vec<LawFailure>, law: &'static str, detail: String) {
    if failures.len() < MAX_REPORTED {
        failures.push(LawFailure { law, detail });
    }
}

/// Identity and composition laws over every enumerated composable pair.
pub fn check_functor_laws<F: FiniteFunctor>(functor: &F, objects: &[F::Obj], caps: &Caps) -> Result<FunctorLawReport> {
    let images = objects.iter().map(|a| functor.object(a)).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut total_failures = 0usize;
    for (i, a) in objects.iter().enumerate() {
        if !functor.member(a, caps)? {
            total_failures += 1;
            record(&mut failures, "membership", format!("object {i} is not in the class"));
        }
    }
    let mut identity_checks = 0;
    for (i, a) in objects.iter().enumerate() {
        identity_checks += 1;
        let got = functor.morphism(&functor.id(a)?, &images[i], &images[i])?;
        if got != functor.target_id(&images[i])? {
            total_failures += 1;
            record(&mut failures, "identity", format!("object {i}: image of id is {got:?}"));
        }
    }
    let n = objects.len();
    let homs: Vec<Vec<Vec<F::Mor>>> = (0..n)
        .map(|i| (0..n).map(|j| functor.hom(&objects[i], &objects[j], caps)).collect())
        .collect::<Result<_>>()?;
    let mut composition_checks = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for f in &homs[a][b] {
                    let ff = functor.morphism(f, &images[a], &images[b])?;
                    for g in &homs[b][c] {
                        composition_checks += 1;
                        let lhs = functor.morphism(&functor.compose(g, f)?, &images[a], &images[c])?;
                        let gg = functor.morphism(g, &images[b], &images[c])?;
                        let rhs = functor.target_compose(&gg, &ff)?;
                        if lhs != rhs {
                            total_failures += 1;
                            record(
                                &mut failures,
                                "composition",
                                format!("objects ({a},{b},{c}), f = {f:?}, g = {g:?}: F(g∘f) = {lhs:?} but F(g)∘F(f) = {rhs:?}"),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(FunctorLawReport {
        functor: functor.name(),
        objects: n,
        identity_checks,
        composition_checks,
        pass: total_failures == 0,
        failures,
    })
}

/// Fullness, faithfulness and essential surjectivity on the supplied data.
pub fn check_equivalence_evidence<F: FiniteFunctor>(
    functor: &F,
    objects: &[F::Obj],
    targets: &[F::Target],
    caps: &Caps,
) -> Result<EquivalenceReport> {
    let images = objects.iter().map(|a| functor.object(a)).collect::<Result<Vec<_>>>()?;
    let mut full = true;
    let mut faithful = true;
    let mut counterexamples = Vec::new();
    let mut hom_counts = Vec::new();
    let mut note = |s: String| {
        if counterexamples.len() < MAX_REPORTED {
            counterexamples.push(s);
        }
    };
    for a in 0..objects.len() {
        for b in 0..objects.len() {
            let hom = functor.hom(&objects[a], &objects[b], caps)?;
            let mapped = hom
                .iter()
                .map(|m| functor.morphism(m, &images[a], &images[b]))
                .collect::<Result<Vec<_>>>()?;
            for x in 0..mapped.len() {
                for y in x + 1..mapped.len() {
                    if mapped[x] == mapped[y] {
                        faithful = false;
                        note(format!(
                            "not faithful on ({a},{b}): {:?} and {:?} have the same image",
                            hom[x], hom[y]
                        ));
                    }
                }
            }
            let target_hom = functor.target_hom(&images[a], &images[b], caps)?;
            for t in &target_hom {
                let hit = match functor.preimage(t, &images[a], &images[b]) {
                    Ok(p) => functor.morphism(&p, &images[a], &images[b])? == *t,
                    Err(Error::Postcondition(_)) => false,
                    Err(e) => return Err(e),
                };
                if !hit {
                    full = false;
                    note(format!("not full on ({a},{b}): {t:?} has no preimage"));
                }
            }
            hom_counts.push(HomCount {
                source: a,
                target: b,
                hom: hom.len(),
                image_hom: target_hom.len(),
            });
        }
    }
    let mut essentially_surjective = true;
    for (k, t) in targets.iter().enumerate() {
        if !functor.essential_preimage(t)? {
            essentially_surjective = false;
            note(format!("target object {k} has no isomorphic image"));
        }
    }
    Ok(EquivalenceReport {
        functor: functor.name(),
        full,
        faithful,
        essentially_surjective,
        hom_counts,
        counterexamples,
        scope: "verified on the supplied finite objects",
    })
}
