use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;

use roughdomain::approx_rel::ApproximableRelation;
use roughdomain::category::{hom_relations, phi_object, psi_object};
use roughdomain::cf_space::CFSpace;
use roughdomain::config::{Caps, Mode};
use roughdomain::corpus::{self, random_cf_space, random_ga_space, random_monotone_map, random_poset, random_transitive_space};
use roughdomain::fs_space::WitnessFamily;
use roughdomain::ga_space::GASpace;
use roughdomain::io::{Document, PosetDoc, RelationDoc, SpaceDoc, WitnessDoc};
use roughdomain::order::{is_approximate_identity, order_isomorphism, FinitePoset, MonotoneMap};
use roughdomain::represent::{
    deflationary_deltas, fs_witness_from_domain, kernel_deltas, map_from_omega, omega_from_map, space_self_iso,
    tb_witness_from_bf, WitnessMode,
};
use roughdomain::subset::Subset;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn ga(seed: u64, max_u: usize, transitive: bool) -> GASpace {
    let mut r = corpus::rng(seed);
    if transitive {
        random_transitive_space(&mut r, max_u)
    } else {
        random_ga_space(&mut r, max_u)
    }
}

fn cf(seed: u64, max_u: usize) -> Arc<CFSpace> {
    Arc::new(random_cf_space(&mut corpus::rng(seed), max_u, 2000).expect("a CF-space within the attempt budget"))
}

fn poset(seed: u64, n: usize) -> Arc<FinitePoset> {
    Arc::new(random_poset(&mut corpus::rng(seed), n))
}

fn directed_sets(family: &[Subset]) -> bool {
    family
        .iter()
        .all(|a| family.iter().all(|b| family.iter().any(|c| a.is_subset(*c) && b.is_subset(*c))))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn upper_and_lower_are_dual(seed in any::<u64>(), transitive in any::<bool>()) {
        let s = ga(seed, 6, transitive);
        let n = s.len();
        for a in s.universe().subsets() {
            prop_assert_eq!(s.lower_approx(a.complement(n)).unwrap(), s.upper_approx(a).unwrap().complement(n));
            prop_assert_eq!(s.upper_approx(a.complement(n)).unwrap(), s.lower_approx(a).unwrap().complement(n));
        }
    }

    #[test]
    fn operators_are_monotone_and_distribute(seed in any::<u64>(), picks in prop::collection::vec(any::<u64>(), 2..5)) {
        let s = ga(seed, 7, false);
        let full = s.universe();
        let sets: Vec<Subset> = picks.iter().map(|&p| Subset::from_indices((0..s.len()).filter(|i| p >> i & 1 == 1)).intersection(full)).collect();
        let union = sets.iter().fold(Subset::EMPTY, |a, b| a.union(*b));
        let inter = sets.iter().fold(full, |a, b| a.intersection(*b));
        let ups = sets.iter().fold(Subset::EMPTY, |a, b| a.union(s.upper_approx(*b).unwrap()));
        let los = sets.iter().fold(full, |a, b| a.intersection(s.lower_approx(*b).unwrap()));
        prop_assert_eq!(s.upper_approx(union).unwrap(), ups);
        prop_assert_eq!(s.lower_approx(inter).unwrap(), los);
        let (a, b) = (sets[0].intersection(sets[1]), sets[0]);
        prop_assert!(s.upper_approx(a).unwrap().is_subset(s.upper_approx(b).unwrap()));
        prop_assert!(s.lower_approx(a).unwrap().is_subset(s.lower_approx(b).unwrap()));
    }

    #[test]
    fn relation_properties_match_operator_laws(seed in any::<u64>(), transitive in any::<bool>()) {
        let s = ga(seed, 6, transitive);
        let up = |a| s.upper_approx(a).unwrap();
        let all: Vec<Subset> = s.universe().subsets().collect();
        prop_assert_eq!(s.is_reflexive(), all.iter().all(|&x| x.is_subset(up(x))));
        prop_assert_eq!(s.is_transitive(), all.iter().all(|&x| up(up(x)).is_subset(up(x))));
    }

    #[test]
    fn transitive_upper_absorbs_inner_sets(seed in any::<u64>()) {
        let s = ga(seed, 6, true);
        prop_assume!(s.is_transitive());
        for a in s.universe().subsets() {
            let ua = s.upper_approx(a).unwrap();
            for b in ua.subsets() {
                prop_assert!(s.upper_approx(b).unwrap().is_subset(ua));
            }
        }
    }

    #[test]
    fn preorder_lower_is_interior(seed in any::<u64>()) {
        let p = poset(seed, 1 + (seed % 6) as usize);
        let labels: Vec<String> = p.labels().to_vec();
        let s = GASpace::new(labels, &p.leq_pairs()).unwrap();
        let lo = |a| s.lower_approx(a).unwrap();
        let u = s.universe();
        prop_assert_eq!(lo(u), u);
        for a in u.subsets() {
            prop_assert!(lo(a).is_subset(a));
            prop_assert_eq!(lo(lo(a)), lo(a));
            for b in a.subsets() {
                prop_assert!(lo(b).is_subset(lo(a)));
            }
            let c = a.complement(s.len()).union(Subset::from_indices([0]));
            prop_assert_eq!(lo(a.intersection(c)), lo(a).intersection(lo(c)));
        }
    }

    #[test]
    fn way_below_fast_matches_oracle(seed in any::<u64>(), n in 1usize..6) {
        let p = poset(seed, n);
        for x in 0..n {
            for y in 0..n {
                let fast = p.way_below(x, y, Mode::Fast).unwrap();
                prop_assert_eq!(fast, p.way_below(x, y, Mode::Oracle).unwrap());
                prop_assert_eq!(fast, p.leq(x, y));
            }
        }
        prop_assert_eq!(p.compacts(Mode::Oracle).unwrap(), p.elements());
    }

    #[test]
    fn way_below_absorbs_order(seed in any::<u64>(), n in 1usize..6) {
        let p = poset(seed, n);
        let wb = |a, b| p.way_below(a, b, Mode::Oracle).unwrap();
        for x in 0..n {
            for y in 0..n {
                if !wb(x, y) {
                    continue;
                }
                for u in p.down_set(x) {
                    for z in p.up_set(y) {
                        prop_assert!(wb(u, z));
                    }
                }
                let m = p.interpolate(x, y, Mode::Oracle).unwrap();
                prop_assert!(wb(x, m) && wb(m, y));
            }
        }
    }

    #[test]
    fn separating_maps_land_way_below(seed in any::<u64>(), n in 1usize..5) {
        let p = poset(seed, n);
        let deltas = deflationary_deltas(&p);
        for d in &deltas {
            if d.finitely_separating_witness().is_some() {
                for x in 0..n {
                    prop_assert!(p.way_below(d.apply(x), x, Mode::Oracle).unwrap());
                }
            }
        }
        if is_approximate_identity(&p, &deltas).unwrap() {
            let squares: Vec<MonotoneMap> = deltas.iter().map(|d| d.compose(d).unwrap()).collect();
            prop_assert!(is_approximate_identity(&p, &squares).unwrap());
        }
    }

    #[test]
    fn directedness_forms_agree(seed in any::<u64>(), n in 1usize..7) {
        let p = poset(seed, n);
        for s in p.elements().subsets().filter(|s| !s.is_empty()) {
            prop_assert_eq!(p.is_directed(s).unwrap(), p.is_directed_by_definition(s).unwrap());
        }
    }

    #[test]
    fn cofinal_part_keeps_the_supremum(seed in any::<u64>(), n in 1usize..7, split in any::<u64>()) {
        let p = poset(seed, n);
        for d in p.elements().subsets().filter(|d| !d.is_empty() && p.is_directed(*d).unwrap()) {
            let a: Subset = d.iter().filter(|i| split >> i & 1 == 1).collect();
            let parts = [a, d.difference(a)];
            let i = p.find_cofinal_part(d, &parts).unwrap();
            let b = parts[i];
            prop_assert!(d.iter().all(|x| b.iter().any(|y| p.leq(x, y))));
            prop_assert_eq!(p.supremum(b).unwrap(), p.supremum(d).unwrap());
        }
    }

    #[test]
    fn closed_sets_are_stable(seed in any::<u64>()) {
        let s = cf(seed, 6);
        for i in 0..s.family().len() {
            prop_assert!(s.is_cf_closed(s.upper_of(i)).unwrap());
        }
        let closed = s.cf_closed_sets_brute(&Caps::default()).unwrap();
        for &e in &closed {
            for a in e.subsets() {
                prop_assert!(s.upper(a).is_subset(e));
            }
        }
        for sel in Subset::full(closed.len().min(8)).subsets().filter(|x| !x.is_empty()) {
            let fam: Vec<Subset> = sel.iter().map(|i| closed[i]).collect();
            if directed_sets(&fam) {
                let u = fam.iter().fold(Subset::EMPTY, |a, b| a.union(*b));
                prop_assert!(s.is_cf_closed(u).unwrap());
            }
        }
    }

    #[test]
    fn closed_set_characterizations_agree(seed in any::<u64>()) {
        let s = cf(seed, 6);
        let caps = Caps::default();
        for e in s.base().universe().subsets() {
            let forms = s.closed_characterizations(e, &caps).unwrap();
            prop_assert!(forms.iter().all(|&f| f == forms[0]), "{:?} on {:?}", forms, e);
        }
        let c = s.cf_closed_sets().unwrap();
        prop_assert_eq!(c.sets().to_vec(), s.cf_closed_sets_brute(&caps).unwrap());
        prop_assert!(c.poset().is_continuous_domain(Mode::Oracle).unwrap());
    }

    #[test]
    fn topological_spaces_have_compact_basis(seed in any::<u64>()) {
        let s = cf(seed, 6);
        prop_assume!(s.is_topological_cf().unwrap());
        let c = s.cf_closed_sets().unwrap();
        let compacts = c.poset().compacts(Mode::Oracle).unwrap();
        for i in 0..s.family().len() {
            let k = c.index_of(s.upper_of(i)).unwrap();
            prop_assert!(compacts.contains(k));
        }
        prop_assert!(c.poset().is_algebraic_domain(Mode::Oracle).unwrap());
    }

    #[test]
    fn topological_axioms_agree_with_general_axioms(seed in any::<u64>(), n1 in 1usize..4, n2 in 1usize..4) {
        let (l1, l2) = (poset(seed, n1), poset(seed ^ 0x5eed, n2));
        let (s1, s2) = (phi_object(&l1).unwrap(), phi_object(&l2).unwrap());
        let mut r = corpus::rng(seed);
        let density: f64 = r.random_range(0.1..0.9);
        let rel = ApproximableRelation::from_fn(s1.space().clone(), s2.space().clone(), |_, _| r.random_bool(density));
        let general = rel.validate_approximable();
        let top = rel.validate_topological_approximable().unwrap();
        prop_assert_eq!(general.valid, top.valid);
        if general.valid {
            for f in s1.space().family() {
                for g in s2.space().family() {
                    prop_assert!(rel.equivalent_forms(*f, *g).unwrap().agree());
                }
            }
        }
    }

    #[test]
    fn composition_is_functorial(seed in any::<u64>(), sizes in (1usize..4, 1usize..4, 1usize..4)) {
        let caps = Caps::default();
        let ls = [poset(seed, sizes.0), poset(seed.wrapping_add(1), sizes.1), poset(seed.wrapping_add(2), sizes.2)];
        let ss: Vec<Arc<CFSpace>> = ls.iter().map(|l| phi_object(l).unwrap().space().clone()).collect();
        let mut r = corpus::rng(seed);
        let mut pick = |a: usize, b: usize| {
            let hom = hom_relations(&ss[a], &ss[b], &caps).unwrap();
            hom[r.random_range(0..hom.len())].clone()
        };
        let (t1, t2, t3) = (pick(0, 1), pick(1, 2), pick(2, 0));
        let id0 = ApproximableRelation::identity_relation(&ss[0]).unwrap();
        let id1 = ApproximableRelation::identity_relation(&ss[1]).unwrap();
        prop_assert_eq!(&ApproximableRelation::compose(&t1, &id0).unwrap(), &t1);
        prop_assert_eq!(&ApproximableRelation::compose(&id1, &t1).unwrap(), &t1);
        let left = ApproximableRelation::compose(&t3, &ApproximableRelation::compose(&t2, &t1).unwrap()).unwrap();
        let right = ApproximableRelation::compose(&ApproximableRelation::compose(&t3, &t2).unwrap(), &t1).unwrap();
        prop_assert_eq!(&left, &right);
        let c21 = ApproximableRelation::compose(&t2, &t1).unwrap();
        let composed = t2.to_map().unwrap().compose(&t1.to_map().unwrap()).unwrap();
        let direct = c21.to_map().unwrap();
        prop_assert_eq!(direct.graph(), composed.graph());
    }

    #[test]
    fn strong_separation_implies_separation(seed in any::<u64>(), n in 1usize..5, strong in any::<bool>()) {
        let p = poset(seed, n);
        let mode = if strong { WitnessMode::Strong } else { WitnessMode::Plain };
        let (induced, w) = fs_witness_from_domain(&p, &deflationary_deltas(&p), mode).unwrap();
        if w.check_fs2_strong() {
            prop_assert!(w.check_fs2());
        }
        let class = w.classify();
        prop_assert!(class.fs);
        let c = induced.space().cf_closed_sets().unwrap();
        prop_assert!(w.domain_evidence(&c).unwrap());
        let id = WitnessFamily::identity(induced.space()).unwrap();
        prop_assert!(!id.check_fs2_strong() || id.check_fs2());
    }

    #[test]
    fn tb_checks_agree_and_yield_fs_witnesses(seed in any::<u64>(), n in 1usize..5) {
        let p = poset(seed, n);
        let caps = Caps { family: 16, ..Caps::default() };
        let (_, sel) = tb_witness_from_bf(&p, &kernel_deltas(&p), &caps).unwrap();
        let report = sel.check_tb().unwrap();
        prop_assert!(report.valid);
        prop_assert_eq!(report.valid, sel.check_tb_literal(&caps).unwrap());
        let w = sel.theta_from_tb().unwrap();
        prop_assert!(w.check_fs1() && w.check_fs2());
    }

    #[test]
    fn omega_is_monotone_and_round_trips(seed in any::<u64>(), n1 in 1usize..5, n2 in 1usize..5) {
        let (l1, l2) = (poset(seed, n1), poset(seed ^ 0xabc, n2));
        let (s1, s2) = (phi_object(&l1).unwrap(), phi_object(&l2).unwrap());
        let mut r = corpus::rng(seed);
        let g = random_monotone_map(&mut r, &l1, &l2).unwrap();
        let h = random_monotone_map(&mut r, &l1, &l2).unwrap();
        let (og, oh) = (omega_from_map(&g, &s1, &s2).unwrap(), omega_from_map(&h, &s1, &s2).unwrap());
        if g.leq_pointwise(&h) {
            prop_assert!(og.is_subrelation_of(&oh));
        }
        let back = map_from_omega(&og, &s1, &s2).unwrap();
        prop_assert_eq!(back.graph(), g.graph());
        prop_assert_eq!(&omega_from_map(&back, &s1, &s2).unwrap(), &og);
    }

    #[test]
    fn functor_round_trips(seed in any::<u64>(), n in 1usize..6) {
        let l = poset(seed, n);
        let back = psi_object(phi_object(&l).unwrap().space()).unwrap();
        prop_assert!(order_isomorphism(&l, back.poset()).is_some());
        let s = cf(seed, 5);
        prop_assume!(s.cf_closed_sets().unwrap().len() <= 5);
        prop_assert!(space_self_iso(&s).is_ok());
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), n in 1usize..6) {
        let p = poset(seed, n);
        let docs = vec![
            Document::Poset(PosetDoc::from_poset(&p)),
            Document::Space(SpaceDoc::from_cf_space(&cf(seed, 5))),
        ];
        let induced = phi_object(&p).unwrap();
        let w = WitnessFamily::identity(induced.space()).unwrap();
        let docs: Vec<Document> = docs
            .into_iter()
            .chain([
                Document::Relation(RelationDoc::from_relation(&w.relations()[0])),
                Document::Witness(WitnessDoc::from_witness(&w)),
            ])
            .collect();
        for d in docs {
            let again = Document::parse(&d.to_json()).unwrap();
            prop_assert_eq!(&again, &d);
            prop_assert_eq!(Document::parse(&again.to_json()).unwrap(), again);
        }
        let parsed = PosetDoc::from_poset(&p).to_poset(false).unwrap();
        prop_assert_eq!(&parsed, &*p);
    }
}
