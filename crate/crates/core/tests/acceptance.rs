//! The eight acceptance criteria, each with its time budget. Prints one
//! line per criterion and exits non-zero if any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use roughdomain::approx_rel::ApproximableRelation;
use roughdomain::category::{
    check_equivalence_evidence, check_functor_laws, hom_monotone, hom_relations, phi_object, Fault, Phi, Psi,
};
use roughdomain::cf_space::CFSpace;
use roughdomain::config::{Caps, Mode};
use roughdomain::corpus::{self, posets_of_size, posets_up_to};
use roughdomain::ga_space::GASpace;
use roughdomain::order::{is_approximate_identity, order_isomorphism, FinitePoset, MonotoneMap};
use roughdomain::represent::{
    canonical_deltas, closed_sets_iso, deflationary_deltas, fs_witness_from_domain, induce_cf_from_poset,
    kernel_deltas, map_from_omega, omega_from_map, space_self_iso, tb_witness_from_bf, WitnessMode,
};
use roughdomain::subset::Subset;
use roughdomain::Result;

type Check = fn() -> Result<Vec<String>>;

fn fail(failures: &mut Vec<String>, msg: String) {
    if failures.len() < 20 {
        failures.push(msg);
    }
}

fn operator_laws_hold(s: &GASpace) -> Vec<String> {
    let mut bad = Vec::new();
    let n = s.len();
    let u = s.universe();
    let up = |a: Subset| s.upper_approx(a).unwrap();
    let lo = |a: Subset| s.lower_approx(a).unwrap();
    let all: Vec<Subset> = u.subsets().collect();
    if up(Subset::EMPTY) != Subset::EMPTY || lo(u) != u {
        bad.push("R̄(∅) = ∅ or R̲(U) = U fails".into());
    }
    let mut refl = true;
    let mut trans = true;
    for &a in &all {
        if lo(a.complement(n)) != up(a).complement(n) || up(a.complement(n)) != lo(a).complement(n) {
            fail(&mut bad, format!("duality fails at {}", s.render(a)));
        }
        refl &= a.is_subset(up(a));
        trans &= up(up(a)).is_subset(up(a));
        for &b in &all {
            if up(a.union(b)) != up(a).union(up(b)) || lo(a.intersection(b)) != lo(a).intersection(lo(b)) {
                fail(&mut bad, format!("distribution fails at {}, {}", s.render(a), s.render(b)));
            }
            if a.is_subset(b) && !(up(a).is_subset(up(b)) && lo(a).is_subset(lo(b))) {
                fail(&mut bad, format!("monotonicity fails at {} ⊆ {}", s.render(a), s.render(b)));
            }
        }
    }
    if refl != s.is_reflexive() {
        bad.push(format!("reflexive characterization: ∀X X ⊆ R̄X is {refl}"));
    }
    if trans != s.is_transitive() {
        bad.push(format!("transitive characterization: ∀X R̄R̄X ⊆ R̄X is {trans}"));
    }
    bad
}

fn criterion_1() -> Result<Vec<String>> {
    let mut rng = corpus::rng(2024);
    let mut failures = Vec::new();
    for i in 0..200 {
        let s = if i % 2 == 0 {
            corpus::random_ga_space(&mut rng, 8)
        } else {
            corpus::random_transitive_space(&mut rng, 8)
        };
        for f in operator_laws_hold(&s) {
            fail(&mut failures, format!("space {i}: {f}"));
        }
    }
    Ok(failures)
}

fn random_spaces(count: usize, max_universe: usize, seed: u64) -> Vec<Arc<CFSpace>> {
    let mut rng = corpus::rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        if let Some(s) = corpus::random_cf_space(&mut rng, max_universe, 10_000) {
            out.push(Arc::new(s));
        }
    }
    out
}

fn criterion_2() -> Result<Vec<String>> {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let mut spaces: Vec<Arc<CFSpace>> = Vec::new();
    for l in posets_up_to(5) {
        spaces.push(induce_cf_from_poset(&l)?.space().clone());
    }
    spaces.extend(random_spaces(100, 7, 77));
    for (i, s) in spaces.iter().enumerate() {
        let image = s.cf_closed_sets()?;
        let brute = s.cf_closed_sets_brute(&caps)?;
        if brute != image.sets() {
            fail(&mut failures, format!("space {i}: brute {brute:?} vs image {:?}", image.sets()));
        }
    }
    Ok(failures)
}

fn criterion_3() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for l in posets_up_to(5) {
        if let Err(e) = closed_sets_iso(&l) {
            fail(&mut failures, format!("{:?}: iso: {e}", l));
        }
        for deltas in [canonical_deltas(&l), deflationary_deltas(&l)] {
            let (_, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Plain)?;
            if !(w.check_fs1() && w.check_fs2()) {
                fail(&mut failures, format!("{:?}: plain witness fails FS1∧FS2", l));
            }
            let (_, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Strong)?;
            if !(w.check_fs1() && w.check_fs2_strong()) {
                fail(&mut failures, format!("{:?}: strong witness fails FS1∧FS2'", l));
            }
        }
    }
    Ok(failures)
}

fn criterion_4() -> Result<Vec<String>> {
    let caps = Caps::default();
    let mut failures = Vec::new();
    for l in posets_up_to(5) {
        for deltas in [canonical_deltas(&l), kernel_deltas(&l)] {
            let (_, w) = fs_witness_from_domain(&l, &deltas, WitnessMode::Bf)?;
            if !w.classify().topological_fs {
                fail(&mut failures, format!("{l:?}: bf witness is not topological FS"));
            }
            let (ind, sel) = tb_witness_from_bf(&l, &deltas, &caps)?;
            if !sel.check_tb()?.valid {
                fail(&mut failures, format!("{l:?}: selector fails TB"));
            }
            let c = ind.space().cf_closed_sets()?;
            let maps: Vec<MonotoneMap> = sel.delta_family(&c)?.into_iter().map(|(_, d)| d).collect();
            let scott = maps.iter().map(|m| m.is_scott_continuous()).collect::<Result<Vec<_>>>()?;
            let id = MonotoneMap::identity(c.poset().clone());
            let sup_is_id = (0..c.len()).all(|x| {
                let images: Subset = maps.iter().map(|m| m.apply(x)).collect();
                c.poset().supremum(images).ok().flatten() == Some(id.apply(x))
            });
            if !(is_approximate_identity(c.poset(), &maps)? && scott.iter().all(|&b| b) && sup_is_id) {
                fail(&mut failures, format!("{l:?}: δ_K family is not an approximate identity"));
            }
            if order_isomorphism(&l, c.poset()).is_none() {
                fail(&mut failures, format!("{l:?}: L is not isomorphic to its domain"));
            }
        }
    }
    Ok(failures)
}

fn criterion_5() -> Result<Vec<String>> {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let posets = posets_up_to(3);
    let induced = posets.iter().map(induce_cf_from_poset).collect::<Result<Vec<_>>>()?;
    for a in &induced {
        for b in &induced {
            let (s1, s2) = (a.space(), b.space());
            let (c1, c2) = (s1.cf_closed_sets()?, s2.cf_closed_sets()?);
            let rels = hom_relations(s1, s2, &caps)?;
            let maps = hom_monotone(c1.poset(), c2.poset(), &caps)?;
            if rels.len() != maps.len() {
                fail(&mut failures, format!("{} relations vs {} maps", rels.len(), maps.len()));
            }
            for r in &rels {
                let f = r.to_map_between(&c1, &c2)?;
                if ApproximableRelation::from_map(&f, &c1, &c2)? != *r {
                    fail(&mut failures, format!("Θ ↦ f_Θ ↦ Θ_f differs at {r:?}"));
                }
            }
            for f in &maps {
                if ApproximableRelation::from_map(f, &c1, &c2)?.to_map_between(&c1, &c2)? != *f {
                    fail(&mut failures, format!("f ↦ Θ_f ↦ f differs at {:?}", f.graph()));
                }
            }
            let gmaps = hom_monotone(a.origin(), b.origin(), &caps)?;
            if gmaps.len() != rels.len() {
                fail(&mut failures, format!("{} maps g vs {} relations Ω", gmaps.len(), rels.len()));
            }
            for g in &gmaps {
                if map_from_omega(&omega_from_map(g, a, b)?, a, b)? != *g {
                    fail(&mut failures, format!("g ↦ Ω_g ↦ g differs at {:?}", g.graph()));
                }
            }
            for r in &rels {
                if omega_from_map(&map_from_omega(r, a, b)?, a, b)? != *r {
                    fail(&mut failures, format!("Ω ↦ g_Ω ↦ Ω differs at {r:?}"));
                }
            }
        }
    }
    Ok(failures)
}

fn criterion_6() -> Result<Vec<String>> {
    let caps = Caps::default();
    let mut failures = Vec::new();
    let posets = posets_up_to(3);
    let spaces = posets
        .iter()
        .map(|l| Ok(phi_object(l)?.space().clone()))
        .collect::<Result<Vec<_>>>()?;

    let r = check_functor_laws(&Phi::default(), &posets, &caps)?;
    if !r.pass {
        fail(&mut failures, format!("Φ laws: {:?}", r.failures));
    }
    let r = check_functor_laws(&Psi::default(), &spaces, &caps)?;
    if !r.pass {
        fail(&mut failures, format!("Ψ laws: {:?}", r.failures));
    }
    let e = check_equivalence_evidence(&Phi::default(), &posets, &spaces, &caps)?;
    if !(e.full && e.faithful && e.essentially_surjective) {
        fail(&mut failures, format!("Φ equivalence: {:?}", e.counterexamples));
    }
    let e = check_equivalence_evidence(&Psi::default(), &spaces, &posets, &caps)?;
    if !(e.full && e.faithful && e.essentially_surjective) {
        fail(&mut failures, format!("Ψ equivalence: {:?}", e.counterexamples));
    }

    let perturbed_phi = Phi {
        fault: Fault::Perturb,
        ..Phi::default()
    };
    let r = check_functor_laws(&perturbed_phi, &posets, &caps)?;
    if r.pass || !r.failures.iter().any(|f| f.law == "composition") {
        fail(&mut failures, "perturbed Φ passes the composition law".into());
    }
    let perturbed_psi = Psi {
        fault: Fault::Perturb,
        ..Psi::default()
    };
    let r = check_functor_laws(&perturbed_psi, &spaces, &caps)?;
    if r.pass || r.failures.is_empty() {
        fail(&mut failures, "perturbed Ψ passes the functor laws".into());
    }
    let collapsed_phi = Phi {
        fault: Fault::Collapse,
        ..Phi::default()
    };
    let e = check_equivalence_evidence(&collapsed_phi, &posets, &spaces, &caps)?;
    if e.faithful || e.counterexamples.is_empty() {
        fail(&mut failures, "collapsed Φ is reported faithful".into());
    }
    let collapsed_psi = Psi {
        fault: Fault::Collapse,
        ..Psi::default()
    };
    let e = check_equivalence_evidence(&collapsed_psi, &spaces, &posets, &caps)?;
    if e.faithful || e.counterexamples.is_empty() {
        fail(&mut failures, "collapsed Ψ is reported faithful".into());
    }
    Ok(failures)
}

fn criterion_7() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let mut spaces: Vec<Arc<CFSpace>> = posets_up_to(5)
        .iter()
        .map(|l| Ok(induce_cf_from_poset(l)?.space().clone()))
        .collect::<Result<_>>()?;
    spaces.extend(random_spaces(100, 7, 77));
    let mut checked = 0;
    for (i, s) in spaces.iter().enumerate() {
        if s.cf_closed_sets()?.len() > 5 {
            continue;
        }
        checked += 1;
        if let Err(e) = space_self_iso(s) {
            fail(&mut failures, format!("space {i}: {e}"));
        }
    }
    if checked < 100 {
        fail(&mut failures, format!("only {checked} spaces in scope"));
    }
    Ok(failures)
}

fn criterion_8() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for n in 1..=6 {
        for p in posets_of_size(n) {
            let p: FinitePoset = p;
            for x in 0..n {
                for y in 0..n {
                    let fast = p.way_below(x, y, Mode::Fast)?;
                    let oracle = p.way_below(x, y, Mode::Oracle)?;
                    if fast != oracle || fast != p.leq(x, y) {
                        fail(&mut failures, format!("{p:?}: ({x}, {y}) fast={fast} oracle={oracle}"));
                    }
                }
            }
        }
    }
    Ok(failures)
}

fn main() {
    let criteria: [(&str, Check, u64); 8] = [
        ("operator laws on 200 random GA-spaces", criterion_1, 10),
        ("closed-set enumeration agreement", criterion_2, 60),
        ("representation I/II", criterion_3, 60),
        ("representation III/IV", criterion_4, 120),
        ("round-trip bijections", criterion_5, 120),
        ("category laws and fault injection", criterion_6, 120),
        ("self-isomorphism", criterion_7, 60),
        ("fast/oracle way-below agreement", criterion_8, 30),
    ];
    let mut all_pass = true;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (pass, notes) = match result {
            Ok(f) if f.is_empty() && !over => (true, Vec::new()),
            Ok(mut f) => {
                if over {
                    f.push(format!("over the {budget} s budget"));
                }
                (false, f)
            }
            Err(e) => (false, vec![format!("error: {e}")]),
        };
        all_pass &= pass;
        println!(
            "criterion {}: {} ({name}; {:.2} s of {budget} s)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        for n in notes {
            println!("    {n}");
        }
    }
    if !all_pass {
        std::process::exit(1);
    }
}
