//! A poset, its induced space and the isomorphism back; maps as relations.

use std::sync::Arc;

use roughdomain::order::{FinitePoset, MonotoneMap};
use roughdomain::represent::{closed_sets_iso, map_from_omega, omega_from_map, space_self_iso};

fn main() -> roughdomain::Result<()> {
    let v = Arc::new(FinitePoset::from_labeled_covers(&["⊥", "a", "b"], &[("⊥", "a"), ("⊥", "b")])?);
    let iso = closed_sets_iso(&v)?;
    let space = iso.induced.space();
    println!("induced family: {:?}", space.family().iter().map(|&f| space.render(f)).collect::<Vec<_>>());
    for (x, &k) in iso.map.iter().enumerate() {
        println!("{} ↦ {}", v.label(x), space.render(iso.closed.set(k)));
    }

    // swap a and b
    let swap = MonotoneMap::new(v.clone(), v.clone(), vec![0, 2, 1])?;
    let omega = omega_from_map(&swap, &iso.induced, &iso.induced)?;
    println!("Ω_swap has {} pairs", omega.len());
    let back = map_from_omega(&omega, &iso.induced, &iso.induced)?;
    println!("g_Ω = swap: {}", back == swap);

    let self_iso = space_self_iso(space)?;
    println!(
        "space ≅ induced space of its domain: Υ has {} pairs, Ω has {}",
        self_iso.upsilon.len(),
        self_iso.omega.len()
    );
    Ok(())
}
