//! TB selectors on a topological space, the maps δ_K and the relations Θ_K.

use std::sync::Arc;

use roughdomain::config::Caps;
use roughdomain::order::FinitePoset;
use roughdomain::represent::{kernel_deltas, tb_witness_from_bf};

fn main() -> roughdomain::Result<()> {
    let caps = Caps::default();
    let l = Arc::new(FinitePoset::from_labeled_covers(&["⊥", "a", "b"], &[("⊥", "a"), ("⊥", "b")])?);
    let (induced, sel) = tb_witness_from_bf(&l, &kernel_deltas(&l), &caps)?;
    let space = induced.space();
    println!("TB: {:?}", sel.check_tb()?);
    println!("literal TB oracle: {}", sel.check_tb_literal(&caps)?);
    let closed = space.cf_closed_sets()?;
    for (k, d) in sel.delta_family(&closed)? {
        let images: Vec<String> = d.graph().iter().map(|&i| space.render(closed.set(i))).collect();
        println!("δ_{} = {:?}", space.render(k), images);
    }
    let theta = sel.theta_from_tb()?;
    println!("Θ family: {} relations, {:?}", theta.len(), theta.classify());
    Ok(())
}
