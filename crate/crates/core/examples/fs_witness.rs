//! FS witnesses: checking FS1/FS2 and transferring a domain-level witness.

use std::sync::Arc;

use roughdomain::cf_space::CFSpace;
use roughdomain::fs_space::WitnessFamily;
use roughdomain::order::{FinitePoset, MonotoneMap};
use roughdomain::represent::{fs_witness_from_domain, WitnessMode};

fn main() -> roughdomain::Result<()> {
    let rel = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "c")];
    let space = Arc::new(CFSpace::from_labeled(&["a", "b", "c"], &rel, &[&["c"]])?.validated()?);
    let w = WitnessFamily::identity(&space)?;
    println!("{{Id}} on 𝓕 = {{{{c}}}}: {:?}", w.classify());

    let l = Arc::new(FinitePoset::chain(2));
    let deltas = vec![MonotoneMap::constant_bottom(l.clone())?, MonotoneMap::identity(l.clone())];
    for mode in [WitnessMode::Plain, WitnessMode::Strong, WitnessMode::Bf] {
        let (induced, w) = fs_witness_from_domain(&l, &deltas, mode)?;
        println!(
            "{mode:?}: {} relations on a space with {} members, {:?}",
            w.len(),
            induced.space().family().len(),
            w.classify()
        );
    }
    Ok(())
}
