//! Way-below, compact elements and directed suprema on a small poset.

use roughdomain::config::Mode;
use roughdomain::order::FinitePoset;

fn main() -> roughdomain::Result<()> {
    // the diamond ⊥ < a, b < ⊤
    let p = FinitePoset::from_labeled_covers(
        &["⊥", "a", "b", "⊤"],
        &[("⊥", "a"), ("⊥", "b"), ("a", "⊤"), ("b", "⊤")],
    )?;
    println!("{}", p.render(p.elements()));
    for x in 0..p.len() {
        let fast = p.way_below_set(x, Mode::Fast)?;
        let oracle = p.way_below_set(x, Mode::Oracle)?;
        println!("⇓{} = {}  (oracle agrees: {})", p.label(x), p.render(fast), fast == oracle);
    }
    println!("compact elements: {}", p.render(p.compacts(Mode::Oracle)?));
    println!("algebraic: {}", p.is_algebraic_domain(Mode::Oracle)?);
    let dirs = p.directed_subsets()?;
    println!("{} directed subsets", dirs.len());
    let ab = p.index_of("a").unwrap();
    let top = p.index_of("⊤").unwrap();
    let y = p.interpolate(ab, top, Mode::Fast)?;
    println!("interpolant between a and ⊤: {}", p.label(y));
    Ok(())
}
