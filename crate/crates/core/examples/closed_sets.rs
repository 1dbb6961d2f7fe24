//! CF validation and the domain of CF-closed sets, with a Graphviz export.

use std::sync::Arc;

use roughdomain::cf_space::CFSpace;
use roughdomain::config::Caps;
use roughdomain::dot;

fn main() -> roughdomain::Result<()> {
    let rel = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "c")];
    let bad = CFSpace::from_labeled(&["a", "b", "c"], &rel, &[&["b"]])?;
    let report = bad.validate_cf();
    if let Some(c) = &report.counterexample {
        println!("𝓕 = {{{{b}}}} fails: K = {} inside R̄({})", bad.render(c.k), bad.render(c.member));
    }

    let space = Arc::new(
        CFSpace::from_labeled(
            &["0", "1", "2"],
            &[("0", "0"), ("1", "1"), ("2", "2"), ("0", "1"), ("1", "2"), ("0", "2")],
            &[&["0"], &["1"], &["2"], &["0", "1"], &["0", "2"], &["1", "2"], &["0", "1", "2"]],
        )?
        .validated()?,
    );
    let closed = space.cf_closed_sets()?;
    let brute = space.cf_closed_sets_brute(&Caps::default())?;
    println!("closed sets (brute force agrees: {}):", brute == closed.sets());
    for &e in closed.sets() {
        println!("  {}", space.render(e));
    }
    let (e1, e2) = (closed.set(0), closed.set(1));
    if let Some(f) = closed.way_below_closed(e1, e2)? {
        println!("{} ≪ {} witnessed by F = {}", space.render(e1), space.render(e2), space.render(f));
    }
    print!("{}", dot::closed_sets_dot(&closed));
    Ok(())
}
