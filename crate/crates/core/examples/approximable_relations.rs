//! Approximable relations and the Scott-continuous maps they induce.

use std::sync::Arc;

use roughdomain::approx_rel::ApproximableRelation;
use roughdomain::cf_space::CFSpace;
use roughdomain::order::MonotoneMap;

fn main() -> roughdomain::Result<()> {
    let space = Arc::new(
        CFSpace::from_labeled(&["0", "1"], &[("0", "0"), ("1", "1"), ("0", "1")], &[&["0"], &["1"], &["0", "1"]])?
            .validated()?,
    );
    let id = ApproximableRelation::identity_relation(&space)?;
    println!("Id = {id:?}");
    let c = space.cf_closed_sets()?;
    let f = id.to_map_between(&c, &c)?;
    println!("f_Id graph: {:?}", f.graph());

    let bottom = MonotoneMap::constant_bottom(c.poset().clone())?;
    let theta = ApproximableRelation::from_map(&bottom, &c, &c)?;
    println!("Θ for the constant-bottom map = {theta:?}");
    let back = theta.to_map_between(&c, &c)?;
    println!("and back: {:?} (round trip: {})", back.graph(), back == bottom);

    let composite = ApproximableRelation::compose(&theta, &id)?;
    println!("Θ ∘ Id = Θ: {}", composite == theta);
    Ok(())
}
