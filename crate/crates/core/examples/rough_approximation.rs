//! Upper and lower approximations in a generalized approximation space.

use roughdomain::ga_space::GASpace;

fn main() -> roughdomain::Result<()> {
    let s = GASpace::from_labeled(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "c"), ("d", "d"), ("d", "a")],
    )?;
    println!("{:?}", s.relation_properties());
    for x in 0..s.len() {
        println!(
            "R_s({0}) = {1}   R_p({0}) = {2}",
            s.labels()[x],
            s.render(s.successors(x)?),
            s.render(s.predecessors(x)?)
        );
    }
    let a = s.subset_of(&["b", "c"])?;
    let upper = s.upper_approx(a)?;
    let lower = s.lower_approx(a)?;
    println!("A = {}", s.render(a));
    println!("upper(A) = {}", s.render(upper));
    println!("lower(A) = {}", s.render(lower));
    let dual = s.upper_approx(a.complement(s.len()))?.complement(s.len());
    println!("lower(A) = upper(Aᶜ)ᶜ: {}", dual == lower);
    Ok(())
}
