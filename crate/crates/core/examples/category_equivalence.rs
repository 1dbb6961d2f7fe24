//! Functor laws and equivalence evidence for Φ and Ψ on small posets.

use roughdomain::category::{check_equivalence_evidence, check_functor_laws, phi_object, Fault, Phi, Psi};
use roughdomain::config::Caps;
use roughdomain::corpus::posets_up_to;

fn main() -> roughdomain::Result<()> {
    let caps = Caps::default();
    let posets = posets_up_to(3);
    let spaces: Vec<_> = posets
        .iter()
        .map(|l| phi_object(l).map(|s| s.space().clone()))
        .collect::<Result<_, _>>()?;

    let phi = check_functor_laws(&Phi::default(), &posets, &caps)?;
    println!("Φ laws: pass={} ({} composition checks)", phi.pass, phi.composition_checks);
    let psi = check_functor_laws(&Psi::default(), &spaces, &caps)?;
    println!("Ψ laws: pass={} ({} composition checks)", psi.pass, psi.composition_checks);

    let e = check_equivalence_evidence(&Phi::default(), &posets, &spaces, &caps)?;
    println!(
        "Φ: full={} faithful={} essentially surjective={} ({})",
        e.full, e.faithful, e.essentially_surjective, e.scope
    );

    let broken = Phi {
        fault: Fault::Perturb,
        ..Phi::default()
    };
    let r = check_functor_laws(&broken, &posets[..3], &caps)?;
    println!("perturbed Φ: pass={}, first failure: {:?}", r.pass, r.failures.first().map(|f| f.law));
    Ok(())
}
