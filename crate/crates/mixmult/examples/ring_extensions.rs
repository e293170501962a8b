//! Module-finite monomial ring extensions: ranks from lattice indices,
//! transported ideals, multiplicities localized at the components'
//! maximal ideals, and the two decomposition checks (multiplicity and
//! length).
//!
//! Run with `cargo run --example ring_extensions`.

use mixmult::extension::{MonomialExtension, MonomialMapComponent};
use mixmult::hilbert::FitControl;
use mixmult::ideal::MonomialIdeal;
use mixmult::mixed::IdealSystem;
use mixmult::module::MonomialModule;
use mixmult::ring::{GradedRing, Monomial};

fn main() -> mixmult::Result<()> {
    let ctl = FitControl::default();
    let base = GradedRing::standard(2);

    // One component B_1 = k[u, v] receiving x -> u^2, y -> v, and a
    // second identity component B_2 = k[u, v].
    let aniso = MonomialMapComponent::new(vec![
        Monomial::new(vec![2, 0]),
        Monomial::new(vec![0, 1]),
    ])?;
    let identity = MonomialMapComponent::new(vec![
        Monomial::new(vec![1, 0]),
        Monomial::new(vec![0, 1]),
    ])?;
    println!(
        "component x -> u^2, y -> v: determinant {}, module-finite: {}",
        aniso.determinant(),
        aniso.is_module_finite()
    );
    let ext = MonomialExtension::new(&base, vec![aniso, identity])?;
    println!("extension B = B_1 x B_2 has rank {} over the base", ext.rank_over_base());

    // Transport of ideals into a component follows the substitution.
    let m = MonomialIdeal::maximal(&base);
    println!("transport of (x, y) into B_1: {}", ext.transport_ideal(0, &m)?);

    // Local multiplicities at each component's maximal ideal.
    let sys = IdealSystem::new(
        &base,
        m.clone(),
        vec![MonomialIdeal::from_exponents(&base, &[vec![1, 0]])?],
        MonomialModule::free(&base, 1),
    )?;
    for j in 0..ext.components().len() {
        let local = ext.local_mixed_multiplicities(j, &sys, &ctl)?;
        println!("component {j}: q = {}", local.q);
        for (k, v) in local.multiplicities.iter() {
            println!("  e[{k:?}] = {v}");
        }
    }

    // The transmutation: base multiplicities equal the component sum
    // divided by the rank, with exact divisibility.
    let outcome = ext.check_thm_3_9(&sys, &ctl)?;
    println!("{}", outcome.render_text());

    // Finite lengths decompose over the components: here F_1 = B_1/(u^3, v)
    // and F_2 = B_2/(u, v^2), of lengths 3 and 2.
    let component_ring = GradedRing::standard(2);
    let f1 = MonomialModule::quotient(
        &component_ring,
        MonomialIdeal::from_exponents(&component_ring, &[vec![3, 0], vec![0, 1]])?,
    )?;
    let f2 = MonomialModule::quotient(
        &component_ring,
        MonomialIdeal::from_exponents(&component_ring, &[vec![1, 0], vec![0, 2]])?,
    )?;
    let outcome = ext.length_decompose(&[f1, f2])?;
    println!("{}", outcome.render_text());
    Ok(())
}
