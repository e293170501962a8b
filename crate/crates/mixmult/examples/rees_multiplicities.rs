//! Multiplicities of modules over multi-Rees algebras, computed from the
//! filtration layers of R(J, I; N) acting on the saturation of N, and
//! the sum identity tying them back to the fiber types.
//!
//! Run with `cargo run --example rees_multiplicities`.

use mixmult::hilbert::FitControl;
use mixmult::ideal::MonomialIdeal;
use mixmult::mixed::IdealSystem;
use mixmult::module::MonomialModule;
use mixmult::ring::GradedRing;

fn main() -> mixmult::Result<()> {
    let ctl = FitControl::default();
    let ring = GradedRing::standard(2);
    let maximal = MonomialIdeal::maximal(&ring);
    let x = MonomialIdeal::from_exponents(&ring, &[vec![1, 0]])?;
    let y = MonomialIdeal::from_exponents(&ring, &[vec![0, 1]])?;

    let sys = IdealSystem::new(
        &ring,
        maximal.clone(),
        vec![x.clone(), y.clone()],
        MonomialModule::free(&ring, 1),
    )?;
    println!("system: {}", sys.describe());

    // Graded pieces of the Rees power: the closed form agrees with the
    // direct expansion over all splittings of the total power.
    for n in 0..3u32 {
        let closed = sys.rees_power_piece_closed(n, &[1, 1])?;
        let direct = sys.rees_power_piece_direct(n, &[1, 1])?;
        assert_eq!(closed, direct);
        println!("  (J,I)-power piece at n = {n}, m = (1,1): {closed}");
    }

    // The Rees-module multiplicity sums every fiber layer below a
    // simplex; its Hilbert polynomial has degree q + s.
    let e = sys.rees_module_multiplicity(None, &ctl)?;
    println!("Rees multiplicity of the full system: {e}");

    // Omitting one ideal from the Rees enumeration (1-based index).
    for i in 1..=2usize {
        let e = sys.rees_module_multiplicity(Some(i), &ctl)?;
        println!("  omitting ideal {i}: {e}");
    }

    // The sum identity: the Rees multiplicity equals the sum of all
    // fiber types, and transmutes through the rank of the module.
    let module = MonomialModule::free(&ring, 2);
    let sys2 = sys.with_module(module)?;
    let types = sys2.ideal_mixed_multiplicities(&ctl)?;
    let total: u64 = types.multiplicities.iter().map(|(_, v)| v).sum();
    let rees = sys2.rees_module_multiplicity(None, &ctl)?;
    println!("sum of types = {total}, Rees multiplicity = {rees}");
    let outcome = sys2.check_cor_3_8(&ctl)?;
    println!("{}", outcome.render_text());

    // Raising the ideals to powers scales each type by the matching
    // power product: u^k for type k.
    let base = IdealSystem::new(
        &ring,
        maximal.clone(),
        vec![maximal.clone()],
        MonomialModule::free(&ring, 1),
    )?;
    let e1 = base.ideal_mixed_multiplicities(&ctl)?;
    println!("power scaling of (m | m^u; A):");
    for u in 1..=3u32 {
        let powered = IdealSystem::new(
            &ring,
            maximal.clone(),
            vec![maximal.power(u)],
            MonomialModule::free(&ring, 1),
        )?;
        let eu = powered.ideal_mixed_multiplicities(&ctl)?;
        let scaled: Vec<(Vec<u32>, u64, u64)> = e1
            .multiplicities
            .iter()
            .map(|(k, v)| (k.clone(), v * u64::from(u).pow(k[1]), eu.value(k)))
            .collect();
        for (k, predicted, computed) in scaled {
            assert_eq!(predicted, computed);
            println!("  u = {u}, type {k:?}: {computed} (= base x u^k)");
        }
    }
    Ok(())
}
