//! Mixed multiplicities of multigraded modules, and the transmutation
//! that reduces them to the ring case: for a module of positive rank
//! over a multigraded polynomial ring, every mixed multiplicity is the
//! ring's multiplicity times the rank.
//!
//! Run with `cargo run --example module_multiplicities`.

use mixmult::hilbert::{graded_mixed_multiplicities, FitControl};
use mixmult::ideal::MonomialIdeal;
use mixmult::module::MonomialModule;
use mixmult::ring::{GradedRing, Multidegree};
use mixmult::verify::check_thm_3_1;

fn main() -> mixmult::Result<()> {
    let ctl = FitControl::default();

    // S = k[x1, x2, y1, y2], bigraded with two variables per slot.
    let ring = GradedRing::standard_multigraded(&[2, 2])?;
    let free = MonomialModule::free(&ring, 1);
    let e = graded_mixed_multiplicities(&free, &ctl)?;
    println!("mixed multiplicities of S itself (degree {}):", e.total_degree());
    for (k, v) in e.iter() {
        println!("  e(S; {k:?}) = {v}");
    }

    // M = S(-(1,0)) + S(-(0,2)) + S: rank 3, shifts only.
    let module = MonomialModule::new(
        &ring,
        vec![
            Multidegree::new(vec![1, 0]),
            Multidegree::new(vec![0, 2]),
            Multidegree::zero(2),
        ],
        vec![
            MonomialIdeal::zero(&ring),
            MonomialIdeal::zero(&ring),
            MonomialIdeal::zero(&ring),
        ],
    )?;
    let e = graded_mixed_multiplicities(&module, &ctl)?;
    println!("shift sum of rank 3 (degree {}):", e.total_degree());
    for (k, v) in e.iter() {
        println!("  e(M; {k:?}) = {v}");
    }

    // The check compares the module side against rank * ring side at
    // every type and reports the outcome.
    let outcome = check_thm_3_1(&module, &ctl);
    println!("{}", outcome.render_text());

    // Torsion summands do not disturb the equality: they drop the rank
    // contribution but also the leading coefficients.
    let with_torsion = module.direct_sum(&MonomialModule::quotient(
        &ring,
        MonomialIdeal::from_exponents(&ring, &[vec![1, 0, 0, 0]])?,
    )?)?;
    println!(
        "after adding a torsion summand: rank = {}",
        with_torsion.rank()
    );
    let outcome = check_thm_3_1(&with_torsion, &ctl);
    println!("{}", outcome.render_text());

    // For a rank-zero module the statement is vacuous.
    let torsion = MonomialModule::quotient(
        &ring,
        MonomialIdeal::from_exponents(&ring, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]])?,
    )?;
    let outcome = check_thm_3_1(&torsion, &ctl);
    println!("{}", outcome.render_text());
    Ok(())
}
