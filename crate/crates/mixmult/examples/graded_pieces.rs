//! Build multigraded rings, monomial ideals and modules, and read off
//! their basic invariants: graded piece dimensions, rank, annihilator,
//! and the dimension of the relevant support.
//!
//! Run with `cargo run --example graded_pieces`.

use mixmult::ideal::MonomialIdeal;
use mixmult::module::MonomialModule;
use mixmult::ring::{GradedRing, Monomial, Multidegree};

fn main() -> mixmult::Result<()> {
    // A bigraded polynomial ring k[x1, x2, y1] with deg x_i = (1, 0) and
    // deg y1 = (0, 1): two variables in the first grading slot, one in
    // the second.
    let ring = GradedRing::standard_multigraded(&[2, 1])?;
    println!(
        "ring: {} variables, grading arity {}",
        ring.nvars(),
        ring.grading_arity()
    );
    for i in 0..ring.nvars() {
        println!("  variable {} has degree {}", i + 1, ring.degree_of_var(i));
    }

    // The monomial x1*x2*y1^2 sits in degree (2, 2).
    let m = Monomial::new(vec![1, 1, 2]);
    println!("degree of x1*x2*y1^2: {}", ring.degree_of(&m));

    // A monomial ideal keeps only its minimal generators.
    let ideal = MonomialIdeal::from_exponents(
        &ring,
        &[vec![2, 0, 0], vec![2, 1, 0], vec![0, 0, 3], vec![1, 0, 3]],
    )?;
    println!("ideal (x1^2, x1^2 x2, y1^3, x1 y1^3) minimalizes to {ideal}");

    // M = F/K where F is free on two generators shifted to (1,0) and
    // (0,0), and the second generator is killed by x1.
    let module = MonomialModule::from_relations(
        &ring,
        vec![Multidegree::new(vec![1, 0]), Multidegree::zero(2)],
        &[(1, Monomial::new(vec![1, 0, 0]))],
    )?;
    println!(
        "module with shifts {:?} and one relation:",
        module.shifts().iter().map(|s| s.to_string()).collect::<Vec<_>>()
    );
    println!("  rank over the ring     = {}", module.rank());
    println!("  annihilator            = {}", module.annihilator());
    println!("  dim Supp_++            = {}", module.dim_supp_plusplus());

    // Graded pieces dim_k M_(n1, n2) for small multidegrees.
    println!("  piece dimensions (rows n1 = 0..4, columns n2 = 0..4):");
    for n1 in 0..5u32 {
        let row: Vec<u64> = (0..5u32)
            .map(|n2| module.piece_dimension(&Multidegree::new(vec![n1, n2])))
            .collect();
        println!("    n1 = {n1}: {row:?}");
    }

    // A torsion module has rank 0 and a positive-depth annihilator.
    let torsion = MonomialModule::quotient(
        &ring,
        MonomialIdeal::from_exponents(&ring, &[vec![1, 0, 0]])?,
    )?;
    println!(
        "torsion quotient by (x1): rank = {}, annihilator = {}",
        torsion.rank(),
        torsion.annihilator()
    );
    Ok(())
}
