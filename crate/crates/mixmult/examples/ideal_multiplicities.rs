//! Mixed multiplicities of an ideal system (J | I_1, ..., I_s; N): J is
//! primary for the maximal ideal, the I_i have positive height on N, and
//! the multiplicities are the normalized leading coefficients of the
//! fiber-layer Hilbert polynomial.
//!
//! Run with `cargo run --example ideal_multiplicities`.

use mixmult::hilbert::FitControl;
use mixmult::ideal::MonomialIdeal;
use mixmult::mixed::IdealSystem;
use mixmult::module::MonomialModule;
use mixmult::oracle::{brute_force_length, raw_multipower, raw_product};
use mixmult::ring::GradedRing;

fn main() -> mixmult::Result<()> {
    let ctl = FitControl::default();
    let ring = GradedRing::standard(2);
    let maximal = MonomialIdeal::maximal(&ring);
    let staircase = MonomialIdeal::from_exponents(&ring, &[vec![2, 0], vec![0, 3]])?;

    // The system (m | (x^2, y^3); A) over A = k[x1, x2].
    let sys = IdealSystem::new(
        &ring,
        maximal.clone(),
        vec![staircase.clone()],
        MonomialModule::free(&ring, 1),
    )?;
    println!("system: {}", sys.describe());

    // The fiber layers: lengths of J^n0 I^n1 / J^(n0+1) I^n1.
    println!("fiber lengths (rows n0 = 0..4, columns n1 = 0..4):");
    for n0 in 0..5u32 {
        let row: Vec<u64> =
            (0..5u32).map(|n1| sys.fiber_hilbert(n0, &[n1]).unwrap()).collect();
        println!("  n0 = {n0}: {row:?}");
    }

    // Those lengths are eventually the polynomial n0 + 2 n1 + 1; the
    // types are its normalized degree-one coefficients.
    let p = sys.fiber_polynomial(&ctl)?;
    println!("fiber polynomial: {}", p.render(&["n0", "n1"]));
    let local = sys.ideal_mixed_multiplicities(&ctl)?;
    println!("q = {} (dimension of A modulo I-torsion)", local.q);
    for (k, v) in local.multiplicities.iter() {
        println!("  e[{k:?}] = {v}");
    }

    // The same system acting on the rank-1 module N = A + A/(x1): the
    // types transmute through the rank.
    let module = MonomialModule::free(&ring, 1).direct_sum(&MonomialModule::quotient(
        &ring,
        MonomialIdeal::from_exponents(&ring, &[vec![1, 0]])?,
    )?)?;
    let sys_n = sys.with_module(module)?;
    let outcome = sys_n.check_thm_3_4(&ctl)?;
    println!("{}", outcome.render_text());

    // Every engine length can be recomputed by a raw enumeration oracle
    // that knows nothing about minimal generators or caching.
    let j_raw = maximal.generators().to_vec();
    let i_raw = staircase.generators().to_vec();
    let l1 = raw_multipower(&[j_raw.clone(), i_raw], &[2, 1], ring.nvars());
    let l2 = raw_product(&j_raw, &l1);
    let oracle = brute_force_length(ring.nvars(), &l1, &l2, None, None)?;
    println!(
        "oracle cross-check at (n0, n1) = (2, 1): engine {}, enumeration {oracle}",
        sys.fiber_hilbert(2, &[1])?
    );

    // Dropping an ideal: types with k_i = 0 do not see I_i, and their sum
    // equals a multiplicity computed without I_i entirely.
    let two = IdealSystem::new(
        &ring,
        maximal,
        vec![
            MonomialIdeal::from_exponents(&ring, &[vec![1, 0]])?,
            MonomialIdeal::from_exponents(&ring, &[vec![0, 1]])?,
        ],
        MonomialModule::free(&ring, 1),
    )?;
    for i in 1..=2usize {
        let outcome = two.check_prop_2_1(i, &ctl)?;
        println!("{}", outcome.render_text());
    }
    Ok(())
}
