//! Interpolate multigraded Hilbert polynomials by validated finite
//! differences: the Hilbert function is sampled on a grid past the data
//! of the module, fitted exactly over the rationals, and re-checked on
//! shifted grids before it is accepted.
//!
//! Run with `cargo run --example hilbert_polynomial`.

use mixmult::hilbert::{hilbert_polynomial, FitControl};
use mixmult::ideal::MonomialIdeal;
use mixmult::module::MonomialModule;
use mixmult::ring::{GradedRing, Multidegree};

fn main() -> mixmult::Result<()> {
    let ctl = FitControl::default();

    // The free module over k[x1, x2]: pieces have dimension n + 1.
    let plane = GradedRing::standard(2);
    let free = MonomialModule::free(&plane, 1);
    let p = hilbert_polynomial(&free, &ctl)?;
    println!("k[x1,x2]           : P(n1) = {}", p.render(&["n1"]));

    // A quotient with a staircase of relations.
    let module = MonomialModule::quotient(
        &plane,
        MonomialIdeal::from_exponents(&plane, &[vec![3, 0], vec![1, 2]])?,
    )?;
    let p = hilbert_polynomial(&module, &ctl)?;
    println!("k[x1,x2]/(x1^3, x1 x2^2): P(n1) = {}", p.render(&["n1"]));

    // A bigraded module: F = S(-(1,0)) + S over S = k[x1, x2] with
    // deg x1 = (1,0), deg x2 = (0,1). Both pieces are one-dimensional in
    // every bidegree past the shift, so P = 2.
    let bigraded = GradedRing::standard_multigraded(&[1, 1])?;
    let shifted = MonomialModule::new(
        &bigraded,
        vec![Multidegree::new(vec![1, 0]), Multidegree::zero(2)],
        vec![MonomialIdeal::zero(&bigraded), MonomialIdeal::zero(&bigraded)],
    )?;
    let p = hilbert_polynomial(&shifted, &ctl)?;
    println!("S(-(1,0)) + S      : P(n1,n2) = {}", p.render(&["n1", "n2"]));

    // With one variable per slot, every point of Supp_++ needs all three
    // variables active, so the quotient by (x^2) has empty Supp_++ and
    // no Hilbert polynomial in the relevant range.
    let tri = GradedRing::standard_multigraded(&[1, 1, 1])?;
    let module = MonomialModule::quotient(
        &tri,
        MonomialIdeal::from_exponents(&tri, &[vec![2, 0, 0]])?,
    )?;
    match hilbert_polynomial(&module, &ctl) {
        Ok(_) => println!("unexpected: the quotient by (x^2) has empty Supp_++"),
        Err(e) => println!("quotient by (x^2)  : rejected as expected ({e})"),
    }

    // The control structure overrides the sampling grid; a too-narrow
    // width is still validated, so the fit stays exact.
    let wide = FitControl { grid_base: Some(6), grid_width: Some(5), ..FitControl::default() };
    let p = hilbert_polynomial(&free, &wide)?;
    println!("k[x1,x2] on a moved grid: P(n1) = {}", p.render(&["n1"]));
    Ok(())
}
