//! Hilbert polynomial recovery: exact Newton finite-difference
//! interpolation on a lattice grid, validated at out-of-grid points and
//! retried on grids deeper in the stable range.
//!
//! Hilbert functions agree with their Hilbert polynomial only far enough
//! from the origin, and "far enough" has no cheap exact formula. The
//! strategy here: fit on a heuristically-placed grid, then demand that the
//! fit reproduces the function on grids shifted along every axis and the
//! diagonal. A wrong fit cannot pass validation (two distinct polynomials
//! of bounded per-axis degree cannot agree on a full shifted grid), so a
//! validated fit is the true polynomial on the sampled range.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::module::MonomialModule;
use crate::poly::{type_factorial, RationalPolynomial};
use crate::ring::{monomials_of_total_degree, Dimension, Multidegree};

/// A finite evaluation grid: the box `base + [0, width)^arity`, plus the
/// offset used to place validation grids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GridSpec {
    pub base: Multidegree,
    pub width: u32,
    pub validation_offset: u32,
}

impl GridSpec {
    pub fn new(base: Multidegree, width: u32, validation_offset: u32) -> Self {
        assert!(width >= 1, "grids need at least one point per axis");
        assert!(validation_offset >= 1, "validation must leave the grid");
        GridSpec { base, width, validation_offset }
    }

    pub fn arity(&self) -> usize {
        self.base.arity()
    }

    /// All lattice points, row-major with the last axis fastest.
    pub fn points(&self) -> Vec<Multidegree> {
        let a = self.arity();
        let w = self.width;
        let count = (w as usize).pow(a as u32);
        let mut out = Vec::with_capacity(count);
        let mut coord = vec![0u32; a];
        for _ in 0..count {
            out.push(Multidegree::new(
                coord.iter().zip(self.base.entries()).map(|(c, b)| c + b).collect(),
            ));
            for axis in (0..a).rev() {
                coord[axis] += 1;
                if coord[axis] < w {
                    break;
                }
                coord[axis] = 0;
            }
        }
        out
    }

    /// The grid moved by the validation offset along one axis, or along
    /// the diagonal when `axis` is `None`.
    fn shifted_along(&self, axis: Option<usize>) -> GridSpec {
        let entries: Vec<u32> = self
            .base
            .entries()
            .iter()
            .enumerate()
            .map(|(i, &b)| match axis {
                Some(a) if a != i => b,
                _ => b + self.validation_offset,
            })
            .collect();
        GridSpec::new(Multidegree::new(entries), self.width, self.validation_offset)
    }

    /// The retry grid: base doubled coordinatewise (zero treated as one).
    fn doubled(&self) -> GridSpec {
        let entries: Vec<u32> = self.base.entries().iter().map(|&b| b.max(1) * 2).collect();
        GridSpec::new(Multidegree::new(entries), self.width, self.validation_offset)
    }
}

fn point_coords(pt: &Multidegree) -> Vec<i64> {
    pt.entries().iter().map(|&e| e as i64).collect()
}

/// Newton forward-difference interpolation of a value table over a grid.
/// The result is the unique polynomial of per-axis degree below `width`
/// through every tabulated point; all arithmetic is exact.
pub fn interpolate(table: &[u64], grid: &GridSpec) -> RationalPolynomial {
    let a = grid.arity();
    let w = grid.width as usize;
    assert_eq!(table.len(), w.pow(a as u32), "table size must match the grid");
    let mut diff: Vec<BigRational> =
        table.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();

    // In-place forward differences along each axis; afterwards the entry
    // at multi-index j holds the mixed difference Δ^j f(base).
    for axis in 0..a {
        let stride = w.pow((a - 1 - axis) as u32);
        for start in 0..diff.len() {
            if (start / stride) % w != 0 {
                continue;
            }
            for k in 1..w {
                for pos in (k..w).rev() {
                    let hi = start + pos * stride;
                    let lo = start + (pos - 1) * stride;
                    let v = diff[lo].clone();
                    diff[hi] -= v;
                }
            }
        }
    }

    let mut poly = RationalPolynomial::zero(a);
    for (idx, coeff) in diff.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mut term = RationalPolynomial::constant_int(a, 1);
        let mut rest = idx;
        for axis in (0..a).rev() {
            let j = (rest % w) as u32;
            rest /= w;
            if j > 0 {
                let b = RationalPolynomial::binomial_in_var(
                    a,
                    axis,
                    grid.base.get(axis) as i64,
                    j,
                );
                term = term.mul(&b);
            }
        }
        poly = poly.add(&term.scale(coeff));
    }
    poly
}

/// Check that `p` reproduces `hf` on every grid shifted by the validation
/// offset along each axis and along the diagonal.
pub fn stability_check<F>(hf: &F, p: &RationalPolynomial, grid: &GridSpec) -> bool
where
    F: Fn(&Multidegree) -> u64 + Sync,
{
    let mut grids: Vec<GridSpec> =
        (0..grid.arity()).map(|axis| grid.shifted_along(Some(axis))).collect();
    grids.push(grid.shifted_along(None));
    grids.iter().all(|g| {
        g.points().par_iter().all(|pt| {
            p.evaluate(&point_coords(pt)) == BigRational::from(BigInt::from(hf(pt)))
        })
    })
}

/// Requirements for a validated fit.
#[derive(Clone, Debug)]
pub struct FitOptions {
    pub grid: GridSpec,
    /// Additional attempts after the first, each with a doubled base.
    pub retries: u32,
    /// Exact total degree the fit must have, when known a priori.
    pub expect_degree: Option<usize>,
    /// Reject the zero polynomial (for functions known to grow).
    pub require_nonzero: bool,
}

/// Interpolate-and-validate with retries. Returns the first interpolant
/// that passes the degree requirement and out-of-grid validation.
pub fn stable_fit<F>(hf: &F, opts: &FitOptions) -> Result<RationalPolynomial>
where
    F: Fn(&Multidegree) -> u64 + Sync,
{
    let mut grid = opts.grid.clone();
    let mut detail = String::new();
    for attempt in 0..=opts.retries {
        let table: Vec<u64> = grid.points().par_iter().map(hf).collect();
        let p = interpolate(&table, &grid);
        let mut issue: Option<String> = None;
        if opts.require_nonzero && p.is_zero() {
            issue = Some("interpolant is identically zero".into());
        }
        if issue.is_none() {
            if let Some(d) = opts.expect_degree {
                if p.total_degree() != Dimension::Finite(d) {
                    issue = Some(format!(
                        "interpolant degree {} differs from the expected degree {d}",
                        p.total_degree()
                    ));
                }
            }
        }
        if issue.is_none() && !stability_check(hf, &p, &grid) {
            issue = Some("validation points disagree with the interpolant".into());
        }
        match issue {
            None => return Ok(p),
            Some(msg) => {
                detail = format!("attempt {} at grid base {}: {msg}", attempt + 1, grid.base);
                grid = grid.doubled();
            }
        }
    }
    Err(Error::Unstable { attempts: opts.retries as usize + 1, detail })
}

/// User-facing interpolation knobs; `None` fields fall back to per-problem
/// defaults.
#[derive(Clone, Debug)]
pub struct FitControl {
    pub grid_base: Option<u32>,
    pub grid_width: Option<u32>,
    pub retries: u32,
    pub validation_offset: u32,
}

impl Default for FitControl {
    fn default() -> Self {
        FitControl { grid_base: None, grid_width: None, retries: 4, validation_offset: 3 }
    }
}

impl FitControl {
    pub fn grid(&self, default_base: u32, default_width: u32, arity: usize) -> GridSpec {
        GridSpec::new(
            Multidegree::constant(self.grid_base.unwrap_or(default_base), arity),
            self.grid_width.unwrap_or(default_width),
            self.validation_offset,
        )
    }
}

/// Mixed multiplicities of one graded object: for each type `k` with
/// `|k| = degree`, the normalized leading coefficient `k! * [n^k]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedMultiplicitySet {
    arity: usize,
    degree: usize,
    values: BTreeMap<Vec<u32>, u64>,
}

impl MixedMultiplicitySet {
    /// Crate-internal assembly from already-validated parts.
    pub(crate) fn from_parts(
        arity: usize,
        degree: usize,
        values: BTreeMap<Vec<u32>, u64>,
    ) -> MixedMultiplicitySet {
        MixedMultiplicitySet { arity, degree, values }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Common total degree of all types (the degree of the underlying
    /// polynomial).
    pub fn total_degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, k: &[u32]) -> u64 {
        *self.values.get(k).unwrap_or(&0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &u64)> {
        self.values.iter()
    }

    /// Sum of all values.
    pub fn sum(&self) -> u64 {
        self.values.values().sum()
    }

    /// Every value multiplied by a constant (used for rank comparisons).
    pub fn scaled(&self, factor: u64) -> MixedMultiplicitySet {
        MixedMultiplicitySet {
            arity: self.arity,
            degree: self.degree,
            values: self.values.iter().map(|(k, v)| (k.clone(), v * factor)).collect(),
        }
    }
}

/// Extract the mixed multiplicities from a Hilbert polynomial: every
/// normalized leading coefficient must come out a nonnegative integer.
pub fn mixed_multiplicities_from_poly(p: &RationalPolynomial) -> Result<MixedMultiplicitySet> {
    let (degree, lead) = p.total_degree_leading_terms()?;
    let mut values = BTreeMap::new();
    for key in monomials_of_total_degree(p.arity(), degree as u32) {
        let k = key.exponents().to_vec();
        let coeff = lead.get(&k).cloned().unwrap_or_else(BigRational::zero);
        let e = coeff * BigRational::from(type_factorial(&k));
        if !e.is_integer() {
            return Err(Error::BadMultiplicity(format!("type {k:?} yields {e}")));
        }
        let e = e.to_integer();
        if e.is_negative() {
            return Err(Error::BadMultiplicity(format!("type {k:?} yields {e}")));
        }
        let v = e
            .to_u64()
            .ok_or_else(|| Error::BadMultiplicity(format!("type {k:?} yields {e}, out of range")))?;
        values.insert(k, v);
    }
    Ok(MixedMultiplicitySet { arity: p.arity(), degree, values })
}

/// The multigraded Hilbert polynomial of a monomial module, recovered by
/// validated interpolation.
pub fn hilbert_polynomial(module: &MonomialModule, ctl: &FitControl) -> Result<RationalPolynomial> {
    let Dimension::Finite(degree) = module.dim_supp_plusplus() else {
        return Err(Error::EmptySupport);
    };
    let arity = module.ring().grading_arity();
    let grid = ctl.grid(module.max_data_degree() + 1, degree as u32 + 2, arity);
    stable_fit(
        &|n: &Multidegree| module.piece_dimension(n),
        &FitOptions {
            grid,
            retries: ctl.retries,
            expect_degree: Some(degree),
            require_nonzero: true,
        },
    )
}

/// Mixed multiplicities `e(M; k)` of a multigraded monomial module.
pub fn graded_mixed_multiplicities(
    module: &MonomialModule,
    ctl: &FitControl,
) -> Result<MixedMultiplicitySet> {
    mixed_multiplicities_from_poly(&hilbert_polynomial(module, ctl)?)
}
