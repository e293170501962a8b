//! Multigraded polynomial rings, monomials, and multidegrees.
//!
//! A `GradedRing` is a polynomial ring `k[x_1..x_n]` graded by `N^s` in the
//! standard way: every variable's degree is a standard basis vector, so a
//! monomial's multidegree counts its exponents slot by slot.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A Krull dimension or polynomial degree, with a sentinel for the empty
/// case (zero module, zero polynomial).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dimension {
    /// Dimension of the zero ring / degree of the zero polynomial.
    MinusInfinity,
    Finite(usize),
}

impl Dimension {
    /// The finite value, if any.
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::MinusInfinity => None,
            Dimension::Finite(d) => Some(d),
        }
    }
}

impl From<usize> for Dimension {
    fn from(d: usize) -> Self {
        Dimension::Finite(d)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::MinusInfinity => write!(f, "-inf"),
            Dimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An element of the grading group `N^s`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(entries: Vec<u32>) -> Self {
        Multidegree(entries)
    }

    pub fn zero(arity: usize) -> Self {
        Multidegree(vec![0; arity])
    }

    /// The i-th standard basis vector of `N^arity`.
    pub fn basis(i: usize, arity: usize) -> Self {
        assert!(i < arity, "basis index {i} out of range for arity {arity}");
        let mut v = vec![0; arity];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn constant(value: u32, arity: usize) -> Self {
        Multidegree(vec![value; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Sum of the entries.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.arity(), other.arity(), "multidegree arity mismatch");
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        assert_eq!(self.arity(), other.arity(), "multidegree arity mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Multidegree)
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponent vector.
/// The derived order is plain lexicographic on exponents; use
/// [`Monomial::grlex_cmp`] for the graded order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The identity monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The single variable `x_i` (0-based).
    pub fn var(i: usize, nvars: usize) -> Self {
        Self::var_power(i, 1, nvars)
    }

    /// The pure power `x_i^e` (0-based variable index).
    pub fn var_power(i: usize, e: u32, nvars: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial arity mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e * k).collect() }
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "monomial arity mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / other`, if `other` divides `self`.
    pub fn div_exact(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            })
        } else {
            None
        }
    }

    /// Componentwise truncated quotient `max(a_i - b_i, 0)`; this is the
    /// generator-level colon operation.
    pub fn div_saturating(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial arity mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial arity mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// Indices of the variables that appear.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support as a bitmask; requires at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        assert!(self.nvars() <= 64, "support masks require at most 64 variables");
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// The squarefree part (each positive exponent clamped to 1).
    pub fn radical(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    /// Graded lexicographic comparison: total degree first, then the
    /// exponent vector lexicographically.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A standard `N^s`-multigraded polynomial ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedRing {
    nvars: usize,
    arity: usize,
    /// `slot_of[i]` is the grading slot of variable `i`.
    slot_of: Vec<usize>,
    /// `slot_vars[j]` lists the variables of degree `e_j`.
    slot_vars: Vec<Vec<usize>>,
}

impl GradedRing {
    /// Build a ring from explicit variable degrees; every degree must be a
    /// standard basis vector of `N^arity` and every slot must own at least
    /// one variable.
    pub fn new(nvars: usize, arity: usize, var_degrees: &[Multidegree]) -> Result<Self> {
        if arity == 0 {
            return Err(Error::NotStandardGraded("grading arity must be at least 1".into()));
        }
        if nvars == 0 {
            return Err(Error::InvalidInput("a graded ring needs at least one variable".into()));
        }
        if var_degrees.len() != nvars {
            return Err(Error::ArityMismatch { expected: nvars, found: var_degrees.len() });
        }
        let mut slot_of = Vec::with_capacity(nvars);
        let mut slot_vars = vec![Vec::new(); arity];
        for (i, d) in var_degrees.iter().enumerate() {
            if d.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: d.arity() });
            }
            let slot = match d.entries().iter().position(|&e| e == 1) {
                Some(j) if d.total() == 1 => j,
                _ => {
                    return Err(Error::NotStandardGraded(format!(
                        "variable {} has degree {}, not a standard basis vector",
                        i + 1,
                        d
                    )))
                }
            };
            slot_of.push(slot);
            slot_vars[slot].push(i);
        }
        if let Some(j) = slot_vars.iter().position(|vars| vars.is_empty()) {
            return Err(Error::NotStandardGraded(format!("grading slot {} has no variable", j + 1)));
        }
        Ok(GradedRing { nvars, arity, slot_of, slot_vars })
    }

    /// The standard `N`-graded polynomial ring in `nvars` variables.
    pub fn standard(nvars: usize) -> Self {
        Self::new(nvars, 1, &vec![Multidegree::new(vec![1]); nvars])
            .expect("standard grading is always valid")
    }

    /// A multigraded ring whose variables come in consecutive blocks, one
    /// block per grading slot.
    pub fn standard_multigraded(block_sizes: &[usize]) -> Result<Self> {
        let arity = block_sizes.len();
        let mut degrees = Vec::new();
        for (j, &size) in block_sizes.iter().enumerate() {
            for _ in 0..size {
                degrees.push(Multidegree::basis(j, arity));
            }
        }
        Self::new(degrees.len(), arity, &degrees)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Arity `s` of the grading group `N^s`.
    pub fn grading_arity(&self) -> usize {
        self.arity
    }

    pub fn slot_of_var(&self, i: usize) -> usize {
        self.slot_of[i]
    }

    pub fn vars_in_slot(&self, j: usize) -> &[usize] {
        &self.slot_vars[j]
    }

    pub fn degree_of_var(&self, i: usize) -> Multidegree {
        Multidegree::basis(self.slot_of[i], self.arity)
    }

    /// Multidegree of a monomial: exponent totals slot by slot.
    pub fn degree_of(&self, m: &Monomial) -> Multidegree {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        let mut deg = vec![0u32; self.arity];
        for (i, &e) in m.exponents().iter().enumerate() {
            deg[self.slot_of[i]] += e;
        }
        Multidegree::new(deg)
    }

    /// All monomials of the given multidegree, in descending lexicographic
    /// order of exponent vectors (a fixed, deterministic order).
    pub fn enumerate_monomials_of_degree(&self, d: &Multidegree) -> Vec<Monomial> {
        assert_eq!(d.arity(), self.arity, "multidegree arity mismatch");
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars];
        let mut remaining: Vec<u32> = d.entries().to_vec();
        self.enumerate_rec(0, &mut exps, &mut remaining, &mut out);
        out
    }

    fn enumerate_rec(
        &self,
        var: usize,
        exps: &mut Vec<u32>,
        remaining: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if var == self.nvars {
            if remaining.iter().all(|&r| r == 0) {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let slot = self.slot_of[var];
        // The last variable of a slot must absorb the whole remainder for
        // the branch to close; taking larger exponents first yields the
        // descending lexicographic order.
        let is_last_in_slot = *self.slot_vars[slot].last().unwrap() == var;
        let budget = remaining[slot];
        if is_last_in_slot {
            exps[var] = budget;
            remaining[slot] = 0;
            self.enumerate_rec(var + 1, exps, remaining, out);
            remaining[slot] = budget;
            exps[var] = 0;
        } else {
            for e in (0..=budget).rev() {
                exps[var] = e;
                remaining[slot] = budget - e;
                self.enumerate_rec(var + 1, exps, remaining, out);
            }
            exps[var] = 0;
            remaining[slot] = budget;
        }
    }
}

/// All monomials in `nvars` variables of the given total degree, in
/// descending lexicographic order.
pub fn monomials_of_total_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(var: usize, nvars: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == nvars {
            exps[var] = left;
            out.push(Monomial::new(exps.clone()));
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            rec(var + 1, nvars, left - e, exps, out);
        }
        exps[var] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, nvars, degree, &mut exps, &mut out);
    out
}

/// All monomials of total degree strictly below `bound`.
pub fn monomials_below_total_degree(nvars: usize, bound: u32) -> Vec<Monomial> {
    (0..bound).flat_map(|d| monomials_of_total_degree(nvars, d)).collect()
}
