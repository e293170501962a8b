//! Monomial ideals: canonical minimal generators and ideal arithmetic.
//!
//! Every `MonomialIdeal` is kept in canonical form — minimal generators,
//! sorted in descending lexicographic order — so structural equality is
//! ideal equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{monomials_of_total_degree, Dimension, GradedRing, Monomial};

/// A monomial ideal in a graded polynomial ring.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: GradedRing,
    gens: Vec<Monomial>,
}

/// Drop every generator divisible by another and sort the survivors.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Ascending total degree so a generator can only be divided by one
    // already kept.
    gens.sort_by(|a, b| a.grlex_cmp(b));
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.exponents().cmp(a.exponents()));
    kept
}

impl MonomialIdeal {
    /// The ideal generated by the given monomials, minimalized.
    pub fn new(ring: &GradedRing, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), ring.nvars(), "generator arity mismatch");
        }
        MonomialIdeal { ring: ring.clone(), gens: minimalize(gens) }
    }

    /// Checked construction from raw exponent vectors, for parsed input.
    pub fn from_exponents(ring: &GradedRing, exps: &[Vec<u32>]) -> Result<Self> {
        let mut gens = Vec::with_capacity(exps.len());
        for e in exps {
            if e.len() != ring.nvars() {
                return Err(Error::ArityMismatch { expected: ring.nvars(), found: e.len() });
            }
            gens.push(Monomial::new(e.clone()));
        }
        Ok(Self::new(ring, gens))
    }

    pub fn zero(ring: &GradedRing) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &GradedRing) -> Self {
        Self::new(ring, vec![Monomial::one(ring.nvars())])
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &GradedRing) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| Monomial::var(i, ring.nvars())).collect())
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Largest total degree among the minimal generators (0 for the zero
    /// ideal).
    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn assert_same_ring(&self, other: &MonomialIdeal) {
        assert_eq!(self.ring, other.ring, "ideal ring mismatch");
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(&self.ring, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Self::new(&self.ring, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::new(&self.ring, gens)
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// The colon ideal `I : (m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.div_saturating(m)).collect();
        Self::new(&self.ring, gens)
    }

    /// The colon ideal `I : J`, intersecting over the generators of `J`.
    /// By convention `I : (0)` is the unit ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.assert_same_ring(other);
        let mut parts = other.gens.iter().map(|h| self.colon(h));
        match parts.next() {
            None => Self::unit(&self.ring),
            Some(first) => parts.fold(first, |acc, p| acc.intersect(&p)),
        }
    }

    /// The saturation `I : J^inf`, computed as the fixpoint of colon by
    /// `J`. The ascending chain provably stabilizes within
    /// `1 + max_generator_degree` strict steps; exceeding that cap is a bug.
    pub fn saturation(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.assert_same_ring(other);
        if other.is_zero() {
            return Err(Error::ZeroIdealSaturation);
        }
        let cap = self.max_generator_degree() as usize + 1;
        let mut current = self.clone();
        for _ in 0..=cap {
            let next = current.colon_ideal(other);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::SaturationDiverged { cap })
    }

    /// The radical: generated by the squarefree parts of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        Self::new(&self.ring, self.gens.iter().map(Monomial::radical).collect())
    }

    /// Krull dimension of the quotient ring `R/I`: the largest subset `T`
    /// of the variables such that no generator has support inside `T`.
    pub fn krull_dim_quotient(&self) -> Dimension {
        let n = self.ring.nvars();
        assert!(n <= 24, "subset enumeration supports at most 24 variables");
        if self.is_unit() {
            return Dimension::MinusInfinity;
        }
        let masks: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        let mut best = 0usize;
        for t in 0u64..(1 << n) {
            if masks.iter().all(|&g| g & !t != 0) {
                best = best.max(t.count_ones() as usize);
            }
        }
        Dimension::Finite(best)
    }

    /// Height (codimension) of a proper ideal.
    pub fn height(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::InvalidInput("height of the unit ideal is undefined".into()));
        }
        match self.krull_dim_quotient() {
            Dimension::Finite(d) => Ok(self.ring.nvars() - d),
            Dimension::MinusInfinity => unreachable!("proper ideals have a finite quotient dimension"),
        }
    }

    /// The smallest `c` with `m^c` inside the ideal, where `m` is the
    /// ideal of all variables; errors when no such `c` exists.
    pub fn m_primary_exponent(&self) -> Result<u32> {
        if self.is_unit() {
            return Ok(0);
        }
        let n = self.ring.nvars();
        // Primary for the maximal ideal forces a pure power of every
        // variable among the minimal generators, and the pigeonhole bound
        // sum(a_i - 1) + 1 then always works.
        let mut pigeonhole = 1u32;
        let mut low = 1u32;
        for var in 0..n {
            let pure = self
                .gens
                .iter()
                .filter(|g| g.support() == [var])
                .map(Monomial::total_degree)
                .min();
            match pure {
                None => {
                    return Err(Error::NotMPrimary(format!(
                        "no pure power of variable x{} among the generators",
                        var + 1
                    )))
                }
                Some(a) => {
                    pigeonhole += a - 1;
                    low = low.max(a);
                }
            }
        }
        for c in low..=pigeonhole {
            if monomials_of_total_degree(n, c).iter().all(|m| self.contains(m)) {
                return Ok(c);
            }
        }
        unreachable!("pigeonhole bound must admit every monomial")
    }
}

/// The product `I_1^{e_1} ... I_r^{e_r}`; the empty product is the unit
/// ideal.
pub fn multipower(ring: &GradedRing, ideals: &[&MonomialIdeal], exps: &[u32]) -> MonomialIdeal {
    assert_eq!(ideals.len(), exps.len(), "one exponent per ideal");
    let mut acc = MonomialIdeal::unit(ring);
    for (ideal, &e) in ideals.iter().zip(exps) {
        if e > 0 {
            acc = acc.product(&ideal.power(e));
        }
    }
    acc
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::monomials_below_total_degree;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(ring: &GradedRing, exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(ring, exps.iter().map(|e| m(e)).collect())
    }

    fn random_ideal(rng: &mut StdRng, ring: &GradedRing, max_gens: usize, max_exp: u32) -> MonomialIdeal {
        let count = rng.gen_range(1..=max_gens);
        let gens = (0..count)
            .map(|_| m(&(0..ring.nvars()).map(|_| rng.gen_range(0..=max_exp)).collect::<Vec<_>>()))
            .collect();
        MonomialIdeal::new(ring, gens)
    }

    #[test]
    fn minimalization_drops_redundant_generators() {
        let r = GradedRing::standard(2);
        let i = ideal(&r, &[&[2, 0], &[2, 1], &[0, 3]]);
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[0, 3])]);
        // A unit generator swallows everything.
        let u = ideal(&r, &[&[0, 0], &[5, 5]]);
        assert!(u.is_unit());
    }

    #[test]
    fn membership_examples() {
        let r = GradedRing::standard(2);
        let i = ideal(&r, &[&[2, 0], &[0, 3]]);
        assert!(i.contains(&m(&[2, 1])));
        assert!(!i.contains(&m(&[1, 2])));
        assert!(!MonomialIdeal::zero(&r).contains(&m(&[0, 0])));
        assert!(MonomialIdeal::unit(&r).contains(&m(&[0, 0])));
    }

    #[test]
    fn sum_product_intersect_examples() {
        let r = GradedRing::standard(2);
        let a = ideal(&r, &[&[2, 0]]);
        let b = ideal(&r, &[&[0, 3]]);
        assert_eq!(a.sum(&b), ideal(&r, &[&[2, 0], &[0, 3]]));
        assert_eq!(a.product(&b), ideal(&r, &[&[2, 3]]));
        assert_eq!(a.intersect(&b), ideal(&r, &[&[2, 3]]));
        let c = ideal(&r, &[&[1, 0], &[0, 1]]);
        assert_eq!(c.power(2), ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(c.power(0), MonomialIdeal::unit(&r));
    }

    #[test]
    fn product_and_intersect_agree_with_membership_oracle() {
        let mut rng = StdRng::seed_from_u64(0xBEEF);
        let r = GradedRing::standard(3);
        let box3 = monomials_below_total_degree(3, 7);
        for _ in 0..25 {
            let a = random_ideal(&mut rng, &r, 4, 3);
            let b = random_ideal(&mut rng, &r, 4, 3);
            let inter = a.intersect(&b);
            let sum = a.sum(&b);
            for mono in &box3 {
                assert_eq!(inter.contains(mono), a.contains(mono) && b.contains(mono));
                assert_eq!(sum.contains(mono), a.contains(mono) || b.contains(mono));
            }
        }
    }

    #[test]
    fn power_is_additive() {
        let mut rng = StdRng::seed_from_u64(0xF00D);
        let r = GradedRing::standard(2);
        for _ in 0..10 {
            let i = random_ideal(&mut rng, &r, 3, 3);
            let a = rng.gen_range(0..=3);
            let b = rng.gen_range(0..=3);
            assert_eq!(i.power(a).product(&i.power(b)), i.power(a + b));
        }
    }

    #[test]
    fn multipower_matches_repeated_products() {
        let r = GradedRing::standard(2);
        let a = ideal(&r, &[&[1, 0], &[0, 1]]);
        let b = ideal(&r, &[&[2, 0], &[0, 3]]);
        let got = multipower(&r, &[&a, &b], &[2, 1]);
        assert_eq!(got, a.power(2).product(&b));
        assert_eq!(multipower(&r, &[], &[]), MonomialIdeal::unit(&r));
        assert_eq!(multipower(&r, &[&a, &b], &[0, 0]), MonomialIdeal::unit(&r));
    }

    #[test]
    fn colon_examples_and_oracle() {
        let r = GradedRing::standard(2);
        let i = ideal(&r, &[&[2, 1]]);
        assert_eq!(i.colon(&m(&[1, 0])), ideal(&r, &[&[1, 1]]));
        assert_eq!(i.colon(&m(&[5, 5])), MonomialIdeal::unit(&r));

        let mut rng = StdRng::seed_from_u64(42);
        let box2 = monomials_below_total_degree(2, 8);
        for _ in 0..25 {
            let i = random_ideal(&mut rng, &r, 4, 4);
            let g = m(&[rng.gen_range(0..3), rng.gen_range(0..3)]);
            let q = i.colon(&g);
            for mono in &box2 {
                assert_eq!(q.contains(mono), i.contains(&mono.mul(&g)), "{i} : {g} at {mono}");
            }
        }
    }

    #[test]
    fn saturation_examples() {
        let r = GradedRing::standard(2);
        // (x^2 y) : x^inf = (y)
        let i = ideal(&r, &[&[2, 1]]);
        let x = ideal(&r, &[&[1, 0]]);
        assert_eq!(i.saturation(&x).unwrap(), ideal(&r, &[&[0, 1]]));
        // (x^2, y^3) : y^inf = (1)
        let j = ideal(&r, &[&[2, 0], &[0, 3]]);
        let y = ideal(&r, &[&[0, 1]]);
        assert!(j.saturation(&y).unwrap().is_unit());
        // Saturating by the zero ideal is rejected.
        assert!(j.saturation(&MonomialIdeal::zero(&r)).is_err());
        // The zero ideal is already saturated.
        assert!(MonomialIdeal::zero(&r).saturation(&x).unwrap().is_zero());
    }

    /// Membership in `I : J^inf` via a one-shot high power: `m` lies in the
    /// saturation iff `m * h^30` lies in `I` for every generator `h` of `J`
    /// (membership along a fixed direction is monotone in the exponent).
    fn saturation_member_oracle(i: &MonomialIdeal, j: &MonomialIdeal, mono: &Monomial) -> bool {
        j.generators().iter().all(|h| i.contains(&mono.mul(&h.pow(30))))
    }

    #[test]
    fn saturation_agrees_with_membership_oracle() {
        let mut rng = StdRng::seed_from_u64(0x5A7);
        let r = GradedRing::standard(3);
        let box3 = monomials_below_total_degree(3, 6);
        for _ in 0..20 {
            let i = random_ideal(&mut rng, &r, 4, 3);
            let j = random_ideal(&mut rng, &r, 2, 2);
            if j.is_zero() {
                continue;
            }
            let sat = i.saturation(&j).unwrap();
            for mono in &box3 {
                assert_eq!(
                    sat.contains(mono),
                    saturation_member_oracle(&i, &j, mono),
                    "({i}) : ({j})^inf at {mono}"
                );
            }
            // Saturation is idempotent.
            assert_eq!(sat.saturation(&j).unwrap(), sat);
        }
    }

    #[test]
    fn radical_examples_and_power_oracle() {
        let r = GradedRing::standard(2);
        let i = ideal(&r, &[&[2, 0], &[1, 3]]);
        assert_eq!(i.radical(), ideal(&r, &[&[1, 0]]));

        let mut rng = StdRng::seed_from_u64(99);
        let box2 = monomials_below_total_degree(2, 5);
        for _ in 0..25 {
            let i = random_ideal(&mut rng, &r, 4, 4);
            let rad = i.radical();
            for mono in &box2 {
                // m in rad(I) iff some power of m lies in I; exponent 30 is
                // past every generator degree in this test.
                assert_eq!(rad.contains(mono), i.contains(&mono.pow(30)));
            }
            assert_eq!(i.product(&i).radical(), rad);
        }
    }

    /// Quotient dimension by direct recursion over "keep or drop each
    /// variable", independent of the bitmask loop in the implementation.
    fn dim_oracle(gens: &[Monomial], nvars: usize) -> Option<usize> {
        fn admissible(chosen: &[bool], gens: &[Monomial]) -> bool {
            !gens.iter().any(|g| g.support().iter().all(|&v| chosen[v]))
        }
        fn rec(var: usize, chosen: &mut Vec<bool>, gens: &[Monomial], nvars: usize) -> Option<usize> {
            if var == nvars {
                return admissible(chosen, gens).then(|| chosen.iter().filter(|&&b| b).count());
            }
            let skip = rec(var + 1, chosen, gens, nvars);
            chosen[var] = true;
            let take = rec(var + 1, chosen, gens, nvars);
            chosen[var] = false;
            match (skip, take) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            }
        }
        rec(0, &mut vec![false; nvars], gens, nvars)
    }

    #[test]
    fn quotient_dimension_examples() {
        let r2 = GradedRing::standard(2);
        assert_eq!(ideal(&r2, &[&[1, 0], &[0, 1]]).krull_dim_quotient(), Dimension::Finite(0));
        assert_eq!(ideal(&r2, &[&[1, 1]]).krull_dim_quotient(), Dimension::Finite(1));
        assert_eq!(MonomialIdeal::zero(&r2).krull_dim_quotient(), Dimension::Finite(2));
        assert_eq!(MonomialIdeal::unit(&r2).krull_dim_quotient(), Dimension::MinusInfinity);
    }

    #[test]
    fn quotient_dimension_matches_recursion_oracle() {
        let mut rng = StdRng::seed_from_u64(0xD1);
        for nvars in 1..=6 {
            let r = GradedRing::standard(nvars);
            for _ in 0..20 {
                let i = random_ideal(&mut rng, &r, 5, 2);
                let expected = match dim_oracle(i.generators(), nvars) {
                    None => Dimension::MinusInfinity,
                    Some(d) => Dimension::Finite(d),
                };
                assert_eq!(i.krull_dim_quotient(), expected, "ideal {i}");
            }
        }
    }

    #[test]
    fn height_examples() {
        let r = GradedRing::standard(3);
        assert_eq!(ideal(&r, &[&[1, 0, 0]]).height().unwrap(), 1);
        assert_eq!(ideal(&r, &[&[1, 0, 0], &[0, 2, 0]]).height().unwrap(), 2);
        assert_eq!(MonomialIdeal::zero(&r).height().unwrap(), 0);
        assert!(MonomialIdeal::unit(&r).height().is_err());
    }

    #[test]
    fn height_positive_iff_nonzero() {
        let mut rng = StdRng::seed_from_u64(0x8E1);
        let r = GradedRing::standard(3);
        for _ in 0..30 {
            let i = random_ideal(&mut rng, &r, 4, 3);
            if i.is_unit() {
                continue;
            }
            assert_eq!(i.height().unwrap() > 0, !i.is_zero());
        }
    }

    #[test]
    fn m_primary_exponent_examples() {
        let r = GradedRing::standard(2);
        assert_eq!(ideal(&r, &[&[1, 0], &[0, 1]]).m_primary_exponent().unwrap(), 1);
        // (x^2, y^3): degree-3 monomials include x y^2, outside the ideal;
        // every degree-4 monomial has x^2 or y^3 in it.
        assert_eq!(ideal(&r, &[&[2, 0], &[0, 3]]).m_primary_exponent().unwrap(), 4);
        assert!(matches!(
            ideal(&r, &[&[1, 0]]).m_primary_exponent(),
            Err(Error::NotMPrimary(_))
        ));
        assert!(MonomialIdeal::zero(&r).m_primary_exponent().is_err());
    }

    #[test]
    fn m_primary_exponent_is_a_sharp_certificate() {
        let mut rng = StdRng::seed_from_u64(0xC0C0A);
        for nvars in 1..=3 {
            let r = GradedRing::standard(nvars);
            for _ in 0..15 {
                // Force a pure power of each variable, then add noise.
                let mut gens: Vec<Monomial> = (0..nvars)
                    .map(|v| Monomial::var_power(v, rng.gen_range(1..=4), nvars))
                    .collect();
                for _ in 0..rng.gen_range(0..3) {
                    gens.push(m(&(0..nvars).map(|_| rng.gen_range(0..4)).collect::<Vec<_>>()));
                }
                let i = MonomialIdeal::new(&r, gens);
                if i.is_unit() {
                    continue;
                }
                let c = i.m_primary_exponent().unwrap();
                assert!(monomials_of_total_degree(nvars, c).iter().all(|mm| i.contains(mm)));
                if c > 0 {
                    assert!(
                        !monomials_of_total_degree(nvars, c - 1).iter().all(|mm| i.contains(mm)),
                        "certificate {c} not sharp for {i}"
                    );
                }
            }
        }
    }
}
