//! Multigraded monomial modules: finite direct sums of shifted copies of
//! the ring modulo coordinatewise monomial relations.
//!
//! A module is stored as `⊕_i S(-shift_i) / K_i` where each `K_i` is a
//! monomial ideal. This class is closed under the operations needed here
//! (direct sums, saturation) and has exactly computable Hilbert functions.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Dimension, GradedRing, Monomial, Multidegree};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialModule {
    ring: GradedRing,
    shifts: Vec<Multidegree>,
    coord_ideals: Vec<MonomialIdeal>,
}

impl MonomialModule {
    pub fn new(
        ring: &GradedRing,
        shifts: Vec<Multidegree>,
        coord_ideals: Vec<MonomialIdeal>,
    ) -> Result<Self> {
        if shifts.is_empty() {
            return Err(Error::InvalidInput("a module needs at least one generator".into()));
        }
        if shifts.len() != coord_ideals.len() {
            return Err(Error::ArityMismatch { expected: shifts.len(), found: coord_ideals.len() });
        }
        for s in &shifts {
            if s.arity() != ring.grading_arity() {
                return Err(Error::ArityMismatch {
                    expected: ring.grading_arity(),
                    found: s.arity(),
                });
            }
        }
        for k in &coord_ideals {
            if k.ring() != ring {
                return Err(Error::RingMismatch(
                    "coordinate ideal lives over a different ring".into(),
                ));
            }
        }
        Ok(MonomialModule { ring: ring.clone(), shifts, coord_ideals })
    }

    /// The free module of the given rank, with zero shifts.
    pub fn free(ring: &GradedRing, rank: usize) -> Self {
        Self::new(
            ring,
            vec![Multidegree::zero(ring.grading_arity()); rank.max(1)],
            vec![MonomialIdeal::zero(ring); rank.max(1)],
        )
        .expect("free module data is always consistent")
    }

    /// The cyclic module `S/I`.
    pub fn quotient(ring: &GradedRing, ideal: MonomialIdeal) -> Result<Self> {
        Self::new(ring, vec![Multidegree::zero(ring.grading_arity())], vec![ideal])
    }

    /// Build from a relation list `(generator index, monomial)`; indices
    /// are 0-based into `shifts`.
    pub fn from_relations(
        ring: &GradedRing,
        shifts: Vec<Multidegree>,
        relations: &[(usize, Monomial)],
    ) -> Result<Self> {
        let mut gens: Vec<Vec<Monomial>> = vec![Vec::new(); shifts.len()];
        for (idx, mono) in relations {
            if *idx >= shifts.len() {
                return Err(Error::InvalidInput(format!(
                    "relation references generator {idx}, but only {} exist",
                    shifts.len()
                )));
            }
            if mono.nvars() != ring.nvars() {
                return Err(Error::ArityMismatch { expected: ring.nvars(), found: mono.nvars() });
            }
            gens[*idx].push(mono.clone());
        }
        let ideals = gens.into_iter().map(|g| MonomialIdeal::new(ring, g)).collect();
        Self::new(ring, shifts, ideals)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generator_count(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[Multidegree] {
        &self.shifts
    }

    pub fn coordinate_ideals(&self) -> &[MonomialIdeal] {
        &self.coord_ideals
    }

    /// A module is zero when every coordinate relation is the unit ideal.
    pub fn is_zero(&self) -> bool {
        self.coord_ideals.iter().all(MonomialIdeal::is_unit)
    }

    /// Exact dimension of the graded piece `M_n` over the base field.
    pub fn piece_dimension(&self, n: &Multidegree) -> u64 {
        assert_eq!(n.arity(), self.ring.grading_arity(), "multidegree arity mismatch");
        let mut total = 0u64;
        for (shift, k) in self.shifts.iter().zip(&self.coord_ideals) {
            if k.is_unit() {
                continue;
            }
            let Some(target) = n.checked_sub(shift) else { continue };
            total += self
                .ring
                .enumerate_monomials_of_degree(&target)
                .iter()
                .filter(|m| !k.contains(m))
                .count() as u64;
        }
        total
    }

    /// Number of free coordinates; over the polynomial ring this is the
    /// rank of the module (torsion coordinates contribute nothing).
    pub fn rank(&self) -> usize {
        self.coord_ideals.iter().filter(|k| k.is_zero()).count()
    }

    /// The annihilator: intersection of the coordinate relation ideals.
    pub fn annihilator(&self) -> MonomialIdeal {
        let mut parts = self.coord_ideals.iter();
        let first = parts.next().expect("modules have at least one coordinate").clone();
        parts.fold(first, |acc, k| acc.intersect(k))
    }

    /// Whether the support meets the strictly positive orthant: some
    /// monomial of degree `(1,..,1)` survives the radical annihilator.
    pub fn supp_plusplus_nonempty(&self) -> bool {
        let rad = self.annihilator().radical();
        let ones = Multidegree::constant(1, self.ring.grading_arity());
        self.ring
            .enumerate_monomials_of_degree(&ones)
            .iter()
            .any(|m| !rad.contains(m))
    }

    /// Dimension of the locus of the support meeting the strictly
    /// positive orthant, in the multiprojective convention (affine
    /// dimension of the best variable subset, minus the grading arity).
    /// Returns `-inf` when the support misses the orthant entirely. This
    /// is exactly the total degree of the Hilbert polynomial.
    pub fn dim_supp_plusplus(&self) -> Dimension {
        let n = self.ring.nvars();
        assert!(n <= 24, "subset enumeration supports at most 24 variables");
        let s = self.ring.grading_arity();
        let ann = self.annihilator();
        let gen_masks: Vec<u64> = ann.generators().iter().map(Monomial::support_mask).collect();
        let slot_masks: Vec<u64> = (0..s)
            .map(|j| self.ring.vars_in_slot(j).iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        let mut best: Option<usize> = None;
        for t in 0u64..(1 << n) {
            // The surviving variable set must touch every grading slot for
            // the corresponding component to meet the positive orthant.
            if slot_masks.iter().any(|&sm| sm & t == 0) {
                continue;
            }
            if gen_masks.iter().all(|&g| g & !t != 0) {
                let size = t.count_ones() as usize;
                best = Some(best.map_or(size, |b: usize| b.max(size)));
            }
        }
        match best {
            Some(b) => Dimension::Finite(b - s),
            None => Dimension::MinusInfinity,
        }
    }

    /// Coordinatewise saturation `M / (0 :_M I^inf)`; shifts are kept.
    pub fn saturate(&self, ideal: &MonomialIdeal) -> Result<MonomialModule> {
        let saturated = self
            .coord_ideals
            .iter()
            .map(|k| k.saturation(ideal))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.ring, self.shifts.clone(), saturated)
    }

    pub fn direct_sum(&self, other: &MonomialModule) -> Result<MonomialModule> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch("direct sum across different rings".into()));
        }
        let mut shifts = self.shifts.clone();
        shifts.extend(other.shifts.iter().cloned());
        let mut ideals = self.coord_ideals.clone();
        ideals.extend(other.coord_ideals.iter().cloned());
        Self::new(&self.ring, shifts, ideals)
    }

    /// Largest total degree appearing in the defining data (relation
    /// generators and shifts); used to seed interpolation grids past the
    /// irregular range.
    pub fn max_data_degree(&self) -> u32 {
        let reln = self.coord_ideals.iter().map(MonomialIdeal::max_generator_degree).max().unwrap_or(0);
        let shift = self.shifts.iter().map(Multidegree::total).max().unwrap_or(0);
        reln.max(shift)
    }
}
