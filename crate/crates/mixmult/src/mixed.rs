//! Mixed multiplicities of ideal systems over a standard graded polynomial
//! ring: the fiber-cone Hilbert function, its interpolated polynomial and
//! normalized leading coefficients, multi-Rees module multiplicities, and
//! the identity checks connecting module-side and ring-side values.
//!
//! For a system `(J, I_1..I_s, N)` with `J` primary for the irrelevant
//! maximal ideal, the central quantity is the exact length of
//! `J^{n0} I^n N / J^{n0+1} I^n N`. With monomial data this is a monomial
//! count: writing `L1 = J^{n0} I^n` and `L2 = J L1`, the layer at
//! coordinate `i` has basis the monomials of `L1` outside `L2 + K_i`.
//! Every such monomial is a minimal generator of `L1` times a cofactor of
//! total degree below the primary exponent `c` of `J` (a deeper cofactor
//! lands in `m^c L1 ⊆ J L1 = L2`), which bounds the enumeration.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hilbert::{
    mixed_multiplicities_from_poly, stable_fit, FitControl, FitOptions, MixedMultiplicitySet,
};
use crate::ideal::{multipower, MonomialIdeal};
use crate::module::MonomialModule;
use crate::poly::RationalPolynomial;
use crate::report::{
    ideal_value, module_value, multiplicity_set_value, CheckOutcome, CheckStatus,
};
use crate::ring::{monomials_of_total_degree, Dimension, GradedRing, Monomial, Multidegree};

/// Shared memo of layer bases: for a key `(n0, n)` the monomials of
/// `J^{n0} I^n` outside `J^{n0+1} I^n`. These depend only on the ideals,
/// so clones of a system (including module swaps) share one cache.
#[derive(Debug, Default)]
struct LayerCache {
    survivors: Mutex<HashMap<(u32, Vec<u32>), Arc<Vec<Monomial>>>>,
}

/// The data of a mixed-multiplicity computation: an `m`-primary ideal `J`,
/// ideals `I_1..I_s`, and a module `N`, all over one standard graded
/// polynomial ring.
#[derive(Debug)]
pub struct IdealSystem {
    ring: GradedRing,
    j: MonomialIdeal,
    ideals: Vec<MonomialIdeal>,
    module: MonomialModule,
    /// The product ideal `I = I_1 ... I_s`.
    product: MonomialIdeal,
    /// Smallest `c` with `m^c ⊆ J`.
    primary_exponent: u32,
    /// Whether `I` avoids the radical annihilator of the module (the
    /// standing hypothesis for mixed multiplicities of the system).
    hypothesis_ok: bool,
    /// All monomials of total degree `< primary_exponent` (layer cofactor
    /// candidates).
    below_c: Vec<Monomial>,
    cache: Arc<LayerCache>,
    /// Layer lengths for this system's module, keyed by `(n0, n)`.
    counts: Mutex<HashMap<(u32, Vec<u32>), u64>>,
}

impl Clone for IdealSystem {
    fn clone(&self) -> IdealSystem {
        IdealSystem {
            ring: self.ring.clone(),
            j: self.j.clone(),
            ideals: self.ideals.clone(),
            module: self.module.clone(),
            product: self.product.clone(),
            primary_exponent: self.primary_exponent,
            hypothesis_ok: self.hypothesis_ok,
            below_c: self.below_c.clone(),
            cache: Arc::clone(&self.cache),
            counts: Mutex::new(self.counts.lock().unwrap().clone()),
        }
    }
}

/// Mixed multiplicities of an ideal system: values `e(J^[k0+1], I^[k]; N)`
/// keyed by `[k0, k_1..k_s]` with `k0 + |k| = q - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalMixedMultiplicities {
    /// Dimension of the module modulo its `I`-torsion.
    pub q: usize,
    /// The values, with total degree `q - 1`.
    pub multiplicities: MixedMultiplicitySet,
}

impl LocalMixedMultiplicities {
    /// Value at the type `[k0, k]`.
    pub fn value(&self, key: &[u32]) -> u64 {
        self.multiplicities.get(key)
    }

    pub fn to_value(&self) -> Value {
        json!({ "q": self.q, "multiplicities": multiplicity_set_value(&self.multiplicities) })
    }
}

impl IdealSystem {
    pub fn new(
        ring: &GradedRing,
        j: MonomialIdeal,
        ideals: Vec<MonomialIdeal>,
        module: MonomialModule,
    ) -> Result<IdealSystem> {
        if ring.grading_arity() != 1 {
            return Err(Error::NotStandardGraded(
                "ideal systems are defined over a standard graded ring (arity 1)".into(),
            ));
        }
        if j.ring() != ring || module.ring() != ring || ideals.iter().any(|i| i.ring() != ring) {
            return Err(Error::RingMismatch(
                "J, every I_i, and the module must share one ring".into(),
            ));
        }
        if ideals.is_empty() {
            return Err(Error::InvalidInput("at least one ideal I_1 is required".into()));
        }
        if let Some(pos) = ideals.iter().position(MonomialIdeal::is_zero) {
            return Err(Error::InvalidInput(format!("I_{} is the zero ideal", pos + 1)));
        }
        if !j.is_proper() {
            return Err(Error::NotMPrimary("J must be a proper ideal".into()));
        }
        let primary_exponent = j.m_primary_exponent()?;
        let product = ideals.iter().fold(MonomialIdeal::unit(ring), |acc, i| acc.product(i));
        let radical_ann = module.annihilator().radical();
        let hypothesis_ok =
            !product.generators().iter().all(|g| radical_ann.contains(g)) && !module.is_zero();
        let below_c =
            crate::ring::monomials_below_total_degree(ring.nvars(), primary_exponent);
        Ok(IdealSystem {
            ring: ring.clone(),
            j,
            ideals,
            module,
            product,
            primary_exponent,
            hypothesis_ok,
            below_c,
            cache: Arc::new(LayerCache::default()),
            counts: Mutex::new(HashMap::new()),
        })
    }

    /// The same ideals over a different module, sharing the layer cache.
    pub fn with_module(&self, module: MonomialModule) -> Result<IdealSystem> {
        if module.ring() != &self.ring {
            return Err(Error::RingMismatch("replacement module lives over another ring".into()));
        }
        let radical_ann = module.annihilator().radical();
        let hypothesis_ok =
            !self.product.generators().iter().all(|g| radical_ann.contains(g))
                && !module.is_zero();
        Ok(IdealSystem {
            ring: self.ring.clone(),
            j: self.j.clone(),
            ideals: self.ideals.clone(),
            module,
            product: self.product.clone(),
            primary_exponent: self.primary_exponent,
            hypothesis_ok,
            below_c: self.below_c.clone(),
            cache: Arc::clone(&self.cache),
            counts: Mutex::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn j_ideal(&self) -> &MonomialIdeal {
        &self.j
    }

    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    pub fn module(&self) -> &MonomialModule {
        &self.module
    }

    /// Number of ideals `s` in the system.
    pub fn arity(&self) -> usize {
        self.ideals.len()
    }

    /// The product ideal `I = I_1 ... I_s`.
    pub fn product_ideal(&self) -> &MonomialIdeal {
        &self.product
    }

    /// Whether `I` avoids the radical annihilator of `N` — the standing
    /// hypothesis making the system's mixed multiplicities meaningful.
    pub fn hypothesis_holds(&self) -> bool {
        self.hypothesis_ok
    }

    /// The module modulo its `I`-torsion (coordinatewise saturation).
    pub fn saturated_module(&self) -> Result<MonomialModule> {
        self.module.saturate(&self.product)
    }

    /// One-line instance description for report labels.
    pub fn describe(&self) -> String {
        let ideals =
            self.ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ");
        format!(
            "J={}, I=[{}], N: {} generators, rank {}",
            self.j,
            ideals,
            self.module.generator_count(),
            self.module.rank()
        )
    }

    fn inputs_value(&self) -> Value {
        json!({
            "J": ideal_value(&self.j),
            "ideals": self.ideals.iter().map(ideal_value).collect::<Vec<_>>(),
            "module": module_value(&self.module),
        })
    }

    /// Monomials of `J^{n0} I^n` outside `J^{n0+1} I^n`, shared across
    /// clones. The set is finite: any member factors as a minimal
    /// generator of `L1` times a cofactor of degree below the primary
    /// exponent.
    fn survivors(&self, n0: u32, n: &[u32]) -> Arc<Vec<Monomial>> {
        let key = (n0, n.to_vec());
        if let Some(hit) = self.cache.survivors.lock().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        let refs: Vec<&MonomialIdeal> = self.ideals.iter().collect();
        let l1 = self.j.power(n0).product(&multipower(&self.ring, &refs, n));
        let l2 = self.j.product(&l1);
        let mut set = BTreeSet::new();
        for g in l1.generators() {
            for nu in &self.below_c {
                let candidate = g.mul(nu);
                if !l2.contains(&candidate) {
                    set.insert(candidate);
                }
            }
        }
        let arc = Arc::new(set.into_iter().collect::<Vec<_>>());
        self.cache.survivors.lock().unwrap().insert(key, Arc::clone(&arc));
        arc
    }

    /// Length of `J^{n0} I^n N / J^{n0+1} I^n N` (no hypothesis gate).
    fn layer_length(&self, n0: u32, n: &[u32]) -> u64 {
        let key = (n0, n.to_vec());
        if let Some(&hit) = self.counts.lock().unwrap().get(&key) {
            return hit;
        }
        let survivors = self.survivors(n0, n);
        let mut total = 0u64;
        for k in self.module.coordinate_ideals() {
            if k.is_unit() {
                continue;
            }
            if k.is_zero() {
                total += survivors.len() as u64;
            } else {
                total += survivors.iter().filter(|mu| !k.contains(mu)).count() as u64;
            }
        }
        self.counts.lock().unwrap().insert(key, total);
        total
    }

    /// The Hilbert function of the fiber cone of the system at `(n0, n)`:
    /// the exact length of `J^{n0} I^n N / J^{n0+1} I^n N`.
    pub fn fiber_hilbert(&self, n0: u32, n: &[u32]) -> Result<u64> {
        if n.len() != self.ideals.len() {
            return Err(Error::ArityMismatch { expected: self.ideals.len(), found: n.len() });
        }
        if !self.hypothesis_ok {
            return Err(Error::HypothesisViolation(
                "the product ideal lies in the radical annihilator of the module".into(),
            ));
        }
        Ok(self.layer_length(n0, n))
    }

    /// `q`: the dimension of the module modulo `I`-torsion.
    pub fn q_dimension(&self) -> Result<usize> {
        let saturated = self.saturated_module()?;
        if saturated.is_zero() || !self.hypothesis_ok {
            return Err(Error::HypothesisViolation(
                "the module is pure I-torsion; its saturation is zero".into(),
            ));
        }
        let mut best = Dimension::MinusInfinity;
        for k in saturated.coordinate_ideals() {
            best = best.max(k.krull_dim_quotient());
        }
        match best {
            Dimension::Finite(q) => Ok(q),
            Dimension::MinusInfinity => Err(Error::HypothesisViolation(
                "the saturated module has no surviving coordinate".into(),
            )),
        }
    }

    fn default_grid_base(&self) -> u32 {
        let mut d = self.j.max_generator_degree();
        for i in &self.ideals {
            d = d.max(i.max_generator_degree());
        }
        d.max(self.module.max_data_degree()) + 1
    }

    /// The Hilbert polynomial of the fiber cone, of total degree `q - 1`.
    pub fn fiber_polynomial(&self, ctl: &FitControl) -> Result<RationalPolynomial> {
        let q = self.q_dimension()?;
        if q == 0 {
            return Err(Error::InvalidInput(
                "the saturated module is artinian (q = 0): the fiber polynomial degenerates \
                 and the system has no mixed multiplicities"
                    .into(),
            ));
        }
        let s = self.ideals.len();
        let grid = ctl.grid(self.default_grid_base(), q as u32 + 1, s + 1);
        stable_fit(
            &|pt: &Multidegree| {
                let n: Vec<u32> = (1..=s).map(|axis| pt.get(axis)).collect();
                self.layer_length(pt.get(0), &n)
            },
            &FitOptions {
                grid,
                retries: ctl.retries,
                expect_degree: Some(q - 1),
                require_nonzero: true,
            },
        )
    }

    /// All mixed multiplicities `e(J^[k0+1], I^[k]; N)` of the system.
    pub fn ideal_mixed_multiplicities(
        &self,
        ctl: &FitControl,
    ) -> Result<LocalMixedMultiplicities> {
        let q = self.q_dimension()?;
        let p = self.fiber_polynomial(ctl)?;
        let multiplicities = mixed_multiplicities_from_poly(&p)?;
        Ok(LocalMixedMultiplicities { q, multiplicities })
    }

    /// The closed form of the degree-`n` piece of the distinguished power
    /// filtration on the multi-Rees module, in multidegree `m`:
    /// `J^{max(n-|m|,0)} I^m`.
    pub fn rees_power_piece_closed(&self, n: u32, m: &[u32]) -> Result<MonomialIdeal> {
        if m.len() != self.ideals.len() {
            return Err(Error::ArityMismatch { expected: self.ideals.len(), found: m.len() });
        }
        let refs: Vec<&MonomialIdeal> = self.ideals.iter().collect();
        let jexp = n.saturating_sub(m.iter().sum());
        Ok(self.j.power(jexp).product(&multipower(&self.ring, &refs, m)))
    }

    /// The same piece by direct expansion, with no collapsing: the n-th
    /// power of the ideal generated by `J` in degree zero and each `I_i`
    /// in degree `e_i` is expanded over all exponent splittings
    /// `(a_0, a_1..a_s)` of `n`, each contributing
    /// `J^{a_0} I_1^{a_1}...I_s^{a_s} · I^{m-a}`. Used as an independent
    /// oracle for [`IdealSystem::rees_power_piece_closed`].
    pub fn rees_power_piece_direct(&self, n: u32, m: &[u32]) -> Result<MonomialIdeal> {
        if m.len() != self.ideals.len() {
            return Err(Error::ArityMismatch { expected: self.ideals.len(), found: m.len() });
        }
        let s = self.ideals.len();
        let refs: Vec<&MonomialIdeal> = self.ideals.iter().collect();
        let mut acc = MonomialIdeal::zero(&self.ring);
        for split in monomials_of_total_degree(s + 1, n) {
            let a = split.exponents();
            if (1..=s).any(|i| a[i] > m[i - 1]) {
                continue;
            }
            let mut piece = self.j.power(a[0]);
            for i in 1..=s {
                piece = piece.product(&self.ideals[i - 1].power(a[i]));
            }
            let rest: Vec<u32> = (1..=s).map(|i| m[i - 1] - a[i]).collect();
            piece = piece.product(&multipower(&self.ring, &refs, &rest));
            acc = acc.sum(&piece);
        }
        Ok(acc)
    }

    /// Hilbert–Samuel multiplicity of the multi-Rees module of the
    /// saturated module with respect to the distinguished ideal
    /// (`J` together with the positive part of the Rees algebra). With
    /// `omit = Some(i)` (1-based), the ideal `I_i` is dropped from the
    /// Rees construction while the saturation still uses the full product.
    pub fn rees_module_multiplicity(
        &self,
        omit: Option<usize>,
        ctl: &FitControl,
    ) -> Result<u64> {
        let s = self.ideals.len();
        if let Some(i) = omit {
            if i == 0 || i > s {
                return Err(Error::InvalidInput(format!(
                    "omitted ideal index {i} out of range 1..={s}"
                )));
            }
        }
        let saturated = self.saturated_module()?;
        if saturated.is_zero() || !self.hypothesis_ok {
            return Err(Error::HypothesisViolation(
                "the module is pure I-torsion; the Rees module is zero".into(),
            ));
        }
        let q = self.q_dimension()?;
        let sat_system = self.with_module(saturated)?;
        let retained: Vec<usize> = (1..=s).filter(|&i| omit != Some(i)).collect();
        let degree = q + retained.len();

        // The length of the Rees module modulo the n-th power of the
        // distinguished ideal telescopes into layer lengths:
        // L(n) = sum over j + |m| < n of len(J^j I^m N' / J^{j+1} I^m N'),
        // with m supported on the retained ideals.
        let hf = |pt: &Multidegree| -> u64 {
            let bound = pt.get(0);
            let mut total = 0u64;
            for t in 0..bound {
                for split in monomials_of_total_degree(1 + retained.len(), t) {
                    let e = split.exponents();
                    let mut m = vec![0u32; s];
                    for (slot, &idx) in retained.iter().enumerate() {
                        m[idx - 1] = e[slot + 1];
                    }
                    total += sat_system.layer_length(e[0], &m);
                }
            }
            total
        };
        let grid = ctl.grid(self.default_grid_base(), degree as u32 + 2, 1);
        let p = stable_fit(
            &hf,
            &FitOptions {
                grid,
                retries: ctl.retries,
                expect_degree: Some(degree),
                require_nonzero: true,
            },
        )?;
        let set = mixed_multiplicities_from_poly(&p)?;
        Ok(set.get(&[set.total_degree() as u32]))
    }

    /// Check that module multiplicities transmute through rank:
    /// `e(J^[k0+1], I^[k]; N) = e(J^[k0+1], I^[k]; A) · rank N`
    /// for every type, where `A` is the ring itself.
    pub fn check_thm_3_4(&self, ctl: &FitControl) -> Result<CheckOutcome> {
        let started = Instant::now();
        let kind = "thm3.4";
        let label = self.describe();
        let inputs = self.inputs_value();
        let rank = self.module.rank() as u64;
        if rank == 0 {
            return Ok(CheckOutcome::finish(
                kind,
                label,
                inputs,
                Value::Null,
                Value::Null,
                CheckStatus::NotApplicable("the module has rank zero".into()),
                started,
            ));
        }
        let ring_system = self.with_module(MonomialModule::free(&self.ring, 1))?;
        let (module_side, ring_side) = (
            self.ideal_mixed_multiplicities(ctl),
            ring_system.ideal_mixed_multiplicities(ctl),
        );
        let (module_side, ring_side) = match (module_side, ring_side) {
            (Ok(m), Ok(r)) => (m, r),
            (Err(e), _) | (_, Err(e)) => {
                return Ok(CheckOutcome::finish(
                    kind,
                    label,
                    inputs,
                    Value::Null,
                    Value::Null,
                    CheckStatus::Fail(format!("engine error: {e}")),
                    started,
                ));
            }
        };
        let scaled = LocalMixedMultiplicities {
            q: ring_side.q,
            multiplicities: ring_side.multiplicities.scaled(rank),
        };
        let status = if module_side == scaled {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(format!(
                "module side q={} differs from ring side q={} scaled by rank {rank}",
                module_side.q, scaled.q
            ))
        };
        Ok(CheckOutcome::finish(
            kind,
            label,
            inputs,
            module_side.to_value(),
            scaled.to_value(),
            status,
            started,
        ))
    }

    /// Check that the types omitting ideal `i` sum to the Rees-module
    /// multiplicity of the system without `I_i`:
    /// `Σ_{k0+|k|=q-1, k_i=0} e(J^[k0+1], I^[k]; N) = e(𝔍_î; ℜ(I_î; N'))`.
    pub fn check_prop_2_1(&self, i: usize, ctl: &FitControl) -> Result<CheckOutcome> {
        let s = self.ideals.len();
        if i == 0 || i > s {
            return Err(Error::InvalidInput(format!("ideal index {i} out of range 1..={s}")));
        }
        let started = Instant::now();
        let kind = "prop2.1";
        let label = format!("{} (omitting I_{i})", self.describe());
        let inputs = {
            let mut v = self.inputs_value();
            v["omit"] = json!(i);
            v
        };
        if !self.hypothesis_ok {
            return Ok(CheckOutcome::finish(
                kind,
                label,
                inputs,
                Value::Null,
                Value::Null,
                CheckStatus::NotApplicable(
                    "the product ideal lies in the radical annihilator of the module".into(),
                ),
                started,
            ));
        }
        let outcome = self.ideal_mixed_multiplicities(ctl).and_then(|full| {
            let lhs: u64 = full
                .multiplicities
                .iter()
                .filter(|(key, _)| key[i] == 0)
                .map(|(_, v)| *v)
                .sum();
            let rhs = self.rees_module_multiplicity(Some(i), ctl)?;
            Ok((lhs, rhs))
        });
        Ok(match outcome {
            Ok((lhs, rhs)) => CheckOutcome::finish(
                kind,
                label,
                inputs,
                json!(lhs),
                json!(rhs),
                if lhs == rhs {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail(format!("sum of types with k_{i} = 0 is {lhs}, Rees side is {rhs}"))
                },
                started,
            ),
            Err(e) => CheckOutcome::finish(
                kind,
                label,
                inputs,
                Value::Null,
                Value::Null,
                CheckStatus::Fail(format!("engine error: {e}")),
                started,
            ),
        })
    }

    /// Check the Rees-module transmutation:
    /// `e(𝔍; ℜ(I; N')) = e(𝔍; ℜ(I; A)) · rank N` where `N'` is the module
    /// modulo `I`-torsion.
    pub fn check_cor_3_8(&self, ctl: &FitControl) -> Result<CheckOutcome> {
        let started = Instant::now();
        let kind = "cor3.8";
        let label = self.describe();
        let inputs = self.inputs_value();
        let rank = self.module.rank() as u64;
        if rank == 0 {
            return Ok(CheckOutcome::finish(
                kind,
                label,
                inputs,
                Value::Null,
                Value::Null,
                CheckStatus::NotApplicable("the module has rank zero".into()),
                started,
            ));
        }
        let outcome = self.rees_module_multiplicity(None, ctl).and_then(|lhs| {
            let ring_system = self.with_module(MonomialModule::free(&self.ring, 1))?;
            let ring_value = ring_system.rees_module_multiplicity(None, ctl)?;
            Ok((lhs, ring_value * rank))
        });
        Ok(match outcome {
            Ok((lhs, rhs)) => CheckOutcome::finish(
                kind,
                label,
                inputs,
                json!(lhs),
                json!(rhs),
                if lhs == rhs {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail(format!("module Rees multiplicity {lhs} != ring side {rhs}"))
                },
                started,
            ),
            Err(e) => CheckOutcome::finish(
                kind,
                label,
                inputs,
                Value::Null,
                Value::Null,
                CheckStatus::Fail(format!("engine error: {e}")),
                started,
            ),
        })
    }
}

/// Normalized leading coefficient of a univariate Hilbert–Samuel
/// polynomial: `degree! ×` leading coefficient, which must be a positive
/// integer.
pub fn hilbert_samuel_normalized(p: &RationalPolynomial) -> Result<u64> {
    let set = mixed_multiplicities_from_poly(p)?;
    Ok(set.get(&[set.total_degree() as u32]))
}
