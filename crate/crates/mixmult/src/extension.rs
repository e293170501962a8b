//! Module-finite ring extensions in the monomial class: products of
//! square monomial-substitution maps out of the base polynomial ring.
//! Each component is a polynomial ring receiving every base variable as a
//! monomial; module-finiteness forces those images to be pure powers of
//! distinct variables, so each component is a local-graded domain whose
//! residue field is the ground field itself. Multiple maximal ideals are
//! exercised through products of components.

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hilbert::{FitControl, MixedMultiplicitySet};
use crate::ideal::MonomialIdeal;
use crate::mixed::{IdealSystem, LocalMixedMultiplicities};
use crate::module::MonomialModule;
use crate::report::{ideal_value, CheckOutcome, CheckStatus};
use crate::ring::{monomials_below_total_degree, Dimension, GradedRing, Monomial};

/// One analytically irreducible piece of an extension: a map from the
/// `d`-variable base ring into a fresh `d`-variable polynomial ring,
/// sending base variable `i` to the monomial `images[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMapComponent {
    images: Vec<Monomial>,
}

impl MonomialMapComponent {
    /// Build a component from the images of the base variables. The
    /// exponent matrix must be square: one image per base variable, each a
    /// monomial in the same number of target variables.
    pub fn new(images: Vec<Monomial>) -> Result<MonomialMapComponent> {
        let d = images.len();
        if d == 0 {
            return Err(Error::InvalidInput("a component needs at least one variable".into()));
        }
        if let Some(bad) = images.iter().find(|img| img.nvars() != d) {
            return Err(Error::ArityMismatch { expected: d, found: bad.nvars() });
        }
        Ok(MonomialMapComponent { images })
    }

    /// Number of variables on both sides of the map.
    pub fn dimension(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Monomial] {
        &self.images
    }

    /// The component's own polynomial ring, standard graded.
    pub fn component_ring(&self) -> GradedRing {
        GradedRing::standard(self.dimension())
    }

    /// Determinant of the exponent matrix (row `i` = image of variable
    /// `i`), by exact cofactor expansion.
    pub fn determinant(&self) -> i64 {
        let rows: Vec<Vec<i64>> = self
            .images
            .iter()
            .map(|img| img.exponents().iter().map(|&e| e as i64).collect())
            .collect();
        det_i64(&rows)
    }

    /// Module-finiteness of the extension component over the base: the
    /// exponent matrix is nonsingular and the images generate an ideal
    /// whose quotient is zero-dimensional (so every target variable is
    /// integral over the base).
    pub fn is_module_finite(&self) -> bool {
        if self.determinant() == 0 {
            return false;
        }
        let ring = self.component_ring();
        let images = MonomialIdeal::new(&ring, self.images.clone());
        images.krull_dim_quotient() == Dimension::Finite(0)
    }

    /// Image of a base monomial under the substitution.
    pub fn transport(&self, m: &Monomial) -> Monomial {
        assert_eq!(m.nvars(), self.dimension(), "monomial lives over the base ring");
        let d = self.dimension();
        let mut exps = vec![0u32; d];
        for (i, img) in self.images.iter().enumerate() {
            let a = m.exponent(i);
            for (t, &e) in img.exponents().iter().enumerate() {
                exps[t] += a * e;
            }
        }
        Monomial::new(exps)
    }
}

fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0;
    for (col, &v) in m[0].iter().enumerate() {
        if v == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        det += sign * v * det_i64(&minor);
    }
    det
}

/// A module-finite extension of the base ring: a product of components,
/// one maximal ideal each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialExtension {
    base: GradedRing,
    components: Vec<MonomialMapComponent>,
}

impl MonomialExtension {
    pub fn new(
        base: &GradedRing,
        components: Vec<MonomialMapComponent>,
    ) -> Result<MonomialExtension> {
        if base.grading_arity() != 1 {
            return Err(Error::NotStandardGraded(
                "extensions are defined over a standard graded base (arity 1)".into(),
            ));
        }
        if components.is_empty() {
            return Err(Error::InvalidInput("an extension needs at least one component".into()));
        }
        for (j, comp) in components.iter().enumerate() {
            if comp.dimension() != base.nvars() {
                return Err(Error::ArityMismatch {
                    expected: base.nvars(),
                    found: comp.dimension(),
                });
            }
            if !comp.is_module_finite() {
                return Err(Error::InvalidInput(format!(
                    "component {j} is not module-finite over the base \
                     (determinant {}, images must integrally cover every variable)",
                    comp.determinant()
                )));
            }
        }
        Ok(MonomialExtension { base: base.clone(), components })
    }

    pub fn base(&self) -> &GradedRing {
        &self.base
    }

    pub fn components(&self) -> &[MonomialMapComponent] {
        &self.components
    }

    /// Rank of the extension as a module over the base: the sum over
    /// components of the exponent-lattice index `|det|`.
    pub fn rank_over_base(&self) -> u64 {
        self.components.iter().map(|c| c.determinant().unsigned_abs()).sum()
    }

    /// Transport of a base ideal into component `j` (0-based).
    pub fn transport_ideal(&self, j: usize, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        let comp = self
            .components
            .get(j)
            .ok_or_else(|| Error::InvalidInput(format!("component index {j} out of range")))?;
        if ideal.ring() != &self.base {
            return Err(Error::RingMismatch("transported ideal must live over the base".into()));
        }
        let ring = comp.component_ring();
        Ok(MonomialIdeal::new(
            &ring,
            ideal.generators().iter().map(|g| comp.transport(g)).collect(),
        ))
    }

    pub fn to_value(&self) -> Value {
        json!({
            "components": self
                .components
                .iter()
                .map(|c| {
                    json!({
                        "vars": c.dimension(),
                        "images": c.images().iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    fn require_ring_side_system(&self, sys: &IdealSystem) -> Result<()> {
        if sys.ring() != &self.base {
            return Err(Error::RingMismatch("the system must live over the extension's base".into()));
        }
        let module = sys.module();
        let free_rank_one =
            module.generator_count() == 1 && module.coordinate_ideals()[0].is_zero();
        if !free_rank_one {
            return Err(Error::InvalidInput(
                "extension comparisons are between ring-side multiplicities; \
                 the system's module must be the base ring itself (free, rank 1)"
                    .into(),
            ));
        }
        Ok(())
    }

    /// Mixed multiplicities of the system transported into component `j`
    /// (0-based): the local values at that component's maximal ideal.
    pub fn local_mixed_multiplicities(
        &self,
        j: usize,
        sys: &IdealSystem,
        ctl: &FitControl,
    ) -> Result<LocalMixedMultiplicities> {
        self.require_ring_side_system(sys)?;
        let comp = self
            .components
            .get(j)
            .ok_or_else(|| Error::InvalidInput(format!("component index {j} out of range")))?;
        let ring = comp.component_ring();
        let jb = self.transport_ideal(j, sys.j_ideal())?;
        let ib = sys
            .ideals()
            .iter()
            .map(|i| self.transport_ideal(j, i))
            .collect::<Result<Vec<_>>>()?;
        let bsys = IdealSystem::new(&ring, jb, ib, MonomialModule::free(&ring, 1))?;
        let q = bsys.q_dimension()?;
        if q != self.base.nvars() {
            return Err(Error::HypothesisViolation(format!(
                "component {j} has local dimension {q}, expected {}",
                self.base.nvars()
            )));
        }
        bsys.ideal_mixed_multiplicities(ctl)
    }

    /// Check the extension transmutation: base multiplicities equal the
    /// component-sum of local multiplicities divided by the rank,
    /// `e(J^[k0+1], I^[k]; A) = Σ_Q e(JB_Q^[k0+1], IB_Q^[k]; B_Q) / rank`,
    /// with exact divisibility required at every type.
    pub fn check_thm_3_9(&self, sys: &IdealSystem, ctl: &FitControl) -> Result<CheckOutcome> {
        self.require_ring_side_system(sys)?;
        let started = Instant::now();
        let kind = "thm3.9";
        let rank = self.rank_over_base();
        let label = format!(
            "{} through {} component(s) of total rank {rank}",
            sys.describe(),
            self.components.len()
        );
        let inputs = json!({
            "J": ideal_value(sys.j_ideal()),
            "ideals": sys.ideals().iter().map(ideal_value).collect::<Vec<_>>(),
            "extension": self.to_value(),
        });
        let fail = |why: String, started: Instant| {
            CheckOutcome::finish(
                kind,
                label.clone(),
                inputs.clone(),
                Value::Null,
                Value::Null,
                CheckStatus::Fail(why),
                started,
            )
        };

        let base_side = match sys.ideal_mixed_multiplicities(ctl) {
            Ok(v) => v,
            Err(e) => return Ok(fail(format!("engine error on the base side: {e}"), started)),
        };
        let mut summed: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for j in 0..self.components.len() {
            match self.local_mixed_multiplicities(j, sys, ctl) {
                Ok(local) => {
                    if local.multiplicities.total_degree()
                        != base_side.multiplicities.total_degree()
                    {
                        return Ok(fail(
                            format!(
                                "component {j} produced degree {}, base side has degree {}",
                                local.multiplicities.total_degree(),
                                base_side.multiplicities.total_degree()
                            ),
                            started,
                        ));
                    }
                    for (key, value) in local.multiplicities.iter() {
                        *summed.entry(key.clone()).or_insert(0) += value;
                    }
                }
                Err(e) => {
                    return Ok(fail(format!("engine error at component {j}: {e}"), started))
                }
            }
        }
        let mut quotient: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for (key, &value) in &summed {
            if value % rank != 0 {
                let e = Error::NonIntegralQuotient(format!(
                    "component sum {value} at type {key:?} is not divisible by the rank {rank}"
                ));
                return Ok(fail(e.to_string(), started));
            }
            quotient.insert(key.clone(), value / rank);
        }
        let quotient_set = MixedMultiplicitySet::from_parts(
            base_side.multiplicities.arity(),
            base_side.multiplicities.total_degree(),
            quotient,
        );
        let status = if quotient_set == base_side.multiplicities {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail("component sum over rank differs from the base multiplicities".into())
        };
        let right = json!({
            "component_sum": summed.iter().map(|(k, v)| json!({"type": k, "value": v})).collect::<Vec<_>>(),
            "rank": rank,
            "quotient": crate::report::multiplicity_set_value(&quotient_set),
        });
        Ok(CheckOutcome::finish(
            kind,
            label,
            inputs,
            base_side.to_value(),
            right,
            status,
            started,
        ))
    }

    /// Length of a finite-length component module over the base ring,
    /// computed through the transported structure: the module is filtered
    /// by powers of the ideal generated by the images of the base
    /// variables, and each layer (a vector space over the base's residue
    /// field) is counted monomial by monomial.
    fn length_over_base(&self, j: usize, module: &MonomialModule) -> Result<u64> {
        let comp = &self.components[j];
        let ring = comp.component_ring();
        let transported_max = MonomialIdeal::new(&ring, comp.images().to_vec());
        let mut total = 0u64;
        for k in module.coordinate_ideals() {
            if k.is_unit() {
                continue;
            }
            let c = k.m_primary_exponent().map_err(|_| {
                Error::InfiniteLength(Some(format!(
                    "coordinate ideal {k} is not primary for the maximal ideal"
                )))
            })?;
            let boxm = monomials_below_total_degree(ring.nvars(), c);
            // Every image has positive degree, so the t-th power of the
            // transported ideal sits inside the t-th power of the maximal
            // ideal: the filtration dies at or before t = c.
            let mut t_power = MonomialIdeal::unit(&ring);
            for _ in 0..=c {
                if k.contains_ideal(&t_power) {
                    break;
                }
                let next = t_power.product(&transported_max);
                total += boxm
                    .iter()
                    .filter(|mu| {
                        t_power.contains(mu) && !next.contains(mu) && !k.contains(mu)
                    })
                    .count() as u64;
                t_power = next;
            }
        }
        Ok(total)
    }

    /// Length of a finite-length module over its own component ring: a
    /// plain staircase count.
    fn length_over_component(ring: &GradedRing, module: &MonomialModule) -> Result<u64> {
        let mut total = 0u64;
        for k in module.coordinate_ideals() {
            if k.is_unit() {
                continue;
            }
            let c = k.m_primary_exponent().map_err(|_| {
                Error::InfiniteLength(Some(format!(
                    "coordinate ideal {k} is not primary for the maximal ideal"
                )))
            })?;
            total += monomials_below_total_degree(ring.nvars(), c)
                .iter()
                .filter(|mu| !k.contains(mu))
                .count() as u64;
        }
        Ok(total)
    }

    /// Check the length decomposition over the components: for a product
    /// module `F = F_1 × ... × F_r` of finite length, the base-ring length
    /// of `F` (computed through the transported filtration) equals the sum
    /// of the component lengths, each weighted by its residue-field degree
    /// (always 1 in this class).
    pub fn length_decompose(&self, modules: &[MonomialModule]) -> Result<CheckOutcome> {
        if modules.len() != self.components.len() {
            return Err(Error::ArityMismatch {
                expected: self.components.len(),
                found: modules.len(),
            });
        }
        for (j, (comp, module)) in self.components.iter().zip(modules).enumerate() {
            if module.ring() != &comp.component_ring() {
                return Err(Error::RingMismatch(format!(
                    "module {j} must live over component {j}'s ring"
                )));
            }
        }
        let started = Instant::now();
        let kind = "length-decomposition";
        let label = format!("product module over {} component(s)", self.components.len());
        let inputs = json!({
            "extension": self.to_value(),
            "modules": modules.iter().map(crate::report::module_value).collect::<Vec<_>>(),
        });
        let mut base_lengths = Vec::with_capacity(modules.len());
        let mut component_lengths = Vec::with_capacity(modules.len());
        for (j, module) in modules.iter().enumerate() {
            base_lengths.push(self.length_over_base(j, module)?);
            component_lengths
                .push(Self::length_over_component(&self.components[j].component_ring(), module)?);
        }
        let lhs: u64 = base_lengths.iter().sum();
        let rhs: u64 = component_lengths.iter().sum();
        let status = if lhs == rhs {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(format!(
                "base-ring length {lhs} differs from the weighted component sum {rhs}"
            ))
        };
        Ok(CheckOutcome::finish(
            kind,
            label,
            inputs,
            json!({ "total": lhs, "per_component": base_lengths }),
            json!({ "total": rhs, "per_component": component_lengths }),
            status,
            started,
        ))
    }
}
