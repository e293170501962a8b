//! The graded-module transmutation check: every mixed multiplicity of a
//! positive-rank module equals the corresponding multiplicity of the ring
//! times the module's rank.

use std::time::Instant;

use serde_json::Value;

use crate::hilbert::{graded_mixed_multiplicities, FitControl, MixedMultiplicitySet};
use crate::module::MonomialModule;
use crate::report::{module_value, multiplicity_set_value, CheckOutcome, CheckStatus};

/// Check `e(M; k) = e(S; k) · rank M` for every type `k`, where `S` is the
/// module's own (free) ring. Rank-zero modules are reported as not
/// applicable rather than failing.
pub fn check_thm_3_1(module: &MonomialModule, ctl: &FitControl) -> CheckOutcome {
    let started = Instant::now();
    let kind = "thm3.1";
    let label = format!(
        "module with {} generators, rank {}, over a {}-variable ring graded in {} slots",
        module.generator_count(),
        module.rank(),
        module.ring().nvars(),
        module.ring().grading_arity(),
    );
    let inputs = module_value(module);
    let rank = module.rank() as u64;
    if rank == 0 {
        return CheckOutcome::finish(
            kind,
            label,
            inputs,
            Value::Null,
            Value::Null,
            CheckStatus::NotApplicable("the module has rank zero".into()),
            started,
        );
    }
    let ring_module = MonomialModule::free(module.ring(), 1);
    let sides: crate::Result<(MixedMultiplicitySet, MixedMultiplicitySet)> = (|| {
        Ok((
            graded_mixed_multiplicities(module, ctl)?,
            graded_mixed_multiplicities(&ring_module, ctl)?,
        ))
    })();
    match sides {
        Ok((module_side, ring_side)) => {
            let scaled = ring_side.scaled(rank);
            let status = if module_side == scaled {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail(format!(
                    "module multiplicities (degree {}) differ from ring multiplicities \
                     (degree {}) scaled by rank {rank}",
                    module_side.total_degree(),
                    scaled.total_degree()
                ))
            };
            CheckOutcome::finish(
                kind,
                label,
                inputs,
                multiplicity_set_value(&module_side),
                multiplicity_set_value(&scaled),
                status,
                started,
            )
        }
        Err(e) => CheckOutcome::finish(
            kind,
            label,
            inputs,
            Value::Null,
            Value::Null,
            CheckStatus::Fail(format!("engine error: {e}")),
            started,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::ring::{GradedRing, Monomial, Multidegree};

    #[test]
    fn shifted_direct_sum_transmutes_through_rank() {
        // M = S(-(1,0)) + S over the bigraded four-variable ring:
        // e(M; 1,1) = 2 = e(S; 1,1) * rank 2.
        let ring = GradedRing::standard_multigraded(&[2, 2]).unwrap();
        let m = MonomialModule::new(
            &ring,
            vec![Multidegree::new(vec![1, 0]), Multidegree::zero(2)],
            vec![MonomialIdeal::zero(&ring), MonomialIdeal::zero(&ring)],
        )
        .unwrap();
        let ctl = FitControl::default();
        let outcome = check_thm_3_1(&m, &ctl);
        assert!(outcome.status.is_pass(), "{:?}", outcome.status);
        assert_eq!(outcome.left["values"], outcome.right["values"]);

        // The free module itself passes trivially.
        let outcome = check_thm_3_1(&MonomialModule::free(&ring, 1), &ctl);
        assert!(outcome.status.is_pass());
    }

    #[test]
    fn torsion_module_is_not_applicable() {
        let ring = GradedRing::standard(2);
        let torsion = MonomialModule::quotient(
            &ring,
            MonomialIdeal::new(&ring, vec![Monomial::new(vec![1, 0])]),
        )
        .unwrap();
        let outcome = check_thm_3_1(&torsion, &FitControl::default());
        assert!(matches!(outcome.status, CheckStatus::NotApplicable(_)));
    }

    #[test]
    fn mixed_rank_module_with_torsion_summand_passes() {
        // M = S + S/(x1 x2): the torsion part has lower-dimensional
        // support and leaves the leading form untouched.
        let ring = GradedRing::standard(2);
        let m = MonomialModule::free(&ring, 1)
            .direct_sum(
                &MonomialModule::quotient(
                    &ring,
                    MonomialIdeal::new(&ring, vec![Monomial::new(vec![1, 1])]),
                )
                .unwrap(),
            )
            .unwrap();
        let outcome = check_thm_3_1(&m, &FitControl::default());
        assert!(outcome.status.is_pass(), "{:?}", outcome.status);
    }
}
