//! Brute-force oracles. Everything here works on raw, unminimalized
//! generator lists and full box enumeration, deliberately avoiding the
//! minimal-generator shortcuts of the main engine, so agreement between
//! the two paths is meaningful evidence of correctness.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::module::MonomialModule;
use crate::ring::{monomials_below_total_degree, monomials_of_total_degree, Monomial};

/// Hard ceiling on the finiteness-certificate search.
const CERTIFICATE_CAP: u32 = 64;

/// All pairwise products of two raw generator lists, deduplicated but not
/// minimalized.
pub fn raw_product(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = BTreeSet::new();
    for x in a {
        for y in b {
            out.insert(x.mul(y));
        }
    }
    out.into_iter().collect()
}

/// The k-th raw power of a generator list; `k = 0` gives `{1}`.
pub fn raw_power(gens: &[Monomial], k: u32, nvars: usize) -> Vec<Monomial> {
    let mut acc = vec![Monomial::one(nvars)];
    for _ in 0..k {
        acc = raw_product(&acc, gens);
    }
    acc
}

/// Raw product of powers `G_1^{e_1} ... G_r^{e_r}`.
pub fn raw_multipower(lists: &[Vec<Monomial>], exps: &[u32], nvars: usize) -> Vec<Monomial> {
    assert_eq!(lists.len(), exps.len(), "one exponent per generator list");
    let mut acc = vec![Monomial::one(nvars)];
    for (gens, &e) in lists.iter().zip(exps) {
        acc = raw_product(&acc, &raw_power(gens, e, nvars));
    }
    acc
}

/// Membership against a raw generator list: some generator divides `m`.
pub fn raw_contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Exact length of `(L1 + K) / (L2 + K)` by raw enumeration, where `L1`
/// and `L2` are given by raw generator lists with `L2 ⊆ L1` and `K` is the
/// relation data of an optional module context (the length is then summed
/// over the module's coordinates; without a module, the ambient ring is
/// the single coordinate).
///
/// Finiteness is certified before counting: the smallest `c` is found such
/// that every total-degree-`c` monomial times every `L1` generator lies in
/// `L2`; then every monomial of `L1 \ L2` has total degree below
/// `max deg(L1) + c`, which bounds the enumeration box. A caller-supplied
/// `bound` skips the certificate and counts inside `degree < bound`
/// directly.
pub fn brute_force_length(
    nvars: usize,
    l1: &[Monomial],
    l2: &[Monomial],
    module: Option<&MonomialModule>,
    bound: Option<u32>,
) -> Result<u64> {
    if let Some(m) = module {
        if m.ring().nvars() != nvars {
            return Err(Error::ArityMismatch { expected: nvars, found: m.ring().nvars() });
        }
    }
    for g in l2 {
        if !raw_contains(l1, g) {
            return Err(Error::InvalidInput(format!(
                "the denominator is not contained in the numerator: {g} generates outside L1"
            )));
        }
    }
    let degree_bound = match bound {
        Some(b) => b,
        None => {
            let max_l1 = l1.iter().map(Monomial::total_degree).max().unwrap_or(0);
            let certificate = (0..=CERTIFICATE_CAP).find(|&c| {
                monomials_of_total_degree(nvars, c)
                    .iter()
                    .all(|w| l1.iter().all(|g| raw_contains(l2, &w.mul(g))))
            });
            match certificate {
                Some(c) => max_l1 + c,
                None => {
                    return Err(Error::InfiniteLength(Some(format!(
                        "no degree certificate below {CERTIFICATE_CAP} bounds L1 \\ L2"
                    ))))
                }
            }
        }
    };
    let box_monomials = monomials_below_total_degree(nvars, degree_bound);
    let mut total = 0u64;
    let count_coordinate = |k: Option<&crate::ideal::MonomialIdeal>| -> u64 {
        box_monomials
            .iter()
            .filter(|mu| {
                raw_contains(l1, mu)
                    && !raw_contains(l2, mu)
                    && k.map_or(true, |k| !k.contains(mu))
            })
            .count() as u64
    };
    match module {
        None => total += count_coordinate(None),
        Some(m) => {
            for k in m.coordinate_ideals() {
                if k.is_unit() {
                    continue;
                }
                total += count_coordinate(if k.is_zero() { None } else { Some(k) });
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::mixed::IdealSystem;
    use crate::ring::GradedRing;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn raw_arithmetic_keeps_redundant_generators() {
        // (x, y)^2 from a redundant list: duplicates collapse, but no
        // divisibility pruning happens.
        let gens = vec![mono(&[1, 0]), mono(&[0, 1]), mono(&[1, 0])];
        let square = raw_power(&gens, 2, 2);
        assert_eq!(square, vec![mono(&[0, 2]), mono(&[1, 1]), mono(&[2, 0])]);
        let with_redundant = raw_product(&square, &[mono(&[0, 0]), mono(&[1, 0])]);
        // x^2, xy, y^2 survive alongside their x-multiples.
        assert_eq!(with_redundant.len(), 6);
        assert!(raw_contains(&with_redundant, &mono(&[2, 0])));
    }

    #[test]
    fn classic_power_quotient_lengths() {
        // len(m^2 / m^3) = 3 in k[x,y], fed raw generator lists.
        let m = vec![mono(&[1, 0]), mono(&[0, 1])];
        let l1 = raw_power(&m, 2, 2);
        let l2 = raw_power(&m, 3, 2);
        assert_eq!(brute_force_length(2, &l1, &l2, None, None).unwrap(), 3);
        // len(I/I) = 0.
        assert_eq!(brute_force_length(2, &l1, &l1, None, None).unwrap(), 0);
        // len(A/m^3) = 6 via the unit numerator.
        let unit = vec![mono(&[0, 0])];
        assert_eq!(brute_force_length(2, &unit, &l2, None, None).unwrap(), 6);
    }

    #[test]
    fn containment_violations_and_infinite_quotients_are_rejected() {
        let l1 = vec![mono(&[2, 0])];
        let l2 = vec![mono(&[0, 1])];
        assert!(matches!(
            brute_force_length(2, &l1, &l2, None, None),
            Err(Error::InvalidInput(_))
        ));
        // k[x,y]/(x) has infinite length.
        let unit = vec![mono(&[0, 0])];
        let x = vec![mono(&[1, 0])];
        assert!(matches!(
            brute_force_length(2, &unit, &x, None, None),
            Err(Error::InfiniteLength(_))
        ));
    }

    #[test]
    fn module_context_restricts_coordinates() {
        // len over N = A/(x) of m^2 N / m^3 N: only y^2 survives.
        let ring = GradedRing::standard(2);
        let n = MonomialModule::quotient(
            &ring,
            MonomialIdeal::new(&ring, vec![mono(&[1, 0])]),
        )
        .unwrap();
        let m = vec![mono(&[1, 0]), mono(&[0, 1])];
        let l1 = raw_power(&m, 2, 2);
        let l2 = raw_power(&m, 3, 2);
        assert_eq!(brute_force_length(2, &l1, &l2, Some(&n), None).unwrap(), 1);
        // An explicit bound gives the same count when it is honest.
        assert_eq!(brute_force_length(2, &l1, &l2, Some(&n), Some(5)).unwrap(), 1);
    }

    #[test]
    fn fiber_hilbert_agrees_with_raw_enumeration() {
        // Fully independent cross-check of the engine's layer lengths on
        // the staircase system J = (x,y), I = (x^2, y^3).
        let ring = GradedRing::standard(2);
        let j_raw = vec![mono(&[1, 0]), mono(&[0, 1])];
        let i_raw = vec![mono(&[2, 0]), mono(&[0, 3])];
        let sys = IdealSystem::new(
            &ring,
            MonomialIdeal::new(&ring, j_raw.clone()),
            vec![MonomialIdeal::new(&ring, i_raw.clone())],
            MonomialModule::free(&ring, 1),
        )
        .unwrap();
        for n0 in 0..=4u32 {
            for n1 in 0..=(4 - n0) {
                let l1 = raw_multipower(&[j_raw.clone(), i_raw.clone()], &[n0, n1], 2);
                let l2 = raw_product(&j_raw, &l1);
                assert_eq!(
                    brute_force_length(2, &l1, &l2, None, None).unwrap(),
                    sys.fiber_hilbert(n0, &[n1]).unwrap(),
                    "at ({n0}, {n1})"
                );
            }
        }
    }
}
