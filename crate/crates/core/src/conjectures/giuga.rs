//! Giuga-number search and the mod-4 divisor structure probe.
//!
//! A Giuga number is a composite n such that every prime divisor P of n
//! satisfies P | (n/P - 1). The condition itself forces n squarefree: if
//! P^2 | n then n/P ≡ 0 (mod P) and n/P - 1 ≡ -1 cannot be divisible by P.
//! The search is deliberately brute force over a smallest-prime-factor sieve;
//! discovering new Giuga numbers beyond that is out of scope.

use super::{params, CheckError, CheckRecord, CongruenceSide, ConjectureId, StructureCheck};
use crate::primality::spf_sieve;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GiugaWitness {
    pub n: u64,
    /// (prime, multiplicity) pairs; multiplicity is always 1 for a true
    /// witness (see module docs).
    pub prime_divisors: Vec<(u64, u32)>,
    pub is_giuga: bool,
    /// Per odd prime divisor P: (P, P mod 4, ((n/P - 1)/P) mod 4).
    pub mod4_classes: Vec<(u64, u64, u64)>,
}

impl GiugaWitness {
    /// Build the witness for an arbitrary n (used both by the search and by
    /// the re-verification invariant).
    pub fn inspect(n: u64) -> GiugaWitness {
        let factors = crate::primality::factorize(n);
        let squarefree = factors.iter().all(|&(_, e)| e == 1);
        let composite = factors.len() > 1 || factors.iter().any(|&(_, e)| e > 1);
        let divisor_condition = factors
            .iter()
            .all(|&(p, _)| (n / p).wrapping_sub(1) % p == 0);
        let is_giuga = composite && squarefree && divisor_condition;
        let mod4_classes = factors
            .iter()
            .filter(|&&(p, _)| p % 2 == 1)
            .map(|&(p, _)| (p, p % 4, ((n / p - 1) / p) % 4))
            .collect();
        GiugaWitness {
            n,
            prime_divisors: factors,
            is_giuga,
            mod4_classes,
        }
    }
}

/// All Giuga numbers up to `bound`, ascending.
pub fn giuga_search(bound: u64) -> Vec<GiugaWitness> {
    let spf = spf_sieve(bound as usize);
    let mut out = Vec::new();
    'next: for n in 4..=bound {
        if spf[n as usize] as u64 == n {
            continue; // prime
        }
        // factor via the sieve, rejecting non-squarefree n early
        let mut rest = n;
        let mut primes = Vec::new();
        while rest > 1 {
            let p = spf[rest as usize] as u64;
            rest /= p;
            if rest % p == 0 {
                continue 'next;
            }
            primes.push(p);
        }
        if primes.iter().any(|&p| (n / p - 1) % p != 0) {
            continue;
        }
        out.push(GiugaWitness::inspect(n));
    }
    out
}

/// The mod-4 structure observed on the known Giuga numbers:
/// (a) among the two largest prime divisors exactly one is ≡ 1 (mod 4) and
///     every other odd prime divisor is ≡ 3 (mod 4);
/// (b) each odd prime divisor P has (n/P - 1)/P in the same mod-4 class as P.
///
/// Only odd P enters (b); the statement says nothing about the divisor 2.
pub fn check_s9_mod4(witness: &GiugaWitness) -> Result<CheckRecord, CheckError> {
    if !witness.is_giuga {
        return Err(CheckError::NotGiuga(witness.n));
    }
    let mut primes: Vec<u64> = witness.prime_divisors.iter().map(|&(p, _)| p).collect();
    primes.sort_unstable();
    let two_largest = &primes[primes.len().saturating_sub(2)..];
    let ones_among_largest = two_largest.iter().filter(|&&p| p % 4 == 1).count();
    let others_are_three = primes
        .iter()
        .filter(|&&p| p % 2 == 1 && !two_largest.contains(&p))
        .all(|&p| p % 4 == 3);
    let property_a = ones_among_largest == 1 && others_are_three;
    let property_b = witness
        .mod4_classes
        .iter()
        .all(|&(_, p_class, q_class)| p_class == q_class);

    let detail = format!(
        "two largest {:?}: {} of them ≡ 1 (mod 4); classes {:?}",
        two_largest, ones_among_largest, witness.mod4_classes
    );
    Ok(CheckRecord::new(
        ConjectureId::S9GiugaMod4,
        params([("n", witness.n as i64)]),
        CongruenceSide::Structure(StructureCheck {
            holds: property_a && property_b,
            detail,
        }),
        true,
    )
    .with_witness(
        "prime_divisors",
        format!("{:?}", witness.prime_divisors),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_are_empty() {
        assert!(giuga_search(10).is_empty());
        assert!(giuga_search(29).is_empty());
    }

    #[test]
    fn thirty_is_the_first_giuga_number() {
        let found = giuga_search(100);
        assert_eq!(found.len(), 1);
        let w = &found[0];
        assert_eq!(w.n, 30);
        assert_eq!(w.prime_divisors, vec![(2, 1), (3, 1), (5, 1)]);
        assert!(w.is_giuga);
        // n = 30, P = 5: (30/5 - 1)/5 = 1 ≡ 1 and 5 ≡ 1 (mod 4)
        assert!(w.mod4_classes.contains(&(5, 1, 1)));
        // n = 30, P = 3: (10 - 1)/3 = 3 ≡ 3 and 3 ≡ 3 (mod 4)
        assert!(w.mod4_classes.contains(&(3, 3, 3)));
    }

    #[test]
    fn mod4_rejects_non_giuga() {
        let w = GiugaWitness::inspect(12);
        assert!(!w.is_giuga);
        assert_eq!(check_s9_mod4(&w), Err(CheckError::NotGiuga(12)));
    }

    #[test]
    fn witnesses_reverify_under_inspect() {
        for w in giuga_search(2000) {
            let again = GiugaWitness::inspect(w.n);
            assert_eq!(w, again);
            assert!(again.is_giuga);
        }
    }
}
