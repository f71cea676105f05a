//! Congruence calculus for exact rationals modulo an integer.
//!
//! A rational x is congruent to a modulo m when x - a = m * (u/v) with
//! gcd(v, m) = 1; equivalently, when the reduced denominator of x is
//! invertible mod m and numerator * denominator^{-1} ≡ a. When the reduced
//! denominator shares a factor with the modulus neither characterization
//! applies and the verdict is UNDEFINED — deliberately a third value rather
//! than an error, because sweeps over composite moduli hit this constantly
//! and the biconditionals under test must count it as "congruence does not
//! hold" without aborting. UNDEFINED verdicts are tallied separately in
//! reports so the policy stays auditable.

use crate::primality::mod_inverse;
use crate::rational::{BigInt, Rational};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResidueError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("divisor must be at least 2, got {0}")]
    DivisorTooSmall(String),
    #[error("exponent must be at least 1")]
    ExponentTooSmall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResidueStatus {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FAILS")]
    Fails,
    #[serde(rename = "UNDEFINED")]
    Undefined,
}

/// Three-valued outcome of a congruence test.
///
/// The residue is present exactly when the status is not UNDEFINED, and is
/// canonical in `[0, m)`; reports render `m - 1` with a `≡ -1` annotation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueVerdict {
    pub status: ResidueStatus,
    pub residue: Option<u64>,
    pub modulus: u64,
}

impl ResidueVerdict {
    pub fn holds(&self) -> bool {
        self.status == ResidueStatus::Holds
    }

    pub fn undefined(&self) -> bool {
        self.status == ResidueStatus::Undefined
    }

    /// `4 (≡ -1 mod 5)` style rendering.
    pub fn render(&self) -> String {
        match self.residue {
            None => format!("UNDEFINED (mod {})", self.modulus),
            Some(r) if r == self.modulus - 1 => {
                format!("{} (≡ -1 mod {})", r, self.modulus)
            }
            Some(r) => format!("{} (mod {})", r, self.modulus),
        }
    }
}

fn check_modulus(m: u64) -> Result<(), ResidueError> {
    if m < 2 {
        return Err(ResidueError::ModulusTooSmall(m));
    }
    Ok(())
}

/// Canonical residue of a big integer in `[0, m)`.
pub fn bigint_mod(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m)).to_u64().expect("mod_floor < m")
}

/// Residue of `x` modulo `m`, when defined.
///
/// The status is `Holds` when the residue exists (read: "x has a well-defined
/// residue"), `Undefined` when the reduced denominator shares a factor with
/// the modulus. [`congruent`] refines `Holds` into `Holds`/`Fails` by
/// comparing against a target.
pub fn rational_mod(x: &Rational, m: u64) -> Result<ResidueVerdict, ResidueError> {
    check_modulus(m)?;
    let den = bigint_mod(x.denom(), m);
    let verdict = match mod_inverse(den, m) {
        None => ResidueVerdict {
            status: ResidueStatus::Undefined,
            residue: None,
            modulus: m,
        },
        Some(inv) => {
            let num = bigint_mod(x.numer(), m);
            ResidueVerdict {
                status: ResidueStatus::Holds,
                residue: Some(crate::primality::mul_mod(num, inv, m)),
                modulus: m,
            }
        }
    };
    Ok(verdict)
}

/// HOLDS iff the residue of `x` is defined and equals `target mod m`;
/// FAILS when defined and unequal; UNDEFINED propagates.
pub fn congruent(x: &Rational, target: i64, m: u64) -> Result<ResidueVerdict, ResidueError> {
    check_modulus(m)?;
    let want = (target.rem_euclid(m as i64)) as u64;
    let mut v = rational_mod(x, m)?;
    if let Some(r) = v.residue {
        v.status = if r == want {
            ResidueStatus::Holds
        } else {
            ResidueStatus::Fails
        };
    }
    Ok(v)
}

/// Integer-to-integer congruence `x ≡ target (mod m)`, always defined.
/// The verdict's residue is the canonical residue of `x`.
pub fn congruent_bigint(x: &BigInt, target: &BigInt, m: u64) -> Result<ResidueVerdict, ResidueError> {
    check_modulus(m)?;
    let r = bigint_mod(x, m);
    let want = bigint_mod(target, m);
    Ok(ResidueVerdict {
        status: if r == want {
            ResidueStatus::Holds
        } else {
            ResidueStatus::Fails
        },
        residue: Some(r),
        modulus: m,
    })
}

/// Does `d^e` divide `|n|`? Does `d^{e+1}`?
pub fn divides_exactly(d: &BigInt, n: &BigInt, e: u32) -> Result<(bool, bool), ResidueError> {
    if d < &BigInt::from(2) {
        return Err(ResidueError::DivisorTooSmall(d.to_string()));
    }
    if e < 1 {
        return Err(ResidueError::ExponentTooSmall);
    }
    let n = n.abs();
    let de = d.pow(e);
    let divides_e = (&n % &de).is_zero();
    let divides_e1 = divides_e && (&n % (de * d)).is_zero();
    Ok((divides_e, divides_e1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn two_thirds_mod_five_is_minus_one() {
        // 5 * S_5 = 5 * 2/15 = 2/3 and 2/3 ≡ -1 (mod 5)
        let v = rational_mod(&ratio(2, 3), 5).unwrap();
        assert_eq!(v.residue, Some(4));
        assert_eq!(v.render(), "4 (≡ -1 mod 5)");
    }

    #[test]
    fn half_mod_two_is_undefined() {
        let v = rational_mod(&ratio(1, 2), 2).unwrap();
        assert_eq!(v.status, ResidueStatus::Undefined);
        assert_eq!(v.residue, None);
        assert!(!v.holds());
    }

    #[test]
    fn modulus_below_two_rejected() {
        assert_eq!(
            rational_mod(&int(1), 1),
            Err(ResidueError::ModulusTooSmall(1))
        );
        assert_eq!(congruent(&int(1), 0, 0), Err(ResidueError::ModulusTooSmall(0)));
    }

    #[test]
    fn congruent_zero_and_shifts() {
        let v = congruent(&int(0), 0, 7).unwrap();
        assert!(v.holds());
        assert_eq!(v.residue, Some(0));
        // congruent(x, a, m) is invariant under x -> x + m t
        let x = ratio(22, 7);
        for t in [-3i64, 0, 5] {
            let shifted = &x + int(11 * t);
            assert_eq!(
                congruent(&x, 3, 11).unwrap().status,
                congruent(&shifted, 3, 11).unwrap().status
            );
        }
    }

    #[test]
    fn nine_b8_fails_with_residue_six() {
        // B_8 = -1/30, 9*B_8 = -3/10, and -3/10 ≡ 6 (mod 9), not -1.
        let x = int(9) * ratio(-1, 30);
        let v = congruent(&x, -1, 9).unwrap();
        assert_eq!(v.status, ResidueStatus::Fails);
        assert_eq!(v.residue, Some(6));
    }

    #[test]
    fn integer_congruence_matches_plain_remainder() {
        for n in -50i64..50 {
            for m in 2u64..12 {
                let v = rational_mod(&int(n), m).unwrap();
                assert_eq!(v.residue, Some(n.rem_euclid(m as i64) as u64));
            }
        }
    }

    #[test]
    fn divisibility_probe() {
        let (e, e1) = divides_exactly(&BigInt::from(7), &BigInt::from(36799), 2).unwrap();
        assert!(e && !e1); // 36799 = 7^2 * 751
        let (e, e1) = divides_exactly(&BigInt::from(7), &BigInt::from(57281), 3).unwrap();
        assert!(e && !e1); // 57281 = 7^3 * 167
        let (e, e1) = divides_exactly(&BigInt::from(3), &BigInt::from(9), 2).unwrap();
        assert!(e && !e1);
        let (e, e1) = divides_exactly(&BigInt::from(2), &BigInt::from(-48), 3).unwrap();
        assert!(e && e1); // sign is ignored
        assert!(divides_exactly(&BigInt::from(1), &BigInt::from(5), 1).is_err());
        assert!(divides_exactly(&BigInt::from(3), &BigInt::from(5), 0).is_err());
    }
}
