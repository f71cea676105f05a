//! Integer sequence families: exact tables plus modular fast paths.
//!
//! Exact recurrences:
//! - Motzkin: (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2} (division exact);
//! - Catalan: C_n = C_{n-1} (4n-2)/(n+1) (division exact);
//! - Euler up/down: boustrophedon (Seidel–Entringer) triangle;
//! - Springer (1/(cos x - sin x)): the EGF-reciprocal convolution
//!   S_n = sum_{j>=1} C(n,j) (-d_j) S_{n-j} where d is the coefficient
//!   pattern of cos - sin (division-free, unlike the series quotient);
//! - complementary Bell (e^{1-e^x}): c_{n+1} = -sum_j C(n,j) c_j;
//! - tangent: the in-place tangent-number triangle;
//! - reduced tangent: T_n / 2^{n-1}, with a hard integrality assertion — a
//!   non-exact division means the generator itself is wrong, so it aborts
//!   loudly rather than return a truncated value.
//!
//! The modular paths run the same recurrences in u64 arithmetic. The two
//! families that divide (Motzkin, Catalan) use a modular inverse when the
//! step factor is invertible and otherwise fall back to the exact memoized
//! table for that entry; the division-free families never need the fallback.

use crate::primality::{mod_inverse, mod_pow, mul_mod};
use crate::rational::BigInt;
use crate::residue::bigint_mod;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IntegerFamily {
    Motzkin,
    Catalan,
    EulerUpdown,
    SpringerA001586,
    ComplementaryBell,
    Tangent,
    ReducedTangent,
}

impl IntegerFamily {
    pub fn as_family(self) -> super::Family {
        match self {
            IntegerFamily::Motzkin => super::Family::Motzkin,
            IntegerFamily::Catalan => super::Family::Catalan,
            IntegerFamily::EulerUpdown => super::Family::EulerUpdown,
            IntegerFamily::SpringerA001586 => super::Family::SpringerA001586,
            IntegerFamily::ComplementaryBell => super::Family::ComplementaryBell,
            IntegerFamily::Tangent => super::Family::Tangent,
            IntegerFamily::ReducedTangent => super::Family::ReducedTangent,
        }
    }

    pub const ALL: [IntegerFamily; 7] = [
        IntegerFamily::Motzkin,
        IntegerFamily::Catalan,
        IntegerFamily::EulerUpdown,
        IntegerFamily::SpringerA001586,
        IntegerFamily::ComplementaryBell,
        IntegerFamily::Tangent,
        IntegerFamily::ReducedTangent,
    ];
}

type Tables = HashMap<IntegerFamily, Vec<BigInt>>;

/// Extend the exact table for `fam` so it covers index `n`.
pub(super) fn ensure_exact(tables: &mut Tables, fam: IntegerFamily, n: usize) {
    let want = (n + 1).max(tables.get(&fam).map_or(0, Vec::len) * 2).max(16);
    match fam {
        IntegerFamily::Motzkin => {
            let t = tables.entry(fam).or_default();
            if t.is_empty() {
                t.extend([BigInt::one(), BigInt::one()]);
            }
            for i in t.len()..want {
                let a = &t[i - 1] * BigInt::from(2 * i as u64 + 1);
                let b = &t[i - 2] * BigInt::from(3 * (i as u64 - 1));
                t.push((a + b) / BigInt::from(i as u64 + 2));
            }
        }
        IntegerFamily::Catalan => {
            let t = tables.entry(fam).or_default();
            if t.is_empty() {
                t.push(BigInt::one());
            }
            for i in t.len()..want {
                let c = &t[i - 1] * BigInt::from(4 * i as u64 - 2);
                t.push(c / BigInt::from(i as u64 + 1));
            }
        }
        IntegerFamily::EulerUpdown => {
            // Entringer triangle: E(0,0) = 1, E(n,0) = 0,
            // E(n,k) = E(n,k-1) + E(n-1,n-k); A(n) = E(n,n).
            let mut out = vec![BigInt::one()];
            let mut prev = vec![BigInt::one()];
            for n in 1..want {
                let mut row = vec![BigInt::zero(); n + 1];
                for k in 1..=n {
                    row[k] = &row[k - 1] + &prev[n - k];
                }
                out.push(row[n].clone());
                prev = row;
            }
            tables.insert(fam, out);
        }
        IntegerFamily::SpringerA001586 => {
            let t = tables.entry(fam).or_default();
            if t.is_empty() {
                t.push(BigInt::one());
            }
            for n in t.len()..want {
                let row = pascal_row(n);
                let mut acc = BigInt::zero();
                for j in 1..=n {
                    let term = &row[j] * &t[n - j];
                    if cos_minus_sin_negated_sign(j) {
                        acc -= term;
                    } else {
                        acc += term;
                    }
                }
                t.push(acc);
            }
        }
        IntegerFamily::ComplementaryBell => {
            let t = tables.entry(fam).or_default();
            if t.is_empty() {
                t.push(BigInt::one());
            }
            for n in t.len()..want {
                let row = pascal_row(n - 1);
                let mut acc = BigInt::zero();
                for j in 0..n {
                    acc += &row[j] * &t[j];
                }
                t.push(-acc);
            }
        }
        IntegerFamily::Tangent => {
            let k_max = want - 1;
            let mut t = super::rational_seq::tangent_numbers(k_max);
            t.truncate(want);
            tables.insert(fam, t);
        }
        IntegerFamily::ReducedTangent => {
            ensure_exact(tables, IntegerFamily::Tangent, want - 1);
            let tangent = tables[&IntegerFamily::Tangent].clone();
            let mut out = vec![BigInt::zero()];
            for (n, t) in tangent.iter().enumerate().skip(1).take(want - 1) {
                let shift = n as u64 - 1;
                let tz = t.trailing_zeros().unwrap_or(0);
                assert!(
                    tz >= shift,
                    "internal consistency failure: tangent number T_{n} = {t} is not \
                     divisible by 2^{shift}; the reduced tangent definition does not hold"
                );
                out.push(t >> shift);
            }
            tables.insert(fam, out);
        }
    }
}

/// +1/-1 pattern of -(cos x - sin x) EGF coefficients for j >= 1:
/// d_j cycles (-1, -1, +1, +1), so -d_j cycles (+1, +1, -1, -1).
/// Returns true when the term enters negated.
fn cos_minus_sin_negated_sign(j: usize) -> bool {
    matches!(j % 4, 3 | 0)
}

fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); n + 1];
    for j in 1..=n {
        row[j] = &row[j - 1] * BigInt::from((n - j + 1) as u64) / BigInt::from(j as u64);
    }
    row
}

/// In-place additive Pascal step: turns row n-1 into row n (no divisions,
/// valid for any modulus).
fn pascal_row_mod_step(row: &mut Vec<u64>, m: u64) {
    row.push(0);
    for j in (1..row.len()).rev() {
        row[j] = (row[j] + row[j - 1]) % m;
    }
}

/// `fam(0..=n) mod m` in one pass, falling back to the exact table where a
/// modular step is impossible.
pub(super) fn modular_prefix(tables: &mut Tables, fam: IntegerFamily, n: usize, m: u64) -> Vec<u64> {
    let len = n + 1;
    match fam {
        IntegerFamily::Motzkin => {
            let mut t = vec![0u64; len];
            t[0] = 1 % m;
            if n >= 1 {
                t[1] = 1 % m;
            }
            for i in 2..len {
                match mod_inverse((i as u64 + 2) % m, m) {
                    Some(inv) => {
                        let a = mul_mod((2 * i as u64 + 1) % m, t[i - 1], m);
                        let b = mul_mod((3 * (i as u64 - 1)) % m, t[i - 2], m);
                        t[i] = mul_mod((a + b) % m, inv, m);
                    }
                    None => {
                        ensure_exact_at_least(tables, fam, i);
                        t[i] = bigint_mod(&tables[&fam][i], m);
                    }
                }
            }
            t
        }
        IntegerFamily::Catalan => {
            let mut t = vec![0u64; len];
            t[0] = 1 % m;
            for i in 1..len {
                match mod_inverse((i as u64 + 1) % m, m) {
                    Some(inv) => {
                        let a = mul_mod((4 * i as u64 - 2) % m, t[i - 1], m);
                        t[i] = mul_mod(a, inv, m);
                    }
                    None => {
                        ensure_exact_at_least(tables, fam, i);
                        t[i] = bigint_mod(&tables[&fam][i], m);
                    }
                }
            }
            t
        }
        IntegerFamily::EulerUpdown => {
            let mut out = vec![1 % m; len];
            let mut prev = vec![1 % m];
            for i in 1..len {
                let mut row = vec![0u64; i + 1];
                for k in 1..=i {
                    row[k] = (row[k - 1] + prev[i - k]) % m;
                }
                out[i] = row[i];
                prev = row;
            }
            out
        }
        IntegerFamily::SpringerA001586 => {
            let mut t = vec![0u64; len];
            t[0] = 1 % m;
            let mut row = vec![1 % m]; // Pascal row 0
            for i in 1..len {
                pascal_row_mod_step(&mut row, m);
                let mut acc = 0u64;
                for j in 1..=i {
                    let term = mul_mod(row[j], t[i - j], m);
                    acc = if cos_minus_sin_negated_sign(j) {
                        (acc + m - term) % m
                    } else {
                        (acc + term) % m
                    };
                }
                t[i] = acc;
            }
            t
        }
        IntegerFamily::ComplementaryBell => {
            let mut t = vec![0u64; len];
            t[0] = 1 % m;
            let mut row = vec![1 % m]; // Pascal row 0 = row for i = 1
            for i in 1..len {
                let mut acc = 0u64;
                for j in 0..i {
                    acc = (acc + mul_mod(row[j], t[j], m)) % m;
                }
                t[i] = (m - acc) % m;
                pascal_row_mod_step(&mut row, m);
            }
            t
        }
        IntegerFamily::Tangent => tangent_mod_prefix(n, m),
        IntegerFamily::ReducedTangent => {
            let tangent = tangent_mod_prefix(n, m);
            let mut out = vec![0u64; len];
            if m % 2 == 1 {
                // 2 is invertible; divide by 2^{i-1} modularly.
                let inv2 = mod_inverse(2 % m, m).expect("odd modulus");
                for i in 1..len {
                    out[i] = mul_mod(tangent[i], mod_pow(inv2, i as u64 - 1, m), m);
                }
            } else {
                // even modulus: the 2-power division is not a modular
                // operation; use the exact table.
                ensure_exact_at_least(tables, fam, n);
                let exact = &tables[&fam];
                for (i, slot) in out.iter_mut().enumerate().skip(1) {
                    *slot = bigint_mod(&exact[i], m);
                }
            }
            out
        }
    }
}

fn ensure_exact_at_least(tables: &mut Tables, fam: IntegerFamily, n: usize) {
    if tables.get(&fam).map_or(0, Vec::len) <= n {
        ensure_exact(tables, fam, n);
    }
}

fn tangent_mod_prefix(n: usize, m: u64) -> Vec<u64> {
    let k_max = n;
    let mut t = vec![0u64; k_max + 1];
    if k_max >= 1 {
        t[1] = 1 % m;
    }
    for k in 2..=k_max {
        t[k] = mul_mod(t[k - 1], (k as u64 - 1) % m, m);
    }
    for k in 2..=k_max {
        for j in k..=k_max {
            let a = mul_mod(t[j - 1], ((j - k) as u64) % m, m);
            let b = mul_mod(t[j], ((j - k + 2) as u64) % m, m);
            t[j] = (a + b) % m;
        }
    }
    t
}

/// Brute-force oracles used by the unit tests: direct enumeration, entirely
/// independent of the recurrences above.
#[cfg(test)]
mod enumeration {
    /// Count Motzkin paths of length n (steps +1/0/-1, never below 0, end at 0).
    pub fn motzkin_paths(n: usize) -> u64 {
        fn walk(remaining: usize, height: i64) -> u64 {
            if remaining == 0 {
                return u64::from(height == 0);
            }
            let mut acc = walk(remaining - 1, height) // flat
                + walk(remaining - 1, height + 1); // up
            if height > 0 {
                acc += walk(remaining - 1, height - 1); // down
            }
            acc
        }
        walk(n, 0)
    }

    /// Count Dyck paths with n up-steps (ballot sequences).
    pub fn dyck_paths(n: usize) -> u64 {
        fn walk(ups: usize, downs: usize) -> u64 {
            if ups == 0 && downs == 0 {
                return 1;
            }
            let mut acc = 0;
            if ups > 0 {
                acc += walk(ups - 1, downs);
            }
            if downs > ups {
                acc += walk(ups, downs - 1);
            }
            acc
        }
        walk(n, n)
    }

    /// Count up/down alternating permutations of {1..n}: a1 < a2 > a3 < ...
    pub fn updown_permutations(n: usize) -> u64 {
        fn extend(perm: &mut Vec<usize>, used: &mut Vec<bool>, n: usize) -> u64 {
            let k = perm.len();
            if k == n {
                return 1;
            }
            let mut acc = 0;
            for v in 0..n {
                if used[v] {
                    continue;
                }
                let ok = if k == 0 {
                    true
                } else if k % 2 == 1 {
                    v > perm[k - 1] // positions 1, 3, ... rise
                } else {
                    v < perm[k - 1] // positions 2, 4, ... fall
                };
                if ok {
                    used[v] = true;
                    perm.push(v);
                    acc += extend(perm, used, n);
                    perm.pop();
                    used[v] = false;
                }
            }
            acc
        }
        if n == 0 {
            return 1;
        }
        extend(&mut Vec::new(), &mut vec![false; n], n)
    }
}
