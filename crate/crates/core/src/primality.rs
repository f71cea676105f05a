//! Deterministic primality and small-number machinery.
//!
//! Primality answers sit on the ground-truth side of every biconditional the
//! crate checks, so only deterministic methods are used — trial division here,
//! never a probabilistic test.

use crate::rational::BigInt;
use num_traits::One;

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

pub fn is_power_of_two(n: u64) -> bool {
    n >= 1 && n & (n - 1) == 0
}

pub fn is_prime_or_prime_square(n: u64) -> bool {
    if is_prime(n) {
        return true;
    }
    let r = n.isqrt();
    r * r == n && is_prime(r)
}

/// Index of an odd prime among the odd primes: 3 -> 1, 5 -> 2, 7 -> 3, ...
/// `None` when `p` is not an odd prime.
pub fn odd_prime_index(p: u64) -> Option<u64> {
    if p < 3 || !is_prime(p) {
        return None;
    }
    Some((3..=p).step_by(2).filter(|&q| is_prime(q)).count() as u64)
}

/// Smallest-prime-factor table for 0..=bound.
pub fn spf_sieve(bound: usize) -> Vec<u32> {
    let mut spf: Vec<u32> = (0..=bound as u32).collect();
    let mut i = 2usize;
    while i * i <= bound {
        if spf[i] == i as u32 {
            let mut j = i * i;
            while j <= bound {
                if spf[j] == j as u32 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
        i += 1;
    }
    spf
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d = 5u64;
    while d * d <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse for any modulus via extended Euclid; `None` when
/// `gcd(a, m) != 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r.abs() != 1 {
        return None;
    }
    // old_r may be -1 when the loop exits with a negative leading remainder.
    let inv = old_s * old_r.signum();
    Some(inv.rem_euclid(m as i128) as u64)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
