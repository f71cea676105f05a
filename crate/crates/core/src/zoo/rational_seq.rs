//! Table builders for the rational-valued families.
//!
//! Each builder computes a full coefficient prefix in one pass. The Bernoulli
//! table goes through integer tangent numbers rather than rational series
//! division — sweeps need indices in the several hundreds, where the
//! integer-only recurrence is orders of magnitude faster; the test suite pins
//! this route against both the defining series quotient and an
//! Akiyama–Tanigawa recurrence.

use crate::rational::{big, ratio, BigInt, Rational};
use crate::series::{PowerSeries, SeriesKind};
use num_traits::{One, Zero};

/// Tangent numbers T_1..T_k (tan x = sum T_n x^{2n-1}/(2n-1)!), computed by
/// the in-place triangle with small-integer multipliers.
pub(crate) fn tangent_numbers(k_max: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); k_max + 1];
    if k_max >= 1 {
        t[1] = BigInt::one();
    }
    for k in 2..=k_max {
        t[k] = &t[k - 1] * BigInt::from((k - 1) as u64);
    }
    for k in 2..=k_max {
        for j in k..=k_max {
            let a = &t[j - 1] * BigInt::from((j - k) as u64);
            let b = &t[j] * BigInt::from((j - k + 2) as u64);
            t[j] = a + b;
        }
    }
    t
}

/// B_0..B_order in the B_1 = +1/2 convention.
///
/// B_{2k} = (-1)^{k-1} * 2k * T_k / (4^k (4^k - 1)); odd indices above 1 are
/// zero.
pub(crate) fn bernoulli_table(order: usize) -> Vec<Rational> {
    let k_max = order / 2;
    let tangent = tangent_numbers(k_max);
    let mut out = vec![Rational::zero(); order + 1];
    out[0] = Rational::one();
    if order >= 1 {
        out[1] = ratio(1, 2);
    }
    for k in 1..=k_max {
        let four_k = BigInt::from(4u64).pow(k as u32);
        let den = &four_k * (&four_k - BigInt::one());
        let num = &tangent[k] * BigInt::from(2 * k as u64);
        let signed = if k % 2 == 1 { num } else { -num };
        out[2 * k] = Rational::new(signed, den);
    }
    out
}

/// a_0..a_order: EGF coefficients of t/ln(1+t).
///
/// The quotient runs in stored-EGF space: the stored divisor coefficient for
/// ln(1+t)/t is (-1)^k k!/(k+1), and the stored quotient values are the a_n
/// themselves, whose denominators stay small — far cheaper than dividing the
/// raw Taylor coefficients.
pub(crate) fn cauchy_table(order: usize) -> Vec<Rational> {
    let den: Vec<Rational> = (0..=order)
        .map(|k| {
            let num = big(factorial_signed(k));
            num / ratio(k as i64 + 1, 1)
        })
        .collect();
    let den = PowerSeries::new(SeriesKind::Egf, den).expect("nonempty");
    PowerSeries::one(SeriesKind::Egf, order)
        .div(&den)
        .expect("constant term 1")
        .into_coeffs()
}

/// Nörlund numbers: EGF coefficients of t/((1+t) ln(1+t)). The stored
/// divisor coefficient of (1+t) ln(1+t)/t is (-1)^{k+1} k!/(k(k+1)).
pub(crate) fn norlund_table(order: usize) -> Vec<Rational> {
    let mut den = vec![Rational::one()];
    for k in 1..=order {
        let num = -factorial_signed(k);
        den.push(Rational::new(num, BigInt::from((k * (k + 1)) as u64)));
    }
    let den = PowerSeries::new(SeriesKind::Egf, den).expect("nonempty");
    PowerSeries::one(SeriesKind::Egf, order)
        .div(&den)
        .expect("constant term 1")
        .into_coeffs()
}

/// (-1)^k k!
fn factorial_signed(k: usize) -> BigInt {
    let f = crate::rational::factorial(k);
    if k % 2 == 0 {
        f
    } else {
        -f
    }
}

/// S_0..S_order: Taylor coefficients of tanh(z) + sech(z).
///
/// tanh and sech are divided in EGF space, where sinh and cosh have stored
/// coefficients 0/1 and the intermediate quotients are the integer tangent
/// and secant numbers; the final retag divides by n! once per entry.
pub(crate) fn sech_tanh_table(order: usize) -> Vec<Rational> {
    let parity = |odd: bool| {
        let coeffs = (0..=order)
            .map(|n| {
                if (n % 2 == 1) == odd {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        PowerSeries::new(SeriesKind::Egf, coeffs).expect("nonempty")
    };
    let sinh = parity(true);
    let cosh = parity(false);
    let tanh = sinh.div(&cosh).expect("constant term 1");
    let sech = PowerSeries::one(SeriesKind::Egf, order)
        .div(&cosh)
        .expect("constant term 1");
    tanh.add(&sech)
        .expect("same kind")
        .to_kind(SeriesKind::Ogf)
        .into_coeffs()
}

/// EGF coefficients of Li_k(z)/z at z = 1 - e^{-x}, i.e. the poly-Bernoulli
/// numbers B_n^{(k)}.
///
/// Computed by unrolling the polylog composition one order at a time through
/// F_1 = x, F_k' = F_{k-1} * e^{-x}/(1 - e^{-x}) (where F_k = Li_k(1-e^{-x})),
/// which needs O(k n^2) coefficient operations instead of the O(n^3) of a
/// Horner composition. Everything stays in stored-EGF space, where
/// 1 - e^{-x} has coefficients 0, ±1 and x e^{-x}/(1-e^{-x}) has the
/// small-denominator Bernoulli values. Unit tests pin the result against the
/// literal composition and against the Stirling-number closed form.
pub(crate) fn poly_bernoulli_table(k: u32, order: usize) -> Vec<Rational> {
    let m = order + 1; // internal working order

    // stored EGF of (1 - e^{-x})/x: (-1)^n / (n+1)
    let ws: Vec<Rational> = (0..=m)
        .map(|n| ratio(if n % 2 == 0 { 1 } else { -1 }, n as i64 + 1))
        .collect();
    let ws = PowerSeries::new(SeriesKind::Egf, ws).expect("nonempty");
    // stored EGF of e^{-x}: (-1)^n
    let em: Vec<Rational> = (0..=m)
        .map(|n| ratio(if n % 2 == 0 { 1 } else { -1 }, 1))
        .collect();
    let em = PowerSeries::new(SeriesKind::Egf, em).expect("nonempty");
    // g = x e^{-x}/(1 - e^{-x}); stored coefficients are Bernoulli numbers
    // in the B_1 = -1/2 convention
    let g = em.div(&ws).expect("constant term 1");

    // F_1 = x; stored F_k[n] = (F_{k-1} * g)[n] / n for n >= 1.
    let mut f = PowerSeries::identity(SeriesKind::Egf, m);
    for _ in 1..k {
        let prod = f.mul(&g).expect("same kind");
        let mut next = vec![Rational::zero(); m + 1];
        for (n, slot) in next.iter_mut().enumerate().skip(1) {
            *slot = prod.coeff(n) / big(BigInt::from(n as u64));
        }
        f = PowerSeries::new(SeriesKind::Egf, next).expect("nonempty");
    }

    let fs = f.shift_down().expect("F_k has zero constant term"); // F_k / x
    fs.div(&ws).expect("constant term 1").into_coeffs()
}
