//! Dense truncated formal power series over exact rationals.
//!
//! A series stores `order + 1` coefficients. The `kind` tag records how a
//! stored coefficient is to be read: for [`SeriesKind::Ogf`] the coefficient
//! at index `n` is the plain Taylor coefficient `c_n`; for [`SeriesKind::Egf`]
//! it is `n! * c_n`, i.e. the series is `sum stored_n * x^n / n!`.
//!
//! All arithmetic is carried out exactly on the underlying Taylor
//! coefficients, so results are independent of tagging up to the exact
//! `n!` retag, and re-running any computation yields bit-identical fractions.
//! Binary operations require equal kinds and truncate to the shorter operand.
//!
//! Storage is dense on purpose: every consumer in this crate reads a full
//! coefficient prefix anyway, and truncation orders are supplied by the
//! caller per computation — nothing here silently extends a series.

use crate::rational::{factorial, int, ratio, Rational};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// Ordinary generating function: stored coefficient n is `c_n`.
    Ogf,
    /// Exponential generating function: stored coefficient n is `n! * c_n`.
    Egf,
}

impl std::fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SeriesKind::Ogf => "OGF",
            SeriesKind::Egf => "EGF",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series kind mismatch: {0} vs {1}")]
    KindMismatch(SeriesKind, SeriesKind),
    #[error("division by a series with zero constant term")]
    ZeroConstantDivisor,
    #[error("exp of a series with nonzero constant term")]
    NonzeroConstantExp,
    #[error("composition with an inner series whose constant term is nonzero")]
    NonzeroConstantInner,
    #[error("a series needs at least one coefficient")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    kind: SeriesKind,
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Wrap a coefficient list; `coeffs[n]` is read according to `kind`.
    pub fn new(kind: SeriesKind, coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(PowerSeries { kind, coeffs })
    }

    /// The zero series truncated at `order`.
    pub fn zero(kind: SeriesKind, order: usize) -> Self {
        PowerSeries {
            kind,
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(kind: SeriesKind, order: usize) -> Self {
        let mut s = Self::zero(kind, order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The identity series x (same stored form under either tag since 1! = 1).
    pub fn identity(kind: SeriesKind, order: usize) -> Self {
        let mut s = Self::zero(kind, order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    /// Truncation order: number of known coefficients minus one.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Plain Taylor coefficients, whatever the tag.
    pub fn raw(&self) -> Vec<Rational> {
        match self.kind {
            SeriesKind::Ogf => self.coeffs.clone(),
            SeriesKind::Egf => self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / Rational::from_integer(factorial(n)))
                .collect(),
        }
    }

    fn from_raw(kind: SeriesKind, raw: Vec<Rational>) -> Self {
        let coeffs = match kind {
            SeriesKind::Ogf => raw,
            SeriesKind::Egf => raw
                .into_iter()
                .enumerate()
                .map(|(n, c)| c * Rational::from_integer(factorial(n)))
                .collect(),
        };
        PowerSeries { kind, coeffs }
    }

    /// Exact retag. Converting OGF -> EGF multiplies coefficient n by n!,
    /// EGF -> OGF divides; the round trip is the identity.
    pub fn to_kind(&self, kind: SeriesKind) -> Self {
        if kind == self.kind {
            self.clone()
        } else {
            Self::from_raw(kind, self.raw())
        }
    }

    fn check_kinds(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.kind != rhs.kind {
            return Err(SeriesError::KindMismatch(self.kind, rhs.kind));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_kinds(rhs)?;
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
            .collect();
        Ok(PowerSeries {
            kind: self.kind,
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_kinds(rhs)?;
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
            .collect();
        Ok(PowerSeries {
            kind: self.kind,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        PowerSeries {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Exact product truncated to the shorter operand: a Cauchy convolution
    /// of Taylor coefficients for OGF operands, the equivalent binomial
    /// convolution of stored values for EGF operands (the stored EGF
    /// representation usually has far smaller denominators, so it pays to
    /// stay in it).
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_kinds(rhs)?;
        let order = self.order().min(rhs.order());
        match self.kind {
            SeriesKind::Ogf => Ok(Self::from_raw(
                self.kind,
                raw_mul(&self.coeffs, &rhs.coeffs, order),
            )),
            SeriesKind::Egf => Ok(PowerSeries {
                kind: self.kind,
                coeffs: stored_egf_mul(&self.coeffs, &rhs.coeffs, order),
            }),
        }
    }

    /// Quotient Q with `Q * rhs = self` up to the truncation order.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_kinds(rhs)?;
        if rhs.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantDivisor);
        }
        let order = self.order().min(rhs.order());
        match self.kind {
            SeriesKind::Ogf => Ok(Self::from_raw(
                self.kind,
                raw_div(&self.coeffs, &rhs.coeffs, order),
            )),
            SeriesKind::Egf => Ok(PowerSeries {
                kind: self.kind,
                coeffs: stored_egf_div(&self.coeffs, &rhs.coeffs, order),
            }),
        }
    }

    /// Functional composition `self(inner(x))`, truncated to the shorter
    /// order. Both operands are read as the functions they denote, so the
    /// tags need not match; the result carries the inner series' tag (its
    /// variable survives).
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantInner);
        }
        let order = self.order().min(inner.order());
        let a = self.raw();
        let b = inner.raw();
        // Horner on series: a_d, then repeatedly multiply by the inner series
        // and add the next lower coefficient.
        let mut acc = vec![Rational::zero(); order + 1];
        acc[0] = a[order].clone();
        for m in (0..order).rev() {
            acc = raw_mul(&acc, &b, order);
            acc[0] += &a[m];
        }
        Ok(Self::from_raw(inner.kind, acc))
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantExp);
        }
        let order = self.order();
        let a = self.raw();
        // E' = A' E, i.e. (n+1) e_{n+1} = sum_{k=0}^{n} (k+1) a_{k+1} e_{n-k}.
        let mut e = vec![Rational::zero(); order + 1];
        e[0] = Rational::one();
        for n in 0..order {
            let mut acc = Rational::zero();
            for k in 0..=n {
                if !a[k + 1].is_zero() {
                    acc += &a[k + 1] * int(k as i64 + 1) * &e[n - k];
                }
            }
            e[n + 1] = acc / int(n as i64 + 1);
        }
        Ok(Self::from_raw(self.kind, e))
    }

    /// Antiderivative with zero constant term; the last coefficient is
    /// dropped so the order is preserved.
    pub fn integrate(&self) -> Self {
        let order = self.order();
        let a = self.raw();
        let mut out = vec![Rational::zero(); order + 1];
        for n in 1..=order {
            out[n] = &a[n - 1] / int(n as i64);
        }
        Self::from_raw(self.kind, out)
    }

    /// Divide by x: requires a zero constant term, shortens the order by one.
    pub fn shift_down(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantInner);
        }
        let a = self.raw();
        Ok(Self::from_raw(self.kind, a[1..].to_vec()))
    }
}

fn raw_mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

fn raw_div(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let inv_b0 = int(1) / &b[0];
    let mut q = vec![Rational::zero(); order + 1];
    for n in 0..=order {
        let mut acc = a[n].clone();
        for k in 1..=n {
            if !b[k].is_zero() && !q[n - k].is_zero() {
                acc -= &b[k] * &q[n - k];
            }
        }
        q[n] = acc * &inv_b0;
    }
    q
}

/// In-place additive Pascal step: row n-1 becomes row n.
fn pascal_step(row: &mut Vec<num_bigint::BigInt>, ones: &num_bigint::BigInt) {
    row.push(ones.clone());
    for j in (1..row.len() - 1).rev() {
        let prev = row[j - 1].clone();
        row[j] += prev;
    }
}

/// gcd computed with one euclidean reduction first. The convolutions below
/// pair enormous numerators with small denominators, where the library's
/// binary gcd degrades to one bit per iteration; a single `%` collapses the
/// big side to the small side's size first.
fn gcd_mod_first(big: &num_bigint::BigInt, small: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_integer::Integer;
    use num_traits::Signed;
    if small.is_zero() {
        return big.abs();
    }
    small.gcd(&(big % small))
}

/// Exact accumulator over (numerator, denominator > 0) pairs, reduced after
/// every step via the mod-first gcd.
struct RatAccum {
    num: num_bigint::BigInt,
    den: num_bigint::BigInt,
}

impl RatAccum {
    fn from_rational(x: &Rational) -> Self {
        RatAccum {
            num: x.numer().clone(),
            den: x.denom().clone(),
        }
    }

    fn add_assign(&mut self, t_num: num_bigint::BigInt, t_den: &num_bigint::BigInt) {
        self.num = &self.num * t_den + t_num * &self.den;
        self.den *= t_den;
        self.reduce();
    }

    fn sub_assign(&mut self, t_num: num_bigint::BigInt, t_den: &num_bigint::BigInt) {
        self.num = &self.num * t_den - t_num * &self.den;
        self.den *= t_den;
        self.reduce();
    }

    fn reduce(&mut self) {
        use num_traits::One;
        let g = gcd_mod_first(&self.num, &self.den);
        if !g.is_one() && !g.is_zero() {
            self.num /= &g;
            self.den /= g;
        }
    }

    /// self * (num/den), then canonicalize into a Rational.
    fn into_rational_times(
        mut self,
        num: &num_bigint::BigInt,
        den: &num_bigint::BigInt,
    ) -> Rational {
        use num_traits::Signed;
        self.num *= den;
        self.den *= num;
        if self.den.is_negative() {
            self.num = -self.num;
            self.den = -self.den;
        }
        self.reduce();
        if self.num.is_zero() {
            return Rational::zero();
        }
        // reduced and positive-denominator by construction
        Rational::new_raw(self.num, self.den)
    }

    fn into_rational(self) -> Rational {
        let one = num_bigint::BigInt::from(1);
        self.into_rational_times(&one.clone(), &one)
    }
}

fn split_parts(xs: &[Rational]) -> (Vec<num_bigint::BigInt>, Vec<num_bigint::BigInt>) {
    xs.iter()
        .map(|x| (x.numer().clone(), x.denom().clone()))
        .unzip()
}

/// Binomial convolution of stored EGF values:
/// c_n = sum_k C(n,k) a_k b_{n-k}.
fn stored_egf_mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let one = num_bigint::BigInt::from(1);
    let (an, ad) = split_parts(a);
    let (bn, bd) = split_parts(b);
    let mut row = vec![one.clone()];
    let mut out = Vec::with_capacity(order + 1);
    out.push(&a[0] * &b[0]);
    for n in 1..=order {
        pascal_step(&mut row, &one);
        let mut acc = RatAccum {
            num: num_bigint::BigInt::ZERO,
            den: one.clone(),
        };
        for k in 0..=n {
            if !an[k].is_zero() && !bn[n - k].is_zero() {
                let t_num = &row[k] * &an[k] * &bn[n - k];
                let t_den = &ad[k] * &bd[n - k];
                acc.add_assign(t_num, &t_den);
            }
        }
        out.push(acc.into_rational());
    }
    out
}

/// Stored-EGF division: q_n = (a_n - sum_{k=1}^n C(n,k) b_k q_{n-k}) / b_0.
fn stored_egf_div(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let one = num_bigint::BigInt::from(1);
    let (bn, bd) = split_parts(b);
    let mut q = Vec::with_capacity(order + 1);
    q.push(&a[0] / &b[0]);
    let mut row = vec![one.clone()];
    for n in 1..=order {
        pascal_step(&mut row, &one);
        let mut acc = RatAccum::from_rational(&a[n]);
        for k in 1..=n {
            let qk = &q[n - k];
            if !bn[k].is_zero() && !qk.numer().is_zero() {
                let t_num = &row[k] * &bn[k] * qk.numer();
                let t_den = &bd[k] * qk.denom();
                acc.sub_assign(t_num, &t_den);
            }
        }
        q.push(acc.into_rational_times(&bd[0], &bn[0]));
    }
    q
}

// ---------------------------------------------------------------------------
// Named builders. All of them return OGF-tagged series (plain Taylor
// coefficients); retag with `to_kind(SeriesKind::Egf)` to read EGF
// coefficients.
// ---------------------------------------------------------------------------

/// e^x.
pub fn exp_series(order: usize) -> PowerSeries {
    let coeffs = (0..=order)
        .map(|n| Rational::new(1.into(), factorial(n)))
        .collect();
    PowerSeries {
        kind: SeriesKind::Ogf,
        coeffs,
    }
}

/// e^{-x}.
pub fn exp_neg_series(order: usize) -> PowerSeries {
    let coeffs = (0..=order)
        .map(|n| Rational::new(if n % 2 == 0 { 1 } else { -1 }.into(), factorial(n)))
        .collect();
    PowerSeries {
        kind: SeriesKind::Ogf,
        coeffs,
    }
}

/// ln(1+t) = t - t^2/2 + t^3/3 - ...
pub fn log1p_series(order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = ratio(if n % 2 == 1 { 1 } else { -1 }, n as i64);
    }
    PowerSeries {
        kind: SeriesKind::Ogf,
        coeffs,
    }
}

fn alternating_parity_series(order: usize, odd: bool) -> PowerSeries {
    // sum over n of matching parity: (-1)^(n/2 rounded down over pairs) x^n / n!
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate() {
        if (n % 2 == 1) == odd {
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            *c = Rational::new(sign.into(), factorial(n));
        }
    }
    PowerSeries {
        kind: SeriesKind::Ogf,
        coeffs,
    }
}

pub fn sin_series(order: usize) -> PowerSeries {
    alternating_parity_series(order, true)
}

pub fn cos_series(order: usize) -> PowerSeries {
    alternating_parity_series(order, false)
}

fn parity_series(order: usize, odd: bool) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (n, c) in coeffs.iter_mut().enumerate() {
        if (n % 2 == 1) == odd {
            *c = Rational::new(1.into(), factorial(n));
        }
    }
    PowerSeries {
        kind: SeriesKind::Ogf,
        coeffs,
    }
}

pub fn sinh_series(order: usize) -> PowerSeries {
    parity_series(order, true)
}

pub fn cosh_series(order: usize) -> PowerSeries {
    parity_series(order, false)
}

/// tanh = sinh / cosh.
pub fn tanh_series(order: usize) -> PowerSeries {
    sinh_series(order)
        .div(&cosh_series(order))
        .expect("cosh has constant term 1")
}

/// sech = 1 / cosh.
pub fn sech_series(order: usize) -> PowerSeries {
    PowerSeries::one(SeriesKind::Ogf, order)
        .div(&cosh_series(order))
        .expect("cosh has constant term 1")
}

/// Li_k(z) = sum_{m>=1} z^m / m^k, as a formal series. Li_1 = -ln(1-z).
pub fn polylog_series(k: u32, order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (m, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = Rational::new(1.into(), num_bigint::BigInt::from(m as u64).pow(k));
    }
    PowerSeries {
        kind: SeriesKind::Ogf,
        coeffs,
    }
}
