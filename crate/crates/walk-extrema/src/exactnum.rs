//! Arbitrary-precision rational arithmetic and truncated formal power series.
//!
//! `Rat` is a canonical-form big rational (positive denominator, fully
//! reduced after every operation; both guaranteed by `num-rational`).
//! [`PowerSeries`] is a dense vector of rational coefficients of `λ^0 .. λ^order`;
//! coefficients beyond the truncation order are unknown, not zero, so binary
//! operations truncate to the shorter operand.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

pub type Rat = BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"NUM/DEN"` or a bare integer. Decimal notation is rejected so that
/// no hidden rounding enters exact computations.
pub fn parse_rat(s: &str) -> Result<Rat, SeriesError> {
    let bad = || SeriesError::BadRational(s.to_string());
    let parse_int = |t: &str| t.parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    #[error("series square root requires constant term 1")]
    BadConstantTerm,
    #[error("shift by λ requires a zero constant term")]
    NonzeroConstantTerm,
    #[error("cannot parse rational from {0:?} (expected NUM/DEN or integer)")]
    BadRational(String),
}

/// Binomial coefficient C(n, k), with the usual convention that values
/// outside `0 <= k <= n` are zero.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Truncated formal power series with exact rational coefficients.
///
/// Index `k` of the coefficient vector holds the coefficient of `λ^k`;
/// the vector always has `order + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least λ^0");
        PowerSeries { coeffs }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(Rat::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    /// The monomial λ.
    pub fn lambda(order: usize) -> Self {
        assert!(order >= 1);
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[1] = Rat::one();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `λ^k`; panics beyond the truncation order, since such a
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, k: usize) -> &Rat {
        assert!(
            k <= self.order(),
            "coefficient {k} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Quotient series `q` with `q * other = self` up to the common order.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        if other.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order().min(other.order()) + 1;
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            let mut s = self.coeffs[i].clone();
            for j in 0..i {
                s -= &out[j] * &other.coeffs[i - j];
            }
            out[i] = s / &other.coeffs[0];
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Square root of a series with constant term 1 (the only case this
    /// library needs); the root also has constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let n = self.coeffs.len();
        let mut out = vec![Rat::zero(); n];
        out[0] = Rat::one();
        let two = rat_int(2);
        for i in 1..n {
            let mut s = self.coeffs[i].clone();
            for j in 1..i {
                s -= &out[j] * &out[i - j];
            }
            out[i] = s / &two;
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Division by the monomial λ, as an index shift. λ is not a unit of the
    /// series ring, so this errors unless the constant term vanishes.
    /// The order drops by one.
    pub fn shift_down(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        assert!(self.coeffs.len() >= 2);
        Ok(PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order()) + 1;
        PowerSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order()) + 1;
        PowerSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order()) + 1;
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

/// The first-passage kernel θ(λ) = (1 − √(1 − 4pqλ²)) / λ, truncated to
/// `order`. θ[0] = 0 and θ[1] = 2pq; only odd powers of λ appear.
///
/// The variant with θ replaced by 2θ would make downstream formulas tidier,
/// but this normalization is kept throughout the crate.
pub fn theta_series(p: &Rat, q: &Rat, order: usize) -> Result<PowerSeries, SeriesError> {
    assert!(p.is_positive() && q.is_positive() && (p + q).is_one());
    assert!(order >= 1);
    let inner_order = order + 1;
    let mut inner = PowerSeries::one(inner_order);
    inner.coeffs[2] = -rat_int(4) * p * q;
    let root = inner.sqrt()?;
    let numerator = &PowerSeries::one(inner_order) - &root;
    numerator.shift_down()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_values() {
        assert_eq!(binom(3, 1), BigInt::from(3));
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(10, -1), BigInt::zero());
        // Pascal-triangle oracle for C(40, 20).
        let mut row = vec![BigInt::one()];
        for _ in 0..40 {
            let mut next = vec![BigInt::one()];
            for w in row.windows(2) {
                next.push(&w[0] + &w[1]);
            }
            next.push(BigInt::one());
            row = next;
        }
        assert_eq!(binom(40, 20), row[20]);
        assert_eq!(binom(40, 20), BigInt::from(137846528820u64));
    }

    #[test]
    fn rational_canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert!(rat(1, 2).denom() > &BigInt::zero());
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rat("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn geometric_series_division() {
        let order = 8;
        let one = PowerSeries::one(order);
        let denom = &one - &PowerSeries::lambda(order);
        let geo = one.div(&denom).unwrap();
        for k in 0..=order {
            assert_eq!(geo.coeff(k), &Rat::one());
        }
    }

    #[test]
    fn self_division_is_one() {
        let a = PowerSeries::from_coeffs(vec![rat(3, 2), rat(-1, 5), rat(7, 3), rat(0, 1)]);
        let q = a.div(&a).unwrap();
        assert_eq!(q, PowerSeries::one(3));
    }

    #[test]
    fn division_by_lambda_factor() {
        // (λ + λ²) / (1 + λ) = λ
        let order = 6;
        let lam = PowerSeries::lambda(order);
        let num = &lam + &(&lam * &lam);
        let den = &PowerSeries::one(order) + &lam;
        let q = num.div(&den).unwrap();
        assert_eq!(&q * &den, num.truncated(q.order()));
        assert_eq!(q, lam);
    }

    #[test]
    fn division_rejects_zero_constant_term() {
        let lam = PowerSeries::lambda(4);
        assert_eq!(
            PowerSeries::one(4).div(&lam),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn sqrt_perfect_square() {
        // sqrt(1 - 2λ + λ²) = 1 - λ
        let s = PowerSeries::from_coeffs(vec![
            rat_int(1),
            rat_int(-2),
            rat_int(1),
            rat_int(0),
            rat_int(0),
        ]);
        let r = s.sqrt().unwrap();
        assert_eq!(r, &PowerSeries::one(4) - &PowerSeries::lambda(4));
        assert_eq!(PowerSeries::one(3).sqrt().unwrap(), PowerSeries::one(3));
        assert_eq!(
            PowerSeries::constant(rat_int(4), 3).sqrt(),
            Err(SeriesError::BadConstantTerm)
        );
    }

    #[test]
    fn sqrt_squares_back() {
        // sqrt(1 - 4pq λ²) at p = q = 1/2 starts 1 - λ²/2 - λ⁴/8 - ...
        let mut s = PowerSeries::one(8);
        s.coeffs[2] = rat_int(-1);
        let r = s.sqrt().unwrap();
        assert_eq!(r.coeff(2), &rat(-1, 2));
        assert_eq!(r.coeff(4), &rat(-1, 8));
        assert_eq!(&r * &r, s);
    }

    #[test]
    fn theta_leading_coefficients() {
        let th = theta_series(&rat(1, 2), &rat(1, 2), 7).unwrap();
        assert_eq!(th.coeff(0), &Rat::zero());
        assert_eq!(th.coeff(1), &rat(1, 2));
        assert_eq!(th.coeff(2), &Rat::zero());
        assert_eq!(th.coeff(3), &rat(1, 8));
        assert_eq!(th.coeff(5), &rat(1, 16));

        let th = theta_series(&rat(1, 3), &rat(2, 3), 4).unwrap();
        assert_eq!(th.coeff(0), &Rat::zero());
        assert_eq!(th.coeff(1), &rat(4, 9));
    }

    /// Binomial-series oracle: θ = Σ_{m>=1} (-1)^{m+1} C(1/2, m)(4pq)^m λ^{2m-1}
    /// with the generalized binomial coefficients computed recursively.
    #[test]
    fn theta_matches_binomial_series_oracle() {
        let (p, q) = (rat(2, 5), rat(3, 5));
        let order = 15;
        let th = theta_series(&p, &q, order).unwrap();
        // C(1/2, m) via C(1/2, 0) = 1, C(1/2, m) = C(1/2, m-1) * (1/2 - m + 1)/m
        let mut c = Rat::one();
        let mut expect = vec![Rat::zero(); order + 1];
        let fourpq = rat_int(4) * &p * &q;
        let mut pow = Rat::one();
        for m in 1..=(order + 1) / 2 {
            c = c * (rat(1, 2) - rat_int(m as i64 - 1)) / rat_int(m as i64);
            pow *= &fourpq;
            expect[2 * m - 1] = if m % 2 == 1 { &c * &pow } else { -(&c * &pow) };
        }
        assert_eq!(th.coeffs(), &expect[..]);
    }

    #[test]
    fn theta_algebraic_identities() {
        // λθ² − 2θ + 4pqλ = 0 and λ = 2θ/(θ² + 4pq), coefficientwise.
        for (pn, pd) in [(1i64, 2i64), (1, 3), (2, 5)] {
            let p = rat(pn, pd);
            let q = Rat::one() - &p;
            let order = 32;
            let th = theta_series(&p, &q, order).unwrap();
            let lam = PowerSeries::lambda(order);
            let fourpq = PowerSeries::constant(rat_int(4) * &p * &q, order);
            let lhs = &(&(&lam * &(&th * &th)) - &th.scale(&rat_int(2))) + &(&lam * &fourpq);
            assert!(lhs.is_zero());

            let den = &(&th * &th) + &fourpq;
            let recovered = th.scale(&rat_int(2)).div(&den).unwrap();
            assert_eq!(recovered, lam.truncated(recovered.order()));
        }
    }

    #[test]
    fn division_roundtrip() {
        let a = PowerSeries::from_coeffs(vec![rat(1, 3), rat(2, 7), rat(-5, 2), rat(4, 9)]);
        let b = PowerSeries::from_coeffs(vec![rat(2, 1), rat(-1, 4), rat(1, 6), rat(3, 5)]);
        let prod = &a * &b;
        assert_eq!(prod.div(&b).unwrap(), a);
    }
}
