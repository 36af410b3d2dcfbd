//! Truncated formal power series over the integers.
//!
//! A [`TruncatedSeries`] of order `T` holds exact coefficients for
//! `x^0..=x^T`. Binary operations truncate to the smaller operand order.
//! Reciprocals are only taken of series with constant term `±1`, so every
//! result stays integral.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

fn is_unit(c: &BigInt) -> bool {
    c.abs().is_one()
}

impl TruncatedSeries {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients past `order`.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn from_poly(p: &IntPolynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(BigInt::one(), 1, order)
    }

    /// `c * x^power`, which is the zero series when `power > order`.
    pub fn monomial(c: BigInt, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`.
    ///
    /// # Panics
    /// If `i` exceeds the truncation order; such a coefficient is unknown.
    pub fn coeff(&self, i: usize) -> &BigInt {
        assert!(
            i <= self.order(),
            "coefficient {i} requested beyond truncation order {}",
            self.order()
        );
        &self.coeffs[i]
    }

    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^s`; the order is unchanged.
    pub fn shift_up(&self, s: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); s.min(order + 1)];
        coeffs.extend(
            self.coeffs
                .iter()
                .take((order + 1).saturating_sub(s))
                .cloned(),
        );
        Self::new(coeffs, order)
    }

    /// Divide by `x^s`. The lowest `s` coefficients must vanish and the order
    /// drops by `s`.
    pub fn shift_down(&self, s: usize) -> Result<Self> {
        if s > self.order() {
            return Err(Error::InsufficientOrder {
                needed: s,
                available: self.order(),
            });
        }
        if let Some(c) = self.coeffs[..s].iter().find(|c| !c.is_zero()) {
            return Err(Error::Domain(format!(
                "cannot divide by x^{s}: low coefficient {c} is nonzero"
            )));
        }
        Ok(Self::new(self.coeffs[s..].to_vec(), self.order() - s))
    }

    /// Truncated product; coefficient `n` is `sum_{i+j=n} a_i b_j`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one(self.order());
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Multiplicative inverse of a series with constant term `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !is_unit(a0) {
            return Err(Error::NonUnitConstant(a0.clone()));
        }
        let order = self.order();
        let mut r: Vec<BigInt> = Vec::with_capacity(order + 1);
        r.push(a0.clone());
        for n in 1..=order {
            let s: BigInt = (1..=n).map(|i| &self.coeffs[i] * &r[n - i]).sum();
            // a0 is its own inverse
            r.push(-(a0 * s));
        }
        Ok(Self { coeffs: r })
    }

    /// `self(inner(x))`. The inner series must have zero constant term; the
    /// result order is the smaller of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant(inner.coeffs[0].clone()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner from the top: each multiplication by inner raises valuation.
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `self(g(x)) = x = g(self(x))`.
    ///
    /// Requires zero constant term and linear coefficient `±1`. Coefficients
    /// are solved degree by degree while tracking the needed powers of `g`.
    pub fn comp_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant(self.coeffs[0].clone()));
        }
        let order = self.order();
        if order == 0 {
            return Err(Error::InsufficientOrder {
                needed: 1,
                available: 0,
            });
        }
        let q1 = &self.coeffs[1];
        if !is_unit(q1) {
            return Err(Error::NonUnitLinear(q1.clone()));
        }
        let zero = BigInt::zero();
        let mut g = vec![BigInt::zero(); order + 1];
        g[1] = q1.clone();
        // powers[k][n] = [x^n] g^k, filled one column n at a time.
        let mut powers = vec![vec![BigInt::zero(); order + 1]; order + 1];
        powers[1][1] = g[1].clone();
        for n in 2..=order {
            let mut c = BigInt::zero();
            for k in 2..=n {
                let val: BigInt = (1..=n + 1 - k)
                    .map(|i| &g[i] * powers[k - 1].get(n - i).unwrap_or(&zero))
                    .sum();
                c += &self.coeffs[k] * &val;
                powers[k][n] = val;
            }
            g[n] = -(q1 * c);
            powers[1][n] = g[n].clone();
        }
        Ok(Self { coeffs: g })
    }

    /// `1 / (1 - x^step)`.
    pub fn geometric(step: usize, order: usize) -> Self {
        assert!(step > 0, "1/(1 - x^0) is not a power series");
        let mut s = Self::zero(order);
        for i in (0..=order).step_by(step) {
            s.coeffs[i] = BigInt::one();
        }
        s
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = IntPolynomial::from_coeffs(self.coeffs.clone());
        write!(f, "{body} + O(x^{})", self.order() + 1)
    }
}

/// A power series in `x` whose coefficients are polynomials in `y`.
///
/// Row `n` holds `[x^n]` as a polynomial in `y`; every row has `y`-degree at
/// most `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<IntPolynomial>,
}

impl BivariateSeries {
    pub fn from_rows(mut rows: Vec<IntPolynomial>, order_x: usize) -> Result<Self> {
        rows.resize(order_x + 1, IntPolynomial::zero());
        for (n, row) in rows.iter().enumerate() {
            if row.degree().is_some_and(|d| d > n) {
                return Err(Error::Domain(format!(
                    "row {n} has y-degree {} > {n}",
                    row.degree().unwrap_or(0)
                )));
            }
        }
        Ok(Self { rows })
    }

    pub fn one(order_x: usize) -> Self {
        let mut rows = vec![IntPolynomial::zero(); order_x + 1];
        rows[0] = IntPolynomial::one();
        Self { rows }
    }

    pub fn order_x(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &IntPolynomial {
        &self.rows[n]
    }

    /// `[x^n y^k]`; zero for `n` beyond the order is not assumed, so this
    /// panics in that case like [`TruncatedSeries::coeff`].
    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        assert!(n <= self.order_x(), "row {n} beyond truncation order");
        self.rows[n].coeff(k as i64)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order_x().min(other.order_x());
        let mut rows = vec![IntPolynomial::zero(); order + 1];
        for i in 0..=order {
            if self.rows[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                rows[i + j] = &rows[i + j] + &(&self.rows[i] * &other.rows[j]);
            }
        }
        Self { rows }
    }

    /// Inverse of a series whose `x^0` row is the constant `±1`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.rows[0];
        let c0 = a0.coeff(0);
        if a0.degree() != Some(0) || !is_unit(&c0) {
            return Err(Error::NonUnitConstant(c0));
        }
        let order = self.order_x();
        let unit = IntPolynomial::constant(c0.clone());
        let neg_unit = IntPolynomial::constant(-c0);
        let mut r = vec![unit];
        for n in 1..=order {
            let mut s = IntPolynomial::zero();
            for i in 1..=n {
                s = &s + &(&self.rows[i] * &r[n - i]);
            }
            r.push(&neg_unit * &s);
        }
        Ok(Self { rows: r })
    }
}
