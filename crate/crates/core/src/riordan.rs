//! Riordan arrays and the first triangle family.
//!
//! The first family has ones down the left edge, a `1` every `m` rows on the
//! right edge, and Pascal's recurrence everywhere inside. Each member is the
//! row-reversed `(1/(1-x^m), x/(1-x))` Riordan array, so entries can be
//! produced four independent ways: the recurrence, coefficient extraction
//! from the array, a closed binomial sum, and the bivariate generating
//! function.

use std::sync::{Mutex, PoisonError, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::series::{BivariateSeries, TruncatedSeries};

/// `C(a, b)`, taken as zero when `b < 0`, `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// The lower-triangular matrix with `(n, k)` entry `[x^n] p(x) q(x)^k`.
#[derive(Debug)]
pub struct RiordanArray {
    p: TruncatedSeries,
    q: TruncatedSeries,
    /// Column `k` is `p q^k`, grown on demand.
    columns: Mutex<Vec<TruncatedSeries>>,
}

impl Clone for RiordanArray {
    fn clone(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: self.q.clone(),
            columns: Mutex::new(self.lock_columns().clone()),
        }
    }
}

impl RiordanArray {
    /// `p` needs a nonzero constant term and `q` a zero constant term with a
    /// nonzero linear coefficient.
    pub fn new(p: TruncatedSeries, q: TruncatedSeries) -> Result<Self> {
        if p.coeff(0).is_zero() {
            return Err(Error::Domain("p must have a nonzero constant term".into()));
        }
        if !q.coeff(0).is_zero() {
            return Err(Error::NonZeroConstant(q.coeff(0).clone()));
        }
        if q.get(1).is_none_or(Zero::is_zero) {
            return Err(Error::Domain(
                "q must have a nonzero linear coefficient".into(),
            ));
        }
        let order = p.order().min(q.order());
        let p = p.truncate(order);
        let q = q.truncate(order);
        Ok(Self {
            columns: Mutex::new(vec![p.clone()]),
            p,
            q,
        })
    }

    /// `(1/(1-x^m), x/(1-x))`, the array behind the `m`-th first-family triangle.
    pub fn family1(m: usize, order: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("m must be positive".into()));
        }
        let p = TruncatedSeries::geometric(m, order);
        let q = TruncatedSeries::geometric(1, order).shift_up(1);
        Self::new(p, q)
    }

    pub fn p(&self) -> &TruncatedSeries {
        &self.p
    }

    pub fn q(&self) -> &TruncatedSeries {
        &self.q
    }

    pub fn order(&self) -> usize {
        self.p.order()
    }

    fn lock_columns(&self) -> std::sync::MutexGuard<'_, Vec<TruncatedSeries>> {
        self.columns.lock().unwrap_or_else(PoisonError::into_inner)
    }

    /// `[x^n] p q^k`; zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Ok(BigInt::zero());
        }
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                needed: n,
                available: self.order(),
            });
        }
        let mut cols = self.lock_columns();
        while cols.len() <= k {
            let next = cols.last().expect("column 0 present").mul(&self.q);
            cols.push(next);
        }
        Ok(cols[k].coeff(n).clone())
    }

    /// Entry `(n, k)` of the row-reversed array, i.e. `entry(n, n - k)`.
    pub fn row_reversed_entry(&self, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Err(Error::OutsideTriangle { n, k });
        }
        self.entry(n, n - k)
    }

    /// Row sums via `p / (1 - q)`.
    pub fn row_sum_series(&self) -> Result<TruncatedSeries> {
        let one = TruncatedSeries::one(self.order());
        Ok(self.p.mul(&(&one - &self.q).reciprocal()?))
    }

    /// Antidiagonal sums of the row-reversed array via `p(x^2) / (1 - q(x^2)/x)`.
    ///
    /// The result has order `order - 1` since dividing `q(x^2)` by `x` loses
    /// one coefficient.
    pub fn reversed_antidiag_sum_series(&self) -> Result<TruncatedSeries> {
        let order = self.order();
        let x2 = TruncatedSeries::monomial(BigInt::one(), 2, order);
        let p2 = self.p.compose(&x2)?;
        let q2_over_x = self.q.compose(&x2)?.shift_down(1)?;
        let one = TruncatedSeries::one(order - 1);
        let p2 = p2.truncate(order - 1);
        Ok(p2.mul(&(&one - &q2_over_x).reciprocal()?))
    }
}

/// Entry-producing routes for the first family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family1Method {
    /// Pascal's recurrence with the prescribed edges.
    Recurrence,
    /// Row-reversed coefficient extraction from `(1/(1-x^m), x/(1-x))`.
    Riordan,
    /// Binomial sum over multiples of `m`.
    Closed,
    /// Coefficient `[x^n y^k]` of the bivariate generating function.
    Bivariate,
}

impl Family1Method {
    pub const ALL: [Family1Method; 4] = [
        Family1Method::Recurrence,
        Family1Method::Riordan,
        Family1Method::Closed,
        Family1Method::Bivariate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family1Method::Recurrence => "recurrence",
            Family1Method::Riordan => "riordan",
            Family1Method::Closed => "closed",
            Family1Method::Bivariate => "bivariate",
        }
    }
}

/// Lazily materialized `m`-th member of the first family.
///
/// All accessors take `&self`; the memo tables sit behind locks and are only
/// ever extended, so concurrent readers see the same values.
#[derive(Debug)]
pub struct Family1Triangle {
    m: usize,
    rows: RwLock<Vec<Vec<BigInt>>>,
    array: RwLock<RiordanArray>,
    bivariate: RwLock<Option<BivariateSeries>>,
}

const MIN_SERIES_ORDER: usize = 64;

impl Family1Triangle {
    pub fn new(m: usize) -> Result<Self> {
        Ok(Self {
            m,
            rows: RwLock::new(Vec::new()),
            array: RwLock::new(RiordanArray::family1(m, MIN_SERIES_ORDER)?),
            bivariate: RwLock::new(None),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entry(&self, n: usize, k: usize, method: Family1Method) -> Result<BigInt> {
        if k > n {
            return Err(Error::OutsideTriangle { n, k });
        }
        match method {
            Family1Method::Recurrence => {
                self.fill_rows(n);
                Ok(read(&self.rows)[n][k].clone())
            }
            Family1Method::Riordan => self.riordan_entry(n, k),
            Family1Method::Closed => Ok(closed_entry(self.m, n, k)),
            Family1Method::Bivariate => self.bivariate_entry(n, k),
        }
    }

    pub fn row(&self, n: usize, method: Family1Method) -> Result<Vec<BigInt>> {
        if method == Family1Method::Recurrence {
            self.fill_rows(n);
            return Ok(read(&self.rows)[n].clone());
        }
        (0..=n).map(|k| self.entry(n, k, method)).collect()
    }

    fn fill_rows(&self, n: usize) {
        if read(&self.rows).len() > n {
            return;
        }
        let mut rows = self.rows.write().unwrap_or_else(PoisonError::into_inner);
        while rows.len() <= n {
            let i = rows.len();
            let mut row = Vec::with_capacity(i + 1);
            row.push(BigInt::one());
            for k in 1..i {
                row.push(&rows[i - 1][k] + &rows[i - 1][k - 1]);
            }
            if i > 0 {
                row.push(if i.is_multiple_of(self.m) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                });
            }
            rows.push(row);
        }
    }

    fn riordan_entry(&self, n: usize, k: usize) -> Result<BigInt> {
        {
            let arr = read(&self.array);
            if arr.order() >= n {
                return arr.row_reversed_entry(n, k);
            }
        }
        let mut arr = self.array.write().unwrap_or_else(PoisonError::into_inner);
        if arr.order() < n {
            *arr = RiordanArray::family1(self.m, (2 * n).max(MIN_SERIES_ORDER))?;
        }
        arr.row_reversed_entry(n, k)
    }

    fn bivariate_entry(&self, n: usize, k: usize) -> Result<BigInt> {
        {
            let g = read(&self.bivariate);
            if let Some(g) = g.as_ref().filter(|g| g.order_x() >= n) {
                return Ok(g.coeff(n, k));
            }
        }
        let mut g = self
            .bivariate
            .write()
            .unwrap_or_else(PoisonError::into_inner);
        if g.as_ref().is_none_or(|g| g.order_x() < n) {
            *g = Some(bivariate_gf(self.m, (2 * n).max(MIN_SERIES_ORDER))?);
        }
        Ok(g.as_ref().expect("just built").coeff(n, k))
    }
}

fn read<T>(lock: &RwLock<T>) -> std::sync::RwLockReadGuard<'_, T> {
    lock.read().unwrap_or_else(PoisonError::into_inner)
}

fn closed_entry(m: usize, n: usize, k: usize) -> BigInt {
    if k == n {
        return if n.is_multiple_of(m) {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let (n, k, m) = (n as i64, k as i64, m as i64);
    (0..=k / m)
        .map(|j| binomial(n - m * j - 1, n - k - 1))
        .sum()
}

/// `(n, k)` entry of the `m`-th first-family triangle by the chosen route.
pub fn family1_entry(m: usize, n: usize, k: usize, method: Family1Method) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    if k > n {
        return Err(Error::OutsideTriangle { n, k });
    }
    match method {
        Family1Method::Closed => Ok(closed_entry(m, n, k)),
        _ => Family1Triangle::new(m)?.entry(n, k, method),
    }
}

/// `A(x)` with `q(x) = x A(q(x))`, i.e. `x / qbar(x)` where `qbar` is the
/// compositional inverse of `q`. The result has order one less than `q`.
pub fn a_sequence(q: &TruncatedSeries) -> Result<TruncatedSeries> {
    let inv = q.comp_inverse()?;
    inv.shift_down(1)?.reciprocal()
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::Domain("m must be positive".into()))
    } else {
        Ok(())
    }
}

/// `(1 - x) / ((1 - x^m)(1 - 2x))` to order `order`.
pub fn row_sum_series(m: usize, order: usize) -> Result<TruncatedSeries> {
    check_m(m)?;
    let num = TruncatedSeries::from_i64s(&[1, -1], order);
    let one_minus_xm =
        &TruncatedSeries::one(order) - &TruncatedSeries::monomial(BigInt::one(), m, order);
    let den = one_minus_xm.mul(&TruncatedSeries::from_i64s(&[1, -2], order));
    Ok(num.mul(&den.reciprocal()?))
}

/// `(1 - x^2) / ((1 - x^{2m})(1 - x - x^2))` to order `order`.
pub fn antidiag_sum_series(m: usize, order: usize) -> Result<TruncatedSeries> {
    check_m(m)?;
    let num = TruncatedSeries::from_i64s(&[1, 0, -1], order);
    let one_minus_x2m =
        &TruncatedSeries::one(order) - &TruncatedSeries::monomial(BigInt::one(), 2 * m, order);
    let den = one_minus_x2m.mul(&TruncatedSeries::from_i64s(&[1, -1, -1], order));
    Ok(num.mul(&den.reciprocal()?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    Row,
    Antidiag,
}

fn term(seq: &[BigInt], n: usize, back: usize) -> BigInt {
    n.checked_sub(back)
        .map(|i| seq[i].clone())
        .unwrap_or_default()
}

fn delta(a: usize, b: usize) -> BigInt {
    if a == b {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `r_n = 2 r_{n-1} + r_{n-m} - 2 r_{n-m-1} + [n=0] - [n=1]`.
pub fn row_sums_by_difference(m: usize, count: usize) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let v = BigInt::from(2) * term(&r, n, 1) + term(&r, n, m)
            - BigInt::from(2) * term(&r, n, m + 1)
            + delta(n, 0)
            - delta(n, 1);
        r.push(v);
    }
    r
}

/// `r_n = r_{n-1} + ... + r_{n-m+1} + 2 r_{n-m} + [n=0]`.
pub fn row_sums_by_window(m: usize, count: usize) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let mut v: BigInt = (1..m).map(|i| term(&r, n, i)).sum();
        v += BigInt::from(2) * term(&r, n, m) + delta(n, 0);
        r.push(v);
    }
    r
}

/// `a_n = a_{n-1} + a_{n-2} + a_{n-2m} - a_{n-2m-1} - a_{n-2m-2} + [n=0] - [n=2]`.
pub fn antidiag_sums_by_difference(m: usize, count: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let v = term(&a, n, 1) + term(&a, n, 2) + term(&a, n, 2 * m)
            - term(&a, n, 2 * m + 1)
            - term(&a, n, 2 * m + 2)
            + delta(n, 0)
            - delta(n, 2);
        a.push(v);
    }
    a
}

/// `a_n = a_{n-1} + a_{n-3} + ... + a_{n-2m+1} + a_{n-2m} + [n=0]`.
pub fn antidiag_sums_by_odd_lags(m: usize, count: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let mut v: BigInt = (0..m).map(|i| term(&a, n, 2 * i + 1)).sum();
        v += term(&a, n, 2 * m) + delta(n, 0);
        a.push(v);
    }
    a
}

/// Terms `0..=last` of the row or antidiagonal sums, computed with both
/// recurrence forms. Disagreement between the two is reported as an error.
pub fn sum_recurrences(m: usize, kind: SumKind, last: usize) -> Result<Vec<BigInt>> {
    check_m(m)?;
    let count = last + 1;
    let (a, b) = match kind {
        SumKind::Row => (
            row_sums_by_difference(m, count),
            row_sums_by_window(m, count),
        ),
        SumKind::Antidiag => (
            antidiag_sums_by_difference(m, count),
            antidiag_sums_by_odd_lags(m, count),
        ),
    };
    if let Some(i) = (0..count).find(|&i| a[i] != b[i]) {
        return Err(Error::Domain(format!(
            "recurrence forms disagree at term {i}: {} vs {}",
            a[i], b[i]
        )));
    }
    Ok(a)
}

/// `(1 - xy) / ((1 - (xy)^m)(1 - x - xy))` as rows of `y`-polynomials.
pub fn bivariate_gf(m: usize, order_x: usize) -> Result<BivariateSeries> {
    check_m(m)?;
    let xy_m = {
        let mut rows = vec![IntPolynomial::one()];
        rows.resize(m + 1, IntPolynomial::zero());
        rows[m] = IntPolynomial::monomial(BigInt::from(-1), m);
        BivariateSeries::from_rows(rows, order_x)?
    };
    let pascal_den = BivariateSeries::from_rows(
        vec![IntPolynomial::one(), IntPolynomial::from_i64s(&[-1, -1])],
        order_x,
    )?;
    let num = BivariateSeries::from_rows(
        vec![IntPolynomial::one(), IntPolynomial::from_i64s(&[0, -1])],
        order_x,
    )?;
    Ok(num.mul(&xy_m.mul(&pascal_den).reciprocal()?))
}

/// `1 / ((1 - x^m)(1 - x)^k)`: term `i` is the first-family entry `(i + k, i)`.
pub fn subdiag_series(m: usize, k: usize, order: usize) -> Result<TruncatedSeries> {
    check_m(m)?;
    let one_minus_x = TruncatedSeries::from_i64s(&[1, -1], order);
    let one_minus_xm =
        &TruncatedSeries::one(order) - &TruncatedSeries::monomial(BigInt::one(), m, order);
    one_minus_xm.mul(&one_minus_x.pow(k)).reciprocal()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, -1), big(0));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn pascal_as_riordan_array() {
        // (1/(1-x), x/(1-x)); with p = 1 - x the (4, 2) entry would be 1
        let p = TruncatedSeries::geometric(1, 10);
        let q = TruncatedSeries::geometric(1, 10).shift_up(1);
        let arr = RiordanArray::new(p, q).unwrap();
        assert_eq!(arr.entry(4, 2).unwrap(), big(6));
        assert_eq!(arr.entry(4, 5).unwrap(), big(0));
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(arr.entry(n, k).unwrap(), binomial(n as i64, k as i64));
                assert_eq!(
                    arr.row_reversed_entry(n, k).unwrap(),
                    arr.entry(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn entry_past_order_asks_for_rebuild() {
        let arr = RiordanArray::family1(2, 8).unwrap();
        assert!(matches!(
            arr.entry(9, 1),
            Err(Error::InsufficientOrder {
                needed: 9,
                available: 8
            })
        ));
    }

    #[test]
    fn row_reversed_figure_values() {
        let a2 = RiordanArray::family1(2, 16).unwrap();
        assert_eq!(a2.row_reversed_entry(5, 2).unwrap(), big(7));
        assert_eq!(a2.entry(5, 3).unwrap(), big(7));
        assert_eq!(a2.row_reversed_entry(6, 3).unwrap(), big(13));
        let a3 = RiordanArray::family1(3, 16).unwrap();
        assert_eq!(a3.row_reversed_entry(9, 4).unwrap(), big(75));
        let a4 = RiordanArray::family1(4, 16).unwrap();
        assert_eq!(a4.row_reversed_entry(12, 6).unwrap(), big(483));
        assert!(matches!(
            a4.row_reversed_entry(3, 4),
            Err(Error::OutsideTriangle { .. })
        ));
    }

    #[test]
    fn family1_examples() {
        assert_eq!(
            family1_entry(3, 9, 4, Family1Method::Closed).unwrap(),
            big(75)
        );
        assert_eq!(binomial(8, 4) + binomial(5, 4), big(75));
        for method in Family1Method::ALL {
            assert_eq!(family1_entry(5, 7, 0, method).unwrap(), big(1));
            assert_eq!(family1_entry(4, 8, 8, method).unwrap(), big(1));
            assert_eq!(family1_entry(4, 9, 9, method).unwrap(), big(0));
        }
        assert!(family1_entry(3, 2, 3, Family1Method::Closed).is_err());
    }

    #[test]
    fn methods_agree_small() {
        for m in 1..=4 {
            let tri = Family1Triangle::new(m).unwrap();
            for n in 0..=20 {
                let base = tri.row(n, Family1Method::Recurrence).unwrap();
                for method in Family1Method::ALL {
                    assert_eq!(tri.row(n, method).unwrap(), base, "m={m} n={n} {method:?}");
                }
            }
        }
    }

    #[test]
    fn riordan_route_rebuilds_for_large_rows() {
        let tri = Family1Triangle::new(2).unwrap();
        let want = tri.entry(100, 50, Family1Method::Closed).unwrap();
        assert_eq!(tri.entry(100, 50, Family1Method::Riordan).unwrap(), want);
        assert_eq!(tri.entry(100, 50, Family1Method::Recurrence).unwrap(), want);
    }

    #[test]
    fn a_sequence_examples() {
        let q = TruncatedSeries::geometric(1, 17).shift_up(1);
        let a = a_sequence(&q).unwrap();
        assert_eq!(a.order(), 16);
        assert_eq!(ints(&a)[..4], [1, 1, 0, 0]);
        assert!(a.coeffs()[2..].iter().all(Zero::is_zero));

        let a = a_sequence(&TruncatedSeries::x(8)).unwrap();
        assert_eq!(a, TruncatedSeries::one(7));

        // q = x/(1-x)^2 gives A(y) = (1 + 2y + sqrt(1 + 4y)) / 2, whose
        // coefficients past y^1 are alternating Catalan numbers
        let q = TruncatedSeries::from_i64s(&[1, -2, 1], 17)
            .reciprocal()
            .unwrap()
            .shift_up(1);
        let a = a_sequence(&q).unwrap();
        let catalan = |n: i64| binomial(2 * n, n) / BigInt::from(n + 1);
        assert_eq!(a.coeff(0), &big(1));
        assert_eq!(a.coeff(1), &big(2));
        for n in 2..=16usize {
            let sign = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(a.coeff(n), &(catalan(n as i64 - 1) * sign), "n={n}");
        }
        assert_eq!(ints(&a)[..5], [1, 2, -1, 2, -5]);
        let rhs = a.compose(&q).unwrap().shift_up(1);
        assert_eq!(rhs.truncate(16), q.truncate(16));
    }

    #[test]
    fn a_sequence_rejects_bad_q() {
        assert!(a_sequence(&TruncatedSeries::from_i64s(&[1, 1], 4)).is_err());
        assert!(a_sequence(&TruncatedSeries::from_i64s(&[0, 3], 4)).is_err());
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(ints(&row_sum_series(1, 4).unwrap()), vec![1, 2, 4, 8, 16]);
        assert_eq!(
            ints(&row_sum_series(3, 5).unwrap()),
            vec![1, 1, 2, 5, 9, 18]
        );
        assert_eq!(ints(&row_sum_series(2, 0).unwrap()), vec![1]);
    }

    #[test]
    fn antidiag_sum_examples() {
        assert_eq!(
            ints(&antidiag_sum_series(1, 5).unwrap()),
            vec![1, 1, 2, 3, 5, 8]
        );
        assert_eq!(
            ints(&antidiag_sum_series(2, 4).unwrap()),
            vec![1, 1, 1, 2, 4]
        );
        for m in 1..5 {
            assert_eq!(ints(&antidiag_sum_series(m, 0).unwrap()), vec![1]);
        }
    }

    #[test]
    fn generic_sum_series_match_closed_forms() {
        for m in 1..=5 {
            let arr = RiordanArray::family1(m, 30).unwrap();
            assert_eq!(
                arr.row_sum_series().unwrap(),
                row_sum_series(m, 30).unwrap()
            );
            assert_eq!(
                arr.reversed_antidiag_sum_series().unwrap(),
                antidiag_sum_series(m, 29).unwrap()
            );
        }
    }

    #[test]
    fn sum_recurrence_examples() {
        let v = |xs: &[i64]| xs.iter().map(|&x| big(x)).collect::<Vec<_>>();
        assert_eq!(
            sum_recurrences(2, SumKind::Row, 5).unwrap(),
            v(&[1, 1, 3, 5, 11, 21])
        );
        assert_eq!(
            sum_recurrences(1, SumKind::Row, 4).unwrap(),
            v(&[1, 2, 4, 8, 16])
        );
        assert_eq!(
            sum_recurrences(1, SumKind::Antidiag, 5).unwrap(),
            v(&[1, 1, 2, 3, 5, 8])
        );
    }

    #[test]
    fn bivariate_examples() {
        let g2 = bivariate_gf(2, 8).unwrap();
        assert_eq!(g2.coeff(6, 3), big(13));
        assert_eq!(g2.coeff(0, 0), big(1));
        let g3 = bivariate_gf(3, 8).unwrap();
        assert_eq!(g3.coeff(5, 5), big(0));
        assert_eq!(bivariate_gf(5, 0).unwrap().coeff(0, 0), big(1));
    }

    #[test]
    fn subdiag_examples() {
        assert_eq!(ints(&subdiag_series(2, 0, 4).unwrap()), vec![1, 0, 1, 0, 1]);
        assert_eq!(ints(&subdiag_series(2, 1, 4).unwrap()), vec![1, 1, 2, 2, 3]);
        assert_eq!(subdiag_series(3, 1, 6).unwrap().coeff(3), &big(2));
    }

    #[test]
    fn subdiag_matches_entries() {
        for m in 1..=4 {
            for k in 0..=5 {
                let s = subdiag_series(m, k, 15).unwrap();
                for i in 0..=15 {
                    assert_eq!(
                        s.coeff(i),
                        &family1_entry(m, i + k, i, Family1Method::Closed).unwrap()
                    );
                }
            }
        }
    }
}
