//! Fibonacci polynomials, products of their powers, and the metatile
//! polynomial recursion for finite metatile systems.
//!
//! The Fibonacci polynomials here follow `f_n = f_{n-1} + x f_{n-2} + [n = 0]`
//! with `f_n = 0` for `n < 0`, so `[x^k] f_n` counts square-and-domino
//! tilings of an `n`-board with `k` dominoes.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Fibonacci polynomial `f_n(x)`; zero for negative `n`.
pub fn fib_poly(n: i64) -> IntPolynomial {
    if n < 0 {
        return IntPolynomial::zero();
    }
    let x = IntPolynomial::monomial(BigInt::one(), 1);
    // f_{-1} = 0, f_0 = 1
    let (mut prev, mut cur) = (IntPolynomial::zero(), IntPolynomial::one());
    for _ in 0..n {
        let next = &cur + &(&x * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Fibonacci number with `f_0 = f_1 = 1`; zero for negative `n`.
pub fn fibonacci(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    b
}

/// `f_j(x)^(m-r) * f_{j+1}(x)^r` for `0 <= r < m`.
pub fn fib_product_power(j: usize, m: usize, r: usize) -> Result<IntPolynomial> {
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    if r >= m {
        return Err(Error::Domain(format!("r = {r} must be less than m = {m}")));
    }
    let j = j as i64;
    Ok(&fib_poly(j).pow(m - r) * &fib_poly(j + 1).pow(r))
}

/// Coefficient of `x^k` in `p`; zero when `k < 0` or `k > deg p`.
pub fn poly_coeff(p: &IntPolynomial, k: i64) -> BigInt {
    p.coeff(k)
}

/// One metatile of a finite system: its size (board length or tile count)
/// and how many special tiles it contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SizedMetatile {
    pub size: usize,
    pub specials: usize,
}

/// A finite, nonempty list of metatiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    items: Vec<SizedMetatile>,
}

impl PolySystem {
    pub fn new(items: Vec<SizedMetatile>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::InvalidSpec("metatile system is empty".into()));
        }
        for t in &items {
            if t.size == 0 {
                return Err(Error::InvalidSpec("metatile size must be positive".into()));
            }
            if t.specials > t.size {
                return Err(Error::InvalidSpec(format!(
                    "metatile ({}, {}) has more specials than its size",
                    t.size, t.specials
                )));
            }
        }
        Ok(Self { items })
    }

    /// Build from `(size, specials)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(size, specials)| SizedMetatile { size, specials })
                .collect(),
        )
    }

    /// Squares and dominoes with the domino special.
    pub fn square_domino() -> Self {
        Self::from_pairs(&[(1, 0), (2, 1)]).expect("valid system")
    }

    pub fn items(&self) -> &[SizedMetatile] {
        &self.items
    }
}

/// `p_n(x) = [n = 0] + sum_i x^{s_i} p_{n - l_i}(x)`, with `p_n = 0` for `n < 0`.
pub fn metatile_poly(system: &PolySystem, n: i64) -> IntPolynomial {
    metatile_polys(system, n).pop().unwrap_or_default()
}

/// `p_0 ..= p_n` in one pass; empty for negative `n`.
pub fn metatile_polys(system: &PolySystem, n: i64) -> Vec<IntPolynomial> {
    let Ok(n) = usize::try_from(n) else {
        return Vec::new();
    };
    let mut table: Vec<IntPolynomial> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut p = if i == 0 {
            IntPolynomial::one()
        } else {
            IntPolynomial::zero()
        };
        for t in system.items() {
            if let Some(prev) = i.checked_sub(t.size) {
                p = &p + &table[prev].shift(t.specials);
            }
        }
        table.push(p);
    }
    table
}
