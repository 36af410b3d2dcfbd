//! A single handle over the two triangle families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::riordan::{Family1Method, Family1Triangle};
use crate::tiling::{Family2Method, Family2Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Pascal's recurrence with the `m`-periodic right edge.
    Pascal,
    /// `n`-tile tilings with squares and `(1, m-1)`-fences.
    Tiling,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Pascal => "pascal",
            Family::Tiling => "tiling",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pascal" => Ok(Family::Pascal),
            "tiling" => Ok(Family::Tiling),
            _ => Err(Error::Precondition(format!(
                "unknown family `{s}` (expected pascal or tiling)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    First(Family1Method),
    Second(Family2Method),
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::First(m) => m.name(),
            Method::Second(m) => m.name(),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug)]
enum Inner {
    First(Family1Triangle),
    Second(Family2Triangle),
}

/// One member of either family with memoized entries.
#[derive(Debug)]
pub struct TriangleHandle {
    inner: Inner,
}

impl TriangleHandle {
    pub fn new(family: Family, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("m must be positive".into()));
        }
        let inner = match family {
            Family::Pascal => Inner::First(Family1Triangle::new(m)?),
            Family::Tiling => Inner::Second(Family2Triangle::new(m)?),
        };
        Ok(Self { inner })
    }

    pub fn family(&self) -> Family {
        match self.inner {
            Inner::First(_) => Family::Pascal,
            Inner::Second(_) => Family::Tiling,
        }
    }

    pub fn m(&self) -> usize {
        match &self.inner {
            Inner::First(t) => t.m(),
            Inner::Second(t) => t.m(),
        }
    }

    /// Methods applicable to this family and `m`.
    pub fn methods(&self) -> Vec<Method> {
        match &self.inner {
            Inner::First(_) => Family1Method::ALL.into_iter().map(Method::First).collect(),
            Inner::Second(t) => Family2Method::ALL
                .into_iter()
                .filter(|x| x.supports(t.m()))
                .map(Method::Second)
                .collect(),
        }
    }

    /// Recurrence for the first family, the polynomial route for the second.
    pub fn default_method(&self) -> Method {
        match self.inner {
            Inner::First(_) => Method::First(Family1Method::Recurrence),
            Inner::Second(_) => Method::Second(Family2Method::Poly),
        }
    }

    /// Resolve a method name for this family; errors on names from the other
    /// family or methods that do not apply to this `m`.
    pub fn parse_method(&self, name: &str) -> Result<Method> {
        let all: Vec<Method> = match self.inner {
            Inner::First(_) => Family1Method::ALL.into_iter().map(Method::First).collect(),
            Inner::Second(_) => Family2Method::ALL.into_iter().map(Method::Second).collect(),
        };
        let method = all.into_iter().find(|x| x.name() == name).ok_or_else(|| {
            let valid: Vec<&str> = self.methods().iter().map(|x| x.name()).collect();
            Error::Precondition(format!(
                "method `{name}` does not apply to the {} family (valid: {})",
                self.family().name(),
                valid.join(", ")
            ))
        })?;
        if !self.methods().contains(&method) {
            return Err(Error::UnsupportedMethod {
                method: method.name(),
                m: self.m(),
            });
        }
        Ok(method)
    }

    pub fn entry(&self, n: usize, k: usize, method: Method) -> Result<BigInt> {
        match (&self.inner, method) {
            (Inner::First(t), Method::First(x)) => t.entry(n, k, x),
            (Inner::Second(t), Method::Second(x)) => t.entry(n, k, x),
            _ => Err(self.mismatch(method)),
        }
    }

    pub fn row(&self, n: usize, method: Method) -> Result<Vec<BigInt>> {
        match (&self.inner, method) {
            (Inner::First(t), Method::First(x)) => t.row(n, x),
            (Inner::Second(t), Method::Second(x)) => t.row(n, x),
            _ => Err(self.mismatch(method)),
        }
    }

    /// Rows `0..=last`.
    pub fn rows(&self, last: usize, method: Method) -> Result<Vec<Vec<BigInt>>> {
        (0..=last).map(|n| self.row(n, method)).collect()
    }

    /// `sum_k T(n, k)` for `n < count`.
    pub fn row_sums(&self, count: usize, method: Method) -> Result<Vec<BigInt>> {
        (0..count)
            .map(|n| Ok(self.row(n, method)?.into_iter().sum()))
            .collect()
    }

    /// `sum_k T(n - k, k)` for `n < count`.
    pub fn antidiag_sums(&self, count: usize, method: Method) -> Result<Vec<BigInt>> {
        (0..count)
            .map(|n| {
                (0..=n / 2)
                    .map(|k| self.entry(n - k, k, method))
                    .sum::<Result<BigInt>>()
            })
            .collect()
    }

    fn mismatch(&self, method: Method) -> Error {
        Error::Precondition(format!(
            "method `{}` does not apply to the {} family",
            method.name(),
            self.family().name()
        ))
    }
}
