//! Subsets of `{1, ..., n}` in which no two elements differ by exactly `m`,
//! and their correspondence with fence tilings of an `(n + m)`-board.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibpoly::fibonacci;
use crate::tiling::{Placement, Tiling};

/// Largest universe the brute-force counters accept.
pub const SUBSET_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RestrictedSubset {
    pub n: usize,
    pub m: usize,
    /// Strictly increasing, each in `1..=n`.
    pub elements: Vec<usize>,
}

impl RestrictedSubset {
    pub fn new(n: usize, m: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        let s = Self { n, m, elements };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidSubset("m must be positive".into()));
        }
        if self.elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset(
                "elements must be strictly increasing".into(),
            ));
        }
        if let Some(&e) = self.elements.iter().find(|&&e| e == 0 || e > self.n) {
            return Err(Error::InvalidSubset(format!(
                "element {e} is outside 1..={}",
                self.n
            )));
        }
        for &e in &self.elements {
            if self.elements.binary_search(&(e + self.m)).is_ok() {
                return Err(Error::InvalidSubset(format!(
                    "{e} and {} differ by {}",
                    e + self.m,
                    self.m
                )));
            }
        }
        Ok(())
    }
}

fn guard(n: usize) -> Result<()> {
    if n > SUBSET_LIMIT {
        return Err(Error::GuardExceeded {
            what: "universe size n (use the tiling-triangle formula instead)",
            limit: SUBSET_LIMIT,
            got: n,
        });
    }
    Ok(())
}

/// `S^(m)(n, k)` for every `k`, by checking all `2^n` subsets.
pub fn count_restricted_by_size(n: usize, m: usize) -> Result<Vec<BigInt>> {
    guard(n)?;
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    let mut hist = vec![0u64; n + 1];
    for mask in 0u32..(1u32 << n) {
        // bit i-1 stands for element i
        if m >= 32 || mask & (mask >> m) == 0 {
            hist[mask.count_ones() as usize] += 1;
        }
    }
    Ok(hist.into_iter().map(BigInt::from).collect())
}

/// `S^(m)(n, k)`: `k`-subsets of `{1..n}` with no two elements differing by `m`.
pub fn count_restricted(n: usize, m: usize, k: usize) -> Result<BigInt> {
    Ok(count_restricted_by_size(n, m)?
        .get(k)
        .cloned()
        .unwrap_or_default())
}

/// All restricted subsets, smallest first and lexicographic within a size.
/// With `k` given, only subsets of that size.
pub fn list_restricted(n: usize, m: usize, k: Option<usize>) -> Result<Vec<RestrictedSubset>> {
    guard(n)?;
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    let sizes = match k {
        Some(k) => k..=k,
        None => 0..=n,
    };
    let mut out = Vec::new();
    for size in sizes {
        let mut chosen = Vec::with_capacity(size);
        extend_lex(n, m, size, 1, &mut chosen, &mut out);
    }
    Ok(out)
}

fn extend_lex(
    n: usize,
    m: usize,
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<RestrictedSubset>,
) {
    if chosen.len() == size {
        out.push(RestrictedSubset {
            n,
            m,
            elements: chosen.clone(),
        });
        return;
    }
    let need = size - chosen.len();
    for e in from..=n {
        if n - e + 1 < need {
            break;
        }
        if e > m && chosen.binary_search(&(e - m)).is_ok() {
            continue;
        }
        chosen.push(e);
        extend_lex(n, m, size, e + 1, chosen, out);
        chosen.pop();
    }
}

/// One fence per element, left post on that cell, squares elsewhere.
pub fn subset_to_tiling(s: &RestrictedSubset) -> Result<Tiling> {
    s.validate()?;
    let len = s.n + s.m;
    let mut covered = vec![false; len + 1];
    let mut tiles = Vec::with_capacity(len - s.elements.len());
    for &e in &s.elements {
        covered[e] = true;
        covered[e + s.m] = true;
        tiles.push(Placement::Fence { left_cell: e });
    }
    tiles.extend(
        (1..=len)
            .filter(|&c| !covered[c])
            .map(|cell| Placement::Square { cell }),
    );
    Tiling::new(len, s.m, tiles)
}

/// Left posts of the fences of an `(n + m)`-board tiling.
pub fn tiling_to_subset(t: &Tiling) -> Result<RestrictedSubset> {
    t.validate()?;
    let n = t.board_length.checked_sub(t.m).ok_or_else(|| {
        Error::InvalidTiling(format!(
            "board length {} is shorter than m = {}",
            t.board_length, t.m
        ))
    })?;
    let elements = t.fence_cells();
    // a fence that fits has its left post at most n cells in
    assert!(
        elements.iter().all(|&e| e <= n),
        "left post beyond cell {n}"
    );
    RestrictedSubset::new(n, t.m, elements)
}

/// Number of restricted subsets of every size: with `n = mj + r`, the
/// product `f_{j+1}^(m-r) f_{j+2}^r` of Fibonacci numbers.
pub fn count_all_sizes(n: usize, m: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    let (j, r) = ((n / m) as i64, n % m);
    Ok(num_traits::pow(fibonacci(j + 1), m - r) * num_traits::pow(fibonacci(j + 2), r))
}
