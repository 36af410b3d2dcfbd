//! Verification harness for the identities satisfied by the two triangle
//! families, run over configurable parameter grids.
//!
//! Tiling counts on the left-hand sides come from transfer counting on the
//! `(n + k)`-board, which shares no code with the polynomial and recurrence
//! routes being checked. Where an identity is about enumeration itself the
//! brute-force oracle is used instead.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fibpoly::{fib_product_power, fibonacci};
use crate::riordan::{
    antidiag_sum_series, binomial, bivariate_gf, row_sum_series, sum_recurrences, Family1Method,
    Family1Triangle, SumKind,
};
use crate::subsets::{count_all_sizes, count_restricted_by_size};
use crate::tiling::{
    b3_sequence, fence_count_vector, for_each_tiling, rr3_rhs, Family2Method, Family2Triangle,
};

/// Parameter ranges for the checks. `m` runs over `m_min..=m_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub m_min: usize,
    pub m_max: usize,
    /// Largest board length (or row index) for grid checks over `n`.
    pub board_max: usize,
    pub j_max: usize,
    /// Largest row for the Pascal-rule checks.
    pub conj_n_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            m_min: 1,
            m_max: 5,
            board_max: 20,
            j_max: 6,
            conj_n_max: 24,
        }
    }
}

impl Bounds {
    /// Bounds with no values of `m`; every check is skipped.
    pub fn empty() -> Self {
        Self {
            m_min: 1,
            m_max: 0,
            ..Self::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.m_min == 0 || self.m_max < self.m_min
    }

    fn ms(&self) -> std::ops::RangeInclusive<usize> {
        self.m_min.max(1)..=self.m_max
    }

    fn has_m(&self, m: usize) -> bool {
        self.ms().contains(&m)
    }
}

/// Parameters of one instance, ordered lexicographically as `(m, n, k, j, p, r)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
}

impl Params {
    fn m(m: usize) -> Self {
        Self {
            m: Some(m as i64),
            ..Self::default()
        }
    }

    fn n(mut self, n: i64) -> Self {
        self.n = Some(n);
        self
    }

    fn k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    fn j(mut self, j: usize) -> Self {
        self.j = Some(j as i64);
        self
    }

    fn p(mut self, p: usize) -> Self {
        self.p = Some(p as i64);
        self
    }

    fn r(mut self, r: usize) -> Self {
        self.r = Some(r as i64);
        self
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = [
            ("m", self.m),
            ("n", self.n),
            ("k", self.k),
            ("j", self.j),
            ("p", self.p),
            ("r", self.r),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.map(|v| format!("{name}={v}")))
        .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Counterexample),
    /// Conjectured identity that held on every checked instance.
    Evidence,
    Error(String),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::Evidence => "evidence",
            Verdict::Error(_) => "error",
        }
    }

    /// Pass or evidence.
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Pass | Verdict::Evidence)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub bounds: Bounds,
    pub verdict: Verdict,
    /// Number of instances evaluated.
    pub checked: usize,
    /// A few evaluated instances, as `params: lhs = rhs`.
    pub spot_values: Vec<String>,
}

impl IdentityCheck {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "identity": self.name,
            "bounds": self.bounds,
            "verdict": self.verdict.name(),
            "counterexample": match &self.verdict {
                Verdict::Fail(c) => serde_json::to_value(c).expect("serializable"),
                _ => serde_json::Value::Null,
            },
            "checked": self.checked,
        });
        if let Verdict::Error(e) = &self.verdict {
            v["error"] = json!(e);
        }
        v
    }
}

const SPOT_LIMIT: usize = 3;

/// Collects instance outcomes and keeps the lexicographically smallest failure.
struct Tally {
    checked: usize,
    worst: Option<Counterexample>,
    spots: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checked: 0,
            worst: None,
            spots: Vec::new(),
        }
    }

    fn eq(&mut self, params: Params, lhs: &BigInt, rhs: &BigInt) {
        self.checked += 1;
        if lhs != rhs {
            if self.worst.as_ref().is_none_or(|w| params < w.params) {
                self.worst = Some(Counterexample {
                    params,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        } else if self.spots.len() < SPOT_LIMIT && params.m.is_none_or(|m| m >= 2) {
            self.spots.push(format!("{params}: {lhs} = {rhs}"));
        }
    }

    fn finish(self, conjecture: bool) -> (Verdict, usize, Vec<String>) {
        let verdict = match self.worst {
            Some(c) => Verdict::Fail(c),
            None if conjecture => Verdict::Evidence,
            None => Verdict::Pass,
        };
        (verdict, self.checked, self.spots)
    }
}

/// Tiling-triangle entries from transfer counting, memoized per board length.
struct Chb {
    m: usize,
    boards: HashMap<usize, Vec<BigInt>>,
}

impl Chb {
    fn new(m: usize) -> Self {
        Self {
            m,
            boards: HashMap::new(),
        }
    }

    /// `chb{n}{k}_m`, zero outside `0 <= k <= n`.
    fn at(&mut self, n: i64, k: i64) -> Result<BigInt> {
        if n < 0 || k < 0 || k > n {
            return Ok(BigInt::zero());
        }
        let len = (n + k) as usize;
        if !self.boards.contains_key(&len) {
            let v = fence_count_vector(len, self.m)?;
            self.boards.insert(len, v);
        }
        Ok(self.boards[&len]
            .get(k as usize)
            .cloned()
            .unwrap_or_default())
    }
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

type CheckFn = fn(&Bounds, &mut Tally) -> Result<()>;

struct Registered {
    name: &'static str,
    conjecture: bool,
    run: CheckFn,
}

const REGISTRY: &[Registered] = &[
    Registered {
        name: "ch_eq_chb",
        conjecture: false,
        run: check_ch_eq_chb,
    },
    Registered {
        name: "adiag_sum",
        conjecture: false,
        run: check_adiag_sum,
    },
    Registered {
        name: "col0",
        conjecture: false,
        run: check_col0,
    },
    Registered {
        name: "col1",
        conjecture: false,
        run: check_col1,
    },
    Registered {
        name: "diag",
        conjecture: false,
        run: check_diag,
    },
    Registered {
        name: "zeros",
        conjecture: false,
        run: check_zeros,
    },
    Registered {
        name: "jp_boundary",
        conjecture: false,
        run: check_jp_boundary,
    },
    Registered {
        name: "mTj",
        conjecture: false,
        run: check_mtj,
    },
    Registered {
        name: "four_squares",
        conjecture: false,
        run: check_four_squares,
    },
    Registered {
        name: "B3",
        conjecture: false,
        run: check_b3,
    },
    Registered {
        name: "rr3",
        conjecture: false,
        run: check_rr3,
    },
    Registered {
        name: "pascal_region",
        conjecture: false,
        run: check_pascal_region,
    },
    Registered {
        name: "conjecture",
        conjecture: true,
        run: check_conjecture,
    },
    Registered {
        name: "genterm",
        conjecture: false,
        run: check_genterm,
    },
    Registered {
        name: "gf_sums",
        conjecture: false,
        run: check_gf_sums,
    },
    Registered {
        name: "bivar",
        conjecture: false,
        run: check_bivar,
    },
    Registered {
        name: "poly_theorem",
        conjecture: false,
        run: check_poly_theorem,
    },
    Registered {
        name: "subsets_corollaries",
        conjecture: false,
        run: check_subsets,
    },
];

/// Names of every registered identity, in registry order.
pub fn identity_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|r| r.name).collect()
}

/// Whether the named identity is conjectural and can only yield evidence.
pub fn is_conjecture(name: &str) -> bool {
    REGISTRY.iter().any(|r| r.name == name && r.conjecture)
}

/// Run one identity over `bounds`.
pub fn verify(name: &str, bounds: &Bounds) -> Result<IdentityCheck> {
    let reg = REGISTRY
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownIdentity {
            name: name.to_string(),
            valid: identity_names(),
        })?;
    let mut tally = Tally::new();
    let outcome = if bounds.is_empty() {
        Ok(())
    } else {
        (reg.run)(bounds, &mut tally)
    };
    let (verdict, checked, spot_values) = match outcome {
        Ok(()) => tally.finish(reg.conjecture),
        Err(e) => (Verdict::Error(e.to_string()), tally.checked, tally.spots),
    };
    Ok(IdentityCheck {
        name: reg.name,
        bounds: *bounds,
        verdict,
        checked,
        spot_values,
    })
}

/// Every registered identity, in registry order; empty for empty bounds.
pub fn verify_all(bounds: &Bounds) -> Vec<IdentityCheck> {
    if bounds.is_empty() {
        return Vec::new();
    }
    REGISTRY
        .iter()
        .map(|r| verify(r.name, bounds).expect("registered name"))
        .collect()
}

/// `ch{L}{k} = chb{L-k}{k}`: enumerated board tilings with `k` fences and
/// `L - k` tiles, against the `n`-tile count from the polynomial route.
fn check_ch_eq_chb(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let tri = Family2Triangle::new(m)?;
        for len in 0..=b.board_max {
            let mut hist = vec![0u64; len / 2 + 1];
            for_each_tiling(len, m, |tiles| {
                let fences = tiles.iter().filter(|p| p.is_fence()).count();
                if tiles.len() + fences == len {
                    hist[fences] += 1;
                }
            })?;
            for (k, &c) in hist.iter().enumerate() {
                let n = len - k;
                let rhs = tri.entry(n, k, Family2Method::Poly)?;
                t.eq(Params::m(m).n(n as i64).k(k as i64), &big(c), &rhs);
            }
        }
    }
    Ok(())
}

/// `sum_k chb{mj+r-k}{k}_m = f_j^(m-r) f_{j+1}^r`.
fn check_adiag_sum(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        for j in 0..=b.j_max {
            for r in 0..m {
                let len = m * j + r;
                let lhs: BigInt = fence_count_vector(len, m)?.into_iter().sum();
                let j = j as i64;
                let rhs =
                    num_traits::pow(fibonacci(j), m - r) * num_traits::pow(fibonacci(j + 1), r);
                t.eq(Params::m(m).j(j as usize).r(r), &lhs, &rhs);
            }
        }
    }
    Ok(())
}

fn check_col0(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let mut chb = Chb::new(m);
        for n in 0..=b.board_max as i64 {
            t.eq(Params::m(m).n(n).k(0), &chb.at(n, 0)?, &BigInt::one());
        }
    }
    Ok(())
}

fn check_col1(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let mut chb = Chb::new(m);
        for n in 1..=b.board_max as i64 {
            let rhs = if n < m as i64 { 0 } else { n - m as i64 + 1 };
            t.eq(Params::m(m).n(n).k(1), &chb.at(n, 1)?, &big(rhs));
        }
    }
    Ok(())
}

fn check_diag(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let mut chb = Chb::new(m);
        for n in 0..=b.board_max as i64 {
            let rhs = i64::from(n % m as i64 == 0);
            t.eq(Params::m(m).n(n).k(n), &chb.at(n, n)?, &big(rhs));
        }
    }
    Ok(())
}

/// `chb{mj-r}{mj-p}_m = 0` for `1 <= r <= p <= m-1`.
fn check_zeros(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let mut chb = Chb::new(m);
        for j in 1..=b.j_max {
            for p in 0..m {
                for r in 1..=p {
                    let (n, k) = ((m * j - r) as i64, (m * j - p) as i64);
                    let params = Params::m(m).n(n).k(k).j(j).p(p).r(r);
                    t.eq(params, &chb.at(n, k)?, &BigInt::zero());
                }
            }
        }
    }
    Ok(())
}

/// `chb{m(j-1)+p}{m(j-1)}_m = chb{mj}{mj-p}_m = j^p` for `0 <= p <= m`.
fn check_jp_boundary(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let mut chb = Chb::new(m);
        for j in 1..=b.j_max {
            for p in 0..=m {
                let rhs = num_traits::pow(big(j), p);
                let (n1, k1) = ((m * (j - 1) + p) as i64, (m * (j - 1)) as i64);
                t.eq(Params::m(m).n(n1).k(k1).j(j).p(p), &chb.at(n1, k1)?, &rhs);
                let (n2, k2) = ((m * j) as i64, (m * j - p) as i64);
                t.eq(Params::m(m).n(n2).k(k2).j(j).p(p), &chb.at(n2, k2)?, &rhs);
            }
        }
    }
    Ok(())
}

/// `chb{mj+1}{mj-1}_m = m j (j+1) / 2`.
fn check_mtj(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let mut chb = Chb::new(m);
        for j in 1..=b.j_max {
            let (n, k) = ((m * j + 1) as i64, (m * j) as i64 - 1);
            let rhs = big(m * j * (j + 1) / 2);
            t.eq(Params::m(m).n(n).k(k).j(j), &chb.at(n, k)?, &rhs);
        }
    }
    Ok(())
}

/// `chb{mj+2}{mj-2}_m = m C(j+2,4) [j>1] + C(m,2) C(j+1,2)^2` for `m >= 2`.
fn check_four_squares(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms().filter(|&m| m >= 2) {
        let mut chb = Chb::new(m);
        for j in 1..=b.j_max {
            let (n, k) = ((m * j + 2) as i64, (m * j) as i64 - 2);
            let (mi, ji) = (m as i64, j as i64);
            let mut rhs = binomial(mi, 2) * num_traits::pow(binomial(ji + 1, 2), 2);
            if j > 1 {
                rhs += big(mi) * binomial(ji + 2, 4);
            }
            t.eq(Params::m(m).n(n).k(k).j(j), &chb.at(n, k)?, &rhs);
        }
    }
    Ok(())
}

/// Row sums of the `m = 3` tiling triangle against their order-four recurrence.
fn check_b3(b: &Bounds, t: &mut Tally) -> Result<()> {
    if !b.has_m(3) {
        return Ok(());
    }
    let mut chb = Chb::new(3);
    let seq = b3_sequence(b.board_max + 1);
    for (n, want) in seq.iter().enumerate() {
        let n = n as i64;
        let mut lhs = BigInt::zero();
        for k in 0..=n {
            lhs += chb.at(n, k)?;
        }
        t.eq(Params::m(3).n(n), &lhs, want);
    }
    Ok(())
}

/// The `m = 3` entry recurrence, including the delta rows and a margin of
/// indices outside the triangle.
fn check_rr3(b: &Bounds, t: &mut Tally) -> Result<()> {
    if !b.has_m(3) {
        return Ok(());
    }
    let mut chb = Chb::new(3);
    let last = b.board_max as i64;
    let mut table: Vec<Vec<BigInt>> = Vec::new();
    for n in 0..=last {
        table.push((0..=n).map(|k| chb.at(n, k)).collect::<Result<_>>()?);
    }
    for n in -2..=last {
        for k in -2..=n.max(0) + 2 {
            let rhs = rr3_rhs(|a, c| crate::tiling::lookup(&table, a, c), n, k);
            let lhs = chb.at(n, k)?;
            t.eq(Params::m(3).n(n).k(k), &lhs, &rhs);
        }
    }
    Ok(())
}

/// `chb{n}{k}_m - chb{n-1}{k}_m - chb{n-1}{k-1}_m` for `n >= (m-1)k + 1`.
fn pascal_defects(m: usize, n_max: usize, t: &mut Tally) -> Result<()> {
    let mut chb = Chb::new(m);
    for n in 1..=n_max as i64 {
        for k in 0..=n {
            if n < (m as i64 - 1) * k + 1 {
                continue;
            }
            let lhs = chb.at(n, k)?;
            let rhs = chb.at(n - 1, k)? + chb.at(n - 1, k - 1)?;
            t.eq(Params::m(m).n(n).k(k), &lhs, &rhs);
        }
    }
    Ok(())
}

fn check_pascal_region(b: &Bounds, t: &mut Tally) -> Result<()> {
    if !b.has_m(3) {
        return Ok(());
    }
    pascal_defects(3, b.conj_n_max, t)
}

fn check_conjecture(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        pascal_defects(m, b.conj_n_max, t)?;
    }
    Ok(())
}

/// Closed form against Pascal's recurrence and row-reversed Riordan extraction.
fn check_genterm(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let tri = Family1Triangle::new(m)?;
        for n in 0..=b.board_max {
            let closed = tri.row(n, Family1Method::Closed)?;
            for other in [Family1Method::Recurrence, Family1Method::Riordan] {
                let row = tri.row(n, other)?;
                for (k, (a, c)) in closed.iter().zip(&row).enumerate() {
                    t.eq(Params::m(m).n(n as i64).k(k as i64), a, c);
                }
            }
        }
    }
    Ok(())
}

/// Row and antidiagonal sums: generating function, both recurrences and
/// direct summation of the triangle.
fn check_gf_sums(b: &Bounds, t: &mut Tally) -> Result<()> {
    let last = b.board_max;
    for m in b.ms() {
        let tri = Family1Triangle::new(m)?;
        let rows: Vec<Vec<BigInt>> = (0..=last)
            .map(|n| tri.row(n, Family1Method::Recurrence))
            .collect::<Result<_>>()?;
        let row_gf = row_sum_series(m, last)?;
        let row_rec = sum_recurrences(m, SumKind::Row, last)?;
        let adiag_gf = antidiag_sum_series(m, last)?;
        let adiag_rec = sum_recurrences(m, SumKind::Antidiag, last)?;
        for n in 0..=last {
            let params = Params::m(m).n(n as i64);
            let direct: BigInt = rows[n].iter().sum();
            t.eq(params, &direct, row_gf.coeff(n));
            t.eq(params, &direct, &row_rec[n]);
            let adiag: BigInt = (0..=n / 2).map(|k| rows[n - k][k].clone()).sum();
            t.eq(params, &adiag, adiag_gf.coeff(n));
            t.eq(params, &adiag, &adiag_rec[n]);
        }
    }
    Ok(())
}

fn check_bivar(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let tri = Family1Triangle::new(m)?;
        let g = bivariate_gf(m, b.board_max)?;
        for n in 0..=b.board_max {
            let row = tri.row(n, Family1Method::Recurrence)?;
            for (k, v) in row.iter().enumerate() {
                t.eq(Params::m(m).n(n as i64).k(k as i64), &g.coeff(n, k), v);
            }
        }
    }
    Ok(())
}

/// `[x^k] f_j^(m-r) f_{j+1}^r` against enumeration of `(n + k)`-boards.
fn check_poly_theorem(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let tri = Family2Triangle::new(m)?;
        for len in 0..=b.board_max {
            let (j, r) = (len / m, len % m);
            let poly = fib_product_power(j, m, r)?;
            for k in 0..=len / 2 {
                let n = len - k;
                let lhs = tri.entry(n, k, Family2Method::Oracle)?;
                t.eq(
                    Params::m(m).n(n as i64).k(k as i64),
                    &lhs,
                    &poly.coeff(k as i64),
                );
            }
        }
    }
    Ok(())
}

/// Brute-force restricted subset counts against `chb{n+m-k}{k}_m`, the
/// product polynomial `f_{j+1}^(m-r) f_{j+2}^r` and its value at 1.
fn check_subsets(b: &Bounds, t: &mut Tally) -> Result<()> {
    for m in b.ms() {
        let mut chb = Chb::new(m);
        for n in 0..=b.board_max {
            let counts = count_restricted_by_size(n, m)?;
            let (j, r) = (n / m, n % m);
            let poly = fib_product_power(j + 1, m, r)?;
            for (k, c) in counts.iter().enumerate() {
                let params = Params::m(m).n(n as i64).k(k as i64);
                t.eq(params, c, &chb.at((n + m - k) as i64, k as i64)?);
                t.eq(params, c, &poly.coeff(k as i64));
            }
            let total: BigInt = counts.iter().sum();
            t.eq(
                Params::m(m).n(n as i64).j(j).r(r),
                &total,
                &count_all_sizes(n, m)?,
            );
        }
    }
    Ok(())
}
