//! Decides whether a tiling triangle, or its row-reversed version, is a
//! Riordan array, working only from the metatile list.
//!
//! For metatiles with size `l_i` (board length or tile count) and `s_i`
//! special tiles, the triangle counts satisfy
//! `T(n, k) = [n = k = 0] + sum_i T(n - l_i, k - s_i)`. The triangle is
//! Riordan iff some metatile is `(1, 1)` and none has more than one special
//! tile; the row-reversed triangle is Riordan iff some metatile is `(1, 0)`
//! and every metatile has `l_i - s_i` in `{0, 1}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fibpoly::SizedMetatile;
use crate::riordan::RiordanArray;
use crate::series::TruncatedSeries;
use crate::tiling::fence_metatiles;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeMode {
    /// `size` is the metatile's board length.
    BoardLength,
    /// `size` is the number of tiles in the metatile.
    TileCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetatileEntry {
    pub size: usize,
    pub specials: usize,
}

impl From<MetatileEntry> for SizedMetatile {
    fn from(e: MetatileEntry) -> Self {
        SizedMetatile {
            size: e.size,
            specials: e.specials,
        }
    }
}

/// The JSON document read by the detector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetatileSpec {
    pub mode: SizeMode,
    /// Whether `metatiles` is the full metatile set rather than a prefix of
    /// an infinite family.
    pub complete: bool,
    pub metatiles: Vec<MetatileEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl MetatileSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.metatiles.is_empty() {
            return Err(Error::InvalidSpec("metatile list is empty".into()));
        }
        for (i, t) in self.metatiles.iter().enumerate() {
            if t.size == 0 {
                return Err(Error::InvalidSpec(format!(
                    "metatiles[{i}]: size must be positive"
                )));
            }
            if t.specials > t.size {
                return Err(Error::InvalidSpec(format!(
                    "metatiles[{i}]: {} specials exceed size {}",
                    t.specials, t.size
                )));
            }
        }
        Ok(())
    }

    /// Metatiles of the square and `(1, m-1)`-fence tiling with at most
    /// `max_tiles` tiles, in tile-count mode with the fence as special tile.
    /// Marked complete only for `m <= 2`, where the metatile set is finite.
    pub fn fence_system(m: usize, max_tiles: usize) -> Result<Self> {
        let metatiles = fence_metatiles(m, max_tiles)?
            .into_iter()
            .map(|t| MetatileEntry {
                size: t.tiles,
                specials: t.fences,
            })
            .collect();
        Ok(Self {
            mode: SizeMode::TileCount,
            complete: m <= 2 && max_tiles >= m,
            metatiles,
            name: Some(format!("squares and (1,{})-fences", m - 1)),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Direct,
    RowReversed,
}

/// The individual conditions behind the two verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// Some metatile has size 1 and one special tile.
    SizeOneSpecial,
    /// No metatile has more than one special tile.
    AtMostOneSpecial,
    /// Some metatile has size 1 and no special tile.
    SizeOnePlain,
    /// Every metatile has size minus specials equal to 0 or 1.
    AtMostOnePlain,
}

impl Clause {
    pub fn describe(self) -> &'static str {
        match self {
            Clause::SizeOneSpecial => "needs a size-1 metatile with one special tile",
            Clause::AtMostOneSpecial => "metatile has more than one special tile",
            Clause::SizeOnePlain => "needs a size-1 metatile with no special tile",
            Clause::AtMostOnePlain => "metatile has more than one non-special unit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub orientation: Orientation,
    pub clause: Clause,
    /// The offending metatile; absent when the clause failed because a
    /// required metatile is missing.
    pub metatile: Option<MetatileEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetectReport {
    pub riordan: Verdict,
    pub row_reversed_riordan: Verdict,
    pub witnesses: Vec<Witness>,
    /// `(p, q)` for the direct triangle when it is Riordan and derivation was requested.
    pub derived_direct: Option<(TruncatedSeries, TruncatedSeries)>,
    /// `(p, q)` for the row-reversed triangle likewise.
    pub derived_row_reversed: Option<(TruncatedSeries, TruncatedSeries)>,
}

impl DetectReport {
    pub fn verdict(&self, orientation: Orientation) -> Verdict {
        match orientation {
            Orientation::Direct => self.riordan,
            Orientation::RowReversed => self.row_reversed_riordan,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pair = |d: &Option<(TruncatedSeries, TruncatedSeries)>| {
            d.as_ref().map(|(p, q)| {
                json!({
                    "p": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "q": q.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
        };
        json!({
            "riordan": self.riordan,
            "row_reversed_riordan": self.row_reversed_riordan,
            "witnesses": self.witnesses,
            "derived_direct": pair(&self.derived_direct),
            "derived_row_reversed": pair(&self.derived_row_reversed),
        })
    }
}

/// Effective column offset of a metatile in the given orientation.
fn column_step(t: &MetatileEntry, orientation: Orientation) -> usize {
    match orientation {
        Orientation::Direct => t.specials,
        Orientation::RowReversed => t.size - t.specials,
    }
}

fn judge(spec: &MetatileSpec, orientation: Orientation, witnesses: &mut Vec<Witness>) -> Verdict {
    let (exists, forall) = match orientation {
        Orientation::Direct => (Clause::SizeOneSpecial, Clause::AtMostOneSpecial),
        Orientation::RowReversed => (Clause::SizeOnePlain, Clause::AtMostOnePlain),
    };
    let before = witnesses.len();
    for t in &spec.metatiles {
        if column_step(t, orientation) > 1 {
            witnesses.push(Witness {
                orientation,
                clause: forall,
                metatile: Some(*t),
            });
        }
    }
    if witnesses.len() > before {
        return Verdict::No;
    }
    let has_unit = spec
        .metatiles
        .iter()
        .any(|t| t.size == 1 && column_step(t, orientation) == 1);
    match (has_unit, spec.complete) {
        (true, true) => Verdict::Yes,
        (true, false) => Verdict::Unknown,
        // an unlisted metatile could still supply the missing unit
        (false, false) => Verdict::Unknown,
        (false, true) => {
            witnesses.push(Witness {
                orientation,
                clause: exists,
                metatile: None,
            });
            Verdict::No
        }
    }
}

/// Verdicts and witnesses; no `(p, q)` derivation.
pub fn detect(spec: &MetatileSpec) -> DetectReport {
    let mut witnesses = Vec::new();
    let riordan = judge(spec, Orientation::Direct, &mut witnesses);
    let row_reversed_riordan = judge(spec, Orientation::RowReversed, &mut witnesses);
    DetectReport {
        riordan,
        row_reversed_riordan,
        witnesses,
        derived_direct: None,
        derived_row_reversed: None,
    }
}

/// [`detect`], plus `(p, q)` to order `order` for each orientation judged Riordan.
pub fn detect_and_derive(spec: &MetatileSpec, order: usize) -> Result<DetectReport> {
    let mut report = detect(spec);
    if report.riordan == Verdict::Yes {
        report.derived_direct = Some(derive_pq(spec, Orientation::Direct, order)?);
    }
    if report.row_reversed_riordan == Verdict::Yes {
        report.derived_row_reversed = Some(derive_pq(spec, Orientation::RowReversed, order)?);
    }
    Ok(report)
}

/// `p = 1 / (1 - sum_{b_i = 0} x^{l_i})` and `q = p * sum_{b_i = 1} x^{l_i}`,
/// where `b_i` is the metatile's column step in the requested orientation.
pub fn derive_pq(
    spec: &MetatileSpec,
    orientation: Orientation,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    spec.validate()?;
    if !spec.complete {
        return Err(Error::Precondition(
            "(p, q) needs the complete metatile set".into(),
        ));
    }
    if detect(spec).verdict(orientation) != Verdict::Yes {
        return Err(Error::Precondition(format!(
            "the {} triangle is not a Riordan array",
            match orientation {
                Orientation::Direct => "direct",
                Orientation::RowReversed => "row-reversed",
            }
        )));
    }
    let mut den = TruncatedSeries::one(order);
    let mut step = TruncatedSeries::zero(order);
    for t in &spec.metatiles {
        let mono = TruncatedSeries::monomial(BigInt::one(), t.size, order);
        match column_step(t, orientation) {
            0 => den = &den - &mono,
            _ => step = &step + &mono,
        }
    }
    let p = den.reciprocal()?;
    let q = step.mul(&p);
    Ok((p, q))
}

/// `T(n, k)` for `n <= last` from the metatile recursion, zero outside.
pub fn recursion_counts(spec: &MetatileSpec, last: usize) -> Result<Vec<Vec<BigInt>>> {
    spec.validate()?;
    if !spec.complete {
        return Err(Error::Precondition(
            "recursion counts need the complete metatile set".into(),
        ));
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(last + 1);
    for n in 0..=last {
        let mut row = vec![BigInt::zero(); n + 1];
        if n == 0 {
            row[0] = BigInt::one();
        }
        for t in &spec.metatiles {
            let Some(prev) = n.checked_sub(t.size) else {
                continue;
            };
            for (k, v) in rows[prev].iter().enumerate() {
                row[k + t.specials] += v;
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// First `(n, k)` with `n <= last` where the `(p, q)` array, read in the
/// given orientation, disagrees with the recursion counts.
pub fn first_pq_mismatch(
    spec: &MetatileSpec,
    orientation: Orientation,
    p: &TruncatedSeries,
    q: &TruncatedSeries,
    last: usize,
) -> Result<Option<(usize, usize)>> {
    let counts = recursion_counts(spec, last)?;
    let arr = RiordanArray::new(p.clone(), q.clone())?;
    for (n, row) in counts.iter().enumerate() {
        for (k, want) in row.iter().enumerate() {
            let got = match orientation {
                Orientation::Direct => arr.entry(n, k)?,
                Orientation::RowReversed => arr.row_reversed_entry(n, k)?,
            };
            if &got != want {
                return Ok(Some((n, k)));
            }
        }
    }
    Ok(None)
}
