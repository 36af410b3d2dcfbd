use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::json;
use trifam::detect::{detect_and_derive, first_pq_mismatch, MetatileSpec, Orientation, Witness};
use trifam::fibpoly::{fib_poly, fib_product_power, fibonacci};
use trifam::identities::{self, Bounds, IdentityCheck, Verdict};
use trifam::poly::IntPolynomial;
use trifam::riordan::{antidiag_sum_series, row_sum_series, sum_recurrences, SumKind};
use trifam::series::TruncatedSeries;
use trifam::subsets::{count_all_sizes, count_restricted_by_size, list_restricted};
use trifam::tiling::{
    b3_sequence, count_by_fences_enumerated, enumerate_tilings, fence_count_vector, Family2Method,
    Family2Triangle, ENUMERATION_LIMIT,
};
use trifam::triangle::{Family, Method, TriangleHandle};

use crate::format::{
    json_int, json_ints, render_bfile, render_sequence_csv, render_sequence_table, render_table,
    render_triangle_bfile, render_triangle_csv, OutputFormat,
};
use crate::{
    Cli, CliError, Command, DetectArgs, FamilyArg, FibpolyArgs, OracleArgs, SequenceArgs,
    SequenceKind, SubsetsArgs, TriangleArgs, VerifyArgs,
};

/// Largest row index for `triangle`.
pub const MAX_ROWS: usize = 200;
/// Largest term count for `sequence`.
pub const MAX_TERMS: usize = 500;
/// Largest board for `oracle --list`.
pub const LIST_LIMIT: usize = 14;

/// Text for standard output and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            exit_code: 0,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Triangle(a) => triangle(a).map(Output::ok),
        Command::Sequence(a) => sequence(a).map(Output::ok),
        Command::Oracle(a) => oracle(a).map(Output::ok),
        Command::Subsets(a) => subsets(a).map(Output::ok),
        Command::Detect(a) => detect(a).map(Output::ok),
        Command::Verify(a) => verify(a),
        Command::Fibpoly(a) => fibpoly(a).map(Output::ok),
    }
}

fn guard(what: &str, limit: usize, got: usize) -> CliResult<()> {
    if got > limit {
        return Err(CliError::Guard(format!(
            "{what} is {got}; the limit is {limit}"
        )));
    }
    Ok(())
}

fn positive_m(m: usize) -> CliResult<()> {
    if m == 0 {
        return Err(CliError::Usage("--m must be positive".into()));
    }
    Ok(())
}

fn triangle(a: &TriangleArgs) -> CliResult<String> {
    positive_m(a.m)?;
    guard("--rows", MAX_ROWS, a.rows)?;
    let h = TriangleHandle::new(a.family.into(), a.m)?;
    let methods = match a.method.as_deref() {
        None => vec![h.default_method()],
        Some("all") => h.methods(),
        Some(name) => vec![h.parse_method(name)?],
    };
    let rows = h.rows(a.rows, methods[0])?;
    for &other in &methods[1..] {
        let alt = h.rows(a.rows, other)?;
        let diff = triangle_diff(&rows, &alt);
        if !diff.is_empty() {
            return Err(CliError::Verification(format!(
                "methods {} and {} disagree:\n{}",
                methods[0],
                other,
                diff.join("\n")
            )));
        }
    }
    let method_label = match a.method.as_deref() {
        Some("all") => "all".to_string(),
        _ => methods[0].name().to_string(),
    };
    Ok(match a.format {
        OutputFormat::Table => render_table(&rows),
        OutputFormat::Csv => render_triangle_csv(&rows),
        OutputFormat::Bfile => render_triangle_bfile(&rows, a.offset),
        OutputFormat::Json => {
            let v = json!({
                "family": Family::from(a.family).name(),
                "m": a.m,
                "method": method_label,
                "rows": rows.iter().map(|r| json_ints(r)).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
    })
}

fn triangle_diff(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<String> {
    let mut out = Vec::new();
    for (n, (ra, rb)) in a.iter().zip(b).enumerate() {
        for (k, (x, y)) in ra.iter().zip(rb).enumerate() {
            if x != y {
                out.push(format!("  ({n}, {k}): {x} vs {y}"));
            }
        }
    }
    out
}

/// Named ways to produce a sequence for one `(kind, family, m)`.
fn sequence_methods(
    kind: SequenceKind,
    family: FamilyArg,
    m: usize,
) -> CliResult<Vec<&'static str>> {
    Ok(match (kind, family) {
        (SequenceKind::TotalTilings, FamilyArg::Pascal) => {
            return Err(CliError::Usage(
                "total-tilings applies to the tiling family".into(),
            ))
        }
        (_, FamilyArg::Pascal) => vec!["gf", "recurrence", "direct"],
        (SequenceKind::AntidiagSums, FamilyArg::Tiling) => vec!["direct", "transfer", "closed"],
        (_, FamilyArg::Tiling) if m == 3 => vec!["direct", "transfer", "recurrence"],
        (_, FamilyArg::Tiling) => vec!["direct", "transfer"],
    })
}

fn sequence_terms(
    kind: SequenceKind,
    family: FamilyArg,
    m: usize,
    count: usize,
    method: &str,
) -> CliResult<Vec<BigInt>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let last = count - 1;
    let antidiag = kind == SequenceKind::AntidiagSums;
    let terms = match (family, method) {
        (FamilyArg::Pascal, "gf") => {
            let s = if antidiag {
                antidiag_sum_series(m, last)?
            } else {
                row_sum_series(m, last)?
            };
            s.coeffs().to_vec()
        }
        (FamilyArg::Pascal, "recurrence") => {
            let k = if antidiag {
                SumKind::Antidiag
            } else {
                SumKind::Row
            };
            sum_recurrences(m, k, last)?
        }
        (_, "direct") => {
            let h = TriangleHandle::new(family.into(), m)?;
            let method = h.default_method();
            if antidiag {
                h.antidiag_sums(count, method)?
            } else {
                h.row_sums(count, method)?
            }
        }
        (FamilyArg::Tiling, "transfer") => {
            let h = TriangleHandle::new(Family::Tiling, m)?;
            let method = Method::Second(Family2Method::Transfer);
            if antidiag {
                // antidiagonal n collects the tilings of the n-board
                (0..count)
                    .map(|n| Ok(fence_count_vector(n, m)?.into_iter().sum()))
                    .collect::<trifam::error::Result<_>>()?
            } else {
                h.row_sums(count, method)?
            }
        }
        (FamilyArg::Tiling, "closed") => (0..count)
            .map(|n| {
                let (j, r) = ((n / m) as i64, n % m);
                num_traits::pow(fibonacci(j), m - r) * num_traits::pow(fibonacci(j + 1), r)
            })
            .collect(),
        (FamilyArg::Tiling, "recurrence") => b3_sequence(count),
        _ => unreachable!("method list checked by caller"),
    };
    Ok(terms)
}

fn sequence(a: &SequenceArgs) -> CliResult<String> {
    positive_m(a.m)?;
    guard("--count", MAX_TERMS, a.count)?;
    let available = sequence_methods(a.kind, a.family, a.m)?;
    let chosen: Vec<&str> = match a.method.as_deref() {
        None => vec![available[0]],
        Some("all") => available.clone(),
        Some(name) => match available.iter().find(|&&x| x == name) {
            Some(&x) => vec![x],
            None => {
                return Err(CliError::Usage(format!(
                    "method `{name}` is not available here (valid: {})",
                    available.join(", ")
                )))
            }
        },
    };
    let terms = sequence_terms(a.kind, a.family, a.m, a.count, chosen[0])?;
    for &other in &chosen[1..] {
        let alt = sequence_terms(a.kind, a.family, a.m, a.count, other)?;
        if let Some(i) = (0..terms.len()).find(|&i| terms[i] != alt[i]) {
            return Err(CliError::Verification(format!(
                "methods {} and {other} disagree at term {}: {} vs {}",
                chosen[0],
                a.offset + i as i64,
                terms[i],
                alt[i]
            )));
        }
    }
    Ok(match a.format {
        OutputFormat::Table => render_sequence_table(&terms, a.offset),
        OutputFormat::Csv => render_sequence_csv(&terms, a.offset),
        OutputFormat::Bfile => render_bfile(&terms, a.offset),
        OutputFormat::Json => {
            let kind = match a.kind {
                SequenceKind::RowSums => "row_sums",
                SequenceKind::AntidiagSums => "antidiag_sums",
                SequenceKind::TotalTilings => "total_tilings",
            };
            let v = json!({
                "kind": kind,
                "family": Family::from(a.family).name(),
                "m": a.m,
                "method": if chosen.len() > 1 { "all" } else { chosen[0] },
                "offset": a.offset,
                "terms": json_ints(&terms),
            });
            format!("{v}\n")
        }
    })
}

fn oracle(a: &OracleArgs) -> CliResult<String> {
    positive_m(a.m)?;
    if a.list {
        guard("--board-length for listing", LIST_LIMIT, a.board_length)?;
        let tilings = enumerate_tilings(a.board_length, a.m)?;
        return Ok(match a.format {
            OutputFormat::Json => {
                let v: Vec<String> = tilings.iter().map(ToString::to_string).collect();
                format!(
                    "{}\n",
                    json!({ "m": a.m, "board_length": a.board_length, "tilings": v })
                )
            }
            _ => tilings.iter().map(|t| format!("{t}\n")).collect(),
        });
    }
    guard("--board-length", ENUMERATION_LIMIT, a.board_length)?;
    let hist = count_by_fences_enumerated(a.board_length, a.m)?;
    let pairs: Vec<(usize, BigInt)> = hist.into_iter().collect();
    Ok(render_counts(
        &pairs,
        a.format,
        |v| json!({ "m": a.m, "board_length": a.board_length, "counts": v.0, "total": v.1 }),
    ))
}

/// `k count` lines and a total, or a JSON object built by `wrap`.
fn render_counts(
    pairs: &[(usize, BigInt)],
    format: OutputFormat,
    wrap: impl Fn((serde_json::Value, serde_json::Value)) -> serde_json::Value,
) -> String {
    let total: BigInt = pairs.iter().map(|(_, c)| c).sum();
    match format {
        OutputFormat::Json => {
            let counts: serde_json::Map<String, serde_json::Value> = pairs
                .iter()
                .map(|(k, c)| (k.to_string(), json_int(c)))
                .collect();
            format!("{}\n", wrap((counts.into(), json_int(&total))))
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,count\n");
            for (k, c) in pairs {
                let _ = writeln!(out, "{k},{c}");
            }
            out
        }
        OutputFormat::Bfile => {
            let mut out = String::new();
            for (k, c) in pairs {
                let _ = writeln!(out, "{k} {c}");
            }
            out
        }
        OutputFormat::Table => {
            let mut out = String::from("k count\n");
            for (k, c) in pairs {
                let _ = writeln!(out, "{k} {c}");
            }
            let _ = writeln!(out, "total {total}");
            out
        }
    }
}

fn subsets(a: &SubsetsArgs) -> CliResult<String> {
    positive_m(a.m)?;
    if a.list {
        let listed = list_restricted(a.n, a.m, a.k)?;
        return Ok(match a.format {
            OutputFormat::Json => {
                let v: Vec<&Vec<usize>> = listed.iter().map(|s| &s.elements).collect();
                format!("{}\n", json!({ "n": a.n, "m": a.m, "subsets": v }))
            }
            _ => listed
                .iter()
                .map(|s| {
                    let inner: Vec<String> = s.elements.iter().map(ToString::to_string).collect();
                    format!("{{{}}}\n", inner.join(","))
                })
                .collect(),
        });
    }
    let by_size = count_restricted_by_size(a.n, a.m)?;
    // every invocation re-derives the counts from the tiling triangle
    let tri = Family2Triangle::new(a.m)?;
    for (k, c) in by_size.iter().enumerate() {
        let rows = a.n + a.m - k;
        let via = if k > rows {
            BigInt::default()
        } else {
            tri.entry(rows, k, Family2Method::Poly)?
        };
        if &via != c {
            return Err(CliError::Verification(format!(
                "k = {k}: brute force gives {c}, the tiling triangle gives {via}"
            )));
        }
    }
    let total: BigInt = by_size.iter().sum();
    let closed = count_all_sizes(a.n, a.m)?;
    if total != closed {
        return Err(CliError::Verification(format!(
            "total {total} differs from the Fibonacci product {closed}"
        )));
    }
    let pairs: Vec<(usize, BigInt)> = match a.k {
        Some(k) => vec![(k, by_size.get(k).cloned().unwrap_or_default())],
        None => by_size.into_iter().enumerate().collect(),
    };
    Ok(render_counts(
        &pairs,
        a.format,
        |v| json!({ "n": a.n, "m": a.m, "counts": v.0, "total": v.1 }),
    ))
}

fn describe_witness(w: &Witness) -> String {
    let side = match w.orientation {
        Orientation::Direct => "direct",
        Orientation::RowReversed => "row-reversed",
    };
    match w.metatile {
        Some(t) => format!(
            "{side}: metatile (size {}, specials {}): {}",
            t.size,
            t.specials,
            w.clause.describe()
        ),
        None => format!("{side}: {}", w.clause.describe()),
    }
}

fn join_coeffs(s: &TruncatedSeries) -> String {
    s.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn detect(a: &DetectArgs) -> CliResult<String> {
    let path = a.spec.display();
    let text =
        std::fs::read_to_string(&a.spec).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    let spec =
        MetatileSpec::from_json(&text).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    let report = detect_and_derive(&spec, a.truncation)?;
    for (orientation, pair) in [
        (Orientation::Direct, &report.derived_direct),
        (Orientation::RowReversed, &report.derived_row_reversed),
    ] {
        if let Some((p, q)) = pair {
            if let Some((n, k)) = first_pq_mismatch(&spec, orientation, p, q, a.truncation)? {
                return Err(CliError::Verification(format!(
                    "derived (p, q) disagrees with the metatile recursion at ({n}, {k})"
                )));
            }
        }
    }
    if a.format == OutputFormat::Json {
        let mut v = report.to_json();
        v["name"] = json!(spec.name);
        return Ok(format!("{v}\n"));
    }
    let mut out = String::new();
    if let Some(name) = &spec.name {
        let _ = writeln!(out, "name: {name}");
    }
    let _ = writeln!(out, "riordan: {}", report.riordan);
    let _ = writeln!(out, "row-reversed riordan: {}", report.row_reversed_riordan);
    for w in &report.witnesses {
        let _ = writeln!(out, "witness: {}", describe_witness(w));
    }
    for (label, pair) in [
        ("direct", &report.derived_direct),
        ("row-reversed", &report.derived_row_reversed),
    ] {
        if let Some((p, q)) = pair {
            let _ = writeln!(out, "{label} p: {}", join_coeffs(p));
            let _ = writeln!(out, "{label} q: {}", join_coeffs(q));
        }
    }
    Ok(out)
}

/// `a..b`, `a..=b` (both inclusive) or a single `a`.
pub fn parse_m_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Usage(format!("bad --m-range `{s}` (expected a..b or a)"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        Ok((num(lo)?, num(hi)?))
    } else {
        let m = num(s)?;
        Ok((m, m))
    }
}

fn verify(a: &VerifyArgs) -> CliResult<Output> {
    if a.list {
        let names: String = identities::identity_names()
            .iter()
            .map(|n| format!("{n}\n"))
            .collect();
        return Ok(Output::ok(names));
    }
    let mut bounds = Bounds::default();
    if let Some(r) = &a.m_range {
        (bounds.m_min, bounds.m_max) = parse_m_range(r)?;
    }
    if let Some(n) = a.max_n {
        bounds.board_max = n;
    }
    if let Some(j) = a.j_max {
        bounds.j_max = j;
    }
    if let Some(n) = a.conj_max_n {
        bounds.conj_n_max = n;
    }
    let checks = match &a.identity {
        Some(name) => vec![identities::verify(name, &bounds)?],
        None => identities::verify_all(&bounds),
    };
    let failed = checks.iter().any(|c| matches!(c.verdict, Verdict::Fail(_)));
    let errored = checks
        .iter()
        .any(|c| matches!(c.verdict, Verdict::Error(_)));
    let exit_code = if failed {
        2
    } else if errored {
        3
    } else {
        0
    };
    let stdout = if a.format == OutputFormat::Json {
        let v: Vec<_> = checks.iter().map(IdentityCheck::to_json).collect();
        format!("{}\n", serde_json::Value::Array(v))
    } else {
        render_checks(&checks, a.identity.is_some())
    };
    Ok(Output { stdout, exit_code })
}

fn render_checks(checks: &[IdentityCheck], spots: bool) -> String {
    let mut out = String::new();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut tally = [0usize; 4];
    for c in checks {
        let _ = writeln!(
            out,
            "{:<width$}  {} ({} instances)",
            c.name,
            c.verdict.name(),
            c.checked
        );
        match &c.verdict {
            Verdict::Pass => tally[0] += 1,
            Verdict::Evidence => tally[1] += 1,
            Verdict::Fail(x) => {
                tally[2] += 1;
                let _ = writeln!(out, "  counterexample {}: {} != {}", x.params, x.lhs, x.rhs);
            }
            Verdict::Error(e) => {
                tally[3] += 1;
                let _ = writeln!(out, "  error: {e}");
            }
        }
        if spots {
            for s in &c.spot_values {
                let _ = writeln!(out, "  spot {s}");
            }
        }
    }
    let _ = writeln!(
        out,
        "summary: {} pass, {} evidence, {} fail, {} error",
        tally[0], tally[1], tally[2], tally[3]
    );
    out
}

fn fibpoly(a: &FibpolyArgs) -> CliResult<String> {
    let (label, p): (String, IntPolynomial) = match (a.n, a.j, a.m, a.r) {
        (Some(n), _, _, _) => (format!("f_{n}"), fib_poly(n)),
        (None, Some(j), Some(m), Some(r)) => (
            format!("f_{j}^{} f_{}^{r}", m.saturating_sub(r), j + 1),
            fib_product_power(j, m, r)?,
        ),
        _ => {
            return Err(CliError::Usage(
                "give --n, or all of --j, --m and --r".into(),
            ))
        }
    };
    Ok(match a.format {
        OutputFormat::Table => format!("{label} = {p}\n"),
        OutputFormat::Csv => {
            let mut out = String::from("k,coeff\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{k},{c}");
            }
            out
        }
        OutputFormat::Bfile => render_bfile(p.coeffs(), 0),
        OutputFormat::Json => format!(
            "{}\n",
            json!({ "poly": label, "coeffs": json_ints(p.coeffs()) })
        ),
    })
}
