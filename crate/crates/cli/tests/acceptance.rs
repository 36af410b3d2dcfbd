//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
//! only. Runs without the libtest harness so the lines are always printed.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use trifam::detect::{derive_pq, detect, MetatileSpec, Orientation, Verdict as Dv};
use trifam::fibpoly::{fib_poly, fibonacci, metatile_poly, PolySystem};
use trifam::identities::{self, Bounds, Verdict};
use trifam::poly::IntPolynomial;
use trifam::riordan::{
    a_sequence, antidiag_sum_series, antidiag_sums_by_difference, antidiag_sums_by_odd_lags,
    binomial, row_sum_series, row_sums_by_difference, row_sums_by_window, Family1Method,
    Family1Triangle, RiordanArray,
};
use trifam::series::TruncatedSeries;
use trifam::subsets::{list_restricted, subset_to_tiling, tiling_to_subset};
use trifam::tiling::{
    bij_from_tuple, bij_to_tuple, for_each_tiling, Family2Method, Family2Triangle, Placement,
    Tiling,
};
use trifam_cli::format::{parse_bfile, render_bfile};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn trifam(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_trifam"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn failed: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "`trifam {}` exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || {
        format!(
            "{what} took {:.2} s, budget {:.0} s",
            took.as_secs_f64(),
            limit.as_secs_f64()
        )
    })
}

fn figures() -> Outcome {
    let cases: [(&str, &[&str]); 6] = [
        (
            "pascal_m2.txt",
            &["--family", "pascal", "--m", "2", "--rows", "12"],
        ),
        (
            "pascal_m2.txt",
            &["--family", "tiling", "--m", "2", "--rows", "12"],
        ),
        (
            "pascal_m3.txt",
            &["--family", "pascal", "--m", "3", "--rows", "12"],
        ),
        (
            "pascal_m4.txt",
            &["--family", "pascal", "--m", "4", "--rows", "12"],
        ),
        (
            "tiling_m3.txt",
            &["--family", "tiling", "--m", "3", "--rows", "13"],
        ),
        (
            "tiling_m4.txt",
            &["--family", "tiling", "--m", "4", "--rows", "13"],
        ),
    ];
    for (golden, args) in cases {
        let want = std::fs::read_to_string(crate_dir().join("tests/golden").join(golden))
            .map_err(|e| format!("{golden}: {e}"))?;
        let start = Instant::now();
        let mut full = vec!["triangle"];
        full.extend_from_slice(args);
        let got = trifam(&full)?;
        within(Duration::from_secs(1), start, golden)?;
        ensure(got == want, || {
            format!("`trifam {}` differs from {golden}", full.join(" "))
        })?;
    }
    Ok("5 figures byte-identical, tiling m=2 also matches the m=2 figure".into())
}

fn family1_methods() -> Outcome {
    let start = Instant::now();
    let mut entries = 0;
    for m in 1..=6 {
        let tri = Family1Triangle::new(m).map_err(|e| e.to_string())?;
        for n in 0..=40 {
            let want = tri
                .row(n, Family1Method::Recurrence)
                .map_err(|e| e.to_string())?;
            for method in Family1Method::ALL {
                let got = tri.row(n, method).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!("m={m} n={n}: {} disagrees with recurrence", method.name())
                })?;
            }
            entries += n + 1;
        }
    }
    within(Duration::from_secs(10), start, "first family")?;
    Ok(format!("{entries} entries, 4 methods each"))
}

fn family2_methods() -> Outcome {
    let start = Instant::now();
    let mut entries = 0;
    for m in 1..=5 {
        let tri = Family2Triangle::new(m).map_err(|e| e.to_string())?;
        for n in 0..=22usize {
            for k in 0..=n.min(22 - n) {
                let want = tri
                    .entry(n, k, Family2Method::Oracle)
                    .map_err(|e| e.to_string())?;
                for method in Family2Method::ALL.into_iter().filter(|x| x.supports(m)) {
                    let got = tri.entry(n, k, method).map_err(|e| e.to_string())?;
                    ensure(got == want, || {
                        format!(
                            "m={m} n={n} k={k}: {} gives {got}, oracle {want}",
                            method.name()
                        )
                    })?;
                }
                entries += 1;
            }
        }
    }
    within(Duration::from_secs(30), start, "second family")?;
    Ok(format!(
        "{entries} entries, oracle vs poly/transfer/pascal-region/rr3"
    ))
}

fn sum_laws() -> Outcome {
    let start = Instant::now();
    let count = 60;
    for m in 1..=5 {
        let tri = Family1Triangle::new(m).map_err(|e| e.to_string())?;
        let rows: Vec<Vec<BigInt>> = (0..count)
            .map(|n| tri.row(n, Family1Method::Recurrence))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let direct_row: Vec<BigInt> = rows.iter().map(|r| r.iter().sum()).collect();
        let direct_adiag: Vec<BigInt> = (0..count)
            .map(|n| (0..=n / 2).map(|k| rows[n - k][k].clone()).sum())
            .collect();
        let row_gf = row_sum_series(m, count - 1).map_err(|e| e.to_string())?;
        let adiag_gf = antidiag_sum_series(m, count - 1).map_err(|e| e.to_string())?;
        let sources: [(&str, Vec<BigInt>, &Vec<BigInt>); 6] = [
            ("row gf", row_gf.coeffs().to_vec(), &direct_row),
            (
                "row difference recurrence",
                row_sums_by_difference(m, count),
                &direct_row,
            ),
            (
                "row window recurrence",
                row_sums_by_window(m, count),
                &direct_row,
            ),
            ("antidiagonal gf", adiag_gf.coeffs().to_vec(), &direct_adiag),
            (
                "antidiagonal difference recurrence",
                antidiag_sums_by_difference(m, count),
                &direct_adiag,
            ),
            (
                "antidiagonal odd-lag recurrence",
                antidiag_sums_by_odd_lags(m, count),
                &direct_adiag,
            ),
        ];
        for (name, got, want) in sources {
            ensure(&got == want, || {
                format!("m={m}: {name} disagrees with direct summation")
            })?;
        }
        if m == 1 {
            for n in 0..count {
                ensure(direct_row[n] == num_traits::pow(BigInt::from(2), n), || {
                    format!("m=1 row sum {n} is not 2^{n}")
                })?;
                ensure(direct_adiag[n] == fibonacci(n as i64), || {
                    format!("m=1 antidiagonal sum {n} is not a Fibonacci number")
                })?;
            }
        }
    }
    within(Duration::from_secs(5), start, "sum laws")?;
    Ok("m=1..5, 60 terms, gf = both recurrences = direct sums".into())
}

fn identity_harness() -> Outcome {
    let start = Instant::now();
    let report = identities::verify_all(&Bounds::default());
    let mut evidence = Vec::new();
    for c in &report {
        match (&c.verdict, identities::is_conjecture(c.name)) {
            (Verdict::Pass, false) => {}
            (Verdict::Evidence, true) => evidence.push(c.name),
            (v, _) => return Err(format!("{}: {}", c.name, v.name())),
        }
    }
    let conj = identities::verify(
        "conjecture",
        &Bounds {
            m_min: 4,
            m_max: 5,
            conj_n_max: 24,
            ..Bounds::default()
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(
        conj.verdict == Verdict::Evidence && conj.checked > 0,
        || format!("conjecture for m in 4..=5 gave {}", conj.verdict.name()),
    )?;
    within(Duration::from_secs(60), start, "identity harness")?;
    Ok(format!(
        "{} identities pass, {} evidence-only ({} instances for m=4,5)",
        report.len() - evidence.len(),
        evidence.join(", "),
        conj.checked
    ))
}

fn bijections() -> Outcome {
    let start = Instant::now();
    let mut tilings = 0usize;
    let mut failure: Option<String> = None;
    for m in 1..=4 {
        for len in 0..=12 {
            for_each_tiling(len, m, |tiles: &[Placement]| {
                if failure.is_some() {
                    return;
                }
                tilings += 1;
                let t = Tiling::new(len, m, tiles.to_vec()).expect("enumerated tiling");
                let tt = bij_to_tuple(&t).expect("tuple image");
                let ok = bij_from_tuple(&tt).ok() == Some(t.clone())
                    && tt.domino_count() == t.fence_count()
                    && tt.square_count() == t.square_count();
                let ok = ok
                    && (len < m || {
                        let s = tiling_to_subset(&t).expect("subset image");
                        s.elements.len() == t.fence_count()
                            && subset_to_tiling(&s).ok() == Some(t.clone())
                    });
                if !ok {
                    failure = Some(format!("round trip failed for {t} (m={m})"));
                }
            })
            .map_err(|e| e.to_string())?;
        }
    }
    if let Some(f) = failure {
        return Err(f);
    }
    let mut subsets = 0usize;
    for m in 1..=4 {
        for n in 0..=12 {
            for s in list_restricted(n, m, None).map_err(|e| e.to_string())? {
                let t = subset_to_tiling(&s).map_err(|e| e.to_string())?;
                ensure(
                    t.fence_count() == s.elements.len() && t.board_length == n + m,
                    || format!("subset {:?} (n={n}, m={m}) maps to {t}", s.elements),
                )?;
                ensure(tiling_to_subset(&t).ok() == Some(s.clone()), || {
                    format!("subset {:?} (n={n}, m={m}) does not round-trip", s.elements)
                })?;
                subsets += 1;
            }
        }
    }
    within(Duration::from_secs(20), start, "bijections")?;
    Ok(format!(
        "{tilings} tilings and {subsets} subsets round-trip"
    ))
}

fn a_sequences() -> Outcome {
    let start = Instant::now();
    let q = TruncatedSeries::geometric(1, 33).shift_up(1);
    let a = a_sequence(&q).map_err(|e| e.to_string())?;
    let mut want = vec![BigInt::zero(); 33];
    want[0] = BigInt::one();
    want[1] = BigInt::one();
    ensure(a.order() == 32 && a.coeffs() == want.as_slice(), || {
        format!("a_sequence(x/(1-x)) = {a}")
    })?;
    for m in 1..=6 {
        let arr = RiordanArray::family1(m, 30).map_err(|e| e.to_string())?;
        let a = a_sequence(arr.q()).map_err(|e| e.to_string())?;
        let d = |n: usize, k: usize| -> BigInt {
            if k > n {
                BigInt::zero()
            } else {
                arr.entry(n, k).expect("within order")
            }
        };
        for n in 1..=24 {
            for k in 1..=n {
                let rhs: BigInt = (0..=n - k).map(|j| a.coeff(j) * d(n - 1, k - 1 + j)).sum();
                ensure(d(n, k) == rhs, || {
                    format!("m={m}: A-sequence relation fails at ({n}, {k})")
                })?;
            }
        }
    }
    within(Duration::from_secs(1), start, "A-sequence")?;
    Ok("A(x) = 1 + x to order 32; entry relation holds for m=1..6, n<=24".into())
}

fn load_spec(name: &str) -> Result<MetatileSpec, String> {
    let path = crate_dir().join("specs").join(name);
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    MetatileSpec::from_json(&text).map_err(|e| format!("{name}: {e}"))
}

fn detector() -> Outcome {
    let start = Instant::now();
    let m1 = detect(&load_spec("m1.json")?);
    ensure(
        m1.riordan == Dv::Yes && m1.row_reversed_riordan == Dv::Yes,
        || "m=1 system is not Riordan both ways".into(),
    )?;

    let m2 = load_spec("m2.json")?;
    ensure(detect(&m2).row_reversed_riordan == Dv::Yes, || {
        "m=2 not row-reversed Riordan".into()
    })?;
    let (p, q) = derive_pq(&m2, Orientation::RowReversed, 20).map_err(|e| e.to_string())?;
    let arr = RiordanArray::new(p, q).map_err(|e| e.to_string())?;
    let tri = Family2Triangle::new(2).map_err(|e| e.to_string())?;
    for n in 0..=20 {
        for k in 0..=n {
            let got = arr.row_reversed_entry(n, k).map_err(|e| e.to_string())?;
            let want = tri
                .entry(n, k, Family2Method::Poly)
                .map_err(|e| e.to_string())?;
            ensure(got == want, || {
                format!("derived m=2 array differs at ({n}, {k})")
            })?;
        }
    }

    for m in 3..=5 {
        for spec in [
            load_spec(&format!("m{m}_truncated.json"))?,
            MetatileSpec::fence_system(m, m + 2).map_err(|e| e.to_string())?,
        ] {
            let r = detect(&spec);
            let filled = r.witnesses.iter().any(|w| {
                w.orientation == Orientation::RowReversed
                    && w.metatile.is_some_and(|t| t.size == m && t.specials == 1)
            });
            ensure(r.row_reversed_riordan == Dv::No && filled, || {
                format!("m={m}: expected row-reversed no with the filled fence as witness")
            })?;
        }
    }
    within(Duration::from_secs(5), start, "detector")?;
    Ok(
        "m=1 yes/yes; m=2 row-reversed yes, (p,q) matches n<=20; m=3..5 no with filled fence"
            .into(),
    )
}

/// Weighted count of compositions of `n` into parts of the given
/// `(length, specials)` kinds, by direct enumeration.
fn compositions(n: usize, parts: &[(usize, usize)], specials: usize, acc: &mut Vec<BigInt>) {
    if n == 0 {
        if acc.len() <= specials {
            acc.resize(specials + 1, BigInt::zero());
        }
        acc[specials] += 1;
        return;
    }
    for &(len, s) in parts {
        if len <= n {
            compositions(n - len, parts, specials + s, acc);
        }
    }
}

fn fibonacci_suite() -> Outcome {
    let start = Instant::now();
    for n in 0..=30i64 {
        let f = fib_poly(n);
        for k in 0..=n {
            ensure(f.coeff(k) == binomial(n - k, k), || {
                format!("[x^{k}] f_{n} is not C(n-k, k)")
            })?;
        }
        ensure(f.eval(&BigInt::one()) == fibonacci(n), || {
            format!("f_{n}(1) is not f_{n}")
        })?;
        ensure(f.degree() == Some((n / 2) as usize), || {
            format!("deg f_{n} != {}", n / 2)
        })?;
    }
    let sd = PolySystem::square_domino();
    for n in 0..=64 {
        ensure(metatile_poly(&sd, n) == fib_poly(n), || {
            format!("square/domino metatile polynomial differs from f_{n}")
        })?;
    }
    let parts = [(1, 0), (2, 1), (3, 3)];
    let trib = PolySystem::from_pairs(&parts).map_err(|e| e.to_string())?;
    for n in 0..=18usize {
        let mut acc = Vec::new();
        compositions(n, &parts, 0, &mut acc);
        let want = IntPolynomial::from_coeffs(acc);
        ensure(metatile_poly(&trib, n as i64) == want, || {
            format!("tribonacci polynomial {n} differs from composition count")
        })?;
    }
    within(Duration::from_secs(10), start, "Fibonacci suite")?;
    Ok("f_n coefficients, values, degrees; metatile polynomials n<=64 and tribonacci n<=18".into())
}

fn bfile_format() -> Outcome {
    let start = Instant::now();
    let want = "0 1\n1 2\n2 4\n3 8\n4 16\n5 32\n";
    let got = trifam(&[
        "sequence", "row-sums", "--family", "pascal", "--m", "1", "--count", "6", "--format",
        "bfile", "--offset", "0",
    ])?;
    ensure(got == want, || format!("row sums b-file was {got:?}"))?;
    let samples: Vec<(Vec<BigInt>, i64)> = vec![
        (vec![], 0),
        (
            (0..40)
                .map(|i| num_traits::pow(BigInt::from(-3), i))
                .collect(),
            -5,
        ),
        ((0..100).map(fibonacci).collect(), 1),
        (
            vec![BigInt::parse_bytes(b"98765432109876543210987654321", 10).unwrap()],
            7,
        ),
    ];
    for (terms, offset) in samples {
        let text = render_bfile(&terms, offset);
        ensure(text.is_empty() || text.ends_with('\n'), || {
            "missing final newline".into()
        })?;
        for line in text.lines() {
            ensure(line.split(' ').count() == 2 && !line.ends_with(' '), || {
                format!("bad b-file line {line:?}")
            })?;
        }
        let parsed = parse_bfile(&text).map_err(|e| e.to_string())?;
        let expect: Vec<(i64, BigInt)> = terms
            .iter()
            .enumerate()
            .map(|(i, v)| (offset + i as i64, v.clone()))
            .collect();
        ensure(parsed == expect, || {
            format!("round trip failed at offset {offset}")
        })?;
    }
    within(Duration::from_secs(1), start, "b-file")?;
    Ok("CLI output bit-exact; render/parse round-trips".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("figure reproduction", figures),
        ("first family cross-method equality", family1_methods),
        ("second family cross-method equality", family2_methods),
        ("row and antidiagonal sum laws", sum_laws),
        ("identity harness", identity_harness),
        ("bijection round trips", bijections),
        ("A-sequence", a_sequences),
        ("Riordan detector", detector),
        ("Fibonacci polynomial suite", fibonacci_suite),
        ("b-file output", bfile_format),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
