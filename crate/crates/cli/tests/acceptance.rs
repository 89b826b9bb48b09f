//! Acceptance criteria, one result line each. Runs without the libtest
//! harness so the lines show under a plain `cargo test`.

use lambda_count::counting::check_motzkin_bound;
use lambda_count::named::verify_named;
use lambda_count::polynomials::{check_coefficients, expected_degree, interpolate_from_table};
use lambda_count::series::{gf, gf_vs_polynomials, identity_suite, vertical_check};
use lambda_count::terms::crosscheck_counts;
use lambda_count::{
    build_table, CatalogName, CoefficientFamily, CountKind, Limits, PolyKind, PolynomialCache,
    Report, Status,
};
use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

/// Outcome of one criterion. `Erratum` means the statement as written is false
/// because of a misprint, and the corrected statement was verified instead.
enum Verdict {
    Pass(String),
    Erratum(String),
    Fail(String),
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn lcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcount"))
        .args(args)
        .output()
        .expect("run lcount")
}

fn failures(r: &Report) -> String {
    r.checks_with(Status::Fail)
        .take(5)
        .map(|c| format!("{} (expected {}, got {})", c.name, c.expected, c.actual))
        .collect::<Vec<_>>()
        .join("; ")
}

fn table_fixture(kind: &str, max_size: &str, max_free: &str, file: &str) -> Verdict {
    let out = lcount(&[
        "table",
        "--kind",
        kind,
        "--max-size",
        max_size,
        "--max-free",
        max_free,
        "--format",
        "csv",
    ]);
    if !out.status.success() {
        return Verdict::Fail(format!("exit {:?}", out.status.code()));
    }
    if out.stdout == fixture(file).as_bytes() {
        Verdict::Pass(format!("byte-identical to {file}"))
    } else {
        Verdict::Fail(format!("output differs from {file}"))
    }
}

fn c1() -> Verdict {
    table_fixture("T", "18", "7", "table_T_18x7.csv")
}

fn c2() -> Verdict {
    table_fixture("F", "18", "8", "table_F_18x8.csv")
}

fn c3() -> Verdict {
    let limits = Limits::default();
    for (flag, file, count_kind, poly_kind) in [
        ("T", "poly_T_1-18.txt", CountKind::T, PolyKind::T),
        ("NF", "poly_NF_1-18.txt", CountKind::F, PolyKind::Nf),
    ] {
        let expected = fixture(file);
        let mut got = String::new();
        for n in 1..=18 {
            let out = lcount(&["poly", "--kind", flag, "--size", &n.to_string()]);
            got.push_str(&format!("{n}: {}", String::from_utf8_lossy(&out.stdout)));
        }
        if got != expected {
            return Verdict::Fail(format!("poly --kind {flag} differs from {file}"));
        }
        let table = build_table(count_kind, 18, expected_degree(18) + 1, &limits).unwrap();
        let cache = PolynomialCache::build(18);
        for n in 0..=18 {
            match interpolate_from_table(n, &table) {
                Ok(p) if &p == cache.get(poly_kind, n) => {}
                Ok(p) => return Verdict::Fail(format!("interpolated {count_kind} row {n} = {p}")),
                Err(e) => return Verdict::Fail(format!("interpolating {count_kind} row {n}: {e}")),
            }
        }
    }
    Verdict::Pass("36 polynomials match the fixtures; interpolation agrees".into())
}

fn c4() -> Verdict {
    match crosscheck_counts(10, 2, &Limits::default()) {
        Ok(r) if r.passed() => {
            Verdict::Pass(format!("{} checks on n <= 10, m <= 2", r.checks.len()))
        }
        Ok(r) => Verdict::Fail(failures(&r)),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn c5() -> Verdict {
    let bound = check_motzkin_bound(60);
    if !bound.holds() {
        return Verdict::Fail("M_n > T(n+1,0) somewhere".into());
    }
    let strict_tail = bound
        .rows
        .iter()
        .filter(|r| r.n >= 4)
        .all(|r| r.relation == Ordering::Less);
    let eq = bound.equalities();
    let reported = bound.to_report().checks_with(Status::Erratum).count() == 1;
    if strict_tail && eq == [1, 2, 3] && reported {
        Verdict::Pass("holds for n <= 60, strict for n >= 4, equality at 1,2,3 reported".into())
    } else {
        Verdict::Fail(format!(
            "strict for n >= 4: {strict_tail}; equalities {eq:?}"
        ))
    }
}

fn c6() -> Verdict {
    use CoefficientFamily::*;
    let cache = PolynomialCache::build(40);
    let mut r = Report::new("coefficients");
    check_coefficients(
        &cache,
        &[
            TLeadOdd,
            TLeadEven,
            TSecondOdd,
            TSecondEven,
            TThirdOdd,
            NfLeadOdd,
            NfLeadEven,
            NfSecondOdd,
        ],
        &mut r,
    );
    if r.checks.iter().all(|c| c.status == Status::Pass) {
        Verdict::Pass(format!("{} (family, q) pairs with n <= 40", r.checks.len()))
    } else {
        Verdict::Fail(failures(&r))
    }
}

fn c7() -> Verdict {
    let out = lcount(&[
        "verify",
        "--suite",
        "coefficients",
        "--max-size",
        "18",
        "--format",
        "json",
    ]);
    if out.status.code() != Some(0) {
        return Verdict::Fail(format!("exit {:?}", out.status.code()));
    }
    let report: Report = serde_json::from_slice(&out.stdout).expect("report json");
    let errata: Vec<_> = report.checks_with(Status::Erratum).collect();
    let at = |q: usize| {
        errata
            .iter()
            .find(|c| c.name.starts_with(&format!("NF_second_even q={q} ")))
    };
    let (Some(e4), Some(e5)) = (at(4), at(5)) else {
        return Verdict::Fail("no ERRATUM at q = 4 and 5".into());
    };
    if e4.expected != "80"
        || e5.expected != "371"
        || !e4.actual.starts_with("62 ")
        || !e5.actual.starts_with("263 ")
    {
        return Verdict::Fail(format!("{e4:?} / {e5:?}"));
    }
    let cache = PolynomialCache::build(18);
    let sfev = gf(CatalogName::SFev, 9, None).unwrap();
    for q in 0..=9 {
        let n = 2 * q;
        let coeff = lambda_count::polynomials::top_coefficient(cache.get(PolyKind::Nf, n), n, 1);
        if sfev.coeff(q).to_string() != coeff.to_string() {
            return Verdict::Fail(format!(
                "[z^{q}]SFev = {} but polynomial gives {coeff}",
                sfev.coeff(q)
            ));
        }
    }
    Verdict::Pass(
        "SFev agrees for 2q <= 18; printed formula gives 80, 371 vs 62, 263; exit 0".into(),
    )
}

fn c8() -> Verdict {
    let r = identity_suite(64);
    if !r.passed() {
        return Verdict::Fail(failures(&r));
    }
    let errata: Vec<_> = r
        .checks_with(Status::Erratum)
        .map(|c| c.name.clone())
        .collect();
    if errata.is_empty() {
        Verdict::Pass(format!("{} residuals vanish to order 64", r.checks.len()))
    } else {
        Verdict::Erratum(format!(
            "{} checks pass to order 64; printed form nonzero, corrected form zero: {}",
            r.summary.pass,
            errata.join("; ")
        ))
    }
}

fn c9() -> Verdict {
    let r = gf_vs_polynomials(20);
    if r.checks.iter().all(|c| c.status == Status::Pass) {
        Verdict::Pass(format!("{} stream coefficients agree", r.checks.len()))
    } else {
        Verdict::Fail(failures(&r))
    }
}

fn c10() -> Verdict {
    let t = build_table(CountKind::T, 18, 7, &Limits::default()).unwrap();
    let mut errata = Vec::new();
    for m in 0..=6 {
        let r = match vertical_check(&t, m, 17) {
            Ok(r) => r,
            Err(e) => return Verdict::Fail(e.to_string()),
        };
        if !r.passed() {
            return Verdict::Fail(failures(&r));
        }
        // The erratum signature: the printed relation is off by exactly -m z.
        for c in r.checks_with(Status::Erratum) {
            if c.actual != format!("nonzero at z^1: -{m}") {
                return Verdict::Fail(format!("unexpected residual {} at m = {m}", c.actual));
            }
            errata.push(m);
        }
    }
    if errata.is_empty() {
        Verdict::Pass("residual zero for m <= 6".into())
    } else if errata == [1, 2, 3, 4, 5, 6] {
        Verdict::Erratum(
            "as stated, zero only at m = 0; residual is -m z for m = 1..6; \
             z V_m^2 - V_m + z V_(m+1) + m z = 0 holds for all m <= 6"
                .into(),
        )
    } else {
        Verdict::Fail(format!("errata at m = {errata:?}"))
    }
}

fn c11() -> Verdict {
    let r = verify_named(18, 6);
    let inverse = verify_named(14, 6);
    if r.passed() && inverse.passed() {
        Verdict::Pass("inverse transform n <= 14, m <= 6; f(n,0) = T(n,0) n <= 18; support".into())
    } else {
        Verdict::Fail(format!("{} {}", failures(&r), failures(&inverse)))
    }
}

type Criterion = (u32, &'static str, Duration, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "T table 18x7", Duration::from_secs(1), c1),
        (2, "F table 18x8", Duration::from_secs(1), c2),
        (3, "T and NF polynomials n <= 18", Duration::from_secs(5), c3),
        (4, "enumeration oracle", Duration::from_secs(60), c4),
        (5, "Motzkin bound", Duration::from_secs(1), c5),
        (6, "coefficient formulas", Duration::from_secs(30), c6),
        (7, "erratum detection", Duration::from_secs(60), c7),
        (
            8,
            "generating-function identities",
            Duration::from_secs(10),
            c8,
        ),
        (9, "gf vs polynomials", Duration::from_secs(60), c9),
        (10, "vertical relation", Duration::from_secs(1), c10),
        (11, "named variables", Duration::from_secs(10), c11),
    ];
    let mut failed = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let (label, detail) = match verdict {
            _ if elapsed > limit => ("FAIL", format!("took {elapsed:.2?}, limit {limit:?}")),
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Erratum(d) => ("ERRATUM", d),
            Verdict::Fail(d) => ("FAIL", d),
        };
        if label == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2} {label:<7} {title} ({elapsed:.2?}): {detail}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
