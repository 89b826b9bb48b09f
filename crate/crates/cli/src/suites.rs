use lambda_count::counting::{self, check_motzkin_bound};
use lambda_count::named::verify_named;
use lambda_count::polynomials::{
    check_coefficients, check_degrees, check_evaluations, closing_identities, expected_degree,
    interpolate_from_table,
};
use lambda_count::series::{
    gf_vs_polynomials_with, identity_suite, nf_second_even_erratum, vertical_check,
};
use lambda_count::terms::crosscheck_counts;
use lambda_count::{
    build_table, CoefficientFamily, CountKind, Limits, PolyKind, PolynomialCache, Report, Result,
    Status,
};

/// Largest size used by the enumeration suite; the term count grows too fast
/// for the default `--max-size`.
pub const ENUMERATION_MAX_SIZE: usize = 10;
pub const ENUMERATION_MAX_FREE: usize = 2;
/// Columns of the vertical-series check; column m + 1 is also read.
pub const VERTICAL_MAX_M: usize = 6;
pub const NAMED_MAX_M: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Recurrences,
    Enumeration,
    Motzkin,
    Degrees,
    Coefficients,
    GfIdentities,
    GfVsPoly,
    Vertical,
    Named,
}

impl Suite {
    pub const PARTS: [Suite; 9] = [
        Suite::Recurrences,
        Suite::Enumeration,
        Suite::Motzkin,
        Suite::Degrees,
        Suite::Coefficients,
        Suite::GfIdentities,
        Suite::GfVsPoly,
        Suite::Vertical,
        Suite::Named,
    ];
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub max_size: usize,
    pub order: usize,
    pub limits: Limits,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_size: 18,
            order: 64,
            limits: Limits::default(),
        }
    }
}

/// Runs one suite. `All` runs the others on separate threads and merges their
/// reports in the fixed order of [`Suite::PARTS`].
pub fn run_suite(suite: Suite, p: &SuiteParams) -> Result<Report> {
    match suite {
        Suite::All => {
            let results: Vec<Result<Report>> = std::thread::scope(|s| {
                let handles: Vec<_> = Suite::PARTS
                    .iter()
                    .map(|&part| s.spawn(move || run_suite(part, p)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("suite thread panicked"))
                    .collect()
            });
            let mut all = Report::new("all");
            for r in results {
                all.absorb(r?);
            }
            Ok(all)
        }
        Suite::Recurrences => recurrences(p),
        Suite::Enumeration => crosscheck_counts(
            p.max_size.min(ENUMERATION_MAX_SIZE),
            ENUMERATION_MAX_FREE,
            &p.limits,
        ),
        Suite::Motzkin => Ok(check_motzkin_bound(p.max_size).to_report()),
        Suite::Degrees => degrees(p),
        Suite::Coefficients => {
            let cache = PolynomialCache::build(p.max_size);
            let mut report = Report::new("coefficients");
            check_coefficients(&cache, &CoefficientFamily::ALL, &mut report);
            report.absorb(closing_identities(p.order));
            Ok(report)
        }
        Suite::GfIdentities => Ok(identity_suite(p.order)),
        Suite::GfVsPoly => {
            let cache = PolynomialCache::build(2 * p.order + 1);
            let mut report = gf_vs_polynomials_with(&cache, p.order);
            report.absorb(nf_second_even_erratum(&cache));
            Ok(report)
        }
        Suite::Vertical => {
            let t = build_table(CountKind::T, p.max_size, VERTICAL_MAX_M + 1, &p.limits)?;
            let order = p.max_size.saturating_sub(1);
            let mut report = Report::new("vertical");
            for m in 0..=VERTICAL_MAX_M {
                report.absorb(vertical_check(&t, m, order)?);
            }
            Ok(report)
        }
        Suite::Named => Ok(verify_named(p.max_size, NAMED_MAX_M)),
    }
}

fn recurrences(p: &SuiteParams) -> Result<Report> {
    let mut report = Report::new("recurrences");
    let width = 8;
    for kind in [CountKind::T, CountKind::F, CountKind::G] {
        let table = build_table(kind, p.max_size, width, &p.limits)?;
        let bad = table.recurrence_violations();
        report.record(
            format!(
                "{kind} table satisfies its recurrence on n <= {}, m <= {width}",
                p.max_size
            ),
            Status::from_bool(bad.is_empty()),
            "no violations",
            if bad.is_empty() {
                "no violations".to_string()
            } else {
                format!("violations at {bad:?}")
            },
            "count recurrences",
        );
    }
    if p.max_size >= 18 {
        report.compare(
            "T(18,7)",
            "10816530842627".to_string(),
            counting::count(CountKind::T, 18, 7).to_string(),
            "T table corner",
        );
        report.compare(
            "F(18,8)",
            "6046781201429".to_string(),
            counting::count(CountKind::F, 18, 8).to_string(),
            "F table corner",
        );
    }
    Ok(report)
}

/// Degree formula, evaluation against the tables, and the polynomials
/// recovered a second way by interpolating table rows.
fn degrees(p: &SuiteParams) -> Result<Report> {
    let cache = PolynomialCache::build(p.max_size);
    let mut report = Report::new("degrees");
    check_degrees(&cache, &mut report);
    check_evaluations(&cache, &mut report);
    let width = expected_degree(p.max_size) + 1;
    for (kind, poly_kind) in [(CountKind::T, PolyKind::T), (CountKind::F, PolyKind::Nf)] {
        let table = build_table(kind, p.max_size, width, &p.limits)?;
        for n in 0..=p.max_size {
            let expected = cache.get(poly_kind, n);
            match interpolate_from_table(n, &table) {
                Ok(got) => {
                    report.compare(
                        format!("interpolated {kind} row {n}"),
                        expected.to_string(),
                        got.to_string(),
                        "Lagrange interpolation of table rows",
                    );
                }
                Err(e) => {
                    report.record(
                        format!("interpolated {kind} row {n}"),
                        Status::Fail,
                        expected.to_string(),
                        e.to_string(),
                        "Lagrange interpolation of table rows",
                    );
                }
            }
        }
    }
    Ok(report)
}
