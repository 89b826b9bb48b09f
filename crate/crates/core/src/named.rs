//! Named-variable counts `f(n, m)`: terms of size `n` with exactly `m` distinct
//! free variables, and their binomial-transform link to `T(n, m)`.

use crate::counting::{self, binomial, BigCount, CountKind, CountTable};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::report::{Report, Status};
use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

/// Rectangle of `f(n, m)` for `0 <= n <= max_size`, `0 <= m <= max_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTable {
    max_size: usize,
    max_vars: usize,
    rows: Vec<Vec<BigCount>>,
}

impl FTable {
    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn max_vars(&self) -> usize {
        self.max_vars
    }

    pub fn get(&self, n: usize, m: usize) -> Option<&BigCount> {
        self.rows.get(n).and_then(|r| r.get(m))
    }

    pub fn rows(&self) -> &[Vec<BigCount>] {
        &self.rows
    }
}

fn pascal(max: usize) -> Vec<Vec<BigCount>> {
    let mut rows: Vec<Vec<BigCount>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![BigCount::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Row `n` spans `0..=max_vars + max_size - n`, enough for every later row.
fn f_triangle(max_size: usize, max_vars: usize) -> Vec<Vec<BigCount>> {
    let width = max_size + max_vars;
    let choose = pascal(width);
    let mut f: Vec<Vec<BigCount>> = vec![vec![BigCount::zero(); width + 1]];
    if max_size == 0 {
        return f;
    }
    f.push(
        (0..width)
            .map(|m| {
                if m == 1 {
                    BigCount::one()
                } else {
                    BigCount::zero()
                }
            })
            .collect(),
    );
    for n in 2..=max_size {
        let cols = width - n + 1;
        let row: Vec<BigCount> = (0..cols)
            .map(|m| {
                let mut acc = &f[n - 1][m] + &f[n - 1][m + 1];
                // Application: c variables shared, l only on the left.
                for p in 1..=n - 2 {
                    let right = n - p - 1;
                    for c in 0..=m {
                        for l in 0..=m - c {
                            let a = &f[p][l + c];
                            let b = &f[right][m - l];
                            if a.is_zero() || b.is_zero() {
                                continue;
                            }
                            acc += &choose[m][c] * &choose[m - c][l] * a * b;
                        }
                    }
                }
                acc
            })
            .collect();
        f.push(row);
    }
    f
}

pub fn build_f_table(max_size: usize, max_vars: usize, limits: &Limits) -> Result<FTable> {
    limits.check_cells(max_size, max_vars)?;
    let rows = f_triangle(max_size, max_vars)
        .into_iter()
        .map(|mut r| {
            r.truncate(max_vars + 1);
            r
        })
        .collect();
    Ok(FTable {
        max_size,
        max_vars,
        rows,
    })
}

/// `f(n, m)` from the named-variable recurrence, reading the application
/// binomials as `binom(m, c) * binom(m - c, l)`.
pub fn raffalli_f(n: usize, m: usize) -> BigCount {
    f_triangle(n, m)[n][m].clone()
}

/// `sum_k (-1)^(m-k) binom(m, k) T(n, k)`, the inverse of
/// `T(n, m) = sum_k binom(m, k) f(n, k)`.
pub fn f_from_inverse_transform(n: usize, m: usize, table: &CountTable) -> Result<BigCount> {
    if table.kind() != CountKind::T || n > table.max_size() || m > table.max_free() {
        return Err(Error::Coverage {
            what: format!("T({n}, 0..={m})"),
        });
    }
    let mut acc = BigInt::zero();
    for k in 0..=m {
        let term = BigInt::from(binomial(m as u64, k as i64) * table.get(n, k).expect("covered"));
        if (m - k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    match acc.sign() {
        Sign::Minus => Err(Error::NegativeTransform {
            n,
            m,
            value: acc.to_string(),
        }),
        _ => Ok(acc.to_biguint().expect("nonnegative")),
    }
}

/// Recurrence vs inverse transform on `n <= max_n, m <= max_m`, the forward
/// transform, the support bound and `f(n, 0) = T(n, 0)`.
pub fn verify_named(max_n: usize, max_m: usize) -> Report {
    let mut report = Report::new("named");
    let unlimited = Limits::unlimited();
    // Wide enough to spot-check support vanishing past 2n - 1.
    let support_m = max_m.max(2 * max_n.min(8) + 2);
    let f = build_f_table(max_n, support_m, &unlimited).expect("unlimited");
    let t = counting::build_table(CountKind::T, max_n, max_m, &unlimited).expect("unlimited");

    let mut disagree = Vec::new();
    let mut transform_errors = Vec::new();
    let mut forward_bad = Vec::new();
    for n in 0..=max_n {
        for m in 0..=max_m {
            let direct = f.get(n, m).expect("covered");
            match f_from_inverse_transform(n, m, &t) {
                Ok(v) if v == *direct => {}
                Ok(_) => disagree.push((n, m)),
                Err(e) => transform_errors.push(e.to_string()),
            }
            let forward: BigCount = (0..=m)
                .map(|k| binomial(m as u64, k as i64) * f.get(n, k).expect("covered"))
                .sum();
            if forward != *t.get(n, m).expect("covered") {
                forward_bad.push((n, m));
            }
        }
    }
    let summarize = |bad: &[(usize, usize)]| {
        if bad.is_empty() {
            "all agree".to_string()
        } else {
            format!("differs at {bad:?}")
        }
    };
    report.record(
        format!("recurrence = inverse transform on n <= {max_n}, m <= {max_m}"),
        Status::from_bool(disagree.is_empty() && transform_errors.is_empty()),
        "all agree",
        if transform_errors.is_empty() {
            summarize(&disagree)
        } else {
            transform_errors.join("; ")
        },
        "named-variable recurrence vs T table",
    );
    report.record(
        format!("sum_k binom(m,k) f(n,k) = T(n,m) on n <= {max_n}, m <= {max_m}"),
        Status::from_bool(forward_bad.is_empty()),
        "all agree",
        summarize(&forward_bad),
        "binomial transform",
    );

    let support_bad: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|n| (0..=support_m).map(move |m| (n, m)))
        .filter(|&(n, m)| m + 1 > 2 * n && !f.get(n, m).expect("covered").is_zero())
        .collect();
    report.record(
        format!("f(n,m) = 0 for m > 2n-1 (n <= {max_n}, m <= {support_m})"),
        Status::from_bool(support_bad.is_empty()),
        "all zero",
        if support_bad.is_empty() {
            "all zero".to_string()
        } else {
            format!("nonzero at {support_bad:?}")
        },
        "support of f",
    );
    for n in 0..=max_n {
        report.compare(
            format!("f({n},0) = T({n},0)"),
            t.get(n, 0).expect("covered").to_string(),
            f.get(n, 0).expect("covered").to_string(),
            "closed terms",
        );
    }
    if max_n >= 1 && max_m >= 1 {
        report.compare(
            "f(1,1) = 1",
            "1".to_string(),
            f.get(1, 1).expect("covered").to_string(),
            "base case",
        );
    }
    report
}
