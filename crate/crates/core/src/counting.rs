//! Counting de Bruijn terms and normal forms by size and free-index bound.
//!
//! `T(n, m)` counts terms of size `n` whose indices stay within `m` free
//! variables. `F(n, m)` counts the normal forms among them and `G(n, m)` the
//! neutral normal forms (no head abstraction).

use crate::error::Result;
use crate::limits::Limits;
use crate::report::{Report, Status};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CountKind {
    /// All terms.
    T,
    /// Normal forms.
    F,
    /// Neutral normal forms.
    G,
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountKind::T => "T",
            CountKind::F => "F",
            CountKind::G => "G",
        })
    }
}

impl FromStr for CountKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(CountKind::T),
            "F" => Ok(CountKind::F),
            "G" => Ok(CountKind::G),
            other => Err(format!("unknown count kind {other:?}")),
        }
    }
}

/// Rows of a triangle where row `n` spans free bounds `0..=width - n`.
type Triangle = Vec<Vec<BigCount>>;

fn t_triangle(max_size: usize, max_free: usize) -> Triangle {
    let width = max_size + max_free;
    let mut rows: Triangle = Vec::with_capacity(max_size + 1);
    rows.push(vec![BigCount::zero(); width + 1]);
    if max_size == 0 {
        return rows;
    }
    rows.push((0..width as u64).map(BigCount::from).collect());
    for n in 1..max_size {
        let cols = width - n;
        let next: Vec<BigCount> = (0..cols)
            .map(|m| {
                let mut acc = rows[n][m + 1].clone();
                // T(0, m) = 0, so k = 0 and k = n contribute nothing.
                for k in 1..n {
                    acc += &rows[n - k][m] * &rows[k][m];
                }
                acc
            })
            .collect();
        rows.push(next);
    }
    rows
}

fn fg_triangles(max_size: usize, max_free: usize) -> (Triangle, Triangle) {
    let width = max_size + max_free;
    let mut f: Triangle = vec![vec![BigCount::zero(); width + 1]];
    let mut g: Triangle = vec![vec![BigCount::zero(); width + 1]];
    if max_size == 0 {
        return (f, g);
    }
    let ones: Vec<BigCount> = (0..width as u64).map(BigCount::from).collect();
    f.push(ones.clone());
    g.push(ones);
    for n in 1..max_size {
        let cols = width - n;
        let g_next: Vec<BigCount> = (0..cols)
            .map(|m| {
                let mut acc = BigCount::zero();
                for k in 1..n {
                    acc += &g[n - k][m] * &f[k][m];
                }
                acc
            })
            .collect();
        let f_next: Vec<BigCount> = (0..cols).map(|m| &f[n][m + 1] + &g_next[m]).collect();
        g.push(g_next);
        f.push(f_next);
    }
    (f, g)
}

fn triangle(kind: CountKind, max_size: usize, max_free: usize) -> Triangle {
    match kind {
        CountKind::T => t_triangle(max_size, max_free),
        CountKind::F => fg_triangles(max_size, max_free).0,
        CountKind::G => fg_triangles(max_size, max_free).1,
    }
}

/// Number of terms of the given kind of size `n` with indices within `m`.
pub fn count(kind: CountKind, n: usize, m: usize) -> BigCount {
    triangle(kind, n, m)[n][m].clone()
}

/// Immutable rectangle of counts for `0 <= n <= max_size`, `0 <= m <= max_free`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: CountKind,
    max_size: usize,
    max_free: usize,
    rows: Vec<Vec<BigCount>>,
}

/// Builds the rectangle of `kind` counts, refusing rectangles above `limits.max_cells`.
pub fn build_table(
    kind: CountKind,
    max_size: usize,
    max_free: usize,
    limits: &Limits,
) -> Result<CountTable> {
    limits.check_cells(max_size, max_free)?;
    let rows = triangle(kind, max_size, max_free)
        .into_iter()
        .map(|mut row| {
            row.truncate(max_free + 1);
            row
        })
        .collect();
    Ok(CountTable {
        kind,
        max_size,
        max_free,
        rows,
    })
}

impl CountTable {
    /// Wraps a rectangle without checking it against any recurrence.
    #[cfg(test)]
    pub(crate) fn from_rows_unchecked(kind: CountKind, rows: Vec<Vec<BigCount>>) -> Self {
        CountTable {
            kind,
            max_size: rows.len() - 1,
            max_free: rows[0].len() - 1,
            rows,
        }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn max_free(&self) -> usize {
        self.max_free
    }

    /// Entry `(n, m)`, or `None` outside the rectangle.
    pub fn get(&self, n: usize, m: usize) -> Option<&BigCount> {
        self.rows.get(n).and_then(|row| row.get(m))
    }

    pub fn row(&self, n: usize) -> Option<&[BigCount]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn column(&self, m: usize) -> Option<Vec<BigCount>> {
        if m > self.max_free {
            return None;
        }
        Some(self.rows.iter().map(|row| row[m].clone()).collect())
    }

    pub fn rows(&self) -> &[Vec<BigCount>] {
        &self.rows
    }

    /// Re-evaluates every entry from its neighbours inside the rectangle and
    /// returns the cells that disagree with the defining recurrence. Entries in
    /// the last column of kinds T and F are skipped since their `m + 1` neighbour
    /// lies outside. For kind F the neutral counts are recomputed alongside.
    #[allow(clippy::needless_range_loop)]
    pub fn recurrence_violations(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        let base_ok = |n: usize, m: usize, v: &BigCount| match n {
            0 => v.is_zero(),
            1 => *v == BigCount::from(m as u64),
            _ => unreachable!(),
        };
        match self.kind {
            CountKind::T => {
                for n in 0..=self.max_size {
                    for m in 0..=self.max_free {
                        let v = &self.rows[n][m];
                        if n <= 1 {
                            if !base_ok(n, m, v) {
                                bad.push((n, m));
                            }
                            continue;
                        }
                        if m == self.max_free {
                            continue;
                        }
                        let p = n - 1;
                        let mut acc = self.rows[p][m + 1].clone();
                        for k in 0..=p {
                            acc += &self.rows[p - k][m] * &self.rows[k][m];
                        }
                        if acc != *v {
                            bad.push((n, m));
                        }
                    }
                }
            }
            CountKind::G => {
                // G only looks at the same column, but needs F; rebuild F here.
                let (f, _) = fg_triangles(self.max_size, self.max_free);
                for n in 0..=self.max_size {
                    for m in 0..=self.max_free {
                        let v = &self.rows[n][m];
                        let ok = if n <= 1 {
                            base_ok(n, m, v)
                        } else {
                            let p = n - 1;
                            let mut acc = BigCount::zero();
                            for k in 0..=p {
                                acc += &self.rows[p - k][m] * &f[k][m];
                            }
                            acc == *v
                        };
                        if !ok {
                            bad.push((n, m));
                        }
                    }
                }
            }
            CountKind::F => {
                let (_, g) = fg_triangles(self.max_size, self.max_free);
                for n in 0..=self.max_size {
                    for m in 0..=self.max_free {
                        let v = &self.rows[n][m];
                        let ok = if n <= 1 {
                            base_ok(n, m, v)
                        } else if m == self.max_free {
                            true
                        } else {
                            // Recompute G(n, m) from this table's F values.
                            let p = n - 1;
                            let mut g_nm = BigCount::zero();
                            for k in 0..=p {
                                g_nm += &g[p - k][m] * &self.rows[k][m];
                            }
                            &self.rows[p][m + 1] + g_nm == *v
                        };
                        if !ok {
                            bad.push((n, m));
                        }
                    }
                }
            }
        }
        bad
    }
}

/// Exact binomial coefficient; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(q: u64) -> BigCount {
    binomial(2 * q, q as i64) / (q + 1)
}

/// Motzkin numbers `M_0..=M_max`.
pub fn motzkin_numbers(max: usize) -> Vec<BigCount> {
    let mut seq: Vec<BigCount> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let next = if n <= 1 {
            BigCount::one()
        } else {
            let p = n - 1;
            let mut acc = seq[p].clone();
            for k in 0..p {
                acc += &seq[k] * &seq[p - 1 - k];
            }
            acc
        };
        seq.push(next);
    }
    seq
}

pub fn motzkin(n: usize) -> BigCount {
    motzkin_numbers(n).pop().expect("nonempty")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotzkinRow {
    pub n: usize,
    pub motzkin: BigCount,
    pub closed_terms: BigCount,
    /// `motzkin.cmp(closed_terms)`.
    pub relation: Ordering,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotzkinBound {
    pub rows: Vec<MotzkinRow>,
}

impl MotzkinBound {
    /// `M_n <= T(n + 1, 0)` on every row.
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.relation != Ordering::Greater)
    }

    /// Sizes where the bound is an equality rather than strict.
    pub fn equalities(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.relation == Ordering::Equal)
            .map(|r| r.n)
            .collect()
    }

    pub fn to_report(&self) -> Report {
        let mut report = Report::new("motzkin");
        for r in &self.rows {
            let status = Status::from_bool(r.relation != Ordering::Greater);
            report.record(
                format!("M_{} <= T({},0)", r.n, r.n + 1),
                status,
                format!(
                    "{} {} {}",
                    r.motzkin,
                    relation_symbol(Ordering::Less),
                    r.closed_terms
                ),
                format!(
                    "{} {} {}",
                    r.motzkin,
                    relation_symbol(r.relation),
                    r.closed_terms
                ),
                "unary-binary trees embed as closed terms using only index 1",
            );
        }
        let eq = self.equalities();
        if !eq.is_empty() {
            let list = eq
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            report.record(
                "strict bound",
                Status::Erratum,
                "strict < for every n >= 1",
                format!("equality at n = {list}"),
                "strict inequality claimed for all n",
            );
        }
        report
    }
}

pub fn relation_symbol(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

/// Compares `M_n` with `T(n + 1, 0)` for `1 <= n <= max_n`.
pub fn check_motzkin_bound(max_n: usize) -> MotzkinBound {
    let m = motzkin_numbers(max_n);
    let closed = t_triangle(max_n + 1, 0);
    let rows = (1..=max_n)
        .map(|n| {
            let t = closed[n + 1][0].clone();
            MotzkinRow {
                n,
                relation: m[n].cmp(&t),
                motzkin: m[n].clone(),
                closed_terms: t,
            }
        })
        .collect();
    MotzkinBound { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn base_cases() {
        for m in 0..=7 {
            assert_eq!(count(CountKind::T, 1, m), big(m as u64));
            assert_eq!(count(CountKind::T, 0, m), big(0));
            assert_eq!(count(CountKind::F, 1, m), big(m as u64));
            assert_eq!(count(CountKind::G, 0, m), big(0));
        }
    }

    #[test]
    fn closed_terms_small() {
        let expected = [0u64, 0, 1, 2, 4, 13, 42, 139, 506];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(count(CountKind::T, n, 0), big(*e), "T({n},0)");
        }
    }

    #[test]
    fn table_corners() {
        assert_eq!(count(CountKind::T, 18, 7), big(10816530842627));
        assert_eq!(count(CountKind::F, 18, 8), big(6046781201429));
    }

    #[test]
    fn neutral_counts() {
        for n in 0..12 {
            assert!(count(CountKind::G, n, 0).is_zero());
        }
        assert_eq!(count(CountKind::G, 3, 1), big(1));
    }

    #[test]
    fn small_tables() {
        let lim = Limits::default();
        let f = build_table(CountKind::F, 1, 3, &lim).unwrap();
        assert_eq!(f.row(1).unwrap(), &[big(0), big(1), big(2), big(3)]);
        let g = build_table(CountKind::G, 2, 5, &lim).unwrap();
        assert!(g.row(2).unwrap().iter().all(Zero::is_zero));
        assert_eq!(g.row(2).unwrap().len(), 6);
    }

    #[test]
    fn table_refused_over_limit() {
        let lim = Limits {
            max_cells: 100,
            max_enum: 1,
        };
        let err = build_table(CountKind::T, 10, 9, &lim).unwrap_err();
        assert!(matches!(
            err,
            crate::Error::ResourceLimit {
                limit: "max-cells",
                ..
            }
        ));
        assert!(build_table(CountKind::T, 9, 9, &lim).is_ok());
    }

    #[test]
    fn recurrences_hold() {
        let lim = Limits::default();
        for kind in [CountKind::T, CountKind::F, CountKind::G] {
            let t = build_table(kind, 14, 6, &lim).unwrap();
            assert!(t.recurrence_violations().is_empty(), "{kind}");
        }
    }

    #[test]
    fn corrupted_table_is_detected() {
        let mut t = build_table(CountKind::T, 6, 3, &Limits::default()).unwrap();
        t.rows[4][1] += 1u32;
        let bad = t.recurrence_violations();
        assert!(bad.contains(&(4, 1)));
    }

    #[test]
    fn named_sequences() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(5), big(42));
        assert_eq!(motzkin(0), big(1));
        assert_eq!(motzkin(4), big(9));
        assert_eq!(motzkin(5), big(21));
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, 3), big(10));
        assert_eq!(binomial(7, 9), big(0));
        assert_eq!(binomial(7, -1), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn motzkin_bound_rows() {
        let b = check_motzkin_bound(5);
        let row = |n: usize| &b.rows[n - 1];
        assert_eq!(
            (row(4).motzkin.clone(), row(4).closed_terms.clone()),
            (big(9), big(13))
        );
        assert_eq!(row(4).relation, Ordering::Less);
        assert_eq!(row(1).relation, Ordering::Equal);
        assert_eq!(
            (row(5).motzkin.clone(), row(5).closed_terms.clone()),
            (big(21), big(42))
        );
        assert!(b.holds());
        assert_eq!(b.equalities(), vec![1, 2, 3]);
        let r = b.to_report();
        assert!(r.passed());
        assert_eq!(r.summary.erratum, 1);
    }
}
