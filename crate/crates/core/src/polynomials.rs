//! Polynomials in the free-index bound `m`.
//!
//! For a fixed size `n`, `m -> T(n, m)` is a polynomial `P^T_n`, and likewise
//! `m -> F(n, m)` and `m -> G(n, m)` give `P^NF_n` and `Q_n`. This module builds
//! them from their recurrences, recovers them independently by interpolating
//! count tables, and checks the closed forms known for their top coefficients.

use crate::counting::{binomial, catalan, BigCount, CountKind, CountTable};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::report::{Report, Status};
use crate::series::{self, CatalogName};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense polynomial with nonnegative integer coefficients, ascending powers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigCount>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The polynomial `m`.
    pub fn identity() -> Self {
        IntPolynomial::from_coeffs(vec![BigCount::zero(), BigCount::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigCount>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigCount::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigCount] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of `m^power`; zero past the degree.
    pub fn coeff(&self, power: usize) -> BigCount {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn eval(&self, m: &BigCount) -> BigCount {
        self.coeffs
            .iter()
            .rev()
            .fold(BigCount::zero(), |acc, c| acc * m + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigCount::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// `P(m + 1)`, expanding each `(m + 1)^i` binomially.
    pub fn shift_by_one(&self) -> Self {
        let mut out = vec![BigCount::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut b = BigCount::one();
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                *slot += c * &b;
                // binom(i, j + 1) from binom(i, j)
                b = b * (i - j) / (j + 1);
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers as `c*m^k`, with `c*m` and `c` for the last two powers,
    /// zero terms omitted, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*m")?,
                _ => write!(f, "{c}*m^{k}")?,
            }
        }
        Ok(())
    }
}

/// Degree that the recurrences give to `P^T_n`, `P^NF_n` and `Q_n` for `n >= 1`.
pub fn expected_degree(n: usize) -> usize {
    n.div_ceil(2)
}

/// `P^T_0..=P^T_max_n`.
pub fn poly_t_sequence(max_n: usize) -> Vec<IntPolynomial> {
    let mut ps = vec![IntPolynomial::zero()];
    if max_n == 0 {
        return ps;
    }
    ps.push(IntPolynomial::identity());
    for n in 1..max_n {
        let mut next = ps[n].shift_by_one();
        for k in 1..n {
            next = next.add(&ps[k].mul(&ps[n - k]));
        }
        ps.push(next);
    }
    ps
}

pub fn poly_t(n: usize) -> IntPolynomial {
    poly_t_sequence(n).pop().expect("nonempty")
}

/// `(P^NF_k, Q_k)` for `k = 0..=max_n`.
pub fn poly_nf_sequence(max_n: usize) -> (Vec<IntPolynomial>, Vec<IntPolynomial>) {
    let mut p = vec![IntPolynomial::zero()];
    let mut q = vec![IntPolynomial::zero()];
    if max_n == 0 {
        return (p, q);
    }
    p.push(IntPolynomial::identity());
    q.push(IntPolynomial::identity());
    for n in 1..max_n {
        let mut q_next = IntPolynomial::zero();
        for k in 1..n {
            q_next = q_next.add(&q[n - k].mul(&p[k]));
        }
        let p_next = p[n].shift_by_one().add(&q_next);
        q.push(q_next);
        p.push(p_next);
    }
    (p, q)
}

/// `(P^NF_n, Q_n)`.
pub fn poly_nf(n: usize) -> (IntPolynomial, IntPolynomial) {
    let (mut p, mut q) = poly_nf_sequence(n);
    (p.pop().expect("nonempty"), q.pop().expect("nonempty"))
}

/// All three polynomial sequences up to one size, immutable once built.
#[derive(Debug, Clone)]
pub struct PolynomialCache {
    pub terms: Vec<IntPolynomial>,
    pub normal: Vec<IntPolynomial>,
    pub neutral: Vec<IntPolynomial>,
}

impl PolynomialCache {
    pub fn build(max_n: usize) -> Self {
        let (normal, neutral) = poly_nf_sequence(max_n);
        PolynomialCache {
            terms: poly_t_sequence(max_n),
            normal,
            neutral,
        }
    }

    pub fn max_n(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn get(&self, kind: PolyKind, n: usize) -> &IntPolynomial {
        match kind {
            PolyKind::T => &self.terms[n],
            PolyKind::Nf => &self.normal[n],
            PolyKind::Neutral => &self.neutral[n],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyKind {
    /// `P^T_n`
    T,
    /// `P^NF_n`
    Nf,
    /// `Q_n`
    Neutral,
}

/// Coefficient of `m^(deg - rank)` with `deg = expected_degree(n)`; zero when
/// the power would be negative.
pub fn top_coefficient(p: &IntPolynomial, n: usize, rank: usize) -> BigCount {
    expected_degree(n)
        .checked_sub(rank)
        .map(|power| p.coeff(power))
        .unwrap_or_default()
}

/// Recovers row `n` of a count table as a polynomial by exact Lagrange
/// interpolation through every point `(m, table(n, m))` of the row.
pub fn interpolate_from_table(n: usize, table: &CountTable) -> Result<IntPolynomial> {
    let row = table.row(n).ok_or_else(|| Error::Coverage {
        what: format!("row {n} of the {} table", table.kind()),
    })?;
    let needed = if n == 0 { 1 } else { expected_degree(n) + 1 };
    if row.len() < needed {
        return Err(Error::InsufficientPoints {
            needed,
            available: row.len(),
        });
    }
    let ys: Vec<BigRational> = row
        .iter()
        .map(|y| BigRational::from_integer(BigInt::from(y.clone())))
        .collect();
    let coeffs = lagrange(&ys);
    let mut out = Vec::with_capacity(coeffs.len());
    for (power, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Integrality {
                power,
                value: c.to_string(),
            });
        }
        out.push(c.to_integer().to_biguint().expect("nonnegative"));
    }
    Ok(IntPolynomial::from_coeffs(out))
}

/// Coefficients (ascending) of the polynomial through `(i, ys[i])`.
fn lagrange(ys: &[BigRational]) -> Vec<BigRational> {
    let k = ys.len();
    let mut acc = vec![BigRational::zero(); k];
    for (i, y) in ys.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        // numerator: prod_{j != i} (m - j), denominator: prod_{j != i} (i - j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigInt::one();
        for j in 0..k {
            if j == i {
                continue;
            }
            let root = BigRational::from_integer(BigInt::from(j));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &root;
            }
            basis = next;
            denom *= BigInt::from(i as i64 - j as i64);
        }
        let scale = y / BigRational::from_integer(denom);
        for (d, c) in basis.iter().enumerate() {
            acc[d] += c * &scale;
        }
    }
    acc
}

/// The closed-form coefficient families for the top coefficients of `P^T_n`
/// and `P^NF_n`, all indexed by the half-index `q` with `n = 2q` or `n = 2q + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientFamily {
    /// Leading coefficient of `P^T_{2q+1}`.
    TLeadOdd,
    /// Leading coefficient of `P^T_{2q}`.
    TLeadEven,
    TSecondOdd,
    TSecondEven,
    /// Third coefficient of `P^T_{2q+1}`.
    TThirdOdd,
    NfLeadOdd,
    NfLeadEven,
    NfSecondOdd,
    NfSecondEven,
}

impl CoefficientFamily {
    pub const ALL: [CoefficientFamily; 9] = [
        CoefficientFamily::TLeadOdd,
        CoefficientFamily::TLeadEven,
        CoefficientFamily::TSecondOdd,
        CoefficientFamily::TSecondEven,
        CoefficientFamily::TThirdOdd,
        CoefficientFamily::NfLeadOdd,
        CoefficientFamily::NfLeadEven,
        CoefficientFamily::NfSecondOdd,
        CoefficientFamily::NfSecondEven,
    ];

    pub fn name(self) -> &'static str {
        use CoefficientFamily::*;
        match self {
            TLeadOdd => "T_lead_odd",
            TLeadEven => "T_lead_even",
            TSecondOdd => "T_second_odd",
            TSecondEven => "T_second_even",
            TThirdOdd => "T_third_odd",
            NfLeadOdd => "NF_lead_odd",
            NfLeadEven => "NF_lead_even",
            NfSecondOdd => "NF_second_odd",
            NfSecondEven => "NF_second_even",
        }
    }

    pub fn poly_kind(self) -> PolyKind {
        use CoefficientFamily::*;
        match self {
            TLeadOdd | TLeadEven | TSecondOdd | TSecondEven | TThirdOdd => PolyKind::T,
            _ => PolyKind::Nf,
        }
    }

    pub fn is_odd(self) -> bool {
        use CoefficientFamily::*;
        matches!(
            self,
            TLeadOdd | TSecondOdd | TThirdOdd | NfLeadOdd | NfSecondOdd
        )
    }

    /// 0 for the leading coefficient, 1 for the second, 2 for the third.
    pub fn rank(self) -> usize {
        use CoefficientFamily::*;
        match self {
            TLeadOdd | TLeadEven | NfLeadOdd | NfLeadEven => 0,
            TSecondOdd | TSecondEven | NfSecondOdd | NfSecondEven => 1,
            TThirdOdd => 2,
        }
    }

    /// Polynomial size `n` for half-index `q`.
    pub fn size(self, q: usize) -> usize {
        if self.is_odd() {
            2 * q + 1
        } else {
            2 * q
        }
    }

    /// Generating function whose `z^q` coefficient is this family's `q`th value.
    pub fn series(self) -> CatalogName {
        use CoefficientFamily::*;
        match self {
            TLeadOdd => CatalogName::Od,
            TLeadEven => CatalogName::Ev,
            TSecondOdd => CatalogName::Sod,
            TSecondEven => CatalogName::Sev,
            TThirdOdd => CatalogName::Tod,
            NfLeadOdd => CatalogName::Fod,
            NfLeadEven => CatalogName::Fev,
            NfSecondOdd => CatalogName::SFod,
            NfSecondEven => CatalogName::SFev,
        }
    }

    /// Separately listed small values `(q, value)` below the closed form's range.
    pub fn special_values(self) -> &'static [(usize, u64)] {
        use CoefficientFamily::*;
        match self {
            TLeadOdd | NfLeadOdd => &[],
            TLeadEven | TSecondOdd => &[(0, 0)],
            TSecondEven => &[(0, 0), (1, 1), (2, 5)],
            TThirdOdd => &[],
            NfLeadEven | NfSecondOdd => &[(0, 0), (1, 1)],
            // Nothing is given for q = 2.
            NfSecondEven => &[(0, 0), (1, 1), (3, 15)],
        }
    }

    /// First `q` at which the closed form applies.
    pub fn closed_form_start(self) -> usize {
        use CoefficientFamily::*;
        match self {
            TLeadOdd | NfLeadOdd => 0,
            TLeadEven | TSecondOdd | TThirdOdd => 1,
            NfLeadEven | NfSecondOdd => 2,
            TSecondEven => 3,
            NfSecondEven => 4,
        }
    }

    pub fn in_range(self, q: usize) -> bool {
        q >= self.closed_form_start() || self.special_values().iter().any(|&(s, _)| s == q)
    }
}

impl fmt::Display for CoefficientFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn rat(v: BigCount) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn pow2(e: u64) -> BigRational {
    rat(BigCount::one() << e)
}

/// Value of the family's closed form (or listed special value) at half-index `q`.
pub fn predicted_coefficient(family: CoefficientFamily, q: usize) -> Result<BigCount> {
    use CoefficientFamily::*;
    if let Some(&(_, v)) = family.special_values().iter().find(|&&(s, _)| s == q) {
        return Ok(BigCount::from(v));
    }
    if q < family.closed_form_start() {
        return Err(Error::OutsideValidityRange {
            family: family.name(),
            q: q as u64,
        });
    }
    let qu = q as u64;
    let qi = q as i64;
    let b = |n: i64, k: i64| rat(binomial(n as u64, k));
    let value: BigRational = match family {
        TLeadOdd | NfLeadOdd => rat(catalan(qu)),
        TLeadEven => b(2 * qi - 1, qi),
        TSecondOdd => int(2 * qi - 1) * b(2 * qi - 2, qi - 1),
        TSecondEven => {
            pow2(2 * qu - 2)
                + int(2 * (2 * qi - 5) * (2 * qi - 3) * (2 * qi - 1)) / int(3 * (qi - 2))
                    * b(2 * qi - 6, qi - 3)
        }
        TThirdOdd => {
            int(qi) * pow2(2 * qu - 1)
                + int(qi * (qi - 1) * (qi - 2)) / int(120) * b(2 * qi, qi)
                + int((qi + 1) * qi * (qi - 1)) / int(120) * b(2 * qi + 2, qi + 1)
        }
        NfLeadEven => int(2) * b(2 * qi - 3, qi - 2),
        NfSecondOdd => int(qi + 1) * b(2 * qi - 3, qi - 2),
        NfSecondEven => nf_second_even_summands(q).into_iter().sum(),
    };
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Integrality {
            power: q,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// The five printed summands of the second-leading-even normal-form formula, `q >= 4`.
pub fn nf_second_even_summands(q: usize) -> [BigRational; 5] {
    let qi = q as i64;
    let b = |n: i64, k: i64| rat(binomial(n as u64, k));
    [
        b(2 * qi - 3, qi - 2),
        pow2(2 * q as u64 - 3),
        int(qi - 2) * b(2 * qi - 2, qi - 2),
        int(2) * b(2 * qi - 5, qi - 3),
        int((qi - 3) * (qi - 2)) / int(3) * b(2 * qi - 5, qi - 3),
    ]
}

/// Degree, evaluation and closed-form checks for every size up to `max_n`.
/// A closed form that disagrees with the computed coefficient is reported as
/// ERRATUM when the matching generating function agrees with the computed
/// coefficient, and as FAIL otherwise.
pub fn verify_polynomials(max_n: usize) -> Report {
    let mut report = Report::new("polynomials");
    let cache = PolynomialCache::build(max_n);
    check_degrees(&cache, &mut report);
    check_evaluations(&cache, &mut report);
    check_coefficients(&cache, &CoefficientFamily::ALL, &mut report);
    report
}

/// A degree that differs from `floor((n+1)/2)` is an erratum when the
/// polynomial still agrees with the count recurrence at enough points to pin
/// it down (this happens for `Q_2 = 0`: no neutral term has size 2).
pub fn check_degrees(cache: &PolynomialCache, report: &mut Report) {
    for n in 1..=cache.max_n() {
        for (kind, label) in [
            (PolyKind::T, "P^T"),
            (PolyKind::Nf, "P^NF"),
            (PolyKind::Neutral, "Q"),
        ] {
            let p = cache.get(kind, n);
            let expected = expected_degree(n) as isize;
            let actual = p.degree();
            let status = if expected == actual {
                Status::Pass
            } else {
                let count_kind = match kind {
                    PolyKind::T => CountKind::T,
                    PolyKind::Nf => CountKind::F,
                    PolyKind::Neutral => CountKind::G,
                };
                let confirmed = (0..=expected_degree(n) + 1).all(|m| {
                    p.eval(&BigCount::from(m)) == crate::counting::count(count_kind, n, m)
                });
                if confirmed {
                    Status::Erratum
                } else {
                    Status::Fail
                }
            };
            report.record(
                format!("deg {label}_{n}"),
                status,
                expected.to_string(),
                actual.to_string(),
                "degree floor((n+1)/2)",
            );
        }
    }
}

pub fn check_evaluations(cache: &PolynomialCache, report: &mut Report) {
    let max_n = cache.max_n();
    let tables = [CountKind::T, CountKind::F, CountKind::G].map(|kind| {
        crate::counting::build_table(kind, max_n, max_n, &Limits::unlimited()).expect("unlimited")
    });
    let kinds = [PolyKind::T, PolyKind::Nf, PolyKind::Neutral];
    for n in 0..=max_n {
        for (kind, table) in kinds.iter().zip(&tables) {
            let p = cache.get(*kind, n);
            let bad: Vec<usize> = (0..=max_n)
                .filter(|&m| p.eval(&BigCount::from(m)) != *table.get(n, m).expect("in range"))
                .collect();
            report.record(
                format!(
                    "{}_{n}(m) = {}({n},m) for m <= {max_n}",
                    poly_label(*kind),
                    table.kind()
                ),
                Status::from_bool(bad.is_empty()),
                "all agree",
                if bad.is_empty() {
                    "all agree".to_string()
                } else {
                    format!("differs at m = {bad:?}")
                },
                "polynomial evaluation vs count table",
            );
        }
    }
}

fn poly_label(kind: PolyKind) -> &'static str {
    match kind {
        PolyKind::T => "P^T",
        PolyKind::Nf => "P^NF",
        PolyKind::Neutral => "Q",
    }
}

/// Compares each family's closed form with the coefficient extracted from the
/// computed polynomials, for every in-range `q` whose size fits in the cache.
pub fn check_coefficients(
    cache: &PolynomialCache,
    families: &[CoefficientFamily],
    report: &mut Report,
) {
    let max_n = cache.max_n();
    let max_q = max_n / 2;
    for &family in families {
        let gf = series::gf(family.series(), max_q, None).expect("catalog series");
        for q in 0..=max_q {
            let n = family.size(q);
            if n > max_n || !family.in_range(q) {
                continue;
            }
            let actual = top_coefficient(cache.get(family.poly_kind(), n), n, family.rank());
            let name = format!("{family} q={q} (n={n})");
            let reference = format!("closed form for {}", family.series().name());
            match predicted_coefficient(family, q) {
                Ok(predicted) if predicted == actual => report.record(
                    name,
                    Status::Pass,
                    predicted.to_string(),
                    actual.to_string(),
                    reference,
                ),
                Ok(predicted) => {
                    let truth = gf.coeff(q);
                    let status = if truth == rat(actual.clone()) {
                        Status::Erratum
                    } else {
                        Status::Fail
                    };
                    report.record(
                        name,
                        status,
                        predicted.to_string(),
                        format!("{actual} (series coefficient {truth})"),
                        reference,
                    );
                }
                Err(e) => report.record(
                    name,
                    Status::Fail,
                    e.to_string(),
                    actual.to_string(),
                    reference,
                ),
            }
        }
    }
}

/// The two binomial identities relating the normal-form and plain-term
/// coefficient families, checked exactly for `2 <= q <= max_q`.
pub fn closing_identities(max_q: usize) -> Report {
    let mut report = Report::new("closing-identities");
    for q in 2..=max_q as i64 {
        let b = |n: i64, k: i64| rat(binomial(n as u64, k));
        let lhs1 = int(2) * b(2 * q - 3, q - 2);
        let rhs1 = int(q) / int(2 * q - 1) * b(2 * q - 1, q);
        report.compare(
            format!("2*C(2q-3,q-2) = q/(2q-1)*C(2q-1,q) at q={q}"),
            lhs1.to_string(),
            rhs1.to_string(),
            "leading even coefficients",
        );
        let lhs2 = int(q + 1) * b(2 * q - 3, q - 2);
        let rhs2 = int(q + 1) / int(2 * (2 * q - 1)) * int(2 * q - 1) * b(2 * (q - 1), q - 1);
        report.compare(
            format!("(q+1)*C(2q-3,q-2) = (q+1)/(2(2q-1))*(2q-1)*C(2q-2,q-1) at q={q}"),
            lhs2.to_string(),
            rhs2.to_string(),
            "second odd coefficients",
        );
    }
    report
}

/// Parses `u64`-sized coefficients back out of a rendered polynomial; used by tests
/// and fixture tooling.
pub fn parse_polynomial(s: &str) -> Option<IntPolynomial> {
    let s = s.trim();
    if s == "0" {
        return Some(IntPolynomial::zero());
    }
    let mut coeffs: Vec<BigCount> = Vec::new();
    for term in s.split(" + ") {
        let (c, k) = match term.split_once("*m") {
            None => (term, 0usize),
            Some((c, "")) => (c, 1),
            Some((c, rest)) => (c, rest.strip_prefix('^')?.parse().ok()?),
        };
        let c: BigCount = c.parse().ok()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigCount::zero());
        }
        coeffs[k] += c;
    }
    Some(IntPolynomial::from_coeffs(coeffs))
}
