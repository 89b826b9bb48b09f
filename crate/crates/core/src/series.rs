//! Truncated formal power series in `z` with exact rational coefficients, and
//! the catalog of generating functions for the top polynomial coefficients.

use crate::counting::{CountKind, CountTable};
use crate::error::{Error, Result};
use crate::polynomials::{self, top_coefficient, CoefficientFamily, PolyKind, PolynomialCache};
use crate::report::{Report, Status};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 64;

/// Series `sum_{i <= order} c_i z^i`; coefficients past `order` are unknown.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl RationalSeries {
    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        RationalSeries { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        BigInt: From<T>,
    {
        let coeffs = coeffs
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        RationalSeries::new(coeffs, order)
    }

    pub fn zero(order: usize) -> Self {
        RationalSeries::new(Vec::new(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        RationalSeries::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        RationalSeries::constant(BigRational::one(), order)
    }

    /// `c * z^k`.
    pub fn monomial(k: usize, c: BigRational, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        RationalSeries { coeffs }
    }

    /// The series `z` itself.
    pub fn z(order: usize) -> Self {
        RationalSeries::monomial(1, BigRational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero past the order.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise a truncation order");
        RationalSeries::new(self.coeffs[..=order].to_vec(), order)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        RationalSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        RationalSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        RationalSeries { coeffs }
    }

    /// Multiplication by `z^k`; the known range grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RationalSeries { coeffs }
    }

    /// Exact division. When the divisor has valuation `v > 0`, both operands are
    /// divided by `z^v` first and the result order drops by `v`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        let v = other.valuation().ok_or(Error::Valuation {
            dividend: self.valuation().unwrap_or(order + 1),
            divisor: order + 1,
        })?;
        let va = self.valuation().unwrap_or(order + 1);
        if va < v || v > order {
            return Err(Error::Valuation {
                dividend: va,
                divisor: v,
            });
        }
        let order = order - v;
        let num = &self.coeffs[v..=v + order];
        let den = &other.coeffs[v..=v + order];
        let lead_inv = den[0].recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut acc = num[i].clone();
            for j in 1..=i {
                acc -= &den[j] * &out[i - j];
            }
            out.push(acc * &lead_inv);
        }
        Ok(RationalSeries { coeffs: out })
    }

    /// Square root with constant term 1, by Newton iteration from the seed 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtPrecondition);
        }
        let order = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut root = RationalSeries::one(0);
        let mut known = 0;
        while known < order {
            let next = (2 * known + 1).min(order);
            let extended = RationalSeries::new(root.coeffs, next);
            let quotient = self.truncate(next).div(&extended)?;
            root = extended.add(&quotient).scale(&half);
            known = next;
        }
        Ok(root)
    }

    /// Formal derivative; the order drops by one.
    pub fn diff(&self) -> Self {
        if self.order() == 0 {
            return RationalSeries::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        RationalSeries { coeffs }
    }
}

impl fmt::Display for RationalSeries {
    /// One `q: value` line per coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{q}: {c}")?;
        }
        Ok(())
    }
}

pub fn ps_add(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    a.add(b)
}

pub fn ps_sub(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    a.sub(b)
}

pub fn ps_mul(a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
    a.mul(b)
}

pub fn ps_div(a: &RationalSeries, b: &RationalSeries) -> Result<RationalSeries> {
    a.div(b)
}

pub fn ps_sqrt(a: &RationalSeries) -> Result<RationalSeries> {
    a.sqrt()
}

pub fn ps_diff(a: &RationalSeries) -> RationalSeries {
    a.diff()
}

/// `sqrt(1 - 4z)` to the given order, computed once per order.
pub fn sqrt_one_minus_4z(order: usize) -> Arc<RationalSeries> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<RationalSeries>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().expect("cache lock").get(&order) {
        return Arc::clone(s);
    }
    let base = RationalSeries::from_integers([1i64, -4], order);
    let root = Arc::new(base.sqrt().expect("constant term is 1"));
    let mut guard = cache.lock().expect("cache lock");
    Arc::clone(guard.entry(order).or_insert(root))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogName {
    /// Catalan generating function.
    C,
    Od,
    Ev,
    Sod,
    Sev,
    Tod,
    Fod,
    Fev,
    FevBar,
    FodBar,
    SFod,
    SFodBar,
    SFev,
    SFevBar,
    /// Column `m` of the T table, `sum_n T(n, m) z^n`.
    Vertical(usize),
}

impl CatalogName {
    /// Every closed-form entry (all but `Vertical`).
    pub const CLOSED_FORMS: [CatalogName; 14] = [
        CatalogName::C,
        CatalogName::Od,
        CatalogName::Ev,
        CatalogName::Sod,
        CatalogName::Sev,
        CatalogName::Tod,
        CatalogName::Fod,
        CatalogName::Fev,
        CatalogName::FevBar,
        CatalogName::FodBar,
        CatalogName::SFod,
        CatalogName::SFodBar,
        CatalogName::SFev,
        CatalogName::SFevBar,
    ];

    pub fn name(self) -> String {
        match self {
            CatalogName::Vertical(m) => format!("Vertical({m})"),
            other => format!("{other:?}"),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CatalogName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(inner) = s
            .strip_prefix("Vertical(")
            .and_then(|r| r.strip_suffix(')'))
        {
            return inner
                .parse()
                .map(CatalogName::Vertical)
                .map_err(|_| format!("bad column in {s:?}"));
        }
        CatalogName::CLOSED_FORMS
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown series {s:?}"))
    }
}

/// Building blocks shared by the closed forms, all at one working order.
struct Blocks {
    order: usize,
    /// sqrt(1 - 4z)
    s: RationalSeries,
    /// 1 - 4z
    u: RationalSeries,
}

impl Blocks {
    fn new(order: usize) -> Self {
        Blocks {
            order,
            s: (*sqrt_one_minus_4z(order)).clone(),
            u: RationalSeries::from_integers([1i64, -4], order),
        }
    }

    fn z_pow(&self, k: usize, c: i64) -> RationalSeries {
        RationalSeries::monomial(k, rat(c), self.order)
    }

    fn half(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(2))
    }

    /// `c z^k / u^u_pow`, further divided by `s` when `s_pow == 1` or multiplied
    /// by it when `s_pow == -1`.
    fn term(&self, c: i64, k: usize, u_pow: usize, s_pow: i32) -> RationalSeries {
        let mut den = RationalSeries::one(self.order);
        for _ in 0..u_pow {
            den = den.mul(&self.u);
        }
        let mut num = self.z_pow(k, c);
        match s_pow {
            1 => den = den.mul(&self.s),
            -1 => num = num.mul(&self.s),
            _ => {}
        }
        num.div(&den).expect("unit denominator")
    }

    fn catalan(&self) -> RationalSeries {
        let one_minus_s = RationalSeries::one(self.order).sub(&self.s);
        one_minus_s.div(&self.z_pow(1, 2)).expect("valuation 1")
    }

    fn build(&self, name: CatalogName) -> RationalSeries {
        use CatalogName::*;
        let half = self.half();
        match name {
            C | Od | Fod | FodBar => self.catalan(),
            // s / (2u) - 1/2
            Ev => self
                .term(1, 0, 1, -1)
                .scale(&half)
                .sub(&RationalSeries::constant(half, self.order)),
            Sod => self.term(1, 1, 2, -1),
            Sev => self.term(1, 1, 1, 0).add(&self.term(1, 2, 2, 1)),
            Tod => self
                .term(2, 1, 2, 0)
                .add(&self.term(1, 2, 3, 1))
                .add(&self.term(1, 3, 3, 1)),
            Fev => self.term(1, 1, 0, 1),
            // (1 - 2z - s) / (2s)
            FevBar => {
                let num = RationalSeries::from_integers([1i64, -2], self.order).sub(&self.s);
                num.div(&self.s.scale(&rat(2))).expect("unit denominator")
            }
            SFod => self.term(1, 2, 1, 1).add(&self.term(1, 1, 0, 1)),
            SFodBar => self.term(1, 2, 1, 1),
            SFev => self
                .term(1, 1, 0, 1)
                .scale(&half)
                .add(&self.term(1, 1, 1, 0).scale(&half))
                .add(&self.term(2, 3, 1, 1))
                .add(&self.term(1, 2, 0, 1))
                .add(&self.term(2, 4, 2, 1)),
            // SFev - z Fod - z^2 Fod' - z SFod
            SFevBar => {
                let fod = self.catalan();
                let z = RationalSeries::z(self.order);
                self.build(SFev)
                    .sub(&z.mul(&fod))
                    .sub(&fod.diff().shift_up(2))
                    .sub(&z.mul(&self.build(SFod)))
            }
            Vertical(_) => unreachable!("not a closed form"),
        }
    }
}

/// Extra working precision so that derivatives and `z`-divisions still reach the order.
const GUARD: usize = 4;

/// The named series to `order`. `Vertical(m)` reads column `m` of a T table
/// covering sizes `0..=order`.
pub fn gf(name: CatalogName, order: usize, table: Option<&CountTable>) -> Result<RationalSeries> {
    if let CatalogName::Vertical(m) = name {
        return vertical_series(table, m, order);
    }
    let series = Blocks::new(order + GUARD).build(name).truncate(order);
    if name != CatalogName::SFev && !series.is_integral() {
        let power = series
            .coeffs
            .iter()
            .position(|c| !c.is_integer())
            .unwrap_or(0);
        return Err(Error::Integrality {
            power,
            value: series.coeff(power).to_string(),
        });
    }
    Ok(series)
}

fn vertical_series(table: Option<&CountTable>, m: usize, order: usize) -> Result<RationalSeries> {
    let table = table.ok_or_else(|| Error::Coverage {
        what: format!("column {m}: no table supplied"),
    })?;
    if table.kind() != CountKind::T {
        return Err(Error::Coverage {
            what: format!(
                "column {m}: vertical series need a T table, got {}",
                table.kind()
            ),
        });
    }
    if m > table.max_free() || order > table.max_size() {
        return Err(Error::Coverage {
            what: format!(
                "column {m} to order {order} (table is {}x{})",
                table.max_size(),
                table.max_free()
            ),
        });
    }
    let column = table.column(m).expect("checked");
    Ok(RationalSeries::new(
        column
            .into_iter()
            .take(order + 1)
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
        order,
    ))
}

/// Checks the vertical relation on a T table.
///
/// Summing `T(n+1, m) = T(n, m+1) + sum_k T(n-k, m) T(k, m)` over `n >= 0`
/// misses the base `T(1, m) = m`, so the relation that holds is
/// `z V_m^2 - V_m + z V_{m+1} + m z = 0`. The form without `m z` is recorded
/// too: it holds at `m = 0` and is an erratum (residual exactly `-m z`) above.
pub fn vertical_check(table: &CountTable, m: usize, order: usize) -> Result<Report> {
    let v = gf(CatalogName::Vertical(m), order, Some(table))?;
    let next = gf(CatalogName::Vertical(m + 1), order, Some(table))?;
    let printed = v
        .mul(&v)
        .shift_up(1)
        .sub(&v)
        .add(&next.shift_up(1))
        .truncate(order);
    let base = RationalSeries::monomial(1, rat(m as i64), order);
    let corrected = printed.add(&base);
    let describe = |r: &RationalSeries| match r.valuation() {
        None => "0".to_string(),
        Some(i) => format!("nonzero at z^{i}: {}", r.coeff(i)),
    };
    let mut report = Report::new("vertical");
    report.record(
        format!(
            "z V_{m}^2 - V_{m} + z V_{} + {m} z = 0 to order {order}",
            m + 1
        ),
        Status::from_bool(corrected.is_zero()),
        "0",
        describe(&corrected),
        "vertical generating functions",
    );
    let status = if printed.is_zero() {
        Status::Pass
    } else if corrected.is_zero() {
        Status::Erratum
    } else {
        Status::Fail
    };
    report.record(
        format!(
            "z V_{m}^2 - V_{m} + z V_{} = 0 to order {order} (as printed)",
            m + 1
        ),
        status,
        "0",
        describe(&printed),
        "misprint: vertical relation omits the T(1, m) = m term",
    );
    if order >= 1 {
        report.compare(
            format!("[z] V_{m} = {m}"),
            rat(m as i64).to_string(),
            v.coeff(1).to_string(),
            "first derivative at 0",
        );
    }
    Ok(report)
}

fn record_zero(report: &mut Report, name: &str, residual: &RationalSeries) {
    report.record(
        name,
        Status::from_bool(residual.is_zero()),
        "0",
        match residual.valuation() {
            None => "0".to_string(),
            Some(i) => format!("nonzero at z^{i}: {}", residual.coeff(i)),
        },
        "functional equation residual",
    );
}

/// Evaluates every functional equation and lemma relating the catalog series
/// as a residual, which must vanish to `order`.
pub fn identity_suite(order: usize) -> Report {
    let work = order + GUARD;
    let b = Blocks::new(work);
    let g = |name| b.build(name);
    let (od, ev, sod, sev, tod) = (
        g(CatalogName::Od),
        g(CatalogName::Ev),
        g(CatalogName::Sod),
        g(CatalogName::Sev),
        g(CatalogName::Tod),
    );
    let (c, fod, fodb, fev, fevb) = (
        g(CatalogName::C),
        g(CatalogName::Fod),
        g(CatalogName::FodBar),
        g(CatalogName::Fev),
        g(CatalogName::FevBar),
    );
    let (sfod, sfodb, sfev, sfevb) = (
        g(CatalogName::SFod),
        g(CatalogName::SFodBar),
        g(CatalogName::SFev),
        g(CatalogName::SFevBar),
    );
    let one = RationalSeries::one(work);
    let z = RationalSeries::z(work);
    let two = rat(2);
    let zx = |s: &RationalSeries| s.shift_up(1);

    let mut report = Report::new("gf-identities");
    let check = |report: &mut Report, name: &str, lhs: RationalSeries, rhs: RationalSeries| {
        record_zero(report, name, &lhs.sub(&rhs).truncate(order));
    };

    check(
        &mut report,
        "Od = 1 + z Od^2",
        od.clone(),
        one.add(&zx(&od.mul(&od))),
    );
    check(
        &mut report,
        "Ev = z Od + 2 z Ev Od",
        ev.clone(),
        zx(&od).add(&zx(&ev.mul(&od)).scale(&two)),
    );
    check(
        &mut report,
        "Ev = z Od / (1 - 2 z Od)",
        ev.clone(),
        zx(&od).div(&one.sub(&zx(&od).scale(&two))).expect("unit"),
    );
    check(
        &mut report,
        "Sod = Ev + Ev^2 + 2 z Od Sod",
        sod.clone(),
        ev.add(&ev.mul(&ev)).add(&zx(&od.mul(&sod)).scale(&two)),
    );
    check(
        &mut report,
        "Sev = z Od + z^2 Od' + z Sod + 2 z Od Sev + 2 z Ev Sod",
        sev.clone(),
        zx(&od)
            .add(&od.diff().shift_up(2))
            .add(&zx(&sod))
            .add(&zx(&od.mul(&sev)).scale(&two))
            .add(&zx(&ev.mul(&sod)).scale(&two)),
    );
    // Coefficient-level recurrence for the third odd coefficients, summed
    // over all splits: the even/second-even products carry no factor z and the
    // second/second products pair odd sizes.
    let tod_rhs = zx(&ev.diff())
        .add(&sev)
        .add(&ev.mul(&sev).scale(&two))
        .add(&zx(&od.mul(&tod)).scale(&two))
        .add(&zx(&sod.mul(&sod)));
    check(
        &mut report,
        "Tod = z Ev' + Sev + 2 Ev Sev + 2 z Od Tod + z Sod^2",
        tod.clone(),
        tod_rhs,
    );
    // The printed form has z on the Ev Sev product and Sev^2 in place of Sod^2;
    // it disagrees with both the closed form and the coefficient recurrence.
    let printed = zx(&ev.diff())
        .add(&sev)
        .add(&zx(&ev.mul(&sev)).scale(&two))
        .add(&zx(&od.mul(&tod)).scale(&two))
        .add(&zx(&sev.mul(&sev)));
    let residual = tod.sub(&printed).truncate(order);
    report.record(
        "Tod = z Ev' + Sev + 2 z Ev Sev + 2 z Od Tod + z Sev^2 (as printed)",
        if residual.is_zero() {
            Status::Pass
        } else {
            Status::Erratum
        },
        "0",
        match residual.valuation() {
            None => "0".to_string(),
            Some(i) => format!("nonzero at z^{i}: {}", residual.coeff(i)),
        },
        "misprint: Tod equation",
    );
    check(
        &mut report,
        "Fev = z Fod + FevBar",
        fev.clone(),
        zx(&fod).add(&fevb),
    );
    check(
        &mut report,
        "FevBar = z FodBar Fev + z FevBar Fod",
        fevb.clone(),
        zx(&fodb.mul(&fev)).add(&zx(&fevb.mul(&fod))),
    );
    check(
        &mut report,
        "FevBar = z Fod Fev / (1 - z Fod)",
        fevb.clone(),
        zx(&fod.mul(&fev)).div(&one.sub(&zx(&fod))).expect("unit"),
    );
    check(
        &mut report,
        "Fev = z / (1 - 2 z C)",
        fev.clone(),
        z.div(&one.sub(&zx(&c).scale(&two))).expect("unit"),
    );
    check(
        &mut report,
        "SFod = Fev + SFodBar",
        sfod.clone(),
        fev.add(&sfodb),
    );
    check(
        &mut report,
        "SFodBar = FevBar Fev + z SFodBar Fod + z SFod FodBar",
        sfodb.clone(),
        fevb.mul(&fev)
            .add(&zx(&sfodb.mul(&fod)))
            .add(&zx(&sfod.mul(&fodb))),
    );
    check(
        &mut report,
        "SFev = z Fod + z^2 Fod' + z SFod + SFevBar",
        sfev.clone(),
        zx(&fod)
            .add(&fod.diff().shift_up(2))
            .add(&zx(&sfod))
            .add(&sfevb),
    );
    let sfevb_terms = zx(&sfod.mul(&fevb))
        .add(&zx(&sfev.mul(&fodb)))
        .add(&zx(&fev.mul(&sfodb)));
    check(
        &mut report,
        "SFevBar = z SFod FevBar + z Fod SFevBar + z SFev FodBar + z Fev SFodBar",
        sfevb.clone(),
        sfevb_terms.add(&zx(&fod.mul(&sfevb))),
    );
    check(
        &mut report,
        "SFevBar = (z SFod FevBar + z SFev FodBar + z Fev SFodBar) / (1 - z C)",
        sfevb.clone(),
        sfevb_terms.div(&one.sub(&zx(&c))).expect("unit"),
    );
    check(
        &mut report,
        "1 - z C = 1 / C",
        one.sub(&zx(&c)),
        one.div(&c).expect("unit"),
    );
    check(
        &mut report,
        "1 - z C^2 = C sqrt(1-4z)",
        one.sub(&zx(&c.mul(&c))),
        c.mul(&b.s),
    );
    check(
        &mut report,
        "FevBar = z^2 C'",
        fevb.clone(),
        c.diff().shift_up(2),
    );
    check(&mut report, "SFodBar = z Sod", sfodb.clone(), zx(&sod));
    check(
        &mut report,
        "sqrt(1-4z)^2 = 1 - 4z",
        b.s.mul(&b.s),
        RationalSeries::from_integers([1i64, -4], work),
    );

    // Third summand of the Sev closed form against 2 a_{q-3},
    // a_n = (2n+1)(2n+3)(2n+5)/3 C_n - (n+2) 2^(2n+1).
    let composite = b.term(1, 2, 2, 1).sub(&b.term(1, 2, 2, 0));
    let mut bad = Vec::new();
    for q in 3..=order.min(40) {
        let n = (q - 3) as i64;
        let cat = BigRational::from_integer(BigInt::from(crate::counting::catalan(n as u64)));
        let a = rat((2 * n + 1) * (2 * n + 3) * (2 * n + 5)) / rat(3) * cat
            - rat(n + 2) * BigRational::from_integer(BigInt::one() << (2 * n + 1) as usize);
        if composite.coeff(q) != a * &two {
            bad.push(q);
        }
    }
    report.record(
        format!(
            "[z^q] z^2(1-s)/((1-4z)^2 s) = 2 a_(q-3) for 3 <= q <= {}",
            order.min(40)
        ),
        Status::from_bool(bad.is_empty()),
        "all agree",
        if bad.is_empty() {
            "all agree".to_string()
        } else {
            format!("differs at q = {bad:?}")
        },
        "closed form of the second even coefficients",
    );

    for name in CatalogName::CLOSED_FORMS {
        let s = b.build(name).truncate(order);
        report.compare(
            format!("{name} has integer coefficients"),
            true,
            s.is_integral(),
            "catalog integrality",
        );
    }
    report
}

/// The thirteen coefficient streams: series, polynomial family, odd sizes, rank.
pub const STREAMS: [(CatalogName, PolyKind, bool, usize); 13] = [
    (CatalogName::Od, PolyKind::T, true, 0),
    (CatalogName::Ev, PolyKind::T, false, 0),
    (CatalogName::Sod, PolyKind::T, true, 1),
    (CatalogName::Sev, PolyKind::T, false, 1),
    (CatalogName::Tod, PolyKind::T, true, 2),
    (CatalogName::Fod, PolyKind::Nf, true, 0),
    (CatalogName::Fev, PolyKind::Nf, false, 0),
    (CatalogName::SFod, PolyKind::Nf, true, 1),
    (CatalogName::SFev, PolyKind::Nf, false, 1),
    (CatalogName::FodBar, PolyKind::Neutral, true, 0),
    (CatalogName::FevBar, PolyKind::Neutral, false, 0),
    (CatalogName::SFodBar, PolyKind::Neutral, true, 1),
    (CatalogName::SFevBar, PolyKind::Neutral, false, 1),
];

fn stream_label(kind: PolyKind, odd: bool, rank: usize, q: usize) -> String {
    let poly = match kind {
        PolyKind::T => "P^T",
        PolyKind::Nf => "P^NF",
        PolyKind::Neutral => "Q",
    };
    let which = ["lead", "second", "third"][rank];
    let n = if odd { 2 * q + 1 } else { 2 * q };
    format!("{which}({poly}_{n})")
}

/// `[z^q]` of each catalog series against the matching top coefficient of the
/// recurrence polynomials, for `q <= max_q`.
pub fn gf_vs_polynomials(max_q: usize) -> Report {
    gf_vs_polynomials_with(&PolynomialCache::build(2 * max_q + 1), max_q)
}

pub fn gf_vs_polynomials_with(cache: &PolynomialCache, max_q: usize) -> Report {
    let mut report = Report::new("gf-vs-poly");
    for (name, kind, odd, rank) in STREAMS {
        let series = gf(name, max_q, None).expect("catalog series");
        for q in 0..=max_q {
            let n = if odd { 2 * q + 1 } else { 2 * q };
            let coefficient = top_coefficient(cache.get(kind, n), n, rank);
            report.compare(
                format!("[z^{q}]{name} = {}", stream_label(kind, odd, rank, q)),
                series.coeff(q).to_string(),
                coefficient.to_string(),
                format!("coefficients of {name}"),
            );
        }
    }
    report
}

/// Printed closed form for the second even normal-form coefficients against
/// the computed coefficients, with the series as arbiter.
pub fn nf_second_even_erratum(cache: &PolynomialCache) -> Report {
    let mut report = Report::new("nf-second-even");
    polynomials::check_coefficients(cache, &[CoefficientFamily::NfSecondEven], &mut report);
    report
}
