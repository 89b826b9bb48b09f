//! De Bruijn terms: representation, text syntax, normal-form test and
//! exhaustive enumeration by size.

use crate::counting::{self, CountKind};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::report::Report;
use num_traits::ToPrimitive;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// De Bruijn index, starting at 1.
    Index(u32),
    Abstraction(Box<Term>),
    Application(Box<Term>, Box<Term>),
}

impl Term {
    pub fn lam(body: Term) -> Term {
        Term::Abstraction(Box::new(body))
    }

    pub fn app(function: Term, argument: Term) -> Term {
        Term::Application(Box::new(function), Box::new(argument))
    }

    /// One per index, abstraction and application node.
    pub fn size(&self) -> usize {
        match self {
            Term::Index(_) => 1,
            Term::Abstraction(b) => 1 + b.size(),
            Term::Application(f, a) => 1 + f.size() + a.size(),
        }
    }

    /// Least `m` such that every index at binder depth `d` is at most `d + m`.
    pub fn max_free_needed(&self) -> usize {
        fn go(t: &Term, depth: usize) -> usize {
            match t {
                Term::Index(k) => (*k as usize).saturating_sub(depth),
                Term::Abstraction(b) => go(b, depth + 1),
                Term::Application(f, a) => go(f, depth).max(go(a, depth)),
            }
        }
        go(self, 0)
    }

    /// True iff no subterm is an abstraction in function position.
    pub fn is_normal(&self) -> bool {
        match self {
            Term::Index(_) => true,
            Term::Abstraction(b) => b.is_normal(),
            Term::Application(f, a) => {
                !matches!(**f, Term::Abstraction(_)) && f.is_normal() && a.is_normal()
            }
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

pub fn term_size(t: &Term) -> usize {
    t.size()
}

pub fn max_free_needed(t: &Term) -> usize {
    t.max_free_needed()
}

pub fn is_normal(t: &Term) -> bool {
    t.is_normal()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Index(k) => write!(f, "{k}"),
            Term::Abstraction(b) => write!(f, "\\{b}"),
            Term::Application(g, a) => write!(f, "({g} {a})"),
        }
    }
}

impl std::str::FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Parses `term := INT | "\" term | "(" term " " term ")"`.
pub fn parse(s: &str) -> Result<Term> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let t = p.term()?;
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.src.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", byte as char)))
        }
    }

    fn term(&mut self) -> Result<Term> {
        // Abstractions are iterated rather than recursed to keep deep
        // lambda chains off the stack.
        let mut binders = 0;
        while self.src.get(self.pos) == Some(&b'\\') {
            self.pos += 1;
            binders += 1;
        }
        let mut t = match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let f = self.term()?;
                self.expect(b' ')?;
                let a = self.term()?;
                self.expect(b')')?;
                Term::app(f, a)
            }
            Some(c) if c.is_ascii_digit() => self.index()?,
            None => return Err(self.error("unexpected end of input")),
            Some(_) => return Err(self.error("expected term")),
        };
        for _ in 0..binders {
            t = Term::lam(t);
        }
        Ok(t)
    }

    fn index(&mut self) -> Result<Term> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(Error::Syntax {
                offset: start,
                message: "leading zero in index".into(),
            });
        }
        match digits.parse::<u32>() {
            Ok(k) if k >= 1 => Ok(Term::Index(k)),
            _ => Err(Error::Syntax {
                offset: start,
                message: format!("invalid index {digits:?}"),
            }),
        }
    }
}

type TermIter = Box<dyn Iterator<Item = Term>>;

fn all_terms(n: usize, m: usize) -> TermIter {
    match n {
        0 => Box::new(std::iter::empty()),
        1 => Box::new((1..=m as u32).map(Term::Index)),
        _ => {
            let abstractions = all_terms(n - 1, m + 1).map(Term::lam);
            let applications = (1..n - 1).flat_map(move |left| {
                all_terms(left, m).flat_map(move |f| {
                    all_terms(n - 1 - left, m).map(move |a| Term::app(f.clone(), a))
                })
            });
            Box::new(abstractions.chain(applications))
        }
    }
}

fn normal_forms(n: usize, m: usize) -> TermIter {
    match n {
        0 => Box::new(std::iter::empty()),
        1 => neutral_forms(1, m),
        _ => Box::new(
            normal_forms(n - 1, m + 1)
                .map(Term::lam)
                .chain(neutral_forms(n, m)),
        ),
    }
}

fn neutral_forms(n: usize, m: usize) -> TermIter {
    match n {
        0 => Box::new(std::iter::empty()),
        1 => Box::new((1..=m as u32).map(Term::Index)),
        _ => Box::new((1..n - 1).flat_map(move |left| {
            neutral_forms(left, m).flat_map(move |f| {
                normal_forms(n - 1 - left, m).map(move |a| Term::app(f.clone(), a))
            })
        })),
    }
}

/// Lazily enumerated terms of one size, in canonical order.
pub struct Enumeration {
    inner: TermIter,
    remaining: usize,
}

impl Iterator for Enumeration {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        let t = self.inner.next()?;
        self.remaining -= 1;
        Some(t)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for Enumeration {}

/// Every term of size `n` with indices within `m`, each exactly once.
///
/// Order: indices ascending, then abstractions (in the order of their bodies),
/// then applications by left operand size, left operand order, right operand
/// order. With `normal_only` the normal forms are generated directly from the
/// normal/neutral grammar; the order is the same as filtering the full
/// enumeration. Refused when the predicted count exceeds `limits.max_enum`.
pub fn enumerate(n: usize, m: usize, normal_only: bool, limits: &Limits) -> Result<Enumeration> {
    let kind = if normal_only {
        CountKind::F
    } else {
        CountKind::T
    };
    let predicted = counting::count(kind, n, m);
    let fits = predicted
        .to_u64()
        .filter(|&c| c <= limits.max_enum)
        .and_then(|c| usize::try_from(c).ok());
    let Some(remaining) = fits else {
        return Err(Error::ResourceLimit {
            limit: "max-enum",
            requested: format!("{predicted} terms"),
            allowed: limits.max_enum,
        });
    };
    let inner = if normal_only {
        normal_forms(n, m)
    } else {
        all_terms(n, m)
    };
    Ok(Enumeration { inner, remaining })
}

/// Compares enumeration counts with the recurrence counts on a rectangle.
pub fn crosscheck_counts(max_size: usize, max_free: usize, limits: &Limits) -> Result<Report> {
    let t = counting::build_table(CountKind::T, max_size, max_free, limits)?;
    let f = counting::build_table(CountKind::F, max_size, max_free, limits)?;
    let mut report = Report::new("enumeration");
    for n in 0..=max_size {
        for m in 0..=max_free {
            let t_nm = t.get(n, m).expect("in range").clone();
            let f_nm = f.get(n, m).expect("in range").clone();
            let mut all = 0u64;
            let mut filtered = Vec::new();
            for term in enumerate(n, m, false, limits)? {
                all += 1;
                if term.is_normal() {
                    filtered.push(term);
                }
            }
            let direct: Vec<Term> = enumerate(n, m, true, limits)?.collect();
            report.compare(
                format!("|terms({n},{m})| = T({n},{m})"),
                t_nm.to_string(),
                all.to_string(),
                "term enumeration vs T recurrence",
            );
            report.compare(
                format!("|normal({n},{m})| = F({n},{m})"),
                f_nm.to_string(),
                direct.len().to_string(),
                "normal-form grammar vs F recurrence",
            );
            report.compare(
                format!("filter(terms({n},{m})) = normal({n},{m})"),
                direct.len().to_string(),
                if filtered == direct {
                    filtered.len().to_string()
                } else {
                    format!("{} (differs)", filtered.len())
                },
                "redex filter vs normal-form grammar",
            );
        }
    }
    Ok(report)
}
