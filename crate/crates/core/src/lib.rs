//! Exact counting of untyped lambda terms and normal forms in de Bruijn
//! notation.
//!
//! - [`counting`]: the `T`, `F`, `G` count tables, Catalan, Motzkin and binomial numbers.
//! - [`terms`]: term syntax and exhaustive enumeration, used as a brute-force oracle.
//! - [`polynomials`]: the polynomials `m -> T(n, m)` and `m -> F(n, m)` and their top coefficients.
//! - [`series`]: truncated rational power series and the generating-function catalog.
//! - [`named`]: named-variable counts and the binomial transform to `T`.

pub mod counting;
pub mod error;
pub mod limits;
pub mod named;
pub mod polynomials;
pub mod report;
pub mod series;
pub mod terms;

pub use counting::{build_table, count, BigCount, CountKind, CountTable};
pub use error::{Error, Result};
pub use limits::Limits;
pub use named::FTable;
pub use polynomials::{CoefficientFamily, IntPolynomial, PolyKind, PolynomialCache};
pub use report::{Check, Report, Status, Summary};
pub use series::{CatalogName, RationalSeries};
pub use terms::Term;
