//! Exact arithmetic: Laurent polynomials with ½ℤ exponents, parameter rational functions,
//! and x-polynomials over either exact or evaluated coefficients.

pub mod eval;
pub mod laurent;
pub mod paramrat;
pub mod params;
pub mod poly;
pub mod polyx;
pub mod text;

use num_rational::BigRational;

pub use eval::EvalPoint;
pub use laurent::{LaurentPoly, Ring};
pub use paramrat::ParamRat;
pub use params::{param_ring, pmono, Param, NPARAMS};
pub use poly::{Exps, Poly, Scalar};
pub use polyx::{parse_polyx, PolyX};

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
