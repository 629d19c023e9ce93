//! Exact-rational symbolic expressions with a deterministic canonical form.
//!
//! An [`Expr`] is a flat sum of terms; each term is a rational coefficient
//! times a sorted multiset of [`Atom`]s. Multiplicative inverses are
//! distinct atoms (`den`/`num`, `fac`/`invfac`, `Gamma`/`InvGamma`) that
//! cancel pairwise on identical arguments, which keeps normalization a
//! purely local rewrite.

mod linear;
mod atom;
mod expr;
mod subst;
mod theta;

pub use linear::{EpsCoeff, IndexId, LinearArg, SymbolId};
pub use atom::{Atom, SSumData, UpperB};
pub use expr::{Expr, Term};
pub use subst::substitute;
pub use theta::simplify_theta_delta;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational coefficient type used throughout the engine.
pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn qr(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}
