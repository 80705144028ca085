//! Exact arithmetic in cyclotomic fields Q(ζ_m).

mod cyclo;
mod element;
pub mod modp;
mod sign;

pub use cyclo::euler_phi;
pub use element::{arith, ArithOp, FieldElement};
pub use sign::{approx_f64, enclose, sign_of, Sign, SignWitness};

/// Rational numbers: the coefficient domain of every field element.
pub type Rational = num_rational::BigRational;
