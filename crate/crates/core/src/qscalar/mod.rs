//! Exact Laurent polynomials in q, scalar fields, q-Pochhammer symbols,
//! q-binomials and terminating ₂φ₁ series.

mod base;
mod field;
mod laurent;
mod series;

pub use base::QBase;
pub use field::{principal_sqrt, rational_to_f64, QField};
pub use laurent::{format_rational, parse_rational, rational_pow, LaurentScalar};
pub use series::{
    phi21_terminating, q_binomial, q_binomial_value, q_multinomial, q_multinomial_value,
    q_pochhammer, q_pochhammer_exact, q_pochhammer_inf, PochBase, PochLength, QPochSpec, QValue,
    Scalar, UpperParam, INF_PRODUCT_CUTOFF,
};
