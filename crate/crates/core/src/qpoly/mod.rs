//! Closed forms: univariate and bivariate quantum q-Krawtchouk polynomials,
//! Wall polynomials, the representation shift scalars and the Wall product identity.
//!
//! Rational parts are evaluated exactly at rational q; square roots are taken last.

mod bi;
mod exact;
mod uni;
mod wall;

pub use bi::{
    bi_shift_factorized, bi_shift_scalar, bi_shift_target, kraw2_dual_orthogonality,
    kraw2_norm, kraw2_orthogonality, kraw2_tratnik, kraw2_weight, kraw2_weight_squared, simplex,
    tratnik_scalar,
};
pub use uni::{
    kraw1, kraw1_norm, kraw1_orthogonality, kraw1_weight, kraw1_weight_squared, uni_shift_scalar,
};
pub use wall::{
    coeff_c, wall_identity_grid, wall_identity_sides, wall_orthonormality, wall_pbar, WallPoint,
};
