//! Quantum matrix algebra M_q(3), symmetric SU_q(3) corepresentation matrix
//! elements, quantum q-Krawtchouk and Wall polynomials, and their numeric
//! representations on truncated Fock spaces.

pub mod error;
pub mod corep;
pub mod ncalg;
pub mod qpoly;
pub mod qscalar;
pub mod reps;
pub mod verify;

pub use error::{QError, QResult};
