//! The quantum matrix bialgebra M_q(3): normal ordering, Hopf maps, star.

mod hopf;
mod poly;
mod reduce;

pub use hopf::{
    antipode, antipode_generator, coproduct, coproduct_generator, coproduct_left,
    coproduct_right, coproduct_word, counit, counit_left, counit_monomial, counit_right,
    defining_relations, det_minus_one, quantum_det, quantum_minor, star, star_generator,
    Relation, Tensor3,
};
pub use poly::{multiply, normal_order_word, parse_word, Gen, Monomial, NCPoly, TensorNCPoly};
pub use reduce::{Reducer, Strategy};
