//! Numeric *-representations of SU_q(3) on truncated Fock spaces.

mod checks;
mod operator;
mod shift;
mod space;
mod word;

pub use operator::{SparseOperator, SparseVec};
pub use shift::{apply_matrix_element, closed_form_image, image_deviation, ImageDeviation, pi121_image, StateMap};
pub use space::TruncatedSpace;
pub use word::{elementary_op, word_op, Leg, TorusChar, Word, WordRep};
pub use checks::{completeness_defect, homomorphy_defect, relation_defect, star_defect, t_operators};
