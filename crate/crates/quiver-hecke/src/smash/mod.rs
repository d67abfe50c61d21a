//! Faithful polynomial-representation models of the nil-Hecke algebras and
//! their KLR generalizations, with extraction back to basis coordinates.

mod basis;
mod coloured_op;
mod homology;
mod op;
mod pbw;
mod relations;

pub use basis::{basis_check_er, BasisCheck};
pub use coloured_op::{block_weight, ColouredCrossedOp};
pub use homology::{
    cyclotomic_dims, dd_element, epol_h0_oracle, graded_homology, verify_dg, DgSpace,
    HomologyCell, HomologySummary,
};
pub use op::{dd_mat, CrossedOp, OmegaMat};
pub use pbw::{car_mat, pbw_extract, t_word_op, AlgebraKind, PBWElt, SmashError};
pub use relations::{
    eenh_suite, enh_omega1_suite, enh_suite, floating_suite, klr_suite, nh_suite,
    verify_relation, verify_relation_col, RelCase,
};
