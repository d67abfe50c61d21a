//! Exact polynomial, rational-function and symmetric-group foundations.

mod matrix;
mod perm;
mod poly;
mod ratfunc;
mod subset;

pub use matrix::{poly_mat_rank, QMatrix};
pub use perm::{
    all_perms, block_subgroup, coset_decompose, min_coset_reps, right_coset_decompose, Perm,
};
pub use poly::{demazure, monos_of_degree, rat, rat_frac, Mono, Poly, Rat};
pub use ratfunc::{LinProd, RatFunc};
pub use subset::{all_subsets, mask_complement, mask_elems, mask_from_elems, subsets_of_size, Mask};
