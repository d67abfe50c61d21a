//! Equivariant Schubert calculus on Grassmannian and quiver flag towers:
//! fixed-point localization, restriction tables, convolution kernels and
//! the star product.

mod euler;
mod table;

pub use euler::{euler, EulerKind};
pub use table::{
    dominates, inv_pairs, schubert_build, table_cascade, verify_backends,
    verify_lambda_identities, verify_table, verify_wall_crossing, BuildMethod, SchubertError,
    SchubertTable,
};
