//! The polynomial-exterior representation and all generator actions on it.

mod coloured;
mod elt;
mod gens;

pub use coloured::{floating_element, ColouredExtElt, ExtRepError};
pub use elt::{koszul_diff, koszul_ps, merge_sign, ExtElt};
pub use gens::{act_col, act_ext, Gen, GenWord};
