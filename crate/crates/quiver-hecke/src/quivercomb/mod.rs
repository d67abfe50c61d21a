//! Quivers, coloured permutations, cell labels and degree–dimension counts.

mod coloured;
mod degdim;
mod flag;
mod gell;
mod quiver;

pub use coloured::{
    apply_colours, base_seq, colour_content, colour_restrict, colour_restrict_top, colour_seqs,
    crossing_counts, degree_of_word, omega_word, subset_restrict, tau_word, ColSeq, Crossings,
    DegTok, DegWord,
};
pub use degdim::{
    alpha_reformulation_holds, degree_dim_check, flag_pair_check, realize_gell, DegDimReport,
};
pub use flag::{dim_x, dim_x_intersect, relpos_factor, FlagModel};
pub use gell::{
    cell_enumerate, dim_flag, dim_grass, gell_dimension, gell_enumerate, gell_right_crossings,
    GellLabel,
};
pub use quiver::{
    gamma1, gamma2, gamma3, kronecker, one_vertex, single_arrow, single_arrow_reversed,
    test_quivers, Quiver, QuiverError,
};
