//! Generator tokens and word evaluation on the representation.

use crate::quivercomb::{ColSeq, Quiver};

use super::coloured::ColouredExtElt;
use super::elt::{koszul_diff, ExtElt};

/// A single generator. `X`, `T` and the ω operators act on plain
/// elements; `Idem`, `Tau`, `Omega` and `OmegaRA` act on coloured ones;
/// `X` and `DN` act on both.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    X(usize),
    T(usize),
    WPlus(usize),
    WMinus(usize),
    Idem(ColSeq),
    Tau(usize),
    Omega,
    OmegaRA { r: usize, colour: usize, twist: u32 },
    DN(u32),
}

/// A word of generators; the leftmost token is applied last.
pub type GenWord = Vec<Gen>;

/// Evaluate an uncoloured word on an element.
pub fn act_ext(word: &[Gen], e: &ExtElt) -> ExtElt {
    let mut cur = e.clone();
    for g in word.iter().rev() {
        cur = match g {
            Gen::X(p) => cur.mul_poly(&crate::polyalg::Poly::var(*p, cur.n)),
            Gen::T(r) => cur.demazure_ext(*r),
            Gen::WPlus(i) => cur.wedge(*i),
            Gen::WMinus(i) => cur.contract(*i),
            Gen::DN(nn) => koszul_diff(*nn, &cur),
            _ => panic!("coloured token in uncoloured word"),
        };
    }
    cur
}

/// Evaluate a coloured word on an element.
pub fn act_col(quiver: &Quiver, word: &[Gen], e: &ColouredExtElt) -> ColouredExtElt {
    let mut cur = e.clone();
    for g in word.iter().rev() {
        cur = match g {
            Gen::X(p) => cur.x_act(*p),
            Gen::Idem(seq) => cur.idem(seq),
            Gen::Tau(r) => cur.tau_act(quiver, *r),
            Gen::Omega => cur.omega_act(),
            Gen::OmegaRA { r, colour, twist } => cur
                .higher_floating(quiver, *r, *colour, *twist)
                .expect("floating dot applied outside its domain"),
            _ => panic!("uncoloured token in coloured word"),
        };
    }
    cur
}
