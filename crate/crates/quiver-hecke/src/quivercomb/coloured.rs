//! Coloured permutations, crossing counts and colour restriction.

use itertools::Itertools;

use super::quiver::Quiver;
use crate::polyalg::{mask_elems, Mask, Perm};

/// A colour sequence: vertex indices, one per strand position.
pub type ColSeq = Vec<usize>;

/// Crossing counts of a coloured permutation, with arrow multiplicity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Crossings {
    pub equal: usize,
    pub right: usize,
    pub left: usize,
}

/// The image w(j): the sequence i with j_r = i_{w(r)}.
pub fn apply_colours(w: &Perm, j: &[usize]) -> ColSeq {
    let mut i = vec![0; j.len()];
    for (r, &c) in j.iter().enumerate() {
        i[w.apply(r + 1) - 1] = c;
    }
    i
}

/// Counts crossings of (w, j) with j the bottom colouring: a crossing is a
/// pair r < t with w(r) > w(t); it contributes to `equal` when the colours
/// agree, and to `right`/`left` with multiplicity h_{j_r, j_t} / h_{j_t, j_r}.
pub fn crossing_counts(quiver: &Quiver, w: &Perm, j: &[usize]) -> Crossings {
    assert_eq!(w.n(), j.len());
    let mut out = Crossings { equal: 0, right: 0, left: 0 };
    for r in 1..=j.len() {
        for t in r + 1..=j.len() {
            if w.apply(r) > w.apply(t) {
                if j[r - 1] == j[t - 1] {
                    out.equal += 1;
                } else {
                    out.right += quiver.h(j[r - 1], j[t - 1]);
                    out.left += quiver.h(j[t - 1], j[r - 1]);
                }
            }
        }
    }
    out
}

/// The subpermutation of the strands with bottom colour `colour`.
pub fn colour_restrict(w: &Perm, j: &[usize], colour: usize) -> Perm {
    let bottoms: Vec<usize> = (1..=j.len()).filter(|&r| j[r - 1] == colour).collect();
    let tops: Vec<usize> = bottoms.iter().map(|&r| w.apply(r)).collect();
    let mut sorted = tops.clone();
    sorted.sort_unstable();
    let images: Vec<usize> = tops
        .iter()
        .map(|t| sorted.iter().position(|s| s == t).unwrap() + 1)
        .collect();
    Perm::from_one_line(&images)
}

/// The subpermutation with `j` read as the top colouring.
pub fn colour_restrict_top(w: &Perm, j_top: &[usize], colour: usize) -> Perm {
    colour_restrict(&w.inverse(), j_top, colour).inverse()
}

/// Re-index a subset of coloured positions within its colour class.
pub fn subset_restrict(mask: Mask, j: &[usize], colour: usize) -> Mask {
    let positions: Vec<usize> = (1..=j.len()).filter(|&r| j[r - 1] == colour).collect();
    let mut out = 0u32;
    for e in mask_elems(mask) {
        if let Some(rank) = positions.iter().position(|&p| p == e) {
            out |= 1 << rank;
        }
    }
    out
}

/// Number of positions of each colour in a mask.
pub fn colour_content(mask: Mask, j: &[usize], num_colours: usize) -> Vec<usize> {
    let mut k = vec![0; num_colours];
    for e in mask_elems(mask) {
        k[j[e - 1]] += 1;
    }
    k
}

/// The sequence listing each colour in vertex order with its multiplicity.
pub fn base_seq(n_vec: &[usize]) -> ColSeq {
    let mut base: ColSeq = Vec::new();
    for (colour, &mult) in n_vec.iter().enumerate() {
        base.extend(std::iter::repeat(colour).take(mult));
    }
    base
}

/// All colour sequences with the given multiplicities, lexicographic order.
pub fn colour_seqs(n_vec: &[usize]) -> Vec<ColSeq> {
    let base = base_seq(n_vec);
    let n = base.len();
    base.into_iter().permutations(n).unique().sorted().collect()
}

/// A generator token of the extended quiver Hecke algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegTok {
    /// Dot X_r.
    X(usize),
    /// Crossing tau_r.
    Tau(usize),
    /// Leftmost floating dot.
    Omega,
}

/// A word in generators, leftmost factor first; it acts on a bottom colour
/// sequence threaded right to left.
pub type DegWord = Vec<DegTok>;

/// Degree of word * 1_j; errors are impossible for valid indices.
pub fn degree_of_word(quiver: &Quiver, n_vec: &[usize], word: &[DegTok], j: &[usize]) -> i64 {
    let mut colours = j.to_vec();
    let mut deg: i64 = 0;
    for tok in word.iter().rev() {
        match *tok {
            DegTok::X(_) => deg += 2,
            DegTok::Tau(r) => {
                assert!(1 <= r && r < colours.len());
                let (a, b) = (colours[r - 1], colours[r]);
                deg += if a == b {
                    -2
                } else {
                    2 * quiver.h(a, b) as i64
                };
                colours.swap(r - 1, r);
            }
            DegTok::Omega => deg += 2 * (n_vec[colours[0]] as i64 - 1),
        }
    }
    deg
}

/// The word of tau tokens of a reduced expression of w.
pub fn tau_word(w: &Perm) -> DegWord {
    w.reduced_word().into_iter().map(DegTok::Tau).collect()
}

/// The k-dot element: the longest permutation of the first k strands with one
/// floating dot behind each of them.
pub fn omega_word(k: usize) -> DegWord {
    if k == 0 {
        return Vec::new();
    }
    let mut word = vec![DegTok::Omega];
    for m in 1..k {
        for r in (1..=m).rev() {
            word.push(DegTok::Tau(r));
        }
        word.push(DegTok::Omega);
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::mask_from_elems;
    use crate::quivercomb::quiver::{gamma1, gamma2, gamma3, one_vertex, single_arrow};

    // Bottom colours (g, b, r, r, b) with vertex order (r, b, g); the strand
    // from bottom position q ends at top position w(q).
    fn worked_example() -> (Perm, ColSeq) {
        (Perm::from_one_line(&vec![4, 5, 3, 1, 2]), vec![2, 1, 0, 0, 1])
    }

    #[test]
    fn crossing_counts_worked_example() {
        let (w, j) = worked_example();
        let c1 = crossing_counts(&gamma1(), &w, &j);
        assert_eq!((c1.equal, c1.right, c1.left), (2, 2, 2));
        let c2 = crossing_counts(&gamma2(), &w, &j);
        assert_eq!((c2.equal, c2.right, c2.left), (2, 3, 4));
        let c3 = crossing_counts(&gamma3(), &w, &j);
        assert_eq!((c3.equal, c3.right, c3.left), (2, 4, 5));
        let id = crossing_counts(&gamma1(), &Perm::identity(5), &j);
        assert_eq!((id.equal, id.right, id.left), (0, 0, 0));
        // Top colours match the drawn diagram (r, b, r, g, b).
        assert_eq!(apply_colours(&w, &j), vec![0, 1, 0, 2, 1]);
    }

    #[test]
    fn crossing_counts_additive_over_quiver_sum() {
        let (w, j) = worked_example();
        let a = crossing_counts(&gamma1(), &w, &j);
        let b = crossing_counts(&gamma3(), &w, &j);
        let s = crossing_counts(&gamma1().sum(&gamma3()), &w, &j);
        assert_eq!(s.right, a.right + b.right);
        assert_eq!(s.left, a.left + b.left);
        assert_eq!(s.equal, a.equal);
    }

    #[test]
    fn restriction_lengths_sum_to_equal_crossings() {
        let (w, j) = worked_example();
        let total: usize = (0..3).map(|c| colour_restrict(&w, &j, c).len()).sum();
        assert_eq!(total, crossing_counts(&gamma1(), &w, &j).equal);
        // Strands 1 and 3 of (i,j,i,j) do not cross under s_2.
        let j2 = vec![0, 1, 0, 1];
        let s2 = Perm::s(2, 4);
        assert!(colour_restrict(&s2, &j2, 0).is_identity());
        assert_eq!(
            subset_restrict(mask_from_elems(&[1, 4]), &j2, 0),
            mask_from_elems(&[1])
        );
        assert_eq!(
            subset_restrict(mask_from_elems(&[1, 4]), &j2, 1),
            mask_from_elems(&[2])
        );
    }

    #[test]
    fn degree_examples() {
        let q = single_arrow();
        // Same-colour crossing.
        assert_eq!(degree_of_word(&q, &[2, 0], &[DegTok::Tau(1)], &[0, 0]), -2);
        // One vertex, n = 3: the floating dot has degree 2(n - 1).
        assert_eq!(
            degree_of_word(&one_vertex(), &[3], &[DegTok::Omega], &[0, 0, 0]),
            4
        );
        assert_eq!(degree_of_word(&q, &[1, 1], &[DegTok::X(1)], &[0, 1]), 2);
        // Different-colour crossing across the arrow.
        assert_eq!(degree_of_word(&q, &[1, 1], &[DegTok::Tau(1)], &[0, 1]), 2);
        assert_eq!(degree_of_word(&q, &[1, 1], &[DegTok::Tau(1)], &[1, 0]), 0);
    }

    #[test]
    fn tau_word_degree_matches_crossing_counts() {
        let (w, j) = worked_example();
        for q in [gamma1(), gamma2(), gamma3()] {
            let c = crossing_counts(&q, &w, &j);
            let deg = degree_of_word(&q, &[2, 2, 1], &tau_word(&w), &j);
            assert_eq!(deg, 2 * c.right as i64 - 2 * c.equal as i64);
        }
    }

    #[test]
    fn omega_word_shape() {
        // One dot and no crossings for k = 1; crossings form the longest
        // element of S_k in general.
        assert_eq!(omega_word(1), vec![DegTok::Omega]);
        let w3 = omega_word(3);
        let dots = w3.iter().filter(|t| matches!(t, DegTok::Omega)).count();
        let taus: Vec<usize> = w3
            .iter()
            .filter_map(|t| match t {
                DegTok::Tau(r) => Some(*r),
                _ => None,
            })
            .collect();
        assert_eq!(dots, 3);
        let w = Perm::from_word(&taus, 3);
        assert_eq!(w, Perm::longest(3));
    }
}
