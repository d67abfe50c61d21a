//! Grassmannian cell labels and their dimension formula.

use std::fmt;

use super::coloured::{apply_colours, crossing_counts, ColSeq};
use super::quiver::Quiver;
use crate::polyalg::{all_perms, block_subgroup, min_coset_reps, Perm};

/// Label (x, y, z, j) of a Grassmannian cell: x a minimal left coset
/// representative of S_n/(S_k x S_{n-k}), y in the block subgroup, z a
/// minimal right coset representative, j the bottom colour sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GellLabel {
    pub k: usize,
    pub x: Perm,
    pub y: Perm,
    pub z: Perm,
    pub j: ColSeq,
}

impl fmt::Display for GellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = self
            .j
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "x={} y={} z={} j={}", self.x, self.y, self.z, j)
    }
}

impl GellLabel {
    pub fn n(&self) -> usize {
        self.j.len()
    }

    /// The longest element of S_k inside S_n.
    pub fn w0k(&self) -> Perm {
        Perm::longest_k(self.k, self.n())
    }

    /// The underlying permutation x w_{0,k} y z.
    pub fn product(&self) -> Perm {
        self.x.compose(&self.w0k()).compose(&self.y).compose(&self.z)
    }

    /// Top colour sequence of the cell.
    pub fn top_colours(&self) -> ColSeq {
        apply_colours(&self.product(), &self.j)
    }

    /// Bottom colour sequences of the factors z, y, w_{0,k}, x in turn.
    pub fn factor_colours(&self) -> [ColSeq; 4] {
        let cz = self.j.clone();
        let cy = apply_colours(&self.z, &cz);
        let cw = apply_colours(&self.y, &cy);
        let cx = apply_colours(&self.w0k(), &cw);
        [cz, cy, cw, cx]
    }

    /// Grassmannian dimension vector: colour content of z^{-1}([1;k]) under j.
    pub fn kvec(&self, num_colours: usize) -> Vec<usize> {
        let mut k = vec![0; num_colours];
        let zinv = self.z.inverse();
        for p in 1..=self.k {
            k[self.j[zinv.apply(p) - 1]] += 1;
        }
        k
    }

    /// Multiplicities of each colour in j.
    pub fn nvec(&self, num_colours: usize) -> Vec<usize> {
        let mut n = vec![0; num_colours];
        for &c in &self.j {
            n[c] += 1;
        }
        n
    }
}

/// Dimension of the coloured flag variety: sum of n_i (n_i - 1) / 2.
pub fn dim_flag(n_vec: &[usize]) -> usize {
    n_vec.iter().map(|&n| n * (n - 1) / 2).sum()
}

/// Dimension of the Grassmannian product: sum of k_i (n_i - k_i).
pub fn dim_grass(n_vec: &[usize], k_vec: &[usize]) -> usize {
    n_vec.iter().zip(k_vec).map(|(&n, &k)| k * (n - k)).sum()
}

/// All labels with the given sizes and bottom colouring.
pub fn gell_enumerate(n: usize, k: usize, j: &[usize]) -> Vec<GellLabel> {
    assert!(k <= n && j.len() == n);
    let mut out = Vec::new();
    for x in min_coset_reps(n, k) {
        for y in block_subgroup(n, k) {
            for zinv in min_coset_reps(n, k) {
                out.push(GellLabel {
                    k,
                    x: x.clone(),
                    y: y.clone(),
                    z: zinv.inverse(),
                    j: j.to_vec(),
                });
            }
        }
    }
    out
}

/// Dimension of the cell: dim F + dim G + half the excess k_i(k_i - 1) plus
/// the same-colour crossing numbers of x, y, z and w_{0,k} (each with its own
/// bottom colouring), minus sum of (n_i - 1) k_i.
pub fn gell_dimension(quiver: &Quiver, label: &GellLabel) -> i64 {
    let m = quiver.num_vertices();
    let n_vec = label.nvec(m);
    let k_vec = label.kvec(m);
    let [cz, cy, cw, cx] = label.factor_colours();
    let xe = crossing_counts(quiver, &label.x, &cx).equal
        + crossing_counts(quiver, &label.y, &cy).equal
        + crossing_counts(quiver, &label.z, &cz).equal
        + crossing_counts(quiver, &label.w0k(), &cw).equal;
    let excess: i64 = k_vec.iter().map(|&k| (k * k) as i64 - k as i64).sum();
    let float: i64 = n_vec
        .iter()
        .zip(&k_vec)
        .map(|(&n, &k)| ((n - 1) * k) as i64)
        .sum();
    dim_flag(&n_vec) as i64 + dim_grass(&n_vec, &k_vec) as i64 + excess / 2 + xe as i64 - float
}

/// Sum of X->(x), X->(y), X->(z), X->(w_{0,k}), each with its own colouring.
pub fn gell_right_crossings(quiver: &Quiver, label: &GellLabel) -> usize {
    let [cz, cy, cw, cx] = label.factor_colours();
    crossing_counts(quiver, &label.x, &cx).right
        + crossing_counts(quiver, &label.y, &cy).right
        + crossing_counts(quiver, &label.z, &cz).right
        + crossing_counts(quiver, &label.w0k(), &cw).right
}

/// Labels of the degenerate k = 0 stratification: one per permutation.
pub fn cell_enumerate(n: usize, j: &[usize]) -> Vec<GellLabel> {
    all_perms(n)
        .into_iter()
        .map(|z| GellLabel { k: 0, x: Perm::identity(n), y: Perm::identity(n), z, j: j.to_vec() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivercomb::quiver::one_vertex;

    #[test]
    fn enumeration_counts() {
        assert_eq!(gell_enumerate(2, 1, &[0, 0]).len(), 4);
        assert_eq!(gell_enumerate(3, 1, &[0, 0, 0]).len(), 3 * 2 * 3);
        assert_eq!(gell_enumerate(3, 0, &[0, 0, 0]).len(), 6);
    }

    #[test]
    fn minimal_label_dimension() {
        let q = one_vertex();
        let n = 2;
        let label = GellLabel {
            k: 1,
            x: Perm::identity(n),
            y: Perm::identity(n),
            z: Perm::identity(n),
            j: vec![0, 0],
        };
        // dim F = 1, dim G = 1, excess 0, crossings 0, floating (n-1)k = 1.
        assert_eq!(gell_dimension(&q, &label), 1);
    }

    #[test]
    fn k_zero_reduces_to_cells() {
        let q = one_vertex();
        for label in cell_enumerate(3, &[0, 0, 0]) {
            let expect = dim_flag(&[3]) as i64 + label.z.len() as i64;
            assert_eq!(gell_dimension(&q, &label), expect);
        }
    }

    #[test]
    fn kvec_reads_bottom_subset() {
        // z = s_2 s_1 maps bottom {2, 3} to top [1;2].
        let z = Perm::s(2, 3).compose(&Perm::s(1, 3));
        assert_eq!(z.apply(2), 1);
        assert_eq!(z.apply(3), 2);
        let label = GellLabel {
            k: 2,
            x: Perm::identity(3),
            y: Perm::identity(3),
            z,
            j: vec![0, 1, 0],
        };
        assert_eq!(label.kvec(2), vec![1, 1]);
    }
}
