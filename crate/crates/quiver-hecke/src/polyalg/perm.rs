//! Permutations of [1;n], reduced words, Bruhat order, coset decompositions.

use std::fmt;

/// One-line notation; `images[i]` is w(i+1) − 1. Composition is right-to-left
/// (as functions): (v∘w)(i) = v(w(i)).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Perm(images)
    }

    /// One-line notation with 1-based entries, e.g. [2,1,3].
    pub fn from_one_line(line: &[usize]) -> Self {
        Perm::from_images(line.iter().map(|&i| i - 1).collect())
    }

    /// The adjacent transposition s_r = (r, r+1), 1-based.
    pub fn s(r: usize, n: usize) -> Self {
        assert!(1 <= r && r < n);
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(r - 1, r);
        Perm(v)
    }

    /// The transposition (i, j), 1-based.
    pub fn transposition(i: usize, j: usize, n: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, j - 1);
        Perm(v)
    }

    /// Longest element of S_n.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    /// w_{0,k}: the longest element of S_k × S_1 × … ⊂ S_n (reverses [1;k]).
    pub fn longest_k(k: usize, n: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v[..k].reverse();
        Perm(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// w(i) with 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    /// w(i) with 0-based i.
    pub fn apply0(&self, i: usize) -> usize {
        self.0[i]
    }

    /// (self∘other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.n()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Coxeter length = inversion count.
    pub fn len(&self) -> usize {
        let n = self.n();
        let mut l = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// A reduced word (list of 1-based simple-reflection indices r with
    /// w = s_{r_1}∘s_{r_2}∘…∘s_{r_l}).
    pub fn reduced_word(&self) -> Vec<usize> {
        // Peel descents on the left: if w has r with w(r) > w(r+1) at the
        // bottom... use right descents of the running permutation: w = w'·s_r
        // with l(w') = l(w)−1 when w(r) > w(r+1). Collect on the right.
        let mut w = self.clone();
        let mut word_rev = Vec::new();
        while !w.is_identity() {
            let r = (1..w.n())
                .find(|&r| w.apply(r) > w.apply(r + 1))
                .expect("non-identity permutation has a descent");
            w = w.compose(&Perm::s(r, self.n()));
            word_rev.push(r);
        }
        word_rev.reverse();
        word_rev
    }

    pub fn from_word(word: &[usize], n: usize) -> Perm {
        let mut w = Perm::identity(n);
        for &r in word {
            w = w.compose(&Perm::s(r, n));
        }
        w
    }

    /// Image of a 0-based bitmask of positions.
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        for i in 0..self.n() {
            if mask & (1 << i) != 0 {
                out |= 1 << self.0[i];
            }
        }
        out
    }

    /// Bruhat order via the tableau criterion: v ≤ w iff every sorted prefix
    /// of v is dominated entrywise by the sorted prefix of w.
    pub fn bruhat_leq(&self, w: &Perm) -> bool {
        let n = self.n();
        assert_eq!(n, w.n());
        for k in 1..n {
            let mut a: Vec<usize> = self.0[..k].to_vec();
            let mut b: Vec<usize> = w.0[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// All permutations of S_n in a deterministic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    use itertools::Itertools;
    (0..n).permutations(n).map(Perm).collect()
}

/// Left-coset decomposition w = x·u with u ∈ S_k × S_{n−k} (acting on positions
/// [1;k] and [k+1;n]) and x the minimal-length coset representative
/// (increasing on both blocks). Lengths add: l(w) = l(x) + l(u).
pub fn coset_decompose(w: &Perm, k: usize) -> (Perm, Perm) {
    let n = w.n();
    assert!(k <= n);
    // u sends position i to the rank of w(i) within its block's image set;
    // then x = w∘u^{-1} lists each block's images in increasing order.
    let mut u = vec![0usize; n];
    for (lo, hi) in [(0usize, k), (k, n)] {
        let mut idx: Vec<usize> = (lo..hi).collect();
        idx.sort_by_key(|&i| w.0[i]);
        for (rank, &i) in idx.iter().enumerate() {
            u[i] = lo + rank;
        }
    }
    let u = Perm(u);
    let x = w.compose(&u.inverse());
    debug_assert_eq!(x.len() + u.len(), w.len());
    (x, u)
}

/// Right-coset decomposition w = u·z with u ∈ S_k × S_{n−k} and z the minimal
/// representative of (S_k×S_{n−k})\S_n.
pub fn right_coset_decompose(w: &Perm, k: usize) -> (Perm, Perm) {
    let (x, u) = coset_decompose(&w.inverse(), k);
    (u.inverse(), x.inverse())
}

/// Minimal left-coset representatives of S_n/(S_k×S_{n−k}), deterministic order.
pub fn min_coset_reps(n: usize, k: usize) -> Vec<Perm> {
    all_perms(n)
        .into_iter()
        .filter(|w| {
            (1..k).all(|i| w.0[i - 1] < w.0[i]) && (k + 1..n).all(|i| w.0[i - 1] < w.0[i])
        })
        .collect()
}

/// Elements of the subgroup S_k × S_{n−k}.
pub fn block_subgroup(n: usize, k: usize) -> Vec<Perm> {
    all_perms(n)
        .into_iter()
        .filter(|w| w.0[..k].iter().all(|&i| i < k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        // (2,3)(1,2) = (1,3,2) as functions, right factor applied first.
        let a = Perm::transposition(2, 3, 3);
        let b = Perm::transposition(1, 2, 3);
        let c = a.compose(&b);
        assert_eq!(c.apply(1), 3);
        assert_eq!(c.apply(3), 2);
        assert_eq!(c.apply(2), 1);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in all_perms(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.len());
            assert_eq!(Perm::from_word(&word, 4), w);
        }
    }

    #[test]
    fn coset_decomposition_minimal() {
        // s_1s_2 = [2,3,1] is its own minimal representative for k = 2
        // (for k = 1 the minimal representative is s_1 with u = s_2).
        let w = Perm::s(1, 3).compose(&Perm::s(2, 3));
        let (x, u) = coset_decompose(&w, 2);
        assert_eq!(x, w);
        assert!(u.is_identity());
        let (x1, u1) = coset_decompose(&w, 1);
        assert_eq!(x1, Perm::s(1, 3));
        assert_eq!(u1, Perm::s(2, 3));

        for n in 1..=4 {
            for k in 0..=n {
                for w in all_perms(n) {
                    let (x, u) = coset_decompose(&w, k);
                    assert_eq!(x.compose(&u), w);
                    assert_eq!(x.len() + u.len(), w.len());
                    let (u2, z) = right_coset_decompose(&w, k);
                    assert_eq!(u2.compose(&z), w);
                    assert_eq!(u2.len() + z.len(), w.len());
                }
            }
        }
    }

    #[test]
    fn identity_cosets() {
        let id = Perm::identity(4);
        let (x, u) = coset_decompose(&id, 2);
        assert!(x.is_identity() && u.is_identity());
    }

    #[test]
    fn bruhat_examples() {
        let id = Perm::identity(3);
        let w0 = Perm::longest(3);
        for w in all_perms(3) {
            assert!(id.bruhat_leq(&w));
            assert!(w.bruhat_leq(&w0));
        }
        assert!(!Perm::s(1, 3).bruhat_leq(&Perm::s(2, 3)));
    }
}
