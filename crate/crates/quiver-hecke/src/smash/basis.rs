//! Linear independence of the standard spanning words ψ_x ω_(k) ψ_y ψ_z 1_𝐣
//! of the extended quiver Hecke algebra, checked inside the faithful
//! polynomial representation.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::extrep::Gen;
use crate::polyalg::{block_subgroup, min_coset_reps, poly_mat_rank, Mask, Perm, Poly, QMatrix, Rat, RatFunc};
use crate::quivercomb::{colour_seqs, omega_word, tau_word, ColSeq, DegTok, Quiver};

use super::coloured_op::ColouredCrossedOp;

type Coord = ((ColSeq, Perm), (Mask, Mask));

/// Outcome of the independence check over one dimension vector.
#[derive(Clone, Debug)]
pub struct BasisCheck {
    pub n: usize,
    pub k: usize,
    /// Number of colour sequences.
    pub seqs: usize,
    /// Words per colour sequence, n!·n!/(k!(n−k)!).
    pub per_seq: usize,
    pub total: usize,
    pub rank: usize,
    pub independent: bool,
    /// On failure, a dependent combination found at the last sample point.
    pub witness: Option<String>,
}

fn tok_gen(t: &DegTok) -> Gen {
    match *t {
        DegTok::X(r) => Gen::X(r),
        DegTok::Tau(r) => Gen::Tau(r),
        DegTok::Omega => Gen::Omega,
    }
}

fn flatten(op: &ColouredCrossedOp) -> BTreeMap<Coord, RatFunc> {
    let mut out = BTreeMap::new();
    for (key, mat) in &op.summands {
        for (&pos, f) in &mat.entries {
            out.insert((key.clone(), pos), f.clone());
        }
    }
    out
}

/// The spanning words for fixed k: x a minimal left coset representative,
/// y in the block subgroup, z the inverse of a minimal representative.
fn basis_words(n: usize, k: usize) -> Vec<(String, Vec<Gen>)> {
    let mut words = Vec::new();
    let reps = min_coset_reps(n, k);
    for x in &reps {
        for y in &block_subgroup(n, k) {
            for z in &reps {
                let zi = z.inverse();
                let mut w: Vec<DegTok> = tau_word(x);
                w.extend(omega_word(k));
                w.extend(tau_word(y));
                w.extend(tau_word(&zi));
                let label = format!("x={} y={} z={}", x, y, zi);
                words.push((label, w.iter().map(tok_gen).collect()));
            }
        }
    }
    words
}

fn sample_points(n: usize) -> [Vec<Rat>; 3] {
    let mk = |vals: &[i64]| vals.iter().take(n).map(|&v| Rat::from_integer(v.into())).collect();
    [
        mk(&[2, 3, 5, 7, 11, 13, 17, 19]),
        mk(&[23, 29, 31, 37, 41, 43, 47, 53]),
        mk(&[59, 61, 67, 71, 73, 79, 83, 89]),
    ]
}

/// Exact rank over the rational function field: each column is scaled by
/// its own denominator product, which leaves the rank unchanged.
fn exact_rank(columns: &[BTreeMap<Coord, RatFunc>], coords: &[Coord]) -> usize {
    let index: BTreeMap<&Coord, usize> = coords.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let nvars = columns
        .iter()
        .flat_map(|c| c.values())
        .map(|f| f.num.nvars)
        .next()
        .unwrap_or(1);
    let mut rows: Vec<Vec<Poly>> = vec![vec![Poly::zero(nvars); columns.len()]; coords.len()];
    for (j, col) in columns.iter().enumerate() {
        let mut den = Poly::one(nvars);
        for f in col.values() {
            den = &den * &f.den_poly();
        }
        for (c, f) in col {
            let cleared = &(&den * &f.num)
                .exact_div(&f.den_poly())
                .expect("column denominator clears each entry");
            rows[index[c]][j] = cleared.clone();
        }
    }
    poly_mat_rank(&rows)
}

/// Check the spanning words over every colour sequence of the dimension
/// vector at once; blocks over distinct sequences are disjoint, so the
/// joint rank splits per sequence.
pub fn basis_check_er(quiver: &Quiver, nvec: &[usize], k: usize) -> BasisCheck {
    let n: usize = nvec.iter().sum();
    assert!(k <= n, "floating dots limited to strand count");
    let words = basis_words(n, k);
    let seqs = colour_seqs(nvec);
    let mut labels: Vec<String> = Vec::new();
    let mut columns: Vec<BTreeMap<Coord, RatFunc>> = Vec::new();
    for j in &seqs {
        for (label, gens) in &words {
            let mut word = gens.clone();
            word.push(Gen::Idem(j.clone()));
            let op = ColouredCrossedOp::embed_word(quiver, nvec, &word);
            labels.push(format!("j={:?} {}", j, label));
            columns.push(flatten(&op));
        }
    }
    let coords: Vec<Coord> = {
        let mut set = std::collections::BTreeSet::new();
        for col in &columns {
            set.extend(col.keys().cloned());
        }
        set.into_iter().collect()
    };
    let total = columns.len();
    let per_seq = words.len();
    let fact = |m: usize| (1..=m).product::<usize>();
    assert_eq!(per_seq, fact(n) * fact(n) / (fact(k) * fact(n - k)));

    let index: BTreeMap<&Coord, usize> = coords.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut last_mat: Option<QMatrix> = None;
    for point in sample_points(n) {
        let mut mat = QMatrix::zero(coords.len(), total);
        for (jcol, col) in columns.iter().enumerate() {
            for (c, f) in col {
                let v = f.eval(&point).expect("distinct coordinates avoid poles");
                mat.set(index[c], jcol, v);
            }
        }
        let rank = mat.rank();
        last_mat = Some(mat);
        if rank == total {
            return BasisCheck {
                n,
                k,
                seqs: seqs.len(),
                per_seq,
                total,
                rank,
                independent: true,
                witness: None,
            };
        }
    }
    // Every sample point degenerated; settle it exactly.
    let rank_exact = exact_rank(&columns, &coords);
    let independent = rank_exact == total;
    let witness = if independent {
        None
    } else {
        last_mat.map(|m| {
            let ker = m.kernel();
            let deps: Vec<&str> = ker
                .first()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, _)| labels[i].as_str())
                        .collect()
                })
                .unwrap_or_default();
            format!("rank {} of {}; dependent set at sample point: {}", rank_exact, total, deps.join("; "))
        })
    };
    BasisCheck {
        n,
        k,
        seqs: seqs.len(),
        per_seq,
        total,
        rank: rank_exact,
        independent,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivercomb::{gamma1, one_vertex, single_arrow};

    #[test]
    fn one_vertex_counts_and_independence() {
        let q = one_vertex();
        for (k, per_seq) in [(0usize, 2usize), (1, 4), (2, 2)] {
            let r = basis_check_er(&q, &[2], k);
            assert_eq!(r.per_seq, per_seq);
            assert!(r.independent, "k={} witness {:?}", k, r.witness);
        }
    }

    #[test]
    fn single_strand_floating_dot() {
        let r = basis_check_er(&one_vertex(), &[1], 1);
        assert_eq!((r.per_seq, r.total), (1, 1));
        assert!(r.independent);
    }

    #[test]
    fn coloured_blocks_are_joint_independent() {
        let r = basis_check_er(&single_arrow(), &[1, 1], 1);
        assert_eq!((r.seqs, r.per_seq, r.total), (2, 4, 8));
        assert!(r.independent, "witness {:?}", r.witness);

        let r = basis_check_er(&gamma1(), &[1, 1, 1], 2);
        assert_eq!((r.seqs, r.per_seq), (6, 18));
        assert!(r.independent, "witness {:?}", r.witness);
    }
}
