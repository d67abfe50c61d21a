//! Euler classes at the torus-fixed points of flag, Grassmannian and
//! quiver flag varieties, as factored products of variable differences.

use crate::polyalg::{mask_complement, mask_elems, LinProd, Mask, Perm, Poly};
use crate::quivercomb::{ColSeq, Quiver};

/// eu(ℱ, f_w) = ∏_{i<j} (T_{w(j)} − T_{w(i)}).
pub(crate) fn a_w_lin(w: &Perm, n: usize) -> LinProd {
    let mut lp = LinProd::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            lp.push(w.apply(j), w.apply(i), 1);
        }
    }
    lp
}

/// eu(𝒢, g_λ) = ∏_{i∈λ, j∉λ} (T_j − T_i).
pub(crate) fn a_subset_lin(lam: Mask, n: usize) -> LinProd {
    let mut lp = LinProd::one(n);
    for i in mask_elems(lam) {
        for j in mask_elems(mask_complement(lam, n)) {
            lp.push(j, i, 1);
        }
    }
    lp
}

/// eu(𝒴, x_{w,μ}) at the twisted fixed point x_{w,μ} = (f_w, g_{w(μ)}).
pub(crate) fn a_point_lin(w: &Perm, mu: Mask, n: usize) -> LinProd {
    a_w_lin(w, n).mul(&a_subset_lin(w.apply_mask(mu), n))
}

/// ∏_{i∈λ, j∈ν} (T_i − T_j); zero when the subsets overlap.
pub(crate) fn q_pairs_lin(lam: Mask, nu: Mask, n: usize) -> LinProd {
    if lam & nu != 0 {
        return LinProd::zero(n);
    }
    let mut lp = LinProd::one(n);
    for i in mask_elems(lam) {
        for j in mask_elems(nu) {
            lp.push(i, j, 1);
        }
    }
    lp
}

/// Same-colour pairs only: ∏ (T_i − T_j) over i∈λ, j∈ν with equal colours.
pub(crate) fn q_col_lin(lam: Mask, nu: Mask, colours: &ColSeq) -> LinProd {
    let n = colours.len();
    let mut lp = LinProd::one(n);
    for i in mask_elems(lam) {
        for j in mask_elems(nu) {
            if colours[i - 1] == colours[j - 1] {
                if i == j {
                    return LinProd::zero(n);
                }
                lp.push(i, j, 1);
            }
        }
    }
    lp
}

/// eu(ℱ̃, f_w) for the quiver flag variety with base colouring `i0`: the
/// same-colour flag factor times the Euler class of the fibre of
/// representations preserving the coordinate flag of w,
/// ∏_{h: i→j} ∏_{c(p)=i, c(q)=j, w⁻¹(q) ≤ w⁻¹(p)} (T_q − T_p).
pub(crate) fn theta_w_lin(w: &Perm, i0: &ColSeq, quiver: &Quiver) -> LinProd {
    let n = i0.len();
    let mut lp = LinProd::one(n);
    for r in 1..=n {
        for s in r + 1..=n {
            if i0[w.apply(r) - 1] == i0[w.apply(s) - 1] {
                lp.push(w.apply(s), w.apply(r), 1);
            }
        }
    }
    let wi = w.inverse();
    for &(src, tgt) in quiver.arrows() {
        for p in 1..=n {
            if i0[p - 1] != src {
                continue;
            }
            for q in 1..=n {
                if i0[q - 1] != tgt || wi.apply(q) > wi.apply(p) {
                    continue;
                }
                lp.push(q, p, 1);
            }
        }
    }
    lp
}

/// eu at the coloured twisted fixed point x_{w,μ}: Θ_w times the same-colour
/// Grassmannian factor of the plain subset w(μ).
pub(crate) fn theta_point_lin(w: &Perm, mu: Mask, i0: &ColSeq, quiver: &Quiver) -> LinProd {
    let n = i0.len();
    let plain = w.apply_mask(mu);
    theta_w_lin(w, i0, quiver).mul(&q_col_lin(plain, mask_complement(plain, n), i0))
}

/// Fixed-point Euler class selector.
#[derive(Clone, Debug)]
pub enum EulerKind<'a> {
    Flag(&'a Perm),
    Grass(Mask),
    Point(&'a Perm, Mask),
    ColouredPoint(&'a Perm, Mask, &'a ColSeq, &'a Quiver),
}

/// The Euler class as a polynomial.
pub fn euler(kind: EulerKind<'_>, n: usize) -> Poly {
    match kind {
        EulerKind::Flag(w) => a_w_lin(w, n).to_poly(),
        EulerKind::Grass(lam) => a_subset_lin(lam, n).to_poly(),
        EulerKind::Point(w, mu) => a_point_lin(w, mu, n).to_poly(),
        EulerKind::ColouredPoint(w, mu, i0, quiver) => {
            assert_eq!(i0.len(), n);
            theta_point_lin(w, mu, i0, quiver).to_poly()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::mask_from_elems;
    use crate::quivercomb::{base_seq, one_vertex, single_arrow};

    fn t(i: usize, n: usize) -> Poly {
        Poly::var(i, n)
    }

    #[test]
    fn flag_euler_small() {
        let id = Perm::identity(2);
        assert_eq!(euler(EulerKind::Flag(&id), 2), &t(2, 2) - &t(1, 2));
        let s1 = Perm::s(1, 2);
        assert_eq!(euler(EulerKind::Flag(&s1), 2), &t(1, 2) - &t(2, 2));
        // w = s_1 s_2 on three strands: ∏ over the three pairs.
        let w = Perm::from_one_line(&[2, 3, 1]);
        let expect = &(&(&t(3, 3) - &t(2, 3)) * &(&t(1, 3) - &t(2, 3))) * &(&t(1, 3) - &t(3, 3));
        assert_eq!(euler(EulerKind::Flag(&w), 3), expect);
    }

    #[test]
    fn grass_euler_small() {
        assert_eq!(
            euler(EulerKind::Grass(mask_from_elems(&[1])), 2),
            &t(2, 2) - &t(1, 2)
        );
        assert_eq!(euler(EulerKind::Grass(0), 2), Poly::one(2));
        assert_eq!(euler(EulerKind::Grass(mask_from_elems(&[1, 2])), 2), Poly::one(2));
    }

    #[test]
    fn point_euler_twists_the_subset() {
        // x_{s_1, {1}} sits over the plain Grassmannian point {s_1(1)} = {2}.
        let s1 = Perm::s(1, 2);
        let lam = mask_from_elems(&[1]);
        let expect = &(&t(1, 2) - &t(2, 2)) * &(&t(1, 2) - &t(2, 2));
        assert_eq!(euler(EulerKind::Point(&s1, lam), 2), expect);
    }

    #[test]
    fn one_vertex_theta_is_flag_euler() {
        let q = one_vertex();
        let i0 = base_seq(&[3]);
        for w in crate::polyalg::all_perms(3) {
            assert_eq!(
                theta_w_lin(&w, &i0, &q).to_poly(),
                euler(EulerKind::Flag(&w), 3)
            );
            for mu in crate::polyalg::all_subsets(3) {
                assert_eq!(
                    euler(EulerKind::ColouredPoint(&w, mu, &i0, &q), 3),
                    euler(EulerKind::Point(&w, mu), 3)
                );
            }
        }
    }

    #[test]
    fn single_arrow_theta_identity_strand() {
        // i0 = (i, j) with one arrow i→j: no same-colour pairs; the fibre pair
        // (p,q) = (1,2) has w⁻¹(2) ≤ w⁻¹(1) only for w = s_1.
        let q = single_arrow();
        let i0 = base_seq(&[1, 1]);
        assert_eq!(theta_w_lin(&Perm::identity(2), &i0, &q).to_poly(), Poly::one(2));
        assert_eq!(
            theta_w_lin(&Perm::s(1, 2), &i0, &q).to_poly(),
            &t(2, 2) - &t(1, 2)
        );
    }

    #[test]
    fn coloured_q_restricts_to_matching_colours() {
        let i0 = vec![0, 1, 0];
        let lp = q_col_lin(mask_from_elems(&[1]), mask_from_elems(&[2, 3]), &i0);
        assert_eq!(lp.to_poly(), &t(1, 3) - &t(3, 3));
    }
}
