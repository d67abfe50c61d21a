//! Colour-blocked elements and the quiver Hecke action on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use num_traits::Zero;

use crate::polyalg::{mask_elems, Perm, Poly, Rat};
use crate::quivercomb::{ColSeq, Quiver};

use super::elt::ExtElt;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ExtRepError {
    #[error("component outside the single-omega span of colour {colour} in block {block:?}")]
    OutsideFloatingDomain { colour: usize, block: ColSeq },
}

/// An element of ⊕_𝐢 EPol_n 1_𝐢, one exterior-polynomial block per
/// colour sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColouredExtElt {
    pub nvec: Vec<usize>,
    pub blocks: BTreeMap<ColSeq, ExtElt>,
}

impl ColouredExtElt {
    pub fn zero(nvec: Vec<usize>) -> Self {
        ColouredExtElt { nvec, blocks: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.nvec.iter().sum()
    }

    pub fn from_block(nvec: Vec<usize>, seq: ColSeq, e: ExtElt) -> Self {
        let mut out = ColouredExtElt::zero(nvec);
        out.insert(seq, e);
        out
    }

    /// The idempotent block 1_𝐢 itself.
    pub fn unit(nvec: Vec<usize>, seq: ColSeq) -> Self {
        let n = seq.len();
        ColouredExtElt::from_block(nvec, seq, ExtElt::one(n))
    }

    pub fn insert(&mut self, seq: ColSeq, e: ExtElt) {
        if e.is_zero() {
            return;
        }
        assert_eq!(seq.len(), self.n());
        let mut content = vec![0; self.nvec.len()];
        for &c in &seq {
            content[c] += 1;
        }
        assert_eq!(content, self.nvec);
        match self.blocks.get_mut(&seq) {
            Some(b) => {
                *b = &*b + &e;
                if b.is_zero() {
                    self.blocks.remove(&seq);
                }
            }
            None => {
                self.blocks.insert(seq, e);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block(&self, seq: &ColSeq) -> ExtElt {
        self.blocks.get(seq).cloned().unwrap_or_else(|| ExtElt::zero(self.n()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        for (seq, e) in &self.blocks {
            out.insert(seq.clone(), e.scale(c));
        }
        out
    }

    /// Projection onto the block 𝐢.
    pub fn idem(&self, seq: &ColSeq) -> Self {
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        if let Some(e) = self.blocks.get(seq) {
            out.insert(seq.clone(), e.clone());
        }
        out
    }

    /// Multiplication by X_p on every block.
    pub fn x_act(&self, p: usize) -> Self {
        let xp = Poly::var(p, self.n());
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        for (seq, e) in &self.blocks {
            out.insert(seq.clone(), e.mul_poly(&xp));
        }
        out
    }

    /// The floating dot: each block is multiplied by ω_1.
    pub fn omega_act(&self) -> Self {
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        for (seq, e) in &self.blocks {
            out.insert(seq.clone(), e.wedge(1));
        }
        out
    }

    /// The reflection s_r: the tensor-square rule on equal-colour blocks,
    /// plain transport ω_p ↦ ω_{s_r(p)} otherwise.
    pub fn sn_act_r(&self, r: usize) -> Self {
        let n = self.n();
        assert!(1 <= r && r < n);
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        for (seq, e) in &self.blocks {
            if seq[r - 1] == seq[r] {
                out.insert(seq.clone(), e.sr_ext(r));
            } else {
                let mut tgt = seq.clone();
                tgt.swap(r - 1, r);
                out.insert(tgt, coloured_swap(e, r));
            }
        }
        out
    }

    /// Action of w along a reduced word, rightmost reflection first.
    pub fn sn_act(&self, w: &Perm) -> Self {
        let mut out = self.clone();
        for &r in w.reduced_word().iter().rev() {
            out = out.sn_act_r(r);
        }
        out
    }

    /// τ_r: divided difference on equal-colour blocks, 𝒫-twisted swap
    /// otherwise.
    pub fn tau_act(&self, quiver: &Quiver, r: usize) -> Self {
        let n = self.n();
        assert!(1 <= r && r < n);
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        for (seq, e) in &self.blocks {
            if seq[r - 1] == seq[r] {
                out.insert(seq.clone(), e.demazure_ext(r));
            } else {
                let mult = quiver.p_poly(
                    seq[r - 1],
                    seq[r],
                    &Poly::var(r, n),
                    &Poly::var(r + 1, n),
                );
                let mut tgt = seq.clone();
                tgt.swap(r - 1, r);
                out.insert(tgt, coloured_swap(e, r).mul_poly(&mult));
            }
        }
        out
    }

    /// Ω^a_{r,j0}: multiplication by the resolved floating element. The
    /// input must have each component either scalar or a single ω on a
    /// strand of colour j0.
    pub fn higher_floating(
        &self,
        quiver: &Quiver,
        r: usize,
        j0: usize,
        a: u32,
    ) -> Result<Self, ExtRepError> {
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        for (seq, e) in &self.blocks {
            for &m in e.comps.keys() {
                let elems = mask_elems(m);
                let ok = match elems.as_slice() {
                    [] => true,
                    [t] => seq[t - 1] == j0,
                    _ => false,
                };
                if !ok {
                    return Err(ExtRepError::OutsideFloatingDomain {
                        colour: j0,
                        block: seq.clone(),
                    });
                }
            }
            let fe = floating_element(quiver, seq, r, j0, a);
            out.insert(seq.clone(), fe.mul(e));
        }
        Ok(out)
    }

    pub fn to_string_with_names(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (seq, e) in &self.blocks {
            let cols: Vec<String> = seq.iter().map(|&c| names[c].clone()).collect();
            parts.push(format!("{} @ {}", e, cols.join(",")));
        }
        parts.join("  +  ")
    }
}

/// ω_p ↦ ω_{s_r(p)} together with s_r on coefficients; the sign flips
/// exactly when both ω_r and ω_{r+1} are present.
fn coloured_swap(e: &ExtElt, r: usize) -> ExtElt {
    let sr = Perm::s(r, e.n);
    let rb = 1u32 << (r - 1);
    let r1b = 1u32 << r;
    let mut out = ExtElt::zero(e.n);
    for (&m, p) in &e.comps {
        let both = m & rb != 0 && m & r1b != 0;
        let mut tgt = m & !(rb | r1b);
        if m & rb != 0 {
            tgt |= r1b;
        }
        if m & r1b != 0 {
            tgt |= rb;
        }
        let q = p.perm_apply(&sr);
        out.insert(tgt, if both { -&q } else { q });
    }
    out
}

/// The element by which Ω^a_{r,j0} 1_𝐢 acts: ω on the last j0-coloured
/// strand at or before r, twisted by ξ-resolved Chern factors.
pub fn floating_element(quiver: &Quiver, seq: &ColSeq, r: usize, j0: usize, a: u32) -> ExtElt {
    let n = seq.len();
    assert!(1 <= r && r <= n);
    let positions: Vec<usize> =
        (1..=n).filter(|&t| seq[t - 1] == j0).collect();
    let rprime = positions.iter().filter(|&&t| t <= r).count();
    if rprime == 0 {
        return ExtElt::zero(n);
    }
    // Coefficients of the ξ-polynomial (−ξ)^a ∏_{t ≤ r} Q_{j0, i_t}(X_t, ξ).
    let mut coeffs: Vec<Poly> = vec![Poly::one(n)];
    for t in 1..=r {
        let it = seq[t - 1];
        let du = quiver.h(j0, it);
        let dv = quiver.h(it, j0);
        let mut factored: Vec<Poly> = vec![Poly::zero(n); du + dv + 1];
        let xt = Poly::var(t, n);
        for d1 in 0..=du + dv {
            for d2 in 0..=du + dv {
                let c = quiver.q_coeff(j0, it, d1 as u16, d2 as u16);
                if !c.is_zero() {
                    factored[d2] = &factored[d2] + &xt.pow(d1 as u32).scale(&c);
                }
            }
        }
        let mut next = vec![Poly::zero(n); coeffs.len() + factored.len() - 1];
        for (m1, c1) in coeffs.iter().enumerate() {
            for (m2, c2) in factored.iter().enumerate() {
                next[m1 + m2] = &next[m1 + m2] + &(c1 * c2);
            }
        }
        coeffs = next;
    }
    let sign_a = if a % 2 == 0 { 1 } else { -1 };
    // Apply ξ^{m+a} to c_m ω_{rprime}, with ξ(Q ω_s) = X_{t_s} Q ω_s − Q ω_{s−1}.
    let mut out = ExtElt::zero(n);
    for (m, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut cur = ExtElt::zero(n);
        let c = if sign_a < 0 { -c } else { c.clone() };
        cur.insert(1 << (positions[rprime - 1] - 1), c);
        for _ in 0..(m + a as usize) {
            cur = xi_step(&cur, &positions);
        }
        out = &out + &cur;
    }
    out
}

fn xi_step(e: &ExtElt, positions: &[usize]) -> ExtElt {
    let mut out = ExtElt::zero(e.n);
    for (&mask, q) in &e.comps {
        let t = mask_elems(mask)[0];
        let s = positions.iter().position(|&p| p == t).unwrap();
        out.insert(mask, q * &Poly::var(t, e.n));
        if s > 0 {
            out.insert(1 << (positions[s - 1] - 1), -q);
        }
    }
    out
}

impl Add for &ColouredExtElt {
    type Output = ColouredExtElt;
    fn add(self, rhs: &ColouredExtElt) -> ColouredExtElt {
        assert_eq!(self.nvec, rhs.nvec);
        let mut out = self.clone();
        for (seq, e) in &rhs.blocks {
            out.insert(seq.clone(), e.clone());
        }
        out
    }
}

impl Sub for &ColouredExtElt {
    type Output = ColouredExtElt;
    fn sub(self, rhs: &ColouredExtElt) -> ColouredExtElt {
        self + &(-rhs)
    }
}

impl Neg for &ColouredExtElt {
    type Output = ColouredExtElt;
    fn neg(self) -> ColouredExtElt {
        let mut out = ColouredExtElt::zero(self.nvec.clone());
        for (seq, e) in &self.blocks {
            out.insert(seq.clone(), -e);
        }
        out
    }
}

impl fmt::Display for ColouredExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (seq, e) in &self.blocks {
            if !first {
                write!(f, "  +  ")?;
            }
            first = false;
            let cols: Vec<String> = seq.iter().map(|c| c.to_string()).collect();
            write!(f, "{} @ {}", e, cols.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivercomb::{one_vertex, single_arrow};

    fn x(i: usize, n: usize) -> Poly {
        Poly::var(i, n)
    }

    #[test]
    fn coloured_reflection_rules() {
        let nvec = vec![1, 1];
        // s_1(ω_2 1_𝐢) = ω_1 1_{s_1 𝐢} for i_1 ≠ i_2.
        let e = ColouredExtElt::from_block(nvec.clone(), vec![0, 1], ExtElt::omega(0b10, 2));
        let got = e.sn_act_r(1);
        let want =
            ColouredExtElt::from_block(nvec.clone(), vec![1, 0], ExtElt::omega(0b01, 2));
        assert_eq!(got, want);
        // s_1(X_1 1_𝐢) lands in the swapped block as X_2.
        let e = ColouredExtElt::from_block(
            nvec.clone(),
            vec![0, 1],
            ExtElt::from_poly(x(1, 2)),
        );
        let want =
            ColouredExtElt::from_block(nvec, vec![1, 0], ExtElt::from_poly(x(2, 2)));
        assert_eq!(e.sn_act_r(1), want);
    }

    #[test]
    fn tau_rules() {
        // Equal colours: divided difference.
        let q = one_vertex();
        let e = ColouredExtElt::from_block(
            vec![2],
            vec![0, 0],
            ExtElt::from_poly(x(1, 2)),
        );
        assert_eq!(
            e.tau_act(&q, 1),
            ColouredExtElt::unit(vec![2], vec![0, 0])
        );
        // One arrow i_1 → i_2: τ_1 1_𝐢 ↦ (X_1 − X_2) 1_{s_1𝐢}.
        let q = single_arrow();
        let e = ColouredExtElt::unit(vec![1, 1], vec![0, 1]);
        let want = ColouredExtElt::from_block(
            vec![1, 1],
            vec![1, 0],
            ExtElt::from_poly(&x(1, 2) - &x(2, 2)),
        );
        assert_eq!(e.tau_act(&q, 1), want);
        // Reverse direction picks up no polynomial.
        let e = ColouredExtElt::unit(vec![1, 1], vec![1, 0]);
        assert_eq!(
            e.tau_act(&q, 1),
            ColouredExtElt::unit(vec![1, 1], vec![0, 1])
        );
    }

    #[test]
    fn floating_dot_base_cases() {
        // Ω on P 1_𝐢 multiplies by ω_1.
        let q = single_arrow();
        let e = ColouredExtElt::from_block(
            vec![1, 1],
            vec![0, 1],
            ExtElt::from_poly(x(2, 2)),
        );
        let got = e.higher_floating(&q, 1, 0, 0).unwrap();
        assert_eq!(got, e.omega_act());
        // Wrong colour at r = 1 gives zero.
        assert!(e.higher_floating(&q, 1, 1, 0).unwrap().is_zero());
    }

    #[test]
    fn floating_dot_twist_one_vertex() {
        // n = 1: Ω^1 acts by −X_1 ω_1.
        let q = one_vertex();
        let e = ColouredExtElt::unit(vec![1], vec![0]);
        let got = e.higher_floating(&q, 1, 0, 1).unwrap();
        let want = ColouredExtElt::from_block(
            vec![1],
            vec![0],
            ExtElt::omega(0b1, 1).mul_poly(&-&x(1, 1)),
        );
        assert_eq!(got, want);
        // Untwisted Ω_r acts by ω_r.
        let e = ColouredExtElt::unit(vec![3], vec![0, 0, 0]);
        for r in 1..=3 {
            let got = e.higher_floating(&q, r, 0, 0).unwrap();
            let want = ColouredExtElt::from_block(
                vec![3],
                vec![0, 0, 0],
                ExtElt::omega(1 << (r - 1), 3),
            );
            assert_eq!(got, want);
        }
    }

    #[test]
    fn floating_dot_one_arrow_twist() {
        // Block (i, j) with an arrow i → j: Ω^0_{2,j} multiplies by
        // (X_2 − X_1) ω_2, matching τ_1 Ω τ_1.
        let q = single_arrow();
        let seq = vec![0, 1];
        let e = ColouredExtElt::unit(vec![1, 1], seq.clone());
        let direct = e.higher_floating(&q, 2, 1, 0).unwrap();
        let sandwich = e.tau_act(&q, 1).omega_act().tau_act(&q, 1);
        assert_eq!(direct, sandwich);
        let want = ColouredExtElt::from_block(
            vec![1, 1],
            seq.clone(),
            ExtElt::omega(0b10, 2).mul_poly(&(&x(2, 2) - &x(1, 2))),
        );
        assert_eq!(direct, want);
        // Same sandwich from the other block, fdot colour i.
        let e = ColouredExtElt::unit(vec![1, 1], vec![1, 0]);
        assert_eq!(
            e.higher_floating(&q, 2, 0, 0).unwrap(),
            e.tau_act(&q, 1).omega_act().tau_act(&q, 1)
        );
    }

    #[test]
    fn floating_domain_error() {
        let q = single_arrow();
        let e = ColouredExtElt::from_block(
            vec![1, 1],
            vec![0, 1],
            ExtElt::omega(0b10, 2),
        );
        assert!(e.higher_floating(&q, 1, 0, 0).is_err());
    }
}
