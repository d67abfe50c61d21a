//! Polynomial-exterior elements and the nil-Hecke action on them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::polyalg::{demazure, mask_elems, Mask, Perm, Poly, Rat};

/// Sign incurred when ω_λ ∧ ω_μ is rewritten on the merged index set,
/// with each wedge word ordered by decreasing index.
pub fn merge_sign(lambda: Mask, mu: Mask) -> i8 {
    debug_assert_eq!(lambda & mu, 0);
    let mut crossings = 0u32;
    for a in mask_elems(lambda) {
        let above = mu >> a;
        crossings += above.count_ones();
    }
    if crossings % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An element of Pol_n ⊗ Λ_n, stored per exterior monomial ω_λ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtElt {
    pub n: usize,
    pub comps: BTreeMap<Mask, Poly>,
}

impl ExtElt {
    pub fn zero(n: usize) -> Self {
        ExtElt { n, comps: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        ExtElt::from_poly(Poly::one(n))
    }

    pub fn from_poly(p: Poly) -> Self {
        let mut e = ExtElt::zero(p.nvars);
        e.insert(0, p);
        e
    }

    /// The basis element ω_λ.
    pub fn omega(lambda: Mask, n: usize) -> Self {
        let mut e = ExtElt::zero(n);
        e.insert(lambda, Poly::one(n));
        e
    }

    pub fn insert(&mut self, lambda: Mask, p: Poly) {
        if p.is_zero() {
            return;
        }
        assert_eq!(p.nvars, self.n);
        let entry = self.comps.entry(lambda).or_insert_with(|| Poly::zero(p.nvars));
        *entry = &*entry + &p;
        if entry.is_zero() {
            self.comps.remove(&lambda);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn component(&self, lambda: Mask) -> Poly {
        self.comps.get(&lambda).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &self.comps {
            out.insert(m, p.scale(c));
        }
        out
    }

    pub fn mul_poly(&self, q: &Poly) -> Self {
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &self.comps {
            out.insert(m, p * q);
        }
        out
    }

    /// Wedge product with the exterior sign convention above.
    pub fn mul(&self, other: &ExtElt) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = ExtElt::zero(self.n);
        for (&la, p) in &self.comps {
            for (&mu, q) in &other.comps {
                if la & mu != 0 {
                    continue;
                }
                let mut t = p * q;
                if merge_sign(la, mu) < 0 {
                    t = -&t;
                }
                out.insert(la | mu, t);
            }
        }
        out
    }

    /// Left multiplication by ω_i (the creation operator).
    pub fn wedge(&self, i: usize) -> Self {
        assert!(1 <= i && i <= self.n);
        let bit: Mask = 1 << (i - 1);
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &self.comps {
            if m & bit != 0 {
                continue;
            }
            let sign = merge_sign(bit, m);
            out.insert(m | bit, if sign < 0 { -p } else { p.clone() });
        }
        out
    }

    /// The annihilation operator dual to `wedge`.
    pub fn contract(&self, i: usize) -> Self {
        assert!(1 <= i && i <= self.n);
        let bit: Mask = 1 << (i - 1);
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &self.comps {
            if m & bit == 0 {
                continue;
            }
            let rest = m & !bit;
            let sign = merge_sign(bit, rest);
            out.insert(rest, if sign < 0 { -p } else { p.clone() });
        }
        out
    }

    /// Variable permutation on coefficients only; no ω transport.
    pub fn perm_vars(&self, w: &Perm) -> Self {
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &self.comps {
            out.insert(m, p.perm_apply(w));
        }
        out
    }

    /// The reflection s_r acting on both tensor factors: fixes ω_p for
    /// p ≠ r and sends ω_r to ω_r + (X_r − X_{r+1}) ω_{r+1}.
    pub fn sr_ext(&self, r: usize) -> Self {
        assert!(1 <= r && r < self.n);
        let sr = Perm::s(r, self.n);
        let rb: Mask = 1 << (r - 1);
        let r1b: Mask = 1 << r;
        let lin = &Poly::var(r, self.n) - &Poly::var(r + 1, self.n);
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &self.comps {
            let sp = p.perm_apply(&sr);
            out.insert(m, sp.clone());
            if m & rb != 0 && m & r1b == 0 {
                out.insert((m & !rb) | r1b, &sp * &lin);
            }
        }
        out
    }

    /// Action of w via any reduced word; reduced-word independence is a
    /// consequence of the braid identities for `sr_ext`.
    pub fn sn_act(&self, w: &Perm) -> Self {
        let mut out = self.clone();
        for &r in w.reduced_word().iter().rev() {
            out = out.sr_ext(r);
        }
        out
    }

    /// ∂_r = (1 − s_r)/(X_r − X_{r+1}) on the full tensor product.
    pub fn demazure_ext(&self, r: usize) -> Self {
        let diff = self - &self.sr_ext(r);
        let lin = &Poly::var(r, self.n) - &Poly::var(r + 1, self.n);
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &diff.comps {
            let q = p.exact_div(&lin).expect("Demazure numerator must divide");
            out.insert(m, q);
        }
        out
    }

    /// Total polynomial degree over all components, if homogeneous.
    pub fn poly_degree(&self) -> Option<usize> {
        let mut deg = None;
        for p in self.comps.values() {
            let d = p.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg
    }
}

impl Add for &ExtElt {
    type Output = ExtElt;
    fn add(self, rhs: &ExtElt) -> ExtElt {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (&m, p) in &rhs.comps {
            out.insert(m, p.clone());
        }
        out
    }
}

impl Sub for &ExtElt {
    type Output = ExtElt;
    fn sub(self, rhs: &ExtElt) -> ExtElt {
        self + &(-rhs)
    }
}

impl Neg for &ExtElt {
    type Output = ExtElt;
    fn neg(self) -> ExtElt {
        let mut out = ExtElt::zero(self.n);
        for (&m, p) in &self.comps {
            out.insert(m, -p);
        }
        out
    }
}

impl fmt::Display for ExtElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, p) in &self.comps {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let ps = p.to_string_with("X");
            let ps = if p.terms.len() > 1 { format!("({ps})") } else { ps };
            if m == 0 {
                write!(f, "{ps}")?;
            } else {
                let idx: Vec<String> =
                    mask_elems(m).into_iter().map(|i| i.to_string()).collect();
                write!(f, "{ps} * w{{{}}}", idx.join(","))?;
            }
        }
        Ok(())
    }
}

/// The sequence P_1 = X_1^N, P_{i+1} = −∂_i(P_i).
pub fn koszul_ps(nn: u32, n: usize) -> Vec<Poly> {
    let mut ps = Vec::with_capacity(n);
    let mut cur = Poly::var(1, n).pow(nn);
    for i in 1..=n {
        ps.push(cur.clone());
        if i < n {
            cur = -&demazure(i, &cur);
        }
    }
    ps
}

/// The differential with d(ω_i) = P_i, extended as a superderivation
/// killing the polynomial factor.
pub fn koszul_diff(nn: u32, e: &ExtElt) -> ExtElt {
    let ps = koszul_ps(nn, e.n);
    let mut out = ExtElt::zero(e.n);
    for (i, p) in ps.iter().enumerate() {
        out = &out + &e.contract(i + 1).mul_poly(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{mask_from_elems, rat};

    fn x(i: usize, n: usize) -> Poly {
        Poly::var(i, n)
    }

    #[test]
    fn reflection_on_omega_basis() {
        // s_1(ω_1) = ω_1 + (X_1 − X_2) ω_2, s_1(ω_2) = ω_2, involutive.
        let w1 = ExtElt::omega(0b01, 2);
        let got = w1.sr_ext(1);
        let mut want = ExtElt::omega(0b01, 2);
        want.insert(0b10, &x(1, 2) - &x(2, 2));
        assert_eq!(got, want);
        assert_eq!(got.sr_ext(1), w1);
        let w2 = ExtElt::omega(0b10, 2);
        assert_eq!(w2.sr_ext(1), w2);
    }

    #[test]
    fn demazure_on_omegas() {
        let n = 3;
        let w1 = ExtElt::omega(0b001, n);
        assert_eq!(w1.demazure_ext(1), -&ExtElt::omega(0b010, n));
        let w2 = ExtElt::omega(0b010, n);
        assert!(w2.demazure_ext(1).is_zero());
        // ∂_1(X_1 ω_3) = ω_3.
        let e = ExtElt::omega(0b100, n).mul_poly(&x(1, n));
        assert_eq!(e.demazure_ext(1), ExtElt::omega(0b100, n));
    }

    #[test]
    fn wedge_contract_signs() {
        let n = 3;
        assert_eq!(ExtElt::one(n).wedge(1), ExtElt::omega(0b001, n));
        assert!(ExtElt::omega(0b001, n).wedge(1).is_zero());
        let p = &x(1, n) + &x(3, n);
        assert_eq!(
            ExtElt::from_poly(p.clone()).wedge(1).contract(1),
            ExtElt::from_poly(p)
        );
        // ω_2 ∧ ω_{1,3} picks up one crossing.
        let w13 = ExtElt::omega(mask_from_elems(&[1, 3]), n);
        assert_eq!(
            w13.wedge(2),
            (-&ExtElt::omega(mask_from_elems(&[1, 2, 3]), n))
        );
        // {ω_1^+, ω_1^-} = id on a mixed element.
        let e = &w13 + &ExtElt::omega(0b010, n).mul_poly(&x(2, n));
        assert_eq!(&e.contract(1).wedge(1) + &e.wedge(1).contract(1), e);
    }

    #[test]
    fn wedge_words_anticommute() {
        let n = 4;
        let e = ExtElt::omega(0b010, n);
        let ab = e.wedge(1).wedge(3);
        let ba = e.wedge(3).wedge(1);
        assert_eq!(ab, -&ba);
    }

    #[test]
    fn koszul_ps_low_degree() {
        // P_2 = −∂_1(X_1²) = −(X_1 + X_2).
        let ps = koszul_ps(2, 2);
        assert_eq!(ps[0], x(1, 2).pow(2));
        assert_eq!(ps[1], -&(&x(1, 2) + &x(2, 2)));
    }

    #[test]
    fn koszul_diff_basics() {
        let n = 2;
        let nn = 2;
        assert_eq!(
            koszul_diff(nn, &ExtElt::omega(0b01, n)),
            ExtElt::from_poly(x(1, n).pow(2))
        );
        assert!(koszul_diff(nn, &ExtElt::from_poly(&x(1, n) * &x(2, n))).is_zero());
        // d² = 0 on the top form.
        let top = ExtElt::omega(0b11, n);
        assert!(koszul_diff(nn, &koszul_diff(nn, &top)).is_zero());
        // d commutes with X_i and with ∂_r on a mixed sample.
        let e = &top.mul_poly(&x(2, n)) + &ExtElt::omega(0b10, n);
        assert_eq!(
            koszul_diff(nn, &e.mul_poly(&x(1, n))),
            koszul_diff(nn, &e).mul_poly(&x(1, n))
        );
        assert_eq!(
            koszul_diff(nn, &e.demazure_ext(1)),
            koszul_diff(nn, &e).demazure_ext(1)
        );
    }

    #[test]
    fn text_form() {
        let n = 3;
        let mut e = ExtElt::omega(mask_from_elems(&[1, 3]), n).mul_poly(&x(2, n));
        e.insert(0, Poly::constant(rat(5), n));
        assert_eq!(e.to_string(), "5 + X2 * w{1,3}");
    }
}
