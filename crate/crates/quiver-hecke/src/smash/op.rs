//! Crossed-product normal form: matrices over rational functions twisted
//! by variable permutations. An operator is a finite sum Σ_w Φ_w ∘ (w on
//! coefficients); the exterior twist of the reflection action is folded
//! into Φ_w, so equality of operators is equality of summands.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::extrep::{koszul_ps, merge_sign, ExtElt, Gen};
use crate::polyalg::{mask_elems, Mask, Perm, Poly, Rat, RatFunc};

/// A sparse 2^n × 2^n matrix over rational functions; rows and columns are
/// indexed by subsets of [1;n] in the bit-(i−1) convention.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaMat {
    pub n: usize,
    pub entries: BTreeMap<(Mask, Mask), RatFunc>,
}

impl OmegaMat {
    pub fn zero(n: usize) -> Self {
        OmegaMat { n, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        OmegaMat::scalar(RatFunc::one(n), n)
    }

    /// A scalar multiple of the identity.
    pub fn scalar(c: RatFunc, n: usize) -> Self {
        let mut out = OmegaMat::zero(n);
        if !c.is_zero() {
            for m in 0..(1u32 << n) {
                out.entries.insert((m, m), c.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: Mask, col: Mask) -> RatFunc {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(|| RatFunc::zero(self.n))
    }

    /// Accumulate into an entry, dropping it when the sum is zero.
    pub fn insert(&mut self, row: Mask, col: Mask, v: RatFunc) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry((row, col)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &v;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale_rf(&self, c: &RatFunc) -> Self {
        let mut out = OmegaMat::zero(self.n);
        for (&k, v) in &self.entries {
            out.insert(k.0, k.1, v * c);
        }
        out
    }

    pub fn mul(&self, other: &OmegaMat) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = OmegaMat::zero(self.n);
        for (&(i, j), a) in &self.entries {
            for (&(j2, k), b) in &other.entries {
                if j == j2 {
                    out.insert(i, k, a * b);
                }
            }
        }
        out
    }

    /// Substitute X_i ↦ X_{w(i)} in every entry.
    pub fn perm_vars(&self, w: &Perm) -> Self {
        let mut out = OmegaMat::zero(self.n);
        for (&(i, j), v) in &self.entries {
            out.insert(i, j, v.perm_apply(w));
        }
        out
    }

    /// Left exterior multiplication by ω_i.
    pub fn wedge_mat(i: usize, n: usize) -> Self {
        OmegaMat::mult_mat(&ExtElt::omega(1 << (i - 1), n))
    }

    /// The annihilation operator dual to `wedge_mat`.
    pub fn contract_mat(i: usize, n: usize) -> Self {
        let bit: Mask = 1 << (i - 1);
        let mut out = OmegaMat::zero(n);
        for m in 0..(1u32 << n) {
            if m & bit != 0 {
                let rest = m & !bit;
                let sign = merge_sign(bit, rest);
                out.insert(rest, m, RatFunc::from_rat(Rat::from_integer(sign.into()), n));
            }
        }
        out
    }

    /// Left exterior multiplication by an arbitrary element.
    pub fn mult_mat(e: &ExtElt) -> Self {
        let n = e.n;
        let mut out = OmegaMat::zero(n);
        for (&la, p) in &e.comps {
            for mu in 0..(1u32 << n) {
                if la & mu != 0 {
                    continue;
                }
                let mut q = p.clone();
                if merge_sign(la, mu) < 0 {
                    q = -&q;
                }
                out.insert(la | mu, mu, RatFunc::from_poly(q));
            }
        }
        out
    }

    /// The exterior twist of the reflection s_r: fixes every ω_p with
    /// p ≠ r and maps ω_r to ω_r + (X_r − X_{r+1}) ω_{r+1}. The variable
    /// substitution of s_r is kept outside this matrix.
    pub fn lam_sr(r: usize, n: usize) -> Self {
        assert!(1 <= r && r < n);
        let rb: Mask = 1 << (r - 1);
        let r1b: Mask = 1 << r;
        let lin = &Poly::var(r, n) - &Poly::var(r + 1, n);
        let mut out = OmegaMat::identity(n);
        for m in 0..(1u32 << n) {
            if m & rb != 0 && m & r1b == 0 {
                out.insert((m & !rb) | r1b, m, RatFunc::from_poly(lin.clone()));
            }
        }
        out
    }

    /// The mask transport of a different-colour reflection: bits r, r+1
    /// swap, with a sign exactly when both are present.
    pub fn swap_mat(r: usize, n: usize) -> Self {
        assert!(1 <= r && r < n);
        let rb: Mask = 1 << (r - 1);
        let r1b: Mask = 1 << r;
        let mut out = OmegaMat::zero(n);
        for m in 0..(1u32 << n) {
            let both = m & rb != 0 && m & r1b != 0;
            let mut tgt = m & !(rb | r1b);
            if m & rb != 0 {
                tgt |= r1b;
            }
            if m & r1b != 0 {
                tgt |= rb;
            }
            let c = if both { -1 } else { 1 };
            out.insert(tgt, m, RatFunc::from_rat(Rat::from_integer(c.into()), n));
        }
        out
    }

    pub fn apply_coords(&self, coords: &BTreeMap<Mask, RatFunc>) -> BTreeMap<Mask, RatFunc> {
        let mut out: BTreeMap<Mask, RatFunc> = BTreeMap::new();
        for (&(i, j), v) in &self.entries {
            if let Some(c) = coords.get(&j) {
                if c.is_zero() {
                    continue;
                }
                let t = v * c;
                if t.is_zero() {
                    continue;
                }
                let acc = out.entry(i).or_insert_with(|| RatFunc::zero(self.n));
                *acc = &*acc + &t;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Internal degree when homogeneous: entries count twice their X-degree,
    /// a coordinate weight may shift rows and columns.
    pub fn degree_with(&self, row_wt: &dyn Fn(Mask) -> i64, col_wt: &dyn Fn(Mask) -> i64) -> Option<i64> {
        let mut deg = None;
        for (&(i, j), v) in &self.entries {
            let num = v.num.homogeneous_degree()? as i64;
            let den = v.den_poly().homogeneous_degree()? as i64;
            let d = 2 * (num - den) + row_wt(i) - col_wt(j);
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg
    }
}

impl Add for &OmegaMat {
    type Output = OmegaMat;
    fn add(self, rhs: &OmegaMat) -> OmegaMat {
        let mut out = self.clone();
        for (&(i, j), v) in &rhs.entries {
            out.insert(i, j, v.clone());
        }
        out
    }
}

impl Sub for &OmegaMat {
    type Output = OmegaMat;
    fn sub(self, rhs: &OmegaMat) -> OmegaMat {
        self + &(-rhs)
    }
}

impl Neg for &OmegaMat {
    type Output = OmegaMat;
    fn neg(self) -> OmegaMat {
        let mut out = OmegaMat::zero(self.n);
        for (&(i, j), v) in &self.entries {
            out.entries.insert((i, j), -v);
        }
        out
    }
}

/// An operator in crossed-product normal form. The summand at w acts as
/// e ↦ M_w · (w applied to the coordinates of e); composition follows
/// (M_u, u)(M_v, v) = (M_u · u(M_v), u∘v).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossedOp {
    pub n: usize,
    pub summands: BTreeMap<Perm, OmegaMat>,
}

impl CrossedOp {
    pub fn zero(n: usize) -> Self {
        CrossedOp { n, summands: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        CrossedOp::from_summand(Perm::identity(n), OmegaMat::identity(n))
    }

    pub fn from_summand(w: Perm, mat: OmegaMat) -> Self {
        let n = mat.n;
        let mut out = CrossedOp::zero(n);
        out.insert_summand(w, mat);
        out
    }

    pub fn insert_summand(&mut self, w: Perm, mat: OmegaMat) {
        if mat.is_zero() {
            return;
        }
        match self.summands.entry(w) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(mat);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = &*slot.get() + &mat;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.scale_rf(&RatFunc::from_rat(c.clone(), self.n))
    }

    pub fn scale_rf(&self, c: &RatFunc) -> Self {
        let mut out = CrossedOp::zero(self.n);
        for (w, m) in &self.summands {
            out.insert_summand(w.clone(), m.scale_rf(c));
        }
        out
    }

    pub fn compose(&self, other: &CrossedOp) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = CrossedOp::zero(self.n);
        for (u, mu) in &self.summands {
            for (v, mv) in &other.summands {
                out.insert_summand(u.compose(v), mu.mul(&mv.perm_vars(u)));
            }
        }
        out
    }

    /// Evaluate on an element; panics if a rational coordinate survives,
    /// which cannot happen for operators in the embedded algebras.
    pub fn apply(&self, e: &ExtElt) -> ExtElt {
        assert_eq!(self.n, e.n);
        let coords: BTreeMap<Mask, RatFunc> = e
            .comps
            .iter()
            .map(|(&m, p)| (m, RatFunc::from_poly(p.clone())))
            .collect();
        let mut total: BTreeMap<Mask, RatFunc> = BTreeMap::new();
        for (w, mat) in &self.summands {
            let moved: BTreeMap<Mask, RatFunc> =
                coords.iter().map(|(&m, c)| (m, c.perm_apply(w))).collect();
            for (m, v) in mat.apply_coords(&moved) {
                let acc = total.entry(m).or_insert_with(|| RatFunc::zero(self.n));
                *acc = &*acc + &v;
            }
        }
        let mut out = ExtElt::zero(self.n);
        for (m, v) in total {
            if v.is_zero() {
                continue;
            }
            out.insert(m, v.as_poly().expect("operator image must be polynomial").clone());
        }
        out
    }

    /// Embed a single generator of NH, ENH or 𝔼NH.
    pub fn embed(g: &Gen, n: usize) -> Self {
        match g {
            Gen::X(p) => CrossedOp::from_summand(
                Perm::identity(n),
                OmegaMat::scalar(RatFunc::from_poly(Poly::var(*p, n)), n),
            ),
            Gen::T(r) => {
                let lin = crate::polyalg::LinProd::diff(*r, *r + 1, n);
                let c = RatFunc::one(n).div_lin(&lin);
                let mut out = CrossedOp::zero(n);
                out.insert_summand(Perm::identity(n), OmegaMat::scalar(c.clone(), n));
                out.insert_summand(
                    Perm::s(*r, n),
                    OmegaMat::lam_sr(*r, n).scale_rf(&(-&c)),
                );
                out
            }
            Gen::WPlus(i) => CrossedOp::from_summand(Perm::identity(n), OmegaMat::wedge_mat(*i, n)),
            Gen::WMinus(i) => {
                CrossedOp::from_summand(Perm::identity(n), OmegaMat::contract_mat(*i, n))
            }
            Gen::DN(nn) => dd_mat(*nn, n),
            _ => panic!("coloured token in uncoloured embedding"),
        }
    }

    /// Embed a word; the leftmost token is applied last.
    pub fn embed_word(word: &[Gen], n: usize) -> Self {
        let mut out = CrossedOp::identity(n);
        for g in word {
            out = out.compose(&CrossedOp::embed(g, n));
        }
        out
    }

    /// Embed a rational linear combination of words.
    pub fn embed_linear(terms: &[(Rat, Vec<Gen>)], n: usize) -> Self {
        let mut out = CrossedOp::zero(n);
        for (c, word) in terms {
            out = &out + &CrossedOp::embed_word(word, n).scale(c);
        }
        out
    }

    pub fn max_length_summand(&self) -> Option<&Perm> {
        self.summands.keys().max_by_key(|w| w.len())
    }

    /// Internal degree in the grading with deg X_i = 2, deg ω_i = 2(n−i),
    /// when the operator is homogeneous.
    pub fn operator_degree(&self) -> Option<i64> {
        let n = self.n;
        let wt = move |m: Mask| -> i64 {
            mask_elems(m).iter().map(|&i| 2 * (n as i64 - i as i64)).sum()
        };
        let mut deg = None;
        for mat in self.summands.values() {
            let d = mat.degree_with(&wt, &wt)?;
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg
    }

    /// A short description of one nonzero summand, for failure reports.
    pub fn witness(&self) -> Option<String> {
        let (w, mat) = self.summands.iter().next()?;
        let (&(i, j), v) = mat.entries.iter().next()?;
        Some(format!(
            "summand at w={} maps w{:?} to w{:?} with coefficient {}",
            w,
            mask_elems(j),
            mask_elems(i),
            v
        ))
    }
}

/// The element 𝕕_N = Σ_i P_i ω_i^- as a crossed operator.
pub fn dd_mat(nn: u32, n: usize) -> CrossedOp {
    let ps = koszul_ps(nn, n);
    let mut mat = OmegaMat::zero(n);
    for (idx, p) in ps.iter().enumerate() {
        mat = &mat + &OmegaMat::contract_mat(idx + 1, n).scale_rf(&RatFunc::from_poly(p.clone()));
    }
    CrossedOp::from_summand(Perm::identity(n), mat)
}

impl Add for &CrossedOp {
    type Output = CrossedOp;
    fn add(self, rhs: &CrossedOp) -> CrossedOp {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (w, m) in &rhs.summands {
            out.insert_summand(w.clone(), m.clone());
        }
        out
    }
}

impl Sub for &CrossedOp {
    type Output = CrossedOp;
    fn sub(self, rhs: &CrossedOp) -> CrossedOp {
        self + &(-rhs)
    }
}

impl Neg for &CrossedOp {
    type Output = CrossedOp;
    fn neg(self) -> CrossedOp {
        let mut out = CrossedOp::zero(self.n);
        for (w, m) in &self.summands {
            out.summands.insert(w.clone(), -m);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extrep::act_ext;
    use crate::polyalg::rat;

    fn word_op(word: &[Gen], n: usize) -> CrossedOp {
        CrossedOp::embed_word(word, n)
    }

    #[test]
    fn demazure_embedding_squares_to_zero_and_braids() {
        let t1 = word_op(&[Gen::T(1)], 2);
        assert!(t1.compose(&t1).is_zero());
        let lhs = word_op(&[Gen::T(1), Gen::T(2), Gen::T(1)], 3);
        let rhs = word_op(&[Gen::T(2), Gen::T(1), Gen::T(2)], 3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn crossed_apply_matches_direct_action() {
        let n = 3;
        let words: Vec<Vec<Gen>> = vec![
            vec![Gen::T(1)],
            vec![Gen::T(2), Gen::X(1)],
            vec![Gen::WPlus(2), Gen::T(1), Gen::WMinus(2)],
            vec![Gen::DN(2), Gen::T(1), Gen::WPlus(1)],
        ];
        let mut probe = ExtElt::omega(0b101, n).mul_poly(&Poly::var(2, n));
        probe = &probe + &ExtElt::from_poly(Poly::var(1, n).pow(2));
        for word in &words {
            let via_op = CrossedOp::embed_word(word, n).apply(&probe);
            let direct = act_ext(word, &probe);
            assert_eq!(via_op, direct, "word {:?}", word);
        }
    }

    #[test]
    fn composition_is_associative_on_samples() {
        let n = 3;
        let a = word_op(&[Gen::T(1), Gen::X(2)], n);
        let b = word_op(&[Gen::WPlus(1), Gen::T(2)], n);
        let c = word_op(&[Gen::WMinus(3), Gen::X(1)], n);
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn generator_degrees_match_grading() {
        let n = 3;
        assert_eq!(word_op(&[Gen::X(2)], n).operator_degree(), Some(2));
        assert_eq!(word_op(&[Gen::T(1)], n).operator_degree(), Some(-2));
        assert_eq!(word_op(&[Gen::T(2)], n).operator_degree(), Some(-2));
        assert_eq!(word_op(&[Gen::WPlus(1)], n).operator_degree(), Some(4));
        assert_eq!(word_op(&[Gen::WPlus(3)], n).operator_degree(), Some(0));
        assert_eq!(word_op(&[Gen::WMinus(1)], n).operator_degree(), Some(-4));
        // 𝕕_N is homogeneous of internal degree 2(N−n+1).
        for nn in [2u32, 3, 4] {
            assert_eq!(
                dd_mat(nn, n).operator_degree(),
                Some(2 * (nn as i64 - n as i64 + 1))
            );
        }
    }

    #[test]
    fn scalar_linear_combination() {
        let n = 2;
        // X_1 T_1 − T_1 X_2 = 1.
        let op = CrossedOp::embed_linear(
            &[
                (rat(1), vec![Gen::X(1), Gen::T(1)]),
                (rat(-1), vec![Gen::T(1), Gen::X(2)]),
            ],
            n,
        );
        assert_eq!(op, CrossedOp::identity(n));
    }
}
