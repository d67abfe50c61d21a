//! Extraction from crossed form back to the T_w X^a ω^+_λ ω^-_μ basis by
//! Bruhat-triangular elimination: the leading summand of T_w sits at w with
//! an invertible triangular matrix, so coefficients are recovered longest
//! permutation first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::extrep::{ExtElt, Gen};
use crate::polyalg::{mask_elems, Mask, Perm, Poly, RatFunc};

use super::op::{CrossedOp, OmegaMat};

#[derive(Error, Debug, PartialEq, Eq)]
pub enum SmashError {
    #[error("element not in {algebra}: {detail}")]
    NotInAlgebra { algebra: &'static str, detail: String },
}

/// Which polynomial subalgebra of the ambient operator algebra to target:
/// plain nil-Hecke, its one-sided extension by the ω_λ, or the two-sided
/// extension by creation and annihilation parts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    NH,
    ENH,
    EENH,
}

impl AlgebraKind {
    fn name(self) -> &'static str {
        match self {
            AlgebraKind::NH => "NH",
            AlgebraKind::ENH => "ENH",
            AlgebraKind::EENH => "EENH",
        }
    }

    fn admits(self, lambda: Mask, mu: Mask) -> bool {
        match self {
            AlgebraKind::NH => lambda == 0 && mu == 0,
            AlgebraKind::ENH => mu == 0,
            AlgebraKind::EENH => true,
        }
    }
}

/// An element written on the basis {T_w X^a ω^+_λ ω^-_μ}; the polynomial
/// at (w, λ, μ) collects the X^a coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PBWElt {
    pub n: usize,
    pub terms: BTreeMap<(Perm, Mask, Mask), Poly>,
}

impl PBWElt {
    pub fn zero(n: usize) -> Self {
        PBWElt { n, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert(&mut self, w: Perm, lambda: Mask, mu: Mask, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((w, lambda, mu)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = &*slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Re-embed as a crossed operator.
    pub fn to_op(&self) -> CrossedOp {
        let n = self.n;
        let mut by_w: BTreeMap<Perm, OmegaMat> = BTreeMap::new();
        for ((w, lambda, mu), c) in &self.terms {
            let part = car_mat(*lambda, *mu, n).scale_rf(&RatFunc::from_poly(c.clone()));
            match by_w.get_mut(w) {
                Some(m) => *m = &*m + &part,
                None => {
                    by_w.insert(w.clone(), part);
                }
            }
        }
        let mut out = CrossedOp::zero(n);
        for (w, b) in by_w {
            let chunk = CrossedOp::from_summand(Perm::identity(n), b);
            out = &out + &t_word_op(&w, n).compose(&chunk);
        }
        out
    }
}

impl fmt::Display for PBWElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for ((w, lambda, mu), c) in &self.terms {
            let mut s = format!("T[{}]·({})", w, c);
            if *lambda != 0 {
                s.push_str(&format!("·w+{:?}", mask_elems(*lambda)));
            }
            if *mu != 0 {
                s.push_str(&format!("·w-{:?}", mask_elems(*mu)));
            }
            parts.push(s);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The matrix of ω^+_λ ω^-_μ: wedge by the λ-monomial after contracting
/// along μ in increasing order. Its column at μ is the single entry
/// (λ, μ) = 1, which drives the extraction.
pub fn car_mat(lambda: Mask, mu: Mask, n: usize) -> OmegaMat {
    let mut acc = OmegaMat::mult_mat(&ExtElt::omega(lambda, n));
    for i in mask_elems(mu) {
        acc = acc.mul(&OmegaMat::contract_mat(i, n));
    }
    acc
}

/// The crossed operator of T_w along a fixed reduced word.
pub fn t_word_op(w: &Perm, n: usize) -> CrossedOp {
    let word: Vec<Gen> = w.reduced_word().into_iter().map(Gen::T).collect();
    CrossedOp::embed_word(&word, n)
}

/// Solve L·Y = M for Y, with L lower triangular in the numeric mask order
/// and invertible on the diagonal.
fn triangular_solve(l: &OmegaMat, m: &OmegaMat) -> OmegaMat {
    let n = l.n;
    let size: Mask = 1 << n;
    let mut l_cols: BTreeMap<Mask, Vec<(Mask, &RatFunc)>> = BTreeMap::new();
    for (&(r, c), v) in &l.entries {
        if r != c {
            l_cols.entry(c).or_default().push((r, v));
        }
    }
    let cols: BTreeSet<Mask> = m.entries.keys().map(|&(_, c)| c).collect();
    let mut out = OmegaMat::zero(n);
    for &c in &cols {
        let mut rhs: BTreeMap<Mask, RatFunc> = m
            .entries
            .iter()
            .filter(|(&(_, cc), _)| cc == c)
            .map(|(&(r, _), v)| (r, v.clone()))
            .collect();
        for rho in 0..size {
            let Some(t) = rhs.remove(&rho) else { continue };
            if t.is_zero() {
                continue;
            }
            let y = &t * &l.get(rho, rho).inv();
            if let Some(below) = l_cols.get(&rho) {
                for (r2, lv) in below {
                    let upd = &(*lv * &y);
                    let slot = rhs.entry(*r2).or_insert_with(|| RatFunc::zero(n));
                    *slot = &*slot - upd;
                }
            }
            out.insert(rho, c, y);
        }
    }
    out
}

/// Decompose a matrix over Pol into ω^+_λ ω^-_μ coordinates; errors when a
/// coordinate fails to be polynomial.
fn car_decompose(
    mat: &OmegaMat,
    algebra: &'static str,
) -> Result<BTreeMap<(Mask, Mask), Poly>, SmashError> {
    let n = mat.n;
    let mut residual = mat.clone();
    let mut out = BTreeMap::new();
    let mut mus: Vec<Mask> = (0..(1u32 << n)).collect();
    mus.sort_by_key(|m| (m.count_ones(), *m));
    for mu in mus {
        let col: Vec<(Mask, RatFunc)> = residual
            .entries
            .iter()
            .filter(|(&(_, c), _)| c == mu)
            .map(|(&(r, _), v)| (r, v.clone()))
            .collect();
        for (lambda, v) in col {
            let p = v
                .as_poly()
                .ok_or_else(|| SmashError::NotInAlgebra {
                    algebra,
                    detail: format!(
                        "coefficient at w+{:?} w-{:?} is not polynomial: {}",
                        mask_elems(lambda),
                        mask_elems(mu),
                        v
                    ),
                })?
                .clone();
            residual = &residual - &car_mat(lambda, mu, n).scale_rf(&RatFunc::from_poly(p.clone()));
            out.insert((lambda, mu), p);
        }
    }
    assert!(residual.is_zero(), "creation/annihilation coordinates must resolve");
    Ok(out)
}

/// Rewrite a crossed operator on the PBW basis of the chosen algebra.
/// The loop removes the longest-permutation summand each round: only
/// T_w itself can reach a crossed summand at w among basis elements with
/// permutations of length ≥ ℓ(w).
pub fn pbw_extract(op: &CrossedOp, kind: AlgebraKind) -> Result<PBWElt, SmashError> {
    let n = op.n;
    let mut residual = op.clone();
    let mut out = PBWElt::zero(n);
    let mut cache: BTreeMap<Perm, CrossedOp> = BTreeMap::new();
    while let Some(w) = residual.max_length_summand().cloned() {
        let mw = residual.summands.get(&w).expect("chosen summand").clone();
        let tw = cache
            .entry(w.clone())
            .or_insert_with(|| t_word_op(&w, n))
            .clone();
        let lw = tw.summands.get(&w).expect("leading summand of T_w").clone();
        let bw = triangular_solve(&lw, &mw).perm_vars(&w.inverse());
        let coeffs = car_decompose(&bw, kind.name())?;
        let mut chunk_mat = OmegaMat::zero(n);
        for ((lambda, mu), c) in coeffs {
            if !kind.admits(lambda, mu) {
                return Err(SmashError::NotInAlgebra {
                    algebra: kind.name(),
                    detail: format!(
                        "T[{}] carries w+{:?} w-{:?} with coefficient {}",
                        w,
                        mask_elems(lambda),
                        mask_elems(mu),
                        c
                    ),
                });
            }
            chunk_mat =
                &chunk_mat + &car_mat(lambda, mu, n).scale_rf(&RatFunc::from_poly(c.clone()));
            out.insert(w.clone(), lambda, mu, c);
        }
        let chunk = CrossedOp::from_summand(Perm::identity(n), chunk_mat);
        residual = &residual - &tw.compose(&chunk);
        assert!(
            !residual.summands.contains_key(&w),
            "leading summand must cancel exactly"
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{all_perms, LinProd};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn straightening_x1_t1() {
        // X_1 T_1 = T_1 X_2 + 1.
        let op = CrossedOp::embed_word(&[Gen::X(1), Gen::T(1)], 2);
        let got = pbw_extract(&op, AlgebraKind::NH).unwrap();
        let mut expect = PBWElt::zero(2);
        expect.insert(Perm::identity(2), 0, 0, Poly::one(2));
        expect.insert(Perm::s(1, 2), 0, 0, Poly::var(2, 2));
        assert_eq!(got, expect);
    }

    #[test]
    fn already_normal_t1() {
        let op = CrossedOp::embed(&Gen::T(1), 2);
        let got = pbw_extract(&op, AlgebraKind::NH).unwrap();
        let mut expect = PBWElt::zero(2);
        expect.insert(Perm::s(1, 2), 0, 0, Poly::one(2));
        assert_eq!(got, expect);
    }

    #[test]
    fn demazure_as_twisted_difference() {
        // (X_1 − X_2)^{-1} (1 − W_{s_1}) equals embed(T_1).
        let n = 2;
        let refl = CrossedOp::from_summand(Perm::s(1, n), OmegaMat::lam_sr(1, n));
        let diff = &CrossedOp::identity(n) - &refl;
        let c = RatFunc::one(n).div_lin(&LinProd::diff(1, 2, n));
        let op = diff.scale_rf(&c);
        assert!((&op - &CrossedOp::embed(&Gen::T(1), n)).is_zero());
        assert!(pbw_extract(&(&op - &CrossedOp::embed(&Gen::T(1), n)), AlgebraKind::NH)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn rejects_outside_algebra() {
        let n = 2;
        let wp = CrossedOp::embed(&Gen::WPlus(1), n);
        assert!(matches!(
            pbw_extract(&wp, AlgebraKind::NH),
            Err(SmashError::NotInAlgebra { algebra: "NH", .. })
        ));
        assert!(pbw_extract(&wp, AlgebraKind::ENH).is_ok());
        let wm = CrossedOp::embed(&Gen::WMinus(1), n);
        assert!(matches!(
            pbw_extract(&wm, AlgebraKind::ENH),
            Err(SmashError::NotInAlgebra { algebra: "ENH", .. })
        ));
        assert!(pbw_extract(&wm, AlgebraKind::EENH).is_ok());
        let c = RatFunc::one(n).div_lin(&LinProd::diff(1, 2, n));
        let frac = CrossedOp::identity(n).scale_rf(&c);
        assert!(pbw_extract(&frac, AlgebraKind::EENH).is_err());
    }

    fn pbw_word(w: &Perm, a: &[u32], lambda: Mask, mu: Mask) -> Vec<Gen> {
        let mut word: Vec<Gen> = w.reduced_word().into_iter().map(Gen::T).collect();
        for (i, &e) in a.iter().enumerate() {
            for _ in 0..e {
                word.push(Gen::X(i + 1));
            }
        }
        for i in mask_elems(lambda).into_iter().rev() {
            word.push(Gen::WPlus(i));
        }
        for i in mask_elems(mu) {
            word.push(Gen::WMinus(i));
        }
        word
    }

    #[test]
    fn round_trip_on_random_basis_monomials() {
        let n = 3;
        let mut rng = StdRng::seed_from_u64(11);
        let perms = all_perms(n);
        for _ in 0..40 {
            let w = perms[rng.gen_range(0..perms.len())].clone();
            let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let lambda: Mask = rng.gen_range(0..(1u32 << n));
            let mu: Mask = rng.gen_range(0..(1u32 << n));
            let word = pbw_word(&w, &a, lambda, mu);
            let op = CrossedOp::embed_word(&word, n);
            let got = pbw_extract(&op, AlgebraKind::EENH).unwrap();
            let mut expect = PBWElt::zero(n);
            let mut c = Poly::one(n);
            for (i, &e) in a.iter().enumerate() {
                c = &c * &Poly::var(i + 1, n).pow(e);
            }
            expect.insert(w.clone(), lambda, mu, c);
            assert_eq!(got, expect, "w={} a={:?} λ={:#b} μ={:#b}", w, a, lambda, mu);
            assert_eq!(got.to_op(), op);
        }
    }
}
