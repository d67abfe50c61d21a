//! Rational functions whose denominators are products of variable differences.
//!
//! Every denominator arising here (Euler classes and their Weyl translates,
//! Demazure coefficients, star-product weights) is a product of linear forms
//! X_i − X_j. Storing the denominator factored, with exact trial division for
//! reduction, gives canonical lowest terms without a general multivariate gcd.

use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::perm::Perm;
use super::poly::{Poly, Rat};

/// A scalar multiple of a product of normalized linear forms ∏ (X_i − X_j)^e
/// with i < j (1-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinProd {
    pub nvars: usize,
    pub coeff: Rat,
    pub factors: BTreeMap<(usize, usize), u32>,
}

impl LinProd {
    pub fn one(nvars: usize) -> Self {
        LinProd { nvars, coeff: Rat::one(), factors: BTreeMap::new() }
    }

    pub fn zero(nvars: usize) -> Self {
        LinProd { nvars, coeff: Rat::zero(), factors: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The linear form X_i − X_j (any order; a flip negates the coefficient).
    pub fn diff(i: usize, j: usize, nvars: usize) -> Self {
        assert!(i != j && 1 <= i && i <= nvars && 1 <= j && j <= nvars);
        let mut lp = LinProd::one(nvars);
        lp.push(i, j, 1);
        lp
    }

    /// Multiply by (X_i − X_j)^e in place.
    pub fn push(&mut self, i: usize, j: usize, e: u32) {
        if self.coeff.is_zero() || e == 0 {
            return;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        if i > j && e % 2 == 1 {
            self.coeff = -self.coeff.clone();
        }
        *self.factors.entry((a, b)).or_insert(0) += e;
    }

    pub fn mul(&self, other: &LinProd) -> LinProd {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return LinProd::zero(self.nvars);
        }
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        for (&(i, j), &e) in &other.factors {
            *out.factors.entry((i, j)).or_insert(0) += e;
        }
        out
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::constant(self.coeff.clone(), self.nvars);
        for (&(i, j), &e) in &self.factors {
            let d = &Poly::var(i, self.nvars) - &Poly::var(j, self.nvars);
            p = &p * &d.pow(e);
        }
        p
    }

    pub fn perm_apply(&self, w: &Perm) -> LinProd {
        let mut out = LinProd { nvars: self.nvars, coeff: self.coeff.clone(), factors: BTreeMap::new() };
        for (&(i, j), &e) in &self.factors {
            out.push(w.apply(i), w.apply(j), e);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.factors.values().map(|&e| e as usize).sum()
    }

    /// Factor a polynomial as a LinProd, if it is one (up to scalar).
    pub fn try_from_poly(p: &Poly) -> Option<LinProd> {
        if p.is_zero() {
            return Some(LinProd::zero(p.nvars));
        }
        let mut rem = p.clone();
        let mut out = LinProd::one(p.nvars);
        'outer: while rem.degree().unwrap_or(0) > 0 {
            for i in 1..=p.nvars {
                for j in i + 1..=p.nvars {
                    let d = &Poly::var(i, p.nvars) - &Poly::var(j, p.nvars);
                    if let Some(q) = rem.exact_div(&d) {
                        out.push(i, j, 1);
                        rem = q;
                        continue 'outer;
                    }
                }
            }
            return None;
        }
        let c = rem.as_constant()?;
        out.coeff *= c;
        Some(out)
    }
}

/// A rational function in canonical lowest terms; the denominator is a
/// monic product of normalized linear forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    pub num: Poly,
    den: BTreeMap<(usize, usize), u32>,
}

impl RatFunc {
    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: Poly::zero(nvars), den: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc { num: Poly::one(nvars), den: BTreeMap::new() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: BTreeMap::new() }
    }

    pub fn from_rat(c: Rat, nvars: usize) -> Self {
        RatFunc::from_poly(Poly::constant(c, nvars))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn den_poly(&self) -> Poly {
        let mut lp = LinProd::one(self.nvars());
        for (&(i, j), &e) in &self.den {
            lp.push(i, j, e);
        }
        lp.to_poly()
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<(usize, usize)> = self.den.keys().cloned().collect();
        for key in keys {
            let d = &Poly::var(key.0, self.num.nvars) - &Poly::var(key.1, self.num.nvars);
            while self.den.get(&key).copied().unwrap_or(0) > 0 {
                match self.num.exact_div(&d) {
                    Some(q) => {
                        self.num = q;
                        let e = self.den.get_mut(&key).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            self.den.remove(&key);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    pub fn from_quotient(num: Poly, den: &LinProd) -> Self {
        assert!(!den.is_zero(), "division by zero");
        let mut rf = RatFunc {
            num: num.scale(&(Rat::one() / &den.coeff)),
            den: den.factors.clone(),
        };
        rf = rf.reduce();
        rf
    }

    /// Divide by a product of linear forms.
    pub fn div_lin(&self, d: &LinProd) -> Self {
        assert!(!d.is_zero(), "division by zero");
        let mut out = self.clone();
        out.num = out.num.scale(&(Rat::one() / &d.coeff));
        for (&(i, j), &e) in &d.factors {
            *out.den.entry((i, j)).or_insert(0) += e;
        }
        out.reduce()
    }

    pub fn mul_lin(&self, d: &LinProd) -> Self {
        self * &RatFunc::from_poly(d.to_poly())
    }

    /// Multiplicative inverse; panics unless the numerator is a scalar multiple
    /// of a product of linear forms (the only case this calculus produces).
    pub fn inv(&self) -> Self {
        let lp = LinProd::try_from_poly(&self.num)
            .expect("inverse exists only for products of linear forms");
        assert!(!lp.is_zero(), "division by zero");
        let mut num = Poly::constant(Rat::one() / &lp.coeff, self.nvars());
        for (&(i, j), &e) in &self.den {
            let d = &Poly::var(i, self.nvars()) - &Poly::var(j, self.nvars());
            num = &num * &d.pow(e);
        }
        let mut out = RatFunc { num, den: lp.factors };
        out = out.reduce();
        out
    }

    pub fn perm_apply(&self, w: &Perm) -> Self {
        let mut num = self.num.perm_apply(w);
        let mut den = BTreeMap::new();
        for (&(i, j), &e) in &self.den {
            let (a, b) = (w.apply(i), w.apply(j));
            let (a2, b2) = if a < b { (a, b) } else { (b, a) };
            if a > b && e % 2 == 1 {
                num = -&num;
            }
            *den.entry((a2, b2)).or_insert(0) += e;
        }
        RatFunc { num, den }
    }

    /// Equality by cross-multiplication (agrees with structural equality of
    /// the canonical form; used as a sanity check).
    pub fn eq_cross(&self, other: &RatFunc) -> bool {
        &self.num * &other.den_poly() == &other.num * &self.den_poly()
    }

    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den_poly().eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    pub fn to_string_with(&self, var: &str) -> String {
        if self.den.is_empty() {
            return self.num.to_string_with(var);
        }
        let mut parts = Vec::new();
        for (&(i, j), &e) in &self.den {
            let f = format!("({}{} - {}{})", var, i, var, j);
            parts.push(if e == 1 { f } else { format!("{}^{}", f, e) });
        }
        format!("({}) / ({})", self.num.to_string_with(var), parts.join("*"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("X"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let mut den = self.den.clone();
        for (&k, &e) in &rhs.den {
            let cur = den.entry(k).or_insert(0);
            *cur = (*cur).max(e);
        }
        let lift = |rf: &RatFunc| -> Poly {
            let mut p = rf.num.clone();
            for (&(i, j), &e) in &den {
                let have = rf.den.get(&(i, j)).copied().unwrap_or(0);
                if e > have {
                    let d = &Poly::var(i, rf.nvars()) - &Poly::var(j, rf.nvars());
                    p = &p * &d.pow(e - have);
                }
            }
            p
        };
        let num = &lift(self) + &lift(rhs);
        RatFunc { num, den }.reduce()
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        let mut den = self.den.clone();
        for (&k, &e) in &rhs.den {
            *den.entry(k).or_insert(0) += e;
        }
        RatFunc { num: &self.num * &rhs.num, den }.reduce()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn x(i: usize, n: usize) -> Poly {
        Poly::var(i, n)
    }

    #[test]
    fn reduction_cancels_linear_factors() {
        // (X1^2 - X2^2)/(X1 - X2) = X1 + X2.
        let num = &(&x(1, 2) * &x(1, 2)) - &(&x(2, 2) * &x(2, 2));
        let rf = RatFunc::from_quotient(num, &LinProd::diff(1, 2, 2));
        assert!(rf.is_polynomial());
        assert_eq!(rf.num, &x(1, 2) + &x(2, 2));
    }

    #[test]
    fn flipped_forms_normalize() {
        // 1/(X2 - X1) = -1/(X1 - X2); the two constructions agree.
        let a = RatFunc::from_quotient(Poly::one(2), &LinProd::diff(2, 1, 2));
        let b = RatFunc::from_quotient(-&Poly::one(2), &LinProd::diff(1, 2, 2));
        assert_eq!(a, b);
        assert!(a.eq_cross(&b));
    }

    #[test]
    fn arithmetic_and_inverse() {
        let n = 3;
        let a = RatFunc::from_quotient(&x(1, n) - &x(3, n), &LinProd::diff(1, 2, n));
        let b = RatFunc::from_quotient(Poly::one(n), &LinProd::diff(2, 3, n));
        let s = &a + &b;
        let t = &s - &a;
        assert_eq!(t, b);
        let p = &a * &a.inv();
        assert_eq!(p, RatFunc::one(n));
        assert_eq!(a.inv().inv(), a);
    }

    #[test]
    fn perm_apply_respects_structure() {
        let n = 3;
        let a = RatFunc::from_quotient(x(1, n), &LinProd::diff(1, 2, n));
        let s1 = Perm::s(1, n);
        let b = a.perm_apply(&s1);
        // s_1(X1/(X1-X2)) = X2/(X2-X1) = -X2/(X1-X2).
        let expect = RatFunc::from_quotient(-&x(2, n), &LinProd::diff(1, 2, n));
        assert_eq!(b, expect);
        assert_eq!(b.perm_apply(&s1), a);
    }

    #[test]
    fn try_from_poly_factors() {
        let n = 3;
        let p = (&(&x(1, n) - &x(2, n)) * &(&x(3, n) - &x(1, n))).scale(&rat(2));
        let lp = LinProd::try_from_poly(&p).unwrap();
        assert_eq!(lp.to_poly(), p);
        assert_eq!(LinProd::try_from_poly(&(&x(1, n) + &x(2, n))), None);
    }
}
