//! Sparse multivariate polynomials over exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::perm::Perm;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// An exponent vector of fixed length (one slot per variable).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn unit(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e)
    }

    pub fn deg(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    /// Graded reverse-lexicographic order; the canonical term order.
    pub fn grevlex_cmp(&self, other: &Mono) -> Ordering {
        match self.deg().cmp(&other.deg()) {
            Ordering::Equal => {}
            o => return o,
        }
        // Equal degree: smaller exponent on the last differing variable wins.
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// A polynomial in variables indexed 1..=nvars with rational coefficients.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rat, nvars: usize) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono::unit(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(Rat::one(), nvars)
    }

    pub fn int(c: i64, nvars: usize) -> Self {
        Poly::constant(rat(c), nvars)
    }

    /// The variable X_i, 1-based.
    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(1 <= i && i <= nvars, "variable index out of range");
        let mut p = Poly::zero(nvars);
        p.terms.insert(Mono::var(i - 1, nvars), Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().deg() == 0)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.deg()).max()
    }

    /// Total degree if homogeneous, None otherwise (zero counts as homogeneous of any degree).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.deg());
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute variable i (1-based) by variable j, i.e. apply the map X_i -> X_j
    /// encoded by a full permutation. `w(P)(X_1..) = P` with variable i replaced by X_{w(i)}.
    pub fn perm_apply(&self, w: &Perm) -> Poly {
        assert_eq!(w.n(), self.nvars, "variable-count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; self.nvars];
            for (i, &exp) in m.0.iter().enumerate() {
                e[w.apply0(i)] += exp;
            }
            out.insert_term(Mono(e), c.clone());
        }
        out
    }

    /// Extend to `nvars` variables (new variables at the end).
    pub fn extend_vars(&self, nvars: usize) -> Poly {
        assert!(nvars >= self.nvars);
        let nv = nvars;
        Poly {
            nvars: nv,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nv, 0);
                    (Mono(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drop trailing variables, which must not occur.
    pub fn truncate_vars(&self, nvars: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            assert!(m.0[nvars..].iter().all(|&e| e == 0), "variable in use");
            out.insert_term(Mono(m.0[..nvars].to_vec()), c.clone());
        }
        out
    }

    /// Substitute X_i := value for each (i, value) pair, keeping other variables.
    pub fn subst(&self, assignments: &[(usize, Poly)]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut factor = Poly::constant(c.clone(), self.nvars);
            let mut rest = vec![0u16; self.nvars];
            for (i, &e) in m.0.iter().enumerate() {
                if let Some((_, v)) = assignments.iter().find(|(j, _)| *j == i + 1) {
                    factor = &factor * &v.pow(e as u32);
                } else {
                    rest[i] = e;
                }
            }
            let mut shifted = Poly::zero(self.nvars);
            shifted.terms.insert(Mono(rest), Rat::one());
            out = &out + &(&factor * &shifted);
        }
        out
    }

    /// Evaluate at a rational point (all variables).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Leading term in grevlex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.grevlex_cmp(b))
    }

    /// Exact division; None if `self` is not a polynomial multiple of `d`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Poly::zero(self.nvars);
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.try_div(&dm)?;
            let qc = rc / &dc;
            let mut t = Poly::zero(self.nvars);
            t.terms.insert(qm, qc);
            rem = &rem - &(&t * d);
            quo = &quo + &t;
        }
        Some(quo)
    }

    /// Positive-denominator content normalization is not needed; equality is structural.
    pub fn to_string_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<_> = self.terms.iter().collect();
        monos.sort_by(|(a, _), (b, _)| b.grevlex_cmp(a));
        let mut s = String::new();
        for (idx, (m, c)) in monos.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.deg() == 0 {
                parts.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    parts.push(format!("{}{}", var, i + 1));
                } else if e > 1 {
                    parts.push(format!("{}{}^{}", var, i + 1, e));
                }
            }
            s.push_str(&parts.join("*"));
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with("X"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable-count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable-count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable-count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// All monomials of total degree `d` in `nvars` variables.
pub fn monos_of_degree(nvars: usize, d: usize) -> Vec<Mono> {
    fn rec(n: usize, d: usize, prefix: &mut Vec<u16>, out: &mut Vec<Mono>) {
        if n == 1 {
            let mut m = prefix.clone();
            m.push(d as u16);
            out.push(Mono(m));
            return;
        }
        for e in 0..=d {
            prefix.push(e as u16);
            rec(n - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::new(), &mut out);
    out
}

/// The divided-difference operator ∂_r = (1 - s_r)/(X_r - X_{r+1}); division is always exact.
pub fn demazure(r: usize, f: &Poly) -> Poly {
    assert!(1 <= r && r < f.nvars, "index out of range");
    let sr = Perm::s(r, f.nvars);
    let num = f - &f.perm_apply(&sr);
    let den = &Poly::var(r, f.nvars) - &Poly::var(r + 1, f.nvars);
    num.exact_div(&den).expect("numerator is antisymmetric, division is exact")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, n: usize) -> Poly {
        Poly::var(i, n)
    }

    #[test]
    fn perm_apply_examples() {
        let s1 = Perm::s(1, 2);
        assert_eq!(x(1, 2).perm_apply(&s1), x(2, 2));
        let f = &x(1, 3) * &(&x(2, 3) * &x(2, 3));
        assert_eq!(f.perm_apply(&Perm::identity(3)), f);
        let sym = &x(1, 2) + &x(2, 2);
        assert_eq!(sym.perm_apply(&s1), sym);
    }

    #[test]
    fn perm_apply_group_law() {
        // v(w(f)) = (v∘w)(f) on a non-symmetric sample.
        let f = &x(1, 3) + &(&x(2, 3) * &x(2, 3));
        let v = Perm::s(2, 3);
        let w = Perm::s(1, 3);
        let lhs = f.perm_apply(&w).perm_apply(&v);
        let rhs = f.perm_apply(&v.compose(&w));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_examples() {
        assert_eq!(demazure(1, &x(1, 2)), Poly::one(2));
        let sq = &x(1, 2) * &x(1, 2);
        assert_eq!(demazure(1, &sq), &x(1, 2) + &x(2, 2));
        assert_eq!(demazure(1, &(&x(1, 2) * &x(2, 2))), Poly::zero(2));
    }

    #[test]
    fn demazure_nil_and_leibniz() {
        let f = &(&x(1, 3) * &x(1, 3)) + &(&x(2, 3) * &x(3, 3));
        let g = &x(1, 3) - &(&x(3, 3) * &x(2, 3));
        for r in 1..3 {
            assert!(demazure(r, &demazure(r, &f)).is_zero());
            let lhs = demazure(r, &(&f * &g));
            let rhs = &(&demazure(r, &f) * &g)
                + &(&f.perm_apply(&Perm::s(r, 3)) * &demazure(r, &g));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exact_division() {
        let f = &(&x(1, 2) * &x(1, 2)) - &(&x(2, 2) * &x(2, 2));
        let d = &x(1, 2) - &x(2, 2);
        assert_eq!(f.exact_div(&d), Some(&x(1, 2) + &x(2, 2)));
        assert_eq!(x(1, 2).exact_div(&d), None);
    }

    #[test]
    fn display_canonical() {
        let p = &(&x(1, 2) * &(&x(1, 2) * &x(2, 2))).scale(&rat(3)) - &Poly::constant(rat_frac(1, 2), 2);
        assert_eq!(p.to_string(), "3*X1^2*X2 - 1/2");
    }
}
