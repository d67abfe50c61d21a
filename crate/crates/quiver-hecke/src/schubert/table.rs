//! Restriction tables of equivariant Schubert classes on the Grassmannian,
//! built two independent ways, and the identities that characterize them.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::polyalg::{
    mask_complement, mask_elems, monos_of_degree, rat, LinProd, Mask, Mono, Perm, Poly, QMatrix,
    Rat, RatFunc,
};
use crate::smash::RelCase;

use super::euler::a_w_lin;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum SchubertError {
    #[error("non-polynomial value at {context}")]
    NotPolynomial { context: String },
    #[error("interpolation system for {lam} is inconsistent")]
    OracleInconsistent { lam: String },
    #[error("interpolation system for {lam} has a non-trivial kernel")]
    OracleAmbiguous { lam: String },
}

pub(crate) fn mask_str(m: Mask) -> String {
    format!(
        "{{{}}}",
        mask_elems(m).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    )
}

/// μ ≥ λ in the restriction order: every prefix of μ contains at least as
/// many elements as the same prefix of λ.
pub fn dominates(mu: Mask, lam: Mask, n: usize) -> bool {
    let mut diff = 0i32;
    for i in 1..=n {
        diff += ((mu >> (i - 1)) & 1) as i32 - ((lam >> (i - 1)) & 1) as i32;
        if diff < 0 {
            return false;
        }
    }
    true
}

/// Pairs (i, j) with i < j, i ∈ λ, j ∉ λ.
pub fn inv_pairs(lam: Mask, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in mask_elems(lam) {
        for j in i + 1..=n {
            if lam & (1 << (j - 1)) == 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// ∏_{(i,j)} (T_j − T_i) over the inversion pairs of λ.
pub(crate) fn inv_lin(lam: Mask, n: usize) -> LinProd {
    let mut lp = LinProd::one(n);
    for (i, j) in inv_pairs(lam, n) {
        lp.push(j, i, 1);
    }
    lp
}

fn size_masks(n: usize, k: usize) -> Vec<Mask> {
    (0..(1u32 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// Restriction table of the classes S̃_λ on one Grassmannian stratum: the
/// entry at (λ, μ) is the restriction of S̃_λ to the plain fixed point μ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertTable {
    pub n: usize,
    pub k: usize,
    entries: BTreeMap<Mask, BTreeMap<Mask, Poly>>,
}

/// Which independent construction produces the table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BuildMethod {
    /// Insert the elements of λ in increasing order, dividing out localized
    /// pushforward weights.
    Recursion,
    /// Interpolate: solve the divisibility conditions along the
    /// one-dimensional orbits for the coefficients of each entry.
    Oracle,
}

impl SchubertTable {
    pub fn entry(&self, lam: Mask, mu: Mask) -> &Poly {
        &self.entries[&lam][&mu]
    }

    pub fn masks(&self) -> Vec<Mask> {
        self.entries.keys().copied().collect()
    }

    /// One line per (λ, μ) pair.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (lam, row) in &self.entries {
            for (mu, p) in row {
                out.push_str(&format!(
                    "S{}{} = {}\n",
                    mask_str(*lam),
                    mask_str(*mu),
                    p.to_string_with("T")
                ));
            }
        }
        out
    }
}

/// Build the table for the k-th stratum of the n-strand Grassmannian tower.
pub fn schubert_build(n: usize, k: usize, method: BuildMethod) -> Result<SchubertTable, SchubertError> {
    assert!(k <= n && n >= 1);
    match method {
        BuildMethod::Recursion => Ok(table_cascade(n, k)?.pop().expect("nonempty cascade")),
        BuildMethod::Oracle => build_oracle(n, k),
    }
}

/// Tables for strata 0..=k, all built by the recursion.
pub fn table_cascade(n: usize, k: usize) -> Result<Vec<SchubertTable>, SchubertError> {
    let mut out = Vec::with_capacity(k + 1);
    let mut base = BTreeMap::new();
    base.insert(0 as Mask, BTreeMap::from([(0 as Mask, Poly::one(n))]));
    out.push(SchubertTable { n, k: 0, entries: base });
    for m in 1..=k {
        let prev = &out[m - 1];
        let mut entries = BTreeMap::new();
        for lam in size_masks(n, m) {
            let r = *mask_elems(lam).last().unwrap();
            let lam_prev = lam & !(1 << (r - 1));
            let mut row = BTreeMap::new();
            for mu in size_masks(n, m) {
                let mut acc = RatFunc::zero(n);
                for t in mask_elems(mu) {
                    if t > r {
                        continue;
                    }
                    let mut num = LinProd::one(n);
                    for p in r + 1..=n {
                        num.push(p, t, 1);
                    }
                    let mut den = LinProd::one(n);
                    for i in mask_elems(mu & !(1 << (t - 1))) {
                        den.push(t, i, 1);
                    }
                    let top = &num.to_poly() * prev.entry(lam_prev, mu & !(1 << (t - 1)));
                    acc = &acc + &RatFunc::from_quotient(top, &den);
                }
                let p = acc.as_poly().cloned().ok_or_else(|| SchubertError::NotPolynomial {
                    context: format!("S{}{}", mask_str(lam), mask_str(mu)),
                })?;
                row.insert(mu, p);
            }
            entries.insert(lam, row);
        }
        out.push(SchubertTable { n, k: m, entries });
    }
    Ok(out)
}

fn subst_mono(m: &Mono, hi: usize, lo: usize) -> Mono {
    let mut e = m.0.clone();
    e[lo - 1] += e[hi - 1];
    e[hi - 1] = 0;
    Mono(e)
}

fn subst_poly(p: &Poly, hi: usize, lo: usize) -> Poly {
    p.subst(&[(hi, Poly::var(lo, p.nvars))])
}

/// The two positions swapped along a one-dimensional orbit.
fn edge_swap(mu: Mask, nu: Mask) -> Option<(usize, usize)> {
    let d = mu ^ nu;
    if d.count_ones() != 2 || mu.count_ones() != nu.count_ones() {
        return None;
    }
    let e = mask_elems(d);
    Some((e[0], e[1]))
}

fn build_oracle(n: usize, k: usize) -> Result<SchubertTable, SchubertError> {
    let masks = size_masks(n, k);
    let mut entries = BTreeMap::new();
    for &lam in &masks {
        let d = inv_pairs(lam, n).len();
        let monos = monos_of_degree(n, d);
        let nm = monos.len();
        let unknowns: Vec<Mask> =
            masks.iter().copied().filter(|&mu| mu != lam && dominates(mu, lam, n)).collect();
        let col_of: BTreeMap<Mask, usize> =
            unknowns.iter().enumerate().map(|(b, &mu)| (mu, b)).collect();
        let pinned = inv_lin(lam, n).to_poly();
        let ncols = unknowns.len() * nm;

        let mut rows: Vec<Vec<Rat>> = Vec::new();
        let mut rhs: Vec<Rat> = Vec::new();
        for (ai, &mu) in masks.iter().enumerate() {
            for &nu in &masks[ai + 1..] {
                let Some((lo, hi)) = edge_swap(mu, nu) else { continue };
                let mut coeffs: BTreeMap<Mono, Vec<(usize, Rat)>> = BTreeMap::new();
                let mut rhs_poly = Poly::zero(n);
                for (mask, sign) in [(mu, rat(1)), (nu, rat(-1))] {
                    if mask == lam {
                        rhs_poly = &rhs_poly - &subst_poly(&pinned, hi, lo).scale(&sign);
                    } else if let Some(&b) = col_of.get(&mask) {
                        for (mi, m) in monos.iter().enumerate() {
                            coeffs
                                .entry(subst_mono(m, hi, lo))
                                .or_default()
                                .push((b * nm + mi, sign.clone()));
                        }
                    }
                }
                let mut keys: Vec<Mono> = coeffs.keys().cloned().collect();
                for m in rhs_poly.terms.keys() {
                    if !coeffs.contains_key(m) {
                        keys.push(m.clone());
                    }
                }
                for key in keys {
                    let mut row = vec![Rat::zero(); ncols];
                    for (col, c) in coeffs.get(&key).into_iter().flatten() {
                        row[*col] += c;
                    }
                    rows.push(row);
                    rhs.push(rhs_poly.terms.get(&key).cloned().unwrap_or_else(Rat::zero));
                }
            }
        }

        let mat = QMatrix::from_rows(rows);
        if !mat.kernel().is_empty() {
            return Err(SchubertError::OracleAmbiguous { lam: mask_str(lam) });
        }
        let sol = mat
            .solve(&rhs)
            .ok_or_else(|| SchubertError::OracleInconsistent { lam: mask_str(lam) })?;

        let mut row = BTreeMap::new();
        for &mu in &masks {
            let p = if mu == lam {
                pinned.clone()
            } else if let Some(&b) = col_of.get(&mu) {
                let mut p = Poly::zero(n);
                for (mi, m) in monos.iter().enumerate() {
                    let c = &sol[b * nm + mi];
                    if !c.is_zero() {
                        p.terms.insert(m.clone(), c.clone());
                    }
                }
                p
            } else {
                Poly::zero(n)
            };
            row.insert(mu, p);
        }
        entries.insert(lam, row);
    }
    Ok(SchubertTable { n, k, entries })
}

/// The defining conditions: support above λ, normalized diagonal, entries
/// homogeneous of the inversion degree, and divisibility along the
/// one-dimensional orbits.
pub fn verify_table(t: &SchubertTable) -> Vec<RelCase> {
    let (n, k) = (t.n, t.k);
    let masks = t.masks();
    let mut cases = Vec::new();
    let tag = |what: &str| format!("table-{}[n={},k={}]", what, n, k);
    let mut support = Vec::new();
    let mut diag = Vec::new();
    let mut degree = Vec::new();
    let mut gkm = Vec::new();
    for &lam in &masks {
        let d = inv_pairs(lam, n).len();
        for &mu in &masks {
            let p = t.entry(lam, mu);
            if !dominates(mu, lam, n) && !p.is_zero() {
                support.push(format!("S{}{} nonzero below", mask_str(lam), mask_str(mu)));
            }
            if !p.is_zero() && p.homogeneous_degree() != Some(d) {
                degree.push(format!("S{}{} not homogeneous of degree {}", mask_str(lam), mask_str(mu), d));
            }
        }
        if t.entry(lam, lam) != &inv_lin(lam, n).to_poly() {
            diag.push(format!("S{}{}", mask_str(lam), mask_str(lam)));
        }
        for (ai, &mu) in masks.iter().enumerate() {
            for &nu in &masks[ai + 1..] {
                let Some((lo, hi)) = edge_swap(mu, nu) else { continue };
                let diff = t.entry(lam, mu) - t.entry(lam, nu);
                if !subst_poly(&diff, hi, lo).is_zero() {
                    gkm.push(format!(
                        "S{} at edge {}~{}",
                        mask_str(lam),
                        mask_str(mu),
                        mask_str(nu)
                    ));
                }
            }
        }
    }
    for (what, cite, bad) in [
        ("support", "lem:caract-S (i)", support),
        ("diagonal", "lem:caract-S (ii)", diag),
        ("degree", "lem:caract-S (iii)", degree),
        ("gkm-edges", "lem:caract-S / def:GKM", gkm),
    ] {
        cases.push(RelCase {
            id: tag(what),
            cite: cite.to_string(),
            ok: bad.is_empty(),
            witness: bad.first().cloned(),
        });
    }
    cases
}

/// Insertion and deletion identities relating consecutive strata.
pub fn verify_lambda_identities(n: usize) -> Result<Vec<RelCase>, SchubertError> {
    let cascade = table_cascade(n, n)?;
    let mut cases = Vec::new();
    for r in 1..=n {
        for k in 0..n {
            let mut bad = Vec::new();
            for lam in size_masks(n, k) {
                let above: Vec<usize> = mask_elems(lam).into_iter().filter(|&e| e > r).collect();
                for mu in size_masks(n, k + 1) {
                    let mut lhs = RatFunc::zero(n);
                    for t in mask_elems(mu) {
                        if t > r {
                            continue;
                        }
                        let mut num = LinProd::one(n);
                        for p in r + 1..=n {
                            num.push(p, t, 1);
                        }
                        let rest = mu & !(1 << (t - 1));
                        let mut den = LinProd::one(n);
                        for i in mask_elems(rest) {
                            den.push(t, i, 1);
                        }
                        let top = &num.to_poly() * cascade[k].entry(lam, rest);
                        lhs = &lhs + &RatFunc::from_quotient(top, &den);
                    }
                    let rhs = if lam & (1 << (r - 1)) == 0 {
                        let sign = if above.len() % 2 == 0 { rat(1) } else { rat(-1) };
                        cascade[k + 1].entry(lam | (1 << (r - 1)), mu).scale(&sign)
                    } else {
                        Poly::zero(n)
                    };
                    if lhs != RatFunc::from_poly(rhs) {
                        bad.push(format!("lam={} mu={}", mask_str(lam), mask_str(mu)));
                    }
                }
            }
            cases.push(RelCase {
                id: format!("schubert-insert[n={},r={},k={}]", n, r, k),
                cite: if r == n { "lem:S-lambda+n" } else { "lem:S-lambda+r" }.to_string(),
                ok: bad.is_empty(),
                witness: bad.first().cloned(),
            });
        }
        for k in 1..=n {
            let mut bad = Vec::new();
            for lam in size_masks(n, k) {
                let below: Vec<usize> = mask_elems(lam).into_iter().filter(|&e| e < r).collect();
                for mu in size_masks(n, k - 1) {
                    let mut lhs = RatFunc::zero(n);
                    for t in mask_elems(mask_complement(mu, n)) {
                        if t < r {
                            continue;
                        }
                        let mut num = LinProd::one(n);
                        for p in 1..r {
                            num.push(p, t, 1);
                        }
                        let grown = mu | (1 << (t - 1));
                        let mut den = LinProd::one(n);
                        for i in mask_elems(mask_complement(grown, n)) {
                            den.push(i, t, 1);
                        }
                        let top = &num.to_poly() * cascade[k].entry(lam, grown);
                        lhs = &lhs + &RatFunc::from_quotient(top, &den);
                    }
                    let rhs = if lam & (1 << (r - 1)) != 0 {
                        let sign = if below.len() % 2 == 0 { rat(1) } else { rat(-1) };
                        cascade[k - 1].entry(lam & !(1 << (r - 1)), mu).scale(&sign)
                    } else {
                        Poly::zero(n)
                    };
                    if lhs != RatFunc::from_poly(rhs) {
                        bad.push(format!("lam={} mu={}", mask_str(lam), mask_str(mu)));
                    }
                }
            }
            cases.push(RelCase {
                id: format!("schubert-delete[n={},r={},k={}]", n, r, k),
                cite: if r == 1 { "lem:S-lambda-1" } else { "lem:S-lambda-r" }.to_string(),
                ok: bad.is_empty(),
                witness: bad.first().cloned(),
            });
        }
    }
    Ok(cases)
}

/// How a simple reflection moves the table entries, at the level of the
/// identity flag and across all flag translates.
pub fn verify_wall_crossing(n: usize) -> Result<Vec<RelCase>, SchubertError> {
    let cascade = table_cascade(n, n)?;
    let perms = crate::polyalg::all_perms(n);
    let mut cases = Vec::new();
    for k in 0..=n {
        let t = &cascade[k];
        for r in 1..n {
            let sr = Perm::s(r, n);
            let mut bad = Vec::new();
            let mut bad_w = Vec::new();
            for lam in size_masks(n, k) {
                let crossing = lam & (1 << (r - 1)) != 0 && lam & (1 << r) == 0;
                let srlam = sr.apply_mask(lam);
                for mu in size_masks(n, k) {
                    let srmu = sr.apply_mask(mu);
                    let lhs = t.entry(lam, mu).perm_apply(&sr);
                    let rhs = if crossing {
                        let step = &Poly::var(r, n) - &Poly::var(r + 1, n);
                        t.entry(lam, srmu) + &(&step * t.entry(srlam, srmu))
                    } else {
                        t.entry(lam, srmu).clone()
                    };
                    if lhs != rhs {
                        bad.push(format!("lam={} mu={}", mask_str(lam), mask_str(mu)));
                        continue;
                    }
                    for w in &perms {
                        let wsr = w.compose(&sr);
                        let s_w = |v: &Perm, l: Mask, m: Mask| -> Poly {
                            &a_w_lin(v, n).to_poly() * &t.entry(l, m).perm_apply(v)
                        };
                        let lhs_w = s_w(&wsr, lam, mu);
                        let rhs_w = if crossing {
                            let step =
                                &Poly::var(w.apply(r), n) - &Poly::var(w.apply(r + 1), n);
                            -&(&s_w(w, lam, srmu) + &(&step * &s_w(w, srlam, srmu)))
                        } else {
                            -&s_w(w, lam, srmu)
                        };
                        if lhs_w != rhs_w {
                            bad_w.push(format!(
                                "w={} lam={} mu={}",
                                w,
                                mask_str(lam),
                                mask_str(mu)
                            ));
                            break;
                        }
                    }
                }
            }
            cases.push(RelCase {
                id: format!("wall-crossing[n={},k={},r={}]", n, k, r),
                cite: "lem:Schubert-change-w".to_string(),
                ok: bad.is_empty(),
                witness: bad.first().cloned(),
            });
            cases.push(RelCase {
                id: format!("wall-crossing-flags[n={},k={},r={}]", n, k, r),
                cite: "lem:Schubert-change-w / rk-Sw".to_string(),
                ok: bad_w.is_empty(),
                witness: bad_w.first().cloned(),
            });
        }
    }
    Ok(cases)
}

/// The two backends agree entrywise.
pub fn verify_backends(n: usize) -> Result<Vec<RelCase>, SchubertError> {
    let mut cases = Vec::new();
    for k in 0..=n {
        let rec = schubert_build(n, k, BuildMethod::Recursion)?;
        let ora = schubert_build(n, k, BuildMethod::Oracle)?;
        let mut bad = Vec::new();
        for lam in rec.masks() {
            for mu in rec.masks() {
                if rec.entry(lam, mu) != ora.entry(lam, mu) {
                    bad.push(format!("lam={} mu={}", mask_str(lam), mask_str(mu)));
                }
            }
        }
        cases.push(RelCase {
            id: format!("table-backends[n={},k={}]", n, k),
            cite: "def:Schubert-rec / lem:caract-S".to_string(),
            ok: bad.is_empty(),
            witness: bad.first().cloned(),
        });
    }
    Ok(cases)
}
