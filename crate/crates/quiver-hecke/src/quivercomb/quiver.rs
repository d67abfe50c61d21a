//! Finite loopless quivers with arrow multiplicities.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyalg::{Poly, Rat};

/// A finite quiver without loops. Arrows are stored as (source, target)
/// vertex indices; repetition encodes multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "QuiverData", into = "QuiverData")]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct QuiverData {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum QuiverError {
    #[error("loop arrow at vertex {0}")]
    Loop(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex name {0}")]
    DuplicateVertex(String),
}

impl TryFrom<QuiverData> for Quiver {
    type Error = QuiverError;
    fn try_from(data: QuiverData) -> Result<Quiver, QuiverError> {
        let mut arrows = Vec::new();
        for (s, t) in &data.arrows {
            let find = |name: &String| {
                data.vertices
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| QuiverError::UnknownVertex(name.clone()))
            };
            arrows.push((find(s)?, find(t)?));
        }
        Quiver::new(data.vertices, arrows)
    }
}

impl From<Quiver> for QuiverData {
    fn from(q: Quiver) -> QuiverData {
        QuiverData {
            arrows: q
                .arrows
                .iter()
                .map(|&(s, t)| (q.vertices[s].clone(), q.vertices[t].clone()))
                .collect(),
            vertices: q.vertices,
        }
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        for (idx, v) in vertices.iter().enumerate() {
            if vertices[..idx].contains(v) {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        for &(s, t) in &arrows {
            assert!(s < vertices.len() && t < vertices.len(), "vertex index out of range");
            if s == t {
                return Err(QuiverError::Loop(vertices[s].clone()));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Number of arrows i -> j.
    pub fn h(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|&&(s, t)| s == i && t == j).count()
    }

    /// Disjoint union of arrow sets over a common vertex set.
    pub fn sum(&self, other: &Quiver) -> Quiver {
        assert_eq!(self.vertices, other.vertices);
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// The one-arrow quivers whose sum this quiver is.
    pub fn split_arrows(&self) -> Vec<Quiver> {
        self.arrows
            .iter()
            .map(|&a| Quiver { vertices: self.vertices.clone(), arrows: vec![a] })
            .collect()
    }

    /// P_{i,j}(u, v) = (u - v)^{h_{i,j}} evaluated on polynomials.
    pub fn p_poly(&self, i: usize, j: usize, u: &Poly, v: &Poly) -> Poly {
        (u - v).pow(self.h(i, j) as u32)
    }

    /// Q_{i,j}(u, v) = (u - v)^{h_{i,j}} (v - u)^{h_{j,i}} for i != j; Q_{i,i} = 1.
    pub fn q_poly(&self, i: usize, j: usize, u: &Poly, v: &Poly) -> Poly {
        if i == j {
            return Poly::one(u.nvars);
        }
        &self.p_poly(i, j, u, v) * &self.p_poly(j, i, v, u)
    }

    /// Coefficient of u^t v^r in Q_{i,j}(u, v).
    pub fn q_coeff(&self, i: usize, j: usize, t: u16, r: u16) -> Rat {
        let u = Poly::var(1, 2);
        let v = Poly::var(2, 2);
        let q = self.q_poly(i, j, &u, &v);
        q.terms
            .get(&crate::polyalg::Mono(vec![t, r]))
            .cloned()
            .unwrap_or_else(num_traits::Zero::zero)
    }
}

fn named(names: &[&str], arrows: Vec<(usize, usize)>) -> Quiver {
    Quiver::new(names.iter().map(|s| s.to_string()).collect(), arrows).unwrap()
}

/// Single vertex, no arrows.
pub fn one_vertex() -> Quiver {
    named(&["i"], vec![])
}

/// Two vertices i, j and one arrow i -> j.
pub fn single_arrow() -> Quiver {
    named(&["i", "j"], vec![(0, 1)])
}

/// Two vertices i, j and one arrow j -> i.
pub fn single_arrow_reversed() -> Quiver {
    named(&["i", "j"], vec![(1, 0)])
}

/// Two vertices with m parallel arrows i -> j.
pub fn kronecker(m: usize) -> Quiver {
    named(&["i", "j"], vec![(0, 1); m])
}

/// Three vertices r, b, g; arrows r -> b and g -> b.
pub fn gamma1() -> Quiver {
    named(&["r", "b", "g"], vec![(0, 1), (2, 1)])
}

/// Three vertices r, b, g; two arrows r -> b and one arrow g -> b.
pub fn gamma2() -> Quiver {
    named(&["r", "b", "g"], vec![(0, 1), (0, 1), (2, 1)])
}

/// Three vertices r, b, g; two arrows r -> b, one arrow b -> r, g isolated.
pub fn gamma3() -> Quiver {
    named(&["r", "b", "g"], vec![(0, 1), (0, 1), (1, 0)])
}

/// The quiver battery used by the verification suites.
pub fn test_quivers() -> Vec<(String, Quiver)> {
    vec![
        ("one-vertex".into(), one_vertex()),
        ("single-arrow".into(), single_arrow()),
        ("reversed-arrow".into(), single_arrow_reversed()),
        ("kronecker-2".into(), kronecker(2)),
        ("two-to-one".into(), gamma1()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    #[test]
    fn multiplicities_and_serde() {
        let q = gamma2();
        assert_eq!(q.h(0, 1), 2);
        assert_eq!(q.h(1, 0), 0);
        assert_eq!(q.h(2, 1), 1);
        let json = serde_json::to_string(&q).unwrap();
        let back: Quiver = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
        let bad = r#"{"vertices":["a"],"arrows":[["a","a"]]}"#;
        assert!(serde_json::from_str::<Quiver>(bad).is_err());
    }

    #[test]
    fn q_polynomial_and_coefficients() {
        let q = single_arrow();
        let u = Poly::var(1, 2);
        let v = Poly::var(2, 2);
        // Q_{i,j}(u,v) = (u - v) for the single arrow i -> j.
        assert_eq!(q.q_poly(0, 1, &u, &v), &u - &v);
        // Q_{j,i}(u,v) = (v - u).
        assert_eq!(q.q_poly(1, 0, &u, &v), &v - &u);
        assert_eq!(q.q_poly(0, 0, &u, &v), Poly::one(2));
        assert_eq!(q.q_coeff(0, 1, 1, 0), rat(1));
        assert_eq!(q.q_coeff(0, 1, 0, 1), rat(-1));
        assert_eq!(q.q_coeff(1, 0, 1, 0), rat(-1));
    }

    #[test]
    fn quiver_sum_adds_multiplicities() {
        let q = single_arrow().sum(&single_arrow());
        assert_eq!(q.h(0, 1), 2);
        assert_eq!(q, kronecker(2));
    }
}
