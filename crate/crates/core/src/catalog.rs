//! Built-in example algebras with their weight orders.
//!
//! Paths compose right to left: an arrow `a: 1 → 2` satisfies
//! `a = e2 · a · e1`.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::highest_weight::{Registry, WeightPoset};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub const NAMES: [&str; 6] = ["trivial", "semisimple2", "a2path", "auslander-dualnumbers", "ut3", "dualnumbers"];

/// An algebra together with everything needed to set up its weight poset.
#[derive(Clone, Debug)]
pub struct CatalogEntry<S> {
    pub name: &'static str,
    pub algebra: Arc<Algebra<S>>,
    pub labels: Vec<String>,
    /// Cover relations `(μ, λ)` meaning `μ < λ`.
    pub covers: Vec<(String, String)>,
    /// Primitive idempotent attached to each label.
    pub idempotents: Vec<Vec<S>>,
    pub involution: Option<Matrix<S>>,
}

impl<S: Scalar> CatalogEntry<S> {
    pub fn registry(&self) -> Result<Registry<S>> {
        let poset = WeightPoset::new(self.labels.clone(), &self.covers)?;
        Registry::new(self.algebra.clone(), poset, Some(self.idempotents.clone()))
    }
}

fn build<S: Scalar>(name: &str, dim: usize, consts: &[(usize, usize, usize)], unit: &[usize]) -> Arc<Algebra<S>> {
    let c: Vec<_> = consts.iter().map(|&(i, j, k)| (i, j, k, S::one())).collect();
    let mut u = vec![S::zero(); dim];
    for &i in unit {
        u[i] = S::one();
    }
    Algebra::new(name, dim, &c, u).expect("catalog algebras are valid")
}

fn unit_vector<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn covers(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// The ground field.
pub fn trivial<S: Scalar>() -> Arc<Algebra<S>> {
    build("trivial", 1, &[(0, 0, 0)], &[0])
}

/// `K × K` with basis `e1, e2`.
pub fn semisimple2<S: Scalar>() -> Arc<Algebra<S>> {
    build("semisimple2", 2, &[(0, 0, 0), (1, 1, 1)], &[0, 1])
}

/// Path algebra of `1 → 2`, basis `e1, e2, a`.
pub fn a2path<S: Scalar>() -> Arc<Algebra<S>> {
    build("a2path", 3, &[(0, 0, 0), (1, 1, 1), (1, 2, 2), (2, 0, 2)], &[0, 1])
}

/// Auslander algebra of `K[x]/(x²)`: quiver `a: 1 → 2`, `b: 2 → 1` with
/// `ba = 0`. Basis `e1, e2, a, b, ab`.
pub fn auslander_dual_numbers<S: Scalar>() -> Arc<Algebra<S>> {
    let (e1, e2, a, b, ab) = (0, 1, 2, 3, 4);
    build(
        "auslander-dualnumbers",
        5,
        &[
            (e1, e1, e1),
            (e2, e2, e2),
            (e2, a, a),
            (a, e1, a),
            (e1, b, b),
            (b, e2, b),
            (a, b, ab),
            (e2, ab, ab),
            (ab, e2, ab),
        ],
        &[e1, e2],
    )
}

/// Upper triangular 3×3 matrices, basis `E11, E12, E13, E22, E23, E33`.
pub fn ut3<S: Scalar>() -> Arc<Algebra<S>> {
    let idx = |i: usize, j: usize| -> usize {
        match (i, j) {
            (1, 1) => 0,
            (1, 2) => 1,
            (1, 3) => 2,
            (2, 2) => 3,
            (2, 3) => 4,
            (3, 3) => 5,
            _ => unreachable!(),
        }
    };
    let mut consts = Vec::new();
    for i in 1..=3 {
        for j in i..=3 {
            for l in j..=3 {
                consts.push((idx(i, j), idx(j, l), idx(i, l)));
            }
        }
    }
    build("ut3", 6, &consts, &[0, 3, 5])
}

/// `K[x]/(x²)`, basis `1, x`. Not quasi-hereditary.
pub fn dual_numbers<S: Scalar>() -> Arc<Algebra<S>> {
    build("dualnumbers", 2, &[(0, 0, 0), (0, 1, 1), (1, 0, 1)], &[0])
}

pub fn entry<S: Scalar>(name: &str) -> Option<CatalogEntry<S>> {
    let e = match name {
        "trivial" => CatalogEntry {
            name: "trivial",
            algebra: trivial(),
            labels: labels(&["1"]),
            covers: Vec::new(),
            idempotents: vec![unit_vector(1, 0)],
            involution: Some(Matrix::identity(1)),
        },
        "semisimple2" => CatalogEntry {
            name: "semisimple2",
            algebra: semisimple2(),
            labels: labels(&["1", "2"]),
            covers: Vec::new(),
            idempotents: vec![unit_vector(2, 0), unit_vector(2, 1)],
            involution: Some(Matrix::identity(2)),
        },
        "a2path" => CatalogEntry {
            name: "a2path",
            algebra: a2path(),
            labels: labels(&["1", "2"]),
            covers: covers(&[("2", "1")]),
            idempotents: vec![unit_vector(3, 0), unit_vector(3, 1)],
            involution: None,
        },
        "auslander-dualnumbers" => {
            let mut tau = Matrix::identity(5);
            tau.set(2, 2, S::zero());
            tau.set(3, 3, S::zero());
            tau.set(2, 3, S::one());
            tau.set(3, 2, S::one());
            CatalogEntry {
                name: "auslander-dualnumbers",
                algebra: auslander_dual_numbers(),
                labels: labels(&["1", "2"]),
                covers: covers(&[("2", "1")]),
                idempotents: vec![unit_vector(5, 0), unit_vector(5, 1)],
                involution: Some(tau),
            }
        }
        "ut3" => CatalogEntry {
            name: "ut3",
            algebra: ut3(),
            labels: labels(&["1", "2", "3"]),
            covers: covers(&[("1", "2"), ("2", "3")]),
            idempotents: vec![unit_vector(6, 0), unit_vector(6, 3), unit_vector(6, 5)],
            involution: None,
        },
        "dualnumbers" => CatalogEntry {
            name: "dualnumbers",
            algebra: dual_numbers(),
            labels: labels(&["1"]),
            covers: Vec::new(),
            idempotents: vec![unit_vector(2, 0)],
            involution: Some(Matrix::identity(2)),
        },
        _ => return None,
    };
    Some(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, F7};

    #[test]
    fn every_entry_is_consistent() {
        for name in NAMES {
            let e = entry::<Rational>(name).unwrap();
            assert_eq!(e.labels.len(), e.idempotents.len());
            if let Some(tau) = &e.involution {
                e.algebra.is_anti_involution(tau).unwrap();
            }
            let f7 = entry::<F7>(name).unwrap();
            assert_eq!(f7.algebra.dim(), e.algebra.dim());
        }
        assert!(entry::<Rational>("nope").is_none());
    }

    #[test]
    fn vertex_swap_is_an_anti_involution_of_a2_but_identity_is_not() {
        let a = a2path::<Rational>();
        assert!(a.is_anti_involution(&Matrix::identity(3)).is_err());
        let mut swap = Matrix::<Rational>::zeros(3, 3);
        swap.set(0, 1, Rational::from_i64(1));
        swap.set(1, 0, Rational::from_i64(1));
        swap.set(2, 2, Rational::from_i64(1));
        a.is_anti_involution(&swap).unwrap();
    }
}
