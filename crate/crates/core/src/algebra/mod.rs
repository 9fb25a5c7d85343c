//! Finite-dimensional algebras given by structure constants, their modules
//! and module homomorphisms.

mod decompose;
mod hom;
mod module;
mod structure;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

pub use decompose::{composition_factors_by_socle_series, endomorphism_algebra, Decomposition, Summand};
pub use hom::{hom_space, HomSpace};
pub use module::{Module, Morphism, Submodule};
pub use structure::{PrimitiveIdempotents, Simple};

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

/// An associative unital algebra with a fixed basis `b_0, …, b_{n-1}`.
///
/// Elements are coordinate vectors. `left[i]` is the matrix of `x ↦ b_i x`.
pub struct Algebra<S> {
    id: u64,
    name: String,
    left: Vec<Matrix<S>>,
    unit: Vec<S>,
    radical: OnceLock<Result<Subspace<S>>>,
    generators: OnceLock<Vec<usize>>,
    idempotents: OnceLock<Result<PrimitiveIdempotents<S>>>,
}

impl<S> std::fmt::Debug for Algebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("name", &self.name).field("dim", &self.left.len()).finish()
    }
}

impl<S: Scalar> Algebra<S> {
    /// Builds an algebra from sparse structure constants `(i, j, k, c)`
    /// meaning `b_i b_j = Σ c b_k`, checking associativity and the unit.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        constants: &[(usize, usize, usize, S)],
        unit: Vec<S>,
    ) -> Result<Arc<Self>> {
        let mut left = vec![Matrix::<S>::zeros(dim, dim); dim];
        for (i, j, k, c) in constants {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidAlgebra(format!("structure constant index ({i}, {j}, {k}) out of range")));
            }
            let v = left[*i].get(*k, *j).clone() + c.clone();
            left[*i].set(*k, *j, v);
        }
        Self::from_left_multiplications(name, left, unit)
    }

    pub fn from_left_multiplications(name: impl Into<String>, left: Vec<Matrix<S>>, unit: Vec<S>) -> Result<Arc<Self>> {
        let a = Self::unchecked(name.into(), left, unit);
        a.check()?;
        Ok(Arc::new(a))
    }

    pub(crate) fn unchecked(name: String, left: Vec<Matrix<S>>, unit: Vec<S>) -> Self {
        Algebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name,
            left,
            unit,
            radical: OnceLock::new(),
            generators: OnceLock::new(),
            idempotents: OnceLock::new(),
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.dim();
        if self.unit.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.unit.len() });
        }
        if self.left.iter().any(|m| m.shape() != (n, n)) {
            return Err(Error::InvalidAlgebra("left multiplication matrices have the wrong shape".into()));
        }
        if self.left_mult(&self.unit) != Matrix::identity(n) {
            return Err(Error::InvalidAlgebra("unit is not a left identity".into()));
        }
        for i in 0..n {
            if self.mul(&self.basis_vector(i), &self.unit) != self.basis_vector(i) {
                return Err(Error::InvalidAlgebra(format!("unit is not a right identity on b_{i}")));
            }
        }
        // Associativity of basis triples is L_{b_i b_j} = L_i L_j.
        for i in 0..n {
            for j in 0..n {
                let prod = self.left[i].column(j);
                if self.left_mult(&prod) != &self.left[i] * &self.left[j] {
                    return Err(Error::InvalidAlgebra(format!("associativity fails for (b_{i} b_{j}) b_k")));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.left.len()
    }

    pub fn unit(&self) -> &[S] {
        &self.unit
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.id == other.id
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.dim()];
        v[i] = S::one();
        v
    }

    pub fn zero(&self) -> Vec<S> {
        vec![S::zero(); self.dim()]
    }

    /// Matrix of `x ↦ b_i x`.
    pub fn left_basis_mult(&self, i: usize) -> &Matrix<S> {
        &self.left[i]
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[S]) -> Matrix<S> {
        crate::linalg::combine_matrices(a, &self.left, self.dim(), self.dim())
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &[S]) -> Matrix<S> {
        let n = self.dim();
        Matrix::from_columns(n, &(0..n).map(|i| self.left[i].mul_vec(a)).collect::<Vec<_>>())
    }

    pub fn mul(&self, a: &[S], b: &[S]) -> Vec<S> {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.left[i].mul_vec(b)) {
                if !x.is_zero() {
                    *o = o.clone() + ai.clone() * x;
                }
            }
        }
        out
    }

    /// Sparse structure constants in `(i, j, k)` order.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, S)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.left[i].get(k, j);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// The opposite algebra on the same basis: `b_i ∘ b_j = b_j b_i`.
    pub fn opposite(&self) -> Arc<Self> {
        let n = self.dim();
        let left = (0..n)
            .map(|i| Matrix::from_columns(n, &(0..n).map(|j| self.left[j].column(i)).collect::<Vec<_>>()))
            .collect();
        Arc::new(Self::unchecked(format!("{}^op", self.name), left, self.unit.clone()))
    }

    /// Elements `b_i` that span `A` modulo `rad² A`; they generate `A`.
    /// Falls back to the whole basis when the radical is not available.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let n = self.dim();
            let Ok(rad) = self.radical() else {
                return (0..n).collect();
            };
            let rad_vecs = rad.vectors();
            let mut span = Subspace::spanned_by(
                n,
                rad_vecs.iter().flat_map(|x| rad_vecs.iter().map(|y| self.mul(x, y))).collect::<Vec<_>>(),
            );
            let mut gens = Vec::new();
            for i in 0..n {
                let b = self.basis_vector(i);
                if !span.contains(&b) {
                    span = span.sum(&Subspace::spanned_by(n, [b])).unwrap();
                    gens.push(i);
                }
            }
            gens
        })
    }

    pub fn is_anti_involution(&self, tau: &Matrix<S>) -> Result<()> {
        let n = self.dim();
        if tau.shape() != (n, n) {
            return Err(Error::InvalidInvolution(format!("expected a {n}x{n} matrix")));
        }
        if tau * tau != Matrix::identity(n) {
            return Err(Error::InvalidInvolution("tau^2 is not the identity".into()));
        }
        if tau.mul_vec(&self.unit) != self.unit {
            return Err(Error::InvalidInvolution("tau does not fix the unit".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = tau.mul_vec(&self.left[i].column(j));
                let rhs = self.mul(&tau.column(j), &tau.column(i));
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!("tau(b_{i} b_{j}) != tau(b_{j}) tau(b_{i})")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn rejects_non_associative_constants() {
        // b0 unit, b1 b1 = b0 + b1 is fine; break it with b1 b1 = b2, b2 b1 = b0, b1 b2 = b1.
        let consts = vec![
            (0, 0, 0, q(1)),
            (0, 1, 1, q(1)),
            (1, 0, 1, q(1)),
            (0, 2, 2, q(1)),
            (2, 0, 2, q(1)),
            (1, 1, 2, q(1)),
            (2, 1, 0, q(1)),
            (1, 2, 1, q(1)),
        ];
        let err = Algebra::new("bad", 3, &consts, vec![q(1), q(0), q(0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(_)));
    }

    #[test]
    fn rejects_wrong_unit() {
        let consts = vec![(0, 0, 0, q(1)), (1, 1, 1, q(1))];
        let err = Algebra::new("kk", 2, &consts, vec![q(1), q(0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(_)));
    }

    #[test]
    fn opposite_reverses_products() {
        // upper triangular 2x2: e11, e12, e22
        let consts = vec![(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))];
        let a = Algebra::new("ut2", 3, &consts, vec![q(1), q(0), q(1)]).unwrap();
        let op = a.opposite();
        op.check().unwrap();
        let (x, y) = (a.basis_vector(0), a.basis_vector(1));
        assert_eq!(op.mul(&y, &x), a.mul(&x, &y));
    }
}
