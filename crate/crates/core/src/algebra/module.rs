use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{combine_matrices, Matrix, Subspace};
use crate::scalar::Scalar;

struct ModuleData<S> {
    algebra: Arc<Algebra<S>>,
    dim: usize,
    action: Vec<Matrix<S>>,
}

/// A finite-dimensional left module: one action matrix per algebra basis
/// element, acting on column vectors. Cloning is cheap.
#[derive(Clone)]
pub struct Module<S>(Arc<ModuleData<S>>);

impl<S> std::fmt::Debug for Module<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module").field("algebra", &self.0.algebra.name).field("dim", &self.0.dim).finish()
    }
}

/// A module homomorphism, stored as a `target.dim × source.dim` matrix.
#[derive(Clone, Debug)]
pub struct Morphism<S> {
    pub source: Module<S>,
    pub target: Module<S>,
    pub matrix: Matrix<S>,
}

/// A submodule, given by an invariant subspace of its parent.
#[derive(Clone, Debug)]
pub struct Submodule<S> {
    pub parent: Module<S>,
    pub space: Subspace<S>,
}

impl<S: Scalar> Module<S> {
    /// Builds a module and checks the module axioms.
    pub fn new(algebra: Arc<Algebra<S>>, dim: usize, action: Vec<Matrix<S>>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: action.len() });
        }
        if let Some(bad) = action.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidModule(format!(
                "action matrix has shape {:?}, expected {dim}x{dim}",
                bad.shape()
            )));
        }
        let m = Self::new_unchecked(algebra, dim, action);
        m.check()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra<S>>, dim: usize, action: Vec<Matrix<S>>) -> Self {
        Module(Arc::new(ModuleData { algebra, dim, action }))
    }

    /// `act(1) = id` and `act(b_i) act(b_j) = act(b_i b_j)`.
    pub fn check(&self) -> Result<()> {
        let a = self.algebra();
        if self.act(a.unit()) != Matrix::identity(self.dim()) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = &self.0.action[i] * &self.0.action[j];
                if lhs != self.act(&a.left_basis_mult(i).column(j)) {
                    return Err(Error::InvalidModule(format!("action of b_{i} b_{j} is not the product of actions")));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra<S>> {
        &self.0.algebra
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn action(&self, i: usize) -> &Matrix<S> {
        &self.0.action[i]
    }

    pub fn actions(&self) -> &[Matrix<S>] {
        &self.0.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, a: &[S]) -> Matrix<S> {
        combine_matrices(a, &self.0.action, self.dim(), self.dim())
    }

    pub fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra().same_as(other.algebra()) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn zero(algebra: Arc<Algebra<S>>) -> Self {
        let n = algebra.dim();
        Self::new_unchecked(algebra, 0, vec![Matrix::zeros(0, 0); n])
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<Algebra<S>>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_basis_mult(i).clone()).collect();
        let n = algebra.dim();
        Self::new_unchecked(algebra, n, action)
    }

    /// The left ideal `A e` as a submodule of the regular module.
    pub fn left_ideal(algebra: &Arc<Algebra<S>>, e: &[S]) -> Submodule<S> {
        let n = algebra.dim();
        let space = Subspace::spanned_by(n, (0..n).map(|k| algebra.mul(&algebra.basis_vector(k), e)));
        Submodule { parent: Self::regular(algebra.clone()), space }
    }

    pub fn direct_sum(parts: &[&Self]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?;
        for p in parts {
            first.same_algebra(p)?;
        }
        let a = first.algebra().clone();
        let dim = parts.iter().map(|p| p.dim()).sum();
        let action =
            (0..a.dim()).map(|i| Matrix::block_diag(&parts.iter().map(|p| p.action(i)).collect::<Vec<_>>())).collect();
        Ok(Self::new_unchecked(a, dim, action))
    }

    pub fn power(&self, k: usize) -> Self {
        if k == 0 {
            return Self::zero(self.algebra().clone());
        }
        Self::direct_sum(&vec![self; k]).unwrap()
    }

    /// Same module in a new basis: action `g⁻¹ ρ(a) g`, where the columns
    /// of `g` are the new basis vectors.
    pub fn change_basis(&self, g: &Matrix<S>) -> Result<Self> {
        let inv = g.inverse().ok_or_else(|| Error::InvalidInput("change of basis is not invertible".into()))?;
        let action = self.actions().iter().map(|m| &(&inv * m) * g).collect();
        Ok(Self::new_unchecked(self.algebra().clone(), self.dim(), action))
    }

    /// Vector-space dual, as a module over the given opposite algebra: the
    /// action of `b_i` is the transpose.
    pub fn transpose_dual(&self, opposite: &Arc<Algebra<S>>) -> Self {
        let action = self.actions().iter().map(Matrix::transpose).collect();
        Self::new_unchecked(opposite.clone(), self.dim(), action)
    }

    pub fn is_invariant(&self, space: &Subspace<S>) -> bool {
        let gens = self.algebra().generators();
        space.vectors().iter().all(|v| gens.iter().all(|&g| space.contains(&self.action(g).mul_vec(v))))
    }

    pub fn submodule(&self, space: Subspace<S>) -> Result<Submodule<S>> {
        if space.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: space.ambient_dim() });
        }
        if !self.is_invariant(&space) {
            return Err(Error::InvalidModule("subspace is not invariant".into()));
        }
        Ok(Submodule { parent: self.clone(), space })
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_by(&self, vectors: impl IntoIterator<Item = Vec<S>>) -> Submodule<S> {
        let n = self.dim();
        let mut space = Subspace::spanned_by(n, vectors);
        loop {
            let gens = self.algebra().generators();
            let images: Vec<Vec<S>> =
                space.vectors().iter().flat_map(|v| gens.iter().map(move |&g| self.action(g).mul_vec(v))).collect();
            let next = space.sum(&Subspace::spanned_by(n, images)).unwrap();
            if next.dim() == space.dim() {
                return Submodule { parent: self.clone(), space };
            }
            space = next;
        }
    }

    pub fn whole(&self) -> Submodule<S> {
        Submodule { parent: self.clone(), space: Subspace::full(self.dim()) }
    }

    pub fn zero_submodule(&self) -> Submodule<S> {
        Submodule { parent: self.clone(), space: Subspace::zero(self.dim()) }
    }

    /// `rad(A) · M`.
    pub fn radical(&self) -> Result<Submodule<S>> {
        let rad = self.algebra().radical()?;
        let n = self.dim();
        let vecs: Vec<Vec<S>> = rad.vectors().iter().flat_map(|r| self.act(r).column_vectors()).collect();
        Ok(Submodule { parent: self.clone(), space: Subspace::spanned_by(n, vecs) })
    }

    /// Vectors killed by `rad(A)`.
    pub fn socle(&self) -> Result<Submodule<S>> {
        let rad = self.algebra().radical()?;
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for r in rad.vectors() {
            stacked = stacked.vstack(&self.act(&r));
        }
        Ok(Submodule { parent: self.clone(), space: Subspace::kernel_of(&stacked) })
    }

    pub fn head(&self) -> Result<(Module<S>, Morphism<S>)> {
        Ok(self.radical()?.quotient())
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.space.is_zero())
    }

    /// Burnside: the action matrices span the full matrix algebra.
    pub fn is_simple(&self) -> bool {
        let d = self.dim();
        if d == 0 {
            return false;
        }
        let span = Subspace::spanned_by(d * d, self.actions().iter().map(|m| m.data().to_vec()));
        span.dim() == d * d
    }

    pub fn identity(&self) -> Morphism<S> {
        Morphism { source: self.clone(), target: self.clone(), matrix: Matrix::identity(self.dim()) }
    }

    pub fn zero_to(&self, target: &Self) -> Morphism<S> {
        Morphism { source: self.clone(), target: target.clone(), matrix: Matrix::zeros(target.dim(), self.dim()) }
    }
}

impl<S: Scalar> Submodule<S> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The submodule as a module in its canonical basis, with its inclusion.
    pub fn module(&self) -> (Module<S>, Morphism<S>) {
        let basis = self.space.vectors();
        let k = basis.len();
        let pivots = self.space.pivots();
        let action = self
            .parent
            .actions()
            .iter()
            .map(|m| {
                let cols: Vec<Vec<S>> = basis
                    .iter()
                    .map(|b| {
                        let img = m.mul_vec(b);
                        pivots.iter().map(|&p| img[p].clone()).collect()
                    })
                    .collect();
                Matrix::from_columns(k, &cols)
            })
            .collect();
        let sub = Module::new_unchecked(self.parent.algebra().clone(), k, action);
        let inclusion = Matrix::from_columns(self.parent.dim(), &basis);
        let inc = Morphism { source: sub.clone(), target: self.parent.clone(), matrix: inclusion };
        (sub, inc)
    }

    /// `parent / self` with its projection.
    pub fn quotient(&self) -> (Module<S>, Morphism<S>) {
        let q = Subspace::full(self.parent.dim()).quotient(&self.space).unwrap();
        let action = self.parent.actions().iter().map(|m| &(&q.projection * m) * &q.section).collect();
        let module = Module::new_unchecked(self.parent.algebra().clone(), q.dim, action);
        let proj = Morphism { source: self.parent.clone(), target: module.clone(), matrix: q.projection };
        (module, proj)
    }

    pub fn sum(&self, other: &Self) -> Self {
        Submodule { parent: self.parent.clone(), space: self.space.sum(&other.space).unwrap() }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Submodule { parent: self.parent.clone(), space: self.space.intersect(&other.space).unwrap() }
    }
}

impl<S: Scalar> Morphism<S> {
    /// Builds a morphism and checks that it intertwines the actions.
    pub fn new(source: &Module<S>, target: &Module<S>, matrix: Matrix<S>) -> Result<Self> {
        source.same_algebra(target)?;
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::InvalidMorphism(format!(
                "matrix has shape {:?}, expected {}x{}",
                matrix.shape(),
                target.dim(),
                source.dim()
            )));
        }
        let f = Morphism { source: source.clone(), target: target.clone(), matrix };
        if !f.intertwines() {
            return Err(Error::InvalidMorphism("matrix does not intertwine the actions".into()));
        }
        Ok(f)
    }

    pub fn intertwines(&self) -> bool {
        (0..self.source.algebra().dim())
            .all(|i| &self.matrix * self.source.action(i) == self.target.action(i) * &self.matrix)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Morphism { source: other.source.clone(), target: self.target.clone(), matrix: &self.matrix * &other.matrix }
    }

    pub fn add(&self, other: &Self) -> Self {
        Morphism { source: self.source.clone(), target: self.target.clone(), matrix: &self.matrix + &other.matrix }
    }

    pub fn scale(&self, s: &S) -> Self {
        Morphism { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = self.matrix.inverse()?;
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }

    pub fn image(&self) -> Submodule<S> {
        Submodule { parent: self.target.clone(), space: Subspace::column_space(&self.matrix) }
    }

    pub fn kernel(&self) -> Submodule<S> {
        Submodule { parent: self.source.clone(), space: Subspace::kernel_of(&self.matrix) }
    }

    pub fn cokernel(&self) -> (Module<S>, Morphism<S>) {
        self.image().quotient()
    }
}
