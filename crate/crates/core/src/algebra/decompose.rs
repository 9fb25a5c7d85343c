//! Krull–Schmidt decompositions, isomorphism tests and composition
//! multiplicities.

use std::sync::Arc;

use crate::algebra::{Algebra, HomSpace, Module, Morphism, Simple};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::random::{self, Rng};
use crate::scalar::Scalar;

/// An indecomposable direct summand `e M` of a module `M`.
#[derive(Clone, Debug)]
pub struct Summand<S> {
    pub module: Module<S>,
    /// `M ← summand`.
    pub inclusion: Matrix<S>,
    /// `summand ← M`, with `projection · inclusion = id`.
    pub projection: Matrix<S>,
    /// Isomorphism class among the summands of this decomposition.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition<S> {
    pub summands: Vec<Summand<S>>,
}

impl<S: Scalar> Decomposition<S> {
    pub fn class_count(&self) -> usize {
        self.summands.iter().map(|s| s.class + 1).max().unwrap_or(0)
    }

    /// One representative per class with its multiplicity.
    pub fn with_multiplicities(&self) -> Vec<(Module<S>, usize)> {
        (0..self.class_count())
            .map(|c| {
                let members: Vec<&Summand<S>> = self.summands.iter().filter(|s| s.class == c).collect();
                (members[0].module.clone(), members.len())
            })
            .collect()
    }
}

/// The endomorphism algebra of a module in the canonical hom-space basis.
pub fn endomorphism_algebra<S: Scalar>(m: &Module<S>) -> Result<(Arc<Algebra<S>>, HomSpace<S>)> {
    let end = HomSpace::compute(m, m)?;
    let mats = end.matrices();
    let r = mats.len();
    let left = (0..r)
        .map(|i| {
            let cols: Vec<Vec<S>> = (0..r)
                .map(|j| end.coordinates(&(&mats[i] * &mats[j])).expect("End(M) is closed under composition"))
                .collect();
            Matrix::from_columns(r, &cols)
        })
        .collect();
    let unit = end.coordinates(&Matrix::identity(m.dim())).expect("identity is an endomorphism");
    let alg = Algebra::unchecked(format!("End(M{})", m.dim()), left, unit);
    Ok((Arc::new(alg), end))
}

impl<S: Scalar> Module<S> {
    pub fn endomorphism_algebra(&self) -> Result<(Arc<Algebra<S>>, HomSpace<S>)> {
        endomorphism_algebra(self)
    }

    /// Local endomorphism ring, certified by `dim End/rad End = 1`.
    pub fn is_indecomposable(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(false);
        }
        let (end, _) = endomorphism_algebra(self)?;
        Ok(end.dim() - end.radical()?.dim() == 1)
    }

    /// Splits the module into indecomposables along primitive idempotents
    /// of its endomorphism algebra.
    pub fn krull_schmidt(&self) -> Result<Decomposition<S>> {
        if self.dim() == 0 {
            return Ok(Decomposition { summands: Vec::new() });
        }
        let (end, hom) = endomorphism_algebra(self)?;
        let idem = end.primitive_idempotents()?;
        let summands = idem
            .idempotents
            .iter()
            .zip(&idem.classes)
            .map(|(e, &class)| {
                let em = hom.element(e).matrix;
                let space = Subspace::column_space(&em);
                let sub = self.submodule(space.clone()).expect("image of an endomorphism is a submodule");
                let (module, inc) = sub.module();
                let projection = Matrix::from_rows(self.dim(), space.pivots().iter().map(|&p| em.row(p).to_vec()));
                Summand { module, inclusion: inc.matrix, projection, class }
            })
            .collect();
        Ok(Decomposition { summands })
    }

    /// An isomorphism `self → other`, if one exists.
    pub fn isomorphism_to(&self, other: &Self) -> Result<Option<Morphism<S>>> {
        self.isomorphism_to_with(other, &mut random::seeded(0))
    }

    pub fn isomorphism_to_with(&self, other: &Self, rng: &mut Rng) -> Result<Option<Morphism<S>>> {
        self.same_algebra(other)?;
        if self.dim() != other.dim() {
            return Ok(None);
        }
        if self.dim() == 0 {
            return Ok(Some(self.zero_to(other)));
        }
        let hom = HomSpace::compute(self, other)?;
        if hom.is_zero() {
            return Ok(None);
        }
        for f in hom.basis() {
            if f.is_isomorphism() {
                return Ok(Some(f));
            }
        }
        for _ in 0..8 {
            let f = hom.random_element(rng);
            if f.is_isomorphism() {
                return Ok(Some(f));
            }
        }
        self.isomorphism_by_decomposition(other)
    }

    /// Matches indecomposable summands; an isomorphism between two
    /// indecomposables, if any, is among the hom-space basis elements.
    fn isomorphism_by_decomposition(&self, other: &Self) -> Result<Option<Morphism<S>>> {
        let ds = self.krull_schmidt()?;
        let dt = other.krull_schmidt()?;
        if ds.summands.len() != dt.summands.len() {
            return Ok(None);
        }
        let mut used = vec![false; dt.summands.len()];
        let mut matrix = Matrix::zeros(other.dim(), self.dim());
        for s in &ds.summands {
            let mut found = false;
            for (k, t) in dt.summands.iter().enumerate() {
                if used[k] || s.module.dim() != t.module.dim() {
                    continue;
                }
                let h = HomSpace::compute(&s.module, &t.module)?;
                if let Some(phi) = h.basis().into_iter().find(Morphism::is_isomorphism) {
                    used[k] = true;
                    found = true;
                    matrix = &matrix + &(&(&t.inclusion * &phi.matrix) * &s.projection);
                    break;
                }
            }
            if !found {
                return Ok(None);
            }
        }
        Ok(Some(Morphism { source: self.clone(), target: other.clone(), matrix }))
    }

    pub fn is_isomorphic(&self, other: &Self) -> Result<bool> {
        Ok(self.isomorphism_to(other)?.is_some())
    }

    /// `[M : L]` for a simple module `L`, read off as the rank of a
    /// primitive idempotent `e` with `eL ≠ 0` acting on `M`.
    pub fn composition_multiplicity(&self, simple: &Self) -> Result<usize> {
        self.same_algebra(simple)?;
        if !simple.is_simple() {
            return Err(Error::NotSimple);
        }
        let idem = self.algebra().primitive_idempotents()?;
        for e in idem.representatives() {
            let on_l = simple.act(e).rank();
            if on_l > 0 {
                return Ok(self.act(e).rank() / on_l);
            }
        }
        Err(Error::NotSimple)
    }

    /// Multiplicities of all simples, in the order of `Algebra::simples`.
    pub fn composition_factors(&self) -> Result<Vec<usize>> {
        let idem = self.algebra().primitive_idempotents()?;
        Ok(idem.representatives().iter().map(|e| self.act(e).rank()).collect())
    }
}

/// Composition multiplicities by repeatedly removing the socle and
/// matching its simple summands up to isomorphism.
pub fn composition_factors_by_socle_series<S: Scalar>(m: &Module<S>, simples: &[Simple<S>]) -> Result<Vec<usize>> {
    let mut counts = vec![0; simples.len()];
    let mut current = m.clone();
    while current.dim() > 0 {
        let (soc, _) = current.socle()?.module();
        for (summand, mult) in soc.krull_schmidt()?.with_multiplicities() {
            let idx = simples
                .iter()
                .position(|s| s.module.is_isomorphic(&summand).unwrap_or(false))
                .ok_or_else(|| Error::NotComputable("socle summand matches no simple".into()))?;
            counts[idx] += mult;
        }
        current = current.socle()?.quotient().0;
    }
    Ok(counts)
}
