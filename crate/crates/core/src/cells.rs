//! Cell modules of `End(T)`, Gram matrices and the simple `End(T)`-modules.

use std::sync::Arc;

use crate::algebra::{endomorphism_algebra, Algebra, HomSpace, Module};
use crate::basis::StandardBasisDatum;
use crate::error::{Error, Result};
use crate::highest_weight::Registry;
use crate::linalg::{combine_matrices, Matrix, Subspace};
use crate::scalar::Scalar;
use crate::tilting::{tilting_support, TiltingTriple};

/// The three semisimplicity verdicts for `End(T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Semisimplicity {
    /// `rad End(T) = 0`.
    pub by_radical: bool,
    /// `rad T = 0`.
    pub by_module: bool,
    /// `Σ_λ (dim L_T(λ))² = dim End(T)`.
    pub by_cells: bool,
}

impl Semisimplicity {
    pub fn agree(&self) -> bool {
        self.by_radical == self.by_module && self.by_radical == self.by_cells
    }
}

/// Per-label data of the cell modules.
#[derive(Clone, Debug)]
pub struct Cell<S> {
    pub fiber: usize,
    pub label: usize,
    pub i_len: usize,
    pub j_len: usize,
    /// `β(j, k)`, a `|J| × |I|` matrix.
    pub gram: Matrix<S>,
    pub rank: usize,
    /// Multiplicity of `T(λ)` as a summand of `T`.
    pub multiplicity: usize,
    /// `Hom(Δ(λ), T)` as a left `End(T)`-module.
    pub module: Module<S>,
}

#[derive(Clone, Debug)]
pub struct CellData<S> {
    pub datum: StandardBasisDatum<S>,
    /// `End(T)` in the canonical basis of the hom space.
    pub end_algebra: Arc<Algebra<S>>,
    pub end_hom: HomSpace<S>,
    pub cells: Vec<Cell<S>>,
}

/// Scalar component of an endomorphism of `T(λ)` in `K · id ⊕ rad End(T(λ))`.
pub fn scalar_part<S: Scalar>(end: &HomSpace<S>, rad: &Subspace<S>, x: &Matrix<S>) -> Result<S> {
    let q = Subspace::full(end.dim()).quotient(rad)?;
    if q.dim != 1 {
        return Err(Error::NotComputable(format!("End(T(λ)) / rad has dimension {}", q.dim)));
    }
    let id = end.coordinates(&Matrix::identity(end.source.dim())).expect("identity is an endomorphism");
    let xc = end.coordinates(x).ok_or_else(|| Error::InvalidMorphism("not an endomorphism of T(λ)".into()))?;
    let s = q.projection.mul_vec(&xc)[0].clone();
    let u = q.projection.mul_vec(&id)[0].clone();
    Ok(s / u)
}

/// `β(j, k)` = scalar part of `f̂_j ∘ ĝ_k` in `End(T(λ))`, in the datum's
/// own convention (transposed for an opposite datum).
pub fn gram_matrix<S: Scalar>(
    datum: &StandardBasisDatum<S>,
    tiltings: &[TiltingTriple<S>],
    fiber: usize,
) -> Result<Matrix<S>> {
    let fib = &datum.fibers()[fiber];
    let t = &tiltings[fib.label].module;
    let (end_alg, end) = endomorphism_algebra(t)?;
    let rad = end_alg.radical()?.clone();
    let mut beta = Matrix::zeros(fib.j_len(), fib.i_len());
    for j in 0..fib.j_len() {
        for k in 0..fib.i_len() {
            let x = &fib.f_hat[j].matrix * &fib.g_hat[k].matrix;
            beta.set(j, k, scalar_part(&end, &rad, &x)?);
        }
    }
    Ok(if datum.reversed { beta.transpose() } else { beta })
}

/// The cell module of a fiber: underlying space spanned by the `I`-index,
/// with `End(T)` acting through the left structure coefficients.
pub fn cell_module<S: Scalar>(
    datum: &StandardBasisDatum<S>,
    end_algebra: &Arc<Algebra<S>>,
    end_hom: &HomSpace<S>,
    fiber: usize,
) -> Result<Module<S>> {
    let action = end_hom
        .matrices()
        .iter()
        .map(|phi| Ok(datum.structure_coefficients(phi)?.left[fiber].clone()))
        .collect::<Result<Vec<_>>>()?;
    Module::new(end_algebra.clone(), datum.i_len(fiber), action)
}

/// The cell module for a label, or `LabelNotInSupport`.
pub fn cell_module_for_label<S: Scalar>(
    registry: &Registry<S>,
    datum: &StandardBasisDatum<S>,
    lambda: usize,
) -> Result<Module<S>> {
    let fiber = datum
        .fibers()
        .iter()
        .position(|f| f.label == lambda)
        .ok_or_else(|| Error::LabelNotInSupport(registry.label(lambda).to_string()))?;
    let (alg, hom) = endomorphism_algebra(datum.module())?;
    cell_module(datum, &alg, &hom, fiber)
}

impl<S: Scalar> CellData<S> {
    pub fn build(tiltings: &[TiltingTriple<S>], datum: StandardBasisDatum<S>) -> Result<Self> {
        let t = datum.module().clone();
        let (end_algebra, end_hom) = endomorphism_algebra(&t)?;
        let support = tilting_support(tiltings, &t)?;
        let mut cells = Vec::new();
        for (k, fib) in datum.fibers().iter().enumerate() {
            let gram = gram_matrix(&datum, tiltings, k)?;
            let rank = gram.rank();
            let module = cell_module(&datum, &end_algebra, &end_hom, k)?;
            cells.push(Cell {
                fiber: k,
                label: fib.label,
                i_len: datum.i_len(k),
                j_len: datum.j_len(k),
                gram,
                rank,
                multiplicity: support[fib.label],
                module,
            });
        }
        Ok(CellData { datum, end_algebra, end_hom, cells })
    }

    /// `c_ij · c_kl − β(j, k) c_il` lies in the span of lower fibers for all
    /// indices; returns the first failing `(fiber, i, j, k, l)`.
    pub fn check_product_rule(&self, registry: &Registry<S>) -> Result<Option<(usize, usize, usize, usize, usize)>> {
        let d = &self.datum;
        for cell in &self.cells {
            let f = cell.fiber;
            for i in 0..cell.i_len {
                for j in 0..cell.j_len {
                    for k in 0..cell.i_len {
                        for l in 0..cell.j_len {
                            let prod = d.mul(d.element(f, i, j), d.element(f, k, l));
                            let scaled = d.element(f, i, l).scale(cell.gram.get(j, k));
                            if !d.in_lower_span(registry, f, &(&prod - &scaled))? {
                                return Ok(Some((f, i, j, k, l)));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// `(λ, dim L_T(λ))` for every `λ` with `β_λ ≠ 0`, after checking
    /// `rank β_λ` against the multiplicity of `T(λ)` in `T`.
    pub fn classify_simples(&self, registry: &Registry<S>) -> Result<Vec<(usize, usize)>> {
        for c in &self.cells {
            if c.rank != c.multiplicity {
                return Err(Error::TheoremViolation {
                    label: registry.label(c.label).to_string(),
                    detail: format!(
                        "rank β = {} but T({}) occurs {} times",
                        c.rank,
                        registry.label(c.label),
                        c.multiplicity
                    ),
                });
            }
        }
        Ok(self.cells.iter().filter(|c| c.rank > 0).map(|c| (c.label, c.rank)).collect())
    }

    /// Semisimplicity of `End(T)` computed three ways.
    pub fn semisimplicity(&self) -> Result<Semisimplicity> {
        let total: usize = self.cells.iter().map(|c| c.rank * c.rank).sum();
        Ok(Semisimplicity {
            by_radical: self.end_algebra.is_semisimple()?,
            by_module: self.datum.module().is_semisimple()?,
            by_cells: total == self.end_dim(),
        })
    }

    /// Semisimplicity of `End(T)` from its radical, checked against the
    /// semisimplicity of `T` and against `Σ (rank β_λ)² = dim End(T)`.
    pub fn is_semisimple_endalgebra(&self) -> Result<bool> {
        let s = self.semisimplicity()?;
        if s.by_radical != s.by_cells || s.by_radical != s.by_module {
            return Err(Error::TheoremViolation {
                label: String::new(),
                detail: format!(
                    "End(T) semisimple: {}, T semisimple: {}, Σ (rank β)² = dim End(T): {}",
                    s.by_radical, s.by_module, s.by_cells
                ),
            });
        }
        Ok(s.by_radical)
    }

    /// `L_T(λ)`: the cell module modulo the kernel of its Gram matrix.
    pub fn simple_module(&self, fiber: usize) -> Result<Module<S>> {
        let cell = &self.cells[fiber];
        let rad = Subspace::kernel_of(&cell.gram);
        Ok(cell.module.submodule(rad)?.quotient().0)
    }

    pub fn end_dim(&self) -> usize {
        self.end_algebra.dim()
    }
}

/// An element of `End(T)` from coordinates in the datum's basis.
pub fn element_from_coordinates<S: Scalar>(datum: &StandardBasisDatum<S>, coords: &[S]) -> Matrix<S> {
    let mats: Vec<Matrix<S>> = datum.elements().into_iter().map(|(_, _, _, e)| e.clone()).collect();
    let n = datum.module().dim();
    combine_matrices(coords, &mats, n, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::highest_weight::WeightPoset;
    use crate::scalar::Rational;
    use crate::tilting::{all_tiltings, characteristic_tilting, tilting_sum};

    fn setup(name: &str) -> (Registry<Rational>, Vec<TiltingTriple<Rational>>) {
        let e = catalog::entry::<Rational>(name).unwrap();
        let poset = WeightPoset::new(e.labels.clone(), &e.covers).unwrap();
        let r = Registry::new(e.algebra, poset, Some(e.idempotents)).unwrap();
        let ts = all_tiltings(&r, 1000).unwrap();
        (r, ts)
    }

    fn cells(r: &Registry<Rational>, ts: &[TiltingTriple<Rational>], t: &Module<Rational>) -> CellData<Rational> {
        let d = StandardBasisDatum::build(r, ts, t, 0).unwrap();
        CellData::build(ts, d).unwrap()
    }

    #[test]
    fn trivial_gram_is_one() {
        let (r, ts) = setup("trivial");
        let cd = cells(&r, &ts, &ts[0].module);
        assert_eq!(cd.cells[0].gram, Matrix::identity(1));
        assert!(cd.is_semisimple_endalgebra().unwrap());
    }

    #[test]
    fn a2_characteristic_tilting_cells() {
        let (r, ts) = setup("a2path");
        let t = characteristic_tilting(&ts).unwrap();
        let cd = cells(&r, &ts, &t);
        let low = r.index("2").unwrap();
        let low_cell = cd.cells.iter().find(|c| c.label == low).unwrap();
        assert_eq!(low_cell.module.dim(), 2);
        assert_eq!(low_cell.gram.shape(), (1, 2));
        assert_eq!(low_cell.rank, 1);
        let high_cell = cd.cells.iter().find(|c| c.label != low).unwrap();
        assert_eq!(high_cell.module.dim(), 1);
        assert_eq!(high_cell.rank, 1);
        let simples = cd.classify_simples(&r).unwrap();
        assert_eq!(simples.len(), 2);
        assert!(simples.iter().all(|&(_, d)| d == 1));
        assert_eq!(cd.end_dim(), 3);
        assert!(!cd.is_semisimple_endalgebra().unwrap());
        assert!(cd.check_product_rule(&r).unwrap().is_none());
        for k in 0..cd.cells.len() {
            assert_eq!(cd.simple_module(k).unwrap().dim(), cd.cells[k].rank);
        }
    }

    #[test]
    fn doubled_tilting_has_two_dim_simple() {
        let (r, ts) = setup("auslander-dualnumbers");
        for l in 0..r.len() {
            let mut mult = vec![0; r.len()];
            mult[l] = 2;
            let t = tilting_sum(&ts, &mult).unwrap();
            let cd = cells(&r, &ts, &t);
            let simples = cd.classify_simples(&r).unwrap();
            assert_eq!(simples, vec![(l, 2)]);
            assert!(cd.check_product_rule(&r).unwrap().is_none());
        }
    }

    #[test]
    fn identity_acts_as_identity_on_cells() {
        let (r, ts) = setup("ut3");
        let t = characteristic_tilting(&ts).unwrap();
        let cd = cells(&r, &ts, &t);
        let unit = cd.end_algebra.unit().to_vec();
        for c in &cd.cells {
            assert_eq!(c.module.act(&unit), Matrix::identity(c.i_len));
        }
        let _ = cell_module_for_label(&r, &cd.datum, 0).unwrap();
    }

    #[test]
    fn simple_is_not_enough_for_the_module_criterion() {
        // End(T(1)) = K although T(1) = P(1) is uniserial of length 2
        let (r, ts) = setup("a2path");
        let top = r.index("1").unwrap();
        let cd = cells(&r, &ts, &ts[top].module);
        let s = cd.semisimplicity().unwrap();
        assert!(s.by_radical && s.by_cells && !s.by_module);
        assert!(matches!(cd.is_semisimple_endalgebra(), Err(Error::TheoremViolation { .. })));
    }

    #[test]
    fn semisimple_case() {
        let (r, ts) = setup("semisimple2");
        let t = characteristic_tilting(&ts).unwrap();
        let cd = cells(&r, &ts, &t);
        assert!(cd.cells.iter().all(|c| c.gram.shape() == (1, 1) && c.rank == 1));
        assert!(cd.is_semisimple_endalgebra().unwrap());
        let total: usize = cd.classify_simples(&r).unwrap().iter().map(|&(_, d)| d * d).sum();
        assert_eq!(total, cd.end_dim());
    }
}
