//! Standard bases of `Hom(M, N)` and `End(T)` built from lifts through
//! indecomposable tilting modules.

use crate::algebra::{HomSpace, Module, Morphism};
use crate::error::{Error, Result};
use crate::highest_weight::Registry;
use crate::linalg::{combine, combine_matrices, Coordinates, Matrix, Subspace};
use crate::random::{self, Rng};
use crate::scalar::Scalar;
use crate::tilting::TiltingTriple;

/// `φ_λ(f) = [Image f : L(λ)]`.
pub fn phi_weight<S: Scalar>(registry: &Registry<S>, f: &Morphism<S>, lambda: usize) -> Result<usize> {
    let (image, _) = f.image().module();
    registry.composition_multiplicity(&image, lambda)
}

/// Source of free-variable choices for lifts: all zeros (the canonical
/// lift) or uniformly random values.
#[derive(Debug)]
pub struct LiftChoice {
    rng: Option<Rng>,
}

impl LiftChoice {
    /// Seed 0 selects the canonical lift.
    pub fn from_seed(seed: u64) -> Self {
        LiftChoice { rng: (seed != 0).then(|| random::seeded(seed)) }
    }

    pub fn canonical() -> Self {
        LiftChoice { rng: None }
    }

    fn free_values<S: Scalar>(&mut self, n: usize) -> Vec<S> {
        match &mut self.rng {
            None => vec![S::zero(); n],
            Some(rng) => random::vector(rng, n),
        }
    }
}

/// Solves `L(x) = target` for `x` in the span of `candidates`, where the
/// linear map `L` has been applied to every candidate in `images`.
struct LiftSystem<S> {
    candidates: Vec<Matrix<S>>,
    system: Matrix<S>,
    shape: (usize, usize),
}

impl<S: Scalar> LiftSystem<S> {
    fn new(candidates: Vec<Matrix<S>>, images: Vec<Matrix<S>>, image_shape: (usize, usize)) -> Self {
        let len = image_shape.0 * image_shape.1;
        let cols: Vec<Vec<S>> = images.into_iter().map(Matrix::into_data).collect();
        let system = Matrix::from_columns(len, &cols);
        LiftSystem { candidates, system, shape: image_shape }
    }

    fn solve(&self, target: &Matrix<S>, choice: &mut LiftChoice, rows: usize, cols: usize) -> Result<Matrix<S>> {
        if target.shape() != self.shape {
            return Err(Error::NoLift(format!("target has shape {:?}, expected {:?}", target.shape(), self.shape)));
        }
        let b = Matrix::from_flat(target.rows() * target.cols(), 1, target.data().to_vec());
        let sol = self.system.solve(&b).map_err(|_| Error::NoLift("lifting equation has no solution".into()))?;
        let mut x = sol.particular.column(0);
        let free: Vec<S> = choice.free_values(sol.nullspace.len());
        let shift = combine(&free, &sol.nullspace, x.len());
        for (a, b) in x.iter_mut().zip(shift) {
            *a = a.clone() + b;
        }
        Ok(combine_matrices(&x, &self.candidates, rows, cols))
    }
}

/// Lifts `f: M → ∇(λ)` to `f̂: M → T(λ)` with `π ∘ f̂ = f`.
pub fn lift_through_tilting<S: Scalar>(
    triple: &TiltingTriple<S>,
    f: &Morphism<S>,
    choice: &mut LiftChoice,
) -> Result<Morphism<S>> {
    let system = lift_system(triple, &f.source)?;
    let matrix = system.solve(&f.matrix, choice, triple.module.dim(), f.source.dim())?;
    Ok(Morphism { source: f.source.clone(), target: triple.module.clone(), matrix })
}

/// Extends `g: Δ(λ) → N` to `ĝ: T(λ) → N` with `ĝ ∘ i = g`.
pub fn extend_through_tilting<S: Scalar>(
    triple: &TiltingTriple<S>,
    g: &Morphism<S>,
    choice: &mut LiftChoice,
) -> Result<Morphism<S>> {
    let system = extend_system(triple, &g.target)?;
    let matrix = system.solve(&g.matrix, choice, g.target.dim(), triple.module.dim())?;
    Ok(Morphism { source: triple.module.clone(), target: g.target.clone(), matrix })
}

fn lift_system<S: Scalar>(triple: &TiltingTriple<S>, m: &Module<S>) -> Result<LiftSystem<S>> {
    let candidates = HomSpace::compute(m, &triple.module)?.matrices();
    let images = candidates.iter().map(|h| &triple.pi.matrix * h).collect();
    Ok(LiftSystem::new(candidates, images, (triple.pi.target.dim(), m.dim())))
}

fn extend_system<S: Scalar>(triple: &TiltingTriple<S>, n: &Module<S>) -> Result<LiftSystem<S>> {
    let candidates = HomSpace::compute(&triple.module, n)?.matrices();
    let images = candidates.iter().map(|h| h * &triple.i.matrix).collect();
    Ok(LiftSystem::new(candidates, images, (n.dim(), triple.i.source.dim())))
}

/// The part of a standard basis attached to one label `λ`.
#[derive(Clone, Debug)]
pub struct Fiber<S> {
    pub label: usize,
    /// Basis of `Hom(Δ(λ), N)`, indexed by `I^λ`.
    pub g: Vec<Morphism<S>>,
    /// `ĝ_i: T(λ) → N` with `ĝ_i ∘ i^λ = g_i`.
    pub g_hat: Vec<Morphism<S>>,
    /// Basis of `Hom(M, ∇(λ))`, indexed by `J^λ`.
    pub f: Vec<Morphism<S>>,
    /// `f̂_j: M → T(λ)` with `π^λ ∘ f̂_j = f_j`.
    pub f_hat: Vec<Morphism<S>>,
}

impl<S: Scalar> Fiber<S> {
    pub fn i_len(&self) -> usize {
        self.g.len()
    }

    pub fn j_len(&self) -> usize {
        self.f.len()
    }

    /// `c_ij = ĝ_i ∘ f̂_j`.
    pub fn c(&self, i: usize, j: usize) -> Matrix<S> {
        &self.g_hat[i].matrix * &self.f_hat[j].matrix
    }
}

/// The basis `{ĝ_i^λ ∘ f̂_j^λ}` of `Hom(M, N)` for `M` standard-filtered and
/// `N` costandard-filtered, with fibers ordered along the linear extension.
#[derive(Clone, Debug)]
pub struct HomBasis<S> {
    pub source: Module<S>,
    pub target: Module<S>,
    pub fibers: Vec<Fiber<S>>,
    pub seed: u64,
    /// Which fiber and `(i, j)` each basis element comes from.
    pub index: Vec<(usize, usize, usize)>,
    elements: Vec<Matrix<S>>,
    coords: Coordinates<S>,
    hom: HomSpace<S>,
}

impl<S: Scalar> HomBasis<S> {
    pub fn build(
        registry: &Registry<S>,
        tiltings: &[TiltingTriple<S>],
        m: &Module<S>,
        n: &Module<S>,
        seed: u64,
    ) -> Result<Self> {
        let mut choice = LiftChoice::from_seed(seed);
        let mut fibers = Vec::new();
        for &lambda in registry.poset().linear_extension() {
            let g = HomSpace::compute(registry.standard(lambda), n)?.basis();
            let f = HomSpace::compute(m, registry.costandard(lambda))?.basis();
            if g.is_empty() || f.is_empty() {
                continue;
            }
            let triple = &tiltings[lambda];
            let failure =
                |e: Error| Error::BasisFailure { label: registry.label(lambda).to_string(), reason: e.to_string() };
            let ext = extend_system(triple, n)?;
            let g_hat = g
                .iter()
                .map(|gi| {
                    let matrix = ext.solve(&gi.matrix, &mut choice, n.dim(), triple.module.dim()).map_err(failure)?;
                    Ok(Morphism { source: triple.module.clone(), target: n.clone(), matrix })
                })
                .collect::<Result<Vec<_>>>()?;
            let lift = lift_system(triple, m)?;
            let f_hat = f
                .iter()
                .map(|fj| {
                    let matrix = lift.solve(&fj.matrix, &mut choice, triple.module.dim(), m.dim()).map_err(failure)?;
                    Ok(Morphism { source: m.clone(), target: triple.module.clone(), matrix })
                })
                .collect::<Result<Vec<_>>>()?;
            fibers.push(Fiber { label: lambda, g, g_hat, f, f_hat });
        }
        Self::from_fibers(registry, m, n, fibers, seed)
    }

    /// Assembles and checks a basis from explicitly given fibers.
    pub(crate) fn from_fibers(
        registry: &Registry<S>,
        m: &Module<S>,
        n: &Module<S>,
        fibers: Vec<Fiber<S>>,
        seed: u64,
    ) -> Result<Self> {
        let mut index = Vec::new();
        let mut elements = Vec::new();
        for (k, fib) in fibers.iter().enumerate() {
            for i in 0..fib.i_len() {
                for j in 0..fib.j_len() {
                    index.push((k, i, j));
                    elements.push(fib.c(i, j));
                }
            }
        }
        Self::assemble(registry, m, n, fibers, index, elements, seed)
    }

    fn assemble(
        registry: &Registry<S>,
        m: &Module<S>,
        n: &Module<S>,
        fibers: Vec<Fiber<S>>,
        index: Vec<(usize, usize, usize)>,
        elements: Vec<Matrix<S>>,
        seed: u64,
    ) -> Result<Self> {
        let hom = HomSpace::compute(m, n)?;
        let whole = |reason: String| Error::BasisFailure { label: "*".into(), reason };
        if elements.len() != hom.dim() {
            return Err(whole(format!("{} basis elements for a {}-dimensional Hom space", elements.len(), hom.dim())));
        }
        let coords = Coordinates::new(m.dim() * n.dim(), elements.iter().map(|e| e.data().to_vec()).collect())
            .map_err(|e| whole(e.to_string()))?;
        let basis = HomBasis { source: m.clone(), target: n.clone(), fibers, seed, index, elements, coords, hom };
        basis.check_fibers(registry)?;
        Ok(basis)
    }

    /// Every nonzero element of a fiber's span has `φ_λ ≠ 0`, checked on the
    /// fiber elements and on random combinations of them.
    fn check_fibers(&self, registry: &Registry<S>) -> Result<()> {
        let mut rng = random::seeded(0x5eed);
        for (k, fib) in self.fibers.iter().enumerate() {
            let members: Vec<&Matrix<S>> =
                self.index.iter().zip(&self.elements).filter(|((f, _, _), _)| *f == k).map(|(_, e)| e).collect();
            let mut samples: Vec<Matrix<S>> = members.iter().map(|&e| e.clone()).collect();
            for _ in 0..4 {
                let coeffs: Vec<S> = random::vector(&mut rng, members.len());
                let owned: Vec<Matrix<S>> = members.iter().map(|&e| e.clone()).collect();
                samples.push(combine_matrices(&coeffs, &owned, self.target.dim(), self.source.dim()));
            }
            for s in samples {
                if s.is_zero() {
                    continue;
                }
                let f = self.hom.morphism(s);
                if phi_weight(registry, &f, fib.label)? == 0 {
                    return Err(Error::BasisFailure {
                        label: registry.label(fib.label).to_string(),
                        reason: "nonzero element of the fiber span has vanishing top weight".into(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<S>] {
        &self.elements
    }

    pub fn hom_space(&self) -> &HomSpace<S> {
        &self.hom
    }

    /// Coordinates of a morphism in this basis.
    pub fn coordinates(&self, m: &Matrix<S>) -> Option<Vec<S>> {
        self.coords.coordinates(m.data())
    }

    /// Fiber sizes `|I^λ| · |J^λ|` along the linear extension.
    pub fn fiber_sizes(&self) -> Vec<(usize, usize)> {
        self.fibers.iter().map(|f| (f.label, f.i_len() * f.j_len())).collect()
    }

    /// `Hom(M, N)^{≤λ}`: the span of the fibers at labels `μ ≤ λ`, as a
    /// subspace of flattened `dim N × dim M` matrices.
    pub fn filtration(&self, registry: &Registry<S>, lambda: usize) -> Subspace<S> {
        let poset = registry.poset();
        let vecs = self
            .index
            .iter()
            .zip(&self.elements)
            .filter(|((k, _, _), _)| poset.leq(self.fibers[*k].label, lambda))
            .map(|(_, e)| e.data().to_vec());
        Subspace::spanned_by(self.source.dim() * self.target.dim(), vecs)
    }
}

/// `Hom(M, N)^{≤λ}` computed directly from its definition: morphisms `f`
/// with `φ_μ(f) = 0` for every `μ ≰ λ`. Since `φ_μ(f)` is the rank of
/// `e_μ · f`, this is the solution space of `e_μ · f = 0` for those `μ`.
pub fn filtration_oracle<S: Scalar>(
    registry: &Registry<S>,
    m: &Module<S>,
    n: &Module<S>,
    lambda: usize,
) -> Result<Subspace<S>> {
    let hom = HomSpace::compute(m, n)?;
    let mats = hom.matrices();
    let len = m.dim() * n.dim();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for mu in 0..registry.len() {
        if registry.poset().leq(mu, lambda) {
            continue;
        }
        let e = n.act(&registry.weight(mu).idempotent);
        let images: Vec<Matrix<S>> = mats.iter().map(|h| &e * h).collect();
        for entry in 0..len {
            rows.push(images.iter().map(|im| im.data()[entry].clone()).collect());
        }
    }
    let kernel = if rows.is_empty() {
        Subspace::full(mats.len())
    } else {
        Subspace::kernel_of(&Matrix::from_rows(mats.len(), rows))
    };
    let vecs = kernel.vectors().into_iter().map(|c| combine_matrices(&c, &mats, n.dim(), m.dim()).into_data());
    Ok(Subspace::spanned_by(len, vecs))
}

/// A standard basis `{c_ij^λ}` of `End(T)`.
///
/// With `reversed`, the datum describes the opposite algebra: products are
/// composed the other way round and the roles of `I^λ` and `J^λ` swap.
#[derive(Clone, Debug)]
pub struct StandardBasisDatum<S> {
    pub basis: HomBasis<S>,
    pub reversed: bool,
    /// Explicit element matrices; equal to the `c_ij` unless perturbed.
    elements: Vec<Vec<Vec<Matrix<S>>>>,
}

/// Coefficients `φ ∘ g_i = Σ_k r_k(φ, i) g_k` (`left`, column `i`) and
/// `f_j ∘ φ = Σ_l r_l(j, φ) f_l` (`right`, column `j`) for every fiber, in
/// the datum's own convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCoefficients<S> {
    pub left: Vec<Matrix<S>>,
    pub right: Vec<Matrix<S>>,
}

/// First failure found by [`StandardBasisDatum::verify_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub side: &'static str,
    pub trial: usize,
    pub fiber: usize,
    pub i: usize,
    pub j: usize,
}

impl<S: Scalar> StandardBasisDatum<S> {
    pub fn build(registry: &Registry<S>, tiltings: &[TiltingTriple<S>], t: &Module<S>, seed: u64) -> Result<Self> {
        let basis = HomBasis::build(registry, tiltings, t, t, seed)?;
        Ok(Self::from_basis(basis, false))
    }

    pub(crate) fn from_basis(basis: HomBasis<S>, reversed: bool) -> Self {
        let elements = basis
            .fibers
            .iter()
            .map(|f| {
                let (a, b) = if reversed { (f.j_len(), f.i_len()) } else { (f.i_len(), f.j_len()) };
                (0..a).map(|i| (0..b).map(|j| if reversed { f.c(j, i) } else { f.c(i, j) }).collect()).collect()
            })
            .collect();
        StandardBasisDatum { basis, reversed, elements }
    }

    /// The datum of the opposite algebra `End(T)^op`.
    pub fn opposite(&self) -> Self {
        let mut op = Self::from_basis(self.basis.clone(), !self.reversed);
        for (k, fiber) in self.elements.iter().enumerate() {
            for (i, row) in fiber.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    op.elements[k][j][i] = e.clone();
                }
            }
        }
        op
    }

    pub fn module(&self) -> &Module<S> {
        &self.basis.source
    }

    pub fn fibers(&self) -> &[Fiber<S>] {
        &self.basis.fibers
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn seed(&self) -> u64 {
        self.basis.seed
    }

    pub fn label(&self, fiber: usize) -> usize {
        self.basis.fibers[fiber].label
    }

    pub fn i_len(&self, fiber: usize) -> usize {
        self.elements[fiber].len()
    }

    pub fn j_len(&self, fiber: usize) -> usize {
        self.elements[fiber].first().map_or(0, Vec::len)
    }

    pub fn element(&self, fiber: usize, i: usize, j: usize) -> &Matrix<S> {
        &self.elements[fiber][i][j]
    }

    /// All elements, fiber by fiber, row-major within a fiber.
    pub fn elements(&self) -> Vec<(usize, usize, usize, &Matrix<S>)> {
        let mut out = Vec::new();
        for (k, fiber) in self.elements.iter().enumerate() {
            for (i, row) in fiber.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    out.push((k, i, j, e));
                }
            }
        }
        out
    }

    /// Replaces one element by `c_ij + delta`.
    pub fn perturbed(&self, fiber: usize, i: usize, j: usize, delta: &Matrix<S>) -> Self {
        let mut out = self.clone();
        let e = &out.elements[fiber][i][j] + delta;
        out.elements[fiber][i][j] = e;
        out
    }

    /// The product in the datum's algebra.
    pub fn mul(&self, a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
        if self.reversed {
            b * a
        } else {
            a * b
        }
    }

    /// Coordinates of an endomorphism with respect to the elements.
    pub fn coordinates(&self, m: &Matrix<S>) -> Option<Vec<S>> {
        if self.is_pristine() {
            return self.basis.coordinates(m);
        }
        let vecs = self.elements().into_iter().map(|(_, _, _, e)| e.data().to_vec()).collect();
        Coordinates::new(m.rows() * m.cols(), vecs).ok()?.coordinates(m.data())
    }

    fn is_pristine(&self) -> bool {
        self.elements().into_iter().all(|(k, i, j, e)| {
            let f = &self.basis.fibers[k];
            *e == if self.reversed { f.c(j, i) } else { f.c(i, j) }
        })
    }

    pub fn structure_coefficients(&self, phi: &Matrix<S>) -> Result<StructureCoefficients<S>> {
        let t = self.module();
        let mut from_g = Vec::new();
        let mut from_f = Vec::new();
        for fib in self.fibers() {
            let hg = HomSpace::compute(&fib.g[0].source, t)?;
            let g_coords: Vec<Vec<S>> = fib.g.iter().map(|g| hg.coordinates(&g.matrix).unwrap()).collect();
            let g_basis = Coordinates::new(g_coords[0].len(), g_coords)?;
            let cols: Vec<Vec<S>> = fib
                .g
                .iter()
                .map(|g| {
                    let img = hg.coordinates(&(phi * &g.matrix)).ok_or_else(not_endo)?;
                    g_basis.coordinates(&img).ok_or_else(not_endo)
                })
                .collect::<Result<_>>()?;
            from_g.push(Matrix::from_columns(fib.i_len(), &cols));
            let hf = HomSpace::compute(t, &fib.f[0].target)?;
            let f_coords: Vec<Vec<S>> = fib.f.iter().map(|f| hf.coordinates(&f.matrix).unwrap()).collect();
            let f_basis = Coordinates::new(f_coords[0].len(), f_coords)?;
            let cols: Vec<Vec<S>> = fib
                .f
                .iter()
                .map(|f| {
                    let img = hf.coordinates(&(&f.matrix * phi)).ok_or_else(not_endo)?;
                    f_basis.coordinates(&img).ok_or_else(not_endo)
                })
                .collect::<Result<_>>()?;
            from_f.push(Matrix::from_columns(fib.j_len(), &cols));
        }
        Ok(if self.reversed {
            StructureCoefficients { left: from_f, right: from_g }
        } else {
            StructureCoefficients { left: from_g, right: from_f }
        })
    }

    /// Whether `x` lies in the span of the fibers strictly below the label
    /// of `fiber`.
    pub fn in_lower_span(&self, registry: &Registry<S>, fiber: usize, x: &Matrix<S>) -> Result<bool> {
        let coords =
            self.coordinates(x).ok_or_else(|| Error::InvalidMorphism("element is not an endomorphism of T".into()))?;
        let lambda = self.label(fiber);
        Ok(self
            .elements()
            .into_iter()
            .zip(coords)
            .all(|((k, _, _, _), c)| c.is_zero() || registry.poset().lt(self.label(k), lambda)))
    }

    /// Checks both congruences of a standard datum for every element of the
    /// canonical basis of `End(T)` and `trials` random endomorphisms:
    /// `φ c_ij ≡ Σ_k r_k(φ, i) c_kj` and `c_ij φ ≡ Σ_l r_l(j, φ) c_il`
    /// modulo the span of lower fibers, with the same coefficients for all
    /// `j` (resp. `i`).
    pub fn verify_axioms(&self, registry: &Registry<S>, trials: usize, seed: u64) -> Result<Option<AxiomWitness>> {
        let end = self.basis.hom_space();
        let mut rng = random::seeded(seed);
        let mut phis = end.matrices();
        for _ in 0..trials {
            phis.push(end.random_element(&mut rng).matrix);
        }
        let (rows, cols) = (self.module().dim(), self.module().dim());
        for (trial, phi) in phis.iter().enumerate() {
            let sc = self.structure_coefficients(phi)?;
            for k in 0..self.elements.len() {
                let (il, jl) = (self.i_len(k), self.j_len(k));
                for i in 0..il {
                    for j in 0..jl {
                        let c = self.element(k, i, j);
                        let column: Vec<Matrix<S>> = (0..il).map(|a| self.element(k, a, j).clone()).collect();
                        let coeffs: Vec<S> = (0..il).map(|a| sc.left[k].get(a, i).clone()).collect();
                        let residual = &self.mul(phi, c) - &combine_matrices(&coeffs, &column, rows, cols);
                        if !self.in_lower_span(registry, k, &residual)? {
                            return Ok(Some(AxiomWitness { side: "left", trial, fiber: k, i, j }));
                        }
                        let row: Vec<Matrix<S>> = (0..jl).map(|b| self.element(k, i, b).clone()).collect();
                        let coeffs: Vec<S> = (0..jl).map(|b| sc.right[k].get(b, j).clone()).collect();
                        let residual = &self.mul(c, phi) - &combine_matrices(&coeffs, &row, rows, cols);
                        if !self.in_lower_span(registry, k, &residual)? {
                            return Ok(Some(AxiomWitness { side: "right", trial, fiber: k, i, j }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Like [`verify_axioms`](Self::verify_axioms), failing with
    /// `AxiomViolation` on the first counterexample.
    pub fn check_axioms(&self, registry: &Registry<S>, trials: usize, seed: u64) -> Result<()> {
        match self.verify_axioms(registry, trials, seed)? {
            None => Ok(()),
            Some(w) => Err(Error::AxiomViolation {
                axiom: format!("standard datum ({} congruence)", w.side),
                lambda: registry.label(self.label(w.fiber)).to_string(),
                mu: String::new(),
                detail: format!("endomorphism #{} fails at (i, j) = ({}, {})", w.trial, w.i, w.j),
            }),
        }
    }
}

fn not_endo() -> Error {
    Error::InvalidMorphism("expected an endomorphism of T".into())
}

/// Coordinates of the elements of `other` in the basis `base`, one column
/// per element of `other`.
pub fn change_of_basis<S: Scalar>(base: &StandardBasisDatum<S>, other: &StandardBasisDatum<S>) -> Result<Matrix<S>> {
    let cols: Vec<Vec<S>> = other
        .elements()
        .into_iter()
        .map(|(_, _, _, e)| base.coordinates(e).ok_or_else(|| Error::InvalidInput("data for different modules".into())))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(base.dim(), &cols))
}

/// Whether `other = base + (corrections from strictly lower fibers)`, i.e.
/// the change of basis ordered along the linear extension is unitriangular.
pub fn is_unitriangular<S: Scalar>(
    registry: &Registry<S>,
    base: &StandardBasisDatum<S>,
    other: &StandardBasisDatum<S>,
) -> Result<bool> {
    let layout =
        |d: &StandardBasisDatum<S>| d.elements().into_iter().map(|(k, i, j, _)| (d.label(k), i, j)).collect::<Vec<_>>();
    if layout(base) != layout(other) {
        return Ok(false);
    }
    let m = change_of_basis(base, other)?;
    let labels: Vec<usize> = base.elements().into_iter().map(|(k, _, _, _)| base.label(k)).collect();
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            let x = m.get(r, c);
            let ok = if r == c { x.is_one() } else { x.is_zero() || registry.poset().lt(labels[r], labels[c]) };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::highest_weight::WeightPoset;
    use crate::scalar::Rational;
    use crate::tilting::{all_tiltings, characteristic_tilting};

    fn setup(name: &str) -> (Registry<Rational>, Vec<TiltingTriple<Rational>>) {
        let e = catalog::entry::<Rational>(name).unwrap();
        let poset = WeightPoset::new(e.labels.clone(), &e.covers).unwrap();
        let r = Registry::new(e.algebra, poset, Some(e.idempotents)).unwrap();
        let ts = all_tiltings(&r, 1000).unwrap();
        (r, ts)
    }

    #[test]
    fn phi_weight_basics() {
        let (r, ts) = setup("a2path");
        for l in 0..r.len() {
            let nabla = r.costandard(l);
            assert_eq!(phi_weight(&r, &nabla.identity(), l).unwrap(), 1);
            for mu in 0..r.len() {
                assert_eq!(phi_weight(&r, &nabla.zero_to(nabla), mu).unwrap(), 0);
            }
            let c = &ts[l].c;
            assert_eq!(phi_weight(&r, c, l).unwrap(), 1);
        }
    }

    #[test]
    fn lifts_satisfy_their_equations() {
        let (r, ts) = setup("a2path");
        let t = characteristic_tilting(&ts).unwrap();
        for (l, triple) in ts.iter().enumerate() {
            for seed in [0, 7] {
                let mut choice = LiftChoice::from_seed(seed);
                for f in HomSpace::compute(&t, r.costandard(l)).unwrap().basis() {
                    let fh = lift_through_tilting(triple, &f, &mut choice).unwrap();
                    assert!(fh.intertwines());
                    assert_eq!(triple.pi.compose(&fh).matrix, f.matrix);
                }
                for g in HomSpace::compute(r.standard(l), &t).unwrap().basis() {
                    let gh = extend_through_tilting(triple, &g, &mut choice).unwrap();
                    assert!(gh.intertwines());
                    assert_eq!(gh.compose(&triple.i).matrix, g.matrix);
                }
            }
            let zero = triple.module.zero_to(r.costandard(l));
            let lifted = lift_through_tilting(triple, &zero, &mut LiftChoice::canonical()).unwrap();
            assert!(lifted.is_zero());
            // the identity is one of the lifts of π
            assert_eq!(triple.pi.compose(&triple.module.identity()).matrix, triple.pi.matrix);
        }
    }

    #[test]
    fn a2_characteristic_tilting_basis() {
        let (r, ts) = setup("a2path");
        let t = characteristic_tilting(&ts).unwrap();
        let d = StandardBasisDatum::build(&r, &ts, &t, 0).unwrap();
        assert_eq!(d.dim(), 3);
        let sizes: Vec<usize> = d.basis.fiber_sizes().iter().map(|&(_, s)| s).collect();
        assert_eq!(sizes, vec![2, 1]);
        let low = r.index("2").unwrap();
        assert_eq!(d.basis.filtration(&r, low).dim(), 2);
        assert!(d.verify_axioms(&r, 20, 1).unwrap().is_none());
    }

    #[test]
    fn identity_and_zero_structure_coefficients() {
        let (r, ts) = setup("auslander-dualnumbers");
        let t = characteristic_tilting(&ts).unwrap();
        let d = StandardBasisDatum::build(&r, &ts, &t, 0).unwrap();
        let id = d.structure_coefficients(&Matrix::identity(t.dim())).unwrap();
        for (k, m) in id.left.iter().enumerate() {
            assert_eq!(*m, Matrix::identity(d.i_len(k)));
        }
        let zero = d.structure_coefficients(&Matrix::zeros(t.dim(), t.dim())).unwrap();
        assert!(zero.left.iter().chain(&zero.right).all(Matrix::is_zero));
    }

    #[test]
    fn perturbation_is_detected() {
        let (r, ts) = setup("a2path");
        let t = characteristic_tilting(&ts).unwrap();
        let d = StandardBasisDatum::build(&r, &ts, &t, 0).unwrap();
        // add the top fiber's element to a bottom fiber element
        let top = d.fibers().len() - 1;
        let delta = d.element(top, 0, 0).clone();
        let bad = d.perturbed(0, 0, 0, &delta);
        let w = bad.verify_axioms(&r, 5, 0).unwrap();
        assert!(w.is_some());
        assert!(matches!(bad.check_axioms(&r, 5, 0), Err(Error::AxiomViolation { .. })));
    }

    #[test]
    fn seeds_are_unitriangular_and_opposite_passes() {
        let (r, ts) = setup("auslander-dualnumbers");
        let t = characteristic_tilting(&ts).unwrap();
        let base = StandardBasisDatum::build(&r, &ts, &t, 0).unwrap();
        for seed in 1..4 {
            let other = StandardBasisDatum::build(&r, &ts, &t, seed).unwrap();
            assert!(other.verify_axioms(&r, 5, seed).unwrap().is_none());
            assert!(is_unitriangular(&r, &base, &other).unwrap());
        }
        let op = base.opposite();
        assert!(op.verify_axioms(&r, 5, 3).unwrap().is_none());
        for k in 0..op.fibers().len() {
            assert_eq!(op.i_len(k), base.j_len(k));
        }
        let back = op.opposite();
        for ((_, _, _, a), (_, _, _, b)) in back.elements().into_iter().zip(base.elements()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn filtration_matches_oracle() {
        for name in ["a2path", "auslander-dualnumbers", "ut3"] {
            let (r, ts) = setup(name);
            let t = characteristic_tilting(&ts).unwrap();
            let b = HomBasis::build(&r, &ts, &t, &t, 0).unwrap();
            for l in 0..r.len() {
                assert_eq!(b.filtration(&r, l), filtration_oracle(&r, &t, &t, l).unwrap(), "{name}");
                let bd = HomBasis::build(&r, &ts, r.standard(l), &t, 0).unwrap();
                let full = Subspace::spanned_by(
                    t.dim() * r.standard(l).dim(),
                    bd.elements().iter().map(|e| e.data().to_vec()),
                );
                assert_eq!(bd.filtration(&r, l), full);
            }
        }
    }
}
