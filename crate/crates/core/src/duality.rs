//! Module dualities `D = (−)* twisted by an anti-involution τ`, fixed-point
//! isomorphisms, the induced involution of `End(T)` and cellular bases.

use crate::algebra::{Algebra, HomSpace, Module, Morphism};
use crate::basis::{extend_through_tilting, Fiber, HomBasis, LiftChoice, StandardBasisDatum};
use crate::cells::CellData;
use crate::error::{Error, Result};
use crate::highest_weight::Registry;
use crate::linalg::Matrix;
use crate::random;
use crate::scalar::Scalar;
use crate::tilting::TiltingTriple;

/// An anti-involution of an algebra, acting on algebra coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiInvolution<S> {
    pub matrix: Matrix<S>,
}

impl<S: Scalar> AntiInvolution<S> {
    pub fn new(algebra: &Algebra<S>, matrix: Matrix<S>) -> Result<Self> {
        algebra.is_anti_involution(&matrix)?;
        Ok(AntiInvolution { matrix })
    }

    pub fn apply(&self, a: &[S]) -> Vec<S> {
        self.matrix.mul_vec(a)
    }
}

/// `D(M)`: the dual space, with `a` acting as the transpose of `τ(a)`.
pub fn dualize<S: Scalar>(m: &Module<S>, tau: &AntiInvolution<S>) -> Module<S> {
    let action = (0..m.algebra().dim()).map(|i| m.act(&tau.matrix.column(i)).transpose()).collect();
    Module::new_unchecked(m.algebra().clone(), m.dim(), action)
}

/// `D(f): D(N) → D(M)` for `f: M → N`, given the dual modules.
pub fn dualize_morphism<S: Scalar>(f: &Morphism<S>, dual_source: &Module<S>, dual_target: &Module<S>) -> Morphism<S> {
    Morphism { source: dual_target.clone(), target: dual_source.clone(), matrix: f.matrix.transpose() }
}

/// `ξ_M: M → D(D(M))`, the identity in dual-of-dual coordinates.
pub fn xi<S: Scalar>(m: &Module<S>, double_dual: &Module<S>) -> Morphism<S> {
    Morphism { source: m.clone(), target: double_dual.clone(), matrix: Matrix::identity(m.dim()) }
}

/// Isomorphisms witnessing that `D` is a standard duality.
#[derive(Clone, Debug)]
pub struct DualityCheck<S> {
    /// `D(∇(λ)) → Δ(λ)` for every label.
    pub exchange: Vec<Morphism<S>>,
    /// `D(T(λ)) → T(λ)` for every label.
    pub tilting: Vec<Morphism<S>>,
}

/// Checks `D(∇(λ)) ≅ Δ(λ)` for every label, then `D(T(λ)) ≅ T(λ)`.
pub fn check_standard_duality<S: Scalar>(
    registry: &Registry<S>,
    tiltings: &[TiltingTriple<S>],
    tau: &AntiInvolution<S>,
) -> Result<DualityCheck<S>> {
    let fail = |lambda: usize, check: &str| Error::NotStandardDuality {
        label: registry.label(lambda).to_string(),
        check: check.to_string(),
    };
    let mut exchange = Vec::new();
    for lambda in 0..registry.len() {
        let d = dualize(registry.costandard(lambda), tau);
        let iso = d.isomorphism_to(registry.standard(lambda))?.ok_or_else(|| fail(lambda, "D(∇(λ)) ≇ Δ(λ)"))?;
        exchange.push(iso);
    }
    let mut tilting = Vec::new();
    for (lambda, triple) in tiltings.iter().enumerate() {
        let d = dualize(&triple.module, tau);
        let iso = d.isomorphism_to(&triple.module)?.ok_or_else(|| fail(lambda, "D(T(λ)) ≇ T(λ)"))?;
        tilting.push(iso);
    }
    Ok(DualityCheck { exchange, tilting })
}

/// A fixed point `(X, Φ)`: `Φ: D(X) → X` with `Φ ∘ D(Φ⁻¹) ∘ ξ = id`.
#[derive(Clone, Debug)]
pub struct FixedPoint<S> {
    pub module: Module<S>,
    pub dual: Module<S>,
    /// The symmetric isomorphism `Ψ′: X → D(X)`.
    pub psi: Morphism<S>,
    /// `Φ = Ψ′⁻¹`.
    pub phi: Morphism<S>,
}

impl<S: Scalar> FixedPoint<S> {
    /// `a = Φ ∘ D(Φ⁻¹) ∘ ξ`, the identity exactly when this is a fixed point.
    pub fn defect(&self) -> Matrix<S> {
        let inv = self.phi.matrix.inverse().expect("Φ is invertible");
        &self.phi.matrix * &inv.transpose()
    }

    pub fn is_fixed(&self) -> bool {
        self.defect() == Matrix::identity(self.module.dim())
    }
}

fn require_odd_characteristic<S: Scalar>() -> Result<()> {
    if S::characteristic() == 2 {
        return Err(Error::NotComputable("symmetrization needs characteristic other than 2".into()));
    }
    Ok(())
}

/// Symmetrizes the form `⟨x, y⟩ = Ψ(x)(y)` of an isomorphism `Ψ: X → D(X)`.
///
/// Returns `Ψ′ = Ψ + D(Ψ) ∘ ξ`. Fails when `Ψ⁻¹ ∘ Ψ′` is nilpotent or `Ψ′`
/// is singular; the message says whether the skew part `Ψ − D(Ψ) ∘ ξ` is
/// invertible instead.
pub fn symmetrize<S: Scalar>(psi: &Morphism<S>) -> Result<Morphism<S>> {
    require_odd_characteristic::<S>()?;
    let inv = psi.matrix.inverse().ok_or_else(|| Error::InvalidMorphism("Ψ is not invertible".into()))?;
    let sym = &psi.matrix + &psi.matrix.transpose();
    let endo = &inv * &sym;
    if endo.is_nilpotent() || !sym.is_invertible() {
        let skew = &psi.matrix - &psi.matrix.transpose();
        let note =
            if skew.is_invertible() { "the skew part is non-degenerate" } else { "the skew part is degenerate too" };
        return Err(Error::SymmetrizationDegenerate(format!(
            "Ψ⁻¹ ∘ Ψ′ has rank {} on a module of dimension {}; {note}",
            endo.rank(),
            endo.rows()
        )));
    }
    Ok(Morphism { source: psi.source.clone(), target: psi.target.clone(), matrix: sym })
}

/// A fixed-point isomorphism for a self-dual module.
///
/// Starts from an isomorphism `X → D(X)` and symmetrizes it; for a module
/// that is not indecomposable, further random isomorphisms are tried when
/// the symmetrization is singular.
pub fn fixed_point_iso<S: Scalar>(x: &Module<S>, tau: &AntiInvolution<S>, seed: u64) -> Result<FixedPoint<S>> {
    require_odd_characteristic::<S>()?;
    let dual = dualize(x, tau);
    let start = x
        .isomorphism_to(&dual)?
        .ok_or_else(|| Error::NotStandardDuality { label: String::new(), check: "D(X) ≇ X".into() })?;
    let mut last = match symmetrize(&start) {
        Ok(psi) => return Ok(finish(x, &dual, psi)),
        Err(e) => e,
    };
    let hom = HomSpace::compute(x, &dual)?;
    let mut rng = random::seeded(seed);
    for _ in 0..16 {
        let psi = hom.random_element(&mut rng);
        if !psi.is_isomorphism() {
            continue;
        }
        match symmetrize(&psi) {
            Ok(sym) => return Ok(finish(x, &dual, sym)),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn finish<S: Scalar>(x: &Module<S>, dual: &Module<S>, psi: Morphism<S>) -> FixedPoint<S> {
    let phi = Morphism { source: dual.clone(), target: x.clone(), matrix: psi.matrix.inverse().expect("checked") };
    FixedPoint { module: x.clone(), dual: dual.clone(), psi, phi }
}

/// The anti-automorphism `α` of `End(T)` with `α⁻¹(φ) = Φ ∘ D(φ) ∘ Φ⁻¹`.
#[derive(Clone, Debug)]
pub struct InducedInvolution<S> {
    pub end: HomSpace<S>,
    pub phi: Matrix<S>,
    phi_t: Matrix<S>,
    phi_t_inv: Matrix<S>,
}

impl<S: Scalar> InducedInvolution<S> {
    /// `α(ψ) = Φᵀ ψᵀ (Φᵀ)⁻¹`.
    pub fn apply(&self, psi: &Matrix<S>) -> Matrix<S> {
        &(&self.phi_t * &psi.transpose()) * &self.phi_t_inv
    }

    /// `α⁻¹(ψ) = Φ ψᵀ Φ⁻¹`.
    pub fn apply_inverse(&self, psi: &Matrix<S>) -> Matrix<S> {
        &(&self.phi * &psi.transpose()) * &self.phi_t_inv.transpose()
    }

    /// `α` as a matrix on the canonical coordinates of `End(T)`.
    pub fn matrix(&self) -> Matrix<S> {
        let cols: Vec<Vec<S>> = self
            .end
            .matrices()
            .iter()
            .map(|b| self.end.coordinates(&self.apply(b)).expect("α preserves End(T)"))
            .collect();
        Matrix::from_columns(self.end.dim(), &cols)
    }
}

/// Builds `α` from a fixed point of `T` and checks that it maps `End(T)`
/// to itself, reverses products (on the basis and on `trials` random
/// pairs) and squares to the identity.
pub fn induced_involution<S: Scalar>(fixed: &FixedPoint<S>, trials: usize, seed: u64) -> Result<InducedInvolution<S>> {
    let t = &fixed.module;
    let end = HomSpace::compute(t, t)?;
    let phi = fixed.phi.matrix.clone();
    let phi_t = phi.transpose();
    let phi_t_inv = phi_t.inverse().ok_or_else(|| Error::InvalidMorphism("Φ is not invertible".into()))?;
    let alpha = InducedInvolution { end, phi, phi_t, phi_t_inv };
    let basis = alpha.end.matrices();
    for b in &basis {
        if !alpha.end.contains(&alpha.apply(b)) {
            return Err(Error::NotInvolutive("α does not preserve End(T)".into()));
        }
    }
    let mut pairs: Vec<(Matrix<S>, Matrix<S>)> =
        basis.iter().flat_map(|x| basis.iter().map(move |y| (x.clone(), y.clone()))).collect();
    let mut rng = random::seeded(seed);
    for _ in 0..trials {
        pairs.push((alpha.end.random_element(&mut rng).matrix, alpha.end.random_element(&mut rng).matrix));
    }
    for (x, y) in &pairs {
        if alpha.apply(&(x * y)) != &alpha.apply(y) * &alpha.apply(x) {
            return Err(Error::NotInvolutive("α(φψ) ≠ α(ψ) α(φ)".into()));
        }
    }
    for b in &basis {
        if alpha.apply(&alpha.apply(b)) != *b {
            return Err(Error::NotInvolutive(format!("α² ≠ id; a = {:?}", fixed.defect())));
        }
    }
    Ok(alpha)
}

/// `τ` together with the exchange isomorphisms and fixed points for every
/// `T(λ)` and for the working module `T`.
#[derive(Clone, Debug)]
pub struct DualityDatum<S> {
    pub tau: AntiInvolution<S>,
    pub check: DualityCheck<S>,
    pub tilting_fixed: Vec<FixedPoint<S>>,
    pub working: FixedPoint<S>,
}

impl<S: Scalar> DualityDatum<S> {
    pub fn build(
        registry: &Registry<S>,
        tiltings: &[TiltingTriple<S>],
        t: &Module<S>,
        tau: AntiInvolution<S>,
        seed: u64,
    ) -> Result<Self> {
        let check = check_standard_duality(registry, tiltings, &tau)?;
        let label_err = |lambda: usize| {
            move |e: Error| match e {
                Error::SymmetrizationDegenerate(d) => {
                    Error::SymmetrizationDegenerate(format!("T({}): {d}", registry.label(lambda)))
                }
                other => other,
            }
        };
        let tilting_fixed = tiltings
            .iter()
            .enumerate()
            .map(|(l, tr)| fixed_point_iso(&tr.module, &tau, seed).map_err(label_err(l)))
            .collect::<Result<Vec<_>>>()?;
        let working = fixed_point_iso(t, &tau, seed)?;
        for fp in tilting_fixed.iter().chain([&working]) {
            if !fp.is_fixed() {
                return Err(Error::NotInvolutive(format!("fixed-point equation fails; a = {:?}", fp.defect())));
            }
        }
        Ok(DualityDatum { tau, check, tilting_fixed, working })
    }
}

/// A cellular basis of `End(T)` with its certificate data.
#[derive(Clone, Debug)]
pub struct CellularDatum<S> {
    pub datum: StandardBasisDatum<S>,
    pub duality: DualityDatum<S>,
    pub involution: InducedInvolution<S>,
    pub cells: CellData<S>,
}

/// `Φ̄: D(Δ(λ)) → ∇(λ)` with `Φ̄ ∘ D(i) = π ∘ Φ_{T(λ)}`.
fn induced_bar<S: Scalar>(
    registry: &Registry<S>,
    triple: &TiltingTriple<S>,
    fixed: &FixedPoint<S>,
    tau: &AntiInvolution<S>,
) -> Result<Morphism<S>> {
    let lambda = triple.label;
    let rhs = (&triple.pi.matrix * &fixed.phi.matrix).transpose();
    let sol = triple.i.matrix.solve(&rhs).map_err(|_| Error::CellularityFailure {
        label: registry.label(lambda).to_string(),
        i: 0,
        j: 0,
        detail: "π ∘ Φ does not factor through D(i)".into(),
    })?;
    let dual_delta = dualize(registry.standard(lambda), tau);
    let bar = Morphism::new(&dual_delta, registry.costandard(lambda), sol.particular.transpose())?;
    if !bar.is_isomorphism() {
        return Err(Error::CellularityFailure {
            label: registry.label(lambda).to_string(),
            i: 0,
            j: 0,
            detail: "induced map D(Δ(λ)) → ∇(λ) is not an isomorphism".into(),
        });
    }
    Ok(bar)
}

/// Builds the standard datum with `f̂_i = Φ_{T(λ)} ∘ D(ĝ_i) ∘ Φ_T⁻¹` and
/// `f_i = Φ̄ ∘ D(g_i) ∘ Φ_T⁻¹`, then certifies cellularity: the standard
/// axioms, `I^λ = J^λ`, `α(c_ij) = c_ji` and symmetric Gram matrices.
pub fn build_cellular_basis<S: Scalar>(
    registry: &Registry<S>,
    tiltings: &[TiltingTriple<S>],
    t: &Module<S>,
    tau: AntiInvolution<S>,
    seed: u64,
    trials: usize,
) -> Result<CellularDatum<S>> {
    let duality = DualityDatum::build(registry, tiltings, t, tau, seed)?;
    let involution = induced_involution(&duality.working, trials, seed)?;
    let phi_t_inv = duality.working.phi.matrix.inverse().expect("Φ_T is invertible");
    let mut choice = LiftChoice::from_seed(seed);
    let mut fibers = Vec::new();
    for &lambda in registry.poset().linear_extension() {
        let g = HomSpace::compute(registry.standard(lambda), t)?.basis();
        if g.is_empty() {
            continue;
        }
        let triple = &tiltings[lambda];
        let fixed = &duality.tilting_fixed[lambda];
        let bar = induced_bar(registry, triple, fixed, &duality.tau)?;
        let g_hat = g.iter().map(|gi| extend_through_tilting(triple, gi, &mut choice)).collect::<Result<Vec<_>>>()?;
        let f_hat: Vec<Morphism<S>> = g_hat
            .iter()
            .map(|gh| {
                let matrix = &(&fixed.phi.matrix * &gh.matrix.transpose()) * &phi_t_inv;
                Morphism { source: t.clone(), target: triple.module.clone(), matrix }
            })
            .collect();
        let f: Vec<Morphism<S>> = g
            .iter()
            .map(|gi| {
                let matrix = &(&bar.matrix * &gi.matrix.transpose()) * &phi_t_inv;
                Morphism { source: t.clone(), target: registry.costandard(lambda).clone(), matrix }
            })
            .collect();
        for (k, (fh, fk)) in f_hat.iter().zip(&f).enumerate() {
            if !fh.intertwines() || &triple.pi.matrix * &fh.matrix != fk.matrix {
                return Err(Error::CellularityFailure {
                    label: registry.label(lambda).to_string(),
                    i: k,
                    j: k,
                    detail: "dual lift is not a lift of the dual morphism".into(),
                });
            }
        }
        fibers.push(Fiber { label: lambda, g, g_hat, f, f_hat });
    }
    let basis = HomBasis::from_fibers(registry, t, t, fibers, seed)?;
    let datum = StandardBasisDatum::from_basis(basis, false);
    datum.check_axioms(registry, trials, seed)?;
    for k in 0..datum.fibers().len() {
        let label = registry.label(datum.label(k)).to_string();
        if datum.i_len(k) != datum.j_len(k) {
            return Err(Error::CellularityFailure {
                label,
                i: datum.i_len(k),
                j: datum.j_len(k),
                detail: "index sets I and J differ in size".into(),
            });
        }
        for i in 0..datum.i_len(k) {
            for j in 0..datum.j_len(k) {
                if involution.apply(datum.element(k, i, j)) != *datum.element(k, j, i) {
                    return Err(Error::CellularityFailure { label, i, j, detail: "α(c_ij) ≠ c_ji".into() });
                }
            }
        }
    }
    let cells = CellData::build(tiltings, datum.clone())?;
    for c in &cells.cells {
        if c.gram != c.gram.transpose() {
            return Err(Error::CellularityFailure {
                label: registry.label(c.label).to_string(),
                i: 0,
                j: 0,
                detail: "Gram matrix is not symmetric".into(),
            });
        }
    }
    Ok(CellularDatum { datum, duality, involution, cells })
}
