//! Indecomposable tilting modules by universal extensions.

use crate::algebra::{HomSpace, Module, Morphism};
use crate::error::{Error, Result};
use crate::highest_weight::{ext1, ext1_dim, pushout, Registry};
use crate::linalg::Matrix;
use crate::random::{self, Rng};
use crate::scalar::Scalar;

/// `T(λ)` with `i: Δ(λ) ↪ T(λ)`, `π: T(λ) ↠ ∇(λ)` and `c = π ∘ i`.
///
/// `c` is normalized so that its first nonzero entry (row-major) is 1.
#[derive(Clone, Debug)]
pub struct TiltingTriple<S> {
    pub label: usize,
    pub module: Module<S>,
    pub i: Morphism<S>,
    pub pi: Morphism<S>,
    pub c: Morphism<S>,
}

/// `0 → X → X' → Δ(μ)^d → 0` realizing a basis of `Ext¹(Δ(μ), X)`.
pub fn universal_extension<S: Scalar>(
    registry: &Registry<S>,
    x: &Module<S>,
    mu: usize,
) -> Result<(Module<S>, Morphism<S>)> {
    universal_extension_with(registry, x, mu, None)
}

/// As [`universal_extension`]; with an `rng`, the extension classes are
/// replaced by a random basis of their span.
pub fn universal_extension_with<S: Scalar>(
    registry: &Registry<S>,
    x: &Module<S>,
    mu: usize,
    rng: Option<&mut Rng>,
) -> Result<(Module<S>, Morphism<S>)> {
    let ext = ext1(registry.standard(mu), x)?;
    if ext.is_zero() {
        return Err(Error::NothingToDo);
    }
    let d = ext.dim();
    let classes = match rng {
        None => ext.classes.clone(),
        Some(rng) => {
            let g = loop {
                let g = Matrix::<S>::from_flat(d, d, random::vector(rng, d * d));
                if g.is_invertible() {
                    break g;
                }
            };
            let (rows, cols) = ext.classes[0].shape();
            (0..d)
                .map(|k| {
                    let coeffs: Vec<S> = (0..d).map(|j| g.get(j, k).clone()).collect();
                    crate::linalg::combine_matrices(&coeffs, &ext.classes, rows, cols)
                })
                .collect()
        }
    };
    let glued = pushout(&ext.presentation, x, &classes);
    let remaining = ext1_dim(registry.standard(mu), &glued.middle)?;
    if remaining != 0 {
        return Err(Error::NotComputable(format!(
            "Ext¹(Δ({}), X') has dimension {remaining} after a universal extension",
            registry.label(mu)
        )));
    }
    Ok((glued.middle, glued.inclusion))
}

/// Default bound on intermediate module dimensions: `10 · (dim A)²`.
pub fn default_dim_bound<S: Scalar>(registry: &Registry<S>) -> usize {
    10 * registry.algebra().dim().pow(2)
}

/// Builds `T(λ)` starting from `Δ(λ)`.
///
/// Universal extensions by `Δ(μ)` are applied for `μ` descending along the
/// linear extension until a full pass changes nothing; `T(λ)` is the
/// indecomposable summand of the result with `[T : L(λ)] ≠ 0`.
pub fn indecomposable_tilting<S: Scalar>(
    registry: &Registry<S>,
    lambda: usize,
    dim_bound: usize,
) -> Result<TiltingTriple<S>> {
    indecomposable_tilting_with(registry, lambda, dim_bound, None)
}

/// As [`indecomposable_tilting`], with randomized extension classes.
pub fn indecomposable_tilting_with<S: Scalar>(
    registry: &Registry<S>,
    lambda: usize,
    dim_bound: usize,
    mut rng: Option<&mut Rng>,
) -> Result<TiltingTriple<S>> {
    let delta = registry.standard(lambda).clone();
    let mut x = delta.clone();
    let mut into_x = delta.identity();
    let order: Vec<usize> = registry.poset().linear_extension().iter().rev().copied().collect();
    loop {
        let mut changed = false;
        for &mu in &order {
            match universal_extension_with(registry, &x, mu, rng.as_deref_mut()) {
                Ok((next, inc)) => {
                    into_x = inc.compose(&into_x);
                    x = next;
                    changed = true;
                    if x.dim() > dim_bound {
                        return Err(Error::ConstructionDiverged { dim: x.dim(), bound: dim_bound });
                    }
                }
                Err(Error::NothingToDo) => {}
                Err(e) => return Err(e),
            }
        }
        if !changed {
            break;
        }
    }
    let e = &registry.weight(lambda).idempotent;
    let summand = x.krull_schmidt()?.summands.into_iter().find(|s| s.module.act(e).rank() > 0).ok_or_else(|| {
        Error::NotComputable(format!("no summand of the extension contains L({})", registry.label(lambda)))
    })?;
    let t = summand.module;
    let i = Morphism { source: delta.clone(), target: t.clone(), matrix: &summand.projection * &into_x.matrix };
    triple_from(registry, lambda, t, i)
}

/// Completes `(T, i)` to a normalized triple.
fn triple_from<S: Scalar>(
    registry: &Registry<S>,
    lambda: usize,
    t: Module<S>,
    i: Morphism<S>,
) -> Result<TiltingTriple<S>> {
    let name = registry.label(lambda).to_string();
    let nabla = registry.costandard(lambda);
    let hom = HomSpace::compute(&t, nabla)?;
    if hom.dim() != 1 || !i.is_injective() {
        return Err(Error::NotComputable(format!(
            "T({name}): dim Hom(T, ∇) = {}, i injective: {}",
            hom.dim(),
            i.is_injective()
        )));
    }
    let pi = hom.basis().remove(0);
    let c = pi.compose(&i);
    let lead = c.matrix.first_nonzero().ok_or_else(|| Error::NotComputable(format!("c for {name} vanishes")))?.clone();
    let scale = lead.inv().expect("nonzero");
    let pi = pi.scale(&scale);
    let c = c.scale(&scale);
    if !pi.is_surjective() {
        return Err(Error::NotComputable(format!("π for {name} is not surjective")));
    }
    Ok(TiltingTriple { label: lambda, module: t, i, pi, c })
}

/// All indecomposable tilting modules, in label order.
pub fn all_tiltings<S: Scalar>(registry: &Registry<S>, dim_bound: usize) -> Result<Vec<TiltingTriple<S>>> {
    (0..registry.len()).map(|l| indecomposable_tilting(registry, l, dim_bound)).collect()
}

/// `⊕_λ T(λ)^{m_λ}` for the given multiplicities.
pub fn tilting_sum<S: Scalar>(tiltings: &[TiltingTriple<S>], multiplicities: &[usize]) -> Result<Module<S>> {
    let parts: Vec<&Module<S>> =
        tiltings.iter().zip(multiplicities).flat_map(|(t, &m)| std::iter::repeat_n(&t.module, m)).collect();
    if parts.is_empty() {
        return Err(Error::InvalidInput("empty tilting module".into()));
    }
    Module::direct_sum(&parts)
}

pub fn characteristic_tilting<S: Scalar>(tiltings: &[TiltingTriple<S>]) -> Result<Module<S>> {
    tilting_sum(tiltings, &vec![1; tiltings.len()])
}

/// `dim Ext¹(T, ∇(λ))` and `dim Ext¹(Δ(λ), T)` for every label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingReport {
    pub ext_to_costandard: Vec<usize>,
    pub ext_from_standard: Vec<usize>,
}

impl TiltingReport {
    pub fn is_tilting(&self) -> bool {
        self.ext_to_costandard.iter().chain(&self.ext_from_standard).all(|&d| d == 0)
    }
}

pub fn tilting_report<S: Scalar>(registry: &Registry<S>, t: &Module<S>) -> Result<TiltingReport> {
    let mut ext_to_costandard = Vec::new();
    let mut ext_from_standard = Vec::new();
    for l in 0..registry.len() {
        ext_to_costandard.push(ext1_dim(t, registry.costandard(l))?);
        ext_from_standard.push(ext1_dim(registry.standard(l), t)?);
    }
    Ok(TiltingReport { ext_to_costandard, ext_from_standard })
}

pub fn is_tilting<S: Scalar>(registry: &Registry<S>, t: &Module<S>) -> Result<bool> {
    Ok(tilting_report(registry, t)?.is_tilting())
}

/// Multiplicity of each `T(λ)` as a summand of `t`, in label order.
pub fn tilting_support<S: Scalar>(tiltings: &[TiltingTriple<S>], t: &Module<S>) -> Result<Vec<usize>> {
    let mut counts = vec![0; tiltings.len()];
    for s in t.krull_schmidt()?.summands {
        let mut found = false;
        for (k, tl) in tiltings.iter().enumerate() {
            if s.module.is_isomorphic(&tl.module)? {
                counts[k] += 1;
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::UnidentifiedSummand { dim: s.module.dim() });
        }
    }
    Ok(counts)
}

/// Conjugates a module by a random invertible matrix; used to check that
/// constructions do not depend on the chosen basis.
pub fn random_conjugate<S: Scalar>(m: &Module<S>, rng: &mut Rng) -> Result<(Module<S>, Matrix<S>)> {
    let n = m.dim();
    loop {
        let g = Matrix::from_flat(n, n, random::vector(rng, n * n));
        if g.is_invertible() {
            return Ok((m.change_basis(&g)?, g));
        }
    }
}
