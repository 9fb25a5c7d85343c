//! `Ext¹` and `Ext²` from projective presentations.

use crate::algebra::{HomSpace, Module, Morphism, Simple};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// `0 → Ω → P₀ → M → 0` with `P₀ = ⊕ A e_k` a projective cover.
#[derive(Clone, Debug)]
pub struct Presentation<S> {
    pub module: Module<S>,
    pub projective: Module<S>,
    pub cover: Morphism<S>,
    pub syzygy: Module<S>,
    pub inclusion: Morphism<S>,
    /// For each summand of `P₀`: its idempotent, its offset in `P₀` and
    /// the left ideal basis (columns) it was built from.
    pub summands: Vec<ProjectiveSummand<S>>,
}

#[derive(Clone, Debug)]
pub struct ProjectiveSummand<S> {
    pub idempotent: Vec<S>,
    pub offset: usize,
    /// Basis of `A e` as algebra elements.
    pub basis: Vec<Vec<S>>,
}

/// Projective cover of `M`, with generators lifted from bases of `e·head(M)`.
pub fn projective_presentation<S: Scalar>(m: &Module<S>) -> Result<Presentation<S>> {
    let algebra = m.algebra().clone();
    let n = algebra.dim();
    let idem = algebra.primitive_idempotents()?;
    let (_, head) = m.head()?;
    let mut summands = Vec::new();
    let mut blocks = Vec::new();
    let mut cover_cols: Vec<Vec<S>> = Vec::new();
    let mut offset = 0;
    for e in idem.representatives() {
        let ideal = Subspace::spanned_by(n, (0..n).map(|k| algebra.mul(&algebra.basis_vector(k), e)));
        let basis = ideal.vectors();
        let em = Subspace::column_space(&m.act(e));
        let mut chosen_images = Subspace::zero(head.target.dim());
        for v in em.vectors() {
            let img = head.matrix.mul_vec(&v);
            if chosen_images.contains(&img) {
                continue;
            }
            chosen_images = chosen_images.sum(&Subspace::spanned_by(img.len(), [img])).unwrap();
            // a e ↦ a·v
            for w in &basis {
                cover_cols.push(m.act(w).mul_vec(&v));
            }
            blocks.push(Module::left_ideal(&algebra, e).module().0);
            summands.push(ProjectiveSummand { idempotent: e.clone(), offset, basis: basis.clone() });
            offset += basis.len();
        }
    }
    let projective = if blocks.is_empty() {
        Module::zero(algebra.clone())
    } else {
        Module::direct_sum(&blocks.iter().collect::<Vec<_>>())?
    };
    let cover =
        Morphism { source: projective.clone(), target: m.clone(), matrix: Matrix::from_columns(m.dim(), &cover_cols) };
    if !cover.is_surjective() {
        return Err(Error::NotComputable("projective cover is not surjective".into()));
    }
    let (syzygy, inclusion) = cover.kernel().module();
    Ok(Presentation { module: m.clone(), projective, cover, syzygy, inclusion, summands })
}

impl<S: Scalar> Presentation<S> {
    /// `Hom(P₀, N)`: a basis given by the maps `a e ↦ a v` for `v ∈ eN`.
    pub fn homs_to(&self, n: &Module<S>) -> Vec<Matrix<S>> {
        let p = self.projective.dim();
        let mut out = Vec::new();
        for s in &self.summands {
            for v in Subspace::column_space(&n.act(&s.idempotent)).vectors() {
                let mut mat = Matrix::zeros(n.dim(), p);
                for (j, w) in s.basis.iter().enumerate() {
                    for (r, x) in n.act(w).mul_vec(&v).into_iter().enumerate() {
                        mat.set(r, s.offset + j, x);
                    }
                }
                out.push(mat);
            }
        }
        out
    }
}

/// `Ext¹(M, N)` realized as `Hom(Ω, N)` modulo restrictions from `Hom(P₀, N)`.
#[derive(Clone, Debug)]
pub struct Ext1<S> {
    pub presentation: Presentation<S>,
    pub target: Module<S>,
    /// Cocycles `Ω → N` whose classes form a basis of `Ext¹(M, N)`.
    pub classes: Vec<Matrix<S>>,
}

/// A middle term `0 → N → X → M → 0` of an extension.
#[derive(Clone, Debug)]
pub struct Extension<S> {
    pub middle: Module<S>,
    pub inclusion: Morphism<S>,
    pub projection: Morphism<S>,
}

impl<S: Scalar> Ext1<S> {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty()
    }

    /// The pushout of the presentation along the `k`-th cocycle.
    pub fn extension(&self, k: usize) -> Extension<S> {
        pushout(&self.presentation, &self.target, &[self.classes[k].clone()])
    }
}

pub fn ext1<S: Scalar>(m: &Module<S>, n: &Module<S>) -> Result<Ext1<S>> {
    m.same_algebra(n)?;
    let presentation = projective_presentation(m)?;
    ext1_from_presentation(presentation, n)
}

pub fn ext1_from_presentation<S: Scalar>(presentation: Presentation<S>, n: &Module<S>) -> Result<Ext1<S>> {
    let omega = &presentation.syzygy;
    let hom = HomSpace::compute(omega, n)?;
    let d = hom.dim();
    let restrictions: Vec<Vec<S>> = presentation
        .homs_to(n)
        .iter()
        .map(|phi| hom.coordinates(&(phi * &presentation.inclusion.matrix)).expect("restriction is a module map"))
        .collect();
    let mut span = Subspace::spanned_by(d, restrictions);
    let mut classes = Vec::new();
    for k in 0..d {
        let mut e = vec![S::zero(); d];
        e[k] = S::one();
        if !span.contains(&e) {
            span = span.sum(&Subspace::spanned_by(d, [e.clone()])).unwrap();
            classes.push(hom.element(&e).matrix);
        }
    }
    Ok(Ext1 { presentation, target: n.clone(), classes })
}

pub fn ext1_dim<S: Scalar>(m: &Module<S>, n: &Module<S>) -> Result<usize> {
    Ok(ext1(m, n)?.dim())
}

/// `Ext²(M, N) = Ext¹(Ω M, N)`.
pub fn ext2_dim<S: Scalar>(m: &Module<S>, n: &Module<S>) -> Result<usize> {
    m.same_algebra(n)?;
    let presentation = projective_presentation(m)?;
    ext1_dim(&presentation.syzygy, n)
}

/// Glues copies of `P₀` onto `N` along the cocycles `ψ_k: Ω → N`:
/// `X = (N ⊕ P₀^d) / {(−Σ ψ_k(ω_k), ω_1, …, ω_d)}`.
pub fn pushout<S: Scalar>(p: &Presentation<S>, n: &Module<S>, cocycles: &[Matrix<S>]) -> Extension<S> {
    let d = cocycles.len();
    let (nd, pd) = (n.dim(), p.projective.dim());
    let mut parts = vec![n];
    parts.extend(std::iter::repeat_n(&p.projective, d));
    let big = Module::direct_sum(&parts).expect("same algebra");
    let total = nd + d * pd;
    let omega_basis = p.inclusion.matrix.column_vectors();
    let mut relations = Vec::new();
    for (k, psi) in cocycles.iter().enumerate() {
        for (c, w) in omega_basis.iter().enumerate() {
            let mut v = vec![S::zero(); total];
            for r in 0..nd {
                v[r] = -psi.get(r, c).clone();
            }
            for (r, x) in w.iter().enumerate() {
                v[nd + k * pd + r] = x.clone();
            }
            relations.push(v);
        }
    }
    let sub = big.submodule(Subspace::spanned_by(total, relations)).expect("relations form a submodule");
    let (middle, proj) = sub.quotient();
    let inc_big = Matrix::from_fn(total, nd, |r, c| if r == c { S::one() } else { S::zero() });
    let inclusion = Morphism { source: n.clone(), target: middle.clone(), matrix: &proj.matrix * &inc_big };
    // (n, p_1, …, p_d) ↦ (cover p_1, …, cover p_d), descended to the quotient.
    let target = p.module.power(d);
    let mut down = Matrix::zeros(target.dim(), total);
    let md = p.module.dim();
    for k in 0..d {
        for r in 0..md {
            for c in 0..pd {
                down.set(k * md + r, nd + k * pd + c, p.cover.matrix.get(r, c).clone());
            }
        }
    }
    let q = Subspace::full(total).quotient(&sub.space).unwrap();
    let projection = Morphism { source: middle.clone(), target, matrix: &down * &q.section };
    Extension { middle, inclusion, projection }
}

/// A composition factor `L` of `M` with `Ext¹(L, N) ≠ 0`, if `Ext¹(M, N) ≠ 0`.
pub fn ext1_witness_factor<S: Scalar>(m: &Module<S>, n: &Module<S>, simples: &[Simple<S>]) -> Result<Option<usize>> {
    if ext1_dim(m, n)? == 0 {
        return Ok(None);
    }
    let factors = m.composition_factors()?;
    for (i, s) in simples.iter().enumerate() {
        if factors[i] > 0 && ext1_dim(&s.module, n)? > 0 {
            return Ok(Some(i));
        }
    }
    Err(Error::NotComputable("no composition factor witnesses a nonzero Ext^1".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Rational;

    #[test]
    fn ext_between_simples_of_a2() {
        let a = catalog::a2path::<Rational>();
        let simples = a.simples().unwrap();
        // simples are listed in idempotent order; find L(1) by e1.
        let l1 = simples.iter().find(|s| s.module.act(&a.basis_vector(0)).rank() == 1).unwrap();
        let l2 = simples.iter().find(|s| s.module.act(&a.basis_vector(1)).rank() == 1).unwrap();
        // arrow 1 → 2: the projective cover of L(1) has L(2) as its radical.
        assert_eq!(ext1_dim(&l1.module, &l2.module).unwrap(), 1);
        assert_eq!(ext1_dim(&l2.module, &l1.module).unwrap(), 0);
        assert_eq!(ext2_dim(&l1.module, &l2.module).unwrap(), 0);
        let reg = Module::regular(a.clone());
        assert_eq!(ext1_dim(&reg, &l2.module).unwrap(), 0);
    }

    #[test]
    fn extension_middle_term_is_projective_cover() {
        let a = catalog::a2path::<Rational>();
        let simples = a.simples().unwrap();
        let l1 = simples.iter().find(|s| s.module.act(&a.basis_vector(0)).rank() == 1).unwrap();
        let l2 = simples.iter().find(|s| s.module.act(&a.basis_vector(1)).rank() == 1).unwrap();
        let ext = ext1(&l1.module, &l2.module).unwrap();
        let x = ext.extension(0);
        x.middle.check().unwrap();
        assert!(x.inclusion.intertwines() && x.inclusion.is_injective());
        assert!(x.projection.intertwines() && x.projection.is_surjective());
        assert!((&x.projection.matrix * &x.inclusion.matrix).is_zero());
        let p1 = Module::left_ideal(&a, &a.basis_vector(0)).module().0;
        assert!(x.middle.is_isomorphic(&p1).unwrap());
    }

    #[test]
    fn dual_numbers_self_extension() {
        let a = catalog::dual_numbers::<Rational>();
        let l = &a.simples().unwrap()[0].module;
        assert_eq!(ext1_dim(l, l).unwrap(), 1);
        assert_eq!(ext2_dim(l, l).unwrap(), 1);
    }
}
