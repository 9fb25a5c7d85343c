use std::sync::Arc;

use crate::algebra::{Algebra, Module, Morphism};
use crate::error::{Error, Result};
use crate::highest_weight::WeightPoset;
use crate::scalar::Scalar;

/// Everything attached to one weight `λ`.
#[derive(Clone, Debug)]
pub struct Weight<S> {
    pub label: String,
    pub idempotent: Vec<S>,
    /// Class of `idempotent` among the algebra's primitive idempotents.
    pub class: usize,
    pub simple: Module<S>,
    pub projective: Module<S>,
    pub injective: Module<S>,
    pub standard: Module<S>,
    pub costandard: Module<S>,
    /// `P(λ) ↠ Δ(λ)`.
    pub standard_projection: Morphism<S>,
    /// `∇(λ) ↪ I(λ)`.
    pub costandard_inclusion: Morphism<S>,
}

/// The weight poset together with simple, projective, injective, standard
/// and costandard modules for every label.
///
/// Built once and immutable afterwards; the highest-weight axioms are not
/// checked here, see [`verify_standard_category`](crate::highest_weight::verify_standard_category).
#[derive(Clone, Debug)]
pub struct Registry<S> {
    algebra: Arc<Algebra<S>>,
    opposite: Arc<Algebra<S>>,
    poset: WeightPoset,
    weights: Vec<Weight<S>>,
}

impl<S: Scalar> Registry<S> {
    /// Binds the labels of `poset` to the simple modules of `algebra`.
    ///
    /// With `idempotents`, label `k` is attached to the primitive idempotent
    /// `idempotents[k]`. Without, labels are attached to the classes of
    /// primitive idempotents in the order the algebra discovers them.
    pub fn new(algebra: Arc<Algebra<S>>, poset: WeightPoset, idempotents: Option<Vec<Vec<S>>>) -> Result<Self> {
        let prim = algebra.primitive_idempotents()?;
        let reps: Vec<Vec<S>> = prim.representatives().into_iter().cloned().collect();
        if poset.len() != reps.len() {
            return Err(Error::InvalidPoset(format!(
                "{} labels for {} isomorphism classes of simple modules",
                poset.len(),
                reps.len()
            )));
        }
        let simples = algebra.simples()?;
        let (idems, classes) = match idempotents {
            None => (reps, (0..poset.len()).collect::<Vec<_>>()),
            Some(idems) => {
                if idems.len() != poset.len() {
                    return Err(Error::InvalidInput(format!("{} idempotents for {} labels", idems.len(), poset.len())));
                }
                let mut classes = Vec::new();
                for (k, e) in idems.iter().enumerate() {
                    let label = poset.label(k);
                    if e.len() != algebra.dim() || algebra.mul(e, e) != *e {
                        return Err(Error::InvalidInput(format!("idempotent for {label} is not an idempotent")));
                    }
                    let ranks: Vec<usize> = simples.iter().map(|s| s.module.act(e).rank()).collect();
                    if ranks.iter().sum::<usize>() != 1 {
                        return Err(Error::InvalidInput(format!("idempotent for {label} is not primitive")));
                    }
                    let class = ranks.iter().position(|&r| r == 1).unwrap();
                    if classes.contains(&class) {
                        return Err(Error::InvalidInput(format!("idempotent for {label} repeats a simple module")));
                    }
                    classes.push(class);
                }
                (idems, classes)
            }
        };
        let opposite = algebra.opposite();
        let mut weights = Vec::with_capacity(poset.len());
        for (k, (e, class)) in idems.iter().zip(classes).enumerate() {
            let (projective, standard, standard_projection) = standard_quotient(&algebra, &idems, &poset, k)?;
            let (simple, _) = projective.head()?;
            let (p_op, d_op, proj_op) = standard_quotient(&opposite, &idems, &poset, k)?;
            let injective = p_op.transpose_dual(&algebra);
            let costandard = d_op.transpose_dual(&algebra);
            let costandard_inclusion =
                Morphism { source: costandard.clone(), target: injective.clone(), matrix: proj_op.matrix.transpose() };
            weights.push(Weight {
                label: poset.label(k).to_string(),
                idempotent: e.clone(),
                class,
                simple,
                projective,
                injective,
                standard,
                costandard,
                standard_projection,
                costandard_inclusion,
            });
        }
        Ok(Registry { algebra, opposite, poset, weights })
    }

    pub fn algebra(&self) -> &Arc<Algebra<S>> {
        &self.algebra
    }

    pub fn opposite_algebra(&self) -> &Arc<Algebra<S>> {
        &self.opposite
    }

    pub fn poset(&self) -> &WeightPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Weight<S>] {
        &self.weights
    }

    pub fn weight(&self, lambda: usize) -> &Weight<S> {
        &self.weights[lambda]
    }

    pub fn label(&self, lambda: usize) -> &str {
        &self.weights[lambda].label
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.poset.index(label).ok_or_else(|| Error::InvalidInput(format!("unknown label {label}")))
    }

    pub fn simple(&self, lambda: usize) -> &Module<S> {
        &self.weights[lambda].simple
    }

    pub fn standard(&self, lambda: usize) -> &Module<S> {
        &self.weights[lambda].standard
    }

    pub fn costandard(&self, lambda: usize) -> &Module<S> {
        &self.weights[lambda].costandard
    }

    pub fn projective(&self, lambda: usize) -> &Module<S> {
        &self.weights[lambda].projective
    }

    pub fn injective(&self, lambda: usize) -> &Module<S> {
        &self.weights[lambda].injective
    }

    /// `[M : L(λ)]` for every label, in label order.
    pub fn composition_factors(&self, m: &Module<S>) -> Result<Vec<usize>> {
        let by_class = m.composition_factors()?;
        Ok(self.weights.iter().map(|w| by_class[w.class]).collect())
    }

    pub fn composition_multiplicity(&self, m: &Module<S>, lambda: usize) -> Result<usize> {
        m.same_algebra(&self.weights[lambda].simple)?;
        // [M : L(λ)] = dim e_λ M for a split algebra
        Ok(m.act(&self.weights[lambda].idempotent).rank())
    }

    /// Labels `μ` with `[M : L(μ)] ≠ 0`.
    pub fn support(&self, m: &Module<S>) -> Result<Vec<usize>> {
        Ok(self.composition_factors(m)?.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, _)| i).collect())
    }

    /// Whether `[M : L(μ)] ≠ 0 ⇒ μ ≤ λ` and `[M : L(λ)] = 1`.
    pub fn has_highest_weight(&self, m: &Module<S>, lambda: usize) -> Result<bool> {
        let factors = self.composition_factors(m)?;
        Ok(factors[lambda] == 1 && factors.iter().enumerate().all(|(mu, &c)| c == 0 || self.poset.leq(mu, lambda)))
    }

    /// The Cartan matrix `c_{λμ} = [P(λ) : L(μ)]`.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<usize>>> {
        self.weights.iter().map(|w| self.composition_factors(&w.projective)).collect()
    }
}

/// `P = A e_λ` and its largest quotient whose radical only has factors `μ < λ`:
/// the quotient by the submodule generated by `e_μ · rad P` for all `μ ≮ λ`.
fn standard_quotient<S: Scalar>(
    algebra: &Arc<Algebra<S>>,
    idempotents: &[Vec<S>],
    poset: &WeightPoset,
    lambda: usize,
) -> Result<(Module<S>, Module<S>, Morphism<S>)> {
    let (p, _) = Module::left_ideal(algebra, &idempotents[lambda]).module();
    let rad = p.radical()?.space.vectors();
    let mut gens = Vec::new();
    for (mu, e) in idempotents.iter().enumerate() {
        if poset.lt(mu, lambda) {
            continue;
        }
        let act = p.act(e);
        gens.extend(rad.iter().map(|v| act.mul_vec(v)));
    }
    let (delta, proj) = p.generated_by(gens).quotient();
    Ok((p, delta, proj))
}

/// Orders compatible with the Cartan matrix: pairs `(μ, λ)` with
/// `[P(λ) : L(μ)] ≠ 0` for `μ ≠ λ`, read as candidate relations `μ < λ`.
///
/// This is advisory only; the poset given to [`Registry::new`] is authoritative.
pub fn candidate_covers<S: Scalar>(registry: &Registry<S>) -> Result<Vec<(String, String)>> {
    let cartan = registry.cartan_matrix()?;
    let mut out = Vec::new();
    for (lambda, row) in cartan.iter().enumerate() {
        for (mu, &c) in row.iter().enumerate() {
            if mu != lambda && c > 0 {
                out.push((registry.label(mu).to_string(), registry.label(lambda).to_string()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{Rational, F5};

    fn registry<S: Scalar>(name: &str) -> Registry<S> {
        let e = catalog::entry::<S>(name).unwrap();
        let poset = WeightPoset::new(e.labels.clone(), &e.covers).unwrap();
        Registry::new(e.algebra, poset, Some(e.idempotents)).unwrap()
    }

    #[test]
    fn semisimple_standard_is_simple() {
        let r = registry::<Rational>("semisimple2");
        for w in r.weights() {
            assert_eq!(w.standard.dim(), 1);
            assert_eq!(w.costandard.dim(), 1);
            assert!(w.standard.is_isomorphic(&w.simple).unwrap());
        }
    }

    #[test]
    fn a2_standard_and_costandard_dims() {
        let r = registry::<Rational>("a2path");
        let top = r.index("1").unwrap();
        let low = r.index("2").unwrap();
        assert_eq!(r.standard(top).dim(), 2);
        assert!(r.standard(top).is_isomorphic(r.projective(top)).unwrap());
        assert_eq!(r.standard(low).dim(), 1);
        assert_eq!(r.costandard(top).dim(), 1);
        assert_eq!(r.costandard(low).dim(), 1);
        for w in r.weights() {
            w.costandard.check().unwrap();
            w.injective.check().unwrap();
            assert!(w.costandard_inclusion.intertwines() && w.costandard_inclusion.is_injective());
            assert!(w.standard_projection.intertwines() && w.standard_projection.is_surjective());
        }
    }

    #[test]
    fn highest_weight_property_on_catalog() {
        for name in ["a2path", "auslander-dualnumbers", "ut3"] {
            let r = registry::<F5>(name);
            for l in 0..r.len() {
                assert!(r.has_highest_weight(r.standard(l), l).unwrap(), "{name} Δ({l})");
                assert!(r.has_highest_weight(r.costandard(l), l).unwrap(), "{name} ∇({l})");
                let soc = r.costandard(l).socle().unwrap().module().0;
                assert!(soc.is_isomorphic(r.simple(l)).unwrap());
            }
        }
    }

    #[test]
    fn label_binding_without_idempotents() {
        let e = catalog::entry::<Rational>("a2path").unwrap();
        let poset = WeightPoset::new(e.labels.clone(), &e.covers).unwrap();
        let r = Registry::new(e.algebra.clone(), poset.clone(), None).unwrap();
        assert_eq!(r.len(), 2);
        let bad = WeightPoset::antichain(vec!["x".into()]);
        assert!(Registry::new(e.algebra, bad, None).is_err());
    }
}
