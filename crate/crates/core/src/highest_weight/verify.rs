use crate::algebra::HomSpace;
use crate::error::{Error, Result};
use crate::highest_weight::{ext1_dim, ext2_dim, Registry};
use crate::scalar::Scalar;

/// One verified (or violated) condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub axiom: &'static str,
    pub lambda: Option<String>,
    pub mu: Option<String>,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`verify_standard_category`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CategoryReport {
    pub checks: Vec<Check>,
}

impl CategoryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn into_result(self) -> Result<Self> {
        match self.first_failure() {
            None => Ok(self),
            Some(c) => Err(Error::AxiomViolation {
                axiom: c.axiom.to_string(),
                lambda: c.lambda.clone().unwrap_or_default(),
                mu: c.mu.clone().unwrap_or_default(),
                detail: c.detail.clone(),
            }),
        }
    }

    fn push(&mut self, axiom: &'static str, lambda: Option<&str>, mu: Option<&str>, passed: bool, detail: String) {
        self.checks.push(Check {
            axiom,
            lambda: lambda.map(str::to_string),
            mu: mu.map(str::to_string),
            passed,
            detail,
        });
    }
}

pub const SPLIT: &str = "split";
pub const HIGHEST_WEIGHT: &str = "highest-weight";
pub const HOM_VANISHING: &str = "hom-standard-costandard";
pub const EXT1_VANISHING: &str = "ext1-standard-costandard";
pub const EXT2_VANISHING: &str = "ext2-standard-costandard";
pub const END_IS_FIELD: &str = "endomorphisms-scalar";
pub const EXT_DIRECTION: &str = "ext1-direction";

/// Checks the standard-category axioms on a registry, with witnesses.
///
/// The axioms proper are `dim Hom(Δ(λ), ∇(μ)) = δ_{λμ}` and
/// `Ext¹ = Ext² = 0` between standard and costandard modules. The
/// directional `Ext¹` statements between simples, standards and costandards
/// are recorded as diagnostics alongside.
pub fn verify_standard_category<S: Scalar>(registry: &Registry<S>) -> Result<CategoryReport> {
    let mut report = CategoryReport::default();
    let poset = registry.poset();
    let a = registry.algebra();
    let semisimple_dim = a.primitive_idempotents()?.semisimple_dim;
    let rad = a.radical()?.dim();
    report.push(
        SPLIT,
        None,
        None,
        semisimple_dim + rad == a.dim(),
        format!("dim A/rad A = {semisimple_dim} = sum of squares of simple dimensions"),
    );
    let n = registry.len();
    let label = |i: usize| registry.label(i).to_string();
    for l in 0..n {
        for (kind, m) in [("standard", registry.standard(l)), ("costandard", registry.costandard(l))] {
            let ok = registry.has_highest_weight(m, l)?;
            let factors = registry.composition_factors(m)?;
            report.push(HIGHEST_WEIGHT, Some(&label(l)), None, ok, format!("{kind} composition factors {factors:?}"));
        }
    }
    for l in 0..n {
        for mu in 0..n {
            let (ll, lm) = (label(l), label(mu));
            let hom = HomSpace::compute(registry.standard(l), registry.costandard(mu))?.dim();
            let expected = usize::from(l == mu);
            report.push(
                HOM_VANISHING,
                Some(&ll),
                Some(&lm),
                hom == expected,
                format!("dim Hom(Δ({ll}), ∇({lm})) = {hom}, expected {expected}"),
            );
            let e1 = ext1_dim(registry.standard(l), registry.costandard(mu))?;
            report.push(EXT1_VANISHING, Some(&ll), Some(&lm), e1 == 0, format!("dim Ext¹(Δ({ll}), ∇({lm})) = {e1}"));
            let e2 = ext2_dim(registry.standard(l), registry.costandard(mu))?;
            report.push(EXT2_VANISHING, Some(&ll), Some(&lm), e2 == 0, format!("dim Ext²(Δ({ll}), ∇({lm})) = {e2}"));
        }
    }
    for l in 0..n {
        let ll = label(l);
        for (kind, m) in [("L", registry.simple(l)), ("Δ", registry.standard(l)), ("∇", registry.costandard(l))] {
            let d = HomSpace::compute(m, m)?.dim();
            report.push(END_IS_FIELD, Some(&ll), None, d == 1, format!("dim End({kind}({ll})) = {d}"));
        }
    }
    for l in 0..n {
        for mu in 0..n {
            let (ll, lm) = (label(l), label(mu));
            let mut direction = |name: String, dim: usize, ok: bool| {
                report.push(EXT_DIRECTION, Some(&ll), Some(&lm), dim == 0 || ok, format!("dim {name} = {dim}"));
            };
            let d = ext1_dim(registry.simple(l), registry.costandard(mu))?;
            direction(format!("Ext¹(L({ll}), ∇({lm}))"), d, poset.lt(mu, l));
            let d = ext1_dim(registry.standard(mu), registry.simple(l))?;
            direction(format!("Ext¹(Δ({lm}), L({ll}))"), d, poset.lt(mu, l));
            let d = ext1_dim(registry.simple(mu), registry.simple(l))?;
            direction(format!("Ext¹(L({lm}), L({ll}))"), d, mu != l && poset.comparable(mu, l));
            let d = ext1_dim(registry.costandard(mu), registry.costandard(l))?;
            direction(format!("Ext¹(∇({lm}), ∇({ll}))"), d, poset.lt(l, mu));
            let d = ext1_dim(registry.standard(mu), registry.standard(l))?;
            direction(format!("Ext¹(Δ({lm}), Δ({ll}))"), d, poset.lt(mu, l));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::highest_weight::WeightPoset;
    use crate::scalar::Rational;

    fn report(name: &str) -> CategoryReport {
        let e = catalog::entry::<Rational>(name).unwrap();
        let poset = WeightPoset::new(e.labels.clone(), &e.covers).unwrap();
        let r = Registry::new(e.algebra, poset, Some(e.idempotents)).unwrap();
        verify_standard_category(&r).unwrap()
    }

    #[test]
    fn catalog_verdicts() {
        for name in ["trivial", "semisimple2", "a2path", "auslander-dualnumbers", "ut3"] {
            let r = report(name);
            assert!(r.passed(), "{name}: {:?}", r.first_failure());
        }
        let bad = report("dualnumbers");
        let fail = bad.first_failure().unwrap();
        assert_eq!(fail.axiom, EXT1_VANISHING);
        assert!(matches!(bad.into_result(), Err(Error::AxiomViolation { .. })));
    }

    #[test]
    fn a2_orders() {
        let e = catalog::entry::<Rational>("a2path").unwrap();
        // hereditary, so the reversed order is quasi-hereditary too
        let poset = WeightPoset::new(e.labels.clone(), &[("1".into(), "2".into())]).unwrap();
        let r = Registry::new(e.algebra, poset, Some(e.idempotents)).unwrap();
        let rep = verify_standard_category(&r).unwrap();
        assert!(rep.passed());
        let anti = WeightPoset::antichain(vec!["1".into(), "2".into()]);
        let e = catalog::entry::<Rational>("a2path").unwrap();
        let r = Registry::new(e.algebra, anti, Some(e.idempotents)).unwrap();
        assert!(!verify_standard_category(&r).unwrap().passed());
    }
}
