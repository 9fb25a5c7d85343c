mod common;

use common::{setup, QUASI_HEREDITARY};
use tiltcell::algebra::{HomSpace, Module};
use tiltcell::catalog;
use tiltcell::highest_weight::{ext1_dim, verify_standard_category, FiltrationKind};
use tiltcell::scalar::{Rational, F5};
use tiltcell::tilting::is_tilting;

#[test]
fn verdicts_over_several_fields() {
    for name in QUASI_HEREDITARY {
        let r = catalog::entry::<Rational>(name).unwrap().registry().unwrap();
        assert!(verify_standard_category(&r).unwrap().passed(), "{name} over Q");
        let r = catalog::entry::<F5>(name).unwrap().registry().unwrap();
        assert!(verify_standard_category(&r).unwrap().passed(), "{name} over F_5");
    }
    let r = catalog::entry::<Rational>("dualnumbers").unwrap().registry().unwrap();
    let report = verify_standard_category(&r).unwrap();
    let fail = report.first_failure().unwrap();
    assert_eq!(fail.axiom, tiltcell::highest_weight::EXT1_VANISHING);
    assert_eq!(ext1_dim(r.standard(0), r.costandard(0)).unwrap(), 1);
}

/// `(P(λ) : Δ(μ)) = [∇(μ) : L(λ)]`, with the left side read off an explicit
/// filtration chain and the right side from composition factors.
#[test]
fn reciprocity() {
    for name in QUASI_HEREDITARY {
        let r = catalog::entry::<Rational>(name).unwrap().registry().unwrap();
        for l in 0..r.len() {
            let chain = r.delta_filtration(r.projective(l)).unwrap().multiplicities(r.len());
            for mu in 0..r.len() {
                assert_eq!(chain[mu], r.composition_multiplicity(r.costandard(mu), l).unwrap(), "{name}");
            }
        }
    }
}

/// `dim Hom(P(λ), P(ν)) = Σ_μ (P(ν) : Δ(μ)) [Δ(μ) : L(λ)]`.
#[test]
fn cartan_matrix_from_standard_filtrations() {
    for name in QUASI_HEREDITARY {
        let r = catalog::entry::<Rational>(name).unwrap().registry().unwrap();
        for l in 0..r.len() {
            for nu in 0..r.len() {
                let chain = r.delta_filtration(r.projective(nu)).unwrap().multiplicities(r.len());
                let predicted: usize =
                    (0..r.len()).map(|mu| chain[mu] * r.composition_multiplicity(r.standard(mu), l).unwrap()).sum();
                let actual = HomSpace::compute(r.projective(l), r.projective(nu)).unwrap().dim();
                assert_eq!(predicted, actual, "{name}");
            }
        }
    }
}

#[test]
fn a2_modules() {
    let r = catalog::entry::<Rational>("a2path").unwrap().registry().unwrap();
    let (top, low) = (r.index("1").unwrap(), r.index("2").unwrap());
    assert_eq!((r.standard(top).dim(), r.standard(low).dim()), (2, 1));
    assert!(r.standard(top).is_isomorphic(r.projective(top)).unwrap());
    assert!(r.standard(low).is_isomorphic(r.simple(low)).unwrap());
    let m = r.standard(top);
    assert_eq!(HomSpace::compute(r.simple(low), m).unwrap().dim(), 1);
    assert_eq!(HomSpace::compute(m, r.simple(low)).unwrap().dim(), 0);
    assert_eq!(r.composition_factors(m).unwrap(), vec![1, 1]);
    // ∇ of A mirrors Δ of the opposite algebra
    let op = r.opposite_algebra();
    for l in 0..r.len() {
        let d = r.costandard(l).transpose_dual(op);
        assert_eq!(d.dim(), r.costandard(l).dim());
    }
    assert_eq!(r.costandard(top).dim(), 1);
    assert_eq!(r.costandard(low).dim(), 1);
}

#[test]
fn socles_and_heads() {
    for name in QUASI_HEREDITARY {
        let r = catalog::entry::<Rational>(name).unwrap().registry().unwrap();
        for l in 0..r.len() {
            let (head, _) = r.standard(l).head().unwrap();
            assert!(head.is_isomorphic(r.simple(l)).unwrap(), "{name}");
            let (soc, _) = r.costandard(l).socle().unwrap().module();
            assert!(soc.is_isomorphic(r.simple(l)).unwrap(), "{name}");
            let rad = r.standard(l).radical().unwrap().module().0;
            for mu in r.support(&rad).unwrap() {
                assert!(r.poset().lt(mu, l), "{name}");
            }
        }
    }
}

#[test]
fn tilting_characters() {
    for name in QUASI_HEREDITARY {
        let (r, ts) = setup::<Rational>(name);
        for t in &ts {
            let m = &t.module;
            assert!(is_tilting(&r, m).unwrap());
            assert!(m.is_indecomposable().unwrap());
            assert_eq!(r.composition_multiplicity(m, t.label).unwrap(), 1);
            let by_delta: usize = (0..r.len())
                .map(|mu| r.filtration_multiplicity(m, mu, FiltrationKind::Standard).unwrap() * r.standard(mu).dim())
                .sum();
            let by_nabla: usize = (0..r.len())
                .map(|mu| {
                    r.filtration_multiplicity(m, mu, FiltrationKind::Costandard).unwrap() * r.costandard(mu).dim()
                })
                .sum();
            assert_eq!(by_delta, m.dim(), "{name}");
            assert_eq!(by_nabla, m.dim(), "{name}");
        }
    }
}

#[test]
fn auslander_tiltings_among_indecomposables() {
    let (r, ts) = setup::<Rational>("auslander-dualnumbers");
    assert_eq!(r.algebra().dim(), 5);
    let mut candidates: Vec<Module<Rational>> = Vec::new();
    for l in 0..r.len() {
        candidates
            .extend([r.simple(l), r.standard(l), r.costandard(l), r.projective(l), r.injective(l)].map(Clone::clone));
    }
    // every tilting module that shows up among the named modules is one of ours
    for c in &candidates {
        if is_tilting(&r, c).unwrap() && c.is_indecomposable().unwrap() {
            assert!(ts.iter().any(|t| t.module.is_isomorphic(c).unwrap()));
        }
    }
}
