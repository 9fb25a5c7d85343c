//! Brute-force checks over `F_3`: hom spaces and the filtration of
//! `Hom(M, N)` are enumerated element by element.

mod common;

use common::{all_vectors, setup, QUASI_HEREDITARY};
use tiltcell::algebra::{composition_factors_by_socle_series, HomSpace, Module};
use tiltcell::basis::HomBasis;
use tiltcell::highest_weight::Registry;
use tiltcell::scalar::F3;
use tiltcell::tilting::characteristic_tilting;
use tiltcell::{Matrix, Scalar};

fn to_f3(v: &[u64]) -> Vec<F3> {
    v.iter().map(|&x| F3::from_i64(x as i64)).collect()
}

fn count_intertwiners(m: &Module<F3>, n: &Module<F3>) -> usize {
    let (r, c) = (n.dim(), m.dim());
    all_vectors(3, r * c)
        .filter(|v| {
            let x = Matrix::from_flat(r, c, to_f3(v));
            (0..m.algebra().dim()).all(|i| &x * m.action(i) == n.action(i) * &x)
        })
        .count()
}

fn test_modules(r: &Registry<F3>) -> Vec<Module<F3>> {
    let mut out = Vec::new();
    for l in 0..r.len() {
        out.extend([r.simple(l), r.standard(l), r.costandard(l), r.projective(l)].map(Clone::clone));
    }
    out
}

#[test]
fn hom_dimensions_match_enumeration() {
    for name in QUASI_HEREDITARY {
        let (r, _) = setup::<F3>(name);
        let mods = test_modules(&r);
        for m in &mods {
            for n in &mods {
                if m.dim() * n.dim() > 8 {
                    continue;
                }
                let d = HomSpace::compute(m, n).unwrap().dim();
                assert_eq!(count_intertwiners(m, n), 3usize.pow(d as u32), "{name}");
            }
        }
    }
}

/// `f ∈ Hom^{≤λ}` iff no composition factor `L(μ)` of `Image f` has
/// `μ ≰ λ`; the factors are found through the socle series.
fn in_filtration_by_definition(r: &Registry<F3>, image: &Module<F3>, lambda: usize) -> bool {
    let simples = r.algebra().simples().unwrap();
    let counts = composition_factors_by_socle_series(image, &simples).unwrap();
    (0..r.len()).all(|mu| r.poset().leq(mu, lambda) || counts[r.weight(mu).class] == 0)
}

#[test]
fn filtration_matches_enumeration() {
    let mut checked = 0;
    for name in QUASI_HEREDITARY {
        let (r, ts) = setup::<F3>(name);
        let mut mods: Vec<Module<F3>> = ts.iter().map(|t| t.module.clone()).collect();
        mods.push(characteristic_tilting(&ts).unwrap());
        for m in &mods {
            for n in &mods {
                let hom = HomSpace::compute(m, n).unwrap();
                if hom.dim() > 6 {
                    continue;
                }
                let basis = HomBasis::build(&r, &ts, m, n, 0).unwrap();
                for lambda in 0..r.len() {
                    let space = basis.filtration(&r, lambda);
                    let mut members = 0;
                    for v in all_vectors(3, hom.dim()) {
                        let f = hom.element(&to_f3(&v));
                        let (image, _) = f.image().module();
                        if in_filtration_by_definition(&r, &image, lambda) {
                            members += 1;
                            assert!(space.contains(f.matrix.data()), "{name}");
                        }
                    }
                    assert_eq!(members, 3usize.pow(space.dim() as u32), "{name}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 20);
}
