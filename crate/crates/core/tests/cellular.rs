mod common;

use common::setup;
use tiltcell::algebra::HomSpace;
use tiltcell::catalog;
use tiltcell::cells::gram_matrix;
use tiltcell::duality::{build_cellular_basis, check_standard_duality, fixed_point_iso, AntiInvolution};
use tiltcell::scalar::{Rational, F2, F5};
use tiltcell::tilting::{characteristic_tilting, tilting_sum};
use tiltcell::{Error, Matrix, Scalar};

fn tau<S: Scalar>(name: &str) -> AntiInvolution<S> {
    let e = catalog::entry::<S>(name).unwrap();
    AntiInvolution::new(&e.algebra, e.involution.unwrap()).unwrap()
}

fn run<S: Scalar>() {
    let (r, ts) = setup::<S>("auslander-dualnumbers");
    let t = characteristic_tilting(&ts).unwrap();
    let cd = build_cellular_basis(&r, &ts, &t, tau("auslander-dualnumbers"), 7, 20).unwrap();
    let alpha = cd.involution.matrix();
    assert_eq!(&alpha * &alpha, Matrix::identity(HomSpace::compute(&t, &t).unwrap().dim()));
    let d = &cd.datum;
    for k in 0..d.fibers().len() {
        assert_eq!(d.i_len(k), d.j_len(k));
        for i in 0..d.i_len(k) {
            for j in 0..d.j_len(k) {
                assert_eq!(cd.involution.apply(d.element(k, i, j)), *d.element(k, j, i));
            }
        }
        // the opposite datum stores the transposed Gram matrix
        let op = gram_matrix(&d.opposite(), &ts, k).unwrap();
        assert_eq!(op.transpose(), cd.cells.cells[k].gram);
        assert_eq!(op, cd.cells.cells[k].gram);
    }
    for fp in &cd.duality.tilting_fixed {
        assert!(fp.is_fixed());
    }
}

#[test]
fn auslander_over_q_and_f5() {
    run::<Rational>();
    run::<F5>();
}

#[test]
fn auslander_sums() {
    let (r, ts) = setup::<Rational>("auslander-dualnumbers");
    for mult in [[1, 2], [2, 0], [0, 2], [2, 2]] {
        let t = tilting_sum(&ts, &mult).unwrap();
        let cd = build_cellular_basis(&r, &ts, &t, tau("auslander-dualnumbers"), 3, 5).unwrap();
        let simples = cd.cells.classify_simples(&r).unwrap();
        for (l, dim) in simples {
            assert_eq!(dim, mult[l]);
        }
    }
}

#[test]
fn characteristic_two_is_refused() {
    let (_, ts) = setup::<F2>("semisimple2");
    let t = tau::<F2>("semisimple2");
    assert!(matches!(fixed_point_iso(&ts[0].module, &t, 0), Err(Error::NotComputable(_))));
}

#[test]
fn exchange_fails_without_standard_duality() {
    let (r, ts) = setup::<Rational>("ut3");
    // transpose-and-flip on upper-triangular 3×3 matrices reverses the order of the vertices
    let idx = |i: usize, j: usize| [[0, 1, 2], [9, 3, 4], [9, 9, 5]][i][j];
    let mut flip = Matrix::zeros(6, 6);
    for i in 0..3 {
        for j in i..3 {
            flip.set(idx(2 - j, 2 - i), idx(i, j), Rational::from_i64(1));
        }
    }
    let t = AntiInvolution::new(r.algebra(), flip).unwrap();
    assert!(matches!(check_standard_duality(&r, &ts, &t), Err(Error::NotStandardDuality { .. })));
}
