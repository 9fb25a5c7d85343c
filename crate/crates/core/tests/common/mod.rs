#![allow(dead_code)]

use tiltcell::catalog;
use tiltcell::highest_weight::Registry;
use tiltcell::tilting::{all_tiltings, TiltingTriple};
use tiltcell::Scalar;

pub const QUASI_HEREDITARY: [&str; 5] = ["trivial", "semisimple2", "a2path", "auslander-dualnumbers", "ut3"];

pub fn setup<S: Scalar>(name: &str) -> (Registry<S>, Vec<TiltingTriple<S>>) {
    let r = catalog::entry::<S>(name).unwrap().registry().unwrap();
    let ts = all_tiltings(&r, 1000).unwrap();
    (r, ts)
}

/// Every vector of length `n` over `F_p`, as integers in `0..p`.
pub fn all_vectors(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(n as u32);
    (0..total).map(move |mut k| {
        let mut v = vec![0; n];
        for x in v.iter_mut() {
            *x = k % p;
            k /= p;
        }
        v
    })
}
