//! Seeded randomness shared by every randomized step.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{FieldKind, Scalar};

pub type Rng = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random field element: uniform over `F_p`, a small integer over Q.
pub fn scalar<S: Scalar>(rng: &mut Rng) -> S {
    match S::field() {
        FieldKind::PrimeField(p) => S::from_i64(rng.gen_range(0..p) as i64),
        FieldKind::Rationals => S::from_i64(rng.gen_range(-9..=9)),
    }
}

pub fn vector<S: Scalar>(rng: &mut Rng, len: usize) -> Vec<S> {
    (0..len).map(|_| scalar(rng)).collect()
}
