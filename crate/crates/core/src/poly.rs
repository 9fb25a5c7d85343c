//! Dense univariate polynomials over a [`Scalar`], coefficients stored
//! constant term first. Only what root finding and minimal polynomials need.

use crate::scalar::Scalar;

/// Drops trailing zero coefficients; the zero polynomial is the empty vector.
pub fn trimmed<S: Scalar>(p: &[S]) -> Vec<S> {
    let mut v = p.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn eval<S: Scalar>(p: &[S], x: &S) -> S {
    p.iter().rev().fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
}

pub fn monic<S: Scalar>(p: &[S]) -> Vec<S> {
    let p = trimmed(p);
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero leading coefficient");
            p.iter().map(|c| c.clone() * inv.clone()).collect()
        }
    }
}

pub fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let n = a.len().max(b.len());
    let out: Vec<S> =
        (0..n).map(|i| a.get(i).cloned().unwrap_or_else(S::zero) - b.get(i).cloned().unwrap_or_else(S::zero)).collect();
    trimmed(&out)
}

pub fn mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trimmed(&out)
}

/// Quotient and remainder; panics on division by the zero polynomial.
pub fn div_rem<S: Scalar>(a: &[S], b: &[S]) -> (Vec<S>, Vec<S>) {
    let b = trimmed(b);
    let lead_inv = b.last().expect("division by zero polynomial").inv().unwrap();
    let mut rem = trimmed(a);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![S::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap().clone() * lead_inv.clone();
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] = rem[shift + i].clone() - factor.clone() * c.clone();
        }
        quot[shift] = factor;
        rem = trimmed(&rem);
    }
    (trimmed(&quot), rem)
}

pub fn gcd<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    let mut a = trimmed(a);
    let mut b = trimmed(b);
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `base^e mod modulus`.
pub fn pow_mod<S: Scalar>(base: &[S], mut e: u128, modulus: &[S]) -> Vec<S> {
    let mut acc = vec![S::one()];
    let mut b = div_rem(base, modulus).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = div_rem(&mul(&acc, &b), modulus).1;
        }
        b = div_rem(&mul(&b, &b), modulus).1;
        e >>= 1;
    }
    div_rem(&acc, modulus).1
}
