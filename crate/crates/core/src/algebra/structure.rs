//! Jacobson radical, primitive idempotents and simple modules.

use std::sync::Arc;

use crate::algebra::{Algebra, Module};
use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, Subspace};
use crate::random;
use crate::scalar::{FieldKind, Scalar};

/// A complete set of orthogonal primitive idempotents summing to 1,
/// grouped into isomorphism classes of the projectives `A e`.
#[derive(Clone, Debug)]
pub struct PrimitiveIdempotents<S> {
    pub idempotents: Vec<Vec<S>>,
    /// Class index of every idempotent; classes are numbered by first
    /// occurrence.
    pub classes: Vec<usize>,
    /// `Σ (dim L)² = dim A/rad A`, where `dim L` is the class size.
    pub semisimple_dim: usize,
}

impl<S> PrimitiveIdempotents<S> {
    pub fn class_count(&self) -> usize {
        self.classes.iter().max().map_or(0, |m| m + 1)
    }

    /// First idempotent of each class.
    pub fn representatives(&self) -> Vec<&Vec<S>> {
        (0..self.class_count()).map(|c| &self.idempotents[self.classes.iter().position(|&k| k == c).unwrap()]).collect()
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.classes.iter().filter(|&&k| k == class).count()
    }
}

/// A simple module `L = head(A e)` together with its idempotent.
#[derive(Clone, Debug)]
pub struct Simple<S> {
    pub idempotent: Vec<S>,
    pub module: Module<S>,
}

impl<S: Scalar> Algebra<S> {
    /// The Jacobson radical.
    ///
    /// Computed as the iterated trace-form kernel `I_0 ⊇ I_1 ⊇ …`, where
    /// `I_i = {a ∈ I_{i-1} : g_i(ab) = 0 ∀b}` and `g_i(a)` is the trace of
    /// `ã^{p^i}` divided by `p^i` for an integer lift `ã` of the regular
    /// representation. In characteristic 0, or `p > dim A`, only `g_0 = tr`
    /// is needed. The result is certified nilpotent.
    pub fn radical(&self) -> Result<&Subspace<S>> {
        self.radical.get_or_init(|| self.compute_radical()).as_ref().map_err(Clone::clone)
    }

    fn compute_radical(&self) -> Result<Subspace<S>> {
        let n = self.dim();
        let p = match S::field() {
            FieldKind::Rationals => None,
            FieldKind::PrimeField(p) => Some(p),
        };
        let mut levels = 0u32;
        if let Some(p) = p {
            while (p as u128).pow(levels + 1) <= n as u128 {
                levels += 1;
            }
        }
        let mut ideal = Subspace::full(n);
        for level in 0..=levels {
            let basis = ideal.vectors();
            if basis.is_empty() {
                break;
            }
            let mut rows = Vec::new();
            for m in 0..n {
                let b = self.basis_vector(m);
                let row: Vec<S> = basis
                    .iter()
                    .map(|a| {
                        let prod = self.mul(a, &b);
                        match p {
                            None => Ok(self.left_mult(&prod).trace()),
                            Some(p) => lifted_trace_coefficient(&self.left_mult(&prod), p, level),
                        }
                    })
                    .collect::<Result<Vec<S>>>()?;
                rows.push(row);
            }
            let g = Matrix::from_rows(basis.len(), rows);
            let next: Vec<Vec<S>> = g.kernel().iter().map(|x| combine(x, &basis, n)).collect();
            ideal = Subspace::spanned_by(n, next);
        }
        if !self.is_nilpotent_ideal(&ideal) {
            return Err(Error::NotComputable("trace-form kernel is not a nilpotent ideal".into()));
        }
        Ok(ideal)
    }

    fn is_nilpotent_ideal(&self, ideal: &Subspace<S>) -> bool {
        let n = self.dim();
        let gens = ideal.vectors();
        let mut power = ideal.clone();
        while !power.is_zero() {
            let next = Subspace::spanned_by(
                n,
                power.vectors().iter().flat_map(|x| gens.iter().map(move |y| self.mul(x, y))).collect::<Vec<_>>(),
            );
            if next.dim() == power.dim() {
                return false;
            }
            power = next;
        }
        true
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.is_zero())
    }

    /// A complete set of orthogonal primitive idempotents, lifted from a
    /// splitting of `A / rad A`. Fails with `NotSplit` if some corner of
    /// the semisimple quotient is not the ground field.
    pub fn primitive_idempotents(&self) -> Result<&PrimitiveIdempotents<S>> {
        self.idempotents.get_or_init(|| self.compute_idempotents()).as_ref().map_err(Clone::clone)
    }

    fn compute_idempotents(&self) -> Result<PrimitiveIdempotents<S>> {
        let n = self.dim();
        let rad = self.radical()?;
        let q = Subspace::full(n).quotient(rad)?;
        let k = q.dim;
        let section: Vec<Vec<S>> = q.section.column_vectors();
        let bar_left: Vec<Matrix<S>> = (0..k)
            .map(|i| {
                let cols: Vec<Vec<S>> =
                    (0..k).map(|j| q.projection.mul_vec(&self.mul(&section[i], &section[j]))).collect();
                Matrix::from_columns(k, &cols)
            })
            .collect();
        let bar = Algebra::unchecked(format!("{}/rad", self.name), bar_left, q.projection.mul_vec(&self.unit));

        let mut rng = random::seeded(0);
        let mut bar_idempotents = Vec::new();
        split_idempotent(&bar, bar.unit().to_vec(), &mut bar_idempotents, &mut rng)?;

        let mut classes: Vec<usize> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        for (i, e) in bar_idempotents.iter().enumerate() {
            let class = reps.iter().position(|&r| {
                let f = &bar_idempotents[r];
                (0..k).any(|j| !bar.mul(&bar.mul(f, &bar.basis_vector(j)), e).iter().all(|x| x.is_zero()))
            });
            match class {
                Some(c) => classes.push(c),
                None => {
                    classes.push(reps.len());
                    reps.push(i);
                }
            }
        }
        let semisimple_dim: usize = (0..reps.len()).map(|c| classes.iter().filter(|&&x| x == c).count().pow(2)).sum();
        if semisimple_dim != k {
            return Err(Error::NotSplit(format!(
                "simple blocks account for dimension {semisimple_dim} of a {k}-dimensional semisimple quotient"
            )));
        }

        let mut lifted = Vec::new();
        let mut rest = self.unit.clone();
        for e_bar in &bar_idempotents {
            let x = q.section.mul_vec(e_bar);
            let x = self.mul(&self.mul(&rest, &x), &rest);
            let e = self.newton_idempotent(x)?;
            rest = sub(&rest, &e);
            lifted.push(e);
        }
        if rest.iter().any(|x| !x.is_zero()) {
            return Err(Error::NotComputable("lifted idempotents do not sum to 1".into()));
        }
        Ok(PrimitiveIdempotents { idempotents: lifted, classes, semisimple_dim })
    }

    /// `e ← 3e² − 2e³` until `e² = e`.
    fn newton_idempotent(&self, mut e: Vec<S>) -> Result<Vec<S>> {
        let three = S::from_i64(3);
        let two = S::from_i64(2);
        for _ in 0..64 {
            let e2 = self.mul(&e, &e);
            if e2 == e {
                return Ok(e);
            }
            let e3 = self.mul(&e2, &e);
            e = e2.iter().zip(&e3).map(|(a, b)| three.clone() * a.clone() - two.clone() * b.clone()).collect();
        }
        Err(Error::NotComputable("idempotent lifting did not converge".into()))
    }

    /// Simple modules, one per class of primitive idempotents, in class order.
    pub fn simples(self: &Arc<Self>) -> Result<Vec<Simple<S>>> {
        let idem = self.primitive_idempotents()?;
        idem.representatives()
            .into_iter()
            .map(|e| {
                let (p, _) = Module::left_ideal(self, e).module();
                let (l, _) = p.head()?;
                Ok(Simple { idempotent: e.clone(), module: l })
            })
            .collect()
    }
}

fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `(trace(ã^{p^level}) mod p^{level+1}) / p^level` as an element of `F_p`.
fn lifted_trace_coefficient<S: Scalar>(m: &Matrix<S>, p: u64, level: u32) -> Result<S> {
    let modulus = (p as u128).pow(level + 1);
    let n = m.rows();
    let lift: Vec<u128> = m.data().iter().map(|x| x.residue().unwrap() as u128).collect();
    let mul = |a: &[u128], b: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % modulus;
                }
            }
        }
        out
    };
    let mut power = lift;
    for _ in 0..level {
        // raise to the p-th power
        let base = power.clone();
        let mut acc: Option<Vec<u128>> = None;
        let mut b = base;
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => b.clone(),
                    Some(a) => mul(&a, &b),
                });
            }
            e >>= 1;
            if e > 0 {
                b = mul(&b, &b);
            }
        }
        power = acc.unwrap();
    }
    let trace = (0..n).fold(0u128, |t, i| (t + power[i * n + i]) % modulus);
    let scale = (p as u128).pow(level);
    if trace % scale != 0 {
        return Err(Error::NotComputable("lifted trace is not divisible by p^i".into()));
    }
    Ok(S::from_i64((trace / scale) as i64))
}

/// Splits the idempotent `e` of the semisimple algebra `bar` into
/// orthogonal primitive idempotents, appended to `out`.
fn split_idempotent<S: Scalar>(
    bar: &Algebra<S>,
    e: Vec<S>,
    out: &mut Vec<Vec<S>>,
    rng: &mut random::Rng,
) -> Result<()> {
    let k = bar.dim();
    let corner = Subspace::spanned_by(k, (0..k).map(|j| bar.mul(&bar.mul(&e, &bar.basis_vector(j)), &e)));
    if corner.dim() == 1 {
        out.push(e);
        return Ok(());
    }
    let y = zero_divisor(bar, &e, &corner, rng)?;
    // J = corner · y is a proper left ideal of the corner; its right
    // identity f is an idempotent with 0 ≠ f ≠ e.
    let cvecs = corner.vectors();
    let ideal = Subspace::spanned_by(k, cvecs.iter().map(|c| bar.mul(c, &y)));
    let jv = ideal.vectors();
    let r = jv.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for jm in &jv {
        let prods: Vec<Vec<S>> = jv.iter().map(|jk| bar.mul(jm, jk)).collect();
        for coord in 0..k {
            rows.push(prods.iter().map(|p| p[coord].clone()).collect::<Vec<S>>());
            rhs.push(vec![jm[coord].clone()]);
        }
    }
    let sol = Matrix::from_rows(r, rows)
        .solve(&Matrix::from_rows(1, rhs))
        .map_err(|_| Error::NotSplit("semisimple quotient has a left ideal without a right identity".into()))?;
    let f = combine(&sol.particular.column(0), &jv, k);
    let g = sub(&e, &f);
    split_idempotent(bar, f, out, rng)?;
    split_idempotent(bar, g, out, rng)
}

/// A nonzero non-invertible element of the corner `eĀe`.
fn zero_divisor<S: Scalar>(bar: &Algebra<S>, e: &[S], corner: &Subspace<S>, rng: &mut random::Rng) -> Result<Vec<S>> {
    let k = bar.dim();
    let cvecs = corner.vectors();
    let d = cvecs.len();
    let singular = |x: &[S]| Subspace::spanned_by(k, cvecs.iter().map(|c| bar.mul(c, x))).dim() < d;
    let try_candidate = |x: &[S]| -> Option<Vec<S>> {
        if is_zero(x) {
            return None;
        }
        if singular(x) {
            return Some(x.to_vec());
        }
        for lambda in min_poly_roots(bar, e, x) {
            let y: Vec<S> = x.iter().zip(e).map(|(a, b)| a.clone() - lambda.clone() * b.clone()).collect();
            if !is_zero(&y) {
                return Some(y);
            }
        }
        None
    };

    // Central elements first: in a split semisimple algebra they have
    // eigenvalues in the ground field.
    let mut cols = Vec::new();
    for c in &cvecs {
        let comm: Vec<Vec<S>> = cvecs.iter().map(|x| sub(&bar.mul(x, c), &bar.mul(c, x))).collect();
        cols.push(comm.concat());
    }
    let center: Vec<Vec<S>> =
        Matrix::from_columns(k * d, &cols).kernel().iter().map(|z| combine(z, &cvecs, k)).collect();
    let mut candidates: Vec<Vec<S>> = center;
    candidates.extend(cvecs.iter().cloned());
    for i in 0..d {
        for j in 0..d {
            candidates.push(bar.mul(&cvecs[i], &cvecs[j]));
            if i < j {
                candidates.push(cvecs[i].iter().zip(&cvecs[j]).map(|(a, b)| a.clone() + b.clone()).collect());
            }
        }
    }
    for x in &candidates {
        if let Some(y) = try_candidate(x) {
            return Ok(y);
        }
    }
    for _ in 0..200 {
        let c = random::vector::<S>(rng, d);
        let x = combine(&c, &cvecs, k);
        if let Some(y) = try_candidate(&x) {
            return Ok(y);
        }
    }
    Err(Error::NotSplit(format!("no zero divisor found in a {d}-dimensional corner of the semisimple quotient")))
}

/// Roots of the minimal polynomial of `x` in the corner algebra with unit `e`.
fn min_poly_roots<S: Scalar>(bar: &Algebra<S>, e: &[S], x: &[S]) -> Vec<S> {
    let k = bar.dim();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = bar.mul(powers.last().unwrap(), x);
        let span = Matrix::from_columns(k, &powers);
        if let Ok(sol) = span.solve(&Matrix::from_columns(k, std::slice::from_ref(&next))) {
            // x^d = Σ c_i x^i  =>  t^d - Σ c_i t^i
            let mut poly: Vec<S> = sol.particular.column(0).into_iter().map(|c| -c).collect();
            poly.push(S::one());
            return S::roots(&poly);
        }
        powers.push(next);
        if powers.len() > k + 1 {
            return Vec::new();
        }
    }
}
