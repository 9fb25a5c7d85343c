use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Coordinates with respect to an arbitrary (not necessarily echelon)
/// linearly independent family of vectors.
#[derive(Clone, Debug)]
pub struct Coordinates<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
    rows: Vec<usize>,
    inverse: Matrix<S>,
}

impl<S: Scalar> Coordinates<S> {
    /// Fails with `InvalidInput` if the vectors are linearly dependent.
    pub fn new(ambient: usize, basis: Vec<Vec<S>>) -> Result<Self> {
        let d = basis.len();
        let transposed = Matrix::from_rows(ambient, basis.iter().cloned());
        let rows = transposed.rref().pivots;
        if rows.len() != d {
            return Err(Error::InvalidInput(format!("{d} vectors span only {} dimensions", rows.len())));
        }
        let square = Matrix::from_fn(d, d, |r, c| basis[c][rows[r]].clone());
        let inverse = square.inverse().expect("pivot rows give an invertible minor");
        Ok(Coordinates { ambient, basis, rows, inverse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if v.len() != self.ambient {
            return None;
        }
        let restricted: Vec<S> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let x = self.inverse.mul_vec(&restricted);
        let back = crate::linalg::combine(&x, &self.basis, self.ambient);
        (back == v).then_some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| Rational::from_i64(a)).collect()
    }

    #[test]
    fn coordinates_in_a_skew_basis() {
        let c = Coordinates::new(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(c.coordinates(&v(&[2, 5, 3])), Some(v(&[2, 3])));
        assert_eq!(c.coordinates(&v(&[1, 0, 0])), None);
        assert!(Coordinates::new(2, vec![v(&[1, 2]), v(&[2, 4])]).is_err());
    }
}
