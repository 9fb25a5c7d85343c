use crate::error::{Error, Result};
use crate::linalg::matrix::Matrix;
use crate::scalar::Scalar;

/// A subspace of `K^n`, stored as the nonzero rows of its RREF basis.
///
/// Equal subspaces have identical representations, so `==` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Matrix<S>,
    pivots: Vec<usize>,
}

/// Coordinates on `V / W` for subspaces `W ⊆ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<S> {
    /// `k × n`: sends a vector of `V` to its class in `K^k`.
    pub projection: Matrix<S>,
    /// `n × k`: columns are representatives in `V` of the quotient basis.
    pub section: Matrix<S>,
    pub dim: usize,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn spanned_by(ambient: usize, vectors: impl IntoIterator<Item = Vec<S>>) -> Self {
        Self::from_row_matrix(&Matrix::from_rows(ambient, vectors))
    }

    pub fn from_row_matrix(m: &Matrix<S>) -> Self {
        let rref = m.rref();
        let rank = rref.rank();
        let basis = rref.matrix.submatrix(0..rank, 0..m.cols());
        Subspace { ambient: m.cols(), basis, pivots: rref.pivots }
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix<S>) -> Self {
        Self::from_row_matrix(&m.transpose())
    }

    pub fn kernel_of(m: &Matrix<S>) -> Self {
        Self::spanned_by(m.cols(), m.kernel())
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Rows are the canonical basis.
    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<S>> {
        self.basis.row_vectors().collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its canonical projection onto the subspace; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *o = o.clone() - c.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates with respect to the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn vector_from_coordinates(&self, coords: &[S]) -> Vec<S> {
        crate::linalg::combine(coords, &self.vectors(), self.ambient)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_row_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        // x V - y W = 0  <=>  xV lies in both.
        let stacked = self.basis.vstack(&(-&other.basis)).transpose();
        let k = self.dim();
        let vecs: Vec<Vec<S>> = stacked
            .kernel()
            .into_iter()
            .map(|z| crate::linalg::combine(&z[..k], &self.vectors(), self.ambient))
            .collect();
        Ok(Self::spanned_by(self.ambient, vecs))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis.row_vectors().all(|v| other.contains(&v))
    }

    /// Quotient `self / sub`; `sub` must be contained in `self`.
    pub fn quotient(&self, sub: &Self) -> Result<Quotient<S>> {
        self.check(sub)?;
        if !sub.is_subspace_of(self) {
            return Err(Error::InvalidInput("quotient by a subspace that is not contained".into()));
        }
        let n = self.ambient;
        let residues = Self::spanned_by(n, self.basis.row_vectors().map(|v| sub.reduce(&v)));
        let k = residues.dim();
        let projection = Matrix::from_fn(k, n, |r, c| {
            let mut e = vec![S::zero(); n];
            e[c] = S::one();
            sub.reduce(&e)[residues.pivots[r]].clone()
        });
        let section = residues.basis.transpose();
        Ok(Quotient { projection, section, dim: k })
    }

    /// `{x : <x, v> = 0 for all v}` under the standard pairing.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        Self::kernel_of(&self.basis)
    }

    /// Image under a linear map given as an `m × n` matrix.
    pub fn image_under(&self, map: &Matrix<S>) -> Self {
        Self::spanned_by(map.rows(), self.basis.row_vectors().map(|v| map.mul_vec(&v)))
    }

    /// Preimage under a linear map given as an `m × n` matrix.
    pub fn preimage_under(&self, map: &Matrix<S>) -> Self {
        // x with map·x in self  <=>  annihilator rows kill map·x.
        let ann = self.annihilator();
        if ann.is_zero() {
            return Self::full(map.cols());
        }
        Self::kernel_of(&(&ann.basis * map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    fn v(x: &[i64]) -> Vec<Q> {
        x.iter().map(|&a| Q::from_i64(a)).collect()
    }

    #[test]
    fn lattice_examples() {
        let a = Subspace::spanned_by(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::spanned_by(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.sum(&Subspace::zero(3)).unwrap(), a);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::spanned_by(3, vec![v(&[0, 1, 0])]));
        assert!(a.sum(&b).unwrap().is_full());
        assert_eq!(a.intersect(&Subspace::zero(4)), Err(Error::DimensionMismatch { expected: 3, found: 4 }));
    }

    #[test]
    fn canonical_representation() {
        let a = Subspace::spanned_by(3, vec![v(&[1, 1, 0]), v(&[1, -1, 0])]);
        let b = Subspace::spanned_by(3, vec![v(&[2, 0, 0]), v(&[0, 3, 0]), v(&[5, 5, 0])]);
        assert_eq!(a, b);
    }

    #[test]
    fn quotient_projection_and_section() {
        let full = Subspace::<Q>::full(3);
        let line = Subspace::spanned_by(3, vec![v(&[1, 1, 1])]);
        let q = full.quotient(&line).unwrap();
        assert_eq!(q.dim, 2);
        assert!((&q.projection * &Matrix::from_columns(3, &[v(&[1, 1, 1])])).is_zero());
        assert_eq!(&q.projection * &q.section, Matrix::identity(2));
        assert!(line.quotient(&full).is_err());
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::spanned_by(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 7, 9]);
        let c = s.coordinates(&x).unwrap();
        assert_eq!(s.vector_from_coordinates(&c), x);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn preimage_and_image() {
        let m = Matrix::<Q>::from_i64_rows(&[&[1, 0, 0], &[0, 0, 0]]);
        let target = Subspace::<Q>::zero(2);
        assert_eq!(target.preimage_under(&m), Subspace::spanned_by(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]));
        assert_eq!(Subspace::full(3).image_under(&m), Subspace::spanned_by(2, vec![v(&[1, 0])]));
    }
}
