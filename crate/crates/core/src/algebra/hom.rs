use crate::algebra::{Module, Morphism};
use crate::error::Result;
use crate::linalg::{combine, Matrix, Subspace};
use crate::random::{self, Rng};
use crate::scalar::Scalar;

/// `Hom_A(M, N)` as a subspace of flattened `dim N × dim M` matrices.
///
/// The basis is the RREF basis of that subspace, so its order is canonical.
#[derive(Clone, Debug)]
pub struct HomSpace<S> {
    pub source: Module<S>,
    pub target: Module<S>,
    pub space: Subspace<S>,
}

impl<S: Scalar> HomSpace<S> {
    /// Solves the intertwining equations `X ρ_M(g) = ρ_N(g) X` for the
    /// algebra generators `g`, restricting the solution space one generator
    /// at a time.
    pub fn compute(source: &Module<S>, target: &Module<S>) -> Result<Self> {
        source.same_algebra(target)?;
        let (s, t) = (source.dim(), target.dim());
        let len = s * t;
        let mut basis: Option<Vec<Vec<S>>> = None;
        for &g in source.algebra().generators() {
            if basis.as_ref().is_some_and(|b| b.is_empty()) {
                break;
            }
            let dm = source.action(g);
            let dn = target.action(g);
            let columns: Vec<Vec<S>> = match &basis {
                None => (0..t)
                    .flat_map(|a| (0..s).map(move |b| (a, b)))
                    .map(|(a, b)| {
                        // E_ab ρ_M - ρ_N E_ab
                        let mut r = vec![S::zero(); len];
                        for c in 0..s {
                            r[a * s + c] = dm.get(b, c).clone();
                        }
                        for row in 0..t {
                            let v = r[row * s + b].clone() - dn.get(row, a).clone();
                            r[row * s + b] = v;
                        }
                        r
                    })
                    .collect(),
                Some(vs) => vs
                    .iter()
                    .map(|v| {
                        let x = Matrix::from_flat(t, s, v.clone());
                        (&(&x * dm) - &(dn * &x)).into_data()
                    })
                    .collect(),
            };
            let kernel = Matrix::from_columns(len, &columns).kernel();
            let current: Vec<Vec<S>> = match &basis {
                None => kernel,
                Some(vs) => kernel.iter().map(|k| combine(k, vs, len)).collect(),
            };
            basis = Some(current);
        }
        let space = match basis {
            None => Subspace::full(len),
            Some(vs) => Subspace::spanned_by(len, vs),
        };
        Ok(HomSpace { source: source.clone(), target: target.clone(), space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    fn shape(&self) -> (usize, usize) {
        (self.target.dim(), self.source.dim())
    }

    pub fn matrices(&self) -> Vec<Matrix<S>> {
        let (t, s) = self.shape();
        self.space.vectors().into_iter().map(|v| Matrix::from_flat(t, s, v)).collect()
    }

    pub fn basis(&self) -> Vec<Morphism<S>> {
        self.matrices()
            .into_iter()
            .map(|matrix| Morphism { source: self.source.clone(), target: self.target.clone(), matrix })
            .collect()
    }

    pub fn morphism(&self, matrix: Matrix<S>) -> Morphism<S> {
        Morphism { source: self.source.clone(), target: self.target.clone(), matrix }
    }

    pub fn contains(&self, m: &Matrix<S>) -> bool {
        m.shape() == self.shape() && self.space.contains(m.data())
    }

    /// Coordinates in the canonical basis.
    pub fn coordinates(&self, m: &Matrix<S>) -> Option<Vec<S>> {
        if m.shape() != self.shape() {
            return None;
        }
        self.space.coordinates(m.data())
    }

    pub fn element(&self, coords: &[S]) -> Morphism<S> {
        let (t, s) = self.shape();
        self.morphism(Matrix::from_flat(t, s, self.space.vector_from_coordinates(coords)))
    }

    pub fn random_element(&self, rng: &mut Rng) -> Morphism<S> {
        let c = random::vector(rng, self.dim());
        self.element(&c)
    }
}

pub fn hom_space<S: Scalar>(source: &Module<S>, target: &Module<S>) -> Result<HomSpace<S>> {
    HomSpace::compute(source, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{Rational, F3};

    /// Brute force over F_3: enumerate every 1x2 matrix and keep intertwiners.
    #[test]
    fn hom_matches_enumeration_over_f3() {
        let a = catalog::a2path::<F3>();
        let reg = Module::regular(a.clone());
        let p1 = Module::left_ideal(&a, &a.basis_vector(0)).module().0;
        let simples = a.simples().unwrap();
        for l in simples.iter().map(|s| &s.module) {
            let h = hom_space(l, &p1).unwrap();
            let mut count = 0;
            for x in 0..3 {
                for y in 0..3 {
                    let m = Matrix::from_flat(2, 1, vec![F3::from_i64(x), F3::from_i64(y)]);
                    if (Morphism { source: l.clone(), target: p1.clone(), matrix: m }).intertwines() {
                        count += 1;
                    }
                }
            }
            assert_eq!(3usize.pow(h.dim() as u32), count);
        }
        assert_eq!(hom_space(&reg, &reg).unwrap().dim(), 3);
    }

    #[test]
    fn identity_in_end_and_simple_homs() {
        let a = catalog::a2path::<Rational>();
        let reg = Module::regular(a.clone());
        let end = hom_space(&reg, &reg).unwrap();
        assert!(end.contains(&Matrix::identity(3)));
        let simples = a.simples().unwrap();
        assert_eq!(simples.len(), 2);
        assert_eq!(hom_space(&simples[0].module, &simples[1].module).unwrap().dim(), 0);
        assert_eq!(hom_space(&simples[0].module, &simples[0].module).unwrap().dim(), 1);
    }
}
