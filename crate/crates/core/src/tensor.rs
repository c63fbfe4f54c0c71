//! Finite-dimensional algebras given by multiplication tensors.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{Coefficient, Rational, Specialize};

/// An algebra structure on a free module with basis `0..dim`:
/// `x_i · x_j = Σ_k c_{ij}^k x_k`, with a distinguished identity basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraTensor<C> {
    dim: usize,
    identity: usize,
    /// `table[i][j]` lists the nonzero `(k, c_{ij}^k)` by ascending `k`.
    table: Vec<Vec<Vec<(usize, C)>>>,
}

impl<C: Coefficient> AlgebraTensor<C> {
    /// Builds the tensor from sparse `(i, j, k, c)` entries. Repeated
    /// entries add up; zeros are dropped.
    pub fn from_entries(dim: usize, identity: usize, entries: impl IntoIterator<Item = (usize, usize, usize, C)>) -> Result<Self> {
        if identity >= dim {
            return Err(Error::DimensionMismatch(format!("identity index {identity} outside basis of size {dim}")));
        }
        let mut dense: Vec<Vec<Vec<C>>> = vec![vec![Vec::new(); dim]; dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!("entry ({i}, {j}, {k}) outside basis of size {dim}")));
            }
            let cell = &mut dense[i][j];
            if cell.is_empty() {
                *cell = vec![C::zero(); dim];
            }
            cell[k] = cell[k].clone() + c;
        }
        let table = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|cell| cell.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
                    .collect()
            })
            .collect();
        Ok(AlgebraTensor { dim, identity, table })
    }

    /// Builds the tensor from a function giving `x_i·x_j` as sparse coordinates.
    pub fn from_fn(dim: usize, identity: usize, mut product: impl FnMut(usize, usize) -> Vec<(usize, C)>) -> Result<Self> {
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                entries.extend(product(i, j).into_iter().map(|(k, c)| (i, j, k, c)));
            }
        }
        AlgebraTensor::from_entries(dim, identity, entries)
    }

    /// `E_{ab}·E_{cd}` for elementary matrices indexed by `a·n + b`.
    fn elementary_product(n: usize, i: usize, j: usize) -> Vec<(usize, C)> {
        let (a, b) = (i / n, i % n);
        let (c, d) = (j / n, j % n);
        if b == c {
            vec![(a * n + d, C::one())]
        } else {
            Vec::new()
        }
    }

    /// `M_n` in the basis `{1, E_{ab} : (a, b) ≠ (n−1, n−1)}`, so that the
    /// identity is basis vector 0.
    pub fn full_matrix_algebra_unital(n: usize) -> Self {
        let dim = n * n;
        let last = dim - 1;
        // Basis vector 0 is the identity; basis vector k ≥ 1 is E_{k−1}.
        // E_last = 1 − Σ_{a<n−1} E_{aa}.
        let to_new = |v: Vec<(usize, C)>| -> Vec<(usize, C)> {
            let mut out = vec![C::zero(); dim];
            for (e, c) in v {
                if e == last {
                    out[0] = out[0].clone() + c.clone();
                    for a in 0..n - 1 {
                        let idx = a * n + a + 1;
                        out[idx] = out[idx].clone() - c.clone();
                    }
                } else {
                    out[e + 1] = out[e + 1].clone() + c;
                }
            }
            out.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        };
        let as_old = |k: usize| -> Vec<(usize, C)> {
            if k == 0 {
                (0..n).map(|a| (a * n + a, C::one())).collect()
            } else {
                vec![(k - 1, C::one())]
            }
        };
        AlgebraTensor::from_fn(dim, 0, |i, j| {
            let mut prod = vec![C::zero(); dim];
            for (x, cx) in as_old(i) {
                for (y, cy) in as_old(j) {
                    for (z, cz) in Self::elementary_product(n, x, y) {
                        prod[z] = prod[z].clone() + cx.clone() * cy.clone() * cz;
                    }
                }
            }
            to_new(prod.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
        })
        .expect("indices are in range")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Sparse `x_i · x_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, C)] {
        &self.table[i][j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> C {
        self.table[i][j].iter().find(|(kk, _)| *kk == k).map_or_else(C::zero, |(_, c)| c.clone())
    }

    /// All nonzero entries `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &C)> {
        self.table.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().flat_map(move |(j, cell)| cell.iter().map(move |(k, c)| (i, j, *k, c)))
        })
    }

    /// Product of two coordinate vectors.
    pub fn mul(&self, x: &[C], y: &[C]) -> Vec<C> {
        let mut out = vec![C::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].clone() + xi.clone() * yj.clone() * c.clone();
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<C> {
        let mut v = vec![C::zero(); self.dim];
        v[i] = C::one();
        v
    }

    /// Checks that the identity basis vector is a two-sided unit.
    pub fn check_unital(&self) -> Result<()> {
        for j in 0..self.dim {
            let expect = [(j, C::one())];
            if self.table[self.identity][j] != expect {
                return Err(Error::NonUnital(format!("x_{} · x_{j} ≠ x_{j}", self.identity)));
            }
            if self.table[j][self.identity] != expect {
                return Err(Error::NonUnital(format!("x_{j} · x_{} ≠ x_{j}", self.identity)));
            }
        }
        Ok(())
    }

    /// First triple `(i, j, k)` violating associativity on basis vectors.
    pub fn associativity_defect(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                for k in 0..self.dim {
                    let left = self.mul(&ij, &self.basis_vector(k));
                    let jk = self.mul(&self.basis_vector(j), &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &jk);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Matrix of left multiplication by `x_i` (columns indexed by the input).
    pub fn left_multiplication(&self, i: usize) -> Matrix<C> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in &self.table[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> AlgebraTensor<D> {
        AlgebraTensor::from_entries(self.dim, self.identity, self.entries().map(|(i, j, k, c)| (i, j, k, f(c))))
            .expect("same shape")
    }
}

impl<C: Specialize> AlgebraTensor<C> {
    /// Substitutes `t = c` in every structure constant.
    pub fn specialize(&self, c: &Rational) -> Result<AlgebraTensor<Rational>> {
        let mut entries = Vec::new();
        for (i, j, k, x) in self.entries() {
            let v = x.eval_at(c).ok_or_else(|| Error::Pole { blade: format!("c[{i}][{j}][{k}]"), at: c.to_string() })?;
            entries.push((i, j, k, v));
        }
        AlgebraTensor::from_entries(self.dim, self.identity, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_unital_and_associative() {
        let t = AlgebraTensor::<Rational>::full_matrix_algebra_unital(2);
        assert_eq!(t.dim(), 4);
        t.check_unital().unwrap();
        assert_eq!(t.associativity_defect(), None);
    }

    #[test]
    fn non_unital_detected() {
        let t = AlgebraTensor::<Rational>::from_entries(2, 0, [(0, 0, 0, Rational::one())]).unwrap();
        assert!(matches!(t.check_unital(), Err(Error::NonUnital(_))));
    }
}
