//! Tuples of matrices up to simultaneous conjugation: generation of the full
//! matrix algebra, cyclic vectors, trace-of-words invariants, centralizers,
//! and the image of `so`-tuples under the spin representation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;


use crate::error::{Error, Result};
use crate::lie::QuotientLieAlgebra;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::ring::{Coefficient, Rational};
use crate::spinor::{spin_image_matrix, SpinorModule, WittDecomposition};

/// `g` square matrices of a common size `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixTuple {
    n: usize,
    mats: Vec<Matrix<Rational>>,
}

impl MatrixTuple {
    pub fn new(n: usize, mats: Vec<Matrix<Rational>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix size must be positive".into()));
        }
        if let Some((k, m)) = mats.iter().enumerate().find(|(_, m)| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch(format!("X_{} is {}×{}, expected {n}×{n}", k + 1, m.rows(), m.cols())));
        }
        Ok(MatrixTuple { n, mats })
    }

    pub fn zero(g: usize, n: usize) -> Self {
        MatrixTuple { n, mats: vec![Matrix::zeros(n, n); g] }
    }

    pub fn g(&self) -> usize {
        self.mats.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrices(&self) -> &[Matrix<Rational>] {
        &self.mats
    }

    /// `(P X_i P^{-1})_i`; `p_inv` must be the inverse of `p`.
    pub fn conjugate(&self, p: &Matrix<Rational>, p_inv: &Matrix<Rational>) -> Result<MatrixTuple> {
        if (p * p_inv) != Matrix::identity(self.n) {
            return Err(Error::Precondition("conjugating matrices are not inverse to each other".into()));
        }
        MatrixTuple::new(self.n, self.mats.iter().map(|x| &(p * x) * p_inv).collect())
    }

    fn same_shape(&self, other: &MatrixTuple) -> Result<()> {
        if self.g() != other.g() || self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "tuples of shape (g={}, n={}) and (g={}, n={})",
                self.g(),
                self.n,
                other.g(),
                other.n
            )));
        }
        Ok(())
    }
}

/// Growth of the subalgebra generated by a tuple.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpanReport {
    pub dim: usize,
    /// Number of enlargement rounds before the span stabilized.
    pub rounds: usize,
}

/// Span of all words in the `X_i`, grown by left multiplication.
pub fn algebra_span(t: &MatrixTuple) -> SpanReport {
    let n = t.n();
    let mut span = Subspace::new(n * n);
    let mut frontier: Vec<Matrix<Rational>> = Vec::new();
    for m in std::iter::once(Matrix::identity(n)).chain(t.matrices().iter().cloned()) {
        if span.insert(m.as_slice()) {
            frontier.push(m);
        }
    }
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        let mut next = Vec::new();
        for y in &frontier {
            for x in t.matrices() {
                let p = x * y;
                if span.insert(p.as_slice()) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    SpanReport { dim: span.dim(), rounds }
}

/// Whether the `X_i` generate all of `M_n` (equivalently, `k^n` is simple).
pub fn generates_full_algebra(t: &MatrixTuple) -> bool {
    algebra_span(t).dim == t.n() * t.n()
}

/// Whether the words in the `X_i` applied to `v` span `k^n`.
pub fn is_cyclic_vector(t: &MatrixTuple, v: &[Rational]) -> Result<bool> {
    if v.len() != t.n() {
        return Err(Error::DimensionMismatch(format!("vector of length {} for n = {}", v.len(), t.n())));
    }
    let mut span = Subspace::new(t.n());
    let mut frontier = Vec::new();
    if span.insert(v) {
        frontier.push(v.to_vec());
    }
    while let Some(w) = frontier.pop() {
        for x in t.matrices() {
            let u = x.mul_vec(&w);
            if span.insert(&u) {
                frontier.push(u);
            }
        }
    }
    Ok(span.dim() == t.n())
}

/// Traces of all words of length at most `L` (letters are 1-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceFingerprint {
    pub max_len: usize,
    /// Ordered by word length, then lexicographically.
    pub traces: Vec<(Vec<usize>, Rational)>,
}

pub fn trace_fingerprint(t: &MatrixTuple, max_len: usize) -> TraceFingerprint {
    // Words are multiplied as integer matrices d·X_i, with d a common
    // denominator; tr(w) is then recovered as tr(d^|w| w) / d^|w|.
    let n = t.n();
    let d = t
        .matrices()
        .iter()
        .flat_map(|x| x.as_slice())
        .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<Vec<BigInt>> = t
        .matrices()
        .iter()
        .map(|x| x.as_slice().iter().map(|c| (c * Rational::from_integer(d.clone())).to_integer()).collect())
        .collect();
    let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
        let mut out = vec![<BigInt as num_traits::Zero>::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = &a[i * n + k];
                if num_traits::Zero::is_zero(x) {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += x * &b[k * n + j];
                }
            }
        }
        out
    };
    let identity: Vec<BigInt> = (0..n * n).map(|e| BigInt::from(u8::from(e % (n + 1) == 0))).collect();
    let mut by_word: BTreeMap<(usize, Vec<usize>), Rational> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, Vec<BigInt>)> = vec![(Vec::new(), identity)];
    while let Some((word, prod)) = stack.pop() {
        let tr: BigInt = (0..n).map(|i| &prod[i * (n + 1)]).sum();
        let scale = num_traits::pow(d.clone(), word.len());
        by_word.insert((word.len(), word.clone()), Rational::new(tr, scale));
        if word.len() < max_len {
            for (i, x) in scaled.iter().enumerate() {
                let mut w = word.clone();
                w.push(i + 1);
                stack.push((w, mul(&prod, x)));
            }
        }
    }
    TraceFingerprint { max_len, traces: by_word.into_iter().map(|((_, w), c)| (w, c)).collect() }
}

/// Result of comparing two tuples by trace invariants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SEquivalence {
    pub equivalent: bool,
    pub max_len: usize,
    /// First word (in fingerprint order) whose traces differ.
    pub counterexample: Option<Vec<usize>>,
}

/// Compares semisimplifications through traces of words up to length `L`
/// (`n²` when `None`).
pub fn s_equivalent(a: &MatrixTuple, b: &MatrixTuple, max_len: Option<usize>) -> Result<SEquivalence> {
    a.same_shape(b)?;
    let l = max_len.unwrap_or(a.n() * a.n());
    let fa = trace_fingerprint(a, l);
    let fb = trace_fingerprint(b, l);
    let counterexample = fa.traces.iter().zip(&fb.traces).find(|(x, y)| x.1 != y.1).map(|(x, _)| x.0.clone());
    Ok(SEquivalence { equivalent: counterexample.is_none(), max_len: l, counterexample })
}

/// Dimension of `{Y ∈ span(h) : [Y, X_i] = 0 for all i}`.
pub fn centralizer_dim(t: &MatrixTuple, h: &[Matrix<Rational>]) -> Result<usize> {
    let n = t.n();
    if let Some(bad) = h.iter().position(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::DimensionMismatch(format!("h_{} is not {n}×{n}", bad + 1)));
    }
    let mut span = Subspace::new(n * n);
    for m in h {
        span.insert(m.as_slice());
    }
    if let Some(bad) = t.matrices().iter().position(|x| !span.contains(x.as_slice())) {
        return Err(Error::NotInSpan(format!("X_{} is not in the span of the given Lie algebra", bad + 1)));
    }
    // Reduce h to a basis so the answer does not depend on redundant spanning sets.
    let basis: Vec<Matrix<Rational>> = {
        let mut s = Subspace::new(n * n);
        h.iter().filter(|m| s.insert(m.as_slice())).cloned().collect()
    };
    let k = basis.len();
    let mut rows = vec![vec![Rational::zero(); k]; t.g() * n * n];
    for (c, y) in basis.iter().enumerate() {
        for (i, x) in t.matrices().iter().enumerate() {
            let br = y.commutator(x);
            for (e, v) in br.as_slice().iter().enumerate() {
                rows[i * n * n + e][c] = v.clone();
            }
        }
    }
    Ok(kernel(&rows, k).len())
}

/// Images of `L′_q` elements (coordinates in the `ᾱ_ij` basis of the split
/// form) as operators on the spinor module.
pub fn spin_image_tuple(elements: &[Vec<Rational>], witt: WittDecomposition) -> Result<MatrixTuple> {
    let module = SpinorModule::new(witt);
    let mats = elements.iter().map(|x| spin_image_matrix(&module, x)).collect::<Result<Vec<_>>>()?;
    MatrixTuple::new(module.dim(), mats)
}

/// `[ŝ(x), ŝ(y)] = ŝ([x, y])` for the given elements, exactly.
pub fn spin_image_respects_brackets(
    elements: &[Vec<Rational>],
    witt: WittDecomposition,
    lie: &QuotientLieAlgebra<Rational>,
) -> Result<bool> {
    let module = SpinorModule::new(witt);
    for x in elements {
        for y in elements {
            let lhs = spin_image_matrix(&module, x)?.commutator(&spin_image_matrix(&module, y)?);
            let rhs = spin_image_matrix(&module, &lie.bracket(x, y))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sl_2` spanned by `E`, `F`, `H`.
pub fn sl2_basis() -> Vec<Matrix<Rational>> {
    let m = |rows: [[i64; 2]; 2]| {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect())
    };
    vec![m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]]), m([[1, 0], [0, -1]])]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::structure_constants;
    use crate::ring::rat;

    fn m2(rows: [[i64; 2]; 2]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    fn nilpotent_pair() -> MatrixTuple {
        MatrixTuple::new(2, vec![m2([[0, 1], [0, 0]]), m2([[0, 0], [1, 0]])]).unwrap()
    }

    #[test]
    fn generation_examples() {
        assert!(generates_full_algebra(&nilpotent_pair()));
        let id = MatrixTuple::new(2, vec![m2([[1, 0], [0, 1]]); 2]).unwrap();
        assert!(!generates_full_algebra(&id));
        assert_eq!(algebra_span(&id).dim, 1);
        let diag = MatrixTuple::new(2, vec![m2([[1, 0], [0, 2]]), m2([[3, 0], [0, 4]])]).unwrap();
        assert!(!generates_full_algebra(&diag));
    }

    #[test]
    fn cyclic_examples() {
        assert!(is_cyclic_vector(&nilpotent_pair(), &[rat(1, 1), rat(0, 1)]).unwrap());
        assert!(!is_cyclic_vector(&nilpotent_pair(), &[rat(0, 1), rat(0, 1)]).unwrap());
        let diag = MatrixTuple::new(2, vec![m2([[1, 0], [0, 2]]), m2([[3, 0], [0, 4]])]).unwrap();
        assert!(!is_cyclic_vector(&diag, &[rat(1, 1), rat(0, 1)]).unwrap());
        assert!(is_cyclic_vector(&diag, &[rat(1, 1)]).is_err());
    }

    #[test]
    fn s_equivalence_examples() {
        let a = MatrixTuple::new(2, vec![m2([[1, 0], [0, 2]]), m2([[0, 0], [0, 0]])]).unwrap();
        let b = MatrixTuple::new(2, vec![m2([[2, 0], [0, 1]]), m2([[0, 0], [0, 0]])]).unwrap();
        assert!(s_equivalent(&a, &b, None).unwrap().equivalent);
        let nil = MatrixTuple::new(2, vec![m2([[0, 1], [0, 0]]), m2([[0, 0], [0, 0]])]).unwrap();
        assert!(s_equivalent(&nil, &MatrixTuple::zero(2, 2), None).unwrap().equivalent);
        let r = s_equivalent(&a, &MatrixTuple::zero(2, 2), None).unwrap();
        assert_eq!(r.counterexample, Some(vec![1]));
    }

    #[test]
    fn fingerprint_order() {
        let f = trace_fingerprint(&nilpotent_pair(), 2);
        let words: Vec<Vec<usize>> = f.traces.iter().map(|(w, _)| w.clone()).collect();
        assert_eq!(words, vec![vec![], vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(f.traces[0].1, rat(2, 1));
    }

    #[test]
    fn centralizers() {
        let h = sl2_basis();
        assert_eq!(centralizer_dim(&nilpotent_pair(), &h).unwrap(), 0);
        assert_eq!(centralizer_dim(&MatrixTuple::zero(2, 2), &h).unwrap(), 3);
        let t = MatrixTuple::new(2, vec![m2([[1, 0], [0, -1]]), m2([[0, 0], [0, 0]])]).unwrap();
        assert_eq!(centralizer_dim(&t, &h).unwrap(), 1);
        let outside = MatrixTuple::new(2, vec![m2([[1, 0], [0, 1]])]).unwrap();
        assert!(matches!(centralizer_dim(&outside, &h), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn spin_images() {
        let witt = WittDecomposition::odd(1);
        let zero = spin_image_tuple(&vec![vec![rat(0, 1); 3]; 2], witt).unwrap();
        assert_eq!(zero, MatrixTuple::zero(2, 2));
        // α_12 = n_1 p_1 is h_1 + 1/2; its traceless image is diag(−1/2, 1/2).
        let h = spin_image_tuple(&[vec![rat(1, 1), rat(0, 1), rat(0, 1)]], witt).unwrap();
        assert_eq!(h.matrices()[0], Matrix::diagonal(&[rat(-1, 2), rat(1, 2)]));
        let pair = vec![vec![rat(0, 1), rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(0, 1), rat(1, 1)]];
        assert!(generates_full_algebra(&spin_image_tuple(&pair, witt).unwrap()));
        let lie = structure_constants(&witt.space()).unwrap();
        assert!(spin_image_respects_brackets(&pair, witt, &lie).unwrap());
    }
}
