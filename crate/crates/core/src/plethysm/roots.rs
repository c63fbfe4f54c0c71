use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{rat, Coefficient, Rational};
use crate::weight::{format_weight, Weight};

/// Supported Cartan types.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum RootType {
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootType::B(l) => write!(f, "B{l}"),
            RootType::C(l) => write!(f, "C{l}"),
            RootType::D(l) => write!(f, "D{l}"),
            RootType::G2 => write!(f, "G2"),
            RootType::F4 => write!(f, "F4"),
        }
    }
}

impl std::str::FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_uppercase();
        match s.as_str() {
            "G2" => return Ok(RootType::G2),
            "F4" => return Ok(RootType::F4),
            _ => {}
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let l: usize = tail.parse().map_err(|_| Error::Parse(format!("unknown root system {s:?}")))?;
        match head {
            "B" if l >= 1 => Ok(RootType::B(l)),
            "C" if l >= 1 => Ok(RootType::C(l)),
            "D" if l >= 2 => Ok(RootType::D(l)),
            _ => Err(Error::Parse(format!("unknown root system {s:?}"))),
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn add(a: &[Rational], b: &[Rational]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale(a: &[Rational], c: &Rational) -> Weight {
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// A root system in a fixed Euclidean realization with the standard dot
/// product.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: RootType,
    ambient: usize,
    simple: Vec<Weight>,
    positive: Vec<Weight>,
    rho: Weight,
    fundamental: Vec<Weight>,
    /// Inverse Gram matrix of the simple roots, for simple-root coordinates.
    gram_inv: Matrix<Rational>,
}

fn unit(n: usize, i: usize, c: Rational) -> Weight {
    let mut v = vec![Rational::zero(); n];
    v[i] = c;
    v
}

fn simple_roots(ty: RootType) -> (usize, Vec<Weight>) {
    let chain = |l: usize| -> Vec<Weight> {
        (0..l - 1).map(|i| add(&unit(l, i, rat(1, 1)), &unit(l, i + 1, rat(-1, 1)))).collect()
    };
    match ty {
        RootType::B(l) => {
            let mut s = chain(l);
            s.push(unit(l, l - 1, rat(1, 1)));
            (l, s)
        }
        RootType::C(l) => {
            let mut s = chain(l);
            s.push(unit(l, l - 1, rat(2, 1)));
            (l, s)
        }
        RootType::D(l) => {
            let mut s = chain(l);
            s.push(add(&unit(l, l - 2, rat(1, 1)), &unit(l, l - 1, rat(1, 1))));
            (l, s)
        }
        RootType::G2 => {
            let r = |v: [i64; 3]| v.iter().map(|&x| rat(x, 1)).collect::<Weight>();
            (3, vec![r([1, -1, 0]), r([-2, 1, 1])])
        }
        RootType::F4 => {
            let r = |v: [i64; 4], d: i64| v.iter().map(|&x| rat(x, d)).collect::<Weight>();
            (4, vec![r([0, 1, -1, 0], 1), r([0, 0, 1, -1], 1), r([0, 0, 0, 1], 1), r([1, -1, -1, -1], 2)])
        }
    }
}

impl RootSystem {
    pub fn new(ty: RootType) -> Self {
        match ty {
            RootType::B(l) | RootType::C(l) => assert!(l >= 1, "rank must be positive"),
            RootType::D(l) => assert!(l >= 2, "D needs rank at least 2"),
            _ => {}
        }
        let (ambient, simple) = simple_roots(ty);
        let r = simple.len();
        let gram = Matrix::from_rows((0..r).map(|i| (0..r).map(|j| dot(&simple[i], &simple[j])).collect()).collect());
        let gram_inv = invert(&gram);
        let mut sys = RootSystem {
            ty,
            ambient,
            simple,
            positive: Vec::new(),
            rho: Vec::new(),
            fundamental: Vec::new(),
            gram_inv,
        };

        // Close the simple roots under simple reflections.
        let mut roots: BTreeSet<Weight> = sys.simple.iter().cloned().collect();
        let mut frontier: Vec<Weight> = sys.simple.clone();
        while let Some(v) = frontier.pop() {
            for i in 0..r {
                let w = sys.reflect(&v, i);
                if roots.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        sys.positive = roots.into_iter().filter(|v| sys.simple_coords(v).iter().all(|c| *c >= Rational::zero())).collect();
        let half = rat(1, 2);
        sys.rho = sys.positive.iter().fold(vec![Rational::zero(); ambient], |acc, a| add(&acc, a));
        sys.rho = scale(&sys.rho, &half);

        // ω_i = Σ_k (A^{-1})_{ik} α_k with A_{ik} = ⟨α_i, α_k^∨⟩.
        let cartan = Matrix::from_rows((0..r).map(|i| (0..r).map(|k| sys.pairing_index(&sys.simple[i], k)).collect()).collect());
        let cinv = invert(&cartan);
        sys.fundamental = (0..r)
            .map(|i| {
                (0..r).fold(vec![Rational::zero(); ambient], |acc, k| add(&acc, &scale(&sys.simple[k], &cinv[(i, k)])))
            })
            .collect();
        sys
    }

    pub fn root_type(&self) -> RootType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Length of weight coordinate vectors.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental
    }

    /// `⟨v, α^∨⟩ = 2(v, α)/(α, α)`.
    pub fn pairing(&self, v: &[Rational], alpha: &[Rational]) -> Rational {
        dot(v, alpha) * rat(2, 1) / dot(alpha, alpha)
    }

    fn pairing_index(&self, v: &[Rational], i: usize) -> Rational {
        self.pairing(v, &self.simple[i])
    }

    /// Dynkin labels `⟨v, α_i^∨⟩`.
    pub fn dynkin_labels(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.pairing_index(v, i)).collect()
    }

    /// `Σ a_i ω_i`.
    pub fn from_dynkin(&self, labels: &[i64]) -> Weight {
        labels
            .iter()
            .zip(&self.fundamental)
            .fold(vec![Rational::zero(); self.ambient], |acc, (a, w)| add(&acc, &scale(w, &rat(*a, 1))))
    }

    /// Coordinates of `v` (in the span of the roots) in the simple-root basis.
    pub fn simple_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.rank();
        let rhs: Vec<Rational> = self.simple.iter().map(|a| dot(v, a)).collect();
        (0..r).map(|i| (0..r).fold(Rational::zero(), |acc, j| acc + self.gram_inv[(i, j)].clone() * rhs[j].clone())).collect()
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, v: &[Rational], i: usize) -> Weight {
        let a = &self.simple[i];
        sub(v, &scale(a, &self.pairing(v, a)))
    }

    pub fn is_dominant(&self, v: &[Rational]) -> bool {
        (0..self.rank()).all(|i| self.pairing_index(v, i) >= Rational::zero())
    }

    /// Integral dominant: every Dynkin label is a nonnegative integer.
    pub fn is_dominant_integral(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && self.dynkin_labels(v).iter().all(|c| c.is_integer() && *c >= Rational::zero())
    }

    /// The dominant Weyl conjugate of `v`.
    pub fn dominant_conjugate(&self, v: &[Rational]) -> Weight {
        let mut w = v.to_vec();
        'outer: loop {
            for i in 0..self.rank() {
                if self.pairing_index(&w, i) < Rational::zero() {
                    w = self.reflect(&w, i);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Weyl orbit of `v`.
    pub fn orbit(&self, v: &[Rational]) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        seen.insert(v.to_vec());
        let mut frontier = vec![v.to_vec()];
        while let Some(w) = frontier.pop() {
            for i in 0..self.rank() {
                let x = self.reflect(&w, i);
                if seen.insert(x.clone()) {
                    frontier.push(x);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Whether `v` is a nonnegative integer combination of simple roots.
    pub fn in_positive_cone(&self, v: &[Rational]) -> bool {
        if v.iter().all(Coefficient::is_zero) {
            return true;
        }
        // v must lie in the span of the roots (relevant for G2).
        let c = self.simple_coords(v);
        let back = c.iter().zip(&self.simple).fold(vec![Rational::zero(); self.ambient], |acc, (x, a)| add(&acc, &scale(a, x)));
        back == v && c.iter().all(|x| x.is_integer() && *x >= Rational::zero())
    }

    /// Weyl dimension formula `Π_{α>0} (λ+ρ, α)/(ρ, α)`.
    pub fn weyl_dim(&self, lambda: &[Rational]) -> Result<BigInt> {
        if !self.is_dominant_integral(lambda) {
            return Err(Error::NotDominant(format_weight(lambda)));
        }
        let lr = add(lambda, &self.rho);
        let mut p = Rational::one();
        for a in &self.positive {
            p = p * dot(&lr, a) / dot(&self.rho, a);
        }
        debug_assert!(p.is_integer());
        Ok(p.to_integer())
    }

    /// `⟨λ, 2ρ^∨⟩`, whose parity decides orthogonal versus symplectic for
    /// self-dual irreducibles.
    pub fn two_rho_coroot_pairing(&self, lambda: &[Rational]) -> Rational {
        self.positive.iter().fold(Rational::zero(), |acc, a| acc + self.pairing(lambda, a))
    }
}

fn invert(m: &Matrix<Rational>) -> Matrix<Rational> {
    let n = m.rows();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = crate::linalg::row_reduce(&mut rows);
    assert_eq!(pivots.len(), n, "singular Gram matrix");
    Matrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        let cases = [
            (RootType::G2, 6),
            (RootType::F4, 24),
            (RootType::C(3), 9),
            (RootType::D(7), 42),
            (RootType::B(4), 16),
        ];
        for (ty, n) in cases {
            assert_eq!(RootSystem::new(ty).positive_roots().len(), n, "{ty}");
        }
    }

    #[test]
    fn rho_pairs_to_one() {
        for ty in [RootType::G2, RootType::F4, RootType::C(3), RootType::B(3), RootType::D(5)] {
            let r = RootSystem::new(ty);
            assert!(r.dynkin_labels(r.rho()).iter().all(|c| *c == Rational::one()), "{ty}");
        }
    }

    #[test]
    fn weyl_dimensions() {
        let g2 = RootSystem::new(RootType::G2);
        assert_eq!(g2.weyl_dim(g2.rho()).unwrap(), BigInt::from(64));
        assert_eq!(g2.weyl_dim(&[rat(0, 1), rat(0, 1), rat(0, 1)]).unwrap(), BigInt::from(1));
        let c3 = RootSystem::new(RootType::C(3));
        assert_eq!(c3.weyl_dim(c3.rho()).unwrap(), BigInt::from(512));
        let f4 = RootSystem::new(RootType::F4);
        assert_eq!(f4.weyl_dim(f4.rho()).unwrap(), BigInt::from(1u64 << 24));
        let dims: Vec<BigInt> = (0..4).map(|i| f4.weyl_dim(&f4.fundamental_weights()[i]).unwrap()).collect();
        assert!(dims.contains(&BigInt::from(26)) && dims.contains(&BigInt::from(52)));
        assert!(g2.weyl_dim(&scale(g2.rho(), &rat(-1, 1))).is_err());
    }

    #[test]
    fn parse_types() {
        assert_eq!("g2".parse::<RootType>().unwrap(), RootType::G2);
        assert_eq!("D7".parse::<RootType>().unwrap(), RootType::D(7));
        assert!("E8".parse::<RootType>().is_err());
    }
}
