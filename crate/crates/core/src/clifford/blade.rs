use std::fmt;

/// Maximum number of generators a blade can index.
pub const MAX_GENERATORS: usize = 64;

/// A canonical basis blade `e_{i1 i2 … ik}` with `i1 < i2 < … < ik`.
///
/// Generators are numbered from 1; bit `i-1` records `e_i`. The empty blade is
/// the identity `e_0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_bits(bits: u64) -> Self {
        Blade(bits)
    }

    /// The single generator `e_i`, `i ≥ 1`.
    pub fn generator(i: usize) -> Self {
        assert!((1..=MAX_GENERATORS).contains(&i), "generator index {i} out of range");
        Blade(1 << (i - 1))
    }

    /// Builds the blade on a set of 1-based indices. Returns `None` on a
    /// repeated or zero index.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if !(1..=MAX_GENERATORS).contains(&i) || bits & (1 << (i - 1)) != 0 {
                return None;
            }
            bits |= 1 << (i - 1);
        }
        Some(Blade(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Ascending 1-based indices.
    pub fn indices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.grade());
        let mut b = self.0;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            out.push(i + 1);
            b &= b - 1;
        }
        out
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    pub fn is_even(self) -> bool {
        self.grade().is_multiple_of(2)
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_GENERATORS).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// Largest index, `None` for `e_0`.
    pub fn top(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn without(self, i: usize) -> Self {
        Blade(self.0 & !(1 << (i - 1)))
    }

    pub fn with(self, i: usize) -> Self {
        Blade(self.0 | (1 << (i - 1)))
    }

    /// Number of generators in `self` with index strictly less than `i`.
    pub fn count_below(self, i: usize) -> usize {
        (self.0 & ((1u64 << (i - 1)) - 1)).count_ones() as usize
    }

    /// Comparison key for the fixed tensor basis order: by grade, then
    /// lexicographically on the index list.
    pub fn basis_order_key(self) -> (usize, Vec<usize>) {
        (self.grade(), self.indices())
    }

    /// All blades over `m` generators in basis order.
    pub fn all(m: usize) -> Vec<Blade> {
        assert!(m <= 20, "refusing to enumerate 2^{m} blades");
        let mut v: Vec<Blade> = (0..1u64 << m).map(Blade).collect();
        v.sort_by_key(|b| b.basis_order_key());
        v
    }

    /// Even blades over `m` generators in basis order.
    pub fn even(m: usize) -> Vec<Blade> {
        Blade::all(m).into_iter().filter(|b| b.is_even()).collect()
    }

    /// Blades of the given grade over `m` generators, lexicographic.
    pub fn of_grade(m: usize, k: usize) -> Vec<Blade> {
        Blade::all(m).into_iter().filter(|b| b.grade() == k).collect()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "e0");
        }
        let idx: Vec<String> = self.indices().iter().map(ToString::to_string).collect();
        if self.indices().iter().all(|&i| i < 10) {
            write!(f, "e{}", idx.concat())
        } else {
            write!(f, "e[{}]", idx.join(","))
        }
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        let b = Blade::from_indices(&[3, 1]).unwrap();
        assert_eq!(b.indices(), vec![1, 3]);
        assert_eq!(b.grade(), 2);
        assert_eq!(b.top(), Some(3));
        assert_eq!(Blade::SCALAR.top(), None);
        assert!(Blade::from_indices(&[2, 2]).is_none());
        assert_eq!(b.to_string(), "e13");
        assert_eq!(Blade::SCALAR.to_string(), "e0");
    }

    #[test]
    fn counting() {
        assert_eq!(Blade::all(5).len(), 32);
        assert_eq!(Blade::even(5).len(), 16);
        let order: Vec<String> = Blade::even(3).iter().map(ToString::to_string).collect();
        assert_eq!(order, ["e0", "e12", "e13", "e23"]);
        assert_eq!(Blade::from_indices(&[1, 2, 4]).unwrap().count_below(3), 2);
    }
}
