//! Squarefree monomials and monomial ideals.
//!
//! A squarefree monomial is identified with its support `F(u)`, stored as a
//! 64-bit set: bit `i - 1` is set when `x_i` divides the monomial. Variables are
//! numbered from 1.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqfMonomial(u64);

impl SqfMonomial {
    /// The monomial `1` (empty support).
    pub const ONE: SqfMonomial = SqfMonomial(0);

    pub const fn from_bits(bits: u64) -> Self {
        SqfMonomial(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a monomial from 1-based variable indices. Repeated indices are
    /// collapsed.
    pub fn from_support<I: IntoIterator<Item = usize>>(vars: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in vars {
            if v == 0 || v > MAX_VARS {
                return Err(Error::Input(format!(
                    "variable index {v} outside 1..={MAX_VARS}"
                )));
            }
            bits |= 1 << (v - 1);
        }
        Ok(SqfMonomial(bits))
    }

    /// The variable `x_i`.
    ///
    /// Panics if `i` is not in `1..=64`.
    pub fn var(i: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&i), "variable index {i} out of range");
        SqfMonomial(1 << (i - 1))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, var: usize) -> bool {
        (1..=MAX_VARS).contains(&var) && self.0 & (1 << (var - 1)) != 0
    }

    /// Iterates the support in increasing order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    pub fn support(self) -> Vec<usize> {
        self.vars().collect()
    }

    /// Largest variable index in the support, 0 for the monomial 1.
    pub fn max_var(self) -> usize {
        MAX_VARS - self.0.leading_zeros() as usize
    }

    pub fn divides(self, other: SqfMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn lcm(self, other: SqfMonomial) -> SqfMonomial {
        SqfMonomial(self.0 | other.0)
    }

    pub fn gcd(self, other: SqfMonomial) -> SqfMonomial {
        SqfMonomial(self.0 & other.0)
    }

    /// The colon `self : other`, i.e. the monomial with support `F(self) \ F(other)`.
    pub fn colon(self, other: SqfMonomial) -> SqfMonomial {
        SqfMonomial(self.0 & !other.0)
    }

    /// The single variable index when the support has exactly one element.
    pub fn as_var(self) -> Option<usize> {
        (self.0.count_ones() == 1).then(|| self.0.trailing_zeros() as usize + 1)
    }
}

/// Free function form of [`SqfMonomial::colon`].
pub fn colon(u: SqfMonomial, v: SqfMonomial) -> SqfMonomial {
    u.colon(v)
}

/// Free function form of [`SqfMonomial::lcm`].
pub fn lcm_of(u: SqfMonomial, v: SqfMonomial) -> SqfMonomial {
    u.lcm(v)
}

impl fmt::Debug for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vars().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for SqfMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vars())
    }
}

/// A squarefree monomial ideal given by its minimal generating set `G(I)`.
///
/// Generators keep their input order; generator `k` (0-based) is reported as
/// `k + 1` in text output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<SqfMonomial>,
    was_minimal: bool,
}

impl MonomialIdeal {
    /// Minimalizes `monomials` and wraps the result. See [`minimalize`].
    pub fn new(n: usize, monomials: &[SqfMonomial]) -> Result<Self> {
        minimalize(monomials, n)
    }

    /// Builds an ideal from 1-based supports, e.g. `&[&[1, 2], &[2, 3]]`.
    pub fn from_supports(n: usize, supports: &[&[usize]]) -> Result<Self> {
        let gens = supports
            .iter()
            .map(|s| SqfMonomial::from_support(s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        minimalize(&gens, n)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new(), was_minimal: true }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[SqfMonomial] {
        &self.gens
    }

    pub fn gen(&self, k: usize) -> SqfMonomial {
        self.gens[k]
    }

    /// Number of minimal generators `m`.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether the monomials handed to [`minimalize`] were already a minimal
    /// generating set.
    pub fn was_minimal(&self) -> bool {
        self.was_minimal
    }

    /// Common degree of the generators, `None` for the zero ideal or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.degree().is_some()
    }

    /// Union of all supports.
    pub fn support(&self) -> SqfMonomial {
        self.gens.iter().fold(SqfMonomial::ONE, |a, &g| a.lcm(g))
    }

    /// Membership test for a squarefree monomial.
    pub fn contains(&self, u: SqfMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// The ideal generated by the generators at the given 0-based positions,
    /// in the given order.
    pub fn sub_ideal(&self, indices: &[usize]) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            gens: indices.iter().map(|&k| self.gens[k]).collect(),
            was_minimal: true,
        }
    }

    /// Same ideal with the generators reordered.
    pub fn reordered(&self, order: &[usize]) -> MonomialIdeal {
        self.sub_ideal(order)
    }

    /// Splits `G(I)` by divisibility by `x_l`: returns `(I_l, I^l)` where `I_l`
    /// holds the generators not divisible by `x_l`.
    pub fn split_by_variable(&self, l: usize) -> Result<(MonomialIdeal, MonomialIdeal)> {
        if l == 0 || l > self.n {
            return Err(Error::Input(format!("variable {l} outside 1..={}", self.n)));
        }
        let (with, without): (Vec<_>, Vec<_>) = self.gens.iter().partition(|g| g.contains(l));
        Ok((
            MonomialIdeal { n: self.n, gens: without, was_minimal: true },
            MonomialIdeal { n: self.n, gens: with, was_minimal: true },
        ))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, {:?})", self.n, self.gens)
    }
}

/// Returns the divisibility-minimal, deduplicated subset of `monomials`,
/// preserving first-occurrence order.
pub fn minimalize(monomials: &[SqfMonomial], n: usize) -> Result<MonomialIdeal> {
    if n > MAX_VARS {
        return Err(Error::Input(format!("n = {n} exceeds the maximum of {MAX_VARS}")));
    }
    for u in monomials {
        if u.max_var() > n {
            return Err(Error::Input(format!("monomial {u} uses a variable outside 1..={n}")));
        }
    }
    let mut gens: Vec<SqfMonomial> = Vec::with_capacity(monomials.len());
    for (k, &u) in monomials.iter().enumerate() {
        let redundant = monomials
            .iter()
            .any(|&v| v != u && v.divides(u))
            || monomials[..k].contains(&u);
        if !redundant {
            gens.push(u);
        }
    }
    let was_minimal = gens.len() == monomials.len();
    Ok(MonomialIdeal { n, gens, was_minimal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &[usize]) -> SqfMonomial {
        SqfMonomial::from_support(s.iter().copied()).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = minimalize(&[m(&[1, 2]), m(&[1, 2, 3]), m(&[3, 4])], 4).unwrap();
        assert_eq!(i.gens(), &[m(&[1, 2]), m(&[3, 4])]);
        assert!(!i.was_minimal());
    }

    #[test]
    fn minimalize_keeps_minimal_sets() {
        let gens = [m(&[1, 2, 3]), m(&[1, 2, 4]), m(&[1, 4, 5]), m(&[3, 4, 5])];
        let i = minimalize(&gens, 5).unwrap();
        assert_eq!(i.gens(), &gens);
        assert!(i.was_minimal());
        assert_eq!(i.degree(), Some(3));
    }

    #[test]
    fn minimalize_empty_and_duplicates() {
        let i = minimalize(&[], 3).unwrap();
        assert!(i.is_empty());
        let i = minimalize(&[m(&[2, 3]), m(&[1]), m(&[2, 3])], 3).unwrap();
        assert_eq!(i.gens(), &[m(&[2, 3]), m(&[1])]);
        assert_eq!(i.degree(), None);
    }

    #[test]
    fn minimalize_rejects_out_of_range() {
        assert!(matches!(minimalize(&[m(&[1, 5])], 4), Err(Error::Input(_))));
        assert!(SqfMonomial::from_support([0]).is_err());
        assert!(SqfMonomial::from_support([65]).is_err());
    }

    #[test]
    fn colon_and_lcm() {
        assert_eq!(colon(m(&[1, 2, 4]), m(&[1, 2, 3])), m(&[4]));
        assert_eq!(colon(m(&[1, 2, 3]), m(&[1, 2, 3])), SqfMonomial::ONE);
        assert_eq!(colon(m(&[3, 4, 5]), m(&[1, 2, 3])), m(&[4, 5]));
        assert_eq!(colon(m(&[1, 2, 3]), m(&[3, 4, 5])), m(&[1, 2]));
        assert_eq!(lcm_of(m(&[1, 2]), m(&[2, 3])), m(&[1, 2, 3]));
        assert_eq!(lcm_of(m(&[1, 2, 3]), m(&[3, 4, 5])), m(&[1, 2, 3, 4, 5]));
        assert_eq!(lcm_of(m(&[2, 7]), m(&[2, 7])), m(&[2, 7]));
    }

    #[test]
    fn split_examples() {
        let c4 = MonomialIdeal::from_supports(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
        let (lo, hi) = c4.split_by_variable(1).unwrap();
        assert_eq!(lo.gens(), &[m(&[2, 3]), m(&[3, 4])]);
        assert_eq!(hi.gens(), &[m(&[1, 2]), m(&[1, 4])]);

        let p = MonomialIdeal::from_supports(5, &[&[1, 2, 3]]).unwrap();
        let (lo, hi) = p.split_by_variable(5).unwrap();
        assert_eq!(lo.gens(), p.gens());
        assert!(hi.is_empty());

        let nested = MonomialIdeal::from_supports(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 4, 5], &[3, 4, 5]])
            .unwrap();
        let (lo, hi) = nested.split_by_variable(3).unwrap();
        assert_eq!(lo.gens(), &[m(&[1, 2, 4]), m(&[1, 4, 5])]);
        assert_eq!(hi.gens(), &[m(&[1, 2, 3]), m(&[3, 4, 5])]);

        assert!(nested.split_by_variable(6).is_err());
        assert!(nested.split_by_variable(0).is_err());
    }

    #[test]
    fn display_and_vars() {
        assert_eq!(m(&[3, 1, 10]).to_string(), "{1,3,10}");
        assert_eq!(m(&[3, 1, 10]).max_var(), 10);
        assert_eq!(SqfMonomial::ONE.max_var(), 0);
        assert_eq!(m(&[64]).support(), vec![64]);
        assert_eq!(m(&[5]).as_var(), Some(5));
        assert_eq!(m(&[5, 6]).as_var(), None);
    }
}
