//! Exact rational scalars and combinatorial primitives.
//!
//! Every quantity in this crate is a [`Rational`] (arbitrary-precision,
//! always in lowest terms, positive denominator); diagonal coefficients grow
//! like `N^(N k)`, so fixed-width integers overflow almost immediately.
//! On top of the scalars this module provides the three primitives that the
//! rest of the crate is built from:
//!
//! - [`pochhammer`]: the rising factorial `(x)_j`
//! - [`gen_binomial`]: the generalized binomial coefficient `C(r, k)` with
//!   rational upper argument
//! - [`multinomial`]: `m! / (a_1! ... a_n!)`, zero when the parts do not
//!   sum to `m`

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, the scalar used everywhere.
///
/// Kept in lowest terms with a positive denominator by construction; all
/// arithmetic is exact. Displays as `p/q`, or just `p` when `q` is 1.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers; panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// True for 0, -1, -2, ...: exactly the values a bottom pFq parameter must
/// avoid.
pub fn is_nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

/// Parse `p/q`, `p`, or `-p/q` (whitespace-insensitive).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    compact.parse::<Rational>().map_err(|_| Error::Parse {
        message: format!("invalid rational \"{text}\" (expected p, p/q, or -p/q)"),
    })
}

/// Rising factorial `(x)_j = x (x+1) ... (x+j-1)`; the empty product 1 for
/// `j = 0`.
pub fn pochhammer(x: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..j {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Generalized binomial coefficient `C(r, k) = r (r-1) ... (r-k+1) / k!`.
///
/// Vanishes exactly when `r` is a natural number smaller than `k`.
pub fn gen_binomial(r: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = r.clone();
    for _ in 0..k {
        acc *= &factor;
        factor -= Rational::one();
    }
    acc / Rational::from_integer(factorial(k))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Multinomial coefficient `m! / (parts[0]! ... parts[n-1]!)` when the parts
/// sum to `m`, and 0 otherwise.
pub fn multinomial(m: usize, parts: &[usize]) -> BigInt {
    if parts.iter().sum::<usize>() != m {
        return BigInt::zero();
    }
    let mut acc = factorial(m);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// Exponent tuple `(k_1, ..., k_N)` of a multivariate monomial.
///
/// Ordered by total degree first, then lexicographically, so iterating a
/// sorted map of indices visits monomials in nondecreasing degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        MultiIndex(entries)
    }

    /// The all-zero index in `n_vars` variables.
    pub fn zero(n_vars: usize) -> Self {
        MultiIndex(vec![0; n_vars])
    }

    /// The index `(k, k, ..., k)` in `n_vars` variables.
    pub fn diagonal(n_vars: usize, k: usize) -> Self {
        MultiIndex(vec![k; n_vars])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|k| = k_1 + ... + k_N`.
    pub fn total_degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Euler's totient of `n`, by trial division (moduli here are tiny).
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Least common multiple of the denominators of `values`, as `u64`.
pub fn denominator_lcm(values: &[Rational]) -> Option<u64> {
    let mut acc = BigInt::one();
    for v in values {
        acc = num_integer::lcm(acc, v.denom().clone());
    }
    acc.to_u64()
}
