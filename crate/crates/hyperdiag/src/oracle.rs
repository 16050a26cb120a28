//! Brute-force truncated multivariate expansion.
//!
//! This is the independent cross-check for every closed form in the crate:
//! it expands powers of linear forms by the multinomial theorem, multiplies
//! truncated series term by term, and reads diagonal coefficients straight
//! off the expansion. It deliberately shares no code with the closed-form
//! path beyond [`crate::arith`].
//!
//! Cost note: a dense expansion to total degree `D` in `n` variables holds
//! up to `C(D+n, n)` terms, so diagonal extraction to order `K` (which needs
//! `D = K*n`) grows quickly with the number of variables.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::{self, MultiIndex, Rational};
use crate::hyperseries::Series;
use crate::linform::LinearFormProduct;
use crate::{Error, Result};

/// A multivariate power series truncated at a total degree bound.
///
/// Terms are kept in a map ordered by graded-lexicographic index, so
/// iteration is by nondecreasing total degree and serialization is
/// reproducible. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMultiSeries {
    n_vars: usize,
    degree_bound: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl TruncatedMultiSeries {
    /// The constant series 1.
    pub fn one(n_vars: usize, degree_bound: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(MultiIndex::zero(n_vars), Rational::one());
        TruncatedMultiSeries {
            n_vars,
            degree_bound,
            terms,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &MultiIndex) -> Rational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    fn insert_nonzero(&mut self, index: MultiIndex, value: Rational) {
        if !value.is_zero() {
            self.terms.insert(index, value);
        }
    }

    fn add_assign(&mut self, other: &TruncatedMultiSeries) {
        for (idx, c) in &other.terms {
            if idx.total_degree() > self.degree_bound {
                break;
            }
            let entry = self.terms.entry(idx.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(idx);
            }
        }
    }
}

/// Expand `(1 + c_1 x_1 + ... + c_m x_m)^b` to total degree `bound` by the
/// multinomial theorem:
/// `sum_{i<=bound} C(b, i) sum_{|a|=i} multinomial(i; a) prod c_j^{a_j} x^a`.
pub fn expand_linear_power(
    coeffs: &[Rational],
    exponent: &Rational,
    bound: usize,
) -> TruncatedMultiSeries {
    let m = coeffs.len();
    let mut out = TruncatedMultiSeries {
        n_vars: m,
        degree_bound: bound,
        terms: BTreeMap::new(),
    };
    let mut binom = Rational::one(); // C(exponent, i)
    for i in 0..=bound {
        if i > 0 {
            binom *= (exponent - arith::int(i as i64 - 1)) / arith::int(i as i64);
        }
        if binom.is_zero() {
            // a natural-number exponent has been exhausted; C(b, i') = 0 from
            // here on
            break;
        }
        compositions(&mut vec![0; m], 0, i, &binom, coeffs, &mut out);
    }
    out
}

/// Enumerate the compositions of `remaining` over positions `pos..`,
/// accumulating `partial = C(b,i) * prod_{j<pos} C(rem_j, a_j) c_j^{a_j}`.
fn compositions(
    alpha: &mut Vec<usize>,
    pos: usize,
    remaining: usize,
    partial: &Rational,
    coeffs: &[Rational],
    out: &mut TruncatedMultiSeries,
) {
    if pos == coeffs.len() {
        if remaining == 0 {
            out.insert_nonzero(MultiIndex::new(alpha.clone()), partial.clone());
        }
        return;
    }
    // last position takes whatever remains
    if pos + 1 == coeffs.len() {
        let weight = coeffs[pos].pow(remaining as i32);
        alpha[pos] = remaining;
        let value = partial * weight;
        out.insert_nonzero(MultiIndex::new(alpha.clone()), value);
        alpha[pos] = 0;
        return;
    }
    let mut factor = Rational::one(); // C(remaining, a) * c^a
    for a in 0..=remaining {
        if a > 0 {
            factor *= arith::int((remaining - a + 1) as i64) * &coeffs[pos] / arith::int(a as i64);
            if factor.is_zero() {
                break; // the variable's coefficient is zero
            }
        }
        alpha[pos] = a;
        compositions(
            alpha,
            pos + 1,
            remaining - a,
            &(partial * &factor),
            coeffs,
            out,
        );
        alpha[pos] = 0;
    }
}

/// Truncated product of two expansions over the same variables.
pub fn multiply(
    a: &TruncatedMultiSeries,
    b: &TruncatedMultiSeries,
    bound: usize,
) -> Result<TruncatedMultiSeries> {
    if a.n_vars != b.n_vars {
        return Err(Error::ArityMismatch {
            expected: a.n_vars,
            got: b.n_vars,
        });
    }
    let mut terms: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
    for (ia, ca) in &a.terms {
        let da = ia.total_degree();
        if da > bound {
            break;
        }
        for (ib, cb) in &b.terms {
            if da + ib.total_degree() > bound {
                break; // graded order: every later term of b is no smaller
            }
            let entry = terms.entry(ia.add(ib)).or_insert_with(Rational::zero);
            *entry += ca * cb;
        }
    }
    terms.retain(|_, v| !v.is_zero());
    Ok(TruncatedMultiSeries {
        n_vars: a.n_vars,
        degree_bound: bound,
        terms,
    })
}

/// A multivariate polynomial with finitely many terms, the seed for
/// geometric expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn new(n_vars: usize, terms: Vec<(Vec<usize>, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
        for (entries, c) in terms {
            if entries.len() != n_vars {
                return Err(Error::ArityMismatch {
                    expected: n_vars,
                    got: entries.len(),
                });
            }
            let entry = map
                .entry(MultiIndex::new(entries))
                .or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, v| !v.is_zero());
        Ok(Polynomial { n_vars, terms: map })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&MultiIndex::zero(self.n_vars))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Expand `1 / (1 - p) = sum_j p^j` to total degree `bound`; `p` must have
/// zero constant term so that `p^j` only contributes from degree `j` on.
pub fn expand_geometric(p: &Polynomial, bound: usize) -> Result<TruncatedMultiSeries> {
    if !p.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let seed = TruncatedMultiSeries {
        n_vars: p.n_vars,
        degree_bound: bound,
        terms: p
            .terms
            .iter()
            .filter(|(i, _)| i.total_degree() <= bound)
            .map(|(i, c)| (i.clone(), c.clone()))
            .collect(),
    };
    let mut result = TruncatedMultiSeries::one(p.n_vars, bound);
    let mut power = TruncatedMultiSeries::one(p.n_vars, bound);
    for _ in 1..=bound {
        power = multiply(&power, &seed, bound)?;
        if power.terms.is_empty() {
            break;
        }
        result.add_assign(&power);
    }
    Ok(result)
}

/// Diagonal coefficients `c_k = [x1^k ... xn^k]` for `k = 0..=order`;
/// requires `order * n_vars <= degree_bound`.
pub fn extract_diag(s: &TruncatedMultiSeries, order: usize) -> Result<Series> {
    let needed = order * s.n_vars;
    if needed > s.degree_bound {
        return Err(Error::InsufficientBound {
            needed,
            bound: s.degree_bound,
        });
    }
    Ok(Series::new(
        (0..=order)
            .map(|k| s.coeff(&MultiIndex::diagonal(s.n_vars, k)))
            .collect(),
    ))
}

/// Brute-force diagonal of a linear-form product: expand every factor by the
/// multinomial theorem, multiply, and read off the diagonal.
///
/// The widest factor is folded in last, taking only the diagonal entries of
/// the final product; this is exactly `extract_diag` of the full truncated
/// product, skipping terms that cannot land on the diagonal.
pub fn oracle_diag(p: &LinearFormProduct, order: usize) -> Series {
    let n = p.n_vars();
    let bound = order * n;
    let unit = p.sign().unit();

    let mut factors: Vec<TruncatedMultiSeries> = Vec::new();
    if let Some(b) = p.doubled() {
        let mut coeffs = vec![unit.clone(); n - 1];
        coeffs[n - 2] = &unit * arith::int(2);
        coeffs.push(Rational::zero());
        factors.push(expand_linear_power(&coeffs, b, bound));
    }
    for (j, b) in p.exponents().iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let mut coeffs = vec![unit.clone(); j + 1];
        coeffs.resize(n, Rational::zero());
        factors.push(expand_linear_power(&coeffs, b, bound));
    }

    // the width-n factor (nonzero by construction) goes last
    let widest = factors
        .pop()
        .expect("a normalized product has a widest factor");
    let mut partial = TruncatedMultiSeries::one(n, bound);
    for f in &factors {
        partial = multiply(&partial, f, bound).expect("same arity by construction");
    }

    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let target = MultiIndex::diagonal(n, k);
        let mut c = Rational::zero();
        for (idx, value) in &partial.terms {
            if idx.total_degree() > n * k {
                break;
            }
            if let Some(rest) = target.checked_sub(idx) {
                c += value * widest.coeff(&rest);
            }
        }
        coeffs.push(c);
    }
    Series::new(coeffs)
}
