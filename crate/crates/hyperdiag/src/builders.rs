//! Hypergeometric parameter lists for diagonals of linear-form products.
//!
//! Three families are covered, each returning a [`PFQParams`] whose series
//! equals the corresponding diagonal:
//!
//! - [`ratio_params`]: the two-factor family
//!   `(1 - x1 - ... - xn)^R / (1 - x1 - ... - xN)^S` (minus convention,
//!   argument scaling `N^N`), together with its independent closed-form
//!   diagonal coefficient [`ratio_diag_coeff`].
//! - [`nested_params`]: an arbitrary product
//!   `(1 + x1)^{b_1} ... (1 + x1 + ... + xN)^{b_N}` (plus convention,
//!   scaling `(-N)^N`).
//! - [`doubled_params`]: the same with an extra factor
//!   `(1 + x1 + ... + x_{N-2} + 2 x_{N-1})^b`, available when
//!   `b_{N-1} + b_N = -1`.
//!
//! The parameter blocks are unions of arithmetic progressions. With
//! `B(k) = -(b_k + ... + b_N)`, the nested family takes top blocks
//! `(B(k)+i)/(N-k+1)` for `i = 0..N-k` and bottom blocks `(B(k)+i)/(N-k)`,
//! padded with `N-1` explicit bottom ones; one further 1 stays implicit in
//! the `k!` of the series definition, which is why a built `pFq` always has
//! exactly one more top than bottom parameter.
//!
//! Builders refuse (rather than regularize) whenever a constructed bottom
//! parameter is a nonpositive integer; the underlying coefficient identity
//! is still checkable through the closed forms in [`crate::linform`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::hyperseries::PFQParams;
use crate::linform::{LinearFormProduct, Sign};
use crate::{Error, Result};

/// The ratio family `(1 - x1 - ... - xn)^R / (1 - x1 - ... - xN)^S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSpec {
    inner_exp: Rational,
    outer_pow: Rational,
    inner_width: usize,
    n_vars: usize,
}

impl RatioSpec {
    /// Requires `S != 0`, `n <= N`, `N >= 1`. For `n = 0` the numerator is
    /// the constant 1 and `R` is canonicalized to 0.
    pub fn new(
        inner_exp: Rational,
        outer_pow: Rational,
        inner_width: usize,
        n_vars: usize,
    ) -> Result<Self> {
        if outer_pow.is_zero() {
            return Err(Error::DegenerateSpec {
                reason: "outer power S must be nonzero".into(),
            });
        }
        if n_vars == 0 || inner_width > n_vars {
            return Err(Error::DegenerateSpec {
                reason: format!(
                    "widths must satisfy 0 <= n <= N with N >= 1, got n={inner_width}, N={n_vars}"
                ),
            });
        }
        let inner_exp = if inner_width == 0 {
            Rational::zero()
        } else {
            inner_exp
        };
        Ok(RatioSpec {
            inner_exp,
            outer_pow,
            inner_width,
            n_vars,
        })
    }

    /// Exponent `R` of the inner form.
    pub fn inner_exp(&self) -> &Rational {
        &self.inner_exp
    }

    /// Power `S` of the denominator form.
    pub fn outer_pow(&self) -> &Rational {
        &self.outer_pow
    }

    /// Width `n` of the inner form.
    pub fn inner_width(&self) -> usize {
        self.inner_width
    }

    /// Total number of variables `N`.
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// `s = N - n`.
    pub fn complement_width(&self) -> usize {
        self.n_vars - self.inner_width
    }

    /// `Q = S - R`.
    pub fn exponent_gap(&self) -> Rational {
        &self.outer_pow - &self.inner_exp
    }

    /// The minus-convention product this spec describes; fails when the
    /// exponents collapse to the constant 1 (n = N with R = S).
    pub fn product(&self) -> Result<LinearFormProduct> {
        let mut exponents = vec![Rational::zero(); self.n_vars];
        if self.inner_width >= 1 {
            exponents[self.inner_width - 1] += &self.inner_exp;
        }
        exponents[self.n_vars - 1] -= &self.outer_pow;
        LinearFormProduct::plain(exponents, Sign::Minus)
    }
}

/// `N^N` (or `(-N)^N`) as a rational.
fn power_scale(n: usize, negative: bool) -> Rational {
    let base = if negative {
        -BigInt::from(n)
    } else {
        BigInt::from(n)
    };
    Rational::from_integer(base.pow(n as u32))
}

/// Parameters of the pFq equal to the diagonal of the ratio family, with
/// `Q = S - R` and `s = N - n`:
///
/// ```text
/// top    = (Q+i)/N  for i = 0..N-1,  then (S+i)/s for i = 0..s-1
/// bottom = (Q+i)/s  for i = 0..s-1,  then N-1 ones
/// scale  = N^N      (minus-convention product, no sign flip needed)
/// ```
///
/// Refuses when some bottom entry is a nonpositive integer (for instance a
/// nonpositive-integer `Q` with `s >= 1`); both blocks indexed by `s` are
/// empty when `n = N`.
pub fn ratio_params(spec: &RatioSpec) -> Result<PFQParams> {
    let n_vars = spec.n_vars;
    let s = spec.complement_width();
    let q = spec.exponent_gap();
    let mut top = Vec::with_capacity(n_vars + s);
    let mut bottom = Vec::with_capacity(s + n_vars - 1);
    for i in 0..n_vars {
        top.push((&q + arith::int(i as i64)) / arith::int(n_vars as i64));
    }
    for i in 0..s {
        top.push((&spec.outer_pow + arith::int(i as i64)) / arith::int(s as i64));
    }
    for i in 0..s {
        bottom.push((&q + arith::int(i as i64)) / arith::int(s as i64));
    }
    bottom.extend(std::iter::repeat_n(Rational::one(), n_vars - 1));
    PFQParams::new(top, bottom, power_scale(n_vars, false))
}

/// Independent closed form for the diagonal coefficient of the ratio family
/// (minus convention):
///
/// ```text
/// (-1)^(Nk) multinomial(sk; k..k) multinomial(nk; k..k)
///          C(-S, sk) C(R-S-sk, nk)
/// ```
///
/// This route never refuses; it is the cross-check used when
/// [`ratio_params`] does.
pub fn ratio_diag_coeff(spec: &RatioSpec, k: usize) -> Rational {
    let n = spec.inner_width;
    let s = spec.complement_width();
    let mut acc = Rational::from_integer(arith::multinomial(s * k, &vec![k; s]))
        * Rational::from_integer(arith::multinomial(n * k, &vec![k; n]));
    acc *= arith::gen_binomial(&-spec.outer_pow.clone(), s * k);
    let shifted = &spec.inner_exp - &spec.outer_pow - arith::int((s * k) as i64);
    acc *= arith::gen_binomial(&shifted, n * k);
    if (spec.n_vars * k) % 2 == 1 {
        acc = -acc;
    }
    acc
}

/// Trim trailing zero exponents; error if nothing remains.
fn trimmed(exponents: &[Rational]) -> Result<Vec<Rational>> {
    let mut exps = exponents.to_vec();
    while exps.last().is_some_and(|b| b.is_zero()) {
        exps.pop();
    }
    if exps.is_empty() {
        return Err(Error::AllExponentsZero);
    }
    Ok(exps)
}

/// Suffix sums `B(k) = -(b_k + ... + b_N)` for `k = 1..=N`, index shifted
/// down by one.
fn negated_suffix_sums(exps: &[Rational]) -> Vec<Rational> {
    let n = exps.len();
    let mut sums = vec![Rational::zero(); n];
    let mut acc = Rational::zero();
    for k in (0..n).rev() {
        acc -= &exps[k];
        sums[k] = acc.clone();
    }
    sums
}

/// Parameters of the pFq equal to the diagonal of the plus-convention
/// nested product `(1+x1)^{b_1} ... (1+x1+...+xN)^{b_N}`, scaling
/// `(-N)^N`. The result is an `M F (M-1)` with `M = N(N+1)/2`.
pub fn nested_params(exponents: &[Rational]) -> Result<PFQParams> {
    let exps = trimmed(exponents)?;
    let n = exps.len();
    let b = negated_suffix_sums(&exps);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for k in 1..=n {
        let width = n - k + 1;
        for i in 0..width {
            top.push((&b[k - 1] + arith::int(i as i64)) / arith::int(width as i64));
        }
    }
    for k in 1..n {
        let width = n - k;
        for i in 0..width {
            bottom.push((&b[k - 1] + arith::int(i as i64)) / arith::int(width as i64));
        }
    }
    bottom.extend(std::iter::repeat_n(Rational::one(), n - 1));
    PFQParams::new(top, bottom, power_scale(n, true))
}

/// Parameters for the plus-convention nested product times the doubled
/// factor `(1+x1+...+x_{N-2}+2 x_{N-1})^b`, requiring `b_{N-1}+b_N = -1`.
///
/// The blocks follow [`nested_params`] with `B(k)` shifted by `-b` for
/// `k <= N-2`, and the last two block pairs replaced by the two single top
/// entries `(1-b)/2` and `-b_N`; the result is an `(M-1) F (M-2)`.
pub fn doubled_params(exponents: &[Rational], doubled: &Rational) -> Result<PFQParams> {
    let exps = exponents.to_vec();
    let n = exps.len();
    if n < 2 {
        return Err(Error::DegenerateSpec {
            reason: "a doubled factor needs at least two variables".into(),
        });
    }
    if exps[n - 1].is_zero() {
        return Err(Error::DegenerateSpec {
            reason: "the widest exponent must be nonzero under a doubled factor".into(),
        });
    }
    let sum = &exps[n - 2] + &exps[n - 1];
    if sum != -Rational::one() {
        return Err(Error::DoubledConstraint {
            sum: sum.to_string(),
        });
    }
    let b = negated_suffix_sums(&exps);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for k in 1..=n.saturating_sub(2) {
        let width = n - k + 1;
        for i in 0..width {
            top.push((&b[k - 1] - doubled + arith::int(i as i64)) / arith::int(width as i64));
        }
    }
    top.push((Rational::one() - doubled) / arith::int(2));
    top.push(-exps[n - 1].clone());
    for k in 1..=n.saturating_sub(2) {
        let width = n - k;
        for i in 0..width {
            bottom.push((&b[k - 1] - doubled + arith::int(i as i64)) / arith::int(width as i64));
        }
    }
    bottom.extend(std::iter::repeat_n(Rational::one(), n - 1));
    PFQParams::new(top, bottom, power_scale(n, true))
}
