//! Products of powers of nested linear forms and their exact coefficients.
//!
//! A [`LinearFormProduct`] describes
//!
//! ```text
//! (1 ± x1)^{b_1} (1 ± x1 ± x2)^{b_2} ... (1 ± x1 ± ... ± xN)^{b_N}
//! ```
//!
//! optionally multiplied by one doubled-variable factor
//! `(1 ± x1 ± ... ± x_{N-2} ± 2 x_{N-1})^b` (which requires
//! `b_{N-1} + b_N = -1`). The sign convention is shared by every factor.
//!
//! For the plus convention the coefficient of `x1^{k_1} ... xN^{k_N}` has the
//! closed form
//!
//! ```text
//! C(b_N, k_N) * C(b_{N-1}+b_N-k_N, k_{N-1}) * ...
//!            * C(b_1+...+b_N-k_N-...-k_2, k_1),
//! ```
//!
//! peeling one variable at a time from the innermost form outwards; switching
//! to the minus convention multiplies the coefficient by `(-1)^{|k|}`. The
//! diagonal of a doubled product is only available at equal exponents
//! `(k, ..., k)`, where the doubled factor contributes `4^k C((b-1)/2, k)`
//! (see [`doubled_kernel_coeff`]).

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{self, MultiIndex, Rational};
use crate::hyperseries::Series;
use crate::{Error, Result};

/// Whether the linear forms read `(1 + ...)` or `(1 - ...)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` or `-1` as a rational, for building expansion coefficients.
    pub fn unit(self) -> Rational {
        match self {
            Sign::Plus => Rational::one(),
            Sign::Minus => -Rational::one(),
        }
    }
}

/// A product of powers of nested linear forms, optionally with one
/// doubled-variable factor.
///
/// `exponents[j-1]` is the exponent of the width-`j` form
/// `(1 ± x1 ± ... ± xj)`; interior zeros encode absent factors. After
/// construction the widest exponent is nonzero and, if a doubled factor is
/// present, `N >= 2` and `b_{N-1} + b_N = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormProduct {
    exponents: Vec<Rational>,
    doubled: Option<Rational>,
    sign: Sign,
}

impl LinearFormProduct {
    /// Build and normalize a product.
    ///
    /// Plain products drop trailing zero exponents (reducing the number of
    /// variables) until the widest exponent is nonzero; a product whose
    /// exponents are all zero is rejected, the constant 1 is the caller's
    /// business. With a doubled factor the widest exponent must be nonzero
    /// as given, since the doubled factor is anchored to the widest form.
    pub fn new(
        mut exponents: Vec<Rational>,
        doubled: Option<Rational>,
        sign: Sign,
    ) -> Result<Self> {
        if doubled.is_none() {
            while exponents.last().is_some_and(|b| b.is_zero()) {
                exponents.pop();
            }
        }
        let n = exponents.len();
        if n == 0 || exponents[n - 1].is_zero() {
            return Err(Error::AllExponentsZero);
        }
        if doubled.is_some() {
            if n < 2 {
                return Err(Error::DegenerateSpec {
                    reason: "a doubled factor needs at least two variables".into(),
                });
            }
            let sum = &exponents[n - 2] + &exponents[n - 1];
            if sum != -Rational::one() {
                return Err(Error::DoubledConstraint {
                    sum: sum.to_string(),
                });
            }
        }
        Ok(LinearFormProduct {
            exponents,
            doubled,
            sign,
        })
    }

    /// A product without doubled factor.
    pub fn plain(exponents: Vec<Rational>, sign: Sign) -> Result<Self> {
        Self::new(exponents, None, sign)
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Rational] {
        &self.exponents
    }

    pub fn doubled(&self) -> Option<&Rational> {
        self.doubled.as_ref()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn with_sign(&self, sign: Sign) -> LinearFormProduct {
        LinearFormProduct {
            exponents: self.exponents.clone(),
            doubled: self.doubled.clone(),
            sign,
        }
    }

    /// Sum `b_j + ... + b_N` of the exponents from width `j` up.
    fn suffix_sum(&self, j: usize) -> Rational {
        let mut acc = Rational::zero();
        for b in &self.exponents[j - 1..] {
            acc += b;
        }
        acc
    }

    /// Coefficient of `x1^{k_1} ... xN^{k_N}`, honoring the sign convention.
    ///
    /// Not defined when a doubled factor is present (the closed form exists
    /// only on the diagonal there; use [`Self::diag_coeff`]).
    pub fn coeff(&self, index: &MultiIndex) -> Result<Rational> {
        if self.doubled.is_some() {
            return Err(Error::DoubledUnsupported);
        }
        let n = self.n_vars();
        if index.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                got: index.len(),
            });
        }
        let ks = index.entries();
        let mut acc = Rational::one();
        // suffix of k's already consumed: k_N + ... + k_{j+1}
        let mut consumed = 0usize;
        for j in (1..=n).rev() {
            let upper = self.suffix_sum(j) - arith::int(consumed as i64);
            acc *= arith::gen_binomial(&upper, ks[j - 1]);
            consumed += ks[j - 1];
        }
        if self.sign == Sign::Minus && index.total_degree() % 2 == 1 {
            acc = -acc;
        }
        Ok(acc)
    }

    /// Diagonal coefficient: the coefficient of `x1^k ... xN^k`.
    pub fn diag_coeff(&self, k: usize) -> Rational {
        let n = self.n_vars();
        let mut acc = Rational::one();
        match &self.doubled {
            None => {
                for j in 1..=n {
                    let upper = self.suffix_sum(j) - arith::int(((n - j) * k) as i64);
                    acc *= arith::gen_binomial(&upper, k);
                }
            }
            Some(b) => {
                acc = doubled_kernel_coeff(b, k) * arith::gen_binomial(&self.exponents[n - 1], k);
                for j in (1..=n.saturating_sub(2)).rev() {
                    let upper = self.suffix_sum(j) + b - arith::int(((n - j) * k) as i64);
                    acc *= arith::gen_binomial(&upper, k);
                }
            }
        }
        if self.sign == Sign::Minus && (n * k) % 2 == 1 {
            acc = -acc;
        }
        acc
    }

    /// Diagonal coefficients 0..=order.
    pub fn diag_series(&self, order: usize) -> Series {
        Series::new((0..=order).map(|k| self.diag_coeff(k)).collect())
    }
}

impl fmt::Display for LinearFormProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, b) in self.exponents.iter().enumerate() {
            if !b.is_zero() {
                parts.push(format!("lin({})^{{{}}}", i + 1, b));
            }
        }
        if let Some(b) = &self.doubled {
            parts.push(format!("dbl({})^{{{}}}", self.n_vars() - 1, b));
        }
        let sign = match self.sign {
            Sign::Plus => " (plus)",
            Sign::Minus => "",
        };
        write!(f, "{}{}", parts.join(" * "), sign)
    }
}

/// Closed form for the coefficient of `x^k` in `(1+2x)^b / (1+x)^{k+1}`:
/// `4^k C((b-1)/2, k)`.
///
/// This is the kernel that makes doubled-variable products hypergeometric;
/// the variable coefficient 2 is essential, no other value admits such a
/// closed form.
pub fn doubled_kernel_coeff(b: &Rational, k: usize) -> Rational {
    arith::int(4).pow(k as i32) * arith::gen_binomial(&((b - Rational::one()) / arith::int(2)), k)
}

/// Parse the CLI textual form: `lin(m)^b` factors joined by `*`, plus at
/// most one `dbl(m)^b` factor; exponents are `p/q` with optional braces.
///
/// `lin(m)^b` is `(1 ± x1 ± ... ± xm)^b`; `dbl(m)^b` is
/// `(1 ± x1 ± ... ± x_{m-1} ± 2 xm)^b` and must span exactly one variable
/// less than the widest plain form. Repeated `lin` widths merge by adding
/// exponents. Whitespace is ignored.
pub fn parse_product(text: &str, sign: Sign) -> Result<LinearFormProduct> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse {
            message: "empty product".into(),
        });
    }
    let mut widths: Vec<(usize, Rational)> = Vec::new();
    let mut doubled: Option<(usize, Rational)> = None;
    for factor in compact.split('*') {
        let (kind, rest) = if let Some(rest) = factor.strip_prefix("lin(") {
            ("lin", rest)
        } else if let Some(rest) = factor.strip_prefix("dbl(") {
            ("dbl", rest)
        } else {
            return Err(Error::Parse {
                message: format!("factor \"{factor}\" must start with lin( or dbl("),
            });
        };
        let close = rest.find(')').ok_or_else(|| Error::Parse {
            message: format!("factor \"{factor}\" is missing a closing parenthesis"),
        })?;
        let width: usize = rest[..close].parse().map_err(|_| Error::Parse {
            message: format!("invalid width in factor \"{factor}\""),
        })?;
        if width == 0 {
            return Err(Error::Parse {
                message: format!("zero width in factor \"{factor}\""),
            });
        }
        let after = &rest[close + 1..];
        let exp_text = after.strip_prefix('^').ok_or_else(|| Error::Parse {
            message: format!("factor \"{factor}\" is missing ^exponent"),
        })?;
        let exp_text = exp_text
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(exp_text);
        let exponent = arith::parse_rational(exp_text)?;
        match kind {
            "lin" => widths.push((width, exponent)),
            _ => {
                if doubled.is_some() {
                    return Err(Error::Parse {
                        message: "at most one dbl(...) factor is allowed".into(),
                    });
                }
                doubled = Some((width, exponent));
            }
        }
    }
    let mut n_vars = widths.iter().map(|(w, _)| *w).max().unwrap_or(0);
    if let Some((w, _)) = doubled {
        n_vars = n_vars.max(w + 1);
    }
    let mut exponents = vec![Rational::zero(); n_vars];
    for (w, b) in widths {
        exponents[w - 1] += b;
    }
    if let Some((w, _)) = doubled {
        if w + 1 != n_vars {
            return Err(Error::Parse {
                message: format!(
                    "dbl({w}) must span one variable less than the widest form (got {n_vars} variables)"
                ),
            });
        }
    }
    LinearFormProduct::new(exponents, doubled.map(|(_, b)| b), sign)
}
