//! Generalized hypergeometric parameter lists and exact truncated series.
//!
//! A [`PFQParams`] value is a pFq up to its argument scaling: top parameters
//! `a_1..a_p`, bottom parameters `b_1..b_q`, and a rational `scale` so that
//! the represented function is `pFq(a; b; scale * t)`. Coefficient `k` is
//!
//! ```text
//! scale^k * (a_1)_k ... (a_p)_k / ((b_1)_k ... (b_q)_k * k!)
//! ```
//!
//! [`Series`] is a truncated univariate power series with exact rational
//! coefficients; comparisons never pad, they only look at the shared prefix.
//! The module also carries Hadamard products, argument rescalings, parameter
//! cancellation, and linear-recurrence verification for coefficient
//! sequences.

use std::fmt;

use num_traits::One;

use crate::arith::{self, Rational};
use crate::{Error, Result};

/// Parameters of a generalized hypergeometric function `pFq(a; b; scale*t)`.
///
/// No bottom parameter may be a nonpositive integer (the corresponding
/// Pochhammer factor would vanish); top parameters are unrestricted, a
/// nonpositive-integer top just terminates the series. Parameter order is
/// irrelevant to the coefficients but preserved for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFQParams {
    top: Vec<Rational>,
    bottom: Vec<Rational>,
    scale: Rational,
}

impl PFQParams {
    pub fn new(top: Vec<Rational>, bottom: Vec<Rational>, scale: Rational) -> Result<Self> {
        for b in &bottom {
            if arith::is_nonpositive_integer(b) {
                return Err(Error::InvalidBottomParameter {
                    value: b.to_string(),
                });
            }
        }
        Ok(PFQParams { top, bottom, scale })
    }

    pub fn top(&self) -> &[Rational] {
        &self.top
    }

    pub fn bottom(&self) -> &[Rational] {
        &self.bottom
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    /// Same parameters with a different argument scaling.
    pub fn with_scale(&self, scale: Rational) -> PFQParams {
        PFQParams {
            top: self.top.clone(),
            bottom: self.bottom.clone(),
            scale,
        }
    }

    /// Cancel matched top/bottom pairs (multiset cancellation). Coefficients
    /// are unchanged; surviving parameters keep their relative order.
    pub fn reduce(&self) -> PFQParams {
        let mut top_left = self.top.clone();
        let mut bottom = Vec::new();
        for b in &self.bottom {
            if let Some(pos) = top_left.iter().position(|t| t == b) {
                top_left.remove(pos);
            } else {
                bottom.push(b.clone());
            }
        }
        PFQParams {
            top: top_left,
            bottom,
            scale: self.scale.clone(),
        }
    }

    /// Coefficient of `t^k`:
    /// `scale^k * prod (a_i)_k / (prod (b_j)_k * k!)`.
    pub fn coeff(&self, k: usize) -> Rational {
        let mut num = Rational::one();
        for a in &self.top {
            num *= arith::pochhammer(a, k);
        }
        let mut den = Rational::from_integer(arith::factorial(k));
        for b in &self.bottom {
            den *= arith::pochhammer(b, k);
        }
        self.scale.pow(k as i32) * num / den
    }

    /// Coefficients 0..=order as a series.
    pub fn series(&self, order: usize) -> Series {
        Series::new((0..=order).map(|k| self.coeff(k)).collect())
    }

    /// Equality as a function: same scale and same top/bottom multisets.
    pub fn same_function(&self, other: &PFQParams) -> bool {
        fn sorted(v: &[Rational]) -> Vec<Rational> {
            let mut v = v.to_vec();
            v.sort();
            v
        }
        self.scale == other.scale
            && sorted(&self.top) == sorted(&other.top)
            && sorted(&self.bottom) == sorted(&other.bottom)
    }

    /// `{"top": [...], "bottom": [...], "scale": "p/q"}` with rationals as
    /// strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "top": self.top.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "bottom": self.bottom.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "scale": self.scale.to_string(),
        })
    }
}

impl fmt::Display for PFQParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(v: &[Rational]) -> String {
            v.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        }
        write!(
            f,
            "{}F{}([{}], [{}]; {} t)",
            self.top.len(),
            self.bottom.len(),
            join(&self.top),
            join(&self.bottom),
            self.scale
        )
    }
}

/// Truncated univariate power series `c_0 + c_1 t + ... + c_K t^K` with
/// exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Panics on an empty coefficient list; the order is `len - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series holds at least the constant term"
        );
        Series { coeffs }
    }

    /// Inclusive truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Term-wise (Hadamard) product; the result holds the shared prefix.
    pub fn hadamard(&self, other: &Series) -> Series {
        let n = self.coeffs.len().min(other.coeffs.len());
        Series::new((0..n).map(|k| &self.coeffs[k] * &other.coeffs[k]).collect())
    }

    /// Argument rescaling `t -> lambda t`, i.e. `c_k -> lambda^k c_k`.
    pub fn scale_arg(&self, lambda: &Rational) -> Series {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow *= lambda;
        }
        Series::new(out)
    }

    /// JSON array of rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The binomial series `(1-t)^(-c) = sum_k (c)_k / k! t^k`, truncated.
pub fn binomial_series(c: &Rational, order: usize) -> Series {
    Series::new(
        (0..=order)
            .map(|k| arith::pochhammer(c, k) / Rational::from_integer(arith::factorial(k)))
            .collect(),
    )
}

/// Outcome of comparing two series on their shared prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesCompare {
    /// Agreement up to and including `order` (the shorter of the two).
    Equal { order: usize },
    /// First disagreeing index with both values.
    Mismatch {
        index: usize,
        left: Rational,
        right: Rational,
    },
}

/// Exact comparison up to the shared truncation order; never pads.
pub fn series_equal(left: &Series, right: &Series) -> SeriesCompare {
    let n = left.order().min(right.order());
    for k in 0..=n {
        if left.coeff(k) != right.coeff(k) {
            return SeriesCompare::Mismatch {
                index: k,
                left: left.coeff(k).clone(),
                right: right.coeff(k).clone(),
            };
        }
    }
    SeriesCompare::Equal { order: n }
}

/// A linear recurrence `sum_{i=0}^{r} p_i(n) u_{n+i} = 0` with polynomial
/// coefficients `p_i` given as rational coefficient lists in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<Vec<Rational>>,
}

impl Recurrence {
    /// Trailing identically-zero polynomials are trimmed (so specializing a
    /// parametrized recurrence may lower its order); errors if nothing
    /// remains.
    pub fn new(coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        use num_traits::Zero;
        let mut coeffs: Vec<Vec<Rational>> = coeffs
            .into_iter()
            .map(|mut p| {
                while p.last().is_some_and(|c| c.is_zero()) {
                    p.pop();
                }
                p
            })
            .collect();
        while coeffs.last().is_some_and(|p| p.is_empty()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::DegenerateSpec {
                reason: "recurrence has no nonzero coefficient polynomial".into(),
            });
        }
        Ok(Recurrence { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn poly_at(&self, i: usize, n: usize) -> Rational {
        use num_traits::Zero;
        let x = arith::int(n as i64);
        let mut acc = Rational::zero();
        for c in self.coeffs[i].iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

/// Outcome of checking a recurrence against a coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceCheck {
    /// `sum p_i(n) c_{n+i} = 0` held for every representable `n`, i.e.
    /// `0 <= n <= through`.
    Holds { through: usize },
    /// First index where the combination is nonzero, with its value.
    FailsAt { n: usize, residual: Rational },
}

/// Verify `sum_i p_i(n) c_{n+i} = 0` for all `n` the truncated series can
/// represent. Requires `series.order() >= recurrence.order()`.
pub fn check_recurrence(series: &Series, rec: &Recurrence) -> RecurrenceCheck {
    use num_traits::Zero;
    let r = rec.order();
    assert!(
        series.order() >= r,
        "series too short for the recurrence order"
    );
    let through = series.order() - r;
    for n in 0..=through {
        let mut acc = Rational::zero();
        for i in 0..=r {
            acc += rec.poly_at(i, n) * series.coeff(n + i);
        }
        if !acc.is_zero() {
            return RecurrenceCheck::FailsAt { n, residual: acc };
        }
    }
    RecurrenceCheck::Holds { through }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn params(top: &[Rational], bottom: &[Rational], scale: Rational) -> PFQParams {
        PFQParams::new(top.to_vec(), bottom.to_vec(), scale).unwrap()
    }

    #[test]
    fn coeff_examples() {
        let p = params(
            &[rat(2, 9), rat(5, 9), rat(8, 9)],
            &[int(1), rat(2, 3)],
            int(27),
        );
        assert_eq!(p.coeff(0), int(1));
        assert_eq!(p.coeff(1), rat(40, 9));

        let q = params(&[rat(1, 2)], &[], int(1));
        assert_eq!(q.coeff(3), rat(5, 16));
    }

    #[test]
    fn series_examples() {
        let exp = params(&[], &[], int(1)).series(3);
        assert_eq!(exp.coeffs(), &[int(1), int(1), rat(1, 2), rat(1, 6)]);

        let p = params(
            &[rat(2, 9), rat(5, 9), rat(8, 9)],
            &[int(1), rat(2, 3)],
            int(27),
        );
        assert_eq!(p.series(1).coeffs(), &[int(1), rat(40, 9)]);
    }

    #[test]
    fn bottom_validation() {
        assert!(PFQParams::new(vec![], vec![int(0)], int(1)).is_err());
        assert!(PFQParams::new(vec![], vec![int(-3)], int(1)).is_err());
        // nonpositive-integer top parameters are fine: the series terminates
        let p = params(&[int(-2)], &[rat(1, 2)], int(1));
        assert_eq!(p.coeff(3), int(0));
    }

    #[test]
    fn binomial_series_examples() {
        assert_eq!(
            binomial_series(&int(1), 3).coeffs(),
            &[int(1), int(1), int(1), int(1)]
        );
        assert_eq!(
            binomial_series(&rat(1, 2), 2).coeffs(),
            &[int(1), rat(1, 2), rat(3, 8)]
        );
        assert_eq!(
            binomial_series(&int(0), 4).coeffs(),
            &[int(1), int(0), int(0), int(0), int(0)]
        );
    }

    #[test]
    fn hadamard_examples() {
        let a = Series::new(vec![int(1), int(2), int(4), int(8)]);
        let b = Series::new(vec![int(1), int(3), int(9), int(27)]);
        assert_eq!(
            a.hadamard(&b).coeffs(),
            &[int(1), int(6), int(36), int(216)]
        );

        let ones = binomial_series(&int(1), 3);
        assert_eq!(a.hadamard(&ones), a);
    }

    #[test]
    fn scale_arg_examples() {
        let s = Series::new(vec![int(1), int(2), int(4)]);
        assert_eq!(s.scale_arg(&int(1)), s);
        assert_eq!(s.scale_arg(&int(-1)).coeffs(), &[int(1), int(-2), int(4)]);

        let built = params(
            &[rat(2, 9), rat(5, 9), rat(8, 9)],
            &[int(1), rat(2, 3)],
            int(27),
        );
        let rescaled = built.series(1).scale_arg(&rat(1, 27));
        assert_eq!(rescaled.coeffs(), &[int(1), rat(40, 243)]);
    }

    #[test]
    fn reduce_examples() {
        // R = 1/3: the 4F3 built for (1-x-y)^R/(1-x-y-z) collapses to a 3F2
        let raw = params(
            &[rat(2, 9), rat(5, 9), rat(8, 9), int(1)],
            &[rat(2, 3), int(1), int(1)],
            int(27),
        );
        let red = raw.reduce();
        assert_eq!(red.top(), &[rat(2, 9), rat(5, 9), rat(8, 9)]);
        assert_eq!(red.bottom(), &[rat(2, 3), int(1)]);

        let full = params(&[rat(1, 2)], &[rat(1, 2)], int(1)).reduce();
        assert!(full.top().is_empty() && full.bottom().is_empty());

        let untouched = params(&[rat(1, 3)], &[rat(1, 4)], int(1));
        assert_eq!(untouched.reduce(), untouched);
    }

    #[test]
    fn series_equal_examples() {
        let s = Series::new(vec![int(1), int(2)]);
        assert_eq!(series_equal(&s, &s), SeriesCompare::Equal { order: 1 });
        let t = Series::new(vec![int(1), int(3)]);
        assert_eq!(
            series_equal(&s, &t),
            SeriesCompare::Mismatch {
                index: 1,
                left: int(2),
                right: int(3)
            }
        );
        // comparison stops at the shorter order, no padding
        let long = Series::new(vec![int(1), int(2), int(99)]);
        assert_eq!(series_equal(&s, &long), SeriesCompare::Equal { order: 1 });
    }

    #[test]
    fn recurrence_central_binomial() {
        // (n+1) u_{n+1} - 2 (2n+1) u_n = 0
        let rec = Recurrence::new(vec![vec![int(-2), int(-4)], vec![int(1), int(1)]]).unwrap();
        let central = Series::new(vec![int(1), int(2), int(6), int(20), int(70)]);
        assert_eq!(
            check_recurrence(&central, &rec),
            RecurrenceCheck::Holds { through: 3 }
        );
    }

    #[test]
    fn recurrence_failure_reported() {
        // u_{n+1} - u_n = 0 against [1, 1, 2]
        let rec = Recurrence::new(vec![vec![int(-1)], vec![int(1)]]).unwrap();
        let s = Series::new(vec![int(1), int(1), int(2)]);
        assert_eq!(
            check_recurrence(&s, &rec),
            RecurrenceCheck::FailsAt {
                n: 1,
                residual: int(1)
            }
        );
    }

    #[test]
    fn recurrence_trims_zero_leading_polys() {
        let rec = Recurrence::new(vec![vec![int(1)], vec![int(0), int(0)], vec![int(0)]]).unwrap();
        assert_eq!(rec.order(), 0);
        assert!(Recurrence::new(vec![vec![int(0)]]).is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=9).prop_map(|(p, q)| rat(p, q))
    }

    fn valid_bottom() -> impl Strategy<Value = Rational> {
        small_rational().prop_filter("bottom must not be a nonpositive integer", |r| {
            !crate::arith::is_nonpositive_integer(r)
        })
    }

    proptest! {
        // replacing a bottom 1 by c and Hadamard-multiplying with (1-t)^(-c)
        // restores the original coefficients
        #[test]
        fn bottom_swap_identity(
            top in proptest::collection::vec(small_rational(), 0..3),
            c in valid_bottom(),
            k in 0usize..=20,
        ) {
            let with_one = params(&top, &[int(1)], int(1));
            let swapped = params(&top, std::slice::from_ref(&c), int(1));
            let weight = arith::pochhammer(&c, k) / Rational::from_integer(arith::factorial(k));
            prop_assert_eq!(swapped.coeff(k) * weight, with_one.coeff(k));
        }

        #[test]
        fn hadamard_algebra(
            a in proptest::collection::vec(small_rational(), 1..6),
            b in proptest::collection::vec(small_rational(), 1..6),
            c in proptest::collection::vec(small_rational(), 1..6),
            lambda in small_rational(),
        ) {
            let (a, b, c) = (Series::new(a), Series::new(b), Series::new(c));
            prop_assert_eq!(a.hadamard(&b), b.hadamard(&a));
            prop_assert_eq!(a.hadamard(&b).hadamard(&c), a.hadamard(&b.hadamard(&c)));
            prop_assert_eq!(
                a.hadamard(&b).scale_arg(&lambda),
                a.scale_arg(&lambda).hadamard(&b)
            );
        }

        // planting duplicates across top and bottom must not change coefficients
        #[test]
        fn reduce_preserves_coefficients(
            top in proptest::collection::vec(small_rational(), 0..3),
            bottom in proptest::collection::vec(valid_bottom(), 0..3),
            dup in valid_bottom(),
            k in 0usize..=20,
        ) {
            let mut t = top.clone();
            t.push(dup.clone());
            let mut b = bottom.clone();
            b.push(dup);
            let p = params(&t, &b, int(1));
            prop_assert_eq!(p.reduce().coeff(k), p.coeff(k));
        }

        // consecutive-coefficient ratio of a pFq
        #[test]
        fn coefficient_ratio(
            top in proptest::collection::vec(small_rational(), 0..3),
            bottom in proptest::collection::vec(valid_bottom(), 0..3),
            scale in small_rational().prop_filter("nonzero", |r| !num_traits::Zero::is_zero(r)),
            k in 0usize..=15,
        ) {
            use num_traits::Zero;
            let p = params(&top, &bottom, scale.clone());
            let ck = p.coeff(k);
            prop_assume!(!ck.is_zero());
            let mut ratio = scale;
            for a in &top {
                ratio *= a + int(k as i64);
            }
            for b in &bottom {
                ratio /= b + int(k as i64);
            }
            ratio /= int(k as i64 + 1);
            prop_assert_eq!(p.coeff(k + 1), ck * ratio);
        }
    }
}
