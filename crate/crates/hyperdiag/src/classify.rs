//! Algebraicity and Hadamard-grade analysis of hypergeometric functions.
//!
//! Two necessary/sufficient tools are combined:
//!
//! - the **weight screen** ([`weight_screen`]): an excess of integer bottom
//!   parameters over integer top parameters obstructs algebraicity (used
//!   only as a necessary condition, never as a proof of algebraicity);
//! - the **interlacing criterion** ([`interlacing_check`]): a reduced
//!   `nFn-1` with rational parameters is algebraic iff for every residue
//!   `c` coprime to the common denominator the rotated top and bottom
//!   parameter points strictly alternate on the unit circle.
//!
//! On top of these, [`classify_product`] decides algebraicity of the
//! diagonal of a plain linear-form product directly from its shape, and
//! [`grade2_search`] looks for a decomposition
//! `original = algebraic pFq ⋆ (1-t)^(-c)` by swapping a bottom parameter 1
//! for a bounded-denominator candidate `c` (term-wise the two sides agree
//! because `(1)_k = k!`).

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::hyperseries::PFQParams;
use crate::linform::LinearFormProduct;
use crate::{Error, Result};

/// Classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebraicity {
    Algebraic,
    Transcendental,
    /// The criterion does not apply (reducible parameters, or not an
    /// `nFn-1`); cancel or screen first.
    Inapplicable,
}

/// Evidence backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Every residue class (coprime to `modulus`) was checked and
    /// interlaces.
    Residues { modulus: u64, checked: Vec<u64> },
    /// First residue class whose point configuration fails to strictly
    /// alternate.
    FailingResidue { modulus: u64, residue: u64 },
    /// Positive monodromy-weight proxy: integer bottoms minus integer tops.
    Weight(usize),
}

/// A classification verdict with its reason and evidence.
///
/// `Algebraic` is only ever emitted when every required residue interlaces;
/// `Transcendental` always carries a witness (a positive weight or a failing
/// residue).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Algebraicity,
    pub reason: String,
    pub evidence: Option<Evidence>,
}

impl Verdict {
    fn inapplicable(reason: impl Into<String>) -> Self {
        Verdict {
            status: Algebraicity::Inapplicable,
            reason: reason.into(),
            evidence: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let status = match self.status {
            Algebraicity::Algebraic => "algebraic",
            Algebraicity::Transcendental => "transcendental",
            Algebraicity::Inapplicable => "inapplicable",
        };
        let mut obj = serde_json::json!({ "status": status, "reason": self.reason });
        match &self.evidence {
            Some(Evidence::Residues { modulus, checked }) => {
                obj["modulus"] = (*modulus).into();
                obj["residues_checked"] = checked.clone().into();
            }
            Some(Evidence::FailingResidue { modulus, residue }) => {
                obj["modulus"] = (*modulus).into();
                obj["failing_residue"] = (*residue).into();
            }
            Some(Evidence::Weight(w)) => {
                obj["weight"] = (*w).into();
            }
            None => {}
        }
        obj
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = match self.status {
            Algebraicity::Algebraic => "algebraic",
            Algebraicity::Transcendental => "transcendental",
            Algebraicity::Inapplicable => "inapplicable",
        };
        write!(f, "{status}: {}", self.reason)
    }
}

/// Monodromy-weight proxy: `max(0, #integer bottoms - #integer tops)`,
/// counting the explicit bottom list only. A positive value certifies
/// transcendence; zero says nothing. Expects reduced parameters.
pub fn weight_screen(params: &PFQParams) -> usize {
    let top = params.top().iter().filter(|r| arith::is_integer(r)).count();
    let bottom = params
        .bottom()
        .iter()
        .filter(|r| arith::is_integer(r))
        .count();
    bottom.saturating_sub(top)
}

/// Representative of `x` in the half-open interval `(0, 1]`; integers map
/// to 1, so the implicit bottom parameter sits at the point 1 on the circle.
fn unit_rep(x: &Rational) -> Rational {
    let f = x - x.floor();
    if f.is_zero() {
        Rational::one()
    } else {
        f
    }
}

/// Beukers–Heckman interlacing test on reduced parameters.
///
/// The implicit bottom 1 (the `k!` slot) is appended first. For every
/// residue `c` in `[1, d)` coprime to the common denominator `d`, the
/// points `{frac(c*a_i)}` and `{frac(c*b_j)}` must strictly alternate on
/// the circle, all distinct. Algebraic iff every residue interlaces; the
/// first failing residue is the transcendence witness. When top and bottom
/// share a residue the function is reducible and the criterion does not
/// apply (unless the weight screen already settles transcendence).
pub fn interlacing_check(params: &PFQParams) -> Verdict {
    let tops: Vec<Rational> = params.top().iter().map(unit_rep).collect();
    let mut bottoms: Vec<Rational> = params.bottom().iter().map(unit_rep).collect();
    bottoms.push(Rational::one());

    if tops.len() != bottoms.len() {
        return Verdict::inapplicable(format!(
            "criterion needs as many tops as bottoms plus the implicit 1 ({} vs {})",
            tops.len(),
            bottoms.len()
        ));
    }

    let mut remaining = bottoms.clone();
    let shared = tops.iter().any(|t| {
        if let Some(pos) = remaining.iter().position(|b| b == t) {
            remaining.remove(pos);
            true
        } else {
            false
        }
    });
    if shared {
        let w = weight_screen(params);
        if w > 0 {
            return Verdict {
                status: Algebraicity::Transcendental,
                reason: "integer bottom parameters exceed integer tops".into(),
                evidence: Some(Evidence::Weight(w)),
            };
        }
        return Verdict::inapplicable("reducible parameters - cancel or screen first");
    }

    let all: Vec<Rational> = tops.iter().chain(bottoms.iter()).cloned().collect();
    let Some(modulus) = arith::denominator_lcm(&all).filter(|d| *d <= 1_000_000) else {
        return Verdict::inapplicable("common denominator too large to enumerate residues");
    };

    let residues: Vec<u64> = (1..modulus.max(2))
        .filter(|c| c.gcd(&modulus) == 1)
        .collect();
    for &c in &residues {
        if !residue_interlaces(&tops, &bottoms, c) {
            return Verdict {
                status: Algebraicity::Transcendental,
                reason: format!("points fail to strictly interlace at residue {c} (mod {modulus})"),
                evidence: Some(Evidence::FailingResidue {
                    modulus,
                    residue: c,
                }),
            };
        }
    }
    Verdict {
        status: Algebraicity::Algebraic,
        reason: format!(
            "all {} residue classes mod {} strictly interlace",
            residues.len(),
            modulus
        ),
        evidence: Some(Evidence::Residues {
            modulus,
            checked: residues,
        }),
    }
}

fn residue_interlaces(tops: &[Rational], bottoms: &[Rational], c: u64) -> bool {
    let c = arith::int(c as i64);
    let mut points: Vec<(Rational, bool)> = tops
        .iter()
        .map(|a| (unit_rep(&(a * &c)), true))
        .chain(bottoms.iter().map(|b| (unit_rep(&(b * &c)), false)))
        .collect();
    points.sort_by(|x, y| x.0.cmp(&y.0));
    // all 2n points distinct and the sides alternate; with equal counts,
    // alternation in sorted order is alternation on the circle
    points
        .windows(2)
        .all(|w| w[0].0 != w[1].0 && w[0].1 != w[1].1)
}

/// Shape-based classification of `Diag` of a plain linear-form product:
/// algebraic iff it is univariate, or bivariate with an integer outermost
/// exponent; transcendental otherwise.
pub fn classify_product(p: &LinearFormProduct) -> Result<Verdict> {
    if p.doubled().is_some() {
        return Err(Error::DoubledUnsupported);
    }
    let n = p.n_vars();
    let verdict = if n == 1 {
        Verdict {
            status: Algebraicity::Algebraic,
            reason: "univariate: the diagonal is the algebraic function itself".into(),
            evidence: None,
        }
    } else if n == 2 && arith::is_integer(&p.exponents()[1]) {
        Verdict {
            status: Algebraicity::Algebraic,
            reason: "bivariate with integer outermost exponent: Hadamard product of an \
                     algebraic 2F1 with a rational power of (1-t)"
                .into(),
            evidence: None,
        }
    } else if n == 2 {
        Verdict {
            status: Algebraicity::Transcendental,
            reason: "non-integer outermost exponent leaves an unmatched integer bottom \
                     parameter"
                .into(),
            evidence: None,
        }
    } else {
        Verdict {
            status: Algebraicity::Transcendental,
            reason: format!(
                "{n} nested variables force at least {} integer bottom parameters, more than \
                 the tops can match",
                n - 1
            ),
            evidence: None,
        }
    };
    Ok(verdict)
}

/// A successful grade-2 decomposition:
/// `original = pfq(algebraic_params) ⋆ (1-t)^(-hadamard_factor)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grade2Decomposition {
    pub hadamard_factor: Rational,
    pub algebraic_params: PFQParams,
    pub verdict: Verdict,
}

/// Search for a grade-2 decomposition of a reduced pFq whose bottom contains
/// an explicit 1: try every `c = i/m` with `2 <= m <= denominator_bound`,
/// `gcd(i, m) = 1`, replacing one bottom 1 by `c`; the first replacement
/// that passes the interlacing criterion certifies
/// `original = algebraic pFq ⋆ (1-t)^(-c)`.
pub fn grade2_search(
    params: &PFQParams,
    denominator_bound: u64,
) -> Result<Option<Grade2Decomposition>> {
    let one_pos = params
        .bottom()
        .iter()
        .position(|b| b.is_one())
        .ok_or(Error::NoUnitBottom)?;
    for m in 2..=denominator_bound {
        for i in 1..m {
            if i.gcd(&m) != 1 {
                continue;
            }
            let c = Rational::new((i as i64).into(), (m as i64).into());
            let mut bottom = params.bottom().to_vec();
            bottom[one_pos] = c.clone();
            let candidate = PFQParams::new(params.top().to_vec(), bottom, params.scale().clone())
                .expect("a proper fraction is a valid bottom parameter");
            let verdict = interlacing_check(&candidate.reduce());
            if verdict.status == Algebraicity::Algebraic {
                return Ok(Some(Grade2Decomposition {
                    hadamard_factor: c,
                    algebraic_params: candidate,
                    verdict,
                }));
            }
        }
    }
    Ok(None)
}
