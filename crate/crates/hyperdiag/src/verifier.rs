//! Multi-route identity verification and the scripted reproduce scenarios.
//!
//! [`verify_identity`] compares every computable route to the diagonal of a
//! linear-form product — the product's own closed form, the built pFq, the
//! ratio family's independent closed form when it applies, and the
//! brute-force oracle — and reports exact agreement or the first mismatch.
//! Builder refusals (a constructed bottom parameter hitting a nonpositive
//! integer) are recorded on the report while the remaining routes are still
//! checked.
//!
//! [`scenario`] runs one of the named, scripted identity checks; see
//! [`SCENARIO_NAMES`] for the list and [`default_runs`] for the argument
//! sets used by `reproduce all`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::{self, int, rat, Rational};
use crate::builders::{self, RatioSpec};
use crate::classify::{self, Algebraicity, Evidence};
use crate::hyperseries::{binomial_series, PFQParams, Recurrence, RecurrenceCheck, Series};
use crate::linform::{LinearFormProduct, Sign};
use crate::oracle;
use crate::{Error, Result};

/// The scripted scenario names accepted by [`scenario`] and the CLI
/// `reproduce` subcommand.
pub const SCENARIO_NAMES: [&str; 15] = [
    "eq10",
    "eq11",
    "eq23-26",
    "eq30",
    "eq31",
    "thm2-id1",
    "thm2-id2",
    "example3-5F4",
    "bbmw15",
    "straub",
    "recurrence-U",
    "hadamard-asym-1",
    "hadamard-asym-2",
    "corollary16",
    "fig1",
];

/// Named rational arguments for a scenario run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScenarioArgs(BTreeMap<String, Rational>);

impl ScenarioArgs {
    pub fn new() -> Self {
        ScenarioArgs(BTreeMap::new())
    }

    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: Rational) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Result<Rational> {
        self.0
            .get(name)
            .cloned()
            .ok_or_else(|| Error::MissingArgument {
                name: name.to_string(),
            })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&String, &Rational)> {
        self.0.iter()
    }
}

/// Outcome of a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyStatus {
    /// Every computed route agreed on its shared order range.
    Verified,
    /// First disagreeing coefficient, with each covering route's value.
    Mismatch {
        index: usize,
        values: Vec<(String, Rational)>,
    },
    /// Nothing could be checked: the builder refused and no fallback route
    /// was available.
    Refused { reason: String },
    /// A non-coefficient check failed (a search found nothing, a verdict or
    /// a count came out wrong).
    Failed { reason: String },
}

/// Result of verifying one identity: which parameter lists were built, which
/// routes were computed to which orders, and whether they all agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub description: String,
    pub raw_params: Option<PFQParams>,
    pub reduced_params: Option<PFQParams>,
    pub refusal: Option<String>,
    /// `(route name, order checked)` per computed route.
    pub orders: Vec<(String, usize)>,
    pub notes: Vec<String>,
    pub status: VerifyStatus,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.status == VerifyStatus::Verified
    }

    pub fn to_json(&self) -> serde_json::Value {
        let status = match &self.status {
            VerifyStatus::Verified => serde_json::json!("verified"),
            VerifyStatus::Mismatch { index, values } => serde_json::json!({
                "mismatch": {
                    "index": index,
                    "values": values
                        .iter()
                        .map(|(name, v)| (name.clone(), v.to_string()))
                        .collect::<BTreeMap<_, _>>(),
                }
            }),
            VerifyStatus::Refused { reason } => serde_json::json!({ "refused": reason }),
            VerifyStatus::Failed { reason } => serde_json::json!({ "failed": reason }),
        };
        serde_json::json!({
            "description": self.description,
            "status": status,
            "params": self.raw_params.as_ref().map(|p| p.to_json()),
            "reduced": self.reduced_params.as_ref().map(|p| p.to_json()),
            "refusal": self.refusal,
            "orders": self.orders.iter().cloned().collect::<BTreeMap<_, _>>(),
            "notes": self.notes,
        })
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.description)?;
        match &self.status {
            VerifyStatus::Verified => writeln!(f, "  status: verified")?,
            VerifyStatus::Mismatch { index, values } => {
                writeln!(f, "  status: MISMATCH at coefficient {index}")?;
                for (name, v) in values {
                    writeln!(f, "    {name}: {v}")?;
                }
            }
            VerifyStatus::Refused { reason } => writeln!(f, "  status: refused ({reason})")?,
            VerifyStatus::Failed { reason } => writeln!(f, "  status: FAILED ({reason})")?,
        }
        if let Some(p) = &self.raw_params {
            writeln!(f, "  params:  {p}")?;
        }
        if let Some(p) = &self.reduced_params {
            writeln!(f, "  reduced: {p}")?;
        }
        if let Some(r) = &self.refusal {
            writeln!(f, "  builder refused: {r}")?;
        }
        if !self.orders.is_empty() {
            let checked: Vec<String> = self
                .orders
                .iter()
                .map(|(n, k)| format!("{n} to order {k}"))
                .collect();
            writeln!(f, "  checked: {}", checked.join(", "))?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        Ok(())
    }
}

/// Accumulates routes and annotations, then compares everything.
struct ReportBuilder {
    description: String,
    raw_params: Option<PFQParams>,
    reduced_params: Option<PFQParams>,
    refusal: Option<String>,
    notes: Vec<String>,
    routes: Vec<(String, Series)>,
    failure: Option<String>,
}

impl ReportBuilder {
    fn new(description: impl Into<String>) -> Self {
        ReportBuilder {
            description: description.into(),
            raw_params: None,
            reduced_params: None,
            refusal: None,
            notes: Vec::new(),
            routes: Vec::new(),
            failure: None,
        }
    }

    fn params(&mut self, p: &PFQParams) {
        self.raw_params = Some(p.clone());
        self.reduced_params = Some(p.reduce());
    }

    fn refusal(&mut self, reason: impl Into<String>) {
        self.refusal = Some(reason.into());
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn route(&mut self, name: impl Into<String>, series: Series) {
        self.routes.push((name.into(), series));
    }

    fn fail(&mut self, reason: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some(reason.into());
        }
    }

    fn finish(self) -> VerificationReport {
        let orders: Vec<(String, usize)> = self
            .routes
            .iter()
            .map(|(n, s)| (n.clone(), s.order()))
            .collect();
        let status = if let Some(reason) = self.failure {
            VerifyStatus::Failed { reason }
        } else if self.routes.len() < 2 {
            match &self.refusal {
                Some(reason) => VerifyStatus::Refused {
                    reason: reason.clone(),
                },
                None => VerifyStatus::Verified,
            }
        } else {
            compare_routes(&self.routes)
        };
        VerificationReport {
            description: self.description,
            raw_params: self.raw_params,
            reduced_params: self.reduced_params,
            refusal: self.refusal,
            orders,
            notes: self.notes,
            status,
        }
    }
}

/// All routes must agree pairwise on shared prefixes; comparing each against
/// the longest route is equivalent and reports the smallest disagreeing
/// index.
fn compare_routes(routes: &[(String, Series)]) -> VerifyStatus {
    let reference = routes
        .iter()
        .max_by_key(|(_, s)| s.order())
        .expect("at least two routes");
    let mut first: Option<usize> = None;
    for (_, series) in routes {
        let shared = series.order().min(reference.1.order());
        for k in 0..=shared {
            if series.coeff(k) != reference.1.coeff(k) {
                first = Some(first.map_or(k, |f| f.min(k)));
                break;
            }
        }
    }
    match first {
        None => VerifyStatus::Verified,
        Some(index) => VerifyStatus::Mismatch {
            index,
            values: routes
                .iter()
                .filter(|(_, s)| s.order() >= index)
                .map(|(n, s)| (n.clone(), s.coeff(index).clone()))
                .collect(),
        },
    }
}

/// Three-to-four-way verification that the diagonal of `product` equals its
/// constructed pFq.
///
/// Routes: the product's closed-form diagonal (always), the built pFq
/// (unless the builder refuses, which is recorded and does not abort), the
/// ratio family's independent closed form when the product has exactly two
/// nonzero exponents in the minus convention, and the brute-force oracle to
/// `oracle_order` (clamped to `closed_order`).
pub fn verify_identity(
    product: &LinearFormProduct,
    closed_order: usize,
    oracle_order: usize,
) -> VerificationReport {
    let oracle_order = oracle_order.min(closed_order);
    let mut rb = ReportBuilder::new(format!("diagonal of {product}"));
    rb.route("product", product.diag_series(closed_order));

    let built: Result<PFQParams> = match product.doubled() {
        Some(b) => {
            builders::doubled_params(product.exponents(), b).map(|p| flip_for_sign(p, product))
        }
        None => {
            let nonzero: Vec<usize> = product
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.is_zero())
                .map(|(j, _)| j + 1)
                .collect();
            if product.sign() == Sign::Minus && nonzero.len() == 2 {
                let (n, n_vars) = (nonzero[0], nonzero[1]);
                let spec = RatioSpec::new(
                    product.exponents()[n - 1].clone(),
                    -product.exponents()[n_vars - 1].clone(),
                    n,
                    n_vars,
                )
                .expect("two nonzero exponents form a valid ratio spec");
                rb.route(
                    "ratio-closed-form",
                    Series::new(
                        (0..=closed_order)
                            .map(|k| builders::ratio_diag_coeff(&spec, k))
                            .collect(),
                    ),
                );
                builders::ratio_params(&spec)
            } else {
                builders::nested_params(product.exponents()).map(|p| flip_for_sign(p, product))
            }
        }
    };
    match built {
        Ok(params) => {
            rb.route("pfq", params.series(closed_order));
            rb.params(&params);
        }
        Err(e) => rb.refusal(e.to_string()),
    }
    rb.route("oracle", oracle::oracle_diag(product, oracle_order));
    rb.finish()
}

/// Adjust plus-convention parameters to the product's sign: flipping the
/// variables' signs multiplies the diagonal argument by `(-1)^N`.
fn flip_for_sign(params: PFQParams, product: &LinearFormProduct) -> PFQParams {
    if product.sign() == Sign::Minus && product.n_vars() % 2 == 1 {
        let scale = -params.scale().clone();
        params.with_scale(scale)
    } else {
        params
    }
}

/// Check `hadamard(lhs, rhs) = expect` coefficient-wise to `order`.
pub fn hadamard_combination(
    lhs: &PFQParams,
    rhs: &PFQParams,
    expect: &PFQParams,
    order: usize,
) -> VerificationReport {
    let mut rb = ReportBuilder::new(format!("({lhs}) hadamard ({rhs}) = {expect}"));
    rb.params(expect);
    rb.route("hadamard", lhs.series(order).hadamard(&rhs.series(order)));
    rb.route("pfq", expect.series(order));
    rb.finish()
}

/// Run one scripted scenario; `order` overrides the scenario's default
/// truncation order.
pub fn scenario(
    name: &str,
    args: &ScenarioArgs,
    order: Option<usize>,
) -> Result<VerificationReport> {
    match name {
        "eq10" => ratio_scenario(name, rat(1, 3), order.unwrap_or(30)),
        "eq11" => ratio_scenario(name, rat(2, 3), order.unwrap_or(30)),
        "eq23-26" => ratio_scenario(name, args.get("R")?, order.unwrap_or(30)),
        "eq30" => doubled_scenario(name, rat(2, 3), order.unwrap_or(30)),
        "eq31" => doubled_scenario(name, rat(1, 3), order.unwrap_or(30)),
        "thm2-id1" => three_factor_scenario(
            args.get("R")?,
            args.get("S")?,
            args.get("T")?,
            order.unwrap_or(20),
        ),
        "thm2-id2" => doubled_family_scenario(args.get("R")?, args.get("S")?, order.unwrap_or(20)),
        "example3-5F4" => five_four_scenario(args.get("R")?, args.get("S")?, order.unwrap_or(20)),
        "bbmw15" => bbmw15_scenario(order.unwrap_or(5)),
        "straub" => straub_scenario(args.get("alpha")?, order.unwrap_or(8)),
        "recurrence-U" => recurrence_scenario(args.get("a")?, order.unwrap_or(40)),
        "hadamard-asym-1" => asym_scenario_1(args.get("Q")?, order.unwrap_or(20)),
        "hadamard-asym-2" => asym_scenario_2(args.get("Q")?, order.unwrap_or(20)),
        "corollary16" => corollary16_scenario(order.unwrap_or(20)),
        "fig1" => fig1_scenario(args.get("R")?, order.unwrap_or(30)),
        _ => Err(Error::UnknownScenario {
            name: name.to_string(),
        }),
    }
}

/// The scenario/argument pairs run by `reproduce all`.
pub fn default_runs() -> Vec<(&'static str, ScenarioArgs)> {
    let mut runs = vec![("eq10", ScenarioArgs::new()), ("eq11", ScenarioArgs::new())];
    for r in [rat(1, 3), rat(2, 3), rat(1, 2), rat(-1, 2), int(5)] {
        runs.push(("eq23-26", ScenarioArgs::new().with("R", r)));
    }
    runs.push(("eq30", ScenarioArgs::new()));
    runs.push(("eq31", ScenarioArgs::new()));
    runs.push((
        "thm2-id1",
        ScenarioArgs::new()
            .with("R", rat(1, 2))
            .with("S", rat(1, 3))
            .with("T", rat(1, 5)),
    ));
    runs.push((
        "thm2-id2",
        ScenarioArgs::new()
            .with("R", rat(1, 2))
            .with("S", rat(1, 3)),
    ));
    runs.push((
        "example3-5F4",
        ScenarioArgs::new()
            .with("R", rat(1, 2))
            .with("S", rat(1, 3)),
    ));
    runs.push(("bbmw15", ScenarioArgs::new()));
    for alpha in [rat(1, 2), int(2)] {
        runs.push(("straub", ScenarioArgs::new().with("alpha", alpha)));
    }
    for a in [int(0), int(1), int(2), int(3), int(5)] {
        runs.push(("recurrence-U", ScenarioArgs::new().with("a", a)));
    }
    for q in [rat(1, 2), rat(1, 5)] {
        runs.push(("hadamard-asym-1", ScenarioArgs::new().with("Q", q.clone())));
        runs.push(("hadamard-asym-2", ScenarioArgs::new().with("Q", q)));
    }
    runs.push(("corollary16", ScenarioArgs::new()));
    for r in [rat(1, 3), rat(2, 3)] {
        runs.push(("fig1", ScenarioArgs::new().with("R", r)));
    }
    runs
}

/// Note (or fail) on whether the built parameters match a reference tuple as
/// a function, after reduction on both sides.
fn note_reference_match(rb: &mut ReportBuilder, built: &PFQParams, reference: &PFQParams) {
    if built.reduce().same_function(&reference.reduce()) {
        rb.note("reduced parameters match the reference tuple");
    } else {
        rb.fail(format!(
            "built parameters {} do not match the reference tuple {}",
            built.reduce(),
            reference.reduce()
        ));
    }
}

/// `(1-x-y)^R / (1-x-y-z)` against
/// `3F2([(1-R)/3, (2-R)/3, (3-R)/3], [1, 1-R]; 27t)`.
fn ratio_scenario(name: &str, r: Rational, order: usize) -> Result<VerificationReport> {
    let spec = RatioSpec::new(r.clone(), int(1), 2, 3)?;
    let product = spec.product()?;
    let mut rb = ReportBuilder::new(format!(
        "{name}: diagonal of {product} as a 3F2 with tops in a step-1/3 progression, R = {r}"
    ));
    rb.route("product", product.diag_series(order));
    rb.route(
        "ratio-closed-form",
        Series::new(
            (0..=order)
                .map(|k| builders::ratio_diag_coeff(&spec, k))
                .collect(),
        ),
    );
    let reference = PFQParams::new(
        vec![
            (int(1) - &r) / int(3),
            (int(2) - &r) / int(3),
            (int(3) - &r) / int(3),
        ],
        vec![int(1), int(1) - &r],
        int(27),
    );
    match builders::ratio_params(&spec) {
        Ok(params) => {
            rb.route("pfq", params.series(order));
            match &reference {
                Ok(reference) => note_reference_match(&mut rb, &params, reference),
                Err(e) => rb.note(format!("reference tuple itself is ill-defined ({e})")),
            }
            rb.params(&params);
        }
        Err(e) => {
            rb.refusal(e.to_string());
            rb.note("agreement asserted between the closed forms and the oracle only");
        }
    }
    if let Ok(reference) = reference {
        rb.route("pfq-reference", reference.series(order));
    }
    rb.route("oracle", oracle::oracle_diag(&product, 6.min(order)));
    Ok(rb.finish())
}

/// `(1-x-2y)^b / (1-x-y-z)` against its 3F2 at argument `27t`.
fn doubled_scenario(name: &str, b: Rational, order: usize) -> Result<VerificationReport> {
    let exponents = vec![Rational::zero(), Rational::zero(), -Rational::one()];
    let product = LinearFormProduct::new(exponents.clone(), Some(b.clone()), Sign::Minus)?;
    let mut rb = ReportBuilder::new(format!("{name}: diagonal of {product} as a 3F2"));
    rb.route("product", product.diag_series(order));
    let params = flip_for_sign(builders::doubled_params(&exponents, &b)?, &product);
    rb.route("pfq", params.series(order));
    let reference = if b == rat(2, 3) {
        PFQParams::new(
            vec![rat(1, 9), rat(4, 9), rat(7, 9)],
            vec![int(1), rat(2, 3)],
            int(27),
        )?
    } else {
        PFQParams::new(
            vec![rat(2, 9), rat(5, 9), rat(8, 9)],
            vec![int(1), rat(5, 6)],
            int(27),
        )?
    };
    note_reference_match(&mut rb, &params, &reference);
    rb.params(&params);
    rb.route("pfq-reference", reference.series(order));
    rb.route("oracle", oracle::oracle_diag(&product, 6.min(order)));
    Ok(rb.finish())
}

/// `(1-x)^R (1-x-y)^S (1-x-y-z)^T` against the 6F5 with argument `27t`.
fn three_factor_scenario(
    r: Rational,
    s: Rational,
    t: Rational,
    order: usize,
) -> Result<VerificationReport> {
    let exponents = vec![r.clone(), s.clone(), t.clone()];
    let product = LinearFormProduct::plain(exponents.clone(), Sign::Minus)?;
    let mut rb = ReportBuilder::new(format!(
        "thm2-id1: diagonal of {product} as a 6F5, argument 27t"
    ));
    rb.route("product", product.diag_series(order));
    let params = flip_for_sign(builders::nested_params(&exponents)?, &product);
    rb.route("pfq", params.series(order));
    let rst = &r + &s + &t;
    let st = &s + &t;
    let reference = PFQParams::new(
        vec![
            -&rst / int(3),
            (int(1) - &rst) / int(3),
            (int(2) - &rst) / int(3),
            -&st / int(2),
            (int(1) - &st) / int(2),
            -t.clone(),
        ],
        vec![
            -&rst / int(2),
            (int(1) - &rst) / int(2),
            -st.clone(),
            int(1),
            int(1),
        ],
        int(27),
    )?;
    note_reference_match(&mut rb, &params, &reference);
    rb.params(&params);
    rb.route("pfq-reference", reference.series(order));
    rb.route("oracle", oracle::oracle_diag(&product, 6.min(order)));
    Ok(rb.finish())
}

/// `(1-x)^R (1-x-2y)^S / (1-x-y-z)` against the 4F3 with argument `27t`.
fn doubled_family_scenario(r: Rational, s: Rational, order: usize) -> Result<VerificationReport> {
    let exponents = vec![r.clone(), Rational::zero(), -Rational::one()];
    let product = LinearFormProduct::new(exponents.clone(), Some(s.clone()), Sign::Minus)?;
    let mut rb = ReportBuilder::new(format!(
        "thm2-id2: diagonal of {product} as a 4F3, argument 27t"
    ));
    rb.route("product", product.diag_series(order));
    let params = flip_for_sign(builders::doubled_params(&exponents, &s)?, &product);
    rb.route("pfq", params.series(order));
    let rs = &r + &s;
    let reference = PFQParams::new(
        vec![
            (int(1) - &rs) / int(3),
            (int(2) - &rs) / int(3),
            (int(3) - &rs) / int(3),
            (int(1) - &s) / int(2),
        ],
        vec![(int(1) - &rs) / int(2), (int(2) - &rs) / int(2), int(1)],
        int(27),
    )?;
    note_reference_match(&mut rb, &params, &reference);
    rb.params(&params);
    rb.route("pfq-reference", reference.series(order));
    rb.route("oracle", oracle::oracle_diag(&product, 6.min(order)));
    Ok(rb.finish())
}

/// `(1+x)^R (1+x+y)^S / (1+x+y+z)` against the 5F4 with argument `-27t`
/// (plus convention; the last parameter cancels).
fn five_four_scenario(r: Rational, s: Rational, order: usize) -> Result<VerificationReport> {
    let exponents = vec![r.clone(), s.clone(), -Rational::one()];
    let product = LinearFormProduct::plain(exponents.clone(), Sign::Plus)?;
    let mut rb = ReportBuilder::new(format!(
        "example3-5F4: diagonal of {product} as a 5F4, argument -27t"
    ));
    rb.route("product", product.diag_series(order));
    let params = builders::nested_params(&exponents)?;
    rb.route("pfq", params.series(order));
    let rs = &r + &s;
    let reference = PFQParams::new(
        vec![
            (int(1) - &rs) / int(3),
            (int(2) - &rs) / int(3),
            (int(3) - &rs) / int(3),
            (int(1) - &s) / int(2),
            (int(2) - &s) / int(2),
        ],
        vec![
            (int(1) - &rs) / int(2),
            (int(2) - &rs) / int(2),
            int(1) - &s,
            int(1),
        ],
        int(-27),
    )?;
    note_reference_match(&mut rb, &params, &reference);
    rb.params(&params);
    rb.route("pfq-reference", reference.series(order));
    rb.route("oracle", oracle::oracle_diag(&product, 6.min(order)));
    Ok(rb.finish())
}

/// Diagonal of `1/(1-(1+w)(x+y+z))` against
/// `4F3([1/3,1/3,2/3,2/3], [1,1,1/2]; 729/4 t)`, with the frozen first
/// values 1, 18, 1350.
fn bbmw15_scenario(order: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new(
        "bbmw15: diagonal of 1/(1-(1+w)(x+y+z)) as a 4F3 with argument 729/4 t".to_string(),
    );
    let seed = oracle::Polynomial::new(
        4,
        vec![
            (vec![0, 1, 0, 0], Rational::one()),
            (vec![0, 0, 1, 0], Rational::one()),
            (vec![0, 0, 0, 1], Rational::one()),
            (vec![1, 1, 0, 0], Rational::one()),
            (vec![1, 0, 1, 0], Rational::one()),
            (vec![1, 0, 0, 1], Rational::one()),
        ],
    )?;
    let expansion = oracle::expand_geometric(&seed, 4 * order)?;
    rb.route("oracle", oracle::extract_diag(&expansion, order)?);
    let params = PFQParams::new(
        vec![rat(1, 3), rat(1, 3), rat(2, 3), rat(2, 3)],
        vec![int(1), int(1), rat(1, 2)],
        rat(729, 4),
    )?;
    rb.route("pfq", params.series(order));
    rb.params(&params);
    rb.route(
        "reference-values",
        Series::new(vec![int(1), int(18), int(1350)]),
    );
    Ok(rb.finish())
}

/// Diagonal of `1 / (sqrt(1-x) (1-y) - a x y)`: each coefficient is a
/// finite kernel sum, and the first three values are
/// `1, a + 1/2, a^2 + 2a + 3/8`.
fn straub_scenario(alpha: Rational, order: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new(format!(
        "straub: diagonal of 1/(sqrt(1-x)(1-y) - a*x*y) for a = {alpha}"
    ));
    // 1/(sqrt(1-x)(1-y) - a x y)
    //   = sum_j a^j (xy)^j (1-x)^(-(j+1)/2) (1-y)^(-(j+1)),
    // so the diagonal coefficient at k is a sum over j <= k
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut c = Rational::zero();
        let mut alpha_pow = Rational::one();
        for j in 0..=k {
            let m = k - j;
            let m_fact = Rational::from_integer(arith::factorial(m));
            let x_part = arith::pochhammer(&(int(j as i64 + 1) / int(2)), m) / &m_fact;
            let y_part = arith::pochhammer(&int(j as i64 + 1), m) / &m_fact;
            c += &alpha_pow * x_part * y_part;
            alpha_pow *= &alpha;
        }
        coeffs.push(c);
    }
    rb.route("kernel-sum", Series::new(coeffs));
    let quadratic = &alpha * &alpha + int(2) * &alpha + rat(3, 8);
    rb.route(
        "reference-values",
        Series::new(vec![int(1), &alpha + rat(1, 2), quadratic]),
    );
    Ok(rb.finish())
}

/// Diagonal of `(1-a x)^{1/3} / (1-x-y)`: an order-2 recurrence with
/// polynomial coefficients holds for every `a`; for `a` in {0, 1, 2} the
/// series is hypergeometric and also matches a built pFq.
fn recurrence_scenario(a: Rational, order: usize) -> Result<VerificationReport> {
    let mut rb = ReportBuilder::new(format!(
        "recurrence-U: diagonal of (1-a*x)^(1/3)/(1-x-y) for a = {a}"
    ));
    let bound = 2 * (order + 2);
    let numer = oracle::expand_linear_power(&[-a.clone(), Rational::zero()], &rat(1, 3), bound);
    let denom = oracle::expand_linear_power(&[-int(1), -int(1)], &-int(1), bound);
    let expansion = oracle::multiply(&numer, &denom, bound)?;
    let series = oracle::extract_diag(&expansion, order + 2)?;

    // 2 a^2 (6n+5)(3n+1) u_n - 3 (n+1)(3(a^2+4a-4)n + 2a^2+18a-18) u_{n+1}
    //                        + 9 (a-1)(n+2)(n+1) u_{n+2} = 0
    let a2 = &a * &a;
    let p0 = vec![int(10) * &a2, int(42) * &a2, int(36) * &a2];
    let c1 = &a2 + int(4) * &a - int(4);
    let d1 = int(2) * &a2 + int(18) * &a - int(18);
    let p1 = vec![-int(3) * &d1, -int(3) * (int(3) * &c1 + &d1), -int(9) * &c1];
    let am1 = &a - int(1);
    let p2 = vec![int(18) * &am1, int(27) * &am1, int(9) * &am1];
    let rec = Recurrence::new(vec![p0, p1, p2])?;
    match crate::hyperseries::check_recurrence(&series, &rec) {
        RecurrenceCheck::Holds { through } => {
            rb.note(format!(
                "order-{} recurrence holds for n = 0..={through}",
                rec.order()
            ));
        }
        RecurrenceCheck::FailsAt { n, residual } => {
            rb.fail(format!(
                "recurrence fails at n = {n} with residual {residual}"
            ));
        }
    }
    rb.route("oracle", series);

    let built: Option<PFQParams> = if a.is_zero() {
        let product = LinearFormProduct::plain(vec![int(0), -int(1)], Sign::Minus)?;
        Some(flip_for_sign(
            builders::nested_params(product.exponents())?,
            &product,
        ))
    } else if a.is_one() {
        builders::ratio_params(&RatioSpec::new(rat(1, 3), int(1), 1, 2)?).map(Some)?
    } else if a == int(2) {
        let product = LinearFormProduct::new(vec![int(0), -int(1)], Some(rat(1, 3)), Sign::Minus)?;
        Some(flip_for_sign(
            builders::doubled_params(product.exponents(), &rat(1, 3))?,
            &product,
        ))
    } else {
        rb.note(
            "a outside {0, 1, 2}: minimal recurrence has order 2, not a hypergeometric diagonal",
        );
        None
    };
    if let Some(params) = built {
        rb.route("pfq", params.series(order));
        rb.params(&params);
        rb.note("a in {0, 1, 2}: the diagonal is hypergeometric");
    }
    Ok(rb.finish())
}

/// First asymmetric Hadamard combination:
/// `3F2([Q/3,(Q+1)/3,(Q+2)/3],[1,Q]) hadamard 2F1([Q/6,(Q+3)/6],[Q/3])`
/// equals `4F3([Q/6,(Q+3)/6,(Q+1)/3,(Q+2)/3],[1,1,Q])`.
fn asym_scenario_1(q: Rational, order: usize) -> Result<VerificationReport> {
    let lhs1 = PFQParams::new(
        vec![&q / int(3), (&q + int(1)) / int(3), (&q + int(2)) / int(3)],
        vec![int(1), q.clone()],
        int(1),
    )?;
    let lhs2 = PFQParams::new(
        vec![&q / int(6), (&q + int(3)) / int(6)],
        vec![&q / int(3)],
        int(1),
    )?;
    let rhs = PFQParams::new(
        vec![
            &q / int(6),
            (&q + int(3)) / int(6),
            (&q + int(1)) / int(3),
            (&q + int(2)) / int(3),
        ],
        vec![int(1), int(1), q.clone()],
        int(1),
    )?;
    let mut report = hadamard_combination(&lhs1, &lhs2, &rhs, order);
    report.description =
        format!("hadamard-asym-1: non-symmetric 4F3 as a Hadamard product, Q = {q}");
    annotate_ratio_link(&mut report, &lhs1, int(1) - &q, 2, 3);
    annotate_ratio_link(&mut report, &lhs2, int(1) - &q / int(3), 1, 2);
    Ok(report)
}

/// Second asymmetric Hadamard combination:
/// `2F1([Q/6,(Q+3)/6],[Q/3]) hadamard 2F1([Q/3,Q/3+1/2],[2Q/3])`
/// equals `3F2([Q/6,Q/6+1/2,Q/3+1/2],[1,2Q/3])`.
fn asym_scenario_2(q: Rational, order: usize) -> Result<VerificationReport> {
    let lhs1 = PFQParams::new(
        vec![&q / int(6), (&q + int(3)) / int(6)],
        vec![&q / int(3)],
        int(1),
    )?;
    let lhs2 = PFQParams::new(
        vec![&q / int(3), &q / int(3) + rat(1, 2)],
        vec![int(2) * &q / int(3)],
        int(1),
    )?;
    let rhs = PFQParams::new(
        vec![
            &q / int(6),
            &q / int(6) + rat(1, 2),
            &q / int(3) + rat(1, 2),
        ],
        vec![int(1), int(2) * &q / int(3)],
        int(1),
    )?;
    let mut report = hadamard_combination(&lhs1, &lhs2, &rhs, order);
    report.description =
        format!("hadamard-asym-2: non-symmetric 3F2 as a Hadamard product, Q = {q}");
    annotate_ratio_link(&mut report, &lhs1, int(1) - &q / int(3), 1, 2);
    annotate_ratio_link(&mut report, &lhs2, int(1) - int(2) * &q / int(3), 1, 2);
    Ok(report)
}

/// Note that a combination factor is itself a ratio-family diagonal (with
/// rescaled variables, hence compared at scale 1).
fn annotate_ratio_link(
    report: &mut VerificationReport,
    factor: &PFQParams,
    r: Rational,
    n: usize,
    n_vars: usize,
) {
    let linked = RatioSpec::new(r, int(1), n, n_vars)
        .and_then(|spec| builders::ratio_params(&spec))
        .map(|p| p.with_scale(int(1)));
    match linked {
        Ok(p) if p.reduce().same_function(&factor.reduce()) => {
            report.notes.push(format!(
                "factor {factor} is the diagonal of a width-({n},{n_vars}) ratio product at rescaled variables"
            ));
        }
        Ok(p) => {
            report.status = VerifyStatus::Failed {
                reason: format!("factor {factor} does not match its ratio construction {p}"),
            };
        }
        Err(e) => {
            report.status = VerifyStatus::Failed {
                reason: format!("ratio construction refused: {e}"),
            };
        }
    }
}

/// The sixteen `3F2([A,B,C],[1,D])` tuples with Hadamard grade 2: a
/// bounded-denominator search finds the `(1-t)^(-c)` factor and the
/// resulting series identity is checked exactly.
fn corollary16_scenario(order: usize) -> Result<VerificationReport> {
    let tuples: [(Rational, Rational, Rational, Rational); 16] = [
        (rat(1, 4), rat(3, 8), rat(7, 8), rat(1, 3)),
        (rat(1, 4), rat(3, 8), rat(7, 8), rat(2, 3)),
        (rat(1, 8), rat(5, 8), rat(3, 4), rat(1, 3)),
        (rat(1, 8), rat(5, 8), rat(3, 4), rat(2, 3)),
        (rat(1, 9), rat(4, 9), rat(7, 9), rat(1, 2)),
        (rat(1, 9), rat(4, 9), rat(7, 9), rat(1, 3)),
        (rat(1, 9), rat(4, 9), rat(7, 9), rat(1, 4)),
        (rat(1, 9), rat(4, 9), rat(7, 9), rat(1, 6)),
        (rat(1, 9), rat(4, 9), rat(7, 9), rat(2, 3)),
        (rat(1, 9), rat(4, 9), rat(7, 9), rat(3, 4)),
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(1, 2)),
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(1, 3)),
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(1, 4)),
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(2, 3)),
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(3, 4)),
        (rat(2, 9), rat(5, 9), rat(8, 9), rat(5, 6)),
    ];
    let mut rb = ReportBuilder::new(
        "corollary16: all sixteen 3F2([A,B,C],[1,D]) tuples have Hadamard grade 2".to_string(),
    );
    for (a, b, c, d) in &tuples {
        let label = format!("({a}, {b}, {c}; {d})");
        let params = PFQParams::new(
            vec![a.clone(), b.clone(), c.clone()],
            vec![int(1), d.clone()],
            int(1),
        )?;
        match classify::grade2_search(&params, 6)? {
            None => rb.fail(format!(
                "{label}: no decomposition with denominator bound 6"
            )),
            Some(dec) => {
                let lhs = params.series(order);
                let rhs = dec
                    .algebraic_params
                    .series(order)
                    .hadamard(&binomial_series(&dec.hadamard_factor, order));
                if lhs == rhs {
                    rb.note(format!(
                        "{label}: bottom 1 -> {}, identity exact to order {order}",
                        dec.hadamard_factor
                    ));
                } else {
                    rb.fail(format!(
                        "{label}: decomposition found but series identity fails"
                    ));
                }
            }
        }
    }
    rb.note("each tuple is (algebraic 3F2) hadamard (1-t)^(-c), hence a diagonal");
    Ok(rb.finish())
}

/// Interlacing proof that `3F2([(1-R)/3,(2-R)/3,(3-R)/3],[1/2,1-R])` is
/// algebraic, plus the bottom-swap identity linking it to the
/// `[1, 1-R]`-bottom function.
fn fig1_scenario(r: Rational, order: usize) -> Result<VerificationReport> {
    let tops = vec![
        (int(1) - &r) / int(3),
        (int(2) - &r) / int(3),
        (int(3) - &r) / int(3),
    ];
    let partner = PFQParams::new(tops.clone(), vec![rat(1, 2), int(1) - &r], int(1))?;
    let original = PFQParams::new(tops, vec![int(1), int(1) - &r], int(1))?;
    let mut rb = ReportBuilder::new(format!(
        "fig1: {partner} is algebraic by interlacing; {original} = that hadamard (1-t)^(-1/2)"
    ));
    rb.params(&original);
    let verdict = classify::interlacing_check(&partner.reduce());
    match (&verdict.status, &verdict.evidence) {
        (Algebraicity::Algebraic, Some(Evidence::Residues { modulus, checked })) => {
            let phi = arith::euler_phi(*modulus);
            if checked.len() as u64 == phi {
                rb.note(format!(
                    "algebraic: all phi({modulus}) = {phi} residue classes interlace"
                ));
            } else {
                rb.fail(format!(
                    "expected phi({modulus}) = {phi} residues, checked {}",
                    checked.len()
                ));
            }
        }
        _ => rb.fail(format!(
            "expected an algebraic interlacing verdict, got: {verdict}"
        )),
    }
    rb.route("pfq", original.series(order));
    rb.route(
        "hadamard",
        partner
            .series(order)
            .hadamard(&binomial_series(&rat(1, 2), order)),
    );
    Ok(rb.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_eq10_product() {
        let p = LinearFormProduct::plain(vec![int(0), rat(1, 3), int(-1)], Sign::Minus).unwrap();
        let report = verify_identity(&p, 15, 4);
        assert!(report.verified(), "{report}");
        assert!(report.refusal.is_none());
        assert_eq!(report.orders.len(), 4, "product, ratio, pfq, oracle");
        let reduced = report.reduced_params.unwrap();
        assert_eq!(reduced.top(), &[rat(2, 9), rat(5, 9), rat(8, 9)]);
    }

    #[test]
    fn verify_single_factor_goes_nested() {
        let p = LinearFormProduct::plain(vec![int(0), int(-1)], Sign::Minus).unwrap();
        let report = verify_identity(&p, 15, 6);
        assert!(report.verified(), "{report}");
        // one nonzero exponent: nested path, no ratio route
        assert!(report.orders.iter().all(|(n, _)| n != "ratio-closed-form"));
    }

    #[test]
    fn verify_positive_half_exponent() {
        let p = LinearFormProduct::plain(vec![int(0), int(0), rat(1, 2)], Sign::Minus).unwrap();
        let report = verify_identity(&p, 12, 4);
        assert!(report.verified(), "{report}");
    }

    #[test]
    fn verify_records_refusal_and_checks_rest() {
        // R = 5, S = 1: Q = -4 makes the ratio builder refuse
        let p = LinearFormProduct::plain(vec![int(0), int(5), int(-1)], Sign::Minus).unwrap();
        let report = verify_identity(&p, 12, 4);
        assert!(report.refusal.is_some());
        assert!(report.verified(), "remaining routes still agree: {report}");
    }

    #[test]
    fn verify_doubled_product() {
        let p =
            LinearFormProduct::new(vec![int(0), int(-1)], Some(rat(1, 3)), Sign::Minus).unwrap();
        let report = verify_identity(&p, 12, 6);
        assert!(report.verified(), "{report}");
    }

    #[test]
    fn mismatch_is_reported_with_values() {
        let lhs = PFQParams::new(vec![rat(1, 2)], vec![], int(1)).unwrap();
        let rhs = PFQParams::new(vec![rat(1, 3)], vec![], int(1)).unwrap();
        let report = hadamard_combination(&lhs, &lhs, &rhs, 5);
        match report.status {
            VerifyStatus::Mismatch {
                index: 1,
                ref values,
            } => assert_eq!(values.len(), 2),
            ref other => panic!("expected mismatch at 1, got {other:?}"),
        }
    }

    #[test]
    fn scenario_names_all_run() {
        for (name, args) in default_runs() {
            let small = match name {
                "bbmw15" => Some(2),
                "straub" => Some(4),
                "thm2-id1" | "thm2-id2" | "example3-5F4" => Some(6),
                "recurrence-U" | "corollary16" => Some(6),
                _ => Some(8),
            };
            let report = scenario(name, &args, small).unwrap();
            assert!(
                report.verified(),
                "scenario {name} with {args:?}:\n{report}"
            );
        }
    }

    #[test]
    fn unknown_scenario_is_an_error() {
        assert!(matches!(
            scenario("eq99", &ScenarioArgs::new(), None),
            Err(Error::UnknownScenario { .. })
        ));
        assert!(matches!(
            scenario("straub", &ScenarioArgs::new(), None),
            Err(Error::MissingArgument { .. })
        ));
    }
}
