//! Quantum-space analysis: from a factored exterior-algebra Poincaré series,
//! produce the dual symmetric series, the simple-comodule dimension table,
//! the bialgebra series by two independent routes, and the rank /super-rank
//! classification with its dimension bounds and extremal closed forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::positivity::{check_p_sequence, DEFAULT_MAX_INDEX, DEFAULT_MAX_ORDER};
use crate::rational::Rat;
use crate::series::{FactoredSeries, TruncatedSeries};
use crate::symfun::{schur_value, Specialization};

/// A quantum-space description: the exterior series in factored form
/// (finitely many positive rational roots and poles, no exponential weight)
/// plus the Hecke parameter q. q is inert metadata (tensor multiplicities
/// and dimensions do not depend on it) but is carried so composites like
/// Hecke sums can insist on a common value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct QuantumSpaceSpec {
    p_lambda: FactoredSeries,
    q: Rat,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    roots: Vec<Rat>,
    poles: Vec<Rat>,
    q: Rat,
}

impl From<QuantumSpaceSpec> for SpecRepr {
    fn from(s: QuantumSpaceSpec) -> Self {
        SpecRepr {
            roots: s.p_lambda.roots().to_vec(),
            poles: s.p_lambda.poles().to_vec(),
            q: s.q,
        }
    }
}

impl TryFrom<SpecRepr> for QuantumSpaceSpec {
    type Error = Error;

    fn try_from(r: SpecRepr) -> Result<Self> {
        QuantumSpaceSpec::new(FactoredSeries::new(r.roots, r.poles, Rat::zero())?, r.q)
    }
}

impl QuantumSpaceSpec {
    pub fn new(p_lambda: FactoredSeries, q: Rat) -> Result<Self> {
        if !p_lambda.gamma().is_zero() {
            return Err(Error::InvalidInput(
                "a quantum-space series has no exponential weight (gamma must be 0)".into(),
            ));
        }
        if p_lambda.roots_infinite() || p_lambda.poles_infinite() {
            return Err(Error::InvalidInput(
                "a quantum-space series has finitely many roots and poles".into(),
            ));
        }
        if q.is_zero() {
            return Err(Error::InvalidInput(
                "the Hecke parameter q must be nonzero".into(),
            ));
        }
        Ok(QuantumSpaceSpec { p_lambda, q })
    }

    pub fn from_ints(roots: &[i64], poles: &[i64], q: i64) -> Result<Self> {
        Self::new(FactoredSeries::from_ints(roots, poles, 0)?, Rat::from(q))
    }

    pub fn p_lambda(&self) -> &FactoredSeries {
        &self.p_lambda
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn num_roots(&self) -> usize {
        self.p_lambda.roots().len()
    }

    pub fn num_poles(&self) -> usize {
        self.p_lambda.poles().len()
    }

    /// The exterior-algebra series P_Λ mod t^{order+1}.
    pub fn lambda_series(&self, order: usize) -> TruncatedSeries {
        self.p_lambda
            .expand(order)
            .expect("finite factored data always expands")
    }

    /// The symmetric-algebra series P_S, the dual of P_Λ.
    pub fn s_series(&self, order: usize) -> TruncatedSeries {
        self.lambda_series(order)
            .dual_series()
            .expect("constant term is 1")
    }

    /// Elementary/complete values (λ_r, s_r) as a joint specialization.
    pub fn specialization(&self, order: usize) -> Specialization {
        Specialization::from_elementary(self.lambda_series(order)).expect("constant term is 1")
    }
}

/// Exact rational dimension values m_λ for all |λ| ≤ max_weight, in
/// enumeration order, with no integrality filtering.
fn exact_dims(spec: &QuantumSpaceSpec, max_weight: usize) -> Vec<(Partition, Rat)> {
    let sp = spec.specialization(max_weight.max(1));
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for lambda in enumerate_partitions(w) {
            let value = schur_value(&sp, &lambda).expect("order covers every index");
            out.push((lambda, value));
        }
    }
    out
}

/// Dimensions of the simple comodules M_λ for all |λ| ≤ max_weight, in
/// weight-then-reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimensionTable {
    pub max_weight: usize,
    pub entries: Vec<DimEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimEntry {
    pub partition: Partition,
    pub dim: u64,
}

impl DimensionTable {
    pub fn dim(&self, lambda: &Partition) -> Option<u64> {
        self.entries
            .iter()
            .find(|e| &e.partition == lambda)
            .map(|e| e.dim)
    }
}

/// The dimension table m_λ = det‖s_{λ_i−i+j}‖ for all |λ| ≤ max_weight.
/// Rejects the input when any value is non-integral or negative: such a
/// series cannot come from a Hecke operator.
pub fn comodule_dims(spec: &QuantumSpaceSpec, max_weight: usize) -> Result<DimensionTable> {
    let mut entries = Vec::new();
    for (partition, value) in exact_dims(spec, max_weight) {
        if !value.is_integer() {
            return Err(Error::NonIntegralDimension { partition, value });
        }
        if value.is_negative() {
            return Err(Error::NegativeDimension { partition, value });
        }
        let dim = value.to_u64().ok_or_else(|| {
            Error::InvalidInput(format!("dimension of {partition} does not fit in u64"))
        })?;
        entries.push(DimEntry { partition, dim });
    }
    Ok(DimensionTable {
        max_weight,
        entries,
    })
}

/// The bialgebra series P_E by the comodule route: coefficient n is
/// Σ_{λ⊢n} m_λ², computed over exact rationals so the identity with the
/// lambda-product route can be certified on any factored input. Integrality
/// of the individual m_λ is the business of [`comodule_dims`], not of this
/// sum.
pub fn e_series_via_dims(spec: &QuantumSpaceSpec, order: usize) -> TruncatedSeries {
    let dims = exact_dims(spec, order);
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (lambda, value) in dims {
        let w = lambda.weight();
        coeffs[w] = &coeffs[w] + &(&value * &value);
    }
    TruncatedSeries::new(coeffs)
}

/// The bialgebra series P_E by the lambda-ring route: P_S ⋆ P_S.
pub fn e_series_via_star(spec: &QuantumSpaceSpec, order: usize) -> TruncatedSeries {
    let s = spec.s_series(order.max(1));
    s.lambda_product(&s)
        .expect("constant term is 1")
        .truncated(order)
}

/// Direct sum of quantum spaces: roots and poles merge, the series multiply.
/// Defined only for a common Hecke parameter.
pub fn hecke_sum(a: &QuantumSpaceSpec, b: &QuantumSpaceSpec) -> Result<QuantumSpaceSpec> {
    if a.q != b.q {
        return Err(Error::MismatchedParameter {
            left: a.q.clone(),
            right: b.q.clone(),
        });
    }
    QuantumSpaceSpec::new(a.p_lambda.factored_multiply(&b.p_lambda), a.q.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceKind {
    /// P_Λ polynomial.
    #[serde(rename = "quasi-even")]
    QuasiEven,
    /// P_Λ polynomial with top coefficient 1 and palindromic coefficients.
    #[serde(rename = "even")]
    Even,
    /// P_Λ genuinely rational.
    #[serde(rename = "quasi-odd-even")]
    QuasiOddEven,
    /// Rational with both the root and the pole product equal to 1.
    #[serde(rename = "odd-even")]
    OddEven,
}

/// One named verdict inside a classification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything the classifier reports about a spec. Dimension pathologies are
/// carried as failed checks, never as aborts: they mean "not realizable by a
/// Hecke operator", which is itself an answer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: SpaceKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub super_rank: Option<(usize, usize)>,
    pub reciprocal: bool,
    pub integrality_ok: bool,
    pub hecke_plausible: bool,
    pub bound_checks: Vec<BoundCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extremal_closed_form: Option<FactoredSeries>,
}

/// Classifies a spec: polynomial series give a rank, rational ones a super
/// rank; evenness demands top coefficient 1 *and* palindromic coefficients,
/// so a non-reciprocal series with λ_r = 1 stays quasi-even and fails its
/// reciprocity check. Records the dimension bounds with their extremal
/// closed forms, plus integrality, nonnegativity and P-sequence diagnostics
/// up to `max_weight`.
pub fn classify(spec: &QuantumSpaceSpec, max_weight: usize) -> Classification {
    let r = spec.num_roots();
    let n_poles = spec.num_poles();
    let polynomial = n_poles == 0;

    let order = max_weight.max(r).max(DEFAULT_MAX_INDEX).max(1);
    let lam = spec.lambda_series(order);
    let s = spec.s_series(order);
    let dim_v = lam.coeff(1).clone();

    let root_product: Rat = spec
        .p_lambda()
        .roots()
        .iter()
        .fold(Rat::one(), |acc, x| acc * x);
    let pole_product: Rat = spec
        .p_lambda()
        .poles()
        .iter()
        .fold(Rat::one(), |acc, x| acc * x);

    let reciprocal = polynomial && (0..=r).all(|k| lam.coeff(k) == lam.coeff(r - k));

    let mut bound_checks = Vec::new();
    let mut extremal_closed_form = None;

    let kind = if polynomial {
        if root_product.is_one() {
            bound_checks.push(BoundCheck {
                name: "reciprocity".into(),
                passed: reciprocal,
                detail: if reciprocal {
                    format!("coefficients palindromic up to degree {r}")
                } else {
                    "top coefficient is 1 but the coefficient sequence is not palindromic".into()
                },
            });
        }
        if root_product.is_one() && reciprocal {
            SpaceKind::Even
        } else {
            SpaceKind::QuasiEven
        }
    } else if root_product.is_one() && pole_product.is_one() {
        SpaceKind::OddEven
    } else {
        SpaceKind::QuasiOddEven
    };

    match kind {
        SpaceKind::Even => {
            let bound = Rat::from(r);
            let passed = bound <= dim_v;
            let extremal = bound == dim_v;
            bound_checks.push(BoundCheck {
                name: "rank_le_dim_v".into(),
                passed,
                detail: format!(
                    "rank {} vs dim V = lambda_1 = {}{}",
                    r,
                    dim_v,
                    if extremal { " (extremal)" } else { "" }
                ),
            });
            if extremal {
                extremal_closed_form = Some(FactoredSeries::ones(0, r * r));
            }
        }
        SpaceKind::OddEven => {
            let weight = Rat::from(r + n_poles);
            let passed = weight <= dim_v;
            let extremal = weight == dim_v;
            bound_checks.push(BoundCheck {
                name: "super_rank_weight_le_dim_v".into(),
                passed,
                detail: format!(
                    "m+n = {} vs dim V = lambda_1 = {}{}",
                    r + n_poles,
                    dim_v,
                    if extremal { " (extremal)" } else { "" }
                ),
            });
            if extremal {
                extremal_closed_form = Some(FactoredSeries::ones(
                    2 * r * n_poles,
                    r * r + n_poles * n_poles,
                ));
            }
        }
        _ => {}
    }

    // integrality and nonnegativity of lambda_i, s_i and m_lambda up to the
    // requested weight
    let dims = exact_dims(spec, max_weight);
    let mut non_integral: Option<String> = None;
    let mut negative: Option<String> = None;
    for k in 0..=max_weight.min(order) {
        for (name, v) in [("lambda", lam.coeff(k)), ("s", s.coeff(k))] {
            if !v.is_integer() && non_integral.is_none() {
                non_integral = Some(format!("{name}_{k} = {v}"));
            }
            if v.is_negative() && negative.is_none() {
                negative = Some(format!("{name}_{k} = {v}"));
            }
        }
    }
    for (lambda, v) in &dims {
        if !v.is_integer() && non_integral.is_none() {
            non_integral = Some(format!("m_{lambda} = {v}"));
        }
        if v.is_negative() && negative.is_none() {
            negative = Some(format!("m_{lambda} = {v}"));
        }
    }
    let integrality_ok = non_integral.is_none();
    bound_checks.push(BoundCheck {
        name: "integrality".into(),
        passed: integrality_ok,
        detail: non_integral
            .unwrap_or_else(|| format!("all dimensions integral up to weight {max_weight}")),
    });
    let nonnegative_ok = negative.is_none();
    bound_checks.push(BoundCheck {
        name: "nonnegativity".into(),
        passed: nonnegative_ok,
        detail: negative
            .unwrap_or_else(|| format!("all dimensions nonnegative up to weight {max_weight}")),
    });

    // Pólya-frequency necessity on the lambda coefficient sequence
    let p_report = check_p_sequence(
        spec.lambda_series(DEFAULT_MAX_INDEX).coeffs(),
        DEFAULT_MAX_ORDER,
        DEFAULT_MAX_INDEX,
    )
    .expect("bounds match the expansion order");
    let p_ok = p_report.passed();
    bound_checks.push(BoundCheck {
        name: "p_sequence".into(),
        passed: p_ok,
        detail: match &p_report.witness {
            None => format!(
                "all Toeplitz minors nonnegative at bounds ({}, {})",
                DEFAULT_MAX_ORDER, DEFAULT_MAX_INDEX
            ),
            Some(w) => format!("negative minor {:?}/{:?} = {}", w.rows, w.cols, w.value),
        },
    });

    Classification {
        kind,
        rank: polynomial.then_some(r),
        super_rank: (!polynomial).then_some((r, n_poles)),
        reciprocal,
        integrality_ok,
        hecke_plausible: integrality_ok && nonnegative_ok && p_ok,
        bound_checks,
        extremal_closed_form,
    }
}
