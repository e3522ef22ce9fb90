//! Pólya-frequency certification: bounded total-positivity checks on the
//! Toeplitz matrix of a coefficient sequence.
//!
//! A sequence a_0 = 1, a_1, a_2, … is a P-sequence when every minor of the
//! infinite Toeplitz matrix ‖a_{i-j}‖ is nonnegative; by Edrei's theorem
//! these are exactly the expansions of e^{γt}·∏(1+t_i t)/∏(1−u_j t) with
//! nonnegative parameters. The checker here is a bounded certifier only: it
//! enumerates minors up to a given order and index and either passes or
//! returns the first negative witness in a fixed deterministic order. The
//! converse (recognizing the factored form from coefficients) is an analytic
//! classification, not a finite procedure, and is out of scope.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::det::bareiss_det;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::series::FactoredSeries;

/// Bounds at which the whole suite runs in seconds at desk scale.
pub const DEFAULT_MAX_ORDER: usize = 4;
pub const DEFAULT_MAX_INDEX: usize = 10;

/// A minor of a Toeplitz matrix: strictly decreasing row indices μ and
/// column indices ν of the same length r ≥ 1, selecting det‖a_{μ_i − ν_j}‖.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MinorRepr", into = "MinorRepr")]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MinorRepr {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl From<MinorSpec> for MinorRepr {
    fn from(m: MinorSpec) -> Self {
        MinorRepr {
            rows: m.rows,
            cols: m.cols,
        }
    }
}

impl TryFrom<MinorRepr> for MinorSpec {
    type Error = Error;

    fn try_from(r: MinorRepr) -> Result<Self> {
        MinorSpec::new(r.rows, r.cols)
    }
}

impl MinorSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let strictly_decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::InvalidInput(
                "minor needs equal-length nonempty row and column index sets".into(),
            ));
        }
        if !strictly_decreasing(&rows) || !strictly_decreasing(&cols) {
            return Err(Error::InvalidInput(
                "minor indices must be strictly decreasing".into(),
            ));
        }
        Ok(MinorSpec { rows, cols })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }
}

/// The r×r Toeplitz minor det‖a_{μ_i − ν_j}‖ of a coefficient sequence.
/// Negative entry indices read as 0; a positive index past the end of the
/// sequence is an error.
pub fn toeplitz_minor(seq: &[Rat], spec: &MinorSpec) -> Result<Rat> {
    let max_index = spec.rows[0];
    if max_index >= seq.len() {
        return Err(Error::IndexOutOfRange {
            index: max_index,
            len: seq.len(),
        });
    }
    let m: Vec<Vec<Rat>> = spec
        .rows
        .iter()
        .map(|&mu| {
            spec.cols
                .iter()
                .map(|&nu| {
                    if mu >= nu {
                        seq[mu - nu].clone()
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(crate::det::rat_det(&m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A minor together with its (recomputable) value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckedBounds {
    /// Largest minor order enumerated.
    pub order: usize,
    /// Largest row/column index enumerated.
    pub index: usize,
}

/// Result of a bounded P-sequence check. On `fail` the witness is the first
/// negative minor in enumeration order (increasing order, then lexicographic
/// on rows, then on columns) and recomputes to a negative value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<MinorWitness>,
    pub bounds: CheckedBounds,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// All strictly decreasing index tuples of length r with entries ≤ max, in
/// ascending lexicographic order of the tuples themselves.
fn decreasing_tuples(r: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(
        r: usize,
        lead_min: usize,
        lead_max: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r == 0 {
            out.push(prefix.clone());
            return;
        }
        for head in lead_min..=lead_max {
            prefix.push(head);
            if r == 1 {
                out.push(prefix.clone());
                prefix.pop();
                continue;
            }
            // remaining r-1 entries are strictly below head
            rec_tail(r - 1, head, prefix, out);
            prefix.pop();
        }
    }
    fn rec_tail(r: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        // entries strictly less than bound, still r of them needed
        for head in (r - 1)..bound {
            prefix.push(head);
            if r == 1 {
                out.push(prefix.clone());
            } else {
                rec_tail(r - 1, head, prefix, out);
            }
            prefix.pop();
        }
    }

    if r == 0 || max + 1 < r {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(r, r - 1, max, &mut Vec::new(), &mut out);
    out
}

/// The sequence cleared to integers once: seq[k] = ints[k] / denom.
struct ScaledSeq {
    ints: Vec<BigInt>,
    denom: BigInt,
}

impl ScaledSeq {
    fn new(seq: &[Rat]) -> Self {
        let denom = seq.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints = seq
            .iter()
            .map(|x| x.numer() * (&denom / x.denom()))
            .collect();
        ScaledSeq { ints, denom }
    }

    /// Integer determinant of the minor; the rational value is this divided
    /// by denom^r, so the two share a sign.
    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        let m: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&mu| {
                cols.iter()
                    .map(|&nu| {
                        if mu >= nu {
                            self.ints[mu - nu].clone()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        bareiss_det(m)
    }

    fn minor_value(&self, rows: &[usize], cols: &[usize]) -> Rat {
        let det = self.minor_det(rows, cols);
        let mut scale = BigInt::one();
        for _ in 0..rows.len() {
            scale *= &self.denom;
        }
        Rat::from_big(det, scale)
    }
}

/// Bounded P-sequence check: enumerates every minor of order ≤ `max_order`
/// with indices ≤ `max_index` and passes iff all are nonnegative. Requires
/// `seq[0] = 1` and enough coefficients to cover `max_index`.
pub fn check_p_sequence(
    seq: &[Rat],
    max_order: usize,
    max_index: usize,
) -> Result<PositivityReport> {
    if seq.is_empty() || !seq[0].is_one() {
        return Err(Error::InvalidInput(
            "P-sequence check requires a sequence starting at 1".into(),
        ));
    }
    if max_index >= seq.len() {
        return Err(Error::IndexOutOfRange {
            index: max_index,
            len: seq.len(),
        });
    }
    let bounds = CheckedBounds {
        order: max_order,
        index: max_index,
    };
    let scaled = ScaledSeq::new(seq);
    for r in 1..=max_order {
        let tuples = decreasing_tuples(r, max_index);
        for rows in &tuples {
            for cols in &tuples {
                // A minor with ν_k > μ_k anywhere has a zero lower-left block
                // of size (r-k+1) x k, hence determinant exactly 0: skip.
                if rows.iter().zip(cols).any(|(&mu, &nu)| mu < nu) {
                    continue;
                }
                let det = scaled.minor_det(rows, cols);
                if det.is_negative() {
                    return Ok(PositivityReport {
                        verdict: Verdict::Fail,
                        witness: Some(MinorWitness {
                            rows: rows.clone(),
                            cols: cols.clone(),
                            value: scaled.minor_value(rows, cols),
                        }),
                        bounds,
                    });
                }
            }
        }
    }
    Ok(PositivityReport {
        verdict: Verdict::Pass,
        witness: None,
        bounds,
    })
}

/// Which of the sufficient conditions for a PP-sequence the factored data
/// meets. Finite root/pole data with γ = 0 can never witness the
/// infinite-family conditions, hence the explicit flags on
/// [`FactoredSeries`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PpCondition {
    /// γ > 0.
    ExponentialWeight,
    /// Infinitely many strictly positive roots (flagged).
    InfiniteRootFamily,
    /// Infinitely many strictly positive poles (flagged).
    InfinitePoleFamily,
    /// None of the sufficient conditions hold.
    FiniteData,
}

/// Bounded empirical check that all contained minors (ν ≤ μ componentwise)
/// are strictly positive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrictMinorCheck {
    pub all_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<MinorWitness>,
    pub bounds: CheckedBounds,
}

/// Verdict of the PP-sequence certifier.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PpReport {
    pub certified: bool,
    pub condition: PpCondition,
    /// Absent when the series is flagged infinite and cannot be expanded.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strict_minors: Option<StrictMinorCheck>,
}

/// PP-sequence certification for an Edrei factored form: certified when
/// γ > 0 or when an infinite family of roots or poles is asserted by flag.
/// Expandable inputs additionally get a bounded strict-positivity check of
/// all contained minors, with a first non-positive witness when one exists.
pub fn check_pp_sequence(f: &FactoredSeries, max_order: usize, max_index: usize) -> PpReport {
    let condition = if f.gamma().is_positive() {
        PpCondition::ExponentialWeight
    } else if f.roots_infinite() {
        PpCondition::InfiniteRootFamily
    } else if f.poles_infinite() {
        PpCondition::InfinitePoleFamily
    } else {
        PpCondition::FiniteData
    };
    let certified = condition != PpCondition::FiniteData;

    let strict_minors = f.expand(max_index).ok().map(|series| {
        let scaled = ScaledSeq::new(series.coeffs());
        let bounds = CheckedBounds {
            order: max_order,
            index: max_index,
        };
        for r in 1..=max_order {
            let tuples = decreasing_tuples(r, max_index);
            for rows in &tuples {
                for cols in &tuples {
                    // contained minors only
                    if rows.iter().zip(cols).any(|(&mu, &nu)| mu < nu) {
                        continue;
                    }
                    let det = scaled.minor_det(rows, cols);
                    if !det.is_positive() {
                        return StrictMinorCheck {
                            all_positive: false,
                            witness: Some(MinorWitness {
                                rows: rows.clone(),
                                cols: cols.clone(),
                                value: scaled.minor_value(rows, cols),
                            }),
                            bounds,
                        };
                    }
                }
            }
        }
        StrictMinorCheck {
            all_positive: true,
            witness: None,
            bounds,
        }
    });

    PpReport {
        certified,
        condition,
        strict_minors,
    }
}
