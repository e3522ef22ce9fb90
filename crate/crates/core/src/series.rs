//! Truncated formal power series over exact rationals, and factored
//! (Edrei-form) series.
//!
//! Every series here is known modulo `t^{N+1}` for an explicit truncation
//! order `N`; arithmetic never claims coefficients it cannot know, so binary
//! operations on mismatched orders truncate to the minimum. All coefficients
//! are exact rationals; the identities this crate certifies are exact, and
//! floating point would poison the integrality checks downstream.
//!
//! The lambda-ring structure on series with constant term 1 is realized
//! through power sums: `log_derivative` exposes them, `exp_integral` is its
//! inverse, and [`TruncatedSeries::lambda_product`] is the coefficientwise
//! product of power sums pushed back up. Power sums are read off the
//! symmetric-side series, so on pole-form inputs this is the classical rule
//! `prod(1-x_i t)^{-1} ⋆ prod(1-y_j t)^{-1} = prod(1-x_i y_j t)^{-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// A power series known modulo `t^{order+1}`: exactly `order+1` coefficients.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<Rat>,
}

impl From<TruncatedSeries> for SeriesRepr {
    fn from(s: TruncatedSeries) -> Self {
        SeriesRepr {
            order: s.order(),
            coeffs: s.coeffs,
        }
    }
}

impl TryFrom<SeriesRepr> for TruncatedSeries {
    type Error = Error;

    fn try_from(r: SeriesRepr) -> Result<Self> {
        if r.coeffs.len() != r.order + 1 {
            return Err(Error::InvalidInput(format!(
                "series of order {} must carry {} coefficients, got {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            )));
        }
        Ok(TruncatedSeries { coeffs: r.coeffs })
    }
}

impl TruncatedSeries {
    /// Wraps a coefficient vector `c_0..c_N`; the order is `len - 1`.
    /// Panics on an empty vector.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    /// The constant series 1 known to the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = Rat::one();
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    /// Drops coefficients beyond `order` (no-op if already shorter).
    pub fn truncated(&self, order: usize) -> TruncatedSeries {
        let n = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Cauchy product, truncated to the smaller order of the two factors.
    pub fn multiply(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse mod `t^{N+1}`; requires `c_0 != 0`.
    pub fn invert(&self) -> Result<TruncatedSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let c0_inv = self.coeffs[0].recip();
        let mut inv = vec![Rat::zero(); n + 1];
        inv[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + &self.coeffs[j] * &inv[k - j];
                }
            }
            inv[k] = -(acc * &c0_inv);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// The substitution t ↦ −t: odd coefficients change sign.
    pub fn negate_variable(&self) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// The dual series q(t) = 1/p(−t), so that p(t)·q(−t) = 1. Sends the
    /// Poincaré series of a quantum exterior algebra to that of its symmetric
    /// partner, and is an involution.
    pub fn dual_series(&self) -> Result<TruncatedSeries> {
        self.negate_variable().invert()
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> TruncatedSeries {
        if self.order() == 0 {
            // d/dt of a constant known mod t^1 is 0 known mod t^1; callers
            // that need better precision must supply it.
            return TruncatedSeries::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Rat::from(k))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Antiderivative with constant term 0; the order rises by one.
    pub fn integral(&self) -> TruncatedSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / &Rat::from(k + 1));
        }
        TruncatedSeries { coeffs }
    }

    /// Logarithmic derivative p'/p. The coefficient of `t^{r-1}` is the r-th
    /// power sum of the underlying alphabet when p has constant term 1.
    /// Output order is one less than the input order.
    pub fn log_derivative(&self) -> Result<TruncatedSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if self.order() == 0 {
            return Err(Error::InsufficientPrecision {
                needed: 1,
                available: 0,
            });
        }
        let n = self.order() - 1;
        Ok(self.derivative().multiply(&self.truncated(n).invert()?))
    }

    /// exp(∫ p), the inverse of [`TruncatedSeries::log_derivative`]. Output
    /// order is one more than the input order. Uses the recurrence
    /// n·g_n = Σ_{k=1..n} p_{k-1} g_{n-k} from g' = p·g.
    pub fn exp_integral(&self) -> TruncatedSeries {
        let n = self.order() + 1;
        let mut g = vec![Rat::zero(); n + 1];
        g[0] = Rat::one();
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=m {
                let p = &self.coeffs[k - 1];
                if !p.is_zero() {
                    acc = acc + p * &g[m - k];
                }
            }
            g[m] = acc / Rat::from(m);
        }
        TruncatedSeries { coeffs: g }
    }

    /// Coefficientwise (Hadamard) product, truncated to the smaller order.
    pub fn hadamard(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] * &other.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }

    /// The lambda-ring product ⋆ on series with constant term 1, computed by
    /// transporting to power sums: power sums multiply coefficientwise under
    /// ⋆, so this is exp_integral of the Hadamard product of log-derivatives.
    pub fn lambda_product(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() || !other.coeffs[0].is_one() {
            return Err(Error::ZeroConstantTerm);
        }
        let p = self.log_derivative()?;
        let q = other.log_derivative()?;
        Ok(p.hadamard(&q).exp_integral())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] mod t^{}", self.order() + 1)
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// A series in Edrei factored form:
///
/// ```text
/// e^{γt} · prod_i (1 + t_i t) / prod_j (1 − u_j t)
/// ```
///
/// with positive rational roots `t_i`, poles `u_j` and weight γ ≥ 0. By
/// Edrei's theorem these are exactly the generating functions of Pólya
/// frequency sequences (up to the real/rational restriction adopted here for
/// exactness). Roots and poles are kept sorted so equal data compares equal.
///
/// The `roots_infinite` / `poles_infinite` flags assert that the listed
/// parameters are a finite sample of an infinite family. Flagged series
/// cannot be expanded; the flags exist so the strict-positivity certifier can
/// accept the infinite-family hypotheses that finite data can never witness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "FactoredRepr", into = "FactoredRepr")]
pub struct FactoredSeries {
    roots: Vec<Rat>,
    poles: Vec<Rat>,
    gamma: Rat,
    roots_infinite: bool,
    poles_infinite: bool,
}

#[derive(Serialize, Deserialize)]
struct FactoredRepr {
    roots: Vec<Rat>,
    poles: Vec<Rat>,
    gamma: Rat,
    #[serde(default, skip_serializing_if = "is_false")]
    roots_infinite: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    poles_infinite: bool,
}

impl From<FactoredSeries> for FactoredRepr {
    fn from(f: FactoredSeries) -> Self {
        FactoredRepr {
            roots: f.roots,
            poles: f.poles,
            gamma: f.gamma,
            roots_infinite: f.roots_infinite,
            poles_infinite: f.poles_infinite,
        }
    }
}

impl TryFrom<FactoredRepr> for FactoredSeries {
    type Error = Error;

    fn try_from(r: FactoredRepr) -> Result<Self> {
        let mut f = FactoredSeries::new(r.roots, r.poles, r.gamma)?;
        f.roots_infinite = r.roots_infinite;
        f.poles_infinite = r.poles_infinite;
        Ok(f)
    }
}

impl FactoredSeries {
    /// Validates positivity of all parameters and sorts the multisets.
    pub fn new(mut roots: Vec<Rat>, mut poles: Vec<Rat>, gamma: Rat) -> Result<Self> {
        if roots.iter().chain(poles.iter()).any(|x| !x.is_positive()) {
            return Err(Error::InvalidInput(
                "roots and poles must be strictly positive".into(),
            ));
        }
        if gamma.is_negative() {
            return Err(Error::InvalidInput("gamma must be nonnegative".into()));
        }
        roots.sort();
        poles.sort();
        Ok(FactoredSeries {
            roots,
            poles,
            gamma,
            roots_infinite: false,
            poles_infinite: false,
        })
    }

    pub fn from_ints(roots: &[i64], poles: &[i64], gamma: i64) -> Result<Self> {
        Self::new(
            roots.iter().map(|&r| Rat::from(r)).collect(),
            poles.iter().map(|&p| Rat::from(p)).collect(),
            Rat::from(gamma),
        )
    }

    /// (1+t)^m / (1-t)^n, the extremal series of rank (m, n).
    pub fn ones(m: usize, n: usize) -> Self {
        FactoredSeries {
            roots: vec![Rat::one(); m],
            poles: vec![Rat::one(); n],
            gamma: Rat::zero(),
            roots_infinite: false,
            poles_infinite: false,
        }
    }

    pub fn empty() -> Self {
        FactoredSeries::ones(0, 0)
    }

    pub fn roots(&self) -> &[Rat] {
        &self.roots
    }

    pub fn poles(&self) -> &[Rat] {
        &self.poles
    }

    pub fn gamma(&self) -> &Rat {
        &self.gamma
    }

    pub fn roots_infinite(&self) -> bool {
        self.roots_infinite
    }

    pub fn poles_infinite(&self) -> bool {
        self.poles_infinite
    }

    pub fn mark_roots_infinite(mut self) -> Self {
        self.roots_infinite = true;
        self
    }

    pub fn mark_poles_infinite(mut self) -> Self {
        self.poles_infinite = true;
        self
    }

    /// Coefficients of the factored product modulo `t^{order+1}`; `c_0 = 1`.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        if self.roots_infinite || self.poles_infinite {
            return Err(Error::InfiniteFamily);
        }
        let mut acc = if self.gamma.is_zero() {
            TruncatedSeries::one(order)
        } else {
            // e^{γt}: γ^k / k!
            let mut coeffs = Vec::with_capacity(order + 1);
            coeffs.push(Rat::one());
            for k in 1..=order {
                let prev = coeffs[k - 1].clone();
                coeffs.push(prev * &self.gamma / Rat::from(k));
            }
            TruncatedSeries::new(coeffs)
        };
        for r in &self.roots {
            let mut linear = TruncatedSeries::one(order);
            if order >= 1 {
                linear.coeffs[1] = r.clone();
            }
            acc = acc.multiply(&linear);
        }
        for u in &self.poles {
            // geometric series 1/(1-ut)
            let mut geo = Vec::with_capacity(order + 1);
            geo.push(Rat::one());
            for k in 1..=order {
                let prev = geo[k - 1].clone();
                geo.push(prev * u);
            }
            acc = acc.multiply(&TruncatedSeries::new(geo));
        }
        Ok(acc)
    }

    /// Multiset union of roots and poles, sum of gammas: the factored form of
    /// the ordinary series product. Infinite-family flags are inherited.
    pub fn factored_multiply(&self, other: &FactoredSeries) -> FactoredSeries {
        let mut roots = self.roots.clone();
        roots.extend_from_slice(&other.roots);
        roots.sort();
        let mut poles = self.poles.clone();
        poles.extend_from_slice(&other.poles);
        poles.sort();
        FactoredSeries {
            roots,
            poles,
            gamma: &self.gamma + &other.gamma,
            roots_infinite: self.roots_infinite || other.roots_infinite,
            poles_infinite: self.poles_infinite || other.poles_infinite,
        }
    }
}

impl fmt::Display for FactoredSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.gamma.is_zero() {
            write!(f, "exp({}t)", self.gamma)?;
        }
        for r in &self.roots {
            write!(f, "(1+{}t)", r)?;
        }
        if self.gamma.is_zero() && self.roots.is_empty() {
            write!(f, "1")?;
        }
        if self.roots_infinite {
            write!(f, "...")?;
        }
        if !self.poles.is_empty() || self.poles_infinite {
            write!(f, "/[")?;
            for (i, u) in self.poles.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "(1-{}t)", u)?;
            }
            if self.poles_infinite {
                write!(f, "...")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
