//! Schur-type symmetric function values at a fixed specialization.
//!
//! A [`Specialization`] assigns scalar values to the elementary and complete
//! symmetric functions jointly, tied together by the exterior/symmetric
//! duality so that both Jacobi–Trudi determinant forms are available. Schur
//! and skew Schur values are determinants in those sequences; Kostka and
//! Littlewood–Richardson numbers are semistandard-tableau counts; the
//! Berele–Regev super Schur function is the finite-alphabet sum over
//! subshapes. Brute-force tableau-sum oracles live here too, so determinant
//! routes and counting routes can check each other.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::det::rat_det;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition, SkewShape};
use crate::rational::Rat;
use crate::series::{FactoredSeries, TruncatedSeries};

/// Joint values of the elementary and complete symmetric functions, stored
/// as the coefficient sequences of the two dual series. Constructed jointly
/// so the duality always holds; indices below 0 read as 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Specialization {
    e: TruncatedSeries,
    s: TruncatedSeries,
}

impl Specialization {
    /// From the elementary-value series (constant term must be 1).
    pub fn from_elementary(e: TruncatedSeries) -> Result<Self> {
        if !e.constant_term().is_one() {
            return Err(Error::InvalidInput(
                "specialization series must have constant term 1".into(),
            ));
        }
        let s = e.dual_series()?;
        Ok(Specialization { e, s })
    }

    /// From the complete-value series (constant term must be 1).
    pub fn from_complete(s: TruncatedSeries) -> Result<Self> {
        if !s.constant_term().is_one() {
            return Err(Error::InvalidInput(
                "specialization series must have constant term 1".into(),
            ));
        }
        let e = s.dual_series()?;
        Ok(Specialization { e, s })
    }

    pub fn from_factored(f: &FactoredSeries, order: usize) -> Result<Self> {
        Self::from_elementary(f.expand(order)?)
    }

    /// The finite-alphabet specialization with the given variable values:
    /// elementary values are the coefficients of `prod (1 + v_i t)`.
    pub fn from_variables(values: &[Rat], order: usize) -> Self {
        let mut e = TruncatedSeries::one(order);
        for v in values {
            let mut linear = vec![Rat::zero(); order + 1];
            linear[0] = Rat::one();
            if order >= 1 {
                linear[1] = v.clone();
            }
            e = e.multiply(&TruncatedSeries::new(linear));
        }
        Specialization::from_elementary(e).expect("constant term is 1 by construction")
    }

    pub fn order(&self) -> usize {
        self.e.order()
    }

    /// Value of the k-th elementary function; 0 for k < 0.
    pub fn elementary(&self, k: i64) -> Result<Rat> {
        self.read(&self.e, k)
    }

    /// Value of the k-th complete function; 0 for k < 0.
    pub fn complete(&self, k: i64) -> Result<Rat> {
        self.read(&self.s, k)
    }

    pub fn elementary_series(&self) -> &TruncatedSeries {
        &self.e
    }

    pub fn complete_series(&self) -> &TruncatedSeries {
        &self.s
    }

    fn read(&self, series: &TruncatedSeries, k: i64) -> Result<Rat> {
        if k < 0 {
            return Ok(Rat::zero());
        }
        let k = k as usize;
        if k > series.order() {
            return Err(Error::InsufficientPrecision {
                needed: k as i64,
                available: series.order(),
            });
        }
        Ok(series.coeff(k).clone())
    }
}

/// Jacobi–Trudi matrix for outer/inner, 0-indexed entry (i,j) holding the
/// value at index outer_i − inner_j − i + j.
fn jt_matrix(
    value: impl Fn(i64) -> Result<Rat>,
    outer: &Partition,
    inner: &Partition,
) -> Result<Vec<Vec<Rat>>> {
    let l = outer.len();
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| value(outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect()
}

/// Schur value m_λ: l(λ)×l(λ) determinant in complete values, or by the dual
/// identity the l(λ')×l(λ') determinant in elementary values. Whichever
/// matrix is smaller is used; both agree. The empty determinant is 1.
pub fn schur_value(sp: &Specialization, lambda: &Partition) -> Result<Rat> {
    skew_schur_value(sp, &SkewShape::straight(lambda.clone()))
}

/// Skew Schur value m_{λ/μ} as the Jacobi–Trudi determinant; equals
/// `schur_value` when μ = ∅.
pub fn skew_schur_value(sp: &Specialization, shape: &SkewShape) -> Result<Rat> {
    let s_size = shape.outer().len();
    let e_size = shape.outer().part(0);
    let m = if e_size < s_size {
        let conj = shape.conjugate();
        jt_matrix(|k| sp.elementary(k), conj.outer(), conj.inner())?
    } else {
        jt_matrix(|k| sp.complete(k), shape.outer(), shape.inner())?
    };
    Ok(rat_det(&m))
}

/// The Berele–Regev super Schur value m_λ(x/y) = Σ_{μ⊆λ} s_μ(x)·s_{λ'/μ'}(y),
/// evaluated over the finite alphabets x and y. Nonzero exactly on the fat
/// hook Γ_{|x|,|y|} when all variables are strictly positive.
pub fn super_schur_value(x: &[Rat], y: &[Rat], lambda: &Partition) -> Rat {
    let order = lambda.weight().max(1);
    let spx = Specialization::from_variables(x, order);
    let spy = Specialization::from_variables(y, order);
    let lambda_conj = lambda.conjugate();

    let mut acc = Rat::zero();
    for w in 0..=lambda.weight() {
        for mu in enumerate_partitions(w) {
            if mu.len() > x.len() || !lambda.contains(&mu) {
                continue;
            }
            let s_mu = schur_value(&spx, &mu).expect("order covers |λ|");
            if s_mu.is_zero() {
                continue;
            }
            let shape =
                SkewShape::new(lambda_conj.clone(), mu.conjugate()).expect("μ ⊆ λ implies μ' ⊆ λ'");
            let s_skew = skew_schur_value(&spy, &shape).expect("order covers |λ|");
            acc = acc + s_mu * s_skew;
        }
    }
    acc
}

/// A filling of a skew shape, row-indexed. Rows must weakly increase and
/// columns strictly increase for the filling to be semistandard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// `rows[i]` holds the entries of row i, left to right, one per cell.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidInput("row count does not match shape".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            let (lo, hi) = shape.row_bounds(i);
            if row.len() != hi - lo {
                return Err(Error::InvalidInput(format!(
                    "row {i} must have {} entries",
                    hi - lo
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidInput("entries must be positive".into()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at (row, col) in diagram coordinates, if the cell is in the shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        Some(self.rows[row][col - self.shape.row_bounds(row).0])
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        for i in 0..self.shape.rows() {
            let (lo, hi) = self.shape.row_bounds(i);
            for j in lo..hi {
                let v = self.entry(i, j).unwrap();
                if j + 1 < hi && self.entry(i, j + 1).unwrap() < v {
                    return false;
                }
                if i > 0 {
                    if let Some(above) = self.entry(i - 1, j) {
                        if above >= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Multiplicity of each letter 1..=max used in the filling.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for &v in self.rows.iter().flatten() {
            counts[v - 1] += 1;
        }
        counts
    }
}

/// Streams every semistandard filling of `shape` with entries ≤ `max_entry`,
/// optionally capped to at most `cap[v-1]` copies of each letter v.
fn for_each_ssyt(
    shape: &SkewShape,
    max_entry: usize,
    cap: Option<&[usize]>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    struct Walk<'a> {
        shape: &'a SkewShape,
        cells: Vec<(usize, usize)>,
        max_entry: usize,
        cap: Option<&'a [usize]>,
    }

    impl Walk<'_> {
        fn rec(
            &self,
            idx: usize,
            grid: &mut Vec<Vec<usize>>,
            counts: &mut Vec<usize>,
            visit: &mut impl FnMut(&[Vec<usize>]),
        ) {
            let Some(&(i, j)) = self.cells.get(idx) else {
                visit(grid);
                return;
            };
            let mut lo = 1;
            if j > 0 && self.shape.contains_cell(i, j - 1) {
                lo = lo.max(grid[i][j - 1]);
            }
            if i > 0 && self.shape.contains_cell(i - 1, j) {
                lo = lo.max(grid[i - 1][j] + 1);
            }
            for v in lo..=self.max_entry {
                if let Some(c) = self.cap {
                    if counts[v - 1] >= c[v - 1] {
                        continue;
                    }
                }
                grid[i][j] = v;
                counts[v - 1] += 1;
                self.rec(idx + 1, grid, counts, visit);
                counts[v - 1] -= 1;
                grid[i][j] = 0;
            }
        }
    }

    let walk = Walk {
        shape,
        cells: (0..shape.rows())
            .flat_map(|i| {
                let (lo, hi) = shape.row_bounds(i);
                (lo..hi).map(move |j| (i, j))
            })
            .collect(),
        max_entry,
        cap,
    };
    let mut grid: Vec<Vec<usize>> = (0..shape.rows())
        .map(|i| vec![0; shape.outer().part(i)])
        .collect();
    let mut counts = vec![0usize; max_entry];
    walk.rec(0, &mut grid, &mut counts, visit);
}

/// All semistandard tableaux of the shape with entries ≤ `max_entry`.
/// Exhaustive enumeration; meant for small shapes.
pub fn semistandard_tableaux(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, max_entry, None, &mut |grid| {
        let rows = (0..shape.rows())
            .map(|i| {
                let (lo, hi) = shape.row_bounds(i);
                grid[i][lo..hi].to_vec()
            })
            .collect();
        out.push(Tableau::new(shape.clone(), rows).expect("enumerator emits valid fillings"));
    });
    out
}

/// Kostka number: semistandard tableaux of shape λ and weight μ. The weight
/// may be any composition (order of entries matters for the filling letters,
/// not for the count).
pub fn kostka(lambda: &Partition, weight: &[usize]) -> Result<u64> {
    let total: usize = weight.iter().sum();
    if total != lambda.weight() {
        return Err(Error::WeightMismatch {
            shape: lambda.weight(),
            filling: total,
        });
    }
    let shape = SkewShape::straight(lambda.clone());
    let mut count = 0u64;
    for_each_ssyt(&shape, weight.len(), Some(weight), &mut |_| count += 1);
    Ok(count)
}

/// Littlewood–Richardson coefficient c_{μγ}^λ: the number of semistandard
/// fillings of λ/μ with weight γ whose reverse reading word (rows top to
/// bottom, each read right to left) is a lattice word. Returns 0 when the
/// weights do not add up or μ ⊄ λ.
pub fn lr_coefficient(mu: &Partition, gamma: &Partition, lambda: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + gamma.weight() || !lambda.contains(mu) {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    let letters = gamma.len();
    if shape.weight() == 0 {
        return 1; // empty filling; gamma is empty too since weights match
    }

    // cells in reverse reading order so the lattice condition can be
    // maintained incrementally
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|i| {
            let (lo, hi) = shape.row_bounds(i);
            (lo..hi).rev().map(move |j| (i, j))
        })
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..shape.rows())
        .map(|i| vec![0; shape.outer().part(i)])
        .collect();
    let mut counts = vec![0usize; letters];
    let mut found = 0u64;

    fn rec(
        shape: &SkewShape,
        gamma: &Partition,
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        found: &mut u64,
    ) {
        let Some(&(i, j)) = cells.get(idx) else {
            *found += 1; // caps force counts == gamma once every cell is placed
            return;
        };
        let letters = counts.len();
        for v in 1..=letters {
            if counts[v - 1] >= gamma.part(v - 1) {
                continue; // weight cap
            }
            if v > 1 && counts[v - 1] >= counts[v - 2] {
                continue; // lattice: every prefix has #(v) ≤ #(v-1)
            }
            if shape.contains_cell(i, j + 1) && v > grid[i][j + 1] {
                continue; // rows weakly increase
            }
            if i > 0 && shape.contains_cell(i - 1, j) && v <= grid[i - 1][j] {
                continue; // columns strictly increase
            }
            grid[i][j] = v;
            counts[v - 1] += 1;
            rec(shape, gamma, cells, idx + 1, grid, counts, found);
            counts[v - 1] -= 1;
            grid[i][j] = 0;
        }
    }

    rec(&shape, gamma, &cells, 0, &mut grid, &mut counts, &mut found);
    found
}

/// Brute-force Schur evaluation: Σ over semistandard tableaux with entries
/// ≤ |values| of the product of the chosen values. Independent of the
/// determinant route; intended for small shapes only.
pub fn schur_polynomial_oracle(shape: &SkewShape, values: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for_each_ssyt(shape, values.len(), None, &mut |grid| {
        let mut term = Rat::one();
        for (i, row) in grid.iter().enumerate() {
            let (lo, hi) = shape.row_bounds(i);
            for v in &row[lo..hi] {
                term = term * &values[v - 1];
            }
        }
        acc = &acc + &term;
    });
    acc
}

/// Closed-form dimension s_λ(1^n) by the hook content formula:
/// prod over cells of (n + col − row) / hook length; 0 when l(λ) > n.
pub fn hook_content_dim(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            num *= BigInt::from(n as i64 + j as i64 - i as i64);
            let hook = (lambda.part(i) - j) + (conj.part(j) - i) - 1;
            den *= BigInt::from(hook as i64);
        }
    }
    (num / den)
        .to_biguint()
        .expect("hook content is nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn classical(n: usize, order: usize) -> Specialization {
        let vals = vec![Rat::one(); n];
        Specialization::from_variables(&vals, order)
    }

    #[test]
    fn specialization_pairs_dual_series() {
        let sp = classical(2, 5);
        assert_eq!(
            sp.elementary_series(),
            &TruncatedSeries::from_ints(&[1, 2, 1, 0, 0, 0])
        );
        assert_eq!(
            sp.complete_series(),
            &TruncatedSeries::from_ints(&[1, 2, 3, 4, 5, 6])
        );
        assert_eq!(sp.elementary(-3).unwrap(), Rat::zero());
        assert!(matches!(
            sp.complete(9),
            Err(Error::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn schur_value_examples() {
        let sp = classical(2, 6);
        assert_eq!(schur_value(&sp, &p(&[2, 1])).unwrap(), Rat::from(2i64));
        assert_eq!(schur_value(&sp, &p(&[1, 1, 1])).unwrap(), Rat::zero());
        assert_eq!(schur_value(&sp, &Partition::empty()).unwrap(), Rat::one());
    }

    #[test]
    fn schur_value_matches_hook_content_on_classical_specs() {
        for n in 0..=3usize {
            let sp = classical(n, 8);
            for w in 0..=8 {
                for lambda in enumerate_partitions(w) {
                    let det = schur_value(&sp, &lambda).unwrap();
                    let hc = Rat::from(BigInt::from(hook_content_dim(&lambda, n)));
                    assert_eq!(det, hc, "λ = {lambda}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn skew_schur_examples() {
        let sp = classical(2, 6);
        let shape = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(skew_schur_value(&sp, &shape).unwrap(), Rat::from(4i64));

        let identical = SkewShape::new(p(&[3, 2]), p(&[3, 2])).unwrap();
        assert_eq!(skew_schur_value(&sp, &identical).unwrap(), Rat::one());

        let straight = SkewShape::straight(p(&[2, 1]));
        assert_eq!(
            skew_schur_value(&sp, &straight).unwrap(),
            schur_value(&sp, &p(&[2, 1])).unwrap()
        );
    }

    #[test]
    fn super_schur_examples() {
        let one = vec![Rat::one()];
        assert_eq!(super_schur_value(&one, &one, &p(&[1])), Rat::from(2i64));
        assert_eq!(super_schur_value(&one, &one, &p(&[2, 1])), Rat::from(2i64));
        assert_eq!(super_schur_value(&one, &one, &p(&[2, 2])), Rat::zero());
    }

    #[test]
    fn super_schur_support_is_the_fat_hook() {
        let x = vec![Rat::one(), Rat::new(1, 2)];
        let y = vec![Rat::from(2i64)];
        for w in 0..=8 {
            for lambda in enumerate_partitions(w) {
                let v = super_schur_value(&x, &y, &lambda);
                assert_eq!(!v.is_zero(), lambda.in_hook_region(2, 1), "λ = {lambda}");
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 2]), &[3, 2]).unwrap(), 1);
        assert_eq!(kostka(&p(&[1, 1]), &[2]).unwrap(), 0);
        assert!(matches!(
            kostka(&p(&[2]), &[1, 2]),
            Err(Error::WeightMismatch { .. })
        ));
        // compositions reorder freely: K is symmetric in the weight
        assert_eq!(
            kostka(&p(&[3, 1]), &[1, 2, 1]).unwrap(),
            kostka(&p(&[3, 1]), &[2, 1, 1]).unwrap()
        );
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[4])), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        // the classical multiplicity-2 case
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        // empty gamma
        assert_eq!(
            lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])),
            1
        );
    }

    #[test]
    fn oracle_examples() {
        let ones = vec![Rat::one(), Rat::one()];
        assert_eq!(
            schur_polynomial_oracle(&SkewShape::straight(p(&[2, 1])), &ones),
            Rat::from(2i64)
        );
        let abc = vec![Rat::from(2i64), Rat::from(3i64), Rat::from(5i64)];
        assert_eq!(
            schur_polynomial_oracle(&SkewShape::straight(p(&[1])), &abc),
            Rat::from(10i64)
        );
        assert_eq!(
            schur_polynomial_oracle(&SkewShape::straight(p(&[1, 1, 1])), &ones),
            Rat::zero()
        );
    }

    #[test]
    fn determinant_matches_tableau_oracle() {
        let values = vec![Rat::new(1, 2), Rat::from(2i64), Rat::new(3, 4)];
        let sp = Specialization::from_variables(&values, 8);
        for w in 0..=6 {
            for lambda in enumerate_partitions(w) {
                let det = schur_value(&sp, &lambda).unwrap();
                let oracle = schur_polynomial_oracle(&SkewShape::straight(lambda.clone()), &values);
                assert_eq!(det, oracle, "λ = {lambda}");
            }
        }
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(hook_content_dim(&p(&[2, 1]), 2), BigUint::from(2u32));
        assert_eq!(hook_content_dim(&p(&[1]), 7), BigUint::from(7u32));
        assert_eq!(hook_content_dim(&p(&[1, 1, 1]), 2), BigUint::zero());
        assert_eq!(hook_content_dim(&Partition::empty(), 0), BigUint::one());
    }

    #[test]
    fn tableau_type_checks_fillings() {
        let shape = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        let t = Tableau::new(shape.clone(), vec![vec![1], vec![1]]).unwrap();
        assert!(t.is_semistandard());
        assert_eq!(t.weight(), vec![2]);

        // column (0,0)/(1,0) is absent here, so no strictness applies there;
        // make a genuinely bad one instead
        let bad = Tableau::new(SkewShape::straight(p(&[2, 1])), vec![vec![2, 1], vec![3]]).unwrap();
        assert!(!bad.is_semistandard());

        assert!(Tableau::new(shape, vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn ssyt_enumeration_counts() {
        // s_(2,1) over 3 letters has 8 tableaux
        let ts = semistandard_tableaux(&SkewShape::straight(p(&[2, 1])), 3);
        assert_eq!(ts.len(), 8);
        assert!(ts.iter().all(Tableau::is_semistandard));
    }
}
