//! Partitions and skew shapes.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers,
//! stored without trailing zeros so that equality is structural. Missing
//! parts read as 0 throughout. Partitions index the simple comodules and the
//! Schur-type symmetric functions in the rest of the crate.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    /// Panics when the sequence is not a valid partition; use serde or
    /// [`Partition::try_new`] for untrusted input.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("parts must be positive and weakly decreasing")
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidInput(format!(
                "not weakly decreasing positive parts: {parts:?}"
            )))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (0-indexed), with absent parts read as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// |λ|, the number being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// l(λ), the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition λ' (transpose of the Young diagram):
    /// λ'_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Componentwise containment: μ ⊆ λ iff μ_i ≤ λ_i for all i.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Membership in the fat hook Γ_{m,n}: λ_j ≤ n for every row j ≥ m+1
    /// (1-indexed). Γ_{r,0} is exactly the set of partitions with l(λ) ≤ r.
    pub fn in_hook_region(&self, m: usize, n: usize) -> bool {
        self.parts.iter().skip(m).all(|&p| p <= n)
    }
}

/// All partitions of weight `n`, each exactly once, in reverse-lexicographic
/// order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1). The order is fixed so table
/// outputs are deterministic and diffable.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::try_new(parts).map_err(serde::de::Error::custom)
    }
}

/// A skew shape λ/μ with μ ⊆ λ componentwise.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if outer.contains(&inner) {
            Ok(SkewShape { outer, inner })
        } else {
            Err(Error::InvalidShape { outer, inner })
        }
    }

    /// The straight shape λ = λ/∅.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells, |λ| − |μ|.
    pub fn weight(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// The conjugate shape λ'/μ'.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Column bounds of row i: cells occupy columns `inner_i..outer_i`.
    pub fn row_bounds(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Whether the cell at (row, col), 0-indexed, belongs to the shape.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col >= self.inner.part(row) && col < self.outer.part(row)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four: Vec<_> = enumerate_partitions(4)
            .iter()
            .map(|q| q.parts().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    // Independent count by the classical recurrence p(n, k) = partitions of n
    // with parts <= k.
    fn count_partitions(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|k| count_partitions(n - k, k)).sum()
    }

    #[test]
    fn enumerate_matches_brute_force_count() {
        for n in 0..=10 {
            assert_eq!(enumerate_partitions(n).len(), count_partitions(n, n.max(1)));
        }
        assert_eq!(enumerate_partitions(8).len(), 22);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        // count cells per column of (4,4,2)
        assert_eq!(p(&[4, 4, 2]).conjugate(), p(&[3, 3, 2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 0..=12 {
            for lambda in enumerate_partitions(n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
                assert_eq!(lambda.conjugate().weight(), lambda.weight());
            }
        }
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[2, 1]).contains(&p(&[1])));
        assert!(!p(&[2, 1]).contains(&p(&[1, 1, 1])));
        assert!(p(&[5, 3, 3]).contains(&p(&[4, 3, 1])));
        assert!(p(&[2, 1]).contains(&Partition::empty()));
    }

    #[test]
    fn containment_is_a_partial_order() {
        let all: Vec<Partition> = (0..=8).flat_map(enumerate_partitions).collect();
        for a in &all {
            assert!(a.contains(a));
            for b in &all {
                if a.contains(b) && b.contains(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.contains(b) && b.contains(c) {
                        assert!(a.contains(c));
                    }
                }
            }
        }
    }

    #[test]
    fn hook_region_examples() {
        assert!(p(&[3, 1]).in_hook_region(1, 1));
        // (2,2) has a second row of length 2 > 1
        assert!(!p(&[2, 2]).in_hook_region(1, 1));
        assert!(p(&[7, 2]).in_hook_region(2, 0));
        assert!(!p(&[7, 2, 1]).in_hook_region(2, 0));
    }

    #[test]
    fn hook_region_with_no_columns_is_length_bound() {
        for n in 0..=8 {
            for lambda in enumerate_partitions(n) {
                for r in 0..=4 {
                    assert_eq!(lambda.in_hook_region(r, 0), lambda.len() <= r);
                }
            }
        }
    }

    #[test]
    fn skew_shape_requires_containment() {
        assert!(SkewShape::new(p(&[2, 1]), p(&[1])).is_ok());
        let err = SkewShape::new(p(&[2, 1]), p(&[3])).unwrap_err();
        assert!(matches!(err, Error::InvalidShape { .. }));
    }

    #[test]
    fn json_form() {
        let lambda = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&lambda).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, lambda);
        let empty: Partition = serde_json::from_str("[]").unwrap();
        assert_eq!(empty, Partition::empty());
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<Partition>("[2,0]").is_err());
    }
}
