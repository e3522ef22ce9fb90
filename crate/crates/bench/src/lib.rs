//! Shared fixtures for the benchmark targets.

use qspace_core::{FactoredSeries, QuantumSpaceSpec, Rat};

/// The rank-n classical spec: roots are n copies of 1.
pub fn classical_spec(n: usize) -> QuantumSpaceSpec {
    QuantumSpaceSpec::from_ints(&vec![1; n], &[], 1).unwrap()
}

/// A mixed spec with rational roots and poles, small numerators and
/// denominators, the shape the randomized suites draw from.
pub fn mixed_spec() -> QuantumSpaceSpec {
    QuantumSpaceSpec::new(
        FactoredSeries::new(
            vec![Rat::new(3, 2), Rat::new(1, 3)],
            vec![Rat::new(2, 3), Rat::new(1, 4)],
            Rat::zero(),
        )
        .unwrap(),
        Rat::one(),
    )
    .unwrap()
}
