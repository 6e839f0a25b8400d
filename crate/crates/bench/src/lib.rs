//! Inputs shared by the benchmarks.

use dyck_cluster::{AdmissibleSubchain, Result};

/// The zigzag orientation with sinks at the odd indices.
pub fn zigzag(n: usize) -> Result<AdmissibleSubchain> {
    let (sinks, sources): (Vec<usize>, Vec<usize>) = (1..n).partition(|i| i % 2 == 1);
    AdmissibleSubchain::new(n, sinks, sources)
}

/// The linear orientation `1 -> ... -> n-1`.
pub fn linear(n: usize) -> Result<AdmissibleSubchain> {
    AdmissibleSubchain::linear(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_admissible() {
        for n in 3..=10 {
            assert!(zigzag(n).is_ok());
            assert!(linear(n).is_ok());
        }
    }
}
