//! Admissible subchains: alternating sink/source index chains spanning `1..=n-1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Sink,
    Source,
}

impl Role {
    pub fn flipped(self) -> Self {
        match self {
            Role::Sink => Role::Source,
            Role::Source => Role::Sink,
        }
    }
}

/// Checks the subchain constraints for the category parameter `n`.
pub fn validate_subchain(n: usize, sinks: &[usize], sources: &[usize]) -> bool {
    if n < 2 {
        return false;
    }
    let mut elems: Vec<(usize, Role)> =
        sinks.iter().map(|&i| (i, Role::Sink)).chain(sources.iter().map(|&j| (j, Role::Source))).collect();
    elems.sort();
    if elems.is_empty() || elems.iter().any(|&(x, _)| x < 1 || x > n - 1) {
        return false;
    }
    if elems.windows(2).any(|w| w[0].0 == w[1].0 || w[0].1 == w[1].1) {
        return false;
    }
    elems[0].0 == 1 && elems[elems.len() - 1].0 == n - 1
}

/// An admissible subchain of `{1, ..., n-1}` with explicit sink and source roles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSubchain {
    n: usize,
    sinks: Vec<usize>,
    sources: Vec<usize>,
}

impl AdmissibleSubchain {
    pub fn new(n: usize, mut sinks: Vec<usize>, mut sources: Vec<usize>) -> Result<Self> {
        if !validate_subchain(n, &sinks, &sources) {
            return Err(Error::InvalidSubchain(format!("n={n}, sinks={sinks:?}, sources={sources:?}")));
        }
        sinks.sort_unstable();
        sources.sort_unstable();
        Ok(Self { n, sinks, sources })
    }

    /// Parses the `"j1,i2,j4"` grammar: `i` marks a sink, `j` a source.
    pub fn parse(n: usize, spec: &str) -> Result<Self> {
        let mut sinks = Vec::new();
        let mut sources = Vec::new();
        for token in spec.split(',').map(str::trim) {
            let bad = || Error::Parse(format!("chain token {token:?} is not of the form iK or jK"));
            let mut chars = token.chars();
            let role = chars.next().ok_or_else(bad)?;
            let index: usize = chars.as_str().parse().map_err(|_| bad())?;
            match role {
                'i' => sinks.push(index),
                'j' => sources.push(index),
                _ => return Err(bad()),
            }
        }
        Self::new(n, sinks, sources)
    }

    /// The linear orientation `1 -> 2 -> ... -> n-1`.
    pub fn linear(n: usize) -> Result<Self> {
        if n == 2 {
            Self::new(2, vec![1], vec![])
        } else {
            Self::new(n, vec![n.saturating_sub(1)], vec![1])
        }
    }

    /// Every admissible subchain for `n`, in a fixed order.
    pub fn all(n: usize) -> Vec<Self> {
        if n < 2 {
            return Vec::new();
        }
        if n == 2 {
            return vec![Self { n, sinks: vec![1], sources: vec![] }, Self { n, sinks: vec![], sources: vec![1] }];
        }
        let interior: Vec<usize> = (2..n - 1).collect();
        let mut out = Vec::new();
        for first in [Role::Sink, Role::Source] {
            for mask in 0u64..(1u64 << interior.len()) {
                let mut elems = vec![1];
                elems.extend(interior.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x));
                elems.push(n - 1);
                let (mut sinks, mut sources) = (Vec::new(), Vec::new());
                let mut role = first;
                for x in elems {
                    match role {
                        Role::Sink => sinks.push(x),
                        Role::Source => sources.push(x),
                    }
                    role = role.flipped();
                }
                out.push(Self { n, sinks, sources });
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    /// Chain elements in increasing order with their roles.
    pub fn elements(&self) -> Vec<(usize, Role)> {
        let mut elems: Vec<(usize, Role)> = self
            .sinks
            .iter()
            .map(|&i| (i, Role::Sink))
            .chain(self.sources.iter().map(|&j| (j, Role::Source)))
            .collect();
        elems.sort();
        elems
    }

    /// The index set `C` underlying the chain.
    pub fn indices(&self) -> Vec<usize> {
        self.elements().into_iter().map(|(x, _)| x).collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.sinks.contains(&x) || self.sources.contains(&x)
    }
}

impl fmt::Display for AdmissibleSubchain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (x, role)) in self.elements().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            let tag = if role == Role::Sink { 'i' } else { 'j' };
            write!(f, "{tag}{x}")?;
        }
        Ok(())
    }
}

impl Serialize for AdmissibleSubchain {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(!validate_subchain(4, &[1, 3], &[]));
        assert!(validate_subchain(4, &[1], &[3]));
        assert!(validate_subchain(5, &[2], &[1, 4]));
        assert!(!validate_subchain(5, &[2, 3], &[1]));
        assert!(validate_subchain(2, &[1], &[]));
        assert!(validate_subchain(2, &[], &[1]));
        assert!(!validate_subchain(5, &[2], &[1, 3]));
        assert!(!validate_subchain(5, &[2], &[2, 4]));
    }

    #[test]
    fn parses_and_prints() {
        let c = AdmissibleSubchain::parse(5, "j1,i2,j4").unwrap();
        assert_eq!(c.sinks(), &[2]);
        assert_eq!(c.sources(), &[1, 4]);
        assert_eq!(c.to_string(), "j1,i2,j4");
        assert!(AdmissibleSubchain::parse(5, "j1,x2,j4").is_err());
        assert!(AdmissibleSubchain::parse(5, "j1,i2").is_err());
        assert!(AdmissibleSubchain::parse(5, "j1,i,j4").is_err());
    }

    #[test]
    fn counts_all_orientations() {
        assert_eq!(AdmissibleSubchain::all(2).len(), 2);
        for n in 3..=9 {
            let all = AdmissibleSubchain::all(n);
            assert_eq!(all.len(), 1 << (n - 2));
            assert!(all.iter().all(|c| validate_subchain(n, c.sinks(), c.sources())));
        }
    }
}
