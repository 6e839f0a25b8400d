//! Seed mutation, exhaustive cluster-variable enumeration, and the Dyck-path
//! formula for cluster variables, with a cross-check between the two.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::dyck::{enumerate_s, PeakPath};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::quiver::{quiver_from_subchain, QuiverA};
use crate::snake::{HWord, LabeledSnake, Letter};
use crate::subchain::AdmissibleSubchain;

/// Default bound on the number of seeds visited by [`enumerate_cluster_variables`].
pub const DEFAULT_SEED_CAP: usize = 1_000_000;

/// A skew-symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeMatrix {
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let m = entries.len();
        if entries.iter().any(|row| row.len() != m) {
            return Err(Error::InvalidInput("exchange matrix is not square".into()));
        }
        let pairs = (0..m).flat_map(|i| (0..m).map(move |j| (i, j)));
        if let Some((i, j)) = pairs.into_iter().find(|&(i, j)| entries[i][j] != -entries[j][i]) {
            return Err(Error::InvalidInput(format!(
                "entries ({},{}) and ({},{}) are not opposite",
                i + 1,
                j + 1,
                j + 1,
                i + 1
            )));
        }
        Ok(Self { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry `b_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// `b_ij = #(i -> j) - #(j -> i)`.
pub fn b_matrix_from_quiver(q: &QuiverA) -> ExchangeMatrix {
    let m = q.m();
    let mut b = vec![vec![0; m]; m];
    for (s, t) in q.arrows() {
        b[s - 1][t - 1] += 1;
        b[t - 1][s - 1] -= 1;
    }
    ExchangeMatrix { entries: b }
}

fn check_k(k: usize, m: usize) -> Result<()> {
    if k < 1 || k > m {
        return Err(Error::IndexOutOfRange { index: k, max: m });
    }
    Ok(())
}

/// Matrix mutation in direction `k`.
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix> {
    let m = b.size();
    check_k(k, m)?;
    let k = k - 1;
    let e = &b.entries;
    let entries = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == k || j == k {
                        -e[i][j]
                    } else if e[i][k] * e[k][j] > 0 {
                        e[i][j] + e[i][k].abs() * e[k][j]
                    } else {
                        e[i][j]
                    }
                })
                .collect()
        })
        .collect();
    Ok(ExchangeMatrix { entries })
}

/// An exchange matrix with a cluster of Laurent polynomials in the initial variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    matrix: ExchangeMatrix,
    cluster: Vec<LaurentPoly>,
}

impl Seed {
    pub fn new(matrix: ExchangeMatrix, cluster: Vec<LaurentPoly>) -> Result<Self> {
        if matrix.size() != cluster.len() {
            return Err(Error::InvalidInput(format!(
                "{} variables for a {}x{} matrix",
                cluster.len(),
                matrix.size(),
                matrix.size()
            )));
        }
        Ok(Self { matrix, cluster })
    }

    /// `(B, (x_1, ..., x_m))`.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let m = matrix.size();
        let cluster = (1..=m).map(|i| LaurentPoly::var(m, i).expect("in range")).collect();
        Self { matrix, cluster }
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    /// Deduplication key: the sorted canonical strings of the cluster.
    pub fn key(&self) -> Vec<String> {
        let mut key: Vec<String> = self.cluster.iter().map(LaurentPoly::canonical_string).collect();
        key.sort();
        key
    }
}

/// Seed mutation: `x_k x_k' = prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}`.
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed> {
    let m = s.matrix.size();
    check_k(k, m)?;
    let nvars = s.cluster[0].nvars();
    let mut plus = LaurentPoly::one(nvars);
    let mut minus = LaurentPoly::one(nvars);
    for i in 1..=m {
        let b = s.matrix.get(i, k);
        let factor = s.cluster[i - 1].pow(b.unsigned_abs() as u32);
        if b > 0 {
            plus = plus.mul(&factor)?;
        } else if b < 0 {
            minus = minus.mul(&factor)?;
        }
    }
    let fresh = plus.add(&minus)?.exact_div(&s.cluster[k - 1])?;
    let mut cluster = s.cluster.clone();
    cluster[k - 1] = fresh;
    Ok(Seed { matrix: mutate_matrix(&s.matrix, k)?, cluster })
}

/// Outcome of a breadth-first walk through the exchange graph.
#[derive(Clone, Debug)]
pub struct Exploration {
    pub variables: BTreeSet<LaurentPoly>,
    pub seeds: usize,
}

/// Breadth-first exploration of all seeds reachable from the initial seed of `q`.
pub fn explore(q: &QuiverA, cap: usize) -> Result<Exploration> {
    let start = Seed::initial(b_matrix_from_quiver(q));
    let m = start.matrix.size();
    let mut seen: BTreeSet<Vec<String>> = BTreeSet::from([start.key()]);
    let mut variables: BTreeSet<LaurentPoly> = start.cluster.iter().cloned().collect();
    let mut queue = VecDeque::from([start]);
    while let Some(seed) = queue.pop_front() {
        for k in 1..=m {
            let next = mutate_seed(&seed, k)?;
            if seen.insert(next.key()) {
                if seen.len() > cap {
                    return Err(Error::SizeLimit { what: "seeds", value: seen.len(), bound: cap });
                }
                variables.insert(next.cluster[k - 1].clone());
                queue.push_back(next);
            }
        }
    }
    Ok(Exploration { variables, seeds: seen.len() })
}

/// All cluster variables of `q`, with the default seed cap.
pub fn enumerate_cluster_variables(q: &QuiverA) -> Result<BTreeSet<LaurentPoly>> {
    Ok(explore(q, DEFAULT_SEED_CAP)?.variables)
}

/// `eta_Y = prod_{i in [l, r]} x_i` in `n - 1` variables.
pub fn eta(y: &PeakPath) -> LaurentPoly {
    let m = y.n() - 1;
    LaurentPoly::monomial((1..=m).map(|i| i32::from(y.contains(i))).collect())
}

/// `U_1^i -> x_{i+1}`, `U_2^i -> x_i`, `E -> 1`, multiplied over the word.
pub fn word_monomial(v: &HWord) -> LaurentPoly {
    let m = v.n() - 1;
    let mut e = vec![0; m];
    for &l in v.letters() {
        match l {
            Letter::E => {}
            Letter::U1(i) => e[i] += 1,
            Letter::U2(i) => e[i - 1] += 1,
        }
    }
    LaurentPoly::monomial(e)
}

fn dyck_variable(labeled: &LabeledSnake, y: &PeakPath) -> Result<LaurentPoly> {
    let m = y.n() - 1;
    let numerator =
        labeled.restricted_words(y)?.iter().try_fold(LaurentPoly::zero(m), |acc, w| acc.add(&word_monomial(w)))?;
    numerator.exact_div(&eta(y))
}

/// `X_Y = eta_Y^{-1} * sum_{V in [Y ∩ X_C]} X_V`.
pub fn cluster_var_from_dyck(y: &PeakPath, c: &AdmissibleSubchain) -> Result<LaurentPoly> {
    if y.n() != c.n() {
        return Err(Error::InvalidInput(format!("path {y} has n={}, subchain has n={}", y.n(), c.n())));
    }
    dyck_variable(&LabeledSnake::new(c)?, y)
}

/// Cluster variables of every member of `S`, in `enumerate_s` order.
pub fn dyck_cluster_variables(c: &AdmissibleSubchain) -> Result<Vec<(PeakPath, LaurentPoly)>> {
    let labeled = LabeledSnake::new(c)?;
    enumerate_s(c.n())?.into_iter().map(|y| Ok((y, dyck_variable(&labeled, &y)?))).collect()
}

/// Comparison of the Dyck-path formula with the mutation engine for one subchain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub subchain: AdmissibleSubchain,
    pub dyck_count: usize,
    pub mutation_count: usize,
    pub equal: bool,
    /// Non-initial mutation variables not produced by the Dyck formula.
    pub missing: Vec<String>,
    /// Dyck-formula values that are not non-initial cluster variables.
    pub extra: Vec<String>,
}

pub fn verify_bijection(c: &AdmissibleSubchain) -> Result<VerifyReport> {
    let m = c.n() - 1;
    let dyck: BTreeSet<LaurentPoly> = dyck_cluster_variables(c)?.into_iter().map(|(_, v)| v).collect();
    let initial: BTreeSet<LaurentPoly> = (1..=m).map(|i| LaurentPoly::var(m, i)).collect::<Result<_>>()?;
    let mutation: BTreeSet<LaurentPoly> =
        enumerate_cluster_variables(&quiver_from_subchain(c))?.difference(&initial).cloned().collect();
    let render = |s: std::collections::btree_set::Difference<'_, LaurentPoly>| {
        s.map(LaurentPoly::canonical_string).collect::<Vec<_>>()
    };
    let missing = render(mutation.difference(&dyck));
    let extra = render(dyck.difference(&mutation));
    Ok(VerifyReport {
        subchain: c.clone(),
        dyck_count: dyck.len(),
        mutation_count: mutation.len(),
        equal: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
    })
}

/// Runs `verify_bijection` on every admissible subchain with `n` in `range`, in parallel.
pub fn verify_all(range: std::ops::RangeInclusive<usize>) -> Result<Vec<VerifyReport>> {
    let chains: Vec<AdmissibleSubchain> = range.flat_map(AdmissibleSubchain::all).collect();
    chains.par_iter().map(verify_bijection).collect()
}

/// `m(m + 3) / 2`, the number of cluster variables of type `A_m`.
pub fn type_a_variable_count(m: usize) -> usize {
    m * (m + 3) / 2
}
