//! Dyck words, their pair decomposition `U w_1 ... w_{n-1} D`, peaks, supports,
//! unitary shifts and enumeration of the object sets.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default upper bound on the half-length accepted by [`enumerate_dyck`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 14;

/// A lattice step. `D` sorts before `U` so that derived ordering agrees with
/// the ordering of the textual form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    D,
    U,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }

    fn from_char(c: char) -> Result<Self> {
        match c {
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            other => Err(Error::InvalidInput(format!("unexpected symbol {other:?}, expected U or D"))),
        }
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    let steps = s.chars().map(Step::from_char).collect::<Result<Vec<_>>>()?;
    if steps.is_empty() {
        return Err(Error::InvalidInput("empty step word".into()));
    }
    if steps.len() % 2 != 0 {
        return Err(Error::InvalidInput(format!("odd length {}", steps.len())));
    }
    Ok(steps)
}

fn is_dyck(steps: &[Step]) -> bool {
    let mut height: i64 = 0;
    for &s in steps {
        height += if s == Step::U { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

/// Checks the Dyck conditions on a textual step word.
///
/// Errors on odd length, empty input or symbols other than `U`/`D`.
pub fn validate_dyck(steps: &str) -> Result<bool> {
    Ok(is_dyck(&parse_steps(steps)?))
}

/// A Dyck path of half-length `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() || steps.len() % 2 != 0 {
            return Err(Error::InvalidInput(format!("step count {} is not a positive even number", steps.len())));
        }
        if !is_dyck(&steps) {
            let word: String = steps.iter().map(|s| s.as_char()).collect();
            return Err(Error::InvalidInput(format!("{word} is not a Dyck word")));
        }
        Ok(Self { steps })
    }

    /// Half-length.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::new(parse_steps(s)?)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One inner letter pair `w_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    UD,
    DU,
    UU,
    DD,
}

impl Pair {
    fn from_steps(a: Step, b: Step) -> Self {
        match (a, b) {
            (Step::U, Step::D) => Pair::UD,
            (Step::D, Step::U) => Pair::DU,
            (Step::U, Step::U) => Pair::UU,
            (Step::D, Step::D) => Pair::DD,
        }
    }

    fn steps(self) -> [Step; 2] {
        match self {
            Pair::UD => [Step::U, Step::D],
            Pair::DU => [Step::D, Step::U],
            Pair::UU => [Step::U, Step::U],
            Pair::DD => [Step::D, Step::D],
        }
    }

    /// The reversed pair `ba` of `ab`.
    pub fn reversed(self) -> Self {
        match self {
            Pair::UD => Pair::DU,
            Pair::DU => Pair::UD,
            p => p,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.steps();
        write!(f, "{}{}", a.as_char(), b.as_char())
    }
}

/// The decomposition `U w_1 ... w_{n-1} D` of a Dyck path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairForm {
    pairs: Vec<Pair>,
}

impl PairForm {
    /// Builds a pair form, rejecting sequences whose reassembly is not a Dyck path.
    pub fn new(pairs: Vec<Pair>) -> Result<Self> {
        let pf = Self { pairs };
        if !is_dyck(&pf.assemble_steps()) {
            return Err(Error::InvalidInput(format!("pairs {pf} do not reassemble into a Dyck path")));
        }
        Ok(pf)
    }

    pub fn n(&self) -> usize {
        self.pairs.len() + 1
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    /// Pair `w_i`, 1-based.
    pub fn pair(&self, i: usize) -> Option<Pair> {
        i.checked_sub(1).and_then(|k| self.pairs.get(k)).copied()
    }

    fn assemble_steps(&self) -> Vec<Step> {
        let mut steps = Vec::with_capacity(2 * self.n());
        steps.push(Step::U);
        steps.extend(self.pairs.iter().flat_map(|p| p.steps()));
        steps.push(Step::D);
        steps
    }

    pub fn reassemble(&self) -> DyckPath {
        DyckPath { steps: self.assemble_steps() }
    }
}

impl fmt::Display for PairForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.pairs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Splits a Dyck path into its inner pairs `w_i = y_{2i} y_{2i+1}`.
pub fn pair_decompose(p: &DyckPath) -> PairForm {
    let inner = &p.steps[1..p.steps.len() - 1];
    PairForm { pairs: inner.chunks_exact(2).map(|c| Pair::from_steps(c[0], c[1])).collect() }
}

/// Indices `q` (1-based) with `w_q` equal to `UD` or `UU`.
pub fn support(pf: &PairForm) -> Vec<usize> {
    pf.pairs.iter().enumerate().filter(|(_, p)| matches!(p, Pair::UD | Pair::UU)).map(|(k, _)| k + 1).collect()
}

/// `(l, r)` when the pairs are `UD` exactly on `[l, r]` and `DU` elsewhere.
pub fn peak_run(pf: &PairForm) -> Option<(usize, usize)> {
    if pf.pairs.iter().any(|p| !matches!(p, Pair::UD | Pair::DU)) {
        return None;
    }
    let ud = support(pf);
    let (&l, &r) = (ud.first()?, ud.last()?);
    (r - l + 1 == ud.len()).then_some((l, r))
}

/// Number of occurrences of the factor `UD`.
pub fn count_peaks(p: &DyckPath) -> usize {
    p.steps.windows(2).filter(|w| w[0] == Step::U && w[1] == Step::D).count()
}

/// A member of `S`: the Dyck path with `w_i = UD` on `[l, r]` and `DU` elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PeakPath {
    #[serde(skip)]
    n: usize,
    l: usize,
    r: usize,
}

impl PeakPath {
    pub fn new(n: usize, l: usize, r: usize) -> Result<Self> {
        if n < 2 || l < 1 || l > r || r > n - 1 {
            return Err(Error::InvalidInput(format!(
                "({l}, {r}) is not a support interval inside 1..={}",
                n.saturating_sub(1)
            )));
        }
        Ok(Self { n, l, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn contains(&self, i: usize) -> bool {
        self.l <= i && i <= self.r
    }

    pub fn pair_form(&self) -> PairForm {
        PairForm { pairs: (1..self.n).map(|i| if self.contains(i) { Pair::UD } else { Pair::DU }).collect() }
    }

    pub fn dyck(&self) -> DyckPath {
        self.pair_form().reassemble()
    }

    /// Recognizes a member of `S`.
    pub fn from_dyck(p: &DyckPath) -> Option<Self> {
        let (l, r) = peak_run(&pair_decompose(p))?;
        Some(Self { n: p.n(), l, r })
    }
}

impl fmt::Display for PeakPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.l, self.r)
    }
}

/// All Dyck paths of half-length `n` in lexicographic order, with the default bound.
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>> {
    enumerate_dyck_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// All Dyck paths of half-length `n` in lexicographic order, for `1 <= n <= bound`.
pub fn enumerate_dyck_bounded(n: usize, bound: usize) -> Result<Vec<DyckPath>> {
    if n == 0 {
        return Err(Error::InvalidInput("half-length must be positive".into()));
    }
    if n > bound {
        return Err(Error::SizeLimit { what: "n", value: n, bound });
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(2 * n);
    extend_dyck(n, 0, 0, &mut buf, &mut out);
    Ok(out)
}

fn extend_dyck(n: usize, ups: usize, downs: usize, buf: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if downs == n {
        out.push(DyckPath { steps: buf.clone() });
        return;
    }
    if downs < ups {
        buf.push(Step::D);
        extend_dyck(n, ups, downs + 1, buf, out);
        buf.pop();
    }
    if ups < n {
        buf.push(Step::U);
        extend_dyck(n, ups + 1, downs, buf, out);
        buf.pop();
    }
}

/// All members of `S` for half-length `n >= 2`, ordered by `(l, r)`.
pub fn enumerate_s(n: usize) -> Result<Vec<PeakPath>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("S requires n >= 2, got {n}")));
    }
    Ok((1..n).flat_map(|l| (l..n).map(move |r| PeakPath { n, l, r })).collect())
}

/// Reverses pair `w_i`; fails when the result is not a Dyck path.
pub fn unitary_shift(pf: &PairForm, i: usize) -> Result<PairForm> {
    let max = pf.pairs.len();
    if i < 1 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    let mut pairs = pf.pairs.clone();
    pairs[i - 1] = pairs[i - 1].reversed();
    let out = PairForm { pairs };
    if !is_dyck(&out.assemble_steps()) {
        return Err(Error::InvalidShift { index: i, word: out.reassemble().to_string() });
    }
    Ok(out)
}
