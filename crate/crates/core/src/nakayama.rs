//! Linear Nakayama algebras on `1 -> 2 -> ... -> m`: Kupisch series, their
//! Dyck paths, the objects of the corresponding subcategory and AR quivers.

use std::fmt;
use std::str::FromStr;

use crate::dyck::{DyckPath, PeakPath, Step};
use crate::error::{Error, Result};
use crate::knitting::{knit, KnitInput};
use crate::shiftcat::ARQuiver;
use crate::subchain::AdmissibleSubchain;

/// `c_i = dim P(i)`, so that `P(i)` is the interval `[i, i + c_i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KupischSeries(Vec<usize>);

impl KupischSeries {
    pub fn new(c: Vec<usize>) -> Result<Self> {
        let m = c.len();
        if m == 0 {
            return Err(Error::InvalidKupisch("empty series".into()));
        }
        if c[m - 1] != 1 {
            return Err(Error::InvalidKupisch(format!("last entry must be 1 in {c:?}")));
        }
        for (i, &ci) in c.iter().enumerate() {
            if ci == 0 || ci > m - i {
                return Err(Error::InvalidKupisch(format!("c_{} = {ci} outside 1..={}", i + 1, m - i)));
            }
            if i + 1 < m && c[i + 1] + 1 < ci {
                return Err(Error::InvalidKupisch(format!("c_{} < c_{} - 1 in {c:?}", i + 2, i + 1)));
            }
        }
        Ok(Self(c))
    }

    /// The path algebra without relations, `[m, m-1, ..., 1]`.
    pub fn staircase(m: usize) -> Result<Self> {
        Self::new((1..=m).rev().collect())
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `P(i)` as an interval.
    pub fn projective(&self, i: usize) -> (usize, usize) {
        (i, i + self.0[i - 1] - 1)
    }

    /// `I(x)`: the longest interval `[i, x]` contained in some projective.
    pub fn injective(&self, x: usize) -> (usize, usize) {
        let i = (1..=x).find(|&i| i + self.0[i - 1] > x).expect("P(x) contains x");
        (i, x)
    }

    pub fn is_connected(&self) -> bool {
        self.0[..self.m() - 1].iter().all(|&c| c >= 2)
    }
}

impl FromStr for KupischSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("{t:?} is not a positive integer"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(c)
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Dyck path of half-length `m - 1`: the height reached by the `j`-th up step
/// is `c_{m-j} - 1`.
///
/// Only connected series (every `c_i >= 2` for `i < m`) have such a path.
pub fn dyck_from_kupisch(k: &KupischSeries) -> Result<DyckPath> {
    let c = k.entries();
    let m = c.len();
    if m < 2 || !k.is_connected() {
        return Err(Error::InvalidKupisch(format!("{k} is not the series of a connected algebra with m >= 2")));
    }
    let mut steps = Vec::with_capacity(2 * (m - 1));
    let mut height = 0usize;
    for j in 1..m {
        let target = c[m - j - 1] - 1;
        // target <= height + 1 by the Kupisch condition
        for _ in 0..(height + 1 - target) {
            steps.push(Step::D);
        }
        steps.push(Step::U);
        height = target;
    }
    steps.extend(std::iter::repeat(Step::D).take(height));
    DyckPath::new(steps)
}

/// Inverse of [`dyck_from_kupisch`].
pub fn kupisch_from_dyck(p: &DyckPath) -> Result<KupischSeries> {
    let mut heights = Vec::new();
    let mut h = 0usize;
    for &s in p.steps() {
        match s {
            Step::U => {
                h += 1;
                heights.push(h);
            }
            Step::D => h -= 1,
        }
    }
    let m = heights.len() + 1;
    let mut c = vec![1; m];
    for (j, &hj) in heights.iter().enumerate() {
        c[m - (j + 1) - 1] = hj + 1;
    }
    KupischSeries::new(c)
}

/// Bounds `m(i, j_i) = c_i` of the subcategory inside the linear-orientation category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NvSpec {
    pub n: usize,
    pub bounds: Vec<usize>,
}

impl NvSpec {
    pub fn from_kupisch(k: &KupischSeries) -> Self {
        Self { n: k.m() + 1, bounds: k.entries().to_vec() }
    }
}

/// Members `[i, r]` of `S(n)` with `i <= r <= i + bound_i - 1`.
pub fn nv_objects(spec: &NvSpec) -> Result<Vec<PeakPath>> {
    let mut out = Vec::new();
    for (k, &b) in spec.bounds.iter().enumerate() {
        let i = k + 1;
        if b == 0 || i + b - 1 > spec.n - 1 {
            return Err(Error::InvalidInput(format!("bound {b} at {i} leaves 1..={}", spec.n - 1)));
        }
        for r in i..i + b {
            out.push(PeakPath::new(spec.n, i, r)?);
        }
    }
    Ok(out)
}

pub(crate) fn nakayama_knit_input(k: &KupischSeries) -> KnitInput {
    let m = k.m();
    let projectives: Vec<_> = (1..=m).map(|i| k.projective(i)).collect();
    let radicals = projectives.iter().map(|&(l, r)| if r > l { vec![(l + 1, r)] } else { vec![] }).collect();
    let injectives = (1..=m).map(|x| k.injective(x)).collect();
    KnitInput { m, projectives, radicals, injectives }
}

/// AR quiver of the Nakayama algebra, knitted inside the linear-orientation category.
pub fn ar_quiver_nakayama(k: &KupischSeries) -> Result<ARQuiver> {
    let chain = AdmissibleSubchain::linear(k.m() + 1)?;
    let ar = ARQuiver::from_knitted(chain, knit(&nakayama_knit_input(k))?)?;
    if ar.vertices != nv_objects(&NvSpec::from_kupisch(k))? {
        return Err(Error::Internal(format!("knitting for {k} did not reach every object")));
    }
    Ok(ar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[usize]) -> KupischSeries {
        KupischSeries::new(c.to_vec()).unwrap()
    }

    #[test]
    fn validates_series() {
        assert!(KupischSeries::new(vec![3, 3, 2, 2, 1]).is_ok());
        assert!(KupischSeries::new(vec![1]).is_ok());
        assert!(KupischSeries::new(vec![3, 1, 1]).is_err());
        assert!(KupischSeries::new(vec![2, 2]).is_err());
        assert!(KupischSeries::new(vec![4, 3, 2]).is_err());
        assert_eq!("[3,3,2,2,1]".parse::<KupischSeries>().unwrap(), series(&[3, 3, 2, 2, 1]));
        assert!("3,x".parse::<KupischSeries>().is_err());
    }

    #[test]
    fn kupisch_path_round_trip() {
        let p = dyck_from_kupisch(&series(&[3, 3, 2, 2, 1])).unwrap();
        assert_eq!(p.to_string(), "UDUUDUDD");
        assert_eq!(kupisch_from_dyck(&p).unwrap(), series(&[3, 3, 2, 2, 1]));
        assert_eq!(dyck_from_kupisch(&series(&[2, 1])).unwrap().to_string(), "UD");
        assert_eq!(dyck_from_kupisch(&KupischSeries::staircase(5).unwrap()).unwrap().to_string(), "UUUUDDDD");
        assert!(dyck_from_kupisch(&series(&[1])).is_err());
        assert!(dyck_from_kupisch(&series(&[2, 1, 1])).is_err());
    }

    #[test]
    fn objects_and_quiver() {
        let k = series(&[3, 3, 2, 2, 1]);
        assert_eq!(nv_objects(&NvSpec::from_kupisch(&k)).unwrap().len(), 11);
        assert_eq!(ar_quiver_nakayama(&k).unwrap().vertices.len(), 11);
        let simples = series(&[1, 1, 1]);
        let objs = nv_objects(&NvSpec::from_kupisch(&simples)).unwrap();
        assert!(objs.iter().all(|y| y.l() == y.r()));
        let one = ar_quiver_nakayama(&series(&[1])).unwrap();
        assert_eq!(one.vertices.len(), 1);
        assert!(one.arrows.is_empty());
    }

    #[test]
    fn injectives() {
        let k = series(&[3, 3, 2, 2, 1]);
        let inj: Vec<_> = (1..=5).map(|x| k.injective(x)).collect();
        assert_eq!(inj, vec![(1, 1), (1, 2), (1, 3), (2, 4), (4, 5)]);
    }
}
