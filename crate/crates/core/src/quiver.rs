//! Type-A quivers and their representations, the functor to interval modules,
//! a brute-force Hom oracle and the Coxeter transformation.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::dyck::PeakPath;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::subchain::{AdmissibleSubchain, Role};

/// Direction of the arrow between vertices `k` and `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Dir {
    /// `k <- k + 1`
    Left,
    /// `k -> k + 1`
    Right,
}

/// An orientation of the Dynkin diagram `A_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverA {
    m: usize,
    orientation: Vec<Dir>,
}

impl QuiverA {
    pub fn new(orientation: Vec<Dir>) -> Self {
        Self { m: orientation.len() + 1, orientation }
    }

    pub fn linear(m: usize) -> Self {
        Self::new(vec![Dir::Right; m.saturating_sub(1)])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn orientation(&self) -> &[Dir] {
        &self.orientation
    }

    /// Arrows `(source, target)`, one per edge, in edge order.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        self.orientation
            .iter()
            .enumerate()
            .map(|(e, d)| match d {
                Dir::Right => (e + 1, e + 2),
                Dir::Left => (e + 2, e + 1),
            })
            .collect()
    }

    fn out_degree(&self, x: usize) -> usize {
        self.arrows().iter().filter(|a| a.0 == x).count()
    }

    fn in_degree(&self, x: usize) -> usize {
        self.arrows().iter().filter(|a| a.1 == x).count()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.m).filter(|&x| self.out_degree(x) == 0).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (1..=self.m).filter(|&x| self.in_degree(x) == 0).collect()
    }

    /// The interval of vertices reachable from `x`.
    pub fn reachable_from(&self, x: usize) -> (usize, usize) {
        let mut l = x;
        while l > 1 && self.orientation[l - 2] == Dir::Left {
            l -= 1;
        }
        let mut r = x;
        while r < self.m && self.orientation[r - 1] == Dir::Right {
            r += 1;
        }
        (l, r)
    }

    /// The interval of vertices from which `x` is reachable.
    pub fn reaching(&self, x: usize) -> (usize, usize) {
        let mut l = x;
        while l > 1 && self.orientation[l - 2] == Dir::Right {
            l -= 1;
        }
        let mut r = x;
        while r < self.m && self.orientation[r - 1] == Dir::Left {
            r += 1;
        }
        (l, r)
    }
}

/// The orientation induced by a subchain: inside each interval between
/// consecutive chain elements, arrows point toward the sink end.
pub fn quiver_from_subchain(c: &AdmissibleSubchain) -> QuiverA {
    let elems = c.elements();
    let orientation = (1..c.n() - 1)
        .map(|k| {
            let t = elems.iter().rposition(|&(x, _)| x <= k).expect("1 is a chain element");
            if elems[t].1 == Role::Sink {
                Dir::Left
            } else {
                Dir::Right
            }
        })
        .collect();
    QuiverA::new(orientation)
}

/// A representation with rational matrices, one per arrow in [`QuiverA::arrows`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepA {
    quiver: QuiverA,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl RepA {
    pub fn new(quiver: QuiverA, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.m() {
            return Err(Error::InvalidInput(format!("{} dimensions for {} vertices", dims.len(), quiver.m())));
        }
        let arrows = quiver.arrows();
        if maps.len() != arrows.len() {
            return Err(Error::InvalidInput(format!("{} maps for {} arrows", maps.len(), arrows.len())));
        }
        for (&(s, t), mat) in arrows.iter().zip(&maps) {
            let shape_ok = mat.len() == dims[t - 1] && mat.iter().all(|row| row.len() == dims[s - 1]);
            if !shape_ok {
                return Err(Error::InvalidInput(format!("map {s}->{t} has the wrong shape")));
            }
        }
        Ok(Self { quiver, dims, maps })
    }

    /// The interval module on `[l, r]` with identity maps inside the support.
    pub fn interval(quiver: &QuiverA, l: usize, r: usize) -> Result<Self> {
        if l < 1 || l > r || r > quiver.m() {
            return Err(Error::InvalidInput(format!("[{l},{r}] is not an interval in 1..={}", quiver.m())));
        }
        let dims: Vec<usize> = (1..=quiver.m()).map(|x| usize::from(l <= x && x <= r)).collect();
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let (ds, dt) = (dims[s - 1], dims[t - 1]);
                vec![vec![BigRational::one(); ds]; dt]
            })
            .collect();
        Self::new(quiver.clone(), dims, maps)
    }

    pub fn quiver(&self) -> &QuiverA {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
}

impl Serialize for RepA {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Arrow<'a>(usize, usize, &'a Matrix);
        impl Serialize for Arrow<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let matrix: Vec<Vec<String>> =
                    self.2.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
                let mut map = serializer.serialize_map(Some(3))?;
                map.serialize_entry("from", &self.0)?;
                map.serialize_entry("to", &self.1)?;
                map.serialize_entry("matrix", &matrix)?;
                map.end()
            }
        }
        struct Arrows<'a>(&'a RepA);
        impl Serialize for Arrows<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let arrows = self.0.quiver.arrows();
                let mut seq = serializer.serialize_seq(Some(arrows.len()))?;
                for (&(s, t), m) in arrows.iter().zip(&self.0.maps) {
                    seq.serialize_element(&Arrow(s, t, m))?;
                }
                seq.end()
            }
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("dims", &self.dims)?;
        map.serialize_entry("arrows", &Arrows(self))?;
        map.end()
    }
}

/// The interval module attached to a member of `S`.
pub fn theta(y: &PeakPath, c: &AdmissibleSubchain) -> Result<RepA> {
    if y.n() != c.n() {
        return Err(Error::InvalidInput(format!("path has n={}, subchain has n={}", y.n(), c.n())));
    }
    RepA::interval(&quiver_from_subchain(c), y.l(), y.r())
}

/// `[l, r]` when `dims` is the indicator vector of a nonempty interval.
pub fn interval_of(dims: &[usize]) -> Option<(usize, usize)> {
    let l = dims.iter().position(|&d| d != 0)? + 1;
    let r = dims.iter().rposition(|&d| d != 0)? + 1;
    dims[l - 1..r].iter().all(|&d| d == 1).then_some((l, r))
}

/// The member of `S` whose support is the interval indicated by `dims`.
pub fn theta_inverse(dims: &[usize], c: &AdmissibleSubchain) -> Result<PeakPath> {
    if dims.len() != c.n() - 1 {
        return Err(Error::InvalidInput(format!("{} dimensions for {} vertices", dims.len(), c.n() - 1)));
    }
    let (l, r) =
        interval_of(dims).ok_or_else(|| Error::InvalidInput(format!("{dims:?} is not an interval indicator")))?;
    PeakPath::new(c.n(), l, r)
}

/// `dim Hom(a, b)` from the linear system `f_t A_alpha = B_alpha f_s`, by exact rank.
pub fn hom_dim_bruteforce(a: &RepA, b: &RepA) -> Result<usize> {
    if a.quiver != b.quiver {
        return Err(Error::InvalidInput("representations live on different quivers".into()));
    }
    // Unknown f_v[p][q] for p < b.dims[v], q < a.dims[v].
    let mut offset = Vec::with_capacity(a.dims.len());
    let mut unknowns = 0;
    for (da, db) in a.dims.iter().zip(&b.dims) {
        offset.push(unknowns);
        unknowns += da * db;
    }
    let var = |v: usize, p: usize, q: usize| offset[v - 1] + p * a.dims[v - 1] + q;
    let mut rows: Matrix = Vec::new();
    for (k, &(s, t)) in a.quiver.arrows().iter().enumerate() {
        let (am, bm) = (&a.maps[k], &b.maps[k]);
        for p in 0..b.dims[t - 1] {
            for q in 0..a.dims[s - 1] {
                let mut row = vec![BigRational::zero(); unknowns];
                for r in 0..a.dims[t - 1] {
                    row[var(t, p, r)] += &am[r][q];
                }
                for r in 0..b.dims[s - 1] {
                    row[var(s, r, q)] -= &bm[p][r];
                }
                rows.push(row);
            }
        }
    }
    Ok(unknowns - linalg::rank(&rows))
}

/// Cartan matrix whose columns are the projective dimension vectors.
pub fn cartan_matrix(q: &QuiverA) -> Matrix {
    let m = q.m();
    let mut c = vec![vec![BigRational::zero(); m]; m];
    for x in 1..=m {
        let (l, r) = q.reachable_from(x);
        for row in c.iter_mut().take(r).skip(l - 1) {
            row[x - 1] = BigRational::one();
        }
    }
    c
}

/// Coxeter matrix `-C^T C^{-1}`, sending `dim M` to `dim tau M` for non-projective `M`.
pub fn coxeter_matrix(q: &QuiverA) -> Matrix {
    let c = cartan_matrix(q);
    let inv = linalg::inverse(&c).expect("Cartan matrix of a Dynkin quiver is unitriangular up to order");
    linalg::mul(&linalg::transpose(&c), &inv).into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect()
}

/// Result of applying the Coxeter transformation to an indecomposable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translate {
    Module(Vec<usize>),
    ProjectiveHit,
}

pub fn coxeter_translate(dims: &[usize], q: &QuiverA) -> Result<Translate> {
    if dims.len() != q.m() || interval_of(dims).is_none() {
        return Err(Error::InvalidInput(format!("{dims:?} is not an interval indicator on {} vertices", q.m())));
    }
    let phi = coxeter_matrix(q);
    let image: Vec<BigRational> = phi
        .iter()
        .map(|row| row.iter().zip(dims).fold(BigRational::zero(), |acc, (a, &d)| acc + a * linalg::rational(d as i64)))
        .collect();
    if image.iter().any(|x| x.is_negative()) {
        return Ok(Translate::ProjectiveHit);
    }
    let out: Vec<usize> = image
        .iter()
        .map(|x| {
            if x.is_zero() {
                0
            } else if x.is_one() {
                1
            } else {
                usize::MAX
            }
        })
        .collect();
    if interval_of(&out).is_none() {
        return Err(Error::Internal(format!("Coxeter image of {dims:?} is not an interval indicator")));
    }
    Ok(Translate::Module(out))
}

/// All interval modules, ordered by `(l, r)`.
pub fn indecomposables(q: &QuiverA) -> Vec<RepA> {
    let m = q.m();
    (1..=m)
        .flat_map(|l| (l..=m).map(move |r| (l, r)))
        .map(|(l, r)| RepA::interval(q, l, r).expect("valid interval"))
        .collect()
}
