//! The category on `S` attached to an admissible subchain: elementary shifts,
//! the Hom criterion, distinguished objects and the AR quiver.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::dyck::{enumerate_s, support, unitary_shift, PeakPath};
use crate::error::{Error, Result};
use crate::knitting::{knit, KnitInput, Knitted};
use crate::quiver::{quiver_from_subchain, Dir, QuiverA};
use crate::subchain::{AdmissibleSubchain, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftKind {
    Left,
    Right,
}

/// An elementary shift between members of `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ShiftArrow {
    pub source: PeakPath,
    pub target: PeakPath,
    pub kind: ShiftKind,
    /// Unitary-shift indices, applied in order.
    pub composition: Vec<usize>,
}

fn check_index(x: usize, c: &AdmissibleSubchain) -> Result<()> {
    if x < 1 || x > c.n() - 1 {
        return Err(Error::IndexOutOfRange { index: x, max: c.n() - 1 });
    }
    Ok(())
}

fn check_member(y: &PeakPath, c: &AdmissibleSubchain) -> Result<()> {
    if y.n() != c.n() {
        return Err(Error::InvalidInput(format!("path {y} has n={}, subchain has n={}", y.n(), c.n())));
    }
    Ok(())
}

pub fn simple(x: usize, c: &AdmissibleSubchain) -> Result<PeakPath> {
    check_index(x, c)?;
    PeakPath::new(c.n(), x, x)
}

pub fn projective(x: usize, c: &AdmissibleSubchain) -> Result<PeakPath> {
    check_index(x, c)?;
    let (l, r) = quiver_from_subchain(c).reachable_from(x);
    PeakPath::new(c.n(), l, r)
}

pub fn injective(x: usize, c: &AdmissibleSubchain) -> Result<PeakPath> {
    check_index(x, c)?;
    let (l, r) = quiver_from_subchain(c).reaching(x);
    PeakPath::new(c.n(), l, r)
}

/// Decides `Hom(y1, y2) != 0` from the supports alone.
///
/// On each interval between consecutive chain elements that meets both
/// supports, the first and last support indices must increase toward the sink
/// end when the left endpoint is a sink, and decrease when it is a source.
pub fn hom_nonzero(y1: &PeakPath, y2: &PeakPath, c: &AdmissibleSubchain) -> Result<bool> {
    check_member(y1, c)?;
    check_member(y2, c)?;
    if y1.l().max(y2.l()) > y1.r().min(y2.r()) {
        return Ok(false);
    }
    for w in c.elements().windows(2) {
        let ((a, role), (b, _)) = (w[0], w[1]);
        if y1.l().max(y2.l()).max(a) > y1.r().min(y2.r()).min(b) {
            continue;
        }
        let (p1, b1) = (y1.l().max(a), y1.r().min(b));
        let (p2, b2) = (y2.l().max(a), y2.r().min(b));
        let ok = match role {
            Role::Sink => p1 <= p2 && b1 <= b2,
            Role::Source => p1 >= p2 && b1 >= b2,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elementary shifts out of `y` that stay in `S`.
///
/// At each end of the support a hook is added when the boundary arrow points
/// into the support; otherwise a cohook is removed from that end.
pub fn es_successors(y: &PeakPath, c: &AdmissibleSubchain) -> Result<Vec<ShiftArrow>> {
    check_member(y, c)?;
    let q = quiver_from_subchain(c);
    let m = q.m();
    let o = q.orientation();
    // o[k - 1] is the arrow between k and k + 1.
    let edge = |k: usize| o[k - 1];
    let (l, r) = (y.l(), y.r());
    let mut targets = Vec::new();

    let left = if l > 1 && edge(l - 1) == Dir::Right {
        let mut nl = l - 1;
        while nl > 1 && edge(nl - 1) == Dir::Left {
            nl -= 1;
        }
        Some((nl, r))
    } else {
        (l..r).find(|&k| edge(k) == Dir::Left).map(|k| (k + 1, r))
    };
    if let Some(t) = left {
        targets.push((ShiftKind::Left, t));
    }

    let right = if r < m && edge(r) == Dir::Left {
        let mut nr = r + 1;
        while nr < m && edge(nr) == Dir::Right {
            nr += 1;
        }
        Some((l, nr))
    } else {
        (l..r).rev().find(|&k| edge(k) == Dir::Right).map(|k| (l, k))
    };
    if let Some(t) = right {
        targets.push((ShiftKind::Right, t));
    }

    let source_support = support(&y.pair_form());
    targets
        .into_iter()
        .map(|(kind, (tl, tr))| {
            let target = PeakPath::new(c.n(), tl, tr)?;
            let target_support = support(&target.pair_form());
            let composition: Vec<usize> =
                (1..c.n()).filter(|i| source_support.contains(i) != target_support.contains(i)).collect();
            let mut pf = y.pair_form();
            for &i in &composition {
                pf = unitary_shift(&pf, i)?;
            }
            if pf != target.pair_form() {
                return Err(Error::Internal(format!("shift composition from {y} misses {target}")));
            }
            Ok(ShiftArrow { source: *y, target, kind, composition })
        })
        .collect()
}

/// The AR quiver of the category attached to a subchain, on `enumerate_s(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARQuiver {
    pub subchain: AdmissibleSubchain,
    pub vertices: Vec<PeakPath>,
    pub arrows: Vec<(usize, usize)>,
    /// `(v, w)` with `tau(v) = w`.
    pub translate: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct ARQuiverJson<'a> {
    n: usize,
    sinks: &'a [usize],
    sources: &'a [usize],
    vertices: &'a [PeakPath],
    arrows: &'a [(usize, usize)],
    tau: &'a [(usize, usize)],
}

impl Serialize for ARQuiver {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ARQuiverJson {
            n: self.subchain.n(),
            sinks: self.subchain.sinks(),
            sources: self.subchain.sources(),
            vertices: &self.vertices,
            arrows: &self.arrows,
            tau: &self.translate,
        }
        .serialize(serializer)
    }
}

impl ARQuiver {
    pub(crate) fn from_knitted(subchain: AdmissibleSubchain, k: Knitted) -> Result<Self> {
        let n = subchain.n();
        let vertices = k.modules.iter().map(|&(l, r)| PeakPath::new(n, l, r)).collect::<Result<Vec<_>>>()?;
        Ok(Self { subchain, vertices, arrows: k.arrows, translate: k.tau })
    }

    pub fn index_of(&self, y: &PeakPath) -> Option<usize> {
        self.vertices.iter().position(|v| v == y)
    }

    pub fn tau(&self, v: usize) -> Option<usize> {
        self.translate.iter().find(|&&(a, _)| a == v).map(|&(_, b)| b)
    }

    /// Vertices without a translate.
    pub fn projectives(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.tau(v).is_none()).collect()
    }

    /// Vertices that are not the translate of anything.
    pub fn injectives(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| !self.translate.iter().any(|&(_, b)| b == v)).collect()
    }

    pub fn successors(&self, v: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.0 == v).map(|a| a.1).collect()
    }

    pub fn predecessors(&self, v: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.1 == v).map(|a| a.0).collect()
    }

    /// For every non-projective `M`, arrows into `M` start where arrows out of `tau M` end.
    pub fn meshes_commute(&self) -> bool {
        self.translate.iter().all(|&(v, t)| {
            let mut into = self.predecessors(v);
            let mut out = self.successors(t);
            into.sort_unstable();
            out.sort_unstable();
            into == out
        })
    }

    /// Topological sort of the arrow relation succeeds.
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, b) in &self.arrows {
            indeg[b] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for w in self.successors(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == n
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in &self.arrows {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in adj.get(&v).into_iter().flatten() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz rendering; `tau` edges are dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{v}\"];");
        }
        for &(a, b) in &self.arrows {
            let _ = writeln!(out, "  v{a} -> v{b};");
        }
        for &(v, t) in &self.translate {
            let _ = writeln!(out, "  v{v} -> v{t} [style=dashed, constraint=false];");
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn hereditary_knit_input(q: &QuiverA) -> KnitInput {
    let m = q.m();
    let projectives: Vec<_> = (1..=m).map(|x| q.reachable_from(x)).collect();
    let radicals = (1..=m)
        .map(|x| q.arrows().into_iter().filter(|&(s, _)| s == x).map(|(_, t)| projectives[t - 1]).collect())
        .collect();
    let injectives = (1..=m).map(|x| q.reaching(x)).collect();
    KnitInput { m, projectives, radicals, injectives }
}

/// AR quiver by knitting from the projectives.
pub fn ar_quiver(c: &AdmissibleSubchain) -> Result<ARQuiver> {
    let q = quiver_from_subchain(c);
    let knitted = knit(&hereditary_knit_input(&q))?;
    let ar = ARQuiver::from_knitted(c.clone(), knitted)?;
    if ar.vertices != enumerate_s(c.n())? {
        return Err(Error::Internal(format!("knitting for {c} did not reach every member of S")));
    }
    Ok(ar)
}

pub fn connected(c: &AdmissibleSubchain) -> Result<bool> {
    Ok(ar_quiver(c)?.is_connected())
}
