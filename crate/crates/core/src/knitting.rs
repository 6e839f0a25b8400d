//! Knitting of Auslander-Reiten quivers for algebras whose indecomposables are
//! interval modules (hereditary type A and linear Nakayama algebras).

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A 1-based vertex interval `[l, r]`.
pub type Interval = (usize, usize);

/// The data knitting starts from.
#[derive(Clone, Debug)]
pub struct KnitInput {
    pub m: usize,
    /// `P(x)` for `x = 1..=m`.
    pub projectives: Vec<Interval>,
    /// Indecomposable summands of `rad P(x)`.
    pub radicals: Vec<Vec<Interval>>,
    pub injectives: Vec<Interval>,
}

/// An AR quiver on intervals: modules sorted by `(l, r)`, arrows and `tau` as index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Knitted {
    pub modules: Vec<Interval>,
    pub arrows: Vec<(usize, usize)>,
    /// `(M, tau M)` for every non-projective `M`.
    pub tau: Vec<(usize, usize)>,
}

struct Node {
    interval: Interval,
    preds: Option<Vec<usize>>,
    tau_inv: Option<usize>,
    processed: bool,
}

fn dims(m: usize, (l, r): Interval) -> Vec<i64> {
    (1..=m).map(|x| i64::from(l <= x && x <= r)).collect()
}

fn as_interval(v: &[i64]) -> Option<Interval> {
    let l = v.iter().position(|&d| d != 0)? + 1;
    let r = v.iter().rposition(|&d| d != 0)? + 1;
    let ok = v.iter().all(|&d| d == 0 || d == 1) && v[l - 1..r].iter().all(|&d| d == 1);
    ok.then_some((l, r))
}

pub fn knit(input: &KnitInput) -> Result<Knitted> {
    let m = input.m;
    let mut nodes: Vec<Node> = Vec::new();
    let mut index: BTreeMap<Interval, usize> = BTreeMap::new();
    for &p in &input.projectives {
        if index.insert(p, nodes.len()).is_some() {
            return Err(Error::Internal(format!("projective {p:?} listed twice")));
        }
        nodes.push(Node { interval: p, preds: None, tau_inv: None, processed: false });
    }
    let projective_of: BTreeMap<Interval, usize> = input.projectives.iter().enumerate().map(|(x, &p)| (p, x)).collect();
    let mut arrows = Vec::new();
    let mut tau = Vec::new();

    loop {
        // Predecessors of a projective are the summands of its radical, once they exist.
        for x in 0..m {
            let k = index[&input.projectives[x]];
            if nodes[k].preds.is_none() {
                let rad: Option<Vec<usize>> = input.radicals[x].iter().map(|i| index.get(i).copied()).collect();
                nodes[k].preds = rad;
            }
        }
        let ready = (0..nodes.len())
            .filter(|&k| !nodes[k].processed)
            .filter(|&k| nodes[k].preds.as_ref().is_some_and(|ps| ps.iter().all(|&p| nodes[p].processed)))
            .min_by_key(|&k| nodes[k].interval);
        let Some(k) = ready else {
            if nodes.iter().all(|node| node.processed) {
                break;
            }
            return Err(Error::Internal("knitting stalled before reaching every module".into()));
        };

        let here = nodes[k].interval;
        let mut succ: Vec<usize> =
            nodes[k].preds.clone().unwrap_or_default().into_iter().filter_map(|p| nodes[p].tau_inv).collect();
        for (x, rad) in input.radicals.iter().enumerate() {
            if rad.contains(&here) {
                succ.push(index[&input.projectives[x]]);
            }
        }
        arrows.extend(succ.iter().map(|&s| (k, s)));
        nodes[k].processed = true;

        if input.injectives.contains(&here) {
            continue;
        }
        let mut d = vec![0i64; m];
        for &s in &succ {
            d.iter_mut().zip(dims(m, nodes[s].interval)).for_each(|(a, b)| *a += b);
        }
        d.iter_mut().zip(dims(m, here)).for_each(|(a, b)| *a -= b);
        let next =
            as_interval(&d).ok_or_else(|| Error::Internal(format!("tau^-1 of {here:?} has dimension vector {d:?}")))?;
        if projective_of.contains_key(&next) || index.contains_key(&next) {
            return Err(Error::Internal(format!("tau^-1 of {here:?} collides with {next:?}")));
        }
        index.insert(next, nodes.len());
        nodes[k].tau_inv = Some(nodes.len());
        tau.push((nodes.len(), k));
        nodes.push(Node { interval: next, preds: Some(succ), tau_inv: None, processed: false });
    }

    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&k| nodes[k].interval);
    let mut rank = vec![0; nodes.len()];
    for (pos, &k) in order.iter().enumerate() {
        rank[k] = pos;
    }
    let mut arrows: Vec<(usize, usize)> = arrows.into_iter().map(|(a, b)| (rank[a], rank[b])).collect();
    arrows.sort_unstable();
    let mut tau: Vec<(usize, usize)> = tau.into_iter().map(|(a, b)| (rank[a], rank[b])).collect();
    tau.sort_unstable();
    Ok(Knitted { modules: order.iter().map(|&k| nodes[k].interval).collect(), arrows, tau })
}
