//! Snake graphs attached to admissible subchains, their perfect matchings, and
//! the words over the alphabet `H_n` read from labeled matchings.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::dyck::{DyckPath, PeakPath, Step};
use crate::error::{Error, Result};
use crate::subchain::AdmissibleSubchain;

pub type Point = (i32, i32);
/// An edge with its endpoints in increasing order.
pub type Edge = (Point, Point);

/// Placement of a tile relative to its predecessor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SnakeStep {
    RightOf,
    Above,
}

impl SnakeStep {
    pub fn turned(self) -> Self {
        match self {
            SnakeStep::RightOf => SnakeStep::Above,
            SnakeStep::Above => SnakeStep::RightOf,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            SnakeStep::RightOf => 'R',
            SnakeStep::Above => 'U',
        }
    }
}

impl Serialize for SnakeStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_char(self.as_char())
    }
}

/// A run of unit tiles. Sub-snakes keep the coordinates and tile numbers of their parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SnakeGraph {
    #[serde(skip)]
    origin: Point,
    #[serde(skip)]
    first: usize,
    steps: Vec<SnakeStep>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    S,
    N,
    W,
    E,
}

fn side_edge((x, y): Point, side: Side) -> Edge {
    match side {
        Side::S => ((x, y), (x + 1, y)),
        Side::N => ((x, y + 1), (x + 1, y + 1)),
        Side::W => ((x, y), (x, y + 1)),
        Side::E => ((x + 1, y), (x + 1, y + 1)),
    }
}

fn tile_edges(corner: Point) -> [Edge; 4] {
    [Side::S, Side::W, Side::E, Side::N].map(|s| side_edge(corner, s))
}

fn tile_vertices((x, y): Point) -> [Point; 4] {
    [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]
}

impl SnakeGraph {
    pub fn new(steps: Vec<SnakeStep>) -> Self {
        Self { origin: (0, 0), first: 1, steps }
    }

    pub fn steps(&self) -> &[SnakeStep] {
        &self.steps
    }

    /// Number of tiles.
    pub fn d(&self) -> usize {
        self.steps.len() + 1
    }

    /// Tile number of the first tile in the parent snake.
    pub fn first_tile(&self) -> usize {
        self.first
    }

    /// Lower-left corners of the tiles.
    pub fn tiles(&self) -> Vec<Point> {
        let mut corner = self.origin;
        let mut out = vec![corner];
        for s in &self.steps {
            match s {
                SnakeStep::RightOf => corner.0 += 1,
                SnakeStep::Above => corner.1 += 1,
            }
            out.push(corner);
        }
        out
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.tiles().into_iter().flat_map(tile_edges).collect()
    }

    pub fn vertices(&self) -> BTreeSet<Point> {
        self.tiles().into_iter().flat_map(tile_vertices).collect()
    }

    /// Tiles `l..=r` (1-based, relative to this snake).
    pub fn sub_snake(&self, l: usize, r: usize) -> Result<Self> {
        if l < 1 || l > r || r > self.d() {
            return Err(Error::InvalidInput(format!("tile range [{l},{r}] outside 1..={}", self.d())));
        }
        Ok(Self { origin: self.tiles()[l - 1], first: self.first + l - 1, steps: self.steps[l - 1..r - 1].to_vec() })
    }

    /// Consecutive tiles share exactly one edge, tiles two apart share no edge,
    /// tiles further apart share no vertex.
    pub fn is_valid(&self) -> bool {
        let tiles = self.tiles();
        for (a, &ta) in tiles.iter().enumerate() {
            for (b, &tb) in tiles.iter().enumerate().skip(a + 1) {
                let ea: BTreeSet<Edge> = tile_edges(ta).into_iter().collect();
                let shared_edges = tile_edges(tb).iter().filter(|e| ea.contains(e)).count();
                let va: BTreeSet<Point> = tile_vertices(ta).into_iter().collect();
                let shared_vertices = tile_vertices(tb).iter().filter(|v| va.contains(v)).count();
                let ok = match b - a {
                    1 => shared_edges == 1,
                    2 => shared_edges == 0,
                    _ => shared_vertices == 0,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Snake with `n - 1` tiles whose first step is `RightOf`.
pub fn snake_from_subchain(c: &AdmissibleSubchain) -> SnakeGraph {
    snake_from_subchain_with(c, SnakeStep::RightOf)
}

/// Snake with `n - 1` tiles: tiles `i - 1, i, i + 1` lie in a straight line
/// exactly when `i` belongs to the chain, for `1 < i < n - 1`.
pub fn snake_from_subchain_with(c: &AdmissibleSubchain, first: SnakeStep) -> SnakeGraph {
    let n = c.n();
    let mut steps = Vec::with_capacity(n.saturating_sub(2));
    for t in 0..n.saturating_sub(2) {
        let step = match steps.last() {
            None => first,
            Some(&prev) if c.contains(t + 1) => prev,
            Some(&prev) => SnakeStep::turned(prev),
        };
        steps.push(step);
    }
    SnakeGraph::new(steps)
}

/// A set of edges covering every vertex exactly once, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PerfectMatching {
    edges: Vec<Edge>,
}

impl PerfectMatching {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Self { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn is_matching_of(&self, g: &SnakeGraph) -> bool {
        let edges = g.edges();
        if !self.edges.iter().all(|e| edges.contains(e)) {
            return false;
        }
        let mut covered = BTreeMap::new();
        for &(a, b) in &self.edges {
            *covered.entry(a).or_insert(0) += 1;
            *covered.entry(b).or_insert(0) += 1;
        }
        let vertices = g.vertices();
        covered.len() == vertices.len() && vertices.iter().all(|v| covered.get(v) == Some(&1))
    }
}

/// All perfect matchings, sorted lexicographically by their sorted edge lists.
pub fn enumerate_matchings(g: &SnakeGraph) -> Vec<PerfectMatching> {
    let vertices: Vec<Point> = g.vertices().into_iter().collect();
    let mut incident: BTreeMap<Point, Vec<Edge>> = BTreeMap::new();
    for e in g.edges() {
        incident.entry(e.0).or_default().push(e);
        incident.entry(e.1).or_default().push(e);
    }
    let mut out = Vec::new();
    let mut matched = BTreeSet::new();
    let mut chosen = Vec::new();
    extend_matching(&vertices, &incident, &mut matched, &mut chosen, &mut out);
    out.sort();
    out
}

fn extend_matching(
    vertices: &[Point],
    incident: &BTreeMap<Point, Vec<Edge>>,
    matched: &mut BTreeSet<Point>,
    chosen: &mut Vec<Edge>,
    out: &mut Vec<PerfectMatching>,
) {
    let Some(&v) = vertices.iter().find(|v| !matched.contains(v)) else {
        out.push(PerfectMatching::new(chosen.clone()));
        return;
    };
    for &e in &incident[&v] {
        let w = if e.0 == v { e.1 } else { e.0 };
        if matched.contains(&w) {
            continue;
        }
        matched.insert(v);
        matched.insert(w);
        chosen.push(e);
        extend_matching(vertices, incident, matched, chosen, out);
        chosen.pop();
        matched.remove(&v);
        matched.remove(&w);
    }
}

/// Matching count by a tile-by-tile transfer over the states of the shared edge.
pub fn count_matchings_transfer(g: &SnakeGraph) -> u128 {
    let tiles = g.tiles();
    let d = tiles.len();
    let shared: Vec<BTreeSet<Point>> = (0..d - 1)
        .map(|t| {
            let next: BTreeSet<Point> = tile_vertices(tiles[t + 1]).into_iter().collect();
            tile_vertices(tiles[t]).into_iter().filter(|v| next.contains(v)).collect()
        })
        .collect();
    let mut owned: BTreeSet<Edge> = BTreeSet::new();
    // State: the already-covered endpoints of the shared edge.
    let mut states: HashMap<Vec<Point>, u128> = HashMap::from([(Vec::new(), 1)]);
    for t in 0..d {
        let fresh: Vec<Edge> = tile_edges(tiles[t]).into_iter().filter(|e| !owned.contains(e)).collect();
        owned.extend(fresh.iter().copied());
        let keep: BTreeSet<Point> = if t + 1 < d { shared[t].clone() } else { BTreeSet::new() };
        let mut next: HashMap<Vec<Point>, u128> = HashMap::new();
        for (covered, count) in &states {
            for mask in 0u32..(1 << fresh.len()) {
                let mut cov: BTreeSet<Point> = covered.iter().copied().collect();
                let ok = fresh
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .all(|(_, &(a, b))| cov.insert(a) && cov.insert(b));
                if !ok {
                    continue;
                }
                let retired_ok = tile_vertices(tiles[t]).iter().all(|v| keep.contains(v) || cov.contains(v));
                if !retired_ok {
                    continue;
                }
                let state: Vec<Point> = cov.into_iter().filter(|v| keep.contains(v)).collect();
                *next.entry(state).or_insert(0) += count;
            }
        }
        states = next;
    }
    states.get(&Vec::new()).copied().unwrap_or(0)
}

/// A letter of `H_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E,
    U1(usize),
    U2(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::E => write!(f, "E"),
            Letter::U1(i) => write!(f, "U1^{i}"),
            Letter::U2(i) => write!(f, "U2^{i}"),
        }
    }
}

/// The Dyck path of a letter: `U_1^i = U^{i+1} D^{i+1} (UD)^{n-i-1}`,
/// `U_2^i = (UD)^i U^{n-i} D^{n-i}`, `E_n = U^n D^n`.
pub fn letter_path(letter: Letter, n: usize) -> Result<DyckPath> {
    let check = |i: usize| -> Result<()> {
        if n < 3 || i < 1 || i > n - 2 {
            return Err(Error::InvalidInput(format!("{letter} is not a letter of H_{n}")));
        }
        Ok(())
    };
    let rep = |s: Step, k: usize| std::iter::repeat(s).take(k);
    let peaks = |k: usize| (0..k).flat_map(|_| [Step::U, Step::D]);
    let steps: Vec<Step> = match letter {
        Letter::E => {
            if n < 1 {
                return Err(Error::InvalidInput("E_n needs n >= 1".into()));
            }
            rep(Step::U, n).chain(rep(Step::D, n)).collect()
        }
        Letter::U1(i) => {
            check(i)?;
            rep(Step::U, i + 1).chain(rep(Step::D, i + 1)).chain(peaks(n - i - 1)).collect()
        }
        Letter::U2(i) => {
            check(i)?;
            peaks(i).chain(rep(Step::U, n - i)).chain(rep(Step::D, n - i)).collect()
        }
    };
    DyckPath::new(steps)
}

/// A word of length `n - 2` over `H_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HWord {
    n: usize,
    letters: Vec<Letter>,
}

impl HWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n < 3 || letters.len() != n - 2 {
            return Err(Error::InvalidInput(format!("a word over H_{n} has {} letters", n.saturating_sub(2))));
        }
        for (k, &l) in letters.iter().enumerate() {
            let pos = k + 1;
            if matches!(l, Letter::U1(i) | Letter::U2(i) if i != pos) {
                return Err(Error::InvalidInput(format!("letter {l} at position {pos}")));
            }
        }
        Ok(Self { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn paths(&self) -> Result<Vec<DyckPath>> {
        self.letters.iter().map(|&l| letter_path(l, self.n)).collect()
    }
}

impl fmt::Display for HWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

impl Serialize for HWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The full snake of a subchain with its `U_1^i` and `U_2^i` edge labels.
///
/// Tile `i` carries `U_2^{i-1}` on the side at its south-west corner that is
/// not glued to tile `i - 1`, and `U_1^i` on the side at its north-east corner
/// that is not glued to tile `i + 1`.
#[derive(Clone, Debug)]
pub struct LabeledSnake {
    n: usize,
    graph: SnakeGraph,
    labels: BTreeMap<Edge, Letter>,
}

impl LabeledSnake {
    pub fn new(c: &AdmissibleSubchain) -> Result<Self> {
        Self::with_first_step(c, SnakeStep::RightOf)
    }

    pub fn with_first_step(c: &AdmissibleSubchain, first: SnakeStep) -> Result<Self> {
        let n = c.n();
        if n < 3 {
            return Err(Error::InvalidInput(format!("words over H_n need n >= 3, got {n}")));
        }
        let graph = snake_from_subchain_with(c, first);
        let tiles = graph.tiles();
        let d = graph.d();
        let mut labels = BTreeMap::new();
        for i in 1..=d {
            let corner = tiles[i - 1];
            if i >= 2 {
                let side = match graph.steps[i - 2] {
                    SnakeStep::RightOf => Side::S,
                    SnakeStep::Above => Side::W,
                };
                labels.insert(side_edge(corner, side), Letter::U2(i - 1));
            }
            if i < d {
                let side = match graph.steps[i - 1] {
                    SnakeStep::RightOf => Side::N,
                    SnakeStep::Above => Side::E,
                };
                labels.insert(side_edge(corner, side), Letter::U1(i));
            }
        }
        Ok(Self { n, graph, labels })
    }

    pub fn graph(&self) -> &SnakeGraph {
        &self.graph
    }

    pub fn label(&self, e: &Edge) -> Option<Letter> {
        self.labels.get(e).copied()
    }

    /// Reads the labeled edges used by a matching of the snake or of one of its sub-snakes.
    pub fn read_word(&self, p: &PerfectMatching) -> Result<HWord> {
        let mut letters = vec![Letter::E; self.n - 2];
        for e in p.edges() {
            if let Some(l) = self.label(e) {
                let pos = match l {
                    Letter::U1(i) | Letter::U2(i) => i,
                    Letter::E => unreachable!("E is never stored as a label"),
                };
                if letters[pos - 1] != Letter::E {
                    return Err(Error::Internal(format!("two labeled edges at position {pos}")));
                }
                letters[pos - 1] = l;
            }
        }
        HWord::new(self.n, letters)
    }

    pub fn words(&self) -> Result<Vec<HWord>> {
        enumerate_matchings(&self.graph).iter().map(|p| self.read_word(p)).collect()
    }

    /// Words of the matchings of the sub-snake on the support of `y`.
    pub fn restricted_words(&self, y: &PeakPath) -> Result<Vec<HWord>> {
        if y.n() != self.n {
            return Err(Error::InvalidInput(format!("path {y} has n={}, snake has n={}", y.n(), self.n)));
        }
        let sub = self.graph.sub_snake(y.l(), y.r())?;
        let mut words = enumerate_matchings(&sub).iter().map(|p| self.read_word(p)).collect::<Result<Vec<_>>>()?;
        words.sort();
        words.dedup();
        Ok(words)
    }
}

/// The word of a matching of the full snake of `c`.
pub fn word_from_matching(p: &PerfectMatching, g: &SnakeGraph, c: &AdmissibleSubchain) -> Result<HWord> {
    let labeled = LabeledSnake::new(c)?;
    if labeled.graph() != g {
        return Err(Error::InvalidInput("snake graph does not belong to the subchain".into()));
    }
    if !p.is_matching_of(g) {
        return Err(Error::InvalidInput("edge set is not a perfect matching of the snake".into()));
    }
    labeled.read_word(p)
}

/// `X_C`: the words of all matchings of the snake of `c`, in matching order.
pub fn words_x_c(c: &AdmissibleSubchain) -> Result<Vec<HWord>> {
    LabeledSnake::new(c)?.words()
}

/// `[Y ∩ X_C]`: the words of the matchings of the sub-snake on the support of `y`.
pub fn restricted_words(y: &PeakPath, c: &AdmissibleSubchain) -> Result<Vec<HWord>> {
    LabeledSnake::new(c)?.restricted_words(y)
}

/// Adjacent letter pairs `(position, left, right)` occurring in `X_C`.
pub fn local_transitions(c: &AdmissibleSubchain) -> Result<BTreeSet<(usize, Letter, Letter)>> {
    Ok(words_x_c(c)?
        .iter()
        .flat_map(|w| w.letters().windows(2).enumerate().map(|(k, pair)| (k + 1, pair[0], pair[1])).collect::<Vec<_>>())
        .collect())
}
