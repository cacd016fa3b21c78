//! Uniform multi-hypergraphs, k-cuts and surplus accounting.
//!
//! A [`Hypergraph`] stores each distinct r-set once, sorted ascending, with an
//! integer multiplicity. Vertex ids are dense in `0..n`. The plain-text format
//! handled by [`Hypergraph::parse`] and [`Hypergraph::to_text`] is:
//!
//! ```text
//! # comment
//! r n
//! v1 v2 ... vr [multiplicity]
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::Ratio;

use crate::error::{input, Error, Result};
use crate::spectral::SymmetricMatrix;

/// Exact rational used for cut coefficients and surpluses.
pub type Rational = Ratio<i128>;

/// One stored hyperedge: a sorted vertex tuple and its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    vertices: Vec<usize>,
    multiplicity: u64,
}

impl Edge {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// An r-uniform multi-hypergraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Edge>,
    m: u64,
}

impl Hypergraph {
    pub const MAX_UNIFORMITY: usize = 6;

    /// Builds a hypergraph from `(vertex tuple, multiplicity)` pairs. Tuples are
    /// sorted and equal tuples merged by summing multiplicities.
    pub fn new<I, V>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (V, u64)>,
        V: AsRef<[usize]>,
    {
        if !(2..=Self::MAX_UNIFORMITY).contains(&r) {
            return input(format!("uniformity {r} outside supported range 2..={}", Self::MAX_UNIFORMITY));
        }
        let mut merged: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (tuple, mult) in edges {
            let key = validate_tuple(r, n, tuple.as_ref())?;
            if mult == 0 {
                return input(format!("edge {key:?} has multiplicity 0"));
            }
            *merged.entry(key).or_insert(0) += mult;
        }
        let edges: Vec<Edge> =
            merged.into_iter().map(|(vertices, multiplicity)| Edge { vertices, multiplicity }).collect();
        let m = edges.iter().map(|e| e.multiplicity).sum();
        Ok(Hypergraph { r, n, edges, m })
    }

    /// Builds a hypergraph where each listed tuple has multiplicity one.
    pub fn from_edges<I, V>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[usize]>,
    {
        Self::new(r, n, edges.into_iter().map(|e| (e, 1)))
    }

    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Self::new::<_, Vec<usize>>(r, n, std::iter::empty())
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.m
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Weighted degree of every vertex.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for e in &self.edges {
            for &v in &e.vertices {
                deg[v] += e.multiplicity;
            }
        }
        deg
    }

    /// For every vertex, the indices of the stored edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in &e.vertices {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Number of edges (with multiplicity) meeting every one of the `k` parts.
    pub fn cut_size(&self, assignment: &[usize], k: usize) -> Result<u64> {
        self.check_assignment(assignment, k)?;
        Ok(self.cut_size_unchecked(assignment, k))
    }

    pub(crate) fn check_assignment(&self, assignment: &[usize], k: usize) -> Result<()> {
        if !(1..=64).contains(&k) {
            return input(format!("part count {k} outside 1..=64"));
        }
        if assignment.len() != self.n {
            return input(format!("assignment has length {} but hypergraph has {} vertices", assignment.len(), self.n));
        }
        if let Some((v, &p)) = assignment.iter().enumerate().find(|(_, &p)| p >= k) {
            return input(format!("vertex {v} assigned to part {p}, expected < {k}"));
        }
        Ok(())
    }

    pub(crate) fn cut_size_unchecked(&self, assignment: &[usize], k: usize) -> u64 {
        let full = full_mask(k);
        self.edges
            .iter()
            .filter(|e| e.vertices.iter().fold(0u64, |acc, &v| acc | 1 << assignment[v]) == full)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// The underlying q-multigraph: every q-subset of every edge becomes an edge,
    /// inheriting the edge's multiplicity.
    pub fn underlying_multigraph(&self, q: usize) -> Result<Hypergraph> {
        if q < 2 || q >= self.r {
            return input(format!("q = {q} must satisfy 2 <= q < r = {}", self.r));
        }
        let mut merged: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for e in &self.edges {
            for sub in e.vertices.iter().copied().combinations(q) {
                *merged.entry(sub).or_insert(0) += e.multiplicity;
            }
        }
        Hypergraph::new(q, self.n, merged)
    }

    /// The pair multigraph of a 3-graph where the copy of `{u,v}` coming from
    /// `{u,v,w}` is colored `w`.
    pub fn colored_pair_graph(&self) -> Result<ColoredMultigraph> {
        if self.r != 3 {
            return input(format!("colored pair graph needs r = 3, got r = {}", self.r));
        }
        let mut edges = Vec::with_capacity(3 * self.edges.len());
        for e in &self.edges {
            let [a, b, c] = [e.vertices[0], e.vertices[1], e.vertices[2]];
            let mult = e.multiplicity;
            edges.push(ColoredEdge { u: a, v: b, color: c, multiplicity: mult });
            edges.push(ColoredEdge { u: a, v: c, color: b, multiplicity: mult });
            edges.push(ColoredEdge { u: b, v: c, color: a, multiplicity: mult });
        }
        ColoredMultigraph::new(self.n, edges)
    }

    /// Maximum degree and maximum co-degree over (r-1)-sets.
    pub fn degree_profile(&self) -> DegreeProfile {
        let max_degree = self.degrees().into_iter().max().unwrap_or(0);
        let mut codeg: HashMap<Vec<usize>, u64> = HashMap::new();
        for e in &self.edges {
            for sub in e.vertices.iter().copied().combinations(self.r - 1) {
                *codeg.entry(sub).or_insert(0) += e.multiplicity;
            }
        }
        DegreeProfile {
            max_degree,
            max_codegree: codeg.into_values().max().unwrap_or(0),
            edge_count: self.m,
            vertex_count: self.n,
        }
    }

    /// Subhypergraph induced by `vertices`, relabelled to `0..|vertices|` in
    /// ascending order of original id.
    pub fn induced_sub(&self, vertices: &[usize]) -> Result<InducedSub> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return input(format!("vertex {v} out of range 0..{}", self.n));
        }
        let original: Vec<usize> = vertices.iter().copied().sorted_unstable().dedup().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.vertices.iter().all(|&v| local[v] != usize::MAX))
            .map(|e| (e.vertices.iter().map(|&v| local[v]).collect::<Vec<_>>(), e.multiplicity));
        let graph = Hypergraph::new(self.r, original.len(), edges)?;
        Ok(InducedSub { graph, original })
    }

    /// Adjacency matrix of a multigraph (`r = 2`).
    pub fn adjacency(&self) -> Result<SymmetricMatrix> {
        if self.r != 2 {
            return input(format!("adjacency matrix needs r = 2, got r = {}", self.r));
        }
        let mut a = SymmetricMatrix::zeros(self.n);
        for e in &self.edges {
            a.set(e.vertices[0], e.vertices[1], e.multiplicity as f64);
        }
        Ok(a)
    }

    /// Parses the plain-text format. Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line, message };
            let nums: Vec<u64> = content
                .split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|_| parse_err(format!("not a non-negative integer: {t:?}"))))
                .collect::<Result<_>>()?;
            let Some((r, n)) = header else {
                if nums.len() != 2 {
                    return Err(parse_err(format!("header must be `r n`, found {} fields", nums.len())));
                }
                let (r, n) = (nums[0] as usize, nums[1] as usize);
                if !(2..=Self::MAX_UNIFORMITY).contains(&r) {
                    return Err(parse_err(format!("uniformity {r} outside 2..={}", Self::MAX_UNIFORMITY)));
                }
                header = Some((r, n));
                continue;
            };
            if nums.len() != r && nums.len() != r + 1 {
                return Err(parse_err(format!(
                    "expected {r} vertices and an optional multiplicity, found {} fields",
                    nums.len()
                )));
            }
            let tuple: Vec<usize> = nums[..r].iter().map(|&v| v as usize).collect();
            let mult = nums.get(r).copied().unwrap_or(1);
            if mult == 0 {
                return Err(parse_err("multiplicity must be positive".into()));
            }
            let key = validate_tuple(r, n, &tuple).map_err(|e| match e {
                Error::Input(message) => parse_err(message),
                other => other,
            })?;
            *edges.entry(key).or_insert(0) += mult;
        }
        let Some((r, n)) = header else {
            return Err(Error::Parse { line: text.lines().count().max(1), message: "missing `r n` header".into() });
        };
        Hypergraph::new(r, n, edges)
    }

    /// Canonical text form: header then edges in sorted order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.r, self.n);
        for e in &self.edges {
            out.push_str(&e.vertices.iter().join(" "));
            if e.multiplicity != 1 {
                out.push_str(&format!(" {}", e.multiplicity));
            }
            out.push('\n');
        }
        out
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hypergraph::parse(s)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn validate_tuple(r: usize, n: usize, tuple: &[usize]) -> Result<Vec<usize>> {
    if tuple.len() != r {
        return input(format!("edge {tuple:?} has {} vertices, expected {r}", tuple.len()));
    }
    if let Some(&v) = tuple.iter().find(|&&v| v >= n) {
        return input(format!("vertex {v} out of range 0..{n}"));
    }
    let mut key = tuple.to_vec();
    key.sort_unstable();
    if key.windows(2).any(|w| w[0] == w[1]) {
        return input(format!("edge {tuple:?} repeats a vertex"));
    }
    Ok(key)
}

pub(crate) fn full_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Result of [`Hypergraph::induced_sub`]: the relabelled subhypergraph and the
/// original id of each local vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSub {
    pub graph: Hypergraph,
    pub original: Vec<usize>,
}

/// Maximum degree Δ and co-degree D of a hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max_degree: u64,
    pub max_codegree: u64,
    pub edge_count: u64,
    pub vertex_count: usize,
}

/// A pair edge carrying the id of the vertex that was removed to create it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
    pub multiplicity: u64,
}

/// Edge-colored pair multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredMultigraph {
    n: usize,
    edges: Vec<ColoredEdge>,
}

impl ColoredMultigraph {
    pub fn new(n: usize, edges: Vec<ColoredEdge>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for e in edges {
            if e.u == e.v {
                return input(format!("colored edge ({}, {}) is a loop", e.u, e.v));
            }
            if e.u >= n || e.v >= n || e.color >= n {
                return input(format!("colored edge ({}, {}, color {}) out of range 0..{n}", e.u, e.v, e.color));
            }
            if e.multiplicity == 0 {
                return input("colored edge with multiplicity 0");
            }
            let (u, v) = if e.u < e.v { (e.u, e.v) } else { (e.v, e.u) };
            out.push(ColoredEdge { u, v, ..e });
        }
        Ok(ColoredMultigraph { n, edges: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.iter().map(|e| e.multiplicity).sum()
    }

    /// Distinct colors in ascending order.
    pub fn colors(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.color).sorted_unstable().dedup().collect()
    }

    pub fn max_degree(&self) -> u64 {
        let mut deg = vec![0u64; self.n];
        for e in &self.edges {
            deg[e.u] += e.multiplicity;
            deg[e.v] += e.multiplicity;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Largest number of edges of a single color at a single vertex.
    pub fn max_color_degree(&self) -> u64 {
        let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
        for e in &self.edges {
            *counts.entry((e.u, e.color)).or_insert(0) += e.multiplicity;
            *counts.entry((e.v, e.color)).or_insert(0) += e.multiplicity;
        }
        counts.into_values().max().unwrap_or(0)
    }

    pub fn adjacency(&self) -> SymmetricMatrix {
        self.adjacency_where(|_| true)
    }

    /// Adjacency matrix restricted to edges whose color satisfies `keep`.
    pub fn adjacency_where(&self, mut keep: impl FnMut(usize) -> bool) -> SymmetricMatrix {
        let mut a = SymmetricMatrix::zeros(self.n);
        for e in self.edges.iter().filter(|e| keep(e.color)) {
            a.add_sym(e.u, e.v, e.multiplicity as f64);
        }
        a
    }
}

fn stirling2(n: usize, k: usize) -> i128 {
    let mut row = vec![0i128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as i128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

pub(crate) fn coefficient_unchecked(r: usize, k: usize) -> Rational {
    let factorial: i128 = (1..=k as i128).product();
    Ratio::new(stirling2(r, k) * factorial, (k as i128).pow(r as u32))
}

/// Expected fraction of edges cut by a uniformly random k-partition of an
/// r-graph: `S(r,k) k! / k^r`.
pub fn random_cut_coefficient(r: usize, k: usize) -> Result<Rational> {
    if k < 2 || k > r {
        return input(format!("need 2 <= k <= r, got r = {r}, k = {k}"));
    }
    Ok(coefficient_unchecked(r, k))
}

/// A k-partition of the vertex set with its cut value and surplus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KCut {
    k: usize,
    assignment: Vec<usize>,
    cut_value: u64,
    surplus: Rational,
}

impl KCut {
    /// Evaluates `assignment` against `h`.
    pub fn evaluate(h: &Hypergraph, assignment: Vec<usize>, k: usize) -> Result<KCut> {
        h.check_assignment(&assignment, k)?;
        Ok(Self::evaluate_unchecked(h, assignment, k))
    }

    pub(crate) fn evaluate_unchecked(h: &Hypergraph, assignment: Vec<usize>, k: usize) -> KCut {
        let cut_value = h.cut_size_unchecked(&assignment, k);
        let surplus = Rational::from_integer(cut_value as i128)
            - coefficient_unchecked(h.r, k) * Rational::from_integer(h.m as i128);
        KCut { k, assignment, cut_value, surplus }
    }

    /// Every vertex in part 0.
    pub fn trivial(h: &Hypergraph, k: usize) -> Result<KCut> {
        Self::evaluate(h, vec![0; h.vertex_count()], k)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn into_assignment(self) -> Vec<usize> {
        self.assignment
    }

    pub fn cut_value(&self) -> u64 {
        self.cut_value
    }

    pub fn surplus(&self) -> Rational {
        self.surplus
    }

    pub fn surplus_f64(&self) -> f64 {
        *self.surplus.numer() as f64 / *self.surplus.denom() as f64
    }

    /// Vertices of each part.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.k];
        for (v, &p) in self.assignment.iter().enumerate() {
            parts[p].push(v);
        }
        parts
    }

    /// Larger cut value wins; ties go to the lexicographically smaller assignment.
    pub fn is_better_than(&self, other: &KCut) -> bool {
        self.cut_value > other.cut_value || (self.cut_value == other.cut_value && self.assignment < other.assignment)
    }

    pub(crate) fn best(a: KCut, b: KCut) -> KCut {
        if b.is_better_than(&a) {
            b
        } else {
            a
        }
    }
}

/// `cut value - S(r,k) k!/k^r * m`; rejects cuts whose stored value does not
/// match `h`.
pub fn surplus_of_cut(h: &Hypergraph, cut: &KCut) -> Result<Rational> {
    h.check_assignment(&cut.assignment, cut.k)?;
    let value = h.cut_size_unchecked(&cut.assignment, cut.k);
    if value != cut.cut_value {
        return input(format!("cut records value {} but evaluates to {value}", cut.cut_value));
    }
    Ok(Rational::from_integer(value as i128) - coefficient_unchecked(h.r, cut.k) * Rational::from_integer(h.m as i128))
}
