//! Generators for the extremal one-realizations of a target set.
//!
//! Every vertex is a coordinate tuple of dimension `s = |S|`. With
//! `S = {n1 > ... > ns}` the vertex set `X` consists of
//!
//! * the diagonals `(i, .., i)` for `i` in `1..ns`,
//! * for each level `t` in `2..=s` and row `j` in `n_t..n_{t-1}` the pair
//!   `(j, .., j, n_t, .., n_s)` ("tail") and `(j, .., j, 1, .., 1)` ("ones"),
//!   with `t - 1` leading copies of `j`,
//! * the special vertex `(n1, .., ns)`.
//!
//! Vertices are listed in exactly that order, with levels descending from
//! `t = s` and rows ascending, tail before ones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::hypergraph::{Edge, EdgeKind, MixedHypergraph, Vertex};
use crate::spec_set::SpecSet;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// All D-pairs and C-triples allowed by the coordinate rules.
    Full,
    /// `Full` without `(n2, 1, .., 1)`; needs `n1 - 1` in `S`.
    FullG,
    /// Minimum number of D-edges.
    DMin,
    /// Minimum number of C-edges.
    CMin,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Full, Variant::FullG, Variant::DMin, Variant::CMin];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::FullG => "full-g",
            Variant::DMin => "d-min",
            Variant::CMin => "c-min",
        }
    }

    pub fn from_name(name: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == name)
    }

    pub fn applies_to(self, spec: &SpecSet) -> bool {
        self != Variant::FullG || spec.has_consecutive_top()
    }
}

/// Which recipe `build(S, CMin)` follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CMinCase {
    /// `n1 - 1` and `ns + 1` both outside `S`: `(X, C*, D)`.
    Star,
    /// Only `n1 - 1` in `S`: restrict to `X''`, then add `e1`.
    StarWithoutTopOnes,
    /// Only `ns + 1` in `S`: build over `S` minus `n_{s-1}`, then drop `e2`.
    Reduced,
    /// Both in `S`, `s >= 3`: the reduced recipe restricted, then add `e3`.
    ReducedWithoutTopOnes,
    /// `S = {m + 1, m}`: the D-minimal construction, which has no C-edges.
    DMinFallback,
}

impl CMinCase {
    pub fn of(spec: &SpecSet) -> CMinCase {
        match (spec.has_consecutive_top(), spec.has_consecutive_bottom()) {
            (false, false) => CMinCase::Star,
            (true, false) => CMinCase::StarWithoutTopOnes,
            (false, true) => CMinCase::Reduced,
            (true, true) if spec.len() >= 3 => CMinCase::ReducedWithoutTopOnes,
            (true, true) => CMinCase::DMinFallback,
        }
    }

    /// The target set whose coordinates label the construction's vertices.
    pub fn coordinate_spec(self, spec: &SpecSet) -> SpecSet {
        match self {
            CMinCase::Reduced | CMinCase::ReducedWithoutTopOnes => reduced_spec(spec),
            _ => spec.clone(),
        }
    }
}

/// `S` without `n_{s-1}`.
fn reduced_spec(spec: &SpecSet) -> SpecSet {
    spec.without(spec.len() - 1).expect("reduced spec needs s >= 2")
}

fn diagonal(spec: &SpecSet, i: u32) -> Vec<u32> {
    alloc::vec![i; spec.len()]
}

/// `(j, .., j, n_t, .., n_s)` with `t - 1` copies of `j`.
fn tail(spec: &SpecSet, t: usize, j: u32) -> Vec<u32> {
    let mut v = alloc::vec![j; t - 1];
    v.extend_from_slice(&spec.values()[t - 1..]);
    v
}

/// `(j, .., j, 1, .., 1)` with `t - 1` copies of `j`.
fn ones(spec: &SpecSet, t: usize, j: u32) -> Vec<u32> {
    let mut v = alloc::vec![j; t - 1];
    v.resize(spec.len(), 1);
    v
}

fn special(spec: &SpecSet) -> Vec<u32> {
    spec.values().to_vec()
}

/// The level `t` whose rows `n_t..n_{t-1}` contain `j`.
fn level_of_row(spec: &SpecSet, j: u32) -> Option<usize> {
    (2..=spec.len()).find(|&t| spec.n(t) <= j && j < spec.n(t - 1))
}

/// Vertex set of `S` in canonical order. Its size is `2 n1 - ns`.
pub fn vertex_set(spec: &SpecSet) -> Vec<Vertex> {
    let s = spec.len();
    let mut out: Vec<Vertex> = (1..spec.smallest()).map(|i| Vertex(diagonal(spec, i))).collect();
    for t in (2..=s).rev() {
        for j in spec.n(t)..spec.n(t - 1) {
            out.push(Vertex(tail(spec, t, j)));
            out.push(Vertex(ones(spec, t, j)));
        }
    }
    out.push(Vertex(special(spec)));
    out
}

struct Indexer {
    index: BTreeMap<Vec<u32>, usize>,
}

impl Indexer {
    fn new(vertices: &[Vertex]) -> Self {
        Indexer { index: vertices.iter().enumerate().map(|(i, v)| (v.0.clone(), i)).collect() }
    }

    fn get(&self, v: &[u32]) -> Result<usize> {
        self.index.get(v).copied().ok_or_else(|| Error::MissingVertex(v.to_vec()))
    }

    fn edge(&self, vs: &[Vec<u32>]) -> Result<Edge> {
        let idx = vs.iter().map(|v| self.get(v)).collect::<Result<Vec<_>>>()?;
        Edge::new(idx).map_err(|_| Error::CollapsedPattern(vs.to_vec()))
    }
}

/// Two vertices differ in every coordinate.
pub fn is_full_d_pair(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a != b)
}

/// Three vertices take exactly two distinct values in every coordinate.
pub fn is_full_c_triple(x: &[u32], y: &[u32], z: &[u32]) -> bool {
    x.iter().zip(y).zip(z).all(|((a, b), c)| {
        let distinct = 1 + usize::from(b != a) + usize::from(c != a && c != b);
        distinct == 2
    })
}

fn full_d_edges_of(vertices: &[Vertex]) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if is_full_d_pair(&vertices[a].0, &vertices[b].0) {
                out.insert(Edge::new([a, b]).expect("distinct"));
            }
        }
    }
    out
}

fn full_c_edges_of(vertices: &[Vertex]) -> BTreeSet<Edge> {
    let n = vertices.len();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if is_full_c_triple(&vertices[a].0, &vertices[b].0, &vertices[c].0) {
                    out.insert(Edge::new([a, b, c]).expect("distinct"));
                }
            }
        }
    }
    out
}

/// All pairs of `vertex_set(S)` differing in every coordinate.
pub fn full_d_edges(spec: &SpecSet) -> BTreeSet<Edge> {
    full_d_edges_of(&vertex_set(spec))
}

/// All triples of `vertex_set(S)` with exactly two values per coordinate.
pub fn full_c_edges(spec: &SpecSet) -> BTreeSet<Edge> {
    full_c_edges_of(&vertex_set(spec))
}

fn check_count(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::CountMismatch { what, expected, found })
    }
}

/// The `n1 (n1 - 1) / 2` D-pairs of the D-minimal construction:
/// all pairs of diagonals, every diagonal with every vertex ending in `ns`,
/// and every ones-vertex `x` with every `y` ending in `ns` such that
/// `x_i < y_i` on the first `s - 1` coordinates.
pub fn d_star_edges(spec: &SpecSet) -> Result<BTreeSet<Edge>> {
    let vertices = vertex_set(spec);
    let s = spec.len();
    let ns = spec.smallest();
    let is_diag = |v: &Vertex| v.0.iter().all(|&c| c == v.0[0]) && v.0[0] < ns;
    let ends_in_ns = |v: &Vertex| v.0[s - 1] == ns;
    let mut out = BTreeSet::new();
    for a in 0..vertices.len() {
        for b in 0..vertices.len() {
            if a == b {
                continue;
            }
            let (x, y) = (&vertices[a], &vertices[b]);
            let keep = (is_diag(x) && is_diag(y))
                || (is_diag(x) && ends_in_ns(y))
                || (!is_diag(x)
                    && x.0[s - 1] == 1
                    && ends_in_ns(y)
                    && x.0[..s - 1].iter().zip(&y.0[..s - 1]).all(|(p, q)| p < q));
            if keep {
                out.insert(Edge::new([a, b]).expect("distinct"));
            }
        }
    }
    let n1 = spec.largest() as usize;
    check_count("D*-edges", n1 * (n1 - 1) / 2, out.len())?;
    Ok(out)
}

/// The `2 n1 - 2 ns` C-triples of the C-minimal construction. For each
/// level `t`: `{tail(j), ones(j), ones(j - 1)}` for rows above `n_t`,
/// `{ones(j), tail(j), tail(j + 1)}` for every row, and
/// `{tail(n_t), ones(n_t), (1, .., 1)}`.
pub fn c_star_edges(spec: &SpecSet) -> Result<BTreeSet<Edge>> {
    let vertices = vertex_set(spec);
    let ix = Indexer::new(&vertices);
    let mut out = BTreeSet::new();
    for t in 2..=spec.len() {
        let (lo, hi) = (spec.n(t), spec.n(t - 1));
        for j in lo + 1..hi {
            out.insert(ix.edge(&[tail(spec, t, j), ones(spec, t, j), ones(spec, t, j - 1)])?);
        }
        for j in lo..hi {
            out.insert(ix.edge(&[ones(spec, t, j), tail(spec, t, j), tail(spec, t, j + 1)])?);
        }
        out.insert(ix.edge(&[tail(spec, t, lo), ones(spec, t, lo), diagonal(spec, 1)])?);
    }
    let expected = 2 * (spec.largest() - spec.smallest()) as usize;
    check_count("C*-edges", expected, out.len())?;
    Ok(out)
}

/// The partition of `vertices` by their `i`-th coordinate (1-based).
pub fn canonical_coloring(vertices: &[Vertex], i: usize) -> Result<Coloring> {
    let dimension = vertices.iter().map(Vertex::dimension).min().unwrap_or(0);
    if i == 0 || (i > dimension && !vertices.is_empty()) {
        return Err(Error::CoordinateOutOfRange { index: i, dimension });
    }
    let labels: Vec<u32> = vertices.iter().map(|v| v.0[i - 1]).collect();
    Ok(Coloring::from_labels(&labels))
}

/// All coordinate projections of a labelled hypergraph, one per coordinate.
pub fn canonical_colorings(h: &MixedHypergraph) -> Vec<Coloring> {
    match (h.labels(), h.dimension()) {
        (Some(labels), Some(d)) => {
            (1..=d).map(|i| canonical_coloring(labels, i).expect("in range")).collect()
        }
        _ => Vec::new(),
    }
}

/// `H[keep]`.
pub fn derived_subhypergraph(h: &MixedHypergraph, keep: &BTreeSet<usize>) -> Result<MixedHypergraph> {
    h.derived(keep)
}

/// Minimum vertex count of a one-realization of `S`.
pub fn delta(spec: &SpecSet) -> usize {
    let v = (2 * spec.largest() - spec.smallest()) as usize;
    v - usize::from(spec.has_consecutive_top())
}

/// Minimum D-edge count of a one-realization of `S`.
pub fn delta_d(spec: &SpecSet) -> usize {
    let n1 = spec.largest() as usize;
    n1 * (n1 - 1) / 2 - usize::from(spec.has_consecutive_top())
}

/// Minimum C-edge count of a one-realization of `S`.
pub fn delta_c(spec: &SpecSet) -> usize {
    let base = 2 * (spec.largest() - spec.smallest()) as usize;
    base - usize::from(spec.has_consecutive_top()) - usize::from(spec.has_consecutive_bottom())
}

fn assemble(vertices: Vec<Vertex>, c: BTreeSet<Edge>, d: BTreeSet<Edge>) -> MixedHypergraph {
    let mut h = MixedHypergraph::with_labels(vertices).expect("uniform labels");
    for e in c {
        h.add_edge(EdgeKind::C, e.indices().iter().copied()).expect("valid edge");
    }
    for e in d {
        h.add_edge(EdgeKind::D, e.indices().iter().copied()).expect("valid edge");
    }
    h
}

/// Drops `(n2, 1, .., 1)`, the ones-vertex of the top row `n2`.
fn without_top_ones(h: &MixedHypergraph, spec: &SpecSet) -> Result<MixedHypergraph> {
    if !spec.has_consecutive_top() {
        return Err(Error::RequiresConsecutiveTop);
    }
    let drop = h.index_of(&ones(spec, 2, spec.n(2))).ok_or_else(|| Error::MissingVertex(ones(spec, 2, spec.n(2))))?;
    let keep: BTreeSet<usize> = (0..h.order()).filter(|&i| i != drop).collect();
    h.derived(&keep)
}

/// `{ones(j), tail(j), special}` for the row `j = n2 - 1` of `coords`, where
/// `n2` is taken from the original target set.
fn row_closing_edge(coords: &SpecSet, n2: u32, h: &MixedHypergraph) -> Result<Edge> {
    let j = n2 - 1;
    let t = level_of_row(coords, j).ok_or_else(|| Error::MissingVertex(alloc::vec![j]))?;
    let ix = Indexer::new(h.labels().expect("labelled"));
    ix.edge(&[ones(coords, t, j), tail(coords, t, j), special(coords)])
}

fn star(spec: &SpecSet) -> Result<MixedHypergraph> {
    let vertices = vertex_set(spec);
    let d = full_d_edges_of(&vertices);
    Ok(assemble(vertices, c_star_edges(spec)?, d))
}

/// `H*` over the reduced set, minus `e2 = {tail(ns), ones(ns), (1, .., 1)}`
/// on its last level.
fn star_reduced(spec: &SpecSet) -> Result<MixedHypergraph> {
    let reduced = reduced_spec(spec);
    let mut h = star(&reduced)?;
    let t = reduced.len();
    let ns = reduced.smallest();
    let ix = Indexer::new(h.labels().expect("labelled"));
    let e2 = ix.edge(&[tail(&reduced, t, ns), ones(&reduced, t, ns), diagonal(&reduced, 1)])?;
    if !h.remove_edge(EdgeKind::C, &e2) {
        return Err(Error::MissingVertex(tail(&reduced, t, ns)));
    }
    Ok(h)
}

fn d_min(spec: &SpecSet) -> Result<MixedHypergraph> {
    let vertices = vertex_set(spec);
    let c = full_c_edges_of(&vertices);
    let h = assemble(vertices, c, d_star_edges(spec)?);
    if spec.has_consecutive_top() {
        without_top_ones(&h, spec)
    } else {
        Ok(h)
    }
}

fn c_min(spec: &SpecSet) -> Result<MixedHypergraph> {
    match CMinCase::of(spec) {
        CMinCase::Star => star(spec),
        CMinCase::StarWithoutTopOnes => {
            let mut g = without_top_ones(&star(spec)?, spec)?;
            let e1 = row_closing_edge(spec, spec.n(2), &g)?;
            g.add_edge(EdgeKind::C, e1.indices().iter().copied())?;
            Ok(g)
        }
        CMinCase::Reduced => star_reduced(spec),
        CMinCase::ReducedWithoutTopOnes => {
            let reduced = reduced_spec(spec);
            let h1 = star_reduced(spec)?;
            let drop = ones(&reduced, 2, spec.n(2));
            let drop = h1.index_of(&drop).ok_or(Error::MissingVertex(drop))?;
            let keep: BTreeSet<usize> = (0..h1.order()).filter(|&i| i != drop).collect();
            let mut h2 = h1.derived(&keep)?;
            // For S = {m + 2, m + 1, m} this recipe has the stated C-edge
            // count but admits two strict (m + 1)-colorings; exhaustive search
            // finds no one-realization of {4, 3, 2} or {5, 4, 3} with two
            // C-edges at all, so no repair of this edge can fix it.
            let e3 = row_closing_edge(&reduced, spec.n(2), &h2)?;
            h2.add_edge(EdgeKind::C, e3.indices().iter().copied())?;
            Ok(h2)
        }
        CMinCase::DMinFallback => d_min(spec),
    }
}

/// Builds the requested construction and checks its closed-form counts.
pub fn build(spec: &SpecSet, variant: Variant) -> Result<MixedHypergraph> {
    let h = match variant {
        Variant::Full => {
            let vertices = vertex_set(spec);
            let c = full_c_edges_of(&vertices);
            let d = full_d_edges_of(&vertices);
            assemble(vertices, c, d)
        }
        Variant::FullG => without_top_ones(&build(spec, Variant::Full)?, spec)?,
        Variant::DMin => {
            let h = d_min(spec)?;
            check_count("D-edges of the D-minimal construction", delta_d(spec), h.d_edges().len())?;
            h
        }
        Variant::CMin => {
            let h = c_min(spec)?;
            check_count("C-edges of the C-minimal construction", delta_c(spec), h.c_edges().len())?;
            h
        }
    };
    let expected_order = match variant {
        Variant::Full => delta(spec) + usize::from(spec.has_consecutive_top()),
        _ => delta(spec),
    };
    check_count("vertices", expected_order, h.order())?;
    Ok(h)
}
