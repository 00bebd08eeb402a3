//! Exact enumeration of strict colorings and the checks built on it.
//!
//! Colorings are generated as restricted-growth strings over the vertices in
//! index order. A D-edge is rejected once its last vertex is colored and all
//! of its vertices share one color; a C-edge once its last vertex is colored
//! and all of its colors are pairwise distinct.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::ops::ControlFlow;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::coloring::{is_proper_coloring, Coloring, Properness};
use crate::constructions::canonical_colorings;
use crate::hypergraph::{Edge, EdgeKind, MixedHypergraph};
use crate::spec_set::SpecSet;
use crate::{Error, Result};

/// Default cap on search-tree nodes per enumeration.
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000_000;

/// `k -> r_k` for every `k` with at least one strict `k`-coloring.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ChromaticSpectrum {
    counts: BTreeMap<usize, u64>,
}

impl ChromaticSpectrum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, k: usize, n: u64) {
        if n > 0 {
            *self.counts.entry(k).or_insert(0) += n;
        }
    }

    pub fn r(&self, k: usize) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn feasible_set(&self) -> BTreeSet<usize> {
        self.counts.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&k, &r)| (k, r))
    }

    pub fn merge(&mut self, other: &ChromaticSpectrum) {
        for (k, r) in other.iter() {
            self.record(k, r);
        }
    }

    /// `(k, expected, actual)` wherever this spectrum differs from the
    /// one-realization of `target`.
    pub fn discrepancies(&self, target: &SpecSet) -> Vec<(usize, u64, u64)> {
        let mut keys: BTreeSet<usize> = self.feasible_set();
        keys.extend(target.values().iter().map(|&v| v as usize));
        keys.into_iter()
            .filter_map(|k| {
                let expected = u64::from(target.contains(k as u32));
                let actual = self.r(k);
                (expected != actual).then_some((k, expected, actual))
            })
            .collect()
    }
}

impl FromIterator<(usize, u64)> for ChromaticSpectrum {
    fn from_iter<I: IntoIterator<Item = (usize, u64)>>(iter: I) -> Self {
        let mut s = ChromaticSpectrum::new();
        for (k, r) in iter {
            s.record(k, r);
        }
        s
    }
}

/// A node budget shared by every worker of one enumeration.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charges `nodes`; false once the limit is passed.
    fn charge(&self, nodes: u64) -> bool {
        self.used.fetch_add(nodes, Ordering::Relaxed).saturating_add(nodes) <= self.limit
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Largest color count to explore; defaults to the vertex count.
    pub max_colors: Option<usize>,
    pub node_limit: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { max_colors: None, node_limit: DEFAULT_NODE_LIMIT }
    }
}

/// Signals that a [`Budget`] ran out mid-search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfBudget;

const CHARGE_BATCH: u64 = 1024;

/// Backtracking search over restricted-growth colorings of one hypergraph.
///
/// The search tree can be split at a fixed depth with [`Enumerator::prefixes`]
/// and each subtree explored independently with [`Enumerator::run`];
/// concatenating subtree results in prefix order reproduces the sequential
/// order.
#[derive(Debug, Clone)]
pub struct Enumerator {
    order: usize,
    max_colors: usize,
    // Edges grouped by their last vertex, without that vertex.
    c_closing: Vec<Vec<Vec<usize>>>,
    d_closing: Vec<Vec<Vec<usize>>>,
}

struct Search<'a, F> {
    en: &'a Enumerator,
    budget: &'a Budget,
    visit: F,
    colors: Vec<u32>,
    pending: u64,
}

impl Enumerator {
    pub fn new(h: &MixedHypergraph, max_colors: Option<usize>) -> Self {
        let order = h.order();
        let group = |family: &BTreeSet<Edge>| {
            let mut by_last = alloc::vec![Vec::new(); order];
            for e in family {
                let (&last, rest) = e.indices().split_last().expect("edges have two vertices");
                by_last[last].push(rest.to_vec());
            }
            by_last
        };
        Enumerator {
            order,
            max_colors: max_colors.unwrap_or(order).min(order),
            c_closing: group(h.c_edges()),
            d_closing: group(h.d_edges()),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether coloring vertex `v` with `colors[v]` keeps every edge closed
    /// at `v` satisfied.
    fn admissible(&self, colors: &[u32], v: usize) -> bool {
        let c = colors[v];
        for rest in &self.d_closing[v] {
            if rest.iter().all(|&u| colors[u] == c) {
                return false;
            }
        }
        'edges: for rest in &self.c_closing[v] {
            for (a, &x) in rest.iter().enumerate() {
                if colors[x] == c || rest[a + 1..].iter().any(|&y| colors[y] == colors[x]) {
                    continue 'edges;
                }
            }
            return false;
        }
        true
    }

    /// Replays `prefix`; `Some(colors used)` if it is a valid partial coloring.
    fn check_prefix(&self, prefix: &[u32]) -> Option<u32> {
        if prefix.len() > self.order {
            return None;
        }
        let mut used = 0u32;
        for v in 0..prefix.len() {
            let c = prefix[v];
            if c > used || (c == used && used as usize >= self.max_colors) {
                return None;
            }
            if c == used {
                used += 1;
            }
            if !self.admissible(prefix, v) {
                return None;
            }
        }
        Some(used)
    }

    /// Every admissible prefix of length `min(depth, order)`, ascending.
    pub fn prefixes(&self, depth: usize) -> Vec<Vec<u32>> {
        let depth = depth.min(self.order);
        let mut out = Vec::new();
        let mut colors = Vec::with_capacity(depth);
        self.extend_prefix(&mut colors, 0, depth, &mut out);
        out
    }

    fn extend_prefix(&self, colors: &mut Vec<u32>, used: u32, depth: usize, out: &mut Vec<Vec<u32>>) {
        if colors.len() == depth {
            out.push(colors.clone());
            return;
        }
        let v = colors.len();
        let top = if (used as usize) < self.max_colors { used } else { used.saturating_sub(1) };
        if used == 0 && self.max_colors == 0 {
            return;
        }
        for c in 0..=top {
            colors.push(c);
            if self.admissible(colors, v) {
                self.extend_prefix(colors, used.max(c + 1), depth, out);
            }
            colors.pop();
        }
    }

    /// Explores the subtree below `prefix`, calling `visit(colors, k)` for
    /// every strict coloring found, in lexicographic order.
    pub fn run<F>(&self, prefix: &[u32], budget: &Budget, visit: F) -> core::result::Result<ControlFlow<()>, OutOfBudget>
    where
        F: FnMut(&[u32], usize) -> ControlFlow<()>,
    {
        let Some(used) = self.check_prefix(prefix) else {
            return Ok(ControlFlow::Continue(()));
        };
        let mut colors = alloc::vec![0u32; self.order];
        colors[..prefix.len()].copy_from_slice(prefix);
        let mut search = Search { en: self, budget, visit, colors, pending: 0 };
        let flow = search.descend(prefix.len(), used);
        if !budget.charge(search.pending) {
            return Err(OutOfBudget);
        }
        flow
    }
}

impl<F> Search<'_, F>
where
    F: FnMut(&[u32], usize) -> ControlFlow<()>,
{
    fn descend(&mut self, v: usize, used: u32) -> core::result::Result<ControlFlow<()>, OutOfBudget> {
        if v == self.en.order {
            return Ok((self.visit)(&self.colors, used as usize));
        }
        let top = if (used as usize) < self.en.max_colors { used } else { used - 1 };
        for c in 0..=top {
            self.pending += 1;
            if self.pending >= CHARGE_BATCH {
                if !self.budget.charge(self.pending) {
                    self.pending = 0;
                    return Err(OutOfBudget);
                }
                self.pending = 0;
            }
            self.colors[v] = c;
            if self.en.admissible(&self.colors[..=v], v) {
                let next = if c == used { used + 1 } else { used };
                if self.descend(v + 1, next)?.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Runs the whole search on the calling thread.
pub fn for_each_strict_coloring<F>(h: &MixedHypergraph, opts: &EnumerationOptions, mut visit: F) -> Result<()>
where
    F: FnMut(&[u32], usize) -> ControlFlow<()>,
{
    let en = Enumerator::new(h, opts.max_colors);
    let budget = Budget::new(opts.node_limit);
    let mut partial = ChromaticSpectrum::new();
    let outcome = en.run(&[], &budget, |colors, k| {
        partial.record(k, 1);
        visit(colors, k)
    });
    match outcome {
        Ok(_) => Ok(()),
        Err(OutOfBudget) => Err(Error::BudgetExceeded { limit: opts.node_limit, partial }),
    }
}

/// All strict colorings with at most `max_colors` colors, grouped by color
/// count, each group in lexicographic order.
pub fn enumerate_strict_colorings(
    h: &MixedHypergraph,
    opts: &EnumerationOptions,
) -> Result<BTreeMap<usize, Vec<Coloring>>> {
    let mut out: BTreeMap<usize, Vec<Coloring>> = BTreeMap::new();
    for_each_strict_coloring(h, opts, |colors, k| {
        out.entry(k).or_default().push(Coloring::from_rgs(colors.to_vec(), k));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn chromatic_spectrum(h: &MixedHypergraph, opts: &EnumerationOptions) -> Result<ChromaticSpectrum> {
    let mut spectrum = ChromaticSpectrum::new();
    for_each_strict_coloring(h, opts, |_, k| {
        spectrum.record(k, 1);
        ControlFlow::Continue(())
    })?;
    Ok(spectrum)
}

pub fn feasible_set(h: &MixedHypergraph, opts: &EnumerationOptions) -> Result<BTreeSet<usize>> {
    Ok(chromatic_spectrum(h, opts)?.feasible_set())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneRealizationReport {
    pub target: SpecSet,
    pub verdict: bool,
    pub spectrum: ChromaticSpectrum,
    /// Every strict coloring found, by color count.
    pub witnesses: BTreeMap<usize, Vec<Coloring>>,
    /// `(k, expected r_k, actual r_k)`.
    pub discrepancies: Vec<(usize, u64, u64)>,
}

impl OneRealizationReport {
    pub fn from_witnesses(target: &SpecSet, witnesses: BTreeMap<usize, Vec<Coloring>>) -> Self {
        let spectrum: ChromaticSpectrum = witnesses.iter().map(|(&k, w)| (k, w.len() as u64)).collect();
        let discrepancies = spectrum.discrepancies(target);
        OneRealizationReport {
            target: target.clone(),
            verdict: discrepancies.is_empty(),
            spectrum,
            witnesses,
            discrepancies,
        }
    }

    /// The unique witness for `k`, if `r_k = 1`.
    pub fn witness(&self, k: usize) -> Option<&Coloring> {
        match self.witnesses.get(&k).map(Vec::as_slice) {
            Some([c]) => Some(c),
            _ => None,
        }
    }

    /// Compares the witnesses with the coordinate-projection colorings of a
    /// labelled construction.
    pub fn canonical_check(&self, h: &MixedHypergraph) -> CanonicalCheck {
        let canonical: BTreeSet<Coloring> = canonical_colorings(h).into_iter().collect();
        let found: BTreeSet<Coloring> = self.witnesses.values().flatten().cloned().collect();
        CanonicalCheck {
            missing: canonical.difference(&found).cloned().collect(),
            extra: found.difference(&canonical).cloned().collect(),
        }
    }
}

/// Witness colorings that are not coordinate projections, and projections
/// that are not witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCheck {
    pub missing: Vec<Coloring>,
    pub extra: Vec<Coloring>,
}

impl CanonicalCheck {
    pub fn exact(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn is_one_realization(h: &MixedHypergraph, target: &SpecSet, opts: &EnumerationOptions) -> Result<OneRealizationReport> {
    let witnesses = enumerate_strict_colorings(h, opts)?;
    Ok(OneRealizationReport::from_witnesses(target, witnesses))
}

/// Verdict only, stopping at the first coloring that rules it out.
pub fn realizes_once(h: &MixedHypergraph, target: &SpecSet, opts: &EnumerationOptions) -> Result<bool> {
    let mut seen = BTreeSet::new();
    let mut failed = false;
    for_each_strict_coloring(h, opts, |_, k| {
        if !target.contains(k as u32) || !seen.insert(k) {
            failed = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(!failed && seen.len() == target.len())
}

/// Graph on one color class joining `x, y` when some C-edge meets the class
/// in exactly `{x, y}` and every other class in at most one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairGraph {
    pub nodes: Vec<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl PairGraph {
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let pos = |v: usize| self.nodes.binary_search(&v).expect("edge endpoint in class");
        let mut components = self.nodes.len();
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, pos(a)), find(&mut parent, pos(b)));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

pub fn pair_graph(h: &MixedHypergraph, c: &Coloring, class: usize) -> Result<PairGraph> {
    if let Properness::Violation { kind, edge } = is_proper_coloring(h, c)? {
        return Err(Error::ImproperColoring { kind, edge: edge.indices().to_vec() });
    }
    if class >= c.num_colors() {
        return Err(Error::ClassOutOfRange { index: class, num_colors: c.num_colors() });
    }
    let color = class as u32;
    let nodes: Vec<usize> = (0..c.order()).filter(|&v| c.color_of(v) == color).collect();
    let mut edges = BTreeSet::new();
    for e in h.c_edges() {
        let inside: Vec<usize> = e.indices().iter().copied().filter(|&v| c.color_of(v) == color).collect();
        if inside.len() != 2 {
            continue;
        }
        let mut others: Vec<u32> = e.indices().iter().map(|&v| c.color_of(v)).filter(|&x| x != color).collect();
        others.sort_unstable();
        if others.windows(2).all(|w| w[0] != w[1]) {
            edges.insert((inside[0], inside[1]));
        }
    }
    Ok(PairGraph { nodes, edges })
}

/// Edges of `kind` whose single deletion leaves `h` a one-realization of
/// `target`. Empty when `h` is edge-minimal in that family.
pub fn minimality_check(
    h: &MixedHypergraph,
    target: &SpecSet,
    kind: EdgeKind,
    opts: &EnumerationOptions,
) -> Result<Vec<Edge>> {
    if !realizes_once(h, target, opts)? {
        return Err(Error::NotOneRealization);
    }
    let mut safe = Vec::new();
    for e in h.edges(kind) {
        let mut g = h.clone();
        g.remove_edge(kind, e);
        if realizes_once(&g, target, opts)? {
            safe.push(e.clone());
        }
    }
    Ok(safe)
}

/// Largest vertex count accepted by [`exhaustive_min_search`].
pub const MAX_SEARCH_VERTICES: usize = 4;

/// The least number of `kind` edges over every mixed hypergraph on `n`
/// labelled vertices that is a one-realization of `target`; `None` if no
/// such hypergraph exists. C-edges range over subsets of size at least 3,
/// D-edges over subsets of size at least 2.
pub fn exhaustive_min_search(n: usize, target: &SpecSet, kind: EdgeKind) -> Result<Option<usize>> {
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::SearchTooLarge(n));
    }
    let subsets = |min: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize >= min)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect()
    };
    let c_candidates = subsets(3);
    let d_candidates = subsets(2);
    let total = c_candidates.len() + d_candidates.len();
    let opts = EnumerationOptions::default();
    let mut best: Option<usize> = None;
    for mask in 0u64..1 << total {
        let c_mask = mask & ((1 << c_candidates.len()) - 1);
        let d_mask = mask >> c_candidates.len();
        let weight = match kind {
            EdgeKind::C => c_mask.count_ones(),
            EdgeKind::D => d_mask.count_ones(),
        } as usize;
        if best.is_some_and(|b| weight >= b) {
            continue;
        }
        let mut h = MixedHypergraph::empty(n);
        for (i, e) in c_candidates.iter().enumerate() {
            if c_mask >> i & 1 == 1 {
                h.add_edge(EdgeKind::C, e.iter().copied())?;
            }
        }
        for (i, e) in d_candidates.iter().enumerate() {
            if d_mask >> i & 1 == 1 {
                h.add_edge(EdgeKind::D, e.iter().copied())?;
            }
        }
        if realizes_once(&h, target, &opts)? {
            best = Some(weight);
        }
    }
    Ok(best)
}
