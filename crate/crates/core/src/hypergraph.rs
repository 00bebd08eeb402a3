//! Mixed hypergraphs over indexed vertices.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A coordinate tuple labelling a vertex of a construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub Vec<u32>);

impl Vertex {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    /// Needs two vertices of a common color.
    C,
    /// Needs two vertices of distinct colors.
    D,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::C => "C",
            EdgeKind::D => "D",
        })
    }
}

/// A set of vertex indices, stored ascending and without repeats.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<usize>);

impl Edge {
    /// Sorts `indices`; fails with the first repeated index.
    pub fn new(indices: impl IntoIterator<Item = usize>) -> core::result::Result<Edge, usize> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(w[0]);
        }
        Ok(Edge(v))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Largest index, i.e. the last vertex colored in canonical order.
    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

/// `(X, C, D)` with `X = {0, .., order - 1}` and optional coordinate labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedHypergraph {
    order: usize,
    labels: Option<Vec<Vertex>>,
    c_edges: BTreeSet<Edge>,
    d_edges: BTreeSet<Edge>,
}

impl MixedHypergraph {
    /// An edgeless hypergraph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        MixedHypergraph { order, labels: None, c_edges: BTreeSet::new(), d_edges: BTreeSet::new() }
    }

    /// An edgeless hypergraph labelled by `vertices`, which must share one
    /// dimension.
    pub fn with_labels(vertices: Vec<Vertex>) -> Result<Self> {
        let mut h = MixedHypergraph::empty(vertices.len());
        h.set_labels(Some(vertices))?;
        Ok(h)
    }

    pub fn set_labels(&mut self, labels: Option<Vec<Vertex>>) -> Result<()> {
        if let Some(l) = &labels {
            if l.len() != self.order {
                return Err(Error::BadLabels);
            }
            if let Some(first) = l.first() {
                if l.iter().any(|v| v.dimension() != first.dimension()) {
                    return Err(Error::BadLabels);
                }
            }
        }
        self.labels = labels;
        Ok(())
    }

    /// Adds an edge; an edge already present is merged silently.
    pub fn add_edge(&mut self, kind: EdgeKind, indices: impl IntoIterator<Item = usize>) -> Result<bool> {
        let edge = Edge::new(indices).map_err(|index| Error::RepeatedVertex { kind, index })?;
        if edge.len() < 2 {
            return Err(Error::EdgeTooSmall { kind, len: edge.len() });
        }
        if let Some(&index) = edge.indices().iter().find(|&&i| i >= self.order) {
            return Err(Error::VertexOutOfRange { index, order: self.order });
        }
        Ok(self.family_mut(kind).insert(edge))
    }

    pub fn remove_edge(&mut self, kind: EdgeKind, edge: &Edge) -> bool {
        self.family_mut(kind).remove(edge)
    }

    pub fn contains_edge(&self, kind: EdgeKind, edge: &Edge) -> bool {
        self.edges(kind).contains(edge)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[Vertex]> {
        self.labels.as_deref()
    }

    /// Coordinate dimension of the labels, if any.
    pub fn dimension(&self) -> Option<usize> {
        self.labels.as_ref().and_then(|l| l.first()).map(Vertex::dimension)
    }

    pub fn index_of(&self, vertex: &[u32]) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|v| v.coords() == vertex)
    }

    pub fn c_edges(&self) -> &BTreeSet<Edge> {
        &self.c_edges
    }

    pub fn d_edges(&self) -> &BTreeSet<Edge> {
        &self.d_edges
    }

    pub fn edges(&self, kind: EdgeKind) -> &BTreeSet<Edge> {
        match kind {
            EdgeKind::C => &self.c_edges,
            EdgeKind::D => &self.d_edges,
        }
    }

    fn family_mut(&mut self, kind: EdgeKind) -> &mut BTreeSet<Edge> {
        match kind {
            EdgeKind::C => &mut self.c_edges,
            EdgeKind::D => &mut self.d_edges,
        }
    }

    /// `H[keep]`: the vertices in `keep`, reindexed in their current order,
    /// with exactly the edges contained in `keep`.
    pub fn derived(&self, keep: &BTreeSet<usize>) -> Result<Self> {
        if let Some(&index) = keep.iter().find(|&&i| i >= self.order) {
            return Err(Error::VertexOutOfRange { index, order: self.order });
        }
        let mut new_index = alloc::vec![usize::MAX; self.order];
        for (n, &old) in keep.iter().enumerate() {
            new_index[old] = n;
        }
        let remap = |family: &BTreeSet<Edge>| -> BTreeSet<Edge> {
            family
                .iter()
                .filter(|e| e.indices().iter().all(|i| keep.contains(i)))
                .map(|e| Edge(e.indices().iter().map(|&i| new_index[i]).collect()))
                .collect()
        };
        Ok(MixedHypergraph {
            order: keep.len(),
            labels: self.labels.as_ref().map(|l| keep.iter().map(|&i| l[i].clone()).collect()),
            c_edges: remap(&self.c_edges),
            d_edges: remap(&self.d_edges),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn edges_are_sets() {
        let mut h = MixedHypergraph::empty(4);
        assert!(h.add_edge(EdgeKind::C, [2, 0, 1]).unwrap());
        assert!(!h.add_edge(EdgeKind::C, [1, 2, 0]).unwrap());
        assert_eq!(h.c_edges().len(), 1);
        assert_eq!(h.c_edges().iter().next().unwrap().indices(), &[0, 1, 2]);
    }

    #[test]
    fn rejects_malformed_edges() {
        let mut h = MixedHypergraph::empty(3);
        assert_eq!(
            h.add_edge(EdgeKind::D, [0, 3]),
            Err(Error::VertexOutOfRange { index: 3, order: 3 })
        );
        assert_eq!(
            h.add_edge(EdgeKind::D, [1, 1]),
            Err(Error::RepeatedVertex { kind: EdgeKind::D, index: 1 })
        );
        assert_eq!(h.add_edge(EdgeKind::C, [1]), Err(Error::EdgeTooSmall { kind: EdgeKind::C, len: 1 }));
    }

    #[test]
    fn labels_must_match() {
        let mut h = MixedHypergraph::empty(2);
        assert_eq!(h.set_labels(Some(vec![Vertex(vec![1])])), Err(Error::BadLabels));
        assert_eq!(
            h.set_labels(Some(vec![Vertex(vec![1]), Vertex(vec![1, 2])])),
            Err(Error::BadLabels)
        );
    }

    #[test]
    fn derived_keeps_contained_edges() {
        let mut h = MixedHypergraph::empty(4);
        h.add_edge(EdgeKind::D, [0, 1]).unwrap();
        h.add_edge(EdgeKind::D, [1, 3]).unwrap();
        h.add_edge(EdgeKind::C, [0, 2, 3]).unwrap();
        let g = h.derived(&[1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.c_edges().is_empty());
        assert_eq!(g.d_edges().iter().map(|e| e.indices().to_vec()).collect::<Vec<_>>(), vec![vec![0, 2]]);

        assert_eq!(h.derived(&(0..4).collect()).unwrap(), h);
        let empty = h.derived(&BTreeSet::new()).unwrap();
        assert_eq!(empty.order(), 0);
        assert!(empty.c_edges().is_empty() && empty.d_edges().is_empty());
        assert!(h.derived(&[5].into_iter().collect()).is_err());
    }
}
