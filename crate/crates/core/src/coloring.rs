//! Colorings as set partitions, and the proper-coloring predicate.

use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::{Edge, EdgeKind, MixedHypergraph};
use crate::{Error, Result};

/// A partition of `{0, .., n - 1}` in restricted-growth form.
///
/// Vertex 0 has color 0 and every new color is the smallest unused one, so
/// two colorings are equal exactly when they induce the same partition. The
/// derived ordering is lexicographic on the color sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    num_colors: usize,
}

impl Coloring {
    /// Relabels an arbitrary total assignment by first occurrence.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut seen: Vec<&T> = Vec::new();
        let colors = labels
            .iter()
            .map(|l| match seen.iter().position(|s| *s == l) {
                Some(p) => p as u32,
                None => {
                    seen.push(l);
                    (seen.len() - 1) as u32
                }
            })
            .collect();
        Coloring { colors, num_colors: seen.len() }
    }

    /// Builds the coloring whose classes are `classes`. Every vertex in
    /// `0..order` must appear in exactly one class.
    pub fn from_classes(order: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut raw: Vec<Option<usize>> = alloc::vec![None; order];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                match raw.get_mut(v) {
                    Some(slot @ None) => *slot = Some(c),
                    Some(Some(_)) => return Err(Error::DomainMismatch { expected: order, found: order + 1 }),
                    None => return Err(Error::VertexOutOfRange { index: v, order }),
                }
            }
        }
        normalize_coloring(&raw)
    }

    /// Wraps a sequence already in restricted-growth form.
    pub(crate) fn from_rgs(colors: Vec<u32>, num_colors: usize) -> Self {
        debug_assert!(is_restricted_growth(&colors));
        Coloring { colors, num_colors }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_of(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn order(&self) -> usize {
        self.colors.len()
    }

    /// Color classes in color order; each class is ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = alloc::vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c as usize].push(v);
        }
        classes
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes().iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for (j, v) in class.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

fn is_restricted_growth(colors: &[u32]) -> bool {
    let mut next = 0;
    colors.iter().all(|&c| {
        if c > next {
            false
        } else {
            if c == next {
                next += 1;
            }
            true
        }
    })
}

/// Canonical relabeling of a raw assignment; every vertex must be colored.
pub fn normalize_coloring<T: PartialEq>(raw: &[Option<T>]) -> Result<Coloring> {
    let labels: Vec<&T> = raw
        .iter()
        .enumerate()
        .map(|(v, c)| c.as_ref().ok_or(Error::Unassigned(v)))
        .collect::<Result<_>>()?;
    Ok(Coloring::from_labels(&labels))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Properness {
    Proper,
    /// The first violated edge, C-edges checked before D-edges.
    Violation { kind: EdgeKind, edge: Edge },
}

impl Properness {
    pub fn is_proper(&self) -> bool {
        matches!(self, Properness::Proper)
    }
}

pub(crate) fn c_edge_satisfied(edge: &Edge, colors: &[u32]) -> bool {
    let idx = edge.indices();
    idx.iter()
        .enumerate()
        .any(|(a, &x)| idx[a + 1..].iter().any(|&y| colors[x] == colors[y]))
}

pub(crate) fn d_edge_satisfied(edge: &Edge, colors: &[u32]) -> bool {
    let first = colors[edge.indices()[0]];
    edge.indices().iter().any(|&v| colors[v] != first)
}

pub fn is_proper_coloring(h: &MixedHypergraph, c: &Coloring) -> Result<Properness> {
    if c.order() != h.order() {
        return Err(Error::DomainMismatch { expected: h.order(), found: c.order() });
    }
    let colors = c.colors();
    if let Some(e) = h.c_edges().iter().find(|e| !c_edge_satisfied(e, colors)) {
        return Ok(Properness::Violation { kind: EdgeKind::C, edge: e.clone() });
    }
    if let Some(e) = h.d_edges().iter().find(|e| !d_edge_satisfied(e, colors)) {
        return Ok(Properness::Violation { kind: EdgeKind::D, edge: e.clone() });
    }
    Ok(Properness::Proper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn relabels_by_first_occurrence() {
        assert_eq!(Coloring::from_labels(&['b', 'a', 'b']).colors(), &[0, 1, 0]);
        assert_eq!(Coloring::from_labels(&[0, 1, 0]).colors(), &[0, 1, 0]);
        let c = Coloring::from_labels(&[2, 2, 5, 1]);
        assert_eq!(c.colors(), &[0, 0, 1, 2]);
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.classes(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn partial_assignment_rejected() {
        assert_eq!(normalize_coloring(&[Some(1), None, Some(1)]), Err(Error::Unassigned(1)));
        assert_eq!(normalize_coloring(&[Some(7), Some(3)]).unwrap().colors(), &[0, 1]);
    }

    #[test]
    fn from_classes_round_trips() {
        let c = Coloring::from_classes(4, &[vec![3], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert!(Coloring::from_classes(2, &[vec![0], vec![0, 1]]).is_err());
        assert!(Coloring::from_classes(2, &[vec![0, 2]]).is_err());
        assert!(Coloring::from_classes(2, &[vec![0]]).is_err());
    }

    #[test]
    fn single_d_edge_needs_two_colors() {
        let mut h = MixedHypergraph::empty(2);
        h.add_edge(EdgeKind::D, [0, 1]).unwrap();
        let v = is_proper_coloring(&h, &Coloring::from_labels(&[0, 0])).unwrap();
        assert_eq!(v, Properness::Violation { kind: EdgeKind::D, edge: Edge::new([0, 1]).unwrap() });
        assert!(is_proper_coloring(&h, &Coloring::from_labels(&[0, 1])).unwrap().is_proper());
    }

    #[test]
    fn single_c_edge_needs_a_repeat() {
        let mut h = MixedHypergraph::empty(3);
        h.add_edge(EdgeKind::C, [0, 1, 2]).unwrap();
        let v = is_proper_coloring(&h, &Coloring::from_labels(&[0, 1, 2])).unwrap();
        assert_eq!(v, Properness::Violation { kind: EdgeKind::C, edge: Edge::new([0, 1, 2]).unwrap() });
        assert!(is_proper_coloring(&h, &Coloring::from_labels(&[0, 1, 0])).unwrap().is_proper());
    }

    #[test]
    fn size_two_c_edge_forces_equal_colors() {
        let mut h = MixedHypergraph::empty(2);
        h.add_edge(EdgeKind::C, [0, 1]).unwrap();
        assert!(is_proper_coloring(&h, &Coloring::from_labels(&[0, 0])).unwrap().is_proper());
        assert!(!is_proper_coloring(&h, &Coloring::from_labels(&[0, 1])).unwrap().is_proper());
    }

    #[test]
    fn domain_mismatch() {
        let h = MixedHypergraph::empty(3);
        assert_eq!(
            is_proper_coloring(&h, &Coloring::from_labels(&[0, 1])),
            Err(Error::DomainMismatch { expected: 3, found: 2 })
        );
    }

    fn arb_hypergraph() -> impl Strategy<Value = MixedHypergraph> {
        (2usize..7).prop_flat_map(|n| {
            let edge = proptest::collection::btree_set(0..n, 2..=n.min(4));
            (
                Just(n),
                proptest::collection::vec(edge.clone(), 0..5),
                proptest::collection::vec(edge, 0..5),
            )
                .prop_map(|(n, cs, ds)| {
                    let mut h = MixedHypergraph::empty(n);
                    for e in cs {
                        h.add_edge(EdgeKind::C, e).unwrap();
                    }
                    for e in ds {
                        h.add_edge(EdgeKind::D, e).unwrap();
                    }
                    h
                })
        })
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_relabel_invariant(
            raw in proptest::collection::vec(0u8..5, 0..12),
            perm in Just([0u8, 1, 2, 3, 4]).prop_shuffle(),
        ) {
            let c = Coloring::from_labels(&raw);
            prop_assert_eq!(&Coloring::from_labels(c.colors()), &c);
            let relabeled: Vec<u8> = raw.iter().map(|&x| perm[x as usize] + 10).collect();
            prop_assert_eq!(Coloring::from_labels(&relabeled), c);
        }

        #[test]
        fn properness_ignores_label_names(
            h in arb_hypergraph(),
            seed in proptest::collection::vec(0u8..4, 7),
            perm in Just([0u8, 1, 2, 3]).prop_shuffle(),
        ) {
            let raw = &seed[..h.order()];
            let relabeled: Vec<u8> = raw.iter().map(|&x| perm[x as usize]).collect();
            let a = is_proper_coloring(&h, &Coloring::from_labels(raw)).unwrap();
            let b = is_proper_coloring(&h, &Coloring::from_labels(&relabeled)).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn extreme_colorings(h in arb_hypergraph()) {
            let n = h.order();
            let singletons = Coloring::from_labels(&(0..n).collect::<Vec<_>>());
            let one_class = Coloring::from_labels(&vec![0; n]);
            prop_assert_eq!(is_proper_coloring(&h, &singletons).unwrap().is_proper(), h.c_edges().is_empty());
            prop_assert_eq!(is_proper_coloring(&h, &one_class).unwrap().is_proper(), h.d_edges().is_empty());
        }
    }
}
