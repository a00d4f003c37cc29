//! Simple undirected graphs on at most 64 vertices, one adjacency word per vertex.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::canon;
use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// A natural number or infinity. `Finite(a) < Infinity` for every `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }
}

impl From<u64> for ExtendedNat {
    fn from(v: u64) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for ExtendedNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" => Ok(ExtendedNat::Infinity),
            t => t
                .parse::<u64>()
                .map(ExtendedNat::Finite)
                .map_err(|_| Error::InvalidParameter(format!("not a natural number or `inf`: {s}"))),
        }
    }
}

// Infinity is the JSON string "inf", never a sentinel number.
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => serializer.serialize_u64(*v),
            ExtendedNat::Infinity => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedNat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtVisitor;

        impl Visitor<'_> for ExtVisitor {
            type Value = ExtendedNat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtendedNat, E> {
                Ok(ExtendedNat::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtendedNat, E> {
                u64::try_from(v)
                    .map(ExtendedNat::Finite)
                    .map_err(|_| E::custom("negative value"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtendedNat, E> {
                if v == "inf" {
                    Ok(ExtendedNat::Infinity)
                } else {
                    Err(E::custom(format!("unexpected string `{v}`")))
                }
            }
        }

        deserializer.deserialize_any(ExtVisitor)
    }
}

/// Minimum degree, maximum degree and number of degree-1 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub leaf_count: usize,
}

/// Immutable simple graph. Row `v` of the adjacency holds the neighbourhood of `v` as a bit set;
/// rows at and beyond `order` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph {
            order: n,
            adj: [0; MAX_ORDER],
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs, in either orientation, collapse to a
    /// single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    order: n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in Bits(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency rows are not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Copy of `self` with one extra vertex adjacent to exactly `neighbours`.
    pub(crate) fn with_new_vertex(&self, neighbours: u64) -> Graph {
        let mut g = *self;
        let v = g.order;
        g.order += 1;
        g.adj[v] = neighbours;
        for u in Bits(neighbours) {
            g.adj[u] |= 1 << v;
        }
        g
    }

    /// Copy of `self` without the listed edges. Pairs that are not edges are ignored.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = *self;
        for &(u, v) in edges {
            if u < self.order && v < self.order {
                g.delete_edge(u, v);
            }
        }
        g
    }

    /// Copy of `self` with the listed edges added.
    pub fn with_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut all = self.edges();
        all.extend_from_slice(edges);
        Graph::from_edges(self.order, &all)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < 64 && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit set.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    #[inline]
    pub(crate) fn vertex_mask(&self) -> u64 {
        low_mask(self.order)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in Bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut p = DegreeProfile {
            min_degree: usize::MAX,
            max_degree: 0,
            leaf_count: 0,
        };
        for row in self.rows() {
            let d = row.count_ones() as usize;
            p.min_degree = p.min_degree.min(d);
            p.max_degree = p.max_degree.max(d);
            p.leaf_count += usize::from(d == 1);
        }
        p
    }

    /// Vertices reachable from the set `seeds` inside the vertex set `within`.
    #[inline]
    pub(crate) fn reach(&self, seeds: u64, within: u64) -> u64 {
        let mut seen = seeds & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff the subgraph induced by the (non-empty) vertex set `set` is connected.
    #[inline]
    pub(crate) fn induces_connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let start = set & set.wrapping_neg();
        self.reach(start, set) == set
    }

    /// Every vertex reachable from vertex 0. The single-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.induces_connected(self.vertex_mask())
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order && self.is_connected()
    }

    /// Vertices whose removal leaves the rest of the graph connected. For a connected graph of
    /// order at least 2 this set has at least two members.
    pub(crate) fn non_cut_vertices(&self) -> u64 {
        let all = self.vertex_mask();
        let mut out = 0;
        for v in 0..self.order {
            let rest = all & !(1 << v);
            if rest == 0 || self.induces_connected(rest) {
                out |= 1 << v;
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let mut g = *self;
        for v in 0..self.order {
            g.adj[v] = !self.adj[v] & mask & !(1 << v);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length must equal graph order");
        let mut g = Graph {
            order: self.order,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.order {
            for v in Bits(self.adj[u]) {
                g.adj[perm[u]] |= 1 << perm[v];
            }
        }
        g
    }

    /// BFS distances from every vertex.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    /// A byte string that is equal for two graphs exactly when they are isomorphic.
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order == other.order
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

// Total order used for deterministic tie-breaking only.
impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.rows().cmp(other.rows()))
    }
}

/// Sentinel for "unreachable" in [`DistanceMatrix`].
pub(crate) const UNREACHABLE: u8 = u8::MAX;

/// All-pairs shortest-path lengths, stored as bytes with [`UNREACHABLE`] for infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u8>,
}

impl DistanceMatrix {
    fn new(g: &Graph) -> DistanceMatrix {
        let n = g.order();
        let mut dist = vec![UNREACHABLE; n * n];
        let all = g.vertex_mask();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut level = 0u8;
            while frontier != 0 {
                for v in Bits(frontier) {
                    row[v] = level;
                }
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= g.neighbours(v);
                }
                next &= all & !seen;
                seen |= next;
                frontier = next;
                level += 1;
            }
        }
        DistanceMatrix { order: n, dist }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> ExtendedNat {
        match self.raw(u, v) {
            UNREACHABLE => ExtendedNat::Infinity,
            d => ExtendedNat::Finite(d as u64),
        }
    }

    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.order + v]
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u8] {
        &self.dist[u * self.order..(u + 1) * self.order]
    }

    /// Classical diameter; infinity for a disconnected graph.
    pub fn diameter(&self) -> ExtendedNat {
        match self.dist.iter().copied().max().unwrap_or(0) {
            UNREACHABLE => ExtendedNat::Infinity,
            d => ExtendedNat::Finite(d as u64),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::empty(n).unwrap().complement()
    }

    #[test]
    fn from_edges_examples() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);

        let p4 = path(4);
        assert_eq!(
            p4.degree_profile(),
            DegreeProfile {
                min_degree: 1,
                max_degree: 2,
                leaf_count: 2
            }
        );

        let dup = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
        assert_eq!(dup.edges(), vec![(0, 1)]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::OrderOutOfRange(0)));
        assert_eq!(Graph::from_edges(65, &[]), Err(Error::OrderOutOfRange(65)));
        assert!(Graph::from_edges(64, &[(0, 63)]).is_ok());
    }

    #[test]
    fn from_rows_checks_symmetry() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01, 0b00]).is_err());
        assert_eq!(Graph::from_rows(&[0b10, 0b01]).unwrap(), path(2));
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        assert!(!Graph::from_edges(3, &[(0, 1)]).unwrap().is_connected());
        assert!(cycle(9).is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn distances() {
        let d = cycle(6).all_pairs_distances();
        assert_eq!(d.get(0, 3), ExtendedNat::Finite(3));
        assert_eq!(d.diameter(), ExtendedNat::Finite(3));

        let d = complete(5).all_pairs_distances();
        for u in 0..5 {
            for v in 0..5 {
                let want = if u == v { 0 } else { 1 };
                assert_eq!(d.get(u, v), ExtendedNat::Finite(want));
            }
        }

        let d = Graph::empty(2).unwrap().all_pairs_distances();
        assert_eq!(d.get(0, 1), ExtendedNat::Infinity);
        assert_eq!(d.get(1, 1), ExtendedNat::Finite(0));
        assert_eq!(d.diameter(), ExtendedNat::Infinity);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement().edge_count(), 0);
        assert_eq!(path(3).complement().edges(), vec![(0, 2)]);
        let c5 = cycle(5);
        assert!(c5.complement().is_isomorphic(&c5));
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn degree_profiles() {
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(
            star.degree_profile(),
            DegreeProfile {
                min_degree: 1,
                max_degree: 5,
                leaf_count: 5
            }
        );
        assert_eq!(
            cycle(7).degree_profile(),
            DegreeProfile {
                min_degree: 2,
                max_degree: 2,
                leaf_count: 0
            }
        );
    }

    #[test]
    fn canonical_form_examples() {
        let p4 = path(4);
        // 2-0-3-1
        let relabeled = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(p4.canonical_form(), relabeled.canonical_form());
        let star4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(p4.canonical_form(), star4.canonical_form());
    }

    #[test]
    fn non_cut_vertices_of_path_are_its_ends() {
        assert_eq!(path(5).non_cut_vertices(), 0b10001);
        assert_eq!(cycle(5).non_cut_vertices(), 0b11111);
    }

    #[test]
    fn extended_nat_order_and_json() {
        use ExtendedNat::*;
        assert!(Finite(3) < Finite(4));
        assert!(Finite(u64::MAX) < Infinity);
        assert_eq!(serde_json::to_string(&Infinity).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Finite(7)).unwrap(), "7");
        let back: ExtendedNat = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Infinity);
        let back: ExtendedNat = serde_json::from_str("12").unwrap();
        assert_eq!(back, Finite(12));
        assert_eq!("inf".parse::<ExtendedNat>().unwrap(), Infinity);
    }
}
