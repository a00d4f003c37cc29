//! Isomorph-free generation of graphs by canonical augmentation.
//!
//! Graphs are grown one vertex at a time. A child `C = P + v` is kept only when `v` lies in the
//! automorphism orbit of the canonical deletion vertex of `C`, and each parent only tries one
//! neighbourhood per orbit of `Aut(P)` on vertex subsets. Together these give exactly one
//! representative per isomorphism class without remembering previously emitted graphs.
//!
//! For connected output the deletion vertex is always a non-cut vertex, so every intermediate
//! graph is connected too. Maximum degree and edge count constraints are hereditary along this
//! construction path and prune whole subtrees.

use crate::canon::{canonical_labeling, Labeling, UnionFind};
use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, Graph};
use serde::{Deserialize, Serialize};

/// Hard ceiling on the enumeration order.
pub const MAX_ENUM_ORDER: usize = 12;
/// Environment variable that lowers [`MAX_ENUM_ORDER`] on constrained machines.
pub const CAP_ENV: &str = "STEINER_MAX_N";

/// Effective enumeration cap: [`MAX_ENUM_ORDER`], lowered by `STEINER_MAX_N` when set.
pub fn order_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(MAX_ENUM_ORDER, |v| v.min(MAX_ENUM_ORDER))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumFilter {
    pub order: usize,
    /// Required maximum degree (exact, not an upper bound).
    pub max_degree: Option<usize>,
    pub edge_count: Option<usize>,
    pub connected_only: bool,
}

impl EnumFilter {
    pub fn connected(order: usize) -> Self {
        EnumFilter {
            order,
            max_degree: None,
            edge_count: None,
            connected_only: true,
        }
    }

    pub fn all(order: usize) -> Self {
        EnumFilter {
            connected_only: false,
            ..EnumFilter::connected(order)
        }
    }

    pub fn with_max_degree(mut self, ell: usize) -> Self {
        self.max_degree = Some(ell);
        self
    }

    pub fn with_edge_count(mut self, m: usize) -> Self {
        self.edge_count = Some(m);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        let cap = order_cap();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "enumeration order",
                value: n,
                cap,
            });
        }
        if n == 0 {
            return Err(Error::InvalidParameter("enumeration order must be at least 1".into()));
        }
        if let Some(ell) = self.max_degree {
            if ell == 0 || ell >= n {
                return Err(Error::InvalidParameter(format!(
                    "maximum degree {ell} must lie in 1..={} for order {n}",
                    n - 1
                )));
            }
        }
        if let Some(m) = self.edge_count {
            let max = n * (n - 1) / 2;
            let min = if self.connected_only { n - 1 } else { 0 };
            if m < min || m > max {
                return Err(Error::InvalidParameter(format!(
                    "edge count {m} must lie in {min}..={max} for order {n}"
                )));
            }
        }
        Ok(())
    }

    fn admits(&self, g: &Graph) -> bool {
        self.max_degree.is_none_or(|ell| g.max_degree() == ell)
            && self.edge_count.is_none_or(|m| g.edge_count() == m)
            && (!self.connected_only || g.is_connected())
    }
}

/// One part of a disjoint partition of the generation tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Shard> {
        if count == 0 || index >= count {
            return Err(Error::InvalidParameter(format!(
                "shard index {index} must be below shard count {count}"
            )));
        }
        Ok(Shard { index, count })
    }
}

struct Frame {
    graph: Graph,
    edges: usize,
    /// Vertices already at the degree limit.
    saturated: u64,
    /// `orbit_rep[mask]`: smallest subset in the `Aut(graph)` orbit of `mask`; `None` when the
    /// group is trivial.
    orbit_rep: Option<Vec<u16>>,
    next: u64,
    last: u64,
}

impl Frame {
    fn new(graph: Graph, labeling: Option<Labeling>, ell: Option<usize>, connected: bool) -> Frame {
        let j = graph.order();
        let saturated = match ell {
            Some(ell) => (0..j)
                .filter(|&v| graph.degree(v) >= ell)
                .fold(0, |m, v| m | 1 << v),
            None => 0,
        };
        let labeling = labeling.unwrap_or_else(|| canonical_labeling(&graph));
        let orbit_rep = subset_orbit_reps(j, labeling.generators());
        Frame {
            edges: graph.edge_count(),
            graph,
            saturated,
            orbit_rep,
            next: u64::from(connected),
            last: low_mask(j),
        }
    }
}

fn subset_orbit_reps(j: usize, generators: &[Vec<u8>]) -> Option<Vec<u16>> {
    if generators.is_empty() {
        return None;
    }
    let size = 1usize << j;
    let mut uf = UnionFind::new(size);
    for gen in generators {
        for mask in 0..size {
            let image = Bits(mask as u64).fold(0usize, |m, v| m | 1 << gen[v]);
            uf.union(mask, image);
        }
    }
    Some((0..size).map(|m| uf.find(m) as u16).collect())
}

/// Streaming generator; see [`generate`].
pub struct Generator {
    filter: EnumFilter,
    shard: Shard,
    split_order: usize,
    split_seen: u64,
    /// `max_gain[c]`: most edges that vertices `c..n` can add once the graph has order `c`.
    max_gain: Vec<usize>,
    root: Option<Graph>,
    stack: Vec<Frame>,
}

impl Generator {
    fn new(filter: EnumFilter, shard: Shard) -> Result<Generator> {
        filter.validate()?;
        let n = filter.order;
        let cap = filter.max_degree.unwrap_or(n);
        let mut max_gain = vec![0; n + 1];
        for c in (1..n).rev() {
            max_gain[c] = max_gain[c + 1] + c.min(cap);
        }
        Ok(Generator {
            split_order: if n <= 3 { n } else { n - 2 },
            split_seen: 0,
            max_gain,
            root: Some(Graph::empty(1)?),
            stack: Vec::with_capacity(n),
            filter,
            shard,
        })
    }

    /// Whether the node at this order belongs to our shard.
    fn claim(&mut self, order: usize) -> bool {
        if order != self.split_order {
            return true;
        }
        let seen = self.split_seen;
        self.split_seen += 1;
        seen % self.shard.count as u64 == self.shard.index as u64
    }

    fn within_edge_budget(&self, order: usize, edges: usize) -> bool {
        let Some(m) = self.filter.edge_count else {
            return true;
        };
        let n = self.filter.order;
        let min_gain = if self.filter.connected_only { n - order } else { 0 };
        edges + min_gain <= m && m <= edges + self.max_gain[order]
    }
}

impl Iterator for Generator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let n = self.filter.order;
        let connected = self.filter.connected_only;
        let ell = self.filter.max_degree;
        if let Some(root) = self.root.take() {
            if self.claim(1) && self.within_edge_budget(1, 0) {
                if n == 1 {
                    if self.filter.admits(&root) {
                        return Some(root);
                    }
                } else {
                    self.stack.push(Frame::new(root, None, ell, connected));
                }
            }
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next > frame.last {
                self.stack.pop();
                continue;
            }
            let mask = frame.next;
            frame.next += 1;
            if mask & frame.saturated != 0 {
                continue;
            }
            let degree = mask.count_ones() as usize;
            if ell.is_some_and(|ell| degree > ell) {
                continue;
            }
            if let Some(reps) = &frame.orbit_rep {
                if reps[mask as usize] as u64 != mask {
                    continue;
                }
            }
            let order = frame.graph.order() + 1;
            let edges = frame.edges + degree;
            let child = frame.graph.with_new_vertex(mask);
            if !self.within_edge_budget(order, edges) {
                continue;
            }
            let Some(labeling) = accepts(&child, connected) else {
                continue;
            };
            if !self.claim(order) {
                continue;
            }
            if order == n {
                if self.filter.admits(&child) {
                    return Some(child);
                }
                continue;
            }
            self.stack.push(Frame::new(child, labeling, ell, connected));
        }
    }
}

/// Canonical-deletion test for the newest vertex of `child`. Returns `None` to reject, otherwise
/// the labeling computed along the way (if one was needed).
fn accepts(child: &Graph, connected: bool) -> Option<Option<Labeling>> {
    let v = child.order() - 1;
    let candidates = if connected {
        child.non_cut_vertices()
    } else {
        child.vertex_mask()
    };
    // cheap invariant first: smallest degree, then largest neighbour-degree sum
    let key = |x: usize| {
        let nsum: usize = Bits(child.neighbours(x)).map(|y| child.degree(y)).sum();
        (child.degree(x), usize::MAX - nsum)
    };
    let best = Bits(candidates).map(key).min()?;
    let ties = Bits(candidates)
        .filter(|&x| key(x) == best)
        .fold(0u64, |m, x| m | 1 << x);
    if ties >> v & 1 == 0 {
        return None;
    }
    if ties == 1 << v {
        return Some(None);
    }
    let labeling = canonical_labeling(child);
    let chosen = Bits(ties)
        .max_by_key(|&x| labeling.position(x))
        .expect("ties is non-empty");
    let orbits = labeling.orbits();
    (orbits[chosen] == orbits[v]).then_some(Some(labeling))
}

/// Streams one representative of every isomorphism class admitted by `filter`, restricted to
/// `shard`. The order is deterministic; shards of the same filter partition the full stream.
pub fn generate(filter: &EnumFilter, shard: Shard) -> Result<Generator> {
    Generator::new(filter.clone(), shard)
}

pub fn count(filter: &EnumFilter, shard: Shard) -> Result<u64> {
    Ok(generate(filter, shard)?.count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn forms(filter: &EnumFilter) -> Vec<Vec<u8>> {
        generate(filter, Shard::WHOLE)
            .unwrap()
            .map(|g| g.canonical_form())
            .collect()
    }

    #[test]
    fn connected_counts() {
        // OEIS A001349
        let known = [1u64, 1, 2, 6, 21, 112, 853, 11117];
        for (i, &want) in known.iter().enumerate() {
            let n = i + 1;
            assert_eq!(count(&EnumFilter::connected(n), Shard::WHOLE).unwrap(), want, "n={n}");
        }
    }

    #[test]
    fn all_graph_counts() {
        // OEIS A000088
        let known = [1u64, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in known.iter().enumerate() {
            let n = i + 1;
            assert_eq!(count(&EnumFilter::all(n), Shard::WHOLE).unwrap(), want, "n={n}");
        }
    }

    #[test]
    fn degree_two_on_five_vertices() {
        let gs: Vec<Graph> = generate(&EnumFilter::connected(5).with_max_degree(2), Shard::WHOLE)
            .unwrap()
            .collect();
        assert_eq!(gs.len(), 2);
        let mut edges: Vec<usize> = gs.iter().map(Graph::edge_count).collect();
        edges.sort_unstable();
        assert_eq!(edges, vec![4, 5]);
    }

    #[test]
    fn filtered_counts() {
        let trees6 = EnumFilter::connected(6).with_edge_count(5);
        assert_eq!(count(&trees6, Shard::WHOLE).unwrap(), 6);
        let none = EnumFilter::connected(3).with_max_degree(1);
        assert_eq!(count(&none, Shard::WHOLE).unwrap(), 0);
    }

    #[test]
    fn no_duplicates() {
        for n in 1..=7 {
            let f = forms(&EnumFilter::connected(n));
            let unique: HashSet<_> = f.iter().collect();
            assert_eq!(unique.len(), f.len());
        }
    }

    #[test]
    fn shards_partition_the_stream() {
        let filter = EnumFilter::connected(7);
        let whole: HashSet<_> = forms(&filter).into_iter().collect();
        let mut union = HashSet::new();
        let mut total = 0;
        for i in 0..5 {
            for g in generate(&filter, Shard::new(i, 5).unwrap()).unwrap() {
                total += 1;
                union.insert(g.canonical_form());
            }
        }
        assert_eq!(total, whole.len());
        assert_eq!(union, whole);
    }

    #[test]
    fn deterministic_order() {
        let filter = EnumFilter::connected(6).with_max_degree(3);
        let a: Vec<Graph> = generate(&filter, Shard::WHOLE).unwrap().collect();
        let b: Vec<Graph> = generate(&filter, Shard::WHOLE).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_filters() {
        assert!(generate(&EnumFilter::connected(13), Shard::WHOLE).is_err());
        assert!(generate(&EnumFilter::connected(0), Shard::WHOLE).is_err());
        assert!(generate(&EnumFilter::connected(4).with_max_degree(4), Shard::WHOLE).is_err());
        assert!(generate(&EnumFilter::connected(4).with_edge_count(2), Shard::WHOLE).is_err());
        assert!(generate(&EnumFilter::connected(4).with_edge_count(7), Shard::WHOLE).is_err());
        assert!(Shard::new(3, 3).is_err());
    }
}
