//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an equitable one, pick the
//! first non-singleton cell, individualize each of its vertices in turn. Leaves are compared by
//! their relabeled adjacency rows and the largest wins. Two pruning rules keep symmetric graphs
//! cheap:
//!
//! * at nodes on the leftmost path, children in the same orbit of the automorphisms found so far
//!   (restricted to those fixing the path prefix) are skipped;
//! * a leaf equal to the first leaf proves its subtree equivalent to the leftmost one, so the
//!   search jumps back to the leftmost-path node it branched from.
//!
//! With these rules the automorphisms recorded during the search generate the full group, so
//! [`Labeling::orbits`] is exact.

use crate::graph::{Bits, Graph};

/// Result of canonically labeling a graph.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `position[v]` is the canonical index of vertex `v`.
    position: Vec<u8>,
    canonical: Graph,
    generators: Vec<Vec<u8>>,
}

impl Labeling {
    pub fn position(&self, v: usize) -> usize {
        self.position[v] as usize
    }

    /// The input graph relabeled canonically; isomorphic inputs give identical graphs.
    pub fn canonical_graph(&self) -> &Graph {
        &self.canonical
    }

    /// Generators of the automorphism group, as vertex maps.
    pub fn generators(&self) -> &[Vec<u8>] {
        &self.generators
    }

    /// `orbit[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub fn orbits(&self) -> Vec<u8> {
        let n = self.position.len();
        let mut uf = UnionFind::new(n);
        for g in &self.generators {
            for (x, &y) in g.iter().enumerate() {
                uf.union(x, y as usize);
            }
        }
        (0..n).map(|v| uf.find(v) as u8).collect()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Unions by keeping the smaller root, so every root is the minimum of its class.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &[g.vertex_mask()])
}

/// Canonical labeling relative to an ordered vertex colouring. `cells` must partition the vertex
/// set; isomorphisms are then required to preserve each cell.
pub fn canonical_labeling_colored(g: &Graph, cells: &[u64]) -> Labeling {
    let n = g.order();
    debug_assert_eq!(cells.iter().fold(0, |a, c| a | c), g.vertex_mask());
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    let start: Vec<u64> = cells.iter().copied().filter(|&c| c != 0).collect();
    search.descend(start, 0, true, 0, &mut prefix);
    let best = search.best.expect("search tree always has a leaf");
    let canonical = Graph::from_rows(&best.rows).expect("relabeling preserves simplicity");
    Labeling {
        position: best.position,
        canonical,
        generators: search.generators,
    }
}

/// Byte string equal for two graphs exactly when they are isomorphic: the order followed by the
/// canonical adjacency rows, each truncated to `ceil(n/8)` little-endian bytes.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let lab = canonical_labeling(g);
    encode_rows(lab.canonical_graph())
}

pub(crate) fn encode_rows(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let width = n.div_ceil(8);
    let mut out = Vec::with_capacity(1 + n * width);
    out.push(n as u8);
    for row in g.rows() {
        out.extend_from_slice(&row.to_le_bytes()[..width]);
    }
    out
}

struct Leaf {
    position: Vec<u8>,
    inverse: Vec<u8>,
    rows: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u8>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the search must unwind to the leftmost-path node at `level`.
    fn descend(
        &mut self,
        mut cells: Vec<u64>,
        depth: usize,
        leftmost: bool,
        branch_level: usize,
        prefix: &mut Vec<u8>,
    ) -> Option<usize> {
        refine(self.g, &mut cells);
        if cells.len() == self.g.order() {
            return self.leaf(&cells, branch_level);
        }
        let ti = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let target = cells[ti];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if leftmost && !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix)
            {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);

            let child_leftmost = leftmost && explored.is_empty();
            let child_branch = if child_leftmost {
                depth + 1
            } else if leftmost {
                depth
            } else {
                branch_level
            };
            prefix.push(v as u8);
            let r = self.descend(child, depth + 1, child_leftmost, child_branch, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(level) = r {
                if level != depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[u8]) -> bool {
        let n = self.g.order();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p as usize] == p) {
                any = true;
                for (x, &y) in gen.iter().enumerate() {
                    uf.union(x, y as usize);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = uf.find(v);
        explored.iter().any(|&e| uf.find(e) == rv)
    }

    fn leaf(&mut self, cells: &[u64], branch_level: usize) -> Option<usize> {
        let n = self.g.order();
        let inverse: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut position = vec![0u8; n];
        for (p, &v) in inverse.iter().enumerate() {
            position[v as usize] = p as u8;
        }
        let mut rows = vec![0u64; n];
        for u in 0..n {
            let pu = position[u] as usize;
            for v in Bits(self.g.neighbours(u)) {
                rows[pu] |= 1 << position[v];
            }
        }
        let leaf = Leaf {
            position,
            inverse,
            rows,
        };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                position: leaf.position.clone(),
                inverse: leaf.inverse.clone(),
                rows: leaf.rows.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let gen = compose(&leaf.position, &first.inverse);
            self.record(gen);
            return Some(branch_level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        if leaf.rows == best.rows {
            let gen = compose(&leaf.position, &best.inverse);
            self.record(gen);
        } else if leaf.rows > best.rows {
            self.best = Some(leaf);
        }
        None
    }

    fn record(&mut self, gen: Vec<u8>) {
        if gen.iter().enumerate().any(|(x, &y)| x != y as usize) && !self.generators.contains(&gen)
        {
            self.generators.push(gen);
        }
    }
}

/// `x -> inverse[position[x]]`: the automorphism carrying one leaf onto another.
fn compose(position: &[u8], inverse: &[u8]) -> Vec<u8> {
    position.iter().map(|&p| inverse[p as usize]).collect()
}

/// Refines an ordered partition to the coarsest equitable refinement. Fragments of a split cell
/// are ordered by their neighbour count into the splitter, so the result depends only on the
/// graph structure and the incoming cell order.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.order();
    loop {
        if cells.len() == n {
            return;
        }
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cells[si];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell & (cell - 1) == 0 {
                    i += 1;
                    continue;
                }
                // by_count[c] collects the vertices of `cell` with c neighbours in the splitter
                let mut by_count = [0u64; 65];
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in Bits(cell) {
                    let c = (g.neighbours(v) & splitter).count_ones() as usize;
                    by_count[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    i += 1;
                    continue;
                }
                let fragments: Vec<u64> = by_count[lo..=hi].iter().copied().filter(|&m| m != 0).collect();
                let k = fragments.len();
                cells.splice(i..=i, fragments);
                changed = true;
                i += k;
            }
            si += 1;
        }
        if !changed {
            return;
        }
    }
}
