//! Steiner distance, Steiner k-eccentricity, k-radius and k-diameter.
//!
//! Three exact routes compute the Steiner distance of a terminal set:
//!
//! * **median** (k ≤ 3): a minimum tree on at most three terminals has at most one branch vertex,
//!   so its size is `min_v Σ_t d(v, t)`;
//! * **subset DP** (k ≤ [`MAX_DP_TERMINALS`]): Dreyfus–Wagner over terminal subsets;
//! * **superset enumeration**: the definition itself, the smallest connected vertex set
//!   containing the terminals. This is also [`steiner_distance_oracle`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, DistanceMatrix, ExtendedNat, Graph, UNREACHABLE};

pub const MAX_DP_TERMINALS: usize = 8;
/// Largest graph order accepted by [`steiner_distance_oracle`].
pub const MAX_ORACLE_ORDER: usize = 16;
/// `Method::Auto` only falls back to superset enumeration when at most this many non-terminals
/// exist.
const MAX_SUPERSET_FREE: usize = 20;

const INF: u32 = u32::MAX / 4;

/// Terminal set: distinct vertices in increasing order, at least two of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TerminalSet {
    vertices: Vec<usize>,
    #[serde(skip)]
    mask: u64,
}

impl TerminalSet {
    /// Validates and sorts `vertices` against a graph of order `n`.
    pub fn new(mut vertices: Vec<usize>, n: usize) -> Result<TerminalSet> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTerminals("repeated vertex".into()));
        }
        if vertices.len() < 2 {
            return Err(Error::InvalidTerminals(format!(
                "need at least two terminals, got {}",
                vertices.len()
            )));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        let mask = vertices.iter().fold(0u64, |m, &v| m | 1 << v);
        Ok(TerminalSet { vertices, mask })
    }

    #[cfg(test)]
    pub(crate) fn from_mask(mask: u64) -> TerminalSet {
        TerminalSet {
            vertices: Bits(mask).collect(),
            mask,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }
}

/// Edges of a Steiner tree for some terminal set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinerWitness {
    pub tree_edges: Vec<(usize, usize)>,
}

impl SteinerWitness {
    /// Checks that the edges form a tree inside `g` whose vertex set covers `s`.
    pub fn is_valid_for(&self, g: &Graph, s: &TerminalSet) -> bool {
        if self.tree_edges.iter().any(|&(u, v)| !g.has_edge(u, v)) {
            return false;
        }
        if self.tree_edges.is_empty() {
            return s.len() <= 1;
        }
        let Ok(t) = Graph::from_edges(g.order(), &self.tree_edges) else {
            return false;
        };
        let support = self
            .tree_edges
            .iter()
            .fold(0u64, |m, &(u, v)| m | 1 << u | 1 << v);
        s.mask() & !support == 0
            && t.induces_connected(support)
            && self.tree_edges.len() + 1 == support.count_ones() as usize
    }
}

/// Which exact algorithm computes a Steiner distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Median identity for k ≤ 3; otherwise the cheaper of subset DP and superset enumeration.
    Auto,
    Median,
    SubsetDp,
    Superset,
}

/// A graph with its distance matrix, for repeated Steiner queries.
pub struct SteinerContext<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
}

impl<'g> SteinerContext<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        SteinerContext {
            graph,
            dist: graph.all_pairs_distances(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    fn check(&self, s: &TerminalSet) -> Result<()> {
        match s.vertices().last() {
            Some(&v) if v >= self.graph.order() => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.graph.order(),
            }),
            _ => Ok(()),
        }
    }

    pub fn distance(&self, s: &TerminalSet, method: Method) -> Result<ExtendedNat> {
        self.check(s)?;
        Ok(to_ext(self.distance_mask(s.mask(), method)?))
    }

    /// Distance plus a witness tree when the distance is finite.
    pub fn distance_with_witness(
        &self,
        s: &TerminalSet,
        method: Method,
    ) -> Result<(ExtendedNat, Option<SteinerWitness>)> {
        self.check(s)?;
        let mask = s.mask();
        let method = self.resolve(mask.count_ones() as usize, method)?;
        let value = self.distance_mask(mask, method)?;
        if value >= INF {
            return Ok((ExtendedNat::Infinity, None));
        }
        let raw_edges = match method {
            Method::Median => self.median_edges(mask),
            Method::SubsetDp => self.dp_edges(mask),
            Method::Superset => self.superset_edges(mask),
            Method::Auto => unreachable!("resolved above"),
        };
        let tree = prune_to_tree(self.graph.order(), &raw_edges, mask);
        debug_assert_eq!(tree.len() as u32, value);
        Ok((
            ExtendedNat::Finite(value as u64),
            Some(SteinerWitness { tree_edges: tree }),
        ))
    }

    fn resolve(&self, k: usize, method: Method) -> Result<Method> {
        let n = self.graph.order();
        match method {
            Method::Median if k > 3 => Err(Error::InvalidParameter(format!(
                "median identity needs at most 3 terminals, got {k}"
            ))),
            Method::SubsetDp if k > MAX_DP_TERMINALS => Err(Error::CapExceeded {
                what: "subset DP terminal count",
                value: k,
                cap: MAX_DP_TERMINALS,
            }),
            Method::Superset if n - k > MAX_SUPERSET_FREE => Err(Error::CapExceeded {
                what: "superset enumeration free vertices",
                value: n - k,
                cap: MAX_SUPERSET_FREE,
            }),
            Method::Auto => Ok(if k <= 3 {
                Method::Median
            } else {
                let free = n - k;
                let dp_ok = k <= MAX_DP_TERMINALS;
                let sup_ok = free <= MAX_SUPERSET_FREE;
                // 3^k n versus 2^(n-k) n
                let dp_cost = 3f64.powi(k as i32);
                let sup_cost = 2f64.powi(free as i32);
                match (dp_ok, sup_ok) {
                    (true, true) if dp_cost <= sup_cost => Method::SubsetDp,
                    (_, true) => Method::Superset,
                    (true, false) => Method::SubsetDp,
                    (false, false) => {
                        return Err(Error::CapExceeded {
                            what: "subset DP terminal count",
                            value: k,
                            cap: MAX_DP_TERMINALS,
                        })
                    }
                }
            }),
            m => Ok(m),
        }
    }

    /// Raw distance, `>= INF` meaning infinity.
    pub(crate) fn distance_mask(&self, mask: u64, method: Method) -> Result<u32> {
        let k = mask.count_ones() as usize;
        match self.resolve(k, method)? {
            Method::Median => Ok(self.median(mask)),
            Method::SubsetDp => Ok(self.dp(mask)),
            Method::Superset => Ok(self.superset(mask).0),
            Method::Auto => unreachable!("resolve never returns Auto"),
        }
    }

    #[inline]
    fn d(&self, u: usize, v: usize) -> u32 {
        match self.dist.raw(u, v) {
            UNREACHABLE => INF,
            x => x as u32,
        }
    }

    /// `min_v Σ_t d(v, t)`.
    pub(crate) fn median(&self, mask: u64) -> u32 {
        let n = self.graph.order();
        let mut best = INF;
        for v in 0..n {
            let row = self.dist.row(v);
            let mut sum = 0u32;
            for t in Bits(mask) {
                match row[t] {
                    UNREACHABLE => {
                        sum = INF;
                        break;
                    }
                    x => sum += x as u32,
                }
            }
            best = best.min(sum);
        }
        best
    }

    fn median_center(&self, mask: u64) -> usize {
        let target = self.median(mask);
        (0..self.graph.order())
            .find(|&v| Bits(mask).map(|t| self.d(v, t)).sum::<u32>() == target)
            .expect("median value is attained")
    }

    fn median_edges(&self, mask: u64) -> Vec<(usize, usize)> {
        let c = self.median_center(mask);
        let mut edges = Vec::new();
        for t in Bits(mask) {
            self.push_path(c, t, &mut edges);
        }
        edges
    }

    /// Dreyfus–Wagner table: `table[sub][v]` is the size of a smallest tree spanning the terminals
    /// in `sub` together with `v`.
    fn dp_table(&self, terminals: &[usize]) -> Vec<Vec<u32>> {
        let n = self.graph.order();
        let k = terminals.len();
        let full = (1usize << k) - 1;
        let mut table = vec![vec![INF; n]; full + 1];
        for (i, &t) in terminals.iter().enumerate() {
            for v in 0..n {
                table[1 << i][v] = self.d(t, v);
            }
        }
        let mut merged = vec![INF; n];
        for sub in 1..=full {
            if sub.count_ones() < 2 {
                continue;
            }
            for (v, slot) in merged.iter_mut().enumerate() {
                let mut best = INF;
                // proper non-empty splits, each unordered pair once
                let mut a = (sub - 1) & sub;
                while a > 0 {
                    let b = sub ^ a;
                    if a > b {
                        best = best.min(table[a][v] + table[b][v]);
                    }
                    a = (a - 1) & sub;
                }
                *slot = best.min(INF);
            }
            for v in 0..n {
                let mut best = INF;
                for (u, &m) in merged.iter().enumerate() {
                    best = best.min(m + self.d(u, v));
                }
                table[sub][v] = best.min(INF);
            }
        }
        table
    }

    fn dp(&self, mask: u64) -> u32 {
        let terminals: Vec<usize> = Bits(mask).collect();
        if !self.same_component(mask) {
            return INF;
        }
        let table = self.dp_table(&terminals);
        table[(1 << terminals.len()) - 1][terminals[0]]
    }

    fn dp_edges(&self, mask: u64) -> Vec<(usize, usize)> {
        let terminals: Vec<usize> = Bits(mask).collect();
        let table = self.dp_table(&terminals);
        let full = (1usize << terminals.len()) - 1;
        let mut edges = Vec::new();
        self.expand(&table, &terminals, full, terminals[0], &mut edges);
        edges
    }

    fn expand(
        &self,
        table: &[Vec<u32>],
        terminals: &[usize],
        sub: usize,
        v: usize,
        edges: &mut Vec<(usize, usize)>,
    ) {
        if sub.count_ones() == 1 {
            self.push_path(terminals[sub.trailing_zeros() as usize], v, edges);
            return;
        }
        let want = table[sub][v];
        for u in 0..self.graph.order() {
            let du = self.d(u, v);
            if du >= INF {
                continue;
            }
            let mut a = (sub - 1) & sub;
            while a > 0 {
                let b = sub ^ a;
                if table[a][u] + table[b][u] + du == want {
                    self.push_path(u, v, edges);
                    self.expand(table, terminals, a, u, edges);
                    self.expand(table, terminals, b, u, edges);
                    return;
                }
                a = (a - 1) & sub;
            }
        }
        unreachable!("dynamic-programming value has a decomposition");
    }

    fn same_component(&self, mask: u64) -> bool {
        let first = mask.trailing_zeros() as usize;
        Bits(mask).all(|t| self.dist.raw(first, t) != UNREACHABLE)
    }

    /// Smallest connected vertex superset of `mask`, as `(|U| - 1, U)`.
    fn superset(&self, mask: u64) -> (u32, u64) {
        if !self.same_component(mask) {
            return (INF, 0);
        }
        let free = self.graph.vertex_mask() & !mask;
        let mut best = (INF, 0);
        // walk all subsets of the free vertices
        let mut extra = 0u64;
        loop {
            let size = (mask | extra).count_ones() - 1;
            if size < best.0 && self.graph.induces_connected(mask | extra) {
                best = (size, mask | extra);
            }
            if extra == free {
                break;
            }
            extra = extra.wrapping_sub(free) & free;
        }
        best
    }

    fn superset_edges(&self, mask: u64) -> Vec<(usize, usize)> {
        let (_, set) = self.superset(mask);
        let mut edges = Vec::new();
        for u in Bits(set) {
            for v in Bits(self.graph.neighbours(u) & set) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    /// Appends the edges of one shortest `a`–`b` path.
    fn push_path(&self, a: usize, b: usize, edges: &mut Vec<(usize, usize)>) {
        let mut cur = a;
        while cur != b {
            let here = self.d(cur, b);
            let next = Bits(self.graph.neighbours(cur))
                .find(|&w| self.d(w, b) + 1 == here)
                .expect("shortest path continues");
            edges.push((cur.min(next), cur.max(next)));
            cur = next;
        }
    }

    /// Steiner k-eccentricity of `v`: the largest distance over k-sets containing `v`.
    pub fn eccentricity(&self, v: usize, k: usize) -> Result<ExtendedNat> {
        let n = self.graph.order();
        check_k(n, k)?;
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        let others = self.graph.vertex_mask() & !(1 << v);
        let mut worst = 0;
        for rest in KSubsets::new(others, k - 1) {
            worst = worst.max(self.distance_mask(rest | 1 << v, Method::Auto)?);
            if worst >= INF {
                break;
            }
        }
        Ok(to_ext(worst))
    }

    /// Largest Steiner distance over all k-sets; `Infinity` for a disconnected graph.
    pub fn sdiam(&self, k: usize) -> Result<ExtendedNat> {
        let n = self.graph.order();
        check_k(n, k)?;
        if !self.graph.is_connected() {
            return Ok(ExtendedNat::Infinity);
        }
        let mut worst = 0;
        for s in KSubsets::new(self.graph.vertex_mask(), k) {
            worst = worst.max(self.distance_mask(s, Method::Auto)?);
        }
        Ok(to_ext(worst))
    }

    /// Whether `sdiam_k <= bound`, stopping at the first terminal set that exceeds it.
    pub fn sdiam_at_most(&self, k: usize, bound: u64) -> Result<bool> {
        let n = self.graph.order();
        check_k(n, k)?;
        if !self.graph.is_connected() {
            return Ok(false);
        }
        if bound + 1 >= n as u64 {
            return Ok(true);
        }
        // a k-set containing a diametral pair costs at least the diameter
        if self.dist.diameter() > ExtendedNat::Finite(bound) {
            return Ok(false);
        }
        if k == 3 {
            return Ok(self.sdiam3_at_most(bound));
        }
        for s in KSubsets::new(self.graph.vertex_mask(), k) {
            if self.distance_mask(s, Method::Auto)? as u64 > bound {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn sdiam3_at_most(&self, bound: u64) -> bool {
        let n = self.graph.order();
        for a in 0..n {
            let ra = self.dist.row(a);
            for b in a + 1..n {
                let rb = self.dist.row(b);
                for c in b + 1..n {
                    let rc = self.dist.row(c);
                    let mut best = u32::MAX;
                    for v in 0..n {
                        best = best.min(ra[v] as u32 + rb[v] as u32 + rc[v] as u32);
                    }
                    if best as u64 > bound {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Smallest Steiner k-eccentricity.
    pub fn srad(&self, k: usize) -> Result<ExtendedNat> {
        let n = self.graph.order();
        check_k(n, k)?;
        let mut best = ExtendedNat::Infinity;
        for v in 0..n {
            best = best.min(self.eccentricity(v, k)?);
        }
        Ok(best)
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!(
            "terminal-set size k={k} must satisfy 2 <= k <= n={n}"
        )));
    }
    Ok(())
}

fn to_ext(raw: u32) -> ExtendedNat {
    if raw >= INF {
        ExtendedNat::Infinity
    } else {
        ExtendedNat::Finite(raw as u64)
    }
}

/// Reduces a connected edge set containing all terminals to a tree whose leaves are terminals.
fn prune_to_tree(n: usize, edges: &[(usize, usize)], terminals: u64) -> Vec<(usize, usize)> {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    // BFS spanning tree from the first terminal
    let root = terminals.trailing_zeros() as usize;
    let mut tree = vec![0u64; n];
    let mut seen = 1u64 << root;
    let mut queue = vec![root];
    let mut qi = 0;
    while qi < queue.len() {
        let u = queue[qi];
        qi += 1;
        for v in Bits(adj[u] & !seen) {
            seen |= 1 << v;
            tree[u] |= 1 << v;
            tree[v] |= 1 << u;
            queue.push(v);
        }
    }
    // strip non-terminal leaves
    loop {
        let mut stripped = false;
        for v in 0..n {
            if terminals >> v & 1 == 0 && tree[v].count_ones() == 1 {
                let u = tree[v].trailing_zeros() as usize;
                tree[v] = 0;
                tree[u] &= !(1 << v);
                stripped = true;
            }
        }
        if !stripped {
            break;
        }
    }
    let mut out = Vec::new();
    for u in 0..n {
        for v in Bits(tree[u] >> (u + 1)) {
            out.push((u, u + 1 + v));
        }
    }
    out
}

/// All `k`-element subsets of `universe`, as masks, in increasing numeric order.
pub(crate) struct KSubsets {
    universe: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl KSubsets {
    pub(crate) fn new(universe: u64, k: usize) -> Self {
        let universe: Vec<usize> = Bits(universe).collect();
        let done = k > universe.len();
        KSubsets {
            idx: (0..k).collect(),
            universe,
            done,
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | 1 << self.universe[i]);
        // advance (colex)
        let k = self.idx.len();
        let m = self.universe.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k { self.idx[i + 1] } else { m };
            if self.idx[i] + 1 < limit {
                self.idx[i] += 1;
                for j in 0..i {
                    self.idx[j] = j;
                }
                break;
            }
            i += 1;
        }
        Some(mask)
    }
}

pub fn steiner_distance(g: &Graph, s: &TerminalSet) -> Result<ExtendedNat> {
    SteinerContext::new(g).distance(s, Method::Auto)
}

pub fn steiner_distance_with_witness(
    g: &Graph,
    s: &TerminalSet,
) -> Result<(ExtendedNat, Option<SteinerWitness>)> {
    SteinerContext::new(g).distance_with_witness(s, Method::Auto)
}

/// Direct transcription of the definition: the minimum of `|U| - 1` over vertex sets `U ⊇ S`
/// inducing a connected subgraph. Exponential; limited to orders up to [`MAX_ORACLE_ORDER`].
pub fn steiner_distance_oracle(g: &Graph, s: &TerminalSet) -> Result<ExtendedNat> {
    let n = g.order();
    if n > MAX_ORACLE_ORDER {
        return Err(Error::CapExceeded {
            what: "oracle graph order",
            value: n,
            cap: MAX_ORACLE_ORDER,
        });
    }
    if let Some(&v) = s.vertices().iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    let all = low_mask(n);
    let mut best: Option<u64> = None;
    for u in 0..=all {
        if u & s.mask() != s.mask() {
            continue;
        }
        let size = u.count_ones() as u64 - 1;
        if best.is_some_and(|b| b <= size) {
            continue;
        }
        // connectivity by plain graph search over the induced subgraph
        let start = u.trailing_zeros() as usize;
        let mut seen = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if u >> y & 1 == 1 && g.has_edge(x, y) && !seen.contains(&y) {
                    seen.push(y);
                    stack.push(y);
                }
            }
        }
        if seen.len() == u.count_ones() as usize {
            best = Some(size);
        }
    }
    Ok(best.map_or(ExtendedNat::Infinity, ExtendedNat::Finite))
}

pub fn steiner_eccentricity(g: &Graph, v: usize, k: usize) -> Result<ExtendedNat> {
    SteinerContext::new(g).eccentricity(v, k)
}

pub fn sdiam(g: &Graph, k: usize) -> Result<ExtendedNat> {
    SteinerContext::new(g).sdiam(k)
}

pub fn srad(g: &Graph, k: usize) -> Result<ExtendedNat> {
    SteinerContext::new(g).srad(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtendedNat::*;

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

    fn ts(v: &[usize], n: usize) -> TerminalSet {
        TerminalSet::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn terminal_set_validation() {
        assert!(TerminalSet::new(vec![1], 4).is_err());
        assert!(TerminalSet::new(vec![1, 1], 4).is_err());
        assert!(TerminalSet::new(vec![1, 4], 4).is_err());
        assert_eq!(ts(&[3, 0, 2], 4).vertices(), &[0, 2, 3]);
    }

    #[test]
    fn distance_examples() {
        let k5 = complete(5);
        for s in KSubsets::new(k5.vertex_mask(), 3) {
            let s = TerminalSet::from_mask(s);
            assert_eq!(steiner_distance(&k5, &s).unwrap(), Finite(2));
        }
        assert_eq!(steiner_distance(&path(4), &ts(&[0, 3], 4)).unwrap(), Finite(3));
        assert_eq!(steiner_distance(&cycle(6), &ts(&[0, 2, 4], 6)).unwrap(), Finite(4));
    }

    #[test]
    fn oracle_examples() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(
            steiner_distance_oracle(&star, &ts(&[1, 2, 3, 4], 5)).unwrap(),
            Finite(4)
        );
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = ts(&[0, 2], 4);
        assert_eq!(steiner_distance_oracle(&two_k2, &s).unwrap(), Infinity);
        assert_eq!(steiner_distance(&two_k2, &s).unwrap(), Infinity);
        let big = Graph::empty(17).unwrap();
        assert!(matches!(
            steiner_distance_oracle(&big, &ts(&[0, 1], 17)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn methods_agree_on_cycle_terminals() {
        let g = cycle(8);
        let ctx = SteinerContext::new(&g);
        for s in KSubsets::new(g.vertex_mask(), 3) {
            let s = TerminalSet::from_mask(s);
            let m = ctx.distance(&s, Method::Median).unwrap();
            assert_eq!(m, ctx.distance(&s, Method::SubsetDp).unwrap());
            assert_eq!(m, ctx.distance(&s, Method::Superset).unwrap());
        }
        assert!(ctx.distance(&ts(&[0, 1, 2, 3], 8), Method::Median).is_err());
    }

    #[test]
    fn subset_dp_rejects_wide_terminal_sets() {
        let g = complete(10);
        let s = ts(&[0, 1, 2, 3, 4, 5, 6, 7, 8], 10);
        let ctx = SteinerContext::new(&g);
        assert!(matches!(
            ctx.distance(&s, Method::SubsetDp),
            Err(Error::CapExceeded { .. })
        ));
        // Auto falls back to superset enumeration
        assert_eq!(ctx.distance(&s, Method::Auto).unwrap(), Finite(8));
    }

    #[test]
    fn witnesses_match_values() {
        let g = cycle(7).with_edges(&[(0, 3)]).unwrap();
        let ctx = SteinerContext::new(&g);
        for k in 2..=5 {
            for s in KSubsets::new(g.vertex_mask(), k) {
                let s = TerminalSet::from_mask(s);
                for method in [Method::Auto, Method::SubsetDp, Method::Superset] {
                    let (v, w) = ctx.distance_with_witness(&s, method).unwrap();
                    let w = w.unwrap();
                    assert_eq!(v, Finite(w.tree_edges.len() as u64));
                    assert!(w.is_valid_for(&g, &s), "{s:?} {method:?} {w:?}");
                }
            }
        }
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            steiner_distance_with_witness(&two_k2, &ts(&[0, 3], 4)).unwrap(),
            (Infinity, None)
        );
    }

    #[test]
    fn eccentricity_examples() {
        assert_eq!(steiner_eccentricity(&path(4), 0, 2).unwrap(), Finite(3));
        for v in 0..6 {
            assert_eq!(steiner_eccentricity(&complete(6), v, 4).unwrap(), Finite(3));
        }
        assert_eq!(steiner_eccentricity(&cycle(9), 0, 3).unwrap(), Finite(6));
        assert!(steiner_eccentricity(&path(4), 4, 2).is_err());
        assert!(steiner_eccentricity(&path(4), 0, 5).is_err());
    }

    #[test]
    fn sdiam_and_srad_examples() {
        assert_eq!(sdiam(&cycle(9), 3).unwrap(), Finite(6));
        assert_eq!(sdiam(&complete(7), 4).unwrap(), Finite(3));
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(sdiam(&k33, 3).unwrap(), Finite(3));
        assert_eq!(srad(&path(5), 2).unwrap(), Finite(2));
        assert_eq!(srad(&complete(5), 3).unwrap(), Finite(2));
        assert_eq!(srad(&cycle(6), 3).unwrap(), Finite(4));
        assert_eq!(sdiam(&Graph::from_edges(3, &[(0, 1)]).unwrap(), 2).unwrap(), Infinity);
        assert!(sdiam(&path(3), 1).is_err());
        assert!(sdiam(&path(3), 4).is_err());
    }

    #[test]
    fn sdiam_equals_diameter_for_pairs() {
        for g in [path(6), cycle(7), complete(4)] {
            assert_eq!(sdiam(&g, 2).unwrap(), g.all_pairs_distances().diameter());
        }
    }

    #[test]
    fn sdiam_at_most_matches_sdiam() {
        for g in [path(6), cycle(9), complete(5)] {
            let ctx = SteinerContext::new(&g);
            for k in 2..=4 {
                let v = ctx.sdiam(k).unwrap().finite().unwrap();
                assert!(ctx.sdiam_at_most(k, v).unwrap());
                assert!(!ctx.sdiam_at_most(k, v - 1).unwrap());
            }
        }
    }

    #[test]
    fn k_subsets_enumerates_binomially() {
        assert_eq!(KSubsets::new(0b11111, 2).count(), 10);
        assert_eq!(KSubsets::new(0b1011, 3).collect::<Vec<_>>(), vec![0b1011]);
        assert_eq!(KSubsets::new(0b11, 3).count(), 0);
        assert_eq!(KSubsets::new(0b111, 0).collect::<Vec<_>>(), vec![0]);
    }
}
