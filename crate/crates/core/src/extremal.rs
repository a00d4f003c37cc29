//! Exact values of `e_k(n, ℓ, d)` by ascending edge-count search.
//!
//! For `m = n-1, n, ...` every connected graph of order `n` with maximum degree exactly `ℓ` and
//! `m` edges is generated once up to isomorphism and tested for `sdiam_k <= d`. The first stratum
//! with a feasible graph gives the value; exhausting every stratum gives `Infinity`.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_labeling;
use crate::enumerate::{generate, EnumFilter, Shard};
use crate::error::{Error, Result};
use crate::graph::{ExtendedNat, Graph};
use crate::steiner::SteinerContext;

pub const DEFAULT_WITNESS_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtremalQuery {
    pub n: usize,
    pub ell: usize,
    pub d: usize,
    pub k: usize,
}

impl ExtremalQuery {
    /// Query with the default terminal-set size `k = 3`.
    pub fn new(n: usize, ell: usize, d: usize) -> Self {
        ExtremalQuery { n, ell, d, k: 3 }
    }

    pub fn with_k(self, k: usize) -> Self {
        ExtremalQuery { k, ..self }
    }

    /// Checks `2 <= k <= n` and `1 <= ℓ <= n-1`. The bound `d` is unrestricted: values below
    /// `k-1` have answer `Infinity`, values above `n-1` act as `n-1`.
    pub fn validate(&self) -> Result<()> {
        let ExtremalQuery { n, ell, k, .. } = *self;
        if n < 2 {
            return Err(Error::InvalidParameter(format!("order {n} is below 2")));
        }
        if !(2..=n).contains(&k) {
            return Err(Error::InvalidParameter(format!("k = {k} must lie in 2..={n}")));
        }
        if !(1..n).contains(&ell) {
            return Err(Error::InvalidParameter(format!(
                "maximum degree {ell} must lie in 1..={}",
                n - 1
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Keep at most this many witnesses (smallest canonical forms first); `None` keeps all.
    pub witness_cap: Option<usize>,
    pub shard: Shard,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            witness_cap: Some(DEFAULT_WITNESS_CAP),
            shard: Shard::WHOLE,
        }
    }
}

/// Search statistics for one edge count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub edges: usize,
    pub examined: u64,
    pub feasible: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalResult {
    pub query: ExtremalQuery,
    pub value: ExtendedNat,
    /// Canonically labeled witnesses, ordered by canonical form.
    pub witnesses: Vec<Graph>,
    /// Number of non-isomorphic witnesses at the minimal edge count (within this shard).
    pub witness_count: u64,
    pub witness_cap: Option<usize>,
    pub graphs_examined: u64,
    pub strata: Vec<Stratum>,
    pub shard: Shard,
    pub elapsed: Duration,
}

impl ExtremalResult {
    pub fn edge_counts_swept(&self) -> Option<RangeInclusive<usize>> {
        Some(self.strata.first()?.edges..=self.strata.last()?.edges)
    }

    pub fn witnesses_truncated(&self) -> bool {
        (self.witnesses.len() as u64) < self.witness_count
    }
}

pub fn compute_e(q: &ExtremalQuery) -> Result<ExtremalResult> {
    compute_e_with(q, &SearchOptions::default())
}

pub fn compute_e_with(q: &ExtremalQuery, opts: &SearchOptions) -> Result<ExtremalResult> {
    q.validate()?;
    EnumFilter::connected(q.n).validate()?;
    let start = Instant::now();
    let ExtremalQuery { n, ell, k, .. } = *q;
    let mut result = ExtremalResult {
        query: *q,
        value: ExtendedNat::Infinity,
        witnesses: Vec::new(),
        witness_count: 0,
        witness_cap: opts.witness_cap,
        graphs_examined: 0,
        strata: Vec::new(),
        shard: opts.shard,
        elapsed: Duration::ZERO,
    };
    // every connected graph of order >= k has sdiam_k >= k-1
    if q.d + 1 < k {
        result.elapsed = start.elapsed();
        return Ok(result);
    }
    let d = q.d.min(n - 1) as u64;
    let top = (n * (n - 1) / 2).min(n * ell / 2);
    for m in n - 1..=top {
        let filter = EnumFilter::connected(n).with_max_degree(ell).with_edge_count(m);
        let found = search_stratum(&filter, k, d, opts)?;
        result.graphs_examined += found.examined;
        result.strata.push(Stratum {
            edges: m,
            examined: found.examined,
            feasible: found.feasible,
        });
        if found.feasible > 0 {
            result.value = ExtendedNat::Finite(m as u64);
            result.witness_count = found.feasible;
            result.witnesses = found.witnesses.into_values().collect();
            break;
        }
    }
    result.elapsed = start.elapsed();
    Ok(result)
}

struct StratumSearch {
    examined: u64,
    feasible: u64,
    witnesses: BTreeMap<Vec<u8>, Graph>,
}

impl StratumSearch {
    fn absorb(&mut self, other: StratumSearch, cap: Option<usize>) {
        self.examined += other.examined;
        self.feasible += other.feasible;
        for (form, g) in other.witnesses {
            keep_witness(&mut self.witnesses, form, g, cap);
        }
    }
}

fn keep_witness(map: &mut BTreeMap<Vec<u8>, Graph>, form: Vec<u8>, g: Graph, cap: Option<usize>) {
    map.insert(form, g);
    if cap.is_some_and(|cap| map.len() > cap) {
        map.pop_last();
    }
}

fn search_stratum(filter: &EnumFilter, k: usize, d: u64, opts: &SearchOptions) -> Result<StratumSearch> {
    let outer = opts.shard;
    let inner = rayon::current_num_threads().max(1) * 4;
    let parts = (0..inner)
        .into_par_iter()
        .map(|j| {
            let shard = Shard {
                index: outer.index + outer.count * j,
                count: outer.count * inner,
            };
            let mut part = StratumSearch {
                examined: 0,
                feasible: 0,
                witnesses: BTreeMap::new(),
            };
            for g in generate(filter, shard)? {
                part.examined += 1;
                if SteinerContext::new(&g).sdiam_at_most(k, d)? {
                    part.feasible += 1;
                    let canonical = *canonical_labeling(&g).canonical_graph();
                    keep_witness(&mut part.witnesses, canonical.canonical_form(), canonical, opts.witness_cap);
                }
            }
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = StratumSearch {
        examined: 0,
        feasible: 0,
        witnesses: BTreeMap::new(),
    };
    for part in parts {
        total.absorb(part, opts.witness_cap);
    }
    Ok(total)
}

/// Combines the results of a complete set of shards into the result an unsharded run returns
/// (apart from `elapsed`, which becomes the sum).
pub fn merge_shards(parts: &[ExtremalResult]) -> Result<ExtremalResult> {
    let bad = |msg: String| Error::InvalidParameter(msg);
    let first = parts.first().ok_or_else(|| bad("nothing to merge".into()))?;
    let count = first.shard.count;
    let mut seen = vec![false; count];
    for p in parts {
        if p.query != first.query {
            return Err(bad(format!("shard queries differ: {:?} vs {:?}", p.query, first.query)));
        }
        if p.shard.count != count || p.witness_cap != first.witness_cap {
            return Err(bad("shards come from differently configured runs".into()));
        }
        if p.shard.index >= count || std::mem::replace(&mut seen[p.shard.index], true) {
            return Err(bad(format!("shard {} of {count} is repeated or invalid", p.shard.index)));
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(bad(format!("shard {missing} of {count} is missing")));
    }
    let value = parts.iter().map(|p| p.value).min().expect("non-empty");
    let mut by_edges: BTreeMap<usize, Stratum> = BTreeMap::new();
    for p in parts {
        for s in &p.strata {
            if ExtendedNat::Finite(s.edges as u64) > value {
                continue;
            }
            let e = by_edges.entry(s.edges).or_insert(Stratum {
                edges: s.edges,
                examined: 0,
                feasible: 0,
            });
            e.examined += s.examined;
            e.feasible += s.feasible;
        }
    }
    let mut witnesses = BTreeMap::new();
    let mut witness_count = 0;
    for p in parts.iter().filter(|p| p.value == value) {
        witness_count += p.witness_count;
        for g in &p.witnesses {
            keep_witness(&mut witnesses, g.canonical_form(), *g, first.witness_cap);
        }
    }
    let strata: Vec<Stratum> = by_edges.into_values().collect();
    Ok(ExtremalResult {
        query: first.query,
        value,
        witnesses: witnesses.into_values().collect(),
        witness_count,
        witness_cap: first.witness_cap,
        graphs_examined: strata.iter().map(|s| s.examined).sum(),
        strata,
        shard: Shard::WHOLE,
        elapsed: parts.iter().map(|p| p.elapsed).sum(),
    })
}

/// Every cell `(n, ℓ, d)` with `n` in `orders`, `1 <= ℓ <= n-1` and `k-1 <= d <= n-1`, ordered
/// by `n`, then `ℓ`, then `d`.
pub fn sweep(orders: RangeInclusive<usize>, k: usize, opts: &SearchOptions) -> Result<Vec<ExtremalResult>> {
    let mut out = Vec::new();
    for n in orders {
        if n < k.max(2) {
            continue;
        }
        for ell in 1..n {
            for d in k - 1..n {
                out.push(compute_e_with(&ExtremalQuery::new(n, ell, d).with_k(k), opts)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(n: usize, ell: usize, d: usize) -> ExtendedNat {
        compute_e(&ExtremalQuery::new(n, ell, d)).unwrap().value
    }

    #[test]
    fn small_examples() {
        assert_eq!(value(4, 3, 2), ExtendedNat::Finite(5));
        assert_eq!(value(5, 3, 2), ExtendedNat::Infinity);
        assert_eq!(value(6, 3, 3), ExtendedNat::Finite(7));
        assert_eq!(value(4, 2, 3), ExtendedNat::Finite(3));
        assert_eq!(value(5, 4, 2), ExtendedNat::Finite(8));
        assert_eq!(value(6, 4, 3), ExtendedNat::Finite(7));
    }

    #[test]
    fn out_of_range_bounds() {
        assert_eq!(value(6, 3, 1), ExtendedNat::Infinity);
        assert_eq!(value(6, 3, 40), value(6, 3, 5));
        assert!(compute_e(&ExtremalQuery::new(6, 6, 3)).is_err());
        assert!(compute_e(&ExtremalQuery::new(6, 0, 3)).is_err());
        assert!(compute_e(&ExtremalQuery::new(4, 2, 3).with_k(5)).is_err());
        assert!(compute_e(&ExtremalQuery::new(13, 3, 3)).unwrap_err().is_cap());
    }

    #[test]
    fn witnesses_satisfy_the_definition() {
        let r = compute_e(&ExtremalQuery::new(6, 3, 3)).unwrap();
        assert!(!r.witnesses.is_empty());
        for g in &r.witnesses {
            assert_eq!(g.order(), 6);
            assert_eq!(g.edge_count(), 7);
            assert_eq!(g.max_degree(), 3);
            assert!(crate::steiner::sdiam(g, 3).unwrap() <= ExtendedNat::Finite(3));
        }
        assert_eq!(r.edge_counts_swept(), Some(5..=7));
    }

    #[test]
    fn shards_merge_to_the_whole() {
        let q = ExtremalQuery::new(7, 3, 3);
        let whole = compute_e(&q).unwrap();
        let parts: Vec<_> = (0..3)
            .map(|i| {
                let opts = SearchOptions {
                    shard: Shard::new(i, 3).unwrap(),
                    ..SearchOptions::default()
                };
                compute_e_with(&q, &opts).unwrap()
            })
            .collect();
        let merged = merge_shards(&parts).unwrap();
        assert_eq!(merged.value, whole.value);
        assert_eq!(merged.witnesses, whole.witnesses);
        assert_eq!(merged.witness_count, whole.witness_count);
        assert_eq!(merged.strata, whole.strata);
        assert!(merge_shards(&parts[..2]).is_err());
    }
}
