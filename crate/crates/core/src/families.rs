//! Named graph constructions with fixed vertex numbering.
//!
//! Each constructor documents its numbering so that witnesses and graph6 output are
//! reproducible. [`expected_properties`] returns the closed-form order, size, maximum degree and
//! Steiner 3-diameter claim for a family member without building it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// Path plus the edge `(n-1, 0)`; `n >= 3`.
    Cycle(usize),
    /// Centre 0 and leaves `1..n`.
    Star(usize),
    Complete(usize),
    /// Parts laid out consecutively in non-decreasing size order.
    CompleteMultipartite(Vec<usize>),
    /// `K_n` minus the matching `{(0,1), (2,3), ..., (2m-2, 2m-1)}`.
    CompleteMinusMatching { n: usize, m: usize },
    /// Star on `ell` vertices (centre 0, leaves `1..ell`) with a pendant path
    /// `0 - ell - (ell+1) - ... - (n-1)`.
    Broom { n: usize, ell: usize },
    /// Spider: centre 0 with legs of `a`, `b`, `c` vertices numbered leg by leg outward.
    Tabc { a: usize, b: usize, c: usize },
    /// Triangle `0, 1, 2` with pendant paths of `a`, `b`, `c` vertices at 0, 1, 2.
    C3abc { a: usize, b: usize, c: usize },
    /// Double broom: spine `0 .. b-1`, then `a` leaves on 0, then `c` leaves on `b-1`.
    DoubleBroom { a: usize, b: usize, c: usize },
    /// Tree with maximum degree 3 and `4 + y` leaves: spine `0 .. x-1`; vertex `x` and `x+3` are
    /// the centres of two cherries (`x+1, x+2` and `x+4, x+5`) both hanging from 0; `y` leaves on
    /// `x-1` follow.
    TStar { x: usize, y: usize },
    /// Vertices `u = 0`, `v = 1`, `w = 2`, `x_i = 2 + i`. Edges `u x_i` for all `i`, `v x_i` for
    /// `i <= r`, `w x_i` for `i > r`, and `v w`.
    TwoCenter { n: usize, r: usize },
    /// `K_{2,n-2}` with parts `{0, 1}` and `{2, .., n-1}`, minus the edge `(1, n-1)`.
    K2mMinusEdge(usize),
    /// Cycle `0 .. n-1` plus chords.
    ChordedCycle { n: usize, chords: Vec<(usize, usize)> },
    /// Cliques `U = 0..p` and `W = p..p+q` completely joined; apex `p+q` over `U`; apex `p+q+1`
    /// over `W` starting the path `p+q+1 - ... - (p+q+d-2)`.
    LayeredClique { p: usize, q: usize, d: usize },
}

/// What a construction is known to satisfy, from closed forms alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedProperties {
    pub order: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub sdiam3: Sdiam3Claim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Sdiam3Claim {
    Exact(u64),
    AtMost(u64),
    Unknown,
}

impl Sdiam3Claim {
    pub fn admits(self, measured: u64) -> bool {
        match self {
            Sdiam3Claim::Exact(v) => measured == v,
            Sdiam3Claim::AtMost(v) => measured <= v,
            Sdiam3Claim::Unknown => true,
        }
    }
}

impl fmt::Display for Sdiam3Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sdiam3Claim::Exact(v) => write!(f, "={v}"),
            Sdiam3Claim::AtMost(v) => write!(f, "<={v}"),
            Sdiam3Claim::Unknown => f.write_str("?"),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(n) | Cycle(n) | Star(n) | Complete(n) | K2mMinusEdge(n) => *n,
            CompleteMultipartite(parts) => parts.iter().sum(),
            CompleteMinusMatching { n, .. }
            | Broom { n, .. }
            | TwoCenter { n, .. }
            | ChordedCycle { n, .. } => *n,
            Tabc { a, b, c } => a + b + c + 1,
            C3abc { a, b, c } => a + b + c + 3,
            DoubleBroom { a, b, c } => a + b + c,
            TStar { x, y } => x + y + 6,
            LayeredClique { p, q, d } => p + q + d - 1,
        }
    }

    /// True when the construction is a reading of an ambiguous description rather than a
    /// transcription; reports should flag it.
    pub fn is_interpretation(&self) -> bool {
        matches!(self, FamilySpec::TStar { .. })
    }

    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match self {
            Path(n) | Complete(n) if *n == 0 => return Err(bad("order must be at least 1")),
            Cycle(n) if *n < 3 => return Err(bad("a cycle needs at least 3 vertices")),
            Star(n) if *n < 2 => return Err(bad("a star needs at least 2 vertices")),
            CompleteMultipartite(parts) => {
                if parts.len() < 2 || parts.contains(&0) {
                    return Err(bad("need at least two non-empty parts"));
                }
                if parts.windows(2).any(|w| w[0] > w[1]) {
                    return Err(bad("part sizes must be non-decreasing"));
                }
            }
            CompleteMinusMatching { n, m } => {
                if *n == 0 || 2 * m > *n {
                    return Err(bad(format!("matching of size {m} does not fit in K_{n}")));
                }
            }
            Broom { n, ell } => {
                if *ell < 2 || ell >= n {
                    return Err(bad(format!("broom needs 2 <= ell <= n-1, got n={n}, ell={ell}")));
                }
            }
            Tabc { a, b, c } | C3abc { a, b, c } => {
                if !(a <= b && b <= c) {
                    return Err(bad("legs must satisfy a <= b <= c"));
                }
            }
            DoubleBroom { b, .. } => {
                if *b == 0 {
                    return Err(bad("double broom needs a spine of at least one vertex"));
                }
            }
            TStar { x, y } => {
                if *x == 0 || *y == 0 {
                    return Err(bad("T*(x, y) needs x >= 1 and y >= 1"));
                }
            }
            TwoCenter { n, r } => {
                if *n < 5 || *r == 0 || *r > n - 4 {
                    return Err(bad(format!("two-centre graph needs n >= 5 and 1 <= r <= n-4, got n={n}, r={r}")));
                }
            }
            K2mMinusEdge(n) => {
                if *n < 4 {
                    return Err(bad("K2,n-2 minus an edge needs n >= 4"));
                }
            }
            ChordedCycle { n, chords } => {
                if *n < 3 {
                    return Err(bad("a cycle needs at least 3 vertices"));
                }
                for &(u, v) in chords {
                    if u >= *n || v >= *n || u == v {
                        return Err(bad(format!("chord ({u}, {v}) is not a pair of distinct vertices")));
                    }
                    let gap = u.abs_diff(v);
                    if gap == 1 || gap == n - 1 {
                        return Err(bad(format!("chord ({u}, {v}) is already a cycle edge")));
                    }
                }
                let mut sorted: Vec<_> = chords.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(bad("repeated chord"));
                }
            }
            LayeredClique { p, q, d } if *q == 0 || p < q || *d < 4 => {
                return Err(bad(format!("layered clique needs p >= q >= 1 and d >= 4, got p={p}, q={q}, d={d}")));
            }
            _ => {}
        }
        let n = self.order();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(())
    }

    /// The layered-clique member of order `n` and diameter bound `d` with the most balanced
    /// cliques.
    pub fn layered_for(n: usize, d: usize) -> Result<FamilySpec> {
        if d < 4 || d + 1 > n {
            return Err(bad(format!("layered clique needs 4 <= d <= n-1, got n={n}, d={d}")));
        }
        let s = n - d + 1;
        Ok(FamilySpec::LayeredClique {
            p: s - s / 2,
            q: s / 2,
            d,
        })
    }
}

pub fn build(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    spec.validate()?;
    let n = spec.order();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let path = |edges: &mut Vec<(usize, usize)>, from: usize, vertices: std::ops::Range<usize>| {
        let mut prev = from;
        for v in vertices {
            edges.push((prev, v));
            prev = v;
        }
    };
    let clique = |edges: &mut Vec<(usize, usize)>, vertices: std::ops::Range<usize>| {
        for u in vertices.clone() {
            for v in u + 1..vertices.end {
                edges.push((u, v));
            }
        }
    };
    match spec {
        Path(n) => path(&mut edges, 0, 1..*n),
        Cycle(n) => {
            path(&mut edges, 0, 1..*n);
            edges.push((n - 1, 0));
        }
        Star(n) => edges.extend((1..*n).map(|v| (0, v))),
        Complete(n) => clique(&mut edges, 0..*n),
        CompleteMultipartite(parts) => {
            let mut start = 0;
            for &size in parts {
                for u in start..start + size {
                    for v in start + size..n {
                        edges.push((u, v));
                    }
                }
                start += size;
            }
        }
        CompleteMinusMatching { n, m } => {
            for u in 0..*n {
                for v in u + 1..*n {
                    if !(v == u + 1 && u % 2 == 0 && u < 2 * m) {
                        edges.push((u, v));
                    }
                }
            }
        }
        Broom { n, ell } => {
            edges.extend((1..*ell).map(|v| (0, v)));
            path(&mut edges, 0, *ell..*n);
        }
        Tabc { a, b, c } => {
            let mut start = 1;
            for len in [a, b, c] {
                path(&mut edges, 0, start..start + len);
                start += len;
            }
        }
        C3abc { a, b, c } => {
            edges.extend([(0, 1), (1, 2), (0, 2)]);
            let mut start = 3;
            for (anchor, len) in [a, b, c].into_iter().enumerate() {
                path(&mut edges, anchor, start..start + len);
                start += len;
            }
        }
        DoubleBroom { a, b, .. } => {
            let (a, b) = (*a, *b);
            path(&mut edges, 0, 1..b);
            edges.extend((b..b + a).map(|v| (0, v)));
            edges.extend((b + a..n).map(|v| (b - 1, v)));
        }
        TStar { x, y } => {
            let x = *x;
            path(&mut edges, 0, 1..x);
            for centre in [x, x + 3] {
                edges.extend([(0, centre), (centre, centre + 1), (centre, centre + 2)]);
            }
            edges.extend((x + 6..x + 6 + y).map(|v| (x - 1, v)));
        }
        TwoCenter { n, r } => {
            for i in 1..=n - 3 {
                let xi = 2 + i;
                edges.push((0, xi));
                edges.push((if i <= *r { 1 } else { 2 }, xi));
            }
            edges.push((1, 2));
        }
        K2mMinusEdge(n) => {
            for x in 2..*n {
                edges.push((0, x));
                if x != n - 1 {
                    edges.push((1, x));
                }
            }
        }
        ChordedCycle { n, chords } => {
            path(&mut edges, 0, 1..*n);
            edges.push((n - 1, 0));
            edges.extend_from_slice(chords);
        }
        LayeredClique { p, q, d } => {
            let (p, q, d) = (*p, *q, *d);
            clique(&mut edges, 0..p);
            clique(&mut edges, p..p + q);
            for u in 0..p {
                for w in p..p + q {
                    edges.push((u, w));
                }
            }
            let v1 = p + q;
            let v2 = p + q + 1;
            edges.extend((0..p).map(|u| (v1, u)));
            edges.extend((p..p + q).map(|w| (v2, w)));
            path(&mut edges, v2, v2 + 1..v2 + d - 2);
        }
    }
    Graph::from_edges(n, &edges)
}

/// Closed-form properties of a family member. The Steiner 3-diameter entry is the value or bound
/// the family is known to satisfy; [`Sdiam3Claim::Unknown`] when there is none.
pub fn expected_properties(spec: &FamilySpec) -> Result<ExpectedProperties> {
    use FamilySpec::*;
    use Sdiam3Claim::*;
    spec.validate()?;
    let n = spec.order();
    let tree_bound = |leaves: usize| {
        if leaves >= 4 && n >= 3 {
            AtMost((n - leaves + 2) as u64)
        } else {
            Unknown
        }
    };
    let props = match spec {
        Path(n) => ExpectedProperties {
            order: *n,
            edge_count: n - 1,
            max_degree: (*n).min(3) - 1,
            sdiam3: if *n >= 3 { Exact(*n as u64 - 1) } else { Unknown },
        },
        Cycle(n) => ExpectedProperties {
            order: *n,
            edge_count: *n,
            max_degree: 2,
            sdiam3: Exact((2 * n / 3) as u64),
        },
        Star(n) => ExpectedProperties {
            order: *n,
            edge_count: n - 1,
            max_degree: n - 1,
            sdiam3: match n {
                0..=2 => Unknown,
                3 => Exact(2),
                _ => Exact(3),
            },
        },
        Complete(n) => ExpectedProperties {
            order: *n,
            edge_count: choose2(*n),
            max_degree: n - 1,
            sdiam3: if *n >= 3 { Exact(2) } else { Unknown },
        },
        CompleteMultipartite(parts) => {
            let largest = *parts.last().expect("validated non-empty");
            let squares: usize = parts.iter().map(|p| p * p).sum();
            ExpectedProperties {
                order: n,
                edge_count: (n * n - squares) / 2,
                max_degree: n - parts[0],
                sdiam3: if n < 3 || parts.len() < 2 {
                    Unknown
                } else if 3 > largest {
                    Exact(2)
                } else {
                    Exact(3)
                },
            }
        }
        CompleteMinusMatching { n, m } => ExpectedProperties {
            order: *n,
            edge_count: choose2(*n) - m,
            max_degree: if 2 * m < *n { n - 1 } else { n - 2 },
            sdiam3: if *n >= 3 { Exact(2) } else { Unknown },
        },
        Broom { n, ell } => ExpectedProperties {
            order: *n,
            edge_count: n - 1,
            max_degree: *ell,
            // ell = 2 is a path, ell = 3 a spider; both have the largest possible value
            sdiam3: if *ell <= 3 { Exact(*n as u64 - 1) } else { tree_bound(*ell) },
        },
        Tabc { a, b, c } => ExpectedProperties {
            order: n,
            edge_count: n - 1,
            max_degree: [*a, *b, *c].iter().filter(|&&l| l > 0).count().max(usize::from(n > 2) * 2),
            sdiam3: if n >= 3 { Exact(n as u64 - 1) } else { Unknown },
        },
        C3abc { c, .. } => ExpectedProperties {
            order: n,
            edge_count: n,
            max_degree: if *c > 0 { 3 } else { 2 },
            sdiam3: Exact(n as u64 - 1),
        },
        DoubleBroom { a, b, c } => {
            let (a, b, c) = (*a, *b, *c);
            let (leaves, max_degree) = if b == 1 {
                (a + c, a + c)
            } else {
                let end = |k: usize| usize::from(k == 0);
                let spine = if b >= 3 { 2 } else { 1 };
                (
                    a + c + end(a) + end(c),
                    (a + 1).max(c + 1).max(spine),
                )
            };
            ExpectedProperties {
                order: n,
                edge_count: n - 1,
                max_degree,
                sdiam3: tree_bound(leaves),
            }
        }
        TStar { x, y } => {
            let root_degree = if *x == 1 { 2 + y } else { 3 };
            ExpectedProperties {
                order: n,
                edge_count: n - 1,
                max_degree: root_degree.max(3).max(if *x >= 2 { y + 1 } else { 0 }),
                sdiam3: tree_bound(4 + y),
            }
        }
        TwoCenter { n, .. } => ExpectedProperties {
            order: *n,
            edge_count: 2 * n - 5,
            max_degree: n - 3,
            sdiam3: Exact(3),
        },
        K2mMinusEdge(n) => ExpectedProperties {
            order: *n,
            edge_count: 2 * n - 5,
            max_degree: n - 2,
            sdiam3: AtMost(3),
        },
        ChordedCycle { n, chords } => {
            let mut deg = vec![2usize; *n];
            for &(u, v) in chords {
                deg[u] += 1;
                deg[v] += 1;
            }
            let single_long_chord = chords.len() == 1 && *n == 9 && {
                let (u, v) = chords[0];
                let gap = u.abs_diff(v);
                gap.min(n - gap) == 4
            };
            ExpectedProperties {
                order: *n,
                edge_count: n + chords.len(),
                max_degree: deg.into_iter().max().unwrap_or(2),
                sdiam3: if single_long_chord { AtMost(5) } else { Unknown },
            }
        }
        LayeredClique { d, .. } => ExpectedProperties {
            order: n,
            edge_count: (n - d + 1) * (n - d + 2) / 2 + d - 3,
            max_degree: n - d + 1,
            sdiam3: AtMost(*d as u64),
        },
    };
    Ok(props)
}

fn parse_list(s: &str) -> std::result::Result<Vec<usize>, ()> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| ()))
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Text syntax: `name:args`, e.g. `cycle:9`, `tabc:1,2,3`, `layered:3,3,5`, `kmm:7,3`,
    /// `chorded:9;0-4`.
    fn from_str(text: &str) -> Result<FamilySpec> {
        use FamilySpec::*;
        let err = || Error::FamilySyntax(text.to_string());
        let (name, args) = text.trim().split_once(':').ok_or_else(err)?;
        let name = name.trim().to_ascii_lowercase();
        if name == "chorded" {
            let (n, chords) = match args.split_once(';') {
                Some((n, c)) => (n, c),
                None => (args, ""),
            };
            let n = n.trim().parse().map_err(|_| err())?;
            let mut list = Vec::new();
            for pair in chords.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (u, v) = pair.split_once('-').ok_or_else(err)?;
                list.push((
                    u.trim().parse().map_err(|_| err())?,
                    v.trim().parse().map_err(|_| err())?,
                ));
            }
            let spec = ChordedCycle { n, chords: list };
            spec.validate()?;
            return Ok(spec);
        }
        let nums = parse_list(args).map_err(|_| err())?;
        let spec = match (name.as_str(), nums.as_slice()) {
            ("path", &[n]) => Path(n),
            ("cycle", &[n]) => Cycle(n),
            ("star", &[n]) => Star(n),
            ("complete", &[n]) => Complete(n),
            ("multipartite", parts) if !parts.is_empty() => {
                let mut parts = parts.to_vec();
                parts.sort_unstable();
                CompleteMultipartite(parts)
            }
            ("kmm", &[n, m]) => CompleteMinusMatching { n, m },
            ("broom", &[n, ell]) => Broom { n, ell },
            ("tabc", &[a, b, c]) => Tabc { a, b, c },
            ("c3abc", &[a, b, c]) => C3abc { a, b, c },
            ("dbroom", &[a, b, c]) => DoubleBroom { a, b, c },
            ("tstar", &[x, y]) => TStar { x, y },
            ("twocenter", &[n, r]) => TwoCenter { n, r },
            ("k2m", &[n]) => K2mMinusEdge(n),
            ("layered", &[p, q, d]) => LayeredClique { p, q, d },
            _ => return Err(err()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Star(n) => write!(f, "star:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            CompleteMinusMatching { n, m } => write!(f, "kmm:{n},{m}"),
            Broom { n, ell } => write!(f, "broom:{n},{ell}"),
            Tabc { a, b, c } => write!(f, "tabc:{a},{b},{c}"),
            C3abc { a, b, c } => write!(f, "c3abc:{a},{b},{c}"),
            DoubleBroom { a, b, c } => write!(f, "dbroom:{a},{b},{c}"),
            TStar { x, y } => write!(f, "tstar:{x},{y}"),
            TwoCenter { n, r } => write!(f, "twocenter:{n},{r}"),
            K2mMinusEdge(n) => write!(f, "k2m:{n}"),
            ChordedCycle { n, chords } => {
                let chords: Vec<String> = chords.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(f, "chorded:{n};{}", chords.join(","))
            }
            LayeredClique { p, q, d } => write!(f, "layered:{p},{q},{d}"),
        }
    }
}

/// Every spider `T_{a,b,c}` of order `n` (`a <= b <= c`, `a + b + c = n - 1`).
pub fn spiders(n: usize) -> Vec<FamilySpec> {
    leg_triples(n.saturating_sub(1))
        .into_iter()
        .map(|(a, b, c)| FamilySpec::Tabc { a, b, c })
        .collect()
}

/// Every triangle-with-legs `C_3(a,b,c)` of order `n` (`a + b + c = n - 3`).
pub fn triangles_with_legs(n: usize) -> Vec<FamilySpec> {
    if n < 3 {
        return Vec::new();
    }
    leg_triples(n - 3)
        .into_iter()
        .map(|(a, b, c)| FamilySpec::C3abc { a, b, c })
        .collect()
}

fn leg_triples(total: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..=total / 3 {
        for b in a..=(total - a) / 2 {
            out.push((a, b, total - a - b));
        }
    }
    out
}

/// Partitions of `n` into non-decreasing positive parts, in lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, 1, &mut Vec::new(), &mut out);
    }
    out
}
