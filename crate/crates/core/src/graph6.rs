//! graph6 encoding (short form, orders up to 62).
//!
//! One header byte `n + 63`, then the upper triangle of the adjacency matrix in column-major
//! order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SHORT_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Error::CapExceeded {
            what: "graph6 short-form order",
            value: n,
            cap: MAX_SHORT_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(Error::Graph6("empty line".into()));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "byte {:#04x} at offset {pos} is outside the printable range 63..=126",
            bytes[pos]
        )));
    }
    if head == 126 {
        return Err(Error::Graph6("long-form orders (n > 62) are not supported".into()));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("order 0 is not a graph here".into()));
    }
    let nbits = n * (n - 1) / 2;
    let want = nbits.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() != want {
        return Err(Error::Graph6(format!(
            "payload has {} bytes, order {n} needs {want}",
            payload.len()
        )));
    }
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (nbits..want * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn goldens() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        assert_eq!(encode(&k3).unwrap(), "Bw");
        assert_eq!(encode(&e2).unwrap(), "A?");
        assert_eq!(decode("A_").unwrap(), k2);
        assert_eq!(decode("Bw").unwrap(), k3);
        assert_eq!(decode("A?").unwrap(), e2);
        assert_eq!(encode(&Graph::empty(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn matches_a_standard_example() {
        // 5-vertex graph with edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("A").is_err());
        assert!(decode("").is_err());
        assert!(decode("A__").is_err());
        assert!(decode("A\x7f").is_err());
        assert!(decode("A ").is_err());
        assert!(decode("?").is_err());
        // K2 with a padding bit set
        assert!(decode("A`").is_err());
    }

    #[test]
    fn header_and_newline_are_tolerated() {
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), decode("Bw").unwrap());
    }

    #[test]
    fn order_cap() {
        let g = Graph::empty(63).unwrap();
        assert!(encode(&g).is_err());
        let g = Graph::from_edges(62, &[(0, 61), (30, 31)]).unwrap();
        assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
    }
}
