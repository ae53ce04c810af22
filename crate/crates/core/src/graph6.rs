//! Header-free graph6 for orders up to 62.
//!
//! One byte `n + 63`, then the upper triangle read column by column
//! (`(0,1), (0,2), (1,2), (0,3), …`) packed six bits per byte, big-endian
//! within each group, each group offset by 63.

use crate::graph::{Graph, GraphError};

pub const MAX_ORDER: usize = 62;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("malformed graph6: {0}")]
    Malformed(String),
    #[error("order {0} needs the long graph6 form, which is not supported")]
    UnsupportedOrder(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = vec![(n + 63) as u8];
    let mut bits = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(bits + 63);
                bits = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((bits << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is printable ascii"))
}

/// Decodes and validates: the result must be a connected simple graph.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, rest) = bytes
        .split_first()
        .ok_or_else(|| Graph6Error::Malformed("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::Malformed(format!(
            "bad order byte {first:#04x}"
        )));
    }
    if first == 126 {
        return Err(Graph6Error::UnsupportedOrder(MAX_ORDER + 1));
    }
    let n = usize::from(first - 63);
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(Graph6Error::Malformed(format!(
            "order {n} needs {expected} data bytes, got {}",
            rest.len()
        )));
    }
    if let Some(&b) = rest.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Graph6Error::Malformed(format!("bad data byte {b:#04x}")));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::Malformed("nonzero padding bits".into()));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_is_a_underscore() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
    }

    #[test]
    fn single_vertex() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(encode(&k1).unwrap(), "@");
        assert_eq!(decode("@").unwrap(), k1);
    }

    #[test]
    fn known_encodings() {
        // P4 = 0-1-2-3: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1 -> 101001
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(encode(&p4).unwrap(), "Ch");
        // 5-cycle from the usual graph6 description: "Dhc"
        let c5 = decode("Dhc").unwrap();
        assert_eq!(c5.size(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn disconnected_decode_is_rejected() {
        // two disjoint edges 0-1, 2-3: bits 100001
        assert_eq!(
            decode("C`"),
            Err(Graph6Error::Graph(GraphError::DisconnectedInput))
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("C"), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("Chh"), Err(Graph6Error::Malformed(_))));
        assert!(matches!(decode("C\x01"), Err(Graph6Error::Malformed(_))));
        // K2 with a padding bit set
        assert!(matches!(decode("A`"), Err(Graph6Error::Malformed(_))));
        assert_eq!(decode("~?@"), Err(Graph6Error::UnsupportedOrder(63)));
    }

    #[test]
    fn order_cap() {
        let edges: Vec<_> = (0..62).map(|i| (i, i + 1)).collect();
        let p63 = Graph::from_edges(63, &edges).unwrap();
        assert_eq!(encode(&p63), Err(Graph6Error::UnsupportedOrder(63)));
        let p62 = Graph::from_edges(62, &edges[..61]).unwrap();
        assert_eq!(decode(&encode(&p62).unwrap()).unwrap(), p62);
    }
}
