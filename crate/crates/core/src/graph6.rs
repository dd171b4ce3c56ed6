//! graph6 codec: the printable-byte encoding used by published catalogs of
//! small graphs (size bytes are value+63, then the upper adjacency triangle
//! in column-major order, six bits per byte, zero-padded).

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn size_header(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![
            126,
            ((n >> 12) & 0x3f) as u8 + 63,
            ((n >> 6) & 0x3f) as u8 + 63,
            (n & 0x3f) as u8 + 63,
        ]
    } else {
        let mut out = vec![126, 126];
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 0x3f) as u8 + 63);
        }
        out
    }
}

/// Encode a graph as graph6 bytes (always the canonical-length form).
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = size_header(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Encode as a `String` (graph6 is pure printable ASCII).
pub fn encode_string(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 bytes are ASCII")
}

fn check_byte(b: u8) -> Result<u64> {
    if !(63..=126).contains(&b) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    Ok((b - 63) as u64)
}

/// Decode one graph6 value. The byte string must contain exactly one graph.
pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let (n, mut pos) = if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    } else if bytes[0] != 126 {
        (check_byte(bytes[0])? as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated multi-byte size".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | check_byte(b)? as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated multi-byte size".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | check_byte(b)? as usize;
        }
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!(
            "graph on {n} vertices exceeds capacity {MAX_VERTICES}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(Error::Graph6(format!(
            "truncated bit section: need {nbytes} bytes, have {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() - pos > nbytes {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after bit section",
            bytes.len() - pos - nbytes
        )));
    }
    let mut g = Graph::new(n)?;
    let mut acc = 0u64;
    let mut avail = 0;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                acc = check_byte(bytes[pos])?;
                pos += 1;
                avail = 6;
            }
            avail -= 1;
            if acc >> avail & 1 == 1 {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

pub fn decode_str(s: &str) -> Result<Graph> {
    decode(s.trim_end_matches(['\n', '\r']).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // n=1, no edge bits
        assert_eq!(decode(b"@").unwrap(), Graph::new(1).unwrap());
        assert_eq!(encode_string(&Graph::new(1).unwrap()), "@");
        // K_2 under the format definition
        assert_eq!(decode(b"A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(encode_string(&Graph::complete(2).unwrap()), "A_");
        // C_5 with edges 01,12,23,34,04
        assert_eq!(decode(b"Dhc").unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(encode_string(&Graph::cycle(5).unwrap()), "Dhc");
    }

    #[test]
    fn null_graph_and_size_forms() {
        let g0 = Graph::new(0).unwrap();
        assert_eq!(decode(&encode(&g0)).unwrap(), g0);

        // 63 vertices forces the three-byte size prefix
        let g = Graph::path(63).unwrap();
        let enc = encode(&g);
        assert_eq!(enc[0], 126);
        assert_eq!(decode(&enc).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode(b"").is_err());
        assert!(decode(b"D").is_err()); // truncated bit section
        assert!(decode(b"Dhcc").is_err()); // trailing bytes
        assert!(decode(&[68, 30]).is_err()); // byte below 63
        assert!(decode(&[68, 200, 99]).is_err()); // byte above 126
    }
}
