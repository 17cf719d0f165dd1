//! Reader/writer for the graph6 format (graphs up to 62 vertices here),
//! used for dense test corpora.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses a graph6 line. Vertices are labeled v0..v(n-1).
pub fn parse(line: &str) -> Result<Graph> {
    let bytes = line.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty graph6 string".into(),
        });
    }
    if bytes[0] == b'~' {
        return Err(Error::Parse {
            line: 1,
            msg: "graph6 strings for n > 62 are not supported".into(),
        });
    }
    let n = (bytes[0] as usize)
        .checked_sub(63)
        .ok_or_else(|| Error::Parse {
            line: 1,
            msg: "bad graph6 size byte".into(),
        })?;
    let mut g = Graph::with_vertices((0..n).map(|i| format!("v{i}")))?;
    let need_bits = n * (n - 1) / 2;
    let need_bytes = need_bits.div_ceil(6);
    if bytes.len() < 1 + need_bytes {
        return Err(Error::Parse {
            line: 1,
            msg: "graph6 string too short".into(),
        });
    }
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            let val = byte.checked_sub(63).ok_or_else(|| Error::Parse {
                line: 1,
                msg: "bad graph6 data byte".into(),
            })?;
            if val & (1 << (5 - bit % 6)) != 0 {
                g.insert_edge(i, j)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Emits the graph6 encoding of a graph with at most 62 vertices.
pub fn emit(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::TooManyVertices(n, 62));
    }
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(acc + 63);
    }
    Ok(String::from_utf8(out).expect("printable bytes"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn known_five_vertex_encoding() {
        // Vertices 0..4 with edges (0,2), (0,4), (1,3), (3,4) encode as DQc.
        let mut g = Graph::with_vertices((0..5).map(|i| format!("v{i}"))).unwrap();
        for (u, v) in [(0, 2), (0, 4), (1, 3), (3, 4)] {
            g.insert_edge(u, v).unwrap();
        }
        assert_eq!(emit(&g).unwrap(), "DQc");
        let back = parse("DQc").unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn round_trip_on_catalog() {
        for g in crate::catalog::catalog_up_to(5) {
            let enc = emit(&g).unwrap();
            let back = parse(&enc).unwrap();
            assert_eq!(back.edges(), g.edges());
            assert_eq!(back.n(), g.n());
        }
    }
}
