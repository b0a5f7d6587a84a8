use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn malformed(offset: usize, message: impl Into<String>) -> Error {
    Error::Malformed {
        offset,
        message: message.into(),
    }
}

/// Decode one graph6 line, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body_start = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let trimmed = text[body_start..].trim_end_matches(['\n', '\r']);
    let bytes = trimmed.as_bytes();
    if bytes.is_empty() {
        return Err(malformed(body_start, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(
                body_start + i,
                format!("byte {b:#04x} outside graph6 range"),
            ));
        }
    }
    if bytes[0] == 126 {
        return Err(malformed(
            body_start,
            format!("multi-byte order prefix; at most {MAX_VERTICES} vertices are supported"),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    if n > MAX_VERTICES {
        return Err(malformed(
            body_start,
            format!("{n} vertices exceeds {MAX_VERTICES}"),
        ));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != needed {
        let at = body_start + 1 + data.len().min(needed);
        return Err(malformed(
            at,
            format!("expected {needed} data bytes, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for b in 1..n {
        for a in 0..b {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (data[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(malformed(body_start + 1 + k / 6, "non-zero padding bits"));
    }
    Graph::new(n, edges).map_err(|e| malformed(body_start, e.to_string()))
}

/// Encode without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![(n + 63) as u8];
    let mut current = 0u8;
    let mut filled = 0;
    for b in 1..n {
        for a in 0..b {
            current = current << 1 | g.has_edge(a, b) as u8;
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
