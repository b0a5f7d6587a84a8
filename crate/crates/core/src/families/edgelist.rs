use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parse `n m` followed by `m` lines `a b` with 0-based vertices. Blank lines
/// and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut numbers: Vec<(usize, usize)> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim_start().starts_with('#') {
            for (at, token) in tokens(line) {
                let value = token.parse::<usize>().map_err(|_| Error::Malformed {
                    offset: offset + at,
                    message: format!("expected a non-negative integer, found {token:?}"),
                })?;
                numbers.push((value, offset + at));
            }
        }
        offset += line.len();
    }
    if numbers.len() < 2 {
        return Err(Error::Malformed {
            offset: text.len(),
            message: "missing `n m` header".into(),
        });
    }
    let (n, m) = (numbers[0].0, numbers[1].0);
    let body = &numbers[2..];
    if body.len() != 2 * m {
        return Err(Error::Malformed {
            offset: body.get(2 * m).map_or(text.len(), |&(_, at)| at),
            message: format!("header announces {m} edges, found {} numbers", body.len()),
        });
    }
    Graph::new(n, body.chunks(2).map(|c| (c[0].0, c[1].0)))
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
