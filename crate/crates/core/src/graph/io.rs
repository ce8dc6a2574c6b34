//! Edge-list text format.
//!
//! ```text
//! n m
//! u v        (exactly m lines, 0 <= u < v < n, sorted by (u, v))
//! ```
//!
//! Lines end in LF. A trailing newline after the last edge is optional.

use fixedbitset::FixedBitSet;

use super::{check_order, Graph};
use crate::error::{Error, Result};

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    if line.contains('\r') {
        return Err(parse_err(line_no, "CR line ending"));
    }
    let mut fields = line.split(' ');
    let mut next = |what: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        field
            .parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("bad {what} {field:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = parse_pair(1, header).map_err(|e| match e {
        Error::Parse { line, msg } => parse_err(line, format!("malformed header: {msg}")),
        other => other,
    })?;
    check_order(n).map_err(|e| parse_err(1, e.to_string()))?;

    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    let mut prev: Option<(usize, usize)> = None;
    let mut count = 0usize;
    for (line_no, line) in lines {
        if count == m {
            return Err(parse_err(line_no, format!("edge count mismatch: header says {m}, found more")));
        }
        let (u, v) = parse_pair(line_no, line)?;
        if u >= v {
            return Err(parse_err(line_no, format!("expected u < v, got {u} {v}")));
        }
        if v >= n {
            return Err(parse_err(line_no, format!("vertex {v} out of range for n = {n}")));
        }
        if let Some(p) = prev {
            if (u, v) == p {
                return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
            }
            if (u, v) < p {
                return Err(parse_err(line_no, "edges not sorted lexicographically"));
            }
        }
        prev = Some((u, v));
        adj[u].insert(v);
        adj[v].insert(u);
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            count + 2,
            format!("edge count mismatch: header says {m}, found {count}"),
        ));
    }
    Ok(Graph::from_rows(adj))
}
