//! The graph6 text format: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}

fn sextet(bytes: &[u8], at: usize, base: usize) -> Result<usize> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(usize::from(b - 63)),
        Some(&b) => Err(Error::Parse { offset: base + at, reason: format!("byte 0x{b:02x} outside 63..=126") }),
        None => Err(Error::Parse { offset: base + at, reason: "unexpected end of input".into() }),
    }
}

fn parse_at(line: &str, base: usize) -> Result<Graph> {
    let (line, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, base + HEADER.len()),
        None => (line, base),
    };
    let bytes = line.as_bytes();
    match bytes.first() {
        None => return Err(Error::Parse { offset: base, reason: "empty graph6 string".into() }),
        Some(b':') | Some(b';') => {
            return Err(Error::Parse { offset: base, reason: "sparse6 is not supported".into() })
        }
        Some(b'&') => return Err(Error::Parse { offset: base, reason: "digraph6 is not supported".into() }),
        _ => {}
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0, base)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = (1..4).try_fold(0, |acc, i| Ok::<_, Error>(acc << 6 | sextet(bytes, i, base)?))?;
        (n, 4)
    } else {
        let n = (2..8).try_fold(0, |acc, i| Ok::<_, Error>(acc << 6 | sextet(bytes, i, base)?))?;
        (n, 8)
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let needed = total_bits.div_ceil(6);
    if bytes.len() != pos + needed {
        let offset = base + bytes.len().min(pos + needed);
        return Err(Error::Parse {
            offset,
            reason: format!("expected {} data bytes for n = {n}, found {}", needed, bytes.len().saturating_sub(pos)),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut current = 0;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                current = sextet(bytes, pos, base)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Parses a single graph6 string. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_at(text.trim_end_matches(['\n', '\r']), 0)
}

/// Parses one graph per non-blank line. Error offsets are relative to the
/// start of `text`.
pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.trim_end_matches(['\n', '\r']);
        if !line.trim().is_empty() {
            graphs.push(parse_at(line, offset)?);
        }
        offset += raw.len();
    }
    Ok(graphs)
}
