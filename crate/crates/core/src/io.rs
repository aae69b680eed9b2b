//! graph6 and plain edge-list formats.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit big-endian groups, each
//! offset by 63 into the printable range. The vertex count comes first, as a
//! single byte for `n <= 62` or as `~` plus 18 bits (or `~~` plus 36 bits).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Reads a 6-bit group and rejects anything outside `?..=~`.
fn sextet(b: u8, pos: usize) -> Result<u64> {
    if !(63..=126).contains(&b) {
        return Err(g6_err(format!("byte {b:#04x} at offset {pos} is outside the graph6 range")));
    }
    Ok(u64::from(b - 63))
}

/// Parses one graph6 line. Trailing line terminators are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(g6_err("empty input"));
    };

    let (n, mut pos) = if first != 126 {
        (sextet(first, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (read_wide_n(bytes, 1, 3)?, 4)
    } else {
        (read_wide_n(bytes, 2, 6)?, 8)
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let total_bits = n * (n - 1) / 2;
    let data_len = total_bits.div_ceil(6);
    if bytes.len() != pos + data_len {
        return Err(g6_err(format!(
            "expected {} data bytes for n = {n}, found {}",
            data_len,
            bytes.len().saturating_sub(pos)
        )));
    }

    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut bit_index = 0;
    while bit_index < data_len * 6 {
        let word = sextet(bytes[pos], pos)?;
        pos += 1;
        for shift in (0..6).rev() {
            let bit = word >> shift & 1 == 1;
            if bit_index >= total_bits {
                if bit {
                    return Err(g6_err("nonzero padding bits"));
                }
            } else {
                if bit {
                    g.add_edge_unchecked(i, j);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

fn read_wide_n(bytes: &[u8], start: usize, len: usize) -> Result<usize> {
    let Some(chunk) = bytes.get(start..start + len) else {
        return Err(g6_err("truncated length header"));
    };
    let mut n = 0u64;
    for (k, &b) in chunk.iter().enumerate() {
        n = n << 6 | sextet(b, start + k)?;
    }
    let min = if len == 3 { 63 } else { 258_048 };
    if n < min {
        return Err(g6_err(format!("non-canonical length header for n = {n}")));
    }
    usize::try_from(n).map_err(|_| g6_err("vertex count does not fit in memory"))
}

/// Canonical graph6 (no header, zero padding).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64) >> shift & 63) as u8 + 63);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `n` on the first line followed by one `u v` pair per line (0-indexed).
/// Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, msg: String| Error::EdgeList { line, msg };
    let (first_line, header) = lines.next().ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| err(first_line, format!("bad vertex count {header:?}")))?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut g = Graph::empty(n);
    for (line, content) in lines {
        let mut parts = content.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = parts.next().ok_or_else(|| err(line, "expected two endpoints".into()))?;
            tok.parse().map_err(|_| err(line, format!("bad vertex {tok:?}")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if parts.next().is_some() {
            return Err(err(line, "trailing tokens".into()));
        }
        if u >= n || v >= n {
            return Err(err(line, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge_unchecked(u, v);
    }
    Ok(g)
}

/// Edge-list rendering accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses either format: a first line holding only an integer means edge list.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
        parse_edge_list(text)
    } else {
        parse_graph6(text.trim())
    }
}
