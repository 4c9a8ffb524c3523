//! graph6 codec.
//!
//! Standard format: the order as `n + 63` for `n <= 62` (or `126` followed by
//! three 6-bit bytes for larger `n`), then the upper triangle in column-major
//! order, bits `x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...`, packed six per
//! byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut fill = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            fill += 1;
            if fill == 6 {
                out.push(acc + 63);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push((acc << (6 - fill)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
        }
    }
    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated long-form order".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6("orders above 2^18 are not supported".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Graph6(format!("order {n} outside the supported range 1..=64")));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::Graph6(format!(
            "expected {nbytes} data bytes for n = {n}, got {}",
            bytes.len() - pos
        )));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in &bytes[pos..] {
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
