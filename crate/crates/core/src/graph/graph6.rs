//! graph6 short form (n <= 62): one size byte `n + 63`, then the upper
//! triangle read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian six bits per byte, each byte offset by 63.

use super::{Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub(super) fn parse(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if !(BIAS..=126).contains(&head) {
        return Err(err(0, format!("invalid size byte 0x{head:02x}")));
    }
    if head == 126 {
        return Err(err(0, format!("long-form size header (n > {MAX_VERTICES}) unsupported")));
    }
    let n = (head - BIAS) as usize;
    if n < 2 {
        return Err(err(0, format!("vertex count {n} below 2")));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != nbytes {
        let offset = 1 + body.len().min(nbytes);
        return Err(err(
            offset,
            format!("expected {nbytes} data bytes for n = {n}, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(1 + i, format!("invalid data byte 0x{b:02x}")));
        }
        let chunk = b - BIAS;
        for shift in (0..6).rev() {
            let set = (chunk >> shift) & 1 == 1;
            if k >= nbits {
                if set {
                    return Err(err(1 + i, "nonzero padding bits"));
                }
            } else if set {
                let (u, v) = column_pair(k);
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Maps a column-major upper-triangle index to its vertex pair `(i, j)`, `i < j`.
fn column_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub(super) fn emit(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
