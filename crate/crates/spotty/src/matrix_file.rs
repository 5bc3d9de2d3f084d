//! The line-oriented generator-matrix file format.
//!
//! ```text
//! # comments run to the end of the line
//! m=4 b=3 t=2
//! 1 0 0  u+u2 0  0
//! 0 u 0  u2   0  u3
//! 0 0 u2 0    u3 0
//! ```
//!
//! The header gives `m`, `b` and `t`, and may add `n=<bytes>`. Each following
//! non-empty line is a row of whitespace-separated ring elements; its length
//! must be a multiple of `b`. The byte count is taken from the rows. A file
//! without rows describes the zero code and uses `n` from the header, or one
//! byte if `n` is absent.

use std::collections::BTreeMap;

use crate::code::{ByteLayout, GeneratorMatrix};
use crate::error::{Error, Result};
use crate::ring::RingParams;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Header line number and `key -> (value, column)`.
type Header = (usize, BTreeMap<String, (usize, usize)>);

/// Parses a matrix file. Errors carry 1-based line and column numbers.
pub fn parse_matrix(text: &str) -> Result<GeneratorMatrix> {
    let mut header: Option<Header> = None;
    let mut raw_rows: Vec<(usize, Vec<(usize, &str)>)> = Vec::new();

    for (idx, full) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = full.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = tokens_with_columns(line);
        if tokens.is_empty() {
            continue;
        }
        if header.is_none() {
            let mut fields = BTreeMap::new();
            for (col, tok) in tokens {
                let (key, value) = tok.split_once('=').ok_or_else(|| {
                    parse_err(lineno, col, format!("expected key=value, found `{tok}`"))
                })?;
                if !matches!(key, "m" | "b" | "t" | "n") {
                    return Err(parse_err(
                        lineno,
                        col,
                        format!("unknown header key `{key}`"),
                    ));
                }
                let value: usize = value.parse().map_err(|_| {
                    parse_err(
                        lineno,
                        col + key.len() + 1,
                        format!("`{value}` is not a non-negative integer"),
                    )
                })?;
                if fields.insert(key.to_string(), (value, col)).is_some() {
                    return Err(parse_err(
                        lineno,
                        col,
                        format!("header key `{key}` given twice"),
                    ));
                }
            }
            for key in ["m", "b", "t"] {
                if !fields.contains_key(key) {
                    return Err(parse_err(lineno, 1, format!("header is missing `{key}=`")));
                }
            }
            header = Some((lineno, fields));
        } else {
            raw_rows.push((lineno, tokens));
        }
    }

    let (hline, fields) =
        header.ok_or_else(|| parse_err(1, 1, "missing header line `m=<int> b=<int> t=<int>`"))?;
    let (m, mcol) = fields["m"];
    let params = RingParams::new(m as u32).map_err(|e| parse_err(hline, mcol, e.to_string()))?;
    let (b, bcol) = fields["b"];
    let (t, tcol) = fields["t"];
    if b == 0 {
        return Err(parse_err(hline, bcol, "b must be at least 1"));
    }

    let n = match raw_rows.first() {
        Some((lineno, tokens)) => {
            if tokens.len() % b != 0 {
                return Err(parse_err(
                    *lineno,
                    tokens[0].0,
                    format!("row has {} entries, not a multiple of b={b}", tokens.len()),
                ));
            }
            let n = tokens.len() / b;
            if let Some(&(header_n, ncol)) = fields.get("n") {
                if header_n != n {
                    return Err(parse_err(
                        hline,
                        ncol,
                        format!("header says n={header_n} but rows have {n} bytes"),
                    ));
                }
            }
            n
        }
        None => fields.get("n").map(|&(n, _)| n).unwrap_or(1),
    };
    let layout = ByteLayout::new(b, t, n).map_err(|e| {
        let col = if t == 0 || t > b {
            tcol
        } else {
            fields.get("n").map(|&(_, c)| c).unwrap_or(1)
        };
        parse_err(hline, col, e.to_string())
    })?;

    let mut rows = Vec::with_capacity(raw_rows.len());
    for (lineno, tokens) in raw_rows {
        if tokens.len() != layout.len() {
            return Err(parse_err(
                lineno,
                tokens[0].0,
                format!(
                    "row has {} entries, expected N={}",
                    tokens.len(),
                    layout.len()
                ),
            ));
        }
        let row = tokens
            .iter()
            .map(|&(col, tok)| {
                params
                    .parse_element(tok)
                    .map_err(|e| parse_err(lineno, col, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    GeneratorMatrix::new(params, layout, rows)
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte_idx, tok)| (line[..byte_idx].chars().count() + 1, tok))
        .collect()
}

/// Writes a matrix back in the file format.
pub fn format_matrix(g: &GeneratorMatrix) -> String {
    let layout = g.layout();
    let mut out = format!(
        "m={} b={} t={} n={}\n",
        g.params().m(),
        layout.b(),
        layout.t(),
        layout.n()
    );
    for row in g.rows() {
        let bytes: Vec<String> = row
            .chunks(layout.b())
            .map(|byte| {
                byte.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        out.push_str(&bytes.join("  "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "\
# worked example over m=4
m=4 b=3 t=2
1 0 0  u+u2 0  0    # first row
0 u 0  u2   0  u3

0 0 u2 0    u3 0
";

    #[test]
    fn parses_example() {
        let g = parse_matrix(EXAMPLE).unwrap();
        assert_eq!(g.params().m(), 4);
        assert_eq!(g.layout(), ByteLayout::new(3, 2, 2).unwrap());
        assert_eq!(g.k(), 3);
        assert_eq!(g.rows()[0][3].to_string(), "u+u2");
        assert_eq!(parse_matrix(&format_matrix(&g)).unwrap(), g);
    }

    #[test]
    fn zero_row_files() {
        let g = parse_matrix("m=2 b=2 t=1\n").unwrap();
        assert_eq!(g.k(), 0);
        assert_eq!(g.layout().n(), 1);
        let g = parse_matrix("m=2 b=2 t=1 n=3\n").unwrap();
        assert_eq!(g.layout().len(), 6);
    }

    fn err_at(text: &str) -> (usize, usize) {
        match parse_matrix(text).unwrap_err() {
            Error::Parse { line, column, .. } => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn error_positions() {
        assert_eq!(err_at("m=4 b=3 t=4\n"), (1, 9));
        assert_eq!(err_at("# c\nm=4 b=3 t=2\n1 0 0 u 0 x\n"), (3, 11));
        assert_eq!(err_at("m=4 b=3 t=2\n1 0 0 u\n"), (2, 1));
        assert_eq!(err_at("m=4 b=3 t=2\n1 0 0\n1 0 0 0 0 0\n"), (3, 1));
        assert_eq!(err_at("m=4 b=3\n"), (1, 1));
        assert_eq!(err_at("m=4 b=3 t=2 q=1\n"), (1, 13));
        assert_eq!(err_at("m=17 b=3 t=2\n"), (1, 1));
        assert_eq!(err_at("m=4 b=x t=2\n"), (1, 7));
        assert_eq!(err_at(""), (1, 1));
        assert_eq!(err_at("m=4 b=3 t=2\n1 0 0 u4 0 0\n"), (2, 7));
    }
}
