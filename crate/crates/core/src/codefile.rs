//! Line-oriented code files.
//!
//! ```text
//! # comment
//! n = 8
//! r = 1
//! graph = ring
//! distance = 3
//! word = 00000000
//! word = IZZIIZZI
//! ```
//!
//! `graph = adjacency:` is followed by `n` lines of `{0,1}`. Words may be
//! written as bit strings or Z-strings and are written back as bit strings.

use crate::bits::{format_bits, parse_bits};
use crate::code::OcwsCode;
use crate::error::{Error, Result};
use crate::graph::Graph;

enum GraphSpec {
    Ring,
    Adjacency(Vec<(usize, String)>),
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(line: usize, key: &str, value: &str) -> Result<usize> {
    value.parse().map_err(|_| {
        parse_err(
            line,
            format!("{key}: expected a non-negative integer, got {value:?}"),
        )
    })
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, key: &str) -> Result<()> {
    if slot.is_some() {
        return Err(parse_err(line, format!("duplicate key {key:?}")));
    }
    *slot = Some(value);
    Ok(())
}

pub fn parse_code_file(text: &str) -> Result<OcwsCode> {
    let mut n = None;
    let mut r = None;
    let mut distance = None;
    let mut graph: Option<GraphSpec> = None;
    let mut words: Vec<(usize, String)> = Vec::new();
    let mut in_adjacency = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if in_adjacency && !line.contains('=') {
            if let Some(GraphSpec::Adjacency(rows)) = graph.as_mut() {
                rows.push((line_no, line.to_string()));
            }
            continue;
        }
        in_adjacency = false;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("expected `key = value`, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "n" => set_once(&mut n, parse_usize(line_no, key, value)?, line_no, key)?,
            "r" => set_once(&mut r, parse_usize(line_no, key, value)?, line_no, key)?,
            "distance" => set_once(
                &mut distance,
                parse_usize(line_no, key, value)?,
                line_no,
                key,
            )?,
            "graph" => {
                let spec = match value {
                    "ring" => GraphSpec::Ring,
                    "adjacency:" | "adjacency" => {
                        in_adjacency = true;
                        GraphSpec::Adjacency(Vec::new())
                    }
                    other => {
                        return Err(parse_err(
                            line_no,
                            format!("graph: expected `ring` or `adjacency:`, got {other:?}"),
                        ))
                    }
                };
                set_once(&mut graph, spec, line_no, key)?;
            }
            "word" => words.push((line_no, value.to_string())),
            other => return Err(parse_err(line_no, format!("unknown key {other:?}"))),
        }
    }

    let n = n.ok_or_else(|| parse_err(0, "missing key \"n\""))?;
    let r = r.ok_or_else(|| parse_err(0, "missing key \"r\""))?;
    let graph = match graph.ok_or_else(|| parse_err(0, "missing key \"graph\""))? {
        GraphSpec::Ring => Graph::ring(n)?,
        GraphSpec::Adjacency(rows) => {
            if rows.len() != n {
                return Err(parse_err(
                    rows.last().map_or(0, |r| r.0),
                    format!("adjacency: expected {n} rows, got {}", rows.len()),
                ));
            }
            let mut matrix = Vec::with_capacity(n);
            for (line_no, row) in rows {
                let bits: Vec<bool> = row
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(parse_err(
                            line_no,
                            format!("adjacency row {row:?}: invalid character {c:?}"),
                        )),
                    })
                    .collect::<Result<_>>()?;
                matrix.push(bits);
            }
            Graph::from_adjacency(&matrix)?
        }
    };

    let mut packed = Vec::with_capacity(words.len());
    for (line_no, w) in words {
        let (bits, len) = parse_bits(&w).map_err(|e| parse_err(line_no, format!("word: {e}")))?;
        if len != n {
            return Err(parse_err(
                line_no,
                format!("word {w:?} has length {len}, expected {n}"),
            ));
        }
        packed.push(bits);
    }
    OcwsCode::new(graph, r, packed, distance)
}

/// Canonical text form; `parse_code_file(write_code_file(c)) == c`.
pub fn write_code_file(code: &OcwsCode) -> String {
    let mut out = String::new();
    out.push_str(&format!("n = {}\n", code.n()));
    out.push_str(&format!("r = {}\n", code.r()));
    if code.graph().is_ring() {
        out.push_str("graph = ring\n");
    } else {
        out.push_str("graph = adjacency:\n");
        for row in code.graph().adjacency_lines() {
            out.push_str(&row);
            out.push('\n');
        }
    }
    if let Some(d) = code.claimed_distance() {
        out.push_str(&format!("distance = {d}\n"));
    }
    for &w in code.words() {
        out.push_str(&format!("word = {}\n", format_bits(w, code.n())));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CODE_8113: &str =
        "n = 8\nr = 1\ngraph = ring\ndistance = 3\nword = 00000000\nword = 01100110\n";

    #[test]
    fn parses_8113() {
        let code = parse_code_file(CODE_8113).unwrap();
        assert_eq!(code.dimension(), 2);
        assert_eq!(code.claimed_distance(), Some(3));
        assert_eq!(write_code_file(&code), CODE_8113);
    }

    #[test]
    fn accepts_zstrings_and_comments() {
        let text = "# [[9,3,1,3]]\nn = 9\nr = 1\ngraph = ring   # nine-ring\n\
                    word = IIIIIIIII\nword = IZIIZZIZI\nword = 011111000\n";
        let code = parse_code_file(text).unwrap();
        assert_eq!(code.dimension(), 3);
        assert_eq!(format_bits(code.words()[1], 9), "010011010");
        let canonical = write_code_file(&code);
        assert_eq!(
            write_code_file(&parse_code_file(&canonical).unwrap()),
            canonical
        );
    }

    #[test]
    fn adjacency_graph() {
        let text = "n = 3\nr = 0\ngraph = adjacency:\n010\n100\n000\nword = 000\nword = 110\n";
        let code = parse_code_file(text).unwrap();
        assert!(code.graph().has_edge(0, 1));
        assert!(!code.graph().is_ring());
        assert_eq!(write_code_file(&code), text);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_code_file("n = 5\nr = 2\ngraph = ring\ncolour = red\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 4,
                message: "unknown key \"colour\"".into()
            }
        );

        let e = parse_code_file("n = 5\nr = 2\ngraph = ring\nword = 0120\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));

        let e = parse_code_file("n = 5\nr = 2\ngraph = ring\nword = 0000\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));

        let e = parse_code_file("n = 3\nr = 0\ngraph = adjacency:\n011\n100\n000\nword = 000\n")
            .unwrap_err();
        assert_eq!(e, Error::Asymmetric { row: 1, col: 3 });

        let e = parse_code_file("n = 5\nr = 2\ngraph = ring\nword = 00001\n").unwrap_err();
        assert!(matches!(e, Error::WordOnGauge { qubit: 5, .. }));

        assert!(parse_code_file("r = 1\ngraph = ring\nword = 000\n").is_err());
        assert!(parse_code_file("n = 3\nn = 3\n").is_err());
    }
}
