//! Text format: a line `n`, then `n` rows of `n` integers, row `i` listing
//! `i ◁ 0 … i ◁ (n-1)`. Lines starting with `#` and blank lines are ignored.
//!
//! Maps between quandles: a line `n m` (source and target orders), then the
//! `n` images separated by whitespace over any number of lines.

use super::{FiniteQuandle, QuandleError};

pub fn parse_table(text: &str) -> Result<FiniteQuandle, QuandleError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(QuandleError::Empty)?;
    let n: usize = header.parse().map_err(|_| QuandleError::Parse {
        line: hline,
        message: format!("expected the order, found {header:?}"),
    })?;
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    let mut rows = Vec::with_capacity(n);
    for (line, l) in lines {
        if rows.len() == n {
            return Err(QuandleError::Parse {
                line,
                message: "more rows than the stated order".into(),
            });
        }
        let row = l
            .split_whitespace()
            .map(|t| t.parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| QuandleError::Parse {
                line,
                message: e.to_string(),
            })?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(QuandleError::Parse {
            line: text.lines().count(),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    FiniteQuandle::validate(&rows)
}

pub fn write_table(q: &FiniteQuandle) -> String {
    let mut out = format!("{}\n", q.order());
    for a in 0..q.order() as u32 {
        let row: Vec<String> = q.row(a).iter().map(u32::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Returns `(target order, images)`.
pub fn parse_map(text: &str) -> Result<(usize, Vec<u32>), QuandleError> {
    let mut tokens = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i, t)));
    let mut number = |what: &str| -> Result<usize, QuandleError> {
        let (line, tok) = tokens.next().ok_or_else(|| QuandleError::Parse {
            line: text.lines().count(),
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| QuandleError::Parse {
            line,
            message: format!("expected {what}, found {tok:?}"),
        })
    };
    let n = number("source order")?;
    let m = number("target order")?;
    let mut images = Vec::with_capacity(n);
    for _ in 0..n {
        let v = number("an image")?;
        if v >= m {
            return Err(QuandleError::EntryOutOfRange {
                row: images.len(),
                col: 0,
                value: v as i64,
                order: m,
            });
        }
        images.push(v as u32);
    }
    if let Ok(extra) = number("end of file") {
        return Err(QuandleError::Parse {
            line: 0,
            message: format!("trailing entry {extra}"),
        });
    }
    Ok((m, images))
}

pub fn write_map(images: &[u32], target_order: usize) -> String {
    let parts: Vec<String> = images.iter().map(u32::to_string).collect();
    format!("{} {}\n{}\n", images.len(), target_order, parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_files() {
        let (m, f) = parse_map("# projection\n4 2\n0 1\n0 1\n").unwrap();
        assert_eq!((m, f.clone()), (2, vec![0, 1, 0, 1]));
        assert_eq!(parse_map(&write_map(&f, 2)).unwrap(), (2, f));
        assert!(parse_map("2 2\n0\n").is_err());
        assert!(parse_map("2 2\n0 2\n").is_err());
        assert!(parse_map("1 2\n0 1\n").is_err());
    }

    #[test]
    fn round_trip_and_comments() {
        let text = "# dihedral of order 3\n3\n0 2 1\n\n2 1 0\n1 0 2\n";
        let q = parse_table(text).unwrap();
        assert_eq!(q.op(0, 1), 2);
        assert_eq!(parse_table(&write_table(&q)).unwrap(), q);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_table("x\n"),
            Err(QuandleError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_table("2\n0 0\n"),
            Err(QuandleError::Parse { .. })
        ));
        assert!(matches!(
            parse_table("1\n0\n0\n"),
            Err(QuandleError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_table("2\n0 a\n1 1\n"),
            Err(QuandleError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_table("# nothing\n"),
            Err(QuandleError::Empty)
        ));
    }
}
