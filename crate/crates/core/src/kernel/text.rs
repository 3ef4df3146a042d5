//! Plain-text table format.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! 0
//! ```
//!
//! The first line is the order `n`, then `n` rows of `n` space-separated
//! indices, then the identity index. Blank lines and `#` comments are ignored.

use super::FiniteGroup;
use crate::{Error, Result};

impl FiniteGroup {
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for a in self.elements() {
            let row: Vec<String> = self.row(a).map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push_str(&format!("{}\n", self.identity()));
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines =
            text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).enumerate();
        let parse = |lineno: usize, tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: expected an index, got {tok:?}", lineno + 1)))
        };
        let (i, header) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let order = parse(i, header)?;
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let (i, line) =
                lines.next().ok_or_else(|| Error::Parse(format!("expected {order} table rows, got {}", rows.len())))?;
            rows.push(line.split_whitespace().map(|t| parse(i, t)).collect::<Result<Vec<_>>>()?);
        }
        let (i, id_line) = lines.next().ok_or_else(|| Error::Parse("missing identity line".into()))?;
        let identity = parse(i, id_line)?;
        if let Some((i, _)) = lines.next() {
            return Err(Error::Parse(format!("unexpected content after identity (line {})", i + 1)));
        }
        let group = FiniteGroup::from_table(rows)?;
        if group.identity() != identity {
            return Err(Error::Parse(format!(
                "declared identity {identity} but the table's identity is {}",
                group.identity()
            )));
        }
        Ok(group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        let text = s3.to_text();
        assert!(text.starts_with("6\n"));
        let back = FiniteGroup::from_text(&text).unwrap();
        assert_eq!(back.rows(), s3.rows());
        assert_eq!(back.identity(), s3.identity());
    }

    #[test]
    fn documented_example_parses() {
        let g = FiniteGroup::from_text("# Z3\n3\n0 1 2\n1 2 0\n2 0 1\n0\n").unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(FiniteGroup::from_text(""), Err(Error::Parse(_))));
        assert!(matches!(FiniteGroup::from_text("2\n0 1\n1 0\n"), Err(Error::Parse(_))));
        assert!(matches!(FiniteGroup::from_text("2\n0 1\n1 0\n1\n"), Err(Error::Parse(_))));
        assert!(matches!(FiniteGroup::from_text("2\n0 x\n1 0\n0\n"), Err(Error::Parse(_))));
        assert!(matches!(FiniteGroup::from_text("2\n0 1\n1 1\n0\n"), Err(Error::MissingInverse(1))));
    }
}
