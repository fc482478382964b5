use crate::error::{Error, Result};

use super::LinkDiagram;

/// Parses PD text.
///
/// Accepted forms:
/// * lines `X a b c d` (one crossing, labels counterclockwise from an incoming
///   under-edge) and `O k` (k crossing-free circles); `/` also separates records
///   and `#` starts a comment;
/// * the bracketed table form `[[a,b,c,d],[...],...]` (braces also accepted).
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return parse_bracketed(trimmed);
    }
    let mut crossings = Vec::new();
    let mut circles = 0usize;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("");
        for record in line.split('/') {
            let mut tokens = record.split_whitespace();
            let Some(head) = tokens.next() else { continue };
            let rest: Vec<&str> = tokens.collect();
            match head {
                "X" | "x" => {
                    if rest.len() != 4 {
                        return Err(Error::Parse(format!(
                            "crossing needs 4 labels, got {}: {:?}",
                            rest.len(),
                            record.trim()
                        )));
                    }
                    let mut t = [0i64; 4];
                    for (slot, tok) in t.iter_mut().zip(&rest) {
                        *slot = parse_int(tok)?;
                    }
                    crossings.push(t);
                }
                "O" | "o" => {
                    if rest.len() != 1 {
                        return Err(Error::Parse(format!("`O` takes one count: {:?}", record.trim())));
                    }
                    let k = parse_int(rest[0])?;
                    if k < 0 {
                        return Err(Error::Parse(format!("negative circle count {k}")));
                    }
                    circles += k as usize;
                }
                other => return Err(Error::Parse(format!("unknown record {other:?}"))),
            }
        }
    }
    LinkDiagram::new(crossings, circles)
}

fn parse_int(tok: &str) -> Result<i64> {
    tok.parse::<i64>()
        .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
}

fn parse_bracketed(text: &str) -> Result<LinkDiagram> {
    let cleaned: String = text
        .chars()
        .map(|c| match c {
            '[' | ']' | '{' | '}' | ',' => ' ',
            c => c,
        })
        .collect();
    let nums = cleaned.split_whitespace().map(parse_int).collect::<Result<Vec<_>>>()?;
    if nums.len() % 4 != 0 {
        return Err(Error::Parse(format!(
            "bracketed PD has {} labels, not a multiple of 4",
            nums.len()
        )));
    }
    let crossings = nums.chunks(4).map(|c| [c[0], c[1], c[2], c[3]]).collect();
    LinkDiagram::new(crossings, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;
    use crate::diagram::BraidWord;

    #[test]
    fn arity_violation() {
        assert!(matches!(parse_pd("X 1 2 3"), Err(Error::Parse(_))));
    }

    #[test]
    fn non_integer_token() {
        assert!(matches!(parse_pd("X 1 2 3 a"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("Y 1"), Err(Error::Parse(_))));
    }

    #[test]
    fn bracketed_form() {
        let a = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        let b = parse_pd("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn labels_are_densified() {
        let d = parse_pd("X 10 40 20 50 / X 30 60 40 10 / X 50 20 60 30").unwrap();
        let e = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn comments_and_circles() {
        let d = parse_pd("# two circles\nO 1\nO 1 # another").unwrap();
        assert_eq!(d.split_circles(), 2);
    }

    #[test]
    fn round_trip_braid_closures() {
        for w in [vec![1, 1, 1], vec![1, -2, 1, -2], vec![1, 2, 1, 2, 2], vec![]] {
            let d = braid_closure(&BraidWord::new(3, w).unwrap());
            assert_eq!(parse_pd(&d.to_pd_string()).unwrap(), d);
        }
    }
}
