//! Plain-text comparator tables.
//!
//! ```text
//! # comment
//! n=4
//! 0 1
//! 2 3
//! ```
//!
//! The first non-comment line is `n=<channels>`, every following line one
//! `<low> <high>` comparator. `#` starts a comment anywhere on a line.

use std::fmt::Write;

use crate::{depth, Comparator, Family, Network, NetworkError};

pub fn parse_table(text: &str, family: Family) -> Result<Network, NetworkError> {
    let mut n = None;
    let mut comparators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| NetworkError::Parse { line: line_no, message };
        let Some(channels) = n else {
            let value = line
                .strip_prefix("n=")
                .ok_or_else(|| parse_err(format!("expected `n=<channels>`, found `{line}`")))?;
            n = Some(
                value
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("bad channel count `{value}`: {e}")))?,
            );
            continue;
        };
        let mut fields = line.split_whitespace();
        let (Some(low), Some(high), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(format!("expected `<low> <high>`, found `{line}`")));
        };
        let low: usize = low.parse().map_err(|e| parse_err(format!("bad channel `{low}`: {e}")))?;
        let high: usize = high.parse().map_err(|e| parse_err(format!("bad channel `{high}`: {e}")))?;
        if low >= high || high >= channels {
            return Err(NetworkError::InvalidComparator { low, high, n: channels });
        }
        comparators.push(Comparator::new(low, high));
    }
    let n = n.ok_or(NetworkError::Parse { line: 0, message: "missing `n=<channels>` line".into() })?;
    Network::new(n, comparators, family)
}

/// Formats `net` as a table with a one-line summary comment. Output is
/// deterministic, so regenerating a file yields identical bytes.
pub fn format_table(net: &Network) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# {} network: {} comparators, {} levels",
        net.family().label(),
        net.size(),
        depth(net)
    )
    .unwrap();
    writeln!(out, "n={}", net.channels()).unwrap();
    for c in net.comparators() {
        writeln!(out, "{} {}", c.low(), c.high()).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let net = parse_table("# hi\n\nn=3 # three\n0 1\n1 2 # tail\n", Family::Best).unwrap();
        assert_eq!(net.channels(), 3);
        assert_eq!(net.comparators(), &[Comparator::new(0, 1), Comparator::new(1, 2)]);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(parse_table("0 1\n", Family::Best), Err(NetworkError::Parse { line: 1, .. })));
        assert!(matches!(parse_table("n=3\n0 1 2\n", Family::Best), Err(NetworkError::Parse { line: 2, .. })));
        assert!(matches!(parse_table("n=3\n2 1\n", Family::Best), Err(NetworkError::InvalidComparator { .. })));
        assert!(matches!(parse_table("n=3\n0 3\n", Family::Best), Err(NetworkError::InvalidComparator { .. })));
        assert!(matches!(parse_table("# nothing\n", Family::Best), Err(NetworkError::Parse { line: 0, .. })));
    }

    #[test]
    fn format_then_parse_is_identity() {
        let net = crate::generate_bose_nelson(7);
        let text = format_table(&net);
        assert!(text.starts_with("# BN-R network: 16 comparators, 7 levels\nn=7\n"));
        assert_eq!(parse_table(&text, net.family()).unwrap(), net);
    }
}
