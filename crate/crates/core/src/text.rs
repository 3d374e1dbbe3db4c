//! Shared tokenizer for the `c*basis[...]` text renderings.

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use num_traits::One;

/// Splits a signed sum into `(coefficient, monomial body)` pairs. Accepts
/// ASCII `-` and the Unicode minus. Brackets are never split.
pub(crate) fn parse_terms(text: &str) -> Result<Vec<(Rational, String)>> {
    let text = text.replace('\u{2212}', "-");
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    let mut sign = 1i64;
    let flush = |cur: &mut String, sign: i64, terms: &mut Vec<(Rational, String)>| -> Result<()> {
        let t = cur.trim();
        if t.is_empty() {
            cur.clear();
            return Ok(());
        }
        let (c, body) = split_coeff(t)?;
        terms.push((c * Rational::from_integer(sign.into()), body));
        cur.clear();
        Ok(())
    };
    for ch in text.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            ']' | ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.trim_end().ends_with('^') => {
                if cur.trim().is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                    continue;
                }
                flush(&mut cur, sign, &mut terms)?;
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => cur.push(ch),
        }
    }
    flush(&mut cur, sign, &mut terms)?;
    Ok(terms)
}

fn split_coeff(term: &str) -> Result<(Rational, String)> {
    let term = term.trim();
    let numeric = |s: &str| !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == '/' || c.is_whitespace());
    if numeric(term) {
        return Ok((parse_rational(term)?, String::new()));
    }
    match term.split_once('*') {
        Some((c, body)) if numeric(c) => Ok((parse_rational(c)?, body.trim().to_string())),
        _ => {
            if term.starts_with(|c: char| c.is_ascii_digit()) {
                return Err(Error::Parse(format!("cannot read term `{term}`")));
            }
            Ok((Rational::one(), term.to_string()))
        }
    }
}

/// Reads `[a,b,c]` (brackets optional when empty) into integers.
pub(crate) fn parse_index_list(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{s}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad index `{p}` in `{s}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn splits_signed_terms() {
        let t = parse_terms("1 - 3*s[1] + 1/2*s[2,1] \u{2212} s[1,1]").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t[0], (int(1), String::new()));
        assert_eq!(t[1], (int(-3), "s[1]".to_string()));
        assert_eq!(t[2], (frac(1, 2), "s[2,1]".to_string()));
        assert_eq!(t[3], (int(-1), "s[1,1]".to_string()));
    }

    #[test]
    fn leading_minus() {
        let t = parse_terms("-x^2*y").unwrap();
        assert_eq!(t, vec![(int(-1), "x^2*y".to_string())]);
    }

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("[1,0,2]").unwrap(), vec![1, 0, 2]);
        assert_eq!(parse_index_list("[]").unwrap(), Vec::<u64>::new());
        assert!(parse_index_list("1,2").is_err());
    }
}
