//! Small lexical helpers shared by the element-literal parser and the ring DSL.

use crate::error::{Error, Result};

/// Splits `s` on `sep` occurrences that are not nested inside `()` or `[]`.
pub fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Byte position of the last top-level `sep`, if any.
pub fn rfind_top_level(s: &str, sep: char) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => found = Some(i),
            _ => {}
        }
    }
    found
}

/// True if the whole string is wrapped in one matching pair of parentheses.
pub fn is_wrapped(s: &str) -> bool {
    if !(s.starts_with('(') && s.ends_with(')')) {
        return false;
    }
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth == 0 && i + 1 != s.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Removes one layer of wrapping parentheses if present.
pub fn strip_wrapping(s: &str) -> &str {
    if is_wrapped(s) {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

/// True if `s` contains `+`, `*` or `^` outside any parentheses.
pub fn needs_parens(s: &str) -> bool {
    ['+', '*', '^']
        .iter()
        .any(|&c| split_top_level(s, c).len() > 1)
}

pub fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits one monomial of a polynomial in `var` into `(coefficient literal, exponent)`.
/// A `None` coefficient means an implicit 1.
pub fn split_monomial<'a>(m: &'a str, var: &str) -> Result<(Option<&'a str>, u32)> {
    if m.is_empty() {
        return Err(Error::Literal {
            literal: m.to_string(),
            reason: "empty monomial".into(),
        });
    }
    if let Some(k) = var_power(m, var)? {
        return Ok((None, k));
    }
    if let Some(pos) = rfind_top_level(m, '*') {
        let (lhs, rhs) = (&m[..pos], &m[pos + 1..]);
        if let Some(k) = var_power(rhs, var)? {
            if lhs.is_empty() {
                return Err(Error::Literal {
                    literal: m.to_string(),
                    reason: "missing coefficient before '*'".into(),
                });
            }
            return Ok((Some(lhs), k));
        }
    }
    Ok((Some(m), 0))
}

fn var_power(s: &str, var: &str) -> Result<Option<u32>> {
    if s == var {
        return Ok(Some(1));
    }
    if let Some(rest) = s.strip_prefix(var).and_then(|r| r.strip_prefix('^')) {
        return rest.parse::<u32>().map(Some).map_err(|_| Error::Literal {
            literal: s.to_string(),
            reason: format!("bad exponent '{rest}'"),
        });
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn top_level_split() {
        assert_eq!(split_top_level("(1,2),3", ','), vec!["(1,2)", "3"]);
        assert_eq!(split_top_level("x^2+(x+1)*y", '+'), vec!["x^2", "(x+1)*y"]);
    }

    #[test]
    fn wrapping() {
        assert!(is_wrapped("(a,b)"));
        assert!(!is_wrapped("(a)+(b)"));
        assert_eq!(strip_wrapping("(x+1)"), "x+1");
    }

    #[test]
    fn monomials() {
        assert_eq!(split_monomial("x", "x").unwrap(), (None, 1));
        assert_eq!(split_monomial("x^3", "x").unwrap(), (None, 3));
        assert_eq!(split_monomial("2*x^2", "x").unwrap(), (Some("2"), 2));
        assert_eq!(split_monomial("(x+1)*y", "y").unwrap(), (Some("(x+1)"), 1));
        assert_eq!(split_monomial("2*x", "y").unwrap(), (Some("2*x"), 0));
        assert_eq!(split_monomial("7", "x").unwrap(), (Some("7"), 0));
        assert!(split_monomial("x^a", "x").is_err());
    }
}
