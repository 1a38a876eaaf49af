//! Canonical label encodings for derived elements.
//!
//! Ordered pairs print as `(x,y)`, tuples as `(x,y,z)`, subsets as `{a,b}`
//! with members in label order, and coproduct summands as `0:x` / `1:x`.
//! A label is well-formed when its brackets balance and it has no comma at
//! bracket depth zero; under that rule every encoding below is injective and
//! can be split back into its parts.

use crate::error::{Error, Result};

pub fn is_well_formed(label: &str) -> bool {
    if label.is_empty() {
        return false;
    }
    let mut stack = Vec::new();
    for c in label.chars() {
        match c {
            '(' | '{' => stack.push(c),
            ')' => {
                if stack.pop() != Some('(') {
                    return false;
                }
            }
            '}' => {
                if stack.pop() != Some('{') {
                    return false;
                }
            }
            ',' if stack.is_empty() => return false,
            _ => {}
        }
    }
    stack.is_empty()
}

pub fn check(label: &str) -> Result<()> {
    if is_well_formed(label) {
        Ok(())
    } else {
        Err(Error::BadLabel(label.to_string()))
    }
}

pub fn pair(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

pub fn tuple<S: AsRef<str>>(parts: &[S]) -> String {
    let inner: Vec<&str> = parts.iter().map(AsRef::as_ref).collect();
    format!("({})", inner.join(","))
}

/// Members must already be in canonical (sorted, deduplicated) order.
pub fn subset<I, S>(members: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut out = String::from("{");
    for (i, m) in members.into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(m.as_ref());
    }
    out.push('}');
    out
}

pub fn tag(side: u8, x: &str) -> String {
    format!("{side}:{x}")
}

/// Splits `inner` at commas of bracket depth zero.
fn split_top(inner: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&inner[start..]);
    parts
}

pub fn split_tuple(label: &str) -> Option<Vec<&str>> {
    let inner = label.strip_prefix('(')?.strip_suffix(')')?;
    Some(split_top(inner))
}

pub fn split_pair(label: &str) -> Option<(&str, &str)> {
    match split_tuple(label)?.as_slice() {
        [x, y] => Some((x, y)),
        _ => None,
    }
}

pub fn split_subset(label: &str) -> Option<Vec<&str>> {
    let inner = label.strip_prefix('{')?.strip_suffix('}')?;
    if inner.is_empty() {
        return Some(Vec::new());
    }
    Some(split_top(inner))
}

pub fn split_tag(label: &str) -> Option<(u8, &str)> {
    let (side, rest) = label.split_once(':')?;
    Some((side.parse().ok()?, rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_encodings_split_back() {
        let p = pair(&pair("a", "b"), "c");
        assert_eq!(p, "((a,b),c)");
        assert_eq!(split_pair(&p), Some(("(a,b)", "c")));
        let s = subset(["(a,b)", "{x,y}"]);
        assert_eq!(split_subset(&s), Some(vec!["(a,b)", "{x,y}"]));
        assert_eq!(split_subset("{}"), Some(vec![]));
        assert_eq!(split_tag("1:0:x"), Some((1, "0:x")));
    }

    #[test]
    fn well_formedness() {
        assert!(is_well_formed("a"));
        assert!(is_well_formed("(a,b)"));
        assert!(is_well_formed("0:x"));
        assert!(!is_well_formed(""));
        assert!(!is_well_formed("a,b"));
        assert!(!is_well_formed("(a"));
        assert!(!is_well_formed("(a}"));
    }
}
