//! Text forms of generators, words, cocharacters and affine elements.
//!
//! Words: `"4 3 2 1"`, `"4,3,2,1"`, `"s4s3s2s1"`, or compact `"4321"` when
//! every generator is a single digit. The empty string and `"e"` are the
//! identity. A bracketed list `"[5,2,3,4,1]"` is a one-line
//! permutation (type A only).

use crate::affine::{AffineElement, Cocharacter};
use crate::coxeter::{CoxeterSystem, FiniteElement};
use crate::error::{Error, Result};

fn bad(what: &str, s: &str) -> Error {
    Error::Parse(format!("cannot parse {what} from {s:?}"))
}

fn int_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    let body = s.trim();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .unwrap_or(body);
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|_| bad(what, s)))
        .collect()
}

/// Generator indices of a word, unchecked against any system.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    if t.contains('s') {
        return t
            .split('s')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse().map_err(|_| bad("word", s)))
            .collect();
    }
    if t.contains(|c: char| c == ',' || c.is_whitespace()) {
        return int_list(t, "word");
    }
    t.chars()
        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("word", s)))
        .collect()
}

/// A finite Weyl group element, as a word or a bracketed permutation.
pub fn parse_finite(sys: &CoxeterSystem, s: &str) -> Result<FiniteElement> {
    let t = s.trim();
    if t.starts_with('[') {
        let perm: Vec<usize> = int_list(t, "permutation")?;
        return sys.element_from_permutation(&perm);
    }
    let word = parse_word(t)?;
    if sys.rank() > 9 && !t.contains(|c: char| c == ',' || c == 's' || c.is_whitespace()) && word.len() > 1 {
        return Err(Error::Parse(format!(
            "compact word {t:?} is ambiguous in rank {}; separate generators with spaces or commas",
            sys.rank()
        )));
    }
    sys.element_from_word(&word)
}

pub fn parse_cocharacter(s: &str) -> Result<Cocharacter> {
    let v: Vec<i64> = int_list(s, "cocharacter")?;
    if v.is_empty() {
        return Err(bad("cocharacter", s));
    }
    Ok(Cocharacter::new(v))
}

/// The display form `t[2,1,0] * w[121]` or `t[2,1,0] * p[3,2,1]`.
pub fn parse_affine(sys: &CoxeterSystem, s: &str) -> Result<AffineElement> {
    let (t, w) = s.split_once('*').ok_or_else(|| bad("affine element", s))?;
    let lambda = t
        .trim()
        .strip_prefix('t')
        .ok_or_else(|| bad("affine element", s))
        .and_then(parse_cocharacter)?;
    let w = w.trim();
    let finite = if let Some(p) = w.strip_prefix('p') {
        parse_finite(sys, p)?
    } else if let Some(body) = w.strip_prefix("w[").and_then(|b| b.strip_suffix(']')) {
        sys.element_from_word(&parse_word(body)?)?
    } else {
        parse_finite(sys, w)?
    };
    sys.check_dim(&lambda)?;
    Ok(AffineElement::new(lambda, finite))
}
