//! Commutation, primitive roots and common roots of words.
//!
//! Two nonempty words commute exactly when they are powers of the same
//! primitive word. [`commutes`] compares `uv` with `vu` directly and
//! [`primitive_root`] goes through the border array, so the equivalence
//! between the two is a real cross-check.

use serde::Serialize;
use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the empty word has no primitive root")]
pub struct EmptyWordError;

/// `root^exponent`, with `root` primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: usize,
}

impl RootDecomposition {
    pub fn reconstruct(&self) -> Word {
        self.root.pow(self.exponent)
    }
}

/// `u·v == v·u`, compared symbol by symbol without allocating.
pub fn commutes(u: &[u8], v: &[u8]) -> bool {
    u.iter().chain(v).eq(v.iter().chain(u))
}

/// Failure function: `border[i]` is the length of the longest proper border
/// of `s[..=i]`.
pub fn border_array(s: &[u8]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Smallest period of a nonempty word: `|s|` minus its longest border.
pub fn smallest_period(s: &[u8]) -> usize {
    match border_array(s).last() {
        Some(&b) => s.len() - b,
        None => 0,
    }
}

pub fn primitive_root(u: &Word) -> Result<RootDecomposition, EmptyWordError> {
    if u.is_empty() {
        return Err(EmptyWordError);
    }
    let p = smallest_period(u);
    // u is a proper power iff its smallest period divides its length.
    let root_len = if u.len().is_multiple_of(p) { p } else { u.len() };
    Ok(RootDecomposition {
        root: u.prefix(root_len),
        exponent: u.len() / root_len,
    })
}

pub fn is_primitive(u: &Word) -> bool {
    primitive_root(u).is_ok_and(|r| r.exponent == 1)
}

/// The primitive `b` with `u = b^k`, `v = b^l`, or `None` if `u` and `v` do
/// not commute.
pub fn common_root(u: &Word, v: &Word) -> Result<Option<Word>, EmptyWordError> {
    if u.is_empty() || v.is_empty() {
        return Err(EmptyWordError);
    }
    if !commutes(u, v) {
        return Ok(None);
    }
    let ru = primitive_root(u)?;
    debug_assert_eq!(Some(&ru.root), primitive_root(v).ok().as_ref().map(|r| &r.root));
    Ok(Some(ru.root))
}
