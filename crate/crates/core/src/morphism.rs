//! Binary morphisms `h: {0,1}* -> A*` and their unique decoding.
//!
//! A binary morphism is injective exactly when its two images do not
//! commute. For the injective case [`decode`] recovers the preimage by
//! reducing the code until it is either block-decodable or prefix-free:
//!
//! * `|x| = |y|`: read fixed-size blocks.
//! * `x` a proper prefix of `y = x·y'`: `h = g∘f` with `g = (x, y')` and
//!   `f = (0, 01)`. Decode under `g`, then invert `f`. The larger image
//!   shrinks on every step.
//! * neither a prefix of the other: greedy, because at most one image can
//!   match at any position.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{commutes, common_root, primitive_root, RootDecomposition};
use crate::word::{Word, ONE, ZERO};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("symbol {symbol:?} at position {position} is not 0 or 1")]
    NonBinarySymbol { position: usize, symbol: char },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("images commute, so the morphism is not injective and has no unique decoding")]
    Commuting,
    #[error("input is not in the image of the morphism (failure at position {position})")]
    NoDecode { position: usize },
}

/// `h(0) = image0`, `h(1) = image1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BinaryMorphism {
    #[serde(rename = "0")]
    pub image0: Word,
    #[serde(rename = "1")]
    pub image1: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub commuting: bool,
    pub injective: bool,
    pub root0: Option<RootDecomposition>,
    pub root1: Option<RootDecomposition>,
    pub shared_root: Option<Word>,
}

impl BinaryMorphism {
    pub fn new(image0: impl Into<Word>, image1: impl Into<Word>) -> Self {
        BinaryMorphism {
            image0: image0.into(),
            image1: image1.into(),
        }
    }

    pub fn image(&self, bit: u8) -> &Word {
        if bit == ONE {
            &self.image1
        } else {
            &self.image0
        }
    }

    pub fn commuting(&self) -> bool {
        commutes(&self.image0, &self.image1)
    }

    /// Image length of `a` without building it. Assumes `a` is binary.
    pub fn image_len(&self, a: &[u8]) -> usize {
        a.iter().map(|&c| self.image(c).len()).sum()
    }

    /// `h(a)`; rejects any symbol other than `'0'`/`'1'`.
    pub fn apply(&self, a: &[u8]) -> Result<Word, MorphismError> {
        if let Some(position) = a.iter().position(|&c| c != ZERO && c != ONE) {
            return Err(MorphismError::NonBinarySymbol {
                position,
                symbol: a[position] as char,
            });
        }
        let mut out = Vec::with_capacity(self.image_len(a));
        for &c in a {
            out.extend_from_slice(self.image(c));
        }
        Ok(Word::from(out))
    }

    pub fn classify(&self) -> MorphismReport {
        let commuting = self.commuting();
        let root0 = primitive_root(&self.image0).ok();
        let root1 = primitive_root(&self.image1).ok();
        let shared_root = common_root(&self.image0, &self.image1).ok().flatten();
        MorphismReport {
            commuting,
            injective: !commuting,
            root0,
            root1,
            shared_root,
        }
    }

    /// The unique `a` with `h(a) = s`.
    pub fn decode(&self, s: &[u8]) -> Result<Word, DecodeError> {
        if self.commuting() {
            return Err(DecodeError::Commuting);
        }
        decode_code(&self.image0, &self.image1, s).map(Word::from)
    }

    /// Same images with 0 and 1 exchanged.
    pub fn swapped(&self) -> BinaryMorphism {
        BinaryMorphism::new(self.image1.clone(), self.image0.clone())
    }
}

/// Decodes `s` under the non-commuting pair `(x, y)`.
fn decode_code(x: &[u8], y: &[u8], s: &[u8]) -> Result<Vec<u8>, DecodeError> {
    debug_assert!(!x.is_empty() && !y.is_empty() && x != y);
    if x.len() == y.len() {
        decode_blocks(x, y, s)
    } else if y.starts_with(x) {
        decode_prefix_reduced(x, y, s)
    } else if x.starts_with(y) {
        let mut a = decode_prefix_reduced(y, x, s)?;
        for c in &mut a {
            *c = if *c == ZERO { ONE } else { ZERO };
        }
        Ok(a)
    } else {
        decode_greedy(x, y, s)
    }
}

fn decode_blocks(x: &[u8], y: &[u8], s: &[u8]) -> Result<Vec<u8>, DecodeError> {
    let k = x.len();
    let mut out = Vec::with_capacity(s.len() / k);
    for (i, block) in s.chunks(k).enumerate() {
        out.push(if block == x {
            ZERO
        } else if block == y {
            ONE
        } else {
            return Err(DecodeError::NoDecode { position: i * k });
        });
    }
    Ok(out)
}

/// Neither image is a prefix of the other, so if both matched at one
/// position the shorter would be a prefix of the longer. At most one can
/// match and the first match is forced.
fn decode_greedy(x: &[u8], y: &[u8], s: &[u8]) -> Result<Vec<u8>, DecodeError> {
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < s.len() {
        let rest = &s[pos..];
        if rest.starts_with(x) {
            out.push(ZERO);
            pos += x.len();
        } else if rest.starts_with(y) {
            out.push(ONE);
            pos += y.len();
        } else {
            return Err(DecodeError::NoDecode { position: pos });
        }
    }
    Ok(out)
}

/// `y = x·y'`: decode under `(x, y')` to `u`, then read `u` as an image of
/// `f = (0 -> 0, 1 -> 01)`. A `1` that does not follow a freshly read `0`
/// means `u` is not an `f`-image.
fn decode_prefix_reduced(x: &[u8], y: &[u8], s: &[u8]) -> Result<Vec<u8>, DecodeError> {
    let tail = &y[x.len()..];
    let u = decode_code(x, tail, s)?;
    let mut out = Vec::with_capacity(u.len());
    let mut i = 0;
    while i < u.len() {
        match (u[i], u.get(i + 1)) {
            (ZERO, Some(&ONE)) => {
                out.push(ONE);
                i += 2;
            }
            (ZERO, _) => {
                out.push(ZERO);
                i += 1;
            }
            _ => {
                // Report where the offending block starts in s.
                let position = u[..i]
                    .iter()
                    .map(|&c| if c == ZERO { x.len() } else { tail.len() })
                    .sum();
                return Err(DecodeError::NoDecode { position });
            }
        }
    }
    Ok(out)
}
