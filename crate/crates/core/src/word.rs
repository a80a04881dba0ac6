//! Finite words and bounded prefixes of infinite words.
//!
//! A [`Word`] is an immutable run of byte-sized symbols. Internally every
//! index is 0-based and half-open; [`Word::paper_slice`] is the single
//! 1-based inclusive accessor, kept so worked examples written in the usual
//! `x[i,j]` notation can be checked verbatim.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// The two domain symbols of a binary morphism.
pub const ZERO: u8 = b'0';
pub const ONE: u8 = b'1';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("slice index {index} out of range for word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("slice start {start} exceeds end {end}")]
    InvertedRange { start: usize, end: usize },
    #[error("stream exhausted: requested {requested} symbols, only {available} exist")]
    Exhausted { requested: usize, available: usize },
    #[error("generator is not prolongable on {seed:?}: {reason}")]
    NotProlongable { seed: char, reason: &'static str },
    #[error("generator has no image for symbol {0:?}")]
    MissingImage(char),
    #[error("period must be nonempty")]
    EmptyPeriod,
}

/// A finite word over byte symbols.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<u8>) -> Self {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// `self` repeated `times` times.
    pub fn pow(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// 0-based half-open sub-word.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Sub-word at 1-based inclusive positions `i..=j`.
    pub fn paper_slice(&self, i: usize, j: usize) -> Result<Word, WordError> {
        let len = self.len();
        for index in [i, j] {
            if index == 0 || index > len {
                return Err(WordError::IndexOutOfRange { index, len });
            }
        }
        if i > j {
            return Err(WordError::InvertedRange { start: i, end: j });
        }
        Ok(self.slice(i - 1, j))
    }

    /// Whether every symbol is `'0'` or `'1'`.
    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&c| c == ZERO || c == ONE)
    }

    /// Swap `'0'` and `'1'`, leaving other symbols alone.
    pub fn complement(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|&c| match c {
                    ZERO => ONE,
                    ONE => ZERO,
                    other => other,
                })
                .collect(),
        )
    }
}

impl Deref for Word {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word(s.to_vec())
    }
}

impl From<Vec<u8>> for Word {
    fn from(s: Vec<u8>) -> Self {
        Word(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.0 {
            write!(f, "{}", c as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

// Each byte is written as the char with the same code point, so the mapping
// is lossless even for non-ASCII symbols.
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A symbol-to-word substitution over an arbitrary byte alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    images: BTreeMap<u8, Word>,
}

impl Substitution {
    pub fn new(images: BTreeMap<u8, Word>) -> Self {
        Substitution { images }
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (u8, &'a str)>) -> Self {
        Substitution {
            images: pairs.into_iter().map(|(c, w)| (c, Word::from(w))).collect(),
        }
    }

    pub fn image(&self, symbol: u8) -> Option<&Word> {
        self.images.get(&symbol)
    }

    pub fn apply(&self, word: &[u8]) -> Result<Word, WordError> {
        let mut out = Vec::new();
        for &c in word {
            let image = self.image(c).ok_or(WordError::MissingImage(c as char))?;
            out.extend_from_slice(image);
        }
        Ok(Word(out))
    }
}

/// Supplier of finite prefixes of an infinite (or explicitly finite) word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordStream {
    /// Fixed point of a prolongable substitution, grown from `seed`.
    Morphic { generator: Substitution, seed: u8 },
    /// `preperiod · period^ω`.
    UltimatelyPeriodic { preperiod: Word, period: Word },
    /// A stored finite word; asking for more than it holds is an error.
    Explicit(Word),
}

impl WordStream {
    /// Validates prolongability and that every reachable symbol has an image.
    pub fn morphic(generator: Substitution, seed: u8) -> Result<Self, WordError> {
        let seed_char = seed as char;
        let first = generator
            .image(seed)
            .ok_or(WordError::MissingImage(seed_char))?;
        if first.first() != Some(&seed) {
            return Err(WordError::NotProlongable {
                seed: seed_char,
                reason: "image of the seed does not begin with the seed",
            });
        }
        if first.len() < 2 {
            return Err(WordError::NotProlongable {
                seed: seed_char,
                reason: "image of the seed is shorter than two symbols",
            });
        }
        let mut pending = vec![seed];
        let mut seen = std::collections::BTreeSet::from([seed]);
        while let Some(c) = pending.pop() {
            let image = generator.image(c).ok_or(WordError::MissingImage(c as char))?;
            for &d in image.iter() {
                if seen.insert(d) {
                    pending.push(d);
                }
            }
        }
        Ok(WordStream::Morphic { generator, seed })
    }

    pub fn ultimately_periodic(preperiod: Word, period: Word) -> Result<Self, WordError> {
        if period.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        Ok(WordStream::UltimatelyPeriodic { preperiod, period })
    }

    /// Thue–Morse word, fixed point of `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        Self::morphic(Substitution::from_pairs([(ZERO, "01"), (ONE, "10")]), ZERO)
            .expect("thue-morse generator is prolongable")
    }

    /// Fibonacci word, fixed point of `0 -> 01, 1 -> 0`.
    pub fn fibonacci() -> Self {
        Self::morphic(Substitution::from_pairs([(ZERO, "01"), (ONE, "0")]), ZERO)
            .expect("fibonacci generator is prolongable")
    }

    /// Built-in streams registered by name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "thue-morse" => Some(Self::thue_morse()),
            "fibonacci" => Some(Self::fibonacci()),
            _ => None,
        }
    }

    /// The first `n` symbols.
    pub fn prefix(&self, n: usize) -> Result<Word, WordError> {
        match self {
            WordStream::Explicit(word) => {
                if n > word.len() {
                    Err(WordError::Exhausted {
                        requested: n,
                        available: word.len(),
                    })
                } else {
                    Ok(word.prefix(n))
                }
            }
            WordStream::UltimatelyPeriodic { preperiod, period } => Ok(Word(
                preperiod
                    .iter()
                    .chain(period.iter().cycle())
                    .take(n)
                    .copied()
                    .collect(),
            )),
            WordStream::Morphic { generator, seed } => {
                let mut current = Word(vec![*seed]);
                while current.len() < n {
                    let next = generator.apply(&current)?;
                    // g^(k+1)(s) = g^k(s) g^k(u); once g^k(u) is empty it stays empty.
                    if next.len() == current.len() {
                        return Err(WordError::Exhausted {
                            requested: n,
                            available: current.len(),
                        });
                    }
                    current = next;
                }
                current.0.truncate(n);
                Ok(current)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    #[test]
    fn paper_slice_examples() {
        let x = w("0100110");
        assert_eq!(x.paper_slice(2, 5).unwrap(), w("1001"));
        assert_eq!(x.paper_slice(1, 7).unwrap(), x);
        assert_eq!(x.paper_slice(3, 3).unwrap(), w(&"0100110"[2..3]));
    }

    #[test]
    fn paper_slice_errors_name_the_index() {
        let x = w("0100110");
        assert_eq!(
            x.paper_slice(0, 3),
            Err(WordError::IndexOutOfRange { index: 0, len: 7 })
        );
        assert_eq!(
            x.paper_slice(2, 8),
            Err(WordError::IndexOutOfRange { index: 8, len: 7 })
        );
        assert_eq!(
            x.paper_slice(5, 2),
            Err(WordError::InvertedRange { start: 5, end: 2 })
        );
        assert!(Word::empty().paper_slice(1, 1).is_err());
    }

    /// Independent Thue–Morse oracle: t(i) is the parity of the popcount of i.
    fn thue_morse_oracle(n: usize) -> Word {
        Word((0..n)
            .map(|i| if (i as u32).count_ones().is_multiple_of(2) { ZERO } else { ONE })
            .collect())
    }

    /// Independent Fibonacci oracle: s_{k+1} = s_k s_{k-1}.
    fn fibonacci_oracle(n: usize) -> Word {
        let (mut prev, mut cur) = (b"0".to_vec(), b"01".to_vec());
        while cur.len() < n {
            let next = [cur.as_slice(), prev.as_slice()].concat();
            prev = cur;
            cur = next;
        }
        cur.truncate(n);
        Word(cur)
    }

    #[test]
    fn stream_prefix_examples() {
        assert_eq!(WordStream::thue_morse().prefix(8).unwrap(), w("01101001"));
        assert_eq!(thue_morse_oracle(8), w("01101001"));
        let up = WordStream::ultimately_periodic(w("a"), w("bc")).unwrap();
        assert_eq!(up.prefix(7).unwrap(), w("abcbcbc"));
        assert_eq!(WordStream::fibonacci().prefix(8).unwrap(), w("01001010"));
        assert_eq!(fibonacci_oracle(8), w("01001010"));
    }

    #[test]
    fn builtins_match_closed_form_oracles() {
        assert_eq!(WordStream::thue_morse().prefix(1 << 14).unwrap(), thue_morse_oracle(1 << 14));
        assert_eq!(WordStream::fibonacci().prefix(10_000).unwrap(), fibonacci_oracle(10_000));
    }

    #[test]
    fn thue_morse_power_of_two_prefix_is_iterate() {
        let g = Substitution::from_pairs([(ZERO, "01"), (ONE, "10")]);
        let tm = WordStream::thue_morse();
        let mut iterate = w("0");
        for k in 0..=14 {
            assert_eq!(tm.prefix(1 << k).unwrap(), iterate, "k = {k}");
            iterate = g.apply(&iterate).unwrap();
        }
    }

    #[test]
    fn stream_errors() {
        let e = WordStream::Explicit(w("abc"));
        assert_eq!(e.prefix(3).unwrap(), w("abc"));
        assert_eq!(
            e.prefix(4),
            Err(WordError::Exhausted { requested: 4, available: 3 })
        );
        let bad = Substitution::from_pairs([(ZERO, "10"), (ONE, "1")]);
        assert!(matches!(
            WordStream::morphic(bad, ZERO),
            Err(WordError::NotProlongable { .. })
        ));
        let short = Substitution::from_pairs([(ZERO, "0")]);
        assert!(matches!(
            WordStream::morphic(short, ZERO),
            Err(WordError::NotProlongable { .. })
        ));
        let missing = Substitution::from_pairs([(ZERO, "02")]);
        assert_eq!(
            WordStream::morphic(missing, ZERO),
            Err(WordError::MissingImage('2'))
        );
        assert_eq!(
            WordStream::ultimately_periodic(w("a"), Word::empty()),
            Err(WordError::EmptyPeriod)
        );
        // 0 -> 01, 1 -> ε has the finite fixed point "01".
        let finite = Substitution::from_pairs([(ZERO, "01"), (ONE, "")]);
        let s = WordStream::morphic(finite, ZERO).unwrap();
        assert_eq!(s.prefix(2).unwrap(), w("01"));
        assert!(matches!(s.prefix(3), Err(WordError::Exhausted { .. })));
    }

    #[test]
    fn complement_and_display() {
        assert_eq!(w("0110a").complement(), w("1001a"));
        assert_eq!(w("ab").to_string(), "ab");
        assert_eq!(serde_json::to_string(&w("ab")).unwrap(), "\"ab\"");
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just(b'a'), Just(b'b'), Just(b'c')], 0..16)
            .prop_map(Word)
    }

    proptest! {
        #[test]
        fn concat_is_associative_with_identity(u in word_strategy(), v in word_strategy(), x in word_strategy()) {
            prop_assert_eq!(u.concat(&v).concat(&x), u.concat(&v.concat(&x)));
            prop_assert_eq!(u.concat(&Word::empty()), u.clone());
            prop_assert_eq!(Word::empty().concat(&u), u);
        }

        #[test]
        fn full_paper_slice_is_identity(u in word_strategy()) {
            prop_assume!(!u.is_empty());
            prop_assert_eq!(u.paper_slice(1, u.len()).unwrap(), u);
        }

        #[test]
        fn stream_prefixes_are_consistent(n in 0usize..=1 << 14, m in 0usize..=1 << 14, which in 0usize..3) {
            let (n, m) = (n.min(m), n.max(m));
            let s = match which {
                0 => WordStream::thue_morse(),
                1 => WordStream::fibonacci(),
                _ => WordStream::ultimately_periodic(Word::from("abc"), Word::from("de")).unwrap(),
            };
            let long = s.prefix(m).unwrap();
            prop_assert_eq!(s.prefix(n).unwrap(), long.prefix(n));
        }
    }
}
