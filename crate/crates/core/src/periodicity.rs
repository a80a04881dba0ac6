//! Ultimately periodic decompositions `y·z^ω` checked against finite words.
//!
//! Every verdict here concerns the finite word examined. A fit of a prefix
//! says nothing about how the underlying infinite word continues.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::primitive_root;
use crate::par::Exec;
use crate::word::{Word, WordStream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("period must be nonempty")]
pub struct EmptyPeriodError;

/// `preperiod · period^ω` with a nonempty period.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct UpDecomposition {
    preperiod: Word,
    period: Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FitVerdict {
    pub fits: bool,
    pub mismatch_index: Option<usize>,
    /// Complete periods seen after the preperiod (before the mismatch, if any).
    pub full_periods_observed: usize,
}

impl UpDecomposition {
    pub fn new(preperiod: impl Into<Word>, period: impl Into<Word>) -> Result<Self, EmptyPeriodError> {
        let period = period.into();
        if period.is_empty() {
            return Err(EmptyPeriodError);
        }
        Ok(UpDecomposition {
            preperiod: preperiod.into(),
            period,
        })
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Symbol at 0-based position `i` of `y·z^ω`.
    pub fn symbol_at(&self, i: usize) -> u8 {
        let y = self.preperiod.len();
        if i < y {
            self.preperiod[i]
        } else {
            self.period[(i - y) % self.period.len()]
        }
    }

    pub fn to_stream(&self) -> WordStream {
        WordStream::UltimatelyPeriodic {
            preperiod: self.preperiod.clone(),
            period: self.period.clone(),
        }
    }

    pub fn check_fit(&self, s: &[u8]) -> FitVerdict {
        let mismatch = (0..s.len()).find(|&i| s[i] != self.symbol_at(i));
        let covered = mismatch.unwrap_or(s.len());
        FitVerdict {
            fits: mismatch.is_none(),
            mismatch_index: mismatch,
            full_periods_observed: covered.saturating_sub(self.preperiod.len()) / self.period.len(),
        }
    }

    /// Primitive period, then the preperiod shortened by rolling its trailing
    /// symbols into the period. Two decompositions denote the same infinite
    /// word iff their canonical forms are equal.
    pub fn canonicalize(&self) -> UpDecomposition {
        let root = primitive_root(&self.period).expect("period is nonempty").root;
        let mut preperiod = self.preperiod.clone().into_symbols();
        let mut period = root.into_symbols();
        while let (Some(&a), Some(&b)) = (preperiod.last(), period.last()) {
            if a != b {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        UpDecomposition {
            preperiod: preperiod.into(),
            period: period.into(),
        }
    }
}

/// Search bounds for [`search_min_up`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub max_preperiod: usize,
    pub max_period: usize,
    pub min_full_periods: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_preperiod: 64,
            max_period: 128,
            min_full_periods: 3,
        }
    }
}

/// `check_up_fit` as a free function.
pub fn check_up_fit(s: &[u8], d: &UpDecomposition) -> FitVerdict {
    d.check_fit(s)
}

pub fn canonicalize_up(d: &UpDecomposition) -> UpDecomposition {
    d.canonicalize()
}

/// First decomposition `(s[..|y|], s[|y|..|y|+|z|])`, ordered by `|z|` then
/// `|y|`, that covers all of `s` with at least `min_full_periods` periods.
pub fn search_min_up(s: &[u8], bounds: SearchBounds) -> Option<UpDecomposition> {
    search_min_up_with(s, bounds, Exec::default())
}

pub fn search_min_up_with(s: &[u8], bounds: SearchBounds, exec: Exec) -> Option<UpDecomposition> {
    assert!(bounds.max_period >= 1 && bounds.min_full_periods >= 1);
    let max_period = bounds.max_period.min(s.len() / bounds.min_full_periods);
    exec.find_map_first(1..=max_period, |period_len| {
        let preperiod_len = min_preperiod(s, period_len);
        (preperiod_len <= bounds.max_preperiod
            && preperiod_len + period_len * bounds.min_full_periods <= s.len())
        .then(|| UpDecomposition {
            preperiod: Word::from(&s[..preperiod_len]),
            period: Word::from(&s[preperiod_len..preperiod_len + period_len]),
        })
    })
}

/// Smallest `k` such that `s[k..]` has period `p`. Any larger preperiod also
/// fits, so for a fixed period the shortest fitting preperiod is this one.
fn min_preperiod(s: &[u8], p: usize) -> usize {
    (p..s.len())
        .rev()
        .find(|&i| s[i] != s[i - p])
        .map_or(0, |i| i + 1 - p)
}
