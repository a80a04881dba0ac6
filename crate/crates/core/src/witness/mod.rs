//! Phase traces of a binary morphism against a candidate `y·z^ω`.
//!
//! Given a prefix `P` of an infinite binary word `w` whose image `h(P)`
//! agrees with `y·z^ω`, every prefix `Q` of `P` whose image reaches past `y`
//! ends at some phase `(|h(Q)| - |y|) mod |z|`. Fixing one phase class and
//! cutting `P` at consecutive hits of that class yields blocks `a_i` with
//! `h(a_i) = z2 · z^{p_i} · z1`, where `z = z1·z2` and `|z1|` is the phase.
//!
//! If every `p_i` agrees, the blocks themselves repeat and the trace is
//! evidence that `w` is ultimately periodic. Otherwise two neighbouring
//! blocks with different exponents give `h(a_i a_j) = h(a_j a_i)`, which
//! for an injective `h` forces the blocks to commute.

pub mod falsify;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::morphism::{BinaryMorphism, MorphismError};
use crate::periodicity::UpDecomposition;
use crate::word::{Word, WordError, WordStream};

/// Fewest hits in the chosen phase class needed to build a trace.
pub const MIN_HITS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("prefix length must be at least 1")]
    EmptyPrefix,
    #[error(transparent)]
    Stream(#[from] WordError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("insufficient evidence: {hits} hits in the best phase class, need {MIN_HITS}; raise the prefix length")]
    InsufficientEvidence { hits: usize },
    #[error("trace has {0} blocks, need at least 2")]
    TooFewBlocks(usize),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub word: Word,
    pub exponent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseTrace {
    /// The candidate the trace was taken against.
    pub decomposition: UpDecomposition,
    pub phase: usize,
    pub z1: Word,
    pub z2: Word,
    pub anchor: Word,
    pub blocks: Vec<Block>,
    pub hit_count: usize,
}

impl PhaseTrace {
    /// `z2 · z^p · z1`.
    pub fn block_image(&self, exponent: usize) -> Word {
        self.z2
            .concat(&self.decomposition.period().pow(exponent))
            .concat(&self.z1)
    }

    /// `anchor · a_1 ⋯ a_k`.
    pub fn covered_prefix(&self) -> Word {
        self.blocks
            .iter()
            .fold(self.anchor.clone(), |acc, b| acc.concat(&b.word))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TraceVerdict {
    PeriodicityEvidence {
        preperiod: Word,
        period: Word,
    },
    CommutationWitness {
        /// 1-based index `i` of the pair `(a_i, a_{i+1})`.
        index: usize,
        a_i: Word,
        a_j: Word,
        image: Word,
    },
    CandidateRefuted {
        image_mismatch_index: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction {
    Trace(PhaseTrace),
    Refuted { image_mismatch_index: usize },
}

/// Cuts the first `n` symbols of `w` into a phase trace against `d`.
pub fn extract_phases(
    h: &BinaryMorphism,
    w: &WordStream,
    d: &UpDecomposition,
    n: usize,
) -> Result<Extraction, WitnessError> {
    if n == 0 {
        return Err(WitnessError::EmptyPrefix);
    }
    let prefix = w.prefix(n)?;
    let image = h.apply(&prefix)?;
    let fit = d.check_fit(&image);
    if let Some(image_mismatch_index) = fit.mismatch_index {
        return Ok(Extraction::Refuted { image_mismatch_index });
    }
    trace_from_fitting_prefix(h, &prefix, d).map(Extraction::Trace)
}

/// `prefix` must be binary with `h(prefix)` a prefix of `y·z^ω`.
fn trace_from_fitting_prefix(
    h: &BinaryMorphism,
    prefix: &Word,
    d: &UpDecomposition,
) -> Result<PhaseTrace, WitnessError> {
    let y_len = d.preperiod().len();
    let z = d.period();

    // (prefix length, image length) for nonempty prefixes reaching past y.
    // Only the first prefix to reach a given image length counts, so blocks
    // always have nonempty images.
    let mut hits: Vec<(usize, usize)> = Vec::new();
    let mut image_len = 0;
    for (k, &c) in prefix.iter().enumerate() {
        image_len += h.image(c).len();
        if image_len >= y_len && hits.last().is_none_or(|&(_, last)| last != image_len) {
            hits.push((k + 1, image_len));
        }
    }

    let mut by_phase: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &(k, len) in &hits {
        by_phase.entry((len - y_len) % z.len()).or_default().push((k, len));
    }
    // Most hits wins; BTreeMap order plus strict > keeps the smallest phase on ties.
    let mut best: Option<(usize, &Vec<(usize, usize)>)> = None;
    for (&phase, class) in &by_phase {
        if best.is_none_or(|(_, b)| class.len() > b.len()) {
            best = Some((phase, class));
        }
    }
    let Some((phase, class)) = best.filter(|(_, c)| c.len() >= MIN_HITS) else {
        return Err(WitnessError::InsufficientEvidence {
            hits: best.map_or(0, |(_, c)| c.len()),
        });
    };

    let trace = PhaseTrace {
        decomposition: d.clone(),
        phase,
        z1: z.prefix(phase),
        z2: z.slice(phase, z.len()),
        anchor: prefix.prefix(class[0].0),
        blocks: class
            .windows(2)
            .map(|pair| {
                let ((k0, len0), (k1, len1)) = (pair[0], pair[1]);
                Block {
                    word: prefix.slice(k0, k1),
                    exponent: (len1 - len0) / z.len() - 1,
                }
            })
            .collect(),
        hit_count: class.len(),
    };
    for (i, block) in trace.blocks.iter().enumerate() {
        if h.apply(&block.word)? != trace.block_image(block.exponent) {
            return Err(WitnessError::InvariantViolation(format!(
                "block {} image differs from z2 z^{} z1",
                i + 1,
                block.exponent
            )));
        }
    }
    Ok(trace)
}

/// Decides which branch of the argument a trace falls into.
pub fn classify_trace(h: &BinaryMorphism, t: &PhaseTrace) -> Result<TraceVerdict, WitnessError> {
    if t.blocks.len() < 2 {
        return Err(WitnessError::TooFewBlocks(t.blocks.len()));
    }
    let exponents_differ = t.blocks.windows(2).position(|p| p[0].exponent != p[1].exponent);
    let pair_index = match exponents_differ {
        Some(i) => i,
        None => match t.blocks.windows(2).position(|p| p[0].word != p[1].word) {
            None => {
                return Ok(TraceVerdict::PeriodicityEvidence {
                    preperiod: t.anchor.clone(),
                    period: t.blocks[0].word.clone(),
                })
            }
            // Equal images of distinct blocks: impossible when h is injective.
            Some(_) if !h.commuting() => {
                return Err(WitnessError::InvariantViolation(
                    "injective morphism maps distinct blocks to the same image".into(),
                ))
            }
            Some(i) => i,
        },
    };
    let (a_i, a_j) = (&t.blocks[pair_index].word, &t.blocks[pair_index + 1].word);
    let image = h.apply(&a_i.concat(a_j))?;
    if image != h.apply(&a_j.concat(a_i))? {
        return Err(WitnessError::InvariantViolation(format!(
            "h(a_i a_j) != h(a_j a_i) at block {}",
            pair_index + 1
        )));
    }
    Ok(TraceVerdict::CommutationWitness {
        index: pair_index + 1,
        a_i: a_i.clone(),
        a_j: a_j.clone(),
        image,
    })
}

/// [`extract_phases`] followed by [`classify_trace`].
pub fn analyze(
    h: &BinaryMorphism,
    w: &WordStream,
    d: &UpDecomposition,
    n: usize,
) -> Result<(Option<PhaseTrace>, TraceVerdict), WitnessError> {
    match extract_phases(h, w, d, n)? {
        Extraction::Refuted { image_mismatch_index } => {
            Ok((None, TraceVerdict::CandidateRefuted { image_mismatch_index }))
        }
        Extraction::Trace(t) => {
            let verdict = classify_trace(h, &t)?;
            Ok((Some(t), verdict))
        }
    }
}
