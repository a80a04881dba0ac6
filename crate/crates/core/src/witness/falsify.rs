//! Randomised search for ultimately periodic images of aperiodic words.
//!
//! Each trial draws a non-commuting binary morphism, applies it to a prefix
//! of Thue–Morse or Fibonacci and searches the image for a `y·z^ω` fit.
//! Such a fit is never expected. A commuting control runs alongside: images
//! `r^p, r^q` of a random root `r` must always fit with period the primitive
//! root of `r` and empty preperiod.
//!
//! Trial `i` draws from ChaCha8 seeded with the run seed on stream `2i`
//! (control: `2i + 1`), so results do not depend on execution order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::primitive_root;
use crate::morphism::BinaryMorphism;
use crate::par::Exec;
use crate::periodicity::{search_min_up_with, SearchBounds, UpDecomposition};
use crate::word::{Word, WordStream};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("alphabet size must be between 2 and 26, got {0}")]
    AlphabetSize(usize),
    #[error("maximum image length must be at least 1")]
    ImageLength,
    #[error("prefix length must be at least 1")]
    PrefixLength,
    #[error("search bounds need max_period >= 1 and min_full_periods >= 1")]
    Bounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fixture {
    ThueMorse,
    Fibonacci,
}

impl Fixture {
    pub const ALL: [Fixture; 2] = [Fixture::ThueMorse, Fixture::Fibonacci];

    pub fn stream(self) -> WordStream {
        match self {
            Fixture::ThueMorse => WordStream::thue_morse(),
            Fixture::Fibonacci => WordStream::fibonacci(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Fixture::ThueMorse => "thue-morse",
            Fixture::Fibonacci => "fibonacci",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FalsifyConfig {
    pub trials: usize,
    pub prefix_len: usize,
    pub alphabet_size: usize,
    pub max_image_len: usize,
    pub bounds: SearchBounds,
    pub seed: u64,
}

impl FalsifyConfig {
    pub fn new(seed: u64) -> Self {
        FalsifyConfig {
            trials: 500,
            prefix_len: 4096,
            alphabet_size: 3,
            max_image_len: 4,
            bounds: SearchBounds::default(),
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(2..=26).contains(&self.alphabet_size) {
            return Err(ConfigError::AlphabetSize(self.alphabet_size));
        }
        if self.max_image_len == 0 {
            return Err(ConfigError::ImageLength);
        }
        if self.prefix_len == 0 {
            return Err(ConfigError::PrefixLength);
        }
        if self.bounds.max_period == 0 || self.bounds.min_full_periods == 0 {
            return Err(ConfigError::Bounds);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialKind {
    NonCommuting,
    Control,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FitRecord {
    pub preperiod: Word,
    pub period: Word,
    pub canonical_preperiod: Word,
    pub canonical_period: Word,
}

impl FitRecord {
    fn from_fit(d: &UpDecomposition) -> Self {
        let c = d.canonicalize();
        FitRecord {
            preperiod: d.preperiod().clone(),
            period: d.period().clone(),
            canonical_preperiod: c.preperiod().clone(),
            canonical_period: c.period().clone(),
        }
    }
}

/// One trial, with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub kind: TrialKind,
    pub fixture: Fixture,
    pub morphism: BinaryMorphism,
    pub fit: Option<FitRecord>,
    /// Control trials only: the primitive root the fit must have.
    pub expected_period: Option<Word>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub seed: u64,
    pub trials: usize,
    pub prefix_len: usize,
    pub noncommuting_fits: usize,
    pub control_trials: usize,
    pub control_matches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FalsifyReport {
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
}

impl FalsifyReport {
    /// No fit for a non-commuting morphism and every control as expected.
    pub fn is_consistent(&self) -> bool {
        self.summary.noncommuting_fits == 0
            && self.summary.control_matches == self.summary.control_trials
    }
}

/// Uniform length in `1..=max_len`, then uniform symbols.
fn random_word<R: Rng>(rng: &mut R, alphabet: &[u8], max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::from((0..len).map(|_| *alphabet.choose(rng).unwrap()).collect::<Vec<u8>>())
}

/// Rejection-samples images of length `1..=max_len` until they do not commute.
pub fn sample_noncommuting<R: Rng>(rng: &mut R, alphabet_size: usize, max_len: usize) -> BinaryMorphism {
    let alphabet: Vec<u8> = (b'a'..).take(alphabet_size).collect();
    loop {
        let x = random_word(rng, &alphabet, max_len);
        let y = random_word(rng, &alphabet, max_len);
        let h = BinaryMorphism::new(x, y);
        if !h.commuting() {
            return h;
        }
    }
}

/// Random root `r` and images `r^p`, `r^q` no longer than `max_len`.
pub fn sample_commuting<R: Rng>(rng: &mut R, alphabet_size: usize, max_len: usize) -> (BinaryMorphism, Word) {
    let alphabet: Vec<u8> = (b'a'..).take(alphabet_size).collect();
    let root = random_word(rng, &alphabet, max_len);
    let max_exp = (max_len / root.len()).max(1);
    let p = rng.gen_range(1..=max_exp);
    let q = rng.gen_range(1..=max_exp);
    (BinaryMorphism::new(root.pow(p), root.pow(q)), root)
}

/// Searches `h(prefix)` for an ultimately periodic fit.
pub fn run_trial(h: &BinaryMorphism, prefix: &Word, bounds: SearchBounds, exec: Exec) -> Option<UpDecomposition> {
    let image = h.apply(prefix).expect("fixture prefixes are binary");
    search_min_up_with(&image, bounds, exec)
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn falsify(config: &FalsifyConfig) -> Result<FalsifyReport, ConfigError> {
    falsify_with(config, Exec::default())
}

/// Trials run through `exec`; records come back in trial order, with the
/// non-commuting trial before its control.
pub fn falsify_with(config: &FalsifyConfig, exec: Exec) -> Result<FalsifyReport, ConfigError> {
    config.validate()?;
    let prefixes: Vec<Word> = Fixture::ALL
        .iter()
        .map(|f| f.stream().prefix(config.prefix_len).expect("fixtures are infinite"))
        .collect();

    // Inner searches stay sequential; the trials carry the parallelism.
    let pairs = exec.map(0..config.trials, |trial| {
        let mut rng = trial_rng(config.seed, 2 * trial as u64);
        let fixture_index = rng.gen_range(0..Fixture::ALL.len());
        let h = sample_noncommuting(&mut rng, config.alphabet_size, config.max_image_len);
        let fit = run_trial(&h, &prefixes[fixture_index], config.bounds, Exec::Sequential);
        let noncommuting = TrialRecord {
            trial,
            kind: TrialKind::NonCommuting,
            fixture: Fixture::ALL[fixture_index],
            morphism: h,
            ok: fit.is_none(),
            fit: fit.as_ref().map(FitRecord::from_fit),
            expected_period: None,
        };

        let mut rng = trial_rng(config.seed, 2 * trial as u64 + 1);
        let fixture_index = rng.gen_range(0..Fixture::ALL.len());
        let (h, root) = sample_commuting(&mut rng, config.alphabet_size, config.max_image_len);
        let expected = primitive_root(&root).expect("root is nonempty").root;
        let fit = run_trial(&h, &prefixes[fixture_index], config.bounds, Exec::Sequential)
            .as_ref()
            .map(FitRecord::from_fit);
        let ok = fit
            .as_ref()
            .is_some_and(|f| f.canonical_preperiod.is_empty() && f.canonical_period == expected);
        let control = TrialRecord {
            trial,
            kind: TrialKind::Control,
            fixture: Fixture::ALL[fixture_index],
            morphism: h,
            fit,
            expected_period: Some(expected),
            ok,
        };
        (noncommuting, control)
    });

    let records: Vec<TrialRecord> = pairs.into_iter().flat_map(|(a, b)| [a, b]).collect();
    let summary = Summary {
        seed: config.seed,
        trials: config.trials,
        prefix_len: config.prefix_len,
        noncommuting_fits: records
            .iter()
            .filter(|r| r.kind == TrialKind::NonCommuting && r.fit.is_some())
            .count(),
        control_trials: config.trials,
        control_matches: records.iter().filter(|r| r.kind == TrialKind::Control && r.ok).count(),
    };
    Ok(FalsifyReport { records, summary })
}
