//! Seeded rejection sampling of axial words.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use pentile_core::coxgroup::{normalize, word_to_isometry, DEFAULT_BALL_CAP};
use pentile_core::hypgeo::{classify, Parity};
use pentile_core::{Generator, NormalForm, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::real::Real;

/// Candidate draws allowed per requested sample before giving up.
const ATTEMPTS_PER_SAMPLE: u64 = 500;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityFilter {
    Preserving,
    Reversing,
    #[default]
    Both,
}

impl ParityFilter {
    fn admits(self, p: Parity) -> bool {
        match self {
            ParityFilter::Both => true,
            ParityFilter::Preserving => p == Parity::Preserving,
            ParityFilter::Reversing => p == Parity::Reversing,
        }
    }
}

impl FromStr for ParityFilter {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "preserving" => Ok(ParityFilter::Preserving),
            "reversing" => Ok(ParityFilter::Reversing),
            "both" => Ok(ParityFilter::Both),
            _ => Err(CliError::Usage(format!(
                "parity must be preserving, reversing or both, got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for ParityFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityFilter::Preserving => "preserving",
            ParityFilter::Reversing => "reversing",
            ParityFilter::Both => "both",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub max_word_len: usize,
    pub min_ell: Real,
    pub max_ell: Real,
    pub parity: ParityFilter,
}

impl SampleConfig {
    pub fn new(seed: u64, count: usize, max_word_len: usize) -> Self {
        SampleConfig {
            seed,
            count,
            max_word_len,
            min_ell: Real(0.0),
            max_ell: Real(8.0),
            parity: ParityFilter::Both,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.count == 0 {
            return Err(CliError::Usage("count must be at least 1".into()));
        }
        if self.max_word_len == 0 || self.max_word_len > DEFAULT_BALL_CAP {
            return Err(CliError::Usage(format!(
                "max word length must be in 1..={DEFAULT_BALL_CAP}, got {}",
                self.max_word_len
            )));
        }
        let (lo, hi) = (self.min_ell.get(), self.max_ell.get());
        if !(lo >= 0.0 && hi.is_finite() && lo <= hi) {
            return Err(CliError::Usage(format!(
                "translation length window [{lo}, {hi}] is empty"
            )));
        }
        Ok(())
    }
}

/// Draw `i`: a length uniform in `1..=max_word_len`, then uniform letters,
/// all from stream `i` of the generator seeded with `seed`.
pub fn draw(seed: u64, i: u64, max_word_len: usize) -> NormalForm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let len = rng.random_range(1..=max_word_len);
    let letters = (0..len)
        .map(|_| Generator::ALL[rng.random_range(0..5usize)])
        .collect();
    normalize(&Word(letters))
}

/// Distinct axial words in the configured window, in draw order.
pub fn sample_words(cfg: &SampleConfig) -> Result<Vec<NormalForm>, CliError> {
    cfg.validate()?;
    let attempts = ATTEMPTS_PER_SAMPLE * cfg.count as u64;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..attempts {
        if out.len() == cfg.count {
            break;
        }
        let w = draw(cfg.seed, i, cfg.max_word_len);
        if w.is_identity() || !cfg.parity.admits(w.parity()) || seen.contains(&w) {
            continue;
        }
        let Ok(class) = classify(&word_to_isometry(&w)) else {
            continue;
        };
        let ell = class.translation_length;
        if class.tag.is_axial() && ell >= cfg.min_ell.get() && ell <= cfg.max_ell.get() {
            seen.insert(w.clone());
            out.push(w);
        }
    }
    if out.is_empty() {
        return Err(CliError::NoSamples { attempts });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible() {
        for i in 0..20 {
            assert_eq!(draw(7, i, 10), draw(7, i, 10));
        }
        let a: Vec<_> = (0..20).map(|i| draw(7, i, 10)).collect();
        let b: Vec<_> = (0..20).map(|i| draw(8, i, 10)).collect();
        assert_ne!(a, b);
    }

    #[test]
    fn samples_respect_the_filters() {
        let mut cfg = SampleConfig::new(3, 30, 8);
        cfg.parity = ParityFilter::Reversing;
        cfg.max_ell = Real(5.0);
        let words = sample_words(&cfg).unwrap();
        assert_eq!(words.len(), 30);
        let distinct: BTreeSet<_> = words.iter().collect();
        assert_eq!(distinct.len(), words.len());
        for w in &words {
            assert_eq!(w.parity(), Parity::Reversing);
            let c = classify(&word_to_isometry(w)).unwrap();
            assert!(c.tag.is_axial() && c.translation_length <= 5.0);
        }
    }

    #[test]
    fn bad_configs_are_rejected() {
        assert!(SampleConfig::new(0, 0, 5).validate().is_err());
        assert!(SampleConfig::new(0, 5, 0).validate().is_err());
        assert!(SampleConfig::new(0, 5, DEFAULT_BALL_CAP + 1).validate().is_err());
        let mut cfg = SampleConfig::new(0, 5, 5);
        cfg.min_ell = Real(3.0);
        cfg.max_ell = Real(2.0);
        assert!(cfg.validate().is_err());
        // single letters are reflections, so nothing axial can be found
        let none = SampleConfig::new(0, 3, 1);
        assert!(matches!(sample_words(&none), Err(CliError::NoSamples { .. })));
    }
}
