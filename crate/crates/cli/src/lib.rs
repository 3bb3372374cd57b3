//! Command-line plumbing around `pentile-core`: the end-to-end pipeline for
//! one word, seeded batch verification, bound calculators, JSON reports and
//! SVG figures.

pub mod calc;
pub mod error;
pub mod pipeline;
pub mod real;
pub mod report;
pub mod sample;
pub mod svg;

use rayon::prelude::*;

pub use error::CliError;
pub use pipeline::{analyze, run_word, SampleRecord};
pub use real::Real;
pub use report::{Aggregate, RunReport};
pub use sample::{ParityFilter, SampleConfig};

/// Samples words per `cfg` and runs the pipeline on each, in parallel.
/// Records come back in sample order, so the report is deterministic.
pub fn verify(cfg: &SampleConfig) -> Result<RunReport, CliError> {
    let words = sample::sample_words(cfg)?;
    let records = words
        .par_iter()
        .map(run_word)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RunReport::new("verify", Some(cfg.clone()), records))
}

/// Runs one word; non-axial words are an error.
pub fn trace(word: &str) -> Result<(RunReport, pipeline::Analysis), CliError> {
    let w: pentile_core::NormalForm = word.parse()?;
    let a = analyze(&w)?;
    Ok((RunReport::new("trace", None, vec![a.record.clone()]), a))
}
