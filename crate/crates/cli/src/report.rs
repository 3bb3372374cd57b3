//! Versioned JSON reports.

use serde::Serialize;

use crate::pipeline::SampleRecord;
use crate::real::Real;
use crate::sample::SampleConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Aggregate {
    pub samples: usize,
    pub preserving: usize,
    pub reversing: usize,
    pub along_edges: usize,
    pub through_vertex: usize,
    pub max_ratio: Real,
    pub max_ratio_word: Option<String>,
    pub max_k: usize,
    pub failures: usize,
    pub failed_words: Vec<String>,
}

impl Aggregate {
    /// Folds the records in the order given.
    pub fn of(records: &[SampleRecord]) -> Self {
        let mut agg = Aggregate {
            samples: records.len(),
            preserving: 0,
            reversing: 0,
            along_edges: 0,
            through_vertex: 0,
            max_ratio: Real(0.0),
            max_ratio_word: None,
            max_k: 0,
            failures: 0,
            failed_words: Vec::new(),
        };
        for r in records {
            match r.parity {
                "preserving" => agg.preserving += 1,
                _ => agg.reversing += 1,
            }
            agg.along_edges += usize::from(r.degenerate_flags.along_edges);
            agg.through_vertex += usize::from(r.degenerate_flags.through_vertex);
            agg.max_k = agg.max_k.max(r.k);
            // NaN ratios come from failed runs and are counted below
            if r.ratio.get() > agg.max_ratio.get() {
                agg.max_ratio = r.ratio;
                agg.max_ratio_word = Some(r.word.clone());
            }
            if !r.passed() {
                agg.failures += 1;
                agg.failed_words.push(r.word.clone());
            }
        }
        agg
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<SampleConfig>,
    pub records: Vec<SampleRecord>,
    pub aggregate: Aggregate,
}

impl RunReport {
    pub fn new(command: &'static str, config: Option<SampleConfig>, records: Vec<SampleRecord>) -> Self {
        let aggregate = Aggregate::of(&records);
        RunReport {
            schema_version: SCHEMA_VERSION,
            command,
            config,
            records,
            aggregate,
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
