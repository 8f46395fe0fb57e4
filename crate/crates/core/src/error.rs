use thiserror::Error;

/// Errors produced by corpus I/O, harmonization, splitting, and augmentation.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("{path}:{line}: parse error: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("document {doc_id}: {msg}")]
    InvalidDocument { doc_id: String, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("unmapped relations: {}", .0.join(", "))]
    UnmappedRelations(Vec<String>),

    #[error("harmonization target {0:?} is not in the canonical relation inventory")]
    UnknownHarmonizationTarget(String),

    #[error("invalid split ratios {0:?}: must be positive and sum to 1")]
    InvalidRatios([f64; 3]),

    #[error("cannot split an empty corpus")]
    EmptyCorpus,

    #[error("invalid synthesis config: {0}")]
    InvalidSynthConfig(String),

    #[error("translator does not support the pair {src} -> {tgt}")]
    UnsupportedPair { src: String, tgt: String },

    #[error("document {doc_id}: EDU {edu_index} translated to an empty segment")]
    EmptyTranslation { doc_id: String, edu_index: usize },

    #[error("document {doc_id} has no gold EDU spans; segment-level translation needs them")]
    MissingGoldSpans { doc_id: String },

    #[error("external translator {command:?} failed: {msg}")]
    ExternalTranslator { command: String, msg: String },

    #[error("metric inputs disagree: {0}")]
    MetricMismatch(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
