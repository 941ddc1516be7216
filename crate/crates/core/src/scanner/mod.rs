//! Multiplicativity checks, single-peak evaluation and the parallel
//! conjecture scan with its append-only cache.

mod cache;
mod peak;
mod scan;

pub use cache::{cache_append, cache_load, format_record, parse_record, CacheWriter};
pub use peak::{singlepeak_eval, singlepeak_factors, verify_multiplicativity, PeakFactor};
pub use scan::{enumerate_canonical, scan, ScanConfig, ScanOutcome, ScanRecord};

use std::io;

use thiserror::Error;

use crate::rulingdp::{RulingError, MAX_STRANDS};

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("cache line {line}: {reason}")]
    CacheCorrupt { line: usize, reason: String },
    #[error("{strands} strands exceeds the scan limit of {MAX_STRANDS}")]
    ResourceExceeded { strands: usize },
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
    #[error("outer words live on {left} and {right} strands; they must match")]
    StrandMismatch { left: usize, right: usize },
    #[error("{word} is not a single-peak word")]
    NotSinglePeak { word: String },
    #[error("internal invariant failed: {0}")]
    Invariant(String),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Ruling(#[from] RulingError),
}
