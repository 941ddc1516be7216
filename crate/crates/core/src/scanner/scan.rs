use std::path::PathBuf;

use rayon::prelude::*;

use super::cache::{load_prefix, CacheWriter};
use super::ScanError;
use crate::braidcore::{canonical_rotation, classical_invariants, is_canonical, BraidWord};
use crate::concavity::{conjecture_report, ConjectureReport};
use crate::exactalg::BpsSequence;
use crate::rulingdp::{normalized_ruling_poly, RulingError, MAX_STRANDS};

/// Words processed per batch between cache flushes.
const CHUNK: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_strands: usize,
    pub max_length: usize,
    pub workers: usize,
    pub cache_path: Option<PathBuf>,
    pub resume: bool,
}

impl ScanConfig {
    pub fn new(max_strands: usize, max_length: usize) -> Self {
        Self {
            max_strands,
            max_length,
            workers: 1,
            cache_path: None,
            resume: false,
        }
    }

    pub fn validate(&self) -> Result<(), ScanError> {
        if self.max_strands > MAX_STRANDS {
            return Err(ScanError::ResourceExceeded {
                strands: self.max_strands,
            });
        }
        if self.max_strands < 2 {
            return Err(ScanError::InvalidConfig("max_strands must be at least 2".into()));
        }
        if self.max_length < 1 {
            return Err(ScanError::InvalidConfig("max_length must be at least 1".into()));
        }
        if self.workers < 1 {
            return Err(ScanError::InvalidConfig("workers must be at least 1".into()));
        }
        Ok(())
    }
}

/// One checked word: its classical invariants, `R~` and the predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub word: BraidWord,
    pub ell: usize,
    pub tb: i64,
    pub mu: i64,
    pub rtilde: BpsSequence,
    pub report: ConjectureReport,
}

impl ScanRecord {
    /// Runs the ruling DP on the canonical rotation of `word`.
    pub fn compute(word: BraidWord) -> Result<Self, RulingError> {
        let word = canonical_rotation(&word);
        let rtilde = normalized_ruling_poly(&word)?;
        Ok(Self::from_parts(word, rtilde))
    }

    /// Assembles a record from a word and a precomputed sequence.
    pub fn from_parts(word: BraidWord, rtilde: BpsSequence) -> Self {
        let inv = classical_invariants(&word);
        let report = conjecture_report(&rtilde);
        Self {
            word,
            ell: inv.ell,
            tb: inv.tb,
            mu: inv.mu,
            rtilde,
            report,
        }
    }

    /// Scan order: strand count, then length, then letters.
    pub fn sort_key(&self) -> (usize, usize, &[usize]) {
        (self.word.strands(), self.word.len(), self.word.letters())
    }
}

/// Canonical words on exactly `strands` strands and of length `len`, in
/// lexicographic order.
pub fn enumerate_canonical(strands: usize, len: usize) -> Vec<BraidWord> {
    let k = strands - 1;
    let mut out = Vec::new();
    if k == 0 {
        if len == 0 {
            out.push(BraidWord::new(strands, Vec::new()).expect("empty word"));
        }
        return out;
    }
    let mut letters = vec![1usize; len];
    loop {
        let w = BraidWord::new(strands, letters.clone()).expect("letters in range");
        if is_canonical(&w) {
            out.push(w);
        }
        // odometer increment, last position fastest
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if letters[i] < k {
                letters[i] += 1;
                letters[i + 1..].fill(1);
                break;
            }
        }
    }
}

/// Result of a scan: every record in scan order, plus bookkeeping.
#[derive(Clone, Debug, Default)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    /// Records computed in this run.
    pub computed: usize,
    /// Records taken from the cache.
    pub reused: usize,
}

impl ScanOutcome {
    /// Records whose sequence is not log-concave with no internal zeros.
    pub fn violations(&self) -> impl Iterator<Item = &ScanRecord> {
        self.records.iter().filter(|r| !r.report.conjecture_holds())
    }
}

fn report_violation(rec: &ScanRecord) {
    let at = rec
        .report
        .first_violation
        .map(|v| format!("{} at index {}", v.kind, v.index))
        .unwrap_or_default();
    log::error!(
        "CONJECTURE VIOLATION: word {} (strands {}) rtilde {} {at}",
        rec.word,
        rec.word.strands(),
        rec.rtilde
    );
}

/// Enumerates canonical positive words on `2..=max_strands` strands with
/// `1..=max_length` letters and checks each `R~`.
///
/// Words are evaluated on a pool of `workers` threads in fixed-size chunks;
/// the calling thread alone writes the cache, after each chunk. With
/// `resume`, records already in the cache are reused instead of recomputed;
/// without it an existing cache is overwritten.
pub fn scan(cfg: &ScanConfig) -> Result<ScanOutcome, ScanError> {
    cfg.validate()?;
    let mut cached = std::collections::HashMap::new();
    let mut writer = None;
    if let Some(path) = &cfg.cache_path {
        let keep = if cfg.resume && path.exists() {
            let (records, keep) = load_prefix(path)?;
            for r in records {
                cached.insert(r.word.clone(), r);
            }
            keep
        } else {
            0
        };
        writer = Some(CacheWriter::open(path, keep)?);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| ScanError::ThreadPool(e.to_string()))?;

    let mut outcome = ScanOutcome::default();
    for strands in 2..=cfg.max_strands {
        for len in 1..=cfg.max_length {
            let words = enumerate_canonical(strands, len);
            for chunk in words.chunks(CHUNK) {
                let todo: Vec<&BraidWord> = chunk.iter().filter(|w| !cached.contains_key(*w)).collect();
                let fresh: Vec<ScanRecord> = pool.install(|| {
                    todo.par_iter()
                        .map(|w| ScanRecord::compute((*w).clone()))
                        .collect::<Result<_, _>>()
                })?;
                if let Some(wr) = writer.as_mut() {
                    for r in &fresh {
                        wr.write(r)?;
                    }
                    wr.flush()?;
                }
                outcome.computed += fresh.len();
                let mut fresh = fresh.into_iter();
                for w in chunk {
                    let rec = match cached.remove(w) {
                        Some(r) => {
                            outcome.reused += 1;
                            r
                        }
                        None => fresh.next().expect("one fresh record per uncached word"),
                    };
                    if !rec.report.implication_holds() {
                        return Err(ScanError::Invariant(format!(
                            "{} is log-concave without internal zeros but not unimodal: {}",
                            rec.word, rec.rtilde
                        )));
                    }
                    if !rec.report.conjecture_holds() {
                        report_violation(&rec);
                    }
                    outcome.records.push(rec);
                }
            }
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedforms::two_strand_rtilde;

    #[test]
    fn canonical_counts() {
        // necklaces of length 4 over 2 letters
        assert_eq!(enumerate_canonical(3, 4).len(), 6);
        assert_eq!(enumerate_canonical(2, 5).len(), 1);
        assert!(enumerate_canonical(4, 6).iter().all(is_canonical));
    }

    #[test]
    fn two_strand_scan() {
        let out = scan(&ScanConfig::new(2, 5)).unwrap();
        assert_eq!(out.records.len(), 5);
        for (k, r) in out.records.iter().enumerate() {
            assert_eq!(r.word.len(), k + 1);
            assert_eq!(r.rtilde, two_strand_rtilde(k + 1));
            assert!(r.report.all_pass());
        }
    }

    #[test]
    fn three_strand_scan_contains_d4() {
        let out = scan(&ScanConfig::new(3, 6)).unwrap();
        let d4: BraidWord = "1,1,2,1,1,2@3".parse().unwrap();
        let rec = out.records.iter().find(|r| r.word == d4).unwrap();
        assert_eq!(rec.rtilde, BpsSequence::from_i64s(&[1, 3, 4, 1]));
        assert!(rec.report.all_pass());
        assert_eq!(out.violations().count(), 0);
    }

    #[test]
    fn config_limits() {
        assert!(matches!(
            scan(&ScanConfig::new(9, 3)),
            Err(ScanError::ResourceExceeded { strands: 9 })
        ));
        assert!(scan(&ScanConfig::new(1, 3)).is_err());
        assert!(scan(&ScanConfig::new(2, 0)).is_err());
    }
}
