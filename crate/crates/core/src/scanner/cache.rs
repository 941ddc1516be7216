//! Line-delimited record cache. One record per line, tab-separated:
//! word, strands, ell, tb, rtilde, log_concave, no_internal_zeros, unimodal.

use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use num_bigint::BigInt;

use super::{ScanError, ScanRecord};
use crate::braidcore::{is_canonical, BraidWord};
use crate::exactalg::BpsSequence;

pub fn format_record(rec: &ScanRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        rec.word.letters_csv(),
        rec.word.strands(),
        rec.ell,
        rec.tb,
        rec.rtilde.to_csv(),
        rec.report.log_concave,
        rec.report.no_internal_zeros,
        rec.report.unimodal,
    )
}

/// Parses one cache line. `line` is the 1-based line number used in errors.
///
/// Everything derivable from the word and sequence is recomputed and must
/// agree with the stored fields.
pub fn parse_record(text: &str, line: usize) -> Result<ScanRecord, ScanError> {
    let corrupt = |reason: String| ScanError::CacheCorrupt { line, reason };
    let fields: Vec<&str> = text.split('\t').collect();
    let [word, strands, ell, tb, rtilde, lc, niz, uni] = fields[..] else {
        return Err(corrupt(format!(
            "expected 8 tab-separated fields, found {}",
            fields.len()
        )));
    };
    let strands: usize = strands
        .parse()
        .map_err(|_| corrupt(format!("bad strand count {strands:?}")))?;
    let letters = if word.is_empty() {
        Vec::new()
    } else {
        word.split(',')
            .map(str::parse::<usize>)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| corrupt(format!("bad word {word:?}")))?
    };
    let word = BraidWord::new(strands, letters).map_err(|e| corrupt(e.to_string()))?;
    if !is_canonical(&word) {
        return Err(corrupt(format!("word {word} is not a canonical rotation")));
    }
    let ell: usize = ell.parse().map_err(|_| corrupt(format!("bad ell {ell:?}")))?;
    let tb: i64 = tb.parse().map_err(|_| corrupt(format!("bad tb {tb:?}")))?;
    let coeffs = rtilde
        .split(',')
        .map(str::parse::<BigInt>)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| corrupt(format!("bad rtilde {rtilde:?}")))?;
    let flag = |s: &str| -> Result<bool, ScanError> { s.parse().map_err(|_| corrupt(format!("bad boolean {s:?}"))) };
    let flags = (flag(lc)?, flag(niz)?, flag(uni)?);

    let rec = ScanRecord::from_parts(word, BpsSequence::new(coeffs));
    if rec.ell != ell || rec.tb != tb {
        return Err(corrupt(format!(
            "stored ell/tb {ell}/{tb} disagree with the word ({}/{})",
            rec.ell, rec.tb
        )));
    }
    let r = &rec.report;
    if (r.log_concave, r.no_internal_zeros, r.unimodal) != flags {
        return Err(corrupt("stored predicates disagree with rtilde".into()));
    }
    Ok(rec)
}

/// Reads all complete records. A final line without its newline is the
/// remnant of an interrupted write: it is dropped with a warning. Returns
/// the records and the byte length of the complete prefix.
pub(crate) fn load_prefix(path: &Path) -> Result<(Vec<ScanRecord>, u64), ScanError> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    let complete = match text.rfind('\n') {
        Some(i) => i + 1,
        None => 0,
    };
    if complete < text.len() {
        log::warn!(
            "{}: discarding truncated last line ({} bytes)",
            path.display(),
            text.len() - complete
        );
    }
    let mut records = Vec::new();
    for (i, line) in text[..complete].lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        records.push(parse_record(line, i + 1)?);
    }
    Ok((records, complete as u64))
}

/// All complete records in `path`, in file order.
pub fn cache_load(path: &Path) -> Result<Vec<ScanRecord>, ScanError> {
    Ok(load_prefix(path)?.0)
}

/// Appends one record, creating the file if needed.
pub fn cache_append(path: &Path, rec: &ScanRecord) -> Result<(), ScanError> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    writeln!(f, "{}", format_record(rec))?;
    Ok(())
}

/// Buffered single-writer handle used by the scan aggregator.
pub struct CacheWriter {
    out: BufWriter<File>,
}

impl CacheWriter {
    /// Opens `path` for appending after cutting it to `keep` bytes, which
    /// removes a partial trailing line left by a crash.
    pub fn open(path: &Path, keep: u64) -> Result<Self, ScanError> {
        let f = OpenOptions::new().create(true).write(true).truncate(false).open(path)?;
        f.set_len(keep)?;
        let mut f = f;
        std::io::Seek::seek(&mut f, std::io::SeekFrom::End(0))?;
        Ok(Self { out: BufWriter::new(f) })
    }

    pub fn write(&mut self, rec: &ScanRecord) -> Result<(), ScanError> {
        writeln!(self.out, "{}", format_record(rec))?;
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), ScanError> {
        self.out.flush()?;
        self.out.get_ref().sync_data()?;
        Ok(())
    }
}
