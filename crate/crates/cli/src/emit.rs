//! JSON and CSV renderings of records and sequences.

use bps_core::concavity::ConjectureReport;
use bps_core::scanner::{parse_record, ScanRecord};
use bps_core::BpsSequence;
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

pub fn big(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("decimal integers are JSON numbers"),
    )
}

pub fn sequence(s: &BpsSequence) -> Value {
    Value::Array(s.coeffs().iter().map(big).collect())
}

pub fn report(r: &ConjectureReport) -> Value {
    json!({
        "log_concave": r.log_concave,
        "no_internal_zeros": r.no_internal_zeros,
        "unimodal": r.unimodal,
        "first_violation": r.first_violation.map(|v| json!({
            "kind": v.kind.to_string(),
            "index": v.index,
        })),
    })
}

pub fn record(rec: &ScanRecord) -> Map<String, Value> {
    let v = json!({
        "word": rec.word.letters(),
        "strands": rec.word.strands(),
        "ell": rec.ell,
        "tb": rec.tb,
        "mu": rec.mu,
        "rtilde": sequence(&rec.rtilde),
        "report": report(&rec.report),
    });
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

/// Reads a record emitted by [`record`] back by rebuilding its cache line
/// and handing it to the cache parser, which rechecks every derived field.
pub fn record_from_json(v: &Value) -> Result<ScanRecord, String> {
    let field = |k: &str| v.get(k).ok_or_else(|| format!("missing key {k:?}"));
    let join = |k: &str| -> Result<String, String> {
        let arr = field(k)?.as_array().ok_or_else(|| format!("{k:?} is not an array"))?;
        Ok(arr.iter().map(Value::to_string).collect::<Vec<_>>().join(","))
    };
    let flag = |k: &str| -> Result<bool, String> {
        field("report")?
            .get(k)
            .and_then(Value::as_bool)
            .ok_or_else(|| format!("missing report flag {k:?}"))
    };
    let line = format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        join("word")?,
        field("strands")?,
        field("ell")?,
        field("tb")?,
        join("rtilde")?,
        flag("log_concave")?,
        flag("no_internal_zeros")?,
        flag("unimodal")?,
    );
    let rec = parse_record(&line, 1).map_err(|e| e.to_string())?;
    if field("mu")?.as_i64() != Some(rec.mu) {
        return Err("mu disagrees with the word".into());
    }
    Ok(rec)
}

pub const RECORD_HEADER: [&str; 9] = [
    "word",
    "strands",
    "ell",
    "tb",
    "mu",
    "rtilde",
    "log_concave",
    "no_internal_zeros",
    "unimodal",
];

pub fn record_row(rec: &ScanRecord) -> Vec<String> {
    vec![
        rec.word.letters_csv(),
        rec.word.strands().to_string(),
        rec.ell.to_string(),
        rec.tb.to_string(),
        rec.mu.to_string(),
        rec.rtilde.to_csv(),
        rec.report.log_concave.to_string(),
        rec.report.no_internal_zeros.to_string(),
        rec.report.unimodal.to_string(),
    ]
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human summary of a report, e.g. `log-concave yes, no internal zeros yes, unimodal yes`.
pub fn report_line(r: &ConjectureReport) -> String {
    let mut s = format!(
        "log-concave {}, no internal zeros {}, unimodal {}",
        yes_no(r.log_concave),
        yes_no(r.no_internal_zeros),
        yes_no(r.unimodal)
    );
    if let Some(v) = r.first_violation {
        s.push_str(&format!(" (first failure: {} at index {})", v.kind, v.index));
    }
    s
}
