use std::fs;
use std::io::Write;

use bps_core::braidcore::{canonical_rotation, single_peak_decompose, BraidWord};
use bps_core::rulingdp::normalized_ruling_poly;
use bps_core::scanner::{
    cache_append, cache_load, format_record, scan, singlepeak_eval, verify_multiplicativity, ScanConfig, ScanError,
    ScanRecord,
};
use bps_core::BpsSequence;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Grouped index sequences that rise strictly then fall strictly, with
/// exponents summing to at most `max_len`, on `strands` strands.
fn single_peak_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    fn extend(groups: &mut Vec<(usize, usize)>, used: usize, strands: usize, max_len: usize, out: &mut Vec<BraidWord>) {
        if !groups.is_empty() {
            let letters: Vec<usize> = groups.iter().flat_map(|&(i, e)| std::iter::repeat_n(i, e)).collect();
            let w = BraidWord::new(strands, letters).unwrap();
            if single_peak_decompose(&w).is_some() {
                out.push(w);
            }
        }
        for i in 1..strands {
            if groups.last().is_some_and(|&(j, _)| j == i) {
                continue;
            }
            for e in 1..=max_len - used {
                groups.push((i, e));
                extend(groups, used + e, strands, max_len, out);
                groups.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 0, strands, max_len, &mut out);
    out
}

#[test]
fn single_peak_evaluation_matches_rulings() {
    let mut checked = 0;
    for strands in 2..=5 {
        let max_len = if strands == 5 { 10 } else { 12 };
        for w in single_peak_words(strands, max_len) {
            assert_eq!(singlepeak_eval(&w).unwrap(), normalized_ruling_poly(&w).unwrap(), "{w}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn single_peak_long_words_on_five_strands() {
    let mut rng = StdRng::seed_from_u64(21);
    let all = single_peak_words(5, 12);
    for _ in 0..400 {
        let w = &all[rng.gen_range(0..all.len())];
        assert_eq!(singlepeak_eval(w).unwrap(), normalized_ruling_poly(w).unwrap(), "{w}");
    }
}

fn random_on(rng: &mut StdRng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| rng.gen_range(1..strands.max(2))).collect();
    if strands == 1 {
        return BraidWord::new(1, Vec::new()).unwrap();
    }
    BraidWord::new(strands, letters).unwrap()
}

#[test]
fn multiplicativity_on_random_triples() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(2..=3);
        let b1 = random_on(&mut rng, n, 6);
        let b2 = random_on(&mut rng, n, 6);
        let g = random_on(&mut rng, m, 6);
        assert!(verify_multiplicativity(&b1, &g, &b2).unwrap(), "{b1} | {g} | {b2}");
    }
}

#[test]
fn scan_is_independent_of_worker_count() {
    let mut a = ScanConfig::new(4, 7);
    a.workers = 1;
    let mut b = a.clone();
    b.workers = 8;
    let (ra, rb) = (scan(&a).unwrap(), scan(&b).unwrap());
    assert_eq!(ra.records, rb.records);
    assert!(ra.records.windows(2).all(|p| p[0].sort_key() < p[1].sort_key()));
    assert_eq!(ra.violations().count(), 0);
}

#[test]
fn scan_records_are_rotation_representatives() {
    let mut rng = StdRng::seed_from_u64(4);
    let out = scan(&ScanConfig::new(3, 8)).unwrap();
    for _ in 0..100 {
        let rec = &out.records[rng.gen_range(0..out.records.len())];
        assert_eq!(canonical_rotation(&rec.word), rec.word);
        let letters = rec.word.letters();
        let r = rng.gen_range(0..letters.len());
        let rotated = BraidWord::new(rec.word.strands(), [&letters[r..], &letters[..r]].concat()).unwrap();
        assert_eq!(normalized_ruling_poly(&rotated).unwrap(), rec.rtilde);
        assert!(rec.report.implication_holds());
    }
}

#[test]
fn cache_round_trip_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.tsv");
    let mut cfg = ScanConfig::new(3, 6);
    cfg.cache_path = Some(path.clone());
    let first = scan(&cfg).unwrap();
    assert_eq!(first.reused, 0);
    assert_eq!(cache_load(&path).unwrap(), first.records);

    cfg.resume = true;
    cfg.workers = 4;
    let again = scan(&cfg).unwrap();
    assert_eq!(again.computed, 0);
    assert_eq!(again.records, first.records);

    // a longer scan reuses every cached record
    cfg.max_length = 7;
    let longer = scan(&cfg).unwrap();
    assert_eq!(longer.reused, first.records.len());
    assert_eq!(longer.computed + longer.reused, longer.records.len());
    let shorter: Vec<_> = longer.records.iter().filter(|r| r.word.len() <= 6).cloned().collect();
    assert!(shorter == first.records);
}

#[test]
fn cache_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.tsv");
    fs::write(&path, "").unwrap();
    assert!(cache_load(&path).unwrap().is_empty());

    let rec = ScanRecord::compute("1^3,2,1^3,2@3".parse().unwrap()).unwrap();
    cache_append(&path, &rec).unwrap();
    assert_eq!(cache_load(&path).unwrap(), vec![rec.clone()]);

    // truncated final line from an interrupted write
    let partial = format_record(&rec);
    let mut f = fs::OpenOptions::new().append(true).open(&path).unwrap();
    write!(f, "{}", &partial[..partial.len() / 2]).unwrap();
    drop(f);
    assert_eq!(cache_load(&path).unwrap(), vec![rec.clone()]);

    // resuming cuts the partial line before appending
    let mut cfg = ScanConfig::new(2, 3);
    cfg.cache_path = Some(path.clone());
    cfg.resume = true;
    let out = scan(&cfg).unwrap();
    assert_eq!(out.computed, 3);
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.ends_with('\n'));

    fs::write(&path, "1,1\t2\tnope\t0\t1,1\ttrue\ttrue\ttrue\n").unwrap();
    assert!(matches!(
        cache_load(&path),
        Err(ScanError::CacheCorrupt { line: 1, .. })
    ));
}

#[test]
fn worked_example_through_every_path() {
    let w: BraidWord = "1^2,2^2,3^2,4^2,3^2,2,1@5".parse().unwrap();
    let want = BpsSequence::from_i64s(&[4, 20, 33, 24, 8, 1]);
    assert_eq!(singlepeak_eval(&w).unwrap(), want);
    assert_eq!(ScanRecord::compute(w).unwrap().rtilde, want);
}
