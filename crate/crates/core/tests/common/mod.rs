//! Reference implementations used as test oracles. Deliberately naive and
//! independent of the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;

/// Switch-count distribution of normal rulings of the rainbow closure of
/// `letters` on `strands` strands, by walking every subset of crossings.
///
/// Sheets are numbered `1..=2n` from the top of the braid region down: the
/// braid occupies sheets `1..=n` and the closure strands `n+1..=2n` pass
/// underneath, so sheet `i` starts paired with `2n + 1 - i`.
pub fn brute_force_switches(strands: usize, letters: &[usize]) -> BTreeMap<usize, u64> {
    let e = letters.len();
    assert!(e < 64);
    let n2 = 2 * strands;
    let start: Vec<usize> = (0..=n2).map(|i| if i == 0 { 0 } else { n2 + 1 - i }).collect();
    let mut out = BTreeMap::new();
    'subsets: for mask in 0u64..(1u64 << e) {
        let mut p = start.clone();
        for (c, &k) in letters.iter().enumerate() {
            let (a, b) = (p[k], p[k + 1]);
            if a == k + 1 {
                continue 'subsets;
            }
            if mask >> c & 1 == 1 {
                let (lo1, hi1) = (k.min(a), k.max(a));
                let (lo2, hi2) = (b.min(k + 1), b.max(k + 1));
                let disjoint = hi1 < lo2 || hi2 < lo1;
                let nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
                if !(disjoint || nested) {
                    continue 'subsets;
                }
            } else {
                // the sheets at k and k+1 exchange heights
                p[a] = k + 1;
                p[b] = k;
                p.swap(k, k + 1);
            }
        }
        if p == start {
            *out.entry(mask.count_ones() as usize).or_insert(0) += 1;
        }
    }
    out
}

/// Counts independent sets of each size by checking every vertex subset.
pub fn brute_force_independent_sets(vertices: usize, edges: &[(usize, usize)]) -> Vec<BigInt> {
    let mut counts = vec![0u64; vertices + 1];
    for mask in 0u32..(1u32 << vertices) {
        let independent = edges
            .iter()
            .all(|&(u, v)| !(mask >> (u - 1) & 1 == 1 && mask >> (v - 1) & 1 == 1));
        if independent {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts.into_iter().map(BigInt::from).collect()
}

/// Naive `C(a, b)` by Pascal's triangle, zero outside `0 <= b <= a`.
pub fn pascal(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::from(0);
    }
    let mut row = vec![BigInt::from(1)];
    for _ in 0..a {
        let mut next = vec![BigInt::from(1); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row[b as usize].clone()
}

/// Plain-integer polynomial product.
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
