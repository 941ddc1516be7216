//! Z/2-graded normal rulings of rainbow closures, counted by switch number.
//!
//! Front model: a vertical slice through the braid region of `beta^>` on `n`
//! strands meets `2n` points, numbered `1..=2n` from bottom to top. Points
//! `1..=n` are braid strands and `n+1..=2n` the returning rainbow arcs; the
//! nested left cusps pair point `i` with `2n + 1 - i`. A ruling pairs the
//! points of every slice into eyes. Crossing `sigma_k` exchanges points `k`
//! and `k + 1`, and at each crossing the ruling either
//!
//! - switches: both paths turn, the pairing of points is unchanged, and the
//!   two eyes involved must be nested or disjoint (normality), or
//! - passes through: the pairing is conjugated by the transposition `(k k+1)`.
//!
//! Two paths of the same eye may only meet at cusps, so a crossing between
//! paired points ends the branch. A ruling is a choice sequence whose final
//! pairing is again the nested one, matching the right cusps. All crossings
//! of a positive braid have even degree, so Z/2 grading imposes nothing
//! beyond normality.
//!
//! States are packed 4 bits per point into a `u64`, which caps the model at
//! 8 strands (16 points).

use std::collections::{BTreeMap, HashMap};
use std::ops::AddAssign;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::braidcore::{closure_components, BraidWord};
use crate::exactalg::{BpsSequence, ZLaurent};

/// Largest strand count the packed state supports.
pub const MAX_STRANDS: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RulingError {
    #[error("{strands} strands exceeds the ruling enumerator limit of {max}")]
    TooManyStrands { strands: usize, max: usize },
    #[error("z^ell R(z) = {poly} is not a polynomial in z^2")]
    NotEvenPolynomial { poly: String },
    #[error("pairs do not form a fixed-point-free involution on 1..={positions}")]
    InvalidState { positions: usize },
}

/// A fixed-point-free involution on slice points `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RulingState {
    partner: Vec<usize>,
}

impl RulingState {
    /// Builds a state from disjoint pairs covering every point `1..=2n`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, RulingError> {
        let positions = 2 * n;
        let bad = RulingError::InvalidState { positions };
        let mut partner = vec![0; positions];
        for &(a, b) in pairs {
            if a == b || a == 0 || b == 0 || a > positions || b > positions {
                return Err(bad);
            }
            if partner[a - 1] != 0 || partner[b - 1] != 0 {
                return Err(bad);
            }
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        if partner.contains(&0) {
            return Err(bad);
        }
        Ok(Self { partner })
    }

    pub fn positions(&self) -> usize {
        self.partner.len()
    }

    /// Point paired with `i` (1-based).
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1]
    }

    /// Pairs `(i, partner(i))` with `i < partner(i)`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.positions())
            .filter(|&i| i < self.partner(i))
            .map(|i| (i, self.partner(i)))
            .collect()
    }

    fn pack(&self) -> u64 {
        self.partner
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &p)| acc | (((p - 1) as u64) << (4 * i)))
    }

    fn unpack(key: u64, positions: usize) -> Self {
        Self {
            partner: (0..positions).map(|i| packed::get(key, i) + 1).collect(),
        }
    }
}

/// Operations on packed states with 0-based points.
mod packed {
    #[inline]
    pub fn get(key: u64, i: usize) -> usize {
        ((key >> (4 * i)) & 0xF) as usize
    }

    #[inline]
    fn set(key: u64, i: usize, v: usize) -> u64 {
        (key & !(0xF << (4 * i))) | ((v as u64) << (4 * i))
    }

    /// Lower point `k` and upper point `k + 1` are paired with each other.
    #[inline]
    pub fn paired(key: u64, k: usize) -> bool {
        get(key, k) == k + 1
    }

    /// Normality at a switch of points `k`, `k + 1`: the two eyes are
    /// nested or disjoint, never interleaved.
    #[inline]
    pub fn switch_allowed(key: u64, k: usize) -> bool {
        if paired(key, k) {
            return false;
        }
        let (a, b) = (k, get(key, k));
        let (c, d) = (k + 1, get(key, k + 1));
        let (lo1, hi1) = (a.min(b), a.max(b));
        let (lo2, hi2) = (c.min(d), c.max(d));
        let interleaved = (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
        !interleaved
    }

    /// Conjugation of the pairing by the transposition `(k k+1)`.
    #[inline]
    pub fn pass(key: u64, k: usize) -> u64 {
        let tau = |x: usize| {
            if x == k {
                k + 1
            } else if x == k + 1 {
                k
            } else {
                x
            }
        };
        let pk = get(key, k);
        let pk1 = get(key, k + 1);
        // The partners of k and k+1 now point at the swapped positions.
        let mut out = key;
        out = set(out, pk, k + 1);
        out = set(out, pk1, k);
        out = set(out, k, tau(pk1));
        out = set(out, k + 1, tau(pk));
        out
    }
}

/// Nested pairing `i <-> 2n + 1 - i` produced by the left cusps.
pub fn initial_state(n: usize) -> RulingState {
    RulingState {
        partner: (1..=2 * n).map(|i| 2 * n + 1 - i).collect(),
    }
}

/// Whether a switch at crossing `k` (points `k`, `k + 1`) is normal.
pub fn switch_allowed(st: &RulingState, k: usize) -> bool {
    assert!(k >= 1 && k < st.positions(), "crossing position out of range");
    packed::switch_allowed(st.pack(), k - 1)
}

/// One crossing of the DP: `None` when the branch dies.
pub fn step(st: &RulingState, k: usize, switch: bool) -> Option<RulingState> {
    assert!(k >= 1 && k < st.positions(), "crossing position out of range");
    let key = st.pack();
    let k0 = k - 1;
    if packed::paired(key, k0) {
        return None;
    }
    if switch {
        packed::switch_allowed(key, k0).then(|| st.clone())
    } else {
        Some(RulingState::unpack(packed::pass(key, k0), st.positions()))
    }
}

/// Number of rulings with each switch count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwitchDistribution {
    counts: BTreeMap<usize, BigUint>,
}

impl SwitchDistribution {
    pub fn from_counts<I: IntoIterator<Item = (usize, BigUint)>>(iter: I) -> Self {
        let mut counts = BTreeMap::new();
        for (s, c) in iter {
            if !c.is_zero() {
                *counts.entry(s).or_insert_with(BigUint::zero) += c;
            }
        }
        Self { counts }
    }

    pub fn get(&self, switches: usize) -> BigUint {
        self.counts.get(&switches).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.counts.iter().map(|(s, c)| (*s, c))
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

trait Count: Clone + Zero + One + for<'a> AddAssign<&'a Self> {}
impl Count for u64 {}
impl Count for BigUint {}

/// Forward layered DP: after processing letter `t`, maps each reachable state
/// to its path counts indexed by switch number. Equivalent to memoising on
/// `(letter index, state)`.
fn final_layer<T: Count>(w: &BraidWord) -> HashMap<u64, Vec<T>> {
    let len = w.len();
    let mut layer: HashMap<u64, Vec<T>> = HashMap::new();
    let mut init = vec![T::zero(); len + 1];
    init[0] = T::one();
    layer.insert(initial_state(w.strands()).pack(), init);
    for &k in w.letters() {
        let k0 = k - 1;
        let mut next: HashMap<u64, Vec<T>> = HashMap::with_capacity(layer.len() * 2);
        for (key, dist) in layer {
            if packed::paired(key, k0) {
                continue;
            }
            if packed::switch_allowed(key, k0) {
                let slot = next.entry(key).or_insert_with(|| vec![T::zero(); len + 1]);
                for s in 0..len {
                    if !dist[s].is_zero() {
                        slot[s + 1] += &dist[s];
                    }
                }
            }
            let slot = next
                .entry(packed::pass(key, k0))
                .or_insert_with(|| vec![T::zero(); len + 1]);
            for s in 0..=len {
                if !dist[s].is_zero() {
                    slot[s] += &dist[s];
                }
            }
        }
        layer = next;
    }
    layer
}

fn check_strands(w: &BraidWord) -> Result<(), RulingError> {
    if w.strands() > MAX_STRANDS {
        Err(RulingError::TooManyStrands {
            strands: w.strands(),
            max: MAX_STRANDS,
        })
    } else {
        Ok(())
    }
}

fn to_distribution<T: Into<BigUint>>(dist: Vec<T>) -> SwitchDistribution {
    SwitchDistribution::from_counts(dist.into_iter().enumerate().map(|(s, c)| (s, c.into())))
}

/// Every terminal state of the DP with its switch distribution, including
/// states other than the nested one (which do not close up into rulings).
pub fn final_states(w: &BraidWord) -> Result<Vec<(RulingState, SwitchDistribution)>, RulingError> {
    check_strands(w)?;
    let positions = 2 * w.strands();
    let mut out: Vec<_> = final_layer::<BigUint>(w)
        .into_iter()
        .map(|(key, dist)| (RulingState::unpack(key, positions), to_distribution(dist)))
        .filter(|(_, d)| !d.is_empty())
        .collect();
    out.sort_by(|a, b| a.0.partner.cmp(&b.0.partner));
    Ok(out)
}

/// Switch-count distribution of the normal rulings of `w^>`.
pub fn enumerate(w: &BraidWord) -> Result<SwitchDistribution, RulingError> {
    check_strands(w)?;
    let target = initial_state(w.strands()).pack();
    // At most 2^len paths in total, so u64 cannot overflow below 64 letters.
    Ok(if w.len() < 64 {
        final_layer::<u64>(w)
            .remove(&target)
            .map(to_distribution)
            .unwrap_or_default()
    } else {
        final_layer::<BigUint>(w)
            .remove(&target)
            .map(to_distribution)
            .unwrap_or_default()
    })
}

/// `R(z) = sum_rho z^{|S(rho)| - n}`, the number of right cusps being `n`.
pub fn ruling_poly(w: &BraidWord) -> Result<ZLaurent, RulingError> {
    let n = w.strands() as i64;
    let dist = enumerate(w)?;
    Ok(ZLaurent::from_terms(
        dist.iter().map(|(s, c)| (s as i64 - n, BigInt::from(c.clone()))),
    ))
}

/// Converts `z^ell R(z)` into coefficients of a polynomial in `z^2`.
pub fn normalize(r: &ZLaurent, ell: usize) -> Result<BpsSequence, RulingError> {
    let shifted = r.shift(ell as i64);
    let bad = || RulingError::NotEvenPolynomial {
        poly: shifted.to_string(),
    };
    if shifted.is_zero() {
        return Err(bad());
    }
    let top = shifted.degree().unwrap_or(0);
    if shifted.terms().any(|(e, _)| e < 0 || e % 2 != 0) {
        return Err(bad());
    }
    let mut coeffs = vec![BigInt::zero(); (top / 2) as usize + 1];
    for (e, c) in shifted.terms() {
        coeffs[(e / 2) as usize] = c.clone();
    }
    Ok(BpsSequence::new(coeffs))
}

/// `R~(z) = z^ell R(z)` as a sequence in `z^2`.
pub fn normalized_ruling_poly(w: &BraidWord) -> Result<BpsSequence, RulingError> {
    normalize(&ruling_poly(w)?, closure_components(w))
}

/// The BPS sequence `(n_0, ..., n_delta)` carried by `w^>`; identical to
/// [`normalized_ruling_poly`]. For braids of singularity links this is the
/// genus-expansion data of the singularity, with `delta` the top index.
pub fn bps_from_braid(w: &BraidWord) -> Result<BpsSequence, RulingError> {
    normalized_ruling_poly(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn dist(pairs: &[(usize, u32)]) -> SwitchDistribution {
        SwitchDistribution::from_counts(pairs.iter().map(|&(s, c)| (s, BigUint::from(c))))
    }

    fn seq(v: &[i64]) -> BpsSequence {
        BpsSequence::from_i64s(v)
    }

    #[test]
    fn initial_state_is_nested() {
        assert_eq!(initial_state(1).pairs(), vec![(1, 2)]);
        assert_eq!(initial_state(2).pairs(), vec![(1, 4), (2, 3)]);
        assert_eq!(initial_state(3).pairs(), vec![(1, 6), (2, 5), (3, 4)]);
    }

    #[test]
    fn switch_normality() {
        let nested = initial_state(2);
        assert!(switch_allowed(&nested, 1));
        let inter = RulingState::from_pairs(2, &[(1, 3), (2, 4)]).unwrap();
        assert!(!switch_allowed(&inter, 1));
        let adjacent = RulingState::from_pairs(2, &[(1, 2), (3, 4)]).unwrap();
        assert!(!switch_allowed(&adjacent, 1));
        let disjoint = RulingState::from_pairs(3, &[(1, 2), (3, 6), (4, 5)]).unwrap();
        assert!(switch_allowed(&disjoint, 2));
    }

    #[test]
    fn step_examples() {
        let nested = initial_state(2);
        let inter = RulingState::from_pairs(2, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(step(&nested, 1, false), Some(inter.clone()));
        assert_eq!(step(&nested, 1, true), Some(nested.clone()));
        assert_eq!(step(&inter, 1, true), None);
        let adjacent = RulingState::from_pairs(2, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(step(&adjacent, 1, false), None);
        assert_eq!(step(&adjacent, 1, true), None);
    }

    #[test]
    fn from_pairs_rejects_non_involutions() {
        assert!(RulingState::from_pairs(2, &[(1, 2)]).is_err());
        assert!(RulingState::from_pairs(2, &[(1, 2), (2, 3)]).is_err());
        assert!(RulingState::from_pairs(1, &[(1, 1)]).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(&word("1^3@2")).unwrap(), dist(&[(1, 2), (3, 1)]));
        assert_eq!(enumerate(&word("1^2@2")).unwrap(), dist(&[(0, 1), (2, 1)]));
        for n in 1..=4 {
            let empty = BraidWord::new(n, vec![]).unwrap();
            assert_eq!(enumerate(&empty).unwrap(), dist(&[(0, 1)]));
        }
    }

    #[test]
    fn ruling_poly_examples() {
        assert_eq!(
            ruling_poly(&word("1^3@2")).unwrap(),
            ZLaurent::from_terms([(-1, 2), (1, 1)])
        );
        assert_eq!(ruling_poly(&word("1@2")).unwrap(), ZLaurent::monomial(1, -1));
        assert_eq!(ruling_poly(&word("@1")).unwrap(), ZLaurent::monomial(1, -1));
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(
            normalized_ruling_poly(&word("1^2,2^2,3^2,4^2,3^2,2,1@5")).unwrap(),
            seq(&[4, 20, 33, 24, 8, 1])
        );
        assert_eq!(
            normalized_ruling_poly(&word("1^3,2,1^3,2@3")).unwrap(),
            seq(&[5, 10, 6, 1])
        );
        assert_eq!(normalized_ruling_poly(&word("1^4@2")).unwrap(), seq(&[1, 3, 1]));
    }

    #[test]
    fn bps_examples() {
        assert_eq!(bps_from_braid(&word("1^5@2")).unwrap(), seq(&[3, 4, 1]));
        assert_eq!(bps_from_braid(&word("1^2,2,1^2,2@3")).unwrap(), seq(&[1, 3, 4, 1]));
        assert_eq!(
            bps_from_braid(&BraidWord::torus(3, 4).unwrap()).unwrap(),
            seq(&[5, 10, 6, 1])
        );
    }

    #[test]
    fn big_path_agrees_with_u64_path() {
        let w = BraidWord::torus(3, 5).unwrap();
        let target = initial_state(3).pack();
        let small = final_layer::<u64>(&w).remove(&target).map(to_distribution);
        let big = final_layer::<BigUint>(&w).remove(&target).map(to_distribution);
        assert_eq!(small, big);
    }

    #[test]
    fn long_words_use_big_counts() {
        // 70 letters forces the arbitrary-precision path.
        let w = BraidWord::two_strand_tower(70);
        let r = bps_from_braid(&w).unwrap();
        assert_eq!(r.delta(), 35);
        assert_eq!(r.coeffs()[0], BigInt::from(1));
    }

    #[test]
    fn rejects_too_many_strands() {
        let w = BraidWord::new(9, vec![1]).unwrap();
        assert_eq!(enumerate(&w), Err(RulingError::TooManyStrands { strands: 9, max: 8 }));
    }

    #[test]
    fn normalize_rejects_odd_powers() {
        let r = ZLaurent::from_terms([(0, 1), (1, 1)]);
        assert!(matches!(normalize(&r, 0), Err(RulingError::NotEvenPolynomial { .. })));
        assert!(matches!(
            normalize(&ZLaurent::monomial(1, -2), 0),
            Err(RulingError::NotEvenPolynomial { .. })
        ));
    }
}
