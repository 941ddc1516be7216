use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::graph::DynkinGraph;
use super::{antidiagonal_binoms, ClosedFormError};
use crate::braidcore::BraidWord;
use crate::exactalg::BpsSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeFamily {
    A,
    D,
    E,
}

/// A simple singularity `A_n (n >= 1)`, `D_n (n >= 4)` or `E_6, E_7, E_8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdeLabel {
    family: AdeFamily,
    index: usize,
}

impl AdeLabel {
    pub fn new(family: AdeFamily, index: usize) -> Result<Self, ClosedFormError> {
        let ok = match family {
            AdeFamily::A => index >= 1,
            AdeFamily::D => index >= 4,
            AdeFamily::E => (6..=8).contains(&index),
        };
        if ok {
            Ok(Self { family, index })
        } else {
            Err(ClosedFormError::InvalidLabel(format!("{family:?}{index}")))
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(AdeFamily::A, n).expect("A_n needs n >= 1")
    }

    pub fn d(n: usize) -> Self {
        Self::new(AdeFamily::D, n).expect("D_n needs n >= 4")
    }

    pub fn e(n: usize) -> Self {
        Self::new(AdeFamily::E, n).expect("E_n needs n in 6..=8")
    }

    pub fn family(&self) -> AdeFamily {
        self.family
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// The delta-invariant, i.e. the top index of the BPS sequence.
    pub fn delta(&self) -> usize {
        match self.family {
            AdeFamily::A => self.index.div_ceil(2),
            AdeFamily::D => self.index / 2 + 1,
            AdeFamily::E => match self.index {
                6 => 3,
                _ => 4,
            },
        }
    }

    /// Every label with index at most `max_index`, in family order.
    pub fn all_up_to(max_index: usize) -> Vec<Self> {
        let a = (1..=max_index).map(Self::a);
        let d = (4..=max_index).map(Self::d);
        let e = (6..=max_index.min(8)).map(Self::e);
        a.chain(d).chain(e).collect()
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.index)
    }
}

impl FromStr for AdeLabel {
    type Err = ClosedFormError;

    /// `A4`, `d5`, `E_6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ClosedFormError::InvalidLabel(s.to_string());
        let s_trim = s.trim();
        let mut chars = s_trim.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => AdeFamily::A,
            Some('D') => AdeFamily::D,
            Some('E') => AdeFamily::E,
            _ => return Err(bad()),
        };
        let index = chars
            .as_str()
            .trim_start_matches('_')
            .parse::<usize>()
            .map_err(|_| bad())?;
        Self::new(family, index).map_err(|_| bad())
    }
}

/// BPS sequence `(n_0, ..., n_delta)` of an ADE singularity from the
/// binomial closed forms (type A, D) or the tabulated values (type E).
pub fn ade_bps(label: AdeLabel) -> BpsSequence {
    let n = label.index;
    let delta = label.delta() as i64;
    let len = delta as usize + 1;
    let coeffs: Vec<BigInt> = match label.family {
        // A_{2d-1}: C(d+h, d-h); A_{2d}: C(d+h+1, d-h)
        AdeFamily::A if n % 2 == 1 => antidiagonal_binoms(delta, delta, len),
        AdeFamily::A => antidiagonal_binoms(delta + 1, delta, len),
        AdeFamily::D => {
            // D_{2d-1}: shift 2; D_{2d-2}: shift 3
            let s = if n % 2 == 1 { 2 } else { 3 };
            let t1 = antidiagonal_binoms(delta - s, delta, len);
            let t2 = antidiagonal_binoms(delta - s, delta - 1, len);
            let t3 = antidiagonal_binoms(delta - s + 1, delta - 2, len);
            (0..len).map(|h| &t1[h] + &t2[h] * 2 + &t3[h]).collect()
        }
        AdeFamily::E => {
            let v: &[i64] = match n {
                6 => &[5, 10, 6, 1],
                7 => &[2, 11, 15, 7, 1],
                _ => &[7, 21, 21, 8, 1],
            };
            v.iter().map(|&x| BigInt::from(x)).collect()
        }
    };
    BpsSequence::new(coeffs)
}

/// `R~` of `sigma_1^k` on two strands: the type-A closed form for
/// `A_{k-1}`, and `1` for `k <= 1`.
pub fn two_strand_rtilde(k: usize) -> BpsSequence {
    if k <= 1 {
        BpsSequence::one()
    } else {
        ade_bps(AdeLabel::a(k - 1))
    }
}

/// The Dynkin diagram: a path for `A_n`; the path `1..n-2` with `n-1` and
/// `n` both attached to `n-2` for `D_n`; the path `1..n-1` with `n`
/// attached to vertex 3 for `E_n`.
pub fn ade_graph(label: AdeLabel) -> DynkinGraph {
    let n = label.index;
    let path = |len: usize| (1..len).map(|i| (i, i + 1)).collect::<Vec<_>>();
    let edges = match label.family {
        AdeFamily::A => path(n),
        AdeFamily::D => {
            let mut e = path(n - 2);
            e.push((n - 2, n - 1));
            e.push((n - 2, n));
            e
        }
        AdeFamily::E => {
            let mut e = path(n - 1);
            e.push((3, n));
            e
        }
    };
    DynkinGraph::new(n, edges).expect("ADE diagrams are valid graphs")
}

/// Positive braid whose rainbow closure is the Legendrian link of the
/// singularity: `sigma_1^{n+1}` for `A_n`, `sigma_1^{n-2} sigma_2 sigma_1^2
/// sigma_2` for `D_n`, `sigma_1^{n-3} sigma_2 sigma_1^3 sigma_2` for `E_n`.
pub fn ade_braid(label: AdeLabel) -> BraidWord {
    let n = label.index;
    let (strands, letters) = match label.family {
        AdeFamily::A => (2, vec![1; n + 1]),
        AdeFamily::D => (3, [vec![1; n - 2], vec![2, 1, 1, 2]].concat()),
        AdeFamily::E => (3, [vec![1; n - 3], vec![2, 1, 1, 1, 2]].concat()),
    };
    BraidWord::new(strands, letters).expect("ADE braid letters are in range")
}
