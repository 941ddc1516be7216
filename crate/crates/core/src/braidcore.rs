//! Positive braid words, their permutations and classical invariants, and
//! the word surgeries used by the multiplicativity decomposition.
//!
//! Strands are numbered `1..=n` from bottom to top and generator `k` crosses
//! strands `k` and `k + 1`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator {letter} is outside 1..={max} for {strands} strands")]
    GeneratorOutOfRange { letter: usize, strands: usize, max: usize },
    #[error("cannot parse braid word {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A word in the positive generators `sigma_1, ..., sigma_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(BraidError::GeneratorOutOfRange {
                letter,
                strands,
                max: strands - 1,
            });
        }
        Ok(Self { strands, letters })
    }

    /// Word on the fewest strands that fit its letters (at least 2 when
    /// nonempty, 1 for the empty word).
    pub fn from_letters(letters: Vec<usize>) -> Result<Self, BraidError> {
        let strands = letters.iter().max().map_or(1, |m| m + 1);
        Self::new(strands, letters)
    }

    /// `sigma_1^k` on two strands.
    pub fn two_strand_tower(k: usize) -> Self {
        Self {
            strands: 2,
            letters: vec![1; k],
        }
    }

    /// `(sigma_1 ... sigma_{n-1})^m` on `n` strands.
    pub fn torus(n: usize, m: usize) -> Result<Self, BraidError> {
        let cycle: Vec<usize> = (1..n).collect();
        Self::new(n, cycle.repeat(m))
    }

    /// Concatenation on the larger of the two strand counts.
    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Crossing count `e`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Maximal runs `(index, exponent)` of equal letters.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((i, e)) if *i == l => *e += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Comma-joined letters, e.g. `1,1,2`; empty for the empty word.
    pub fn letters_csv(&self) -> String {
        self.letters
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Human form such as `s1^2 s2 s1`.
    pub fn pretty(&self) -> String {
        if self.letters.is_empty() {
            return format!("(empty word on {} strands)", self.strands);
        }
        self.grouped()
            .iter()
            .map(|&(i, e)| if e == 1 { format!("s{i}") } else { format!("s{i}^{e}") })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    /// The CLI syntax: grouped letters with caret exponents and `@strands`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .grouped()
            .iter()
            .map(|&(i, e)| if e == 1 { i.to_string() } else { format!("{i}^{e}") })
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{body}@{}", self.strands)
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses `1^2,2^2,3^2,4^2,3^2,2,1@5`. The `@n` suffix is optional and
    /// defaults to the largest index plus one; `@3` alone is the empty word
    /// on three strands.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| BraidError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s_trim: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, strands) = match s_trim.split_once('@') {
            Some((b, n)) => {
                let n: usize = n.parse().map_err(|_| err("strand count after '@' is not a number"))?;
                (b.to_string(), Some(n))
            }
            None => (s_trim.clone(), None),
        };
        let mut letters = Vec::new();
        if !body.is_empty() {
            for tok in body.split(',') {
                let (idx, exp) = match tok.split_once('^') {
                    Some((i, e)) => (i, e.parse::<usize>().map_err(|_| err("bad exponent"))?),
                    None => (tok, 1),
                };
                let idx: usize = idx.parse().map_err(|_| err("bad generator index"))?;
                letters.extend(std::iter::repeat_n(idx, exp));
            }
        } else if strands.is_none() {
            return Err(err("empty word needs an explicit strand count, e.g. '@2'"));
        }
        match strands {
            Some(n) => Self::new(n, letters),
            None => Self::from_letters(letters),
        }
    }
}

/// A permutation of `{1, ..., n}` stored as `images[i - 1] = pi(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Cycles in order of their smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image(i);
            }
            out.push(cycle);
        }
        out
    }
}

/// Strand permutation: `pi(i)` is the final position of the strand that
/// enters at position `i`, following the crossings left to right.
pub fn permutation(w: &BraidWord) -> Permutation {
    // at[p] = strand currently at position p (0-based)
    let mut at: Vec<usize> = (1..=w.strands).collect();
    for &k in &w.letters {
        at.swap(k - 1, k);
    }
    let mut images = vec![0; w.strands];
    for (pos, &strand) in at.iter().enumerate() {
        images[strand - 1] = pos + 1;
    }
    Permutation { images }
}

/// Number of components of the closure, i.e. cycles of the permutation.
pub fn closure_components(w: &BraidWord) -> usize {
    permutation(w).cycles().len()
}

/// Crossing count, Thurston-Bennequin number, Milnor number, component count
/// and (when it is an integer) the delta-invariant of the rainbow closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalInvariants {
    pub e: usize,
    pub tb: i64,
    pub mu: i64,
    pub ell: usize,
    /// `(mu + ell - 1) / 2`, present only when that is a nonnegative integer.
    pub delta: Option<u64>,
}

pub fn classical_invariants(w: &BraidWord) -> ClassicalInvariants {
    let e = w.len();
    let tb = e as i64 - w.strands as i64;
    let mu = tb + 1;
    let ell = closure_components(w);
    let twice = mu + ell as i64 - 1;
    let delta = (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as u64);
    ClassicalInvariants { e, tb, mu, ell, delta }
}

/// Adds `n - 1` parallel strands below `g`: every index shifts up by `n - 1`.
pub fn shift_embed(g: &BraidWord, n: usize) -> BraidWord {
    assert!(n >= 1, "shift_embed needs n >= 1");
    BraidWord {
        strands: g.strands + n - 1,
        letters: g.letters.iter().map(|l| l + n - 1).collect(),
    }
}

/// Lexicographically least cyclic rotation of the letters.
pub fn canonical_rotation(w: &BraidWord) -> BraidWord {
    let len = w.letters.len();
    let best = (0..len)
        .min_by(|&a, &b| {
            let ra = w.letters[a..].iter().chain(&w.letters[..a]);
            let rb = w.letters[b..].iter().chain(&w.letters[..b]);
            ra.cmp(rb)
        })
        .unwrap_or(0);
    let mut letters = w.letters[best..].to_vec();
    letters.extend_from_slice(&w.letters[..best]);
    BraidWord {
        strands: w.strands,
        letters,
    }
}

pub fn is_canonical(w: &BraidWord) -> bool {
    canonical_rotation(w).letters == w.letters
}

/// Split of a single-peak word `beta_1 * shift(gamma) * beta_2` at its peak
/// block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakSplit {
    /// Blocks before the peak, on `n` strands.
    pub beta1: BraidWord,
    /// The peak block shifted down, on `m` strands.
    pub gamma: BraidWord,
    /// Blocks after the peak, on `n` strands.
    pub beta2: BraidWord,
    pub n: usize,
    pub m: usize,
}

impl PeakSplit {
    /// `beta_1 beta_2` on `n` strands.
    pub fn flanks(&self) -> BraidWord {
        self.beta1.concat(&self.beta2).expect("flanks share a strand count")
    }

    /// Reassembles `beta_1 * shift_embed(gamma, n) * beta_2`.
    pub fn reassemble(&self) -> BraidWord {
        let mid = shift_embed(&self.gamma, self.n);
        let mut letters = self.beta1.letters.clone();
        letters.extend_from_slice(&mid.letters);
        letters.extend_from_slice(&self.beta2.letters);
        BraidWord {
            strands: mid.strands,
            letters,
        }
    }
}

/// Decomposes `sigma_{i_1}^{e_1} ... sigma_{i_M}^{e_M}` at its peak when the
/// grouped indices rise strictly and then fall strictly.
///
/// With peak index `p`, the flanks live on `n = p` strands and the peak block
/// becomes `sigma_1^{e}` on `m = strands - p + 1` strands. Returns `None` for
/// the empty word and for words whose grouped indices are not single-peak.
pub fn single_peak_decompose(w: &BraidWord) -> Option<PeakSplit> {
    let groups = w.grouped();
    let peak = groups
        .iter()
        .enumerate()
        .max_by_key(|(_, (i, _))| *i)
        .map(|(pos, _)| pos)?;
    let rising = groups[..=peak].windows(2).all(|g| g[0].0 < g[1].0);
    let falling = groups[peak..].windows(2).all(|g| g[0].0 > g[1].0);
    if !(rising && falling) {
        return None;
    }
    let (p, e) = groups[peak];
    let n = p;
    let m = w.strands - p + 1;
    let expand =
        |gs: &[(usize, usize)]| -> Vec<usize> { gs.iter().flat_map(|&(i, e)| std::iter::repeat_n(i, e)).collect() };
    Some(PeakSplit {
        beta1: BraidWord {
            strands: n,
            letters: expand(&groups[..peak]),
        },
        gamma: BraidWord {
            strands: m,
            letters: vec![1; e],
        },
        beta2: BraidWord {
            strands: n,
            letters: expand(&groups[peak + 1..]),
        },
        n,
        m,
    })
}
