use bps_core::braidcore::BraidWord;
use bps_core::closedforms::{ade_braid, AdeLabel};
use bps_core::concavity::{conjecture_report, ConjectureReport};
use bps_core::rulingdp::normalized_ruling_poly;
use bps_core::BpsSequence;

/// A stored sequence with a note on where it comes from.
#[derive(Clone, Debug)]
pub struct RegressionVector {
    pub name: &'static str,
    pub sequence: BpsSequence,
    pub source: &'static str,
    /// Braid whose normalized ruling polynomial must reproduce `sequence`.
    pub braid: Option<BraidWord>,
}

#[derive(Clone, Debug)]
pub struct RegressionResult {
    pub vector: RegressionVector,
    pub report: ConjectureReport,
    /// `None` when there is no braid to recompute from.
    pub braid_matches: Option<bool>,
}

impl RegressionResult {
    pub fn passed(&self) -> bool {
        self.report.all_pass() && self.braid_matches != Some(false)
    }
}

/// Genus-expansion coefficients of a character-variety example, stored
/// rather than recomputed. The four leading zeros are part of the data.
pub const CHARACTER_VARIETY: [i64; 17] = [
    0, 0, 0, 0, 2640, 51120, 225000, 461160, 552720, 429340, 227630, 84340, 21902, 3916, 460, 32, 1,
];

pub fn vectors() -> Vec<RegressionVector> {
    let five_strand: BraidWord = "1^2,2^2,3^2,4^2,3^2,2,1@5".parse().expect("valid word");
    vec![
        RegressionVector {
            name: "five-strand",
            sequence: BpsSequence::from_i64s(&[4, 20, 33, 24, 8, 1]),
            source: "worked example: rainbow closure of s1^2 s2^2 s3^2 s4^2 s3^2 s2 s1, \
                     factoring as (1+z^2)(2+z^2)^2(1+3z^2+z^4)",
            braid: Some(five_strand),
        },
        RegressionVector {
            name: "E6",
            sequence: BpsSequence::from_i64s(&[5, 10, 6, 1]),
            source: "E6 singularity, torus knot (3,4)",
            braid: Some(ade_braid(AdeLabel::e(6))),
        },
        RegressionVector {
            name: "E7",
            sequence: BpsSequence::from_i64s(&[2, 11, 15, 7, 1]),
            source: "E7 singularity",
            braid: Some(ade_braid(AdeLabel::e(7))),
        },
        RegressionVector {
            name: "E8",
            sequence: BpsSequence::from_i64s(&[7, 21, 21, 8, 1]),
            source: "E8 singularity, torus knot (3,5)",
            braid: Some(ade_braid(AdeLabel::e(8))),
        },
        RegressionVector {
            name: "character-variety",
            sequence: BpsSequence::from_i64s(&CHARACTER_VARIETY),
            source: "stored genus-expansion coefficients of a character-variety example \
                     (degrees z^8 through z^32); not recomputed here",
            braid: None,
        },
    ]
}

pub fn regress() -> Vec<RegressionResult> {
    vectors()
        .into_iter()
        .map(|v| {
            let report = conjecture_report(&v.sequence);
            let braid_matches = v
                .braid
                .as_ref()
                .map(|b| normalized_ruling_poly(b).map(|r| r == v.sequence).unwrap_or(false));
            RegressionResult {
                vector: v,
                report,
                braid_matches,
            }
        })
        .collect()
}
