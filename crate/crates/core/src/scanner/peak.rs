use super::ScanError;
use crate::braidcore::{closure_components, shift_embed, single_peak_decompose, BraidWord};
use crate::closedforms::two_strand_rtilde;
use crate::exactalg::{BpsSequence, ZLaurent};
use crate::rulingdp::{normalized_ruling_poly, ruling_poly};

/// Checks `R(b1 gamma~ b2) = z R(gamma) R(b1 b2)` and its normalized form
/// `R~(b1 gamma~ b2) = R~(gamma) R~(b1 b2)`, where `gamma~` is `g` shifted
/// onto strands `n..n+m-1` of `n + m - 1` strands. Both sides come from the
/// ruling DP.
pub fn verify_multiplicativity(b1: &BraidWord, g: &BraidWord, b2: &BraidWord) -> Result<bool, ScanError> {
    if b1.strands() != b2.strands() {
        return Err(ScanError::StrandMismatch {
            left: b1.strands(),
            right: b2.strands(),
        });
    }
    let n = b1.strands();
    let mid = shift_embed(g, n);
    let mut letters = b1.letters().to_vec();
    letters.extend_from_slice(mid.letters());
    letters.extend_from_slice(b2.letters());
    let whole = BraidWord::new(mid.strands(), letters).expect("letters below n + m - 1");
    let flanks = b1.concat(b2).expect("equal strand counts");

    let lhs = ruling_poly(&whole)?;
    let rhs = &(&ZLaurent::monomial(1, 1) * &ruling_poly(g)?) * &ruling_poly(&flanks)?;
    if lhs != rhs {
        return Ok(false);
    }
    // components glue along one strand: ell(whole) = ell(g) + ell(flanks) - 1
    let ell_ok = closure_components(&whole) + 1 == closure_components(g) + closure_components(&flanks);
    let lhs_t = normalized_ruling_poly(&whole)?;
    let rhs_t = normalized_ruling_poly(g)?.product(&normalized_ruling_poly(&flanks)?);
    Ok(ell_ok && lhs_t == rhs_t)
}

/// One leaf of the peeling: the tower `sigma_1^exponent` and its `R~`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakFactor {
    pub exponent: usize,
    pub rtilde: BpsSequence,
}

/// Peels peak blocks until nothing is left, in peeling order.
pub fn singlepeak_factors(w: &BraidWord) -> Result<Vec<PeakFactor>, ScanError> {
    let mut factors = Vec::new();
    let mut current = w.clone();
    while !current.is_empty() {
        let split = single_peak_decompose(&current).ok_or_else(|| ScanError::NotSinglePeak { word: w.to_string() })?;
        let exponent = split.gamma.len();
        factors.push(PeakFactor {
            exponent,
            rtilde: two_strand_rtilde(exponent),
        });
        current = split.flanks();
    }
    Ok(factors)
}

/// `R~` of a single-peak word as the product of the type-A closed forms of
/// its peeled towers.
pub fn singlepeak_eval(w: &BraidWord) -> Result<BpsSequence, ScanError> {
    Ok(singlepeak_factors(w)?
        .iter()
        .fold(BpsSequence::one(), |acc, f| acc.product(&f.rtilde)))
}
