//! Equality of orbit braid words.
//!
//! In the punctured plane two words are equal when their representations
//! agree. In the plane the relator `b^p` is factored out as a power of the
//! twist automorphism.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::rep::{eq_endo, rho_word, twist, Endo};
use crate::words::GroupParams;

/// What to do with single-strand words, where the representation cannot
/// separate powers of `b^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankOnePolicy {
    /// Fail with [`Error::UnsupportedRank`].
    #[default]
    Reject,
    /// Compare the total `b` exponent.
    RotExponent,
}

pub fn eq_punctured(w1: &BraidWord, w2: &BraidWord, params: &GroupParams) -> Result<bool> {
    eq_punctured_with(w1, w2, params, RankOnePolicy::Reject)
}

pub fn eq_punctured_with(
    w1: &BraidWord,
    w2: &BraidWord,
    params: &GroupParams,
    policy: RankOnePolicy,
) -> Result<bool> {
    w1.check(params)?;
    w2.check(params)?;
    if params.n() == 1 {
        return match policy {
            RankOnePolicy::Reject => Err(Error::UnsupportedRank),
            RankOnePolicy::RotExponent => Ok(w1.rot_exponent() == w2.rot_exponent()),
        };
    }
    eq_endo(&rho_word(w1, params)?, &rho_word(w2, params)?)
}

/// Returns `m` when `e` is exactly `twist(m)`.
///
/// `m` is read off the image of `x0.1`, which for a twist is
/// `Δ_0^-m x0.1 Δ_0^m`, and then checked against every generator.
pub fn twist_power_of(e: &Endo) -> Option<i64> {
    let params = e.params();
    if params.n() == 1 {
        return e.is_identity().then_some(0);
    }
    let img = e.image(0, 1);
    let span = img.len().checked_sub(1)?;
    let p = params.p();
    if span % (2 * p) != 0 {
        return None;
    }
    let mut m = (span / (2 * p)) as i64;
    if m > 0 && !img.letters()[0].inverse {
        m = -m;
    }
    (twist(params, m) == *e).then_some(m)
}

/// Equality in the plane group: `w2^-1 · w1` must act as a twist power.
///
/// For `n = 1` the words are compared by `b` exponent mod `p`.
pub fn eq_plane(w1: &BraidWord, w2: &BraidWord, params: &GroupParams) -> Result<bool> {
    w1.check(params)?;
    w2.check(params)?;
    if params.n() == 1 {
        let p = params.p() as i64;
        return Ok((w1.rot_exponent() - w2.rot_exponent()).rem_euclid(p) == 0);
    }
    let diff = &w2.inverse() * w1;
    Ok(twist_power_of(&rho_word(&diff, params)?).is_some())
}
