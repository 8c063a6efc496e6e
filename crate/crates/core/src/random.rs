//! Seeded random braid words for self-tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{expand_aword, ALetter, AWord, BraidLetter, BraidWord};
use crate::words::GroupParams;

/// A word of length `len` drawn uniformly from the alphabet (no reduction).
pub fn random_word<R: Rng>(rng: &mut R, params: &GroupParams, len: usize) -> BraidWord {
    let alphabet = BraidLetter::alphabet(params);
    BraidWord::from_letters((0..len).map(|_| *alphabet.choose(rng).expect("alphabet is never empty")))
}

/// A pure word: a product of up to `max_gens` random pure generators
/// `A_i`, `A_{i,q,j}`, conjugated by a random word of length up to `max_conj`.
pub fn random_pure_word<R: Rng>(
    rng: &mut R,
    params: &GroupParams,
    max_gens: usize,
    max_conj: usize,
) -> BraidWord {
    let n = params.n();
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(ALetter::loop_(i));
        for j in i + 1..n {
            for q in 0..params.p() {
                gens.push(ALetter::link(i, q, j));
            }
        }
    }
    let k = rng.gen_range(0..=max_gens);
    let core = AWord::from_letters((0..k).map(|_| {
        let a = *gens.choose(rng).expect("at least one pure generator");
        if rng.gen() { a.inverted() } else { a }
    }));
    let core = expand_aword(&core, params).expect("generators are in range");
    let conj_len = rng.gen_range(0..=max_conj);
    let c = random_word(rng, params, conj_len);
    &(&c * &core) * &c.inverse()
}
