//! Recognizing representation images and decomposing them into braid words.
//!
//! An endomorphism in the image of the representation sends every generator
//! to a conjugate of a generator, sends the boundary loop to a conjugate of
//! itself, and commutes with the orbit shift. Such maps are peeled apart one
//! generator at a time by reducing the total image length.

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{Error, Result};
use crate::rep::{compose, rho_gen, rho_word, Endo};
use crate::word_problem::twist_power_of;
use crate::words::{boundary_word, cyclic_conjugator, FreeWord, GroupParams};

/// Every generator image written as `A · x_mu · A^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateForm {
    params: GroupParams,
    conjugators: Vec<FreeWord>,
    targets: Vec<usize>,
    boundary: Option<FreeWord>,
}

impl ConjugateForm {
    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn conjugator(&self, orbit: usize, strand: usize) -> &FreeWord {
        &self.conjugators[self.params.index(orbit, strand)]
    }

    /// `(orbit, strand)` of the generator conjugated in the image of `x_{orbit,strand}`.
    pub fn target(&self, orbit: usize, strand: usize) -> (usize, usize) {
        self.params.unindex(self.targets[self.params.index(orbit, strand)])
    }

    /// Conjugator of the boundary loop, when its image is a conjugate of it.
    pub fn boundary(&self) -> Option<&FreeWord> {
        self.boundary.as_ref()
    }
}

pub fn parse_conjugate_form(e: &Endo) -> Result<ConjugateForm> {
    let params = *e.params();
    let mut conjugators = Vec::with_capacity(params.rank());
    let mut targets = Vec::with_capacity(params.rank());
    for (i, j) in params.generators() {
        let img = e.image(i, j).letters();
        let half = img.len() / 2;
        let palindromic = img.len() % 2 == 1
            && !img[half].inverse
            && (0..half).all(|k| img[k].cancels(img[img.len() - 1 - k]));
        if !palindromic {
            return Err(Error::NotConjugateForm { orbit: i, strand: j });
        }
        conjugators.push(FreeWord::from_letters(img[..half].to_vec()));
        targets.push(params.index(img[half].orbit(), img[half].strand()));
    }
    let mut seen = vec![false; params.rank()];
    for &t in &targets {
        if std::mem::replace(&mut seen[t], true) {
            return Err(Error::NotPermutation);
        }
    }
    Ok(ConjugateForm { params, conjugators, targets, boundary: check_boundary(e) })
}

/// Orbit shift compatibility of conjugators and targets.
pub fn check_equivariance(f: &ConjugateForm, params: &GroupParams) -> bool {
    if f.params != *params {
        return false;
    }
    let p = params.p();
    params.generators().all(|(i, j)| {
        let next = (i + 1) % p;
        let (ti, tj) = f.target(i, j);
        f.conjugator(next, j) == &f.conjugator(i, j).shift_orbits(1, p)
            && f.target(next, j) == ((ti + 1) % p, tj)
    })
}

/// `A` with `apply(e, ∂) = A ∂ A^-1`, if any.
pub fn check_boundary(e: &Endo) -> Option<FreeWord> {
    let boundary = boundary_word(e.params());
    cyclic_conjugator(&e.apply(&boundary), &boundary)
}

/// Total reduced length of all generator images.
pub fn length(e: &Endo) -> usize {
    e.total_length()
}

fn check_conditions(e: &Endo) -> Result<()> {
    let form = parse_conjugate_form(e)
        .map_err(|err| Error::PreconditionViolated(err.to_string()))?;
    if form.boundary.is_none() {
        return Err(Error::PreconditionViolated(
            "boundary image is not a conjugate of the boundary".into(),
        ));
    }
    if !check_equivariance(&form, e.params()) {
        return Err(Error::PreconditionViolated("not equivariant under the orbit shift".into()));
    }
    Ok(())
}

/// Single greedy step: the first letter `g` in alphabet order with
/// `length(rho(g) then e) < length(e)`.
pub fn reduce_step(e: &Endo) -> Result<Option<(BraidLetter, Endo)>> {
    check_conditions(e)?;
    let params = e.params();
    let current = length(e);
    for g in BraidLetter::alphabet(params) {
        let c = compose(&rho_gen(g, params)?, e)?;
        if length(&c) < current {
            return Ok(Some((g, c)));
        }
    }
    Ok(None)
}

/// `b_{n-2}^-1 ... b_0^-1 b^-1`. Its image permutes the generators and
/// rotates the boundary word by one letter; its `pn`-th power acts trivially.
pub fn boundary_rotation(params: &GroupParams) -> BraidWord {
    let mut w = BraidWord::from_letters((0..params.n() - 1).rev().map(BraidLetter::swap_inv));
    w.push(BraidLetter::ROT_INV);
    w
}

/// One recorded reduction: pre-rotate by `rotation` boundary steps, then peel `letter`.
#[derive(Debug, Clone, Copy)]
struct Step {
    rotation: usize,
    letter: BraidLetter,
}

/// Writes `e` as `rho_word(w)` followed by `twist(m)`.
///
/// Each round looks for a boundary rotation `k` (smallest first) and a
/// letter `g` (alphabet order) with `length(rho(g δ^k) then e) < length(e)`.
/// The loop ends once some rotation of the current map is a twist power.
pub fn decompose(e: &Endo, params: &GroupParams) -> Result<(BraidWord, i64)> {
    decompose_traced(e, params).map(|(w, m, _)| (w, m))
}

/// [`decompose`], also returning `length` of the map before each step and at the end.
pub fn decompose_traced(e: &Endo, params: &GroupParams) -> Result<(BraidWord, i64, Vec<usize>)> {
    if e.params() != params {
        return Err(Error::ParamsMismatch);
    }
    check_conditions(e)?;
    let order = params.rank();
    let delta = boundary_rotation(params);
    let rotations = (0..order)
        .map(|k| rho_word(&delta.pow(k as i64), params))
        .collect::<Result<Vec<_>>>()?;
    let letters = BraidLetter::alphabet(params)
        .into_iter()
        .map(|g| rho_gen(g, params).map(|r| (g, r)))
        .collect::<Result<Vec<_>>>()?;

    let mut steps: Vec<Step> = Vec::new();
    let mut current = e.clone();
    let mut trace = Vec::new();
    'outer: loop {
        let l = length(&current);
        trace.push(l);
        for (k, rot) in rotations.iter().enumerate() {
            let rotated = compose(rot, &current)?;
            if let Some(m) = twist_power_of(&rotated) {
                return Ok((assemble(&steps, k, &delta, order), m, trace));
            }
        }
        for (rotation, rot) in rotations.iter().enumerate() {
            let rotated = compose(rot, &current)?;
            for (g, r) in &letters {
                let c = compose(r, &rotated)?;
                if length(&c) < l {
                    steps.push(Step { rotation, letter: *g });
                    current = c;
                    continue 'outer;
                }
            }
        }
        return Err(if l == order {
            Error::NotRealizable { residual: permutation_summary(&current) }
        } else {
            Error::Stuck { length: l, endo: current.to_string() }
        });
    }
}

/// Inverse of `δ^{k_end} g_T δ^{k_T} ... g_1 δ^{k_1}`.
fn assemble(steps: &[Step], end: usize, delta: &BraidWord, order: usize) -> BraidWord {
    let rot = |k: usize| {
        if 2 * k <= order {
            delta.pow(k as i64)
        } else {
            delta.pow(-((order - k) as i64))
        }
    };
    let mut peeled = rot(end);
    for s in steps.iter().rev() {
        peeled.push(s.letter);
        peeled = &peeled * &rot(s.rotation);
    }
    peeled.inverse()
}

fn permutation_summary(e: &Endo) -> String {
    e.params()
        .generators()
        .map(|(i, j)| format!("x{i}.{j}->{}", e.image(i, j)))
        .collect::<Vec<_>>()
        .join(", ")
}
