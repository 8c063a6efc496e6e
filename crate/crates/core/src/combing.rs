//! Combing of pure orbit braids.
//!
//! Forgetting strand 0 splits the pure group as the free kernel (basis
//! `A0`, `A0.q.j`) times the pure group on the remaining strands. Repeating
//! on the remaining strands writes every pure braid as a product of one
//! kernel word per level, lowest level first.
//!
//! Kernel words are read off exactly. The orbit group maps into the ordinary
//! braid group on `n + 1` strands with a straight pole strand (`b` winds
//! strand 0 once around the pole). There the kernel element is determined by
//! the loop traced by strand 0, visible in the Artin action on that strand's
//! generator, and the orbit kernel is the index-`p` subgroup of loops whose
//! winding around the pole is divisible by `p`. Every answer is checked with
//! the `F_pn` representation; a bounded search is the fallback.

use std::fmt;

use crate::braid::{expand_aword, forget_strand0, perm_image, ALetter, AWord, BraidLetter, BraidWord, Gen};
use crate::error::{Error, Result};
use crate::rep::{compose, rho_word, Endo};
use crate::word_problem::{eq_punctured_with, RankOnePolicy};
use crate::words::{FreeWord, GroupParams};

pub const DEFAULT_MAX_BASIS_LENGTH: usize = 8;

/// The free basis of the level-`level` kernel, `1 <= level <= n`:
/// `A_s` and `A_{s,q,j}` for `s = n - level < j < n`.
pub fn basis(params: &GroupParams, level: usize) -> Result<Vec<ALetter>> {
    let n = params.n();
    if level == 0 || level > n {
        return Err(Error::IndexOutOfRange(format!("level {level} with n={n}")));
    }
    let s = n - level;
    let mut out = vec![ALetter::loop_(s)];
    for j in s + 1..n {
        for q in 0..params.p() {
            out.push(ALetter::link(s, q, j));
        }
    }
    Ok(out)
}

/// A word in one level's kernel basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UWord {
    level: usize,
    word: AWord,
}

impl UWord {
    pub fn new(level: usize, word: AWord, params: &GroupParams) -> Result<Self> {
        let allowed = basis(params, level)?;
        if let Some(bad) = word.letters().iter().find(|l| !allowed.contains(&ALetter::new(l.gen))) {
            return Err(Error::IndexOutOfRange(format!("{bad} is not a level-{level} letter")));
        }
        Ok(Self { level, word })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn word(&self) -> &AWord {
        &self.word
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            f.write_str("-")
        } else {
            write!(f, "{}", self.word)
        }
    }
}

/// Per-level kernel coordinates, level 1 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombedForm {
    params: GroupParams,
    coords: Vec<UWord>,
}

impl CombedForm {
    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn levels(&self) -> &[UWord] {
        &self.coords
    }

    pub fn level(&self, level: usize) -> Option<&UWord> {
        level.checked_sub(1).and_then(|k| self.coords.get(k))
    }
}

impl fmt::Display for CombedForm {
    /// One `L<level>: <word or ->` line per level.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in &self.coords {
            writeln!(f, "L{}: {u}", u.level)?;
        }
        Ok(())
    }
}

/// Section of strand forgetting on A-words: renumber from `lower` (with
/// `n - 1` strands) to `n` strands and expand.
pub fn include_lift(w: &AWord, lower: &GroupParams) -> Result<BraidWord> {
    let upper = GroupParams::new(lower.p(), lower.n() + 1)?;
    expand_aword(&w.shifted(1), &upper)
}

/// `include_lift(comb(ε(w)))^-1 · w`, a pure word killed by strand forgetting.
pub fn kernel_coordinate(w: &BraidWord, params: &GroupParams) -> Result<BraidWord> {
    kernel_coordinate_with(w, params, DEFAULT_MAX_BASIS_LENGTH)
}

fn kernel_coordinate_with(w: &BraidWord, params: &GroupParams, max_len: usize) -> Result<BraidWord> {
    let lower = params.drop_strand()?;
    let forgotten = forget_strand0(w, params)?;
    let below = comb_levels(&forgotten, &lower, max_len)?;
    let flat = AWord::from_letters(below.iter().flat_map(|u| u.letters().iter().copied()));
    Ok(&include_lift(&flat, &lower)?.inverse() * w)
}

/// Writes a kernel element as a word in the top-level basis.
pub fn express_in_basis(w: &BraidWord, params: &GroupParams, max_len: usize) -> Result<UWord> {
    let image = perm_image(w, params);
    if !image.is_identity() {
        return Err(Error::NotPure(image));
    }
    let n = params.n();
    if n == 1 {
        let k = w.rot_exponent() / params.p() as i64;
        return UWord::new(1, loop_power(0, k), params);
    }
    let lower = params.drop_strand()?;
    let forgotten = forget_strand0(w, params)?;
    if !eq_punctured_with(&forgotten, &BraidWord::empty(), &lower, RankOnePolicy::RotExponent)? {
        return Err(Error::NotInKernel);
    }
    let target = rho_word(w, params)?;
    if let Some(u) = read_kernel_word(w, params) {
        if rho_word(&expand_aword(&u, params)?, params)? == target {
            return UWord::new(n, u, params);
        }
    }
    let u = search_basis_word(&target, params, max_len)?;
    UWord::new(n, u, params)
}

pub fn comb(w: &BraidWord, params: &GroupParams) -> Result<CombedForm> {
    comb_with_budget(w, params, DEFAULT_MAX_BASIS_LENGTH)
}

pub fn comb_with_budget(w: &BraidWord, params: &GroupParams, max_len: usize) -> Result<CombedForm> {
    let words = comb_levels(w, params, max_len)?;
    let n = params.n();
    let coords = words
        .into_iter()
        .enumerate()
        .map(|(k, word)| UWord::new(k + 1, word, params))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(coords.len(), n);
    Ok(CombedForm { params: *params, coords })
}

/// Level words, level 1 first, indexed for `params`.
fn comb_levels(w: &BraidWord, params: &GroupParams, max_len: usize) -> Result<Vec<AWord>> {
    let image = perm_image(w, params);
    if !image.is_identity() {
        return Err(Error::NotPure(image));
    }
    if params.n() == 1 {
        return Ok(vec![loop_power(0, w.rot_exponent() / params.p() as i64)]);
    }
    let lower = params.drop_strand()?;
    let forgotten = forget_strand0(w, params)?;
    let below = comb_levels(&forgotten, &lower, max_len)?;
    let flat = AWord::from_letters(below.iter().flat_map(|u| u.letters().iter().copied()));
    let kernel = &include_lift(&flat, &lower)?.inverse() * w;
    let top = express_in_basis(&kernel, params, max_len)?;
    let mut out: Vec<AWord> = below.iter().map(|u| u.shifted(1)).collect();
    out.push(top.word);
    Ok(out)
}

pub fn multiply_back(c: &CombedForm) -> BraidWord {
    let mut out = BraidWord::empty();
    for u in &c.coords {
        let w = expand_aword(&u.word, &c.params).expect("levels hold valid letters");
        out = &out * &w;
    }
    out
}

fn loop_power(strand: usize, k: i64) -> AWord {
    let a = ALetter::loop_(strand);
    let a = if k < 0 { a.inverted() } else { a };
    AWord::from_letters(std::iter::repeat_n(a, k.unsigned_abs() as usize))
}

/// The image in the braid group on `n + 1` strands with a pole at position 0.
fn pole_word(w: &BraidWord) -> BraidWord {
    let mut out = BraidWord::empty();
    for l in w.letters() {
        let mapped = match l.gen {
            Gen::Rot => vec![BraidLetter::swap(0); 2],
            Gen::Swap(k) => vec![BraidLetter::swap(k + 1)],
        };
        for m in mapped {
            out.push(if l.inverse { m.inverted() } else { m });
        }
    }
    out
}

/// Reads the top-level basis word of a kernel element from the loop of
/// strand 0 around the pole and the other strands.
fn read_kernel_word(w: &BraidWord, params: &GroupParams) -> Option<AWord> {
    let pole = GroupParams::new(1, params.n() + 1).ok()?;
    let e = rho_word(&pole_word(w), &pole).ok()?;
    let img = e.image(0, 1).letters();
    let half = img.len() / 2;
    if img.len() % 2 == 0 || img[half].strand() != 1 || img[half].inverse {
        return None;
    }
    // loop of strand 0, with its own generator collapsed
    let path = FreeWord::reduced_from(img[..half].iter().copied().filter(|x| x.strand() != 1));
    // Schreier rewriting for the winding-mod-p subgroup, transversal pole^q
    let p = params.p();
    let mut q = 0usize;
    let mut out = AWord::empty();
    for x in path.letters() {
        match (x.strand(), x.inverse) {
            (0, false) if q + 1 == p => {
                out.push(ALetter::loop_(0));
                q = 0;
            }
            (0, false) => q += 1,
            (0, true) if q == 0 => {
                out.push(ALetter::loop_(0).inverted());
                q = p - 1;
            }
            (0, true) => q -= 1,
            (s, inv) => {
                let a = ALetter::link(0, q, s - 1);
                out.push(if inv { a.inverted() } else { a });
            }
        }
    }
    (q == 0).then_some(out)
}

/// Iterative deepening over reduced basis words.
fn search_basis_word(target: &Endo, params: &GroupParams, max_len: usize) -> Result<AWord> {
    let letters: Vec<ALetter> = basis(params, params.n())?
        .into_iter()
        .flat_map(|a| [a, a.inverted()])
        .collect();
    let images = letters
        .iter()
        .map(|&a| rho_word(&expand_aword(&AWord::from_letters([a]), params)?, params))
        .collect::<Result<Vec<_>>>()?;
    let mut path = Vec::new();
    for depth in 0..=max_len {
        if deepen(target, &Endo::identity(params), &letters, &images, depth, &mut path)? {
            return Ok(AWord::from_letters(path));
        }
    }
    Err(Error::SearchBudgetExceeded(max_len))
}

fn deepen(
    target: &Endo,
    acc: &Endo,
    letters: &[ALetter],
    images: &[Endo],
    depth: usize,
    path: &mut Vec<ALetter>,
) -> Result<bool> {
    if depth == 0 {
        return Ok(acc == target);
    }
    for (k, &a) in letters.iter().enumerate() {
        if path.last().is_some_and(|l: &ALetter| l.cancels(a)) {
            continue;
        }
        path.push(a);
        if deepen(target, &compose(acc, &images[k])?, letters, images, depth - 1, path)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}
