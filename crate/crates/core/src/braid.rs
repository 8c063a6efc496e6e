//! Orbit braid words over `{b, b_k}`, their image in `Z_p^n ⋊ Σ_n`, the pure
//! generators `A_i`, `A_{iqj}` and the strand-0 forgetting projection.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::words::{parse_index, split_exponent, GroupParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// `b`: rotation of the first point by `2π/p` about the origin.
    Rot,
    /// `b_k`: interchange of points `k` and `k+1` (0-based) and their orbit copies.
    Swap(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub gen: Gen,
    pub inverse: bool,
}

impl BraidLetter {
    pub const ROT: BraidLetter = BraidLetter { gen: Gen::Rot, inverse: false };
    pub const ROT_INV: BraidLetter = BraidLetter { gen: Gen::Rot, inverse: true };

    pub fn swap(k: usize) -> Self {
        Self { gen: Gen::Swap(k), inverse: false }
    }

    pub fn swap_inv(k: usize) -> Self {
        Self { gen: Gen::Swap(k), inverse: true }
    }

    pub fn inverted(self) -> Self {
        Self { inverse: !self.inverse, ..self }
    }

    pub fn cancels(self, other: BraidLetter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }

    pub fn check(self, params: &GroupParams) -> Result<()> {
        match self.gen {
            Gen::Rot => Ok(()),
            Gen::Swap(k) if k + 1 < params.n() => Ok(()),
            Gen::Swap(k) => Err(Error::IndexOutOfRange(format!(
                "b{k} needs k <= n-2 (n = {})",
                params.n()
            ))),
        }
    }

    /// Every letter of the alphabet in the fixed trial order
    /// `b0, b0^-1, ..., b_{n-2}, b_{n-2}^-1, b, b^-1`.
    pub fn alphabet(params: &GroupParams) -> Vec<BraidLetter> {
        let mut out = Vec::with_capacity(2 * params.n());
        for k in 0..params.n().saturating_sub(1) {
            out.push(Self::swap(k));
            out.push(Self::swap_inv(k));
        }
        out.push(Self::ROT);
        out.push(Self::ROT_INV);
        out
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            Gen::Rot => f.write_str("b")?,
            Gen::Swap(k) => write!(f, "b{k}")?,
        }
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A freely reduced word in the orbit braid alphabet. No group relations are
/// applied: `b^p` is kept as `p` letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters<I: IntoIterator<Item = BraidLetter>>(letters: I) -> Self {
        let mut w = Self::empty();
        w.extend(letters);
        w
    }

    pub fn letter(l: BraidLetter) -> Self {
        Self { letters: vec![l] }
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: BraidLetter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn extend<I: IntoIterator<Item = BraidLetter>>(&mut self, letters: I) {
        for l in letters {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::empty();
        for _ in 0..k.unsigned_abs() {
            out.extend(base.letters.iter().copied());
        }
        out
    }

    /// Signed count of `b` letters.
    pub fn rot_exponent(&self) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == Gen::Rot)
            .map(|l| if l.inverse { -1 } else { 1 })
            .sum()
    }

    pub fn check(&self, params: &GroupParams) -> Result<()> {
        self.letters.iter().try_for_each(|l| l.check(params))
    }

    /// Parses `b`, `b<k>` tokens with optional `^<integer>` suffixes.
    pub fn parse(text: &str, params: &GroupParams) -> Result<Self> {
        let mut w = Self::empty();
        for token in text.split_whitespace() {
            let (head, exp) = split_exponent(token)?;
            let rest = head
                .strip_prefix('b')
                .ok_or_else(|| Error::Parse(format!("bad braid token `{token}`")))?;
            let l = if rest.is_empty() {
                BraidLetter::ROT
            } else {
                BraidLetter::swap(parse_index(rest, token)?)
            };
            l.check(params)?;
            let l = if exp < 0 { l.inverted() } else { l };
            for _ in 0..exp.unsigned_abs() {
                w.push(l);
            }
        }
        Ok(w)
    }
}

impl fmt::Display for BraidWord {
    /// Runs of equal letters are written with an exponent, e.g. `b^2 b0^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut k = 0;
        while k < self.letters.len() {
            let l = self.letters[k];
            let mut run = 1;
            while k + run < self.letters.len() && self.letters[k + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match l.gen {
                Gen::Rot => f.write_str("b")?,
                Gen::Swap(s) => write!(f, "b{s}")?,
            }
            let exp = if l.inverse { -(run as i64) } else { run as i64 };
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
            k += run;
        }
        Ok(())
    }
}

impl Mul<&BraidWord> for &BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: &BraidWord) -> BraidWord {
        let mut out = self.clone();
        out.extend(rhs.letters.iter().copied());
        out
    }
}

impl Mul for BraidWord {
    type Output = BraidWord;

    fn mul(mut self, rhs: BraidWord) -> BraidWord {
        self.extend(rhs.letters);
        self
    }
}

/// An element `(g, σ)` of `Z_p^n ⋊ Σ_n` with product
/// `(g, σ)(h, τ) = (g + σ·h, στ)` where `(σ·h)_{σ(i)} = h_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermZp {
    p: usize,
    perm: Vec<usize>,
    gvec: Vec<usize>,
}

impl PermZp {
    pub fn identity(params: &GroupParams) -> Self {
        Self { p: params.p(), perm: (0..params.n()).collect(), gvec: vec![0; params.n()] }
    }

    pub fn new(p: usize, perm: Vec<usize>, gvec: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &s in &perm {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::PreconditionViolated("perm is not a bijection".into()));
            }
        }
        if gvec.len() != n {
            return Err(Error::PreconditionViolated("gvec length differs from perm".into()));
        }
        let gvec = gvec.into_iter().map(|g| g % p).collect();
        Ok(Self { p, perm, gvec })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn gvec(&self) -> &[usize] {
        &self.gvec
    }

    pub fn is_identity(&self) -> bool {
        self.gvec.iter().all(|&g| g == 0) && self.perm.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// Image of a single braid letter.
    pub fn of_letter(l: BraidLetter, params: &GroupParams) -> Self {
        let mut e = Self::identity(params);
        match l.gen {
            Gen::Rot => {
                let step = if l.inverse { params.p() - 1 } else { 1 };
                e.gvec[0] = step % params.p();
            }
            Gen::Swap(k) => e.perm.swap(k, k + 1),
        }
        e
    }

    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut inv = vec![0; n];
        for (i, &s) in self.perm.iter().enumerate() {
            inv[s] = i;
        }
        // (g, σ)^-1 = (-(σ^-1·g), σ^-1)
        let mut gvec = vec![0; n];
        for i in 0..n {
            gvec[inv[i]] = (self.p - self.gvec[i]) % self.p;
        }
        Self { p: self.p, perm: inv, gvec }
    }
}

impl Mul<&PermZp> for &PermZp {
    type Output = PermZp;

    fn mul(self, rhs: &PermZp) -> PermZp {
        let n = self.perm.len();
        let mut gvec = self.gvec.clone();
        for i in 0..n {
            gvec[self.perm[i]] = (gvec[self.perm[i]] + rhs.gvec[i]) % self.p;
        }
        let perm = (0..n).map(|i| self.perm[rhs.perm[i]]).collect();
        PermZp { p: self.p, perm, gvec }
    }
}

impl fmt::Display for PermZp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm={:?} g={:?}", self.perm, self.gvec)
    }
}

/// Image in `Z_p^n ⋊ Σ_n`, letters multiplied left to right.
pub fn perm_image(w: &BraidWord, params: &GroupParams) -> PermZp {
    w.letters()
        .iter()
        .fold(PermZp::identity(params), |acc, &l| &acc * &PermZp::of_letter(l, params))
}

pub fn is_pure(w: &BraidWord, params: &GroupParams) -> bool {
    perm_image(w, params).is_identity()
}

/// Pure generators: `A_i` winds strand `i` once around the origin,
/// `A_{iqj}` links orbit copy `q` of strand `i` with strand `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AGen {
    Loop(usize),
    Link { i: usize, q: usize, j: usize },
}

impl AGen {
    pub fn check(self, params: &GroupParams) -> Result<()> {
        let ok = match self {
            AGen::Loop(i) => i < params.n(),
            AGen::Link { i, q, j } => i < j && j < params.n() && q < params.p(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{} with {params}", ALetter::new(self))))
        }
    }

    /// Index of the moving strand `i`.
    pub fn base(self) -> usize {
        match self {
            AGen::Loop(i) | AGen::Link { i, .. } => i,
        }
    }

    /// Shift every strand index by `delta`.
    pub fn shifted(self, delta: isize) -> Self {
        let s = |x: usize| (x as isize + delta) as usize;
        match self {
            AGen::Loop(i) => AGen::Loop(s(i)),
            AGen::Link { i, q, j } => AGen::Link { i: s(i), q, j: s(j) },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ALetter {
    pub gen: AGen,
    pub inverse: bool,
}

impl ALetter {
    pub fn new(gen: AGen) -> Self {
        Self { gen, inverse: false }
    }

    pub fn loop_(i: usize) -> Self {
        Self::new(AGen::Loop(i))
    }

    pub fn link(i: usize, q: usize, j: usize) -> Self {
        Self::new(AGen::Link { i, q, j })
    }

    pub fn inverted(self) -> Self {
        Self { inverse: !self.inverse, ..self }
    }

    pub fn cancels(self, other: ALetter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }

    pub fn shifted(self, delta: isize) -> Self {
        Self { gen: self.gen.shifted(delta), ..self }
    }
}

impl fmt::Display for ALetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            AGen::Loop(i) => write!(f, "A{i}")?,
            AGen::Link { i, q, j } => write!(f, "A{i}.{q}.{j}")?,
        }
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A freely reduced word over A-letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AWord {
    letters: Vec<ALetter>,
}

impl AWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters<I: IntoIterator<Item = ALetter>>(letters: I) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[ALetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: ALetter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn shifted(&self, delta: isize) -> Self {
        Self { letters: self.letters.iter().map(|l| l.shifted(delta)).collect() }
    }

    /// Parses `A<i>` and `A<i>.<q>.<j>` tokens with optional `^<integer>`.
    pub fn parse(text: &str, params: &GroupParams) -> Result<Self> {
        let mut w = Self::empty();
        for token in text.split_whitespace() {
            let (head, exp) = split_exponent(token)?;
            let body = head
                .strip_prefix('A')
                .ok_or_else(|| Error::Parse(format!("bad A-token `{token}`")))?;
            let parts: Vec<&str> = body.split('.').collect();
            let gen = match parts.as_slice() {
                [i] => AGen::Loop(parse_index(i, token)?),
                [i, q, j] => AGen::Link {
                    i: parse_index(i, token)?,
                    q: parse_index(q, token)?,
                    j: parse_index(j, token)?,
                },
                _ => return Err(Error::Parse(format!("bad A-token `{token}`"))),
            };
            gen.check(params)?;
            let l = ALetter { gen, inverse: exp < 0 };
            for _ in 0..exp.unsigned_abs() {
                w.push(l);
            }
        }
        Ok(w)
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `T_i = (b_{i-1} ... b_0) b (b_0 ... b_{i-1})`: strand `i` rotates by one step.
fn strand_rotation(i: usize) -> BraidWord {
    let down = (0..i).rev().map(BraidLetter::swap);
    let up = (0..i).map(BraidLetter::swap);
    BraidWord::from_letters(down.chain(std::iter::once(BraidLetter::ROT)).chain(up))
}

/// The braid word of a pure generator.
///
/// `A_i = T_i^p`; `A_{iqj} = T_i^q (b_i ... b_{j-2}) b_{j-1}^2 (b_{j-2}^-1 ... b_i^-1) T_i^-q`.
pub fn expand_a(a: ALetter, params: &GroupParams) -> Result<BraidWord> {
    a.gen.check(params)?;
    let word = match a.gen {
        AGen::Loop(i) => strand_rotation(i).pow(params.p() as i64),
        AGen::Link { i, q, j } => {
            let t = strand_rotation(i).pow(q as i64);
            let chain = BraidWord::from_letters((i..j - 1).map(BraidLetter::swap));
            let core = &(&chain * &BraidWord::letter(BraidLetter::swap(j - 1)).pow(2)) * &chain.inverse();
            &(&t * &core) * &t.inverse()
        }
    };
    Ok(if a.inverse { word.inverse() } else { word })
}

pub fn expand_aword(w: &AWord, params: &GroupParams) -> Result<BraidWord> {
    let mut out = BraidWord::empty();
    for &l in w.letters() {
        out.extend(expand_a(l, params)?.letters().iter().copied());
    }
    Ok(out)
}

/// Deletes strand 0 from a pure braid word, giving a word on `(p, n-1)`.
///
/// The marked strand's position is tracked through the word; letters that
/// move it are dropped and the remaining swaps are renumbered.
pub fn forget_strand0(w: &BraidWord, params: &GroupParams) -> Result<BraidWord> {
    let lower = params.drop_strand()?;
    let image = perm_image(w, params);
    if !image.is_identity() {
        return Err(Error::NotPure(image));
    }
    let mut marked = 0usize;
    let mut out = BraidWord::empty();
    for &l in w.letters() {
        match l.gen {
            Gen::Rot if marked == 0 => {}
            Gen::Rot => out.push(l),
            Gen::Swap(k) if k == marked => marked = k + 1,
            Gen::Swap(k) if k + 1 == marked => marked = k,
            Gen::Swap(k) if k + 1 < marked => out.push(l),
            Gen::Swap(k) => out.push(BraidLetter { gen: Gen::Swap(k - 1), inverse: l.inverse }),
        }
    }
    debug_assert!(out.check(&lower).is_ok());
    Ok(out)
}
