//! Words in the free group `F_pn` on the letters `x<i>.<j>`.
//!
//! A letter carries an orbit index `i` in `0..p`, a strand index `j` in
//! `0..n` and a sign. Words are flat letter sequences; every operation that
//! builds a word from other words returns it freely reduced.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// The pair `(p, n)`: order of the cyclic action and number of orbit strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    p: usize,
    n: usize,
}

impl GroupParams {
    pub fn new(p: usize, n: usize) -> Result<Self> {
        if p == 0 || n == 0 {
            return Err(Error::InvalidParams { p, n });
        }
        Ok(Self { p, n })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of free generators, `p * n`.
    pub fn rank(&self) -> usize {
        self.p * self.n
    }

    /// Linear index of `x<orbit>.<strand>`, orbit-major.
    pub fn index(&self, orbit: usize, strand: usize) -> usize {
        orbit * self.n + strand
    }

    pub fn unindex(&self, index: usize) -> (usize, usize) {
        (index / self.n, index % self.n)
    }

    /// All generator index pairs, orbit ascending then strand ascending.
    pub fn generators(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..self.p).flat_map(move |i| (0..n).map(move |j| (i, j)))
    }

    /// Same `p`, one strand fewer.
    pub fn drop_strand(&self) -> Result<Self> {
        if self.n == 1 {
            return Err(Error::Underflow);
        }
        Ok(Self { p: self.p, n: self.n - 1 })
    }

    pub(crate) fn check_letter(&self, l: Letter) -> Result<()> {
        if (l.orbit as usize) < self.p && (l.strand as usize) < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!(
                "{l} with p={}, n={}",
                self.p, self.n
            )))
        }
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={}", self.p, self.n)
    }
}

/// A generator `x<orbit>.<strand>` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub orbit: u32,
    pub strand: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(orbit: usize, strand: usize) -> Self {
        Self { orbit: orbit as u32, strand: strand as u32, inverse: false }
    }

    pub fn inv(orbit: usize, strand: usize) -> Self {
        Self { orbit: orbit as u32, strand: strand as u32, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Self { inverse: !self.inverse, ..self }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.orbit == other.orbit && self.strand == other.strand && self.inverse != other.inverse
    }

    pub fn orbit(self) -> usize {
        self.orbit as usize
    }

    pub fn strand(self) -> usize {
        self.strand as usize
    }

    /// The orbit-shift relabeling `x_{ij} -> x_{(i+k) mod p, j}`.
    pub fn shift_orbit(self, k: i64, p: usize) -> Self {
        let orbit = (self.orbit as i64 + k).rem_euclid(p as i64) as u32;
        Self { orbit, ..self }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}.{}", self.orbit, self.strand)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in `F_pn`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Wraps a letter sequence as-is (no reduction).
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// Freely reduces the given letters.
    pub fn reduced_from<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Self::empty();
        w.extend_reduced(letters);
        w
    }

    pub fn letter(l: Letter) -> Self {
        Self { letters: vec![l] }
    }

    pub fn gen(orbit: usize, strand: usize) -> Self {
        Self::letter(Letter::new(orbit, strand))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter, cancelling against the current last letter.
    pub fn push_reduced(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn extend_reduced<I: IntoIterator<Item = Letter>>(&mut self, letters: I) {
        for l in letters {
            self.push_reduced(l);
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(&a), Some(&b)) if self.len() > 1 => !a.cancels(b),
                _ => true,
            }
    }

    /// Free reduction without range checks.
    pub fn reduced(&self) -> Self {
        Self::reduced_from(self.letters.iter().copied())
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::empty();
        for _ in 0..k.unsigned_abs() {
            out.extend_reduced(base.letters.iter().copied());
        }
        out
    }

    /// Splits a reduced word as `u · core · u^-1` with `core` cyclically reduced.
    pub fn cyclic_split(&self) -> (FreeWord, FreeWord) {
        let w = self.reduced();
        let len = w.len();
        let mut k = 0;
        while 2 * k + 1 < len && w.letters[k].cancels(w.letters[len - 1 - k]) {
            k += 1;
        }
        let u = Self::from_letters(w.letters[..k].to_vec());
        let core = Self::from_letters(w.letters[k..len - k].to_vec());
        (u, core)
    }

    pub fn shift_orbits(&self, k: i64, p: usize) -> Self {
        Self { letters: self.letters.iter().map(|l| l.shift_orbit(k, p)).collect() }
    }

    pub fn check_range(&self, params: &GroupParams) -> Result<()> {
        self.letters.iter().try_for_each(|&l| params.check_letter(l))
    }

    /// Parses whitespace-separated tokens `x<i>.<j>`, `x<i>.<j>^<k>`.
    pub fn parse(text: &str, params: &GroupParams) -> Result<Self> {
        let mut w = Self::empty();
        for token in text.split_whitespace() {
            let (head, exp) = split_exponent(token)?;
            let body = head
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad free-group token `{token}`")))?;
            let (i, j) = body
                .split_once('.')
                .ok_or_else(|| Error::Parse(format!("bad free-group token `{token}`")))?;
            let i = parse_index(i, token)?;
            let j = parse_index(j, token)?;
            let l = Letter::new(i, j);
            params.check_letter(l)?;
            let l = if exp < 0 { l.inverted() } else { l };
            for _ in 0..exp.unsigned_abs() {
                w.push_reduced(l);
            }
        }
        Ok(w)
    }
}

impl fmt::Display for FreeWord {
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

impl Mul<&FreeWord> for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend_reduced(rhs.letters.iter().copied());
        out
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(mut self, rhs: FreeWord) -> FreeWord {
        self.extend_reduced(rhs.letters);
        self
    }
}

pub(crate) fn split_exponent(token: &str) -> Result<(&str, i64)> {
    match token.split_once('^') {
        None => Ok((token, 1)),
        Some((head, exp)) => {
            let exp = exp
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
            Ok((head, exp))
        }
    }
}

pub(crate) fn parse_index(s: &str, token: &str) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad index in `{token}`")));
    }
    s.parse::<usize>().map_err(|_| Error::Parse(format!("bad index in `{token}`")))
}

/// The unique freely reduced word equal to `w`.
pub fn reduce(w: &FreeWord, params: &GroupParams) -> Result<FreeWord> {
    w.check_range(params)?;
    Ok(w.reduced())
}

/// `reduce(a · w · a^-1)`.
pub fn conjugate(w: &FreeWord, a: &FreeWord) -> FreeWord {
    let mut out = a.reduced();
    out.extend_reduced(w.letters.iter().copied());
    out.extend_reduced(a.inverse().letters);
    out
}

/// The loop at the origin enclosing every puncture:
/// `prod_{i=0}^{p-1} prod_{j=n-1}^{0} x_{ij}`.
pub fn boundary_word(params: &GroupParams) -> FreeWord {
    let letters = (0..params.p())
        .flat_map(|i| (0..params.n()).rev().map(move |j| Letter::new(i, j)))
        .collect();
    FreeWord::from_letters(letters)
}

/// `Δ_i = x_{i,0} x_{i+1,0} ... x_{i+p-1,0}` with orbit indices mod p.
pub fn delta_word(params: &GroupParams, i: usize) -> Result<FreeWord> {
    if i >= params.p() {
        return Err(Error::IndexOutOfRange(format!("orbit {i} with p={}", params.p())));
    }
    let p = params.p();
    Ok(FreeWord::from_letters((0..p).map(|k| Letter::new((i + k) % p, 0)).collect()))
}

/// Finds `A` with `reduce(w) = reduce(A · target · A^-1)`.
///
/// Among all rotations of `target` matching the cyclic core of `w` the
/// shortest conjugator wins, ties going to the smallest rotation offset.
pub fn cyclic_conjugator(w: &FreeWord, target: &FreeWord) -> Option<FreeWord> {
    let (prefix, core) = w.cyclic_split();
    let t = target.letters();
    if core.len() != t.len() {
        return None;
    }
    if t.is_empty() {
        return Some(prefix.reduced());
    }
    let c = core.letters();
    let len = t.len();
    let mut best: Option<FreeWord> = None;
    for r in 0..len {
        // rotation by r: t[r..] t[..r] = t[..r]^-1 · t · t[..r]
        let matches = (0..len).all(|k| c[k] == t[(k + r) % len]);
        if !matches {
            continue;
        }
        let head = FreeWord::from_letters(t[..r].to_vec());
        let a = &prefix * &head.inverse();
        if best.as_ref().is_none_or(|b| a.len() < b.len()) {
            best = Some(a);
        }
    }
    best
}
