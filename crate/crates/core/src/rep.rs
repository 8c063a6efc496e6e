//! Endomorphisms of `F_pn` and the representation of orbit braid words.
//!
//! Braid words act left to right: the first letter acts first, so
//! `apply(rho_word(u·v), x) = apply(rho_word(v), apply(rho_word(u), x))`.

use std::fmt;

use crate::braid::{BraidLetter, BraidWord, Gen};
use crate::error::{Error, Result};
use crate::words::{delta_word, FreeWord, GroupParams, Letter};

/// An endomorphism of `F_pn`, stored as the reduced image of every generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endo {
    params: GroupParams,
    images: Vec<FreeWord>,
}

impl Endo {
    pub fn identity(params: &GroupParams) -> Self {
        let images = params.generators().map(|(i, j)| FreeWord::gen(i, j)).collect();
        Self { params: *params, images }
    }

    /// Builds from images in index order `(i ascending, j ascending)`.
    pub fn from_images(params: &GroupParams, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != params.rank() {
            return Err(Error::PreconditionViolated(format!(
                "expected {} images, got {}",
                params.rank(),
                images.len()
            )));
        }
        let images = images
            .into_iter()
            .map(|w| {
                w.check_range(params)?;
                Ok(w.reduced())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { params: *params, images })
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn image(&self, orbit: usize, strand: usize) -> &FreeWord {
        &self.images[self.params.index(orbit, strand)]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Substitutes every letter by its image and reduces.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::empty();
        for &l in w.letters() {
            let img = &self.images[self.params.index(l.orbit(), l.strand())];
            if l.inverse {
                out.extend_reduced(img.letters().iter().rev().map(|x| x.inverted()));
            } else {
                out.extend_reduced(img.letters().iter().copied());
            }
        }
        out
    }

    /// `self` then `other`: each image becomes `other.apply(self(x))`.
    pub fn then(&self, other: &Endo) -> Result<Endo> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        let images = self.images.iter().map(|w| other.apply(w)).collect();
        Ok(Endo { params: self.params, images })
    }

    /// Sum of reduced image lengths.
    pub fn total_length(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, w)| {
            let (i, j) = self.params.unindex(k);
            w.letters() == [Letter::new(i, j)]
        })
    }

    /// Parses the binding format `x<i>.<j> -> <free word>`, one per line.
    pub fn parse(text: &str, params: &GroupParams) -> Result<Self> {
        let mut images: Vec<Option<FreeWord>> = vec![None; params.rank()];
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| {
                Error::Parse(format!("line {}: expected `x<i>.<j> -> <word>`", lineno + 1))
            })?;
            let lhs = FreeWord::parse(lhs, params)?;
            let gen = match lhs.letters() {
                [l] if !l.inverse => *l,
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: left side must be a single generator",
                        lineno + 1
                    )))
                }
            };
            let slot = &mut images[params.index(gen.orbit(), gen.strand())];
            if slot.is_some() {
                return Err(Error::Parse(format!("line {}: duplicate binding for {gen}", lineno + 1)));
            }
            *slot = Some(FreeWord::parse(rhs, params)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(k, w)| {
                w.ok_or_else(|| {
                    let (i, j) = params.unindex(k);
                    Error::Parse(format!("missing binding for x{i}.{j}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { params: *params, images })
    }
}

impl fmt::Display for Endo {
    /// One binding per line in generator order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            let (i, j) = self.params.unindex(k);
            if w.is_empty() {
                writeln!(f, "x{i}.{j} ->")?;
            } else {
                writeln!(f, "x{i}.{j} -> {w}")?;
            }
        }
        Ok(())
    }
}

pub fn apply(e: &Endo, w: &FreeWord) -> FreeWord {
    e.apply(w)
}

/// `e1` then `e2`.
pub fn compose(e1: &Endo, e2: &Endo) -> Result<Endo> {
    e1.then(e2)
}

pub fn eq_endo(e1: &Endo, e2: &Endo) -> Result<bool> {
    if e1.params != e2.params {
        return Err(Error::ParamsMismatch);
    }
    Ok(e1.images == e2.images)
}

fn conj_by_inverse(x: Letter, by: Letter) -> FreeWord {
    // by^-1 x by
    FreeWord::from_letters(vec![by.inverted(), x, by])
}

fn conj(x: Letter, by: Letter) -> FreeWord {
    // by x by^-1
    FreeWord::from_letters(vec![by, x, by.inverted()])
}

/// The automorphism of a single braid letter.
pub fn rho_gen(g: BraidLetter, params: &GroupParams) -> Result<Endo> {
    g.check(params)?;
    let p = params.p();
    let images = params
        .generators()
        .map(|(i, j)| {
            let x = Letter::new(i, j);
            match (g.gen, g.inverse) {
                (Gen::Rot, false) if j == 0 => FreeWord::gen((i + 1) % p, 0),
                (Gen::Rot, false) => conj_by_inverse(x, Letter::new(i, 0)),
                (Gen::Rot, true) if j == 0 => FreeWord::gen((i + p - 1) % p, 0),
                (Gen::Rot, true) => conj(x, Letter::new((i + p - 1) % p, 0)),
                (Gen::Swap(k), false) if j == k => FreeWord::gen(i, k + 1),
                (Gen::Swap(k), false) if j == k + 1 => {
                    conj(Letter::new(i, k), Letter::new(i, k + 1))
                }
                (Gen::Swap(k), true) if j == k + 1 => FreeWord::gen(i, k),
                (Gen::Swap(k), true) if j == k => conj_by_inverse(Letter::new(i, k + 1), x),
                (Gen::Swap(_), _) => FreeWord::letter(x),
            }
        })
        .collect();
    Ok(Endo { params: *params, images })
}

pub fn rho_word(w: &BraidWord, params: &GroupParams) -> Result<Endo> {
    w.check(params)?;
    let gens = [BraidLetter::ROT, BraidLetter::ROT_INV]
        .into_iter()
        .chain((0..params.n().saturating_sub(1)).flat_map(|k| [BraidLetter::swap(k), BraidLetter::swap_inv(k)]))
        .map(|g| rho_gen(g, params).map(|e| (g, e)))
        .collect::<Result<Vec<_>>>()?;
    let mut acc = Endo::identity(params);
    for &l in w.letters() {
        let (_, e) = gens.iter().find(|(g, _)| *g == l).expect("letter checked above");
        acc = acc.then(e)?;
    }
    Ok(acc)
}

/// `rho_word(b^{pm})` in closed form: `x_{i0}` fixed, `x_{ij} -> Δ_i^-m x_{ij} Δ_i^m`.
pub fn twist(params: &GroupParams, m: i64) -> Endo {
    let images = params
        .generators()
        .map(|(i, j)| {
            let x = FreeWord::gen(i, j);
            if j == 0 {
                return x;
            }
            let d = delta_word(params, i).expect("orbit in range").pow(m);
            &(&d.inverse() * &x) * &d
        })
        .collect();
    Endo { params: *params, images }
}

/// The orbit shift `x_{ij} -> x_{(i+k) mod p, j}`.
pub fn shift_c(params: &GroupParams, k: i64) -> Endo {
    let p = params.p() as i64;
    let images = params
        .generators()
        .map(|(i, j)| FreeWord::gen((i as i64 + k).rem_euclid(p) as usize, j))
        .collect();
    Endo { params: *params, images }
}
