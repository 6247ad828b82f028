//! Formal words in named twist generators and their evaluation under a
//! representation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::{transvection_matrix, SymplecticMatrix, TwistConvention};
use super::space::{HomologyVector, Ring, SymplecticSpace};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// An ordered product `g₁^{e₁} g₂^{e₂} ⋯` of named generators.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistWord {
    letters: Vec<(String, i64)>,
}

impl TwistWord {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `name^exponent`; zero exponents are dropped.
    pub fn then(mut self, name: impl Into<String>, exponent: i64) -> Self {
        if exponent != 0 {
            self.letters.push((name.into(), exponent));
        }
        self
    }

    pub fn single(name: impl Into<String>, exponent: i64) -> Self {
        Self::new().then(name, exponent)
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &TwistWord) -> TwistWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        TwistWord { letters }
    }

    pub fn power(&self, k: u32) -> TwistWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend(self.letters.iter().cloned());
        }
        TwistWord { letters }
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord { letters: self.letters.iter().rev().map(|(n, e)| (n.clone(), -e)).collect() }
    }

    /// Parses `"a^2 b c^-1"`; whitespace separated, exponent optional.
    pub fn parse(text: &str) -> Result<TwistWord> {
        let mut w = TwistWord::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e.parse().map_err(|_| Error::usage(format!("bad exponent in {tok:?}")))?;
                    (n, e)
                }
                None => (tok, 1),
            };
            if name.is_empty() {
                return Err(Error::usage(format!("missing generator name in {tok:?}")));
            }
            w = w.then(name, exp);
        }
        Ok(w)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistWord({self})")
    }
}

/// A homomorphism from the free group on named generators to matrices.
pub trait Representation {
    fn dim(&self) -> usize;

    fn ring(&self) -> Ring;

    /// Image of one generator; unknown names are usage errors.
    fn generator(&self, name: &str) -> Result<IntMatrix>;

    /// Exact inverse of a matrix in the image.
    fn invert(&self, m: &IntMatrix) -> IntMatrix;
}

/// Ordered product of generator images raised to their exponents.
pub fn eval_word(word: &TwistWord, rep: &dyn Representation) -> Result<SymplecticMatrix> {
    let ring = rep.ring();
    let mut acc = SymplecticMatrix::identity(ring, rep.dim());
    for (name, e) in word.letters() {
        let g = rep.generator(name)?;
        let base = if *e < 0 { rep.invert(&g) } else { g };
        let k = u32::try_from(e.unsigned_abs()).map_err(|_| Error::usage("exponent too large"))?;
        let factor = SymplecticMatrix::new(ring, base).pow(k);
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// The standard symplectic representation ψ on `H₁(S_g)` (or its reduction
/// ψ₂ / ψ_p), with generators named by homology classes.
#[derive(Debug, Clone)]
pub struct BaseRepresentation {
    space: SymplecticSpace,
    ring: Ring,
    convention: TwistConvention,
    table: BTreeMap<String, HomologyVector>,
}

impl BaseRepresentation {
    pub fn new(space: SymplecticSpace, ring: Ring, convention: TwistConvention) -> Self {
        BaseRepresentation { space, ring, convention, table: BTreeMap::new() }
    }

    /// Adds the generators `a1, b1, …, ag, bg` for the basis curves.
    pub fn with_basis_curves(mut self) -> Self {
        for i in 1..=self.space.genus() {
            self.table.insert(format!("a{i}"), self.space.a(i));
            self.table.insert(format!("b{i}"), self.space.b(i));
        }
        self
    }

    pub fn insert(&mut self, name: impl Into<String>, class: HomologyVector) -> Result<()> {
        if class.dim() != self.space.dim() {
            return Err(Error::usage("generator class has the wrong dimension"));
        }
        self.table.insert(name.into(), class);
        Ok(())
    }

    pub fn space(&self) -> &SymplecticSpace {
        &self.space
    }

    pub fn convention(&self) -> TwistConvention {
        self.convention
    }

    pub fn class_of(&self, name: &str) -> Option<&HomologyVector> {
        self.table.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.table.keys().map(String::as_str)
    }

    /// Same generator table over another ring or convention.
    pub fn with_ring(&self, ring: Ring) -> Self {
        BaseRepresentation { ring, ..self.clone() }
    }

    pub fn with_convention(&self, convention: TwistConvention) -> Self {
        BaseRepresentation { convention, ..self.clone() }
    }
}

impl Representation for BaseRepresentation {
    fn dim(&self) -> usize {
        self.space.dim()
    }

    fn ring(&self) -> Ring {
        self.ring
    }

    fn generator(&self, name: &str) -> Result<IntMatrix> {
        let class = self.table.get(name).ok_or_else(|| Error::usage(format!("unknown generator {name:?}")))?;
        // a null-homologous curve twists trivially on homology
        let m = transvection_matrix(&self.space.form(), class.coords(), self.convention);
        Ok(SymplecticMatrix::new(self.ring, m).into_entries())
    }

    fn invert(&self, m: &IntMatrix) -> IntMatrix {
        let j = self.space.form();
        SymplecticMatrix::new(self.ring, m.clone()).symplectic_inverse(&j, &j.neg()).into_entries()
    }
}

/// Maps every generator to the identity.
#[derive(Debug, Clone, Copy)]
pub struct TrivialRepresentation {
    pub dim: usize,
}

impl Representation for TrivialRepresentation {
    fn dim(&self) -> usize {
        self.dim
    }

    fn ring(&self) -> Ring {
        Ring::Integer
    }

    fn generator(&self, _name: &str) -> Result<IntMatrix> {
        Ok(IntMatrix::identity(self.dim))
    }

    fn invert(&self, m: &IntMatrix) -> IntMatrix {
        m.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus_one() -> BaseRepresentation {
        let s = SymplecticSpace::new(1).unwrap();
        BaseRepresentation::new(s, Ring::Integer, TwistConvention::Positive).with_basis_curves()
    }

    #[test]
    fn empty_word_is_identity() {
        let rep = genus_one();
        assert!(eval_word(&TwistWord::new(), &rep).unwrap().is_identity());
    }

    #[test]
    fn doubled_twist_times_twist() {
        let rep = genus_one();
        let w = TwistWord::parse("a1^2 b1").unwrap();
        let m = eval_word(&w, &rep).unwrap();
        assert_eq!(m.entries(), &IntMatrix::from_rows(&[vec![-1, -2], vec![1, 1]]));
        // trace zero, so the square is −I and the fourth power is I
        assert_eq!(eval_word(&w.power(2), &rep).unwrap().entries(), &IntMatrix::identity(2).neg());
        assert!(eval_word(&w.power(4), &rep).unwrap().is_identity());
    }

    #[test]
    fn inverse_word_inverts() {
        let rep = genus_one();
        let w = TwistWord::parse("a1^3 b1^-2 a1").unwrap();
        let m = eval_word(&w, &rep).unwrap();
        let mi = eval_word(&w.inverse(), &rep).unwrap();
        assert!(m.mul(&mi).is_identity());
    }

    #[test]
    fn unknown_generator_is_usage_error() {
        let rep = genus_one();
        let w = TwistWord::single("c7", 1);
        assert!(matches!(eval_word(&w, &rep), Err(Error::Usage(_))));
    }

    #[test]
    fn parse_and_display() {
        let w = TwistWord::parse("a^2  b c^-1").unwrap();
        assert_eq!(w.to_string(), "a^2 b c^-1");
        assert_eq!(w.length(), 4);
        assert!(TwistWord::parse("a^x").is_err());
    }
}
