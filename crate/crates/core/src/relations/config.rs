//! Canonical curve configurations for the chain relations.
//!
//! The complementary chains come from the maximal chain
//! `γ = a₁, b₁, a₁+a₂, b₂, a₂+a₃, …, b_g, a_g` of `2g+1` curves: removing
//! `γ₄ = b₂` leaves the 3-chain `(a, c₁, c₂) = (γ₁, γ₂, γ₃)` and the
//! `(2g−3)`-chain `(a', c₃, …, c_{2g−2}) = (γ₅, …, γ_{2g+1})`. With
//! `β = b₁ + b₂` the curves `a, a'` are odd against β and all `cᵢ` even.

use serde::Serialize;

use crate::cover::{find_simple_loop, standard_surface, Loop, RibbonSurface};
use crate::error::{Error, Result};
use crate::finite::F2Class;
use crate::symplectic::{BaseRepresentation, HomologyVector, Ring, SymplecticSpace, TwistConvention, TwistWord};

#[derive(Debug, Clone, Serialize)]
pub struct NamedCurve {
    pub name: String,
    #[serde(rename = "word")]
    pub text: String,
    /// Loop on the one-vertex model; absent in genus 1.
    #[serde(skip)]
    pub curve: Option<Loop>,
    #[serde(serialize_with = "coords")]
    pub class: HomologyVector,
}

fn coords<S: serde::Serializer>(v: &HomologyVector, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(v.coords(), s)
}

fn curve(surface: &RibbonSurface, name: &str, class: HomologyVector) -> Result<NamedCurve> {
    let curve = find_simple_loop(surface, &class)?;
    Ok(NamedCurve { name: name.to_string(), text: surface.format_loop(&curve), curve: Some(curve), class })
}

/// `Σ ±xᵢ` over the odd positions of a chain, with signs making the sum
/// orthogonal to every chain member: the class of a boundary component of
/// the chain neighbourhood (zero for even-length chains).
pub fn chain_boundary_class(space: &SymplecticSpace, chain: &[HomologyVector]) -> Result<HomologyVector> {
    let n = space.dim();
    if chain.len().is_multiple_of(2) {
        return Ok(HomologyVector::zero(Ring::Integer, n));
    }
    let mut d = chain[0].clone();
    let mut sign = 1i128;
    for j in (1..chain.len()).step_by(2) {
        let before = space.pair(&chain[j - 1], &chain[j])?;
        let after = space.pair(&chain[j + 1], &chain[j])?;
        if before.abs() != 1 || after.abs() != 1 {
            return Err(Error::config("consecutive chain curves must pair to ±1"));
        }
        sign = -sign * before * after;
        d = d.add(&chain[j + 1].scale(sign));
    }
    for x in chain {
        if space.pair(&d, x)? != 0 {
            return Err(Error::internal("boundary class is not orthogonal to the chain"));
        }
    }
    Ok(d)
}

/// Checks the chain intersection pattern of the classes.
pub fn check_chain_pattern(space: &SymplecticSpace, chain: &[HomologyVector]) -> Result<()> {
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            let p = space.pair(&chain[i], &chain[j])?;
            let ok = if j == i + 1 { p.abs() == 1 } else { p == 0 };
            if !ok {
                return Err(Error::config(format!("chain curves {} and {} pair to {p}", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// Two curves meeting once, with `b` representing β.
#[derive(Debug, Clone, Serialize)]
pub struct TwoChainConfig {
    pub genus: usize,
    pub a: NamedCurve,
    pub b: NamedCurve,
    #[serde(serialize_with = "coords")]
    pub boundary: HomologyVector,
}

impl TwoChainConfig {
    /// `a = a₁`, `b = b₁`.
    pub fn canonical(genus: usize) -> Result<Self> {
        let space = SymplecticSpace::new(genus)?;
        Self::from_classes(space, space.a(1), space.b(1))
    }

    pub fn from_classes(space: SymplecticSpace, a: HomologyVector, b: HomologyVector) -> Result<Self> {
        if space.pair(&a, &b)?.abs() != 1 {
            return Err(Error::config("2-chain curves must pair to ±1"));
        }
        let boundary = chain_boundary_class(&space, &[a.clone(), b.clone()])?;
        let (a, b) = if space.genus() >= 2 {
            let s = standard_surface(space.genus())?;
            (curve(&s, "a", a)?, curve(&s, "b", b)?)
        } else {
            let bare = |name: &str, class| NamedCurve { name: name.into(), text: name.into(), curve: None, class };
            (bare("a", a), bare("b", b))
        };
        Ok(TwoChainConfig { genus: space.genus(), a, b, boundary })
    }

    pub fn representation(&self, ring: Ring, convention: TwistConvention) -> Result<BaseRepresentation> {
        let space = SymplecticSpace::new(self.genus)?;
        let mut rep = BaseRepresentation::new(space, ring, convention);
        rep.insert("a", self.a.class.clone())?;
        rep.insert("b", self.b.class.clone())?;
        rep.insert("d", self.boundary.clone())?;
        Ok(rep)
    }
}

/// The two complementary odd chains around the β-curve.
#[derive(Debug, Clone, Serialize)]
pub struct ChainConfig {
    pub genus: usize,
    pub beta: F2Class,
    /// A simple loop whose class reduces to β.
    pub b: NamedCurve,
    /// `a, c₁, c₂`.
    pub left: Vec<NamedCurve>,
    /// `a', c₃, …, c_{2g−2}`.
    pub right: Vec<NamedCurve>,
    /// `[d₁]` for both chain neighbourhoods (equal up to sign).
    #[serde(serialize_with = "coords")]
    pub boundary: HomologyVector,
}

impl ChainConfig {
    pub fn canonical(genus: usize) -> Result<Self> {
        if genus < 4 {
            return Err(Error::usage("complementary chains need genus at least 4"));
        }
        let surface = standard_surface(genus)?;
        let sp = surface.space();
        let mut gamma = vec![sp.a(1), sp.b(1)];
        for k in 1..genus {
            gamma.push(sp.a(k).add(&sp.a(k + 1)));
            gamma.push(sp.b(k + 1));
        }
        gamma.push(sp.a(genus));
        let beta_class = sp.b(1).add(&sp.b(2));
        let beta = F2Class::from_vector(&beta_class)?;

        let names: Vec<String> = std::iter::once("a".to_string())
            .chain((1..=2).map(|i| format!("c{i}")))
            .chain(std::iter::once("a'".to_string()))
            .chain((3..=2 * genus - 2).map(|i| format!("c{i}")))
            .collect();
        let kept: Vec<&HomologyVector> = gamma.iter().enumerate().filter(|&(i, _)| i != 3).map(|(_, v)| v).collect();
        let mut curves = Vec::with_capacity(kept.len());
        for (name, class) in names.iter().zip(kept) {
            curves.push(curve(&surface, name, class.clone())?);
        }
        let right = curves.split_off(3);
        let config = ChainConfig {
            genus,
            beta,
            b: curve(&surface, "b", beta_class)?,
            left: curves,
            right,
            boundary: HomologyVector::zero(Ring::Integer, sp.dim()),
        };
        config.validated()
    }

    /// Checks the chain patterns, parities and the shared boundary class.
    pub fn validated(mut self) -> Result<Self> {
        let sp = SymplecticSpace::new(self.genus)?;
        let left: Vec<HomologyVector> = self.left.iter().map(|c| c.class.clone()).collect();
        let right: Vec<HomologyVector> = self.right.iter().map(|c| c.class.clone()).collect();
        check_chain_pattern(&sp, &left)?;
        check_chain_pattern(&sp, &right)?;
        if right.len() != 2 * self.genus - 3 || left.len() != 3 {
            return Err(Error::config("chains have the wrong lengths"));
        }
        for x in &left {
            for y in &right {
                if sp.pair(x, y)? != 0 {
                    return Err(Error::config("the two chains are not disjoint in homology"));
                }
            }
        }
        let parity = |v: &HomologyVector| -> Result<u8> { Ok(F2Class::new(self.genus, bits(v))?.pair(&self.beta)) };
        if parity(&left[0])? != 1 || parity(&right[0])? != 1 {
            return Err(Error::config("a and a' must be odd against beta"));
        }
        for c in left[1..].iter().chain(&right[1..]) {
            if bits(c) != 0 && parity(c)? != 0 {
                return Err(Error::config("the c curves must be even against beta"));
            }
        }
        if F2Class::from_vector(&self.b.class)? != self.beta {
            return Err(Error::config("b does not represent beta"));
        }
        let d_left = chain_boundary_class(&sp, &left)?;
        let d_right = chain_boundary_class(&sp, &right)?;
        if d_left != d_right && d_left != d_right.neg() {
            return Err(Error::config("the chains do not share their boundary classes"));
        }
        self.boundary = d_left;
        Ok(self)
    }

    pub fn curves(&self) -> impl Iterator<Item = &NamedCurve> {
        self.left.iter().chain(&self.right)
    }

    /// `(T_a² T_{c₁} T_{c₂})³`.
    pub fn left_word(&self) -> TwistWord {
        chain_word(&self.left, 2).power(3)
    }

    /// `(T_{a'}² T_{c₃} ⋯ T_{c_{2g−2}})^{2g−3}`.
    pub fn right_word(&self) -> TwistWord {
        chain_word(&self.right, 2).power(2 * self.genus as u32 - 3)
    }

    /// Left word with `T_a²` replaced by its lift `T_ã` (exponent 1).
    pub fn lifted_left_word(&self) -> TwistWord {
        chain_word(&self.left, 1).power(3)
    }

    pub fn lifted_right_word(&self) -> TwistWord {
        chain_word(&self.right, 1).power(2 * self.genus as u32 - 3)
    }

    pub fn representation(&self, ring: Ring, convention: TwistConvention) -> Result<BaseRepresentation> {
        let mut rep = BaseRepresentation::new(SymplecticSpace::new(self.genus)?, ring, convention);
        for c in self.curves() {
            rep.insert(c.name.clone(), c.class.clone())?;
        }
        rep.insert("b", self.b.class.clone())?;
        rep.insert("d", self.boundary.clone())?;
        Ok(rep)
    }
}

fn chain_word(chain: &[NamedCurve], first_exponent: i64) -> TwistWord {
    let mut w = TwistWord::single(chain[0].name.clone(), first_exponent);
    for c in &chain[1..] {
        w = w.then(c.name.clone(), 1);
    }
    w
}

fn bits(v: &HomologyVector) -> u64 {
    v.coords().iter().enumerate().fold(0, |acc, (i, c)| acc | ((c.rem_euclid(2) as u64) << i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_configurations() {
        for g in 4..=6 {
            let c = ChainConfig::canonical(g).unwrap();
            assert_eq!(c.left.len(), 3);
            assert_eq!(c.right.len(), 2 * g - 3);
            assert_eq!(c.left[0].text, "a1");
            assert_eq!(c.right[0].text, "a2 a3");
            // the boundary of the 3-chain a₁, b₁, a₁+a₂ is ±a₂
            let sp = SymplecticSpace::new(g).unwrap();
            assert!(c.boundary == sp.a(2) || c.boundary == sp.a(2).neg());
        }
        assert!(ChainConfig::canonical(3).is_err());
    }

    #[test]
    fn two_chain_boundary_is_null_homologous() {
        let c = TwoChainConfig::canonical(3).unwrap();
        assert!(c.boundary.is_zero());
        assert_eq!(c.a.text, "a1");
    }

    #[test]
    fn broken_pattern_is_rejected() {
        let sp = SymplecticSpace::new(2).unwrap();
        let r = check_chain_pattern(&sp, &[sp.a(1), sp.b(1), sp.b(1)]);
        assert!(matches!(r, Err(Error::Configuration(_))));
    }
}
