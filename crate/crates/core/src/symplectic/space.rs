use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Coefficient ring of a homology vector or matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Integer,
    /// ℤ/p for `p ≥ 2`; `Mod(2)` is 𝔽₂.
    Mod(u32),
}

impl Ring {
    pub const F2: Ring = Ring::Mod(2);

    pub fn reduce(self, x: i128) -> i128 {
        match self {
            Ring::Integer => x,
            Ring::Mod(p) => x.rem_euclid(p as i128),
        }
    }

    pub fn modulus(self) -> Option<u32> {
        match self {
            Ring::Integer => None,
            Ring::Mod(p) => Some(p),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => write!(f, "Z"),
            Ring::Mod(p) => write!(f, "Z/{p}"),
        }
    }
}

/// H₁ of a closed genus-g surface with its symplectic basis
/// `a₁, b₁, …, a_g, b_g` in interleaved order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticSpace {
    genus: usize,
}

impl SymplecticSpace {
    pub fn new(genus: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::usage("genus must be positive"));
        }
        Ok(SymplecticSpace { genus })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    /// The form matrix `J` with `J[aᵢ][bᵢ] = 1`.
    pub fn form(&self) -> IntMatrix {
        standard_form(self.genus)
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=self.genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect()
    }

    /// Index of `aᵢ` (1-based `i`).
    pub fn a_index(&self, i: usize) -> usize {
        assert!((1..=self.genus).contains(&i));
        2 * (i - 1)
    }

    pub fn b_index(&self, i: usize) -> usize {
        self.a_index(i) + 1
    }

    pub fn a(&self, i: usize) -> HomologyVector {
        HomologyVector::unit(Ring::Integer, self.dim(), self.a_index(i))
    }

    pub fn b(&self, i: usize) -> HomologyVector {
        HomologyVector::unit(Ring::Integer, self.dim(), self.b_index(i))
    }

    /// `xᵀ J y`, reduced in the common ring of `x` and `y`.
    pub fn pair(&self, x: &HomologyVector, y: &HomologyVector) -> Result<i128> {
        if x.ring != y.ring {
            return Err(Error::usage(format!("ring mismatch in pairing: {} vs {}", x.ring, y.ring)));
        }
        if x.coords.len() != self.dim() || y.coords.len() != self.dim() {
            return Err(Error::usage(format!(
                "dimension mismatch in pairing: {} and {} in a space of dimension {}",
                x.coords.len(),
                y.coords.len(),
                self.dim()
            )));
        }
        Ok(x.ring.reduce(pair_standard(&x.coords, &y.coords)))
    }

    /// Permutation matrix taking interleaved coordinates `(a₁,b₁,…)` to block
    /// coordinates `(a₁,…,a_g,b₁,…,b_g)`.
    pub fn interleaved_to_block(&self) -> IntMatrix {
        let g = self.genus;
        IntMatrix::from_fn(2 * g, 2 * g, |i, j| {
            let src = if i < g { 2 * i } else { 2 * (i - g) + 1 };
            i128::from(src == j)
        })
    }

    /// Form matrix in block coordinates, `(0 I; −I 0)`.
    pub fn block_form(&self) -> IntMatrix {
        let p = self.interleaved_to_block();
        let pt = p.transpose();
        // Pᵀ maps block coordinates back, so the block Gram is P J Pᵀ.
        p.mul(&self.form()).mul(&pt)
    }
}

/// Interleaved standard form of rank `2g`.
pub fn standard_form(genus: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * genus, 2 * genus);
    for i in 0..genus {
        j[(2 * i, 2 * i + 1)] = 1;
        j[(2 * i + 1, 2 * i)] = -1;
    }
    j
}

/// `xᵀ J y` for interleaved coordinates, without any reduction.
pub fn pair_standard(x: &[i128], y: &[i128]) -> i128 {
    debug_assert_eq!(x.len(), y.len());
    x.chunks(2).zip(y.chunks(2)).map(|(u, v)| u[0] * v[1] - u[1] * v[0]).sum()
}

/// `xᵀ G y` for an arbitrary form.
pub fn pair_with(form: &IntMatrix, x: &[i128], y: &[i128]) -> i128 {
    crate::linalg::dot(x, &form.mul_vec(y))
}

/// A homology class with coordinates in the fixed symplectic basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyVector {
    ring: Ring,
    coords: Vec<i128>,
}

impl HomologyVector {
    pub fn new(ring: Ring, coords: Vec<i128>) -> Self {
        let coords = coords.into_iter().map(|c| ring.reduce(c)).collect();
        HomologyVector { ring, coords }
    }

    pub fn integer(coords: Vec<i128>) -> Self {
        Self::new(Ring::Integer, coords)
    }

    pub fn zero(ring: Ring, dim: usize) -> Self {
        HomologyVector { ring, coords: vec![0; dim] }
    }

    pub fn unit(ring: Ring, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, dim);
        v.coords[i] = 1;
        v
    }

    /// Parses a 𝔽₂ bitstring in interleaved order, e.g. `"0100"` is `b₁` in genus 2.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let coords = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::usage(format!("invalid bit {other:?} in {bits:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() || coords.len() % 2 == 1 {
            return Err(Error::usage(format!("bitstring {bits:?} must have even positive length")));
        }
        Ok(HomologyVector { ring: Ring::F2, coords })
    }

    pub fn to_bits(&self) -> String {
        self.coords.iter().map(|c| if c.rem_euclid(2) == 1 { '1' } else { '0' }).collect()
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coords(&self) -> &[i128] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn reduce(&self, ring: Ring) -> HomologyVector {
        Self::new(ring, self.coords.clone())
    }

    pub fn add(&self, other: &HomologyVector) -> HomologyVector {
        assert_eq!(self.ring, other.ring);
        Self::new(self.ring, self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i128) -> HomologyVector {
        Self::new(self.ring, self.coords.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> HomologyVector {
        self.scale(-1)
    }
}

impl fmt::Debug for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.coords, self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_pairings() {
        let s = SymplecticSpace::new(2).unwrap();
        assert_eq!(s.pair(&s.a(1), &s.b(1)).unwrap(), 1);
        assert_eq!(s.pair(&s.b(1), &s.a(1)).unwrap(), -1);
        assert_eq!(s.pair(&s.a(1), &s.a(2)).unwrap(), 0);
    }

    #[test]
    fn mod2_pairing_cancels() {
        // a₁ + b₂ against b₁ + a₂ is 1 + 1 over 𝔽₂
        let s = SymplecticSpace::new(2).unwrap();
        let x = HomologyVector::from_bits("1001").unwrap();
        let y = HomologyVector::from_bits("0110").unwrap();
        assert_eq!(s.pair(&x, &y).unwrap(), 0);
        assert_eq!(pair_standard(x.coords(), y.coords()), 1 - 1);
    }

    #[test]
    fn pairing_rejects_mismatch() {
        let s = SymplecticSpace::new(2).unwrap();
        let x = HomologyVector::from_bits("10").unwrap();
        let y = HomologyVector::from_bits("0100").unwrap();
        assert!(matches!(s.pair(&x, &y), Err(Error::Usage(_))));
        assert!(matches!(s.pair(&s.a(1), &y), Err(Error::Usage(_))));
    }

    #[test]
    fn form_is_unimodular_and_skew() {
        for g in 1..=5 {
            let j = standard_form(g);
            assert!(j.is_skew());
            assert_eq!(j.det(), 1);
        }
    }

    #[test]
    fn block_permutation_is_a_bijection() {
        let s = SymplecticSpace::new(3).unwrap();
        let p = s.interleaved_to_block();
        assert!(p.mul(&p.transpose()).is_identity());
        // a₂ (interleaved index 2) lands on block index 1, b₁ on block index 3
        assert_eq!(p.mul_vec(s.a(2).coords()), vec![0, 1, 0, 0, 0, 0]);
        assert_eq!(p.mul_vec(s.b(1).coords()), vec![0, 0, 0, 1, 0, 0]);
        let bf = s.block_form();
        assert_eq!(bf[(0, 3)], 1);
        assert_eq!(bf[(3, 0)], -1);
    }
}
