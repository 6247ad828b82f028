//! Packed 𝔽₂ vectors of `H₁(S_g; 𝔽₂)`: bit `i` is the coordinate of the
//! `i`-th interleaved basis vector.

use std::fmt;

use serde::{Serialize, Serializer};

use super::group::ModMatrix;
use crate::error::{Error, Result};
use crate::symplectic::HomologyVector;

/// Largest genus whose classes fit in a `u64`.
pub const MAX_PACKED_GENUS: usize = 32;

const EVEN: u64 = 0x5555_5555_5555_5555;
const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;

/// Mod-2 intersection pairing of packed vectors.
pub fn pair2(u: u64, v: u64) -> u8 {
    let swapped = ((v & EVEN) << 1) | ((v & ODD) >> 1);
    ((u & swapped).count_ones() & 1) as u8
}

/// Mod-2 transvection `v ↦ v + î₂(v,c)·c`.
pub fn transvect2(c: u64, v: u64) -> u64 {
    if pair2(v, c) == 1 {
        v ^ c
    } else {
        v
    }
}

/// The mod-2 transvection by `c` as a matrix.
pub fn transvection2_matrix(genus: usize, c: u64) -> ModMatrix {
    let n = 2 * genus;
    let mut cols = vec![0u64; n];
    for (k, col) in cols.iter_mut().enumerate() {
        *col = transvect2(c, 1 << k);
    }
    let int = crate::linalg::IntMatrix::from_fn(n, n, |i, j| ((cols[j] >> i) & 1) as i128);
    ModMatrix::from_int(&int, 2)
}

pub fn bits_to_string(v: u64, dim: usize) -> String {
    (0..dim).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// A nonzero class in `H₁(S_g; 𝔽₂)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Class {
    genus: usize,
    bits: u64,
}

impl F2Class {
    pub fn new(genus: usize, bits: u64) -> Result<Self> {
        if genus == 0 || genus > MAX_PACKED_GENUS {
            return Err(Error::usage(format!("genus {genus} is outside 1..={MAX_PACKED_GENUS}")));
        }
        if bits == 0 {
            return Err(Error::usage("the zero class is not allowed"));
        }
        if 2 * genus < 64 && bits >> (2 * genus) != 0 {
            return Err(Error::usage("class has bits beyond the dimension"));
        }
        Ok(F2Class { genus, bits })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v = HomologyVector::from_bits(text)?;
        Self::from_vector(&v)
    }

    pub fn from_vector(v: &HomologyVector) -> Result<Self> {
        let mut bits = 0u64;
        for (i, c) in v.coords().iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                bits |= 1 << i;
            }
        }
        Self::new(v.dim() / 2, bits)
    }

    pub fn to_vector(&self) -> HomologyVector {
        HomologyVector::new(
            crate::symplectic::Ring::F2,
            (0..2 * self.genus).map(|i| ((self.bits >> i) & 1) as i128).collect(),
        )
    }

    /// Every nonzero class of the given genus, in increasing bit order.
    pub fn all(genus: usize) -> Result<Vec<F2Class>> {
        if genus == 0 || 2 * genus >= 64 {
            return Err(Error::usage(format!("cannot enumerate classes in genus {genus}")));
        }
        Ok((1u64..1 << (2 * genus)).map(|bits| F2Class { genus, bits }).collect())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn pair(&self, other: &F2Class) -> u8 {
        pair2(self.bits, other.bits)
    }

    pub fn to_bitstring(&self) -> String {
        bits_to_string(self.bits, 2 * self.genus)
    }
}

impl fmt::Display for F2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for F2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Class({self})")
    }
}

impl Serialize for F2Class {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bitstring())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{SymplecticSpace, TwistConvention};

    #[test]
    fn packed_pairing_matches_the_form() {
        let s = SymplecticSpace::new(3).unwrap();
        for u in F2Class::all(3).unwrap() {
            for v in F2Class::all(3).unwrap().into_iter().step_by(5) {
                let exact = s.pair(&u.to_vector(), &v.to_vector()).unwrap().rem_euclid(2) as u8;
                assert_eq!(u.pair(&v), exact);
            }
        }
    }

    #[test]
    fn packed_transvection_matches_integer_one() {
        let s = SymplecticSpace::new(2).unwrap();
        for c in F2Class::all(2).unwrap() {
            let int = crate::symplectic::transvection(&c.to_vector(), &s, TwistConvention::Positive).unwrap();
            assert_eq!(ModMatrix::from_symplectic(&int, 2).unwrap(), transvection2_matrix(2, c.bits()));
        }
    }

    #[test]
    fn bitstrings_round_trip() {
        let c = F2Class::parse("0110").unwrap();
        assert_eq!(c.bits(), 0b0110);
        assert_eq!(c.to_bitstring(), "0110");
        assert!(F2Class::parse("0000").is_err());
        assert!(F2Class::new(2, 1 << 4).is_err());
    }
}
