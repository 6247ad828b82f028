//! Compact matrices over ℤ/p and breadth-first closure of finite matrix
//! groups.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::symplectic::{Ring, SymplecticMatrix};

/// Square matrix over ℤ/p (p < 256) stored as row-major residues. The byte
/// vector is the canonical encoding used for hashing and ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMatrix {
    dim: usize,
    modulus: u8,
    entries: Vec<u8>,
}

impl std::fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModMatrix[Z/{}]{:?}", self.modulus, self.entries)
    }
}

impl ModMatrix {
    pub fn identity(dim: usize, modulus: u8) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        ModMatrix { dim, modulus, entries }
    }

    pub fn from_int(m: &IntMatrix, modulus: u8) -> Self {
        assert!(m.is_square());
        assert!(modulus >= 2);
        let p = modulus as i128;
        let entries = m.entries().iter().map(|&x| x.rem_euclid(p) as u8).collect();
        ModMatrix { dim: m.rows(), modulus, entries }
    }

    pub fn from_symplectic(m: &SymplecticMatrix, modulus: u8) -> Result<Self> {
        match m.ring() {
            Ring::Integer => Ok(Self::from_int(m.entries(), modulus)),
            Ring::Mod(q) if q % modulus as u32 == 0 => Ok(Self::from_int(m.entries(), modulus)),
            Ring::Mod(q) => Err(Error::usage(format!("cannot view a Z/{q} matrix mod {modulus}"))),
        }
    }

    pub fn to_int(&self) -> IntMatrix {
        IntMatrix::from_fn(self.dim, self.dim, |i, j| self.entries[i * self.dim + j] as i128)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.dim + j]
    }

    /// Canonical byte encoding: dimension, modulus, then the entries.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + self.entries.len());
        out.push(self.dim as u8);
        out.push(self.modulus);
        out.extend_from_slice(&self.entries);
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.modulus)
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        debug_assert_eq!((self.dim, self.modulus), (rhs.dim, rhs.modulus));
        let n = self.dim;
        let p = self.modulus as u32;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u32;
                for k in 0..n {
                    acc += self.entries[i * n + k] as u32 * rhs.entries[k * n + j] as u32;
                }
                entries[i * n + j] = (acc % p) as u8;
            }
        }
        ModMatrix { dim: n, modulus: self.modulus, entries }
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        let n = self.dim;
        let p = self.modulus as u32;
        (0..n)
            .map(|i| ((0..n).map(|k| self.entries[i * n + k] as u32 * v[k] as u32).sum::<u32>() % p) as u8)
            .collect()
    }

    /// Action on an 𝔽₂ vector packed as bits (bit i is coordinate i).
    pub fn apply_bits(&self, v: u64) -> u64 {
        debug_assert_eq!(self.modulus, 2);
        let n = self.dim;
        let mut out = 0u64;
        for i in 0..n {
            let mut acc = 0u8;
            for k in 0..n {
                if v >> k & 1 == 1 {
                    acc ^= self.entries[i * n + k];
                }
            }
            if acc & 1 == 1 {
                out |= 1 << i;
            }
        }
        out
    }
}

/// `|Sp(2n, q)| = q^{n²} ∏_{i=1..n} (q^{2i} − 1)`.
pub fn symplectic_group_order(n: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut order = q.pow(n * n);
    for i in 1..=n {
        order *= q.pow(2 * i) - 1;
    }
    order
}

/// The group generated by a finite list of matrices, enumerated by BFS.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    dim: usize,
    modulus: u8,
    generators: Vec<ModMatrix>,
    elements: Vec<ModMatrix>,
}

impl GroupClosure {
    /// Enumerates the closure, failing with a capability error once more
    /// than `budget` elements have been found.
    pub fn generate(dim: usize, modulus: u8, generators: Vec<ModMatrix>, budget: usize) -> Result<Self> {
        if generators.iter().any(|g| g.dim != dim || g.modulus != modulus) {
            return Err(Error::usage("generator shape does not match the closure"));
        }
        let id = ModMatrix::identity(dim, modulus);
        let mut seen: HashSet<ModMatrix> = HashSet::new();
        seen.insert(id.clone());
        let mut elements = vec![id];
        let mut head = 0;
        // elements[head..] is the frontier; visiting in insertion order keeps
        // the enumeration deterministic
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in &generators {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    if elements.len() >= budget {
                        return Err(Error::Capability(format!(
                            "group closure exceeds the budget of {budget} elements"
                        )));
                    }
                    elements.push(y);
                }
            }
        }
        Ok(GroupClosure { dim, modulus, generators, elements })
    }

    pub fn trivial(dim: usize, modulus: u8) -> Self {
        GroupClosure { dim, modulus, generators: Vec::new(), elements: vec![ModMatrix::identity(dim, modulus)] }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    pub fn generators(&self) -> &[ModMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[ModMatrix] {
        &self.elements
    }

    pub fn contains(&self, m: &ModMatrix) -> bool {
        self.elements.contains(m)
    }

    /// Elements in canonical byte order.
    pub fn sorted_elements(&self) -> Vec<ModMatrix> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{transvection, SymplecticSpace, TwistConvention};

    #[test]
    fn classical_orders() {
        assert_eq!(symplectic_group_order(1, 2), 6);
        assert_eq!(symplectic_group_order(2, 2), 720);
        assert_eq!(symplectic_group_order(3, 2), 1_451_520);
        assert_eq!(symplectic_group_order(2, 3), 51_840);
    }

    #[test]
    fn single_transvection_has_order_p() {
        let s = SymplecticSpace::new(2).unwrap();
        let t = transvection(&s.a(1), &s, TwistConvention::Positive).unwrap();
        for p in [2u8, 3, 5] {
            let c = GroupClosure::generate(4, p, vec![ModMatrix::from_symplectic(&t, p).unwrap()], 1000).unwrap();
            assert_eq!(c.order(), p as usize);
        }
    }

    #[test]
    fn full_sp4_mod2_by_bfs() {
        let s = SymplecticSpace::new(2).unwrap();
        let gens: Vec<ModMatrix> = (1u64..16)
            .map(|bits| {
                let v = crate::symplectic::HomologyVector::integer((0..4).map(|i| ((bits >> i) & 1) as i128).collect());
                ModMatrix::from_symplectic(&transvection(&v, &s, TwistConvention::Positive).unwrap(), 2).unwrap()
            })
            .collect();
        let c = GroupClosure::generate(4, 2, gens, 10_000).unwrap();
        assert_eq!(c.order() as u128, symplectic_group_order(2, 2));
    }

    #[test]
    fn budget_is_enforced() {
        let s = SymplecticSpace::new(1).unwrap();
        let t = transvection(&s.a(1), &s, TwistConvention::Positive).unwrap();
        let r = GroupClosure::generate(2, 7, vec![ModMatrix::from_symplectic(&t, 7).unwrap()], 3);
        assert!(matches!(r, Err(Error::Capability(_))));
    }
}
