use serde::{Deserialize, Serialize};

use super::space::{HomologyVector, Ring, SymplecticSpace};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Global sign convention for twist matrices.
///
/// `Positive` is `T_c(x) = x + î(x,c)·c`, `Negative` is `x − î(x,c)·c`.
/// Every relation check compares words built under one convention, so the
/// verdicts do not depend on the choice.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwistConvention {
    #[default]
    Positive,
    Negative,
}

impl TwistConvention {
    pub fn sign(self) -> i128 {
        match self {
            TwistConvention::Positive => 1,
            TwistConvention::Negative => -1,
        }
    }
}

/// How a square matrix interacts with the form: `MᵀJM = J`, `MᵀJM = −J`,
/// or neither. The first two together make up Δ(2n, ℤ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixClass {
    Symplectic,
    AntiSymplectic,
    Neither,
}

/// A matrix over ℤ or ℤ/p, entries kept reduced for modular rings.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticMatrix {
    ring: Ring,
    entries: IntMatrix,
}

impl std::fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SymplecticMatrix[{}]{:?}", self.ring, self.entries.to_rows())
    }
}

impl SymplecticMatrix {
    pub fn new(ring: Ring, entries: IntMatrix) -> Self {
        assert!(entries.is_square(), "symplectic matrices are square");
        let entries = match ring {
            Ring::Integer => entries,
            Ring::Mod(_) => {
                IntMatrix::from_fn(entries.rows(), entries.cols(), |i, j| ring.reduce(entries[(i, j)]))
            }
        };
        SymplecticMatrix { ring, entries }
    }

    pub fn integer(entries: IntMatrix) -> Self {
        Self::new(Ring::Integer, entries)
    }

    pub fn identity(ring: Ring, dim: usize) -> Self {
        Self::new(ring, IntMatrix::identity(dim))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> IntMatrix {
        self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_identity()
    }

    pub fn mul(&self, rhs: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in product");
        Self::new(self.ring, self.entries.mul(&rhs.entries))
    }

    pub fn apply(&self, v: &HomologyVector) -> HomologyVector {
        HomologyVector::new(self.ring, self.entries.mul_vec(v.coords()))
    }

    /// `MᵀGM − G` and `MᵀGM + G`, reduced in the matrix ring.
    fn gram_defects(&self, form: &IntMatrix) -> (bool, bool) {
        let gram = self.entries.congruence(form);
        let reduce = |m: IntMatrix| IntMatrix::from_fn(m.rows(), m.cols(), |i, j| self.ring.reduce(m[(i, j)]));
        (reduce(gram.sub(form)).is_zero(), reduce(gram.add(form)).is_zero())
    }

    /// Classification against an arbitrary form matrix.
    pub fn classify_with(&self, form: &IntMatrix) -> Result<MatrixClass> {
        if form.rows() != self.dim() {
            return Err(Error::usage(format!(
                "matrix of dimension {} against a form of dimension {}",
                self.dim(),
                form.rows()
            )));
        }
        let (sym, anti) = self.gram_defects(form);
        // Over 𝔽₂ the two labels coincide; report the symplectic one.
        Ok(if sym {
            MatrixClass::Symplectic
        } else if anti {
            MatrixClass::AntiSymplectic
        } else {
            MatrixClass::Neither
        })
    }

    pub fn classify(&self, space: &SymplecticSpace) -> Result<MatrixClass> {
        self.classify_with(&space.form())
    }

    pub fn is_symplectic_for(&self, form: &IntMatrix) -> bool {
        matches!(self.classify_with(form), Ok(MatrixClass::Symplectic))
    }

    /// Entrywise reduction mod `p` of an integer matrix.
    pub fn reduce_mod(&self, p: u32) -> Result<SymplecticMatrix> {
        if p < 2 {
            return Err(Error::usage("modulus must be at least 2"));
        }
        match self.ring {
            Ring::Integer => Ok(Self::new(Ring::Mod(p), self.entries.clone())),
            Ring::Mod(q) if q % p == 0 => Ok(Self::new(Ring::Mod(p), self.entries.clone())),
            Ring::Mod(q) => Err(Error::usage(format!("cannot reduce a Z/{q} matrix mod {p}"))),
        }
    }

    pub fn reduce_mod2(&self) -> Result<SymplecticMatrix> {
        self.reduce_mod(2)
    }

    /// Inverse of a matrix preserving `form`, via `G⁻¹MᵀG`.
    ///
    /// `form_inverse` must be the exact inverse of `form`.
    pub fn symplectic_inverse(&self, form: &IntMatrix, form_inverse: &IntMatrix) -> SymplecticMatrix {
        Self::new(self.ring, form_inverse.mul(&self.entries.transpose()).mul(form))
    }

    pub fn pow(&self, e: u32) -> SymplecticMatrix {
        match self.ring {
            Ring::Integer => Self::new(self.ring, self.entries.pow(e)),
            Ring::Mod(_) => {
                let mut acc = Self::identity(self.ring, self.dim());
                let mut base = self.clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc.mul(&base);
                    }
                    e >>= 1;
                    base = base.mul(&base);
                }
                acc
            }
        }
    }
}

/// Transvection matrix `x ↦ x + s·î(x,v)·v` for the form `G`, where `s` is
/// the convention sign and `î(x,v) = xᵀGv`. A zero vector gives the identity.
pub fn transvection_matrix(form: &IntMatrix, v: &[i128], convention: TwistConvention) -> IntMatrix {
    let n = v.len();
    assert_eq!(form.rows(), n);
    let gv = form.mul_vec(v);
    let s = convention.sign();
    IntMatrix::from_fn(n, n, |i, j| i128::from(i == j) + s * v[i] * gv[j])
}

/// The twist matrix of a nonzero class in `H₁(S_g)`.
pub fn transvection(
    c: &HomologyVector,
    space: &SymplecticSpace,
    convention: TwistConvention,
) -> Result<SymplecticMatrix> {
    if c.dim() != space.dim() {
        return Err(Error::usage(format!("vector of dimension {} in a space of dimension {}", c.dim(), space.dim())));
    }
    if c.is_zero() {
        return Err(Error::Degenerate("transvection by the zero vector".into()));
    }
    Ok(SymplecticMatrix::new(c.ring(), transvection_matrix(&space.form(), c.coords(), convention)))
}

/// `Z = diag(I, −I)` in block coordinates.
pub fn block_z(h: usize) -> IntMatrix {
    IntMatrix::from_fn(2 * h, 2 * h, |i, j| if i != j { 0 } else if i < h { 1 } else { -1 })
}

/// `Z` expressed in interleaved coordinates: `aᵢ ↦ aᵢ`, `bᵢ ↦ −bᵢ`.
pub fn interleaved_z(h: usize) -> IntMatrix {
    IntMatrix::from_fn(2 * h, 2 * h, |i, j| if i != j { 0 } else if i % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(g: usize) -> SymplecticSpace {
        SymplecticSpace::new(g).unwrap()
    }

    #[test]
    fn genus_one_transvection_by_a() {
        let s = space(1);
        let t = transvection(&s.a(1), &s, TwistConvention::Positive).unwrap();
        assert_eq!(t.entries(), &IntMatrix::from_rows(&[vec![1, -1], vec![0, 1]]));
        assert_eq!(t.apply(&s.a(1)), s.a(1));
    }

    #[test]
    fn transvection_ignores_sign_of_vector() {
        let s = space(2);
        let c = HomologyVector::integer(vec![1, 2, -1, 3]);
        let t1 = transvection(&c, &s, TwistConvention::Positive).unwrap();
        let t2 = transvection(&c.neg(), &s, TwistConvention::Positive).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn zero_vector_is_degenerate() {
        let s = space(2);
        let z = HomologyVector::zero(Ring::Integer, 4);
        assert!(matches!(transvection(&z, &s, TwistConvention::Positive), Err(Error::Degenerate(_))));
    }

    #[test]
    fn rank_one_perturbation() {
        let s = space(3);
        let c = HomologyVector::integer(vec![1, 0, 2, -1, 0, 1]);
        let t = transvection(&c, &s, TwistConvention::Positive).unwrap();
        let d = t.entries().sub(&IntMatrix::identity(6));
        assert_eq!(d.rank(), 1);
        // every column of T − I is a multiple of c
        for j in 0..6 {
            let col = d.column(j);
            let unit = HomologyVector::unit(Ring::Integer, 6, j);
            let k = s.pair(&unit, &c).unwrap();
            let expect: Vec<i128> = c.coords().iter().map(|x| x * k).collect();
            assert_eq!(col, expect);
        }
    }

    #[test]
    fn classification() {
        let s = space(2);
        let id = SymplecticMatrix::identity(Ring::Integer, 4);
        assert_eq!(id.classify(&s).unwrap(), MatrixClass::Symplectic);
        let z = SymplecticMatrix::integer(interleaved_z(2));
        assert_eq!(z.classify(&s).unwrap(), MatrixClass::AntiSymplectic);
        let zb = SymplecticMatrix::integer(block_z(2));
        assert_eq!(zb.classify_with(&s.block_form()).unwrap(), MatrixClass::AntiSymplectic);
        let bad = SymplecticMatrix::integer(IntMatrix::from_fn(4, 4, |i, j| i128::from(i == j) * 2));
        assert_eq!(bad.classify(&s).unwrap(), MatrixClass::Neither);
        let c = HomologyVector::integer(vec![1, 1, 0, 1]);
        let t = transvection(&c, &s, TwistConvention::Negative).unwrap();
        assert_eq!(t.classify(&s).unwrap(), MatrixClass::Symplectic);
    }

    #[test]
    fn squared_twist_is_trivial_mod_two() {
        let s = space(2);
        let c = HomologyVector::integer(vec![1, 0, 1, 1]);
        let t = transvection(&c, &s, TwistConvention::Positive).unwrap();
        assert!(t.pow(2).reduce_mod2().unwrap().is_identity());
        let t2 = transvection(&c.reduce(Ring::F2), &s, TwistConvention::Positive).unwrap();
        assert_eq!(t.reduce_mod2().unwrap(), t2);
        assert_eq!(t2.classify(&s).unwrap(), MatrixClass::Symplectic);
    }

    #[test]
    fn symplectic_inverse_is_exact() {
        let s = space(2);
        let c = HomologyVector::integer(vec![2, 1, 0, 1]);
        let t = transvection(&c, &s, TwistConvention::Positive).unwrap();
        let j = s.form();
        let jinv = j.neg();
        assert!(t.mul(&t.symplectic_inverse(&j, &jinv)).is_identity());
    }
}
