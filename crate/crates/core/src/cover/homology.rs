//! `H₁` of the cover with the deck action, the ±1 eigenlattices and the
//! halved form on the minus lattice.

use super::double::CoverSurface;
use super::ribbon::CellularHomology;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::symplectic::{standard_form, symplectic_basis};

#[derive(Debug, Clone)]
pub struct CoverHomology {
    cellular: CellularHomology,
    gram: IntMatrix,
    sigma: IntMatrix,
    projection: IntMatrix,
    plus_basis: IntMatrix,
    minus_basis: IntMatrix,
    minus_gram: IntMatrix,
    prym: PrymFrame,
}

/// A basis `Q` of the minus lattice, symplectic for `î₋`, with an integer
/// left inverse used to restrict σ-equivariant maps.
#[derive(Debug, Clone)]
pub struct PrymFrame {
    basis: IntMatrix,
    left_inverse: IntMatrix,
}

impl PrymFrame {
    /// Checks `Qᵀ (G/2) Q = J` and saturation.
    pub fn new(basis: IntMatrix, gram: &IntMatrix) -> Result<Self> {
        let halved = halve(&basis.congruence(gram))?;
        if halved != standard_form(basis.cols() / 2) {
            return Err(Error::internal("frame is not symplectic for the halved form"));
        }
        let left_inverse = basis.left_inverse()?;
        Ok(PrymFrame { basis, left_inverse })
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Matrix of `m` on the minus lattice in this frame; `m` must preserve it.
    pub fn restrict(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let image = m.mul(&self.basis);
        let r = self.left_inverse.mul(&image);
        if self.basis.mul(&r) != image {
            return Err(Error::Precondition("matrix does not preserve the minus lattice".into()));
        }
        Ok(r)
    }

    /// Coordinates of a minus-lattice vector in this frame.
    pub fn coordinates(&self, v: &[i128]) -> Result<Vec<i128>> {
        let c = self.left_inverse.mul_vec(v);
        if self.basis.mul_vec(&c) != v {
            return Err(Error::Precondition("vector is not in the minus lattice".into()));
        }
        Ok(c)
    }
}

fn halve(m: &IntMatrix) -> Result<IntMatrix> {
    if m.entries().iter().any(|x| x % 2 != 0) {
        return Err(Error::internal("intersection numbers on the minus lattice are not all even"));
    }
    Ok(IntMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)] / 2))
}

pub fn cover_homology(cover: &CoverSurface) -> Result<CoverHomology> {
    let graph = cover.graph();
    let cellular = graph.homology()?;
    let n = cellular.rank();
    let reps = cellular.representatives();
    let gram = cellular.gram().clone();

    let sigma_cols: Vec<Vec<i128>> =
        (0..n).map(|j| cellular.class_of(&cover.deck_chain(&reps.column(j)))).collect();
    let sigma = IntMatrix::from_columns(n, &sigma_cols);
    if !sigma.mul(&sigma).is_identity() {
        return Err(Error::internal("deck action does not square to the identity"));
    }
    if sigma.congruence(&gram) != gram {
        return Err(Error::internal("deck action does not preserve the intersection form"));
    }
    let proj_cols: Vec<Vec<i128>> = (0..n).map(|j| cover.project_chain(&reps.column(j))).collect();
    let projection = IntMatrix::from_columns(cover.base().graph().edge_count(), &proj_cols);

    let id = IntMatrix::identity(n);
    let minus_basis = sigma.add(&id).kernel();
    let plus_basis = sigma.sub(&id).kernel();
    if !plus_basis.transpose().mul(&gram).mul(&minus_basis).is_zero() {
        return Err(Error::internal("plus and minus lattices are not orthogonal"));
    }
    let minus_gram = halve(&minus_basis.congruence(&gram))?;
    if minus_gram.det().abs() != 1 {
        return Err(Error::internal("halved form on the minus lattice is not unimodular"));
    }
    let p = symplectic_basis(&minus_gram)?;
    let prym = PrymFrame::new(minus_basis.mul(&p), &gram)?;
    Ok(CoverHomology { cellular, gram, sigma, projection, plus_basis, minus_basis, minus_gram, prym })
}

impl CoverHomology {
    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Deck action `σ_*` on homology coordinates.
    pub fn sigma(&self) -> &IntMatrix {
        &self.sigma
    }

    /// `p_*`: homology coordinates of the cover to base coordinates.
    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    pub fn plus_basis(&self) -> &IntMatrix {
        &self.plus_basis
    }

    /// Saturated kernel of `σ_* + I`, as columns.
    pub fn minus_basis(&self) -> &IntMatrix {
        &self.minus_basis
    }

    /// `î₋ = î/2` on the minus basis.
    pub fn minus_gram(&self) -> &IntMatrix {
        &self.minus_gram
    }

    pub fn prym_frame(&self) -> &PrymFrame {
        &self.prym
    }

    pub fn cellular(&self) -> &CellularHomology {
        &self.cellular
    }

    pub fn pair(&self, x: &[i128], y: &[i128]) -> i128 {
        crate::symplectic::pair_with(&self.gram, x, y)
    }

    /// Homology coordinates of an edge cycle of the cover.
    pub fn class_of_cycle(&self, cover: &CoverSurface, chain: &[i128]) -> Result<Vec<i128>> {
        if !cover.graph().is_cycle(chain) {
            return Err(Error::Precondition("chain is not a cycle".into()));
        }
        Ok(self.cellular.class_of(chain))
    }

    /// `G⁻¹ Mᵀ G`, the inverse of a form-preserving matrix.
    pub fn invert(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let gi = self.gram.inverse_unimodular()?;
        Ok(gi.mul(&m.transpose()).mul(&self.gram))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{build_cover, standard_surface};
    use crate::finite::F2Class;

    #[test]
    fn genus_two_cover_homology() {
        let s = standard_surface(2).unwrap();
        let c = build_cover(&s, F2Class::parse("0100").unwrap()).unwrap();
        let h = cover_homology(&c).unwrap();
        assert_eq!(h.rank(), 6);
        assert_eq!(h.minus_basis().cols(), 2);
        assert_eq!(h.plus_basis().cols(), 4);
        let neg = h.sigma().mul(h.minus_basis());
        assert_eq!(neg, h.minus_basis().neg());
        assert!(!h.sigma().is_identity());
        assert_ne!(h.sigma(), &IntMatrix::identity(6).neg());
        assert_eq!(h.prym_frame().restrict(h.sigma()).unwrap(), IntMatrix::identity(2).neg());
    }
}
