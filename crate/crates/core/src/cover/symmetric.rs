//! A symplectic basis of `H₁(cover)` adapted to the deck involution:
//! `a₀, b₀` fixed, and `σ(aᵢ) = a_{i+g−1}`, `σ(bᵢ) = b_{i+g−1}` for
//! `i = 1, …, g−1`.

use super::homology::{CoverHomology, PrymFrame};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::symplectic::{standard_form, symplectic_basis};

#[derive(Debug, Clone)]
pub struct SymmetricBasis {
    /// Columns `a₀, b₀, a₁, b₁, …, a_{2g−2}, b_{2g−2}` in homology coordinates.
    basis: IntMatrix,
    /// `σ_*` written in this basis.
    sigma: IntMatrix,
    base_genus: usize,
}

/// Splits off σ-invariant blocks `⟨x, y, σx, σy⟩` with Gram `H ⊕ H` until a
/// rank-two remainder is left, which carries `a₀, b₀`.
pub fn symmetric_basis(hom: &CoverHomology) -> Result<SymmetricBasis> {
    let n = hom.rank();
    let g = (n + 2) / 4;
    let gram = hom.gram();
    let sigma = hom.sigma();
    let mut w = IntMatrix::identity(n);
    let mut pairs: Vec<[Vec<i128>; 4]> = Vec::new();
    while w.cols() > 2 {
        let block = split_block(&w, gram, sigma)?;
        let u = IntMatrix::from_columns(n, &block);
        // orthogonal complement of the block inside the current lattice
        let k = u.transpose().mul(gram).mul(&w).kernel();
        w = w.mul(&k);
        pairs.push(block);
    }
    if w.cols() != 2 {
        return Err(Error::internal("deck action left an odd remainder"));
    }
    let p0 = symplectic_basis(&w.congruence(gram))?;
    let w0 = w.mul(&p0);
    if sigma.mul(&w0) != w0 {
        return Err(Error::internal("deck action is not trivial on the last block"));
    }
    if pairs.len() != g - 1 {
        return Err(Error::internal("unexpected number of swapped pairs"));
    }
    let mut cols = vec![w0.column(0), w0.column(1)];
    for p in &pairs {
        cols.push(p[0].clone());
        cols.push(p[1].clone());
    }
    for p in &pairs {
        cols.push(p[2].clone());
        cols.push(p[3].clone());
    }
    let basis = IntMatrix::from_columns(n, &cols);
    if basis.congruence(gram) != standard_form(n / 2) {
        return Err(Error::internal("symmetric basis is not symplectic"));
    }
    let sigma_in_basis = basis.inverse_unimodular()?.mul(sigma).mul(&basis);
    Ok(SymmetricBasis { basis, sigma: sigma_in_basis, base_genus: g })
}

/// Finds `x, y` in the lattice spanned by the columns of `w` with
/// `î(x,y) = 1`, `î(σx, y) = 0`; returns `[x, y, σx, σy]`.
fn split_block(w: &IntMatrix, gram: &IntMatrix, sigma: &IntMatrix) -> Result<[Vec<i128>; 4]> {
    let m = w.cols();
    let gw = w.transpose().mul(gram).mul(w);
    // σ restricted to the lattice, in its own coordinates
    let sw = w.left_inverse()?.mul(&sigma.mul(w));
    let mut candidates: Vec<Vec<i128>> = (0..m).map(|i| unit(m, i)).collect();
    for i in 0..m {
        for j in i + 1..m {
            let mut c = unit(m, i);
            c[j] = 1;
            candidates.push(c);
        }
    }
    for x in candidates {
        let sx = sw.mul_vec(&x);
        let span = IntMatrix::from_columns(m, &[x.clone(), sx.clone()]);
        if !span.is_saturated() {
            continue;
        }
        // rows î(x, ·) and î(σx, ·) in lattice coordinates
        let a = IntMatrix::from_rows(&[gw.transpose().mul_vec(&x), gw.transpose().mul_vec(&sx)]);
        let Some(y) = a.solve_integer(&[1, 0]) else { continue };
        let sy = sw.mul_vec(&y);
        return Ok([w.mul_vec(&x), w.mul_vec(&y), w.mul_vec(&sx), w.mul_vec(&sy)]);
    }
    Err(Error::internal("no deck-swapped hyperbolic pair found"))
}

fn unit(n: usize, i: usize) -> Vec<i128> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl SymmetricBasis {
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// `σ_*` in the symmetric basis: a permutation matrix.
    pub fn sigma(&self) -> &IntMatrix {
        &self.sigma
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    /// Minus-lattice frame `eᵢ = aᵢ − σaᵢ`, `fᵢ = bᵢ − σbᵢ` (`i = 1..g−1`).
    pub fn prym_frame(&self, hom: &CoverHomology) -> Result<PrymFrame> {
        let g = self.base_genus;
        let n = self.basis.rows();
        let mut cols = Vec::with_capacity(2 * (g - 1));
        for i in 1..g {
            for k in 0..2 {
                let v = self.basis.column(2 * i + k);
                let sv = self.basis.column(2 * (i + g - 1) + k);
                cols.push(v.iter().zip(&sv).map(|(a, b)| a - b).collect());
            }
        }
        PrymFrame::new(IntMatrix::from_columns(n, &cols), hom.gram())
    }

    /// `m` (given on cellular homology coordinates) written in the symmetric basis.
    pub fn to_coordinates(&self, m: &IntMatrix) -> Result<IntMatrix> {
        Ok(self.basis.inverse_unimodular()?.mul(m).mul(&self.basis))
    }
}
