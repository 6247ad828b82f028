//! Points of the Siegel upper half space and the two modular actions.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::symplectic::{block_z, MatrixClass, SymplecticMatrix};

pub type CMatrix = DMatrix<Complex64>;

/// Denominators with a larger condition number are rejected.
pub const MAX_CONDITION: f64 = 1e12;

/// Largest entry modulus of `x − y`, relative to `max(1, ‖y‖_max)`.
pub fn residual(x: &CMatrix, y: &CMatrix) -> f64 {
    let scale = y.iter().map(|z| z.norm()).fold(1.0, f64::max);
    (x - y).iter().map(|z| z.norm()).fold(0.0, f64::max) / scale
}

/// A symmetric complex matrix with positive definite imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct SiegelPoint {
    tau: CMatrix,
}

impl SiegelPoint {
    pub fn new(tau: CMatrix, tol: f64) -> Result<Self> {
        if !tau.is_square() || tau.nrows() == 0 {
            return Err(Error::usage("Siegel points are nonempty square matrices"));
        }
        let asym = residual(&tau, &tau.transpose());
        if asym > tol {
            return Err(Error::Precondition(format!("matrix is not symmetric (residual {asym:e})")));
        }
        let lambda = min_imaginary_eigenvalue(&tau);
        if lambda <= tol {
            return Err(Error::Precondition(format!("imaginary part is not positive definite (λ_min = {lambda:e})")));
        }
        Ok(SiegelPoint { tau })
    }

    /// `i·Id`.
    pub fn identity_point(h: usize) -> Self {
        SiegelPoint { tau: CMatrix::identity(h, h) * Complex64::i() }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.tau
    }

    pub fn into_matrix(self) -> CMatrix {
        self.tau
    }

    pub fn size(&self) -> usize {
        self.tau.nrows()
    }

    /// `G(τ) = −τ̄`.
    pub fn reflect(&self) -> SiegelPoint {
        SiegelPoint { tau: -self.tau.map(|z| z.conj()) }
    }
}

/// Smallest eigenvalue of the symmetrized imaginary part.
pub fn min_imaginary_eigenvalue(tau: &CMatrix) -> f64 {
    let y = tau.map(|z| z.im);
    let y = (&y + y.transpose()) * 0.5;
    y.symmetric_eigen().eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}

/// An integer `2h×2h` matrix in block coordinates `(α β; γ δ)` that preserves
/// or negates the block form.
#[derive(Debug, Clone, PartialEq)]
pub struct ModularElement {
    matrix: IntMatrix,
    class: MatrixClass,
}

impl ModularElement {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            return Err(Error::usage("modular elements are square of even size"));
        }
        let h = matrix.rows() / 2;
        let form = block_form(h);
        let class = SymplecticMatrix::integer(matrix.clone()).classify_with(&form)?;
        if class == MatrixClass::Neither {
            return Err(Error::Precondition("matrix neither preserves nor negates the block form".into()));
        }
        Ok(ModularElement { matrix, class })
    }

    pub fn identity(h: usize) -> Self {
        ModularElement { matrix: IntMatrix::identity(2 * h), class: MatrixClass::Symplectic }
    }

    pub fn half_size(&self) -> usize {
        self.matrix.rows() / 2
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn class(&self) -> MatrixClass {
        self.class
    }

    /// `(α, β, γ, δ)` as complex matrices.
    pub fn blocks(&self) -> [CMatrix; 4] {
        let h = self.half_size();
        let block = |r: usize, c: usize| {
            CMatrix::from_fn(h, h, |i, j| Complex64::new(self.matrix[(r * h + i, c * h + j)] as f64, 0.0))
        };
        [block(0, 0), block(0, 1), block(1, 0), block(1, 1)]
    }

    pub fn mul(&self, other: &ModularElement) -> Result<ModularElement> {
        ModularElement::new(self.matrix.mul(&other.matrix))
    }

    /// `Z·M·Z` with `Z = diag(I, −I)`.
    pub fn z_conjugate(&self) -> ModularElement {
        let z = block_z(self.half_size());
        ModularElement { matrix: z.mul(&self.matrix).mul(&z), class: self.class }
    }
}

/// `(0 I; −I 0)`.
pub fn block_form(h: usize) -> IntMatrix {
    IntMatrix::from_fn(2 * h, 2 * h, |i, j| {
        if j == i + h {
            1
        } else if i == j + h {
            -1
        } else {
            0
        }
    })
}

fn check_sizes(m: &ModularElement, tau: &SiegelPoint) -> Result<()> {
    if m.half_size() != tau.size() {
        return Err(Error::usage(format!("{}×{} element acting on a {}×{} point", 2 * m.half_size(), 2 * m.half_size(), tau.size(), tau.size())));
    }
    Ok(())
}

fn fraction(num: CMatrix, den: CMatrix, tol: f64) -> Result<SiegelPoint> {
    let sv = den.clone().svd(false, false).singular_values;
    let (max, min) = sv.iter().fold((0.0f64, f64::INFINITY), |(a, b), &s| (a.max(s), b.min(s)));
    let cond = if min > 0.0 { max / min } else { f64::INFINITY };
    if cond > MAX_CONDITION {
        return Err(Error::Numeric(format!("denominator is near singular (condition number {cond:e})")));
    }
    let inv = den.try_inverse().ok_or_else(|| Error::Numeric("denominator is singular".into()))?;
    let out = num * inv;
    // the exact result is symmetric; drop the rounding asymmetry
    let out = (&out + out.transpose()) * Complex64::new(0.5, 0.0);
    SiegelPoint::new(out, tol)
}

/// `(ατ + β)(γτ + δ)⁻¹`.
pub fn act(m: &ModularElement, tau: &SiegelPoint, tol: f64) -> Result<SiegelPoint> {
    check_sizes(m, tau)?;
    let [a, b, c, d] = m.blocks();
    let t = tau.matrix();
    fraction(&a * t + b, &c * t + d, tol)
}

/// `(ατ − β)(−γτ + δ)⁻¹`.
pub fn act_variant(m: &ModularElement, tau: &SiegelPoint, tol: f64) -> Result<SiegelPoint> {
    check_sizes(m, tau)?;
    let [a, b, c, d] = m.blocks();
    let t = tau.matrix();
    fraction(&a * t - b, -(&c * t) + d, tol)
}

/// `‖act(MN, τ) − act(M, act(N, τ))‖`.
pub fn composition_residual(m: &ModularElement, n: &ModularElement, tau: &SiegelPoint, tol: f64) -> Result<f64> {
    let direct = act(&m.mul(n)?, tau, tol)?;
    let nested = act(m, &act(n, tau, tol)?, tol)?;
    Ok(residual(direct.matrix(), nested.matrix()))
}

/// `‖G(act(M, τ)) − act(ZMZ, G(τ))‖` for `G(τ) = −τ̄`.
pub fn antiholomorphic_check(m: &ModularElement, tau: &SiegelPoint, tol: f64) -> Result<f64> {
    if m.class() != MatrixClass::Symplectic {
        return Err(Error::Precondition("anti-holomorphic check needs a symplectic element".into()));
    }
    let left = act(m, tau, tol)?.reflect();
    let right = act(&m.z_conjugate(), &tau.reflect(), tol)?;
    Ok(residual(left.matrix(), right.matrix()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn point() -> SiegelPoint {
        let t = CMatrix::from_row_slice(2, 2, &[c(0.3, 1.2), c(-0.1, 0.4), c(-0.1, 0.4), c(0.7, 0.9)]);
        SiegelPoint::new(t, 1e-10).unwrap()
    }

    #[test]
    fn validation() {
        let bad = CMatrix::from_row_slice(2, 2, &[c(0.0, 1.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)]);
        assert!(matches!(SiegelPoint::new(bad, 1e-10), Err(Error::Precondition(_))));
        let flat = CMatrix::from_row_slice(1, 1, &[c(1.0, -1.0)]);
        assert!(SiegelPoint::new(flat, 1e-10).is_err());
        assert!(ModularElement::new(IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]])).is_err());
    }

    #[test]
    fn identity_and_translation() {
        let tau = point();
        assert!(residual(act(&ModularElement::identity(2), &tau, 1e-10).unwrap().matrix(), tau.matrix()) < 1e-15);

        let t = SiegelPoint::new(CMatrix::from_element(1, 1, c(0.25, 2.0)), 1e-10).unwrap();
        let m = ModularElement::new(IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]])).unwrap();
        let out = act(&m, &t, 1e-10).unwrap();
        assert!((out.matrix()[(0, 0)] - c(1.25, 2.0)).norm() < 1e-15);
        // G(τ+1) = −τ̄ − 1 = act((1 −1; 0 1), −τ̄)
        assert_eq!(m.z_conjugate().matrix().to_rows(), vec![vec![1, -1], vec![0, 1]]);
        assert!(antiholomorphic_check(&m, &t, 1e-10).unwrap() < 1e-15);
    }

    #[test]
    fn variant_against_the_printed_formula() {
        // h = 1: (aτ − b)/(−cτ + d) by hand
        let m = ModularElement::new(IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]])).unwrap();
        let t = c(0.2, 0.8);
        let tau = SiegelPoint::new(CMatrix::from_element(1, 1, t), 1e-10).unwrap();
        let expected = (c(2.0, 0.0) * t - 1.0) / (-t + 1.0);
        let got = act_variant(&m, &tau, 1e-10).unwrap().matrix()[(0, 0)];
        assert!((got - expected).norm() < 1e-14);
        let via_z = act(&m.z_conjugate(), &tau, 1e-10).unwrap().matrix()[(0, 0)];
        assert!((got - via_z).norm() < 1e-14);
        // no off-diagonal blocks: both actions agree
        let d = ModularElement::new(IntMatrix::from_rows(&[vec![-1, 0], vec![0, -1]])).unwrap();
        assert_eq!(act(&d, &tau, 1e-10).unwrap(), act_variant(&d, &tau, 1e-10).unwrap());
    }

    #[test]
    fn reflection_is_an_involution() {
        let tau = point();
        assert_eq!(tau.reflect().reflect(), tau);
        assert!(SiegelPoint::new(tau.reflect().into_matrix(), 1e-10).is_ok());
    }

    #[test]
    fn ill_conditioned_denominator_is_numeric_error() {
        let t = CMatrix::from_row_slice(2, 2, &[c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1e-14)]);
        let tau = SiegelPoint::new(t, 1e-16).unwrap();
        // (0 −I; I 0) has denominator τ itself
        let s = IntMatrix::from_fn(4, 4, |i, j| if j == i + 2 { -1 } else { i128::from(i == j + 2) });
        let m = ModularElement::new(s).unwrap();
        assert!(matches!(act(&m, &tau, 1e-16), Err(Error::Numeric(_))));
    }
}
