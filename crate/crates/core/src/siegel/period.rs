//! σ-fixed period matrices of the cover and extraction of the Prym period
//! `τ = B − C`.
//!
//! Period matrices are written in block coordinates of the symmetric basis,
//! with the `a`-block ordered `a₀ | a₁ … a_{g−1} | σa₁ … σa_{g−1}`, so that
//!
//! ```text
//!     ( *  *  *  )
//! Π = ( *  B  Cᵀ )
//!     ( *  C  D  )
//! ```

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::point::{act, act_variant, residual, CMatrix, ModularElement, SiegelPoint};
use crate::cover::{symmetric_basis, CoverHomology, PrymFrame, SymmetricBasis};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::symplectic::SymplecticSpace;

/// Numeric tolerances, all reported alongside results.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Tolerances {
    pub membership: f64,
    pub equivariance: f64,
    pub fixed_point: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { membership: 1e-10, equivariance: 1e-9, fixed_point: 1e-12 }
    }
}

/// Steps and stopping distance of the midpoint fallback.
pub const MIDPOINT_STEPS: usize = 200;
pub const MIDPOINT_STOP: f64 = 1e-13;

/// `σ_*` for the layout above: `aᵢ ↔ σaᵢ`, `bᵢ ↔ σbᵢ`, with `a₀, b₀` fixed.
pub fn standard_sigma(base_genus: usize) -> ModularElement {
    let h = 2 * base_genus - 1;
    let perm = sheet_swap(base_genus);
    let m = IntMatrix::from_fn(2 * h, 2 * h, |i, j| {
        let (bi, bj) = (i / h, j / h);
        i128::from(bi == bj && perm[j % h] == i % h)
    });
    ModularElement::new(m).expect("permutation matrices are symplectic")
}

fn sheet_swap(base_genus: usize) -> Vec<usize> {
    let g = base_genus;
    (0..2 * g - 1).map(|i| if i == 0 { 0 } else if i < g { i + g - 1 } else { i - (g - 1) }).collect()
}

/// Conversions from cellular homology coordinates of the cover to modular
/// elements on `𝔥_{2g−1}` and on `𝔥_{g−1}`.
#[derive(Debug, Clone)]
pub struct CoverFrame {
    base_genus: usize,
    basis: SymmetricBasis,
    prym: PrymFrame,
    cover_block: IntMatrix,
    prym_block: IntMatrix,
    sigma: ModularElement,
}

impl CoverFrame {
    pub fn new(hom: &CoverHomology) -> Result<Self> {
        let basis = symmetric_basis(hom)?;
        let g = basis.base_genus();
        if g < 2 {
            return Err(Error::usage("Prym periods need base genus at least 2"));
        }
        let prym = basis.prym_frame(hom)?;
        let cover_block = SymplecticSpace::new(2 * g - 1)?.interleaved_to_block();
        let prym_block = SymplecticSpace::new(g - 1)?.interleaved_to_block();
        let sigma = ModularElement::new(cover_block.mul(basis.sigma()).mul(&cover_block.transpose()))?;
        Ok(CoverFrame { base_genus: g, basis, prym, cover_block, prym_block, sigma })
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    /// `σ_*` as a modular element on `𝔥_{2g−1}`.
    pub fn sigma(&self) -> &ModularElement {
        &self.sigma
    }

    pub fn prym_frame(&self) -> &PrymFrame {
        &self.prym
    }

    /// A cover automorphism as a modular element on `𝔥_{2g−1}`.
    pub fn cover_element(&self, m: &IntMatrix) -> Result<ModularElement> {
        let s = self.basis.to_coordinates(m)?;
        ModularElement::new(self.cover_block.mul(&s).mul(&self.cover_block.transpose()))
    }

    /// Its Prym image as a modular element on `𝔥_{g−1}`.
    pub fn prym_element(&self, m: &IntMatrix) -> Result<ModularElement> {
        let r = self.prym.restrict(m)?;
        ModularElement::new(self.prym_block.mul(&r).mul(&self.prym_block.transpose()))
    }
}

/// A σ-fixed point of `𝔥_{2g−1}`.
#[derive(Debug, Clone)]
pub struct PeriodMatrix {
    pi: SiegelPoint,
    sigma: ModularElement,
    base_genus: usize,
}

impl PeriodMatrix {
    pub fn new(pi: SiegelPoint, sigma: ModularElement, base_genus: usize, tol: Tolerances) -> Result<Self> {
        if base_genus < 2 || pi.size() != 2 * base_genus - 1 || sigma.half_size() != pi.size() {
            return Err(Error::usage("period matrix and deck action have mismatched sizes"));
        }
        let p = PeriodMatrix { pi, sigma, base_genus };
        let r = p.fixed_residual(tol)?;
        if r > tol.fixed_point {
            return Err(Error::Precondition(format!("period matrix is not σ-fixed (residual {r:e})")));
        }
        Ok(p)
    }

    pub fn point(&self) -> &SiegelPoint {
        &self.pi
    }

    pub fn sigma(&self) -> &ModularElement {
        &self.sigma
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    /// `‖act(σ_*, Π) − Π‖`.
    pub fn fixed_residual(&self, tol: Tolerances) -> Result<f64> {
        Ok(residual(act(&self.sigma, &self.pi, tol.membership)?.matrix(), self.pi.matrix()))
    }

    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> CMatrix {
        let m = self.pi.matrix();
        CMatrix::from_fn(rows.len(), cols.len(), |i, j| m[(rows.start + i, cols.start + j)])
    }

    /// `B = Π[1..g, 1..g]`.
    pub fn b_block(&self) -> CMatrix {
        let g = self.base_genus;
        self.block(1..g, 1..g)
    }

    /// `C = Π[g..2g−1, 1..g]`.
    pub fn c_block(&self) -> CMatrix {
        let g = self.base_genus;
        self.block(g..2 * g - 1, 1..g)
    }

    /// `D = Π[g..2g−1, g..2g−1]`.
    pub fn d_block(&self) -> CMatrix {
        let g = self.base_genus;
        self.block(g..2 * g - 1, g..2 * g - 1)
    }
}

/// `τ = B − C`, validated as a point of `𝔥_{g−1}`.
pub fn prym_extract(pi: &PeriodMatrix, tol: Tolerances) -> Result<SiegelPoint> {
    let r = pi.fixed_residual(tol)?;
    if r > tol.fixed_point {
        return Err(Error::Precondition(format!("period matrix is not σ-fixed (residual {r:e})")));
    }
    SiegelPoint::new(pi.b_block() - pi.c_block(), tol.membership)
}

/// A random point of `𝔥_h`: uniform symmetric real part, `AAᵀ + I/2` imaginary part.
pub fn random_siegel_point(h: usize, rng: &mut ChaCha8Rng) -> SiegelPoint {
    let mut x = DMatrix::<f64>::zeros(h, h);
    for i in 0..h {
        for j in i..h {
            let v = rng.gen_range(-1.0..1.0);
            x[(i, j)] = v;
            x[(j, i)] = v;
        }
    }
    let a = DMatrix::<f64>::from_fn(h, h, |_, _| rng.gen_range(-1.0..1.0));
    let y = &a * a.transpose() + DMatrix::<f64>::identity(h, h) * 0.5;
    let tau = CMatrix::from_fn(h, h, |i, j| Complex64::new(x[(i, j)], y[(i, j)]));
    SiegelPoint::new(tau, 0.0).expect("AAᵀ + I/2 is positive definite")
}

/// The `a`-block permutation of σ when σ is `diag(P, P)` for a permutation `P`.
fn linear_part(sigma: &ModularElement) -> Option<Vec<usize>> {
    let h = sigma.half_size();
    let m = sigma.matrix();
    let mut perm = vec![0; h];
    for j in 0..h {
        let col: Vec<i128> = (0..2 * h).map(|i| m[(i, j)]).collect();
        let hits: Vec<usize> = (0..2 * h).filter(|&i| col[i] != 0).collect();
        match hits.as_slice() {
            [i] if *i < h && col[*i] == 1 => perm[j] = *i,
            _ => return None,
        }
        if (0..2 * h).any(|i| m[(i, h + j)] != i128::from(i == h + perm[j])) {
            return None;
        }
    }
    Some(perm)
}

/// A σ-fixed period matrix from a seeded random point: `(Π₀ + PΠ₀Pᵀ)/2`
/// when σ acts linearly, Euclidean midpoint iteration otherwise.
pub fn random_symmetric_period(sigma: &ModularElement, base_genus: usize, seed: u64, tol: Tolerances) -> Result<PeriodMatrix> {
    let h = sigma.half_size();
    if h != 2 * base_genus - 1 {
        return Err(Error::usage("deck action has the wrong size for this genus"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p0 = random_siegel_point(h, &mut rng).into_matrix();
    let pi = match linear_part(sigma) {
        Some(perm) => {
            let moved = CMatrix::from_fn(h, h, |i, j| {
                // (PΠ₀Pᵀ)[perm[k], perm[l]] = Π₀[k, l]
                let k = perm.iter().position(|&x| x == i).expect("permutation");
                let l = perm.iter().position(|&x| x == j).expect("permutation");
                p0[(k, l)]
            });
            SiegelPoint::new((&p0 + moved) * Complex64::new(0.5, 0.0), tol.membership)?
        }
        None => midpoint_fixed_point(sigma, SiegelPoint::new(p0, tol.membership)?, tol)?,
    };
    PeriodMatrix::new(pi, sigma.clone(), base_genus, tol)
}

fn midpoint_fixed_point(sigma: &ModularElement, start: SiegelPoint, tol: Tolerances) -> Result<SiegelPoint> {
    let mut x = start;
    for _ in 0..MIDPOINT_STEPS {
        let y = act(sigma, &x, tol.membership)?;
        let mid = (x.matrix() + y.matrix()) * Complex64::new(0.5, 0.0);
        let step = residual(&mid, x.matrix());
        x = SiegelPoint::new(mid, tol.membership)?;
        if step < MIDPOINT_STOP {
            return Ok(x);
        }
    }
    Err(Error::Numeric(format!("midpoint iteration did not settle in {MIDPOINT_STEPS} steps")))
}

/// Equivariance residuals of `τ = B − C` for one cover automorphism.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EquivarianceResidual {
    /// Variant action on both sides.
    pub variant: f64,
    /// Standard action on both sides.
    pub standard: f64,
    /// Standard action on the cover, variant action on the Prym side.
    pub mixed: f64,
}

/// Residuals of `prym_extract(M·Π)` against `Prym(M)·prym_extract(Π)`.
pub fn equivariance_check(frame: &CoverFrame, m: &IntMatrix, pi: &PeriodMatrix, tol: Tolerances) -> Result<EquivarianceResidual> {
    let cover = frame.cover_element(m)?;
    let prym = frame.prym_element(m)?;
    let tau = prym_extract(pi, tol)?;
    let moved = |p: SiegelPoint| PeriodMatrix { pi: p, sigma: pi.sigma.clone(), base_genus: pi.base_genus };
    let pv = prym_extract(&moved(act_variant(&cover, pi.point(), tol.membership)?), tol)?;
    let ps = prym_extract(&moved(act(&cover, pi.point(), tol.membership)?), tol)?;
    let tv = act_variant(&prym, &tau, tol.membership)?;
    let ts = act(&prym, &tau, tol.membership)?;
    Ok(EquivarianceResidual {
        variant: residual(pv.matrix(), tv.matrix()),
        standard: residual(ps.matrix(), ts.matrix()),
        mixed: residual(ps.matrix(), tv.matrix()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{build_cover, cover_homology, lifted_twist, standard_surface};
    use crate::finite::F2Class;
    use crate::symplectic::TwistConvention;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn frame(g: usize, beta: &str) -> (CoverFrame, crate::cover::CoverSurface, CoverHomology) {
        let s = standard_surface(g).unwrap();
        let cover = build_cover(&s, F2Class::parse(beta).unwrap()).unwrap();
        let hom = cover_homology(&cover).unwrap();
        (CoverFrame::new(&hom).unwrap(), cover, hom)
    }

    #[test]
    fn cover_sigma_is_the_sheet_swap() {
        for (g, beta) in [(2, "0100"), (3, "010000"), (3, "101100")] {
            let (f, _, _) = frame(g, beta);
            assert_eq!(f.sigma(), &standard_sigma(g));
        }
    }

    #[test]
    fn extraction_examples() {
        let tol = Tolerances::default();
        let sigma = standard_sigma(2);
        let diag = CMatrix::from_diagonal(&nalgebra::DVector::from_element(3, c(0.0, 1.0)));
        // B = i, C = 0 forces D = i
        let p = PeriodMatrix::new(SiegelPoint::new(diag, 1e-10).unwrap(), sigma.clone(), 2, tol).unwrap();
        assert!((prym_extract(&p, tol).unwrap().matrix()[(0, 0)] - c(0.0, 1.0)).norm() < 1e-15);

        let scaled = CMatrix::from_row_slice(3, 3, &[
            c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0),
            c(0.0, 0.0), c(0.0, 2.0), c(0.0, 1.0),
            c(0.0, 0.0), c(0.0, 1.0), c(0.0, 2.0),
        ]);
        let p = PeriodMatrix::new(SiegelPoint::new(scaled, 1e-10).unwrap(), sigma.clone(), 2, tol).unwrap();
        assert!((prym_extract(&p, tol).unwrap().matrix()[(0, 0)] - c(0.0, 1.0)).norm() < 1e-15);

        let unfixed = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(0.0, 1.0), c(0.0, 2.0), c(0.0, 1.0)]));
        let r = PeriodMatrix::new(SiegelPoint::new(unfixed, 1e-10).unwrap(), sigma, 2, tol);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn random_periods_are_fixed_and_extract() {
        let tol = Tolerances::default();
        for g in [3, 4] {
            let sigma = standard_sigma(g);
            for seed in 0..20 {
                let p = random_symmetric_period(&sigma, g, seed, tol).unwrap();
                assert!(p.fixed_residual(tol).unwrap() <= tol.fixed_point);
                assert!(residual(&p.d_block(), &p.b_block()) < 1e-15);
                prym_extract(&p, tol).unwrap();
            }
        }
    }

    #[test]
    fn midpoint_fallback_finds_fixed_points() {
        let tol = Tolerances::default();
        // σ conjugated by a shear is no longer linear on 𝔥
        let g = 2;
        let sigma = standard_sigma(g);
        let mut shear = IntMatrix::identity(6);
        shear[(1, 4)] = 1;
        let shear = ModularElement::new(shear).unwrap();
        let mut inverse = IntMatrix::identity(6);
        inverse[(1, 4)] = -1;
        let twisted = shear.mul(&sigma).unwrap().mul(&ModularElement::new(inverse).unwrap()).unwrap();
        assert!(linear_part(&twisted).is_none());
        let start = random_siegel_point(3, &mut ChaCha8Rng::seed_from_u64(1));
        let fixed = midpoint_fixed_point(&twisted, start, tol).unwrap();
        assert!(residual(act(&twisted, &fixed, 1e-10).unwrap().matrix(), fixed.matrix()) < 1e-12);
    }

    #[test]
    fn equivariance_for_lifted_twists_and_sigma() {
        let tol = Tolerances::default();
        let (f, cover, hom) = frame(3, "010000");
        let s = cover.base();
        let p = random_symmetric_period(f.sigma(), 3, 5, tol).unwrap();
        let n = hom.rank();

        let r = equivariance_check(&f, &IntMatrix::identity(n), &p, tol).unwrap();
        assert_eq!((r.variant, r.standard, r.mixed), (0.0, 0.0, 0.0));

        let r = equivariance_check(&f, hom.sigma(), &p, tol).unwrap();
        assert!(r.variant <= tol.equivariance && r.standard <= tol.equivariance);

        for word in ["b1", "a2 a3", "b2", "a1"] {
            let t = lifted_twist(&cover, &hom, &s.parse_loop(word).unwrap(), TwistConvention::Positive).unwrap();
            let r = equivariance_check(&f, &t.matrix, &p, tol).unwrap();
            assert!(r.variant <= tol.equivariance, "{word}: {r:?}");
            assert!(r.standard <= tol.equivariance, "{word}: {r:?}");
            if word == "a2 a3" {
                // mixing the two conventions breaks equivariance once β, γ ≠ 0
                assert!(r.mixed > 1e-3);
            }
        }
    }
}
