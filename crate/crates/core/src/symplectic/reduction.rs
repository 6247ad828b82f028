//! Symplectic bases of unimodular skew lattices by integer reduction.

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

use super::space::standard_form;

/// Finds a unimodular `P` with `Pᵀ G P = J` (interleaved standard form).
///
/// Works pivot by pivot: the Euclidean algorithm on the current pivot row
/// concentrates its pairings in one partner vector (smallest magnitude
/// first, lowest index on ties), the partner is moved next to the pivot and
/// normalised to pairing `+1`, and the remaining vectors are projected off
/// the new hyperbolic plane.
pub fn symplectic_basis(gram: &IntMatrix) -> Result<IntMatrix> {
    if !gram.is_skew() {
        return Err(Error::Degenerate("Gram matrix is not skew-symmetric".into()));
    }
    let n = gram.rows();
    if n % 2 == 1 {
        return Err(Error::Degenerate("odd-dimensional skew form is degenerate".into()));
    }
    let mut basis = IntMatrix::identity(n);
    let mut g = gram.clone();

    // column ops on the basis, with the Gram matrix updated by congruence
    let col_axpy = |basis: &mut IntMatrix, g: &mut IntMatrix, target: usize, src: usize, q: i128| {
        for i in 0..n {
            let v = basis[(i, src)];
            basis[(i, target)] -= q * v;
        }
        for i in 0..n {
            let v = g[(i, src)];
            g[(i, target)] -= q * v;
        }
        for j in 0..n {
            let v = g[(src, j)];
            g[(target, j)] -= q * v;
        }
    };
    let swap = |basis: &mut IntMatrix, g: &mut IntMatrix, a: usize, b: usize| {
        if a == b {
            return;
        }
        for i in 0..n {
            let (x, y) = (basis[(i, a)], basis[(i, b)]);
            basis[(i, a)] = y;
            basis[(i, b)] = x;
        }
        *g = {
            let perm: Vec<usize> = (0..n).map(|i| if i == a { b } else if i == b { a } else { i }).collect();
            g.select(&perm, &perm)
        };
    };
    let negate = |basis: &mut IntMatrix, g: &mut IntMatrix, a: usize| {
        for i in 0..n {
            basis[(i, a)] = -basis[(i, a)];
            g[(i, a)] = -g[(i, a)];
        }
        for j in 0..n {
            g[(a, j)] = -g[(a, j)];
        }
    };

    let mut k = 0;
    while k < n {
        loop {
            let nonzero: Vec<usize> = (k + 1..n).filter(|&j| g[(k, j)] != 0).collect();
            let Some(&piv) = nonzero.iter().min_by_key(|&&j| (g[(k, j)].abs(), j)) else {
                return Err(Error::Degenerate(format!("basis vector {k} pairs trivially with the rest")));
            };
            if nonzero.len() == 1 {
                if g[(k, piv)].abs() != 1 {
                    return Err(Error::Degenerate("skew form is not unimodular".into()));
                }
                swap(&mut basis, &mut g, k + 1, piv);
                if g[(k, k + 1)] == -1 {
                    negate(&mut basis, &mut g, k + 1);
                }
                break;
            }
            for &j in &nonzero {
                if j != piv {
                    let q = g[(k, j)] / g[(k, piv)];
                    col_axpy(&mut basis, &mut g, j, piv, q);
                }
            }
        }
        for j in k + 2..n {
            // î(v_j, v_{k+1}) is cleared by adding a multiple of v_k
            let t = g[(j, k + 1)];
            if t != 0 {
                col_axpy(&mut basis, &mut g, j, k, t);
            }
        }
        k += 2;
    }
    let check = basis.congruence(gram);
    if check != standard_form(n / 2) {
        return Err(Error::internal("symplectic reduction did not reach the standard form"));
    }
    Ok(basis)
}
