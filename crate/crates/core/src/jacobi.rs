//! Cyclic Jacobi eigenvalue iteration for Seidel matrices, used as an
//! approximate cross-check of the exact spectral routines and for display.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::spectra::SeidelMatrix;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of `S`, ascending, to about `1e-9` absolute accuracy.
pub fn float_eigen_oracle(s: &SeidelMatrix) -> Result<Vec<f64>> {
    let n = s.order();
    let mut a: Vec<Vec<f64>> = s.to_rows().iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    jacobi_eigenvalues(&mut a).map(|mut ev| {
        ev.sort_by(f64::total_cmp);
        debug_assert_eq!(ev.len(), n);
        ev
    })
}

/// Diagonalizes the symmetric matrix `a` in place and returns its diagonal.
pub fn jacobi_eigenvalues(a: &mut [Vec<f64>]) -> Result<Vec<f64>> {
    let n = a.len();
    let frob: f64 = a.iter().flatten().map(|x| x * x).sum();
    let tol = 1e-30 * frob.max(1.0);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).map(|(p, q)| a[p][q] * a[p][q]).sum();
        if off <= tol {
            return Ok((0..n).map(|i| a[i][i]).collect());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let sn = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - sn * akq;
                    a[k][q] = sn * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - sn * aqk;
                    a[q][k] = sn * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::Convergence { sweeps: MAX_SWEEPS })
}
