//! Eigenvalue kernels for the small dense matrices used everywhere else:
//! closed-form solvers for real symmetric 2x2 and 3x3 matrices and thin
//! wrappers around the Hermitian decomposition for the rest.

use nalgebra::{DMatrix, Matrix3, Matrix4, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Eigenvalues of the real symmetric matrix `[[a, b], [b, c]]`, descending.
pub fn sym_eigenvalues_2(a: f64, b: f64, c: f64) -> [f64; 2] {
    let mean = 0.5 * (a + c);
    let disc = (0.5 * (a - c)).hypot(b);
    [mean + disc, mean - disc]
}

/// Eigenvalues of a real symmetric 3x3 matrix via the trigonometric form of
/// the characteristic cubic, descending.
pub fn sym_eigenvalues_3(m: &Matrix3<f64>) -> [f64; 3] {
    let off = m[(0, 1)] * m[(0, 1)] + m[(0, 2)] * m[(0, 2)] + m[(1, 2)] * m[(1, 2)];
    if off == 0.0 {
        let mut d = [m[(0, 0)], m[(1, 1)], m[(2, 2)]];
        d.sort_by(|x, y| y.total_cmp(x));
        return d;
    }
    let q = m.trace() / 3.0;
    let p2 = (m[(0, 0)] - q).powi(2) + (m[(1, 1)] - q).powi(2) + (m[(2, 2)] - q).powi(2)
        + 2.0 * off;
    let p = (p2 / 6.0).sqrt();
    let b = (m - Matrix3::identity() * q) / p;
    let r = (b.determinant() / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3 * 2.0).cos();
    let mid = 3.0 * q - hi - lo;
    [hi, mid, lo]
}

/// Eigenvalues of a real symmetric k x k matrix, k <= 4, descending.
///
/// Uses the closed forms above for k <= 3 and the general symmetric solver
/// for k = 4.
pub fn sym_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    match m.nrows() {
        0 => Vec::new(),
        1 => vec![m[(0, 0)]],
        2 => sym_eigenvalues_2(m[(0, 0)], m[(0, 1)], m[(1, 1)]).to_vec(),
        3 => sym_eigenvalues_3(&Matrix3::from_fn(|i, j| m[(i, j)])).to_vec(),
        _ => {
            let mut vals: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
            vals.sort_by(|x, y| y.total_cmp(x));
            vals
        }
    }
}

/// Eigenvalues of a Hermitian k x k complex matrix, descending.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    if m.nrows() == 1 {
        return vec![m[(0, 0)].re];
    }
    let mut vals: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(|x, y| y.total_cmp(x));
    vals
}

/// Full Hermitian eigendecomposition of a 4x4 complex matrix with a residual
/// check on the reconstruction.
///
/// Returns eigenvalues (unsorted, as produced by the solver) and eigenvectors
/// as columns. Fails with [`Error::NumericalFailure`] when the reconstruction
/// residual exceeds `residual_tol`.
pub fn hermitian_eigen_4(
    m: &Matrix4<Complex64>,
    residual_tol: f64,
) -> Result<(Vector4<f64>, Matrix4<Complex64>)> {
    let eig = m.symmetric_eigen();
    let recomposed = &eig.eigenvectors
        * Matrix4::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(x, 0.0)))
        * eig.eigenvectors.adjoint();
    let residual = (recomposed - m)
        .iter()
        .map(|z| z.norm())
        .fold(0.0_f64, f64::max);
    if residual > residual_tol {
        return Err(Error::NumericalFailure(format!(
            "eigendecomposition residual {residual:e} exceeds {residual_tol:e}"
        )));
    }
    Ok((eig.eigenvalues, eig.eigenvectors))
}

/// Hermitian PSD square root via the spectral decomposition, with negative
/// eigenvalues clamped to zero.
pub fn sqrtm_psd(m: &Matrix4<Complex64>, residual_tol: f64) -> Result<Matrix4<Complex64>> {
    let (vals, vecs) = hermitian_eigen_4(m, residual_tol)?;
    let roots = Matrix4::from_diagonal(&Vector4::from_fn(|i, _| {
        Complex64::new(vals[i].max(0.0).sqrt(), 0.0)
    }));
    Ok(&vecs * roots * vecs.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_symmetric(n: usize, rng: &mut impl Rng) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let v = rng.random_range(-1.0..1.0);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        m
    }

    #[test]
    fn closed_forms_match_general_solver() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=4usize {
            for _ in 0..200 {
                let m = random_symmetric(n, &mut rng);
                let fast = sym_eigenvalues(&m);
                let mut slow: Vec<f64> =
                    m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
                slow.sort_by(|x, y| y.total_cmp(x));
                for (a, b) in fast.iter().zip(&slow) {
                    assert_relative_eq!(a, b, epsilon = 1e-10, max_relative = 1e-10);
                }
            }
        }
    }

    #[test]
    fn diagonal_3x3_shortcut() {
        let m = Matrix3::from_diagonal(&nalgebra::Vector3::new(-1.0, 3.0, 0.5));
        assert_eq!(sym_eigenvalues_3(&m), [3.0, 0.5, -1.0]);
    }

    #[test]
    fn hermitian_eigen_recovers_known_spectrum() {
        // sigma_y tensor sigma_y has eigenvalues {1, 1, -1, -1}.
        let mut m = Matrix4::zeros();
        m[(0, 3)] = Complex64::new(-1.0, 0.0);
        m[(1, 2)] = Complex64::new(1.0, 0.0);
        m[(2, 1)] = Complex64::new(1.0, 0.0);
        m[(3, 0)] = Complex64::new(-1.0, 0.0);
        let (vals, _) = hermitian_eigen_4(&m, 1e-10).unwrap();
        let mut sorted: Vec<f64> = vals.iter().copied().collect();
        sorted.sort_by(|a, b| b.total_cmp(a));
        assert_relative_eq!(sorted[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(sorted[1], 1.0, epsilon = 1e-12);
        assert_relative_eq!(sorted[2], -1.0, epsilon = 1e-12);
        assert_relative_eq!(sorted[3], -1.0, epsilon = 1e-12);
    }

    #[test]
    fn sqrtm_squares_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            // Random Hermitian PSD as A A^dagger.
            let a = Matrix4::from_fn(|_, _| {
                Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            let psd = &a * a.adjoint();
            let root = sqrtm_psd(&psd, 1e-8).unwrap();
            let back = &root * &root;
            for (x, y) in back.iter().zip(psd.iter()) {
                assert_relative_eq!(x.re, y.re, epsilon = 1e-9);
                assert_relative_eq!(x.im, y.im, epsilon = 1e-9);
            }
        }
    }
}
