//! Thin helpers over `ndarray` for the dense complex matrices used throughout.

use ndarray::{Array1, Array2};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CVec = Array1<Complex64>;
pub type CMat = Array2<Complex64>;

pub fn identity(n: usize) -> CMat {
    Array2::eye(n)
}

/// Conjugate transpose.
pub fn dagger(m: &CMat) -> CMat {
    m.t().mapv(|z| z.conj())
}

/// Entrywise max modulus, the ‖·‖_max norm.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// ‖a - b‖_max; errors on shape mismatch.
pub fn max_abs_diff(a: &CMat, b: &CMat) -> Result<f64> {
    check_same_shape(a, b)?;
    Ok((a - b).mapv(|z| z.norm()).iter().fold(0.0, |m, &x| m.max(x)))
}

/// ‖m - I‖_max.
pub fn deviation_from_identity(m: &CMat) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for ((i, j), z) in m.indexed_iter() {
        let target = if i == j {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
        worst = worst.max((z - target).norm());
    }
    debug_assert_eq!(n, m.ncols());
    worst
}

/// ‖U†U - I‖_max.
pub fn unitarity_residual(u: &CMat) -> f64 {
    deviation_from_identity(&dagger(u).dot(u))
}

/// Matrix power by repeated multiplication (exponent is small everywhere here).
pub fn matrix_power(m: &CMat, exponent: usize) -> CMat {
    let mut acc = identity(m.nrows());
    for _ in 0..exponent {
        acc = m.dot(&acc);
    }
    acc
}

pub fn check_same_shape(a: &CMat, b: &CMat) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::ShapeMismatch {
            a_rows: a.nrows(),
            a_cols: a.ncols(),
            b_rows: b.nrows(),
            b_cols: b.ncols(),
        });
    }
    Ok(())
}

/// Kronecker product with the left factor major in the row index:
/// entry ((i_a·nb + i_b), (j_a·nb + j_b)) = a[i_a,j_a]·b[i_b,j_b].
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    ndarray::linalg::kron(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn dagger_of_unitary_inverts() {
        let u = array![
            [Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)],
            [Complex64::new(0.0, -1.0), Complex64::new(0.0, 0.0)]
        ];
        assert_eq!(unitarity_residual(&u), 0.0);
    }

    #[test]
    fn kron_is_left_major() {
        let a = array![
            [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            [Complex64::new(3.0, 0.0), Complex64::new(4.0, 0.0)]
        ];
        let b = identity(2);
        let k = kron(&a, &b);
        assert_eq!(k[(0, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(k[(0, 2)], Complex64::new(2.0, 0.0));
        assert_eq!(k[(2, 0)], Complex64::new(3.0, 0.0));
        assert_eq!(k[(1, 3)], Complex64::new(2.0, 0.0));
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = identity(2);
        let b = identity(3);
        assert!(max_abs_diff(&a, &b).is_err());
    }
}
