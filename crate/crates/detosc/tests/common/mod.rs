//! Shared oracles for the integration suites, kept independent of the
//! library's analytic construction paths.

use ndarray::Array2;
use num_complex::Complex64;

pub type CMat = Array2<Complex64>;

/// |det(m)| via complex LU decomposition with partial pivoting.
///
/// Used as the numeric eigenvalue oracle: `λ` is an eigenvalue of `U` iff
/// `det(U - λI) = 0`, with no reference to the Fourier construction under
/// test.
pub fn lu_abs_det(m: &CMat) -> f64 {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let mut a = m.clone();
    let mut det: f64 = 1.0;
    for col in 0..n {
        // pivot on the largest remaining modulus
        let mut pivot = col;
        let mut best = a[(col, col)].norm();
        for row in col + 1..n {
            let mag = a[(row, col)].norm();
            if mag > best {
                best = mag;
                pivot = row;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                let tmp = a[(col, k)];
                a[(col, k)] = a[(pivot, k)];
                a[(pivot, k)] = tmp;
            }
        }
        let diag = a[(col, col)];
        det *= diag.norm();
        for row in col + 1..n {
            let factor = a[(row, col)] / diag;
            for k in col..n {
                let sub = factor * a[(col, k)];
                a[(row, k)] -= sub;
            }
        }
    }
    det
}

/// `m - λI`.
pub fn shifted(m: &CMat, lambda: Complex64) -> CMat {
    let mut out = m.clone();
    for i in 0..m.nrows() {
        out[(i, i)] -= lambda;
    }
    out
}

#[allow(dead_code)]
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
