//! Generator triples for su(2) and the su(1,1) discrete series, the
//! position-operator ladder construction on the two-register system, the
//! linear invariant fixing the representation, the Holstein–Primakoff map,
//! and the rescaling that contracts su(2) onto the oscillator algebra h(1).
//!
//! Every ladder matrix element is the square root of an integer, so each
//! representation carries its exact integer radicands alongside the dense
//! complex matrices. Commutation identities such as `[L+, L-] = ±2L3` reduce
//! to integer identities on the radicands and are checked both ways: exactly
//! on the integers and numerically on the dense matrices.
//!
//! Basis ordering: row `n` is the `n`-th rung from the bottom of the ladder,
//! so `L+` populates the subdiagonal (`lplus[n+1, n] = √(radicand(n))`) and
//! `L- = L+†`.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{check_same_shape, CMat};
use crate::spectral::{jm_sector_basis, ZetaPhase};

/// Which algebra a generator triple represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Su2,
    Su11Discrete,
}

/// Where a ladder pair came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderSource {
    Contraction,
    HolsteinPrimakoff,
}

/// A generator triple `(L3, L+, L-)` on a finite or truncated ladder basis,
/// labeled by `2l` (su(2)) or `2k` (su(1,1) discrete series).
#[derive(Debug, Clone)]
pub struct AlgebraRep {
    kind: AlgebraKind,
    two_weight: u64,
    dim: usize,
    l3: CMat,
    lplus: CMat,
    lminus: CMat,
    /// `lplus[n+1, n]² = radicands[n]`, exact integers.
    radicands: Vec<u64>,
    /// Twice the diagonal of `L3`, exact integers.
    two_l3: Vec<i64>,
}

/// Residuals of the defining commutation relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutationResidual {
    /// ‖[L3, L+] - L+‖_max.
    pub raising: f64,
    /// ‖[L3, L-] + L-‖_max.
    pub lowering: f64,
    /// ‖[L+, L-] ∓ 2L3‖_max away from the truncation row.
    pub plus_minus_interior: f64,
    /// The same defect on the truncation row itself (0 for a finite su(2)
    /// representation, the truncated radicand for a cut ladder).
    pub plus_minus_boundary: f64,
}

impl AlgebraRep {
    fn from_ladder(kind: AlgebraKind, two_weight: u64, radicands: Vec<u64>, two_l3: Vec<i64>) -> Self {
        let dim = two_l3.len();
        let mut l3 = Array2::zeros((dim, dim));
        let mut lplus = Array2::zeros((dim, dim));
        let mut lminus = Array2::zeros((dim, dim));
        for n in 0..dim {
            l3[(n, n)] = Complex64::new(two_l3[n] as f64 / 2.0, 0.0);
        }
        for (n, &r) in radicands.iter().enumerate() {
            let e = Complex64::new((r as f64).sqrt(), 0.0);
            lplus[(n + 1, n)] = e;
            lminus[(n, n + 1)] = e;
        }
        Self {
            kind,
            two_weight,
            dim,
            l3,
            lplus,
            lminus,
            radicands,
            two_l3,
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// `2l` for su(2), `2k` for the su(1,1) discrete series.
    pub fn two_weight(&self) -> u64 {
        self.two_weight
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn l3(&self) -> &CMat {
        &self.l3
    }

    pub fn lplus(&self) -> &CMat {
        &self.lplus
    }

    pub fn lminus(&self) -> &CMat {
        &self.lminus
    }

    /// Exact integer under the square root of `⟨n+1|L+|n⟩`.
    pub fn radicand(&self, n: usize) -> u64 {
        self.radicands[n]
    }

    /// Twice the `L3` diagonal, exact.
    pub fn two_l3_diag(&self) -> &[i64] {
        &self.two_l3
    }

    /// Sign of `[L+, L-] = sign·2L3`: `+1` for su(2), `-1` for su(1,1).
    pub fn commutator_sign(&self) -> i64 {
        match self.kind {
            AlgebraKind::Su2 => 1,
            AlgebraKind::Su11Discrete => -1,
        }
    }

    /// Evaluates the commutation relations on the exact integer data.
    ///
    /// `[L3, L±] = ±L±` reduces to `two_l3[n+1] - two_l3[n] = 2` on every
    /// rung, and `[L+, L-] = sign·2L3` to `radicand(n-1) - radicand(n) =
    /// sign·two_l3[n]`; the returned residuals are the integer defects scaled
    /// back to matrix-element size. For an untruncated su(2) representation
    /// every residual is exactly zero.
    pub fn exact_commutation_residual(&self) -> CommutationResidual {
        let mut raising = 0.0f64;
        for (n, &r) in self.radicands.iter().enumerate() {
            let defect = (self.two_l3[n + 1] - self.two_l3[n] - 2) as f64 / 2.0;
            raising = raising.max((defect * (r as f64).sqrt()).abs());
        }
        let lowering = raising; // L- is the exact transpose
        let sign = self.commutator_sign() as i128;
        let mut interior = 0.0f64;
        let mut boundary = 0.0f64;
        for n in 0..self.dim {
            let above = if n < self.dim - 1 {
                self.radicands[n] as i128
            } else {
                0
            };
            let below = if n > 0 { self.radicands[n - 1] as i128 } else { 0 };
            let defect = (below - above - sign * self.two_l3[n] as i128).unsigned_abs() as f64;
            if n == self.dim - 1 && self.kind == AlgebraKind::Su11Discrete {
                boundary = boundary.max(defect);
            } else {
                interior = interior.max(defect);
            }
        }
        CommutationResidual {
            raising,
            lowering,
            plus_minus_interior: interior,
            plus_minus_boundary: boundary,
        }
    }

    /// Evaluates the same relations on the dense matrices with floating-point
    /// matrix products.
    pub fn dense_commutation_residual(&self) -> CommutationResidual {
        let raising = residual_norm(
            &commutator(&self.l3, &self.lplus).unwrap(),
            &self.lplus,
            1.0,
            self.dim,
        );
        let lowering = residual_norm(
            &commutator(&self.l3, &self.lminus).unwrap(),
            &self.lminus,
            -1.0,
            self.dim,
        );
        let pm = commutator(&self.lplus, &self.lminus).unwrap();
        let target = self.l3.mapv(|z| z * 2.0 * self.commutator_sign() as f64);
        let last_row = match self.kind {
            AlgebraKind::Su2 => self.dim, // no truncation row
            AlgebraKind::Su11Discrete => self.dim - 1,
        };
        let mut interior = 0.0f64;
        let mut boundary = 0.0f64;
        for ((i, j), z) in pm.indexed_iter() {
            let d = (z - target[(i, j)]).norm();
            if i >= last_row {
                boundary = boundary.max(d);
            } else {
                interior = interior.max(d);
            }
        }
        CommutationResidual {
            raising,
            lowering,
            plus_minus_interior: interior,
            plus_minus_boundary: boundary,
        }
    }
}

fn residual_norm(comm: &CMat, target: &CMat, scale: f64, dim: usize) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..dim {
        for j in 0..dim {
            worst = worst.max((comm[(i, j)] - target[(i, j)] * scale).norm());
        }
    }
    worst
}

/// su(2) generators on the `(2l+1)`-dimensional ladder, rungs ordered by
/// increasing `m = n - l`:
/// `L3 = diag(m)`, `⟨n+1|L+|n⟩ = √((2l-n)(n+1))`, `L- = L+†`.
pub fn su2_generators(two_l: u64) -> AlgebraRep {
    let dim = two_l as usize + 1;
    let radicands = (0..dim.saturating_sub(1))
        .map(|n| (two_l - n as u64) * (n as u64 + 1))
        .collect();
    let two_l3 = (0..dim).map(|n| 2 * n as i64 - two_l as i64).collect();
    AlgebraRep::from_ladder(AlgebraKind::Su2, two_l, radicands, two_l3)
}

/// su(1,1) discrete-series generators, truncated to `dim` rungs:
/// `L3 = diag(n + k)`, `⟨n+1|L+|n⟩ = √((n+2k)(n+1))`, `L- = L+†`.
pub fn su11_generators(two_k: u64, dim: usize) -> Result<AlgebraRep> {
    if two_k < 1 {
        return Err(Error::InvalidWeight(format!(
            "discrete series needs 2k >= 1, got {two_k}"
        )));
    }
    if dim < 2 {
        return Err(Error::InvalidDimension {
            dim,
            reason: "a truncated ladder needs at least two rungs".into(),
        });
    }
    let radicands = (0..dim - 1)
        .map(|n| (n as u64 + two_k) * (n as u64 + 1))
        .collect();
    let two_l3 = (0..dim).map(|n| 2 * n as i64 + two_k as i64).collect();
    Ok(AlgebraRep::from_ladder(
        AlgebraKind::Su11Discrete,
        two_k,
        radicands,
        two_l3,
    ))
}

/// An oscillator-like ladder pair with `a† = a^T` entrywise and real,
/// nonnegative raising elements.
#[derive(Debug, Clone)]
pub struct LadderPair {
    pub a: CMat,
    pub a_dagger: CMat,
    pub source: LadderSource,
}

impl LadderPair {
    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    /// Raising matrix element `⟨n+1|a†|n⟩`.
    pub fn raising_element(&self, n: usize) -> f64 {
        self.a_dagger[(n + 1, n)].re
    }
}

/// Raising element `⟨n+1|a†|n⟩ = √((2l-n)(n+1)/(2l))` of the rescaled su(2)
/// ladder `a† = L+/√(2l)`.
pub fn contracted_element(two_l: u64, n: u64) -> f64 {
    (((two_l - n) * (n + 1)) as f64 / two_l as f64).sqrt()
}

/// `|⟨n+1|a†|n⟩ - √(n+1)|`, the distance of the rescaled element from its
/// oscillator limit, evaluated directly.
pub fn contraction_error(two_l: u64, n: u64) -> f64 {
    (contracted_element(two_l, n) - ((n + 1) as f64).sqrt()).abs()
}

/// The same distance in closed form, `√(n+1)·|√(1-n/(2l)) - 1|`; the
/// independent oracle for convergence studies.
pub fn contraction_error_closed_form(two_l: u64, n: u64) -> f64 {
    ((n + 1) as f64).sqrt() * ((1.0 - n as f64 / two_l as f64).sqrt() - 1.0).abs()
}

/// Rescaled su(2) ladder `a = L-/√(2l)`, `a† = L+/√(2l)`, truncated to the
/// bottom `dim` rungs (the full representation has `2l+1`).
pub fn su2_contract(two_l: u64, dim: usize) -> Result<LadderPair> {
    if two_l < 2 {
        return Err(Error::InvalidWeight(format!(
            "contraction needs 2l >= 2, got {two_l}"
        )));
    }
    if dim < 2 || dim > two_l as usize + 1 {
        return Err(Error::InvalidDimension {
            dim,
            reason: format!("needs 2 <= dim <= 2l+1 = {}", two_l + 1),
        });
    }
    let mut a = Array2::zeros((dim, dim));
    let mut a_dagger = Array2::zeros((dim, dim));
    for n in 0..dim - 1 {
        let e = Complex64::new(contracted_element(two_l, n as u64), 0.0);
        a_dagger[(n + 1, n)] = e;
        a[(n, n + 1)] = e;
    }
    Ok(LadderPair {
        a,
        a_dagger,
        source: LadderSource::Contraction,
    })
}

/// Holstein–Primakoff map of an su(1,1) discrete-series representation:
/// `a = (L3 + 1/2)^{-1/2} L-` and `a† = L+ (L3 + 1/2)^{-1/2}`, the inverse
/// square root taken entrywise on the positive diagonal. For `k = 1/2` this
/// lands exactly on the oscillator ladder `a†|n⟩ = √(n+1)|n+1⟩`.
pub fn holstein_primakoff(rep: &AlgebraRep) -> Result<LadderPair> {
    if rep.kind() != AlgebraKind::Su11Discrete {
        return Err(Error::NotSu11);
    }
    let dim = rep.dim();
    let mut inv_sqrt = vec![0.0f64; dim];
    for n in 0..dim {
        let d = (rep.two_l3_diag()[n] + 1) as f64 / 2.0;
        if d <= 0.0 {
            return Err(Error::NonPositiveDiagonal { row: n, value: d });
        }
        inv_sqrt[n] = 1.0 / d.sqrt();
    }
    let mut a = Array2::zeros((dim, dim));
    let mut a_dagger = Array2::zeros((dim, dim));
    for n in 0..dim - 1 {
        // row-scale L- on the left, column-scale L+ on the right
        let e = rep.lminus[(n, n + 1)].re * inv_sqrt[n];
        a[(n, n + 1)] = Complex64::new(e, 0.0);
        a_dagger[(n + 1, n)] = Complex64::new(rep.lplus[(n + 1, n)].re * inv_sqrt[n], 0.0);
    }
    Ok(LadderPair {
        a,
        a_dagger,
        source: LadderSource::HolsteinPrimakoff,
    })
}

/// The linear invariant on a fixed-`j` sector: the scalar matrix `j·I`, which
/// commutes with the whole triple and labels the representation.
pub fn invariant_c(rep: &AlgebraRep, two_j: i64) -> Result<CMat> {
    if rep.kind() != AlgebraKind::Su11Discrete {
        return Err(Error::NotSu11);
    }
    let j = two_j as f64 / 2.0;
    Ok(crate::linalg::identity(rep.dim()).mapv(|z| z * j))
}

/// Discrete-series weight of the sector labeled by `j`: `k = |j| + 1/2`, in
/// twice-value encoding `2k = |2j| + 1`.
pub fn sector_two_k(two_j: i64) -> u64 {
    two_j.unsigned_abs() + 1
}

/// Rung index of `|j,m⟩` inside its sector: `n = m - |j|`.
pub fn sector_mode(two_j: i64, two_m: i64) -> Result<u64> {
    let diff = two_m - two_j.abs();
    if diff < 0 || diff % 2 != 0 {
        return Err(Error::InvalidLabel(format!(
            "two_m = {two_m} not reachable in the sector of two_j = {two_j}"
        )));
    }
    Ok((diff / 2) as u64)
}

/// Inverse of the sector labeling: `(2k, n) -> (|2j|, 2m)`.
pub fn sector_label(two_k: u64, n: u64) -> (i64, i64) {
    let two_j_abs = two_k as i64 - 1;
    (two_j_abs, 2 * n as i64 + two_j_abs)
}

/// Position operators of the two-register system: diagonal matrices on the
/// A-major pair basis with `N_A (k)_A⊗(l)_B = k·…` and `N_B … = l·…`.
#[derive(Debug, Clone)]
pub struct PositionOperators {
    n_states: usize,
    n_a: CMat,
    n_b: CMat,
}

impl PositionOperators {
    pub fn new(n_states: usize) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::EmptyModel);
        }
        let dim = n_states * n_states;
        let mut n_a = Array2::zeros((dim, dim));
        let mut n_b = Array2::zeros((dim, dim));
        for k in 1..=n_states {
            for l in 1..=n_states {
                let idx = (k - 1) * n_states + (l - 1);
                n_a[(idx, idx)] = Complex64::new(k as f64, 0.0);
                n_b[(idx, idx)] = Complex64::new(l as f64, 0.0);
            }
        }
        Ok(Self { n_states, n_a, n_b })
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_a(&self) -> &CMat {
        &self.n_a
    }

    pub fn n_b(&self) -> &CMat {
        &self.n_b
    }

    /// The unitary `e^{-i2πζ(N_A + N_B)}`: diagonal with exact rational-angle
    /// phases `e^{-i2πζ(k+l)}`. Raises `m` by one on every `|j,m⟩`.
    pub fn forward_shift(&self) -> Result<CMat> {
        let n = self.n_states;
        let zeta = ZetaPhase::new(n)?;
        let dim = n * n;
        let mut shift = Array2::zeros((dim, dim));
        for k in 1..=n {
            for l in 1..=n {
                let idx = (k - 1) * n + (l - 1);
                shift[(idx, idx)] = zeta.phase(-((k + l) as i64));
            }
        }
        Ok(shift)
    }
}

/// The ladder construction from position operators on one fixed-`j` sector.
///
/// The sector basis is `|j,m⟩`, `m = |j| .. N-1-|j|`, so `dim = N - |2j|`.
/// `shift` is the sector projection of `e^{-i2πζ(N_A+N_B)}`; on interior
/// rungs it is exactly the raising permutation `|j,m-1⟩ -> |j,m⟩`. `l3`
/// carries the large-`N` eigenvalues `m + 1/2`, and the two lowering forms
/// (`√((L3+1/2)²-C²)·shift†` and `shift†·√((L3-1/2)²-C²)`) agree on the
/// interior.
#[derive(Debug, Clone)]
pub struct PositionLadder {
    pub two_j: i64,
    pub n_states: usize,
    pub dim: usize,
    pub shift: CMat,
    pub l3: CMat,
    pub lplus: CMat,
    pub lminus: CMat,
    pub lminus_alt: CMat,
}

impl PositionLadder {
    /// Rows/columns `0..dim-1` are interior for every identity except the
    /// top-rung raise, which leaves the sector (or wraps, for `j = 0`).
    pub fn interior(&self) -> usize {
        self.dim.saturating_sub(1)
    }
}

/// Builds the forward/backward ladder pair on the fixed-`j` sector of the
/// `N²`-dimensional pair space from the position shift operator and the
/// square-root factor evaluated on `L3` eigenvalues.
pub fn ladder_from_positions(n_states: usize, two_j: i64) -> Result<PositionLadder> {
    let sector = crate::spectral::JMLabel::sector(n_states, two_j)?;
    let dim = sector.len();
    if dim < 2 {
        return Err(Error::InvalidDimension {
            dim,
            reason: format!("sector two_j = {two_j} at N = {n_states} has fewer than two rungs"),
        });
    }
    let basis = jm_sector_basis(n_states, two_j)?;
    let positions = PositionOperators::new(n_states)?;
    let full_shift = positions.forward_shift()?;
    let shift = crate::linalg::dagger(&basis).dot(&full_shift).dot(&basis);

    let mut l3 = Array2::zeros((dim, dim));
    let mut factor_plus = Array2::<Complex64>::zeros((dim, dim));
    let mut factor_minus = Array2::<Complex64>::zeros((dim, dim));
    for (i, label) in sector.iter().enumerate() {
        // L3 eigenvalue m + 1/2; the factors are sqrt((L3 ± 1/2)² - j²)
        l3[(i, i)] = Complex64::new((label.two_m + 1) as f64 / 2.0, 0.0);
        let plus_radicand = (label.two_m + 2) * (label.two_m + 2) - two_j * two_j;
        let minus_radicand = label.two_m * label.two_m - two_j * two_j;
        factor_plus[(i, i)] = Complex64::new((plus_radicand as f64).sqrt() / 2.0, 0.0);
        factor_minus[(i, i)] = Complex64::new((minus_radicand as f64).sqrt() / 2.0, 0.0);
    }

    let shift_dag = crate::linalg::dagger(&shift);
    let lplus = shift.dot(&factor_plus);
    let lminus = factor_plus.dot(&shift_dag);
    let lminus_alt = shift_dag.dot(&factor_minus);

    Ok(PositionLadder {
        two_j,
        n_states,
        dim,
        shift,
        l3,
        lplus,
        lminus,
        lminus_alt,
    })
}

/// `AB - BA`.
pub fn commutator(a: &CMat, b: &CMat) -> Result<CMat> {
    check_same_shape(a, b)?;
    Ok(a.dot(b) - b.dot(a))
}
