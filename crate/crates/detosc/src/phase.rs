//! Exact phase arithmetic.
//!
//! Every phase produced by the cyclic models is of the form `e^{i r π}` with
//! `r` rational, so phases are tracked as exact rational multiples of π and
//! converted to `Complex64` only at the linear-algebra boundary. Identities
//! such as `(e^{-iπ/N})^N = -1` then reduce to integer arithmetic instead of
//! accumulated floating-point rounding.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Ratio;

/// An angle that is an exact rational multiple of π, reduced modulo 2π into
/// the half-open interval (-π, π].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Angle {
    /// Multiple of π, reduced so that `-1 < pi_multiple <= 1`.
    pi_multiple: Ratio<i64>,
}

impl Angle {
    /// Angle `(num/den)·π`. Panics if `den == 0`.
    pub fn from_pi_ratio(num: i64, den: i64) -> Self {
        Self::reduce(Ratio::new(num, den))
    }

    /// Angle `(num/den)·2π`; convenient for roots-of-unity phases.
    pub fn from_turn_ratio(num: i64, den: i64) -> Self {
        Self::reduce(Ratio::new(2 * num, den))
    }

    pub fn zero() -> Self {
        Self {
            pi_multiple: Ratio::new(0, 1),
        }
    }

    pub fn pi() -> Self {
        Self {
            pi_multiple: Ratio::new(1, 1),
        }
    }

    fn reduce(r: Ratio<i64>) -> Self {
        let two = Ratio::new(2, 1);
        let mut r = r % two;
        // into (-1, 1]
        if r > Ratio::new(1, 1) {
            r -= two;
        } else if r <= Ratio::new(-1, 1) {
            r += two;
        }
        Self { pi_multiple: r }
    }

    /// The reduced multiple of π in (-1, 1].
    pub fn pi_multiple(&self) -> Ratio<i64> {
        self.pi_multiple
    }

    /// True when `e^{iθ} = 1` exactly.
    pub fn is_zero(&self) -> bool {
        self.pi_multiple == Ratio::new(0, 1)
    }

    /// True when `e^{iθ} = -1` exactly.
    pub fn is_pi(&self) -> bool {
        self.pi_multiple == Ratio::new(1, 1)
    }

    /// Integer power of the unit phase: `n·θ` reduced mod 2π.
    pub fn scale(&self, n: i64) -> Self {
        // reduce the multiplier mod the angle's full period to keep i64 safe
        let den = *self.pi_multiple.denom();
        let period = 2 * den; // n and n + 2·den give the same reduced angle
        let n_red = n.rem_euclid(period);
        Self::reduce(self.pi_multiple * n_red)
    }

    /// Angle in radians.
    pub fn radians(&self) -> f64 {
        let num = *self.pi_multiple.numer() as f64;
        let den = *self.pi_multiple.denom() as f64;
        PI * num / den
    }

    /// The unit complex number `e^{iθ}`.
    pub fn to_complex(&self) -> Complex64 {
        // exact values at the four axis points, sin/cos elsewhere
        let r = self.pi_multiple;
        if r == Ratio::new(0, 1) {
            return Complex64::new(1.0, 0.0);
        }
        if r == Ratio::new(1, 1) {
            return Complex64::new(-1.0, 0.0);
        }
        if r == Ratio::new(1, 2) {
            return Complex64::new(0.0, 1.0);
        }
        if r == Ratio::new(-1, 2) {
            return Complex64::new(0.0, -1.0);
        }
        Complex64::from_polar(1.0, self.radians())
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::reduce(self.pi_multiple + rhs.pi_multiple)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle::reduce(self.pi_multiple - rhs.pi_multiple)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::reduce(-self.pi_multiple)
    }
}

impl Mul<i64> for Angle {
    type Output = Angle;
    fn mul(self, rhs: i64) -> Angle {
        self.scale(rhs)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π", self.pi_multiple)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_lands_in_half_open_interval() {
        let a = Angle::from_pi_ratio(7, 2); // 7π/2 ≡ -π/2
        assert_eq!(a.pi_multiple(), Ratio::new(-1, 2));
        let b = Angle::from_pi_ratio(-3, 1); // -3π ≡ π
        assert!(b.is_pi());
        let c = Angle::from_pi_ratio(2, 1);
        assert!(c.is_zero());
    }

    #[test]
    fn thooft_phase_power_is_exact_minus_one() {
        for n in 1..=64 {
            let step = Angle::from_pi_ratio(-1, n);
            assert!(step.scale(n).is_pi(), "N = {n}");
            assert!(step.scale(2 * n).is_zero(), "N = {n}");
        }
    }

    #[test]
    fn scale_handles_large_multipliers() {
        let step = Angle::from_pi_ratio(-1, 7);
        let direct = step.scale(1_000_000_007);
        let reduced = step.scale(1_000_000_007 % 14);
        assert_eq!(direct, reduced);
    }

    #[test]
    fn axis_points_are_exact() {
        assert_eq!(Angle::zero().to_complex(), Complex64::new(1.0, 0.0));
        assert_eq!(Angle::pi().to_complex(), Complex64::new(-1.0, 0.0));
        assert_eq!(
            Angle::from_pi_ratio(1, 2).to_complex(),
            Complex64::new(0.0, 1.0)
        );
        assert_eq!(
            Angle::from_pi_ratio(-1, 2).to_complex(),
            Complex64::new(0.0, -1.0)
        );
    }

    #[test]
    fn addition_matches_complex_multiplication() {
        let a = Angle::from_pi_ratio(3, 5);
        let b = Angle::from_pi_ratio(-1, 3);
        let lhs = (a + b).to_complex();
        let rhs = a.to_complex() * b.to_complex();
        assert!((lhs - rhs).norm() < 1e-15);
    }
}
