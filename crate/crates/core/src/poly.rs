//! Dense real polynomials in the Laplace variable, ascending coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Float;

/// Real polynomial stored as ascending coefficients.
///
/// The representation is kept normalized: the last stored coefficient is
/// nonzero, and the zero polynomial is the empty coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![1.0] }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `p^k` with unit coefficient.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0.0; k + 1];
        coeffs[k] = 1.0;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading (highest-degree) coefficient; 0 for the zero polynomial.
    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Coefficient of `p^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Horner evaluation at a real point.
    pub fn eval(&self, p: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * p + c)
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, p: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * p + c)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Drops trailing coefficients that are negligible relative to the
    /// largest coefficient magnitude. Arithmetic on exact cancellations
    /// leaves `~1e-17`-sized residue in the top coefficients; this restores
    /// the intended degree.
    pub fn trim_relative(&self, tol: f64) -> Polynomial {
        let scale = self.max_abs_coeff();
        if scale == 0.0 {
            return Polynomial::zero();
        }
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.abs() <= tol * scale) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// True when every coefficient is at most `tol * scale` in magnitude.
    pub fn is_negligible(&self, scale: f64, tol: f64) -> bool {
        self.max_abs_coeff() <= tol * scale
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs(), &[1.0, 2.0]);
        assert!(Polynomial::new(vec![0.0, 0.0]).is_zero());
    }

    #[test]
    fn horner_matches_naive_sum() {
        let p = Polynomial::new(vec![3.0, -1.0, 0.5, 2.0]);
        for &x in &[-2.0, -0.3, 0.0, 1.7, 4.0] {
            let naive: f64 = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c * x.powi(k as i32))
                .sum();
            assert!((p.eval(x) - naive).abs() <= 1e-12 * naive.abs().max(1.0));
        }
    }

    #[test]
    fn product_and_difference() {
        // (p + 1)(p - 1) = p^2 - 1
        let a = Polynomial::new(vec![1.0, 1.0]);
        let b = Polynomial::new(vec![-1.0, 1.0]);
        assert_eq!((&a * &b).coeffs(), &[-1.0, 0.0, 1.0]);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_drops_degree() {
        let p = Polynomial::new(vec![1.0, 2.0, 3.0]); // 1 + 2p + 3p^2
        assert_eq!(p.derivative().coeffs(), &[2.0, 6.0]);
        assert!(Polynomial::constant(5.0).derivative().is_zero());
    }

    #[test]
    fn relative_trim_removes_noise() {
        let p = Polynomial::new(vec![1.0, 2.0, 1e-17]);
        assert_eq!(p.trim_relative(1e-13).degree(), Some(1));
    }
}
