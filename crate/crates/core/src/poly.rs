//! Polynomials in one variable with nonnegative integer coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// `Σ t^d` over the given degrees.
    pub fn census<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut p = Poly::zero();
        for d in degrees {
            p.add_term(d, 1);
        }
        p
    }

    pub fn add_term(&mut self, degree: usize, coeff: u64) {
        if coeff == 0 {
            return;
        }
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, 0);
        }
        self.coeffs[degree] += coeff;
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// `p(t^k)`.
    pub fn substitute_power(&self, k: usize) -> Poly {
        assert!(k > 0);
        let mut p = Poly::zero();
        for (d, &c) in self.coeffs.iter().enumerate() {
            p.add_term(d * k, c);
        }
        p
    }

    /// Coefficient at `d` equals coefficient at `deg - d` for every `d`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|d| self.coeffs[d] == self.coeffs[n - 1 - d])
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(d, c)| (d, *c))
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_substitution() {
        let a = Poly::from_coeffs(vec![1, 1]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeffs(), [1, 2, 1]);
        assert_eq!(sq.substitute_power(2).coeffs(), [1, 0, 2, 0, 1]);
        assert!(sq.is_palindromic());
        assert_eq!(sq.eval_at_one(), 4);
        assert_eq!(
            format!("{}", Poly::from_coeffs(vec![1, 2, 0, 1])),
            "1 + 2t + t^3"
        );
        assert_eq!(Poly::zero().degree(), None);
    }
}
