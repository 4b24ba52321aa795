use num_traits::{One, Zero};

use super::{factorial, Poly};
use crate::error::{Error, Result};
use crate::Rat;

/// Power series in `t` truncated after `t^order`. All arithmetic is exact mod `t^(order+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTrunc {
    coeffs: Vec<Rat>,
}

impl SeriesTrunc {
    pub fn zero(order: usize) -> Self {
        SeriesTrunc { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        SeriesTrunc { coeffs: (0..=order).map(|i| p.coeff(i)).collect() }
    }

    /// `e^(c t)`.
    pub fn exp_scaled(c: &Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rat::one();
        for n in 0..=order {
            coeffs.push(term.clone());
            term = term * c / Rat::from_integer((n + 1).into());
        }
        SeriesTrunc { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rat {
        self.coeffs.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    /// `n! [t^n]`, the value an exponential generating function assigns to `n`.
    pub fn egf_coeff(&self, n: usize) -> Rat {
        self.coeff(n) * Rat::from_integer(factorial(n))
    }

    pub fn truncate(&self, order: usize) -> Self {
        SeriesTrunc { coeffs: (0..=order).map(|i| self.coeff(i)).collect() }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::SizeMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(SeriesTrunc {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        SeriesTrunc { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(SeriesTrunc { coeffs: out })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Multiplicative inverse; fails when the constant term is zero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let mut inv = vec![Rat::zero(); n + 1];
        inv[0] = c0.recip();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -acc / c0;
        }
        Ok(SeriesTrunc { coeffs: inv })
    }

    /// `1 / (1 + t)`.
    pub fn geometric_inverse(order: usize) -> Self {
        Self::from_poly(&Poly::from_ints(&[1, 1]), order)
            .inverse()
            .expect("constant term is one")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    #[test]
    fn geometric_inverse_order_three() {
        let s = SeriesTrunc::geometric_inverse(3);
        let expected: Vec<_> = [1, -1, 1, -1].iter().map(|&c| rat(c)).collect();
        assert_eq!(s.coeffs, expected);
    }

    #[test]
    fn exp_coefficients() {
        let e = SeriesTrunc::exp_scaled(&rat(1), 6);
        for n in 0..=6 {
            assert_eq!(e.coeff(n), Rat::one() / Rat::from_integer(factorial(n)));
            assert_eq!(e.egf_coeff(n), rat(1));
        }
    }

    #[test]
    fn lah_kernel_square() {
        // (-t/(1+t))^2 / 2! = (t^2 - 2t^3 + 3t^4 ...)/2
        let order = 4;
        let minus_t = SeriesTrunc::from_poly(&Poly::from_ints(&[0, -1]), order);
        let base = minus_t.mul(&SeriesTrunc::geometric_inverse(order)).unwrap();
        let s = base.pow(2).scale(&ratio(1, 2));
        assert_eq!(s.coeff(2), ratio(1, 2));
        assert_eq!(s.coeff(3), rat(-1));
        assert_eq!(s.coeff(4), ratio(3, 2));
    }

    #[test]
    fn inverse_of_zero_constant_fails() {
        let s = SeriesTrunc::from_poly(&Poly::x(), 3);
        assert!(matches!(s.inverse(), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn inverse_roundtrip() {
        let s = SeriesTrunc::from_poly(&Poly::new(vec![rat(2), ratio(1, 3), rat(-5)]), 7);
        let prod = s.mul(&s.inverse().unwrap()).unwrap();
        assert_eq!(prod, SeriesTrunc::one(7));
    }

    #[test]
    fn order_mismatch_is_error() {
        assert!(SeriesTrunc::one(2).mul(&SeriesTrunc::one(3)).is_err());
    }
}
