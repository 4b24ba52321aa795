//! Connection coefficients between graded polynomial bases.
//!
//! Given bases `P` and `Q` with `deg P_n = deg Q_n = n`, the connection matrix
//! `M` satisfies `P_n = sum_{j<=n} M(n,j) Q_j`. Every defining relation of the
//! number families in this crate is an instance of this: Whitney numbers
//! connect `(x-1|m)_n` with monomials, Whitney-Lah numbers connect
//! `(-x-1|m)_n` with `(x-1|m)_k`, and so on.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{factorial_basis_sequence, Poly};
use crate::triangle::{CoeffMatrix, Family, Params, Triangle};
use crate::Rat;

/// Sequence of polynomials where element `n` has degree exactly `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBasis {
    elements: Vec<Poly>,
}

impl PolyBasis {
    pub fn new(elements: Vec<Poly>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::DegenerateBasis { index: 0, degree: None });
        }
        for (index, p) in elements.iter().enumerate() {
            if p.degree() != Some(index) {
                return Err(Error::DegenerateBasis { index, degree: p.degree() });
            }
        }
        Ok(PolyBasis { elements })
    }

    /// `{ prod_{i<n} (a x + b - i m) : n = 0..=nmax }`.
    pub fn factorial(a: &Rat, b: &Rat, m: &Rat, nmax: usize) -> Result<Self> {
        Self::new(factorial_basis_sequence(a, b, m, nmax))
    }

    pub fn monomials(nmax: usize) -> Self {
        let mut elements = Vec::with_capacity(nmax + 1);
        let mut p = Poly::one();
        for _ in 0..=nmax {
            elements.push(p.clone());
            p = p.mul(&Poly::x());
        }
        PolyBasis { elements }
    }

    pub fn nmax(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn element(&self, n: usize) -> &Poly {
        &self.elements[n]
    }
}

/// Row `n` holds the monomial coefficients of element `n`.
pub fn expand_in_monomials(basis: &PolyBasis) -> CoeffMatrix {
    let rows = basis
        .elements
        .iter()
        .enumerate()
        .map(|(n, p)| (0..=n).map(|j| p.coeff(j)).collect())
        .collect();
    Triangle::from_rows(Family::Connection, Params::none(), rows).expect("graded rows")
}

/// `M` with `source_n = sum_j M(n,j) target_j`, by back-substitution on monomial coefficients.
pub fn connection_matrix(source: &PolyBasis, target: &PolyBasis) -> Result<CoeffMatrix> {
    if source.nmax() != target.nmax() {
        return Err(Error::SizeMismatch { left: source.nmax(), right: target.nmax() });
    }
    let target_rows = expand_in_monomials(target);
    let rows = source
        .elements
        .iter()
        .enumerate()
        .map(|(n, p)| {
            let mut residual: Vec<Rat> = (0..=n).map(|j| p.coeff(j)).collect();
            let mut out = vec![Rat::zero(); n + 1];
            for j in (0..=n).rev() {
                if residual[j].is_zero() {
                    continue;
                }
                let t = target_rows.row(j);
                let c = &residual[j] / &t[j];
                for (i, ti) in t.iter().enumerate() {
                    if !ti.is_zero() {
                        residual[i] -= &c * ti;
                    }
                }
                out[j] = c;
            }
            out
        })
        .collect();
    Triangle::from_rows(Family::Connection, Params::none(), rows)
}

/// Tauber's product rule: `L(n,m) = sum_j C(n,j) D(j,m)`.
pub fn verify_tauber_product(c: &CoeffMatrix, d: &CoeffMatrix, l: &CoeffMatrix) -> Result<bool> {
    if l.nmax() != c.nmax() {
        return Err(Error::SizeMismatch { left: l.nmax(), right: c.nmax() });
    }
    let product = c.matmul(d)?;
    Ok(product.rows() == l.rows())
}

/// Both `CD` and `DC` are the identity.
pub fn verify_orthogonality(c: &CoeffMatrix, d: &CoeffMatrix) -> Result<bool> {
    Ok(c.matmul(d)?.is_identity() && d.matmul(c)?.is_identity())
}
