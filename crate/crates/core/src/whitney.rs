//! Whitney numbers of Dowling lattices, Whitney-Lah numbers and Dowling numbers.
//!
//! With `(x|a)_k = x(x-a)...(x-(k-1)a)`:
//!
//! * `(x-1|a)_n = sum_k w_a(n,k) x^k` (first kind),
//! * `x^n = sum_k W_a(n,k) (x-1|a)_k` (second kind),
//! * `(-x-1|a)_n = sum_k L^W_{n,k}(a) (x-1|a)_k` (Whitney-Lah).

use num_traits::{One, Zero};

use crate::basis::{connection_matrix, expand_in_monomials, PolyBasis};
use crate::classic::stirling2_triangle;
use crate::error::{Error, Result};
use crate::exactmath::{binomial, int, rat, sign};
use crate::triangle::{Family, Params, Triangle};
use crate::Int;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WhitneyParams {
    pub alpha: i64,
}

impl WhitneyParams {
    /// Combinatorial use: the group order `alpha` must be positive.
    pub fn new(alpha: i64) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::InvalidParameter(format!("alpha must be >= 1, got {alpha}")));
        }
        Ok(WhitneyParams { alpha })
    }

    /// Any integer step, for algebraic identities that do not need `alpha >= 1`.
    pub fn algebraic(alpha: i64) -> Self {
        WhitneyParams { alpha }
    }

    fn params(self) -> Params {
        Params::none().with_alpha(rat(self.alpha))
    }

    fn alpha_int(self) -> Int {
        int(self.alpha)
    }
}

fn shifted_basis(sign_x: i64, p: WhitneyParams, nmax: usize) -> PolyBasis {
    PolyBasis::factorial(&rat(sign_x), &rat(-1), &rat(p.alpha), nmax).expect("graded")
}

/// `w_a(n,k)`: monomial coefficients of `(x-1|a)_n`.
pub fn whitney_first(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    expand_in_monomials(&shifted_basis(1, p, nmax))
        .to_int()
        .expect("integer step gives integer coefficients")
        .retag(Family::Whitney1, p.params())
}

/// `W_a(n,k) = W_a(n-1,k-1) + (1 + a k) W_a(n-1,k)`.
pub fn whitney_second(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    let a = p.alpha_int();
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
    for n in 1..=nmax {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let diag = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { Int::zero() };
                let stay = prev.get(k).map(|v| v * (Int::one() + &a * k)).unwrap_or_default();
                diag + stay
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows(Family::Whitney2, p.params(), rows).expect("rows are triangular")
}

/// The defining relation `x^n = sum_k W(n,k) (x-1|a)_k` solved directly.
pub fn whitney_second_from_definition(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    connection_matrix(&PolyBasis::monomials(nmax), &shifted_basis(1, p, nmax))
        .and_then(|m| m.to_int())
        .expect("Whitney numbers are integers")
        .retag(Family::Whitney2, p.params())
}

/// `W_a(n,k) = sum_{i=k}^n C(n,i) a^(i-k) S(i,k)`.
pub fn whitney_second_benoumhani(n: usize, k: usize, p: WhitneyParams) -> Int {
    if k > n {
        return Int::zero();
    }
    let s2 = stirling2_triangle(n);
    let a = p.alpha_int();
    (k..=n)
        .map(|i| binomial(n, i as i64) * num_traits::pow(a.clone(), i - k) * s2.get(i, k))
        .fold(Int::zero(), |x, y| x + y)
}

/// `L^W_{n+1,k} = -L^W_{n,k-1} - ((k+n)a + 2) L^W_{n,k}`.
pub fn whitney_lah(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    let a = p.alpha_int();
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
    for n in 0..nmax {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let diag = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { Int::zero() };
                let coef = &a * (k + n) + 2;
                let stay = prev.get(k).map(|v| v * coef).unwrap_or_default();
                -diag - stay
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows(Family::WhitneyLah, p.params(), rows).expect("rows are triangular")
}

/// Connection coefficients of `(-x-1|a)_n` in the `(x-1|a)_k` basis.
pub fn whitney_lah_from_definition(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    connection_matrix(&shifted_basis(-1, p, nmax), &shifted_basis(1, p, nmax))
        .and_then(|m| m.to_int())
        .expect("Whitney-Lah numbers are integers")
        .retag(Family::WhitneyLah, p.params())
}

/// How the falling product in the vertical recurrence is indexed.
///
/// The recurrence reads `{x}_i = prod_{j<i} ((x - ?) a + 2)`; `IndexJ` uses the
/// loop variable, `IndexI` repeats the outer index in every factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FallingReading {
    IndexJ,
    IndexI,
}

impl FallingReading {
    fn eval(self, x: usize, i: usize, a: &Int) -> Int {
        (0..i)
            .map(|j| {
                let shift = match self {
                    FallingReading::IndexJ => j,
                    FallingReading::IndexI => i,
                };
                (Int::from(x) - shift) * a + 2
            })
            .fold(Int::one(), |acc, f| acc * f)
    }
}

/// `prod_{j<i} ((x+j) a + 2)`.
fn rising_product(x: usize, i: usize, a: &Int) -> Int {
    (0..i)
        .map(|j| Int::from(x + j) * a + 2)
        .fold(Int::one(), |acc, f| acc * f)
}

/// Column-by-column construction from
/// `L^W_{n+1,k} = sum_{i=0}^{n-k+1} (-1)^(i+1) {n+k}_i L^W_{n-i,k-1}` for `k >= 1`.
///
/// The recurrence says nothing about column 0; it is seeded from the defining
/// relation at `x = 1`, where every `(x-1|a)_k` with `k >= 1` vanishes, giving
/// `L^W_{n,0} = (-2|a)_n`.
pub fn whitney_lah_vertical_triangle_with(nmax: usize, p: WhitneyParams, reading: FallingReading) -> Triangle<Int> {
    let a = p.alpha_int();
    let mut rows: Vec<Vec<Int>> = (0..=nmax).map(|n| vec![Int::zero(); n + 1]).collect();
    let mut col0 = Int::one();
    for (n, row) in rows.iter_mut().enumerate() {
        row[0] = col0.clone();
        col0 *= int(-2) - &a * n;
    }
    for k in 1..=nmax {
        for n1 in k..=nmax {
            let n = n1 - 1;
            let acc = (0..=(n + 1 - k))
                .map(|i| sign(i + 1) * reading.eval(n + k, i, &a) * &rows[n - i][k - 1])
                .fold(Int::zero(), |x, y| x + y);
            rows[n1][k] = acc;
        }
    }
    Triangle::from_rows(Family::WhitneyLah, p.params(), rows).expect("rows are triangular")
}

pub fn whitney_lah_vertical_triangle(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    whitney_lah_vertical_triangle_with(nmax, p, FallingReading::IndexJ)
}

pub fn whitney_lah_vertical(n: usize, k: usize, p: WhitneyParams) -> Int {
    whitney_lah_vertical_triangle(n, p).get(n, k)
}

/// Rows `0..=nmax` from
/// `L^W_{n,k} = sum_{i=0}^{n-k} (-1)^(i+1) {n+k+1}^i L^W_{n+1,k+i+1}`,
/// with row `nmax + 1` taken from the defining relation.
pub fn whitney_lah_horizontal_triangle(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    let a = p.alpha_int();
    let upper = whitney_lah_from_definition(nmax + 1, p);
    let rows = (0..=nmax)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    (0..=n - k)
                        .map(|i| sign(i + 1) * rising_product(n + k + 1, i, &a) * upper.get(n + 1, k + i + 1))
                        .fold(Int::zero(), |x, y| x + y)
                })
                .collect()
        })
        .collect();
    Triangle::from_rows(Family::WhitneyLah, p.params(), rows).expect("rows are triangular")
}

pub fn whitney_lah_horizontal(n: usize, k: usize, p: WhitneyParams) -> Int {
    whitney_lah_horizontal_triangle(n, p).get(n, k)
}

/// `sum_{k=j}^n (-1)^k w_a(n,k) W_a(k,j)` over the whole triangle.
pub fn whitney_lah_from_whitney_triangle(nmax: usize, p: WhitneyParams) -> Triangle<Int> {
    let w1 = whitney_first(nmax, p);
    let w2 = whitney_second(nmax, p);
    let signed = w1.map(|_, k, v| sign(k) * v);
    signed
        .matmul(&w2)
        .expect("same size")
        .retag(Family::WhitneyLah, p.params())
}

pub fn whitney_lah_from_whitney(n: usize, j: usize, p: WhitneyParams) -> Int {
    whitney_lah_from_whitney_triangle(n, p).get(n, j)
}

/// `L^W L^W = I` up to `nmax`.
pub fn verify_whitney_lah_orthogonality(nmax: usize, p: WhitneyParams) -> bool {
    let l = whitney_lah(nmax, p);
    l.matmul(&l).expect("same size").is_identity()
}

/// `f = L^W g` and then `L^W f = g`, in both the row form and the truncated column form.
pub fn verify_whitney_lah_inverse(g: &[Int], p: WhitneyParams) -> bool {
    if g.is_empty() {
        return true;
    }
    let nmax = g.len() - 1;
    let l = whitney_lah(nmax, p);
    let rows = l.apply(&l.apply(g)) == g;
    let column = |v: &[Int]| -> Vec<Int> {
        (0..=nmax)
            .map(|k| (k..=nmax).map(|n| l.get(n, k) * &v[n]).fold(Int::zero(), |a, b| a + b))
            .collect()
    };
    let columns = column(&column(g)) == g;
    rows && columns
}

/// `W_a w_a = w_a W_a = I` up to `nmax`.
pub fn verify_whitney_orthogonality(nmax: usize, p: WhitneyParams) -> bool {
    let w1 = whitney_first(nmax, p);
    let w2 = whitney_second(nmax, p);
    w2.matmul(&w1).expect("same size").is_identity() && w1.matmul(&w2).expect("same size").is_identity()
}

/// `D_n(a) = sum_k W_a(n,k)`.
pub fn dowling(n: usize, p: WhitneyParams) -> Int {
    whitney_second(n, p).row_sum(n)
}

/// `D_n(a) = sum_j (-1)^(n-j) [sum_k (-1)^j L^W_{j,k}(a)] W_a(n,j)`.
pub fn dowling_explicit(n: usize, p: WhitneyParams) -> Int {
    let l = whitney_lah(n, p);
    let w2 = whitney_second(n, p);
    (0..=n)
        .map(|j| sign(n - j) * sign(j) * l.row_sum(j) * w2.get(n, j))
        .fold(Int::zero(), |a, b| a + b)
}

/// The explicit Dowling formula at `alpha = 1`, which gives `B_{n+1}`.
pub fn bell_via_dowling(n: usize) -> Int {
    dowling_explicit(n, WhitneyParams { alpha: 1 })
}
