//! r-Stirling, r-Lah, r-Bell, r-Whitney, r-Whitney-Lah and r-Dowling numbers.
//!
//! Indexing is shifted: entry `(n, k)` of an r-family triangle describes a
//! ground set of `n + r` elements split into `k + r` blocks with the `r`
//! distinguished elements in distinct blocks. In Broder's unshifted notation
//! the entry is `{n+r, k+r}_r`. Row 0 is always `[1]`.

use num_traits::{One, Zero};

use crate::basis::{connection_matrix, PolyBasis};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, exact_div, factorial, int, int_generalized_falling, int_generalized_rising, rat, sign, SeriesTrunc};
use crate::triangle::{Family, Params, Triangle};
use crate::{Int, Rat};

/// Step `m` and number of distinguished elements `r` for the r-Whitney families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RParams {
    pub m: i64,
    pub r: i64,
}

impl RParams {
    pub fn new(m: i64, r: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidParameter(format!("m must be >= 1, got {m}")));
        }
        if r < 0 {
            return Err(Error::InvalidParameter(format!("r must be >= 0, got {r}")));
        }
        Ok(RParams { m, r })
    }

    fn params(self) -> Params {
        Params::none().with_m(rat(self.m)).with_r(rat(self.r))
    }
}

fn r_params(r: usize) -> Params {
    Params::none().with_r(rat(r as i64))
}

/// Builds `T(n+1,k) = T(n,k-1) + coef(n,k) T(n,k)` from `T(0,0) = 1`.
fn triangular(nmax: usize, family: Family, params: Params, coef: impl Fn(usize, usize) -> Int) -> Triangle<Int> {
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
    for n in 0..nmax {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let diag = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { Int::zero() };
                let stay = prev.get(k).map(|v| v * coef(n, k)).unwrap_or_default();
                diag + stay
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows(family, params, rows).expect("rows are triangular")
}

/// `{n+1,k}_r = {n,k-1}_r + (k+r) {n,k}_r`.
pub fn r_stirling2(nmax: usize, r: usize) -> Triangle<Int> {
    triangular(nmax, Family::RStirling2, r_params(r), |_, k| Int::from(k + r))
}

/// Unsigned shifted r-Stirling numbers of the first kind, `A(n+1,k) = A(n,k-1) + (n+r) A(n,k)`.
pub fn r_stirling1(nmax: usize, r: usize) -> Triangle<Int> {
    triangular(nmax, Family::RStirling1, r_params(r), |n, _| Int::from(n + r))
}

/// `n! [t^n] (e^t - 1)^k e^(rt) / k! = {n,k}_r` for every `k <= kmax`, `n <= order`.
pub fn weighted_stirling_egf_check(kmax: usize, r: usize, order: usize) -> bool {
    let tri = r_stirling2(order, r);
    let exp_rt = SeriesTrunc::exp_scaled(&rat(r as i64), order);
    let exp_minus_one = SeriesTrunc::exp_scaled(&rat(1), order)
        .add(&SeriesTrunc::one(order).scale(&rat(-1)))
        .expect("same order");
    (0..=kmax).all(|k| {
        let series = exp_minus_one
            .pow(k)
            .mul(&exp_rt)
            .expect("same order")
            .scale(&(Rat::one() / Rat::from_integer(factorial(k))));
        (0..=order).all(|n| series.egf_coeff(n) == Rat::from_integer(tri.get(n, k)))
    })
}

/// `L(n+1,k) = L(n,k-1) + (n+k+2r) L(n,k)`.
pub fn r_lah(nmax: usize, r: usize) -> Triangle<Int> {
    triangular(nmax, Family::RLah, r_params(r), |n, k| Int::from(n + k + 2 * r))
}

/// `sum_{j=k}^n [n,j]_r {j,k}_r` over the whole triangle.
pub fn r_lah_from_stirlings_triangle(nmax: usize, r: usize) -> Triangle<Int> {
    r_stirling1(nmax, r)
        .matmul(&r_stirling2(nmax, r))
        .expect("same size")
        .retag(Family::RLah, r_params(r))
}

pub fn r_lah_from_stirlings(n: usize, k: usize, r: usize) -> Int {
    r_lah_from_stirlings_triangle(n, r).get(n, k)
}

/// `b = [.]_r a` inverted by `a_n = sum_j (-1)^(n-j) {n,j}_r b_j`.
pub fn verify_r_inverse(a: &[Int], r: usize) -> bool {
    if a.is_empty() {
        return true;
    }
    let nmax = a.len() - 1;
    let b = r_stirling1(nmax, r).apply(a);
    let signed = r_stirling2(nmax, r).map(|n, j, v| sign(n - j) * v);
    signed.apply(&b) == a
}

pub fn r_bell(n: usize, r: usize) -> Int {
    r_stirling2(n, r).row_sum(n)
}

/// `B_{n,r} = sum_k (-1)^(n-k) {n,k}_r sum_j L_r(k,j)`.
pub fn r_bell_explicit(n: usize, r: usize) -> Int {
    let s2 = r_stirling2(n, r);
    let lah = r_lah(n, r);
    (0..=n)
        .map(|k| sign(n - k) * s2.get(n, k) * lah.row_sum(k))
        .fold(Int::zero(), |a, b| a + b)
}

/// `(mx+r)^n = sum_k m^k W_{m,r}(n,k) (x)_k`, solved as a change of basis to `{m^k (x)_k}`.
pub fn r_whitney_second(nmax: usize, p: RParams) -> Result<Triangle<Int>> {
    let source = PolyBasis::factorial(&rat(p.m), &rat(p.r), &rat(0), nmax)?;
    let target = PolyBasis::factorial(&rat(p.m), &rat(0), &rat(p.m), nmax)?;
    Ok(connection_matrix(&source, &target)?
        .to_int()?
        .retag(Family::RWhitney2, p.params()))
}

/// Cross-check route `W(n,k) = W(n-1,k-1) + (km + r) W(n-1,k)`.
pub fn r_whitney_second_recurrence(nmax: usize, p: RParams) -> Triangle<Int> {
    triangular(nmax, Family::RWhitney2, p.params(), |_, k| int(p.m) * k + p.r)
}

/// `m^n (x)_n = sum_k (-1)^(n-k) w_{m,r}(n,k) (mx+r)^k`.
pub fn r_whitney_first(nmax: usize, p: RParams) -> Result<Triangle<Int>> {
    let source = PolyBasis::factorial(&rat(p.m), &rat(0), &rat(p.m), nmax)?;
    let target = PolyBasis::factorial(&rat(p.m), &rat(p.r), &rat(0), nmax)?;
    Ok(connection_matrix(&source, &target)?
        .to_int()?
        .map(|n, k, v| sign(n - k) * v)
        .retag(Family::RWhitney1, p.params()))
}

/// `((-1)^(n-j) w_{m,r}) W_{m,r} = I` and the reverse product.
pub fn verify_r_whitney_orthogonality(nmax: usize, p: RParams) -> Result<bool> {
    let w1 = r_whitney_first(nmax, p)?.map(|n, j, v| sign(n - j) * v);
    let w2 = r_whitney_second(nmax, p)?;
    Ok(w1.matmul(&w2)?.is_identity() && w2.matmul(&w1)?.is_identity())
}

/// `L_{m,r}(n,k) = L(n-1,k-1) + (2r + (n+k-1)m) L(n-1,k)`.
pub fn r_whitney_lah(nmax: usize, p: RParams) -> Triangle<Int> {
    // Stated for row n; `triangular` is indexed by the previous row.
    triangular(nmax, Family::RWhitneyLah, p.params(), |n, k| int(2 * p.r) + int(p.m) * (n + k))
}

/// `C(n,k) [2r|m]_n / [2r|m]_k`.
///
/// For `r = 0` both factors vanish once `k >= 1`; the quotient is then taken
/// in its cancelled form `prod_{i=k}^{n-1} (2r + i m)`.
pub fn r_whitney_lah_explicit_entry(n: usize, k: usize, p: RParams) -> Result<Int> {
    if k > n {
        return Ok(Int::zero());
    }
    let base = int(2 * p.r);
    let step = int(p.m);
    let num = int_generalized_rising(&base, &step, n);
    let den = int_generalized_rising(&base, &step, k);
    let quotient = if den.is_zero() {
        (k..n).map(|i| &base + &step * i).fold(Int::one(), |a, b| a * b)
    } else {
        exact_div(&num, &den).ok_or(Error::Divisibility { n, k })?
    };
    Ok(binomial(n, k as i64) * quotient)
}

pub fn r_whitney_lah_explicit(nmax: usize, p: RParams) -> Result<Triangle<Int>> {
    let rows = (0..=nmax)
        .map(|n| (0..=n).map(|k| r_whitney_lah_explicit_entry(n, k, p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Triangle::from_rows(Family::RWhitneyLah, p.params(), rows)
}

/// `sum_{j=k}^n w_{m,r}(n,j) W_{m,r}(j,k)`.
pub fn r_whitney_lah_from_whitney(nmax: usize, p: RParams) -> Result<Triangle<Int>> {
    Ok(r_whitney_first(nmax, p)?
        .matmul(&r_whitney_second(nmax, p)?)?
        .retag(Family::RWhitneyLah, p.params()))
}

/// Recurrence triangle after confirming the explicit formula and the Whitney product agree with it.
pub fn r_whitney_lah_checked(nmax: usize, p: RParams) -> Result<Triangle<Int>> {
    let tri = r_whitney_lah(nmax, p);
    for (route, other) in [("explicit", r_whitney_lah_explicit(nmax, p)?), ("product", r_whitney_lah_from_whitney(nmax, p)?)] {
        if let Some((n, k, _)) = tri.entries().find(|&(n, k, v)| &other.get(n, k) != v) {
            return Err(Error::InvalidParameter(format!("{route} route disagrees at ({n},{k})")));
        }
    }
    Ok(tri)
}

/// Column-by-column from `L(n+1,k+1) = sum_{j=k}^n (2r + (n+k+1)m | m)_{n-j} L(j,k)`,
/// seeded with column 0 from the horizontal generating function at `x = 0`:
/// `L(n,0) = [2r|m]_n`.
pub fn r_whitney_lah_vertical_triangle(nmax: usize, p: RParams) -> Triangle<Int> {
    let step = int(p.m);
    let mut rows: Vec<Vec<Int>> = (0..=nmax).map(|n| vec![Int::zero(); n + 1]).collect();
    for (n, row) in rows.iter_mut().enumerate() {
        row[0] = int_generalized_rising(&int(2 * p.r), &step, n);
    }
    for k in 0..nmax {
        for n in k..nmax {
            let top = int(2 * p.r) + &step * (n + k + 1);
            let acc = (k..=n)
                .map(|j| int_generalized_falling(&top, &step, n - j) * &rows[j][k])
                .fold(Int::zero(), |a, b| a + b);
            rows[n + 1][k + 1] = acc;
        }
    }
    Triangle::from_rows(Family::RWhitneyLah, p.params(), rows).expect("rows are triangular")
}

pub fn r_whitney_lah_vertical(n: usize, k: usize, p: RParams) -> Int {
    r_whitney_lah_vertical_triangle(n, p).get(n, k)
}

/// Rows `0..=nmax` from
/// `L(n,k) = sum_{i=0}^{n-k} (-1)^i [2r + (n+k+1)m | m]_i L(n+1,k+i+1)`,
/// with row `nmax + 1` taken from the explicit formula.
pub fn r_whitney_lah_horizontal_triangle(nmax: usize, p: RParams) -> Result<Triangle<Int>> {
    let step = int(p.m);
    let upper: Vec<Int> = (0..=nmax + 1)
        .map(|k| r_whitney_lah_explicit_entry(nmax + 1, k, p))
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<Int>> = vec![Vec::new(); nmax + 2];
    rows[nmax + 1] = upper;
    for n in (0..=nmax).rev() {
        let row = (0..=n)
            .map(|k| {
                let base = int(2 * p.r) + &step * (n + k + 1);
                (0..=n - k)
                    .map(|i| sign(i) * int_generalized_rising(&base, &step, i) * &rows[n + 1][k + i + 1])
                    .fold(Int::zero(), |a, b| a + b)
            })
            .collect();
        rows[n] = row;
    }
    rows.truncate(nmax + 1);
    Triangle::from_rows(Family::RWhitneyLah, p.params(), rows)
}

pub fn r_whitney_lah_horizontal(n: usize, k: usize, p: RParams) -> Result<Int> {
    Ok(r_whitney_lah_horizontal_triangle(n, p)?.get(n, k))
}

/// Outcome of the log-concavity checks on one row of `L_{m,r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LogConcavity {
    /// `L(n,k-1) L(n,k+1) < L(n,k)^2` for `1 <= k <= n-1`.
    pub product_form: bool,
    /// `L(n,k-1) + L(n,k+1) < L(n,k)^2`, the variant with a sum on the left.
    pub sum_form: bool,
    pub unimodal: bool,
}

pub fn log_concavity_report(n: usize, p: RParams) -> LogConcavity {
    let tri = r_whitney_lah(n, p);
    let row = tri.row(n);
    let inner = 1..n.max(1);
    let product_form = inner.clone().all(|k| &row[k - 1] * &row[k + 1] < &row[k] * &row[k]);
    let sum_form = inner.clone().all(|k| &row[k - 1] + &row[k + 1] < &row[k] * &row[k]);
    let peak = row
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let unimodal = row[..=peak].windows(2).all(|w| w[0] <= w[1]) && row[peak..].windows(2).all(|w| w[0] >= w[1]);
    LogConcavity { product_form, sum_form, unimodal }
}

/// Strict log-concavity in the product form together with unimodality.
pub fn verify_log_concavity(n: usize, p: RParams) -> bool {
    let report = log_concavity_report(n, p);
    report.product_form && report.unimodal
}

/// `D_{m,r}(n) = sum_k W_{m,r}(n,k)`.
pub fn r_dowling(n: usize, p: RParams) -> Result<Int> {
    Ok(r_whitney_second(n, p)?.row_sum(n))
}

/// `D_{m,r}(n) = sum_j (-1)^(n-j) [sum_k L_{m,r}(j,k)] W_{m,r}(n,j)`.
pub fn r_dowling_explicit(n: usize, p: RParams) -> Result<Int> {
    let l = r_whitney_lah(n, p);
    let w2 = r_whitney_second(n, p)?;
    Ok((0..=n)
        .map(|j| sign(n - j) * l.row_sum(j) * w2.get(n, j))
        .fold(Int::zero(), |a, b| a + b))
}
