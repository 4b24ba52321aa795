//! Stirling numbers of both kinds, signed and signless Lah numbers, Bell numbers,
//! partial Bell polynomials and the Qi formula.

use num_traits::{One, Zero};

use crate::basis::{connection_matrix, PolyBasis};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, factorial, int, rat, sign, Poly, SeriesTrunc};
use crate::triangle::{Family, Params, Triangle};
use crate::{Int, Rat};

/// `S(n,k) = S(n-1,k-1) + k S(n-1,k)`.
pub fn stirling2_triangle(nmax: usize) -> Triangle<Int> {
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
    for n in 1..=nmax {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let diag = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { Int::zero() };
                let stay = prev.get(k).map(|v| v * k).unwrap_or_default();
                diag + stay
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows(Family::Stirling2, Params::none(), rows).expect("rows are triangular")
}

/// Signed `s(n,k)`, the coefficient of `x^k` in `(x)_n`.
pub fn stirling1_triangle(nmax: usize) -> Triangle<Int> {
    let falling = PolyBasis::factorial(&rat(1), &rat(0), &rat(1), nmax).expect("graded");
    connection_matrix(&falling, &PolyBasis::monomials(nmax))
        .and_then(|m| m.to_int())
        .expect("falling factorials have integer coefficients")
        .retag(Family::Stirling1, Params::none())
}

/// Signed Lah numbers from `L(n+1,k) = -L(n,k-1) - (n+k) L(n,k)`.
pub fn lah_signed_triangle(nmax: usize) -> Triangle<Int> {
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::one()]];
    for n in 0..nmax {
        let prev = &rows[n];
        let row = (0..=n + 1)
            .map(|k| {
                let diag = if k >= 1 { prev.get(k - 1).cloned().unwrap_or_default() } else { Int::zero() };
                let stay = prev.get(k).map(|v| v * (n + k)).unwrap_or_default();
                -diag - stay
            })
            .collect();
        rows.push(row);
    }
    Triangle::from_rows(Family::Lah, Params::none(), rows).expect("rows are triangular")
}

/// `(-1)^n C(n-1,k-1) n!/k!`.
pub fn lah_explicit(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    if k == 0 {
        return if n == 0 { Int::one() } else { Int::zero() };
    }
    sign(n) * binomial(n - 1, k as i64 - 1) * factorial(n) / factorial(k)
}

/// `L(n,k) = (-1)^n L_{n,k}`, the number of partitions into `k` linearly ordered blocks.
pub fn lah_signless(n: usize, k: usize) -> Int {
    sign(n) * lah_explicit(n, k)
}

pub fn lah_signless_triangle(nmax: usize) -> Triangle<Int> {
    lah_signed_triangle(nmax)
        .map(|n, _, v| sign(n) * v)
        .retag(Family::LahSignless, Params::none())
}

/// Reading of the angle-bracket symbol in the horizontal Lah recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleBracket {
    Rising,
    Falling,
}

impl AngleBracket {
    pub fn eval(self, x: &Int, i: usize) -> Int {
        let step = match self {
            AngleBracket::Rising => int(1),
            AngleBracket::Falling => int(-1),
        };
        let mut acc = Int::one();
        let mut term = x.clone();
        for _ in 0..i {
            acc *= &term;
            term += &step;
        }
        acc
    }

    pub fn name(self) -> &'static str {
        match self {
            AngleBracket::Rising => "rising factorial",
            AngleBracket::Falling => "falling factorial",
        }
    }
}

/// Column-by-column construction from
/// `L(n+1,k) = sum_{i=0}^{n-k+1} (-1)^(i+1) (k+n)_i L(n-i,k-1)`,
/// seeded only with column 0 (`L(n,0) = [n = 0]`).
pub fn lah_vertical_triangle(nmax: usize) -> Triangle<Int> {
    let mut rows: Vec<Vec<Int>> = (0..=nmax).map(|n| vec![Int::zero(); n + 1]).collect();
    rows[0][0] = Int::one();
    for k in 1..=nmax {
        for n1 in k..=nmax {
            let n = n1 - 1;
            let mut acc = Int::zero();
            let mut fall = Int::one();
            for i in 0..=(n + 1 - k) {
                acc += sign(i + 1) * &fall * &rows[n - i][k - 1];
                fall *= Int::from(k + n) - i;
            }
            rows[n1][k] = acc;
        }
    }
    Triangle::from_rows(Family::Lah, Params::none(), rows).expect("rows are triangular")
}

/// `L_{n,k}` through the vertical recurrence alone.
pub fn lah_vertical(n: usize, k: usize) -> Int {
    lah_vertical_triangle(n).get(n, k)
}

/// `L_{n,k} = sum_{i=0}^{n-k} (-1)^(i+1) <n+k+1>_i L_{n+1,k+i+1}` with row `n+1` from the explicit formula.
pub fn lah_horizontal_with(n: usize, k: usize, bracket: AngleBracket) -> Int {
    if k > n {
        return Int::zero();
    }
    let base = Int::from(n + k + 1);
    (0..=n - k)
        .map(|i| sign(i + 1) * bracket.eval(&base, i) * lah_explicit(n + 1, k + i + 1))
        .fold(Int::zero(), |a, b| a + b)
}

pub fn lah_horizontal(n: usize, k: usize) -> Int {
    lah_horizontal_with(n, k, AngleBracket::Rising)
}

/// Tries the rising reading first, then the falling one; `None` if neither
/// reproduces the triangle for every `k <= n <= nmax`.
pub fn resolve_angle_bracket(nmax: usize) -> Option<AngleBracket> {
    let tri = lah_signed_triangle(nmax);
    [AngleBracket::Rising, AngleBracket::Falling].into_iter().find(|&b| {
        tri.entries().all(|(n, k, v)| &lah_horizontal_with(n, k, b) == v)
    })
}

/// Checks `n! [t^n] (1/k!) (-t/(1+t))^k = L_{n,k}` for all `n <= order`.
pub fn lah_egf_check(k: usize, order: usize) -> bool {
    let minus_t = SeriesTrunc::from_poly(&Poly::from_ints(&[0, -1]), order);
    let base = minus_t
        .mul(&SeriesTrunc::geometric_inverse(order))
        .expect("same order");
    let series = base.pow(k).scale(&(Rat::one() / Rat::from_integer(factorial(k))));
    (0..=order).all(|n| series.egf_coeff(n) == Rat::from_integer(lah_explicit(n, k)))
}

pub fn bell(n: usize) -> Int {
    stirling2_triangle(n).row_sum(n)
}

/// `B_n = sum_k (-1)^(n-k) (sum_j L(k,j)) S(n,k)`.
pub fn qi_bell(n: usize) -> Int {
    let s2 = stirling2_triangle(n);
    let lah = lah_signless_triangle(n);
    (0..=n)
        .map(|k| sign(n - k) * lah.row_sum(k) * s2.get(n, k))
        .fold(Int::zero(), |a, b| a + b)
}

/// `sum_{j=k}^n (-1)^j s(n,j) S(j,k)`, which should reproduce `L_{n,k}`.
pub fn stirling2_from_lah(n: usize, k: usize) -> Int {
    let s1 = stirling1_triangle(n);
    let s2 = stirling2_triangle(n);
    (k..=n)
        .map(|j| sign(j) * s1.get(n, j) * s2.get(j, k))
        .fold(Int::zero(), |a, b| a + b)
}

/// Checks `f = S g` then `s f = g` for the given sequence.
pub fn verify_stirling_inverse(g: &[Int]) -> bool {
    if g.is_empty() {
        return true;
    }
    let nmax = g.len() - 1;
    let f = stirling2_triangle(nmax).apply(g);
    stirling1_triangle(nmax).apply(&f) == g
}

/// Partial Bell polynomial `B_{n,k}(x_1, ..., x_{n-k+1})` by enumerating all
/// `(l_1, l_2, ...)` with `sum i l_i = n` and `sum l_i = k`.
///
/// The coefficient `n! / prod(l_i! (i!)^l_i)` is always an integer, so integer
/// arguments give an integer value.
pub fn partial_bell(n: usize, k: usize, x: &[Int]) -> Result<Int> {
    if k > n {
        return Ok(Int::zero());
    }
    if k == 0 {
        return Ok(if n == 0 { Int::one() } else { Int::zero() });
    }
    let needed = n - k + 1;
    if x.len() < needed {
        return Err(Error::InsufficientArguments { n, k, needed, got: x.len() });
    }
    let mut total = Int::zero();
    let mut counts = vec![0usize; needed + 1];
    enumerate_compositions(1, needed, n, k, &mut counts, &mut |counts| {
        let mut denom = Int::one();
        let mut value = factorial(n);
        for (i, &l) in counts.iter().enumerate().skip(1) {
            denom *= factorial(l) * num_traits::pow(factorial(i), l);
            value *= num_traits::pow(x[i - 1].clone(), l);
        }
        total += value / denom;
    });
    Ok(total)
}

fn enumerate_compositions(
    part: usize,
    max_part: usize,
    weight_left: usize,
    count_left: usize,
    counts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if part > max_part {
        if weight_left == 0 && count_left == 0 {
            visit(counts);
        }
        return;
    }
    for l in 0..=count_left.min(weight_left / part) {
        counts[part] = l;
        enumerate_compositions(part + 1, max_part, weight_left - l * part, count_left - l, counts, visit);
    }
    counts[part] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_all_partitions, count_partitions, PartitionSpec};

    #[test]
    fn stirling2_values() {
        let s = stirling2_triangle(6);
        assert_eq!(s.get(4, 2), int(7));
        assert_eq!(s.get(6, 3), count_partitions(PartitionSpec::stirling(6, 3)).unwrap());
        assert_eq!(s.get(6, 3), int(90));
        for n in 0..=6 {
            assert_eq!(s.get(n, n), int(1));
        }
    }

    #[test]
    fn stirling1_values() {
        let s = stirling1_triangle(5);
        assert_eq!(s.get(3, 1), int(2));
        assert_eq!(s.get(3, 2), int(-3));
        for n in 0..=5 {
            assert_eq!(s.get(n, n), int(1));
        }
        // Standard recurrence s(n+1,k) = s(n,k-1) - n s(n,k) as a second route.
        for n in 0..5 {
            for k in 0..=n + 1 {
                let rec = s.get_signed(n, k as i64 - 1) - s.get(n, k) * n;
                assert_eq!(s.get(n + 1, k), rec);
            }
        }
    }

    #[test]
    fn stirling_kinds_are_orthogonal() {
        let s1 = stirling1_triangle(8).to_rat();
        let s2 = stirling2_triangle(8).to_rat();
        assert!(crate::basis::verify_orthogonality(&s1, &s2).unwrap());
    }

    #[test]
    fn lah_triangle_values() {
        let l = lah_signed_triangle(5);
        assert_eq!(l.get(1, 1), int(-1));
        assert_eq!(l.get(3, 2), int(-6));
        for n in 1..=5 {
            assert_eq!(l.get(n, 0), int(0));
        }
        assert_eq!(lah_explicit(4, 2), int(36));
        assert_eq!(lah_explicit(0, 0), int(1));
        assert_eq!(lah_explicit(3, 0), int(0));
        assert_eq!(lah_explicit(2, 3), int(0));
    }

    #[test]
    fn lah_recurrence_matches_explicit() {
        let l = lah_signed_triangle(30);
        for (n, k, v) in l.entries() {
            assert_eq!(v, &lah_explicit(n, k), "({n},{k})");
        }
    }

    #[test]
    fn signless_lah_matches_oracle() {
        assert_eq!(lah_signless(3, 1), int(6));
        assert_eq!(lah_signless(4, 2), int(36));
        for n in 0..=7 {
            assert_eq!(lah_signless(n, n), int(1));
            for k in 0..=n {
                assert_eq!(lah_signless(n, k), count_partitions(PartitionSpec::lah(n, k)).unwrap());
            }
        }
    }

    #[test]
    fn vertical_route() {
        assert_eq!(lah_vertical(2, 1), int(2));
        assert_eq!(lah_vertical(1, 1), int(-1));
        let v = lah_vertical_triangle(20);
        assert_eq!(v.rows(), lah_signed_triangle(20).rows());
    }

    #[test]
    fn horizontal_route_resolves_to_rising() {
        assert_eq!(lah_horizontal(3, 2), int(-6));
        assert_eq!(lah_horizontal(4, 4), int(1));
        assert_eq!(resolve_angle_bracket(20), Some(AngleBracket::Rising));
        // The falling reading already breaks at L_{2,0}.
        assert_ne!(lah_horizontal_with(2, 0, AngleBracket::Falling), int(0));
    }

    #[test]
    fn egf() {
        assert!(lah_egf_check(0, 5));
        assert!(lah_egf_check(1, 4));
        assert!(lah_egf_check(2, 6));
        assert!(lah_egf_check(5, 20));
    }

    #[test]
    fn bell_values() {
        assert_eq!(bell(0), int(1));
        assert_eq!(bell(4), int(15));
        assert_eq!(bell(6), count_all_partitions(6, 0, false).unwrap());
        assert_eq!(qi_bell(0), int(1));
        assert_eq!(qi_bell(4), int(15));
        for n in 0..=25 {
            assert_eq!(qi_bell(n), bell(n), "n={n}");
        }
    }

    #[test]
    fn lah_from_stirling_product() {
        assert_eq!(stirling2_from_lah(3, 2), int(-6));
        for n in 0..=15 {
            assert_eq!(stirling2_from_lah(n, n), sign(n));
            for k in 0..=n {
                assert_eq!(stirling2_from_lah(n, k), lah_explicit(n, k));
            }
        }
    }

    #[test]
    fn partial_bell_values() {
        let ones = vec![int(1); 10];
        let s2 = stirling2_triangle(8);
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(partial_bell(n, k, &ones).unwrap(), s2.get(n, k), "({n},{k})");
            }
        }
        let xs: Vec<Int> = [2, 3, 5, 7, 11].iter().map(|&v| int(v)).collect();
        for n in 1..=5 {
            assert_eq!(partial_bell(n, n, &xs).unwrap(), num_traits::pow(int(2), n));
        }
        // Direct enumeration for B_{4,2}(1,2,3): (l1,l2,l3) in {(1,0,1), (0,2,0)}
        // 4!/(1!1!) * (1/1!)(3/3!) + 4!/2! * (2/2!)^2 = 12 + 12 = 24.
        assert_eq!(partial_bell(4, 2, &[int(1), int(2), int(3)]).unwrap(), int(24));
        assert!(matches!(
            partial_bell(4, 2, &[int(1), int(2)]),
            Err(Error::InsufficientArguments { needed: 3, got: 2, .. })
        ));
    }

    #[test]
    fn inverse_relation_delta() {
        let mut g = vec![int(0); 10];
        g[3] = int(1);
        assert!(verify_stirling_inverse(&g));
        assert!(verify_stirling_inverse(&[]));
    }
}
