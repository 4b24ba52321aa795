//! Hsu-Shiue unified Stirling pairs, their Lah-type and Bell-type numbers,
//! Cakić numbers, and the reductions of the unified pair to the Whitney and
//! r-families.
//!
//! With `(t|a)_n = t(t-a)...(t-(n-1)a)` the pair is defined by
//!
//! ```text
//! (t|alpha)_n = sum_k S1(n,k) (t-gamma|beta)_k
//! (t|beta)_n  = sum_k S2(n,k) (t+gamma|alpha)_k
//! ```

use num_traits::{One, Zero};

use crate::basis::{connection_matrix, expand_in_monomials, verify_orthogonality, PolyBasis};
use crate::error::Result;
use crate::exactmath::{format_rat, rat, sign};
use crate::rnumbers::{r_bell, r_dowling, r_lah, r_stirling1, r_stirling2, r_whitney_first, r_whitney_lah, r_whitney_second, RParams};
use crate::triangle::{CoeffMatrix, Family, Params, Triangle};
use crate::whitney::{dowling, whitney_first, whitney_lah, whitney_second, WhitneyParams};
use crate::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSParams {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
}

impl HSParams {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat) -> Self {
        HSParams { alpha, beta, gamma }
    }

    pub fn ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(rat(alpha), rat(beta), rat(gamma))
    }

    pub fn to_params(&self) -> Params {
        Params::none()
            .with_alpha(self.alpha.clone())
            .with_beta(self.beta.clone())
            .with_gamma(self.gamma.clone())
    }

    pub fn describe(&self) -> String {
        format!("({}, {}, {})", format_rat(&self.alpha), format_rat(&self.beta), format_rat(&self.gamma))
    }
}

/// `S1 = S(n,k; alpha, beta, gamma)` and `S2 = S(n,k; beta, alpha, -gamma)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSPair {
    pub s1: CoeffMatrix,
    pub s2: CoeffMatrix,
    pub params: HSParams,
    pub nmax: usize,
}

/// `(t + shift | step)_n`.
fn shifted_factorial(shift: &Rat, step: &Rat, nmax: usize) -> Result<PolyBasis> {
    PolyBasis::factorial(&Rat::one(), shift, step, nmax)
}

pub fn hs_pair(nmax: usize, params: &HSParams) -> Result<HSPair> {
    let HSParams { alpha, beta, gamma } = params;
    let zero = Rat::zero();
    let s1 = connection_matrix(&shifted_factorial(&zero, alpha, nmax)?, &shifted_factorial(&-gamma, beta, nmax)?)?
        .retag(Family::HsFirst, params.to_params());
    let s2 = connection_matrix(&shifted_factorial(&zero, beta, nmax)?, &shifted_factorial(gamma, alpha, nmax)?)?
        .retag(Family::HsSecond, params.to_params());
    Ok(HSPair { s1, s2, params: params.clone(), nmax })
}

pub fn verify_hs_orthogonality(pair: &HSPair) -> bool {
    verify_orthogonality(&pair.s1, &pair.s2).expect("pair matrices share a size")
}

/// `f = S1 g` and `S2 f = g`.
pub fn verify_hs_inverse(pair: &HSPair, g: &[Rat]) -> bool {
    let g = &g[..g.len().min(pair.nmax + 1)];
    pair.s2.apply(&pair.s1.apply(g)) == g
}

/// `L(n,j) = sum_{k=j}^n (-1)^k S2(n,k) S1(k,j)` for the whole triangle.
pub fn hs_lah_matrix(pair: &HSPair) -> CoeffMatrix {
    pair.s2
        .map(|_, k, v| v * Rat::from_integer(sign(k)))
        .matmul(&pair.s1)
        .expect("pair matrices share a size")
        .retag(Family::HsLah, pair.params.to_params())
}

pub fn hs_lah(n: usize, j: usize, params: &HSParams) -> Result<Rat> {
    Ok(hs_lah_matrix(&hs_pair(n, params)?).get(n, j))
}

/// `W_n = sum_j S(n,j; alpha, beta, gamma)`.
pub fn hs_bell(n: usize, params: &HSParams) -> Result<Rat> {
    Ok(hs_pair(n, params)?.s1.row_sum(n))
}

/// `W_n = (-1)^n sum_k [sum_{j<=k} L(k,j)] S(n,k; alpha, beta, gamma)`.
pub fn hs_bell_explicit(n: usize, params: &HSParams) -> Result<Rat> {
    let pair = hs_pair(n, params)?;
    Ok(bell_explicit_from_pair(&pair, n))
}

fn bell_explicit_from_pair(pair: &HSPair, n: usize) -> Rat {
    let lah = hs_lah_matrix(pair);
    let sum = (0..=n)
        .map(|k| lah.row_sum(k) * pair.s1.get(n, k))
        .fold(Rat::zero(), |a, b| a + b);
    sum * Rat::from_integer(sign(n))
}

/// Cakić numbers `(x|alpha)_n = sum_k c(n,k) (x|1)_k`, i.e. `S1` at `(alpha, 1, 0)`.
pub fn cakic(nmax: usize, alpha: &Rat) -> Result<CoeffMatrix> {
    let params = HSParams::new(alpha.clone(), Rat::one(), Rat::zero());
    Ok(hs_pair(nmax, &params)?.s1.retag(Family::Cakic, Params::none().with_alpha(alpha.clone())))
}

/// Row sum of the Cakić triangle.
pub fn cakic_bell(n: usize, alpha: &Rat) -> Result<Rat> {
    Ok(cakic(n, alpha)?.row_sum(n))
}

/// Cakić row sum through the unified explicit formula.
pub fn cakic_bell_explicit(n: usize, alpha: &Rat) -> Result<Rat> {
    hs_bell_explicit(n, &HSParams::new(alpha.clone(), Rat::one(), Rat::zero()))
}

/// Sign factor relating a unified-pair entry to a reference entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    None,
    /// `(-1)^(n-k)`
    RowMinusColumn,
    /// `(-1)^n`
    Row,
    /// `(-1)^k`
    Column,
}

impl SignConvention {
    const ALL: [SignConvention; 4] =
        [SignConvention::None, SignConvention::RowMinusColumn, SignConvention::Row, SignConvention::Column];

    pub fn factor(self, n: usize, k: usize) -> Int {
        match self {
            SignConvention::None => Int::one(),
            SignConvention::RowMinusColumn => sign(n - k),
            SignConvention::Row => sign(n),
            SignConvention::Column => sign(k),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            SignConvention::None => "no sign factor",
            SignConvention::RowMinusColumn => "(-1)^(n-k)",
            SignConvention::Row => "(-1)^n",
            SignConvention::Column => "(-1)^k",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub k: usize,
    pub expected: String,
    pub actual: String,
}

/// One reduction `reference(n,k) = sign(n,k) * unified(n,k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationCheck {
    pub group: &'static str,
    pub relation: &'static str,
    pub params: String,
    /// Sign factor the relation is written with.
    pub displayed: SignConvention,
    /// Sign factor that actually makes every entry agree, if any.
    pub observed: Option<SignConvention>,
    pub entries: usize,
    /// Disagreements under the displayed convention.
    pub mismatches: Vec<Mismatch>,
}

impl SpecializationCheck {
    /// Holds under some convention, whether or not it is the displayed one.
    pub fn explained(&self) -> bool {
        self.observed.is_some()
    }

    pub fn as_displayed(&self) -> bool {
        self.observed == Some(self.displayed)
    }
}

fn compare(
    group: &'static str,
    relation: &'static str,
    params: &HSParams,
    displayed: SignConvention,
    unified: &CoeffMatrix,
    reference: &Triangle<Int>,
) -> SpecializationCheck {
    let agrees = |conv: SignConvention| {
        reference
            .entries()
            .all(|(n, k, v)| Rat::from_integer(v * conv.factor(n, k)) == unified.get(n, k))
    };
    let observed = std::iter::once(displayed)
        .chain(SignConvention::ALL)
        .find(|&c| agrees(c));
    let mismatches = reference
        .entries()
        .filter_map(|(n, k, v)| {
            let expected = Rat::from_integer(v * displayed.factor(n, k));
            let actual = unified.get(n, k);
            (expected != actual).then(|| Mismatch { n, k, expected: format_rat(&expected), actual: format_rat(&actual) })
        })
        .collect();
    SpecializationCheck {
        group,
        relation,
        params: params.describe(),
        displayed,
        observed,
        entries: reference.entries().count(),
        mismatches,
    }
}

/// Explicit-formula value at a specialization against the family's own Bell-type number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellCoincidence {
    pub group: &'static str,
    pub params: String,
    pub holds: bool,
}

/// Change-of-basis instance of the Tauber product rule `L_{2,1} = C_2 D_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauberCheck {
    pub instance: &'static str,
    pub product_rule_holds: bool,
    /// Sign relating `L_{2,1}` to the named Lah-type family.
    pub observed: Option<SignConvention>,
    pub displayed: SignConvention,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CakicObservation {
    /// `S(n,k; alpha, 1, 0)` reproduces the falling-factorial definition of `c(n,k)`.
    pub literal_matches: bool,
    /// `S(n,k; -alpha, 1, 0)` is the expansion of the rising factorial `[x|alpha]_n` instead.
    pub negated_alpha_is_rising: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub nmax: usize,
    pub checks: Vec<SpecializationCheck>,
    pub bell: Vec<BellCoincidence>,
    pub tauber: Vec<TauberCheck>,
    pub cakic: CakicObservation,
}

impl SpecializationReport {
    pub fn unexplained(&self) -> usize {
        self.checks.iter().filter(|c| !c.explained()).count()
            + self.bell.iter().filter(|b| !b.holds).count()
            + self
                .tauber
                .iter()
                .filter(|t| !t.product_rule_holds || t.observed.is_none())
                .count()
            + usize::from(!self.cakic.literal_matches || !self.cakic.negated_alpha_is_rising)
    }

    pub fn passed(&self) -> bool {
        self.unexplained() == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("specializations up to n = {}\n", self.nmax);
        for c in &self.checks {
            let status = match c.observed {
                Some(o) if o == c.displayed => "ok".to_string(),
                Some(o) => format!("ok with {} (written with {})", o.describe(), c.displayed.describe()),
                None => format!("FAIL ({} mismatches)", c.mismatches.len()),
            };
            out += &format!("  [{}] {} at {}: {} entries, {}\n", c.group, c.relation, c.params, c.entries, status);
        }
        for b in &self.bell {
            out += &format!("  [{}] explicit Bell-type formula at {}: {}\n", b.group, b.params, if b.holds { "ok" } else { "FAIL" });
        }
        for t in &self.tauber {
            let l = match t.observed {
                Some(o) => o.describe().to_string(),
                None => "no sign convention matches".into(),
            };
            out += &format!(
                "  [tauber] {}: product rule {}, L_21 vs family: {}\n",
                t.instance,
                if t.product_rule_holds { "ok" } else { "FAIL" },
                l
            );
        }
        out += &format!(
            "  [cakic] S(n,k;alpha,1,0) is the falling definition: {}; S(n,k;-alpha,1,0) is the rising expansion: {}\n",
            self.cakic.literal_matches, self.cakic.negated_alpha_is_rising
        );
        out
    }
}

fn whitney_group(nmax: usize, beta: i64) -> Result<(Vec<SpecializationCheck>, BellCoincidence)> {
    let params = HSParams::ints(0, beta, 1);
    let pair = hs_pair(nmax, &params)?;
    let wp = WhitneyParams::new(beta)?;
    let group = "whitney";
    let checks = vec![
        compare(group, "w_b(n,k) = S(n,k; b, 0, -1)", &params, SignConvention::None, &pair.s2, &whitney_first(nmax, wp)),
        compare(group, "W_b(n,k) = S(n,k; 0, b, 1)", &params, SignConvention::None, &pair.s1, &whitney_second(nmax, wp)),
        compare(group, "L^W_{n,k}(b) = L(n,k; 0, b, 1)", &params, SignConvention::None, &hs_lah_matrix(&pair), &whitney_lah(nmax, wp)),
    ];
    let holds = (0..=nmax).all(|n| {
        bell_explicit_from_pair(&pair.truncated(n), n) == Rat::from_integer(dowling(n, wp))
    });
    Ok((checks, BellCoincidence { group, params: params.describe(), holds }))
}

fn r_stirling_group(nmax: usize, r: usize) -> Result<(Vec<SpecializationCheck>, BellCoincidence)> {
    let params = HSParams::ints(0, 1, r as i64);
    let pair = hs_pair(nmax, &params)?;
    let group = "r-stirling";
    let checks = vec![
        compare(group, "[n,k]_r = S(n,k; 1, 0, -r)", &params, SignConvention::None, &pair.s2, &r_stirling1(nmax, r)),
        compare(group, "{n,k}_r = S(n,k; 0, 1, r)", &params, SignConvention::None, &pair.s1, &r_stirling2(nmax, r)),
        compare(group, "L_r(n,k) = (-1)^n L(n,k; 0, 1, r)", &params, SignConvention::Row, &hs_lah_matrix(&pair), &r_lah(nmax, r)),
    ];
    let holds = (0..=nmax).all(|n| {
        bell_explicit_from_pair(&pair.truncated(n), n) == Rat::from_integer(r_bell(n, r))
    });
    Ok((checks, BellCoincidence { group, params: params.describe(), holds }))
}

fn r_whitney_group(nmax: usize, beta: i64, r: i64) -> Result<(Vec<SpecializationCheck>, BellCoincidence)> {
    let params = HSParams::ints(0, beta, r);
    let pair = hs_pair(nmax, &params)?;
    let rp = RParams::new(beta, r)?;
    let group = "r-whitney";
    let checks = vec![
        compare(group, "w_{b,r}(n,k) = (-1)^(n-k) S(n,k; b, 0, -r)", &params, SignConvention::RowMinusColumn, &pair.s2, &r_whitney_first(nmax, rp)?),
        compare(group, "W_{b,r}(n,k) = S(n,k; 0, b, r)", &params, SignConvention::None, &pair.s1, &r_whitney_second(nmax, rp)?),
        compare(group, "L_{b,r}(n,k) = (-1)^n L(n,k; 0, b, r)", &params, SignConvention::Row, &hs_lah_matrix(&pair), &r_whitney_lah(nmax, rp)),
    ];
    let mut holds = true;
    for n in 0..=nmax {
        holds &= bell_explicit_from_pair(&pair.truncated(n), n) == Rat::from_integer(r_dowling(n, rp)?);
    }
    Ok((checks, BellCoincidence { group, params: params.describe(), holds }))
}

impl HSPair {
    fn truncated(&self, nmax: usize) -> HSPair {
        HSPair {
            s1: self.s1.truncated(nmax),
            s2: self.s2.truncated(nmax),
            params: self.params.clone(),
            nmax,
        }
    }
}

fn tauber_instance(
    instance: &'static str,
    p1: &PolyBasis,
    p2: &PolyBasis,
    family: &Triangle<Int>,
    displayed: SignConvention,
) -> Result<TauberCheck> {
    let nmax = p1.nmax();
    let c2 = expand_in_monomials(p2);
    let d1 = connection_matrix(&PolyBasis::monomials(nmax), p1)?;
    let l21 = connection_matrix(p2, p1)?;
    let product_rule_holds = crate::basis::verify_tauber_product(&c2, &d1, &l21)?;
    let observed = std::iter::once(displayed).chain(SignConvention::ALL).find(|&conv| {
        family
            .entries()
            .all(|(n, k, v)| Rat::from_integer(v * conv.factor(n, k)) == l21.get(n, k))
    });
    Ok(TauberCheck { instance, product_rule_holds, observed, displayed })
}

fn tauber_checks(nmax: usize) -> Result<Vec<TauberCheck>> {
    let one = Rat::one();
    let (alpha, r, m) = (3i64, 2i64, 2i64);
    let wp = WhitneyParams::new(alpha)?;
    let w1 = PolyBasis::factorial(&one, &rat(-1), &rat(alpha), nmax)?;
    let w2 = PolyBasis::factorial(&-&one, &rat(-1), &rat(alpha), nmax)?;
    let s1 = PolyBasis::factorial(&one, &rat(0), &one, nmax)?;
    let s2 = PolyBasis::factorial(&-&one, &rat(-2 * r), &one, nmax)?;
    let rw1 = PolyBasis::factorial(&one, &rat(0), &rat(m), nmax)?;
    let rw2 = PolyBasis::factorial(&one, &rat(2 * r), &rat(-m), nmax)?;
    Ok(vec![
        tauber_instance("(-x-1|3)_n to (x-1|3)_k, Whitney-Lah", &w1, &w2, &whitney_lah(nmax, wp), SignConvention::None)?,
        tauber_instance("(-x-4)_n to (x)_k, r-Lah", &s1, &s2, &r_lah(nmax, r as usize), SignConvention::Row)?,
        tauber_instance("[x+4|2]_n to (x|2)_k, r-Whitney-Lah", &rw1, &rw2, &r_whitney_lah(nmax, RParams::new(m, r)?), SignConvention::None)?,
    ])
}

fn cakic_observation(nmax: usize) -> Result<CakicObservation> {
    let alpha = rat(2);
    let one = Rat::one();
    let zero = Rat::zero();
    let falling = connection_matrix(&shifted_factorial(&zero, &alpha, nmax)?, &shifted_factorial(&zero, &one, nmax)?)?;
    let rising = connection_matrix(&shifted_factorial(&zero, &-&alpha, nmax)?, &shifted_factorial(&zero, &one, nmax)?)?;
    let literal = cakic(nmax, &alpha)?;
    let negated = hs_pair(nmax, &HSParams::new(-&alpha, one, zero))?.s1;
    Ok(CakicObservation {
        literal_matches: literal.rows() == falling.rows(),
        negated_alpha_is_rising: negated.rows() == rising.rows(),
    })
}

/// Checks the unified pair against the Whitney (`beta = 3`), r-Stirling
/// (`r = 2`) and r-Whitney (`beta = r = 2`) families entrywise up to `nmax`.
pub fn verify_specializations(nmax: usize) -> Result<SpecializationReport> {
    let mut checks = Vec::new();
    let mut bell = Vec::new();
    for (c, b) in [whitney_group(nmax, 3)?, r_stirling_group(nmax, 2)?, r_whitney_group(nmax, 2, 2)?] {
        checks.extend(c);
        bell.push(b);
    }
    Ok(SpecializationReport {
        nmax,
        checks,
        bell,
        tauber: tauber_checks(nmax)?,
        cakic: cakic_observation(nmax)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::stirling1_triangle;
    use crate::exactmath::ratio;
    use proptest::prelude::*;

    #[test]
    fn pair_reductions() {
        let pair = hs_pair(5, &HSParams::ints(0, 1, 2)).unwrap();
        let s2 = r_stirling2(5, 2);
        for (n, k, v) in s2.entries() {
            assert_eq!(pair.s1.get(n, k), Rat::from_integer(v.clone()));
        }
        let pair = hs_pair(6, &HSParams::ints(1, 0, 0)).unwrap();
        assert_eq!(pair.s1.to_int().unwrap().rows(), stirling1_triangle(6).rows());
        let pair = hs_pair(6, &HSParams::new(ratio(1, 2), ratio(-3, 4), rat(5))).unwrap();
        for n in 0..=6 {
            assert_eq!(pair.s1.get(n, n), rat(1));
            assert_eq!(pair.s2.get(n, n), rat(1));
        }
    }

    #[test]
    fn orthogonality() {
        assert!(verify_hs_orthogonality(&hs_pair(0, &HSParams::ints(4, -1, 7)).unwrap()));
        assert!(verify_hs_orthogonality(&hs_pair(8, &HSParams::ints(0, 1, 2)).unwrap()));
        let rational = HSParams::new(ratio(1, 2), ratio(1, 3), rat(2));
        let pair = hs_pair(6, &rational).unwrap();
        assert!(verify_hs_orthogonality(&pair));
        assert!(!pair.s1.is_integral());
    }

    #[test]
    fn lah_type_values() {
        let p = HSParams::ints(0, 3, 1);
        let lah = hs_lah_matrix(&hs_pair(8, &p).unwrap());
        let lw = whitney_lah(8, WhitneyParams::new(3).unwrap());
        for (n, k, v) in lw.entries() {
            assert_eq!(lah.get(n, k), Rat::from_integer(v.clone()));
        }
        for n in 0..=6 {
            assert_eq!(hs_lah(n, n, &HSParams::new(ratio(2, 5), rat(1), ratio(-1, 3))).unwrap(), Rat::from_integer(sign(n)));
        }
        let lah = hs_lah_matrix(&hs_pair(5, &HSParams::ints(0, 1, 2)).unwrap());
        for (n, k, v) in r_lah(5, 2).entries() {
            assert_eq!(lah.get(n, k) * Rat::from_integer(sign(n)), Rat::from_integer(v.clone()));
        }
    }

    #[test]
    fn lah_type_is_self_inverse() {
        for p in [HSParams::ints(0, 3, 1), HSParams::ints(0, 1, 2), HSParams::new(ratio(1, 2), ratio(1, 3), rat(2))] {
            let l = hs_lah_matrix(&hs_pair(8, &p).unwrap());
            assert!(l.matmul(&l).unwrap().is_identity(), "{}", p.describe());
        }
    }

    #[test]
    fn bell_routes() {
        assert_eq!(hs_bell(3, &HSParams::ints(0, 1, 2)).unwrap(), rat(37));
        assert_eq!(hs_bell_explicit(3, &HSParams::ints(0, 1, 2)).unwrap(), rat(37));
        assert_eq!(hs_bell(4, &HSParams::ints(0, 2, 2)).unwrap(), rat(257));
        assert_eq!(hs_bell_explicit(4, &HSParams::ints(0, 2, 2)).unwrap(), rat(257));
        assert_eq!(hs_bell(0, &HSParams::ints(3, 2, 1)).unwrap(), rat(1));
        let sets = [
            HSParams::ints(0, 1, 2),
            HSParams::ints(1, 2, 3),
            HSParams::new(ratio(1, 2), ratio(1, 3), rat(2)),
            HSParams::new(ratio(-2, 3), rat(1), ratio(5, 2)),
        ];
        for p in &sets {
            for n in 0..=10 {
                assert_eq!(hs_bell_explicit(n, p).unwrap(), hs_bell(n, p).unwrap(), "{} n={n}", p.describe());
            }
        }
    }

    #[test]
    fn cakic_numbers() {
        assert!(cakic(6, &rat(1)).unwrap().is_identity());
        let c = cakic(6, &rat(2)).unwrap();
        for n in 0..=6 {
            assert_eq!(c.get(n, n), rat(1));
            assert_eq!(cakic_bell(n, &rat(2)).unwrap(), cakic_bell_explicit(n, &rat(2)).unwrap());
        }
        // (x|2)_2 = x(x-2) = (x)_2 - (x)_1
        assert_eq!(c.row(2), &[rat(0), rat(-1), rat(1)]);
    }

    #[test]
    fn specialization_report() {
        let report = verify_specializations(6).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.checks.len(), 9);
        let r_stirling1_check = &report.checks[3];
        assert_eq!(r_stirling1_check.observed, Some(SignConvention::RowMinusColumn));
        assert!(!r_stirling1_check.mismatches.is_empty());
        let vacuous = verify_specializations(0).unwrap();
        assert!(vacuous.passed());
        assert!(vacuous.checks.iter().all(|c| c.mismatches.is_empty()));
        let l22 = &verify_specializations(4).unwrap().checks[8];
        assert!(l22.as_displayed());
        assert_eq!(l22.entries, 15);
    }

    fn rational_params() -> impl Strategy<Value = HSParams> {
        (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
            .prop_map(|(a, ad, b, bd, g, gd)| HSParams::new(ratio(a, ad), ratio(b, bd), ratio(g, gd)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn inverse_relation(p in rational_params(), g in prop::collection::vec((-9i64..=9, 1i64..=4), 10)) {
            let pair = hs_pair(9, &p).unwrap();
            let g: Vec<Rat> = g.into_iter().map(|(n, d)| ratio(n, d)).collect();
            prop_assert!(verify_hs_inverse(&pair, &g));
        }
    }
}
