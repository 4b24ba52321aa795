//! Registry of named identities, each checked by comparing two independent routes.

use std::collections::BTreeMap;
use std::fmt::Display;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::{check_params, hs_params, r_whitney_params, usize_param, whitney_params, PARAM_NAMES};
use crate::classic::{
    bell, lah_egf_check, lah_explicit, lah_horizontal, lah_signed_triangle, lah_signless_triangle, lah_vertical_triangle,
    partial_bell, qi_bell, stirling1_triangle, stirling2_from_lah, stirling2_triangle, verify_stirling_inverse,
};
use crate::error::{Error, Result};
use crate::exactmath::{parse_rat, ratio};
use crate::oracle::{self, PartitionSpec};
use crate::rnumbers::{
    r_bell, r_bell_explicit, r_dowling, r_dowling_explicit, r_lah, r_lah_from_stirlings_triangle, r_stirling1,
    r_stirling2, r_whitney_first, r_whitney_lah, r_whitney_lah_explicit, r_whitney_lah_from_whitney,
    r_whitney_lah_horizontal_triangle, r_whitney_lah_vertical_triangle, r_whitney_second, r_whitney_second_recurrence,
    verify_log_concavity, verify_r_inverse, weighted_stirling_egf_check,
};
use crate::triangle::{Params, Triangle};
use crate::unified::{cakic_bell, cakic_bell_explicit, hs_bell, hs_bell_explicit, hs_lah_matrix, hs_pair, verify_hs_inverse, verify_specializations};
use crate::whitney::{
    bell_via_dowling, dowling, dowling_explicit, verify_whitney_lah_inverse, whitney_first, whitney_lah,
    whitney_lah_from_definition, whitney_lah_from_whitney_triangle, whitney_lah_horizontal_triangle,
    whitney_lah_vertical_triangle, whitney_second, whitney_second_benoumhani, whitney_second_from_definition,
};
use crate::{Int, Rat};

/// One disagreement. `k` is absent for checks indexed by `n` alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    pub k: Option<usize>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub nmax: usize,
    pub pass: bool,
    pub failures: Vec<Failure>,
}

/// Seeds for the random round-trip checks.
pub const SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

/// Collects failures while a check runs.
#[derive(Default)]
pub struct Checker {
    failures: Vec<Failure>,
}

impl Checker {
    pub fn value<T: PartialEq + Display>(&mut self, n: usize, k: Option<usize>, expected: &T, actual: &T) {
        if expected != actual {
            self.failures.push(Failure { n, k, expected: expected.to_string(), actual: actual.to_string() });
        }
    }

    pub fn flag(&mut self, n: usize, k: Option<usize>, ok: bool) {
        if !ok {
            self.failures.push(Failure { n, k, expected: "true".into(), actual: "false".into() });
        }
    }

    pub fn triangles<T: PartialEq + Display + Clone + Zero>(&mut self, expected: &Triangle<T>, actual: &Triangle<T>) {
        let nmax = expected.nmax().max(actual.nmax());
        for n in 0..=nmax {
            for k in 0..=n {
                self.value(n, Some(k), &expected.get(n, k), &actual.get(n, k));
            }
        }
    }

    pub fn is_identity<T: PartialEq + Display + Clone + Zero + One>(&mut self, product: &Triangle<T>) {
        for (n, k, v) in product.entries() {
            let want = if n == k { T::one() } else { T::zero() };
            self.value(n, Some(k), &want, v);
        }
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }
}

/// Resolved inputs handed to a check.
pub struct Context {
    pub nmax: usize,
    pub params: Params,
}

type Check = fn(&Context, &mut Checker) -> Result<()>;

pub struct IdentitySpec {
    pub name: &'static str,
    pub summary: &'static str,
    /// Parameters and their defaults.
    pub defaults: &'static [(&'static str, &'static str)],
    pub default_nmax: usize,
    check: Check,
    oracle: Option<Check>,
}

impl IdentitySpec {
    pub fn has_oracle(&self) -> bool {
        self.oracle.is_some()
    }
}

fn random_ints(seed: u64, len: usize) -> Vec<Int> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| Int::from(rng.gen_range(-1000i64..=1000))).collect()
}

fn random_rats(seed: u64, len: usize) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| ratio(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=9))).collect()
}

fn round_trips(ctx: &Context, c: &mut Checker, f: impl Fn(&[Int]) -> bool) {
    for seed in SEEDS {
        c.flag(seed as usize, None, f(&random_ints(seed, ctx.nmax + 1)));
    }
}

fn sequences<T: PartialEq + Display>(c: &mut Checker, nmax: usize, expected: impl Fn(usize) -> Result<T>, actual: impl Fn(usize) -> Result<T>) -> Result<()> {
    for n in 0..=nmax {
        c.value(n, None, &expected(n)?, &actual(n)?);
    }
    Ok(())
}

fn entrywise(c: &mut Checker, expected: &Triangle<Int>, actual: impl Fn(usize, usize) -> Int) {
    for (n, k, v) in expected.entries() {
        c.value(n, Some(k), v, &actual(n, k));
    }
}

// Oracle comparisons stop at the enumerators' size guard.
fn oracle_range(nmax: usize, r: usize) -> usize {
    nmax.min(oracle::SIZE_LIMIT.saturating_sub(r))
}

fn oracle_triangle(c: &mut Checker, tri: &Triangle<Int>, r: usize, ordered: bool) -> Result<()> {
    for (n, k, v) in tri.truncated(oracle_range(tri.nmax(), r)).entries() {
        let count = oracle::count_partitions(PartitionSpec::shifted(n, k, r, ordered))?;
        c.value(n, Some(k), &count, v);
    }
    Ok(())
}

fn oracle_sums(c: &mut Checker, nmax: usize, r: usize, sum: impl Fn(usize) -> Int) -> Result<()> {
    for n in 0..=oracle_range(nmax, r) {
        c.value(n, None, &oracle::count_all_partitions(n + r, r, false)?, &sum(n));
    }
    Ok(())
}

fn oracle_cycles(c: &mut Checker, tri: &Triangle<Int>, r: usize) -> Result<()> {
    for (n, k, v) in tri.entries().filter(|(n, _, _)| n + r <= 9) {
        c.value(n, Some(k), &oracle::count_permutations_by_cycles(n + r, k + r, r)?, v);
    }
    Ok(())
}

fn oracle_classic(ctx: &Context, c: &mut Checker) -> Result<()> {
    oracle_triangle(c, &stirling2_triangle(ctx.nmax), 0, false)?;
    oracle_triangle(c, &lah_signless_triangle(ctx.nmax), 0, true)?;
    oracle_sums(c, ctx.nmax, 0, bell)
}

fn oracle_r(ctx: &Context, c: &mut Checker) -> Result<()> {
    let r = usize_param(&ctx.params, "r")?;
    oracle_triangle(c, &r_stirling2(ctx.nmax, r), r, false)?;
    oracle_triangle(c, &r_lah(ctx.nmax, r), r, true)?;
    oracle_cycles(c, &r_stirling1(ctx.nmax, r), r)?;
    oracle_sums(c, ctx.nmax, r, |n| r_bell(n, r))
}

fn oracle_all(ctx: &Context, c: &mut Checker) -> Result<()> {
    oracle_classic(ctx, c)?;
    oracle_r(ctx, c)
}

macro_rules! registry {
    ($($name:literal, $summary:literal, [$(($p:literal, $d:literal)),*], $nmax:literal, $check:expr, $oracle:expr;)*) => {
        pub static REGISTRY: &[IdentitySpec] = &[
            $(IdentitySpec {
                name: $name,
                summary: $summary,
                defaults: &[$(($p, $d)),*],
                default_nmax: $nmax,
                check: $check,
                oracle: $oracle,
            },)*
        ];
    };
}

registry! {
    "LEF", "Lah recurrence against the closed form (-1)^n C(n-1,k-1) n!/k!", [], 30,
        |ctx, c| { entrywise(c, &lah_signed_triangle(ctx.nmax), lah_explicit); Ok(()) }, Some(oracle_classic);
    "verLah", "Lah vertical recurrence against the triangular recurrence", [], 20,
        |ctx, c| { c.triangles(&lah_signed_triangle(ctx.nmax), &lah_vertical_triangle(ctx.nmax)); Ok(()) }, Some(oracle_classic);
    "horiLah", "Lah horizontal recurrence (rising bracket) against the triangular recurrence", [], 20,
        |ctx, c| { entrywise(c, &lah_signed_triangle(ctx.nmax), lah_horizontal); Ok(()) }, Some(oracle_classic);
    "LGF", "EGF coefficients of (-t/(1+t))^k/k! against signed Lah numbers, k <= 5", [], 20,
        |ctx, c| { for k in 0..=5 { c.flag(ctx.nmax, Some(k), lah_egf_check(k, ctx.nmax)); } Ok(()) }, None;
    "ordlahstirling", "Lah numbers as signed products of Stirling numbers of both kinds", [], 15,
        |ctx, c| { entrywise(c, &lah_signed_triangle(ctx.nmax), stirling2_from_lah); Ok(()) }, Some(oracle_classic);
    "expBell", "Bell numbers through the alternating Lah-Stirling double sum", [], 25,
        |ctx, c| sequences(c, ctx.nmax, |n| Ok(bell(n)), |n| Ok(qi_bell(n))), Some(oracle_classic);
    "partial-bell", "Partial Bell polynomials at all-ones against Stirling numbers of the second kind", [], 12,
        |ctx, c| {
            let ones = vec![Int::one(); ctx.nmax + 1];
            for (n, k, v) in stirling2_triangle(ctx.nmax).entries() {
                c.value(n, Some(k), v, &partial_bell(n, k, &ones)?);
            }
            Ok(())
        }, Some(oracle_classic);
    "stirling-ortho", "Stirling numbers of both kinds are mutually inverse", [], 20,
        |ctx, c| { c.is_identity(&stirling1_triangle(ctx.nmax).matmul(&stirling2_triangle(ctx.nmax))?); Ok(()) }, None;
    "stirling-inverse", "Stirling inverse relation on random sequences", [], 12,
        |ctx, c| { round_trips(ctx, c, verify_stirling_inverse); Ok(()) }, None;
    "recur1", "Whitney numbers of the second kind: recurrence, defining relation and Benoumhani sum", [("alpha", "3")], 12,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            let w = whitney_second(ctx.nmax, p);
            c.triangles(&w, &whitney_second_from_definition(ctx.nmax, p));
            entrywise(c, &w, |n, k| whitney_second_benoumhani(n, k, p));
            Ok(())
        }, None;
    "in.w", "Whitney orthogonality and inverse relation", [("alpha", "3")], 12,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            let (w1, w2) = (whitney_first(ctx.nmax, p), whitney_second(ctx.nmax, p));
            c.is_identity(&w1.matmul(&w2)?);
            c.is_identity(&w2.matmul(&w1)?);
            round_trips(ctx, c, |g| w2.apply(&w1.apply(g)) == g);
            Ok(())
        }, None;
    "GLahdef", "Whitney-Lah recurrence against the defining change of basis", [("alpha", "3")], 12,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            c.triangles(&whitney_lah(ctx.nmax, p), &whitney_lah_from_definition(ctx.nmax, p));
            Ok(())
        }, None;
    "verGLah", "Whitney-Lah vertical recurrence against the triangular recurrence", [("alpha", "3")], 15,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            c.triangles(&whitney_lah(ctx.nmax, p), &whitney_lah_vertical_triangle(ctx.nmax, p));
            Ok(())
        }, None;
    "horiGLah", "Whitney-Lah horizontal recurrence against the triangular recurrence", [("alpha", "3")], 15,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            c.triangles(&whitney_lah(ctx.nmax, p), &whitney_lah_horizontal_triangle(ctx.nmax, p));
            Ok(())
        }, None;
    "wla1", "Whitney-Lah numbers as signed products of Whitney numbers", [("alpha", "3")], 15,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            c.triangles(&whitney_lah(ctx.nmax, p), &whitney_lah_from_whitney_triangle(ctx.nmax, p));
            Ok(())
        }, None;
    "ortho", "Whitney-Lah triangle is its own inverse", [("alpha", "3")], 12,
        |ctx, c| {
            let l = whitney_lah(ctx.nmax, whitney_params(&ctx.params)?);
            c.is_identity(&l.matmul(&l)?);
            Ok(())
        }, None;
    "inv-whitney-lah", "Whitney-Lah inverse relations on random sequences", [("alpha", "3")], 12,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            round_trips(ctx, c, |g| verify_whitney_lah_inverse(g, p));
            Ok(())
        }, None;
    "dow1", "Dowling numbers: row sums against the Whitney-Lah explicit formula", [("alpha", "3")], 12,
        |ctx, c| {
            let p = whitney_params(&ctx.params)?;
            sequences(c, ctx.nmax, |n| Ok(dowling(n, p)), |n| Ok(dowling_explicit(n, p)))
        }, None;
    "bell-alpha1", "Explicit Dowling formula at alpha = 1 against the Bell numbers B_(n+1)", [], 20,
        |ctx, c| sequences(c, ctx.nmax, |n| Ok(bell(n + 1)), |n| Ok(bell_via_dowling(n))), Some(oracle_classic);
    "r-stirling1", "r-Stirling numbers of the first kind count permutations with separated cycles", [("r", "2")], 6,
        |ctx, c| oracle_cycles(c, &r_stirling1(ctx.nmax, usize_param(&ctx.params, "r")?), usize_param(&ctx.params, "r")?), None;
    "weighted-egf", "EGF (e^t-1)^k e^(rt)/k! against r-Stirling numbers of the second kind, k <= 4", [("r", "2")], 12,
        |ctx, c| {
            let r = usize_param(&ctx.params, "r")?;
            for k in 0..=4 {
                c.flag(ctx.nmax, Some(k), weighted_stirling_egf_check(k, r, ctx.nmax));
            }
            Ok(())
        }, Some(oracle_r);
    "Lah1", "r-Lah numbers as products of r-Stirling numbers of both kinds", [("r", "2")], 10,
        |ctx, c| {
            let r = usize_param(&ctx.params, "r")?;
            c.triangles(&r_lah(ctx.nmax, r), &r_lah_from_stirlings_triangle(ctx.nmax, r));
            Ok(())
        }, Some(oracle_r);
    "Lah4", "r-Stirling inverse relation on random sequences", [("r", "2")], 12,
        |ctx, c| {
            let r = usize_param(&ctx.params, "r")?;
            round_trips(ctx, c, |a| verify_r_inverse(a, r));
            Ok(())
        }, Some(oracle_r);
    "expB", "r-Bell numbers: row sums against the r-Lah explicit formula", [("r", "2")], 12,
        |ctx, c| {
            let r = usize_param(&ctx.params, "r")?;
            sequences(c, ctx.nmax, |n| Ok(r_bell(n, r)), |n| Ok(r_bell_explicit(n, r)))
        }, Some(oracle_r);
    "r-whitney2", "r-Whitney numbers of the second kind: defining relation against the recurrence", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            c.triangles(&r_whitney_second(ctx.nmax, p)?, &r_whitney_second_recurrence(ctx.nmax, p));
            Ok(())
        }, None;
    "inv", "r-Whitney orthogonality and inverse relation", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            let (w1, w2) = (r_whitney_first(ctx.nmax, p)?, r_whitney_second(ctx.nmax, p)?);
            let signed = w1.map(|n, k, v| crate::exactmath::sign(n - k) * v);
            c.is_identity(&signed.matmul(&w2)?);
            c.is_identity(&w2.matmul(&signed)?);
            round_trips(ctx, c, |g| w2.apply(&signed.apply(g)) == g);
            Ok(())
        }, None;
    "rwhitneylah", "r-Whitney-Lah numbers as products of r-Whitney numbers", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            c.triangles(&r_whitney_lah(ctx.nmax, p), &r_whitney_lah_from_whitney(ctx.nmax, p)?);
            Ok(())
        }, None;
    "triWLah", "r-Whitney-Lah triangular recurrence against the vertical and horizontal recurrences", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            let t = r_whitney_lah(ctx.nmax, p);
            c.triangles(&t, &r_whitney_lah_vertical_triangle(ctx.nmax, p));
            c.triangles(&t, &r_whitney_lah_horizontal_triangle(ctx.nmax, p)?);
            Ok(())
        }, None;
    "vert_recur", "r-Whitney-Lah vertical recurrence against the triangular recurrence", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            c.triangles(&r_whitney_lah(ctx.nmax, p), &r_whitney_lah_vertical_triangle(ctx.nmax, p));
            Ok(())
        }, None;
    "hori_recur", "r-Whitney-Lah horizontal recurrence against the triangular recurrence", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            c.triangles(&r_whitney_lah(ctx.nmax, p), &r_whitney_lah_horizontal_triangle(ctx.nmax, p)?);
            Ok(())
        }, None;
    "exprWLah", "r-Whitney-Lah closed form C(n,k)[2r|m]_n/[2r|m]_k against the recurrence", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            c.triangles(&r_whitney_lah(ctx.nmax, p), &r_whitney_lah_explicit(ctx.nmax, p)?);
            Ok(())
        }, None;
    "expl_rDow", "r-Dowling numbers: row sums against the r-Whitney-Lah explicit formula", [("m", "2"), ("r", "2")], 12,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            sequences(c, ctx.nmax, |n| r_dowling(n, p), |n| r_dowling_explicit(n, p))
        }, None;
    "log-concavity", "Rows of the r-Whitney-Lah triangle are strictly log-concave and unimodal", [("m", "2"), ("r", "2")], 20,
        |ctx, c| {
            let p = r_whitney_params(&ctx.params)?;
            for n in 0..=ctx.nmax {
                c.flag(n, None, verify_log_concavity(n, p));
            }
            Ok(())
        }, None;
    "hs-ortho", "Unified Stirling pair orthogonality", [("alpha", "1/2"), ("beta", "1/3"), ("gamma", "2")], 8,
        |ctx, c| {
            let pair = hs_pair(ctx.nmax, &hs_params(&ctx.params)?)?;
            c.is_identity(&pair.s1.matmul(&pair.s2)?);
            c.is_identity(&pair.s2.matmul(&pair.s1)?);
            Ok(())
        }, None;
    "invrel", "Unified pair inverse relation on random rational sequences", [("alpha", "1/2"), ("beta", "1/3"), ("gamma", "2")], 9,
        |ctx, c| {
            let pair = hs_pair(ctx.nmax, &hs_params(&ctx.params)?)?;
            for seed in SEEDS {
                c.flag(seed as usize, None, verify_hs_inverse(&pair, &random_rats(seed, ctx.nmax + 1)));
            }
            Ok(())
        }, None;
    "genlah-ortho", "Unified Lah-type triangle is its own inverse", [("alpha", "0"), ("beta", "3"), ("gamma", "1")], 8,
        |ctx, c| {
            let l = hs_lah_matrix(&hs_pair(ctx.nmax, &hs_params(&ctx.params)?)?);
            c.is_identity(&l.matmul(&l)?);
            Ok(())
        }, None;
    "ugexp", "Generalized Bell numbers: row sums against the unified explicit formula", [("alpha", "1/2"), ("beta", "1/3"), ("gamma", "2")], 10,
        |ctx, c| {
            let p = hs_params(&ctx.params)?;
            sequences(c, ctx.nmax, |n| hs_bell(n, &p), |n| hs_bell_explicit(n, &p))
        }, None;
    "cakic", "Cakic row sums against the unified explicit formula", [("alpha", "2")], 6,
        |ctx, c| {
            let alpha = crate::catalog::rat_param(&ctx.params, "alpha")?;
            sequences(c, ctx.nmax, |n| cakic_bell(n, &alpha), |n| cakic_bell_explicit(n, &alpha))
        }, None;
    "specializations", "Unified pair against the Whitney, r-Stirling and r-Whitney families", [], 6,
        |ctx, c| {
            let report = verify_specializations(ctx.nmax)?;
            for check in report.checks.iter().filter(|ch| !ch.explained()) {
                for m in &check.mismatches {
                    c.failures.push(Failure { n: m.n, k: Some(m.k), expected: m.expected.clone(), actual: m.actual.clone() });
                }
            }
            for b in &report.bell {
                c.flag(ctx.nmax, None, b.holds);
            }
            for t in &report.tauber {
                c.flag(ctx.nmax, None, t.product_rule_holds && t.observed.is_some());
            }
            c.flag(ctx.nmax, None, report.cakic.literal_matches && report.cakic.negated_alpha_is_rising);
            Ok(())
        }, None;
    "oracle", "Brute-force partition and cycle counts against the partition-counting families", [("r", "2")], 9,
        oracle_all, None;
}

pub fn lookup(name: &str) -> Result<&'static IdentitySpec> {
    REGISTRY
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Fills unset parameters from the identity's defaults and rejects foreign ones.
pub fn resolve_params(spec: &IdentitySpec, given: &Params) -> Result<Params> {
    let mut params = given.clone();
    for (name, default) in spec.defaults {
        let slot = match *name {
            "alpha" => &mut params.alpha,
            "beta" => &mut params.beta,
            "gamma" => &mut params.gamma,
            "m" => &mut params.m,
            "r" => &mut params.r,
            _ => unreachable!(),
        };
        if slot.is_none() {
            *slot = Some(parse_rat(default)?);
        }
    }
    let names: Vec<&str> = spec.defaults.iter().map(|(n, _)| *n).collect();
    debug_assert!(names.iter().all(|n| PARAM_NAMES.contains(n)));
    check_params(&format!("identity {}", spec.name), &params, &names)?;
    Ok(params)
}

pub fn run(name: &str, given: &Params, nmax: Option<usize>, with_oracle: bool) -> Result<VerifyReport> {
    let spec = lookup(name)?;
    let params = resolve_params(spec, given)?;
    let ctx = Context { nmax: nmax.unwrap_or(spec.default_nmax), params };
    let oracle = match (with_oracle, spec.oracle) {
        (false, _) => None,
        (true, Some(o)) => Some(o),
        (true, None) => {
            return Err(Error::Usage(format!("identity {name} has no combinatorial oracle")));
        }
    };
    let mut checker = Checker::default();
    (spec.check)(&ctx, &mut checker)?;
    if let Some(o) = oracle {
        o(&ctx, &mut checker)?;
    }
    Ok(VerifyReport {
        identity: spec.name.to_string(),
        params: ctx.params.to_map(),
        nmax: ctx.nmax,
        pass: checker.failures.is_empty(),
        failures: checker.failures,
    })
}

/// Every identity at its default parameters.
pub fn run_all(nmax: Option<usize>, with_oracle: bool) -> Result<Vec<VerifyReport>> {
    REGISTRY
        .iter()
        .map(|s| run(s.name, &Params::none(), nmax, with_oracle && s.has_oracle()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn every_identity_passes_at_defaults() {
        for spec in REGISTRY {
            let nmax = spec.default_nmax.min(8);
            let report = run(spec.name, &Params::none(), Some(nmax), spec.has_oracle()).unwrap();
            assert!(report.pass, "{}: {:?}", spec.name, &report.failures[..report.failures.len().min(3)]);
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = REGISTRY.iter().map(|s| s.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), REGISTRY.len());
    }

    #[test]
    fn trivial_sizes_pass() {
        for spec in REGISTRY {
            assert!(run(spec.name, &Params::none(), Some(0), false).unwrap().pass, "{}", spec.name);
        }
    }

    #[test]
    fn parameters() {
        let report = run("dow1", &Params::none().with_alpha(rat(3)), Some(8), false).unwrap();
        assert!(report.pass);
        assert_eq!(report.params.get("alpha").map(String::as_str), Some("3"));
        assert!(run("ortho", &Params::none().with_r(rat(2)), Some(3), false).is_err());
        assert!(matches!(run("nope", &Params::none(), None, false), Err(Error::UnknownIdentity(_))));
        assert!(matches!(run("ortho", &Params::none(), None, true), Err(Error::Usage(_))));
        assert!(run("expB", &Params::none().with_r(rat(2)), Some(10), true).unwrap().pass);
    }

    #[test]
    fn failures_are_reported() {
        let mut c = Checker::default();
        let a = stirling2_triangle(3);
        let b = a.map(|n, k, v| if (n, k) == (3, 1) { v + Int::one() } else { v.clone() });
        c.triangles(&a, &b);
        assert_eq!(c.failures(), &[Failure { n: 3, k: Some(1), expected: "1".into(), actual: "2".into() }]);
    }

    #[test]
    fn report_serializes() {
        let report = run("ortho", &Params::none(), Some(0), false).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(json, r#"{"identity":"ortho","params":{"alpha":"3"},"nmax":0,"pass":true,"failures":[]}"#);
    }
}
