//! Name-driven construction of triangles and row sums, with parameter checking.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;

use crate::classic::{bell, lah_signed_triangle, lah_signless_triangle, stirling1_triangle, stirling2_triangle};
use crate::error::{Error, Result};
use crate::exactmath::{format_rat, rat_to_int};
use crate::rnumbers::{r_bell, r_dowling, r_lah, r_stirling1, r_stirling2, r_whitney_first, r_whitney_lah, r_whitney_second, RParams};
use crate::triangle::{CoeffMatrix, Family, Params};
use crate::unified::{cakic, cakic_bell, hs_bell, hs_lah_matrix, hs_pair, HSParams};
use crate::whitney::{dowling, whitney_first, whitney_lah, whitney_second, WhitneyParams};
use crate::Rat;

/// Parameter names in the order they are reported.
pub const PARAM_NAMES: [&str; 5] = ["alpha", "beta", "gamma", "m", "r"];

fn value<'a>(params: &'a Params, name: &str) -> &'a Option<Rat> {
    match name {
        "alpha" => &params.alpha,
        "beta" => &params.beta,
        "gamma" => &params.gamma,
        "m" => &params.m,
        "r" => &params.r,
        _ => unreachable!("unknown parameter name {name}"),
    }
}

/// Rejects parameters outside `allowed` and requires every name in `allowed`.
pub fn check_params(what: &str, params: &Params, allowed: &[&str]) -> Result<()> {
    for name in PARAM_NAMES {
        let set = value(params, name).is_some();
        let wanted = allowed.contains(&name);
        if set && !wanted {
            return Err(Error::InvalidParameter(format!("{what} does not take --{name}")));
        }
        if !set && wanted {
            return Err(Error::InvalidParameter(format!("{what} requires --{name}")));
        }
    }
    Ok(())
}

pub fn rat_param(params: &Params, name: &str) -> Result<Rat> {
    value(params, name)
        .clone()
        .ok_or_else(|| Error::InvalidParameter(format!("missing --{name}")))
}

pub fn int_param(params: &Params, name: &str) -> Result<i64> {
    let v = rat_param(params, name)?;
    rat_to_int(&v)
        .and_then(|i| i.to_i64())
        .ok_or_else(|| Error::InvalidParameter(format!("--{name} must be an integer, got {}", format_rat(&v))))
}

pub fn usize_param(params: &Params, name: &str) -> Result<usize> {
    let v = int_param(params, name)?;
    usize::try_from(v).map_err(|_| Error::InvalidParameter(format!("--{name} must be >= 0, got {v}")))
}

pub fn whitney_params(params: &Params) -> Result<WhitneyParams> {
    WhitneyParams::new(int_param(params, "alpha")?)
}

pub fn r_whitney_params(params: &Params) -> Result<RParams> {
    RParams::new(int_param(params, "m")?, int_param(params, "r")?)
}

pub fn hs_params(params: &Params) -> Result<HSParams> {
    Ok(HSParams::new(rat_param(params, "alpha")?, rat_param(params, "beta")?, rat_param(params, "gamma")?))
}

/// Parameters a triangle family takes.
pub fn family_params(family: Family) -> &'static [&'static str] {
    use Family::*;
    match family {
        Stirling1 | Stirling2 | Lah | LahSignless | Connection => &[],
        Whitney1 | Whitney2 | WhitneyLah | Cakic => &["alpha"],
        RStirling1 | RStirling2 | RLah => &["r"],
        RWhitney1 | RWhitney2 | RWhitneyLah => &["m", "r"],
        HsFirst | HsSecond | HsLah => &["alpha", "beta", "gamma"],
    }
}

/// Builds rows `0..=nmax` of a family. Integer families come back with unit denominators.
pub fn build_triangle(family: Family, params: &Params, nmax: usize) -> Result<CoeffMatrix> {
    use Family::*;
    check_params(family.name(), params, family_params(family))?;
    let tri = match family {
        Stirling1 => stirling1_triangle(nmax).to_rat(),
        Stirling2 => stirling2_triangle(nmax).to_rat(),
        Lah => lah_signed_triangle(nmax).to_rat(),
        LahSignless => lah_signless_triangle(nmax).to_rat(),
        Whitney1 => whitney_first(nmax, whitney_params(params)?).to_rat(),
        Whitney2 => whitney_second(nmax, whitney_params(params)?).to_rat(),
        WhitneyLah => whitney_lah(nmax, whitney_params(params)?).to_rat(),
        RStirling1 => r_stirling1(nmax, usize_param(params, "r")?).to_rat(),
        RStirling2 => r_stirling2(nmax, usize_param(params, "r")?).to_rat(),
        RLah => r_lah(nmax, usize_param(params, "r")?).to_rat(),
        RWhitney1 => r_whitney_first(nmax, r_whitney_params(params)?)?.to_rat(),
        RWhitney2 => r_whitney_second(nmax, r_whitney_params(params)?)?.to_rat(),
        RWhitneyLah => r_whitney_lah(nmax, r_whitney_params(params)?).to_rat(),
        HsFirst => hs_pair(nmax, &hs_params(params)?)?.s1,
        HsSecond => hs_pair(nmax, &hs_params(params)?)?.s2,
        HsLah => hs_lah_matrix(&hs_pair(nmax, &hs_params(params)?)?),
        Cakic => cakic(nmax, &rat_param(params, "alpha")?)?,
        Connection => {
            return Err(Error::InvalidParameter(
                "connection needs two explicit bases and is only available from the library".into(),
            ))
        }
    };
    Ok(tri.retag(family, params.clone()))
}

/// Bell-type numbers available through `sum`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumFamily {
    Bell,
    Dowling,
    RBell,
    RDowling,
    HsBell,
    CakicBell,
}

impl SumFamily {
    pub const ALL: [SumFamily; 6] = [
        SumFamily::Bell,
        SumFamily::Dowling,
        SumFamily::RBell,
        SumFamily::RDowling,
        SumFamily::HsBell,
        SumFamily::CakicBell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumFamily::Bell => "bell",
            SumFamily::Dowling => "dowling",
            SumFamily::RBell => "r-bell",
            SumFamily::RDowling => "r-dowling",
            SumFamily::HsBell => "hs-bell",
            SumFamily::CakicBell => "cakic-bell",
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            SumFamily::Bell => &[],
            SumFamily::Dowling | SumFamily::CakicBell => &["alpha"],
            SumFamily::RBell => &["r"],
            SumFamily::RDowling => &["m", "r"],
            SumFamily::HsBell => &["alpha", "beta", "gamma"],
        }
    }
}

impl fmt::Display for SumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SumFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn compute_sum(family: SumFamily, params: &Params, n: usize) -> Result<Rat> {
    check_params(family.name(), params, family.params())?;
    let v = match family {
        SumFamily::Bell => Rat::from_integer(bell(n)),
        SumFamily::Dowling => Rat::from_integer(dowling(n, whitney_params(params)?)),
        SumFamily::RBell => Rat::from_integer(r_bell(n, usize_param(params, "r")?)),
        SumFamily::RDowling => Rat::from_integer(r_dowling(n, r_whitney_params(params)?)?),
        SumFamily::HsBell => hs_bell(n, &hs_params(params)?)?,
        SumFamily::CakicBell => cakic_bell(n, &rat_param(params, "alpha")?)?,
    };
    Ok(v)
}

/// A Bell-type name, or any triangle family for its row sum.
pub fn sum_by_name(name: &str, params: &Params, n: usize) -> Result<Rat> {
    if let Ok(family) = name.parse::<SumFamily>() {
        return compute_sum(family, params, n);
    }
    let family: Family = name.parse()?;
    Ok(build_triangle(family, params, n)?.row_sum(n))
}
