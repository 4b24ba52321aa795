//! Lower-triangular number tables tagged with their family and parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::format_rat;
use crate::{Int, Rat};

macro_rules! families {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Every number triangle the crate knows how to build.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Family {
            $($variant,)*
        }

        impl Family {
            pub const ALL: &'static [Family] = &[$(Family::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Family::$variant => $name,)*
                }
            }
        }

        impl FromStr for Family {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(Family::$variant),)*
                    other => Err(Error::UnknownFamily(other.to_string())),
                }
            }
        }
    };
}

families! {
    Stirling1 => "stirling1",
    Stirling2 => "stirling2",
    Lah => "lah",
    LahSignless => "lah-signless",
    Whitney1 => "whitney1",
    Whitney2 => "whitney2",
    WhitneyLah => "whitney-lah",
    RStirling1 => "r-stirling1",
    RStirling2 => "r-stirling2",
    RLah => "r-lah",
    RWhitney1 => "r-whitney1",
    RWhitney2 => "r-whitney2",
    RWhitneyLah => "r-whitney-lah",
    HsFirst => "hs1",
    HsSecond => "hs2",
    HsLah => "hs-lah",
    Cakic => "cakic",
    Connection => "connection",
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameter record. Unused parameters stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub m: Option<Rat>,
    pub r: Option<Rat>,
    pub alpha: Option<Rat>,
    pub beta: Option<Rat>,
    pub gamma: Option<Rat>,
}

impl Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_m(mut self, v: Rat) -> Self {
        self.m = Some(v);
        self
    }

    pub fn with_r(mut self, v: Rat) -> Self {
        self.r = Some(v);
        self
    }

    pub fn with_alpha(mut self, v: Rat) -> Self {
        self.alpha = Some(v);
        self
    }

    pub fn with_beta(mut self, v: Rat) -> Self {
        self.beta = Some(v);
        self
    }

    pub fn with_gamma(mut self, v: Rat) -> Self {
        self.gamma = Some(v);
        self
    }

    /// Set parameters as decimal strings, sorted by name.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("m", &self.m),
            ("r", &self.r),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), format_rat(v))))
        .collect()
    }
}

/// Values indexed `(n, k)` with `0 <= k <= n <= nmax`; anything outside reads as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle<T> {
    family: Family,
    params: Params,
    rows: Vec<Vec<T>>,
}

/// Exact rational lower-triangular matrix, the output of connection-coefficient solves.
pub type CoeffMatrix = Triangle<Rat>;

impl<T> Triangle<T> {
    /// Row `n` must have exactly `n + 1` entries.
    pub fn from_rows(family: Family, params: Params, rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidParameter("triangle needs at least row 0".into()));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::SizeMismatch { left: row.len(), right: n + 1 });
            }
        }
        Ok(Triangle { family, params, rows })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    pub fn retag(mut self, family: Family, params: Params) -> Self {
        self.family = family;
        self.params = params;
        self
    }

    pub fn map<U>(&self, mut f: impl FnMut(usize, usize, &T) -> U) -> Triangle<U> {
        Triangle {
            family: self.family,
            params: self.params.clone(),
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(n, row)| row.iter().enumerate().map(|(k, v)| f(n, k, v)).collect())
                .collect(),
        }
    }

    /// `(n, k, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n, k, v)))
    }
}

impl<T: Clone + Zero> Triangle<T> {
    pub fn get(&self, n: usize, k: usize) -> T {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Same as [`Triangle::get`] but accepts a signed column, zero for `k < 0`.
    pub fn get_signed(&self, n: usize, k: i64) -> T {
        if k < 0 {
            T::zero()
        } else {
            self.get(n, k as usize)
        }
    }

    pub fn row_sum(&self, n: usize) -> T {
        self.rows[n].iter().cloned().fold(T::zero(), |a, b| a + b)
    }

    /// Leading `nmax + 1` rows.
    pub fn truncated(&self, nmax: usize) -> Self {
        Triangle {
            family: self.family,
            params: self.params.clone(),
            rows: self.rows[..=nmax.min(self.nmax())].to_vec(),
        }
    }
}

impl<T> Triangle<T>
where
    T: Clone + Zero + One + PartialEq + std::ops::Mul<Output = T>,
{
    pub fn identity(nmax: usize) -> Self {
        let rows = (0..=nmax)
            .map(|n| (0..=n).map(|k| if k == n { T::one() } else { T::zero() }).collect())
            .collect();
        Triangle { family: Family::Connection, params: Params::none(), rows }
    }

    /// Matrix product on the triangular range: `(AB)(n,k) = sum_{j=k..n} A(n,j) B(j,k)`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.nmax() != other.nmax() {
            return Err(Error::SizeMismatch { left: self.nmax(), right: other.nmax() });
        }
        let rows = (0..=self.nmax())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        (k..=n).fold(T::zero(), |acc, j| {
                            acc + self.rows[n][j].clone() * other.rows[j][k].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Triangle { family: Family::Connection, params: Params::none(), rows })
    }

    pub fn is_identity(&self) -> bool {
        self.entries().all(|(n, k, v)| {
            if n == k {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    }

    /// `f_n = sum_k T(n,k) g_k` over the leading `g.len()` rows.
    pub fn apply(&self, g: &[T]) -> Vec<T> {
        (0..g.len().min(self.rows.len()))
            .map(|n| {
                (0..=n).fold(T::zero(), |acc, k| acc + self.rows[n][k].clone() * g[k].clone())
            })
            .collect()
    }
}

impl Triangle<Int> {
    pub fn to_rat(&self) -> CoeffMatrix {
        self.map(|_, _, v| Rat::from_integer(v.clone()))
    }
}

impl CoeffMatrix {
    /// Fails on the first entry with a nontrivial denominator.
    pub fn to_int(&self) -> Result<Triangle<Int>> {
        if let Some((n, k, v)) = self.entries().find(|(_, _, v)| !v.is_integer()) {
            return Err(Error::NotIntegral { n, k, value: v.clone() });
        }
        Ok(self.map(|_, _, v| v.numer().clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.entries().all(|(_, _, v)| v.is_integer())
    }
}
