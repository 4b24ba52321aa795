//! Published reference tables and worked values, regenerated and compared entry by entry.

use std::fmt;

use crate::exactmath::{int, rat, Poly};
use crate::rnumbers::{r_bell, r_bell_explicit, r_dowling, r_dowling_explicit, r_lah, r_stirling2, r_whitney_lah, r_whitney_second, RParams};
use crate::triangle::Triangle;
use crate::whitney::{bell_via_dowling, dowling, dowling_explicit, whitney_lah, whitney_second, WhitneyParams};
use crate::{Int, Result};

/// Whitney-Lah rows 0..=3 as polynomials in `alpha`, coefficients from the constant term up.
pub const WHITNEY_LAH_SYMBOLIC: &[&[&[i64]]] = &[
    &[&[1]],
    &[&[-2], &[-1]],
    &[&[4, 2], &[4, 2], &[1]],
    &[&[-8, -12, -4], &[-12, -18, -6], &[-6, -6], &[-1]],
];

/// `(D_n(3), W_3(n, k))`.
pub const WHITNEY_3: &[(i64, &[i64])] = &[(1, &[1]), (2, &[1, 1]), (7, &[1, 5, 1]), (35, &[1, 21, 12, 1])];

/// r-Lah numbers at `r = 2`.
pub const R_LAH_2: &[&[i64]] = &[
    &[1],
    &[4, 1],
    &[20, 10, 1],
    &[120, 90, 18, 1],
    &[840, 840, 252, 28, 1],
    &[6720, 8400, 3360, 560, 40, 1],
];

/// `(B_{n,2}, {n,k}_2)`.
pub const R_STIRLING_2: &[(i64, &[i64])] = &[
    (1, &[1]),
    (3, &[2, 1]),
    (10, &[4, 5, 1]),
    (37, &[8, 19, 9, 1]),
    (151, &[16, 65, 55, 14, 1]),
    (674, &[32, 211, 285, 125, 20, 1]),
];

/// `(D_{2,2}(n), W_{2,2}(n, k))`.
pub const R_WHITNEY_2_2: &[(i64, &[i64])] =
    &[(1, &[1]), (3, &[2, 1]), (11, &[4, 6, 1]), (49, &[8, 28, 12, 1]), (257, &[16, 120, 100, 20, 1])];

/// `(L_{2,2}(n, k), row sum)`.
pub const R_WHITNEY_LAH_2_2: &[(&[i64], i64)] = &[
    (&[1], 1),
    (&[4, 1], 5),
    (&[24, 12, 1], 37),
    (&[192, 144, 24, 1], 361),
    (&[1920, 1920, 480, 40, 1], 4361),
];

/// One disagreement between a published value and a regenerated one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMismatch {
    pub what: String,
    pub published: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheck {
    pub name: &'static str,
    pub entries: usize,
    pub mismatches: Vec<TableMismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotCheck {
    pub name: &'static str,
    pub published: Int,
    pub computed: Int,
}

impl SpotCheck {
    pub fn ok(&self) -> bool {
        self.published == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TablesReport {
    pub tables: Vec<TableCheck>,
    pub spot_checks: Vec<SpotCheck>,
}

impl TablesReport {
    pub fn passed(&self) -> bool {
        self.tables.iter().all(|t| t.mismatches.is_empty()) && self.spot_checks.iter().all(SpotCheck::ok)
    }

    pub fn mismatch_count(&self) -> usize {
        self.tables.iter().map(|t| t.mismatches.len()).sum::<usize>()
            + self.spot_checks.iter().filter(|s| !s.ok()).count()
    }
}

impl fmt::Display for TablesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tables {
            let status = if t.mismatches.is_empty() { "ok" } else { "MISMATCH" };
            writeln!(f, "{:<44} {:>3} entries  {status}", t.name, t.entries)?;
            for m in &t.mismatches {
                writeln!(f, "    {}: published {}, computed {}", m.what, m.published, m.computed)?;
            }
        }
        for s in &self.spot_checks {
            let status = if s.ok() { "ok" } else { "MISMATCH" };
            writeln!(f, "{:<44} {:>8} = {:<8} {status}", s.name, s.computed, s.published)?;
        }
        let table_mismatches: usize = self.tables.iter().map(|t| t.mismatches.len()).sum();
        let passed = self.spot_checks.iter().filter(|s| s.ok()).count();
        write!(f, "{table_mismatches} table mismatches, {passed}/{} spot checks pass", self.spot_checks.len())
    }
}

struct Tally {
    name: &'static str,
    entries: usize,
    mismatches: Vec<TableMismatch>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, entries: 0, mismatches: Vec::new() }
    }

    fn compare(&mut self, what: impl Into<String>, published: impl fmt::Display, computed: impl fmt::Display) {
        self.entries += 1;
        let (p, c) = (published.to_string(), computed.to_string());
        if p != c {
            self.mismatches.push(TableMismatch { what: what.into(), published: p, computed: c });
        }
    }

    fn rows(&mut self, label: &str, published: &[&[i64]], computed: &Triangle<Int>) {
        for (n, row) in published.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                self.compare(format!("{label}({n},{k})"), v, computed.get(n, k));
            }
        }
    }

    fn finish(self) -> TableCheck {
        TableCheck { name: self.name, entries: self.entries, mismatches: self.mismatches }
    }
}

/// Evaluates the symbolic rows at `alpha = 1..=4` and interpolates back to check the polynomials themselves.
fn whitney_lah_symbolic() -> TableCheck {
    let mut t = Tally::new("Whitney-Lah, symbolic alpha");
    let points: Vec<i64> = (1..=4).collect();
    let tris: Vec<Triangle<Int>> = points
        .iter()
        .map(|&a| whitney_lah(3, WhitneyParams::new(a).expect("positive")))
        .collect();
    for (n, row) in WHITNEY_LAH_SYMBOLIC.iter().enumerate() {
        for (k, coeffs) in row.iter().enumerate() {
            let published = Poly::from_ints(coeffs);
            for (a, tri) in points.iter().zip(&tris) {
                t.compare(format!("L({n},{k}) at alpha={a}"), published.eval(&rat(*a)), tri.get(n, k));
            }
            let samples: Vec<_> = points.iter().zip(&tris).map(|(a, tri)| (rat(*a), tri.get(n, k).into())).collect();
            let interpolated = Poly::interpolate(&samples);
            t.compare(format!("L({n},{k}) polynomial"), &published, &interpolated);
        }
    }
    t.finish()
}

fn whitney_3() -> TableCheck {
    let mut t = Tally::new("Whitney second kind and Dowling, alpha=3");
    let p = WhitneyParams::new(3).expect("positive");
    let w = whitney_second(3, p);
    for (n, (d, row)) in WHITNEY_3.iter().enumerate() {
        t.compare(format!("D_{n}(3)"), d, dowling(n, p));
        for (k, v) in row.iter().enumerate() {
            t.compare(format!("W_3({n},{k})"), v, w.get(n, k));
        }
    }
    t.finish()
}

fn r_lah_2() -> TableCheck {
    let mut t = Tally::new("r-Lah, r=2");
    t.rows("L_2", R_LAH_2, &r_lah(5, 2));
    t.finish()
}

fn r_stirling_2() -> TableCheck {
    let mut t = Tally::new("r-Stirling second kind and r-Bell, r=2");
    let s = r_stirling2(5, 2);
    for (n, (b, row)) in R_STIRLING_2.iter().enumerate() {
        t.compare(format!("B_{n},2"), b, r_bell(n, 2));
        for (k, v) in row.iter().enumerate() {
            t.compare(format!("S_2({n},{k})"), v, s.get(n, k));
        }
    }
    t.finish()
}

fn r_whitney_2_2() -> Result<TableCheck> {
    let mut t = Tally::new("r-Whitney second kind and r-Dowling, m=r=2");
    let p = RParams::new(2, 2)?;
    let w = r_whitney_second(4, p)?;
    for (n, (d, row)) in R_WHITNEY_2_2.iter().enumerate() {
        t.compare(format!("D_2,2({n})"), d, r_dowling(n, p)?);
        for (k, v) in row.iter().enumerate() {
            t.compare(format!("W_2,2({n},{k})"), v, w.get(n, k));
        }
    }
    Ok(t.finish())
}

fn r_whitney_lah_2_2() -> Result<TableCheck> {
    let mut t = Tally::new("r-Whitney-Lah, m=r=2");
    let l = r_whitney_lah(4, RParams::new(2, 2)?);
    for (n, (row, sum)) in R_WHITNEY_LAH_2_2.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            t.compare(format!("L_2,2({n},{k})"), v, l.get(n, k));
        }
        t.compare(format!("row sum {n}"), sum, l.row_sum(n));
    }
    Ok(t.finish())
}

/// The four worked numeric verifications, each through its explicit formula.
pub fn spot_checks() -> Result<Vec<SpotCheck>> {
    let p = WhitneyParams::new(3)?;
    Ok(vec![
        SpotCheck { name: "D_3(3) by the Whitney-Lah formula", published: int(35), computed: dowling_explicit(3, p) },
        SpotCheck { name: "B_4 by the Dowling formula at alpha=1", published: int(15), computed: bell_via_dowling(3) },
        SpotCheck { name: "B_3,2 by the r-Lah formula", published: int(37), computed: r_bell_explicit(3, 2) },
        SpotCheck {
            name: "D_2,2(4) by the r-Whitney-Lah formula",
            published: int(257),
            computed: r_dowling_explicit(4, RParams::new(2, 2)?)?,
        },
    ])
}

pub fn reproduce() -> Result<TablesReport> {
    Ok(TablesReport {
        tables: vec![whitney_lah_symbolic(), whitney_3(), r_lah_2(), r_stirling_2(), r_whitney_2_2()?, r_whitney_lah_2_2()?],
        spot_checks: spot_checks()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::bell;
    use crate::rnumbers::r_whitney_lah_explicit;

    #[test]
    fn everything_matches() {
        let report = reproduce().unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.spot_checks.len(), 4);
        assert!(report.to_string().ends_with("0 table mismatches, 4/4 spot checks pass"));
    }

    #[test]
    fn symbolic_row_three_at_alpha_three() {
        let row: Vec<_> = WHITNEY_LAH_SYMBOLIC[3].iter().map(|c| Poly::from_ints(c).eval(&rat(3))).collect();
        assert_eq!(row, [rat(-80), rat(-120), rat(-24), rat(-1)]);
    }

    #[test]
    fn column_zero_of_r_stirling_is_powers_of_two() {
        for (n, (_, row)) in R_STIRLING_2.iter().enumerate() {
            assert_eq!(row[0], 1 << n);
        }
    }

    #[test]
    fn alternate_routes() {
        let l = r_whitney_lah_explicit(4, RParams::new(2, 2).unwrap()).unwrap();
        for (n, (row, _)) in R_WHITNEY_LAH_2_2.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(l.get(n, k), int(*v));
            }
        }
        for (n, (b, _)) in R_STIRLING_2.iter().enumerate() {
            assert_eq!(r_bell_explicit(n, 2), int(*b));
        }
        assert_eq!(bell(4), int(15));
    }

    #[test]
    fn a_wrong_value_is_reported() {
        let mut t = Tally::new("probe");
        t.compare("x", 1, 2);
        assert_eq!(t.finish().mismatches.len(), 1);
    }
}
