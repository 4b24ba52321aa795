//! Cross-module properties over randomly drawn parameters.

use dowling::exactmath::{rat, ratio, sign};
use dowling::rnumbers::{r_whitney_lah, RParams};
use dowling::triangle::Params;
use dowling::unified::{hs_bell, hs_bell_explicit, hs_pair, verify_hs_orthogonality, HSParams};
use dowling::verify;
use dowling::whitney::WhitneyParams;
use proptest::prelude::*;

fn passes(name: &str, params: Params, nmax: usize) -> bool {
    verify::run(name, &params, Some(nmax), false).unwrap().pass
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn whitney_lah_routes(alpha in 1i64..=7, nmax in 0usize..=10) {
        let p = Params::none().with_alpha(rat(alpha));
        for id in ["GLahdef", "verGLah", "horiGLah", "wla1", "ortho", "dow1", "recur1"] {
            prop_assert!(passes(id, p.clone(), nmax), "{id} alpha={alpha}");
        }
        prop_assert!(WhitneyParams::new(alpha).is_ok());
    }

    #[test]
    fn r_whitney_lah_routes(m in 1i64..=4, r in 0i64..=4, nmax in 0usize..=9) {
        let p = Params::none().with_m(rat(m)).with_r(rat(r));
        for id in ["rwhitneylah", "triWLah", "exprWLah", "expl_rDow", "inv", "r-whitney2"] {
            prop_assert!(passes(id, p.clone(), nmax), "{id} m={m} r={r}");
        }
        // (-1)^n L_{m,r}(n,k) is an involution.
        let l = r_whitney_lah(nmax, RParams::new(m, r).unwrap()).map(|n, _, v| sign(n) * v);
        prop_assert!(l.matmul(&l).unwrap().is_identity());
    }

    #[test]
    fn unified_pair(a in (-5i64..=5, 1i64..=4), b in (-5i64..=5, 1i64..=4), g in (-5i64..=5, 1i64..=4), n in 0usize..=6) {
        let p = HSParams::new(ratio(a.0, a.1), ratio(b.0, b.1), ratio(g.0, g.1));
        prop_assert!(verify_hs_orthogonality(&hs_pair(n, &p).unwrap()));
        prop_assert_eq!(hs_bell(n, &p).unwrap(), hs_bell_explicit(n, &p).unwrap());
    }
}

#[test]
fn degenerate_steps_stay_graded() {
    // alpha = beta = 0: both bases are shifted monomials.
    let pair = hs_pair(6, &HSParams::ints(0, 0, 3)).unwrap();
    assert!(verify_hs_orthogonality(&pair));
    // (t)^n = sum_k C(n,k) 3^(n-k) (t-3)^k
    assert_eq!(pair.s1.get(4, 2), rat(54));
}
