//! The fixed battery of verifications run by `verify-paper`.

use bkcube_core::theorems::{Engine, Report};
use bkcube_core::{Degree, EstimateError, Exponent};

const ONE: Exponent = Exponent::Finite(1);
const INF: Exponent = Exponent::Stable;

/// Every verifier at the parameters the convergence arguments use, in a
/// fixed order.
pub fn battery(engine: &Engine) -> Result<Vec<Report>, EstimateError> {
    let mut out = Vec::new();
    for r in [ONE, Exponent::Finite(2), INF] {
        out.push(engine.verify_comparison(Degree::Finite(1), r)?);
    }
    for n in [1, 2] {
        for r in [ONE, INF] {
            out.push(engine.verify_excisive_comparison(n, r, engine.max_iters)?);
        }
    }
    for k in [1, 2] {
        for n in 1..=3 {
            out.push(engine.tower_vs_taylor(n, k, ONE)?);
        }
    }
    for r in [ONE, INF] {
        out.push(engine.verify_id_plus_one_preserved(3, r)?);
    }
    for r in [ONE, INF] {
        out.push(engine.completion_schedule(Degree::Finite(1), r, 5)?);
    }
    for r in [ONE, INF] {
        out.push(engine.verify_fibration_completion(4, r)?);
    }
    for r in [ONE, INF] {
        out.push(engine.taylor_interchange_report(4, 4, r)?);
    }
    Ok(out)
}
