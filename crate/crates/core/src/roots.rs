//! Bracketing one-dimensional search: bisection for roots and golden-section
//! for minima. Both are deterministic and need no derivatives.

/// Refine a sign-change bracket `[lo, hi]` of `f` by bisection.
///
/// Halving stops once the bracket is no wider than `xtol` or the midpoint
/// can no longer be represented strictly between the endpoints. Returns the
/// endpoint of the final bracket with the smaller `|f|`, or `None` when
/// `f(lo)` and `f(hi)` share a sign.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(lo);
    }
    if f_hi == 0.0 {
        return Some(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() || f_lo.signum() == f_hi.signum() {
        return None;
    }

    while hi - lo > xtol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    Some(if f_lo.abs() <= f_hi.abs() { lo } else { hi })
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Minimum of a unimodal `f` on `[lo, hi]` by golden-section search.
///
/// Returns `(x, f(x))` once the bracket is narrower than `xtol`.
pub fn golden_section_min<F>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    while hi - lo > xtol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }

    let x = 0.5 * (lo + hi);
    let fx = f(x);
    // the midpoint is not guaranteed to beat the interior probes
    [(x1, f1), (x2, f2), (x, fx)]
        .into_iter()
        .fold((x, fx), |best, cand| if cand.1 < best.1 { cand } else { best })
}
