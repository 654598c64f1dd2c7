use crate::scalar::Real;

/// Bracketing bisection. `f(lo)` and `f(hi)` must differ in sign (or one may
/// be zero). Iterates until the bracket is narrower than `tol` or stops
/// shrinking in floating point.
pub fn bisect<T: Real, F: Fn(T) -> T>(f: F, mut lo: T, mut hi: T, tol: T) -> Option<T> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == T::zero() {
        return Some(lo);
    }
    if f_hi == T::zero() {
        return Some(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return None;
    }
    let two = T::lit(2.0);
    for _ in 0..400 {
        let mid = (lo + hi) / two;
        if (hi - lo).abs() <= tol || mid == lo || mid == hi {
            return Some(mid);
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return Some(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some((lo + hi) / two)
}

/// Uniform pre-scan of `[lo, hi]` with `points` samples; returns every
/// sub-interval on which `f` changes sign.
pub fn scan_sign_changes<T: Real, F: Fn(T) -> T>(f: F, lo: T, hi: T, points: usize) -> Vec<(T, T)> {
    let points = points.max(2);
    let step = (hi - lo) / T::from_count(points - 1);
    let mut brackets = Vec::new();
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for i in 1..points {
        let x = if i == points - 1 { hi } else { lo + step * T::from_count(i) };
        let fx = f(x);
        if f_prev == T::zero() || f_prev.signum() != fx.signum() {
            brackets.push((x_prev, x));
        }
        x_prev = x;
        f_prev = fx;
    }
    brackets
}

/// All roots found by pre-scanning then bisecting each bracket.
pub fn find_roots<T: Real, F: Fn(T) -> T>(f: F, lo: T, hi: T, points: usize, tol: T) -> Vec<T> {
    scan_sign_changes(&f, lo, hi, points)
        .into_iter()
        .filter_map(|(a, b)| bisect(&f, a, b, tol))
        .collect()
}
