use crate::scalar::Real;

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
pub fn golden_section_minimize<T: Real, F: Fn(T) -> T>(f: F, mut lo: T, mut hi: T, tol: T) -> T {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..500 {
        if (hi - lo).abs() <= tol {
            break;
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    (lo + hi) / T::lit(2.0)
}
