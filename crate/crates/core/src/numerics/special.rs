use crate::scalar::Real;

/// `sin(x)/x`, with a series branch near zero.
pub fn sinc<T: Real>(x: T) -> T {
    if x.abs() < T::lit(1e-4) {
        let x2 = x * x;
        T::one() - x2 / T::lit(6.0) + x2 * x2 / T::lit(120.0)
    } else {
        x.sin() / x
    }
}

/// Normalized Hermite functions `u_0(x) ..= u_n_max(x)`, where
/// `u_n(x) = (2^n n! sqrt(pi))^(-1/2) exp(-x^2/2) H_n(x)`.
///
/// Uses the orthonormal three-term recurrence, which avoids overflow of
/// `H_n` and `n!` separately.
pub fn hermite_functions<T: Real>(n_max: usize, x: T) -> Vec<T> {
    let mut u = Vec::with_capacity(n_max + 1);
    let u0 = T::PI().powf(T::lit(-0.25)) * (-x * x / T::lit(2.0)).exp();
    u.push(u0);
    if n_max == 0 {
        return u;
    }
    u.push(T::lit(2.0).sqrt() * x * u0);
    for n in 1..n_max {
        let nf = T::from_count(n);
        let next = (T::lit(2.0) / (nf + T::one())).sqrt() * x * u[n]
            - (nf / (nf + T::one())).sqrt() * u[n - 1];
        u.push(next);
    }
    u
}

pub fn hermite_function<T: Real>(n: usize, x: T) -> T {
    hermite_functions(n, x)[n]
}
