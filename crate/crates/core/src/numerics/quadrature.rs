use crate::scalar::{compensated_sum, Real};

/// `n` evenly spaced points including both endpoints.
pub fn linspace<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / T::from_count(n - 1);
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * T::from_count(i) })
                .collect()
        }
    }
}

/// Cell centres of a uniform `n`-cell partition of `[lo, hi]` and the cell width.
pub fn midpoint_nodes<T: Real>(lo: T, hi: T, n: usize) -> (Vec<T>, T) {
    let h = (hi - lo) / T::from_count(n.max(1));
    let half = h / T::lit(2.0);
    let nodes = (0..n).map(|i| lo + half + h * T::from_count(i)).collect();
    (nodes, h)
}

/// Composite midpoint rule. Exponentially convergent for smooth integrands
/// that decay to zero at both ends of the window (Gaussians, Hermite functions).
pub fn midpoint<T: Real, F: Fn(T) -> T>(f: F, lo: T, hi: T, n: usize) -> T {
    let (nodes, h) = midpoint_nodes(lo, hi, n);
    compensated_sum(nodes.into_iter().map(f)) * h
}
