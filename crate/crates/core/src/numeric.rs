//! Shared numeric primitives: compensated summation, stable softmax
//! pieces, and bracketed one-dimensional minimization.

/// Neumaier-compensated running sum.
///
/// Summation order is fixed by the caller; the compensation term keeps the
/// accumulated rounding error near one ulp of the result regardless of the
/// number of terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Sums in the iterator's order with Neumaier compensation.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut acc = CompensatedSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

/// ln(1 + exp(z)) without overflow for large positive z.
pub fn log1p_exp(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

/// Max-shifted log of a sum of exponentials. `values` must be nonempty.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let m = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return m;
    }
    let mut acc = CompensatedSum::new();
    for &v in values {
        acc.add((v - m).exp());
    }
    m + acc.value().ln()
}

const GOLDEN_MAX_ITER: usize = 256;

/// Golden-section minimization of `f` on `[a, b]`.
///
/// Assumes `f` is unimodal on the bracket. Both endpoints are sampled
/// explicitly, so boundary minima (the relevant case for concave sections)
/// are not missed. Returns the best sampled `(x, f(x))`.
pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, x_tol: f64) -> (f64, f64) {
    debug_assert!(a <= b, "empty bracket");
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best = (a, f(a));
    let fb = f(b);
    if fb < best.1 {
        best = (b, fb);
    }
    if b - a <= x_tol {
        return best;
    }
    let mut lo = a;
    let mut hi = b;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..GOLDEN_MAX_ITER {
        if hi - lo <= x_tol {
            break;
        }
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
    for (x, fx) in [(x1, f1), (x2, f2)] {
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_beats_naive_on_cancellation() {
        // 1 + 1e-16 added 1e4 times then -1: naive accumulation drops the dust.
        let mut acc = CompensatedSum::new();
        acc.add(1.0);
        for _ in 0..10_000 {
            acc.add(1e-16);
        }
        acc.add(-1.0);
        assert!((acc.value() - 1e-12).abs() < 1e-24);
    }

    #[test]
    fn log1p_exp_matches_direct_in_safe_range() {
        for &z in &[-30.0, -2.5, -0.1, 0.0, 0.1, 2.5, 30.0] {
            let direct = (1.0 + f64::exp(z)).ln();
            assert!((log1p_exp(z) - direct).abs() < 1e-12, "z = {z}");
        }
        // No overflow for large z.
        assert!((log1p_exp(800.0) - 800.0).abs() < 1e-12);
        assert_eq!(log1p_exp(-800.0), 0.0);
    }

    #[test]
    fn log_sum_exp_shifts_by_max() {
        let v = [1000.0, 1000.0, 1000.0];
        assert!((log_sum_exp(&v) - (1000.0 + 3.0f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn golden_section_finds_quadratic_minimum() {
        let (x, fx) = golden_section_min(|z| (z - 1.25) * (z - 1.25) + 0.5, -10.0, 10.0, 1e-12);
        assert!((x - 1.25).abs() < 1e-6);
        assert!((fx - 0.5).abs() < 1e-12);
    }

    #[test]
    fn golden_section_handles_boundary_minimum() {
        // Concave bump: minimum sits at an endpoint.
        let (x, fx) = golden_section_min(|z| -(z - 0.25) * (z - 0.25), 0.0, 1.0, 1e-12);
        assert!((x - 1.0).abs() < 1e-9);
        assert!((fx + 0.5625).abs() < 1e-12);
    }
}
