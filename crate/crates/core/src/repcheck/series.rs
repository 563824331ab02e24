/// `1 − Σ_{m odd} (c^{2m} − 1)/C(2m, m)`, truncated after `terms` odd values of `m`.
///
/// For `n ≥ 8` the `m = 3` summand is replaced by `(c^8 − 1)/C(8, 3)`.
pub fn series_bound(c: f64, n: usize, terms: usize) -> f64 {
    let c2 = c * c;
    let mut total = 1.0;
    // ratio = c^{2m}/C(2m, m) and inv = 1/C(2m, m), advanced together so
    // neither factor overflows on its own
    let (mut ratio, mut inv) = (c2 / 2.0, 0.5);
    let mut m = 1;
    let mut taken = 0;
    while taken < terms {
        if m % 2 == 1 {
            let term = if m == 3 && n >= 8 {
                (c2.powi(4) - 1.0) / 56.0
            } else {
                ratio - inv
            };
            if !term.is_finite() {
                return f64::NEG_INFINITY;
            }
            total -= term;
            taken += 1;
        }
        let step = (m + 1) as f64 / (2.0 * (2 * m + 1) as f64);
        ratio *= c2 * step;
        inv *= step;
        m += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_one_is_one() {
        assert_eq!(series_bound(1.0, 5, 50), 1.0);
        assert_eq!(series_bound(1.0, 9, 50), 1.0);
    }

    #[test]
    fn first_terms_by_hand() {
        let c = 2f64.sqrt();
        // 1 − (2−1)/2 − (8−1)/20
        assert!((series_bound(c, 5, 2) - (1.0 - 0.5 - 0.35)).abs() < 1e-12);
        // refinement swaps 7/20 for 15/56
        assert!((series_bound(c, 8, 2) - (1.0 - 0.5 - 15.0 / 56.0)).abs() < 1e-12);
    }

    #[test]
    fn converges() {
        let c = 2f64.sqrt();
        let a = series_bound(c, 5, 2000);
        let b = series_bound(c, 5, 4000);
        assert!((a - b).abs() < 1e-4);
    }

    /// Truncating at odd `m ≤ (n−1)/2`: the plain series stays positive up to
    /// n = 13 and first goes negative at n = 15.
    #[test]
    fn refinement_needed_from_fifteen() {
        let c = 2f64.sqrt();
        let odd_terms = |n: usize| ((n - 1) / 2).div_ceil(2);
        for n in (3..=13).step_by(2) {
            assert!(series_bound(c, 7, odd_terms(n)) > 0.0, "n={n}");
        }
        assert!(series_bound(c, 7, odd_terms(15)) < 0.0);
        for n in (9..=201).step_by(2) {
            assert!(series_bound(c, n, odd_terms(n)) >= 0.057, "n={n}");
        }
    }
}
