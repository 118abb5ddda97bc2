//! Closed-form extremal theory: triangular levels, the bonus budget
//! function, and the exact maximal degree.
//!
//! Everything here is O(1) integer arithmetic. The budget function
//! `beta_r(s)` counts how many bonus activations a surplus `s` can buy from
//! the weight multiset {1,1,2,2,...,r,r}; its thresholds are the squares
//! and pronic numbers, which is what shapes the maximal-degree sequence on
//! each triangular interval.

use crate::error::{Error, Result};

/// The r-th triangular number `r(r+1)/2`.
pub fn triangular(r: u64) -> u64 {
    r * (r + 1) / 2
}

/// The largest `r` with `T_r <= n`, by exact integer square root.
///
/// Floating point is deliberately avoided: rounding at perfect triangular
/// inputs would corrupt boundary rows.
pub fn rho(n: u64) -> u64 {
    let s = (8 * u128::from(n) + 1).isqrt();
    ((s - 1) / 2) as u64
}

/// Minimal total weight of `k` items drawn from {1,1,2,2,3,3,...}:
/// `0` for `k = 0`, `q^2` for `k = 2q-1`, `q(q+1)` for `k = 2q`.
pub fn min_weight(k: u64) -> u64 {
    let q = k.div_ceil(2);
    if k % 2 == 1 {
        q * q
    } else {
        q * (q + 1)
    }
}

/// The bonus budget `beta_r(s)`: the maximal number of items from
/// {1,1,2,2,...,r,r} with total weight at most `s`.
///
/// Evaluated by the square-pronic rule on `q = isqrt(s)`, capped at the
/// full multiset size `2r` once `s >= r(r+1)`.
pub fn beta(r: u64, s: u64) -> u64 {
    debug_assert!(r >= 1);
    if s >= r * (r + 1) {
        return 2 * r;
    }
    let q = s.isqrt();
    if s < q * (q + 1) {
        2 * q - 1
    } else {
        2 * q
    }
}

/// The triangular position of `n` and its exact maximal degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalContext {
    /// The input mass.
    pub n: u64,
    /// Maximal support size `rho(n)`.
    pub rho: u64,
    /// Surplus `n - T_rho`, always in `0..=rho`.
    pub nu: u64,
    /// The maximal degree over all partitions of `n`.
    pub delta: u64,
}

/// Exact maximal degree: `delta = rho(rho-1) + beta_rho(nu)`.
pub fn max_degree(n: u64) -> ExtremalContext {
    debug_assert!(n >= 1);
    let r = rho(n);
    let nu = n - triangular(r);
    debug_assert!(nu <= r);
    ExtremalContext {
        n,
        rho: r,
        nu,
        delta: r * (r - 1) + beta(r, nu),
    }
}

/// Whether the maximal degree steps up from `n = T_t + nu` to `n + 1`.
///
/// Inside a triangular interval the increment is one exactly when `nu + 1`
/// is a square or a pronic number, and zero otherwise. Requires
/// `0 <= nu < t` so that both masses sit in the same interval.
pub fn delta_increment_is_jump(t: u64, nu: u64) -> Result<bool> {
    if t == 0 || nu >= t {
        return Err(Error::IncrementRange { t, nu });
    }
    let x = nu + 1;
    let q = x.isqrt();
    Ok(x == q * q || x == q * (q + 1))
}

/// Checks the two-sided surplus estimates at `n`: the budget is within one
/// of `2*isqrt(nu)`, and `2n - delta` lies in `[2 rho, 4 rho]`.
pub fn surplus_bounds_hold(n: u64) -> bool {
    let ctx = max_degree(n);
    let budget = ctx.delta - ctx.rho * (ctx.rho - 1);
    let q = ctx.nu.isqrt();
    let lower = if ctx.nu == 0 { 0 } else { 2 * q - 1 };
    let slack = 2 * n - ctx.delta;
    lower <= budget && budget <= 2 * q && 2 * ctx.rho <= slack && slack <= 4 * ctx.rho
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Greedy form of the budget: walk 1,1,2,2,...,r,r and take items while
    /// they fit. This is the defining rule the closed form must match.
    fn beta_greedy(r: u64, s: u64) -> u64 {
        let mut left = s;
        let mut taken = 0;
        for w in 1..=r {
            for _ in 0..2 {
                if w <= left {
                    left -= w;
                    taken += 1;
                }
            }
        }
        taken
    }

    #[test]
    fn triangular_values() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(5), 15);
        assert_eq!(triangular(10), 55);
    }

    #[test]
    fn rho_examples_and_bracketing() {
        assert_eq!(rho(1), 1);
        assert_eq!(rho(44), 8);
        assert_eq!(rho(60), 10);
        for n in 1..=10_000 {
            let r = rho(n);
            assert!(triangular(r) <= n && n < triangular(r + 1), "n = {n}");
        }
    }

    #[test]
    fn min_weight_examples() {
        assert_eq!(min_weight(0), 0);
        assert_eq!(min_weight(3), 4);
        assert_eq!(min_weight(4), 6);
        // Prefix sums of 1,1,2,2,3,3,...
        let mut sum = 0;
        for k in 1..=40u64 {
            sum += k.div_ceil(2);
            assert_eq!(min_weight(k), sum, "k = {k}");
        }
    }

    #[test]
    fn beta_examples() {
        for t in 1..=30 {
            assert_eq!(beta(t, 1), 1);
        }
        assert_eq!(beta(5, 5), 3);
        assert_eq!(beta(3, 12), 6);
    }

    #[test]
    fn beta_matches_greedy_definition() {
        for r in 1..=12 {
            for s in 0..=(r * (r + 1) + 20) {
                assert_eq!(beta(r, s), beta_greedy(r, s), "r = {r}, s = {s}");
            }
        }
    }

    #[test]
    fn beta_thresholds_and_monotonicity() {
        for r in 1..=20 {
            for k in 1..=(2 * r) {
                assert_eq!(beta(r, min_weight(k)), k);
                assert_eq!(beta(r, min_weight(k) - 1), k - 1);
            }
            for s in 0..=(r * (r + 1)) {
                assert!(beta(r, s) <= 2 * r);
                if s > 0 {
                    assert!(beta(r, s - 1) <= beta(r, s));
                }
                if r > 1 {
                    assert!(beta(r - 1, s) <= beta(r, s));
                }
            }
        }
    }

    #[test]
    fn max_degree_table_rows() {
        let cases = [
            (15, 5, 0, 20),
            (44, 8, 8, 60),
            (53, 9, 8, 76),
            (2, 1, 1, 1),
            (1, 1, 0, 0),
        ];
        for (n, r, nu, delta) in cases {
            let ctx = max_degree(n);
            assert_eq!((ctx.rho, ctx.nu, ctx.delta), (r, nu, delta), "n = {n}");
        }
    }

    #[test]
    fn increment_rule_examples() {
        assert_eq!(delta_increment_is_jump(5, 0), Ok(true));
        assert_eq!(delta_increment_is_jump(5, 2), Ok(false));
        assert_eq!(delta_increment_is_jump(9, 3), Ok(true));
        assert!(matches!(
            delta_increment_is_jump(5, 5),
            Err(Error::IncrementRange { .. })
        ));
        assert!(matches!(
            delta_increment_is_jump(0, 0),
            Err(Error::IncrementRange { .. })
        ));
    }

    #[test]
    fn increment_rule_matches_formula_differences() {
        for t in 1..=50 {
            for nu in 0..t {
                let n = triangular(t) + nu;
                let observed = max_degree(n + 1).delta - max_degree(n).delta;
                let jump = delta_increment_is_jump(t, nu).unwrap();
                assert_eq!(observed, u64::from(jump), "t = {t}, nu = {nu}");
            }
        }
    }

    #[test]
    fn delta_is_nondecreasing_with_unit_steps_inside_intervals() {
        let mut prev = max_degree(1).delta;
        for n in 2..=10_000 {
            let cur = max_degree(n).delta;
            assert!(cur >= prev, "n = {n}");
            let t = rho(n - 1);
            if n < triangular(t + 1) {
                assert!(cur - prev <= 1, "n = {n}");
            }
            if n == triangular(t + 1) {
                assert!(cur > prev, "no strict increase entering T_{}", t + 1);
            }
            prev = cur;
        }
    }

    #[test]
    fn surplus_bounds_hold_everywhere_sampled() {
        assert!(surplus_bounds_hold(20));
        assert!(surplus_bounds_hold(1));
        assert!(surplus_bounds_hold(10_000));
        for n in 1..=10_000 {
            assert!(surplus_bounds_hold(n), "n = {n}");
        }
    }
}
