//! The two-argument Ackermann function, its inverse, and the extremal
//! length bound for l-regular sequences avoiding up(l,t) patterns.
//!
//! Variant fixed here: `A(0,n) = n+1`, `A(m,0) = A(m-1,1)`,
//! `A(m,n) = A(m-1, A(m,n-1))`, and `alpha(n) = min { m : A(m,m) >= n }`.

use num_bigint::BigUint;
use num_traits::One;

/// `min(A(m, n), cap)` under the variant above.
///
/// Closed forms are used for `m <= 3`; higher rows recurse, saturating at
/// `cap` as soon as the value provably exceeds it.
pub fn ackermann_capped(m: u64, n: u64, cap: u64) -> u64 {
    match m {
        0 => n.saturating_add(1).min(cap),
        1 => n.saturating_add(2).min(cap),
        2 => (2u64.saturating_mul(n).saturating_add(3)).min(cap),
        3 => {
            if n + 3 >= 63 {
                cap
            } else {
                ((1u64 << (n + 3)) - 3).min(cap)
            }
        }
        _ => {
            if n == 0 {
                ackermann_capped(m - 1, 1, cap)
            } else {
                let inner = ackermann_capped(m, n - 1, cap);
                if inner >= cap {
                    // A(m-1, x) >= x for every m, so the result saturates too.
                    cap
                } else {
                    ackermann_capped(m - 1, inner, cap)
                }
            }
        }
    }
}

/// The inverse Ackermann function `alpha(n) = min { m : A(m,m) >= n }`.
pub fn inverse_ackermann(n: u64) -> u32 {
    let mut m = 0u64;
    loop {
        if ackermann_capped(m, m, n.saturating_add(1)) >= n {
            return m as u32;
        }
        m += 1;
    }
}

/// How `alpha^c(n)` is read when a bound formula raises or iterates the
/// inverse Ackermann function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlphaExponent {
    /// `alpha(n)` raised to the power `c`.
    #[default]
    Power,
    /// `alpha` applied `c` times starting from `n`.
    Iterated,
}

/// Fixes the Ackermann variant and the reading of `alpha^c(n)` for every
/// formula in the crate.
#[derive(Debug, Clone, Copy, Default)]
pub struct AckermannScale {
    pub exponent: AlphaExponent,
}

impl AckermannScale {
    pub fn alpha(&self, n: u64) -> u32 {
        inverse_ackermann(n)
    }

    /// `alpha^c(n)` under the configured reading, as an exact integer.
    pub fn alpha_exp(&self, n: u64, c: u32) -> BigUint {
        match self.exponent {
            AlphaExponent::Power => BigUint::from(self.alpha(n)).pow(c),
            AlphaExponent::Iterated => {
                let mut v = n;
                for _ in 0..c {
                    v = self.alpha(v) as u64;
                }
                BigUint::from(v)
            }
        }
    }

    /// `log2(alpha^c(n))` as a float, usable when `c` is far too large for
    /// the exact power to be materialized.
    pub fn alpha_exp_log2(&self, n: u64, c: f64) -> f64 {
        match self.exponent {
            AlphaExponent::Power => c * (self.alpha(n) as f64).log2(),
            AlphaExponent::Iterated => {
                // Iteration collapses to its fixed point within a few steps.
                let steps = c.min(8.0) as u32;
                let mut v = n;
                for _ in 0..steps {
                    v = self.alpha(v) as u64;
                }
                (v as f64).max(f64::MIN_POSITIVE).log2()
            }
        }
    }
}

/// Exact value of `n * l * 2^(l*t - 3) * (10*l)^(10 * alpha^(l*t)(n))`, the
/// extremal length bound for l-regular sequences over an n-letter alphabet
/// avoiding up(l,t).
pub fn klazar_bound(n: u64, l: u32, t: u32, scale: &AckermannScale) -> BigUint {
    assert!(n >= 1 && l >= 2 && t >= 3, "klazar_bound needs n>=1, l>=2, t>=3");
    let lt = l * t;
    let alpha_pow = scale.alpha_exp(n, lt);
    let exp10 = alpha_pow * 10u32;
    let exp10: u32 = u32::try_from(&exp10).expect("klazar exponent too large to materialize");
    let base = BigUint::from(10u32 * l);
    let mut out = BigUint::from(n) * BigUint::from(l);
    out *= BigUint::one() << (lt - 3);
    out *= base.pow(exp10);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: the raw recurrence, memoized, for small arguments.
    fn ack_direct(m: u64, n: u64) -> u64 {
        match m {
            0 => n + 1,
            _ if n == 0 => ack_direct(m - 1, 1),
            _ => ack_direct(m - 1, ack_direct(m, n - 1)),
        }
    }

    #[test]
    fn capped_matches_direct_recurrence() {
        for m in 0..=3 {
            for n in 0..=6 {
                assert_eq!(ackermann_capped(m, n, u64::MAX), ack_direct(m, n), "A({m},{n})");
            }
        }
        assert_eq!(ackermann_capped(4, 0, u64::MAX), ack_direct(3, 1));
        assert_eq!(ackermann_capped(4, 1, u64::MAX), 65533);
    }

    #[test]
    fn alpha_thresholds() {
        // A(0,0)=1, A(1,1)=3, A(2,2)=7, A(3,3)=61.
        assert_eq!(inverse_ackermann(1), 0);
        assert_eq!(inverse_ackermann(2), 1);
        assert_eq!(inverse_ackermann(3), 1);
        assert_eq!(inverse_ackermann(4), 2);
        assert_eq!(inverse_ackermann(7), 2);
        assert_eq!(inverse_ackermann(8), 3);
        assert_eq!(inverse_ackermann(61), 3);
        assert_eq!(inverse_ackermann(62), 4);
        assert_eq!(inverse_ackermann(1_000_000), 4);
        assert_eq!(inverse_ackermann(u64::MAX), 4);
    }

    #[test]
    fn alpha_nondecreasing() {
        let mut prev = 0;
        for n in 1..2000u64 {
            let a = inverse_ackermann(n);
            assert!(a >= prev);
            prev = a;
        }
    }

    #[test]
    fn klazar_bound_base_case() {
        // n=1, l=2, t=3: 1 * 2 * 2^3 * 20^(10 * alpha(1)^6) with alpha(1)=0.
        let scale = AckermannScale::default();
        let v = klazar_bound(1, 2, 3, &scale);
        assert_eq!(v, BigUint::from(16u32));
    }

    #[test]
    fn klazar_bound_monotone_in_n() {
        let scale = AckermannScale::default();
        assert!(klazar_bound(100, 2, 3, &scale) >= klazar_bound(10, 2, 3, &scale));
    }

    #[test]
    fn klazar_bound_grows_with_t() {
        let scale = AckermannScale::default();
        assert!(klazar_bound(2, 2, 6, &scale) > klazar_bound(2, 2, 3, &scale));
    }

    #[test]
    fn iterated_reading_collapses() {
        let scale = AckermannScale {
            exponent: AlphaExponent::Iterated,
        };
        // alpha(alpha(10^6)) = alpha(4) = 2, then 1, then 0.
        assert_eq!(scale.alpha_exp(1_000_000, 2), BigUint::from(2u32));
        assert_eq!(scale.alpha_exp(1_000_000, 4), BigUint::from(0u32));
    }
}
