//! Scalar special functions: log-factorials, digamma at integer arguments,
//! exponentially scaled modified Bessel functions, Laguerre polynomials.
//!
//! Everything here is evaluated in regimes where overflow is the enemy, so
//! factorials stay in log space and the Bessel functions carry their
//! exponential factor with them.

use std::sync::OnceLock;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LN_FACT_TABLE_LEN: usize = 257;

/// ln(n!), exact cumulative sum for n ≤ 256, Stirling series above.
pub fn ln_factorial(n: u64) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![0.0; LN_FACT_TABLE_LEN];
        for k in 2..LN_FACT_TABLE_LEN {
            t[k] = t[k - 1] + (k as f64).ln();
        }
        t
    });
    if (n as usize) < table.len() {
        table[n as usize]
    } else {
        let x = n as f64;
        // Stirling with three correction terms; relative error < 1e-16 for n > 256
        (x + 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * x)
            - 1.0 / (360.0 * x.powi(3))
            + 1.0 / (1260.0 * x.powi(5))
    }
}

/// Digamma ψ(n) at positive integer n, via the harmonic sum H_{n-1} − γ.
///
/// The harmonic sum is taken verbatim up to n = 10⁴; beyond that the
/// asymptotic expansion of ψ is cheaper and equally accurate.
pub fn digamma_int(n: u64) -> f64 {
    assert!(n >= 1, "digamma_int requires n >= 1");
    if n <= 10_000 {
        let mut h = 0.0;
        // ascending magnitudes: small terms first
        for m in (1..n).rev() {
            h += 1.0 / m as f64;
        }
        h - EULER_GAMMA
    } else {
        let x = n as f64;
        x.ln() - 0.5 / x - 1.0 / (12.0 * x * x) + 1.0 / (120.0 * x.powi(4))
            - 1.0 / (252.0 * x.powi(6))
    }
}

const BESSEL_SWITCH: f64 = 35.0;

/// e^{-z} I₀(z) for z ≥ 0.
pub fn bessel_i0e(z: f64) -> f64 {
    debug_assert!(z >= 0.0);
    if z < BESSEL_SWITCH {
        // power series of I0, scaled afterwards; the largest partial sum is
        // e^35 ≈ 1.6e15, comfortably inside f64 range
        let q = 0.25 * z * z;
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut k = 1.0;
        while term > 1e-18 * sum {
            term *= q / (k * k);
            sum += term;
            k += 1.0;
        }
        sum * (-z).exp()
    } else {
        // asymptotic series: sum_k prod_{j<=k} (2j-1)^2 / (k! (8z)^k)
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..=20 {
            let kk = k as f64;
            let next = term * (2.0 * kk - 1.0) * (2.0 * kk - 1.0) / (8.0 * kk * z);
            if next.abs() >= term.abs() {
                break; // past the smallest term
            }
            term = next;
            sum += term;
            if term.abs() < 1e-17 * sum {
                break;
            }
        }
        sum / (2.0 * std::f64::consts::PI * z).sqrt()
    }
}

/// e^{-z} I₁(z) for z ≥ 0.
pub fn bessel_i1e(z: f64) -> f64 {
    debug_assert!(z >= 0.0);
    if z < BESSEL_SWITCH {
        let q = 0.25 * z * z;
        let mut term = 0.5 * z;
        let mut sum = term;
        let mut k = 1.0;
        while term.abs() > 1e-18 * sum.abs() + 1e-320 {
            term *= q / (k * (k + 1.0));
            sum += term;
            k += 1.0;
        }
        sum * (-z).exp()
    } else {
        // same shape as the I0 series with (2k-1)^2 replaced by (2k-1)^2 - 4;
        // the first factor is negative, which carries the sign pattern
        // 1 - 3/(8z) - 15/(128 z^2) - ...
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..=20 {
            let kk = k as f64;
            let m = 2.0 * kk - 1.0;
            let next = term * (m * m - 4.0) / (8.0 * kk * z);
            if next.abs() >= term.abs() {
                break;
            }
            term = next;
            sum += term;
            if term.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        sum / (2.0 * std::f64::consts::PI * z).sqrt()
    }
}

/// (L_k(x), L_{k-1}(x)) by the three-term recurrence; L_{-1} := 0.
pub fn laguerre_pair(k: u32, x: f64) -> (f64, f64) {
    if k == 0 {
        return (1.0, 0.0);
    }
    let mut lm = 1.0; // L_0
    let mut l = 1.0 - x; // L_1
    for n in 1..k {
        let nf = n as f64;
        let next = ((2.0 * nf + 1.0 - x) * l - nf * lm) / (nf + 1.0);
        lm = l;
        l = next;
    }
    (l, lm)
}

/// L_k(x).
pub fn laguerre(k: u32, x: f64) -> f64 {
    laguerre_pair(k, x).0
}

/// d/dx L_k(x), via x L_k'(x) = k (L_k(x) − L_{k-1}(x)).
pub fn laguerre_deriv(k: u32, x: f64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    if x.abs() < 1e-8 {
        let kf = k as f64;
        return -kf + 0.5 * kf * (kf - 1.0) * x;
    }
    let (l, lm) = laguerre_pair(k, x);
    k as f64 * (l - lm) / x
}

/// Generalized Laguerre L_n^{(a)}(x) for integer a ≥ 0.
pub fn laguerre_assoc(n: u32, a: u32, x: f64) -> f64 {
    let af = a as f64;
    if n == 0 {
        return 1.0;
    }
    let mut lm = 1.0;
    let mut l = 1.0 + af - x;
    for m in 1..n {
        let mf = m as f64;
        let next = ((2.0 * mf + 1.0 + af - x) * l - (mf + af) * lm) / (mf + 1.0);
        lm = l;
        l = next;
    }
    l
}
