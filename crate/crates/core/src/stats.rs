//! Descriptive statistics and the two-group equality-of-means F test.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub n: usize,
    pub mean: f64,
    pub median: f64,
    /// Sample standard deviation (`n - 1` denominator); 0 when `n == 1`.
    pub std_dev: f64,
    pub min: f64,
    pub max: f64,
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

fn sum_sq_dev(values: &[f64], centre: f64) -> f64 {
    values.iter().map(|v| (v - centre) * (v - centre)).sum()
}

pub fn summarize(values: &[f64]) -> Result<SummaryStats> {
    if values.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(position) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            position,
            value: values[position],
        });
    }
    let n = values.len();
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    };
    let m = mean(values);
    let std_dev = if n > 1 {
        (sum_sq_dev(values, m) / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    Ok(SummaryStats {
        n,
        mean: m,
        median,
        std_dev,
        min: sorted[0],
        max: sorted[n - 1],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanTestResult {
    /// `MS_between / MS_within`; `+inf` when the groups are constant with
    /// different means.
    pub f_statistic: f64,
    pub p_value: f64,
    pub df_between: usize,
    pub df_within: usize,
}

/// One-way ANOVA of two groups. `df = (1, n_a + n_b - 2)` and the p-value is
/// the upper tail of the F distribution.
///
/// Returns [`Error::NotApplicable`] when both groups are constant and share
/// the same value.
pub fn mean_equality_test(group_a: &[f64], group_b: &[f64]) -> Result<MeanTestResult> {
    for g in [group_a, group_b] {
        if g.len() < 2 {
            return Err(Error::TooFew {
                required: 2,
                actual: g.len(),
            });
        }
        if let Some(position) = g.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                position,
                value: g[position],
            });
        }
    }
    let (na, nb) = (group_a.len() as f64, group_b.len() as f64);
    let (ma, mb) = (mean(group_a), mean(group_b));
    // n_a (m_a - g)^2 + n_b (m_b - g)^2 in a form that is exactly 0 for equal means
    let ss_between = na * nb / (na + nb) * (ma - mb) * (ma - mb);
    let ss_within = sum_sq_dev(group_a, ma) + sum_sq_dev(group_b, mb);
    let df_within = group_a.len() + group_b.len() - 2;

    let f_statistic = if ss_within == 0.0 {
        if ss_between == 0.0 {
            return Err(Error::NotApplicable);
        }
        f64::INFINITY
    } else {
        ss_between / (ss_within / df_within as f64)
    };
    Ok(MeanTestResult {
        f_statistic,
        p_value: f_survival(f_statistic, 1.0, df_within as f64),
        df_between: 1,
        df_within,
    })
}

/// Upper tail `P(F > f)` of the F distribution with `(d1, d2)` degrees of
/// freedom, via `I_{d2/(d2 + d1 f)}(d2/2, d1/2)`.
pub fn f_survival(f: f64, d1: f64, d2: f64) -> f64 {
    if f.is_nan() {
        return f64::NAN;
    }
    if f <= 0.0 {
        return 1.0;
    }
    if f.is_infinite() {
        return 0.0;
    }
    let x = d2 / (d2 + d1 * f);
    regularized_incomplete_beta(x, 0.5 * d2, 0.5 * d1).clamp(0.0, 1.0)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos approximation, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Regularized incomplete beta `I_x(a, b)`, evaluated by Lentz's continued
/// fraction on whichever side converges faster.
pub fn regularized_incomplete_beta(x: f64, a: f64, b: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let front = ln_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_continued_fraction(x, a, b) / a
    } else {
        1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b
    }
}

fn beta_continued_fraction(x: f64, a: f64, b: f64) -> f64 {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    const MAX_ITER: usize = 10_000;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_small() {
        let s = summarize(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(
            (s.mean, s.median, s.std_dev, s.min, s.max),
            (2.0, 2.0, 1.0, 1.0, 3.0)
        );
        let s = summarize(&[4.0; 5]).unwrap();
        assert_eq!(s.std_dev, 0.0);
        let s = summarize(&[0.2, 0.4, 0.6, 0.9]).unwrap();
        assert!((s.mean - 0.525).abs() < 1e-12);
        assert!((s.median - 0.5).abs() < 1e-12);
        assert!((s.std_dev - 0.29861).abs() < 1e-5);
        assert_eq!(summarize(&[]).unwrap_err(), Error::Empty);
        assert_eq!(summarize(&[7.0]).unwrap().std_dev, 0.0);
    }

    #[test]
    fn anova_hand_example() {
        let r = mean_equality_test(&[1.0, 2.0, 3.0], &[2.0, 3.0, 4.0]).unwrap();
        assert!((r.f_statistic - 1.5).abs() < 1e-12);
        assert_eq!((r.df_between, r.df_within), (1, 4));
    }

    #[test]
    fn anova_identical_groups() {
        let g = [0.3, 0.9, 0.1, 0.55];
        let r = mean_equality_test(&g, &g).unwrap();
        assert_eq!(r.f_statistic, 0.0);
        assert_eq!(r.p_value, 1.0);
    }

    #[test]
    fn anova_degenerate_groups() {
        let r = mean_equality_test(&[1.0, 1.0], &[2.0, 2.0, 2.0]).unwrap();
        assert!(r.f_statistic.is_infinite());
        assert_eq!(r.p_value, 0.0);
        assert_eq!(
            mean_equality_test(&[1.0, 1.0], &[1.0, 1.0]).unwrap_err(),
            Error::NotApplicable
        );
        assert!(mean_equality_test(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn ln_gamma_known_values() {
        assert!(ln_gamma(1.0).abs() < 1e-14);
        assert!(ln_gamma(2.0).abs() < 1e-14);
        assert!((ln_gamma(0.5) - std::f64::consts::PI.sqrt().ln()).abs() < 1e-14);
        assert!((ln_gamma(10.0) - 362880f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn incomplete_beta_closed_forms() {
        // I_x(1, 1) = x, I_x(a, 1) = x^a, I_x(1, b) = 1 - (1-x)^b
        for &x in &[0.01, 0.3, 0.5, 0.77, 0.999] {
            assert!((regularized_incomplete_beta(x, 1.0, 1.0) - x).abs() < 1e-14);
            assert!((regularized_incomplete_beta(x, 3.5, 1.0) - x.powf(3.5)).abs() < 1e-13);
            assert!(
                (regularized_incomplete_beta(x, 1.0, 2.5) - (1.0 - (1.0 - x).powf(2.5))).abs()
                    < 1e-13
            );
        }
    }

    #[test]
    fn f_survival_edges() {
        assert_eq!(f_survival(0.0, 1.0, 4.0), 1.0);
        assert_eq!(f_survival(f64::INFINITY, 1.0, 4.0), 0.0);
        // F(1, d2) tail equals two-sided t tail; for d2 = 1, P(F > 1) = 1/2
        assert!((f_survival(1.0, 1.0, 1.0) - 0.5).abs() < 1e-13);
    }
}
