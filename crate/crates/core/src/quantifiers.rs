//! Entropy, Jensen-Shannon disequilibrium and statistical complexity.
//!
//! All logarithms are natural; `0 ln 0` is taken as 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::PatternDistribution;

const SUM_TOLERANCE: f64 = 1e-9;

/// Information quantifiers of one distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quantifiers {
    /// Shannon entropy in nats.
    pub shannon: f64,
    /// Shannon entropy divided by `ln M`.
    pub entropy: f64,
    /// Normalized Jensen-Shannon divergence to the uniform distribution.
    pub disequilibrium: f64,
    /// `disequilibrium * entropy`.
    pub complexity: f64,
    pub alphabet_size: usize,
}

#[inline]
fn plogp(p: f64) -> f64 {
    if p > 0.0 {
        p * p.ln()
    } else {
        0.0
    }
}

fn validate(p: &[f64]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::InvalidDistribution("empty".into()));
    }
    if let Some(bad) = p.iter().find(|v| !v.is_finite() || **v < 0.0) {
        return Err(Error::InvalidDistribution(format!("entry {bad}")));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > SUM_TOLERANCE {
        return Err(Error::InvalidDistribution(format!("sums to {sum}")));
    }
    Ok(())
}

/// `-Σ p ln p`.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    validate(p)?;
    Ok(shannon_unchecked(p))
}

fn shannon_unchecked(p: &[f64]) -> f64 {
    let s = -p.iter().map(|&v| plogp(v)).sum::<f64>();
    // -0.0 for the degenerate distribution
    s.max(0.0)
}

/// Shannon entropy normalized by its maximum `ln M`.
pub fn normalized_entropy(p: &[f64]) -> Result<f64> {
    if p.len() < 2 {
        return Err(Error::InvalidDistribution(
            "normalization needs at least two bins".into(),
        ));
    }
    Ok((shannon_entropy(p)? / (p.len() as f64).ln()).min(1.0))
}

/// Normalization constant `Q0` making the disequilibrium of a degenerate
/// distribution against the uniform one equal to 1:
/// `Q0 = -2 / [ (M+1)/M ln(M+1) - 2 ln(2M) + ln M ]`.
pub fn disequilibrium_normalization(alphabet_size: usize) -> f64 {
    let m = alphabet_size as f64;
    -2.0 / ((m + 1.0) / m * (m + 1.0).ln() - 2.0 * (2.0 * m).ln() + m.ln())
}

/// Normalized Jensen-Shannon divergence
/// `Q0 { S[(P+Q)/2] - S[P]/2 - S[Q]/2 }`.
pub fn disequilibrium(p: &[f64], reference: &[f64]) -> Result<f64> {
    if p.len() != reference.len() {
        return Err(Error::AlphabetMismatch(p.len(), reference.len()));
    }
    validate(p)?;
    validate(reference)?;
    if p.len() < 2 {
        return Err(Error::InvalidDistribution(
            "disequilibrium needs at least two bins".into(),
        ));
    }
    let mixed = -p
        .iter()
        .zip(reference)
        .map(|(&a, &b)| plogp(0.5 * (a + b)))
        .sum::<f64>();
    let js = mixed - 0.5 * shannon_unchecked(p) - 0.5 * shannon_unchecked(reference);
    Ok(clamp_unit(disequilibrium_normalization(p.len()) * js))
}

fn clamp_unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

/// Entropy, disequilibrium against the uniform distribution, and complexity.
pub fn statistical_complexity(p: &[f64]) -> Result<Quantifiers> {
    validate(p)?;
    let m = p.len();
    if m < 2 {
        return Err(Error::InvalidDistribution(
            "complexity needs at least two bins".into(),
        ));
    }
    let uniform = 1.0 / m as f64;
    let shannon = shannon_unchecked(p);
    let mixed = -p.iter().map(|&a| plogp(0.5 * (a + uniform))).sum::<f64>();
    Ok(assemble(shannon, mixed, m))
}

fn assemble(shannon: f64, mixed: f64, m: usize) -> Quantifiers {
    let ln_m = (m as f64).ln();
    let entropy = (shannon / ln_m).min(1.0);
    let js = mixed - 0.5 * shannon - 0.5 * ln_m;
    let disequilibrium = clamp_unit(disequilibrium_normalization(m) * js);
    Quantifiers {
        shannon,
        entropy,
        disequilibrium,
        complexity: disequilibrium * entropy,
        alphabet_size: m,
    }
}

/// Quantifiers of a distribution given as `(probability, multiplicity)` levels
/// over an alphabet of `alphabet_size` bins; bins not covered by a level are
/// zero. Costs O(levels) instead of O(M).
pub fn complexity_of_levels(levels: &[(f64, usize)], alphabet_size: usize) -> Quantifiers {
    let uniform = 1.0 / alphabet_size as f64;
    let covered: usize = levels.iter().map(|&(_, k)| k).sum();
    debug_assert!(covered <= alphabet_size);
    let shannon = (-levels
        .iter()
        .map(|&(p, k)| k as f64 * plogp(p))
        .sum::<f64>())
    .max(0.0);
    let empty = (alphabet_size - covered) as f64;
    let mixed = -levels
        .iter()
        .map(|&(p, k)| k as f64 * plogp(0.5 * (p + uniform)))
        .sum::<f64>()
        - empty * plogp(0.5 * uniform);
    assemble(shannon, mixed, alphabet_size)
}

impl PatternDistribution {
    pub fn quantifiers(&self) -> Quantifiers {
        statistical_complexity(self.probabilities())
            .expect("pattern distributions are valid by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(m: usize) -> Vec<f64> {
        vec![1.0 / m as f64; m]
    }

    fn degenerate(m: usize) -> Vec<f64> {
        let mut p = vec![0.0; m];
        p[0] = 1.0;
        p
    }

    #[test]
    fn shannon_examples() {
        assert!((shannon_entropy(&uniform(24)).unwrap() - 24f64.ln()).abs() < 1e-12);
        assert!((shannon_entropy(&uniform(24)).unwrap() - 3.17805).abs() < 1e-5);
        assert_eq!(shannon_entropy(&degenerate(24)).unwrap(), 0.0);
        let mut half = vec![0.0; 24];
        half[0] = 0.5;
        half[1] = 0.5;
        assert!((shannon_entropy(&half).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        let h = normalized_entropy(&half).unwrap();
        assert!((h - 2f64.ln() / 24f64.ln()).abs() < 1e-12);
        assert!((h - 0.2181).abs() < 1e-4);
    }

    #[test]
    fn normalized_extremes() {
        for m in [2, 6, 24, 120] {
            assert!((normalized_entropy(&uniform(m)).unwrap() - 1.0).abs() < 1e-12);
            assert_eq!(normalized_entropy(&degenerate(m)).unwrap(), 0.0);
        }
        assert!(normalized_entropy(&[1.0]).is_err());
    }

    #[test]
    fn rejects_invalid_distributions() {
        assert!(shannon_entropy(&[0.5, 0.4]).is_err());
        assert!(shannon_entropy(&[1.5, -0.5]).is_err());
        assert!(shannon_entropy(&[]).is_err());
        assert_eq!(
            disequilibrium(&uniform(3), &uniform(4)).unwrap_err(),
            Error::AlphabetMismatch(3, 4)
        );
    }

    #[test]
    fn disequilibrium_examples() {
        assert_eq!(disequilibrium(&uniform(24), &uniform(24)).unwrap(), 0.0);
        assert!((disequilibrium(&[1.0, 0.0], &[0.5, 0.5]).unwrap() - 1.0).abs() < 1e-12);
        let q0 = disequilibrium_normalization(2);
        assert!((q0 - 4.634746).abs() < 1e-6);
        let q = disequilibrium(&[0.75, 0.25], &[0.5, 0.5]).unwrap();
        // Q0 {S[{0.625,0.375}] - S[{0.75,0.25}]/2 - ln2/2}
        assert!((q - 0.156757).abs() < 1e-6, "{q}");
    }

    #[test]
    fn normalization_pins_degenerate_to_one() {
        for m in [2, 6, 24, 120, 720, 5040, 40320, 362880] {
            let q = disequilibrium(&degenerate(m), &uniform(m)).unwrap();
            assert!((q - 1.0).abs() < 1e-12, "M={m}: {q}");
        }
    }

    #[test]
    fn complexity_extremes() {
        let u = statistical_complexity(&uniform(24)).unwrap();
        assert!(u.complexity.abs() < 1e-12);
        assert!((u.entropy - 1.0).abs() < 1e-12);
        let d = statistical_complexity(&degenerate(24)).unwrap();
        assert_eq!(d.complexity, 0.0);
        assert_eq!(d.entropy, 0.0);
    }

    #[test]
    fn levels_match_explicit() {
        let m = 24;
        let mut p = vec![0.0; m];
        p[0] = 0.4;
        for v in p.iter_mut().skip(1).take(5) {
            *v = 0.12;
        }
        let explicit = statistical_complexity(&p).unwrap();
        let levels = complexity_of_levels(&[(0.4, 1), (0.12, 5)], m);
        assert!((explicit.entropy - levels.entropy).abs() < 1e-13);
        assert!((explicit.complexity - levels.complexity).abs() < 1e-13);
    }
}
