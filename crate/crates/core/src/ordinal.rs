//! Bandt-Pompe symbolization.
//!
//! A time `s` is mapped to the vector `(x[s-(D-1)τ], ..., x[s-τ], x[s])`. Its
//! ordinal pattern is the permutation `(r0, ..., r(D-1))` of offsets such that
//! `x[s - r(D-1)τ] <= ... <= x[s - r0 τ]`: `r0` is the offset of the largest
//! value and `r(D-1)` that of the smallest. Equal values are ordered so that
//! `r(i) < r(i-1)`, i.e. among ties the earlier observation ranks as larger.
//!
//! Patterns are indexed by their lexicographic (Lehmer) rank so a distribution
//! is a dense histogram of `D!` bins.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// Largest supported embedding dimension (`9! = 362880` bins).
pub const MAX_DIMENSION: usize = 9;

const FACTORIALS: [usize; MAX_DIMENSION + 1] = [1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880];

pub fn factorial(n: usize) -> usize {
    FACTORIALS[n]
}

/// Embedding dimension `D` and delay `τ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrdinalConfig {
    dimension: usize,
    delay: usize,
}

impl OrdinalConfig {
    pub fn new(dimension: usize, delay: usize) -> Result<Self> {
        if !(2..=MAX_DIMENSION).contains(&dimension) {
            return Err(Error::InvalidConfig(format!(
                "embedding dimension must be in 2..={MAX_DIMENSION}, got {dimension}"
            )));
        }
        if delay < 1 {
            return Err(Error::InvalidConfig("embedding delay must be >= 1".into()));
        }
        Ok(Self { dimension, delay })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn delay(&self) -> usize {
        self.delay
    }

    /// Number of distinct patterns, `D!`.
    pub fn alphabet_size(&self) -> usize {
        factorial(self.dimension)
    }

    /// Distance in rows between the first and last element of a pattern.
    pub fn span(&self) -> usize {
        (self.dimension - 1) * self.delay
    }

    /// Shortest series that yields at least one pattern.
    pub fn min_length(&self) -> usize {
        self.span() + 1
    }
}

impl Default for OrdinalConfig {
    fn default() -> Self {
        Self {
            dimension: 4,
            delay: 1,
        }
    }
}

/// One ordinal pattern together with its lexicographic index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrdinalPattern {
    ranks: Vec<usize>,
    index: usize,
}

impl OrdinalPattern {
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let index = encode_pattern(&ranks)?;
        Ok(Self { ranks, index })
    }

    pub fn from_index(index: usize, dimension: usize) -> Result<Self> {
        let ranks = decode_pattern(index, dimension)?;
        Ok(Self { ranks, index })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn dimension(&self) -> usize {
        self.ranks.len()
    }
}

fn check_permutation(ranks: &[usize]) -> Result<()> {
    let n = ranks.len();
    if !(1..=MAX_DIMENSION).contains(&n) {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = [false; MAX_DIMENSION];
    for &r in ranks {
        if r >= n || seen[r] {
            return Err(Error::NotAPermutation(n));
        }
        seen[r] = true;
    }
    Ok(())
}

/// Lexicographic rank of a permutation of `0..D`.
pub fn encode_pattern(ranks: &[usize]) -> Result<usize> {
    check_permutation(ranks)?;
    Ok(lehmer_rank(ranks))
}

fn lehmer_rank(ranks: &[usize]) -> usize {
    let n = ranks.len();
    let mut index = 0;
    for i in 0..n {
        let smaller = ranks[i + 1..].iter().filter(|&&r| r < ranks[i]).count();
        index += smaller * FACTORIALS[n - 1 - i];
    }
    index
}

/// Inverse of [`encode_pattern`].
pub fn decode_pattern(index: usize, dimension: usize) -> Result<Vec<usize>> {
    if !(1..=MAX_DIMENSION).contains(&dimension) {
        return Err(Error::InvalidConfig(format!(
            "dimension must be in 1..={MAX_DIMENSION}, got {dimension}"
        )));
    }
    if index >= FACTORIALS[dimension] {
        return Err(Error::IndexOutOfRange { index, dimension });
    }
    let mut pool: Vec<usize> = (0..dimension).collect();
    let mut rest = index;
    let mut ranks = Vec::with_capacity(dimension);
    for i in 0..dimension {
        let weight = FACTORIALS[dimension - 1 - i];
        ranks.push(pool.remove(rest / weight));
        rest %= weight;
    }
    Ok(ranks)
}

/// Index of the pattern of `D` values given in time order, without validation.
///
/// Positions are sorted by value descending, ties by time ascending; the rank
/// at slot `i` is the offset `D-1-position`.
#[inline]
fn pattern_index_of(window: impl Fn(usize) -> f64, dimension: usize) -> usize {
    let mut order = [0usize; MAX_DIMENSION];
    for j in 0..dimension {
        // insertion sort, stable in time
        let v = window(j);
        let mut k = j;
        while k > 0 && window(order[k - 1]) < v {
            order[k] = order[k - 1];
            k -= 1;
        }
        order[k] = j;
    }
    let mut ranks = [0usize; MAX_DIMENSION];
    for i in 0..dimension {
        ranks[i] = dimension - 1 - order[i];
    }
    lehmer_rank(&ranks[..dimension])
}

/// Ordinal pattern of `window`, which holds `(x[s-(D-1)τ], ..., x[s])` in time
/// order.
pub fn extract_pattern(window: &[f64], config: &OrdinalConfig) -> Result<OrdinalPattern> {
    let d = config.dimension();
    if window.len() != d {
        return Err(Error::Shape {
            expected: d,
            actual: window.len(),
        });
    }
    if let Some(position) = window.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            position,
            value: window[position],
        });
    }
    let index = pattern_index_of(|j| window[j], d);
    OrdinalPattern::from_index(index, d)
}

/// Pattern index for every admissible time `s`, in order. Entry `k` is the
/// pattern whose first element is row `k`.
pub fn pattern_sequence(values: &[f64], config: &OrdinalConfig) -> Result<Vec<usize>> {
    let span = config.span();
    if values.len() < span + 1 {
        return Err(Error::SeriesTooShort {
            required: span + 1,
            actual: values.len(),
        });
    }
    if let Some(position) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            position,
            value: values[position],
        });
    }
    let (d, tau) = (config.dimension(), config.delay());
    Ok((0..values.len() - span)
        .map(|start| pattern_index_of(|j| values[start + j * tau], d))
        .collect())
}

/// Dense `D!`-bin histogram of ordinal patterns and its relative frequencies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternDistribution {
    dimension: usize,
    counts: Vec<u64>,
    probabilities: Vec<f64>,
    total: u64,
}

impl PatternDistribution {
    /// Builds the distribution from a histogram. `counts.len()` must be `D!`
    /// for some supported `D` and the total must be positive.
    pub fn from_counts(dimension: usize, counts: Vec<u64>) -> Result<Self> {
        if !(2..=MAX_DIMENSION).contains(&dimension) || counts.len() != FACTORIALS[dimension] {
            return Err(Error::InvalidDistribution(format!(
                "{} bins do not match dimension {dimension}",
                counts.len()
            )));
        }
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::InvalidDistribution("no patterns counted".into()));
        }
        let probabilities = counts.iter().map(|&c| c as f64 / total as f64).collect();
        Ok(Self {
            dimension,
            counts,
            probabilities,
            total,
        })
    }

    /// Histogram of a precomputed pattern sequence.
    pub fn from_sequence(dimension: usize, patterns: &[usize]) -> Result<Self> {
        let mut counts = vec![0u64; factorial(dimension)];
        for &p in patterns {
            counts[p] += 1;
        }
        Self::from_counts(dimension, counts)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    /// Number of embedding vectors, `N - (D-1)τ`.
    pub fn total_vectors(&self) -> u64 {
        self.total
    }

    /// Count of a pattern given by its ranks.
    pub fn count_of(&self, ranks: &[usize]) -> Result<u64> {
        if ranks.len() != self.dimension {
            return Err(Error::Shape {
                expected: self.dimension,
                actual: ranks.len(),
            });
        }
        Ok(self.counts[encode_pattern(ranks)?])
    }
}

/// Relative frequency of each ordinal pattern over all admissible times.
pub fn pattern_distribution(
    series: &TimeSeries,
    config: &OrdinalConfig,
) -> Result<PatternDistribution> {
    distribution_of_values(series.values(), config)
}

pub(crate) fn distribution_of_values(
    values: &[f64],
    config: &OrdinalConfig,
) -> Result<PatternDistribution> {
    let patterns = pattern_sequence(values, config)?;
    PatternDistribution::from_sequence(config.dimension(), &patterns)
}
