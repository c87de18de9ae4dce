//! Minimum and maximum statistical complexity as a function of normalized
//! entropy, for an alphabet of `M` bins.
//!
//! The lower envelope is traced by `{p, q, ..., q}` with `q = (1-p)/(M-1)`
//! and `p` running from `1/M` to 1. The upper envelope is traced by the
//! families with `n` bins exactly zero, one bin at `p ∈ [0, 1/(M-n)]` and the
//! remaining `M-n-1` bins sharing `1-p` equally.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::factorial;
use crate::quantifiers::complexity_of_levels;

/// Default number of samples per generating family.
pub const DEFAULT_GRID: usize = 2000;
/// Number of uniform entropy bins used to merge the upper families.
pub const ENVELOPE_BINS: usize = 2000;
/// Containment tolerance on top of the interpolation slack.
pub const CONTAINMENT_TOLERANCE: f64 = 1e-9;

// Above this alphabet size the upper families are sampled in proportion to the
// entropy range they cover instead of `grid` points each.
const FULL_GRID_MAX_ALPHABET: usize = 720;
const BISECTION_STEPS: usize = 100;
const SLACK_PROBES: usize = 4;

/// A point on one of the envelopes with the parameters that generate it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub entropy: f64,
    pub complexity: f64,
    /// Bins set exactly to zero in the generating distribution.
    pub zeros: usize,
    /// Probability of the distinguished bin.
    pub peak: f64,
}

fn check_args(alphabet_size: usize, grid: usize) -> Result<()> {
    if alphabet_size < 2 {
        return Err(Error::InvalidConfig(format!(
            "alphabet size must be >= 2, got {alphabet_size}"
        )));
    }
    if grid < 2 {
        return Err(Error::InvalidConfig(format!(
            "grid size must be >= 2, got {grid}"
        )));
    }
    Ok(())
}

fn family_levels(nonzero: usize, peak: f64) -> [(f64, usize); 2] {
    [
        (peak, 1),
        ((1.0 - peak) / (nonzero - 1) as f64, nonzero - 1),
    ]
}

fn family_point(alphabet_size: usize, zeros: usize, peak: f64) -> CurvePoint {
    let q = complexity_of_levels(&family_levels(alphabet_size - zeros, peak), alphabet_size);
    CurvePoint {
        entropy: q.entropy,
        complexity: q.complexity,
        zeros,
        peak,
    }
}

/// Generating distribution of a lower-envelope point.
pub fn min_family_distribution(alphabet_size: usize, peak: f64) -> Vec<f64> {
    max_family_distribution(alphabet_size, 0, peak)
}

/// Generating distribution of an upper-envelope point with `zeros` empty bins.
pub fn max_family_distribution(alphabet_size: usize, zeros: usize, peak: f64) -> Vec<f64> {
    let nonzero = alphabet_size - zeros;
    let rest = (1.0 - peak) / (nonzero - 1) as f64;
    let mut p = vec![0.0; alphabet_size];
    p[0] = peak;
    for v in &mut p[1..nonzero] {
        *v = rest;
    }
    p
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + step * i as f64 })
}

/// Lower envelope: `grid` points of the family, `p ∈ [1/M, 1]`, placed at
/// uniformly spaced entropies and sorted by entropy.
pub fn min_complexity_curve(alphabet_size: usize, grid: usize) -> Result<Vec<CurvePoint>> {
    check_args(alphabet_size, grid)?;
    let lo = 1.0 / alphabet_size as f64;
    let points = linspace(0.0, 1.0, grid)
        .enumerate()
        .map(|(i, h)| match i {
            0 => family_point(alphabet_size, 0, 1.0),
            i if i + 1 == grid => family_point(alphabet_size, 0, lo),
            _ => solve_family(alphabet_size, 0, h, (lo, 1.0), false),
        })
        .collect();
    Ok(sorted_strict(points))
}

/// Upper envelope: every family sampled on `p ∈ [0, 1/(M-n)]` at uniformly
/// spaced entropies over the range it covers, merged by keeping
/// the largest complexity within each of [`ENVELOPE_BINS`] entropy bins.
/// The endpoints `(0, 0)` and `(1, 0)` are always present.
pub fn max_complexity_curve(alphabet_size: usize, grid: usize) -> Result<Vec<CurvePoint>> {
    check_args(alphabet_size, grid)?;
    let m = alphabet_size;
    let ln_m = (m as f64).ln();
    let mut best: Vec<Option<CurvePoint>> = vec![None; ENVELOPE_BINS];
    for nonzero in 2..=m {
        let samples = if m <= FULL_GRID_MAX_ALPHABET {
            grid
        } else {
            let width = (nonzero as f64 / (nonzero - 1) as f64).ln() / ln_m;
            ((4.0 * grid as f64 * width).ceil() as usize).clamp(3, grid)
        };
        let zeros = m - nonzero;
        let hi = 1.0 / nonzero as f64;
        let h_lo = ((nonzero - 1) as f64).ln() / ln_m;
        let h_hi = (nonzero as f64).ln() / ln_m;
        for (i, h) in linspace(h_lo, h_hi, samples).enumerate() {
            let point = match i {
                0 => family_point(m, zeros, 0.0),
                i if i + 1 == samples => family_point(m, zeros, hi),
                _ => solve_family(m, zeros, h, (0.0, hi), true),
            };
            let bin = ((point.entropy * ENVELOPE_BINS as f64) as usize).min(ENVELOPE_BINS - 1);
            match &best[bin] {
                Some(b) if b.complexity >= point.complexity => {}
                _ => best[bin] = Some(point),
            }
        }
    }
    let mut points: Vec<CurvePoint> = Vec::with_capacity(ENVELOPE_BINS + m);
    points.extend(best.into_iter().flatten());
    // Family joints (uniform over k bins) are corners of the envelope.
    if m <= FULL_GRID_MAX_ALPHABET {
        points.extend((2..=m).map(|k| family_point(m, m - k, 1.0 / k as f64)));
    }
    points.push(family_point(m, m - 2, 0.0));
    points.push(family_point(m, 0, 1.0 / m as f64));
    Ok(sorted_strict(points))
}

fn sorted_strict(mut points: Vec<CurvePoint>) -> Vec<CurvePoint> {
    points.sort_by(|a, b| a.entropy.total_cmp(&b.entropy));
    points.dedup_by(|b, a| {
        if a.entropy == b.entropy {
            if b.complexity > a.complexity {
                *a = *b;
            }
            true
        } else {
            false
        }
    });
    points
}

/// Solves `H(peak) = entropy` on a family by bisection; `increasing` tells the
/// direction of `H` in `peak` on `[lo, hi]`.
fn solve_family(
    alphabet_size: usize,
    zeros: usize,
    entropy: f64,
    (mut lo, mut hi): (f64, f64),
    increasing: bool,
) -> CurvePoint {
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let h = family_point(alphabet_size, zeros, mid).entropy;
        if (h < entropy) == increasing {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    family_point(alphabet_size, zeros, 0.5 * (lo + hi))
}

/// Lower-envelope complexity at `entropy`, solved on the generating family.
pub fn exact_min_complexity(alphabet_size: usize, entropy: f64) -> f64 {
    let lo = 1.0 / alphabet_size as f64;
    solve_family(alphabet_size, 0, entropy, (lo, 1.0), false).complexity
}

/// Upper-envelope complexity at `entropy`, solved on the family whose entropy
/// range `[ln(k-1)/ln M, ln k/ln M]` contains it.
pub fn exact_max_complexity(alphabet_size: usize, entropy: f64) -> f64 {
    let ln_m = (alphabet_size as f64).ln();
    let mut nonzero = ((entropy * ln_m).exp().ceil() as usize).clamp(2, alphabet_size);
    while nonzero > 2 && ((nonzero - 1) as f64).ln() / ln_m > entropy {
        nonzero -= 1;
    }
    while nonzero < alphabet_size && (nonzero as f64).ln() / ln_m < entropy {
        nonzero += 1;
    }
    let hi = 1.0 / nonzero as f64;
    solve_family(
        alphabet_size,
        alphabet_size - nonzero,
        entropy,
        (0.0, hi),
        true,
    )
    .complexity
}

/// One row of a [`BoundsCurve`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsSample {
    pub entropy: f64,
    pub c_min: f64,
    pub c_max: f64,
}

/// Both envelopes on a common entropy grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsCurve {
    alphabet_size: usize,
    samples: Vec<BoundsSample>,
    /// Largest gap between linear interpolation and the exact envelopes,
    /// probed inside every segment.
    slack: f64,
}

fn interpolate(points: &[(f64, f64)], x: f64) -> f64 {
    let i = points.partition_point(|&(h, _)| h < x);
    if i == 0 {
        return points[0].1;
    }
    if i == points.len() {
        return points[points.len() - 1].1;
    }
    let (x0, y0) = points[i - 1];
    let (x1, y1) = points[i];
    if x1 == x0 {
        return y1;
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

impl BoundsCurve {
    pub fn new(alphabet_size: usize, grid: usize) -> Result<Self> {
        let lower: Vec<(f64, f64)> = min_complexity_curve(alphabet_size, grid)?
            .iter()
            .map(|p| (p.entropy, p.complexity))
            .collect();
        let upper: Vec<(f64, f64)> = max_complexity_curve(alphabet_size, grid)?
            .iter()
            .map(|p| (p.entropy, p.complexity))
            .collect();

        let mut grid_h: Vec<f64> = lower.iter().chain(&upper).map(|&(h, _)| h).collect();
        grid_h.sort_by(f64::total_cmp);
        grid_h.dedup();

        let samples: Vec<BoundsSample> = grid_h
            .iter()
            .map(|&h| BoundsSample {
                entropy: h,
                c_min: interpolate(&lower, h),
                c_max: interpolate(&upper, h),
            })
            .collect();

        let mut slack: f64 = 0.0;
        for pair in samples.windows(2) {
            let (h0, h1) = (pair[0].entropy, pair[1].entropy);
            for j in 1..=SLACK_PROBES {
                let h = h0 + (h1 - h0) * j as f64 / (SLACK_PROBES + 1) as f64;
                slack = slack
                    .max(exact_max_complexity(alphabet_size, h) - interpolate(&upper, h))
                    .max(interpolate(&lower, h) - exact_min_complexity(alphabet_size, h));
            }
        }

        Ok(Self {
            alphabet_size,
            samples,
            slack,
        })
    }

    /// Bounds for ordinal patterns of dimension `d` (`M = d!`).
    pub fn for_dimension(dimension: usize, grid: usize) -> Result<Self> {
        if !(2..=crate::ordinal::MAX_DIMENSION).contains(&dimension) {
            return Err(Error::InvalidConfig(format!(
                "unsupported dimension {dimension}"
            )));
        }
        Self::new(factorial(dimension), grid)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn samples(&self) -> &[BoundsSample] {
        &self.samples
    }

    pub fn interpolation_slack(&self) -> f64 {
        self.slack
    }

    fn segment(&self, entropy: f64) -> (BoundsSample, BoundsSample, f64) {
        let s = &self.samples;
        let i = s
            .partition_point(|p| p.entropy < entropy)
            .clamp(1, s.len() - 1);
        let (a, b) = (s[i - 1], s[i]);
        let t = ((entropy - a.entropy) / (b.entropy - a.entropy)).clamp(0.0, 1.0);
        (a, b, t)
    }

    /// Interpolated lower envelope.
    pub fn c_min(&self, entropy: f64) -> f64 {
        let (a, b, t) = self.segment(entropy);
        a.c_min + (b.c_min - a.c_min) * t
    }

    /// Interpolated upper envelope.
    pub fn c_max(&self, entropy: f64) -> f64 {
        let (a, b, t) = self.segment(entropy);
        a.c_max + (b.c_max - a.c_max) * t
    }

    /// True iff `c_min(H) - tol <= C <= c_max(H) + tol` with
    /// `tol = 1e-9 + interpolation slack`.
    pub fn contains(&self, entropy: f64, complexity: f64) -> Result<bool> {
        if !(0.0..=1.0).contains(&entropy) {
            return Err(Error::EntropyOutOfRange(entropy));
        }
        let tol = CONTAINMENT_TOLERANCE + self.slack;
        Ok(complexity >= self.c_min(entropy) - tol && complexity <= self.c_max(entropy) + tol)
    }
}

/// See [`BoundsCurve::contains`].
pub fn in_bounds(entropy: f64, complexity: f64, curve: &BoundsCurve) -> Result<bool> {
    curve.contains(entropy, complexity)
}
