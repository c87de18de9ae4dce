//! Sliding-window evaluation of the quantifiers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::{pattern_sequence, OrdinalConfig, PatternDistribution};
use crate::quantifiers::Quantifiers;
use crate::series::TimeSeries;

/// Window length, step, optional window cap and ordinal parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSpec {
    length: usize,
    step: usize,
    max_windows: Option<usize>,
    ordinal: OrdinalConfig,
}

impl WindowSpec {
    pub fn new(length: usize, step: usize, ordinal: OrdinalConfig) -> Result<Self> {
        let required = ordinal.span() + ordinal.alphabet_size();
        if length < required {
            return Err(Error::InvalidConfig(format!(
                "window length {length} is below (D-1)τ + D! = {required}"
            )));
        }
        if step < 1 {
            return Err(Error::InvalidConfig("window step must be >= 1".into()));
        }
        Ok(Self {
            length,
            step,
            max_windows: None,
            ordinal,
        })
    }

    /// Keep at most `cap` windows (the earliest ones).
    pub fn with_max_windows(mut self, cap: Option<usize>) -> Result<Self> {
        if cap == Some(0) {
            return Err(Error::InvalidConfig("max windows must be >= 1".into()));
        }
        self.max_windows = cap;
        Ok(self)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn max_windows(&self) -> Option<usize> {
        self.max_windows
    }

    pub fn ordinal(&self) -> &OrdinalConfig {
        &self.ordinal
    }

    /// Fewer than `5 D!` patterns per window give a poorly sampled histogram.
    pub fn is_undersampled(&self) -> bool {
        self.length < 5 * self.ordinal.alphabet_size()
    }

    /// `⌊(N - N_w)/δ⌋ + 1`, capped by `max_windows`; zero if the series is
    /// shorter than one window.
    pub fn window_count(&self, series_len: usize) -> usize {
        if series_len < self.length {
            return 0;
        }
        let n = (series_len - self.length) / self.step + 1;
        self.max_windows.map_or(n, |cap| n.min(cap))
    }
}

impl Default for WindowSpec {
    fn default() -> Self {
        Self {
            length: 300,
            step: 20,
            max_windows: None,
            ordinal: OrdinalConfig::default(),
        }
    }
}

/// Quantifiers of one window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowResult {
    /// One-based window number.
    pub index: usize,
    /// One-based first and last rows covered.
    pub begin_row: usize,
    pub end_row: usize,
    pub begin_label: String,
    pub end_label: String,
    pub quantifiers: Quantifiers,
}

/// Ordered window results for one series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub series_name: String,
    pub spec: WindowSpec,
    pub results: Vec<WindowResult>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.results.len()
    }

    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }

    pub fn entropies(&self) -> Vec<f64> {
        self.results.iter().map(|r| r.quantifiers.entropy).collect()
    }

    pub fn complexities(&self) -> Vec<f64> {
        self.results
            .iter()
            .map(|r| r.quantifiers.complexity)
            .collect()
    }
}

/// Evaluates the quantifiers over windows `[1+(k-1)δ, (k-1)δ+N_w]`,
/// `k = 1, 2, ...`; trailing rows that do not fill a window are dropped.
pub fn slide(series: &TimeSeries, spec: &WindowSpec) -> Result<Trajectory> {
    let n = series.len();
    if n < spec.length {
        return Err(Error::SeriesTooShort {
            required: spec.length,
            actual: n,
        });
    }
    let ordinal = spec.ordinal;
    // patterns[s] starts at row s; a window starting at row b holds patterns
    // b .. b + N_w - span
    let patterns = pattern_sequence(series.values(), &ordinal)?;
    let per_window = spec.length - ordinal.span();
    let count = spec.window_count(n);

    let evaluate = |k: usize| -> WindowResult {
        let begin = k * spec.step;
        let end = begin + spec.length - 1;
        let dist = PatternDistribution::from_sequence(
            ordinal.dimension(),
            &patterns[begin..begin + per_window],
        )
        .expect("window holds at least one pattern");
        WindowResult {
            index: k + 1,
            begin_row: begin + 1,
            end_row: end + 1,
            begin_label: series.label_at(begin),
            end_label: series.label_at(end),
            quantifiers: dist.quantifiers(),
        }
    };

    #[cfg(feature = "parallel")]
    let results = {
        use rayon::prelude::*;
        (0..count).into_par_iter().map(evaluate).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results = (0..count).map(evaluate).collect();

    Ok(Trajectory {
        series_name: series.name().to_string(),
        spec: *spec,
        results,
    })
}

/// Keeps windows whose index is `1 (mod ratio)`, preserving their indices.
pub fn subsample_trajectory(trajectory: &Trajectory, ratio: usize) -> Result<Trajectory> {
    if ratio < 1 {
        return Err(Error::InvalidConfig("subsample ratio must be >= 1".into()));
    }
    Ok(Trajectory {
        series_name: trajectory.series_name.clone(),
        spec: trajectory.spec,
        results: trajectory
            .results
            .iter()
            .filter(|r| (r.index - 1) % ratio == 0)
            .cloned()
            .collect(),
    })
}
