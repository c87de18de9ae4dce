//! Ordinal-pattern (Bandt-Pompe) permutation entropy, Jensen-Shannon
//! statistical complexity and the complexity-entropy causality plane.
//!
//! ```
//! use permplane::{pattern_distribution, OrdinalConfig, TimeSeries};
//!
//! let series = TimeSeries::new("ramp", (0..300).map(f64::from).collect()).unwrap();
//! let dist = pattern_distribution(&series, &OrdinalConfig::new(4, 1).unwrap()).unwrap();
//! let q = dist.quantifiers();
//! assert_eq!((q.entropy, q.complexity), (0.0, 0.0));
//! ```

pub mod bounds;
pub mod error;
pub mod ordinal;
pub mod quantifiers;
pub mod series;
pub mod stats;
pub mod surrogate;
pub mod window;

pub use bounds::{
    in_bounds, max_complexity_curve, min_complexity_curve, BoundsCurve, BoundsSample, CurvePoint,
};
pub use error::{Error, Result};
pub use ordinal::{
    decode_pattern, encode_pattern, extract_pattern, pattern_distribution, OrdinalConfig,
    OrdinalPattern, PatternDistribution,
};
pub use quantifiers::{
    disequilibrium, normalized_entropy, shannon_entropy, statistical_complexity, Quantifiers,
};
pub use series::TimeSeries;
pub use stats::{mean_equality_test, summarize, MeanTestResult, SummaryStats};
pub use surrogate::shuffle_surrogate;
pub use window::{slide, subsample_trajectory, Trajectory, WindowResult, WindowSpec};
