//! Cross-series descriptive statistics and mean tests against a reference
//! series, plus number formatting shared by the writers.

use permplane::{mean_equality_test, summarize, MeanTestResult, SummaryStats, Trajectory};
use serde::Serialize;

use crate::error::PipelineError;

/// p-values below this print as zero.
pub const P_VALUE_FLOOR: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MeanTest {
    /// This column is the reference; nothing to test.
    Reference,
    /// No reference series configured.
    Skipped,
    /// Both groups constant with equal means.
    NotApplicable,
    Tested(MeanTestResult),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryColumn {
    pub series: String,
    pub entropy: SummaryStats,
    pub test: MeanTest,
}

/// Descriptive statistics of each series' window entropies and, when a
/// reference is given, the equality-of-means test of each series against it.
pub fn summary_table(
    trajectories: &[&Trajectory],
    reference: Option<&str>,
) -> Result<Vec<SummaryColumn>, PipelineError> {
    let reference_h = reference.map(|name| {
        trajectories
            .iter()
            .find(|t| t.series_name == name)
            .map(|t| t.entropies())
            .ok_or_else(|| {
                PipelineError::Config(format!("reference series {name:?} was not analysed"))
            })
    });
    let reference_h = reference_h.transpose()?;

    trajectories
        .iter()
        .map(|t| {
            let h = t.entropies();
            let analysis = |source| PipelineError::Analysis {
                series: t.series_name.clone(),
                stage: "summary statistics",
                source,
            };
            let entropy = summarize(&h).map_err(analysis)?;
            let test = match (&reference_h, reference) {
                (Some(_), Some(r)) if r == t.series_name => MeanTest::Reference,
                (Some(ref_h), _) => match mean_equality_test(&h, ref_h) {
                    Ok(result) => MeanTest::Tested(result),
                    Err(permplane::Error::NotApplicable) => MeanTest::NotApplicable,
                    Err(source) => {
                        return Err(PipelineError::Analysis {
                            series: t.series_name.clone(),
                            stage: "mean equality test",
                            source,
                        })
                    }
                },
                _ => MeanTest::Skipped,
            };
            Ok(SummaryColumn {
                series: t.series_name.clone(),
                entropy,
                test,
            })
        })
        .collect()
}

/// Six significant digits, fixed notation where reasonable.
pub fn sig6(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "NaN".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0.00000".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=9).contains(&magnitude) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn format_p_value(p: f64) -> String {
    if p < P_VALUE_FLOOR {
        "0.00000".into()
    } else {
        sig6(p)
    }
}

/// Row labels and cells of the report, one column per series. F and p are
/// blank where no test applies ("NA" when the test is undefined).
pub fn table_rows(columns: &[SummaryColumn]) -> Vec<(&'static str, Vec<String>)> {
    let stat = |f: fn(&SummaryStats) -> f64| -> Vec<String> {
        columns.iter().map(|c| sig6(f(&c.entropy))).collect()
    };
    let test = |f: fn(&MeanTestResult) -> String| -> Vec<String> {
        columns
            .iter()
            .map(|c| match &c.test {
                MeanTest::Tested(r) => f(r),
                MeanTest::NotApplicable => "NA".into(),
                MeanTest::Reference | MeanTest::Skipped => String::new(),
            })
            .collect()
    };
    vec![
        ("Mean", stat(|s| s.mean)),
        ("Median", stat(|s| s.median)),
        ("StdDev", stat(|s| s.std_dev)),
        ("Min", stat(|s| s.min)),
        ("Max", stat(|s| s.max)),
        ("F", test(|r| sig6(r.f_statistic))),
        ("p-value", test(|r| format_p_value(r.p_value))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.66915), "0.669150");
        assert_eq!(sig6(13.78748), "13.7875");
        assert_eq!(sig6(1.5), "1.50000");
        assert_eq!(sig6(0.0), "0.00000");
        assert_eq!(sig6(f64::INFINITY), "inf");
        assert_eq!(sig6(1.234e-7), "1.23400e-7");
    }

    #[test]
    fn tiny_p_values_print_as_zero() {
        assert_eq!(format_p_value(1e-20), "0.00000");
        assert_eq!(format_p_value(0.0), "0.00000");
        assert_eq!(format_p_value(0.25), "0.250000");
    }
}
