use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered sequence of finite observations, optionally labelled by date.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    name: String,
    values: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl TimeSeries {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        Self::build(name.into(), values, None)
    }

    pub fn with_labels(
        name: impl Into<String>,
        values: Vec<f64>,
        labels: Vec<String>,
    ) -> Result<Self> {
        Self::build(name.into(), values, Some(labels))
    }

    fn build(name: String, values: Vec<f64>, labels: Option<Vec<String>>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(position) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                position,
                value: values[position],
            });
        }
        if let Some(labels) = &labels {
            if labels.len() != values.len() {
                return Err(Error::LabelMismatch(labels.len(), values.len()));
            }
        }
        Ok(Self {
            name,
            values,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Label of a zero-based row: the date string when present, otherwise the
    /// one-based row number.
    pub fn label_at(&self, row: usize) -> String {
        match &self.labels {
            Some(labels) => labels[row].clone(),
            None => (row + 1).to_string(),
        }
    }

    /// Increments `x[t] - x[t-1]`, each labelled with the later row's label.
    pub fn first_difference(&self) -> Result<Self> {
        if self.values.len() < 2 {
            return Err(Error::SeriesTooShort {
                required: 2,
                actual: self.values.len(),
            });
        }
        let values = self.values.windows(2).map(|w| w[1] - w[0]).collect();
        let labels = self.labels.as_ref().map(|l| l[1..].to_vec());
        Self::build(self.name.clone(), values, labels)
    }

    pub(crate) fn from_parts_unchecked(
        name: String,
        values: Vec<f64>,
        labels: Option<Vec<String>>,
    ) -> Self {
        Self {
            name,
            values,
            labels,
        }
    }
}
