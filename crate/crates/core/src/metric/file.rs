use serde::{Deserialize, Serialize};

use super::{HProfile, MetricKind, RadialMetric};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Serialized form of a [`RadialMetric`].
///
/// ```json
/// {"type": "schwarzschild_ads", "mass": 1.0}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MetricFile {
    Hyperbolic,
    SchwarzschildAds {
        mass: f64,
    },
    HProfile {
        r0: f64,
        phi0: f64,
        match_r: f64,
        tail_mass: f64,
        /// Rows `[r, H, dH]`.
        h_samples: Vec<[f64; 3]>,
    },
}

impl MetricFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("metric file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("metric file serializes")
    }

    pub fn build<T: Scalar>(&self) -> Result<RadialMetric<T>> {
        match self {
            MetricFile::Hyperbolic => Ok(RadialMetric::hyperbolic()),
            MetricFile::SchwarzschildAds { mass } => RadialMetric::schwarzschild_ads(T::lit(*mass)),
            MetricFile::HProfile {
                r0,
                phi0,
                match_r,
                tail_mass,
                h_samples,
            } => {
                let rows = h_samples
                    .iter()
                    .map(|row| [T::lit(row[0]), T::lit(row[1]), T::lit(row[2])])
                    .collect();
                RadialMetric::h_profile(
                    T::lit(*r0),
                    T::lit(*phi0),
                    HProfile::sampled(rows)?,
                    T::lit(*match_r),
                    T::lit(*tail_mass),
                )
            }
        }
    }

    /// Serializable description of `metric`. Analytic profiles are tabulated at
    /// `samples` uniformly spaced radii; tabulated profiles keep their rows.
    pub fn from_metric<T: Scalar>(metric: &RadialMetric<T>, samples: usize) -> Self {
        match metric.kind() {
            MetricKind::Hyperbolic => MetricFile::Hyperbolic,
            MetricKind::SchwarzschildAds => MetricFile::SchwarzschildAds {
                mass: metric.mass().as_f64(),
            },
            MetricKind::HProfile => {
                let p = metric.profile_data().expect("profile metric");
                let rows = match p.profile.samples() {
                    Some(rows) => rows.to_vec(),
                    None => p.profile.tabulate(p.r0, p.match_r, samples),
                };
                MetricFile::HProfile {
                    r0: p.r0.as_f64(),
                    phi0: p.phi0.as_f64(),
                    match_r: p.match_r.as_f64(),
                    tail_mass: p.tail_mass.as_f64(),
                    h_samples: rows
                        .iter()
                        .map(|r| [r[0].as_f64(), r[1].as_f64(), r[2].as_f64()])
                        .collect(),
                }
            }
        }
    }
}
