//! Rotationally symmetric asymptotically hyperbolic 3-metrics: Hawking mass,
//! renormalized volume, inverse mean curvature flow of spheres, coordinate-ball
//! isoperimetric profiles and a metric whose large balls fail to be isoperimetric.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the aliases below fix `f64`.

// `!(x > 0)` is used on purpose so that NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod counterexample;
pub mod error;
pub mod imcf;
pub mod isoprofile;
pub mod metric;
pub mod numerics;
pub mod quantities;
mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Metric = metric::RadialMetric<f64>;
pub type Profile = metric::HProfile<f64>;
pub type Warp = metric::Warp<f64>;
pub type Tolerances = numerics::Tolerances<f64>;
pub type SphereGeom = quantities::SphereGeom<f64>;
pub type FlowSample = imcf::FlowSample<f64>;
pub type ProfileSample = isoprofile::ProfileSample<f64>;
pub type ExpansionReport = isoprofile::ExpansionReport<f64>;
pub type Variant = isoprofile::ExpansionVariant<f64>;
pub type CounterexampleParams = counterexample::CounterexampleParams<f64>;
pub type CounterexampleReport = counterexample::CounterexampleReport<f64>;
