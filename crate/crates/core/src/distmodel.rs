//! Finite-support joint distributions over (input point, label).
//!
//! A [`DiscreteDistribution`] is a weighted list of support points, each
//! carrying a conditional probability vector over labels. Binary problems
//! are the two-label special case with label 0 read as `+1` and label 1 as
//! `-1`.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::CompensatedSum;

/// Absolute tolerance on probability-mass normalization checks.
pub const MASS_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum DistError {
    #[error("invalid parameter `{field}`: {message}")]
    InvalidParameter { field: &'static str, message: String },
    #[error("invalid distribution: {}", .0.join("; "))]
    Invalid(Vec<String>),
}

/// One support point: identifier, optional coordinate in [0, 1], probability
/// mass, and the conditional label law at this point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportPoint {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    pub weight: f64,
    pub cond: Vec<f64>,
}

/// Finite-support joint law: marginal weights over points and a conditional
/// label vector per point. Values are treated as immutable once built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteDistribution {
    pub n_labels: usize,
    pub points: Vec<SupportPoint>,
}

impl DiscreteDistribution {
    /// Builds a distribution, rejecting it if any invariant fails.
    pub fn new(n_labels: usize, points: Vec<SupportPoint>) -> Result<Self, DistError> {
        let dist = Self { n_labels, points };
        let violations = dist.validate();
        if violations.is_empty() {
            Ok(dist)
        } else {
            Err(DistError::Invalid(violations))
        }
    }

    /// Checks every structural invariant; returns one message per violation.
    ///
    /// An empty result means: weights are nonnegative and sum to 1 within
    /// [`MASS_TOL`], every conditional vector has length `n_labels`, entries
    /// in [0, 1] summing to 1 within [`MASS_TOL`], and point ids are unique.
    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        if self.n_labels == 0 {
            violations.push("n_labels must be positive".to_string());
            return violations;
        }
        let mut seen = HashSet::new();
        let mut weight_sum = CompensatedSum::new();
        for (i, p) in self.points.iter().enumerate() {
            if !seen.insert(p.id.as_str()) {
                violations.push(format!("duplicate point id `{}` at point {i}", p.id));
            }
            if !p.weight.is_finite() {
                violations.push(format!("non-finite weight at point {i}"));
            } else if p.weight < 0.0 {
                violations.push(format!("weight {} < 0 at point {i}", p.weight));
            }
            weight_sum.add(p.weight);
            if let Some(x) = p.x {
                if !x.is_finite() {
                    violations.push(format!("non-finite coordinate at point {i}"));
                }
            }
            if p.cond.len() != self.n_labels {
                violations.push(format!(
                    "cond length {} != n_labels {} at point {i}",
                    p.cond.len(),
                    self.n_labels
                ));
                continue;
            }
            let mut cond_sum = CompensatedSum::new();
            for (y, &c) in p.cond.iter().enumerate() {
                if !(0.0..=1.0).contains(&c) {
                    violations.push(format!(
                        "cond entry {c} outside [0, 1] at point {i} label {y}"
                    ));
                }
                cond_sum.add(c);
            }
            let s = cond_sum.value();
            if (s - 1.0).abs() > MASS_TOL {
                violations.push(format!("cond sum {s} != 1 at point {i}"));
            }
        }
        let w = weight_sum.value();
        if (w - 1.0).abs() > MASS_TOL {
            violations.push(format!("weights sum {w} != 1"));
        }
        violations
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Linear scan; fine for spot queries. Hot paths iterate `points` directly.
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.points.iter().position(|p| p.id == id)
    }

    pub fn point(&self, id: &str) -> Option<&SupportPoint> {
        self.index_of(id).map(|i| &self.points[i])
    }

    /// Serializes with 17 significant digits per float (exact round-trip).
    pub fn to_json_string(&self) -> String {
        crate::jsonio::to_json_17sig(self).expect("distribution serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Parameters of the parametric binary family eta(x) = 1/2 + c * x^beta,
/// discretized on `n_points` cell midpoints of [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Figure1Params {
    pub c: f64,
    pub beta: f64,
    pub n_points: usize,
}

impl Figure1Params {
    pub fn validate(&self) -> Result<(), DistError> {
        if !(self.c > 0.0 && self.c < 0.5) {
            return Err(DistError::InvalidParameter {
                field: "c",
                message: format!("must lie in (0, 1/2), got {}", self.c),
            });
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(DistError::InvalidParameter {
                field: "beta",
                message: format!("must be positive, got {}", self.beta),
            });
        }
        if self.n_points < 2 {
            return Err(DistError::InvalidParameter {
                field: "n_points",
                message: format!("must be at least 2, got {}", self.n_points),
            });
        }
        Ok(())
    }
}

/// Discretizes the eta(x) = 1/2 + c * x^beta family on midpoints
/// x_i = (i + 0.5) / N with equal weights 1/N.
///
/// Label 0 is `+1`, label 1 is `-1`; the conditional at x_i is
/// (eta(x_i), 1 - eta(x_i)). The midpoint rule keeps the empirical tail of
/// the minimal margin within 2/N of the continuum tail (t / 2c)^(1/beta).
pub fn make_figure1_distribution(params: &Figure1Params) -> Result<DiscreteDistribution, DistError> {
    params.validate()?;
    let n = params.n_points;
    let w = 1.0 / n as f64;
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let x = (i as f64 + 0.5) / n as f64;
        let eta = 0.5 + params.c * x.powf(params.beta);
        points.push(SupportPoint {
            id: format!("p{i}"),
            x: Some(x),
            weight: w,
            cond: vec![eta, 1.0 - eta],
        });
    }
    DiscreteDistribution::new(2, points)
}

/// Seeded random distribution for property suites.
///
/// Weights are uniform draws, normalized. Conditional vectors are
/// independent positive draws raised to the power 1/concentration and
/// normalized (computed in the log domain so extreme concentrations do not
/// overflow): small `concentration` gives near-vertex vectors, large gives
/// near-uniform ones. Identical seeds produce bit-identical output.
pub fn make_random_distribution(
    seed: u64,
    support_size: usize,
    n_labels: usize,
    concentration: f64,
) -> Result<DiscreteDistribution, DistError> {
    if support_size == 0 {
        return Err(DistError::InvalidParameter {
            field: "support_size",
            message: "must be at least 1".to_string(),
        });
    }
    if n_labels < 2 {
        return Err(DistError::InvalidParameter {
            field: "n_labels",
            message: format!("must be at least 2, got {n_labels}"),
        });
    }
    if !(concentration > 0.0 && concentration.is_finite()) {
        return Err(DistError::InvalidParameter {
            field: "concentration",
            message: format!("must be positive, got {concentration}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let raw: Vec<f64> = (0..support_size).map(|_| open01(&mut rng)).collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|r| r / total).collect();

    let mut points = Vec::with_capacity(support_size);
    for (i, &weight) in weights.iter().enumerate() {
        let logs: Vec<f64> = (0..n_labels)
            .map(|_| {
                let e = -open01(&mut rng).ln();
                e.ln() / concentration
            })
            .collect();
        let m = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let raw_cond: Vec<f64> = logs.iter().map(|l| (l - m).exp()).collect();
        let cond_total: f64 = raw_cond.iter().sum();
        let cond: Vec<f64> = raw_cond.iter().map(|c| c / cond_total).collect();
        points.push(SupportPoint {
            id: format!("p{i}"),
            x: None,
            weight,
            cond,
        });
    }
    DiscreteDistribution::new(n_labels, points)
}

/// Uniform draw from the open interval (0, 1).
fn open01(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(rand::distr::Open01)
}
