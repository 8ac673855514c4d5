//! Randomised comparison of the analytic membership predicate against the pentagon oracle.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moduli::curves::{gamma_residual, CurveKind, CurveSpec};
use crate::moduli::membership::analytic_in_moduli;
use crate::moduli::regions::DividingCircle;
use crate::pentagon::oracle_in_moduli;
use crate::projection::{to_chart, ChartId, Solid};
use crate::sampling::{SphereSampler, CHUNK};
use crate::sphere::UnitVec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub solid: Solid,
    pub samples: u64,
    pub seed: u64,
    /// Points closer than this (radians) to a dividing circle or a boundary-curve quadric are skipped.
    pub band: f64,
}

impl VerifyConfig {
    pub const DEFAULT_BAND: f64 = 1e-6;

    pub fn new(solid: Solid, samples: u64, seed: u64) -> Self {
        VerifyConfig { solid, samples, seed, band: Self::DEFAULT_BAND }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 1 {
            return Err(Error::InvalidArgument("samples must be at least 1".into()));
        }
        if !(self.band >= 0.0) {
            return Err(Error::InvalidArgument("band must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Disagreement {
    pub index: u64,
    pub xi: [f64; 3],
    /// M-chart coordinate, absent at the antipode of M.
    pub z_m: Option<[f64; 2]>,
    pub analytic: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: u32,
    pub samples: u64,
    pub seed: u64,
    pub band: f64,
    pub checked: u64,
    pub skipped: u64,
    pub in_moduli: u64,
    pub agree: bool,
    pub disagreements: Vec<Disagreement>,
    pub elapsed: f64,
}

/// Within `band` of a dividing circle or of the conic carrying a boundary curve.
///
/// The quadric test is a first-order distance bound: its gradient on the sphere is at most 2λ + 2.
pub fn near_boundary(solid: Solid, p: &UnitVec, band: f64) -> bool {
    let s = band.sin();
    if DividingCircle::all(solid).iter().any(|c| p.as_vector().dot(&c.normal(solid)).abs() < s) {
        return true;
    }
    CurveKind::ALL.iter().any(|&k| {
        let spec = CurveSpec::new(k, solid);
        gamma_residual(&spec, p).abs() < (2.0 * spec.lambda + 2.0) * band
    })
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let started = Instant::now();
    let solid = cfg.solid;
    let sampler = SphereSampler::new(cfg.seed);
    let chunks = cfg.samples.div_ceil(CHUNK);
    let per_chunk: Vec<(u64, u64, u64, Vec<Disagreement>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let count = CHUNK.min(cfg.samples - start);
            let (mut checked, mut skipped, mut inside) = (0, 0, 0);
            let mut bad = Vec::new();
            for (k, p) in sampler.points(start, count).enumerate() {
                if cfg.band > 0.0 && near_boundary(solid, &p, cfg.band) {
                    skipped += 1;
                    continue;
                }
                checked += 1;
                let analytic = analytic_in_moduli(solid, &p);
                let oracle = oracle_in_moduli(solid, &p);
                inside += analytic as u64;
                if analytic != oracle {
                    let z_m = to_chart(&p, ChartId::M, solid).ok().map(|c| [c.z.re, c.z.im]);
                    bad.push(Disagreement { index: start + k as u64, xi: p.to_array(), z_m, analytic, oracle });
                }
            }
            (checked, skipped, inside, bad)
        })
        .collect();
    let mut report = VerifyReport {
        n: solid.n(),
        samples: cfg.samples,
        seed: cfg.seed,
        band: cfg.band,
        checked: 0,
        skipped: 0,
        in_moduli: 0,
        agree: true,
        disagreements: Vec::new(),
        elapsed: 0.0,
    };
    for (checked, skipped, inside, bad) in per_chunk {
        report.checked += checked;
        report.skipped += skipped;
        report.in_moduli += inside;
        report.disagreements.extend(bad);
    }
    report.agree = report.disagreements.is_empty();
    report.elapsed = started.elapsed().as_secs_f64();
    Ok(report)
}
