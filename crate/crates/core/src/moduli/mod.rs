//! Region division, boundary curves, analytic membership and reduction loci.

pub mod curves;
pub mod mchart;
pub mod membership;
pub mod reduction;
pub mod regions;

pub use curves::{gamma_point, gamma_residual, gamma_samples, CurveKind, CurveSample, CurveSpec, VariableMap};
pub use mchart::{gamma_m_chart, gamma_m_samples, moduli_radius_m, BoundaryCurve};
pub use membership::{analytic_in_moduli, m_chart_in_moduli};
pub use reduction::{
    check_bc_below_gamma_a, reduction_point, reduction_residual, BcGapReport, ReductionKind, ReductionSample,
};
pub use regions::{region_of, BoundaryDescriptor, DividingCircle, RegionId, RegionLocation};
