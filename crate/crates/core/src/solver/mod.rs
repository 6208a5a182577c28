//! Periodic 1-D time stepping with generated schemes.

mod convergence;
mod field;
mod linear;
mod nonlinear;
mod profiles;

pub use convergence::{convergence_study, default_sign, ConvergenceConfig, ConvergenceReport, LadderRow};
pub use field::GridField;
pub use linear::{run_linear, step_linear, FloatStencil, LinearProblem, LinearRun, LinearTerm};
pub use nonlinear::{shock_front, step_nonlinear, Burgers, DensityFamily, Identity, NonlinearStepper};
pub use profiles::Profile;
