use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be a unit vector (|{name}| = {norm})")]
    NonUnit { name: &'static str, norm: f64 },

    #[error("numeric consistency check failed for {what}: residual {residual:e}")]
    Consistency { what: &'static str, residual: f64 },

    #[error("flux 4-vector is not timelike (j.j = {jj:e})")]
    NonTimelikeFlux { jj: f64 },

    #[error("singular denominator {factor} = {value:e}")]
    Singular { factor: &'static str, value: f64 },

    #[error("xi is antipodal to z (1 + xi.z = {value:e})")]
    AntipodalSpin { value: f64 },

    #[error("negative radicand {value:e} in {what}")]
    NegativeRadicand { what: &'static str, value: f64 },

    #[error("{what} out of domain: {detail}")]
    Domain { what: &'static str, detail: String },

    #[error("total energy P0 = {p0} is below the pair threshold 2 m0 = {threshold}")]
    SubThreshold { p0: f64, threshold: f64 },

    #[error("radius a = {a} is at or beyond the rigidity bound hbar/(4 m0 c) = {bound}")]
    RigidityBound { a: f64, bound: f64 },

    #[error("integration step too large: omega*dt = {omega_dt} (limit {limit})")]
    Stability { omega_dt: f64, limit: f64 },

    #[error("constraint drift {drift:e} exceeded {limit:e} before projection at step {step}")]
    StepSize { drift: f64, limit: f64, step: usize },
}

impl Error {
    pub fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}
