use num_complex::Complex64;

use super::gamma::CMat4;
pub use super::sample::{random_params, random_unit};

/// Truncated Taylor series of the matrix exponential.
pub fn expm_series(m: &CMat4, terms: usize) -> CMat4 {
    let mut sum = CMat4::identity();
    let mut term = CMat4::identity();
    for k in 1..terms {
        term = term * m / Complex64::new(k as f64, 0.0);
        sum += term;
    }
    sum
}
