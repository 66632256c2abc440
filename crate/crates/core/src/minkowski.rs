//! Metric helpers in signature (+,-,-,-) and the Levi-Civita symbols.
//!
//! 4-vectors are stored with upper (contravariant) indices. The totally
//! antisymmetric symbol carries lower indices with `eps_{0123} = +1`; the
//! spatial symbol has `eps_{123} = +1`, so that
//! `eps_{abc} = -eps_{abcm} f^m` for `f = (1,0,0,0)`.

use nalgebra::{Vector3, Vector4};

pub type Vec3 = Vector3<f64>;
pub type FourVec = Vector4<f64>;

pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

#[inline]
pub fn dot(a: &FourVec, b: &FourVec) -> f64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

#[inline]
pub fn lower(a: &FourVec) -> FourVec {
    FourVec::new(a[0], -a[1], -a[2], -a[3])
}

/// Spatial part of a 4-vector.
#[inline]
pub fn spatial(a: &FourVec) -> Vec3 {
    Vec3::new(a[1], a[2], a[3])
}

#[inline]
pub fn four(t: f64, s: &Vec3) -> FourVec {
    FourVec::new(t, s[0], s[1], s[2])
}

/// Sign of the permutation `(i, k, l, m)` of `(0, 1, 2, 3)`, zero if any index repeats.
pub fn levi_civita4(i: usize, k: usize, l: usize, m: usize) -> f64 {
    let idx = [i, k, l, m];
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] == idx[b] {
                return 0.0;
            }
        }
    }
    let mut sign = 1.0;
    let mut p = idx;
    for a in 0..4 {
        while p[a] != a {
            let t = p[a];
            p.swap(a, t);
            sign = -sign;
        }
    }
    sign
}

pub fn levi_civita3(a: usize, b: usize, c: usize) -> f64 {
    levi_civita4(0, a + 1, b + 1, c + 1)
}

/// Full contraction `eps_{iklm} a^i b^k c^l d^m`.
pub fn eps_contract(a: &FourVec, b: &FourVec, c: &FourVec, d: &FourVec) -> f64 {
    let m = nalgebra::Matrix4::from_columns(&[*a, *b, *c, *d]);
    // det of the column matrix is exactly eps_{iklm} a^i b^k c^l d^m
    m.determinant()
}

/// Free-index contraction `w_i = eps_{iklm} b^k c^l d^m` (lower index).
pub fn eps_free(b: &FourVec, c: &FourVec, d: &FourVec) -> FourVec {
    let mut out = FourVec::zeros();
    for i in 0..4 {
        let e = FourVec::from_fn(|r, _| if r == i { 1.0 } else { 0.0 });
        out[i] = eps_contract(&e, b, c, d);
    }
    out
}

/// Standard Lorentz boost with 3-velocity `beta` (|beta| < 1) acting on
/// contravariant vectors.
pub fn boost_matrix(beta: &Vec3) -> nalgebra::Matrix4<f64> {
    let b2 = beta.norm_squared();
    let mut l = nalgebra::Matrix4::identity();
    if b2 == 0.0 {
        return l;
    }
    let gamma = 1.0 / (1.0 - b2).sqrt();
    l[(0, 0)] = gamma;
    for a in 0..3 {
        l[(0, a + 1)] = gamma * beta[a];
        l[(a + 1, 0)] = gamma * beta[a];
        for c in 0..3 {
            let delta = if a == c { 1.0 } else { 0.0 };
            l[(a + 1, c + 1)] = delta + (gamma - 1.0) * beta[a] * beta[c] / b2;
        }
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita4(0, 1, 2, 3), 1.0);
        assert_eq!(levi_civita4(1, 0, 2, 3), -1.0);
        assert_eq!(levi_civita4(1, 2, 3, 0), -1.0);
        assert_eq!(levi_civita4(1, 2, 0, 3), 1.0);
        assert_eq!(levi_civita4(0, 0, 2, 3), 0.0);
        assert_eq!(levi_civita3(0, 1, 2), 1.0);
        assert_eq!(levi_civita3(2, 1, 0), -1.0);
    }

    #[test]
    fn spatial_eps_is_minus_eps_f() {
        let f = FourVec::new(1.0, 0.0, 0.0, 0.0);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let lhs = levi_civita3(a, b, c);
                    let rhs = -levi_civita4(a + 1, b + 1, c + 1, 0) * f[0];
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn contraction_matches_symbol_sum() {
        let a = FourVec::new(0.3, -1.2, 0.5, 2.0);
        let b = FourVec::new(1.1, 0.4, -0.7, 0.2);
        let c = FourVec::new(-0.6, 0.9, 1.3, -0.4);
        let d = FourVec::new(0.8, -0.1, 0.25, 1.7);
        let mut sum = 0.0;
        for i in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    for m in 0..4 {
                        sum += levi_civita4(i, k, l, m) * a[i] * b[k] * c[l] * d[m];
                    }
                }
            }
        }
        assert!((sum - eps_contract(&a, &b, &c, &d)).abs() < 1e-12);
        let w = eps_free(&b, &c, &d);
        assert!((w.dot(&a) - sum).abs() < 1e-12);
    }

    #[test]
    fn boost_preserves_interval() {
        let l = boost_matrix(&Vec3::new(0.3, -0.2, 0.5));
        let v = FourVec::new(2.0, 0.1, -0.4, 0.9);
        let w = l * v;
        assert!((dot(&v, &v) - dot(&w, &w)).abs() < 1e-12);
    }
}
