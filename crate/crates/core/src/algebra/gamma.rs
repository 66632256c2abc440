use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::{Vec3, METRIC};

pub type CMat4 = Matrix4<Complex64>;

const UNIT_TOL: f64 = 1e-12;

/// A concrete 4x4 representation of the Dirac algebra together with the
/// rank-one projector built from the constant unit vector `z`.
///
/// The gamma matrices are the standard Dirac ones (gamma^0 = diag(1,1,-1,-1)).
/// `gamma5` and `sigma` use the orientation in which
/// `sigma_a sigma_b = delta_ab + i eps_abc sigma_c` and
/// `gamma^0 gamma^a = -i gamma5 sigma_a` hold simultaneously:
/// `gamma5 = -gamma^0 gamma^1 gamma^2 gamma^3`, `sigma_1 = i gamma^2 gamma^3`
/// (cyclic).
#[derive(Debug, Clone)]
pub struct GammaBasis {
    pub gamma: [CMat4; 4],
    pub gamma5: CMat4,
    pub sigma: [CMat4; 3],
    pub pi_projector: CMat4,
    pub z: Vec3,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn block(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2], cc: [[Complex64; 2]; 2], d: [[Complex64; 2]; 2]) -> CMat4 {
    let mut m = CMat4::zeros();
    for r in 0..2 {
        for s in 0..2 {
            m[(r, s)] = a[r][s];
            m[(r, s + 2)] = b[r][s];
            m[(r + 2, s)] = cc[r][s];
            m[(r + 2, s + 2)] = d[r][s];
        }
    }
    m
}

fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    let o = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        [[o, one], [one, o]],
        [[o, -i], [i, o]],
        [[one, o], [o, -one]],
    ]
}

fn neg2(m: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    [[-m[0][0], -m[0][1]], [-m[1][0], -m[1][1]]]
}

impl GammaBasis {
    pub fn new(z: Vec3) -> Result<Self> {
        let norm = z.norm();
        if (norm - 1.0).abs() > UNIT_TOL {
            return Err(Error::NonUnit { name: "z", norm });
        }
        let o = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        let id2 = [[one, o], [o, one]];
        let zero2 = [[o, o], [o, o]];
        let p = pauli();
        let g0 = block(id2, zero2, zero2, neg2(id2));
        let gk = |k: usize| block(zero2, p[k], neg2(p[k]), zero2);
        let gamma = [g0, gk(0), gk(1), gk(2)];
        let gamma5 = -(gamma[0] * gamma[1] * gamma[2] * gamma[3]);
        let i = c(0.0, 1.0);
        let sigma = [
            gamma[2] * gamma[3] * i,
            gamma[3] * gamma[1] * i,
            gamma[1] * gamma[2] * i,
        ];
        let id = CMat4::identity();
        let z_sigma = sigma[0] * c(z[0], 0.0) + sigma[1] * c(z[1], 0.0) + sigma[2] * c(z[2], 0.0);
        let pi_projector = (id + gamma[0]) * (id + z_sigma) * c(0.25, 0.0);
        Ok(GammaBasis {
            gamma,
            gamma5,
            sigma,
            pi_projector,
            z,
        })
    }

    /// `sigma . a` for a real 3-vector.
    pub fn sigma_dot(&self, a: &Vec3) -> CMat4 {
        self.sigma[0] * c(a[0], 0.0) + self.sigma[1] * c(a[1], 0.0) + self.sigma[2] * c(a[2], 0.0)
    }

    /// Unit column spanning the range of the projector. `Pi = u u^*`.
    pub fn pi_column(&self) -> nalgebra::Vector4<Complex64> {
        // Pi is Hermitian rank one; its largest diagonal entry picks a column
        // with a well-conditioned norm.
        let mut best = 0;
        for k in 1..4 {
            if self.pi_projector[(k, k)].re > self.pi_projector[(best, best)].re {
                best = k;
            }
        }
        let col = self.pi_projector.column(best).into_owned();
        let n = col.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        col / c(n, 0.0)
    }

    pub fn metric(&self, k: usize) -> f64 {
        METRIC[k]
    }

    /// Residuals of every algebraic identity the basis must satisfy.
    pub fn identity_residuals(&self) -> Vec<(&'static str, f64)> {
        let id = CMat4::identity();
        let i = c(0.0, 1.0);
        let maxabs = |m: CMat4| m.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let mut out = Vec::new();

        let mut anti = 0.0f64;
        for l in 0..4 {
            for k in 0..4 {
                let g = if l == k { 2.0 * METRIC[k] } else { 0.0 };
                let r = self.gamma[l] * self.gamma[k] + self.gamma[k] * self.gamma[l] - id * c(g, 0.0);
                anti = anti.max(maxabs(r));
            }
        }
        out.push(("anticommutation", anti));

        let prod = self.gamma[0] * self.gamma[1] * self.gamma[2] * self.gamma[3];
        out.push(("gamma5 = -g0g1g2g3", maxabs(self.gamma5 + prod)));

        let cyc = [(1, 2), (2, 0), (0, 1)];
        let mut sdef = 0.0f64;
        for (a, &(b, cc)) in cyc.iter().enumerate() {
            let r = self.sigma[a] - self.gamma[b + 1] * self.gamma[cc + 1] * i;
            sdef = sdef.max(maxabs(r));
        }
        out.push(("sigma_a = i g^b g^c", sdef));

        let mut pauli_alg = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                let mut rhs = if a == b { id } else { CMat4::zeros() };
                for g in 0..3 {
                    let e = crate::minkowski::levi_civita3(a, b, g);
                    if e != 0.0 {
                        rhs += self.sigma[g] * (i * e);
                    }
                }
                pauli_alg = pauli_alg.max(maxabs(self.sigma[a] * self.sigma[b] - rhs));
            }
        }
        out.push(("sigma algebra", pauli_alg));

        out.push(("gamma5^2 = -1", maxabs(self.gamma5 * self.gamma5 + id)));
        let mut comm = 0.0f64;
        let mut g0ga = 0.0f64;
        let mut herm = maxabs(self.gamma[0].adjoint() - self.gamma[0]);
        let mut g0s = 0.0f64;
        for a in 0..3 {
            comm = comm.max(maxabs(self.gamma5 * self.sigma[a] - self.sigma[a] * self.gamma5));
            g0ga = g0ga.max(maxabs(self.gamma[0] * self.gamma[a + 1] + self.gamma5 * self.sigma[a] * i));
            herm = herm.max(maxabs(self.gamma[a + 1].adjoint() + self.gamma[a + 1]));
            g0s = g0s.max(maxabs(self.gamma[0] * self.sigma[a] - self.sigma[a] * self.gamma[0]));
        }
        out.push(("gamma5 sigma = sigma gamma5", comm));
        out.push(("g0 g^a = -i gamma5 sigma_a", g0ga));
        out.push(("hermiticity of gamma", herm));
        out.push(("g0 sigma = sigma g0", g0s));
        out.push((
            "g0 gamma5 = -gamma5 g0",
            maxabs(self.gamma[0] * self.gamma5 + self.gamma5 * self.gamma[0]),
        ));

        let pi = self.pi_projector;
        out.push(("Pi^2 = Pi", maxabs(pi * pi - pi)));
        out.push(("g0 Pi = Pi", maxabs(self.gamma[0] * pi - pi)));
        out.push(("(z.sigma) Pi = Pi", maxabs(self.sigma_dot(&self.z) * pi - pi)));
        out.push(("Pi gamma5 Pi = 0", maxabs(pi * self.gamma5 * pi)));
        let mut psp = 0.0f64;
        for a in 0..3 {
            psp = psp.max(maxabs(pi * self.sigma[a] * pi - pi * c(self.z[a], 0.0)));
        }
        out.push(("Pi sigma_a Pi = z^a Pi", psp));
        out
    }
}

/// Build the representation for a given unit `z`.
pub fn build_gamma_basis(z: Vec3) -> Result<GammaBasis> {
    GammaBasis::new(z)
}
