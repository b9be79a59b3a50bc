//! Squared principal cosines y(E, E₀) of a Haar-random E.
//!
//! Everything zonal depends on E only through y, so the Monte Carlo code
//! samples y directly. For E₀ = span(e₁..e_κ) and E spanned by an n×κ
//! Gaussian G = [X; Y], the y_j are the eigenvalues of (GᵀG)⁻¹ XᵀX. For
//! k > n/2 the law of the nontrivial cosines on `Gr_k` equals that on
//! `Gr_{n−k}` (pass to orthogonal complements), so only κ = min(k, n−k)
//! matters.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::grassmann::{haar_sample, principal_cosines, Subspace};

/// Draws the κ squared cosines between a Haar point of `Gr_k(ℝⁿ)` and a base
/// point, sorted non-increasing.
#[derive(Clone, Debug)]
pub enum CosineSampler {
    /// Base point span(e₁..e_k); uses the closed-form reduction above.
    Canonical { n: usize, kappa: usize },
    /// Arbitrary base point; samples full frames and takes an SVD.
    Base(Subspace),
}

impl CosineSampler {
    pub fn canonical(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= k <= n-1, got n={n}, k={k}"
            )));
        }
        Ok(Self::Canonical {
            n,
            kappa: k.min(n - k),
        })
    }

    pub fn about(base: Subspace) -> Self {
        Self::Base(base)
    }

    pub fn n(&self) -> usize {
        match self {
            Self::Canonical { n, .. } => *n,
            Self::Base(b) => b.n(),
        }
    }

    pub fn kappa(&self) -> usize {
        match self {
            Self::Canonical { kappa, .. } => *kappa,
            Self::Base(b) => b.kappa(),
        }
    }

    /// Writes one draw of (y₁ ≥ … ≥ y_κ) into `out`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [f64]) {
        match self {
            Self::Canonical { n, kappa } => canonical_draw(*n, *kappa, rng, out),
            Self::Base(base) => {
                let e = haar_sample(base.n(), base.k(), rng).expect("valid dimensions");
                let y = principal_cosines(&e, base).expect("same Grassmannian");
                out.copy_from_slice(y.values());
            }
        }
    }
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn canonical_draw<R: Rng + ?Sized>(n: usize, kappa: usize, rng: &mut R, out: &mut [f64]) {
    match kappa {
        1 => {
            let x = normal(rng);
            let mut rest = 0.0;
            for _ in 1..n {
                let g = normal(rng);
                rest += g * g;
            }
            out[0] = x * x / (x * x + rest);
        }
        2 => {
            // A = XᵀX from the top 2×2 block, B = A + YᵀY.
            let (x11, x12, x21, x22) = (normal(rng), normal(rng), normal(rng), normal(rng));
            let a11 = x11 * x11 + x21 * x21;
            let a22 = x12 * x12 + x22 * x22;
            let a12 = x11 * x12 + x21 * x22;
            let (mut c11, mut c22, mut c12) = (0.0, 0.0, 0.0);
            for _ in 2..n {
                let (u, v) = (normal(rng), normal(rng));
                c11 += u * u;
                c22 += v * v;
                c12 += u * v;
            }
            let (b11, b22, b12) = (a11 + c11, a22 + c22, a12 + c12);
            // det(A − yB) = qa y² − qb y + qc
            let qa = b11 * b22 - b12 * b12;
            let qb = a11 * b22 + a22 * b11 - 2.0 * a12 * b12;
            let qc = a11 * a22 - a12 * a12;
            let disc = (qb * qb - 4.0 * qa * qc).max(0.0).sqrt();
            let hi = (qb + disc) / (2.0 * qa);
            // product of roots is qc / qa; avoids cancellation in the small root
            let lo = if hi > 0.0 { qc / (qa * hi) } else { 0.0 };
            out[0] = hi.clamp(0.0, 1.0);
            out[1] = lo.clamp(0.0, 1.0).min(out[0]);
        }
        _ => {
            let g = DMatrix::from_fn(n, kappa, |_, _| normal(rng));
            let top = g.rows(0, kappa);
            let a = top.transpose() * top;
            let b = g.transpose() * &g;
            let l = b.cholesky().expect("Gaussian Gram matrix is positive definite").unpack();
            let linv = l.try_inverse().expect("triangular factor is invertible");
            let c = &linv * a * linv.transpose();
            let mut ev: Vec<f64> = c
                .symmetric_eigenvalues()
                .iter()
                .map(|v| v.clamp(0.0, 1.0))
                .collect();
            ev.sort_by(|x, y| y.total_cmp(x));
            out.copy_from_slice(&ev);
        }
    }
}
