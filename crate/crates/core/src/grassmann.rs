//! Points of `Gr_k(ℝⁿ)` as orthonormal frames, Haar sampling, principal
//! angles, and the linear flow `g_ε = P_{E₀} + ε P_F` that contracts the open
//! Schubert cell onto a base point.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on ‖FᵀF − I‖_max for a frame to count as orthonormal.
pub const FRAME_TOL: f64 = 1e-10;
/// Singular values within this distance outside [0, 1] are clamped.
pub const CLAMP_TOL: f64 = 1e-12;
/// Smallest squared cosine with the base point for which a subspace is
/// treated as transversal to the complement.
pub const TRANSVERSAL_TOL: f64 = 1e-8;

/// A k-dimensional subspace of ℝⁿ given by an orthonormal n×k frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    frame: DMatrix<f64>,
}

impl Subspace {
    /// Wraps a frame that must already be orthonormal with 1 ≤ k ≤ n−1.
    pub fn new(frame: DMatrix<f64>) -> Result<Self> {
        let (n, k) = frame.shape();
        if k == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= k <= n-1, got n={n}, k={k}"
            )));
        }
        let defect = (frame.transpose() * &frame - DMatrix::<f64>::identity(k, k)).amax();
        if defect > FRAME_TOL {
            return Err(Error::InvalidArgument(format!(
                "frame is not orthonormal (defect {defect:e})"
            )));
        }
        Ok(Self { frame })
    }

    /// The span of the columns of `m`, orthonormalized.
    pub fn span_of(m: DMatrix<f64>) -> Result<Self> {
        let k = m.ncols();
        let q = orthonormalize(m)?;
        if q.ncols() != k {
            return Err(Error::InvalidArgument("columns are linearly dependent".into()));
        }
        Self::new(q)
    }

    /// span(e₁, …, e_k).
    pub fn canonical(n: usize, k: usize) -> Result<Self> {
        Self::new(DMatrix::identity(n, k))
    }

    pub fn frame(&self) -> &DMatrix<f64> {
        &self.frame
    }

    pub fn n(&self) -> usize {
        self.frame.nrows()
    }

    pub fn k(&self) -> usize {
        self.frame.ncols()
    }

    /// min(k, n − k), the number of nontrivial principal angles.
    pub fn kappa(&self) -> usize {
        self.k().min(self.n() - self.k())
    }

    /// Orthogonal projection onto the subspace.
    pub fn projector(&self) -> DMatrix<f64> {
        &self.frame * self.frame.transpose()
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        let n = self.n();
        let mut cols = self.frame.clone().resize_horizontally(self.k() + n, 0.0);
        for i in 0..n {
            cols[(i, self.k() + i)] = 1.0;
        }
        let q = orthonormalize(cols).expect("frame extends to a basis");
        Subspace {
            frame: q.columns(self.k(), n - self.k()).into_owned(),
        }
    }

    /// Image under an orthogonal (or any invertible) map.
    pub fn transform(&self, g: &DMatrix<f64>) -> Result<Subspace> {
        Subspace::span_of(g * &self.frame)
    }

    fn check_pair(&self, other: &Subspace) -> Result<()> {
        if self.n() != other.n() || self.k() != other.k() {
            return Err(Error::DimensionMismatch(format!(
                "Gr_{}(R^{}) vs Gr_{}(R^{})",
                self.k(),
                self.n(),
                other.k(),
                other.n()
            )));
        }
        Ok(())
    }
}

/// Orthonormal basis of the column span, dropping numerically dependent
/// columns. Uses two passes of modified Gram–Schmidt.
fn orthonormalize(m: DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = m.nrows();
    let mut basis: Vec<nalgebra::DVector<f64>> = Vec::new();
    for j in 0..m.ncols() {
        let mut v = m.column(j).into_owned();
        let scale = v.norm();
        if scale == 0.0 {
            continue;
        }
        for _ in 0..2 {
            for b in &basis {
                let d = b.dot(&v);
                v.axpy(-d, b, 1.0);
            }
        }
        let norm = v.norm();
        if norm > 1e-9 * scale.max(1.0) {
            basis.push(v / norm);
        }
    }
    if basis.is_empty() {
        return Err(Error::InvalidArgument("zero matrix has no span".into()));
    }
    Ok(DMatrix::from_columns(&basis).resize_vertically(n, 0.0))
}

/// Haar-distributed point of `Gr_k(ℝⁿ)`: the span of an n×k standard
/// Gaussian matrix.
pub fn haar_sample<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Subspace> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    loop {
        let g = DMatrix::from_fn(n, k, |_, _| rng.sample::<f64, _>(StandardNormal));
        if let Ok(s) = Subspace::span_of(g) {
            return Ok(s);
        }
    }
}

/// Haar-distributed n×n orthogonal matrix (QR of a Gaussian matrix with the
/// sign of R's diagonal absorbed).
pub fn haar_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// Squared cosines y_j = cos²θ_j of the κ nontrivial principal angles,
/// sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrincipalCosines(pub Vec<f64>);

impl PrincipalCosines {
    pub fn values(&self) -> &[f64] {
        &self.0
    }

    /// e_j(y), with e_0 = 1.
    pub fn elementary(&self, j: usize) -> f64 {
        elementary_symmetric_values(&self.0, j)
    }
}

/// e_j of a list of numbers.
pub fn elementary_symmetric_values(y: &[f64], j: usize) -> f64 {
    let mut e = vec![0.0; j + 1];
    e[0] = 1.0;
    for &v in y {
        for i in (1..=j).rev() {
            e[i] += e[i - 1] * v;
        }
    }
    e[j]
}

fn clamp_unit(s: f64) -> f64 {
    debug_assert!(s > -CLAMP_TOL && s < 1.0 + CLAMP_TOL, "singular value {s} outside [0,1]");
    s.clamp(0.0, 1.0)
}

/// All k singular values of E₁ᵀE₂, clamped to [0, 1], sorted descending.
fn cross_singular_values(a: &Subspace, b: &Subspace) -> Vec<f64> {
    let cross = a.frame.transpose() * &b.frame;
    let mut s: Vec<f64> = cross.singular_values().iter().map(|&v| clamp_unit(v)).collect();
    s.sort_by(|x, y| y.total_cmp(x));
    s
}

/// Squared cosines of the nontrivial principal angles between `a` and `b`:
/// the eigenvalues of P_a P_b on `a` other than the 2k − n forced ones.
pub fn principal_cosines(a: &Subspace, b: &Subspace) -> Result<PrincipalCosines> {
    a.check_pair(b)?;
    let s = cross_singular_values(a, b);
    let kappa = a.kappa();
    Ok(PrincipalCosines(
        s[s.len() - kappa..].iter().map(|v| v * v).collect(),
    ))
}

/// |cos(E, E′)| = ∏ cos θ_j.
pub fn abs_cosine(a: &Subspace, b: &Subspace) -> Result<f64> {
    a.check_pair(b)?;
    Ok(cross_singular_values(a, b).iter().product())
}

/// σ_j(E): the j-th elementary symmetric function of the squared principal
/// cosines between `e` and `base`.
pub fn sigma_of_subspace(e: &Subspace, base: &Subspace, j: usize) -> Result<f64> {
    let y = principal_cosines(e, base)?;
    if j == 0 || j > y.0.len() {
        return Err(Error::InvalidArgument(format!(
            "sigma index {j} outside 1..={}",
            y.0.len()
        )));
    }
    Ok(y.elementary(j))
}

/// The flow g_ε = P_{E₀} + ε P_F with F = E₀^⊥, acting on the open cell of
/// subspaces transversal to F.
#[derive(Clone, Debug)]
pub struct RescalingFlow {
    base: Subspace,
    complement: Subspace,
}

impl RescalingFlow {
    pub fn new(base: Subspace) -> Self {
        let complement = base.orthogonal_complement();
        Self { base, complement }
    }

    /// Uses a caller-supplied F, which must be the orthogonal complement of
    /// the base point.
    pub fn with_complement(base: Subspace, complement: Subspace) -> Result<Self> {
        let n = base.n();
        if complement.n() != n || complement.k() + base.k() != n {
            return Err(Error::DimensionMismatch("F must have dimension n - k".into()));
        }
        let overlap = (base.frame.transpose() * &complement.frame).amax();
        if overlap > FRAME_TOL {
            return Err(Error::InvalidArgument(format!(
                "F is not orthogonal to E0 (overlap {overlap:e})"
            )));
        }
        Ok(Self { base, complement })
    }

    pub fn base(&self) -> &Subspace {
        &self.base
    }

    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    /// The linear map g_ε.
    pub fn matrix(&self, eps: f64) -> DMatrix<f64> {
        self.base.projector() + self.complement.projector() * eps
    }

    fn check_transversal(&self, e: &Subspace) -> Result<()> {
        self.base.check_pair(e)?;
        let s = cross_singular_values(&self.base, e);
        let smallest = s.last().copied().unwrap_or(1.0).powi(2);
        if smallest <= TRANSVERSAL_TOL {
            return Err(Error::Degenerate(smallest));
        }
        Ok(())
    }

    /// g_ε E.
    pub fn apply(&self, eps: f64, e: &Subspace) -> Result<Subspace> {
        self.check_transversal(e)?;
        Subspace::span_of(self.matrix(eps) * &e.frame)
    }

    /// η_{g_ε}(E) = Jac(g_ε : E → g_ε E)⁻¹, the inverse k-volume distortion.
    pub fn jacobian_factor(&self, eps: f64, e: &Subspace) -> Result<f64> {
        self.check_transversal(e)?;
        let image = self.matrix(eps) * &e.frame;
        let gram = image.transpose() * &image;
        Ok(1.0 / gram.determinant().sqrt())
    }

    /// Graph coordinates: the (n−k)×k matrix A with E = {u + A u : u ∈ E₀},
    /// expressed in the bases of E₀ and F.
    pub fn chart(&self, e: &Subspace) -> Result<DMatrix<f64>> {
        self.check_transversal(e)?;
        let along = self.base.frame.transpose() * &e.frame;
        let across = self.complement.frame.transpose() * &e.frame;
        let inv = along
            .try_inverse()
            .ok_or(Error::Degenerate(0.0))?;
        Ok(across * inv)
    }

    /// Inverse of [`chart`](Self::chart).
    pub fn from_chart(&self, a: &DMatrix<f64>) -> Result<Subspace> {
        if a.shape() != (self.complement.k(), self.base.k()) {
            return Err(Error::DimensionMismatch("chart matrix shape".into()));
        }
        Subspace::span_of(&self.base.frame + &self.complement.frame * a)
    }
}

/// g_ε E for the flow contracting onto `base`.
pub fn rescaling_flow(base: &Subspace, complement: &Subspace, eps: f64, e: &Subspace) -> Result<Subspace> {
    RescalingFlow::with_complement(base.clone(), complement.clone())?.apply(eps, e)
}

/// η_{g_ε}(E) for the flow contracting onto `base`.
pub fn jacobian_factor(base: &Subspace, eps: f64, e: &Subspace) -> Result<f64> {
    RescalingFlow::new(base.clone()).jacobian_factor(eps, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{ks_one_sample, stream_rng, Moments};

    fn span(n: usize, cols: &[&[f64]]) -> Subspace {
        let m = DMatrix::from_fn(n, cols.len(), |i, j| cols[j][i]);
        Subspace::span_of(m).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn frame_validation() {
        assert!(Subspace::new(DMatrix::identity(3, 3)).is_err());
        assert!(Subspace::new(DMatrix::from_element(3, 1, 1.0)).is_err());
        assert!(Subspace::span_of(DMatrix::from_element(3, 2, 1.0)).is_err());
        let mut rng = stream_rng(3, 0);
        for (n, k) in [(2, 1), (5, 2), (6, 4), (7, 3)] {
            let e = haar_sample(n, k, &mut rng).unwrap();
            let defect = (e.frame().transpose() * e.frame() - DMatrix::identity(k, k)).amax();
            assert!(defect <= FRAME_TOL);
            let c = e.orthogonal_complement();
            assert_eq!(c.k(), n - k);
            assert!((e.frame().transpose() * c.frame()).amax() < 1e-12);
        }
        assert!(haar_sample(3, 3, &mut rng).is_err());
    }

    #[test]
    fn principal_cosine_examples() {
        let e = span(4, &[&[1., 0., 0., 0.], &[0., 1., 0., 0.]]);
        assert!(close(principal_cosines(&e, &e).unwrap().values(), &[1.0, 1.0], 1e-12));
        let f = span(4, &[&[1., 0., 0., 0.], &[0., 0., 1., 0.]]);
        assert!(close(principal_cosines(&e, &f).unwrap().values(), &[1.0, 0.0], 1e-12));
        assert!(abs_cosine(&e, &f).unwrap().abs() < 1e-12);
        assert!((abs_cosine(&e, &e).unwrap() - 1.0).abs() < 1e-12);
        let t: f64 = 0.7;
        let l0 = span(2, &[&[1., 0.]]);
        let lt = span(2, &[&[t.cos(), t.sin()]]);
        assert!(close(principal_cosines(&l0, &lt).unwrap().values(), &[t.cos().powi(2)], 1e-12));
        assert!((abs_cosine(&l0, &lt).unwrap() - t.cos().abs()).abs() < 1e-12);
        assert!(principal_cosines(&e, &l0).is_err());
    }

    #[test]
    fn nontrivial_angles_for_large_k() {
        // In R^5, two 3-planes share at least a line; only κ = 2 angles count.
        let mut rng = stream_rng(5, 0);
        let a = haar_sample(5, 3, &mut rng).unwrap();
        let b = haar_sample(5, 3, &mut rng).unwrap();
        let y = principal_cosines(&a, &b).unwrap();
        assert_eq!(y.values().len(), 2);
        let dual = principal_cosines(&a.orthogonal_complement(), &b.orthogonal_complement()).unwrap();
        assert!(close(y.values(), dual.values(), 1e-9));
    }

    #[test]
    fn sigma_values() {
        let mut rng = stream_rng(6, 0);
        let base = Subspace::canonical(6, 3).unwrap();
        for j in 1..=3 {
            let binom = [3.0, 3.0, 1.0][j - 1];
            assert!((sigma_of_subspace(&base, &base, j).unwrap() - binom).abs() < 1e-12);
        }
        let perp = Subspace::new(DMatrix::from_fn(6, 3, |i, j| f64::from(i == j + 3))).unwrap();
        assert!(sigma_of_subspace(&perp, &base, 1).unwrap().abs() < 1e-12);
        let e = haar_sample(6, 3, &mut rng).unwrap();
        let top = sigma_of_subspace(&e, &base, 3).unwrap();
        assert!((top - abs_cosine(&e, &base).unwrap().powi(2)).abs() < 1e-12);
        assert!(sigma_of_subspace(&e, &base, 4).is_err());
    }

    #[test]
    fn haar_line_angle_is_uniform() {
        let mut rng = stream_rng(11, 0);
        let angles: Vec<f64> = (0..100_000)
            .map(|_| {
                let l = haar_sample(2, 1, &mut rng).unwrap();
                let (x, y) = (l.frame()[(0, 0)], l.frame()[(1, 0)]);
                y.atan2(x).rem_euclid(std::f64::consts::PI)
            })
            .collect();
        let ks = ks_one_sample(&angles, |t| (t / std::f64::consts::PI).clamp(0.0, 1.0));
        assert!(ks.p_value > 0.01, "{ks:?}");
    }

    #[test]
    fn haar_mean_squared_cosine() {
        let mut rng = stream_rng(12, 0);
        let base = Subspace::canonical(4, 1).unwrap();
        let mut m = Moments::default();
        for _ in 0..1_000_000 {
            let l = haar_sample(4, 1, &mut rng).unwrap();
            m.push(principal_cosines(&l, &base).unwrap().values()[0]);
        }
        assert!(m.estimate().within_sigmas(0.25, 3.0), "{:?}", m.estimate());
    }

    #[test]
    fn flow_examples() {
        let mut rng = stream_rng(13, 0);
        let base = Subspace::canonical(5, 2).unwrap();
        let flow = RescalingFlow::new(base.clone());
        let e = haar_sample(5, 2, &mut rng).unwrap();
        let same = flow.apply(1.0, &e).unwrap();
        assert!(close(principal_cosines(&same, &e).unwrap().values(), &[1.0, 1.0], 1e-12));
        assert!((flow.jacobian_factor(1.0, &e).unwrap() - 1.0).abs() < 1e-12);
        assert!((flow.jacobian_factor(0.3, &base).unwrap() - 1.0).abs() < 1e-12);
        let near = flow.apply(1e-6, &e).unwrap();
        let y = principal_cosines(&near, &base).unwrap();
        assert!(y.values().iter().all(|&v| (v - 1.0).abs() < 1e-9));
        let eta = flow.jacobian_factor(1e-5, &e).unwrap();
        assert!((eta - 1.0 / abs_cosine(&e, &base).unwrap()).abs() < 1e-4);
    }

    #[test]
    fn flow_rejects_bad_input() {
        let base = Subspace::canonical(4, 2).unwrap();
        let f = base.orthogonal_complement();
        let flow = RescalingFlow::new(base.clone());
        assert!(matches!(flow.apply(0.5, &f), Err(Error::Degenerate(_))));
        assert!(RescalingFlow::with_complement(base.clone(), base.clone()).is_err());
        assert!(rescaling_flow(&base, &f, 0.5, &base).is_ok());
    }

    #[test]
    fn chart_round_trip() {
        let mut rng = stream_rng(14, 0);
        let flow = RescalingFlow::new(Subspace::canonical(6, 2).unwrap());
        let e = haar_sample(6, 2, &mut rng).unwrap();
        let a = flow.chart(&e).unwrap();
        let back = flow.from_chart(&a).unwrap();
        assert!(close(principal_cosines(&back, &e).unwrap().values(), &[1.0, 1.0], 1e-10));
    }
}
