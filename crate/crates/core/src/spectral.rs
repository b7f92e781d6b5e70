//! Periodic grid, discrete Fourier transform, and the singular-integral
//! operator calculus (Hilbert transform, |D|^s, spectral derivative,
//! projections, Hou–Li filter, analytic norms).
//!
//! Fields are real 2π-periodic functions stored as Hermitian-symmetric
//! Fourier coefficients ĉ_k for k = 0..M/2; the coefficients for negative
//! modes are implied by ĉ_{−k} = conj(ĉ_k). The coefficient convention is
//! ĉ_k = (1/M) Σ_j u_j e^{−2πijk/M}, the trapezoidal discretization of
//! (1/2π)∫ u e^{−ikx} dx.
//!
//! The spectral derivative and |D|^s kill the Nyquist mode k = M/2, and the
//! Hilbert transform kills both the mean and the Nyquist mode (−i·ĉ_{M/2}
//! would not be the coefficient of a real field). All operations are pure;
//! grids and fields are shareable across threads.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Result, WaveError};

/// Uniform collocation grid x_j = 2πj/M on [0, 2π), M even.
#[derive(Clone)]
pub struct PeriodicGrid {
    m: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for PeriodicGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PeriodicGrid").field("m", &self.m).finish()
    }
}

impl PartialEq for PeriodicGrid {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl Eq for PeriodicGrid {}

impl PeriodicGrid {
    pub fn new(m: usize) -> Result<Self> {
        if m < 4 || m % 2 != 0 {
            return Err(WaveError::Parameter(format!(
                "grid size must be even and >= 4, got {m}"
            )));
        }
        let mut planner = FftPlanner::new();
        Ok(Self {
            m,
            fwd: planner.plan_fft_forward(m),
            inv: planner.plan_fft_inverse(m),
        })
    }

    /// Number of collocation points.
    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the Nyquist mode, M/2.
    pub fn nyquist(&self) -> usize {
        self.m / 2
    }

    /// Collocation points x_j = 2πj/M.
    pub fn points(&self) -> Vec<f64> {
        (0..self.m).map(|j| self.point(j)).collect()
    }

    pub fn point(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.m as f64
    }

    /// Sample a function at the collocation points.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.m).map(|j| f(self.point(j))).collect()
    }
}

/// Real 2π-periodic function stored spectrally: ĉ_k for k = 0..M/2.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralField {
    grid: PeriodicGrid,
    coeffs: Vec<Complex64>,
}

/// Product evaluation policy for [`SpectralField::multiply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dealias {
    /// Pointwise product on the native grid (aliasing errors allowed).
    Aliased,
    /// Exact product of the retained modes via 3/2 zero-padding.
    Padded,
}

impl SpectralField {
    /// The zero field.
    pub fn zero(grid: &PeriodicGrid) -> Self {
        Self {
            grid: grid.clone(),
            coeffs: vec![Complex64::ZERO; grid.nyquist() + 1],
        }
    }

    /// Build a field directly from coefficients ĉ_0..ĉ_{M/2}. The imaginary
    /// parts of ĉ_0 and ĉ_{M/2} are dropped to keep the field real.
    pub fn from_coeffs(grid: &PeriodicGrid, mut coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.nyquist() + 1 {
            return Err(WaveError::Dimension {
                expected: grid.nyquist() + 1,
                got: coeffs.len(),
            });
        }
        coeffs[0] = Complex64::new(coeffs[0].re, 0.0);
        let ny = grid.nyquist();
        coeffs[ny] = Complex64::new(coeffs[ny].re, 0.0);
        Ok(Self {
            grid: grid.clone(),
            coeffs,
        })
    }

    /// Forward transform of physical values at the collocation points.
    pub fn from_values(grid: &PeriodicGrid, values: &[f64]) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(WaveError::Dimension {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(WaveError::InvalidData(
                "non-finite value in physical input".into(),
            ));
        }
        let m = grid.len();
        let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        grid.fwd.process(&mut buf);
        let scale = 1.0 / m as f64;
        let ny = grid.nyquist();
        let mut coeffs = Vec::with_capacity(ny + 1);
        for (k, c) in buf.iter().take(ny + 1).enumerate() {
            let mut c = c * scale;
            if k == 0 || k == ny {
                c = Complex64::new(c.re, 0.0);
            }
            coeffs.push(c);
        }
        Ok(Self {
            grid: grid.clone(),
            coeffs,
        })
    }

    /// Sample a closure on the grid and transform.
    pub fn from_fn(grid: &PeriodicGrid, f: impl Fn(f64) -> f64) -> Self {
        Self::from_values(grid, &grid.sample(f)).expect("sampled values are finite")
    }

    /// Inverse transform to physical values at the collocation points.
    pub fn to_values(&self) -> Vec<f64> {
        let m = self.grid.len();
        let ny = self.grid.nyquist();
        let mut buf = vec![Complex64::ZERO; m];
        buf[0] = self.coeffs[0];
        for k in 1..ny {
            buf[k] = self.coeffs[k];
            buf[m - k] = self.coeffs[k].conj();
        }
        buf[ny] = self.coeffs[ny];
        self.grid.inv.process(&mut buf);
        buf.iter().map(|c| c.re).collect()
    }

    pub fn grid(&self) -> &PeriodicGrid {
        &self.grid
    }

    /// Coefficients ĉ_0..ĉ_{M/2}.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of the signed mode ℓ (|ℓ| ≤ M/2), with ĉ_{−ℓ} = conj(ĉ_ℓ).
    pub fn mode(&self, ell: i64) -> Complex64 {
        let k = ell.unsigned_abs() as usize;
        assert!(k <= self.grid.nyquist(), "mode {ell} outside grid");
        if ell >= 0 {
            self.coeffs[k]
        } else {
            self.coeffs[k].conj()
        }
    }

    /// Overwrite ĉ_k. Imaginary parts of ĉ_0 and the Nyquist mode are dropped.
    pub fn set_coeff(&mut self, k: usize, value: Complex64) {
        let ny = self.grid.nyquist();
        assert!(k <= ny, "mode {k} outside grid");
        self.coeffs[k] = if k == 0 || k == ny {
            Complex64::new(value.re, 0.0)
        } else {
            value
        };
    }

    fn same_grid(&self, other: &Self) -> Result<()> {
        if self.grid != other.grid {
            return Err(WaveError::GridMismatch {
                left: self.grid.len(),
                right: other.grid.len(),
            });
        }
        Ok(())
    }

    fn map_modes(&self, f: impl Fn(usize, Complex64) -> Complex64) -> Self {
        let ny = self.grid.nyquist();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                let v = f(k, c);
                if k == 0 || k == ny {
                    Complex64::new(v.re, 0.0)
                } else {
                    v
                }
            })
            .collect();
        Self {
            grid: self.grid.clone(),
            coeffs,
        }
    }

    /// Hilbert transform: multiplier −i·sgn(k); annihilates the mean and the
    /// Nyquist mode.
    pub fn hilbert(&self) -> Self {
        let ny = self.grid.nyquist();
        self.map_modes(|k, c| {
            if k == 0 || k == ny {
                Complex64::ZERO
            } else {
                Complex64::new(c.im, -c.re) // −i·c
            }
        })
    }

    /// |D|^s: multiplier |k|^s for s > 0 (mean and Nyquist annihilated);
    /// the identity for s = 0.
    pub fn lambda_pow(&self, s: f64) -> Result<Self> {
        if !s.is_finite() || s < 0.0 {
            return Err(WaveError::Unsupported(format!(
                "lambda_pow requires finite s >= 0, got {s}"
            )));
        }
        if s == 0.0 {
            return Ok(self.clone());
        }
        let ny = self.grid.nyquist();
        Ok(self.map_modes(|k, c| {
            if k == 0 || k == ny {
                Complex64::ZERO
            } else {
                c * (k as f64).powf(s)
            }
        }))
    }

    /// |D| (the flat-surface Dirichlet–Neumann operator).
    pub fn lambda(&self) -> Self {
        self.lambda_pow(1.0).expect("s = 1 is valid")
    }

    /// Spectral derivative: multiplier ik, Nyquist mode mapped to zero.
    pub fn derivative(&self) -> Self {
        let ny = self.grid.nyquist();
        self.map_modes(|k, c| {
            if k == 0 || k == ny {
                Complex64::ZERO
            } else {
                Complex64::new(-c.im, c.re) * k as f64 // ik·c
            }
        })
    }

    /// Projection onto zero mean (P).
    pub fn project_zero_mean(&self) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = Complex64::ZERO;
        out
    }

    /// Mean value (P₀).
    pub fn mean(&self) -> f64 {
        self.coeffs[0].re
    }

    /// Pointwise product at the collocation points.
    pub fn multiply(&self, other: &Self, dealias: Dealias) -> Result<Self> {
        self.same_grid(other)?;
        match dealias {
            Dealias::Aliased => {
                let a = self.to_values();
                let b = other.to_values();
                let prod: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
                Self::from_values(&self.grid, &prod)
            }
            Dealias::Padded => {
                let m = self.grid.len();
                let mp = (3 * m / 2 + 1) & !1; // smallest even M' >= 3M/2
                let fine = PeriodicGrid::new(mp)?;
                let a = self.resample(&fine).to_values();
                let b = other.resample(&fine).to_values();
                let prod: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
                Ok(Self::from_values(&fine, &prod)?.resample(&self.grid))
            }
        }
    }

    /// 36th-order Hou–Li filter: ĉ_k ← ĉ_k · exp(−36 (2|k|/M)^36).
    pub fn houli_filter(&self) -> Self {
        let m = self.grid.len() as f64;
        self.map_modes(|k, c| c * (-36.0 * (2.0 * k as f64 / m).powi(36)).exp())
    }

    /// Exponentially weighted Wiener norm Σ_m e^{τ|m|} |ĉ_m| over all signed
    /// modes. τ = 0 gives the Wiener norm.
    pub fn xtau_norm(&self, tau: f64) -> f64 {
        assert!(tau >= 0.0 && tau.is_finite(), "xtau_norm requires tau >= 0");
        let ny = self.grid.nyquist();
        let mut sum = self.coeffs[0].norm();
        for k in 1..ny {
            sum += 2.0 * (tau * k as f64).exp() * self.coeffs[k].norm();
        }
        sum += (tau * ny as f64).exp() * self.coeffs[ny].norm();
        sum
    }

    /// L²(0, 2π) norm via Parseval.
    pub fn l2_norm(&self) -> f64 {
        let ny = self.grid.nyquist();
        let mut sum = self.coeffs[0].norm_sqr() + self.coeffs[ny].norm_sqr();
        for k in 1..ny {
            sum += 2.0 * self.coeffs[k].norm_sqr();
        }
        (2.0 * PI * sum).sqrt()
    }

    /// Discrete inner product (1/M) Σ_j u_j v_j evaluated in physical space.
    pub fn inner_physical(&self, other: &Self) -> Result<f64> {
        self.same_grid(other)?;
        let a = self.to_values();
        let b = other.to_values();
        Ok(a.iter().zip(&b).map(|(x, y)| x * y).sum::<f64>() / a.len() as f64)
    }

    /// The matching spectral inner product û_0v̂_0 + û_{M/2}v̂_{M/2}
    /// + Σ_{0<k<M/2} 2 Re(conj(û_k) v̂_k).
    pub fn inner_spectral(&self, other: &Self) -> Result<f64> {
        self.same_grid(other)?;
        let ny = self.grid.nyquist();
        let mut sum = self.coeffs[0].re * other.coeffs[0].re
            + self.coeffs[ny].re * other.coeffs[ny].re;
        for k in 1..ny {
            sum += 2.0 * (self.coeffs[k].conj() * other.coeffs[k]).re;
        }
        Ok(sum)
    }

    /// Max absolute value on the grid.
    pub fn max_abs(&self) -> f64 {
        self.to_values().iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Transfer to another grid by spectral truncation / zero padding.
    pub fn resample(&self, grid: &PeriodicGrid) -> Self {
        if *grid == self.grid {
            return self.clone();
        }
        let old_ny = self.grid.nyquist();
        let new_ny = grid.nyquist();
        let mut out = Self::zero(grid);
        if new_ny >= old_ny {
            // Upsampling: the old Nyquist coefficient becomes an ordinary
            // mode and splits between ±M/2.
            for k in 0..old_ny {
                out.coeffs[k] = self.coeffs[k];
            }
            out.coeffs[old_ny] = self.coeffs[old_ny] * 0.5;
            if new_ny == old_ny {
                out.coeffs[old_ny] = self.coeffs[old_ny];
            }
        } else {
            for k in 0..new_ny {
                out.coeffs[k] = self.coeffs[k];
            }
            // Both halves of the ordinary mode M'/2 alias onto the coarse
            // Nyquist basis vector.
            out.coeffs[new_ny] = Complex64::new(2.0 * self.coeffs[new_ny].re, 0.0);
        }
        out
    }

    /// u(x − a): multiplies ĉ_k by e^{−ika}.
    pub fn translate(&self, a: f64) -> Self {
        let ny = self.grid.nyquist();
        self.map_modes(|k, c| {
            if k == ny {
                // cos(kx) shifted is not representable; keep the cosine part.
                c * (k as f64 * a).cos()
            } else {
                c * Complex64::new(0.0, -(k as f64) * a).exp()
            }
        })
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_modes(|_, c| c * s)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Self {
            grid: self.grid.clone(),
            coeffs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(m: usize) -> PeriodicGrid {
        PeriodicGrid::new(m).unwrap()
    }

    #[test]
    fn rejects_bad_grid_sizes() {
        assert!(PeriodicGrid::new(5).is_err());
        assert!(PeriodicGrid::new(2).is_err());
        assert!(PeriodicGrid::new(0).is_err());
        assert!(PeriodicGrid::new(4).is_ok());
    }

    #[test]
    fn transform_single_cosine() {
        let g = grid(32);
        let f = SpectralField::from_fn(&g, |x| x.cos());
        assert!((f.coeffs()[1] - Complex64::new(0.5, 0.0)).norm() < 1e-14);
        for (k, c) in f.coeffs().iter().enumerate() {
            if k != 1 {
                assert!(c.norm() < 1e-14, "mode {k} = {c}");
            }
        }
    }

    #[test]
    fn transform_constant() {
        let g = grid(16);
        let f = SpectralField::from_fn(&g, |_| 1.0);
        assert!((f.coeffs()[0].re - 1.0).abs() < 1e-15);
        assert!(f.coeffs().iter().skip(1).all(|c| c.norm() < 1e-15));
    }

    #[test]
    fn transform_rejects_bad_input() {
        let g = grid(8);
        assert!(matches!(
            SpectralField::from_values(&g, &[0.0; 7]),
            Err(WaveError::Dimension { .. })
        ));
        let mut v = vec![0.0; 8];
        v[3] = f64::NAN;
        assert!(matches!(
            SpectralField::from_values(&g, &v),
            Err(WaveError::InvalidData(_))
        ));
    }

    #[test]
    fn round_trip_reaches_machine_precision() {
        let g = grid(64);
        // deterministic "random" data
        let vals: Vec<f64> = (0..64)
            .map(|j| ((j * 2654435761u64 as usize) % 1000) as f64 / 500.0 - 1.0)
            .collect();
        let f = SpectralField::from_values(&g, &vals).unwrap();
        let back = f.to_values();
        for (a, b) in vals.iter().zip(&back) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn hilbert_of_trig_modes() {
        let g = grid(32);
        let cosx = SpectralField::from_fn(&g, |x| x.cos());
        let sinx = SpectralField::from_fn(&g, |x| x.sin());
        let h = cosx.hilbert();
        for (a, b) in h.to_values().iter().zip(sinx.to_values()) {
            assert!((a - b).abs() < 1e-14);
        }
        let h2 = sinx.hilbert();
        for (a, b) in h2.to_values().iter().zip(cosx.to_values()) {
            assert!((a + b).abs() < 1e-14);
        }
        let one = SpectralField::from_fn(&g, |_| 1.0);
        assert!(one.hilbert().l2_norm() < 1e-15);
    }

    #[test]
    fn lambda_pow_multipliers() {
        let g = grid(32);
        let cosx = SpectralField::from_fn(&g, |x| x.cos());
        let l = cosx.lambda();
        assert!((l.coeffs()[1].re - 0.5).abs() < 1e-14);
        let cos2x = SpectralField::from_fn(&g, |x| (2.0 * x).cos());
        let l3 = cos2x.lambda_pow(3.0).unwrap();
        assert!((l3.coeffs()[2].re - 4.0).abs() < 1e-13); // 8 · 1/2
        let one = SpectralField::from_fn(&g, |_| 1.0);
        assert!(one.lambda().l2_norm() < 1e-15);
        assert!(cosx.lambda_pow(-1.0).is_err());
    }

    #[test]
    fn derivative_of_cosine() {
        let g = grid(32);
        let cosx = SpectralField::from_fn(&g, |x| x.cos());
        let d = cosx.derivative();
        let expect = SpectralField::from_fn(&g, |x| -x.sin());
        for (a, b) in d.to_values().iter().zip(expect.to_values()) {
            assert!((a - b).abs() < 1e-14);
        }
        let one = SpectralField::from_fn(&g, |_| 1.0);
        assert!(one.derivative().l2_norm() < 1e-15);
    }

    #[test]
    fn projections_split_mean() {
        let g = grid(16);
        let f = SpectralField::from_fn(&g, |x| 2.0 + x.cos());
        let p = f.project_zero_mean();
        assert!((f.mean() - 2.0).abs() < 1e-14);
        assert!(p.mean().abs() < 1e-15);
        assert_eq!(p.project_zero_mean(), p);
        let s = SpectralField::from_fn(&g, |x| (3.0 * x).sin());
        assert!(s.mean().abs() < 1e-15);
    }

    #[test]
    fn multiply_matches_trig_identities() {
        let g = grid(32);
        let cosx = SpectralField::from_fn(&g, |x| x.cos());
        let sinx = SpectralField::from_fn(&g, |x| x.sin());
        for dealias in [Dealias::Aliased, Dealias::Padded] {
            let sq = cosx.multiply(&cosx, dealias).unwrap();
            let expect = SpectralField::from_fn(&g, |x| 0.5 + 0.5 * (2.0 * x).cos());
            assert!(sq.sub(&expect).unwrap().l2_norm() < 1e-13);

            let cs = cosx.multiply(&sinx, dealias).unwrap();
            let expect = SpectralField::from_fn(&g, |x| 0.5 * (2.0 * x).sin());
            assert!(cs.sub(&expect).unwrap().l2_norm() < 1e-13);

            let z = cosx.multiply(&SpectralField::zero(&g), dealias).unwrap();
            assert!(z.l2_norm() == 0.0);
        }
        let other = SpectralField::zero(&grid(16));
        assert!(matches!(
            cosx.multiply(&other, Dealias::Aliased),
            Err(WaveError::GridMismatch { .. })
        ));
    }

    #[test]
    fn dealiased_product_is_exact_near_nyquist() {
        // modes 12 × 12 on M = 32 alias to mode 8 in the aliased product;
        // the padded product must drop them cleanly.
        let g = grid(32);
        let f = SpectralField::from_fn(&g, |x| (12.0 * x).cos());
        let aliased = f.multiply(&f, Dealias::Aliased).unwrap();
        let padded = f.multiply(&f, Dealias::Padded).unwrap();
        // exact product = 1/2 + cos(24x)/2; mode 24 is not representable
        assert!((padded.mean() - 0.5).abs() < 1e-14);
        assert!(padded.coeffs()[8].norm() < 1e-14);
        // 24 ≡ −8 (mod 32): the aliased product folds cos 24x onto cos 8x
        assert!((aliased.coeffs()[8].re - 0.25).abs() < 1e-13);
    }

    #[test]
    fn houli_filter_profile() {
        let g = grid(32);
        let f = SpectralField::from_fn(&g, |x| 1.0 + x.cos() + (16.0 * x).cos());
        let filtered = f.houli_filter();
        assert!((filtered.mean() - 1.0).abs() < 1e-15);
        let ny_ratio = filtered.coeffs()[16].re / f.coeffs()[16].re;
        assert!((ny_ratio - (-36.0f64).exp()).abs() < 1e-18);
        // applying twice squares the filter factor
        let twice = filtered.houli_filter();
        let ratio2 = twice.coeffs()[16].re / f.coeffs()[16].re;
        assert!((ratio2 - (-72.0f64).exp()).abs() < 1e-18);
    }

    #[test]
    fn xtau_norm_examples() {
        // exact coefficients: the e^{τk} weights amplify transform roundoff
        let g = grid(32);
        let mut cosx = SpectralField::zero(&g);
        cosx.set_coeff(1, Complex64::new(0.5, 0.0));
        assert!((cosx.xtau_norm(1.0) - std::f64::consts::E).abs() < 1e-12);
        assert!(SpectralField::zero(&g).xtau_norm(2.0) == 0.0);
        let mut sin2x = SpectralField::zero(&g);
        sin2x.set_coeff(2, Complex64::new(0.0, -0.5));
        assert!((sin2x.xtau_norm(0.0) - 1.0).abs() < 1e-13);
        // monotone in tau
        assert!(cosx.xtau_norm(2.0) > cosx.xtau_norm(1.0));
    }

    #[test]
    fn parseval_ties_the_inner_products() {
        let g = grid(64);
        let f = SpectralField::from_fn(&g, |x| 0.3 + x.cos() - 2.0 * (3.0 * x).sin());
        let h = SpectralField::from_fn(&g, |x| 1.0 - 0.5 * (2.0 * x).cos() + (5.0 * x).sin());
        let phys = f.inner_physical(&h).unwrap();
        let spec = f.inner_spectral(&h).unwrap();
        assert!((phys - spec).abs() < 1e-13);
        // l2_norm agrees with the physical quadrature of the square
        let sq = 2.0 * PI * f.inner_physical(&f).unwrap();
        assert!((f.l2_norm().powi(2) - sq).abs() < 1e-12);
    }

    #[test]
    fn resample_round_trip() {
        let g = grid(32);
        let fine = grid(64);
        let f = SpectralField::from_fn(&g, |x| x.cos() + 0.2 * (5.0 * x).sin());
        let up = f.resample(&fine);
        let back = up.resample(&g);
        assert!(f.sub(&back).unwrap().l2_norm() < 1e-14);
        // physical values are preserved on the common points
        let vals = f.to_values();
        let vals_up = up.to_values();
        for j in 0..32 {
            assert!((vals[j] - vals_up[2 * j]).abs() < 1e-13);
        }
    }

    #[test]
    fn translate_shifts_values() {
        let g = grid(64);
        let f = SpectralField::from_fn(&g, |x| (2.0 * x).cos() + 0.3 * x.sin());
        let a = g.point(5);
        let shifted = f.translate(a);
        let expect = SpectralField::from_fn(&g, |x| {
            let y = x - a;
            (2.0 * y).cos() + 0.3 * y.sin()
        });
        assert!(shifted.sub(&expect).unwrap().l2_norm() < 1e-12);
    }
}
