//! Right-hand sides of the asymptotic wave models (linear, quadratic and
//! cubic h-models, the gravity-capillary and internal-wave variants, and the
//! Craig–Sulem WW2 transport system), plus assembly of each model into a
//! first-order system u_t = Lu + N(u, t) for the exponential integrator.
//!
//! Products inside nonlinearities use the aliased pointwise product; the
//! time-stepping driver applies the Hou–Li filter once per accepted step.

use num_complex::Complex64;

use crate::error::{Result, WaveError};
use crate::etd::{BlockDiagonalWaveOperator, FieldPair, NonlinearFn};
use crate::spectral::{Dealias, PeriodicGrid, SpectralField};

/// Surface elevation and its time derivative for the second-order models.
#[derive(Clone, Debug)]
pub struct WaveState {
    pub h: SpectralField,
    pub ht: SpectralField,
}

impl WaveState {
    pub fn new(h: SpectralField, ht: SpectralField) -> Result<Self> {
        if h.grid() != ht.grid() {
            return Err(WaveError::GridMismatch {
                left: h.grid().len(),
                right: ht.grid().len(),
            });
        }
        Ok(Self { h, ht })
    }

    pub fn zero(grid: &PeriodicGrid) -> Self {
        Self {
            h: SpectralField::zero(grid),
            ht: SpectralField::zero(grid),
        }
    }

    pub fn grid(&self) -> &PeriodicGrid {
        self.h.grid()
    }

    pub fn into_pair(self) -> FieldPair {
        [self.h, self.ht]
    }

    pub fn from_pair(pair: FieldPair) -> Self {
        let [h, ht] = pair;
        Self { h, ht }
    }
}

/// Surface elevation and tangential-velocity variable ω = ∂₁Ψ for the WW2
/// transport system. ω must have zero mean.
#[derive(Clone, Debug)]
pub struct Ww2State {
    pub h: SpectralField,
    pub omega: SpectralField,
}

impl Ww2State {
    pub fn new(h: SpectralField, omega: SpectralField) -> Result<Self> {
        if h.grid() != omega.grid() {
            return Err(WaveError::GridMismatch {
                left: h.grid().len(),
                right: omega.grid().len(),
            });
        }
        if omega.mean().abs() > 1e-12 * (1.0 + omega.l2_norm()) {
            return Err(WaveError::InvalidData(format!(
                "omega must have zero mean, got {}",
                omega.mean()
            )));
        }
        Ok(Self { h, omega })
    }

    pub fn into_pair(self) -> FieldPair {
        [self.h, self.omega]
    }

    pub fn from_pair(pair: FieldPair) -> Self {
        let [h, omega] = pair;
        Self { h, omega }
    }
}

/// Which model closes the first-order system.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ModelKind {
    Linear,
    Quadratic,
    Cubic,
    /// Gravity-capillary quadratic model with surface tension λ ≥ 0.
    QuadraticCapillary(f64),
    /// Two-fluid internal wave with Atwood number |A| ≤ 1.
    InternalWave(f64),
    /// Craig–Sulem WW2 transport system with surface tension λ ≥ 0.
    Ww2(f64),
}

impl ModelKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ModelKind::QuadraticCapillary(lambda) | ModelKind::Ww2(lambda) => {
                if !(lambda >= 0.0) || !lambda.is_finite() {
                    return Err(WaveError::Parameter(format!(
                        "surface tension must be >= 0, got {lambda}"
                    )));
                }
            }
            ModelKind::InternalWave(a) => {
                if !(-1.0..=1.0).contains(&a) || !a.is_finite() {
                    return Err(WaveError::Parameter(format!(
                        "Atwood number must satisfy |A| <= 1, got {a}"
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

fn prod(a: &SpectralField, b: &SpectralField) -> SpectralField {
    a.multiply(b, Dealias::Aliased)
        .expect("operands share a grid")
}

/// Commutator of multiplication by `a` with the Hilbert transform:
/// [a, H]b = a·Hb − H(ab).
pub fn commutator_h(a: &SpectralField, b: &SpectralField) -> SpectralField {
    prod(a, &b.hilbert())
        .sub(&prod(a, b).hilbert())
        .expect("operands share a grid")
}

/// Quadratic and gravity-capillary nonlinearity
/// −Λ[(H h_t)²] + Λ[h(gΛh + λΛ³h)] − ∂₁[h(−g∂₁h + λ∂₁³h)].
fn gravity_capillary_n(state: &WaveState, g: f64, lambda: f64) -> SpectralField {
    let h = &state.h;
    let hth = state.ht.hilbert();
    let t1 = prod(&hth, &hth).lambda().scale(-1.0);
    let restoring = h
        .lambda()
        .scale(g)
        .add(&h.lambda_pow(3.0).expect("s = 3").scale(lambda))
        .expect("same grid");
    let t2 = prod(h, &restoring).lambda();
    let transport = h
        .derivative()
        .scale(-g)
        .add(&h.derivative().derivative().derivative().scale(lambda))
        .expect("same grid");
    let t3 = prod(h, &transport).derivative();
    t1.add(&t2).and_then(|s| s.sub(&t3)).expect("same grid")
}

/// Quadratic h-model nonlinearity N₂ = −Λ[(H h_t)²] + gΛ(hΛh) + g∂₁(h∂₁h).
pub fn rhs_quadratic(state: &WaveState, g: f64) -> SpectralField {
    gravity_capillary_n(state, g, 0.0)
}

/// Transport form of N₂ obtained through the Tricomi identity:
/// 2∂₁(h_t·H h_t) − Λ(h_t²) + gΛ(hΛh) + g∂₁(h∂₁h). Algebraically equal to
/// [`rhs_quadratic`]; kept as an independent evaluation route.
pub fn rhs_quadratic_transport(state: &WaveState, g: f64) -> SpectralField {
    let h = &state.h;
    let ht = &state.ht;
    let t1 = prod(ht, &ht.hilbert()).derivative().scale(2.0);
    let t2 = prod(ht, ht).lambda().scale(-1.0);
    let t3 = prod(h, &h.lambda()).lambda().scale(g);
    let t4 = prod(h, &h.derivative()).derivative().scale(g);
    t1.add(&t2)
        .and_then(|s| s.add(&t3))
        .and_then(|s| s.add(&t4))
        .expect("same grid")
}

/// Cubic nonlinearity Q(h, h_t): the eight-term commutator expression under
/// an outer −∂₁. Jointly homogeneous of degree 3 in (h, h_t).
pub fn cubic_q(h: &SpectralField, ht: &SpectralField, g: f64) -> Result<SpectralField> {
    if h.grid() != ht.grid() {
        return Err(WaveError::GridMismatch {
            left: h.grid().len(),
            right: ht.grid().len(),
        });
    }
    let hth = ht.hilbert();
    let dht = ht.derivative();

    // [h_t, H] ∂₁(h·H h_t)
    let t1 = commutator_h(ht, &prod(h, &hth).derivative());
    // −[h, H] ∂₁([h_t, H] h_t)
    let t2 = commutator_h(h, &commutator_h(ht, ht).derivative()).scale(-1.0);
    // −g [h, H] Λ(hΛh)
    let t3 = commutator_h(h, &prod(h, &h.lambda()).lambda()).scale(-g);
    // H[(h·h_t)(Λ h_t)]
    let t4 = prod(&prod(h, ht), &ht.lambda()).hilbert();
    // −(g/2) [h², H] ∂₁²h
    let t5 = commutator_h(&prod(h, h), &h.derivative().derivative()).scale(-0.5 * g);
    // h·h_t·∂₁h_t
    let t6 = prod(&prod(h, ht), &dht);
    // −H[(H h_t)·Λ(h·H h_t)]
    let t7 = prod(&hth, &prod(h, &hth).lambda()).hilbert().scale(-1.0);
    // −H[(H h_t)·h·∂₁h_t]
    let t8 = prod(&prod(&hth, h), &dht).hilbert().scale(-1.0);

    let sum = t1
        .add(&t2)?
        .add(&t3)?
        .add(&t4)?
        .add(&t5)?
        .add(&t6)?
        .add(&t7)?
        .add(&t8)?;
    Ok(sum.derivative().scale(-1.0))
}

/// Cubic h-model nonlinearity N₃ = N₂ + Q(h, h_t).
pub fn rhs_cubic(state: &WaveState, g: f64) -> SpectralField {
    let q = cubic_q(&state.h, &state.ht, g).expect("state fields share a grid");
    rhs_quadratic(state, g).add(&q).expect("same grid")
}

/// Gravity-capillary quadratic nonlinearity; reduces exactly to
/// [`rhs_quadratic`] for λ = 0.
pub fn rhs_capillary(state: &WaveState, g: f64, lambda: f64) -> Result<SpectralField> {
    ModelKind::QuadraticCapillary(lambda).validate()?;
    Ok(gravity_capillary_n(state, g, lambda))
}

/// Internal-wave nonlinearity A·Λ[(H h_t)²] + A²g[Λ(hΛh) + ∂₁(h∂₁h)].
/// The linear part A·gΛh lives in the system operator. At A = −1 the whole
/// model reduces to the quadratic water-wave h-model.
pub fn rhs_internal_wave(state: &WaveState, g: f64, atwood: f64) -> Result<SpectralField> {
    ModelKind::InternalWave(atwood).validate()?;
    let h = &state.h;
    let hth = state.ht.hilbert();
    let t1 = prod(&hth, &hth).lambda().scale(atwood);
    let grav = prod(h, &h.lambda())
        .lambda()
        .add(&prod(h, &h.derivative()).derivative())?
        .scale(atwood * atwood * g);
    t1.add(&grav)
}

/// WW2 transport right-hand side:
/// ∂_t h = Hω + ∂₁([h,H]Hω),  ∂_t ω = −g∂₁h + λ∂₁³h + Λ(ω·Hω).
pub fn ww2_rhs(state: &Ww2State, g: f64, lambda: f64) -> (SpectralField, SpectralField) {
    let h = &state.h;
    let omega = &state.omega;
    let h_omega = omega.hilbert();
    let dh = h_omega
        .add(&commutator_h(h, &h_omega).derivative())
        .expect("same grid");
    let domega = h
        .derivative()
        .scale(-g)
        .add(&h.derivative().derivative().derivative().scale(lambda))
        .and_then(|s| s.add(&prod(omega, &h_omega).lambda()))
        .expect("same grid");
    (dh, domega)
}

/// Assemble a second-order h-model as u_t = Lu + N(u, t) with
/// L = [[0, P], [−gΛ, 0]] (per-mode blocks) and N carrying P₀(h_t) in its
/// first component and the model nonlinearity in its second.
///
/// The WW2 kind is a first-order transport system with its own linear part;
/// assemble it with [`build_ww2_system`] instead.
pub fn build_system(
    kind: ModelKind,
    g: f64,
    grid: &PeriodicGrid,
) -> Result<(BlockDiagonalWaveOperator, NonlinearFn)> {
    kind.validate()?;
    let operator = match kind {
        ModelKind::Linear | ModelKind::Quadratic | ModelKind::Cubic => {
            BlockDiagonalWaveOperator::gravity_wave(grid, g, 0.0)
        }
        ModelKind::QuadraticCapillary(lambda) => {
            BlockDiagonalWaveOperator::gravity_wave(grid, g, lambda)
        }
        ModelKind::InternalWave(a) => BlockDiagonalWaveOperator::internal_wave(grid, g, a),
        ModelKind::Ww2(_) => {
            return Err(WaveError::Unsupported(
                "WW2 is a first-order transport system; use build_ww2_system".into(),
            ))
        }
    };
    let n: NonlinearFn = Box::new(move |_t, pair: &FieldPair| {
        let state = WaveState {
            h: pair[0].clone(),
            ht: pair[1].clone(),
        };
        let mut first = SpectralField::zero(state.grid());
        first.set_coeff(0, Complex64::new(state.ht.mean(), 0.0));
        let second = match kind {
            ModelKind::Linear => SpectralField::zero(state.grid()),
            ModelKind::Quadratic => rhs_quadratic(&state, g),
            ModelKind::Cubic => rhs_cubic(&state, g),
            ModelKind::QuadraticCapillary(lambda) => gravity_capillary_n(&state, g, lambda),
            ModelKind::InternalWave(a) => {
                rhs_internal_wave(&state, g, a).expect("validated Atwood number")
            }
            ModelKind::Ww2(_) => unreachable!("rejected above"),
        };
        [first, second]
    });
    Ok((operator, n))
}

/// Assemble the WW2 system in (h, ω) with linear part [[0, H], [−g∂₁ + λ∂₁³, 0]].
pub fn build_ww2_system(
    g: f64,
    lambda: f64,
    grid: &PeriodicGrid,
) -> Result<(BlockDiagonalWaveOperator, NonlinearFn)> {
    ModelKind::Ww2(lambda).validate()?;
    let operator = BlockDiagonalWaveOperator::ww2(grid, g, lambda);
    let n: NonlinearFn = Box::new(move |_t, pair: &FieldPair| {
        let h = &pair[0];
        let omega = &pair[1];
        let h_omega = omega.hilbert();
        let dh = commutator_h(h, &h_omega).derivative();
        let domega = prod(omega, &h_omega).lambda();
        [dh, domega]
    });
    Ok((operator, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(m: usize) -> PeriodicGrid {
        PeriodicGrid::new(m).unwrap()
    }

    fn field(g: &PeriodicGrid, f: impl Fn(f64) -> f64) -> SpectralField {
        SpectralField::from_fn(g, f)
    }

    fn assert_close(a: &SpectralField, b: &SpectralField, tol: f64) {
        let diff = a.sub(b).unwrap().l2_norm();
        assert!(diff < tol, "fields differ by {diff:.3e}");
    }

    #[test]
    fn quadratic_rhs_examples() {
        let g = grid(64);
        let zero = WaveState::zero(&g);
        assert!(rhs_quadratic(&zero, 1.0).l2_norm() == 0.0);

        // gravity terms cancel mode by mode for h = cos x at rest
        let rest = WaveState::new(field(&g, |x| x.cos()), SpectralField::zero(&g)).unwrap();
        assert!(rhs_quadratic(&rest, 1.0).l2_norm() < 1e-13);

        // moving flat surface: N₂ = −Λ(sin²x) = cos 2x
        let moving = WaveState::new(SpectralField::zero(&g), field(&g, |x| x.cos())).unwrap();
        let n2 = rhs_quadratic(&moving, 1.0);
        assert_close(&n2, &field(&g, |x| (2.0 * x).cos()), 1e-13);
        assert!(n2.mean().abs() < 1e-15);
    }

    #[test]
    fn quadratic_forms_agree_on_band_limited_states() {
        let g = grid(128);
        let state = WaveState::new(
            field(&g, |x| 0.3 * x.cos() + 0.1 * (3.0 * x).sin() - 0.05 * (7.0 * x).cos()),
            field(&g, |x| 0.2 * (2.0 * x).sin() + 0.07 * (5.0 * x).cos()),
        )
        .unwrap();
        let a = rhs_quadratic(&state, 1.0);
        let b = rhs_quadratic_transport(&state, 1.0);
        assert_close(&a, &b, 1e-11);
    }

    #[test]
    fn cubic_q_examples() {
        let g = grid(64);
        let zero = SpectralField::zero(&g);
        assert!(cubic_q(&zero, &zero, 1.0).unwrap().l2_norm() == 0.0);

        // only the [h,H] and [h²,H] terms survive at rest
        let h = field(&g, |x| x.cos());
        let q = cubic_q(&h, &zero, 1.0).unwrap();
        assert_close(&q, &field(&g, |x| 0.25 * x.cos()), 1e-11);

        // degree-3 joint homogeneity
        let ht = field(&g, |x| 0.5 * (2.0 * x).sin());
        let q1 = cubic_q(&h, &ht, 1.0).unwrap();
        let q2 = cubic_q(&h.scale(2.0), &ht.scale(2.0), 1.0).unwrap();
        assert_close(&q2, &q1.scale(8.0), 1e-12);
        assert!(q1.mean().abs() < 1e-15);
    }

    #[test]
    fn cubic_rhs_ties_to_quadratic_plus_q() {
        let g = grid(64);
        let state = WaveState::new(
            field(&g, |x| 0.2 * x.cos() + 0.1 * (2.0 * x).sin()),
            field(&g, |x| 0.15 * (3.0 * x).cos()),
        )
        .unwrap();
        let lhs = rhs_cubic(&state, 1.0);
        let rhs = rhs_quadratic(&state, 1.0)
            .add(&cubic_q(&state.h, &state.ht, 1.0).unwrap())
            .unwrap();
        assert_close(&lhs, &rhs, 1e-14);

        let rest = WaveState::new(field(&g, |x| x.cos()), SpectralField::zero(&g)).unwrap();
        assert_close(&rhs_cubic(&rest, 1.0), &field(&g, |x| 0.25 * x.cos()), 1e-11);
    }

    #[test]
    fn capillary_reduces_to_quadratic_and_cancels() {
        let g = grid(64);
        let state = WaveState::new(
            field(&g, |x| 0.3 * x.cos() + 0.1 * (4.0 * x).sin()),
            field(&g, |x| 0.2 * (2.0 * x).cos()),
        )
        .unwrap();
        let cap0 = rhs_capillary(&state, 1.0, 0.0).unwrap();
        assert_eq!(cap0.coeffs(), rhs_quadratic(&state, 1.0).coeffs());

        // Λ(h·Λ³h) and ∂₁(h·∂₁³h) cancel for a single mode at rest
        let single = WaveState::new(field(&g, |x| (2.0 * x).cos()), SpectralField::zero(&g))
            .unwrap();
        let n = rhs_capillary(&single, 0.0, 1.0).unwrap();
        assert!(n.l2_norm() < 1e-9); // |k|³ multipliers amplify roundoff

        assert!(rhs_capillary(&state, 1.0, -0.5).is_err());
    }

    #[test]
    fn internal_wave_signs_and_reduction() {
        let g = grid(64);
        let state = WaveState::new(
            field(&g, |x| 0.1 * x.cos() + 0.05 * (3.0 * x).sin()),
            field(&g, |x| 0.2 * (2.0 * x).sin()),
        )
        .unwrap();
        assert!(rhs_internal_wave(&state, 1.0, 0.0).unwrap().l2_norm() == 0.0);
        assert!(rhs_internal_wave(&WaveState::zero(&g), 1.0, 0.7)
            .unwrap()
            .l2_norm()
            .abs()
            < 1e-15);

        // A = 1: sign of the velocity term is opposite to the quadratic model
        let moving = WaveState::new(SpectralField::zero(&g), field(&g, |x| x.cos())).unwrap();
        let n = rhs_internal_wave(&moving, 1.0, 1.0).unwrap();
        assert_close(&n, &field(&g, |x| -(2.0 * x).cos()), 1e-13);

        // A = −1 recovers the quadratic water-wave nonlinearity entirely
        let n_minus = rhs_internal_wave(&state, 1.0, -1.0).unwrap();
        assert_close(&n_minus, &rhs_quadratic(&state, 1.0), 1e-13);

        assert!(rhs_internal_wave(&state, 1.0, 1.5).is_err());
    }

    #[test]
    fn ww2_rhs_examples() {
        let g = grid(64);
        let zero = Ww2State::new(SpectralField::zero(&g), SpectralField::zero(&g)).unwrap();
        let (dh, dw) = ww2_rhs(&zero, 1.0, 0.0);
        assert!(dh.l2_norm() == 0.0 && dw.l2_norm() == 0.0);

        let s1 = Ww2State::new(SpectralField::zero(&g), field(&g, |x| x.cos())).unwrap();
        let (dh, dw) = ww2_rhs(&s1, 1.0, 0.0);
        assert_close(&dh, &field(&g, |x| x.sin()), 1e-13);
        assert_close(&dw, &field(&g, |x| (2.0 * x).sin()), 1e-13);

        let s2 = Ww2State::new(field(&g, |x| x.cos()), SpectralField::zero(&g)).unwrap();
        let (dh, dw) = ww2_rhs(&s2, 1.0, 0.0);
        assert!(dh.l2_norm() < 1e-14);
        assert_close(&dw, &field(&g, |x| x.sin()), 1e-13);
        assert!(dh.mean().abs() < 1e-15 && dw.mean().abs() < 1e-15);
    }

    #[test]
    fn ww2_state_rejects_nonzero_mean_omega() {
        let g = grid(16);
        let bad = field(&g, |_| 1.0);
        assert!(Ww2State::new(SpectralField::zero(&g), bad).is_err());
    }

    #[test]
    fn quadratic_scaling_symmetry_at_coefficient_level() {
        // h_μ(x) = μ⁻²h(μ²x), ∂_t h_μ = μ⁻¹(∂_t h)(μ²x) with μ² = 2 maps
        // N₂ to N₂ evaluated at μ²x with prefactor one.
        let g = grid(128);
        let mu2 = 2usize;
        let mu = (mu2 as f64).sqrt();
        let h = field(&g, |x| 0.3 * x.cos() + 0.11 * (3.0 * x).sin());
        let ht = field(&g, |x| 0.21 * (2.0 * x).sin() - 0.07 * x.cos());
        let state = WaveState::new(h.clone(), ht.clone()).unwrap();
        let n2 = rhs_quadratic(&state, 1.0);

        let rescale = |f: &SpectralField, amp: f64| {
            let mut out = SpectralField::zero(&g);
            for k in 0..=g.nyquist() / mu2 {
                out.set_coeff(mu2 * k, f.coeffs()[k] * amp);
            }
            out
        };
        let scaled = WaveState::new(rescale(&h, 1.0 / (mu * mu)), rescale(&ht, 1.0 / mu)).unwrap();
        let n2_scaled = rhs_quadratic(&scaled, 1.0);
        for k in 0..=g.nyquist() {
            let expect = if k % mu2 == 0 && k / mu2 <= g.nyquist() {
                n2.coeffs()[k / mu2]
            } else {
                Complex64::ZERO
            };
            assert!(
                (n2_scaled.coeffs()[k] - expect).norm() < 1e-13,
                "mode {k}: {} vs {}",
                n2_scaled.coeffs()[k],
                expect
            );
        }
    }

    #[test]
    fn build_system_rejects_ww2_and_bad_parameters() {
        let g = grid(32);
        assert!(matches!(
            build_system(ModelKind::Ww2(0.0), 1.0, &g),
            Err(WaveError::Unsupported(_))
        ));
        assert!(build_system(ModelKind::QuadraticCapillary(-1.0), 1.0, &g).is_err());
        assert!(build_system(ModelKind::InternalWave(2.0), 1.0, &g).is_err());
    }

    #[test]
    fn build_system_nonlinearity_components() {
        let g = grid(32);
        let (_, n) = build_system(ModelKind::Linear, 1.0, &g).unwrap();
        let state = WaveState::new(
            field(&g, |x| x.cos()),
            field(&g, |x| 0.5 + (2.0 * x).sin()),
        )
        .unwrap();
        let out = n(0.0, &[state.h.clone(), state.ht.clone()]);
        // first component carries P₀(h_t), second is zero for the linear model
        assert!((out[0].mean() - 0.5).abs() < 1e-14);
        assert!(out[0].project_zero_mean().l2_norm() < 1e-15);
        assert!(out[1].l2_norm() == 0.0);

        let (_, n) = build_system(ModelKind::Quadratic, 1.0, &g).unwrap();
        let out = n(0.0, &[state.h.clone(), state.ht.clone()]);
        assert_close(&out[1], &rhs_quadratic(&state, 1.0), 1e-14);
    }
}
