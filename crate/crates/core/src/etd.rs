//! Arbitrary-order spectral exponential time differencing for systems
//! u_t = Lu + N(u, t) whose linear part is block-diagonal in Fourier space
//! with one 2×2 block per mode.
//!
//! A step solves the Duhamel integral equation by collocation on a
//! Chebyshev–Lobatto grid in time: given u_0, find u_1..u_ν with
//!
//!   u_r = e^{c_r Δt L} u_0 + Δt Σ_j (∫₀^{c_r} e^{(c_r−s)Δt L} ℓ_j(s) ds) N(c_j Δt, u_j)
//!
//! where ℓ_j are the Lagrange polynomials of the nodes c_j = (1−cos(πj/ν))/2.
//! The exponential integrals are evaluated per eigenvalue with φ-functions;
//! the nonlinear system is solved by damped fixed-point iteration.

use num_complex::Complex64;

use crate::error::{Result, WaveError};
use crate::spectral::{PeriodicGrid, SpectralField};

/// Two-component spectral state; (h, h_t) for the wave models, (h, ω) for
/// the WW2 transport system.
pub type FieldPair = [SpectralField; 2];

/// Nonlinear right-hand side N(t, u).
pub type NonlinearFn = Box<dyn Fn(f64, &FieldPair) -> FieldPair + Send + Sync>;

/// 2×2 complex block, row-major.
pub type Block = [Complex64; 4];

const ZERO_BLOCK: Block = [Complex64::ZERO; 4];
const IDENTITY: Block = [
    Complex64::new(1.0, 0.0),
    Complex64::ZERO,
    Complex64::ZERO,
    Complex64::new(1.0, 0.0),
];

fn block_scale(a: &Block, s: Complex64) -> Block {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

fn block_add(a: &Block, b: &Block) -> Block {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn block_mul(a: &Block, b: &Block) -> Block {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

fn block_apply(a: &Block, x: [Complex64; 2]) -> [Complex64; 2] {
    [a[0] * x[0] + a[1] * x[1], a[2] * x[0] + a[3] * x[1]]
}

fn block_max_norm(a: &Block) -> f64 {
    a.iter().fold(0.0, |acc, c| acc.max(c.norm()))
}

/// Spectral structure of one 2×2 block.
#[derive(Clone, Debug)]
enum BlockEig {
    Zero,
    /// A = Q diag(s₁, s₂) Q⁻¹ with distinct eigenvalues.
    Diagonalizable {
        q: Block,
        s: [Complex64; 2],
        qinv: Block,
    },
    /// A² = 0, A ≠ 0 (Jordan structure); exponentials are affine in A.
    Nilpotent { a: Block },
}

impl BlockEig {
    fn decompose(a: &Block) -> Result<Self> {
        let scale = block_max_norm(a);
        if scale == 0.0 {
            return Ok(BlockEig::Zero);
        }
        for c in a {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(WaveError::Parameter("non-finite block entry".into()));
            }
        }
        let tr = a[0] + a[3];
        let half_gap = ((a[0] - a[3]) * (a[0] - a[3]) + a[1] * a[2] * 4.0).sqrt() * 0.5;
        if half_gap.norm() > 1e-9 * scale {
            let l1 = tr * 0.5 + half_gap;
            let l2 = tr * 0.5 - half_gap;
            let eigvec = |l: Complex64| -> [Complex64; 2] {
                let v = if a[1].norm() >= a[2].norm() {
                    [a[1], l - a[0]]
                } else {
                    [l - a[3], a[2]]
                };
                let n = v[0].norm().max(v[1].norm());
                [v[0] / n, v[1] / n]
            };
            let v1 = eigvec(l1);
            let v2 = eigvec(l2);
            let q: Block = [v1[0], v2[0], v1[1], v2[1]];
            let det = q[0] * q[3] - q[1] * q[2];
            if det.norm() < 1e-12 {
                return Err(WaveError::Parameter(
                    "block eigenvectors are numerically parallel".into(),
                ));
            }
            let qinv = block_scale(&[q[3], -q[1], -q[2], q[0]], det.inv());
            Ok(BlockEig::Diagonalizable {
                q,
                s: [l1, l2],
                qinv,
            })
        } else if a[1].norm() <= 1e-12 * scale && a[2].norm() <= 1e-12 * scale {
            // numerically diagonal with a repeated eigenvalue
            Ok(BlockEig::Diagonalizable {
                q: IDENTITY,
                s: [a[0], a[3]],
                qinv: IDENTITY,
            })
        } else if tr.norm() <= 1e-12 * scale {
            // trace and determinant both vanish: nilpotent Jordan block
            Ok(BlockEig::Nilpotent { a: *a })
        } else {
            Err(WaveError::Parameter(
                "defective block with nonzero eigenvalue is not supported".into(),
            ))
        }
    }

    /// e^{x·A}.
    fn exponential(&self, x: f64) -> Block {
        match self {
            BlockEig::Zero => IDENTITY,
            BlockEig::Diagonalizable { q, s, qinv } => {
                let d: Block = [
                    (s[0] * x).exp(),
                    Complex64::ZERO,
                    Complex64::ZERO,
                    (s[1] * x).exp(),
                ];
                block_mul(q, &block_mul(&d, qinv))
            }
            BlockEig::Nilpotent { a } => block_add(&IDENTITY, &block_scale(a, x.into())),
        }
    }

    /// φ_m(x·A) for m = 0..=mmax.
    fn phi_family(&self, x: f64, mmax: usize) -> Vec<Block> {
        match self {
            BlockEig::Zero => (0..=mmax)
                .map(|m| block_scale(&IDENTITY, inv_factorial(m).into()))
                .collect(),
            BlockEig::Diagonalizable { q, s, qinv } => {
                let p1 = phi_upto(s[0] * x, mmax);
                let p2 = phi_upto(s[1] * x, mmax);
                (0..=mmax)
                    .map(|m| {
                        let d: Block = [p1[m], Complex64::ZERO, Complex64::ZERO, p2[m]];
                        block_mul(q, &block_mul(&d, qinv))
                    })
                    .collect()
            }
            // φ_m(Z) = I/m! + Z/(m+1)! when Z² = 0
            BlockEig::Nilpotent { a } => (0..=mmax)
                .map(|m| {
                    block_add(
                        &block_scale(&IDENTITY, inv_factorial(m).into()),
                        &block_scale(a, (x * inv_factorial(m + 1)).into()),
                    )
                })
                .collect(),
        }
    }
}

fn inv_factorial(m: usize) -> f64 {
    let mut f = 1.0;
    for i in 1..=m {
        f /= i as f64;
    }
    f
}

/// φ_0(z) = e^z, φ_{k+1}(z) = (φ_k(z) − 1/k!)/z, evaluated for k = 0..=kmax.
///
/// The downward recursion amplifies roundoff by |z|^{−k}, so for |z| ≤ 0.75
/// each φ_k is summed from its Taylor series instead (30 terms; remainder
/// < 1e-37 at the threshold).
pub fn phi_upto(z: Complex64, kmax: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(kmax + 1);
    if z.norm() <= 0.75 {
        const TERMS: usize = 30;
        for k in 0..=kmax {
            // φ_k(z) = Σ_j z^j / (j + k)!
            let mut acc = Complex64::ZERO;
            let mut zj = Complex64::new(1.0, 0.0);
            let mut fact = inv_factorial(k);
            for j in 0..=TERMS {
                acc += zj * fact;
                zj *= z;
                fact /= (j + k + 1) as f64;
            }
            out.push(acc);
        }
    } else {
        let mut phi = z.exp();
        out.push(phi);
        let mut fact = 1.0;
        for k in 0..kmax {
            phi = (phi - fact) / z;
            out.push(phi);
            fact /= (k + 1) as f64;
        }
    }
    out
}

/// The linearization L with one 2×2 block per Fourier mode k = 0..M/2.
#[derive(Clone, Debug)]
pub struct BlockDiagonalWaveOperator {
    grid: PeriodicGrid,
    blocks: Vec<Block>,
    eigs: Vec<BlockEig>,
}

impl BlockDiagonalWaveOperator {
    /// Build from a per-mode block function. Fails on non-finite entries or
    /// defective blocks with nonzero eigenvalues.
    pub fn from_fn(grid: &PeriodicGrid, f: impl Fn(usize) -> Block) -> Result<Self> {
        let ny = grid.nyquist();
        let blocks: Vec<Block> = (0..=ny).map(f).collect();
        let eigs = blocks
            .iter()
            .map(BlockEig::decompose)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            grid: grid.clone(),
            blocks,
            eigs,
        })
    }

    /// Gravity(-capillary) wave blocks [[0, 1], [−gk − λk³, 0]]; the k = 0
    /// and Nyquist blocks are zero.
    pub fn gravity_wave(grid: &PeriodicGrid, g: f64, lambda: f64) -> Self {
        let ny = grid.nyquist();
        Self::from_fn(grid, |k| {
            if k == 0 || k == ny {
                ZERO_BLOCK
            } else {
                let kf = k as f64;
                [
                    Complex64::ZERO,
                    Complex64::new(1.0, 0.0),
                    Complex64::new(-g * kf - lambda * kf.powi(3), 0.0),
                    Complex64::ZERO,
                ]
            }
        })
        .expect("wave blocks are finite and non-defective")
    }

    /// Internal-wave blocks [[0, 1], [A·gk, 0]]. For A > 0 the eigenvalues
    /// ±√(Agk) are real (Rayleigh–Taylor growth); A = 0 yields nilpotent
    /// blocks, handled exactly.
    pub fn internal_wave(grid: &PeriodicGrid, g: f64, atwood: f64) -> Self {
        let ny = grid.nyquist();
        Self::from_fn(grid, |k| {
            if k == 0 || k == ny {
                ZERO_BLOCK
            } else {
                [
                    Complex64::ZERO,
                    Complex64::new(1.0, 0.0),
                    Complex64::new(atwood * g * k as f64, 0.0),
                    Complex64::ZERO,
                ]
            }
        })
        .expect("internal-wave blocks are finite")
    }

    /// WW2 transport blocks [[0, −i·sgn k], [−i(gk + λk³), 0]] acting on the
    /// complex coefficient pair (ĥ_k, ω̂_k).
    pub fn ww2(grid: &PeriodicGrid, g: f64, lambda: f64) -> Self {
        let ny = grid.nyquist();
        Self::from_fn(grid, |k| {
            if k == 0 || k == ny {
                ZERO_BLOCK
            } else {
                let kf = k as f64;
                [
                    Complex64::ZERO,
                    Complex64::new(0.0, -1.0),
                    Complex64::new(0.0, -(g * kf + lambda * kf.powi(3))),
                    Complex64::ZERO,
                ]
            }
        })
        .expect("ww2 blocks are finite and non-defective")
    }

    pub fn zero(grid: &PeriodicGrid) -> Self {
        Self::from_fn(grid, |_| ZERO_BLOCK).expect("zero operator")
    }

    pub fn grid(&self) -> &PeriodicGrid {
        &self.grid
    }

    pub fn block(&self, k: usize) -> &Block {
        &self.blocks[k]
    }

    /// Eigenvalues (s₁, s₂) of block k; equal values for zero/nilpotent blocks.
    pub fn eigenvalues(&self, k: usize) -> [Complex64; 2] {
        match &self.eigs[k] {
            BlockEig::Zero => [Complex64::ZERO; 2],
            BlockEig::Diagonalizable { s, .. } => *s,
            BlockEig::Nilpotent { .. } => [Complex64::ZERO; 2],
        }
    }

    /// Apply L to a state (for verification).
    pub fn apply(&self, u: &FieldPair) -> FieldPair {
        let ny = self.grid.nyquist();
        let mut a = Vec::with_capacity(ny + 1);
        let mut b = Vec::with_capacity(ny + 1);
        for k in 0..=ny {
            let x = [u[0].coeffs()[k], u[1].coeffs()[k]];
            let y = block_apply(&self.blocks[k], x);
            a.push(y[0]);
            b.push(y[1]);
        }
        [
            SpectralField::from_coeffs(&self.grid, a).expect("sized to grid"),
            SpectralField::from_coeffs(&self.grid, b).expect("sized to grid"),
        ]
    }

    /// Max relative error of Q S Q⁻¹ against the stored blocks.
    pub fn max_reconstruction_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (block, eig) in self.blocks.iter().zip(&self.eigs) {
            let scale = block_max_norm(block).max(1e-300);
            if let BlockEig::Diagonalizable { q, s, qinv } = eig {
                let d: Block = [s[0], Complex64::ZERO, Complex64::ZERO, s[1]];
                let rec = block_mul(q, &block_mul(&d, qinv));
                let mut err: f64 = 0.0;
                for i in 0..4 {
                    err = err.max((rec[i] - block[i]).norm());
                }
                worst = worst.max(err / scale);
            }
        }
        worst
    }
}

/// Chebyshev–Lobatto collocation nodes c_j = (1 − cos(πj/ν))/2, j = 0..ν.
pub fn lobatto_nodes(nu: usize) -> Result<Vec<f64>> {
    if nu == 0 {
        return Err(WaveError::Parameter(
            "collocation degree must be at least 1".into(),
        ));
    }
    Ok((0..=nu)
        .map(|j| (1.0 - (std::f64::consts::PI * j as f64 / nu as f64).cos()) / 2.0)
        .collect())
}

/// Collocation polynomial degree and nodes.
#[derive(Clone, Debug)]
pub struct CollocationScheme {
    nu: usize,
    nodes: Vec<f64>,
    /// lagrange[j][m] = coefficient of s^m in ℓ_j(s).
    lagrange: Vec<Vec<f64>>,
}

impl CollocationScheme {
    pub fn new(nu: usize) -> Result<Self> {
        let nodes = lobatto_nodes(nu)?;
        let mut lagrange = Vec::with_capacity(nu + 1);
        for j in 0..=nu {
            let mut poly = vec![1.0];
            for (k, &ck) in nodes.iter().enumerate() {
                if k == j {
                    continue;
                }
                let denom = nodes[j] - ck;
                // poly ← poly · (s − c_k)/denom
                let mut next = vec![0.0; poly.len() + 1];
                for (m, &p) in poly.iter().enumerate() {
                    next[m] -= p * ck / denom;
                    next[m + 1] += p / denom;
                }
                poly = next;
            }
            lagrange.push(poly);
        }
        Ok(Self {
            nu,
            nodes,
            lagrange,
        })
    }

    pub fn degree(&self) -> usize {
        self.nu
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
}

/// Per-eigenvalue exponential quadrature weights
/// W_{r,j} = ∫₀^{c_r} e^{(c_r−s)Δt·A} ℓ_j(s) ds
/// as 2×2 blocks per mode, plus the propagators e^{c_r Δt A}.
pub struct ExpWeights {
    /// exps[r−1][k] = e^{c_r Δt A_k}.
    exps: Vec<Vec<Block>>,
    /// weights[r−1][j][k].
    weights: Vec<Vec<Vec<Block>>>,
}

/// Expand ℓ_j in monomials and integrate each against the exponential kernel:
/// ∫₀^{c_r} e^{(c_r−s)z} s^m ds = c_r^{m+1} m! φ_{m+1}(c_r z).
pub fn exp_weights(
    operator: &BlockDiagonalWaveOperator,
    dt: f64,
    scheme: &CollocationScheme,
) -> Result<ExpWeights> {
    if !dt.is_finite() || dt <= 0.0 {
        return Err(WaveError::Parameter(format!(
            "step size must be positive, got {dt}"
        )));
    }
    let nu = scheme.nu;
    let ny = operator.grid.nyquist();
    let mut exps = Vec::with_capacity(nu);
    let mut weights = Vec::with_capacity(nu);
    for r in 1..=nu {
        let cr = scheme.nodes[r];
        let x = cr * dt;
        let mut exp_row = Vec::with_capacity(ny + 1);
        let mut w_row: Vec<Vec<Block>> = vec![Vec::with_capacity(ny + 1); nu + 1];
        for k in 0..=ny {
            let eig = &operator.eigs[k];
            exp_row.push(eig.exponential(x));
            let phis = eig.phi_family(x, nu + 1);
            for (j, row) in w_row.iter_mut().enumerate() {
                let mut w = ZERO_BLOCK;
                let mut cr_pow = cr;
                let mut m_fact = 1.0;
                for (m, &a_jm) in scheme.lagrange[j].iter().enumerate() {
                    if m > 0 {
                        cr_pow *= cr;
                        m_fact *= m as f64;
                    }
                    let factor = a_jm * cr_pow * m_fact;
                    w = block_add(&w, &block_scale(&phis[m + 1], factor.into()));
                }
                row.push(w);
            }
        }
        exps.push(exp_row);
        weights.push(w_row);
    }
    Ok(ExpWeights { exps, weights })
}

/// Fixed-point iteration parameters for the collocation system.
#[derive(Clone, Copy, Debug)]
pub struct SolveParams {
    pub tol: f64,
    pub max_iter: usize,
    /// Initial damping factor θ ∈ (0, 1]; halved automatically while the
    /// iteration is outside the contraction regime.
    pub damping: f64,
}

impl Default for SolveParams {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 100,
            damping: 1.0,
        }
    }
}

/// Precomputed step machinery for fixed (L, Δt, scheme). Immutable after
/// construction; shareable across threads.
pub struct EtdStepper {
    grid: PeriodicGrid,
    dt: f64,
    scheme: CollocationScheme,
    tables: ExpWeights,
    params: SolveParams,
}

type Coeffs = Vec<[Complex64; 2]>;

impl EtdStepper {
    pub fn new(
        operator: &BlockDiagonalWaveOperator,
        dt: f64,
        scheme: CollocationScheme,
        params: SolveParams,
    ) -> Result<Self> {
        if params.tol <= 0.0 {
            return Err(WaveError::Parameter("tolerance must be positive".into()));
        }
        let tables = exp_weights(operator, dt, &scheme)?;
        Ok(Self {
            grid: operator.grid.clone(),
            dt,
            scheme,
            tables,
            params,
        })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    fn pack(&self, u: &FieldPair) -> Coeffs {
        u[0].coeffs()
            .iter()
            .zip(u[1].coeffs())
            .map(|(&a, &b)| [a, b])
            .collect()
    }

    fn unpack(&self, c: &Coeffs) -> FieldPair {
        let a: Vec<Complex64> = c.iter().map(|p| p[0]).collect();
        let b: Vec<Complex64> = c.iter().map(|p| p[1]).collect();
        [
            SpectralField::from_coeffs(&self.grid, a).expect("sized to grid"),
            SpectralField::from_coeffs(&self.grid, b).expect("sized to grid"),
        ]
    }

    /// Advance one step from time `t`.
    pub fn step<F>(&self, t: f64, u: &FieldPair, n: &F) -> Result<FieldPair>
    where
        F: Fn(f64, &FieldPair) -> FieldPair + ?Sized,
    {
        let nu = self.scheme.nu;
        let modes = self.grid.nyquist() + 1;
        let u0 = self.pack(u);
        let scale = 1.0 + coeff_norm(&u0);

        // propagated initial data e^{c_r Δt L} u_0 and the initial guess
        let prop: Vec<Coeffs> = (0..nu)
            .map(|ri| {
                (0..modes)
                    .map(|k| block_apply(&self.tables.exps[ri][k], u0[k]))
                    .collect()
            })
            .collect();
        let mut nodes: Vec<Coeffs> = prop.clone();

        let n0 = self.pack(&n(t, u));
        let mut n_vals: Vec<Coeffs> = vec![n0; nu + 1];

        let mut theta = self.params.damping.clamp(1e-3, 1.0);
        let mut prev_residual = f64::INFINITY;
        for _iter in 0..self.params.max_iter {
            for (j, nv) in n_vals.iter_mut().enumerate().skip(1) {
                let uj = self.unpack(&nodes[j - 1]);
                *nv = self.pack(&n(t + self.scheme.nodes[j] * self.dt, &uj));
            }
            let mut residual: f64 = 0.0;
            let mut updated = Vec::with_capacity(nu);
            for ri in 0..nu {
                let mut new_node = prop[ri].clone();
                for k in 0..modes {
                    let mut acc = [Complex64::ZERO; 2];
                    for (j, nv) in n_vals.iter().enumerate() {
                        let w = &self.tables.weights[ri][j][k];
                        let y = block_apply(w, nv[k]);
                        acc[0] += y[0];
                        acc[1] += y[1];
                    }
                    new_node[k][0] += self.dt * acc[0];
                    new_node[k][1] += self.dt * acc[1];
                }
                let mut diff = 0.0f64;
                for k in 0..modes {
                    diff += (new_node[k][0] - nodes[ri][k][0]).norm_sqr()
                        + (new_node[k][1] - nodes[ri][k][1]).norm_sqr();
                }
                residual = residual.max(diff.sqrt() / scale);
                updated.push(new_node);
            }

            if residual <= self.params.tol {
                return Ok(self.unpack(&updated[nu - 1]));
            }
            if residual >= prev_residual {
                if prev_residual < 0.1 {
                    // residuals must shrink monotonically once contracting
                    return Err(WaveError::Convergence {
                        what: "etd collocation fixed point (residual increased)".into(),
                        residual,
                    });
                }
                theta *= 0.5;
                if theta < 1.0 / 64.0 {
                    return Err(WaveError::Convergence {
                        what: "etd collocation fixed point (damping exhausted)".into(),
                        residual,
                    });
                }
            }
            for (node, new_node) in nodes.iter_mut().zip(updated) {
                if theta >= 1.0 {
                    *node = new_node;
                } else {
                    for (old, new) in node.iter_mut().zip(new_node) {
                        old[0] += theta * (new[0] - old[0]);
                        old[1] += theta * (new[1] - old[1]);
                    }
                }
            }
            prev_residual = residual;
        }
        Err(WaveError::Convergence {
            what: "etd collocation fixed point (max iterations)".into(),
            residual: prev_residual,
        })
    }
}

fn coeff_norm(c: &Coeffs) -> f64 {
    c.iter()
        .map(|p| p[0].norm_sqr() + p[1].norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Single collocation step built from scratch; prefer [`EtdStepper`] when
/// taking many steps with the same (L, Δt, ν).
pub fn etd_step<F>(
    u0: &FieldPair,
    dt: f64,
    operator: &BlockDiagonalWaveOperator,
    n: &F,
    scheme: &CollocationScheme,
    tol: f64,
    max_iter: usize,
) -> Result<FieldPair>
where
    F: Fn(f64, &FieldPair) -> FieldPair,
{
    let stepper = EtdStepper::new(
        operator,
        dt,
        scheme.clone(),
        SolveParams {
            tol,
            max_iter,
            damping: 1.0,
        },
    )?;
    stepper.step(0.0, u0, n)
}

/// Uniform-step evolution options.
#[derive(Clone, Copy, Debug)]
pub struct EvolveOptions {
    /// Collocation degree ν.
    pub nu: usize,
    pub solve: SolveParams,
    /// Hou–Li filter applied to the state once per accepted step.
    pub filter: bool,
    /// Abort when max |h| exceeds this bound.
    pub blowup_bound: f64,
    /// Record every n-th step (0 records only the endpoints).
    pub record_every: usize,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        Self {
            nu: 4,
            solve: SolveParams::default(),
            filter: true,
            blowup_bound: 1e6,
            record_every: 0,
        }
    }
}

/// Recorded states at step multiples.
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<FieldPair>,
}

impl Trajectory {
    pub fn last(&self) -> &FieldPair {
        self.states.last().expect("trajectory holds the endpoint")
    }
}

/// March u_t = Lu + N(u, t) from t = 0 to `t_final` in `n_steps` uniform
/// steps, recording states at step multiples.
pub fn evolve<F>(
    operator: &BlockDiagonalWaveOperator,
    n: &F,
    u0: &FieldPair,
    t_final: f64,
    n_steps: usize,
    opts: &EvolveOptions,
) -> Result<Trajectory>
where
    F: Fn(f64, &FieldPair) -> FieldPair + ?Sized,
{
    if n_steps == 0 {
        return Err(WaveError::Parameter("at least one step required".into()));
    }
    if !(t_final > 0.0) {
        return Err(WaveError::Parameter("final time must be positive".into()));
    }
    let dt = t_final / n_steps as f64;
    let stepper = EtdStepper::new(operator, dt, CollocationScheme::new(opts.nu)?, opts.solve)?;
    let mut u = u0.clone();
    let mut traj = Trajectory {
        times: vec![0.0],
        states: vec![u.clone()],
    };
    for step in 1..=n_steps {
        let t = (step - 1) as f64 * dt;
        u = stepper.step(t, &u, n)?;
        if opts.filter {
            u = [u[0].houli_filter(), u[1].houli_filter()];
        }
        let max_h = u[0].max_abs();
        if !max_h.is_finite() || max_h > opts.blowup_bound {
            return Err(WaveError::Blowup {
                step,
                time: step as f64 * dt,
                max_value: max_h,
                bound: opts.blowup_bound,
            });
        }
        let record = step == n_steps
            || (opts.record_every > 0 && step % opts.record_every == 0);
        if record {
            traj.times.push(step as f64 * dt);
            traj.states.push(u.clone());
        }
    }
    Ok(traj)
}
