use hwave_core::etd::*;
use hwave_core::models::*;
use hwave_core::spectral::*;
use num_complex::Complex64;

fn main() {
    let g = PeriodicGrid::new(64).unwrap();
    let h = SpectralField::from_fn(&g, |x| x.cos());
    let zero = SpectralField::zero(&g);
    let q = cubic_q(&h, &zero, 1.0).unwrap();
    println!("cubic_q(cos x, 0) modes 0..5:");
    for k in 0..6 {
        println!("  k={k}: {}", q.coeffs()[k]);
    }

    let single = WaveState::new(
        SpectralField::from_fn(&g, |x| (2.0 * x).cos()),
        SpectralField::zero(&g),
    )
    .unwrap();
    let n = rhs_capillary(&single, 0.0, 1.0).unwrap();
    println!("capillary(cos 2x; g=0, l=1) l2 = {:.3e}", n.l2_norm());
    for k in 0..6 {
        println!("  k={k}: {}", n.coeffs()[k]);
    }

    // scalar exponential
    let g4 = PeriodicGrid::new(4).unwrap();
    let op = BlockDiagonalWaveOperator::zero(&g4);
    let scheme = CollocationScheme::new(3).unwrap();
    let mut u0f = SpectralField::zero(&g4);
    u0f.set_coeff(0, Complex64::new(1.0, 0.0));
    let u0 = [u0f, SpectralField::zero(&g4)];
    let n = |_t: f64, u: &FieldPair| [u[0].clone(), SpectralField::zero(u[0].grid())];
    match etd_step(&u0, 0.1, &op, &n, &scheme, 1e-14, 100) {
        Ok(u1) => println!(
            "scalar exp: {} vs {} diff {:.3e}",
            u1[0].mean(),
            0.1f64.exp(),
            (u1[0].mean() - 0.1f64.exp()).abs()
        ),
        Err(e) => println!("scalar exp error: {e}"),
    }

    // polynomial forcing
    let g8 = PeriodicGrid::new(8).unwrap();
    let op = BlockDiagonalWaveOperator::zero(&g8);
    let u0 = [SpectralField::zero(&g8), SpectralField::zero(&g8)];
    let nf = |t: f64, u: &FieldPair| {
        let mut a = SpectralField::zero(u[0].grid());
        let mut b = SpectralField::zero(u[0].grid());
        a.set_coeff(0, Complex64::new(3.0 * t * t, 0.0));
        b.set_coeff(0, Complex64::new(5.0 * t.powi(4), 0.0));
        [a, b]
    };
    let dt: f64 = 0.7;
    match etd_step(&u0, dt, &op, &nf, &scheme, 1e-14, 50) {
        Ok(u1) => println!(
            "poly: {} vs {} ; {} vs {}",
            u1[0].mean(),
            dt.powi(3),
            u1[1].mean(),
            dt.powi(5)
        ),
        Err(e) => println!("poly error: {e}"),
    }
}
