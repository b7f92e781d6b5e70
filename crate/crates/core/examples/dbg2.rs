use hwave_core::etd::*;
use hwave_core::models::*;
use hwave_core::spectral::*;
use num_complex::Complex64;

fn main() {
    // which cubic_q assert fails: print all the diffs
    let g = PeriodicGrid::new(64).unwrap();
    let h = SpectralField::from_fn(&g, |x| x.cos());
    let zero = SpectralField::zero(&g);
    println!(
        "zero q l2 = {:e}",
        cubic_q(&zero, &zero, 1.0).unwrap().l2_norm()
    );
    let q = cubic_q(&h, &zero, 1.0).unwrap();
    let expect = SpectralField::from_fn(&g, |x| 0.25 * x.cos());
    println!("q vs quarter-cos diff = {:e}", q.sub(&expect).unwrap().l2_norm());
    let ht = SpectralField::from_fn(&g, |x| 0.5 * (2.0 * x).sin());
    let q1 = cubic_q(&h, &ht, 1.0).unwrap();
    let q2 = cubic_q(&h.scale(2.0), &ht.scale(2.0), 1.0).unwrap();
    println!(
        "homogeneity diff = {:e}, mean = {:e}",
        q2.sub(&q1.scale(8.0)).unwrap().l2_norm(),
        q1.mean().abs()
    );

    // Clenshaw-Curtis exactness check for nu = 4: is t^5 integrated exactly?
    let g8 = PeriodicGrid::new(8).unwrap();
    let op = BlockDiagonalWaveOperator::zero(&g8);
    let u0 = [SpectralField::zero(&g8), SpectralField::zero(&g8)];
    for nu in [3usize, 4, 5] {
        let scheme = CollocationScheme::new(nu).unwrap();
        for deg in 2..=7u32 {
            let nf = |t: f64, u: &FieldPair| {
                let mut a = SpectralField::zero(u[0].grid());
                a.set_coeff(0, Complex64::new(t.powi(deg as i32), 0.0));
                [a, SpectralField::zero(u[0].grid())]
            };
            let dt: f64 = 0.7;
            let u1 = etd_step(&u0, dt, &op, &nf, &scheme, 1e-14, 50).unwrap();
            let exact = dt.powi(deg as i32 + 1) / (deg as f64 + 1.0);
            println!(
                "nu={nu} deg={deg}: err = {:.3e}",
                (u1[0].mean() - exact).abs() / exact
            );
        }
    }

    // scalar exp order for nu=4: halve dt, watch error ratio
    let scheme = CollocationScheme::new(4).unwrap();
    let mut u0f = SpectralField::zero(&g8);
    u0f.set_coeff(0, Complex64::new(1.0, 0.0));
    let n = |_t: f64, u: &FieldPair| [u[0].clone(), SpectralField::zero(u[0].grid())];
    let mut prev = 0.0;
    for &steps in &[1usize, 2, 4, 8] {
        let dt = 0.2 / steps as f64;
        let mut u = [u0f.clone(), SpectralField::zero(&g8)];
        let stepper = EtdStepper::new(
            &op,
            dt,
            scheme.clone(),
            SolveParams {
                tol: 1e-15,
                max_iter: 200,
                damping: 1.0,
            },
        )
        .unwrap();
        for s in 0..steps {
            u = stepper.step(s as f64 * dt, &u, &n).unwrap();
        }
        let err = (u[0].mean() - 0.2f64.exp()).abs();
        let ratio = if prev > 0.0 { prev / err } else { 0.0 };
        println!("nu=4 steps={steps}: err {err:.3e} ratio {ratio:.1}");
        prev = err;
    }
}
