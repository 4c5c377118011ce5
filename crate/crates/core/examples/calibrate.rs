//! Recomputes the envelope constants frozen in `config/calibration.toml`.
//!
//! Potter: worst ratio |potter_afe - epstein_zeta| / (x^{-sigma} + |X(s)| y^{sigma-1})
//! for the form (1,1,0) over sigma in {0.05, 0.10, ..., 0.95}, t in {20, 21, ..., 200}.
//! The frozen constant is 1.25 times the worst ratio.
//!
//! Slab two-path constant K: worst |hurwitz - asymptotic| / (|eps_3| (lambda_p/L)^{5/3})
//! for d = 3 over L/lambda_p in [1e3, 1e9]; frozen as 1.25 times the worst value.

use casimir_core::afe::{potter_afe_with, potter_default_split};
use casimir_core::casimir::{slab_fc_asymptotic_report, slab_fc_hurwitz_report, SlabConfig};
use casimir_core::epstein::{epstein_zeta, QuadraticForm};
use casimir_core::Calibration;
use num_complex::Complex64;

fn main() {
    let form = QuadraticForm::new(1.0, 1.0, 0.0).unwrap();
    let mut cal = Calibration::builtin();
    cal.potter_envelope_c = 1.0;
    let mut worst = (0.0f64, 0.0, 0.0);
    let mut ratios = Vec::new();
    for i in 1..20 {
        let sigma = 0.05 * i as f64;
        for t in 20..=200 {
            let t = t as f64;
            let s = Complex64::new(sigma, t);
            let split = potter_default_split(&form, t).unwrap();
            let p = potter_afe_with(&form, s, &split, &cal).unwrap();
            let e = epstein_zeta(&form, s).unwrap();
            let r = (p.value - e.value).norm() / p.abs_err;
            ratios.push(r);
            if r > worst.0 {
                worst = (r, sigma, t);
            }
        }
    }
    ratios.sort_by(f64::total_cmp);
    println!("potter median ratio {:.6}", ratios[ratios.len() / 2]);
    println!("potter worst ratio {:.6} at sigma = {:.2}, t = {}", worst.0, worst.1, worst.2);
    println!("potter_envelope_c = {:.4}", 1.25 * worst.0);

    let mut worst_k: f64 = 0.0;
    for i in 0..=60 {
        let ratio = 10f64.powf(3.0 + 0.1 * f64::from(i));
        let cfg = SlabConfig::new(3, 1.0, 1.0 / ratio).unwrap();
        let h = slab_fc_hurwitz_report(&cfg, &cal).unwrap();
        let a = slab_fc_asymptotic_report(&cfg, &cal).unwrap();
        let diff = (h.correction_1 + h.correction_2) - (a.correction_1 + a.correction_2);
        worst_k = worst_k.max(diff.abs() / h.ideal.abs() * ratio.powf(5.0 / 3.0));
    }
    println!("slab two-path worst K {worst_k:.6}");
    println!("slab_two_path_k = {:.4}", 1.25 * worst_k);
}
