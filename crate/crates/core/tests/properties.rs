use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use proptest::prelude::*;
use sharp_hardy::hahn::{cdh_eval, jacobi_matrix, HahnParams};
use sharp_hardy::kernel::{integrate_adaptive, log_gamma_complex, tridiag_eigenvalues};
use sharp_hardy::{
    alpha_solve, dn_eigen, dn_hahn, extremal_eval, hardy_gram_apply, rayleigh_quotient, sharp_constant,
    ExtremalFunctionSpec, HardyOperator, IntervalSpec,
};

fn dense_gram(n: usize) -> DMatrix<f64> {
    let mut tail = vec![0.0; n + 1];
    for k in (1..=n).rev() {
        tail[k - 1] = tail[k] + 1.0 / (k * k) as f64;
    }
    DMatrix::from_fn(n, n, |i, j| tail[i.max(j)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constant_is_scale_invariant(a in 1e-3f64..1e3, ratio in 1.01f64..1e5, s in 1e-2f64..1e2) {
        let d1 = sharp_constant(IntervalSpec::new(a, a * ratio).unwrap()).unwrap().d;
        let d2 = sharp_constant(IntervalSpec::new(a * s, a * s * ratio).unwrap()).unwrap().d;
        prop_assert!((d1 - d2).abs() <= 1e-13 * d1);
    }

    #[test]
    fn alpha_inside_bracket(log_l in (0.1f64).ln()..(1e6f64).ln()) {
        let l = log_l.exp();
        let r = alpha_solve(l).unwrap();
        prop_assert!(r.bracket_lo < r.alpha && r.alpha < r.bracket_hi);
        prop_assert!(r.residual <= 1e-13);
    }

    #[test]
    fn alpha_short_lengths(log_l in (1e-6f64).ln()..(0.1f64).ln()) {
        // F has terms of size 2α here, so the residual is scaled by it.
        let l = log_l.exp();
        let r = alpha_solve(l).unwrap();
        prop_assert!(r.bracket_lo < r.alpha && r.alpha < r.bracket_hi);
        prop_assert!(r.residual <= 1e-13 * 2.0 * r.alpha);
    }

    #[test]
    fn alpha_l_expansion(l in 50f64..1e5) {
        let r = alpha_solve(l).unwrap();
        prop_assert!((r.alpha * l - (PI - 2.0 * PI / l)).abs() <= 10.0 * PI / (l * l));
    }

    #[test]
    fn constant_increases_with_length(b in 1.01f64..1e6, f in 1.001f64..10.0) {
        let d1 = sharp_constant(IntervalSpec::new(1.0, b).unwrap()).unwrap().d;
        let d2 = sharp_constant(IntervalSpec::new(1.0, b * f).unwrap()).unwrap().d;
        prop_assert!(d1 < d2 && d2 < 4.0);
    }

    #[test]
    fn extremal_is_decreasing_and_bounded(b in 1.1f64..1e4, u in 0.0f64..1.0, w in 0.0f64..1.0) {
        let spec = ExtremalFunctionSpec::new(IntervalSpec::new(1.0, b).unwrap()).unwrap();
        let (lo, hi) = if u < w { (u, w) } else { (w, u) };
        let x1 = b.powf(lo);
        let x2 = b.powf(hi);
        let h1 = extremal_eval(&spec, x1).unwrap();
        let h2 = extremal_eval(&spec, x2).unwrap();
        prop_assert!(h2 <= h1 + 1e-12);
        prop_assert!(h1 <= 2.0 * spec.root.alpha + 1e-12);
        prop_assert!(h2 >= -1e-12);
    }

    #[test]
    fn gram_is_symmetric(n in 1usize..40, seed in any::<u64>()) {
        let mut x = vec![0.0; n];
        let mut y = vec![0.0; n];
        let mut s = seed;
        for i in 0..n {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            x[i] = (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            y[i] = (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5;
        }
        let op = HardyOperator::new(n).unwrap();
        let gx = hardy_gram_apply(op, &x).unwrap();
        let gy = hardy_gram_apply(op, &y).unwrap();
        let a: f64 = gx.iter().zip(&y).map(|(p, q)| p * q).sum();
        let b: f64 = gy.iter().zip(&x).map(|(p, q)| p * q).sum();
        prop_assert!((a - b).abs() <= 1e-13 * (1.0 + a.abs()));
    }

    #[test]
    fn rayleigh_below_norm(v in prop::collection::vec(-1.0f64..1.0, 1..80)) {
        prop_assume!(v.iter().any(|x| x.abs() > 1e-6));
        let n = v.len();
        let d = dn_hahn::<f64>(n).unwrap().d_n;
        prop_assert!(rayleigh_quotient(&v).unwrap() <= d + 1e-12);
    }

    #[test]
    fn quadrature_exact_for_cubics(c in prop::array::uniform4(-5.0f64..5.0), a in -3.0f64..3.0, w in 0.1f64..4.0) {
        let b = a + w;
        let p = |x: f64| c[0] + x * (c[1] + x * (c[2] + x * c[3]));
        let anti = |x: f64| x * (c[0] + x * (c[1] / 2.0 + x * (c[2] / 3.0 + x * c[3] / 4.0)));
        let r = integrate_adaptive(p, a, b, 1e-12).unwrap();
        let exact = anti(b) - anti(a);
        prop_assert!((r.value - exact).abs() <= 1e-12 * (1.0 + exact.abs()));
    }

    #[test]
    fn log_gamma_recurrence(re in 0.05f64..20.0, im in -30.0f64..30.0) {
        let z = Complex::new(re, im);
        let lhs = log_gamma_complex(z + 1.0).unwrap();
        let rhs = log_gamma_complex(z).unwrap() + z.ln();
        let diff = lhs - rhs;
        // equal up to a multiple of 2πi
        let turns = (diff.im / (2.0 * PI)).round();
        prop_assert!(diff.re.abs() <= 1e-11 * (1.0 + lhs.re.abs()));
        prop_assert!((diff.im - turns * 2.0 * PI).abs() <= 1e-11 * (1.0 + lhs.im.abs()));
    }
}

#[test]
fn gram_matches_dense() {
    for n in [1usize, 2, 5, 17, 64] {
        let dense = dense_gram(n);
        let v: Vec<f64> = (0..n).map(|i| ((i * 7 + 3) % 11) as f64 - 5.0).collect();
        let fast = hardy_gram_apply(HardyOperator::new(n).unwrap(), &v).unwrap();
        let slow = &dense * nalgebra::DVector::from_vec(v);
        for (a, b) in fast.iter().zip(slow.iter()) {
            assert!((a - b).abs() <= 1e-13 * (1.0 + b.abs()));
        }
    }
}

#[test]
fn dense_spectrum_matches_both_routes() {
    for n in [1usize, 2, 3, 7, 30, 64] {
        let top = SymmetricEigen::new(dense_gram(n)).eigenvalues.max();
        let e = dn_eigen::<f64>(n, 1e-14, 7).unwrap().d_n;
        let h = dn_hahn::<f64>(n).unwrap().d_n;
        assert!((top - e).abs() <= 1e-11, "n={n}");
        assert!((top - h).abs() <= 1e-11, "n={n}");
    }
}

#[test]
fn jacobi_matches_dense_eigenvalues_and_interlaces() {
    let p = HahnParams::<f64>::half();
    let mut prev: Vec<f64> = Vec::new();
    for n in 1..=50 {
        let t = jacobi_matrix(n, p).unwrap().tridiag;
        let ev = tridiag_eigenvalues(&t, 1e-13).unwrap();
        if n <= 20 {
            let dense = DMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    t.diag()[i]
                } else if i + 1 == j {
                    t.offdiag()[i]
                } else if j + 1 == i {
                    t.offdiag()[j]
                } else {
                    0.0
                }
            });
            let mut want: Vec<f64> = SymmetricEigen::new(dense).eigenvalues.iter().copied().collect();
            want.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in ev.iter().zip(&want) {
                assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "n={n}: {a} vs {b}");
            }
        }
        for (i, &x) in prev.iter().enumerate() {
            assert!(ev[i] < x && x < ev[i + 1]);
        }
        prev = ev;
    }
}

#[test]
fn zeros_are_eigenvalues_small_n() {
    let p = HahnParams::<f64>::half();
    for n in 1..=10 {
        for t in tridiag_eigenvalues(&jacobi_matrix(n, p).unwrap().tridiag, 1e-15).unwrap() {
            let scale = (0..=200).map(|i| cdh_eval(n, 2.0 * t * i as f64 / 200.0, p).abs()).fold(0.0, f64::max);
            assert!(cdh_eval(n, t, p).abs() <= 1e-8 * scale);
        }
    }
}

#[test]
fn norm_identity_over_range() {
    let mut prev = 0.0;
    for n in 1..=200 {
        let e = dn_eigen::<f64>(n, 1e-14, 1).unwrap().d_n;
        let h = dn_hahn::<f64>(n).unwrap().d_n;
        assert!((e - h).abs() <= 1e-10, "n={n}");
        assert!(h > prev && h < 4.0);
        prev = h;
    }
}

#[test]
fn single_precision_paths() {
    let d = sharp_constant(sharp_hardy::continuous::IntervalSpec::new(1.0f32, 2.0f32).unwrap()).unwrap().d;
    assert!((d - 0.148_547_24).abs() < 1e-5);
    let h = dn_hahn::<f32>(20).unwrap().d_n;
    let e = dn_eigen::<f32>(20, 1e-6, 3).unwrap().d_n;
    assert!((h - e).abs() < 1e-4);
}
