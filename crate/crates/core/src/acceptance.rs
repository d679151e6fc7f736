//! Acceptance criteria, runnable from tests and from the command line.
//!
//! Every criterion is pinned to a fixed tolerance. `Level::Full` adds a few
//! longer sweeps (ids prefixed with `X`) on top of the numbered criteria.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alpha::{alpha_solve, constant_from_alpha};
use crate::asymptotics::{
    arg_a, arg_gamma_half, arg_gamma_one, difference_law, dn_asymptote, dn_from_zero_asymptote, slope_constant,
    zero_asymptote,
};
use crate::continuous::{
    certificate_profile, extremal_normalized, sharp_constant, verify_equality, weight_certificate, IntervalSpec,
};
use crate::discrete::{
    almost_extremal, certificate_lower, corollary2_bounds, default_eigen_tol, dn_eigen, hardy_gram_apply,
    partial_sum_closed_form, HardyOperator, DEFAULT_SEED,
};
use crate::hahn::{cdh_eval, dn_hahn, jacobi_matrix, smallest_zero, HahnParams};
use crate::kernel::tridiag_eigenvalues;
use crate::{euler_gamma, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub level: Level,
    /// Relative perturbation applied to every computed sharp constant before
    /// it is compared. Zero in normal runs; a non-zero value checks that the
    /// suite notices a wrong constant.
    pub constant_perturbation: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { level: Level::Fast, constant_perturbation: 0.0 }
    }
}

impl VerifyOptions {
    fn constant(&self, d: f64) -> f64 {
        d * (1.0 + self.constant_perturbation)
    }

    fn hahn(&self, n: usize) -> Result<f64> {
        Ok(self.constant(dn_hahn::<f64>(n)?.d_n))
    }
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type Check = fn(&VerifyOptions) -> Result<(bool, String)>;

const CRITERIA: &[(&str, &str, Check)] = &[
    ("1", "continuous equality at the extremal function", c01_equality),
    ("2", "characteristic root bracket and residual", c02_alpha_sweep),
    ("3", "closed-form anchors n = 1, 2", c03_anchors),
    ("4", "eigen and dual Hahn routes agree", c04_routes_agree),
    ("5", "two-sided bounds on d_n", c05_sandwich),
    ("6", "almost extremal sequence lower-bound chain", c06_lower_chain),
    ("7", "partial-sum identity n = 1000", c07_partial_sums),
    ("8", "argument slope near zero", c08_slope),
    ("9", "smallest-zero asymptote", c09_zero_asymptote),
    ("10", "asymptote identity and difference law trend", c10_asymptote_consistency),
    ("11", "matrix-free and series oracles", c11_oracles),
    ("12", "flat certificate for the extremal weight", c12_certificate),
];

const EXTENDED: &[(&str, &str, Check)] = &[
    ("X1", "equality on 20 random intervals", x1_random_intervals),
    ("X2", "section monotonicity n = 1..200", x2_monotone),
    ("X3", "eigen and dual Hahn agree at n = 10^4", x3_large_n),
    ("X4", "Jacobi eigenvalues interlace n <= 50", x4_interlacing),
];

pub fn criterion_ids(level: Level) -> Vec<&'static str> {
    table(level).map(|c| c.0).collect()
}

fn table(level: Level) -> impl Iterator<Item = &'static (&'static str, &'static str, Check)> {
    let extra: &[_] = if level == Level::Full { EXTENDED } else { &[] };
    CRITERIA.iter().chain(extra)
}

fn evaluate(entry: &(&'static str, &'static str, Check), opts: &VerifyOptions) -> CriterionOutcome {
    let start = Instant::now();
    let (passed, detail) = match (entry.2)(opts) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionOutcome { id: entry.0, title: entry.1, passed, detail, elapsed: start.elapsed() }
}

/// Runs one criterion by id, or `None` for an unknown id.
pub fn run_criterion(id: &str, opts: &VerifyOptions) -> Option<CriterionOutcome> {
    table(Level::Full).find(|c| c.0 == id).map(|c| evaluate(c, opts))
}

pub fn run(opts: &VerifyOptions) -> Vec<CriterionOutcome> {
    table(opts.level).map(|c| evaluate(c, opts)).collect()
}

impl std::fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>3}  {:<48} {:>9.3}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

fn c01_equality(o: &VerifyOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut worst = 0.0f64;
    let mut slowest = 0.0f64;
    for (a, b) in [(1.0, 2.0), (1.0, std::f64::consts::E), (0.5, 10.0), (1.0, 1e6)] {
        let start = Instant::now();
        let r = verify_equality(IntervalSpec::new(a, b)?, 1e-10)?;
        let secs = start.elapsed().as_secs_f64();
        let ratio = r.lhs / o.constant(r.rhs);
        let dev = (ratio - 1.0).abs();
        worst = worst.max(dev);
        slowest = slowest.max(secs);
        ok &= dev <= 1e-8 && secs < 1.0;
    }
    Ok((ok, format!("max |ratio-1| = {worst:.2e} (tol 1e-8), slowest {slowest:.3}s (limit 1s)")))
}

fn c02_alpha_sweep(_: &VerifyOptions) -> Result<(bool, String)> {
    let (lo, hi) = (0.1f64.ln(), 1e4f64.ln());
    let mut ok = true;
    let mut worst = 0.0f64;
    for i in 0..50 {
        let l = (lo + (hi - lo) * i as f64 / 49.0).exp();
        let r = alpha_solve(l)?;
        worst = worst.max(r.residual);
        ok &= r.bracket_lo < r.alpha && r.alpha < r.bracket_hi && r.residual <= 1e-13;
        ok &= r.bracket_lo == PI / (2.0 * l) && r.bracket_hi == PI / l;
    }
    Ok((ok, format!("50 lengths, max residual {worst:.2e} (tol 1e-13)")))
}

fn c03_anchors(o: &VerifyOptions) -> Result<(bool, String)> {
    let tol = default_eigen_tol();
    let d2 = (3.0 + 5f64.sqrt()) / 4.0;
    let e1 = dn_eigen::<f64>(1, tol, DEFAULT_SEED)?.d_n;
    let e2 = dn_eigen::<f64>(2, tol, DEFAULT_SEED)?.d_n;
    let h2 = o.hahn(2)?;
    let ok = e1 == 1.0 && (e2 - d2).abs() <= 1e-12 && (h2 - d2).abs() <= 1e-12;
    Ok((ok, format!("d1 = {e1}, |eigen2 - c| = {:.2e}, |hahn2 - c| = {:.2e}", (e2 - d2).abs(), (h2 - d2).abs())))
}

fn c04_routes_agree(o: &VerifyOptions) -> Result<(bool, String)> {
    let start = Instant::now();
    let tol = default_eigen_tol();
    let mut worst = 0.0f64;
    let mut worst_n = 0;
    for n in (1..=200).chain([500, 1000]) {
        let diff = (dn_eigen::<f64>(n, tol, DEFAULT_SEED)?.d_n - o.hahn(n)?).abs();
        if diff > worst {
            worst = diff;
            worst_n = n;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Ok((worst <= 1e-9 && secs < 120.0, format!("max diff {worst:.2e} at n = {worst_n} (tol 1e-9), {secs:.2}s")))
}

fn c05_sandwich(o: &VerifyOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut tightest = f64::INFINITY;
    for n in (3..=200).chain([1000, 10_000]) {
        let (lo, hi) = corollary2_bounds::<f64>(n)?;
        let d = o.hahn(n)?;
        ok &= lo <= d && d <= hi;
        tightest = tightest.min((d - lo).min(hi - d));
    }
    Ok((ok, format!("smallest margin {tightest:.3e}")))
}

fn c06_lower_chain(o: &VerifyOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [10, 100, 1000, 10_000] {
        let s = almost_extremal::<f64>(n)?;
        let bound = s.lower_bound();
        let cert = certificate_lower(&s.values)?;
        let d = o.hahn(n)?;
        ok &= s.rayleigh >= bound - 1e-12 && cert >= bound - 1e-12;
        ok &= s.rayleigh <= d + 1e-10 && cert <= d + 1e-10;
        parts.push(format!("n={n}: {bound:.6} <= R {:.6}, M {:.6} <= {d:.6}", s.rayleigh, cert));
    }
    Ok((ok, parts.join("; ")))
}

fn c07_partial_sums(_: &VerifyOptions) -> Result<(bool, String)> {
    let n = 1000;
    let s = almost_extremal::<f64>(n)?;
    let mut acc = 0.0;
    let mut worst = 0.0f64;
    for (k, &a) in s.values.iter().enumerate() {
        acc += a;
        worst = worst.max((acc - partial_sum_closed_form(s.root.alpha, k + 1)).abs());
    }
    let scale = 2.0 * ((n + 1) as f64).sqrt();
    Ok((worst <= 1e-10 * scale, format!("max deviation {worst:.2e} (limit {:.2e})", 1e-10 * scale)))
}

fn c08_slope(_: &VerifyOptions) -> Result<(bool, String)> {
    let x = 1e-3;
    let g = euler_gamma::<f64>();
    let slope = arg_a(x)?.slope_estimate;
    let half = arg_gamma_half(x)? / x;
    let one = arg_gamma_one(x)? / x;
    let d0 = (slope - slope_constant::<f64>()).abs();
    let d1 = (half - (g + 2.0 * 2f64.ln())).abs();
    let d2 = (one - 2.0 * g).abs();
    Ok((
        d0 <= 1e-4 && d1 <= 1e-4 && d2 <= 1e-4,
        format!("slope {slope:.7} (dev {d0:.1e}), sub-slopes dev {d1:.1e}, {d2:.1e}"),
    ))
}

fn c09_zero_asymptote(_: &VerifyOptions) -> Result<(bool, String)> {
    let start = Instant::now();
    let big = smallest_zero::<f64>(10_000)?.x1 / zero_asymptote::<f64>(10_000)?;
    let small = smallest_zero::<f64>(100)?.x1 / zero_asymptote::<f64>(100)?;
    let secs = start.elapsed().as_secs_f64();
    let ok = (0.9..=1.1).contains(&big) && (big - 1.0).abs() < (small - 1.0).abs() && secs < 60.0;
    Ok((ok, format!("ratio {big:.6} at 1e4, {small:.6} at 1e2")))
}

fn c10_asymptote_consistency(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut identity = true;
    for n in [2usize, 3, 10, 100, 12_345, 1_000_000, 1 << 40] {
        let a = dn_asymptote::<f64>(n)?;
        identity &= (a - dn_from_zero_asymptote::<f64>(n)?).abs() <= 1e-14 * a;
    }
    let law: Vec<f64> =
        [1_000usize, 10_000, 100_000, 1_000_000].iter().map(|&n| difference_law::<f64>(n)).collect::<Result<_>>()?;
    let toward_one = law.windows(2).all(|w| (w[1] - 1.0).abs() <= (w[0] - 1.0).abs());
    let values = law.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>().join(", ");
    Ok((identity && toward_one, format!("identity {identity}; difference law at 1e3..1e6: {values}")))
}

fn c11_oracles(_: &VerifyOptions) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst = 0.0f64;
    for n in [2usize, 3, 8, 64] {
        let op = HardyOperator::new(n)?;
        let dense = dense_gram(n);
        for _ in 0..20 {
            let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let fast = hardy_gram_apply(op, &v)?;
            let slow: Vec<f64> = dense.iter().map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
            let num = fast.iter().zip(&slow).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            let den = slow.iter().map(|x| x * x).sum::<f64>().sqrt();
            worst = worst.max(num / den);
        }
    }
    let mut worst_zero = 0.0f64;
    let p = HahnParams::half();
    for n in 1..=10 {
        let ev = tridiag_eigenvalues(&jacobi_matrix(n, p)?.tridiag, 1e-15)?;
        for t in ev {
            let scale = (0..=400).map(|i| cdh_eval(n, 2.0 * t * i as f64 / 400.0, p).abs()).fold(0.0, f64::max);
            worst_zero = worst_zero.max(cdh_eval(n, t, p).abs() / scale);
        }
    }
    Ok((
        worst <= 1e-12 && worst_zero <= 1e-8,
        format!("gram rel err {worst:.2e} (tol 1e-12), scaled |S_n(t)| {worst_zero:.2e} (tol 1e-8)"),
    ))
}

fn c12_certificate(o: &VerifyOptions) -> Result<(bool, String)> {
    let iv = IntervalSpec::new(1.0, 2.0)?;
    let report = sharp_constant(iv)?;
    let d = o.constant(report.d);
    let alpha = report.root.alpha;
    let profile = certificate_profile(iv, |u| extremal_normalized(alpha, u), 16)?;
    let max = profile.iter().map(|p| p.1).fold(f64::MIN, f64::max);
    let min = profile.iter().map(|p| p.1).fold(f64::MAX, f64::min);
    let refined = weight_certificate(iv, |u| extremal_normalized(alpha, u), 16)?;
    let ok = max - min <= 1e-6 && (max - d).abs() <= 1e-6 && (refined - d).abs() <= 1e-6;
    Ok((ok, format!("spread {:.2e}, |max - d| = {:.2e}", max - min, (max - d).abs())))
}

fn x1_random_intervals(o: &VerifyOptions) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut ok = true;
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let a = 10f64.powf(rng.gen_range(-3.0..3.0));
        let ratio = 10f64.powf(rng.gen_range(1.1f64.log10()..6.0));
        let r = verify_equality(IntervalSpec::new(a, a * ratio)?, 1e-10)?;
        let dev = (r.lhs / o.constant(r.rhs) - 1.0).abs();
        worst = worst.max(dev / r.quad_error);
        ok &= dev <= 10.0 * r.quad_error;
    }
    Ok((ok, format!("max |ratio-1| / quad_error = {worst:.3}")))
}

fn x2_monotone(_: &VerifyOptions) -> Result<(bool, String)> {
    let tol = default_eigen_tol();
    let mut prev = 0.0;
    let mut ok = true;
    for n in 1..=201 {
        let d = dn_eigen::<f64>(n, tol, DEFAULT_SEED)?.d_n;
        ok &= d > prev && d < 4.0;
        prev = d;
    }
    Ok((ok, format!("d_201 = {prev:.12}")))
}

fn x3_large_n(o: &VerifyOptions) -> Result<(bool, String)> {
    let e = dn_eigen::<f64>(10_000, default_eigen_tol(), DEFAULT_SEED)?.d_n;
    let h = o.hahn(10_000)?;
    Ok(((e - h).abs() <= 1e-9, format!("|eigen - hahn| = {:.2e}", (e - h).abs())))
}

fn x4_interlacing(_: &VerifyOptions) -> Result<(bool, String)> {
    let p = HahnParams::half();
    let mut prev = tridiag_eigenvalues(&jacobi_matrix(1, p)?.tridiag, 1e-13)?;
    let mut ok = true;
    for n in 2..=50 {
        let cur = tridiag_eigenvalues(&jacobi_matrix(n, p)?.tridiag, 1e-13)?;
        ok &= prev.iter().enumerate().all(|(i, &t)| cur[i] < t && t < cur[i + 1]);
        ok &= cur[0] > 0.0;
        prev = cur;
    }
    Ok((ok, "strict interlacing checked for n = 1..50".to_string()))
}

/// Dense `HᵀH`, `(HᵀH)_{ij} = Σ_{k ≥ max(i,j)} 1/k²`.
fn dense_gram(n: usize) -> Vec<Vec<f64>> {
    let mut tail = vec![0.0; n + 1];
    for k in (1..=n).rev() {
        tail[k - 1] = tail[k] + 1.0 / (k * k) as f64;
    }
    (0..n).map(|i| (0..n).map(|j| tail[i.max(j)]).collect()).collect()
}

/// Lower bound implied by the closed chain `4/(1+4α²) ≥ 4 − 16α² > 4 − 16π²/ln²(n+1)`.
pub fn lower_chain_holds(n: usize) -> Result<bool> {
    let l = ((n + 1) as f64).ln();
    let alpha = alpha_solve(l)?.alpha;
    let c = constant_from_alpha(alpha);
    Ok(c >= 4.0 - 16.0 * alpha * alpha && 4.0 - 16.0 * alpha * alpha > 4.0 - 16.0 * PI * PI / (l * l))
}
