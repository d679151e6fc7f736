use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use sharp_hardy::acceptance::{self, Level, VerifyOptions};
use sharp_hardy::discrete::{default_eigen_tol, DEFAULT_SEED};
use sharp_hardy::hahn::HahnParams;
use sharp_hardy::{
    almost_extremal, alpha_solve, arg_a, cdh_eval, certificate_lower, constant_from_alpha, corollary2_bounds,
    difference_law, dn_asymptote, dn_eigen, dn_hahn, rayleigh_quotient, sharp_constant, smallest_zero, verify_equality,
    zero_asymptote, Error, IntervalSpec,
};

use crate::record::{format_real, OutputRecord, Status};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

type CmdResult = Result<(), CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Eigen,
    Hahn,
    Rayleigh,
    Certificate,
    Bounds,
    All,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Eigen => "eigen",
            Method::Hahn => "hahn",
            Method::Rayleigh => "rayleigh",
            Method::Certificate => "certificate",
            Method::Bounds => "bounds",
            Method::All => "all",
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn continuous(rec: &mut OutputRecord, a: f64, b: f64, verify: bool, quad_tol: f64) -> CmdResult {
    rec.input("a", a).input("b", b).input("verify", verify).input("quad_tol", quad_tol);
    if !(quad_tol > 0.0) {
        return Err(usage("--quad-tol must be positive"));
    }
    let iv = IntervalSpec::new(a, b)?;
    let r = sharp_constant(iv)?;
    rec.output("L", r.log_length).output("alpha", r.root.alpha).output("residual", r.root.residual).output("d", r.d);
    if verify {
        let eq = verify_equality(iv, quad_tol)?;
        rec.output("lhs", eq.lhs).output("rhs", eq.rhs).output("ratio", eq.ratio).output("quad_error", eq.quad_error);
        if !((eq.ratio - 1.0).abs() <= 10.0 * eq.quad_error) {
            rec.status = Status::BoundViolation;
        }
    }
    Ok(())
}

pub fn discrete(rec: &mut OutputRecord, n: usize, method: Method) -> CmdResult {
    rec.input("n", n).input("method", method.as_str());
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if method == Method::Bounds && n < 3 {
        return Err(usage("bounds need n >= 3"));
    }
    let want = |m: Method| method == m || method == Method::All;
    let mut eigen = None;
    let mut hahn = None;
    let mut rayleigh = None;
    let mut lower = None;
    let mut bounds = None;
    if want(Method::Eigen) {
        let r = dn_eigen::<f64>(n, default_eigen_tol(), DEFAULT_SEED)?;
        rec.output("d_eigen", r.d_n)
            .output("eigen_iterations", r.iterations as f64)
            .output("eigen_residual", r.residual);
        eigen = Some(r.d_n);
    }
    if want(Method::Hahn) {
        let r = dn_hahn::<f64>(n)?;
        rec.output("d_hahn", r.d_n);
        hahn = Some(r.d_n);
    }
    if want(Method::Rayleigh) || want(Method::Certificate) {
        let s = almost_extremal::<f64>(n)?;
        rec.output("alpha", s.root.alpha).output("lower_bound", s.lower_bound());
        lower = Some(s.lower_bound());
        if want(Method::Rayleigh) {
            let q = rayleigh_quotient(&s.values)?;
            rec.output("rayleigh", q);
            rayleigh = Some(q);
        }
        if want(Method::Certificate) {
            rec.output("certificate", certificate_lower(&s.values)?);
        }
    }
    if want(Method::Bounds) && n >= 3 {
        let (lo, hi) = corollary2_bounds::<f64>(n)?;
        rec.output("bound_lo", lo).output("bound_hi", hi);
        bounds = Some((lo, hi));
    }
    if method == Method::All && n >= 2 {
        rec.output("asymptote", dn_asymptote::<f64>(n)?);
    }
    if method == Method::All {
        let (e, h, q, lb) = (eigen.unwrap(), hahn.unwrap(), rayleigh.unwrap(), lower.unwrap());
        let mut ok = (e - h).abs() <= 1e-9 && q <= e + 1e-10 && q >= lb - 1e-12;
        if let Some((lo, hi)) = bounds {
            ok &= lo <= q && e <= hi && h <= hi;
        }
        if !ok {
            rec.status = Status::BoundViolation;
        }
    }
    Ok(())
}

pub struct AlphaInput {
    pub l: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub n: Option<usize>,
}

pub fn alpha(rec: &mut OutputRecord, input: AlphaInput) -> CmdResult {
    let l = match input {
        AlphaInput { l: Some(l), a: None, b: None, n: None } => {
            rec.input("l", l);
            l
        }
        AlphaInput { l: None, a: Some(a), b: Some(b), n: None } => {
            rec.input("a", a).input("b", b);
            IntervalSpec::new(a, b)?.log_length()
        }
        AlphaInput { l: None, a: None, b: None, n: Some(n) } => {
            rec.input("n", n);
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            ((n + 1) as f64).ln()
        }
        _ => return Err(usage("give exactly one of --l, --a with --b, or --n")),
    };
    let r = alpha_solve(l)?;
    rec.output("L", r.log_length)
        .output("alpha", r.alpha)
        .output("residual", r.residual)
        .output("bracket_lo", r.bracket_lo)
        .output("bracket_hi", r.bracket_hi)
        .output("d", constant_from_alpha(r.alpha));
    Ok(())
}

pub fn hahn(rec: &mut OutputRecord, n: usize, t: Option<f64>) -> CmdResult {
    rec.input("n", n);
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let z = smallest_zero::<f64>(n)?;
    rec.output("t1", z.t1)
        .output("x1", z.x1)
        .output("d_hahn", z.d_from_zero)
        .output("iterations", z.iterations as f64)
        .output("bracket_width", z.bracket_width);
    if n >= 2 {
        rec.output("zero_asymptote", zero_asymptote::<f64>(n)?);
    }
    if let Some(t) = t {
        rec.input("t", t);
        rec.output("s_n", cdh_eval(n, t, HahnParams::half()));
    }
    Ok(())
}

pub fn asym(rec: &mut OutputRecord, n: Option<usize>, x: Option<f64>) -> CmdResult {
    if n.is_none() && x.is_none() {
        return Err(usage("give --n, --x, or both"));
    }
    if let Some(x) = x {
        rec.input("x", x);
        let r = arg_a(x)?;
        rec.output("arg_a", r.arg_a).output("slope_estimate", r.slope_estimate);
    }
    if let Some(n) = n {
        rec.input("n", n);
        rec.output("zero_asymptote", zero_asymptote::<f64>(n)?).output("dn_asymptote", dn_asymptote::<f64>(n)?);
        if n >= 3 {
            rec.output("difference_law", difference_law::<f64>(n)?);
        }
    }
    Ok(())
}

pub const SWEEP_HEADER: &str = "n,d_eigen,d_hahn,rayleigh_lb,certificate_lb,bound_lo,bound_hi,asymptote";

pub struct SweepInput {
    pub n_start: usize,
    pub n_end: usize,
    pub points: usize,
    pub log_spaced: bool,
    pub out: Option<PathBuf>,
}

struct SweepRow {
    n: usize,
    d_eigen: f64,
    d_hahn: f64,
    rayleigh: f64,
    certificate: f64,
    bounds: Option<(f64, f64)>,
    asymptote: Option<f64>,
}

impl SweepRow {
    fn compute(n: usize) -> Result<Self, Error> {
        let s = almost_extremal::<f64>(n)?;
        Ok(Self {
            n,
            d_eigen: dn_eigen::<f64>(n, default_eigen_tol(), DEFAULT_SEED)?.d_n,
            d_hahn: dn_hahn::<f64>(n)?.d_n,
            rayleigh: s.rayleigh,
            certificate: certificate_lower(&s.values)?,
            bounds: if n >= 3 { Some(corollary2_bounds(n)?) } else { None },
            asymptote: if n >= 2 { Some(dn_asymptote(n)?) } else { None },
        })
    }

    fn holds(&self) -> bool {
        let mut ok = (self.d_eigen - self.d_hahn).abs() <= 1e-9
            && self.rayleigh <= self.d_hahn + 1e-10
            && self.certificate <= self.d_hahn + 1e-10;
        if let Some((lo, hi)) = self.bounds {
            ok &= lo <= self.d_hahn && self.d_hahn <= hi;
        }
        ok
    }

    fn csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(format_real).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            format_real(self.d_eigen),
            format_real(self.d_hahn),
            format_real(self.rayleigh),
            format_real(self.certificate),
            opt(self.bounds.map(|b| b.0)),
            opt(self.bounds.map(|b| b.1)),
            opt(self.asymptote)
        )
    }
}

/// Sample points in `[start, end]`, rounded to integers and deduplicated.
pub fn sweep_points(start: usize, end: usize, points: usize, log_spaced: bool) -> Vec<usize> {
    let (s, e) = (start as f64, end as f64);
    let mut ns: Vec<usize> = (0..points)
        .map(|i| {
            let f = i as f64 / (points - 1) as f64;
            let v = if log_spaced { (s.ln() + f * (e.ln() - s.ln())).exp() } else { s + f * (e - s) };
            (v.round() as usize).clamp(start, end)
        })
        .collect();
    ns.dedup();
    ns
}

pub fn sweep(rec: &mut OutputRecord, input: SweepInput) -> CmdResult {
    rec.input("n_start", input.n_start)
        .input("n_end", input.n_end)
        .input("points", input.points)
        .input("log_spaced", input.log_spaced);
    if let Some(p) = &input.out {
        rec.input("out", p.display().to_string().as_str());
    }
    if !(1 <= input.n_start && input.n_start < input.n_end) {
        return Err(usage("need 1 <= n_start < n_end"));
    }
    if input.points < 2 {
        return Err(usage("need at least 2 points"));
    }
    let ns = sweep_points(input.n_start, input.n_end, input.points, input.log_spaced);
    let rows = ns.par_iter().map(|&n| SweepRow::compute(n)).collect::<Result<Vec<_>, _>>()?;

    let write = |w: &mut dyn Write| -> io::Result<()> {
        writeln!(w, "{SWEEP_HEADER}")?;
        for r in &rows {
            writeln!(w, "{}", r.csv())?;
        }
        w.flush()
    };
    let io_result = match &input.out {
        Some(path) => File::create(path).and_then(|f| write(&mut BufWriter::new(f))),
        None => write(&mut io::stdout().lock()),
    };
    io_result.map_err(|e| CliError::Numerical(format!("writing sweep output: {e}")))?;

    let max_diff = rows.iter().map(|r| (r.d_eigen - r.d_hahn).abs()).fold(0.0, f64::max);
    rec.output("rows", rows.len() as f64).output("max_route_difference", max_diff);
    if !rows.iter().all(SweepRow::holds) {
        rec.status = Status::BoundViolation;
    }
    Ok(())
}

pub fn verify_all(rec: &mut OutputRecord, level: Level, tamper: f64) -> CmdResult {
    rec.input("level", if level == Level::Full { "full" } else { "fast" });
    if tamper != 0.0 {
        rec.input("tamper_constant", tamper);
    }
    let outcomes = acceptance::run(&VerifyOptions { level, constant_perturbation: tamper });
    let mut err = io::stderr().lock();
    for o in &outcomes {
        let _ = writeln!(err, "{o}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(err, "{passed}/{} criteria passed", outcomes.len());
    for o in &outcomes {
        rec.output(&format!("criterion_{}", o.id), if o.passed { 1.0 } else { 0.0 });
    }
    rec.output("passed", passed as f64).output("total", outcomes.len() as f64);
    if passed != outcomes.len() {
        rec.status = Status::BoundViolation;
    }
    Ok(())
}
