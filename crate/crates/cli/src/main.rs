mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use k3theta::exactnum::RationalExponent;
use k3theta::invariants::{
    burkhardt_B, cd_from_thetas, d90, embed_cd, igusa, inverse_period_map, IgusaName, WeightedPoint,
};
use k3theta::modgroup::{closure_text, molien_series};
use k3theta::qseries::{
    format_poly, leading_term, qexp_burkhardt, qexp_dk_theta, qexp_igusa, qexp_siegel_theta, FourierSeries,
    SeriesLocus,
};
use k3theta::theta::{
    dk_char, hermitian_theta_eval, siegel_char, siegel_theta_eval, siegel_thetas, HermitianPoint, SiegelPoint,
    TruncationSpec, DEFAULT_TAIL_TOL,
};
use k3theta::verify::{burkhardt_closure, run_suite, Suite, VerifyOptions};
use k3theta::Error;

use input::{parse_complex, parse_complex_list};

const AFTER_HELP: &str = "\
Complex numbers are written `re`, `im i` or `re+im i`, e.g. `0.1+1.2i`.
Lists (for --at) are comma separated: `1,0,0.5i,0,0`.

Exit codes: 0 success, 1 a verification check failed, 2 invalid or
inadmissible input, 3 a lattice sum did not converge.";

#[derive(Parser)]
#[command(name = "k3theta", version, about = "Theta constants, Burkhardt invariants and checks for a K3 family", after_help = AFTER_HELP)]
struct Cli {
    /// Base tolerance for numerical checks
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Seed for sampled points
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of sampled points per check
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    /// Lattice-sum box radius, or `auto` to meet a 1e-12 tail bound
    #[arg(long, global = true, default_value = "auto", value_parser = parse_radius)]
    radius: Radius,
    /// Truncation order in q for series, e.g. `2` or `25/24`
    #[arg(long, global = true, default_value = "2", value_parser = parse_order)]
    order: RationalExponent,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one quantity at a point
    Eval(EvalArgs),
    /// Run a verification suite and print one report per check
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Include measured runtimes in the JSON output (otherwise 0, so
        /// output is reproducible)
        #[arg(long)]
        timing: bool,
    },
    /// Print an exact Fourier expansion
    Qexp(QexpArgs),
    /// Print the elements of the group generated by the theta transformation matrices
    Closure,
    /// Print the Molien series of that group
    Molien {
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Lattice,
    Theta,
    Qexp,
    Invariants,
    Group,
    Fibration,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Lattice => Suite::Lattice,
            SuiteArg::Theta => Suite::Theta,
            SuiteArg::Qexp => Suite::Qexp,
            SuiteArg::Invariants => Suite::Invariants,
            SuiteArg::Group => Suite::Group,
            SuiteArg::Fibration => Suite::Fibration,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalSubject {
    /// Siegel theta constant (needs --index, --tau, --z, --tau-prime)
    Theta,
    /// Hermitian theta constant (needs --index, --tau, --z, --w, --tau-prime)
    DkTheta,
    /// Igusa invariant (needs --name and a Siegel point)
    Igusa,
    /// Burkhardt invariant (needs --weight and --at with 5 values)
    Burkhardt,
    /// The weight-90 discriminant (needs --at with 5 values t4..t18)
    D90,
    /// (t4 : ... : t18) at a Hermitian point
    InversePeriod,
    /// Clingher-Doran parameters at a Siegel point
    CdMap,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    subject: EvalSubject,
    #[command(flatten)]
    point: PointArgs,
    /// Theta index: 0..9 (Siegel) or 0..4 (Hermitian)
    #[arg(long, visible_alias = "k")]
    index: Option<usize>,
    /// Igusa invariant: psi4, psi6, chi10, chi12
    #[arg(long)]
    name: Option<String>,
    /// Burkhardt weight: 4, 6, 10, 12, 18
    #[arg(long)]
    weight: Option<u32>,
    /// Five comma-separated complex values
    #[arg(long, visible_alias = "t")]
    at: Option<String>,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau_prime: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QexpSubject {
    /// Siegel theta constant on the Siegel half-space (needs --index)
    Theta,
    /// Hermitian theta restricted to a locus (needs --index, --locus)
    DkTheta,
    /// Igusa invariant (needs --name; order at most 2)
    Igusa,
    /// Burkhardt invariant of the Hermitian thetas (needs --weight, --locus)
    Burkhardt,
}

#[derive(Args)]
struct QexpArgs {
    #[arg(value_enum)]
    subject: QexpSubject,
    /// Theta index: 0..9 (Siegel) or 0..4 (Hermitian)
    #[arg(long, visible_alias = "k")]
    index: Option<usize>,
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    weight: Option<u32>,
    /// z=w or z=-w
    #[arg(long, default_value = "z=w")]
    locus: String,
}

/// `None` means automatic.
#[derive(Clone, Copy)]
struct Radius(Option<u32>);

fn parse_radius(s: &str) -> Result<Radius, String> {
    if s == "auto" {
        return Ok(Radius(None));
    }
    s.parse::<u32>().map(|r| Radius(Some(r))).map_err(|_| format!("radius must be `auto` or a positive integer, got `{s}`"))
}

fn parse_order(s: &str) -> Result<RationalExponent, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Convergence(_) => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type CliResult<T> = Result<T, Failure>;

fn required<'a>(v: &'a Option<String>, flag: &str) -> CliResult<&'a str> {
    v.as_deref().ok_or_else(|| usage(format!("--{flag} is required for this subject")))
}

fn complex_flag(v: &Option<String>, flag: &str) -> CliResult<Complex64> {
    parse_complex(required(v, flag)?).map_err(usage)
}

fn c_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn siegel_point(p: &PointArgs) -> CliResult<SiegelPoint> {
    if p.w.is_some() {
        return Err(usage("--w is not used for Siegel points (z = w)"));
    }
    Ok(SiegelPoint::new(
        complex_flag(&p.tau, "tau")?,
        complex_flag(&p.z, "z")?,
        complex_flag(&p.tau_prime, "tau-prime")?,
    )?)
}

fn hermitian_point(p: &PointArgs) -> CliResult<HermitianPoint> {
    Ok(HermitianPoint::new(
        complex_flag(&p.tau, "tau")?,
        complex_flag(&p.z, "z")?,
        complex_flag(&p.w, "w")?,
        complex_flag(&p.tau_prime, "tau-prime")?,
    )?)
}

fn five(at: &Option<String>) -> CliResult<[Complex64; 5]> {
    let v = parse_complex_list(required(at, "at")?, 5).map_err(usage)?;
    Ok([v[0], v[1], v[2], v[3], v[4]])
}

fn index(i: Option<usize>) -> CliResult<usize> {
    i.ok_or_else(|| usage("--index is required for this subject"))
}

fn truncation_json(tr: &TruncationSpec) -> Value {
    json!({ "radius": tr.radius, "tail_tol": tr.tail_tol })
}

fn eval(cli: &Cli, a: &EvalArgs) -> CliResult<Value> {
    let tr = TruncationSpec { radius: cli.radius.0, tail_tol: DEFAULT_TAIL_TOL };
    let out = match a.subject {
        EvalSubject::Theta => {
            let j = index(a.index)?;
            let e = siegel_theta_eval(&siegel_char(j)?, &siegel_point(&a.point)?, &tr)?;
            json!({ "subject": "theta", "index": j, "value": c_json(e.value), "radius": e.radius, "tail_bound": e.tail_bound })
        }
        EvalSubject::DkTheta => {
            let k = index(a.index)?;
            let e = hermitian_theta_eval(&dk_char(k)?, &hermitian_point(&a.point)?, &tr)?;
            json!({ "subject": "dk-theta", "index": k, "value": c_json(e.value), "radius": e.radius, "tail_bound": e.tail_bound })
        }
        EvalSubject::Igusa => {
            let name: IgusaName = required(&a.name, "name")?.parse()?;
            let th = siegel_thetas(&siegel_point(&a.point)?, &tr)?;
            json!({ "subject": "igusa", "name": name.to_string(), "value": c_json(igusa(name, &th)), "truncation": truncation_json(&tr) })
        }
        EvalSubject::Burkhardt => {
            let j = a.weight.ok_or_else(|| usage("--weight is required for burkhardt"))?;
            let v = burkhardt_B(j, &five(&a.at)?)?;
            json!({ "subject": "burkhardt", "weight": j, "value": c_json(v) })
        }
        EvalSubject::D90 => {
            let t = WeightedPoint::new(five(&a.at)?);
            json!({ "subject": "d90", "t": t, "value": c_json(d90(&t)) })
        }
        EvalSubject::InversePeriod => {
            let t = inverse_period_map(&hermitian_point(&a.point)?, &tr)?;
            let n = t.normalized()?;
            let threshold = cli.tol * 10.0;
            let t18 = n.t[4].norm();
            json!({
                "subject": "inverse-period",
                "t": t,
                "normalized": n,
                "t18_normalized_abs": t18,
                "t18_vanishes": t18 < threshold,
                "d90_normalized_abs": d90(&n).norm(),
                "threshold": threshold,
                "truncation": truncation_json(&tr),
            })
        }
        EvalSubject::CdMap => {
            let th = siegel_thetas(&siegel_point(&a.point)?, &tr)?;
            let p = cd_from_thetas(&th);
            json!({ "subject": "cd-map", "cd": p, "t": embed_cd(&p), "truncation": truncation_json(&tr) })
        }
    };
    eprintln!("{}", summary_line(&out));
    Ok(out)
}

fn summary_line(v: &Value) -> String {
    let subject = v["subject"].as_str().unwrap_or("");
    match &v["value"] {
        Value::Array(z) if z.len() == 2 => format!("{subject}: {} {:+}i", z[0], z[1].as_f64().unwrap_or(f64::NAN)),
        _ => format!("{subject}: see JSON"),
    }
}

fn qexp(cli: &Cli, a: &QexpArgs) -> CliResult<FourierSeries> {
    let locus: SeriesLocus = a.locus.parse()?;
    let s = match a.subject {
        QexpSubject::Theta => qexp_siegel_theta(index(a.index)?, cli.order)?,
        QexpSubject::DkTheta => qexp_dk_theta(index(a.index)?, locus, cli.order)?,
        QexpSubject::Igusa => qexp_igusa(required(&a.name, "name")?.parse()?, cli.order)?,
        QexpSubject::Burkhardt => {
            let j = a.weight.ok_or_else(|| usage("--weight is required for burkhardt"))?;
            qexp_burkhardt(j, locus, cli.order)?
        }
    };
    let var = if s.locus() == SeriesLocus::Antidiagonal { "xi" } else { "zeta^(1/12)" };
    match leading_term(&s) {
        Ok(lt) => {
            for g in &lt.groups {
                eprintln!("leading: q1^{} q2^{} ({})", g.e1, g.e2, format_poly(&g.poly, var));
            }
        }
        Err(_) => eprintln!("leading: series is zero below q^{}", cli.order),
    }
    eprintln!("{} terms", s.len());
    Ok(s)
}

fn verify(cli: &Cli, suite: SuiteArg, timing: bool) -> CliResult<(Value, bool)> {
    let opts = VerifyOptions { tol: cli.tol, seed: cli.seed, samples: cli.samples, radius: cli.radius.0, order: cli.order };
    let mut reports = run_suite(suite.into(), &opts);
    eprintln!("{:<36} {:<6} {:>10} {:>10} {:>8}", "check", "status", "residual", "tolerance", "ms");
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        eprintln!("{:<36} {:<6} {:>10.2e} {:>10.1e} {:>8}", r.check_id, status, r.residual, r.tolerance, r.runtime_ms);
    }
    let ok = reports.iter().all(|r| r.passed());
    eprintln!("{} of {} checks passed", reports.iter().filter(|r| r.passed()).count(), reports.len());
    if !timing {
        reports.iter_mut().for_each(|r| r.runtime_ms = 0);
    }
    Ok((serde_json::to_value(&reports).expect("reports serialize"), ok))
}

fn run(cli: &Cli) -> CliResult<u8> {
    let (out, code) = match &cli.command {
        Command::Eval(a) => (eval(cli, a)?, 0),
        Command::Verify { suite, timing } => {
            let (v, ok) = verify(cli, *suite, *timing)?;
            (v, if ok { 0 } else { 1 })
        }
        Command::Qexp(a) => {
            let s = qexp(cli, a)?;
            (serde_json::to_value(s.dump()).expect("records serialize"), 0)
        }
        Command::Closure => {
            let g = burkhardt_closure()?;
            eprintln!("order {}", g.order());
            let text = closure_text(&g);
            (json!(text.lines().collect::<Vec<_>>()), 0)
        }
        Command::Molien { max_degree } => {
            let g = burkhardt_closure()?;
            let m = molien_series(&g, *max_degree);
            let coeffs: Vec<String> = m.coeffs.iter().map(|c| c.to_string()).collect();
            eprintln!("{}", coeffs.join(" "));
            (json!(coeffs), 0)
        }
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("JSON values serialize"));
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
