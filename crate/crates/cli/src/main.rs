//! `ezt`: emit, evaluate, verify and report on the Levi-Civita transforms.

mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ezt_core::rational::{format_rational, latex_rational, round_complex, ExactComplex};
use ezt_core::s_domain::MAX_S_DIM;
use ezt_core::verify::{run_verification, VerifyConfig};
use ezt_core::z_transform::MAX_Z_DIM;
use ezt_core::{
    determinant_ztransform, laplace_determinant, pole_zero_report_2d, BigRational, Complex64,
    Error, TustinParams,
};
use num_traits::{Signed, Zero};
use serde_json::json;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EVALUATION: u8 = 3;
const EXIT_NOT_IMPLEMENTED: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "ezt", version, about = "Exact Z- and Tustin-mapped Laplace transforms of the Levi-Civita symbol")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the closed-form transform.
    Emit(Common),
    /// Evaluate the transform at a point.
    Eval {
        #[command(flatten)]
        common: Common,
        /// Comma-separated coordinates such as `2,1`, `1/2,3` or `0.5+1j,-2j`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Cross-check every closed form against its oracle.
    Verify(Common),
    /// Print the pole/zero structure of the two-dimensional Laplace form.
    Report(Common),
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Domain::Z)]
    domain: Domain,
    /// Number of dimensions N.
    #[arg(long)]
    dim: usize,
    /// Step constant(s) T, one shared value or one per dimension.
    #[arg(long = "T", default_value = "1")]
    steps: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Random points for the substitution check.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Relative tolerance for numeric comparisons.
    #[arg(long, default_value_t = 1e-10, value_parser = positive_tolerance)]
    tol: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Domain {
    Z,
    S,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

fn positive_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EvaluationPole(_) | Error::MapSingularity(_) => EXIT_EVALUATION,
            Error::NotImplemented(_) => EXIT_NOT_IMPLEMENTED,
            _ => EXIT_USAGE,
        };
        Self { code, message: e.to_string() }
    }
}

type Outcome = Result<(String, bool), Failure>;

impl Common {
    fn check_dim(&self) -> Result<(), Failure> {
        let max = match self.domain {
            Domain::Z => MAX_Z_DIM,
            Domain::S => MAX_S_DIM,
        };
        if (2..=max).contains(&self.dim) {
            Ok(())
        } else {
            let domain = if self.domain == Domain::Z { "z" } else { "s" };
            Err(Failure::usage(format!(
                "--dim {} is outside the supported range [2, {max}] for the {domain} domain",
                self.dim
            )))
        }
    }

    fn params(&self) -> Result<TustinParams, Failure> {
        let steps = input::parse_steps(&self.steps).map_err(Failure::usage)?;
        Ok(TustinParams::broadcast(self.dim, steps)?)
    }
}

fn emit(c: &Common) -> Outcome {
    c.check_dim()?;
    let out = match c.domain {
        Domain::Z => {
            let t = determinant_ztransform(c.dim)?;
            match c.format {
                Format::Json => to_json(&t),
                Format::Latex => t.to_latex(),
                Format::Text => t.to_text(),
            }
        }
        Domain::S => {
            let l = laplace_determinant(c.dim, &c.params()?)?;
            match c.format {
                Format::Json => to_json(&l),
                Format::Latex => l.to_latex(),
                Format::Text => l.to_text(),
            }
        }
    };
    Ok((out, true))
}

fn eval(c: &Common, point: &str) -> Outcome {
    c.check_dim()?;
    let pt = input::parse_point(point).map_err(Failure::usage)?;
    if pt.len() != c.dim {
        return Err(Failure::usage(format!(
            "--point has {} coordinates but --dim is {}",
            pt.len(),
            c.dim
        )));
    }
    let value = match c.domain {
        Domain::Z => determinant_ztransform(c.dim)?.eval_gaussian(&pt)?,
        Domain::S => {
            let l = laplace_determinant(c.dim, &c.params()?)?;
            l.to_ratfn().eval_gaussian(&pt)?
        }
    };
    let approx = round_complex(&value);
    let out = match c.format {
        Format::Json => to_json(&json!({
            "domain": if c.domain == Domain::Z { "z" } else { "s" },
            "dim": c.dim,
            "point": pt.iter().map(exact_json).collect::<Vec<_>>(),
            "value": { "re": approx.re, "im": approx.im },
            "exact": exact_json(&value),
        })),
        Format::Latex => exact_latex(&value),
        Format::Text => format!("{}\nexact: {}", float_text(approx), exact_text(&value)),
    };
    Ok((out, true))
}

fn verify(c: &Common) -> Outcome {
    c.check_dim()?;
    if c.format == Format::Latex {
        return Err(Failure::usage("verify supports --format text or json"));
    }
    let cfg = VerifyConfig {
        dim: c.dim,
        samples: c.samples as usize,
        seed: c.seed,
        tol: c.tol,
        params: c.params()?,
    };
    let checks = run_verification(&cfg)?;
    let passed = checks.iter().all(|o| o.passed);
    let out = match c.format {
        Format::Json => to_json(&json!({
            "dim": c.dim,
            "samples": c.samples,
            "seed": c.seed,
            "tol": c.tol,
            "passed": passed,
            "checks": checks,
        })),
        _ => {
            let failed = checks.iter().filter(|o| !o.passed).count();
            let mut lines: Vec<String> = checks.iter().map(|o| o.to_string()).collect();
            lines.push(if failed == 0 {
                format!("all {} checks passed", checks.len())
            } else {
                format!("{failed} of {} checks failed", checks.len())
            });
            lines.join("\n")
        }
    };
    Ok((out, passed))
}

fn report(c: &Common) -> Outcome {
    if c.dim != 2 {
        c.check_dim()?;
    }
    let r = pole_zero_report_2d(&c.params()?).map_err(|e| {
        let mut f = Failure::from(e);
        if f.code == EXIT_NOT_IMPLEMENTED {
            f.message += &format!(" (try `ezt verify --dim {}`)", c.dim);
        }
        f
    })?;
    let out = match c.format {
        Format::Json => to_json(&r),
        Format::Text => r.to_string().trim_end().to_owned(),
        Format::Latex => {
            let mut lines: Vec<String> = r
                .poles
                .iter()
                .map(|p| format!("s_{{{}}} = {} \\quad (\\times {})", p.var, latex_rational(&p.location), p.multiplicity))
                .collect();
            lines.extend(r.zeros.iter().map(|z| format!("s_{{{}}} = {}", z.var, latex_rational(&z.location))));
            lines.push("s_{1} = s_{2}".into());
            lines.join(" \\\\\n")
        }
    };
    Ok((out, true))
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable output")
}

fn exact_json(z: &ExactComplex) -> serde_json::Value {
    let part = |v: &BigRational| json!({ "num": v.numer().to_string(), "den": v.denom().to_string() });
    json!({ "re": part(&z.re), "im": part(&z.im) })
}

fn float_text(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}j", z.re, -z.im)
    } else {
        format!("{}+{}j", z.re, z.im)
    }
}

fn exact_parts(z: &ExactComplex, render: fn(&BigRational) -> String, unit: &str) -> String {
    if z.im.is_zero() {
        return render(&z.re);
    }
    let im = render(&z.im.abs());
    let im = if im == "1" { unit.trim().to_owned() } else { format!("{im}{unit}") };
    let sign = if z.im < BigRational::zero() { "-" } else { "+" };
    if z.re.is_zero() {
        return if sign == "-" { format!("-{im}") } else { im };
    }
    format!("{} {sign} {im}", render(&z.re))
}

fn exact_text(z: &ExactComplex) -> String {
    exact_parts(z, format_rational, "j")
}

fn exact_latex(z: &ExactComplex) -> String {
    exact_parts(z, latex_rational, " i")
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let result = match &cli.command {
        Command::Emit(c) => emit(c),
        Command::Eval { common, point } => eval(common, point),
        Command::Verify(c) => verify(c),
        Command::Report(c) => report(c),
    };
    match result {
        Ok((out, ok)) => {
            println!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("ezt: verification failed");
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Err(f) => {
            eprintln!("ezt: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
