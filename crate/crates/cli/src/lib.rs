//! Command-line front end for the ex-centric circular functions.
//!
//! `run` parses the arguments, executes one subcommand into an in-memory
//! buffer and only then writes it out, so a failed command never leaves a
//! partial file behind. Exit codes: 0 success, 1 usage or invalid
//! parameter, 2 evaluation (domain) error.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use smf_core::curves::{
    sample_booth, sample_elevated, sample_excircle, sample_exotic, sample_quadrilobe,
    variable_excenter_curve, CurveFamily, ExoticConfig, Polyline,
};
use smf_core::export::{
    fmt_sig17, write_oscillator_csv, write_polyline_csv, write_polyline_svg, write_series_csv,
};
use smf_core::mechanisms::{
    sec_force, simulate_oscillator, stroke, velocity_transfer, OscillatorConfig, OscillatorSample,
};
use smf_core::smf::rad_der;
use smf_core::{Determination, Error, EvalError, ExCenter, PlanePoint};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "smf",
    version,
    about = "Ex-centric circular functions: evaluate, sample, simulate"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one argument.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Sample a curve family.
    #[command(allow_negative_numbers = true)]
    Curve(CurveArgs),
    /// Tabulate a mechanism characteristic.
    #[command(allow_negative_numbers = true)]
    Mech(MechArgs),
    /// Simulate the nonlinear oscillator.
    #[command(allow_negative_numbers = true)]
    Osc(OscArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Plain,
}

#[derive(Debug, Clone, Args)]
pub struct ExArgs {
    /// Ex-centricity (distance of the ex-center from the origin).
    #[arg(long, default_value_t = 0.0)]
    pub s: f64,
    /// Polar angle of the ex-center.
    #[arg(long, default_value_t = 0.0)]
    pub eps: f64,
    /// Determination: 1 (first intersection) or 2 (second).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub det: u8,
    /// Read every angle argument in degrees.
    #[arg(long)]
    pub deg: bool,
}

impl ExArgs {
    fn angle(&self, v: f64) -> f64 {
        if self.deg {
            v.to_radians()
        } else {
            v
        }
    }

    fn excenter(&self) -> Result<ExCenter, Failure> {
        if !self.s.is_finite() {
            return Err(Failure::usage("s", "must be finite"));
        }
        let eps = self.angle(self.eps);
        if !eps.is_finite() {
            return Err(Failure::usage("eps", "must be finite"));
        }
        Ok(ExCenter::new(self.s, eps))
    }

    fn determination(&self) -> Determination {
        Determination::from_index(self.det).expect("clap restricts det to 1 or 2")
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Rex,
    #[value(name = "Rex")]
    RexCentric,
    Aex,
    #[value(name = "Aex")]
    AexCentric,
    Cex,
    Sex,
    #[value(name = "Cex")]
    CexCentric,
    #[value(name = "Sex")]
    SexCentric,
    Dex,
    #[value(name = "Dex")]
    DexCentric,
    Tex,
    Cel,
    Sel,
    #[value(name = "Cel")]
    CelCentric,
    #[value(name = "Sel")]
    SelCentric,
    Delta,
    Rad,
    Der,
    W,
    V,
}

impl Function {
    /// Functions of the centric variable `α` (capitalised names).
    fn is_centric(self) -> bool {
        matches!(
            self,
            Function::RexCentric
                | Function::AexCentric
                | Function::CexCentric
                | Function::SexCentric
                | Function::DexCentric
                | Function::CelCentric
                | Function::SelCentric
        )
    }
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    #[command(flatten)]
    pub ex: ExArgs,
    /// Eccentric variable, for lower-case functions.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Centric variable, for capitalised functions.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveKind {
    Booth,
    Excircle,
    Quadrilobe,
    Elevated,
    Exotic,
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    #[arg(long, value_enum)]
    pub kind: CurveKind,
    #[command(flatten)]
    pub ex: ExArgs,
    /// Circle radius.
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Number of grid samples over one turn.
    #[arg(long, default_value_t = 720)]
    pub n: usize,
    /// Distance of the circle centre from the origin (exotic).
    #[arg(long, default_value_t = 0.0)]
    pub c: f64,
    /// Polar angle of the circle centre (exotic).
    #[arg(long, default_value_t = 0.0)]
    pub gamma: f64,
    /// Ex-center moving with θ: s(θ) = s + s_rate·θ.
    #[arg(long, default_value_t = 0.0)]
    pub s_rate: f64,
    /// Ex-center moving with θ: ε(θ) = eps + eps_rate·θ.
    #[arg(long, default_value_t = 0.0)]
    pub eps_rate: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MechKind {
    /// Slider-crank stroke against crank angle.
    Stroke,
    /// Position (rex) and velocity (dex) transfer functions.
    Transfer,
    /// Static elastic characteristic.
    Sec,
}

#[derive(Debug, Clone, Args)]
pub struct MechArgs {
    #[arg(long, value_enum)]
    pub kind: MechKind,
    #[command(flatten)]
    pub ex: ExArgs,
    /// Connecting rod length (stroke).
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// Crank length (stroke).
    #[arg(long, default_value_t = 0.5)]
    pub e: f64,
    /// Half-width of the displacement range (sec).
    #[arg(long, default_value_t = 1.0)]
    pub x_max: f64,
    #[arg(long, default_value_t = 720)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OscArgs {
    #[command(flatten)]
    pub ex: ExArgs,
    /// Generator angular speed Ω.
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// Amplitude.
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
    /// End time, one period 2π/Ω by default.
    #[arg(long)]
    pub t_end: Option<f64>,
    /// Step, period/10⁴ by default.
    #[arg(long)]
    pub dt: Option<f64>,
    /// Generator phase at t = 0.
    #[arg(long, default_value_t = 0.0)]
    pub theta0: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A failed command: exit code plus diagnostic.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(param: &str, reason: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("invalid parameter {param}: {reason}"),
        }
    }

    fn eval(err: EvalError, context: &str) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: format!("{err} at {context}"),
        }
    }

    fn core(err: Error, context: &str) -> Self {
        match err {
            Error::Eval(e) => Failure::eval(e, context),
            Error::InvalidParameter { name, reason } => Failure::usage(name, reason),
        }
    }

    fn io(err: io::Error, path: Option<&Path>) -> Self {
        let message = match path {
            Some(p) => format!("cannot write {}: {err}", p.display()),
            None => format!("cannot write output: {err}"),
        };
        Failure {
            code: EXIT_USAGE,
            message,
        }
    }
}

/// Parses `args` (program name first) and runs the command. Data goes to
/// `out` (unless `--out` names a file), diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command).and_then(|bytes| deliver(&bytes, output_of(&cli.command), out)) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn output_of(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Eval(a) => &a.output,
        Command::Curve(a) => &a.output,
        Command::Mech(a) => &a.output,
        Command::Osc(a) => &a.output,
    }
}

/// Runs a parsed command and returns the bytes it would print.
pub fn execute(cmd: &Command) -> Result<Vec<u8>, Failure> {
    match cmd {
        Command::Eval(a) => eval(a),
        Command::Curve(a) => curve(a),
        Command::Mech(a) => mech(a),
        Command::Osc(a) => osc(a),
    }
}

fn deliver(bytes: &[u8], output: &OutputArgs, out: &mut dyn Write) -> Result<(), Failure> {
    match &output.out {
        None => out
            .write_all(bytes)
            .and_then(|_| out.flush())
            .map_err(|e| Failure::io(e, None)),
        Some(path) => write_atomically(path, bytes).map_err(|e| Failure::io(e, Some(path))),
    }
}

/// Writes to a temporary file next to `path`, then renames it into place.
fn write_atomically(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn finite(name: &str, v: f64) -> Result<f64, Failure> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Failure::usage(name, format!("must be finite, got {v}")))
    }
}

fn no_svg(format: Format, what: &str) -> Result<(), Failure> {
    if format == Format::Svg {
        return Err(Failure::usage(
            "format",
            format!("svg is only available for curves, not {what}"),
        ));
    }
    Ok(())
}

fn eval(a: &EvalArgs) -> Result<Vec<u8>, Failure> {
    no_svg(a.output.format, "eval")?;
    let ex = a.ex.excenter()?;
    let det = a.ex.determination();
    let (name, raw) = if a.function.is_centric() {
        ("alpha", a.alpha)
    } else {
        ("theta", a.theta)
    };
    let arg = raw.ok_or_else(|| Failure::usage(name, "required by this function"))?;
    let arg = finite(name, a.ex.angle(arg))?;
    let context = format!("{name} = {arg} (s = {}, eps = {})", ex.s(), ex.eps());
    let values = evaluate(a.function, &ex, det, arg).map_err(|e| Failure::eval(e, &context))?;
    let line: Vec<String> = values.iter().map(|&v| fmt_sig17(v)).collect();
    Ok(format!("{}\n", line.join(",")).into_bytes())
}

/// Values printed by `eval` for one function.
pub fn evaluate(
    function: Function,
    ex: &ExCenter,
    det: Determination,
    arg: f64,
) -> Result<Vec<f64>, EvalError> {
    use Function::*;
    Ok(match function {
        Rex => vec![ex.rex(arg, det)?],
        RexCentric => vec![ex.rex_centric(arg, det)],
        Aex => vec![ex.aex(arg, det)?],
        AexCentric => vec![ex.aex_centric(arg, det)?],
        Cex => vec![ex.cex_sex(arg, det)?.0],
        Sex => vec![ex.cex_sex(arg, det)?.1],
        CexCentric => vec![ex.cex_sex_centric(arg, det)?.0],
        SexCentric => vec![ex.cex_sex_centric(arg, det)?.1],
        Dex => vec![ex.dex(arg, det)?],
        DexCentric => vec![ex.dex_centric(arg, det)?],
        Tex => vec![ex.tex(arg, det)?],
        Cel => vec![ex.cel_sel(arg, det)?.0],
        Sel => vec![ex.cel_sel(arg, det)?.1],
        CelCentric => vec![ex.cel_sel_centric(arg, det).0],
        SelCentric => vec![ex.cel_sel_centric(arg, det).1],
        Delta => vec![ex.delta(arg)],
        Rad => {
            let (r, _) = rad_der(arg);
            vec![r.x(), r.y()]
        }
        Der => {
            let (_, d) = rad_der(arg);
            vec![d.x(), d.y()]
        }
        W => {
            let p = ex.w_point(arg, det)?;
            vec![p.x, p.y]
        }
        V => {
            let p = ex.w_velocity(arg, det)?;
            vec![p.x, p.y]
        }
    })
}

/// Samples the curve described by `a`.
pub fn build_curve(a: &CurveArgs) -> Result<Polyline, Failure> {
    let ex = a.ex.excenter()?;
    let det = a.ex.determination();
    finite("R", a.radius)?;
    finite("s-rate", a.s_rate)?;
    finite("eps-rate", a.eps_rate)?;
    let context = format!("s = {}, eps = {}", ex.s(), ex.eps());
    let moving = a.s_rate != 0.0 || a.eps_rate != 0.0;
    let result = if moving {
        let family = match a.kind {
            CurveKind::Booth => CurveFamily::Booth { radius: a.radius },
            CurveKind::Excircle => CurveFamily::Excircle { radius: a.radius },
            CurveKind::Elevated => CurveFamily::Elevated { det },
            other => {
                return Err(Failure::usage(
                    "kind",
                    format!("{other:?} does not support a moving ex-center").to_lowercase(),
                ))
            }
        };
        let (s0, e0, sr, er) = (ex.s(), ex.eps(), a.s_rate, a.eps_rate);
        variable_excenter_curve(move |t| s0 + sr * t, move |t| e0 + er * t, family, a.n)
    } else {
        match a.kind {
            CurveKind::Booth => sample_booth(&ex, a.radius, a.n),
            CurveKind::Excircle => sample_excircle(&ex, a.radius, a.n),
            CurveKind::Quadrilobe => sample_quadrilobe(ex.s(), a.n),
            CurveKind::Elevated => sample_elevated(&ex, det, a.n),
            CurveKind::Exotic => {
                finite("c", a.c)?;
                let gamma = finite("gamma", a.ex.angle(a.gamma))?;
                let cfg = ExoticConfig::from_polar(ex.s(), ex.eps(), a.c, gamma);
                sample_exotic(&cfg, det, a.n)
            }
        }
    };
    result.map_err(|e| Failure::core(e, &context))
}

fn curve(a: &CurveArgs) -> Result<Vec<u8>, Failure> {
    let polyline = build_curve(a)?;
    let mut buf = Vec::new();
    match a.output.format {
        Format::Csv => write_polyline_csv(&polyline, &mut buf),
        Format::Svg => write_polyline_svg(&polyline, &mut buf),
        Format::Plain => {
            let mut s = String::new();
            let closed = polyline.runs.iter().filter(|r| r.closed).count();
            let _ = writeln!(s, "runs: {} ({closed} closed)", polyline.runs.len());
            let _ = writeln!(s, "samples: {}", polyline.len());
            if let Some((lo, hi)) = bounds(&polyline) {
                let _ = writeln!(
                    s,
                    "bounds: x [{}, {}], y [{}, {}]",
                    fmt_sig17(lo.x),
                    fmt_sig17(hi.x),
                    fmt_sig17(lo.y),
                    fmt_sig17(hi.y)
                );
            }
            buf.extend_from_slice(s.as_bytes());
            Ok(())
        }
    }
    .expect("writing to memory");
    Ok(buf)
}

fn bounds(polyline: &Polyline) -> Option<(PlanePoint, PlanePoint)> {
    polyline.points().fold(None, |acc, p| {
        let (lo, hi) = acc.unwrap_or((p, p));
        Some((
            PlanePoint::new(lo.x.min(p.x), lo.y.min(p.y)),
            PlanePoint::new(hi.x.max(p.x), hi.y.max(p.y)),
        ))
    })
}

/// Splits `(x, f(x))` rows into blocks at points where `f` is undefined.
fn gapped_series<F>(xs: impl Iterator<Item = f64>, f: F) -> Result<Vec<Vec<Vec<f64>>>, Failure>
where
    F: Fn(f64) -> Result<Vec<f64>, Error>,
{
    let mut blocks = vec![Vec::new()];
    for x in xs {
        match f(x) {
            Ok(mut values) => {
                values.insert(0, x);
                blocks.last_mut().expect("non-empty").push(values);
            }
            Err(Error::Eval(_)) => {
                if !blocks.last().expect("non-empty").is_empty() {
                    blocks.push(Vec::new());
                }
            }
            Err(e) => return Err(Failure::core(e, "")),
        }
    }
    Ok(blocks)
}

fn mech(a: &MechArgs) -> Result<Vec<u8>, Failure> {
    no_svg(a.output.format, "mech")?;
    if a.n < 2 {
        return Err(Failure::usage(
            "n",
            format!("need at least 2 samples, got {}", a.n),
        ));
    }
    let ex = a.ex.excenter()?;
    let det = a.ex.determination();
    let n = a.n;
    let turn = move || (0..n).map(move |k| TAU * k as f64 / n as f64);
    let (header, blocks): (&[&str], _) = match a.kind {
        MechKind::Stroke => {
            finite("R", a.radius)?;
            finite("e", a.e)?;
            let blocks = gapped_series(turn(), |t| Ok(vec![stroke(t, a.radius, a.e)?]))?;
            (&["theta", "stroke"], blocks)
        }
        MechKind::Transfer => {
            let blocks = gapped_series(turn(), |t| {
                Ok(vec![ex.rex(t, det)?, velocity_transfer(t, &ex, det)?])
            })?;
            (&["theta", "position", "velocity"], blocks)
        }
        MechKind::Sec => {
            let x_max = finite("x-max", a.x_max)?;
            if x_max <= 0.0 {
                return Err(Failure::usage(
                    "x-max",
                    format!("must be positive, got {x_max}"),
                ));
            }
            let xs = (0..n).map(move |k| -x_max + 2.0 * x_max * k as f64 / (n - 1) as f64);
            let blocks = gapped_series(xs, |x| Ok(vec![sec_force(x, &ex, det)?]))?;
            (&["x", "force"], blocks)
        }
    };
    let mut buf = Vec::new();
    if a.output.format == Format::Plain {
        let rows: usize = blocks.iter().map(Vec::len).sum();
        let segments = blocks.iter().filter(|b| !b.is_empty()).count();
        let mut s = String::new();
        let _ = writeln!(s, "columns: {}", header.join(","));
        let _ = writeln!(s, "rows: {rows}");
        let _ = writeln!(s, "segments: {segments}");
        buf.extend_from_slice(s.as_bytes());
    } else {
        write_series_csv(header, &blocks, &mut buf).expect("writing to memory");
    }
    Ok(buf)
}

/// Oscillator configuration from the command line, with defaults filled in.
pub fn oscillator_config(a: &OscArgs) -> Result<OscillatorConfig, Failure> {
    let ex = a.ex.excenter()?;
    let omega = finite("omega", a.omega)?;
    if omega <= 0.0 {
        return Err(Failure::usage(
            "omega",
            format!("must be positive, got {omega}"),
        ));
    }
    let mut cfg = OscillatorConfig::one_period(ex, omega, a.radius);
    if let Some(t_end) = a.t_end {
        cfg.t_end = finite("t-end", t_end)?;
        cfg.dt = cfg.t_end.min(cfg.period()) / 1e4;
    }
    if let Some(dt) = a.dt {
        cfg.dt = finite("dt", dt)?;
    }
    cfg.theta0 = finite("theta0", a.ex.angle(a.theta0))?;
    Ok(cfg)
}

/// Summary numbers of an oscillator run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscSummary {
    pub max_omega: f64,
    pub dwell_fraction: f64,
    pub winding_closed: f64,
    pub winding_rk4: f64,
    pub max_track_gap: f64,
}

pub fn summarize(cfg: &OscillatorConfig, samples: &[OscillatorSample]) -> OscSummary {
    let max_omega = samples.iter().fold(0.0f64, |m, p| m.max(p.omega));
    let still = samples
        .iter()
        .filter(|p| p.omega < 1e-9 * cfg.omega)
        .count();
    let first = samples.first().expect("at least one step");
    let last = samples.last().expect("at least one step");
    let max_track_gap = samples
        .iter()
        .fold(0.0f64, |m, p| m.max((p.alpha_rk4 - p.alpha).abs()));
    OscSummary {
        max_omega,
        dwell_fraction: still as f64 / samples.len() as f64,
        winding_closed: last.alpha - first.alpha,
        winding_rk4: last.alpha_rk4 - first.alpha_rk4,
        max_track_gap,
    }
}

fn osc(a: &OscArgs) -> Result<Vec<u8>, Failure> {
    no_svg(a.output.format, "osc")?;
    let cfg = oscillator_config(a)?;
    let samples = simulate_oscillator(&cfg).map_err(|e| Failure::core(e, ""))?;
    let mut buf = Vec::new();
    match a.output.format {
        Format::Plain => {
            let s = summarize(&cfg, &samples);
            let mut text = String::new();
            let _ = writeln!(text, "steps: {}", samples.len() - 1);
            let _ = writeln!(text, "period: {}", fmt_sig17(cfg.period()));
            let _ = writeln!(text, "max_omega: {}", fmt_sig17(s.max_omega));
            let _ = writeln!(text, "dwell_fraction: {}", fmt_sig17(s.dwell_fraction));
            let _ = writeln!(text, "winding_closed: {}", fmt_sig17(s.winding_closed));
            let _ = writeln!(text, "winding_rk4: {}", fmt_sig17(s.winding_rk4));
            let _ = writeln!(text, "max_track_gap: {}", fmt_sig17(s.max_track_gap));
            buf.extend_from_slice(text.as_bytes());
        }
        _ => write_oscillator_csv(&samples, &mut buf).expect("writing to memory"),
    }
    Ok(buf)
}
