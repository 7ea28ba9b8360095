use std::f64::consts::PI;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qstar::orbit::kks_form_at;
use qstar::path::slice_sweep;
use qstar::sampling::{random_point, random_su2};
use qstar::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

mod input;

use input::complex_json;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or invalid input; exit code 2.
    Input(String),
    /// A requested check exceeded its tolerance; exit code 1.
    Check(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<qstar::Error> for CliError {
    fn from(e: qstar::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Phase-space quantum mechanics for a qubit.
///
/// Operators are given as a built-in name (sigma_x, sigma_y, sigma_z,
/// identity) or a JSON file holding either {"re": [[..]], "im": [[..]]} or
/// Pauli coefficients {"a0": {"re","im"}, "a": [{"re","im"} x3]}. States are
/// a built-in name (up, down, plus, minus, plus_i, minus_i) or
/// {"amplitudes": [{"re","im"}, {"re","im"}]}.
///
/// Exit status: 0 on success, 1 when a requested check fails its tolerance,
/// 2 on invalid input.
#[derive(Parser, Debug)]
#[command(name = "qstar", version)]
struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, env = "RAYON_NUM_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct RuleArgs {
    /// Gauss-Legendre nodes in cosθ.
    #[arg(long, default_value_t = qstar::quadrature::DEFAULT_N_THETA)]
    ntheta: usize,
    /// Uniform nodes in φ.
    #[arg(long, default_value_t = qstar::quadrature::DEFAULT_N_PHI)]
    nphi: usize,
}

impl RuleArgs {
    fn rule(&self) -> CliResult<QuadratureRule> {
        Ok(gauss_legendre_sphere(self.ntheta, self.nphi)?)
    }

    fn metadata(&self) -> Value {
        json!({ "kind": "gauss-legendre x uniform", "n_theta": self.ntheta, "n_phi": self.nphi })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stratonovich-Weyl symbol of an operator, optionally evaluated at a point.
    Symbol {
        #[arg(long)]
        op: String,
        /// Polar angle of the evaluation point.
        #[arg(long, requires = "phi")]
        theta: Option<f64>,
        /// Azimuth of the evaluation point.
        #[arg(long, requires = "theta")]
        phi: Option<f64>,
    },
    /// Star product of two symbols.
    Star {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Star exponential of the symbol of a Hamiltonian.
    Starexp {
        #[arg(long)]
        h: String,
        /// Elapsed time τ.
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, value_enum, default_value_t = ExpMethod::Closed)]
        method: ExpMethod,
        /// Series stopping tolerance.
        #[arg(long, default_value_t = qstar::star::DEFAULT_SERIES_TOL)]
        tol: f64,
        /// Series term limit.
        #[arg(long, default_value_t = qstar::star::DEFAULT_MAX_TERMS)]
        max_terms: usize,
    },
    /// Randomized check of the five Stratonovich-Weyl postulates.
    CheckAxioms {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
        #[command(flatten)]
        rule: RuleArgs,
    },
    /// Transition amplitude ⟨ψf| exp(−iHt/ħ) |ψ0⟩.
    Propagate {
        #[arg(long)]
        h: String,
        #[arg(long)]
        psi0: String,
        #[arg(long)]
        psif: String,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, value_enum, default_value_t = PropMethod::Exact)]
        method: PropMethod,
        #[command(flatten)]
        rule: RuleArgs,
    },
    /// Spin-1/2 in a static field, H = −(γB/2) axis·σ, started in ↑z.
    ///
    /// CSV columns: t, re_K_up, im_K_up, re_K_down, im_K_down, P_up, P_down.
    Rabi {
        #[arg(long)]
        gamma: f64,
        /// Field strength.
        #[arg(long = "B")]
        field: f64,
        #[arg(long, value_enum, default_value_t = Axis::X)]
        axis: Axis,
        #[arg(long)]
        tmax: f64,
        /// Number of intervals; steps + 1 rows are written.
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        /// CSV output path (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time-sliced coherent-state path integral.
    ///
    /// With --slice-sweep writes CSV columns N, abs_error, re_K, im_K against
    /// the exact propagator; otherwise prints a JSON result.
    PathIntegral {
        #[arg(long)]
        h: String,
        #[arg(long)]
        psi0: String,
        #[arg(long)]
        psif: String,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, default_value_t = 64)]
        slices: usize,
        #[arg(long, value_enum, default_value_t = OrderingArg::Symmetric)]
        ordering: OrderingArg,
        /// Phase-space function in the short-time exponent.
        #[arg(long, value_enum, default_value_t = SymbolArg::Upper)]
        symbol: SymbolArg,
        /// Comma-separated slice counts, e.g. 8,16,32,64,128.
        #[arg(long, value_delimiter = ',')]
        slice_sweep: Option<Vec<usize>>,
        #[command(flatten)]
        rule: RuleArgs,
        /// CSV output path for sweeps (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rotation invariance of the KKS form and its coordinate-frame value sinθ.
    KksCheck {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance for rotation invariance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Tolerance for the coordinate-frame comparison.
        #[arg(long, default_value_t = 1e-10)]
        frame_tol: f64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ExpMethod {
    Closed,
    Series,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum PropMethod {
    Exact,
    Quadrature,
    Oracle,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Axis {
    X,
    Y,
    Z,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum OrderingArg {
    Left,
    Right,
    Symmetric,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum SymbolArg {
    Upper,
    Berezin,
}

impl From<OrderingArg> for Ordering {
    fn from(o: OrderingArg) -> Self {
        match o {
            OrderingArg::Left => Ordering::Left,
            OrderingArg::Right => Ordering::Right,
            OrderingArg::Symmetric => Ordering::Symmetric,
        }
    }
}

impl From<SymbolArg> for SliceSymbol {
    fn from(s: SymbolArg) -> Self {
        match s {
            SymbolArg::Upper => SliceSymbol::Upper,
            SymbolArg::Berezin => SliceSymbol::Berezin,
        }
    }
}

fn metadata(command: &str, extra: Value) -> Value {
    let mut m = json!({ "command": command, "version": env!("CARGO_PKG_VERSION") });
    if let (Some(m), Value::Object(extra)) = (m.as_object_mut(), extra) {
        m.extend(extra);
    }
    m
}

fn emit(value: &Value) -> CliResult<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn csv_sink(out: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(File::create(path)?) as Box<dyn Write>,
        None => Box::new(io::stdout().lock()),
    })
}

/// Shortest round-trip representation, switching to exponent form for tiny or huge values.
fn num(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| x.to_string())
}

fn positive(name: &str, x: f64) -> CliResult<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(CliError::Input(format!(
            "--{name} must be positive and finite, got {x}"
        )))
    }
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(format!("--threads: {e}")))?;
    }
    match cli.command {
        Command::Symbol { op, theta, phi } => {
            let w = symbol_of(&input::operator(&op)?)?;
            let mut out =
                json!({ "metadata": metadata("symbol", json!({ "operator": op })), "symbol": w });
            if let (Some(theta), Some(phi)) = (theta, phi) {
                let p = PhasePoint::new(theta, phi);
                out["point"] = json!({ "theta": theta, "phi": phi });
                out["value"] = complex_json(w.eval(&p));
            }
            emit(&out)
        }
        Command::Star { a, b } => {
            let wa = symbol_of(&input::operator(&a)?)?;
            let wb = symbol_of(&input::operator(&b)?)?;
            emit(&json!({
                "metadata": metadata("star", json!({ "a": a, "b": b })),
                "symbol": star(&wa, &wb),
            }))
        }
        Command::Starexp {
            h,
            t,
            hbar,
            method,
            tol,
            max_terms,
        } => {
            positive("hbar", hbar)?;
            let wh = symbol_of(&input::operator(&h)?)?;
            let (symbol, series) = match method {
                ExpMethod::Closed => (star_exponential_closed(&wh, t, hbar)?, Value::Null),
                ExpMethod::Series => {
                    positive("tol", tol)?;
                    let r = star_exponential_series(&wh, t, hbar, tol, max_terms)?;
                    let info = json!({ "terms_used": r.terms_used, "truncation_estimate": r.truncation_estimate });
                    (r.value, info)
                }
            };
            let meta = match method {
                ExpMethod::Closed => json!({ "method": "closed", "t": t, "hbar": hbar }),
                ExpMethod::Series => {
                    json!({ "method": "series", "t": t, "hbar": hbar, "tol": tol, "max_terms": max_terms })
                }
            };
            let mut out = json!({ "metadata": metadata("starexp", meta), "symbol": symbol });
            if !series.is_null() {
                out["series"] = series;
            }
            emit(&out)
        }
        Command::CheckAxioms {
            samples,
            seed,
            tol,
            rule,
        } => {
            positive("tol", tol)?;
            let report = check_axioms(samples, &rule.rule()?, seed)?;
            let mut out = json!({
                "metadata": metadata("check-axioms", json!({ "samples": samples, "seed": seed, "tol": tol, "rule": rule.metadata() })),
            });
            for (name, verdict) in report.verdicts(tol) {
                out[name] = serde_json::to_value(verdict).map_err(io::Error::from)?;
            }
            emit(&out)?;
            let failures = report.failures(tol);
            if failures.is_empty() {
                Ok(())
            } else {
                Err(CliError::Check(format!(
                    "axiom check failed: {}",
                    failures.join(", ")
                )))
            }
        }
        Command::Propagate {
            h,
            psi0,
            psif,
            t,
            hbar,
            method,
            rule,
        } => {
            positive("hbar", hbar)?;
            let hm = input::hamiltonian(&h)?;
            let pair = TransitionPair::new(input::state(&psi0)?, input::state(&psif)?);
            let (k, meta) = match method {
                PropMethod::Exact => (
                    propagator_exact(&pair, &hm, t, hbar)?,
                    json!({ "method": "exact" }),
                ),
                PropMethod::Quadrature => (
                    propagator_quadrature(&pair, &hm, t, hbar, &rule.rule()?)?,
                    json!({ "method": "quadrature", "rule": rule.metadata() }),
                ),
                PropMethod::Oracle => (
                    propagator_oracle(&pair, &hm, t, hbar)?,
                    json!({ "method": "oracle" }),
                ),
            };
            let mut meta = meta;
            meta["t"] = json!(t);
            meta["hbar"] = json!(hbar);
            emit(&json!({
                "metadata": metadata("propagate", meta),
                "amplitude": complex_json(k),
                "probability": k.norm_sqr(),
            }))
        }
        Command::Rabi {
            gamma,
            field,
            axis,
            tmax,
            steps,
            hbar,
            out,
        } => {
            positive("hbar", hbar)?;
            if steps == 0 || !tmax.is_finite() {
                return Err(CliError::Input(
                    "--steps must be at least 1 and --tmax finite".into(),
                ));
            }
            let axis_vec = match axis {
                Axis::X => [1.0, 0.0, 0.0],
                Axis::Y => [0.0, 1.0, 0.0],
                Axis::Z => [0.0, 0.0, 1.0],
            };
            let cfg = RabiConfig::new(gamma, field, axis_vec, hbar)?;
            let times: Vec<f64> = (0..=steps)
                .map(|k| tmax * k as f64 / steps as f64)
                .collect();
            let up = rabi_scan(
                &cfg,
                &TransitionPair::new(QubitState::up(), QubitState::up()),
                &times,
            )?;
            let down = rabi_scan(
                &cfg,
                &TransitionPair::new(QubitState::up(), QubitState::down()),
                &times,
            )?;
            let mut sink = csv_sink(&out)?;
            writeln!(
                sink,
                "# qstar {} rabi gamma={gamma} B={field} axis={} hbar={hbar} tmax={tmax} steps={steps} method=exact initial=up",
                env!("CARGO_PKG_VERSION"),
                format!("{axis:?}").to_lowercase()
            )?;
            let mut w = csv::Writer::from_writer(sink);
            w.write_record([
                "t",
                "re_K_up",
                "im_K_up",
                "re_K_down",
                "im_K_down",
                "P_up",
                "P_down",
            ])?;
            for (u, d) in up.iter().zip(&down) {
                w.write_record(
                    [
                        u.t,
                        u.amplitude.re,
                        u.amplitude.im,
                        d.amplitude.re,
                        d.amplitude.im,
                        u.probability,
                        d.probability,
                    ]
                    .map(num),
                )?;
            }
            w.flush()?;
            Ok(())
        }
        Command::PathIntegral {
            h,
            psi0,
            psif,
            t,
            hbar,
            slices,
            ordering,
            symbol,
            slice_sweep: sweep,
            rule,
            out,
        } => {
            positive("hbar", hbar)?;
            let hm = input::hamiltonian(&h)?;
            let pair = TransitionPair::new(input::state(&psi0)?, input::state(&psif)?);
            let cfg = SlicingConfig::new(slices, rule.rule()?, ordering.into())
                .with_symbol(symbol.into());
            let exact = propagator_oracle(&pair, &hm, t, hbar)?;
            let meta = json!({
                "t": t, "hbar": hbar, "ordering": Ordering::from(ordering), "symbol": SliceSymbol::from(symbol),
                "rule": rule.metadata(), "reference": "matrix exponential",
            });
            match sweep {
                Some(counts) => {
                    let results = slice_sweep(&pair, &hm, t, hbar, &cfg, &counts)?;
                    let mut sink = csv_sink(&out)?;
                    writeln!(
                        sink,
                        "# qstar {} path-integral {}",
                        env!("CARGO_PKG_VERSION"),
                        meta
                    )?;
                    if let Some(w) = results.first().and_then(|r| r.warning.as_ref()) {
                        writeln!(sink, "# warning: {w}")?;
                    }
                    let mut w = csv::Writer::from_writer(sink);
                    w.write_record(["N", "abs_error", "re_K", "im_K"])?;
                    for r in &results {
                        w.write_record([
                            r.n_slices.to_string(),
                            num((r.amplitude - exact).norm()),
                            num(r.amplitude.re),
                            num(r.amplitude.im),
                        ])?;
                    }
                    w.flush()?;
                    Ok(())
                }
                None => {
                    let r = sliced_propagator(&pair, &hm, t, hbar, &cfg)?;
                    let mut meta = meta;
                    meta["slices"] = json!(slices);
                    emit(&json!({
                        "metadata": metadata("path-integral", meta),
                        "amplitude": complex_json(r.amplitude),
                        "exact": complex_json(exact),
                        "abs_error": (r.amplitude - exact).norm(),
                        "resolution_deviation": r.resolution_deviation,
                        "initial_phase": r.initial_phase,
                        "final_phase": r.final_phase,
                        "warning": r.warning,
                    }))
                }
            }
        }
        Command::KksCheck {
            samples,
            seed,
            tol,
            frame_tol,
        } => {
            positive("tol", tol)?;
            positive("frame-tol", frame_tol)?;
            let (invariance, frame) = kks_deviations(samples, seed)?;
            emit(&json!({
                "metadata": metadata("kks-check", json!({ "samples": samples, "seed": seed })),
                "rotation_invariance": { "max_dev": invariance, "tol": tol, "pass": invariance <= tol },
                "coordinate_frame": { "max_dev": frame, "tol": frame_tol, "pass": frame <= frame_tol },
            }))?;
            let mut failed = Vec::new();
            if invariance > tol {
                failed.push("rotation_invariance");
            }
            if frame > frame_tol {
                failed.push("coordinate_frame");
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Check(format!(
                    "KKS check failed: {}",
                    failed.join(", ")
                )))
            }
        }
    }
}

fn kks_deviations(samples: usize, seed: u64) -> CliResult<(f64, f64)> {
    if samples == 0 {
        return Err(CliError::Input("--samples must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ambient = || -> [f64; 3] { std::array::from_fn(|_| rng.random_range(-1.0..1.0)) };
    let mut rng2 = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let (mut invariance, mut frame) = (0.0f64, 0.0f64);
    for _ in 0..samples {
        let r = rotation_of(&random_su2(&mut rng2))?;
        let p = random_point(&mut rng2);
        let x = p.n();
        let u = TangentVector::project(p, &ambient()).vector();
        let v = TangentVector::project(p, &ambient()).vector();
        let before = kks_form(&x, &u, &v)?;
        let after = kks_form(&r.apply(&x), &r.apply(&u), &r.apply(&v))?;
        invariance = invariance.max((before - after).abs());

        let q = PhasePoint::new(rng2.random_range(0.0..PI), rng2.random_range(0.0..2.0 * PI));
        let (dt, dp) = q.coordinate_frame();
        frame = frame.max((kks_form_at(&dt, &dp)? - q.theta().sin()).abs());
    }
    Ok((invariance, frame))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(msg)) => {
            eprintln!("qstar: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("qstar: error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("qstar: error: {e}");
            ExitCode::from(2)
        }
    }
}
