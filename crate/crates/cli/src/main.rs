//! `oscspec`: classify lattices in the oscillator group, reduce them to
//! standard form and print windows of their spectra.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use osc_spectra::lattice::standard::ChainStep;
use osc_spectra::lattice::{analyze, LatticeError, LatticeSpec};
use osc_spectra::numeric::{fmt_rat, parse_rat, rat_int};
use osc_spectra::spectrum::{
    accumulation_demo, lattice_spectrum, render_spectrum, render_wave, wave_spectrum, CasimirConvention, Format, Part,
    WindowBounds,
};
use osc_spectra::verify::{run_suite, Suite};

const EXIT_OTHER: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INADMISSIBLE: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "oscspec", version, about = "Lattices in the oscillator group and the spectra of their quotients")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Oracle,
    Paper,
}

#[derive(Clone, Copy, ValueEnum)]
enum PartArg {
    H0,
    H1,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Gauss,
    Multiplicity,
    Casimir,
    Classification,
    All,
}

#[derive(clap::Args)]
struct WindowArgs {
    /// Bound on the Fourier index n of C and F.
    #[arg(long, default_value_t = 4)]
    nmax: i64,
    /// Bound on |m| for F.
    #[arg(long, default_value_t = 2)]
    mmax: i64,
    /// Bound on a^2 for S (a rational).
    #[arg(long, default_value = "5")]
    amax: String,
    #[arg(long, value_enum, default_value_t = ConventionArg::Oracle)]
    convention: ConventionArg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Type and invariants of a lattice file (`-` reads stdin).
    Classify { input: String },
    /// Standard form and the transformation chain leading to it.
    Standardize { input: String },
    /// Irreducible summands with multiplicities inside a window.
    Spectrum {
        input: String,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, value_enum, default_value_t = PartArg::All)]
        part: PartArg,
    },
    /// Wave operator eigenvalues inside a window.
    Wave {
        input: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Run oracle comparison suites.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// Eigenvalues of an irrationally shifted straight lattice near zero.
    DemoAccumulation {
        /// The shift parameter u~ (a float).
        #[arg(long, default_value_t = 1.618_033_988_749_895)]
        u: f64,
        /// Number of values.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        r: i64,
        /// Even kappa of the base lattice.
        #[arg(long, default_value_t = 2)]
        kappa: i64,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

fn lattice_failure(e: LatticeError) -> Failure {
    let code = match e {
        LatticeError::Parse { .. } | LatticeError::Numeric(_) => EXIT_PARSE,
        _ => EXIT_INADMISSIBLE,
    };
    Failure { code, msg: e.to_string() }
}

fn read_input(path: &str) -> Result<LatticeSpec, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure { code: EXIT_OTHER, msg: e.to_string() })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure { code: EXIT_OTHER, msg: format!("{path}: {e}") })?
    };
    LatticeSpec::parse(&text).map_err(lattice_failure)
}

fn bounds(w: &WindowArgs) -> Result<WindowBounds, Failure> {
    let amax = parse_rat(&w.amax).map_err(|e| Failure { code: EXIT_PARSE, msg: format!("--amax: {e}") })?;
    if w.nmax < 0 || w.mmax < 0 || amax < rat_int(0) {
        return Err(Failure { code: EXIT_PARSE, msg: "window bounds must be non-negative".into() });
    }
    Ok(WindowBounds { nmax: w.nmax, mmax: w.mmax, amax })
}

fn convention(c: ConventionArg) -> CasimirConvention {
    match c {
        ConventionArg::Oracle => CasimirConvention::OracleDerived,
        ConventionArg::Paper => CasimirConvention::PaperPrinted,
    }
}

fn chain_text(step: &ChainStep) -> String {
    match step {
        ChainStep::Rescale(a) => format!("rescale by {}", fmt_rat(a)),
        ChainStep::Shift { s, u_coef } => format!("shift z_delta by {} (u*pi = {})", fmt_rat(s), fmt_rat(u_coef)),
        ChainStep::BasisChange(m) => format!("basis change {:?}", m.0),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Records => Format::Records,
    };
    match &cli.cmd {
        Cmd::Classify { input } => {
            let a = analyze(&read_input(input)?).map_err(lattice_failure)?;
            let i = &a.invariants;
            let mut s = format!("{}\n", i.type_tag);
            s += &format!("q = {}\n(k, l) = ({}, {})\n", i.q, i.kl.0, i.kl.1);
            s += &format!("(v, w) = ({}, {})\n(a, b) = ({}, {})\n", fmt_rat(&i.vw[0]), fmt_rat(&i.vw[1]), fmt_rat(&i.ab[0]), fmt_rat(&i.ab[1]));
            s += &format!("r~ = {}\nz0 = {}\ns0 = {}\ns_L = {}\n", i.r_tilde, fmt_rat(&i.z0), i.s0, fmt_rat(&i.s_l));
            Ok(s)
        }
        Cmd::Standardize { input } => {
            let a = analyze(&read_input(input)?).map_err(lattice_failure)?;
            let mut s = format!("{}\n", a.descriptor);
            if a.chain.is_empty() {
                s += "chain: none\n";
            }
            for step in &a.chain {
                s += &format!("chain: {}\n", chain_text(step));
            }
            Ok(s)
        }
        Cmd::Spectrum { input, window, part } => {
            let a = analyze(&read_input(input)?).map_err(lattice_failure)?;
            let part = match part {
                PartArg::H0 => Part::H0,
                PartArg::H1 => Part::H1,
                PartArg::All => Part::All,
            };
            let w = lattice_spectrum(&a, &bounds(window)?, part);
            Ok(render_spectrum(&w, convention(window.convention), format))
        }
        Cmd::Wave { input, window } => {
            let a = analyze(&read_input(input)?).map_err(lattice_failure)?;
            let w = lattice_spectrum(&a, &bounds(window)?, Part::All);
            let conv = convention(window.convention);
            Ok(render_wave(&w, &wave_spectrum(&w, conv, None), conv, format))
        }
        Cmd::Verify { suite } => {
            let suite = match suite {
                SuiteArg::Gauss => Suite::Gauss,
                SuiteArg::Multiplicity => Suite::Multiplicity,
                SuiteArg::Casimir => Suite::Casimir,
                SuiteArg::Classification => Suite::Classification,
                SuiteArg::All => Suite::All,
            };
            let mut s = String::new();
            let mut ok = true;
            for (name, o, pass) in run_suite(suite) {
                ok &= pass;
                s += &format!("{} {name}: {} cases, max residual {:.1e}", if pass { "PASS" } else { "FAIL" }, o.cases, o.max_residual);
                if let Some(v) = o.value {
                    s += &format!(", value {v:.6}");
                }
                if cli.timing {
                    s += &format!(", {:.2}s", o.elapsed.as_secs_f64());
                }
                s += "\n";
                for m in &o.mismatches {
                    s += &format!("  {m}\n");
                }
            }
            if ok {
                Ok(s)
            } else {
                print!("{s}");
                Err(Failure { code: EXIT_VERIFY, msg: "verification failed".into() })
            }
        }
        Cmd::DemoAccumulation { u, count, r, kappa } => {
            if *r <= 0 || *kappa <= 0 || kappa % 2 != 0 {
                return Err(Failure { code: EXIT_PARSE, msg: "needs r > 0 and an even kappa > 0".into() });
            }
            let demo = accumulation_demo(*u, *count, *r, *kappa)
                .ok_or_else(|| Failure { code: EXIT_PARSE, msg: "u must be finite".into() })?;
            let mut s = String::new();
            if format == Format::Text {
                s += &format!("# u~={u} r={r} kappa={kappa} interval=[{:.12}, {:.12}]\n", demo.interval.0, demo.interval.1);
                if demo.degenerate {
                    s += "# degenerate: the continued fraction terminated, finitely many values\n";
                }
            }
            for ((n, m), v) in &demo.points {
                match format {
                    Format::Text => s += &format!("n'={n} m={m} x={v:.15e}\n"),
                    Format::Records => s += &format!("n={n}\tm={m}\tx={v:.15e}\n"),
                }
            }
            if format == Format::Text {
                if let Some(g) = demo.min_gap() {
                    s += &format!("# min gap {:.3e} ({:.3e} of the interval)\n", g, g / (demo.interval.1 - demo.interval.0));
                }
            }
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
