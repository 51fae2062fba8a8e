//! The `wfa` command line. Exit status 0 on a decisive answer (negative
//! answers included), 2 when a search budget ran out, 1 on errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wfa_core::canonical::to_canonical_form;
use wfa_core::continuity::{analyze_omega_continuity, analyze_uniform_continuity, ContinuityVerdict};
use wfa_core::reductions::{
    stability_to_ap_continuity_gadgets, stability_to_uniform_gadgets, zero_test_gadgets, GadgetFamily, GadgetOrigin,
};
use wfa_core::stability::{decide_stability, is_continuous_rcp, reduce_to_pair, MatrixSet};
use wfa_core::synthesis::{is_constant_function, synthesize_continuous};
use wfa_core::wfa::{
    ap_redistribute, equal_ap, is_minimal, is_zero_ap, minimize, omega_eval, sample, UltimatelyPeriodicWord,
};
use wfa_core::{OmegaValue, Wfa};

use crate::format::{read_json, read_set, read_wfa, to_json, CanonicalFile, MatrixSetFile, SynthesisFile, WfaFile};
use crate::plot;
use crate::report::{self, Decisive};

#[derive(Parser, Debug)]
#[command(name = "wfa", version, about = "Exact analysis of weighted finite automata")]
pub struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct WfaArg {
    /// Automaton JSON file.
    #[arg(long)]
    wfa: PathBuf,
}

#[derive(Args, Debug)]
struct SetArg {
    /// Matrix set JSON file.
    #[arg(long)]
    set: PathBuf,
}

#[derive(Args, Debug)]
struct DepthArg {
    /// Search budget: longest product length examined.
    #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
    depth: i64,
}

impl DepthArg {
    fn get(&self) -> Result<usize> {
        if self.depth <= 0 {
            bail!("depth budget must be positive, got {}", self.depth);
        }
        Ok(self.depth as usize)
    }
}

#[derive(Args, Debug)]
struct UpWordArg {
    /// Finite prefix of the eventually periodic word.
    #[arg(long, default_value = "")]
    head: String,
    /// Repeated part; must be nonempty.
    #[arg(long)]
    period: String,
}

impl UpWordArg {
    fn parse(&self, a: &Wfa) -> Result<UltimatelyPeriodicWord> {
        let head = a.alphabet().parse_word(&self.head)?;
        let period = a.alphabet().parse_word(&self.period)?;
        Ok(UltimatelyPeriodicWord::new(head, period)?)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Value of a finite word.
    Eval {
        #[command(flatten)]
        wfa: WfaArg,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Value of an eventually periodic infinite word.
    OmegaEval {
        #[command(flatten)]
        wfa: WfaArg,
        #[command(flatten)]
        word: UpWordArg,
    },
    /// Minimal automaton with the same word function.
    Minimize {
        #[command(flatten)]
        wfa: WfaArg,
    },
    /// Yes/no structural properties.
    Check {
        property: Property,
        #[command(flatten)]
        wfa: WfaArg,
    },
    /// Canonical form of the minimized automaton.
    Canonicalize {
        #[command(flatten)]
        wfa: WfaArg,
    },
    /// Stability of a matrix set.
    Stability {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Continuous right-convergent products.
    Rcp {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Continuity of the ω-function of an ap automaton.
    Continuity {
        #[command(flatten)]
        wfa: WfaArg,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Continuity of both the ω-function and the real function.
    UniformContinuity {
        #[command(flatten)]
        wfa: WfaArg,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Build a continuous ap automaton from a stable pair.
    Synthesize {
        /// Seed JSON with B0, B1, k, b0 and optionally initial.
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Real function on the dyadic grid of [0, 1).
    Sample {
        #[command(flatten)]
        wfa: WfaArg,
        /// Grid spacing is 2^-resolution.
        #[arg(long, default_value_t = 8)]
        resolution: u32,
        #[arg(long, value_enum, default_value_t = PlotFormat::Csv)]
        format: PlotFormat,
        /// Print p/q instead of decimals.
        #[arg(long)]
        exact: bool,
    },
    /// Reductions between decision problems.
    Reduce {
        mode: ReduceMode,
        #[command(flatten)]
        set: SetArg,
    },
    /// Whether two ap automata compute the same word function.
    Equal {
        /// Automaton file; give the flag twice.
        #[arg(long, required = true)]
        wfa: Vec<PathBuf>,
        /// Budget of the continuity warning check.
        #[command(flatten)]
        depth: DepthArg,
    },
    /// Ap automaton agreeing with the input on the ω-word anchored at the given word.
    Redistribute {
        #[command(flatten)]
        wfa: WfaArg,
        #[command(flatten)]
        anchor: UpWordArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Property {
    Ap,
    Minimal,
    Zero,
    Constant,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PlotFormat {
    Csv,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReduceMode {
    Pair,
    ZeroTest,
    ApGadgets,
    UniformGadgets,
}

/// Text to emit and whether the answer was decisive.
struct Output {
    text: String,
    decisive: bool,
}

impl Output {
    fn text(text: impl Into<String>) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Output { text, decisive: true }
    }

    fn json(value: &impl serde::Serialize) -> Self {
        Output {
            text: to_json(value),
            decisive: true,
        }
    }

    fn verdict(value: Value, v: &impl Decisive) -> Self {
        Output {
            text: to_json(&value),
            decisive: v.decisive(),
        }
    }
}

fn omega_string(v: &OmegaValue) -> String {
    v.as_defined()
        .map_or_else(|| "undefined".to_string(), ToString::to_string)
}

fn binary_pair(set: &MatrixSet) -> Result<(&wfa_core::Matrix, &wfa_core::Matrix)> {
    if set.len() != 2 {
        bail!(
            "gadget reductions need a two-letter matrix set, got {} letters",
            set.len()
        );
    }
    Ok((set.matrix(0), set.matrix(1)))
}

fn family_json(f: &GadgetFamily) -> Value {
    let origin = match f.origin() {
        GadgetOrigin::ZeroTest => "ZeroTest",
        GadgetOrigin::ApContinuity => "ApContinuity",
        GadgetOrigin::UniformContinuity => "UniformContinuity",
    };
    let members: Vec<Value> = f
        .iter()
        .map(|((i, j), a)| json!({"i": i, "j": j, "automaton": WfaFile::from_wfa(a)}))
        .collect();
    json!({"origin": origin, "size": f.size(), "members": members})
}

fn execute(command: Command) -> Result<Output> {
    Ok(match command {
        Command::Eval { wfa, word } => {
            let a = read_wfa(&wfa.wfa)?;
            let w = a.alphabet().parse_word(&word)?;
            Output::text(a.eval_word(&w)?.to_string())
        }
        Command::OmegaEval { wfa, word } => {
            let a = read_wfa(&wfa.wfa)?;
            Output::text(omega_string(&omega_eval(&a, &word.parse(&a)?)?))
        }
        Command::Minimize { wfa } => Output::json(&WfaFile::from_wfa(&minimize(&read_wfa(&wfa.wfa)?))),
        Command::Check { property, wfa } => {
            let a = read_wfa(&wfa.wfa)?;
            let answer = match property {
                Property::Ap => a.is_ap(),
                Property::Minimal => is_minimal(&a),
                Property::Zero => is_zero_ap(&a)?,
                Property::Constant => is_constant_function(&minimize(&a))?,
            };
            Output::text(answer.to_string())
        }
        Command::Canonicalize { wfa } => {
            let a = minimize(&read_wfa(&wfa.wfa)?);
            match to_canonical_form(&a)? {
                Some(form) => Output::json(&CanonicalFile::from_form(&form)),
                None => Output::text("null"),
            }
        }
        Command::Stability { set, depth } => {
            let s = read_set(&set.set)?;
            let budget = depth.get()?;
            let v = decide_stability(&s, budget)?;
            Output::verdict(report::stability(&v, s.alphabet(), budget), &v)
        }
        Command::Rcp { set, depth } => {
            let s = read_set(&set.set)?;
            let budget = depth.get()?;
            let v = is_continuous_rcp(&s, budget)?;
            Output::verdict(report::rcp(&v, s.alphabet(), budget), &v)
        }
        Command::Continuity { wfa, depth } => {
            let a = read_wfa(&wfa.wfa)?;
            let budget = depth.get()?;
            let v = analyze_omega_continuity(&a, budget)?;
            Output::verdict(report::continuity(&v, a.alphabet(), budget), &v)
        }
        Command::UniformContinuity { wfa, depth } => {
            let a = read_wfa(&wfa.wfa)?;
            let budget = depth.get()?;
            let v = analyze_uniform_continuity(&a, budget)?;
            Output::verdict(report::uniform_continuity(&v, a.alphabet(), budget), &v)
        }
        Command::Synthesize { input, depth } => {
            let seed: SynthesisFile = read_json(&input)?;
            let inp = seed
                .to_input()
                .with_context(|| format!("invalid seed in {}", input.display()))?;
            let s = synthesize_continuous(&inp, depth.get()?)?;
            eprintln!("stability certificate depth {}", s.certificate_depth);
            Output::json(&WfaFile::from_wfa(&s.wfa))
        }
        Command::Sample {
            wfa,
            resolution,
            format,
            exact,
        } => {
            let a = read_wfa(&wfa.wfa)?;
            if resolution > 20 {
                bail!("resolution {resolution} is too fine; at most 20");
            }
            let samples = sample(&a, resolution)?;
            match format {
                PlotFormat::Csv => Output::text(plot::csv(&samples, exact)),
                PlotFormat::Svg => {
                    let mut points = samples;
                    let end = wfa_core::continuity::endpoint_left_limit(&a)?;
                    points.push((wfa_core::linalg::ratio(1, 1), end));
                    Output::text(plot::svg(&points))
                }
            }
        }
        Command::Reduce { mode, set } => {
            let s = read_set(&set.set)?;
            match mode {
                ReduceMode::Pair => Output::json(&MatrixSetFile::from_set(&reduce_to_pair(&s)?)),
                ReduceMode::ZeroTest => Output::json(&family_json(&zero_test_gadgets(&s)?)),
                ReduceMode::ApGadgets => {
                    let (b0, b1) = binary_pair(&s)?;
                    Output::json(&family_json(&stability_to_ap_continuity_gadgets(b0, b1)?))
                }
                ReduceMode::UniformGadgets => {
                    let (b0, b1) = binary_pair(&s)?;
                    Output::json(&family_json(&stability_to_uniform_gadgets(b0, b1)?))
                }
            }
        }
        Command::Equal { wfa, depth } => {
            let [a, b] = wfa.as_slice() else {
                bail!("equal needs exactly two --wfa files, got {}", wfa.len());
            };
            let (a, b) = (read_wfa(a)?, read_wfa(b)?);
            let budget = depth.get()?;
            let answer = equal_ap(&a, &b)?;
            let broken = |x: &Wfa| {
                matches!(
                    analyze_omega_continuity(x, budget),
                    Ok(ContinuityVerdict::NotContinuous { .. })
                )
            };
            if broken(&a) && broken(&b) {
                eprintln!(
                    "warning: neither automaton is continuous; the comparison assumes both are defined everywhere"
                );
            }
            Output::text(answer.to_string())
        }
        Command::Redistribute { wfa, anchor } => {
            let a = read_wfa(&wfa.wfa)?;
            let w = anchor.parse(&a)?;
            match ap_redistribute(&a, &w)? {
                Some(b) => Output::json(&WfaFile::from_wfa(&b)),
                None => Output::text("null"),
            }
        }
    })
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Parses the arguments, runs the command and maps the outcome to an exit status.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = execute(cli.command).and_then(|o| emit(cli.out.as_ref(), &o.text).map(|_| o.decisive));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
