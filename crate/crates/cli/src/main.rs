use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lissatoric::invariants::{jones_polynomial_limited, DEFAULT_STRAND_LIMIT};
use lissatoric::oracle::{
    compare_up_to_mirror_limited, default_phase, default_samples, detect_braid_float, dump_events,
    enumerate_braid, enumerate_events, sample_phases, Comparison, PhaseSpec,
};
use lissatoric::symbolic::{classify, main_theorem_braid, normalize_params, Classification};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;

mod render;
mod sweep;

#[derive(Parser)]
#[command(
    name = "lissatoric",
    version,
    about = "Braids and Jones polynomials of Lissajous-toric knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the braid word of K(N,q,p)
    Braid {
        n: u64,
        q: u64,
        p: u64,
        #[arg(long, value_enum, default_value_t = Method::Symbolic)]
        method: Method,
        /// Phase for the exact and float methods, e.g. `3/40` or `0.075`
        #[arg(long)]
        phase: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Float method sample count (default 16·q·N)
        #[arg(long)]
        samples: Option<usize>,
        /// Also print the crossing events of the exact method
        #[arg(long)]
        dump: bool,
    },
    /// Compare the closed form against both crossing oracles
    Verify {
        n: u64,
        q: u64,
        p: u64,
        /// Extra phases to check the exact oracle at
        #[arg(long, default_value_t = 0)]
        phases: usize,
        #[arg(long)]
        no_float: bool,
    },
    /// Arithmetic classification of K(N,q,p)
    Classify {
        n: u64,
        q: u64,
        p: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate K(N,q,p) over a range of p
    Sweep {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
        /// Output file (standard output when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Tsv)]
        format: SweepFormat,
        #[arg(long)]
        parallel: bool,
        /// Also check the float detector on every row
        #[arg(long)]
        float: bool,
    },
    /// Write curve samples or a braid-shadow drawing
    Render {
        n: u64,
        q: u64,
        p: u64,
        #[arg(long, required_unless_present = "coords")]
        svg: Option<PathBuf>,
        #[arg(long)]
        coords: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        phase: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Symbolic,
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Tsv,
    Json,
}

#[derive(Debug)]
pub enum CliError {
    Params(String),
    Verify(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Params(_) => 2,
            CliError::Verify(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<lissatoric::Error> for CliError {
    fn from(e: lissatoric::Error) -> Self {
        CliError::Params(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn strand_limit() -> usize {
    std::env::var("LISSATORIC_STRAND_LIMIT")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_STRAND_LIMIT)
}

pub fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Accepts `a/b`, an integer, or a decimal.
fn parse_phase(text: &str) -> CliResult<BigRational> {
    if let Ok(r) = text.parse::<BigRational>() {
        return Ok(r);
    }
    text.parse::<f64>()
        .ok()
        .and_then(BigRational::from_float)
        .ok_or_else(|| CliError::Params(format!("cannot read phase `{text}`")))
}

fn phase_spec(n: u64, q: u64, p: u64, phase: Option<&str>) -> CliResult<PhaseSpec> {
    let mut spec = default_phase(n, q, p)?;
    if let Some(text) = phase {
        spec.phi = parse_phase(text)?;
    }
    Ok(spec)
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[allow(clippy::too_many_arguments)]
fn cmd_braid(
    n: u64,
    q: u64,
    p: u64,
    method: Method,
    phase: Option<&str>,
    format: Format,
    samples: Option<usize>,
    dump: bool,
) -> CliResult<()> {
    let params = normalize_params(n, q, p)?;
    let mut extra = serde_json::Map::new();
    let word = match method {
        Method::Symbolic => {
            let base = main_theorem_braid(&params.base())?;
            extra.insert("blocks".into(), json!(base.block_string()));
            extra.insert("alpha".into(), json!(base.alpha.to_string()));
            extra.insert("beta".into(), json!(base.beta.to_string()));
            extra.insert(
                "bezout".into(),
                json!({ "A": base.bezout.a, "B": base.bezout.b }),
            );
            base.word().power(params.d as usize)
        }
        Method::Exact => {
            let spec = phase_spec(n, q, p, phase)?;
            let events = enumerate_events(n, q, p, &spec)?;
            if dump && format == Format::Text {
                print!("{}", dump_events(&events));
            }
            extra.insert("phase".into(), json!(spec));
            if dump {
                extra.insert("events".into(), json!(events));
            }
            enumerate_braid(n, q, p, &spec)?
        }
        Method::Float => {
            let spec = phase_spec(n, q, p, phase)?;
            let samples = samples.unwrap_or_else(|| default_samples(n, q));
            extra.insert("phase".into(), json!(spec));
            extra.insert("samples".into(), json!(samples));
            detect_braid_float(n, q, p, to_f64(&spec.phi), to_f64(&spec.eta), samples)?
        }
    };
    match format {
        Format::Text => println!("{word}"),
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("N".into(), json!(n));
            obj.insert("q".into(), json!(q));
            obj.insert("p".into(), json!(p));
            obj.insert(
                "normalization".into(),
                json!({
                    "d": params.d,
                    "base_q": params.base_q,
                    "base_p": params.base_p,
                    "swapped": params.swapped,
                }),
            );
            obj.insert("word".into(), json!(word.to_string()));
            obj.insert("length".into(), json!(word.len()));
            obj.extend(extra);
            println!(
                "{}",
                serde_json::to_string_pretty(&obj).expect("json values serialize")
            );
        }
    }
    Ok(())
}

fn cmd_verify(n: u64, q: u64, p: u64, phases: usize, no_float: bool) -> CliResult<()> {
    let params = normalize_params(n, q, p)?;
    let (oq, op) = params.oriented();
    let limit = strand_limit();
    let symbolic = main_theorem_braid(&params.base())?
        .word()
        .power(params.d as usize);
    let spec = default_phase(n, oq, op)?;
    let exact = enumerate_braid(n, oq, op, &spec)?;
    println!("symbolic  {symbolic}");
    println!("exact     {exact}");
    let mut verdicts = vec![(
        "symbolic vs exact".to_string(),
        compare_up_to_mirror_limited(&symbolic, &exact, limit)?,
    )];
    if !no_float {
        let float = detect_braid_float(
            n,
            oq,
            op,
            to_f64(&spec.phi),
            to_f64(&spec.eta),
            default_samples(n, oq),
        )?;
        println!("float     {float}");
        verdicts.push((
            "exact vs float".into(),
            compare_up_to_mirror_limited(&exact, &float, limit)?,
        ));
    }
    for (j, s) in sample_phases(n, oq, op, phases)?.iter().enumerate() {
        let w = enumerate_braid(n, oq, op, s)?;
        let label = format!("symbolic vs exact at phase {} ({})", j + 1, s.phi);
        verdicts.push((label, compare_up_to_mirror_limited(&symbolic, &w, limit)?));
    }
    let mut distinct = 0;
    for (label, v) in &verdicts {
        println!("{label}: {v}");
        if *v == Comparison::Distinct {
            distinct += 1;
        }
    }
    if distinct > 0 {
        return Err(CliError::Verify(format!(
            "{distinct} comparison(s) came out Distinct"
        )));
    }
    Ok(())
}

fn classification_json(c: &Classification) -> serde_json::Value {
    json!({
        "N": c.params.n,
        "q": c.params.q,
        "p": c.params.p,
        "ribbon": c.ribbon,
        "periodic_d": c.periodic_d,
        "genus_bound": c.genus_bound.to_string(),
        "quasipositive": c.quasipositive_case,
        "exact_genus": c.exact_genus.map(|g| g.to_string()),
        "amphicheiral": c.amphicheiral,
        "trivial_family": c.trivial_family.map(|t| t.label()),
    })
}

fn cmd_classify(n: u64, q: u64, p: u64, format: Format) -> CliResult<()> {
    let c = classify(n, q, p)?;
    let jones_trivial = match c.trivial_family {
        Some(_) => {
            let w = lissatoric::symbolic::lissajous_braid(n, q, p)?;
            Some(jones_polynomial_limited(&w, strand_limit())?.is_one())
        }
        None => None,
    };
    match format {
        Format::Json => {
            let mut v = classification_json(&c);
            v["jones_trivial"] = json!(jones_trivial);
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("json values serialize")
            );
        }
        Format::Text => {
            let yn = |b: bool| if b { "yes" } else { "no" };
            println!("K({n},{q},{p})");
            println!("ribbon          {}", yn(c.ribbon));
            println!("periodic d      {}", c.periodic_d);
            println!("genus bound     {}", c.genus_bound);
            println!("quasipositive   {}", yn(c.quasipositive_case));
            match c.exact_genus {
                Some(g) => println!("exact g4        {g}"),
                None => println!("exact g4        unknown"),
            }
            println!("amphicheiral    {}", yn(c.amphicheiral));
            match c.trivial_family {
                Some(t) => println!("trivial family  {}", t.label()),
                None => println!("trivial family  none"),
            }
            if let Some(j) = jones_trivial {
                println!("jones trivial   {}", yn(j));
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Braid {
            n,
            q,
            p,
            method,
            phase,
            format,
            samples,
            dump,
        } => cmd_braid(n, q, p, method, phase.as_deref(), format, samples, dump),
        Command::Verify {
            n,
            q,
            p,
            phases,
            no_float,
        } => cmd_verify(n, q, p, phases, no_float),
        Command::Classify { n, q, p, format } => cmd_classify(n, q, p, format),
        Command::Sweep {
            n,
            q,
            p_min,
            p_max,
            out,
            format,
            parallel,
            float,
        } => sweep::cmd_sweep(n, q, p_min, p_max, out.as_deref(), format, parallel, float),
        Command::Render {
            n,
            q,
            p,
            svg,
            coords,
            samples,
            phase,
        } => {
            let phase = phase.as_deref().map(parse_phase).transpose()?;
            if let Some(path) = coords {
                let phi = phase.as_ref().map(to_f64).unwrap_or(0.0);
                render::write_coords(n, q, p, phi, samples, &path)?;
            }
            if let Some(path) = svg {
                render::write_svg(n, q, p, phase, &path)?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Params(m) | CliError::Verify(m) | CliError::Io(m)) = &e;
            eprintln!("error: {m}");
            ExitCode::from(e.exit_code())
        }
    }
}
