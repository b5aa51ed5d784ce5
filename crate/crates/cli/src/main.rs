use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use convdistill::builder::symplectic_gram;
use convdistill::sim::{CompiledCode, TableDecoder};
use convdistill::{
    augment_multi, augment_single, check_commuting, css_augment, css_gram_schmidt,
    decompose_traced, encoded_stabilizer, noncatastrophic_check, protocol_yield, read_code,
    write_paulivec, ChannelKind, ChannelModel, CodeFile, DecoderKind, Execution, GeneratorSet,
    Pauli, ReadOptions, Simulator, SymplecticMatrix, Triangle,
};

#[derive(Parser)]
#[command(
    name = "convdistill",
    version,
    about = "Convolutional entanglement distillation toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a gf4, binary or paulivec file to canonical paulivec form.
    Import {
        path: PathBuf,
        /// Accept binary parity rows (pure z and pure x generators).
        #[arg(long)]
        css: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Append ebit columns so that the generators commute.
    Augment {
        path: PathBuf,
        #[command(flatten)]
        construction: ConstructionFlags,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exit 0 iff the generators commute and are noncatastrophic.
    Check { path: PathBuf },
    /// Syndrome of each single-qubit error, one row per generator shift.
    Syndromes {
        path: PathBuf,
        /// Frames between correctable errors.
        #[arg(long)]
        period: Option<usize>,
    },
    /// Encoding circuit for an entanglement-assisted block code.
    EncodeBlock {
        path: PathBuf,
        /// Print the matrix after every gate and row operation.
        #[arg(long)]
        trace: bool,
    },
    /// Monte-Carlo run of the distillation protocol.
    Simulate(SimulateArgs),
    /// Yield and catalytic ebit count.
    Yield { path: PathBuf },
}

#[derive(Args)]
#[group(multiple = false)]
struct ConstructionFlags {
    /// Single-generator construction.
    #[arg(long)]
    single: bool,
    /// Multi-generator construction, lower-triangular ebit block.
    #[arg(long)]
    multi: bool,
    /// Multi-generator construction, upper-triangular ebit block.
    #[arg(long)]
    upper: bool,
    /// CSS construction from pure z and pure x rows.
    #[arg(long)]
    css: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Table,
    Viterbi,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChannelArg {
    Depolarizing,
    IndependentXz,
    Custom,
    PeriodicSingle,
}

#[derive(Args)]
struct SimulateArgs {
    path: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Window length; defaults to 2ν + 4·period.
    #[arg(long)]
    frames: Option<usize>,
    #[arg(long, default_value_t = 0.05)]
    p: f64,
    #[arg(long, value_enum, default_value_t = DecoderArg::Viterbi)]
    decoder: DecoderArg,
    /// Largest error weight per frame the Viterbi decoder considers.
    #[arg(long, default_value_t = 1)]
    wmax: usize,
    #[arg(long, value_enum, default_value_t = ChannelArg::Depolarizing)]
    channel: ChannelArg,
    /// Frame spacing for the periodic-single channel; defaults to ν + 1.
    #[arg(long)]
    period: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    px: f64,
    #[arg(long, default_value_t = 0.0)]
    py: f64,
    #[arg(long, default_value_t = 0.0)]
    pz: f64,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
    /// Also write the report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

/// Error carrying its exit status.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

fn usage(err: anyhow::Error) -> Failure {
    Failure { code: 2, err }
}

fn domain(err: anyhow::Error) -> Failure {
    Failure { code: 1, err }
}

impl From<convdistill::Error> for Failure {
    fn from(e: convdistill::Error) -> Self {
        match e {
            convdistill::Error::Parse { .. } => usage(e.into()),
            _ => domain(e.into()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn load(path: &Path, css: bool) -> Result<CodeFile, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    read_code(&text, ReadOptions { css })
        .map_err(|e| usage(anyhow::Error::new(e).context(path.display().to_string())))
}

fn windows(g: &GeneratorSet) -> String {
    g.gens()
        .iter()
        .map(|u| format!("# {}\n", u.support_window()))
        .collect()
}

fn emit(g: &GeneratorSet, output: Option<&Path>) -> CmdResult {
    let text = write_paulivec(g);
    match output {
        Some(path) => {
            fs::write(path, &text)
                .with_context(|| format!("writing {}", path.display()))
                .map_err(usage)?;
            print!("{}", windows(g));
        }
        None => print!("{text}{}", windows(g)),
    }
    Ok(())
}

fn cmd_import(path: &Path, css: bool, output: Option<&Path>) -> CmdResult {
    let g = load(path, css)?.generator_set()?;
    emit(&g, output)
}

fn cmd_augment(path: &Path, flags: &ConstructionFlags, output: Option<&Path>) -> CmdResult {
    let file = load(path, true)?;
    let gens = file.pauli_vecs();
    let g = if flags.css
        || matches!(file, CodeFile::Binary { .. }) && !(flags.single || flags.multi || flags.upper)
    {
        css_augment(&css_gram_schmidt(&gens)?)?
    } else if flags.upper {
        augment_multi(&gens, Triangle::Upper)?
    } else if flags.multi {
        augment_multi(&gens, Triangle::Lower)?
    } else if flags.single {
        match gens.as_slice() {
            [u] => augment_single(u)?,
            _ => {
                return Err(usage(anyhow!(
                    "--single needs exactly one generator, found {}",
                    gens.len()
                )))
            }
        }
    } else {
        augment_multi(&gens, Triangle::Lower)?
    };
    emit(&g, output)
}

fn cmd_check(path: &Path) -> CmdResult {
    let g = load(path, false)?.generator_set()?;
    let commuting = check_commuting(&g);
    let noncatastrophic = noncatastrophic_check(&g);
    println!("commuting={commuting}");
    println!("noncatastrophic={noncatastrophic}");
    if !commuting {
        let gram = symplectic_gram(g.gens());
        for (i, row) in gram.iter().enumerate() {
            for (j, f) in row.iter().enumerate() {
                if i <= j && !f.is_zero() {
                    println!("product[{i}][{j}]={f}");
                }
            }
        }
    }
    match (commuting, noncatastrophic) {
        (true, true) => Ok(()),
        (false, _) => Err(domain(anyhow!("generators do not commute"))),
        (true, false) => Err(domain(anyhow!("generators are catastrophic"))),
    }
}

fn cmd_syndromes(path: &Path, period: Option<usize>) -> CmdResult {
    let g = load(path, false)?.generator_set()?;
    let code = CompiledCode::new(&g)?;
    let nu = code.nu();
    let period = period.unwrap_or(nu + 1);
    let frames = 2 * nu + 1 + 2 * period;
    let table = TableDecoder::new(&code, frames, period)?;
    let order = |p: Pauli| match p {
        Pauli::X => 0,
        Pauli::Z => 1,
        _ => 2,
    };
    let mut cols = table.entries();
    cols.sort_by_key(|&(q, p, _)| (q, order(p)));
    let names: Vec<String> = cols
        .iter()
        .map(|(q, p, _)| format!("{p}{}", q + 1))
        .collect();
    println!("{}", names.join(" "));
    for r in 0..=nu {
        let cells: Vec<String> = cols
            .iter()
            .zip(&names)
            .map(|((_, _, sig), name)| {
                let bits: String = (0..code.m())
                    .map(|j| if sig[r] >> j & 1 == 1 { '1' } else { '0' })
                    .collect();
                format!("{bits:<width$}", width = name.len())
            })
            .collect();
        println!("{}", cells.join(" ").trim_end());
    }
    Ok(())
}

fn cmd_encode_block(path: &Path, trace: bool) -> CmdResult {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    let m: SymplecticMatrix = text.parse()?;
    let (d, snapshots) = decompose_traced(&m)?;
    println!("# c={} s={} k={}", d.c, d.s, d.k);
    print!("{}", d.circuit.to_script());
    let comment = |title: &str, m: &SymplecticMatrix| {
        println!("# {title}");
        for line in m.to_bit_string().lines() {
            println!("#   {line}");
        }
    };
    comment("canonical", &d.canonical);
    println!("# encoded stabilizer");
    for line in encoded_stabilizer(&d).to_string().lines() {
        println!("#   {line}");
    }
    if trace {
        for (i, s) in snapshots.iter().enumerate() {
            comment(&format!("after step {}", i + 1), s);
        }
    }
    Ok(())
}

fn cmd_simulate(a: &SimulateArgs) -> CmdResult {
    let g = load(&a.path, false)?.generator_set()?;
    let nu = g.constraint_length();
    let kind = match a.channel {
        ChannelArg::Depolarizing => ChannelKind::Depolarizing,
        ChannelArg::IndependentXz => ChannelKind::IndependentXz,
        ChannelArg::Custom => ChannelKind::Custom {
            px: a.px,
            py: a.py,
            pz: a.pz,
        },
        ChannelArg::PeriodicSingle => ChannelKind::PeriodicSingle {
            period: a.period.unwrap_or(nu + 1),
        },
    };
    let step = match kind {
        ChannelKind::PeriodicSingle { period } => period,
        _ => 1,
    };
    let frames = a.frames.unwrap_or(2 * nu + 4 * step);
    let decoder = match a.decoder {
        DecoderArg::Table => DecoderKind::Table,
        DecoderArg::Viterbi => DecoderKind::Viterbi { w_max: a.wmax },
    };
    let channel = ChannelModel::new(kind, a.p, a.seed).map_err(|e| usage(e.into()))?;
    let sim = Simulator::new(&g, channel, frames, decoder)?;
    let exec = if a.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let report = sim.run(a.trials, exec);
    print!("{}", report.to_key_values());
    if let Some(path) = &a.json {
        let json = serde_json::to_string_pretty(&report).map_err(|e| domain(e.into()))?;
        fs::write(path, json + "\n")
            .with_context(|| format!("writing {}", path.display()))
            .map_err(usage)?;
    }
    Ok(())
}

fn cmd_yield(path: &Path) -> CmdResult {
    let g = load(path, false)?.generator_set()?;
    let y = protocol_yield(&g);
    println!("yield={}", y.yield_);
    println!("n={}", y.n);
    println!("m={}", y.m);
    println!("constraint_length={}", y.constraint_length);
    println!("catalytic_ebits={}", y.catalytic_ebits);
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Import { path, css, output } => cmd_import(path, *css, output.as_deref()),
        Command::Augment {
            path,
            construction,
            output,
        } => cmd_augment(path, construction, output.as_deref()),
        Command::Check { path } => cmd_check(path),
        Command::Syndromes { path, period } => cmd_syndromes(path, *period),
        Command::EncodeBlock { path, trace } => cmd_encode_block(path, *trace),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Yield { path } => cmd_yield(path),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, err }) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
