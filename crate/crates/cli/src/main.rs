//! `mmin`: compute minimizers, optimize alphabet orderings, and build or
//! check feedback-arc-set reductions.

mod checks;
mod input;

use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mmin::experiments::{
    gnuplot_data, load_fasta, ordering_sweep_many, AmbiguityPolicy, SweepReport, SweepStrategy,
};
use mmin::reduction::{build_reduction_w2, build_reduction_w3plus, DiGraph};
use mmin::{
    count_minimizers, local_search_ordering, minimizers_fast,
    optimizer::{decide_minimizers_with_budget, exact_best_ordering_with_budget},
    Decision, WindowParams, DEFAULT_MAX_EXHAUSTIVE_SIGMA,
};

use input::Input;

#[derive(Parser)]
#[command(
    name = "mmin",
    version,
    about = "Minimizer orderings and their hardness reductions"
)]
struct Cli {
    /// Output format for tabular results.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Minimizer positions of a string under one ordering.
    Sample {
        #[command(flatten)]
        input: StringArgs,
        #[command(flatten)]
        window: WindowArgs,
        /// Ordering such as `c<a<g<t` or `2<0<1`; identity if omitted.
        #[arg(long)]
        order: Option<String>,
    },
    /// Ordering with the fewest minimizers.
    Optimize {
        #[command(flatten)]
        input: StringArgs,
        #[command(flatten)]
        window: WindowArgs,
        /// Local search instead of exhaustive enumeration.
        #[arg(long)]
        heuristic: bool,
        /// Orderings evaluated by the local search.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest alphabet enumerated exhaustively.
        #[arg(long, default_value_t = DEFAULT_MAX_EXHAUSTIVE_SIGMA)]
        max_sigma: usize,
    },
    /// Is there an ordering with at most `ell` minimizers?
    Decide {
        #[command(flatten)]
        input: StringArgs,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_EXHAUSTIVE_SIGMA)]
        max_sigma: usize,
    },
    /// Build a minimizer instance from a directed graph.
    Reduce {
        /// Graph file: a `p <vertices> <arcs>` line, then one `u v` arc per line.
        #[arg(long)]
        graph: PathBuf,
        /// Build the `w = 2` instance from an Eulerian circuit.
        #[arg(long, conflicts_with = "w")]
        w2: bool,
        #[arg(long, required_unless_present = "w2")]
        w: Option<usize>,
        #[arg(long)]
        k: usize,
        /// Feedback arc set budget.
        #[arg(long)]
        ell_prime: usize,
        /// Write the artifact here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check block counts and counting identities over built-in catalogs.
    VerifyLemmas {
        #[arg(long, default_value_t = 10)]
        max_w: usize,
        #[arg(long, default_value_t = 10)]
        max_k: usize,
    },
    /// Smallest and largest minimizer counts over k-mer orderings of a FASTA file.
    Sweep {
        #[arg(long)]
        fasta: PathBuf,
        /// Window parameters as `W:K`; repeatable.
        #[arg(long = "params", value_parser = parse_params, required = true)]
        params: Vec<(usize, usize)>,
        #[arg(long, value_enum, default_value_t = Strategy::Sampled)]
        strategy: Strategy,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop a sweep once the largest count exceeds twice the smallest.
        #[arg(long)]
        stop_when_gap: bool,
        #[arg(long, value_enum, default_value_t = Policy::Skip)]
        policy: Policy,
        /// Write the CSV table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for one `w<W>_k<K>.orderings` file per parameter pair.
        #[arg(long)]
        orderings_dir: Option<PathBuf>,
        /// Write `w k min max` rows for plotting.
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
}

#[derive(Args)]
struct StringArgs {
    /// Input as letters, e.g. `aacaaacgcta`.
    #[arg(long, conflicts_with = "codes", required_unless_present = "codes")]
    string: Option<String>,
    /// Input as symbol codes, e.g. `0 1 2 1`.
    #[arg(long)]
    codes: Option<String>,
    /// Alphabet size for `--codes`; defaults to the largest code plus one.
    #[arg(long, requires = "codes")]
    sigma: Option<u32>,
}

#[derive(Args)]
struct WindowArgs {
    #[arg(long)]
    w: usize,
    #[arg(long)]
    k: usize,
}

impl WindowArgs {
    fn params(&self) -> Result<WindowParams> {
        Ok(WindowParams::new(self.w, self.k)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Skip,
    FifthLetter,
}

fn parse_params(text: &str) -> Result<(usize, usize), String> {
    let (w, k) = text.split_once(':').ok_or("expected W:K")?;
    let w = w.trim().parse().map_err(|_| format!("bad w in '{text}'"))?;
    let k = k.trim().parse().map_err(|_| format!("bad k in '{text}'"))?;
    Ok((w, k))
}

fn load_input(args: &StringArgs, order: Option<&str>) -> Result<Input> {
    Input::parse(
        args.string.as_deref(),
        args.codes.as_deref(),
        args.sigma,
        order,
    )
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    let csv = cli.format == Format::Csv;
    match cli.command {
        Command::Sample {
            input,
            window,
            order,
        } => {
            let input = load_input(&input, order.as_deref())?;
            let ord = input.ordering(order.as_deref())?;
            let set = minimizers_fast(&input.string, window.params()?, &ord)?;
            if csv {
                writeln!(out, "count,positions")?;
                writeln!(out, "{},{}", set.len(), join(set.positions()))?;
            } else {
                writeln!(out, "positions: {}", join(set.positions()))?;
                writeln!(out, "count: {}", set.len())?;
            }
        }
        Command::Optimize {
            input,
            window,
            heuristic,
            budget,
            seed,
            max_sigma,
        } => {
            let input = load_input(&input, None)?;
            let p = window.params()?;
            let r = if heuristic {
                local_search_ordering(&input.string, p, budget, seed)?
            } else {
                exact_best_ordering_with_budget(&input.string, p, max_sigma)?
            };
            let shown = input.show(&r.best_ordering);
            if csv {
                writeln!(out, "ordering,count,evaluated,exhaustive")?;
                writeln!(
                    out,
                    "{shown},{},{},{}",
                    r.best_count, r.orderings_evaluated, r.exhaustive
                )?;
            } else {
                writeln!(out, "ordering: {shown}")?;
                writeln!(out, "count: {}", r.best_count)?;
                writeln!(out, "evaluated: {}", r.orderings_evaluated)?;
                writeln!(out, "exhaustive: {}", r.exhaustive)?;
            }
        }
        Command::Decide {
            input,
            window,
            ell,
            max_sigma,
        } => {
            let input = load_input(&input, None)?;
            let p = window.params()?;
            match decide_minimizers_with_budget(&input.string, p, ell, max_sigma)? {
                Decision::Yes { certificate, count } => {
                    // the certificate is rechecked independently of the search
                    if count_minimizers(&input.string, p, &certificate)? > ell {
                        bail!("certificate does not verify");
                    }
                    let shown = input.show(&certificate);
                    if csv {
                        writeln!(out, "answer,certificate,count")?;
                        writeln!(out, "YES,{shown},{count}")?;
                    } else {
                        writeln!(out, "YES {shown}")?;
                        writeln!(out, "count: {count}")?;
                    }
                }
                Decision::No { best_count } => {
                    if csv {
                        writeln!(out, "answer,certificate,count")?;
                        writeln!(out, "NO,,{best_count}")?;
                    } else {
                        writeln!(out, "NO")?;
                        writeln!(out, "best count: {best_count}")?;
                    }
                }
            }
        }
        Command::Reduce {
            graph,
            w2,
            w,
            k,
            ell_prime,
            out: target,
        } => {
            let file = fs::File::open(&graph)
                .with_context(|| format!("cannot open {}", graph.display()))?;
            let g = DiGraph::parse(BufReader::new(file))
                .with_context(|| format!("cannot parse {}", graph.display()))?;
            let artifact = if w2 {
                build_reduction_w2(&g, k, ell_prime)?
            } else {
                build_reduction_w3plus(&g, w.expect("required by clap"), k, ell_prime)?
            };
            match target {
                Some(path) => {
                    write_file(&path, &artifact.to_text())?;
                    writeln!(out, "ell {}", artifact.ell)?;
                    writeln!(out, "length {}", artifact.string.len())?;
                    writeln!(out, "wrote {}", path.display())?;
                }
                None => out.write_all(artifact.to_text().as_bytes())?,
            }
        }
        Command::VerifyLemmas { max_w, max_k } => {
            if max_w < 3 || max_k < 1 {
                bail!("--max-w must be at least 3 and --max-k at least 1");
            }
            let rows = checks::run(max_w, max_k)?;
            if csv {
                writeln!(out, "check,w,k,cases,status")?;
            } else {
                writeln!(
                    out,
                    "{:<14} {:>3} {:>3} {:>7}  status",
                    "check", "w", "k", "cases"
                )?;
            }
            for r in &rows {
                let status = if r.passed() { "ok" } else { "FAIL" };
                if csv {
                    writeln!(out, "{},{},{},{},{status}", r.check, r.w, r.k, r.cases)?;
                } else {
                    writeln!(
                        out,
                        "{:<14} {:>3} {:>3} {:>7}  {status}",
                        r.check, r.w, r.k, r.cases
                    )?;
                }
                for f in r.failures.iter().take(3) {
                    eprintln!("{} w={} k={}: {f}", r.check, r.w, r.k);
                }
            }
            let failed = rows.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                bail!("{failed} of {} checks failed", rows.len());
            }
        }
        Command::Sweep {
            fasta,
            params,
            strategy,
            samples,
            seed,
            stop_when_gap,
            policy,
            out: target,
            orderings_dir,
            gnuplot,
        } => {
            let policy = match policy {
                Policy::Skip => AmbiguityPolicy::Skip,
                Policy::FifthLetter => AmbiguityPolicy::FifthLetter,
            };
            let records = load_fasta(&fasta, policy)
                .with_context(|| format!("cannot load {}", fasta.display()))?;
            let strings: Vec<_> = records.into_iter().map(|r| r.sequence).collect();
            let strategy = match strategy {
                Strategy::Exhaustive => SweepStrategy::Exhaustive,
                Strategy::Sampled => SweepStrategy::Sampled {
                    count: samples,
                    seed,
                },
            };
            let reports = params
                .iter()
                .map(|&(w, k)| {
                    ordering_sweep_many(&strings, w, k, strategy, stop_when_gap)
                        .with_context(|| format!("sweep at w={w} k={k}"))
                })
                .collect::<Result<Vec<SweepReport>>>()?;

            let mut table = format!("{}\n", SweepReport::CSV_HEADER);
            for r in &reports {
                table.push_str(&r.csv_row());
                table.push('\n');
            }
            match target {
                Some(path) => write_file(&path, &table)?,
                None => out.write_all(table.as_bytes())?,
            }
            if let Some(dir) = orderings_dir {
                fs::create_dir_all(&dir)
                    .with_context(|| format!("cannot create {}", dir.display()))?;
                for r in &reports {
                    let body = format!(
                        "min {} {}\nmax {} {}\n",
                        r.min_count,
                        r.min_ordering_text(),
                        r.max_count,
                        r.max_ordering_text()
                    );
                    write_file(&dir.join(format!("w{}_k{}.orderings", r.w, r.k)), &body)?;
                }
            }
            if let Some(path) = gnuplot {
                write_file(&path, &gnuplot_data(&reports))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out).and_then(|()| Ok(out.flush()?)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
