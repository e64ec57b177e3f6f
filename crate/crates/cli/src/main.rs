mod report;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use symbreak_core::analysis::{analyze_graph, AnalysisOptions, AnalysisRecord, CorpusSummary};
use symbreak_core::graph::{
    encode_graph6, enumerate_connected_graphs, enumerate_trees, has_cycle, is_tree, parse_graph6,
};
use symbreak_core::{Graph, Limits};

use report::{Format, Reporter};

/// Lines read and analyzed together before their records are written.
const BATCH: usize = 1024;

#[derive(Parser)]
#[command(name = "symbreak", version, about = "Distinguishing numbers and indices of small graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Report format.
    #[arg(long, value_enum, default_value = "tsv", global = true)]
    format: Format,
    /// Maximum automorphism group size per graph.
    #[arg(long, global = true)]
    group_budget: Option<u64>,
    /// Maximum number of labelings examined per search.
    #[arg(long, global = true)]
    search_budget: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include witness labelings and the full edge labeling certificate.
    #[arg(long, global = true)]
    emit_certificates: bool,
    /// Run the edge construction from every cycle orbit (JSON output only).
    #[arg(long, global = true)]
    survey_orbits: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graph6 input: a file, `-` for stdin, or a literal graph6 string.
    Analyze { input: Option<String> },
    /// Check every verdict over a corpus and print a summary.
    VerifyCorpus {
        /// graph6 file (`-` for stdin); defaults to the built-in enumerator.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        nmin: usize,
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        /// Trees only (the built-in corpus then uses the tree enumerator).
        #[arg(long, conflicts_with = "cyclic_only")]
        trees_only: bool,
        /// Graphs with at least one cycle only.
        #[arg(long)]
        cyclic_only: bool,
    },
    /// Print one graph6 line per connected graph on N vertices, up to isomorphism.
    Enumerate {
        n: usize,
        #[arg(long)]
        trees_only: bool,
    },
}

#[derive(Clone, Copy)]
struct Filter {
    trees_only: bool,
    cyclic_only: bool,
}

impl Filter {
    const ALL: Filter = Filter { trees_only: false, cyclic_only: false };

    fn keeps(self, g: &Graph) -> bool {
        (!self.trees_only || is_tree(g)) && (!self.cyclic_only || has_cycle(g))
    }
}

/// One unit of work: a parsed graph or a line that failed to parse.
enum Item {
    Graph(Graph),
    Malformed(usize, String, symbreak_core::Error),
}

struct Run<W: Write> {
    opts: AnalysisOptions,
    reporter: Reporter<W>,
    summary: CorpusSummary,
}

impl<W: Write> Run<W> {
    fn process(&mut self, batch: &mut Vec<Item>) -> io::Result<()> {
        let opts = &self.opts;
        let records: Vec<AnalysisRecord> = batch
            .par_iter()
            .map(|item| match item {
                Item::Graph(g) => analyze_graph(g, opts),
                Item::Malformed(line, text, err) => AnalysisRecord::unparsable(*line, text, err),
            })
            .collect();
        batch.clear();
        for r in &records {
            self.summary.add(r);
            self.reporter.record(r)?;
        }
        Ok(())
    }

    fn lines(&mut self, reader: impl BufRead, filter: Filter) -> Result<()> {
        let mut batch = Vec::with_capacity(BATCH);
        for (i, line) in reader.lines().enumerate() {
            let line = line.context("reading input")?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            match parse_graph6(text) {
                Ok(g) if filter.keeps(&g) => batch.push(Item::Graph(g)),
                Ok(_) => {}
                Err(e) => batch.push(Item::Malformed(i + 1, text.to_string(), e)),
            }
            if batch.len() == BATCH {
                self.process(&mut batch)?;
            }
        }
        self.process(&mut batch)?;
        Ok(())
    }

    fn graphs(&mut self, graphs: Vec<Graph>, filter: Filter) -> Result<()> {
        let mut batch = Vec::with_capacity(BATCH);
        for g in graphs.into_iter().filter(|g| filter.keeps(g)) {
            batch.push(Item::Graph(g));
            if batch.len() == BATCH {
                self.process(&mut batch)?;
            }
        }
        self.process(&mut batch)?;
        Ok(())
    }
}

fn open(path: &Path) -> Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        return Ok(Box::new(io::stdin().lock()));
    }
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(Box::new(BufReader::new(file)))
}

fn report_failures(summary: &CorpusSummary) {
    let mut err = io::stderr().lock();
    for f in &summary.failures {
        let _ = writeln!(err, "failure\t{f}");
    }
}

fn run(cli: Cli) -> Result<bool> {
    let g = &cli.global;
    let defaults = Limits::default();
    let opts = AnalysisOptions {
        limits: Limits {
            group_budget: g.group_budget.unwrap_or(defaults.group_budget),
            search_budget: g.search_budget.unwrap_or(defaults.search_budget),
            ..defaults
        },
        emit_certificates: g.emit_certificates,
        survey_orbits: g.survey_orbits,
    };
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);

    if let Command::Enumerate { n, trees_only } = cli.command {
        let graphs = if trees_only { enumerate_trees(n) } else { enumerate_connected_graphs(n) }?;
        for g in &graphs {
            writeln!(out, "{}", encode_graph6(g)?)?;
        }
        out.flush()?;
        return Ok(true);
    }

    let mut run = Run {
        opts,
        reporter: Reporter::new(out, g.format, g.emit_certificates),
        summary: CorpusSummary::default(),
    };
    run.reporter.header()?;
    match cli.command {
        Command::Analyze { input } => {
            let input = input.unwrap_or_else(|| "-".to_string());
            let path = Path::new(&input);
            if input == "-" || path.exists() {
                run.lines(open(path)?, Filter::ALL)?;
            } else {
                let graph = parse_graph6(input.trim())
                    .with_context(|| format!("`{input}` is neither a readable file nor a graph6 string"))?;
                run.graphs(vec![graph], Filter::ALL)?;
            }
            run.reporter.flush()?;
            report_failures(&run.summary);
        }
        Command::VerifyCorpus { input, nmin, nmax, trees_only, cyclic_only } => {
            let filter = Filter { trees_only, cyclic_only };
            match input {
                Some(path) => run.lines(open(&path)?, filter)?,
                None => {
                    if nmin == 0 || nmin > nmax {
                        bail!("need 1 <= nmin <= nmax, got nmin = {nmin}, nmax = {nmax}");
                    }
                    for n in nmin..=nmax {
                        let graphs =
                            if trees_only { enumerate_trees(n) } else { enumerate_connected_graphs(n) }?;
                        run.graphs(graphs, filter)?;
                    }
                }
            }
            run.reporter.flush()?;
            run.reporter.summary(&run.summary, &mut io::stderr().lock())?;
            run.reporter.flush()?;
        }
        Command::Enumerate { .. } => unreachable!(),
    }
    Ok(run.summary.is_clean())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.global.jobs;
    let result = match rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build() {
        Ok(pool) => pool.install(|| run(cli)),
        Err(e) => Err(e.into()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
