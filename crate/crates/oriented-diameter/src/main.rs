//! Command line front end: orient and certify a graph, query the exact
//! search, generate family instances, or run the evaluation suites.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand};

/// Prints a line to stdout, exiting quietly when the reading end of a pipe
/// has gone away.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let mut out = std::io::stdout().lock();
        if writeln!(out, $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

use oriented_diameter::engine;
use oriented_diameter::families::{self, Generated};
use oriented_diameter::graph::{MixedGraph, Orientation};
use oriented_diameter::oracle;
use oriented_diameter::sweep;
use oriented_diameter::{Error, Result};

#[derive(Parser)]
#[command(
    name = "oriented-diameter",
    about = "Strong orientations of bridgeless mixed graphs with certified diameter bounds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Orient a graph and certify a diameter bound for the result.
    Orient {
        /// Input file in the text format; stdin when omitted.
        file: Option<PathBuf>,
        /// Base vertex; defaults to the best vertex of maximum undirected
        /// degree.
        #[arg(short)]
        u: Option<usize>,
    },
    /// Exact minimum diameter over all strong orientations.
    Oracle {
        /// Input file in the text format; stdin when omitted.
        file: Option<PathBuf>,
        /// Largest number of undirected edges to enumerate.
        #[arg(long, default_value_t = oracle::DEFAULT_EDGE_LIMIT)]
        max_undirected: usize,
    },
    /// Generate a family instance and print it in the text format.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Run one evaluation suite over its corpus and report violations.
    Verify {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: SuiteName,
        /// Write the suite rows to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Drop corpus instances with more vertices than this.
        #[arg(long)]
        max_n: Option<usize>,
        /// Drop corpus instances with more undirected edges than this.
        #[arg(long)]
        max_undirected: Option<usize>,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum SuiteName {
    Bounds,
    Lemmas,
    Sharpness,
    Bipartite,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Undirected cycle with one chord.
    Ohat { n: usize },
    /// Undirected cycle with a pendant pair, base degree 4.
    S0n4 { n: usize },
    /// Undirected bipartite chain with a fan, base degree delta.
    Rdelta { n: usize, delta: usize },
    /// Arc-free family, base degree delta_star.
    G { n: usize, delta_star: usize },
    /// One out-arc at the base, undirected base degree delta_star.
    F { n: usize, delta_star: usize },
    /// Arcs at the base both ways, undirected base degree delta_star.
    M { n: usize, delta_star: usize },
    /// Mixed bipartite family, undirected base degree delta_star.
    R { n: usize, delta_star: usize },
    /// Seeded random bridgeless mixed graph.
    Random {
        n: usize,
        extra: usize,
        frac: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            exit(exit_code(&e));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::NotBridgeless => 3,
        Error::BoundViolated { .. } => 4,
        Error::TooManyEdges { .. } => 5,
        Error::UnsupportedFigureOnly { .. } => 6,
        _ => 1,
    }
}

fn read_graph(file: Option<PathBuf>) -> Result<MixedGraph> {
    let text = match file {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("cannot read {}: {e}", path.display()),
        })?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse {
                    line: 0,
                    msg: format!("cannot read stdin: {e}"),
                })?;
            buf
        }
    };
    MixedGraph::parse(&text)
}

fn opt_vertex(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

fn print_orientation_lines(g: &MixedGraph, o: &Orientation) {
    for idx in g.undirected_edge_indices() {
        let rec = g.edge(idx);
        let (t, h) = o
            .get(rec.a, rec.b)
            .expect("every undirected edge is oriented");
        say!("o {t} {h}");
    }
}

fn build_gen(cmd: GenCmd) -> Result<Generated> {
    match cmd {
        GenCmd::Ohat { n } => families::gen_ohat(n),
        GenCmd::S0n4 { n } => families::gen_s0n4(n),
        GenCmd::Rdelta { n, delta } => families::gen_rdelta(n, delta),
        GenCmd::G { n, delta_star } => families::gen_g_family(n, delta_star),
        GenCmd::F { n, delta_star } => families::gen_f_family(n, delta_star),
        GenCmd::M { n, delta_star } => families::gen_m_family(n, delta_star),
        GenCmd::R { n, delta_star } => families::gen_r_mixed(n, delta_star),
        GenCmd::Random {
            n,
            extra,
            frac,
            seed,
        } => families::gen_random_bridgeless(n, extra, frac, seed),
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Orient { file, u } => {
            let g = read_graph(file)?;
            let outcome = match u {
                Some(u) => engine::orient_full(&g, u)?,
                None => engine::orient_best(&g)?,
            };
            print_orientation_lines(&g, &outcome.orientation);
            let c = &outcome.certificate;
            say!(
                "cert u={} case={} bound={} diam={} z0={} t0={}",
                c.u,
                c.case.tag(),
                c.certified_bound,
                c.measured_diam,
                opt_vertex(c.z0),
                opt_vertex(c.t0)
            );
            for flag in &c.flags {
                eprintln!("flag: {flag}");
            }
            Ok(0)
        }
        Cmd::Oracle {
            file,
            max_undirected,
        } => {
            let g = read_graph(file)?;
            let res = oracle::oriented_diameter_exact(&g, max_undirected)?;
            match (res.value, res.witness) {
                (Some(d), Some(w)) => {
                    say!("oracle diam={d} strong_count={}", res.strong_count);
                    print_orientation_lines(&g, &w);
                }
                _ => say!("oracle no-strong strong_count=0"),
            }
            Ok(0)
        }
        Cmd::Gen { family } => {
            let gen = build_gen(family)?;
            for line in &gen.comment {
                say!("# {line}");
            }
            for line in gen.graph.to_text().lines() {
                say!("{line}");
            }
            Ok(0)
        }
        Cmd::Verify {
            suite,
            csv,
            max_n,
            max_undirected,
        } => {
            let keep = |items: Vec<sweep::CorpusItem>| -> Vec<sweep::CorpusItem> {
                items
                    .into_iter()
                    .filter(|i| max_n.map_or(true, |cap| i.n <= cap))
                    .filter(|i| {
                        max_undirected
                            .map_or(true, |cap| i.graph.undirected_edge_indices().len() <= cap)
                    })
                    .collect()
            };
            let rep = match suite {
                SuiteName::Bounds => sweep::run_bounds_suite(&keep(sweep::standard_corpus()?)),
                SuiteName::Lemmas => sweep::run_lemma_suite(&keep(sweep::standard_corpus()?)),
                SuiteName::Sharpness => {
                    sweep::run_sharpness_suite(&keep(sweep::sharpness_corpus()?))
                }
                SuiteName::Bipartite => {
                    sweep::run_bipartite_suite(&keep(sweep::bipartite_corpus()?))
                }
            };
            if let Some(path) = csv {
                std::fs::write(&path, sweep::render_csv(&rep.rows)).map_err(|e| {
                    Error::Parse {
                        line: 0,
                        msg: format!("cannot write {}: {e}", path.display()),
                    }
                })?;
            }
            say!(
                "suite {}: {} rows, {} violations",
                rep.name,
                rep.rows.len(),
                rep.violations.len()
            );
            for v in &rep.violations {
                eprintln!("violation[{}]: {v}", rep.name);
            }
            Ok(if rep.violations.is_empty() { 0 } else { 7 })
        }
    }
}
