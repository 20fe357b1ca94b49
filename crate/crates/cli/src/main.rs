//! Command-line front end. Boolean queries exit 0 (true) or 1 (false);
//! errors exit 2 with `<Tag>: <message>` on stderr.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use halftwist::complex::{
    check_path, connect, neighborhood_dot, parse_vertex_arcs, random_vertex,
    straighten::DEFAULT_MOVE_BUDGET, straighten_with_budget, validate_with, RawPath, Vertex,
};
use halftwist::geometry::{crossing_number, normalize, ArcDiagram, DEFAULT_SEGMENT_BUDGET};
use halftwist::morphism::{
    apply_morphism, injectivity_sample, non_surjectivity_witness, verify_homomorphism,
    MorphismImages, MorphismSpec,
};
use halftwist::suite::criteria;
use halftwist::word_problem::DEFAULT_LETTER_BUDGET;
use halftwist::{Arc, ArcOracle, Backend, BraidWord, Error, Result, Solver};

#[derive(Parser)]
#[command(
    name = "halftwist",
    version,
    about = "Braids, arcs and half-twists in the punctured disk"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Cap on free-group letters and on diagram segments.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::Free)]
    backend: BackendArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Free,
    Linear,
    Both,
}

/// Inputs are literal text, `@path` for a file, or `-` for stdin.
#[derive(Subcommand)]
enum Command {
    /// Whether two braid words are equal.
    Eq { u: String, v: String },
    /// Whether two braid words commute.
    Commutes { u: String, v: String },
    /// Whether `u v u = v u v`.
    Braidrel { u: String, v: String },
    /// Whether a braid word is central.
    Central { u: String },
    #[command(subcommand)]
    Arc(ArcCommand),
    /// Exact polyline for an arc.
    Realize { arc: String },
    /// Interior crossings of two diagrams in minimal position.
    Crossings { d1: String, d2: String },
    /// Two diagrams redrawn in joint minimal position.
    Normalize { d1: String, d2: String },
    /// Certified path from a vertex to an all-straight vertex.
    Straighten {
        #[arg(default_value = "-")]
        vertex: String,
    },
    /// Checks an edge-path certificate.
    CheckPath {
        #[arg(default_value = "-")]
        path: String,
    },
    /// Certified path between two vertices.
    Connect { v: String, w: String },
    /// Neighbours of a vertex reached by swapping in straight arcs, as DOT.
    Dot {
        #[arg(default_value = "-")]
        vertex: String,
        /// Extra candidate arcs, one per line.
        #[arg(long)]
        candidates: Option<String>,
    },
    /// A random vertex: a random braid applied to a random straight vertex.
    RandomVertex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        length: usize,
    },
    #[command(subcommand)]
    Morph(MorphCommand),
    /// Runs the acceptance criteria.
    Suite {
        /// Only this criterion.
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ArcCommand {
    /// The two end punctures.
    Ends {
        a: String,
    },
    Equal {
        a: String,
        b: String,
    },
    Disjoint {
        a: String,
        b: String,
    },
    Adjacent {
        a: String,
        b: String,
    },
    /// The half-twist about the arc as a braid word.
    Halftwist {
        a: String,
    },
}

#[derive(Subcommand)]
enum MorphCommand {
    /// Generator images for a spec such as `kind=z_twist t=1 n=5`.
    Build { spec: String },
    /// Checks the Artin relations on a spec or on an images listing.
    Verify { morphism: String },
    /// Image of a word.
    Apply { morphism: String, word: String },
    /// Exponent-sum certificate that a z-twist is not surjective.
    Witness { spec: String },
    /// Random non-equal pairs whose images must differ.
    Sample {
        morphism: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

enum Outcome {
    Text(String),
    Verdict(bool),
    /// Text with a verdict; `false` exits 1.
    Report(String, bool),
}

fn read_input(arg: &str) -> Result<String> {
    let io = |e: std::io::Error| Error::Parse(format!("cannot read `{arg}`: {e}"));
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(io)
    } else {
        Ok(arg.to_string())
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(arg: &str) -> Result<T> {
    read_input(arg)?.trim().parse()
}

fn require_seed(g: &Global) -> Result<u64> {
    g.seed.ok_or_else(|| {
        Error::UnsupportedParameters("this command is randomized and needs --seed".into())
    })
}

struct Context {
    solver: Solver,
    oracle: ArcOracle,
    segments: usize,
}

impl Context {
    fn new(g: &Global) -> Context {
        let backend = match g.backend {
            BackendArg::Free => Backend::FreeGroup,
            BackendArg::Linear => Backend::Linear,
            BackendArg::Both => Backend::Both,
        };
        let solver = Solver {
            backend,
            budget: g.budget.unwrap_or(DEFAULT_LETTER_BUDGET),
            ..Solver::default()
        };
        Context {
            solver,
            oracle: ArcOracle::new(solver),
            segments: g.budget.unwrap_or(DEFAULT_SEGMENT_BUDGET),
        }
    }

    fn vertex(&self, arg: &str) -> Result<Vertex> {
        validate_with(&self.oracle, parse_vertex_arcs(&read_input(arg)?)?)
    }

    /// A spec line or an images listing.
    fn morphism(&self, arg: &str) -> Result<MorphismImages> {
        let text = read_input(arg)?;
        if text.trim_start().starts_with("kind=") {
            text.trim().parse::<MorphismSpec>()?.build()
        } else {
            text.parse()
        }
    }
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| format!("{x}\n")).collect()
}

fn run(cli: &Cli) -> Result<Outcome> {
    let ctx = Context::new(&cli.global);
    let s = &ctx.solver;
    let word = |x: &str| parse::<BraidWord>(x);
    let arc = |x: &str| parse::<Arc>(x);
    Ok(match &cli.command {
        Command::Eq { u, v } => Outcome::Verdict(s.equal(&word(u)?, &word(v)?)?),
        Command::Commutes { u, v } => Outcome::Verdict(s.commutes(&word(u)?, &word(v)?)?),
        Command::Braidrel { u, v } => Outcome::Verdict(s.braid_related(&word(u)?, &word(v)?)?),
        Command::Central { u } => Outcome::Verdict(s.is_central(&word(u)?)?),
        Command::Arc(cmd) => match cmd {
            ArcCommand::Ends { a } => {
                let (p, q) = arc(a)?.ends();
                Outcome::Text(format!("{p} {q}\n"))
            }
            ArcCommand::Equal { a, b } => {
                Outcome::Verdict(ctx.oracle.arcs_equal(&arc(a)?, &arc(b)?)?)
            }
            ArcCommand::Disjoint { a, b } => {
                Outcome::Verdict(ctx.oracle.disjoint(&arc(a)?, &arc(b)?)?)
            }
            ArcCommand::Adjacent { a, b } => {
                Outcome::Verdict(ctx.oracle.adjacent(&arc(a)?, &arc(b)?)?)
            }
            ArcCommand::Halftwist { a } => Outcome::Text(format!("{}\n", arc(a)?.half_twist())),
        },
        Command::Realize { arc: a } => {
            Outcome::Text(format!("{}\n", arc(a)?.realize(ctx.segments)?))
        }
        Command::Crossings { d1, d2 } => {
            let k = crossing_number(&parse::<ArcDiagram>(d1)?, &parse::<ArcDiagram>(d2)?)?;
            Outcome::Text(format!("{k}\n"))
        }
        Command::Normalize { d1, d2 } => {
            let (a, b) = normalize(&parse::<ArcDiagram>(d1)?, &parse::<ArcDiagram>(d2)?)?;
            Outcome::Text(format!("{a}\n{b}\n"))
        }
        Command::Straighten { vertex } => {
            let budget = cli.global.budget.unwrap_or(DEFAULT_MOVE_BUDGET);
            let out = straighten_with_budget(&ctx.vertex(vertex)?, budget)?;
            Outcome::Text(out.path.to_string())
        }
        Command::CheckPath { path } => {
            let raw: RawPath = read_input(path)?.parse()?;
            match check_path(&raw, &ctx.oracle) {
                Ok(r) => Outcome::Report(
                    format!(
                        "valid vertices {} edges {} ends_straight {}\n",
                        r.vertices, r.edges, r.ends_straight
                    ),
                    true,
                ),
                Err(e) => Outcome::Report(format!("invalid {e}\n"), false),
            }
        }
        Command::Connect { v, w } => {
            Outcome::Text(connect(&ctx.vertex(v)?, &ctx.vertex(w)?)?.to_string())
        }
        Command::Dot { vertex, candidates } => {
            let v = ctx.vertex(vertex)?;
            let mut pool = (1..v.n())
                .map(|i| Arc::straight(i, v.n()))
                .collect::<Result<Vec<_>>>()?;
            if let Some(c) = candidates {
                pool.extend(parse_vertex_arcs(&read_input(c)?)?);
            }
            Outcome::Text(neighborhood_dot(&v, &pool)?)
        }
        Command::RandomVertex { n, k, length } => {
            Outcome::Text(random_vertex(*n, *k, *length, require_seed(&cli.global)?)?.to_string())
        }
        Command::Morph(cmd) => match cmd {
            MorphCommand::Build { spec } => {
                Outcome::Text(parse::<MorphismSpec>(spec)?.build()?.to_string())
            }
            MorphCommand::Verify { morphism } => {
                let report = verify_homomorphism(&ctx.morphism(morphism)?, s)?;
                Outcome::Report(report.to_string(), report.passed())
            }
            MorphCommand::Apply { morphism, word: w } => {
                let m = ctx.morphism(morphism)?;
                Outcome::Text(format!("{}\n", apply_morphism(&m, &word(w)?)?))
            }
            MorphCommand::Witness { spec } => {
                Outcome::Text(non_surjectivity_witness(&parse(spec)?)?.to_string())
            }
            MorphCommand::Sample {
                morphism,
                trials,
                max_len,
            } => {
                let m = ctx.morphism(morphism)?;
                let r = injectivity_sample(&m, *trials, *max_len, require_seed(&cli.global)?, s)?;
                Outcome::Report(r.to_string(), r.collisions.is_empty())
            }
        },
        Command::Suite { criterion } => {
            let seed = require_seed(&cli.global)?;
            let selected: Vec<_> = criteria()
                .into_iter()
                .filter(|c| criterion.is_none_or(|id| c.id == id))
                .collect();
            if selected.is_empty() {
                return Err(Error::UnsupportedParameters(format!(
                    "no criterion {criterion:?}"
                )));
            }
            let reports: Vec<_> = selected.iter().map(|c| c.run(seed)).collect();
            let ok = reports.iter().all(|r| r.passed);
            Outcome::Report(lines(&reports), ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verdict(b)) => {
            println!("{b}");
            ExitCode::from(if b { 0 } else { 1 })
        }
        Ok(Outcome::Report(t, ok)) => {
            print!("{t}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
