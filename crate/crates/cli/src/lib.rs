//! The `hamsq` command line. [`run`] does all the work so tests can drive it
//! without spawning a process.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hamsq_core::decomposition::blocks;
use hamsq_core::eps::{find_eps, find_jeps, theorem_a};
use hamsq_core::harness::{build_h_example, build_k2m, default_cache_path, run_campaign, ResultsCache};
use hamsq_core::witness::{check_fbar, check_fk, check_strong_f3, check_theorem2, check_vw_ham_cycle, fbar_triple};
use hamsq_core::{CampaignConfig, Error, Graph, HamWitness, Property, PropertyReport, Search, SearchOptions, Status};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hamsq", version, about = "Hamiltonian paths and cycles in squares of small graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print the square of each graph.
    Square {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Blocks, cutvertices and block-chain structure.
    Blocks {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Find an EPS (default), a JEPS (--trail) or either one (--either).
    Eps {
        #[command(flatten)]
        source: Source,
        /// Vertex that must carry no forest edge.
        #[arg(long)]
        root: Option<usize>,
        /// Vertices allowed at most one forest edge.
        #[arg(long, value_delimiter = ',')]
        light: Vec<usize>,
        /// Cycle (vertex order) that must lie in the eulerian part.
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<usize>>,
        /// JEPS whose open trail runs v to w.
        #[arg(long, value_delimiter = ',', num_args = 1, conflicts_with_all = ["either", "root", "cycle"])]
        trail: Option<Vec<usize>>,
        /// EPS with forest degree 0 at v and at most 1 at w, else a JEPS from v to w.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["root", "cycle"])]
        either: Option<Vec<usize>>,
        #[command(flatten)]
        out: Output,
    },
    /// Check one property on one tuple.
    Check {
        #[command(flatten)]
        source: Source,
        /// f<k> or fk (k is the tuple length), strong-f3, endpoint, vw-cycle or fbar.
        #[arg(long)]
        property: String,
        /// Comma-separated 0-based vertices.
        #[arg(long, value_delimiter = ',')]
        tuple: Vec<usize>,
        /// Which endpoint of a strong-F3 path also needs a graph edge.
        #[arg(long, default_value_t = 1)]
        i: u8,
        /// Expected tuple length for f<k>.
        #[arg(long)]
        k: Option<usize>,
        /// Search-node cap; an exhausted budget exits 3.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Run a verification campaign over all small graphs.
    Verify {
        #[arg(long)]
        property: String,
        #[command(flatten)]
        run: CampaignArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Confirm the known counterexample families.
    Counterexamples {
        /// k2m, fbar or h.
        #[arg(long)]
        suite: String,
        /// Single K_(2,k-2), or the k of a single H(n,k).
        #[arg(long)]
        k: Option<usize>,
        /// The n of a single H(n,k).
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        run: CampaignArgs,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// A graph6 string.
    #[arg(long)]
    graph: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// k2m:<k>, h:<n>,<k>, cycle:<n> or complete:<n>.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
struct CampaignArgs {
    #[arg(long)]
    min_n: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Search-node cap; exhausted budgets are reported as undecided.
    #[arg(long)]
    budget: Option<u64>,
    /// Results cache file (default: $HAMSQ_CACHE or ./hamsq-cache.tsv).
    #[arg(long, conflicts_with = "no_cache")]
    cache: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
}

#[derive(Args, Debug)]
struct Output {
    /// Write JSON here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::GuaranteeViolated(_)) { EXIT_FAILED } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = std::result::Result<(Value, i32), Failure>;

/// Parses `args` (program name first) and executes the command. JSON goes to
/// `out` unless `--output` is given; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let (result, target) = match cli.verb {
        Verb::Square { source, out } => (per_graph(&source, |g| Ok((square(g), EXIT_OK))), out),
        Verb::Blocks { source, out } => (per_graph(&source, |g| Ok((json!(blocks(g)?), EXIT_OK))), out),
        Verb::Eps { source, root, light, cycle, trail, either, out } => {
            (per_graph(&source, |g| eps(g, root, &light, cycle.as_deref(), trail.as_deref(), either.as_deref())), out)
        }
        Verb::Check { source, property, tuple, i, k, budget, out } => {
            let opts = SearchOptions { node_budget: budget };
            (per_graph(&source, |g| check(g, &property, &tuple, i, k, opts)), out)
        }
        Verb::Verify { property, run, out } => (verify(&property, &run), out),
        Verb::Counterexamples { suite, k, n, run, out } => (counterexamples(&suite, k, n, &run), out),
    };
    match result {
        Ok((value, code)) => match emit(&value, target.output.as_ref(), out) {
            Ok(()) => code,
            Err(message) => {
                let _ = writeln!(err, "error: {message}");
                EXIT_USAGE
            }
        },
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(value: &Value, path: Option<&PathBuf>, out: &mut dyn Write) -> std::result::Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match path {
        Some(p) => fs::write(p, text + "\n").map_err(|e| format!("{}: {e}", p.display())),
        None => writeln!(out, "{text}").map_err(|e| e.to_string()),
    }
}

fn load(source: &Source) -> std::result::Result<(Vec<Graph>, bool), Failure> {
    if let Some(text) = &source.graph {
        return Ok((vec![Graph::from_graph6(text.trim())?], false));
    }
    if let Some(path) = &source.file {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(Graph::from_graph6)
            .collect::<hamsq_core::Result<Vec<_>>>()?;
        if graphs.is_empty() {
            return Err(usage(format!("{}: no graphs", path.display())));
        }
        return Ok((graphs, true));
    }
    let spec = source.builtin.as_deref().unwrap_or_default();
    Ok((vec![builtin(spec)?], false))
}

fn builtin(spec: &str) -> std::result::Result<Graph, Failure> {
    let bad = || usage(format!("unknown builtin {spec:?}; expected k2m:<k>, h:<n>,<k>, cycle:<n> or complete:<n>"));
    let (name, args) = spec.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> =
        args.split(',').map(|a| a.trim().parse()).collect::<std::result::Result<_, _>>().map_err(|_| bad())?;
    Ok(match (name, nums.as_slice()) {
        ("k2m", [k]) => build_k2m(*k)?,
        ("h", [n, k]) => build_h_example(*n, *k)?.0,
        ("cycle", [n]) => Graph::cycle(*n)?,
        ("complete", [n]) => Graph::complete(*n)?,
        _ => return Err(bad()),
    })
}

/// Runs `f` on every graph of the source; a file yields a JSON array and the
/// worst exit code.
fn per_graph(source: &Source, mut f: impl FnMut(&Graph) -> Outcome) -> Outcome {
    let (graphs, many) = load(source)?;
    let mut values = Vec::new();
    let mut worst = EXIT_OK;
    for g in &graphs {
        let (v, code) = f(g)?;
        worst = severity(worst, code);
        values.push(v);
    }
    Ok((if many { Value::Array(values) } else { values.pop().unwrap() }, worst))
}

fn severity(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        EXIT_OK => 0,
        EXIT_UNDECIDED => 1,
        _ => 2,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn square(g: &Graph) -> Value {
    let s = g.square();
    json!({
        "graph6": g.to_graph6(),
        "n": g.n(),
        "square": s.to_graph6(),
        "square_edges": s.edges(),
    })
}

fn found_or_not<T: Serialize>(g: &Graph, found: Option<T>) -> Outcome {
    Ok(match found {
        Some(d) => (json!({ "graph6": g.to_graph6(), "found": true, "decomposition": d }), EXIT_OK),
        None => (json!({ "graph6": g.to_graph6(), "found": false }), EXIT_FAILED),
    })
}

fn pair(values: &[usize], flag: &str) -> std::result::Result<(usize, usize), Failure> {
    match values {
        [v, w] => Ok((*v, *w)),
        _ => Err(usage(format!("--{flag} takes two vertices v,w"))),
    }
}

fn eps(
    g: &Graph,
    root: Option<usize>,
    light: &[usize],
    cycle: Option<&[usize]>,
    trail: Option<&[usize]>,
    either: Option<&[usize]>,
) -> Outcome {
    if let Some(t) = trail {
        let (v, w) = pair(t, "trail")?;
        return found_or_not(g, find_jeps(g, v, w, light)?);
    }
    if let Some(t) = either {
        let (v, w) = pair(t, "either")?;
        let d = theorem_a(g, v, w)?;
        return Ok((json!({ "graph6": g.to_graph6(), "found": true, "decomposition": d }), EXIT_OK));
    }
    found_or_not(g, find_eps(g, root, light, cycle)?)
}

fn witness_outcome(g: &Graph, search: Search<HamWitness>) -> Outcome {
    Ok(match search {
        Search::Found(w) => (json!({ "graph6": g.to_graph6(), "status": "found", "witness": w }), EXIT_OK),
        Search::Exhausted => (json!({ "graph6": g.to_graph6(), "status": "exhausted" }), EXIT_FAILED),
        Search::Undecided => (json!({ "graph6": g.to_graph6(), "status": "undecided" }), EXIT_UNDECIDED),
    })
}

fn check(g: &Graph, property: &str, tuple: &[usize], i: u8, k: Option<usize>, opts: SearchOptions) -> Outcome {
    let name: String = property.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_lowercase();
    let is_fk = name.strip_prefix('f').is_some_and(|r| r.is_empty() || r == "k" || r.parse::<usize>().is_ok());
    if is_fk {
        // k always comes from the tuple; a digit in the name is not checked
        if let Some(want) = k.filter(|&want| want != tuple.len()) {
            return Err(usage(format!("F_{want} needs {want} vertices, got {}", tuple.len())));
        }
        return witness_outcome(g, check_fk(g, tuple, opts)?);
    }
    match name.as_str() {
        "strongf3" => match tuple {
            [x1, x2, x3] => witness_outcome(g, check_strong_f3(g, *x1, *x2, *x3, i, opts)?),
            _ => Err(usage("strong-f3 takes x1,x2,x3")),
        },
        "endpoint" | "theorem2" => match tuple {
            [x, y] => witness_outcome(g, check_theorem2(g, *x, *y, opts)?),
            _ => Err(usage("endpoint takes x,y")),
        },
        "vwcycle" => match tuple {
            [v, ws @ ..] if !ws.is_empty() => witness_outcome(g, check_vw_ham_cycle(g, *v, ws, opts)?),
            _ => Err(usage("vw-cycle takes v,w1[,w2,...]")),
        },
        "fbar" => {
            let holds = check_fbar(g);
            let value = json!({ "graph6": g.to_graph6(), "fbar": holds, "triple": fbar_triple(g) });
            Ok((value, EXIT_OK))
        }
        _ => Err(usage(format!("unknown property {property:?}; expected f<k>, strong-f3, endpoint, vw-cycle or fbar"))),
    }
}

fn report_outcome(report: PropertyReport) -> Outcome {
    let code = match report.status {
        Status::Pass => EXIT_OK,
        Status::Fail => EXIT_FAILED,
        Status::Undecided => EXIT_UNDECIDED,
    };
    Ok((json!(report), code))
}

fn campaign(property: Property, run: &CampaignArgs, min_n: Option<usize>, max_n: Option<usize>) -> Outcome {
    let config = CampaignConfig { min_n, max_n, jobs: run.jobs, budget: run.budget };
    let cache = if run.no_cache {
        None
    } else {
        Some(ResultsCache::open(run.cache.clone().unwrap_or_else(default_cache_path))?)
    };
    report_outcome(run_campaign(property, &config, cache.as_ref())?)
}

fn verify(property: &str, run: &CampaignArgs) -> Outcome {
    let p: Property = property.parse()?;
    campaign(p, run, run.min_n, run.max_n)
}

fn counterexamples(suite: &str, k: Option<usize>, n: Option<usize>, run: &CampaignArgs) -> Outcome {
    match suite {
        "k2m" => campaign(Property::K2mNegative, run, k.or(run.min_n), k.or(run.max_n)),
        "fbar" => campaign(Property::TwinTripleNegative, run, run.min_n, run.max_n),
        "h" => match (n, k) {
            (None, None) => campaign(Property::HNegative, run, None, None),
            (Some(n), Some(k)) => {
                let (g, v, v1, vk) = build_h_example(n, k)?;
                let search = check_vw_ham_cycle(&g, v, &[v1, vk], SearchOptions { node_budget: run.budget })?;
                let status = search.status();
                let code = match search {
                    Search::Exhausted => EXIT_OK,
                    Search::Found(_) => EXIT_FAILED,
                    Search::Undecided => EXIT_UNDECIDED,
                };
                let value = json!({
                    "suite": "h", "n": n, "k": k, "graph6": g.to_graph6(),
                    "tuple": [v, v1, vk], "status": status, "counterexample": code == EXIT_OK,
                });
                Ok((value, code))
            }
            _ => Err(usage("a single H(n,k) needs both --n and --k")),
        },
        other => Err(usage(format!("unknown suite {other:?}; expected k2m, fbar or h"))),
    }
}
