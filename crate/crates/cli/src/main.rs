//! `sigma-lab`: compute tree indices, construct parametric families,
//! enumerate non-isomorphic trees, search extremal values, and verify
//! published claims with machine-readable reports.
//!
//! Exit codes: 0 success, 2 parse error, 3 infeasible spec, 4 resource
//! cap exceeded, 1 internal error.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use sigma_core::enumeration::{count_by_class, free_trees};
use sigma_core::extremal::extremal_sigma;
use sigma_core::indices::{albertson, forgotten_f, sigma, zagreb_m1, zagreb_m2};
use sigma_core::report::run_verify;
use sigma_core::tree::parse_tree;
use sigma_core::{ClaimSelector, Error, EvalMode, FamilySpec, Tree, TreeClass};

#[derive(Parser)]
#[command(name = "sigma-lab", version, about = "tree irregularity-index laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute index values for a tree read from a file or stdin.
    Compute {
        /// Tree file in edge-list format, or `-` for stdin.
        input: Option<PathBuf>,
        /// Comma-separated list among sigma,irr,m1,m2,f.
        #[arg(long, default_value = "sigma,irr,m1,m2,f")]
        indices: String,
        /// Emit a JSON object instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Construct a family instance and write it as a tree file.
    Construct {
        /// Family spec string, e.g. `family=caterpillar_uniform;n=3;p=1`.
        #[arg(long)]
        spec: String,
        /// Output path for the edge-list file.
        #[arg(long)]
        out: PathBuf,
        /// Additionally write DOT next to the output (`<out>.dot`).
        #[arg(long)]
        dot: bool,
    },
    /// Enumerate non-isomorphic trees of a given order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// One of all, caterpillar, greedy_realizable,
        /// non_caterpillar_non_greedy.
        #[arg(long, default_value = "all")]
        class: String,
        /// One of edges, canon, count.
        #[arg(long, default_value = "edges")]
        emit: String,
    },
    /// Extremal sigma values per order over a tree class.
    Search {
        #[arg(long, default_value_t = 3)]
        nmin: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value = "all")]
        class: String,
        /// One of json, csv.
        #[arg(long, default_value = "json")]
        emit: String,
        /// Worker threads for the searches (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run claim verifiers and emit the report document.
    Verify {
        /// One of greedy_min, class_minima, gutman, formulas, bounds,
        /// table1, all.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
        /// Grid preset for formula arbitration.
        #[arg(long, default_value = "default")]
        grid: String,
        /// One of exact, wrap32.
        #[arg(long, default_value = "exact")]
        mode: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the searches (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Include timestamp/host metadata (off by default so reports
        /// are byte-reproducible).
        #[arg(long)]
        provenance: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("{err}");
            match err {
                Error::Parse { .. } | Error::InvalidInput(_) => 2,
                Error::InfeasibleSpec(_) => 3,
                Error::ResourceCap(_) => 4,
                Error::SwapRejected(_) => 1,
            }
        }
    };
    std::process::exit(code);
}

fn with_jobs<T>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T
where
    T: Send,
{
    match jobs {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn run(cli: Cli) -> sigma_core::Result<()> {
    match cli.command {
        Command::Compute {
            input,
            indices,
            json,
        } => cmd_compute(input, &indices, json),
        Command::Construct { spec, out, dot } => cmd_construct(&spec, &out, dot),
        Command::Enumerate { n, class, emit } => cmd_enumerate(n, &class, &emit),
        Command::Search {
            nmin,
            nmax,
            class,
            emit,
            jobs,
        } => with_jobs(jobs, || cmd_search(nmin, nmax, &class, &emit)),
        Command::Verify {
            claims,
            nmax,
            grid,
            mode,
            out,
            jobs,
            provenance,
        } => with_jobs(jobs, || {
            cmd_verify(&claims, nmax, &grid, &mode, out.as_deref(), provenance)
        }),
    }
}

fn read_tree(input: Option<&std::path::Path>) -> sigma_core::Result<Tree> {
    let text = match input {
        Some(path) if path.as_os_str() != "-" => {
            std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 1,
                message: format!("cannot read {}: {e}", path.display()),
            })?
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse {
                    line: 1,
                    message: format!("cannot read stdin: {e}"),
                })?;
            buf
        }
    };
    parse_tree(&text)
}

fn cmd_compute(input: Option<PathBuf>, indices: &str, json: bool) -> sigma_core::Result<()> {
    let tree = read_tree(input.as_deref())?;
    let mut pairs = Vec::new();
    for name in indices.split(',') {
        let name = name.trim();
        let value = match name {
            "sigma" => sigma(&tree),
            "irr" => albertson(&tree),
            "m1" => zagreb_m1(&tree),
            "m2" => zagreb_m2(&tree),
            "f" => forgotten_f(&tree),
            other => {
                return Err(Error::invalid(format!(
                    "unknown index {other:?} (expected sigma, irr, m1, m2, f)"
                )))
            }
        };
        pairs.push((name.to_string(), value));
    }
    if json {
        let mut map = serde_json::Map::new();
        for (name, value) in &pairs {
            map.insert(name.clone(), serde_json::Value::String(value.to_string()));
        }
        println!("{}", serde_json::Value::Object(map));
    } else {
        let rendered: Vec<String> = pairs
            .iter()
            .map(|(name, value)| format!("{name}: {value}"))
            .collect();
        println!("{}", rendered.join(", "));
    }
    Ok(())
}

fn cmd_construct(spec: &str, out: &std::path::Path, dot: bool) -> sigma_core::Result<()> {
    let spec = FamilySpec::parse(spec)?;
    let tree = spec.build()?;
    let write = |path: &std::path::Path, contents: &str| -> sigma_core::Result<()> {
        std::fs::write(path, contents)
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
    };
    write(out, &tree.serialize())?;
    if dot {
        let mut dot_path = out.as_os_str().to_owned();
        dot_path.push(".dot");
        write(std::path::Path::new(&dot_path), &tree.to_dot())?;
    }
    Ok(())
}

fn cmd_enumerate(n: usize, class: &str, emit: &str) -> sigma_core::Result<()> {
    let class = TreeClass::from_name(class)?;
    match emit {
        "count" => println!("{}", count_by_class(n, class)?),
        "edges" => {
            for tree in free_trees(n)?.filter(|t| class.contains(t)) {
                println!("{}", tree.serialize_line());
            }
        }
        "canon" => {
            for tree in free_trees(n)?.filter(|t| class.contains(t)) {
                println!("{}", tree.canonical_form());
            }
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown emit mode {other:?} (expected edges, canon, count)"
            )))
        }
    }
    Ok(())
}

fn cmd_search(nmin: usize, nmax: usize, class: &str, emit: &str) -> sigma_core::Result<()> {
    let class = TreeClass::from_name(class)?;
    let mut results = Vec::new();
    for n in nmin..=nmax {
        results.push(extremal_sigma(n, class)?);
    }
    match emit {
        "json" => {
            let doc = serde_json::json!({ "results": results });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        "csv" => {
            println!("n,class,min,max,witness_count");
            for r in &results {
                let fmt = |v: &Option<sigma_core::IndexValue>| {
                    v.map(|x| x.to_string()).unwrap_or_default()
                };
                println!(
                    "{},{},{},{},{}",
                    r.n,
                    r.class,
                    fmt(&r.min_value),
                    fmt(&r.max_value),
                    r.min_witnesses.len() + r.max_witnesses.len()
                );
            }
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown emit mode {other:?} (expected json, csv)"
            )))
        }
    }
    Ok(())
}

fn cmd_verify(
    claims: &str,
    nmax: usize,
    grid: &str,
    mode: &str,
    out: Option<&std::path::Path>,
    provenance: bool,
) -> sigma_core::Result<()> {
    if grid != "default" {
        return Err(Error::invalid(format!(
            "unknown grid preset {grid:?} (expected default)"
        )));
    }
    let selector = ClaimSelector::from_name(claims)?;
    let mode = EvalMode::from_name(mode)?;
    let mut doc = run_verify(selector, nmax, mode)?;
    if provenance {
        doc.attach_provenance();
    }
    let json = doc.to_json();
    match out {
        Some(path) => std::fs::write(path, json)
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{json}"),
    }
    Ok(())
}
