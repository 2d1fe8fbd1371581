//! Batch front end: generate corpus graphs, compute orderings, run the
//! domination pipeline with mandatory self-verification, query the exact
//! oracles, re-verify certificates, and benchmark over a corpus.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use domcert::domination::{dominating_set, DominationCertificate};
use domcert::generators::{self, Family};
use domcert::graph::Graph;
use domcert::io::{
    certificate_from_text, certificate_record_line, certificate_to_text, read_graph_file,
    read_ordering_file, write_graph_file, write_ordering_file,
};
use domcert::oracles::{self, OracleBudget, OracleError};
use domcert::orderings::{
    admissibility_ordering, degeneracy_ordering, ordering_stats, AdmMode, VertexOrdering,
};

#[derive(Parser)]
#[command(
    name = "domcert",
    about = "Distance-k dominating sets with independence certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Generate {
        /// Family spec: complete:N star:L path:N cycle:N grid:RxC btree:N
        /// gn:N:K random:N:M
        spec: String,
        /// Output edge-list path.
        #[arg(long)]
        out: PathBuf,
        /// Also write the family's prescribed ordering (gn only).
        #[arg(long)]
        ordering_out: Option<PathBuf>,
        /// Seed for the random family.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute a vertex ordering and report its statistics.
    Order {
        graph: PathBuf,
        #[command(flatten)]
        ordering: OrderingArgs,
        /// Radius for the reported ordering statistics.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Write the ordering to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find a k-dominating set with an m-independent certificate.
    Dominate {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        ordering: OrderingArgs,
        /// Write the certificate record here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact small-instance values from the brute-force oracles.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Raise the oracle size ceilings to this many vertices.
        #[arg(long)]
        budget_n: Option<usize>,
    },
    /// Re-verify a certificate record against its graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Run the pipeline over a corpus and print one row per instance.
    Bench {
        /// Directory of edge-list files (*.txt), processed in name order.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated square grid sides, e.g. 50,100,200.
        #[arg(long)]
        grids: Option<String>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        ordering: OrderingArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write machine-readable records (no wall times) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OrderingArgs {
    /// degeneracy | adm-exact | adm-approx | file:PATH
    #[arg(long, default_value = "degeneracy")]
    ordering: String,
    /// Ceiling for the exact admissibility search (default: n).
    #[arg(long)]
    pmax: Option<usize>,
}

// Failures sorted by exit code: usage/input problems (2), failed
// verification (1), oracle budget refusal (3).
enum CliError {
    Usage(String),
    Check(String),
    Budget(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } | OracleError::TimeCapExceeded => {
                CliError::Budget(e.to_string())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            spec,
            out,
            ordering_out,
            seed,
        } => cmd_generate(&spec, &out, ordering_out.as_deref(), seed),
        Command::Order {
            graph,
            ordering,
            m,
            out,
        } => cmd_order(&graph, &ordering, m, out.as_deref()),
        Command::Dominate {
            graph,
            k,
            m,
            ordering,
            out,
        } => cmd_dominate(&graph, k, m, &ordering, out.as_deref()),
        Command::Exact {
            graph,
            k,
            m,
            budget_n,
        } => cmd_exact(&graph, k, m, budget_n),
        Command::Verify { graph, certificate } => cmd_verify(&graph, &certificate),
        Command::Bench {
            corpus,
            grids,
            k,
            m,
            ordering,
            seed,
            out,
        } => cmd_bench(
            corpus.as_deref(),
            grids.as_deref(),
            k,
            m,
            &ordering,
            seed,
            out.as_deref(),
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn parse_family(spec: &str) -> Result<Option<Family>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let int = |s: &str| -> Result<usize, CliError> {
        s.parse()
            .map_err(|_| CliError::usage(format!("bad number `{s}` in spec `{spec}`")))
    };
    let family = match (parts.as_slice(), parts.first()) {
        ([_, n], Some(&"complete")) => Some(Family::Complete(int(n)?)),
        ([_, l], Some(&"star")) => Some(Family::Star(int(l)?)),
        ([_, n], Some(&"path")) => Some(Family::Path(int(n)?)),
        ([_, n], Some(&"cycle")) => Some(Family::Cycle(int(n)?)),
        ([_, n], Some(&"btree")) => Some(Family::BinaryTree(int(n)?)),
        ([_, rc], Some(&"grid")) => {
            let (r, c) = rc
                .split_once('x')
                .ok_or_else(|| CliError::usage(format!("grid spec needs RxC, got `{rc}`")))?;
            Some(Family::Grid(int(r)?, int(c)?))
        }
        _ => None,
    };
    Ok(family)
}

fn cmd_generate(
    spec: &str,
    out: &Path,
    ordering_out: Option<&Path>,
    seed: u64,
) -> Result<(), CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let int = |s: &str| -> Result<usize, CliError> {
        s.parse()
            .map_err(|_| CliError::usage(format!("bad number `{s}` in spec `{spec}`")))
    };

    let (graph, prescribed): (Graph, Option<VertexOrdering>) =
        if let Some(family) = parse_family(spec)? {
            (generators::standard_family(family), None)
        } else {
            match parts.as_slice() {
                ["gn", n, k] => {
                    let inst = generators::lower_bound_gn(int(n)?, int(k)?);
                    (inst.graph, Some(inst.prescribed_ordering))
                }
                ["random", n, m] => {
                    let g = generators::random_sparse(int(n)?, int(m)?, seed)
                        .map_err(|e| CliError::usage(e.to_string()))?;
                    (g, None)
                }
                _ => return Err(CliError::usage(format!("unknown family spec `{spec}`"))),
            }
        };

    write_graph_file(out, &graph).map_err(|e| CliError::usage(e.to_string()))?;
    println!(
        "generated {spec}: n={} m_edges={} -> {}",
        graph.n(),
        graph.m_edges(),
        out.display()
    );
    if let Some(path) = ordering_out {
        let ord = prescribed.ok_or_else(|| {
            CliError::usage(format!("family `{spec}` has no prescribed ordering"))
        })?;
        write_ordering_file(path, &ord).map_err(|e| CliError::usage(e.to_string()))?;
        println!("prescribed ordering -> {}", path.display());
    }
    Ok(())
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    read_graph_file(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn obtain_ordering(
    g: &Graph,
    args: &OrderingArgs,
    m: usize,
) -> Result<(VertexOrdering, String), CliError> {
    let p_max = args.pmax.unwrap_or_else(|| g.n().max(1));
    match args.ordering.as_str() {
        "degeneracy" => {
            let (ord, d) = degeneracy_ordering(g);
            Ok((ord, format!("degeneracy({d})")))
        }
        "adm-exact" => {
            let res = admissibility_ordering(g, m, AdmMode::Exact { p_max })
                .map_err(|e| CliError::usage(e.to_string()))?;
            Ok((res.ordering, format!("adm-exact({})", res.adm)))
        }
        "adm-approx" => {
            let res = admissibility_ordering(g, m, AdmMode::Approx)
                .map_err(|e| CliError::usage(e.to_string()))?;
            Ok((res.ordering, format!("adm-approx({})", res.adm)))
        }
        other => {
            if let Some(path) = other.strip_prefix("file:") {
                let ord = read_ordering_file(Path::new(path))
                    .map_err(|e| CliError::usage(format!("{path}: {e}")))?;
                if ord.n() != g.n() {
                    return Err(CliError::usage(format!(
                        "ordering has {} vertices, graph has {}",
                        ord.n(),
                        g.n()
                    )));
                }
                Ok((ord, format!("file:{path}")))
            } else {
                Err(CliError::usage(format!("unknown ordering mode `{other}`")))
            }
        }
    }
}

fn cmd_order(
    path: &Path,
    args: &OrderingArgs,
    m: usize,
    out: Option<&Path>,
) -> Result<(), CliError> {
    if m < 1 {
        return Err(CliError::usage("radius m must be at least 1"));
    }
    let g = load_graph(path)?;
    let (ord, label) = obtain_ordering(&g, args, m)?;
    let stats = ordering_stats(&g, &ord, m);
    println!(
        "ordering mode={label} n={} m={m} wcol={} col={}",
        g.n(),
        stats.realized_wcol(),
        stats.realized_col()
    );
    if let Some(out) = out {
        write_ordering_file(out, &ord).map_err(|e| CliError::usage(e.to_string()))?;
    }
    Ok(())
}

fn run_verified(
    g: &Graph,
    ord: &VertexOrdering,
    k: usize,
    m: usize,
) -> Result<DominationCertificate, CliError> {
    let cert = dominating_set(g, ord, k, m).map_err(|e| CliError::usage(e.to_string()))?;
    let check =
        oracles::verify_certificate(g, &cert).map_err(|e| CliError::Check(e.to_string()))?;
    if !check.all_ok() {
        return Err(CliError::Check(format!(
            "certificate failed self-verification: dominating={} independent={} chain={}",
            check.dominating, check.independent, check.chain
        )));
    }
    Ok(cert)
}

fn cmd_dominate(
    path: &Path,
    k: usize,
    m: usize,
    args: &OrderingArgs,
    out: Option<&Path>,
) -> Result<(), CliError> {
    if k < 1 || m < 1 || m > 2 * k + 1 {
        return Err(CliError::usage(format!(
            "need k >= 1 and 1 <= m <= 2k+1, got k={k} m={m}"
        )));
    }
    let g = load_graph(path)?;
    let (ord, label) = obtain_ordering(&g, args, m)?;
    let cert = run_verified(&g, &ord, k, m)?;
    let text = certificate_to_text(&cert);
    match out {
        Some(out) => {
            fs::write(out, &text).map_err(|e| CliError::usage(e.to_string()))?;
            println!(
                "{}",
                certificate_record_line(&display_name(path), g.n(), &cert)
            );
        }
        None => print!("{text}"),
    }
    eprintln!(
        "verified: ordering={label} c={} |D|={} |A|={} bound={}",
        cert.c,
        cert.dominating.len(),
        cert.independent.len(),
        cert.certified_bound()
    );
    Ok(())
}

fn cmd_exact(path: &Path, k: usize, m: usize, budget_n: Option<usize>) -> Result<(), CliError> {
    if k < 1 || m < 1 {
        return Err(CliError::usage("need k >= 1 and m >= 1"));
    }
    let g = load_graph(path)?;
    let budget = match budget_n {
        Some(n) => OracleBudget::with_max_n(n),
        None => OracleBudget::default(),
    };
    let (dom, dom_witness) = oracles::exact_min_dominating(&g, k, &budget)?;
    let (alpha, alpha_witness) = oracles::exact_max_independent(&g, m, &budget)?;
    println!("exact n={} m_edges={}", g.n(), g.m_edges());
    println!("dom k={k} value={dom} witness={}", id_list(&dom_witness));
    println!(
        "alpha m={m} value={alpha} witness={}",
        id_list(&alpha_witness)
    );
    if g.n() <= budget.max_n_order {
        let wcol = oracles::exact_wcol(&g, m, &budget)?;
        let col = oracles::exact_col(&g, m, &budget)?;
        let adm = oracles::exact_adm(&g, m, &budget)?;
        println!("wcol m={m} value={wcol}");
        println!("col m={m} value={col}");
        println!("adm m={m} value={adm}");
    }
    Ok(())
}

fn cmd_verify(graph_path: &Path, cert_path: &Path) -> Result<(), CliError> {
    let g = load_graph(graph_path)?;
    let text = fs::read_to_string(cert_path).map_err(|e| CliError::usage(e.to_string()))?;
    let cert = certificate_from_text(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", cert_path.display())))?;
    let check = oracles::verify_certificate(&g, &cert)
        .map_err(|e| CliError::usage(format!("certificate ids out of range: {e}")))?;
    println!(
        "dominating={} independent={} chain={}",
        check.dominating, check.independent, check.chain
    );
    if check.all_ok() {
        println!(
            "certificate OK: |D|={} <= c^2|A| = {}",
            cert.dominating.len(),
            cert.certified_bound()
        );
        Ok(())
    } else {
        Err(CliError::Check("certificate rejected".to_string()))
    }
}

fn display_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn id_list(ids: &[usize]) -> String {
    let mut s = String::new();
    for (i, v) in ids.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{v}");
    }
    s
}

fn cmd_bench(
    corpus: Option<&Path>,
    grids: Option<&str>,
    k: usize,
    m: usize,
    args: &OrderingArgs,
    seed: u64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    if k < 1 || m < 1 || m > 2 * k + 1 {
        return Err(CliError::usage(format!(
            "need k >= 1 and 1 <= m <= 2k+1, got k={k} m={m}"
        )));
    }
    let _ = seed; // reserved for generator-spec corpora
    let mut instances: Vec<(String, Result<Graph, String>)> = Vec::new();
    if let Some(dir) = corpus {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| CliError::usage(format!("{}: {e}", dir.display())))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "txt"))
            .collect();
        paths.sort();
        for p in paths {
            let name = display_name(&p);
            instances.push((name, read_graph_file(&p).map_err(|e| e.to_string())));
        }
    }
    if let Some(list) = grids {
        for tok in list.split(',').filter(|t| !t.is_empty()) {
            let side: usize = tok
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad grid side `{tok}`")))?;
            instances.push((
                format!("grid-{side}x{side}"),
                Ok(generators::grid(side, side)),
            ));
        }
    }

    println!("instance n c |D| |A| ratio decreases ok time_ms");
    let mut records = String::new();
    for (name, loaded) in instances {
        match loaded {
            Err(err) => {
                println!("{name} - - - - - - ERROR -");
                records.push_str(&format!("instance={name} error={err}\n"));
            }
            Ok(g) => {
                let t0 = Instant::now();
                let (ord, _) = obtain_ordering(&g, args, m)?;
                let cert =
                    dominating_set(&g, &ord, k, m).map_err(|e| CliError::usage(e.to_string()))?;
                let elapsed = t0.elapsed();
                let ok = oracles::verify_certificate(&g, &cert)
                    .map(|c| c.all_ok())
                    .unwrap_or(false);
                let ratio = if cert.independent.is_empty() {
                    "-".to_string()
                } else {
                    format!(
                        "{:.2}",
                        cert.dominating.len() as f64 / cert.independent.len() as f64
                    )
                };
                println!(
                    "{name} {} {} {} {} {ratio} {} {} {:.3}",
                    g.n(),
                    cert.c,
                    cert.dominating.len(),
                    cert.independent.len(),
                    cert.label_decreases,
                    if ok { "ok" } else { "FAILED" },
                    elapsed.as_secs_f64() * 1e3
                );
                records.push_str(&certificate_record_line(&name, g.n(), &cert));
                records.push_str(&format!(" ok={ok}\n"));
            }
        }
    }
    if let Some(out) = out {
        fs::write(out, records).map_err(|e| CliError::usage(e.to_string()))?;
    }
    Ok(())
}
