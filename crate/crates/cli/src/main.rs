use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use hilbert_cli::dot::{render, HasseCluster};
use hilbert_cli::format::{load, AlgebraFile, LoadError};
use hilbert_depth::enumerate::{
    enumerate_hilbert_with_cap, enumeration_cap_from_env, SIZE_CAP_ENV,
};
use hilbert_depth::{
    all_filters, is_implicative_filter, meet_irreducibles, quotient, verify_main_theorem,
    DepthReport, Filter, FiniteHilbertAlgebra, Subset, Violation,
};

#[derive(Parser)]
#[command(
    name = "hilbert",
    version,
    about = "Filters, spectra and depth of finite Hilbert algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a Hilbert algebra.
    Check { path: PathBuf },
    /// Report the filter lattice, the meet-irreducible spectrum and the depth.
    Analyze {
        path: PathBuf,
        /// List every implicative filter.
        #[arg(long)]
        filters: bool,
        /// List the meet-irreducible filters and their covering relation.
        #[arg(long)]
        spectrum: bool,
        /// Show a longest chain of meet-irreducible filters.
        #[arg(long)]
        depth: bool,
        /// Write Hasse diagrams of the filter lattice and the spectrum as DOT.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Compare depth ≤ n with the identity d_n ≈ 1 for every n ≤ nmax.
    Verify {
        /// Algebra file to check.
        #[arg(required_unless_present = "enumerate", conflicts_with = "enumerate")]
        path: Option<PathBuf>,
        /// Check every algebra with at most this many elements instead.
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
        #[arg(long, value_name = "K", default_value_t = 4)]
        nmax: usize,
    },
    /// Print the quotient by an implicative filter as an algebra file.
    Quotient {
        path: PathBuf,
        /// Comma-separated elements of the filter, by name or index.
        #[arg(long, value_name = "ELEMENTS")]
        filter: String,
    },
    /// Count Hilbert algebras of each size up to isomorphism.
    Enumerate {
        /// Largest size to enumerate.
        max_size: usize,
        /// Write one algebra file per algebra into this directory.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

/// Exit status 1: the input is well-formed but fails a domain check.
/// Exit status 2: the input could not be read or parsed.
enum Failure {
    Domain(anyhow::Error),
    Usage(anyhow::Error),
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Parse(_) => Failure::Usage(anyhow!(e)),
            LoadError::Invalid(_) => Failure::Domain(anyhow!(e)),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { path } => cmd_check(&path),
        Command::Analyze {
            path,
            filters,
            spectrum,
            depth,
            dot,
        } => cmd_analyze(&path, filters, spectrum, depth, dot.as_deref()),
        Command::Verify {
            path,
            enumerate,
            nmax,
        } => cmd_verify(path.as_deref(), enumerate, nmax),
        Command::Quotient { path, filter } => cmd_quotient(&path, &filter),
        Command::Enumerate { max_size, out } => cmd_enumerate(max_size, out.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn describe(v: &Violation, label: impl Fn(usize) -> String) -> String {
    match *v {
        Violation::NoConstantTop { a, b } => {
            format!("(top) {0}→{0} ≠ {1}→{1}", label(a), label(b))
        }
        Violation::K { a, b } => format!("(K) a→(b→a) ≠ 1 at ({}, {})", label(a), label(b)),
        Violation::S { a, b, c } => format!(
            "(S) (a→(b→c))→((a→b)→(a→c)) ≠ 1 at ({}, {}, {})",
            label(a),
            label(b),
            label(c)
        ),
        Violation::Antisymmetry { a, b } => {
            format!(
                "(antisym) {0}→{1} = 1 = {1}→{0} with {0} ≠ {1}",
                label(a),
                label(b)
            )
        }
    }
}

fn cmd_check(path: &Path) -> CmdResult {
    let file = AlgebraFile::read(path)?;
    let report = file.validate()?;
    if report.is_ok() {
        file.to_algebra()?;
        println!("valid Hilbert algebra, size {}", report.size);
        return Ok(ExitCode::SUCCESS);
    }
    let label = |i: usize| match &file.names {
        Some(names) => names[i].clone(),
        None => i.to_string(),
    };
    println!(
        "not a Hilbert algebra: {} violation(s)",
        report.violations.len()
    );
    for v in &report.violations {
        println!("  {}", describe(v, label));
    }
    Ok(ExitCode::from(1))
}

fn plural(k: usize, word: &str) -> String {
    if k == 1 {
        format!("{k} {word}")
    } else {
        format!("{k} {word}s")
    }
}

fn cmd_analyze(
    path: &Path,
    filters: bool,
    spectrum: bool,
    depth: bool,
    dot: Option<&Path>,
) -> CmdResult {
    let alg = load(path)?;
    let lattice = all_filters(&alg).map_err(|e| Failure::Domain(e.into()))?;
    let irreducibles = meet_irreducibles(&lattice);
    let chain = irreducibles.longest_chain();
    let fmt = |i: usize| alg.format_subset(lattice.get(i).set());

    let shape = if irreducibles.is_empty() {
        String::new()
    } else if irreducibles.is_chain() {
        " (chain)".into()
    } else if irreducibles.is_antichain() {
        " (antichain)".into()
    } else {
        " (poset)".into()
    };
    println!(
        "{}, spectrum {}{shape}, depth {}",
        plural(lattice.len(), "filter"),
        irreducibles.len(),
        chain.len()
    );

    if filters {
        println!("filters:");
        for i in 0..lattice.len() {
            println!("  {}", fmt(i));
        }
    }
    if spectrum {
        println!("spectrum:");
        for &i in irreducibles.indices() {
            println!("  {}", fmt(i));
        }
        println!("covers:");
        for (lo, hi) in irreducibles.covers() {
            println!("  {} ⊂ {}", fmt(lo), fmt(hi));
        }
    }
    if depth {
        println!("depth {}", chain.len());
        if !chain.is_empty() {
            let parts: Vec<String> = chain.iter().map(|&i| fmt(i)).collect();
            println!("longest chain: {}", parts.join(" ⊊ "));
        }
    }
    if let Some(out) = dot {
        let all: Vec<usize> = (0..lattice.len()).collect();
        let cluster = |name: &str, title: &str, nodes: &[usize], covers: Vec<(usize, usize)>| {
            let pos = |i: usize| nodes.iter().position(|&n| n == i).unwrap();
            HasseCluster {
                name: name.into(),
                title: title.into(),
                labels: nodes.iter().map(|&i| fmt(i)).collect(),
                covers: covers.into_iter().map(|(a, b)| (pos(a), pos(b))).collect(),
            }
        };
        let text = render(
            "hilbert",
            &[
                cluster("fi", "Fi(A)", &all, lattice.covers()),
                cluster(
                    "spectrum",
                    "A_*",
                    irreducibles.indices(),
                    irreducibles.covers(),
                ),
            ],
        );
        std::fs::write(out, text)
            .with_context(|| format!("writing {}", out.display()))
            .map_err(Failure::Usage)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_rows(report: &DepthReport) {
    let alg = &report.algebra;
    for row in &report.rows {
        let witness = match &row.counterexample {
            Some(v) => {
                let labels: Vec<String> = v.iter().map(|&x| alg.label(x)).collect();
                format!("  counterexample ({})", labels.join(", "))
            }
            None => String::new(),
        };
        println!(
            "  n={}: depth≤n {}, d_n≈1 {}{}{witness}",
            row.n,
            yes_no(row.depth_leq),
            yes_no(row.identity_holds),
            if row.agree() { "" } else { "  DISAGREE" },
        );
    }
}

fn cmd_verify(path: Option<&Path>, enumerate: Option<usize>, nmax: usize) -> CmdResult {
    let algebras: Vec<FiniteHilbertAlgebra> = match (path, enumerate) {
        (Some(p), _) => vec![load(p)?],
        (None, Some(n)) => {
            let cap = enumeration_cap_from_env();
            let mut all = Vec::new();
            for k in 1..=n {
                let batch = enumerate_hilbert_with_cap(k, cap).map_err(|e| {
                    Failure::Usage(anyhow!("{e} (set {SIZE_CAP_ENV} to raise the cap)"))
                })?;
                all.extend(batch);
            }
            all
        }
        (None, None) => {
            return Err(Failure::Usage(anyhow!(
                "give an algebra file or --enumerate"
            )))
        }
    };

    let single = path.is_some();
    let mut pairs = 0;
    let mut disagreements = 0;
    for (i, alg) in algebras.iter().enumerate() {
        let report = verify_main_theorem(alg, nmax).map_err(|e| Failure::Domain(e.into()))?;
        pairs += report.rows.len();
        if single {
            println!("depth {}", report.depth);
            print_rows(&report);
        }
        if !report.all_agree() {
            disagreements += report.rows.iter().filter(|r| !r.agree()).count();
            if !single {
                println!(
                    "algebra #{i} (size {}, depth {}):",
                    alg.size(),
                    report.depth
                );
                println!("{}", AlgebraFile::from_algebra(alg).to_toml());
                print_rows(&report);
            }
        }
    }
    let summary = format!(
        "{} checked, {pairs} (algebra,n) pairs",
        plural(algebras.len(), "algebra")
    );
    if disagreements == 0 {
        println!("{summary}, all agree");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{summary}, {disagreements} disagreement(s)");
        Ok(ExitCode::from(1))
    }
}

/// Explains why `s` is not an implicative filter.
fn filter_failure(alg: &FiniteHilbertAlgebra, s: Subset) -> String {
    if !s.contains(alg.top()) {
        return format!("it does not contain 1 ({})", alg.label(alg.top()));
    }
    for a in s {
        for b in alg.elements() {
            if s.contains(alg.imp(a, b)) && !s.contains(b) {
                return format!(
                    "{} and {} → {} = {} belong to it but {} does not",
                    alg.label(a),
                    alg.label(a),
                    alg.label(b),
                    alg.label(alg.imp(a, b)),
                    alg.label(b)
                );
            }
        }
    }
    "it is not closed under modus ponens".into()
}

fn cmd_quotient(path: &Path, filter: &str) -> CmdResult {
    let alg = load(path)?;
    let mut set = Subset::EMPTY;
    for token in filter.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let e = alg
            .element_by_label(token)
            .ok_or_else(|| Failure::Usage(anyhow!("unknown element {token:?}")))?;
        set.insert(e);
    }
    if !is_implicative_filter(&alg, set) {
        return Err(Failure::Domain(anyhow!(
            "not an implicative filter: {}: {}",
            alg.format_subset(set),
            filter_failure(&alg, set)
        )));
    }
    let f = Filter::new(&alg, set).map_err(|e| Failure::Domain(e.into()))?;
    let q = quotient(&alg, &f).map_err(|e| Failure::Domain(e.into()))?;
    print!("{}", AlgebraFile::from_algebra(&q.algebra).to_toml());
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(max_size: usize, out: Option<&Path>) -> CmdResult {
    let cap = enumeration_cap_from_env();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
    }
    for n in 1..=max_size {
        let algebras = enumerate_hilbert_with_cap(n, cap)
            .map_err(|e| Failure::Usage(anyhow!("{e} (set {SIZE_CAP_ENV} to raise the cap)")))?;
        println!("size {n}: {}", plural(algebras.len(), "algebra"));
        if let Some(dir) = out {
            for (i, a) in algebras.iter().enumerate() {
                let file = dir.join(format!("hilbert-{n}-{i:03}.toml"));
                std::fs::write(&file, AlgebraFile::from_algebra(a).to_toml())?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
