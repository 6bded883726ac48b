mod document;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use blockset::blocked::{
    audit_lemmas, verify_blocked, verify_midpoint_blocked, ColouredPointSet, KSetSignature,
};
use blockset::constructions::{
    augment, canonical, grid_3d, power, product, turan_lines, verify_line_cover,
};
use blockset::search::{enumerate_blocked, find_blocked, SearchSpec, SearchStatus};
use blockset::visibility::occlusion_free_projection;
use clap::{Args, Parser, Subcommand};

use document::{ConfigDocument, Document, LineCoverDocument, Metadata};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments: exit code 2.
    Usage(String),
    /// Unreadable or invalid input document: exit code 2.
    Parse(String),
    /// A check or construction failed: exit code 1.
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) | CliError::Parse(_) => 2,
        }
    }
}

impl From<blockset::Error> for CliError {
    fn from(e: blockset::Error) -> Self {
        use blockset::Error::*;
        match e {
            UnknownName(_) | OutOfRange(_) | Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "blockset",
    version,
    about = "Generate, verify, search for and draw blocked coloured point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a configuration or line cover and write it as JSON.
    Generate(GenerateArgs),
    /// Check that a document is blocked (exit 1 if not).
    Verify {
        file: PathBuf,
        /// Also require every monochromatic pair to be blocked by its midpoint.
        #[arg(long)]
        midpoint: bool,
        /// Also run the structural audit.
        #[arg(long)]
        audit: bool,
    },
    /// Search an integer grid for blocked configurations.
    Search(SearchArgs),
    /// Draw a planar document as SVG.
    ExportSvg {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    kind: GenerateKind,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Project a configuration of dimension 3 or more to the plane.
    #[arg(long, global = true)]
    project: bool,
    /// Seed for the projection.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

/// Sources name a document file, a stored configuration, or `grid3d:D`.
#[derive(Subcommand)]
enum GenerateKind {
    /// A stored configuration such as K4221 or K3333.
    Canonical { name: String },
    /// The points {0,1,2}^D coloured by which coordinates equal 1.
    Grid3d { d: usize },
    /// The product of two midpoint-blocked sets.
    Product { a: String, b: String },
    /// The I-fold product of a midpoint-blocked set with itself.
    Power { source: String, i: usize },
    /// Add a new colour class of M points (1, 2 or 3) to a planar set.
    Augment { source: String, m: usize },
    /// The line cover of the complete K-partite graph with parts of size N.
    Turan { k: usize, n: usize },
}

#[derive(Args)]
struct SearchArgs {
    /// Inclusive grid bounds.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], required = true, allow_negative_numbers = true)]
    grid: Vec<i64>,
    /// Largest configuration to explore; defaults to the target size.
    #[arg(long)]
    max_points: Option<usize>,
    /// Stop at the first configuration with this signature, e.g. 3,3,3,3.
    #[arg(long)]
    target: Option<KSetSignature>,
    /// Only accept midpoint-blocked configurations.
    #[arg(long)]
    midpoint: bool,
    /// Maximum number of search nodes.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    /// Disable the translation reduction.
    #[arg(long)]
    no_symmetry: bool,
    /// Directory for witness documents.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Verify {
            file,
            midpoint,
            audit,
        } => verify(&file, midpoint, audit),
        Command::Search(args) => search(args),
        Command::ExportSvg { file, out } => export_svg(&file, &out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Parse(m) => eprintln!("error: cannot read document: {m}"),
                CliError::Failed(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(e.code())
        }
    }
}

fn load_set(path: &Path) -> CliResult<ColouredPointSet> {
    match document::read(path)? {
        Document::Config(doc) => doc.to_set(),
        Document::Lines(_) => Err(CliError::Usage(format!(
            "{} is a line cover, not a point set",
            path.display()
        ))),
    }
}

fn load_source(source: &str) -> CliResult<ColouredPointSet> {
    let path = Path::new(source);
    if path.is_file() {
        return load_set(path);
    }
    if let Some(d) = source.strip_prefix("grid3d:") {
        let d = d
            .parse()
            .map_err(|_| CliError::Usage(format!("bad dimension in {source:?}")))?;
        return Ok(grid_3d(d)?);
    }
    Ok(canonical(source)?)
}

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Failed(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(args: GenerateArgs) -> CliResult<()> {
    let (set, mut metadata) = match &args.kind {
        GenerateKind::Turan { k, n } => {
            let cover = turan_lines(*k, *n)?;
            let report = verify_line_cover(&cover)?;
            if !report.all_pass() {
                return Err(CliError::Failed(format!(
                    "line cover failed its checks: {report:?}"
                )));
            }
            let doc = LineCoverDocument::from_cover(
                &cover,
                Metadata::named(format!("turan({k},{n})"), "turan"),
            );
            return write_output(args.out.as_deref(), &document::to_json(&doc));
        }
        GenerateKind::Canonical { name } => (canonical(name)?, Metadata::named(name, "canonical")),
        GenerateKind::Grid3d { d } => (
            grid_3d(*d)?,
            Metadata::named(format!("grid3d({d})"), "grid3d"),
        ),
        GenerateKind::Product { a, b } => (
            product(&load_source(a)?, &load_source(b)?)?,
            Metadata::named(format!("product({a},{b})"), "product"),
        ),
        GenerateKind::Power { source, i } => (
            power(&load_source(source)?, *i)?,
            Metadata::named(format!("power({source},{i})"), "power"),
        ),
        GenerateKind::Augment { source, m } => (
            augment(&load_source(source)?, *m)?,
            Metadata::named(format!("augment({source},{m})"), "augment"),
        ),
    };
    let set = if args.project {
        let projection = occlusion_free_projection(set.config(), args.seed)?;
        metadata.seed = Some(args.seed.to_string());
        metadata.provenance = metadata.provenance.map(|p| format!("{p}, projected"));
        set.with_config(projection.config)?
    } else {
        set
    };
    let report = verify_blocked(&set);
    if !report.ok {
        return Err(CliError::Failed(format!(
            "generated set is not blocked ({} violations)",
            report.violations.len()
        )));
    }
    write_output(
        args.out.as_deref(),
        &document::to_json(&ConfigDocument::from_set(&set, metadata)),
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verify(path: &Path, midpoint: bool, audit: bool) -> CliResult<()> {
    let set = match document::read(path)? {
        Document::Config(doc) => doc.to_set()?,
        Document::Lines(doc) => return verify_lines(&doc),
    };
    println!("points: {}", set.len());
    println!("dimension: {}", set.dim());
    let report = verify_blocked(&set);
    println!("blocked: {}", yes_no(report.ok));
    for v in &report.violations {
        println!("violation: {} {} {}", v.kind, v.i, v.j);
    }
    let mut ok = report.ok;
    if let Some(sig) = &report.signature {
        println!("signature: {sig}");
    }
    if midpoint {
        if report.ok {
            let m = verify_midpoint_blocked(&set)?;
            match m.failing_pair {
                None => println!("midpoint-blocked: yes"),
                Some((i, j)) => println!("midpoint-blocked: no (midpoint of {i} and {j} missing)"),
            }
            ok &= m.ok;
        } else {
            println!("midpoint-blocked: no (not blocked)");
        }
    }
    if audit {
        if report.ok {
            let a = audit_lemmas(&set)?;
            println!("audit max-collinear: {}", a.max_collinear);
            println!(
                "audit at-most-three-collinear: {}",
                yes_no(a.at_most_three_collinear)
            );
            println!(
                "audit classes-in-general-position: {}",
                yes_no(a.classes_in_general_position)
            );
            let optional = |o: Option<bool>| o.map_or("n/a", yes_no);
            println!(
                "audit classes-at-most-four: {}",
                optional(a.classes_at_most_four)
            );
            println!(
                "audit at-most-twelve-points: {}",
                optional(a.at_most_twelve_points)
            );
            println!(
                "audit triangles-see-every-colour: {}",
                optional(a.triangles_see_every_colour)
            );
            ok &= a.all_pass();
        } else {
            println!("audit: skipped (not blocked)");
        }
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Failed("verification failed".into()))
    }
}

fn verify_lines(doc: &LineCoverDocument) -> CliResult<()> {
    let cover = doc.to_cover();
    let report = verify_line_cover(&cover).map_err(|e| CliError::Parse(e.to_string()))?;
    println!("lines: {}", cover.lines.len());
    println!(
        "edges-or-induced-paths: {}",
        yes_no(report.lines_are_edges_or_paths)
    );
    match report.witness_pair {
        None => println!("every-pair-exactly-once: yes"),
        Some((x, y)) => println!("every-pair-exactly-once: no (pair {x} {y})"),
    }
    println!(
        "common-neighbour: {}",
        yes_no(report.lines_have_common_neighbour)
    );
    println!(
        "every-vertex-covered: {}",
        yes_no(report.every_vertex_covered)
    );
    println!("pairs-covered: {}", report.pairs_covered);
    if report.all_pass() {
        Ok(())
    } else {
        Err(CliError::Failed("line cover failed".into()))
    }
}

fn search(args: SearchArgs) -> CliResult<()> {
    let (x, y) = (args.grid[0], args.grid[1]);
    let max_points = match (args.max_points, &args.target) {
        (Some(m), _) => m,
        (None, Some(t)) => t.total(),
        (None, None) => {
            return Err(CliError::Usage(
                "--max-points is required without --target".into(),
            ))
        }
    };
    let mut spec = SearchSpec::new(x, y, max_points);
    spec.require_midpoint_blocked = args.midpoint;
    spec.symmetry_reduction = !args.no_symmetry;
    spec.parallel_width = args.parallel;
    if let Some(b) = args.budget {
        spec.node_budget = b;
    }
    spec.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let outcome = match &args.target {
        Some(t) => find_blocked(t, &spec).map_err(|e| CliError::Usage(e.to_string()))?,
        None => enumerate_blocked(&spec)?,
    };
    println!("status: {}", outcome.status);
    println!("nodes: {}", outcome.nodes_explored);
    let sigs: Vec<String> = outcome
        .signatures_found
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("signatures: {}", sigs.join(" "));
    println!("witnesses: {}", outcome.witnesses.len());
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Failed(format!("{}: {e}", dir.display())))?;
        for (i, w) in outcome.witnesses.iter().enumerate() {
            let meta = Metadata::named(w.signature().to_string(), format!("search grid {x} {y}"));
            let path = dir.join(format!("witness-{i:03}.json"));
            write_output(
                Some(&path),
                &document::to_json(&ConfigDocument::from_set(w, meta)),
            )?;
        }
    }
    if args.target.is_some() && outcome.status != SearchStatus::Found {
        return Err(CliError::Failed(format!(
            "no configuration with the target signature ({})",
            outcome.status
        )));
    }
    Ok(())
}

fn export_svg(path: &Path, out: &Path) -> CliResult<()> {
    let set = load_set(path)?;
    if set.dim() != 2 {
        return Err(CliError::Failed(format!(
            "only planar sets can be drawn, found dimension {}",
            set.dim()
        )));
    }
    write_output(Some(out), &svg::render(&set))
}
