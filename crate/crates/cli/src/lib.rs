//! Command implementations for the `artinhyp` binary. Each command returns
//! its rendered output so that the binary only handles I/O and exit codes.

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use artinhyp::classify::{verdict_with, ClassifyError, ClassifyOptions};
use artinhyp::complexes::spherical_poset;
use artinhyp::coxeter::CoxeterError;
use artinhyp::defgraph::{parse_defining_graph, DefiningGraph, GraphError, VertexSet};
use artinhyp::hypcube::{cat_certificate, dihedral_angle, HypError};
use artinhyp::orbits::{
    coned_off_cayley_ball, davis_ball, deligne_ball, delta_four_point, orbit_map_fit,
    CoxeterOracle, CubicalBall, DeltaOptions, OrbitError, OrbitGraph, RightAngledArtin, Sample,
    WeightedGraph, WordOracle, DEFAULT_BALL_CAP, DEFAULT_POINT_LIMIT, DEFAULT_QUADRUPLE_BUDGET,
    DEFAULT_SEED,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "artinhyp",
    version,
    about = "Hyperbolicity tools for Artin groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the graph-level hyperbolicity criteria.
    Classify(ClassifyArgs),
    /// Tabulate the cube angle theta(eps) and its deviation from pi/2.
    CubeTable(CubeTableArgs),
    /// Build a finite ball and export it.
    Ball(BallArgs),
    /// Estimate Gromov's delta on a finite ball.
    Delta(DeltaArgs),
    /// Fit quasi-isometry constants for the orbit map from the coned-off
    /// Cayley graph to the Deligne complex.
    Qi(QiArgs),
    /// Run the CAT(-1) checklist for the cubical Deligne complex.
    Certify(CertifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    /// Flat `u v weight` edge list.
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BallKind {
    /// Cayley graph of the Artin group (right-angled graphs only).
    Cayley,
    /// Cayley graph coned off along the maximal spherical parabolics.
    Coned,
    /// Cubical Deligne complex (right-angled graphs only).
    Deligne,
    /// Cubical Davis complex of the Coxeter group.
    Davis,
    /// Cayley graph of the Coxeter group.
    CoxeterCayley,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Defining graph in the text format (`vertex a`, `edge a b m`).
    #[arg(long)]
    pub input: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Vertex bound for the product search.
    #[arg(long, default_value_t = artinhyp::classify::DEFAULT_M2_VERTEX_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CubeTableArgs {
    /// Comma-separated values of eps.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub epsilon: Vec<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BallSpec {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = BallKind::Deligne)]
    pub kind: BallKind,
    #[arg(long)]
    pub radius: usize,
    /// Bound on the number of vertices.
    #[arg(long, default_value_t = DEFAULT_BALL_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct BallArgs {
    #[command(flatten)]
    pub ball: BallSpec,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub ball: BallSpec,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// `auto`, `all`, or a number of random quadruples.
    #[arg(long, default_value = "auto")]
    pub sample: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct QiArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub radius: usize,
    /// Word-length bound for the fitted pairs; must be below the radius.
    #[arg(long)]
    pub interior: usize,
    #[arg(long, default_value_t = DEFAULT_BALL_CAP)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub epsilon: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: GraphError },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Geometry(#[from] HypError),
}

impl CliError {
    /// 2 parse error, 3 cap exceeded, 4 internal inconsistency, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Classify(ClassifyError::CapExceeded { .. })
            | CliError::Orbit(OrbitError::CapExceeded { .. })
            | CliError::Orbit(OrbitError::Coxeter(CoxeterError::CapExceeded { .. }))
            | CliError::Geometry(HypError::Ball(OrbitError::CapExceeded { .. })) => 3,
            CliError::Classify(ClassifyError::Inconsistent(_))
            | CliError::Orbit(OrbitError::Inconsistent(_)) => 4,
            _ => 1,
        }
    }
}

fn read_graph(common: &Common) -> Result<DefiningGraph, CliError> {
    let path = common.input.display().to_string();
    let text = std::fs::read_to_string(&common.input).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    parse_defining_graph(&text).map_err(|source| CliError::Parse { path, source })
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Invalid(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Runs a command and returns its output text.
pub fn run(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Classify(args) => classify(args),
        Command::CubeTable(args) => cube_table(args),
        Command::Ball(args) => ball(args),
        Command::Delta(args) => delta(args),
        Command::Qi(args) => qi(args),
        Command::Certify(args) => certify(args),
    }
}

/// Output path of a command, if it writes to a file.
pub fn output_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Classify(a) => a.common.out.as_ref(),
        Command::CubeTable(a) => a.out.as_ref(),
        Command::Ball(a) => a.ball.common.out.as_ref(),
        Command::Delta(a) => a.ball.common.out.as_ref(),
        Command::Qi(a) => a.common.out.as_ref(),
        Command::Certify(a) => a.common.out.as_ref(),
    }
}

fn classify(args: &ClassifyArgs) -> Result<String, CliError> {
    if args.format != Format::Json {
        return Err(unsupported("classify", args.format));
    }
    let graph = read_graph(&args.common)?;
    let report = verdict_with(
        &graph,
        ClassifyOptions {
            m2_vertex_cap: args.cap,
        },
    )?;
    Ok(json(&report.to_json(&graph)))
}

#[derive(Debug, Serialize)]
struct CubeRow {
    epsilon: f64,
    theta: f64,
    margin: f64,
}

fn cube_table(args: &CubeTableArgs) -> Result<String, CliError> {
    if args.epsilon.is_empty() {
        return Err(CliError::Invalid("empty epsilon grid".into()));
    }
    if let Some(e) = args.epsilon.iter().find(|e| !(**e > 0.0 && e.is_finite())) {
        return Err(CliError::Invalid(format!(
            "epsilon must be positive, got {e}"
        )));
    }
    let rows: Vec<CubeRow> = args
        .epsilon
        .iter()
        .map(|&epsilon| {
            let theta = dihedral_angle(epsilon);
            CubeRow {
                epsilon,
                theta,
                margin: FRAC_PI_2 - theta,
            }
        })
        .collect();
    match args.format {
        Format::Csv => {
            let mut out = String::from("epsilon,theta,margin\n");
            for r in &rows {
                out.push_str(&format!("{},{},{}\n", r.epsilon, r.theta, r.margin));
            }
            Ok(out)
        }
        Format::Json => Ok(json(&rows)),
        f => Err(unsupported("cube-table", f)),
    }
}

enum Built {
    Orbit(OrbitGraph),
    Cubical(CubicalBall),
}

impl Built {
    fn skeleton(&self) -> &WeightedGraph {
        match self {
            Built::Orbit(g) => &g.graph,
            Built::Cubical(b) => &b.skeleton,
        }
    }
}

fn artin_oracle(graph: &DefiningGraph) -> Result<RightAngledArtin, CliError> {
    RightAngledArtin::new(graph).map_err(|_| {
        CliError::Invalid(
            "Artin-group balls need a right-angled graph; use --kind davis or coxeter-cayley"
                .into(),
        )
    })
}

fn maximal_spherical(graph: &DefiningGraph) -> Vec<VertexSet> {
    spherical_poset(graph).maximal()
}

fn build(graph: &DefiningGraph, args: &BallSpec) -> Result<Built, CliError> {
    Ok(match args.kind {
        BallKind::Cayley => {
            let oracle = artin_oracle(graph)?;
            Built::Orbit(coned_off_cayley_ball(&oracle, &[], args.radius, args.cap)?)
        }
        BallKind::Coned => {
            let oracle = artin_oracle(graph)?;
            let family = maximal_spherical(graph);
            Built::Orbit(coned_off_cayley_ball(
                &oracle,
                &family,
                args.radius,
                args.cap,
            )?)
        }
        BallKind::CoxeterCayley => {
            let oracle = CoxeterOracle::new(graph);
            Built::Orbit(coned_off_cayley_ball(&oracle, &[], args.radius, args.cap)?)
        }
        BallKind::Deligne => {
            artin_oracle(graph)?;
            Built::Cubical(deligne_ball(graph, args.radius, args.cap)?)
        }
        BallKind::Davis => Built::Cubical(davis_ball(graph, args.radius, args.cap)?),
    })
}

#[derive(Debug, Serialize)]
struct BallVertex {
    id: usize,
    label: String,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    subset: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
struct BallJson {
    kind: String,
    radius: usize,
    vertices: Vec<BallVertex>,
    /// `[u, v, weight]`; true length is weight / 2.
    edges: Vec<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cubes: Option<Vec<CubeJson>>,
}

#[derive(Debug, Serialize)]
struct CubeJson {
    base: usize,
    lower: Vec<String>,
    upper: Vec<String>,
}

fn ball_json(graph: &DefiningGraph, kind: BallKind, built: &Built) -> BallJson {
    let kind_name = format!("{kind:?}").to_lowercase();
    let edges = built
        .skeleton()
        .edges()
        .into_iter()
        .map(|(a, b, w)| [a, b, w as usize])
        .collect();
    match built {
        Built::Orbit(g) => BallJson {
            kind: kind_name,
            radius: g.radius,
            vertices: (0..g.node_count())
                .map(|i| {
                    let (k, subset) = match g.labels[i].kind {
                        artinhyp::orbits::NodeKind::Element => ("element", None),
                        artinhyp::orbits::NodeKind::Cone { subgroup } => {
                            ("cone", Some(graph.names_of(g.family[subgroup])))
                        }
                    };
                    BallVertex {
                        id: i,
                        label: g.label_text(graph, i),
                        kind: k,
                        subset,
                    }
                })
                .collect(),
            edges,
            cubes: None,
        },
        Built::Cubical(b) => BallJson {
            kind: kind_name,
            radius: b.radius,
            vertices: (0..b.vertex_count())
                .map(|i| BallVertex {
                    id: i,
                    label: b.label_text(graph, i),
                    kind: "coset",
                    subset: Some(graph.names_of(b.vertices[i].1)),
                })
                .collect(),
            edges,
            cubes: Some(
                b.cubes
                    .iter()
                    .map(|c| CubeJson {
                        base: c.base,
                        lower: graph.names_of(c.lower),
                        upper: graph.names_of(c.upper),
                    })
                    .collect(),
            ),
        },
    }
}

fn ball(args: &BallArgs) -> Result<String, CliError> {
    let graph = read_graph(&args.ball.common)?;
    let built = build(&graph, &args.ball)?;
    match args.format {
        Format::Dot => Ok(match &built {
            Built::Orbit(g) => g.to_dot(&graph),
            Built::Cubical(b) => b.to_dot(&graph),
        }),
        Format::Edges | Format::Csv => Ok(built.skeleton().to_edge_list()),
        Format::Json => Ok(json(&ball_json(&graph, args.ball.kind, &built))),
    }
}

fn parse_sample(text: &str) -> Result<Sample, CliError> {
    match text {
        "auto" => Ok(Sample::Auto),
        "all" => Ok(Sample::All),
        n => n
            .parse::<u64>()
            .ok()
            .filter(|&k| k > 0)
            .map(Sample::Count)
            .ok_or_else(|| {
                CliError::Invalid(format!(
                    "--sample must be auto, all or a positive integer, got {n}"
                ))
            }),
    }
}

#[derive(Debug, Serialize)]
struct DeltaJson {
    kind: String,
    radius: usize,
    seed: u64,
    #[serde(flatten)]
    estimate: artinhyp::orbits::DeltaEstimate,
}

fn delta(args: &DeltaArgs) -> Result<String, CliError> {
    let sample = parse_sample(&args.sample)?;
    if args.format != Format::Json {
        return Err(unsupported("delta", args.format));
    }
    let graph = read_graph(&args.ball.common)?;
    let built = build(&graph, &args.ball)?;
    let estimate = delta_four_point(
        built.skeleton(),
        &DeltaOptions {
            sample,
            seed: args.seed,
            budget: DEFAULT_QUADRUPLE_BUDGET,
            point_limit: DEFAULT_POINT_LIMIT,
        },
    )?;
    Ok(json(&DeltaJson {
        kind: format!("{:?}", args.ball.kind).to_lowercase(),
        radius: args.ball.radius,
        seed: args.seed,
        estimate,
    }))
}

#[derive(Debug, Serialize)]
struct QiJson {
    radius: usize,
    interior: usize,
    family: Vec<Vec<String>>,
    lambda: f64,
    c: f64,
    pairs: usize,
}

fn qi(args: &QiArgs) -> Result<String, CliError> {
    if !matches!(args.format, Format::Json | Format::Csv) {
        return Err(unsupported("qi", args.format));
    }
    let graph = read_graph(&args.common)?;
    let oracle = artin_oracle(&graph)?;
    let family = maximal_spherical(&graph);
    let coned = coned_off_cayley_ball(&oracle, &family, args.radius, args.cap)?;
    let deligne = deligne_ball(oracle.defining_graph(), args.radius, args.cap)?;
    let fit = orbit_map_fit(&coned, &deligne, args.interior)?;
    Ok(match args.format {
        Format::Csv => fit.to_csv(),
        _ => json(&QiJson {
            radius: args.radius,
            interior: args.interior,
            family: family.iter().map(|&h| graph.names_of(h)).collect(),
            lambda: fit.lambda,
            c: fit.c,
            pairs: fit.table.len(),
        }),
    })
}

fn certify(args: &CertifyArgs) -> Result<String, CliError> {
    if args.format != Format::Json {
        return Err(unsupported("certify", args.format));
    }
    let graph = read_graph(&args.common)?;
    Ok(json(&cat_certificate(&graph, args.epsilon)?))
}
