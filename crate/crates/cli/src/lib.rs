//! Argument parsing and dispatch for the `kprom` binary.
//!
//! Every subcommand reads JSON from `--input` (a path, or `-` for stdin) and
//! writes JSON, JSON-lines or DOT to `--output` (default stdout).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use kprom::digraphs::{reconstruct_rect_increasing, reconstruct_standard};
use kprom::enumerate::{self, Caps};
use kprom::harness::{self, HarnessError, SuiteConfig, CHECK_IDS};
use kprom::noncrossing::{pi_bijection, pi_inverse, rotate_partition, tograph, tograph_inverse};
use kprom::plabic::{classify, partition_to_plabic, rotate_web, trip_digraph};
use kprom::promotion::{default_order_bound, gromotion_orbit, promotion_order, Gromotion};
use kprom::tableaux::{from_lattice_word, AnyTableau, LatticeWord, Partition};
use kprom::{
    promotion_digraph, promotion_digraphs, NoncrossingMatching, NoncrossingSetPartition,
    PlabicGraph, Promotable, PromotionDigraph, StandardTableau,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILURE: i32 = 1;
pub const EXIT_CONJECTURE_VIOLATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Write(_) => 74,
        }
    }
}

fn parse_err(e: impl std::fmt::Display) -> CliError {
    CliError::Parse(e.to_string())
}

fn usage_err(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "kprom", version, about = "Promotion and K-promotion of tableaux, promotion digraphs and flamingo webs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input JSON file, or `-` for stdin.
    #[arg(long, short, default_value = "-")]
    input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Out {
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply promotion (standard) or K-promotion (increasing) to a tableau.
    Promote {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Promotion orbit of a tableau and its period.
    Orbit {
        #[command(flatten)]
        io: Io,
        /// Give up after this many promotions (default q·C(q,2)).
        #[arg(long)]
        max_iter: Option<usize>,
        /// List gromotion steps (rotated alphabet, slide events) instead of
        /// canonical tableaux.
        #[arg(long)]
        gromotion: bool,
    },
    /// Promotion digraph prom_i, or all of them.
    Digraph {
        #[command(flatten)]
        io: Io,
        /// Row index; every digraph when omitted.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Rebuild a tableau from its promotion digraphs (a JSON array).
    Reconstruct {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        kind: ReconstructKind,
        /// `4,3,2` for a partition or `3x4` for a rectangle.
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Shape>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        /// Alphabet size; defaults to the digraphs' vertex count.
        #[arg(long)]
        q: Option<u32>,
    },
    /// Convert between tableaux and lattice words.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Noncrossing matchings and set partitions.
    Nc {
        #[command(subcommand)]
        op: NcOp,
    },
    /// Plabic graphs and trip digraphs.
    Plabic {
        #[command(subcommand)]
        op: PlabicOp,
    },
    /// Dump a family as JSON lines.
    Enumerate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run harness checks; one JSON report per line.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReconstructKind {
    Standard,
    RectIncreasing,
}

#[derive(Debug, Subcommand)]
enum LatticeOp {
    /// Tableau JSON to lattice word JSON.
    Word {
        #[command(flatten)]
        io: Io,
        /// Print the compact text form instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Lattice word (text via --word, or JSON via --input) to tableau JSON.
    Tableau {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        word: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum NcOp {
    /// Two-row standard tableau to noncrossing matching.
    Tograph {
        #[command(flatten)]
        io: Io,
    },
    /// Noncrossing matching to two-row standard tableau.
    TographInverse {
        #[command(flatten)]
        io: Io,
    },
    /// Two-row increasing tableau to noncrossing partition without singletons.
    Pi {
        #[command(flatten)]
        io: Io,
    },
    /// Partition to two-row increasing tableau with `cols` columns.
    PiInverse {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        cols: usize,
    },
    /// Rotate a partition by x ↦ x−1.
    Rotate {
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Debug, Subcommand)]
enum PlabicOp {
    /// Validate a plabic graph; exits 65 when invalid.
    Validate {
        #[command(flatten)]
        io: Io,
    },
    Faces {
        #[command(flatten)]
        io: Io,
    },
    /// Planarity, normality and the flamingo conditions.
    Classify {
        #[command(flatten)]
        io: Io,
    },
    /// (i, r)-trip digraph.
    Trip {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Web with one white vertex per block of a noncrossing partition.
    FromPartition {
        #[command(flatten)]
        io: Io,
    },
    /// Relabel boundary b_x as b_{x-1}.
    Rotate {
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Partitions of n.
    Partitions {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Standard tableaux of one shape, or of every shape of size n.
    Syt {
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Shape>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Increasing tableaux of a shape over [1, q].
    Increasing {
        #[arg(long, value_parser = parse_shape)]
        shape: Shape,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        packed: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Noncrossing set partitions of [1, q].
    NcPartitions {
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Noncrossing perfect matchings of [1, n].
    NcMatchings {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Flamingo webs with n boundary vertices, exhaustive up to the interior bound.
    Flamingo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        max_interior: usize,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Check ids to run, in order.
    ids: Vec<String>,
    /// Run every check.
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    /// Print the known check ids and exit.
    #[arg(long)]
    list: bool,
    /// Leave wall-clock times out of the reports.
    #[arg(long)]
    no_timing: bool,
    /// JSON file with suite bounds; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    bounds: Bounds,
    #[command(flatten)]
    out: Out,
}

macro_rules! bounds {
    ($($field:ident: $ty:ty),* $(,)?) => {
        #[derive(Debug, Args)]
        struct Bounds {
            $(
                #[arg(long)]
                $field: Option<$ty>,
            )*
        }

        impl Bounds {
            fn apply(&self, cfg: &mut SuiteConfig) {
                $(
                    if let Some(v) = self.$field {
                        cfg.$field = v;
                    }
                )*
            }
        }
    };
}

bounds! {
    rect_max_cells: usize,
    syt_max_size: usize,
    inc_rect_max_rows: usize,
    inc_rect_max_cols: usize,
    inc_rect_max_q: u32,
    nonrect_max_size: usize,
    nonrect_max_q: u32,
    balance_two_row_max_q: u32,
    two_row_max_q: u32,
    two_row_max_cols: usize,
    indegree_max_rows: usize,
    indegree_max_cols: usize,
    indegree_max_q: u32,
    conj3_max_cols: usize,
    conj3_max_q: u32,
    web_max_boundary: usize,
    web_max_interior: usize,
    catalan_syt_max_cols: usize,
    catalan_nc_max_q: u32,
}

/// Partition given on the command line.
#[derive(Debug, Clone)]
struct Shape(Vec<usize>);

fn parse_shape(s: &str) -> Result<Shape, String> {
    parse_parts(s).map(Shape)
}

/// `4,3,2` or `3x4`.
fn parse_parts(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if let Some((r, c)) = s.split_once(['x', 'X', '×']) {
        let r: usize = r.trim().parse().map_err(|_| format!("bad row count in {s:?}"))?;
        let c: usize = c.trim().parse().map_err(|_| format!("bad column count in {s:?}"))?;
        return Ok(vec![c; r]);
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.trim_matches(|ch| ch == '(' || ch == ')')
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad part {p:?} in {s:?}")))
        .collect()
}

fn partition(shape: Shape) -> Result<Partition, CliError> {
    Partition::new(shape.0).map_err(usage_err)
}

fn read_text(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage_err(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage_err(format!("cannot read {}: {e}", path.display())))
    }
}

fn read_json<T: DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

/// Buffered sink for stdout or a file.
struct Sink(Box<dyn Write>);

impl Sink {
    fn open(path: &Option<PathBuf>) -> Result<Self, CliError> {
        Ok(Sink(match path {
            Some(p) => Box::new(io::BufWriter::new(
                fs::File::create(p).map_err(|e| usage_err(format!("cannot create {}: {e}", p.display())))?,
            )),
            None => Box::new(io::BufWriter::new(io::stdout().lock())),
        }))
    }

    fn json<T: Serialize + ?Sized>(&mut self, v: &T) -> Result<(), CliError> {
        serde_json::to_writer(&mut self.0, v).map_err(|e| CliError::Write(e.into()))?;
        self.0.write_all(b"\n")?;
        Ok(())
    }

    fn text(&mut self, s: &str) -> Result<(), CliError> {
        self.0.write_all(s.as_bytes())?;
        if !s.ends_with('\n') {
            self.0.write_all(b"\n")?;
        }
        Ok(())
    }

    fn finish(mut self) -> Result<(), CliError> {
        self.0.flush()?;
        Ok(())
    }
}

fn emit<T: Serialize + ?Sized>(out: &Option<PathBuf>, v: &T) -> Result<(), CliError> {
    let mut sink = Sink::open(out)?;
    sink.json(v)?;
    sink.finish()
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("kprom: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Promote { io, steps } => {
            let t: AnyTableau = read_json(&io.input)?;
            let out = match t {
                AnyTableau::Standard(t) => AnyTableau::Standard(power(&t, steps)),
                AnyTableau::Increasing(t) => AnyTableau::Increasing(power(&t, steps)),
            };
            emit(&io.output, &out)?;
        }
        Command::Orbit { io, max_iter, gromotion } => {
            let t: AnyTableau = read_json(&io.input)?;
            let v = match &t {
                AnyTableau::Standard(t) => orbit(t, max_iter, gromotion, AnyTableau::Standard)?,
                AnyTableau::Increasing(t) => orbit(t, max_iter, gromotion, AnyTableau::Increasing)?,
            };
            emit(&io.output, &v)?;
        }
        Command::Digraph { io, i, format } => {
            let t: AnyTableau = read_json(&io.input)?;
            let ds = match &t {
                AnyTableau::Standard(t) => digraphs_of(t, i)?,
                AnyTableau::Increasing(t) => digraphs_of(t, i)?,
            };
            let mut sink = Sink::open(&io.output)?;
            match (format, i) {
                (Format::Json, Some(_)) => sink.json(&ds[0])?,
                (Format::Json, None) => sink.json(&ds)?,
                (Format::Dot, _) => {
                    for d in &ds {
                        sink.text(&d.to_dot())?;
                    }
                }
            }
            sink.finish()?;
        }
        Command::Reconstruct { io, kind, shape, rows, cols, q } => {
            let ds: Vec<PromotionDigraph> = read_json(&io.input)?;
            let out = match kind {
                ReconstructKind::Standard => {
                    let shape = shape.ok_or_else(|| usage_err("--kind standard needs --shape"))?;
                    let t = reconstruct_standard(&ds, &partition(shape)?).map_err(parse_err)?;
                    AnyTableau::Standard(t)
                }
                ReconstructKind::RectIncreasing => {
                    let (r, c) = rect_dims(shape, rows, cols)?;
                    let q = match (q, ds.first()) {
                        (Some(q), _) => q,
                        (None, Some(d)) => d.n(),
                        (None, None) => return Err(usage_err("--q is needed when there are no digraphs")),
                    };
                    let t = reconstruct_rect_increasing(&ds, r, c, q).map_err(parse_err)?;
                    AnyTableau::Increasing(t)
                }
            };
            emit(&io.output, &out)?;
        }
        Command::Lattice { op } => lattice(op)?,
        Command::Nc { op } => nc(op)?,
        Command::Plabic { op } => plabic(op)?,
        Command::Enumerate { family } => enumerate_family(family)?,
        Command::Verify(args) => return verify(args),
    }
    Ok(EXIT_OK)
}

fn power<T: Promotable>(t: &T, steps: usize) -> T {
    kprom::promotion::promote_power(t, steps)
}

fn orbit<T: Promotable>(
    t: &T,
    max_iter: Option<usize>,
    gromotion: bool,
    wrap: fn(T) -> AnyTableau,
) -> Result<Value, CliError> {
    let bound = max_iter.unwrap_or_else(|| default_order_bound(t.alphabet().size()));
    let period = promotion_order(t, bound).map_err(parse_err)?;
    let steps: Vec<Value> = if gromotion {
        gromotion_orbit(t, period).into_iter().map(gromotion_json(wrap)).collect()
    } else {
        let mut cur = t.clone();
        let mut v = Vec::with_capacity(period);
        for _ in 0..period {
            let next = cur.promote();
            v.push(serde_json::to_value(wrap(cur)).expect("tableau serializes"));
            cur = next;
        }
        v
    };
    Ok(json!({ "period": period, "orbit": steps }))
}

fn gromotion_json<T>(wrap: fn(T) -> AnyTableau) -> impl Fn(Gromotion<T>) -> Value {
    move |g| {
        json!({
            "tableau": wrap(g.tableau),
            "events": g.events,
            "flow_path": g.flow_path,
        })
    }
}

fn digraphs_of<T: Promotable>(t: &T, i: Option<usize>) -> Result<Vec<PromotionDigraph>, CliError> {
    match i {
        Some(i) => Ok(vec![promotion_digraph(t, i).map_err(usage_err)?]),
        None => promotion_digraphs(t).map_err(parse_err),
    }
}

fn rect_dims(
    shape: Option<Shape>,
    rows: Option<usize>,
    cols: Option<usize>,
) -> Result<(usize, usize), CliError> {
    match (shape, rows, cols) {
        (Some(s), None, None) => {
            let p = partition(s)?;
            if !p.is_rectangular() {
                return Err(usage_err(format!("shape {p} is not a rectangle")));
            }
            Ok((p.length(), p.parts()[0]))
        }
        (None, Some(r), Some(c)) => Ok((r, c)),
        _ => Err(usage_err("give either --shape RxC or both --rows and --cols")),
    }
}

fn lattice(op: LatticeOp) -> Result<(), CliError> {
    match op {
        LatticeOp::Word { io, text } => {
            let t: AnyTableau = read_json(&io.input)?;
            let w = t.as_dyn().lattice_word().map_err(parse_err)?;
            let mut sink = Sink::open(&io.output)?;
            if text {
                sink.text(&w.to_string())?;
            } else {
                sink.json(&w)?;
            }
            sink.finish()
        }
        LatticeOp::Tableau { io, word } => {
            let w: LatticeWord = match word {
                Some(s) => s.parse().map_err(parse_err)?,
                None => read_json(&io.input)?,
            };
            emit(&io.output, &from_lattice_word(&w).map_err(parse_err)?)
        }
    }
}

fn nc(op: NcOp) -> Result<(), CliError> {
    match op {
        NcOp::Tograph { io } => {
            let t: StandardTableau = read_json(&io.input)?;
            emit(&io.output, &tograph(&t).map_err(parse_err)?)
        }
        NcOp::TographInverse { io } => {
            let m: NoncrossingMatching = read_json(&io.input)?;
            emit(&io.output, &AnyTableau::Standard(tograph_inverse(&m).map_err(parse_err)?))
        }
        NcOp::Pi { io } => {
            let t: kprom::IncreasingTableau = read_json(&io.input)?;
            emit(&io.output, &pi_bijection(&t).map_err(parse_err)?)
        }
        NcOp::PiInverse { io, cols } => {
            let p: NoncrossingSetPartition = read_json(&io.input)?;
            emit(&io.output, &AnyTableau::Increasing(pi_inverse(&p, cols).map_err(parse_err)?))
        }
        NcOp::Rotate { io } => {
            let p: NoncrossingSetPartition = read_json(&io.input)?;
            emit(&io.output, &rotate_partition(&p))
        }
    }
}

fn read_web(path: &PathBuf) -> Result<PlabicGraph, CliError> {
    read_json(path)
}

fn plabic(op: PlabicOp) -> Result<(), CliError> {
    match op {
        PlabicOp::Validate { io } => {
            let text = read_text(&io.input)?;
            match serde_json::from_str::<PlabicGraph>(&text) {
                Ok(g) => emit(
                    &io.output,
                    &json!({
                        "valid": true,
                        "n": g.boundary_count(),
                        "interior": g.interior_count(),
                        "edges": g.edge_count(),
                    }),
                ),
                Err(e) => {
                    emit(&io.output, &json!({ "valid": false, "error": e.to_string() }))?;
                    Err(parse_err(e))
                }
            }
        }
        PlabicOp::Faces { io } => {
            let g = read_web(&io.input)?;
            emit(&io.output, &g.faces().map_err(parse_err)?)
        }
        PlabicOp::Classify { io } => emit(&io.output, &classify(&read_web(&io.input)?)),
        PlabicOp::Trip { io, i, r, format } => {
            let g = read_web(&io.input)?;
            let t = trip_digraph(&g, i, r).map_err(usage_err)?;
            let mut sink = Sink::open(&io.output)?;
            match format {
                Format::Json => sink.json(&t)?,
                Format::Dot => sink.text(&t.to_digraph().to_dot())?,
            }
            sink.finish()
        }
        PlabicOp::FromPartition { io } => {
            let p: NoncrossingSetPartition = read_json(&io.input)?;
            emit(&io.output, &partition_to_plabic(&p))
        }
        PlabicOp::Rotate { io } => emit(&io.output, &rotate_web(&read_web(&io.input)?)),
    }
}

fn dump<T: Serialize>(out: &Option<PathBuf>, items: impl IntoIterator<Item = T>) -> Result<(), CliError> {
    let mut sink = Sink::open(out)?;
    for x in items {
        sink.json(&x)?;
    }
    sink.finish()
}

fn enumerate_family(family: Family) -> Result<(), CliError> {
    let caps = Caps::from_env();
    match family {
        Family::Partitions { n, out } => dump(&out.output, enumerate::partitions_of(n)),
        Family::Syt { shape, n, out } => {
            let shapes = match (shape, n) {
                (Some(s), None) => vec![partition(s)?],
                (None, Some(n)) => enumerate::partitions_of(n),
                _ => return Err(usage_err("give exactly one of --shape and --n")),
            };
            let mut sink = Sink::open(&out.output)?;
            for s in &shapes {
                for t in enumerate::enumerate_syt_with(s, &caps).map_err(usage_err)? {
                    sink.json(&t)?;
                }
            }
            sink.finish()
        }
        Family::Increasing { shape, q, packed, out } => {
            let it = enumerate::enumerate_increasing_with(&partition(shape)?, q, packed, &caps)
                .map_err(usage_err)?;
            dump(&out.output, it)
        }
        Family::NcPartitions { q, out } => {
            dump(&out.output, enumerate::enumerate_nc_partitions_with(q, &caps).map_err(usage_err)?)
        }
        Family::NcMatchings { n, out } => {
            dump(&out.output, enumerate::enumerate_nc_matchings_with(n, &caps).map_err(usage_err)?)
        }
        Family::Flamingo { n, k, max_interior, out } => {
            let webs = enumerate::enumerate_flamingo_with(n, k, max_interior, &caps).map_err(usage_err)?;
            dump(&out.output, webs)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<i32, CliError> {
    if args.list {
        let mut sink = Sink::open(&args.out.output)?;
        for id in CHECK_IDS {
            sink.text(id)?;
        }
        sink.finish()?;
        return Ok(EXIT_OK);
    }
    let mut cfg: SuiteConfig = match &args.config {
        Some(p) => read_json(p)?,
        None => SuiteConfig::default(),
    };
    args.bounds.apply(&mut cfg);
    let ids: Vec<&str> = if args.all {
        CHECK_IDS.to_vec()
    } else if args.ids.is_empty() {
        return Err(usage_err("name at least one check id, or pass --all (see --list)"));
    } else {
        args.ids.iter().map(String::as_str).collect()
    };
    if let Some(bad) = ids.iter().find(|id| !CHECK_IDS.contains(id)) {
        return Err(usage_err(HarnessError::UnknownCheck(bad.to_string())));
    }
    let reports = harness::run_suite(&ids, &cfg).map_err(|e| match e {
        HarnessError::Enumerate(_) | HarnessError::UnknownCheck(_) => usage_err(e),
        other => parse_err(other),
    })?;
    let mut sink = Sink::open(&args.out.output)?;
    for r in &reports {
        let r = if args.no_timing { r.clone().without_timing() } else { r.clone() };
        sink.json(&r)?;
        eprintln!(
            "{}: {} ({} instances, {} failures)",
            r.check_id,
            serde_json::to_value(r.status).expect("status serializes").as_str().unwrap_or("?"),
            r.instances_checked,
            r.failures.len()
        );
    }
    sink.finish()?;
    Ok(harness::exit_code(&reports))
}
