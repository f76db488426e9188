mod cache;
mod report;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;
use std::time::Instant;

use alphacrit_core::census::graph6_lines;
use alphacrit_core::critical::enumerate_maximal_alpha_minus_one;
use alphacrit_core::verify::{self, Suite, SuiteReport, DEFAULT_SEED};
use alphacrit_core::{
    alpha, census, check_basic, duplicate_vertex, edge_vertex_compose, is_alpha_critical,
    odd_subdivide, one_join, parse_graph6, split_vertex, to_graph6, EVPartition, EdgeRef, Error,
    Filter, Graph, JoinQuadruple, SplitPartition, VertexSet,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cache::Cache;
use report::Report;

/// Largest order `enumerate` accepts.
const ENUMERATE_CAP: usize = 8;

#[derive(Parser)]
#[command(
    name = "alphacrit",
    version,
    about = "Stability numbers, α-critical graphs and their compositions"
)]
struct Cli {
    /// Print one JSON report per line instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report `timing_ms` as null so output is byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads for parallel sweeps (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stability number, a lexicographically least maximum stable set and
    /// edge criticality. Reads graph6 lines from stdin when no graph is given.
    Alpha { graphs: Vec<String> },
    /// Splitting, odd-subdivision and duplication reducibility of connected
    /// α-critical graphs.
    Classify { graphs: Vec<String> },
    /// Maximal induced subgraphs with stability α − 1 (n ≤ 14).
    Maximal { graphs: Vec<String> },
    /// Build a graph with one of the composition operations.
    Compose {
        /// Also report the stability numbers of the operands and the result.
        #[arg(long, global = true)]
        alpha: bool,
        #[command(subcommand)]
        op: ComposeOp,
    },
    /// Run a property suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Size bound of the suite (meaning depends on the suite).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List graphs up to isomorphism, one per line.
    Enumerate {
        /// Graphs on exactly this many vertices.
        #[arg(long, conflicts_with = "up_to", required_unless_present = "up_to")]
        n: Option<usize>,
        /// Graphs on at most this many vertices.
        #[arg(long)]
        up_to: Option<usize>,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Neither read nor write the census cache.
        #[arg(long)]
        no_cache: bool,
    },
}

#[derive(Subcommand)]
enum ComposeOp {
    /// Replace edge `u,v` by the path u, u′, v′, v.
    Subdivide { graph: String, edge: String },
    /// Split vertex `v`; `side` lists the neighbours that go to v′, the rest go to v″.
    Split {
        graph: String,
        vertex: usize,
        side: String,
    },
    /// Add a closed twin of `vertex`.
    Duplicate { graph: String, vertex: usize },
    /// Edge-vertex composition; `side` lists the neighbours of `vertex` in H
    /// joined to the smaller endpoint of `edge`, the rest join the larger.
    Ev {
        g: String,
        edge: String,
        h: String,
        vertex: usize,
        side: String,
    },
    /// 1-join; `g0` and `h0` are vertex lists (`-` or empty for none).
    Join {
        g: String,
        g0: String,
        h: String,
        h0: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    AlphaCritical,
    Basic,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Filter {
        match f {
            FilterArg::All => Filter::All,
            FilterArg::AlphaCritical => Filter::AlphaCritical,
            FilterArg::Basic => Filter::Basic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(Suite::name).collect();
        format!("unknown suite {s:?}; expected one of {}", names.join(", "))
    })
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Argument(String),
    Input(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::MalformedGraph6(_)) | Failure::Input(_) => 2,
            Failure::Core(Error::CapacityExceeded(_)) => 3,
            Failure::Core(Error::TooLargeForEnumeration { .. }) => 5,
            Failure::Core(_) | Failure::Argument(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Argument(m) => write!(f, "{m}"),
            Failure::Input(e) => write!(f, "reading stdin: {e}"),
        }
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx {
    json: bool,
    timing: bool,
    out: io::StdoutLock<'static>,
}

impl Ctx {
    fn emit(
        &mut self,
        command: &str,
        inputs: Vec<String>,
        result: Value,
        started: Instant,
        text: String,
    ) {
        let ms = self.timing.then(|| started.elapsed().as_secs_f64() * 1e3);
        let line = if self.json {
            Report::new(command, inputs, result, ms).to_line()
        } else {
            text
        };
        // Broken pipes are not worth a panic.
        let _ = writeln!(self.out, "{line}");
    }
}

fn graph(s: &str) -> Result<Graph, Failure> {
    Ok(parse_graph6(s)?)
}

/// Positional graphs, or stdin lines when there are none.
fn inputs(args: Vec<String>) -> Result<Vec<String>, Failure> {
    if !args.is_empty() {
        return Ok(args);
    }
    let mut out = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line.map_err(Failure::Input)?;
        let t = line.trim();
        if !t.is_empty() {
            out.push(t.to_owned());
        }
    }
    Ok(out)
}

fn vertex_list(s: &str) -> Result<Vec<usize>, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Argument(format!("bad vertex {t:?} in {s:?}")))
        })
        .collect()
}

fn vertex_set(g: &Graph, s: &str) -> Result<VertexSet, Failure> {
    Ok(VertexSet::from_vertices(g.n(), vertex_list(s)?)?)
}

fn edge(g: &Graph, s: &str) -> Result<EdgeRef, Failure> {
    let [u, v] = vertex_list(s)?[..] else {
        return Err(Failure::Argument(format!(
            "expected an edge u,v, got {s:?}"
        )));
    };
    let e = EdgeRef::new(u, v)?;
    g.check_edge(&e)?;
    Ok(e)
}

fn fmt_set(s: &VertexSet) -> String {
    let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn cmd_alpha(ctx: &mut Ctx, graphs: Vec<String>) -> Outcome {
    for s in inputs(graphs)? {
        let t = Instant::now();
        let g = graph(&s)?;
        let st = alpha(&g);
        let cr = is_alpha_critical(&g);
        let result = json!({
            "n": g.n(),
            "edges": g.edge_count(),
            "alpha": st.alpha,
            "witness": st.witness,
            "num_maximum": st.num_maximum,
            "defect": cr.defect,
            "tau": cr.tau,
            "is_alpha_critical": cr.is_alpha_critical,
            "critical_edges": cr.critical_edges,
        });
        let text = format!(
            "{s}: n={} m={} alpha={} witness={} defect={} tau={} alpha-critical={} critical edges {}/{}",
            g.n(),
            g.edge_count(),
            st.alpha,
            fmt_set(&st.witness),
            cr.defect,
            cr.tau,
            cr.is_alpha_critical,
            cr.critical_edges.len(),
            g.edge_count()
        );
        ctx.emit("alpha", vec![s], result, t, text);
    }
    Ok(true)
}

fn cmd_classify(ctx: &mut Ctx, graphs: Vec<String>) -> Outcome {
    for s in inputs(graphs)? {
        let t = Instant::now();
        let g = graph(&s)?;
        let r = check_basic(&g)?;
        let text = format!(
            "{s}: splitting-reducible={} odd-subdivision-reducible={} duplication-reducible={} basic={}",
            r.splitting_reducible, r.odd_subdivision_reducible, r.duplication_reducible, r.is_basic
        );
        let result = serde_json::to_value(&r).expect("report serializes");
        ctx.emit("classify", vec![s], result, t, text);
    }
    Ok(true)
}

fn cmd_maximal(ctx: &mut Ctx, graphs: Vec<String>) -> Outcome {
    for s in inputs(graphs)? {
        let t = Instant::now();
        let g = graph(&s)?;
        let entries = enumerate_maximal_alpha_minus_one(&g)?;
        let a = alphacrit_core::alpha_number(&g);
        let non_canonical = entries.iter().filter(|(_, c)| !c.is_canonical()).count();
        let result = json!({
            "alpha": a,
            "non_canonical": non_canonical,
            "entries": entries
                .iter()
                .map(|(set, class)| json!({ "vertices": set, "class": class }))
                .collect::<Vec<_>>(),
        });
        let mut text = format!(
            "{s}: alpha={a}, {} maximal sets, {non_canonical} non-canonical",
            entries.len()
        );
        for (set, class) in &entries {
            text.push_str(&format!("\n  {} {class}", fmt_set(set)));
        }
        ctx.emit("maximal", vec![s], result, t, text);
    }
    Ok(true)
}

fn cmd_compose(ctx: &mut Ctx, with_alpha: bool, op: ComposeOp) -> Outcome {
    let t = Instant::now();
    let (name, operands, inputs, result) = match op {
        ComposeOp::Subdivide {
            graph: gs,
            edge: es,
        } => {
            let g = graph(&gs)?;
            let e = edge(&g, &es)?;
            (
                "subdivide",
                vec![g.clone()],
                vec![gs],
                odd_subdivide(&g, &e)?,
            )
        }
        ComposeOp::Split {
            graph: gs,
            vertex,
            side,
        } => {
            let g = graph(&gs)?;
            g.check_vertex(vertex)?;
            let prime = vertex_set(&g, &side)?;
            let p = SplitPartition {
                n_vprime: prime,
                n_vdoubleprime: g.neighbors(vertex).difference(&prime),
            };
            (
                "split",
                vec![g.clone()],
                vec![gs],
                split_vertex(&g, vertex, &p)?,
            )
        }
        ComposeOp::Duplicate { graph: gs, vertex } => {
            let g = graph(&gs)?;
            (
                "duplicate",
                vec![g.clone()],
                vec![gs],
                duplicate_vertex(&g, vertex)?,
            )
        }
        ComposeOp::Ev {
            g: gs,
            edge: es,
            h: hs,
            vertex,
            side,
        } => {
            let (g, h) = (graph(&gs)?, graph(&hs)?);
            let e = edge(&g, &es)?;
            h.check_vertex(vertex)?;
            let u1 = vertex_set(&h, &side)?;
            let p = EVPartition {
                u1,
                u2: h.neighbors(vertex).difference(&u1),
            };
            let w = edge_vertex_compose(&g, &e, &h, vertex, &p)?;
            ("ev", vec![g, h], vec![gs, hs], w)
        }
        ComposeOp::Join {
            g: gs,
            g0,
            h: hs,
            h0,
        } => {
            let (g, h) = (graph(&gs)?, graph(&hs)?);
            let (g0, h0) = (vertex_set(&g, &g0)?, vertex_set(&h, &h0)?);
            let q = JoinQuadruple::new(g.clone(), g0, h.clone(), h0)?;
            ("join", vec![g, h], vec![gs, hs], one_join(&q)?)
        }
    };
    let n_in: usize = operands.iter().map(Graph::n).sum();
    let m_in: usize = operands.iter().map(Graph::edge_count).sum();
    let g6 = to_graph6(&result);
    let labels: Vec<String> = (0..result.n()).map(|v| result.label(v)).collect();
    let mut out = json!({
        "graph6": g6,
        "n": result.n(),
        "edges": result.edge_count(),
        "vertices_added": result.n() as i64 - n_in as i64,
        "edges_added": result.edge_count() as i64 - m_in as i64,
        "labels": labels,
    });
    let mut text = format!("{g6}  n={} m={}", result.n(), result.edge_count());
    if with_alpha {
        let before: Vec<usize> = operands.iter().map(alphacrit_core::alpha_number).collect();
        let after = alphacrit_core::alpha_number(&result);
        out["alpha_before"] = json!(before);
        out["alpha_after"] = json!(after);
        text.push_str(&format!(" alpha {before:?} -> {after}"));
    }
    ctx.emit(&format!("compose {name}"), inputs, out, t, text);
    Ok(true)
}

fn suite_text(r: &SuiteReport) -> String {
    let mut s = format!(
        "{} (n={}, instances={}, seed={}): {}",
        r.suite,
        r.params.n,
        r.params.instances,
        r.params.seed,
        if r.passed { "PASS" } else { "FAIL" }
    );
    for c in &r.checks {
        let tag = match (c.passed, c.informational) {
            (true, _) => "ok  ",
            (false, true) => "info",
            (false, false) => "FAIL",
        };
        s.push_str(&format!(
            "\n  {tag} {} ({} of {} failing)",
            c.name, c.failures, c.instances
        ));
        for x in &c.counterexamples {
            s.push_str(&format!("\n       {} {}", x.graphs.join(" "), x.detail));
        }
    }
    for l in &r.listing {
        s.push_str(&format!(
            "\n  {:<12} n={} m={} alpha={} defect={} max-degree={}",
            l.graph6, l.n, l.edges, l.alpha, l.defect, l.max_degree
        ));
    }
    s
}

fn cmd_verify(
    ctx: &mut Ctx,
    suite: Suite,
    n: Option<usize>,
    instances: Option<usize>,
    seed: u64,
) -> Outcome {
    let t = Instant::now();
    let r = verify::run(suite, n, instances, seed)?;
    let passed = r.passed;
    let text = suite_text(&r);
    let result = serde_json::to_value(&r).expect("report serializes");
    ctx.emit("verify", Vec::new(), result, t, text);
    Ok(passed)
}

fn census_cached(
    n: usize,
    connected: bool,
    filter: Filter,
    use_cache: bool,
) -> Result<Vec<Graph>, Failure> {
    let cache = use_cache.then(Cache::from_env).flatten();
    let key = Cache::key(n, filter, connected);
    if let Some(hit) = cache.as_ref().and_then(|c| c.load(&key)) {
        return Ok(hit);
    }
    let gs = census(n, connected, filter)?;
    if let Some(c) = &cache {
        c.store(&key, &graph6_lines(&gs));
    }
    Ok(gs)
}

struct EnumerateArgs {
    orders: std::ops::RangeInclusive<usize>,
    connected: bool,
    filter: Filter,
    format: Format,
    use_cache: bool,
}

fn cmd_enumerate(ctx: &mut Ctx, a: EnumerateArgs) -> Outcome {
    let top = *a.orders.end();
    if top > ENUMERATE_CAP {
        return Err(Error::TooLargeForEnumeration {
            n: top,
            cap: ENUMERATE_CAP,
        }
        .into());
    }
    let t = Instant::now();
    for k in a.orders {
        for g in census_cached(k, a.connected, a.filter, a.use_cache)? {
            let g6 = to_graph6(&g);
            if a.format == Format::Graph6 {
                let _ = writeln!(ctx.out, "{g6}");
                continue;
            }
            let cr = is_alpha_critical(&g);
            let result = json!({
                "graph6": g6,
                "n": g.n(),
                "edges": g.edge_count(),
                "alpha": cr.alpha,
                "defect": cr.defect,
                "is_alpha_critical": cr.is_alpha_critical,
            });
            let ms = ctx.timing.then(|| t.elapsed().as_secs_f64() * 1e3);
            let _ = writeln!(
                ctx.out,
                "{}",
                Report::new("enumerate", Vec::new(), result, ms).to_line()
            );
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::Argument(e.to_string()))?;
    }
    let mut ctx = Ctx {
        json: cli.json,
        timing: !cli.no_timing,
        out: io::stdout().lock(),
    };
    match cli.command {
        Command::Alpha { graphs } => cmd_alpha(&mut ctx, graphs),
        Command::Classify { graphs } => cmd_classify(&mut ctx, graphs),
        Command::Maximal { graphs } => cmd_maximal(&mut ctx, graphs),
        Command::Compose { alpha, op } => cmd_compose(&mut ctx, alpha, op),
        Command::Verify {
            suite,
            n,
            instances,
            seed,
        } => cmd_verify(&mut ctx, suite, n, instances, seed),
        Command::Enumerate {
            n,
            up_to,
            connected,
            filter,
            format,
            no_cache,
        } => {
            let orders = match (n, up_to) {
                (Some(n), _) => n..=n,
                (None, Some(m)) => 0..=m,
                (None, None) => unreachable!("clap requires one of --n, --up-to"),
            };
            let args = EnumerateArgs {
                orders,
                connected,
                filter: filter.into(),
                format,
                use_cache: !no_cache,
            };
            cmd_enumerate(&mut ctx, args)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 4 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("alphacrit: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
