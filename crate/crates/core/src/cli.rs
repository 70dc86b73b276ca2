//! The command-line surface. [`run`] takes the arguments and two writers and
//! returns the exit code, so the binary is a one-liner and tests can drive it
//! in-process.
//!
//! Exit codes: 0 on success, 1 when the mathematics says no (no pushout
//! complement, a law fails, objects that do not compose), 2 for usage,
//! parse and validation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::cospan::{compose_cospans, iso_class_witness, vcompose, hcompose, OpenGraph};
use crate::graph::{iso_search, pullback, pushout, FinGraph, GraphHom};
use crate::io::dot::workspace_to_dot;
use crate::io::{IoError, Kind, LoadOptions, StoredProduction, Workspace};
use crate::laws::{
    adhesive_suite, bool_counterexample, coherence_suite, random_interchange_suite,
    set_counterexample, SuiteConfig, SuiteReport,
};
use crate::rewrite::{
    chain_twocell, derivation_to_twocell, derive, find_matches, gluing_condition, interface_matches,
    io_derive, language, InterfaceProduction, IoDerivation,
};

#[derive(Debug, Parser)]
#[command(name = "cospan-rewrite", version, about = "Open graphs, their 2-cells, and double-pushout rewriting")]
struct Cli {
    /// Workspace file holding the named objects.
    #[arg(short, long, global = true, default_value = "workspace.json")]
    workspace: PathBuf,
    /// Accept 2-cells with non-monic legs when loading.
    #[arg(long, global = true)]
    allow_nonmonic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graphs and their morphisms.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Open graphs.
    #[command(subcommand)]
    Cospan(CospanCmd),
    /// 2-cells between open graphs.
    #[command(subcommand)]
    Twocell(TwoCellCmd),
    /// Randomized law checks and the fixed counterexamples.
    #[command(subcommand)]
    Laws(LawsCmd),
    /// Double-pushout rewriting.
    #[command(subcommand)]
    Rewrite(RewriteCmd),
    /// Rendering.
    #[command(subcommand)]
    Export(ExportCmd),
}

#[derive(Debug, Subcommand)]
enum GraphCmd {
    /// Load and check the workspace, or one object in it.
    Validate { name: Option<String> },
    /// Search for an isomorphism between two graphs or two open graphs.
    Iso { a: String, b: String },
    /// Pushout of two morphisms out of the same graph.
    Pushout {
        f: String,
        g: String,
        /// Store the object and legs under this name.
        #[arg(long)]
        out: Option<String>,
    },
    /// Pullback of two morphisms into the same graph.
    Pullback {
        f: String,
        g: String,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum CospanCmd {
    /// Glue two open graphs along the shared foot.
    Compose {
        a: String,
        b: String,
        #[arg(long)]
        out: String,
    },
}

#[derive(Debug, Subcommand)]
enum TwoCellCmd {
    /// Vertical composite: the first cell, then the second below it.
    Vcomp {
        a: String,
        b: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Horizontal composite: the first cell, then the second beside it.
    Hcomp {
        a: String,
        b: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Compare two 2-cells up to isomorphism of their middles.
    Isoeq { a: String, b: String },
}

#[derive(Debug, Args)]
struct SuiteArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    cases: usize,
    /// Node bound for generated apexes.
    #[arg(long, default_value_t = 4)]
    max_size: usize,
    /// Print the machine-readable report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum LawsCmd {
    /// Interchange of vertical and horizontal composition.
    Interchange(SuiteArgs),
    /// Pushouts along monos and the cube property.
    Adhesive(SuiteArgs),
    /// Pentagon and triangle identities.
    Coherence(SuiteArgs),
    /// The fixed counterexamples to interchange outside graphs.
    Counterexample {
        #[arg(value_enum)]
        which: Counterexample,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum Counterexample {
    Set,
    Bool,
}

#[derive(Debug, Subcommand)]
enum RewriteCmd {
    /// List the matches of a production's left side.
    Match {
        /// Workspace file, overriding --workspace.
        file: Option<PathBuf>,
        #[arg(long)]
        production: String,
        /// Graph or open graph to match into.
        #[arg(long)]
        graph: String,
        /// Only injective matches.
        #[arg(long)]
        monic: bool,
        /// Store the matches as PREFIX0, PREFIX1, ...
        #[arg(long)]
        out: Option<String>,
    },
    /// Rewrite along a stored match.
    Apply {
        file: Option<PathBuf>,
        #[arg(long)]
        production: String,
        #[arg(long = "match")]
        matching: String,
        /// Open graph whose apex is the match target; found automatically
        /// when exactly one fits.
        #[arg(long)]
        graph: Option<String>,
        /// Store the result, and its 2-cell as NAME.cell for open graphs.
        #[arg(long)]
        out: Option<String>,
    },
    /// Apply productions in turn, each at its first match, and compose the
    /// steps into one 2-cell.
    DeriveChain {
        file: Option<PathBuf>,
        #[arg(long)]
        graph: String,
        #[arg(long = "production", required = true)]
        productions: Vec<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Open graphs derivable from a grammar's start graphs.
    Language {
        file: Option<PathBuf>,
        #[arg(long)]
        grammar: String,
        #[arg(long)]
        depth: usize,
        /// Node bound on derived graphs.
        #[arg(long)]
        size_cap: usize,
        /// Store the members as PREFIX0, PREFIX1, ...
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum ExportCmd {
    /// Graphviz text for a named object.
    Dot {
        name: String,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Exit 1.
    Domain(String),
    /// Exit 2.
    Usage(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

type Outcome = Result<(), Failure>;

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let mut ctx = Context {
        path: cli.workspace.clone(),
        options: LoadOptions {
            allow_nonmonic: cli.allow_nonmonic,
        },
        allow_nonmonic: cli.allow_nonmonic,
        out,
    };
    match ctx.dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

struct Context<'a> {
    path: PathBuf,
    options: LoadOptions,
    allow_nonmonic: bool,
    out: &'a mut dyn Write,
}

fn graph_text(g: &FinGraph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

fn map_text(h: &GraphHom) -> String {
    format!("nodes={:?} edges={:?}", h.node_map(), h.edge_map())
}

fn open_graph_text(o: &OpenGraph) -> String {
    format!(
        "apex={} in={:?} out={:?}",
        graph_text(o.apex()),
        o.in_leg().node_map(),
        o.out_leg().node_map()
    )
}

impl Context<'_> {
    fn say(&mut self, line: impl AsRef<str>) -> Outcome {
        writeln!(self.out, "{}", line.as_ref()).map_err(|e| Failure::Usage(e.to_string()))
    }

    fn load(&self, file: Option<&Path>) -> Result<(Workspace, PathBuf), Failure> {
        let path = file.unwrap_or(&self.path).to_path_buf();
        Ok((Workspace::load(&path, self.options)?, path))
    }

    fn dispatch(&mut self, command: Command) -> Outcome {
        match command {
            Command::Graph(c) => self.graph(c),
            Command::Cospan(c) => self.cospan(c),
            Command::Twocell(c) => self.twocell(c),
            Command::Laws(c) => self.laws(c),
            Command::Rewrite(c) => self.rewrite(c),
            Command::Export(ExportCmd::Dot { name, out }) => {
                let (ws, _) = self.load(None)?;
                let text = workspace_to_dot(&ws, &name)?;
                match out {
                    Some(path) => std::fs::write(&path, text).map_err(|e| {
                        Failure::Usage(format!("cannot write {}: {e}", path.display()))
                    }),
                    None => write!(self.out, "{text}").map_err(|e| Failure::Usage(e.to_string())),
                }
            }
        }
    }

    fn graph(&mut self, c: GraphCmd) -> Outcome {
        let (mut ws, path) = self.load(None)?;
        match c {
            GraphCmd::Validate { name: None } => {
                let names = ws.names();
                for (name, kind) in &names {
                    self.say(format!("{name}: {}", kind.label()))?;
                }
                self.say(format!("ok: {} objects", names.len()))
            }
            GraphCmd::Validate { name: Some(name) } => {
                let kind = ws.kind_of(&name).ok_or(IoError::Unknown {
                    kind: "object",
                    name: name.clone(),
                })?;
                self.say(format!("ok: {name} is a valid {}", kind.label()))
            }
            GraphCmd::Iso { a, b } => {
                let found = match (ws.kind_of(&a), ws.kind_of(&b)) {
                    (Some(Kind::OpenGraph), Some(Kind::OpenGraph)) => {
                        ws.open_graph(&a)?.iso_to(&ws.open_graph(&b)?).map_err(domain)?
                    }
                    _ => iso_search(&ws.graph(&a)?, &ws.graph(&b)?).map_err(domain)?,
                };
                match found {
                    Some(h) => self.say(format!("isomorphic: {}", map_text(&h))),
                    None => self.say("not isomorphic"),
                }
            }
            GraphCmd::Pushout { f, g, out } => {
                let (f, g) = (ws.hom(&f)?, ws.hom(&g)?);
                let w = pushout(&f, &g).map_err(domain)?;
                self.say(format!("object: {}", graph_text(w.object())))?;
                self.say(format!("left leg: {}", map_text(w.leg(0))))?;
                self.say(format!("right leg: {}", map_text(w.leg(1))))?;
                if let Some(name) = out {
                    ws.insert_graph(&name, w.object())?;
                    ws.insert_hom(&format!("{name}.left"), w.leg(0))?;
                    ws.insert_hom(&format!("{name}.right"), w.leg(1))?;
                    ws.save(&path)?;
                }
                Ok(())
            }
            GraphCmd::Pullback { f, g, out } => {
                let (f, g) = (ws.hom(&f)?, ws.hom(&g)?);
                let w = pullback(&f, &g).map_err(domain)?;
                self.say(format!("object: {}", graph_text(w.object())))?;
                self.say(format!("left leg: {}", map_text(w.leg(0))))?;
                self.say(format!("right leg: {}", map_text(w.leg(1))))?;
                if let Some(name) = out {
                    ws.insert_graph(&name, w.object())?;
                    ws.insert_hom(&format!("{name}.left"), w.leg(0))?;
                    ws.insert_hom(&format!("{name}.right"), w.leg(1))?;
                    ws.save(&path)?;
                }
                Ok(())
            }
        }
    }

    fn cospan(&mut self, c: CospanCmd) -> Outcome {
        let (mut ws, path) = self.load(None)?;
        let CospanCmd::Compose { a, b, out } = c;
        let composite = compose_cospans(&ws.open_graph(&a)?, &ws.open_graph(&b)?).map_err(domain)?;
        self.say(open_graph_text(&composite))?;
        ws.insert_open_graph(&out, &composite)?;
        ws.save(&path)?;
        Ok(())
    }

    fn twocell(&mut self, c: TwoCellCmd) -> Outcome {
        let (mut ws, path) = self.load(None)?;
        let (cell, out) = match c {
            TwoCellCmd::Isoeq { a, b } => {
                return match iso_class_witness(&ws.two_cell(&a)?, &ws.two_cell(&b)?).map_err(domain)? {
                    Some(h) => self.say(format!("equal: {}", map_text(&h))),
                    None => self.say("not equal"),
                };
            }
            TwoCellCmd::Vcomp { a, b, out } => {
                (vcompose(&ws.two_cell(&a)?, &ws.two_cell(&b)?).map_err(domain)?, out)
            }
            TwoCellCmd::Hcomp { a, b, out } => {
                (hcompose(&ws.two_cell(&a)?, &ws.two_cell(&b)?).map_err(domain)?, out)
            }
        };
        self.say(format!("middle: {}", graph_text(cell.middle())))?;
        self.say(format!("up: {}", map_text(cell.up_leg())))?;
        self.say(format!("down: {}", map_text(cell.down_leg())))?;
        self.say(format!(
            "monic: {} invertible: {}",
            cell.is_monic(),
            cell.is_invertible()
        ))?;
        if let Some(name) = out {
            ws.insert_two_cell(&name, &cell)?;
            ws.save(&path)?;
        }
        Ok(())
    }

    fn laws(&mut self, c: LawsCmd) -> Outcome {
        let (args, suite): (SuiteArgs, fn(&SuiteConfig) -> SuiteReport) = match c {
            LawsCmd::Counterexample { which: Counterexample::Set } => {
                let r = set_counterexample();
                return self.say(format!("lhs={} rhs={}", r.lhs_size, r.rhs_size));
            }
            LawsCmd::Counterexample { which: Counterexample::Bool } => {
                let r = bool_counterexample();
                return self.say(format!("lhs={} rhs={}", r.lhs, r.rhs));
            }
            LawsCmd::Interchange(a) => (a, random_interchange_suite),
            LawsCmd::Adhesive(a) => (a, adhesive_suite),
            LawsCmd::Coherence(a) => (a, coherence_suite),
        };
        let mut cfg = SuiteConfig::new(args.seed, args.cases, args.max_size);
        cfg.allow_nonmonic = self.allow_nonmonic;
        let report = suite(&cfg);
        if args.json {
            self.say(report.to_json())?;
        } else {
            self.say(report.to_string())?;
        }
        if report.all_passed() {
            Ok(())
        } else {
            Err(Failure::Domain(format!("{} check(s) failed", report.failures.len())))
        }
    }

    fn rewrite(&mut self, c: RewriteCmd) -> Outcome {
        match c {
            RewriteCmd::Match {
                file,
                production,
                graph,
                monic,
                out,
            } => {
                let (mut ws, path) = self.load(file.as_deref())?;
                let p = ws.production(&production)?;
                let matches = match (ws.kind_of(&graph), &p) {
                    (Some(Kind::OpenGraph), StoredProduction::WithInterface(ip)) => {
                        interface_matches(ip, &ws.open_graph(&graph)?, monic).map_err(domain)?
                    }
                    (Some(Kind::OpenGraph), StoredProduction::Plain(p)) => {
                        find_matches(p.left(), ws.open_graph(&graph)?.apex(), monic).map_err(domain)?
                    }
                    _ => find_matches(p.base().left(), &ws.graph(&graph)?, monic).map_err(domain)?,
                };
                for (i, m) in matches.iter().enumerate() {
                    let verdict = match gluing_condition(p.base().l(), m) {
                        Ok(()) => "applicable".to_string(),
                        Err(v) => format!("not applicable: {v}"),
                    };
                    self.say(format!("match {i}: {} ({verdict})", map_text(m)))?;
                }
                self.say(format!("{} match(es)", matches.len()))?;
                if let Some(prefix) = out {
                    for (i, m) in matches.iter().enumerate() {
                        ws.insert_hom(&format!("{prefix}{i}"), m)?;
                    }
                    ws.save(&path)?;
                }
                Ok(())
            }
            RewriteCmd::Apply {
                file,
                production,
                matching,
                graph,
                out,
            } => {
                let (mut ws, path) = self.load(file.as_deref())?;
                let p = ws.production(&production)?;
                let m = ws.hom(&matching)?;
                if let Err(v) = gluing_condition(p.base().l(), &m) {
                    return Err(Failure::Domain(format!("no pushout complement: {v}")));
                }
                let open = match (&p, graph) {
                    (StoredProduction::WithInterface(ip), Some(name)) => Some((ip, ws.open_graph(&name)?)),
                    (StoredProduction::WithInterface(ip), None) => {
                        open_graph_on(&ws, m.cod())?.map(|o| (ip, o))
                    }
                    (StoredProduction::Plain(_), Some(_)) => {
                        return Err(Failure::Usage(format!(
                            "production {production:?} has no interface to carry the feet of --graph"
                        )))
                    }
                    (StoredProduction::Plain(_), None) => None,
                };
                match open {
                    Some((ip, g)) => {
                        let d = io_derive(ip, &m, &g)
                            .map_err(domain)?
                            .ok_or_else(|| Failure::Domain("no pushout complement".into()))?;
                        let cell = derivation_to_twocell(&d).map_err(domain)?;
                        self.report_step(&d)?;
                        if let Some(name) = out {
                            ws.insert_open_graph(&name, &d.result)?;
                            ws.insert_two_cell(&format!("{name}.cell"), &cell)?;
                            ws.save(&path)?;
                        }
                    }
                    None => {
                        let d = derive(p.base(), &m)
                            .map_err(domain)?
                            .ok_or_else(|| Failure::Domain("no pushout complement".into()))?;
                        self.say(format!("context: {}", graph_text(d.context())))?;
                        self.say(format!("result: {}", graph_text(d.result())))?;
                        if let Some(name) = out {
                            ws.insert_graph(&name, d.result())?;
                            ws.save(&path)?;
                        }
                    }
                }
                Ok(())
            }
            RewriteCmd::DeriveChain {
                file,
                graph,
                productions,
                out,
            } => {
                let (mut ws, path) = self.load(file.as_deref())?;
                let mut current = ws.open_graph(&graph)?;
                let mut steps = Vec::new();
                for name in &productions {
                    let ip = interface_production(&ws, name)?;
                    let d = first_derivation(&ip, &current)?.ok_or_else(|| {
                        Failure::Domain(format!("production {name:?} does not apply at step {}", steps.len()))
                    })?;
                    self.say(format!("step {} ({name}):", steps.len()))?;
                    self.report_step(&d)?;
                    current = d.result.clone();
                    steps.push(d);
                }
                let cell = chain_twocell(&steps).map_err(domain)?;
                self.say(format!("composite middle: {}", graph_text(cell.middle())))?;
                if let Some(name) = out {
                    ws.insert_open_graph(&name, &current)?;
                    ws.insert_two_cell(&format!("{name}.cell"), &cell)?;
                    ws.save(&path)?;
                }
                Ok(())
            }
            RewriteCmd::Language {
                file,
                grammar,
                depth,
                size_cap,
                out,
            } => {
                let (mut ws, path) = self.load(file.as_deref())?;
                let g = ws.grammar(&grammar)?;
                let members = language(&g, depth, size_cap).map_err(domain)?;
                for (i, m) in members.iter().enumerate() {
                    self.say(format!("{i}: {}", open_graph_text(m)))?;
                }
                self.say(format!("{} graph(s) up to isomorphism", members.len()))?;
                if let Some(prefix) = out {
                    for (i, m) in members.iter().enumerate() {
                        ws.insert_open_graph(&format!("{prefix}{i}"), m)?;
                    }
                    ws.save(&path)?;
                }
                Ok(())
            }
        }
    }

    fn report_step(&mut self, d: &IoDerivation) -> Outcome {
        self.say(format!("context: {}", graph_text(d.derivation.context())))?;
        self.say(format!("result: {}", graph_text(d.result.apex())))?;
        self.say(format!(
            "feet: in={:?} out={:?}",
            d.result.in_leg().node_map(),
            d.result.out_leg().node_map()
        ))
    }
}

/// The only stored open graph with apex `apex`, if there is exactly one.
fn open_graph_on(ws: &Workspace, apex: &FinGraph) -> Result<Option<OpenGraph>, Failure> {
    let mut found = Vec::new();
    for (name, kind) in ws.names() {
        if kind == Kind::OpenGraph {
            let o = ws.open_graph(&name)?;
            if o.apex() == apex {
                found.push(o);
            }
        }
    }
    Ok(if found.len() == 1 { found.pop() } else { None })
}

fn interface_production(ws: &Workspace, name: &str) -> Result<InterfaceProduction, Failure> {
    match ws.production(name)? {
        StoredProduction::WithInterface(ip) => Ok(ip),
        StoredProduction::Plain(_) => Err(Failure::Usage(format!("production {name:?} has no interface"))),
    }
}

fn first_derivation(ip: &InterfaceProduction, g: &OpenGraph) -> Result<Option<IoDerivation>, Failure> {
    for m in interface_matches(ip, g, false).map_err(domain)? {
        if let Some(d) = io_derive(ip, &m, g).map_err(domain)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
