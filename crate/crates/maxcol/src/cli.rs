//! The `maxcol` command line.
//!
//! Exit codes: 0 success or "yes", 1 "no", 2 usage or I/O trouble, 3 a
//! verification failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxcol_core::gadgets::{self, GadgetParams};
use maxcol_core::reductions::{forest_to_tree, reduce_ds, reduce_is};
use maxcol_core::solvers::{self, enumerate_colorings, max_is, min_ds};
use maxcol_core::verify::{self, E2eReport, GadgetMethod, GadgetSolve, LemmaReport, StructuredSolver};
use maxcol_core::{
    coloring_weight, is_proper, Problem, ScaledWeight, Solution, SolveResult, SourceGraph, WeightedForest,
};
use num_bigint::BigUint;
use serde_json::Value;

use crate::formats;
use crate::prov::{self, Scheme};
use crate::report;

pub const YES: i32 = 0;
pub const NO: i32 = 1;
pub const USAGE: i32 = 2;
pub const VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "maxcol", version, about = "Exact max-coloring on forests and the gadget reductions built on it")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a standalone gadget as a WFF forest
    Gen {
        #[command(subcommand)]
        gadget: Gadget,
    },
    /// Reduce an Independent Set or Dominating Set query to a weighted forest
    Reduce {
        #[arg(value_enum)]
        problem: ProblemArg,
        /// Source graph in DIMACS edge format
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        /// Output WFF path; the provenance goes to `<out>.prov.json`
        #[arg(long)]
        out: PathBuf,
        /// Join the components into one tree
        #[arg(long)]
        to_tree: bool,
    },
    /// Minimum weight coloring of a WFF forest, or a threshold decision
    Solve(SolveArgs),
    /// Run the gadget checkers and end-to-end reduction checks
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Convert a WFF forest to another format
    Export {
        #[command(subcommand)]
        format: ExportCmd,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Point {
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Gadget {
    /// Binomial tree B_i
    Binomial {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Auxiliary tree A_i^j
    Aux {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// R_flavor-AND gadget over bare W_1 input vertices
    And {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 0)]
        flavor: usize,
        #[arg(long, default_value_t = 2)]
        inputs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex tree T_i^j
    Vtree {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ProblemArg {
    Is,
    Ds,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Is => Problem::IndependentSet,
            ProblemArg::Ds => Problem::DominatingSet,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    /// Exhaustive branch-and-bound enumeration (small forests only)
    Bb,
    /// General tuple search with list-coloring checks
    Tuple,
    /// Structured solver for reduction instances
    Gadget,
    /// Gadget when the forest follows the weight scheme, else tuple
    Auto,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    /// At most this many color classes
    #[arg(long)]
    colors: Option<usize>,
    /// Only colorings of weight at most this exact fraction `p/q`
    #[arg(long)]
    budget: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Write the optimal coloring here
    #[arg(long)]
    witness: Option<PathBuf>,
    /// Provenance sidecar giving the weight scheme (default: `<input>.prov.json` if present)
    #[arg(long)]
    prov: Option<PathBuf>,
    /// Check this witness file instead of solving
    #[arg(long)]
    check_witness: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Print JSON instead of text
    #[arg(long)]
    json: bool,
    /// Include wall-clock times (makes output non-reproducible)
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Binomial trees: one class per level
    Lemma1 {
        #[command(flatten)]
        point: Point,
        /// Single tree index (default: 0..=4k+3)
        #[arg(long)]
        i: Option<usize>,
        /// Run the corrupted-gadget controls instead
        #[arg(long)]
        control: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Auxiliary trees: the two root/subroot branches
    Lemma2 {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        control: bool,
        #[command(flatten)]
        output: Output,
    },
    /// AND gadgets: forcing and permissive outcomes
    Lemma3 {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        flavor: Option<usize>,
        #[arg(long)]
        control: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Vertex trees: root classes under budget M
    Lemma4 {
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        control: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Independent Set reduction against brute force
    E2eIs(E2eArgs),
    /// Dominating Set reduction against brute force
    E2eDs(E2eArgs),
    /// Every lemma check with its control, plus a small end-to-end suite
    All {
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct E2eArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'k')]
    k: usize,
    #[arg(long)]
    to_tree: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Subcommand, Debug)]
enum ExportCmd {
    /// Graphviz DOT with exact weight labels
    Dot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: USAGE, message: message.into() }
}

fn verification(message: impl Into<String>) -> Failure {
    Failure { code: VERIFY, message: message.into() }
}

type Outcome = Result<i32, Failure>;

/// Parses `argv` (program name first), runs one subcommand and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { USAGE } else { YES };
        }
    };
    let mut out = std::io::stdout().lock();
    let mut text = String::new();
    let outcome = dispatch(cli.command, &mut text);
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("maxcol: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut String) -> Outcome {
    match cmd {
        Command::Gen { gadget } => gen(gadget, out),
        Command::Reduce { problem, graph, k, out: path, to_tree } => {
            reduce(problem.into(), &graph, k, &path, to_tree, out)
        }
        Command::Solve(args) => solve(args, out),
        Command::Verify { what } => verify_cmd(what, out),
        Command::Export { format: ExportCmd::Dot { input, out: path } } => {
            let forest = read_forest(&input)?;
            emit(path.as_deref(), &formats::write_dot(&forest), out)?;
            Ok(YES)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_forest(path: &Path) -> Result<WeightedForest, Failure> {
    formats::parse_wff(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<SourceGraph, Failure> {
    formats::parse_dimacs(&read_text(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Writes to a sibling temporary file and renames it into place, so readers
/// never see a half-written output.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path).inspect_err(|_| {
        let _ = fs::remove_file(&tmp);
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    write_atomic(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, contents: &str, out: &mut String) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, contents),
        None => {
            out.push_str(contents);
            Ok(())
        }
    }
}

fn core<T>(r: maxcol_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| usage(e.to_string()))
}

fn gen(gadget: Gadget, out: &mut String) -> Outcome {
    let (point, path) = match &gadget {
        Gadget::Binomial { point, out, .. }
        | Gadget::Aux { point, out, .. }
        | Gadget::And { point, out, .. }
        | Gadget::Vtree { point, out, .. } => (*point, out.clone()),
    };
    let params = core(GadgetParams::new(point.n, point.k))?;
    let mut forest = core(WeightedForest::new(params.denominator().clone()))?;
    match gadget {
        Gadget::Binomial { i, .. } => {
            core(gadgets::build_binomial(&params, &mut forest, i))?;
        }
        Gadget::Aux { i, j, .. } => {
            core(gadgets::build_auxiliary(&params, &mut forest, i, j))?;
        }
        Gadget::And { flavor, inputs, .. } => {
            let stubs: Vec<_> = (0..inputs).map(|_| forest.add_vertex(params.special(1))).collect();
            core(gadgets::build_and(&params, &mut forest, &stubs, flavor))?;
        }
        Gadget::Vtree { i, j, .. } => {
            core(gadgets::build_vertex_tree(&params, &mut forest, i, j))?;
        }
    }
    emit(path.as_deref(), &formats::write_wff(&forest), out)?;
    Ok(YES)
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut p = path.as_os_str().to_owned();
    p.push(".prov.json");
    PathBuf::from(p)
}

fn reduce(problem: Problem, graph_path: &Path, k: usize, path: &Path, to_tree: bool, out: &mut String) -> Outcome {
    let graph = read_graph(graph_path)?;
    let n = graph.vertex_count();
    if k == 0 || k > n {
        // outside the weight scheme; brute force is instant here
        let yes = match problem {
            Problem::IndependentSet => max_is(&graph, k).is_some(),
            Problem::DominatingSet => min_ds(&graph, k).is_some(),
        };
        out.push_str(if yes { "trivial yes\n" } else { "trivial no\n" });
        return Ok(if yes { YES } else { NO });
    }
    let mut inst = core(match problem {
        Problem::IndependentSet => reduce_is(&graph, k),
        Problem::DominatingSet => reduce_ds(&graph, k),
    })?;
    if to_tree {
        inst = core(forest_to_tree(&inst))?;
    }
    let prov = serde_json::to_string_pretty(&prov::provenance_json(&inst)).expect("json values serialize");
    write_file(path, &formats::write_wff(&inst.forest))?;
    write_file(&sidecar_path(path), &(prov + "\n"))?;
    out.push_str(&format!(
        "reduced {} vertices threshold {}/{}\n",
        inst.forest.vertex_count(),
        inst.threshold,
        inst.forest.denominator()
    ));
    Ok(YES)
}

/// Finds the weight scheme a forest was generated under, if any: tries
/// plain reduction output and the rescaled output of the tree transform.
pub fn infer_scheme(forest: &WeightedForest) -> Option<(GadgetParams, u32, Option<usize>)> {
    let zero = BigUint::from(0u32);
    for scale in [1u32, 2] {
        let den = forest.denominator();
        if den % scale != zero {
            continue;
        }
        let base = den / scale;
        let hub = if scale == 2 {
            let ones: Vec<_> =
                (0..forest.vertex_count()).filter(|&v| forest.weight(v) == &ScaledWeight::from(1)).collect();
            match ones.as_slice() {
                [h] => Some(*h),
                _ => continue,
            }
        } else {
            None
        };
        for k in 1..=16usize {
            let unit = BigUint::from(k) << (4 * k + 4);
            if unit > base {
                break;
            }
            if &base % &unit != zero {
                continue;
            }
            let Ok(n) = usize::try_from(&base / &unit) else { continue };
            let Ok(params) = GadgetParams::new(n, k) else { continue };
            if StructuredSolver::new(forest, &params, scale, hub).is_ok() {
                return Some((params, scale, hub));
            }
        }
    }
    None
}

fn branch_and_bound(forest: &WeightedForest, budget: Option<&ScaledWeight>, r: Option<usize>) -> SolveResult {
    let cap = budget.cloned().unwrap_or_else(|| forest.total_weight());
    let mut best: Option<(ScaledWeight, maxcol_core::Coloring)> = None;
    enumerate_colorings(forest, &cap, |c, w| {
        let fits = r.is_none_or(|r| c.nonempty_class_count() <= r);
        if fits && best.as_ref().is_none_or(|(b, _)| w < b) {
            best = Some((w.clone(), c.clone()));
        }
        ControlFlow::Continue(())
    });
    match best {
        Some((weight, witness)) => {
            let classes = maxcol_core::coloring::class_weights(forest, &witness).expect("total");
            let mut values: Vec<_> = classes.into_iter().filter(|w| !w.is_zero()).collect();
            values.sort_by(|a, b| b.cmp(a));
            let tuple = maxcol_core::WeightTuple::new(values).expect("sorted");
            SolveResult::Feasible(Solution { weight, tuple, witness })
        }
        None => SolveResult::Infeasible,
    }
}

fn load_scheme(args: &SolveArgs) -> Result<Option<Scheme>, Failure> {
    let path = match &args.prov {
        Some(p) => p.clone(),
        None => {
            let p = sidecar_path(&args.input);
            if !p.exists() {
                return Ok(None);
            }
            p
        }
    };
    let text = read_text(&path)?;
    prov::parse_scheme(&text).map(Some).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn solve(args: SolveArgs, out: &mut String) -> Outcome {
    let forest = read_forest(&args.input)?;
    let budget = match &args.budget {
        Some(b) => Some(formats::parse_fraction(b, forest.denominator()).map_err(usage)?),
        None => None,
    };
    let scheme = load_scheme(&args)?;
    let colors = args.colors.or(scheme.as_ref().and_then(|s| s.color_bound));
    let den = forest.denominator().clone();

    if let Some(path) = &args.check_witness {
        let text = read_text(path)?;
        let c = formats::parse_witness(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        if c.len() != forest.vertex_count() {
            return Err(verification(format!(
                "witness covers {} vertices, forest has {}",
                c.len(),
                forest.vertex_count()
            )));
        }
        if !is_proper(&forest, &c).map_err(|e| verification(e.to_string()))? {
            return Err(verification("witness is not a proper coloring"));
        }
        let w = coloring_weight(&forest, &c).map_err(|e| verification(e.to_string()))?;
        if let Some(r) = colors {
            if c.nonempty_class_count() > r {
                return Err(verification(format!("witness uses {} classes, bound is {r}", c.nonempty_class_count())));
            }
        }
        if let Some(b) = &budget {
            if &w > b {
                return Err(verification(format!("witness weighs {w}/{den}, over the budget {b}/{den}")));
            }
        }
        out.push_str(&format!("valid {w}/{den}\n"));
        return Ok(YES);
    }

    let structured = |s: &Scheme| -> GadgetSolve {
        verify::sigma_gadget_scaled(&forest, &s.params, s.scale, s.hub, budget.as_ref(), colors)
    };
    let inferred =
        || infer_scheme(&forest).map(|(params, scale, hub)| Scheme { params, scale, hub, color_bound: None });
    let general = || match colors {
        Some(r) => solvers::sigma_r_tuple(&forest, r, budget.as_ref()),
        None => solvers::sigma_min(&forest, budget.as_ref()),
    };
    let result = match args.method {
        Method::Bb => branch_and_bound(&forest, budget.as_ref(), colors),
        Method::Tuple => general(),
        Method::Gadget | Method::Auto => match scheme.clone().or_else(inferred) {
            Some(s) => {
                let g = structured(&s);
                if let GadgetMethod::Fallback(why) = &g.method {
                    eprintln!("maxcol: note: structured solver fell back to tuple search ({why})");
                }
                g.result
            }
            None if args.method == Method::Gadget => {
                return Err(usage("forest does not follow a gadget weight scheme; try --method tuple"));
            }
            None => general(),
        },
    };
    match result {
        SolveResult::Feasible(sol) => {
            let ok = is_proper(&forest, &sol.witness).unwrap_or(false)
                && coloring_weight(&forest, &sol.witness).ok().as_ref() == Some(&sol.weight);
            if !ok {
                return Err(verification("solver returned a witness that does not check out"));
            }
            if let Some(path) = &args.witness {
                write_file(path, &formats::write_witness(&sol.witness))?;
            }
            out.push_str(&format!("feasible {}/{den}\n", sol.weight));
            Ok(YES)
        }
        SolveResult::Infeasible => {
            out.push_str("infeasible\n");
            Ok(NO)
        }
    }
}

/// Collected reports of one `verify` run.
#[derive(Default)]
struct Reports {
    lemmas: Vec<LemmaReport>,
    e2e: Vec<E2eReport>,
}

impl Reports {
    fn all_as_expected(&self) -> bool {
        self.lemmas.iter().all(report::lemma_as_expected) && self.e2e.iter().all(E2eReport::success)
    }

    fn render(&self, output: Output, out: &mut String) {
        if output.json {
            let v = serde_json::json!({
                "lemmas": self.lemmas.iter().map(|r| report::lemma_json(r, output.timing)).collect::<Vec<Value>>(),
                "e2e": self.e2e.iter().map(report::e2e_json).collect::<Vec<Value>>(),
                "success": self.all_as_expected(),
            });
            out.push_str(&serde_json::to_string_pretty(&v).expect("json values serialize"));
            out.push('\n');
        } else {
            out.push_str(if self.all_as_expected() { "verified\n" } else { "verification failed\n" });
            for r in &self.lemmas {
                out.push_str(&report::lemma_text(r, output.timing));
                out.push('\n');
            }
            for r in &self.e2e {
                out.push_str(&report::e2e_text(r));
                out.push('\n');
            }
        }
    }

    fn finish(self, output: Output, out: &mut String) -> Outcome {
        self.render(output, out);
        Ok(if self.all_as_expected() { YES } else { VERIFY })
    }
}

fn timed(f: impl FnOnce() -> maxcol_core::Result<LemmaReport>) -> Result<LemmaReport, Failure> {
    let start = Instant::now();
    let mut r = core(f())?;
    r.elapsed = Some(start.elapsed());
    Ok(r)
}

fn lemma1(p: Point, i: Option<usize>, control: bool, into: &mut Vec<LemmaReport>) -> Result<(), Failure> {
    let top = 4 * p.k + 3;
    // raising the root of B_0 changes nothing, so controls start at 1
    let first = if control { 1 } else { 0 };
    for i in i.map_or(first..=top, |i| i..=i) {
        into.push(if control {
            timed(|| verify::control_lemma_bin(p.k, p.n, i, false))?
        } else {
            timed(|| verify::check_lemma_bin(p.k, p.n, i))?
        });
    }
    if control && i.is_none() {
        // a second corruption that does not touch the root weight
        into.push(timed(|| verify::control_lemma_bin(p.k, p.n, top, true))?);
    }
    Ok(())
}

fn lemma2(
    p: Point,
    i: Option<usize>,
    j: Option<usize>,
    control: bool,
    into: &mut Vec<LemmaReport>,
) -> Result<(), Failure> {
    let single = i.is_some() && j.is_some();
    for i in i.map_or(0..=3, |i| i..=i) {
        for j in j.map_or(0..=p.n, |j| j..=j) {
            let check = timed(|| verify::check_lemma_aux(p.k, p.n, i, j))?;
            if !control {
                into.push(check);
            } else if single || check.colorings > 0 {
                // a control at a vacuous point has nothing to break
                into.push(timed(|| verify::control_lemma_aux(p.k, p.n, i, j))?);
            }
        }
    }
    Ok(())
}

fn lemma3(p: Point, flavor: Option<usize>, control: bool, into: &mut Vec<LemmaReport>) -> Result<(), Failure> {
    for f in flavor.map_or(0..=1, |f| f..=f) {
        into.push(if control {
            timed(|| verify::control_lemma_and(p.k, p.n, f))?
        } else {
            timed(|| verify::check_lemma_and(p.k, p.n, f))?
        });
    }
    Ok(())
}

fn lemma4(p: Point, control: bool, into: &mut Vec<LemmaReport>) -> Result<(), Failure> {
    into.push(if control {
        timed(|| verify::control_lemma_vtree(p.k, p.n))?
    } else {
        timed(|| verify::check_lemma_vtree(p.k, p.n))?
    });
    Ok(())
}

fn e2e(problem: Problem, graph: &SourceGraph, k: usize, to_tree: bool) -> Result<E2eReport, Failure> {
    if k == 0 || k > graph.vertex_count() {
        return Err(usage(format!("k = {k} is outside 1..={} where the reduction applies", graph.vertex_count())));
    }
    core(if to_tree { verify::e2e_check_tree(problem, graph, k) } else { verify::e2e_check(problem, graph, k) })
}

fn verify_cmd(what: VerifyCmd, out: &mut String) -> Outcome {
    let mut reports = Reports::default();
    let output = match what {
        VerifyCmd::Lemma1 { point, i, control, output } => {
            lemma1(point, i, control, &mut reports.lemmas)?;
            output
        }
        VerifyCmd::Lemma2 { point, i, j, control, output } => {
            lemma2(point, i, j, control, &mut reports.lemmas)?;
            output
        }
        VerifyCmd::Lemma3 { point, flavor, control, output } => {
            lemma3(point, flavor, control, &mut reports.lemmas)?;
            output
        }
        VerifyCmd::Lemma4 { point, control, output } => {
            lemma4(point, control, &mut reports.lemmas)?;
            output
        }
        VerifyCmd::E2eIs(a) => {
            let g = read_graph(&a.graph)?;
            reports.e2e.push(e2e(Problem::IndependentSet, &g, a.k, a.to_tree)?);
            a.output
        }
        VerifyCmd::E2eDs(a) => {
            let g = read_graph(&a.graph)?;
            reports.e2e.push(e2e(Problem::DominatingSet, &g, a.k, a.to_tree)?);
            a.output
        }
        VerifyCmd::All { output } => {
            let p = Point { k: 1, n: 2 };
            for control in [false, true] {
                lemma1(p, None, control, &mut reports.lemmas)?;
                lemma2(p, None, None, control, &mut reports.lemmas)?;
                lemma3(p, None, control, &mut reports.lemmas)?;
                lemma4(p, control, &mut reports.lemmas)?;
            }
            let graphs = [
                SourceGraph::new(2),
                SourceGraph::from_edges(2, &[(0, 1)]).expect("valid"),
                SourceGraph::from_edges(3, &[(0, 1), (1, 2)]).expect("valid"),
                SourceGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).expect("valid"),
            ];
            for g in &graphs {
                reports.e2e.push(e2e(Problem::IndependentSet, g, 1, false)?);
                reports.e2e.push(e2e(Problem::DominatingSet, g, 1, false)?);
                reports.e2e.push(e2e(Problem::DominatingSet, g, 1, true)?);
            }
            output
        }
    };
    reports.finish(output, out)
}
