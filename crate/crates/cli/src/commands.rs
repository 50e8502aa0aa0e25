use std::fs;
use std::path::Path;
use std::process::ExitCode;

use expander_extract::coloring::{EdgeColoredGraph, VertexColoredGraph};
use expander_extract::extraction::{
    extract_induced_core_with_threshold, prune_with_threshold, trim_to_expander, InducedCore, TrimTrace,
};
use expander_extract::io::{parse_edge_colored, parse_edge_list, parse_vertex_colored, write_edge_list};
use expander_extract::multigraph::{cheeger_constant, is_kappa_expander};
use expander_extract::oracle::{brute_force_cheeger, generate_verified_expander, verify_report, InstanceSpec};
use expander_extract::pipeline::{
    plan_minor_to_induced, plan_minor_to_subgraph, plan_subgraph_to_induced, subgraph_to_induced,
    topminor_to_induced, topminor_to_subgraph, PipelineOptions, PipelineReport, TopoMinorWitness,
};
use expander_extract::rational::{int, parse_rational};
use expander_extract::{Error, MultiGraph, Rational};
use serde_json::{json, Value};

use crate::{Command, Common, Stage};

pub const EXIT_PARSE: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_VERIFICATION: u8 = 3;

enum Failure {
    /// Input could not be read or parsed; no report.
    Parse(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.root() {
            Error::Parse { .. } | Error::Json(_) => Failure::Parse(e.to_string()),
            _ => Failure::Lib(e),
        }
    }
}

/// A finished command: its report and whether every requested check passed.
struct Done {
    report: Value,
    verified: bool,
}

impl Done {
    fn ok(report: Value) -> Self {
        Done { report, verified: true }
    }
}

type Outcome = Result<Done, Failure>;

pub fn run(command: Command) -> ExitCode {
    let (name, common, result) = dispatch(command);
    let (report, code) = match result {
        Ok(done) => {
            let mut report = done.report;
            let status = if done.verified { "ok" } else { "verification_failed" };
            report["status"] = json!(status);
            (report, if done.verified { 0 } else { EXIT_VERIFICATION })
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_PARSE);
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            (json!({ "status": "precondition_failed", "error": e.to_string() }), EXIT_PRECONDITION)
        }
    };
    let mut report = report;
    report["command"] = json!(name);
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    match &common.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_PARSE);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}

fn dispatch(command: Command) -> (&'static str, Common, Outcome) {
    match command {
        Command::Cheeger { graph, kappa, common } => {
            let r = cheeger(&graph, kappa.as_deref(), &common);
            ("cheeger", common, r)
        }
        Command::Trim { graph, subgraph, kappa, epsilon, common } => {
            let r = trim(&graph, &subgraph, &kappa, epsilon.as_deref(), &common);
            ("trim", common, r)
        }
        Command::Prune { graph, kappa, epsilon, alpha, big_m, common } => {
            let r = prune(&graph, &kappa, &epsilon, &alpha, big_m, &common);
            ("prune", common, r)
        }
        Command::Induce { graph, kappa, epsilon, alpha, big_m, common } => {
            let r = induce(&graph, &kappa, &epsilon, &alpha, big_m, &common);
            ("induce", common, r)
        }
        Command::Pipeline { graph, subgraph, witness, kappa, alpha, alpha_prime, stage, dry_run, common } => {
            let params = PipelineParams { kappa, alpha, alpha_prime, stage, dry_run };
            let r = pipeline(&graph, &subgraph, witness.as_deref(), &params, &common);
            ("pipeline", common, r)
        }
        Command::Verify { graph, subgraph, report, common } => {
            let r = verify(&graph, &subgraph, &report, &common);
            ("verify", common, r)
        }
        Command::Generate { spec, seed, common } => {
            let r = generate(&spec, seed, &common);
            ("generate", common, r)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Runs a parser and prefixes its diagnostics with the file name.
fn load<T>(path: &Path, parse: impl Fn(&str) -> expander_extract::Result<T>) -> Result<T, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn rational(flag: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|_| Failure::Parse(format!("--{flag}: `{text}` is not a rational p/q")))
}

fn graph_json(g: &MultiGraph) -> Value {
    let edges: Vec<Value> = g.edges().map(|(u, v, m)| json!([u, v, m])).collect();
    json!({
        "vertices": g.vertices().collect::<Vec<_>>(),
        "edges": edges,
        "vertex_count": g.vertex_count(),
        "edge_count": g.edge_count(),
    })
}

fn s(x: Rational) -> String {
    x.to_string()
}

/// Oracle Cheeger constant; `None` below two vertices, where every bound holds vacuously.
fn oracle_cheeger(g: &MultiGraph, cap: usize) -> Result<Option<Rational>, Failure> {
    if g.vertex_count() < 2 {
        return Ok(None);
    }
    Ok(Some(brute_force_cheeger(g, cap)?.0))
}

/// Fails with a precondition error unless the oracle confirms a `kappa`-expander.
fn require_expander(g: &MultiGraph, kappa: Rational, what: &str, cap: usize) -> Result<(), Failure> {
    if let Some(h) = oracle_cheeger(g, cap)? {
        if h < kappa {
            return Err(Failure::Lib(Error::Precondition(format!(
                "{what} has Cheeger constant {h}, below kappa = {kappa}"
            ))));
        }
    }
    Ok(())
}

/// Collects named checks; the first failing one is reported.
#[derive(Default)]
struct Checks(Vec<(&'static str, bool)>);

impl Checks {
    fn add(&mut self, name: &'static str, ok: bool) {
        self.0.push((name, ok));
    }

    fn all(&self) -> bool {
        self.0.iter().all(|(_, ok)| *ok)
    }

    fn json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self.0.iter().map(|(k, ok)| (k.to_string(), json!(ok))).collect();
        Value::Object(map)
    }
}

fn cheeger(graph: &Path, kappa: Option<&str>, common: &Common) -> Outcome {
    let g = load(graph, parse_edge_list)?;
    let kappa = kappa.map(|k| rational("kappa", k)).transpose()?;
    let (value, cert) = cheeger_constant(&g)?;
    let mut report = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "cheeger": s(value),
        "certificate": cert,
    });
    if let Some(k) = kappa {
        report["kappa"] = json!(s(k));
        report["is_expander"] = json!(is_kappa_expander(&g, k)?.holds);
    }
    let mut verified = true;
    if common.verify {
        let (oracle, _) = brute_force_cheeger(&g, common.cap)?;
        verified = oracle == value;
        report["oracle_cheeger"] = json!(s(oracle));
    }
    Ok(Done { report, verified })
}

fn trim(graph: &Path, subgraph: &Path, kappa: &str, epsilon: Option<&str>, common: &Common) -> Outcome {
    let g = load(graph, parse_edge_list)?;
    let h = load(subgraph, parse_edge_list)?;
    let kappa = rational("kappa", kappa)?;
    let epsilon = match epsilon {
        Some(e) => rational("epsilon", e)?,
        None if g.edge_count() == 0 => Rational::from_integer(0),
        None => Rational::from_integer(1) - Rational::new(h.edge_count() as i128, g.edge_count() as i128),
    };
    if common.verify {
        require_expander(&g, kappa, "G", common.cap)?;
    }
    let (core, trace) = trim_to_expander(&g, &h, kappa)?;
    let bound = TrimTrace::edge_bound(g.edge_count(), kappa, epsilon);
    let mut report = json!({
        "kappa": s(kappa),
        "epsilon": s(epsilon),
        "edge_bound": s(bound),
        "output": graph_json(&core),
        "trace_lines": trace.to_lines().lines().collect::<Vec<_>>(),
        "trace": trace,
    });
    let mut verified = true;
    if common.verify {
        let mut checks = Checks::default();
        let cheeger = oracle_cheeger(&core, common.cap)?;
        checks.add("expansion", cheeger.is_none_or(|c| c >= kappa / int(3)));
        checks.add("edge_count", int(core.edge_count() as u64) >= bound);
        checks.add("error_term", trace.error_term_holds(g.edge_count(), epsilon));
        checks.add("removed_volume", trace.removed_volume_holds(kappa));
        report["oracle_cheeger"] = json!(cheeger.map(s));
        report["checks"] = checks.json();
        verified = checks.all();
    }
    Ok(Done { report, verified })
}

fn prune(graph: &Path, kappa: &str, epsilon: &str, alpha: &str, big_m: Option<u64>, common: &Common) -> Outcome {
    let g: VertexColoredGraph = load(graph, parse_vertex_colored)?;
    let kappa = rational("kappa", kappa)?;
    let epsilon = rational("epsilon", epsilon)?;
    let alpha = rational("alpha", alpha)?;
    let red = g.red();
    if common.verify {
        require_expander(&red, kappa, "red(G)", common.cap)?;
    }
    let out = prune_with_threshold(&g, kappa, epsilon, alpha, big_m)?;
    let kept_red = out.component.red();
    let mut report = json!({
        "kappa": s(kappa),
        "epsilon": s(epsilon),
        "alpha": s(alpha),
        "big_m": out.big_m,
        "long_paths": out.long_paths,
        "output": graph_json(out.component.graph()),
        "blue_vertices": out.component.blue_vertices(),
        "summary": out.summary,
    });
    let mut verified = true;
    if common.verify {
        let mut checks = Checks::default();
        let one = Rational::from_integer(1);
        checks.add(
            "red_edge_count",
            int(kept_red.edge_count() as u64) >= (one - epsilon) * int(red.edge_count() as u64),
        );
        checks.add("red_subgraph", kept_red.is_subgraph_of(&red));
        checks.add(
            "short_blue_paths",
            out.component.maximal_blue_paths().iter().all(|p| p.size() as u64 <= out.big_m),
        );
        report["checks"] = checks.json();
        verified = checks.all();
    }
    Ok(Done { report, verified })
}

fn induce(graph: &Path, kappa: &str, epsilon: &str, alpha: &str, big_m: Option<u64>, common: &Common) -> Outcome {
    let g: EdgeColoredGraph = load(graph, parse_edge_colored)?;
    let kappa = rational("kappa", kappa)?;
    let epsilon = rational("epsilon", epsilon)?;
    let alpha = rational("alpha", alpha)?;
    let red = g.red();
    if common.verify {
        require_expander(&red, kappa, "red(G)", common.cap)?;
    }
    let core = extract_induced_core_with_threshold(&g, kappa, epsilon, alpha, big_m)?;
    let bound = InducedCore::edge_bound(red.edge_count(), kappa, epsilon);
    let g_star = core.graph.graph();
    let mut report = json!({
        "kappa": s(kappa),
        "epsilon": s(epsilon),
        "alpha": s(alpha),
        "big_m": core.big_m,
        "edge_bound": s(bound),
        "output": graph_json(g_star),
        "trace_lines": core.trace.to_lines().lines().collect::<Vec<_>>(),
        "trace": core.trace,
    });
    let mut verified = true;
    if common.verify {
        let mut checks = Checks::default();
        let red_star = core.graph.red();
        let cheeger = oracle_cheeger(&red_star, common.cap)?;
        checks.add("red_expansion", cheeger.is_none_or(|c| c >= kappa / int(3)));
        let degree_ok = g_star.vertices().try_fold(true, |ok, v| -> expander_extract::Result<bool> {
            Ok(ok && g_star.degree(v)? as u64 <= 3 * core.big_m * core.graph.red_degree(v)? as u64)
        })?;
        checks.add("degree_ratio", degree_ok);
        checks.add("edge_count", int(g_star.edge_count() as u64) >= bound);
        checks.add("up_down", core.trace.first_up_down_violation().is_none());
        checks.add("up_total", core.trace.up_total_holds());
        report["oracle_red_cheeger"] = json!(cheeger.map(s));
        report["checks"] = checks.json();
        verified = checks.all();
    }
    Ok(Done { report, verified })
}

struct PipelineParams {
    kappa: String,
    alpha: String,
    alpha_prime: String,
    stage: Stage,
    dry_run: bool,
}

fn pipeline(graph: &Path, subgraph: &Path, witness: Option<&Path>, p: &PipelineParams, common: &Common) -> Outcome {
    let g = load(graph, parse_edge_list)?;
    let h = load(subgraph, parse_edge_list)?;
    let w = match witness {
        Some(path) => load(path, TopoMinorWitness::from_json)?,
        None => TopoMinorWitness::identity(&h),
    };
    let kappa = rational("kappa", &p.kappa)?;
    let alpha = rational("alpha", &p.alpha)?;
    let alpha_prime = rational("alpha-prime", &p.alpha_prime)?;

    if p.dry_run {
        let plan = match p.stage {
            Stage::Full => serde_json::to_value(plan_minor_to_induced(kappa, alpha, alpha_prime)?),
            Stage::MinorToSubgraph => serde_json::to_value([plan_minor_to_subgraph(kappa, alpha, alpha_prime)?]),
            Stage::SubgraphToInduced => serde_json::to_value([plan_subgraph_to_induced(kappa, alpha, alpha_prime)?]),
        }
        .expect("plan serializes");
        return Ok(Done::ok(json!({ "plan": plan })));
    }

    let opts = PipelineOptions { verify: common.verify };
    let (_, report) = match p.stage {
        Stage::Full => topminor_to_induced(&g, &h, &w, kappa, alpha, alpha_prime, opts)?,
        Stage::MinorToSubgraph => topminor_to_subgraph(&g, &h, &w, kappa, alpha, alpha_prime, opts)?,
        Stage::SubgraphToInduced => subgraph_to_induced(&g, &h, kappa, alpha, alpha_prime, opts)?,
    };
    let mut out = json!({ "report": report });
    let mut verified = true;
    if common.verify {
        let verdict = verify_report(&g, &h, &report, common.cap)?;
        verified = verdict.passed;
        out["verdict"] = serde_json::to_value(verdict).expect("verdict serializes");
    }
    Ok(Done { report: out, verified })
}

fn verify(graph: &Path, subgraph: &Path, report: &Path, common: &Common) -> Outcome {
    let g = load(graph, parse_edge_list)?;
    let h = load(subgraph, parse_edge_list)?;
    let report: PipelineReport = load(report, |text| {
        let value: Value = serde_json::from_str(text)?;
        // accept the `pipeline` command's wrapper as well as a bare report
        let inner = value.get("report").cloned().unwrap_or(value);
        Ok(serde_json::from_value(inner)?)
    })?;
    let verdict = verify_report(&g, &h, &report, common.cap)?;
    let passed = verdict.passed;
    Ok(Done { report: json!({ "verdict": verdict }), verified: passed })
}

fn generate(spec: &Path, seed: Option<u64>, common: &Common) -> Outcome {
    let mut spec: InstanceSpec = load(spec, |text| Ok(serde_json::from_str(text)?))?;
    if let Some(seed) = seed {
        spec.seed = seed;
    }
    spec.cap = common.cap;
    let inst = generate_verified_expander(&spec)?;
    Ok(Done::ok(json!({
        "spec": spec,
        "attempts": inst.attempts,
        "kappa": s(inst.kappa),
        "certificate": inst.certificate,
        "graph": graph_json(&inst.graph),
        "edge_list": write_edge_list(&inst.graph),
    })))
}
