//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//! Every comparison is exact rational arithmetic.

use std::process::ExitCode;
use std::time::Instant;

use expander_extract::coloring::lift;
use expander_extract::extraction::{
    edge_addition_expansion_bound, extract_induced_core, prune_long_blue_paths, subdivision_expansion_bound,
    trim_to_expander, InducedCore, StepCase, TrimTrace,
};
use expander_extract::multigraph::cheeger_constant;
use expander_extract::oracle::instances::{
    augmentation_instance, cluster_instance, deletion_instance, lift_instance, minor_instance,
    planted_path_instance, small_generator_specs, subdivision_instance,
};
use expander_extract::oracle::{
    brute_force_cheeger, brute_force_expansion, generate_verified_expander, verify_report, DEFAULT_CAP,
};
use expander_extract::pipeline::{topminor_to_induced, PipelineOptions};
use expander_extract::rational::int;
use expander_extract::{MultiGraph, Rational, Result};
use serde_json::{json, Value};

#[derive(Default)]
struct Outcome {
    checked: usize,
    failures: Vec<String>,
    records: Vec<Value>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, seed: u64, r: Result<Value>) {
        self.checked += 1;
        match r {
            Ok(v) => self.records.push(v),
            Err(e) => self.failures.push(format!("seed {seed}: {e}")),
        }
    }
}

fn s(x: Rational) -> String {
    x.to_string()
}

/// Brute-force Cheeger of `g`, or `None` when it has fewer than two vertices.
fn oracle(g: &MultiGraph) -> Result<Option<Rational>> {
    if g.vertex_count() < 2 {
        return Ok(None);
    }
    Ok(Some(brute_force_cheeger(g, DEFAULT_CAP)?.0))
}

fn at_least(value: Option<Rational>, bound: Rational) -> bool {
    value.is_none_or(|v| v >= bound)
}

fn trimming() -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..100u64 {
        let mut fails = Vec::new();
        let r = (|| {
            let inst = deletion_instance(1_000 + seed)?;
            let g = &inst.base.graph;
            let kappa = inst.base.kappa;
            let eps = inst.epsilon();
            let (core, trace) = trim_to_expander(g, &inst.h, kappa)?;
            let cheeger = oracle(&core)?;
            let bound = TrimTrace::edge_bound(g.edge_count(), kappa, eps);
            if !at_least(cheeger, kappa / int(3)) {
                fails.push(format!("cheeger {:?} below kappa/3 = {}", cheeger, kappa / int(3)));
            }
            if int(core.edge_count() as u64) < bound {
                fails.push(format!("e(H*) = {} below {}", core.edge_count(), bound));
            }
            if !trace.error_term_holds(g.edge_count(), eps) || !trace.removed_volume_holds(kappa) {
                fails.push("trace audit failed".into());
            }
            Ok(json!({
                "seed": seed, "vertices": g.vertex_count(), "edges": g.edge_count(),
                "kappa": s(kappa), "deleted": inst.deleted, "epsilon": s(eps),
                "output_edges": core.edge_count(), "output_cheeger": cheeger.map(s),
                "steps": trace.steps.len(), "trace": trace,
            }))
        })();
        out.absorb(seed, r);
        fails.into_iter().for_each(|f| out.check(false, || format!("seed {seed}: {f}")));
    }
    out
}

fn subdivision() -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..50u64 {
        let m = 2 + (seed % 2) as u32;
        let mut ok = true;
        let r = (|| {
            let inst = subdivision_instance(2_000 + seed, m, DEFAULT_CAP)?;
            let bound = subdivision_expansion_bound(inst.base.kappa, m as u64)?;
            let cheeger = brute_force_cheeger(&inst.graph, DEFAULT_CAP)?.0;
            ok = cheeger >= bound;
            Ok(json!({
                "seed": seed, "max_path_edges": m, "base_kappa": s(inst.base.kappa),
                "vertices": inst.graph.vertex_count(), "cheeger": s(cheeger), "bound": s(bound),
            }))
        })();
        out.absorb(seed, r);
        out.check(ok, || format!("seed {seed}: subdivided Cheeger below kappa/(2M-1)"));
    }
    out
}

fn augmentation() -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..50u64 {
        let m = 2 + (seed % 2) as u32;
        let mut ok = true;
        let r = (|| {
            let inst = augmentation_instance(3_000 + seed, m)?;
            for v in inst.graph.vertices() {
                ok &= inst.graph.degree(v)? <= m as usize * inst.base.graph.degree(v)?;
            }
            let bound = edge_addition_expansion_bound(inst.base.kappa, m as u64)?;
            let cheeger = brute_force_cheeger(&inst.graph, DEFAULT_CAP)?.0;
            ok &= cheeger >= bound;
            Ok(json!({
                "seed": seed, "factor": m, "base_kappa": s(inst.base.kappa), "added": inst.added,
                "cheeger": s(cheeger), "bound": s(bound),
            }))
        })();
        out.absorb(seed, r);
        out.check(ok, || format!("seed {seed}: augmented Cheeger below kappa/M or degree factor exceeded"));
    }
    out
}

fn pruning() -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..50u64 {
        let mut fails = Vec::new();
        let r = (|| {
            let inst = planted_path_instance(4_000 + seed)?;
            let res = prune_long_blue_paths(&inst.colored, inst.base.kappa, inst.epsilon, inst.alpha)?;
            let red_before = inst.colored.red();
            let red_after = res.component.red();
            let one = Rational::from_integer(1);
            if int(red_after.edge_count() as u64) < (one - inst.epsilon) * int(red_before.edge_count() as u64) {
                fails.push(format!("e(red(C_M)) = {} too small", red_after.edge_count()));
            }
            if !red_after.is_subgraph_of(&red_before) {
                fails.push("red(C_M) is not a subgraph of red(G)".into());
            }
            if let Some(p) = res.component.maximal_blue_paths().iter().find(|p| p.size() as u64 > res.big_m) {
                fails.push(format!("blue path of size {} survives with M = {}", p.size(), res.big_m));
            }
            if res.long_paths < inst.planted || res.big_m != inst.big_m {
                fails.push(format!("expected {} planted paths pruned, got {}", inst.planted, res.long_paths));
            }
            Ok(json!({
                "seed": seed, "kappa": s(inst.base.kappa), "epsilon": s(inst.epsilon), "alpha": s(inst.alpha),
                "big_m": res.big_m, "red_before": red_before.edge_count(), "red_after": red_after.edge_count(),
                "summary": res.summary,
            }))
        })();
        out.absorb(seed, r);
        fails.into_iter().for_each(|f| out.check(false, || format!("seed {seed}: {f}")));
    }
    out
}

fn lifting() -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..200u64 {
        let mut ok = true;
        let r = (|| {
            let inst = lift_instance(5_000 + seed)?;
            let expected = inst.colored.red().induced_subgraph(&inst.keep)?;
            let lifted = lift(&inst.colored, &inst.keep)?;
            ok = lifted.red() == expected;
            Ok(json!({
                "seed": seed, "vertices": inst.colored.graph().vertex_count(),
                "blue": inst.colored.blue_vertices().len(), "keep": inst.keep,
                "red_edges": expected.edge_count(),
            }))
        })();
        out.absorb(seed, r);
        out.check(ok, || format!("seed {seed}: red(lift(G, V(H))) differs from H"));
    }
    out
}

fn induced_core() -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..50u64 {
        let mut fails = Vec::new();
        let r = (|| {
            let inst = cluster_instance(6_000 + seed)?;
            let core = extract_induced_core(&inst.colored, inst.kappa, inst.epsilon, inst.alpha)?;
            let g_star = core.graph.graph();
            let red_star = core.graph.red();
            let cheeger = oracle(&red_star)?;
            if !at_least(cheeger, inst.kappa / int(3)) {
                fails.push(format!("red(G*) Cheeger {:?} below kappa/3", cheeger));
            }
            for v in g_star.vertices() {
                if g_star.degree(v)? as u64 > 3 * core.big_m * core.graph.red_degree(v)? as u64 {
                    fails.push(format!("vertex {v} exceeds deg <= 3M d_red"));
                }
            }
            let red_edges = inst.colored.red().edge_count();
            let bound = InducedCore::edge_bound(red_edges, inst.kappa, inst.epsilon);
            if int(g_star.edge_count() as u64) < bound {
                fails.push(format!("e(G*) = {} below {}", g_star.edge_count(), bound));
            }
            if !g_star.is_induced_subgraph_of(inst.colored.graph()) {
                fails.push("G* is not induced".into());
            }
            if let Some(step) = core.trace.first_up_down_violation() {
                fails.push(format!("up >= 2 down fails at {step}"));
            }
            if !core.trace.up_total_holds() {
                fails.push("S <= 2 vol(X0) fails".into());
            }
            let removed_by_cases = core.trace.steps.iter().filter(|s| s.case != StepCase::Heavy).count();
            Ok(json!({
                "seed": seed, "kappa": s(inst.kappa), "epsilon": s(inst.epsilon), "alpha": s(inst.alpha),
                "big_m": core.big_m, "output_edges": g_star.edge_count(), "red_cheeger": cheeger.map(s),
                "case_steps": removed_by_cases, "trace": core.trace,
            }))
        })();
        out.absorb(seed, r);
        fails.into_iter().for_each(|f| out.check(false, || format!("seed {seed}: {f}")));
    }
    out
}

fn end_to_end() -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..30u64 {
        let mut fails = Vec::new();
        let r = (|| {
            let inst = minor_instance(7_000 + seed, DEFAULT_CAP)?;
            let g = &inst.host;
            let h = &inst.minor.graph;
            let (h_star, report) = topminor_to_induced(
                g, h, &inst.witness, inst.minor.kappa, inst.alpha, inst.alpha_prime, PipelineOptions::default(),
            )?;
            if h_star != g.induced_subgraph(&h_star.vertex_set())? {
                fails.push("H* is not induced".into());
            }
            if int(h_star.edge_count() as u64) < inst.alpha_prime * int(g.edge_count() as u64) {
                fails.push(format!("e(H*) = {} below alpha' e(G)", h_star.edge_count()));
            }
            let cheeger = oracle(&h_star)?;
            if !at_least(cheeger, report.kappa_prime) {
                fails.push(format!("Cheeger {:?} below kappa' = {}", cheeger, report.kappa_prime));
            }
            let verdict = verify_report(g, h, &report, DEFAULT_CAP)?;
            if !verdict.passed {
                fails.push(format!("report check failed: {}", verdict.detail));
            }
            Ok(json!({ "seed": seed, "spurious": inst.spurious, "report": report, "verdict": verdict }))
        })();
        out.absorb(seed, r);
        fails.into_iter().for_each(|f| out.check(false, || format!("seed {seed}: {f}")));
    }
    out
}

fn agreement() -> Outcome {
    let mut out = Outcome::default();
    for (i, spec) in small_generator_specs(600).into_iter().enumerate() {
        let seed = i as u64;
        let mut fails = Vec::new();
        let r = (|| {
            let inst = generate_verified_expander(&spec)?;
            if inst.graph.vertex_count() > 8 {
                return Ok(Value::Null);
            }
            let (fast, cert) = cheeger_constant(&inst.graph)?;
            if fast != inst.kappa {
                fails.push(format!("optimized {fast} vs brute force {}", inst.kappa));
            }
            if brute_force_expansion(&inst.graph, &cert.witness_set)? != fast {
                fails.push(format!("optimized witness {} does not attain {fast}", cert.witness_set));
            }
            Ok(json!({ "spec": spec, "cheeger": s(fast) }))
        })();
        out.absorb(seed, r);
        fails.into_iter().for_each(|f| out.check(false, || format!("spec {i}: {f}")));
    }
    out.records.retain(|v| !v.is_null());
    out.checked = out.records.len() + out.failures.len();
    if out.checked < 500 {
        out.failures.push(format!("only {} graphs with at most 8 vertices", out.checked));
    }
    out
}

type Suite = (&'static str, fn() -> Outcome);

const SUITES: [Suite; 8] = [
    ("trimming to a kappa/3-expander", trimming),
    ("subdivision keeps kappa/(2M-1)", subdivision),
    ("bounded edge addition keeps kappa/M", augmentation),
    ("long blue path pruning", pruning),
    ("lift round trip", lifting),
    ("induced core clauses and audits", induced_core),
    ("end-to-end topological minor to induced expander", end_to_end),
    ("optimized vs brute-force Cheeger agreement", agreement),
];

fn line(pass: bool, n: usize, name: &str, detail: &str) {
    println!("{} criterion {n}: {name} ({detail})", if pass { "PASS" } else { "FAIL" });
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut first_run = Vec::new();
    for (i, (name, run)) in SUITES.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        let pass = outcome.failures.is_empty();
        all_pass &= pass;
        let detail = if pass {
            format!("{} instances, {ms} ms", outcome.checked)
        } else {
            format!("{} of {} failed, first: {}", outcome.failures.len(), outcome.checked, outcome.failures[0])
        };
        line(pass, i + 1, name, &detail);
        first_run.push(serde_json::to_string(&outcome.records).expect("records serialize"));
    }

    let start = Instant::now();
    let differing: Vec<usize> = SUITES
        .iter()
        .zip(&first_run)
        .enumerate()
        .filter(|(_, ((_, run), first))| serde_json::to_string(&run().records).expect("records serialize") != **first)
        .map(|(i, _)| i + 1)
        .collect();
    let bytes: usize = first_run.iter().map(String::len).sum();
    let pass = differing.is_empty();
    all_pass &= pass;
    let detail = if pass {
        format!("{} suites rerun, {bytes} JSON bytes identical, {} ms", SUITES.len(), start.elapsed().as_millis())
    } else {
        format!("suites {differing:?} produced different JSON on rerun")
    };
    line(pass, 9, "determinism of JSON reports", &detail);

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
