//! Composed reductions from an expander topological minor (or subgraph) to
//! an expander induced subgraph of the host.
//!
//! Every function plans its parameters first ([`plan_minor_to_subgraph`],
//! [`plan_subgraph_to_induced`], [`plan_minor_to_induced`]) so the values of
//! `ε`, `M` and `κ′` are known before any graph work starts.

mod report;
mod witness;

use serde::{Deserialize, Serialize};

pub use report::{OutputGraph, PipelineKind, PipelineReport, Relation, StageReport, REPORT_SCHEMA};
pub use witness::{
    subgraph_to_edge_colored, validate_witness, witness_to_vertex_colored, EdgeKey, TopoMinorWitness,
    WitnessViolation,
};

use crate::coloring::lift;
use crate::error::{Error, Result};
use crate::extraction::{
    edge_addition_expansion_bound, ensure_kappa_range, extract_induced_core, heavy_vertex_factor,
    path_length_threshold, prune_long_blue_paths, subdivision_expansion_bound, trim_to_expander,
};
use crate::multigraph::{cheeger_constant, is_kappa_expander, MultiGraph};
use crate::rational::{int, Rational};

pub const MINOR_TO_SUBGRAPH: &str = "topological_minor_to_subgraph";
pub const SUBGRAPH_TO_INDUCED: &str = "subgraph_to_induced";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineOptions {
    /// Check the input expander with the exact Cheeger constant before running,
    /// and attach a certificate for the output afterwards.
    pub verify: bool,
}

/// Parameters of one stage, fixed before the stage runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StagePlan {
    #[serde(with = "crate::rational::serde_string")]
    pub kappa: Rational,
    #[serde(with = "crate::rational::serde_string")]
    pub alpha: Rational,
    #[serde(with = "crate::rational::serde_string")]
    pub alpha_prime: Rational,
    #[serde(with = "crate::rational::serde_string")]
    pub epsilon: Rational,
    pub big_m: u64,
    #[serde(with = "crate::rational::serde_string")]
    pub kappa_prime: Rational,
}

fn check_fractions(kappa: Rational, alpha: Rational, alpha_prime: Rational) -> Result<()> {
    ensure_kappa_range(kappa)?;
    let zero = Rational::from_integer(0);
    if !(zero < alpha_prime && alpha_prime < alpha && alpha <= Rational::from_integer(1)) {
        return Err(Error::precondition(format!(
            "need 0 < alpha' < alpha <= 1, got alpha = {alpha}, alpha' = {alpha_prime}"
        )));
    }
    Ok(())
}

/// `ε = κ(1 - α′/α)/6`, `M` the blue-path threshold and `κ′ = κ/(3(2M - 1))`.
pub fn plan_minor_to_subgraph(kappa: Rational, alpha: Rational, alpha_prime: Rational) -> Result<StagePlan> {
    check_fractions(kappa, alpha, alpha_prime)?;
    let one = Rational::from_integer(1);
    let epsilon = kappa * (one - alpha_prime / alpha) / int(6);
    let big_m = path_length_threshold(kappa, epsilon, alpha)?;
    let kappa_prime = subdivision_expansion_bound(kappa / int(3), big_m)?;
    Ok(StagePlan { kappa, alpha, alpha_prime, epsilon, big_m, kappa_prime })
}

/// `ε = (1 - α′/α)/(1 + 3/κ)`, `M = ⌈1/(αε)⌉` and `κ′ = κ/(9M)`.
pub fn plan_subgraph_to_induced(kappa: Rational, alpha: Rational, alpha_prime: Rational) -> Result<StagePlan> {
    check_fractions(kappa, alpha, alpha_prime)?;
    let one = Rational::from_integer(1);
    let epsilon = (one - alpha_prime / alpha) / (one + int(3) / kappa);
    let big_m = heavy_vertex_factor(epsilon, alpha)?;
    let kappa_prime = edge_addition_expansion_bound(kappa / int(3), 3 * big_m)?;
    Ok(StagePlan { kappa, alpha, alpha_prime, epsilon, big_m, kappa_prime })
}

/// Both stages, meeting at `α″ = (α + α′)/2`.
pub fn plan_minor_to_induced(kappa: Rational, alpha: Rational, alpha_prime: Rational) -> Result<[StagePlan; 2]> {
    check_fractions(kappa, alpha, alpha_prime)?;
    let mid = (alpha + alpha_prime) / int(2);
    let first = plan_minor_to_subgraph(kappa, alpha, mid)?;
    let second = plan_subgraph_to_induced(first.kappa_prime, mid, alpha_prime)?;
    Ok([first, second])
}

fn check_edge_share(g: &MultiGraph, h: &MultiGraph, alpha: Rational) -> Result<()> {
    if int(h.edge_count() as u64) < alpha * int(g.edge_count() as u64) {
        return Err(Error::precondition(format!(
            "e(H) = {} is below alpha = {alpha} times e(G) = {}",
            h.edge_count(),
            g.edge_count()
        )));
    }
    Ok(())
}

fn check_expander(h: &MultiGraph, kappa: Rational, what: &str) -> Result<()> {
    let check = is_kappa_expander(h, kappa)?;
    if !check.holds {
        let cert = check.violation.expect("violation recorded");
        return Err(Error::precondition(format!(
            "{what} is not a {kappa}-expander: h({}) = {}",
            cert.witness_set, cert.h_value
        )));
    }
    Ok(())
}

fn stage_result<T>(stage: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| e.in_stage(stage))
}

/// Runs the minor-to-subgraph stage from a fixed plan.
fn run_minor_stage(
    g: &MultiGraph,
    h: &MultiGraph,
    w: &TopoMinorWitness,
    plan: &StagePlan,
    opts: PipelineOptions,
) -> Result<(MultiGraph, StageReport)> {
    check_edge_share(g, h, plan.alpha)?;
    if opts.verify {
        check_expander(h, plan.kappa, "H")?;
    }
    let colored = witness_to_vertex_colored(g, h, w)?;
    let pruned = prune_long_blue_paths(&colored, plan.kappa, plan.epsilon, plan.alpha)?;
    debug_assert_eq!(pruned.big_m, plan.big_m);
    let red_host = colored.red();
    let red_kept = pruned.component.red();
    let (core, trace) = trim_to_expander(&red_host, &red_kept, plan.kappa)?;
    let lifted = lift(&pruned.component, &core.vertex_set())?;
    let out = lifted.graph().clone();
    let report = StageReport {
        name: MINOR_TO_SUBGRAPH.into(),
        plan: *plan,
        prune: Some(pruned.summary),
        trim: Some(trace),
        induced: None,
        output_vertices: out.vertex_count(),
        output_edges: out.edge_count(),
    };
    Ok((out, report))
}

fn run_induced_stage(
    g: &MultiGraph,
    h: &MultiGraph,
    plan: &StagePlan,
    opts: PipelineOptions,
) -> Result<(MultiGraph, StageReport)> {
    if !h.is_subgraph_of(g) {
        return Err(Error::precondition("H is not a subgraph of G"));
    }
    check_edge_share(g, h, plan.alpha)?;
    if opts.verify {
        check_expander(h, plan.kappa, "H")?;
    }
    let colored = subgraph_to_edge_colored(g, h)?;
    let core = extract_induced_core(&colored, plan.kappa, plan.epsilon, plan.alpha)?;
    debug_assert_eq!(core.big_m, plan.big_m);
    let out = core.graph.graph().clone();
    let report = StageReport {
        name: SUBGRAPH_TO_INDUCED.into(),
        plan: *plan,
        prune: None,
        trim: None,
        induced: Some(core.trace),
        output_vertices: out.vertex_count(),
        output_edges: out.edge_count(),
    };
    Ok((out, report))
}

fn finish(
    kind: PipelineKind,
    g: &MultiGraph,
    h: &MultiGraph,
    kappa: Rational,
    alpha: Rational,
    alpha_prime: Rational,
    stages: Vec<StageReport>,
    out: &MultiGraph,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    let kappa_prime = stages.last().expect("at least one stage").plan.kappa_prime;
    let certificate = if opts.verify && out.vertex_count() >= 2 {
        Some(cheeger_constant(out)?.1)
    } else {
        None
    };
    Ok(PipelineReport {
        schema: REPORT_SCHEMA.into(),
        kind,
        host_edges: g.edge_count(),
        minor_edges: h.edge_count(),
        kappa,
        alpha,
        alpha_prime,
        kappa_prime,
        stages,
        output: OutputGraph::new(kind.relation(), out),
        certificate,
    })
}

/// From a κ-expander topological minor `H` of `G` with `e(H) >= α e(G)` to a
/// κ′-expander subgraph `H*` of `G` with `e(H*) >= α′ e(G)`.
pub fn topminor_to_subgraph(
    g: &MultiGraph,
    h: &MultiGraph,
    w: &TopoMinorWitness,
    kappa: Rational,
    alpha: Rational,
    alpha_prime: Rational,
    opts: PipelineOptions,
) -> Result<(MultiGraph, PipelineReport)> {
    let plan = stage_result(MINOR_TO_SUBGRAPH, plan_minor_to_subgraph(kappa, alpha, alpha_prime))?;
    let (out, stage) = stage_result(MINOR_TO_SUBGRAPH, run_minor_stage(g, h, w, &plan, opts))?;
    let report = finish(
        PipelineKind::MinorToSubgraph, g, h, kappa, alpha, alpha_prime, vec![stage], &out, opts,
    )?;
    Ok((out, report))
}

/// From a κ-expander subgraph `H` of `G` with `e(H) >= α e(G)` to a
/// κ′-expander induced subgraph `H*` of `G` with `e(H*) >= α′ e(G)`.
pub fn subgraph_to_induced(
    g: &MultiGraph,
    h: &MultiGraph,
    kappa: Rational,
    alpha: Rational,
    alpha_prime: Rational,
    opts: PipelineOptions,
) -> Result<(MultiGraph, PipelineReport)> {
    let plan = stage_result(SUBGRAPH_TO_INDUCED, plan_subgraph_to_induced(kappa, alpha, alpha_prime))?;
    let (out, stage) = stage_result(SUBGRAPH_TO_INDUCED, run_induced_stage(g, h, &plan, opts))?;
    let report = finish(
        PipelineKind::SubgraphToInduced, g, h, kappa, alpha, alpha_prime, vec![stage], &out, opts,
    )?;
    Ok((out, report))
}

/// Both stages in sequence: a κ-expander topological minor becomes a
/// κ′-expander induced subgraph of `G`.
pub fn topminor_to_induced(
    g: &MultiGraph,
    h: &MultiGraph,
    w: &TopoMinorWitness,
    kappa: Rational,
    alpha: Rational,
    alpha_prime: Rational,
    opts: PipelineOptions,
) -> Result<(MultiGraph, PipelineReport)> {
    let [first, second] = stage_result(MINOR_TO_SUBGRAPH, plan_minor_to_induced(kappa, alpha, alpha_prime))?;
    let (mid, s1) = stage_result(MINOR_TO_SUBGRAPH, run_minor_stage(g, h, w, &first, opts))?;
    let (out, s2) = stage_result(SUBGRAPH_TO_INDUCED, run_induced_stage(g, &mid, &second, opts))?;
    let report = finish(
        PipelineKind::MinorToInduced, g, h, kappa, alpha, alpha_prime, vec![s1, s2], &out, opts,
    )?;
    Ok((out, report))
}
