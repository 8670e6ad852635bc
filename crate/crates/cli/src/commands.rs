use std::path::{Path, PathBuf};

use grs_lab_core::construction::{self, check_stage_lemmas, ConstructionError, ConstructionState, DecodeContext, StageLemma};
use grs_lab_core::dichotomy::{self, DichotomyWitness, GrsError, PipelineOutcome};
use grs_lab_core::lattice::{self, check_length3, check_no_double_cover, validate_lattice, LatticeError, LatticeSpec};
use grs_lab_core::{Graph, GraphError, PatternKind};
use serde_json::{json, Value};
use thiserror::Error;

use crate::report::RunReport;
use crate::FArgs;

/// Everything that ends a run with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Grs(#[from] GrsError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn parse_list(text: &str, what: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Input(format!("{what}: `{t}` is not a natural number"))))
        .collect()
}

/// `5,0,7` or `seed:N,len:T`.
pub fn parse_f(spec: &str) -> Result<Vec<u64>, CliError> {
    if let Some(rest) = spec.strip_prefix("seed:") {
        let (seed, len) = rest
            .split_once(",len:")
            .ok_or_else(|| CliError::Input(format!("--f `{spec}`: expected seed:N,len:T")))?;
        let seed = seed.parse().map_err(|_| CliError::Input(format!("--f: bad seed `{seed}`")))?;
        let len = len.parse().map_err(|_| CliError::Input(format!("--f: bad length `{len}`")))?;
        return Ok(construction::seeded_injective(seed, len));
    }
    parse_list(spec, "--f")
}

fn f_parameters(input: &FArgs, f: &[u64]) -> Value {
    json!({ "f_spec": input.f, "f": f, "stages": input.stages })
}

pub fn construct(input: &FArgs, out: &Path, dot: Option<&Path>, trace: bool) -> Result<RunReport, CliError> {
    let f = parse_f(&input.f)?;
    let history = construction::run(&f, input.stages)?;
    if trace {
        for s in 1..history.snapshots().len() {
            let snap = history.snapshot(s);
            let edges: Vec<[u64; 2]> = history.new_edges(s).iter().map(|&(u, v)| [u, v]).collect();
            println!("{}", json!({ "stage": snap.stage, "k": snap.k, "coding": snap.coding, "new_edges": edges }));
        }
    }
    let graph = history.final_graph();
    write_file(out, &graph.to_json())?;
    if let Some(path) = dot {
        write_file(path, &graph.to_dot())?;
    }
    let mut report = RunReport::new("construct", f_parameters(input, &f));
    let last = history.final_state();
    report.results = json!({
        "k": last.k(),
        "vertices": last.vertex_count(),
        "edges": last.edge_count(),
        "coding": last.coding(),
        "stable_codings": history.stable_codings(),
    });
    let violation = history.coding_change_violation();
    report.check("coding_change_law", violation.is_none(), violation.map(|(k, s)| json!({ "k": k, "s": s })));
    Ok(report)
}

pub fn verify(input: &FArgs, exhaustive: bool) -> Result<RunReport, CliError> {
    let f = parse_f(&input.f)?;
    let history = construction::run(&f, input.stages)?;
    let mut report = RunReport::new("verify", json!({ "f_spec": input.f, "f": f, "stages": input.stages, "exhaustive_chordless": exhaustive }));
    let mut state = ConstructionState::init();
    let mut per_stage = Vec::with_capacity(input.stages + 1);
    let mut first_failure: Vec<Option<Value>> = vec![None; StageLemma::ALL.len()];
    let mut chordless: Option<Value> = None;
    for s in 0..=input.stages {
        if s > 0 {
            state.advance(f[s - 1]);
        }
        let lemmas = check_stage_lemmas(&state);
        for (slot, c) in first_failure.iter_mut().zip(&lemmas.checks) {
            if !c.passed && slot.is_none() {
                *slot = Some(json!({ "stage": s, "vertices": c.witness }));
            }
        }
        if exhaustive && chordless.is_none() {
            if let Some(p) = construction::check_no_chordless4(&state) {
                chordless = Some(json!({ "stage": s, "path": p }));
            }
        }
        per_stage.push(lemmas);
    }
    for (lemma, failure) in StageLemma::ALL.iter().zip(first_failure) {
        let name = format!("lemma.{}", to_value(lemma).as_str().expect("unit variant"));
        report.check(name, failure.is_none(), failure);
    }
    if exhaustive {
        report.check("no_chordless_4path", chordless.is_none(), chordless);
    }
    let violation = history.coding_change_violation();
    report.check("coding_change_law", violation.is_none(), violation.map(|(k, s)| json!({ "k": k, "s": s })));
    report.results = json!({ "stages": per_stage });
    Ok(report)
}

pub fn decode(input: &FArgs, pattern: &str, query: &str) -> Result<RunReport, CliError> {
    let f = parse_f(&input.f)?;
    let pattern: PatternKind = pattern.parse().map_err(CliError::Input)?;
    let queries = parse_list(query, "--query")?;
    let history = construction::run(&f, input.stages)?;
    let embedding = history.embed_via_coding(pattern)?;
    let ctx = DecodeContext::new(history.final_state(), embedding)
        .map_err(|e| CliError::Input(format!("embedding rejected: {e}")))?;
    let mut answers = Vec::with_capacity(queries.len());
    let mut mismatches = Vec::new();
    for &k in &queries {
        let decoded = ctx.decode_range(&f, k).map_err(|e| CliError::Input(e.to_string()))?;
        let expected = f.contains(&k);
        if decoded != expected {
            mismatches.push(k);
        }
        answers.push(json!({ "k": k, "decoded": decoded, "in_range": expected }));
    }
    let mut report = RunReport::new(
        "decode",
        json!({ "f_spec": input.f, "f": f, "stages": input.stages, "pattern": pattern.to_string(), "query": queries }),
    );
    report.results = json!({ "embedding": ctx.embedding, "gprime": ctx.gprime, "answers": answers });
    let witness = (!mismatches.is_empty()).then(|| json!({ "queries": mismatches }));
    report.check("decode_matches_range", mismatches.is_empty(), witness);
    Ok(report)
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(Graph::from_json(&read_file(path)?)?)
}

pub fn dichotomy(graph: &Path, n: usize, witness_out: Option<&Path>) -> Result<RunReport, CliError> {
    let g = load_graph(graph)?;
    let witness = dichotomy::dichotomy(&g, n)?;
    if let Some(path) = witness_out {
        write_file(path, &format!("{}\n", serde_json::to_string_pretty(&witness).expect("serializes")))?;
    }
    let mut report = RunReport::new("dichotomy", json!({ "graph": graph, "n": n }));
    match &witness {
        DichotomyWitness::ChordlessPath { path } => {
            let ok = path.len() == n && g.is_chordless(path).unwrap_or(false);
            report.check("witness_valid", ok, (!ok).then(|| to_value(path)));
        }
        DichotomyWitness::K22Copy { embedding } => {
            let err = embedding.validate(&g).err();
            report.check("witness_valid", err.is_none(), err.map(|e| json!(e.to_string())));
        }
        DichotomyWitness::Neither => {}
    }
    report.results = json!({ "kind": witness.kind(), "witness": witness });
    Ok(report)
}

pub fn mn_search(n: usize, max_size: usize, out: Option<&Path>) -> Result<RunReport, CliError> {
    let result = dichotomy::estimate_min_m(n, max_size)?;
    if let Some(path) = out {
        write_file(path, &format!("{}\n", serde_json::to_string_pretty(&result).expect("serializes")))?;
    }
    let mut report = RunReport::new("mn-search", json!({ "n": n, "max_size": max_size }));
    report.results = to_value(&result);
    Ok(report)
}

pub fn pipeline(graph: &Path, n: usize) -> Result<RunReport, CliError> {
    let g = load_graph(graph)?;
    let trace = dichotomy::run_pipeline(&g, n)?;
    let mut report = RunReport::new("pipeline", json!({ "graph": graph, "n": n }));
    match &trace.outcome {
        PipelineOutcome::LongIncreasingPath { path } => {
            let ok = path.len() == n && g.is_chordless(path).unwrap_or(false);
            report.check("witness_valid", ok, (!ok).then(|| to_value(path)));
        }
        PipelineOutcome::K22 { embedding } => {
            let err = embedding.validate(&g).err();
            report.check("witness_valid", err.is_none(), err.map(|e| json!(e.to_string())));
        }
        PipelineOutcome::Chordless { extraction } => {
            let ok = extraction.path.len() == n && g.is_chordless(&extraction.path).unwrap_or(false);
            report.check("witness_valid", ok, (!ok).then(|| to_value(&extraction.path)));
            let breach = extraction.steps.iter().zip(&extraction.anchors[1..]).position(|(y, x)| y > x);
            report.check("greedy_progress", breach.is_none(), breach.map(|i| json!({ "step": i })));
        }
        PipelineOutcome::NoHomogeneousSet => {}
    }
    report.results = to_value(&trace);
    Ok(report)
}

fn load_lattice(path: &Path) -> Result<LatticeSpec, CliError> {
    Ok(LatticeSpec::from_json(&read_file(path)?)?)
}

pub fn lattice_verify(path: &Path) -> Result<RunReport, CliError> {
    let spec = load_lattice(path)?;
    let poset = spec.poset()?;
    let mut report = RunReport::new("lattice verify", json!({ "lattice": path }));
    let axioms = validate_lattice(&poset);
    report.check("lattice_axioms", axioms.is_ok(), axioms.as_ref().err().map(to_value));
    let double = check_no_double_cover(&poset);
    report.check("no_double_cover", double.is_none(), double.map(|w| json!(w)));
    let mut results = json!({ "n": spec.n, "covers": poset.covers() });
    if axioms.is_ok() {
        let lat = lattice::FiniteLattice::new(poset).expect("validated above");
        let bad = (0..lat.len()).find(|&x| !lat.is_bound(x) && !lat.is_atom(x) && !lat.is_coatom(x));
        debug_assert_eq!(bad.is_none(), check_length3(&lat));
        report.check("length3", bad.is_none(), bad.map(|x| json!({ "element": x })));
        if !spec.generators.is_empty() {
            match lattice::closure_and_rank(&lat, &spec.generators) {
                Ok(ranks) => {
                    report.check("generates", true, None);
                    results["ranks"] = to_value(&ranks.rank);
                }
                Err(LatticeError::Coverage { unreached }) => {
                    report.check("generates", false, Some(json!({ "unreached": unreached })));
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    report.results = results;
    Ok(report)
}

pub fn lattice_fences(path: &Path, target: usize, dot: Option<&Path>) -> Result<RunReport, CliError> {
    let spec = load_lattice(path)?;
    let poset = spec.poset()?;
    if let Some(path) = dot {
        write_file(path, &poset.to_hasse_dot())?;
    }
    let mut report = RunReport::new("lattice fences", json!({ "lattice": path, "target": target }));
    let lat = match lattice::load_length3(&spec) {
        Ok(lat) => lat,
        Err(LatticeError::Axiom(v)) => {
            report.check("lattice_axioms", false, Some(to_value(&v)));
            return Ok(report);
        }
        Err(LatticeError::NotLength3) => {
            report.check("length3", false, None);
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    let search = lattice::find_fences(&lat, &spec.generators, target)?;
    let audit = lattice::audit_tree(&lat, &search.ranks, &search.tree, search.ranks.max_rank());
    report.check("tree_properties", audit.is_empty(), audit.first().map(to_value));
    if let Some(fence) = &search.fence {
        let v = lattice::validate_fence(&lat, &fence.0).err();
        report.check("fence_valid", v.is_none(), v.map(|e| to_value(&e)));
    }
    report.results = json!({
        "fence": search.fence,
        "branch": search.branch,
        "branches_tried": search.branches_tried,
        "max_rank": search.ranks.max_rank(),
        "tree_nodes": search.tree.node_count(),
    });
    Ok(report)
}
