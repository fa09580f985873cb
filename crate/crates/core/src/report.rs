//! Reports: structured JSON (`ubs-report/1`), plain text and DOT.
//!
//! JSON objects are key-sorted and every list is produced in a fixed
//! order, so equal runs give byte-identical output.

use std::fmt::Write as _;

use petgraph::dot::{Config, Dot};
use serde_json::{json, Value};

use crate::decompose::{Comparison, Decomposition, PrecGraph};
use crate::dual::{CubeComplexSkeleton, MedianVerdict};
use crate::error::Error;
use crate::hyp::{Decided, HypRef};
use crate::hypset::HypSet;
use crate::ubs::{MinimalityCertificate, Poset, UbsCertificate};
use crate::wallspace::FiniteWallspace;

pub const SCHEMA: &str = "ubs-report/1";

fn refs(hs: &[HypRef]) -> Value {
    hs.iter().map(|h| Value::String(h.to_string())).collect()
}

fn set(s: &HypSet) -> Value {
    Value::String(s.to_string())
}

pub fn decided_json(d: Decided) -> Value {
    match d {
        Decided::True => json!(true),
        Decided::False => json!(false),
        Decided::Unknown => json!("unknown"),
    }
}

/// Wraps a command result with the run parameters.
pub fn envelope(command: &str, instance: &str, horizon: u32, seed: u64, verdict: &str, result: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "instance": instance,
        "horizon": horizon,
        "seed": seed,
        "verdict": verdict,
        "result": result,
    })
}

pub fn error_json(e: &Error) -> Value {
    let kind = match e {
        Error::Input { .. } | Error::UnknownWall(_) | Error::OutOfBounds { .. } => "input",
        Error::Resource { .. } => "resource",
        Error::Realization { .. } => "realization",
        Error::Precondition { .. } => "precondition",
        Error::Consistency { .. } => "consistency",
        Error::Cycle(_) => "cycle",
        Error::Undecided(..) => "undecided",
    };
    let mut v = json!({ "kind": kind, "message": e.to_string(), "witness": refs(e.witness()) });
    if let Error::Input { position, .. } = e {
        v["position"] = json!(position);
    }
    if let Error::Cycle(c) = e {
        v["cycle"] = json!(c);
    }
    v
}

pub fn ubs_json(c: &UbsCertificate) -> Value {
    json!({
        "subject": set(&c.subject),
        "is_ubs": c.is_ubs(),
        "infinite": c.infinite,
        "unidirectional": c.unidirectional,
        "inseparable": c.inseparable,
        "facing_triple_free": c.facing_triple_free,
        "horizon_checked": c.horizon_checked,
        "bidirectional_witness": c.bidirectional_witness.map(|h| h.to_string()),
        "separation_witness": c.separation_witness.map(|t| refs(&t)),
        "facing_witness": c.facing_witness.map(|t| refs(&t)),
    })
}

pub fn minimality_json(m: &MinimalityCertificate) -> Value {
    json!({
        "ubs": ubs_json(&m.ubs),
        "minimal": m.minimal,
        "approximate": m.approximate,
        "single_tail": m.single_tail.map(|(f, i)| json!({ "family": f, "from": i })),
    })
}

pub fn prec_graph_json(g: &PrecGraph) -> Value {
    json!({ "vertices": g.vertices, "edges": g.edges, "unknown": g.unknown })
}

pub fn decomposition_json(d: &Decomposition, issues: &[String]) -> Value {
    let components: Vec<Value> = d
        .components
        .iter()
        .enumerate()
        .map(|(k, c)| {
            json!({
                "id": k,
                "set": set(&c.set),
                "chain": c.chain.as_ref().map(|ch| ch.to_string()),
                "minimal": c.certificate.minimal,
                "approximate": c.certificate.approximate,
            })
        })
        .collect();
    let trace: Vec<Value> = d
        .trace
        .iter()
        .map(|t| {
            json!({
                "input": set(&t.input),
                "chain": t.chain.to_string(),
                "closure": set(&t.closure),
                "vplus": set(&t.vplus),
                "vminus": set(&t.vminus),
                "case": t.case,
                "absorbed": set(&t.absorbed),
                "fibers": t.fibers.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
                "component": t.component,
            })
        })
        .collect();
    json!({
        "ambient": d.ambient,
        "input": set(&d.input),
        "horizon": d.horizon,
        "dimension": d.dimension.to_string(),
        "components": components,
        "residue": set(&d.residue),
        "continuation": d.continuation.as_ref().map(set),
        "prec_graph": prec_graph_json(&d.prec_graph),
        "linear_order": d.linear_order,
        "trace": trace,
        "issues": issues,
    })
}

pub fn decomposition_text(d: &Decomposition, issues: &[String]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "ambient {} at horizon {}, dimension {}",
        d.ambient, d.horizon, d.dimension
    );
    let _ = writeln!(s, "input {}", d.input);
    let _ = writeln!(s, "{} components", d.components.len());
    for (k, c) in d.components.iter().enumerate() {
        let chain = c.chain.as_ref().map(|ch| ch.to_string()).unwrap_or_default();
        let _ = writeln!(s, "  U{k} = {} chain {chain}", c.set);
    }
    let _ = writeln!(s, "residue {}", d.residue);
    if let Some(c) = &d.continuation {
        let _ = writeln!(s, "continuation {c} (output truncated)");
    }
    let edges: Vec<String> = d.prec_graph.edges.iter().map(|(a, b)| format!("U{a}->U{b}")).collect();
    let _ = writeln!(s, "prec edges: {}", edges.join(" "));
    match &d.linear_order {
        Some(o) => {
            let o: Vec<String> = o.iter().map(|k| format!("U{k}")).collect();
            let _ = writeln!(s, "order: {}", o.join(" < "));
        }
        None => {
            let _ = writeln!(s, "order: none");
        }
    }
    for t in &d.trace {
        let _ = writeln!(
            s,
            "  step -> U{}: case {} chain {} vminus {} vplus {} absorbed {}",
            t.component, t.case, t.chain, t.vminus, t.vplus, t.absorbed
        );
    }
    for i in issues {
        let _ = writeln!(s, "issue: {i}");
    }
    s
}

pub fn comparison_json(c: &Comparison, left: &[HypSet], right: &[HypSet]) -> Value {
    json!({
        "equal": c.equal,
        "left": left.iter().map(set).collect::<Vec<_>>(),
        "right": right.iter().map(set).collect::<Vec<_>>(),
        "matching": c.matching,
        "unmatched_left": c.unmatched_left.iter().map(|&k| set(&left[k])).collect::<Vec<_>>(),
        "unmatched_right": c.unmatched_right.iter().map(|&k| set(&right[k])).collect::<Vec<_>>(),
        "finite_dimensional": c.finite_dimensional,
        "uniqueness_violation": c.uniqueness_violation,
    })
}

pub fn comparison_text(c: &Comparison, left: &[HypSet], right: &[HypSet]) -> String {
    let mut s = format!("{c}\n");
    for &k in &c.unmatched_left {
        let _ = writeln!(s, "  unmatched left  {}", left[k]);
    }
    for &k in &c.unmatched_right {
        let _ = writeln!(s, "  unmatched right {}", right[k]);
    }
    s
}

pub fn dual_json(sk: &CubeComplexSkeleton, median: Option<&MedianVerdict>) -> Value {
    json!({
        "walls": sk.walls,
        "vertices": sk.vertices.len(),
        "edges": sk.edges.len(),
        "dimension": sk.dimension(),
        "cube_count_by_dim": sk.cube_count_by_dim,
        "median": median.map(|m| json!({
            "holds": m.holds(),
            "connected": m.connected,
            "isometric": m.isometric,
            "violation": m.violation.as_ref().map(|v| json!({ "triple": v.triple, "medians": v.medians })),
        })),
    })
}

pub fn dual_text(sk: &CubeComplexSkeleton, median: Option<&MedianVerdict>) -> String {
    let mut s = format!(
        "dual complex on {} walls: {} vertices, {} edges, dimension {}\n",
        sk.walls.len(),
        sk.vertices.len(),
        sk.edges.len(),
        sk.dimension()
    );
    for (d, n) in sk.cube_count_by_dim.iter().enumerate() {
        let _ = writeln!(s, "  {d}-cubes: {n}");
    }
    if let Some(m) = median {
        let _ = writeln!(s, "median graph: {}", if m.holds() { "yes" } else { "no" });
    }
    s
}

pub fn poset_json(classes: &[HypSet], p: &Poset) -> Value {
    json!({
        "sets": classes.iter().map(set).collect::<Vec<_>>(),
        "class_of": p.class_of,
        "representatives": p.representatives,
        "below": p.below,
    })
}

pub fn poset_text(classes: &[HypSet], p: &Poset) -> String {
    let mut s = String::new();
    for (k, c) in classes.iter().enumerate() {
        let _ = writeln!(s, "S{k} = {c} (class {})", p.class_of[k]);
    }
    for (a, b) in &p.below {
        let _ = writeln!(s, "  class {a} < class {b}");
    }
    s
}

pub fn prec_graph_dot(g: &PrecGraph) -> String {
    let mut s = String::from("digraph prec {\n");
    for v in 0..g.vertices {
        let _ = writeln!(s, "  {v} [label=\"U{v}\"];");
    }
    for (a, b) in &g.edges {
        let _ = writeln!(s, "  {a} -> {b};");
    }
    for (a, b) in &g.unknown {
        let _ = writeln!(s, "  {a} -> {b} [style=dashed, dir=none];");
    }
    s.push_str("}\n");
    s
}

pub fn crossing_graph_dot(ws: &FiniteWallspace) -> String {
    format!("{:?}", Dot::with_config(&ws.crossing_graph(), &[Config::EdgeNoLabel]))
}

pub fn skeleton_dot(sk: &CubeComplexSkeleton) -> String {
    format!("{:?}", Dot::with_config(&sk.graph(), &[Config::EdgeNoLabel]))
}

/// Serializes with a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
