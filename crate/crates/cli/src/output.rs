//! JSON and human-readable rendering of library results. The JSON shapes
//! here are the stability contract for scripts; the plain output is for
//! people and may change.

use serde_json::{json, Value};

use hypercut::cut::{CutValidationReport, ResidualPair, WienerBreakdown};
use hypercut::pc::{RecognitionReport, ThetaStructure};

/// JSON number when it fits, decimal string beyond `u64::MAX`.
pub fn json_u128(x: u128) -> Value {
    u64::try_from(x)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(x.to_string()))
}

fn pairs_json(pairs: &[ResidualPair]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| json!({"u": p.u.0, "v": p.v.0, "distance": p.distance}))
            .collect(),
    )
}

pub fn breakdown_json(b: &WienerBreakdown) -> Value {
    json!({
        "per_cut": b.per_cut.iter().map(|c| json!({
            "cut": c.cut,
            "component_sizes": c.component_sizes,
            "contribution": json_u128(c.contribution),
        })).collect::<Vec<_>>(),
        "residual": json_u128(b.residual),
        "residual_pairs": pairs_json(&b.residual_pairs),
    })
}

pub fn wiener_json(
    method: &str,
    value: u128,
    breakdown: Option<&WienerBreakdown>,
    nanos: u128,
) -> Value {
    json!({
        "method": method,
        "value": json_u128(value),
        "breakdown": breakdown.map(breakdown_json),
        "timings": {"total_nanos": json_u128(nanos)},
    })
}

pub fn recognition_json(r: &RecognitionReport) -> Value {
    json!({
        "uniform_k": r.uniform_k,
        "edge_gated": r.edge_gated,
        "gate_counterexample": r.gate_counterexample.map(|(v, e)| json!({"vertex": v.0, "edge": e.0})),
        "theta_symmetric": r.theta_symmetric,
        "theta_transitive": r.theta_transitive,
        "theta_counterexample": r.theta_counterexample.map(|(e, f, g)| json!([e.0, f.0, g.0])),
        "convexity_ok": r.convexity_ok,
        "routes_agree": r.convexity_route_verdict().map(|v| v == r.verdict),
        "verdict": r.verdict,
        "reason": r.failure().map(|f| f.to_string()),
    })
}

pub fn recognition_text(r: &RecognitionReport) -> String {
    let mut out = String::new();
    match r.uniform_k {
        Some(k) => out.push_str(&format!("uniform: k={k}\n")),
        None => out.push_str("uniform: no (edge sizes differ or no edges)\n"),
    }
    match r.gate_counterexample {
        None => out.push_str("edge-gated: yes\n"),
        Some((v, e)) => {
            out.push_str(&format!("edge-gated: no (vertex {v} has no gate in edge {e})\n"))
        }
    }
    out.push_str(&format!(
        "theta symmetric: {}\n",
        if r.theta_symmetric { "yes" } else { "no" }
    ));
    match r.theta_counterexample {
        None => out.push_str("theta transitive: yes\n"),
        Some((e, f, g)) => out.push_str(&format!(
            "theta transitive: no ({e} ~ {f} and {f} ~ {g}, but not {e} ~ {g})\n"
        )),
    }
    if let Some(convex) = r.convexity_ok {
        out.push_str(&format!(
            "convex blocks: {}\n",
            if convex { "yes" } else { "no" }
        ));
        let agree = r.convexity_route_verdict() == Some(r.verdict);
        out.push_str(&format!(
            "characterizations agree: {}\n",
            if agree { "yes" } else { "NO" }
        ));
    }
    match r.failure() {
        None => out.push_str("verdict: partial cube-hypergraph\n"),
        Some(reason) => {
            out.push_str(&format!("verdict: not a partial cube-hypergraph ({reason})\n"))
        }
    }
    out
}

pub fn theta_json(s: &ThetaStructure) -> Value {
    json!({
        "classes": s.classes.iter().enumerate().map(|(i, class)| json!({
            "edges": class.iter().map(|e| e.0).collect::<Vec<_>>(),
            "component_sizes": s.component_sizes(i),
        })).collect::<Vec<_>>(),
    })
}

pub fn theta_text(s: &ThetaStructure) -> String {
    let mut out = String::new();
    for (i, class) in s.classes.iter().enumerate() {
        let edges: Vec<usize> = class.iter().map(|e| e.0).collect();
        out.push_str(&format!(
            "class {i}: edges {:?}, component sizes {:?}\n",
            edges,
            s.component_sizes(i)
        ));
    }
    out
}

pub fn validation_json(r: &CutValidationReport) -> Value {
    json!({
        "cuts": r.cuts.iter().enumerate().map(|(i, c)| json!({
            "cut": i,
            "pairwise_disjoint": c.pairwise_disjoint,
            "disconnects": c.disconnects,
            "component_sizes": c.component_sizes,
            "components_convex": c.components_convex,
            "single_crossing": c.single_crossing,
        })).collect::<Vec<_>>(),
        "coverage_identity": r.coverage_identity,
        "unseparated_pairs": pairs_json(&r.unseparated_pairs),
        "method_valid": r.method_valid(),
    })
}

pub fn validation_text(r: &CutValidationReport) -> String {
    let yes_no = |b: bool| if b { "yes" } else { "NO" };
    let mut out = String::new();
    for (i, c) in r.cuts.iter().enumerate() {
        out.push_str(&format!(
            "cut {i}: disjoint={} disconnects={} convex={} single-crossing={} sizes={:?}\n",
            yes_no(c.pairwise_disjoint),
            yes_no(c.disconnects),
            yes_no(c.components_convex),
            yes_no(c.single_crossing),
            c.component_sizes,
        ));
    }
    out.push_str(&format!("coverage identity: {}\n", yes_no(r.coverage_identity)));
    if r.unseparated_pairs.is_empty() {
        out.push_str("unseparated pairs: none\n");
    } else {
        out.push_str(&format!("unseparated pairs: {}\n", r.unseparated_pairs.len()));
        for p in &r.unseparated_pairs {
            out.push_str(&format!("  ({}, {}) at distance {}\n", p.u, p.v, p.distance));
        }
    }
    out.push_str(&format!("method valid: {}\n", yes_no(r.method_valid())));
    out
}
