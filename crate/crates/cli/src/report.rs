//! JSON renderings of results. Every document carries `schema_version`.

use serde_json::{json, Map, Value};

use lefschetz_core::betti::BettiTable;
use lefschetz_core::ci::{RestrictionReport, SplittingType};
use lefschetz_core::construction::ConstructionReport;
use lefschetz_core::lefschetz::{Certificate, LefschetzVerdict};
use lefschetz_core::Scalar;

pub const SCHEMA_VERSION: u32 = 1;

/// Wraps a body as a top-level document for `command`.
pub fn document(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    if let Value::Object(b) = body {
        m.extend(b);
    } else {
        m.insert("result".into(), body);
    }
    Value::Object(m)
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| json!(s.to_string())).collect())
}

pub fn betti(table: &BettiTable) -> Value {
    let entries: Vec<Value> = table
        .entries()
        .map(|((i, j), v)| json!({ "i": i, "j": j, "degree": i + j, "value": v }))
        .collect();
    json!({ "num_vars": table.num_vars(), "entries": entries, "diagram": table.diagram() })
}

/// One-line description of a certificate.
pub fn describe_certificate(c: &Certificate) -> String {
    match c {
        Certificate::CommonKernel { degree, step, basis } => {
            let elems: Vec<String> = basis.iter().map(|p| p.render()).collect();
            let what = if *step == 1 {
                String::new()
            } else {
                format!(" of every ell^{step}")
            };
            format!("{} in kernel{what} at degree {degree}", elems.join(", "))
        }
        Certificate::NilpotentForm { exponent } => format!("ell^{exponent} = 0 for every linear form ell"),
        Certificate::GridExhaustion {
            step: (i, d),
            degree,
            evaluations,
        } => format!(
            "x ell^{d} : A_{i} -> A_{} drops rank at all {evaluations} grid points (minor degree {degree})",
            i + d
        ),
        Certificate::Probabilistic { epsilon } => {
            format!("every sampled form failed; a general form fails with error bound {epsilon}")
        }
    }
}

pub fn certificate(c: &Certificate) -> Value {
    let mut v = match c {
        Certificate::CommonKernel { degree, step, basis } => json!({
            "kind": "common_kernel",
            "degree": degree,
            "step": step,
            "basis": basis.iter().map(|p| p.render()).collect::<Vec<_>>(),
        }),
        Certificate::NilpotentForm { exponent } => json!({ "kind": "nilpotent_form", "exponent": exponent }),
        Certificate::GridExhaustion {
            step,
            degree,
            evaluations,
        } => json!({
            "kind": "grid_exhaustion",
            "step": [step.0, step.1],
            "minor_degree": degree,
            "evaluations": evaluations,
        }),
        Certificate::Probabilistic { epsilon } => json!({ "kind": "probabilistic", "epsilon": epsilon.to_string() }),
    };
    v["description"] = json!(describe_certificate(c));
    v
}

pub fn verdict(v: &LefschetzVerdict) -> Value {
    json!({
        "property": v.property.name(),
        "holds": v.holds,
        "exact": v.is_exact(),
        "witness": v.witness.as_ref().map(|w| w.render()),
        "failing_steps": v.failing_steps.iter().map(|&(i, d)| json!([i, d])).collect::<Vec<_>>(),
        "certificate": v.certificate.as_ref().map(certificate),
        "seed": v.seed,
        "coeff_bound": v.coeff_bound,
        "trials": v.trials.iter().map(|t| json!({
            "stream": t.stream,
            "coefficients": scalars(&t.coefficients),
            "failing_steps": t.failing_steps.iter().map(|&(i, d)| json!([i, d])).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// Human summary of a verdict.
pub fn describe_verdict(v: &LefschetzVerdict) -> String {
    if v.holds {
        format!(
            "{} holds; witness {}",
            v.property.name(),
            v.witness.as_ref().map(|w| w.render()).unwrap_or_default()
        )
    } else {
        let steps: Vec<String> = v.failing_steps.iter().map(|(i, d)| format!("({i},{d})")).collect();
        let cert = v.certificate.as_ref().map(describe_certificate).unwrap_or_default();
        format!(
            "{} fails{}; failing steps (i,d): {}; certificate: {cert}",
            v.property.name(),
            if v.is_exact() { "" } else { " (probabilistic)" },
            steps.join(" ")
        )
    }
}

pub fn construction(r: &ConstructionReport) -> Value {
    json!({
        "mode": format!("{:?}", r.mode),
        "hilbert_function": r.hilbert_function,
        "checks": {
            "hilbert_function": r.hilbert_ok,
            "lefschetz_x0": r.lefschetz_ok,
            "socle": r.socle_ok,
            "betti": r.betti_ok,
        },
        "x0_failing_steps": r.x0_failing_steps.iter().map(|&(i, d)| json!([i, d])).collect::<Vec<_>>(),
        "socle_type": r.socle_type,
        "phi": r.phi,
        "betti": betti(&r.betti),
        "bounds": betti(&r.bounds),
        "all_pass": r.all_pass(),
    })
}

fn splitting(s: SplittingType) -> Value {
    json!([s.e1, s.e2])
}

pub fn restriction(r: &RestrictionReport) -> Value {
    json!({
        "splitting": splitting(r.splitting),
        "predicted_splitting": r.predicted_splitting.map(splitting),
        "splitting_ok": r.splitting_ok(),
        "mu_bar": r.mu_bar,
        "predicted_mu_bar": r.predicted_mu_bar,
        "mu_ok": r.mu_ok(),
        "iplusl_table": betti(&r.iplusl_table),
        "predicted_table": betti(&r.predicted_table),
        "table_ok": r.table_ok(),
    })
}
