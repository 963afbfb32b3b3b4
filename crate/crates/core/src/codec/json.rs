//! JSON reports. Keys are sorted; output is pretty-printed UTF-8 with a
//! trailing newline.

use serde_json::{json, Map, Value};

use crate::complexes::{Certificate, CollapseResult, HomologyResult, Presentation};
use crate::decisions::{AnalysisBundle, Claim, DecisionReport, SourceManifoldReport, Verdict};
use crate::model::{Issue, ValidationReport};
use crate::thickening::Certified;

pub trait ReportJson {
    fn to_json(&self) -> Value;
}

pub fn emit_report_json<R: ReportJson + ?Sized>(r: &R) -> String {
    let mut s = serde_json::to_string_pretty(&r.to_json()).expect("json values always serialize");
    s.push('\n');
    s
}

fn homology_json(h: &HomologyResult) -> Value {
    let mut m = Map::new();
    for k in 0..3 {
        let g = h.degree(k);
        m.insert(format!("H{k}"), json!({"rank": g.rank, "torsion": g.torsion}));
    }
    Value::Object(m)
}

fn pi1_json(p: &Presentation) -> Value {
    let certificate = match &p.certificate {
        None => Value::Null,
        Some(Certificate::Empty) => json!({"kind": "empty"}),
        Some(Certificate::Abelianization { rank, torsion }) => {
            json!({"kind": "abelianization", "rank": rank, "torsion": torsion})
        }
        Some(Certificate::FiniteImage { degree, images }) => {
            json!({"kind": "finite-image", "degree": degree, "images": images})
        }
    };
    json!({
        "status": p.status.as_str(),
        "presentation": p.to_string(),
        "generators": p.generators.len(),
        "relators": p.relators.len(),
        "certificate": certificate,
    })
}

fn verdict_json(v: Verdict) -> Value {
    match v {
        Verdict::Holds => Value::Bool(true),
        Verdict::Fails => Value::Bool(false),
        Verdict::Unknown => Value::String("unknown".into()),
    }
}

impl ReportJson for Claim {
    fn to_json(&self) -> Value {
        let hyps: Vec<Value> = self
            .hypotheses
            .iter()
            .map(|h| json!({"name": h.name, "holds": verdict_json(h.verdict)}))
            .collect();
        json!({
            "claim": self.statement,
            "paper_ref": self.citation,
            "hypotheses": hyps,
            "verdict": self.conclusion.as_str(),
            "caveats": self.caveats,
            "corroboration": self.corroboration,
        })
    }
}

impl ReportJson for DecisionReport {
    fn to_json(&self) -> Value {
        json!({
            "polyhedron": self.polyhedron,
            "dimension": self.dimension,
            "decisions": self.claims.iter().map(Claim::to_json).collect::<Vec<_>>(),
        })
    }
}

impl ReportJson for SourceManifoldReport {
    fn to_json(&self) -> Value {
        json!({
            "dimension": self.dimension,
            "H1": {"rank": self.h1.rank, "torsion": self.h1.torsion},
            "pi1": self.pi1.as_str(),
            "H2_free": self.h2_free,
            "rank_H2": self.rank_h2,
            "transported_degrees": [self.transported.start(), self.transported.end()],
        })
    }
}

impl ReportJson for AnalysisBundle {
    fn to_json(&self) -> Value {
        json!({
            "polyhedron": self.polyhedron,
            "dimension": self.dimension,
            "euler": self.euler,
            "homology": homology_json(&self.homology),
            "pi1": pi1_json(&self.pi1),
            "compatible": self.compatible.map(Value::Bool).unwrap_or_else(|| Value::String("n/a".into())),
            "double_points": self.double_points,
            "source": self.source.to_json(),
            "decisions": self.decisions.iter().map(Claim::to_json).collect::<Vec<_>>(),
        })
    }
}

fn issue_json(i: &Issue) -> Value {
    json!({"code": i.code.as_str(), "location": i.location, "message": i.message})
}

impl ReportJson for ValidationReport {
    fn to_json(&self) -> Value {
        let s = &self.summary;
        json!({
            "ok": self.ok,
            "errors": self.errors.iter().map(issue_json).collect::<Vec<_>>(),
            "warnings": self.warnings.iter().map(issue_json).collect::<Vec<_>>(),
            "summary": {
                "double_points": s.double_points,
                "triple_intervals": s.triple_intervals,
                "triple_circles": s.triple_circles,
                "free_circles": s.free_circles,
                "regions": s.regions,
            },
        })
    }
}

impl ReportJson for Certified {
    fn to_json(&self) -> Value {
        let m = &self.manifold;
        let boundary: Vec<Value> = m
            .boundary
            .iter()
            .map(|b| json!({"euler": b.euler, "orientable": b.orientable, "triangles": b.triangles}))
            .collect();
        let mut h = homology_json(&self.homology);
        let g = self.homology.degree(3);
        h["H3"] = json!({"rank": g.rank, "torsion": g.torsion});
        json!({
            "manifold": m.is_manifold,
            "orientable": m.orientable,
            "connected": m.connected,
            "cells": m.cells,
            "euler": m.euler,
            "boundary": boundary,
            "homology": h,
            "witness": {"cellular": self.witness.cellular, "covering": self.witness.covering},
        })
    }
}

impl ReportJson for CollapseResult {
    fn to_json(&self) -> Value {
        let seq: Vec<Value> = self.sequence.iter().map(|s| json!([s.face, s.coface])).collect();
        json!({
            "outcome": self.outcome.as_str(),
            "steps": self.sequence.len(),
            "sequence": seq,
            "residual": self.residual_counts(),
            "note": self.note,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::decisions::{analyze, DecisionOptions};

    #[test]
    fn bundle_schema() {
        let b = analyze(&catalog("disc").unwrap(), 4, &DecisionOptions::default()).unwrap();
        let text = emit_report_json(&b);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v, b.to_json());
        assert_eq!(v["compatible"], Value::Bool(true));
        assert_eq!(v["double_points"], 0);
        assert_eq!(v["homology"]["H0"]["rank"], 1);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
