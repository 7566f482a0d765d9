//! Machine-readable reports and their plain-text rendering.

use std::collections::BTreeMap;
use std::fmt;

use probe_block_core::graph::Vertex;
use probe_block_core::probe::{RecognitionOutcome, Refutation};
use probe_block_core::structure::KxyzFailure;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RefutationReport {
    pub stage: String,
    pub detail: Value,
}

/// Result of `check` and `oracle`. On `yes` the certificate fields are set,
/// on `no` the refutation is.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliReport {
    pub verdict: String,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n1: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n2: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub added_edges: Option<Vec<(Vertex, Vertex)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<RefutationReport>,
    /// Milliseconds per stage.
    pub timing: BTreeMap<String, f64>,
}

impl CliReport {
    pub fn yes(
        class: &str,
        n1: Vec<Vertex>,
        n2: Vec<Vertex>,
        added: Vec<(Vertex, Vertex)>,
    ) -> Self {
        CliReport {
            verdict: "yes".into(),
            class: class.into(),
            n1: Some(n1),
            n2: Some(n2),
            added_edges: Some(added),
            refutation: None,
            timing: BTreeMap::new(),
        }
    }

    pub fn no(class: &str, stage: &str, detail: Value) -> Self {
        CliReport {
            verdict: "no".into(),
            class: class.into(),
            n1: None,
            n2: None,
            added_edges: None,
            refutation: Some(RefutationReport {
                stage: stage.into(),
                detail,
            }),
            timing: BTreeMap::new(),
        }
    }

    pub fn from_outcome(class: &str, outcome: &RecognitionOutcome<'_>) -> Self {
        match outcome {
            RecognitionOutcome::Yes(c) => CliReport::yes(
                class,
                c.partition.n1().to_vec(),
                c.partition.n2().to_vec(),
                c.embedding.added.clone(),
            ),
            RecognitionOutcome::No(r) => {
                let (stage, detail) = refutation_detail(r);
                CliReport::no(class, stage, detail)
            }
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == "yes"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

fn kxyz_detail(f: &KxyzFailure) -> Value {
    match *f {
        KxyzFailure::TwoComponents { first, second } => {
            json!({"reason": "two-components", "edges": [first, second]})
        }
        KxyzFailure::OddCycle { edge } => json!({"reason": "odd-cycle", "edge": edge}),
        KxyzFailure::MissingCrossEdge { x, y } => {
            json!({"reason": "missing-cross-edge", "pair": [x, y]})
        }
    }
}

/// Stage name and JSON detail for a refutation.
pub fn refutation_detail(r: &Refutation) -> (&'static str, Value) {
    let detail = match r {
        Refutation::BadBlock { block, reason } => {
            let mut d = kxyz_detail(reason);
            d["block"] = json!(block);
            d
        }
        Refutation::NotKxyz(reason) => kxyz_detail(reason),
        Refutation::ImpossibleBranch {
            case,
            block,
            cut_vertex,
        } => {
            json!({"case": case.tag(), "block": block, "cut_vertex": cut_vertex})
        }
        Refutation::VerificationFailed { pair } => json!(pair),
        Refutation::DependentSets { set, edge } => json!({"set": set, "edge": edge}),
        Refutation::NoValidPartition { candidates } => json!({"candidates": candidates}),
    };
    (r.stage(), detail)
}

fn list(v: &[Vertex]) -> String {
    if v.is_empty() {
        "(none)".into()
    } else {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for CliReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "class: {}", self.class)?;
        writeln!(f, "verdict: {}", self.verdict)?;
        if let Some(n1) = &self.n1 {
            writeln!(f, "N1: {}", list(n1))?;
        }
        if let Some(n2) = &self.n2 {
            writeln!(f, "N2: {}", list(n2))?;
        }
        if let Some(added) = &self.added_edges {
            let s: Vec<_> = added.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(
                f,
                "added edges ({}): {}",
                s.len(),
                if s.is_empty() {
                    "(none)".into()
                } else {
                    s.join(" ")
                }
            )?;
        }
        if let Some(r) = &self.refutation {
            writeln!(f, "refutation: {} {}", r.stage, r.detail)?;
        }
        let t: Vec<_> = self
            .timing
            .iter()
            .map(|(k, v)| format!("{k}={v:.3}ms"))
            .collect();
        writeln!(f, "timing: {}", t.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use probe_block_core::graph::Graph;
    use probe_block_core::probe::recognize_2probe_block;

    #[test]
    fn c4_report() {
        let c4 = Graph::cycle(4);
        let r = CliReport::from_outcome("2probe-block", &recognize_2probe_block(&c4));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "yes");
        assert_eq!(v["n1"], json!([0, 2]));
        assert_eq!(v["added_edges"], json!([[0, 2], [1, 3]]));
        assert!(v.get("refutation").is_none());
        let text = r.to_string();
        assert!(text.contains("added edges (2): 0-2 1-3"));
    }

    #[test]
    fn no_report_has_only_refutation() {
        let r = CliReport::from_outcome("2probe-block", &recognize_2probe_block(&Graph::cycle(5)));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "no");
        assert_eq!(v["refutation"]["stage"], "block-structure");
        assert_eq!(v["refutation"]["detail"]["reason"], "odd-cycle");
        assert!(v.get("n1").is_none() && v.get("added_edges").is_none());
    }
}
