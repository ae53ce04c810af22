use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::graph::Graph;
use crate::graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Falsified,
    Skipped,
}

/// Rounds to 12 significant digits so serialized reports stay short and stable.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// A tree named in a report, reproducible from its graph6 string alone.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub label: String,
    pub graph6: String,
    pub eps1: f64,
    pub eps_n: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Witness {
    pub fn new(label: impl Into<String>, g: &Graph, eps1: f64, eps_n: f64) -> Witness {
        Witness {
            label: label.into(),
            graph6: graph6::encode(g).expect("verifier orders fit graph6"),
            eps1: round_sig(eps1),
            eps_n: round_sig(eps_n),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Witness {
        self.detail = Some(detail.into());
        self
    }
}

/// Outcome of one check for one parameter tuple.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    /// Instances that reached a verdict (passed or failed).
    pub instances: u64,
    /// Instances left without a verdict (numerically ambiguous or vacuous).
    pub skipped_instances: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tool_version: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.status != Status::Falsified
    }

    /// One JSON line. Wall-clock time is only included on request, which keeps
    /// the default output byte-identical between runs.
    pub fn to_json_line(&self, with_timing: bool) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if with_timing {
            value["elapsed_ms"] = Value::from(self.elapsed.as_millis() as u64);
        }
        serde_json::to_string(&value).expect("report serializes")
    }
}

/// Accumulates instance outcomes and produces the final report.
#[derive(Debug)]
pub struct ReportBuilder {
    report: VerificationReport,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(check_id: &str) -> ReportBuilder {
        ReportBuilder {
            report: VerificationReport {
                check_id: check_id.to_string(),
                parameters: BTreeMap::new(),
                status: Status::Verified,
                instances: 0,
                skipped_instances: 0,
                failures: 0,
                counts: BTreeMap::new(),
                witnesses: Vec::new(),
                notes: Vec::new(),
                seed: None,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                elapsed: Duration::ZERO,
            },
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.report.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.report.seed = Some(seed);
        self
    }

    pub fn pass(&mut self) {
        self.report.instances += 1;
    }

    pub fn skip(&mut self) {
        self.report.skipped_instances += 1;
    }

    /// Records a failed instance; a failure always carries a witness.
    pub fn fail(&mut self, witness: Witness) {
        self.report.instances += 1;
        self.report.failures += 1;
        self.report.witnesses.push(witness);
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        if ok {
            self.pass();
        } else {
            self.fail(witness());
        }
    }

    pub fn count(&mut self, key: &str, by: u64) {
        *self.report.counts.entry(key.to_string()).or_default() += by;
    }

    pub fn witness(&mut self, witness: Witness) {
        self.report.witnesses.push(witness);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.notes.push(note.into());
    }

    pub fn finish(mut self) -> VerificationReport {
        let r = &mut self.report;
        r.status = if r.failures > 0 {
            Status::Falsified
        } else if r.instances == 0 && r.skipped_instances > 0 {
            Status::Skipped
        } else {
            Status::Verified
        };
        r.elapsed = self.started.elapsed();
        self.report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round_sig(-8.090_169_943_749_474), -8.090_169_943_75);
        assert_eq!(round_sig(4.0), 4.0);
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(round_sig(1.234_567_890_123_456e-5), 1.234_567_890_12e-5);
    }

    #[test]
    fn status_rules() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let mut b = ReportBuilder::new("x");
        b.pass();
        assert_eq!(b.finish().status, Status::Verified);

        let mut b = ReportBuilder::new("x");
        b.skip();
        assert_eq!(b.finish().status, Status::Skipped);

        let mut b = ReportBuilder::new("x");
        b.pass();
        b.fail(Witness::new("bad", &g, 1.0, -1.0));
        let r = b.finish();
        assert_eq!(r.status, Status::Falsified);
        assert_eq!((r.instances, r.failures), (2, 1));
        assert_eq!(r.witnesses[0].graph6, "A_");
    }

    #[test]
    fn json_line_omits_timing_by_default() {
        let r = ReportBuilder::new("demo").param("n", 4).seed(7).finish();
        let line = r.to_json_line(false);
        assert!(!line.contains("elapsed_ms"));
        assert!(line.contains(r#""check_id":"demo""#));
        assert!(line.contains(r#""status":"verified""#));
        assert!(line.contains(r#""seed":7"#));
        assert!(r.to_json_line(true).contains("elapsed_ms"));
    }
}
