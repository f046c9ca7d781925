//! Check results and the JSON report. Every number is written as a decimal
//! string so that exact values survive any JSON reader.

use serde::{Deserialize, Serialize};

use fmcalc::varieties::ModelDescriptor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The engine refused the input, as the catalog entry expects.
    Rejected,
    /// Reported but not counted as a failure.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub description: String,
    pub reference: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(with = "decimal")]
    pub runtime_us: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(with = "decimal")]
    pub total: u64,
    #[serde(with = "decimal")]
    pub pass: u64,
    #[serde(with = "decimal")]
    pub fail: u64,
    #[serde(with = "decimal")]
    pub rejected: u64,
    #[serde(with = "decimal")]
    pub unresolved: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelInfo {
    #[serde(with = "decimal")]
    pub base_genus: u64,
    pub descriptor: ModelDescriptor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub models: Vec<ModelInfo>,
    pub checks: Vec<IdentityCheck>,
    pub summary: Summary,
}

impl Report {
    pub fn new(models: Vec<ModelInfo>, checks: Vec<IdentityCheck>) -> Self {
        let mut summary = Summary {
            total: checks.len() as u64,
            ..Summary::default()
        };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Rejected => summary.rejected += 1,
                Status::Unresolved => summary.unresolved += 1,
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            models,
            checks,
            summary,
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    /// Recounts the checks; `false` if the stored summary disagrees.
    pub fn summary_consistent(&self) -> bool {
        Report::new(self.models.clone(), self.checks.clone()).summary == self.summary
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Rejected => "REJECTED",
                Status::Unresolved => "UNRESOLVED",
            };
            out.push_str(&format!("[{tag}] {}  {}\n", c.id, c.description));
            if c.status != Status::Pass {
                out.push_str(&format!("        lhs = {}\n        rhs = {}\n", c.lhs, c.rhs));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} rejected, {} unresolved\n",
            s.total, s.pass, s.fail, s.rejected, s.unresolved
        ));
        out
    }
}

mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: &str, status: Status) -> IdentityCheck {
        IdentityCheck {
            id: id.into(),
            description: String::new(),
            reference: String::new(),
            status,
            lhs: "1".into(),
            rhs: "1".into(),
            runtime_us: 7,
        }
    }

    #[test]
    fn summary_tallies() {
        let r = Report::new(
            vec![],
            vec![check("a", Status::Pass), check("b", Status::Unresolved), check("c", Status::Rejected)],
        );
        assert_eq!((r.summary.total, r.summary.pass, r.summary.fail), (3, 1, 0));
        assert!(r.ok() && r.summary_consistent());
        let mut bad = r.clone();
        bad.checks.push(check("d", Status::Fail));
        assert!(!bad.summary_consistent());
        assert!(!Report::new(vec![], bad.checks).ok());
    }

    #[test]
    fn runtime_is_a_string() {
        let v = serde_json::to_value(check("a", Status::Pass)).unwrap();
        assert_eq!(v["runtime_us"], "7");
        assert_eq!(v["status"], "pass");
    }
}
