//! Outcomes of individual identity checks.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
    pub millis: u64,
}

impl CheckReport {
    /// Run `f`, which returns `None` on success or a residual description.
    pub fn run(id: impl Into<String>, paper_ref: impl Into<String>, f: impl FnOnce() -> Option<String>) -> CheckReport {
        let t = Instant::now();
        let residual = f();
        CheckReport {
            id: id.into(),
            paper_ref: paper_ref.into(),
            status: if residual.is_none() { Status::Pass } else { Status::Fail },
            residual,
            millis: t.elapsed().as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Truncate long residual strings for reports.
pub fn clip(s: String) -> String {
    const MAX: usize = 2000;
    if s.len() <= MAX {
        return s;
    }
    let mut end = MAX;
    while !s.is_char_boundary(end) {
        end -= 1;
    }
    format!("{}… ({} bytes)", &s[..end], s.len())
}
