//! Pass/fail records produced by the exhaustive checks.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::Error;

/// The checks the suite can run. The string forms (`lemma26`, ...) are the
/// names accepted on the command line and written into reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    TracesWm,
    ParityWm,
    TracesWpm,
    ParityWpm,
    MultiplicityBc,
    MultiplicityD,
    W4Evenness,
    So5,
}

impl ClaimId {
    pub const ALL: [ClaimId; 8] = [
        ClaimId::TracesWm,
        ClaimId::ParityWm,
        ClaimId::TracesWpm,
        ClaimId::ParityWpm,
        ClaimId::MultiplicityBc,
        ClaimId::MultiplicityD,
        ClaimId::W4Evenness,
        ClaimId::So5,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimId::TracesWm => "lemma26",
            ClaimId::ParityWm => "lemma27",
            ClaimId::TracesWpm => "lemma29",
            ClaimId::ParityWpm => "lemma210",
            ClaimId::MultiplicityBc => "prop211",
            ClaimId::MultiplicityD => "prop212",
            ClaimId::W4Evenness => "lemma217",
            ClaimId::So5 => "so5",
        }
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub got: String,
}

/// At most this many counterexamples are kept; `failures` has the total.
pub const MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub params: String,
    pub status: Status,
    pub cases: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub seed: u64,
}

impl VerificationReport {
    /// Status is `Pass` exactly when `counterexamples` is empty.
    pub fn new(claim: ClaimId, params: impl Into<String>, cases: u64, mut counterexamples: Vec<Counterexample>) -> Self {
        let failures = counterexamples.len() as u64;
        counterexamples.sort();
        counterexamples.truncate(MAX_COUNTEREXAMPLES);
        VerificationReport {
            claim,
            params: params.into(),
            status: if failures == 0 { Status::Pass } else { Status::Fail },
            cases,
            failures,
            counterexamples,
            notes: Vec::new(),
            elapsed_ms: None,
            seed: 0,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report is plain data")
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mut line = format!(
            "{status} {claim:<9} {params:<10} cases={cases} failures={failures} seed={seed}",
            claim = self.claim.as_str(),
            params = self.params,
            cases = self.cases,
            failures = self.failures,
            seed = self.seed,
        );
        if let Some(ms) = self.elapsed_ms {
            line.push_str(&format!(" elapsed_ms={ms}"));
        }
        for n in &self.notes {
            line.push_str(&format!("\n    note: {n}"));
        }
        for c in &self.counterexamples {
            line.push_str(&format!(
                "\n    counterexample: {} expected={} got={}",
                c.input, c.expected, c.got
            ));
        }
        line
    }
}

/// Runs `f` and stamps the report with the wall time.
pub fn timed<F>(f: F) -> crate::error::Result<VerificationReport>
where
    F: FnOnce() -> crate::error::Result<VerificationReport>,
{
    let start = Instant::now();
    let mut r = f()?;
    r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(r)
}
