//! Outcome of an exhaustive check.

use serde::{Deserialize, Serialize};

/// Counterexamples kept verbatim; the rest are only counted.
const KEEP: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub group: String,
    pub checked: usize,
    pub counterexamples: Vec<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LemmaReport {
    pub fn new(lemma: impl Into<String>, group: impl Into<String>) -> Self {
        LemmaReport {
            lemma: lemma.into(),
            group: group.into(),
            checked: 0,
            counterexamples: Vec::new(),
            status: Status::Pass,
            note: None,
        }
    }

    /// A check that does not apply to this group.
    pub fn skipped(lemma: impl Into<String>, group: impl Into<String>, reason: impl Into<String>) -> Self {
        LemmaReport {
            status: Status::Skipped,
            note: Some(reason.into()),
            ..Self::new(lemma, group)
        }
    }

    /// Builds a report from per-case outcomes, `Some(description)` marking a
    /// counterexample.
    pub fn from_outcomes(
        lemma: impl Into<String>,
        group: impl Into<String>,
        outcomes: impl IntoIterator<Item = Option<String>>,
    ) -> Self {
        let mut r = Self::new(lemma, group);
        for o in outcomes {
            r.record(o);
        }
        r
    }

    pub fn record(&mut self, outcome: Option<String>) {
        self.checked += 1;
        if let Some(desc) = outcome {
            self.status = Status::Fail;
            if self.counterexamples.len() < KEEP {
                self.counterexamples.push(desc);
            } else {
                self.note = Some("further counterexamples omitted".into());
            }
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Pass or skipped.
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }
}
