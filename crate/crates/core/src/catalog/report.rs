use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational; never affects the verdict.
    Note,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub subject: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn new(subject: impl Into<String>) -> Section {
        Section { subject: subject.into(), params: BTreeMap::new(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: &str, status: Status, witness: impl Into<String>) {
        self.checks.push(Check { check: check.into(), status, witness: witness.into() });
    }

    pub fn expect(&mut self, check: &str, ok: bool, witness: impl Into<String>) {
        self.push(check, Status::from_bool(ok), witness);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// Human-readable parameter list, `-` when there are none.
    pub fn params_text(&self) -> String {
        if self.params.is_empty() {
            return "-".into();
        }
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(",")
    }
}

/// Outcome of an audit run, one section per subject.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub title: String,
    pub sections: Vec<Section>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub note: usize,
}

impl AuditReport {
    pub fn new(title: impl Into<String>) -> AuditReport {
        AuditReport { title: title.into(), sections: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::passed)
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for c in self.sections.iter().flat_map(|s| &s.checks) {
            match c.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Note => t.note += 1,
            }
        }
        t
    }

    pub fn find(&self, subject: &str) -> impl Iterator<Item = &Section> {
        let subject = subject.to_string();
        self.sections.iter().filter(move |s| s.subject == subject)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            title: &'a str,
            passed: bool,
            tally: Tally,
            sections: &'a [Section],
        }
        let out = Out { title: &self.title, passed: self.passed(), tally: self.tally(), sections: &self.sections };
        serde_json::to_string_pretty(&out).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.title);
        let w_subject = self.sections.iter().map(|x| x.subject.len()).max().unwrap_or(0).max(7);
        let w_params = self.sections.iter().map(|x| x.params_text().len()).max().unwrap_or(0).max(6);
        let w_check = self.sections.iter().flat_map(|x| &x.checks).map(|c| c.check.len()).max().unwrap_or(0).max(5);
        let _ = writeln!(s, "{:w_subject$}  {:w_params$}  {:w_check$}  STATUS  WITNESS", "SUBJECT", "PARAMS", "CHECK");
        for sec in &self.sections {
            let p = sec.params_text();
            for c in &sec.checks {
                let _ = writeln!(
                    s,
                    "{:w_subject$}  {:w_params$}  {:w_check$}  {:6}  {}",
                    sec.subject,
                    p,
                    c.check,
                    c.status.as_str(),
                    c.witness
                );
            }
        }
        let t = self.tally();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{verdict}: {} passed, {} failed, {} notes", t.pass, t.fail, t.note);
        s
    }
}
