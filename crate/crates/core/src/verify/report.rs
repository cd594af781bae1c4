use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One disagreement: the class (or configuration) where it happens, the
/// `k`, `j` or `i` index, and both sides as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub class: String,
    pub index: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub config: BTreeMap<String, String>,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default)]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merges several reports into one named `check`, failing if any part
    /// fails. Counterexamples and notes are kept in order.
    pub fn combine(
        check: &str,
        config: BTreeMap<String, String>,
        parts: Vec<VerificationReport>,
    ) -> Self {
        let mut counterexamples = Vec::new();
        let mut notes = Vec::new();
        let mut elapsed_ms = 0;
        for p in parts {
            for mut c in p.counterexamples {
                c.class = format!("{}: {}", p.check, c.class);
                counterexamples.push(c);
            }
            notes.extend(p.notes.into_iter().map(|n| format!("{}: {n}", p.check)));
            elapsed_ms += p.elapsed_ms;
        }
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            check: check.into(),
            config,
            status,
            counterexamples,
            notes,
            elapsed_ms,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {}", self.check, self.status);
        for (k, v) in &self.config {
            s += &format!("\n  {k} = {v}");
        }
        for c in &self.counterexamples {
            s += &format!(
                "\n  mismatch at {} [{}]: {} != {}",
                c.class, c.index, c.lhs, c.rhs
            );
        }
        for n in &self.notes {
            s += &format!("\n  note: {n}");
        }
        s += &format!("\n  elapsed: {} ms", self.elapsed_ms);
        s
    }

    pub fn csv_header() -> &'static str {
        "check,status,class,index,lhs,rhs,elapsed_ms"
    }

    /// One row per counterexample, or a single row when there are none.
    pub fn to_csv_rows(&self) -> Vec<String> {
        let quote = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        if self.counterexamples.is_empty() {
            return vec![format!(
                "{},{},,,,,{}",
                quote(&self.check),
                self.status,
                self.elapsed_ms
            )];
        }
        self.counterexamples
            .iter()
            .map(|c| {
                format!(
                    "{},{},{},{},{},{},{}",
                    quote(&self.check),
                    self.status,
                    quote(&c.class),
                    c.index,
                    quote(&c.lhs),
                    quote(&c.rhs),
                    self.elapsed_ms
                )
            })
            .collect()
    }
}

/// Accumulates comparisons and timing for a report.
pub struct ReportBuilder {
    check: String,
    config: BTreeMap<String, String>,
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(check: &str) -> Self {
        ReportBuilder {
            check: check.into(),
            config: BTreeMap::new(),
            counterexamples: Vec::new(),
            notes: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn config(mut self, key: &str, value: impl ToString) -> Self {
        self.config.insert(key.into(), value.to_string());
        self
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.config.insert(key.into(), value.to_string());
    }

    /// Records a counterexample unless `lhs == rhs`.
    pub fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        class: impl ToString,
        index: i64,
        lhs: &T,
        rhs: &T,
    ) {
        if lhs != rhs {
            self.mismatch(class, index, lhs, rhs);
        }
    }

    pub fn mismatch(
        &mut self,
        class: impl ToString,
        index: i64,
        lhs: impl ToString,
        rhs: impl ToString,
    ) {
        self.counterexamples.push(Counterexample {
            class: class.to_string(),
            index,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    pub fn mismatches(&self) -> usize {
        self.counterexamples.len()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            check: self.check,
            config: self.config,
            status,
            counterexamples: self.counterexamples,
            notes: self.notes,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_counterexamples() {
        let mut b = ReportBuilder::new("demo").config("e", 2);
        b.compare("(2,2)", 1, &4, &4);
        let r = b.finish();
        assert!(r.passed() && r.counterexamples.is_empty());
        let mut b = ReportBuilder::new("demo");
        b.compare("(4)", 1, &2, &-1);
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples[0].lhs, "2");
        assert_eq!(
            r.to_csv_rows(),
            ["demo,fail,(4),1,2,-1,".to_string() + &r.elapsed_ms.to_string()]
        );
    }

    #[test]
    fn json_round_trip() {
        let mut b = ReportBuilder::new("prop37").config("mu", "(2,2)");
        b.mismatch("(1,1,1,1)", 0, "6", "5");
        b.note("x");
        let r = b.finish();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"status\":\"fail\""));
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn combine_prefixes_parts() {
        let mut b = ReportBuilder::new("part");
        b.mismatch("c", 0, 1, 2);
        let r = VerificationReport::combine(
            "all",
            BTreeMap::new(),
            vec![ReportBuilder::new("ok").finish(), b.finish()],
        );
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples[0].class, "part: c");
    }
}
