//! Certificate suites: every check compares a computed value against an
//! expected value tagged with where it came from.

mod oracle;
mod suites;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactcore::Rational;
use crate::toric::{fibration_to_p1, Fan, ToricError};

pub use oracle::{bott_h0_omega, ci_h12_from_chern, ci_topological_euler};

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("unknown suite {0:?}; expected one of schubert, toric, veronese, hodge, numerology, all")]
    UnknownSuite(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Fan(#[from] ToricError),
    #[error("report: {0}")]
    Report(String),
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "paper-quoted")]
    Paper,
    #[serde(rename = "derived-oracle")]
    Derived,
    #[serde(rename = "trivial")]
    Trivial,
}

/// Exact values. Rationals travel as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Number(#[serde(with = "rational_string")] Rational),
    Bool(bool),
    Text(String),
    List(Vec<Value>),
}

mod rational_string {
    use std::str::FromStr;

    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::exactcore::{format_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        Rational::from_str(&s).map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}")))
    }
}

impl Value {
    pub fn int(n: i64) -> Self {
        Value::Number(crate::exactcore::int(n))
    }

    pub fn text(s: impl Into<String>) -> Self {
        Value::Text(s.into())
    }

    pub fn ints<I: IntoIterator<Item = i64>>(v: I) -> Self {
        Value::List(v.into_iter().map(Value::int).collect())
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Number(q)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(q) => write!(f, "{}", crate::exactcore::format_rational(q)),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => write!(f, "{s}"),
            Value::List(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub provenance: Provenance,
    pub value: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Differs from a paper value that is known to be wrong.
    Flagged,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Flagged => "FLAGGED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub id: String,
    pub description: String,
    pub expected: Expected,
    pub computed: Value,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Certificate {
    /// Pass iff `computed == expected`.
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        provenance: Provenance,
        expected: impl Into<Value>,
        computed: impl Into<Value>,
    ) -> Self {
        let expected = Expected { provenance, value: expected.into() };
        let computed = computed.into();
        let verdict = if computed == expected.value { Verdict::Pass } else { Verdict::Fail };
        Certificate { id: id.into(), description: description.into(), expected, computed, verdict, note: None }
    }

    /// Marks a mismatch as a recorded inconsistency in the source. A matching
    /// value still passes.
    pub fn known_inconsistency(mut self, note: impl Into<String>) -> Self {
        if self.verdict == Verdict::Fail {
            self.verdict = Verdict::Flagged;
        }
        self.note = Some(note.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A failed computation: the error text never equals the expected value.
    pub fn errored(id: &str, description: &str, provenance: Provenance, expected: Value, err: impl fmt::Display) -> Self {
        Certificate::new(id, description, provenance, expected, Value::text(format!("error: {err}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Schubert,
    Toric,
    Veronese,
    Hodge,
    Numerology,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [Suite::Schubert, Suite::Toric, Suite::Veronese, Suite::Hodge, Suite::Numerology];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Schubert => "schubert",
            Suite::Toric => "toric",
            Suite::Veronese => "veronese",
            Suite::Hodge => "hodge",
            Suite::Numerology => "numerology",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = CertifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| CertifyError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    /// Random subspaces per field for the conic search, random triples for
    /// associativity.
    pub trials: usize,
    pub degree_bound: u32,
    pub genus_min: u32,
    pub genus_max: u32,
    pub genus_excluded: Vec<u32>,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, trials: 500, degree_bound: 6, genus_min: 7, genus_max: 12, genus_excluded: vec![11] }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

impl Summary {
    fn of(certs: &[Certificate]) -> Self {
        let count = |v: Verdict| certs.iter().filter(|c| c.verdict == v).count();
        Summary { total: certs.len(), pass: count(Verdict::Pass), fail: count(Verdict::Fail), flagged: count(Verdict::Flagged) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub config: Config,
    pub summary: Summary,
    pub certificates: Vec<Certificate>,
}

impl Report {
    /// Sorts by id and counts verdicts.
    pub fn new(suite: Suite, config: Config, mut certificates: Vec<Certificate>) -> Self {
        certificates.sort_by(|a, b| a.id.cmp(&b.id));
        Report { suite, seed: config.seed, summary: Summary::of(&certificates), config, certificates }
    }

    pub fn success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn get(&self, id: &str) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// Parses a report and checks that the summary matches the list.
    pub fn from_json(src: &str) -> Result<Self, CertifyError> {
        let report: Report = serde_json::from_str(src).map_err(|e| CertifyError::Report(e.to_string()))?;
        if report.summary != Summary::of(&report.certificates) {
            return Err(CertifyError::Report("summary does not match the certificate list".into()));
        }
        if report.seed != report.config.seed {
            return Err(CertifyError::Report("seed does not match the config".into()));
        }
        Ok(report)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        for c in &self.certificates {
            out += &format!("{:<7} {}\n", c.verdict.to_string(), c.id);
            if c.verdict != Verdict::Pass {
                out += &format!(
                    "        expected ({}) {}\n        computed {}\n",
                    provenance_label(c.expected.provenance),
                    c.expected.value,
                    c.computed
                );
            }
            if let Some(note) = &c.note {
                out += &format!("        note: {note}\n");
            }
        }
        let s = self.summary;
        out += &format!("{} certificates: {} pass, {} fail, {} flagged\n", s.total, s.pass, s.fail, s.flagged);
        out
    }
}

fn provenance_label(p: Provenance) -> &'static str {
    match p {
        Provenance::Paper => "paper-quoted",
        Provenance::Derived => "derived-oracle",
        Provenance::Trivial => "trivial",
    }
}

/// Runs the named suite. Parts of `all` run on separate threads; results are
/// ordered by id.
pub fn run_suite(suite: Suite, config: &Config) -> Report {
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    let certificates = std::thread::scope(|scope| {
        let handles: Vec<_> = parts.iter().map(|&p| scope.spawn(move || suites::run(p, config))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("certificate thread panicked")).collect()
    });
    Report::new(suite, config.clone(), certificates)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanCheck {
    pub dim: usize,
    pub rays: usize,
    pub maximal_cones: usize,
    pub simplicial: bool,
    /// Only decided for simplicial fans.
    pub smooth: Option<bool>,
    pub complete: bool,
    pub fibration: Option<Vec<i64>>,
}

impl fmt::Display for FanCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dimension {}, {} rays, {} maximal cones", self.dim, self.rays, self.maximal_cones)?;
        writeln!(f, "simplicial: {}", self.simplicial)?;
        match self.smooth {
            Some(s) => writeln!(f, "smooth: {s}")?,
            None => writeln!(f, "smooth: undecided (not simplicial)")?,
        }
        writeln!(f, "complete: {}", self.complete)?;
        match &self.fibration {
            Some(m) => writeln!(f, "P1 fibration: covector {m:?}"),
            None => writeln!(f, "P1 fibration: none"),
        }
    }
}

pub fn check_fan_str(src: &str) -> Result<FanCheck, CertifyError> {
    let fan = Fan::from_json(src)?;
    let simplicial = fan.is_simplicial();
    let smooth = if simplicial { Some(fan.fan_is_smooth()?) } else { None };
    Ok(FanCheck {
        dim: fan.dim(),
        rays: fan.rays().len(),
        maximal_cones: fan.cones().len(),
        simplicial,
        smooth,
        complete: fan.is_complete(),
        fibration: fibration_to_p1(&fan),
    })
}

pub fn check_fan(path: &Path) -> Result<FanCheck, CertifyError> {
    let src = std::fs::read_to_string(path)
        .map_err(|source| CertifyError::Io { path: path.display().to_string(), source })?;
    check_fan_str(&src)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let c = Certificate::new("a", "", Provenance::Trivial, Value::int(1), Value::int(1));
        assert_eq!(c.verdict, Verdict::Pass);
        let c = Certificate::new("a", "", Provenance::Paper, Value::int(1), Value::int(2));
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.clone().known_inconsistency("slip").verdict, Verdict::Flagged);
        let ok = Certificate::new("a", "", Provenance::Paper, true, true).known_inconsistency("n");
        assert_eq!(ok.verdict, Verdict::Pass);
    }

    #[test]
    fn rationals_serialize_as_strings() {
        let v = Value::Number(crate::exactcore::rat(-7, 2));
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"number":"-7/2"}"#);
        assert_eq!(serde_json::from_str::<Value>(&s).unwrap(), v);
        assert_eq!(serde_json::to_string(&Value::int(620)).unwrap(), r#"{"number":"620"}"#);
    }

    #[test]
    fn untagged_expectation_is_rejected() {
        let cert = r#"{"id":"x","description":"","expected":{"value":{"bool":true}},"computed":{"bool":true},"verdict":"pass"}"#;
        let err = serde_json::from_str::<Certificate>(cert).unwrap_err();
        assert!(err.to_string().contains("provenance"));
    }

    #[test]
    fn report_round_trip_and_count_check() {
        let certs = vec![
            Certificate::new("b", "", Provenance::Trivial, true, true),
            Certificate::new("a", "", Provenance::Paper, Value::int(1), Value::int(0)).known_inconsistency("n"),
        ];
        let report = Report::new(Suite::Numerology, Config::default(), certs);
        assert_eq!(report.certificates[0].id, "a");
        assert_eq!(report.summary, Summary { total: 2, pass: 1, fail: 0, flagged: 1 });
        assert!(report.success());
        let json = report.to_json();
        assert_eq!(Report::from_json(&json).unwrap(), report);
        let tampered = json.replace("\"pass\": 1", "\"pass\": 2");
        assert!(Report::from_json(&tampered).is_err());
    }

    #[test]
    fn suite_names() {
        assert_eq!("toric".parse::<Suite>().unwrap(), Suite::Toric);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("fans".parse::<Suite>().is_err());
    }

    #[test]
    fn fan_checks() {
        let p2 = crate::toric::paper::p2().to_json();
        let rep = check_fan_str(&p2).unwrap();
        assert!(rep.complete && rep.simplicial && rep.smooth == Some(true));
        assert_eq!(rep.fibration, None);
        let err = check_fan_str(r#"{"dim": 3, "rays": [[2,0,0]], "cones": [[0]]}"#).unwrap_err();
        assert!(err.to_string().contains("ray not primitive"));
        let err = check_fan_str("{\"dim\": 3,\n \"rays\": 7}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
