//! Formula-versus-oracle comparisons over families of groups.
//!
//! Each check pairs a closed form with an independent computation on the
//! constructed graph. Checks outside their oracle's size guard are recorded
//! as skipped. Disagreements listed in the known-discrepancy file are
//! reported but do not fail the run.

mod bundle;
mod known;
mod sweep;

use std::fmt;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::corpus;
use crate::error::{Error, Result};
use crate::graph::{
    chromatic_number_exact, complete_graph, graph_isomorphic, strong_power_graph,
    vertex_connectivity_bruteforce, Graph, ISOMORPHISM_LIMIT,
};
use crate::group::{make_cyclic, FiniteGroup};
use crate::linalg::{char_poly_exact, IntMatrix};
use crate::permanent::{
    adjacency_permanent_formula, clique_plus_vertex_laplacian_permanent,
    clique_plus_vertex_laplacian_permanent_stated, complete_graph_laplacian_permanent,
    laplacian_permanent_formula, permanent_ryser, CliqueParams,
};
use crate::spectral::{
    adjacency, closed_form_char_poly, closed_form_spectrum, eigenvalues_numeric, format_rational,
    integer_spectrum, laplacian, laplacian_energy_closed_form, laplacian_energy_from_spectrum,
    noncyclic_char_poly, spanning_tree_count_formula, spanning_tree_count_kirchhoff, ExactSpectrum,
    DEFAULT_EIGEN_TOL,
};
use crate::structure::{
    cayley_classification, cayley_graph, chi_formula, cyclic_line_graph_classification,
    is_line_graph, kappa_formula, ConnectionSet,
};

pub use bundle::{invariant_bundle, InvariantBundle};
pub use known::{KnownDiscrepancies, KnownDiscrepancy};
pub use sweep::{sweep, SweepColumn, SweepRow};

/// Largest order handed to the numeric eigensolver.
pub const SPECTRUM_LIMIT: usize = 256;
/// Absolute tolerance between closed-form and numeric eigenvalues.
pub const SPECTRUM_TOL: f64 = 1e-8;
pub const THREADS_ENV: &str = "STRONGPOW_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Spectrum,
    CharPoly,
    Tau,
    Le,
    Kappa,
    Chi,
    LineGraph,
    Cayley,
    PermAdj,
    PermLap,
    PermComplete,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Spectrum,
        Check::CharPoly,
        Check::Tau,
        Check::Le,
        Check::Kappa,
        Check::Chi,
        Check::LineGraph,
        Check::Cayley,
        Check::PermAdj,
        Check::PermLap,
        Check::PermComplete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Spectrum => "spectrum",
            Check::CharPoly => "charpoly",
            Check::Tau => "tau",
            Check::Le => "le",
            Check::Kappa => "kappa",
            Check::Chi => "chi",
            Check::LineGraph => "linegraph",
            Check::Cayley => "cayley",
            Check::PermAdj => "perm_adj",
            Check::PermLap => "perm_lap",
            Check::PermComplete => "perm_complete",
        }
    }

    /// Record names emitted by this check. `perm_lap` compares three
    /// expressions against one Ryser value.
    pub fn record_names(self) -> &'static [&'static str] {
        match self {
            Check::PermLap => &["perm_lap", "perm_lap_full", "perm_lap_stated"],
            Check::Spectrum => &["spectrum"],
            Check::CharPoly => &["charpoly"],
            Check::Tau => &["tau"],
            Check::Le => &["le"],
            Check::Kappa => &["kappa"],
            Check::Chi => &["chi"],
            Check::LineGraph => &["linegraph"],
            Check::Cayley => &["cayley"],
            Check::PermAdj => &["perm_adj"],
            Check::PermComplete => &["perm_complete"],
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown check {s:?}"),
            })
    }
}

/// Comma-separated check names (or `all`), deduplicated into canonical order.
pub fn parse_checks(text: &str) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut position = 0;
    for item in text.split(',') {
        let name = item.trim();
        if name == "all" {
            out.extend(Check::ALL);
        } else {
            out.push(name.parse().map_err(|_| Error::Parse {
                position,
                message: format!("unknown check {name:?}"),
            })?);
        }
        position += item.len() + 1;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `a..b` (inclusive) or a single `n`, with `1 <= a <= b`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    let num = |s: &str, at: usize| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| err(at, "expected a positive integer"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a, 0)?, num(b, a.len() + 2)?),
        None => {
            let n = num(text, 0)?;
            (n, n)
        }
    };
    if lo == 0 {
        return Err(err(0, "range must start at 1 or above"));
    }
    if lo > hi {
        return Err(err(0, "range start exceeds range end"));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    Corpus,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(Family::Cyclic),
            "corpus" => Ok(Family::Corpus),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown family {s:?}, expected cyclic or corpus"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Agree,
    Disagree,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Agree => "agree",
            Status::Disagree => "disagree",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check: String,
    pub group: String,
    pub n: usize,
    pub cyclic: bool,
    pub formula: String,
    pub oracle: String,
    pub status: Status,
    /// Explanation from the known-discrepancy list, for matched disagreements.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known: Option<String>,
    /// Why a record was skipped, or what the oracle computed.
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub agree: usize,
    pub disagree_known: usize,
    pub disagree_undocumented: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub records: Vec<Record>,
}

impl VerifyReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            match (r.status, r.known.is_some()) {
                (Status::Agree, _) => s.agree += 1,
                (Status::Disagree, true) => s.disagree_known += 1,
                (Status::Disagree, false) => s.disagree_undocumented += 1,
                (Status::Skipped, _) => s.skipped += 1,
            }
        }
        s
    }

    /// 0 when every disagreement is documented, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary().disagree_undocumented == 0 {
            0
        } else {
            1
        }
    }

    pub fn find(&self, check: &str, group: &str) -> Option<&Record> {
        self.records
            .iter()
            .find(|r| r.check == check && r.group == group)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("check\tgroup\tn\tstatus\tformula\toracle\tknown\tnote\n");
        for r in &self.records {
            let clean = |s: &str| s.replace(['\t', '\n'], " ");
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.check,
                r.group,
                r.n,
                r.status,
                clean(&r.formula),
                clean(&r.oracle),
                if r.known.is_some() { "yes" } else { "no" },
                clean(r.known.as_deref().unwrap_or(&r.note)),
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            summary: Summary,
            records: &'a [Record],
        }
        let mut s = serde_json::to_string_pretty(&Out {
            summary: self.summary(),
            records: &self.records,
        })
        .expect("report serializes");
        s.push('\n');
        s
    }
}

/// Worker count from `STRONGPOW_THREADS`, if set to a positive integer.
pub fn thread_count() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
}

/// Runs `f` on a pool sized by [`thread_count`], or the global pool.
pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match thread_count().and_then(|k| rayon::ThreadPoolBuilder::new().num_threads(k).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

struct Subject {
    label: String,
    group: FiniteGroup,
}

fn subjects(family: Family, range: &RangeInclusive<usize>) -> Result<Vec<Subject>> {
    match family {
        Family::Cyclic => range
            .clone()
            .map(|n| {
                Ok(Subject {
                    label: format!("zn:{n}"),
                    group: make_cyclic(n)?,
                })
            })
            .collect(),
        Family::Corpus => Ok(corpus(|n| range.contains(&n))?
            .into_iter()
            .map(|e| Subject {
                label: e.spec.to_string(),
                group: e.group,
            })
            .collect()),
    }
}

pub fn run_verify(
    family: Family,
    range: RangeInclusive<usize>,
    checks: &[Check],
    known: &KnownDiscrepancies,
) -> Result<VerifyReport> {
    let subjects = subjects(family, &range)?;
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let per_subject: Vec<Vec<Record>> = with_pool(|| {
        subjects
            .par_iter()
            .map(|s| verify_subject(s, &checks, known))
            .collect()
    });
    Ok(VerifyReport {
        records: per_subject.into_iter().flatten().collect(),
    })
}

fn verify_subject(s: &Subject, checks: &[Check], known: &KnownDiscrepancies) -> Vec<Record> {
    let ctx = Ctx::new(s);
    let mut out = Vec::new();
    for &check in checks {
        out.extend(ctx.run(check));
    }
    for r in &mut out {
        if r.status == Status::Disagree {
            r.known = known
                .lookup(&r.check, r.n, r.cyclic)
                .map(|d| d.explanation.clone());
        }
    }
    out
}

struct Ctx<'a> {
    subject: &'a Subject,
    n: usize,
    cyclic: bool,
    graph: Graph,
    laplacian: IntMatrix,
}

impl<'a> Ctx<'a> {
    fn new(subject: &'a Subject) -> Self {
        let graph = strong_power_graph(&subject.group);
        let laplacian = laplacian(&graph);
        Ctx {
            n: subject.group.order(),
            cyclic: subject.group.is_cyclic(),
            subject,
            graph,
            laplacian,
        }
    }

    fn record(
        &self,
        check: &str,
        formula: String,
        oracle: String,
        agree: bool,
        note: &str,
    ) -> Record {
        Record {
            check: check.to_string(),
            group: self.subject.label.clone(),
            n: self.n,
            cyclic: self.cyclic,
            formula,
            oracle,
            status: if agree {
                Status::Agree
            } else {
                Status::Disagree
            },
            known: None,
            note: note.to_string(),
        }
    }

    fn skip(&self, check: &str, formula: String, note: impl Into<String>) -> Record {
        Record {
            check: check.to_string(),
            group: self.subject.label.clone(),
            n: self.n,
            cyclic: self.cyclic,
            formula,
            oracle: String::new(),
            status: Status::Skipped,
            known: None,
            note: note.into(),
        }
    }

    /// Compares `formula` with a fallible oracle; oracle errors (size guards)
    /// become skipped records.
    fn compare<T: PartialEq + ToString>(
        &self,
        check: &str,
        formula: T,
        oracle: Result<T>,
        note: &str,
    ) -> Record {
        match oracle {
            Ok(o) => self.record(
                check,
                formula.to_string(),
                o.to_string(),
                formula == o,
                note,
            ),
            Err(e) => self.skip(check, formula.to_string(), e.to_string()),
        }
    }

    fn run(&self, check: Check) -> Vec<Record> {
        let (n, cyclic) = (self.n, self.cyclic);
        match check {
            Check::Spectrum => vec![self.spectrum()],
            Check::CharPoly => {
                let formula = if cyclic {
                    closed_form_char_poly(n)
                } else {
                    noncyclic_char_poly(n)
                };
                vec![self.compare("charpoly", formula, char_poly_exact(&self.laplacian), "")]
            }
            Check::Tau => vec![self.compare(
                "tau",
                spanning_tree_count_formula(n, cyclic),
                spanning_tree_count_kirchhoff(&self.graph),
                "",
            )],
            Check::Le => vec![self.energy()],
            Check::Kappa => vec![self.compare(
                "kappa",
                kappa_formula(n, cyclic),
                vertex_connectivity_bruteforce(&self.graph),
                "",
            )],
            Check::Chi => vec![self.compare(
                "chi",
                chi_formula(n, cyclic),
                chromatic_number_exact(&self.graph),
                "",
            )],
            Check::LineGraph => {
                if n < 2 {
                    return vec![self.skip(
                        "linegraph",
                        String::new(),
                        "classification covers n >= 2",
                    )];
                }
                let formula = !cyclic || cyclic_line_graph_classification(n);
                vec![self.compare("linegraph", formula, is_line_graph(&self.graph), "")]
            }
            Check::Cayley => vec![self.cayley()],
            Check::PermAdj => vec![self.perm_adj()],
            Check::PermLap => self.perm_lap(),
            Check::PermComplete => vec![self.perm_complete()],
        }
    }

    fn spectrum(&self) -> Record {
        let formula = closed_form_spectrum(self.n, self.cyclic);
        if self.n > SPECTRUM_LIMIT {
            return self.skip(
                "spectrum",
                formula.to_string(),
                format!("numeric eigensolve is limited to size {SPECTRUM_LIMIT}"),
            );
        }
        let numeric = match eigenvalues_numeric(&self.laplacian, DEFAULT_EIGEN_TOL) {
            Ok(v) => v,
            Err(e) => return self.skip("spectrum", formula.to_string(), e.to_string()),
        };
        let expected = formula.ascending();
        let agree = expected.len() == numeric.len()
            && expected
                .iter()
                .zip(&numeric)
                .all(|(&a, &b)| (a as f64 - b).abs() <= SPECTRUM_TOL);
        self.record(
            "spectrum",
            formula.to_string(),
            format_numeric_spectrum(&numeric),
            agree,
            "numeric eigenvalues of the constructed Laplacian",
        )
    }

    fn energy(&self) -> Record {
        let formula = laplacian_energy_closed_form(self.n, self.cyclic);
        if self.n < 2 {
            return self.skip("le", format_rational(&formula), "closed form covers n >= 2");
        }
        let oracle = integer_spectrum(&self.laplacian).and_then(|s| {
            let s = s.ok_or(Error::NoConvergence)?;
            laplacian_energy_from_spectrum(&s, self.graph.edge_count(), self.n)
        });
        match oracle {
            Ok(o) => self.record(
                "le",
                format_rational(&formula),
                format_rational(&o),
                formula == o,
                "sum |lambda - 2m/n| over the exact spectrum",
            ),
            Err(e) => self.skip("le", format_rational(&formula), e.to_string()),
        }
    }

    fn cayley(&self) -> Record {
        let claim = cayley_classification(&self.subject.group);
        let formula = if claim { "cayley" } else { "not cayley" }.to_string();
        if !claim {
            if self.n <= 2 {
                return self.skip(
                    "cayley",
                    formula,
                    "edgeless graph is regular; non-regularity test does not apply",
                );
            }
            let regular = self.graph.is_regular();
            let oracle = if regular { "regular" } else { "not cayley" };
            return self.record(
                "cayley",
                formula,
                oracle.to_string(),
                !regular,
                "non-regular graphs are not Cayley graphs",
            );
        }
        let s = ConnectionSet::all_but_identity(&self.subject.group);
        let witness = match cayley_graph(&self.subject.group, &s) {
            Ok(w) => w,
            Err(e) => return self.skip("cayley", formula, e.to_string()),
        };
        let found = if witness == self.graph {
            Ok(true)
        } else if self.n <= ISOMORPHISM_LIMIT {
            graph_isomorphic(&witness, &self.graph)
        } else {
            Ok(false)
        };
        match found {
            Ok(f) => self.record(
                "cayley",
                formula,
                if f { "cayley" } else { "no witness" }.to_string(),
                f,
                "witness C(G, G \\ {e})",
            ),
            Err(e) => self.skip("cayley", formula, e.to_string()),
        }
    }

    fn perm_adj(&self) -> Record {
        if !self.cyclic {
            return self.skip(
                "perm_adj",
                String::new(),
                "closed form covers cyclic groups",
            );
        }
        if self.n < 2 {
            return self.skip("perm_adj", String::new(), "closed form covers n >= 2");
        }
        self.compare(
            "perm_adj",
            adjacency_permanent_formula(self.n),
            permanent_ryser(&adjacency(&self.graph)),
            "Ryser on the adjacency matrix",
        )
    }

    fn perm_lap(&self) -> Vec<Record> {
        let names = Check::PermLap.record_names();
        if !self.cyclic || self.n < 2 {
            let why = if self.cyclic {
                "closed form covers n >= 2"
            } else {
                "closed form covers cyclic groups"
            };
            return names
                .iter()
                .map(|c| self.skip(c, String::new(), why))
                .collect();
        }
        let params = CliqueParams::for_cyclic(self.n);
        let formulas = [
            laplacian_permanent_formula(self.n),
            clique_plus_vertex_laplacian_permanent(params),
            clique_plus_vertex_laplacian_permanent_stated(params),
        ];
        let oracle = permanent_ryser(&self.laplacian);
        names
            .iter()
            .zip(formulas)
            .map(|(c, f)| self.compare(c, f, oracle.clone(), "Ryser on the Laplacian"))
            .collect()
    }

    fn perm_complete(&self) -> Record {
        let formula = complete_graph_laplacian_permanent(self.n);
        // The strong power graph of a noncyclic group is itself complete.
        let (matrix, note) = if self.cyclic {
            (laplacian(&complete_graph(self.n)), "Ryser on L(K_n)")
        } else {
            (
                self.laplacian.clone(),
                "Ryser on the Laplacian of the strong power graph",
            )
        };
        self.compare("perm_complete", formula, permanent_ryser(&matrix), note)
    }
}

/// Rounded to an integer spectrum when every value is within tolerance of an
/// integer, otherwise the raw values.
fn format_numeric_spectrum(values: &[f64]) -> String {
    if values.iter().all(|v| (v - v.round()).abs() <= SPECTRUM_TOL) {
        ExactSpectrum::from_eigenvalues(values.iter().map(|v| v.round() as i64)).to_string()
    } else {
        values
            .iter()
            .rev()
            .map(|v| format!("{v:.10}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_range("2..24").unwrap(), 2..=24);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("5..3").is_err());
        assert!(matches!(
            parse_range("2..x"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert_eq!(
            parse_checks("tau,spectrum,tau").unwrap(),
            vec![Check::Spectrum, Check::Tau]
        );
        assert_eq!(parse_checks("all").unwrap(), Check::ALL.to_vec());
        assert!(matches!(
            parse_checks("tau,bogus"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert_eq!("corpus".parse::<Family>().unwrap(), Family::Corpus);
        assert!("other".parse::<Family>().is_err());
    }

    #[test]
    fn small_cyclic_run() {
        let known = KnownDiscrepancies::builtin();
        let report = run_verify(Family::Cyclic, 2..=8, &Check::ALL, &known).unwrap();
        let per_n: usize = Check::ALL.iter().map(|c| c.record_names().len()).sum();
        assert_eq!(report.records.len(), 7 * per_n);
        let le4 = report.find("le", "zn:4").unwrap();
        assert_eq!(
            (le4.status, le4.formula.as_str(), le4.oracle.as_str()),
            (Status::Disagree, "4", "6")
        );
        assert!(le4.known.is_some());
        let p4 = report.find("perm_lap", "zn:4").unwrap();
        assert_eq!((p4.status, p4.oracle.as_str()), (Status::Agree, "22"));
        assert_eq!(report.exit_code(), 0);
        let cayley2 = report.find("cayley", "zn:2").unwrap();
        assert_eq!(cayley2.status, Status::Skipped);
    }

    #[test]
    fn undocumented_disagreement_fails() {
        let report = run_verify(
            Family::Cyclic,
            4..=4,
            &[Check::Le],
            &KnownDiscrepancies::default(),
        )
        .unwrap();
        assert_eq!(report.exit_code(), 1);
        assert_eq!(report.summary().disagree_undocumented, 1);
    }

    #[test]
    fn outputs() {
        let report = run_verify(
            Family::Cyclic,
            4..=5,
            &[Check::Tau],
            &KnownDiscrepancies::builtin(),
        )
        .unwrap();
        let tsv = report.to_tsv();
        assert_eq!(tsv.lines().count(), 3);
        assert!(tsv.contains("tau\tzn:4\t4\tagree\t3\t3\tno\t"));
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["records"][1]["oracle"], "0");
        assert_eq!(json["summary"]["agree"], 2);
    }

    #[test]
    fn numeric_spectrum_format() {
        assert_eq!(
            format_numeric_spectrum(&[0.0, 1.0 + 1e-12, 3.0, 4.0]),
            "4^1 3^1 1^1 0^1"
        );
        assert_eq!(
            format_numeric_spectrum(&[0.0, 1.5]),
            "1.5000000000 0.0000000000"
        );
    }
}
