//! Verification suites run over a catalog of groups.
//!
//! Every suite produces a [`SuiteResult`] whose cases are ordered by catalog
//! position and then by the order the suite emits them, so results do not
//! depend on how many worker threads ran them.

mod properties;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::catalog::CatalogGroup;
use crate::error::{Error, Result};
use crate::facts::Facts;
use crate::formations::FormationSpec;
use crate::group::{Elem, FiniteGroup};
use crate::structure::map_rows;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Elements on which two sets disagree, or that break a property.
    Elements { elements: Vec<Elem>, labels: Vec<String> },
    /// `x` and `y` lie in a set that does not contain `product = xy`.
    Product {
        x: Elem,
        y: Elem,
        product: Elem,
        labels: [String; 3],
    },
    Edge { x: Elem, y: Elem, labels: [String; 2] },
    Subgroup { order: usize, labels: Vec<String> },
    Components { sizes: Vec<usize> },
    Planarity { planar: bool, certificate: String },
    /// The error that caused a skip.
    Error { error: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub group: String,
    pub formation: Option<String>,
    pub case: String,
    pub verdict: Verdict,
    /// Report-only cases do not count towards the exit status.
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub asserted_failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    pub wall_time_ms: f64,
}

impl SuiteResult {
    fn new(suite: SuiteName, cases: Vec<CaseRecord>, start: Instant) -> Self {
        let mut summary = Summary {
            total: cases.len(),
            ..Summary::default()
        };
        for c in &cases {
            match c.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Skipped => summary.skipped += 1,
            }
            if c.asserted && c.verdict == Verdict::Fail {
                summary.asserted_failures += 1;
            }
        }
        SuiteResult {
            suite: suite.to_string(),
            cases,
            summary,
            wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// No asserted case failed.
    pub fn passed(&self) -> bool {
        self.summary.asserted_failures == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases
            .iter()
            .filter(|c| c.asserted && c.verdict == Verdict::Fail)
    }

    /// JSON with the timing field removed, for comparing runs.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("suite results serialize");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("wall_time_ms");
        }
        serde_json::to_string_pretty(&v).expect("suite results serialize")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteName {
    Radicals,
    Semiregular,
    Regularity,
    Connectivity,
    Planarity,
    Icyc,
    Critical,
    Frattini,
    QuotientGraphs,
    MonolithicQuotients,
    GeneratingCosets,
    SemiStructure,
}

impl SuiteName {
    pub const ALL: [SuiteName; 12] = [
        SuiteName::Radicals,
        SuiteName::Semiregular,
        SuiteName::Regularity,
        SuiteName::Connectivity,
        SuiteName::Planarity,
        SuiteName::Icyc,
        SuiteName::Critical,
        SuiteName::Frattini,
        SuiteName::QuotientGraphs,
        SuiteName::MonolithicQuotients,
        SuiteName::GeneratingCosets,
        SuiteName::SemiStructure,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Radicals => "radicals",
            SuiteName::Semiregular => "semiregular",
            SuiteName::Regularity => "regularity",
            SuiteName::Connectivity => "connectivity",
            SuiteName::Planarity => "planarity",
            SuiteName::Icyc => "icyc",
            SuiteName::Critical => "critical",
            SuiteName::Frattini => "frattini",
            SuiteName::QuotientGraphs => "quotient-graphs",
            SuiteName::MonolithicQuotients => "monolithic-quotients",
            SuiteName::GeneratingCosets => "generating-cosets",
            SuiteName::SemiStructure => "semi-structure",
        }
    }

    /// Formations a suite runs when none are given.
    pub fn default_formations(self) -> Vec<FormationSpec> {
        use FormationSpec::*;
        let pc = |p, t| PCoreThenFitting { p, t };
        match self {
            SuiteName::Radicals => vec![Abelian, Nilpotent, Soluble],
            SuiteName::Semiregular => {
                let mut v = vec![Supersoluble, NilpotentDerived];
                v.extend((1..=3).map(FittingLength));
                for p in [2, 3, 5] {
                    v.extend((1..=2).map(|t| pc(p, t)));
                }
                v.push(TGroups);
                v
            }
            SuiteName::Regularity => vec![
                Abelian,
                Nilpotent,
                Soluble,
                pc(2, 1),
                pc(3, 1),
                pc(5, 1),
                Supersoluble,
                NilpotentDerived,
                FittingLength(2),
            ],
            SuiteName::Connectivity | SuiteName::Icyc | SuiteName::QuotientGraphs => vec![
                Abelian,
                Nilpotent,
                Soluble,
                Supersoluble,
                NilpotentDerived,
                FittingLength(2),
                pc(2, 1),
            ],
            SuiteName::Planarity => vec![
                Nilpotent,
                Supersoluble,
                NilpotentDerived,
                FittingLength(2),
                pc(2, 1),
            ],
            SuiteName::Critical => vec![
                Abelian,
                Nilpotent,
                Soluble,
                Supersoluble,
                NilpotentDerived,
                FittingLength(2),
                pc(2, 1),
                pc(3, 1),
            ],
            SuiteName::Frattini | SuiteName::MonolithicQuotients => vec![
                Nilpotent,
                Soluble,
                Supersoluble,
                NilpotentDerived,
                FittingLength(2),
                pc(2, 1),
                pc(3, 1),
            ],
            SuiteName::GeneratingCosets => vec![],
            SuiteName::SemiStructure => {
                vec![Nilpotent, Supersoluble, NilpotentDerived, FittingLength(2)]
            }
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Outcome of one check before it is attached to a group and formation.
pub(crate) struct Outcome {
    pub pass: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            pass: true,
            witness: None,
            note: None,
        }
    }

    pub fn vacuous(why: &str) -> Self {
        Outcome::pass().with_note(why)
    }

    pub fn check(pass: bool, witness: impl FnOnce() -> Witness) -> Self {
        Outcome {
            pass,
            witness: (!pass).then(witness),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Emits records for one group.
pub(crate) struct Recorder<'a> {
    group: &'a str,
    out: Vec<CaseRecord>,
}

impl<'a> Recorder<'a> {
    fn new(group: &'a str) -> Self {
        Recorder {
            group,
            out: Vec::new(),
        }
    }

    pub fn group_name(&self) -> &str {
        self.group
    }

    /// Runs `body` and records its outcome. Cap errors become skips; other
    /// errors are failures.
    pub fn case(
        &mut self,
        formation: Option<FormationSpec>,
        case: &str,
        asserted: bool,
        body: impl FnOnce() -> Result<Outcome>,
    ) {
        let (verdict, witness, note) = match body() {
            Ok(o) => (
                if o.pass { Verdict::Pass } else { Verdict::Fail },
                o.witness,
                o.note,
            ),
            Err(e) => {
                let verdict = if e.is_cap() {
                    Verdict::Skipped
                } else {
                    Verdict::Fail
                };
                (verdict, Some(Witness::Error { error: e.to_string() }), None)
            }
        };
        self.out.push(CaseRecord {
            group: self.group.to_string(),
            formation: formation.map(|f| f.to_string()),
            case: case.to_string(),
            verdict,
            asserted,
            witness,
            note,
        });
    }

    pub fn skip(&mut self, formation: Option<FormationSpec>, case: &str, why: &str) {
        self.out.push(CaseRecord {
            group: self.group.to_string(),
            formation: formation.map(|f| f.to_string()),
            case: case.to_string(),
            verdict: Verdict::Skipped,
            asserted: false,
            witness: None,
            note: Some(why.to_string()),
        });
    }
}

pub(crate) fn elements_witness(g: &FiniteGroup, set: &BitSet) -> Witness {
    Witness::Elements {
        elements: set.to_vec(),
        labels: set.iter().map(|x| g.label(x).to_string()).collect(),
    }
}

pub(crate) fn subgroup_witness(g: &FiniteGroup, set: &BitSet) -> Witness {
    Witness::Subgroup {
        order: set.count(),
        labels: set.iter().map(|x| g.label(x).to_string()).collect(),
    }
}

pub(crate) fn edge_witness(g: &FiniteGroup, x: Elem, y: Elem) -> Witness {
    Witness::Edge {
        x,
        y,
        labels: [g.label(x).to_string(), g.label(y).to_string()],
    }
}

/// First `x, y ∈ set` (in index order) whose product leaves `set`.
pub fn product_escape(g: &FiniteGroup, set: &BitSet) -> Option<(Elem, Elem, Elem)> {
    set.iter().find_map(|x| {
        set.iter()
            .map(|y| (y, g.mul(x, y)))
            .find(|&(_, xy)| !set.contains(xy))
            .map(|(y, xy)| (x, y, xy))
    })
}

pub(crate) fn product_witness(g: &FiniteGroup, (x, y, p): (Elem, Elem, Elem)) -> Witness {
    Witness::Product {
        x,
        y,
        product: p,
        labels: [
            g.label(x).to_string(),
            g.label(y).to_string(),
            g.label(p).to_string(),
        ],
    }
}

/// A catalog with per-group caches shared by every suite run on it.
pub struct Lab<'c> {
    groups: Vec<(&'c str, Facts<'c>)>,
}

impl<'c> Lab<'c> {
    pub fn new(catalog: &'c [CatalogGroup]) -> Self {
        Lab {
            groups: catalog
                .iter()
                .map(|c| (c.name.as_str(), Facts::new(&c.group)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn facts(&self, name: &str) -> Option<&Facts<'c>> {
        self.groups.iter().find(|(n, _)| *n == name).map(|(_, f)| f)
    }

    fn per_group(&self, body: impl Fn(&mut Recorder, &Facts) + Sync + Send) -> Vec<CaseRecord> {
        map_rows(self.groups.len(), |i| {
            let (name, facts) = &self.groups[i];
            let mut rec = Recorder::new(name);
            body(&mut rec, facts);
            rec.out
        })
        .into_iter()
        .flatten()
        .collect()
    }

    /// Runs a suite with the given formations, or its defaults when `None`.
    pub fn run(&self, suite: SuiteName, formations: Option<&[FormationSpec]>) -> SuiteResult {
        let start = Instant::now();
        let defaults = suite.default_formations();
        let fs = formations.unwrap_or(&defaults);
        let cases = match suite {
            SuiteName::Radicals => self.per_group(suites::radicals),
            SuiteName::Semiregular => self.per_group(|r, f| suites::semiregular(r, f, fs)),
            SuiteName::Regularity => self.per_group(|r, f| suites::regularity(r, f, fs)),
            SuiteName::Connectivity => self.per_group(|r, f| suites::connectivity(r, f, fs)),
            SuiteName::Planarity => self.per_group(|r, f| suites::planarity(r, f, fs)),
            SuiteName::Icyc => self.per_group(|r, f| suites::icyc(r, f, fs)),
            SuiteName::Critical => self.per_group(|r, f| suites::critical(r, f, fs, true)),
            SuiteName::Frattini => self.per_group(|r, f| properties::frattini(r, f, fs)),
            SuiteName::QuotientGraphs => {
                self.per_group(|r, f| properties::quotient_graphs(r, f, fs))
            }
            SuiteName::MonolithicQuotients => {
                self.per_group(|r, f| properties::monolithic_quotients(r, f, fs))
            }
            SuiteName::GeneratingCosets => self.per_group(properties::generating_cosets),
            SuiteName::SemiStructure => self.per_group(|r, f| properties::semi_structure(r, f, fs)),
        };
        SuiteResult::new(suite, cases, start)
    }

    /// Lists the critical (or strongly critical) groups of the catalog.
    pub fn search_critical(&self, formations: &[FormationSpec], strongly: bool) -> SuiteResult {
        let start = Instant::now();
        let cases = self.per_group(|r, f| suites::critical(r, f, formations, strongly));
        SuiteResult::new(SuiteName::Critical, cases, start)
    }

    pub fn run_all(&self) -> Vec<SuiteResult> {
        SuiteName::ALL.into_iter().map(|s| self.run(s, None)).collect()
    }
}

/// Runs `f` on a pool of `workers` threads. Results never depend on the
/// worker count.
#[cfg(feature = "parallel")]
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<T: Send>(_workers: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}
