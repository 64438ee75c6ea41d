//! Theorem replay over parametrised graph families.
//!
//! Each statement is a [`Theorem`] registered under a [`TheoremId`]. Running
//! one over a family produces a [`TheoremReport`] per instance recording the
//! claimed and computed values. A mismatch is a `fail` entry, never a panic;
//! instances that hit a size guard are `skipped` with the guard as reason.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::circular::{circular_chromatic_number, is_kd_coloring, lift_to_federico};
use crate::coloring::{chromatic_number, j_solve, j_star_solve, JResult, Limits};
use crate::constructions::{crib, federico, mycielskian, shadow};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paucity::{
    paucity_constructive_cycle, paucity_constructive_path, paucity_exact, PaucityCertificate,
    PaucityOptions, DEFAULT_SUBSET_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    MycNotJ,
    CribPlusOne,
    ShadowEqual,
    FedericoTriangleFree,
    FedericoJPlusOne,
    FedericoChiEqual,
    FedericoCircularEqual,
    PaucityPath,
    PaucityCycle,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::MycNotJ,
        TheoremId::CribPlusOne,
        TheoremId::ShadowEqual,
        TheoremId::FedericoTriangleFree,
        TheoremId::FedericoJPlusOne,
        TheoremId::FedericoChiEqual,
        TheoremId::FedericoCircularEqual,
        TheoremId::PaucityPath,
        TheoremId::PaucityCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::MycNotJ => "myc_not_j",
            TheoremId::CribPlusOne => "crib_plus_one",
            TheoremId::ShadowEqual => "shadow_equal",
            TheoremId::FedericoTriangleFree => "federico_triangle_free",
            TheoremId::FedericoJPlusOne => "federico_j_plus_one",
            TheoremId::FedericoChiEqual => "federico_chi_equal",
            TheoremId::FedericoCircularEqual => "federico_circular_equal",
            TheoremId::PaucityPath => "paucity_path",
            TheoremId::PaucityCycle => "paucity_cycle",
        }
    }

    fn is_federico(self) -> bool {
        matches!(
            self,
            TheoremId::FedericoTriangleFree
                | TheoremId::FedericoJPlusOne
                | TheoremId::FedericoChiEqual
                | TheoremId::FedericoCircularEqual
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem {s:?}")))
    }
}

/// Base-graph family a theorem is replayed over.
#[derive(Debug, Clone)]
pub enum FamilySpec {
    Path,
    Cycle,
    /// `K_{m,n}` with `m` fixed and `n` ranging.
    CompleteBipartite {
        m: usize,
    },
    /// A single user-supplied graph; the range is ignored.
    Custom(Graph),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path => "path",
            FamilySpec::Cycle => "cycle",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Custom(_) => "custom",
        }
    }

    pub fn instances(&self, range: RangeInclusive<usize>) -> Result<Vec<Instance>> {
        let make = |params: Vec<usize>, graph: Result<Graph>| -> Result<Instance> {
            Ok(Instance {
                family: self.name(),
                params,
                graph: graph?,
            })
        };
        match self {
            FamilySpec::Path => range.map(|n| make(vec![n], Graph::path(n))).collect(),
            FamilySpec::Cycle => range.map(|n| make(vec![n], Graph::cycle(n))).collect(),
            FamilySpec::CompleteBipartite { m } => range
                .map(|n| make(vec![*m, n], Graph::complete_bipartite(*m, n)))
                .collect(),
            FamilySpec::Custom(g) => Ok(vec![make(vec![], Ok(g.clone()))?]),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub family: &'static str,
    pub params: Vec<usize>,
    pub graph: Graph,
}

impl Instance {
    pub fn name(&self) -> String {
        if self.params.is_empty() {
            self.family.to_string()
        } else {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            format!("{}({})", self.family, ps.join(","))
        }
    }
}

/// Size limits applied by every solver call in a run.
#[derive(Debug, Clone, Copy)]
pub struct Guards {
    pub limits: Limits,
    pub subset_cap: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            limits: Limits::default(),
            subset_cap: DEFAULT_SUBSET_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: String,
    #[serde(skip)]
    pub sort_key: (&'static str, Vec<usize>),
    pub claimed: Option<String>,
    pub computed: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub runtime_ms: u128,
}

/// What a theorem check produced for one instance.
#[derive(Debug, Clone)]
pub enum Outcome {
    Evaluated {
        claimed: String,
        computed: String,
        note: Option<String>,
    },
    Skipped(String),
}

impl Outcome {
    fn compare(claimed: impl ToString, computed: impl ToString) -> Outcome {
        Outcome::Evaluated {
            claimed: claimed.to_string(),
            computed: computed.to_string(),
            note: None,
        }
    }

    fn with_note(self, text: String) -> Outcome {
        match self {
            Outcome::Evaluated {
                claimed, computed, ..
            } => Outcome::Evaluated {
                claimed,
                computed,
                note: Some(text),
            },
            skipped => skipped,
        }
    }
}

pub trait Theorem: Send + Sync {
    fn id(&self) -> TheoremId;

    fn check(&self, instance: &Instance, guards: &Guards) -> Result<Outcome>;
}

fn optional(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn spectrum(r: &JResult) -> String {
    format!("{:?}", r.spectrum)
}

fn require_j(base: &Graph, guards: &Guards) -> Result<std::result::Result<usize, Outcome>> {
    let r = j_solve(base, &guards.limits)?;
    Ok(r.j_number
        .ok_or_else(|| Outcome::Skipped("base graph is not J-colourable".into())))
}

fn certificate_edges(g: &Graph, cert: &PaucityCertificate) -> String {
    let edges: Vec<String> = cert
        .added_edges
        .iter()
        .map(|&(i, j)| format!("{}-{}", g.vertex_name(i), g.vertex_name(j)))
        .collect();
    edges.join(" ")
}

struct MycNotJ;

impl Theorem for MycNotJ {
    fn id(&self) -> TheoremId {
        TheoremId::MycNotJ
    }

    fn check(&self, inst: &Instance, guards: &Guards) -> Result<Outcome> {
        let m = mycielskian(&inst.graph);
        let j = j_solve(&m, &guards.limits)?;
        let js = j_star_solve(&m, &guards.limits)?;
        let population = match j_solve(&inst.graph, &guards.limits)?.j_number {
            Some(k) => format!("base J-colourable (J = {k})"),
            None => "base not J-colourable".to_string(),
        };
        Ok(Outcome::compare(
            "J [] J* []",
            format!("J {} J* {}", spectrum(&j), spectrum(&js)),
        )
        .with_note(population))
    }
}

/// `J(construction(G)) = J(G) + offset` for J-colourable `G`.
struct JShift {
    id: TheoremId,
    build: fn(&Graph) -> Graph,
    offset: usize,
}

impl Theorem for JShift {
    fn id(&self) -> TheoremId {
        self.id
    }

    fn check(&self, inst: &Instance, guards: &Guards) -> Result<Outcome> {
        if self.id.is_federico() && !inst.graph.is_triangle_free() {
            return Ok(Outcome::Skipped("base graph has a triangle".into()));
        }
        let k = match require_j(&inst.graph, guards)? {
            Ok(k) => k,
            Err(skip) => return Ok(skip),
        };
        let built = (self.build)(&inst.graph);
        let r = j_solve(&built, &guards.limits)?;
        Ok(Outcome::compare(k + self.offset, optional(r.j_number)))
    }
}

struct FedericoTriangleFree;

impl Theorem for FedericoTriangleFree {
    fn id(&self) -> TheoremId {
        TheoremId::FedericoTriangleFree
    }

    fn check(&self, inst: &Instance, _guards: &Guards) -> Result<Outcome> {
        if !inst.graph.is_triangle_free() {
            return Ok(Outcome::Skipped("base graph has a triangle".into()));
        }
        Ok(Outcome::compare(
            true,
            federico(&inst.graph).is_triangle_free(),
        ))
    }
}

struct FedericoChiEqual;

impl Theorem for FedericoChiEqual {
    fn id(&self) -> TheoremId {
        TheoremId::FedericoChiEqual
    }

    fn check(&self, inst: &Instance, guards: &Guards) -> Result<Outcome> {
        if !inst.graph.is_triangle_free() {
            return Ok(Outcome::Skipped("base graph has a triangle".into()));
        }
        let f = federico(&inst.graph);
        guards.limits.check(&f)?;
        Ok(Outcome::compare(
            chromatic_number(&inst.graph, &guards.limits)?,
            chromatic_number(&f, &guards.limits)?,
        ))
    }
}

struct FedericoCircularEqual;

impl Theorem for FedericoCircularEqual {
    fn id(&self) -> TheoremId {
        TheoremId::FedericoCircularEqual
    }

    fn check(&self, inst: &Instance, guards: &Guards) -> Result<Outcome> {
        if !inst.graph.is_triangle_free() {
            return Ok(Outcome::Skipped("base graph has a triangle".into()));
        }
        let f = federico(&inst.graph);
        guards.limits.check(&f)?;
        let base = circular_chromatic_number(&inst.graph, &guards.limits, None)?;
        let lifted = circular_chromatic_number(&f, &guards.limits, None)?;
        let outcome = Outcome::compare(base.value, lifted.value);
        Ok(match base.witness {
            Some(w) => {
                let ok = is_kd_coloring(&f, &lift_to_federico(&w));
                outcome.with_note(format!("shifted ({},{}) witness valid: {ok}", w.k, w.d))
            }
            None => outcome,
        })
    }
}

struct Paucity {
    id: TheoremId,
}

impl Theorem for Paucity {
    fn id(&self) -> TheoremId {
        self.id
    }

    fn check(&self, inst: &Instance, guards: &Guards) -> Result<Outcome> {
        let n = inst.graph.vertex_count();
        let (claimed, constructive) = match (self.id, inst.family) {
            (TheoremId::PaucityPath, "path") if n >= 2 => (n, paucity_constructive_path(n)?),
            (TheoremId::PaucityCycle, "cycle") if n >= 4 => {
                (n + 2 * (n % 3), paucity_constructive_cycle(n)?)
            }
            (TheoremId::PaucityPath, _) => {
                return Ok(Outcome::Skipped("applies to paths with n >= 2".into()))
            }
            _ => return Ok(Outcome::Skipped("applies to cycles with n >= 4".into())),
        };
        let m = mycielskian(&inst.graph);
        let opts = PaucityOptions {
            budget_limit: None,
            subset_cap: guards.subset_cap,
            limits: guards.limits,
        };
        let exact = paucity_exact(&m, &opts)?
            .expect("joining every vertex pair always admits the constructive colouring");
        Ok(Outcome::compare(claimed, exact.count()).with_note(format!(
            "constructive {}; minimal certificate: {}",
            constructive.count(),
            certificate_edges(&m, &exact)
        )))
    }
}

pub fn registry() -> Vec<Box<dyn Theorem>> {
    vec![
        Box::new(MycNotJ),
        Box::new(JShift {
            id: TheoremId::CribPlusOne,
            build: crib,
            offset: 1,
        }),
        Box::new(JShift {
            id: TheoremId::ShadowEqual,
            build: shadow,
            offset: 0,
        }),
        Box::new(FedericoTriangleFree),
        Box::new(JShift {
            id: TheoremId::FedericoJPlusOne,
            build: federico,
            offset: 1,
        }),
        Box::new(FedericoChiEqual),
        Box::new(FedericoCircularEqual),
        Box::new(Paucity {
            id: TheoremId::PaucityPath,
        }),
        Box::new(Paucity {
            id: TheoremId::PaucityCycle,
        }),
    ]
}

pub fn lookup(id: TheoremId) -> Box<dyn Theorem> {
    registry()
        .into_iter()
        .find(|t| t.id() == id)
        .expect("every theorem id is registered")
}

/// Parameter range used when none is given, chosen so that every derived
/// graph stays at desk scale.
pub fn default_range(id: TheoremId, family: &FamilySpec) -> RangeInclusive<usize> {
    match (id, family) {
        (TheoremId::PaucityCycle, _) => 4..=7,
        (id, FamilySpec::Cycle) if id.is_federico() => 4..=5,
        (id, _) if id.is_federico() => 2..=5,
        (_, FamilySpec::Cycle) => 4..=7,
        (_, FamilySpec::CompleteBipartite { .. }) => 1..=4,
        _ => 2..=7,
    }
}

fn run_one(theorem: &dyn Theorem, inst: &Instance, guards: &Guards) -> TheoremReport {
    let start = Instant::now();
    let outcome = theorem.check(inst, guards);
    let runtime_ms = start.elapsed().as_millis();
    let (claimed, computed, status, note) = match outcome {
        Ok(Outcome::Evaluated {
            claimed,
            computed,
            note,
        }) => {
            let status = if claimed == computed {
                Status::Pass
            } else {
                Status::Fail
            };
            (Some(claimed), Some(computed), status, note)
        }
        Ok(Outcome::Skipped(reason)) => (None, None, Status::Skipped, Some(reason)),
        Err(e @ (Error::SizeLimit { .. } | Error::SearchCap { .. })) => (
            None,
            None,
            Status::Skipped,
            Some(format!("size guard: {e}")),
        ),
        Err(e) => (None, Some(format!("error: {e}")), Status::Fail, None),
    };
    TheoremReport {
        theorem: theorem.id(),
        instance: inst.name(),
        sort_key: (inst.family, inst.params.clone()),
        claimed,
        computed,
        status,
        note,
        runtime_ms,
    }
}

/// Replays one theorem over every instance of the family. Instances run in
/// parallel on the current rayon pool; the report order is fixed.
pub fn verify(
    theorem: TheoremId,
    family: &FamilySpec,
    range: RangeInclusive<usize>,
    guards: &Guards,
) -> Result<Vec<TheoremReport>> {
    let instances = family.instances(range)?;
    let checker = lookup(theorem);
    let mut reports: Vec<TheoremReport> = instances
        .par_iter()
        .map(|inst| run_one(checker.as_ref(), inst, guards))
        .collect();
    sort_reports(&mut reports);
    Ok(reports)
}

pub fn sort_reports(reports: &mut [TheoremReport]) {
    reports.sort_by(|a, b| (a.theorem, &a.sort_key).cmp(&(b.theorem, &b.sort_key)));
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            _ => Err(Error::InvalidParameter(format!(
                "unknown report format {s:?}"
            ))),
        }
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Renders reports sorted by theorem and instance. Runtimes are left out
/// unless `timings` is set so that repeated runs are byte-identical.
pub fn emit_report(reports: &[TheoremReport], format: ReportFormat, timings: bool) -> String {
    let mut sorted = reports.to_vec();
    sort_reports(&mut sorted);
    match format {
        ReportFormat::Json => {
            let values: Vec<serde_json::Value> = sorted
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("report serialises");
                    if timings {
                        v["runtime_ms"] = serde_json::json!(r.runtime_ms as u64);
                    }
                    v
                })
                .collect();
            let mut out = serde_json::to_string_pretty(&values).expect("reports serialise");
            out.push('\n');
            out
        }
        ReportFormat::Markdown => {
            let mut out =
                String::from("| theorem | instance | claimed | computed | status | note |");
            if timings {
                out.push_str(" ms |");
            }
            out.push_str("\n|---|---|---|---|---|---|");
            if timings {
                out.push_str("---|");
            }
            out.push('\n');
            for r in &sorted {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |",
                    r.theorem,
                    r.instance,
                    cell(r.claimed.as_deref().unwrap_or("")),
                    cell(r.computed.as_deref().unwrap_or("")),
                    r.status,
                    cell(r.note.as_deref().unwrap_or("")),
                ));
                if timings {
                    out.push_str(&format!(" {} |", r.runtime_ms));
                }
                out.push('\n');
            }
            out
        }
    }
}
