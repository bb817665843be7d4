//! Executable checks of the vertex-cover bound `conn_Z2(D(G)) + 2 <= τ(G)`
//! and the facts its proof uses, plus a parallel corpus runner.
//!
//! Homotopy equivalences are compared through Z2 Betti numbers only. Every
//! verdict carries the numbers it compared; a failing verdict also carries a
//! witness.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::complex::{
    dominance_complex, dominance_dual, independence_complex_graph, independence_dual,
    lemma7_embedding, SimplicialComplex,
};
use crate::graph::{generate, Family, Graph};
use crate::homology::{reduced_betti, BettiProfile, ExtInt};
use crate::hypergraph::{bowtie, Hypergraph, Involution};

/// Statement attached to every summary.
pub const EQUIVALENCE_LEVEL: &str =
    "homotopy equivalences are checked at the level of reduced Z2 Betti numbers only";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub verdict: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// The computed quantities the verdict compared.
    pub values: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<f64>,
}

impl Verdict {
    fn decide(ok: bool, values: Value, witness: impl FnOnce() -> Value) -> Self {
        Verdict {
            verdict: if ok { Status::Pass } else { Status::Fail },
            witness: (!ok).then(witness),
            reason: None,
            values,
            ms: None,
        }
    }

    fn skip(reason: impl Into<String>, values: Value) -> Self {
        Verdict {
            verdict: Status::Skip,
            witness: None,
            reason: Some(reason.into()),
            values,
            ms: None,
        }
    }

    fn fail(reason: impl Into<String>, values: Value, witness: Value) -> Self {
        Verdict {
            verdict: Status::Fail,
            witness: Some(witness),
            reason: Some(reason.into()),
            values,
            ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Main,
    NotContractible,
    Alexander,
    NagelReiner,
    BowtieChain,
    FreeAction,
    Lemma7,
    Known,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Main,
        Check::NotContractible,
        Check::Alexander,
        Check::NagelReiner,
        Check::BowtieChain,
        Check::FreeAction,
        Check::Lemma7,
        Check::Known,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::NotContractible => "not_contractible",
            Check::Alexander => "alexander",
            Check::NagelReiner => "nagel_reiner",
            Check::BowtieChain => "bowtie_chain",
            Check::FreeAction => "free_action",
            Check::Lemma7 => "lemma7",
            Check::Known => "known",
        }
    }

    /// Needs `D(G)` on `n` vertices.
    pub fn needs_dominance(self) -> bool {
        matches!(
            self,
            Check::Main
                | Check::NotContractible
                | Check::Alexander
                | Check::BowtieChain
                | Check::Known
        )
    }

    /// Needs a complex on the `2n` vertices of `G^⋈`.
    pub fn needs_bowtie(self) -> bool {
        matches!(
            self,
            Check::NagelReiner | Check::BowtieChain | Check::FreeAction | Check::Lemma7
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                format!(
                    "unknown check {s:?}; expected one of {} or all",
                    names.join(", ")
                )
            })
    }
}

/// Parses a comma-separated check list or `all`.
pub fn parse_checks(s: &str) -> Result<Vec<Check>, String> {
    if s.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut checks: Vec<Check> = s
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

/// Graph classes with a known dominance-complex homotopy type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KnownFamily {
    Forest,
    Chordal,
    Cycle,
}

impl KnownFamily {
    /// Most specific class containing `g`, if any.
    pub fn detect(g: &Graph) -> Option<Self> {
        if g.is_cycle() {
            Some(KnownFamily::Cycle)
        } else if g.is_forest() {
            Some(KnownFamily::Forest)
        } else if g.is_chordal() {
            Some(KnownFamily::Chordal)
        } else {
            None
        }
    }

    fn contains(self, g: &Graph) -> bool {
        match self {
            KnownFamily::Forest => g.is_forest(),
            KnownFamily::Chordal => g.is_chordal(),
            KnownFamily::Cycle => g.is_cycle(),
        }
    }
}

/// Expected Betti profile of `D(C_n)`: three `(2t−1)`-spheres for
/// `n = 4t`, one `(2t+i−2)`-sphere for `n = 4t+i`, `i ∈ {1,2,3}`.
pub fn cycle_profile(n: usize) -> BettiProfile {
    let (t, i) = ((n / 4) as isize, (n % 4) as isize);
    if i == 0 {
        BettiProfile::wedge_of_spheres(2 * t - 1, 3)
    } else {
        BettiProfile::sphere(2 * t + i - 2)
    }
}

fn betti_json(p: &BettiProfile) -> Value {
    json!(p.nonzero())
}

/// Lazily computed objects shared by the checks of one graph.
pub struct GraphFacts<'g> {
    g: &'g Graph,
    mis: OnceLock<usize>,
    dominance: OnceLock<BettiProfile>,
    bowtie_complex: OnceLock<SimplicialComplex>,
    bowtie_profile: OnceLock<BettiProfile>,
    suspended_dual: OnceLock<BettiProfile>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(g: &'g Graph) -> Self {
        GraphFacts {
            g,
            mis: OnceLock::new(),
            dominance: OnceLock::new(),
            bowtie_complex: OnceLock::new(),
            bowtie_profile: OnceLock::new(),
            suspended_dual: OnceLock::new(),
        }
    }

    pub fn alpha(&self) -> usize {
        *self.mis.get_or_init(|| self.g.independence_number())
    }

    pub fn tau(&self) -> usize {
        self.g.n() - self.alpha()
    }

    pub fn dominance_profile(&self) -> &BettiProfile {
        self.dominance
            .get_or_init(|| reduced_betti(&dominance_complex(self.g)))
    }

    pub fn conn_d(&self) -> ExtInt {
        self.dominance_profile().conn_z2()
    }

    pub fn bowtie_complex(&self) -> &SimplicialComplex {
        self.bowtie_complex
            .get_or_init(|| independence_complex_graph(&bowtie(self.g)))
    }

    pub fn bowtie_profile(&self) -> &BettiProfile {
        self.bowtie_profile
            .get_or_init(|| reduced_betti(self.bowtie_complex()))
    }

    pub fn hdim_bowtie(&self) -> ExtInt {
        self.bowtie_profile().hdim_z2()
    }

    /// Profile of `Σ D^∨(G)`.
    pub fn suspended_dual_profile(&self) -> &BettiProfile {
        self.suspended_dual.get_or_init(|| {
            let dual = dominance_dual(self.g);
            reduced_betti(&dual.suspension().expect("D^∨(G) is non-void for n >= 1"))
        })
    }

    pub fn main_theorem(&self) -> Verdict {
        let k = self.conn_d();
        let tau = self.tau() as isize;
        match k {
            ExtInt::Finite(k) => Verdict::decide(
                k + 2 <= tau,
                json!({ "k": k, "tau": tau, "gap": tau - (k + 2) }),
                || json!({ "k": k, "tau": tau }),
            ),
            _ => Verdict::fail(
                "D(G) is Z2-acyclic, contradicting non-contractibility",
                json!({ "k": k, "tau": tau }),
                json!({ "betti": betti_json(self.dominance_profile()) }),
            ),
        }
    }

    pub fn not_contractible(&self) -> Verdict {
        let p = self.dominance_profile();
        Verdict::decide(
            !p.is_acyclic(),
            json!({ "betti": betti_json(p) }),
            || json!({ "faces": p.face_count(0), "betti": "all zero" }),
        )
    }

    pub fn alexander(&self) -> Verdict {
        alexander_pair(&dominance_complex(self.g), &dominance_dual(self.g))
    }

    pub fn nagel_reiner(&self) -> Verdict {
        check_nagel_reiner(&Hypergraph::dominance(self.g))
    }

    pub fn bowtie_chain(&self) -> Verdict {
        let n = self.g.n() as isize;
        let alpha = self.alpha() as isize;
        let hdim_bowtie = self.hdim_bowtie();
        let hdim_susp = self.suspended_dual_profile().hdim_z2();
        let k = self.conn_d();
        let predicted = k.finite().map(|k| ExtInt::Finite(n - k - 3));
        let values = json!({
            "alpha": alpha,
            "hdim_bowtie": hdim_bowtie,
            "hdim_suspended_dual": hdim_susp,
            "k": k,
            "n_minus_k_minus_3": predicted,
        });
        let a = ExtInt::Finite(alpha - 1) <= hdim_bowtie;
        let b = hdim_bowtie == hdim_susp;
        let c = predicted == Some(hdim_susp);
        Verdict::decide(a && b && c, values, || {
            json!({
                "alpha_minus_1_le_hdim": a,
                "hdim_bowtie_eq_hdim_suspended_dual": b,
                "hdim_suspended_dual_eq_n_minus_k_minus_3": c,
            })
        })
    }

    pub fn free_action(&self) -> Verdict {
        let k = self.bowtie_complex();
        let gamma = Involution::bowtie(self.g.n());
        let bad = k.facets().iter().find(|f| {
            let image = gamma.apply_set(f);
            !k.contains(&image) || image.intersects(f)
        });
        let values =
            json!({ "facets": k.facets().len(), "fixed_points": gamma.fixed_points().len() });
        Verdict::decide(
            bad.is_none() && gamma.fixed_points().is_empty(),
            values,
            || json!({ "facet": bad }),
        )
    }

    pub fn lemma7(&self) -> Verdict {
        let alpha = self.alpha();
        if alpha == 0 {
            return Verdict::skip("α(G) = 0", json!({ "alpha": 0 }));
        }
        match lemma7_embedding(self.g) {
            Ok(f) => Verdict::decide(
                true,
                json!({
                    "alpha": alpha,
                    "sphere_dim": alpha - 1,
                    "image_facets": f.image_facets().len(),
                    "map": f.map,
                }),
                || Value::Null,
            ),
            Err(e) => Verdict::fail(
                e.to_string(),
                json!({ "alpha": alpha }),
                json!(e.to_string()),
            ),
        }
    }

    pub fn known(&self, family: Option<KnownFamily>) -> Verdict {
        let Some(family) = family.or_else(|| KnownFamily::detect(self.g)) else {
            return Verdict::skip("not a forest, chordal graph or cycle", json!({}));
        };
        if !family.contains(self.g) {
            return Verdict::skip(format!("graph is not in family {family:?}"), json!({}));
        }
        let expected = match family {
            KnownFamily::Cycle => cycle_profile(self.g.n()),
            KnownFamily::Forest | KnownFamily::Chordal => {
                BettiProfile::sphere(self.tau() as isize - 1)
            }
        };
        let got = self.dominance_profile();
        let values = json!({
            "family": family,
            "tau": self.tau(),
            "expected": betti_json(&expected),
            "betti": betti_json(got),
        });
        Verdict::decide(
            got.same_betti(&expected),
            values,
            || json!({ "betti": betti_json(got) }),
        )
    }

    pub fn run(&self, check: Check) -> Verdict {
        match check {
            Check::Main => self.main_theorem(),
            Check::NotContractible => self.not_contractible(),
            Check::Alexander => self.alexander(),
            Check::NagelReiner => self.nagel_reiner(),
            Check::BowtieChain => self.bowtie_chain(),
            Check::FreeAction => self.free_action(),
            Check::Lemma7 => self.lemma7(),
            Check::Known => self.known(None),
        }
    }
}

pub fn check_main_theorem(g: &Graph) -> Verdict {
    GraphFacts::new(g).main_theorem()
}

pub fn check_not_contractible(g: &Graph) -> Verdict {
    GraphFacts::new(g).not_contractible()
}

pub fn check_bowtie_chain(g: &Graph) -> Verdict {
    GraphFacts::new(g).bowtie_chain()
}

pub fn check_free_action(g: &Graph) -> Verdict {
    GraphFacts::new(g).free_action()
}

pub fn check_lemma7_embedding(g: &Graph) -> Verdict {
    GraphFacts::new(g).lemma7()
}

pub fn check_known_types(g: &Graph, family: KnownFamily) -> Verdict {
    GraphFacts::new(g).known(Some(family))
}

/// `β̃_i(K^∨) = β̃_{n−i−3}(K)` for every `i ∈ {−1..n}`. Skips the void
/// complex and the full simplex.
pub fn check_alexander_duality(k: &SimplicialComplex) -> Verdict {
    if k.is_void() || k.is_full_simplex() {
        return Verdict::skip("void complex or full simplex", json!({ "n": k.n() }));
    }
    match k.alexander_dual() {
        Ok(dual) => alexander_pair(k, &dual),
        Err(e) => Verdict::skip(e.to_string(), json!({ "n": k.n() })),
    }
}

fn alexander_pair(k: &SimplicialComplex, dual: &SimplicialComplex) -> Verdict {
    let n = k.n() as isize;
    let pk = reduced_betti(k);
    let pd = reduced_betti(dual);
    let mismatch = (-1..=n).find(|&i| pd.get(i) != pk.get(n - i - 3));
    let values = json!({ "n": n, "betti": betti_json(&pk), "dual_betti": betti_json(&pd) });
    Verdict::decide(mismatch.is_none(), values, || {
        let i = mismatch.unwrap();
        json!({ "i": i, "dual": pd.get(i), "complex_at_n_minus_i_minus_3": pk.get(n - i - 3) })
    })
}

/// `Σ(I^∨(H))` and `I(B_H)` have equal reduced Z2 Betti numbers. Skips when
/// `I^∨(H)` is void, i.e. `H` has no hyperedges.
pub fn check_nagel_reiner(h: &Hypergraph) -> Verdict {
    let dual = independence_dual(h);
    if dual.is_void() {
        return Verdict::skip("I^∨(H) is void (no hyperedges)", json!({ "n": h.n() }));
    }
    if h.n() + h.edges().len() > MAX_VERTICES {
        return Verdict::skip("B_H exceeds vertex capacity", json!({ "n": h.n() }));
    }
    let lhs = reduced_betti(&dual.suspension().expect("non-void"));
    let rhs = reduced_betti(&independence_complex_graph(&h.associated_bipartite()));
    let values =
        json!({ "suspended_dual": betti_json(&lhs), "bipartite_independence": betti_json(&rhs) });
    Verdict::decide(
        lhs.same_betti(&rhs),
        values,
        || json!({ "hypergraph": h.to_text(), "suspended_dual": betti_json(&lhs), "bipartite_independence": betti_json(&rhs) }),
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub n: usize,
    pub alpha: usize,
    pub tau: usize,
    pub conn_d: Option<ExtInt>,
    pub hdim_bowtie: Option<ExtInt>,
    pub checks: BTreeMap<&'static str, Verdict>,
}

impl VerificationReport {
    pub fn failed(&self) -> bool {
        self.checks.values().any(|v| v.verdict == Status::Fail)
    }

    pub fn gap(&self) -> Option<i64> {
        self.checks
            .get("main")
            .and_then(|v| v.values.get("gap"))
            .and_then(Value::as_i64)
    }
}

/// One corpus entry: a graph or the reason it could not be read.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub id: String,
    pub graph: Result<Graph, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ReportLine {
    Report(VerificationReport),
    Error { id: String, error: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    /// Skips caused by a size cap; included in `skip`.
    pub refused: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub parse_errors: usize,
    pub failures: usize,
    pub checks: BTreeMap<&'static str, CheckTally>,
    pub max_gap: Option<i64>,
    pub max_gap_ids: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_id: Option<String>,
    pub equivalence_level: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusOutcome {
    pub lines: Vec<ReportLine>,
    pub summary: Summary,
}

impl CorpusOutcome {
    pub fn reports(&self) -> impl Iterator<Item = &VerificationReport> {
        self.lines.iter().filter_map(|l| match l {
            ReportLine::Report(r) => Some(r),
            ReportLine::Error { .. } => None,
        })
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub checks: Vec<Check>,
    pub workers: usize,
    pub timings: bool,
    pub max_n: usize,
    pub max_bowtie_n: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            checks: Check::ALL.to_vec(),
            workers: 1,
            timings: false,
            max_n: 18,
            max_bowtie_n: 9,
        }
    }
}

const REFUSAL_PREFIX: &str = "refusing ";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Refusal {
    #[error("{REFUSAL_PREFIX}{id}: n={n} exceeds the {what} cap {cap} (raise it with {flag} {n})")]
    Cap {
        id: String,
        n: usize,
        cap: usize,
        what: &'static str,
        flag: &'static str,
    },
    #[error("invalid run options: {0}")]
    Options(String),
}

/// Size checks for one graph against the caps the selected checks need.
/// A refused check is reported as a skip whose reason is the refusal.
pub fn enforce_caps(
    id: &str,
    n: usize,
    checks: &[Check],
    opts: &RunOptions,
) -> Result<(), Refusal> {
    if checks.iter().any(|c| c.needs_dominance()) && n > opts.max_n {
        return Err(Refusal::Cap {
            id: id.into(),
            n,
            cap: opts.max_n,
            what: "dominance complex",
            flag: "--max-n",
        });
    }
    if checks.iter().any(|c| c.needs_bowtie()) && n > opts.max_bowtie_n {
        return Err(Refusal::Cap {
            id: id.into(),
            n,
            cap: opts.max_bowtie_n,
            what: "bowtie complex",
            flag: "--max-bowtie-n",
        });
    }
    Ok(())
}

fn verify_one(id: &str, g: &Graph, opts: &RunOptions) -> VerificationReport {
    let facts = GraphFacts::new(g);
    let mut checks = BTreeMap::new();
    for &check in &opts.checks {
        let start = Instant::now();
        let mut verdict = if g.n() == 0 {
            Verdict::skip("checks need n >= 1", json!({ "n": 0 }))
        } else if let Err(refusal) = enforce_caps(id, g.n(), &[check], opts) {
            Verdict::skip(refusal.to_string(), json!({ "n": g.n() }))
        } else {
            facts.run(check)
        };
        if opts.timings {
            verdict.ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        checks.insert(check.name(), verdict);
    }
    let uses_dominance =
        (1..=opts.max_n).contains(&g.n()) && opts.checks.iter().any(|c| c.needs_dominance());
    let uses_bowtie =
        (1..=opts.max_bowtie_n).contains(&g.n()) && opts.checks.iter().any(|c| c.needs_bowtie());
    VerificationReport {
        id: id.to_string(),
        n: g.n(),
        alpha: facts.alpha(),
        tau: facts.tau(),
        conn_d: uses_dominance.then(|| facts.conn_d()),
        hdim_bowtie: uses_bowtie.then(|| facts.hdim_bowtie()),
        checks,
    }
}

/// Runs the selected checks over `items` on a pool of `opts.workers`
/// threads. Output order follows input order. Checks whose size cap a graph
/// exceeds are refused before anything is built and reported as skips.
pub fn run_corpus(items: &[CorpusItem], opts: &RunOptions) -> Result<CorpusOutcome, Refusal> {
    if opts.workers == 0 {
        return Err(Refusal::Options("worker count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Refusal::Options(e.to_string()))?;
    let lines: Vec<ReportLine> = pool.install(|| {
        items
            .par_iter()
            .map(|item| match &item.graph {
                Ok(g) => ReportLine::Report(verify_one(&item.id, g, opts)),
                Err(e) => ReportLine::Error {
                    id: item.id.clone(),
                    error: e.clone(),
                },
            })
            .collect()
    });
    let summary = summarize(&lines, opts);
    Ok(CorpusOutcome { lines, summary })
}

fn summarize(lines: &[ReportLine], opts: &RunOptions) -> Summary {
    let mut summary = Summary {
        graphs: 0,
        parse_errors: 0,
        failures: 0,
        checks: opts
            .checks
            .iter()
            .map(|c| (c.name(), CheckTally::default()))
            .collect(),
        max_gap: None,
        max_gap_ids: Vec::new(),
        worst_ms: None,
        worst_id: None,
        equivalence_level: EQUIVALENCE_LEVEL,
    };
    for line in lines {
        let r = match line {
            ReportLine::Report(r) => r,
            ReportLine::Error { .. } => {
                summary.parse_errors += 1;
                continue;
            }
        };
        summary.graphs += 1;
        for (name, v) in &r.checks {
            let tally = summary.checks.entry(name).or_default();
            match v.verdict {
                Status::Pass => tally.pass += 1,
                Status::Fail => {
                    tally.fail += 1;
                    summary.failures += 1;
                }
                Status::Skip => {
                    tally.skip += 1;
                    if v.reason
                        .as_deref()
                        .is_some_and(|r| r.starts_with(REFUSAL_PREFIX))
                    {
                        tally.refused += 1;
                    }
                }
            }
        }
        if let Some(gap) = r.gap() {
            match summary.max_gap {
                Some(m) if m > gap => {}
                Some(m) if m == gap => summary.max_gap_ids.push(r.id.clone()),
                _ => {
                    summary.max_gap = Some(gap);
                    summary.max_gap_ids = vec![r.id.clone()];
                }
            }
        }
        if opts.timings {
            let total: f64 = r.checks.values().filter_map(|v| v.ms).sum();
            if summary.worst_ms.is_none_or(|w| total > w) {
                summary.worst_ms = Some(total);
                summary.worst_id = Some(r.id.clone());
            }
        }
    }
    summary
}

/// Generator families a corpus can be drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusFamily {
    Path,
    Cycle,
    Complete,
    Star,
    Tree,
    Chordal,
    Gnp,
    /// Every labelled graph on `n` vertices.
    AllLabeled,
}

impl FromStr for CorpusFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "path" | "paths" => CorpusFamily::Path,
            "cycle" | "cycles" => CorpusFamily::Cycle,
            "complete" => CorpusFamily::Complete,
            "star" | "stars" => CorpusFamily::Star,
            "tree" | "trees" | "random_tree" => CorpusFamily::Tree,
            "chordal" | "random_chordal" => CorpusFamily::Chordal,
            "gnp" => CorpusFamily::Gnp,
            "all-labeled" | "all_labeled" => CorpusFamily::AllLabeled,
            other => return Err(format!("unknown family {other:?}")),
        })
    }
}

impl CorpusFamily {
    /// Seeded families that emit `count` graphs.
    pub fn is_random(self) -> bool {
        matches!(
            self,
            CorpusFamily::Tree | CorpusFamily::Chordal | CorpusFamily::Gnp
        )
    }
}

/// Largest order for exhaustive labelled enumeration (2^21 graphs).
pub const ALL_LABELED_MAX_N: usize = 7;

/// A generator-backed corpus.
///
/// Deterministic families emit one graph per size. Random families emit
/// `count` graphs; graph `i` uses seed `seed + i` and size
/// `lo + i mod (hi − lo + 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub family: CorpusFamily,
    pub sizes: (usize, usize),
    pub count: usize,
    pub seed: u64,
    pub p: f64,
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusItem>, String> {
    let (lo, hi) = spec.sizes;
    if lo > hi {
        return Err(format!("empty size range {lo}..{hi}"));
    }
    let item = |id: String, g: Result<Graph, String>| CorpusItem { id, graph: g };
    let fixed = |fam: fn(usize) -> Family, tag: &str| -> Vec<CorpusItem> {
        (lo..=hi)
            .map(|n| {
                item(
                    format!("{tag}-n{n}"),
                    generate(fam(n), 0).map_err(|e| e.to_string()),
                )
            })
            .collect()
    };
    let random = |fam: &dyn Fn(usize) -> Family, tag: &str| -> Vec<CorpusItem> {
        (0..spec.count)
            .map(|i| {
                let n = lo + i % (hi - lo + 1);
                let seed = spec.seed + i as u64;
                item(
                    format!("{tag}-n{n}-s{seed}"),
                    generate(fam(n), seed).map_err(|e| e.to_string()),
                )
            })
            .collect()
    };
    Ok(match spec.family {
        CorpusFamily::Path => fixed(Family::Path, "path"),
        CorpusFamily::Cycle => fixed(Family::Cycle, "cycle"),
        CorpusFamily::Complete => fixed(Family::Complete, "complete"),
        CorpusFamily::Star => fixed(Family::Star, "star"),
        CorpusFamily::Tree => random(&Family::RandomTree, "tree"),
        CorpusFamily::Chordal => random(&Family::RandomChordal, "chordal"),
        CorpusFamily::Gnp => random(&|n| Family::Gnp(n, spec.p), "gnp"),
        CorpusFamily::AllLabeled => {
            if hi > ALL_LABELED_MAX_N {
                return Err(format!(
                    "all-labeled enumeration is capped at n={ALL_LABELED_MAX_N}"
                ));
            }
            (lo..=hi)
                .flat_map(|n| {
                    all_labeled(n)
                        .into_iter()
                        .enumerate()
                        .map(move |(i, g)| CorpusItem {
                            id: format!("labeled-n{n}-{i}"),
                            graph: Ok(g),
                        })
                })
                .collect()
        }
    })
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices; bit `k` of the
/// index selects the `k`-th pair in `(0,1), (0,2), .., (n-2,n-1)` order.
pub fn all_labeled(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges)
        })
        .collect()
}
