//! Verification harness: the independent brute-force oracle, theorem sweeps
//! over graph6 streams, lemma property suites, and boundary hunting.
//!
//! The oracle in [`oracle`] shares no search code with the `chorded` or
//! `packing` modules; it is the anti-circularity firewall behind every
//! packing claim checked here.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::bitgraph::{self, bit, Bits};
use crate::chorded::{NoChordedReason, TwoPathConfig, TwoPathVerdict};
use crate::error::{Error, Result};
use crate::generators::XorShift64Star;
use crate::graph::{delta_m, DegreeValue, Graph};
use crate::graph6::{parse_graph6, serialize_graph6};
use crate::packing::{
    check_minimality, degree3_classify, exact_min_system, pack_chorded_cycles, path_inequalities,
    six_cycle_swap, Caps, PackOutcome, RSystem,
};
use crate::structure::{longest_path, no_ham_path_trichotomy, Path};

pub mod oracle {
    //! Exhaustive ground truth, deliberately simple and slow.
    //!
    //! Everything here works from the public adjacency API only: subsets of
    //! vertices are tested for carrying a chorded Hamiltonian cycle, and
    //! packings are disjoint unions of carrier subsets. No cycle enumerator,
    //! pruning rule, or witness builder is shared with the search modules.

    use super::*;
    use crate::chorded::ChordedCycle;

    fn adjacency(g: &Graph) -> Vec<u64> {
        (0..g.n()).map(|u| g.neighbors(u).fold(0u64, |m, v| m | (1 << v))).collect()
    }

    /// Does the graph contain any chorded cycle? Plain recursive cycle
    /// enumeration with a chord test at every closure.
    pub fn chorded_cycle_exists(g: &Graph) -> Result<bool> {
        if g.n() > 64 {
            return Err(Error::CapacityExceeded("oracle supports n <= 64".into()));
        }
        let rows = adjacency(g);
        let mask = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
        Ok(chorded_cycle_exists_rows(&rows, mask))
    }

    pub(crate) fn chorded_cycle_exists_rows(rows: &[u64], mask: u64) -> bool {
        fn extend(rows: &[u64], allowed: u64, root: usize, path: &mut Vec<usize>, used: u64) -> bool {
            let last = *path.last().unwrap();
            let mut cand = rows[last] & allowed & !used;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                // Close a cycle of length >= 4 and look for a chord.
                if path.len() >= 3 && rows[v] & (1 << root) != 0 && path[1] < v {
                    path.push(v);
                    let chorded = has_chord(rows, path);
                    path.pop();
                    if chorded {
                        return true;
                    }
                }
                path.push(v);
                if extend(rows, allowed, root, path, used | (1 << v)) {
                    path.pop();
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut m = mask;
        while m != 0 {
            let root = m.trailing_zeros() as usize;
            m &= m - 1;
            let allowed = mask & !((1u64 << root) - 1);
            let mut path = vec![root];
            if extend(rows, allowed, root, &mut path, 1 << root) {
                return true;
            }
        }
        false
    }

    fn has_chord(rows: &[u64], cycle: &[usize]) -> bool {
        let len = cycle.len();
        for i in 0..len {
            for j in i + 2..len {
                if i == 0 && j == len - 1 {
                    continue;
                }
                if rows[cycle[i]] & (1 << cycle[j]) != 0 {
                    return true;
                }
            }
        }
        false
    }

    /// A Hamiltonian cycle of the subset `mask` that carries a chord, if any.
    fn chorded_ham_cycle(rows: &[u64], mask: u64) -> Option<Vec<usize>> {
        let k = mask.count_ones() as usize;
        if k < 4 {
            return None;
        }
        // Necessary condition: two neighbors inside the subset for everyone.
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if (rows[v] & mask).count_ones() < 2 {
                return None;
            }
        }
        let root = mask.trailing_zeros() as usize;

        fn extend(rows: &[u64], mask: u64, root: usize, k: usize, path: &mut Vec<usize>, used: u64) -> bool {
            if path.len() == k {
                let last = *path.last().unwrap();
                return rows[last] & (1 << root) != 0 && path[1] < last && has_chord(rows, path);
            }
            let last = *path.last().unwrap();
            let mut cand = rows[last] & mask & !used;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                path.push(v);
                if extend(rows, mask, root, k, path, used | (1 << v)) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = vec![root];
        if extend(rows, mask, root, k, &mut path, 1 << root) {
            Some(path)
        } else {
            None
        }
    }

    /// Exhaustively decides whether `g` contains `s` vertex-disjoint chorded
    /// cycles, with a deterministic witness when it does.
    pub fn oracle_pack_exists(g: &Graph, s: usize, cap: usize) -> Result<(bool, Option<RSystem>)> {
        if s == 0 {
            return Err(Error::PreconditionViolated("s must be at least 1".into()));
        }
        if g.n() > cap || g.n() > 63 {
            return Err(Error::CapacityExceeded(format!(
                "oracle cap is {} vertices, got {}",
                cap.min(63),
                g.n()
            )));
        }
        let rows = adjacency(g);
        let n = g.n();
        let mut carriers: Vec<(u64, Vec<usize>)> = Vec::new();
        let top: u64 = (1u64 << n) - 1;
        for mask in 1..=top {
            if mask.count_ones() >= 4 {
                if let Some(seq) = chorded_ham_cycle(&rows, mask) {
                    carriers.push((mask, seq));
                }
            }
        }

        fn choose(
            carriers: &[(u64, Vec<usize>)],
            start: usize,
            used: u64,
            left: usize,
            picked: &mut Vec<usize>,
        ) -> bool {
            if left == 0 {
                return true;
            }
            for i in start..carriers.len() {
                if carriers[i].0 & used != 0 {
                    continue;
                }
                picked.push(i);
                if choose(carriers, i + 1, used | carriers[i].0, left - 1, picked) {
                    return true;
                }
                picked.pop();
            }
            false
        }
        let mut picked = Vec::new();
        if !choose(&carriers, 0, 0, s, &mut picked) {
            return Ok((false, None));
        }
        let mut cycles = Vec::new();
        for &i in &picked {
            let seq = carriers[i].1.clone();
            let mut chords = Vec::new();
            for a in 0..seq.len() {
                for b in a + 2..seq.len() {
                    if a == 0 && b == seq.len() - 1 {
                        continue;
                    }
                    if rows[seq[a]] & (1 << seq[b]) != 0 {
                        chords.push((seq[a], seq[b]));
                    }
                }
            }
            cycles.push(ChordedCycle::new(g, seq, chords)?);
        }
        Ok((true, Some(RSystem::new(g, cycles)?)))
    }
}

/// Hypothesis record for one instance of the packing theorem.
#[derive(Clone, Debug, Serialize)]
pub struct Hypotheses {
    pub two_connected: bool,
    pub order_ok: bool,
    pub delta2: DegreeValue,
    pub complete: bool,
}

impl Hypotheses {
    pub fn applicable(&self, s: usize) -> bool {
        self.two_connected && self.order_ok && (self.complete || self.delta2.at_least(4 * s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Some hypothesis fails; nothing to check.
    VacuousPass,
    Pass,
    TheoremViolation,
    OracleDisagreement,
    /// Packer budget and oracle cap both exceeded; no verdict either way.
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessCycle {
    pub cycle: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleStatus {
    Ran { exists: bool },
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub graph_id: String,
    pub s: usize,
    pub hypotheses: Hypotheses,
    pub outcome: Outcome,
    pub packer: String,
    pub oracle: OracleStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessCycle>>,
}

fn witness_repr(sys: &RSystem) -> Vec<WitnessCycle> {
    sys.cycles()
        .iter()
        .map(|c| WitnessCycle { cycle: c.cycle().vertices().to_vec(), chords: c.chords().to_vec() })
        .collect()
}

/// Evaluates the theorem hypotheses on one graph, runs the packer (always,
/// as information) and the oracle (within cap), and classifies the outcome.
pub fn check_theorem_instance(g: &Graph, s: usize, caps: &Caps) -> InstanceReport {
    let delta2 = delta_m(g, 2).expect("m = 2");
    let hypotheses = Hypotheses {
        two_connected: crate::structure::is_two_connected(g),
        order_ok: g.n() >= 4 * s,
        delta2,
        complete: g.is_complete(),
    };
    let pack = pack_chorded_cycles(g, s, caps);
    let oracle_res = if g.n() <= caps.oracle_n {
        oracle::oracle_pack_exists(g, s, caps.oracle_n).ok()
    } else {
        None
    };
    let oracle_status = match &oracle_res {
        Some((exists, _)) => OracleStatus::Ran { exists: *exists },
        None => OracleStatus::Skipped,
    };
    let packer_name = match &pack {
        Ok(PackOutcome::Witness(_)) => "witness",
        Ok(PackOutcome::NotFoundProven) => "not-found-proven",
        Ok(PackOutcome::BudgetExhausted) => "budget-exhausted",
        Err(_) => "capacity-exceeded",
    }
    .to_string();

    let mut witness = match &pack {
        Ok(PackOutcome::Witness(sys)) => {
            sys.validate(g).expect("packer witnesses are re-validated");
            Some(witness_repr(sys))
        }
        _ => None,
    };

    let outcome = if !hypotheses.applicable(s) {
        Outcome::VacuousPass
    } else {
        match (&pack, &oracle_res) {
            (Ok(PackOutcome::Witness(_)), Some((true, _))) => Outcome::Pass,
            (Ok(PackOutcome::Witness(_)), None) => Outcome::Pass,
            (Ok(PackOutcome::Witness(_)), Some((false, _))) => Outcome::OracleDisagreement,
            (Ok(PackOutcome::NotFoundProven), Some((true, _))) => Outcome::OracleDisagreement,
            (Ok(PackOutcome::NotFoundProven), _) => Outcome::TheoremViolation,
            (Ok(PackOutcome::BudgetExhausted), Some((true, sys))) => {
                if let Some(sys) = sys {
                    sys.validate(g).expect("oracle witnesses are re-validated");
                    witness = Some(witness_repr(sys));
                }
                Outcome::Pass
            }
            (Ok(PackOutcome::BudgetExhausted), Some((false, _))) => Outcome::TheoremViolation,
            (Ok(PackOutcome::BudgetExhausted), None) => Outcome::Undecided,
            (Err(_), _) => Outcome::Undecided,
        }
    };

    InstanceReport {
        graph_id: serialize_graph6(g),
        s,
        hypotheses,
        outcome,
        packer: packer_name,
        oracle: oracle_status,
        witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Verify,
    HuntBoundary,
}

/// Aggregate of a sweep or a lemma suite. `counts` sums to `total`.
#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub schema_version: u32,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    pub total: u64,
    pub counts: BTreeMap<String, u64>,
    pub violations: Vec<String>,
    pub boundary_witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    pub config: String,
}

impl SweepSummary {
    fn new(mode: &str, s: Option<usize>, config: String) -> Self {
        SweepSummary {
            schema_version: 1,
            mode: mode.to_string(),
            s,
            total: 0,
            counts: BTreeMap::new(),
            violations: Vec::new(),
            boundary_witnesses: Vec::new(),
            timing_ms: None,
            config,
        }
    }

    fn bump(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn clean(&self) -> bool {
        self.violations.is_empty()
            && self.boundary_witnesses.is_empty()
            && self.counts.get("theorem_violation").copied().unwrap_or(0) == 0
            && self.counts.get("oracle_disagreement").copied().unwrap_or(0) == 0
    }
}

/// Processes a graph6 stream line by line. Verify mode classifies every
/// instance; hunt-boundary mode selects graphs sitting one below the
/// theorem's bound and records oracle-proven non-packable ones. Per-line
/// parse errors are counted, not fatal. With `jobs > 1`, lines are processed
/// in bounded batches and merged in input order, so output is
/// schedule-independent.
pub fn sweep(
    lines: impl Iterator<Item = std::io::Result<String>>,
    s: usize,
    mode: SweepMode,
    caps: &Caps,
    jobs: usize,
    with_timing: bool,
) -> SweepSummary {
    let start = Instant::now();
    let mode_name = match mode {
        SweepMode::Verify => "verify",
        SweepMode::HuntBoundary => "hunt-boundary",
    };
    let mut summary = SweepSummary::new(
        mode_name,
        Some(s),
        format!(
            "caps: exact_n={}, oracle_n={}, budget={}; jobs={jobs}",
            caps.exact_n, caps.oracle_n, caps.budget
        ),
    );
    let jobs = jobs.max(1);
    let batch_size = jobs * 32;
    let mut lines = lines.peekable();
    let mut line_no = 0u64;
    while lines.peek().is_some() {
        let batch: Vec<(u64, std::io::Result<String>)> = lines
            .by_ref()
            .take(batch_size)
            .map(|l| {
                line_no += 1;
                (line_no, l)
            })
            .collect();
        let results: Vec<(u64, LineResult)> = if jobs == 1 || batch.len() == 1 {
            batch.iter().map(|(no, l)| (*no, process_line(l, s, mode, caps))).collect()
        } else {
            let chunk = batch.len().div_ceil(jobs);
            std::thread::scope(|scope| {
                let handles: Vec<_> = batch
                    .chunks(chunk)
                    .map(|part| {
                        scope.spawn(move || {
                            part.iter()
                                .map(|(no, l)| (*no, process_line(l, s, mode, caps)))
                                .collect::<Vec<_>>()
                        })
                    })
                    .collect();
                let mut all: Vec<(u64, LineResult)> =
                    handles.into_iter().flat_map(|h| h.join().expect("sweep worker")).collect();
                all.sort_by_key(|(no, _)| *no);
                all
            })
        };
        for (no, res) in results {
            match res {
                LineResult::ParseError(e) => {
                    summary.bump("parse_error");
                    summary.violations.push(format!("line {no}: {e}"));
                }
                LineResult::Verified(report) => {
                    let key = match report.outcome {
                        Outcome::VacuousPass => "vacuous_pass",
                        Outcome::Pass => "pass",
                        Outcome::TheoremViolation => "theorem_violation",
                        Outcome::OracleDisagreement => "oracle_disagreement",
                        Outcome::Undecided => "undecided",
                    };
                    summary.bump(key);
                    if matches!(
                        report.outcome,
                        Outcome::TheoremViolation | Outcome::OracleDisagreement
                    ) {
                        summary.violations.push(format!("line {no}: {} {}", key, report.graph_id));
                    }
                }
                LineResult::NotSelected => summary.bump("not_selected"),
                LineResult::SelectedClean => summary.bump("selected"),
                LineResult::SelectedSkipped => summary.bump("oracle_skipped"),
                LineResult::BoundaryWitness(id) => {
                    summary.bump("boundary_witness");
                    summary.boundary_witnesses.push(id);
                }
            }
        }
    }
    summary.violations.sort();
    summary.boundary_witnesses.sort();
    if with_timing {
        summary.timing_ms = Some(start.elapsed().as_millis());
    }
    summary
}

enum LineResult {
    ParseError(String),
    Verified(Box<InstanceReport>),
    NotSelected,
    SelectedClean,
    SelectedSkipped,
    BoundaryWitness(String),
}

fn process_line(line: &std::io::Result<String>, s: usize, mode: SweepMode, caps: &Caps) -> LineResult {
    let text = match line {
        Ok(t) => t.trim(),
        Err(e) => return LineResult::ParseError(e.to_string()),
    };
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return LineResult::ParseError(e.to_string()),
    };
    match mode {
        SweepMode::Verify => LineResult::Verified(Box::new(check_theorem_instance(&g, s, caps))),
        SweepMode::HuntBoundary => {
            // One below the bound: delta_2 exactly 4s - 1, other hypotheses hold.
            let selected = crate::structure::is_two_connected(&g)
                && g.n() >= 4 * s
                && delta_m(&g, 2).expect("m = 2") == DegreeValue::Finite(4 * s - 1);
            if !selected {
                return LineResult::NotSelected;
            }
            if g.n() > caps.oracle_n {
                return LineResult::SelectedSkipped;
            }
            match oracle::oracle_pack_exists(&g, s, caps.oracle_n) {
                Ok((false, _)) => LineResult::BoundaryWitness(serialize_graph6(&g)),
                Ok((true, _)) => LineResult::SelectedClean,
                Err(e) => LineResult::ParseError(e.to_string()),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Exhaustive small-graph enumeration.

/// Edge list order used by the labeled enumerations: `(0,1), (0,2), (1,2),
/// (0,3), ...` (upper triangle by column).
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

/// Calls `f` for every labeled graph on `n <= 7` vertices (all `2^C(n,2)`
/// edge subsets), as adjacency rows.
pub fn for_each_labeled_graph(n: usize, f: &mut dyn FnMut(&[u64])) -> Result<()> {
    if n > 7 {
        return Err(Error::CapacityExceeded(
            "full labeled enumeration is built in only for n <= 7".into(),
        ));
    }
    let pairs = edge_pairs(n);
    let total: u64 = 1 << pairs.len();
    let mut rows = vec![0u64; n];
    for mask in 0..total {
        for r in rows.iter_mut() {
            *r = 0;
        }
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = pairs[i];
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        f(&rows);
    }
    Ok(())
}

/// Calls `f` for every labeled graph on `n` vertices with exactly `k` edges
/// whose minimum edge index equals `min_edge`; a unit of work for parallel
/// edge-bounded enumerations.
pub fn for_each_graph_with_edges(n: usize, k: usize, min_edge: usize, f: &mut dyn FnMut(&[u64])) {
    let pairs = edge_pairs(n);
    if k == 0 {
        if min_edge == 0 {
            f(&vec![0u64; n]);
        }
        return;
    }
    if min_edge >= pairs.len() {
        return;
    }
    let mut rows = vec![0u64; n];
    let (u, v) = pairs[min_edge];
    rows[u] |= bit(v);
    rows[v] |= bit(u);
    fill(&pairs, min_edge + 1, k - 1, &mut rows, f);

    fn fill(pairs: &[(usize, usize)], start: usize, left: usize, rows: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
        if left == 0 {
            f(rows);
            return;
        }
        if pairs.len() - start < left {
            return;
        }
        for i in start..pairs.len() {
            if pairs.len() - i < left {
                break;
            }
            let (u, v) = pairs[i];
            rows[u] |= bit(v);
            rows[v] |= bit(u);
            fill(pairs, i + 1, left - 1, rows, f);
            rows[u] &= !bit(v);
            rows[v] &= !bit(u);
        }
    }
}

pub(crate) fn graph_from_rows(n: usize, rows: &[u64]) -> Graph {
    let mut edges = Vec::new();
    for (u, &row) in rows.iter().enumerate() {
        for v in Bits(row) {
            if v > u {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("rows form a valid simple graph")
}

// ---------------------------------------------------------------------------
// Lemma property suites.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaScope {
    TwoPath,
    Degree2,
    V2,
    CMini,
    FivePath,
    Degree3,
    SixCycle,
}

/// Runs the property suite for one lemma scope over exhaustive small
/// instances (structure scopes) or seeded random instances (packing
/// scopes). Violations are expected to be empty.
pub fn lemma_suite(scope: LemmaScope, bound: usize, seed: u64) -> Result<SweepSummary> {
    let start = Instant::now();
    let mut summary =
        SweepSummary::new(&format!("lemma:{scope:?}"), None, format!("bound={bound}, seed={seed}"));
    match scope {
        LemmaScope::TwoPath => {
            two_path_suite(bound.min(5), &mut summary)?;
        }
        LemmaScope::Degree2 | LemmaScope::V2 => {
            let stats = structure_domain_sweep(bound.min(8), scope, 1)?;
            *summary.counts.entry("domain".into()).or_insert(0) = stats.domain_size;
            summary.total = stats.domain_size;
            summary.violations = stats.violations;
        }
        LemmaScope::CMini | LemmaScope::FivePath | LemmaScope::Degree3 | LemmaScope::SixCycle => {
            let stats = min_system_suite(bound.min(14), 2, 1000, seed, Some(scope))?;
            *summary.counts.entry("instances".into()).or_insert(0) = stats.instances;
            *summary.counts.entry("checks".into()).or_insert(0) = stats.checks;
            summary.total = stats.instances + stats.checks;
            summary.violations = stats.violations;
            if scope == LemmaScope::FivePath {
                // Suite self-test: a corrupted (non-minimal) system must be
                // flagged by the inequalities.
                if five_path_negative_control()? {
                    summary.bump("self_test_ok");
                } else {
                    summary.violations.push("negative control failed to flag a violation".into());
                }
            }
        }
    }
    summary.violations.sort();
    summary.timing_ms = Some(start.elapsed().as_millis());
    Ok(summary)
}

fn two_path_suite(pq_bound: usize, summary: &mut SweepSummary) -> Result<()> {
    for p in 1..=pq_bound {
        for q in 1..=pq_bound {
            let mut all_pairs = Vec::new();
            for i in 0..p {
                for j in 0..q {
                    all_pairs.push((i, j));
                }
            }
            let mut subset = Vec::new();
            enumerate_subsets(&all_pairs, 0, 6, &mut subset, &mut |cross| {
                let cfg = TwoPathConfig::new(p, q, cross.to_vec()).expect("valid config");
                match two_path_analyze_checked(&cfg) {
                    Ok(v) => {
                        let brute = oracle::chorded_cycle_exists(&cfg.realize()).expect("small");
                        let said_chorded = matches!(v, TwoPathVerdict::Chorded(_));
                        if said_chorded != brute {
                            summary
                                .violations
                                .push(format!("verdict mismatch at p={p} q={q} cross={cross:?}"));
                        } else if !said_chorded
                            && matches!(cross.len(), 3 | 4)
                            && !matches!(v, TwoPathVerdict::NoChorded(NoChordedReason::Template(_)))
                        {
                            summary
                                .violations
                                .push(format!("missing template id at p={p} q={q} cross={cross:?}"));
                        }
                    }
                    Err(e) => {
                        summary.violations.push(format!("error at p={p} q={q} cross={cross:?}: {e}"))
                    }
                }
                summary.bump("checked");
            });
        }
    }
    Ok(())
}

fn two_path_analyze_checked(cfg: &TwoPathConfig) -> Result<TwoPathVerdict> {
    let v = crate::chorded::two_path_analyze(cfg)?;
    if let TwoPathVerdict::Chorded(w) = &v {
        w.validate(&cfg.realize())?;
    }
    Ok(v)
}

fn enumerate_subsets<T: Clone>(
    items: &[T],
    start: usize,
    max_size: usize,
    acc: &mut Vec<T>,
    f: &mut dyn FnMut(&[T]),
) {
    f(acc);
    if acc.len() == max_size {
        return;
    }
    for i in start..items.len() {
        acc.push(items[i].clone());
        enumerate_subsets(items, i + 1, max_size, acc, f);
        acc.pop();
    }
}

/// Results of an exhaustive structural-lemma sweep.
#[derive(Clone, Debug, Default)]
pub struct DomainStats {
    pub graphs_seen: u64,
    pub domain_size: u64,
    pub violations: Vec<String>,
}

impl DomainStats {
    fn absorb(&mut self, other: DomainStats) {
        self.graphs_seen += other.graphs_seen;
        self.domain_size += other.domain_size;
        self.violations.extend(other.violations);
    }
}

/// Like [`structure_domain_sweep`] but checks the longest-path clauses, the
/// path-closure clauses, and trichotomy coverage in one enumeration pass.
pub fn structure_domain_sweep_all(n_max: usize, jobs: usize) -> Result<DomainStats> {
    structure_domain_sweep_inner(n_max, None, jobs)
}

/// Sweeps all connected, chorded-cycle-free, Hamiltonian-path-free graphs
/// with `4 <= n <= n_max <= 8` and checks the requested structural lemma on
/// each. `n <= 7` is fully enumerated; `n = 8` is enumerated through the
/// edge bound below.
pub fn structure_domain_sweep(n_max: usize, scope: LemmaScope, jobs: usize) -> Result<DomainStats> {
    structure_domain_sweep_inner(n_max, Some(scope), jobs)
}

fn structure_domain_sweep_inner(n_max: usize, scope: Option<LemmaScope>, jobs: usize) -> Result<DomainStats> {
    if n_max > 8 {
        return Err(Error::CapacityExceeded("structural sweep supports n <= 8".into()));
    }
    let mut stats = DomainStats::default();
    for n in 4..=n_max {
        if n <= 7 {
            let mut local = DomainStats::default();
            for_each_labeled_graph(n, &mut |rows| domain_check(n, rows, scope, &mut local))?;
            stats.absorb(local);
        } else {
            // A graph with more than 2n-3 edges keeps a subgraph of minimum
            // degree 3 (stripping degree-<=2 vertices removes at most 2n-3
            // edges), and in such a subgraph a longest path u_1..u_p has
            // three neighbors of u_1 on it, closing a cycle with a chord.
            // So every chorded-cycle-free graph has at most 2n-3 edges, and
            // connectivity needs at least n-1.
            let kmax = 2 * n - 3;
            let pairs_len = edge_pairs(n).len();
            let tasks: Vec<(usize, usize)> =
                (n - 1..=kmax).flat_map(|k| (0..pairs_len).map(move |e0| (k, e0))).collect();
            let jobs = jobs.max(1);
            let next = std::sync::atomic::AtomicUsize::new(0);
            let merged = std::thread::scope(|scope_| {
                let handles: Vec<_> = (0..jobs)
                    .map(|_| {
                        let tasks = &tasks;
                        let next = &next;
                        scope_.spawn(move || {
                            let mut local = DomainStats::default();
                            loop {
                                let t = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                                if t >= tasks.len() {
                                    break;
                                }
                                let (k, e0) = tasks[t];
                                for_each_graph_with_edges(n, k, e0, &mut |rows| {
                                    domain_check(n, rows, scope, &mut local)
                                });
                            }
                            local
                        })
                    })
                    .collect();
                let mut acc = DomainStats::default();
                for h in handles {
                    acc.absorb(h.join().expect("sweep worker"));
                }
                acc
            });
            stats.absorb(merged);
        }
    }
    stats.violations.sort();
    Ok(stats)
}

fn domain_check(n: usize, rows: &[u64], scope: Option<LemmaScope>, stats: &mut DomainStats) {
    stats.graphs_seen += 1;
    let full = (1u64 << n) - 1;
    if !bitgraph::is_connected_mask(rows, full) {
        return;
    }
    // Independent-side filter for the domain: the oracle enumerator.
    if oracle::chorded_cycle_exists_rows(rows, full) {
        return;
    }
    if bitgraph::has_ham_path(rows, full) {
        return;
    }
    stats.domain_size += 1;
    let g = graph_from_rows(n, rows);
    let want = |s: LemmaScope| scope.is_none_or(|only| only == s);
    if want(LemmaScope::Degree2) {
        if let Some(v) = degree2_violation(&g) {
            stats.violations.push(format!("{}: {v}", serialize_graph6(&g)));
        }
    }
    if want(LemmaScope::V2) {
        if let Some(v) = v2_violation(&g, rows) {
            stats.violations.push(format!("{}: {v}", serialize_graph6(&g)));
        }
        if let Err(e) = no_ham_path_trichotomy(&g) {
            stats.violations.push(format!("{}: trichotomy failed: {e}", serialize_graph6(&g)));
        }
    }
}

/// Exhaustive desk-scale check of the packing theorem at s = 1: every
/// labeled 2-connected graph with `4 <= n <= n_max <= 7` satisfying
/// `delta_2 >= 4` (or complete) must yield a validated chorded cycle from
/// the detection pipeline. Returns the hypothesis-satisfying count and any
/// failures.
pub fn theorem_s1_exhaustive_sweep(n_max: usize, jobs: usize) -> Result<DomainStats> {
    if !(4..=7).contains(&n_max) {
        return Err(Error::CapacityExceeded("exhaustive s=1 sweep supports 4 <= n <= 7".into()));
    }
    let mut stats = DomainStats::default();
    for n in 4..=n_max {
        let pairs = edge_pairs(n);
        let total: u64 = 1 << pairs.len();
        let jobs = jobs.max(1) as u64;
        let chunk = total.div_ceil(jobs);
        let merged = std::thread::scope(|scope_| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let pairs = &pairs;
                    scope_.spawn(move || {
                        let mut local = DomainStats::default();
                        let mut rows = vec![0u64; n];
                        let full = (1u64 << n) - 1;
                        let lo = j * chunk;
                        let hi = ((j + 1) * chunk).min(total);
                        for mask in lo..hi {
                            local.graphs_seen += 1;
                            for r in rows.iter_mut() {
                                *r = 0;
                            }
                            let mut m = mask;
                            while m != 0 {
                                let i = m.trailing_zeros() as usize;
                                m &= m - 1;
                                let (u, v) = pairs[i];
                                rows[u] |= bit(v);
                                rows[v] |= bit(u);
                            }
                            if !bitgraph::is_two_connected_mask(&rows, full) {
                                continue;
                            }
                            if bitgraph::delta2_mask(&rows, full).is_some_and(|d| d < 4) {
                                continue;
                            }
                            local.domain_size += 1;
                            let g = graph_from_rows(n, &rows);
                            match crate::chorded::find_chorded_2connected(&g) {
                                Ok(crate::chorded::ChordedSearch::Found(w)) => {
                                    if let Err(e) = w.validate(&g) {
                                        local.violations.push(format!(
                                            "{}: invalid witness: {e}",
                                            serialize_graph6(&g)
                                        ));
                                    }
                                }
                                Ok(crate::chorded::ChordedSearch::NotFound) => local
                                    .violations
                                    .push(format!("{}: no chorded cycle found", serialize_graph6(&g))),
                                Err(e) => local
                                    .violations
                                    .push(format!("{}: pipeline error: {e}", serialize_graph6(&g))),
                            }
                        }
                        local
                    })
                })
                .collect();
            let mut acc = DomainStats::default();
            for h in handles {
                acc.absorb(h.join().expect("sweep worker"));
            }
            acc
        });
        stats.absorb(merged);
    }
    stats.violations.sort();
    Ok(stats)
}

/// Checks the six longest-path degree clauses on a graph from the lemma
/// domain (connected, no chorded cycle, no Hamiltonian path). `None` means
/// all clauses hold for the canonical choice of paths.
pub fn degree2_violation(g: &Graph) -> Option<String> {
    let rows = g.mask_rows().ok()?;
    let full = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    let p1 = longest_path(g, &g.full_set()).ok()?;
    if p1.vertices().len() < 3 {
        return None;
    }
    let p1_mask = p1.vertices().iter().fold(0u64, |m, &v| m | bit(v));
    let rest = full & !p1_mask;
    if rest == 0 {
        return Some("unexpected Hamiltonian path".into());
    }
    let d = |v: usize, mask: u64| (rows[v] & mask).count_ones() as usize;
    let p2 = {
        let seq = bitgraph::longest_path_lex(&rows, rest);
        let (v1, vq) = (seq[0], *seq.last().unwrap());
        if d(v1, p1_mask) > d(vq, p1_mask) {
            seq.iter().rev().copied().collect::<Vec<_>>()
        } else {
            seq
        }
    };
    let p2_mask = p2.iter().fold(0u64, |m, &v| m | bit(v));
    let (u1, up) = (p1.vertices()[0], *p1.vertices().last().unwrap());
    for ui in [u1, up] {
        if d(ui, full & !p1_mask) != 0 {
            return Some(format!("clause 1: end {ui} has neighbors off the longest path"));
        }
        if d(ui, full) > 2 {
            return Some(format!("clause 2: end {ui} has degree > 2"));
        }
    }
    let (v1, vq) = (p2[0], *p2.last().unwrap());
    for vj in [v1, vq] {
        if d(vj, full & !p1_mask & !p2_mask) != 0 {
            return Some(format!("clause 3: second-path end {vj} has stray neighbors"));
        }
        if d(vj, p2_mask) > 2 {
            return Some(format!("clause 4: second-path end {vj} has d_P2 > 2"));
        }
    }
    for (mask, name) in [(p1_mask, "P1"), (p2_mask, "P2")] {
        for w in Bits(full & !mask) {
            if d(w, mask) > 2 {
                return Some(format!("clause 5: {w} sends more than 2 edges to {name}"));
            }
        }
    }
    if p2.len() >= 2 && d(v1, p1_mask) + d(vq, p1_mask) > 3 {
        return Some("clause 6: second-path end degrees on P1 sum past 3".into());
    }
    None
}

/// Checks the path-closure degree clause on every simple path of a
/// chorded-cycle-free graph: when the path closes back to its first vertex,
/// every earlier vertex sends at most 3 edges to the path and the vertex
/// before the closure sends exactly 2.
pub fn v2_violation(g: &Graph, rows: &[u64]) -> Option<String> {
    let n = g.n();
    let mut violation = None;
    let mut path = Vec::new();
    for s in 0..n {
        path.push(s);
        walk(rows, &mut path, bit(s), &mut violation);
        path.pop();
        if violation.is_some() {
            break;
        }
    }
    return violation;

    fn walk(rows: &[u64], path: &mut Vec<usize>, used: u64, violation: &mut Option<String>) {
        if violation.is_some() {
            return;
        }
        if path.len() >= 3 {
            let pmask = path.iter().fold(0u64, |m, &v| m | bit(v));
            let d = |v: usize| (rows[v] & pmask).count_ones() as usize;
            for i0 in 2..path.len() {
                if rows[path[0]] & bit(path[i0]) != 0 {
                    for j0 in 0..i0 {
                        if d(path[j0]) > 3 {
                            *violation = Some(format!(
                                "path {path:?}: closure at index {i0} but vertex {} has d_P > 3",
                                path[j0]
                            ));
                            return;
                        }
                    }
                    if d(path[i0 - 1]) != 2 {
                        *violation = Some(format!(
                            "path {path:?}: closure at index {i0} but predecessor degree != 2"
                        ));
                        return;
                    }
                }
            }
        }
        let last = *path.last().unwrap();
        for v in Bits(rows[last] & !used) {
            path.push(v);
            walk(rows, path, used | bit(v), violation);
            path.pop();
        }
    }
}

/// Results of the seeded minimal-system suite.
#[derive(Clone, Debug, Default)]
pub struct MinSystemStats {
    pub instances: u64,
    pub checks: u64,
    pub violations: Vec<String>,
}

/// Generates seeded random graphs (n <= `n_max`), extracts exact minimal
/// r-systems (r <= `r_max`), and checks the exchange-lemma predicates:
/// minimality, degree-3 classification, path inequalities, hexagon swaps.
/// Runs until `instances` systems have been produced (or attempts run out).
pub fn min_system_suite(
    n_max: usize,
    r_max: usize,
    instances: u64,
    seed: u64,
    only: Option<LemmaScope>,
) -> Result<MinSystemStats> {
    let mut stats = MinSystemStats::default();
    let mut rng = XorShift64Star::new(seed ^ 0xC0FF_EE00);
    let mut attempts = 0u64;
    while stats.instances < instances && attempts < instances * 8 {
        attempts += 1;
        let n = 6 + (rng.next_below((n_max.max(7) - 5) as u64) as usize);
        let density = 25 + rng.next_below(65) as usize;
        let r = 1 + (rng.next_below(r_max as u64) as usize);
        let g = crate::generators::random_graph(n, density, rng.next_u64());
        let Some(sys) = exact_min_system(&g, r)? else {
            continue;
        };
        stats.instances += 1;
        let rows = g.mask_rows()?;
        let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let sys_mask = sys.vertex_set().to_mask64().expect("n <= 64");
        let rem = full & !sys_mask;
        let id = serialize_graph6(&g);

        let want = |s: LemmaScope| only.is_none_or(|o| o == s);

        if want(LemmaScope::CMini) {
            stats.checks += 1;
            if !check_minimality(&g, &sys)? {
                stats.violations.push(format!("{id}: exact system fails minimality"));
            }
        }
        if want(LemmaScope::Degree3) {
            for c in sys.cycles() {
                let cmask = c.vertex_set().to_mask64().expect("n <= 64");
                for u in Bits(rem) {
                    if (rows[u] & cmask).count_ones() >= 3 {
                        stats.checks += 1;
                        if let Err(e) = degree3_classify(&g, &sys, c, u) {
                            stats.violations.push(format!("{id}: degree3({u}) failed: {e}"));
                        }
                    }
                }
            }
        }
        if want(LemmaScope::FivePath) {
            let mut paths = Vec::new();
            remainder_paths(&rows, rem, 5, &mut paths);
            let mut op_exercised = 0;
            for p in &paths {
                for c in sys.cycles() {
                    let cmask = c.vertex_set().to_mask64().expect("n <= 64");
                    stats.checks += 1;
                    let ok = if op_exercised < 25 {
                        op_exercised += 1;
                        let path = Path::new(&g, p.clone()).expect("remainder path");
                        let (a, b, c3) = path_inequalities(&g, &sys, c, &path)?;
                        a && b && c3
                    } else {
                        lean_path_bounds(&rows, cmask, p, &g)
                    };
                    if !ok {
                        stats.violations.push(format!("{id}: 5-path bound broke on {p:?}"));
                    }
                }
            }
        }
        if want(LemmaScope::SixCycle) {
            let rem_verts: Vec<usize> = Bits(rem).collect();
            for c in sys.cycles() {
                let cmask = c.vertex_set().to_mask64().expect("n <= 64");
                for (i, &u) in rem_verts.iter().enumerate() {
                    for &v in &rem_verts[i + 1..] {
                        if ((rows[u] | rows[v]) & cmask).count_ones() >= 5 {
                            stats.checks += 1;
                            if let Err(e) = six_cycle_swap(&g, &sys, c, u, v) {
                                stats
                                    .violations
                                    .push(format!("{id}: hexagon swap ({u},{v}) failed: {e}"));
                            }
                        }
                    }
                }
            }
        }
    }
    if stats.instances < instances {
        stats.violations.push(format!(
            "only {} of {} requested instances produced systems",
            stats.instances, instances
        ));
    }
    Ok(stats)
}

/// All simple paths with 4..=max_len vertices inside the remainder,
/// canonical orientation (first end < last end).
fn remainder_paths(rows: &[u64], rem: u64, max_len: usize, out: &mut Vec<Vec<usize>>) {
    fn walk(
        rows: &[u64],
        rem: u64,
        max_len: usize,
        path: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() >= 4 && path[0] < *path.last().unwrap() {
            out.push(path.clone());
        }
        if path.len() == max_len {
            return;
        }
        let last = *path.last().unwrap();
        for v in Bits(rows[last] & rem & !used) {
            path.push(v);
            walk(rows, rem, max_len, path, used | bit(v), out);
            path.pop();
        }
    }
    for s in Bits(rem) {
        let mut path = vec![s];
        walk(rows, rem, max_len, &mut path, bit(s), out);
    }
}

fn lean_path_bounds(rows: &[u64], cmask: u64, x: &[usize], g: &Graph) -> bool {
    let d = |i: usize, j: usize| ((rows[x[i]] | rows[x[j]]) & cmask).count_ones() as usize;
    let b1 = d(0, 2) + d(0, 3) + d(1, 3) <= 12;
    let b2 = if x.len() >= 5 { d(0, 2) + d(1, 3) + d(2, 4) <= 12 } else { true };
    let b3 = if x.len() >= 5 && g.has_edge(x[1], x[3]) {
        d(0, 2) + d(0, 3) + d(1, 4) <= 12
    } else {
        true
    };
    b1 && b2 && b3
}

/// Negative control: a deliberately non-minimal system must trip the path
/// inequalities. Returns true when the corruption is detected.
fn five_path_negative_control() -> Result<bool> {
    let k11 = Graph::complete(11);
    let c = crate::chorded::ChordedCycle::new(&k11, (0..6).collect(), vec![(0, 2)])?;
    let sys = RSystem::new(&k11, vec![c.clone()])?;
    if check_minimality(&k11, &sys)? {
        return Ok(false);
    }
    let p = Path::new(&k11, vec![6, 7, 8, 9, 10])?;
    let (a, b, c3) = path_inequalities(&k11, &sys, &c, &p)?;
    Ok(!(a && b && c3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{extremal_g1, extremal_g2, random_graph};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn oracle_examples() {
        let k8 = Graph::complete(8);
        let (ok, wit) = oracle::oracle_pack_exists(&k8, 2, 16).unwrap();
        assert!(ok);
        wit.unwrap().validate(&k8).unwrap();

        let g1 = extremal_g1(2).unwrap();
        assert!(!oracle::oracle_pack_exists(&g1, 2, 16).unwrap().0);

        let c9 = Graph::cycle(9).unwrap();
        assert!(!oracle::oracle_pack_exists(&c9, 1, 16).unwrap().0);
    }

    #[test]
    fn oracle_self_consistency_and_monotonicity() {
        for seed in 0..25u64 {
            let n = 6 + (seed % 4) as usize;
            let g = random_graph(n, 45 + (seed % 4) as usize * 10, seed);
            let s2 = oracle::oracle_pack_exists(&g, 2, 16).unwrap().0;
            let s1 = oracle::oracle_pack_exists(&g, 1, 16).unwrap().0;
            assert!(!s2 || s1, "oracle(g,2) implies oracle(g,1)");

            // Adding one edge never destroys a packing.
            let mut edges = g.edges();
            let mut added = false;
            'outer: for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        edges.push((u, v));
                        added = true;
                        break 'outer;
                    }
                }
            }
            if added {
                let h = Graph::from_edges(n, &edges).unwrap();
                let s1h = oracle::oracle_pack_exists(&h, 1, 16).unwrap().0;
                assert!(!s1 || s1h, "edge addition must not lose a packing");
            }
        }
    }

    #[test]
    fn theorem_instances() {
        // The first extremal family sits below the bound: vacuous.
        let g1 = extremal_g1(2).unwrap();
        let rep = check_theorem_instance(&g1, 2, &caps());
        assert_eq!(rep.outcome, Outcome::VacuousPass);
        assert_eq!(rep.hypotheses.delta2, DegreeValue::Finite(6));

        // K8 passes through the complete-graph branch.
        let rep = check_theorem_instance(&Graph::complete(8), 2, &caps());
        assert_eq!(rep.outcome, Outcome::Pass);
        assert!(rep.hypotheses.complete);

        // The second family is vacuous at delta_2 = 7 < 8, but the packer
        // still reports a witness as information.
        let g2 = extremal_g2(2).unwrap();
        let rep = check_theorem_instance(&g2, 2, &caps());
        assert_eq!(rep.outcome, Outcome::VacuousPass);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn sweep_empty_stream() {
        let s = sweep(std::iter::empty(), 1, SweepMode::Verify, &caps(), 1, false);
        assert_eq!(s.total, 0);
        assert!(s.clean());
    }

    #[test]
    fn sweep_verify_all_two_connected_n5() {
        let mut lines = Vec::new();
        for_each_labeled_graph(5, &mut |rows| {
            if bitgraph::is_two_connected_mask(rows, 0b11111) {
                lines.push(Ok(serialize_graph6(&graph_from_rows(5, rows))));
            }
        })
        .unwrap();
        let total = lines.len() as u64;
        let s = sweep(lines.into_iter(), 1, SweepMode::Verify, &caps(), 2, false);
        assert_eq!(s.total, total);
        assert!(s.clean(), "violations: {:?}", s.violations);
    }

    #[test]
    fn sweep_parse_errors_are_not_fatal() {
        let lines = vec![Ok("C~".to_string()), Ok("!!!".to_string()), Ok("D??".to_string())];
        let s = sweep(lines.into_iter(), 1, SweepMode::Verify, &caps(), 1, false);
        assert_eq!(s.total, 3);
        assert_eq!(s.counts.get("parse_error"), Some(&1));
    }

    #[test]
    fn hunt_boundary_selects_at_delta2_4s_minus_1() {
        // The packable extremal family at s = 1 has delta_2 = 3 = 4s - 1:
        // selected but clean.
        let g2 = extremal_g2(1).unwrap();
        let lines = vec![Ok(serialize_graph6(&g2))];
        let s = sweep(lines.into_iter(), 1, SweepMode::HuntBoundary, &caps(), 1, false);
        assert_eq!(s.counts.get("selected"), Some(&1));
        assert!(s.boundary_witnesses.is_empty());
    }

    #[test]
    fn hunt_boundary_finds_the_known_s1_witnesses() {
        // Plain cycles of length >= 5 sit exactly one below the s = 1 bound
        // (delta_2 = 3) and have no chorded cycle, so the bound is tight
        // there; the hunt must report them.
        let lines: Vec<std::io::Result<String>> = (5..=9)
            .map(|n| Ok(serialize_graph6(&Graph::cycle(n).unwrap())))
            .collect();
        let s = sweep(lines.into_iter(), 1, SweepMode::HuntBoundary, &caps(), 1, false);
        assert_eq!(s.counts.get("boundary_witness"), Some(&5));
        assert_eq!(s.boundary_witnesses.len(), 5);

        // At s = 2 no boundary witness is known; a small scan stays empty.
        let mut rng = crate::generators::XorShift64Star::new(0xB0B);
        let mut lines = Vec::new();
        for _ in 0..300 {
            let n = 8 + rng.next_below(3) as usize;
            let g = crate::generators::random_delta2_graph(n, 7, rng.next_u64()).unwrap();
            lines.push(Ok(serialize_graph6(&g)));
        }
        let s = sweep(lines.into_iter(), 2, SweepMode::HuntBoundary, &caps(), 2, false);
        assert!(s.boundary_witnesses.is_empty(), "{:?}", s.boundary_witnesses);
    }

    #[test]
    fn degree2_and_v2_clause_checks_smoke() {
        // Small exhaustive pass (n <= 6) of both structural suites.
        let d2 = structure_domain_sweep(6, LemmaScope::Degree2, 1).unwrap();
        assert!(d2.violations.is_empty(), "{:?}", d2.violations);
        assert!(d2.domain_size > 0);
        let v2 = structure_domain_sweep(6, LemmaScope::V2, 1).unwrap();
        assert!(v2.violations.is_empty(), "{:?}", v2.violations);
        assert_eq!(d2.domain_size, v2.domain_size);
    }

    #[test]
    fn min_system_suite_small_smoke() {
        let stats = min_system_suite(10, 2, 60, 42, None).unwrap();
        assert_eq!(stats.instances, 60);
        assert!(stats.violations.is_empty(), "{:?}", stats.violations);
        assert!(stats.checks > 0);
    }

    #[test]
    fn five_path_negative_control_flags() {
        assert!(five_path_negative_control().unwrap());
    }

    #[test]
    fn two_path_suite_tiny() {
        let s = lemma_suite(LemmaScope::TwoPath, 3, 0).unwrap();
        assert!(s.violations.is_empty(), "{:?}", s.violations);
        assert!(s.total > 0);
    }
}
