//! Systems of vertex-disjoint chorded cycles: exact minimal and optimal
//! r-systems, the exchange-move predicates (minimality, degree-3 patterns,
//! hexagon swaps, path inequalities), and the packer.

use crate::bitgraph::{self, bit, Bits, CycleLite};
use crate::chorded::ChordedCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::structure::{block_decomposition, Path};

/// Search caps shared by the packer and harness.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Cap for exact longest-path/local-search machinery.
    pub exact_n: usize,
    /// Cap for the brute-force oracle.
    pub oracle_n: usize,
    /// Node budget for the packer's enumeration stages.
    pub budget: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { exact_n: 20, oracle_n: 16, budget: 50_000_000 }
    }
}

/// A collection of pairwise vertex-disjoint chorded cycles in a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSystem {
    cycles: Vec<ChordedCycle>,
}

impl RSystem {
    pub fn new(g: &Graph, cycles: Vec<ChordedCycle>) -> Result<Self> {
        let sys = RSystem { cycles };
        sys.validate(g)?;
        Ok(sys)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = VertexSet::new();
        for c in &self.cycles {
            c.validate(g)?;
            let vs = c.vertex_set();
            if !used.intersection(&vs).is_empty() {
                return Err(Error::InternalInvariant("system cycles are not vertex-disjoint".into()));
            }
            used = used.union(&vs);
        }
        Ok(())
    }

    pub fn cycles(&self) -> &[ChordedCycle] {
        &self.cycles
    }

    pub fn r(&self) -> usize {
        self.cycles.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(|c| c.len()).sum()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.cycles.iter().fold(VertexSet::new(), |acc, c| acc.union(&c.vertex_set()))
    }

    pub(crate) fn mask(&self) -> u64 {
        self.cycles.iter().fold(0, |m, c| m | c.mask())
    }
}

/// Size of the system, the order of the largest remainder component, and the
/// maximum path length within the largest remainder components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PackingMetrics {
    pub total_vertices: usize,
    pub remainder_max_component: usize,
    pub remainder_max_path_len: usize,
}

pub fn metrics(g: &Graph, sys: &RSystem, caps: &Caps) -> Result<PackingMetrics> {
    sys.validate(g)?;
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());
    let rem = full & !sys.mask();
    let comps = bitgraph::components(&rows, rem);
    let rmax = comps.iter().map(|c| c.count_ones() as usize).max().unwrap_or(0);
    let mut ell = 0;
    for &c in comps.iter().filter(|c| c.count_ones() as usize == rmax) {
        if c.count_ones() as usize > caps.exact_n {
            return Err(Error::CapacityExceeded(
                "remainder component too large for exact path search".into(),
            ));
        }
        ell = ell.max(bitgraph::longest_path_vertices(&rows, c).saturating_sub(1));
    }
    Ok(PackingMetrics {
        total_vertices: sys.vertex_count(),
        remainder_max_component: rmax,
        remainder_max_path_len: ell,
    })
}

#[inline]
fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn assemble(g: &Graph, lites: Vec<CycleLite>) -> Result<RSystem> {
    let cycles = lites
        .into_iter()
        .map(|c| ChordedCycle::new(g, c.seq, c.chords))
        .collect::<Result<Vec<_>>>()?;
    RSystem::new(g, cycles)
}

/// An r-system of globally minimum total vertex count, or `None` if none
/// exists. Deterministic: the least system under (sorted vertex sets, then
/// cycle sequences).
pub fn exact_min_system(g: &Graph, r: usize) -> Result<Option<RSystem>> {
    if r == 0 {
        return Err(Error::PreconditionViolated("r must be at least 1".into()));
    }
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());
    for total in 4 * r..=g.n() {
        let max_len = total - 4 * (r - 1);
        let mut budget = u64::MAX;
        let cycles =
            bitgraph::all_chorded_cycles(&rows, full, max_len, &mut budget).expect("unbounded");
        let mut chosen = Vec::new();
        if pick_exact(&cycles, 0, 0, r, total, max_len, &mut chosen) {
            return Ok(Some(assemble(g, chosen.iter().map(|&i| cycles[i].clone()).collect())?));
        }
    }
    Ok(None)
}

/// Ascending-index DFS over key-sorted cycles for an exact-total system;
/// the first hit is the canonical least.
fn pick_exact(
    cycles: &[CycleLite],
    start: usize,
    used: u64,
    remaining: usize,
    total_left: usize,
    max_len: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return total_left == 0;
    }
    for i in start..cycles.len() {
        let c = &cycles[i];
        if c.vset & used != 0 {
            continue;
        }
        let sz = c.vset.count_ones() as usize;
        if sz + 4 * (remaining - 1) > total_left || total_left - sz > max_len * (remaining - 1) {
            continue;
        }
        chosen.push(i);
        if pick_exact(cycles, i + 1, used | c.vset, remaining - 1, total_left - sz, max_len, chosen)
        {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Among all minimal r-systems, one maximizing the order of the largest
/// remainder component. Deterministic tie-break as in [`exact_min_system`].
pub fn optimal_system(g: &Graph, r: usize) -> Result<Option<RSystem>> {
    let Some(min_sys) = exact_min_system(g, r)? else {
        return Ok(None);
    };
    let tmin = min_sys.vertex_count();
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());
    let max_len = tmin - 4 * (r - 1);
    let mut budget = u64::MAX;
    let cycles = bitgraph::all_chorded_cycles(&rows, full, max_len, &mut budget).expect("unbounded");

    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut chosen = Vec::new();
    collect_exact(&cycles, 0, 0, r, tmin, max_len, &mut chosen, &mut |chosen_ix, used| {
        let rem = full & !used;
        let rmax = bitgraph::components(&rows, rem)
            .iter()
            .map(|c| c.count_ones() as usize)
            .max()
            .unwrap_or(0);
        if best.as_ref().is_none_or(|(br, _)| rmax > *br) {
            best = Some((rmax, chosen_ix.to_vec()));
        }
    });
    let (_, ix) = best.expect("minimal system exists");
    Ok(Some(assemble(g, ix.iter().map(|&i| cycles[i].clone()).collect())?))
}

#[allow(clippy::too_many_arguments)]
fn collect_exact(
    cycles: &[CycleLite],
    start: usize,
    used: u64,
    remaining: usize,
    total_left: usize,
    max_len: usize,
    chosen: &mut Vec<usize>,
    sink: &mut impl FnMut(&[usize], u64),
) {
    if remaining == 0 {
        if total_left == 0 {
            sink(chosen, used);
        }
        return;
    }
    for i in start..cycles.len() {
        let c = &cycles[i];
        if c.vset & used != 0 {
            continue;
        }
        let sz = c.vset.count_ones() as usize;
        if sz + 4 * (remaining - 1) > total_left || total_left - sz > max_len * (remaining - 1) {
            continue;
        }
        chosen.push(i);
        collect_exact(cycles, i + 1, used | c.vset, remaining - 1, total_left - sz, max_len, chosen, sink);
        chosen.pop();
    }
}

/// True iff for every cycle `C` of the system, the subgraph induced by
/// `V(C)` plus the whole remainder has no chorded cycle shorter than `C`.
pub fn check_minimality(g: &Graph, sys: &RSystem) -> Result<bool> {
    sys.validate(g)?;
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());
    let rem = full & !sys.mask();
    for c in sys.cycles() {
        let within = c.mask() | rem;
        if bitgraph::min_chorded_cycle(&rows, within, Some(c.len() - 1)).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three shapes a system cycle can take when a remainder vertex sends at
/// least three edges into it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree3Case {
    /// `|V(C)| = 4` and the vertex has 3 or 4 neighbors on it.
    Len4,
    /// `|V(C)| = 5`, exactly 3 neighbors, two of them at cycle distance 2
    /// from the third.
    Len5Pattern,
    /// `|V(C)| = 6`, exactly 3 alternating neighbors, and adding any
    /// remainder vertex keeps the cycle's span triangle-free.
    Len6TriangleFree,
}

pub fn degree3_classify(
    g: &Graph,
    sys: &RSystem,
    c: &ChordedCycle,
    u: usize,
) -> Result<Degree3Case> {
    sys.validate(g)?;
    require_member(sys, c)?;
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());
    let rem = full & !sys.mask();
    if u >= g.n() || rem & bit(u) == 0 {
        return Err(Error::PreconditionViolated("vertex must lie in the remainder".into()));
    }
    if !check_minimality(g, sys)? {
        return Err(Error::PreconditionViolated("system is not minimal".into()));
    }
    let dc = (rows[u] & c.mask()).count_ones() as usize;
    if dc < 3 {
        return Err(Error::PreconditionViolated(format!("d_C(u) = {dc} < 3")));
    }
    let t = c.len();
    match t {
        4 => Ok(Degree3Case::Len4),
        5 => {
            if dc != 3 || neighbor_gaps(&rows, c, u) != vec![1, 2, 2] {
                return Err(Error::InternalInvariant(
                    "5-cycle neighbor pattern violated in a minimal system".into(),
                ));
            }
            Ok(Degree3Case::Len5Pattern)
        }
        6 => {
            if dc != 3 || neighbor_gaps(&rows, c, u) != vec![2, 2, 2] {
                return Err(Error::InternalInvariant(
                    "6-cycle neighbor pattern violated in a minimal system".into(),
                ));
            }
            for v in Bits(rem) {
                if has_triangle_in(&rows, c.mask() | bit(v)) {
                    return Err(Error::InternalInvariant(
                        "6-cycle span must stay triangle-free with any remainder vertex".into(),
                    ));
                }
            }
            Ok(Degree3Case::Len6TriangleFree)
        }
        _ => Err(Error::InternalInvariant(
            "remainder vertex with 3 neighbors on a cycle longer than 6".into(),
        )),
    }
}

fn require_member(sys: &RSystem, c: &ChordedCycle) -> Result<()> {
    if sys.cycles().iter().any(|x| x == c) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("cycle is not a member of the system".into()))
    }
}

/// Sorted circular gaps between `u`'s neighbor positions along the cycle.
fn neighbor_gaps(rows: &[u64], c: &ChordedCycle, u: usize) -> Vec<usize> {
    let t = c.len();
    let mut pos: Vec<usize> = c
        .cycle()
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, &v)| rows[u] & bit(v) != 0)
        .map(|(i, _)| i)
        .collect();
    pos.sort_unstable();
    let mut gaps: Vec<usize> = pos.windows(2).map(|w| w[1] - w[0]).collect();
    if let (Some(&first), Some(&last)) = (pos.first(), pos.last()) {
        gaps.push(t - last + first);
    }
    gaps.sort_unstable();
    gaps
}

fn has_triangle_in(rows: &[u64], mask: u64) -> bool {
    let verts: Vec<usize> = Bits(mask).collect();
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            if rows[a] & bit(b) == 0 {
                continue;
            }
            if rows[a] & rows[b] & mask != 0 {
                return true;
            }
        }
    }
    false
}

/// The hexagon swap: both remainder vertices can replace a neighbor on a
/// 6-cycle of the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixCycleSwap {
    /// A neighbor of `u` on the cycle; removing it admits `v`.
    pub u_prime: usize,
    /// A neighbor of `v` on the cycle; removing it admits `u`.
    pub v_prime: usize,
    /// Chorded 6-cycle on `(V(C) \ {v'}) ∪ {u}`.
    pub c_u: ChordedCycle,
    /// Chorded 6-cycle on `(V(C) \ {u'}) ∪ {v}`.
    pub c_v: ChordedCycle,
}

pub fn six_cycle_swap(
    g: &Graph,
    sys: &RSystem,
    c: &ChordedCycle,
    u: usize,
    v: usize,
) -> Result<SixCycleSwap> {
    sys.validate(g)?;
    require_member(sys, c)?;
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());
    let rem = full & !sys.mask();
    if u == v || u >= g.n() || v >= g.n() || rem & bit(u) == 0 || rem & bit(v) == 0 {
        return Err(Error::PreconditionViolated("u, v must be distinct remainder vertices".into()));
    }
    let union = ((rows[u] | rows[v]) & c.mask()).count_ones() as usize;
    if union < 5 {
        return Err(Error::PreconditionViolated(format!("d_C(u,v) = {union} < 5")));
    }
    if !check_minimality(g, sys)? {
        return Err(Error::PreconditionViolated("system is not minimal".into()));
    }
    if c.len() != 6 {
        // Signals a broken minimality assumption despite the gate above.
        return Err(Error::PreconditionViolated(format!(
            "union degree >= 5 forces a 6-cycle; got length {}",
            c.len()
        )));
    }
    let (du, dv) = (
        (rows[u] & c.mask()).count_ones() as usize,
        (rows[v] & c.mask()).count_ones() as usize,
    );
    let (a, b) = if du >= 3 { (u, v) } else if dv >= 3 { (v, u) } else {
        return Err(Error::InternalInvariant("union 5 needs a vertex with 3 cycle neighbors".into()));
    };

    let Some((w, _)) = orient_hexagon(&rows, c, a, b) else {
        return Err(Error::InternalInvariant("hexagon orientation not found".into()));
    };

    // c_a keeps a's alternating neighbors w0/w2/w4 and frees w1.
    let seq_a = vec![a, w[0], w[5], w[4], w[3], w[2]];
    let freed_a = w[1];
    let cyc_a = ChordedCycle::new(g, seq_a.clone(), bitgraph::chords_of(&rows, &seq_a))?;

    // The chord of c joins antipodal vertices; the surviving one dictates
    // b's cycle.
    let (seq_b, freed_b) = if rows[w[0]] & bit(w[3]) != 0 || rows[w[1]] & bit(w[4]) != 0 {
        (vec![b, w[1], w[0], w[5], w[4], w[3]], w[2])
    } else if rows[w[2]] & bit(w[5]) != 0 {
        (vec![b, w[1], w[2], w[5], w[4], w[3]], w[0])
    } else {
        return Err(Error::InternalInvariant("chorded 6-cycle without an antipodal chord".into()));
    };
    let cyc_b = ChordedCycle::new(g, seq_b.clone(), bitgraph::chords_of(&rows, &seq_b))?;

    let swap = if a == u {
        SixCycleSwap { u_prime: freed_b, v_prime: freed_a, c_u: cyc_a, c_v: cyc_b }
    } else {
        SixCycleSwap { u_prime: freed_a, v_prime: freed_b, c_u: cyc_b, c_v: cyc_a }
    };
    swap.c_u.validate(g)?;
    swap.c_v.validate(g)?;
    Ok(swap)
}

/// Finds an orientation `w[0..6]` of the hexagon with `N(a) = {w0, w2, w4}`
/// and `{w1, w3} ⊆ N(b)`.
fn orient_hexagon(rows: &[u64], c: &ChordedCycle, a: usize, b: usize) -> Option<(Vec<usize>, ())> {
    let vs = c.cycle().vertices();
    let t = vs.len();
    for start in 0..t {
        for dir in [1isize, -1isize] {
            let w: Vec<usize> = (0..t)
                .map(|i| vs[((start as isize + dir * i as isize).rem_euclid(t as isize)) as usize])
                .collect();
            let a_ok = [0, 2, 4].iter().all(|&i| rows[a] & bit(w[i]) != 0)
                && [1, 3, 5].iter().all(|&i| rows[a] & bit(w[i]) == 0);
            let b_ok = rows[b] & bit(w[1]) != 0 && rows[b] & bit(w[3]) != 0;
            if a_ok && b_ok {
                return Some((w, ()));
            }
        }
    }
    None
}

/// Evaluates the three neighborhood-union sums along a remainder path
/// against the bound 12; inapplicable clauses report `true`.
pub fn path_inequalities(
    g: &Graph,
    sys: &RSystem,
    c: &ChordedCycle,
    path: &Path,
) -> Result<(bool, bool, bool)> {
    sys.validate(g)?;
    require_member(sys, c)?;
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());
    let rem = full & !sys.mask();
    Path::new(g, path.vertices().to_vec())?;
    if path.vertices().iter().any(|&v| rem & bit(v) == 0) {
        return Err(Error::PreconditionViolated("path must lie in the remainder".into()));
    }
    let x = path.vertices();
    if x.len() < 4 {
        return Err(Error::PathTooShort(format!("need at least 4 vertices, got {}", x.len())));
    }
    let d = |i: usize, j: usize| ((rows[x[i]] | rows[x[j]]) & c.mask()).count_ones() as usize;
    let b1 = d(0, 2) + d(0, 3) + d(1, 3) <= 12;
    let b2 = if x.len() >= 5 { d(0, 2) + d(1, 3) + d(2, 4) <= 12 } else { true };
    let b3 = if x.len() >= 5 && g.has_edge(x[1], x[3]) {
        d(0, 2) + d(0, 3) + d(1, 4) <= 12
    } else {
        true
    };
    Ok((b1, b2, b3))
}

/// Outcome of the packer. `NotFoundProven` only after a completed exhaustive
/// search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackOutcome {
    Witness(RSystem),
    NotFoundProven,
    BudgetExhausted,
}

/// Finds `s` vertex-disjoint chorded cycles: complete-graph shortcut, greedy
/// shortest-first extraction, exchange-move local search seeded from an
/// optimal (s-1)-system, then an exhaustive budgeted fallback.
pub fn pack_chorded_cycles(g: &Graph, s: usize, caps: &Caps) -> Result<PackOutcome> {
    if s == 0 {
        return Err(Error::PreconditionViolated("s must be at least 1".into()));
    }
    let rows = g.mask_rows()?;
    let full = full_mask(g.n());

    // (i) Complete-graph shortcut: consecutive 4-cliques.
    if g.is_complete() && g.n() >= 4 * s {
        let mut cycles = Vec::new();
        for i in 0..s {
            let b = 4 * i;
            cycles.push(ChordedCycle::new(
                g,
                vec![b, b + 1, b + 2, b + 3],
                vec![(b, b + 2), (b + 1, b + 3)],
            )?);
        }
        return Ok(PackOutcome::Witness(RSystem::new(g, cycles)?));
    }

    // (ii) Greedy shortest-first extraction.
    let mut budget = caps.budget;
    if let Some(sys) = greedy(&rows, full, s) {
        return Ok(PackOutcome::Witness(assemble(g, sys)?));
    }

    // (iii) Local search from an optimal (s-1)-system.
    if s >= 2 && g.n() <= caps.exact_n.min(24) {
        if let Some(sys) = local_search(g, &rows, full, s, caps, &mut budget)? {
            return Ok(PackOutcome::Witness(sys));
        }
    }

    // (iv) Exhaustive fallback within budget.
    let mut chosen: Vec<CycleLite> = Vec::new();
    match exhaust(&rows, full, s, 0, None, &mut chosen, &mut budget) {
        Exhaust::Found => Ok(PackOutcome::Witness(assemble(g, chosen)?)),
        Exhaust::Completed => Ok(PackOutcome::NotFoundProven),
        Exhaust::OutOfBudget => Ok(PackOutcome::BudgetExhausted),
    }
}

fn greedy(rows: &[u64], full: u64, s: usize) -> Option<Vec<CycleLite>> {
    let mut rem = full;
    let mut out = Vec::new();
    for _ in 0..s {
        let (seq, chords) = bitgraph::min_chorded_cycle(rows, rem, None)?;
        let vset = seq.iter().fold(0u64, |m, &v| m | bit(v));
        rem &= !vset;
        out.push(CycleLite { seq, vset, chords });
    }
    Some(out)
}

enum Exhaust {
    Found,
    Completed,
    OutOfBudget,
}

fn exhaust(
    rows: &[u64],
    full: u64,
    s: usize,
    used: u64,
    prev_key: Option<&(Vec<usize>, Vec<usize>)>,
    chosen: &mut Vec<CycleLite>,
    budget: &mut u64,
) -> Exhaust {
    if chosen.len() == s {
        return Exhaust::Found;
    }
    let rem = full & !used;
    let left = s - chosen.len();
    if (rem.count_ones() as usize) < 4 * left {
        return Exhaust::Completed;
    }
    let max_len = rem.count_ones() as usize - 4 * (left - 1);
    let Some(cycles) = bitgraph::all_chorded_cycles(rows, rem, max_len, budget) else {
        return Exhaust::OutOfBudget;
    };
    for c in cycles {
        if let Some(pk) = prev_key {
            if c.key() <= *pk {
                continue;
            }
        }
        if *budget == 0 {
            return Exhaust::OutOfBudget;
        }
        *budget -= 1;
        let key = c.key();
        let vset = c.vset;
        chosen.push(c);
        match exhaust(rows, full, s, used | vset, Some(&key), chosen, budget) {
            Exhaust::Found => return Exhaust::Found,
            Exhaust::OutOfBudget => return Exhaust::OutOfBudget,
            Exhaust::Completed => {
                chosen.pop();
            }
        }
    }
    Exhaust::Completed
}

// ---------------------------------------------------------------------------
// Local search: exchange moves over an optimal (s-1)-system.

#[derive(Clone)]
struct WorkCycle {
    seq: Vec<usize>,
    vset: u64,
    chords: Vec<(usize, usize)>,
}

impl WorkCycle {
    fn from_chorded(c: &ChordedCycle) -> Self {
        WorkCycle {
            seq: c.cycle().vertices().to_vec(),
            vset: c.mask(),
            chords: c.chords().to_vec(),
        }
    }

    fn to_lite(&self) -> CycleLite {
        CycleLite { seq: self.seq.clone(), vset: self.vset, chords: self.chords.clone() }
    }
}

fn local_search(
    g: &Graph,
    rows: &[u64],
    full: u64,
    s: usize,
    caps: &Caps,
    budget: &mut u64,
) -> Result<Option<RSystem>> {
    let Some(base) = optimal_system(g, s - 1)? else {
        return Ok(None);
    };
    let mut sys: Vec<WorkCycle> = base.cycles().iter().map(WorkCycle::from_chorded).collect();
    let mut rewires_left = remainder_block_count(g, full & !mask_of(&sys)).unwrap_or(0) + s;

    for _ in 0..caps.exact_n * 4 {
        if *budget < 1000 {
            return Ok(None);
        }
        *budget -= 1;
        let sys_mask = mask_of(&sys);
        let rem = full & !sys_mask;

        // Direct completion.
        if let Some((seq, chords)) = bitgraph::min_chorded_cycle(rows, rem, None) {
            let vset = seq.iter().fold(0u64, |m, &v| m | bit(v));
            let mut lites: Vec<CycleLite> = sys.iter().map(|c| c.to_lite()).collect();
            lites.push(CycleLite { seq, vset, chords });
            return Ok(Some(assemble(g, lites)?));
        }

        let comps = bitgraph::components(rows, rem);
        let Some(&h_mask) = comps.iter().max_by_key(|c| c.count_ones()) else {
            break;
        };

        // Triangle-leaf-block moves.
        if let Some(step) = triangle_leaf_block_move(g, rows, &sys, h_mask, rem, rewires_left > 0)? {
            match step {
                TlbStep::Complete(lites) => return Ok(Some(assemble(g, lites)?)),
                TlbStep::Rewired(new_sys) => {
                    // Bounded by the remainder block count; stop rewiring
                    // when the bound is hit rather than looping.
                    rewires_left = rewires_left.saturating_sub(1);
                    sys = new_sys;
                    continue;
                }
            }
        }

        // Hexagon swaps that enlarge the remainder objective (component
        // order first, then longest path length).
        let cur = objective(rows, full & !sys_mask, caps);
        let mut improved = false;
        'swap: for ci in 0..sys.len() {
            if sys[ci].seq.len() != 6 {
                continue;
            }
            for cand in hexagon_replacements(rows, &sys[ci], rem) {
                let mut trial = sys.clone();
                trial[ci] = cand;
                let trial_mask = mask_of(&trial);
                let obj = objective(rows, full & !trial_mask, caps);
                if obj > cur {
                    sys = trial;
                    improved = true;
                    break 'swap;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok(None)
}

fn mask_of(sys: &[WorkCycle]) -> u64 {
    sys.iter().fold(0, |m, c| m | c.vset)
}

/// (largest component order, longest path length inside the largest
/// components); the lexicographic local-search objective.
fn objective(rows: &[u64], rem: u64, caps: &Caps) -> (usize, usize) {
    let comps = bitgraph::components(rows, rem);
    let rmax = comps.iter().map(|c| c.count_ones() as usize).max().unwrap_or(0);
    let mut ell = 0;
    for &c in comps.iter().filter(|c| c.count_ones() as usize == rmax) {
        if (c.count_ones() as usize) <= caps.exact_n {
            ell = ell.max(bitgraph::longest_path_vertices(rows, c).saturating_sub(1));
        }
    }
    (rmax, ell)
}

fn remainder_block_count(g: &Graph, rem: u64) -> Option<usize> {
    let rows = g.mask_rows().ok()?;
    let mut count = 0;
    for comp in bitgraph::components(&rows, rem) {
        let vs: VertexSet = Bits(comp).collect();
        let (sub, _) = g.induced(&vs).ok()?;
        count += block_decomposition(&sub).ok()?.blocks.len();
    }
    Some(count)
}

enum TlbStep {
    Complete(Vec<CycleLite>),
    Rewired(Vec<WorkCycle>),
}

/// Constructions around two triangle leaf blocks of the largest remainder
/// component: either two disjoint chorded cycles replace one system cycle
/// (completing an s-system), or two length-4 system cycles are rewired to
/// absorb the block apexes, reducing the remainder's block count.
fn triangle_leaf_block_move(
    g: &Graph,
    rows: &[u64],
    sys: &[WorkCycle],
    h_mask: u64,
    rem: u64,
    allow_rewire: bool,
) -> Result<Option<TlbStep>> {
    let h_set: VertexSet = Bits(h_mask).collect();
    if h_set.len() < 6 {
        return Ok(None);
    }
    let (sub, map) = g.induced(&h_set)?;
    let Ok(dec) = block_decomposition(&sub) else {
        return Ok(None);
    };
    let mut tri_blocks: Vec<(VertexSet, usize)> = Vec::new(); // (block, cut vertex), original ids
    for &bi in &dec.leaf_blocks {
        let b = &dec.blocks[bi];
        if b.len() == 3 {
            let cut = b.intersection(&dec.cut_vertices).iter().next().unwrap();
            let orig: VertexSet = b.iter().map(|v| map[v]).collect();
            tri_blocks.push((orig, map[cut]));
        }
    }
    if tri_blocks.len() < 2 {
        return Ok(None);
    }

    for i in 0..tri_blocks.len() {
        for j in i + 1..tri_blocks.len() {
            let (bx, x) = &tri_blocks[i];
            let (by, y) = &tri_blocks[j];
            // Two disjoint chorded cycles inside one system cycle plus H.
            for (ci, c) in sys.iter().enumerate() {
                if let Some((a, b)) = tlb_pair(g, rows, c, bx, *x, by, *y, h_mask) {
                    let mut lites: Vec<CycleLite> = sys
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != ci)
                        .map(|(_, w)| w.to_lite())
                        .collect();
                    lites.push(a);
                    lites.push(b);
                    return Ok(Some(TlbStep::Complete(lites)));
                }
            }
            if allow_rewire {
                if let Some(new_sys) = tlb_rewire(g, rows, sys, bx, *x, by, *y, rem)? {
                    return Ok(Some(TlbStep::Rewired(new_sys)));
                }
            }
        }
    }
    Ok(None)
}

/// Candidate chorded cycles through a triangle block `{cut, z1, z2}` and a
/// system cycle: block 4-cycles, three-neighbor 4-cycles, sibling-pair
/// 4-cycles, and block-to-block routes along a remainder path.
#[allow(clippy::too_many_arguments)]
fn tlb_side_candidates(
    g: &Graph,
    rows: &[u64],
    c: &WorkCycle,
    block: &VertexSet,
    cut: usize,
    other_block: &VertexSet,
    other_cut: usize,
    h_mask: u64,
) -> Vec<CycleLite> {
    let mut out = Vec::new();
    let zs: Vec<usize> = block.iter().filter(|&v| v != cut).collect();
    let (z1, z2) = (zs[0], zs[1]);
    let mut push = |seq: Vec<usize>| {
        let chords = bitgraph::chords_of(rows, &seq);
        if !chords.is_empty() && ChordedCycle::new(g, seq.clone(), chords.clone()).is_ok() {
            let vset = seq.iter().fold(0u64, |m, &v| m | bit(v));
            out.push(CycleLite { seq, vset, chords });
        }
    };

    for &u in &c.seq {
        // Block 4-cycle: u adjacent to both triangle siblings.
        if rows[u] & bit(z1) != 0 && rows[u] & bit(z2) != 0 {
            push(vec![u, z1, cut, z2]);
        }
        // Sibling pair through two cycle vertices.
        for &w in &c.seq {
            if w > u && rows[z1] & bit(u) != 0 && rows[z1] & bit(w) != 0 && rows[z2] & bit(u) != 0
                && rows[z2] & bit(w) != 0
            {
                push(vec![u, z1, w, z2]);
            }
        }
        // Three cycle neighbors of a sibling.
        for &z in &[z1, z2] {
            let nc: Vec<usize> = c.seq.iter().copied().filter(|&w| rows[z] & bit(w) != 0).collect();
            if nc.len() >= 3 {
                for ai in 0..nc.len() {
                    for bi in 0..nc.len() {
                        for di in 0..nc.len() {
                            if ai == bi || bi == di || ai == di {
                                continue;
                            }
                            let (a, b2, d2) = (nc[ai], nc[bi], nc[di]);
                            if rows[a] & bit(b2) != 0 && rows[b2] & bit(d2) != 0 {
                                push(vec![a, z, d2, b2]);
                            }
                        }
                    }
                }
            }
        }
    }

    // Block-to-block route: u -> z -> z' -> cut -> (path in H) -> other_cut
    // -> tail in the other block -> u.
    let others: Vec<usize> = other_block.iter().filter(|&v| v != other_cut).collect();
    let path_allowed = h_mask
        & !bit(z1)
        & !bit(z2)
        & !others.iter().fold(0u64, |m, &v| m | bit(v));
    let Some(p) = bitgraph::bfs_path_to_targets(rows, cut, path_allowed, bit(other_cut)) else {
        return out;
    };
    for &u in &c.seq {
        for (h1, h2) in [(z1, z2), (z2, z1)] {
            if rows[u] & bit(h1) == 0 {
                continue;
            }
            // Full-triangle head with a head chord (h1, cut).
            for tail in [vec![others[0]], vec![others[1]], vec![others[1], others[0]], vec![others[0], others[1]]] {
                if rows[*tail.last().unwrap()] & bit(u) == 0 {
                    continue;
                }
                let mut seq = vec![u, h1, h2];
                seq.extend(&p);
                seq.extend(&tail);
                push(seq);
            }
            // Short head: chord must come from a two-vertex tail.
            for tail in [vec![others[1], others[0]], vec![others[0], others[1]]] {
                if rows[*tail.last().unwrap()] & bit(u) == 0 {
                    continue;
                }
                let mut seq = vec![u, h1];
                seq.extend(&p);
                seq.extend(&tail);
                push(seq);
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn tlb_pair(
    g: &Graph,
    rows: &[u64],
    c: &WorkCycle,
    bx: &VertexSet,
    x: usize,
    by: &VertexSet,
    y: usize,
    h_mask: u64,
) -> Option<(CycleLite, CycleLite)> {
    let xs = tlb_side_candidates(g, rows, c, bx, x, by, y, h_mask);
    let ys = tlb_side_candidates(g, rows, c, by, y, bx, x, h_mask);
    for a in &xs {
        for b in &ys {
            if a.vset & b.vset == 0 {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Rewiring step: two 4-cycles whose vertices are fully adjacent to a
/// triangle sibling each get that sibling swapped in, freeing an edge-joined
/// pair of cycle vertices into the remainder.
#[allow(clippy::too_many_arguments)]
fn tlb_rewire(
    g: &Graph,
    rows: &[u64],
    sys: &[WorkCycle],
    bx: &VertexSet,
    x: usize,
    by: &VertexSet,
    y: usize,
    rem: u64,
) -> Result<Option<Vec<WorkCycle>>> {
    let xs: Vec<usize> = bx.iter().filter(|&v| v != x).collect();
    let ys: Vec<usize> = by.iter().filter(|&v| v != y).collect();
    let full_rem_obj = {
        let comps = bitgraph::components(rows, rem);
        comps.iter().map(|c| c.count_ones() as usize).max().unwrap_or(0)
    };
    for ci in 0..sys.len() {
        if sys[ci].seq.len() != 4 {
            continue;
        }
        for cj in 0..sys.len() {
            if cj == ci || sys[cj].seq.len() != 4 {
                continue;
            }
            for &x1 in &xs {
                if (rows[x1] & sys[ci].vset).count_ones() != 4 {
                    continue;
                }
                for &y1 in &ys {
                    if (rows[y1] & sys[cj].vset).count_ones() != 4 {
                        continue;
                    }
                    for (pi, &up) in sys[ci].seq.iter().enumerate() {
                        for &vp in sys[cj].seq.iter() {
                            if rows[up] & bit(vp) == 0 {
                                continue;
                            }
                            let mut new_sys = sys.to_vec();
                            new_sys[ci] = rewired_cycle(rows, &sys[ci], pi, x1);
                            let pj = sys[cj].seq.iter().position(|&w| w == vp).unwrap();
                            new_sys[cj] = rewired_cycle(rows, &sys[cj], pj, y1);
                            if ChordedCycle::new(g, new_sys[ci].seq.clone(), new_sys[ci].chords.clone()).is_err()
                                || ChordedCycle::new(g, new_sys[cj].seq.clone(), new_sys[cj].chords.clone()).is_err()
                            {
                                continue;
                            }
                            let new_rem = (rem | bit(up) | bit(vp)) & !bit(x1) & !bit(y1);
                            let new_obj = bitgraph::components(rows, new_rem)
                                .iter()
                                .map(|c| c.count_ones() as usize)
                                .max()
                                .unwrap_or(0);
                            if new_obj != full_rem_obj {
                                continue;
                            }
                            return Ok(Some(new_sys));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Replace the vertex at position `pos` of a 4-cycle by `z` (adjacent to all
/// of it); the opposite remaining vertex supplies the chord.
fn rewired_cycle(rows: &[u64], c: &WorkCycle, pos: usize, z: usize) -> WorkCycle {
    let t = c.seq.len();
    let mut seq: Vec<usize> = (1..t).map(|i| c.seq[(pos + i) % t]).collect();
    seq.push(z);
    let chords = bitgraph::chords_of(rows, &seq);
    let vset = seq.iter().fold(0u64, |m, &v| m | bit(v));
    WorkCycle { seq, vset, chords }
}

/// Hexagon replacement candidates: remainder vertices with three alternating
/// neighbors swap in for one of the opposite-parity vertices.
fn hexagon_replacements(rows: &[u64], c: &WorkCycle, rem: u64) -> Vec<WorkCycle> {
    let mut out = Vec::new();
    let t = c.seq.len();
    debug_assert_eq!(t, 6);
    for w in Bits(rem) {
        let nc = rows[w] & c.vset;
        if nc.count_ones() != 3 {
            continue;
        }
        for start in 0..t {
            for dir in [1isize, -1isize] {
                let ws: Vec<usize> = (0..t)
                    .map(|i| c.seq[((start as isize + dir * i as isize).rem_euclid(t as isize)) as usize])
                    .collect();
                let alternating = [0, 2, 4].iter().all(|&i| nc & bit(ws[i]) != 0);
                if !alternating {
                    continue;
                }
                let seq = vec![w, ws[0], ws[5], ws[4], ws[3], ws[2]];
                let chords = bitgraph::chords_of(rows, &seq);
                if !chords.is_empty() {
                    let vset = seq.iter().fold(0u64, |m, &v| m | bit(v));
                    out.push(WorkCycle { seq, vset, chords });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{extremal_g1, extremal_g2};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn exact_min_system_examples() {
        let k8 = Graph::complete(8);
        let sys = exact_min_system(&k8, 2).unwrap().unwrap();
        assert_eq!(sys.vertex_count(), 8);
        sys.validate(&k8).unwrap();

        let c7 = Graph::cycle(7).unwrap();
        assert!(exact_min_system(&c7, 1).unwrap().is_none());

        // Wheel on 7 vertices: hub 0, rim 1..=6.
        let mut edges = Vec::new();
        for i in 1..=6 {
            edges.push((0, i));
            edges.push((i, i % 6 + 1));
        }
        let wheel = Graph::from_edges(7, &edges).unwrap();
        let sys = exact_min_system(&wheel, 1).unwrap().unwrap();
        assert_eq!(sys.vertex_count(), 4);
    }

    #[test]
    fn optimal_system_examples() {
        let k8 = Graph::complete(8);
        let sys = optimal_system(&k8, 2).unwrap().unwrap();
        assert_eq!(metrics(&k8, &sys, &caps()).unwrap().remainder_max_component, 0);

        // Two K4's joined by one edge.
        let mut g = Graph::complete(4).disjoint_union(&Graph::complete(4));
        g.add_edge(3, 4);
        let sys = optimal_system(&g, 1).unwrap().unwrap();
        assert_eq!(sys.vertex_count(), 4);
        assert_eq!(metrics(&g, &sys, &caps()).unwrap().remainder_max_component, 4);

        let g2 = extremal_g2(2).unwrap();
        let sys = optimal_system(&g2, 1).unwrap().unwrap();
        assert_eq!(sys.vertex_count(), 4);
        assert_eq!(metrics(&g2, &sys, &caps()).unwrap().remainder_max_component, 5);
    }

    #[test]
    fn minimality_check() {
        let k8 = Graph::complete(8);
        let sys = exact_min_system(&k8, 2).unwrap().unwrap();
        assert!(check_minimality(&k8, &sys).unwrap());

        // A 6-cycle in K8 is never minimal: a chorded 4-cycle fits inside.
        let six = ChordedCycle::new(&k8, vec![0, 1, 2, 3, 4, 5], vec![(0, 2)]).unwrap();
        let sys = RSystem::new(&k8, vec![six]).unwrap();
        assert!(!check_minimality(&k8, &sys).unwrap());

        let a = ChordedCycle::new(&k8, vec![0, 1, 2, 3], vec![(0, 2)]).unwrap();
        let b = ChordedCycle::new(&k8, vec![4, 5, 6, 7], vec![(4, 6)]).unwrap();
        let sys = RSystem::new(&k8, vec![a, b]).unwrap();
        assert!(check_minimality(&k8, &sys).unwrap());
    }

    #[test]
    fn degree3_cases() {
        // |C| = 4: K4 plus a remainder vertex with three neighbors on it.
        let mut g = Graph::complete(4).disjoint_union(&Graph::empty(1));
        g.add_edge(4, 0);
        g.add_edge(4, 1);
        g.add_edge(4, 2);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3], vec![(0, 2), (1, 3)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        assert_eq!(degree3_classify(&g, &sys, &c, 4).unwrap(), Degree3Case::Len4);

        // |C| = 5 with chord (1,4) and u adjacent to {0,2,3}.
        let mut g = Graph::cycle(5).unwrap().disjoint_union(&Graph::empty(1));
        g.add_edge(1, 4);
        g.add_edge(5, 0);
        g.add_edge(5, 2);
        g.add_edge(5, 3);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3, 4], vec![(1, 4)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        assert_eq!(degree3_classify(&g, &sys, &c, 5).unwrap(), Degree3Case::Len5Pattern);

        // |C| = 6 with antipodal chord (0,3) and u adjacent to {0,2,4}.
        let mut g = Graph::cycle(6).unwrap().disjoint_union(&Graph::empty(1));
        g.add_edge(0, 3);
        g.add_edge(6, 0);
        g.add_edge(6, 2);
        g.add_edge(6, 4);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3, 4, 5], vec![(0, 3)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        assert_eq!(degree3_classify(&g, &sys, &c, 6).unwrap(), Degree3Case::Len6TriangleFree);

        // Degree 2 is rejected.
        let mut g = Graph::cycle(6).unwrap().disjoint_union(&Graph::empty(1));
        g.add_edge(0, 3);
        g.add_edge(6, 0);
        g.add_edge(6, 2);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3, 4, 5], vec![(0, 3)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        assert!(matches!(
            degree3_classify(&g, &sys, &c, 6),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn hexagon_swap_follows_the_antipodal_chord() {
        // C6 with chord (0,3); u = 6 adjacent to {0,2,4}; v = 7 to {1,3}.
        let mut g = Graph::cycle(6).unwrap().disjoint_union(&Graph::empty(2));
        g.add_edge(0, 3);
        g.add_edge(6, 0);
        g.add_edge(6, 2);
        g.add_edge(6, 4);
        g.add_edge(7, 1);
        g.add_edge(7, 3);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3, 4, 5], vec![(0, 3)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        assert!(check_minimality(&g, &sys).unwrap());

        let swap = six_cycle_swap(&g, &sys, &c, 6, 7).unwrap();
        assert_eq!(swap.c_u.cycle().vertices(), &[6, 0, 5, 4, 3, 2]);
        assert_eq!(swap.v_prime, 1);
        assert_eq!(swap.c_v.cycle().vertices(), &[7, 1, 0, 5, 4, 3]);
        assert_eq!(swap.u_prime, 2);
        swap.c_u.validate(&g).unwrap();
        swap.c_v.validate(&g).unwrap();
    }

    #[test]
    fn hexagon_swap_with_the_other_antipodal_chord() {
        // Chord (2,5) instead: the second construction route fires, freeing
        // the first cycle vertex.
        let mut g = Graph::cycle(6).unwrap().disjoint_union(&Graph::empty(2));
        g.add_edge(2, 5);
        g.add_edge(6, 0);
        g.add_edge(6, 2);
        g.add_edge(6, 4);
        g.add_edge(7, 1);
        g.add_edge(7, 3);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3, 4, 5], vec![(2, 5)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        assert!(check_minimality(&g, &sys).unwrap());

        let swap = six_cycle_swap(&g, &sys, &c, 6, 7).unwrap();
        assert_eq!(swap.c_v.cycle().vertices(), &[7, 1, 2, 5, 4, 3]);
        assert_eq!(swap.c_v.chords(), &[(2, 3)]);
        assert_eq!(swap.u_prime, 0);
        swap.c_u.validate(&g).unwrap();
    }

    #[test]
    fn hexagon_swap_rejects_non_minimal_configurations() {
        // A 5-cycle with high union degree forces a shorter chorded cycle,
        // so the minimality gate trips.
        let mut g = Graph::cycle(5).unwrap().disjoint_union(&Graph::empty(2));
        g.add_edge(0, 2);
        g.add_edge(5, 0);
        g.add_edge(5, 2);
        g.add_edge(5, 3);
        g.add_edge(6, 1);
        g.add_edge(6, 4);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3, 4], vec![(0, 2)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        assert!(matches!(
            six_cycle_swap(&g, &sys, &c, 5, 6),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn path_inequalities_on_short_cycle_are_trivially_true() {
        let mut g = Graph::complete(4).disjoint_union(&Graph::path(5));
        g.add_edge(0, 4);
        let c = ChordedCycle::new(&g, vec![0, 1, 2, 3], vec![(0, 2), (1, 3)]).unwrap();
        let sys = RSystem::new(&g, vec![c.clone()]).unwrap();
        let p = Path::new(&g, vec![4, 5, 6, 7, 8]).unwrap();
        assert_eq!(path_inequalities(&g, &sys, &c, &p).unwrap(), (true, true, true));

        let short = Path::new(&g, vec![4, 5, 6]).unwrap();
        assert!(matches!(
            path_inequalities(&g, &sys, &c, &short),
            Err(Error::PathTooShort(_))
        ));
    }

    #[test]
    fn path_inequalities_catch_a_corrupted_system() {
        // K11 with the 6-cycle 0..5 declared as the system: not minimal, and
        // the remainder 5-path blows through every bound.
        let k11 = Graph::complete(11);
        let c = ChordedCycle::new(&k11, vec![0, 1, 2, 3, 4, 5], vec![(0, 2)]).unwrap();
        let sys = RSystem::new(&k11, vec![c.clone()]).unwrap();
        assert!(!check_minimality(&k11, &sys).unwrap());
        let p = Path::new(&k11, vec![6, 7, 8, 9, 10]).unwrap();
        assert_eq!(path_inequalities(&k11, &sys, &c, &p).unwrap(), (false, false, false));
    }

    #[test]
    fn pack_recovers_when_greedy_extracts_a_blocking_cycle() {
        // K4 on the evens, K4 on the odds, plus the square 0-1-2-3: the
        // least minimum chorded cycle is {0,1,2,3}, whose removal leaves
        // two disjoint edges, so greedy stalls; the packing along the
        // parity classes must still be found.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
        for c in [[0usize, 2, 4, 6], [1usize, 3, 5, 7]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((c[i], c[j]));
                }
            }
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        // Confirm the premise: greedy's first pick blocks the remainder.
        let rows = g.mask_rows().unwrap();
        let (first, _) = bitgraph::min_chorded_cycle(&rows, 0xff, None).unwrap();
        assert_eq!(first, vec![0, 1, 2, 3]);
        assert!(greedy(&rows, 0xff, 2).is_none());

        match pack_chorded_cycles(&g, 2, &caps()).unwrap() {
            PackOutcome::Witness(sys) => {
                sys.validate(&g).unwrap();
                assert_eq!(sys.r(), 2);
            }
            v => panic!("expected witness, got {v:?}"),
        }
    }

    #[test]
    fn exact_search_handles_the_64_vertex_boundary() {
        let k64 = Graph::complete(64);
        let sys = exact_min_system(&k64, 2).unwrap().unwrap();
        assert_eq!(sys.vertex_count(), 8);
        let g65 = Graph::complete(65);
        assert!(matches!(exact_min_system(&g65, 1), Err(Error::CapacityExceeded(_))));
    }

    #[test]
    fn pack_examples() {
        let k8 = Graph::complete(8);
        match pack_chorded_cycles(&k8, 2, &caps()).unwrap() {
            PackOutcome::Witness(sys) => {
                assert_eq!(sys.r(), 2);
                sys.validate(&k8).unwrap();
            }
            v => panic!("expected witness, got {v:?}"),
        }

        let g2 = extremal_g2(2).unwrap();
        match pack_chorded_cycles(&g2, 2, &caps()).unwrap() {
            PackOutcome::Witness(sys) => sys.validate(&g2).unwrap(),
            v => panic!("expected witness on the packable extremal family, got {v:?}"),
        }

        let g1 = extremal_g1(2).unwrap();
        assert_eq!(pack_chorded_cycles(&g1, 2, &caps()).unwrap(), PackOutcome::NotFoundProven);
    }
}
