//! Structural substrate: paths, cycles, block decomposition, longest paths,
//! triangles, ears of a cycle, and the trichotomy for connected graphs with
//! no chorded cycle and no Hamiltonian path.

use crate::bitgraph::{self, bit, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cap for the exact longest-path/longest-cycle searches.
pub const DEFAULT_EXACT_CAP: usize = 20;

/// A simple path given as its vertex sequence (original ids).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::PreconditionViolated("empty path".into()));
        }
        let mut seen = VertexSet::new();
        for &v in &vertices {
            if v >= g.n() || seen.contains(v) {
                return Err(Error::PreconditionViolated(format!("invalid path vertex {v}")));
            }
            seen.insert(v);
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::PreconditionViolated(format!("missing path edge ({}, {})", w[0], w[1])));
            }
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }
}

/// A simple cycle given as its vertex sequence, implicitly closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Cycle> {
        if vertices.len() < 3 {
            return Err(Error::PreconditionViolated("cycle needs at least 3 vertices".into()));
        }
        let mut seen = VertexSet::new();
        for &v in &vertices {
            if v >= g.n() || seen.contains(v) {
                return Err(Error::PreconditionViolated(format!("invalid cycle vertex {v}")));
            }
            seen.insert(v);
        }
        let t = vertices.len();
        for i in 0..t {
            let (u, v) = (vertices[i], vertices[(i + 1) % t]);
            if !g.has_edge(u, v) {
                return Err(Error::PreconditionViolated(format!("missing cycle edge ({u}, {v})")));
            }
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub(crate) fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    /// True iff `u` and `v` are consecutive along the cycle.
    pub fn are_consecutive(&self, u: usize, v: usize) -> bool {
        let t = self.vertices.len();
        match (self.position(u), self.position(v)) {
            (Some(i), Some(j)) => (i + 1) % t == j || (j + 1) % t == i,
            _ => false,
        }
    }

    /// Distance along the cycle (length of the shorter arc).
    pub fn cycle_distance(&self, u: usize, v: usize) -> Option<usize> {
        let t = self.vertices.len();
        let (i, j) = (self.position(u)?, self.position(v)?);
        let d = i.abs_diff(j);
        Some(d.min(t - d))
    }

    /// Canonical form: rotated to the minimum vertex, lesser direction first.
    pub fn canonical(&self) -> Vec<usize> {
        let t = self.vertices.len();
        let start = (0..t).min_by_key(|&i| self.vertices[i]).unwrap();
        let fwd: Vec<usize> = (0..t).map(|k| self.vertices[(start + k) % t]).collect();
        let bwd: Vec<usize> = (0..t).map(|k| self.vertices[(start + t - k) % t]).collect();
        fwd.min(bwd)
    }
}

/// Blocks, cut vertices, and leaf blocks of a connected graph. A leaf block
/// contains exactly one cut vertex of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub leaf_blocks: Vec<usize>,
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![VertexSet::singleton(0)],
            cut_vertices: VertexSet::new(),
            leaf_blocks: Vec::new(),
        });
    }

    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        edge_stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
        is_cut: Vec<bool>,
    }

    fn dfs(st: &mut State<'_>, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        let mut children = 0usize;
        let mut skipped_parent = false;
        for v in st.g.neighbors(u) {
            if Some(v) == parent && !skipped_parent {
                skipped_parent = true;
                continue;
            }
            if st.disc[v] == 0 {
                st.edge_stack.push((u, v));
                children += 1;
                dfs(st, v, Some(u));
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    if parent.is_some() {
                        st.is_cut[u] = true;
                    }
                    let mut block = VertexSet::new();
                    while let Some(e) = st.edge_stack.pop() {
                        block.insert(e.0);
                        block.insert(e.1);
                        if e == (u, v) {
                            break;
                        }
                    }
                    st.blocks.push(block);
                }
            } else if st.disc[v] < st.disc[u] {
                st.edge_stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
        if parent.is_none() && children > 1 {
            st.is_cut[u] = true;
        }
    }

    let mut st = State {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; g.n()],
    };
    dfs(&mut st, 0, None);

    let cut_vertices: VertexSet = (0..g.n()).filter(|&v| st.is_cut[v]).collect();
    let mut blocks = st.blocks;
    blocks.sort();
    let leaf_blocks = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.intersection(&cut_vertices).len() == 1)
        .map(|(i, _)| i)
        .collect();
    Ok(BlockDecomposition { blocks, cut_vertices, leaf_blocks })
}

/// True iff `g` has at least 3 vertices, is connected, and has no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    match block_decomposition(g) {
        Ok(d) => d.blocks.len() == 1,
        Err(_) => false,
    }
}

/// A maximum-length path of the subgraph induced by `within`, deterministic
/// (lexicographically least vertex sequence among maximum-length paths).
pub fn longest_path(g: &Graph, within: &VertexSet) -> Result<Path> {
    longest_path_capped(g, within, DEFAULT_EXACT_CAP)
}

pub fn longest_path_capped(g: &Graph, within: &VertexSet, cap: usize) -> Result<Path> {
    if within.is_empty() {
        return Err(Error::PreconditionViolated("longest_path: empty vertex set".into()));
    }
    if !within.is_subset_of(&g.full_set()) {
        return Err(Error::PreconditionViolated("longest_path: set not within vertex range".into()));
    }
    if within.len() > cap {
        return Err(Error::CapacityExceeded(format!(
            "longest_path supports at most {cap} vertices, got {}",
            within.len()
        )));
    }
    let rows = g.mask_rows()?;
    let mask = within.to_mask64().expect("within fits in 64 bits after mask_rows");
    Path::new(g, bitgraph::longest_path_lex(&rows, mask))
}

/// A maximum-length cycle of `g`, canonical tie-break; `None` if acyclic.
pub(crate) fn longest_cycle(g: &Graph, cap: usize) -> Result<Option<Cycle>> {
    if g.n() > cap {
        return Err(Error::CapacityExceeded(format!(
            "longest_cycle supports at most {cap} vertices, got {}",
            g.n()
        )));
    }
    let rows = g.mask_rows()?;
    let mask = g.full_set().to_mask64().expect("checked above");
    match bitgraph::longest_cycle_lex(&rows, mask) {
        Some(seq) => Ok(Some(Cycle::new(g, seq)?)),
        None => Ok(None),
    }
}

/// The lexicographically least triangle, if any.
pub fn find_triangle(g: &Graph) -> Option<Cycle> {
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            for w in g.neighbors(u) {
                if w > v && g.has_edge(v, w) {
                    return Some(Cycle { vertices: vec![u, v, w] });
                }
            }
        }
    }
    None
}

/// An ear of a reference cycle: a path with both (distinct) ends on the
/// cycle and all internal vertices off it. Length-1 ears are chords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ear {
    path: Path,
}

impl Ear {
    pub fn new(g: &Graph, c: &Cycle, vertices: Vec<usize>) -> Result<Ear> {
        let path = Path::new(g, vertices)?;
        let ends = (path.vertices()[0], *path.vertices().last().unwrap());
        if ends.0 == ends.1 || !c.contains(ends.0) || !c.contains(ends.1) {
            return Err(Error::PreconditionViolated("ear ends must be distinct cycle vertices".into()));
        }
        for &v in &path.vertices()[1..path.vertices().len() - 1] {
            if c.contains(v) {
                return Err(Error::PreconditionViolated("ear internals must avoid the cycle".into()));
            }
        }
        if path.length() == 1 && c.are_consecutive(ends.0, ends.1) {
            return Err(Error::PreconditionViolated("length-1 ear must not be a cycle edge".into()));
        }
        Ok(Ear { path })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn ends(&self) -> (usize, usize) {
        let v = self.path.vertices();
        (v[0], *v.last().unwrap())
    }

    pub fn internals(&self) -> &[usize] {
        let v = self.path.vertices();
        &v[1..v.len() - 1]
    }

    pub fn length(&self) -> usize {
        self.path.length()
    }
}

/// Enumerates every ear of `c` with both ends in `i_mask`, as vertex
/// sequences oriented from the smaller end.
pub(crate) fn enumerate_ears(
    rows: &[u64],
    n: usize,
    cyc: &Cycle,
    i_mask: u64,
    consider: &mut dyn FnMut(&[usize]),
) {
    let cyc_mask = cyc.mask();
    let all = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
    let off_mask = all & !cyc_mask;
    for a in Bits(i_mask) {
        // Chords with both ends in I.
        for b in Bits(rows[a] & i_mask) {
            if b > a && !cyc.are_consecutive(a, b) {
                consider(&[a, b]);
            }
        }
        // Longer ears: walk off-cycle vertices.
        let mut path = vec![a];
        let mut used = 0u64;
        for x in Bits(rows[a] & off_mask) {
            walk(rows, off_mask, i_mask, a, x, &mut path, &mut used, consider);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        rows: &[u64],
        off_mask: u64,
        i_mask: u64,
        a: usize,
        x: usize,
        path: &mut Vec<usize>,
        used: &mut u64,
        consider: &mut dyn FnMut(&[usize]),
    ) {
        path.push(x);
        *used |= bit(x);
        for b in Bits(rows[x] & i_mask) {
            if b > a {
                path.push(b);
                consider(path);
                path.pop();
            }
        }
        for y in Bits(rows[x] & off_mask & !*used) {
            walk(rows, off_mask, i_mask, a, y, path, used, consider);
        }
        *used &= !bit(x);
        path.pop();
    }
}

/// Among all ears of `c` with both ends in `i_set`, picks one whose ends are
/// as close as possible along the cycle, then of maximum length, then least
/// end pair, then least internal sequence. `None` when there is no such ear.
pub fn good_ear(g: &Graph, c: &Cycle, i_set: &VertexSet) -> Result<Option<Ear>> {
    c.vertices().iter().try_for_each(|&v| {
        if v < g.n() {
            Ok(())
        } else {
            Err(Error::PreconditionViolated("cycle not in graph".into()))
        }
    })?;
    if !i_set.is_subset_of(&c.vertex_set()) {
        return Err(Error::InvalidSegment("I must be a subset of the cycle".into()));
    }
    if !is_arc(c, i_set) {
        return Err(Error::InvalidSegment("I must be the vertex set of a path on the cycle".into()));
    }
    let rows = g.mask_rows()?;
    let i_mask = i_set.to_mask64().expect("subset of cycle fits");

    // key: (end distance, -length, end pair, internal sequence)
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    enumerate_ears(&rows, g.n(), c, i_mask, &mut |seq| {
        let (a, b) = (seq[0], *seq.last().unwrap());
        let dist = c.cycle_distance(a, b).unwrap();
        let len = seq.len() - 1;
        let better = match &best {
            None => true,
            Some((bd, bl, bseq)) => {
                (dist, std::cmp::Reverse(len), seq.to_vec()) < (*bd, std::cmp::Reverse(*bl), bseq.clone())
            }
        };
        if better {
            best = Some((dist, len, seq.to_vec()));
        }
    });
    match best {
        Some((_, _, seq)) => Ok(Some(Ear::new(g, c, seq)?)),
        None => Ok(None),
    }
}

/// True iff `i_set` is the vertex set of a path along `c` (a contiguous arc).
fn is_arc(c: &Cycle, i_set: &VertexSet) -> bool {
    let t = c.len();
    let k = i_set.len();
    if k == 0 {
        return false;
    }
    if k == t {
        return true;
    }
    let mut positions: Vec<usize> = i_set.iter().map(|v| c.position(v).unwrap()).collect();
    positions.sort_unstable();
    let mut gaps = 0;
    for w in positions.windows(2) {
        if w[1] - w[0] > 1 {
            gaps += 1;
        }
    }
    if positions[0] + t - positions[k - 1] > 1 {
        gaps += 1;
    }
    gaps <= 1
}

/// Which clause of the no-Hamiltonian-path trichotomy holds, computed from a
/// lexicographically chosen longest path `P1` and a longest path `P2` of
/// `H - P1` oriented so the `P1`-degree of its first end is not larger than
/// that of its last end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trichotomy {
    /// `q <= 2` and the two paths cover all vertices.
    SmallQ { p1: Path, p2: Path },
    /// `q >= 3` and the first end of `P2` has degree 1 in `H`.
    PendantTail { v1: usize },
    /// A vertex off `P1 ∪ {v1}` of degree at most 2, nonadjacent to both
    /// ends of `P1`, whose removal keeps `H` connected.
    RemovableVertex { w: usize },
}

pub fn no_ham_path_trichotomy(h: &Graph) -> Result<Trichotomy> {
    if h.n() < 4 || !h.is_connected() {
        return Err(Error::PreconditionViolated("need a connected graph on >= 4 vertices".into()));
    }
    let rows = h.mask_rows()?;
    let full = h.full_set().to_mask64().ok_or_else(|| {
        Error::CapacityExceeded("trichotomy requires n <= 64".into())
    })?;
    if h.n() > DEFAULT_EXACT_CAP {
        return Err(Error::CapacityExceeded(format!(
            "trichotomy supports at most {DEFAULT_EXACT_CAP} vertices"
        )));
    }
    if bitgraph::min_chorded_cycle(&rows, full, None).is_some() {
        return Err(Error::PreconditionViolated("graph contains a chorded cycle".into()));
    }
    if bitgraph::has_ham_path(&rows, full) {
        return Err(Error::PreconditionViolated("graph has a Hamiltonian path".into()));
    }

    let p1 = longest_path(h, &h.full_set())?;
    let p1_mask = p1.vertices().iter().fold(0u64, |m, &v| m | bit(v));
    let rest = full & !p1_mask;
    debug_assert!(rest != 0, "no Hamiltonian path, so P1 misses something");
    let p2_seq = bitgraph::longest_path_lex(&rows, rest);
    let d_p1 = |v: usize| (rows[v] & p1_mask).count_ones() as usize;
    let p2 = {
        let v1 = p2_seq[0];
        let vq = *p2_seq.last().unwrap();
        if d_p1(v1) > d_p1(vq) {
            Path::new(h, p2_seq.iter().rev().copied().collect())?
        } else {
            Path::new(h, p2_seq)?
        }
    };

    let q = p2.vertices().len();
    let covered = p1_mask | p2.vertices().iter().fold(0u64, |m, &v| m | bit(v));
    if q <= 2 && covered == full {
        return Ok(Trichotomy::SmallQ { p1, p2 });
    }
    let v1 = p2.vertices()[0];
    if q >= 3 && h.degree(v1) == 1 {
        return Ok(Trichotomy::PendantTail { v1 });
    }
    let u1 = p1.vertices()[0];
    let up = *p1.vertices().last().unwrap();
    for w in Bits(full & !p1_mask & !bit(v1)) {
        if h.degree(w) <= 2
            && !h.has_edge(u1, w)
            && !h.has_edge(up, w)
            && bitgraph::is_connected_mask(&rows, full & !bit(w))
        {
            return Ok(Trichotomy::RemovableVertex { w });
        }
    }
    Err(Error::InternalInvariant("no trichotomy clause holds on a valid instance".into()))
}
