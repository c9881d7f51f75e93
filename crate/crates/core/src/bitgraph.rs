//! Search kernels over single-word adjacency rows (`n <= 64`).
//!
//! Every routine takes the full row table plus a `mask` restricting the
//! working vertex set, so results are always in original vertex ids. All
//! enumeration orders are deterministic: vertices ascend, cycles are rooted
//! at their minimum vertex with the smaller second-vertex orientation kept.

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Vertices reachable from `start` staying inside `mask` (includes `start`
/// when it is in `mask`).
pub(crate) fn reach_from(rows: &[u64], start: usize, mask: u64) -> u64 {
    if mask & bit(start) == 0 {
        return 0;
    }
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= rows[u] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn is_connected_mask(rows: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    reach_from(rows, start, mask) == mask
}

/// Connected components of `mask`, ascending by their minimum vertex.
pub(crate) fn components(rows: &[u64], mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let comp = reach_from(rows, start, rest);
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// True iff the subgraph on `mask` is connected, has >= 3 vertices, and no
/// cut vertex. Brute removal check; fine at desk scale.
pub(crate) fn is_two_connected_mask(rows: &[u64], mask: u64) -> bool {
    if mask.count_ones() < 3 || !is_connected_mask(rows, mask) {
        return false;
    }
    for v in Bits(mask) {
        if !is_connected_mask(rows, mask & !bit(v)) {
            return false;
        }
    }
    true
}

/// min |N(u) ∪ N(v)| over nonadjacent pairs inside `mask`; `None` = no such
/// pair (complete).
pub(crate) fn delta2_mask(rows: &[u64], mask: u64) -> Option<u32> {
    let mut best: Option<u32> = None;
    let verts: Vec<usize> = Bits(mask).collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if rows[u] & bit(v) == 0 {
                let k = ((rows[u] | rows[v]) & mask).count_ones();
                best = Some(best.map_or(k, |b| b.min(k)));
            }
        }
    }
    best
}

/// Deterministic BFS path from `start` to the nearest vertex of `targets`,
/// traversing only `allowed` vertices (targets themselves need not be in
/// `allowed`). Returns the full vertex sequence including both ends.
pub(crate) fn bfs_path_to_targets(
    rows: &[u64],
    start: usize,
    allowed: u64,
    targets: u64,
) -> Option<Vec<usize>> {
    if targets & bit(start) != 0 {
        return Some(vec![start]);
    }
    if allowed & bit(start) == 0 {
        return None;
    }
    let mut parent = [usize::MAX; 64];
    let mut seen = bit(start);
    let mut queue = vec![start];
    let mut qi = 0;
    while qi < queue.len() {
        let u = queue[qi];
        qi += 1;
        let hit = rows[u] & targets;
        if hit != 0 {
            let t = hit.trailing_zeros() as usize;
            let mut path = vec![t, u];
            let mut cur = u;
            while parent[cur] != usize::MAX {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for v in Bits(rows[u] & allowed & !seen) {
            seen |= bit(v);
            parent[v] = u;
            queue.push(v);
        }
    }
    None
}

/// BFS distances from `root` within `mask` (`u8::MAX` = unreachable).
fn bfs_dist(rows: &[u64], root: usize, mask: u64) -> [u8; 64] {
    let mut dist = [u8::MAX; 64];
    dist[root] = 0;
    let mut frontier = bit(root);
    let mut seen = frontier;
    let mut d = 0u8;
    while frontier != 0 {
        let mut next = 0u64;
        for u in Bits(frontier) {
            next |= rows[u] & mask & !seen;
        }
        d += 1;
        for v in Bits(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Enumerates simple cycles with exactly `len` vertices inside `mask`, in
/// canonical order (root = minimum vertex, second vertex < last vertex,
/// sequences lexicographic). Stops early when `f` returns `true`; the return
/// value says whether enumeration was stopped.
pub(crate) fn for_each_cycle_with_len(
    rows: &[u64],
    mask: u64,
    len: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if len < 3 || (mask.count_ones() as usize) < len {
        return false;
    }
    let roots: Vec<usize> = Bits(mask).collect();
    for (ri, &r) in roots.iter().enumerate() {
        if roots.len() - ri < len {
            break;
        }
        let allowed = mask & !(bit(r) - 1);
        let dist = bfs_dist(rows, r, allowed);
        let mut path = vec![r];
        let mut used = bit(r);
        if dfs(rows, allowed, &dist, r, len, &mut path, &mut used, f) {
            return true;
        }
    }
    return false;

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        rows: &[u64],
        allowed: u64,
        dist: &[u8; 64],
        root: usize,
        len: usize,
        path: &mut Vec<usize>,
        used: &mut u64,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        let depth = path.len();
        for v in Bits(rows[last] & allowed & !*used) {
            if dist[v] as usize > len - depth {
                continue;
            }
            if depth == len - 1 {
                if rows[v] & bit(root) != 0 && path[1] < v {
                    path.push(v);
                    let stop = f(path);
                    path.pop();
                    if stop {
                        return true;
                    }
                }
            } else {
                path.push(v);
                *used |= bit(v);
                let stop = dfs(rows, allowed, dist, root, len, path, used, f);
                *used &= !bit(v);
                path.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

/// All chords of the cycle `cyc`: host edges joining nonconsecutive cycle
/// vertices, as sorted pairs in ascending order.
pub(crate) fn chords_of(rows: &[u64], cyc: &[usize]) -> Vec<(usize, usize)> {
    let len = cyc.len();
    let mut out = Vec::new();
    for i in 0..len {
        for j in i + 2..len {
            if i == 0 && j == len - 1 {
                continue;
            }
            if rows[cyc[i]] & bit(cyc[j]) != 0 {
                let (a, b) = if cyc[i] < cyc[j] { (cyc[i], cyc[j]) } else { (cyc[j], cyc[i]) };
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// A cycle sequence together with its chord list.
pub(crate) type CycleWithChords = (Vec<usize>, Vec<(usize, usize)>);

/// Minimum-length chorded cycle inside `mask`, shortest-first canonical
/// enumeration. Returns the cycle sequence and all of its chords.
pub(crate) fn min_chorded_cycle(rows: &[u64], mask: u64, max_len: Option<usize>) -> Option<CycleWithChords> {
    let hi = max_len.unwrap_or(usize::MAX).min(mask.count_ones() as usize);
    for len in 4..=hi.max(3) {
        if len > mask.count_ones() as usize {
            break;
        }
        let mut found: Option<CycleWithChords> = None;
        for_each_cycle_with_len(rows, mask, len, &mut |cyc| {
            let chords = chords_of(rows, cyc);
            if chords.is_empty() {
                false
            } else {
                found = Some((cyc.to_vec(), chords));
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// A chorded cycle in compact form: canonical sequence, vertex mask, chords.
#[derive(Clone, Debug)]
pub(crate) struct CycleLite {
    pub seq: Vec<usize>,
    pub vset: u64,
    pub chords: Vec<(usize, usize)>,
}

impl CycleLite {
    /// Deterministic system-building key: sorted vertex set first, then the
    /// canonical sequence.
    pub fn key(&self) -> (Vec<usize>, Vec<usize>) {
        let mut vs: Vec<usize> = Bits(self.vset).collect();
        vs.sort_unstable();
        (vs, self.seq.clone())
    }
}

/// All chorded cycles inside `mask` with `4 <= |V| <= max_len`, sorted by
/// [`CycleLite::key`]. `budget` is decremented per cycle visited; exhausting
/// it aborts with `None`.
pub(crate) fn all_chorded_cycles(
    rows: &[u64],
    mask: u64,
    max_len: usize,
    budget: &mut u64,
) -> Option<Vec<CycleLite>> {
    let mut out = Vec::new();
    let hi = max_len.min(mask.count_ones() as usize);
    let mut dead = false;
    for len in 4..=hi.max(3) {
        for_each_cycle_with_len(rows, mask, len, &mut |cyc| {
            if *budget == 0 {
                dead = true;
                return true;
            }
            *budget -= 1;
            let chords = chords_of(rows, cyc);
            if !chords.is_empty() {
                let vset = cyc.iter().fold(0u64, |m, &v| m | bit(v));
                out.push(CycleLite { seq: cyc.to_vec(), vset, chords });
            }
            false
        });
        if dead {
            return None;
        }
    }
    out.sort_by_key(|a| a.key());
    Some(out)
}

/// Longest-path length (vertex count) inside `mask` via the subset DP.
/// Caller must keep `popcount(mask) <= 20` or so.
pub(crate) fn longest_path_vertices(rows: &[u64], mask: u64) -> usize {
    let verts: Vec<usize> = Bits(mask).collect();
    let k = verts.len();
    if k == 0 {
        return 0;
    }
    let adj = relabel(rows, &verts);
    let mut reach = vec![0u32; 1 << k];
    for i in 0..k {
        reach[1 << i] = 1 << i;
    }
    let mut best = 1usize;
    for m in 1u32..(1 << k) as u32 {
        let r = reach[m as usize];
        if r == 0 {
            continue;
        }
        let pc = m.count_ones() as usize;
        if pc > best {
            best = pc;
        }
        for last in Bits(r as u64) {
            for v in Bits((adj[last] & !m) as u64) {
                reach[(m | 1 << v) as usize] |= 1 << v;
            }
        }
    }
    best
}

pub(crate) fn has_ham_path(rows: &[u64], mask: u64) -> bool {
    longest_path_vertices(rows, mask) == mask.count_ones() as usize
}

/// Lexicographically least maximum-length path inside `mask`, as original
/// vertex ids.
pub(crate) fn longest_path_lex(rows: &[u64], mask: u64) -> Vec<usize> {
    let target = longest_path_vertices(rows, mask);
    if target == 0 {
        return Vec::new();
    }
    let mut path = Vec::with_capacity(target);
    for s in Bits(mask) {
        path.push(s);
        if extend(rows, mask, target, s, bit(s), &mut path) {
            return path;
        }
        path.pop();
    }
    unreachable!("DP-certified longest path must be reconstructible");

    fn extend(rows: &[u64], mask: u64, target: usize, last: usize, used: u64, path: &mut Vec<usize>) -> bool {
        if path.len() == target {
            return true;
        }
        let rest = mask & !used;
        // The remainder of the path must live in vertices reachable from `last`.
        let reach = reach_from(rows, last, rest | bit(last)) & rest;
        if (reach.count_ones() as usize) < target - path.len() {
            return false;
        }
        for v in Bits(rows[last] & rest) {
            path.push(v);
            if extend(rows, mask, target, v, used | bit(v), path) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Lexicographically least maximum-length cycle inside `mask`, if any.
/// Caller keeps `popcount(mask) <= 20` or so.
pub(crate) fn longest_cycle_lex(rows: &[u64], mask: u64) -> Option<Vec<usize>> {
    let verts: Vec<usize> = Bits(mask).collect();
    let k = verts.len();
    if k < 3 {
        return None;
    }
    let adj = relabel(rows, &verts);
    // Paths start at the minimum vertex of their support mask.
    let mut reach = vec![0u32; 1 << k];
    for i in 0..k {
        reach[1 << i] = 1 << i;
    }
    let mut best = 0usize;
    for m in 1u32..(1 << k) as u32 {
        let r = reach[m as usize];
        if r == 0 {
            continue;
        }
        let root = m.trailing_zeros() as usize;
        let pc = m.count_ones() as usize;
        for last in Bits(r as u64) {
            if pc >= 3 && pc > best && adj[last] >> root & 1 == 1 {
                best = pc;
            }
            let above_root = if root + 1 >= 32 { 0 } else { !0u32 << (root + 1) };
            for v in Bits((adj[last] & !m & above_root) as u64) {
                reach[(m | 1 << v) as usize] |= 1 << v;
            }
        }
    }
    if best == 0 {
        return None;
    }
    let mut found = None;
    for_each_cycle_with_len(rows, mask, best, &mut |cyc| {
        found = Some(cyc.to_vec());
        true
    });
    Some(found.expect("DP-certified longest cycle must be enumerable"))
}

fn relabel(rows: &[u64], verts: &[usize]) -> Vec<u32> {
    let mut pos = [usize::MAX; 64];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    verts
        .iter()
        .map(|&v| {
            let mut a = 0u32;
            for u in Bits(rows[v]) {
                if pos[u] != usize::MAX {
                    a |= 1 << pos[u];
                }
            }
            a
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn rows(g: &Graph) -> Vec<u64> {
        g.mask_rows().unwrap()
    }

    fn full(g: &Graph) -> u64 {
        if g.n() == 64 {
            !0
        } else {
            (1u64 << g.n()) - 1
        }
    }

    #[test]
    fn connectivity_and_components() {
        let g = Graph::path(4).disjoint_union(&Graph::complete(3));
        let r = rows(&g);
        assert!(!is_connected_mask(&r, full(&g)));
        let comps = components(&r, full(&g));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].count_ones(), 4);
        assert_eq!(comps[1].count_ones(), 3);
        assert!(is_two_connected_mask(&rows(&Graph::cycle(5).unwrap()), 0b11111));
        assert!(!is_two_connected_mask(&rows(&Graph::path(4)), 0b1111));
    }

    #[test]
    fn cycle_enumeration_canonical() {
        let g = Graph::complete(4);
        let r = rows(&g);
        let mut cycles = Vec::new();
        for_each_cycle_with_len(&r, full(&g), 3, &mut |c| {
            cycles.push(c.to_vec());
            false
        });
        assert_eq!(cycles, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]);
        let mut count4 = 0;
        for_each_cycle_with_len(&r, full(&g), 4, &mut |_| {
            count4 += 1;
            false
        });
        assert_eq!(count4, 3);
    }

    #[test]
    fn min_chorded() {
        let k4 = Graph::complete(4);
        let (cyc, chords) = min_chorded_cycle(&rows(&k4), full(&k4), None).unwrap();
        assert_eq!(cyc, vec![0, 1, 2, 3]);
        assert_eq!(chords, vec![(0, 2), (1, 3)]);
        let c7 = Graph::cycle(7).unwrap();
        assert!(min_chorded_cycle(&rows(&c7), full(&c7), None).is_none());
    }

    #[test]
    fn longest_path_on_small_graphs() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(longest_path_vertices(&rows(&c5), full(&c5)), 5);
        assert_eq!(longest_path_lex(&rows(&c5), full(&c5)), vec![0, 1, 2, 3, 4]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(longest_path_vertices(&rows(&star), full(&star)), 3);
        assert_eq!(longest_path_lex(&rows(&star), full(&star)), vec![1, 0, 2]);
    }

    #[test]
    fn longest_cycle_on_small_graphs() {
        let mut g = Graph::cycle(6).unwrap();
        g.add_edge(0, 2);
        let r = rows(&g);
        assert_eq!(longest_cycle_lex(&r, full(&g)).unwrap().len(), 6);
        let p = Graph::path(5);
        assert!(longest_cycle_lex(&rows(&p), full(&p)).is_none());
    }

    #[test]
    fn bfs_path_deterministic() {
        let g = Graph::cycle(6).unwrap();
        let r = rows(&g);
        let p = bfs_path_to_targets(&r, 0, full(&g), bit(3)).unwrap();
        assert_eq!(p, vec![0, 1, 2, 3]);
    }
}
