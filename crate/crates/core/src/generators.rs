//! Extremal constructions and seeded random instances.
//!
//! Randomness comes from a self-contained xorshift64* generator (Marsaglia
//! shifts 12/25/27, Vigna's multiplier 0x2545F4914F6CDD1D) so fixtures are
//! reproducible bit-for-bit across platforms and reimplementations.

use crate::error::{Error, Result};
use crate::graph::{delta_m, DegreeValue, Graph};

/// xorshift64*: `s ^= s>>12; s ^= s<<25; s ^= s>>27; return s * 0x2545F4914F6CDD1D`.
/// A zero seed is replaced by the golden-ratio constant 0x9E3779B97F4A7C15.
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        XorShift64Star { state: if seed == 0 { 0x9E37_79B9_7F4A_7C15 } else { seed } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut s = self.state;
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        self.state = s;
        s.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform-ish value in `0..bound` by modulo (bias is irrelevant here and
    /// keeps cross-language ports trivial). `bound` must be nonzero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Seeded Erdős–Rényi-style graph: each edge present with probability
/// `density_percent`/100. Deterministic per `(n, density_percent, seed)`.
pub fn random_graph(n: usize, density_percent: usize, seed: u64) -> Graph {
    let mut rng = XorShift64Star::new(seed ^ (n as u64).wrapping_mul(0x9E37_79B9) ^ (density_percent as u64) << 32);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_below(100) < density_percent as u64 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// The first extremal family: the join of `H` and the empty graph of order 2,
/// where `H` is `K_{2s+1} ⊔ K_{2s-3}` for even `s` and `K_{2s-1} ⊔ K_{2s-1}`
/// otherwise. Order `4s`, and `δ₂ = 4s-2`; it packs at most `s-1` disjoint
/// chorded cycles.
///
/// Vertex order: first clique, second clique, then the two join vertices.
pub fn extremal_g1(s: usize) -> Result<Graph> {
    if s < 2 {
        return Err(Error::InvalidS(format!("extremal_g1 requires s >= 2, got {s}")));
    }
    let (a, b) = if s.is_multiple_of(2) { (2 * s + 1, 2 * s - 3) } else { (2 * s - 1, 2 * s - 1) };
    let h = Graph::complete(a).disjoint_union(&Graph::complete(b));
    let g = h.join(&Graph::empty(2));
    debug_assert_eq!(g.n(), 4 * s);
    if delta_m(&g, 2)? != DegreeValue::Finite(4 * s - 2) {
        return Err(Error::InternalInvariant(format!("extremal_g1({s}): delta_2 != 4s-2")));
    }
    Ok(g)
}

/// The second extremal family: `K_{4s}` plus one new vertex adjacent to both
/// ends of the edge `{0, 1}`. Order `4s+1`, `δ₂ = 4s-1`, and it packs `s`
/// disjoint chorded cycles.
pub fn extremal_g2(s: usize) -> Result<Graph> {
    if s < 1 {
        return Err(Error::InvalidS(format!("extremal_g2 requires s >= 1, got {s}")));
    }
    let n = 4 * s;
    let mut g = Graph::complete(n).disjoint_union(&Graph::empty(1));
    g.add_edge(n, 0);
    g.add_edge(n, 1);
    if delta_m(&g, 2)? != DegreeValue::Finite(4 * s - 1) {
        return Err(Error::InternalInvariant(format!("extremal_g2({s}): delta_2 != 4s-1")));
    }
    Ok(g)
}

/// A seeded graph with `δ₂ >= t`: random edges, then repair by adding edges
/// incident to violating pairs until the bound holds. When `t > n-2` only
/// the complete graph qualifies (`δ₂` infinite), which is returned directly.
pub fn random_delta2_graph(n: usize, t: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::PreconditionViolated(format!("random_delta2_graph requires n >= 2, got {n}")));
    }
    if t > n - 2 {
        return Ok(Graph::complete(n));
    }
    let mut rng = XorShift64Star::new(seed);
    let density = 20 + rng.next_below(61) as usize; // 20..=80 percent
    let mut g = random_graph(n, density, rng.next_u64());
    loop {
        let Some((u, v)) = first_violating_pair(&g, t) else {
            return Ok(g);
        };
        // Any missing edge at u or v either enlarges the union or removes
        // the pair; pick one at random, deterministically per seed.
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for w in 0..n {
            if w != u && !g.has_edge(u, w) {
                candidates.push((u.min(w), u.max(w)));
            }
            if w != v && !g.has_edge(v, w) {
                candidates.push((v.min(w), v.max(w)));
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let (a, b) = candidates[rng.next_below(candidates.len() as u64) as usize];
        g.add_edge(a, b);
    }
}

fn first_violating_pair(g: &Graph, t: usize) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                let union = g.neighborhood(u).union(&g.neighborhood(v)).len();
                if union < t {
                    return Some((u, v));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::delta_m;

    #[test]
    fn g1_small_cases() {
        let g = extremal_g1(2).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(delta_m(&g, 2).unwrap(), DegreeValue::Finite(6));

        let g = extremal_g1(3).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(delta_m(&g, 2).unwrap(), DegreeValue::Finite(10));

        assert!(matches!(extremal_g1(1), Err(Error::InvalidS(_))));
    }

    #[test]
    fn g2_small_cases() {
        let g = extremal_g2(1).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(delta_m(&g, 2).unwrap(), DegreeValue::Finite(3));

        let g = extremal_g2(2).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(delta_m(&g, 2).unwrap(), DegreeValue::Finite(7));

        assert!(matches!(extremal_g2(0), Err(Error::InvalidS(_))));
    }

    #[test]
    fn g1_order_is_4s_for_both_parities() {
        for s in 2..=8 {
            assert_eq!(extremal_g1(s).unwrap().n(), 4 * s);
        }
    }

    #[test]
    fn random_delta2_meets_bound_and_is_deterministic() {
        for seed in [1u64, 7, 42] {
            let g = random_delta2_graph(10, 8, seed).unwrap();
            assert!(delta_m(&g, 2).unwrap().at_least(8));
            let h = random_delta2_graph(10, 8, seed).unwrap();
            assert_eq!(g, h);
        }
        // t > n-2 forces the complete graph.
        assert!(random_delta2_graph(6, 5, 3).unwrap().is_complete());
    }

    #[test]
    fn xorshift_fixed_point_free_start() {
        let mut a = XorShift64Star::new(0);
        let mut b = XorShift64Star::new(0);
        assert_eq!(a.next_u64(), b.next_u64());
        assert_ne!(a.next_u64(), 0);
    }
}
