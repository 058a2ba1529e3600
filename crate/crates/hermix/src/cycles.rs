//! Cycle enumeration on the underlying graph and the four-way weight
//! classification of mixed cycles.
//!
//! The weight of a mixed cycle is the product of matrix entries along one
//! traversal; reversing the traversal conjugates it. A cycle is positive,
//! negative, semi-positive or semi-negative according to whether that weight
//! is 1, −1, in {ω, ω̄} or in {−ω, −ω̄}.

use std::fmt;

use crate::core::{MixedGraph, SimpleGraph, T6};
use crate::nmatrix::charpoly_of;
use crate::{Error, Result};

/// A cycle of the underlying graph in canonical form: smallest vertex first,
/// direction chosen so the second vertex is smaller than the last.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleDescriptor {
    vertices: Vec<usize>,
}

impl CycleDescriptor {
    /// Canonicalizes an arbitrary rotation/reflection of a cycle sequence.
    pub fn new(seq: &[usize]) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::Usage("cycles have length at least 3".into()));
        }
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != seq.len() {
            return Err(Error::Usage("cycle has repeated vertices".into()));
        }
        let k = seq.len();
        let start = (0..k).min_by_key(|&i| seq[i]).expect("nonempty");
        let fwd: Vec<usize> = (0..k).map(|i| seq[(start + i) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|i| seq[(start + k - i) % k]).collect();
        let vertices = if fwd[1] < bwd[1] { fwd } else { bwd };
        Ok(CycleDescriptor { vertices })
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

    /// Consecutive pairs including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

impl fmt::Display for CycleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Weight class of a mixed cycle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleClass {
    Positive,
    Negative,
    SemiPositive,
    SemiNegative,
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CycleClass::Positive => "Positive",
            CycleClass::Negative => "Negative",
            CycleClass::SemiPositive => "SemiPositive",
            CycleClass::SemiNegative => "SemiNegative",
        };
        write!(f, "{s}")
    }
}

/// Every cycle of length 3..=max_len, each exactly once in canonical form.
/// Rooted DFS anchored at the smallest vertex of each cycle.
pub fn enumerate_cycles(g: &SimpleGraph, max_len: usize) -> Vec<CycleDescriptor> {
    let n = g.n();
    let cap = max_len.min(n);
    let mut out = Vec::new();
    if cap < 3 {
        return out;
    }
    let mut path: Vec<usize> = Vec::with_capacity(cap);
    for root in 0..n {
        path.clear();
        path.push(root);
        let mut visited = 0u64;
        visited |= 1 << root;
        dfs(g, root, root, &mut path, &mut visited, cap, &mut out);
    }
    out
}

fn dfs(
    g: &SimpleGraph,
    root: usize,
    cur: usize,
    path: &mut Vec<usize>,
    visited: &mut u64,
    cap: usize,
    out: &mut Vec<CycleDescriptor>,
) {
    for next in g.neighbors(cur) {
        if next == root {
            if path.len() >= 3 && path[1] < path[path.len() - 1] {
                out.push(CycleDescriptor {
                    vertices: path.clone(),
                });
            }
            continue;
        }
        // Only vertices above the root so each cycle is anchored once.
        if next < root || *visited >> next & 1 == 1 || path.len() == cap {
            continue;
        }
        *visited |= 1 << next;
        path.push(next);
        dfs(g, root, next, path, visited, cap, out);
        path.pop();
        *visited &= !(1 << next);
    }
}

/// Product of matrix entries along the canonical direction of the cycle.
pub fn cycle_weight(m: &MixedGraph, c: &CycleDescriptor) -> Result<T6> {
    let mut exp: i64 = 0;
    for (u, v) in c.edges() {
        let g = m
            .gain(u, v)
            .ok_or_else(|| Error::Usage(format!("({u},{v}) is not an edge of the graph")))?;
        exp += g.exponent() as i64;
    }
    Ok(T6::new(exp))
}

/// Class from weight: 1 ↦ Positive, −1 ↦ Negative, {ω, ω̄} ↦ SemiPositive,
/// {−ω, −ω̄} ↦ SemiNegative.
pub fn classify_cycle(w: T6) -> CycleClass {
    match w.exponent() {
        0 => CycleClass::Positive,
        3 => CycleClass::Negative,
        1 | 5 => CycleClass::SemiPositive,
        2 | 4 => CycleClass::SemiNegative,
        _ => unreachable!(),
    }
}

/// Weight class of a cycle inside a mixed graph.
pub fn classify_in(m: &MixedGraph, c: &CycleDescriptor) -> Result<CycleClass> {
    Ok(classify_cycle(cycle_weight(m, c)?))
}

/// Whether the cycle has no chord in g.
pub fn is_chordless(g: &SimpleGraph, c: &CycleDescriptor) -> bool {
    let vs = c.vertices();
    let k = vs.len();
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if !consecutive && g.has_edge(vs[i], vs[j]) {
                return false;
            }
        }
    }
    true
}

/// Report line in the external format:
/// "cycle: v0 v1 ... class=SemiNegative weight=w^2".
pub fn cycle_report_line(m: &MixedGraph, c: &CycleDescriptor) -> Result<String> {
    let w = cycle_weight(m, c)?;
    Ok(format!("cycle: {} class={} weight={}", c, classify_cycle(w), w))
}

/// Outcome of the real-part cycle-weight comparison.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightComparison {
    /// Different underlying graphs; the sufficient condition does not apply.
    UnderlyingMismatch,
    /// Some cycle has different real weight parts in the two graphs.
    Mismatch(CycleDescriptor),
    /// Every cycle's weight has equal real part, which forces cospectrality.
    RealPartsAgree,
}

impl WeightComparison {
    pub fn holds(&self) -> bool {
        matches!(self, WeightComparison::RealPartsAgree)
    }
}

/// Sufficient condition for cospectrality: two mixed graphs on the same
/// underlying graph whose cycles all agree in the real part of their weight
/// are cospectral. When the condition holds, equality of the exact
/// characteristic polynomials is asserted (the implication is checked, not
/// its converse).
pub fn cospectral_by_real_weights(m1: &MixedGraph, m2: &MixedGraph) -> Result<WeightComparison> {
    if m1.underlying() != m2.underlying() {
        return Ok(WeightComparison::UnderlyingMismatch);
    }
    let g = m1.underlying();
    for c in enumerate_cycles(&g, g.n()) {
        // Real parts 1, −1, 1/2, −1/2 are distinct across the four classes,
        // so comparing classes compares real parts.
        if classify_in(m1, &c)? != classify_in(m2, &c)? {
            return Ok(WeightComparison::Mismatch(c));
        }
    }
    assert_eq!(
        charpoly_of(m1)?,
        charpoly_of(m2)?,
        "matching real cycle weights must force equal characteristic polynomials"
    );
    Ok(WeightComparison::RealPartsAgree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::parse_graph;

    fn k4() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Brute-force oracle: a vertex subset spans a cycle count independent of
    /// the DFS route by direct adjacency checks over all cyclic orders.
    fn count_cycles_brute(g: &SimpleGraph, len: usize) -> usize {
        let n = g.n();
        let mut count = 0;
        let mut subset: Vec<usize> = Vec::new();
        fn rec(
            g: &SimpleGraph,
            start: usize,
            subset: &mut Vec<usize>,
            len: usize,
            count: &mut usize,
        ) {
            if subset.len() == len {
                *count += distinct_hamiltonian_cycles(g, subset);
                return;
            }
            let lo = subset.last().map(|&x| x + 1).unwrap_or(start);
            for v in lo..g.n() {
                subset.push(v);
                rec(g, start, subset, len, count);
                subset.pop();
            }
        }
        fn distinct_hamiltonian_cycles(g: &SimpleGraph, vs: &[usize]) -> usize {
            // Count cyclic orders of vs forming a cycle, up to rotation and
            // reflection, by fixing vs[0] first.
            let k = vs.len();
            let mut perm: Vec<usize> = (1..k).collect();
            let mut total = 0;
            permute(&mut perm, 0, &mut |p: &[usize]| {
                if p[0] > p[k - 2] {
                    return;
                }
                let order: Vec<usize> =
                    std::iter::once(vs[0]).chain(p.iter().map(|&i| vs[i])).collect();
                let ok = (0..k).all(|i| g.has_edge(order[i], order[(i + 1) % k]));
                if ok {
                    total += 1;
                }
            });
            fn permute(xs: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
                if k == xs.len() {
                    f(xs);
                    return;
                }
                for i in k..xs.len() {
                    xs.swap(k, i);
                    permute(xs, k + 1, f);
                    xs.swap(k, i);
                }
            }
            total
        }
        rec(g, 0, &mut subset, len, &mut count);
        let _ = n;
        count
    }

    #[test]
    fn k4_has_seven_cycles() {
        let g = k4();
        let cycles = enumerate_cycles(&g, 4);
        let triangles = cycles.iter().filter(|c| c.len() == 3).count();
        let quads = cycles.iter().filter(|c| c.len() == 4).count();
        assert_eq!((triangles, quads), (4, 3));
        assert_eq!(cycles.len(), 7);
        assert_eq!(count_cycles_brute(&g, 3), 4);
        assert_eq!(count_cycles_brute(&g, 4), 3);
    }

    #[test]
    fn trees_and_single_cycles() {
        let tree = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(enumerate_cycles(&tree, 5).is_empty());

        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let cycles = enumerate_cycles(&c5, 5);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2, 3, 4]);
        assert!(is_chordless(&c5, &cycles[0]));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let c = CycleDescriptor::new(&[3, 1, 2, 4]).unwrap();
        for rot in 0..4 {
            let seq: Vec<usize> = (0..4).map(|i| c.vertices()[(i + rot) % 4]).collect();
            assert_eq!(CycleDescriptor::new(&seq).unwrap(), c);
            let mut rev = seq.clone();
            rev.reverse();
            assert_eq!(CycleDescriptor::new(&rev).unwrap(), c);
        }
        assert!(CycleDescriptor::new(&[0, 1]).is_err());
        assert!(CycleDescriptor::new(&[0, 1, 1]).is_err());
    }

    #[test]
    fn weights_and_classes() {
        let und = parse_graph("4 4\n0 1 U\n1 2 U\n2 3 U\n3 0 U\n").unwrap();
        let c = CycleDescriptor::new(&[0, 1, 2, 3]).unwrap();
        assert_eq!(cycle_weight(&und, &c).unwrap(), T6::ONE);
        assert_eq!(classify_in(&und, &c).unwrap(), CycleClass::Positive);

        let directed = parse_graph("3 3\n0 1 F\n1 2 F\n2 0 F\n").unwrap();
        let t = CycleDescriptor::new(&[0, 1, 2]).unwrap();
        assert_eq!(cycle_weight(&directed, &t).unwrap(), T6::MINUS_ONE);
        assert_eq!(classify_in(&directed, &t).unwrap(), CycleClass::Negative);

        let semi = parse_graph("4 4\n0 1 F\n1 2 U\n2 3 U\n3 0 U\n").unwrap();
        assert_eq!(classify_in(&semi, &c).unwrap(), CycleClass::SemiPositive);

        assert_eq!(classify_cycle(T6::MINUS_OMEGA_BAR), CycleClass::SemiNegative);
        assert_eq!(classify_cycle(T6::OMEGA_BAR), CycleClass::SemiPositive);
        assert_eq!(classify_cycle(T6::ONE), CycleClass::Positive);

        assert_eq!(
            cycle_report_line(&directed, &t).unwrap(),
            "cycle: 0 1 2 class=Negative weight=w^3"
        );
    }

    #[test]
    fn reversal_conjugates_weight() {
        let m = parse_graph("4 5\n0 1 F\n1 2 U\n2 3 F\n3 0 U\n0 2 F\n").unwrap();
        let g = m.underlying();
        for c in enumerate_cycles(&g, 4) {
            let w = cycle_weight(&m, &c).unwrap();
            let mut rev: Vec<usize> = c.vertices().to_vec();
            rev.reverse();
            // Walk the reversed traversal directly.
            let mut exp = 0i64;
            for i in 0..rev.len() {
                let (u, v) = (rev[i], rev[(i + 1) % rev.len()]);
                exp += m.gain(u, v).unwrap().exponent() as i64;
            }
            assert_eq!(T6::new(exp), w.conj());
        }
    }

    #[test]
    fn real_weight_condition_sound_on_small_sweeps() {
        // Exhaustively over all orientation pairs of C3, C4, C5 and K4: the
        // equal-real-parts condition never fires without the characteristic
        // polynomials agreeing (the implication is asserted inside the call).
        let graphs = [
            SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
            SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
            k4(),
        ];
        for g in graphs {
            let all: Vec<MixedGraph> = crate::harness::enumerate_orientations(&g)
                .unwrap()
                .collect();
            let mut fired = 0u32;
            for a in &all {
                for b in &all {
                    if cospectral_by_real_weights(a, b).unwrap().holds() {
                        fired += 1;
                    }
                }
            }
            assert!(fired >= all.len() as u32, "reflexive cases must fire");
        }
    }

    #[test]
    fn real_weight_cospectrality() {
        let m = parse_graph("4 5\n0 1 F\n1 2 U\n2 3 F\n3 0 U\n0 2 F\n").unwrap();
        assert!(cospectral_by_real_weights(&m, &m.converse())
            .unwrap()
            .holds());

        // Mixed forests: no cycles, vacuously cospectral.
        let t1 = parse_graph("4 3\n0 1 F\n1 2 B\n2 3 U\n").unwrap();
        let t2 = parse_graph("4 3\n0 1 U\n1 2 U\n2 3 F\n").unwrap();
        assert!(cospectral_by_real_weights(&t1, &t2).unwrap().holds());

        // Positive vs negative quadrangle: real parts 1 vs −1.
        let pos = parse_graph("4 4\n0 1 U\n1 2 U\n2 3 U\n3 0 U\n").unwrap();
        let neg = parse_graph("4 4\n0 1 F\n1 2 F\n2 3 F\n3 0 U\n").unwrap();
        match cospectral_by_real_weights(&pos, &neg).unwrap() {
            WeightComparison::Mismatch(_) => {}
            other => panic!("expected mismatch, got {other:?}"),
        }

        let k1 = parse_graph("1 0\n").unwrap();
        assert_eq!(
            cospectral_by_real_weights(&pos, &k1).unwrap(),
            WeightComparison::UnderlyingMismatch
        );
    }
}
