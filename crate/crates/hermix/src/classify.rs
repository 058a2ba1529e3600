//! Exact rank and nullity, the degree-bound extremal recognizer, the rank-2
//! and rank-3 structure theorems, and the catalogs of connected mixed graphs
//! with spectral radius below √2, √3 and 2.

use std::fmt;
use std::sync::OnceLock;

use crate::core::{Eisenstein, MixedGraph, SimpleGraph, T6};
use crate::cycles::{self, CycleClass};
use crate::harness;
use crate::nmatrix::{self, charpoly_of, multiplicity_at, CharPoly, QuadraticSurd};
use crate::switching::{self, SwitchingFunction};
use crate::{Error, Result};

// ===========================================================================
// Rank
// ===========================================================================

/// Rank and nullity of the adjacency matrix; they always sum to the order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankResult {
    pub rank: usize,
    pub nullity: usize,
}

/// Gaussian elimination over ℚ(ω) with exact pivots, cross-checked against
/// the multiplicity of the root 0 in the characteristic polynomial. A
/// disagreement would mean corrupted arithmetic and aborts.
pub fn rank_exact(m: &MixedGraph) -> RankResult {
    let n = m.n();
    let nm = nmatrix::build_nmatrix(m);
    let mut rows: Vec<Vec<Eisenstein>> = (0..n)
        .map(|s| (0..n).map(|t| nm.entry(s, t).clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for r in (rank + 1)..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&inv);
            for c in col..n {
                let t = factor.mul(&rows[rank][c]);
                rows[r][c] = rows[r][c].sub(&t);
            }
        }
        rank += 1;
    }
    let from_charpoly = n - charpoly_of(m)
        .expect("charpoly of a mixed graph")
        .multiplicity_of_zero();
    assert_eq!(
        rank, from_charpoly,
        "elimination rank disagrees with the characteristic polynomial"
    );
    RankResult {
        rank,
        nullity: n - rank,
    }
}

/// Deleting a pendant edge together with both endpoints preserves nullity.
pub fn pendant_reduction_check(m: &MixedGraph, u: usize, v: usize) -> Result<bool> {
    if !m.has_edge(u, v) {
        return Err(Error::Usage(format!("({u},{v}) is not an edge")));
    }
    if m.degree(u) != 1 && m.degree(v) != 1 {
        return Err(Error::Usage(format!("({u},{v}) is not a pendant edge")));
    }
    let reduced = m.delete_vertices(&[u, v]);
    Ok(rank_exact(m).nullity == rank_exact(&reduced).nullity)
}

// ===========================================================================
// Rank-2 and rank-3 recognizers
// ===========================================================================

/// Witnessed decomposition of a rank-2 mixed graph: switching equivalent to
/// an all-undirected complete bipartite graph plus isolated vertices.
#[derive(Clone, Debug)]
pub struct Rank2 {
    pub a: usize,
    pub b: usize,
    pub isolated: usize,
    pub witness: SwitchingFunction,
}

fn complete_bipartition(g: &SimpleGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    // 2-color by BFS, then demand completeness between the sides.
    let n = g.n();
    let mut color = vec![None; n];
    color[0] = Some(0u8);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let cu = color[u].expect("queued vertices are colored");
        for v in g.neighbors(u) {
            match color[v] {
                None => {
                    color[v] = Some(1 - cu);
                    queue.push_back(v);
                }
                Some(cv) if cv == cu => return None,
                _ => {}
            }
        }
    }
    let side_a: Vec<usize> = (0..n).filter(|&v| color[v] == Some(0)).collect();
    let side_b: Vec<usize> = (0..n).filter(|&v| color[v] == Some(1)).collect();
    for &x in &side_a {
        for &y in &side_b {
            if !g.has_edge(x, y) {
                return None;
            }
        }
    }
    Some((side_a, side_b))
}

/// Recognizes rank-2 mixed graphs: one nontrivial component whose underlying
/// graph is complete bipartite and all of whose cycle weights are 1, plus
/// isolated vertices. Returns sizes (a ≤ b), the isolated count, and a
/// switching witness onto the undirected graph.
pub fn rank2_recognize(m: &MixedGraph) -> Option<Rank2> {
    if rank_exact(m).rank != 2 {
        return None;
    }
    let comps = m.components();
    let nontrivial: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() > 1).collect();
    if nontrivial.len() != 1 {
        return None;
    }
    let comp = nontrivial[0];
    let sub = m.induced(comp);
    let (pa, pb) = complete_bipartition(&sub.underlying())?;
    let plain = MixedGraph::from_simple(&m.underlying());
    match switching::switching_equivalent(m, &plain) {
        switching::Equivalence::Equivalent { theta, .. } => {
            let (a, b) = (pa.len().min(pb.len()), pa.len().max(pb.len()));
            Some(Rank2 {
                a,
                b,
                isolated: m.n() - comp.len(),
                witness: theta,
            })
        }
        _ => None,
    }
}

/// Possible twin-reduction shapes of a connected rank-3 mixed graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rank3Tag {
    /// Twin reduction is a mixed triangle (any weight).
    Triangle,
    /// Twin reduction is a complete graph on 4 vertices whose three spanning
    /// quadrangles are two positive and one semi-negative.
    K4TwoPositiveOneSemiNegative,
}

impl fmt::Display for Rank3Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank3Tag::Triangle => write!(f, "triangle"),
            Rank3Tag::K4TwoPositiveOneSemiNegative => write!(f, "K4-ef"),
        }
    }
}

/// Recognizes connected rank-3 mixed graphs through their twin reduction.
pub fn rank3_recognize(m: &MixedGraph) -> Result<Option<Rank3Tag>> {
    if !m.is_connected() {
        return Err(Error::Usage("rank3_recognize expects a connected graph".into()));
    }
    if rank_exact(m).rank != 3 {
        return Ok(None);
    }
    let red = switching::twin_reduction(m).reduced;
    let g = red.underlying();
    if red.n() == 3 && g.m() == 3 {
        return Ok(Some(Rank3Tag::Triangle));
    }
    if red.n() == 4 && g.m() == 6 {
        let mut pos = 0;
        let mut semi_neg = 0;
        for c in cycles::enumerate_cycles(&g, 4) {
            if c.len() != 4 {
                continue;
            }
            match cycles::classify_in(&red, &c)? {
                CycleClass::Positive => pos += 1,
                CycleClass::SemiNegative => semi_neg += 1,
                _ => {}
            }
        }
        if pos == 2 && semi_neg == 1 {
            return Ok(Some(Rank3Tag::K4TwoPositiveOneSemiNegative));
        }
    }
    Ok(None)
}

// ===========================================================================
// Degree bound and extremal partitions
// ===========================================================================

/// Which of the two extremal structures is realized: the positive case has
/// eigenvalue +Δ (undirected edges inside parts, arcs stepping to the ω̄
/// part); the negative case has eigenvalue −Δ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtremalMode {
    PositiveCase,
    NegativeCase,
}

/// Six-part 𝕋₆ labeling certifying spectral radius = maximum degree.
#[derive(Clone, Debug)]
pub struct ExtremalPartition {
    pub labels: Vec<T6>,
    pub mode: ExtremalMode,
}

impl ExtremalPartition {
    /// Edge-by-edge verification of the structural constraints.
    pub fn verify(&self, m: &MixedGraph) -> bool {
        if self.labels.len() != m.n() {
            return false;
        }
        m.edges().iter().all(|e| {
            let ratio = self.labels[e.u].conj() * self.labels[e.v];
            match self.mode {
                ExtremalMode::PositiveCase => match e.gain {
                    T6::ONE => ratio == T6::ONE,
                    T6::OMEGA => ratio == T6::OMEGA_BAR,
                    T6::OMEGA_BAR => ratio == T6::OMEGA,
                    _ => false,
                },
                ExtremalMode::NegativeCase => match e.gain {
                    T6::ONE => ratio == T6::MINUS_ONE,
                    // −ω̄ = ω², −ω = ω⁴
                    T6::OMEGA => ratio == T6::MINUS_OMEGA_BAR,
                    T6::OMEGA_BAR => ratio == T6::MINUS_OMEGA,
                    _ => false,
                },
            }
        })
    }

    pub fn render(&self) -> String {
        let mode = match self.mode {
            ExtremalMode::PositiveCase => "i",
            ExtremalMode::NegativeCase => "ii",
        };
        let parts: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, t)| format!("v{v}={t}"))
            .collect();
        format!("extremal: mode={mode} parts={}", parts.join(" "))
    }
}

/// Outcome of the degree-bound check: the bound ρ ≤ Δ itself (decided
/// exactly), whether equality holds, and an extremal partition when it does
/// and the graph is connected.
#[derive(Clone, Debug)]
pub struct DeltaBoundReport {
    pub bound_holds: bool,
    pub equality: bool,
    pub extremal: Option<ExtremalPartition>,
}

fn propagate_labels(m: &MixedGraph, mode: ExtremalMode) -> Option<ExtremalPartition> {
    // Labels are forced along edges from any seed; propagation plus a final
    // verification decides existence for connected graphs.
    let n = m.n();
    let g = m.underlying();
    let mut labels: Vec<Option<T6>> = vec![None; n];
    labels[0] = Some(T6::ONE);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        let lu = labels[u].expect("queued vertices are labeled");
        for v in g.neighbors(u) {
            if labels[v].is_some() {
                continue;
            }
            let gain_uv = m.gain(u, v).expect("edge exists");
            let step = match (mode, gain_uv) {
                (ExtremalMode::PositiveCase, T6::ONE) => T6::ONE,
                (ExtremalMode::PositiveCase, T6::OMEGA) => T6::OMEGA_BAR,
                (ExtremalMode::PositiveCase, T6::OMEGA_BAR) => T6::OMEGA,
                (ExtremalMode::NegativeCase, T6::ONE) => T6::MINUS_ONE,
                (ExtremalMode::NegativeCase, T6::OMEGA) => T6::MINUS_OMEGA_BAR,
                (ExtremalMode::NegativeCase, T6::OMEGA_BAR) => T6::MINUS_OMEGA,
                _ => unreachable!("stored gains are mixed"),
            };
            labels[v] = Some(lu * step);
            queue.push_back(v);
        }
    }
    let labels: Vec<T6> = labels.into_iter().collect::<Option<_>>()?;
    let part = ExtremalPartition { labels, mode };
    part.verify(m).then_some(part)
}

/// Exact polynomial-level decision behind the degree bound: returns
/// (every root lies in [−Δ, Δ], some root equals ±Δ).
pub fn delta_bound_poly(p: &CharPoly, delta: usize) -> Result<(bool, bool)> {
    let n = p.degree();
    if delta == 0 {
        let all_zero = p.multiplicity_of_zero() == n;
        return Ok((all_zero, n > 0));
    }
    let hi = QuadraticSurd::from_integer(delta as i64);
    let lo = hi.neg();
    let mult_hi = multiplicity_at(p, &hi);
    let mult_lo = multiplicity_at(p, &lo);
    // Strictly-inside count plus boundary multiplicities must account for
    // every eigenvalue; that is exactly ρ ≤ Δ.
    let inside = nmatrix::count_roots_with_multiplicity_open(p, &lo, &hi)?;
    Ok((inside + mult_hi + mult_lo == n, mult_hi + mult_lo > 0))
}

/// Exact verification that ρ ≤ Δ, with the extremal partition search run
/// when equality holds on a connected graph.
pub fn delta_bound_report(m: &MixedGraph) -> Result<DeltaBoundReport> {
    let n = m.n();
    let delta = m.underlying().max_degree();
    if n == 0 {
        return Ok(DeltaBoundReport {
            bound_holds: true,
            equality: false,
            extremal: None,
        });
    }
    if delta == 0 {
        // Empty graphs: every eigenvalue is 0 = Δ.
        let extremal = m.is_connected().then(|| ExtremalPartition {
            labels: vec![T6::ONE; n],
            mode: ExtremalMode::PositiveCase,
        });
        return Ok(DeltaBoundReport {
            bound_holds: true,
            equality: true,
            extremal,
        });
    }
    let p = charpoly_of(m)?;
    let (bound_holds, equality) = delta_bound_poly(&p, delta)?;
    let extremal = if equality && m.is_connected() {
        extremal_partition_search(m)
    } else {
        None
    };
    Ok(DeltaBoundReport {
        bound_holds,
        equality,
        extremal,
    })
}

/// Looks for a six-part extremal labeling of a connected mixed graph. Labels
/// propagate from a single seed vertex (either mode), so the search is a
/// pair of linear passes with a final edge verification.
pub fn extremal_partition_search(m: &MixedGraph) -> Option<ExtremalPartition> {
    let n = m.n();
    let delta = m.underlying().max_degree();
    if delta == 0 {
        return Some(ExtremalPartition {
            labels: vec![T6::ONE; n],
            mode: ExtremalMode::PositiveCase,
        });
    }
    let regular = (0..n).all(|v| m.degree(v) == delta);
    if !regular {
        return None;
    }
    propagate_labels(m, ExtremalMode::PositiveCase)
        .or_else(|| propagate_labels(m, ExtremalMode::NegativeCase))
}

// ===========================================================================
// Named families
// ===========================================================================

/// Cycle gain pattern: no arc, one arc, two consecutive arcs, or three
/// consecutive arcs in the same direction, giving weight 1, ω, −ω̄, −1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleKind {
    Positive,
    SemiPositive,
    SemiNegative,
    Negative,
}

/// Parameterized constructors for the named families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyParams {
    Path { n: usize },
    YTree { a: usize, b: usize, c: usize },
    Cycle { n: usize, kind: CycleKind },
    /// Negative quadrangle with undirected paths of lengths a, b, c, d
    /// attached to its four corners.
    BoxGraph { a: usize, b: usize, c: usize, d: usize },
}

/// Deterministic construction of P_n, Y_{a,b,c}, the four cycle kinds, and
/// the box graphs.
pub fn build_family(p: &FamilyParams) -> Result<MixedGraph> {
    match *p {
        FamilyParams::Path { n } => {
            if n == 0 {
                return Err(Error::Usage("paths need at least one vertex".into()));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i, T6::ONE)).collect();
            MixedGraph::new(n, &edges)
        }
        FamilyParams::YTree { a, b, c } => {
            if a == 0 || b == 0 || c == 0 {
                return Err(Error::Usage("Y-tree legs must be nonempty".into()));
            }
            let mut edges = Vec::new();
            let mut next = 1usize;
            for len in [a, b, c] {
                let mut prev = 0usize;
                for _ in 0..len {
                    edges.push((prev, next, T6::ONE));
                    prev = next;
                    next += 1;
                }
            }
            MixedGraph::new(a + b + c + 1, &edges)
        }
        FamilyParams::Cycle { n, kind } => {
            if n < 3 {
                return Err(Error::Usage("cycles need at least 3 vertices".into()));
            }
            let arcs = match kind {
                CycleKind::Positive => 0,
                CycleKind::SemiPositive => 1,
                CycleKind::SemiNegative => 2,
                CycleKind::Negative => 3,
            };
            let edges: Vec<_> = (0..n)
                .map(|i| {
                    let gain = if i < arcs { T6::OMEGA } else { T6::ONE };
                    (i, (i + 1) % n, gain)
                })
                .collect();
            MixedGraph::new(n, &edges)
        }
        FamilyParams::BoxGraph { a, b, c, d } => {
            // Canonical negative quadrangle, then undirected tails.
            let mut edges = vec![
                (0, 1, T6::OMEGA),
                (1, 2, T6::OMEGA),
                (2, 3, T6::OMEGA),
                (3, 0, T6::ONE),
            ];
            let mut next = 4usize;
            for (corner, len) in [(0, a), (1, b), (2, c), (3, d)] {
                let mut prev = corner;
                for _ in 0..len {
                    edges.push((prev, next, T6::ONE));
                    prev = next;
                    next += 1;
                }
            }
            MixedGraph::new(a + b + c + d + 4, &edges)
        }
    }
}

// ===========================================================================
// Sporadic catalog graphs
// ===========================================================================

/// Explicit representatives of the sporadic graphs in the below-2 catalog
/// and of the obstruction graphs whose radii pin the reconstructions down.
/// Each is validated against its quoted spectral radius in the tests.
pub mod sporadic {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize, u8)]) -> MixedGraph {
        let list: Vec<(usize, usize, T6)> = edges
            .iter()
            .map(|&(u, v, e)| (u, v, T6::new(e as i64)))
            .collect();
        MixedGraph::new(n, &list).expect("catalog graphs are valid")
    }

    /// Triangle with one pendant vertex, triangle weight ω. ρ ≈ 2.0615.
    pub fn z1() -> MixedGraph {
        graph(4, &[(0, 1, 1), (1, 2, 0), (2, 0, 0), (0, 3, 0)])
    }

    /// Triangle with one pendant vertex, triangle weight −ω̄. ρ ≈ 2.0615.
    pub fn z2() -> MixedGraph {
        graph(4, &[(0, 1, 1), (1, 2, 1), (2, 0, 0), (0, 3, 0)])
    }

    /// Complete graph on 4 vertices with every triangle semi-positive (the
    /// transitive tournament pattern). ρ = 1 + √3 ≈ 2.732.
    pub fn q7() -> MixedGraph {
        graph(
            4,
            &[
                (0, 1, 1),
                (0, 2, 1),
                (0, 3, 1),
                (1, 2, 1),
                (1, 3, 1),
                (2, 3, 1),
            ],
        )
    }

    /// K4 with triangle weights (ω, ω, −ω̄, −ω̄): two semi-positive and two
    /// semi-negative triangles. ρ = √(3+√7) ≈ 2.376.
    pub fn q8() -> MixedGraph {
        graph(
            4,
            &[
                (0, 1, 1),
                (0, 2, 1),
                (0, 3, 0),
                (1, 2, 1),
                (1, 3, 0),
                (2, 3, 1),
            ],
        )
    }

    /// K4 with all four triangles semi-positive of weights (ω, ω, ω̄, ω̄);
    /// cospectral with q7. ρ ≈ 2.732.
    pub fn q9() -> MixedGraph {
        graph(
            4,
            &[
                (0, 1, 0),
                (0, 2, 0),
                (0, 3, 0),
                (1, 2, 1),
                (1, 3, 1),
                (2, 3, 5),
            ],
        )
    }

    /// Semi-negative quadrangle with one pendant vertex. ρ ≈ 1.902.
    pub fn q1_minus() -> MixedGraph {
        graph(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 0), (3, 0, 0), (0, 4, 0)])
    }

    /// Semi-negative quadrangle sharing the edge {0,1} with a negative
    /// quadrangle. ρ ≈ 1.950.
    pub fn q5_minus() -> MixedGraph {
        graph(
            6,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 0),
                (3, 0, 0),
                (0, 4, 5),
                (4, 5, 5),
                (1, 5, 0),
            ],
        )
    }

    /// Semi-negative quadrangle with a pendant path of length two. ρ ≈ 1.970.
    pub fn q7_minus() -> MixedGraph {
        graph(
            6,
            &[(0, 1, 1), (1, 2, 1), (2, 3, 0), (3, 0, 0), (0, 4, 0), (4, 5, 0)],
        )
    }

    /// Two semi-negative quadrangles sharing two consecutive edges (the
    /// underlying graph is K_{2,3}); all three quadrangles are semi-negative.
    /// ρ = √3.
    pub fn q15_minus() -> MixedGraph {
        graph(
            5,
            &[(0, 1, 1), (1, 2, 1), (2, 3, 0), (3, 0, 0), (2, 4, 1), (0, 4, 5)],
        )
    }

    /// q15_minus with one pendant vertex at a degree-2 corner. ρ ≈ 1.932.
    pub fn q17_minus() -> MixedGraph {
        graph(
            6,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 0),
                (3, 0, 0),
                (2, 4, 1),
                (0, 4, 5),
                (1, 5, 0),
            ],
        )
    }

    /// Negative hexagon with one pendant vertex. ρ ≈ 1.932.
    pub fn h1() -> MixedGraph {
        graph(
            7,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 0),
                (4, 5, 0),
                (5, 0, 0),
                (0, 6, 0),
            ],
        )
    }

    /// Negative hexagon with two pendant vertices at distance 3. ρ ≈ 1.932.
    pub fn h2() -> MixedGraph {
        graph(
            8,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 0),
                (4, 5, 0),
                (5, 0, 0),
                (0, 6, 0),
                (3, 7, 0),
            ],
        )
    }

    /// Directed hexagon with one undirected chord joining antipodal
    /// vertices; both quadrangles are negative. ρ = √3.
    pub fn q1_eq() -> MixedGraph {
        graph(
            6,
            &[
                (0, 1, 5),
                (1, 2, 5),
                (2, 3, 5),
                (3, 4, 5),
                (4, 5, 5),
                (0, 5, 1),
                (1, 4, 0),
            ],
        )
    }

    /// Switching-equivalent variant of q1_eq with three hexagon arcs and an
    /// undirected chord; q3_eq two-way-switches onto it at vertex 4, and the
    /// three-way switching with parts {1,2,3,4} / {5} / {0} carries it to
    /// q1_eq.
    pub fn q2_eq() -> MixedGraph {
        graph(
            6,
            &[
                (0, 1, 1),
                (1, 2, 5),
                (2, 3, 5),
                (3, 4, 5),
                (4, 5, 1),
                (0, 5, 5),
                (1, 4, 0),
            ],
        )
    }

    /// Variant of q1_eq with a directed chord. ρ = √3.
    pub fn q3_eq() -> MixedGraph {
        graph(
            6,
            &[
                (0, 1, 1),
                (1, 2, 5),
                (2, 3, 5),
                (3, 4, 0),
                (4, 5, 0),
                (0, 5, 5),
                (1, 4, 1),
            ],
        )
    }

    /// q1_eq with a pendant vertex at a degree-2 corner. ρ ≈ 1.902.
    pub fn q4_eq() -> MixedGraph {
        let mut edges = base_q1_eq();
        edges.push((0, 6, 0));
        graph(7, &edges)
    }

    /// q1_eq plus a vertex joined to the two neighbors of a chord endpoint,
    /// closing a third negative quadrangle. ρ = √3.
    pub fn q5_eq() -> MixedGraph {
        let mut edges = base_q1_eq();
        edges.push((0, 6, 1));
        edges.push((2, 6, 0));
        graph(7, &edges)
    }

    /// q5_eq with one pendant vertex. ρ ≈ 1.932.
    pub fn q6_eq() -> MixedGraph {
        let mut edges = base_q1_eq();
        edges.push((0, 6, 1));
        edges.push((2, 6, 0));
        edges.push((6, 7, 0));
        graph(8, &edges)
    }

    /// q4_eq with a second pendant vertex; ρ ≈ 1.956.
    pub fn q8_eq() -> MixedGraph {
        let mut edges = base_q1_eq();
        edges.push((0, 6, 0));
        edges.push((3, 7, 0));
        graph(8, &edges)
    }

    /// q1_eq with a pendant path of length two at a degree-2 corner;
    /// ρ ≈ 1.970.
    pub fn q9_eq() -> MixedGraph {
        let mut edges = base_q1_eq();
        edges.push((0, 6, 0));
        edges.push((6, 7, 0));
        graph(8, &edges)
    }

    /// q4_eq extended by an edge from the pendant closing a third negative
    /// quadrangle. ρ ≈ 1.902.
    pub fn q10_eq() -> MixedGraph {
        let mut edges = base_q1_eq();
        edges.push((0, 6, 0));
        edges.push((6, 7, 5));
        edges.push((5, 7, 1));
        graph(8, &edges)
    }

    /// Negative quadrangle and negative hexagon sharing one edge. ρ ≈ 1.956.
    pub fn q11_eq() -> MixedGraph {
        graph(
            8,
            &[
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (0, 3, 0),
                (1, 4, 1),
                (4, 5, 1),
                (5, 6, 0),
                (6, 7, 0),
                (0, 7, 0),
            ],
        )
    }

    fn base_q1_eq() -> Vec<(usize, usize, u8)> {
        vec![
            (0, 1, 5),
            (1, 2, 5),
            (2, 3, 5),
            (3, 4, 5),
            (4, 5, 5),
            (0, 5, 1),
            (1, 4, 0),
        ]
    }
}

// ===========================================================================
// Small-spectral-radius classification
// ===========================================================================

/// Exact radius verdict at a threshold √2, √3 or 2, with the catalog member
/// identified for connected graphs below the threshold.
#[derive(Clone, Debug)]
pub struct RadiusClass {
    pub alpha2: u32,
    pub below: bool,
    pub catalog_tag: Option<String>,
}

impl RadiusClass {
    pub fn render(&self) -> String {
        let thr = match self.alpha2 {
            2 => "sqrt(2)",
            3 => "sqrt(3)",
            _ => "2",
        };
        let verdict = if self.below { "yes" } else { "no" };
        match &self.catalog_tag {
            Some(tag) => format!("radius<{thr}: {verdict} tag={tag}"),
            None => format!("radius<{thr}: {verdict}"),
        }
    }
}

fn path_order(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    if !g.is_connected() || g.m() != n.saturating_sub(1) {
        return None;
    }
    if n == 1 {
        return Some(1);
    }
    let deg1 = (0..n).filter(|&v| g.degree(v) == 1).count();
    let ok = deg1 == 2 && (0..n).all(|v| g.degree(v) <= 2);
    ok.then_some(n)
}

fn cycle_order(g: &SimpleGraph) -> Option<usize> {
    (g.is_connected() && g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2)).then(|| g.n())
}

/// Leg lengths (sorted descending) of a tree with exactly one degree-3
/// vertex and no vertex of larger degree.
fn y_tree_legs(g: &SimpleGraph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    if !g.is_connected() || g.m() != n - 1 {
        return None;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    if centers.len() != 1 || (0..n).any(|v| g.degree(v) > 3) {
        return None;
    }
    let c = centers[0];
    let mut legs = Vec::new();
    for start in g.neighbors(c) {
        let mut len = 1;
        let mut prev = c;
        let mut cur = start;
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).find(|&x| x != prev).expect("degree 2");
            prev = cur;
            cur = next;
            len += 1;
        }
        if g.degree(cur) != 1 {
            return None;
        }
        legs.push(len);
    }
    legs.sort_unstable_by(|x, y| y.cmp(x));
    Some((legs[0], legs[1], legs[2]))
}

/// For a unicyclic graph whose cycle is a quadrangle: the lengths of the
/// pendant paths hanging off the four corners, in cyclic order, or None if
/// any attachment is not a bare path.
fn box_arms(m: &MixedGraph) -> Option<([usize; 4], cycles::CycleDescriptor)> {
    let g = m.underlying();
    let n = g.n();
    if !g.is_connected() || g.m() != n {
        return None;
    }
    let cycle = cycles::enumerate_cycles(&g, n).into_iter().next()?;
    if cycle.len() != 4 {
        return None;
    }
    let on_cycle: Vec<usize> = cycle.vertices().to_vec();
    let mut arms = [0usize; 4];
    let mut covered = 4usize;
    for (i, &corner) in on_cycle.iter().enumerate() {
        let off: Vec<usize> = g
            .neighbors(corner)
            .filter(|v| !on_cycle.contains(v))
            .collect();
        if off.is_empty() {
            continue;
        }
        if off.len() > 1 {
            return None;
        }
        let mut len = 1;
        let mut prev = corner;
        let mut cur = off[0];
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).find(|&x| x != prev)?;
            prev = cur;
            cur = next;
            len += 1;
        }
        if g.degree(cur) != 1 {
            return None;
        }
        arms[i] = len;
        covered += len;
    }
    (covered == n).then_some((arms, cycle))
}

/// Largest tuple over the dihedral symmetries of the quadrangle.
fn normalize_arms(arms: [usize; 4]) -> [usize; 4] {
    let mut best = [0usize; 4];
    for r in 0..4 {
        let rot = [arms[r], arms[(r + 1) % 4], arms[(r + 2) % 4], arms[(r + 3) % 4]];
        let refl = [rot[0], rot[3], rot[2], rot[1]];
        for cand in [rot, refl] {
            if cand > best {
                best = cand;
            }
        }
    }
    best
}

fn box_catalog_member(arms: [usize; 4]) -> bool {
    let a = normalize_arms(arms);
    if a[1] == 0 && a[3] == 0 {
        return true; // arms only at opposite corners
    }
    const SPORADIC: [[usize; 4]; 6] = [
        [3, 1, 0, 0],
        [2, 1, 1, 0],
        [2, 1, 0, 0],
        [1, 1, 1, 1],
        [1, 1, 1, 0],
        [1, 1, 0, 0],
    ];
    SPORADIC.contains(&a)
}

fn catalog_sporadics() -> &'static Vec<(String, MixedGraph)> {
    static CATALOG: OnceLock<Vec<(String, MixedGraph)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        vec![
            ("Q1-".into(), sporadic::q1_minus()),
            ("Q5-".into(), sporadic::q5_minus()),
            ("Q7-".into(), sporadic::q7_minus()),
            ("Q15-".into(), sporadic::q15_minus()),
            ("Q17-".into(), sporadic::q17_minus()),
            ("Q1=".into(), sporadic::q1_eq()),
            ("Q4=".into(), sporadic::q4_eq()),
            ("Q5=".into(), sporadic::q5_eq()),
            ("Q6=".into(), sporadic::q6_eq()),
            ("Q8=".into(), sporadic::q8_eq()),
            ("Q9=".into(), sporadic::q9_eq()),
            ("Q10=".into(), sporadic::q10_eq()),
            ("Q11=".into(), sporadic::q11_eq()),
            ("H1".into(), sporadic::h1()),
            ("H2".into(), sporadic::h2()),
        ]
    })
}

fn match_below_two(m: &MixedGraph) -> Result<Option<String>> {
    let g = m.underlying();
    if let Some(n) = path_order(&g) {
        return Ok(Some(format!("P{n}")));
    }
    if let Some((a, b, c)) = y_tree_legs(&g) {
        let admissible = c == 1 && (b == 1 || (b == 2 && (2..=4).contains(&a)));
        return Ok(admissible.then(|| format!("Y_{{{a},{b},{c}}}")));
    }
    if let Some(n) = cycle_order(&g) {
        let cycle = cycles::enumerate_cycles(&g, n)
            .into_iter()
            .next()
            .expect("a cycle graph contains its cycle");
        let class = cycles::classify_in(m, &cycle)?;
        return Ok(match class {
            CycleClass::SemiPositive => Some(format!("C{n}+")),
            CycleClass::SemiNegative => Some(format!("C{n}-")),
            CycleClass::Negative if n % 2 == 0 => Some(format!("C{n}=")),
            _ => None,
        });
    }
    if let Some((arms, cycle)) = box_arms(m) {
        if cycles::classify_in(m, &cycle)? == CycleClass::Negative && box_catalog_member(arms) {
            let a = normalize_arms(arms);
            // Confirm against the constructed family member.
            let reference = build_family(&FamilyParams::BoxGraph {
                a: a[0],
                b: a[1],
                c: a[2],
                d: a[3],
            })?;
            if harness::switching_equivalent_upto_iso(m, &reference) {
                return Ok(Some(format!("Box_{{{},{},{},{}}}", a[0], a[1], a[2], a[3])));
            }
        }
        // Quadrangle-based unicyclic graphs whose cycle is semi-negative
        // live in the sporadic list; fall through.
    }
    for (tag, reference) in catalog_sporadics() {
        if reference.n() != m.n()
            || reference.underlying().degree_sequence() != g.degree_sequence()
        {
            continue;
        }
        if harness::switching_equivalent_upto_iso(m, reference) {
            return Ok(Some(tag.clone()));
        }
    }
    Ok(None)
}

/// Classifies a mixed graph against the catalog at the chosen threshold.
/// The verdict is exact; the tag is produced for connected graphs whose
/// radius is strictly below the threshold.
pub fn small_radius_classify(m: &MixedGraph, alpha2: u32) -> Result<RadiusClass> {
    let below = nmatrix::radius_strictly_below(m, alpha2)?;
    if !below || !m.is_connected() || m.n() == 0 {
        return Ok(RadiusClass {
            alpha2,
            below,
            catalog_tag: None,
        });
    }
    let g = m.underlying();
    let tag = match alpha2 {
        2 => match m.n() {
            1 => Some("P1".into()),
            2 if m.m() == 1 => Some("P2".into()),
            _ => None,
        },
        3 => {
            if let Some(n @ 1..=4) = path_order(&g) {
                Some(format!("P{n}"))
            } else if cycle_order(&g) == Some(4) {
                let cycle = cycles::enumerate_cycles(&g, 4)
                    .into_iter()
                    .next()
                    .expect("quadrangle");
                (cycles::classify_in(m, &cycle)? == CycleClass::Negative).then(|| "C4=".into())
            } else {
                None
            }
        }
        _ => match_below_two(m)?,
    };
    Ok(RadiusClass {
        alpha2,
        below,
        catalog_tag: tag.or_else(|| Some("sporadic-unresolved".into())),
    })
}

/// Whether the spectrum is exactly {1, −1} with equal multiplicities, i.e.
/// the characteristic polynomial is (x²−1)^(n/2); equivalently (asserted)
/// the graph is a mixed perfect matching.
pub fn pm_one_spectrum_recognize(m: &MixedGraph) -> Result<bool> {
    let n = m.n();
    let verdict = if n % 2 != 0 {
        false
    } else {
        let p = charpoly_of(m)?;
        let mut expect = crate::nmatrix::IntPoly::constant(1);
        let factor = crate::nmatrix::IntPoly::from_charpoly(
            &crate::nmatrix::CharPoly::from_coeffs(vec![1, 0, -1])?,
        );
        for _ in 0..n / 2 {
            expect = expect.mul(&factor)?;
        }
        crate::nmatrix::IntPoly::from_charpoly(&p) == expect
    };
    let structural = m.n() % 2 == 0 && (0..m.n()).all(|v| m.degree(v) == 1);
    assert_eq!(
        verdict, structural,
        "a ±1 spectrum must coincide with being a perfect matching"
    );
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::parse_graph;
    use crate::nmatrix::{eigenvalues_of, spectral_radius};

    fn rho(m: &MixedGraph) -> f64 {
        spectral_radius(&eigenvalues_of(m).unwrap()).unwrap()
    }

    #[test]
    fn rank_examples() {
        // Mixed path on odd n has nullity 1, even n nullity 0.
        for n in 2..=7 {
            let p = build_family(&FamilyParams::Path { n }).unwrap();
            let r = rank_exact(&p);
            assert_eq!(r.nullity, n % 2, "path on {n}");
        }
        // Negative hexagon has nullity 2.
        let c6n = build_family(&FamilyParams::Cycle {
            n: 6,
            kind: CycleKind::Negative,
        })
        .unwrap();
        assert_eq!(rank_exact(&c6n).nullity, 2);
    }

    #[test]
    fn pendant_reduction_examples() {
        let star = parse_graph("4 3\n0 1 U\n0 2 F\n0 3 B\n").unwrap();
        assert!(pendant_reduction_check(&star, 0, 1).unwrap());
        let p4 = build_family(&FamilyParams::Path { n: 4 }).unwrap();
        assert!(pendant_reduction_check(&p4, 0, 1).unwrap());
        let paw = sporadic::z1();
        assert!(pendant_reduction_check(&paw, 0, 3).unwrap());
        assert_eq!(rank_exact(&paw).rank, 4);
        assert!(pendant_reduction_check(&p4, 1, 2).is_err());
    }

    #[test]
    fn rank2_examples() {
        let k23 = parse_graph("7 6\n0 2 U\n0 3 U\n0 4 U\n1 2 U\n1 3 U\n1 4 U\n").unwrap();
        let r = rank2_recognize(&k23).unwrap();
        assert_eq!((r.a, r.b, r.isolated), (2, 3, 2));

        // All-positive-quadrangle orientation of K_{2,2}.
        let k22 = parse_graph("4 4\n0 2 F\n0 3 F\n1 2 F\n1 3 F\n").unwrap();
        let r = rank2_recognize(&k22).unwrap();
        assert_eq!((r.a, r.b, r.isolated), (2, 2, 0));

        // Semi-positive quadrangle has rank 4.
        let c4p = parse_graph("4 4\n0 1 F\n1 2 U\n2 3 U\n3 0 U\n").unwrap();
        assert!(rank2_recognize(&c4p).is_none());
        assert_eq!(rank_exact(&c4p).rank, 4);
    }

    #[test]
    fn rank3_examples() {
        let tri = parse_graph("3 3\n0 1 U\n1 2 U\n2 0 U\n").unwrap();
        assert_eq!(rank3_recognize(&tri).unwrap(), Some(Rank3Tag::Triangle));

        // K_{1,1,2} with positive spanning quadrangle: twin reduction is a
        // triangle.
        let k112 = parse_graph("4 5\n0 1 U\n0 2 U\n0 3 U\n1 2 U\n1 3 U\n").unwrap();
        assert_eq!(rank3_recognize(&k112).unwrap(), Some(Rank3Tag::Triangle));

        // q7 has two positive and one semi-negative spanning quadrangles.
        assert_eq!(
            rank3_recognize(&sporadic::q7()).unwrap(),
            Some(Rank3Tag::K4TwoPositiveOneSemiNegative)
        );
        // q8 has rank 4.
        assert_eq!(rank3_recognize(&sporadic::q8()).unwrap(), None);

        let p4 = build_family(&FamilyParams::Path { n: 4 }).unwrap();
        assert_eq!(rank3_recognize(&p4).unwrap(), None);
        let two = parse_graph("2 1\n0 1 U\n").unwrap();
        let disc = two.disjoint_union(&two);
        assert!(rank3_recognize(&disc).is_err());
    }

    #[test]
    fn delta_bound_examples() {
        // Undirected triangle: extremal in the positive mode.
        let k3 = parse_graph("3 3\n0 1 U\n1 2 U\n2 0 U\n").unwrap();
        let rep = delta_bound_report(&k3).unwrap();
        assert!(rep.bound_holds && rep.equality);
        let part = rep.extremal.expect("extremal partition");
        assert_eq!(part.mode, ExtremalMode::PositiveCase);
        assert!(part.labels.iter().all(|&l| l == T6::ONE));
        assert!(part.verify(&k3));

        // Semi-negative triangle: ρ < 2 = Δ.
        let snt = parse_graph("3 3\n0 1 F\n1 2 F\n0 2 U\n").unwrap();
        let rep = delta_bound_report(&snt).unwrap();
        assert!(rep.bound_holds && !rep.equality);
        assert!(rep.extremal.is_none());

        // Directed hexagon is switching-equivalent to C6, so ρ = 2 = Δ.
        let hexagon = parse_graph("6 6\n0 1 F\n1 2 F\n2 3 F\n3 4 F\n4 5 F\n5 0 F\n").unwrap();
        let rep = delta_bound_report(&hexagon).unwrap();
        assert!(rep.bound_holds && rep.equality);
        assert!(rep.extremal.expect("extremal").verify(&hexagon));
    }

    #[test]
    fn family_constructors() {
        let c4n = build_family(&FamilyParams::Cycle {
            n: 4,
            kind: CycleKind::Negative,
        })
        .unwrap();
        assert!((rho(&c4n) - 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(rank_exact(&c4n).nullity, 0);

        let box0 = build_family(&FamilyParams::BoxGraph {
            a: 0,
            b: 0,
            c: 0,
            d: 0,
        })
        .unwrap();
        assert_eq!(box0, c4n);

        let y221 = build_family(&FamilyParams::YTree { a: 2, b: 2, c: 1 }).unwrap();
        assert_eq!(y221.n(), 6);
        assert!(rho(&y221) < 2.0);
        assert!(nmatrix::radius_strictly_below(&y221, 4).unwrap());

        assert!(build_family(&FamilyParams::Cycle {
            n: 2,
            kind: CycleKind::Positive
        })
        .is_err());
    }

    #[test]
    fn sporadic_radii_match_quickly_checked_values() {
        let close = |m: &MixedGraph, expect: f64| {
            let r = rho(m);
            assert!((r - expect).abs() < 1e-3, "rho={r}, expected {expect}");
        };
        close(&sporadic::z1(), 2.0615);
        close(&sporadic::z2(), 2.0615);
        close(&sporadic::q7(), 2.732);
        close(&sporadic::q8(), 2.376);
        close(&sporadic::q9(), 2.732);
        close(&sporadic::q1_minus(), 1.902);
        close(&sporadic::q5_minus(), 1.950);
        close(&sporadic::q7_minus(), 1.970);
        close(&sporadic::q15_minus(), 3f64.sqrt());
        close(&sporadic::q17_minus(), 1.932);
        close(&sporadic::h1(), 1.932);
        close(&sporadic::h2(), 1.932);
        close(&sporadic::q1_eq(), 3f64.sqrt());
        close(&sporadic::q2_eq(), 3f64.sqrt());
        close(&sporadic::q3_eq(), 3f64.sqrt());
        close(&sporadic::q4_eq(), 1.902);
        close(&sporadic::q5_eq(), 3f64.sqrt());
        close(&sporadic::q6_eq(), 1.932);
        close(&sporadic::q8_eq(), 1.956);
        close(&sporadic::q9_eq(), 1.970);
        close(&sporadic::q10_eq(), 1.902);
        close(&sporadic::q11_eq(), 1.956);
    }

    #[test]
    fn hexagon_chord_switchings() {
        // Two-way switching at the last hexagon vertex carries the directed-
        // chord variant onto the intermediate form, and the stated three-way
        // switching carries that onto the canonical one.
        let q3 = sporadic::q3_eq();
        let w: Vec<usize> = vec![0, 1, 2, 3, 5];
        let q2 = switching::two_way_switch(&q3, &w).unwrap();
        assert_eq!(q2, sporadic::q2_eq());

        let mut parts = std::collections::BTreeMap::new();
        parts.insert(T6::ONE, vec![1, 2, 3, 4]);
        parts.insert(T6::MINUS_OMEGA, vec![5]);
        parts.insert(T6::MINUS_OMEGA_BAR, vec![0]);
        let p = switching::AdmissiblePartition::from_parts(6, &parts).unwrap();
        let q1 = switching::three_way_switch(&q2, &p).unwrap();
        assert_eq!(q1, sporadic::q1_eq());
    }

    #[test]
    fn classify_examples() {
        let k2 = parse_graph("2 1\n0 1 U\n").unwrap();
        let r = small_radius_classify(&k2, 2).unwrap();
        assert!(r.below);
        assert_eq!(r.catalog_tag.as_deref(), Some("P2"));

        let k13 = parse_graph("4 3\n0 1 U\n0 2 U\n0 3 U\n").unwrap();
        let r = small_radius_classify(&k13, 3).unwrap();
        assert!(!r.below);

        let p5 = build_family(&FamilyParams::Path { n: 5 }).unwrap();
        assert!(!small_radius_classify(&p5, 3).unwrap().below);
        let r = small_radius_classify(&p5, 4).unwrap();
        assert!(r.below);
        assert_eq!(r.catalog_tag.as_deref(), Some("P5"));

        let b = build_family(&FamilyParams::BoxGraph {
            a: 2,
            b: 0,
            c: 1,
            d: 0,
        })
        .unwrap();
        let r = small_radius_classify(&b, 4).unwrap();
        assert!(r.below);
        assert_eq!(r.catalog_tag.as_deref(), Some("Box_{2,0,1,0}"));

        let h1 = sporadic::h1();
        let r = small_radius_classify(&h1, 4).unwrap();
        assert!(r.below);
        assert_eq!(r.catalog_tag.as_deref(), Some("H1"));
        assert!((rho(&h1) - 1.932).abs() < 1e-3);
    }

    #[test]
    fn rank_is_monotone_under_induced_subgraphs() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x7a4b);
        for _ in 0..40 {
            let n = rng.random_range(2..=7usize);
            let m = crate::harness::random_mixed_graph(&mut rng, n, 0.5);
            let host = rank_exact(&m).rank;
            let keep: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.6)).collect();
            if keep.is_empty() {
                continue;
            }
            let sub = m.induced(&keep);
            assert!(rank_exact(&sub).rank <= host);
        }
    }

    #[test]
    fn pm_one_examples() {
        let two_k2 = parse_graph("4 2\n0 1 U\n2 3 F\n").unwrap();
        assert!(pm_one_spectrum_recognize(&two_k2).unwrap());
        let p3 = build_family(&FamilyParams::Path { n: 3 }).unwrap();
        assert!(!pm_one_spectrum_recognize(&p3).unwrap());
        let arc = parse_graph("2 1\n0 1 F\n").unwrap();
        assert!(pm_one_spectrum_recognize(&arc).unwrap());
    }
}
