//! Switching operations and the switching-equivalence decision.
//!
//! A switching function θ : V → 𝕋₆ acts on gains by
//! gain′(u,v) = θ(u)⁻¹·gain(u,v)·θ(v), a diagonal unitary similarity, so it
//! preserves the characteristic polynomial whenever the result is again a
//! mixed graph. Two-way and three-way switchings are the special cases whose
//! results always are; the equivalence decision searches for a θ directly by
//! spanning-tree normalization, with an optional global converse.

use std::collections::BTreeMap;
use std::fmt;

use crate::core::{MixedGraph, T6};
use crate::nmatrix::charpoly_of;
use crate::{Error, Result};

// ===========================================================================
// Switching functions
// ===========================================================================

/// Vertex-indexed sixth-root exponents witnessing a switching.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SwitchingFunction {
    pub theta: Vec<T6>,
}

impl SwitchingFunction {
    pub fn constant(n: usize, value: T6) -> Self {
        SwitchingFunction {
            theta: vec![value; n],
        }
    }

    /// Witness rendering: "theta: v0=w^0 v1=w^5 converse=false".
    pub fn render(&self, used_converse: bool) -> String {
        let parts: Vec<String> = self
            .theta
            .iter()
            .enumerate()
            .map(|(v, t)| format!("v{v}={t}"))
            .collect();
        format!("theta: {} converse={used_converse}", parts.join(" "))
    }
}

impl fmt::Display for SwitchingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// Applies θ to every gain; fails on the first edge whose new gain leaves
/// {1, ω, ω̄}. On success the characteristic polynomial is preserved.
pub fn apply_switching(m: &MixedGraph, theta: &SwitchingFunction) -> Result<MixedGraph> {
    if theta.theta.len() != m.n() {
        return Err(Error::Usage(format!(
            "switching function has {} entries for a graph on {} vertices",
            theta.theta.len(),
            m.n()
        )));
    }
    let mut edges = Vec::with_capacity(m.m());
    for e in m.edges() {
        let new_gain = theta.theta[e.u].conj() * e.gain * theta.theta[e.v];
        if !new_gain.is_mixed_gain() {
            return Err(Error::NotMixedValued {
                u: e.u,
                v: e.v,
                gain: new_gain,
            });
        }
        edges.push((e.u, e.v, new_gain));
    }
    MixedGraph::new(m.n(), &edges)
}

// ===========================================================================
// Two-way switching
// ===========================================================================

/// Two-way switching with respect to W (and U = V∖W): requires that no arc
/// runs from U into W; arcs from W to U become undirected, undirected edges
/// between U and W become arcs from U to W, and edges inside either side are
/// untouched. Realized by θ = 1 on W and ω̄ on U.
pub fn two_way_switch(m: &MixedGraph, w: &[usize]) -> Result<MixedGraph> {
    let mut in_w = vec![false; m.n()];
    for &v in w {
        if v >= m.n() {
            return Err(Error::Usage(format!("vertex {v} out of range")));
        }
        in_w[v] = true;
    }
    for e in m.edges() {
        if in_w[e.u] == in_w[e.v] {
            continue;
        }
        // Stored gain is the (u,v) entry: ω means arc u→v, ω̄ means arc v→u.
        let (tail, head) = match e.gain {
            T6::OMEGA => (e.u, e.v),
            T6::OMEGA_BAR => (e.v, e.u),
            _ => continue,
        };
        if !in_w[tail] && in_w[head] {
            return Err(Error::TwoWayPrecondition { tail, head });
        }
    }
    let theta = SwitchingFunction {
        theta: (0..m.n())
            .map(|v| if in_w[v] { T6::ONE } else { T6::OMEGA_BAR })
            .collect(),
    };
    apply_switching(m, &theta)
}

// ===========================================================================
// Three-way switching
// ===========================================================================

/// A labeling of the vertices by 𝕋₆ values, read as the partition
/// V = ⋃_j V_j. It is admissible for M when every undirected edge has type
/// (j, j) or (j, ω·j) and every arc has type (j, j), (j, ω̄·j) or (j, −ω·j).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissiblePartition {
    labels: Vec<T6>,
}

impl AdmissiblePartition {
    pub fn from_labels(labels: Vec<T6>) -> Self {
        AdmissiblePartition { labels }
    }

    /// Builds from a map 𝕋₆-label → vertices; the parts must cover 0..n
    /// exactly once.
    pub fn from_parts(n: usize, parts: &BTreeMap<T6, Vec<usize>>) -> Result<Self> {
        let mut labels = vec![None; n];
        for (&j, vs) in parts {
            for &v in vs {
                if v >= n {
                    return Err(Error::Usage(format!("vertex {v} out of range")));
                }
                if labels[v].is_some() {
                    return Err(Error::Usage(format!("vertex {v} appears in two parts")));
                }
                labels[v] = Some(j);
            }
        }
        let labels: Vec<T6> = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| Error::Usage(format!("vertex {v} not covered"))))
            .collect::<Result<_>>()?;
        Ok(AdmissiblePartition { labels })
    }

    pub fn labels(&self) -> &[T6] {
        &self.labels
    }

    /// Checks the admissibility conditions edge by edge, reporting the first
    /// violation with its type.
    pub fn validate(&self, m: &MixedGraph) -> Result<()> {
        if self.labels.len() != m.n() {
            return Err(Error::Usage("partition size mismatch".into()));
        }
        for e in m.edges() {
            let ju = self.labels[e.u];
            let jv = self.labels[e.v];
            // ratio = jv / ju
            let ratio = ju.conj() * jv;
            let ok = match e.gain {
                // Undirected: types (j,j) and (j, ω·j) in either reading.
                T6::ONE => matches!(ratio.exponent(), 0 | 1 | 5),
                // Arc u→v: (j,j), (j, ω̄·j) or (j, −ω·j).
                T6::OMEGA => matches!(ratio.exponent(), 0 | 5 | 4),
                // Arc v→u: same conditions read from the tail v.
                T6::OMEGA_BAR => matches!(ratio.exponent(), 0 | 1 | 2),
                _ => false,
            };
            if !ok {
                return Err(Error::Inadmissible {
                    u: e.u,
                    v: e.v,
                    ju,
                    jv,
                });
            }
        }
        Ok(())
    }
}

/// Three-way switching: undirected edges of type (j, ω·j) become arcs, arcs
/// of type (j, ω̄·j) become undirected, arcs of type (j, −ω·j) reverse.
/// Equivalent to applying θ(v) = label(v).
pub fn three_way_switch(m: &MixedGraph, p: &AdmissiblePartition) -> Result<MixedGraph> {
    p.validate(m)?;
    let theta = SwitchingFunction {
        theta: p.labels().to_vec(),
    };
    let out = apply_switching(m, &theta)
        .expect("admissible partitions always produce mixed graphs");
    Ok(out)
}

// ===========================================================================
// Switching equivalence
// ===========================================================================

/// Verdict of the switching-equivalence decision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Equivalent {
        theta: SwitchingFunction,
        used_converse: bool,
    },
    /// The underlying graphs differ, so no switching can relate the inputs.
    UnderlyingMismatch,
    /// Same underlying graph but some cycle weight obstructs equivalence.
    NotEquivalent,
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }
}

fn try_switch_onto(m1: &MixedGraph, m2: &MixedGraph) -> Option<SwitchingFunction> {
    // Per component: root the spanning tree at the lowest vertex, force the
    // tree gains to match, then verify every non-tree edge.
    let n = m1.n();
    let g = m1.underlying();
    let mut theta: Vec<Option<T6>> = vec![None; n];
    for comp in g.components() {
        let root = comp[0];
        theta[root] = Some(T6::ONE);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let tu = theta[u].expect("visited vertices are labeled");
            for v in g.neighbors(u) {
                if theta[v].is_some() {
                    continue;
                }
                // θ(v) = θ(u) · g1(u,v)⁻¹ · g2(u,v)
                let g1 = m1.gain(u, v).expect("edge exists");
                let g2 = m2.gain(u, v).expect("same underlying graph");
                theta[v] = Some(tu * g1.conj() * g2);
                queue.push_back(v);
            }
        }
    }
    let theta: Vec<T6> = theta.into_iter().map(|t| t.expect("connected cover")).collect();
    for e in m1.edges() {
        let new_gain = theta[e.u].conj() * e.gain * theta[e.v];
        if Some(new_gain) != m2.gain(e.u, e.v) {
            return None;
        }
    }
    Some(SwitchingFunction { theta })
}

/// Decides whether some θ (plus an optional global converse) carries M1 to
/// M2, returning the witness on success.
pub fn switching_equivalent(m1: &MixedGraph, m2: &MixedGraph) -> Equivalence {
    if m1.n() != m2.n() || m1.underlying() != m2.underlying() {
        return Equivalence::UnderlyingMismatch;
    }
    if let Some(theta) = try_switch_onto(m1, m2) {
        return Equivalence::Equivalent {
            theta,
            used_converse: false,
        };
    }
    if let Some(theta) = try_switch_onto(&m1.converse(), m2) {
        return Equivalence::Equivalent {
            theta,
            used_converse: true,
        };
    }
    Equivalence::NotEquivalent
}

// ===========================================================================
// Twins and twin reduction
// ===========================================================================

/// Non-adjacent vertex pairs with identical underlying neighborhoods whose
/// matrix rows are proportional by a scalar s ∈ 𝕋₆ (switching then makes the
/// rows equal). Returns (u, v, s) with u < v.
pub fn twin_pairs(m: &MixedGraph) -> Vec<(usize, usize, T6)> {
    let n = m.n();
    let g = m.underlying();
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) || g.neighbors_mask(u) != g.neighbors_mask(v) {
                continue;
            }
            let mut scalar: Option<T6> = Some(T6::ONE);
            let mut first = true;
            for j in g.neighbors(u) {
                let gu = m.gain(u, j).expect("neighbor");
                let gv = m.gain(v, j).expect("same neighborhood");
                let s = gu * gv.conj();
                if first {
                    scalar = Some(s);
                    first = false;
                } else if scalar != Some(s) {
                    scalar = None;
                    break;
                }
            }
            if let Some(s) = scalar {
                out.push((u, v, s));
            }
        }
    }
    out
}

/// Result of iterated twin merging.
#[derive(Clone, Debug)]
pub struct TwinReduction {
    /// Original vertex → the original index of its surviving representative.
    pub representative: Vec<usize>,
    /// Surviving original vertices in increasing order; the reduced graph is
    /// relabeled along this list.
    pub survivors: Vec<usize>,
    pub reduced: MixedGraph,
}

/// Removes all but one vertex from every twin class, merging the
/// lexicographically first twin pair until none remain. Rank is preserved
/// and asserted.
pub fn twin_reduction(m: &MixedGraph) -> TwinReduction {
    let n = m.n();
    let mut rep: Vec<usize> = (0..n).collect();
    let mut survivors: Vec<usize> = (0..n).collect();
    let mut cur = m.clone();
    loop {
        let pairs = twin_pairs(&cur);
        let Some(&(u, v, _)) = pairs.first() else {
            break;
        };
        // Remove v, fold it into u's class.
        let gone = survivors.remove(v);
        let kept = survivors[u];
        for r in rep.iter_mut() {
            if *r == gone {
                *r = kept;
            }
        }
        cur = cur.delete_vertex(v);
    }
    let rank_of = |g: &MixedGraph| {
        g.n() - charpoly_of(g)
            .expect("charpoly of a mixed graph")
            .multiplicity_of_zero()
    };
    assert_eq!(rank_of(m), rank_of(&cur), "twin reduction must preserve rank");
    TwinReduction {
        representative: rep,
        survivors,
        reduced: cur,
    }
}

// ===========================================================================
// Cospectrality with the underlying graph
// ===========================================================================

/// Whether a connected mixed graph is switching equivalent to its
/// all-undirected underlying graph; equivalently (and asserted) whether it is
/// cospectral with it and shares its largest eigenvalue.
pub fn underlying_cospectral(m: &MixedGraph) -> Result<bool> {
    if !m.is_connected() {
        return Err(Error::Usage(
            "underlying_cospectral expects a connected graph".into(),
        ));
    }
    let plain = MixedGraph::from_simple(&m.underlying());
    let verdict = switching_equivalent(m, &plain).is_equivalent();
    if verdict {
        let p1 = charpoly_of(m)?;
        let p2 = charpoly_of(&plain)?;
        assert_eq!(p1, p2, "switching equivalence must preserve the spectrum");
        let s1 = crate::nmatrix::eigenvalues_of(m)?;
        let s2 = crate::nmatrix::eigenvalues_of(&plain)?;
        assert!(
            (s1.eigenvalues[0] - s2.eigenvalues[0]).abs() < 1e-9,
            "largest eigenvalues must agree"
        );
    }
    Ok(verdict)
}
