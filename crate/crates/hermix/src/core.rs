//! Mixed-graph data model and exact arithmetic in ℚ(ω).
//!
//! ω = (1 + i√3)/2 generates the group 𝕋₆ of sixth roots of unity; the
//! defining relation of the ring is ω² = ω − 1. All types here are immutable
//! after construction.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

// ===========================================================================
// T6: the group of sixth roots of unity
// ===========================================================================

/// An element of 𝕋₆ stored as an exponent of ω, so the value is ω^k.
///
/// Exponents 0..5 stand for 1, ω, −ω̄, −1, −ω, ω̄ in that order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct T6(u8);

impl T6 {
    pub const ONE: T6 = T6(0);
    pub const OMEGA: T6 = T6(1);
    pub const MINUS_OMEGA_BAR: T6 = T6(2);
    pub const MINUS_ONE: T6 = T6(3);
    pub const MINUS_OMEGA: T6 = T6(4);
    pub const OMEGA_BAR: T6 = T6(5);

    /// All six elements in exponent order.
    pub const ALL: [T6; 6] = [T6(0), T6(1), T6(2), T6(3), T6(4), T6(5)];

    pub fn new(exponent: i64) -> T6 {
        T6(exponent.rem_euclid(6) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    /// Complex conjugate, which is also the group inverse.
    pub fn conj(self) -> T6 {
        T6((6 - self.0) % 6)
    }

    pub fn inv(self) -> T6 {
        self.conj()
    }

    /// Multiplication by −1 = ω³.
    pub fn neg(self) -> T6 {
        T6((self.0 + 3) % 6)
    }

    pub fn is_real(self) -> bool {
        self.0 == 0 || self.0 == 3
    }

    /// Twice the real part; always an integer (2, 1, −1, −2, −1, 1).
    pub fn double_real_part(self) -> i64 {
        match self.0 {
            0 => 2,
            1 | 5 => 1,
            2 | 4 => -1,
            3 => -2,
            _ => unreachable!(),
        }
    }

    /// Valid gain of a mixed-graph edge: 1, ω or ω̄.
    pub fn is_mixed_gain(self) -> bool {
        matches!(self.0, 0 | 1 | 5)
    }
}

impl std::ops::Mul for T6 {
    type Output = T6;
    fn mul(self, rhs: T6) -> T6 {
        T6((self.0 + rhs.0) % 6)
    }
}

impl fmt::Display for T6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^{}", self.0)
    }
}

impl fmt::Debug for T6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^{}", self.0)
    }
}

impl FromStr for T6 {
    type Err = Error;
    fn from_str(s: &str) -> Result<T6> {
        let exp = s
            .strip_prefix("w^")
            .and_then(|t| t.parse::<i64>().ok())
            .ok_or_else(|| Error::Usage(format!("not a T6 element: {s:?}")))?;
        Ok(T6::new(exp))
    }
}

// ===========================================================================
// Eisenstein: exact elements a + bω of ℚ(ω)
// ===========================================================================

/// An exact element a + bω of ℚ(ω), with rational a and b.
///
/// Multiplication reduces by ω² = ω − 1; conjugation sends (a, b) to
/// (a + b, −b) because ω̄ = 1 − ω. The value is real iff b = 0.
#[derive(Clone, PartialEq, Eq)]
pub struct Eisenstein {
    pub a: BigRational,
    pub b: BigRational,
}

impl Eisenstein {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Eisenstein { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> Self {
        Eisenstein {
            a: BigRational::from_integer(BigInt::from(a)),
            b: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn zero() -> Self {
        Eisenstein::from_integers(0, 0)
    }

    pub fn one() -> Self {
        Eisenstein::from_integers(1, 0)
    }

    pub fn from_t6(x: T6) -> Self {
        let (a, b) = match x.exponent() {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 1),
            3 => (-1, 0),
            4 => (0, -1),
            5 => (1, -1),
            _ => unreachable!(),
        };
        Eisenstein::from_integers(a, b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Eisenstein {
            a: &self.a + &self.b,
            b: -self.b.clone(),
        }
    }

    pub fn mul(&self, rhs: &Eisenstein) -> Self {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc + bd)ω
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        Eisenstein {
            a: ac - &bd,
            b: ad + bc + bd,
        }
    }

    pub fn add(&self, rhs: &Eisenstein) -> Self {
        Eisenstein {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    pub fn sub(&self, rhs: &Eisenstein) -> Self {
        Eisenstein {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    pub fn neg(&self) -> Self {
        Eisenstein {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm z·z̄ = a² + ab + b², a nonnegative rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Eisenstein {
            a: c.a / &n,
            b: c.b / n,
        })
    }

    /// Complex value (re, im) in f64, with im = b·√3/2.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        (a + b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}w)", self.a, self.b)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}w", self.b);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}w", self.a, -self.b.clone())
        } else {
            write!(f, "{} + {}w", self.a, self.b)
        }
    }
}

/// Group law of 𝕋₆ (exponents add mod 6).
pub fn t6_mul(x: T6, y: T6) -> T6 {
    x * y
}

/// Embedding of 𝕋₆ into ℚ(ω).
pub fn to_eisenstein(x: T6) -> Eisenstein {
    Eisenstein::from_t6(x)
}

/// Ring product in ℚ(ω).
pub fn eis_mul(x: &Eisenstein, y: &Eisenstein) -> Eisenstein {
    x.mul(y)
}

// ===========================================================================
// SimpleGraph
// ===========================================================================

/// An undirected simple graph on at most 64 vertices, stored as adjacency
/// bitsets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "graphs are capped at 64 vertices");
        SimpleGraph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.adj[v];
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let u = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(u)
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut comp = Vec::new();
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        g
    }

    /// Degree sequence sorted ascending, a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

// ===========================================================================
// MixedGraph
// ===========================================================================

/// One edge of a mixed graph, stored with u < v; the gain is the (u,v)
/// matrix entry: 1 for an undirected edge, ω for the arc u→v, ω̄ for v→u.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub gain: T6,
}

const NO_EDGE: u8 = u8::MAX;

/// A mixed graph: a simple underlying graph with a per-edge gain in
/// {1, ω, ω̄}, kept in canonical direction (gain attached to the smaller
/// endpoint). The (v,u) entry is always derived by conjugation, so the
/// matrix is Hermitian by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<Edge>,
    // Dense entry table: ent[s*n + t] is the exponent of the (s,t) entry,
    // NO_EDGE when s and t are not adjacent.
    ent: Vec<u8>,
}

impl MixedGraph {
    /// Builds a mixed graph from (u, v, gain) triples, where the gain is the
    /// (u,v) entry. Triples with u > v are normalized by conjugation.
    pub fn new(n: usize, edges: &[(usize, usize, T6)]) -> Result<Self> {
        if n > 64 {
            return Err(Error::Capacity(format!("n={n} exceeds the 64-vertex cap")));
        }
        let mut ent = vec![NO_EDGE; n * n];
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v, g) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            let (a, b, gain) = if u < v { (u, v, g) } else { (v, u, g.conj()) };
            if !gain.is_mixed_gain() {
                return Err(Error::InvalidGraph(format!(
                    "gain {gain} on edge ({a},{b}) is not 1, w or w-bar"
                )));
            }
            if ent[a * n + b] != NO_EDGE {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a},{b})")));
            }
            ent[a * n + b] = gain.exponent();
            ent[b * n + a] = gain.conj().exponent();
            list.push(Edge { u: a, v: b, gain });
        }
        list.sort_unstable_by_key(|e| (e.u, e.v));
        Ok(MixedGraph {
            n,
            edges: list,
            ent,
        })
    }

    /// All-undirected mixed graph on a simple graph.
    pub fn from_simple(g: &SimpleGraph) -> Self {
        let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (u, v, T6::ONE)).collect();
        MixedGraph::new(g.n(), &edges).expect("simple graph is a valid mixed graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The (s,t) matrix entry as an element of 𝕋₆, or None when s ≁ t.
    pub fn gain(&self, s: usize, t: usize) -> Option<T6> {
        let code = self.ent[s * self.n + t];
        if code == NO_EDGE {
            None
        } else {
            Some(T6(code))
        }
    }

    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        self.ent[s * self.n + t] != NO_EDGE
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn underlying(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for e in &self.edges {
            g.add_edge(e.u, e.v).expect("edges validated on construction");
        }
        g
    }

    /// The mixed graph with every arc reversed; its matrix is the transpose.
    pub fn converse(&self) -> MixedGraph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.gain.conj()))
            .collect();
        MixedGraph::new(self.n, &edges).expect("converse preserves validity")
    }

    /// The three neighborhood classes of v: undirected neighbors, heads of
    /// arcs leaving v, tails of arcs entering v. They partition N_G(v).
    pub fn neighborhoods(&self, v: usize) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::Usage(format!("vertex {v} out of range")));
        }
        let mut n0 = Vec::new();
        let mut np = Vec::new();
        let mut nm = Vec::new();
        for u in 0..self.n {
            match self.gain(v, u) {
                None => {}
                Some(T6::ONE) => n0.push(u),
                Some(T6::OMEGA) => np.push(u),
                Some(T6::OMEGA_BAR) => nm.push(u),
                Some(g) => unreachable!("invalid stored gain {g}"),
            }
        }
        Ok((n0, np, nm))
    }

    /// Induced mixed subgraph on `keep`, relabeled 0..keep.len() in order.
    pub fn induced(&self, keep: &[usize]) -> MixedGraph {
        let mut edges = Vec::new();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if let Some(g) = self.gain(u, v) {
                    edges.push((i, j, g));
                }
            }
        }
        MixedGraph::new(keep.len(), &edges).expect("induced subgraph is valid")
    }

    pub fn delete_vertex(&self, v: usize) -> MixedGraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn delete_vertices(&self, remove: &[usize]) -> MixedGraph {
        let keep: Vec<usize> = (0..self.n).filter(|u| !remove.contains(u)).collect();
        self.induced(&keep)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> MixedGraph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| !(e.u == u.min(v) && e.v == u.max(v)))
            .map(|e| (e.u, e.v, e.gain))
            .collect();
        MixedGraph::new(self.n, &edges).expect("edge deletion preserves validity")
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.underlying().components()
    }

    pub fn is_connected(&self) -> bool {
        self.underlying().is_connected()
    }

    /// Disjoint union, relabeling the right operand after the left.
    pub fn disjoint_union(&self, other: &MixedGraph) -> MixedGraph {
        let mut edges: Vec<_> = self.edges.iter().map(|e| (e.u, e.v, e.gain)).collect();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| (e.u + self.n, e.v + self.n, e.gain)),
        );
        MixedGraph::new(self.n + other.n, &edges).expect("disjoint union is valid")
    }

    /// Relabels vertices: vertex v of self becomes perm[v] in the result.
    pub fn relabel(&self, perm: &[usize]) -> MixedGraph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| (perm[e.u], perm[e.v], e.gain))
            .collect();
        MixedGraph::new(self.n, &edges).expect("relabeling is valid")
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedGraph({})", serialize_graph(self).replace('\n', "; "))
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serialize_graph(self))
    }
}

// ===========================================================================
// Text format
// ===========================================================================

/// Parses the line-oriented mixed-graph format.
///
/// First data line is "n m"; then m lines "u v K" with K in {U, F, B}:
/// U = undirected {u,v}, F = arc u→v, B = arc v→u. Vertex indices are
/// 0-based. Lines starting with '#' are comments.
pub fn parse_graph(text: &str) -> Result<MixedGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, T6)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = s.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected header \"n m\", got {s:?}"),
                    });
                }
                let n = fields[0].parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex count {:?}", fields[0]),
                })?;
                let m = fields[1].parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad edge count {:?}", fields[1]),
                })?;
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line,
                        msg: format!("more than {m} edge lines"),
                    });
                }
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected \"u v K\", got {s:?}"),
                    });
                }
                let u = fields[0].parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex {:?}", fields[0]),
                })?;
                let v = fields[1].parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex {:?}", fields[1]),
                })?;
                if u >= n || v >= n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex out of range in {s:?} (n={n})"),
                    });
                }
                let gain = match fields[2] {
                    "U" => T6::ONE,
                    "F" => T6::OMEGA,
                    "B" => T6::OMEGA_BAR,
                    k => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("edge kind {k:?} is not U, F or B"),
                        })
                    }
                };
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("self-loop at {u}"),
                    });
                }
                if edges
                    .iter()
                    .any(|&(a, b, _)| (a.min(b), a.max(b)) == (u.min(v), u.max(v)))
                {
                    return Err(Error::Parse {
                        line,
                        msg: format!("duplicate edge ({u},{v})"),
                    });
                }
                edges.push((u, v, gain));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    MixedGraph::new(n, &edges).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

/// Canonical serialization: edges sorted by endpoint pair; undirected edges
/// print as "u v U" with u < v, arcs print tail first as "t h F", so B never
/// appears on output.
pub fn serialize_graph(m: &MixedGraph) -> String {
    let mut out = format!("{} {}\n", m.n(), m.m());
    for e in m.edges() {
        match e.gain {
            T6::ONE => out.push_str(&format!("{} {} U\n", e.u, e.v)),
            T6::OMEGA => out.push_str(&format!("{} {} F\n", e.u, e.v)),
            T6::OMEGA_BAR => out.push_str(&format!("{} {} F\n", e.v, e.u)),
            g => unreachable!("invalid stored gain {g}"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t6_group_law() {
        assert_eq!(T6::OMEGA * T6::OMEGA_BAR, T6::ONE);
        assert_eq!(T6::OMEGA * T6::OMEGA * T6::OMEGA, T6::MINUS_ONE);
        assert_eq!(T6::ONE * T6::OMEGA, T6::OMEGA);
        for x in T6::ALL {
            assert_eq!(x * x.inv(), T6::ONE);
            assert_eq!(x.conj().conj(), x);
        }
    }

    #[test]
    fn t6_embedding_table() {
        assert_eq!(to_eisenstein(T6::OMEGA_BAR), Eisenstein::from_integers(1, -1));
        assert_eq!(to_eisenstein(T6::MINUS_ONE), Eisenstein::from_integers(-1, 0));
        assert_eq!(to_eisenstein(T6::ONE), Eisenstein::from_integers(1, 0));
    }

    #[test]
    fn embedding_is_homomorphic() {
        // Exhaustive over all 36 pairs: the embedding respects products and
        // conjugation, and ω + ω̄ = 1.
        for x in T6::ALL {
            for y in T6::ALL {
                assert_eq!(
                    to_eisenstein(t6_mul(x, y)),
                    eis_mul(&to_eisenstein(x), &to_eisenstein(y))
                );
            }
            assert_eq!(to_eisenstein(x).conj(), to_eisenstein(x.conj()));
        }
        let sum = to_eisenstein(T6::OMEGA).add(&to_eisenstein(T6::OMEGA_BAR));
        assert_eq!(sum, Eisenstein::one());
    }

    #[test]
    fn eisenstein_ring_examples() {
        let w = Eisenstein::from_integers(0, 1);
        assert_eq!(w.mul(&w), Eisenstein::from_integers(-1, 1));
        assert_eq!(
            w.mul(&Eisenstein::from_integers(1, -1)),
            Eisenstein::from_integers(1, 0)
        );
        assert_eq!(
            Eisenstein::from_integers(2, 0).mul(&Eisenstein::from_integers(0, 3)),
            Eisenstein::from_integers(0, 6)
        );
        // Commutative ring with conjugation an involution.
        let z = Eisenstein::from_integers(3, -2);
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z.mul(&w).conj(), z.conj().mul(&w.conj()));
        assert_eq!(z.mul(&z.inv().unwrap()), Eisenstein::one());
    }

    fn triangle_example() -> MixedGraph {
        // Undirected {0,1}, arcs 1→2 and 2→0.
        parse_graph("3 3\n0 1 U\n1 2 F\n2 0 F\n").unwrap()
    }

    #[test]
    fn parse_examples() {
        let t = triangle_example();
        assert_eq!(t.n(), 3);
        assert_eq!(t.gain(0, 1), Some(T6::ONE));
        assert_eq!(t.gain(1, 2), Some(T6::OMEGA));
        assert_eq!(t.gain(2, 0), Some(T6::OMEGA));
        assert_eq!(t.gain(0, 2), Some(T6::OMEGA_BAR));

        let k1 = parse_graph("1 0\n").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.m(), 0);

        let err = parse_graph("2 2\n0 1 U\n0 1 F\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn serialize_round_trip() {
        let t = triangle_example();
        let text = serialize_graph(&t);
        assert!(!text.contains('B'));
        assert_eq!(parse_graph(&text).unwrap(), t);

        // B input normalizes to the conjugate stored direction.
        let g = parse_graph("2 1\n0 1 B\n").unwrap();
        assert_eq!(g.gain(1, 0), Some(T6::OMEGA));
        assert_eq!(serialize_graph(&g), "2 1\n1 0 F\n");
    }

    #[test]
    fn converse_reverses_arcs() {
        let arc = parse_graph("2 1\n0 1 F\n").unwrap();
        let rev = arc.converse();
        assert_eq!(rev.gain(1, 0), Some(T6::OMEGA));
        let und = parse_graph("2 1\n0 1 U\n").unwrap();
        assert_eq!(und.converse(), und);
        let t = triangle_example();
        assert_eq!(t.converse().converse(), t);
    }

    #[test]
    fn neighborhood_partition() {
        let t = triangle_example();
        let (n0, np, nm) = t.neighborhoods(1).unwrap();
        assert_eq!((n0, np, nm), (vec![0], vec![2], vec![]));
        let (n0, np, nm) = t.neighborhoods(0).unwrap();
        assert_eq!((n0, np, nm), (vec![1], vec![], vec![2]));

        let arc = parse_graph("2 1\n0 1 F\n").unwrap();
        let (n0, np, nm) = arc.neighborhoods(0).unwrap();
        assert_eq!((n0.len(), np, nm.len()), (0, vec![1], 0));

        let iso = parse_graph("2 1\n0 1 U\n")
            .unwrap()
            .disjoint_union(&parse_graph("1 0\n").unwrap());
        let (n0, np, nm) = iso.neighborhoods(2).unwrap();
        assert!(n0.is_empty() && np.is_empty() && nm.is_empty());

        assert!(t.neighborhoods(7).is_err());

        // The three classes always partition the underlying neighborhood.
        for v in 0..t.n() {
            let (n0, np, nm) = t.neighborhoods(v).unwrap();
            let mut all: Vec<usize> = n0.into_iter().chain(np).chain(nm).collect();
            all.sort_unstable();
            let mut expect: Vec<usize> = t.underlying().neighbors(v).collect();
            expect.sort_unstable();
            assert_eq!(all, expect);
        }
    }
}
