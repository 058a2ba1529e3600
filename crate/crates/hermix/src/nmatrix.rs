//! The Hermitian adjacency matrix over ℚ(ω) and everything spectral that can
//! be decided exactly: characteristic polynomials by two independent routes,
//! Sturm-sequence root counting against surd endpoints, plus a dependency-free
//! Jacobi eigensolver for numeric cross-checks.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::core::{Eisenstein, MixedGraph, T6};
use crate::cycles;
use crate::{Error, Result};

// ===========================================================================
// Eisenstein integers on i128, the fast exact scalar for charpoly work
// ===========================================================================

/// a + bω with machine integers; all operations are overflow-checked so a
/// capacity problem surfaces as an error instead of silent wraparound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct EInt {
    pub a: i128,
    pub b: i128,
}

impl EInt {
    pub const ZERO: EInt = EInt { a: 0, b: 0 };
    pub const ONE: EInt = EInt { a: 1, b: 0 };

    pub fn from_t6(x: T6) -> EInt {
        let (a, b) = match x.exponent() {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 1),
            3 => (-1, 0),
            4 => (0, -1),
            5 => (1, -1),
            _ => unreachable!(),
        };
        EInt { a, b }
    }

    pub fn checked_add(self, rhs: EInt) -> Option<EInt> {
        Some(EInt {
            a: self.a.checked_add(rhs.a)?,
            b: self.b.checked_add(rhs.b)?,
        })
    }

    pub fn checked_mul(self, rhs: EInt) -> Option<EInt> {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc + bd)ω
        let ac = self.a.checked_mul(rhs.a)?;
        let bd = self.b.checked_mul(rhs.b)?;
        let ad = self.a.checked_mul(rhs.b)?;
        let bc = self.b.checked_mul(rhs.a)?;
        Some(EInt {
            a: ac.checked_sub(bd)?,
            b: ad.checked_add(bc)?.checked_add(bd)?,
        })
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

fn overflow() -> Error {
    Error::Arithmetic("i128 overflow in exact matrix arithmetic".into())
}

/// Dense Eisenstein-integer entry table of a mixed graph's matrix.
pub(crate) fn eint_matrix(m: &MixedGraph) -> Vec<EInt> {
    let n = m.n();
    let mut ent = vec![EInt::ZERO; n * n];
    for e in m.edges() {
        ent[e.u * n + e.v] = EInt::from_t6(e.gain);
        ent[e.v * n + e.u] = EInt::from_t6(e.gain.conj());
    }
    ent
}

// ===========================================================================
// NMatrix
// ===========================================================================

/// The Hermitian adjacency matrix of a mixed graph: entry (s,t) is ω for an
/// arc s→t, ω̄ for t→s, 1 for an undirected edge and 0 otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NMatrix {
    n: usize,
    entries: Vec<Eisenstein>,
}

impl NMatrix {
    /// Validates Hermitian symmetry and a zero diagonal.
    pub fn new(n: usize, entries: Vec<Eisenstein>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Usage(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for s in 0..n {
            if !entries[s * n + s].is_zero() {
                return Err(Error::InvalidGraph(format!("nonzero diagonal at {s}")));
            }
            for t in (s + 1)..n {
                if entries[s * n + t].conj() != entries[t * n + s] {
                    return Err(Error::InvalidGraph(format!(
                        "not Hermitian at ({s},{t})"
                    )));
                }
            }
        }
        Ok(NMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, s: usize, t: usize) -> &Eisenstein {
        &self.entries[s * self.n + t]
    }

    /// Reinterprets the matrix as a mixed graph; every off-diagonal entry
    /// must be 0, 1, ω or ω̄.
    pub fn to_mixed_graph(&self) -> Result<MixedGraph> {
        let mut edges = Vec::new();
        for s in 0..self.n {
            for t in (s + 1)..self.n {
                let e = self.entry(s, t);
                if e.is_zero() {
                    continue;
                }
                let gain = T6::ALL
                    .into_iter()
                    .find(|&g| Eisenstein::from_t6(g) == *e && g.is_mixed_gain())
                    .ok_or_else(|| {
                        Error::InvalidGraph(format!("entry ({s},{t}) = {e} is not a mixed gain"))
                    })?;
                edges.push((s, t, gain));
            }
        }
        MixedGraph::new(self.n, &edges)
    }
}

/// Matrix of a mixed graph.
pub fn build_nmatrix(m: &MixedGraph) -> NMatrix {
    let n = m.n();
    let mut entries = vec![Eisenstein::zero(); n * n];
    for e in m.edges() {
        entries[e.u * n + e.v] = Eisenstein::from_t6(e.gain);
        entries[e.v * n + e.u] = Eisenstein::from_t6(e.gain.conj());
    }
    NMatrix { n, entries }
}

/// J − N − I: the matrix of the complement mixed graph (non-adjacent pairs
/// become undirected edges, arcs reverse because 1 − ω = ω̄).
pub fn complement_nmatrix(n: &NMatrix) -> NMatrix {
    let dim = n.n();
    let one = Eisenstein::one();
    let mut entries = vec![Eisenstein::zero(); dim * dim];
    for s in 0..dim {
        for t in 0..dim {
            if s != t {
                entries[s * dim + t] = one.sub(n.entry(s, t));
            }
        }
    }
    NMatrix { n: dim, entries }
}

// ===========================================================================
// CharPoly and plain integer polynomials
// ===========================================================================

/// The exact characteristic polynomial det(xI − N), stored as the integer
/// coefficient vector [c_0 = 1, c_1, ..., c_n] of
/// x^n + c_1 x^{n-1} + ... + c_n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CharPoly {
    coeffs: Vec<i128>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<i128>) -> Result<Self> {
        if coeffs.first() != Some(&1) {
            return Err(Error::Usage("characteristic polynomial must be monic".into()));
        }
        Ok(CharPoly { coeffs })
    }

    /// Coefficients [1, c_1, ..., c_n], descending powers.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Multiplicity of 0 as a root: the number of trailing zero coefficients.
    pub fn multiplicity_of_zero(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| **c == 0).count()
    }

    /// Exact product, for characteristic polynomials of disjoint unions.
    pub fn mul(&self, other: &CharPoly) -> Result<CharPoly> {
        let a = IntPoly::from_charpoly(self);
        let b = IntPoly::from_charpoly(other);
        a.mul(&b)?.into_charpoly()
    }

    pub fn eval_int(&self, x: i128) -> Result<i128> {
        let mut acc: i128 = 0;
        for &c in &self.coeffs {
            acc = acc
                .checked_mul(x)
                .and_then(|t| t.checked_add(c))
                .ok_or_else(overflow)?;
        }
        Ok(acc)
    }

    /// Machine-readable rendering: "charpoly: 1 0 -3 0 1".
    pub fn machine_line(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("charpoly: {}", body.join(" "))
    }

    /// Human rendering in descending powers: "x^4 - 3*x^2 + 1".
    pub fn pretty(&self) -> String {
        let n = self.degree();
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 && n > 0 {
                continue;
            }
            let p = n - k;
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag == 1 && p > 0 {
                String::new()
            } else {
                format!("{mag}")
            };
            let var_part = match p {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{p}"),
            };
            if !coeff_part.is_empty() && !var_part.is_empty() {
                out.push_str(&format!("{coeff_part}*{var_part}"));
            } else {
                out.push_str(&coeff_part);
                out.push_str(&var_part);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

/// A plain integer polynomial (not necessarily monic), coefficients stored
/// ascending. Used for recurrence residuals and polynomial identities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    // ascending: coeffs[k] multiplies x^k; no trailing high-degree zeros
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: i128) -> IntPoly {
        let mut p = IntPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn from_charpoly(p: &CharPoly) -> IntPoly {
        let mut coeffs: Vec<i128> = p.coeffs().to_vec();
        coeffs.reverse();
        let mut q = IntPoly { coeffs };
        q.normalize();
        q
    }

    pub fn into_charpoly(self) -> Result<CharPoly> {
        let mut coeffs = self.coeffs;
        coeffs.reverse();
        CharPoly::from_coeffs(coeffs)
    }

    pub fn add(&self, rhs: &IntPoly) -> Result<IntPoly> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![0i128; len];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(0);
            let b = rhs.coeffs.get(k).copied().unwrap_or(0);
            *c = a.checked_add(b).ok_or_else(overflow)?;
        }
        let mut p = IntPoly { coeffs };
        p.normalize();
        Ok(p)
    }

    pub fn sub(&self, rhs: &IntPoly) -> Result<IntPoly> {
        self.add(&rhs.scale(-1)?)
    }

    pub fn scale(&self, k: i128) -> Result<IntPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            coeffs.push(c.checked_mul(k).ok_or_else(overflow)?);
        }
        let mut p = IntPoly { coeffs };
        p.normalize();
        Ok(p)
    }

    /// Multiplication by x.
    pub fn shift_up(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i128];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn mul(&self, rhs: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or_else(overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(t).ok_or_else(overflow)?;
            }
        }
        let mut p = IntPoly { coeffs };
        p.normalize();
        Ok(p)
    }
}

// ===========================================================================
// Characteristic polynomial, route 1: Faddeev–LeVerrier in exact ℚ(ω)
// ===========================================================================

fn faddeev_leverrier(n: usize, ent: &[EInt]) -> Result<Vec<i128>> {
    // B_0 = I; for k = 1..n: A = N·B_{k-1}, c_k = -tr(A)/k, B_k = A + c_k I.
    // Every trace must be real and every division exact; anything else means
    // the arithmetic is corrupted and is reported as an error.
    let mut coeffs = vec![0i128; n + 1];
    coeffs[0] = 1;
    let mut b: Vec<EInt> = (0..n * n)
        .map(|i| if i % (n + 1) == 0 { EInt::ONE } else { EInt::ZERO })
        .collect();
    let mut a = vec![EInt::ZERO; n * n];
    for k in 1..=n {
        // a = ent * b
        for i in 0..n {
            for j in 0..n {
                let mut acc = EInt::ZERO;
                for l in 0..n {
                    let e = ent[i * n + l];
                    if e.is_zero() {
                        continue;
                    }
                    let t = e.checked_mul(b[l * n + j]).ok_or_else(overflow)?;
                    acc = acc.checked_add(t).ok_or_else(overflow)?;
                }
                a[i * n + j] = acc;
            }
        }
        let mut tr = EInt::ZERO;
        for i in 0..n {
            tr = tr.checked_add(a[i * n + i]).ok_or_else(overflow)?;
        }
        if tr.b != 0 {
            return Err(Error::Arithmetic(format!(
                "trace at step {k} has nonzero omega-part {}",
                tr.b
            )));
        }
        if tr.a % (k as i128) != 0 {
            return Err(Error::Arithmetic(format!(
                "trace {} not divisible by {k}",
                tr.a
            )));
        }
        let ck = -(tr.a / k as i128);
        coeffs[k] = ck;
        for i in 0..n {
            for j in 0..n {
                b[i * n + j] = if i == j {
                    a[i * n + j]
                        .checked_add(EInt { a: ck, b: 0 })
                        .ok_or_else(overflow)?
                } else {
                    a[i * n + j]
                };
            }
        }
    }
    Ok(coeffs)
}

/// Exact characteristic polynomial of a Hermitian matrix with Eisenstein
/// integer entries, by the Faddeev–LeVerrier recurrence. Coefficients are
/// asserted real and integral, not assumed.
pub fn charpoly_exact(nm: &NMatrix) -> Result<CharPoly> {
    let n = nm.n();
    let mut ent = Vec::with_capacity(n * n);
    for e in nm.entries.iter() {
        if !e.a.is_integer() || !e.b.is_integer() {
            return Err(Error::Usage(
                "charpoly_exact requires Eisenstein-integer entries".into(),
            ));
        }
        let a = e.a.to_integer().to_i128().ok_or_else(overflow)?;
        let b = e.b.to_integer().to_i128().ok_or_else(overflow)?;
        ent.push(EInt { a, b });
    }
    let coeffs = faddeev_leverrier(n, &ent)?;
    CharPoly::from_coeffs(coeffs)
}

/// Exact characteristic polynomial of a mixed graph (determinant route).
pub fn charpoly_of(m: &MixedGraph) -> Result<CharPoly> {
    let coeffs = faddeev_leverrier(m.n(), &eint_matrix(m))?;
    CharPoly::from_coeffs(coeffs)
}

// ===========================================================================
// Characteristic polynomial, route 2: elementary mixed subgraphs
// ===========================================================================

const SUBGRAPH_ROUTE_CAP: usize = 12;

/// Coefficient c_k as a signed sum over all k-vertex elementary mixed
/// subgraphs (disjoint unions of edges and mixed cycles): each edge component
/// contributes a factor −1 and each cycle a factor −(wt + w̄t), so positive,
/// negative, semi-positive and semi-negative cycles weigh −2, 2, −1, 1.
pub fn charpoly_subgraphs(m: &MixedGraph) -> Result<CharPoly> {
    let n = m.n();
    if n > SUBGRAPH_ROUTE_CAP {
        return Err(Error::Capacity(format!(
            "subgraph enumeration is capped at n={SUBGRAPH_ROUTE_CAP}, got n={n}"
        )));
    }
    let g = m.underlying();
    let adj: Vec<u16> = (0..n).map(|v| g.neighbors_mask(v) as u16).collect();
    let exp: Vec<Vec<u8>> = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| m.gain(s, t).map(|g| g.exponent()).unwrap_or(0))
                .collect()
        })
        .collect();
    let mut coeffs = vec![0i128; n + 1];

    // Depth-first over vertices in order; the lowest live vertex is either
    // excluded, matched by an edge, or the anchor of a cycle.
    struct Ctx<'a> {
        n: usize,
        adj: &'a [u16],
        exp: &'a [Vec<u8>],
        coeffs: &'a mut [i128],
    }
    fn recurse(ctx: &mut Ctx, pos: usize, avail: u16, covered: usize, factor: i128) {
        if pos == ctx.n {
            ctx.coeffs[covered] += factor;
            return;
        }
        if avail & (1 << pos) == 0 {
            recurse(ctx, pos + 1, avail, covered, factor);
            return;
        }
        // Vertex pos stays outside the subgraph.
        recurse(ctx, pos + 1, avail & !(1 << pos), covered, factor);
        // Vertex pos covered by a single edge {pos, w}.
        let mut ws = ctx.adj[pos] & avail;
        while ws != 0 {
            let w = ws.trailing_zeros() as usize;
            ws &= ws - 1;
            recurse(
                ctx,
                pos + 1,
                avail & !(1 << pos) & !(1 << w),
                covered + 2,
                -factor,
            );
        }
        // Vertex pos covered by a mixed cycle anchored at pos. Paths keep
        // their running weight exponent; direction duplicates are removed by
        // requiring first step < last step.
        fn cycle_dfs(
            ctx: &mut Ctx,
            pos: usize,
            avail: u16,
            covered: usize,
            factor: i128,
            first: usize,
            cur: usize,
            path_mask: u16,
            path_len: usize,
            wexp: u8,
        ) {
            if path_len >= 3 && ctx.adj[cur] & (1 << pos) != 0 && first < cur {
                let total = T6::new((wexp + ctx.exp[cur][pos]) as i64);
                let cycle_factor = -(total.double_real_part() as i128);
                recurse(
                    ctx,
                    pos + 1,
                    avail & !path_mask,
                    covered + path_len,
                    factor * cycle_factor,
                );
            }
            let mut next = ctx.adj[cur] & avail & !path_mask;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                let wexp_next = (wexp + ctx.exp[cur][w]) % 6;
                cycle_dfs(
                    ctx,
                    pos,
                    avail,
                    covered,
                    factor,
                    first,
                    w,
                    path_mask | (1 << w),
                    path_len + 1,
                    wexp_next,
                );
            }
        }
        let mut firsts = ctx.adj[pos] & avail & !(1 << pos);
        while firsts != 0 {
            let f = firsts.trailing_zeros() as usize;
            firsts &= firsts - 1;
            let wexp0 = ctx.exp[pos][f];
            cycle_dfs(
                ctx,
                pos,
                avail,
                covered,
                factor,
                f,
                f,
                (1 << pos) | (1 << f),
                2,
                wexp0,
            );
        }
    }

    let mut ctx = Ctx {
        n,
        adj: &adj,
        exp: &exp,
        coeffs: &mut coeffs,
    };
    let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
    recurse(&mut ctx, 0, full, 0, 1);
    CharPoly::from_coeffs(coeffs)
}

// ===========================================================================
// Deletion recurrences
// ===========================================================================

/// Residual of the vertex deletion recurrence at u:
/// P(M) − x·P(M−u) + Σ_{v~u} P(M−v−u) + Σ_{Z∋u} (wt(Z)+w̄t(Z))·P(M−V(Z)).
/// The contract is that this is identically zero.
pub fn vertex_recurrence_residual(m: &MixedGraph, u: usize) -> Result<IntPoly> {
    if u >= m.n() {
        return Err(Error::Usage(format!("vertex {u} out of range")));
    }
    let p = IntPoly::from_charpoly(&charpoly_of(m)?);
    let pu = IntPoly::from_charpoly(&charpoly_of(&m.delete_vertex(u))?);
    let mut rhs = pu.shift_up();
    for v in m.underlying().neighbors(u) {
        let pvu = IntPoly::from_charpoly(&charpoly_of(&m.delete_vertices(&[u, v]))?);
        rhs = rhs.sub(&pvu)?;
    }
    for z in cycles::enumerate_cycles(&m.underlying(), m.n()) {
        if !z.vertices().contains(&u) {
            continue;
        }
        let w = cycles::cycle_weight(m, &z)?;
        let pz = IntPoly::from_charpoly(&charpoly_of(&m.delete_vertices(z.vertices()))?);
        rhs = rhs.sub(&pz.scale(w.double_real_part() as i128)?)?;
    }
    p.sub(&rhs)
}

/// Residual of the edge deletion recurrence at uv:
/// P(M) − P(M−uv) + P(M−u−v) + Σ_{Z∋uv} (wt(Z)+w̄t(Z))·P(M−V(Z)).
pub fn edge_recurrence_residual(m: &MixedGraph, u: usize, v: usize) -> Result<IntPoly> {
    if !m.has_edge(u, v) {
        return Err(Error::Usage(format!("({u},{v}) is not an edge")));
    }
    let p = IntPoly::from_charpoly(&charpoly_of(m)?);
    let p_del = IntPoly::from_charpoly(&charpoly_of(&m.delete_edge(u, v))?);
    let p_uv = IntPoly::from_charpoly(&charpoly_of(&m.delete_vertices(&[u, v]))?);
    let mut rhs = p_del.sub(&p_uv)?;
    for z in cycles::enumerate_cycles(&m.underlying(), m.n()) {
        let vs = z.vertices();
        let iu = vs.iter().position(|&x| x == u);
        let iv = vs.iter().position(|&x| x == v);
        let (iu, iv) = match (iu, iv) {
            (Some(a), Some(b)) => (a, b),
            _ => continue,
        };
        // The cycle must traverse the edge uv itself.
        let len = vs.len();
        let adjacent_on_cycle =
            (iu + 1) % len == iv || (iv + 1) % len == iu;
        if !adjacent_on_cycle {
            continue;
        }
        let w = cycles::cycle_weight(m, &z)?;
        let pz = IntPoly::from_charpoly(&charpoly_of(&m.delete_vertices(vs))?);
        rhs = rhs.sub(&pz.scale(w.double_real_part() as i128)?)?;
    }
    p.sub(&rhs)
}

// ===========================================================================
// Numeric eigenvalues: cyclic Jacobi on the real 2n×2n embedding
// ===========================================================================

/// Real eigenvalues of a mixed graph, sorted descending.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Diagonalizes N = A + iB via the symmetric embedding [[A, −B], [B, A]]
/// with cyclic Jacobi rotations, then collapses the doubled spectrum by
/// sorted adjacent pairing.
pub fn eigenvalues(nm: &NMatrix, tol: f64) -> Result<Spectrum> {
    if tol <= 0.0 {
        return Err(Error::Usage("tolerance must be positive".into()));
    }
    let n = nm.n();
    if n == 0 {
        return Ok(Spectrum {
            eigenvalues: vec![],
            tolerance: tol,
        });
    }
    let dim = 2 * n;
    let mut a = vec![0.0f64; dim * dim];
    for s in 0..n {
        for t in 0..n {
            let (re, im) = nm.entry(s, t).to_complex_f64();
            a[s * dim + t] = re;
            a[s * dim + (t + n)] = -im;
            a[(s + n) * dim + t] = im;
            a[(s + n) * dim + (t + n)] = re;
        }
    }

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..dim {
            for q in (p + 1)..dim {
                s += a[p * dim + q] * a[p * dim + q];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off(&a) < tol {
            converged = true;
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                if apq.abs() < tol / (dim as f64 * dim as f64) {
                    continue;
                }
                let app = a[p * dim + p];
                let aqq = a[q * dim + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..dim {
                    let akp = a[k * dim + p];
                    let akq = a[k * dim + q];
                    a[k * dim + p] = c * akp - s * akq;
                    a[k * dim + q] = s * akp + c * akq;
                }
                for k in 0..dim {
                    let apk = a[p * dim + k];
                    let aqk = a[q * dim + k];
                    a[p * dim + k] = c * apk - s * aqk;
                    a[q * dim + k] = s * apk + c * aqk;
                }
            }
        }
    }
    if !converged && off(&a) >= tol {
        return Err(Error::Numeric(format!(
            "Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps"
        )));
    }
    let mut diag: Vec<f64> = (0..dim).map(|k| a[k * dim + k]).collect();
    diag.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    let eigenvalues: Vec<f64> = (0..n).map(|k| (diag[2 * k] + diag[2 * k + 1]) / 2.0).collect();
    Ok(Spectrum {
        eigenvalues,
        tolerance: tol,
    })
}

/// Numeric spectrum of a mixed graph with the default 1e-12 tolerance.
pub fn eigenvalues_of(m: &MixedGraph) -> Result<Spectrum> {
    eigenvalues(&build_nmatrix(m), 1e-12)
}

/// max(|λ_1|, |λ_n|); empty spectra are a usage error.
pub fn spectral_radius(s: &Spectrum) -> Result<f64> {
    match (s.eigenvalues.first(), s.eigenvalues.last()) {
        (Some(hi), Some(lo)) => Ok(hi.abs().max(lo.abs())),
        _ => Err(Error::Usage("spectral radius of an empty spectrum".into())),
    }
}

// ===========================================================================
// Exact root location: quadratic surds and Sturm sequences
// ===========================================================================

/// An exactly representable endpoint p + q√d with rational p, q and a
/// square-free radicand (d = 0 encodes a rational point).
#[derive(Clone, PartialEq, Debug)]
pub struct QuadraticSurd {
    pub p: BigRational,
    pub q: BigRational,
    pub d: u64,
}

fn is_square_free(d: u64) -> bool {
    let mut d = d;
    let mut f = 2u64;
    while f * f <= d {
        if d % (f * f) == 0 {
            return false;
        }
        while d % f == 0 {
            d /= f;
        }
        f += 1;
    }
    true
}

impl QuadraticSurd {
    pub fn new(p: BigRational, q: BigRational, d: u64) -> Result<Self> {
        if d != 0 && !is_square_free(d) {
            return Err(Error::Usage(format!("radicand {d} is not square-free")));
        }
        let d = if q.is_zero() { 0 } else { d };
        Ok(QuadraticSurd { p, q, d })
    }

    pub fn from_integer(k: i64) -> Self {
        QuadraticSurd {
            p: BigRational::from_integer(BigInt::from(k)),
            q: BigRational::zero(),
            d: 0,
        }
    }

    /// √d for square-free d.
    pub fn sqrt(d: u64) -> Result<Self> {
        QuadraticSurd::new(
            BigRational::zero(),
            BigRational::one(),
            d,
        )
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd {
            p: -self.p.clone(),
            q: -self.q.clone(),
            d: self.d,
        }
    }

    /// Exact sign in {-1, 0, 1}.
    pub fn sign(&self) -> i8 {
        sign_p_plus_q_sqrt(&self.p, &self.q, self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p + q * (self.d as f64).sqrt()
    }

    /// Exact comparison, valid across different radicands.
    pub fn lt(&self, other: &QuadraticSurd) -> bool {
        self.cmp_exact(other) == std::cmp::Ordering::Less
    }

    pub fn cmp_exact(&self, other: &QuadraticSurd) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let a = &self.p - &other.p;
        // sign of a + q1*sqrt(d1) - q2*sqrt(d2)
        let s = if self.d == other.d || self.q.is_zero() || other.q.is_zero() {
            let (d, q1, q2) = if self.q.is_zero() {
                (other.d, BigRational::zero(), other.q.clone())
            } else if other.q.is_zero() || self.d == other.d {
                (self.d, self.q.clone(), other.q.clone())
            } else {
                unreachable!()
            };
            sign_p_plus_q_sqrt(&a, &(q1 - q2), d)
        } else {
            // Compare L = a + q1√d1 against R = q2√d2 by signed squaring.
            let sl = sign_p_plus_q_sqrt(&a, &self.q, self.d);
            let sr = sign_p_plus_q_sqrt(&BigRational::zero(), &other.q, other.d);
            if sl != sr {
                if sl > sr {
                    1
                } else {
                    -1
                }
            } else if sl == 0 {
                0
            } else {
                // Both sides share sign s; compare squares and flip for s < 0.
                let d1 = BigRational::from_integer(BigInt::from(self.d));
                let d2 = BigRational::from_integer(BigInt::from(other.d));
                let p2 = &a * &a + &self.q * &self.q * d1 - &other.q * &other.q * d2;
                let q2 = BigRational::from_integer(BigInt::from(2)) * &a * &self.q;
                let t = sign_p_plus_q_sqrt(&p2, &q2, self.d);
                if sl > 0 {
                    t
                } else {
                    -t
                }
            }
        };
        match s {
            x if x > 0 => Ordering::Greater,
            0 => Ordering::Equal,
            _ => Ordering::Less,
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else if self.p.is_zero() {
            write!(f, "{}*sqrt({})", self.q, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.q, self.d)
        }
    }
}

fn sign_rat(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_p_plus_q_sqrt(p: &BigRational, q: &BigRational, d: u64) -> i8 {
    if q.is_zero() || d == 0 {
        return sign_rat(p);
    }
    if p.is_zero() {
        return sign_rat(q);
    }
    let sp = sign_rat(p);
    let sq = sign_rat(q);
    if sp == sq {
        return sp;
    }
    // Opposite signs: compare p² against q²·d; the larger magnitude wins.
    let lhs = p * p;
    let rhs = q * q * BigRational::from_integer(BigInt::from(d));
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => sp,
        std::cmp::Ordering::Less => sq,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Rational-coefficient polynomial machinery backing the Sturm decisions.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct QPoly {
    // ascending coefficients, no trailing zeros
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn from_charpoly(p: &CharPoly) -> QPoly {
        let mut c: Vec<BigRational> = p
            .coeffs()
            .iter()
            .rev()
            .map(|&k| BigRational::from_integer(BigInt::from(k)))
            .collect();
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn normalize(&mut self) {
        while self.c.last().map(|x| x.is_zero()).unwrap_or(false) {
            self.c.pop();
        }
    }

    /// Divides by the absolute value of the leading coefficient; keeps signs.
    fn sign_normalize(&mut self) {
        if let Some(lead) = self.c.last().cloned() {
            let a = lead.abs();
            for x in &mut self.c {
                *x /= a.clone();
            }
        }
    }

    pub fn derivative(&self) -> QPoly {
        if self.c.len() <= 1 {
            return QPoly { c: vec![] };
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, x)| x * BigRational::from_integer(BigInt::from(k)))
            .collect();
        QPoly { c }
    }

    pub fn rem(&self, div: &QPoly) -> QPoly {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let dl = div.c.last().expect("nonzero divisor").clone();
        let dd = div.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let f = r.c.last().expect("nonzero remainder") / &dl;
            for k in 0..div.c.len() {
                let t = &div.c[k] * &f;
                r.c[k + shift] -= t;
            }
            r.normalize();
        }
        r
    }

    pub fn div_exact(&self, div: &QPoly) -> QPoly {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let dl = div.c.last().expect("nonzero divisor").clone();
        let dd = div.degree();
        let mut q = vec![BigRational::zero(); self.c.len().saturating_sub(dd)];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let f = r.c.last().expect("nonzero remainder") / &dl;
            q[shift] = f.clone();
            for k in 0..div.c.len() {
                let t = &div.c[k] * &f;
                r.c[k + shift] -= t;
            }
            r.normalize();
        }
        assert!(r.is_zero(), "division was not exact");
        let mut out = QPoly { c: q };
        out.normalize();
        out
    }

    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        x.sign_normalize();
        y.sign_normalize();
        while !y.is_zero() {
            let mut r = x.rem(&y);
            r.sign_normalize();
            x = y;
            y = r;
        }
        // Monic gcd.
        if let Some(lead) = x.c.last().cloned() {
            for c in &mut x.c {
                *c /= lead.clone();
            }
        }
        x
    }

    pub fn square_free_part(&self) -> QPoly {
        let d = self.derivative();
        if d.is_zero() {
            return self.clone();
        }
        let g = QPoly::gcd(self, &d);
        if g.degree() == 0 {
            self.clone()
        } else {
            self.div_exact(&g)
        }
    }

    /// Square-free decomposition: returns (factor, multiplicity) pairs with
    /// the factors square-free and pairwise coprime.
    pub fn square_free_decomposition(&self) -> Vec<(QPoly, usize)> {
        // Yun's algorithm.
        let mut out = Vec::new();
        let f = self.clone();
        if f.degree() == 0 {
            return out;
        }
        let df = f.derivative();
        let mut a = QPoly::gcd(&f, &df);
        let mut b = f.div_exact(&a);
        let mut c = df.div_exact(&a);
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if b.degree() == 0 {
                break;
            }
            a = QPoly::gcd(&b, &d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            i += 1;
        }
        out
    }

    fn sub(&self, rhs: &QPoly) -> QPoly {
        let len = self.c.len().max(rhs.c.len());
        let mut c = vec![BigRational::zero(); len];
        for (k, x) in c.iter_mut().enumerate() {
            let a = self.c.get(k).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.c.get(k).cloned().unwrap_or_else(BigRational::zero);
            *x = a - b;
        }
        let mut p = QPoly { c };
        p.normalize();
        p
    }

    /// Evaluates at p + q√d as a pair (A, B) meaning A + B√d.
    pub fn eval_surd(&self, at: &QuadraticSurd) -> (BigRational, BigRational) {
        let d = BigRational::from_integer(BigInt::from(at.d));
        let mut av = BigRational::zero();
        let mut bv = BigRational::zero();
        for coeff in self.c.iter().rev() {
            // (A + B√d)(p + q√d) + c = (Ap + Bqd + c) + (Aq + Bp)√d
            let na = &av * &at.p + &bv * &at.q * &d + coeff;
            let nb = &av * &at.q + &bv * &at.p;
            av = na;
            bv = nb;
        }
        (av, bv)
    }

    pub fn sign_at(&self, at: &QuadraticSurd) -> i8 {
        let (a, b) = self.eval_surd(at);
        sign_p_plus_q_sqrt(&a, &b, at.d)
    }
}

// ---------------------------------------------------------------------------
// Integer Sturm fast path: primitive pseudo-remainder sequences on i128 with
// checked arithmetic. Any overflow aborts the fast path; callers fall back to
// the BigRational engine, so exactness is never at stake.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct IPoly(Vec<i128>); // ascending, no trailing zeros

impl IPoly {
    fn from_charpoly(p: &CharPoly) -> IPoly {
        let mut c: Vec<i128> = p.coeffs().iter().rev().copied().collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        IPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn normalize(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    fn derivative(&self) -> Option<IPoly> {
        if self.0.len() <= 1 {
            return Some(IPoly(vec![]));
        }
        let mut c = Vec::with_capacity(self.0.len() - 1);
        for (k, &x) in self.0.iter().enumerate().skip(1) {
            c.push(x.checked_mul(k as i128)?);
        }
        Some(IPoly(c))
    }

    fn content(&self) -> i128 {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        self.0.iter().fold(0i128, |acc, &x| gcd(acc, x)).max(1)
    }

    fn primitive(mut self) -> IPoly {
        let c = self.content();
        if c > 1 {
            for x in &mut self.0 {
                *x /= c;
            }
        }
        self
    }

    /// Pseudo-remainder scaled by a positive multiplier, so its sign pattern
    /// matches the true remainder's.
    fn pseudo_rem_signed(&self, div: &IPoly) -> Option<IPoly> {
        let mut r = self.clone();
        let lead = *div.0.last()?;
        let dd = div.degree();
        let mut negate = false;
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let top = *r.0.last().expect("nonzero");
            // r <- lead*r − top*x^shift*div; track sign of the multiplier.
            let mut next = vec![0i128; r.0.len()];
            for (k, &x) in r.0.iter().enumerate() {
                next[k] = x.checked_mul(lead)?;
            }
            for (k, &x) in div.0.iter().enumerate() {
                let t = x.checked_mul(top)?;
                next[k + shift] = next[k + shift].checked_sub(t)?;
            }
            if lead < 0 {
                negate = !negate;
            }
            r = IPoly(next);
            r.normalize();
            // Strip content each step (positive factor, sign-safe) to keep
            // the numbers small.
            r = r.primitive();
        }
        if negate {
            for x in &mut r.0 {
                *x = x.checked_neg()?;
            }
        }
        Some(r)
    }

    fn gcd(a: &IPoly, b: &IPoly) -> Option<IPoly> {
        let mut x = a.clone().primitive();
        let mut y = b.clone().primitive();
        while !y.is_zero() {
            let r = x.pseudo_rem_signed(&y)?.primitive();
            x = y;
            y = r;
        }
        if let Some(&lead) = x.0.last() {
            if lead < 0 {
                for c in &mut x.0 {
                    *c = -*c;
                }
            }
        }
        Some(x)
    }

    /// Exact division, valid when div | self over the integers.
    fn div_exact(&self, div: &IPoly) -> Option<IPoly> {
        let mut r = self.clone();
        let lead = *div.0.last()?;
        let dd = div.degree();
        let mut q = vec![0i128; self.0.len().saturating_sub(dd)];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let top = *r.0.last().expect("nonzero");
            if top % lead != 0 {
                return None;
            }
            let f = top / lead;
            q[shift] = f;
            for (k, &x) in div.0.iter().enumerate() {
                let t = x.checked_mul(f)?;
                r.0[k + shift] = r.0[k + shift].checked_sub(t)?;
            }
            r.normalize();
        }
        r.is_zero().then(|| {
            let mut out = IPoly(q);
            out.normalize();
            out
        })
    }

    fn sub(&self, rhs: &IPoly) -> Option<IPoly> {
        let len = self.0.len().max(rhs.0.len());
        let mut c = vec![0i128; len];
        for (k, x) in c.iter_mut().enumerate() {
            let a = self.0.get(k).copied().unwrap_or(0);
            let b = rhs.0.get(k).copied().unwrap_or(0);
            *x = a.checked_sub(b)?;
        }
        let mut p = IPoly(c);
        p.normalize();
        Some(p)
    }

    /// Yun decomposition into (square-free factor, multiplicity) pairs.
    fn square_free_decomposition(&self) -> Option<Vec<(IPoly, usize)>> {
        let f = self.clone().primitive();
        if f.degree() == 0 {
            return Some(vec![]);
        }
        let df = f.derivative()?;
        let mut a = IPoly::gcd(&f, &df)?;
        let mut b = f.div_exact(&a)?;
        let mut c = df.div_exact(&a)?;
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            if b.degree() == 0 {
                break;
            }
            let d = c.sub(&b.derivative()?)?;
            a = IPoly::gcd(&b, &d)?;
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a)?;
            c = d.div_exact(&a)?;
            i += 1;
        }
        Some(out)
    }

    /// Evaluation at p + q√d (integer p, q) as an exact pair (A, B).
    fn eval_surd(&self, p: i128, q: i128, d: i128) -> Option<(i128, i128)> {
        let mut av: i128 = 0;
        let mut bv: i128 = 0;
        for &coeff in self.0.iter().rev() {
            let na = av
                .checked_mul(p)?
                .checked_add(bv.checked_mul(q)?.checked_mul(d)?)?
                .checked_add(coeff)?;
            let nb = av.checked_mul(q)?.checked_add(bv.checked_mul(p)?)?;
            av = na;
            bv = nb;
        }
        Some((av, bv))
    }

    fn sign_surd(&self, p: i128, q: i128, d: i128) -> Option<i8> {
        let (a, b) = self.eval_surd(p, q, d)?;
        if b == 0 || d == 0 {
            return Some(a.signum() as i8);
        }
        if a == 0 {
            return Some(b.signum() as i8);
        }
        if a.signum() == b.signum() {
            return Some(a.signum() as i8);
        }
        let lhs = a.checked_mul(a)?;
        let rhs = b.checked_mul(b)?.checked_mul(d)?;
        Some(match lhs.cmp(&rhs) {
            std::cmp::Ordering::Greater => a.signum() as i8,
            std::cmp::Ordering::Less => b.signum() as i8,
            std::cmp::Ordering::Equal => 0,
        })
    }
}

fn isturm_chain(square_free: &IPoly) -> Option<Vec<IPoly>> {
    let mut chain = vec![square_free.clone(), square_free.derivative()?];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let mut r = chain[k - 2].pseudo_rem_signed(&chain[k - 1])?;
        if r.is_zero() {
            break;
        }
        for c in &mut r.0 {
            *c = c.checked_neg()?;
        }
        r = r.primitive();
        chain.push(r);
    }
    Some(chain)
}

fn ivariations(chain: &[IPoly], p: i128, q: i128, d: i128) -> Option<usize> {
    let mut count = 0;
    let mut prev: i8 = 0;
    for poly in chain {
        let s = poly.sign_surd(p, q, d)?;
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    Some(count)
}

/// Fast exact verdicts "all eigenvalues in (−√alpha2, √alpha2)" for
/// alpha2 = 2, 3, 4 at once. None means the i128 path overflowed and the
/// caller should use the BigRational engine.
pub(crate) fn radius_thresholds_i128(p: &CharPoly) -> Option<[bool; 3]> {
    let n = p.degree();
    let f = IPoly::from_charpoly(p);
    let decomp = f.square_free_decomposition()?;
    let chains: Vec<(Vec<IPoly>, usize)> = decomp
        .into_iter()
        .map(|(factor, mult)| isturm_chain(&factor).map(|c| (c, mult)))
        .collect::<Option<_>>()?;
    let mut out = [false; 3];
    for (slot, alpha2) in [2i128, 3, 4].into_iter().enumerate() {
        // Endpoint ±√alpha2 as (p, q, d) with d = 0 for the rational case.
        let (ep, eq, ed) = if alpha2 == 4 { (2, 0, 0) } else { (0, 1, alpha2) };
        if f.sign_surd(ep, eq, ed)? == 0 || f.sign_surd(-ep, -eq, ed)? == 0 {
            out[slot] = false;
            continue;
        }
        let mut inside = 0usize;
        for (chain, mult) in &chains {
            let v_lo = ivariations(chain, -ep, -eq, ed)?;
            let v_hi = ivariations(chain, ep, eq, ed)?;
            inside += mult * v_lo.saturating_sub(v_hi);
        }
        out[slot] = inside == n;
    }
    Some(out)
}

/// Exact verdicts at all three thresholds, taking the integer fast path when
/// it fits in machine words.
pub fn radius_thresholds(m: &MixedGraph) -> Result<[bool; 3]> {
    let p = charpoly_of(m)?;
    if let Some(fast) = radius_thresholds_i128(&p) {
        return Ok(fast);
    }
    let mut out = [false; 3];
    for (slot, alpha2) in [2u32, 3, 4].into_iter().enumerate() {
        out[slot] = radius_strictly_below(m, alpha2)?;
    }
    Ok(out)
}

pub(crate) fn sturm_chain(square_free: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![square_free.clone(), square_free.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let mut r = chain[k - 2].rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        for c in &mut r.c {
            *c = -c.clone();
        }
        r.sign_normalize();
        chain.push(r);
    }
    chain
}

fn variations(chain: &[QPoly], at: &QuadraticSurd) -> usize {
    let mut count = 0;
    let mut prev: i8 = 0;
    for p in chain {
        let s = p.sign_at(at);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Number of distinct real roots of P in the half-open interval (lo, hi],
/// decided exactly by a Sturm chain of the square-free part. Multiplicities
/// are available separately through the square-free decomposition.
pub fn count_roots_in(p: &CharPoly, lo: &QuadraticSurd, hi: &QuadraticSurd) -> Result<usize> {
    if !lo.lt(hi) {
        return Err(Error::Usage("count_roots_in requires lo < hi".into()));
    }
    let q = QPoly::from_charpoly(p).square_free_part();
    if q.degree() == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&q);
    let vl = variations(&chain, lo);
    let vh = variations(&chain, hi);
    Ok(vl.saturating_sub(vh))
}

/// Roots strictly inside the open interval (lo, hi), counted with
/// multiplicity via the square-free decomposition.
pub fn count_roots_with_multiplicity_open(
    p: &CharPoly,
    lo: &QuadraticSurd,
    hi: &QuadraticSurd,
) -> Result<usize> {
    if !lo.lt(hi) {
        return Err(Error::Usage("interval endpoints must satisfy lo < hi".into()));
    }
    let q = QPoly::from_charpoly(p);
    let mut total = 0usize;
    for (factor, mult) in q.square_free_decomposition() {
        let chain = sturm_chain(&factor);
        let mut c = variations(&chain, lo).saturating_sub(variations(&chain, hi));
        if factor.sign_at(hi) == 0 {
            c -= 1;
        }
        total += mult * c;
    }
    Ok(total)
}

/// Multiplicity of t as a root of P: successive exact derivative evaluations.
pub fn multiplicity_at(p: &CharPoly, t: &QuadraticSurd) -> usize {
    let mut q = QPoly::from_charpoly(p);
    let mut mult = 0;
    while !q.is_zero() && q.sign_at(t) == 0 {
        mult += 1;
        q = q.derivative();
    }
    mult
}

/// Exact decision of "every eigenvalue of M lies in (−√alpha2, √alpha2)",
/// for alpha2 in {2, 3, 4}. Boundary cases are settled by exact surd signs
/// and multiplicities by the square-free chain, so ρ < 2 and ρ = 2 are
/// reliably distinguished.
pub fn radius_strictly_below(m: &MixedGraph, alpha2: u32) -> Result<bool> {
    if !matches!(alpha2, 2 | 3 | 4) {
        return Err(Error::Usage(format!("alpha2 must be 2, 3 or 4, got {alpha2}")));
    }
    let hi = if alpha2 == 4 {
        QuadraticSurd::from_integer(2)
    } else {
        QuadraticSurd::sqrt(alpha2 as u64)?
    };
    let lo = hi.neg();
    let n = m.n();
    if n == 0 {
        return Ok(true);
    }
    let p = charpoly_of(m)?;
    let q = QPoly::from_charpoly(&p);
    if q.sign_at(&hi) == 0 || q.sign_at(&lo) == 0 {
        return Ok(false);
    }
    // No boundary roots; roots are summed with multiplicity over the
    // square-free decomposition.
    let inside = count_roots_with_multiplicity_open(&p, &lo, &hi)?;
    Ok(inside == n)
}

/// Restatement of Σλ² = 2m through Newton's identity with c_1 = 0: the x^{n−2}
/// coefficient must equal −m.
pub fn trace_square_check(m: &MixedGraph) -> bool {
    match charpoly_of(m) {
        Ok(p) => {
            if m.n() < 2 {
                m.m() == 0
            } else {
                p.coeffs()[1] == 0 && p.coeffs()[2] == -(m.m() as i128)
            }
        }
        Err(_) => false,
    }
}
