//! Exact verification of the SRNT axioms and of the structure of second
//! subconstituents on concrete graphs.
//!
//! Fix a vertex `v` and split the vertex set into `{v}`, the neighbours
//! `X₁(v)` and the vertices at distance two `X₂(v)`. With `B` the
//! `X₂ × X₁` incidence matrix and `A₂` the adjacency matrix of `X₂(v)`,
//! every SRNT graph satisfies
//!
//! ```text
//! BᵀB = (c - 1)J + (k - c)I
//! A₂² + cA₂ - (k - c)I + BBᵀ = cJ
//! A₂B = -cB + cJ
//! ```
//!
//! and the spectrum of `A₂` lies in `{k - c, λ₁, λ₂, -c}`. Everything here
//! is integer matrix arithmetic; no eigensolver is involved.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Int, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::IntMatrix;
use crate::params::{derive_from_kc, Condition, ParamSet};

/// First failing SRNT axiom, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    NotRegular {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    /// Adjacent `u`, `v` with a common neighbour.
    Triangle {
        u: usize,
        v: usize,
        common: usize,
    },
    /// No pair of distinct non-adjacent vertices exists.
    Complete,
    NonConstantC {
        u: usize,
        v: usize,
        expected: usize,
        found: usize,
    },
    Disconnected {
        vertex: usize,
    },
    Bipartite,
    DegreeTooSmall {
        k: usize,
    },
    /// `c = 0` or `c >= k`.
    ParameterRange {
        k: usize,
        c: usize,
    },
    /// The combinatorial axioms hold but the parameters are infeasible.
    Infeasible {
        k: usize,
        c: usize,
        failures: Vec<Condition>,
    },
    Arithmetic(Error),
}

impl Violation {
    /// Short stable name of the violated axiom.
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::Empty => "empty",
            Violation::NotRegular { .. } => "regular",
            Violation::Triangle { .. } => "triangle-free",
            Violation::Complete => "non-complete",
            Violation::NonConstantC { .. } => "constant-c",
            Violation::Disconnected { .. } => "connected",
            Violation::Bipartite => "non-bipartite",
            Violation::DegreeTooSmall { .. } => "degree-at-least-3",
            Violation::ParameterRange { .. } => "k-greater-than-c",
            Violation::Infeasible { .. } => "feasible-parameters",
            Violation::Arithmetic(_) => "arithmetic",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.axiom())?;
        match self {
            Violation::Empty => write!(f, "graph has no vertices"),
            Violation::NotRegular { vertex, expected, found } => {
                write!(f, "vertex {vertex} has degree {found}, vertex 0 has {expected}")
            }
            Violation::Triangle { u, v, common } => {
                write!(f, "adjacent vertices {u} and {v} have {common} common neighbours")
            }
            Violation::Complete => write!(f, "no two distinct vertices are non-adjacent"),
            Violation::NonConstantC { u, v, expected, found } => write!(
                f,
                "non-adjacent vertices {u} and {v} have {found} common neighbours, expected {expected}"
            ),
            Violation::Disconnected { vertex } => {
                write!(f, "vertex {vertex} is not reachable from vertex 0")
            }
            Violation::Bipartite => write!(f, "graph admits a proper 2-colouring"),
            Violation::DegreeTooSmall { k } => write!(f, "degree {k} is less than 3"),
            Violation::ParameterRange { k, c } => write!(f, "c = {c} is not in 1..{k}"),
            Violation::Infeasible { k, c, failures } => {
                write!(f, "({k}, {c}) fails")?;
                for cond in failures {
                    write!(f, " {cond}")?;
                }
                Ok(())
            }
            Violation::Arithmetic(e) => write!(f, "{e}"),
        }
    }
}

/// Evidence that a graph is SRNT.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrntCertificate {
    pub k: usize,
    pub c: usize,
    pub n: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub params: ParamSet,
}

fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        stack.push(start);
        while let Some(u) = stack.pop() {
            let cu = colour[u] == Some(true);
            for w in g.neighbours(u) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        stack.push(w);
                    }
                    Some(cw) if cw == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Check the SRNT axioms in order: regular, triangle-free, constant `c`,
/// connected, non-bipartite, `k >= 3`, `1 <= c < k`, feasible parameters.
pub fn verify_srnt(g: &Graph) -> core::result::Result<SrntCertificate, Violation> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Violation::Empty);
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) != k) {
        return Err(Violation::NotRegular {
            vertex,
            expected: k,
            found: g.degree(vertex),
        });
    }
    for (u, v) in g.edges() {
        let common = g.common_neighbours(u, v);
        if common != 0 {
            return Err(Violation::Triangle { u, v, common });
        }
    }
    let mut c = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.is_adjacent(u, v) {
                continue;
            }
            let found = g.common_neighbours(u, v);
            match c {
                None => c = Some(found),
                Some(expected) if expected != found => {
                    return Err(Violation::NonConstantC {
                        u,
                        v,
                        expected,
                        found,
                    })
                }
                Some(_) => {}
            }
        }
    }
    let Some(c) = c else {
        return Err(Violation::Complete);
    };
    if let Some(vertex) = g.distances_from(0).iter().position(Option::is_none) {
        return Err(Violation::Disconnected { vertex });
    }
    if is_bipartite(g) {
        return Err(Violation::Bipartite);
    }
    if k < 3 {
        return Err(Violation::DegreeTooSmall { k });
    }
    if c < 1 || c >= k {
        return Err(Violation::ParameterRange { k, c });
    }
    let report = derive_from_kc(k as Int, c as Int).map_err(Violation::Arithmetic)?;
    match report.params {
        Some(params) => Ok(SrntCertificate {
            k,
            c,
            n,
            connected: true,
            bipartite: false,
            params,
        }),
        None => Err(Violation::Infeasible {
            k,
            c,
            failures: report.failures,
        }),
    }
}

fn small(x: Int) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// `AJ = kJ` and `A² + cA - (k - c)I = cJ`, entrywise.
pub fn matrix_identity_check(g: &Graph, k: Int, c: Int) -> Result<bool> {
    let (k, c) = (small(k)?, small(c)?);
    let n = g.vertex_count();
    let a = g.adjacency_matrix();
    let ones = IntMatrix::ones(n, n);
    if g.mul_matrix(&ones)? != ones.scale(k)? {
        return Ok(false);
    }
    let lhs = g.mul_matrix(&a)?.add(&a.scale(c)?)?.shift(
        k.checked_sub(c)
            .ok_or(Error::Overflow)?
            .checked_neg()
            .ok_or(Error::Overflow)?,
    )?;
    Ok(lhs == ones.scale(c)?)
}

/// The partition `{v} ∪ X₁(v) ∪ X₂(v)` and the blocks `B`, `A₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubconstituentDecomposition {
    pub base_vertex: usize,
    /// Neighbours of the base vertex, ascending.
    pub x1: Vec<usize>,
    /// Vertices at distance two, ascending. Local vertex `i` of `a2` and
    /// row `i` of `b` correspond to `x2[i]`.
    pub x2: Vec<usize>,
    /// `|x2| × |x1|` incidence between distance-two vertices and neighbours.
    pub b: IntMatrix,
    pub a2: Graph,
}

pub fn subconstituent(g: &Graph, v: usize) -> Result<SubconstituentDecomposition> {
    let dist = g.distances_from(v);
    let mut x1 = Vec::new();
    let mut x2 = Vec::new();
    for (w, d) in dist.iter().enumerate() {
        match d {
            Some(0) => {}
            Some(1) => x1.push(w),
            Some(2) => x2.push(w),
            _ => return Err(Error::NotDiameterTwo { base: v, vertex: w }),
        }
    }
    let b = IntMatrix::from_fn(x2.len(), x1.len(), |i, j| {
        i64::from(g.is_adjacent(x2[i], x1[j]))
    });
    let a2 = g.induced(&x2);
    Ok(SubconstituentDecomposition {
        base_vertex: v,
        x1,
        x2,
        b,
        a2,
    })
}

/// The three block identities relating `B` and `A₂`.
pub fn block_identities_check(dec: &SubconstituentDecomposition, k: Int, c: Int) -> Result<bool> {
    let (k, c) = (small(k)?, small(c)?);
    let ell = dec.a2.vertex_count();
    let kk = dec.x1.len();
    if (dec.b.rows(), dec.b.cols()) != (ell, k as usize) || kk != k as usize {
        return Err(Error::DimensionMismatch {
            expected: (ell, k as usize),
            found: (dec.b.rows(), dec.b.cols()),
        });
    }
    let bt = dec.b.transpose();

    // BᵀB = (c - 1)J + (k - c)I: diagonal k - 1, off-diagonal c - 1.
    let eq1 = bt.mul(&dec.b)? == IntMatrix::ones(kk, kk).scale(c - 1)?.shift(k - c)?;

    // A₂² + cA₂ - (k - c)I + BBᵀ = cJ
    let a2 = dec.a2.adjacency_matrix();
    let eq2 = dec
        .a2
        .mul_matrix(&a2)?
        .add(&a2.scale(c)?)?
        .shift(c - k)?
        .add(&dec.b.mul(&bt)?)?
        == IntMatrix::ones(ell, ell).scale(c)?;

    // A₂B = -cB + cJ
    let eq3 =
        dec.a2.mul_matrix(&dec.b)? == dec.b.scale(-c)?.add(&IntMatrix::ones(ell, kk).scale(c)?)?;

    Ok(eq1 && eq2 && eq3)
}

/// All-pairs distances on a graph; `None` entries for unreachable pairs.
fn distance_table(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.vertex_count()).map(|v| g.distances_from(v)).collect()
}

/// Diameter of `X₂(v)`, which must be connected with diameter 2 or 3.
pub fn x2_diameter(dec: &SubconstituentDecomposition) -> Result<usize> {
    let base = dec.base_vertex;
    if dec.a2.vertex_count() == 0 {
        return Err(Error::X2Disconnected { base });
    }
    let mut diameter = 0;
    for row in distance_table(&dec.a2) {
        for d in row {
            match d {
                None => return Err(Error::X2Disconnected { base }),
                Some(d) => diameter = diameter.max(d),
            }
        }
    }
    if !(2..=3).contains(&diameter) {
        return Err(Error::X2DiameterOutOfRange { base, diameter });
    }
    Ok(diameter)
}

/// `(k - c, λ₁, λ₂, -c)` for a feasible `(k, c)`.
fn candidate_eigenvalues(k: Int, c: Int) -> Result<[i64; 4]> {
    let report = derive_from_kc(k, c)?;
    let p = report.params.ok_or_else(|| {
        Error::InvalidParameters(alloc::format!(
            "({k}, {c}) is not a feasible parameter pair"
        ))
    })?;
    Ok([small(k - c)?, small(p.q)?, small(p.lambda2)?, small(-c)?])
}

/// `∏ (A₂ - μI) = 0` over the distinct candidates `μ ∈ {k - c, λ₁, λ₂, -c}`.
pub fn x2_annihilator_check(dec: &SubconstituentDecomposition, k: Int, c: Int) -> Result<bool> {
    let mut candidates = candidate_eigenvalues(k, c)?.to_vec();
    candidates.sort_unstable();
    candidates.dedup();
    let mut m = IntMatrix::identity(dec.a2.vertex_count());
    for mu in candidates {
        m = dec.a2.mul_matrix(&m)?.sub(&m.scale(mu)?)?;
    }
    Ok(m.is_zero())
}

/// Multiplicity of each candidate eigenvalue of `A₂`, from the traces of
/// `A₂⁰ … A₂³` and the Vandermonde system they satisfy.
///
/// Meaningful only after [`x2_annihilator_check`] has passed.
pub fn x2_multiplicities(
    dec: &SubconstituentDecomposition,
    k: Int,
    c: Int,
) -> Result<BTreeMap<i64, u64>> {
    let candidates = candidate_eigenvalues(k, c)?;
    for i in 0..4 {
        if candidates[i + 1..].contains(&candidates[i]) {
            return Err(Error::CoincidentEigenvalues);
        }
    }
    let ell = dec.a2.vertex_count();
    let mut traces = [0i64; 4];
    let mut power = IntMatrix::identity(ell);
    for t in traces.iter_mut() {
        *t = power.trace()?;
        power = dec.a2.mul_matrix(&power)?;
    }

    // Rows j = 0..4: Σ_i mult_i · μ_i^j = tr(A₂^j).
    let mut system: Vec<Vec<Rational>> = Vec::with_capacity(4);
    for (j, &t) in traces.iter().enumerate() {
        let mut row = Vec::with_capacity(5);
        for &mu in &candidates {
            let p = (0..j)
                .try_fold(1i128, |acc, _| acc.checked_mul(mu as i128))
                .ok_or(Error::Overflow)?;
            row.push(Rational::from_int(p));
        }
        row.push(Rational::from_int(t as i128));
        system.push(row);
    }
    let solution = solve(system)?;

    let mut out = BTreeMap::new();
    for (&mu, m) in candidates.iter().zip(solution) {
        let m = m
            .to_integer()
            .filter(|&m| m >= 0)
            .ok_or_else(|| Error::InconsistentMultiplicities(alloc::format!("m({mu}) = {m}")))?;
        out.insert(mu, m as u64);
    }
    let total: u64 = out.values().sum();
    if total != ell as u64 {
        return Err(Error::InconsistentMultiplicities(alloc::format!(
            "multiplicities sum to {total}, expected {ell}"
        )));
    }
    if out[&candidates[0]] != 1 {
        return Err(Error::InconsistentMultiplicities(alloc::format!(
            "degree eigenvalue {} has multiplicity {}",
            candidates[0],
            out[&candidates[0]]
        )));
    }
    Ok(out)
}

/// Gauss-Jordan elimination on an augmented square system.
fn solve(mut a: Vec<Vec<Rational>>) -> Result<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col].numer() != 0)
            .ok_or(Error::CoincidentEigenvalues)?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x = x.div(p)?;
        }
        for r in 0..n {
            if r == col || a[r][col].numer() == 0 {
                continue;
            }
            let factor = a[r][col];
            let pivot_row = a[col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.sub(p.mul(factor)?)?;
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n]).collect())
}

/// For `c = 1`: "equal or at distance 3" partitions `X₂(v)` into `k`
/// classes of size `k - 1`, no edge joins two vertices of one class, and
/// every vertex has exactly one neighbour in each other class. That is,
/// `X₂(v)` is an antipodal `(k - 1)`-fold cover of `K_k`.
pub fn moore_antipodal_check(dec: &SubconstituentDecomposition, k: Int, c: Int) -> Result<bool> {
    if c != 1 {
        return Err(Error::NotMooreCase { c });
    }
    let k = usize::try_from(k).map_err(|_| Error::Overflow)?;
    let g = &dec.a2;
    let n = g.vertex_count();
    let dist = distance_table(g);

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        let members: Vec<usize> = (0..n)
            .filter(|&w| w == u || dist[u][w] == Some(3))
            .collect();
        if class_of[u] == usize::MAX {
            let id = classes.len();
            for &w in &members {
                if class_of[w] != usize::MAX {
                    return Ok(false);
                }
                class_of[w] = id;
            }
            classes.push(members);
        } else if classes[class_of[u]] != members {
            return Ok(false);
        }
    }
    if classes.len() != k || classes.iter().any(|cl| cl.len() + 1 != k) {
        return Ok(false);
    }
    for u in 0..n {
        let mut hits = vec![0usize; classes.len()];
        for w in g.neighbours(u) {
            hits[class_of[w]] += 1;
        }
        for (id, &h) in hits.iter().enumerate() {
            let expected = usize::from(id != class_of[u]);
            if h != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every subconstituent check at one base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport {
    pub base_vertex: usize,
    pub block_identities: bool,
    pub diameter: usize,
    pub annihilator: bool,
    pub multiplicities: BTreeMap<i64, u64>,
    /// `Some` only when `c = 1`.
    pub antipodal: Option<bool>,
    /// `X₂(v)` itself run through [`verify_srnt`].
    pub x2_certificate: core::result::Result<SrntCertificate, Violation>,
}

impl VertexReport {
    pub fn passed(&self) -> bool {
        self.block_identities && self.annihilator && self.antipodal.unwrap_or(true)
    }
}

/// Run all subconstituent checks at `v` for a graph certified as `cert`.
pub fn analyse_vertex(g: &Graph, cert: &SrntCertificate, v: usize) -> Result<VertexReport> {
    let (k, c) = (cert.k as Int, cert.c as Int);
    let dec = subconstituent(g, v)?;
    let block_identities = block_identities_check(&dec, k, c)?;
    let diameter = x2_diameter(&dec)?;
    let annihilator = x2_annihilator_check(&dec, k, c)?;
    let multiplicities = if annihilator {
        x2_multiplicities(&dec, k, c)?
    } else {
        BTreeMap::new()
    };
    let antipodal = if c == 1 {
        Some(moore_antipodal_check(&dec, k, c)?)
    } else {
        None
    };
    Ok(VertexReport {
        base_vertex: v,
        block_identities,
        diameter,
        annihilator,
        multiplicities,
        antipodal,
        x2_certificate: verify_srnt(&dec.a2),
    })
}
