//! Distance-difference machinery: Δ values, certificates, and κ.
//!
//! For vertices `x, y, z` the basic quantity is
//! `Δ_z(x, y) = |d(x, z) - d(y, z)|`, and for a vertex set `S` the sum
//! `Δ_S(x, y)` of `Δ_s(x, y)` over `s ∈ S`. A set `S` is weak `k`-resolving
//! when `Δ_S(x, y) >= k` for every vertex pair, and the weak `k`-metric
//! dimension `wdim_k` is the smallest size of such a set. The largest `k`
//! for which any weak `k`-resolving set exists is `κ`, attained by the full
//! vertex set; it equals the minimum of `Δ_V(x, y)` over all pairs.
//!
//! [`verify`] produces a [`Certificate`] carrying the whole pair-value
//! matrix together with the minimising pair, so "is this set weak
//! `k`-resolving" is always answered with evidence attached.

mod constructions;
mod formulas;
mod gy;
mod search;

pub use constructions::{construct_diagonal, construct_xt, construct_xt_prime, construct_yn};
pub use formulas::{conjecture_formula, kappa_hamming_formula, wdim1_knkn, wdim_formula_knkn};
pub use gy::{build_gy, GyGraph};
pub use search::{wdim_exact_bruteforce, SearchOptions};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphKind, VertexId};

#[derive(Error, Debug)]
pub enum ResolvingError {
    #[error("vertex set belongs to a different graph")]
    GraphMismatch,
    #[error("no weak {k}-resolving set exists: kappa of this graph is {kappa}")]
    KExceedsKappa { k: u32, kappa: u32 },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("{0}")]
    OutOfRange(String),
    #[error("dims must be a nonincreasing list of at least two cliques of size >= 2")]
    BadDims,
    #[error("internal assertion failed: {0}")]
    InternalAssertion(&'static str),
    #[error("duplicate vertex in set")]
    DuplicateVertex,
    #[error("vertex {0} out of range")]
    InvalidVertex(u32),
    #[error("operation requires a square two-dimensional Hamming graph")]
    NotSquareHamming,
}

/// Strictly increasing list of vertices bound to one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<VertexId>,
    graph_id: u64,
}

impl VertexSet {
    /// Builds a set from arbitrary order, rejecting duplicates and
    /// out-of-range indices.
    pub fn new(g: &Graph, mut members: Vec<VertexId>) -> Result<Self, ResolvingError> {
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(ResolvingError::DuplicateVertex);
            }
        }
        if let Some(v) = members.iter().find(|v| !g.contains(**v)) {
            return Err(ResolvingError::InvalidVertex(v.0));
        }
        Ok(VertexSet {
            members,
            graph_id: g.id(),
        })
    }

    pub fn empty(g: &Graph) -> Self {
        VertexSet {
            members: Vec::new(),
            graph_id: g.id(),
        }
    }

    pub fn full(g: &Graph) -> Self {
        VertexSet {
            members: (0..g.vertex_count() as u32).map(VertexId).collect(),
            graph_id: g.id(),
        }
    }

    /// Builds a set over a Hamming graph from coordinate tuples.
    pub fn from_coords(g: &Graph, coords: &[&[u16]]) -> Result<Self, ResolvingError> {
        let mut members = Vec::with_capacity(coords.len());
        for c in coords {
            let v = g
                .vertex_at(c)
                .map_err(|_| ResolvingError::InvalidVertex(0))?;
            members.push(v);
        }
        Self::new(g, members)
    }

    /// Convenience for two-dimensional coordinates.
    pub fn from_pairs(g: &Graph, pairs: &[(u16, u16)]) -> Result<Self, ResolvingError> {
        let refs: Vec<[u16; 2]> = pairs.iter().map(|&(i, j)| [i, j]).collect();
        let slices: Vec<&[u16]> = refs.iter().map(|a| a.as_slice()).collect();
        Self::from_coords(g, &slices)
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn graph_id(&self) -> u64 {
        self.graph_id
    }

    fn check_graph(&self, g: &Graph) -> Result<(), ResolvingError> {
        if self.graph_id != g.id() {
            return Err(ResolvingError::GraphMismatch);
        }
        Ok(())
    }
}

/// `Δ_z(x, y) = |d(x, z) - d(y, z)|`.
#[inline]
pub fn delta_z(g: &Graph, z: VertexId, x: VertexId, y: VertexId) -> u32 {
    let a = g.dist(x, z) as i32;
    let b = g.dist(y, z) as i32;
    (a - b).unsigned_abs()
}

/// `Δ_S(x, y)`: the sum of `Δ_s(x, y)` over the members of `s`.
///
/// The empty set sums to 0.
pub fn delta_set(g: &Graph, s: &VertexSet, x: VertexId, y: VertexId) -> Result<u32, ResolvingError> {
    s.check_graph(g)?;
    Ok(s.members.iter().map(|&z| delta_z(g, z, x, y)).sum())
}

/// Evidence that a set is (or is not) weak `k`-resolving: all pair values
/// plus the lexicographically least pair attaining the minimum.
#[derive(Clone, Debug)]
pub struct Certificate {
    k: u32,
    set: VertexSet,
    vertex_count: usize,
    pair_values: Vec<u32>,
    min_pair: (VertexId, VertexId),
    min_value: u32,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.min_value >= self.k
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn min_value(&self) -> u32 {
        self.min_value
    }

    pub fn min_pair(&self) -> (VertexId, VertexId) {
        self.min_pair
    }

    /// `Δ_S(x, y)` as recorded for an unordered pair.
    pub fn value(&self, x: VertexId, y: VertexId) -> Option<u32> {
        let (a, b) = match x.0.cmp(&y.0) {
            std::cmp::Ordering::Less => (x, y),
            std::cmp::Ordering::Greater => (y, x),
            std::cmp::Ordering::Equal => return None,
        };
        Some(self.pair_values[pair_index(self.vertex_count, a.index(), b.index())])
    }
}

#[inline]
fn pair_index(n: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < y && y < n);
    x * (2 * n - x - 1) / 2 + (y - x - 1)
}

/// Checks whether `s` is weak `k`-resolving, returning the full certificate.
///
/// Runs in `O(|V|^2 * |S|)` distance lookups.
pub fn verify(g: &Graph, s: &VertexSet, k: u32) -> Result<Certificate, ResolvingError> {
    s.check_graph(g)?;
    if k == 0 {
        return Err(ResolvingError::OutOfRange("k must be >= 1".into()));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(ResolvingError::OutOfRange(
            "graph needs at least two vertices".into(),
        ));
    }
    let mut pair_values = Vec::with_capacity(n * (n - 1) / 2);
    let mut min_value = u32::MAX;
    let mut min_pair = (VertexId(0), VertexId(1));
    for x in 0..n as u32 {
        for y in (x + 1)..n as u32 {
            let v: u32 = s
                .members
                .iter()
                .map(|&z| delta_z(g, z, VertexId(x), VertexId(y)))
                .sum();
            pair_values.push(v);
            if v < min_value {
                min_value = v;
                min_pair = (VertexId(x), VertexId(y));
            }
        }
    }
    Ok(Certificate {
        k,
        set: s.clone(),
        vertex_count: n,
        pair_values,
        min_pair,
        min_value,
    })
}

/// `κ(G)`: the largest `k` admitting a weak `k`-resolving set, computed as
/// the minimum of `Δ_V(x, y)` over all vertex pairs.
pub fn kappa_bruteforce(g: &Graph) -> u32 {
    let n = g.vertex_count();
    assert!(n >= 2, "kappa needs at least two vertices");
    let dist = |x: u32, y: u32| g.dist(VertexId(x), VertexId(y)) as i32;
    let mut min = u32::MAX;
    for x in 0..n as u32 {
        for y in (x + 1)..n as u32 {
            let mut total = 0u32;
            for z in 0..n as u32 {
                total += (dist(x, z) - dist(y, z)).unsigned_abs();
                if total >= min {
                    break;
                }
            }
            if total < min {
                min = total;
            }
        }
    }
    min
}

/// How a weak-dimension value was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Formula,
    Brute,
    IlpFs,
    IlpFsMinus,
    IlpFgh,
}

/// A computed `wdim_k` value, with the witness set when one is available.
#[derive(Clone, Debug)]
pub struct WdimResult {
    pub k: u32,
    pub value: u64,
    pub witness: Option<VertexSet>,
    pub method: Method,
    pub proved: bool,
}

/// Serializable rendering of a certificate, matching the documented JSON
/// schema: witness sets over Hamming graphs print as coordinate tuples,
/// never as raw indices.
#[derive(Serialize)]
pub struct CertificateJson {
    pub graph: GraphJson,
    pub k: u32,
    pub set: serde_json::Value,
    pub min_value: u32,
    pub min_pair: serde_json::Value,
    pub valid: bool,
}

/// Graph descriptor used in JSON payloads.
#[derive(Serialize)]
#[serde(untagged)]
pub enum GraphJson {
    Hamming {
        kind: &'static str,
        dims: Vec<u16>,
    },
    Hypercube {
        kind: &'static str,
        r: u16,
    },
    General {
        kind: &'static str,
        n: usize,
    },
}

impl GraphJson {
    pub fn of(g: &Graph) -> Self {
        match g.kind() {
            GraphKind::Hamming => GraphJson::Hamming {
                kind: "hamming",
                dims: g.dims().unwrap().to_vec(),
            },
            GraphKind::Hypercube => GraphJson::Hypercube {
                kind: "hypercube",
                r: g.dims().unwrap().len() as u16,
            },
            GraphKind::General => GraphJson::General {
                kind: "general",
                n: g.vertex_count(),
            },
        }
    }
}

/// Renders a vertex as JSON: a coordinate tuple on Hamming graphs, a raw
/// index otherwise.
pub fn vertex_json(g: &Graph, v: VertexId) -> serde_json::Value {
    match g.coords(v) {
        Some(c) => serde_json::json!(c),
        None => serde_json::json!(v.0),
    }
}

/// Renders a vertex set as JSON, coordinate pairs on Hamming graphs.
pub fn set_json(g: &Graph, s: &VertexSet) -> serde_json::Value {
    serde_json::Value::Array(s.members().iter().map(|&v| vertex_json(g, v)).collect())
}

impl Certificate {
    pub fn to_json(&self, g: &Graph) -> CertificateJson {
        CertificateJson {
            graph: GraphJson::of(g),
            k: self.k,
            set: set_json(g, &self.set),
            min_value: self.min_value,
            min_pair: serde_json::json!([
                vertex_json(g, self.min_pair.0),
                vertex_json(g, self.min_pair.1)
            ]),
            valid: self.is_valid(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_hamming, make_hypercube};

    fn at(g: &Graph, i: u16, j: u16) -> VertexId {
        g.vertex_at(&[i, j]).unwrap()
    }

    #[test]
    fn delta_z_examples() {
        let g = make_hamming(&[3, 3]).unwrap();
        // BFS-checked on the 9-vertex graph: d((0,1),(0,0)) = 1, d((1,2),(0,0)) = 2.
        assert_eq!(delta_z(&g, at(&g, 0, 0), at(&g, 0, 1), at(&g, 1, 2)), 1);
        assert_eq!(delta_z(&g, at(&g, 0, 0), at(&g, 1, 1), at(&g, 1, 1)), 0);
        // z coincides with x, the other endpoint is not aligned with it.
        assert_eq!(delta_z(&g, at(&g, 0, 0), at(&g, 0, 0), at(&g, 1, 1)), 2);
    }

    #[test]
    fn delta_set_examples() {
        let g = make_hamming(&[3, 3]).unwrap();
        let empty = VertexSet::empty(&g);
        assert_eq!(delta_set(&g, &empty, at(&g, 0, 0), at(&g, 2, 2)).unwrap(), 0);

        let full = VertexSet::full(&g);
        assert_eq!(delta_set(&g, &full, at(&g, 0, 0), at(&g, 0, 1)).unwrap(), 6);

        let single = VertexSet::from_pairs(&g, &[(0, 0)]).unwrap();
        assert_eq!(
            delta_set(&g, &single, at(&g, 1, 0), at(&g, 2, 0)).unwrap(),
            0
        );
    }

    #[test]
    fn graph_mismatch_detected() {
        let g = make_hamming(&[3, 3]).unwrap();
        let h = make_hamming(&[3, 3]).unwrap();
        let s = VertexSet::full(&g);
        assert!(matches!(
            delta_set(&h, &s, VertexId(0), VertexId(1)),
            Err(ResolvingError::GraphMismatch)
        ));
        assert!(matches!(
            verify(&h, &s, 1),
            Err(ResolvingError::GraphMismatch)
        ));
    }

    #[test]
    fn verify_full_set_attains_kappa() {
        for g in [
            make_hamming(&[3, 3]).unwrap(),
            make_hamming(&[4, 2]).unwrap(),
            make_hypercube(3).unwrap(),
        ] {
            let kappa = kappa_bruteforce(&g);
            let cert = verify(&g, &VertexSet::full(&g), kappa).unwrap();
            assert!(cert.is_valid());
            assert_eq!(cert.min_value(), kappa);
        }
    }

    #[test]
    fn verify_single_vertex_fails_k2() {
        let g = make_hamming(&[3, 3]).unwrap();
        let s = VertexSet::from_pairs(&g, &[(0, 0)]).unwrap();
        let cert = verify(&g, &s, 2).unwrap();
        assert!(!cert.is_valid());
        assert!(cert.min_value() <= 1);
        // The offending pair (1,0),(2,0) is equidistant from (0,0).
        assert_eq!(cert.value(at(&g, 1, 0), at(&g, 2, 0)), Some(0));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa_bruteforce(&make_hamming(&[2]).unwrap()), 2);
        assert_eq!(kappa_bruteforce(&make_hamming(&[3, 3]).unwrap()), 6);
        assert_eq!(kappa_bruteforce(&make_hypercube(3).unwrap()), 8);
    }

    #[test]
    fn min_pair_is_lexicographically_least() {
        let g = make_hamming(&[3, 3]).unwrap();
        let cert = verify(&g, &VertexSet::full(&g), 6).unwrap();
        // Every adjacent pair attains the minimum 6; the least is (0, 1).
        assert_eq!(cert.min_pair(), (VertexId(0), VertexId(1)));
    }

    #[test]
    fn vertex_set_rejects_duplicates_and_strangers() {
        let g = make_hamming(&[3, 3]).unwrap();
        assert!(matches!(
            VertexSet::new(&g, vec![VertexId(1), VertexId(1)]),
            Err(ResolvingError::DuplicateVertex)
        ));
        assert!(matches!(
            VertexSet::new(&g, vec![VertexId(99)]),
            Err(ResolvingError::InvalidVertex(99))
        ));
    }

    #[test]
    fn delta_symmetry_and_bound_small_graphs() {
        for g in [
            make_hamming(&[3, 3]).unwrap(),
            make_hamming(&[4, 3]).unwrap(),
            make_hypercube(3).unwrap(),
        ] {
            let n = g.vertex_count() as u32;
            for z in 0..n {
                for x in 0..n {
                    for y in 0..n {
                        let (z, x, y) = (VertexId(z), VertexId(x), VertexId(y));
                        assert_eq!(delta_z(&g, z, x, y), delta_z(&g, z, y, x));
                        assert!(delta_z(&g, z, x, y) <= g.dist(x, y) as u32);
                    }
                }
            }
        }
    }
}
