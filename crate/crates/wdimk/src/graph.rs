//! Graph construction and distance queries.
//!
//! Every graph is finite, connected, undirected and loop-free, with vertices
//! indexed densely by [`VertexId`]. The all-pairs distance matrix is computed
//! once at construction and stored as 16-bit hop counts, so distance lookups
//! are O(1) everywhere else in the crate.
//!
//! Hamming graphs (Cartesian products of cliques) carry their coordinate
//! structure: vertex `(c_1, ..., c_r)` maps to the row-major index
//! `c_1 * n_2 * ... * n_r + ... + c_r`, and the distance between two vertices
//! equals the number of coordinates in which they differ.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

/// Largest vertex count accepted by the constructors.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

/// Dense vertex index in `[0, |V|)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Structural tag carried by a [`Graph`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphKind {
    /// Cartesian product of complete graphs.
    Hamming,
    /// Cartesian product of `r` copies of `K_2`.
    Hypercube,
    /// Arbitrary connected graph from an edge list.
    General,
}

/// Orientation of a layer of a two-dimensional Hamming graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// A vertical layer fixes the first coordinate: `{i} x Z_m`.
    Vertical,
    /// A horizontal layer fixes the second coordinate: `Z_n x {j}`.
    Horizontal,
}

/// One layer of `K_n` □ `K_m`: the clique induced by fixing one coordinate.
#[derive(Clone, Debug)]
pub struct Layer {
    pub orientation: Orientation,
    pub fixed_index: u16,
    pub members: Vec<VertexId>,
}

#[derive(Error, Debug)]
pub enum GraphError {
    #[error("every clique factor needs at least 2 vertices, got {0}")]
    DimensionTooSmall(u16),
    #[error("graph would have {requested} vertices, cap is {cap}")]
    TooLarge { requested: usize, cap: usize },
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex index {index} out of range for {count} vertices")]
    IndexOutOfRange { index: u32, count: usize },
    #[error("operation requires a two-dimensional Hamming graph")]
    NotTwoDimensionalHamming,
    #[error("the two vertices must be distinct")]
    SameVertex,
    #[error("edge list parse error on line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
}

/// Immutable connected graph with a precomputed distance matrix.
pub struct Graph {
    id: u64,
    kind: GraphKind,
    dims: Vec<u16>,
    n: usize,
    adjacency: Vec<Vec<u32>>,
    dist: Vec<u16>,
}

impl Graph {
    /// Identifier used to detect vertex sets bound to a different graph.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Clique sizes of a Hamming or hypercube graph, `None` for general graphs.
    pub fn dims(&self) -> Option<&[u16]> {
        match self.kind {
            GraphKind::General => None,
            _ => Some(&self.dims),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Neighbours of `v` in increasing index order.
    pub fn neighbors(&self, v: VertexId) -> &[u32] {
        &self.adjacency[v.index()]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Hop distance between two vertices.
    #[inline]
    pub fn dist(&self, u: VertexId, v: VertexId) -> u16 {
        self.dist[u.index() * self.n + v.index()]
    }

    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.dist(u, v) == 1
    }

    pub fn diameter(&self) -> u16 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.n
    }

    /// `(n, m)` for a two-dimensional Hamming graph.
    pub fn hamming2_dims(&self) -> Option<(u16, u16)> {
        match self.dims() {
            Some(&[n, m]) => Some((n, m)),
            _ => None,
        }
    }

    /// Coordinates of `v` in a Hamming graph (row-major decoding).
    pub fn coords(&self, v: VertexId) -> Option<Vec<u16>> {
        self.dims()?;
        let mut rest = v.index();
        let mut out = vec![0u16; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(self.dims.iter()).rev() {
            *slot = (rest % d as usize) as u16;
            rest /= d as usize;
        }
        Some(out)
    }

    /// Row-major index of the given coordinates.
    pub fn vertex_at(&self, coords: &[u16]) -> Result<VertexId, GraphError> {
        let dims = self.dims().ok_or(GraphError::NotTwoDimensionalHamming)?;
        if coords.len() != dims.len() {
            return Err(GraphError::IndexOutOfRange {
                index: 0,
                count: self.n,
            });
        }
        let mut idx = 0usize;
        for (&c, &d) in coords.iter().zip(dims) {
            if c >= d {
                return Err(GraphError::IndexOutOfRange {
                    index: c as u32,
                    count: d as usize,
                });
            }
            idx = idx * d as usize + c as usize;
        }
        Ok(VertexId(idx as u32))
    }

    /// The `n` vertical plus `m` horizontal layers of `K_n` □ `K_m`.
    ///
    /// Every vertex appears in exactly one layer of each orientation.
    pub fn layers(&self) -> Result<Vec<Layer>, GraphError> {
        let (n, m) = self
            .hamming2_dims()
            .ok_or(GraphError::NotTwoDimensionalHamming)?;
        let mut out = Vec::with_capacity(n as usize + m as usize);
        for i in 0..n {
            let members = (0..m)
                .map(|j| VertexId(i as u32 * m as u32 + j as u32))
                .collect();
            out.push(Layer {
                orientation: Orientation::Vertical,
                fixed_index: i,
                members,
            });
        }
        for j in 0..m {
            let members = (0..n)
                .map(|i| VertexId(i as u32 * m as u32 + j as u32))
                .collect();
            out.push(Layer {
                orientation: Orientation::Horizontal,
                fixed_index: j,
                members,
            });
        }
        Ok(out)
    }

    /// True iff `u` and `v` agree in exactly one coordinate of `K_n` □ `K_m`,
    /// i.e. they lie in a common layer. Equivalent to `dist(u, v) == 1` there.
    pub fn aligned(&self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        let (_, m) = self
            .hamming2_dims()
            .ok_or(GraphError::NotTwoDimensionalHamming)?;
        if u == v {
            return Err(GraphError::SameVertex);
        }
        let m = m as u32;
        let (iu, ju) = (u.0 / m, u.0 % m);
        let (iv, jv) = (v.0 / m, v.0 % m);
        Ok((iu == iv) != (ju == jv))
    }

    /// Distance matrix recomputed from scratch by breadth-first search.
    ///
    /// Test oracle for the coordinate-difference shortcut used on Hamming
    /// graphs; quadratic memory, so only sensible at small sizes.
    pub fn bfs_distances(&self) -> Vec<u16> {
        bfs_all_pairs(&self.adjacency, self.n).expect("constructed graphs are connected")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("kind", &self.kind)
            .field("dims", &self.dims)
            .field("vertex_count", &self.n)
            .finish()
    }
}

/// Builds the Cartesian product of cliques `K_{dims[0]}` □ ... □ `K_{dims[r-1]}`.
///
/// Distances are filled by coordinate comparison; adjacency follows the
/// product rule (edges join vertices differing in exactly one coordinate).
pub fn make_hamming(dims: &[u16]) -> Result<Graph, GraphError> {
    make_product(dims, GraphKind::Hamming)
}

/// Builds the hypercube `Q_r` as the product of `r` copies of `K_2`.
pub fn make_hypercube(r: u16) -> Result<Graph, GraphError> {
    if r == 0 {
        return Err(GraphError::DimensionTooSmall(0));
    }
    make_product(&vec![2u16; r as usize], GraphKind::Hypercube)
}

fn make_product(dims: &[u16], kind: GraphKind) -> Result<Graph, GraphError> {
    if dims.is_empty() {
        return Err(GraphError::DimensionTooSmall(0));
    }
    for &d in dims {
        if d < 2 {
            return Err(GraphError::DimensionTooSmall(d));
        }
    }
    let mut n = 1usize;
    for &d in dims {
        n = n.saturating_mul(d as usize);
        if n > DEFAULT_VERTEX_CAP {
            return Err(GraphError::TooLarge {
                requested: n,
                cap: DEFAULT_VERTEX_CAP,
            });
        }
    }

    let r = dims.len();
    let mut coords = vec![vec![0u16; r]; n];
    for (v, c) in coords.iter_mut().enumerate() {
        let mut rest = v;
        for pos in (0..r).rev() {
            c[pos] = (rest % dims[pos] as usize) as u16;
            rest /= dims[pos] as usize;
        }
    }

    let mut dist = vec![0u16; n * n];
    for u in 0..n {
        for v in (u + 1)..n {
            let d = coords[u]
                .iter()
                .zip(&coords[v])
                .filter(|(a, b)| a != b)
                .count() as u16;
            dist[u * n + v] = d;
            dist[v * n + u] = d;
        }
    }

    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in 0..n {
            if u != v && dist[u * n + v] == 1 {
                adjacency[u].push(v as u32);
            }
        }
    }

    Ok(Graph {
        id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
        kind,
        dims: dims.to_vec(),
        n,
        adjacency,
        dist,
    })
}

/// Builds a general graph from an undirected edge list.
///
/// Distances are filled by breadth-first search from every vertex; the graph
/// must come out connected.
pub fn make_from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    if n > DEFAULT_VERTEX_CAP {
        return Err(GraphError::TooLarge {
            requested: n,
            cap: DEFAULT_VERTEX_CAP,
        });
    }
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for x in [u, v] {
            if x as usize >= n {
                return Err(GraphError::IndexOutOfRange { index: x, count: n });
            }
        }
        if !adjacency[u as usize].contains(&v) {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    let dist = bfs_all_pairs(&adjacency, n).ok_or(GraphError::Disconnected)?;
    Ok(Graph {
        id: NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed),
        kind: GraphKind::General,
        dims: Vec::new(),
        n,
        adjacency,
        dist,
    })
}

fn bfs_all_pairs(adjacency: &[Vec<u32>], n: usize) -> Option<Vec<u16>> {
    let mut dist = vec![u16::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push_back(src as u32);
        while let Some(u) = queue.pop_front() {
            let du = row[u as usize];
            for &v in &adjacency[u as usize] {
                if row[v as usize] == u16::MAX {
                    row[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.contains(&u16::MAX) {
            return None;
        }
    }
    Some(dist)
}

/// Parses the edge-list file format: first line `n m_edges`, then one `u v`
/// pair per line, 0-indexed. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(u32, u32)>), GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut nums = line.split_whitespace().map(|tok| {
            tok.parse::<u64>().map_err(|_| GraphError::EdgeListParse {
                line: lineno + 1,
                msg: format!("expected integer, got '{tok}'"),
            })
        });
        let a = nums.next().ok_or_else(|| GraphError::EdgeListParse {
            line: lineno + 1,
            msg: "missing field".into(),
        })??;
        let b = nums.next().ok_or_else(|| GraphError::EdgeListParse {
            line: lineno + 1,
            msg: "missing field".into(),
        })??;
        if nums.next().is_some() {
            return Err(GraphError::EdgeListParse {
                line: lineno + 1,
                msg: "too many fields".into(),
            });
        }
        if header.is_none() {
            header = Some((a as usize, b as usize));
        } else {
            edges.push((a as u32, b as u32));
        }
    }
    let (n, m_edges) = header.ok_or(GraphError::EdgeListParse {
        line: 0,
        msg: "empty edge-list file".into(),
    })?;
    if edges.len() != m_edges {
        return Err(GraphError::EdgeListParse {
            line: 0,
            msg: format!("header promises {m_edges} edges, found {}", edges.len()),
        });
    }
    Ok((n, edges))
}
