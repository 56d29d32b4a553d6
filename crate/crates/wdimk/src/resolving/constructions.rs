//! Constructive weak k-resolving families on the square Hamming graph.
//!
//! All constructions live on `K_n □ K_n` and are built from the diagonals
//! `D_i = {(i+j mod n, j) : j in Z_n}`:
//!
//! * `X_t`, the union of diagonals `D_t, ..., D_{n-1}`, has `n(n-t)` vertices
//!   and is weak `(2n-2t)`-resolving — it places exactly `n-t` vertices in
//!   every layer.
//! * `X'_t = X_t \ {(1,2)}` has `n(n-t)-1` vertices and is weak
//!   `(2n-2t-1)`-resolving.
//! * `Y_n` (for `n >= 6`) is a weak 2-resolving set of the optimal size
//!   `ceil(4n/3)`, assembled from 4-vertex blocks along the main diagonal
//!   with two short tail variants depending on `n mod 3`.

use super::{ResolvingError, VertexSet};
use crate::graph::Graph;

fn square_side(g: &Graph) -> Result<u16, ResolvingError> {
    match g.hamming2_dims() {
        Some((n, m)) if n == m => Ok(n),
        _ => Err(ResolvingError::NotSquareHamming),
    }
}

/// The diagonal `D_i` of `K_n □ K_n`: vertices `(i+j mod n, j)`.
///
/// The `n` diagonals partition the vertex set; they are building blocks, not
/// resolving sets by themselves.
pub fn construct_diagonal(g: &Graph, i: u16) -> Result<VertexSet, ResolvingError> {
    let n = square_side(g)?;
    if i >= n {
        return Err(ResolvingError::OutOfRange(format!(
            "diagonal index must satisfy 0 <= i < n = {n}, got {i}"
        )));
    }
    let pairs: Vec<(u16, u16)> = (0..n).map(|j| ((i + j) % n, j)).collect();
    VertexSet::from_pairs(g, &pairs)
}

/// `X_t`: the union of diagonals `D_t, ..., D_{n-1}`, a weak `(2n-2t)`-resolving
/// set of size `n(n-t)`. Requires `1 <= t <= n-2`.
pub fn construct_xt(g: &Graph, t: u16) -> Result<VertexSet, ResolvingError> {
    let n = square_side(g)?;
    if n < 3 {
        return Err(ResolvingError::OutOfRange(
            "X_t needs n >= 3".into(),
        ));
    }
    if t < 1 || t > n - 2 {
        return Err(ResolvingError::OutOfRange(format!(
            "X_t needs 1 <= t <= n-2 = {}, got {t}",
            n - 2
        )));
    }
    xt_pairs(g, n, t)
}

fn xt_pairs(g: &Graph, n: u16, t: u16) -> Result<VertexSet, ResolvingError> {
    let mut pairs = Vec::with_capacity((n as usize) * (n - t) as usize);
    for i in t..n {
        for j in 0..n {
            pairs.push(((i + j) % n, j));
        }
    }
    VertexSet::from_pairs(g, &pairs)
}

/// `X'_t = X_t \ {(1,2)}`: a weak `(2n-2t-1)`-resolving set of size
/// `n(n-t) - 1`. Requires `0 <= t <= n-3` (so `t = 0` means the full vertex
/// set minus one vertex).
pub fn construct_xt_prime(g: &Graph, t: u16) -> Result<VertexSet, ResolvingError> {
    let n = square_side(g)?;
    if n < 3 {
        return Err(ResolvingError::OutOfRange(
            "X'_t needs n >= 3".into(),
        ));
    }
    if t > n - 3 {
        return Err(ResolvingError::OutOfRange(format!(
            "X'_t needs 0 <= t <= n-3 = {}, got {t}",
            n - 3
        )));
    }
    let xt = xt_pairs(g, n, t)?;
    let removed = g
        .vertex_at(&[1, 2])
        .map_err(|_| ResolvingError::InternalAssertion("(1,2) must exist"))?;
    if !xt.contains(removed) {
        // (1,2) lies on D_{n-1}, which X_t always includes.
        return Err(ResolvingError::InternalAssertion("(1,2) must lie in X_t"));
    }
    let members = xt
        .members()
        .iter()
        .copied()
        .filter(|&v| v != removed)
        .collect();
    VertexSet::new(g, members)
}

/// `Y_n`: a weak 2-resolving set of `K_n □ K_n` of size `ceil(4n/3)`,
/// defined for `n >= 6`. For `n = 3s` it is the block pattern
/// `{(3r,3r), (3r,3r+1), (3r+1,3r+2), (3r+2,3r+2)}`; for remainders 1 and 2
/// it extends the next smaller block pattern with a two- or three-vertex
/// tail.
pub fn construct_yn(g: &Graph) -> Result<VertexSet, ResolvingError> {
    let n = square_side(g)?;
    if n < 6 {
        return Err(ResolvingError::OutOfRange(format!(
            "Y_n is defined for n >= 6, got {n}"
        )));
    }
    VertexSet::from_pairs(g, &yn_pairs(n))
}

fn yn_pairs(n: u16) -> Vec<(u16, u16)> {
    match n % 3 {
        0 => {
            let s = n / 3;
            let mut out = Vec::with_capacity(4 * s as usize);
            for r in 0..s {
                let b = 3 * r;
                out.extend_from_slice(&[(b, b), (b, b + 1), (b + 1, b + 2), (b + 2, b + 2)]);
            }
            out
        }
        1 => {
            let mut out = yn_pairs(n - 1);
            out.extend_from_slice(&[(n - 1, n - 2), (n - 1, n - 1)]);
            out
        }
        _ => {
            let mut out = yn_pairs(n - 2);
            out.extend_from_slice(&[(n - 2, n - 2), (n - 2, n - 1), (n - 1, n - 1)]);
            out
        }
    }
}
