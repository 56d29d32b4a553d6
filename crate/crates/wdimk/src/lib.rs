//! Weak k-resolving sets and the weak k-metric dimension of graphs.
//!
//! A set `S` of vertices of a connected graph weakly `k`-resolves a vertex
//! pair `x, y` when the distance differences `|d(x,s) - d(y,s)|` summed over
//! `s ∈ S` reach at least `k`. The smallest size of a set doing this for
//! every pair is the weak `k`-metric dimension, `wdim_k`. This crate
//! computes, verifies and certifies these quantities, with special support
//! for two-dimensional Hamming graphs `K_n □ K_m` (rook's graphs):
//!
//! * [`graph`] — graph construction (Hamming products, hypercubes, edge
//!   lists) with precomputed distances and layer structure;
//! * [`resolving`] — Δ machinery, certificates, `κ`, exhaustive search,
//!   closed-form values and the constructive families `D_i`, `X_t`, `X'_t`,
//!   `Y_n`;
//! * [`ilp`] — three integer-programming formulations, an LP-format
//!   writer/parser, and a built-in exact solver with a count-vector fast
//!   path for the layer formulation;
//! * [`report`] — table harness and conjecture audit used by the CLI.
//!
//! ```
//! use wdimk::graph::make_hamming;
//! use wdimk::resolving::{kappa_bruteforce, verify, VertexSet};
//!
//! let g = make_hamming(&[3, 3]).unwrap();
//! assert_eq!(kappa_bruteforce(&g), 6);
//!
//! let s = VertexSet::from_pairs(&g, &[(0, 0), (0, 1), (1, 2), (2, 2)]).unwrap();
//! let cert = verify(&g, &s, 2).unwrap();
//! assert!(cert.is_valid());
//! ```

pub mod graph;
pub mod ilp;
pub mod report;
pub mod resolving;

#[cfg(doctest)]
mod book {
    //! Runs every Rust snippet in the guide as a doctest, so the book cannot
    //! drift from the library.
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            #[allow(dead_code)]
            struct $name;
        };
    }
    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Graphs, "../../../book/src/graphs.md");
    chapter!(Resolving, "../../../book/src/resolving.md");
    chapter!(Formulas, "../../../book/src/formulas.md");
    chapter!(Ilp, "../../../book/src/ilp.md");
    chapter!(Solver, "../../../book/src/solver.md");
    chapter!(Cli, "../../../book/src/cli.md");
}
