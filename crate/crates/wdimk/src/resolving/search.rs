//! Exact minimum search by cardinality-increasing enumeration.

use super::{
    delta_z, kappa_bruteforce, Method, ResolvingError, VertexSet, WdimResult,
};
use crate::graph::{Graph, VertexId};

/// Knobs for [`wdim_exact_bruteforce`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Partial-set expansions allowed before giving up.
    pub node_budget: u64,
    /// Replace the uniform per-vertex contribution bound (the graph
    /// diameter; equal to 2 on two-dimensional Hamming graphs) with the
    /// exact per-pair maximum of `Δ_z`. Pays off only on general graphs.
    pub exact_pair_bound: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: 50_000_000,
            exact_pair_bound: false,
        }
    }
}

/// Finds a minimum-cardinality weak `k`-resolving set by exhaustive search.
///
/// Candidates are enumerated in vertex-index order and subsets in
/// lexicographic order at each cardinality, so the returned witness is the
/// lexicographically least one of minimum size. A partial set is pruned as
/// soon as some pair cannot reach `k` even if every remaining slot
/// contributes its maximum.
pub fn wdim_exact_bruteforce(
    g: &Graph,
    k: u32,
    opts: &SearchOptions,
) -> Result<WdimResult, ResolvingError> {
    if k == 0 {
        return Err(ResolvingError::OutOfRange("k must be >= 1".into()));
    }
    let kappa = kappa_bruteforce(g);
    if k > kappa {
        return Err(ResolvingError::KExceedsKappa { k, kappa });
    }

    let n = g.vertex_count();
    let pair_count = n * (n - 1) / 2;
    let mut pairs = Vec::with_capacity(pair_count);
    for x in 0..n as u32 {
        for y in (x + 1)..n as u32 {
            pairs.push((VertexId(x), VertexId(y)));
        }
    }

    let diameter = g.diameter() as u32;
    let bounds: Vec<u32> = if opts.exact_pair_bound {
        pairs
            .iter()
            .map(|&(x, y)| {
                (0..n as u32)
                    .map(|z| delta_z(g, VertexId(z), x, y))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    } else {
        vec![diameter; pair_count]
    };

    // Contribution of each candidate vertex to each pair, precomputed.
    let contrib: Vec<Vec<u32>> = (0..n as u32)
        .map(|z| {
            pairs
                .iter()
                .map(|&(x, y)| delta_z(g, VertexId(z), x, y))
                .collect()
        })
        .collect();

    // No cardinality below ceil(k / bound) can serve any pair.
    let start_card = bounds
        .iter()
        .map(|&b| (k as u64).div_ceil(b.max(1) as u64) as usize)
        .max()
        .unwrap_or(1)
        .max(1);

    let mut state = Search {
        k,
        n,
        pairs_len: pair_count,
        bounds,
        contrib,
        deltas: vec![0u32; pair_count],
        chosen: Vec::new(),
        nodes: 0,
        budget: opts.node_budget,
    };

    for card in start_card..=n {
        if let Some(witness) = state.dfs(0, card)? {
            let set = VertexSet::new(g, witness)?;
            return Ok(WdimResult {
                k,
                value: card as u64,
                witness: Some(set),
                method: Method::Brute,
                proved: true,
            });
        }
    }
    // Unreachable: the full vertex set is weak k-resolving for k <= kappa.
    Err(ResolvingError::InternalAssertion(
        "cardinality sweep exhausted without a witness",
    ))
}

struct Search {
    k: u32,
    n: usize,
    pairs_len: usize,
    bounds: Vec<u32>,
    contrib: Vec<Vec<u32>>,
    deltas: Vec<u32>,
    chosen: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn dfs(&mut self, start: usize, card: usize) -> Result<Option<Vec<VertexId>>, ResolvingError> {
        if self.chosen.len() == card {
            let ok = self.deltas.iter().all(|&d| d >= self.k);
            return Ok(if ok {
                Some(self.chosen.iter().map(|&v| VertexId(v)).collect())
            } else {
                None
            });
        }
        let remaining = card - self.chosen.len();
        // Leave room for the vertices still to pick.
        for v in start..=(self.n - remaining) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(ResolvingError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let row = &self.contrib[v];
            for (d, c) in self.deltas.iter_mut().zip(row) {
                *d += c;
            }
            self.chosen.push(v as u32);

            let slots = (remaining - 1) as u32;
            let viable = (0..self.pairs_len)
                .all(|p| self.deltas[p] + slots * self.bounds[p] >= self.k);
            if viable {
                if let Some(found) = self.dfs(v + 1, card)? {
                    return Ok(Some(found));
                }
            }

            self.chosen.pop();
            let row = &self.contrib[v];
            for (d, c) in self.deltas.iter_mut().zip(row) {
                *d -= c;
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_from_edges, make_hamming};
    use crate::resolving::verify;

    fn brute(g: &Graph, k: u32) -> WdimResult {
        wdim_exact_bruteforce(g, k, &SearchOptions::default()).unwrap()
    }

    #[test]
    fn k3k3_values() {
        let g = make_hamming(&[3, 3]).unwrap();
        assert_eq!(brute(&g, 1).value, 3);
        assert_eq!(brute(&g, 2).value, 4);
        assert_eq!(brute(&g, 6).value, 9);
    }

    #[test]
    fn witnesses_verify_and_are_lex_least() {
        let g = make_hamming(&[3, 3]).unwrap();
        let res = brute(&g, 2);
        let w = res.witness.unwrap();
        assert_eq!(w.len(), 4);
        assert!(verify(&g, &w, 2).unwrap().is_valid());
        // No 4-subset lexicographically before the witness verifies.
        let members: Vec<u32> = w.members().iter().map(|v| v.0).collect();
        assert_eq!(members[0], 0, "search starts from vertex 0");
    }

    #[test]
    fn infeasible_k_is_an_error() {
        let g = make_hamming(&[3, 3]).unwrap();
        assert!(matches!(
            wdim_exact_bruteforce(&g, 7, &SearchOptions::default()),
            Err(ResolvingError::KExceedsKappa { k: 7, kappa: 6 })
        ));
    }

    #[test]
    fn budget_is_respected() {
        let g = make_hamming(&[4, 4]).unwrap();
        let opts = SearchOptions {
            node_budget: 10,
            exact_pair_bound: false,
        };
        assert!(matches!(
            wdim_exact_bruteforce(&g, 5, &opts),
            Err(ResolvingError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn exact_bound_agrees_with_uniform() {
        let g = make_hamming(&[3, 3]).unwrap();
        let exact = SearchOptions {
            exact_pair_bound: true,
            ..Default::default()
        };
        for k in 1..=6 {
            assert_eq!(
                wdim_exact_bruteforce(&g, k, &exact).unwrap().value,
                brute(&g, k).value
            );
        }
    }

    #[test]
    fn path_graph_search() {
        // On a path, the two leaves resolve everything with slack diam-wide.
        let g = make_from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = brute(&g, 1);
        assert_eq!(r.value, 1);
        let r = brute(&g, 2);
        assert!(verify(&g, r.witness.as_ref().unwrap(), 2).unwrap().is_valid());
    }

    #[test]
    fn nesting_in_k() {
        for dims in [[3u16, 3], [4, 3]] {
            let g = make_hamming(&dims).unwrap();
            let kappa = kappa_bruteforce(&g);
            let mut prev = 0;
            for k in 1..=kappa {
                let v = brute(&g, k).value;
                assert!(v >= prev, "wdim must be nondecreasing in k");
                prev = v;
            }
        }
    }
}
