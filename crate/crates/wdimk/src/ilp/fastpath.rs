//! Structure-exploiting solver for canonical `F_gh` models.
//!
//! After eliminating the cell variables, a feasible solution of `F_gh` is a
//! 0-1 matrix whose row sums `g` and column sums `h` each have every pair
//! summing to at least `k`. For `k >= 4` nothing else is required, so the
//! optimum is the smallest total for which some `(g, h)` pair is realizable
//! as a 0-1 matrix — a Gale–Ryser check plus a greedy filling. For
//! `k <= 3` the non-aligned constraints additionally restrict *where* cells
//! may sit, but only through the line sums of their endpoints, which turns
//! the realization question into a small exact placement search.
//!
//! Sorted count vectors are enumerated in a canonical order by increasing
//! total, so results are deterministic and the first realizable total is
//! the optimum.

use super::{SolveOptions, SolveResult, SolverPath};

pub(crate) enum FastOutcome {
    Solved(SolveResult),
    Infeasible,
    /// Enumeration exceeded its budget; caller falls back to branch-and-bound.
    Budget,
}

/// Exact `F_gh` solve for `K_n □ K_m` at threshold `k`.
pub(crate) fn solve_fgh(n: u16, m: u16, k: u32, opts: &SolveOptions) -> FastOutcome {
    let rows = n as usize;
    let cols = m as usize;
    let (Some(lb_h), Some(lb_g)) = (
        min_vector_sum(cols, n as u32, k),
        min_vector_sum(rows, m as u32, k),
    ) else {
        return FastOutcome::Infeasible;
    };
    let total_cells = rows as u64 * cols as u64;
    let mut vectors_used = 0u64;
    let mut place_nodes = 0u64;

    let mut total = lb_h.max(lb_g);
    while total <= total_cells {
        let Some(hs) = sorted_vectors(cols, n as u32, total, k, &mut vectors_used, opts.vector_budget)
        else {
            return FastOutcome::Budget;
        };
        let Some(gs) = sorted_vectors(rows, m as u32, total, k, &mut vectors_used, opts.vector_budget)
        else {
            return FastOutcome::Budget;
        };
        for g in &gs {
            for h in &hs {
                let cells = if k >= 4 {
                    if gale_ryser(g, h) {
                        Some(materialize(g, h))
                    } else {
                        None
                    }
                } else {
                    match place(g, h, k, &mut place_nodes, opts.node_budget) {
                        Ok(found) => found,
                        Err(()) => return FastOutcome::Budget,
                    }
                };
                if let Some(cells) = cells {
                    let mut witness: Vec<usize> =
                        cells.iter().map(|&(i, j)| i * cols + j).collect();
                    witness.sort_unstable();
                    if opts.verbose {
                        eprintln!(
                            "wdimk-solver: event=fastpath optimum={total} vectors={vectors_used} placement_nodes={place_nodes}"
                        );
                    }
                    return FastOutcome::Solved(SolveResult {
                        optimum: total,
                        witness,
                        nodes_explored: vectors_used + place_nodes,
                        method: if k >= 4 {
                            SolverPath::CountVector
                        } else {
                            SolverPath::Placement
                        },
                        proved_optimal: true,
                    });
                }
            }
        }
        total += 1;
    }
    FastOutcome::Infeasible
}

/// Minimum total of `parts` entries in `[0, max]` whose two smallest sum to
/// at least `k`: one entry at `floor(k/2)`, the rest at `ceil(k/2)`.
fn min_vector_sum(parts: usize, max: u32, k: u32) -> Option<u64> {
    if k > 2 * max {
        return None;
    }
    debug_assert!(parts >= 2);
    Some(k as u64 / 2 + (parts as u64 - 1) * (k as u64).div_ceil(2))
}

/// All nonincreasing vectors with `parts` entries in `[0, max]`, summing to
/// `total`, whose last two entries sum to at least `pair_min`. Canonical
/// order: larger leading entries first. Returns `None` when the running
/// vector budget runs out.
fn sorted_vectors(
    parts: usize,
    max: u32,
    total: u64,
    pair_min: u32,
    used: &mut u64,
    budget: u64,
) -> Option<Vec<Vec<u32>>> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        out: &mut Vec<Vec<u32>>,
        cur: &mut Vec<u32>,
        parts: usize,
        cap: u32,
        remaining: u64,
        pair_min: u32,
        used: &mut u64,
        budget: u64,
    ) -> bool {
        let left = parts - cur.len();
        if left == 0 {
            if remaining == 0 {
                let n = cur.len();
                if cur[n - 1] + cur[n - 2] >= pair_min {
                    *used += 1;
                    if *used > budget {
                        return false;
                    }
                    out.push(cur.clone());
                }
            }
            return true;
        }
        if remaining > cap as u64 * left as u64 {
            return true;
        }
        let hi = cap.min(remaining.min(u32::MAX as u64) as u32);
        for v in (0..=hi).rev() {
            // The tail still to place cannot exceed v per entry.
            if remaining - v as u64 > v as u64 * (left as u64 - 1) {
                continue;
            }
            cur.push(v);
            let ok = rec(out, cur, parts, v, remaining - v as u64, pair_min, used, budget);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    if rec(&mut out, &mut cur, parts, max, total, pair_min, used, budget) {
        Some(out)
    } else {
        None
    }
}

/// Gale–Ryser: a 0-1 matrix with row sums `rows` (nonincreasing) and column
/// sums `cols` exists iff the totals agree and each prefix of the row sums
/// is dominated by the conjugate column capacity.
pub(crate) fn gale_ryser(rows: &[u32], cols: &[u32]) -> bool {
    debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
    let sr: u64 = rows.iter().map(|&r| r as u64).sum();
    let sc: u64 = cols.iter().map(|&c| c as u64).sum();
    if sr != sc {
        return false;
    }
    if rows.first().is_some_and(|&r| r as usize > cols.len()) {
        return false;
    }
    if cols.iter().any(|&c| c as usize > rows.len()) {
        return false;
    }
    let mut prefix = 0u64;
    for t in 1..=rows.len() {
        prefix += rows[t - 1] as u64;
        let capacity: u64 = cols.iter().map(|&c| (c as u64).min(t as u64)).sum();
        if prefix > capacity {
            return false;
        }
    }
    true
}

/// Greedy realization valid whenever [`gale_ryser`] holds: each row (taken
/// in nonincreasing order) fills the columns with the largest remaining
/// demand, lowest index first.
pub(crate) fn materialize(rows: &[u32], cols: &[u32]) -> Vec<(usize, usize)> {
    let mut caps: Vec<(u32, usize)> = cols.iter().copied().zip(0..).collect();
    let mut cells = Vec::with_capacity(rows.iter().map(|&r| r as usize).sum());
    for (i, &need) in rows.iter().enumerate() {
        caps.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for slot in caps.iter_mut().take(need as usize) {
            debug_assert!(slot.0 > 0, "Gale-Ryser must be checked first");
            slot.0 -= 1;
            cells.push((i, slot.1));
        }
    }
    debug_assert!(caps.iter().all(|&(c, _)| c == 0));
    cells.sort_unstable();
    cells
}

/// Exact placement search for `k <= 3`.
///
/// Besides the line sums, a feasible cell set must satisfy, for every 2x2
/// subgrid, the two diagonal constraints of the non-aligned family. In
/// terms of the cell weight `w(i,j) = g_i + h_j` these say exactly:
///
/// * two chosen cells in different rows and columns need `w + w' >= k + 4`;
/// * a chosen and an unchosen cell in different rows and columns need
///   `w + w' >= k + 2`.
///
/// So cells with an independent partner of combined weight below `k + 2`
/// are unusable outright, and pairs with combined weight below `k + 4` are
/// mutually exclusive. The search fills rows in order with column-subset
/// enumeration, pruning by remaining-capacity realizability (Gale–Ryser)
/// and collapsing indistinguishable columns (same demand, same fill
/// history) to their first representative.
fn place(
    g: &[u32],
    h: &[u32],
    k: u32,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<Vec<(usize, usize)>>, ()> {
    if !gale_ryser(g, h) {
        return Ok(None);
    }
    let n = g.len();
    let m = h.len();
    let min_excl = |vals: &[u32], i: usize| {
        if i == vals.len() - 1 {
            vals[vals.len() - 2]
        } else {
            vals[vals.len() - 1]
        }
    };

    let mut forbidden = vec![false; n * m];
    for i in 0..n {
        for j in 0..m {
            let w = g[i] + h[j];
            let partner = min_excl(g, i) + min_excl(h, j);
            forbidden[i * m + j] = w + partner <= k + 1;
        }
    }

    let mut search = PlaceSearch {
        g,
        h,
        k,
        n,
        m,
        forbidden,
        caps: h.to_vec(),
        history: vec![Vec::new(); m],
        chosen: Vec::new(),
        row_cells: Vec::new(),
        nodes,
        budget,
    };
    search.rows(0)
}

struct PlaceSearch<'a> {
    g: &'a [u32],
    h: &'a [u32],
    k: u32,
    n: usize,
    m: usize,
    forbidden: Vec<bool>,
    caps: Vec<u32>,
    history: Vec<Vec<u32>>,
    chosen: Vec<(usize, usize)>,
    row_cells: Vec<usize>,
    nodes: &'a mut u64,
    budget: u64,
}

impl PlaceSearch<'_> {
    fn rows(&mut self, i: usize) -> Result<Option<Vec<(usize, usize)>>, ()> {
        if i == self.n {
            debug_assert!(self.caps.iter().all(|&c| c == 0));
            return Ok(Some(self.chosen.clone()));
        }
        if !gale_ryser(&self.g[i..], &self.caps) {
            return Ok(None);
        }
        // Columns with the same demand and the same fill history are
        // interchangeable; only their first representative may start a run.
        let mut group = vec![0usize; self.m];
        let mut next_group = 0usize;
        for j in 0..self.m {
            let found = (0..j)
                .find(|&prev| {
                    self.h[prev] == self.h[j] && self.history[prev] == self.history[j]
                })
                .map(|prev| group[prev]);
            group[j] = found.unwrap_or_else(|| {
                next_group += 1;
                next_group - 1
            });
        }
        let mut blocked = vec![false; next_group];
        self.columns(i, self.g[i] as usize, 0, &group, &mut blocked)
    }

    fn columns(
        &mut self,
        i: usize,
        need: usize,
        start: usize,
        group: &[usize],
        blocked: &mut [bool],
    ) -> Result<Option<Vec<(usize, usize)>>, ()> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(());
        }
        if need == 0 {
            let row_len = self.row_cells.len();
            let found = self.rows(i + 1)?;
            debug_assert_eq!(self.row_cells.len(), row_len);
            return Ok(found);
        }
        if self.m - start < need {
            return Ok(None);
        }
        let mut newly_blocked: Vec<usize> = Vec::new();
        let mut result = Ok(None);
        for j in start..self.m {
            let usable = self.caps[j] > 0
                && !self.forbidden[i * self.m + j]
                && !blocked[group[j]]
                && !self.conflicts(i, j);
            if usable {
                self.caps[j] -= 1;
                self.history[j].push(i as u32);
                self.chosen.push((i, j));
                self.row_cells.push(j);
                let sub = self.columns(i, need - 1, j + 1, group, blocked);
                self.row_cells.pop();
                self.chosen.pop();
                self.history[j].pop();
                self.caps[j] += 1;
                match sub {
                    Ok(Some(found)) => {
                        result = Ok(Some(found));
                        break;
                    }
                    Ok(None) => {}
                    Err(()) => {
                        result = Err(());
                        break;
                    }
                }
            }
            // Passing over j commits every identical column to stay out of
            // the rest of this row.
            if !blocked[group[j]] {
                blocked[group[j]] = true;
                newly_blocked.push(group[j]);
            }
        }
        for gid in newly_blocked {
            blocked[gid] = false;
        }
        result
    }

    /// A cell conflicts when some already chosen cell in a different row
    /// and column has combined weight at most `k + 3`.
    fn conflicts(&self, i: usize, j: usize) -> bool {
        let w = self.g[i] + self.h[j];
        self.chosen
            .iter()
            .any(|&(r, c)| c != j && r != i && w + self.g[r] + self.h[c] <= self.k + 3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gale_ryser_basics() {
        assert!(gale_ryser(&[2, 2], &[2, 2]));
        assert!(gale_ryser(&[2, 1], &[1, 1, 1]));
        assert!(!gale_ryser(&[3, 3, 1], &[3, 3, 1]));
        assert!(!gale_ryser(&[2, 2], &[4]));
        assert!(!gale_ryser(&[2], &[1, 1, 1]));
    }

    #[test]
    fn materialize_realizes_line_sums() {
        let rows = [3u32, 2, 2, 1];
        let cols = [2u32, 2, 2, 1, 1];
        assert!(gale_ryser(&rows, &cols));
        let cells = materialize(&rows, &cols);
        let mut rsum = vec![0u32; rows.len()];
        let mut csum = vec![0u32; cols.len()];
        for &(i, j) in &cells {
            rsum[i] += 1;
            csum[j] += 1;
        }
        assert_eq!(rsum, rows);
        assert_eq!(csum, cols);
    }

    #[test]
    fn sorted_vector_enumeration() {
        let mut used = 0u64;
        let vs = sorted_vectors(3, 3, 5, 3, &mut used, 1_000).unwrap();
        // Nonincreasing, entries <= 3, total 5, last two sum >= 3.
        assert!(vs.contains(&vec![2, 2, 1]));
        assert!(!vs.contains(&vec![3, 1, 1]));
        assert!(!vs.contains(&vec![3, 2, 0]));
        for v in &vs {
            assert_eq!(v.iter().sum::<u32>(), 5);
            assert!(v.windows(2).all(|w| w[0] >= w[1]));
            assert!(v[1] + v[2] >= 3);
        }
    }

    #[test]
    fn fastpath_square_even_k() {
        // wdim_4(K_5 [] K_5) = 10 and wdim_10 = 25.
        let opts = SolveOptions::default();
        match solve_fgh(5, 5, 4, &opts) {
            FastOutcome::Solved(r) => {
                assert_eq!(r.optimum, 10);
                assert!(r.proved_optimal);
                assert_eq!(r.method, SolverPath::CountVector);
            }
            _ => panic!("expected solve"),
        }
        match solve_fgh(5, 5, 10, &opts) {
            FastOutcome::Solved(r) => assert_eq!(r.optimum, 25),
            _ => panic!("expected solve"),
        }
    }

    #[test]
    fn fastpath_small_k_square() {
        let opts = SolveOptions::default();
        // wdim_2(K_n [] K_n) = ceil(4n/3) at n = 3, 5, 6.
        for (n, want) in [(3u16, 4u64), (5, 7), (6, 8)] {
            match solve_fgh(n, n, 2, &opts) {
                FastOutcome::Solved(r) => {
                    assert_eq!(r.optimum, want, "n={n}");
                    assert_eq!(r.method, SolverPath::Placement);
                }
                _ => panic!("expected solve"),
            }
        }
        // wdim_3(K_n [] K_n) = 2n.
        for n in [3u16, 4, 5] {
            match solve_fgh(n, n, 3, &opts) {
                FastOutcome::Solved(r) => assert_eq!(r.optimum, 2 * n as u64, "n={n}"),
                _ => panic!("expected solve"),
            }
        }
    }

    #[test]
    fn fastpath_witness_has_correct_line_sums() {
        let opts = SolveOptions::default();
        let FastOutcome::Solved(r) = solve_fgh(6, 7, 5, &opts) else {
            panic!("expected solve");
        };
        assert_eq!(r.optimum, 20); // m * ceil(5/2) - 1
        assert_eq!(r.witness.len() as u64, r.optimum);
        let mut rows = [0u32; 6];
        let mut cols = [0u32; 7];
        for &v in &r.witness {
            rows[v / 7] += 1;
            cols[v % 7] += 1;
        }
        for a in 0..6 {
            for b in (a + 1)..6 {
                assert!(rows[a] + rows[b] >= 5);
            }
        }
        for a in 0..7 {
            for b in (a + 1)..7 {
                assert!(cols[a] + cols[b] >= 5);
            }
        }
    }

    #[test]
    fn infeasible_k() {
        let opts = SolveOptions::default();
        assert!(matches!(
            solve_fgh(3, 3, 7, &opts),
            FastOutcome::Infeasible
        ));
    }
}
