//! Exact solving: dispatch plus the depth-first branch-and-bound core.
//!
//! Integer layer variables are eliminated up front by substituting their
//! defining linkage equalities, so branching happens over binary variables
//! only. Propagation fixes a variable whenever a constraint cannot
//! otherwise be met, and the lower bound packs variable-disjoint
//! unsatisfied constraints, each contributing
//! `ceil(residual / max free coefficient)` additional picks.

use super::fastpath::{self, FastOutcome};
use super::{build_fgh, IlpError, IlpModel, Sense, SolveOptions, SolveResult, SolverPath, VarKind};
use crate::graph::make_hamming;

/// Solves with default options.
pub fn solve(model: &IlpModel, hint: Option<&[usize]>) -> Result<SolveResult, IlpError> {
    solve_with(model, hint, &SolveOptions::default())
}

/// Solves the model exactly.
///
/// Canonical `F_gh` models take the count-vector fast path; everything else
/// (and any fast-path budget overrun) goes through branch-and-bound. The
/// search is single-threaded and deterministic: the reported witness is the
/// first one found at the optimum under the canonical order.
pub fn solve_with(
    model: &IlpModel,
    hint: Option<&[usize]>,
    opts: &SolveOptions,
) -> Result<SolveResult, IlpError> {
    if opts.use_fast_path {
        if let Some(meta) = &model.meta {
            if meta.formulation == super::Formulation::Fgh && is_canonical_fgh(model) {
                match fastpath::solve_fgh(meta.n, meta.m, meta.k, opts) {
                    FastOutcome::Solved(result) => return Ok(result),
                    FastOutcome::Infeasible => return Err(IlpError::Infeasible),
                    FastOutcome::Budget => {
                        if opts.verbose {
                            eprintln!("wdimk-solver: event=fastpath-budget fallback=branch-and-bound");
                        }
                    }
                }
            }
        }
    }
    solve_branch_and_bound(model, hint, opts)
}

/// The fast path assumes the exact constraint system of `build_fgh`; guard
/// against hand-edited models that merely claim the tag.
fn is_canonical_fgh(model: &IlpModel) -> bool {
    let Some(meta) = &model.meta else {
        return false;
    };
    let Ok(g) = make_hamming(&[meta.n, meta.m]) else {
        return false;
    };
    match build_fgh(&g, meta.k) {
        Ok(canonical) => canonical.same_structure(model),
        Err(_) => false,
    }
}

/// Branch-and-bound entry point, fast path bypassed.
pub(crate) fn solve_branch_and_bound(
    model: &IlpModel,
    hint: Option<&[usize]>,
    opts: &SolveOptions,
) -> Result<SolveResult, IlpError> {
    let reduced = reduce(model)?;
    let mut bb = Bb::new(&reduced, opts);

    if let Some(hint_vars) = hint {
        bb.seed_incumbent(hint_vars, model);
    }

    let feasible_root = bb.propagate_all();
    if feasible_root {
        bb.dfs();
    }

    let proved = !bb.budget_hit;
    match bb.best.take() {
        Some((value, reduced_ones)) => {
            let mut witness: Vec<usize> = reduced_ones
                .iter()
                .map(|&r| reduced.binary_model_idx[r as usize])
                .collect();
            witness.sort_unstable();
            if opts.verbose {
                eprintln!(
                    "wdimk-solver: event=done optimum={value} nodes={} proved={proved}",
                    bb.nodes
                );
            }
            Ok(SolveResult {
                optimum: value,
                witness,
                nodes_explored: bb.nodes,
                method: SolverPath::BranchAndBound,
                proved_optimal: proved,
            })
        }
        None if proved => Err(IlpError::Infeasible),
        None => Err(IlpError::BudgetExceeded),
    }
}

struct RCon {
    terms: Vec<(u32, i64)>,
    rhs: i64,
}

struct Reduced {
    nb: usize,
    binary_model_idx: Vec<usize>,
    cons: Vec<RCon>,
    incidence: Vec<Vec<(u32, i64)>>,
    order: Vec<u32>,
    words: usize,
}

/// Eliminates integer variables through their defining equalities and
/// normalizes everything to `>=` constraints over binaries.
fn reduce(model: &IlpModel) -> Result<Reduced, IlpError> {
    let nvars = model.variables.len();
    let mut reduced_of = vec![usize::MAX; nvars];
    let mut binary_model_idx = Vec::new();
    for (i, var) in model.variables.iter().enumerate() {
        if var.kind == VarKind::Binary {
            reduced_of[i] = binary_model_idx.len();
            binary_model_idx.push(i);
        }
    }
    let nb = binary_model_idx.len();

    // The bound machinery equates cost with cardinality, so the objective
    // must be exactly "count the binaries".
    let mut covered = vec![false; nvars];
    for &(v, c) in &model.objective {
        if c != 1 || model.variables[v].kind != VarKind::Binary || covered[v] {
            return Err(IlpError::UnsupportedModel(
                "objective must count each binary variable exactly once".into(),
            ));
        }
        covered[v] = true;
    }
    if binary_model_idx.iter().any(|&v| !covered[v]) {
        return Err(IlpError::UnsupportedModel(
            "every binary variable must appear in the objective".into(),
        ));
    }

    // defs[v] = (constant, terms over reduced binaries) for integer var v.
    type Definition = (i64, Vec<(u32, i64)>);
    let mut defs: Vec<Option<Definition>> = vec![None; nvars];
    let mut used_as_def = vec![false; model.constraints.len()];
    for (ci, c) in model.constraints.iter().enumerate() {
        if c.sense != Sense::Eq {
            continue;
        }
        let mut int_term: Option<(usize, i64)> = None;
        let mut ok = true;
        for &(v, a) in &c.terms {
            match model.variables[v].kind {
                VarKind::Binary => {}
                VarKind::Integer { .. } => {
                    if int_term.is_some() {
                        ok = false;
                        break;
                    }
                    int_term = Some((v, a));
                }
            }
        }
        let Some((iv, coef)) = int_term else { continue };
        if !ok || coef.abs() != 1 || defs[iv].is_some() {
            continue;
        }
        // coef * x + sum(a b) = rhs  =>  x = coef * (rhs - sum(a b)).
        let terms = c
            .terms
            .iter()
            .filter(|&&(v, _)| v != iv)
            .map(|&(v, a)| (reduced_of[v] as u32, -coef * a))
            .collect();
        defs[iv] = Some((coef * c.rhs, terms));
        used_as_def[ci] = true;
    }

    let mut cons: Vec<RCon> = Vec::new();
    let mut acc = vec![0i64; nb];
    let mut touched: Vec<u32> = Vec::new();
    let push_con = |cons: &mut Vec<RCon>, terms: Vec<(u32, i64)>, rhs: i64| -> Result<(), IlpError> {
        if terms.is_empty() {
            if rhs > 0 {
                return Err(IlpError::Infeasible);
            }
            return Ok(());
        }
        cons.push(RCon { terms, rhs });
        Ok(())
    };

    for (ci, c) in model.constraints.iter().enumerate() {
        if used_as_def[ci] {
            continue;
        }
        let mut konst = 0i64;
        for &(v, a) in &c.terms {
            match model.variables[v].kind {
                VarKind::Binary => {
                    let r = reduced_of[v];
                    if acc[r] == 0 {
                        touched.push(r as u32);
                    }
                    acc[r] += a;
                }
                VarKind::Integer { .. } => {
                    let Some((dk, dterms)) = &defs[v] else {
                        return Err(IlpError::UnsupportedModel(format!(
                            "integer variable {} lacks a defining equality",
                            model.variables[v].name
                        )));
                    };
                    konst += a * dk;
                    for &(r, b) in dterms {
                        if acc[r as usize] == 0 {
                            touched.push(r);
                        }
                        acc[r as usize] += a * b;
                    }
                }
            }
        }
        touched.sort_unstable();
        let terms: Vec<(u32, i64)> = touched
            .iter()
            .filter(|&&r| acc[r as usize] != 0)
            .map(|&r| (r, acc[r as usize]))
            .collect();
        let rhs = c.rhs - konst;
        for &r in &touched {
            acc[r as usize] = 0;
        }
        touched.clear();

        match c.sense {
            Sense::Ge => push_con(&mut cons, terms, rhs)?,
            Sense::Eq => {
                let negated: Vec<(u32, i64)> = terms.iter().map(|&(v, a)| (v, -a)).collect();
                push_con(&mut cons, terms, rhs)?;
                push_con(&mut cons, negated, -rhs)?;
            }
        }
    }

    // Eliminated variables keep their box bounds unless trivially implied.
    for (v, var) in model.variables.iter().enumerate() {
        let VarKind::Integer { upper } = &var.kind else {
            continue;
        };
        let Some((konst, terms)) = &defs[v] else {
            continue;
        };
        if let Some(u) = upper {
            let max_expr: i64 = konst + terms.iter().map(|&(_, b)| b.max(0)).sum::<i64>();
            if max_expr > *u {
                let negated: Vec<(u32, i64)> = terms.iter().map(|&(r, b)| (r, -b)).collect();
                push_con(&mut cons, negated, konst - u)?;
            }
        }
        let min_expr: i64 = konst + terms.iter().map(|&(_, b)| b.min(0)).sum::<i64>();
        if min_expr < 0 {
            push_con(&mut cons, terms.clone(), -konst)?;
        }
    }

    let mut incidence: Vec<Vec<(u32, i64)>> = vec![Vec::new(); nb];
    for (ci, c) in cons.iter().enumerate() {
        for &(v, a) in &c.terms {
            incidence[v as usize].push((ci as u32, a));
        }
    }

    // Branch on the variables that appear in the most constraints first.
    let mut order: Vec<u32> = (0..nb as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(incidence[v as usize].len()), v));

    Ok(Reduced {
        nb,
        binary_model_idx,
        cons,
        incidence,
        order,
        words: nb.div_ceil(64),
    })
}

const FREE: i8 = -1;

struct Bb<'a> {
    red: &'a Reduced,
    state: Vec<i8>,
    lb: Vec<i64>,
    posfree: Vec<i64>,
    negfree: Vec<i64>,
    /// Per constraint: positive coefficient values (descending) with the
    /// count still free.
    pos_counts: Vec<Vec<(i64, u32)>>,
    free_mask: Vec<Vec<u64>>,
    lb_unsat: Vec<bool>,
    unsat_count: usize,
    ones: u64,
    trail: Vec<u32>,
    queue: std::collections::VecDeque<u32>,
    in_queue: Vec<bool>,
    nodes: u64,
    budget: u64,
    budget_hit: bool,
    best: Option<(u64, Vec<u32>)>,
    best_value: u64,
    verbose: bool,
    pack_scratch: Vec<(u64, u32)>,
    pack_used: Vec<u64>,
}

impl<'a> Bb<'a> {
    fn new(red: &'a Reduced, opts: &SolveOptions) -> Self {
        let nc = red.cons.len();
        let mut lb = vec![0i64; nc];
        let mut posfree = vec![0i64; nc];
        let mut negfree = vec![0i64; nc];
        let mut pos_counts: Vec<Vec<(i64, u32)>> = vec![Vec::new(); nc];
        let mut free_mask = vec![vec![0u64; red.words]; nc];
        let mut lb_unsat = vec![false; nc];
        let mut unsat_count = 0;
        for (ci, c) in red.cons.iter().enumerate() {
            for &(v, a) in &c.terms {
                if a > 0 {
                    posfree[ci] += a;
                    match pos_counts[ci].iter_mut().find(|e| e.0 == a) {
                        Some(e) => e.1 += 1,
                        None => pos_counts[ci].push((a, 1)),
                    }
                } else {
                    negfree[ci] += a;
                }
                free_mask[ci][v as usize / 64] |= 1u64 << (v % 64);
            }
            pos_counts[ci].sort_by_key(|e| std::cmp::Reverse(e.0));
            if lb[ci] < c.rhs {
                lb_unsat[ci] = true;
                unsat_count += 1;
            }
            lb[ci] = 0;
        }
        Bb {
            red,
            state: vec![FREE; red.nb],
            lb,
            posfree,
            negfree,
            pos_counts,
            free_mask,
            lb_unsat,
            unsat_count,
            ones: 0,
            trail: Vec::new(),
            queue: std::collections::VecDeque::new(),
            in_queue: vec![false; nc],
            nodes: 0,
            budget: opts.node_budget,
            budget_hit: false,
            best: None,
            best_value: u64::MAX,
            verbose: opts.verbose,
            pack_scratch: Vec::new(),
            pack_used: vec![0u64; red.words],
        }
    }

    fn seed_incumbent(&mut self, hint_model_vars: &[usize], model: &IlpModel) {
        let mut mark = vec![false; model.variables.len()];
        for &v in hint_model_vars {
            if v >= mark.len() {
                return;
            }
            mark[v] = true;
        }
        let assignment: Vec<bool> = self
            .red
            .binary_model_idx
            .iter()
            .map(|&mi| mark[mi])
            .collect();
        // Hints must satisfy every reduced constraint to be adopted.
        for c in &self.red.cons {
            let lhs: i64 = c
                .terms
                .iter()
                .filter(|&&(v, _)| assignment[v as usize])
                .map(|&(_, a)| a)
                .sum();
            if lhs < c.rhs {
                return;
            }
        }
        let ones: Vec<u32> = (0..self.red.nb as u32)
            .filter(|&v| assignment[v as usize])
            .collect();
        self.best_value = ones.len() as u64;
        self.best = Some((self.best_value, ones));
        if self.verbose {
            eprintln!(
                "wdimk-solver: event=incumbent source=hint value={}",
                self.best_value
            );
        }
    }

    #[inline]
    fn fix(&mut self, v: u32, val: i8) {
        debug_assert_eq!(self.state[v as usize], FREE);
        self.state[v as usize] = val;
        self.trail.push(v);
        if val == 1 {
            self.ones += 1;
        }
        let word = v as usize / 64;
        let bit = 1u64 << (v % 64);
        for &(ci, a) in &self.red.incidence[v as usize] {
            let ci = ci as usize;
            self.free_mask[ci][word] &= !bit;
            if a > 0 {
                self.posfree[ci] -= a;
                let e = self.pos_counts[ci].iter_mut().find(|e| e.0 == a).unwrap();
                e.1 -= 1;
            } else {
                self.negfree[ci] -= a;
            }
            if val == 1 {
                let was_unsat = self.lb_unsat[ci];
                self.lb[ci] += a;
                let now_unsat = self.lb[ci] < self.red.cons[ci].rhs;
                if was_unsat != now_unsat {
                    self.lb_unsat[ci] = now_unsat;
                    if now_unsat {
                        self.unsat_count += 1;
                    } else {
                        self.unsat_count -= 1;
                    }
                }
            }
        }
    }

    fn unfix(&mut self, v: u32) {
        let val = self.state[v as usize];
        debug_assert_ne!(val, FREE);
        self.state[v as usize] = FREE;
        if val == 1 {
            self.ones -= 1;
        }
        let word = v as usize / 64;
        let bit = 1u64 << (v % 64);
        for &(ci, a) in &self.red.incidence[v as usize] {
            let ci = ci as usize;
            self.free_mask[ci][word] |= bit;
            if a > 0 {
                self.posfree[ci] += a;
                let e = self.pos_counts[ci].iter_mut().find(|e| e.0 == a).unwrap();
                e.1 += 1;
            } else {
                self.negfree[ci] += a;
            }
            if val == 1 {
                let was_unsat = self.lb_unsat[ci];
                self.lb[ci] -= a;
                let now_unsat = self.lb[ci] < self.red.cons[ci].rhs;
                if was_unsat != now_unsat {
                    self.lb_unsat[ci] = now_unsat;
                    if now_unsat {
                        self.unsat_count += 1;
                    } else {
                        self.unsat_count -= 1;
                    }
                }
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.unfix(v);
        }
    }

    fn enqueue(&mut self, ci: u32) {
        if !self.in_queue[ci as usize] {
            self.in_queue[ci as usize] = true;
            self.queue.push_back(ci);
        }
    }

    fn enqueue_incident(&mut self, v: u32) {
        let cons: Vec<u32> = self.red.incidence[v as usize]
            .iter()
            .map(|&(ci, _)| ci)
            .collect();
        for ci in cons {
            self.enqueue(ci);
        }
    }

    fn propagate_all(&mut self) -> bool {
        for ci in 0..self.red.cons.len() as u32 {
            self.enqueue(ci);
        }
        self.drain_queue()
    }

    /// Fixes everything forced by the pending constraints. Returns false on
    /// conflict (caller unwinds the trail).
    fn drain_queue(&mut self) -> bool {
        while let Some(ci) = self.queue.pop_front() {
            self.in_queue[ci as usize] = false;
            let rhs = self.red.cons[ci as usize].rhs;
            let ub = self.lb[ci as usize] + self.posfree[ci as usize];
            if ub < rhs {
                self.queue.clear();
                self.in_queue.iter_mut().for_each(|b| *b = false);
                return false;
            }
            let lo = self.lb[ci as usize] + self.negfree[ci as usize];
            if lo >= rhs {
                continue;
            }
            // A free variable whose loss (or whose negative swing) would
            // push the reachable maximum below rhs is forced.
            let mut forced: Vec<(u32, i8)> = Vec::new();
            for &(v, a) in &self.red.cons[ci as usize].terms {
                if self.state[v as usize] != FREE {
                    continue;
                }
                if a > 0 {
                    if ub - a < rhs {
                        forced.push((v, 1));
                    }
                } else if ub + a < rhs {
                    forced.push((v, 0));
                }
            }
            for (v, val) in forced {
                if self.state[v as usize] != FREE {
                    if self.state[v as usize] != val {
                        self.queue.clear();
                        self.in_queue.iter_mut().for_each(|b| *b = false);
                        return false;
                    }
                    continue;
                }
                self.fix(v, val);
                self.enqueue_incident(v);
            }
        }
        true
    }

    /// Packing bound: sum of `ceil(residual / max free coefficient)` over a
    /// greedily chosen family of variable-disjoint unsatisfied constraints.
    fn bound(&mut self) -> u64 {
        self.pack_scratch.clear();
        for (ci, c) in self.red.cons.iter().enumerate() {
            if !self.lb_unsat[ci] {
                continue;
            }
            let residual = c.rhs - self.lb[ci];
            let maxcoef = self.pos_counts[ci]
                .iter()
                .find(|e| e.1 > 0)
                .map(|e| e.0)
                .unwrap_or(0);
            if maxcoef <= 0 {
                // ub check in drain_queue would have caught this.
                continue;
            }
            let need = (residual as u64).div_ceil(maxcoef as u64);
            self.pack_scratch.push((need, ci as u32));
        }
        self.pack_scratch
            .sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        self.pack_used.iter_mut().for_each(|w| *w = 0);
        let mut bound = 0u64;
        let scratch = std::mem::take(&mut self.pack_scratch);
        for &(need, ci) in &scratch {
            let mask = &self.free_mask[ci as usize];
            if mask
                .iter()
                .zip(self.pack_used.iter())
                .all(|(m, u)| m & u == 0)
            {
                bound += need;
                for (u, m) in self.pack_used.iter_mut().zip(mask.iter()) {
                    *u |= m;
                }
            }
        }
        self.pack_scratch = scratch;
        bound
    }

    fn pick_branch_var(&self) -> Option<u32> {
        for &v in &self.red.order {
            if self.state[v as usize] != FREE {
                continue;
            }
            let active = self.red.incidence[v as usize]
                .iter()
                .any(|&(ci, _)| self.lb_unsat[ci as usize]);
            if active {
                return Some(v);
            }
        }
        None
    }

    fn dfs(&mut self) {
        if self.budget_hit {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.budget_hit = true;
            return;
        }
        if self.unsat_count == 0 {
            // Free variables settle to 0; the fixed ones are the solution.
            if self.ones < self.best_value {
                let ones: Vec<u32> = (0..self.red.nb as u32)
                    .filter(|&v| self.state[v as usize] == 1)
                    .collect();
                self.best_value = self.ones;
                if self.verbose {
                    eprintln!(
                        "wdimk-solver: event=incumbent value={} nodes={}",
                        self.best_value, self.nodes
                    );
                }
                self.best = Some((self.best_value, ones));
            }
            return;
        }
        if self.ones + self.bound() >= self.best_value {
            return;
        }
        let Some(v) = self.pick_branch_var() else {
            return;
        };
        for val in [1i8, 0i8] {
            let mark = self.trail.len();
            self.fix(v, val);
            self.enqueue_incident(v);
            if self.drain_queue() {
                self.dfs();
            }
            self.undo_to(mark);
            if self.budget_hit {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_hamming;
    use crate::ilp::{build_fs, build_fs_minus};

    fn bb(model: &IlpModel) -> SolveResult {
        solve_branch_and_bound(model, None, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn fs_small_optima() {
        let g = make_hamming(&[3, 3]).unwrap();
        assert_eq!(bb(&build_fs(&g, 2).unwrap()).optimum, 4);
        assert_eq!(bb(&build_fs(&g, 6).unwrap()).optimum, 9);
        let g44 = make_hamming(&[4, 4]).unwrap();
        assert_eq!(bb(&build_fs(&g44, 1).unwrap()).optimum, 4);
    }

    #[test]
    fn fs_matches_brute_force() {
        use crate::resolving::{wdim_exact_bruteforce, SearchOptions};
        // Every shape with n, m <= 4, every feasible k.
        for n in 2..=4u16 {
            for m in n..=4u16 {
                let g = make_hamming(&[n, m]).unwrap();
                let kappa = crate::resolving::kappa_bruteforce(&g);
                for k in 1..=kappa {
                    let want = wdim_exact_bruteforce(&g, k, &SearchOptions::default())
                        .unwrap()
                        .value;
                    let got = bb(&build_fs(&g, k).unwrap()).optimum;
                    assert_eq!(got, want, "n={n} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn fs_minus_reference_values() {
        let g = make_hamming(&[5, 5]).unwrap();
        assert_eq!(bb(&build_fs_minus(&g, 4).unwrap()).optimum, 10);
        let g = make_hamming(&[5, 6]).unwrap();
        assert_eq!(bb(&build_fs_minus(&g, 9).unwrap()).optimum, 29);
    }

    #[test]
    fn fs_minus_agrees_with_fs_for_k_ge_4() {
        for (n, m) in [(3u16, 3u16), (4, 3), (4, 4)] {
            let g = make_hamming(&[n, m]).unwrap();
            let kappa = 2 * n.min(m) as u32;
            for k in 4..=kappa {
                let full = bb(&build_fs(&g, k).unwrap()).optimum;
                let reduced = bb(&build_fs_minus(&g, k).unwrap()).optimum;
                assert_eq!(full, reduced, "n={n} m={m} k={k}");
            }
        }
    }

    #[test]
    fn witness_is_reported_and_proved() {
        let g = make_hamming(&[3, 3]).unwrap();
        let r = bb(&build_fs(&g, 2).unwrap());
        assert!(r.proved_optimal);
        assert_eq!(r.witness.len() as u64, r.optimum);
        assert_eq!(r.method, SolverPath::BranchAndBound);
    }

    #[test]
    fn hint_fixes_the_witness() {
        let g = make_hamming(&[3, 3]).unwrap();
        let model = build_fs(&g, 6).unwrap();
        let hint: Vec<usize> = (0..9).collect();
        let r = solve_branch_and_bound(&model, Some(&hint), &SolveOptions::default()).unwrap();
        assert_eq!(r.optimum, 9);
        assert_eq!(r.witness, hint);
    }

    #[test]
    fn invalid_hint_is_ignored() {
        let g = make_hamming(&[3, 3]).unwrap();
        let model = build_fs(&g, 2).unwrap();
        let r = solve_branch_and_bound(&model, Some(&[0usize]), &SolveOptions::default()).unwrap();
        assert_eq!(r.optimum, 4);
    }

    #[test]
    fn budget_returns_error_without_incumbent() {
        let g = make_hamming(&[4, 4]).unwrap();
        let model = build_fs(&g, 5).unwrap();
        let opts = SolveOptions {
            node_budget: 1,
            ..Default::default()
        };
        assert!(matches!(
            solve_branch_and_bound(&model, None, &opts),
            Err(IlpError::BudgetExceeded)
        ));
    }

    #[test]
    fn budget_with_hint_keeps_incumbent() {
        let g = make_hamming(&[4, 4]).unwrap();
        let model = build_fs(&g, 5).unwrap();
        let hint: Vec<usize> = (0..16).collect();
        let opts = SolveOptions {
            node_budget: 1,
            ..Default::default()
        };
        let r = solve_branch_and_bound(&model, Some(&hint), &opts).unwrap();
        assert!(!r.proved_optimal);
        assert_eq!(r.optimum, 16);
    }
}
