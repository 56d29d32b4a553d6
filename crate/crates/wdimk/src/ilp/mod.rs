//! Integer-programming formulations and an exact built-in solver.
//!
//! Three formulations compute `wdim_k(K_n □ K_m)`:
//!
//! * `F_s` — one covering constraint per unordered vertex pair, with
//!   precomputed coefficients `a_uvw = |d(u,w) - d(v,w)|` in `{0, 1, 2}`;
//! * `F_s⁻` — the same objective over aligned pairs only, valid for
//!   `k >= 4` where the non-aligned constraints are implied;
//! * `F_gh` — layer-count variables `h_j` (per column) and `g_i` (per row)
//!   linked to the cell variables, pairwise layer constraints, and the
//!   non-aligned family kept only for `k <= 3`.
//!
//! Models are plain data ([`IlpModel`]) and export to a deterministic
//! LP-format text file. Solving is done in-process: a depth-first
//! branch-and-bound over the binary variables, plus a count-vector fast path
//! for `F_gh` that enumerates layer-count vectors and realizes a witness
//! matrix (Gale–Ryser for `k >= 4`, a conflict-aware placement search for
//! `k <= 3`).

mod build;
mod fastpath;
mod lp_text;
mod solver;

pub use build::{build_fgh, build_fs, build_fs_minus, build_model, coefficient_a, index_set_iuv};
pub use lp_text::{export_lp, parse_lp, parse_lp_str, to_lp_string};
pub use solver::{solve, solve_with};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::resolving::{
    construct_xt, construct_xt_prime, construct_yn, verify, Method, ResolvingError, VertexSet,
    WdimResult,
};

#[derive(Error, Debug)]
pub enum IlpError {
    #[error("no weak {k}-resolving set exists: kappa of this graph is {kappa}")]
    KExceedsKappa { k: u32, kappa: u32 },
    #[error("the aligned-only reduction requires k >= 4, got {0}")]
    KTooSmallForReduction(u32),
    #[error("pair must be ordered u < v")]
    BadOrder,
    #[error("the two vertices must be distinct")]
    SameVertex,
    #[error("formulations are defined on two-dimensional Hamming graphs")]
    UnsupportedGraph,
    #[error("model is infeasible")]
    Infeasible,
    #[error("budget exhausted before any feasible solution was found")]
    BudgetExceeded,
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),
    #[error("lp parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("internal: {0}")]
    Internal(String),
}

/// Kind of a model variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VarKind {
    Binary,
    /// Nonnegative integer, optionally bounded above.
    Integer { upper: Option<i64> },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IlpVar {
    pub name: String,
    pub kind: VarKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Ge,
    Eq,
}

/// One linear constraint `sum(coef * var) sense rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IlpConstraint {
    pub name: String,
    /// `(variable index, coefficient)`, in emission order.
    pub terms: Vec<(usize, i64)>,
    pub sense: Sense,
    pub rhs: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Formulation {
    Fs,
    FsMinus,
    Fgh,
}

impl Formulation {
    pub fn method(self) -> Method {
        match self {
            Formulation::Fs => Method::IlpFs,
            Formulation::FsMinus => Method::IlpFsMinus,
            Formulation::Fgh => Method::IlpFgh,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Formulation::Fs => "fs",
            Formulation::FsMinus => "fs-",
            Formulation::Fgh => "fgh",
        }
    }
}

impl std::str::FromStr for Formulation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fs" => Ok(Formulation::Fs),
            "fs-" => Ok(Formulation::FsMinus),
            "fgh" => Ok(Formulation::Fgh),
            other => Err(format!("unknown formulation '{other}'")),
        }
    }
}

/// Provenance of a generated model: which formulation, for which graph and k.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModelMeta {
    pub formulation: Formulation,
    pub n: u16,
    pub m: u16,
    pub k: u32,
}

/// A minimization model with binary cell variables (and, for `F_gh`,
/// integer layer counters). Dialect-neutral: the LP exporter and the
/// built-in solver both consume this structure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IlpModel {
    pub variables: Vec<IlpVar>,
    /// Objective terms to minimize, `(variable index, coefficient)`.
    pub objective: Vec<(usize, i64)>,
    pub constraints: Vec<IlpConstraint>,
    pub meta: Option<ModelMeta>,
}

impl IlpModel {
    pub fn binary_count(&self) -> usize {
        self.variables
            .iter()
            .filter(|v| v.kind == VarKind::Binary)
            .count()
    }

    /// Structural equality ignoring provenance metadata.
    pub fn same_structure(&self, other: &IlpModel) -> bool {
        self.variables == other.variables
            && self.objective == other.objective
            && self.constraints == other.constraints
    }
}

/// How the solver arrived at its answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverPath {
    /// Depth-first branch-and-bound on the binary variables.
    BranchAndBound,
    /// Count-vector enumeration with Gale–Ryser realization (`F_gh`, k >= 4).
    CountVector,
    /// Count-vector enumeration with conflict-aware placement (`F_gh`, k <= 3).
    Placement,
}

/// Outcome of an exact solve.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub optimum: u64,
    /// Model indices of the binary variables set to 1.
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    pub method: SolverPath,
    pub proved_optimal: bool,
}

/// Solver knobs; the defaults match the documented budgets.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Branch-and-bound node budget.
    pub node_budget: u64,
    /// Cap on enumerated layer-count vectors in the `F_gh` fast path.
    pub vector_budget: u64,
    /// Allow the `F_gh` fast path; disable to force branch-and-bound.
    pub use_fast_path: bool,
    /// Emit telemetry lines on standard error.
    pub verbose: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: 10_000_000,
            vector_budget: 1_000_000,
            use_fast_path: true,
            verbose: false,
        }
    }
}

/// Builds and exactly solves the requested formulation for `wdim_k(g)`,
/// returning a verified witness.
///
/// When no hint is given, square graphs seed the incumbent with the
/// applicable constructive family (`X_t`, `X'_t`, `Y_n`, or the full vertex
/// set at `k = 2n`) — those sets are provably optimal, so branch-and-bound
/// only has to prove the matching lower bound.
pub fn wdim_ilp(
    g: &Graph,
    k: u32,
    formulation: Formulation,
    hint: Option<&VertexSet>,
    opts: &SolveOptions,
) -> Result<WdimResult, IlpError> {
    let model = build_model(g, k, formulation)?;
    let owned_hint = match hint {
        Some(h) => Some(h.clone()),
        None => default_hint(g, k),
    };
    let hint_vars: Option<Vec<usize>> = owned_hint
        .as_ref()
        .map(|h| h.members().iter().map(|v| v.index()).collect());
    let result = solve_with(&model, hint_vars.as_deref(), opts)?;

    let witness_ids: Vec<VertexId> = result
        .witness
        .iter()
        .map(|&idx| VertexId(idx as u32))
        .collect();
    let witness =
        VertexSet::new(g, witness_ids).map_err(|e| IlpError::Internal(e.to_string()))?;
    if result.proved_optimal {
        let cert = verify(g, &witness, k).map_err(|e| IlpError::Internal(e.to_string()))?;
        if !cert.is_valid() {
            return Err(IlpError::Internal(format!(
                "solver witness fails verification: min {} < k {}",
                cert.min_value(),
                k
            )));
        }
        if witness.len() as u64 != result.optimum {
            return Err(IlpError::Internal(
                "witness cardinality disagrees with reported optimum".into(),
            ));
        }
    }
    Ok(WdimResult {
        k,
        value: result.optimum,
        witness: Some(witness),
        method: formulation.method(),
        proved: result.proved_optimal,
    })
}

/// The provably optimal construction for `K_n □ K_n` at this `k`, when one
/// exists.
pub fn default_hint(g: &Graph, k: u32) -> Option<VertexSet> {
    let (n, m) = g.hamming2_dims()?;
    if n != m || n < 3 {
        return None;
    }
    let two_n = 2 * n as u32;
    let result = if k == two_n {
        Ok(VertexSet::full(g))
    } else if k == 2 && n >= 6 {
        construct_yn(g)
    } else if k >= 4 && k.is_multiple_of(2) && k <= two_n - 2 {
        construct_xt(g, n - (k / 2) as u16)
    } else if k >= 5 && k % 2 == 1 && k < two_n {
        construct_xt_prime(g, n - k.div_ceil(2) as u16)
    } else {
        Err(ResolvingError::OutOfRange(String::new()))
    };
    result.ok()
}
