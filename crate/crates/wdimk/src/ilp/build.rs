//! Model builders for the three formulations.

use super::{
    Formulation, IlpConstraint, IlpError, IlpModel, IlpVar, ModelMeta, Sense, VarKind,
};
use crate::graph::{Graph, VertexId};
use crate::resolving::VertexSet;

fn hamming2(g: &Graph) -> Result<(u16, u16), IlpError> {
    g.hamming2_dims().ok_or(IlpError::UnsupportedGraph)
}

fn coords2(m: u16, v: VertexId) -> (u16, u16) {
    ((v.0 / m as u32) as u16, (v.0 % m as u32) as u16)
}

fn aligned2(m: u16, u: VertexId, v: VertexId) -> bool {
    let (iu, ju) = coords2(m, u);
    let (iv, jv) = coords2(m, v);
    (iu == iv) != (ju == jv)
}

fn check_k(g: &Graph, n: u16, m: u16, k: u32) -> Result<(), IlpError> {
    let kappa = 2 * n.min(m) as u32;
    debug_assert_eq!(kappa, crate::resolving::kappa_bruteforce(g));
    if k == 0 || k > kappa {
        return Err(IlpError::KExceedsKappa { k, kappa });
    }
    Ok(())
}

/// The constraint coefficient `a_uvw = |d(u,w) - d(v,w)|` on `K_n □ K_m`,
/// by the piecewise rule: 2 when `u, v` are not aligned and `w` is one of
/// them; 1 when they are aligned and `w` is one of them; 1 when `w` is a
/// third vertex aligned with exactly one of them; 0 otherwise.
pub fn coefficient_a(g: &Graph, u: VertexId, v: VertexId, w: VertexId) -> Result<u8, IlpError> {
    let (_, m) = hamming2(g)?;
    if u >= v {
        return Err(IlpError::BadOrder);
    }
    let a = if w == u || w == v {
        if aligned2(m, u, v) {
            1
        } else {
            2
        }
    } else {
        u8::from(aligned2(m, w, u) != aligned2(m, w, v))
    };
    debug_assert_eq!(
        a as i32,
        (g.dist(u, w) as i32 - g.dist(v, w) as i32).abs()
    );
    Ok(a)
}

/// `I_uv`: the third vertices aligned with exactly one of `u, v` — exactly
/// the coefficient-1 indices outside `{u, v}`.
pub fn index_set_iuv(g: &Graph, u: VertexId, v: VertexId) -> Result<VertexSet, IlpError> {
    let (_, m) = hamming2(g)?;
    if u == v {
        return Err(IlpError::SameVertex);
    }
    let mut members = Vec::new();
    for w in 0..g.vertex_count() as u32 {
        let w = VertexId(w);
        if w == u || w == v {
            continue;
        }
        if aligned2(m, w, u) != aligned2(m, w, v) {
            members.push(w);
        }
    }
    VertexSet::new(g, members).map_err(|e| IlpError::Internal(e.to_string()))
}

fn cell_vars(n: u16, m: u16) -> Vec<IlpVar> {
    let mut vars = Vec::with_capacity(n as usize * m as usize);
    for i in 0..n {
        for j in 0..m {
            vars.push(IlpVar {
                name: format!("s_{i}_{j}"),
                kind: VarKind::Binary,
            });
        }
    }
    vars
}

fn unit_objective(count: usize) -> Vec<(usize, i64)> {
    (0..count).map(|v| (v, 1)).collect()
}

/// Full formulation `F_s`: one constraint per unordered vertex pair.
pub fn build_fs(g: &Graph, k: u32) -> Result<IlpModel, IlpError> {
    let (n, m) = hamming2(g)?;
    check_k(g, n, m, k)?;
    let nm = g.vertex_count();
    let variables = cell_vars(n, m);
    let mut constraints = Vec::with_capacity(nm * (nm - 1) / 2);
    for u in 0..nm as u32 {
        for v in (u + 1)..nm as u32 {
            let (u, v) = (VertexId(u), VertexId(v));
            let mut terms = Vec::new();
            for w in 0..nm as u32 {
                let a = coefficient_a(g, u, v, VertexId(w))?;
                if a > 0 {
                    terms.push((w as usize, a as i64));
                }
            }
            constraints.push(IlpConstraint {
                name: format!("c{}", constraints.len() + 1),
                terms,
                sense: Sense::Ge,
                rhs: k as i64,
            });
        }
    }
    Ok(IlpModel {
        variables,
        objective: unit_objective(nm),
        constraints,
        meta: Some(ModelMeta {
            formulation: Formulation::Fs,
            n,
            m,
            k,
        }),
    })
}

/// Reduced formulation `F_s⁻`: aligned pairs only, valid for `k >= 4`.
pub fn build_fs_minus(g: &Graph, k: u32) -> Result<IlpModel, IlpError> {
    let (n, m) = hamming2(g)?;
    if k < 4 {
        return Err(IlpError::KTooSmallForReduction(k));
    }
    check_k(g, n, m, k)?;
    let nm = g.vertex_count();
    let variables = cell_vars(n, m);
    let mut constraints = Vec::new();
    for u in 0..nm as u32 {
        for v in (u + 1)..nm as u32 {
            let (u, v) = (VertexId(u), VertexId(v));
            if !aligned2(m, u, v) {
                continue;
            }
            let mut terms = Vec::new();
            for w in 0..nm as u32 {
                let a = coefficient_a(g, u, v, VertexId(w))?;
                if a > 0 {
                    terms.push((w as usize, a as i64));
                }
            }
            constraints.push(IlpConstraint {
                name: format!("c{}", constraints.len() + 1),
                terms,
                sense: Sense::Ge,
                rhs: k as i64,
            });
        }
    }
    Ok(IlpModel {
        variables,
        objective: unit_objective(nm),
        constraints,
        meta: Some(ModelMeta {
            formulation: Formulation::FsMinus,
            n,
            m,
            k,
        }),
    })
}

/// Layer formulation `F_gh`: cell variables plus integer layer counters
/// `h_j` (columns) and `g_i` (rows) with linkage equalities, pairwise layer
/// constraints, and — only for `k <= 3`, where they are not implied — the
/// non-aligned constraints rewritten through the counters.
pub fn build_fgh(g: &Graph, k: u32) -> Result<IlpModel, IlpError> {
    let (n, m) = hamming2(g)?;
    check_k(g, n, m, k)?;
    let nm = g.vertex_count();
    let mu = m as usize;
    let cell = |i: u16, j: u16| i as usize * mu + j as usize;
    let h_var = |j: u16| nm + j as usize;
    let g_var = |i: u16| nm + mu + i as usize;

    let mut variables = cell_vars(n, m);
    for j in 0..m {
        variables.push(IlpVar {
            name: format!("h_{j}"),
            kind: VarKind::Integer {
                upper: Some(n as i64),
            },
        });
    }
    for i in 0..n {
        variables.push(IlpVar {
            name: format!("g_{i}"),
            kind: VarKind::Integer {
                upper: Some(m as i64),
            },
        });
    }

    let mut constraints = Vec::new();
    let mut push = |terms: Vec<(usize, i64)>, sense: Sense, rhs: i64, count: &mut usize| {
        *count += 1;
        constraints.push(IlpConstraint {
            name: format!("c{count}"),
            terms,
            sense,
            rhs,
        });
    };
    let mut count = 0usize;

    // Linkage: h_j counts the cells of horizontal layer j, g_i of vertical i.
    for j in 0..m {
        let mut terms = vec![(h_var(j), 1)];
        terms.extend((0..n).map(|i| (cell(i, j), -1)));
        push(terms, Sense::Eq, 0, &mut count);
    }
    for i in 0..n {
        let mut terms = vec![(g_var(i), 1)];
        terms.extend((0..m).map(|j| (cell(i, j), -1)));
        push(terms, Sense::Eq, 0, &mut count);
    }

    // Every pair of horizontal layers, every pair of vertical layers.
    for j in 0..m {
        for j2 in (j + 1)..m {
            push(
                vec![(h_var(j), 1), (h_var(j2), 1)],
                Sense::Ge,
                k as i64,
                &mut count,
            );
        }
    }
    for i in 0..n {
        for i2 in (i + 1)..n {
            push(
                vec![(g_var(i), 1), (g_var(i2), 1)],
                Sense::Ge,
                k as i64,
                &mut count,
            );
        }
    }

    if k <= 3 {
        for u in 0..nm as u32 {
            for v in (u + 1)..nm as u32 {
                let (uid, vid) = (VertexId(u), VertexId(v));
                if aligned2(m, uid, vid) {
                    continue;
                }
                let (iu, ju) = coords2(m, uid);
                let (iv, jv) = coords2(m, vid);
                // The opposite corners of the 2x2 subgrid contribute nothing
                // and enter with coefficient -2.
                let terms = vec![
                    (h_var(ju), 1),
                    (h_var(jv), 1),
                    (g_var(iu), 1),
                    (g_var(iv), 1),
                    (cell(iu, jv), -2),
                    (cell(iv, ju), -2),
                ];
                push(terms, Sense::Ge, k as i64, &mut count);
            }
        }
    }

    Ok(IlpModel {
        variables,
        objective: unit_objective(nm),
        constraints,
        meta: Some(ModelMeta {
            formulation: Formulation::Fgh,
            n,
            m,
            k,
        }),
    })
}

/// Dispatches on the formulation tag.
pub fn build_model(g: &Graph, k: u32, f: Formulation) -> Result<IlpModel, IlpError> {
    match f {
        Formulation::Fs => build_fs(g, k),
        Formulation::FsMinus => build_fs_minus(g, k),
        Formulation::Fgh => build_fgh(g, k),
    }
}
