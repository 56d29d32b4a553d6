//! Deterministic LP-format text export and a parser for the same dialect.
//!
//! The writer emits ASCII with LF line endings and no wrapping inside
//! objective or constraint lines, so two exports of the same model are
//! byte-identical. Sections appear in the fixed order `Minimize`,
//! `Subject To`, `Bounds` (only when an integer variable carries an upper
//! bound), `Binaries`, `Generals`, `End`. Model provenance is stored in a
//! leading `\` comment and round-trips through the parser.

use std::fmt::Write as _;
use std::path::Path;

use super::{
    Formulation, IlpConstraint, IlpError, IlpModel, IlpVar, ModelMeta, Sense, VarKind,
};

/// Renders the model as LP-format text.
pub fn to_lp_string(model: &IlpModel) -> String {
    let mut out = String::new();
    if let Some(meta) = &model.meta {
        let _ = writeln!(
            out,
            "\\ meta formulation={} n={} m={} k={}",
            meta.formulation.tag(),
            meta.n,
            meta.m,
            meta.k
        );
    }
    out.push_str("Minimize\n");
    out.push_str(" obj:");
    out.push_str(&expr_string(&model.objective, model));
    out.push('\n');

    out.push_str("Subject To\n");
    for c in &model.constraints {
        let _ = write!(out, " {}:", c.name);
        out.push_str(&expr_string(&c.terms, model));
        let sense = match c.sense {
            Sense::Ge => ">=",
            Sense::Eq => "=",
        };
        let _ = writeln!(out, " {} {}", sense, c.rhs);
    }

    let bounded: Vec<&IlpVar> = model
        .variables
        .iter()
        .filter(|v| matches!(v.kind, VarKind::Integer { upper: Some(_) }))
        .collect();
    if !bounded.is_empty() {
        out.push_str("Bounds\n");
        for v in bounded {
            if let VarKind::Integer { upper: Some(u) } = v.kind {
                let _ = writeln!(out, " 0 <= {} <= {}", v.name, u);
            }
        }
    }

    let names_section = |out: &mut String, title: &str, names: Vec<&str>| {
        if names.is_empty() {
            return;
        }
        out.push_str(title);
        out.push('\n');
        for chunk in names.chunks(8) {
            out.push(' ');
            out.push_str(&chunk.join(" "));
            out.push('\n');
        }
    };
    names_section(
        &mut out,
        "Binaries",
        model
            .variables
            .iter()
            .filter(|v| v.kind == VarKind::Binary)
            .map(|v| v.name.as_str())
            .collect(),
    );
    names_section(
        &mut out,
        "Generals",
        model
            .variables
            .iter()
            .filter(|v| matches!(v.kind, VarKind::Integer { .. }))
            .map(|v| v.name.as_str())
            .collect(),
    );
    out.push_str("End\n");
    out
}

fn expr_string(terms: &[(usize, i64)], model: &IlpModel) -> String {
    let mut out = String::new();
    for (pos, &(var, coef)) in terms.iter().enumerate() {
        let name = &model.variables[var].name;
        let mag = coef.unsigned_abs();
        if pos == 0 {
            if coef < 0 {
                out.push_str(" -");
            }
        } else if coef < 0 {
            out.push_str(" -");
        } else {
            out.push_str(" +");
        }
        if mag != 1 {
            let _ = write!(out, " {mag}");
        }
        let _ = write!(out, " {name}");
    }
    out
}

/// Writes the model to a file, byte-deterministically.
pub fn export_lp(model: &IlpModel, path: &Path) -> Result<(), IlpError> {
    std::fs::write(path, to_lp_string(model))?;
    Ok(())
}

/// Reads a model back from a file written by [`export_lp`] (or hand-edited
/// in the same dialect).
pub fn parse_lp(path: &Path) -> Result<IlpModel, IlpError> {
    let text = std::fs::read_to_string(path)?;
    parse_lp_str(&text)
}

#[derive(PartialEq, Clone, Copy)]
enum Section {
    Preamble,
    Objective,
    Constraints,
    Bounds,
    Binaries,
    Generals,
    Done,
}

struct Parser {
    vars: Vec<IlpVar>,
    index: std::collections::HashMap<String, usize>,
    declared_binary: Vec<String>,
    declared_general: Vec<String>,
    bounds: Vec<(String, i64)>,
    objective: Vec<(usize, i64)>,
    constraints: Vec<IlpConstraint>,
    meta: Option<ModelMeta>,
}

impl Parser {
    fn var(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.vars.len();
        self.vars.push(IlpVar {
            name: name.to_string(),
            // Kind resolved from the declaration sections at the end.
            kind: VarKind::Binary,
        });
        self.index.insert(name.to_string(), i);
        i
    }
}

fn err(line: usize, msg: impl Into<String>) -> IlpError {
    IlpError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses LP-format text into a model, preserving variable, constraint and
/// term order.
pub fn parse_lp_str(text: &str) -> Result<IlpModel, IlpError> {
    let mut p = Parser {
        vars: Vec::new(),
        index: std::collections::HashMap::new(),
        declared_binary: Vec::new(),
        declared_general: Vec::new(),
        bounds: Vec::new(),
        objective: Vec::new(),
        constraints: Vec::new(),
        meta: None,
    };
    let mut section = Section::Preamble;
    let mut saw_objective = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('\\') {
            if let Some(meta) = parse_meta_comment(comment) {
                p.meta = Some(meta);
            }
            continue;
        }
        let lower = line.to_ascii_lowercase();
        match lower.as_str() {
            "minimize" | "min" => {
                section = Section::Objective;
                continue;
            }
            "subject to" | "st" | "s.t." => {
                section = Section::Constraints;
                continue;
            }
            "bounds" => {
                section = Section::Bounds;
                continue;
            }
            "binaries" | "binary" | "bin" => {
                section = Section::Binaries;
                continue;
            }
            "generals" | "general" | "gen" => {
                section = Section::Generals;
                continue;
            }
            "end" => {
                section = Section::Done;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Preamble => return Err(err(lineno, "expected a section header")),
            Section::Done => return Err(err(lineno, "content after End")),
            Section::Objective => {
                let body = match line.split_once(':') {
                    Some((_, rest)) => rest,
                    None => line,
                };
                let (terms, leftover) = parse_expr(body, &mut p, lineno)?;
                if !leftover.is_empty() {
                    return Err(err(lineno, "trailing tokens in objective"));
                }
                p.objective.extend(terms);
                saw_objective = true;
            }
            Section::Constraints => {
                let (name, rest) = line
                    .split_once(':')
                    .ok_or_else(|| err(lineno, "constraint needs a 'name:' prefix"))?;
                let (terms, leftover) = parse_expr(rest, &mut p, lineno)?;
                let mut tail = leftover.iter();
                let sense = match tail.next().map(String::as_str) {
                    Some(">=") => Sense::Ge,
                    Some("=") => Sense::Eq,
                    Some("<=") => Sense::Eq, // rewritten below by negation
                    other => {
                        return Err(err(
                            lineno,
                            format!("expected sense '>=' or '=', got {other:?}"),
                        ))
                    }
                };
                let le = leftover[0] == "<=";
                let rhs: i64 = tail
                    .next()
                    .ok_or_else(|| err(lineno, "missing right-hand side"))?
                    .parse()
                    .map_err(|_| err(lineno, "right-hand side must be an integer"))?;
                if tail.next().is_some() {
                    return Err(err(lineno, "trailing tokens after right-hand side"));
                }
                let (terms, sense, rhs) = if le {
                    // a <= b  ==>  -a >= -b
                    (
                        terms.into_iter().map(|(v, c)| (v, -c)).collect(),
                        Sense::Ge,
                        -rhs,
                    )
                } else {
                    (terms, sense, rhs)
                };
                p.constraints.push(IlpConstraint {
                    name: name.trim().to_string(),
                    terms,
                    sense,
                    rhs,
                });
            }
            Section::Bounds => {
                // Only the emitted form: "0 <= name <= upper".
                let toks: Vec<&str> = line.split_whitespace().collect();
                match toks.as_slice() {
                    ["0", "<=", name, "<=", upper] => {
                        let upper: i64 = upper
                            .parse()
                            .map_err(|_| err(lineno, "bound must be an integer"))?;
                        p.bounds.push((name.to_string(), upper));
                    }
                    _ => return Err(err(lineno, "unsupported bounds line")),
                }
            }
            Section::Binaries => {
                for name in line.split_whitespace() {
                    p.declared_binary.push(name.to_string());
                }
            }
            Section::Generals => {
                for name in line.split_whitespace() {
                    p.declared_general.push(name.to_string());
                }
            }
        }
    }
    if section != Section::Done {
        return Err(err(text.lines().count(), "missing End marker"));
    }
    if !saw_objective {
        return Err(err(0, "missing Minimize section"));
    }

    // Resolve kinds; every referenced variable must be declared.
    let mut kinds: std::collections::HashMap<&str, VarKind> = std::collections::HashMap::new();
    for name in &p.declared_binary {
        kinds.insert(name, VarKind::Binary);
    }
    for name in &p.declared_general {
        kinds.insert(name, VarKind::Integer { upper: None });
    }
    for (name, upper) in &p.bounds {
        match kinds.get_mut(name.as_str()) {
            Some(VarKind::Integer { upper: slot }) => *slot = Some(*upper),
            Some(VarKind::Binary) => {
                return Err(err(0, format!("bounds given for binary variable {name}")))
            }
            None => return Err(err(0, format!("bounds given for undeclared {name}"))),
        }
    }
    for var in &mut p.vars {
        match kinds.get(var.name.as_str()) {
            Some(kind) => var.kind = kind.clone(),
            None => {
                return Err(err(
                    0,
                    format!("variable {} missing from Binaries/Generals", var.name),
                ))
            }
        }
    }

    // Declared-but-unreferenced variables keep their declaration order at
    // the tail, mirroring the writer.
    for name in p
        .declared_binary
        .iter()
        .chain(p.declared_general.iter())
        .cloned()
        .collect::<Vec<_>>()
    {
        if !p.index.contains_key(&name) {
            let kind = kinds.get(name.as_str()).cloned().unwrap();
            let i = p.vars.len();
            p.vars.push(IlpVar { name: name.clone(), kind });
            p.index.insert(name, i);
        }
    }

    Ok(IlpModel {
        variables: p.vars,
        objective: p.objective,
        constraints: p.constraints,
        meta: p.meta,
    })
}

fn parse_meta_comment(comment: &str) -> Option<ModelMeta> {
    let rest = comment.trim().strip_prefix("meta ")?;
    let mut formulation = None;
    let mut n = None;
    let mut m = None;
    let mut k = None;
    for field in rest.split_whitespace() {
        let (key, value) = field.split_once('=')?;
        match key {
            "formulation" => formulation = value.parse::<Formulation>().ok(),
            "n" => n = value.parse::<u16>().ok(),
            "m" => m = value.parse::<u16>().ok(),
            "k" => k = value.parse::<u32>().ok(),
            _ => return None,
        }
    }
    Some(ModelMeta {
        formulation: formulation?,
        n: n?,
        m: m?,
        k: k?,
    })
}

/// Parsed terms plus the leftover tokens (sense and right-hand side).
type ExprAndTail = (Vec<(usize, i64)>, Vec<String>);

/// Consumes sign/coefficient/name tokens; returns terms plus the leftover
/// tokens (sense and right-hand side for constraints).
fn parse_expr(body: &str, p: &mut Parser, lineno: usize) -> Result<ExprAndTail, IlpError> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    let mut terms = Vec::new();
    let mut sign: i64 = 1;
    let mut coef: Option<i64> = None;
    let mut i = 0;
    while i < tokens.len() {
        let tok = tokens[i];
        match tok {
            "+" => sign = 1,
            "-" => sign = -1,
            ">=" | "<=" | "=" => {
                if coef.is_some() {
                    return Err(err(lineno, "dangling coefficient before sense"));
                }
                return Ok((terms, tokens[i..].iter().map(|s| s.to_string()).collect()));
            }
            _ => {
                if let Ok(value) = tok.parse::<i64>() {
                    if coef.is_some() {
                        return Err(err(lineno, "two consecutive numbers"));
                    }
                    coef = Some(value);
                } else {
                    if !tok
                        .chars()
                        .next()
                        .map(|c| c.is_ascii_alphabetic() || c == '_')
                        .unwrap_or(false)
                    {
                        return Err(err(lineno, format!("bad token '{tok}'")));
                    }
                    let var = p.var(tok);
                    let c = sign * coef.take().unwrap_or(1);
                    terms.push((var, c));
                    sign = 1;
                }
            }
        }
        i += 1;
    }
    if coef.is_some() {
        return Err(err(lineno, "dangling coefficient at end of expression"));
    }
    Ok((terms, Vec::new()))
}
