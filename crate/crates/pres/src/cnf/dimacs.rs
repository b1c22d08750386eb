//! DIMACS CNF reading and writing.
//!
//! Exact dialect: `p cnf <vars> <clauses>`, zero-terminated clauses, `c`
//! comment lines. The extension header `c xvars <k>` (before the problem
//! line or among the comments) designates `x1..xk` as the original
//! variables; without it every variable is original.

use thiserror::Error;

use super::{Clause, CnfFormula, Lit, VarSpace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("missing `p cnf` problem line")]
    MissingProblemLine,
    #[error("line {line}: unexpected token `{token}`")]
    UnexpectedToken { line: usize, token: String },
    #[error("literal {lit} exceeds declared variable count {declared}")]
    LitOutOfRange { lit: i32, declared: u32 },
    #[error("unterminated clause at end of input")]
    UnterminatedClause,
    #[error("declared {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

/// Parses DIMACS CNF. Clauses come out canonicalized (sorted, deduped), so
/// `parse` then [`serialize_dimacs`] is the canonical form of the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut declared: Option<(u32, usize)> = None;
    let mut xvars: Option<u32> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut open_clause = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('c') {
            // Comment; `c xvars <k>` is the extension header.
            let mut toks = rest.split_whitespace();
            if toks.next() == Some("xvars") {
                let k = toks
                    .next()
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| DimacsError::MalformedHeader {
                        line,
                        reason: "`c xvars` needs a count".into(),
                    })?;
                xvars = Some(k);
            }
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('p') {
            if declared.is_some() {
                return Err(DimacsError::MalformedHeader {
                    line,
                    reason: "second problem line".into(),
                });
            }
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 || toks[0] != "cnf" {
                return Err(DimacsError::MalformedHeader {
                    line,
                    reason: format!("expected `p cnf <vars> <clauses>`, got `{trimmed}`"),
                });
            }
            let vars = toks[1].parse::<u32>().map_err(|_| DimacsError::MalformedHeader {
                line,
                reason: "bad variable count".into(),
            })?;
            let count = toks[2].parse::<usize>().map_err(|_| DimacsError::MalformedHeader {
                line,
                reason: "bad clause count".into(),
            })?;
            declared = Some((vars, count));
            continue;
        }
        let (vars, _) = declared.ok_or(DimacsError::MissingProblemLine)?;
        for tok in trimmed.split_whitespace() {
            let value = tok
                .parse::<i32>()
                .map_err(|_| DimacsError::UnexpectedToken { line, token: tok.to_string() })?;
            if value == 0 {
                clauses.push(Clause::new(current.drain(..)));
                open_clause = false;
            } else {
                let lit = Lit::from_dimacs(value)
                    .ok_or(DimacsError::UnexpectedToken { line, token: tok.to_string() })?;
                if lit.var() > vars {
                    return Err(DimacsError::LitOutOfRange { lit: value, declared: vars });
                }
                current.push(lit);
                open_clause = true;
            }
        }
    }

    let (vars, count) = declared.ok_or(DimacsError::MissingProblemLine)?;
    if open_clause {
        return Err(DimacsError::UnterminatedClause);
    }
    if clauses.len() != count {
        return Err(DimacsError::ClauseCountMismatch { declared: count, found: clauses.len() });
    }
    let n_original = match xvars {
        Some(k) if k <= vars => k,
        Some(k) => {
            return Err(DimacsError::MalformedHeader {
                line: 0,
                reason: format!("xvars {k} exceeds variable count {vars}"),
            })
        }
        None => vars,
    };
    // Construction cannot fail: literal range was checked against `vars`.
    Ok(CnfFormula::new(VarSpace::new(n_original, vars), clauses).expect("checked range"))
}

/// Writes DIMACS text; emits the `c xvars` header only when the space has
/// extension variables.
pub fn serialize_dimacs(formula: &CnfFormula) -> String {
    let mut out = String::new();
    serialize_dimacs_with_comments(formula, &[], &mut out);
    out
}

/// Like [`serialize_dimacs`] but with extra leading comment lines (without
/// the `c ` prefix).
pub fn serialize_dimacs_with_comments(formula: &CnfFormula, comments: &[String], out: &mut String) {
    use std::fmt::Write;
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    if formula.space.has_extensions() {
        writeln!(out, "c xvars {}", formula.space.n_original).unwrap();
    }
    writeln!(out, "p cnf {} {}", formula.space.n_total, formula.size()).unwrap();
    for clause in &formula.clauses {
        for lit in clause.iter() {
            write!(out, "{} ", lit.to_dimacs()).unwrap();
        }
        writeln!(out, "0").unwrap();
    }
}
