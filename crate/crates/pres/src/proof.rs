//! Resolution proofs with promise-axiom steps, and their checker.
//!
//! Proofs are "fat": every step stores its derived clause, so a step is
//! validated in isolation by recomputing its rule. A proof may cite clauses
//! of the input formula (`Input`), clauses of at most one promise axiom
//! (`Promise`), resolvents, and weakenings.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::cnf::{Clause, CnfFormula, Lit, VarSpace};

/// Justification of a proof step. Step references are 1-based ids of
/// earlier steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// A clause of the formula being refuted.
    Input,
    /// A clause of the declared promise axiom.
    Promise,
    /// Resolvent of two earlier steps over a pivot variable.
    Resolve { left: usize, right: usize, pivot: u32 },
    /// An earlier step's clause with extra literals added.
    Weaken { from: usize, added: Vec<Lit> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub rule: Rule,
    pub clause: Clause,
}

/// A justified step sequence. `size` is the step count and `width` the
/// maximal clause width over all steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub space: VarSpace,
    pub steps: Vec<ProofStep>,
    pub uses_promise: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolveError {
    #[error("pivot {0} missing from a premise")]
    PivotMissing(u32),
    #[error("pivot {0} occurs with the same polarity in both premises")]
    SamePolarity(u32),
    #[error("pivot {0} still occurs in a residue")]
    PivotInResidue(u32),
}

/// The resolvent of `c` and `d` over `pivot`.
///
/// The pivot must occur positively in exactly one premise and negatively in
/// the other, and in no other polarity in either; the result is the deduped
/// union of the residues.
pub fn resolve(c: &Clause, d: &Clause, pivot: u32) -> Result<Clause, ResolveError> {
    let pos = Lit::pos(pivot);
    let neg = Lit::neg(pivot);
    let (with_pos, with_neg) = match (c.contains(pos), d.contains(pos)) {
        (true, false) => (c, d),
        (false, true) => (d, c),
        (true, true) => return Err(ResolveError::SamePolarity(pivot)),
        (false, false) => {
            return if c.contains(neg) && d.contains(neg) {
                Err(ResolveError::SamePolarity(pivot))
            } else {
                Err(ResolveError::PivotMissing(pivot))
            }
        }
    };
    if !with_neg.contains(neg) {
        return Err(ResolveError::PivotMissing(pivot));
    }
    // Neither residue may still contain the pivot in the other polarity.
    if with_pos.contains(neg) || with_neg.contains(pos) {
        return Err(ResolveError::PivotInResidue(pivot));
    }
    Ok(with_pos.without(pos).union(&with_neg.without(neg)))
}

/// The clause `c` with `added` literals joined in (deduped).
pub fn weaken(c: &Clause, added: &[Lit]) -> Clause {
    Clause::new(c.iter().chain(added.iter().copied()))
}

impl Proof {
    pub fn new(space: VarSpace) -> Proof {
        Proof { space, steps: Vec::new(), uses_promise: false }
    }

    pub fn size(&self) -> usize {
        self.steps.len()
    }

    pub fn width(&self) -> usize {
        self.steps.iter().map(|s| s.clause.width()).max().unwrap_or(0)
    }

    pub fn final_clause(&self) -> Option<&Clause> {
        self.steps.last().map(|s| &s.clause)
    }

    pub fn is_refutation(&self) -> bool {
        matches!(self.final_clause(), Some(c) if c.is_empty())
    }

    pub fn clause_of(&self, id: usize) -> &Clause {
        &self.steps[id - 1].clause
    }

    /// Appends an input-clause step; returns its 1-based id.
    pub fn push_input(&mut self, clause: Clause) -> usize {
        self.steps.push(ProofStep { rule: Rule::Input, clause });
        self.steps.len()
    }

    /// Appends a promise-axiom-clause step; returns its 1-based id.
    pub fn push_promise(&mut self, clause: Clause) -> usize {
        self.uses_promise = true;
        self.steps.push(ProofStep { rule: Rule::Promise, clause });
        self.steps.len()
    }

    /// Resolves two earlier steps and appends the resolvent.
    pub fn push_resolve(
        &mut self,
        left: usize,
        right: usize,
        pivot: u32,
    ) -> Result<usize, ResolveError> {
        let clause = resolve(self.clause_of(left), self.clause_of(right), pivot)?;
        self.steps.push(ProofStep { rule: Rule::Resolve { left, right, pivot }, clause });
        Ok(self.steps.len())
    }

    /// Weakens an earlier step and appends the result. Literals already
    /// present are dropped from the recorded addition.
    pub fn push_weaken(&mut self, from: usize, added: &[Lit]) -> usize {
        let base = self.clause_of(from);
        let added: Vec<Lit> = {
            let mut fresh: Vec<Lit> =
                added.iter().copied().filter(|&l| !base.contains(l)).collect();
            fresh.sort();
            fresh.dedup();
            fresh
        };
        let clause = weaken(base, &added);
        self.steps.push(ProofStep { rule: Rule::Weaken { from, added }, clause });
        self.steps.len()
    }

    /// Weakens `from` until its clause equals `target` (a superset); no step
    /// is emitted when the clauses already agree.
    pub fn weaken_to(&mut self, from: usize, target: &Clause) -> usize {
        let base = self.clause_of(from);
        debug_assert!(base.subset_of(target));
        if base == target {
            return from;
        }
        let added: Vec<Lit> = target.iter().filter(|&l| !base.contains(l)).collect();
        self.push_weaken(from, &added)
    }
}

/// Checker configuration.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    /// Permit weakening steps. The strict mode refuses them, matching the
    /// rule set that lists only inputs, promise clauses, and resolvents.
    pub allow_weakening: bool,
    /// Additionally require the final clause to be empty.
    pub require_refutation: bool,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions { allow_weakening: true, require_refutation: true }
    }
}

/// Checker outcome; `accepted` implies `failing_step` is `None`.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub accepted: bool,
    pub failing_step: Option<usize>,
    pub reason: String,
    pub size: usize,
    pub width: usize,
}

impl Verdict {
    fn reject(step: usize, reason: String, proof: &Proof) -> Verdict {
        Verdict {
            accepted: false,
            failing_step: Some(step),
            reason,
            size: proof.size(),
            width: proof.width(),
        }
    }
}

/// Validates a proof of its final clause from `formula` and at most one
/// promise axiom.
///
/// Every `Input` clause must be a clause of `formula`, every `Promise`
/// clause a clause of the supplied axiom, every derived clause must equal
/// its rule's recomputation, and references must point to earlier steps.
/// Failures are reported as verdicts, not errors.
pub fn check_proof(
    formula: &CnfFormula,
    axiom: Option<&CnfFormula>,
    proof: &Proof,
    options: &CheckOptions,
) -> Verdict {
    let input_set: HashSet<&Clause> = formula.clauses.iter().collect();
    let axiom_set: Option<HashSet<&Clause>> = axiom.map(|a| a.clauses.iter().collect());

    for (index, step) in proof.steps.iter().enumerate() {
        let id = index + 1;
        if step.clause.max_var() > proof.space.n_total {
            return Verdict::reject(
                id,
                format!(
                    "clause references variable beyond the declared space of {}",
                    proof.space.n_total
                ),
                proof,
            );
        }
        match &step.rule {
            Rule::Input => {
                if !input_set.contains(&step.clause) {
                    return Verdict::reject(
                        id,
                        format!("input clause {} not in the formula", step.clause),
                        proof,
                    );
                }
            }
            Rule::Promise => match &axiom_set {
                None => {
                    return Verdict::reject(
                        id,
                        "promise clause cited but no promise axiom was declared".into(),
                        proof,
                    )
                }
                Some(set) => {
                    if !set.contains(&step.clause) {
                        return Verdict::reject(
                            id,
                            format!(
                                "clause {} is not a clause of the declared promise axiom \
                                 (at most one axiom may be used)",
                                step.clause
                            ),
                            proof,
                        );
                    }
                }
            },
            Rule::Resolve { left, right, pivot } => {
                if *left >= id || *right >= id || *left == 0 || *right == 0 {
                    return Verdict::reject(
                        id,
                        "resolvent references a non-earlier step".into(),
                        proof,
                    );
                }
                match resolve(proof.clause_of(*left), proof.clause_of(*right), *pivot) {
                    Err(e) => return Verdict::reject(id, format!("bad resolution: {e}"), proof),
                    Ok(c) => {
                        if c != step.clause {
                            return Verdict::reject(
                                id,
                                format!(
                                    "stored clause {} differs from resolvent {}",
                                    step.clause, c
                                ),
                                proof,
                            );
                        }
                    }
                }
            }
            Rule::Weaken { from, added } => {
                if !options.allow_weakening {
                    return Verdict::reject(id, "weakening step in strict mode".into(), proof);
                }
                if *from >= id || *from == 0 {
                    return Verdict::reject(
                        id,
                        "weakening references a non-earlier step".into(),
                        proof,
                    );
                }
                let c = weaken(proof.clause_of(*from), added);
                if c != step.clause {
                    return Verdict::reject(
                        id,
                        format!("stored clause {} differs from weakening {}", step.clause, c),
                        proof,
                    );
                }
            }
        }
    }

    if options.require_refutation && !proof.is_refutation() {
        return Verdict {
            accepted: false,
            failing_step: None,
            reason: "final clause is not empty".into(),
            size: proof.size(),
            width: proof.width(),
        };
    }

    Verdict {
        accepted: true,
        failing_step: None,
        reason: String::new(),
        size: proof.size(),
        width: proof.width(),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresFormatError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("missing `p pres` header")]
    MissingHeader,
    #[error("line {line}: step id {found} out of order (expected {expected})")]
    StepIdOutOfOrder { line: usize, found: usize, expected: usize },
    #[error("line {line}: malformed step: {reason}")]
    MalformedStep { line: usize, reason: String },
    #[error("line {line}: invalid rule application: {reason}")]
    InvalidStep { line: usize, reason: String },
}

/// Parses the `PRES v1` proof text format.
///
/// Header `p pres <n_original> <n_total> <axiom? 0|1>`; one step per line:
/// `<id> K <lits> 0` | `<id> P <lits> 0` | `<id> R <i> <j> <pivot>` |
/// `<id> W <i> <lits> 0` (the literals of a `W` line are the added ones).
/// Resolvents and weakenings are recomputed while parsing.
pub fn parse_pres(text: &str) -> Result<Proof, PresFormatError> {
    let mut proof: Option<Proof> = None;
    let mut declared_axiom = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("p ") {
            if proof.is_some() {
                return Err(PresFormatError::MalformedHeader {
                    line,
                    reason: "second header".into(),
                });
            }
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 4 || toks[0] != "pres" {
                return Err(PresFormatError::MalformedHeader {
                    line,
                    reason: "expected `p pres <n_original> <n_total> <0|1>`".into(),
                });
            }
            let parse_u32 = |s: &str| {
                s.parse::<u32>().map_err(|_| PresFormatError::MalformedHeader {
                    line,
                    reason: format!("bad number `{s}`"),
                })
            };
            let n_original = parse_u32(toks[1])?;
            let n_total = parse_u32(toks[2])?;
            if n_total < n_original {
                return Err(PresFormatError::MalformedHeader {
                    line,
                    reason: "n_total below n_original".into(),
                });
            }
            declared_axiom = match toks[3] {
                "0" => false,
                "1" => true,
                other => {
                    return Err(PresFormatError::MalformedHeader {
                        line,
                        reason: format!("axiom flag must be 0 or 1, got `{other}`"),
                    })
                }
            };
            proof = Some(Proof::new(VarSpace::new(n_original, n_total)));
            continue;
        }
        let proof = proof.as_mut().ok_or(PresFormatError::MissingHeader)?;
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() < 2 {
            return Err(PresFormatError::MalformedStep { line, reason: "too few tokens".into() });
        }
        let id: usize = toks[0].parse().map_err(|_| PresFormatError::MalformedStep {
            line,
            reason: format!("bad id `{}`", toks[0]),
        })?;
        let expected = proof.size() + 1;
        if id != expected {
            return Err(PresFormatError::StepIdOutOfOrder { line, found: id, expected });
        }
        let lits_until_zero = |toks: &[&str]| -> Result<Vec<Lit>, PresFormatError> {
            let mut lits = Vec::new();
            let mut closed = false;
            for t in toks {
                let v: i32 = t.parse().map_err(|_| PresFormatError::MalformedStep {
                    line,
                    reason: format!("bad literal `{t}`"),
                })?;
                if v == 0 {
                    closed = true;
                    break;
                }
                lits.push(Lit::from_dimacs(v).ok_or(PresFormatError::MalformedStep {
                    line,
                    reason: format!("bad literal `{t}`"),
                })?);
            }
            if !closed {
                return Err(PresFormatError::MalformedStep {
                    line,
                    reason: "missing terminating 0".into(),
                });
            }
            Ok(lits)
        };
        match toks[1] {
            "K" => {
                proof.push_input(Clause::new(lits_until_zero(&toks[2..])?));
            }
            "P" => {
                if !declared_axiom {
                    return Err(PresFormatError::InvalidStep {
                        line,
                        reason: "P step but header declares no axiom".into(),
                    });
                }
                proof.push_promise(Clause::new(lits_until_zero(&toks[2..])?));
            }
            "R" => {
                if toks.len() != 5 {
                    return Err(PresFormatError::MalformedStep {
                        line,
                        reason: "expected `<id> R <i> <j> <pivot>`".into(),
                    });
                }
                let parse_idx = |s: &str| {
                    s.parse::<usize>().map_err(|_| PresFormatError::MalformedStep {
                        line,
                        reason: format!("bad reference `{s}`"),
                    })
                };
                let left = parse_idx(toks[2])?;
                let right = parse_idx(toks[3])?;
                let pivot = toks[4].parse::<u32>().map_err(|_| PresFormatError::MalformedStep {
                    line,
                    reason: format!("bad pivot `{}`", toks[4]),
                })?;
                if left >= id || right >= id || left == 0 || right == 0 {
                    return Err(PresFormatError::InvalidStep {
                        line,
                        reason: "reference to a non-earlier step".into(),
                    });
                }
                proof
                    .push_resolve(left, right, pivot)
                    .map_err(|e| PresFormatError::InvalidStep { line, reason: e.to_string() })?;
            }
            "W" => {
                if toks.len() < 3 {
                    return Err(PresFormatError::MalformedStep {
                        line,
                        reason: "expected `<id> W <i> <lits> 0`".into(),
                    });
                }
                let from: usize = toks[2].parse().map_err(|_| PresFormatError::MalformedStep {
                    line,
                    reason: format!("bad reference `{}`", toks[2]),
                })?;
                if from >= id || from == 0 {
                    return Err(PresFormatError::InvalidStep {
                        line,
                        reason: "reference to a non-earlier step".into(),
                    });
                }
                let added = lits_until_zero(&toks[3..])?;
                proof.push_weaken(from, &added);
            }
            other => {
                return Err(PresFormatError::MalformedStep {
                    line,
                    reason: format!("unknown rule `{other}`"),
                });
            }
        }
    }
    proof.ok_or(PresFormatError::MissingHeader)
}

/// Writes the `PRES v1` text form.
pub fn serialize_pres(proof: &Proof) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "p pres {} {} {}",
        proof.space.n_original,
        proof.space.n_total,
        proof.uses_promise as u8
    )
    .unwrap();
    for (index, step) in proof.steps.iter().enumerate() {
        let id = index + 1;
        match &step.rule {
            Rule::Input => {
                write!(out, "{id} K").unwrap();
                for l in step.clause.iter() {
                    write!(out, " {}", l.to_dimacs()).unwrap();
                }
                writeln!(out, " 0").unwrap();
            }
            Rule::Promise => {
                write!(out, "{id} P").unwrap();
                for l in step.clause.iter() {
                    write!(out, " {}", l.to_dimacs()).unwrap();
                }
                writeln!(out, " 0").unwrap();
            }
            Rule::Resolve { left, right, pivot } => {
                writeln!(out, "{id} R {left} {right} {pivot}").unwrap();
            }
            Rule::Weaken { from, added } => {
                write!(out, "{id} W {from}").unwrap();
                for l in added {
                    write!(out, " {}", l.to_dimacs()).unwrap();
                }
                writeln!(out, " 0").unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{parse_dimacs, semantic_implies};

    fn clause(lits: &[i32]) -> Clause {
        Clause::new(lits.iter().map(|&l| Lit::from_dimacs(l).unwrap()))
    }

    #[test]
    fn resolve_basic() {
        assert_eq!(resolve(&clause(&[1, 2]), &clause(&[-1, 3]), 1).unwrap(), clause(&[2, 3]));
        assert_eq!(resolve(&clause(&[1]), &clause(&[-1]), 1).unwrap(), Clause::empty());
    }

    #[test]
    fn resolve_errors() {
        assert_eq!(resolve(&clause(&[1, 2]), &clause(&[3]), 1), Err(ResolveError::PivotMissing(1)));
        assert_eq!(resolve(&clause(&[2, 3]), &clause(&[3]), 1), Err(ResolveError::PivotMissing(1)));
        assert_eq!(
            resolve(&clause(&[1, 2]), &clause(&[1, 3]), 1),
            Err(ResolveError::SamePolarity(1))
        );
        assert_eq!(
            resolve(&clause(&[-1, 2]), &clause(&[-1, 3]), 1),
            Err(ResolveError::SamePolarity(1))
        );
        // Tautological premise keeps the pivot in a residue.
        assert_eq!(
            resolve(&clause(&[1, -1, 2]), &clause(&[-1, 3]), 1),
            Err(ResolveError::PivotInResidue(1))
        );
    }

    #[test]
    fn resolvents_are_implied_by_premises() {
        // Soundness sweep over random valid triples.
        let mut state = 77u64;
        let mut tried = 0;
        while tried < 40 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let pivot = ((state >> 20) % 4 + 1) as u32;
            let mk = |bits: u64, skip: u32| {
                Clause::new(
                    (1..=4u32)
                        .filter(|&v| v != skip && bits >> v & 1 == 1)
                        .map(|v| Lit::new(v, bits >> (v + 8) & 1 == 1)),
                )
            };
            let c = mk(state, pivot).union(&clause(&[pivot as i32]));
            let d = mk(state >> 17, pivot).union(&clause(&[-(pivot as i32)]));
            let Ok(r) = resolve(&c, &d, pivot) else { continue };
            tried += 1;
            let premises = CnfFormula::new(VarSpace::plain(4), vec![c.clone(), d.clone()]).unwrap();
            assert!(semantic_implies(&premises, &r), "{c} x {d} -> {r}");
        }
    }

    #[test]
    fn weaken_basic() {
        assert_eq!(weaken(&clause(&[1]), &[Lit::pos(2)]), clause(&[1, 2]));
        assert_eq!(weaken(&Clause::empty(), &[Lit::pos(1)]), clause(&[1]));
        // Weakened clause is implied by the original.
        let premises = CnfFormula::new(VarSpace::plain(2), vec![clause(&[1])]).unwrap();
        assert!(semantic_implies(&premises, &weaken(&clause(&[1]), &[Lit::neg(2)])));
    }

    fn unit_refutation() -> (CnfFormula, Proof) {
        let k = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap();
        let mut p = Proof::new(VarSpace::plain(1));
        let a = p.push_input(clause(&[1]));
        let b = p.push_input(clause(&[-1]));
        p.push_resolve(a, b, 1).unwrap();
        (k, p)
    }

    #[test]
    fn checker_accepts_unit_refutation() {
        let (k, p) = unit_refutation();
        let v = check_proof(&k, None, &p, &CheckOptions::default());
        assert!(v.accepted, "{}", v.reason);
        assert_eq!(v.size, 3);
        assert_eq!(v.width, 1);
    }

    #[test]
    fn checker_rejects_stored_mismatch() {
        let (k, mut p) = unit_refutation();
        p.steps[2].clause = clause(&[1]);
        let v = check_proof(&k, None, &p, &CheckOptions::default());
        assert!(!v.accepted);
        assert_eq!(v.failing_step, Some(3));
    }

    #[test]
    fn checker_rejects_foreign_input() {
        let (k, mut p) = unit_refutation();
        p.steps[0].clause = clause(&[1, -1]);
        let v = check_proof(&k, None, &p, &CheckOptions::default());
        assert!(!v.accepted);
        assert_eq!(v.failing_step, Some(1));
    }

    #[test]
    fn checker_enforces_single_axiom() {
        // Clauses cited from a second axiom CNF fail membership in the
        // declared one.
        let k = parse_dimacs("p cnf 2 1\n1 0\n").unwrap();
        let axiom_a = parse_dimacs("p cnf 2 1\n-1 2 0\n").unwrap();
        let mut p = Proof::new(VarSpace::plain(2));
        let a = p.push_input(clause(&[1]));
        let b = p.push_promise(clause(&[-1, 2]));
        let c = p.push_resolve(a, b, 1).unwrap();
        // This clause belongs to a different axiom CNF.
        let d = p.push_promise(clause(&[-2]));
        let _ = p.push_resolve(c, d, 2).unwrap();
        let v = check_proof(&k, Some(&axiom_a), &p, &CheckOptions::default());
        assert!(!v.accepted);
        assert_eq!(v.failing_step, Some(4));
        assert!(v.reason.contains("at most one"), "{}", v.reason);
    }

    #[test]
    fn checker_requires_axiom_for_promise_steps() {
        let k = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        let mut p = Proof::new(VarSpace::plain(1));
        p.push_promise(clause(&[-1]));
        let v = check_proof(
            &k,
            None,
            &p,
            &CheckOptions { require_refutation: false, ..Default::default() },
        );
        assert!(!v.accepted);
    }

    #[test]
    fn strict_mode_refuses_weakening() {
        let k = parse_dimacs("p cnf 2 2\n1 0\n-1 -2 0\n").unwrap();
        let mut p = Proof::new(VarSpace::plain(2));
        let a = p.push_input(clause(&[1]));
        p.push_weaken(a, &[Lit::pos(2)]);
        let lax = CheckOptions { require_refutation: false, ..Default::default() };
        assert!(check_proof(&k, None, &p, &lax).accepted);
        let strict = CheckOptions { allow_weakening: false, require_refutation: false };
        let v = check_proof(&k, None, &p, &strict);
        assert!(!v.accepted);
        assert_eq!(v.failing_step, Some(2));
    }

    #[test]
    fn refutation_flag_requires_empty_final_clause() {
        let k = parse_dimacs("p cnf 1 1\n1 0\n").unwrap();
        let mut p = Proof::new(VarSpace::plain(1));
        p.push_input(clause(&[1]));
        let v = check_proof(&k, None, &p, &CheckOptions::default());
        assert!(!v.accepted);
        assert!(v.reason.contains("final"));
    }

    #[test]
    fn pres_format_roundtrip() {
        let (_, p) = unit_refutation();
        let text = serialize_pres(&p);
        assert_eq!(text, "p pres 1 1 0\n1 K 1 0\n2 K -1 0\n3 R 1 2 1\n");
        let back = parse_pres(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn pres_format_weaken_and_promise() {
        let mut p = Proof::new(VarSpace::new(1, 2));
        let a = p.push_promise(clause(&[-1]));
        p.push_weaken(a, &[Lit::pos(2)]);
        let text = serialize_pres(&p);
        let back = parse_pres(&text).unwrap();
        assert_eq!(back, p);
        assert!(back.uses_promise);
    }

    #[test]
    fn pres_format_errors() {
        assert!(matches!(parse_pres("1 K 1 0\n"), Err(PresFormatError::MissingHeader)));
        assert!(matches!(
            parse_pres("p pres 1 1 0\n2 K 1 0\n"),
            Err(PresFormatError::StepIdOutOfOrder { .. })
        ));
        assert!(matches!(
            parse_pres("p pres 1 1 0\n1 R 1 1 1\n"),
            Err(PresFormatError::InvalidStep { .. })
        ));
        assert!(matches!(
            parse_pres("p pres 1 1 0\n1 P 1 0\n"),
            Err(PresFormatError::InvalidStep { .. })
        ));
        assert!(matches!(
            parse_pres("p pres 1 1 0\n1 K 1\n"),
            Err(PresFormatError::MalformedStep { .. })
        ));
    }
}
