//! Width-bounded saturation, minimal refutation width, and the size-width
//! statistic.

use std::collections::HashMap;

use thiserror::Error;

use crate::cnf::{Clause, CnfFormula, Guard, GuardExceeded};
use crate::proof::{resolve, Proof};

/// How a clause entered a saturation closure.
#[derive(Clone, Copy, Debug)]
enum Origin {
    Input,
    Resolvent { left: usize, right: usize, pivot: u32 },
}

/// Clause closure under resolution, restricted to a width bound, with
/// parent tracking so derivations can be linearized afterwards.
pub struct Saturation {
    clauses: Vec<Clause>,
    origins: Vec<Origin>,
    index: HashMap<Clause, usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("saturation exceeded the cap of {0} clauses")]
pub struct SaturationCap(pub usize);

impl Saturation {
    /// Closes `inputs` under resolution keeping clauses of width at most
    /// `max_width`. Tautologies are dropped (a tautology is never needed in
    /// a minimal refutation) and duplicates are kept once. Stops early once
    /// `stop_at` (any clause subsuming it) is derived.
    pub fn close(
        inputs: &[Clause],
        max_width: usize,
        clause_cap: usize,
        stop_at: Option<&Clause>,
    ) -> Result<Saturation, SaturationCap> {
        let mut sat = Saturation {
            clauses: Vec::new(),
            origins: Vec::new(),
            index: HashMap::new(),
        };
        for c in inputs {
            if c.width() <= max_width && !c.is_tautology() {
                sat.insert(c.clone(), Origin::Input);
            }
        }
        if let Some(goal) = stop_at {
            if sat.subsuming(goal).is_some() {
                return Ok(sat);
            }
        }
        let mut next = 0;
        while next < sat.clauses.len() {
            let i = next;
            next += 1;
            for j in 0..i {
                let pivots: Vec<u32> = sat.clauses[i]
                    .iter()
                    .filter(|l| sat.clauses[j].contains(l.negated()))
                    .map(|l| l.var())
                    .collect();
                for pivot in pivots {
                    let Ok(r) = resolve(&sat.clauses[i], &sat.clauses[j], pivot) else {
                        continue;
                    };
                    if r.width() > max_width || r.is_tautology() || sat.index.contains_key(&r) {
                        continue;
                    }
                    sat.insert(r.clone(), Origin::Resolvent { left: i, right: j, pivot });
                    if sat.clauses.len() > clause_cap {
                        return Err(SaturationCap(clause_cap));
                    }
                    if let Some(goal) = stop_at {
                        if r.subset_of(goal) {
                            return Ok(sat);
                        }
                    }
                }
            }
        }
        Ok(sat)
    }

    fn insert(&mut self, clause: Clause, origin: Origin) {
        if self.index.contains_key(&clause) {
            return;
        }
        self.index.insert(clause.clone(), self.clauses.len());
        self.clauses.push(clause);
        self.origins.push(origin);
    }

    /// Index of some derived clause that subsumes (is a subset of) `goal`.
    pub fn subsuming(&self, goal: &Clause) -> Option<usize> {
        self.clauses.iter().position(|c| c.subset_of(goal))
    }

    pub fn contains_empty(&self) -> bool {
        self.index.contains_key(&Clause::empty())
    }

    /// Replays the derivation of clause `target` into `proof`.
    ///
    /// Input clauses are appended via `emit_input`, which returns the proof
    /// step id for a closure input clause. Returns the step id of the target.
    pub fn replay_into(
        &self,
        target: usize,
        proof: &mut Proof,
        emit_input: &mut dyn FnMut(&mut Proof, &Clause) -> usize,
    ) -> usize {
        let mut memo: HashMap<usize, usize> = HashMap::new();
        self.replay_rec(target, proof, emit_input, &mut memo)
    }

    fn replay_rec(
        &self,
        node: usize,
        proof: &mut Proof,
        emit_input: &mut dyn FnMut(&mut Proof, &Clause) -> usize,
        memo: &mut HashMap<usize, usize>,
    ) -> usize {
        if let Some(&id) = memo.get(&node) {
            return id;
        }
        let id = match self.origins[node] {
            Origin::Input => emit_input(proof, &self.clauses[node]),
            Origin::Resolvent { left, right, pivot } => {
                let l = self.replay_rec(left, proof, emit_input, memo);
                let r = self.replay_rec(right, proof, emit_input, memo);
                proof.push_resolve(l, r, pivot).expect("closure step replays")
            }
        };
        memo.insert(node, id);
        id
    }
}

#[derive(Debug, Error)]
pub enum WidthError {
    #[error("formula is satisfiable; no refutation exists")]
    Satisfiable,
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
    #[error(transparent)]
    Cap(#[from] SaturationCap),
}

/// Default clause cap for saturation sweeps.
pub const DEFAULT_CLAUSE_CAP: usize = 2_000_000;

/// Exact minimal refutation width of `formula` (plus an optional promise
/// axiom whose clauses count as inputs).
///
/// For `w = 0, 1, 2, …` the inputs of width at most `w` are closed under
/// resolution restricted to clauses of width at most `w`; the first `w`
/// whose closure contains the empty clause is returned. Inputs wider than
/// `w` are excluded from round `w`, so a narrow refutation that ignores wide
/// clauses is found at its true width.
pub fn min_width(
    formula: &CnfFormula,
    axiom: Option<&CnfFormula>,
    guard: &Guard,
) -> Result<usize, WidthError> {
    let n_total =
        formula.space.n_total.max(axiom.map(|a| a.space.n_total).unwrap_or(0));
    guard.admit(n_total)?;
    let mut inputs: Vec<Clause> = formula.clauses.clone();
    if let Some(a) = axiom {
        inputs.extend(a.clauses.iter().cloned());
    }
    for w in 0..=n_total as usize {
        let closure = Saturation::close(&inputs, w, DEFAULT_CLAUSE_CAP, Some(&Clause::empty()))?;
        if closure.contains_empty() {
            return Ok(w);
        }
    }
    Err(WidthError::Satisfiable)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("width {w} below the input width {r}")]
pub struct IndicatorError {
    pub w: usize,
    pub r: usize,
}

/// The exponent body `(w − r)² / n` of the size-width tradeoff
/// `S = exp(Ω((w − r)²/n))` for an input of width `r` over `n` variables.
///
/// Reporting only: the hidden constant of the tradeoff is not modeled.
pub fn size_width_indicator(n: u32, r: usize, w: usize) -> Result<f64, IndicatorError> {
    if w < r {
        return Err(IndicatorError { w, r });
    }
    let d = (w - r) as f64;
    Ok(d * d / n as f64)
}
