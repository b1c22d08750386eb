//! Satisfiability search and the exhaustive semantic oracles.
//!
//! The workhorse is a plain DPLL (unit propagation plus splitting on the
//! lowest unassigned variable). Enumeration is used only over explicitly
//! guarded ranges; extension-variable search always goes through the solver,
//! so axiom CNFs with many extension variables stay checkable.

use super::{Assignment, Clause, CnfFormula, Guard, GuardExceeded, Lit};

/// Backtracking SAT solver over a fixed clause set, reusable across
/// assumption sets.
pub struct Solver {
    n_vars: u32,
    clauses: Vec<Vec<Lit>>,
    /// Clause indices per literal code `2*(var-1) + is_positive`.
    occ: Vec<Vec<u32>>,
    /// 0 unassigned, 1 true, -1 false; indexed by `var - 1`.
    assign: Vec<i8>,
    trail: Vec<u32>,
    has_empty_clause: bool,
}

fn code(lit: Lit) -> usize {
    ((lit.var() - 1) * 2 + lit.is_positive() as u32) as usize
}

impl Solver {
    pub fn new(formula: &CnfFormula) -> Solver {
        Solver::from_clauses(formula.space.n_total, formula.clauses.iter())
    }

    pub fn from_clauses<'a>(n_vars: u32, clauses: impl Iterator<Item = &'a Clause>) -> Solver {
        let mut stored: Vec<Vec<Lit>> = Vec::new();
        let mut occ = vec![Vec::new(); (n_vars as usize) * 2];
        let mut has_empty_clause = false;
        for clause in clauses {
            if clause.is_empty() {
                has_empty_clause = true;
                continue;
            }
            let idx = stored.len() as u32;
            for lit in clause.iter() {
                occ[code(lit)].push(idx);
            }
            stored.push(clause.iter().collect());
        }
        Solver {
            n_vars,
            clauses: stored,
            occ,
            assign: vec![0; n_vars as usize],
            trail: Vec::new(),
            has_empty_clause,
        }
    }

    pub fn n_vars(&self) -> u32 {
        self.n_vars
    }

    fn value(&self, lit: Lit) -> i8 {
        let v = self.assign[(lit.var() - 1) as usize];
        if lit.is_positive() {
            v
        } else {
            -v
        }
    }

    /// Assigns a literal true; returns false on immediate contradiction.
    fn enqueue(&mut self, lit: Lit) -> bool {
        match self.value(lit) {
            1 => true,
            -1 => false,
            _ => {
                self.assign[(lit.var() - 1) as usize] = if lit.is_positive() { 1 } else { -1 };
                self.trail.push(lit.var());
                true
            }
        }
    }

    /// Unit-propagates every assignment on the trail from `from` onwards.
    /// Returns false on conflict. The trail keeps growing with implied
    /// literals so the caller can unwind.
    fn propagate(&mut self, mut from: usize) -> bool {
        while from < self.trail.len() {
            let var = self.trail[from];
            from += 1;
            let assigned_true = self.assign[(var - 1) as usize] == 1;
            // Only clauses containing the now-false literal can change state.
            let falsified = Lit::new(var, !assigned_true);
            let watch = std::mem::take(&mut self.occ[code(falsified)]);
            let mut conflict = false;
            for &ci in &watch {
                let mut unassigned: Option<Lit> = None;
                let mut satisfied = false;
                let mut unassigned_count = 0;
                for &l in &self.clauses[ci as usize] {
                    match self.value(l) {
                        1 => {
                            satisfied = true;
                            break;
                        }
                        0 => {
                            unassigned_count += 1;
                            unassigned = Some(l);
                        }
                        _ => {}
                    }
                }
                if satisfied {
                    continue;
                }
                match unassigned_count {
                    0 => {
                        conflict = true;
                        break;
                    }
                    1 => {
                        if !self.enqueue(unassigned.unwrap()) {
                            conflict = true;
                            break;
                        }
                    }
                    _ => {}
                }
            }
            self.occ[code(falsified)] = watch;
            if conflict {
                return false;
            }
        }
        true
    }

    fn unwind(&mut self, to: usize) {
        while self.trail.len() > to {
            let var = self.trail.pop().unwrap();
            self.assign[(var - 1) as usize] = 0;
        }
    }

    /// Exhausts the search below the current partial assignment. Restores
    /// the trail before returning. `model` receives the full assignment on
    /// success.
    fn search(&mut self, model: Option<&mut Vec<i8>>) -> bool {
        let mark = self.trail.len();
        let found = self.search_inner();
        if found {
            if let Some(out) = model {
                out.clear();
                out.extend_from_slice(&self.assign);
                // Free variables default to false.
                for v in out.iter_mut() {
                    if *v == 0 {
                        *v = -1;
                    }
                }
            }
        }
        self.unwind(mark);
        found
    }

    fn search_inner(&mut self) -> bool {
        let branch_var = match self.assign.iter().position(|&v| v == 0) {
            None => return true,
            Some(i) => (i + 1) as u32,
        };
        for value in [false, true] {
            let mark = self.trail.len();
            if self.enqueue(Lit::new(branch_var, value)) && self.propagate(mark) {
                if self.search_inner() {
                    return true;
                }
            }
            self.unwind(mark);
        }
        false
    }

    /// Decides satisfiability under assumptions; state is reset afterwards.
    pub fn solve(&mut self, assumptions: &[Lit]) -> Option<Assignment> {
        if self.has_empty_clause {
            return None;
        }
        let mut model = Vec::new();
        let ok = self.assume_all(assumptions)
            && self.propagate(0)
            && self.search(Some(&mut model));
        self.unwind(0);
        if ok {
            Some(Assignment::new(
                1,
                model.iter().map(|&v| v == 1).collect(),
            ))
        } else {
            None
        }
    }

    pub fn is_satisfiable(&mut self, assumptions: &[Lit]) -> bool {
        if self.has_empty_clause {
            return false;
        }
        let ok = self.assume_all(assumptions) && self.propagate(0) && self.search(None);
        self.unwind(0);
        ok
    }

    fn assume_all(&mut self, assumptions: &[Lit]) -> bool {
        // Initial units of the formula.
        let mut ok = true;
        for ci in 0..self.clauses.len() {
            if self.clauses[ci].len() == 1 {
                let l = self.clauses[ci][0];
                if !self.enqueue(l) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            for &lit in assumptions {
                if !self.enqueue(lit) {
                    ok = false;
                    break;
                }
            }
        }
        ok
    }

    /// Counts assignments over the contiguous variable range that extend to
    /// a full model. Branches range variables in order with propagation, so
    /// forced blocks cost nothing.
    fn count_over_range(&mut self, range: &[u32]) -> u64 {
        if self.has_empty_clause {
            return 0;
        }
        if !(self.assume_all(&[]) && self.propagate(0)) {
            self.unwind(0);
            return 0;
        }
        let total = self.count_rec(range);
        self.unwind(0);
        total
    }

    fn count_rec(&mut self, range: &[u32]) -> u64 {
        let Some((&var, rest)) = range.split_first() else {
            return self.search(None) as u64;
        };
        let mut total = 0;
        for value in [false, true] {
            let mark = self.trail.len();
            if self.enqueue(Lit::new(var, value)) && self.propagate(mark) {
                total += self.count_rec(rest);
            }
            self.unwind(mark);
        }
        total
    }
}

/// True iff the formula has a model.
pub fn satisfiable(formula: &CnfFormula) -> bool {
    Solver::new(formula).is_satisfiable(&[])
}

/// A model over all variables of the formula's space, if one exists.
pub fn sat_assignment(formula: &CnfFormula) -> Option<Assignment> {
    Solver::new(formula).solve(&[])
}

/// Exact number of assignments to `first..first+len` that extend (over the
/// remaining variables of the formula) to a satisfying assignment. With the
/// range covering all variables this is the model count.
pub fn count_models(
    formula: &CnfFormula,
    first: u32,
    len: u32,
    guard: &Guard,
) -> Result<u64, GuardExceeded> {
    guard.admit(len)?;
    assert!(
        first >= 1 && first + len <= formula.space.n_total + 1,
        "range outside the variable space"
    );
    let range: Vec<u32> = (first..first + len).collect();
    Ok(Solver::new(formula).count_over_range(&range))
}

/// The assignments to the original variables with no satisfying extension.
///
/// Returned in increasing integer order (x1 least significant).
pub fn discarded_assignments(
    formula: &CnfFormula,
    guard: &Guard,
) -> Result<Vec<Assignment>, GuardExceeded> {
    let n = formula.space.n_original;
    guard.admit(n)?;
    let mut solver = Solver::new(formula);
    let mut discarded = Vec::new();
    for index in 0..1u64 << n {
        let a = Assignment::from_index(1, n, index);
        if !solver.is_satisfiable(&a.as_assumptions()) {
            discarded.push(a);
        }
    }
    Ok(discarded)
}

/// True iff every satisfying assignment of `premises` satisfies `clause`,
/// i.e. `premises ∧ ¬clause` is unsatisfiable. A tautological clause is
/// implied by anything.
pub fn semantic_implies(premises: &CnfFormula, clause: &Clause) -> bool {
    let n = premises.space.n_total.max(clause.max_var());
    let mut solver = Solver::from_clauses(n, premises.clauses.iter());
    let negated: Vec<Lit> = clause.iter().map(Lit::negated).collect();
    !solver.is_satisfiable(&negated)
}
