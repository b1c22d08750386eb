//! Quadratic resolution refutations of unsatisfiable 2CNFs.
//!
//! A clause `(a ∨ b)` contributes the implications `¬a → b` and `¬b → a`.
//! A literal `ℓ` is *forced* when `¬ℓ` reaches `ℓ` in the implication
//! graph; the formula is unsatisfiable exactly when both polarities of some
//! variable are forced. Chained resolutions along a forcing path derive the
//! unit clause `ℓ`, and resolving two complementary units yields the empty
//! clause. Emitted refutations stay within width 2 and
//! [`SIZE_FACTOR`]`·n²` steps.

use thiserror::Error;

use crate::cnf::{Assignment, Clause, CnfFormula, Lit};
use crate::proof::Proof;

/// Declared constant for the size bound `SIZE_FACTOR · n²`.
pub const SIZE_FACTOR: usize = 8;

/// The declared size bound for a refutation of a 2CNF over `n` variables.
pub fn size_bound(n: u32) -> usize {
    SIZE_FACTOR * (n as usize).pow(2).max(1)
}

#[derive(Debug, Error)]
pub enum TwoSatError {
    #[error("formula has width {0}, expected at most 2")]
    WidthTooLarge(usize),
    #[error("formula is satisfiable")]
    Satisfiable(Assignment),
}

/// Node index of a literal in the implication graph.
fn node(lit: Lit) -> usize {
    ((lit.var() - 1) * 2 + lit.is_positive() as u32) as usize
}

fn node_lit(index: usize) -> Lit {
    Lit::new(index as u32 / 2 + 1, index % 2 == 1)
}

struct ImplicationGraph {
    /// Edges `from-literal → (to-literal, source clause index)`.
    edges: Vec<Vec<(usize, usize)>>,
}

impl ImplicationGraph {
    fn new(formula: &CnfFormula) -> ImplicationGraph {
        let n = formula.space.n_total;
        let mut edges = vec![Vec::new(); (n as usize) * 2];
        for (ci, clause) in formula.clauses.iter().enumerate() {
            if clause.is_tautology() {
                continue;
            }
            let lits: Vec<Lit> = clause.iter().collect();
            match lits.len() {
                1 => {
                    let a = lits[0];
                    edges[node(a.negated())].push((node(a), ci));
                }
                2 => {
                    let (a, b) = (lits[0], lits[1]);
                    edges[node(a.negated())].push((node(b), ci));
                    edges[node(b.negated())].push((node(a), ci));
                }
                _ => {}
            }
        }
        ImplicationGraph { edges }
    }

    /// BFS path from `from` to `to` as a list of (node, incoming clause),
    /// excluding the start node.
    fn path(&self, from: usize, to: usize) -> Option<Vec<(usize, usize)>> {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.edges.len()];
        let mut queue = std::collections::VecDeque::new();
        let mut seen = vec![false; self.edges.len()];
        seen[from] = true;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut rev = Vec::new();
                let mut cur = to;
                while cur != from {
                    let (p, ci) = prev[cur].unwrap();
                    rev.push((cur, ci));
                    cur = p;
                }
                rev.reverse();
                return Some(rev);
            }
            for &(v, ci) in &self.edges[u] {
                if !seen[v] {
                    seen[v] = true;
                    prev[v] = Some((u, ci));
                    queue.push_back(v);
                }
            }
        }
        None
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        self.path(from, to).is_some()
    }
}

/// Derives the unit clause `{lit}` by resolving along the implication path
/// from `¬lit` to `lit`; returns the step id of the unit.
fn derive_unit(
    proof: &mut Proof,
    formula: &CnfFormula,
    graph: &ImplicationGraph,
    lit: Lit,
) -> usize {
    let path =
        graph.path(node(lit.negated()), node(lit)).expect("caller checked reachability");
    let unit = Clause::new([lit]);
    let first_clause = &formula.clauses[path[0].1];
    let mut acc = proof.push_input(first_clause.clone());
    // Invariant: the clause at `acc` is {lit, m} for the path node m just
    // reached; it collapses to the unit at the path's end (or earlier, when
    // an edge clause is itself the unit).
    for window in path.windows(2) {
        if proof.clause_of(acc) == &unit {
            return acc;
        }
        let (mid, _) = window[0];
        let (_, ci) = window[1];
        let edge_clause = &formula.clauses[ci];
        let step = proof.push_input(edge_clause.clone());
        let pivot = node_lit(mid).var();
        acc = proof.push_resolve(acc, step, pivot).expect("chain resolution is valid");
    }
    acc
}

/// Builds a checker-ready refutation of an unsatisfiable 2CNF.
///
/// The forced variable with the lowest index is used; its two forcing paths
/// give two unit derivations whose resolvent is the empty clause. A
/// satisfiable input is detected and reported with a witness.
pub fn refute_2cnf(formula: &CnfFormula) -> Result<Proof, TwoSatError> {
    if formula.width() > 2 {
        return Err(TwoSatError::WidthTooLarge(formula.width()));
    }
    // A formula containing the empty clause is refuted by citing it.
    if let Some(empty) = formula.clauses.iter().find(|c| c.is_empty()) {
        let mut proof = Proof::new(formula.space);
        proof.push_input(empty.clone());
        return Ok(proof);
    }

    let graph = ImplicationGraph::new(formula);
    let mut contradictory_var = None;
    for v in 1..=formula.space.n_total {
        let pos_forced = graph.reaches(node(Lit::neg(v)), node(Lit::pos(v)));
        let neg_forced = graph.reaches(node(Lit::pos(v)), node(Lit::neg(v)));
        if pos_forced && neg_forced {
            contradictory_var = Some(v);
            break;
        }
    }
    let Some(v) = contradictory_var else {
        let witness = crate::cnf::sat_assignment(formula)
            .expect("no doubly-forced variable means the 2CNF is satisfiable");
        return Err(TwoSatError::Satisfiable(witness));
    };

    let mut proof = Proof::new(formula.space);
    let pos_unit = derive_unit(&mut proof, formula, &graph, Lit::pos(v));
    let neg_unit = derive_unit(&mut proof, formula, &graph, Lit::neg(v));
    proof.push_resolve(pos_unit, neg_unit, v).expect("complementary units resolve");
    Ok(proof)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{count_models, parse_dimacs, Guard, VarSpace};
    use crate::proof::{check_proof, CheckOptions};
    use crate::rng::SplitMix64;

    #[test]
    fn refutes_unit_pair_in_three_steps() {
        let f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap();
        let p = refute_2cnf(&f).unwrap();
        assert_eq!(p.size(), 3);
        assert!(check_proof(&f, None, &p, &CheckOptions::default()).accepted);
    }

    #[test]
    fn refutes_complete_two_var_formula() {
        let f = parse_dimacs("p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n").unwrap();
        let p = refute_2cnf(&f).unwrap();
        let v = check_proof(&f, None, &p, &CheckOptions::default());
        assert!(v.accepted, "{}", v.reason);
        assert!(p.width() <= 2);
    }

    #[test]
    fn detects_satisfiable_input() {
        let f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 2 0\n").unwrap();
        match refute_2cnf(&f) {
            Err(TwoSatError::Satisfiable(w)) => {
                assert!(crate::cnf::eval(&f, &w).unwrap());
            }
            other => panic!("expected satisfiable, got {other:?}"),
        }
    }

    #[test]
    fn rejects_wide_formulas() {
        let f = parse_dimacs("p cnf 3 1\n1 2 3 0\n").unwrap();
        assert!(matches!(refute_2cnf(&f), Err(TwoSatError::WidthTooLarge(3))));
    }

    #[test]
    fn refutes_empty_clause_directly() {
        let f = parse_dimacs("p cnf 1 1\n0\n").unwrap();
        let p = refute_2cnf(&f).unwrap();
        assert_eq!(p.size(), 1);
        assert!(check_proof(&f, None, &p, &CheckOptions::default()).accepted);
    }

    /// Random unsatisfiable 2CNFs: accepted by the checker and within the
    /// declared quadratic bound.
    #[test]
    fn random_unsat_2cnfs_within_bound() {
        let mut rng = SplitMix64::new(0xD00D);
        let guard = Guard::default();
        let mut produced = 0;
        while produced < 50 {
            let n = 3 + (rng.next_u64() % 10) as u32; // up to 12 vars
            let m = 2 * n as usize + (rng.next_u64() % (2 * n as u64)) as usize;
            let mut clauses = Vec::new();
            for _ in 0..m {
                let a = Lit::new((rng.next_below(n as u64)) as u32 + 1, rng.next_bool());
                let b = Lit::new((rng.next_below(n as u64)) as u32 + 1, rng.next_bool());
                clauses.push(Clause::new([a, b]));
            }
            let f = CnfFormula::new(VarSpace::plain(n), clauses).unwrap();
            if count_models(&f, 1, n, &guard).unwrap() != 0 {
                continue;
            }
            produced += 1;
            let p = refute_2cnf(&f).expect("oracle says unsatisfiable");
            let v = check_proof(&f, None, &p, &CheckOptions::default());
            assert!(v.accepted, "{}", v.reason);
            assert!(p.size() <= size_bound(n), "size {} over bound {}", p.size(), size_bound(n));
            assert!(p.width() <= 2);
        }
    }
}
