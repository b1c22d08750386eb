//! CNF data model and exact semantic oracles.
//!
//! Variables are positive 1-based indices. The variable space is split into
//! *original* variables `x1..x_{n_original}` and *extension* variables
//! `x_{n_original+1}..x_{n_total}`; promise axioms constrain the original
//! block through the extension block.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

mod dimacs;
mod solve;

pub use dimacs::{parse_dimacs, serialize_dimacs, DimacsError};
pub use solve::{
    count_models, discarded_assignments, sat_assignment, satisfiable, semantic_implies, Solver,
};

/// A literal in DIMACS sign convention: variable index with a polarity.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lit(i32);

impl Lit {
    /// Builds a literal from a 1-based variable index and a polarity.
    pub fn new(var: u32, positive: bool) -> Lit {
        assert!(var >= 1 && var <= i32::MAX as u32, "variable index out of range");
        Lit(if positive { var as i32 } else { -(var as i32) })
    }

    pub fn pos(var: u32) -> Lit {
        Lit::new(var, true)
    }

    pub fn neg(var: u32) -> Lit {
        Lit::new(var, false)
    }

    /// Interprets a nonzero DIMACS integer.
    pub fn from_dimacs(value: i32) -> Option<Lit> {
        if value == 0 || value == i32::MIN {
            None
        } else {
            Some(Lit(value))
        }
    }

    pub fn to_dimacs(self) -> i32 {
        self.0
    }

    pub fn var(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn negated(self) -> Lit {
        Lit(-self.0)
    }

    /// True under a concrete variable value.
    pub fn satisfied_by(self, value: bool) -> bool {
        self.is_positive() == value
    }
}

impl PartialOrd for Lit {
    fn partial_cmp(&self, other: &Lit) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

// Canonical order: by variable, negative phase before positive.
impl Ord for Lit {
    fn cmp(&self, other: &Lit) -> std::cmp::Ordering {
        (self.var(), self.is_positive()).cmp(&(other.var(), other.is_positive()))
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A clause: a duplicate-free, canonically ordered set of literals.
///
/// The empty clause is representable and stands for FALSE. Tautological
/// clauses (`x ∨ ¬x`) are representable and evaluate to true everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Clause {
    lits: Vec<Lit>,
}

impl Clause {
    pub fn new(lits: impl IntoIterator<Item = Lit>) -> Clause {
        let mut lits: Vec<Lit> = lits.into_iter().collect();
        lits.sort();
        lits.dedup();
        Clause { lits }
    }

    pub fn empty() -> Clause {
        Clause { lits: Vec::new() }
    }

    /// Number of literals.
    pub fn width(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn contains(&self, lit: Lit) -> bool {
        self.lits.binary_search(&lit).is_ok()
    }

    pub fn contains_var(&self, var: u32) -> bool {
        self.contains(Lit::pos(var)) || self.contains(Lit::neg(var))
    }

    /// Contains both polarities of some variable.
    pub fn is_tautology(&self) -> bool {
        self.lits.windows(2).any(|w| w[0].var() == w[1].var())
    }

    pub fn iter(&self) -> impl Iterator<Item = Lit> + '_ {
        self.lits.iter().copied()
    }

    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    pub fn max_var(&self) -> u32 {
        self.lits.iter().map(|l| l.var()).max().unwrap_or(0)
    }

    pub fn union(&self, other: &Clause) -> Clause {
        Clause::new(self.iter().chain(other.iter()))
    }

    pub fn without(&self, lit: Lit) -> Clause {
        Clause {
            lits: self.lits.iter().copied().filter(|&l| l != lit).collect(),
        }
    }

    /// Subset test on literal sets.
    pub fn subset_of(&self, other: &Clause) -> bool {
        self.lits.iter().all(|&l| other.contains(l))
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        // Distinct by construction except for tautological pairs.
        let mut last = 0;
        self.lits.iter().filter_map(move |l| {
            if l.var() == last {
                None
            } else {
                last = l.var();
                Some(last)
            }
        })
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.lits.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The partitioned variable space of a formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VarSpace {
    pub n_original: u32,
    pub n_total: u32,
}

impl VarSpace {
    pub fn new(n_original: u32, n_total: u32) -> VarSpace {
        assert!(n_total >= n_original, "extension block cannot be negative");
        VarSpace { n_original, n_total }
    }

    /// All variables are original.
    pub fn plain(n: u32) -> VarSpace {
        VarSpace { n_original: n, n_total: n }
    }

    pub fn has_extensions(&self) -> bool {
        self.n_total > self.n_original
    }
}

/// A CNF formula: an ordered list of clauses over a variable space.
///
/// The clause list may contain repeated clauses (random formulas are drawn
/// with repetition); `size` counts them all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CnfFormula {
    pub space: VarSpace,
    pub clauses: Vec<Clause>,
}

#[derive(Debug, Error)]
pub enum FormulaError {
    #[error("clause {index} references variable {var} beyond declared total {n_total}")]
    VarOutOfRange { index: usize, var: u32, n_total: u32 },
}

impl CnfFormula {
    pub fn new(space: VarSpace, clauses: Vec<Clause>) -> Result<CnfFormula, FormulaError> {
        for (index, c) in clauses.iter().enumerate() {
            let var = c.max_var();
            if var > space.n_total {
                return Err(FormulaError::VarOutOfRange { index, var, n_total: space.n_total });
            }
        }
        Ok(CnfFormula { space, clauses })
    }

    /// Number of clauses.
    pub fn size(&self) -> usize {
        self.clauses.len()
    }

    /// Maximum clause width (0 for the empty formula).
    pub fn width(&self) -> usize {
        self.clauses.iter().map(|c| c.width()).max().unwrap_or(0)
    }

    pub fn max_var(&self) -> u32 {
        self.clauses.iter().map(|c| c.max_var()).max().unwrap_or(0)
    }

    /// Variables that occur in some clause.
    pub fn occurring_vars(&self) -> BTreeSet<u32> {
        self.clauses.iter().flat_map(|c| c.vars().collect::<Vec<_>>()).collect()
    }

    /// Appends the clauses of `other`, keeping this formula's space (which
    /// must cover them).
    pub fn extended_with(&self, other: &[Clause]) -> Result<CnfFormula, FormulaError> {
        let mut clauses = self.clauses.clone();
        clauses.extend_from_slice(other);
        CnfFormula::new(self.space, clauses)
    }
}

/// A total assignment over a contiguous variable range `first..first+len`.
///
/// Ranges make the original/extension split explicit: oracles over the X
/// block use `first = 1, len = n_original`. When interpreted as an integer,
/// the first variable of the range is the least significant bit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Assignment {
    first: u32,
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(first: u32, values: Vec<bool>) -> Assignment {
        assert!(first >= 1);
        Assignment { first, values }
    }

    /// The `index`-th assignment of the range in integer order.
    pub fn from_index(first: u32, len: u32, index: u64) -> Assignment {
        let values = (0..len).map(|b| index >> b & 1 == 1).collect();
        Assignment { first, values }
    }

    pub fn to_index(&self) -> u64 {
        self.values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (b, &v)| if v { acc | 1 << b } else { acc })
    }

    pub fn first_var(&self) -> u32 {
        self.first
    }

    pub fn len(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn covers(&self, var: u32) -> bool {
        var >= self.first && var < self.first + self.len()
    }

    pub fn get(&self, var: u32) -> Option<bool> {
        if self.covers(var) {
            Some(self.values[(var - self.first) as usize])
        } else {
            None
        }
    }

    pub fn set(&mut self, var: u32, value: bool) {
        assert!(self.covers(var));
        self.values[(var - self.first) as usize] = value;
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.first..self.first + self.len()
    }

    /// Literals asserted by this assignment, usable as solver assumptions.
    pub fn as_assumptions(&self) -> Vec<Lit> {
        self.vars().map(|v| Lit::new(v, self.get(v).unwrap())).collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("assignment does not cover variable {0}")]
    Uncovered(u32),
}

/// Evaluates a clause; true iff some literal is true. The assignment must
/// cover every variable of the clause.
pub fn eval_clause(clause: &Clause, a: &Assignment) -> Result<bool, EvalError> {
    let mut any = false;
    for lit in clause.iter() {
        let value = a.get(lit.var()).ok_or(EvalError::Uncovered(lit.var()))?;
        any |= lit.satisfied_by(value);
    }
    Ok(any)
}

/// Evaluates a formula; true iff every clause has a true literal.
///
/// Requires the assignment to cover every variable occurring in the formula;
/// the empty clause evaluates to false under any assignment.
pub fn eval(formula: &CnfFormula, a: &Assignment) -> Result<bool, EvalError> {
    let mut all = true;
    for clause in &formula.clauses {
        // Keep scanning even after a false clause so coverage errors surface.
        all &= eval_clause(clause, a)?;
    }
    Ok(all)
}

/// Enumeration guard for the exhaustive oracles.
///
/// Sweeps over more than `bits` binary choices are refused rather than left
/// to run; callers can widen the guard explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub bits: u32,
}

impl Default for Guard {
    fn default() -> Guard {
        Guard { bits: 24 }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("enumeration over {requested} bits exceeds the {limit}-bit guard")]
pub struct GuardExceeded {
    pub requested: u32,
    pub limit: u32,
}

impl Guard {
    pub fn new(bits: u32) -> Guard {
        Guard { bits }
    }

    pub fn admit(&self, bits: u32) -> Result<(), GuardExceeded> {
        if bits > self.bits {
            Err(GuardExceeded { requested: bits, limit: self.bits })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clause(lits: &[i32]) -> Clause {
        Clause::new(lits.iter().map(|&l| Lit::from_dimacs(l).unwrap()))
    }

    #[test]
    fn literal_roundtrip_and_order() {
        let l = Lit::from_dimacs(-3).unwrap();
        assert_eq!(l.var(), 3);
        assert!(!l.is_positive());
        assert_eq!(l.negated().to_dimacs(), 3);
        assert!(Lit::neg(1) < Lit::pos(1));
        assert!(Lit::pos(1) < Lit::neg(2));
    }

    #[test]
    fn clause_canonicalization_dedups_and_sorts() {
        let c = clause(&[2, -1, 2, -1]);
        assert_eq!(c.width(), 2);
        assert_eq!(c, clause(&[-1, 2]));
        assert!(clause(&[1, -1]).is_tautology());
        assert!(!c.is_tautology());
    }

    #[test]
    fn empty_clause_is_false_everywhere() {
        let a = Assignment::from_index(1, 2, 3);
        assert_eq!(eval_clause(&Clause::empty(), &a), Ok(false));
    }

    #[test]
    fn eval_basic() {
        let f = CnfFormula::new(VarSpace::plain(2), vec![clause(&[1, 2])]).unwrap();
        // (0, 1): x1 = 0, x2 = 1.
        let a = Assignment::new(1, vec![false, true]);
        assert_eq!(eval(&f, &a), Ok(true));
        let b = Assignment::new(1, vec![false, false]);
        assert_eq!(eval(&f, &b), Ok(false));
    }

    #[test]
    fn eval_requires_coverage() {
        let f = CnfFormula::new(VarSpace::plain(3), vec![clause(&[1, 3])]).unwrap();
        let a = Assignment::new(1, vec![true, true]);
        assert_eq!(eval(&f, &a), Err(EvalError::Uncovered(3)));
    }

    #[test]
    fn eval_monotone_under_weakening() {
        // If C ⊆ D and C is true under a, then D is true under a.
        let mut idx = 0u64;
        for _ in 0..200 {
            idx = idx.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = Assignment::from_index(1, 4, idx % 16);
            let c = clause(&[((idx >> 4) % 4 + 1) as i32 * if idx >> 6 & 1 == 1 { -1 } else { 1 }]);
            let d = c.union(&clause(&[((idx >> 7) % 4 + 1) as i32]));
            if eval_clause(&c, &a).unwrap() {
                assert!(eval_clause(&d, &a).unwrap());
            }
        }
    }

    #[test]
    fn assignment_indexing_is_lsb_first() {
        let a = Assignment::from_index(1, 3, 0b101);
        assert_eq!(a.get(1), Some(true));
        assert_eq!(a.get(2), Some(false));
        assert_eq!(a.get(3), Some(true));
        assert_eq!(a.to_index(), 5);
        assert_eq!(a.get(4), None);
    }

    #[test]
    fn formula_rejects_out_of_range_vars() {
        let err = CnfFormula::new(VarSpace::plain(1), vec![clause(&[2])]);
        assert!(err.is_err());
    }

    #[test]
    fn tautology_true_under_all_assignments() {
        let t = clause(&[1, -1]);
        for i in 0..2 {
            let a = Assignment::from_index(1, 1, i);
            assert!(eval_clause(&t, &a).unwrap());
        }
    }
}
