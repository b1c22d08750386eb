//! Resolution refutations under satisfying-assignment promises.
//!
//! A CNF over `n` variables is "under promise Λ" when it is guaranteed to be
//! either unsatisfiable or to have more than Λ satisfying assignments. Promise
//! resolution extends resolution with one *promise axiom*: a CNF, built from a
//! family of Boolean circuits, that restricts the original variables to the
//! image of the family and therefore discards at most Λ assignments.
//!
//! The crate provides:
//!
//! * [`cnf`] — clause/formula model, DIMACS I/O, and exact semantic oracles
//!   (evaluation, model counting, discarded-assignment sweeps, implication);
//! * [`proof`] — fat-step resolution proofs, the `PRES v1` text format, and
//!   the promise-resolution checker;
//! * [`twosat`] — a quadratic 2CNF refuter built on the implication graph;
//! * [`width`] — width-bounded saturation and the size-width statistic;
//! * [`circuit`] — gate-level circuits, the `CIRC v1` netlist format, and the
//!   clause encoding of a circuit together with brute-force image oracles;
//! * [`axiom`] — promise parameters, circuit families, the promise-axiom CNF
//!   builders, the constant-width rewrite, and instance validation;
//! * [`refute`] — the constructive refuter for the big (constant-fraction)
//!   promise;
//! * [`lab`] — random 3CNF generation and the combinatorial measures used by
//!   the small-promise lower bound (expansion, matchability, boundary,
//!   implication cost).
//!
//! Start with the `examples/` directory; each example exercises one of the
//! capabilities above end to end.

pub mod axiom;
pub mod circuit;
pub mod cnf;
pub mod lab;
pub mod proof;
pub mod refute;
pub mod report;
pub mod rng;
pub mod twosat;
pub mod width;

pub use cnf::{Assignment, Clause, CnfFormula, Guard, Lit, VarSpace};
pub use proof::{check_proof, resolve, weaken, CheckOptions, Proof, ProofStep, Rule, Verdict};
