//! Implicational terms and equational checks `t ≈ 1`.

use std::fmt;

use crate::algebra::{Element, FiniteHilbertAlgebra};
use crate::error::{Error, Result};

/// A term built from variables `x0, x1, ..` and `→`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Imp(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn imp(left: Term, right: Term) -> Term {
        Term::Imp(Box::new(left), Box::new(right))
    }

    /// One more than the largest variable index, or 0 for no variables.
    pub fn arity(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Imp(l, r) => l.arity().max(r.arity()),
        }
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Imp(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Evaluates under `assignment`, where variable `xi` takes `assignment[i]`.
    pub fn eval(&self, algebra: &FiniteHilbertAlgebra, assignment: &[Element]) -> Result<Element> {
        match self {
            Term::Var(i) => assignment.get(*i).copied().ok_or(Error::UnboundVariable {
                index: *i,
                len: assignment.len(),
            }),
            Term::Imp(l, r) => {
                let a = l.eval(algebra, assignment)?;
                let b = r.eval(algebra, assignment)?;
                Ok(algebra.imp(a, b))
            }
        }
    }

    // Unchecked evaluation for the exhaustive search, where the assignment
    // length is already known to cover the arity.
    fn eval_unchecked(&self, algebra: &FiniteHilbertAlgebra, assignment: &[Element]) -> Element {
        match self {
            Term::Var(i) => assignment[*i],
            Term::Imp(l, r) => algebra.imp(
                l.eval_unchecked(algebra, assignment),
                r.eval_unchecked(algebra, assignment),
            ),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Imp(l, r) => {
                match **l {
                    Term::Var(_) => write!(f, "{l}")?,
                    Term::Imp(..) => write!(f, "({l})")?,
                }
                write!(f, " → {r}")
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// See [`Term::eval`].
pub fn eval_term(
    algebra: &FiniteHilbertAlgebra,
    term: &Term,
    assignment: &[Element],
) -> Result<Element> {
    term.eval(algebra, assignment)
}

/// Result of checking `t ≈ 1` over every assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    /// Lexicographically least assignment (with `x0` most significant) on
    /// which the term is not `1`, if any.
    pub counterexample: Option<Vec<Element>>,
}

impl IdentityVerdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Decides whether `algebra ⊨ term ≈ 1` by exhausting all assignments of the
/// term's variables.
pub fn satisfies_identity(algebra: &FiniteHilbertAlgebra, term: &Term) -> IdentityVerdict {
    let k = term.arity();
    let n = algebra.size();
    let top = algebra.top();
    let mut assignment = vec![0; k];
    loop {
        if term.eval_unchecked(algebra, &assignment) != top {
            return IdentityVerdict {
                counterexample: Some(assignment),
            };
        }
        // Odometer with the last variable varying fastest.
        let mut i = k;
        loop {
            if i == 0 {
                return IdentityVerdict {
                    counterexample: None,
                };
            }
            i -= 1;
            assignment[i] += 1;
            if assignment[i] < n {
                break;
            }
            assignment[i] = 0;
        }
    }
}
