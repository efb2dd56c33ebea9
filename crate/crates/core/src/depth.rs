//! The terms `d_n` and the equational description of bounded depth.
//!
//! ```text
//! d_0(x0)          = x0
//! d_{n+1}(x0..xn+1) = ((x_{n+1} → d_n) → x_{n+1}) → x_{n+1}
//! ```
//!
//! A finite Hilbert algebra has depth `≤ n` exactly when it satisfies
//! `d_n ≈ 1`. Besides checking both sides, this module runs the two
//! constructive arguments behind that equivalence:
//!
//! * [`chain_from_counterexample`] turns a failing assignment of `d_n` into a
//!   chain of `n + 1` meet-irreducible filters;
//! * [`subalgebra_from_chain`] turns such a chain into a subalgebra
//!   `a_0 < .. < a_n < 1` on which `d_n` fails.
//!
//! Every step the arguments guarantee is re-checked at runtime; a failed
//! check surfaces as [`Error::InternalInvariant`].

use crate::algebra::{Element, FiniteHilbertAlgebra};
use crate::error::{Error, Result};
use crate::filters::{fg_closure, separate_elements, spectrum, Filter, SpectrumPoset};
use crate::quotient::correspondence_check;
use crate::subset::Subset;
use crate::term::{satisfies_identity, IdentityVerdict, Term};

/// The term `d_n(x0, .., xn)`.
pub fn d_term(n: usize) -> Term {
    (1..=n).fold(Term::var(0), |d, i| {
        let x = || Term::var(i);
        Term::imp(Term::imp(Term::imp(x(), d), x()), x())
    })
}

/// Evaluates `d_n` on `values[0..=n]` without building the term.
pub fn eval_d(algebra: &FiniteHilbertAlgebra, values: &[Element]) -> Element {
    values[1..].iter().fold(values[0], |d, &x| {
        algebra.imp(algebra.imp(algebra.imp(x, d), x), x)
    })
}

/// Decides `A ⊨ d_n ≈ 1`.
pub fn depth_leq_via_identity(algebra: &FiniteHilbertAlgebra, n: usize) -> IdentityVerdict {
    satisfies_identity(algebra, &d_term(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthRow {
    pub n: usize,
    /// Spectrum side: `depth(A) ≤ n`.
    pub depth_leq: bool,
    /// Equational side: `A ⊨ d_n ≈ 1`.
    pub identity_holds: bool,
    pub counterexample: Option<Vec<Element>>,
}

impl DepthRow {
    pub fn agree(&self) -> bool {
        self.depth_leq == self.identity_holds
    }
}

/// Comparison of the two sides of the depth characterization for one algebra.
#[derive(Clone, Debug)]
pub struct DepthReport {
    pub algebra: FiniteHilbertAlgebra,
    pub depth: usize,
    pub rows: Vec<DepthRow>,
}

impl DepthReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(DepthRow::agree)
    }
}

/// Compares `depth(A) ≤ n` with `A ⊨ d_n ≈ 1` for every `n ≤ n_max`.
pub fn verify_main_theorem(algebra: &FiniteHilbertAlgebra, n_max: usize) -> Result<DepthReport> {
    let depth = spectrum(algebra)?.height();
    let rows = (0..=n_max)
        .map(|n| {
            let verdict = depth_leq_via_identity(algebra, n);
            DepthRow {
                n,
                depth_leq: depth <= n,
                identity_holds: verdict.holds(),
                counterexample: verdict.counterexample,
            }
        })
        .collect();
    Ok(DepthReport {
        algebra: algebra.clone(),
        depth,
        rows,
    })
}

/// A strictly increasing chain `F_0 ⊊ .. ⊊ F_n` of meet-irreducible filters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    pub filters: Vec<Filter>,
}

impl ChainWitness {
    /// Checks strictness and membership in the spectrum.
    pub fn check(&self, spectrum: &SpectrumPoset) -> Result<()> {
        if self.filters.is_empty() {
            return Err(Error::Precondition("empty chain".into()));
        }
        if let Some(f) = self.filters.iter().find(|f| !spectrum.contains(f)) {
            return Err(Error::Precondition(format!("{f} is not meet-irreducible")));
        }
        if let Some(w) = self
            .filters
            .windows(2)
            .find(|w| !w[0].set().is_proper_subset(w[1].set()))
        {
            return Err(Error::Precondition(format!(
                "{} is not strictly below {}",
                w[0], w[1]
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }
}

/// Elements `a_0 < .. < a_n < 1` forming a subuniverse together with `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraChainWitness {
    pub elements: Vec<Element>,
}

impl SubalgebraChainWitness {
    /// Checks the chain order, `a_j → a_i = a_i` for `i < j`, and closure of
    /// `{a_0, .., a_n, 1}` under `→`.
    pub fn check(&self, algebra: &FiniteHilbertAlgebra) -> Result<()> {
        let e = &self.elements;
        let top = algebra.top();
        let ordered = e.windows(2).all(|w| algebra.lt(w[0], w[1]))
            && e.last().is_some_and(|&last| algebra.lt(last, top));
        let absorbing = (0..e.len()).all(|j| (0..j).all(|i| algebra.imp(e[j], e[i]) == e[i]));
        let closed = algebra.is_subuniverse(self.subuniverse(algebra));
        if ordered && absorbing && closed {
            Ok(())
        } else {
            Err(Error::InternalInvariant(format!(
                "{:?} is not a subalgebra chain (ordered: {ordered}, absorbing: {absorbing}, closed: {closed})",
                e
            )))
        }
    }

    pub fn subuniverse(&self, algebra: &FiniteHilbertAlgebra) -> Subset {
        self.elements
            .iter()
            .copied()
            .collect::<Subset>()
            .with(algebra.top())
    }
}

/// Builds a chain of `n + 1` meet-irreducible filters from an assignment
/// `a_0, .., a_n` on which `d_n` is not `1`.
///
/// For `n = 0` the chain is a single meet-irreducible filter omitting `a_0`.
/// For `n > 0`, with `b = d_{n-1}(a_0, .., a_{n-1})`:
///
/// 1. pick `F_0 ∈ A_*` containing `(a_n → b) → a_n` but not `a_n`;
/// 2. let `F = Fg(F_0 ∪ {a_n})`, which cannot contain `b`;
/// 3. recurse in `A/F` on the classes of `a_0, .., a_{n-1}`;
/// 4. pull the resulting chain back to filters above `F` and put `F_0` in
///    front.
pub fn chain_from_counterexample(
    algebra: &FiniteHilbertAlgebra,
    assignment: &[Element],
    n: usize,
) -> Result<ChainWitness> {
    if assignment.len() != n + 1 {
        return Err(Error::Precondition(format!(
            "d_{n} needs {} values, got {}",
            n + 1,
            assignment.len()
        )));
    }
    if let Some(&a) = assignment.iter().find(|&&a| a >= algebra.size()) {
        return Err(Error::Precondition(format!("element {a} out of range")));
    }
    if eval_d(algebra, assignment) == algebra.top() {
        return Err(Error::Precondition(format!(
            "d_{n} evaluates to 1 on {assignment:?}"
        )));
    }
    let spectrum = spectrum(algebra)?;
    let chain = chain_step(algebra, &spectrum, assignment)?;
    let witness = ChainWitness { filters: chain };
    witness
        .check(&spectrum)
        .map_err(|e| Error::InternalInvariant(format!("constructed chain is invalid: {e}")))?;
    Ok(witness)
}

fn chain_step(
    algebra: &FiniteHilbertAlgebra,
    spectrum: &SpectrumPoset,
    assignment: &[Element],
) -> Result<Vec<Filter>> {
    let top = algebra.top();
    let (&a_n, prefix) = assignment.split_last().expect("assignment is nonempty");

    if prefix.is_empty() {
        // a_0 < 1, so 1 ≰ a_0 and some member of A_* omits a_0.
        let f = separate_elements(spectrum, top, a_n)?;
        return Ok(vec![f]);
    }

    let b = eval_d(algebra, prefix);
    let peirce = algebra.imp(algebra.imp(a_n, b), a_n);
    if algebra.leq(peirce, a_n) {
        return Err(Error::InternalInvariant(format!(
            "(a_n → b) → a_n ≤ a_n although d_n(..) < 1 at {assignment:?}"
        )));
    }
    let f0 = separate_elements(spectrum, peirce, a_n)?;
    let f = fg_closure(algebra, f0.set().with(a_n));
    if f.contains(b) {
        return Err(Error::InternalInvariant(format!(
            "b = {} lies in Fg(F_0 ∪ {{a_n}}) = {}",
            algebra.label(b),
            algebra.format_subset(f.set())
        )));
    }

    let corr = correspondence_check(algebra, &f)?;
    if !corr.verified {
        return Err(Error::InternalInvariant(format!(
            "correspondence for {} failed verification",
            algebra.format_subset(f.set())
        )));
    }
    let q = &corr.quotient;
    let projected: Vec<Element> = prefix.iter().map(|&a| q.projection[a]).collect();
    if eval_d(&q.algebra, &projected) == q.algebra.top() {
        return Err(Error::InternalInvariant(
            "d_{n-1} holds on the projected assignment".into(),
        ));
    }
    let q_spectrum = crate::filters::spectrum(&q.algebra)?;
    let upper = chain_step(&q.algebra, &q_spectrum, &projected)?;

    let mut chain = vec![f0];
    for g in upper {
        let pulled = corr.inverse(g.set()).ok_or_else(|| {
            Error::InternalInvariant(format!("{g} has no preimage under the correspondence"))
        })?;
        chain.push(Filter::new(algebra, pulled)?);
    }
    Ok(chain)
}

/// Builds `a_0 < .. < a_n < 1` forming a subuniverse, with `a_n ∉ F_0`, from
/// a chain `F_0 ⊊ .. ⊊ F_n` in `A_*`.
///
/// Works from the top of the chain down. The last filter yields `a_0` as the
/// least element outside it. Given `a_{k-1} ∉ F_{j+1}`, let
/// `G = {b : a_{k-1} ≤ b and b → a_{k-1} = a_{k-1}}` and take `a_k` least in
/// `(F_{j+1} ∩ G) − F_j`.
pub fn subalgebra_from_chain(
    algebra: &FiniteHilbertAlgebra,
    chain: &ChainWitness,
) -> Result<SubalgebraChainWitness> {
    let spectrum = spectrum(algebra)?;
    chain.check(&spectrum)?;
    let filters = &chain.filters;
    let last = filters.last().unwrap();

    let a0 = algebra
        .universe()
        .difference(last.set())
        .first()
        .ok_or_else(|| Error::InternalInvariant(format!("{last} is the whole algebra")))?;
    let mut elements = vec![a0];

    for j in (0..filters.len() - 1).rev() {
        let prev = *elements.last().unwrap();
        let g: Subset = algebra
            .elements()
            .filter(|&b| algebra.leq(prev, b) && algebra.imp(b, prev) == prev)
            .collect();
        if Filter::new(algebra, g).is_err() {
            return Err(Error::InternalInvariant(format!(
                "G = {} is not an implicative filter",
                algebra.format_subset(g)
            )));
        }
        let candidates = filters[j + 1]
            .set()
            .intersection(g)
            .difference(filters[j].set());
        let next = candidates.first().ok_or_else(|| {
            Error::InternalInvariant(format!(
                "(F_{} ∩ G) − F_{} is empty for G = {}",
                j + 1,
                j,
                algebra.format_subset(g)
            ))
        })?;
        elements.push(next);
    }

    let witness = SubalgebraChainWitness { elements };
    witness.check(algebra)?;
    if filters[0].contains(*witness.elements.last().unwrap()) {
        return Err(Error::InternalInvariant("a_n lies in F_0".into()));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain_algebra;
    use crate::term::eval_term;

    fn fork() -> FiniteHilbertAlgebra {
        FiniteHilbertAlgebra::new(&[[2, 1, 2], [0, 2, 2], [0, 1, 2]]).unwrap()
    }

    fn sets(w: &ChainWitness) -> Vec<u64> {
        w.filters.iter().map(|f| f.set().bits()).collect()
    }

    #[test]
    fn d_terms() {
        assert_eq!(d_term(0), Term::var(0));
        assert_eq!(d_term(1).to_string(), "((x1 → x0) → x1) → x1");
        assert_eq!(
            d_term(2).to_string(),
            "((x2 → ((x1 → x0) → x1) → x1) → x2) → x2"
        );
        assert_eq!(d_term(4).arity(), 5);
    }

    #[test]
    fn eval_d_matches_term() {
        let c = chain_algebra(3);
        for n in 0..3 {
            let vals: Vec<usize> = (0..=n).collect();
            assert_eq!(eval_d(&c, &vals), eval_term(&c, &d_term(n), &vals).unwrap());
        }
    }

    #[test]
    fn identity_examples() {
        let c3 = chain_algebra(2);
        assert_eq!(
            depth_leq_via_identity(&c3, 1).counterexample,
            Some(vec![0, 1])
        );
        assert!(depth_leq_via_identity(&c3, 2).holds());
        assert!(depth_leq_via_identity(&FiniteHilbertAlgebra::trivial(), 0).holds());
    }

    #[test]
    fn theorem_rows() {
        let r = verify_main_theorem(&fork(), 2).unwrap();
        assert_eq!(r.depth, 1);
        let holds: Vec<bool> = r.rows.iter().map(|r| r.identity_holds).collect();
        assert_eq!(holds, [false, true, true]);
        assert!(r.all_agree());

        let r = verify_main_theorem(&chain_algebra(3), 3).unwrap();
        assert_eq!(r.depth, 3);
        assert_eq!(r.rows[2].counterexample, Some(vec![0, 1, 2]));
        assert!(r.rows[3].identity_holds);
        assert!(r.all_agree());

        let r = verify_main_theorem(&FiniteHilbertAlgebra::trivial(), 0).unwrap();
        assert_eq!(r.depth, 0);
        assert!(r.rows[0].identity_holds && r.all_agree());
    }

    #[test]
    fn chain_from_counterexample_examples() {
        let c3 = chain_algebra(2);
        let w = chain_from_counterexample(&c3, &[0, 1], 1).unwrap();
        assert_eq!(sets(&w), [0b100, 0b110]);

        let a2 = chain_algebra(1);
        let w = chain_from_counterexample(&a2, &[0], 0).unwrap();
        assert_eq!(sets(&w), [0b10]);

        let c4 = chain_algebra(3);
        let w = chain_from_counterexample(&c4, &[0, 1, 2], 2).unwrap();
        assert_eq!(sets(&w), [0b1000, 0b1100, 0b1110]);
        assert!(w
            .filters
            .iter()
            .all(|f| (0..4).any(|a| Filter::principal(&c4, a) == *f)));
    }

    #[test]
    fn chain_from_counterexample_rejects_valid_assignment() {
        let c3 = chain_algebra(2);
        assert!(matches!(
            chain_from_counterexample(&c3, &[0, 0], 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            chain_from_counterexample(&c3, &[0], 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn subalgebra_examples() {
        let c3 = chain_algebra(2);
        let chain = chain_from_counterexample(&c3, &[0, 1], 1).unwrap();
        assert_eq!(subalgebra_from_chain(&c3, &chain).unwrap().elements, [0, 1]);

        let a2 = chain_algebra(1);
        let chain = chain_from_counterexample(&a2, &[0], 0).unwrap();
        assert_eq!(subalgebra_from_chain(&a2, &chain).unwrap().elements, [0]);

        let c4 = chain_algebra(3);
        let chain = chain_from_counterexample(&c4, &[0, 1, 2], 2).unwrap();
        let w = subalgebra_from_chain(&c4, &chain).unwrap();
        assert_eq!(w.elements, [0, 1, 2]);
        for i in 0..3 {
            assert_eq!(eval_d(&c4, &w.elements[..=i]), w.elements[i]);
        }
    }

    #[test]
    fn subalgebra_rejects_non_chain() {
        let f = fork();
        let sp = spectrum(&f).unwrap();
        let bad = ChainWitness {
            filters: sp.filters(),
        };
        assert!(matches!(
            subalgebra_from_chain(&f, &bad),
            Err(Error::Precondition(_))
        ));
    }
}
