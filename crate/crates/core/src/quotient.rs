//! Congruences induced by filters, quotient algebras `A/F`, and the
//! correspondence between filters above `F` and filters of `A/F`.

use crate::algebra::{Element, FiniteHilbertAlgebra};
use crate::error::{Error, Result};
use crate::filters::{all_filters, is_implicative_filter, meet_irreducibles, Filter};
use crate::subset::Subset;

/// A partition of the universe compatible with `→`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    /// Blocks ordered by least element.
    pub blocks: Vec<Subset>,
    /// `class_of[a]` is the index of the block containing `a`.
    pub class_of: Vec<usize>,
}

impl Congruence {
    pub fn related(&self, a: Element, b: Element) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    fn is_compatible(&self, algebra: &FiniteHilbertAlgebra) -> bool {
        algebra.elements().all(|a| {
            algebra.elements().all(|b| {
                let rep_a = self.blocks[self.class_of[a]].first().unwrap();
                let rep_b = self.blocks[self.class_of[b]].first().unwrap();
                self.related(algebra.imp(a, b), algebra.imp(rep_a, rep_b))
            })
        })
    }
}

/// `θ_F`: `a` and `b` are related when `a → b` and `b → a` both lie in `F`.
pub fn theta(algebra: &FiniteHilbertAlgebra, f: &Filter) -> Result<Congruence> {
    let set = f.set();
    if f.algebra_size() != algebra.size() || !is_implicative_filter(algebra, set) {
        return Err(Error::NotAFilter(algebra.format_subset(set)));
    }
    let related =
        |a: Element, b: Element| set.contains(algebra.imp(a, b)) && set.contains(algebra.imp(b, a));

    let mut class_of = vec![usize::MAX; algebra.size()];
    let mut blocks: Vec<Subset> = Vec::new();
    for a in algebra.elements() {
        if class_of[a] != usize::MAX {
            continue;
        }
        let block: Subset = algebra.elements().filter(|&b| related(a, b)).collect();
        for b in block {
            if class_of[b] != usize::MAX {
                return Err(Error::InternalInvariant(format!(
                    "θ relation is not transitive at {}",
                    algebra.label(b)
                )));
            }
            class_of[b] = blocks.len();
        }
        blocks.push(block);
    }
    // Every pair within a block must be related, not only pairs with the
    // representative.
    for block in &blocks {
        if !block.iter().all(|a| block.iter().all(|b| related(a, b))) {
            return Err(Error::InternalInvariant(format!(
                "θ relation is not an equivalence on block {}",
                algebra.format_subset(*block)
            )));
        }
    }
    let congruence = Congruence { blocks, class_of };
    if !congruence.is_compatible(algebra) {
        return Err(Error::InternalInvariant(
            "θ relation is not compatible with →".into(),
        ));
    }
    Ok(congruence)
}

/// The quotient `A/F` together with the canonical projection.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub algebra: FiniteHilbertAlgebra,
    /// `projection[a]` is the class `a/F`.
    pub projection: Vec<Element>,
    pub congruence: Congruence,
}

impl QuotientResult {
    /// Image `{a/F : a ∈ s}`.
    pub fn image(&self, s: Subset) -> Subset {
        s.iter().map(|a| self.projection[a]).collect()
    }

    /// Full preimage `{a : a/F ∈ s}`.
    pub fn preimage(&self, s: Subset) -> Subset {
        self.projection
            .iter()
            .enumerate()
            .filter(|&(_, &q)| s.contains(q))
            .map(|(a, _)| a)
            .collect()
    }
}

/// Builds `A/F`. Class `i` is the block with the `i`-th smallest least
/// element. Names carry over from the least element of each block, except
/// that the class of `1` keeps the name of `1`.
pub fn quotient(algebra: &FiniteHilbertAlgebra, f: &Filter) -> Result<QuotientResult> {
    let congruence = theta(algebra, f)?;
    let reps: Vec<Element> = congruence
        .blocks
        .iter()
        .map(|b| b.first().unwrap())
        .collect();
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| {
            reps.iter()
                .map(|&b| congruence.class_of[algebra.imp(a, b)])
                .collect()
        })
        .collect();
    let mut q = FiniteHilbertAlgebra::new(&table).map_err(|e| {
        Error::InternalInvariant(format!("quotient table is not a Hilbert algebra: {e}"))
    })?;
    if let Some(names) = algebra.names() {
        let top_class = congruence.class_of[algebra.top()];
        let renamed = reps
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                if i == top_class {
                    names[algebra.top()].clone()
                } else {
                    names[a].clone()
                }
            })
            .collect();
        q = q.with_names(renamed)?;
    }
    Ok(QuotientResult {
        algebra: q,
        projection: congruence.class_of.clone(),
        congruence,
    })
}

/// The map `G ↦ G/F` from filters of `A` above `F` to filters of `A/F`.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub quotient: QuotientResult,
    /// Pairs `(G, h(G))`, with `G` ranging over `↑F` in lattice order.
    pub pairs: Vec<(Subset, Subset)>,
    /// Whether `h` was verified to be an order isomorphism onto `Fi(A/F)`.
    pub verified: bool,
}

impl Correspondence {
    pub fn forward(&self, g: Subset) -> Option<Subset> {
        self.pairs.iter().find(|(a, _)| *a == g).map(|&(_, b)| b)
    }

    /// `h⁻¹(H)` for a filter `H` of the quotient.
    pub fn inverse(&self, h: Subset) -> Option<Subset> {
        self.pairs.iter().find(|(_, b)| *b == h).map(|&(a, _)| a)
    }
}

/// Constructs `h(G) = {g/F : g ∈ G}` for every filter `G ⊇ F` and checks
/// that it is a bijection onto `Fi(A/F)` preserving and reflecting inclusion.
pub fn correspondence_check(algebra: &FiniteHilbertAlgebra, f: &Filter) -> Result<Correspondence> {
    let quotient = quotient(algebra, f)?;
    let upper: Vec<Subset> = all_filters(algebra)?
        .filters()
        .iter()
        .map(Filter::set)
        .filter(|g| f.set().is_subset(*g))
        .collect();
    let target: Vec<Subset> = all_filters(&quotient.algebra)?
        .filters()
        .iter()
        .map(Filter::set)
        .collect();
    let pairs: Vec<(Subset, Subset)> = upper.iter().map(|&g| (g, quotient.image(g))).collect();

    let into = pairs.iter().all(|(_, h)| target.contains(h));
    let onto = target.iter().all(|t| pairs.iter().any(|(_, h)| h == t));
    let injective = pairs.len() == target.len()
        && pairs
            .iter()
            .enumerate()
            .all(|(i, p)| pairs[i + 1..].iter().all(|q| q.1 != p.1));
    let order = pairs.iter().all(|(g1, h1)| {
        pairs
            .iter()
            .all(|(g2, h2)| g1.is_subset(*g2) == h1.is_subset(*h2))
    });

    Ok(Correspondence {
        quotient,
        pairs,
        verified: into && onto && injective && order,
    })
}

/// Checks that `G ⊇ F` is meet-irreducible in `Fi(A)` iff `h(G)` is
/// meet-irreducible in `Fi(A/F)`.
pub fn spectrum_transports(algebra: &FiniteHilbertAlgebra, f: &Filter) -> Result<bool> {
    let corr = correspondence_check(algebra, f)?;
    let spec_a = meet_irreducibles(&all_filters(algebra)?).filters();
    let spec_q = meet_irreducibles(&all_filters(&corr.quotient.algebra)?).filters();
    Ok(corr
        .pairs
        .iter()
        .all(|(g, h)| spec_a.iter().any(|x| x.set() == *g) == spec_q.iter().any(|y| y.set() == *h)))
}
