//! Implicative filters, the lattice `Fi(A)` and its meet-irreducible spectrum.
//!
//! A set `F` is an implicative filter when `1 ∈ F` and `a, a → b ∈ F`
//! implies `b ∈ F`. Filters are upsets, principal upsets are filters, and
//! under inclusion they form a distributive lattice. The poset of its
//! meet-irreducible members is the *spectrum* `A_*`, and the depth of `A` is
//! the number of elements of the longest chain in `A_*`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::algebra::{Element, FiniteHilbertAlgebra};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Universe size beyond which [`all_filters`] refuses to run.
pub const DEFAULT_LATTICE_CAP: usize = 32;

/// Up to this size, [`all_filters`] scans every subset instead of searching
/// the lattice.
const SUBSET_SCAN_LIMIT: usize = 16;

/// An implicative filter of some algebra of size `size`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filter {
    set: Subset,
    size: usize,
}

impl Filter {
    /// Checks `set` and wraps it.
    pub fn new(algebra: &FiniteHilbertAlgebra, set: Subset) -> Result<Filter> {
        if is_implicative_filter(algebra, set) {
            Ok(Filter {
                set,
                size: algebra.size(),
            })
        } else {
            Err(Error::NotAFilter(algebra.format_subset(set)))
        }
    }

    /// The principal filter `↑a`.
    pub fn principal(algebra: &FiniteHilbertAlgebra, a: Element) -> Filter {
        Filter {
            set: algebra.up(a),
            size: algebra.size(),
        }
    }

    pub(crate) fn unchecked(set: Subset, size: usize) -> Filter {
        Filter { set, size }
    }

    pub fn set(&self) -> Subset {
        self.set
    }

    pub fn algebra_size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, a: Element) -> bool {
        self.set.contains(a)
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.set.is_subset(other.set)
    }

    fn belongs_to(&self, algebra: &FiniteHilbertAlgebra) -> Result<()> {
        if self.size == algebra.size() && is_implicative_filter(algebra, self.set) {
            Ok(())
        } else {
            Err(Error::NotAFilter(self.set.to_string()))
        }
    }
}

impl fmt::Debug for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filter{}", self.set)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.set)
    }
}

pub fn is_implicative_filter(algebra: &FiniteHilbertAlgebra, s: Subset) -> bool {
    if !s.is_subset(algebra.universe()) || !s.contains(algebra.top()) {
        return false;
    }
    s.iter().all(|a| {
        algebra
            .elements()
            .all(|b| !s.contains(algebra.imp(a, b)) || s.contains(b))
    })
}

/// Least filter containing `x`, by saturating `x ∪ {1}` under modus ponens.
pub fn fg_closure(algebra: &FiniteHilbertAlgebra, x: Subset) -> Filter {
    let mut s = x.intersection(algebra.universe()).with(algebra.top());
    loop {
        let mut next = s;
        for a in s {
            for b in algebra.elements() {
                if s.contains(algebra.imp(a, b)) {
                    next.insert(b);
                }
            }
        }
        if next == s {
            return Filter::unchecked(s, algebra.size());
        }
        s = next;
    }
}

/// Least set containing `start` and closed under `c ↦ b → c` for `b ∈ x`.
fn prefix_closure(algebra: &FiniteHilbertAlgebra, x: Subset, start: Element) -> Subset {
    let mut reached = Subset::singleton(start);
    let mut queue = vec![start];
    while let Some(c) = queue.pop() {
        for b in x {
            let d = algebra.imp(b, c);
            if reached.insert(d) {
                queue.push(d);
            }
        }
    }
    reached
}

/// Membership in `Fg(x)` decided from the nested-implication description:
/// `a = 1`, or `b1 → (b2 → (.. (bk → a)..)) = 1` for some `b1, .., bk ∈ x`.
///
/// The nestings of `a` are exactly the elements reachable from `a` by
/// prefixing members of `x`, so the search is a finite closure.
pub fn fg_formula_member(algebra: &FiniteHilbertAlgebra, x: Subset, a: Element) -> bool {
    let top = algebra.top();
    a == top || prefix_closure(algebra, x, a).contains(top)
}

/// Membership in `Fg(x ∪ {c})` decided as `a = 1` or
/// `b1 → (.. (bk → (c → a))..) = 1` for some `b1, .., bk ∈ x` with `k ≥ 0`.
pub fn fg_extra_formula_member(
    algebra: &FiniteHilbertAlgebra,
    x: Subset,
    c: Element,
    a: Element,
) -> bool {
    let top = algebra.top();
    a == top || prefix_closure(algebra, x, algebra.imp(c, a)).contains(top)
}

/// `Fg(x ∪ {c})`.
pub fn fg_with_extra(algebra: &FiniteHilbertAlgebra, x: Subset, c: Element) -> Filter {
    fg_closure(algebra, x.with(c))
}

/// The lattice `Fi(A)` of all implicative filters, ordered by inclusion.
///
/// Filters are stored sorted by bit pattern; indices into [`filters`] are
/// used as lattice elements throughout.
///
/// [`filters`]: FilterLattice::filters
#[derive(Clone, Debug)]
pub struct FilterLattice {
    algebra: FiniteHilbertAlgebra,
    filters: Vec<Filter>,
}

/// Enumerates `Fi(A)` with the default universe cap.
pub fn all_filters(algebra: &FiniteHilbertAlgebra) -> Result<FilterLattice> {
    all_filters_with_cap(algebra, DEFAULT_LATTICE_CAP)
}

pub fn all_filters_with_cap(algebra: &FiniteHilbertAlgebra, cap: usize) -> Result<FilterLattice> {
    let n = algebra.size();
    if n > cap {
        return Err(Error::SizeLimit { size: n, cap });
    }
    let mut sets = if n <= SUBSET_SCAN_LIMIT {
        filters_by_scan(algebra)
    } else {
        filters_by_search(algebra)
    };
    sets.sort_unstable();
    Ok(FilterLattice {
        algebra: algebra.clone(),
        filters: sets.into_iter().map(|s| Filter::unchecked(s, n)).collect(),
    })
}

/// Tests every subset that contains `1`, rejecting non-upsets first.
fn filters_by_scan(algebra: &FiniteHilbertAlgebra) -> Vec<Subset> {
    let n = algebra.size();
    let top = algebra.top();
    let ups: Vec<Subset> = algebra.elements().map(|a| algebra.up(a)).collect();
    (0..1u64 << n)
        .map(Subset::from_bits)
        .filter(|s| s.contains(top))
        .filter(|&s| s.iter().all(|a| ups[a].is_subset(s)))
        .filter(|&s| is_implicative_filter(algebra, s))
        .collect()
}

/// Breadth-first search from `{1}`, extending each filter by one element at
/// a time. Every filter is reached since it is the top of a chain of such
/// one-step extensions from `{1}`.
fn filters_by_search(algebra: &FiniteHilbertAlgebra) -> Vec<Subset> {
    let start = fg_closure(algebra, Subset::EMPTY).set();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for a in algebra.universe().difference(f) {
            let g = fg_closure(algebra, f.with(a)).set();
            if seen.insert(g) {
                queue.push_back(g);
            }
        }
    }
    seen.into_iter().collect()
}

impl FilterLattice {
    pub fn algebra(&self) -> &FiniteHilbertAlgebra {
        &self.algebra
    }

    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn get(&self, i: usize) -> Filter {
        self.filters[i]
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.filters.binary_search_by(|f| f.set.cmp(&s)).ok()
    }

    fn require(&self, f: &Filter) -> Result<usize> {
        if f.size != self.algebra.size() {
            return Err(Error::NotInLattice(f.to_string()));
        }
        self.index_of(f.set)
            .ok_or_else(|| Error::NotInLattice(self.algebra.format_subset(f.set)))
    }

    /// Index of `{1}`.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole universe.
    pub fn top(&self) -> usize {
        self.filters.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.filters[i].set.is_subset(self.filters[j].set)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        let s = self.filters[i].set.intersection(self.filters[j].set);
        self.index_of(s)
            .expect("filters are closed under intersection")
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        let s = fg_closure(
            &self.algebra,
            self.filters[i].set.union(self.filters[j].set),
        );
        self.index_of(s.set)
            .expect("generated filters lie in the lattice")
    }

    /// Pairs `(i, j)` where filter `j` covers filter `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        covering_pairs(&(0..self.len()).collect::<Vec<_>>(), |i, j| {
            self.filters[i].set.is_proper_subset(self.filters[j].set)
        })
    }

    /// Checks `G ∩ (H ∨ K) = (G ∩ H) ∨ (G ∩ K)` on every triple.
    pub fn is_distributive(&self) -> bool {
        let m = self.len();
        (0..m).all(|g| {
            (0..m).all(|h| {
                (0..m).all(|k| {
                    self.meet(g, self.join(h, k)) == self.join(self.meet(g, h), self.meet(g, k))
                })
            })
        })
    }

    /// Meet-irreducibility of filter `i`: not the maximum, and not the
    /// intersection of two strictly larger filters.
    ///
    /// In a finite lattice this is the same as the intersection of all strict
    /// supersets differing from the filter itself.
    pub fn is_meet_irreducible(&self, i: usize) -> bool {
        if i == self.top() {
            return false;
        }
        let f = self.filters[i].set;
        let above = self
            .filters
            .iter()
            .map(|g| g.set)
            .filter(|&g| f.is_proper_subset(g))
            .fold(self.algebra.universe(), Subset::intersection);
        above != f
    }

    /// Meet-primality of `f` checked pairwise: `f` is not the maximum, and
    /// `G ∩ H ⊆ f` forces `G ⊆ f` or `H ⊆ f`.
    pub fn is_meet_prime(&self, f: &Filter) -> Result<bool> {
        let i = self.require(f)?;
        if i == self.top() {
            return Ok(false);
        }
        let f = f.set;
        Ok(self.filters.iter().all(|g| {
            self.filters.iter().all(|h| {
                !g.set.intersection(h.set).is_subset(f) || g.set.is_subset(f) || h.set.is_subset(f)
            })
        }))
    }
}

/// See [`FilterLattice::is_meet_prime`].
pub fn is_meet_prime(lattice: &FilterLattice, f: &Filter) -> Result<bool> {
    lattice.is_meet_prime(f)
}

/// Hasse covering pairs of a strict order on `nodes`.
pub(crate) fn covering_pairs<F>(nodes: &[usize], lt: F) -> Vec<(usize, usize)>
where
    F: Fn(usize, usize) -> bool,
{
    let mut out = Vec::new();
    for &i in nodes {
        for &j in nodes {
            if lt(i, j) && !nodes.iter().any(|&k| lt(i, k) && lt(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The poset `A_*` of meet-irreducible filters.
#[derive(Clone, Debug)]
pub struct SpectrumPoset {
    lattice: FilterLattice,
    elements: Vec<usize>,
}

/// Extracts the spectrum of a filter lattice.
pub fn meet_irreducibles(lattice: &FilterLattice) -> SpectrumPoset {
    let elements = (0..lattice.len())
        .filter(|&i| lattice.is_meet_irreducible(i))
        .collect();
    SpectrumPoset {
        lattice: lattice.clone(),
        elements,
    }
}

impl SpectrumPoset {
    pub fn lattice(&self) -> &FilterLattice {
        &self.lattice
    }

    /// Lattice indices of the members, in lattice order.
    pub fn indices(&self) -> &[usize] {
        &self.elements
    }

    pub fn filters(&self) -> Vec<Filter> {
        self.elements.iter().map(|&i| self.lattice.get(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, f: &Filter) -> bool {
        f.size == self.lattice.algebra.size()
            && self
                .lattice
                .index_of(f.set)
                .is_some_and(|i| self.elements.contains(&i))
    }

    /// Covering pairs, as lattice indices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        covering_pairs(&self.elements, |i, j| {
            self.lattice.filters[i]
                .set
                .is_proper_subset(self.lattice.filters[j].set)
        })
    }

    /// A longest strictly increasing chain of members (lattice indices,
    /// smallest first). Among longest chains, the one found first scanning
    /// from the smallest filters.
    pub fn longest_chain(&self) -> Vec<usize> {
        let mut members = self.elements.clone();
        // A strict inclusion strictly increases the cardinality.
        members.sort_by_key(|&i| {
            (
                self.lattice.filters[i].set.len(),
                self.lattice.filters[i].set,
            )
        });
        let set = |i: usize| self.lattice.filters[i].set;
        // best[k]: length of the longest chain starting at members[k].
        let mut best = vec![1usize; members.len()];
        let mut next = vec![None; members.len()];
        for k in (0..members.len()).rev() {
            for l in k + 1..members.len() {
                if set(members[k]).is_proper_subset(set(members[l])) && best[l] + 1 > best[k] {
                    best[k] = best[l] + 1;
                    next[k] = Some(l);
                }
            }
        }
        let Some(start) = (0..members.len()).max_by_key(|&k| (best[k], std::cmp::Reverse(k)))
        else {
            return Vec::new();
        };
        let mut chain = vec![members[start]];
        let mut cur = start;
        while let Some(l) = next[cur] {
            chain.push(members[l]);
            cur = l;
        }
        chain
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        self.longest_chain().len()
    }

    pub fn is_chain(&self) -> bool {
        self.elements.iter().all(|&i| {
            self.elements
                .iter()
                .all(|&j| self.lattice.leq(i, j) || self.lattice.leq(j, i))
        })
    }

    pub fn is_antichain(&self) -> bool {
        self.elements.iter().all(|&i| {
            self.elements
                .iter()
                .all(|&j| i == j || !self.lattice.leq(i, j))
        })
    }
}

/// The spectrum `A_*` of an algebra.
pub fn spectrum(algebra: &FiniteHilbertAlgebra) -> Result<SpectrumPoset> {
    Ok(meet_irreducibles(&all_filters(algebra)?))
}

/// Number of elements of a longest chain in `A_*`; `A` has depth `≤ n`
/// exactly when this is at most `n`. The trivial algebra has depth 0.
pub fn depth(algebra: &FiniteHilbertAlgebra) -> Result<usize> {
    Ok(spectrum(algebra)?.height())
}

/// A meet-irreducible filter containing `f` and omitting `a`.
///
/// Among all candidates the choice is a maximal one under inclusion, ties
/// broken by least bit pattern.
pub fn separate(algebra: &FiniteHilbertAlgebra, f: &Filter, a: Element) -> Result<Filter> {
    let spectrum = spectrum(algebra)?;
    separate_in(&spectrum, f, a)
}

/// [`separate`] against a precomputed spectrum.
pub fn separate_in(spectrum: &SpectrumPoset, f: &Filter, a: Element) -> Result<Filter> {
    let algebra = spectrum.lattice.algebra();
    f.belongs_to(algebra)?;
    if a >= algebra.size() {
        return Err(Error::Precondition(format!("element {a} out of range")));
    }
    if f.contains(a) {
        return Err(Error::Precondition(format!(
            "{} belongs to {}",
            algebra.label(a),
            algebra.format_subset(f.set)
        )));
    }
    let candidates: Vec<Filter> = spectrum
        .filters()
        .into_iter()
        .filter(|g| f.is_subset(g) && !g.contains(a))
        .collect();
    candidates
        .iter()
        .filter(|g| !candidates.iter().any(|h| g.set.is_proper_subset(h.set)))
        .min_by_key(|g| g.set)
        .copied()
        .ok_or_else(|| {
            Error::InternalInvariant(format!(
                "no meet-irreducible filter separates {} from {}",
                algebra.format_subset(f.set),
                algebra.label(a)
            ))
        })
}

/// A meet-irreducible filter containing `a` and omitting `b`, for `a ≰ b`.
pub fn separate_elements(spectrum: &SpectrumPoset, a: Element, b: Element) -> Result<Filter> {
    let algebra = spectrum.lattice.algebra();
    if algebra.leq(a, b) {
        return Err(Error::Precondition(format!(
            "{} ≤ {}",
            algebra.label(a),
            algebra.label(b)
        )));
    }
    separate_in(spectrum, &Filter::principal(algebra, a), b)
}
