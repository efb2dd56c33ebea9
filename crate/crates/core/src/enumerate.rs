//! Exhaustive generation of small Hilbert algebras, one per isomorphism
//! class, and Heyting algebras of upsets of finite posets.

use crate::algebra::{validate, FiniteHilbertAlgebra};
use crate::error::{Error, Result};
use crate::filters::depth;
use crate::subset::{Subset, MAX_UNIVERSE};

/// Largest size [`enumerate_hilbert`] accepts unless overridden.
pub const DEFAULT_ENUMERATION_CAP: usize = 5;

/// Environment variable read by [`enumeration_cap_from_env`].
pub const SIZE_CAP_ENV: &str = "HILBERT_SIZE_CAP";

/// The enumeration cap, taken from `HILBERT_SIZE_CAP` when set to a number.
pub fn enumeration_cap_from_env() -> usize {
    std::env::var(SIZE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

/// All Hilbert algebras with `n` elements up to isomorphism, with the
/// default size cap.
pub fn enumerate_hilbert(n: usize) -> Result<Vec<FiniteHilbertAlgebra>> {
    enumerate_hilbert_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

/// All Hilbert algebras with `n` elements up to isomorphism.
///
/// Each class is represented by its canonical table: `1` is the last element
/// and the row-major table is lexicographically least among all relabelings
/// fixing `1`. Output is sorted by that table.
pub fn enumerate_hilbert_with_cap(n: usize, cap: usize) -> Result<Vec<FiniteHilbertAlgebra>> {
    if n == 0 {
        return Err(Error::Precondition(
            "algebras have at least one element".into(),
        ));
    }
    if n > cap || n > MAX_UNIVERSE {
        return Err(Error::SizeLimit {
            size: n,
            cap: cap.min(MAX_UNIVERSE),
        });
    }
    let mut search = Search::new(n);
    search.run(0);
    let mut tables = search.found;
    tables.sort_unstable();
    tables
        .iter()
        .map(|t| {
            let rows: Vec<Vec<usize>> = t
                .chunks(n)
                .map(|r| r.iter().map(|&v| v as usize).collect())
                .collect();
            FiniteHilbertAlgebra::new(&rows)
        })
        .collect()
}

/// All Hilbert algebras with at most `n` elements, smallest first.
pub fn enumerate_up_to(n: usize) -> Result<Vec<FiniteHilbertAlgebra>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_hilbert(k)?);
    }
    Ok(out)
}

const UNSET: u8 = u8::MAX;

struct Search {
    n: usize,
    top: u8,
    table: Vec<u8>,
    /// Cells `(a, b)` left open once `x → x`, `x → 1` and `1 → x` are fixed.
    free: Vec<(usize, usize)>,
    perms: Vec<Vec<usize>>,
    found: Vec<Vec<u8>>,
}

impl Search {
    fn new(n: usize) -> Self {
        let top = n - 1;
        let mut table = vec![UNSET; n * n];
        let mut free = Vec::new();
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = if a == b || b == top {
                    top as u8
                } else if a == top {
                    b as u8
                } else {
                    free.push((a, b));
                    UNSET
                };
            }
        }
        let mut perms = Vec::new();
        permutations(&mut (0..top).collect(), 0, &mut perms);
        for p in &mut perms {
            p.push(top);
        }
        Search {
            n,
            top: top as u8,
            table,
            free,
            perms,
            found: Vec::new(),
        }
    }

    fn run(&mut self, k: usize) {
        let Some(&(a, b)) = self.free.get(k) else {
            if self.is_canonical() {
                debug_assert!(validate(&self.rows()).unwrap().is_ok());
                self.found.push(self.table.clone());
            }
            return;
        };
        for v in 0..self.n as u8 {
            // a → b = a forces a = 1, and a → b = 1 means a ≤ b, which the
            // antisymmetry and order checks handle.
            if v as usize == a {
                continue;
            }
            self.table[a * self.n + b] = v;
            if self.consistent() {
                self.run(k + 1);
            }
        }
        self.table[a * self.n + b] = UNSET;
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    #[inline]
    fn get(&self, a: u8, b: u8) -> u8 {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            self.table[a as usize * self.n + b as usize]
        }
    }

    /// Checks every axiom instance whose cells are all known, together with
    /// a few identities every Hilbert algebra satisfies.
    fn consistent(&self) -> bool {
        let n = self.n as u8;
        let top = self.top;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                if ab == UNSET {
                    continue;
                }
                // antisymmetry
                if a != b && ab == top && self.get(b, a) == top {
                    return false;
                }
                // K, written as b ≤ a → b
                let k = self.get(b, ab);
                if k != UNSET && k != top {
                    return false;
                }
                // a → (a → b) = a → b
                let aab = self.get(a, ab);
                if aab != UNSET && aab != ab {
                    return false;
                }
                for c in 0..n {
                    let ac = self.get(a, c);
                    let bc = self.get(b, c);
                    // exchange: a → (b → c) = b → (a → c)
                    let l = self.get(a, bc);
                    let r = self.get(b, ac);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                    // S
                    let s = self.get(l, self.get(ab, ac));
                    if s != UNSET && s != top {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn is_canonical(&self) -> bool {
        let n = self.n;
        'perms: for p in &self.perms {
            // Compare the relabeled table cell by cell in row-major order.
            // Relabeled cell (p[a], p[b]) holds p[t[a][b]]; iterate target
            // cells through the inverse permutation.
            let mut inv = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            for x in 0..n {
                for y in 0..n {
                    let relabeled = p[self.table[inv[x] * n + inv[y]] as usize] as u8;
                    let current = self.table[x * n + y];
                    if relabeled < current {
                        return false;
                    }
                    if relabeled > current {
                        continue 'perms;
                    }
                }
            }
        }
        true
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// A finite partial order on `{0, .., size-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    /// `up[i] = {j : i ≤ j}`.
    up: Vec<Subset>,
}

impl Poset {
    /// Builds a poset from its order matrix, `leq[i][j]` meaning `i ≤ j`.
    pub fn new(leq: &[Vec<bool>]) -> Result<Poset> {
        let n = leq.len();
        if n > MAX_UNIVERSE {
            return Err(Error::SizeLimit {
                size: n,
                cap: MAX_UNIVERSE,
            });
        }
        if leq.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("order matrix is not square".into()));
        }
        let up: Vec<Subset> = leq
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &x)| x)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let poset = Poset { up };
        for i in 0..n {
            if !poset.leq(i, i) {
                return Err(Error::Precondition(format!(
                    "order is not reflexive at {i}"
                )));
            }
            for j in 0..n {
                if i != j && poset.leq(i, j) && poset.leq(j, i) {
                    return Err(Error::Precondition(format!(
                        "order is not antisymmetric at ({i}, {j})"
                    )));
                }
                if poset.leq(i, j) && !poset.up[j].is_subset(poset.up[i]) {
                    return Err(Error::Precondition(format!(
                        "order is not transitive through ({i}, {j})"
                    )));
                }
            }
        }
        Ok(poset)
    }

    /// The reflexive-transitive closure of `pairs` (`(i, j)` meaning
    /// `i ≤ j`) on `n` points.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::Precondition(format!("pair ({i}, {j}) out of range")));
            }
            leq[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        Poset::new(&leq)
    }

    /// `0 < 1 < .. < k-1`.
    pub fn chain(k: usize) -> Poset {
        let pairs: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Poset::from_pairs(k, &pairs).expect("chains are posets")
    }

    pub fn antichain(k: usize) -> Poset {
        Poset::from_pairs(k, &[]).expect("antichains are posets")
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn up(&self, i: usize) -> Subset {
        self.up[i]
    }

    pub fn is_upset(&self, s: Subset) -> bool {
        s.iter().all(|i| self.up[i].is_subset(s))
    }

    /// All upsets, sorted by bit pattern.
    pub fn upsets(&self) -> Vec<Subset> {
        // Saturate from the empty set by adding principal upsets.
        let mut found = vec![Subset::EMPTY];
        let mut i = 0;
        while i < found.len() {
            let u = found[i];
            for x in 0..self.size() {
                let v = u.union(self.up[x]);
                if !found.contains(&v) {
                    found.push(v);
                }
            }
            i += 1;
        }
        found.sort_unstable();
        found
    }

    /// Number of elements in a longest chain; 0 for the empty poset.
    pub fn longest_chain(&self) -> usize {
        let n = self.size();
        let mut memo = vec![0usize; n];
        // Process elements from the top down: larger up-sets are never
        // above smaller ones, so sort by up-set size.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.up[i].len());
        for &i in &order {
            memo[i] = 1 + self.up[i]
                .iter()
                .filter(|&j| j != i)
                .map(|j| memo[j])
                .max()
                .unwrap_or(0);
        }
        memo.into_iter().max().unwrap_or(0)
    }

    fn relabeled(&self, perm: &[usize]) -> Vec<u64> {
        let mut up = vec![0u64; self.size()];
        for (i, s) in self.up.iter().enumerate() {
            up[perm[i]] = s.iter().map(|j| perm[j]).collect::<Subset>().bits();
        }
        up
    }

    fn canonical_key(&self, perms: &[Vec<usize>]) -> Vec<u64> {
        perms
            .iter()
            .map(|p| self.relabeled(p))
            .min()
            .unwrap_or_default()
    }
}

/// All posets on `n` points up to isomorphism.
///
/// Every poset has a natural labeling (`i < j` in the order implies `i < j`
/// as integers), so only upper-triangular relations are searched.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    if n > 6 {
        return Err(Error::SizeLimit { size: n, cap: 6 });
    }
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut perms);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << slots.len() {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in slots.iter().enumerate() {
            leq[i][j] = mask >> k & 1 == 1;
        }
        let Ok(p) = Poset::new(&leq) else { continue };
        if seen.insert(p.canonical_key(&perms)) {
            out.push(p);
        }
    }
    Ok(out)
}

/// The Heyting algebra of upsets of a poset.
#[derive(Clone, Debug)]
pub struct HeytingAlgebra {
    poset: Poset,
    /// Upsets, sorted by bit pattern: the empty upset is first and the whole
    /// poset last.
    carrier: Vec<Subset>,
    arrow: Vec<Vec<usize>>,
}

/// Builds the upset algebra of `poset` with `U → V = {x : ↑x ∩ U ⊆ V}`, and
/// its `→`-reduct.
pub fn heyting_from_poset(poset: &Poset) -> Result<(HeytingAlgebra, FiniteHilbertAlgebra)> {
    let carrier = poset.upsets();
    if carrier.len() > MAX_UNIVERSE {
        return Err(Error::SizeLimit {
            size: carrier.len(),
            cap: MAX_UNIVERSE,
        });
    }
    let index = |s: Subset| carrier.binary_search(&s).expect("result is an upset");
    let arrow: Vec<Vec<usize>> = carrier
        .iter()
        .map(|&u| {
            carrier
                .iter()
                .map(|&v| {
                    let w: Subset = (0..poset.size())
                        .filter(|&x| poset.up(x).intersection(u).is_subset(v))
                        .collect();
                    index(w)
                })
                .collect()
        })
        .collect();
    let reduct = FiniteHilbertAlgebra::new(&arrow)?;
    let heyting = HeytingAlgebra {
        poset: poset.clone(),
        carrier,
        arrow,
    };
    Ok((heyting, reduct))
}

impl HeytingAlgebra {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn carrier(&self) -> &[Subset] {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn top(&self) -> usize {
        self.carrier.len() - 1
    }

    pub fn bottom(&self) -> usize {
        0
    }

    fn index(&self, s: Subset) -> usize {
        self.carrier
            .binary_search(&s)
            .expect("upsets are closed under ∩ and ∪")
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.index(self.carrier[a].intersection(self.carrier[b]))
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.index(self.carrier[a].union(self.carrier[b]))
    }

    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.arrow[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.carrier[a].is_subset(self.carrier[b])
    }

    /// `a ∧ b ≤ c` iff `a ≤ b → c`, for all `a, b, c`.
    pub fn is_residuated(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| self.leq(self.meet(a, b), c) == self.leq(a, self.imp(b, c)))
            })
        })
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    /// Lattice filters: nonempty upsets closed under `∧`, as sets of carrier
    /// indices, sorted by bit pattern.
    pub fn lattice_filters(&self) -> Vec<Subset> {
        let n = self.size();
        let is_filter = |f: Subset| {
            !f.is_empty()
                && f.iter()
                    .all(|a| (0..n).all(|b| !self.leq(a, b) || f.contains(b)))
                && f.iter()
                    .all(|a| f.iter().all(|b| f.contains(self.meet(a, b))))
        };
        // Every lattice filter of a finite lattice is principal.
        let mut out: Vec<Subset> = (0..n)
            .map(|a| (0..n).filter(|&b| self.leq(a, b)).collect::<Subset>())
            .filter(|&f| is_filter(f))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Proper lattice filters `F` with `a ∨ b ∈ F` only if `a ∈ F` or `b ∈ F`.
    pub fn prime_filters(&self) -> Vec<Subset> {
        let n = self.size();
        let full = Subset::full(n);
        self.lattice_filters()
            .into_iter()
            .filter(|&f| f != full)
            .filter(|&f| {
                (0..n).all(|a| {
                    (0..n).all(|b| !f.contains(self.join(a, b)) || f.contains(a) || f.contains(b))
                })
            })
            .collect()
    }
}

/// Depth of an upset algebra's `→`-reduct against the height of its poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PosetDepthComparison {
    pub reduct_depth: usize,
    pub longest_chain: usize,
}

impl PosetDepthComparison {
    pub fn agree(&self) -> bool {
        self.reduct_depth == self.longest_chain
    }
}

pub fn reduct_depth_vs_poset(poset: &Poset) -> Result<PosetDepthComparison> {
    let (_, reduct) = heyting_from_poset(poset)?;
    Ok(PosetDepthComparison {
        reduct_depth: depth(&reduct)?,
        longest_chain: poset.longest_chain(),
    })
}
