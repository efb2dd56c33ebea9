//! Brute-force oracles checked against the library on small algebras.
//!
//! Nothing here calls the code path it is checking: filters are found by
//! scanning subsets with a hand-written closure test, generation by explicit
//! nesting sequences, and algebras by scanning whole tables.

use hilbert_depth::enumerate::enumerate_up_to;
use hilbert_depth::{
    all_filters, depth, enumerate_hilbert, fg_closure, fg_formula_member, meet_irreducibles,
    validate, FiniteHilbertAlgebra, Subset,
};

fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u64 << n).map(Subset::from_bits)
}

fn is_filter_oracle(a: &FiniteHilbertAlgebra, s: Subset) -> bool {
    let top = a.top();
    if !s.contains(top) {
        return false;
    }
    for x in 0..a.size() {
        for y in 0..a.size() {
            if s.contains(x) && s.contains(a.imp(x, y)) && !s.contains(y) {
                return false;
            }
        }
    }
    true
}

fn filters_oracle(a: &FiniteHilbertAlgebra) -> Vec<Subset> {
    subsets(a.size())
        .filter(|&s| is_filter_oracle(a, s))
        .collect()
}

/// Every nesting `b1 → (b2 → .. (bk → a))` with `k <= max_len`.
fn nested_reaches_top(a: &FiniteHilbertAlgebra, x: Subset, target: usize, max_len: usize) -> bool {
    let xs: Vec<usize> = x.iter().collect();
    let mut frontier = vec![target];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &c in &frontier {
            for &b in &xs {
                next.push(a.imp(b, c));
            }
        }
        if next.contains(&a.top()) {
            return true;
        }
        next.sort_unstable();
        next.dedup();
        frontier = next;
    }
    false
}

#[test]
fn filter_lattice_matches_subset_scan() {
    for a in enumerate_up_to(5).unwrap() {
        let lib: Vec<Subset> = all_filters(&a)
            .unwrap()
            .filters()
            .iter()
            .map(|f| f.set())
            .collect();
        assert_eq!(lib, filters_oracle(&a), "{a:?}");
    }
}

#[test]
fn closure_is_least_filter_above() {
    for a in enumerate_up_to(4).unwrap() {
        let all = filters_oracle(&a);
        for x in subsets(a.size()) {
            let least = all
                .iter()
                .filter(|f| x.is_subset(**f))
                .fold(a.universe(), |acc, f| acc.intersection(*f));
            assert_eq!(fg_closure(&a, x).set(), least);
        }
    }
}

#[test]
fn formula_membership_matches_explicit_nestings() {
    for a in enumerate_up_to(4).unwrap() {
        for x in subsets(a.size()) {
            for e in a.elements() {
                let oracle = e == a.top() || nested_reaches_top(&a, x, e, a.size() + 1);
                assert_eq!(fg_formula_member(&a, x, e), oracle);
            }
        }
    }
}

/// Meet-irreducible by the pairwise definition, longest chain by scanning
/// all subsets of the spectrum.
fn depth_oracle(a: &FiniteHilbertAlgebra) -> usize {
    let fs = filters_oracle(a);
    let full = a.universe();
    let irreducibles: Vec<Subset> = fs
        .iter()
        .copied()
        .filter(|&f| f != full)
        .filter(|&f| {
            !fs.iter().any(|&g| {
                fs.iter().any(|&h| {
                    f.is_proper_subset(g) && f.is_proper_subset(h) && g.intersection(h) == f
                })
            })
        })
        .collect();
    let mut best = 0;
    for pick in 0u64..1 << irreducibles.len() {
        let chosen: Vec<Subset> = (0..irreducibles.len())
            .filter(|i| pick >> i & 1 == 1)
            .map(|i| irreducibles[i])
            .collect();
        let is_chain = chosen
            .iter()
            .all(|p| chosen.iter().all(|q| p.is_subset(*q) || q.is_subset(*p)));
        if is_chain {
            best = best.max(chosen.len());
        }
    }
    best
}

#[test]
fn depth_matches_oracle() {
    for a in enumerate_up_to(5).unwrap() {
        assert_eq!(depth(&a).unwrap(), depth_oracle(&a), "{a:?}");
    }
}

#[test]
fn spectrum_sizes_on_samples() {
    let fork = FiniteHilbertAlgebra::new(&[[2, 1, 2], [0, 2, 2], [0, 1, 2]]).unwrap();
    let l = all_filters(&fork).unwrap();
    assert_eq!(l.len(), 4);
    assert_eq!(meet_irreducibles(&l).len(), 2);
}

/// Isomorphism classes of valid tables, found by scanning tables and
/// grouping with `find_isomorphism`. `forced` fixes `1 = n-1` together with
/// `x → x = 1`, `x → 1 = 1` and `1 → x = x`, leaving only the other cells.
fn classes_by_table_scan(n: usize, forced: bool) -> Vec<FiniteHilbertAlgebra> {
    let top = n - 1;
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !forced || (a != b && a != top && b != top))
        .collect();
    let mut classes: Vec<FiniteHilbertAlgebra> = Vec::new();
    let total = (n as u64).pow(cells.len() as u32);
    for code in 0..total {
        let mut table = vec![vec![0usize; n]; n];
        if forced {
            for (a, row) in table.iter_mut().enumerate() {
                for (b, v) in row.iter_mut().enumerate() {
                    *v = if a == b || b == top { top } else { b };
                }
            }
        }
        let mut c = code;
        for &(a, b) in &cells {
            table[a][b] = (c % n as u64) as usize;
            c /= n as u64;
        }
        if !validate(&table).unwrap().is_ok() {
            continue;
        }
        let alg = FiniteHilbertAlgebra::new(&table).unwrap();
        if !classes.iter().any(|k| k.find_isomorphism(&alg).is_some()) {
            classes.push(alg);
        }
    }
    classes
}

#[test]
fn enumeration_matches_full_table_scan() {
    for n in 1..=3 {
        let oracle = classes_by_table_scan(n, false);
        let lib = enumerate_hilbert(n).unwrap();
        assert_eq!(lib.len(), oracle.len(), "size {n}");
        for k in &oracle {
            assert!(lib.iter().any(|a| a.find_isomorphism(k).is_some()));
        }
    }
}

#[test]
fn enumeration_matches_forced_table_scan_at_four() {
    let oracle = classes_by_table_scan(4, true);
    let lib = enumerate_hilbert(4).unwrap();
    assert_eq!(oracle.len(), 6);
    assert_eq!(lib.len(), 6);
    for k in &oracle {
        assert!(lib.iter().any(|a| a.find_isomorphism(k).is_some()));
    }
}
