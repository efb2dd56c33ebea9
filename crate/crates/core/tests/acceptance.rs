//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits nonzero if any failed.
//!
//! ```text
//! cargo test -p hilbert-depth --test acceptance
//! ```

use std::process::ExitCode;
use std::time::Instant;

use hilbert_depth::depth::eval_d;
use hilbert_depth::enumerate::enumerate_up_to;
use hilbert_depth::filters::separate_elements;
use hilbert_depth::quotient::spectrum_transports;
use hilbert_depth::{
    all_filters, chain_from_counterexample, correspondence_check, depth_leq_via_identity,
    enumerate_hilbert, enumerate_posets, fg_closure, fg_extra_formula_member, fg_formula_member,
    fg_with_extra, heyting_from_poset, meet_irreducibles, reduct_depth_vs_poset, separate,
    spectrum, subalgebra_from_chain, validate, verify_main_theorem, Error, FiniteHilbertAlgebra,
    Subset,
};

/// Largest algebra size for the theorem, separation and proof checks.
const THEOREM_SIZE: usize = 5;
/// Largest `n` for `d_n`.
const N_MAX: usize = 4;
/// Largest algebra size for the generation, lattice and correspondence checks.
const LATTICE_SIZE: usize = 4;
/// Largest poset size for the Heyting check.
const POSET_SIZE: usize = 4;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u64 << n).map(Subset::from_bits)
}

fn algebras(max: usize) -> Result<Vec<FiniteHilbertAlgebra>, String> {
    enumerate_up_to(max).map_err(|e| e.to_string())
}

fn main_theorem() -> Outcome {
    let algs = algebras(THEOREM_SIZE)?;
    let mut pairs = 0;
    for (i, a) in algs.iter().enumerate() {
        let report = verify_main_theorem(a, N_MAX).map_err(|e| e.to_string())?;
        pairs += report.rows.len();
        if let Some(row) = report.rows.iter().find(|r| !r.agree()) {
            return Err(format!(
                "algebra #{i} (size {}, depth {}): n = {} has depth≤n = {} but d_n≈1 = {} {:?}",
                a.size(),
                report.depth,
                row.n,
                row.depth_leq,
                row.identity_holds,
                row.counterexample
            ));
        }
    }
    Ok(format!(
        "{} algebras of size ≤ {THEOREM_SIZE}, {pairs} (algebra, n) pairs, 0 disagreements",
        algs.len()
    ))
}

fn generation_oracles() -> Outcome {
    let algs = algebras(LATTICE_SIZE)?;
    let mut checks = 0usize;
    for a in &algs {
        for x in subsets(a.size()) {
            let closure = fg_closure(a, x);
            for e in a.elements() {
                checks += 1;
                ensure(fg_formula_member(a, x, e) == closure.contains(e), || {
                    format!("membership of {e} in Fg({x}) disagrees on {a:?}")
                })?;
            }
            for c in a.elements() {
                let extra = fg_with_extra(a, x, c);
                ensure(extra == fg_closure(a, x.with(c)), || {
                    format!("Fg({x} ∪ {{{c}}}) mismatch on {a:?}")
                })?;
                for e in a.elements() {
                    checks += 1;
                    ensure(
                        fg_extra_formula_member(a, x, c, e) == extra.contains(e),
                        || {
                            format!(
                                "extra-generator membership of {e} for X = {x}, c = {c} on {a:?}"
                            )
                        },
                    )?;
                }
            }
        }
    }
    Ok(format!(
        "{} algebras of size ≤ {LATTICE_SIZE}, {checks} membership checks agree",
        algs.len()
    ))
}

fn lattice_laws() -> Outcome {
    let algs = algebras(LATTICE_SIZE)?;
    for a in &algs {
        let l = all_filters(a).map_err(|e| e.to_string())?;
        ensure(l.is_distributive(), || {
            format!("Fi(A) not distributive for {a:?}")
        })?;
        let irreducible: Vec<Subset> = meet_irreducibles(&l)
            .filters()
            .iter()
            .map(|f| f.set())
            .collect();
        let mut prime = Vec::new();
        for f in l.filters() {
            if l.is_meet_prime(f).map_err(|e| e.to_string())? {
                prime.push(f.set());
            }
        }
        ensure(irreducible == prime, || {
            format!("meet-irreducible {irreducible:?} ≠ meet-prime {prime:?} for {a:?}")
        })?;
    }
    Ok(format!(
        "{} algebras: distributive, irreducible = prime",
        algs.len()
    ))
}

fn correspondence() -> Outcome {
    let algs = algebras(LATTICE_SIZE)?;
    let mut count = 0;
    for a in &algs {
        let l = all_filters(a).map_err(|e| e.to_string())?;
        for f in l.filters() {
            count += 1;
            let corr = correspondence_check(a, f).map_err(|e| e.to_string())?;
            ensure(corr.verified, || format!("h fails for F = {f} on {a:?}"))?;
            ensure(
                spectrum_transports(a, f).map_err(|e| e.to_string())?,
                || format!("meet-irreducibility does not transport for F = {f} on {a:?}"),
            )?;
        }
    }
    Ok(format!("{count} (algebra, filter) pairs verified"))
}

fn separation() -> Outcome {
    let algs = algebras(THEOREM_SIZE)?;
    let (mut filter_cases, mut order_cases) = (0, 0);
    for a in &algs {
        let sp = spectrum(a).map_err(|e| e.to_string())?;
        let members = sp.filters();
        for f in all_filters(a).map_err(|e| e.to_string())?.filters() {
            for e in a.universe().difference(f.set()) {
                filter_cases += 1;
                let g = separate(a, f, e).map_err(|err| err.to_string())?;
                ensure(sp.contains(&g) && f.is_subset(&g) && !g.contains(e), || {
                    format!("separate({f}, {e}) = {g} invalid on {a:?}")
                })?;
            }
        }
        for x in a.elements() {
            for y in a.elements().filter(|&y| !a.leq(x, y)) {
                order_cases += 1;
                ensure(
                    members.iter().any(|m| m.contains(x) && !m.contains(y)),
                    || format!("no spectrum member has {x} and omits {y} on {a:?}"),
                )?;
                let g = separate_elements(&sp, x, y).map_err(|e| e.to_string())?;
                ensure(g.contains(x) && !g.contains(y), || {
                    format!("separate_elements({x}, {y})")
                })?;
            }
        }
    }
    Ok(format!(
        "{filter_cases} filter cases, {order_cases} order cases"
    ))
}

fn proof_procedures() -> Outcome {
    let algs = algebras(THEOREM_SIZE)?;
    let mut runs = 0usize;
    for a in &algs {
        let top = a.top();
        for n in 0..=N_MAX {
            if depth_leq_via_identity(a, n).holds() {
                continue;
            }
            // Every failing assignment, not only the least one.
            let k = n + 1;
            let total = a.size().pow(k as u32);
            for code in 0..total {
                let mut vals = Vec::with_capacity(k);
                let mut c = code;
                for _ in 0..k {
                    vals.push(c % a.size());
                    c /= a.size();
                }
                if eval_d(a, &vals) == top {
                    continue;
                }
                runs += 1;
                let describe = |e: Error| format!("{e} on {a:?}, n = {n}, assignment {vals:?}");
                let chain = chain_from_counterexample(a, &vals, n).map_err(describe)?;
                ensure(chain.len() == n + 1, || {
                    format!("chain of length {}", chain.len())
                })?;
                let sub = subalgebra_from_chain(a, &chain).map_err(describe)?;
                let e = &sub.elements;
                ensure(e.len() == n + 1, || format!("subalgebra chain {e:?}"))?;
                ensure(!chain.filters[0].contains(e[n]), || "a_n ∈ F_0".into())?;
                for i in 0..=n {
                    ensure(eval_d(a, &e[..=i]) == e[i], || {
                        format!("d_{i} ≠ a_{i} on {e:?}")
                    })?;
                }
                ensure(eval_d(a, e) != top, || {
                    "round trip lost the counterexample".into()
                })?;
            }
        }
    }
    Ok(format!(
        "{runs} failing assignments turned into chains and back, no invariant errors"
    ))
}

fn heyting_corollary() -> Outcome {
    let mut count = 0;
    for size in 0..=POSET_SIZE {
        for p in enumerate_posets(size).map_err(|e| e.to_string())? {
            count += 1;
            let cmp = reduct_depth_vs_poset(&p).map_err(|e| e.to_string())?;
            ensure(cmp.agree(), || {
                format!(
                    "reduct depth {} vs longest chain {} for {p:?}",
                    cmp.reduct_depth, cmp.longest_chain
                )
            })?;
            let (h, reduct) = heyting_from_poset(&p).map_err(|e| e.to_string())?;
            let report =
                verify_main_theorem(&reduct, cmp.longest_chain + 1).map_err(|e| e.to_string())?;
            ensure(report.all_agree(), || {
                format!("main theorem disagrees on the reduct of {p:?}")
            })?;

            let fi: Vec<Subset> = all_filters(&reduct)
                .map_err(|e| e.to_string())?
                .filters()
                .iter()
                .map(|f| f.set())
                .collect();
            ensure(fi == h.lattice_filters(), || {
                format!("Fi(reduct) ≠ lattice filters for {p:?}")
            })?;
            let mut irreducibles: Vec<Subset> = spectrum(&reduct)
                .map_err(|e| e.to_string())?
                .filters()
                .iter()
                .map(|f| f.set())
                .collect();
            irreducibles.sort_unstable();
            ensure(irreducibles == h.prime_filters(), || {
                format!("spectrum ≠ prime filters for {p:?}")
            })?;

            if reduct.size() <= THEOREM_SIZE {
                let listed = enumerate_hilbert(reduct.size()).map_err(|e| e.to_string())?;
                ensure(
                    listed.iter().any(|b| b.find_isomorphism(&reduct).is_some()),
                    || format!("reduct of {p:?} missing from the enumeration"),
                )?;
            }
        }
    }
    Ok(format!("{count} posets of size ≤ {POSET_SIZE}"))
}

/// Isomorphism classes among all `n^(n²)` tables.
fn classes_by_table_scan(n: usize) -> Vec<FiniteHilbertAlgebra> {
    let mut classes: Vec<FiniteHilbertAlgebra> = Vec::new();
    for code in 0..(n as u64).pow((n * n) as u32) {
        let mut c = code;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = (c % n as u64) as usize;
                        c /= n as u64;
                        v
                    })
                    .collect()
            })
            .collect();
        if validate(&table).is_ok_and(|r| r.is_ok()) {
            let alg = FiniteHilbertAlgebra::new(&table).unwrap();
            if !classes.iter().any(|k| k.find_isomorphism(&alg).is_some()) {
                classes.push(alg);
            }
        }
    }
    classes
}

fn enumeration_sanity() -> Outcome {
    for (n, expected) in [(1, 1), (2, 1), (3, 2)] {
        let got = enumerate_hilbert(n).map_err(|e| e.to_string())?.len();
        let oracle = classes_by_table_scan(n).len();
        ensure(got == expected && oracle == expected, || {
            format!("size {n}: enumerated {got}, table scan {oracle}, expected {expected}")
        })?;
    }
    let mut sizes = Vec::new();
    for n in 1..=THEOREM_SIZE {
        let algs = enumerate_hilbert(n).map_err(|e| e.to_string())?;
        for (i, a) in algs.iter().enumerate() {
            ensure(validate(&a.table()).is_ok_and(|r| r.is_ok()), || {
                format!("size {n} #{i} invalid")
            })?;
            for (j, b) in algs.iter().enumerate().skip(i + 1) {
                ensure(a.find_isomorphism(b).is_none(), || {
                    format!("size {n}: #{i} ≅ #{j}")
                })?;
            }
        }
        sizes.push(algs.len());
    }
    Ok(format!("classes by size 1..={THEOREM_SIZE}: {sizes:?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("main theorem, exhaustive", main_theorem),
        ("filter-generation oracle equivalence", generation_oracles),
        ("lattice laws", lattice_laws),
        ("correspondence", correspondence),
        ("separation", separation),
        ("proof procedures", proof_procedures),
        ("Heyting corollary", heyting_corollary),
        ("enumeration sanity", enumeration_sanity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
