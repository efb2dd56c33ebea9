//! Finite Hilbert algebras given by their implication table.
//!
//! An algebra on `{0, .., n-1}` is accepted when its table satisfies
//!
//! * (K) `a → (b → a) = 1`,
//! * (S) `(a → (b → c)) → ((a → b) → (a → c)) = 1`,
//! * antisymmetry: `a → b = 1` and `b → a = 1` imply `a = b`,
//!
//! where `1` is the common value of `a → a`. These axioms describe exactly
//! the `→`-subreducts of Heyting algebras, and they can be checked on a finite
//! table by exhausting all instances.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_UNIVERSE};

/// An element of a finite algebra, identified by its index.
pub type Element = usize;

/// A single failed axiom instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `a → a` and `b → b` differ, so there is no constant `1`.
    NoConstantTop { a: Element, b: Element },
    /// `a → (b → a) ≠ 1`.
    K { a: Element, b: Element },
    /// `(a → (b → c)) → ((a → b) → (a → c)) ≠ 1`.
    S { a: Element, b: Element, c: Element },
    /// `a → b = 1 = b → a` with `a ≠ b`.
    Antisymmetry { a: Element, b: Element },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NoConstantTop { a, b } => {
                write!(f, "(top) {a}→{a} differs from {b}→{b}")
            }
            Violation::K { a, b } => write!(f, "(K) fails at ({a}, {b})"),
            Violation::S { a, b, c } => write!(f, "(S) fails at ({a}, {b}, {c})"),
            Violation::Antisymmetry { a, b } => {
                write!(
                    f,
                    "(antisym) {a} and {b} are distinct but mutually below each other"
                )
            }
        }
    }
}

/// Outcome of [`validate`]: the list of violated axiom instances.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub size: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "valid Hilbert algebra, size {}", self.size);
        }
        write!(f, "{} axiom violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(8) {
            write!(f, "; {v}")?;
        }
        if self.violations.len() > 8 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}

fn check_shape<R: AsRef<[usize]>>(table: &[R]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Shape("the universe must be nonempty".into()));
    }
    if n > MAX_UNIVERSE {
        return Err(Error::SizeLimit {
            size: n,
            cap: MAX_UNIVERSE,
        });
    }
    for (row, r) in table.iter().enumerate() {
        let r = r.as_ref();
        if r.len() != n {
            return Err(Error::Shape(format!(
                "row {row} has {} entries, expected {n}",
                r.len()
            )));
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::Range {
                row,
                col,
                value,
                size: n,
            });
        }
    }
    Ok(n)
}

/// Checks a raw implication table against the axioms, listing every failed
/// instance.
pub fn validate<R: AsRef<[usize]>>(table: &[R]) -> Result<ValidationReport> {
    let n = check_shape(table)?;
    let imp = |a: usize, b: usize| table[a].as_ref()[b];
    let mut violations = Vec::new();

    let top = imp(0, 0);
    for a in 1..n {
        if imp(a, a) != top {
            violations.push(Violation::NoConstantTop { a: 0, b: a });
        }
    }
    if !violations.is_empty() {
        // Without a constant 1 the remaining axioms are not meaningful.
        return Ok(ValidationReport {
            size: n,
            violations,
        });
    }

    for a in 0..n {
        for b in 0..n {
            if imp(a, imp(b, a)) != top {
                violations.push(Violation::K { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = imp(a, b);
            for c in 0..n {
                let lhs = imp(a, imp(b, c));
                let rhs = imp(ab, imp(a, c));
                if imp(lhs, rhs) != top {
                    violations.push(Violation::S { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if imp(a, b) == top && imp(b, a) == top {
                violations.push(Violation::Antisymmetry { a, b });
            }
        }
    }
    Ok(ValidationReport {
        size: n,
        violations,
    })
}

/// A finite Hilbert algebra on `{0, .., size-1}`.
///
/// Values are immutable once constructed and always satisfy [`validate`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteHilbertAlgebra {
    size: usize,
    arrow: Vec<u8>,
    top: Element,
    names: Option<Vec<String>>,
}

impl FiniteHilbertAlgebra {
    /// Builds an algebra from a row-major table, `table[a][b] = a → b`.
    pub fn new<R: AsRef<[usize]>>(table: &[R]) -> Result<Self> {
        let report = validate(table)?;
        if !report.is_ok() {
            return Err(Error::Invalid(report));
        }
        let size = table.len();
        let arrow = table
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&v| v as u8))
            .collect();
        Ok(FiniteHilbertAlgebra {
            size,
            arrow,
            top: table[0].as_ref()[0],
            names: None,
        })
    }

    /// Attaches display labels, one per element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size {
            return Err(Error::Shape(format!(
                "{} names given for {} elements",
                names.len(),
                self.size
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    /// The one-element algebra.
    pub fn trivial() -> Self {
        FiniteHilbertAlgebra::new(&[[0]]).expect("trivial algebra is valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The constant `1`.
    pub fn top(&self) -> Element {
        self.top
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `a`: its name when present, otherwise its index.
    pub fn label(&self, a: Element) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    /// Looks an element up by name, falling back to a numeric index.
    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == label) {
                return Some(i);
            }
        }
        label.parse().ok().filter(|&i| i < self.size)
    }

    pub fn format_subset(&self, s: Subset) -> String {
        let parts: Vec<String> = s.iter().map(|a| self.label(a)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// `a → b`.
    #[inline]
    pub fn imp(&self, a: Element, b: Element) -> Element {
        self.arrow[a * self.size + b] as Element
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.imp(a, b)).collect())
            .collect()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    pub fn universe(&self) -> Subset {
        Subset::full(self.size)
    }

    /// `a ≤ b` iff `a → b = 1`.
    #[inline]
    pub fn leq(&self, a: Element, b: Element) -> bool {
        self.imp(a, b) == self.top
    }

    pub fn lt(&self, a: Element, b: Element) -> bool {
        a != b && self.leq(a, b)
    }

    /// The principal upset `↑a`.
    pub fn up(&self, a: Element) -> Subset {
        self.elements().filter(|&b| self.leq(a, b)).collect()
    }

    /// Whether `s` is closed upwards under `≤`.
    pub fn is_upset(&self, s: Subset) -> bool {
        s.iter().all(|a| self.up(a).is_subset(s))
    }

    /// Least subuniverse containing `x` and `1`.
    pub fn generated_subuniverse(&self, x: Subset) -> Subset {
        let mut s = x.with(self.top);
        loop {
            let mut next = s;
            for a in s {
                for b in s {
                    next.insert(self.imp(a, b));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    pub fn is_subuniverse(&self, s: Subset) -> bool {
        s.contains(self.top)
            && s.iter()
                .all(|a| s.iter().all(|b| s.contains(self.imp(a, b))))
    }

    /// Searches for an isomorphism `h: self → other`, returned as the image
    /// vector `h[a]`. Images are tried in increasing order, so the result is
    /// the lexicographically least isomorphism.
    pub fn find_isomorphism(&self, other: &FiniteHilbertAlgebra) -> Option<Vec<Element>> {
        if self.size != other.size {
            return None;
        }
        let n = self.size;
        // Cheap invariant: sizes of principal upsets must match as multisets.
        let profile = |alg: &FiniteHilbertAlgebra| {
            let mut p: Vec<usize> = alg.elements().map(|a| alg.up(a).len()).collect();
            p.sort_unstable();
            p
        };
        if profile(self) != profile(other) {
            return None;
        }

        let mut h = vec![usize::MAX; n];
        let mut used = Subset::EMPTY;
        h[self.top] = other.top;
        used.insert(other.top);
        let order: Vec<Element> = self.elements().filter(|&a| a != self.top).collect();
        if self.extend_isomorphism(other, &order, 0, &mut h, &mut used) {
            Some(h)
        } else {
            None
        }
    }

    fn extend_isomorphism(
        &self,
        other: &FiniteHilbertAlgebra,
        order: &[Element],
        depth: usize,
        h: &mut Vec<Element>,
        used: &mut Subset,
    ) -> bool {
        let Some(&a) = order.get(depth) else {
            return true;
        };
        for image in other.elements() {
            if used.contains(image) {
                continue;
            }
            h[a] = image;
            if self.consistent_with(other, h, a) {
                used.insert(image);
                if self.extend_isomorphism(other, order, depth + 1, h, used) {
                    return true;
                }
                used.remove(image);
            }
        }
        h[a] = usize::MAX;
        false
    }

    /// Checks `h(x → y) = h(x) → h(y)` on every pair involving `a` whose
    /// images are all known.
    fn consistent_with(&self, other: &FiniteHilbertAlgebra, h: &[Element], a: Element) -> bool {
        let known = |x: Element| h[x] != usize::MAX;
        for b in self.elements().filter(|&b| known(b)) {
            for (x, y) in [(a, b), (b, a)] {
                let z = self.imp(x, y);
                let want = other.imp(h[x], h[y]);
                if known(z) {
                    if h[z] != want {
                        return false;
                    }
                } else if h.contains(&want) {
                    // `want` is already the image of something other than z.
                    return false;
                }
            }
        }
        true
    }

    /// Relabels the universe: element `a` becomes `perm[a]`.
    pub fn permuted(&self, perm: &[Element]) -> Result<Self> {
        let n = self.size;
        let seen: Subset = perm.iter().copied().collect();
        if perm.len() != n || seen != self.universe() {
            return Err(Error::Precondition(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.imp(a, b)];
            }
        }
        let mut alg = FiniteHilbertAlgebra::new(&table)?;
        if let Some(names) = &self.names {
            let mut renamed = vec![String::new(); n];
            for a in 0..n {
                renamed[perm[a]] = names[a].clone();
            }
            alg.names = Some(renamed);
        }
        Ok(alg)
    }
}

impl fmt::Debug for FiniteHilbertAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteHilbertAlgebra")
            .field("size", &self.size)
            .field("top", &self.top)
            .field("arrow", &self.table())
            .finish()
    }
}

/// The chain `a_0 < a_1 < .. < a_{m-1} < 1` with `a_i → a_j = a_j` for
/// `i > j`. Element `a_i` has index `i` and `1` has index `m`.
///
/// # Panics
///
/// If `m == 0` or `m >= 64`.
pub fn chain_algebra(m: usize) -> FiniteHilbertAlgebra {
    assert!(
        (1..MAX_UNIVERSE).contains(&m),
        "chain length {m} out of range"
    );
    let n = m + 1;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| if i <= j { m } else { j }).collect())
        .collect();
    let names = (0..m)
        .map(|i| format!("a{i}"))
        .chain(["1".into()])
        .collect();
    FiniteHilbertAlgebra::new(&table)
        .and_then(|a| a.with_names(names))
        .expect("chain tables are Hilbert algebras")
}
