//! Finite inverse semigroups stored as dense multiplication tables.
//!
//! Elements are the indices `0..len()`. Every table is validated eagerly when
//! the semigroup is built: associativity, existence and uniqueness of inverses
//! and commutation of idempotents are all checked exhaustively, and a failure
//! carries a witness.

use crate::error::{Error, InverseFailure, Result};

/// Default bound on the number of elements any builder may produce.
pub const DEFAULT_SIZE_CAP: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSemigroup {
    names: Vec<String>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    idempotent_mask: Vec<bool>,
    idempotents: Vec<usize>,
    idempotent_pos: Vec<Option<usize>>,
    identity: Option<usize>,
    zero: Option<usize>,
}

impl InverseSemigroup {
    /// Validates `rows` as the multiplication table of an inverse semigroup.
    pub fn from_table(names: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_capped(names, rows, DEFAULT_SIZE_CAP)
    }

    pub fn from_table_capped(names: Vec<String>, rows: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let n = rows.len();
        if n > cap {
            return Err(Error::SizeCap { requested: n as u128, cap });
        }
        if names.len() != n {
            return Err(Error::InvalidSpec(format!("{} names for {} table rows", names.len(), n)));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), expected: n });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(Error::IndexOutOfRange {
                        context: format!("mul[{row}][{col}]"),
                        value: v,
                        size: n,
                    });
                }
            }
            mul.extend_from_slice(r);
        }
        Self::from_flat(names, mul)
    }

    /// Builds from a closure `(a, b) -> a*b` over `0..n`.
    pub fn from_fn(names: Vec<String>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = names.len();
        if n > DEFAULT_SIZE_CAP {
            return Err(Error::SizeCap { requested: n as u128, cap: DEFAULT_SIZE_CAP });
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                if v >= n {
                    return Err(Error::IndexOutOfRange { context: format!("mul[{a}][{b}]"), value: v, size: n });
                }
                mul.push(v);
            }
        }
        Self::from_flat(names, mul)
    }

    fn from_flat(names: Vec<String>, mul: Vec<usize>) -> Result<Self> {
        let n = names.len();
        let m = |a: usize, b: usize| mul[a * n + b];

        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    let left = m(ab, c);
                    let right = m(a, m(b, c));
                    if left != right {
                        return Err(Error::NotAssociative { a, b, c, left, right });
                    }
                }
            }
        }

        let mut inv = vec![0; n];
        for a in 0..n {
            let mut found: Option<usize> = None;
            for b in 0..n {
                if m(m(a, b), a) == a && m(m(b, a), b) == b {
                    if let Some(first) = found {
                        return Err(Error::NotInverse(InverseFailure::MultipleInverses {
                            element: a,
                            first,
                            second: b,
                        }));
                    }
                    found = Some(b);
                }
            }
            match found {
                Some(b) => inv[a] = b,
                None => return Err(Error::NotInverse(InverseFailure::NoInverse { element: a })),
            }
        }

        let idempotent_mask: Vec<bool> = (0..n).map(|a| m(a, a) == a).collect();
        let idempotents: Vec<usize> = (0..n).filter(|&a| idempotent_mask[a]).collect();
        for (i, &e) in idempotents.iter().enumerate() {
            for &f in &idempotents[i + 1..] {
                if m(e, f) != m(f, e) {
                    return Err(Error::NotInverse(InverseFailure::NonCommutingIdempotents { e, f }));
                }
            }
        }
        let mut idempotent_pos = vec![None; n];
        for (i, &e) in idempotents.iter().enumerate() {
            idempotent_pos[e] = Some(i);
        }

        let identity = (0..n).find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a));
        let zero = (0..n).find(|&z| (0..n).all(|a| m(z, a) == z && m(a, z) == z));

        Ok(InverseSemigroup { names, mul, inv, idempotent_mask, idempotents, idempotent_pos, identity, zero })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a a⁻¹`, the domain idempotent.
    #[inline]
    pub fn dom(&self, a: usize) -> usize {
        self.mul(a, self.inv[a])
    }

    /// `a⁻¹ a`, the range idempotent.
    #[inline]
    pub fn ran(&self, a: usize) -> usize {
        self.mul(self.inv[a], a)
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idempotent_mask[a]
    }

    /// Idempotents in increasing index order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// Position of `e` in [`Self::idempotents`].
    pub fn idempotent_position(&self, e: usize) -> Option<usize> {
        self.idempotent_pos[e]
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.len().max(1)).take(self.len()).map(|r| r.to_vec()).collect()
    }

    /// Natural partial order: `a ≤ b` iff `a = a a⁻¹ b`.
    #[inline]
    pub fn natural_leq(&self, a: usize, b: usize) -> bool {
        self.mul(self.dom(a), b) == a
    }

    /// Evaluates all four characterizations of the natural order and fails if
    /// they disagree.
    pub fn natural_leq_diagnostic(&self, a: usize, b: usize) -> Result<bool> {
        let by_left = self.idempotents.iter().any(|&e| self.mul(e, b) == a);
        let by_right = self.idempotents.iter().any(|&f| self.mul(b, f) == a);
        let by_dom = self.mul(self.dom(a), b) == a;
        let by_ran = self.mul(b, self.ran(a)) == a;
        if by_left == by_right && by_right == by_dom && by_dom == by_ran {
            Ok(by_dom)
        } else {
            Err(Error::OrderClausesDisagree { a, b })
        }
    }

    /// Meet of two idempotents, computed as their product and checked to be
    /// the greatest lower bound.
    pub fn meet_idempotents(&self, e: usize, f: usize) -> Result<usize> {
        for x in [e, f] {
            if x >= self.len() {
                return Err(Error::IndexOutOfRange { context: "meet".into(), value: x, size: self.len() });
            }
            if !self.is_idempotent(x) {
                return Err(Error::NotIdempotent(x));
            }
        }
        let m = self.mul(e, f);
        let is_lower = |g: usize| self.natural_leq(g, e) && self.natural_leq(g, f);
        if !is_lower(m) || self.idempotents.iter().any(|&g| is_lower(g) && !self.natural_leq(g, m)) {
            return Err(Error::Consistency(format!("product {m} is not the meet of idempotents {e} and {f}")));
        }
        Ok(m)
    }

    /// Ternary heap operation `a b⁻¹ c`.
    #[inline]
    pub fn heap(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, self.inv[b]), c)
    }

    /// Maximal idempotents under the natural order.
    pub fn maximal_idempotents(&self) -> Vec<usize> {
        self.idempotents
            .iter()
            .copied()
            .filter(|&e| !self.idempotents.iter().any(|&f| f != e && self.natural_leq(e, f)))
            .collect()
    }
}

/// Explicit natural-order table over one semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalOrder {
    n: usize,
    leq: Vec<bool>,
}

impl NaturalOrder {
    pub fn new(s: &InverseSemigroup) -> Self {
        let n = s.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = s.natural_leq(a, b);
            }
        }
        NaturalOrder { n, leq }
    }

    /// Builds the table through the diagnostic path, failing on the first
    /// pair where the characterizations disagree.
    pub fn new_diagnostic(s: &InverseSemigroup) -> Result<Self> {
        let n = s.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = s.natural_leq_diagnostic(a, b)?;
            }
        }
        Ok(NaturalOrder { n, leq })
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// First violation of reflexivity, antisymmetry or transitivity.
    pub fn partial_order_violation(&self) -> Option<String> {
        let n = self.n;
        for a in 0..n {
            if !self.leq(a, a) {
                return Some(format!("not reflexive at {a}"));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Some(format!("not antisymmetric at ({a}, {b})"));
                }
                if self.leq(a, b) {
                    for c in 0..n {
                        if self.leq(b, c) && !self.leq(a, c) {
                            return Some(format!("not transitive at ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        }
        None
    }

    /// First violation of compatibility with inversion or multiplication.
    pub fn compatibility_violation(&self, s: &InverseSemigroup) -> Option<String> {
        let n = self.n;
        let below: Vec<Vec<usize>> = (0..n).map(|b| (0..n).filter(|&a| self.leq(a, b)).collect()).collect();
        for b in 0..n {
            for &a in &below[b] {
                if !self.leq(s.inv(a), s.inv(b)) {
                    return Some(format!("{a} <= {b} but inverses are not comparable"));
                }
            }
        }
        for a2 in 0..n {
            for b2 in 0..n {
                let top = s.mul(a2, b2);
                for &a1 in &below[a2] {
                    for &b1 in &below[b2] {
                        if !self.leq(s.mul(a1, b1), top) {
                            return Some(format!("{a1} <= {a2}, {b1} <= {b2} but products are not comparable"));
                        }
                    }
                }
            }
        }
        None
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(names: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let s = InverseSemigroup::from_table(names, rows)?;
        Self::from_semigroup(&s)
    }

    /// Accepts an inverse semigroup with exactly one idempotent.
    pub fn from_semigroup(s: &InverseSemigroup) -> Result<Self> {
        if s.idempotents().len() != 1 || s.is_empty() {
            return Err(Error::InvalidSpec(format!(
                "a group has exactly one idempotent, found {}",
                s.idempotents().len()
            )));
        }
        let n = s.len();
        Ok(FiniteGroup {
            names: s.names().to_vec(),
            mul: (0..n * n).map(|i| s.mul(i / n, i % n)).collect(),
            identity: s.idempotents()[0],
            inv: (0..n).map(|a| s.inv(a)).collect(),
        })
    }

    /// Cyclic group `ℤ_n` written additively, elements `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        FiniteGroup {
            names: (0..n).map(|i| i.to_string()).collect(),
            mul: (0..n * n).map(|i| (i / n + i % n) % n).collect(),
            identity: 0,
            inv: (0..n).map(|a| (n - a) % n).collect(),
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Symmetric group on `k` points, composing left to right.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        permutations(&mut current, 0, &mut perms);
        perms.sort();
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let n = perms.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &perms {
            for b in &perms {
                let c: Vec<usize> = a.iter().map(|&x| b[x]).collect();
                mul.push(index(&c));
            }
        }
        let names = perms
            .iter()
            .map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(""))
            .collect();
        let identity = 0;
        let inv = (0..n).map(|a| (0..n).find(|&b| mul[a * n + b] == identity).unwrap()).collect();
        FiniteGroup { names, mul, identity, inv }
    }

    /// Direct product, elements `(a, b)` at index `a * |h| + b`.
    pub fn product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.len(), other.len());
        let mut mul = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                mul.push(self.mul(x / m, y / m) * m + other.mul(x % m, y % m));
            }
        }
        let names = (0..n * m).map(|x| format!("({},{})", self.names[x / m], other.names[x % m])).collect();
        let inv = (0..n * m).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        FiniteGroup { names, mul, identity: self.identity * m + other.identity, inv }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn to_semigroup(&self) -> InverseSemigroup {
        InverseSemigroup::from_fn(self.names.clone(), |a, b| self.mul(a, b)).expect("group table is valid")
    }

    /// Whether `map` (values in `target`) is a group homomorphism.
    pub fn is_homomorphism_to(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.len()
            && map.iter().all(|&v| v < target.len())
            && (0..self.len())
                .all(|a| (0..self.len()).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }
}

fn permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permutations(current, k + 1, out);
        current.swap(k, i);
    }
}

/// Number of partial bijections on `n` points, `Σ_k C(n,k)² k!`.
pub fn symmetric_inverse_monoid_size(n: usize) -> u128 {
    let mut total: u128 = 0;
    for k in 0..=n {
        let c = binomial(n, k);
        let fact: u128 = (1..=k as u128).product();
        total += c * c * fact;
    }
    total
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// The symmetric inverse monoid `I_n` of partial bijections of `{1..n}`.
///
/// Elements are listed in lexicographic order of their image vectors, with
/// "undefined" sorting first, and named in one-line notation such as
/// `[2,-]`. Multiplication composes left to right: `x(fg) = (xf)g`.
pub fn build_symmetric_inverse_monoid(n: usize, cap: usize) -> Result<InverseSemigroup> {
    let size = symmetric_inverse_monoid_size(n);
    if size > cap as u128 {
        return Err(Error::SizeCap { requested: size, cap });
    }
    let mut maps: Vec<Vec<Option<usize>>> = Vec::with_capacity(size as usize);
    let mut current = vec![None; n];
    let mut used = vec![false; n];
    partial_bijections(0, &mut current, &mut used, &mut maps);
    maps.sort();
    let names: Vec<String> = maps
        .iter()
        .map(|m| {
            let parts: Vec<String> =
                m.iter().map(|x| x.map_or_else(|| "-".to_string(), |v| (v + 1).to_string())).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let index = |m: &Vec<Option<usize>>| maps.binary_search(m).expect("partial bijections closed under composition");
    let mut rows = Vec::with_capacity(maps.len());
    for f in &maps {
        let mut row = Vec::with_capacity(maps.len());
        for g in &maps {
            let fg: Vec<Option<usize>> = f.iter().map(|x| x.and_then(|y| g[y])).collect();
            row.push(index(&fg));
        }
        rows.push(row);
    }
    InverseSemigroup::from_table_capped(names, rows, cap)
}

fn partial_bijections(
    i: usize,
    current: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if i == current.len() {
        out.push(current.clone());
        return;
    }
    current[i] = None;
    partial_bijections(i + 1, current, used, out);
    for v in 0..current.len() {
        if !used[v] {
            used[v] = true;
            current[i] = Some(v);
            partial_bijections(i + 1, current, used, out);
            used[v] = false;
        }
    }
    current[i] = None;
}

/// A meet-semilattice given by its order table, as an inverse semigroup under
/// meet. `leq[a][b]` means `a ≤ b`.
pub fn semilattice_from_order(names: Vec<String>, leq: &[Vec<bool>]) -> Result<InverseSemigroup> {
    let meet = meet_table(leq)?;
    let n = names.len();
    if leq.len() != n {
        return Err(Error::InvalidSpec("order table size does not match names".into()));
    }
    InverseSemigroup::from_fn(names, |a, b| meet[a * n + b])
}

/// Validates a partial order table and returns its meet table, row-major.
pub(crate) fn meet_table(leq: &[Vec<bool>]) -> Result<Vec<usize>> {
    let n = leq.len();
    for (i, row) in leq.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: i, len: row.len(), expected: n });
        }
    }
    for a in 0..n {
        if !leq[a][a] {
            return Err(Error::InvalidSpec(format!("order is not reflexive at {a}")));
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(Error::InvalidSpec(format!("order is not antisymmetric at ({a}, {b})")));
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(Error::InvalidSpec(format!("order is not transitive at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let mut meet = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
            let glb = lower.iter().copied().find(|&m| lower.iter().all(|&c| leq[c][m]));
            match glb {
                Some(m) => meet[a * n + b] = m,
                None => return Err(Error::InvalidSpec(format!("elements {a} and {b} have no meet"))),
            }
        }
    }
    Ok(meet)
}

/// The chain `0 < 1 < … < k-1` under meet. Names are supplied top-down by
/// callers that care; by default `c0` is the bottom.
pub fn chain_semilattice(k: usize) -> InverseSemigroup {
    let names = (0..k).map(|i| format!("c{i}")).collect();
    InverseSemigroup::from_fn(names, |a, b| a.min(b)).expect("chains are semilattices")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn trivial_table_is_a_group() {
        let s = InverseSemigroup::from_table(vec!["e".into()], vec![vec![0]]).unwrap();
        assert_eq!(s.idempotents(), &[0]);
        assert_eq!(s.identity(), Some(0));
    }

    #[test]
    fn z2_inverse_is_identity_map() {
        let s = InverseSemigroup::from_table(names(2), vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((0..2).map(|a| s.inv(a)).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(s.idempotents(), &[0]);
    }

    #[test]
    fn null_semigroup_is_rejected() {
        // a·a = b, everything else b: `a` has no inverse.
        let err = InverseSemigroup::from_table(names(2), vec![vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NotInverse(InverseFailure::NoInverse { element: 0 }));
    }

    #[test]
    fn left_zero_semigroup_is_rejected() {
        let err = InverseSemigroup::from_table(names(2), vec![vec![0, 0], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::NotInverse(InverseFailure::MultipleInverses { element: 0, .. })));
    }

    #[test]
    fn non_associative_table_reports_triple() {
        let err = InverseSemigroup::from_table(names(2), vec![vec![1, 0], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn ragged_table() {
        let err = InverseSemigroup::from_table(names(2), vec![vec![0, 1], vec![1]]).unwrap_err();
        assert_eq!(err, Error::NotSquare { row: 1, len: 1, expected: 2 });
    }

    #[test]
    fn symmetric_inverse_monoid_sizes() {
        assert_eq!(build_symmetric_inverse_monoid(0, 10).unwrap().len(), 1);
        assert_eq!(build_symmetric_inverse_monoid(1, 10).unwrap().len(), 2);
        let i2 = build_symmetric_inverse_monoid(2, 10).unwrap();
        assert_eq!(i2.len(), 7);
        assert_eq!(i2.idempotents().len(), 4);
        assert_eq!(i2.name(i2.identity().unwrap()), "[1,2]");
        assert_eq!(i2.name(i2.zero().unwrap()), "[-,-]");
        assert_eq!(symmetric_inverse_monoid_size(3), 34);
        assert!(matches!(build_symmetric_inverse_monoid(3, 20), Err(Error::SizeCap { requested: 34, cap: 20 })));
    }

    #[test]
    fn natural_order_in_i2() {
        let i2 = build_symmetric_inverse_monoid(2, 10).unwrap();
        let p1 = i2.index_of("[1,-]").unwrap();
        let p2 = i2.index_of("[-,2]").unwrap();
        let id = i2.identity().unwrap();
        assert!(i2.natural_leq(p1, id));
        assert!(!i2.natural_leq(id, p1));
        assert_eq!(i2.meet_idempotents(p1, p2).unwrap(), i2.zero().unwrap());
        assert_eq!(i2.meet_idempotents(p1, p1).unwrap(), p1);
        let swap = i2.index_of("[2,1]").unwrap();
        assert_eq!(i2.meet_idempotents(swap, p1), Err(Error::NotIdempotent(swap)));
        NaturalOrder::new_diagnostic(&i2).unwrap();
    }

    #[test]
    fn two_chain_order() {
        let c = chain_semilattice(2);
        // c1 is the top ("1"), c0 the bottom ("e").
        assert!(c.natural_leq(0, 1));
        assert!(!c.natural_leq(1, 0));
        assert_eq!(c.meet_idempotents(1, 0).unwrap(), 0);
        assert_eq!(c.identity(), Some(1));
        assert_eq!(c.zero(), Some(0));
    }

    #[test]
    fn symmetric_group_s3() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.len(), 6);
        let s = g.to_semigroup();
        assert_eq!(s.idempotents().len(), 1);
        assert_eq!(g.name(g.identity()), "123");
    }

    #[test]
    fn semilattice_without_meet_is_rejected() {
        // two incomparable elements and nothing below
        let leq = vec![vec![true, false], vec![false, true]];
        assert!(semilattice_from_order(names(2), &leq).is_err());
    }
}
