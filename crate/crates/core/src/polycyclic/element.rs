//! Elements of the polycyclic monoid `P_n`: zero, or `u⁻¹v` stored as `(u, v)`.

use std::fmt;

use crate::error::{Error, Result};

use super::word::{all_words, suffix_leq, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyElement {
    Zero,
    Pair(Word, Word),
}

impl PolyElement {
    pub fn one(n: usize) -> Self {
        PolyElement::Pair(Word::empty(n), Word::empty(n))
    }

    pub fn pair(u: Word, v: Word) -> Result<Self> {
        if u.alphabet() != v.alphabet() {
            return Err(Error::AlphabetMismatch { left: u.alphabet(), right: v.alphabet() });
        }
        Ok(PolyElement::Pair(u, v))
    }

    /// The generator `a_i`, i.e. `(1, a_i)`.
    pub fn letter(n: usize, i: usize) -> Self {
        PolyElement::Pair(Word::empty(n), Word::letter(n, i))
    }

    /// The idempotent `(w, w)`.
    pub fn idempotent(w: Word) -> Self {
        PolyElement::Pair(w.clone(), w)
    }

    pub fn from_idem(e: &Option<Word>) -> Self {
        match e {
            None => PolyElement::Zero,
            Some(w) => PolyElement::idempotent(w.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, PolyElement::Zero)
    }

    pub fn alphabet(&self) -> Option<usize> {
        match self {
            PolyElement::Zero => None,
            PolyElement::Pair(u, _) => Some(u.alphabet()),
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            PolyElement::Zero => PolyElement::Zero,
            PolyElement::Pair(u, v) => PolyElement::Pair(v.clone(), u.clone()),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            PolyElement::Zero => true,
            PolyElement::Pair(u, v) => u == v,
        }
    }

    /// `x x⁻¹`.
    pub fn dom(&self) -> Self {
        match self {
            PolyElement::Zero => PolyElement::Zero,
            PolyElement::Pair(u, _) => PolyElement::idempotent(u.clone()),
        }
    }

    /// `x⁻¹ x`.
    pub fn ran(&self) -> Self {
        match self {
            PolyElement::Zero => PolyElement::Zero,
            PolyElement::Pair(_, v) => PolyElement::idempotent(v.clone()),
        }
    }

    /// The idempotent as an element of `A* ∪ {0}`.
    pub fn as_idem(&self) -> Option<Option<Word>> {
        match self {
            PolyElement::Zero => Some(None),
            PolyElement::Pair(u, v) if u == v => Some(Some(u.clone())),
            PolyElement::Pair(..) => None,
        }
    }

    pub fn mul(&self, other: &PolyElement) -> Result<PolyElement> {
        poly_mul(self, other)
    }

    /// Product for elements already known to share an alphabet.
    pub fn times(&self, other: &PolyElement) -> PolyElement {
        poly_mul(self, other).expect("same alphabet")
    }

    pub fn heap(&self, b: &PolyElement, c: &PolyElement) -> PolyElement {
        self.times(&b.inv()).times(c)
    }
}

/// `(u, v)·(p, q)`: `(u, w·q)` if `v = w·p`, `(w·u, q)` if `p = w·v`, else `0`.
pub fn poly_mul(x: &PolyElement, y: &PolyElement) -> Result<PolyElement> {
    let (PolyElement::Pair(u, v), PolyElement::Pair(p, q)) = (x, y) else {
        return Ok(PolyElement::Zero);
    };
    if u.alphabet() != p.alphabet() {
        return Err(Error::AlphabetMismatch { left: u.alphabet(), right: p.alphabet() });
    }
    if let Some(w) = v.strip_suffix(p) {
        return Ok(PolyElement::Pair(u.clone(), w.join(q)));
    }
    if let Some(w) = p.strip_suffix(v) {
        return Ok(PolyElement::Pair(w.join(u), q.clone()));
    }
    Ok(PolyElement::Zero)
}

/// `(u', v') ≤ (u, v)` iff `u' = pu` and `v' = pv` for one `p`; `0` is below
/// everything.
pub fn suffix_leq_pair(x: &PolyElement, y: &PolyElement) -> bool {
    match (x, y) {
        (PolyElement::Zero, _) => true,
        (_, PolyElement::Zero) => false,
        (PolyElement::Pair(u1, v1), PolyElement::Pair(u, v)) => match (u1.strip_suffix(u), v1.strip_suffix(v)) {
            (Some(p), Some(q)) => p == q,
            _ => false,
        },
    }
}

/// Suffix order on `A* ∪ {0}`, with `None` for zero.
pub fn idem_leq(x: &Option<Word>, y: &Option<Word>) -> bool {
    match (x, y) {
        (None, _) => true,
        (_, None) => false,
        (Some(a), Some(b)) => suffix_leq(a, b),
    }
}

/// Meet in `A* ∪ {0}`: zero with anything is zero, incomparable words meet
/// in zero, comparable words meet in the longer one.
pub fn idem_meet(x: &Option<Word>, y: &Option<Word>) -> Option<Word> {
    match (x, y) {
        (Some(a), Some(b)) if suffix_leq(a, b) => Some(a.clone()),
        (Some(a), Some(b)) if suffix_leq(b, a) => Some(b.clone()),
        _ => None,
    }
}

/// Zero followed by all pairs with `|u|, |v| ≤ max_len`.
pub fn all_elements(n: usize, max_len: usize) -> Vec<PolyElement> {
    let words = all_words(n, max_len);
    let mut out = Vec::with_capacity(1 + words.len() * words.len());
    out.push(PolyElement::Zero);
    for u in &words {
        for v in &words {
            out.push(PolyElement::Pair(u.clone(), v.clone()));
        }
    }
    out
}

/// `A* ∪ {0}` up to `max_len`, zero first.
pub fn all_idempotents(n: usize, max_len: usize) -> Vec<Option<Word>> {
    std::iter::once(None).chain(all_words(n, max_len).into_iter().map(Some)).collect()
}

/// Normal form text: `0`, `1`, `v`, `u^-1`, `u^-1 v`, with multi-letter `u`
/// parenthesised.
impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyElement::Zero => f.write_str("0"),
            PolyElement::Pair(u, v) => {
                if u.is_empty() {
                    return write!(f, "{v}");
                }
                if u.len() == 1 {
                    write!(f, "{u}^-1")?;
                } else {
                    write!(f, "({u})^-1")?;
                }
                if !v.is_empty() {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    fn p(u: &str, v: &str) -> PolyElement {
        PolyElement::Pair(w(u), w(v))
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(poly_mul(&p("ab", "ba"), &p("ba", "b")).unwrap(), p("ab", "b"));
        assert_eq!(poly_mul(&p("1", "ab"), &p("b", "a")).unwrap(), p("1", "aa"));
        assert_eq!(poly_mul(&p("1", "a"), &p("b", "1")).unwrap(), PolyElement::Zero);
        assert_eq!(poly_mul(&PolyElement::Zero, &p("a", "a")).unwrap(), PolyElement::Zero);
    }

    #[test]
    fn pair_order() {
        assert!(suffix_leq_pair(&p("ba", "bb"), &p("a", "b")));
        assert!(!suffix_leq_pair(&p("ba", "ab"), &p("a", "b")));
        assert!(suffix_leq_pair(&PolyElement::Zero, &p("a", "b")));
    }

    #[test]
    fn meets() {
        assert_eq!(idem_meet(&Some(w("ba")), &Some(w("a"))), Some(w("ba")));
        assert_eq!(idem_meet(&Some(w("a")), &Some(w("b"))), None);
        assert_eq!(idem_meet(&None, &Some(w("b"))), None);
    }

    #[test]
    fn printing() {
        assert_eq!(PolyElement::Zero.to_string(), "0");
        assert_eq!(PolyElement::one(2).to_string(), "1");
        assert_eq!(p("1", "ab").to_string(), "ab");
        assert_eq!(p("b", "a").to_string(), "b^-1 a");
        assert_eq!(p("ab", "1").to_string(), "(ab)^-1");
        assert_eq!(p("ab", "ba").to_string(), "(ab)^-1 ba");
    }
}
