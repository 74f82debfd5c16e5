//! Affine maps `σρ_w : u ↦ (uσ)·w` of `A*`.

use std::fmt;

use crate::error::{Error, Result};

use super::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    /// Images of the letters `a, b, …`.
    pub sigma: Vec<Word>,
    pub w: Word,
}

impl AffineMap {
    pub fn new(sigma: Vec<Word>, w: Word) -> Result<Self> {
        let n = w.alphabet();
        if sigma.len() != n {
            return Err(Error::InvalidSpec(format!("expected {n} letter images, got {}", sigma.len())));
        }
        if let Some(bad) = sigma.iter().find(|s| s.alphabet() != n) {
            return Err(Error::AlphabetMismatch { left: n, right: bad.alphabet() });
        }
        Ok(AffineMap { sigma, w })
    }

    pub fn identity(n: usize) -> Self {
        AffineMap { sigma: (0..n).map(|i| Word::letter(n, i)).collect(), w: Word::empty(n) }
    }

    /// `ρ_w`.
    pub fn right_mult(w: Word) -> Self {
        let n = w.alphabet();
        AffineMap { sigma: (0..n).map(|i| Word::letter(n, i)).collect(), w }
    }

    pub fn alphabet(&self) -> usize {
        self.w.alphabet()
    }

    pub fn apply_sigma(&self, u: &Word) -> Word {
        let n = self.alphabet();
        let letters = u.letters().iter().flat_map(|&l| self.sigma[l as usize].letters().iter().copied()).collect();
        Word::new(n, letters).expect("letters in range")
    }

    pub fn apply(&self, u: &Word) -> Word {
        self.apply_sigma(u).join(&self.w)
    }

    /// `σρ_u` then `τρ_v` is `(στ)ρ_{(uτ)v}`.
    pub fn then(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            sigma: self.sigma.iter().map(|s| other.apply_sigma(s)).collect(),
            w: other.apply(&self.w),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineMap::identity(self.alphabet())
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.sigma.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{s}", (b'a' + i as u8) as char)?;
        }
        write!(f, "] rho {}", self.w)
    }
}

/// Every letter-image assignment with images of length at most `max_len`.
pub fn all_sigmas(n: usize, max_len: usize) -> Vec<Vec<Word>> {
    let choices = super::word::all_words(n, max_len);
    let mut out: Vec<Vec<Word>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push(c.clone());
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    #[test]
    fn apply_and_compose() {
        let f = AffineMap::new(vec![w("ab"), w("b")], w("a")).unwrap();
        assert_eq!(f.apply(&w("ba")), w("baba"));
        let g = AffineMap::right_mult(w("b"));
        let fg = f.then(&g);
        for u in super::super::word::all_words(2, 3) {
            assert_eq!(fg.apply(&u), g.apply(&f.apply(&u)));
        }
        assert_eq!(all_sigmas(2, 2).len(), 49);
    }
}
