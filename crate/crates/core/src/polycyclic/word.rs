//! Words over a finite alphabet `a, b, c, …`.
//!
//! Concatenation is left to right and "suffix" always means a trailing
//! segment: `w = p·u` makes `u` a suffix of `w`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ALPHABET: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<u8>) -> Result<Self> {
        check_alphabet(n)?;
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= n) {
            return Err(Error::InvalidSpec(format!("letter index {bad} outside an alphabet of {n} letters")));
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Word { n, letters: Vec::new() }
    }

    pub fn letter(n: usize, i: usize) -> Self {
        assert!(i < n, "letter {i} outside alphabet of {n}");
        Word { n, letters: vec![i as u8] }
    }

    /// Parses `"1"`, `""` or a string of letters `a..`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        check_alphabet(n)?;
        if s == "1" {
            return Ok(Word::empty(n));
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match letter_index(c) {
                Some(i) if i < n => letters.push(i as u8),
                _ => return Err(Error::InvalidSpec(format!("`{c}` is not a letter of an alphabet of {n} letters"))),
            }
        }
        Ok(Word { n, letters })
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::AlphabetMismatch { left: self.n, right: other.n });
        }
        Ok(self.join(other))
    }

    /// Concatenation for words already known to share an alphabet.
    pub fn join(&self, other: &Word) -> Word {
        debug_assert_eq!(self.n, other.n);
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { n: self.n, letters }
    }

    pub fn power(&self, k: usize) -> Word {
        Word { n: self.n, letters: self.letters.repeat(k) }
    }

    pub fn has_suffix(&self, suffix: &Word) -> bool {
        self.letters.ends_with(&suffix.letters)
    }

    /// `p` with `self = p·suffix`.
    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.letters
            .strip_suffix(suffix.letters.as_slice())
            .map(|p| Word { n: self.n, letters: p.to_vec() })
    }

    /// Drops the first letter.
    pub fn tail(&self) -> Word {
        Word { n: self.n, letters: self.letters[1..].to_vec() }
    }
}

fn check_alphabet(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ALPHABET {
        return Err(Error::InvalidSpec(format!("alphabet size must be between 1 and {MAX_ALPHABET}, got {n}")));
    }
    Ok(())
}

pub(crate) fn letter_index(c: char) -> Option<usize> {
    c.is_ascii_lowercase().then(|| (c as u8 - b'a') as usize)
}

/// Suffix order: `w ≤ u` iff `w = p·u`.
pub fn suffix_leq(w: &Word, u: &Word) -> bool {
    w.has_suffix(u)
}

/// Length first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.len(), &self.letters).cmp(&(other.n, other.len(), &other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for &l in &self.letters {
            write!(f, "{}", (b'a' + l) as char)?;
        }
        Ok(())
    }
}

/// All words of length at most `max_len`, shortest first, then lexicographic.
pub fn all_words(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty(n)];
    let mut layer = vec![Word::empty(n)];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * n);
        for w in &layer {
            for i in 0..n {
                let mut letters = w.letters.clone();
                letters.push(i as u8);
                next.push(Word { n, letters });
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Position of a word in [`all_words`] order.
pub fn word_index(w: &Word) -> usize {
    let n = w.n;
    let shorter: usize = (0..w.len()).map(|k| n.pow(k as u32)).sum();
    shorter + w.letters.iter().fold(0, |acc, &l| acc * n + l as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w = Word::parse(2, "abba").unwrap();
        assert_eq!(w.to_string(), "abba");
        assert_eq!(Word::parse(2, "1").unwrap(), Word::empty(2));
        assert!(Word::parse(2, "abc").is_err());
        assert!(Word::parse(0, "").is_err());
    }

    #[test]
    fn suffix_order() {
        let a = Word::parse(2, "a").unwrap();
        let ba = Word::parse(2, "ba").unwrap();
        assert!(suffix_leq(&ba, &a));
        assert!(!suffix_leq(&a, &ba));
        assert!(suffix_leq(&a, &a));
        assert_eq!(ba.strip_suffix(&a), Some(Word::parse(2, "b").unwrap()));
    }

    #[test]
    fn word_enumeration_and_index() {
        let ws = all_words(2, 3);
        assert_eq!(ws.len(), 15);
        for (i, w) in ws.iter().enumerate() {
            assert_eq!(word_index(w), i);
        }
        let mut sorted = ws.clone();
        sorted.sort();
        assert_eq!(sorted, ws);
    }

    #[test]
    fn mismatch() {
        let a = Word::letter(2, 0);
        let b = Word::letter(3, 1);
        assert_eq!(a.concat(&b), Err(Error::AlphabetMismatch { left: 2, right: 3 }));
    }
}
