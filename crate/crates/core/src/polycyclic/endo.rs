//! Endomorphisms of `P_n` among the affine premorphisms `σρ_w`: meet
//! preservation against injectivity plus the suffix-code condition.

use std::collections::HashSet;

use crate::report::Report;

use super::affine::{all_sigmas, AffineMap};
use super::element::{all_idempotents, idem_meet};
use super::functor::Idem;
use super::word::{all_words, Word};

/// No word of the set is a proper suffix of another.
pub fn is_suffix_code(words: &[Word]) -> bool {
    let set: Vec<&Word> = {
        let mut seen = HashSet::new();
        words.iter().filter(|w| seen.insert(*w)).collect()
    };
    set.iter().all(|x| set.iter().all(|y| x == y || !y.has_suffix(x)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoClassification {
    pub meet_preserving: bool,
    pub meet_witness: Option<(Idem, Idem)>,
    pub injective: bool,
    pub suffix_code: bool,
}

impl EndoClassification {
    pub fn agrees(&self) -> bool {
        self.meet_preserving == (self.injective && self.suffix_code)
    }
}

fn eval(f: &AffineMap, e: &Idem) -> Idem {
    e.as_ref().map(|u| f.apply(u))
}

pub fn endo_classification(f: &AffineMap, window: usize) -> EndoClassification {
    let idems = all_idempotents(f.alphabet(), window);
    let images: Vec<Idem> = idems.iter().map(|e| eval(f, e)).collect();
    let mut meet_witness = None;
    'outer: for (i, x) in idems.iter().enumerate() {
        for (j, y) in idems.iter().enumerate() {
            if eval(f, &idem_meet(x, y)) != idem_meet(&images[i], &images[j]) {
                meet_witness = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }
    let words = all_words(f.alphabet(), window);
    let distinct: HashSet<Word> = words.iter().map(|u| f.apply_sigma(u)).collect();
    EndoClassification {
        meet_preserving: meet_witness.is_none(),
        meet_witness,
        injective: distinct.len() == words.len(),
        suffix_code: is_suffix_code(&f.sigma),
    }
}

/// Both directions of the criterion for one map on the window.
pub fn endo_classification_check(f: &AffineMap, window: usize) -> Report {
    let c = endo_classification(f, window);
    let mut r = Report::new("endomorphism criterion");
    r.param("map", f).param("window", window);
    r.value("meet preserving", c.meet_preserving)
        .value("injective on window", c.injective)
        .value("letter images form a suffix code", c.suffix_code);
    if let Some((x, y)) = &c.meet_witness {
        r.value("meet violation", format!("{}, {}", show(x), show(y)));
    }
    r.check("meet preserving iff injective with suffix-code letter images", c.agrees(), "");
    r
}

fn show(e: &Idem) -> String {
    e.as_ref().map_or_else(|| "0".to_string(), Word::to_string)
}

/// [`endo_classification`] over every `σ` with letter images of length at
/// most `max_image` and every translation of length at most one.
pub fn endo_sweep(n: usize, window: usize, max_image: usize) -> Report {
    let mut r = Report::new("endomorphism criterion sweep");
    r.param("alphabet", n).param("window", window).param("letter image length", max_image);
    let (mut total, mut endo, mut disagree) = (0, 0, None);
    for sigma in all_sigmas(n, max_image) {
        for w in all_words(n, 1) {
            let f = AffineMap::new(sigma.clone(), w).expect("valid");
            let c = endo_classification(&f, window);
            total += 1;
            if c.meet_preserving {
                endo += 1;
            }
            if !c.agrees() {
                disagree.get_or_insert(format!("{f}: {c:?}"));
            }
        }
    }
    r.value("maps", total).value("meet preserving", endo);
    r.check("criterion agrees in both directions", disagree.is_none(), disagree.unwrap_or_default());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    #[test]
    fn suffix_codes() {
        assert!(is_suffix_code(&[w("a"), w("b")]));
        assert!(!is_suffix_code(&[w("ab"), w("b")]));
        assert!(is_suffix_code(&[w("aa"), w("ba")]));
        assert!(!is_suffix_code(&[w("1"), w("a")]));
        assert!(is_suffix_code(&[w("a"), w("a")]));
    }

    #[test]
    fn examples() {
        let id = endo_classification(&AffineMap::identity(2), 3);
        assert!(id.meet_preserving && id.suffix_code && id.injective);

        let bad = endo_classification(&AffineMap::new(vec![w("ab"), w("b")], w("1")).unwrap(), 3);
        assert!(!bad.meet_preserving && !bad.suffix_code && bad.agrees());
        let (x, y) = bad.meet_witness.unwrap();
        assert_eq!(idem_meet(&x, &y), None);

        let good = endo_classification(&AffineMap::new(vec![w("aa"), w("ba")], w("b")).unwrap(), 3);
        assert!(good.meet_preserving && good.agrees());
    }

    #[test]
    fn sweep_agrees() {
        let r = endo_sweep(2, 3, 2);
        assert!(r.all_passed(), "{r}");
    }
}
