//! Suffix-preserving maps of `A*` on a length window and the Zappa product
//! `(φ,u)(ψ,v) = (φ(u ▷ ψ), (uψ)v)`.
//!
//! Maps act on the right and compose left to right: `φψ` is `φ` then `ψ`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::Report;

use super::affine::AffineMap;
use super::word::{all_words, word_index, Word};

/// A map with `(pu)φ = q·(uφ)` for all words up to the window length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixMap {
    n: usize,
    window: usize,
    images: Vec<Word>,
}

fn window_words(n: usize, window: usize) -> usize {
    (0..=window).map(|k| n.pow(k as u32)).sum()
}

impl SuffixMap {
    /// Validates suffix preservation on every one-letter extension.
    pub fn from_images(n: usize, window: usize, images: Vec<Word>) -> Result<Self> {
        if images.len() != window_words(n, window) {
            return Err(Error::InvalidSpec(format!(
                "expected {} images for window {window}, got {}",
                window_words(n, window),
                images.len()
            )));
        }
        let map = SuffixMap { n, window, images };
        for u in all_words(n, window).iter().skip(1) {
            let tail = u.tail();
            if !map.get(u).has_suffix(map.get(&tail)) {
                return Err(Error::InvalidSpec(format!(
                    "not suffix-preserving: {u} maps to {} but {tail} maps to {}",
                    map.get(u),
                    map.get(&tail)
                )));
            }
        }
        Ok(map)
    }

    pub fn from_fn(n: usize, window: usize, f: impl Fn(&Word) -> Word) -> Result<Self> {
        SuffixMap::from_images(n, window, all_words(n, window).iter().map(f).collect())
    }

    pub fn identity(n: usize, window: usize) -> Self {
        SuffixMap { n, window, images: all_words(n, window) }
    }

    /// `ρ_w : u ↦ uw`.
    pub fn right_mult(w: &Word, window: usize) -> Self {
        let n = w.alphabet();
        SuffixMap { n, window, images: all_words(n, window).iter().map(|u| u.join(w)).collect() }
    }

    pub fn affine(f: &AffineMap, window: usize) -> Self {
        let n = f.alphabet();
        SuffixMap { n, window, images: all_words(n, window).iter().map(|u| f.apply(u)).collect() }
    }

    /// `1φ` of length at most `max_step`, and each letter prepended to `u`
    /// prepends a random word of length at most `max_step` to `uφ`.
    pub fn random<R: Rng>(n: usize, window: usize, max_step: usize, rng: &mut R) -> Self {
        let words = all_words(n, window);
        let mut images: Vec<Word> = Vec::with_capacity(words.len());
        let random_word = |rng: &mut R| {
            let len = rng.random_range(0..=max_step);
            Word::new(n, (0..len).map(|_| rng.random_range(0..n) as u8).collect()).expect("in range")
        };
        for u in &words {
            let img = if u.is_empty() {
                random_word(rng)
            } else {
                random_word(rng).join(&images[word_index(&u.tail())])
            };
            images.push(img);
        }
        SuffixMap { n, window, images }
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Panics outside the window.
    pub fn get(&self, u: &Word) -> &Word {
        &self.images[word_index(u)]
    }

    pub fn apply(&self, u: &Word) -> Result<Word> {
        if u.alphabet() != self.n {
            return Err(Error::AlphabetMismatch { left: self.n, right: u.alphabet() });
        }
        if u.len() > self.window {
            return Err(Error::WindowExceeded(format!("{u} is longer than the window {}", self.window)));
        }
        Ok(self.get(u).clone())
    }

    /// `p(u ▷ φ)`, the `q` with `(pu)φ = q·(uφ)`.
    pub fn transfer_at(&self, u: &Word, p: &Word) -> Result<Word> {
        let whole = self.apply(&p.join(u))?;
        let tail = self.apply(u)?;
        whole.strip_suffix(&tail).ok_or_else(|| {
            Error::Consistency(format!("{}{} maps to {whole}, which does not end in {tail}", p, u))
        })
    }

    /// `u ▷ φ` on the window shortened by `|u|`.
    pub fn transfer(&self, u: &Word) -> Result<SuffixMap> {
        if u.len() > self.window {
            return Err(Error::WindowExceeded(format!("{u} is longer than the window {}", self.window)));
        }
        let window = self.window - u.len();
        let images = all_words(self.n, window).iter().map(|p| self.transfer_at(u, p)).collect::<Result<_>>()?;
        Ok(SuffixMap { n: self.n, window, images })
    }

    /// `φψ`, on the largest window whose images stay inside `ψ`'s window.
    pub fn then(&self, other: &SuffixMap) -> Result<SuffixMap> {
        if self.n != other.n {
            return Err(Error::AlphabetMismatch { left: self.n, right: other.n });
        }
        let words = all_words(self.n, self.window);
        let mut window = self.window;
        for u in &words {
            if self.get(u).len() > other.window {
                if u.is_empty() {
                    return Err(Error::WindowExceeded(format!(
                        "1 maps to {}, outside the window {}",
                        self.get(u),
                        other.window
                    )));
                }
                window = window.min(u.len() - 1);
            }
        }
        let images = words[..window_words(self.n, window)].iter().map(|u| other.get(self.get(u)).clone()).collect();
        Ok(SuffixMap { n: self.n, window, images })
    }

    /// `φρ_w`.
    pub fn then_right_mult(&self, w: &Word) -> SuffixMap {
        SuffixMap { n: self.n, window: self.window, images: self.images.iter().map(|x| x.join(w)).collect() }
    }

    pub fn restrict(&self, window: usize) -> SuffixMap {
        let window = window.min(self.window);
        SuffixMap { n: self.n, window, images: self.images[..window_words(self.n, window)].to_vec() }
    }

    /// First word of the common window where the maps differ.
    pub fn first_difference(&self, other: &SuffixMap) -> Option<Word> {
        let window = self.window.min(other.window);
        all_words(self.n, window).into_iter().find(|u| self.get(u) != other.get(u))
    }

    pub fn is_identity(&self) -> bool {
        all_words(self.n, self.window).iter().all(|u| self.get(u) == u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZappaElement {
    pub phi: SuffixMap,
    pub u: Word,
}

impl ZappaElement {
    pub fn identity(n: usize, window: usize) -> Self {
        ZappaElement { phi: SuffixMap::identity(n, window), u: Word::empty(n) }
    }

    /// `μ(φ, u) = φρ_u`.
    pub fn mu(&self) -> SuffixMap {
        self.phi.then_right_mult(&self.u)
    }
}

pub fn zappa_compose(x: &ZappaElement, y: &ZappaElement) -> Result<ZappaElement> {
    let transferred = y.phi.transfer(&x.u)?;
    let phi = x.phi.then(&transferred)?;
    let u = y.phi.apply(&x.u)?.concat(&y.u)?;
    Ok(ZappaElement { phi, u })
}

/// Equal words and maps agreeing on their common window.
fn zappa_agree(x: &ZappaElement, y: &ZappaElement) -> bool {
    x.u == y.u && x.phi.first_difference(&y.phi).is_none()
}

/// Window for sampled maps: long enough for images of products of words of
/// length `2·max_len` under maps at most doubling length.
pub fn map_window(max_len: usize) -> usize {
    4 * max_len + 1
}

struct Tally {
    checked: u64,
    skipped: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, skipped: 0, failure: None }
    }

    fn record(&mut self, outcome: Result<bool>, what: impl FnOnce() -> String) {
        match outcome {
            Ok(true) => self.checked += 1,
            Ok(false) => {
                self.checked += 1;
                if self.failure.is_none() {
                    self.failure = Some(what());
                }
            }
            Err(Error::WindowExceeded(_)) => self.skipped += 1,
            Err(e) => {
                if self.failure.is_none() {
                    self.failure = Some(format!("{}: {e}", what()));
                }
            }
        }
    }

    fn finish(self, r: &mut Report, name: &str) {
        let detail = match &self.failure {
            Some(f) => format!("fails at {f}"),
            None => format!("{} instances, {} beyond window", self.checked, self.skipped),
        };
        r.check(name, self.failure.is_none() && self.checked > 0, detail);
    }
}

/// The sampled family: identity, right multiplications by letters, a few
/// affine maps, and `random` seeded random maps.
pub fn sample_maps(n: usize, window: usize, random: usize, seed: u64) -> Vec<(String, SuffixMap)> {
    let mut out = vec![("id".to_string(), SuffixMap::identity(n, window))];
    for i in 0..n {
        let w = Word::letter(n, i);
        out.push((format!("rho {w}"), SuffixMap::right_mult(&w, window)));
    }
    let a = Word::letter(n, 0);
    let mut affine = vec![AffineMap::new((0..n).map(|i| a.join(&Word::letter(n, i))).collect(), Word::empty(n)).expect("valid")];
    affine.push(AffineMap::new((0..n).map(|i| Word::letter(n, (i + 1) % n)).collect(), a.clone()).expect("valid"));
    if n >= 2 {
        let mut sigma: Vec<Word> = (0..n).map(|i| Word::letter(n, i)).collect();
        sigma[0] = Word::empty(n);
        affine.push(AffineMap::new(sigma, Word::letter(n, 1)).expect("valid"));
    }
    for f in affine {
        out.push((f.to_string(), SuffixMap::affine(&f, window)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..random {
        out.push((format!("random #{k}"), SuffixMap::random(n, window, 1, &mut rng)));
    }
    out
}

/// The four prefix-transfer identities, associativity of the Zappa product,
/// multiplicativity of `μ` and `v ▷ ρ_w = 1` on words of length at most
/// `max_len`, over [`sample_maps`].
pub fn zappa_check(n: usize, max_len: usize, random: usize, triples: usize, seed: u64) -> Result<Report> {
    let window = map_window(max_len);
    if window_words(n, window) > 1 << 22 {
        return Err(Error::WindowExceeded(format!("map window {window} over {n} letters is too large")));
    }
    let mut r = Report::new("zappa product");
    r.param("alphabet", n).param("max length", max_len).param("map window", window).param("seed", seed);
    let maps = sample_maps(n, window, random, seed);
    r.value("sampled maps", maps.len());
    let words = all_words(n, max_len);

    let mut t1 = Tally::new();
    let mut t4 = Tally::new();
    for (name, phi) in &maps {
        for u in &words {
            for v in &words {
                let uv = u.join(v);
                for p in &words {
                    let lhs = phi.transfer_at(&uv, p);
                    let rhs = phi.transfer_at(v, &p.join(u)).and_then(|whole| {
                        let tail = phi.transfer_at(v, u)?;
                        whole
                            .strip_suffix(&tail)
                            .ok_or_else(|| Error::Consistency(format!("{v} > phi is not suffix-preserving at {p}{u}")))
                    });
                    t1.record(lhs.and_then(|l| rhs.map(|r| l == r)), || format!("{name}, u = {u}, v = {v}, p = {p}"));
                }
                let lhs = phi.apply(&uv);
                let rhs = phi
                    .transfer_at(v, u)
                    .and_then(|q| phi.apply(v).map(|vphi| q.join(&vphi)));
                t4.record(lhs.and_then(|l| rhs.map(|r| l == r)), || format!("{name}, u = {u}, v = {v}"));
            }
        }
    }

    let mut t2 = Tally::new();
    let mut t3 = Tally::new();
    for (fname, phi) in &maps {
        for (gname, psi) in &maps {
            let composite = phi.then(psi);
            for u in &words {
                let via_table = composite.as_ref().map_err(Clone::clone).and_then(|c| c.apply(u));
                let stepwise = phi.apply(u).and_then(|x| psi.apply(&x));
                t3.record(via_table.and_then(|a| stepwise.map(|b| a == b)), || format!("{fname}, {gname}, u = {u}"));
                for p in &words {
                    let lhs = composite.as_ref().map_err(Clone::clone).and_then(|c| c.transfer_at(u, p));
                    let rhs = phi.transfer_at(u, p).and_then(|q| phi.apply(u).and_then(|uphi| psi.transfer_at(&uphi, &q)));
                    t2.record(lhs.and_then(|l| rhs.map(|r| l == r)), || format!("{fname}, {gname}, u = {u}, p = {p}"));
                }
            }
        }
    }

    t1.finish(&mut r, "(uv) > phi = u > (v > phi)");
    t2.finish(&mut r, "u > (phi psi) = (u > phi)(u phi > psi)");
    t3.finish(&mut r, "u(phi psi) = (u phi)psi");
    t4.finish(&mut r, "(uv)phi = u(v > phi) (v phi)");
    r.value(
        "note",
        "the last two identities are checked with phi throughout; a second map in the product-splitting law does not typecheck",
    );

    let mut rho = Tally::new();
    for (name, phi) in maps.iter().filter(|(name, _)| name.starts_with("rho")) {
        for v in &words {
            rho.record(phi.transfer(v).map(|t| t.is_identity()), || format!("{name}, v = {v}"));
        }
    }
    rho.finish(&mut r, "v > rho_w = 1");

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a_5a5a);
    let small: Vec<&(String, SuffixMap)> = maps.iter().filter(|(name, _)| !name.starts_with('[')).collect();
    let pick = |rng: &mut ChaCha8Rng| {
        let (name, phi) = small[rng.random_range(0..small.len())];
        let u = words[rng.random_range(0..words.len())].clone();
        (format!("({name}, {u})"), ZappaElement { phi: phi.clone(), u })
    };
    let mut assoc = Tally::new();
    let mut mu = Tally::new();
    let mut rho_pair = Tally::new();
    for _ in 0..triples {
        let (xn, x) = pick(&mut rng);
        let (yn, y) = pick(&mut rng);
        let (zn, z) = pick(&mut rng);
        let left = zappa_compose(&x, &y).and_then(|xy| zappa_compose(&xy, &z));
        let right = zappa_compose(&y, &z).and_then(|yz| zappa_compose(&x, &yz));
        assoc.record(left.and_then(|l| right.map(|r| zappa_agree(&l, &r))), || format!("{xn} {yn} {zn}"));

        let product = zappa_compose(&x, &y);
        mu.record(
            product.and_then(|xy| x.mu().then(&y.mu()).map(|m| xy.mu().first_difference(&m).is_none())),
            || format!("{xn} {yn}"),
        );

        let w = z.u.clone();
        let rho = ZappaElement { phi: SuffixMap::right_mult(&w, window), u: y.u.clone() };
        rho_pair.record(
            zappa_compose(&x, &rho).map(|c| c.u == x.u.join(&w).join(&y.u) && c.phi.first_difference(&x.phi).is_none()),
            || format!("{xn} with (rho {w}, {})", y.u),
        );
    }
    assoc.finish(&mut r, "associativity");
    mu.finish(&mut r, "mu is multiplicative");
    rho_pair.finish(&mut r, "(phi, u)(rho_w, v) = (phi, uwv)");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    #[test]
    fn transfer_of_affine_map_is_its_linear_part() {
        let f = AffineMap::new(vec![w("ab"), w("b")], w("a")).unwrap();
        let phi = SuffixMap::affine(&f, 6);
        let lin = SuffixMap::affine(&AffineMap::new(f.sigma.clone(), Word::empty(2)).unwrap(), 6);
        for u in all_words(2, 2) {
            let t = phi.transfer(&u).unwrap();
            assert_eq!(t.window(), 6 - u.len());
            assert!(t.first_difference(&lin).is_none());
        }
    }

    #[test]
    fn rejects_non_suffix_preserving() {
        let err = SuffixMap::from_fn(2, 2, |u| if u.len() == 1 { w("a") } else { u.clone() });
        assert!(err.is_err());
    }

    #[test]
    fn identity_pair() {
        let e = ZappaElement::identity(2, 5);
        let c = zappa_compose(&e, &e).unwrap();
        assert!(c.phi.is_identity());
        assert!(c.u.is_empty());
    }

    #[test]
    fn composition_shrinks_window() {
        let phi = SuffixMap::right_mult(&w("ab"), 4);
        let c = phi.then(&SuffixMap::identity(2, 4)).unwrap();
        assert_eq!(c.window(), 2);
        assert!(matches!(SuffixMap::apply(&c, &w("aaa")), Err(Error::WindowExceeded(_))));
    }

    #[test]
    fn random_maps_are_suffix_preserving() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = SuffixMap::random(2, 6, 2, &mut rng);
        assert!(SuffixMap::from_images(2, 6, m.images.clone()).is_ok());
    }

    #[test]
    fn identities_hold() {
        let r = zappa_check(2, 2, 3, 50, 1).unwrap();
        assert!(r.all_passed(), "{r}");
    }
}
