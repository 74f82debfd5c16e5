//! Ordered functors of `ΔA*` given by their action on `E(P_n) = A* ∪ {0}`,
//! and their classification into constant-zero, `c_{w,t}` and affine maps.

use std::fmt;

use crate::report::Report;

use super::affine::{all_sigmas, AffineMap};
use super::element::{all_elements, idem_leq, suffix_leq_pair, PolyElement};
use super::word::{all_words, suffix_leq, word_index, Word};

/// `None` is the zero idempotent.
pub type Idem = Option<Word>;

fn show(e: &Idem) -> String {
    match e {
        None => "0".to_string(),
        Some(w) => w.to_string(),
    }
}

/// A candidate map on `A* ∪ {0}`, known on words of length at most `window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowFunctor {
    pub n: usize,
    pub window: usize,
    pub zero_image: Idem,
    /// Indexed in length-then-lexicographic order.
    pub images: Vec<Idem>,
}

impl WindowFunctor {
    pub fn from_fn(n: usize, window: usize, zero_image: Idem, f: impl Fn(&Word) -> Idem) -> Self {
        WindowFunctor { n, window, zero_image, images: all_words(n, window).iter().map(f).collect() }
    }

    pub fn get(&self, u: &Word) -> &Idem {
        &self.images[word_index(u)]
    }

    pub fn eval(&self, e: &Idem) -> &Idem {
        match e {
            None => &self.zero_image,
            Some(u) => self.get(u),
        }
    }
}

/// The three kinds of ordered functor, as total maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderedFunctor {
    ConstantZero,
    /// `c_{w,t}`: `0 ↦ w`, every word `↦ t`, with `w ≤ t`.
    Constant { w: Word, t: Word },
    Affine(AffineMap),
}

impl OrderedFunctor {
    pub fn eval(&self, e: &Idem) -> Idem {
        match (self, e) {
            (OrderedFunctor::ConstantZero, _) => None,
            (OrderedFunctor::Constant { w, .. }, None) => Some(w.clone()),
            (OrderedFunctor::Constant { t, .. }, Some(_)) => Some(t.clone()),
            (OrderedFunctor::Affine(_), None) => None,
            (OrderedFunctor::Affine(f), Some(u)) => Some(f.apply(u)),
        }
    }

    /// The induced map of `P_n`: `0 ↦ 0θ`, `(u, v) ↦ (uθ, vθ)`.
    pub fn eval_elem(&self, x: &PolyElement) -> PolyElement {
        match x {
            PolyElement::Zero => PolyElement::from_idem(&self.eval(&None)),
            PolyElement::Pair(u, v) => match (self.eval(&Some(u.clone())), self.eval(&Some(v.clone()))) {
                (Some(a), Some(b)) => PolyElement::Pair(a, b),
                _ => PolyElement::Zero,
            },
        }
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &OrderedFunctor) -> OrderedFunctor {
        match (self, other) {
            (OrderedFunctor::Affine(f), OrderedFunctor::Affine(g)) => OrderedFunctor::Affine(f.then(g)),
            (OrderedFunctor::Affine(_), g) => g.clone(),
            (f, g) => {
                let zero = g.eval(&f.eval(&None));
                let word = g.eval(&f.eval(&Some(Word::empty(1))));
                match (zero, word) {
                    (Some(w), Some(t)) => OrderedFunctor::Constant { w, t },
                    _ => OrderedFunctor::ConstantZero,
                }
            }
        }
    }

    pub fn to_window(&self, n: usize, window: usize) -> WindowFunctor {
        WindowFunctor::from_fn(n, window, self.eval(&None), |u| self.eval(&Some(u.clone())))
    }
}

impl fmt::Display for OrderedFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderedFunctor::ConstantZero => f.write_str("c_0"),
            OrderedFunctor::Constant { w, t } => write!(f, "c_{{{w},{t}}}"),
            OrderedFunctor::Affine(a) => write!(f, "{a}"),
        }
    }
}

/// Evidence that a window map is not the restriction of an ordered functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Words in one component sent to zero and to a word.
    ZeroSplit { to_zero: Word, to_word: Word },
    /// `lower ≤ upper` but the images are not in order.
    OrderViolation { lower: Idem, upper: Idem },
    /// `(pu, u)` and `(p, 1)` are both below identities by the same `p` but
    /// their images are not related by one common prefix.
    TransferDiffers { p: Word, u: Word },
    /// Fits `σρ_w` on letters but not on `word`.
    NotAffine { word: Word, expected: Word },
    /// `0 ↦ w` forces `|(vᵐ)φ| ≤ |w|`, but the lengths grow by `step ≥ 1`
    /// with each power, so they exceed `|w|` at `m = exceeds_at`.
    UnboundedChain { v: Word, lengths: Vec<usize>, step: usize, bound: usize, exceeds_at: usize },
}

impl Witness {
    /// Re-checks the evidence against the map.
    pub fn confirms(&self, f: &WindowFunctor) -> bool {
        match self {
            Witness::ZeroSplit { to_zero, to_word } => f.get(to_zero).is_none() && f.get(to_word).is_some(),
            Witness::OrderViolation { lower, upper } => {
                idem_leq(lower, upper) && !idem_leq(f.eval(lower), f.eval(upper))
            }
            Witness::TransferDiffers { p, u } => transfer_pair(f, p, u).is_some_and(|(a, b)| a != b),
            Witness::NotAffine { word, expected } => f.get(word).as_ref() != Some(expected),
            Witness::UnboundedChain { v, lengths, step, bound, exceeds_at } => {
                let Some(w) = &f.zero_image else { return false };
                let observed: Vec<usize> = (0..lengths.len())
                    .map(|m| f.get(&v.power(m)).as_ref().map_or(usize::MAX, Word::len))
                    .collect();
                *step >= 1
                    && w.len() == *bound
                    && observed == *lengths
                    && lengths.windows(2).all(|p| p[1] == p[0] + step)
                    && lengths[0] + exceeds_at * step > *bound
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ZeroSplit { to_zero, to_word } => write!(f, "{to_zero} maps to 0 but {to_word} maps to a word"),
            Witness::OrderViolation { lower, upper } => {
                write!(f, "{} <= {} but their images are not in order", show(lower), show(upper))
            }
            Witness::TransferDiffers { p, u } => write!(f, "prefix {p} transfers differently above {u} and above 1"),
            Witness::NotAffine { word, expected } => write!(f, "{word} does not map to the affine fit {expected}"),
            Witness::UnboundedChain { v, lengths, step, bound, exceeds_at } => write!(
                f,
                "image lengths of powers of {v} are {lengths:?}, growing by {step}, and pass the bound {bound} at power {exceeds_at}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Functor(OrderedFunctor),
    NotOrderedFunctor(Witness),
}

/// `(q_u, q_1)` with `(pu)φ = q_u·(uφ)` and `pφ = q_1·(1φ)`.
fn transfer_pair(f: &WindowFunctor, p: &Word, u: &Word) -> Option<(Word, Word)> {
    let (Some(pu), Some(uu), Some(pp), Some(one)) =
        (f.get(&p.join(u)), f.get(u), f.get(p), f.get(&Word::empty(f.n)))
    else {
        return None;
    };
    Some((pu.strip_suffix(uu)?, pp.strip_suffix(one)?))
}

/// Order and equal prefix transfer on the words of the window, assuming all
/// words map to words.
fn word_part_witness(f: &WindowFunctor, words: &[Word]) -> Option<Witness> {
    for u in words.iter().skip(1) {
        let tail = u.tail();
        if !idem_leq(f.get(u), f.get(&tail)) {
            return Some(Witness::OrderViolation { lower: Some(u.clone()), upper: Some(tail) });
        }
    }
    for u in words {
        for p in words.iter().take_while(|p| p.len() + u.len() <= f.window) {
            if let Some((a, b)) = transfer_pair(f, p, u) {
                if a != b {
                    return Some(Witness::TransferDiffers { p: p.clone(), u: u.clone() });
                }
            }
        }
    }
    None
}

pub fn classify_ordered_functor(f: &WindowFunctor) -> Classification {
    use Classification::*;
    let words = all_words(f.n, f.window);
    let one = Word::empty(f.n);

    let Some(w) = &f.zero_image else {
        let zero = words.iter().find(|u| f.get(u).is_none());
        let word = words.iter().find(|u| f.get(u).is_some());
        return match (zero, word) {
            (_, None) => Functor(OrderedFunctor::ConstantZero),
            (Some(z), Some(x)) => NotOrderedFunctor(Witness::ZeroSplit { to_zero: z.clone(), to_word: x.clone() }),
            (None, Some(_)) => {
                if let Some(wit) = word_part_witness(f, &words) {
                    return NotOrderedFunctor(wit);
                }
                let r = f.get(&one).clone().expect("word image");
                if f.window == 0 {
                    return Functor(OrderedFunctor::Affine(AffineMap::right_mult(r)));
                }
                let sigma: Vec<Word> = (0..f.n)
                    .map(|i| {
                        let img = f.get(&Word::letter(f.n, i)).as_ref().expect("word image");
                        img.strip_suffix(&r).expect("order checked")
                    })
                    .collect();
                let a = AffineMap::new(sigma, r).expect("same alphabet");
                for u in &words {
                    let expected = a.apply(u);
                    if f.get(u).as_ref() != Some(&expected) {
                        return NotOrderedFunctor(Witness::NotAffine { word: u.clone(), expected });
                    }
                }
                Functor(OrderedFunctor::Affine(a))
            }
        };
    };

    for u in &words {
        if !idem_leq(&Some(w.clone()), f.get(u)) {
            return NotOrderedFunctor(Witness::OrderViolation { lower: None, upper: Some(u.clone()) });
        }
    }
    if let Some(wit) = word_part_witness(f, &words) {
        return NotOrderedFunctor(wit);
    }
    let base = f.get(&one).clone().expect("word image");
    let Some(v) = words.iter().find(|u| f.get(u).as_ref() != Some(&base)) else {
        return Functor(OrderedFunctor::Constant { w: w.clone(), t: base });
    };
    let step = f.get(v).as_ref().expect("word image").len() - base.len();
    let lengths: Vec<usize> = (0..)
        .take_while(|m| v.len() * m <= f.window)
        .map(|m| f.get(&v.power(m)).as_ref().expect("word image").len())
        .collect();
    let exceeds_at = (w.len() - base.len()) / step + 1;
    NotOrderedFunctor(Witness::UnboundedChain { v: v.clone(), lengths, step, bound: w.len(), exceeds_at })
}

/// First pair with `(xy)θ ≰ xθ·yθ` over elements with components of length
/// at most `max_len`.
pub fn premorphism_violation(f: &OrderedFunctor, n: usize, max_len: usize) -> Option<(PolyElement, PolyElement)> {
    let elems = all_elements(n, max_len);
    let images: Vec<PolyElement> = elems.iter().map(|x| f.eval_elem(x)).collect();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let lhs = f.eval_elem(&x.times(y));
            if !suffix_leq_pair(&lhs, &images[i].times(&images[j])) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// Pointwise composite on the window, independent of [`OrderedFunctor::then`].
fn compose_on_window(f: &OrderedFunctor, g: &OrderedFunctor, n: usize, window: usize) -> WindowFunctor {
    WindowFunctor::from_fn(n, window, g.eval(&f.eval(&None)), |u| g.eval(&f.eval(&Some(u.clone()))))
}

/// Every `c_{w,t}` with `w ≤ t` over words of length at most `max_len`.
pub fn constant_functors(n: usize, max_len: usize) -> Vec<OrderedFunctor> {
    let words = all_words(n, max_len);
    let mut out = Vec::new();
    for w in &words {
        for t in &words {
            if suffix_leq(w, t) {
                out.push(OrderedFunctor::Constant { w: w.clone(), t: t.clone() });
            }
        }
    }
    out
}

/// The composition identities of the ideal of constant maps, symbolic
/// composition against pointwise composition, and the premorphism property of
/// each representative on `P_n`.
pub fn premorphism_ideal_check(n: usize, window: usize) -> Report {
    let mut r = Report::new("premorphisms of the polycyclic monoid");
    r.param("alphabet", n).param("window", window);

    let consts = constant_functors(n, 2.min(window));
    let affines: Vec<AffineMap> = all_sigmas(n, 1)
        .into_iter()
        .flat_map(|sigma| all_words(n, 1).into_iter().map(move |w| AffineMap::new(sigma.clone(), w).expect("valid")))
        .collect();
    r.value("constant representatives", consts.len()).value("affine representatives", affines.len());

    let same = |a: &WindowFunctor, b: &OrderedFunctor| *a == b.to_window(n, window);

    let mut bad = None;
    for x in &consts {
        for y in &consts {
            let (OrderedFunctor::Constant { .. }, OrderedFunctor::Constant { t, .. }) = (x, y) else { continue };
            let expected = OrderedFunctor::Constant { w: t.clone(), t: t.clone() };
            if !same(&compose_on_window(x, y, n, window), &expected) && bad.is_none() {
                bad = Some(format!("{x} {y}"));
            }
        }
    }
    r.check("c_{u,s} c_{v,t} = c_{t,t}", bad.is_none(), bad.unwrap_or_default());

    let mut left = None;
    let mut right = None;
    for c in &consts {
        let OrderedFunctor::Constant { w: v, t } = c else { continue };
        for a in &affines {
            let af = OrderedFunctor::Affine(a.clone());
            let expected = OrderedFunctor::Constant { w: a.apply(v), t: a.apply(t) };
            if !same(&compose_on_window(c, &af, n, window), &expected) && left.is_none() {
                left = Some(format!("{c} {af}"));
            }
            if !same(&compose_on_window(&af, c, n, window), c) && right.is_none() {
                right = Some(format!("{af} {c}"));
            }
        }
    }
    r.check("c_{v,t} sigma rho_w = c_{(v sigma)w,(t sigma)w}", left.is_none(), left.unwrap_or_default());
    r.check("sigma rho_w c_{v,t} = c_{v,t}", right.is_none(), right.unwrap_or_default());

    let zero = OrderedFunctor::ConstantZero;
    let mut reps: Vec<OrderedFunctor> = vec![zero.clone()];
    reps.extend(consts.iter().cloned());
    reps.extend(affines.iter().cloned().map(OrderedFunctor::Affine));

    let right_zero = reps.iter().all(|f| same(&compose_on_window(f, &zero, n, window), &zero));
    r.check("c_0 is a right zero", right_zero, "");
    let left_affine = affines
        .iter()
        .all(|a| same(&compose_on_window(&zero, &OrderedFunctor::Affine(a.clone()), n, window), &zero));
    r.check("c_0 sigma rho_w = c_0", left_affine, "");
    let left_const = consts.iter().all(|c| {
        let OrderedFunctor::Constant { w: v, .. } = c else { return false };
        same(&compose_on_window(&zero, c, n, window), &OrderedFunctor::Constant { w: v.clone(), t: v.clone() })
    });
    r.check("c_0 c_{v,t} = c_{v,v}", left_const, "so c_0 is not a left zero for constant maps");

    let mut symbolic = None;
    for f in &reps {
        for g in &reps {
            if !same(&compose_on_window(f, g, n, window), &f.then(g)) && symbolic.is_none() {
                symbolic = Some(format!("{f} {g}"));
            }
        }
    }
    r.check("symbolic composition matches pointwise", symbolic.is_none(), symbolic.unwrap_or_default());

    let elem_len = 2.min(window);
    let mut prem = None;
    for f in &reps {
        if let Some((x, y)) = premorphism_violation(f, n, elem_len) {
            prem.get_or_insert(format!("{f} at {x}, {y}"));
        }
    }
    r.check(
        "each type induces a premorphism",
        prem.is_none(),
        prem.unwrap_or_else(|| format!("{} maps, components up to length {elem_len}", reps.len())),
    );

    let id = OrderedFunctor::Affine(AffineMap::identity(n));
    let identity = all_elements(n, elem_len).iter().all(|x| id.eval_elem(x) == *x);
    r.check("identity affine map induces the identity", identity, "");
    r
}

/// A map to classify and, when it is built from an ordered functor, that functor.
pub struct Candidate {
    pub name: String,
    pub map: WindowFunctor,
    pub expected: Option<OrderedFunctor>,
}

/// Candidates for classification: every type the trichotomy allows, constant
/// maps out of order, random suffix maps, window-only functors with
/// `0 ↦ w`, and arbitrary maps.
pub fn classification_candidates(n: usize, window: usize, seed: u64) -> Vec<Candidate> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let words = all_words(n, window);
    let small = all_words(n, 2);
    let typed = |f: OrderedFunctor| Candidate { name: f.to_string(), map: f.to_window(n, window), expected: Some(f) };
    let mut out = vec![typed(OrderedFunctor::ConstantZero)];
    for w in &small {
        for t in &small {
            if suffix_leq(w, t) {
                out.push(typed(OrderedFunctor::Constant { w: w.clone(), t: t.clone() }));
            } else {
                let map = WindowFunctor::from_fn(n, window, Some(w.clone()), |_| Some(t.clone()));
                out.push(Candidate { name: format!("0 -> {w}, words -> {t}"), map, expected: None });
            }
        }
    }
    for sigma in all_sigmas(n, 2) {
        for w in all_words(n, 1) {
            out.push(typed(OrderedFunctor::Affine(AffineMap::new(sigma.clone(), w).expect("valid"))));
        }
    }
    for k in 0..20 {
        let m = super::zappa::SuffixMap::random(n, window, 1, &mut rng);
        let map = WindowFunctor::from_fn(n, window, None, |u| Some(m.get(u).clone()));
        out.push(Candidate { name: format!("random suffix map #{k}"), map, expected: None });
    }
    let a = Word::letter(n, 0);
    for extra in 0..3 {
        let w = a.power(window + extra);
        let map = WindowFunctor::from_fn(n, window, Some(w.clone()), |u| Some(a.power(u.len())));
        out.push(Candidate { name: format!("0 -> {w}, u -> a^|u|"), map, expected: None });
    }
    for k in 0..20 {
        let zero_image = if rng.random_bool(0.5) { None } else { Some(words[rng.random_range(0..words.len())].clone()) };
        let images: Vec<Idem> = words
            .iter()
            .map(|_| if rng.random_bool(0.1) { None } else { Some(words[rng.random_range(0..words.len())].clone()) })
            .collect();
        out.push(Candidate { name: format!("arbitrary #{k}"), map: WindowFunctor { n, window, zero_image, images }, expected: None });
    }
    out
}

/// Classifies every candidate; classified maps must be reproduced by their
/// parameters and be premorphisms, rejections must carry a confirmed witness,
/// and maps built from a known type must get that type back.
pub fn classification_check(n: usize, window: usize, seed: u64) -> Report {
    let mut r = Report::new("ordered functor classification");
    r.param("alphabet", n).param("window", window).param("seed", seed);
    let candidates = classification_candidates(n, window, seed);
    let (mut zero, mut constant, mut affine, mut rejected) = (0, 0, 0, 0);
    let mut unconfirmed = None;
    let mut unfaithful = None;
    let mut not_prem = None;
    let mut expected_bad = None;
    for c in &candidates {
        let class = classify_ordered_functor(&c.map);
        if let Some(e) = &c.expected {
            if class != Classification::Functor(e.clone()) {
                expected_bad.get_or_insert(format!("{} classified as {class:?}", c.name));
            }
        }
        match class {
            Classification::Functor(g) => {
                match &g {
                    OrderedFunctor::ConstantZero => zero += 1,
                    OrderedFunctor::Constant { .. } => constant += 1,
                    OrderedFunctor::Affine(_) => affine += 1,
                }
                if g.to_window(n, window) != c.map {
                    unfaithful.get_or_insert(format!("{} as {g}", c.name));
                }
                if let Some((x, y)) = premorphism_violation(&g, n, 2.min(window)) {
                    not_prem.get_or_insert(format!("{} at {x}, {y}", c.name));
                }
            }
            Classification::NotOrderedFunctor(w) => {
                rejected += 1;
                if !w.confirms(&c.map) {
                    unconfirmed.get_or_insert(format!("{}: {w}", c.name));
                }
            }
        }
    }
    r.value("candidates", candidates.len())
        .value("constant zero", zero)
        .value("c_{w,t}", constant)
        .value("affine", affine)
        .value("rejected", rejected);
    r.check("classified maps are reproduced by their parameters", unfaithful.is_none(), unfaithful.unwrap_or_default());
    r.check("classified maps are premorphisms", not_prem.is_none(), not_prem.unwrap_or_default());
    r.check("every rejection has a confirmed witness", unconfirmed.is_none(), unconfirmed.unwrap_or_default());
    r.check("known types classify as expected", expected_bad.is_none(), expected_bad.unwrap_or_default());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(2, s).unwrap()
    }

    #[test]
    fn trichotomy_examples() {
        let zero = WindowFunctor::from_fn(2, 3, None, |_| None);
        assert_eq!(classify_ordered_functor(&zero), Classification::Functor(OrderedFunctor::ConstantZero));

        let c = WindowFunctor::from_fn(2, 3, Some(w("ba")), |_| Some(w("a")));
        assert_eq!(
            classify_ordered_functor(&c),
            Classification::Functor(OrderedFunctor::Constant { w: w("ba"), t: w("a") })
        );

        let a = AffineMap::new(vec![w("aa"), w("ba")], w("b")).unwrap();
        let f = OrderedFunctor::Affine(a.clone()).to_window(2, 3);
        assert_eq!(classify_ordered_functor(&f), Classification::Functor(OrderedFunctor::Affine(a)));
    }

    #[test]
    fn rejections_carry_witnesses() {
        let out_of_order = WindowFunctor::from_fn(2, 3, Some(w("a")), |_| Some(w("b")));
        let Classification::NotOrderedFunctor(wit) = classify_ordered_functor(&out_of_order) else { panic!() };
        assert!(wit.confirms(&out_of_order));

        let chain = WindowFunctor::from_fn(2, 3, Some(w("aaaaa")), |u| Some(Word::letter(2, 0).power(u.len())));
        match classify_ordered_functor(&chain) {
            Classification::NotOrderedFunctor(wit @ Witness::UnboundedChain { .. }) => assert!(wit.confirms(&chain)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ideal_identities() {
        let r = premorphism_ideal_check(2, 3);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn classification_of_candidates() {
        let r = classification_check(2, 3, 11);
        assert!(r.all_passed(), "{r}");
    }
}
