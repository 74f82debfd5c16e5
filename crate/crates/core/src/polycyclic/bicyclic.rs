//! The bicyclic monoid `B = ⟨a : aa⁻¹ = 1⟩`, its endomorphisms and `Hol(B)`.
//!
//! `(i, j)` stands for `a⁻ⁱaʲ`.

use std::fmt;

use serde::Serialize;

use crate::report::Report;

use super::element::PolyElement;
use super::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bicyclic {
    pub i: u64,
    pub j: u64,
}

impl Bicyclic {
    pub const ONE: Bicyclic = Bicyclic { i: 0, j: 0 };

    pub fn new(i: u64, j: u64) -> Self {
        Bicyclic { i, j }
    }

    pub fn inv(self) -> Self {
        Bicyclic { i: self.j, j: self.i }
    }

    pub fn is_idempotent(self) -> bool {
        self.i == self.j
    }

    pub fn to_poly(self) -> PolyElement {
        let a = Word::letter(1, 0);
        PolyElement::Pair(a.power(self.i as usize), a.power(self.j as usize))
    }

    pub fn from_poly(x: &PolyElement) -> Option<Self> {
        match x {
            PolyElement::Pair(u, v) if u.alphabet() == 1 => Some(Bicyclic::new(u.len() as u64, v.len() as u64)),
            _ => None,
        }
    }
}

impl fmt::Display for Bicyclic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

pub fn bicyclic_mul(x: Bicyclic, y: Bicyclic) -> Bicyclic {
    let m = x.j.max(y.i);
    Bicyclic { i: x.i + m - x.j, j: y.j + m - y.i }
}

/// `ν_{k,p}`, with `aν = a^{-p}a^{p+k}` and `a⁻ⁱaʲ ↦ a^{-ik-p}a^{jk+p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BicyclicEndo {
    pub k: u64,
    pub p: u64,
}

impl BicyclicEndo {
    pub const IDENTITY: BicyclicEndo = BicyclicEndo { k: 1, p: 0 };

    pub fn new(k: u64, p: u64) -> Self {
        BicyclicEndo { k, p }
    }

    pub fn apply(self, x: Bicyclic) -> Bicyclic {
        Bicyclic { i: x.i * self.k + self.p, j: x.j * self.k + self.p }
    }

    /// `self` first, then `other`.
    pub fn then(self, other: BicyclicEndo) -> BicyclicEndo {
        BicyclicEndo { k: self.k * other.k, p: self.p * other.k + other.p }
    }
}

impl fmt::Display for BicyclicEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nu({}, {})", self.k, self.p)
    }
}

pub fn bicyclic_endo(k: u64, p: u64) -> BicyclicEndo {
    BicyclicEndo::new(k, p)
}

/// `(a⁻ⁱaʲ)ν` as `(aν)⁻ⁱ(aν)ʲ`; at `i = j = 0` the image of `1` is
/// `(aν)(aν)⁻¹`, not the empty product.
fn endo_via_generator(e: BicyclicEndo, x: Bicyclic) -> Bicyclic {
    let g = Bicyclic::new(e.p, e.p + e.k);
    if x.i == 0 && x.j == 0 {
        return bicyclic_mul(g, g.inv());
    }
    let mut acc: Option<Bicyclic> = None;
    let factors = std::iter::repeat_n(g.inv(), x.i as usize).chain(std::iter::repeat_n(g, x.j as usize));
    for f in factors {
        acc = Some(match acc {
            None => f,
            Some(a) => bicyclic_mul(a, f),
        });
    }
    acc.expect("nonempty product")
}

/// An element of `Hol(B)` in monoid form: `(ν_{k,p}, a^{-p}a^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BicyclicHol {
    pub nu: BicyclicEndo,
    pub m: u64,
}

impl BicyclicHol {
    pub fn translation(self) -> Bicyclic {
        Bicyclic::new(self.nu.p, self.m)
    }

    /// `(α, m) ⋄ (β, n) = (αβ, (mβ)n)`.
    pub fn diamond(self, other: BicyclicHol) -> Option<BicyclicHol> {
        let t = bicyclic_mul(other.nu.apply(self.translation()), other.translation());
        let nu = self.nu.then(other.nu);
        (t.i == nu.p).then_some(BicyclicHol { nu, m: t.j })
    }

    /// The semidirect product `Aff(ℕ) ⋉ ℕ`, with `Aff(ℕ)` acting on `ℕ`
    /// through its linear part.
    pub fn semidirect(self, other: BicyclicHol) -> BicyclicHol {
        BicyclicHol { nu: self.nu.then(other.nu), m: self.m * other.nu.k + other.m }
    }

    /// `τ` on the idempotent `a^{-e}a^e`: `(eν)m`.
    pub fn tau(self, e: u64) -> Bicyclic {
        bicyclic_mul(self.nu.apply(Bicyclic::new(e, e)), self.translation())
    }

    /// `t ◁ (ν, m) = (tν)m`.
    pub fn act(self, t: Bicyclic) -> Bicyclic {
        bicyclic_mul(self.nu.apply(t), self.translation())
    }
}

/// Composite of `x` then `y` computed in `(α, τ)` form on the idempotent `e`:
/// `eψ = (eτ)β · ((eτ)⁻¹(eτ))σ`.
fn tau_form_diamond(x: BicyclicHol, y: BicyclicHol, e: u64) -> Bicyclic {
    let t = x.tau(e);
    let ran = bicyclic_mul(t.inv(), t);
    bicyclic_mul(y.nu.apply(t), y.tau(ran.j))
}

/// Multiplication, endomorphism formula and composition law on `i, j ≤ window`
/// and `k, p ≤ params`.
pub fn bicyclic_endo_check(window: u64, params: u64) -> Report {
    let mut r = Report::new("bicyclic endomorphisms");
    r.param("window", window).param("k, p bound", params);

    let elems: Vec<Bicyclic> =
        (0..=window).flat_map(|i| (0..=window).map(move |j| Bicyclic::new(i, j))).collect();
    let endos: Vec<BicyclicEndo> =
        (0..=params).flat_map(|k| (0..=params).map(move |p| BicyclicEndo::new(k, p))).collect();

    let mut oracle_bad = None;
    for &x in &elems {
        for &y in &elems {
            let z = Bicyclic::from_poly(&x.to_poly().times(&y.to_poly())).expect("n = 1");
            if z != bicyclic_mul(x, y) && oracle_bad.is_none() {
                oracle_bad = Some(format!("{x}*{y}"));
            }
        }
    }
    r.check("product matches P_1", oracle_bad.is_none(), oracle_bad.unwrap_or_else(|| format!("{} pairs", elems.len().pow(2))));

    let monoid = elems.iter().all(|&x| bicyclic_mul(Bicyclic::ONE, x) == x && bicyclic_mul(x, Bicyclic::ONE) == x)
        && elems.iter().all(|&x| {
            elems.iter().all(|&y| {
                elems.iter().all(|&z| bicyclic_mul(bicyclic_mul(x, y), z) == bicyclic_mul(x, bicyclic_mul(y, z)))
            })
        });
    r.check("monoid with identity (0, 0)", monoid, "");

    let mut mult_bad = None;
    let mut formula_bad = None;
    for &e in &endos {
        for &x in &elems {
            if e.apply(x) != endo_via_generator(e, x) && formula_bad.is_none() {
                formula_bad = Some(format!("{e} at {x}"));
            }
            for &y in &elems {
                if e.apply(bicyclic_mul(x, y)) != bicyclic_mul(e.apply(x), e.apply(y)) && mult_bad.is_none() {
                    mult_bad = Some(format!("{e} at {x}, {y}"));
                }
            }
        }
    }
    r.check("formula matches generator image", formula_bad.is_none(), formula_bad.unwrap_or_default());
    r.check("multiplicative", mult_bad.is_none(), mult_bad.unwrap_or_default());

    let mut comp_bad = None;
    for &e in &endos {
        for &f in &endos {
            let g = e.then(f);
            if elems.iter().any(|&x| g.apply(x) != f.apply(e.apply(x))) && comp_bad.is_none() {
                comp_bad = Some(format!("{e} then {f}"));
            }
        }
    }
    r.check("composition is affine", comp_bad.is_none(), comp_bad.unwrap_or_default());
    r
}

/// `Hol(B)` against `Aff(ℕ) ⋉ ℕ` on all parameters `≤ window`.
pub fn bicyclic_hol_check(window: u64) -> Report {
    let mut r = Report::new("bicyclic holomorph");
    r.param("window", window);

    let endos: Vec<BicyclicEndo> =
        (0..=window).flat_map(|k| (0..=window).map(move |p| BicyclicEndo::new(k, p))).collect();

    let mut shape_bad = None;
    for &nu in &endos {
        for l in 0..=window {
            for m in 0..=window {
                let t = Bicyclic::new(l, m);
                let valid = bicyclic_mul(t, t.inv()) == nu.apply(Bicyclic::ONE);
                if valid != (l == nu.p) && shape_bad.is_none() {
                    shape_bad = Some(format!("{nu} with {t}"));
                }
            }
        }
    }
    r.check("translations are exactly a^-p a^m", shape_bad.is_none(), shape_bad.unwrap_or_default());

    let hol: Vec<BicyclicHol> =
        endos.iter().flat_map(|&nu| (0..=window).map(move |m| BicyclicHol { nu, m })).collect();
    r.value("elements in window", hol.len());

    let identity = BicyclicHol { nu: BicyclicEndo::IDENTITY, m: 0 };
    let neutral = hol.iter().all(|&x| identity.diamond(x) == Some(x) && x.diamond(identity) == Some(x));
    r.check("identity is neutral", neutral, "");

    let mut semi_bad = None;
    let mut tau_bad = None;
    let mut action_bad = None;
    for &x in &hol {
        for &y in &hol {
            let d = x.diamond(y);
            if d != Some(x.semidirect(y)) && semi_bad.is_none() {
                semi_bad = Some(format!("{x:?} with {y:?}"));
            }
            let Some(d) = d else { continue };
            if (0..=window).any(|e| d.tau(e) != tau_form_diamond(x, y, e)) && tau_bad.is_none() {
                tau_bad = Some(format!("{x:?} with {y:?}"));
            }
            for i in 0..=window {
                for j in 0..=window {
                    let t = Bicyclic::new(i, j);
                    if d.act(t) != y.act(x.act(t)) && action_bad.is_none() {
                        action_bad = Some(format!("{x:?} with {y:?} at {t}"));
                    }
                }
            }
        }
    }
    r.check("diamond equals Aff(N) semidirect N", semi_bad.is_none(), semi_bad.unwrap_or_default());
    r.check("monoid form agrees with (alpha, tau) form", tau_bad.is_none(), tau_bad.unwrap_or_default());
    r.check("action law", action_bad.is_none(), action_bad.unwrap_or_default());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        assert_eq!(bicyclic_mul(Bicyclic::new(1, 2), Bicyclic::new(1, 3)), Bicyclic::new(1, 4));
        assert_eq!(bicyclic_mul(Bicyclic::new(0, 1), Bicyclic::new(2, 0)), Bicyclic::new(1, 0));
        assert_eq!(bicyclic_mul(Bicyclic::ONE, Bicyclic::new(3, 5)), Bicyclic::new(3, 5));
    }

    #[test]
    fn endomorphisms() {
        let x = Bicyclic::new(1, 2);
        assert_eq!(bicyclic_endo(1, 0).apply(x), x);
        assert_eq!(bicyclic_endo(2, 1).apply(x), Bicyclic::new(3, 5));
        assert_eq!(bicyclic_endo(0, 1).apply(x), Bicyclic::new(1, 1));
        assert_eq!(endo_via_generator(bicyclic_endo(2, 1), x), Bicyclic::new(3, 5));
        assert_eq!(endo_via_generator(bicyclic_endo(3, 2), Bicyclic::ONE), Bicyclic::new(2, 2));
    }

    #[test]
    fn holomorph_composition() {
        let t = |m| BicyclicHol { nu: BicyclicEndo::IDENTITY, m };
        assert_eq!(t(2).diamond(t(3)), Some(t(5)));
        let x = BicyclicHol { nu: BicyclicEndo::new(2, 1), m: 3 };
        let y = BicyclicHol { nu: BicyclicEndo::new(3, 2), m: 1 };
        assert_eq!(x.diamond(y), Some(BicyclicHol { nu: BicyclicEndo::new(6, 5), m: 10 }));
    }

    #[test]
    fn reports_pass() {
        let r = bicyclic_endo_check(6, 4);
        assert!(r.all_passed(), "{r}");
        let r = bicyclic_hol_check(4);
        assert!(r.all_passed(), "{r}");
    }
}
