//! The holomorph `Hol(S)`: pairs `(α, τ)` of a premorphism and an ordered
//! family `τ: E(S) → S` with `(eτ)(eτ)⁻¹ = eα`, under the groupoid and
//! monoid compositions, acting on `S` on the right.
//!
//! `τ` is stored by idempotent position, in the order of
//! [`InverseSemigroup::idempotents`].

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::morphisms::{enumerate_premorphisms, is_endomorphism, is_premorphism, ElementMap};
use crate::report::Report;
use crate::search::{bucket_by_max, enumerate_maps, Budget};
use crate::semigroup::InverseSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HolElement {
    pub alpha: ElementMap,
    pub tau: Vec<usize>,
}

impl HolElement {
    /// `(id, e ↦ e)`.
    pub fn identity(s: &InverseSemigroup) -> Self {
        HolElement { alpha: ElementMap::identity(s.len()), tau: s.idempotents().to_vec() }
    }

    /// `eτ` for an idempotent `e`.
    pub fn tau_at(&self, s: &InverseSemigroup, e: usize) -> usize {
        self.tau[s.idempotent_position(e).expect("argument is idempotent")]
    }
}

/// First violated invariant of a candidate element, if any.
pub fn hol_element_violation(s: &InverseSemigroup, x: &HolElement) -> Option<String> {
    if x.alpha.len() != s.len() || x.tau.len() != s.idempotents().len() {
        return Some("wrong shape".into());
    }
    if !is_premorphism(s, s, x.alpha.theta()) {
        return Some("alpha is not a premorphism".into());
    }
    let es = s.idempotents();
    for (i, &e) in es.iter().enumerate() {
        if s.dom(x.tau[i]) != x.alpha.apply(e) {
            return Some(format!("domain condition fails at idempotent {e}"));
        }
        for (j, &f) in es.iter().enumerate() {
            if s.natural_leq(e, f) && !s.natural_leq(x.tau[i], x.tau[j]) {
                return Some(format!("tau not ordered at ({e}, {f})"));
            }
        }
    }
    None
}

/// `(αβ, ψ)` with `eψ = (eτ)β · ((eτ)⁻¹(eτ))σ`.
pub fn hol_diamond(s: &InverseSemigroup, x: &HolElement, y: &HolElement) -> HolElement {
    let tau = x
        .tau
        .iter()
        .map(|&t| s.mul(y.alpha.apply(t), y.tau_at(s, s.ran(t))))
        .collect();
    HolElement { alpha: x.alpha.then(&y.alpha), tau }
}

/// The premorphism `s ↦ ((ss⁻¹)τ)⁻¹ · sα · (s⁻¹s)τ` at which `x` ends.
pub fn target_functor(s: &InverseSemigroup, x: &HolElement) -> ElementMap {
    ElementMap::new(
        (0..s.len())
            .map(|a| s.mul3(s.inv(x.tau_at(s, s.dom(a))), x.alpha.apply(a), x.tau_at(s, s.ran(a))))
            .collect(),
    )
}

/// Groupoid composite `(α, e ↦ eτ·eσ)`, defined when `y` starts where `x`
/// ends.
pub fn hol_groupoid_compose(s: &InverseSemigroup, x: &HolElement, y: &HolElement) -> Option<HolElement> {
    if target_functor(s, x) != y.alpha {
        return None;
    }
    let tau = x.tau.iter().zip(&y.tau).map(|(&a, &b)| s.mul(a, b)).collect();
    Some(HolElement { alpha: x.alpha.clone(), tau })
}

/// `(β, e ↦ (eτ)⁻¹)` where `β` is the target of `x`.
pub fn hol_groupoid_inverse(s: &InverseSemigroup, x: &HolElement) -> HolElement {
    HolElement { alpha: target_functor(s, x), tau: x.tau.iter().map(|&t| s.inv(t)).collect() }
}

/// `t ◁ (α, τ) = tα · (t⁻¹t)τ`.
pub fn hol_action(s: &InverseSemigroup, t: usize, x: &HolElement) -> usize {
    s.mul(x.alpha.apply(t), x.tau_at(s, s.ran(t)))
}

/// All ordered `τ` compatible with `alpha`, lexicographic.
pub fn enumerate_taus(s: &InverseSemigroup, alpha: &ElementMap, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let es = s.idempotents();
    let candidates: Vec<Vec<usize>> =
        es.iter().map(|&e| (0..s.len()).filter(|&x| s.dom(x) == alpha.apply(e)).collect()).collect();
    let mut items = Vec::new();
    for i in 0..es.len() {
        for j in 0..es.len() {
            if i != j && s.natural_leq(es[i], es[j]) {
                items.push((i.max(j), (i, j)));
            }
        }
    }
    let buckets = bucket_by_max(es.len(), items);
    enumerate_maps(&candidates, budget, |k, p| buckets[k].iter().all(|&(i, j)| s.natural_leq(p[i], p[j])))
}

pub fn enumerate_holomorph_from(
    s: &InverseSemigroup,
    prems: &[ElementMap],
    budget: &Budget,
) -> Result<Vec<HolElement>> {
    let parts: Vec<Result<Vec<HolElement>>> = prems
        .par_iter()
        .map(|alpha| {
            Ok(enumerate_taus(s, alpha, budget)?
                .into_iter()
                .map(|tau| HolElement { alpha: alpha.clone(), tau })
                .collect())
        })
        .collect();
    let mut out = Vec::new();
    for p in parts {
        match p {
            Ok(v) => out.extend(v),
            Err(_) => return Err(budget.error(out.len())),
        }
    }
    Ok(out)
}

/// `Hol(S)` in lexicographic order of `(α, τ)`.
pub fn enumerate_holomorph(s: &InverseSemigroup, budget: &Budget) -> Result<Vec<HolElement>> {
    let prems = enumerate_premorphisms(s, budget)?;
    enumerate_holomorph_from(s, &prems, budget)
}

/// Indices of elements of a sorted `hol` that are invertible under `⋄`.
pub fn units(s: &InverseSemigroup, hol: &[HolElement]) -> Vec<usize> {
    let id = HolElement::identity(s);
    let mut by_alpha: HashMap<&ElementMap, Vec<usize>> = HashMap::new();
    for (i, x) in hol.iter().enumerate() {
        by_alpha.entry(&x.alpha).or_default().push(i);
    }
    (0..hol.len())
        .filter(|&i| {
            let x = &hol[i];
            if !x.alpha.is_injective() {
                return false;
            }
            let mut inv = vec![0; s.len()];
            for (a, &b) in x.alpha.theta().iter().enumerate() {
                inv[b] = a;
            }
            by_alpha.get(&ElementMap::new(inv)).is_some_and(|ys| {
                ys.iter().any(|&j| hol_diamond(s, x, &hol[j]) == id && hol_diamond(s, &hol[j], x) == id)
            })
        })
        .collect()
}

/// Element lookup for a sorted element list.
pub fn index_of(hol: &[HolElement], x: &HolElement) -> Option<usize> {
    hol.binary_search(x).ok()
}

/// Reconstructs `τ` from its values on maximal idempotents by restriction,
/// `eτ = (eα)(mτ)` for a maximal `m ≥ e`.
pub fn tau_from_maxima(s: &InverseSemigroup, x: &HolElement) -> Vec<usize> {
    let maxima = s.maximal_idempotents();
    s.idempotents()
        .iter()
        .map(|&e| {
            let m = *maxima.iter().find(|&&m| s.natural_leq(e, m)).expect("finite semilattices have maxima above each e");
            s.mul(x.alpha.apply(e), x.tau_at(s, m))
        })
        .collect()
}

/// Largest element count for which cubic checks are run exhaustively.
pub const EXHAUSTIVE_CUBE_LIMIT: usize = 400;

/// Monoid, action and groupoid checks over an enumerated `Hol(S)`.
///
/// Associativity and the action law are cubic; above
/// [`EXHAUSTIVE_CUBE_LIMIT`] elements they run on every triple whose first
/// two entries lie in a prefix of that length, and the report says so.
pub fn verify_holomorph(s: &InverseSemigroup, hol: &[HolElement]) -> Report {
    let mut r = Report::new("holomorph");
    r.value("elements", hol.len());
    let id = HolElement::identity(s);
    let invalid = hol.iter().position(|x| hol_element_violation(s, x).is_some());
    r.check(
        "every element satisfies the invariants",
        invalid.is_none(),
        invalid.map(|i| format!("#{i}: {}", hol_element_violation(s, &hol[i]).unwrap())).unwrap_or_default(),
    );
    let has_id = index_of(hol, &id).is_some();
    r.check("identity (id, e -> e) present", has_id, "");
    let unit = hol.iter().position(|x| hol_diamond(s, &id, x) != *x || hol_diamond(s, x, &id) != *x);
    r.check("identity is two-sided", unit.is_none(), unit.map(|i| format!("#{i}")).unwrap_or_default());

    let mut product = HashMap::new();
    let mut closure = None;
    for (i, x) in hol.iter().enumerate() {
        for (j, y) in hol.iter().enumerate() {
            match index_of(hol, &hol_diamond(s, x, y)) {
                Some(k) => {
                    product.insert((i, j), k);
                }
                None => {
                    closure.get_or_insert(format!("#{i} diamond #{j}"));
                }
            }
        }
    }
    r.check("closed under diamond", closure.is_none(), closure.clone().unwrap_or_default());

    let prefix = hol.len().min(EXHAUSTIVE_CUBE_LIMIT);
    if prefix < hol.len() {
        r.value("associativity and action checked on first", format!("{prefix} x {prefix} x {}", hol.len()));
    }
    if closure.is_none() {
        let mul = |a: usize, b: usize| product[&(a, b)];
        let assoc = (0..prefix)
            .into_par_iter()
            .find_map_first(|a| {
                for b in 0..prefix {
                    let ab = mul(a, b);
                    for c in 0..hol.len() {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Some(format!("(#{a}, #{b}, #{c})"));
                        }
                    }
                }
                None
            });
        r.check("diamond is associative", assoc.is_none(), assoc.unwrap_or_default());
        let action = (0..prefix).into_par_iter().find_map_first(|a| {
            for b in 0..hol.len() {
                let ab = &hol[mul(a, b)];
                for t in 0..s.len() {
                    if hol_action(s, t, ab) != hol_action(s, hol_action(s, t, &hol[a]), &hol[b]) {
                        return Some(format!("t={t}, #{a}, #{b}"));
                    }
                }
            }
            None
        });
        r.check("action respects diamond", action.is_none(), action.unwrap_or_default());
    }
    let id_acts = (0..s.len()).find(|&t| hol_action(s, t, &id) != t);
    r.check("identity acts trivially", id_acts.is_none(), id_acts.map(|t| t.to_string()).unwrap_or_default());

    let groupoid = hol.iter().enumerate().find_map(|(i, x)| {
        let inv = hol_groupoid_inverse(s, x);
        if index_of(hol, &inv).is_none() {
            return Some(format!("#{i}: groupoid inverse missing"));
        }
        let left = hol_groupoid_compose(s, x, &inv)?;
        let dom_id = HolElement { alpha: x.alpha.clone(), tau: s.idempotents().iter().map(|&e| x.alpha.apply(e)).collect() };
        (left != dom_id).then(|| format!("#{i}: x . x^-1 is not an identity"))
    });
    r.check("groupoid inverses compose to identities", groupoid.is_none(), groupoid.unwrap_or_default());

    let maxima = hol.iter().position(|x| tau_from_maxima(s, x) != x.tau);
    r.check("tau determined by maximal idempotents", maxima.is_none(), maxima.map(|i| format!("#{i}")).unwrap_or_default());
    r
}

/// Outcome of sweeping all composable quadruples for the interchange law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterchangeOutcome {
    pub composable_pairs: usize,
    pub quadruples: u64,
    pub witness: Option<String>,
}

/// `(xy) ⋄ (zw) = (x ⋄ z)(y ⋄ w)` whenever `xy` and `zw` are defined.
pub fn verify_interchange(s: &InverseSemigroup, hol: &[HolElement]) -> (Report, InterchangeOutcome) {
    let mut by_alpha: HashMap<&ElementMap, Vec<usize>> = HashMap::new();
    for (i, x) in hol.iter().enumerate() {
        by_alpha.entry(&x.alpha).or_default().push(i);
    }
    let mut pairs = Vec::new();
    for (i, x) in hol.iter().enumerate() {
        let target = target_functor(s, x);
        if let Some(ys) = by_alpha.get(&target) {
            for &j in ys {
                let xy = hol_groupoid_compose(s, x, &hol[j]).expect("alpha matches target");
                pairs.push((i, j, xy));
            }
        }
    }
    let witness = pairs.par_iter().find_map_first(|(x, y, xy)| {
        for (z, w, zw) in &pairs {
            let lhs = hol_diamond(s, xy, zw);
            let xz = hol_diamond(s, &hol[*x], &hol[*z]);
            let yw = hol_diamond(s, &hol[*y], &hol[*w]);
            match hol_groupoid_compose(s, &xz, &yw) {
                Some(rhs) if rhs == lhs => {}
                Some(_) => return Some(format!("x=#{x}, y=#{y}, z=#{z}, w=#{w}: sides differ")),
                None => return Some(format!("x=#{x}, y=#{y}, z=#{z}, w=#{w}: right side undefined")),
            }
        }
        None
    });
    let outcome = InterchangeOutcome {
        composable_pairs: pairs.len(),
        quadruples: (pairs.len() as u64).pow(2),
        witness,
    };
    let mut r = Report::new("interchange law");
    r.value("composable pairs", outcome.composable_pairs);
    r.value("quadruples", outcome.quadruples);
    r.check("interchange law", outcome.witness.is_none(), outcome.witness.clone().unwrap_or_default());
    (r, outcome)
}

/// Monoid form `(α, m)` with `mm⁻¹ = 1α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonHolElement {
    pub alpha: ElementMap,
    pub m: usize,
}

/// `(αβ, (mβ)n)`.
pub fn mon_diamond(s: &InverseSemigroup, x: &MonHolElement, y: &MonHolElement) -> MonHolElement {
    MonHolElement { alpha: x.alpha.then(&y.alpha), m: s.mul(y.alpha.apply(x.m), y.m) }
}

/// `t ◁ (α, m) = (tα)m`.
pub fn mon_action(s: &InverseSemigroup, t: usize, x: &MonHolElement) -> usize {
    s.mul(x.alpha.apply(t), x.m)
}

pub fn to_mon(s: &InverseSemigroup, x: &HolElement) -> Result<MonHolElement> {
    let one = s.identity().ok_or(Error::NotMonoid)?;
    Ok(MonHolElement { alpha: x.alpha.clone(), m: x.tau_at(s, one) })
}

/// `eτ = (eα)m`.
pub fn from_mon(s: &InverseSemigroup, x: &MonHolElement) -> HolElement {
    HolElement { alpha: x.alpha.clone(), tau: s.idempotents().iter().map(|&e| s.mul(x.alpha.apply(e), x.m)).collect() }
}

/// `Hol(M)` in monoid form, sorted.
pub fn mon_hol(s: &InverseSemigroup, prems: &[ElementMap]) -> Result<Vec<MonHolElement>> {
    let one = s.identity().ok_or(Error::NotMonoid)?;
    let mut out = Vec::new();
    for alpha in prems {
        let d = alpha.apply(one);
        for m in 0..s.len() {
            if s.dom(m) == d {
                out.push(MonHolElement { alpha: alpha.clone(), m });
            }
        }
    }
    Ok(out)
}

/// `End(M) ⋉ M` inside the monoid form.
pub fn end_semidirect(s: &InverseSemigroup, mon: &[MonHolElement]) -> Vec<MonHolElement> {
    mon.iter().filter(|x| is_endomorphism(s, x.alpha.theta())).cloned().collect()
}

/// Checks the monoid form against the pair form.
pub fn verify_mon_hol(s: &InverseSemigroup, hol: &[HolElement], prems: &[ElementMap]) -> Result<Report> {
    let mon = mon_hol(s, prems)?;
    let mut r = Report::new("monoid form of the holomorph");
    r.value("pairs (alpha, m)", mon.len());
    r.check("same size as pair form", mon.len() == hol.len(), format!("{} vs {}", mon.len(), hol.len()));
    let roundtrip = hol.iter().position(|x| to_mon(s, x).map(|m| from_mon(s, &m) != *x).unwrap_or(true));
    r.check("tau = (e alpha) m recovers every element", roundtrip.is_none(), roundtrip.map(|i| format!("#{i}")).unwrap_or_default());
    let image_ok = mon.iter().all(|x| index_of(hol, &from_mon(s, x)).is_some());
    r.check("every (alpha, m) corresponds to an element", image_ok, "");
    let n = mon.len();
    let cap = n.min(EXHAUSTIVE_CUBE_LIMIT);
    let agree = (0..cap).into_par_iter().find_map_first(|i| {
        for j in 0..n {
            let a = from_mon(s, &mon_diamond(s, &mon[i], &mon[j]));
            if a != hol_diamond(s, &from_mon(s, &mon[i]), &from_mon(s, &mon[j])) {
                return Some(format!("({i}, {j})"));
            }
        }
        None
    });
    r.check("diamond agrees under the bijection", agree.is_none(), agree.unwrap_or_default());
    let assoc = (0..cap).into_par_iter().find_map_first(|i| {
        for j in 0..cap {
            let ij = mon_diamond(s, &mon[i], &mon[j]);
            for k in 0..n {
                if mon_diamond(s, &ij, &mon[k]) != mon_diamond(s, &mon[i], &mon_diamond(s, &mon[j], &mon[k])) {
                    return Some(format!("({i}, {j}, {k})"));
                }
            }
        }
        None
    });
    r.check("monoid form diamond is associative", assoc.is_none(), assoc.unwrap_or_default());
    let action = mon.iter().enumerate().find_map(|(i, x)| {
        let h = from_mon(s, x);
        (0..s.len()).find(|&t| mon_action(s, t, x) != hol_action(s, t, &h)).map(|t| format!("#{i} at {t}"))
    });
    r.check("actions agree", action.is_none(), action.unwrap_or_default());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::semigroup::{build_symmetric_inverse_monoid, FiniteGroup};

    fn hol_of(s: &InverseSemigroup) -> Vec<HolElement> {
        enumerate_holomorph(s, &Budget::default()).unwrap()
    }

    #[test]
    fn z3_diamond_example() {
        let s = FiniteGroup::cyclic(3).to_semigroup();
        let inversion = ElementMap::new(vec![0, 2, 1]);
        let x = HolElement { alpha: inversion.clone(), tau: vec![1] };
        let y = HolElement { alpha: inversion, tau: vec![2] };
        let z = hol_diamond(&s, &x, &y);
        assert_eq!(z, HolElement { alpha: ElementMap::identity(3), tau: vec![1] });
    }

    #[test]
    fn group_counts() {
        for (g, full, classical) in [
            (FiniteGroup::cyclic(2), 4, 2),
            (FiniteGroup::cyclic(3), 9, 6),
            (FiniteGroup::cyclic(4), 16, 8),
        ] {
            let s = g.to_semigroup();
            let hol = hol_of(&s);
            assert_eq!(hol.len(), full);
            assert_eq!(units(&s, &hol).len(), classical);
        }
    }

    #[test]
    fn group_composability_is_conjugation() {
        let s = FiniteGroup::symmetric(3).to_semigroup();
        let hol = hol_of(&s);
        for x in &hol {
            for y in &hol {
                let g = x.tau[0];
                let conj: Vec<usize> =
                    (0..6).map(|a| s.mul3(s.inv(g), x.alpha.apply(a), g)).collect();
                let defined = hol_groupoid_compose(&s, x, y);
                assert_eq!(defined.is_some(), conj == y.alpha.theta());
                if let Some(z) = defined {
                    assert_eq!(z.tau, vec![s.mul(x.tau[0], y.tau[0])]);
                }
            }
        }
    }

    #[test]
    fn mismatched_target_is_undefined() {
        let s = FiniteGroup::cyclic(3).to_semigroup();
        let x = HolElement { alpha: ElementMap::identity(3), tau: vec![1] };
        let y = HolElement { alpha: ElementMap::new(vec![0, 2, 1]), tau: vec![0] };
        assert!(hol_groupoid_compose(&s, &x, &y).is_none());
    }

    #[test]
    fn group_action_is_classical() {
        let s = FiniteGroup::cyclic(4).to_semigroup();
        for x in hol_of(&s) {
            for t in 0..4 {
                assert_eq!(hol_action(&s, t, &x), s.mul(x.alpha.apply(t), x.tau[0]));
            }
        }
    }

    #[test]
    fn verify_small_examples() {
        for s in [
            FiniteGroup::trivial().to_semigroup(),
            FiniteGroup::cyclic(3).to_semigroup(),
            catalog::two_chain(),
            catalog::y4(),
            catalog::clifford4().semigroup().clone(),
        ] {
            let hol = hol_of(&s);
            let r = verify_holomorph(&s, &hol);
            assert!(r.all_passed(), "{r}");
            let (r, _) = verify_interchange(&s, &hol);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn mon_form_matches() {
        for s in [FiniteGroup::cyclic(3).to_semigroup(), catalog::two_chain(), build_symmetric_inverse_monoid(2, 100).unwrap()] {
            let prems = enumerate_premorphisms(&s, &Budget::default()).unwrap();
            let hol = enumerate_holomorph_from(&s, &prems, &Budget::default()).unwrap();
            let r = verify_mon_hol(&s, &hol, &prems).unwrap();
            assert!(r.all_passed(), "{r}");
        }
        assert_eq!(mon_hol(&catalog::v3(), &[]), Err(Error::NotMonoid));
    }

    #[test]
    fn group_mon_form_is_semidirect() {
        let s = FiniteGroup::cyclic(3).to_semigroup();
        let prems = enumerate_premorphisms(&s, &Budget::default()).unwrap();
        let mon = mon_hol(&s, &prems).unwrap();
        for x in &mon {
            for y in &mon {
                let z = mon_diamond(&s, x, y);
                assert_eq!(z.m, s.mul(y.alpha.apply(x.m), y.m));
            }
        }
    }
}
