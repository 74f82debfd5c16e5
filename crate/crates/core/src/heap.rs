//! Ordered maps preserving the heap operation `⟨a,b,c⟩ = ab⁻¹c`, and their
//! embedding into the holomorph.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::holomorph::{
    end_semidirect, enumerate_holomorph_from, hol_action, hol_diamond, index_of, mon_diamond, mon_hol, to_mon,
    HolElement, MonHolElement,
};
use crate::morphisms::{enumerate_premorphisms, is_endomorphism, is_premorphism, ElementMap};
use crate::report::Report;
use crate::search::{bucket_by_max, enumerate_maps, Budget};
use crate::semigroup::InverseSemigroup;

/// An element of `Ш(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeapMap {
    pub eta: Vec<usize>,
}

impl HeapMap {
    /// `aφ = aη · ((a⁻¹a)η)⁻¹`.
    pub fn phi(&self, s: &InverseSemigroup) -> ElementMap {
        ElementMap::new((0..s.len()).map(|a| s.mul(self.eta[a], s.inv(self.eta[s.ran(a)]))).collect())
    }

    /// `η` restricted to idempotents.
    pub fn tau(&self, s: &InverseSemigroup) -> Vec<usize> {
        s.idempotents().iter().map(|&e| self.eta[e]).collect()
    }

    pub fn then(&self, other: &HeapMap) -> HeapMap {
        HeapMap { eta: self.eta.iter().map(|&x| other.eta[x]).collect() }
    }
}

pub fn heap(s: &InverseSemigroup, a: usize, b: usize, c: usize) -> usize {
    s.heap(a, b, c)
}

/// First triple where `η` fails to preserve the heap operation.
pub fn heap_violation(s: &InverseSemigroup, eta: &[usize]) -> Option<(usize, usize, usize)> {
    let n = s.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if eta[s.heap(a, b, c)] != s.heap(eta[a], eta[b], eta[c]) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn order_violation(s: &InverseSemigroup, eta: &[usize]) -> Option<(usize, usize)> {
    let n = s.len();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| s.natural_leq(a, b) && !s.natural_leq(eta[a], eta[b]))
}

pub fn is_sha(s: &InverseSemigroup, eta: &[usize]) -> bool {
    eta.len() == s.len() && order_violation(s, eta).is_none() && heap_violation(s, eta).is_none()
}

/// `Ш(S)` in lexicographic order, checked to be a monoid.
pub fn enumerate_sha(s: &InverseSemigroup, budget: &Budget) -> Result<Vec<HeapMap>> {
    let n = s.len();
    let mut items = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && s.natural_leq(a, b) {
                items.push((a.max(b), Constraint::Order(a, b)));
            }
            for c in 0..n {
                let h = s.heap(a, b, c);
                items.push((a.max(b).max(c).max(h), Constraint::Heap(a, b, c, h)));
            }
        }
    }
    let buckets = bucket_by_max(n, items);
    let candidates = vec![(0..n).collect::<Vec<_>>(); n];
    let maps = enumerate_maps(&candidates, budget, |k, p| {
        buckets[k].iter().all(|c| match *c {
            Constraint::Order(a, b) => s.natural_leq(p[a], p[b]),
            Constraint::Heap(a, b, c, h) => p[h] == s.heap(p[a], p[b], p[c]),
        })
    })?;
    let sha: Vec<HeapMap> = maps.into_iter().map(|eta| HeapMap { eta }).collect();
    let set: HashSet<&HeapMap> = sha.iter().collect();
    if !set.contains(&HeapMap { eta: (0..n).collect() }) {
        return Err(Error::Consistency("identity map is not heap preserving".into()));
    }
    for x in &sha {
        for y in &sha {
            if !set.contains(&x.then(y)) {
                return Err(Error::Consistency(format!("heap maps not closed: {:?} then {:?}", x.eta, y.eta)));
            }
        }
    }
    Ok(sha)
}

#[derive(Clone, Copy)]
enum Constraint {
    Order(usize, usize),
    Heap(usize, usize, usize, usize),
}

/// `η ↦ (φ_η, η|_E)`.
pub fn sha_embed(s: &InverseSemigroup, eta: &HeapMap) -> Result<HolElement> {
    if eta.eta.len() != s.len() {
        return Err(Error::NotHeapPreserving(format!("map has {} values for {} elements", eta.eta.len(), s.len())));
    }
    if let Some((a, b)) = order_violation(s, &eta.eta) {
        return Err(Error::NotHeapPreserving(format!("not ordered at ({a}, {b})")));
    }
    if let Some((a, b, c)) = heap_violation(s, &eta.eta) {
        return Err(Error::NotHeapPreserving(format!("heap fails at ({a}, {b}, {c})")));
    }
    Ok(HolElement { alpha: eta.phi(s), tau: eta.tau(s) })
}

/// Embedding, action and multiplicativity checks over `Ш(S)`, with an
/// optional comparison against the full holomorph.
pub fn verify_sha(s: &InverseSemigroup, sha: &[HeapMap], hol: Option<&[HolElement]>) -> Result<Report> {
    let mut r = Report::new("heap-preserving maps");
    r.value("sha size", sha.len());
    let images: Vec<HolElement> = sha.iter().map(|e| sha_embed(s, e)).collect::<Result<_>>()?;

    let phi_prem = images.iter().position(|x| !is_premorphism(s, s, x.alpha.theta()));
    r.check("phi_eta is a premorphism", phi_prem.is_none(), phi_prem.map(|i| format!("#{i}")).unwrap_or_default());
    let derivation = sha.iter().zip(&images).position(|(e, x)| {
        (0..s.len()).any(|a| {
            let d = s.ran(a);
            x.alpha.apply(d) != s.mul(e.eta[d], s.inv(e.eta[d]))
        })
    });
    r.check(
        "(a^-1 a) phi = (a^-1 a) eta ((a^-1 a) eta)^-1",
        derivation.is_none(),
        derivation.map(|i| format!("#{i}")).unwrap_or_default(),
    );
    let distinct: HashSet<&HolElement> = images.iter().collect();
    r.check("embedding is injective", distinct.len() == images.len(), "");
    let action = sha.iter().zip(&images).enumerate().find_map(|(i, (e, x))| {
        (0..s.len()).find(|&t| e.eta[t] != hol_action(s, t, x)).map(|t| format!("#{i} at {t}"))
    });
    r.check("s eta = s acted on by the image", action.is_none(), action.unwrap_or_default());
    let mult = (0..sha.len()).find_map(|i| {
        (0..sha.len()).find_map(|j| {
            let lhs = sha_embed(s, &sha[i].then(&sha[j])).ok()?;
            (lhs != hol_diamond(s, &images[i], &images[j])).then(|| format!("(#{i}, #{j})"))
        })
    });
    r.check("embedding is multiplicative", mult.is_none(), mult.unwrap_or_default());
    if let Some(hol) = hol {
        let missing = images.iter().position(|x| index_of(hol, x).is_none());
        r.check("image lies in Hol(S)", missing.is_none(), missing.map(|i| format!("#{i}")).unwrap_or_default());
    }
    Ok(r)
}

/// Compares `Ш(M)` with `End(M) ⋉ M` in the monoid form of `Hol(M)`.
pub fn verify_sha_monoid_iso(m: &InverseSemigroup, budget: &Budget) -> Result<Report> {
    m.identity().ok_or(Error::NotMonoid)?;
    let prems = enumerate_premorphisms(m, budget)?;
    let mon = mon_hol(m, &prems)?;
    let target = end_semidirect(m, &mon);
    let sha = enumerate_sha(m, budget)?;
    let images: Vec<MonHolElement> =
        sha.iter().map(|e| sha_embed(m, e).and_then(|x| to_mon(m, &x))).collect::<Result<_>>()?;

    let mut r = Report::new("heap maps versus End(M) x| M");
    r.value("sha size", sha.len());
    r.value("End(M) x| M size", target.len());
    let target_set: HashSet<&MonHolElement> = target.iter().collect();
    let image_set: HashSet<&MonHolElement> = images.iter().collect();
    let outside = images.iter().position(|x| !target_set.contains(x));
    r.check(
        "image inside End(M) x| M",
        outside.is_none(),
        outside.map(|i| format!("sha #{i} maps to alpha {:?}, m {}", images[i].alpha.theta(), images[i].m)).unwrap_or_default(),
    );
    let uncovered = target.iter().find(|x| !image_set.contains(x));
    r.check(
        "End(M) x| M inside image",
        uncovered.is_none(),
        uncovered.map(|x| format!("alpha {:?}, m {}", x.alpha.theta(), x.m)).unwrap_or_default(),
    );
    r.check("embedding is injective", image_set.len() == images.len(), "");
    let mult = (0..sha.len()).find_map(|i| {
        (0..sha.len()).find_map(|j| {
            let lhs = sha_embed(m, &sha[i].then(&sha[j])).and_then(|x| to_mon(m, &x)).ok()?;
            (lhs != mon_diamond(m, &images[i], &images[j])).then(|| format!("(#{i}, #{j})"))
        })
    });
    r.check("embedding is a monoid homomorphism", mult.is_none(), mult.unwrap_or_default());
    Ok(r)
}

/// For a semilattice of groups, the image of `Ш(S)` in `Hol(S)` is exactly
/// the set of elements whose premorphism is an endomorphism.
pub fn verify_sha_endomorphism_characterization(s: &InverseSemigroup, budget: &Budget) -> Result<Report> {
    let prems = enumerate_premorphisms(s, budget)?;
    let hol = enumerate_holomorph_from(s, &prems, budget)?;
    let sha = enumerate_sha(s, budget)?;
    let images: HashSet<HolElement> = sha.iter().map(|e| sha_embed(s, e)).collect::<Result<_>>()?;
    let endo: Vec<&HolElement> = hol.iter().filter(|x| is_endomorphism(s, x.alpha.theta())).collect();
    let mut r = Report::new("heap maps versus endomorphism part of Hol(S)");
    r.value("sha size", images.len());
    r.value("elements with endomorphism alpha", endo.len());
    let missing = endo.iter().find(|x| !images.contains(**x));
    r.check(
        "every endomorphism element is a heap map",
        missing.is_none(),
        missing.map(|x| format!("alpha {:?}, tau {:?}", x.alpha.theta(), x.tau)).unwrap_or_default(),
    );
    let extra = images.iter().filter(|x| !is_endomorphism(s, x.alpha.theta())).min();
    r.check(
        "every heap map has endomorphism alpha",
        extra.is_none(),
        extra.map(|x| format!("alpha {:?}", x.alpha.theta())).unwrap_or_default(),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::semigroup::{build_symmetric_inverse_monoid, FiniteGroup};

    #[test]
    fn heap_examples() {
        let z5 = FiniteGroup::cyclic(5).to_semigroup();
        assert_eq!(heap(&z5, 1, 2, 4), 3);
        let i2 = build_symmetric_inverse_monoid(2, 100).unwrap();
        for a in 0..i2.len() {
            assert_eq!(heap(&i2, a, a, a), a);
            assert_eq!(heap(&i2, a, i2.ran(a), i2.ran(a)), a);
        }
    }

    #[test]
    fn z3_sha_matches_brute_force() {
        let s = FiniteGroup::cyclic(3).to_semigroup();
        let sha = enumerate_sha(&s, &Budget::default()).unwrap();
        let mut brute = Vec::new();
        for code in 0..27 {
            let eta = vec![code / 9, (code / 3) % 3, code % 3];
            if is_sha(&s, &eta) {
                brute.push(eta);
            }
        }
        assert_eq!(sha.iter().map(|h| h.eta.clone()).collect::<Vec<_>>(), brute);
        assert_eq!(sha.len(), 9);
    }

    #[test]
    fn translation_embeds_as_identity_with_tau_one() {
        let s = FiniteGroup::cyclic(3).to_semigroup();
        let x = sha_embed(&s, &HeapMap { eta: vec![1, 2, 0] }).unwrap();
        assert_eq!(x, HolElement { alpha: ElementMap::identity(3), tau: vec![1] });
        assert!(matches!(sha_embed(&s, &HeapMap { eta: vec![0, 0, 1] }), Err(Error::NotHeapPreserving(_))));
    }

    #[test]
    fn trivial_and_identity() {
        let t = FiniteGroup::trivial().to_semigroup();
        assert_eq!(enumerate_sha(&t, &Budget::default()).unwrap().len(), 1);
        let s = catalog::v3();
        let sha = enumerate_sha(&s, &Budget::default()).unwrap();
        assert!(sha.contains(&HeapMap { eta: vec![0, 1, 2] }));
        let r = verify_sha(&s, &sha, None).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn monoid_iso_small() {
        for m in [
            FiniteGroup::trivial().to_semigroup(),
            FiniteGroup::cyclic(2).to_semigroup(),
            FiniteGroup::cyclic(3).to_semigroup(),
            catalog::two_chain(),
        ] {
            let r = verify_sha_monoid_iso(&m, &Budget::default()).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn sog_characterization() {
        for sog in [catalog::clifford3(), catalog::clifford4()] {
            let r = verify_sha_endomorphism_characterization(sog.semigroup(), &Budget::default()).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }
}
