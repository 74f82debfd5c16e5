//! Ordered maps, premorphisms and endomorphisms of finite inverse semigroups.
//!
//! Maps act on the right: `x(θφ) = (xθ)φ`, so [`ElementMap::then`] applies
//! `self` first.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::search::{bucket_by_max, enumerate_maps, Budget};
use crate::semigroup::InverseSemigroup;
use crate::sog::{SemilatticeOfGroups, SemilatticeOfGroupsSpec};

/// A total map between element sets, with predicate results cached for the
/// source/target pair it is first queried against.
#[derive(Clone, Debug, Default)]
pub struct ElementMap {
    theta: Vec<usize>,
    ordered: OnceLock<bool>,
    premorphism: OnceLock<bool>,
    endomorphism: OnceLock<bool>,
}

impl ElementMap {
    pub fn new(theta: Vec<usize>) -> Self {
        ElementMap { theta, ..Default::default() }
    }

    pub fn identity(n: usize) -> Self {
        ElementMap::new((0..n).collect())
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn into_theta(self) -> Vec<usize> {
        self.theta
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.theta[x]
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &ElementMap) -> ElementMap {
        ElementMap::new(self.theta.iter().map(|&x| other.theta[x]).collect())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.theta.iter().max().map_or(0, |m| m + 1)];
        self.theta.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_ordered(&self, s: &InverseSemigroup, t: &InverseSemigroup) -> bool {
        *self.ordered.get_or_init(|| is_ordered(s, t, &self.theta))
    }

    pub fn is_premorphism(&self, s: &InverseSemigroup, t: &InverseSemigroup) -> bool {
        *self.premorphism.get_or_init(|| is_premorphism(s, t, &self.theta))
    }

    pub fn is_endomorphism(&self, s: &InverseSemigroup, t: &InverseSemigroup) -> bool {
        *self.endomorphism.get_or_init(|| is_homomorphism(s, t, &self.theta))
    }
}

impl PartialEq for ElementMap {
    fn eq(&self, other: &Self) -> bool {
        self.theta == other.theta
    }
}

impl Eq for ElementMap {}

impl Hash for ElementMap {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.theta.hash(state);
    }
}

impl PartialOrd for ElementMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.theta.cmp(&other.theta)
    }
}

impl From<Vec<usize>> for ElementMap {
    fn from(theta: Vec<usize>) -> Self {
        ElementMap::new(theta)
    }
}

pub fn is_ordered(s: &InverseSemigroup, t: &InverseSemigroup, theta: &[usize]) -> bool {
    (0..s.len()).all(|a| (0..s.len()).all(|b| !s.natural_leq(a, b) || t.natural_leq(theta[a], theta[b])))
}

/// `(ab)θ ≤ aθ·bθ` for all `a, b`.
pub fn is_premorphism(s: &InverseSemigroup, t: &InverseSemigroup, theta: &[usize]) -> bool {
    (0..s.len()).all(|a| (0..s.len()).all(|b| t.natural_leq(theta[s.mul(a, b)], t.mul(theta[a], theta[b]))))
}

/// `(ab)θ = aθ·bθ` for all `a, b`.
pub fn is_homomorphism(s: &InverseSemigroup, t: &InverseSemigroup, theta: &[usize]) -> bool {
    (0..s.len()).all(|a| (0..s.len()).all(|b| theta[s.mul(a, b)] == t.mul(theta[a], theta[b])))
}

pub fn is_endomorphism(s: &InverseSemigroup, theta: &[usize]) -> bool {
    is_homomorphism(s, s, theta)
}

/// Ordered and multiplicative on pairs with `a⁻¹a = bb⁻¹`.
pub fn is_ordered_and_composable_multiplicative(s: &InverseSemigroup, t: &InverseSemigroup, theta: &[usize]) -> bool {
    is_ordered(s, t, theta)
        && (0..s.len()).all(|a| {
            (0..s.len()).all(|b| s.ran(a) != s.dom(b) || theta[s.mul(a, b)] == t.mul(theta[a], theta[b]))
        })
}

/// Premorphism test that also checks it agrees with the ordered-functor
/// characterization.
pub fn is_premorphism_diagnostic(s: &InverseSemigroup, t: &InverseSemigroup, theta: &[usize]) -> Result<bool> {
    let direct = is_premorphism(s, t, theta);
    let functor = is_ordered_and_composable_multiplicative(s, t, theta);
    if direct != functor {
        return Err(Error::Consistency(format!(
            "premorphism test ({direct}) disagrees with ordered functor test ({functor}) for {theta:?}"
        )));
    }
    Ok(direct)
}

/// All premorphisms `S → T` in lexicographic order of their value vectors.
pub fn enumerate_premorphisms_between(
    s: &InverseSemigroup,
    t: &InverseSemigroup,
    budget: &Budget,
) -> Result<Vec<ElementMap>> {
    let n = s.len();
    let mut items = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = s.mul(a, b);
            items.push((a.max(b).max(ab), Constraint::Product(a, b, ab)));
            if a != b && s.natural_leq(a, b) {
                items.push((a.max(b), Constraint::Order(a, b)));
            }
        }
    }
    let buckets = bucket_by_max(n, items);
    let candidates = vec![(0..t.len()).collect::<Vec<_>>(); n];
    let maps = enumerate_maps(&candidates, budget, |k, p| {
        buckets[k].iter().all(|c| match *c {
            Constraint::Product(a, b, ab) => t.natural_leq(p[ab], t.mul(p[a], p[b])),
            Constraint::Order(a, b) => t.natural_leq(p[a], p[b]),
        })
    })?;
    Ok(maps.into_iter().map(ElementMap::new).collect())
}

#[derive(Clone, Copy)]
enum Constraint {
    Product(usize, usize, usize),
    Order(usize, usize),
}

/// `Prem(S)`, checked to be closed under composition.
pub fn enumerate_premorphisms(s: &InverseSemigroup, budget: &Budget) -> Result<Vec<ElementMap>> {
    let prems = enumerate_premorphisms_between(s, s, budget)?;
    if let Some(w) = closure_violation(&prems) {
        return Err(Error::Consistency(format!("premorphisms not closed under composition: {w}")));
    }
    Ok(prems)
}

/// `End(S)` in lexicographic order.
pub fn enumerate_endomorphisms(s: &InverseSemigroup, budget: &Budget) -> Result<Vec<ElementMap>> {
    let n = s.len();
    let items = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| {
        let ab = s.mul(a, b);
        (a.max(b).max(ab), (a, b, ab))
    });
    let buckets = bucket_by_max(n, items);
    let candidates = vec![(0..n).collect::<Vec<_>>(); n];
    let maps = enumerate_maps(&candidates, budget, |k, p| {
        buckets[k].iter().all(|&(a, b, ab)| p[ab] == s.mul(p[a], p[b]))
    })?;
    Ok(maps.into_iter().map(ElementMap::new).collect())
}

/// First pair whose composite is missing from a sorted list of maps.
pub fn closure_violation(maps: &[ElementMap]) -> Option<String> {
    if let Some(first) = maps.first() {
        if maps.binary_search(&ElementMap::identity(first.len())).is_err() {
            return Some("identity map missing".into());
        }
    }
    for (i, x) in maps.iter().enumerate() {
        for (j, y) in maps.iter().enumerate() {
            if maps.binary_search(&x.then(y)).is_err() {
                return Some(format!("maps #{i} then #{j}"));
            }
        }
    }
    None
}

/// Checks the structural laws every premorphism must obey.
pub fn verify_premorphism_laws(s: &InverseSemigroup, prems: &[ElementMap]) -> Report {
    let n = s.len();
    let mut r = Report::new("premorphism laws");
    r.value("premorphisms", prems.len());
    let find = |law: &dyn Fn(&ElementMap) -> Option<String>| -> Option<String> {
        prems.iter().enumerate().find_map(|(i, th)| law(th).map(|w| format!("premorphism #{i}: {w}")))
    };
    let idem = find(&|th| {
        s.idempotents().iter().find(|&&e| !s.is_idempotent(th.apply(e))).map(|e| format!("idempotent {e}"))
    });
    let inverse = find(&|th| {
        (0..n).find(|&a| th.apply(s.inv(a)) != s.inv(th.apply(a))).map(|a| format!("element {a}"))
    });
    let domain = find(&|th| {
        (0..n)
            .find(|&x| th.apply(s.dom(x)) != s.dom(th.apply(x)) || th.apply(s.ran(x)) != s.ran(th.apply(x)))
            .map(|x| format!("element {x}"))
    });
    let comparable = find(&|th| {
        for a in 0..n {
            for b in 0..n {
                let (ra, db) = (s.ran(a), s.dom(b));
                if (s.natural_leq(ra, db) || s.natural_leq(db, ra))
                    && th.apply(s.mul(a, b)) != s.mul(th.apply(a), th.apply(b))
                {
                    return Some(format!("pair ({a}, {b})"));
                }
            }
        }
        None
    });
    let equivalence = find(&|th| match is_premorphism_diagnostic(s, s, th.theta()) {
        Ok(true) => None,
        Ok(false) => Some("fails the premorphism inequality".into()),
        Err(e) => Some(e.to_string()),
    });
    let closure = closure_violation(prems);
    let detail = |w: &Option<String>| w.clone().unwrap_or_default();
    r.check("idempotents map to idempotents", idem.is_none(), detail(&idem));
    r.check("inverses are preserved", inverse.is_none(), detail(&inverse));
    r.check("domain and range idempotents are preserved", domain.is_none(), detail(&domain));
    r.check("multiplicative when a^-1 a and b b^-1 are comparable", comparable.is_none(), detail(&comparable));
    r.check("premorphism iff ordered and multiplicative on composable pairs", equivalence.is_none(), detail(&equivalence));
    r.check("closed under composition with identity", closure.is_none(), detail(&closure));
    r
}

/// The data `(λ, φ)` of a premorphism of a semilattice of groups, together
/// with the induced homomorphism into the re-linked semilattice of groups.
#[derive(Clone, Debug)]
pub struct SogPremorphismData {
    /// Action on the semilattice.
    pub lambda: Vec<usize>,
    /// `phi[e][g]` is the image of `g ∈ G_e` in `G_{eλ}`.
    pub phi: Vec<Vec<usize>>,
    /// `K_e = G_{eλ}` with linking maps `α^{eλ}_{fλ}`.
    pub relinked: SemilatticeOfGroups,
    /// Induced map `S → K`.
    pub sigma: Vec<usize>,
    pub report: Report,
}

pub fn sog_premorphism_data(sog: &SemilatticeOfGroups, theta: &[usize]) -> Result<SogPremorphismData> {
    let s = sog.semigroup();
    let ne = sog.semilattice_len();
    if theta.len() != s.len() {
        return Err(Error::NotSemilatticeOfGroups(format!("map has {} values for {} elements", theta.len(), s.len())));
    }
    let mut lambda = Vec::with_capacity(ne);
    for e in 0..ne {
        let img = theta[sog.idempotent(e)];
        if !s.is_idempotent(img) {
            return Err(Error::NotSemilatticeOfGroups(format!("idempotent of component {e} maps to non-idempotent {img}")));
        }
        lambda.push(sog.component(img).0);
    }
    let mut phi = Vec::with_capacity(ne);
    for e in 0..ne {
        let mut row = Vec::with_capacity(sog.group(e).len());
        for g in 0..sog.group(e).len() {
            let (c, h) = sog.component(theta[sog.element(e, g)]);
            if c != lambda[e] {
                return Err(Error::NotSemilatticeOfGroups(format!(
                    "element ({e}, {g}) leaves the component {}",
                    lambda[e]
                )));
            }
            row.push(h);
        }
        phi.push(row);
    }

    let mut r = Report::new("semilattice of groups premorphism data");
    let ordered = (0..ne)
        .flat_map(|e| (0..ne).map(move |f| (e, f)))
        .find(|&(e, f)| sog.leq(e, f) && !sog.leq(lambda[e], lambda[f]));
    r.check("lambda is order preserving", ordered.is_none(), ordered.map(|w| format!("{w:?}")).unwrap_or_default());
    if let Some((e, f)) = ordered {
        return Err(Error::NotSemilatticeOfGroups(format!("lambda does not preserve {e} <= {f}")));
    }
    let hom = (0..ne).find(|&e| !sog.group(e).is_homomorphism_to(sog.group(lambda[e]), &phi[e]));
    r.check("each phi_e is a group homomorphism", hom.is_none(), hom.map(|e| format!("component {e}")).unwrap_or_default());

    let mut square = None;
    'outer: for e in 0..ne {
        for f in 0..ne {
            if !sog.leq(f, e) {
                continue;
            }
            let top = sog.link(lambda[e], lambda[f]).expect("lambda is ordered");
            let down = sog.link(e, f).expect("e >= f");
            for g in 0..sog.group(e).len() {
                if top[phi[e][g]] != phi[f][down[g]] {
                    square = Some(format!("e={e}, f={f}, g={g}"));
                    break 'outer;
                }
            }
        }
    }
    r.check("phi commutes with linking maps", square.is_none(), square.unwrap_or_default());

    let spec = sog.spec();
    let mut linking = std::collections::BTreeMap::new();
    for e in 0..ne {
        for f in 0..ne {
            if sog.leq(f, e) {
                linking.insert((e, f), sog.link(lambda[e], lambda[f]).unwrap().to_vec());
            }
        }
    }
    let kspec = SemilatticeOfGroupsSpec {
        semilattice_names: spec.semilattice_names.clone(),
        leq: spec.leq.clone(),
        groups: lambda.iter().map(|&l| sog.group(l).clone()).collect(),
        linking,
    };
    let relinked = SemilatticeOfGroups::build(kspec)?;
    let sigma: Vec<usize> = (0..s.len())
        .map(|a| {
            let (e, g) = sog.component(a);
            relinked.element(e, phi[e][g])
        })
        .collect();
    let k = relinked.semigroup();
    let mult = (0..s.len())
        .flat_map(|a| (0..s.len()).map(move |b| (a, b)))
        .find(|&(a, b)| sigma[s.mul(a, b)] != k.mul(sigma[a], sigma[b]));
    r.check("induced map is a homomorphism", mult.is_none(), mult.map(|w| format!("{w:?}")).unwrap_or_default());
    let separating = (0..ne).all(|e| (0..ne).all(|f| e == f || sigma[sog.idempotent(e)] != sigma[sog.idempotent(f)]));
    r.check("induced map is idempotent separating", separating, "");
    Ok(SogPremorphismData { lambda, phi, relinked, sigma, report: r })
}
