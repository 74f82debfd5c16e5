//! Flows on a finite groupoid and the flow monoid.
//!
//! A flow sends each identity `x` to an arrow with domain `x`. Flows are
//! stored as arrow vectors indexed by identity position. The product is
//! `(τ∗σ)(x) = τ(x)·σ(ran τ(x))`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groupoid::OrderedGroupoid;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flow(pub Vec<usize>);

impl Flow {
    pub fn identity(g: &OrderedGroupoid) -> Self {
        Flow(g.identities().to_vec())
    }

    pub fn at(&self, g: &OrderedGroupoid, x: usize) -> usize {
        self.0[g.identity_position(x).expect("x is an identity")]
    }
}

pub fn flow_compose(g: &OrderedGroupoid, tau: &Flow, sigma: &Flow) -> Flow {
    Flow(
        tau.0
            .iter()
            .map(|&t| g.compose(t, sigma.at(g, g.ran(t))).expect("flow values compose"))
            .collect(),
    )
}

/// All flows in lexicographic order of their arrow vectors.
pub fn enumerate_flows(g: &OrderedGroupoid, cap: usize) -> Result<Vec<Flow>> {
    let stars: Vec<Vec<usize>> = g.identities().iter().map(|&x| g.star(x)).collect();
    let total = stars.iter().try_fold(1u128, |acc, s| acc.checked_mul(s.len() as u128)).unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::SizeCap { requested: total, cap });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; stars.len()];
    if stars.iter().any(|s| s.is_empty()) {
        return Ok(out);
    }
    loop {
        out.push(Flow(idx.iter().zip(&stars).map(|(&i, s)| s[i]).collect()));
        let mut k = stars.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < stars[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

pub fn is_ordered_flow(g: &OrderedGroupoid, tau: &Flow) -> bool {
    let ids = g.identities();
    ids.iter().enumerate().all(|(i, &x)| {
        ids.iter().enumerate().all(|(j, &y)| !g.leq(x, y) || g.leq(tau.0[i], tau.0[j]))
    })
}

/// Ordered flows, checked to form a submonoid.
pub fn ordered_flows(g: &OrderedGroupoid, cap: usize) -> Result<Vec<Flow>> {
    let all = enumerate_flows(g, cap)?;
    let ordered: Vec<Flow> = all.into_iter().filter(|t| is_ordered_flow(g, t)).collect();
    if !ordered.contains(&Flow::identity(g)) {
        return Err(Error::Consistency("identity flow is not ordered".into()));
    }
    for a in &ordered {
        for b in &ordered {
            let c = flow_compose(g, a, b);
            if !is_ordered_flow(g, &c) {
                return Err(Error::Consistency(format!("ordered flows not closed: {:?} * {:?}", a.0, b.0)));
            }
        }
    }
    Ok(ordered)
}

/// A finite monoid as an explicit table with identity at a known index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidTable {
    pub size: usize,
    pub mul: Vec<usize>,
    pub identity: usize,
}

impl MonoidTable {
    pub fn from_elements<T: Eq + std::hash::Hash + Clone>(
        elements: &[T],
        identity: &T,
        op: impl Fn(&T, &T) -> T,
    ) -> Result<Self> {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                let c = op(a, b);
                let k = *index.get(&c).ok_or_else(|| Error::Consistency("monoid not closed".into()))?;
                mul.push(k);
            }
        }
        let identity = *index.get(identity).ok_or_else(|| Error::Consistency("identity missing".into()))?;
        Ok(MonoidTable { size: n, mul, identity })
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn identity_violation(&self) -> Option<usize> {
        (0..self.size).find(|&a| self.mul(self.identity, a) != a || self.mul(a, self.identity) != a)
    }

    /// Whether `map` is a bijective monoid homomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &MonoidTable, map: &[usize]) -> bool {
        if map.len() != self.size || other.size != self.size {
            return false;
        }
        let mut hit = vec![false; other.size];
        for &m in map {
            if m >= other.size || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        map[self.identity] == other.identity
            && (0..self.size)
                .all(|a| (0..self.size).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])))
    }
}

/// Backtracking search for a monoid isomorphism, pruned by multiplicativity
/// on assigned elements and by idempotency. Returns `None` when none exists.
pub fn find_isomorphism(a: &MonoidTable, b: &MonoidTable, budget: u64) -> Result<Option<Vec<usize>>> {
    if a.size != b.size {
        return Ok(None);
    }
    let n = a.size;
    let idem_a: Vec<bool> = (0..n).map(|x| a.mul(x, x) == x).collect();
    let idem_b: Vec<bool> = (0..n).map(|x| b.mul(x, x) == x).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut visited = 0u64;
    map[a.identity] = b.identity;
    used[b.identity] = true;
    let order: Vec<usize> = (0..n).filter(|&x| x != a.identity).collect();

    fn consistent(a: &MonoidTable, b: &MonoidTable, map: &[usize], x: usize) -> bool {
        for y in 0..a.size {
            if map[y] == usize::MAX {
                continue;
            }
            for (p, q) in [(x, y), (y, x)] {
                let r = map[a.mul(p, q)];
                if r != usize::MAX && r != b.mul(map[p], map[q]) {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[usize],
        a: &MonoidTable,
        b: &MonoidTable,
        idem_a: &[bool],
        idem_b: &[bool],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visited: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if k == order.len() {
            return Ok(true);
        }
        let x = order[k];
        for v in 0..a.size {
            if used[v] || idem_a[x] != idem_b[v] {
                continue;
            }
            *visited += 1;
            if *visited > budget {
                return Err(Error::SearchBudgetExceeded { visited: *visited, found: 0 });
            }
            map[x] = v;
            used[v] = true;
            if consistent(a, b, map, x) && go(k + 1, order, a, b, idem_a, idem_b, map, used, visited, budget)? {
                return Ok(true);
            }
            map[x] = usize::MAX;
            used[v] = false;
        }
        Ok(false)
    }

    if go(0, &order, a, b, &idem_a, &idem_b, &mut map, &mut used, &mut visited, budget)? {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Element of the wreath product `L ≀ 𝒯(X)`: `lambda: X → L`, `theta: X → X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub lambda: Vec<usize>,
    pub theta: Vec<usize>,
}

/// `L ≀ 𝒯(X)` for `|X| = points` and `L` given by a group table.
pub struct WreathProduct<'g> {
    pub group: &'g crate::semigroup::FiniteGroup,
    pub points: usize,
}

impl WreathProduct<'_> {
    /// `(λ₁,θ₁)(λ₂,θ₂) = (x ↦ λ₁(x)·λ₂(xθ₁), θ₁θ₂)`.
    pub fn mul(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        WreathElement {
            lambda: (0..self.points).map(|x| self.group.mul(a.lambda[x], b.lambda[a.theta[x]])).collect(),
            theta: (0..self.points).map(|x| b.theta[a.theta[x]]).collect(),
        }
    }

    pub fn identity(&self) -> WreathElement {
        WreathElement { lambda: vec![self.group.identity(); self.points], theta: (0..self.points).collect() }
    }

    pub fn elements(&self) -> Vec<WreathElement> {
        let x = self.points;
        let l = self.group.len();
        let funcs = |range: usize| -> Vec<Vec<usize>> {
            let mut out = vec![Vec::new()];
            for _ in 0..x {
                out = out
                    .into_iter()
                    .flat_map(|v| {
                        (0..range).map(move |i| {
                            let mut w = v.clone();
                            w.push(i);
                            w
                        })
                    })
                    .collect();
            }
            out
        };
        let lambdas = funcs(l);
        let thetas = funcs(x);
        let mut out = Vec::with_capacity(lambdas.len() * thetas.len());
        for lambda in &lambdas {
            for theta in &thetas {
                out.push(WreathElement { lambda: lambda.clone(), theta: theta.clone() });
            }
        }
        out
    }
}

/// Summary for one connected component.
#[derive(Clone, Debug)]
pub struct ComponentStructure {
    pub objects: Vec<usize>,
    pub local_group_order: usize,
    pub flow_count: usize,
    pub wreath_count: usize,
    /// The explicit candidate map built from the base object and connecting
    /// arrows was an isomorphism.
    pub candidate_iso: bool,
    /// Result of the exhaustive search, run only when the candidate failed.
    pub searched_iso: Option<bool>,
}

impl ComponentStructure {
    pub fn isomorphic(&self) -> bool {
        self.candidate_iso || self.searched_iso == Some(true)
    }
}

#[derive(Clone, Debug)]
pub struct FlowStructure {
    pub flow_count: usize,
    pub components: Vec<ComponentStructure>,
    pub monoid_laws: bool,
    pub product_iso: bool,
}

impl FlowStructure {
    pub fn all_passed(&self) -> bool {
        self.monoid_laws && self.product_iso && self.components.iter().all(ComponentStructure::isomorphic)
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("flow monoid structure");
        r.value("flows", self.flow_count);
        r.value("components", self.components.len());
        r.check("flow monoid laws", self.monoid_laws, "");
        for (i, c) in self.components.iter().enumerate() {
            r.value(format!("component {i} objects"), c.objects.len());
            r.value(format!("component {i} local group order"), c.local_group_order);
            r.value(format!("component {i} flows"), c.flow_count);
            r.value(format!("component {i} wreath product size"), c.wreath_count);
            let how = if c.candidate_iso {
                "explicit map"
            } else if c.searched_iso == Some(true) {
                "exhaustive search"
            } else {
                "no isomorphism"
            };
            r.check(format!("component {i} isomorphic to L wr T(X)"), c.isomorphic(), how);
        }
        r.check("flows of G isomorphic to product over components", self.product_iso, "");
        r
    }
}

fn group_from_local(g: &OrderedGroupoid, base: usize) -> (crate::semigroup::FiniteGroup, Vec<usize>) {
    let local = g.local_group(base);
    let pos: HashMap<usize, usize> = local.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let rows = local.iter().map(|&a| local.iter().map(|&b| pos[&g.compose(a, b).unwrap()]).collect()).collect();
    let names = local.iter().map(|&a| g.name(a).to_string()).collect();
    let group = crate::semigroup::FiniteGroup::from_table(names, rows).expect("local groups are groups");
    (group, local)
}

/// Decomposes `g` into components and checks each component's flow monoid
/// against the wreath product, and the whole flow monoid against the product
/// of the component monoids.
pub fn check_flow_monoid_structure(g: &OrderedGroupoid, cap: usize, budget: u64) -> Result<FlowStructure> {
    let flows = enumerate_flows(g, cap)?;
    let table = MonoidTable::from_elements(&flows, &Flow::identity(g), |a, b| flow_compose(g, a, b))?;
    let monoid_laws = table.associativity_violation().is_none() && table.identity_violation().is_none();

    let mut components = Vec::new();
    let mut comp_tables = Vec::new();
    let mut comp_flow_lists = Vec::new();
    for objects in g.components() {
        let (sub, original) = g.full_subgroupoid(&objects);
        let sub_flows = enumerate_flows(&sub, cap)?;
        let sub_table = MonoidTable::from_elements(&sub_flows, &Flow::identity(&sub), |a, b| flow_compose(&sub, a, b))?;

        let objs = sub.identities().to_vec();
        let base = objs[0];
        let (group, local) = group_from_local(&sub, base);
        let local_pos: HashMap<usize, usize> = local.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        // lowest-indexed arrow from the base object to each object
        let connectors: Vec<usize> = objs
            .iter()
            .map(|&x| if x == base { base } else { *sub.star(base).iter().find(|&&c| sub.ran(c) == x).unwrap() })
            .collect();
        let obj_pos = |x: usize| sub.identity_position(x).unwrap();

        let wreath = WreathProduct { group: &group, points: objs.len() };
        let w_elems = wreath.elements();
        if w_elems.len() > cap {
            return Err(Error::SizeCap { requested: w_elems.len() as u128, cap });
        }
        let w_table = MonoidTable::from_elements(&w_elems, &wreath.identity(), |a, b| wreath.mul(a, b))?;
        let w_index: HashMap<&WreathElement, usize> = w_elems.iter().enumerate().map(|(i, e)| (e, i)).collect();

        let candidate: Option<Vec<usize>> = sub_flows
            .iter()
            .map(|tau| {
                let mut lambda = Vec::with_capacity(objs.len());
                let mut theta = Vec::with_capacity(objs.len());
                for (i, &t) in tau.0.iter().enumerate() {
                    let target = obj_pos(sub.ran(t));
                    let k = sub.compose(connectors[i], t)?;
                    let k = sub.compose(k, sub.inv(connectors[target]))?;
                    lambda.push(*local_pos.get(&k)?);
                    theta.push(target);
                }
                w_index.get(&WreathElement { lambda, theta }).copied()
            })
            .collect();
        let candidate_iso = candidate.as_ref().is_some_and(|m| sub_table.is_isomorphism(&w_table, m));
        let searched_iso = if candidate_iso {
            None
        } else {
            Some(find_isomorphism(&sub_table, &w_table, budget)?.is_some())
        };
        components.push(ComponentStructure {
            objects: objects.clone(),
            local_group_order: group.len(),
            flow_count: sub_flows.len(),
            wreath_count: w_elems.len(),
            candidate_iso,
            searched_iso,
        });
        comp_tables.push(sub_table);
        comp_flow_lists.push((sub, original, sub_flows));
    }

    // Restriction map Φ(G) → Π Φ(G_i), with product elements in mixed radix.
    let mut restrict = Vec::with_capacity(flows.len());
    for tau in &flows {
        let mut code = 0usize;
        for (sub, original, sub_flows) in &comp_flow_lists {
            let part = Flow(
                sub.identities()
                    .iter()
                    .map(|&x| {
                        let orig_x = original[x];
                        let orig_val = tau.at(g, orig_x);
                        original.iter().position(|&o| o == orig_val).unwrap()
                    })
                    .collect(),
            );
            let k = sub_flows.iter().position(|f| *f == part).unwrap();
            code = code * sub_flows.len() + k;
        }
        restrict.push(code);
    }
    let sizes: Vec<usize> = comp_tables.iter().map(|t| t.size).collect();
    let product_size: usize = sizes.iter().product();
    let decode = |mut c: usize| -> Vec<usize> {
        let mut parts = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            parts[i] = c % sizes[i];
            c /= sizes[i];
        }
        parts
    };
    let encode = |parts: &[usize]| parts.iter().zip(&sizes).fold(0, |acc, (&p, &s)| acc * s + p);
    let mut prod_mul = Vec::with_capacity(product_size * product_size);
    for a in 0..product_size {
        let pa = decode(a);
        for b in 0..product_size {
            let pb = decode(b);
            let pc: Vec<usize> = (0..sizes.len()).map(|i| comp_tables[i].mul(pa[i], pb[i])).collect();
            prod_mul.push(encode(&pc));
        }
    }
    let prod_identity = encode(&comp_tables.iter().map(|t| t.identity).collect::<Vec<_>>());
    let product = MonoidTable { size: product_size, mul: prod_mul, identity: prod_identity };
    let product_iso = table.is_isomorphism(&product, &restrict);

    Ok(FlowStructure { flow_count: flows.len(), components, monoid_laws, product_iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::esn::esn_forward;
    use crate::semigroup::FiniteGroup;

    #[test]
    fn group_flows_are_group_elements() {
        let g = esn_forward(&FiniteGroup::cyclic(3).to_semigroup());
        let flows = enumerate_flows(&g, 100).unwrap();
        assert_eq!(flows.len(), 3);
        for a in &flows {
            for b in &flows {
                assert_eq!(flow_compose(&g, a, b).0[0], (a.0[0] + b.0[0]) % 3);
            }
        }
    }

    #[test]
    fn connected_two_objects_trivial_group() {
        let g = OrderedGroupoid::connected(2, &FiniteGroup::trivial());
        assert_eq!(enumerate_flows(&g, 100).unwrap().len(), 4);
    }

    #[test]
    fn identity_flow_is_unit() {
        let g = OrderedGroupoid::connected(2, &FiniteGroup::cyclic(2));
        let id = Flow::identity(&g);
        for f in enumerate_flows(&g, 100).unwrap() {
            assert_eq!(flow_compose(&g, &id, &f), f);
            assert_eq!(flow_compose(&g, &f, &id), f);
        }
    }

    #[test]
    fn ordered_flow_counts() {
        let chain = esn_forward(&catalog::two_chain());
        assert_eq!(ordered_flows(&chain, 100).unwrap().len(), 1);
        let cliff = esn_forward(catalog::clifford4().semigroup());
        assert_eq!(enumerate_flows(&cliff, 100).unwrap().len(), 4);
        assert_eq!(ordered_flows(&cliff, 100).unwrap().len(), 2);
        let discrete = OrderedGroupoid::connected(2, &FiniteGroup::cyclic(2));
        assert_eq!(ordered_flows(&discrete, 100).unwrap().len(), 16);
    }

    #[test]
    fn flow_cap() {
        let g = OrderedGroupoid::connected(2, &FiniteGroup::cyclic(2));
        assert!(matches!(enumerate_flows(&g, 15), Err(Error::SizeCap { requested: 16, cap: 15 })));
    }

    #[test]
    fn iso_search_finds_and_rejects() {
        let z4 = FiniteGroup::cyclic(4);
        let klein = FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2));
        let t = |g: &FiniteGroup| MonoidTable {
            size: g.len(),
            mul: (0..g.len() * g.len()).map(|i| g.mul(i / g.len(), i % g.len())).collect(),
            identity: g.identity(),
        };
        assert!(find_isomorphism(&t(&z4), &t(&z4), 1000).unwrap().is_some());
        assert!(find_isomorphism(&t(&z4), &t(&klein), 1000).unwrap().is_none());
    }

    #[test]
    fn one_object_structure() {
        let g = esn_forward(&FiniteGroup::symmetric(3).to_semigroup());
        let s = check_flow_monoid_structure(&g, 1000, 1_000_000).unwrap();
        assert!(s.all_passed());
        assert_eq!(s.flow_count, 6);
        assert_eq!(s.components[0].wreath_count, 6);
    }
}
