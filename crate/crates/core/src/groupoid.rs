//! Finite ordered groupoids.
//!
//! Arrows are indices. Each arrow stores its domain and range identity and its
//! inverse. Composition `g·h` is defined iff `ran(g) = dom(h)` and is stored
//! sparsely. The order is a dense table.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub dom: usize,
    pub ran: usize,
    pub inv: usize,
}

/// Unvalidated groupoid tables, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RawGroupoid {
    pub names: Option<Vec<String>>,
    pub arrows: Vec<ArrowSpec>,
    /// `(g, h, g·h)` triples.
    pub compose: Vec<(usize, usize, usize)>,
    /// `(a, b)` pairs with `a ≤ b`. Reflexive pairs may be omitted.
    pub leq: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Structure,
    Composition,
    Associativity,
    IdentityLaw,
    InverseLaw,
    PartialOrder,
    OG1,
    OG2,
    OG3,
    OG3Star,
    IdentitiesDownClosed,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::Structure,
        Axiom::Composition,
        Axiom::Associativity,
        Axiom::IdentityLaw,
        Axiom::InverseLaw,
        Axiom::PartialOrder,
        Axiom::OG1,
        Axiom::OG2,
        Axiom::OG3,
        Axiom::OG3Star,
        Axiom::IdentitiesDownClosed,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Structure => "structure",
            Axiom::Composition => "composition",
            Axiom::Associativity => "associativity",
            Axiom::IdentityLaw => "identity law",
            Axiom::InverseLaw => "inverse law",
            Axiom::PartialOrder => "partial order",
            Axiom::OG1 => "OG1",
            Axiom::OG2 => "OG2",
            Axiom::OG3 => "OG3",
            Axiom::OG3Star => "OG3*",
            Axiom::IdentitiesDownClosed => "identities down-closed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub witness: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidReport {
    pub results: Vec<AxiomResult>,
}

impl GroupoidReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomResult {
        self.results.iter().find(|r| r.axiom == axiom).expect("every axiom is reported")
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.results.iter().filter(|r| !r.passed()).collect()
    }

    pub fn to_report(&self, title: &str) -> crate::report::Report {
        let mut r = crate::report::Report::new(title);
        for res in &self.results {
            r.check(res.axiom.label(), res.passed(), res.witness.clone().unwrap_or_default());
        }
        r
    }
}

/// Checks the groupoid axioms and OG1–OG3 on raw tables.
///
/// Later checks assume earlier structural checks passed; when the structure
/// check fails the remaining axioms are reported as skipped failures.
pub fn verify_ordered_groupoid(raw: &RawGroupoid) -> GroupoidReport {
    let mut results = Vec::new();
    let structure = check_structure(raw);
    let structural_ok = structure.is_none();
    results.push(AxiomResult { axiom: Axiom::Structure, witness: structure });
    if !structural_ok {
        for axiom in Axiom::ALL.into_iter().skip(1) {
            results.push(AxiomResult { axiom, witness: Some("skipped: structure check failed".into()) });
        }
        return GroupoidReport { results };
    }
    let t = Tables::new(raw);
    let composition = t.check_composition(raw);
    let comp_ok = composition.is_none();
    results.push(AxiomResult { axiom: Axiom::Composition, witness: composition });
    let gated = |w: &dyn Fn() -> Option<String>| if comp_ok { w() } else { Some("skipped: composition table invalid".into()) };
    results.push(AxiomResult { axiom: Axiom::Associativity, witness: gated(&|| t.check_associativity()) });
    results.push(AxiomResult { axiom: Axiom::IdentityLaw, witness: gated(&|| t.check_identity_law()) });
    results.push(AxiomResult { axiom: Axiom::InverseLaw, witness: gated(&|| t.check_inverse_law()) });
    results.push(AxiomResult { axiom: Axiom::PartialOrder, witness: t.check_partial_order() });
    results.push(AxiomResult { axiom: Axiom::OG1, witness: t.check_og1() });
    results.push(AxiomResult { axiom: Axiom::OG2, witness: gated(&|| t.check_og2()) });
    results.push(AxiomResult { axiom: Axiom::OG3, witness: t.check_og3() });
    results.push(AxiomResult { axiom: Axiom::OG3Star, witness: t.check_og3_star() });
    results.push(AxiomResult { axiom: Axiom::IdentitiesDownClosed, witness: t.check_identities_down_closed() });
    GroupoidReport { results }
}

fn check_structure(raw: &RawGroupoid) -> Option<String> {
    let n = raw.arrows.len();
    if let Some(names) = &raw.names {
        if names.len() != n {
            return Some(format!("{} names for {} arrows", names.len(), n));
        }
    }
    for (g, a) in raw.arrows.iter().enumerate() {
        if a.dom >= n || a.ran >= n || a.inv >= n {
            return Some(format!("arrow {g} refers to an arrow out of range"));
        }
    }
    for (g, a) in raw.arrows.iter().enumerate() {
        for x in [a.dom, a.ran] {
            let ax = raw.arrows[x];
            if ax.dom != x || ax.ran != x {
                return Some(format!("arrow {g}: {x} is used as an identity but is not one"));
            }
        }
        let inv = raw.arrows[a.inv];
        if inv.inv != g || inv.dom != a.ran || inv.ran != a.dom {
            return Some(format!("arrow {g}: inverse {} has mismatched ends", a.inv));
        }
    }
    for &(g, h, k) in &raw.compose {
        if g >= n || h >= n || k >= n {
            return Some(format!("composition triple ({g}, {h}, {k}) out of range"));
        }
    }
    for &(a, b) in &raw.leq {
        if a >= n || b >= n {
            return Some(format!("order pair ({a}, {b}) out of range"));
        }
    }
    None
}

/// Dense working tables shared by the checks and by [`OrderedGroupoid`].
struct Tables {
    n: usize,
    dom: Vec<usize>,
    ran: Vec<usize>,
    inv: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    leq: Vec<bool>,
    identities: Vec<usize>,
}

impl Tables {
    fn new(raw: &RawGroupoid) -> Self {
        let n = raw.arrows.len();
        let mut compose = HashMap::new();
        for &(g, h, k) in &raw.compose {
            compose.entry((g, h)).or_insert(k);
        }
        let mut leq = vec![false; n * n];
        for g in 0..n {
            leq[g * n + g] = true;
        }
        for &(a, b) in &raw.leq {
            leq[a * n + b] = true;
        }
        let identities = (0..n).filter(|&g| raw.arrows[g].dom == g).collect();
        Tables {
            n,
            dom: raw.arrows.iter().map(|a| a.dom).collect(),
            ran: raw.arrows.iter().map(|a| a.ran).collect(),
            inv: raw.arrows.iter().map(|a| a.inv).collect(),
            compose,
            leq,
            identities,
        }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    fn is_identity(&self, g: usize) -> bool {
        self.dom[g] == g
    }

    fn check_composition(&self, raw: &RawGroupoid) -> Option<String> {
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for &(g, h, k) in &raw.compose {
            if let Some(&prev) = seen.get(&(g, h)) {
                if prev != k {
                    return Some(format!("({g}, {h}) composes to both {prev} and {k}"));
                }
            }
            seen.insert((g, h), k);
            if self.ran[g] != self.dom[h] {
                return Some(format!("({g}, {h}) composed but ran({g}) != dom({h})"));
            }
            if self.dom[k] != self.dom[g] || self.ran[k] != self.ran[h] {
                return Some(format!("{g}·{h} = {k} has the wrong ends"));
            }
        }
        for g in 0..self.n {
            for h in 0..self.n {
                if self.ran[g] == self.dom[h] && !self.compose.contains_key(&(g, h)) {
                    return Some(format!("({g}, {h}) is composable but has no product"));
                }
            }
        }
        None
    }

    fn c(&self, g: usize, h: usize) -> usize {
        self.compose[&(g, h)]
    }

    fn check_associativity(&self) -> Option<String> {
        for g in 0..self.n {
            for h in 0..self.n {
                if self.ran[g] != self.dom[h] {
                    continue;
                }
                let gh = self.c(g, h);
                for k in 0..self.n {
                    if self.ran[h] != self.dom[k] {
                        continue;
                    }
                    if self.c(gh, k) != self.c(g, self.c(h, k)) {
                        return Some(format!("({g}·{h})·{k} != {g}·({h}·{k})"));
                    }
                }
            }
        }
        None
    }

    fn check_identity_law(&self) -> Option<String> {
        for g in 0..self.n {
            if self.c(self.dom[g], g) != g || self.c(g, self.ran[g]) != g {
                return Some(format!("identities do not fix arrow {g}"));
            }
        }
        None
    }

    fn check_inverse_law(&self) -> Option<String> {
        for g in 0..self.n {
            if self.c(g, self.inv[g]) != self.dom[g] || self.c(self.inv[g], g) != self.ran[g] {
                return Some(format!("arrow {g} and its inverse {} do not compose to identities", self.inv[g]));
            }
        }
        None
    }

    fn check_partial_order(&self) -> Option<String> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Some(format!("not antisymmetric at ({a}, {b})"));
                }
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.leq(b, c) && !self.leq(a, c) {
                        return Some(format!("not transitive at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        None
    }

    fn check_og1(&self) -> Option<String> {
        for g in 0..self.n {
            for h in 0..self.n {
                if self.leq(g, h) && !self.leq(self.inv[g], self.inv[h]) {
                    return Some(format!("({g}, {h})"));
                }
            }
        }
        None
    }

    fn check_og2(&self) -> Option<String> {
        let pairs: Vec<(usize, usize)> =
            self.compose.keys().copied().filter(|&(g, h)| self.ran[g] == self.dom[h]).collect();
        for &(g1, h1) in &pairs {
            for &(g2, h2) in &pairs {
                if self.leq(g1, g2) && self.leq(h1, h2) && !self.leq(self.c(g1, h1), self.c(g2, h2)) {
                    return Some(format!("{g1} <= {g2}, {h1} <= {h2} but {g1}·{h1} !<= {g2}·{h2}"));
                }
            }
        }
        None
    }

    fn below_with_dom(&self, x: usize, g: usize) -> Vec<usize> {
        (0..self.n).filter(|&r| self.dom[r] == x && self.leq(r, g)).collect()
    }

    fn check_og3(&self) -> Option<String> {
        for g in 0..self.n {
            for &x in &self.identities {
                if !self.leq(x, self.dom[g]) {
                    continue;
                }
                let cands = self.below_with_dom(x, g);
                if cands.len() != 1 {
                    return Some(format!("({x}|{g}) has {} candidates", cands.len()));
                }
            }
        }
        None
    }

    fn check_og3_star(&self) -> Option<String> {
        for g in 0..self.n {
            for &y in &self.identities {
                if !self.leq(y, self.ran[g]) {
                    continue;
                }
                let gi = self.inv[g];
                let cands = self.below_with_dom(y, gi);
                let [r] = cands[..] else {
                    return Some(format!("({y}|{gi}) has {} candidates", cands.len()));
                };
                let co = self.inv[r];
                if self.ran[co] != y || !self.leq(co, g) {
                    return Some(format!("({g}|{y}) = {co} is not a corestriction"));
                }
                let others = (0..self.n).filter(|&k| self.ran[k] == y && self.leq(k, g)).count();
                if others != 1 {
                    return Some(format!("({g}|{y}) is not unique"));
                }
            }
        }
        None
    }

    fn check_identities_down_closed(&self) -> Option<String> {
        for &x in &self.identities {
            for a in 0..self.n {
                if self.leq(a, x) && !self.is_identity(a) {
                    return Some(format!("{a} <= identity {x} but is not an identity"));
                }
            }
        }
        None
    }
}

/// A validated ordered groupoid.
#[derive(Clone, Debug)]
pub struct OrderedGroupoid {
    names: Vec<String>,
    dom: Vec<usize>,
    ran: Vec<usize>,
    inv: Vec<usize>,
    identities: Vec<usize>,
    identity_pos: Vec<Option<usize>>,
    compose: HashMap<(usize, usize), usize>,
    leq: Vec<bool>,
    restriction: HashMap<(usize, usize), usize>,
}

impl PartialEq for OrderedGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.dom == other.dom
            && self.ran == other.ran
            && self.inv == other.inv
            && self.compose == other.compose
            && self.leq == other.leq
    }
}

impl OrderedGroupoid {
    /// Validates and builds. Fails with the list of failing axioms.
    pub fn new(raw: RawGroupoid) -> Result<Self> {
        let report = verify_ordered_groupoid(&raw);
        if !report.all_passed() {
            let msg = report
                .failures()
                .iter()
                .map(|r| format!("{}: {}", r.axiom.label(), r.witness.as_deref().unwrap_or("")))
                .collect::<Vec<_>>()
                .join("; ");
            return Err(Error::InvalidGroupoid(msg));
        }
        Ok(Self::from_checked(raw))
    }

    fn from_checked(raw: RawGroupoid) -> Self {
        let t = Tables::new(&raw);
        let n = t.n;
        let mut identity_pos = vec![None; n];
        for (i, &x) in t.identities.iter().enumerate() {
            identity_pos[x] = Some(i);
        }
        let mut restriction = HashMap::new();
        for g in 0..n {
            for r in 0..n {
                if t.leq(r, g) {
                    restriction.insert((t.dom[r], g), r);
                }
            }
        }
        OrderedGroupoid {
            names: raw.names.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect()),
            dom: t.dom,
            ran: t.ran,
            inv: t.inv,
            identities: t.identities,
            identity_pos,
            compose: t.compose,
            leq: t.leq,
            restriction,
        }
    }

    pub fn to_raw(&self) -> RawGroupoid {
        let n = self.len();
        let arrows = (0..n).map(|g| ArrowSpec { dom: self.dom[g], ran: self.ran[g], inv: self.inv[g] }).collect();
        let mut compose: Vec<(usize, usize, usize)> = self.compose.iter().map(|(&(g, h), &k)| (g, h, k)).collect();
        compose.sort_unstable();
        let leq = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.leq(a, b))
            .collect();
        RawGroupoid { names: Some(self.names.clone()), arrows, compose, leq }
    }

    pub fn len(&self) -> usize {
        self.dom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dom.is_empty()
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dom(&self, g: usize) -> usize {
        self.dom[g]
    }

    pub fn ran(&self, g: usize) -> usize {
        self.ran[g]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn identity_position(&self, x: usize) -> Option<usize> {
        self.identity_pos[x]
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.dom[g] == g
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose.get(&(g, h)).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// `(x|g)`: the unique arrow below `g` with domain `x`.
    pub fn restriction(&self, x: usize, g: usize) -> Result<usize> {
        if !self.is_identity(x) || !self.leq(x, self.dom[g]) {
            return Err(Error::NotBelowDomain { x, g });
        }
        Ok(self.restriction[&(x, g)])
    }

    /// `(g|y) = (y|g⁻¹)⁻¹`.
    pub fn corestriction(&self, g: usize, y: usize) -> Result<usize> {
        self.restriction(y, self.inv[g]).map(|r| self.inv[r])
    }

    /// Greatest lower bound of two identities, if it exists.
    pub fn meet_identities(&self, x: usize, y: usize) -> Option<usize> {
        let lower: Vec<usize> =
            self.identities.iter().copied().filter(|&z| self.leq(z, x) && self.leq(z, y)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&z| self.leq(z, m)))
    }

    /// `a ⊗ b = (a|ℓ)(ℓ|b)` where `ℓ = ran(a) ∧ dom(b)`; `None` when the meet
    /// does not exist.
    pub fn pseudoproduct(&self, a: usize, b: usize) -> Option<usize> {
        let l = self.meet_identities(self.ran[a], self.dom[b])?;
        let left = self.corestriction(a, l).ok()?;
        let right = self.restriction(l, b).ok()?;
        self.compose(left, right)
    }

    /// First pair of identities lacking a meet.
    pub fn inductive_witness(&self) -> Option<(usize, usize)> {
        for (i, &x) in self.identities.iter().enumerate() {
            for &y in &self.identities[i..] {
                if self.meet_identities(x, y).is_none() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_inductive(&self) -> bool {
        self.inductive_witness().is_none()
    }

    /// Connected components as lists of identities, each in increasing order,
    /// components ordered by their least identity.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let k = self.identities.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            let mut c = i;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for g in 0..self.len() {
            let a = find(&mut parent, self.identity_pos[self.dom[g]].unwrap());
            let b = find(&mut parent, self.identity_pos[self.ran[g]].unwrap());
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_slot: HashMap<usize, usize> = HashMap::new();
        for i in 0..k {
            let r = find(&mut parent, i);
            let slot = *root_slot.entry(r).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[slot].push(self.identities[i]);
        }
        comps
    }

    /// Arrows with domain and range `x`, in index order.
    pub fn local_group(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.dom[g] == x && self.ran[g] == x).collect()
    }

    /// Arrows with domain `x`, in index order.
    pub fn star(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.dom[g] == x).collect()
    }

    /// Full subgroupoid on the given identities, with arrows renumbered in
    /// increasing original order. Returns the subgroupoid and the original
    /// index of each new arrow.
    pub fn full_subgroupoid(&self, objects: &[usize]) -> (OrderedGroupoid, Vec<usize>) {
        let keep: Vec<usize> =
            (0..self.len()).filter(|&g| objects.contains(&self.dom[g]) && objects.contains(&self.ran[g])).collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (i, &g) in keep.iter().enumerate() {
            new_index[g] = i;
        }
        let arrows = keep
            .iter()
            .map(|&g| ArrowSpec { dom: new_index[self.dom[g]], ran: new_index[self.ran[g]], inv: new_index[self.inv[g]] })
            .collect();
        let mut compose = Vec::new();
        for &g in &keep {
            for &h in &keep {
                if let Some(k) = self.compose(g, h) {
                    compose.push((new_index[g], new_index[h], new_index[k]));
                }
            }
        }
        let mut leq = Vec::new();
        for &a in &keep {
            for &b in &keep {
                if a != b && self.leq(a, b) {
                    leq.push((new_index[a], new_index[b]));
                }
            }
        }
        let names = keep.iter().map(|&g| self.names[g].clone()).collect();
        let raw = RawGroupoid { names: Some(names), arrows, compose, leq };
        (OrderedGroupoid::from_checked(raw), keep)
    }

    /// The groupoid `X × L × X` with `(x,k,y)(y,l,z) = (x,kl,z)` and the
    /// discrete order. Arrow `(x, k, y)` has index `(x·|L| + k)·|X| + y`.
    pub fn connected(objects: usize, group: &crate::semigroup::FiniteGroup) -> Self {
        let l = group.len();
        let idx = |x: usize, k: usize, y: usize| (x * l + k) * objects + y;
        let e = group.identity();
        let mut arrows = Vec::new();
        let mut names = Vec::new();
        for x in 0..objects {
            for k in 0..l {
                for y in 0..objects {
                    arrows.push(ArrowSpec { dom: idx(x, e, x), ran: idx(y, e, y), inv: idx(y, group.inv(k), x) });
                    names.push(format!("({x},{},{y})", group.name(k)));
                }
            }
        }
        let mut compose = Vec::new();
        for x in 0..objects {
            for k in 0..l {
                for y in 0..objects {
                    for m in 0..l {
                        for z in 0..objects {
                            compose.push((idx(x, k, y), idx(y, m, z), idx(x, group.mul(k, m), z)));
                        }
                    }
                }
            }
        }
        let raw = RawGroupoid { names: Some(names), arrows, compose, leq: Vec::new() };
        OrderedGroupoid::new(raw).expect("X × L × X is a groupoid")
    }

    /// Disjoint union; arrows of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &OrderedGroupoid) -> Self {
        let mut raw = self.to_raw();
        let o = other.to_raw();
        let shift = self.len();
        raw.arrows.extend(o.arrows.iter().map(|a| ArrowSpec { dom: a.dom + shift, ran: a.ran + shift, inv: a.inv + shift }));
        raw.compose.extend(o.compose.iter().map(|&(g, h, k)| (g + shift, h + shift, k + shift)));
        raw.leq.extend(o.leq.iter().map(|&(a, b)| (a + shift, b + shift)));
        if let (Some(n), Some(m)) = (raw.names.as_mut(), o.names) {
            n.extend(m.into_iter().map(|s| format!("{s}'")));
        }
        OrderedGroupoid::new(raw).expect("disjoint union of ordered groupoids")
    }
}
