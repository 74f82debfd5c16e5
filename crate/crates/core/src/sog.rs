//! Semilattices of groups (Clifford semigroups).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::semigroup::{meet_table, FiniteGroup, InverseSemigroup, DEFAULT_SIZE_CAP};

/// Input data for a semilattice of groups.
///
/// `leq[e][f]` means `e ≤ f` in the semilattice. `linking[(e, f)]` for `e ≥ f`
/// is the value vector of the homomorphism `G_e → G_f`; the diagonal entries
/// may be omitted and default to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilatticeOfGroupsSpec {
    pub semilattice_names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub groups: Vec<FiniteGroup>,
    pub linking: BTreeMap<(usize, usize), Vec<usize>>,
}

impl SemilatticeOfGroupsSpec {
    /// Two-element chain `{1 > e}` with groups `top`, `bottom` and linking map
    /// `link: top → bottom`.
    pub fn two_chain(top: FiniteGroup, bottom: FiniteGroup, link: Vec<usize>) -> Self {
        let mut linking = BTreeMap::new();
        linking.insert((0, 1), link);
        SemilatticeOfGroupsSpec {
            semilattice_names: vec!["1".into(), "e".into()],
            leq: vec![vec![true, false], vec![true, true]],
            groups: vec![top, bottom],
            linking,
        }
    }

    pub fn single(group: FiniteGroup) -> Self {
        SemilatticeOfGroupsSpec {
            semilattice_names: vec!["1".into()],
            leq: vec![vec![true]],
            groups: vec![group],
            linking: BTreeMap::new(),
        }
    }
}

/// A built semilattice of groups together with its underlying semigroup.
///
/// Element `(e, g)` sits at index `offsets[e] + g`.
#[derive(Clone, Debug)]
pub struct SemilatticeOfGroups {
    spec: SemilatticeOfGroupsSpec,
    semigroup: InverseSemigroup,
    offsets: Vec<usize>,
    component: Vec<(usize, usize)>,
    meet: Vec<usize>,
    links: Vec<Option<Vec<usize>>>,
}

impl SemilatticeOfGroups {
    pub fn build(spec: SemilatticeOfGroupsSpec) -> Result<Self> {
        let ne = spec.leq.len();
        if spec.semilattice_names.len() != ne || spec.groups.len() != ne {
            return Err(Error::InvalidSpec("semilattice, names and groups must have the same length".into()));
        }
        if ne == 0 {
            return Err(Error::InvalidSpec("empty semilattice".into()));
        }
        let meet = meet_table(&spec.leq)?;
        let geq = |e: usize, f: usize| spec.leq[f][e];

        let mut links: Vec<Option<Vec<usize>>> = vec![None; ne * ne];
        for (&(e, f), map) in &spec.linking {
            if e >= ne || f >= ne || !geq(e, f) {
                return Err(Error::InvalidSpec(format!("linking map given for ({e}, {f}) but {e} is not above {f}")));
            }
            if !spec.groups[e].is_homomorphism_to(&spec.groups[f], map) {
                return Err(Error::LinkingIncompatible(format!("map {e} -> {f} is not a group homomorphism")));
            }
            links[e * ne + f] = Some(map.clone());
        }
        for e in 0..ne {
            let id: Vec<usize> = (0..spec.groups[e].len()).collect();
            match &links[e * ne + e] {
                Some(m) if *m != id => {
                    return Err(Error::LinkingIncompatible(format!("map {e} -> {e} is not the identity")));
                }
                Some(_) => {}
                None => links[e * ne + e] = Some(id),
            }
            for f in 0..ne {
                if geq(e, f) && links[e * ne + f].is_none() {
                    return Err(Error::InvalidSpec(format!("missing linking map {e} -> {f}")));
                }
            }
        }
        for k in 0..ne {
            for f in 0..ne {
                if !geq(k, f) {
                    continue;
                }
                for e in 0..ne {
                    if !geq(f, e) {
                        continue;
                    }
                    let kf = links[k * ne + f].as_ref().unwrap();
                    let fe = links[f * ne + e].as_ref().unwrap();
                    let ke = links[k * ne + e].as_ref().unwrap();
                    if kf.iter().map(|&g| fe[g]).ne(ke.iter().copied()) {
                        return Err(Error::LinkingIncompatible(format!(
                            "composite {k} -> {f} -> {e} differs from {k} -> {e}"
                        )));
                    }
                }
            }
        }

        let mut offsets = Vec::with_capacity(ne);
        let mut component = Vec::new();
        let mut names = Vec::new();
        for e in 0..ne {
            offsets.push(component.len());
            for g in 0..spec.groups[e].len() {
                component.push((e, g));
                names.push(format!("{}:{}", spec.semilattice_names[e], spec.groups[e].name(g)));
            }
        }
        if component.len() > DEFAULT_SIZE_CAP {
            return Err(Error::SizeCap { requested: component.len() as u128, cap: DEFAULT_SIZE_CAP });
        }
        let semigroup = InverseSemigroup::from_fn(names, |a, b| {
            let (x, g) = component[a];
            let (y, h) = component[b];
            let xy = meet[x * ne + y];
            let gl = links[x * ne + xy].as_ref().unwrap()[g];
            let hl = links[y * ne + xy].as_ref().unwrap()[h];
            offsets[xy] + spec.groups[xy].mul(gl, hl)
        })?;
        Ok(SemilatticeOfGroups { spec, semigroup, offsets, component, meet, links })
    }

    pub fn semigroup(&self) -> &InverseSemigroup {
        &self.semigroup
    }

    pub fn spec(&self) -> &SemilatticeOfGroupsSpec {
        &self.spec
    }

    pub fn semilattice_len(&self) -> usize {
        self.offsets.len()
    }

    pub fn group(&self, e: usize) -> &FiniteGroup {
        &self.spec.groups[e]
    }

    /// `(e, g)` for a semigroup element.
    pub fn component(&self, a: usize) -> (usize, usize) {
        self.component[a]
    }

    pub fn element(&self, e: usize, g: usize) -> usize {
        self.offsets[e] + g
    }

    /// Identity of `G_e` as a semigroup element.
    pub fn idempotent(&self, e: usize) -> usize {
        self.element(e, self.spec.groups[e].identity())
    }

    pub fn leq(&self, e: usize, f: usize) -> bool {
        self.spec.leq[e][f]
    }

    pub fn meet(&self, e: usize, f: usize) -> usize {
        self.meet[e * self.semilattice_len() + f]
    }

    /// Linking map `G_e → G_f` for `e ≥ f`.
    pub fn link(&self, e: usize, f: usize) -> Option<&[usize]> {
        self.links[e * self.semilattice_len() + f].as_deref()
    }
}
