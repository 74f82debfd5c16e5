//! Named example semigroups used by the CLI `gen` command and the test suites.

use crate::error::{Error, Result};
use crate::semigroup::{build_symmetric_inverse_monoid, semilattice_from_order, FiniteGroup, InverseSemigroup};
use crate::sog::{SemilatticeOfGroups, SemilatticeOfGroupsSpec};

/// Builds an example by name.
///
/// Recognised names: `trivial`, `z<n>` (cyclic), `klein`, `s3`, `chain<k>`,
/// `two-chain`, `v3`, `diamond4`, `y4`, `i<n>` (symmetric inverse monoid),
/// `clifford4`, `clifford3`.
pub fn build(name: &str, cap: usize) -> Result<InverseSemigroup> {
    match name {
        "trivial" => Ok(FiniteGroup::trivial().to_semigroup()),
        "klein" => Ok(FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2)).to_semigroup()),
        "s3" => Ok(FiniteGroup::symmetric(3).to_semigroup()),
        "two-chain" => Ok(two_chain()),
        "v3" => Ok(v3()),
        "diamond4" => Ok(diamond4()),
        "y4" => Ok(y4()),
        "clifford4" => Ok(clifford4().semigroup().clone()),
        "clifford3" => Ok(clifford3().semigroup().clone()),
        _ => {
            if let Some(n) = name.strip_prefix('z').and_then(|r| r.parse::<usize>().ok()) {
                if n == 0 || n > cap {
                    return Err(Error::InvalidSpec(format!("bad cyclic order {n}")));
                }
                return Ok(FiniteGroup::cyclic(n).to_semigroup());
            }
            if let Some(k) = name.strip_prefix("chain").and_then(|r| r.parse::<usize>().ok()) {
                if k == 0 || k > cap {
                    return Err(Error::InvalidSpec(format!("bad chain length {k}")));
                }
                return Ok(chain(k));
            }
            if let Some(n) = name.strip_prefix('i').and_then(|r| r.parse::<usize>().ok()) {
                return build_symmetric_inverse_monoid(n, cap);
            }
            Err(Error::InvalidSpec(format!("unknown example `{name}`")))
        }
    }
}

pub const NAMES: &[&str] =
    &["trivial", "z2", "z3", "z4", "z5", "z6", "klein", "s3", "chain1", "chain2", "chain3", "chain4", "two-chain", "v3", "diamond4", "y4", "i1", "i2", "clifford4", "clifford3"];

/// The 2-chain `{1 > e}` with names `1`, `e`.
pub fn two_chain() -> InverseSemigroup {
    semilattice_from_order(vec!["1".into(), "e".into()], &[vec![true, false], vec![true, true]])
        .expect("two-chain")
}

/// Chain of `k` idempotents named `c0 < c1 < …`.
pub fn chain(k: usize) -> InverseSemigroup {
    crate::semigroup::chain_semilattice(k)
}

/// `{a, b, 0}` with `a`, `b` incomparable above `0`.
pub fn v3() -> InverseSemigroup {
    semilattice_from_order(
        vec!["0".into(), "a".into(), "b".into()],
        &[vec![true, true, true], vec![false, true, false], vec![false, false, true]],
    )
    .expect("v3")
}

/// The four-element Boolean lattice `{0, a, b, 1}`.
pub fn diamond4() -> InverseSemigroup {
    semilattice_from_order(
        vec!["0".into(), "a".into(), "b".into(), "1".into()],
        &[
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ],
    )
    .expect("diamond4")
}

/// `{0 < m}` with `a`, `b` incomparable above `m`: a four-element semilattice
/// with two maximal elements.
pub fn y4() -> InverseSemigroup {
    semilattice_from_order(
        vec!["0".into(), "m".into(), "a".into(), "b".into()],
        &[
            vec![true, true, true, true],
            vec![false, true, true, true],
            vec![false, false, true, false],
            vec![false, false, false, true],
        ],
    )
    .expect("y4")
}

/// `{1 > e}` with `G_1 = G_e = ℤ_2` and identity linking map.
pub fn clifford4() -> SemilatticeOfGroups {
    SemilatticeOfGroups::build(SemilatticeOfGroupsSpec::two_chain(
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(2),
        vec![0, 1],
    ))
    .expect("clifford4")
}

/// `{1 > e}` with `G_1 = ℤ_2`, `G_e` trivial.
pub fn clifford3() -> SemilatticeOfGroups {
    SemilatticeOfGroups::build(SemilatticeOfGroupsSpec::two_chain(
        FiniteGroup::cyclic(2),
        FiniteGroup::trivial(),
        vec![0, 0],
    ))
    .expect("clifford3")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_named_example_builds() {
        for name in NAMES {
            let s = build(name, 5000).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(!s.is_empty());
        }
        assert!(build("nonsense", 10).is_err());
    }

    #[test]
    fn two_chain_names() {
        let s = two_chain();
        let one = s.index_of("1").unwrap();
        let e = s.index_of("e").unwrap();
        assert!(s.natural_leq(e, one));
        assert!(!s.natural_leq(one, e));
        assert_eq!(s.identity(), Some(one));
    }
}
