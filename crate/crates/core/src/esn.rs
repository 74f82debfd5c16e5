//! Conversions between inverse semigroups and inductive groupoids.

use crate::error::{Error, Result};
use crate::groupoid::{ArrowSpec, OrderedGroupoid, RawGroupoid};
use crate::semigroup::InverseSemigroup;

/// The ordered groupoid of an inverse semigroup: same elements, `a·b = ab`
/// defined when `a⁻¹a = bb⁻¹`, ordered by the natural order.
pub fn esn_forward_raw(s: &InverseSemigroup) -> RawGroupoid {
    let n = s.len();
    let arrows = (0..n).map(|a| ArrowSpec { dom: s.dom(a), ran: s.ran(a), inv: s.inv(a) }).collect();
    let mut compose = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if s.ran(a) == s.dom(b) {
                compose.push((a, b, s.mul(a, b)));
            }
        }
    }
    let mut leq = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && s.natural_leq(a, b) {
                leq.push((a, b));
            }
        }
    }
    RawGroupoid { names: Some(s.names().to_vec()), arrows, compose, leq }
}

pub fn esn_forward(s: &InverseSemigroup) -> OrderedGroupoid {
    OrderedGroupoid::new(esn_forward_raw(s)).expect("the groupoid of an inverse semigroup is ordered")
}

/// Recovers an inverse semigroup from an inductive groupoid, multiplying by
/// pseudoproduct.
pub fn esn_back(g: &OrderedGroupoid) -> Result<InverseSemigroup> {
    if let Some((x, y)) = g.inductive_witness() {
        return Err(Error::NotInductive { x, y });
    }
    let n = g.len();
    let mut rows = Vec::with_capacity(n);
    for a in 0..n {
        let mut row = Vec::with_capacity(n);
        for b in 0..n {
            row.push(g.pseudoproduct(a, b).ok_or_else(|| {
                Error::Consistency(format!("pseudoproduct of {a} and {b} undefined in an inductive groupoid"))
            })?);
        }
        rows.push(row);
    }
    InverseSemigroup::from_table(g.names().to_vec(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::groupoid::{verify_ordered_groupoid, Axiom};
    use crate::semigroup::{build_symmetric_inverse_monoid, FiniteGroup};

    #[test]
    fn group_gives_one_object() {
        let g = esn_forward(&FiniteGroup::cyclic(3).to_semigroup());
        assert_eq!(g.identities().len(), 1);
        assert_eq!(g.components().len(), 1);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(g.leq(a, b), a == b);
            }
        }
    }

    #[test]
    fn semilattice_gives_identities_only() {
        let s = catalog::diamond4();
        let g = esn_forward(&s);
        assert_eq!(g.identities().len(), 4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g.leq(a, b), s.natural_leq(a, b));
            }
        }
    }

    #[test]
    fn i2_round_trip_and_pseudoproduct() {
        let s = build_symmetric_inverse_monoid(2, 100).unwrap();
        let g = esn_forward(&s);
        assert_eq!(g.identities().len(), 4);
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(g.pseudoproduct(a, b), Some(s.mul(a, b)));
            }
        }
        assert_eq!(esn_back(&g).unwrap(), s);
    }

    #[test]
    fn two_chain_passes_validation() {
        let raw = esn_forward_raw(&catalog::two_chain());
        assert!(verify_ordered_groupoid(&raw).all_passed());
    }

    #[test]
    fn corrupted_order_flags_og1() {
        let s = build_symmetric_inverse_monoid(2, 100).unwrap();
        let mut raw = esn_forward_raw(&s);
        let up = s.index_of("[2,-]").unwrap();
        let down = s.index_of("[-,1]").unwrap();
        let swap = s.index_of("[2,1]").unwrap();
        raw.leq.retain(|&p| p != (down, swap));
        let rep = verify_ordered_groupoid(&raw);
        assert_eq!(rep.get(Axiom::OG1).witness.as_deref(), Some(format!("({up}, {swap})").as_str()));
    }

    #[test]
    fn clifford_restriction_is_link_image() {
        let sog = catalog::clifford4();
        let g = esn_forward(sog.semigroup());
        let nonid = sog.element(0, 1);
        let e = sog.idempotent(1);
        let link = sog.link(0, 1).unwrap();
        assert_eq!(g.restriction(e, nonid).unwrap(), sog.element(1, link[1]));
    }

    #[test]
    fn pseudoproduct_of_idempotents_is_meet() {
        let s = catalog::y4();
        let g = esn_forward(&s);
        for &e in s.idempotents() {
            for &f in s.idempotents() {
                assert_eq!(g.pseudoproduct(e, f), Some(s.meet_idempotents(e, f).unwrap()));
            }
        }
    }
}
