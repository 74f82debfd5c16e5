//! Bicyclic and polycyclic monoids, checked on bounded word-length windows.
//!
//! Words concatenate left to right. "Suffix" means trailing segment: `w ≤ u`
//! in the suffix order iff `w = p·u`.

pub mod affine;
pub mod bicyclic;
pub mod element;
pub mod endo;
pub mod functor;
pub mod heap_types;
pub mod parse;
pub mod rewrite;
pub mod word;
pub mod zappa;

pub use affine::AffineMap;
pub use bicyclic::{bicyclic_endo, bicyclic_hol_check, bicyclic_mul, Bicyclic, BicyclicEndo};
pub use element::{poly_mul, suffix_leq_pair, PolyElement};
pub use endo::{endo_classification_check, is_suffix_code};
pub use functor::{classify_ordered_functor, premorphism_ideal_check, Classification, OrderedFunctor, WindowFunctor};
pub use heap_types::heap_type_check_polycyclic;
pub use parse::parse_expression;
pub use word::{suffix_leq, Word};
pub use zappa::{zappa_compose, SuffixMap, ZappaElement};

use crate::report::Report;

/// Default window: 3 letters deep for two or more letters, 6 for one.
pub fn default_window(n: usize) -> usize {
    if n == 1 {
        6
    } else {
        3
    }
}

/// Product against the rewriting oracle, associativity, inverses,
/// idempotents and the natural order on all elements with components of
/// length at most `max_len`.
pub fn oracle_check(n: usize, max_len: usize) -> Report {
    use rayon::prelude::*;

    let mut r = Report::new("polycyclic arithmetic");
    r.param("alphabet", n).param("window", max_len);
    let elems = element::all_elements(n, max_len);
    r.value("elements", elems.len());

    let oracle_bad = elems.par_iter().find_map_first(|x| {
        elems.iter().find_map(|y| (x.times(y) != rewrite::oracle_mul(n, x, y)).then(|| format!("{x} * {y}")))
    });
    r.check("product matches rewriting", oracle_bad.is_none(), oracle_bad.unwrap_or_default());

    let assoc_bad = elems.par_iter().find_map_first(|x| {
        elems.iter().find_map(|y| {
            let xy = x.times(y);
            elems.iter().find_map(|z| (xy.times(z) != x.times(&y.times(z))).then(|| format!("{x}, {y}, {z}")))
        })
    });
    r.check("associative", assoc_bad.is_none(), assoc_bad.unwrap_or_default());

    let inverses = elems.iter().all(|x| {
        let xi = x.inv();
        x.times(&xi).times(x) == *x && xi.times(x).times(&xi) == xi
    });
    r.check("(u,v)^-1 = (v,u)", inverses, "");

    let idempotents = elems.iter().all(|x| (x.times(x) == *x) == x.is_idempotent());
    r.check("idempotents are 0 and (u,u)", idempotents, "");

    let order_bad = elems.par_iter().find_map_first(|x| {
        let dom = x.times(&x.inv());
        elems.iter().find_map(|y| {
            ((*x == dom.times(y)) != suffix_leq_pair(x, y)).then(|| format!("{x}, {y}"))
        })
    });
    r.check("natural order is the suffix order", order_bad.is_none(), order_bad.unwrap_or_default());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_agrees() {
        let r = oracle_check(2, 2);
        assert!(r.all_passed(), "{r}");
        let r = oracle_check(1, 4);
        assert!(r.all_passed(), "{r}");
    }
}
