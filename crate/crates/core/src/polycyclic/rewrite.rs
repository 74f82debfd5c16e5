//! Normal forms by rewriting with the defining relations
//! `a_i a_i⁻¹ → 1` and `a_i a_j⁻¹ → 0` (`i ≠ j`).

use super::element::PolyElement;
use super::word::Word;

/// A letter or its inverse, or the zero symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Zero,
    Letter(u8),
    Inverse(u8),
}

/// `u⁻¹v` spelled out: the inverses of `u`'s letters in reverse, then `v`.
pub fn spell(x: &PolyElement) -> Vec<Symbol> {
    match x {
        PolyElement::Zero => vec![Symbol::Zero],
        PolyElement::Pair(u, v) => u
            .letters()
            .iter()
            .rev()
            .map(|&l| Symbol::Inverse(l))
            .chain(v.letters().iter().map(|&l| Symbol::Letter(l)))
            .collect(),
    }
}

/// Applies the relations at the leftmost redex until none remain.
pub fn normal_form(n: usize, symbols: &[Symbol]) -> PolyElement {
    if symbols.contains(&Symbol::Zero) {
        return PolyElement::Zero;
    }
    let mut s = symbols.to_vec();
    loop {
        let redex = s.windows(2).position(|w| matches!(w, [Symbol::Letter(_), Symbol::Inverse(_)]));
        let Some(i) = redex else { break };
        match (s[i], s[i + 1]) {
            (Symbol::Letter(a), Symbol::Inverse(b)) if a == b => {
                s.drain(i..i + 2);
            }
            _ => return PolyElement::Zero,
        }
    }
    let split = s.iter().position(|x| matches!(x, Symbol::Letter(_))).unwrap_or(s.len());
    let u: Vec<u8> = s[..split]
        .iter()
        .rev()
        .map(|x| match x {
            Symbol::Inverse(l) => *l,
            _ => unreachable!("inverse letters precede letters in a reduced word"),
        })
        .collect();
    let v: Vec<u8> = s[split..]
        .iter()
        .map(|x| match x {
            Symbol::Letter(l) => *l,
            _ => unreachable!("inverse letters precede letters in a reduced word"),
        })
        .collect();
    PolyElement::Pair(Word::new(n, u).expect("letters in range"), Word::new(n, v).expect("letters in range"))
}

/// Product computed by concatenating spellings and rewriting.
pub fn oracle_mul(n: usize, x: &PolyElement, y: &PolyElement) -> PolyElement {
    let mut s = spell(x);
    s.extend(spell(y));
    normal_form(n, &s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_relations() {
        assert_eq!(normal_form(2, &[Symbol::Letter(0), Symbol::Inverse(0)]), PolyElement::one(2));
        assert_eq!(normal_form(2, &[Symbol::Letter(0), Symbol::Inverse(1)]), PolyElement::Zero);
        let free = normal_form(2, &[Symbol::Inverse(0), Symbol::Letter(1)]);
        assert_eq!(free.to_string(), "a^-1 b");
    }

    #[test]
    fn spelling_round_trips() {
        let x = PolyElement::Pair(Word::parse(2, "ab").unwrap(), Word::parse(2, "ba").unwrap());
        assert_eq!(normal_form(2, &spell(&x)), x);
    }
}
