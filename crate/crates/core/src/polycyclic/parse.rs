//! Expression syntax for polycyclic elements.
//!
//! ```text
//! expr   := factor* ( '*'? factor )*
//! factor := atom ( '^-1' )?
//! atom   := letter | '0' | '1' | '(' expr ')'
//! ```
//! Juxtaposition and `*` both multiply. An empty expression is `1`.

use crate::error::{Error, Result};

use super::element::{poly_mul, PolyElement};
use super::rewrite::Symbol;
use super::word::{letter_index, Word};

struct Parser {
    n: usize,
    chars: Vec<char>,
    pos: usize,
}

fn invert(symbols: Vec<Symbol>) -> Vec<Symbol> {
    symbols
        .into_iter()
        .rev()
        .map(|s| match s {
            Symbol::Zero => Symbol::Zero,
            Symbol::Letter(l) => Symbol::Inverse(l),
            Symbol::Inverse(l) => Symbol::Letter(l),
        })
        .collect()
}

impl Parser {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self, nested: bool) -> Result<Vec<Symbol>> {
        let mut acc = Vec::new();
        let mut pending_star = false;
        loop {
            match self.peek() {
                None => {
                    if nested {
                        return Err(self.err("unclosed parenthesis"));
                    }
                    break;
                }
                Some(')') if nested => break,
                Some(')') => return Err(self.err("unmatched `)`")),
                Some('*') => {
                    if pending_star {
                        return Err(self.err("two `*` in a row"));
                    }
                    pending_star = true;
                    self.pos += 1;
                    continue;
                }
                Some(_) => {}
            }
            acc.extend(self.factor()?);
            pending_star = false;
        }
        if pending_star {
            return Err(self.err("expression ends with `*`"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Vec<Symbol>> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'^') {
            let rest: String = self.chars[self.pos..].iter().take(3).collect();
            if rest != "^-1" {
                return Err(self.err("expected `^-1`"));
            }
            self.pos += 3;
            return Ok(invert(atom));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Vec<Symbol>> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        match c {
            '0' => {
                self.pos += 1;
                Ok(vec![Symbol::Zero])
            }
            '1' => {
                self.pos += 1;
                Ok(Vec::new())
            }
            '(' => {
                self.pos += 1;
                let inner = self.expr(true)?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            c => match letter_index(c) {
                Some(i) if i < self.n => {
                    self.pos += 1;
                    Ok(vec![Symbol::Letter(i as u8)])
                }
                Some(_) => Err(self.err(format!("letter `{c}` is outside an alphabet of {} letters", self.n))),
                None => Err(self.err(format!("unexpected character `{c}`"))),
            },
        }
    }
}

/// The expression spelled out as letters, inverse letters and zeros.
pub fn parse_symbols(n: usize, src: &str) -> Result<Vec<Symbol>> {
    if n == 0 || n > super::word::MAX_ALPHABET {
        return Err(Error::InvalidSpec(format!("alphabet size must be between 1 and 26, got {n}")));
    }
    let mut p = Parser { n, chars: src.chars().collect(), pos: 0 };
    p.expr(false)
}

/// Parses an expression over an `n`-letter alphabet and multiplies it out
/// in normal form.
pub fn parse_expression(n: usize, src: &str) -> Result<PolyElement> {
    let mut acc = PolyElement::one(n);
    for s in parse_symbols(n, src)? {
        let x = match s {
            Symbol::Zero => PolyElement::Zero,
            Symbol::Letter(l) => PolyElement::letter(n, l as usize),
            Symbol::Inverse(l) => PolyElement::Pair(Word::letter(n, l as usize), Word::empty(n)),
        };
        acc = poly_mul(&acc, &x)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycyclic::element::all_elements;
    use crate::polycyclic::rewrite::normal_form;

    #[test]
    fn examples() {
        assert_eq!(parse_expression(2, "(ab)^-1 a * b^-1 1").unwrap(), PolyElement::Zero);
        assert_eq!(parse_expression(2, "ab b^-1 a").unwrap().to_string(), "aa");
        assert_eq!(parse_expression(2, "a^-1 a").unwrap().to_string(), "a^-1 a");
        assert_eq!(parse_expression(2, "a a^-1").unwrap(), PolyElement::one(2));
        assert_eq!(parse_expression(2, "").unwrap(), PolyElement::one(2));
    }

    #[test]
    fn errors_carry_columns() {
        match parse_expression(2, "a c") {
            Err(Error::Parse { line: 1, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_expression(2, "(a").is_err());
        assert!(parse_expression(2, "a)").is_err());
        assert!(parse_expression(2, "a^2").is_err());
        assert!(parse_expression(2, "a **b").is_err());
    }

    #[test]
    fn rewriting_agrees_with_evaluation() {
        for src in ["(ab)^-1 a * b^-1 1", "(a b^-1 (ba)^-1)^-1 a", "b^-1 0 a", "((ab)^-1)^-1"] {
            assert_eq!(normal_form(2, &parse_symbols(2, src).unwrap()), parse_expression(2, src).unwrap(), "{src}");
        }
    }

    #[test]
    fn printer_round_trips() {
        for x in all_elements(2, 3) {
            assert_eq!(parse_expression(2, &x.to_string()).unwrap(), x, "{x}");
        }
    }
}
