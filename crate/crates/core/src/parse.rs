//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := uint | ident | '(' expr ')'
//! ident  := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is insignificant. Integer literals are reduced modulo the field
//! characteristic. Positions in errors are 0-based character offsets.

use crate::field::PrimeField;
use crate::poly::Polynomial;
use crate::{Error, Result};

pub fn parse_polynomial(
    text: &str,
    variables: &[impl AsRef<str>],
    field: PrimeField,
) -> Result<Polynomial> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        vars: variables.iter().map(|v| v.as_ref().to_string()).collect(),
        field,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.syntax(format!("unexpected '{}'", parser.chars[parser.pos])));
    }
    Ok(p)
}

/// Collects the identifiers occurring in `text`, in order of first
/// appearance. Useful when no variable list is supplied.
pub fn identifiers(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let id: String = chars[start..i].iter().collect();
            if !out.contains(&id) {
                out.push(id);
            }
        } else if chars[i].is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    out
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    vars: Vec<String>,
    field: PrimeField,
}

impl Parser {
    fn syntax(&self, message: String) -> Error {
        Error::Syntax {
            position: self.pos,
            message,
        }
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

    fn arity(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate_first = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -&acc;
        }
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some('*') = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some('^') = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some('-') => return Err(Error::NegativeExponent { position: self.pos }),
                Some(c) if c.is_ascii_digit() => {}
                _ => return Err(self.syntax("expected exponent after '^'".into())),
            }
            let start = self.pos;
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                position: start,
                message: format!("exponent '{digits}' too large"),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let f = self.field;
                let value = digits
                    .bytes()
                    .fold(0u64, |acc, b| f.add(f.mul(acc, 10), (b - b'0') as u64));
                Ok(Polynomial::constant(f, self.arity(), value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::variable(self.field, self.arity(), i)),
                    None => Err(Error::UnknownIdentifier {
                        name,
                        position: start,
                    }),
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.syntax("expected ')'".into())),
                }
            }
            Some(c) => Err(self.syntax(format!("unexpected '{c}'"))),
            None => Err(self.syntax("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vars(n: usize) -> Vec<String> {
        Polynomial::default_names(n)
    }

    #[test]
    fn cuspidal_cubic_parses() {
        let f = parse_polynomial(
            "4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2",
            &vars(3),
            PrimeField::default(),
        )
        .unwrap();
        assert_eq!(f.num_terms(), 5);
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(3));
    }

    #[test]
    fn cancellation_and_expansion() {
        let field = PrimeField::default();
        assert!(parse_polynomial("x0 - x0", &vars(4), field)
            .unwrap()
            .is_zero());
        let sq = parse_polynomial("(x0+x1)^2", &vars(2), field).unwrap();
        let expanded = parse_polynomial("x0^2 + 2*x0*x1 + x1^2", &vars(2), field).unwrap();
        assert_eq!(sq, expanded);
    }

    #[test]
    fn custom_names_and_large_literals() {
        let field = PrimeField::new(101).unwrap();
        let f = parse_polynomial("a_1*b + 205", &["a_1", "b"], field).unwrap();
        // 205 = 3 mod 101
        assert_eq!(f.to_string_with(&["a_1", "b"]), "a_1*b + 3");
    }

    #[test]
    fn errors_carry_positions() {
        let field = PrimeField::default();
        match parse_polynomial("x0 + * x1", &vars(2), field) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("x0 + y", &vars(2), field) {
            Err(Error::UnknownIdentifier { name, position }) => {
                assert_eq!(name, "y");
                assert_eq!(position, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x0^-2", &vars(1), field),
            Err(Error::NegativeExponent { position: 3 })
        ));
        assert!(matches!(
            parse_polynomial("(x0 + x1", &vars(2), field),
            Err(Error::Syntax { position: 8, .. })
        ));
        assert!(parse_polynomial("", &vars(2), field).is_err());
        assert!(parse_polynomial("x0 x1", &vars(2), field).is_err());
    }

    #[test]
    fn identifier_scan() {
        assert_eq!(identifiers("x1^2 + 3*x0*x2 + x1"), vec!["x1", "x0", "x2"]);
    }

    fn random_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, 3), -50i64..50), 0..8)
            .prop_map(|terms| {
                let field = PrimeField::default();
                Polynomial::from_terms(
                    field,
                    3,
                    terms.into_iter().map(|(e, c)| {
                        (
                            crate::monomial::ExponentVector::from_slice(&e),
                            field.from_i64(c),
                        )
                    }),
                )
            })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in random_poly()) {
            let text = f.to_string();
            let g = parse_polynomial(&text, &vars(3), PrimeField::default()).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), text);
        }
    }
}
