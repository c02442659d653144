//! Expressions over elements.
//!
//! ```text
//! expr    := postfix ("*" postfix)*
//! postfix := atom ("^-1")*
//! atom    := element | "I" | "p" | "q" | "(" expr ")"
//! ```
//!
//! `*` composes left to right and associates to the left; `^-1` binds
//! tighter than `*`. Element literals use the library's text form.

use cofinite::codec::decode_prefix;
use cofinite::{Error, PartialBijection, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Literal(PartialBijection),
    Identity,
    P,
    Q,
    Mul(Box<Expr>, Box<Expr>),
    Inv(Box<Expr>),
}

impl Expr {
    pub fn eval(&self) -> PartialBijection {
        match self {
            Expr::Literal(a) => a.clone(),
            Expr::Identity => PartialBijection::identity(),
            Expr::P => PartialBijection::pi(),
            Expr::Q => PartialBijection::sigma(),
            Expr::Mul(l, r) => l.eval().compose(&r.eval()),
            Expr::Inv(e) => e.eval().invert(),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(parse_error(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

pub fn eval_expr(text: &str) -> Result<PartialBijection> {
    parse(text).map(|e| e.eval())
}

fn parse_error(offset: usize, message: &str) -> Error {
    Error::Parse {
        offset,
        message: message.to_string(),
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.as_bytes().get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.postfix()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.postfix()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            if !self.text[self.pos..].starts_with("-1") {
                return Err(parse_error(self.pos, "expected `-1` after `^`"));
            }
            self.pos += 2;
            e = Expr::Inv(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        let constant = match self.peek() {
            Some(b'I') => Some(Expr::Identity),
            Some(b'p') => Some(Expr::P),
            Some(b'q') => Some(Expr::Q),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(parse_error(self.pos, "expected `)`"));
                }
                self.pos += 1;
                return Ok(inner);
            }
            Some(b'{') => {
                let (a, end) = decode_prefix(self.text, self.pos)?;
                self.pos = end;
                return Ok(Expr::Literal(a));
            }
            _ => None,
        };
        match constant {
            Some(c) => {
                self.pos += 1;
                Ok(c)
            }
            None => Err(parse_error(
                self.pos,
                "expected an element, `I`, `p`, `q` or `(`",
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cofinite::codec::decode;

    fn offset(text: &str) -> usize {
        match eval_expr(text) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn examples() {
        let i = PartialBijection::identity();
        assert_eq!(eval_expr("p * q").unwrap(), i);
        assert_eq!(eval_expr("I ^-1").unwrap(), i);
        assert_eq!(eval_expr("q * p").unwrap(), decode("{|2=>+0}").unwrap());
    }

    #[test]
    fn inversion_binds_tighter() {
        assert_eq!(eval_expr("p * p^-1").unwrap(), eval_expr("p * q").unwrap());
        assert_eq!(
            eval_expr("(q * p)^-1").unwrap(),
            eval_expr("p^-1 * q^-1").unwrap()
        );
        assert_eq!(eval_expr("p^-1^-1").unwrap(), PartialBijection::pi());
    }

    #[test]
    fn composition_associates_left() {
        let e = parse("p * q * p").unwrap();
        assert!(matches!(&e, Expr::Mul(l, _) if matches!(**l, Expr::Mul(..))));
    }

    #[test]
    fn literals_and_whitespace() {
        let a = eval_expr(" { 3 -> 1 | 4 => +0 } * ( I ) ").unwrap();
        assert_eq!(a, decode("{3->1|4=>+0}").unwrap());
    }

    #[test]
    fn error_offsets() {
        assert_eq!(offset(""), 0);
        assert_eq!(offset("p *"), 3);
        assert_eq!(offset("p q"), 2);
        assert_eq!(offset("(p * q"), 6);
        assert_eq!(offset("p ^ 2"), 4);
        assert_eq!(offset("p * {1->|2=>+0}"), 8);
        assert_eq!(offset("x"), 0);
    }

    #[test]
    fn literal_errors_propagate() {
        assert!(matches!(
            eval_expr("{1->2,2->2|3=>+0}"),
            Err(Error::InjectivityViolation(_))
        ));
    }
}
