//! Parser for the textual form of polynomials and rational functions.
//!
//! Grammar: sums and differences of products and quotients of powers, where an
//! atom is an integer, a variable of the target universe, a named constant or a
//! parenthesised expression. The canonical `Display` output of [`MultiPoly`] and
//! [`RatFunc`] is accepted and round-trips exactly.

use std::sync::Arc;

use super::{Integer, MathError, MultiPoly, RatFunc, Rational, Universe};

/// Resolves identifiers that are not variables of the universe.
pub trait Constants {
    fn lookup(&self, name: &str) -> Option<Rational>;
}

/// No named constants.
pub struct NoConstants;

impl Constants for NoConstants {
    fn lookup(&self, _: &str) -> Option<Rational> {
        None
    }
}

impl<F: Fn(&str) -> Option<Rational>> Constants for F {
    fn lookup(&self, name: &str) -> Option<Rational> {
        self(name)
    }
}

pub fn parse_ratfunc(
    text: &str,
    universe: &Arc<Universe>,
    constants: &dyn Constants,
) -> Result<RatFunc, MathError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        universe,
        constants,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

pub fn parse_poly(text: &str, universe: &Arc<Universe>) -> Result<MultiPoly, MathError> {
    let f = parse_ratfunc(text, universe, &NoConstants)?;
    f.as_polynomial().cloned().ok_or(MathError::Parse {
        pos: 0,
        msg: "expression is not a polynomial".into(),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    universe: &'a Arc<Universe>,
    constants: &'a dyn Constants,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> MathError {
        MathError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, MathError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, MathError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.try_div(&d).map_err(|e| match e {
                    MathError::DivisionByZero => MathError::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    },
                    e => e,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, MathError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFunc, MathError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let k = self.integer()?;
            let k: i32 = k.try_into().map_err(|_| self.error("exponent too large"))?;
            base.pow(if neg { -k } else { k })
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<Integer, MathError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RatFunc, MathError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::constant(self.universe, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.universe.index_of(name) {
                    Ok(RatFunc::var(self.universe, i))
                } else if let Some(c) = self.constants.lookup(name) {
                    Ok(RatFunc::constant(self.universe, c))
                } else {
                    Err(MathError::UnknownIdentifier(name.to_string()))
                }
            }
            _ => Err(self.error("expected a number, identifier or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    #[test]
    fn constants_and_precedence() {
        let u = Universe::new(["t1", "t2"]);
        let k = |n: &str| (n == "b").then(|| int(2));
        let f = parse_ratfunc("b*(2/b)*t1 - t2^2/4 + -t1", &u, &k).unwrap();
        assert_eq!(f.to_string(), "-1/4*t2^2 + t1");
        let g = parse_ratfunc("t1^-2", &u, &NoConstants).unwrap();
        assert_eq!(g.to_string(), "(1)/(t1^2)");
        assert_eq!(
            parse_ratfunc("3/2", &u, &NoConstants)
                .unwrap()
                .constant_value(),
            Some(rat(3, 2))
        );
    }

    #[test]
    fn errors() {
        let u = Universe::new(["x"]);
        assert_eq!(
            parse_poly("y", &u),
            Err(MathError::UnknownIdentifier("y".into()))
        );
        assert!(matches!(
            parse_poly("x +", &u),
            Err(MathError::Parse { .. })
        ));
        assert!(matches!(parse_poly("(x", &u), Err(MathError::Parse { .. })));
        assert!(matches!(
            parse_poly("1/x", &u),
            Err(MathError::Parse { .. })
        ));
        assert!(matches!(
            parse_poly("x/0", &u),
            Err(MathError::Parse { .. })
        ));
    }
}
