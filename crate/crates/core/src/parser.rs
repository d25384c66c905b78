//! Recursive-descent parser for bivariate polynomial expressions.
//!
//! ```text
//! expression := ('+' | '-')? term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := base ('^' uint)?
//! base       := rational | 'x' | 'y' | '(' expression ')'
//! rational   := digits ('.' digits)? ('/' digits)?
//! ```
//!
//! Whitespace between tokens is ignored. Juxtaposition is not multiplication.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::algebra::{Rational, SparsePoly};

/// Largest total degree accepted, checked before every expansion.
pub const MAX_TOTAL_DEGREE: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("negative exponent at byte {position}")]
    NegativeExponent { position: usize },
    #[error("non-integer exponent at byte {position}")]
    NonIntegerExponent { position: usize },
    #[error("total degree exceeds {MAX_TOTAL_DEGREE} at byte {position}")]
    DegreeTooLarge { position: usize },
}

/// Parses and expands `src`. The zero polynomial is rejected.
pub fn parse_polynomial(src: &str) -> Result<SparsePoly, ParseError> {
    let mut parser = Parser { src: src.as_bytes(), pos: 0 };
    let poly = parser.expression()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.expected("operator or end of input"));
    }
    if poly.is_zero() {
        return Err(ParseError::ZeroPolynomial);
    }
    Ok(poly)
}

/// Parses corpus-file text: `#` starts a comment running to end of line.
pub fn parse_source(text: &str) -> Result<SparsePoly, ParseError> {
    let stripped: String = text
        .lines()
        .map(|line| match line.find('#') {
            // keep byte offsets stable for error positions
            Some(i) => format!("{}{}\n", &line[..i], " ".repeat(line.len() - i)),
            None => format!("{line}\n"),
        })
        .collect();
    parse_polynomial(&stripped)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn expected(&self, what: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            expected: what.to_string(),
        }
    }

    fn expression(&mut self) -> Result<SparsePoly, ParseError> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let start = self.pos;
            let rhs = self.factor()?;
            if acc.total_degree() + rhs.total_degree() > MAX_TOTAL_DEGREE {
                return Err(ParseError::DegreeTooLarge { position: start });
            }
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePoly, ParseError> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let start = self.pos;
        match self.peek() {
            Some(b'-') => return Err(ParseError::NegativeExponent { position: self.pos }),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.expected("nonnegative integer exponent")),
        }
        let digits = self.digits();
        if matches!(self.src.get(self.pos), Some(b'.') | Some(b'/')) {
            return Err(ParseError::NonIntegerExponent { position: start });
        }
        let too_large = ParseError::DegreeTooLarge { position: start };
        let exp: u64 = digits.parse().map_err(|_| too_large.clone())?;
        if exp == 0 {
            return Ok(SparsePoly::constant(Rational::one()));
        }
        let deg = base.total_degree();
        if deg.checked_mul(exp).is_none_or(|d| d > MAX_TOTAL_DEGREE) {
            return Err(too_large);
        }
        if deg == 0 {
            // a constant base: power the coefficient directly, any exponent size
            let c = base.coeff(0, 0);
            return Ok(SparsePoly::constant(Pow::pow(c, exp)));
        }
        Ok(base.pow(exp as u32))
    }

    fn base(&mut self) -> Result<SparsePoly, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(SparsePoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(SparsePoly::y())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if !self.eat(b')') {
                    return Err(self.expected("')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(SparsePoly::constant(self.rational()?)),
            _ => Err(self.expected("number, 'x', 'y' or '('")),
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let src: &'a [u8] = self.src;
        std::str::from_utf8(&src[start..self.pos]).expect("ascii digits")
    }

    /// Literal with no interior whitespace; decimals convert exactly.
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let int_part: BigInt = self.digits().parse().expect("at least one digit");
        let mut value = Rational::from_integer(int_part);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                return Err(self.expected("digit after decimal point"));
            }
            let frac_digits = self.digits();
            let scale = BigInt::from(10u32).pow(frac_digits.len() as u32);
            let numer: BigInt = frac_digits.parse().expect("digits");
            value += Rational::new(numer, scale);
        }
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                return Err(self.expected("integer denominator"));
            }
            let at = self.pos;
            let den: BigInt = self.digits().parse().expect("digits");
            if den.is_zero() {
                self.pos = at;
                return Err(self.expected("nonzero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        Ok(value)
    }
}
