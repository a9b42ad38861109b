//! Recursive-descent parser and canonical printer for polynomials in x and y.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-'? factor ('*' factor)*
//! factor := base ('^' nonneg-integer)?
//! base   := 'x' | 'y' | number | '(' expr ')'
//! number := integer | integer '/' integer      (the fraction form only over Q)
//! ```
//!
//! Multiplication is always explicit; exponents are non-negative decimal
//! integers. Over GF(p) integer literals are reduced mod p at parse time.

use std::fmt;

use num_bigint::BigInt;

use crate::bipoly::BiPoly;
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::UniPoly;

/// A polynomial expression together with the field its literals live in.
#[derive(Debug, Clone)]
pub struct PolySource {
    pub text: String,
    pub field: FieldSpec,
}

impl PolySource {
    pub fn new(text: impl Into<String>, field: FieldSpec) -> Self {
        PolySource {
            text: text.into(),
            field,
        }
    }
}

pub fn parse_poly(src: &PolySource) -> Result<BiPoly, Error> {
    parse_poly_str(&src.text, src.field)
}

pub fn parse_poly_str(text: &str, spec: FieldSpec) -> Result<BiPoly, Error> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        spec,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.input.len() {
        return Err(p.syntax_error("end of input or an operator"));
    }
    Ok(value)
}

/// A single scalar in the same literal syntax: optional '-', then a number.
pub fn parse_scalar(text: &str, spec: FieldSpec) -> Result<FieldElement, Error> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        spec,
    };
    p.skip_ws();
    let negative = p.eat(b'-');
    p.skip_ws();
    let n = p.number()?;
    p.skip_ws();
    if p.pos < p.input.len() {
        return Err(p.syntax_error("end of input"));
    }
    let value = n.eval_point(&spec.zero(), &spec.zero());
    Ok(if negative { -&value } else { value })
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    spec: FieldSpec,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax_error(&self, expected: &str) -> Error {
        Error::SyntaxError {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn expr(&mut self) -> Result<BiPoly, Error> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, Error> {
        self.skip_ws();
        let negative = self.eat(b'-');
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else {
                break;
            }
        }
        Ok(if negative { -&acc } else { acc })
    }

    fn factor(&mut self) -> Result<BiPoly, Error> {
        let base = self.base()?;
        self.skip_ws();
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        if self.peek() == Some(b'-') {
            return Err(Error::NegativeExponent { position: self.pos });
        }
        let exponent = self.nonneg_integer()?;
        let mut acc = BiPoly::one(self.spec);
        for _ in 0..exponent {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn base(&mut self) -> Result<BiPoly, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(BiPoly::monomial(self.spec, 1, 0))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(BiPoly::monomial(self.spec, 0, 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.syntax_error("')'"));
                }
                Ok(inner)
            }
            Some(d) if d.is_ascii_digit() => self.number(),
            _ => Err(self.syntax_error("'x', 'y', a number, or '('")),
        }
    }

    fn number(&mut self) -> Result<BiPoly, Error> {
        let numerator = self.integer_literal()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            let slash_pos = self.pos;
            if self.spec != FieldSpec::Rationals {
                return Err(Error::ModulusMismatch {
                    position: slash_pos,
                });
            }
            self.pos += 1;
            self.skip_ws();
            let denominator = self.integer_literal_raw()?;
            if denominator.1 == BigInt::from(0) {
                return Err(Error::ZeroDenominator {
                    position: denominator.0,
                });
            }
            let value = FieldElement::from_rational(
                num_rational::BigRational::new(numerator, denominator.1),
                self.spec,
            );
            return Ok(BiPoly::from_unipoly(UniPoly::constant(value)));
        }
        Ok(BiPoly::from_unipoly(UniPoly::constant(
            self.spec.from_bigint(&numerator),
        )))
    }

    fn integer_literal(&mut self) -> Result<BigInt, Error> {
        Ok(self.integer_literal_raw()?.1)
    }

    /// Returns (start position, value).
    fn integer_literal_raw(&mut self) -> Result<(usize, BigInt), Error> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax_error("a decimal integer"));
        }
        let digits = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok((start, digits.parse::<BigInt>().unwrap()))
    }

    fn nonneg_integer(&mut self) -> Result<u32, Error> {
        let (start, value) = self.integer_literal_raw()?;
        u32::try_from(&value).map_err(|_| Error::SyntaxError {
            position: start,
            expected: "an exponent small enough to expand".to_string(),
        })
    }
}

/// Canonical text form: terms by decreasing y-power, then decreasing
/// x-power, reduced coefficients, explicit '*'. Re-parses to an equal value.
pub fn format_poly(w: &BiPoly) -> String {
    let mut terms: Vec<(FieldElement, usize, usize)> = Vec::new();
    for j in (0..w.coeffs().len()).rev() {
        let c = &w.coeffs()[j];
        for i in (0..c.coeffs().len()).rev() {
            let s = &c.coeffs()[i];
            if !s.is_zero() {
                terms.push((s.clone(), i, j));
            }
        }
    }
    render_terms(&terms)
}

pub fn format_unipoly(p: &UniPoly) -> String {
    let mut terms: Vec<(FieldElement, usize, usize)> = Vec::new();
    for i in (0..p.coeffs().len()).rev() {
        let s = &p.coeffs()[i];
        if !s.is_zero() {
            terms.push((s.clone(), i, 0));
        }
    }
    render_terms(&terms)
}

fn render_terms(terms: &[(FieldElement, usize, usize)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, i, j)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = c.abs();
        let mut parts: Vec<String> = Vec::new();
        if !magnitude.is_one() || (*i == 0 && *j == 0) {
            parts.push(magnitude.to_string());
        }
        if *i > 0 {
            parts.push(if *i == 1 {
                "x".to_string()
            } else {
                format!("x^{}", i)
            });
        }
        if *j > 0 {
            parts.push(if *j == 1 {
                "y".to_string()
            } else {
                format!("y^{}", j)
            });
        }
        out.push_str(&parts.join("*"));
    }
    out
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_unipoly(self))
    }
}
