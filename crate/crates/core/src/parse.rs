//! Literal grammar for field elements, polynomials and rational functions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*          juxtaposition such as `2t` allowed
//! factor := atom ['^' exp]
//! atom   := coeff | var | '(' expr ')'
//! coeff  := decimal | '[' decimal (',' decimal)* ']'
//! ```
//!
//! A `/` between terms divides; only rational-function targets accept it.
//! Whitespace is insignificant and coefficients are reduced mod `p`.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Poly;
use crate::rational::RationalFunction;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(FieldElement),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: Vec<(usize, char)>,
    pos: usize,
    vars: &'a [&'a str],
    k: &'a Field,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.src
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.src.last().map(|&(i, c)| i + c.len_utf8()).unwrap_or(0))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.offset();
        let mut v: u64 = 0;
        let mut any = false;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(c.to_digit(10).unwrap() as u64))
                .ok_or_else(|| syntax(start, "number too large"))?;
            self.pos += 1;
            any = true;
        }
        if any {
            Ok(v)
        } else {
            Err(syntax(start, "expected a number"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.peek() == Some('-') {
            self.pos += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some('/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(c) if c.is_ascii_alphabetic() || c == '(' || c == '[' || c.is_ascii_digit() => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            let e = u32::try_from(e).map_err(|_| syntax(self.offset(), "exponent too large"))?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = self.offset();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                self.pos += 1;
                let mut coords = vec![self.number()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    coords.push(self.number()?);
                }
                self.expect(']')?;
                let p = self.k.p() as u64;
                let reduced: Vec<u32> = coords.iter().map(|c| (c % p) as u32).collect();
                let c = self.k.from_coords(&reduced).map_err(|e| syntax(start, e.to_string()))?;
                Ok(Expr::Const(c))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.number()?;
                Ok(Expr::Const(self.k.from_int((v % self.k.p() as u64) as i64)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    // a complete variable name ends the token: `xy` is `x*y`
                    if self.vars.contains(&name.as_str()) {
                        break;
                    }
                    name.push(c);
                    self.pos += 1;
                }
                if self.vars.contains(&name.as_str()) {
                    Ok(Expr::Var(name))
                } else {
                    Err(syntax(
                        start,
                        format!("unknown variable '{name}' (expected one of {:?})", self.vars),
                    ))
                }
            }
            Some(c) => Err(syntax(start, format!("unexpected '{c}'"))),
            None => Err(syntax(start, "unexpected end of input")),
        }
    }
}

/// Parses an expression over the given variable names.
pub fn parse_expr(s: &str, vars: &[&str], k: &Field) -> Result<Expr> {
    let src: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut parser = Parser { src, pos: 0, vars, k };
    let e = parser.expr()?;
    if parser.pos != parser.src.len() {
        return Err(syntax(parser.offset(), "trailing input"));
    }
    Ok(e)
}

/// Parses a field element literal.
pub fn parse_element(s: &str, k: &Field) -> Result<FieldElement> {
    match parse_expr(s, &[], k)? {
        Expr::Const(c) => Ok(c),
        Expr::Neg(inner) => match *inner {
            Expr::Const(c) => Ok(k.neg(c)),
            _ => Err(syntax(0, "expected a field element")),
        },
        _ => Err(syntax(0, "expected a field element")),
    }
}

/// Evaluates an expression as a rational function in `var`.
pub fn eval_rational(e: &Expr, var: &str, k: &Field) -> Result<RationalFunction> {
    Ok(match e {
        Expr::Const(c) => RationalFunction::constant(*c),
        Expr::Var(v) if v == var => RationalFunction::from_poly(Poly::x()),
        Expr::Var(v) => return Err(Error::InvalidInput(format!("unexpected variable {v}"))),
        Expr::Add(a, b) => eval_rational(a, var, k)?.add(&eval_rational(b, var, k)?, k),
        Expr::Sub(a, b) => eval_rational(a, var, k)?.sub(&eval_rational(b, var, k)?, k),
        Expr::Mul(a, b) => eval_rational(a, var, k)?.mul(&eval_rational(b, var, k)?, k),
        Expr::Div(a, b) => eval_rational(a, var, k)?.div(&eval_rational(b, var, k)?, k)?,
        Expr::Neg(a) => eval_rational(a, var, k)?.neg(k),
        Expr::Pow(a, n) => {
            let base = eval_rational(a, var, k)?;
            (0..*n).fold(RationalFunction::constant(FieldElement::ONE), |acc, _| {
                acc.mul(&base, k)
            })
        }
    })
}

/// Parses a polynomial in `var`.
pub fn parse_poly(s: &str, var: &str, k: &Field) -> Result<Poly> {
    let r = parse_rational(s, var, k)?;
    if !r.den().is_one() {
        return Err(Error::InvalidInput(format!("'{s}' is not a polynomial")));
    }
    Ok(r.num().clone())
}

/// Parses a rational function in `var`.
pub fn parse_rational(s: &str, var: &str, k: &Field) -> Result<RationalFunction> {
    eval_rational(&parse_expr(s, &[var], k)?, var, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let k5 = Field::prime(5).unwrap();
        assert_eq!(
            parse_poly("t^2+4*t+1", "t", &k5).unwrap(),
            Poly::from_ints(&k5, &[1, 4, 1])
        );
        assert_eq!(
            parse_poly("t^2+2t+3", "t", &k5).unwrap(),
            Poly::from_ints(&k5, &[3, 2, 1])
        );
        assert_eq!(parse_poly("0", "t", &k5).unwrap(), Poly::zero());
        let k3 = Field::prime(3).unwrap();
        assert_eq!(parse_poly("t+t", "t", &k3).unwrap(), Poly::from_ints(&k3, &[0, 2]));
        assert_eq!(parse_poly(" -t + 7 ", "t", &k5).unwrap(), Poly::from_ints(&k5, &[2, 4]));
    }

    #[test]
    fn extension_coefficients() {
        let k9 = Field::of_order(9).unwrap();
        let p = parse_poly("[0,1]*x^2+[2,1]", "x", &k9).unwrap();
        assert_eq!(p.coeff(2), k9.from_coords(&[0, 1]).unwrap());
        assert_eq!(p.coeff(0), k9.from_coords(&[2, 1]).unwrap());
        assert_eq!(parse_element("[1,1]", &k9).unwrap(), k9.from_coords(&[1, 1]).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let k5 = Field::prime(5).unwrap();
        assert!(matches!(
            parse_poly("x^2+1", "t", &k5),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_poly("t^2+", "t", &k5),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(parse_poly("t^2 )", "t", &k5), Err(Error::Syntax { .. })));
        assert!(parse_poly("1/t", "t", &k5).is_err());
        let r = parse_rational("(2t^2+1)/(t^2+t)", "t", &k5).unwrap();
        assert_eq!(r.num(), &Poly::from_ints(&k5, &[1, 0, 2]));
    }

    proptest! {
        #[test]
        fn render_round_trips(qi in 0usize..3, coeffs in proptest::collection::vec(0u32..1000, 0..8)) {
            let k = Field::of_order([5, 7, 9][qi]).unwrap();
            let p = Poly::from_coeffs(coeffs.iter().map(|c| k.element(c % k.q()).unwrap()).collect());
            prop_assert_eq!(parse_poly(&p.render("t", &k), "t", &k).unwrap(), p);
        }
    }
}
