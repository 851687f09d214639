//! Reader for rational-function expressions such as `7a-1`, `(q-1)/(t^2+1)`
//! or `a/((2*a+1)*(a+1))`. Juxtaposition means multiplication and `α` is an
//! alias for `a`.

use num_bigint::BigInt;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::vars::Var;
use super::CoeffError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, CoeffError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().unwrap()));
        } else if c == 'α' {
            out.push(Tok::Ident("a".into()));
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(CoeffError::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, CoeffError> {
        Err(CoeffError::Parse(format!("{msg} at token {}", self.pos)))
    }

    fn expr(&mut self) -> Result<RatFunc, CoeffError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, CoeffError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                acc = acc.try_div(&self.unary()?)?;
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, CoeffError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, CoeffError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = match self.peek() {
                Some(Tok::Num(n)) => i32::try_from(n.clone())
                    .map_err(|_| CoeffError::Parse("exponent too large".into()))?,
                _ => return self.err("expected integer exponent"),
            };
            self.pos += 1;
            if base.is_zero() && neg {
                return Err(CoeffError::DivisionByZero);
            }
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, CoeffError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::from_bigint(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(RatFunc::var(Var::named(&name)?))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

/// Parses a rational-function expression.
pub fn parse(s: &str) -> Result<RatFunc, CoeffError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(CoeffError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses an expression that must be a polynomial.
pub fn parse_poly(s: &str) -> Result<Poly, CoeffError> {
    let r = parse(s)?;
    if !r.is_polynomial() {
        return Err(CoeffError::Parse(format!("{s:?} is not a polynomial")));
    }
    Ok(r.num().clone())
}

/// Parses a comma-separated list of expressions (commas inside parentheses
/// do not split).
pub fn parse_list(s: &str) -> Result<Vec<RatFunc>, CoeffError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(parse(&cur)?);
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(parse(&cur)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_multiplication() {
        assert_eq!(parse("7a-1").unwrap(), parse("7*a-1").unwrap());
        assert_eq!(parse("2(a+1)").unwrap(), parse("2*a+2").unwrap());
        assert_eq!(parse("7α-1").unwrap(), parse("7*a-1").unwrap());
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("-a^2").unwrap(), -parse("a^2").unwrap());
        assert_eq!(parse("a^-1").unwrap(), parse("1/a").unwrap());
        assert_eq!(parse("1/2/a").unwrap(), parse("1/(2*a)").unwrap());
    }

    #[test]
    fn lists() {
        let xs = parse_list("7a-1,5a-3,4a-4").unwrap();
        assert_eq!(xs.len(), 3);
        assert_eq!(xs[2], parse("4*a-4").unwrap());
    }

    #[test]
    fn errors() {
        assert!(parse("").is_err());
        assert!(parse("a+").is_err());
        assert!(parse("(a").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("a$").is_err());
    }
}
