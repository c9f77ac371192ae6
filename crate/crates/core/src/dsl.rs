//! Ring description language.
//!
//! ```text
//! expr     := "Zmod(" INT ")"
//!           | "Prod(" expr "," expr ")"
//!           | "PolyQuot(" expr "," IDENT "," poly ")"
//!           | "Quot(" expr ",[" litlist "])"
//! poly     := monomial ("+" monomial)*
//! monomial := lit "*" IDENT ["^" INT] | IDENT ["^" INT] | lit
//! ```
//!
//! Whitespace is insignificant. Element literals are kept verbatim and
//! resolved against the base ring only at evaluation time.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finring::{FiniteRing, RingOptions};
use crate::ideals::Ideal;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zmod(u64),
    Prod(Box<RingExpr>, Box<RingExpr>),
    PolyQuot {
        base: Box<RingExpr>,
        var: String,
        poly: Vec<Monomial>,
    },
    Quot {
        base: Box<RingExpr>,
        lits: Vec<String>,
    },
}

/// `coef * var^exp`; a missing coefficient is an implicit 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coef: Option<String>,
    pub exp: u32,
}

impl Monomial {
    pub fn var_power(exp: u32) -> Self {
        Monomial { coef: None, exp }
    }

    pub fn constant(lit: impl Into<String>) -> Self {
        Monomial {
            coef: Some(lit.into()),
            exp: 0,
        }
    }

    fn write(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.coef, self.exp) {
            (Some(c), 0) => write!(f, "{c}"),
            (None, 0) => write!(f, "{var}^0"),
            (None, 1) => write!(f, "{var}"),
            (None, k) => write!(f, "{var}^{k}"),
            (Some(c), 1) => write!(f, "{c}*{var}"),
            (Some(c), k) => write!(f, "{c}*{var}^{k}"),
        }
    }
}

impl RingExpr {
    pub fn zmod(n: u64) -> Self {
        RingExpr::Zmod(n)
    }

    pub fn prod(a: RingExpr, b: RingExpr) -> Self {
        RingExpr::Prod(Box::new(a), Box::new(b))
    }

    pub fn poly_quot(base: RingExpr, var: &str, poly: Vec<Monomial>) -> Self {
        RingExpr::PolyQuot {
            base: Box::new(base),
            var: var.to_string(),
            poly,
        }
    }

    pub fn quot<S: Into<String>>(base: RingExpr, lits: impl IntoIterator<Item = S>) -> Self {
        RingExpr::Quot {
            base: Box::new(base),
            lits: lits.into_iter().map(Into::into).collect(),
        }
    }

    /// Builds the ring, resolving literals bottom-up.
    pub fn evaluate(&self, opts: &RingOptions) -> Result<Arc<FiniteRing>> {
        match self {
            RingExpr::Zmod(n) => FiniteRing::zmod(*n, opts),
            RingExpr::Prod(a, b) => FiniteRing::product(&a.evaluate(opts)?, &b.evaluate(opts)?, opts),
            RingExpr::PolyQuot { base, var, poly } => {
                let base = base.evaluate(opts)?;
                let deg = poly.iter().map(|m| m.exp).max().unwrap_or(0) as usize;
                let mut coeffs = vec![base.zero(); deg + 1];
                for m in poly {
                    let c = match &m.coef {
                        Some(lit) => base.parse_element(lit)?,
                        None => base.one(),
                    };
                    let slot = &mut coeffs[m.exp as usize];
                    *slot = base.add(*slot, c);
                }
                FiniteRing::poly_quotient(&base, var, &coeffs, opts)
            }
            RingExpr::Quot { base, lits } => {
                let base = base.evaluate(opts)?;
                let gens = lits
                    .iter()
                    .map(|l| base.parse_element(l))
                    .collect::<Result<Vec<_>>>()?;
                let ideal = Ideal::generated(&base, &gens)?;
                Ok(FiniteRing::quotient_with(&base, &ideal, opts)?.0)
            }
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Zmod({n})"),
            RingExpr::Prod(a, b) => write!(f, "Prod({a},{b})"),
            RingExpr::PolyQuot { base, var, poly } => {
                write!(f, "PolyQuot({base},{var},")?;
                for (i, m) in poly.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    m.write(var, f)?;
                }
                f.write_str(")")
            }
            RingExpr::Quot { base, lits } => write!(f, "Quot({base},[{}])", lits.join(",")),
        }
    }
}

impl FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ring(s)
    }
}

pub fn parse_ring(text: &str) -> Result<RingExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("trailing input after ring expression", "end of input"));
    }
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn build_ring(text: &str, opts: &RingOptions) -> Result<Arc<FiniteRing>> {
    parse_ring(text)?.evaluate(opts)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str, expected: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
            expected: expected.to_string(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(f) => format!("unexpected '{f}'"),
                None => "unexpected end of input".to_string(),
            };
            Err(self.error(&found, &format!("'{c}'")))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return None;
        }
        self.pos += end;
        Some(&rest[..end])
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits: &str = {
            let r = self.rest();
            let n = r.bytes().take_while(u8::is_ascii_digit).count();
            &r[..n]
        };
        if digits.is_empty() {
            return Err(self.error("expected an integer", "integer"));
        }
        let v = digits
            .parse()
            .map_err(|_| self.error("integer out of range", "integer < 2^64"))?;
        self.pos += digits.len();
        Ok(v)
    }

    fn expr(&mut self) -> Result<RingExpr> {
        const HEADS: &str = "Zmod, Prod, PolyQuot or Quot";
        let start = {
            self.skip_ws();
            self.pos
        };
        let Some(head) = self.ident() else {
            return Err(self.error("expected a ring constructor", HEADS));
        };
        match head {
            "Zmod" => {
                self.expect('(')?;
                let n = self.int()?;
                self.expect(')')?;
                Ok(RingExpr::Zmod(n))
            }
            "Prod" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(RingExpr::prod(a, b))
            }
            "PolyQuot" => {
                self.expect('(')?;
                let base = self.expr()?;
                self.expect(',')?;
                let var = self
                    .ident()
                    .ok_or_else(|| self.error("expected a variable name", "identifier"))?
                    .to_string();
                self.expect(',')?;
                let poly = self.poly(&var)?;
                self.expect(')')?;
                Ok(RingExpr::PolyQuot {
                    base: Box::new(base),
                    var,
                    poly,
                })
            }
            "Quot" => {
                self.expect('(')?;
                let base = self.expr()?;
                self.expect(',')?;
                self.expect('[')?;
                let mut lits = Vec::new();
                if !self.eat(']') {
                    loop {
                        lits.push(self.literal(&[',', ']'])?);
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                self.expect(')')?;
                Ok(RingExpr::Quot {
                    base: Box::new(base),
                    lits,
                })
            }
            other => {
                self.pos = start;
                Err(self.error(&format!("unknown constructor '{other}'"), HEADS))
            }
        }
    }

    fn poly(&mut self, var: &str) -> Result<Vec<Monomial>> {
        let mut out = vec![self.monomial(var)?];
        while self.eat('+') {
            out.push(self.monomial(var)?);
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        let k = self.int()?;
        u32::try_from(k).map_err(|_| self.error("exponent out of range", "integer < 2^32"))
    }

    fn monomial(&mut self, var: &str) -> Result<Monomial> {
        self.skip_ws();
        let save = self.pos;
        if self.ident() == Some(var) && !matches!(self.peek(), Some('*')) {
            return Ok(Monomial {
                coef: None,
                exp: self.exponent()?,
            });
        }
        self.pos = save;
        let lit = self.literal(&['+', '*', ',', ')'])?;
        if !self.eat('*') {
            return Ok(Monomial::constant(lit));
        }
        match self.ident() {
            Some(v) if v == var => Ok(Monomial {
                coef: Some(lit),
                exp: self.exponent()?,
            }),
            _ => Err(self.error("expected the polynomial variable after '*'", var)),
        }
    }

    /// A balanced run of characters up to one of `stops` at nesting depth 0.
    fn literal(&mut self, stops: &[char]) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        let mut out = String::new();
        let mut end = self.src.len();
        for (i, c) in self.rest().char_indices() {
            if depth == 0 && (stops.contains(&c) || c == ')' || c == ']') {
                end = start + i;
                break;
            }
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if !c.is_whitespace() {
                out.push(c);
            }
        }
        if depth != 0 {
            self.pos = self.src.len();
            return Err(self.error("unbalanced brackets in element literal", "')' or ']'"));
        }
        if out.is_empty() {
            return Err(self.error("expected an element literal", "element literal"));
        }
        self.pos = end;
        Ok(out)
    }
}
