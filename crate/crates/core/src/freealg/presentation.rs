//! Text format for presentations.
//!
//! ```text
//! # comments start with '#'
//! modulus 3
//! order weighted-lex          # or: deglex
//! generator a 0 1             # name, then its weight vector
//! generator b 1 0             # later generators take precedence on ties
//! augmentation a 0            # optional, defaults to 0
//! relation b*a - a*b - (1/2)*a^2
//! ```
//!
//! Relations are infix expressions over `+ - * / ^` and parentheses; division is
//! only by nonzero scalars.

use std::fmt;
use std::str::FromStr;

use super::{FreeElement, MonomialOrder, OrderKind, Word};
use crate::ffmat::PrimeField;
use crate::{Error, Result};

/// Generators, order, relations and augmentation of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub field: PrimeField,
    pub names: Vec<String>,
    pub order: MonomialOrder,
    pub relations: Vec<FreeElement>,
    /// Value of the augmentation on each generator.
    pub augmentation: Vec<u32>,
}

impl Presentation {
    pub fn new(
        field: PrimeField,
        names: Vec<String>,
        order: MonomialOrder,
        relations: Vec<FreeElement>,
    ) -> Result<Self> {
        if names.len() != order.generators() {
            return Err(Error::DimensionMismatch {
                expected: order.generators(),
                got: names.len(),
            });
        }
        let augmentation = vec![0; names.len()];
        Ok(Presentation {
            field,
            names,
            order,
            relations,
            augmentation,
        })
    }

    pub fn generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses one expression over this presentation's generators.
    pub fn parse_expr(&self, text: &str) -> Result<FreeElement> {
        parse_expression(self.field, &self.names, text, 0)
    }

    /// Renders an element with this presentation's names and order.
    pub fn render(&self, f: &FreeElement) -> String {
        f.to_expr(self.field, &self.order, &self.names)
    }

    /// Value of the augmentation on an element of the free algebra.
    pub fn augment(&self, f: &FreeElement) -> u32 {
        let fld = self.field;
        f.terms().fold(0, |acc, (w, c)| {
            let v = w
                .letters()
                .iter()
                .fold(1, |x, &g| fld.mul(x, self.augmentation[g as usize]));
            fld.mul_add(acc, c, v)
        })
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "modulus {}", self.field.p())?;
        let kind = match self.order.kind() {
            OrderKind::WeightedLex => "weighted-lex",
            OrderKind::DegLex => "deglex",
        };
        writeln!(f, "order {kind}")?;
        // generators are written in increasing precedence
        let mut gens: Vec<usize> = (0..self.generators()).collect();
        gens.sort_by_key(|&g| self.order.precedence()[g]);
        for g in gens {
            let w: Vec<String> = self.order.weights()[g].iter().map(u32::to_string).collect();
            writeln!(f, "generator {} {}", self.names[g], w.join(" "))?;
        }
        for (g, &e) in self.augmentation.iter().enumerate() {
            if e != 0 {
                writeln!(f, "augmentation {} {e}", self.names[g])?;
            }
        }
        for r in &self.relations {
            writeln!(f, "relation {}", self.render(r))?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut field = None;
        let mut kind = None;
        let mut gens: Vec<(String, Vec<u32>)> = Vec::new();
        let mut aug: Vec<(usize, String, i64)> = Vec::new();
        let mut rels: Vec<(usize, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match head {
                "modulus" => {
                    let p: u32 = rest.parse().map_err(|_| err(ln, "modulus must be an integer"))?;
                    field = Some(PrimeField::new(p).map_err(|e| err(ln, &e.to_string()))?);
                }
                "order" => {
                    kind = Some(match rest {
                        "weighted-lex" => OrderKind::WeightedLex,
                        "deglex" => OrderKind::DegLex,
                        _ => return Err(err(ln, "order must be weighted-lex or deglex")),
                    });
                }
                "generator" => {
                    let mut parts = rest.split_whitespace();
                    let name = parts.next().ok_or_else(|| err(ln, "missing generator name"))?;
                    if !name.chars().next().is_some_and(char::is_alphabetic)
                        || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
                    {
                        return Err(err(ln, "generator names are identifiers"));
                    }
                    if gens.iter().any(|(n, _)| n == name) {
                        return Err(err(ln, "duplicate generator"));
                    }
                    let weights: Vec<u32> = parts
                        .map(|t| t.parse().map_err(|_| err(ln, "weights must be non-negative integers")))
                        .collect::<Result<_>>()?;
                    let weights = if weights.is_empty() { vec![1] } else { weights };
                    gens.push((name.to_string(), weights));
                }
                "augmentation" => {
                    let mut parts = rest.split_whitespace();
                    let name = parts.next().ok_or_else(|| err(ln, "missing generator name"))?;
                    let v: i64 = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(ln, "missing augmentation value"))?;
                    aug.push((ln, name.to_string(), v));
                }
                "relation" => rels.push((ln, rest.to_string())),
                _ => return Err(err(ln, &format!("unknown directive '{head}'"))),
            }
        }
        let field = field.ok_or_else(|| err(0, "missing modulus"))?;
        if gens.is_empty() {
            return Err(err(0, "no generators"));
        }
        let names: Vec<String> = gens.iter().map(|(n, _)| n.clone()).collect();
        let weights: Vec<Vec<u32>> = gens.into_iter().map(|(_, w)| w).collect();
        let n = names.len() as u32;
        let order = MonomialOrder::new(kind.unwrap_or(OrderKind::DegLex), weights, (0..n).collect())
            .map_err(|e| err(0, &e.to_string()))?;
        let relations = rels
            .iter()
            .map(|(ln, r)| parse_expression(field, &names, r, *ln))
            .collect::<Result<Vec<_>>>()?;
        let mut pres = Presentation::new(field, names, order, relations)?;
        for (ln, name, v) in aug {
            let g = pres.generator(&name).ok_or_else(|| err(ln, "unknown generator"))?;
            pres.augmentation[g] = field.reduce(v);
        }
        Ok(pres)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("number too large: {s}"),
            })?));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse {
                line,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: PrimeField,
    names: &'a [String],
    line: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            msg: msg.into(),
        })
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<FreeElement> {
        let f = self.field;
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let t = self.term()?;
            acc.add_scaled(f, &t, if op == '+' { 1 } else { f.neg(1) });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FreeElement> {
        let f = self.field;
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = acc.mul(f, &rhs);
            } else {
                let scalar = rhs.len() <= 1 && rhs.terms().all(|(w, _)| w.is_empty());
                let c = rhs.coeff(&Word::empty());
                if !scalar || c == 0 {
                    return self.err("division only by nonzero scalars");
                }
                acc = acc.scaled(f, f.inv(c));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FreeElement> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            let x = self.unary()?;
            return Ok(x.scaled(self.field, self.field.neg(1)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<FreeElement> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let Some(Tok::Num(n)) = self.toks.get(self.pos).cloned() else {
                return self.err("exponent must be a non-negative integer");
            };
            self.pos += 1;
            return Ok(base.pow(self.field, n as usize));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FreeElement> {
        let f = self.field;
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(FreeElement::term(Word::empty(), f.reduce(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.names.iter().position(|x| *x == name) {
                    Some(g) => Ok(FreeElement::generator(g)),
                    None => self.err(format!("unknown generator '{name}'")),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            other => self.err(format!("unexpected token {other:?}")),
        }
    }
}

fn parse_expression(field: PrimeField, names: &[String], text: &str, line: usize) -> Result<FreeElement> {
    let toks = tokenize(text, line)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            line,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        field,
        names,
        line,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
