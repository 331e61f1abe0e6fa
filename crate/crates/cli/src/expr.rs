//! Group expressions: `S(d)`, `A(d)`, `C(d)`, `D(d)`, `gen[d]{...}`,
//! `product(G1,G2)`, `wreath(V,W)`.

use std::fmt;
use std::sync::Arc;

use polya_core::{
    direct_product_embed, named_group, wreath_embed, GroupKind, PermGroup, Permutation,
};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Named(GroupKind, usize),
    Generated {
        degree: usize,
        gens: Vec<Permutation>,
    },
    Product(Box<GroupExpr>, Box<GroupExpr>),
    /// `wreath(V, W)`: `W` permutes `deg W` copies of `V`.
    Wreath(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut p = Parser {
            s: text.as_bytes(),
            pos: 0,
            text,
        };
        let e = p.expr()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        match self {
            GroupExpr::Named(_, d) => *d,
            GroupExpr::Generated { degree, .. } => *degree,
            GroupExpr::Product(a, b) => a.degree() + b.degree(),
            GroupExpr::Wreath(v, w) => v.degree() * w.degree(),
        }
    }

    pub fn build(&self) -> Result<PermGroup, CliError> {
        Ok(match self {
            GroupExpr::Named(k, d) => named_group(*k, *d)?,
            GroupExpr::Generated { degree, gens } => PermGroup::closure(*degree, gens)?,
            GroupExpr::Product(a, b) => direct_product_embed(&a.build()?, &b.build()?)?,
            GroupExpr::Wreath(v, w) => wreath_embed(&v.build()?, &w.build()?)?,
        })
    }

    pub fn build_arc(&self) -> Result<Arc<PermGroup>, CliError> {
        self.build().map(Arc::new)
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Named(k, d) => {
                let c = match k {
                    GroupKind::Symmetric => 'S',
                    GroupKind::Alternating => 'A',
                    GroupKind::Cyclic => 'C',
                    GroupKind::Dihedral => 'D',
                };
                write!(f, "{c}({d})")
            }
            GroupExpr::Generated { degree, gens } => {
                write!(f, "gen[{degree}]{{")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str("}")
            }
            GroupExpr::Product(a, b) => write!(f, "product({a},{b})"),
            GroupExpr::Wreath(v, w) => write!(f, "wreath({v},{w})"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> CliError {
        CliError::Usage(format!(
            "group expression {:?}: {what} at offset {}",
            self.text, self.pos
        ))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<(), CliError> {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> &str {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<usize, CliError> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected a number"))
    }

    fn expr(&mut self) -> Result<GroupExpr, CliError> {
        let at = self.pos;
        let name = self.ident().to_string();
        let kind = match name.as_str() {
            "S" => Some(GroupKind::Symmetric),
            "A" => Some(GroupKind::Alternating),
            "C" => Some(GroupKind::Cyclic),
            "D" => Some(GroupKind::Dihedral),
            _ => None,
        };
        if let Some(kind) = kind {
            self.eat(b'(')?;
            let d = self.number()?;
            self.eat(b')')?;
            return Ok(GroupExpr::Named(kind, d));
        }
        match name.as_str() {
            "gen" => {
                self.eat(b'[')?;
                let degree = self.number()?;
                self.eat(b']')?;
                self.eat(b'{')?;
                let start = self.pos;
                let close = self.text[start..]
                    .find('}')
                    .map(|i| start + i)
                    .ok_or_else(|| self.err("unclosed '{'"))?;
                let body = &self.text[start..close];
                let mut gens = Vec::new();
                for piece in split_top_level(body) {
                    let piece = piece.trim();
                    if piece.is_empty() {
                        continue;
                    }
                    gens.push(Permutation::from_cycles(piece, degree)?);
                }
                self.pos = close + 1;
                Ok(GroupExpr::Generated { degree, gens })
            }
            "product" | "wreath" => {
                self.eat(b'(')?;
                let a = self.expr()?;
                self.eat(b',')?;
                let b = self.expr()?;
                self.eat(b')')?;
                Ok(if name == "product" {
                    GroupExpr::Product(Box::new(a), Box::new(b))
                } else {
                    GroupExpr::Wreath(Box::new(a), Box::new(b))
                })
            }
            _ => {
                self.pos = at;
                Err(self.err("unknown group"))
            }
        }
    }
}

/// Splits on commas that are not inside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
