//! Text to exact polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | 'sqrt' '(' integer ')' | '(' expr ')'
//! ```
//!
//! Division is only by nonzero constants. At most one radicand may occur.

use std::collections::BTreeMap;

use cubic_waring::{BinaryCubic, FieldElement, Radicand, Rational, TernaryCubic, TernaryForm};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("not a homogeneous cubic")]
    NotHomogeneousDegree3,
    #[error("unsupported radical: {0}")]
    UnsupportedRadical(String),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax-error",
            ParseError::NotHomogeneousDegree3 => "not-homogeneous-degree-3",
            ParseError::UnsupportedRadical(_) => "unsupported-radical",
        }
    }
}

type Exps = [u32; 3];

/// Sparse polynomial used while parsing; any degree.
#[derive(Clone, Debug, Default)]
struct Poly(BTreeMap<Exps, FieldElement>);

impl Poly {
    fn constant(c: FieldElement) -> Poly {
        let mut p = Poly::default();
        p.push([0, 0, 0], c);
        p
    }

    fn var(i: usize) -> Poly {
        let mut e = [0; 3];
        e[i] = 1;
        let mut p = Poly::default();
        p.push(e, FieldElement::one());
        p
    }

    fn push(&mut self, e: Exps, c: FieldElement) {
        let sum = match self.0.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.0.insert(e, sum);
        }
    }

    fn add(mut self, rhs: Poly) -> Poly {
        for (e, c) in rhs.0 {
            self.push(e, c);
        }
        self
    }

    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|(e, c)| (e, -&c)).collect())
    }

    fn mul(&self, rhs: &Poly) -> Poly {
        let mut out = Poly::default();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &rhs.0 {
                out.push([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }

    fn as_constant(&self) -> Option<FieldElement> {
        match self.0.len() {
            0 => Some(FieldElement::zero()),
            1 => self.0.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Int,
    Var(usize),
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

struct Lexed {
    kind: Tok,
    pos: usize,
    text: String,
}

/// Maps a variable letter to its slot, `None` if it is not a variable.
type VarMap = fn(char) -> Option<usize>;

fn ternary_vars(c: char) -> Option<usize> {
    match c {
        'x' | 'X' => Some(0),
        'y' | 'Y' => Some(1),
        'z' | 'Z' => Some(2),
        _ => None,
    }
}

fn binary_vars(c: char) -> Option<usize> {
    match c {
        'x' | 'X' | 'u' | 'U' | 's' | 'S' => Some(0),
        'y' | 'Y' | 'v' | 'V' | 't' | 'T' => Some(1),
        _ => None,
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, message: message.into() }
}

fn lex(src: &str, vars: VarMap) -> Result<Vec<Lexed>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = |kind| Lexed { kind, pos, text: c.to_string() };
        match c {
            c if c.is_whitespace() => {}
            '+' => out.push(single(Tok::Plus)),
            '-' | '\u{2212}' => out.push(single(Tok::Minus)),
            '*' | '\u{b7}' => out.push(single(Tok::Star)),
            '/' => out.push(single(Tok::Slash)),
            '^' => out.push(single(Tok::Caret)),
            '(' => out.push(single(Tok::Open)),
            ')' => out.push(single(Tok::Close)),
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let text = chars[i..j].iter().map(|&(_, c)| c).collect();
                out.push(Lexed { kind: Tok::Int, pos, text });
                i = j;
                continue;
            }
            c if c.is_alphabetic() => {
                let rest: String = chars[i..].iter().take(4).map(|&(_, c)| c).collect();
                if rest == "sqrt" {
                    out.push(Lexed { kind: Tok::Sqrt, pos, text: rest });
                    i += 4;
                    continue;
                }
                let Some(v) = vars(c) else {
                    return Err(syntax(pos, format!("unknown variable '{c}'")));
                };
                out.push(single(Tok::Var(v)));
            }
            _ => return Err(syntax(pos, format!("unexpected character '{c}'"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Lexed],
    i: usize,
    end: usize,
    radicand: Option<Radicand>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.i).map(|t| t.kind)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.pos)
    }

    fn expect(&mut self, kind: Tok, what: &str) -> Result<&Lexed, ParseError> {
        match self.toks.get(self.i) {
            Some(t) if t.kind == kind => {
                self.i += 1;
                Ok(t)
            }
            _ => Err(syntax(self.pos(), format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    acc = acc.add(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    let pos = self.pos();
                    let d = self.unary()?;
                    let c = d
                        .as_constant()
                        .ok_or_else(|| syntax(pos, "division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(syntax(pos, "division by zero"));
                    }
                    acc = acc.mul(&Poly::constant(c.recip()));
                }
                Some(Tok::Int | Tok::Var(_) | Tok::Sqrt | Tok::Open) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(Tok::Plus) => {
                self.i += 1;
                self.unary()
            }
            Some(Tok::Minus) => {
                self.i += 1;
                Ok(self.unary()?.neg())
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.i += 1;
        let pos = self.pos();
        let e: u32 = self
            .expect(Tok::Int, "an integer exponent")?
            .text
            .parse()
            .ok()
            .filter(|&e| e <= 64)
            .ok_or_else(|| syntax(pos, "exponent too large"))?;
        let mut out = Poly::constant(FieldElement::one());
        for _ in 0..e {
            out = out.mul(&base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Int) => {
                let n: Rational = self.toks[self.i].text.parse().expect("digits");
                self.i += 1;
                Ok(Poly::constant(FieldElement::rational(n)))
            }
            Some(Tok::Var(v)) => {
                self.i += 1;
                Ok(Poly::var(v))
            }
            Some(Tok::Sqrt) => {
                self.i += 1;
                self.expect(Tok::Open, "'(' after sqrt")?;
                let text = self.expect(Tok::Int, "an integer radicand")?.text.clone();
                self.expect(Tok::Close, "')'")?;
                self.radical(&text)
            }
            Some(Tok::Open) => {
                self.i += 1;
                let inner = self.expr()?;
                self.expect(Tok::Close, "')'")?;
                Ok(inner)
            }
            Some(_) => Err(syntax(pos, format!("unexpected '{}'", self.toks[self.i].text))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }

    fn radical(&mut self, text: &str) -> Result<Poly, ParseError> {
        let bad = || ParseError::UnsupportedRadical(format!("sqrt({text}) needs a square-free integer > 1"));
        let d: u64 = text.parse().map_err(|_| bad())?;
        let r = Radicand::new(d).map_err(|_| bad())?;
        match &self.radicand {
            Some(prev) if *prev != r => {
                return Err(ParseError::UnsupportedRadical(format!(
                    "sqrt({prev}) and sqrt({text}) cannot be combined"
                )))
            }
            _ => self.radicand = Some(r.clone()),
        }
        Ok(Poly::constant(FieldElement::sqrt_radicand(&r)))
    }
}

fn parse_poly(src: &str, vars: VarMap) -> Result<Poly, ParseError> {
    let toks = lex(src, vars)?;
    let mut p = Parser { toks: &toks, i: 0, end: src.len(), radicand: None };
    let poly = p.expr()?;
    if p.i < toks.len() {
        return Err(syntax(toks[p.i].pos, format!("unexpected '{}'", toks[p.i].text)));
    }
    Ok(poly)
}

fn homogeneous_cubic(p: Poly) -> Result<TernaryCubic, ParseError> {
    let mut form = TernaryForm::zero(3);
    for (e, c) in p.0 {
        if e.iter().sum::<u32>() != 3 {
            return Err(ParseError::NotHomogeneousDegree3);
        }
        form.set_coeff(e.map(|k| k as usize), c);
    }
    Ok(TernaryCubic::from_form(form).expect("degree three"))
}

/// Parses a ternary cubic in `x, y, z`.
pub fn parse_cubic(src: &str) -> Result<TernaryCubic, ParseError> {
    homogeneous_cubic(parse_poly(src, ternary_vars)?)
}

/// Parses a binary cubic in `x, y` (also accepted: `u, v` or `s, t`).
pub fn parse_binary(src: &str) -> Result<BinaryCubic, ParseError> {
    let f = homogeneous_cubic(parse_poly(src, binary_vars)?)?;
    Ok(BinaryCubic::from_ternary_xy(&f).expect("no z in binary input"))
}

/// Parses a constant such as `3/4` or `1/2-3/5*sqrt(2)`.
pub fn parse_scalar(src: &str) -> Result<FieldElement, ParseError> {
    parse_poly(src, |_| None)?
        .as_constant()
        .ok_or_else(|| syntax(0, "expected a constant"))
}

/// Parses `a,b,c`, each entry a constant.
pub fn parse_triple(src: &str) -> Result<[FieldElement; 3], ParseError> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 3 {
        return Err(syntax(0, "expected three comma-separated values"));
    }
    let mut out: [FieldElement; 3] = Default::default();
    let mut offset = 0;
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = parse_scalar(part).map_err(|e| match e {
            ParseError::Syntax { pos, message } => ParseError::Syntax { pos: pos + offset, message },
            other => other,
        })?;
        offset += part.len() + 1;
    }
    FieldElement::common_tower(out.iter())
        .map_err(|e| ParseError::UnsupportedRadical(e.to_string()))?;
    Ok(out)
}
