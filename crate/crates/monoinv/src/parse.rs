//! Polynomial syntax: integers, variables `x0..xn`, `+ - * ^` and
//! parentheses. Generators of an ideal are separated by commas, semicolons
//! or newlines. Coefficients are reduced into the field at parse time.

use std::collections::BTreeMap;
use std::fmt;

use monoinv_core::{Elem, Ideal, Monomial, Polynomial, PrimeField, Ring, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    /// Variable index at or beyond the declared variable count.
    UnknownVariable(String),
    ExponentTooLarge,
    Inhomogeneous,
    /// A literal too large for the field: the prime must exceed twice every
    /// coefficient magnitude.
    CoefficientTooLarge(String),
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable {v}"),
            ParseErrorKind::ExponentTooLarge => f.write_str("exponent too large"),
            ParseErrorKind::Inhomogeneous => f.write_str("generator is not homogeneous"),
            ParseErrorKind::CoefficientTooLarge(c) => write!(f, "coefficient {c} too large for the prime"),
            ParseErrorKind::Empty => f.write_str("no generators"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Sep,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::Var(i) => write!(f, "variable x{i}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Sep => f.write_str("separator"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let (c, column) = (chars[i], i + 1);
            let err = |kind| ParseError { line: li + 1, column, kind };
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' | ';' => Some(Tok::Sep),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Spanned { tok, line: li + 1, column });
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Spanned { tok: Tok::Int(chars[start..i].iter().collect()), line: li + 1, column });
            } else if c == 'x' {
                let start = i + 1;
                i = start;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let index = digits.parse::<usize>().map_err(|_| err(ParseErrorKind::UnknownVariable(format!("x{digits}"))))?;
                out.push(Spanned { tok: Tok::Var(index), line: li + 1, column });
            } else {
                return Err(err(ParseErrorKind::UnexpectedChar(c)));
            }
        }
        out.push(Spanned { tok: Tok::Sep, line: li + 1, column: chars.len() + 1 });
    }
    Ok(out)
}

/// Sparse polynomial over the field during parsing, not yet known to be
/// homogeneous.
type Sparse = BTreeMap<Vec<u32>, Elem>;

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    field: PrimeField,
    nvars: usize,
    end: (usize, usize),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        let (line, column) = self.peek().map_or(self.end, |s| (s.line, s.column));
        ParseError { line, column, kind }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(s) => self.error_here(ParseErrorKind::UnexpectedToken(s.tok.to_string())),
            None => self.error_here(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().is_some_and(|s| &s.tok == tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, c: Elem) -> Sparse {
        let mut s = Sparse::new();
        if !c.is_zero() {
            s.insert(vec![0; self.nvars], c);
        }
        s
    }

    fn add(&self, mut a: Sparse, b: Sparse, negate: bool) -> Sparse {
        for (m, c) in b {
            let c = if negate { self.field.neg(c) } else { c };
            let e = a.entry(m).or_insert(Elem::ZERO);
            *e = self.field.add(*e, c);
        }
        a.retain(|_, c| !c.is_zero());
        a
    }

    fn mul(&self, a: &Sparse, b: &Sparse) -> Result<Sparse, ParseErrorKind> {
        let mut out = Sparse::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                if m.iter().any(|&e| e > u16::MAX as u32) {
                    return Err(ParseErrorKind::ExponentTooLarge);
                }
                let e = out.entry(m).or_insert(Elem::ZERO);
                *e = self.field.add(*e, self.field.mul(*ca, *cb));
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn expr(&mut self) -> Result<Sparse, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                let t = self.term()?;
                acc = self.add(acc, t, false);
            } else if self.eat(&Tok::Minus) {
                let t = self.term()?;
                acc = self.add(acc, t, true);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Sparse, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Star) {
            let at = self.pos;
            let f = self.unary()?;
            acc = self.mul(&acc, &f).map_err(|k| ParseError { kind: k, ..self.error_at(at) })?;
        }
        Ok(acc)
    }

    fn error_at(&self, pos: usize) -> ParseError {
        let (line, column) = self.toks.get(pos).map_or(self.end, |s| (s.line, s.column));
        ParseError { line, column, kind: ParseErrorKind::UnexpectedEnd }
    }

    fn unary(&mut self) -> Result<Sparse, ParseError> {
        if self.eat(&Tok::Minus) {
            let u = self.unary()?;
            return Ok(self.add(Sparse::new(), u, true));
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Sparse, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let at = self.pos;
        let Some(Spanned { tok: Tok::Int(digits), .. }) = self.peek().cloned() else {
            return Err(self.unexpected());
        };
        self.pos += 1;
        let too_large = || ParseError { kind: ParseErrorKind::ExponentTooLarge, ..self.error_at(at) };
        let e: u32 = digits.parse().ok().filter(|&e| e <= u16::MAX as u32).ok_or_else(too_large)?;
        let mut acc = self.constant(Elem::ONE);
        for _ in 0..e {
            acc = self.mul(&acc, &base).map_err(|k| ParseError { kind: k, ..self.error_at(at) })?;
            if acc.is_empty() {
                break;
            }
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Sparse, ParseError> {
        let Some(s) = self.peek().cloned() else {
            return Err(self.unexpected());
        };
        match s.tok {
            Tok::Int(digits) => {
                let v: u64 = digits
                    .parse()
                    .ok()
                    .filter(|&v: &u64| v.saturating_mul(2) < self.field.characteristic() as u64)
                    .ok_or_else(|| self.error_here(ParseErrorKind::CoefficientTooLarge(digits.clone())))?;
                self.pos += 1;
                Ok(self.constant(self.field.elem(v as u32)))
            }
            Tok::Var(i) => {
                if i >= self.nvars {
                    return Err(self.error_here(ParseErrorKind::UnknownVariable(format!("x{i}"))));
                }
                self.pos += 1;
                let mut m = vec![0; self.nvars];
                m[i] = 1;
                Ok(Sparse::from([(m, Elem::ONE)]))
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Largest variable index used in `text`, if any.
pub fn max_variable(text: &str) -> Result<Option<usize>, ParseError> {
    Ok(tokenize(text)?.iter().filter_map(|s| if let Tok::Var(i) = s.tok { Some(i) } else { None }).max())
}

/// Parses a list of homogeneous generators in `nvars` variables. Zero
/// generators are kept so that positions match the input.
pub fn parse_generators(text: &str, field: PrimeField, nvars: usize) -> Result<Vec<Polynomial>, ParseError> {
    let toks = tokenize(text)?;
    let end = toks.last().map_or((1, 1), |s| (s.line, s.column));
    let ring = Ring::new(field, nvars).map_err(|_| ParseError {
        line: 1,
        column: 1,
        kind: ParseErrorKind::UnknownVariable(format!("x{}", nvars.saturating_sub(1))),
    })?;
    let mut p = Parser { toks: &toks, pos: 0, field, nvars, end };
    let mut gens = Vec::new();
    loop {
        while p.eat(&Tok::Sep) {}
        let Some(start) = p.peek().cloned() else { break };
        let sparse = p.expr()?;
        if p.peek().is_some_and(|s| s.tok != Tok::Sep) {
            return Err(p.unexpected());
        }
        let terms = sparse.into_iter().map(|(m, c)| (c, Monomial::new(&m).expect("variable count checked")));
        let poly = Polynomial::from_terms(ring, terms)
            .map_err(|_| ParseError { line: start.line, column: start.column, kind: ParseErrorKind::Inhomogeneous })?;
        gens.push(poly);
    }
    Ok(gens)
}

/// Parses a single homogeneous polynomial.
pub fn parse_polynomial(text: &str, field: PrimeField, nvars: usize) -> Result<Polynomial, ParseError> {
    let mut gens = parse_generators(text, field, nvars)?;
    match gens.len() {
        0 => Ok(Polynomial::zero(Ring::new(field, nvars).expect("checked by parse_generators"))),
        1 => Ok(gens.pop().expect("one generator")),
        _ => Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::UnexpectedToken("separator".into()) }),
    }
}

/// Parses an ideal. Without `nvars` the variable count is one more than the
/// largest index used.
pub fn parse_ideal(text: &str, field: PrimeField, nvars: Option<usize>) -> Result<Ideal, ParseError> {
    let nvars = match nvars {
        Some(n) => n,
        None => max_variable(text)?.map_or(1, |i| i + 1),
    };
    if nvars > MAX_VARS {
        return Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::UnknownVariable(format!("x{}", nvars - 1)) });
    }
    let gens = parse_generators(text, field, nvars)?;
    if gens.is_empty() {
        return Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::Empty });
    }
    let ring = Ring::new(field, nvars).expect("checked above");
    Ok(Ideal::new(ring, gens).unwrap_or_else(|_| Ideal::zero(ring)))
}

/// Renders generators one per line, in the syntax accepted by the parser.
pub fn render_generators(gens: &[Polynomial]) -> String {
    gens.iter().map(|g| format!("{g}\n")).collect()
}
