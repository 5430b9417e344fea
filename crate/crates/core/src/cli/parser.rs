//! The ideal file format.
//!
//! ```text
//! # comments start with '#'
//! ring x 3 y 2
//! field qq            # optional: qq, fp <p> or fp:<p>
//! gens
//! x0^2*y0^2 + x1^2*y1^2 + x2^2*y0*y1
//! x2*y0^3 + (x0+x1)*y1^3
//! ```
//!
//! One generator per line after `gens`. Expressions use `+ - * ^`,
//! parentheses, integer and `a/b` rational coefficients, and the variables
//! `x0..xn`, `y0..ym`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Field, Ideal, Monomial, Polynomial, RingDescriptor, Var};
use crate::error::{Error, Result};

/// A parsed ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub ring: RingDescriptor,
    /// The field named in the file, if any.
    pub field: Option<Field>,
    pub ideal: Ideal,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn strip_comment(s: &str) -> &str {
    s.split('#').next().unwrap_or("")
}

/// Parse ideal file text. `field_override` replaces the file's field
/// directive; `allow_inhomogeneous` skips the bihomogeneity check.
pub fn parse_ideal_str(text: &str, field_override: Option<Field>, allow_inhomogeneous: bool) -> Result<IdealFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty());

    let (ln, header) = lines.next().ok_or_else(|| err(1, 1, "empty file, expected 'ring x <n> y <m>'"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let col = |w: usize| header.find(words.get(w).copied().unwrap_or("")).unwrap_or(0) + 1;
    if words.len() != 5 || words[0] != "ring" || words[1] != "x" || words[3] != "y" {
        return Err(err(ln, col(0), "expected 'ring x <n> y <m>'"));
    }
    let count = |w: usize| -> Result<usize> {
        words[w]
            .parse::<usize>()
            .map_err(|_| err(ln, col(w), format!("expected a variable count, found '{}'", words[w])))
    };
    let (nx, ny) = (count(2)?, count(4)?);
    let mut ring = RingDescriptor::new(nx, ny).map_err(|e| err(ln, 1, e.to_string()))?;

    let mut field = None;
    let (mut ln, mut line) = lines.next().ok_or_else(|| err(ln + 1, 1, "expected 'gens'"))?;
    if line.trim_start().starts_with("field") {
        let directive = line.trim().trim_start_matches("field").trim();
        let directive = match directive.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["fp", p] => format!("fp:{p}"),
            _ => directive.to_string(),
        };
        let f: Field = directive
            .parse()
            .map_err(|e: Error| err(ln, line.find("field").unwrap_or(0) + 7, e.to_string()))?;
        field = Some(f);
        (ln, line) = lines.next().ok_or_else(|| err(ln + 1, 1, "expected 'gens'"))?;
    }
    if line.trim() != "gens" {
        return Err(err(ln, line.len() - line.trim_start().len() + 1, "expected 'gens'"));
    }
    if let Some(f) = field_override.or(field) {
        ring = ring.with_field(f).map_err(|e| err(ln, 1, e.to_string()))?;
    }

    let mut gens = Vec::new();
    for (ln, line) in lines {
        let p = parse_polynomial_at(line, ring, ln)?;
        if p.is_zero() {
            continue;
        }
        if !allow_inhomogeneous && !p.is_bihomogeneous() {
            return Err(err(
                ln,
                line.len() - line.trim_start().len() + 1,
                format!("generator is not bihomogeneous: {p}"),
            ));
        }
        gens.push(p);
    }
    let ideal = Ideal::new(ring, gens)?;
    Ok(IdealFile { ring, field, ideal })
}

/// Read and parse an ideal file.
pub fn parse_ideal(path: &std::path::Path, field_override: Option<Field>, allow_inhomogeneous: bool) -> Result<IdealFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_ideal_str(&text, field_override, allow_inhomogeneous)
}

/// Print an ideal in the file format; parsing the output gives back the
/// same ideal.
pub fn format_ideal(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut s = format!("ring x {} y {}\n", ring.nx(), ring.ny());
    if let Field::Prime(p) = ring.field() {
        s.push_str(&format!("field fp {p}\n"));
    }
    s.push_str("gens\n");
    for g in ideal.generators() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

/// Parse a single polynomial expression in `ring`.
pub fn parse_polynomial(text: &str, ring: RingDescriptor) -> Result<Polynomial> {
    parse_polynomial_at(text, ring, 1)
}

fn parse_polynomial_at(text: &str, ring: RingDescriptor, line: usize) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        line,
        ring,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    ring: RingDescriptor,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.pos + 1, message)
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

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn small_number(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| {
            self.pos = start;
            self.error(format!("{what} is too large"))
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.negate()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.number()?;
                    if d.is_zero() {
                        self.pos = at;
                        return Err(self.error("division by zero"));
                    }
                    let Some(inv) = self.ring.field().inv(&BigRational::from_integer(d)) else {
                        self.pos = at;
                        return Err(self.error("denominator vanishes in the coefficient field"));
                    };
                    acc = acc.mul(&Polynomial::constant(self.ring, inv))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.small_number("exponent")?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(Polynomial::constant(self.ring, BigRational::from_integer(n)))
            }
            Some(c @ (b'x' | b'y')) => {
                let at = self.pos;
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(|d| d.is_ascii_digit()) {
                    self.pos = at;
                    return Err(self.error(format!("expected an index after '{}'", c as char)));
                }
                let i = self.small_number("variable index")? as usize;
                let (v, n) = if c == b'x' { (Var::X(i), self.ring.nx()) } else { (Var::Y(i), self.ring.ny()) };
                if i >= n {
                    self.pos = at;
                    return Err(self.error(format!("unknown variable {v} (ring has {n})")));
                }
                Ok(Polynomial::monomial(
                    self.ring,
                    BigRational::from_integer(1.into()),
                    Monomial::var(&self.ring, v),
                ))
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
