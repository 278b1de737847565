//! Readers for the text formats: cyclotomic literals, polynomials, 1-forms
//! and vector fields.
//!
//! ```text
//! rational := ['-'] digits ['/' digits]
//! cyclo    := term (('+' | '-') term)*    term := rational ['*' 'zeta(' n ')' ['^' k]]
//! poly     := term (('+' | '-') term)*    term := factor ('*' factor)*
//! form     := '(' poly ')dx + (' poly ')dy'          affine
//!           | '(' poly ')dX + (' poly ')dY + (' poly ')dZ'
//! field    := '(' poly ')∂X + (' poly ')∂Y + (' poly ')∂Z'   (dX accepted for ∂X)
//! ```

use folsym_core::geom::{AffineOneForm, HomogeneousOneForm, HomogeneousVectorField};
use folsym_core::group::ProjectivePoint;
use folsym_core::{Cyclo, Monomial, Polynomial};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

type Result<T> = std::result::Result<T, ParseError>;

struct Cursor<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, chars: src.char_indices().collect(), pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let offset = self.chars.get(self.pos).map_or(self.src.len(), |c| c.0);
        let before = &self.src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Err(ParseError { line, column, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        let n = w.chars().count();
        let matches = self.chars.len() >= self.pos + n
            && self.chars[self.pos..self.pos + n].iter().map(|c| c.1).eq(w.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{}'", c))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u32> {
        let n = self.digits()?;
        u32::try_from(&n).or_else(|_| self.error("number too large"))
    }

    fn done(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{}'", c)),
        }
    }
}

/// Variables a polynomial may mention, in coordinate order.
#[derive(Clone, Copy)]
enum Vars {
    None,
    Affine,
    Projective,
}

impl Vars {
    fn nvars(self) -> usize {
        match self {
            Vars::None | Vars::Affine => 2,
            Vars::Projective => 3,
        }
    }

    fn index(self, c: char) -> Option<usize> {
        match (self, c) {
            (Vars::Affine, 'x') => Some(0),
            (Vars::Affine, 'y') => Some(1),
            (Vars::Projective, 'X') => Some(0),
            (Vars::Projective, 'Y') => Some(1),
            (Vars::Projective, 'Z') => Some(2),
            _ => None,
        }
    }
}

fn factor(cur: &mut Cursor, vars: Vars, coeff: &mut Cyclo, exps: &mut [u32; 3]) -> Result<()> {
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num = cur.digits()?;
            let den = if cur.eat('/') { cur.digits()? } else { BigInt::from(1) };
            if den == BigInt::from(0) {
                return cur.error("zero denominator");
            }
            *coeff = &*coeff * &Cyclo::from_bigint(num).checked_div(&Cyclo::from_bigint(den)).expect("nonzero");
        }
        Some('z') if cur.eat_word("zeta") => {
            cur.expect('(')?;
            let n = cur.small()?;
            if n == 0 {
                return cur.error("zeta(0) is undefined");
            }
            cur.expect(')')?;
            let k = if cur.eat('^') { cur.small()? } else { 1 };
            *coeff = &*coeff * &Cyclo::root_of_unity(n, k as i64);
        }
        Some(c) => match vars.index(c) {
            Some(v) => {
                cur.pos += 1;
                exps[v] += if cur.eat('^') { cur.small()? } else { 1 };
            }
            None => return cur.error(format!("unexpected '{}'", c)),
        },
        None => return cur.error("unexpected end of input"),
    }
    Ok(())
}

fn term(cur: &mut Cursor, vars: Vars) -> Result<(Monomial, Cyclo)> {
    let mut coeff = Cyclo::one();
    while cur.eat('-') {
        coeff = -&coeff;
    }
    let mut exps = [0u32; 3];
    factor(cur, vars, &mut coeff, &mut exps)?;
    while cur.eat('*') {
        factor(cur, vars, &mut coeff, &mut exps)?;
    }
    Ok((Monomial::xyz(exps[0], exps[1], exps[2]), coeff))
}

fn sum(cur: &mut Cursor, vars: Vars) -> Result<Polynomial> {
    let mut terms = vec![term(cur, vars)?];
    loop {
        if cur.eat('+') {
            terms.push(term(cur, vars)?);
        } else if cur.eat('-') {
            let (m, c) = term(cur, vars)?;
            terms.push((m, -&c));
        } else {
            break;
        }
    }
    Ok(Polynomial::from_terms(vars.nvars(), terms))
}

pub fn parse_cyclo(s: &str) -> Result<Cyclo> {
    let mut cur = Cursor::new(s);
    let p = sum(&mut cur, Vars::None)?;
    cur.done()?;
    Ok(p.coeff(&Monomial::xyz(0, 0, 0)))
}

pub fn parse_affine_polynomial(s: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(s);
    let p = sum(&mut cur, Vars::Affine)?;
    cur.done()?;
    Ok(p)
}

pub fn parse_projective_polynomial(s: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(s);
    let p = sum(&mut cur, Vars::Projective)?;
    cur.done()?;
    Ok(p)
}

/// `(±(poly) marker)+`, each marker naming one coordinate slot.
fn components<const N: usize>(s: &str, vars: Vars, markers: &[(&str, usize)]) -> Result<[Polynomial; N]> {
    let mut cur = Cursor::new(s);
    let mut out: [Polynomial; N] = std::array::from_fn(|_| Polynomial::zero(vars.nvars()));
    let mut first = true;
    while cur.peek().is_some() {
        let mut negate = false;
        if !first {
            if cur.eat('-') {
                negate = true;
            } else {
                cur.expect('+')?;
            }
        }
        while cur.eat('-') {
            negate = !negate;
        }
        first = false;
        cur.expect('(')?;
        let p = sum(&mut cur, vars)?;
        cur.expect(')')?;
        let Some(&(_, slot)) = markers.iter().find(|(m, _)| cur.eat_word(m)) else {
            let names: Vec<&str> = markers.iter().map(|m| m.0).collect();
            return cur.error(format!("expected one of {}", names.join(", ")));
        };
        out[slot] = if negate { &out[slot] - &p } else { &out[slot] + &p };
    }
    if first {
        return cur.error("empty input");
    }
    Ok(out)
}

fn invalid(e: folsym_core::Error) -> ParseError {
    ParseError { line: 1, column: 1, message: e.to_string() }
}

pub fn parse_affine_form(s: &str) -> Result<AffineOneForm> {
    let [a, b] = components::<2>(s, Vars::Affine, &[("dx", 0), ("dy", 1)])?;
    AffineOneForm::new(a, b).map_err(invalid)
}

pub fn parse_projective_form(s: &str) -> Result<HomogeneousOneForm> {
    let c = components::<3>(s, Vars::Projective, &[("dX", 0), ("dY", 1), ("dZ", 2)])?;
    HomogeneousOneForm::new(c).map_err(invalid)
}

pub fn parse_vector_field(s: &str) -> Result<HomogeneousVectorField> {
    let markers = [("∂X", 0), ("∂Y", 1), ("∂Z", 2), ("dX", 0), ("dY", 1), ("dZ", 2)];
    let c = components::<3>(s, Vars::Projective, &markers)?;
    HomogeneousVectorField::from_components(c).map_err(invalid)
}

/// Comma-separated cyclotomic coordinates.
pub fn parse_point(s: &str) -> Result<ProjectivePoint> {
    let mut coords = Vec::new();
    let mut offset = 0;
    for piece in s.split(',') {
        coords.push(parse_cyclo(piece).map_err(|mut e| {
            if e.line == 1 {
                e.column += offset;
            }
            e
        })?);
        offset += piece.chars().count() + 1;
    }
    ProjectivePoint::new(coords).map_err(invalid)
}

pub fn format_vector_field(v: &HomogeneousVectorField) -> String {
    let [p, q, r] = v.components();
    format!("({})∂X + ({})∂Y + ({})∂Z", p, q, r)
}

pub fn format_affine_form(w: &AffineOneForm) -> String {
    format!("({})dx + ({})dy", w.a(), w.b())
}

pub fn format_projective_form(w: &HomogeneousOneForm) -> String {
    let [a, b, c] = w.components();
    format!("({})dX + ({})dY + ({})dZ", a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        let l = Cyclo::root_of_unity(3, 1);
        assert_eq!(parse_cyclo("1/2 + -1/2*zeta(3)^1").unwrap(), &Cyclo::from_ratio(1, 2) - &(&Cyclo::from_ratio(1, 2) * &l));
        assert_eq!(parse_cyclo(" zeta(4) ").unwrap(), Cyclo::root_of_unity(4, 1));
        assert_eq!(parse_cyclo("3 - 1").unwrap(), Cyclo::from_int(2));
        let err = parse_cyclo("1 +\n 2*w").unwrap_err();
        assert_eq!((err.line, err.column), (2, 4));
        assert!(parse_cyclo("1/0").is_err());
    }

    #[test]
    fn forms_and_fields() {
        let w = parse_affine_form("(x^2*y - 1)dx + (y^2 - x^3)dy").unwrap();
        assert_eq!(w.foliation_degree().0, 2);
        let again = parse_affine_form(&format_affine_form(&w)).unwrap();
        assert_eq!(again, w);
        let w = parse_affine_form("(x)dy - (y)dx").unwrap();
        assert_eq!(w.a(), &-&parse_affine_polynomial("y").unwrap());
        let v = parse_vector_field("(Y^2)dX + (Z^2)∂Y + (X^2)∂Z").unwrap();
        assert_eq!(parse_vector_field(&format_vector_field(&v)).unwrap(), v);
        assert!(parse_vector_field("(Y^2)dQ").is_err());
        assert!(parse_affine_form("(0)dx").is_err());
    }
}
