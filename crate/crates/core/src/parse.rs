//! Text syntax for ring elements and gradings.
//!
//! Expressions use `+`, `-`, `*`, `^` and parentheses. Generators are named
//! by their signature (`z0`, `cl`, `cxw`, ...). Scalar atoms depend on the
//! coefficient ring: `g`, `k`, `e`, `xi` (or `x`), `einv^m*k` and
//! `tau(-n)` for the equivariant coefficients, `iota` for the nonequivariant
//! ones and `e` for fixed-point scalars. Negative exponents are accepted on
//! invertible generators and on `e`/`iota` where the ring allows it.
//!
//! Gradings are linear combinations of `1`, `s` (sigma) and `O0`, `O1`, ...,
//! e.g. `2 + 2s + O1` or `4 + O1 + 2*O2`.

use std::sync::Arc;

use crate::coeff::Scalar;
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::ring::{Poly, Signature, Triple};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Caret,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_byte(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn read_digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek_byte().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn expect_byte(&mut self, b: u8, what: &str) -> Result<()> {
        self.skip_ws();
        if self.peek_byte() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {what}")))
        }
    }

    /// `tau(-n)`, after the identifier `tau` has been consumed.
    fn finish_tau(&mut self) -> Result<String> {
        self.expect_byte(b'(', "`(` after tau")?;
        self.expect_byte(b'-', "`-n` inside tau(...)")?;
        self.skip_ws();
        let at = self.pos;
        let n = self.read_digits().ok_or_else(|| Error::parse(at, "expected exponent in tau(-n)"))?;
        let n = n.to_string();
        self.expect_byte(b')', "`)` closing tau")?;
        Ok(format!("tau(-{n})"))
    }

    /// `einv^m*k` or `einv*k`, after `einv` has been consumed.
    fn finish_einv(&mut self) -> Result<String> {
        self.skip_ws();
        let mut m = "1".to_string();
        if self.peek_byte() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            m = self
                .read_digits()
                .ok_or_else(|| Error::parse(at, "expected exponent after einv^"))?
                .to_string();
        }
        self.expect_byte(b'*', "`*k` after einv")?;
        self.expect_byte(b'k', "`k` after einv")?;
        if self.peek_byte().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            return Err(Error::parse(self.pos, "einv must be followed by exactly `*k`"));
        }
        Ok(format!("einv^{m}*k"))
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok)>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            let Some(b) = self.peek_byte() else { break };
            let tok = match b {
                b'0'..=b'9' => {
                    let d = self.read_digits().expect("digit present");
                    let n = d.parse::<i64>().map_err(|_| Error::parse(start, "integer overflow"))?;
                    Tok::Int(n)
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    while self
                        .peek_byte()
                        .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_' || c == b'\'')
                    {
                        self.pos += 1;
                    }
                    let word = &self.src[start..self.pos];
                    match word {
                        "tau" => Tok::Ident(self.finish_tau()?),
                        "einv" => Tok::Ident(self.finish_einv()?),
                        w => Tok::Ident(w.to_string()),
                    }
                }
                _ => {
                    self.pos += 1;
                    match b {
                        b'^' => Tok::Caret,
                        b'*' => Tok::Star,
                        b'+' => Tok::Plus,
                        b'-' => Tok::Minus,
                        b'(' => Tok::LParen,
                        b')' => Tok::RParen,
                        b',' => Tok::Comma,
                        _ => {
                            let ch = self.src[start..].chars().next().unwrap_or('?');
                            return Err(Error::parse(start, format!("unexpected character `{ch}`")));
                        }
                    }
                }
            };
            out.push((start, tok));
        }
        Ok(out)
    }
}

/// Operations needed to evaluate an expression.
pub trait ExprContext {
    type Elem: Clone;

    fn int(&self, n: i64) -> Self::Elem;
    /// Identifier raised to an integer power.
    fn atom(&self, name: &str, power: i64) -> std::result::Result<Self::Elem, String>;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

struct Parser<'c, C: ExprContext> {
    ctx: &'c C,
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl<'c, C: ExprContext> Parser<'c, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<C::Elem> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                let t = self.term()?;
                self.ctx.neg(&t)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ctx.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.ctx.add(&acc, &self.ctx.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<C::Elem> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = self.ctx.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<i64>> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(None);
        }
        self.bump();
        let at = self.pos();
        let (neg, paren) = match self.peek() {
            Some(Tok::LParen) => {
                self.bump();
                let neg = self.peek() == Some(&Tok::Minus);
                if neg {
                    self.bump();
                }
                (neg, true)
            }
            Some(Tok::Minus) => {
                self.bump();
                (true, false)
            }
            _ => (false, false),
        };
        let n = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => return Err(Error::parse(at, "expected integer exponent")),
        };
        if paren && self.bump() != Some(Tok::RParen) {
            return Err(Error::parse(at, "expected `)` after exponent"));
        }
        Ok(Some(if neg { -n } else { n }))
    }

    fn factor(&mut self) -> Result<C::Elem> {
        let at = self.pos();
        match self.bump() {
            Some(Tok::Minus) => {
                let f = self.factor()?;
                Ok(self.ctx.neg(&f))
            }
            Some(Tok::Int(n)) => {
                let p = self.exponent()?.unwrap_or(1);
                if p < 0 {
                    return Err(Error::parse(at, "negative power of an integer"));
                }
                let v = n.checked_pow(p as u32).ok_or_else(|| Error::parse(at, "integer overflow"))?;
                Ok(self.ctx.int(v))
            }
            Some(Tok::Ident(name)) => {
                let p = self.exponent()?.unwrap_or(1);
                self.ctx.atom(&name, p).map_err(|msg| Error::parse(at, msg))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(Error::parse(at, "unbalanced parenthesis"));
                }
                let p = self.exponent()?.unwrap_or(1);
                if p < 0 {
                    return Err(Error::parse(at, "negative power of a parenthesised expression"));
                }
                let mut acc = self.ctx.int(1);
                for _ in 0..p {
                    acc = self.ctx.mul(&acc, &inner);
                }
                Ok(acc)
            }
            Some(t) => Err(Error::parse(at, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

/// Evaluate `text` in the context `ctx`.
pub fn parse_with<C: ExprContext>(ctx: &C, text: &str) -> Result<C::Elem> {
    let toks = Lexer::new(text).tokens()?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser { ctx, toks, idx: 0, end: text.len() };
    let v = p.expr()?;
    if p.idx < p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    Ok(v)
}

/// Context evaluating into a free polynomial ring over `S`.
pub struct PolyContext<'a, S: Scalar> {
    pub sig: &'a Arc<Signature>,
    _s: std::marker::PhantomData<S>,
}

impl<'a, S: Scalar> PolyContext<'a, S> {
    pub fn new(sig: &'a Arc<Signature>) -> Self {
        PolyContext { sig, _s: std::marker::PhantomData }
    }
}

impl<S: Scalar> ExprContext for PolyContext<'_, S> {
    type Elem = Poly<S>;

    fn int(&self, n: i64) -> Poly<S> {
        Poly::int(self.sig, n)
    }

    fn atom(&self, name: &str, power: i64) -> std::result::Result<Poly<S>, String> {
        if let Some(i) = self.sig.index_of(name) {
            let gen = &self.sig.generators()[i];
            if power < 0 && !gen.invertible {
                return Err(format!("generator `{name}` is not invertible"));
            }
            let e = i32::try_from(power).map_err(|_| "exponent out of range".to_string())?;
            let m = self.sig.monomial(&[(name, e)]).map_err(|e| e.to_string())?;
            return Ok(Poly::monomial(self.sig, m, S::one()));
        }
        match S::atom(name, power) {
            Some(r) => r.map(|c| Poly::constant(self.sig, c)),
            None => Err(format!("unknown identifier `{name}` in {}", self.sig.name())),
        }
    }

    fn add(&self, x: &Poly<S>, y: &Poly<S>) -> Poly<S> {
        x + y
    }

    fn neg(&self, x: &Poly<S>) -> Poly<S> {
        -x
    }

    fn mul(&self, x: &Poly<S>, y: &Poly<S>) -> Poly<S> {
        x * y
    }
}

/// Parse a polynomial over `sig`. No relations are applied.
pub fn parse_poly<S: Scalar>(sig: &Arc<Signature>, text: &str) -> Result<Poly<S>> {
    parse_with(&PolyContext::<S>::new(sig), text)
}

/// Parse `(p0, p1, p2)` with each entry over its own component signature.
pub fn parse_triple<S: Scalar>(comps: &[Arc<Signature>; 3], text: &str) -> Result<Triple<S>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(0, "a triple is written `(p0, p1, p2)`"))?;
    let offset = text.len() - text.trim_start().len() + 1;
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((start, &inner[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &inner[start..]));
    if parts.len() != 3 {
        return Err(Error::parse(0, format!("expected 3 components, found {}", parts.len())));
    }
    let mut out = Vec::new();
    for (k, (at, s)) in parts.into_iter().enumerate() {
        let p = parse_poly(&comps[k], s).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + at + offset, msg },
            e => e,
        })?;
        out.push(p);
    }
    let [a, b, c]: [Poly<S>; 3] = out.try_into().expect("three parts");
    Ok(Triple([a, b, c]))
}

/// Parse a grading with `rank` omega classes.
pub fn parse_grading(rank: usize, text: &str) -> Result<Grading> {
    let toks = Lexer::new(text).tokens()?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty grading"));
    }
    let (mut a, mut b) = (0i64, 0i64);
    let mut om = vec![0i64; rank];
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = 1;
        match &toks[i].1 {
            Tok::Plus if !first => i += 1,
            Tok::Minus => {
                sign = -1;
                i += 1;
            }
            _ if first => {}
            t => return Err(Error::parse(toks[i].0, format!("expected `+` or `-`, found {t:?}"))),
        }
        first = false;
        let at = toks.get(i).map(|t| t.0).unwrap_or(text.len());
        let mut coeff = None;
        if let Some((_, Tok::Int(n))) = toks.get(i) {
            coeff = Some(*n);
            i += 1;
            if let Some((_, Tok::Star)) = toks.get(i) {
                i += 1;
            }
        }
        let c = sign * coeff.unwrap_or(1);
        match toks.get(i) {
            Some((_, Tok::Ident(name))) => {
                i += 1;
                if name == "s" || name == "sigma" {
                    b += c;
                } else if let Some(k) = name
                    .strip_prefix('O')
                    .map(|r| r.trim_end_matches('\''))
                    .and_then(|r| r.parse::<usize>().ok())
                {
                    if k >= rank {
                        return Err(Error::parse(at, format!("O{k} out of range for {rank} components")));
                    }
                    om[k] += c;
                } else {
                    return Err(Error::parse(at, format!("unknown grading symbol `{name}`")));
                }
            }
            _ if coeff.is_some() => a += c,
            _ => return Err(Error::parse(at, "expected a grading term")),
        }
    }
    Ok(Grading::new(a, b, &om))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CoeffElt, FixedScalar};
    use crate::ring::Generator;

    fn sig() -> Arc<Signature> {
        Signature::unweighted(
            "t",
            vec![
                Generator::new("z0", Grading::bu1(0, 0, 1, 0)),
                Generator::invertible("z1", Grading::bu1(0, 0, 0, 1)),
            ],
        )
    }

    #[test]
    fn parses_scalar_atoms() {
        let s = sig();
        let p: Poly<CoeffElt> = parse_poly(&s, "einv^2*k*z0 + tau(-4)*z1^-1 + (1 - k)*z0^2").unwrap();
        assert_eq!(p.to_string(), "(-1 + g)*z0^2 + einv^2*k*z0 + tau(-4)*z1^-1");
        let q: Poly<CoeffElt> = parse_poly(&s, "einv*k").unwrap();
        assert_eq!(q.to_string(), "einv*k");
    }

    #[test]
    fn negative_exponents() {
        let s = sig();
        let p: Poly<FixedScalar> = parse_poly(&s, "e^-2*z1^(-1)").unwrap();
        assert_eq!(p.to_string(), "e^-2*z1^-1");
        let err = parse_poly::<CoeffElt>(&s, "z0^-1").unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 0, .. }), "{err}");
    }

    #[test]
    fn error_positions() {
        let s = sig();
        match parse_poly::<CoeffElt>(&s, "z0 + foo") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            r => panic!("{r:?}"),
        }
        match parse_poly::<CoeffElt>(&s, "z0 + (z1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            r => panic!("{r:?}"),
        }
        assert!(parse_poly::<CoeffElt>(&s, "z0 $").is_err());
        assert!(parse_poly::<CoeffElt>(&s, "").is_err());
        assert!(parse_poly::<CoeffElt>(&s, "einv^2").is_err());
    }

    #[test]
    fn powers_of_groups() {
        let s = sig();
        let p: Poly<i64> = parse_poly(&s, "(z0 + 1)^2").unwrap();
        assert_eq!(p, parse_poly(&s, "z0^2 + 2*z0 + 1").unwrap());
    }

    #[test]
    fn gradings() {
        assert_eq!(parse_grading(3, "4 + O1 + 2O2").unwrap(), Grading::bu2(4, 0, 0, 1, 2));
        assert_eq!(parse_grading(3, "2 + 2*s + O1").unwrap(), Grading::bu2(2, 2, 0, 1, 0));
        assert_eq!(parse_grading(2, "-2 + 2s").unwrap(), Grading::bu1(0, 0, 1, 1));
        assert_eq!(parse_grading(3, "0").unwrap(), Grading::zero(3));
        assert!(parse_grading(2, "O2").is_err());
        assert!(parse_grading(3, "2 + q").is_err());
    }

    #[test]
    fn grading_display_round_trip() {
        for g in [Grading::bu2(4, 0, 0, 1, 2), Grading::bu2(-3, 5, 2, 0, 1), Grading::bu2(0, -1, 0, 0, 0)] {
            assert_eq!(parse_grading(3, &g.to_string()).unwrap(), g);
        }
    }
}
