//! Text grammar for multivectors.
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := coef ['*' factor ('*' factor)*] | factor ('*' factor)*
//! coef   := digits ['/' digits]
//! factor := 'e' digits | 'eps' digits
//! ```
//!
//! While a generator family has at most nine members, each digit names
//! one generator (`e134 = e1 e3 e4`). With ten or more, a factor names a
//! single generator and blades are written as products (`e2*e10`).

use super::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::Rational;

pub fn blade_name(sig: Signature, mask: u32) -> String {
    let mut parts = Vec::new();
    let e: Vec<u32> = (0..sig.p).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
    let eps: Vec<u32> = (sig.p..sig.n()).filter(|b| mask >> b & 1 == 1).map(|b| b - sig.p + 1).collect();
    push_family(&mut parts, "e", &e, sig.p <= 9);
    push_family(&mut parts, "eps", &eps, sig.q <= 9);
    if parts.is_empty() {
        return "1".to_string();
    }
    parts.join("*")
}

fn push_family(parts: &mut Vec<String>, stem: &str, idx: &[u32], compact: bool) {
    if idx.is_empty() {
        return;
    }
    if compact {
        let digits: String = idx.iter().map(|i| i.to_string()).collect();
        parts.push(format!("{stem}{digits}"));
    } else {
        parts.extend(idx.iter().map(|i| format!("{stem}{i}")));
    }
}

struct Parser<'a> {
    sig: Signature,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: at + 1, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> Result<Multivector> {
        let mut acc = Multivector::zero(self.sig);
        self.skip_ws();
        if self.peek().is_none() {
            return self.err(self.pos, "empty expression");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negate = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None => break,
                Some(_) if first => false,
                Some(c) => return self.err(self.pos, format!("expected `+` or `-`, found `{}`", c as char)),
            };
            self.skip_ws();
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Multivector> {
        let mut val = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coef()?;
                self.skip_ws();
                if self.peek() != Some(b'*') {
                    return Ok(Multivector::scalar(self.sig, c));
                }
                self.pos += 1;
                self.skip_ws();
                Multivector::scalar(self.sig, c)
            }
            Some(b'e') => Multivector::one(self.sig),
            Some(c) => return self.err(self.pos, format!("unexpected `{}`", c as char)),
            None => return self.err(self.pos, "expected a term"),
        };
        loop {
            let f = self.factor()?;
            val = &val * &f;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else {
                return Ok(val);
            }
        }
    }

    fn coef(&mut self) -> Result<Rational> {
        let start = self.pos;
        let n = self.digits().unwrap_or("0");
        let mut text = n.to_string();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            match self.digits() {
                Some(d) => {
                    if d.bytes().all(|c| c == b'0') {
                        return self.err(start, "zero denominator");
                    }
                    text = format!("{n}/{d}");
                }
                None => return self.err(self.pos, "expected denominator digits"),
            }
        }
        text.parse::<Rational>().or_else(|_| self.err(start, "bad coefficient"))
    }

    fn factor(&mut self) -> Result<Multivector> {
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let (neg_family, stem_len) = if rest.starts_with(b"eps") {
            (true, 3)
        } else if rest.starts_with(b"e") {
            (false, 1)
        } else {
            return self.err(start, "expected a generator `e..` or `eps..`");
        };
        self.pos += stem_len;
        let digits_at = self.pos;
        let Some(d) = self.digits() else {
            return self.err(digits_at, "expected generator digits");
        };
        let (count, offset) = if neg_family { (self.sig.q, self.sig.p) } else { (self.sig.p, 0) };
        let name = if neg_family { "eps" } else { "e" };
        let indices: Vec<u32> = if count <= 9 {
            d.bytes().map(|c| (c - b'0') as u32).collect()
        } else {
            match d.parse::<u32>() {
                Ok(i) => vec![i],
                Err(_) => return self.err(digits_at, "generator index too large"),
            }
        };
        let mut out = Multivector::one(self.sig);
        for i in indices {
            if i == 0 || i > count {
                return self.err(digits_at, format!("{name}{i} is not a generator of {}", self.sig));
            }
            out = &out * &Multivector::generator(self.sig, offset + i);
        }
        Ok(out)
    }
}

/// Parses `src` as an element of `R_{sig}`.
pub fn parse_multivector(sig: Signature, src: &str) -> Result<Multivector> {
    let mut p = Parser { sig, src: src.as_bytes(), pos: 0 };
    p.expr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_samples() {
        let s = Signature::of(4, 0);
        let a = parse_multivector(s, "3/2*e1 -1*e12 + e134 + 5").unwrap();
        assert_eq!(a.to_string(), "5 + 3/2*e1 - 1*e12 + 1*e134");
        let b = parse_multivector(s, "e2*e1").unwrap();
        assert_eq!(b.to_string(), "-1*e12");
    }

    #[test]
    fn negative_generators() {
        let s = Signature::of(1, 2);
        let a = parse_multivector(s, "1 + 2*eps1 - e1*eps12").unwrap();
        assert_eq!(a.to_string(), "1 + 2*eps1 - 1*e1*eps12");
        assert_eq!(parse_multivector(s, "eps1*eps1").unwrap().to_string(), "-1");
    }

    #[test]
    fn errors_carry_position() {
        let s = Signature::of(2, 0);
        assert_eq!(
            parse_multivector(s, "1 + e3"),
            Err(Error::Parse { pos: 6, msg: "e3 is not a generator of (2,0)".into() })
        );
        assert!(matches!(parse_multivector(s, "1 +"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_multivector(s, ""), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_multivector(s, "2 e1"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_multivector(s, "1/0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn wide_families() {
        let s = Signature::of(10, 0);
        let a = parse_multivector(s, "e2*e10").unwrap();
        assert_eq!(a.to_string(), "1*e2*e10");
        assert_eq!(parse_multivector(s, &a.to_string()).unwrap(), a);
    }
}
