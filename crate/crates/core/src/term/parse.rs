//! Recursive-descent parser for the term grammar
//!
//! ```text
//! term := primary ('o' term)?
//! primary := atom | 'F' '(' term ')' | '(' term ')'
//! atom := ('id' | 'phi' | 'gamma' | 'chi') '_' nat
//! ```
//!
//! `o` is right-associative. No typechecking happens here.

use thiserror::Error;

use super::{Obj, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("term syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'a> {
    LParen,
    RParen,
    Word(&'a str),
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b'(' {
            out.push((i, Tok::LParen));
            i += 1;
        } else if c == b')' {
            out.push((i, Tok::RParen));
            i += 1;
        } else if c.is_ascii_alphanumeric() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Word(&src[start..i])));
        } else {
            let ch = src[i..].chars().next().unwrap_or('?');
            return Err(ParseError {
                offset: i,
                message: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok<'a>)> {
        self.toks.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok<'static>, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some((_, t)) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            Some((_, t)) => self.error(format!("expected {what}, found {}", describe(t))),
            None => self.error(format!("expected {what}, found end of input")),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let first = self.primary()?;
        if let Some((_, Tok::Word("o"))) = self.peek() {
            self.pos += 1;
            let rest = self.term()?;
            return Ok(Term::comp(first, rest));
        }
        Ok(first)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        let Some((offset, tok)) = self.peek().cloned() else {
            return self.error("expected a term, found end of input");
        };
        match tok {
            Tok::LParen => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Word("F") => {
                self.pos += 1;
                self.expect(Tok::LParen, "`(` after `F`")?;
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::f(t))
            }
            Tok::Word(w) => {
                let t = atom(w).ok_or_else(|| ParseError {
                    offset,
                    message: format!("unknown atom `{w}` (expected id_n, phi_n, gamma_n or chi_n)"),
                })?;
                self.pos += 1;
                Ok(t)
            }
            Tok::RParen => self.error("expected a term, found `)`"),
        }
    }
}

fn describe(t: &Tok<'_>) -> String {
    match t {
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Word(w) => format!("`{w}`"),
    }
}

fn atom(word: &str) -> Option<Term> {
    let (name, nat) = word.split_once('_')?;
    if nat.is_empty() || !nat.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n = Obj(nat.parse().ok()?);
    match name {
        "id" => Some(Term::Id(n)),
        "phi" => Some(Term::Phi(n)),
        "gamma" => Some(Term::Gamma(n)),
        "chi" => Some(Term::Chi(n)),
        _ => None,
    }
}

pub fn parse(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
    };
    let t = p.term()?;
    if let Some((_, tok)) = p.peek() {
        return p.error(format!("unexpected {} after complete term", describe(tok)));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(parse("phi_0").unwrap(), Term::phi(0));
        assert_eq!(parse("gamma_12").unwrap(), Term::gamma(12));
        assert_eq!(parse("id_0").unwrap(), Term::id(0));
    }

    #[test]
    fn composition_is_right_associative() {
        assert_eq!(
            parse("phi_1 o F(gamma_0)").unwrap(),
            Term::comp(Term::phi(1), Term::f(Term::gamma(0)))
        );
        assert_eq!(
            parse("chi_0 o chi_0").unwrap(),
            Term::comp(Term::chi(0), Term::chi(0))
        );
        assert_eq!(
            parse("chi_1 o F(chi_0) o chi_1").unwrap(),
            Term::comp(
                Term::chi(1),
                Term::comp(Term::f(Term::chi(0)), Term::chi(1))
            )
        );
    }

    #[test]
    fn errors_point_at_offending_byte() {
        let e = parse("phi_0 o").unwrap_err();
        assert_eq!(e.offset, 7);
        let e = parse("phi_0 o psi_1").unwrap_err();
        assert_eq!(e.offset, 8);
        let e = parse("F chi_0").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse("(phi_0").unwrap_err();
        assert_eq!(e.offset, 6);
        let e = parse("phi_0 phi_0").unwrap_err();
        assert_eq!(e.offset, 6);
        let e = parse("phi_0 + chi_1").unwrap_err();
        assert_eq!(e.offset, 6);
        assert!(parse("").is_err());
        assert!(parse("phi_").is_err());
        assert!(parse("phi_x").is_err());
        assert!(parse("F()").is_err());
    }
}
