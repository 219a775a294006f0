//! Series expressions.
//!
//! ```text
//! series   := ('+'|'-')? term (('+'|'-') term)*
//! term     := coeff? ('*'? monomial)*
//! monomial := var '^' '(' frac ')' | var '^' frac | var
//! frac     := int ('/' int)?
//! coeff    := frac
//! var      := 'T' | 'X' int
//! ```
//!
//! Exponent denominators are combined into their lcm without reducing the
//! individual fractions, so `T^(2/4)` is read over `m = 4`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use puiseux_core::{ExponentVector, QSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unsupported input at position {pos}: {msg}")]
    Unsupported { pos: usize, msg: String },
    #[error(transparent)]
    Series(#[from] puiseux_core::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum VarStyle {
    T,
    Indexed,
}

struct Factor {
    index: usize,
    num: BigUint,
    den: BigUint,
}

struct Term {
    coeff: BigRational,
    factors: Vec<Factor>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    style: Option<(VarStyle, usize)>,
}

impl<'a> Parser<'a> {
    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn frac(&mut self) -> Result<(BigUint, BigUint), ParseError> {
        let num = self.int()?;
        let den = if self.eat(b'/') {
            let at = self.pos;
            let d = self.int()?;
            if d.is_zero() {
                return Err(ParseError::Syntax {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            d
        } else {
            BigUint::one()
        };
        Ok((num, den))
    }

    fn reject_negative_exponent(&mut self) -> Result<(), ParseError> {
        if self.peek() == Some(b'-') {
            return Err(ParseError::Unsupported {
                pos: self.pos,
                msg: "negative exponents are not supported".into(),
            });
        }
        Ok(())
    }

    fn exponent(&mut self) -> Result<(BigUint, BigUint), ParseError> {
        if self.eat(b'(') {
            self.reject_negative_exponent()?;
            let f = self.frac()?;
            if !self.eat(b')') {
                return self.syntax("expected ')'");
            }
            Ok(f)
        } else {
            self.reject_negative_exponent()?;
            self.frac()
        }
    }

    fn variable(&mut self) -> Result<usize, ParseError> {
        let at = self.pos;
        let (style, index) = match self.src[self.pos] {
            b'T' => {
                self.pos += 1;
                (VarStyle::T, 1)
            }
            b'X' => {
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return self.syntax("expected a variable index after 'X'");
                }
                let idx = self.int()?;
                let idx: usize = idx
                    .try_into()
                    .ok()
                    .filter(|i| (1..=64).contains(i))
                    .ok_or_else(|| ParseError::Syntax {
                        pos: at,
                        msg: "variable index must be between 1 and 64".into(),
                    })?;
                (VarStyle::Indexed, idx)
            }
            _ => return self.syntax("expected a variable"),
        };
        match &mut self.style {
            None => self.style = Some((style, index)),
            Some((s, _)) if *s != style => {
                return Err(ParseError::Syntax {
                    pos: at,
                    msg: "cannot mix T with X1, X2, ...".into(),
                })
            }
            Some((_, max)) => *max = (*max).max(index),
        }
        Ok(index)
    }

    fn at_variable(&mut self) -> bool {
        matches!(self.peek(), Some(b'T' | b'X'))
    }

    fn monomial(&mut self) -> Result<Factor, ParseError> {
        let index = self.variable()?;
        let (num, den) = if self.eat(b'^') {
            self.exponent()?
        } else {
            (BigUint::one(), BigUint::one())
        };
        Ok(Factor { index, num, den })
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let mut coeff = BigRational::one();
        let mut any = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let (n, d) = self.frac()?;
            coeff = BigRational::new(BigInt::from(n), BigInt::from(d));
            any = true;
        }
        let mut factors = Vec::new();
        loop {
            if self.eat(b'*') {
                if !self.at_variable() {
                    return self.syntax("expected a variable after '*'");
                }
                factors.push(self.monomial()?);
            } else if self.at_variable() {
                factors.push(self.monomial()?);
            } else {
                break;
            }
            any = true;
        }
        if !any {
            return self.syntax("expected a term");
        }
        if negative {
            coeff = -coeff;
        }
        Ok(Term { coeff, factors })
    }

    fn series(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut negative = false;
        if self.eat(b'-') {
            negative = true;
        } else {
            self.eat(b'+');
        }
        let mut terms = vec![self.term(negative)?];
        loop {
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term(false)?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(self.term(true)?);
                }
                Some(_) => return self.syntax("expected '+' or '-'"),
            }
        }
    }
}

/// Parses a series expression into a rational Puiseux series over the lcm of
/// its exponent denominators.
pub fn parse_series(text: &str) -> Result<QSeries, ParseError> {
    if !text.is_ascii() {
        let pos = text.char_indices().find(|(_, c)| !c.is_ascii()).map_or(0, |(i, _)| i);
        return Err(ParseError::Syntax {
            pos,
            msg: "unexpected non-ASCII character".into(),
        });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        style: None,
    };
    let terms = p.series()?;
    let nvars = p.style.map_or(1, |(_, r)| r);
    let m = terms
        .iter()
        .flat_map(|t| t.factors.iter())
        .fold(BigUint::one(), |acc, f| acc.lcm(&f.den));

    let mut out = QSeries::zero(nvars, m.clone())?;
    for t in terms {
        let mut e = vec![BigUint::zero(); nvars];
        for f in &t.factors {
            e[f.index - 1] += &f.num * (&m / &f.den);
        }
        out.add_term(ExponentVector::new(e)?, t.coeff)?;
    }
    Ok(out)
}
