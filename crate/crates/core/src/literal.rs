//! Element literals: integers, `/`, the variable `t`, `+ - * ^`,
//! parentheses and implicit multiplication (`2t^2`, `3(t+1)`).
//!
//! Inputs are bounded in length, nesting depth, exponent size and the size
//! of intermediate values, so arbitrary input terminates quickly.

use num_bigint::BigInt;

use crate::arith::{Field, PrimeField, QuotientField, RationalFunctionField, Rationals};
use crate::error::{Error, Result};

/// Any value within [`MAX_WEIGHT`] prints to fewer bytes than this, so
/// printed values always parse back.
pub const MAX_LITERAL_LEN: usize = 1 << 16;
pub const MAX_DEPTH: usize = 64;
pub const MAX_EXPONENT: u64 = 4096;
/// Bound on [`crate::arith::Ring::weight`] of any intermediate value.
pub const MAX_WEIGHT: usize = 1 << 12;
/// Decimal digits of a `MAX_WEIGHT`-bit integer, rounded up.
const MAX_DIGITS: usize = 1234;

/// A field in which literals can be evaluated; `t` denotes [`variable`].
///
/// [`variable`]: LiteralField::variable
pub trait LiteralField: Field {
    fn variable(&self) -> Option<Self::Elem>;
}

impl LiteralField for Rationals {
    fn variable(&self) -> Option<Self::Elem> {
        None
    }
}

impl LiteralField for PrimeField {
    fn variable(&self) -> Option<Self::Elem> {
        None
    }
}

impl<F: Field> LiteralField for RationalFunctionField<F> {
    fn variable(&self) -> Option<Self::Elem> {
        Some(self.var())
    }
}

impl<F: Field> LiteralField for QuotientField<F> {
    fn variable(&self) -> Option<Self::Elem> {
        Some(self.generator())
    }
}

/// Evaluate a literal in `field`.
pub fn parse_element<F: LiteralField>(field: &F, text: &str) -> Result<F::Elem> {
    if text.len() > MAX_LITERAL_LEN {
        return Err(Error::Parse {
            pos: MAX_LITERAL_LEN,
            msg: "literal too long".into(),
        });
    }
    let mut parser = Parser {
        field,
        bytes: text.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a, F: LiteralField> {
    field: &'a F,
    bytes: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<F: LiteralField> Parser<'_, F> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bounded(&self, value: F::Elem) -> Result<F::Elem> {
        if self.field.weight(&value) > MAX_WEIGHT {
            return Err(self.error("value too large"));
        }
        Ok(value)
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error("nesting too deep"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<F::Elem> {
        self.enter()?;
        let k = self.field;
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.bounded(if op == b'+' {
                k.add(&acc, &rhs)
            } else {
                k.sub(&acc, &rhs)
            })?;
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<F::Elem> {
        let k = self.field;
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.bounded(k.mul(&acc, &rhs))?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.unary()?;
                    let q = k.div(&acc, &rhs).ok_or(Error::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                    acc = self.bounded(q)?;
                }
                Some(b't' | b'(') => {
                    let rhs = self.power()?;
                    acc = self.bounded(k.mul(&acc, &rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<F::Elem> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.enter()?;
                let v = self.unary()?;
                self.depth -= 1;
                Ok(self.field.neg(&v))
            }
            Some(b'+') => {
                self.pos += 1;
                self.enter()?;
                let v = self.unary()?;
                self.depth -= 1;
                Ok(v)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<F::Elem> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let e = self.exponent()?;
        let k = self.field;
        let base = if negative {
            k.inv(&base).ok_or(Error::Parse {
                pos: at,
                msg: "negative power of zero".into(),
            })?
        } else {
            base
        };
        let too_large = || Error::Parse {
            pos: at,
            msg: "power too large".into(),
        };
        // Square and multiply, giving up as soon as a partial power is too big.
        let (mut result, mut square, mut e) = (k.one(), base, e);
        while e > 0 {
            if e & 1 == 1 {
                result = k.mul(&result, &square);
                if k.weight(&result) > MAX_WEIGHT {
                    return Err(too_large());
                }
            }
            e >>= 1;
            if e > 0 {
                square = k.square(&square);
                if k.weight(&square) > MAX_WEIGHT {
                    return Err(too_large());
                }
            }
        }
        self.bounded(result)
    }

    fn exponent(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected exponent"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        match digits.parse::<u64>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(Error::Parse {
                pos: start,
                msg: format!("exponent exceeds {MAX_EXPONENT}"),
            }),
        }
    }

    fn atom(&mut self) -> Result<F::Elem> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b't') => {
                self.pos += 1;
                self.field.variable().ok_or_else(|| Error::Parse {
                    pos: self.pos - 1,
                    msg: "variable t is not available in this field".into(),
                })
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if self.pos - start > MAX_DIGITS {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "integer too long".into(),
                    });
                }
                let digits =
                    std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
                let n: BigInt = digits.parse().expect("nonempty digit string");
                Ok(self.field.from_bigint(&n))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
