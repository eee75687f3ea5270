//! Text parser for elements of `Q(q)`.

use super::int::Int;
use super::qrat::QRat;
use super::FieldError;

pub(crate) struct Parser<'a> {
    s: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(s: &'a str) -> Self {
        Parser {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, FieldError> {
        Err(FieldError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn int(&mut self) -> Result<Int, FieldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<Int>().or_else(|_| {
            self.pos = start;
            self.err("bad integer")
        })
    }

    fn signed_exp(&mut self) -> Result<i32, FieldError> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let start = self.pos;
        let v = self.int()?;
        match v.to_i64().and_then(|x| i32::try_from(x).ok()) {
            Some(x) => Ok(if neg { -x } else { x }),
            None => {
                self.pos = start;
                self.err("exponent out of range")
            }
        }
    }

    pub(crate) fn expr(&mut self) -> Result<QRat, FieldError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QRat, FieldError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = match acc.checked_div(&d) {
                        Ok(v) => v,
                        Err(_) => {
                            self.pos = at;
                            return self.err("division by zero");
                        }
                    };
                }
                Some(b'q') | Some(b'(') => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QRat, FieldError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QRat, FieldError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.signed_exp()?;
            return base.pow(e).or_else(|_| {
                self.pos = at;
                self.err("negative power of zero")
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QRat, FieldError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(QRat::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(QRat::from_big_int(self.int()?)),
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_qrat(s: &str) -> Result<QRat, FieldError> {
    let mut p = Parser::new(s);
    let v = p.expr()?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_have_positions() {
        match parse_qrat("q+*2") {
            Err(FieldError::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_qrat("1/(q-q)").is_err());
        assert!(parse_qrat("(q").is_err());
    }

    #[test]
    fn implicit_products() {
        assert_eq!(parse_qrat("2q^2").unwrap(), parse_qrat("2*q^2").unwrap());
        assert_eq!(parse_qrat("-q^2").unwrap().to_string(), "-q^2");
        assert_eq!(parse_qrat("(q+1)^-1").unwrap().to_string(), "(1)/(q+1)");
    }
}
