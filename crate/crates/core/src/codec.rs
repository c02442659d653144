//! Text form of elements.
//!
//! ```text
//! element := "{" pairs? "|" INT "=>" sign INT "}"  |  "I"  |  "p"  |  "q"
//! pairs   := pair ("," pair)*
//! pair    := INT "->" INT
//! sign    := "+" | "-"
//! ```
//!
//! Whitespace between tokens is ignored. `{3->1|4=>+0}` sends 3 to 1 and
//! every `n ≥ 4` to itself.

use crate::element::PartialBijection;
use crate::error::{Error, Result};

pub fn encode(a: &PartialBijection) -> String {
    a.to_string()
}

/// Parses a complete element; trailing input is an error.
pub fn decode(text: &str) -> Result<PartialBijection> {
    let mut cur = Cursor::new(text);
    let a = cur.element()?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "unexpected trailing input"));
    }
    Ok(a)
}

/// Parses one element starting at byte `start`, returning it and the offset
/// just past it. Error offsets are absolute within `text`.
pub fn decode_prefix(text: &str, start: usize) -> Result<(PartialBijection, usize)> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: start,
    };
    let a = cur.element()?;
    Ok((a, cur.pos))
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{token}`")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn element(&mut self) -> Result<PartialBijection> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(b'I') => {
                self.pos += 1;
                return Ok(PartialBijection::identity());
            }
            Some(b'p') => {
                self.pos += 1;
                return Ok(PartialBijection::pi());
            }
            Some(b'q') => {
                self.pos += 1;
                return Ok(PartialBijection::sigma());
            }
            Some(b'{') => self.pos += 1,
            _ => return Err(Error::parse(start, "expected `{`, `I`, `p` or `q`")),
        }

        let mut pairs = Vec::new();
        if self.peek() != Some(b'|') {
            loop {
                let k = self.int()?;
                self.expect("->")?;
                let v = self.int()?;
                pairs.push((k, v));
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b'|') => break,
                    _ => return Err(Error::parse(self.pos, "expected `,` or `|`")),
                }
            }
        }
        self.expect("|")?;
        let tail = self.int()?;
        self.expect("=>")?;
        let negative = match self.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return Err(Error::parse(self.pos, "expected `+` or `-`")),
        };
        self.pos += 1;
        let sign_at = self.pos;
        let magnitude = self.int()?;
        let magnitude =
            i64::try_from(magnitude).map_err(|_| Error::parse(sign_at, "shift out of range"))?;
        let shift = if negative { -magnitude } else { magnitude };
        self.expect("}")?;
        PartialBijection::canonicalize(&pairs, tail, shift)
    }
}
