//! Braid-word grammar:
//!
//! ```text
//! word   := term*
//! term   := factor ('^' int)?
//! factor := gen | '(' word ')'
//! gen    := 's' uint | 'S' uint
//! int    := '-'? uint
//! ```
//!
//! Capital `S` is the inverse generator. Whitespace separates terms.

use braidwrench_core::braid::BraidWord;
use braidwrench_core::error::BraidError;
use thiserror::Error;

/// Expanded words longer than this are rejected before allocation.
pub const MAX_EXPANDED_LEN: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedInput {
    pub strands: usize,
    pub word: BraidWord,
}

/// Parses `text`; `strands` wins when given, otherwise the smallest group
/// containing every generator (at least `B_2`).
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<ParsedInput, InputError> {
    let letters = parse_letters(text)?;
    let needed = letters
        .iter()
        .map(|l| l.unsigned_abs() as usize + 1)
        .max()
        .unwrap_or(1);
    let n = match strands {
        Some(n) if n < needed => {
            return Err(BraidError::BadParams(format!(
                "word uses s{} but only {n} strands were given",
                needed - 1
            ))
            .into())
        }
        Some(n) => n,
        None => needed.max(2),
    };
    let word = BraidWord::new(n, letters)?;
    Ok(ParsedInput { strands: n, word })
}

/// Canonical text of a word; `parse_braid(&print_braid(w), Some(n))` returns `w`.
pub fn print_braid(w: &BraidWord) -> String {
    w.to_string()
}

pub fn parse_letters(text: &str) -> Result<Vec<i32>, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let word = p.word(0)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(match p.src[p.pos] {
            b')' => "unmatched ')'".to_string(),
            c => format!("unexpected {:?}", c as char),
        }));
    }
    Ok(word)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn word(&mut self, depth: usize) -> Result<Vec<i32>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b's' | b'S' | b'(') => {
                    let term = self.term(depth)?;
                    if (out.len() + term.len()) as u64 > MAX_EXPANDED_LEN {
                        return Err(
                            self.error(format!("word expands past {MAX_EXPANDED_LEN} letters"))
                        );
                    }
                    out.extend(term);
                }
                _ => return Ok(out),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Vec<i32>, ParseError> {
        let factor = self.factor(depth)?;
        if self.peek() != Some(b'^') {
            return Ok(factor);
        }
        self.pos += 1;
        let start = self.pos;
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let k = self.uint("exponent")?;
        if factor.len() as u64 * k > MAX_EXPANDED_LEN {
            self.pos = start;
            return Err(self.error(format!("word expands past {MAX_EXPANDED_LEN} letters")));
        }
        let base: Vec<i32> = if negative {
            factor.iter().rev().map(|l| -l).collect()
        } else {
            factor
        };
        let mut out = Vec::with_capacity(base.len() * k as usize);
        for _ in 0..k {
            out.extend_from_slice(&base);
        }
        Ok(out)
    }

    fn factor(&mut self, depth: usize) -> Result<Vec<i32>, ParseError> {
        match self.peek() {
            Some(c @ (b's' | b'S')) => {
                let start = self.pos;
                self.pos += 1;
                let i = self.uint("generator index")?;
                if i == 0 || i >= i32::MAX as u64 {
                    self.pos = start;
                    return Err(self.error(format!("generator index {i} out of range")));
                }
                let i = i as i32;
                Ok(vec![if c == b's' { i } else { -i }])
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.word(depth + 1)?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    let mut e = self.error("expected ')'");
                    if self.pos >= self.src.len() {
                        e.message = format!("unclosed '(' opened at position {open}");
                    }
                    return Err(e);
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("expected a generator or '('")),
        }
    }

    fn uint(&mut self, what: &str) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected {what}")));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| ParseError {
            position: start,
            message: format!("{what} too large"),
        })
    }
}
