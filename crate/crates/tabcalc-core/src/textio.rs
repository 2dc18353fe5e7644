//! Shared cursor for the bit-exact text grammars (partitions, shapes,
//! tableaux, words). Keeps byte positions so parse errors can point at the
//! offending character.

use alloc::format;
use alloc::string::{String, ToString};

use crate::error::Error;

/// A byte cursor over an input string.
pub(crate) struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(input: &'a str) -> Self {
        Cursor { input, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos == self.input.len()
    }

    pub(crate) fn error(&self, msg: impl ToString) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    /// Consumes exactly `c` or fails.
    pub(crate) fn expect(&mut self, c: char) -> Result<(), Error> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(self.error(format!("expected '{c}', found '{found}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    /// Consumes `c` if present; reports whether it did.
    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// Consumes a decimal number.
    pub(crate) fn number(&mut self) -> Result<usize, Error> {
        let rest = &self.input[self.pos..];
        let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return Err(self.error("expected a digit"));
        }
        let text = &rest[..digits];
        let value: usize = text
            .parse()
            .map_err(|_| self.error(format!("number '{text}' out of range")))?;
        self.pos += digits;
        Ok(value)
    }

    /// Fails unless the whole input has been consumed.
    pub(crate) fn finish(&self) -> Result<(), Error> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(String::from("trailing input")))
        }
    }
}
