//! Text grammar:
//!
//! ```text
//! tree   := label | "(" tree SP tree ")"
//! label  := [A-Za-z0-9_]+ | "*"
//! forest := tree { "," SP? tree } | "1"
//! ```
//!
//! Canonical printing always emits canonical child order and "," separators.

use crate::error::{Error, Result};
use crate::tree::{canonicalize, Forest, RawTree, Tree};

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {:?}", b as char)))
        }
    }

    fn label(&mut self) -> Result<String> {
        if self.peek() == Some(b'*') {
            self.pos += 1;
            return Ok("*".to_string());
        }
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b.is_ascii_alphanumeric() || b == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected label or '('"));
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos])
            .expect("ascii")
            .to_string())
    }

    fn tree(&mut self) -> Result<RawTree> {
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let a = self.tree()?;
            self.skip_ws();
            let b = self.tree()?;
            self.skip_ws();
            self.expect(b')')?;
            Ok(RawTree::node(vec![a, b]))
        } else {
            Ok(RawTree::leaf(&self.label()?))
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }
}

pub fn parse_tree(s: &str) -> Result<Tree> {
    let mut p = Parser::new(s.trim());
    let raw = p.tree()?;
    p.end()?;
    canonicalize(&raw)
}

pub fn parse_forest(s: &str) -> Result<Forest> {
    let trimmed = s.trim();
    if trimmed == "1" {
        return Ok(Forest::empty());
    }
    let mut p = Parser::new(trimmed);
    let mut trees = vec![canonicalize(&p.tree()?)?];
    loop {
        p.skip_ws();
        match p.peek() {
            Some(b',') => {
                p.pos += 1;
                trees.push(canonicalize(&p.tree()?)?);
            }
            None => break,
            Some(_) => return Err(p.err("expected ',' or end of input")),
        }
    }
    Ok(Forest::from_trees(trees))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_printing() {
        assert_eq!(parse_tree("(c (b a))").unwrap().to_string(), "((a b) c)");
        assert_eq!(parse_tree(" * ").unwrap().to_string(), "*");
        assert_eq!(
            parse_forest("(b a), *,*").unwrap().to_string(),
            "*, *, (a b)"
        );
        assert_eq!(parse_forest("1").unwrap().to_string(), "1");
    }

    #[test]
    fn round_trip() {
        for s in ["*", "(a b)", "((a b) c)", "((* *) (* *))"] {
            let t = parse_tree(s).unwrap();
            assert_eq!(parse_tree(&t.to_string()).unwrap(), t);
        }
        for s in ["1", "*, *", "(a b), c"] {
            let f = parse_forest(s).unwrap();
            assert_eq!(parse_forest(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_tree("(a b") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_tree("").is_err());
        assert!(parse_tree("(a b c)").is_err());
        assert!(parse_forest("a,, b").is_err());
    }
}
