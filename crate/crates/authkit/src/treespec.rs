//! Textual tree descriptions: `(leaf "…")` or `(node <t> <t>)`.
//!
//! String literals support backslash escapes for `"` and `\` only; any other
//! byte, including newlines, stands for itself.

use thiserror::Error;

use crate::codec::Bytes;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSpec {
    Leaf(Bytes),
    Node(Box<TreeSpec>, Box<TreeSpec>),
}

impl TreeSpec {
    pub fn leaf(s: impl Into<Bytes>) -> TreeSpec {
        TreeSpec::Leaf(s.into())
    }

    pub fn node(l: TreeSpec, r: TreeSpec) -> TreeSpec {
        TreeSpec::Node(Box::new(l), Box::new(r))
    }

    /// Leaf = 0, node = 1 + max of children.
    pub fn depth(&self) -> usize {
        match self {
            TreeSpec::Leaf(_) => 0,
            TreeSpec::Node(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn parse(input: &[u8]) -> Result<TreeSpec, TreeSpecError> {
        let mut p = SpecParser { input, pos: 0 };
        p.skip_ws();
        let t = p.parse_tree()?;
        p.skip_ws();
        if p.pos != input.len() {
            return Err(TreeSpecError::Trailing { offset: p.pos });
        }
        Ok(t)
    }

    pub fn to_text(&self) -> Bytes {
        let mut out = Vec::new();
        self.render(&mut out);
        out
    }

    fn render(&self, out: &mut Bytes) {
        match self {
            TreeSpec::Leaf(s) => {
                out.extend_from_slice(b"(leaf \"");
                for &b in s {
                    if b == b'"' || b == b'\\' {
                        out.push(b'\\');
                    }
                    out.push(b);
                }
                out.extend_from_slice(b"\")");
            }
            TreeSpec::Node(l, r) => {
                out.extend_from_slice(b"(node ");
                l.render(out);
                out.push(b' ');
                r.render(out);
                out.push(b')');
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeSpecError {
    #[error("unexpected end of input at offset {offset}")]
    UnexpectedEnd { offset: usize },
    #[error("expected {expected} at offset {offset}")]
    Expected { expected: &'static str, offset: usize },
    #[error("unknown form at offset {offset}, expected leaf or node")]
    UnknownForm { offset: usize },
    #[error("invalid escape at offset {offset}, only \\\" and \\\\ are allowed")]
    BadEscape { offset: usize },
    #[error("trailing input at offset {offset}")]
    Trailing { offset: usize },
}

struct SpecParser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn skip_ws(&mut self) {
        while matches!(
            self.input.get(self.pos),
            Some(b' ' | b'\t' | b'\n' | b'\r')
        ) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8, expected: &'static str) -> Result<(), TreeSpecError> {
        match self.input.get(self.pos) {
            Some(&x) if x == b => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => Err(TreeSpecError::Expected {
                expected,
                offset: self.pos,
            }),
            None => Err(TreeSpecError::UnexpectedEnd { offset: self.pos }),
        }
    }

    fn parse_tree(&mut self) -> Result<TreeSpec, TreeSpecError> {
        self.expect(b'(', "'('")?;
        self.skip_ws();
        if self.input[self.pos..].starts_with(b"leaf") {
            self.pos += 4;
            self.skip_ws();
            let s = self.parse_string()?;
            self.skip_ws();
            self.expect(b')', "')'")?;
            Ok(TreeSpec::Leaf(s))
        } else if self.input[self.pos..].starts_with(b"node") {
            self.pos += 4;
            self.skip_ws();
            let l = self.parse_tree()?;
            self.skip_ws();
            let r = self.parse_tree()?;
            self.skip_ws();
            self.expect(b')', "')'")?;
            Ok(TreeSpec::node(l, r))
        } else {
            Err(TreeSpecError::UnknownForm { offset: self.pos })
        }
    }

    fn parse_string(&mut self) -> Result<Bytes, TreeSpecError> {
        self.expect(b'"', "'\"'")?;
        let mut out = Vec::new();
        loop {
            match self.input.get(self.pos) {
                None => return Err(TreeSpecError::UnexpectedEnd { offset: self.pos }),
                Some(b'"') => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(b'\\') => match self.input.get(self.pos + 1) {
                    Some(&c @ (b'"' | b'\\')) => {
                        out.push(c);
                        self.pos += 2;
                    }
                    Some(_) => return Err(TreeSpecError::BadEscape { offset: self.pos }),
                    None => return Err(TreeSpecError::UnexpectedEnd { offset: self.pos + 1 }),
                },
                Some(&c) => {
                    out.push(c);
                    self.pos += 1;
                }
            }
        }
    }
}
