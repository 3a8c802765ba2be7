//! Evidence combinators and the canonical wire grammar shared by the prover
//! and verifier.
//!
//! Evidence describes the shape of serializable values. The grammar is a
//! prefix code with one tag byte per constructor:
//!
//! ```text
//! int     i:<canonical decimal>;
//! string  s:<decimal length>:<raw bytes>;
//! pair    p:<fst><snd>;
//! left    l:<inner>;
//! right   r:<inner>;
//! auth    h:<digest hex>;
//! mu      (transparent: encodes as its unrolling)
//! ```
//!
//! Tag bytes give cross-type injectivity and length-framed strings make the
//! code self-delimiting for arbitrary payload bytes. Integers and length
//! fields are canonical decimals (no leading zeros, no `-0`), so every value
//! has exactly one encoding and every encoding at most one value.

use std::rc::Rc;

use thiserror::Error;

use crate::hash::{Digest, HashFamily};

/// Byte strings are the universal payload currency.
pub type Bytes = Vec<u8>;

/// Parse depth limit: adversarial input must not exhaust the call stack.
pub const DEPTH_LIMIT: usize = 4096;

#[derive(Debug)]
enum Shape {
    Auth,
    Str,
    Int,
    Pair(Evidence, Evidence),
    Sum(Evidence, Evidence),
    Mu(Evidence),
    // De Bruijn back-reference to the n-th enclosing `Mu` binder. This is how
    // evidence for recursive shapes (lists, trees not cut by `auth`) stays a
    // finite value.
    MuBack(u32),
}

/// A structural serializer/deserializer descriptor. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Evidence(Rc<Shape>);

impl Evidence {
    pub fn auth() -> Evidence {
        Evidence(Rc::new(Shape::Auth))
    }

    pub fn string() -> Evidence {
        Evidence(Rc::new(Shape::Str))
    }

    pub fn int() -> Evidence {
        Evidence(Rc::new(Shape::Int))
    }

    pub fn pair(fst: Evidence, snd: Evidence) -> Evidence {
        Evidence(Rc::new(Shape::Pair(fst, snd)))
    }

    pub fn sum(left: Evidence, right: Evidence) -> Evidence {
        Evidence(Rc::new(Shape::Sum(left, right)))
    }

    /// Evidence for one unrolling of a recursive shape; values under it are
    /// wrapped in [`Value::Fold`] and the encoding is transparent.
    pub fn mu(body: Evidence) -> Evidence {
        Evidence(Rc::new(Shape::Mu(body)))
    }

    /// Back-reference to the `n`-th enclosing [`Evidence::mu`] binder
    /// (0 = innermost). Behaves exactly like that binder: it expects a
    /// [`Value::Fold`] and re-enters the binder's body.
    pub fn mu_back(n: u32) -> Evidence {
        Evidence(Rc::new(Shape::MuBack(n)))
    }
}

/// Authenticated representations that can appear inside serialized values.
/// Serialization only ever needs the digest.
pub trait AuthDigest {
    fn digest_hex(&self) -> &str;
}

/// The bare-digest authenticated representation: what the verifier holds and
/// what deserialization produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigestAuth(pub Digest);

impl AuthDigest for DigestAuth {
    fn digest_hex(&self) -> &str {
        self.0.hex()
    }
}

/// A dynamically shaped value, parameterized by the authenticated
/// representation stored at `Auth` leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value<A> {
    Int(i64),
    Str(Bytes),
    Pair(Box<Value<A>>, Box<Value<A>>),
    Left(Box<Value<A>>),
    Right(Box<Value<A>>),
    Auth(A),
    Fold(Box<Value<A>>),
}

impl<A> Value<A> {
    pub fn str(s: impl Into<Bytes>) -> Value<A> {
        Value::Str(s.into())
    }

    pub fn pair(fst: Value<A>, snd: Value<A>) -> Value<A> {
        Value::Pair(Box::new(fst), Box::new(snd))
    }

    pub fn left(v: Value<A>) -> Value<A> {
        Value::Left(Box::new(v))
    }

    pub fn right(v: Value<A>) -> Value<A> {
        Value::Right(Box::new(v))
    }

    pub fn fold(v: Value<A>) -> Value<A> {
        Value::Fold(Box::new(v))
    }
}

/// Structural equality modulo `Fold` wrappers. `Fold` is transparent on the
/// wire, so this is the equality the injectivity property quantifies over.
pub fn fold_erased_eq<A: PartialEq>(a: &Value<A>, b: &Value<A>) -> bool {
    let (mut a, mut b) = (a, b);
    while let Value::Fold(inner) = a {
        a = inner;
    }
    while let Value::Fold(inner) = b {
        b = inner;
    }
    match (a, b) {
        (Value::Int(x), Value::Int(y)) => x == y,
        (Value::Str(x), Value::Str(y)) => x == y,
        (Value::Pair(x1, x2), Value::Pair(y1, y2)) => {
            fold_erased_eq(x1, y1) && fold_erased_eq(x2, y2)
        }
        (Value::Left(x), Value::Left(y)) | (Value::Right(x), Value::Right(y)) => {
            fold_erased_eq(x, y)
        }
        (Value::Auth(x), Value::Auth(y)) => x == y,
        _ => false,
    }
}

/// The value does not inhabit the evidence it was serialized against.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("value does not inhabit evidence: {0}")]
pub struct ShapeError(pub String);

/// Serializes `v` against `evi`. `Auth` leaves encode as their digest only;
/// `Mu` is transparent.
pub fn serialize<A: AuthDigest>(evi: &Evidence, v: &Value<A>) -> Result<Bytes, ShapeError> {
    let mut out = Vec::new();
    let mut binders = Vec::new();
    encode(evi, v, &mut binders, &mut out)?;
    Ok(out)
}

fn encode<A: AuthDigest>(
    evi: &Evidence,
    v: &Value<A>,
    binders: &mut Vec<Evidence>,
    out: &mut Vec<u8>,
) -> Result<(), ShapeError> {
    match (&*evi.0, v) {
        (Shape::Int, Value::Int(z)) => {
            out.extend_from_slice(b"i:");
            out.extend_from_slice(z.to_string().as_bytes());
            out.push(b';');
            Ok(())
        }
        (Shape::Str, Value::Str(s)) => {
            out.extend_from_slice(b"s:");
            out.extend_from_slice(s.len().to_string().as_bytes());
            out.push(b':');
            out.extend_from_slice(s);
            out.push(b';');
            Ok(())
        }
        (Shape::Pair(e1, e2), Value::Pair(a, b)) => {
            out.extend_from_slice(b"p:");
            encode(e1, a, binders, out)?;
            encode(e2, b, binders, out)?;
            out.push(b';');
            Ok(())
        }
        (Shape::Sum(e1, _), Value::Left(a)) => {
            out.extend_from_slice(b"l:");
            encode(e1, a, binders, out)?;
            out.push(b';');
            Ok(())
        }
        (Shape::Sum(_, e2), Value::Right(b)) => {
            out.extend_from_slice(b"r:");
            encode(e2, b, binders, out)?;
            out.push(b';');
            Ok(())
        }
        (Shape::Auth, Value::Auth(a)) => {
            out.extend_from_slice(b"h:");
            out.extend_from_slice(a.digest_hex().as_bytes());
            out.push(b';');
            Ok(())
        }
        (Shape::Mu(body), Value::Fold(inner)) => {
            binders.push(evi.clone());
            let body = body.clone();
            let r = encode(&body, inner, binders, out);
            binders.pop();
            r
        }
        (Shape::MuBack(n), Value::Fold(_)) => {
            let pos = binders
                .len()
                .checked_sub(1 + *n as usize)
                .ok_or_else(|| ShapeError(format!("unbound mu back-reference {n}")))?;
            let binder = binders[pos].clone();
            let saved = binders.split_off(pos);
            let r = encode(&binder, v, binders, out);
            binders.extend(saved);
            r
        }
        (shape, v) => Err(ShapeError(format!(
            "expected {}, found {}",
            shape_name(shape),
            value_name(v)
        ))),
    }
}

fn shape_name(s: &Shape) -> &'static str {
    match s {
        Shape::Auth => "auth",
        Shape::Str => "string",
        Shape::Int => "int",
        Shape::Pair(..) => "pair",
        Shape::Sum(..) => "sum",
        Shape::Mu(_) => "mu",
        Shape::MuBack(_) => "mu back-reference",
    }
}

fn value_name<A>(v: &Value<A>) -> &'static str {
    match v {
        Value::Int(_) => "int",
        Value::Str(_) => "string",
        Value::Pair(..) => "pair",
        Value::Left(_) => "left",
        Value::Right(_) => "right",
        Value::Auth(_) => "auth",
        Value::Fold(_) => "fold",
    }
}

/// Deserialization failure. Arbitrary bytes are legal input; every failure is
/// a value, never a panic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("unexpected end of input at offset {0}")]
    UnexpectedEnd(usize),
    #[error("malformed framing at offset {0}")]
    BadFraming(usize),
    #[error("non-canonical or out-of-range integer at offset {0}")]
    BadInt(usize),
    #[error("non-canonical or oversized length at offset {0}")]
    BadLength(usize),
    #[error("malformed digest at offset {0}")]
    BadDigest(usize),
    #[error("trailing bytes at offset {0}")]
    Trailing(usize),
    #[error("nesting exceeds depth limit {DEPTH_LIMIT}")]
    DepthLimit,
    #[error("unbound mu back-reference in evidence")]
    UnboundMu,
}

/// Parses `input` as a value inhabiting `evi`, consuming all of it. The
/// digest width accepted inside `h:...;` is fixed by `family`.
pub fn deserialize(
    evi: &Evidence,
    input: &[u8],
    family: &HashFamily,
) -> Result<Value<DigestAuth>, DecodeError> {
    let mut p = Parser {
        input,
        pos: 0,
        digest_hex_len: family.digest_hex_len(),
        binders: Vec::new(),
    };
    let v = p.parse(evi, 0)?;
    if p.pos != input.len() {
        return Err(DecodeError::Trailing(p.pos));
    }
    Ok(v)
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    digest_hex_len: usize,
    binders: Vec<Evidence>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), DecodeError> {
        match self.peek() {
            Some(x) if x == b => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => Err(DecodeError::BadFraming(self.pos)),
            None => Err(DecodeError::UnexpectedEnd(self.pos)),
        }
    }

    fn expect_tag(&mut self, tag: u8) -> Result<(), DecodeError> {
        self.expect(tag)?;
        self.expect(b':')
    }

    fn parse(&mut self, evi: &Evidence, depth: usize) -> Result<Value<DigestAuth>, DecodeError> {
        if depth >= DEPTH_LIMIT {
            return Err(DecodeError::DepthLimit);
        }
        match &*evi.0 {
            Shape::Int => {
                self.expect_tag(b'i')?;
                let z = self.parse_canonical_i64()?;
                self.expect(b';')?;
                Ok(Value::Int(z))
            }
            Shape::Str => {
                self.expect_tag(b's')?;
                let len = self.parse_canonical_len()?;
                self.expect(b':')?;
                if self.input.len() - self.pos < len {
                    return Err(DecodeError::UnexpectedEnd(self.input.len()));
                }
                let s = self.input[self.pos..self.pos + len].to_vec();
                self.pos += len;
                self.expect(b';')?;
                Ok(Value::Str(s))
            }
            Shape::Pair(e1, e2) => {
                self.expect_tag(b'p')?;
                let a = self.parse(e1, depth + 1)?;
                let b = self.parse(e2, depth + 1)?;
                self.expect(b';')?;
                Ok(Value::pair(a, b))
            }
            Shape::Sum(e1, e2) => match self.peek() {
                Some(b'l') => {
                    self.expect_tag(b'l')?;
                    let a = self.parse(e1, depth + 1)?;
                    self.expect(b';')?;
                    Ok(Value::left(a))
                }
                Some(b'r') => {
                    self.expect_tag(b'r')?;
                    let b = self.parse(e2, depth + 1)?;
                    self.expect(b';')?;
                    Ok(Value::right(b))
                }
                Some(_) => Err(DecodeError::BadFraming(self.pos)),
                None => Err(DecodeError::UnexpectedEnd(self.pos)),
            },
            Shape::Auth => {
                self.expect_tag(b'h')?;
                let start = self.pos;
                if self.input.len() - self.pos < self.digest_hex_len {
                    return Err(DecodeError::UnexpectedEnd(self.input.len()));
                }
                let hex = &self.input[start..start + self.digest_hex_len];
                if !hex
                    .iter()
                    .all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(b))
                {
                    return Err(DecodeError::BadDigest(start));
                }
                self.pos += self.digest_hex_len;
                self.expect(b';')?;
                let hex = std::str::from_utf8(hex).expect("hex is ascii");
                Ok(Value::Auth(DigestAuth(Digest::from_hex_unchecked(
                    hex.to_owned(),
                ))))
            }
            Shape::Mu(body) => {
                self.binders.push(evi.clone());
                let body = body.clone();
                let r = self.parse(&body, depth + 1);
                self.binders.pop();
                Ok(Value::fold(r?))
            }
            Shape::MuBack(n) => {
                let pos = self
                    .binders
                    .len()
                    .checked_sub(1 + *n as usize)
                    .ok_or(DecodeError::UnboundMu)?;
                let binder = self.binders[pos].clone();
                let saved = self.binders.split_off(pos);
                let r = self.parse(&binder, depth + 1);
                self.binders.extend(saved);
                r
            }
        }
    }

    /// Canonical signed decimal: optional `-`, no leading zeros, no `-0`,
    /// must fit in an i64.
    fn parse_canonical_i64(&mut self) -> Result<i64, DecodeError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.input[digits_start..self.pos];
        if digits.is_empty() {
            return Err(DecodeError::BadInt(start));
        }
        if digits.len() > 1 && digits[0] == b'0' {
            return Err(DecodeError::BadInt(start));
        }
        if digits == b"0" && start != digits_start {
            return Err(DecodeError::BadInt(start)); // "-0"
        }
        let text = std::str::from_utf8(&self.input[start..self.pos]).expect("ascii");
        text.parse::<i64>().map_err(|_| DecodeError::BadInt(start))
    }

    /// Canonical unsigned decimal length field.
    fn parse_canonical_len(&mut self) -> Result<usize, DecodeError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.input[start..self.pos];
        if digits.is_empty() || (digits.len() > 1 && digits[0] == b'0') {
            return Err(DecodeError::BadLength(start));
        }
        let text = std::str::from_utf8(digits).expect("ascii");
        text.parse::<usize>()
            .map_err(|_| DecodeError::BadLength(start))
    }
}
