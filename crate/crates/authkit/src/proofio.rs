//! Proof-stream files: the interchange format between prover and verifier
//! invocations.
//!
//! ```text
//! AKP1\n
//! <item count>\n
//! <byte length>:<raw bytes>\n      (once per item)
//! ```
//!
//! Lengths are decimal so files diff cleanly; the raw bytes may contain
//! anything, including newlines, since they are length-framed.

use thiserror::Error;

use crate::codec::Bytes;
use crate::kit::ProofStream;

pub const MAGIC: &[u8] = b"AKP1\n";

/// Serializes a proof stream to its file image. Deterministic.
pub fn write_proof(p: &[Bytes]) -> Bytes {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(p.len().to_string().as_bytes());
    out.push(b'\n');
    for item in p {
        out.extend_from_slice(item.len().to_string().as_bytes());
        out.push(b':');
        out.extend_from_slice(item);
        out.push(b'\n');
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProofFileError {
    #[error("bad magic at offset 0")]
    BadMagic,
    #[error("malformed count at offset {offset}")]
    BadCount { offset: usize },
    #[error("malformed item length at offset {offset}")]
    BadItemLength { offset: usize },
    #[error("unexpected end of file at offset {offset}")]
    UnexpectedEnd { offset: usize },
    #[error("missing newline at offset {offset}")]
    MissingNewline { offset: usize },
    #[error("trailing bytes at offset {offset}")]
    Trailing { offset: usize },
}

/// Parses a proof file image; the exact inverse of [`write_proof`] on its
/// valid domain.
pub fn read_proof(input: &[u8]) -> Result<ProofStream, ProofFileError> {
    if !input.starts_with(MAGIC) {
        return Err(ProofFileError::BadMagic);
    }
    let mut pos = MAGIC.len();
    let count = read_decimal(input, &mut pos).ok_or(ProofFileError::BadCount { offset: pos })?;
    expect_newline(input, &mut pos)?;
    let mut items = Vec::new();
    for _ in 0..count {
        let len =
            read_decimal(input, &mut pos).ok_or(ProofFileError::BadItemLength { offset: pos })?;
        match input.get(pos) {
            Some(b':') => pos += 1,
            Some(_) => return Err(ProofFileError::BadItemLength { offset: pos }),
            None => return Err(ProofFileError::UnexpectedEnd { offset: pos }),
        }
        if input.len() - pos < len {
            return Err(ProofFileError::UnexpectedEnd {
                offset: input.len(),
            });
        }
        items.push(input[pos..pos + len].to_vec());
        pos += len;
        expect_newline(input, &mut pos)?;
    }
    if pos != input.len() {
        return Err(ProofFileError::Trailing { offset: pos });
    }
    Ok(items)
}

/// Canonical decimal: digits only, no leading zeros, fits in usize.
fn read_decimal(input: &[u8], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    while matches!(input.get(*pos), Some(b) if b.is_ascii_digit()) {
        *pos += 1;
    }
    let digits = &input[start..*pos];
    if digits.is_empty() || (digits.len() > 1 && digits[0] == b'0') {
        return None;
    }
    std::str::from_utf8(digits).ok()?.parse().ok()
}

fn expect_newline(input: &[u8], pos: &mut usize) -> Result<(), ProofFileError> {
    match input.get(*pos) {
        Some(b'\n') => {
            *pos += 1;
            Ok(())
        }
        Some(_) => Err(ProofFileError::MissingNewline { offset: *pos }),
        None => Err(ProofFileError::UnexpectedEnd { offset: *pos }),
    }
}
