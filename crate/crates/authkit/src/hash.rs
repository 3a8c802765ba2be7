//! Hash families with an optional preimage log.
//!
//! The strong family is SHA-256. Weak families are bit-truncations of SHA-256,
//! which keeps digests deterministic while making collisions cheap to find for
//! adversarial tests. A [`HashLog`] records every preimage hashed during a run
//! so that a trace can later be checked for collision-freedom.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use sha2::{Digest as _, Sha256};
use thiserror::Error;

/// A fixed-length digest rendered as lowercase hex.
///
/// The length is `2 * ceil(digest_bits / 8)` characters and is fixed per
/// family; digests from different-width families never compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digest(String);

impl Digest {
    pub fn hex(&self) -> &str {
        &self.0
    }

    /// For callers that have already validated length and character set.
    pub(crate) fn from_hex_unchecked(s: String) -> Digest {
        debug_assert!(s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)));
        Digest(s)
    }

    /// Parses a digest for the given family, rejecting wrong lengths and
    /// non-hex or uppercase characters.
    pub fn from_hex(s: &str, family: &HashFamily) -> Result<Digest, DigestError> {
        if s.len() != family.digest_hex_len() {
            return Err(DigestError::Length {
                expected: family.digest_hex_len(),
                got: s.len(),
            });
        }
        if !s.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b)) {
            return Err(DigestError::NotHex);
        }
        Ok(Digest(s.to_owned()))
    }
}

impl fmt::Display for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigestError {
    #[error("digest has length {got}, family requires {expected}")]
    Length { expected: usize, got: usize },
    #[error("digest contains non-hex or uppercase characters")]
    NotHex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FamilyKind {
    Strong,
    WeakTruncated(u32),
}

/// A deterministic hash family: either full SHA-256 or a `k`-bit truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HashFamily {
    kind: FamilyKind,
}

impl HashFamily {
    pub fn strong() -> HashFamily {
        HashFamily {
            kind: FamilyKind::Strong,
        }
    }

    /// A weak family keeping the first `bits` bits of SHA-256, `1..=256`.
    pub fn weak(bits: u32) -> HashFamily {
        assert!((1..=256).contains(&bits), "truncation must be 1..=256 bits");
        HashFamily {
            kind: FamilyKind::WeakTruncated(bits),
        }
    }

    pub fn family_id(&self) -> String {
        match self.kind {
            FamilyKind::Strong => "sha256".to_owned(),
            FamilyKind::WeakTruncated(k) => format!("sha256-trunc-{k}"),
        }
    }

    pub fn digest_bits(&self) -> u32 {
        match self.kind {
            FamilyKind::Strong => 256,
            FamilyKind::WeakTruncated(k) => k,
        }
    }

    /// Digest width in bytes: `ceil(digest_bits / 8)`.
    pub fn digest_len_bytes(&self) -> usize {
        (self.digest_bits() as usize + 7) / 8
    }

    /// Length of the hex rendering of a digest.
    pub fn digest_hex_len(&self) -> usize {
        2 * self.digest_len_bytes()
    }

    /// Hashes `preimage`; when a log is supplied the preimage is recorded.
    pub fn digest(&self, preimage: &[u8], log: Option<&mut HashLog>) -> Digest {
        if let Some(log) = log {
            log.record(preimage);
        }
        let full = Sha256::digest(preimage);
        let bytes = match self.kind {
            FamilyKind::Strong => full.to_vec(),
            FamilyKind::WeakTruncated(k) => {
                let nbytes = (k as usize + 7) / 8;
                let mut out = full[..nbytes].to_vec();
                // Zero the bits past k in the last byte so equal prefixes
                // render identically.
                let spare = (nbytes * 8 - k as usize) as u32;
                if spare > 0 {
                    let last = out.last_mut().expect("nbytes >= 1");
                    *last &= u8::MAX << spare;
                }
                out
            }
        };
        Digest(hex::encode(bytes))
    }

    /// True iff no two distinct entries of `log` share a digest under this
    /// family.
    pub fn collision_free(&self, log: &HashLog) -> bool {
        let mut seen: HashMap<Digest, &[u8]> = HashMap::with_capacity(log.len());
        for entry in log.iter() {
            let d = self.digest(entry, None);
            if let Some(prev) = seen.insert(d, entry) {
                if prev != &entry[..] {
                    return false;
                }
            }
        }
        true
    }

    /// Birthday search for two distinct strings with equal digests, trying at
    /// most `budget` candidate preimages. Only plausible for truncated
    /// families; on the strong family this exhausts the budget and returns
    /// `None`.
    pub fn find_collision(&self, budget: u64) -> Option<(Vec<u8>, Vec<u8>)> {
        let mut seen: HashMap<Digest, Vec<u8>> = HashMap::new();
        for i in 0..budget {
            let candidate = format!("c{i}").into_bytes();
            let d = self.digest(&candidate, None);
            if let Some(prev) = seen.get(&d) {
                if prev != &candidate {
                    return Some((prev.clone(), candidate));
                }
            } else {
                seen.insert(d, candidate);
            }
        }
        None
    }
}

/// The set of preimages hashed during a run. Append-only: entries are only
/// ever added, never removed.
#[derive(Debug, Clone, Default)]
pub struct HashLog {
    entries: BTreeSet<Vec<u8>>,
}

impl HashLog {
    pub fn new() -> HashLog {
        HashLog::default()
    }

    fn record(&mut self, preimage: &[u8]) {
        self.entries.insert(preimage.to_vec());
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, preimage: &[u8]) -> bool {
        self.entries.contains(preimage)
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> {
        self.entries.iter().map(|v| v.as_slice())
    }
}
