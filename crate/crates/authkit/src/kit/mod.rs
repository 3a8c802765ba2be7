//! The abstract authenticated-computation interface and its three
//! realizations: prover, verifier, and ideal.
//!
//! A client is written once against [`Kit`] and instantiated with a backend.
//! The prover pairs values with digests and emits proof items when they are
//! unwrapped; the verifier holds bare digests and checks popped items against
//! them; the ideal backend is the identity and serves as the reference
//! semantics the other two must agree with.
//!
//! Authenticated computations are thunks: constructing one has no effects,
//! forcing it is when proof emission/consumption and hashing happen.

mod ideal;
mod prover;
mod verifier;

pub use ideal::Ideal;
pub use prover::{ProverAccum, ProverBase, ProverCache, ProverCacheStateful};
pub use verifier::{VerifierBase, VerifierCache, VerifierCacheHet, VerifierCacheStateful};

use std::cell::RefCell;
use std::rc::Rc;

use crate::codec::{AuthDigest, Bytes, Evidence, Value};
use crate::hash::{Digest, HashFamily, HashLog};

/// An ordered sequence of byte strings exchanged between prover and verifier.
pub type ProofStream = Vec<Bytes>;

/// The verifier rejected the proof. Always a value, never a panic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProofFailure;

/// A hash log shared across the pieces of one run.
pub type SharedHashLog = Rc<RefCell<HashLog>>;

/// Hash family plus optional preimage logging, shared by a backend's
/// operations. Confined to a single run of a single computation.
#[derive(Clone)]
pub struct KitCore {
    family: HashFamily,
    log: Option<SharedHashLog>,
}

impl KitCore {
    pub fn new(family: HashFamily) -> KitCore {
        KitCore { family, log: None }
    }

    /// Enables preimage logging; every digest computed through this core is
    /// recorded in `log`.
    pub fn with_log(family: HashFamily, log: SharedHashLog) -> KitCore {
        KitCore {
            family,
            log: Some(log),
        }
    }

    pub fn family(&self) -> &HashFamily {
        &self.family
    }

    pub(crate) fn hash(&self, preimage: &[u8]) -> Digest {
        match &self.log {
            Some(log) => self.family.digest(preimage, Some(&mut log.borrow_mut())),
            None => self.family.digest(preimage, None),
        }
    }
}

/// The prover's authenticated value: the payload together with the digest of
/// its serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProverAuth {
    pub payload: Rc<Value<ProverAuth>>,
    pub digest: Digest,
}

impl AuthDigest for ProverAuth {
    fn digest_hex(&self) -> &str {
        self.digest.hex()
    }
}

/// The verifier's authenticated value: just the digest.
pub use crate::codec::DigestAuth as VerifierAuth;

/// The ideal backend's authenticated value: the payload itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealAuth(pub Rc<Value<IdealAuth>>);

/// The authenticated-computation interface: an abstract representation of
/// authenticated values, a computation constructor, and the four operations a
/// client may use. Backends are cheap to clone.
pub trait Kit: Clone + 'static {
    type Auth: Clone + 'static;
    type Comp<T: 'static>: 'static;

    /// Lifts a value into an effect-free computation.
    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T>;

    /// Sequences two computations, threading proof state left to right.
    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static;

    /// Authenticates a value. The value must inhabit the evidence; a shape
    /// mismatch is a programming error and panics.
    fn auth(&self, evi: &Evidence, v: Value<Self::Auth>) -> Self::Auth;

    /// Unwraps an authenticated value: the prover emits a proof item, the
    /// verifier checks one, the ideal backend just returns the payload.
    fn unauth(&self, evi: &Evidence, a: &Self::Auth) -> Self::Comp<Value<Self::Auth>>;
}

/// Outcome of a verifier run. Leftover proof items are permitted and
/// discarded; callers may surface the count as a warning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<T> {
    pub result: Option<T>,
    pub leftover: usize,
}

/// Prover-side runner: forcing yields the proof stream and the result.
pub trait ProverKit: Kit<Auth = ProverAuth> {
    fn run<T: 'static>(&self, c: Self::Comp<T>) -> (ProofStream, T);
    fn core(&self) -> &KitCore;
}

/// Verifier-side runner: forcing consumes a proof stream and yields either
/// the result or a rejection.
pub trait VerifierKit: Kit<Auth = VerifierAuth> {
    fn run<T: 'static>(&self, c: Self::Comp<T>, proof: ProofStream) -> Verdict<T>;
    /// A computation that rejects unconditionally.
    fn fail<T: 'static>(&self) -> Self::Comp<T>;
    fn core(&self) -> &KitCore;
}

/// Ideal-side runner: plain execution, no proofs.
pub trait IdealKit: Kit<Auth = IdealAuth> {
    fn run<T: 'static>(&self, c: Self::Comp<T>) -> T;
}

/// Escape hatch for hand-written operations on the prover side: append one
/// raw item to the proof stream, bypassing authentication and reuse
/// buffering. Unsafe by convention: the item's meaning is whatever the
/// matching [`PopRawProof`] consumer assigns to it.
pub trait PushRawProof: Kit {
    fn push_raw(&self, item: Bytes) -> Self::Comp<()>;
}

/// Escape hatch for hand-written operations on the verifier side: pop the
/// next raw item from the proof stream, rejecting when it is exhausted.
pub trait PopRawProof: Kit {
    fn pop_raw(&self) -> Self::Comp<Bytes>;
}

pub(crate) fn serialize_or_panic<A: AuthDigest>(evi: &Evidence, v: &Value<A>) -> Bytes {
    crate::codec::serialize(evi, v).expect("authenticated value must inhabit its evidence")
}
