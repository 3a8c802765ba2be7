//! Hand-written minimal-proof retrieve.
//!
//! The generic retrieve emits one full node encoding per visited node, which
//! repeats digests that the verifier could recompute. The minimal proof for a
//! retrieval is the sibling digest at each step plus the terminal node
//! payload; the verifier rebuilds the root hash bottom-up and compares.
//!
//! The whole proof travels as a single compound stream item so it composes
//! with items produced by generated code around it. The item reuses the codec
//! grammar (no second parser): a pair of the terminal and a digest list,
//!
//! ```text
//! terminal  = left (string s)                    -- found a leaf
//!           | right (left (string s))            -- path overran a leaf
//!           | right (right (pair auth auth))     -- path stopped at a branch
//! siblings  = mu X. sum string (pair auth X)     -- nil is the empty string,
//!                                                   deepest sibling first
//! item      = pair terminal siblings
//! ```
//!
//! The prover and verifier sides splice past the typed interface through the
//! raw push/pop escape hatch; nothing checks these items except the code
//! below, which is the point of having them.

use crate::codec::{deserialize, serialize, Bytes, DigestAuth, Evidence, Value};
use crate::hash::Digest;
use crate::kit::{
    Ideal, Kit, PopRawProof, ProofFailure, ProverAuth, ProverBase, ProverAccum, ProverCache,
    ProverCacheStateful, PushRawProof, VerifierAuth, VerifierBase, VerifierCache,
    VerifierCacheHet, VerifierCacheStateful, VerifierKit,
};
use crate::merkle::{self, branch_value, leaf_value, tree_evidence, Dir, TreeNode};

/// How the descent ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terminal {
    /// The path ended exactly at a leaf; retrieval succeeds with its payload.
    FoundLeaf(Bytes),
    /// The path had steps left when a leaf was reached; retrieval yields
    /// `None`. Requires strictly fewer siblings than path steps.
    EarlyLeaf(Bytes),
    /// The path ended at a branch; retrieval yields `None`. The branch's two
    /// child digests let the verifier recompute its hash.
    EndedAtNode(Digest, Digest),
}

/// The minimal proof: the terminal plus the untaken sibling digest at each
/// step, deepest-first (the sibling adjacent to the terminal comes first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetrieveProof {
    pub terminal: Terminal,
    pub siblings: Vec<Digest>,
}

/// Evidence for the compound stream item.
pub fn retrieve_item_evidence() -> Evidence {
    let terminal = Evidence::sum(
        Evidence::string(),
        Evidence::sum(
            Evidence::string(),
            Evidence::pair(Evidence::auth(), Evidence::auth()),
        ),
    );
    let siblings = Evidence::mu(Evidence::sum(
        Evidence::string(),
        Evidence::pair(Evidence::auth(), Evidence::mu_back(0)),
    ));
    Evidence::pair(terminal, siblings)
}

/// Descends the prover's tree, collecting the untaken sibling digest at each
/// step. Pure: reads digests already stored in the tree, hashes nothing.
pub fn prove_retrieve(path: &[Dir], t: &ProverAuth) -> (RetrieveProof, Option<Bytes>) {
    let mut siblings = Vec::new(); // collected shallowest-first
    let mut cur = t.clone();
    let mut idx = 0;
    loop {
        let node = merkle::as_tree_node((*cur.payload).clone());
        match (path.get(idx), node) {
            (None, TreeNode::Leaf(s)) => {
                siblings.reverse();
                return (
                    RetrieveProof {
                        terminal: Terminal::FoundLeaf(s.clone()),
                        siblings,
                    },
                    Some(s),
                );
            }
            (Some(_), TreeNode::Leaf(s)) => {
                siblings.reverse();
                return (
                    RetrieveProof {
                        terminal: Terminal::EarlyLeaf(s),
                        siblings,
                    },
                    None,
                );
            }
            (None, TreeNode::Branch(l, r)) => {
                siblings.reverse();
                return (
                    RetrieveProof {
                        terminal: Terminal::EndedAtNode(l.digest, r.digest),
                        siblings,
                    },
                    None,
                );
            }
            (Some(Dir::L), TreeNode::Branch(l, r)) => {
                siblings.push(r.digest);
                cur = l;
                idx += 1;
            }
            (Some(Dir::R), TreeNode::Branch(l, r)) => {
                siblings.push(l.digest);
                cur = r;
                idx += 1;
            }
            (_, TreeNode::Other) => unreachable!("prover trees are well-formed"),
        }
    }
}

fn terminal_value(t: &Terminal) -> Value<DigestAuth> {
    match t {
        Terminal::FoundLeaf(s) => Value::left(Value::str(s.clone())),
        Terminal::EarlyLeaf(s) => Value::right(Value::left(Value::str(s.clone()))),
        Terminal::EndedAtNode(dl, dr) => Value::right(Value::right(Value::pair(
            Value::Auth(DigestAuth(dl.clone())),
            Value::Auth(DigestAuth(dr.clone())),
        ))),
    }
}

/// Encodes a proof as the compound stream item.
pub fn encode_retrieve_proof(rp: &RetrieveProof) -> Bytes {
    let mut list: Value<DigestAuth> = Value::fold(Value::left(Value::str(*b"")));
    for d in rp.siblings.iter().rev() {
        list = Value::fold(Value::right(Value::pair(
            Value::Auth(DigestAuth(d.clone())),
            list,
        )));
    }
    let item = Value::pair(terminal_value(&rp.terminal), list);
    serialize(&retrieve_item_evidence(), &item).expect("item inhabits its evidence")
}

/// Decodes a compound item. Fails on anything but the exact layout above,
/// including a non-empty nil marker.
pub fn decode_retrieve_proof(
    item: &[u8],
    family: &crate::hash::HashFamily,
) -> Result<RetrieveProof, ProofFailure> {
    let v = deserialize(&retrieve_item_evidence(), item, family).map_err(|_| ProofFailure)?;
    let (terminal_v, mut list_v) = match v {
        Value::Pair(a, b) => (*a, *b),
        _ => return Err(ProofFailure),
    };
    let terminal = match terminal_v {
        Value::Left(s) => match *s {
            Value::Str(s) => Terminal::FoundLeaf(s),
            _ => return Err(ProofFailure),
        },
        Value::Right(inner) => match *inner {
            Value::Left(s) => match *s {
                Value::Str(s) => Terminal::EarlyLeaf(s),
                _ => return Err(ProofFailure),
            },
            Value::Right(p) => match *p {
                Value::Pair(l, r) => match (*l, *r) {
                    (Value::Auth(l), Value::Auth(r)) => Terminal::EndedAtNode(l.0, r.0),
                    _ => return Err(ProofFailure),
                },
                _ => return Err(ProofFailure),
            },
            _ => return Err(ProofFailure),
        },
        _ => return Err(ProofFailure),
    };
    let mut siblings = Vec::new();
    loop {
        let inner = match list_v {
            Value::Fold(inner) => *inner,
            _ => return Err(ProofFailure),
        };
        match inner {
            Value::Left(nil) => match *nil {
                Value::Str(s) if s.is_empty() => break,
                _ => return Err(ProofFailure),
            },
            Value::Right(cons) => match *cons {
                Value::Pair(d, tail) => match *d {
                    Value::Auth(d) => {
                        siblings.push(d.0);
                        list_v = *tail;
                    }
                    _ => return Err(ProofFailure),
                },
                _ => return Err(ProofFailure),
            },
            _ => return Err(ProofFailure),
        }
    }
    Ok(RetrieveProof { terminal, siblings })
}

/// Rebuilds the root digest from a decoded proof and compares it against
/// `root`. Hashing goes through the verifier's `auth` so preimages land in
/// the run's hash log.
pub fn check_retrieve<K: VerifierKit>(
    kit: &K,
    path: &[Dir],
    root: &Digest,
    rp: &RetrieveProof,
) -> Result<Option<Bytes>, ProofFailure> {
    let tevi = tree_evidence();
    let (result, start, effective_path): (Option<Bytes>, VerifierAuth, &[Dir]) = match &rp.terminal
    {
        Terminal::FoundLeaf(s) => (
            Some(s.clone()),
            kit.auth(&tevi, leaf_value(s.clone())),
            path,
        ),
        Terminal::EarlyLeaf(s) => {
            // The leaf must sit strictly above the path's end.
            if path.len() <= rp.siblings.len() {
                return Err(ProofFailure);
            }
            (
                None,
                kit.auth(&tevi, leaf_value(s.clone())),
                &path[..rp.siblings.len()],
            )
        }
        Terminal::EndedAtNode(dl, dr) => (
            None,
            kit.auth(
                &tevi,
                branch_value(VerifierAuth(dl.clone()), VerifierAuth(dr.clone())),
            ),
            path,
        ),
    };
    if effective_path.len() != rp.siblings.len() {
        return Err(ProofFailure);
    }
    let mut cur = start;
    for (dir, sib) in effective_path.iter().rev().zip(&rp.siblings) {
        let sib = VerifierAuth(sib.clone());
        cur = match dir {
            Dir::L => kit.auth(&tevi, branch_value(cur, sib)),
            Dir::R => kit.auth(&tevi, branch_value(sib, cur)),
        };
    }
    if cur.0 == *root {
        Ok(result)
    } else {
        Err(ProofFailure)
    }
}

fn prover_retrieve_opt<K>(kit: &K, path: &[Dir], t: &ProverAuth) -> K::Comp<Option<Bytes>>
where
    K: Kit<Auth = ProverAuth> + PushRawProof,
{
    let k = kit.clone();
    let (rp, result) = prove_retrieve(path, t);
    let item = encode_retrieve_proof(&rp);
    kit.bind(kit.push_raw(item), move |()| k.ret(result))
}

fn verifier_retrieve_opt<K>(kit: &K, path: &[Dir], root: &VerifierAuth) -> K::Comp<Option<Bytes>>
where
    K: VerifierKit + PopRawProof,
{
    let k = kit.clone();
    let path = path.to_vec();
    let root = root.0.clone();
    kit.bind(kit.pop_raw(), move |item| {
        match decode_retrieve_proof(&item, k.core().family())
            .and_then(|rp| check_retrieve(&k, &path, &root, &rp))
        {
            Ok(result) => k.ret(result),
            Err(ProofFailure) => k.fail(),
        }
    })
}

/// Retrieval through the minimal-proof implementation where one exists; the
/// ideal backend falls back to the generic walk, which is already proof-free.
pub trait OptRetrieve: Kit {
    fn retrieve_opt(&self, path: &[Dir], t: &Self::Auth) -> Self::Comp<Option<Bytes>>;
}

macro_rules! opt_retrieve_prover {
    ($($b:ty),*) => {$(
        impl OptRetrieve for $b {
            fn retrieve_opt(&self, path: &[Dir], t: &Self::Auth) -> Self::Comp<Option<Bytes>> {
                prover_retrieve_opt(self, path, t)
            }
        }
    )*};
}

macro_rules! opt_retrieve_verifier {
    ($($b:ty),*) => {$(
        impl OptRetrieve for $b {
            fn retrieve_opt(&self, path: &[Dir], t: &Self::Auth) -> Self::Comp<Option<Bytes>> {
                verifier_retrieve_opt(self, path, t)
            }
        }
    )*};
}

opt_retrieve_prover!(ProverBase, ProverAccum, ProverCache, ProverCacheStateful);
opt_retrieve_verifier!(VerifierBase, VerifierCache, VerifierCacheHet, VerifierCacheStateful);

impl OptRetrieve for Ideal {
    fn retrieve_opt(&self, path: &[Dir], t: &Self::Auth) -> Self::Comp<Option<Bytes>> {
        merkle::retrieve(self, path, t.clone())
    }
}
