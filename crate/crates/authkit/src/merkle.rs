//! The generic Merkle tree client, written once against [`Kit`] and usable
//! with every backend.
//!
//! A tree node is a value of shape `sum string (pair auth auth)`: the left
//! injection is a leaf carrying its payload, the right injection is a branch
//! whose children are authenticated subtrees.

use crate::codec::{Bytes, Evidence, Value};
use crate::kit::Kit;
use crate::treespec::TreeSpec;

/// One step of a retrieval path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    L,
    R,
}

pub type Path = Vec<Dir>;

/// Parses a path from its textual `[LR]*` form.
pub fn parse_path(s: &str) -> Option<Path> {
    s.chars()
        .map(|c| match c {
            'L' => Some(Dir::L),
            'R' => Some(Dir::R),
            _ => None,
        })
        .collect()
}

/// The fixed evidence for tree nodes: `sum string (pair auth auth)`.
pub fn tree_evidence() -> Evidence {
    Evidence::sum(
        Evidence::string(),
        Evidence::pair(Evidence::auth(), Evidence::auth()),
    )
}

/// A decoded tree node.
pub(crate) enum TreeNode<A> {
    Leaf(Bytes),
    Branch(A, A),
    Other,
}

pub(crate) fn as_tree_node<A>(v: Value<A>) -> TreeNode<A> {
    match v {
        Value::Left(inner) => match *inner {
            Value::Str(s) => TreeNode::Leaf(s),
            _ => TreeNode::Other,
        },
        Value::Right(inner) => match *inner {
            Value::Pair(l, r) => match (*l, *r) {
                (Value::Auth(l), Value::Auth(r)) => TreeNode::Branch(l, r),
                _ => TreeNode::Other,
            },
            _ => TreeNode::Other,
        },
        _ => TreeNode::Other,
    }
}

pub fn leaf_value<A>(s: impl Into<Bytes>) -> Value<A> {
    Value::left(Value::str(s))
}

pub fn branch_value<A>(l: A, r: A) -> Value<A> {
    Value::right(Value::pair(Value::Auth(l), Value::Auth(r)))
}

pub fn make_leaf<K: Kit>(kit: &K, s: impl Into<Bytes>) -> K::Auth {
    kit.auth(&tree_evidence(), leaf_value(s))
}

pub fn make_branch<K: Kit>(kit: &K, l: K::Auth, r: K::Auth) -> K::Auth {
    kit.auth(&tree_evidence(), branch_value(l, r))
}

/// Builds a tree bottom-up from a textual description.
pub fn tree_of_spec<K: Kit>(kit: &K, spec: &TreeSpec) -> K::Auth {
    match spec {
        TreeSpec::Leaf(s) => make_leaf(kit, s.clone()),
        TreeSpec::Node(l, r) => {
            let la = tree_of_spec(kit, l);
            let ra = tree_of_spec(kit, r);
            make_branch(kit, la, ra)
        }
    }
}

/// Descends `path`; yields `Some(payload)` iff the path ends exactly at a
/// leaf, `None` when it overruns a leaf or stops at a branch.
pub fn retrieve<K: Kit>(kit: &K, path: &[Dir], t: K::Auth) -> K::Comp<Option<Bytes>> {
    let k = kit.clone();
    let path = path.to_vec();
    kit.bind(kit.unauth(&tree_evidence(), &t), move |node| {
        match (path.split_first(), as_tree_node(node)) {
            (None, TreeNode::Leaf(s)) => k.ret(Some(s)),
            (Some((Dir::L, rest)), TreeNode::Branch(l, _)) => retrieve(&k, rest, l),
            (Some((Dir::R, rest)), TreeNode::Branch(_, r)) => retrieve(&k, rest, r),
            _ => k.ret(None),
        }
    })
}

/// Replaces the leaf at exactly `path` with a leaf carrying `s`,
/// re-authenticating every node along the way. Yields `None` when the path
/// does not end exactly at a leaf; no structure is created.
pub fn update<K: Kit>(kit: &K, path: &[Dir], s: Bytes, t: K::Auth) -> K::Comp<Option<K::Auth>> {
    let k = kit.clone();
    let path = path.to_vec();
    kit.bind(kit.unauth(&tree_evidence(), &t), move |node| {
        match (path.split_first(), as_tree_node(node)) {
            (None, TreeNode::Leaf(_)) => {
                let leaf = make_leaf(&k, s);
                k.ret(Some(leaf))
            }
            (Some((Dir::L, rest)), TreeNode::Branch(l, r)) => {
                let k2 = k.clone();
                k.bind(update(&k, rest, s, l), move |res| match res {
                    Some(l2) => {
                        let b = make_branch(&k2, l2, r);
                        k2.ret(Some(b))
                    }
                    None => k2.ret(None),
                })
            }
            (Some((Dir::R, rest)), TreeNode::Branch(l, r)) => {
                let k2 = k.clone();
                k.bind(update(&k, rest, s, r), move |res| match res {
                    Some(r2) => {
                        let b = make_branch(&k2, l, r2);
                        k2.ret(Some(b))
                    }
                    None => k2.ret(None),
                })
            }
            _ => k.ret(None),
        }
    })
}
