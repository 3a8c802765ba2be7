//! Shared fixtures for unit tests.

use crate::hash::HashFamily;
use crate::kit::{KitCore, ProverBase, VerifierBase};
use crate::treespec::TreeSpec;

/// The four-leaf, depth-two tree used across the test suite:
/// `node(node(leaf s3, leaf s4), node(leaf s5, leaf s6))`.
pub fn four_leaf_spec() -> TreeSpec {
    TreeSpec::node(
        TreeSpec::node(TreeSpec::leaf(*b"s3"), TreeSpec::leaf(*b"s4")),
        TreeSpec::node(TreeSpec::leaf(*b"s5"), TreeSpec::leaf(*b"s6")),
    )
}

pub fn prover() -> ProverBase {
    ProverBase::new(KitCore::new(HashFamily::strong()))
}

pub fn verifier() -> VerifierBase {
    VerifierBase::new(KitCore::new(HashFamily::strong()))
}

// Digests of the four-leaf tree's nodes, computed independently with a
// separate SHA-256 implementation.
pub const H0: &str = "45c72e8beae42562eef40a730e584bda654f6776e0eb9549913f141b4adbf03c";
pub const H1: &str = "0235f777d5243df3112937fd668796947d7813c38d4023f0cc55817e338364d9";
pub const H2: &str = "70d53b4bb88cbf6fd36c53154835ba5b511e1e6d5d27226414cfed711898d1f5";
pub const H5: &str = "d4fe672bb65d520687f9647416b1c3639371adbd76a60eb3cdfaf2135161545f";
pub const H6: &str = "daa5d80a323af482f377e2811b891a31bfd8fd243365e0ae5895fa1d0e161d76";
