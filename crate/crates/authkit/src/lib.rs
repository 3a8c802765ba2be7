//! One data-structure implementation, three executables: a proof-producing
//! prover, a proof-checking verifier, and a plain in-memory reference, all
//! behind a single authenticated-computation interface, plus an adversarial
//! harness that exercises the security and correctness properties the design
//! relies on.

pub mod adversary;
pub mod cli;
pub mod codec;
pub mod hash;
pub mod kit;
pub mod merkle;
pub mod merkle_opt;
pub mod proofio;
pub mod treespec;

#[cfg(test)]
pub(crate) mod testutil;

pub use codec::Bytes;
