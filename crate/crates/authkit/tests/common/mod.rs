//! Seeded generators shared by the property and acceptance suites.

use authkit::codec::{DigestAuth, Evidence, Value};
use authkit::hash::{Digest, HashFamily};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn gen_digest(rng: &mut ChaCha8Rng) -> Digest {
    let bytes: Vec<u8> = (0..32).map(|_| rng.gen()).collect();
    Digest::from_hex(&hex::encode(bytes), &HashFamily::strong()).expect("valid digest hex")
}

fn gen_bytes(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<u8> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen()).collect()
}

/// A random evidence/value pair where the value inhabits the evidence.
/// Includes the recursive digest-list shape so `mu` back-references stay
/// covered.
pub fn gen_pair(rng: &mut ChaCha8Rng, budget: usize) -> (Evidence, Value<DigestAuth>) {
    let choice = if budget == 0 {
        rng.gen_range(0..3)
    } else {
        rng.gen_range(0..7)
    };
    match choice {
        0 => (Evidence::int(), Value::Int(rng.gen())),
        1 => (Evidence::string(), Value::Str(gen_bytes(rng, 24))),
        2 => (Evidence::auth(), Value::Auth(DigestAuth(gen_digest(rng)))),
        3 => {
            let (e1, v1) = gen_pair(rng, budget - 1);
            let (e2, v2) = gen_pair(rng, budget - 1);
            (Evidence::pair(e1, e2), Value::pair(v1, v2))
        }
        4 => {
            let (e1, v1) = gen_pair(rng, budget - 1);
            let (e2, v2) = gen_pair(rng, budget - 1);
            let evi = Evidence::sum(e1, e2);
            if rng.gen_bool(0.5) {
                (evi, Value::left(v1))
            } else {
                (evi, Value::right(v2))
            }
        }
        5 => {
            let (e, v) = gen_pair(rng, budget - 1);
            (Evidence::mu(e), Value::fold(v))
        }
        _ => {
            // mu X. string + (auth * X), a digest list of random length.
            let list_evi = Evidence::mu(Evidence::sum(
                Evidence::string(),
                Evidence::pair(Evidence::auth(), Evidence::mu_back(0)),
            ));
            let mut v = Value::fold(Value::left(Value::str(*b"")));
            for _ in 0..rng.gen_range(0..6) {
                v = Value::fold(Value::right(Value::pair(
                    Value::Auth(DigestAuth(gen_digest(rng))),
                    v,
                )));
            }
            (list_evi, v)
        }
    }
}

/// Random evidence with no inhabitant attached; used for totality checks.
pub fn gen_evidence(rng: &mut ChaCha8Rng, budget: usize) -> Evidence {
    let choice = if budget == 0 {
        rng.gen_range(0..3)
    } else {
        rng.gen_range(0..7)
    };
    match choice {
        0 => Evidence::int(),
        1 => Evidence::string(),
        2 => Evidence::auth(),
        3 => Evidence::pair(gen_evidence(rng, budget - 1), gen_evidence(rng, budget - 1)),
        4 => Evidence::sum(gen_evidence(rng, budget - 1), gen_evidence(rng, budget - 1)),
        5 => Evidence::mu(gen_evidence(rng, budget - 1)),
        _ => Evidence::mu(Evidence::sum(
            Evidence::string(),
            Evidence::pair(gen_evidence(rng, budget - 1), Evidence::mu_back(0)),
        )),
    }
}
