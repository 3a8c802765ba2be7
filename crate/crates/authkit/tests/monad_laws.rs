//! Monad laws for every backend, observed through `run`: left identity,
//! right identity, and associativity must produce byte-equal proof streams
//! and equal results.

use authkit::codec::{Evidence, Value};
use authkit::hash::HashFamily;
use authkit::kit::{
    Ideal, IdealKit, Kit, KitCore, ProverAccum, ProverBase, ProverCache, ProverCacheStateful,
    ProverKit, VerifierBase, VerifierCache, VerifierCacheHet, VerifierCacheStateful, VerifierKit,
};

fn core() -> KitCore {
    KitCore::new(HashFamily::strong())
}

/// An effectful computation: unauth a string auth, then return `tag`.
fn effectful<K: Kit>(kit: &K, payload: &[u8], tag: i64) -> K::Comp<i64> {
    let a = kit.auth(&Evidence::string(), Value::str(payload.to_vec()));
    let k = kit.clone();
    kit.bind(kit.unauth(&Evidence::string(), &a), move |_| k.ret(tag))
}

fn check_prover<K: ProverKit>(kit: &K) {
    // Left identity: bind(ret v, f) == f v
    let k = kit.clone();
    let f = move |x: i64| effectful(&k, b"left", x + 1);
    let lhs = kit.run(kit.bind(kit.ret(41), f.clone()));
    let rhs = kit.run(f(41));
    assert_eq!(lhs, rhs);

    // Right identity: bind(c, ret) == c
    let k = kit.clone();
    let lhs = kit.run(kit.bind(effectful(kit, b"right", 7), move |x| k.ret(x)));
    let rhs = kit.run(effectful(kit, b"right", 7));
    assert_eq!(lhs, rhs);

    // Associativity: bind(bind(c, f), g) == bind(c, |x| bind(f x, g))
    let (k1, k2, k3) = (kit.clone(), kit.clone(), kit.clone());
    let f = move |x: i64| effectful(&k1, b"f", x + 1);
    let g = move |x: i64| effectful(&k2, b"g", x * 2);
    let (fa, ga) = (f.clone(), g.clone());
    let lhs = kit.run(kit.bind(kit.bind(effectful(kit, b"c", 1), fa), ga));
    let rhs = kit.run(kit.bind(effectful(kit, b"c", 1), move |x| {
        k3.bind(f(x), g.clone())
    }));
    assert_eq!(lhs, rhs);
}

fn check_verifier<K: VerifierKit>(kit: &K) {
    let honest = |payload: &[u8]| {
        let p = ProverBase::new(core());
        let a = p.auth(&Evidence::string(), Value::str(payload.to_vec()));
        let (stream, _) = p.run(p.unauth(&Evidence::string(), &a));
        stream
    };

    // Left identity.
    let k = kit.clone();
    let f = move |x: i64| effectful(&k, b"left", x + 1);
    let lhs = kit.run(kit.bind(kit.ret(41), f.clone()), honest(b"left"));
    let rhs = kit.run(f(41), honest(b"left"));
    assert_eq!(lhs, rhs);

    // Right identity.
    let k = kit.clone();
    let lhs = kit.run(
        kit.bind(effectful(kit, b"right", 7), move |x| k.ret(x)),
        honest(b"right"),
    );
    let rhs = kit.run(effectful(kit, b"right", 7), honest(b"right"));
    assert_eq!(lhs, rhs);

    // Associativity, on the concatenation of the three honest streams.
    let mut stream = honest(b"c");
    stream.extend(honest(b"f"));
    stream.extend(honest(b"g"));
    let (k1, k2, k3) = (kit.clone(), kit.clone(), kit.clone());
    let f = move |x: i64| effectful(&k1, b"f", x + 1);
    let g = move |x: i64| effectful(&k2, b"g", x * 2);
    let (fa, ga) = (f.clone(), g.clone());
    let lhs = kit.run(
        kit.bind(kit.bind(effectful(kit, b"c", 1), fa), ga),
        stream.clone(),
    );
    let rhs = kit.run(
        kit.bind(effectful(kit, b"c", 1), move |x| k3.bind(f(x), g.clone())),
        stream,
    );
    assert_eq!(lhs, rhs);
}

fn check_ideal(kit: &Ideal) {
    let k = kit.clone();
    let f = move |x: i64| effectful(&k, b"left", x + 1);
    assert_eq!(kit.run(kit.bind(kit.ret(41), f.clone())), kit.run(f(41)));

    let k = kit.clone();
    assert_eq!(
        kit.run(kit.bind(effectful(kit, b"right", 7), move |x| k.ret(x))),
        kit.run(effectful(kit, b"right", 7))
    );

    let (k1, k2, k3) = (kit.clone(), kit.clone(), kit.clone());
    let f = move |x: i64| effectful(&k1, b"f", x + 1);
    let g = move |x: i64| effectful(&k2, b"g", x * 2);
    let (fa, ga) = (f.clone(), g.clone());
    assert_eq!(
        kit.run(kit.bind(kit.bind(effectful(kit, b"c", 1), fa), ga)),
        kit.run(kit.bind(effectful(kit, b"c", 1), move |x| k3.bind(f(x), g.clone())))
    );
}

#[test]
fn prover_base_laws() {
    check_prover(&ProverBase::new(core()));
}

#[test]
fn prover_accum_laws() {
    check_prover(&ProverAccum::new(core()));
}

#[test]
fn prover_cache_laws() {
    check_prover(&ProverCache::new(core()));
}

#[test]
fn prover_cache_stateful_laws() {
    check_prover(&ProverCacheStateful::new(core()));
}

#[test]
fn verifier_base_laws() {
    check_verifier(&VerifierBase::new(core()));
}

#[test]
fn verifier_cache_laws() {
    check_verifier(&VerifierCache::new(core()));
}

#[test]
fn verifier_cache_het_laws() {
    check_verifier(&VerifierCacheHet::new(core()));
}

#[test]
fn verifier_cache_stateful_laws() {
    check_verifier(&VerifierCacheStateful::new(core()));
}

#[test]
fn ideal_laws() {
    check_ideal(&Ideal::new());
}
