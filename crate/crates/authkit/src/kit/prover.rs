//! Prover backends.
//!
//! Four variants share the same authenticated representation and differ only
//! in how the proof stream is assembled:
//!
//! * [`ProverBase`]: each step returns its own sub-stream and `bind`
//!   concatenates, exactly mirroring the reference semantics.
//! * [`ProverAccum`]: steps append to a shared accumulator so `bind` does no
//!   list surgery; the emitted stream is item-for-item identical to base.
//! * [`ProverCache`]: reuse buffering with a functionally threaded seen-set;
//!   an item whose digest was already emitted is omitted.
//! * [`ProverCacheStateful`]: reuse buffering with a mutable cache confined
//!   to a single run.

use std::collections::{BTreeSet, HashSet};
use std::rc::Rc;

use crate::codec::{Bytes, Evidence, Value};

use super::{
    serialize_or_panic, Kit, KitCore, ProofStream, ProverAuth, ProverKit, PushRawProof,
};

fn make_auth(core: &KitCore, evi: &Evidence, v: Value<ProverAuth>) -> ProverAuth {
    let bytes = serialize_or_panic(evi, &v);
    let digest = core.hash(&bytes);
    ProverAuth {
        payload: Rc::new(v),
        digest,
    }
}

// ---------------------------------------------------------------------------
// Base

#[derive(Clone)]
pub struct ProverBase {
    core: KitCore,
}

impl ProverBase {
    pub fn new(core: KitCore) -> ProverBase {
        ProverBase { core }
    }
}

impl Kit for ProverBase {
    type Auth = ProverAuth;
    type Comp<T: 'static> = Box<dyn FnOnce() -> (ProofStream, T)>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move || (Vec::new(), v))
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move || {
            let (mut prf, a) = c();
            let (prf2, b) = f(a)();
            prf.extend(prf2);
            (prf, b)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<ProverAuth>) -> ProverAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &ProverAuth) -> Self::Comp<Value<ProverAuth>> {
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move || {
            let item = serialize_or_panic(&evi, &*a.payload);
            (vec![item], (*a.payload).clone())
        })
    }
}

impl ProverKit for ProverBase {
    fn run<T: 'static>(&self, c: Self::Comp<T>) -> (ProofStream, T) {
        c()
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PushRawProof for ProverBase {
    fn push_raw(&self, item: Bytes) -> Self::Comp<()> {
        Box::new(move || (vec![item], ()))
    }
}

// ---------------------------------------------------------------------------
// Accumulator

#[derive(Clone)]
pub struct ProverAccum {
    core: KitCore,
}

impl ProverAccum {
    pub fn new(core: KitCore) -> ProverAccum {
        ProverAccum { core }
    }
}

impl Kit for ProverAccum {
    type Auth = ProverAuth;
    type Comp<T: 'static> = Box<dyn FnOnce(&mut ProofStream) -> T>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move |_| v)
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move |acc| {
            let a = c(acc);
            f(a)(acc)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<ProverAuth>) -> ProverAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &ProverAuth) -> Self::Comp<Value<ProverAuth>> {
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move |acc| {
            acc.push(serialize_or_panic(&evi, &*a.payload));
            (*a.payload).clone()
        })
    }
}

impl ProverKit for ProverAccum {
    fn run<T: 'static>(&self, c: Self::Comp<T>) -> (ProofStream, T) {
        let mut acc = Vec::new();
        let v = c(&mut acc);
        (acc, v)
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PushRawProof for ProverAccum {
    fn push_raw(&self, item: Bytes) -> Self::Comp<()> {
        Box::new(move |acc| acc.push(item))
    }
}

// ---------------------------------------------------------------------------
// Reuse buffering, functional

/// Stream built so far plus the digests already emitted, threaded through the
/// computation by value.
pub struct CacheProverState {
    items: ProofStream,
    seen: BTreeSet<String>,
}

#[derive(Clone)]
pub struct ProverCache {
    core: KitCore,
}

impl ProverCache {
    pub fn new(core: KitCore) -> ProverCache {
        ProverCache { core }
    }
}

impl Kit for ProverCache {
    type Auth = ProverAuth;
    type Comp<T: 'static> = Box<dyn FnOnce(CacheProverState) -> (CacheProverState, T)>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move |st| (st, v))
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move |st| {
            let (st, a) = c(st);
            f(a)(st)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<ProverAuth>) -> ProverAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &ProverAuth) -> Self::Comp<Value<ProverAuth>> {
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move |mut st| {
            if !st.seen.contains(a.digest.hex()) {
                st.seen.insert(a.digest.hex().to_owned());
                st.items.push(serialize_or_panic(&evi, &*a.payload));
            }
            (st, (*a.payload).clone())
        })
    }
}

impl ProverKit for ProverCache {
    fn run<T: 'static>(&self, c: Self::Comp<T>) -> (ProofStream, T) {
        let st = CacheProverState {
            items: Vec::new(),
            seen: BTreeSet::new(),
        };
        let (st, v) = c(st);
        (st.items, v)
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PushRawProof for ProverCache {
    fn push_raw(&self, item: Bytes) -> Self::Comp<()> {
        // Raw items bypass the seen-set.
        Box::new(move |mut st| {
            st.items.push(item);
            (st, ())
        })
    }
}

// ---------------------------------------------------------------------------
// Reuse buffering, stateful

/// Heap-allocated cache confined to a single run; `run` starts from a fresh
/// state every time.
pub struct StatefulProverState {
    items: ProofStream,
    seen: HashSet<String>,
}

#[derive(Clone)]
pub struct ProverCacheStateful {
    core: KitCore,
}

impl ProverCacheStateful {
    pub fn new(core: KitCore) -> ProverCacheStateful {
        ProverCacheStateful { core }
    }
}

impl Kit for ProverCacheStateful {
    type Auth = ProverAuth;
    type Comp<T: 'static> = Box<dyn FnOnce(&mut StatefulProverState) -> T>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move |_| v)
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move |st| {
            let a = c(st);
            f(a)(st)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<ProverAuth>) -> ProverAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &ProverAuth) -> Self::Comp<Value<ProverAuth>> {
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move |st| {
            if st.seen.insert(a.digest.hex().to_owned()) {
                st.items.push(serialize_or_panic(&evi, &*a.payload));
            }
            (*a.payload).clone()
        })
    }
}

impl ProverKit for ProverCacheStateful {
    fn run<T: 'static>(&self, c: Self::Comp<T>) -> (ProofStream, T) {
        let mut st = StatefulProverState {
            items: Vec::new(),
            seen: HashSet::new(),
        };
        let v = c(&mut st);
        (st.items, v)
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PushRawProof for ProverCacheStateful {
    fn push_raw(&self, item: Bytes) -> Self::Comp<()> {
        Box::new(move |st| st.items.push(item))
    }
}
