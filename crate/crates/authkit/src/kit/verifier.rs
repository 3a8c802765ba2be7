//! Verifier backends.
//!
//! `unauth` is where proof checking happens: pop the head item, compare its
//! digest against the authenticated value, deserialize. Any mismatch is a
//! [`ProofFailure`] value.
//!
//! The reuse-buffering variants consult a digest-keyed cache before touching
//! the stream. [`VerifierCache`] stores the raw serialized bytes and
//! deserializes again on a hit; [`VerifierCacheHet`] stores the decoded value
//! itself and returns it for any evidence, trusting the codec's uniqueness
//! property (violated only under a hash collision).
//! [`VerifierCacheStateful`] is the raw-bytes variant with a mutable cache
//! confined to a single run.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::codec::{deserialize, Bytes, Evidence, Value};

use super::{Kit, KitCore, PopRawProof, ProofFailure, ProofStream, Verdict, VerifierAuth, VerifierKit};

fn make_auth(core: &KitCore, evi: &Evidence, v: Value<VerifierAuth>) -> VerifierAuth {
    let bytes = super::serialize_or_panic(evi, &v);
    VerifierAuth(core.hash(&bytes))
}

/// Pops and checks one stream item against `a` under `evi`.
fn check_head(
    core: &KitCore,
    stream: &mut VecDeque<Bytes>,
    evi: &Evidence,
    a: &VerifierAuth,
) -> Result<(Bytes, Value<VerifierAuth>), ProofFailure> {
    let item = stream.pop_front().ok_or(ProofFailure)?;
    if core.hash(&item) != a.0 {
        return Err(ProofFailure);
    }
    let v = deserialize(evi, &item, core.family()).map_err(|_| ProofFailure)?;
    Ok((item, v))
}

// ---------------------------------------------------------------------------
// Base

#[derive(Clone)]
pub struct VerifierBase {
    core: KitCore,
}

impl VerifierBase {
    pub fn new(core: KitCore) -> VerifierBase {
        VerifierBase { core }
    }
}

type BaseResult<T> = Result<(VecDeque<Bytes>, T), ProofFailure>;

impl Kit for VerifierBase {
    type Auth = VerifierAuth;
    type Comp<T: 'static> = Box<dyn FnOnce(VecDeque<Bytes>) -> BaseResult<T>>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move |st| Ok((st, v)))
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move |st| {
            let (st, a) = c(st)?;
            f(a)(st)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<VerifierAuth>) -> VerifierAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &VerifierAuth) -> Self::Comp<Value<VerifierAuth>> {
        let core = self.core.clone();
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move |mut st| {
            let (_, v) = check_head(&core, &mut st, &evi, &a)?;
            Ok((st, v))
        })
    }
}

impl VerifierKit for VerifierBase {
    fn run<T: 'static>(&self, c: Self::Comp<T>, proof: ProofStream) -> Verdict<T> {
        match c(proof.into()) {
            Ok((rest, v)) => Verdict {
                result: Some(v),
                leftover: rest.len(),
            },
            Err(ProofFailure) => Verdict {
                result: None,
                leftover: 0,
            },
        }
    }

    fn fail<T: 'static>(&self) -> Self::Comp<T> {
        Box::new(|_| Err(ProofFailure))
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PopRawProof for VerifierBase {
    fn pop_raw(&self) -> Self::Comp<Bytes> {
        Box::new(|mut st| {
            let item = st.pop_front().ok_or(ProofFailure)?;
            Ok((st, item))
        })
    }
}

// ---------------------------------------------------------------------------
// Reuse buffering, functional, raw-bytes cache

pub struct CacheVerifierState {
    stream: VecDeque<Bytes>,
    cache: BTreeMap<String, Bytes>,
}

#[derive(Clone)]
pub struct VerifierCache {
    core: KitCore,
}

impl VerifierCache {
    pub fn new(core: KitCore) -> VerifierCache {
        VerifierCache { core }
    }
}

type CacheResult<T> = Result<(CacheVerifierState, T), ProofFailure>;

impl Kit for VerifierCache {
    type Auth = VerifierAuth;
    type Comp<T: 'static> = Box<dyn FnOnce(CacheVerifierState) -> CacheResult<T>>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move |st| Ok((st, v)))
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move |st| {
            let (st, a) = c(st)?;
            f(a)(st)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<VerifierAuth>) -> VerifierAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &VerifierAuth) -> Self::Comp<Value<VerifierAuth>> {
        let core = self.core.clone();
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move |mut st| match st.cache.get(a.0.hex()) {
            Some(item) => {
                let v = deserialize(&evi, item, core.family()).map_err(|_| ProofFailure)?;
                Ok((st, v))
            }
            None => {
                let (item, v) = check_head(&core, &mut st.stream, &evi, &a)?;
                st.cache.insert(a.0.hex().to_owned(), item);
                Ok((st, v))
            }
        })
    }
}

impl VerifierKit for VerifierCache {
    fn run<T: 'static>(&self, c: Self::Comp<T>, proof: ProofStream) -> Verdict<T> {
        let st = CacheVerifierState {
            stream: proof.into(),
            cache: BTreeMap::new(),
        };
        match c(st) {
            Ok((st, v)) => Verdict {
                result: Some(v),
                leftover: st.stream.len(),
            },
            Err(ProofFailure) => Verdict {
                result: None,
                leftover: 0,
            },
        }
    }

    fn fail<T: 'static>(&self) -> Self::Comp<T> {
        Box::new(|_| Err(ProofFailure))
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PopRawProof for VerifierCache {
    fn pop_raw(&self) -> Self::Comp<Bytes> {
        Box::new(|mut st| {
            let item = st.stream.pop_front().ok_or(ProofFailure)?;
            Ok((st, item))
        })
    }
}

// ---------------------------------------------------------------------------
// Reuse buffering, heterogeneous value cache

pub struct HetVerifierState {
    stream: VecDeque<Bytes>,
    cache: BTreeMap<String, Value<VerifierAuth>>,
}

#[derive(Clone)]
pub struct VerifierCacheHet {
    core: KitCore,
}

impl VerifierCacheHet {
    pub fn new(core: KitCore) -> VerifierCacheHet {
        VerifierCacheHet { core }
    }
}

type HetResult<T> = Result<(HetVerifierState, T), ProofFailure>;

impl Kit for VerifierCacheHet {
    type Auth = VerifierAuth;
    type Comp<T: 'static> = Box<dyn FnOnce(HetVerifierState) -> HetResult<T>>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move |st| Ok((st, v)))
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move |st| {
            let (st, a) = c(st)?;
            f(a)(st)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<VerifierAuth>) -> VerifierAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &VerifierAuth) -> Self::Comp<Value<VerifierAuth>> {
        let core = self.core.clone();
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move |mut st| match st.cache.get(a.0.hex()) {
            // The cached value is returned for whatever evidence is in
            // force; uniqueness of the encoding justifies this short of a
            // hash collision.
            Some(v) => {
                let v = v.clone();
                Ok((st, v))
            }
            None => {
                let (_, v) = check_head(&core, &mut st.stream, &evi, &a)?;
                st.cache.insert(a.0.hex().to_owned(), v.clone());
                Ok((st, v))
            }
        })
    }
}

impl VerifierKit for VerifierCacheHet {
    fn run<T: 'static>(&self, c: Self::Comp<T>, proof: ProofStream) -> Verdict<T> {
        let st = HetVerifierState {
            stream: proof.into(),
            cache: BTreeMap::new(),
        };
        match c(st) {
            Ok((st, v)) => Verdict {
                result: Some(v),
                leftover: st.stream.len(),
            },
            Err(ProofFailure) => Verdict {
                result: None,
                leftover: 0,
            },
        }
    }

    fn fail<T: 'static>(&self) -> Self::Comp<T> {
        Box::new(|_| Err(ProofFailure))
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PopRawProof for VerifierCacheHet {
    fn pop_raw(&self) -> Self::Comp<Bytes> {
        Box::new(|mut st| {
            let item = st.stream.pop_front().ok_or(ProofFailure)?;
            Ok((st, item))
        })
    }
}

// ---------------------------------------------------------------------------
// Reuse buffering, stateful

pub struct StatefulVerifierState {
    stream: VecDeque<Bytes>,
    cache: HashMap<String, Bytes>,
}

#[derive(Clone)]
pub struct VerifierCacheStateful {
    core: KitCore,
}

impl VerifierCacheStateful {
    pub fn new(core: KitCore) -> VerifierCacheStateful {
        VerifierCacheStateful { core }
    }
}

impl Kit for VerifierCacheStateful {
    type Auth = VerifierAuth;
    type Comp<T: 'static> = Box<dyn FnOnce(&mut StatefulVerifierState) -> Result<T, ProofFailure>>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move |_| Ok(v))
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move |st| {
            let a = c(st)?;
            f(a)(st)
        })
    }

    fn auth(&self, evi: &Evidence, v: Value<VerifierAuth>) -> VerifierAuth {
        make_auth(&self.core, evi, v)
    }

    fn unauth(&self, evi: &Evidence, a: &VerifierAuth) -> Self::Comp<Value<VerifierAuth>> {
        let core = self.core.clone();
        let evi = evi.clone();
        let a = a.clone();
        Box::new(move |st| match st.cache.get(a.0.hex()) {
            Some(item) => deserialize(&evi, item, core.family()).map_err(|_| ProofFailure),
            None => {
                let (item, v) = check_head(&core, &mut st.stream, &evi, &a)?;
                st.cache.insert(a.0.hex().to_owned(), item);
                Ok(v)
            }
        })
    }
}

impl VerifierKit for VerifierCacheStateful {
    fn run<T: 'static>(&self, c: Self::Comp<T>, proof: ProofStream) -> Verdict<T> {
        // Fresh state per run: the cache never leaks across runs.
        let mut st = StatefulVerifierState {
            stream: proof.into(),
            cache: HashMap::new(),
        };
        match c(&mut st) {
            Ok(v) => Verdict {
                result: Some(v),
                leftover: st.stream.len(),
            },
            Err(ProofFailure) => Verdict {
                result: None,
                leftover: 0,
            },
        }
    }

    fn fail<T: 'static>(&self) -> Self::Comp<T> {
        Box::new(|_| Err(ProofFailure))
    }

    fn core(&self) -> &KitCore {
        &self.core
    }
}

impl PopRawProof for VerifierCacheStateful {
    fn pop_raw(&self) -> Self::Comp<Bytes> {
        Box::new(|st| st.stream.pop_front().ok_or(ProofFailure))
    }
}
