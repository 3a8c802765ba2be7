//! The ideal backend: all operations are the identity. Never hashes, never
//! touches a proof stream; it is the reference semantics the prover and
//! verifier must agree with.

use std::rc::Rc;

use crate::codec::{Evidence, Value};

use super::{IdealAuth, IdealKit, Kit};

#[derive(Clone, Default)]
pub struct Ideal;

impl Ideal {
    pub fn new() -> Ideal {
        Ideal
    }
}

impl Kit for Ideal {
    type Auth = IdealAuth;
    type Comp<T: 'static> = Box<dyn FnOnce() -> T>;

    fn ret<T: 'static>(&self, v: T) -> Self::Comp<T> {
        Box::new(move || v)
    }

    fn bind<A: 'static, B: 'static, F>(&self, c: Self::Comp<A>, f: F) -> Self::Comp<B>
    where
        F: FnOnce(A) -> Self::Comp<B> + 'static,
    {
        Box::new(move || f(c())())
    }

    fn auth(&self, _evi: &Evidence, v: Value<IdealAuth>) -> IdealAuth {
        IdealAuth(Rc::new(v))
    }

    fn unauth(&self, _evi: &Evidence, a: &IdealAuth) -> Self::Comp<Value<IdealAuth>> {
        let a = a.clone();
        Box::new(move || (*a.0).clone())
    }
}

impl IdealKit for Ideal {
    fn run<T: 'static>(&self, c: Self::Comp<T>) -> T {
        c()
    }
}
