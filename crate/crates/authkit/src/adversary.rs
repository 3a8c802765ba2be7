//! Differential and adversarial trial runners.
//!
//! A trial generates a random client program, runs it under the prover,
//! verifier, and ideal backends, and compares the observable results. The
//! security trials additionally tamper with the proof stream before handing
//! it to the verifier: an accepted proof whose result disagrees with the
//! ideal run is a violation unless the run's hash log contains a collision.
//!
//! Everything is seed-deterministic: a trial is reproducible from its seed
//! alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codec::Bytes;
use crate::hash::HashFamily;
use crate::kit::{
    Ideal, Kit, KitCore, ProofStream, ProverAccum, ProverBase, ProverCache, ProverCacheStateful,
    ProverKit, SharedHashLog, Verdict, VerifierBase, VerifierCache, VerifierCacheHet,
    VerifierCacheStateful, VerifierKit,
};
use crate::merkle::{self, tree_of_spec, Dir, Path};
use crate::merkle_opt::OptRetrieve;
use crate::treespec::TreeSpec;

// ---------------------------------------------------------------------------
// Programs

/// One client operation against the current tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpSpec {
    Retrieve(Path),
    RetrieveOpt(Path),
    Update(Path, Bytes),
}

/// A backend-generic client program: build a tree, then run a batch of
/// operations sequenced by bind, each against the tree left by the previous
/// step (an update that yields `None` leaves the tree unchanged).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProgramSpec {
    pub tree: TreeSpec,
    pub ops: Vec<OpSpec>,
}

/// What a program's run observably produces: per operation, `Some(bytes)`
/// for a successful retrieve or the written value for a successful update,
/// `None` otherwise. Plain data, comparable across backends.
pub type Obs = Vec<Option<Bytes>>;

/// The four-leaf tree with the retrieval that walks right then left;
/// the pinned fixture used across tests.
pub fn sample_program() -> ProgramSpec {
    ProgramSpec {
        tree: TreeSpec::node(
            TreeSpec::node(TreeSpec::leaf(*b"s3"), TreeSpec::leaf(*b"s4")),
            TreeSpec::node(TreeSpec::leaf(*b"s5"), TreeSpec::leaf(*b"s6")),
        ),
        ops: vec![OpSpec::Retrieve(vec![Dir::R, Dir::L])],
    }
}

fn run_ops<K: Kit + OptRetrieve>(kit: &K, root: K::Auth, ops: &[OpSpec]) -> K::Comp<Obs> {
    let mut comp: K::Comp<(K::Auth, Obs)> = kit.ret((root, Vec::new()));
    for op in ops {
        let op = op.clone();
        let k = kit.clone();
        comp = kit.bind(comp, move |(root, mut obs)| match op {
            OpSpec::Retrieve(path) => {
                let k2 = k.clone();
                let keep = root.clone();
                k.bind(merkle::retrieve(&k, &path, root), move |r| {
                    obs.push(r);
                    k2.ret((keep, obs))
                })
            }
            OpSpec::RetrieveOpt(path) => {
                let k2 = k.clone();
                let keep = root.clone();
                k.bind(k.retrieve_opt(&path, &root), move |r| {
                    obs.push(r);
                    k2.ret((keep, obs))
                })
            }
            OpSpec::Update(path, value) => {
                let k2 = k.clone();
                let keep = root.clone();
                let written = value.clone();
                k.bind(merkle::update(&k, &path, value, root), move |r| match r {
                    Some(new_root) => {
                        obs.push(Some(written));
                        k2.ret((new_root, obs))
                    }
                    None => {
                        obs.push(None);
                        k2.ret((keep, obs))
                    }
                })
            }
        });
    }
    let k = kit.clone();
    kit.bind(comp, move |(_, obs)| k.ret(obs))
}

// ---------------------------------------------------------------------------
// Variants

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProverVariant {
    Base,
    Accum,
    Cache,
    CacheStateful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifierVariant {
    Base,
    Cache,
    CacheHet,
    CacheStateful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VariantPair {
    pub prover: ProverVariant,
    pub verifier: VerifierVariant,
}

impl ProverVariant {
    pub fn name(self) -> &'static str {
        match self {
            ProverVariant::Base => "base",
            ProverVariant::Accum => "accum",
            ProverVariant::Cache => "cache",
            ProverVariant::CacheStateful => "cache-state",
        }
    }
}

impl VerifierVariant {
    pub fn name(self) -> &'static str {
        match self {
            VerifierVariant::Base => "base",
            VerifierVariant::Cache => "cache",
            VerifierVariant::CacheHet => "cache-het",
            VerifierVariant::CacheStateful => "cache-state",
        }
    }
}

/// Every prover/verifier pairing that agrees on the stream layout: provers
/// without reuse buffering pair with the base verifier, provers with reuse
/// buffering pair with the caching verifiers.
pub fn compatible_pairs() -> Vec<VariantPair> {
    let mut pairs = Vec::new();
    for p in [ProverVariant::Base, ProverVariant::Accum] {
        pairs.push(VariantPair {
            prover: p,
            verifier: VerifierVariant::Base,
        });
    }
    for p in [ProverVariant::Cache, ProverVariant::CacheStateful] {
        for v in [
            VerifierVariant::Cache,
            VerifierVariant::CacheHet,
            VerifierVariant::CacheStateful,
        ] {
            pairs.push(VariantPair {
                prover: p,
                verifier: v,
            });
        }
    }
    pairs
}

pub fn run_prover(
    variant: ProverVariant,
    core: KitCore,
    prog: &ProgramSpec,
) -> (ProofStream, Obs) {
    fn go<K: ProverKit + OptRetrieve>(kit: &K, prog: &ProgramSpec) -> (ProofStream, Obs) {
        let root = tree_of_spec(kit, &prog.tree);
        kit.run(run_ops(kit, root, &prog.ops))
    }
    match variant {
        ProverVariant::Base => go(&ProverBase::new(core), prog),
        ProverVariant::Accum => go(&ProverAccum::new(core), prog),
        ProverVariant::Cache => go(&ProverCache::new(core), prog),
        ProverVariant::CacheStateful => go(&ProverCacheStateful::new(core), prog),
    }
}

pub fn run_verifier(
    variant: VerifierVariant,
    core: KitCore,
    prog: &ProgramSpec,
    proof: ProofStream,
) -> Verdict<Obs> {
    fn go<K: VerifierKit + OptRetrieve>(
        kit: &K,
        prog: &ProgramSpec,
        proof: ProofStream,
    ) -> Verdict<Obs> {
        let root = tree_of_spec(kit, &prog.tree);
        kit.run(run_ops(kit, root, &prog.ops), proof)
    }
    match variant {
        VerifierVariant::Base => go(&VerifierBase::new(core), prog, proof),
        VerifierVariant::Cache => go(&VerifierCache::new(core), prog, proof),
        VerifierVariant::CacheHet => go(&VerifierCacheHet::new(core), prog, proof),
        VerifierVariant::CacheStateful => go(&VerifierCacheStateful::new(core), prog, proof),
    }
}

pub fn run_ideal(prog: &ProgramSpec) -> Obs {
    let kit = Ideal::new();
    let root = tree_of_spec(&kit, &prog.tree);
    crate::kit::IdealKit::run(&kit, run_ops(&kit, root, &prog.ops))
}

// ---------------------------------------------------------------------------
// Program generation

/// Generates a seed-deterministic random program: a tree of depth at most 6
/// and a batch of 1 to 8 operations. With `mix_opt`, some retrievals go
/// through the hand-optimized implementation.
pub fn gen_program(rng: &mut ChaCha8Rng, mix_opt: bool) -> ProgramSpec {
    let tree = gen_tree(rng, 6);
    let n_ops = rng.gen_range(1..=8);
    let ops = (0..n_ops).map(|_| gen_op(rng, &tree, mix_opt)).collect();
    ProgramSpec { tree, ops }
}

fn gen_tree(rng: &mut ChaCha8Rng, budget: usize) -> TreeSpec {
    if budget == 0 || rng.gen_bool(0.35) {
        TreeSpec::Leaf(gen_payload(rng))
    } else {
        let l = gen_tree(rng, budget - 1);
        let r = gen_tree(rng, budget - 1);
        TreeSpec::node(l, r)
    }
}

// A small alphabet so repeated payloads (and hence repeated digests) occur.
fn gen_payload(rng: &mut ChaCha8Rng) -> Bytes {
    let len = rng.gen_range(0..=3);
    (0..len)
        .map(|_| if rng.gen_bool(0.5) { b'a' } else { b'b' })
        .collect()
}

fn gen_op(rng: &mut ChaCha8Rng, tree: &TreeSpec, mix_opt: bool) -> OpSpec {
    let path = gen_path(rng, tree);
    match rng.gen_range(0..4) {
        0 => OpSpec::Update(path, gen_payload(rng)),
        1 if mix_opt => OpSpec::RetrieveOpt(path),
        _ => OpSpec::Retrieve(path),
    }
}

fn gen_path(rng: &mut ChaCha8Rng, tree: &TreeSpec) -> Path {
    if rng.gen_bool(0.5) {
        // A path that actually leads to a leaf, occasionally perturbed so
        // overruns and short stops stay covered.
        let mut path = Vec::new();
        let mut cur = tree;
        while let TreeSpec::Node(l, r) = cur {
            if rng.gen_bool(0.5) {
                path.push(Dir::L);
                cur = l;
            } else {
                path.push(Dir::R);
                cur = r;
            }
        }
        match rng.gen_range(0..6) {
            0 => path.push(if rng.gen_bool(0.5) { Dir::L } else { Dir::R }),
            1 => {
                path.pop();
            }
            _ => {}
        }
        path
    } else {
        let len = rng.gen_range(0..=7);
        (0..len)
            .map(|_| if rng.gen_bool(0.5) { Dir::L } else { Dir::R })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Mutations

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutationKind {
    FlipByte,
    DropItem,
    DupItem,
    SwapItems,
    SpliceItem,
    Truncate,
    AppendRandom,
}

pub const ALL_MUTATIONS: [MutationKind; 7] = [
    MutationKind::FlipByte,
    MutationKind::DropItem,
    MutationKind::DupItem,
    MutationKind::SwapItems,
    MutationKind::SpliceItem,
    MutationKind::Truncate,
    MutationKind::AppendRandom,
];

/// Applies one mutation in place and returns a printable trace entry.
/// A mutation whose preconditions do not hold (such as flipping a byte of an
/// empty stream) leaves the stream unchanged and reports `identity`.
pub fn apply_mutation(
    rng: &mut ChaCha8Rng,
    kind: MutationKind,
    proof: &mut ProofStream,
    donor: &ProofStream,
) -> String {
    match kind {
        MutationKind::FlipByte => {
            let candidates: Vec<usize> = (0..proof.len())
                .filter(|&i| !proof[i].is_empty())
                .collect();
            if candidates.is_empty() {
                return "flip:identity".to_owned();
            }
            let item = candidates[rng.gen_range(0..candidates.len())];
            let byte = rng.gen_range(0..proof[item].len());
            let mask = rng.gen_range(1..=255u8);
            proof[item][byte] ^= mask;
            format!("flip(item={item},byte={byte},xor={mask:02x})")
        }
        MutationKind::DropItem => {
            if proof.is_empty() {
                return "drop:identity".to_owned();
            }
            let i = rng.gen_range(0..proof.len());
            proof.remove(i);
            format!("drop({i})")
        }
        MutationKind::DupItem => {
            if proof.is_empty() {
                return "dup:identity".to_owned();
            }
            let i = rng.gen_range(0..proof.len());
            let copy = proof[i].clone();
            proof.insert(i + 1, copy);
            format!("dup({i})")
        }
        MutationKind::SwapItems => {
            if proof.len() < 2 {
                return "swap:identity".to_owned();
            }
            let i = rng.gen_range(0..proof.len());
            let mut j = rng.gen_range(0..proof.len() - 1);
            if j >= i {
                j += 1;
            }
            proof.swap(i, j);
            format!("swap({i},{j})")
        }
        MutationKind::SpliceItem => {
            if proof.is_empty() || donor.is_empty() {
                return "splice:identity".to_owned();
            }
            let i = rng.gen_range(0..proof.len());
            let j = rng.gen_range(0..donor.len());
            proof[i] = donor[j].clone();
            format!("splice(into={i},from={j})")
        }
        MutationKind::Truncate => {
            if proof.is_empty() {
                return "truncate:identity".to_owned();
            }
            let keep = rng.gen_range(0..proof.len());
            proof.truncate(keep);
            format!("truncate(keep={keep})")
        }
        MutationKind::AppendRandom => {
            let len = rng.gen_range(0..=32);
            let item: Bytes = (0..len).map(|_| rng.gen()).collect();
            proof.push(item);
            format!("append(len={len})")
        }
    }
}

// ---------------------------------------------------------------------------
// Trials

#[derive(Debug, Clone)]
pub struct TrialReport {
    pub trial: u64,
    pub kind: &'static str,
    pub pair: VariantPair,
    pub mutations: Vec<String>,
    pub accepted: bool,
    pub verifier_obs: Option<Obs>,
    pub ideal_obs: Obs,
    /// The verifier accepted with a value different from the ideal run's.
    pub violation: bool,
    /// The run's hash log contains two distinct preimages with equal digests.
    pub collision_detected: bool,
    pub leftover: usize,
}

impl TrialReport {
    /// Stable one-trial-per-line form.
    pub fn line(&self) -> String {
        format!(
            "trial={} kind={} prover={} verifier={} mutations=[{}] accepted={} violation={} collision={} leftover={}",
            self.trial,
            self.kind,
            self.pair.prover.name(),
            self.pair.verifier.name(),
            self.mutations.join("|"),
            self.accepted,
            self.violation,
            self.collision_detected,
            self.leftover,
        )
    }
}

/// Runs prover, verifier-on-the-prover's-proof, and ideal, and checks the
/// three-way agreement. The hash log spans the prover and verifier runs.
pub fn correctness_trial(
    trial: u64,
    prog: &ProgramSpec,
    pair: VariantPair,
    family: &HashFamily,
) -> TrialReport {
    let log = SharedHashLog::default();
    let core = KitCore::with_log(family.clone(), log.clone());
    let (proof, prover_obs) = run_prover(pair.prover, core.clone(), prog);
    let verdict = run_verifier(pair.verifier, core, prog, proof);
    let ideal_obs = run_ideal(prog);
    let accepted = verdict.result.is_some();
    let violation = verdict.result.as_ref() != Some(&prover_obs) || ideal_obs != prover_obs;
    let collision_detected = !family.collision_free(&log.borrow());
    TrialReport {
        trial,
        kind: "correctness",
        pair,
        mutations: Vec::new(),
        accepted,
        verifier_obs: verdict.result,
        ideal_obs,
        violation,
        collision_detected,
        leftover: verdict.leftover,
    }
}

/// Produces an honest proof, applies `n_mutations` seeded mutations, and runs
/// the verifier on the result. A violation is an accepted proof whose value
/// differs from the ideal run's; the hash log covers the verifier's
/// execution, including recomputing the root.
pub fn security_trial(
    trial: u64,
    prog: &ProgramSpec,
    pair: VariantPair,
    family: &HashFamily,
    rng: &mut ChaCha8Rng,
    n_mutations: usize,
) -> TrialReport {
    let (mut proof, _) = run_prover(pair.prover, KitCore::new(family.clone()), prog);
    // Donor items come from a second program's honest proof.
    let donor_prog = gen_program(rng, false);
    let (donor, _) = run_prover(pair.prover, KitCore::new(family.clone()), &donor_prog);

    let mut mutations = Vec::new();
    for _ in 0..n_mutations {
        let kind = ALL_MUTATIONS[rng.gen_range(0..ALL_MUTATIONS.len())];
        mutations.push(apply_mutation(rng, kind, &mut proof, &donor));
    }

    let log = SharedHashLog::default();
    let core = KitCore::with_log(family.clone(), log.clone());
    let verdict = run_verifier(pair.verifier, core, prog, proof);
    let ideal_obs = run_ideal(prog);
    let accepted = verdict.result.is_some();
    let violation = match &verdict.result {
        Some(obs) => *obs != ideal_obs,
        None => false,
    };
    let collision_detected = !family.collision_free(&log.borrow());
    TrialReport {
        trial,
        kind: "security",
        pair,
        mutations,
        accepted,
        verifier_obs: verdict.result,
        ideal_obs,
        violation,
        collision_detected,
        leftover: verdict.leftover,
    }
}

/// Constructs an accepted forgery under a weak family: two leaf payloads
/// whose node encodings collide make the verifier accept a proof for the
/// wrong value. The violation must be flagged by the collision check; this is
/// the escape hatch that keeps the security property honest.
pub fn forgery_trial(trial: u64, bits: u32, budget: u64) -> Option<TrialReport> {
    let family = HashFamily::weak(bits);
    let (s1, s2) = find_leaf_collision(&family, budget)?;

    let prog = ProgramSpec {
        tree: TreeSpec::Leaf(s1),
        ops: vec![OpSpec::Retrieve(vec![])],
    };
    let forged = vec![leaf_encoding(&s2)];

    let log = SharedHashLog::default();
    let core = KitCore::with_log(family.clone(), log.clone());
    let pair = VariantPair {
        prover: ProverVariant::Base,
        verifier: VerifierVariant::Base,
    };
    let verdict = run_verifier(pair.verifier, core, &prog, forged);
    let ideal_obs = run_ideal(&prog);
    let accepted = verdict.result.is_some();
    let violation = match &verdict.result {
        Some(obs) => *obs != ideal_obs,
        None => false,
    };
    let collision_detected = !family.collision_free(&log.borrow());
    Some(TrialReport {
        trial,
        kind: "forgery",
        pair,
        mutations: vec!["forged-leaf-collision".to_owned()],
        accepted,
        verifier_obs: verdict.result,
        ideal_obs,
        violation,
        collision_detected,
        leftover: verdict.leftover,
    })
}

fn leaf_encoding(payload: &[u8]) -> Bytes {
    crate::codec::serialize(
        &merkle::tree_evidence(),
        &merkle::leaf_value::<crate::codec::DigestAuth>(payload.to_vec()),
    )
    .expect("leaf inhabits tree evidence")
}

/// Birthday search over leaf payloads for two whose leaf-node encodings
/// collide under `family`.
pub fn find_leaf_collision(family: &HashFamily, budget: u64) -> Option<(Bytes, Bytes)> {
    let mut seen: std::collections::HashMap<crate::hash::Digest, Bytes> =
        std::collections::HashMap::new();
    for i in 0..budget {
        let payload = format!("f{i}").into_bytes();
        let d = family.digest(&leaf_encoding(&payload), None);
        if let Some(prev) = seen.get(&d) {
            if prev != &payload {
                return Some((prev.clone(), payload));
            }
        } else {
            seen.insert(d, payload);
        }
    }
    None
}

/// Derives the per-trial seed from a master seed; trials are independent and
/// reproducible from `(seed, index)` alone.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    master
        .wrapping_add(index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .rotate_left(17)
}

pub fn trial_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(master, index))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_program_is_seed_deterministic() {
        let a = gen_program(&mut trial_rng(7, 0), true);
        let b = gen_program(&mut trial_rng(7, 0), true);
        assert_eq!(a, b);
        let c = gen_program(&mut trial_rng(7, 1), true);
        assert_ne!(a, c, "different seeds should differ in general");
    }

    #[test]
    fn sample_program_passes_correctness_trial() {
        let report = correctness_trial(
            0,
            &sample_program(),
            VariantPair {
                prover: ProverVariant::Base,
                verifier: VerifierVariant::Base,
            },
            &HashFamily::strong(),
        );
        assert!(report.accepted);
        assert!(!report.violation);
        assert!(!report.collision_detected);
        assert_eq!(report.verifier_obs.unwrap(), vec![Some(b"s5".to_vec())]);
    }

    #[test]
    fn correctness_trials_hold_across_compatible_pairs() {
        let family = HashFamily::strong();
        for (i, pair) in compatible_pairs().into_iter().enumerate() {
            for t in 0..25u64 {
                let mut rng = trial_rng(42, t);
                let prog = gen_program(&mut rng, true);
                let report = correctness_trial(t, &prog, pair, &family);
                assert!(
                    !report.violation,
                    "pair #{i} {:?} trial {t}: {}",
                    pair,
                    report.line()
                );
            }
        }
    }

    #[test]
    fn dropping_an_item_from_a_nonempty_honest_proof_rejects() {
        let family = HashFamily::strong();
        let pair = VariantPair {
            prover: ProverVariant::Base,
            verifier: VerifierVariant::Base,
        };
        let prog = sample_program();
        let (mut proof, _) = run_prover(pair.prover, KitCore::new(family.clone()), &prog);
        assert!(!proof.is_empty());
        proof.remove(0);
        let verdict = run_verifier(pair.verifier, KitCore::new(family.clone()), &prog, proof);
        assert_eq!(verdict.result, None);
    }

    #[test]
    fn security_trials_do_not_violate_under_strong_family() {
        let family = HashFamily::strong();
        let pairs = compatible_pairs();
        for t in 0..100u64 {
            let mut rng = trial_rng(9, t);
            let prog = gen_program(&mut rng, true);
            let pair = pairs[(t as usize) % pairs.len()];
            let report = security_trial(t, &prog, pair, &family, &mut rng, 2);
            assert!(!report.violation, "{}", report.line());
        }
    }

    #[test]
    fn security_trials_are_seed_deterministic() {
        let family = HashFamily::strong();
        let pair = VariantPair {
            prover: ProverVariant::Base,
            verifier: VerifierVariant::Base,
        };
        let mk = || {
            let mut rng = trial_rng(11, 3);
            let prog = gen_program(&mut rng, true);
            security_trial(3, &prog, pair, &family, &mut rng, 2).line()
        };
        assert_eq!(mk(), mk());
    }

    #[test]
    fn security_trial_without_mutations_reduces_to_correctness() {
        let family = HashFamily::strong();
        let pair = VariantPair {
            prover: ProverVariant::Base,
            verifier: VerifierVariant::Base,
        };
        let mut rng = trial_rng(21, 0);
        let prog = gen_program(&mut rng, true);
        let report = security_trial(0, &prog, pair, &family, &mut rng, 0);
        assert!(report.accepted);
        assert!(!report.violation);
        assert_eq!(report.verifier_obs.unwrap(), report.ideal_obs);
    }

    #[test]
    fn forgery_trial_accepts_wrong_value_and_flags_collision() {
        let report = forgery_trial(0, 8, 100_000).expect("8-bit collisions are easy");
        assert!(report.accepted);
        assert!(report.violation);
        assert!(report.collision_detected);
    }

    #[test]
    fn cache_proof_shrinks_on_repeated_access() {
        // Retrieving the same path twice: the second pass adds nothing under
        // the caching prover.
        let prog = ProgramSpec {
            tree: sample_program().tree,
            ops: vec![
                OpSpec::Retrieve(vec![Dir::R, Dir::L]),
                OpSpec::Retrieve(vec![Dir::R, Dir::L]),
            ],
        };
        let family = HashFamily::strong();
        let (base, _) = run_prover(ProverVariant::Base, KitCore::new(family.clone()), &prog);
        let (cached, _) = run_prover(ProverVariant::Cache, KitCore::new(family.clone()), &prog);
        assert_eq!(base.len(), 6);
        assert_eq!(cached.len(), 3);
        let verdict = run_verifier(
            VerifierVariant::Cache,
            KitCore::new(family),
            &prog,
            cached,
        );
        assert_eq!(
            verdict.result.unwrap(),
            vec![Some(b"s5".to_vec()), Some(b"s5".to_vec())]
        );
    }

    #[test]
    fn mutations_preserve_stream_wellformedness() {
        // Applying any mutation always yields a proof stream (possibly equal).
        let mut rng = trial_rng(5, 5);
        let donor = vec![b"d1".to_vec(), b"d2".to_vec()];
        for kind in ALL_MUTATIONS {
            let mut empty: ProofStream = vec![];
            let entry = apply_mutation(&mut rng, kind, &mut empty, &donor);
            assert!(!entry.is_empty());
            let mut small = vec![b"x".to_vec()];
            let _ = apply_mutation(&mut rng, kind, &mut small, &donor);
        }
    }
}
